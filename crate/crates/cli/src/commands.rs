use std::fmt::Write as _;
use std::io;

use bridgekit::census::{
    self as sc, elliptic_symmetry_group, genus2_heegaard_count, merge_partition, montesinos_merge_edges,
    montesinos_seifert, spheres_isotopic_l1,
};
use bridgekit::groups::sfs::{Fiber, SfsGroup, SfsWord};
use bridgekit::groups::solver::{brute_force_solutions, predicted_solutions, Solution, Window};
use bridgekit::linkdata::{
    branched_cover_invariants, emit_link, is_elliptic_montesinos, is_exceptional_nonsimple, parse_link,
    ArborescentLink, SeifertInvariants,
};
use bridgekit::rationals::{Slope, SlopeTuple};
use bridgekit::Error;
use clap::Subcommand;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

pub enum Report {
    Value { json: Value, text: String },
    Rows(Vec<SweepRow>),
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::OutsideCoverage(_)) { 2 } else { 1 };
        Failure { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type Outcome = Result<Report, Failure>;

fn report(json: Value, text: String) -> Outcome {
    Ok(Report::Value { json, text })
}

fn to_json(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("report types serialize to JSON")
}

fn joined<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn classes_text(classes: &[Vec<sc::SphereLabel>]) -> String {
    classes.iter().map(|c| format!("{{{}}}", joined(c, ","))).collect::<Vec<_>>().join(" ")
}

pub fn classify(text: &str) -> Outcome {
    let link = parse_link(text)?;
    let canonical = emit_link(&link);
    let cover = branched_cover_invariants(&link)?;
    let alpha0 = link.alpha0().map(|a| a.to_string());
    let elliptic = match link {
        ArborescentLink::Montesinos { .. } => Some(is_elliptic_montesinos(&link)?),
        _ => None,
    };
    let nonsimple = match link {
        ArborescentLink::L2 { .. } => is_exceptional_nonsimple(&link)?.map(|n| n.to_string()),
        _ => None,
    };

    let mut t = format!("{canonical}\nfamily: {}\n", link.family());
    if let Some(a) = &alpha0 {
        writeln!(t, "alpha0: {a}").unwrap();
    }
    if let Some(e) = elliptic {
        writeln!(t, "elliptic: {e}").unwrap();
    }
    if let Some(n) = &nonsimple {
        writeln!(t, "exceptional non-simple: n = {n}").unwrap();
    }
    writeln!(t, "branched cover: {}", joined(&cover.pieces, " + ")).unwrap();
    report(
        json!({
            "link": canonical,
            "family": link.family().to_string(),
            "alpha0": alpha0,
            "elliptic": elliptic,
            "exceptional_nonsimple": nonsimple,
            "cover": to_json(&cover),
        }),
        t,
    )
}

pub fn census(text: &str) -> Outcome {
    let link = parse_link(text)?;
    let c = sc::census(&link)?;
    let t = format!(
        "{}\ncase: {}\nspheres: {}\nclasses: {}\nmu: {}{}\n",
        c.link,
        c.case,
        joined(&c.spheres, " "),
        classes_text(&c.classes),
        c.mu,
        if c.exact { "" } else { " (upper bound)" }
    );
    report(to_json(&c), t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub link: String,
    pub case: String,
    pub mu: usize,
    pub exact: bool,
}

fn sweep_bound(arg: &str) -> Result<i64, Failure> {
    let bad = || invalid(format!("expected --sweep alpha_max=N with N >= 2, got {arg:?}"));
    let n: i64 = arg.trim().strip_prefix("alpha_max=").ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    if n < 2 {
        return Err(bad());
    }
    Ok(n)
}

/// All L1 links whose slopes are `β/α` with `2 <= α <= N` and `0 < |β| < α`,
/// each pair taken once up to reversal.
pub fn sweep(arg: &str) -> Outcome {
    let n = sweep_bound(arg)?;
    let mut slopes = Vec::new();
    for a in 2..=n {
        for b in (1 - a)..a {
            if b != 0 && b.gcd(&a) == 1 {
                slopes.push(Slope::of(b, a));
            }
        }
    }
    let mut pairs = Vec::new();
    for i in 0..slopes.len() {
        for j in i..slopes.len() {
            pairs.push(SlopeTuple::pair(slopes[i].clone(), slopes[j].clone()));
        }
    }
    let rows = (0..pairs.len() * pairs.len())
        .into_par_iter()
        .map(|k| {
            let link = ArborescentLink::l1(pairs[k / pairs.len()].clone(), pairs[k % pairs.len()].clone())?;
            let c = sc::census(&link)?;
            Ok(SweepRow { link: c.link, case: c.case, mu: c.mu, exact: c.exact })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Report::Rows(rows))
}

pub fn write_csv(out: &mut impl io::Write, rows: &[SweepRow]) -> io::Result<()> {
    let unwrap_io = |e: csv::Error| match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::other(format!("{other:?}")),
    };
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(unwrap_io)?;
    }
    w.flush()
}

fn sphere_index(s: &str) -> Result<u8, Failure> {
    let digits = s.trim().trim_start_matches(['S', 's']);
    match digits.parse::<u8>() {
        Ok(i @ 1..=4) => Ok(i),
        _ => Err(invalid(format!("expected a sphere S1..S4, got {s:?}"))),
    }
}

pub fn isotopic(text: &str, i: &str, j: &str) -> Outcome {
    let link = parse_link(text)?;
    let (i, j) = (sphere_index(i)?, sphere_index(j)?);
    let same = spheres_isotopic_l1(&link, i, j)?;
    report(
        json!({ "link": emit_link(&link), "i": format!("S{i}"), "j": format!("S{j}"), "isotopic": same }),
        format!("S{i} {} S{j}\n", if same { "~" } else { "!~" }),
    )
}

#[derive(clap::Args)]
pub struct GroupArg {
    /// Group `D(β₁/α₁,β₂/α₂)`.
    #[arg(long)]
    group: String,
}

impl GroupArg {
    fn parse(&self) -> Result<SfsGroup, Failure> {
        Ok(self.group.parse()?)
    }
}

#[derive(Subcommand)]
pub enum WordOp {
    /// Reduce a word such as `c1^2 c2^3` to normal form.
    Normalize {
        #[command(flatten)]
        group: GroupArg,
        word: String,
    },
    /// Product of two words.
    Multiply {
        #[command(flatten)]
        group: GroupArg,
        left: String,
        right: String,
    },
    /// Inverse of a word.
    Invert {
        #[command(flatten)]
        group: GroupArg,
        word: String,
    },
    /// Integer power of a word.
    Power {
        #[command(flatten)]
        group: GroupArg,
        word: String,
        #[arg(allow_hyphen_values = true)]
        exponent: i64,
    },
    /// Boundary coordinates `(p, q)` with `w = (c1 c2)^p h^q`, if any.
    Peripheral {
        #[command(flatten)]
        group: GroupArg,
        word: String,
    },
    /// The element `η = c^γ h^δ` of a fiber, 1 or 2.
    Eta {
        #[command(flatten)]
        group: GroupArg,
        fiber: u8,
    },
    /// Whether two words are conjugate in the quotient by `h`.
    Conjugate {
        #[command(flatten)]
        group: GroupArg,
        left: String,
        right: String,
    },
}

fn word_report(g: &SfsGroup, op: &str, w: &SfsWord) -> Outcome {
    report(json!({ "group": g.to_string(), "op": op, "word": w.to_string() }), format!("{w}\n"))
}

pub fn word(op: WordOp) -> Outcome {
    match op {
        WordOp::Normalize { group, word } => {
            let g = group.parse()?;
            word_report(&g, "normalize", &g.parse_word(&word)?)
        }
        WordOp::Multiply { group, left, right } => {
            let g = group.parse()?;
            let w = g.multiply(&g.parse_word(&left)?, &g.parse_word(&right)?)?;
            word_report(&g, "multiply", &w)
        }
        WordOp::Invert { group, word } => {
            let g = group.parse()?;
            word_report(&g, "invert", &g.invert(&g.parse_word(&word)?)?)
        }
        WordOp::Power { group, word, exponent } => {
            let g = group.parse()?;
            word_report(&g, "power", &g.pow(&g.parse_word(&word)?, exponent))
        }
        WordOp::Eta { group, fiber } => {
            let g = group.parse()?;
            let f = match fiber {
                1 => Fiber::One,
                2 => Fiber::Two,
                other => return Err(invalid(format!("fiber must be 1 or 2, got {other}"))),
            };
            word_report(&g, "eta", &g.eta(f))
        }
        WordOp::Peripheral { group, word } => {
            let g = group.parse()?;
            let w = g.parse_word(&word)?;
            let pq = g.peripheral_membership(&w);
            let text = match pq {
                Some((p, q)) => format!("(c1 c2)^{p} h^{q}\n"),
                None => "not peripheral\n".to_string(),
            };
            report(
                json!({
                    "group": g.to_string(),
                    "op": "peripheral",
                    "word": w.to_string(),
                    "peripheral": pq.map(|(p, q)| json!({ "p": p, "q": q })),
                }),
                text,
            )
        }
        WordOp::Conjugate { group, left, right } => {
            let g = group.parse()?;
            let (u, v) = (g.parse_word(&left)?, g.parse_word(&right)?);
            let same = g.quotient_conjugate(&u, &v);
            report(
                json!({
                    "group": g.to_string(),
                    "op": "conjugate",
                    "left": u.to_string(),
                    "right": v.to_string(),
                    "conjugate": same,
                }),
                format!("{}\n", if same { "conjugate" } else { "not conjugate" }),
            )
        }
    }
}

fn window_json(w: &Window) -> Value {
    let r = |r: &std::ops::RangeInclusive<i64>| json!([r.start(), r.end()]);
    json!({ "a": r(&w.a), "b": r(&w.b), "c": r(&w.c), "d": r(&w.d) })
}

pub fn solve_w(group: &str, window: Option<&str>, check_oracle: bool) -> Outcome {
    let g: SfsGroup = group.parse()?;
    let window: Window = match window {
        Some(w) => w.parse()?,
        None => Window::default(),
    };
    let predicted = predicted_solutions(&g, &window);
    let mut t = format!("{} solutions of w(a,b,c,d) in {g}\n", predicted.len());
    for s in &predicted {
        writeln!(t, "{s}").unwrap();
    }
    let mut value = json!({
        "group": g.to_string(),
        "window": window_json(&window),
        "solutions": to_json(&predicted),
        "count": predicted.len(),
    });
    if check_oracle {
        let found = brute_force_solutions(&g, &window);
        let missing: Vec<&Solution> = found.difference(&predicted).collect();
        let extra: Vec<&Solution> = predicted.difference(&found).collect();
        let agree = missing.is_empty() && extra.is_empty();
        value["oracle"] = json!({
            "agree": agree,
            "brute_force_count": found.len(),
            "missing": to_json(&missing),
            "unexpected": to_json(&extra),
        });
        if !agree {
            return Err(invalid(format!(
                "predicted != brute-force for {g}: {} missing (first {}), {} unexpected (first {})",
                missing.len(),
                missing.first().map_or("-".to_string(), |s| s.to_string()),
                extra.len(),
                extra.first().map_or("-".to_string(), |s| s.to_string()),
            )));
        }
        writeln!(t, "predicted == brute-force: OK ({} solutions)", found.len()).unwrap();
    }
    report(value, t)
}

fn seifert_input(text: &str) -> Result<SeifertInvariants, Failure> {
    if text.trim_start().starts_with('M') {
        Ok(montesinos_seifert(&parse_link(text)?)?)
    } else {
        Ok(text.parse()?)
    }
}

pub fn heegaard(text: &str) -> Outcome {
    let inv = seifert_input(text)?;
    let h = genus2_heegaard_count(&inv)?;
    let mut t = format!("{inv}\ngenus-2 Heegaard splittings: {}\n", h.count);
    for l in &h.labels {
        writeln!(t, "  {l}").unwrap();
    }
    if let Some(f) = h.family {
        writeln!(t, "exceptional family {f}").unwrap();
    }
    let mut value = to_json(&h);
    value["space"] = json!(inv.to_string());
    report(value, t)
}

pub fn symmetry(text: &str) -> Outcome {
    let link = parse_link(text)?;
    let s = elliptic_symmetry_group(&link)?;
    let mut t = format!("{} generated by {}", s.name, joined(&s.generators, ", "));
    if let Some(m) = s.m {
        write!(t, " (m = {m})").unwrap();
    }
    t.push('\n');
    let mut value = to_json(&s);
    value["link"] = json!(emit_link(&link));
    value["group"] = json!(s.name.to_string());
    report(value, t)
}

pub fn merge_graph(text: &str) -> Outcome {
    let link = parse_link(text)?;
    let edges = montesinos_merge_edges(&link)?;
    let classes = merge_partition(&edges);
    let mut t = String::new();
    for e in &edges {
        writeln!(t, "{} -- {} {}", e.a, e.b, e.reason).unwrap();
    }
    writeln!(t, "classes: {}", classes_text(&classes)).unwrap();
    let edges_json: Vec<Value> =
        edges.iter().map(|e| json!({ "a": e.a, "b": e.b, "reason": e.reason.to_string() })).collect();
    report(
        json!({
            "link": emit_link(&link),
            "edges": edges_json,
            "classes": to_json(&classes),
            "mu": classes.len(),
        }),
        t,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_error_kind() {
        assert_eq!(Failure::from(Error::OutsideCoverage("m = 3".into())).code, 2);
        assert_eq!(Failure::from(Error::DegenerateSlope).code, 1);
        assert_eq!(Failure::from(Error::NotApplicable("L2".into())).code, 1);
    }

    #[test]
    fn sweep_bound_parsing() {
        assert_eq!(sweep_bound("alpha_max=7").ok(), Some(7));
        assert!(sweep_bound("alpha_max=1").is_err());
        assert!(sweep_bound("beta_max=3").is_err());
        assert!(sweep_bound("alpha_max=x").is_err());
    }

    #[test]
    fn sphere_indices() {
        assert_eq!(sphere_index("S3").ok(), Some(3));
        assert_eq!(sphere_index("2").ok(), Some(2));
        assert!(sphere_index("S5").is_err());
        assert!(sphere_index("P1").is_err());
    }
}
