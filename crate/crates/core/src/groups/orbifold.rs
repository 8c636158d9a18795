//! The π-orbifold group of a three-tangle Montesinos link and the generator
//! images of its involution automorphism.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linkdata::ArborescentLink;

/// A word in named generators, serialized as `[["c1",2],["f",-1]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbstractWord(pub Vec<(String, i64)>);

impl AbstractWord {
    pub fn new() -> Self {
        AbstractWord(Vec::new())
    }

    pub fn gen(name: &str) -> Self {
        AbstractWord(vec![(name.to_string(), 1)])
    }

    /// Appends `name^e`, merging with the last syllable.
    pub fn push(&mut self, name: &str, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.0 == name {
                last.1 += e;
                if last.1 == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push((name.to_string(), e));
    }

    pub fn concat(&self, other: &AbstractWord) -> AbstractWord {
        let mut out = self.clone();
        for (g, e) in &other.0 {
            out.push(g, *e);
        }
        out
    }

    pub fn inverse(&self) -> AbstractWord {
        let mut out = AbstractWord::new();
        for (g, e) in self.0.iter().rev() {
            out.push(g, -e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> AbstractWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = AbstractWord::new();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Replaces every generator by its image.
    pub fn substitute(&self, images: &BTreeMap<String, AbstractWord>) -> AbstractWord {
        let mut out = AbstractWord::new();
        for (g, e) in &self.0 {
            let img = images.get(g).cloned().unwrap_or_else(|| AbstractWord::gen(g));
            out = out.concat(&img.pow(*e));
        }
        out
    }
}

impl fmt::Display for AbstractWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for AbstractWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut out = AbstractWord::new();
        let mut pos = 0;
        for tok in text.split_whitespace() {
            let at = text[pos..].find(tok).map_or(pos, |i| pos + i);
            pos = at + tok.len();
            if tok == "1" {
                continue;
            }
            let (name, e) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e = e
                        .parse::<i64>()
                        .map_err(|_| Error::Parse { pos: at + n.len() + 1, msg: format!("bad exponent in {tok:?}") })?;
                    (n, e)
                }
                None => (tok, 1),
            };
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric()) {
                return Err(Error::Parse { pos: at, msg: format!("bad generator {name:?}") });
            }
            out.push(name, e);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<AbstractWord>,
}

impl Presentation {
    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| abelianize(r, &self.generators)).collect()
    }
}

/// Exponent sums of `w` over `generators`.
pub fn abelianize(w: &AbstractWord, generators: &[String]) -> Vec<i64> {
    let mut v = vec![0; generators.len()];
    for (g, e) in &w.0 {
        if let Some(i) = generators.iter().position(|x| x == g) {
            v[i] += e;
        }
    }
    v
}

fn montesinos_parts(link: &ArborescentLink) -> Result<(i64, Vec<(i64, i64)>)> {
    let ArborescentLink::Montesinos { b, slopes } = link else {
        return Err(Error::NotApplicable(format!("{} is not a Montesinos link", link.family())));
    };
    if slopes.len() != 3 {
        return Err(Error::NotApplicable(format!("expected 3 tangles, got {}", slopes.len())));
    }
    let small =
        |x: &num_bigint::BigInt| x.to_i64().ok_or_else(|| Error::Validation(format!("{x} does not fit in 64 bits")));
    let b = small(b)?;
    let pairs = slopes.entries().iter().map(|s| Ok((small(s.den())?, small(s.num())?))).collect::<Result<Vec<_>>>()?;
    Ok((b, pairs))
}

/// Generators `c1..c4, f`; relators `cᵢ²`, `cᵢ f cᵢ⁻¹ f`,
/// `(cⱼcⱼ₊₁)^αⱼ f^βⱼ` and `c1 c4 f^b`, in that order.
pub fn orbifold_presentation(link: &ArborescentLink) -> Result<Presentation> {
    let (b, pairs) = montesinos_parts(link)?;
    let c: Vec<String> = (1..=4).map(|i| format!("c{i}")).collect();
    let mut generators = c.clone();
    generators.push("f".into());

    let mut relators = Vec::with_capacity(12);
    for ci in &c {
        relators.push(AbstractWord(vec![(ci.clone(), 2)]));
    }
    for ci in &c {
        let mut w = AbstractWord::gen(ci);
        w.push("f", 1);
        w.push(ci, -1);
        w.push("f", 1);
        relators.push(w);
    }
    for (j, &(alpha, beta)) in pairs.iter().enumerate() {
        let mut pair = AbstractWord::gen(&c[j]);
        pair.push(&c[j + 1], 1);
        let mut w = pair.pow(alpha);
        w.push("f", beta);
        relators.push(w);
    }
    let mut close = AbstractWord::gen(&c[0]);
    close.push(&c[3], 1);
    close.push("f", b);
    relators.push(close);

    Ok(Presentation { generators, relators })
}

/// Images `c1 ↦ c1 f`, `cⱼ ↦ (c1 f)(cⱼ f)(c1 f)⁻¹`, `f ↦ (c1 f) f (c1 f)⁻¹`.
/// Every relator image is checked to vanish in the abelianization.
pub fn rho_automorphism_images(link: &ArborescentLink) -> Result<BTreeMap<String, AbstractWord>> {
    let pres = orbifold_presentation(link)?;
    let mut c1f = AbstractWord::gen("c1");
    c1f.push("f", 1);
    let conj = |w: &AbstractWord| c1f.concat(w).concat(&c1f.inverse());

    let mut images = BTreeMap::new();
    images.insert("c1".to_string(), c1f.clone());
    for j in 2..=4 {
        let name = format!("c{j}");
        let mut cf = AbstractWord::gen(&name);
        cf.push("f", 1);
        images.insert(name, conj(&cf));
    }
    images.insert("f".to_string(), conj(&AbstractWord::gen("f")));

    let matrix = pres.relation_matrix();
    for r in &pres.relators {
        let v = abelianize(&r.substitute(&images), &pres.generators);
        if !in_row_span(&matrix, &v) {
            return Err(Error::PresentationMismatch(format!("image of relator {r} is {v:?}")));
        }
    }
    Ok(images)
}

/// Row echelon form over the integers by gcd row operations.
pub fn hermite_rows(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for col in 0..ncols {
        let (mut with, rest): (Vec<_>, Vec<_>) = m.into_iter().partition(|r| r[col] != 0);
        m = rest;
        while with.len() > 1 {
            with.sort_by_key(|r| r[col].abs());
            let pivot = with[0].clone();
            for r in with.iter_mut().skip(1) {
                let q = Integer::div_floor(&r[col], &pivot[col]);
                for (x, p) in r.iter_mut().zip(&pivot) {
                    *x -= q * p;
                }
            }
            let (nz, z): (Vec<_>, Vec<_>) = with.into_iter().partition(|r| r[col] != 0);
            with = nz;
            m.extend(z);
        }
        if let Some(mut p) = with.pop() {
            if p[col] < 0 {
                p.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(p);
        }
    }
    out
}

/// Whether `v` is an integer combination of `rows`.
pub fn in_row_span(rows: &[Vec<i64>], v: &[i64]) -> bool {
    let h = hermite_rows(rows);
    let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    for row in &h {
        let col = row.iter().position(|&x| x != 0).expect("echelon rows are nonzero");
        if v[col] % row[col] != 0 {
            return false;
        }
        let q = v[col] / row[col];
        for (x, r) in v.iter_mut().zip(row) {
            *x -= q * r;
        }
    }
    v.iter().all(|&x| x == 0)
}
