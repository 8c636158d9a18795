//! Counting 3-bridge spheres up to isotopy, genus-2 Heegaard surfaces of
//! small Seifert spaces, and symmetry groups of elliptic Montesinos links.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linkdata::{
    is_elliptic_montesinos, is_exceptional_nonsimple, normalize_seifert, same_seifert_space, ArborescentLink, Base,
    SeifertInvariants,
};
use crate::rationals::{matches_epsilon_pattern, matches_half_pattern, Slope, SlopeTuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SphereLabel {
    S1,
    S2,
    S3,
    S4,
    S0,
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
}

impl SphereLabel {
    pub const MONTESINOS: [SphereLabel; 6] =
        [SphereLabel::P1, SphereLabel::P2, SphereLabel::P3, SphereLabel::P4, SphereLabel::P5, SphereLabel::P6];

    /// `S1..S4` by index.
    pub fn l1(i: u8) -> Option<SphereLabel> {
        Some(match i {
            1 => SphereLabel::S1,
            2 => SphereLabel::S2,
            3 => SphereLabel::S3,
            4 => SphereLabel::S4,
            _ => return None,
        })
    }

    fn montesinos_index(self) -> Option<usize> {
        SphereLabel::MONTESINOS.iter().position(|&p| p == self)
    }
}

impl fmt::Display for SphereLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Pattern data of one L1 pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFeatures {
    pub epsilon: Option<(i8, i8)>,
    pub half: Option<BigInt>,
}

impl PairFeatures {
    pub fn of(pair: &SlopeTuple) -> Result<Self> {
        Ok(PairFeatures { epsilon: matches_epsilon_pattern(pair)?, half: matches_half_pattern(pair)? })
    }
}

/// Census cell of an L1 link, labelled `a-1` to `b-4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct L1Case {
    /// Condition (a): some pair is equivalent to `(ε/α, ε'/α')`.
    pub merged: bool,
    pub s3: bool,
    pub s4: bool,
}

impl L1Case {
    pub fn from_features(f1: &PairFeatures, f2: &PairFeatures) -> Self {
        L1Case { merged: f1.epsilon.is_some() || f2.epsilon.is_some(), s3: f1.half.is_some(), s4: f2.half.is_some() }
    }

    pub fn mu(self) -> usize {
        (if self.merged { 1 } else { 2 }) + usize::from(self.s3) + usize::from(self.s4)
    }

    pub fn label(self) -> &'static str {
        match (self.merged, self.s3, self.s4) {
            (true, true, false) => "a-1",
            (true, false, true) => "a-2",
            (true, true, true) => "a-3",
            (true, false, false) => "a-4",
            (false, true, false) => "b-1",
            (false, false, true) => "b-2",
            (false, true, true) => "b-3",
            (false, false, false) => "b-4",
        }
    }
}

fn l1_features(link: &ArborescentLink) -> Result<(PairFeatures, PairFeatures)> {
    let ArborescentLink::L1 { pair1, pair2 } = link else {
        return Err(Error::NotApplicable(format!("{} is not an L1 link", link.family())));
    };
    Ok((PairFeatures::of(pair1)?, PairFeatures::of(pair2)?))
}

pub fn l1_case(link: &ArborescentLink) -> Result<L1Case> {
    let (f1, f2) = l1_features(link)?;
    Ok(L1Case::from_features(&f1, &f2))
}

pub fn enumerate_spheres(link: &ArborescentLink) -> Result<Vec<SphereLabel>> {
    link.validate()?;
    Ok(match link {
        ArborescentLink::L1 { .. } => {
            let case = l1_case(link)?;
            let mut v = vec![SphereLabel::S1, SphereLabel::S2];
            if case.s3 {
                v.push(SphereLabel::S3);
            }
            if case.s4 {
                v.push(SphereLabel::S4);
            }
            v
        }
        ArborescentLink::L2 { .. } | ArborescentLink::L3 { .. } => vec![SphereLabel::S0],
        ArborescentLink::Montesinos { .. } => {
            if is_elliptic_montesinos(link)? {
                vec![SphereLabel::P1]
            } else {
                SphereLabel::MONTESINOS.to_vec()
            }
        }
    })
}

/// Whether `Sᵢ` and `Sⱼ` of an L1 link are isotopic.
pub fn spheres_isotopic_l1(link: &ArborescentLink, i: u8, j: u8) -> Result<bool> {
    let case = l1_case(link)?;
    let possessed = |k: u8| match k {
        1 | 2 => true,
        3 => case.s3,
        4 => case.s4,
        _ => false,
    };
    for k in [i, j] {
        if !possessed(k) {
            return Err(Error::SphereNotPossessed(format!("S{k} for {link}")));
        }
    }
    Ok(i == j || (i.min(j) == 1 && i.max(j) == 2 && case.merged))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereCensus {
    pub link: String,
    pub family: String,
    pub case: String,
    pub spheres: Vec<SphereLabel>,
    pub classes: Vec<Vec<SphereLabel>>,
    pub mu: usize,
    pub exact: bool,
}

pub fn census(link: &ArborescentLink) -> Result<SphereCensus> {
    link.validate()?;
    let spheres = enumerate_spheres(link)?;
    let (case, classes, exact) = match link {
        ArborescentLink::L1 { .. } => {
            let c = l1_case(link)?;
            let mut classes = if c.merged {
                vec![vec![SphereLabel::S1, SphereLabel::S2]]
            } else {
                vec![vec![SphereLabel::S1], vec![SphereLabel::S2]]
            };
            if c.s3 {
                classes.push(vec![SphereLabel::S3]);
            }
            if c.s4 {
                classes.push(vec![SphereLabel::S4]);
            }
            (c.label().to_string(), classes, true)
        }
        ArborescentLink::L2 { .. } => {
            let case = match is_exceptional_nonsimple(link)? {
                Some(n) => format!("exceptional(n={n})"),
                None => "unique".to_string(),
            };
            (case, vec![spheres.clone()], true)
        }
        ArborescentLink::L3 { .. } => ("unique".to_string(), vec![spheres.clone()], true),
        ArborescentLink::Montesinos { .. } => {
            if is_elliptic_montesinos(link)? {
                ("elliptic".to_string(), vec![spheres.clone()], true)
            } else {
                let edges = montesinos_merge_edges(link)?;
                ("nonelliptic".to_string(), merge_partition(&edges), false)
            }
        }
    };
    Ok(SphereCensus {
        link: link.to_string(),
        family: link.family().to_string(),
        case,
        spheres,
        mu: classes.len(),
        classes,
        exact,
    })
}

/// Why two Montesinos spheres are merged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MergeReason {
    /// `βₖ ≡ ±1 (mod αₖ)`.
    OddUnit(u8),
    /// `αₖ = 2`.
    Half(u8),
    /// Every `βₖ ≡ ±1` and `b = Σβₖ/αₖ − Σεₖ/αₖ` for some signs.
    AllSix,
}

impl fmt::Display for MergeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MergeReason::OddUnit(k) => write!(f, "(1-{k})"),
            MergeReason::Half(k) => write!(f, "(2-{k})"),
            MergeReason::AllSix => f.write_str("all"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeEdge {
    pub a: SphereLabel,
    pub b: SphereLabel,
    pub reason: MergeReason,
}

fn unit_residue(s: &Slope) -> bool {
    let r = s.num().mod_floor(s.den());
    r.is_one() || r == s.den() - 1u32
}

/// Edges between `P1..P6` that are known to be isotopies. For the all-six
/// condition `b` is read exactly as stored.
pub fn montesinos_merge_edges(link: &ArborescentLink) -> Result<Vec<MergeEdge>> {
    let ArborescentLink::Montesinos { b, slopes } = link else {
        return Err(Error::NotApplicable(format!("{} is not a Montesinos link", link.family())));
    };
    if is_elliptic_montesinos(link)? {
        return Err(Error::NotApplicable(format!("{link} is elliptic")));
    }
    let s = slopes.entries();
    let one = |k: usize| unit_residue(&s[k - 1]);
    let two = |k: usize| s[k - 1].den() == &BigInt::from(2);

    use SphereLabel::*;
    let mut edges = Vec::new();
    let mut add = |a, b, conds: &[MergeReason]| {
        for &reason in conds {
            let holds = match reason {
                MergeReason::OddUnit(k) => one(k as usize),
                MergeReason::Half(k) => two(k as usize),
                MergeReason::AllSix => false,
            };
            if holds {
                edges.push(MergeEdge { a, b, reason });
                return;
            }
        }
    };
    use MergeReason::{Half, OddUnit};
    add(P1, P2, &[Half(1), Half(2)]);
    add(P1, P4, &[OddUnit(2)]);
    add(P1, P6, &[OddUnit(1)]);
    add(P2, P3, &[OddUnit(2)]);
    add(P2, P5, &[OddUnit(1)]);
    add(P3, P4, &[Half(2), Half(3)]);
    add(P3, P6, &[OddUnit(3)]);
    add(P4, P5, &[OddUnit(3)]);
    add(P5, P6, &[Half(1), Half(3)]);

    if (1..=3).all(one) && all_six_identity(b, slopes) {
        for w in SphereLabel::MONTESINOS.windows(2) {
            edges.push(MergeEdge { a: w[0], b: w[1], reason: MergeReason::AllSix });
        }
    }
    Ok(edges)
}

fn all_six_identity(b: &BigInt, slopes: &SlopeTuple) -> bool {
    let target = BigRational::from_integer(b.clone());
    let sum = slopes.sum();
    (0..1u32 << slopes.len()).any(|mask| {
        let signed: BigRational = slopes
            .entries()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let e = if mask >> i & 1 == 1 { -BigInt::one() } else { BigInt::one() };
                BigRational::new(e, s.den().clone())
            })
            .sum();
        &sum - signed == target
    })
}

/// Connected components of `P1..P6` under `edges`, in label order.
pub fn merge_partition(edges: &[MergeEdge]) -> Vec<Vec<SphereLabel>> {
    let mut parent: Vec<usize> = (0..6).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let next = p[x];
            p[x] = r;
            x = next;
        }
        r
    }
    for e in edges {
        let (Some(a), Some(b)) = (e.a.montesinos_index(), e.b.montesinos_index()) else {
            continue;
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut blocks: Vec<Vec<SphereLabel>> = Vec::new();
    let mut root_of_block = Vec::new();
    for i in 0..6 {
        let r = find(&mut parent, i);
        match root_of_block.iter().position(|&x| x == r) {
            Some(k) => blocks[k].push(SphereLabel::MONTESINOS[i]),
            None => {
                root_of_block.push(r);
                blocks.push(vec![SphereLabel::MONTESINOS[i]]);
            }
        }
    }
    blocks
}

/// The Seifert space `S²(b; β₁/α₁, β₂/α₂, β₃/α₃)` written from a Montesinos
/// link with its stored `b`.
pub fn montesinos_seifert(link: &ArborescentLink) -> Result<SeifertInvariants> {
    let ArborescentLink::Montesinos { b, slopes } = link else {
        return Err(Error::NotApplicable(format!("{} is not a Montesinos link", link.family())));
    };
    Ok(SeifertInvariants::sphere(b.clone(), slopes.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeegaardCount {
    pub count: usize,
    pub labels: Vec<String>,
    pub exceptional: bool,
    /// Which exceptional family matched, numbered 1 to 3.
    pub family: Option<u8>,
}

fn small(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::Validation(format!("{v} does not fit in 64 bits")))
}

/// Inverse of `x` modulo `m`, in `0..m`.
pub fn mod_inverse(x: i64, m: i64) -> Option<i64> {
    let g = x.mod_floor(&m).extended_gcd(&m);
    (g.gcd == 1).then(|| g.x.mod_floor(&m))
}

fn param_ok(family: u8, p: i64) -> bool {
    match family {
        1 => p >= 7 && p % 2 == 1 && p % 3 != 0,
        2 => p >= 7 && p % 3 != 0,
        3 => p >= 5 && p % 2 == 1,
        _ => false,
    }
}

/// A member of one of the three exceptional families, or `None` if the
/// parameter is out of range or the Euler number is not realizable with an
/// integral `b`.
///
/// 1. `e = -1/(6a)`, slopes `1/2, (-a)⁻¹/3, 6⁻¹/a`
/// 2. `e = -1/(3a)`, slopes `(-1)⁻¹/3, (-a)⁻¹/3, 3⁻¹/a`
/// 3. `e = -1/(4b)`, slopes `1/2, (-b)⁻¹/4, 4⁻¹/b`
///
/// Inverses are taken modulo the denominator.
pub fn exceptional_member(family: u8, p: i64) -> Option<SeifertInvariants> {
    if !param_ok(family, p) {
        return None;
    }
    let (e, fibers): (BigRational, [(i64, i64); 3]) = match family {
        1 => {
            (BigRational::new((-1).into(), (6 * p).into()), [(1, 2), (mod_inverse(-p, 3)?, 3), (mod_inverse(6, p)?, p)])
        }
        2 => (
            BigRational::new((-1).into(), (3 * p).into()),
            [(mod_inverse(-1, 3)?, 3), (mod_inverse(-p, 3)?, 3), (mod_inverse(3, p)?, p)],
        ),
        _ => {
            (BigRational::new((-1).into(), (4 * p).into()), [(1, 2), (mod_inverse(-p, 4)?, 4), (mod_inverse(4, p)?, p)])
        }
    };
    let slopes = SlopeTuple::new(fibers.iter().map(|&(b, a)| Slope::of(b, a)).collect());
    let b = -e - slopes.sum();
    b.is_integer().then(|| SeifertInvariants::sphere(b.to_integer(), slopes))
}

/// The exceptional family `inv` belongs to, orientation ignored.
pub fn exceptional_family(inv: &SeifertInvariants) -> Result<Option<u8>> {
    let n = normalize_seifert(inv)?;
    let mut dens: Vec<i64> = n.slopes.entries().iter().map(|s| small(s.den())).collect::<Result<_>>()?;
    dens.sort_unstable();
    let candidates: &[(u8, i64)] = match dens[..] {
        [2, 3, a] => &[(1, a)],
        [3, 3, a] => &[(2, a)],
        [2, 4, b] => &[(3, b)],
        _ => &[],
    };
    for &(family, p) in candidates {
        if let Some(member) = exceptional_member(family, p) {
            if same_seifert_space(inv, &member, false)? {
                return Ok(Some(family));
            }
        }
    }
    Ok(None)
}

/// Genus-2 Heegaard surfaces `F(i,j)` of a Seifert space over the sphere
/// with three exceptional fibers, up to isotopy.
pub fn genus2_heegaard_count(inv: &SeifertInvariants) -> Result<HeegaardCount> {
    if inv.base != Base::Sphere {
        return Err(Error::BaseMismatch);
    }
    if inv.slopes.len() != 3 {
        return Err(Error::WrongFiberCount(inv.slopes.len()));
    }
    let n = normalize_seifert(inv)?;
    let units: Vec<usize> = (0..3).filter(|&i| unit_residue(&n.slopes.entries()[i])).map(|i| i + 1).collect();
    let f = |i: usize, j: usize| format!("F({i},{j})");
    Ok(match units.len() {
        0 => HeegaardCount { count: 3, labels: vec![f(1, 2), f(2, 3), f(3, 1)], exceptional: false, family: None },
        1 => {
            let k = units[0];
            let (i, j) = (k % 3 + 1, (k + 1) % 3 + 1);
            let (lo, hi) = (i.min(j), i.max(j));
            HeegaardCount {
                count: 2,
                labels: vec![f(lo, hi), format!("{}={}", f(j, k), f(k, i))],
                exceptional: false,
                family: None,
            }
        }
        _ => {
            let family = exceptional_family(inv)?;
            let mut labels = vec![format!("{}={}={}", f(1, 2), f(2, 3), f(3, 1))];
            if family.is_some() {
                labels.push("F*".to_string());
            }
            HeegaardCount { count: labels.len(), labels, exceptional: family.is_some(), family }
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymmetryName {
    Z2,
    Z2xZ2,
    Z2xD3,
}

impl fmt::Display for SymmetryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryName::Z2 => "Z2",
            SymmetryName::Z2xZ2 => "Z2⊕Z2",
            SymmetryName::Z2xD3 => "Z2⊕D3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryGroup {
    pub name: SymmetryName,
    pub generators: Vec<String>,
    /// The integer `m` the case split is decided by, when one is used.
    pub m: Option<i64>,
}

fn sym(name: SymmetryName, gens: &[&str], m: Option<i64>) -> SymmetryGroup {
    SymmetryGroup { name, generators: gens.iter().map(|g| g.to_string()).collect(), m }
}

/// The symmetry group of an elliptic Montesinos link. The splitting integer
/// is `m = α(Σβᵢ/αᵢ − b)` for denominators `(2,2,α)` and `m = 6(Σβᵢ/αᵢ − b)`
/// for `(2,3,3)`, with `b` as stored.
pub fn elliptic_symmetry_group(link: &ArborescentLink) -> Result<SymmetryGroup> {
    let ArborescentLink::Montesinos { b, slopes } = link else {
        return Err(Error::NotApplicable(format!("{} is not a Montesinos link", link.family())));
    };
    if !is_elliptic_montesinos(link)? {
        return Err(Error::NotApplicable(format!("{link} is not elliptic")));
    }
    let mut dens: Vec<i64> = slopes.entries().iter().map(|s| small(s.den())).collect::<Result<_>>()?;
    dens.sort_unstable();
    let excess = slopes.sum() - BigRational::from_integer(b.clone());
    let scaled = |k: i64| -> Result<i64> {
        let v = excess.clone() * BigRational::from_integer(k.into());
        if !v.is_integer() {
            return Err(Error::Validation(format!("{link}: m is not integral")));
        }
        small(&v.to_integer())
    };
    use SymmetryName::*;
    match dens[..] {
        [2, 2, alpha] => {
            let m = scaled(alpha)?;
            if m.gcd(&(2 * alpha)) == 1 {
                Ok(if alpha == 2 {
                    sym(Z2xD3, &["ψ1", "ψ3"], Some(m))
                } else if m != 1 || alpha % 2 == 0 {
                    sym(Z2xZ2, &["ψ1", "ψ2"], Some(m))
                } else {
                    sym(Z2, &["ψ1"], Some(m))
                })
            } else if m % 2 == 0 && m.gcd(&alpha) == 1 {
                Ok(sym(Z2xZ2, &["ψ1", "ψ2"], Some(m)))
            } else {
                Err(Error::OutsideCoverage(format!("{link}: m = {m}, α = {alpha}")))
            }
        }
        [2, 3, 3] => {
            let m = scaled(6)?;
            Ok(if m.gcd(&12) == 1 && m != 1 {
                sym(Z2xZ2, &["ψ1", "ψ4"], Some(m))
            } else {
                sym(Z2, &["ψ1"], Some(m))
            })
        }
        _ => Ok(sym(Z2, &["ψ1"], None)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn link(s: &str) -> ArborescentLink {
        s.parse().unwrap()
    }

    #[test]
    fn sphere_lists() {
        use SphereLabel::*;
        assert_eq!(enumerate_spheres(&link("L1((1/2,-2/5),(1/3,1/4))")).unwrap(), [S1, S2, S3]);
        assert_eq!(enumerate_spheres(&link("L2((1/3,1/4),(1/5),(1/3,1/4))")).unwrap(), [S0]);
        assert_eq!(enumerate_spheres(&link("M(0;1/2,1/2,2/5)")).unwrap(), [P1]);
        assert_eq!(enumerate_spheres(&link("M(0;2/5,1/3,2/7)")).unwrap().len(), 6);
    }

    #[test]
    fn isotopy_decisions() {
        let l = link("L1((1/3,1/4),(2/5,2/5))");
        assert!(spheres_isotopic_l1(&l, 1, 2).unwrap());
        assert!(spheres_isotopic_l1(&l, 2, 1).unwrap());
        assert!(spheres_isotopic_l1(&l, 2, 2).unwrap());
        assert!(spheres_isotopic_l1(&l, 1, 3).is_err());
        let l = link("L1((2/5,2/5),(2/5,2/5))");
        assert!(!spheres_isotopic_l1(&l, 1, 2).unwrap());
        let l = link("L1((1/2,-2/5),(1/3,1/4))");
        assert!(!spheres_isotopic_l1(&l, 1, 3).unwrap());
        assert!(spheres_isotopic_l1(&link("M(0;2/5,1/3,2/7)"), 1, 2).is_err());
    }

    #[test]
    fn census_examples() {
        let c = census(&link("L1((1/2,-2/5),(1/2,-2/5))")).unwrap();
        assert_eq!((c.case.as_str(), c.mu, c.exact), ("b-3", 4, true));
        let c = census(&link("L1((1/3,1/4),(1/3,1/4))")).unwrap();
        assert_eq!((c.case.as_str(), c.mu), ("a-4", 1));
        let c = census(&link("L1((2/5,2/5),(2/5,2/5))")).unwrap();
        assert_eq!((c.case.as_str(), c.mu), ("b-4", 2));
        let c = census(&link("L2((-1/2,1/2),(1/3),(-1/2,1/2))")).unwrap();
        assert_eq!((c.case.as_str(), c.mu), ("exceptional(n=3)", 1));
        let c = census(&link("M(0;1/2,1/2,2/5)")).unwrap();
        assert_eq!((c.mu, c.exact), (1, true));
        let c = census(&link("M(0;2/5,1/3,2/7)")).unwrap();
        assert!(!c.exact);
        assert_eq!(c.mu, 4);
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["classes"][0], serde_json::json!(["P1", "P4"]));
    }

    #[test]
    fn merge_graph() {
        use SphereLabel::*;
        let edges = montesinos_merge_edges(&link("M(0;2/5,1/3,2/7)")).unwrap();
        let pairs: Vec<_> = edges.iter().map(|e| (e.a, e.b)).collect();
        assert_eq!(pairs, [(P1, P4), (P2, P3)]);
        assert_eq!(merge_partition(&edges), vec![vec![P1, P4], vec![P2, P3], vec![P5], vec![P6]]);

        let edges = montesinos_merge_edges(&link("M(0;1/2,2/5,2/5)")).unwrap();
        assert!(edges.iter().any(|e| (e.a, e.b, e.reason) == (P1, P2, MergeReason::Half(1))));

        // (2-1) and (1-2) chain P1, P2, P3
        let edges = montesinos_merge_edges(&link("M(0;1/2,1/5,2/7)")).unwrap();
        let blocks = merge_partition(&edges);
        assert!(blocks.iter().any(|b| b.contains(&P1) && b.contains(&P2) && b.contains(&P3)));

        assert!(montesinos_merge_edges(&link("M(0;1/2,1/2,2/5)")).is_err());
    }

    #[test]
    fn all_six_merge() {
        let all = |t: &str| montesinos_merge_edges(&link(t)).unwrap().iter().any(|e| e.reason == MergeReason::AllSix);
        assert!(all("M(0;1/5,1/7,1/9)"));
        assert!(!all("M(5;1/5,1/7,1/9)"));
        // 4/5 − (−1/5) = 1
        assert!(all("M(1;4/5,1/7,1/9)"));
        assert!(!all("M(0;2/5,1/7,1/9)"));
        // the (1-k) edges alone already form a six-cycle
        assert_eq!(census(&link("M(5;1/5,1/7,1/9)")).unwrap().mu, 1);
    }

    #[test]
    fn heegaard_examples() {
        let h = |s: &str| genus2_heegaard_count(&s.parse().unwrap()).unwrap();
        assert_eq!(h("S2(0;2/5,2/5,2/7)").count, 3);
        let two = h("S2(0;2/5,2/5,1/3)");
        assert_eq!(two.count, 2);
        assert_eq!(two.labels, ["F(1,2)", "F(2,3)=F(3,1)"]);
        assert_eq!(h("S2(0;1/2,1/3,2/7)").count, 1);
        assert!(genus2_heegaard_count(&"S2(0;1/2,1/3)".parse().unwrap()).is_err());
    }

    #[test]
    fn exceptional_members() {
        let m = exceptional_member(1, 7).unwrap();
        assert_eq!(m.to_string(), "S2(-2;1/2,2/3,6/7)");
        assert_eq!(exceptional_member(2, 7).unwrap().to_string(), "S2(-2;2/3,2/3,5/7)");
        assert_eq!(exceptional_member(3, 5).unwrap().to_string(), "S2(-2;1/2,3/4,4/5)");
        assert!(exceptional_member(1, 9).is_none());
        assert!(exceptional_member(3, 4).is_none());
        let hit = genus2_heegaard_count(&m.mirror()).unwrap();
        assert_eq!((hit.count, hit.exceptional, hit.family), (2, true, Some(1)));
        assert_eq!(mod_inverse(-7, 3), Some(2));
    }

    #[test]
    fn symmetry_examples() {
        let s = |t: &str| elliptic_symmetry_group(&link(t)).unwrap();
        assert_eq!(s("M(1;1/2,1/2,3/5)").name, SymmetryName::Z2xZ2);
        assert_eq!(s("M(1;1/2,1/2,3/5)").m, Some(3));
        assert_eq!(s("M(0;1/2,1/2,1/2)").name, SymmetryName::Z2xD3);
        assert_eq!(s("M(0;1/2,1/2,1/2)").generators, ["ψ1", "ψ3"]);
        assert_eq!(s("M(0;1/2,1/3,1/4)").name, SymmetryName::Z2);
        // m = 1 with α odd
        assert_eq!(s("M(1;1/2,1/2,1/3)").name, SymmetryName::Z2);
        // m = 1 with α even
        assert_eq!(s("M(1;1/2,1/2,1/4)").name, SymmetryName::Z2xZ2);
        assert!(elliptic_symmetry_group(&link("M(0;2/5,1/3,2/7)")).is_err());
    }
}
