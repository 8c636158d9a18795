//! The four link families, their validation, the link-spec text grammar and
//! the Seifert data of the double branched covers.
//!
//! Grammar (whitespace is insignificant, emission uses none):
//!
//! ```text
//! link   := "L1(" pair "," pair ")"
//!         | "L2(" pair "," "(" slope ")" "," pair ")"
//!         | "L3(" triple "," pair ")"
//!         | "M(" int ";" slope "," slope "," slope ")"
//! pair   := "(" slope "," slope ")"
//! triple := "(" slope "," slope "," slope ")"
//! slope  := int "/" int
//! int    := ["-"] digit+
//! ```
//!
//! Montesinos links carry the integer `b` exactly as written in `M(b; ...)`.
//! Each consumer states which convention it reads `b` in.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rationals::{matches_half_pattern, tuples_equivalent, Slope, SlopeTuple};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ArborescentLink {
    L1 { pair1: SlopeTuple, pair2: SlopeTuple },
    L2 { pair1: SlopeTuple, middle: Slope, pair2: SlopeTuple },
    L3 { triple: SlopeTuple, tail: SlopeTuple },
    Montesinos { b: BigInt, slopes: SlopeTuple },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    L1,
    L2,
    L3,
    Montesinos,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::L1 => "L1",
            Family::L2 => "L2",
            Family::L3 => "L3",
            Family::Montesinos => "M",
        })
    }
}

fn require_len(t: &SlopeTuple, n: usize, what: &str) -> Result<()> {
    if t.len() != n {
        return Err(Error::Validation(format!("{what} must have {n} slopes, got {}", t.len())));
    }
    Ok(())
}

fn require_alpha_gt_one(t: &SlopeTuple, what: &str) -> Result<()> {
    for s in t.entries() {
        if s.den() <= &BigInt::one() {
            return Err(Error::Validation(format!("α must exceed 1 (slope {s} in {what})")));
        }
    }
    Ok(())
}

impl ArborescentLink {
    pub fn l1(pair1: SlopeTuple, pair2: SlopeTuple) -> Result<Self> {
        let link = ArborescentLink::L1 { pair1, pair2 };
        link.validate()?;
        Ok(link)
    }

    pub fn l2(pair1: SlopeTuple, middle: Slope, pair2: SlopeTuple) -> Result<Self> {
        let link = ArborescentLink::L2 { pair1, middle, pair2 };
        link.validate()?;
        Ok(link)
    }

    pub fn l3(triple: SlopeTuple, tail: SlopeTuple) -> Result<Self> {
        let link = ArborescentLink::L3 { triple, tail };
        link.validate()?;
        Ok(link)
    }

    pub fn montesinos(b: impl Into<BigInt>, slopes: SlopeTuple) -> Result<Self> {
        let link = ArborescentLink::Montesinos { b: b.into(), slopes };
        link.validate()?;
        Ok(link)
    }

    pub fn family(&self) -> Family {
        match self {
            ArborescentLink::L1 { .. } => Family::L1,
            ArborescentLink::L2 { .. } => Family::L2,
            ArborescentLink::L3 { .. } => Family::L3,
            ArborescentLink::Montesinos { .. } => Family::Montesinos,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ArborescentLink::L1 { pair1, pair2 } => {
                require_len(pair1, 2, "pair1")?;
                require_len(pair2, 2, "pair2")?;
                require_alpha_gt_one(pair1, "pair1")?;
                require_alpha_gt_one(pair2, "pair2")
            }
            ArborescentLink::L2 { pair1, middle, pair2 } => {
                require_len(pair1, 2, "pair1")?;
                require_len(pair2, 2, "pair2")?;
                require_alpha_gt_one(pair1, "pair1")?;
                require_alpha_gt_one(pair2, "pair2")?;
                if !middle.num().abs().is_one() {
                    return Err(Error::Validation(format!("middle tangle must have the form 1/α₀, got {middle}")));
                }
                if middle.den() <= &BigInt::one() {
                    return Err(Error::Validation(format!("|α₀|>1 violated (middle {middle})")));
                }
                Ok(())
            }
            ArborescentLink::L3 { triple, tail } => {
                require_len(triple, 3, "triple")?;
                require_len(tail, 2, "tail")?;
                require_alpha_gt_one(triple, "triple")?;
                require_alpha_gt_one(tail, "tail")?;
                if matches_half_pattern(tail)?.is_none() {
                    return Err(Error::Validation(format!(
                        "tail {tail} is not of the form (1/2, -n/(2n+1)) with |2n+1|>1"
                    )));
                }
                Ok(())
            }
            ArborescentLink::Montesinos { slopes, .. } => {
                require_len(slopes, 3, "Montesinos slopes")?;
                for s in slopes.entries() {
                    if s.den() < &BigInt::from(2) {
                        return Err(Error::Validation(format!("α must be at least 2 (slope {s})")));
                    }
                }
                Ok(())
            }
        }
    }

    /// `α₀` of an L2 link (`middle = 1/α₀`).
    pub fn alpha0(&self) -> Option<BigInt> {
        match self {
            ArborescentLink::L2 { middle, .. } => Some(middle.den() * middle.num()),
            _ => None,
        }
    }
}

impl fmt::Display for ArborescentLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArborescentLink::L1 { pair1, pair2 } => write!(f, "L1({pair1},{pair2})"),
            ArborescentLink::L2 { pair1, middle, pair2 } => {
                write!(f, "L2({pair1},({middle}),{pair2})")
            }
            ArborescentLink::L3 { triple, tail } => write!(f, "L3({triple},{tail})"),
            ArborescentLink::Montesinos { b, slopes } => {
                let s = slopes.entries();
                write!(f, "M({b};{},{},{})", s[0], s[1], s[2])
            }
        }
    }
}

impl FromStr for ArborescentLink {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_link(s)
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            self.err(format!("expected {token:?}"))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            self.skip_ws();
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return self.err("expected digits");
        }
        let text: String = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        Ok(text.parse().expect("validated digits"))
    }

    fn slope(&mut self) -> Result<Slope> {
        let p = self.int()?;
        self.expect("/")?;
        let at = self.pos;
        let q = self.int()?;
        Slope::new(p, q).map_err(|_| Error::Parse { pos: at, msg: "degenerate slope".into() })
    }

    fn tuple(&mut self, n: usize) -> Result<SlopeTuple> {
        self.expect("(")?;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                self.expect(",")?;
            }
            out.push(self.slope()?);
        }
        self.expect(")")?;
        Ok(SlopeTuple::new(out))
    }

    fn end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.err("trailing input"),
        }
    }
}

/// Parses and validates a link spec.
pub fn parse_link(text: &str) -> Result<ArborescentLink> {
    let mut c = Cursor::new(text);
    let link = match c.peek() {
        Some(b'L') => {
            c.pos += 1;
            match c.peek() {
                Some(b'1') => {
                    c.expect("1")?;
                    c.expect("(")?;
                    let pair1 = c.tuple(2)?;
                    c.expect(",")?;
                    let pair2 = c.tuple(2)?;
                    c.expect(")")?;
                    ArborescentLink::L1 { pair1, pair2 }
                }
                Some(b'2') => {
                    c.expect("2")?;
                    c.expect("(")?;
                    let pair1 = c.tuple(2)?;
                    c.expect(",")?;
                    c.expect("(")?;
                    let middle = c.slope()?;
                    c.expect(")")?;
                    c.expect(",")?;
                    let pair2 = c.tuple(2)?;
                    c.expect(")")?;
                    ArborescentLink::L2 { pair1, middle, pair2 }
                }
                Some(b'3') => {
                    c.expect("3")?;
                    c.expect("(")?;
                    let triple = c.tuple(3)?;
                    c.expect(",")?;
                    let tail = c.tuple(2)?;
                    c.expect(")")?;
                    ArborescentLink::L3 { triple, tail }
                }
                _ => return c.err("expected family index 1, 2 or 3"),
            }
        }
        Some(b'M') => {
            c.pos += 1;
            c.expect("(")?;
            let b = c.int()?;
            c.expect(";")?;
            let mut slopes = Vec::with_capacity(3);
            for i in 0..3 {
                if i > 0 {
                    c.expect(",")?;
                }
                slopes.push(c.slope()?);
            }
            c.expect(")")?;
            ArborescentLink::Montesinos { b, slopes: SlopeTuple::new(slopes) }
        }
        _ => return c.err("expected L1, L2, L3 or M"),
    };
    c.end()?;
    link.validate()?;
    Ok(link)
}

pub fn emit_link(link: &ArborescentLink) -> String {
    link.to_string()
}

fn unordered_denominators(slopes: &SlopeTuple) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = slopes.entries().iter().map(|s| s.den().clone()).collect();
    d.sort();
    d
}

/// True iff the denominator triple is spherical: `(2,2,α)`, `(2,3,3)`,
/// `(2,3,4)` or `(2,3,5)` up to order.
pub fn is_elliptic_montesinos(link: &ArborescentLink) -> Result<bool> {
    let ArborescentLink::Montesinos { slopes, .. } = link else {
        return Err(Error::NotApplicable("not a Montesinos link".into()));
    };
    let d = unordered_denominators(slopes);
    let small = |v: &BigInt, k: i64| v == &BigInt::from(k);
    Ok(small(&d[0], 2) && (small(&d[1], 2) || (small(&d[1], 3) && (3..=5).any(|k| small(&d[2], k)))))
}

/// The `n` of an L2 link equivalent to `L2((-1/2,1/2),(1/n),(-1/2,1/2))`.
pub fn is_exceptional_nonsimple(link: &ArborescentLink) -> Result<Option<BigInt>> {
    let ArborescentLink::L2 { pair1, pair2, .. } = link else {
        return Err(Error::NotApplicable("not an L2 link".into()));
    };
    let klein = SlopeTuple::pair(Slope::of(-1, 2), Slope::of(1, 2));
    if tuples_equivalent(pair1, &klein)? && tuples_equivalent(pair2, &klein)? {
        Ok(link.alpha0())
    } else {
        Ok(None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Base {
    Disk,
    Sphere,
    Annulus,
    Mobius,
}

/// Seifert invariants `base(b; β₁/α₁, ...)`; Euler number `e = -(b + Σβᵢ/αᵢ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertInvariants {
    pub base: Base,
    #[serde(with = "crate::rationals::bigint_text")]
    pub b: BigInt,
    pub slopes: SlopeTuple,
}

impl SeifertInvariants {
    pub fn sphere(b: impl Into<BigInt>, slopes: SlopeTuple) -> Self {
        SeifertInvariants { base: Base::Sphere, b: b.into(), slopes }
    }

    pub fn disk(slopes: SlopeTuple) -> Self {
        SeifertInvariants { base: Base::Disk, b: BigInt::zero(), slopes }
    }

    pub fn euler_number(&self) -> BigRational {
        -(BigRational::from_integer(self.b.clone()) + self.slopes.sum())
    }

    /// Same manifold with the opposite orientation.
    pub fn mirror(&self) -> Self {
        SeifertInvariants {
            base: self.base,
            b: -&self.b,
            slopes: SlopeTuple::new(self.slopes.entries().iter().map(Slope::neg).collect()),
        }
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.base {
            Base::Disk => "D",
            Base::Sphere => "S2",
            Base::Annulus => "A",
            Base::Mobius => "Mo",
        };
        let body: Vec<String> = self.slopes.entries().iter().map(|s| s.to_string()).collect();
        match self.base {
            Base::Sphere => write!(f, "{tag}({};{})", self.b, body.join(",")),
            _ => write!(f, "{tag}({})", body.join(",")),
        }
    }
}

impl FromStr for SeifertInvariants {
    type Err = Error;

    /// Accepts `S2(b;s1,s2,s3)` and `D(s1,...)`.
    fn from_str(text: &str) -> Result<Self> {
        let mut c = Cursor::new(text);
        let inv = if c.peek() == Some(b'S') {
            c.expect("S2")?;
            c.expect("(")?;
            let b = c.int()?;
            c.expect(";")?;
            let mut slopes = vec![c.slope()?];
            while c.peek() == Some(b',') {
                c.expect(",")?;
                slopes.push(c.slope()?);
            }
            c.expect(")")?;
            SeifertInvariants::sphere(b, SlopeTuple::new(slopes))
        } else {
            c.expect("D")?;
            c.expect("(")?;
            let mut slopes = vec![c.slope()?];
            while c.peek() == Some(b',') {
                c.expect(",")?;
                slopes.push(c.slope()?);
            }
            c.expect(")")?;
            SeifertInvariants::disk(SlopeTuple::new(slopes))
        };
        c.end()?;
        Ok(inv)
    }
}

/// Reduces every slope into `0 < β < α`. Over the sphere the integer parts
/// are absorbed into `b` (preserving the Euler number); over other bases
/// they are dropped, matching the mod-Z meaning of indices there.
pub fn normalize_seifert(inv: &SeifertInvariants) -> Result<SeifertInvariants> {
    let mut b = inv.b.clone();
    let mut slopes = Vec::with_capacity(inv.slopes.len());
    for s in inv.slopes.entries() {
        if s.den() < &BigInt::from(2) {
            return Err(Error::Validation(format!("α must be at least 2 (slope {s})")));
        }
        let (q, r) = s.num().div_mod_floor(s.den());
        if inv.base == Base::Sphere {
            b += q;
        }
        slopes.push(Slope::new(r, s.den().clone())?);
    }
    Ok(SeifertInvariants { base: inv.base, b, slopes: SlopeTuple::new(slopes) })
}

fn sorted_slopes(inv: &SeifertInvariants) -> Vec<Slope> {
    let mut v = inv.slopes.entries().to_vec();
    v.sort();
    v
}

/// Fibered equivalence over the sphere: same normalized slope multiset and
/// Euler number, or (when orientation does not matter) the same for the
/// mirror of `b`.
pub fn same_seifert_space(a: &SeifertInvariants, b: &SeifertInvariants, orientation_sensitive: bool) -> Result<bool> {
    if a.base != Base::Sphere || b.base != Base::Sphere {
        return Err(Error::BaseMismatch);
    }
    let na = normalize_seifert(a)?;
    let same = |other: &SeifertInvariants| -> Result<bool> {
        let nb = normalize_seifert(other)?;
        Ok(sorted_slopes(&na) == sorted_slopes(&nb) && na.euler_number() == nb.euler_number())
    };
    if same(b)? {
        return Ok(true);
    }
    if !orientation_sensitive {
        return same(&b.mirror());
    }
    Ok(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gluing {
    /// A horizontal loop and a regular fiber of `left` are identified with a
    /// regular fiber and a horizontal loop of `right`.
    FiberHorizontal { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverPieces {
    pub pieces: Vec<SeifertInvariants>,
    pub gluings: Vec<Gluing>,
}

/// Seifert pieces of the double branched cover and how they are glued.
///
/// L2 covers are `D ∪ A(1/α₀) ∪ D` unless one of the pairs is equivalent to
/// `(-1/2,1/2)`, in which case that disk piece and the annulus piece combine
/// into `Mö(1/α₀)`. When both pairs are, the link is the non-simple
/// exceptional one and the three-piece description is reported.
pub fn branched_cover_invariants(link: &ArborescentLink) -> Result<CoverPieces> {
    let fh = |left, right| Gluing::FiberHorizontal { left, right };
    Ok(match link {
        ArborescentLink::L1 { pair1, pair2 } => CoverPieces {
            pieces: vec![SeifertInvariants::disk(pair1.clone()), SeifertInvariants::disk(pair2.clone())],
            gluings: vec![fh(0, 1)],
        },
        ArborescentLink::L2 { pair1, middle, pair2 } => {
            let klein = SlopeTuple::pair(Slope::of(-1, 2), Slope::of(1, 2));
            let k1 = tuples_equivalent(pair1, &klein)?;
            let k2 = tuples_equivalent(pair2, &klein)?;
            let twisted = SlopeTuple::new(vec![middle.clone()]);
            match (k1, k2) {
                (true, false) | (false, true) => {
                    let other = if k1 { pair2 } else { pair1 };
                    CoverPieces {
                        pieces: vec![
                            SeifertInvariants::disk(other.clone()),
                            SeifertInvariants { base: Base::Mobius, b: BigInt::zero(), slopes: twisted },
                        ],
                        gluings: vec![fh(0, 1)],
                    }
                }
                _ => CoverPieces {
                    pieces: vec![
                        SeifertInvariants::disk(pair1.clone()),
                        SeifertInvariants::disk(pair2.clone()),
                        SeifertInvariants { base: Base::Annulus, b: BigInt::zero(), slopes: twisted },
                    ],
                    gluings: vec![fh(0, 2), fh(1, 2)],
                },
            }
        }
        ArborescentLink::L3 { triple, tail } => CoverPieces {
            pieces: vec![SeifertInvariants::disk(triple.clone()), SeifertInvariants::disk(tail.clone())],
            gluings: vec![fh(0, 1)],
        },
        ArborescentLink::Montesinos { b, slopes } => {
            CoverPieces { pieces: vec![SeifertInvariants::sphere(b.clone(), slopes.clone())], gluings: vec![] }
        }
    })
}
