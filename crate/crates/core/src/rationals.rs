//! Exact slopes, residues mod Z and the slope-tuple equivalence.
//!
//! Slopes are stored exactly (never reduced mod Z). The equivalence
//! `(s_1,..,s_r) ~ (s'_1,..,s'_r)` compares entries mod Z, in order or in
//! reversed order, and additionally requires the exact sums to agree.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced rational `num/den` with `den >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    num: BigInt,
    den: BigInt,
}

impl Slope {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if q.is_zero() {
            return Err(Error::DegenerateSlope);
        }
        let g = p.gcd(&q);
        let (mut num, mut den) = (p / &g, q / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Slope { num, den })
    }

    /// Panics on a zero denominator; meant for literals.
    pub fn of(p: i64, q: i64) -> Self {
        Self::new(p, q).expect("nonzero denominator")
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(r.numer().clone(), r.denom().clone()).expect("rational has nonzero denominator")
    }

    /// The numerator β.
    pub fn num(&self) -> &BigInt {
        &self.num
    }

    /// The (positive) denominator α.
    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.num.to_i64()?, self.den.to_i64()?))
    }

    pub fn value(&self) -> BigRational {
        BigRational::new_raw(self.num.clone(), self.den.clone())
    }

    /// Fractional part in `[0, 1)`.
    pub fn residue(&self) -> BigRational {
        BigRational::new_raw(self.num.mod_floor(&self.den), self.den.clone())
    }

    pub fn same_mod_z(&self, other: &Slope) -> bool {
        self.den == other.den && self.num.mod_floor(&self.den) == other.num.mod_floor(&other.den)
    }

    pub fn neg(&self) -> Slope {
        Slope { num: -&self.num, den: self.den.clone() }
    }

    /// `self + k`.
    pub fn shift(&self, k: &BigInt) -> Slope {
        Slope { num: &self.num + k * &self.den, den: self.den.clone() }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (p, q) =
            s.split_once('/').ok_or_else(|| Error::Parse { pos: 0, msg: format!("expected p/q, got {s:?}") })?;
        let int = |t: &str, pos: usize| -> Result<BigInt> {
            let t = t.trim();
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse { pos, msg: format!("expected integer, got {t:?}") });
            }
            Ok(t.parse::<BigInt>().expect("validated digits"))
        };
        Slope::new(int(p, 0)?, int(q, p.len() + 1)?)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered list of slopes.
/// Serde adapter writing a `BigInt` as a decimal string.
pub mod bigint_text {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SlopeTuple(pub Vec<Slope>);

impl SlopeTuple {
    pub fn new(entries: Vec<Slope>) -> Self {
        SlopeTuple(entries)
    }

    pub fn pair(a: Slope, b: Slope) -> Self {
        SlopeTuple(vec![a, b])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Slope] {
        &self.0
    }

    pub fn reversed(&self) -> Self {
        SlopeTuple(self.0.iter().rev().cloned().collect())
    }

    pub fn sum(&self) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |acc, s| acc + s.value())
    }
}

impl fmt::Display for SlopeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

pub fn slope_normalize(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Slope> {
    Slope::new(p, q)
}

pub fn tuples_equivalent(a: &SlopeTuple, b: &SlopeTuple) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let forward = a.0.iter().zip(&b.0).all(|(x, y)| x.same_mod_z(y));
    let backward = a.0.iter().zip(b.0.iter().rev()).all(|(x, y)| x.same_mod_z(y));
    Ok((forward || backward) && a.sum() == b.sum())
}

fn pair_denominators(p: &SlopeTuple) -> Result<(&BigInt, &BigInt)> {
    if p.len() != 2 {
        return Err(Error::NotAPair(p.len()));
    }
    let (a, b) = (p.0[0].den(), p.0[1].den());
    if a <= &BigInt::one() || b <= &BigInt::one() {
        return Err(Error::Validation("pattern tests need both denominators > 1".into()));
    }
    Ok((a, b))
}

/// Sign pairs in the fixed scan order used by [`matches_epsilon_pattern`].
pub const SIGN_PAIRS: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

/// First `(ε, ε')` with `p ~ (ε/α, ε'/α')`, also trying the swapped
/// denominator assignment `(ε/α', ε'/α)`.
pub fn matches_epsilon_pattern(p: &SlopeTuple) -> Result<Option<(i8, i8)>> {
    let (a, b) = pair_denominators(p)?;
    for (e1, e2) in SIGN_PAIRS {
        let given = SlopeTuple::pair(Slope::new(e1, a.clone())?, Slope::new(e2, b.clone())?);
        let swapped = SlopeTuple::pair(Slope::new(e1, b.clone())?, Slope::new(e2, a.clone())?);
        if tuples_equivalent(p, &given)? || tuples_equivalent(p, &swapped)? {
            return Ok(Some((e1, e2)));
        }
    }
    Ok(None)
}

/// The pair `(1/2, -n/(2n+1))`.
pub fn half_pattern(n: &BigInt) -> Result<SlopeTuple> {
    let two_n_plus_one = BigInt::from(2) * n + 1;
    Ok(SlopeTuple::pair(Slope::of(1, 2), Slope::new(-n, two_n_plus_one)?))
}

/// Finds `n` with `|2n+1| > 1` and `p ~ (1/2, -n/(2n+1))`.
///
/// Equivalence forces the entries to agree mod Z, so one denominator of `p`
/// is 2 and the other equals `|2n+1|`. Hence for each placement of the 2 the
/// only candidates are `n = (α'-1)/2` and `n = (-α'-1)/2`.
pub fn matches_half_pattern(p: &SlopeTuple) -> Result<Option<BigInt>> {
    let (a, b) = pair_denominators(p)?;
    let two = BigInt::from(2);
    for (this, other) in [(a, b), (b, a)] {
        if this != &two || other.is_even() {
            continue;
        }
        for n in [(other - 1) / &two, (-other - 1) / &two] {
            let m: BigInt = &two * &n + 1;
            if m.abs() <= BigInt::one() {
                continue;
            }
            if tuples_equivalent(p, &half_pattern(&n)?)? {
                return Ok(Some(n));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[(i64, i64)]) -> SlopeTuple {
        SlopeTuple(v.iter().map(|&(p, q)| Slope::of(p, q)).collect())
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(slope_normalize(2, -6).unwrap(), Slope::of(-1, 3));
        assert_eq!(slope_normalize(0, 5).unwrap().to_string(), "0/1");
        assert_eq!(slope_normalize(-2, -5).unwrap().to_string(), "2/5");
        assert_eq!(slope_normalize(3, 0), Err(Error::DegenerateSlope));
    }

    #[test]
    fn parse_and_emit() {
        assert_eq!("-2/5".parse::<Slope>().unwrap(), Slope::of(-2, 5));
        assert_eq!(" 4/-6 ".parse::<Slope>().unwrap().to_string(), "-2/3");
        assert!("1/0".parse::<Slope>().is_err());
        assert!("1/".parse::<Slope>().is_err());
        assert!("x/2".parse::<Slope>().is_err());
    }

    #[test]
    fn equivalence_examples() {
        assert!(tuples_equivalent(&t(&[(1, 2), (-2, 5)]), &t(&[(1, 2), (-2, 5)])).unwrap());
        // entries agree mod Z but sums are 11/10 and 1/10
        assert!(!tuples_equivalent(&t(&[(1, 2), (3, 5)]), &t(&[(1, 2), (-2, 5)])).unwrap());
        assert!(tuples_equivalent(&t(&[(1, 3), (1, 4)]), &t(&[(1, 4), (1, 3)])).unwrap());
        assert_eq!(tuples_equivalent(&t(&[(1, 3)]), &t(&[(1, 4), (1, 3)])), Err(Error::LengthMismatch(1, 2)));
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(matches_epsilon_pattern(&t(&[(1, 3), (1, 4)])).unwrap(), Some((1, 1)));
        assert_eq!(matches_epsilon_pattern(&t(&[(2, 5), (2, 5)])).unwrap(), None);
        assert_eq!(matches_epsilon_pattern(&t(&[(1, 2), (-1, 3)])).unwrap(), Some((1, -1)));
        assert!(matches_epsilon_pattern(&t(&[(1, 1), (1, 3)])).is_err());
        assert!(matches_epsilon_pattern(&t(&[(1, 3)])).is_err());
    }

    #[test]
    fn half_examples() {
        let two = BigInt::from(2);
        assert_eq!(matches_half_pattern(&t(&[(1, 2), (-2, 5)])).unwrap(), Some(two.clone()));
        assert_eq!(matches_half_pattern(&t(&[(1, 3), (1, 4)])).unwrap(), None);
        assert_eq!(matches_half_pattern(&t(&[(-2, 5), (1, 2)])).unwrap(), Some(two));
        // (1/2, 1/2): the partner denominator is even
        assert_eq!(matches_half_pattern(&t(&[(1, 2), (1, 2)])).unwrap(), None);
        // n = -2 gives (1/2, 2/(-3)) = (1/2, -2/3)
        assert_eq!(matches_half_pattern(&t(&[(1, 2), (-2, 3)])).unwrap(), Some(BigInt::from(-2)));
    }

    #[test]
    fn adding_one_breaks_equivalence() {
        let a = t(&[(1, 3), (2, 7)]);
        let b = SlopeTuple(vec![a.0[0].shift(&BigInt::one()), a.0[1].clone()]);
        assert!(!tuples_equivalent(&a, &b).unwrap());
    }
}
