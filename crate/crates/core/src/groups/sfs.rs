//! Words in `π₁(D(β₁/α₁, β₂/α₂)) = ⟨c₁, c₂, h | [cⱼ,h], cⱼ^αⱼ h^βⱼ⟩`.
//!
//! `h` is central and of infinite order, and the quotient by `⟨h⟩` is
//! `Z_α₁ * Z_α₂`. Every element therefore has a unique normal form: an
//! alternating syllable sequence `cⱼ^e` with `1 <= e < αⱼ`, followed by a
//! power of `h`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rationals::Slope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    C1,
    C2,
    H,
}

impl Gen {
    fn fiber(self) -> usize {
        match self {
            Gen::C1 => 0,
            Gen::C2 => 1,
            Gen::H => panic!("h is not a fiber generator"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::C1 => "c1",
            Gen::C2 => "c2",
            Gen::H => "h",
        }
    }
}

/// Which exceptional fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Fiber {
    One,
    Two,
}

impl Fiber {
    pub fn gen(self) -> Gen {
        match self {
            Fiber::One => Gen::C1,
            Fiber::Two => Gen::C2,
        }
    }
}

/// A word as written: `(generator, exponent)` letters, not yet reduced.
pub type RawWord = Vec<(Gen, i64)>;

pub fn parse_raw_word(text: &str) -> Result<RawWord> {
    let mut out = Vec::new();
    let mut offset = 0;
    for token in text.split_whitespace() {
        let pos = text[offset..].find(token).map_or(offset, |i| offset + i);
        offset = pos + token.len();
        if token == "1" {
            continue;
        }
        let (name, exp) = match token.split_once('^') {
            Some((n, e)) => {
                let e =
                    e.parse::<i64>().map_err(|_| Error::Parse { pos, msg: format!("bad exponent in {token:?}") })?;
                (n, e)
            }
            None => (token, 1),
        };
        let gen = match name {
            "c1" => Gen::C1,
            "c2" => Gen::C2,
            "h" => Gen::H,
            _ => return Err(Error::Parse { pos, msg: format!("unknown generator {name:?}") }),
        };
        out.push((gen, exp));
    }
    Ok(out)
}

pub(crate) fn fmt_letters<'a>(
    f: &mut fmt::Formatter<'_>,
    letters: impl Iterator<Item = (&'a str, i64)>,
) -> fmt::Result {
    let mut empty = true;
    for (name, e) in letters {
        if e == 0 {
            continue;
        }
        if !empty {
            f.write_str(" ")?;
        }
        empty = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    if empty {
        f.write_str("1")?;
    }
    Ok(())
}

/// Normal form: alternating syllables, then `h^hpow`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SfsWord {
    pub syllables: Vec<(Gen, i64)>,
    pub hpow: i64,
}

impl SfsWord {
    pub fn identity() -> Self {
        SfsWord { syllables: Vec::new(), hpow: 0 }
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty() && self.hpow == 0
    }

    pub fn letters(&self) -> RawWord {
        let mut v = self.syllables.clone();
        if self.hpow != 0 {
            v.push((Gen::H, self.hpow));
        }
        v
    }

    /// Number of syllables of the image in `Z_α₁ * Z_α₂`.
    pub fn quotient_length(&self) -> usize {
        self.syllables.len()
    }
}

impl fmt::Display for SfsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.letters();
        fmt_letters(f, letters.iter().map(|&(g, e)| (g.name(), e)))
    }
}

/// `(γ, δ)` with `αδ - βγ = 1`; the fiber element is `η = c^γ h^δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberData {
    pub gamma: i64,
    pub delta: i64,
}

/// The Seifert fibered space `D(β₁/α₁, β₂/α₂)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SfsGroup {
    alpha: [i64; 2],
    beta: [i64; 2],
}

impl SfsGroup {
    pub fn new(alpha1: i64, beta1: i64, alpha2: i64, beta2: i64) -> Result<Self> {
        for (a, b) in [(alpha1, beta1), (alpha2, beta2)] {
            if a <= 1 {
                return Err(Error::Validation(format!("α must exceed 1, got {a}")));
            }
            if a.gcd(&b) != 1 {
                return Err(Error::Validation(format!("gcd({a}, {b}) must be 1")));
            }
        }
        Ok(SfsGroup { alpha: [alpha1, alpha2], beta: [beta1, beta2] })
    }

    pub fn from_slopes(s1: &Slope, s2: &Slope) -> Result<Self> {
        let conv = |s: &Slope| s.to_i64_pair().ok_or_else(|| Error::Validation(format!("slope {s} too large")));
        let (b1, a1) = conv(s1)?;
        let (b2, a2) = conv(s2)?;
        Self::new(a1, b1, a2, b2)
    }

    pub fn alpha(&self, fiber: Fiber) -> i64 {
        self.alpha[fiber as usize]
    }

    pub fn beta(&self, fiber: Fiber) -> i64 {
        self.beta[fiber as usize]
    }

    pub fn normalize(&self, raw: &[(Gen, i64)]) -> SfsWord {
        let mut syllables: Vec<(Gen, i64)> = Vec::with_capacity(raw.len());
        let mut hpow = 0i64;
        for &(g, e) in raw {
            if g == Gen::H {
                hpow += e;
                continue;
            }
            let mut e = e;
            if let Some(&(top, te)) = syllables.last() {
                if top == g {
                    e += te;
                    syllables.pop();
                }
            }
            let j = g.fiber();
            let (q, r) = e.div_mod_floor(&self.alpha[j]);
            // c^(qα) = h^(-qβ)
            hpow -= q * self.beta[j];
            if r != 0 {
                syllables.push((g, r));
            }
        }
        SfsWord { syllables, hpow }
    }

    pub fn parse_word(&self, text: &str) -> Result<SfsWord> {
        Ok(self.normalize(&parse_raw_word(text)?))
    }

    /// Checks that `w` is a normal form for this group.
    pub fn check(&self, w: &SfsWord) -> Result<()> {
        for (i, &(g, e)) in w.syllables.iter().enumerate() {
            if g == Gen::H {
                return Err(Error::GroupMismatch("h inside syllables".into()));
            }
            let a = self.alpha[g.fiber()];
            if e < 1 || e >= a {
                return Err(Error::GroupMismatch(format!("exponent {e} of {} outside [1,{a})", g.name())));
            }
            if i > 0 && w.syllables[i - 1].0 == g {
                return Err(Error::GroupMismatch("adjacent syllables share a generator".into()));
            }
        }
        Ok(())
    }

    pub fn multiply(&self, a: &SfsWord, b: &SfsWord) -> Result<SfsWord> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul(&self, a: &SfsWord, b: &SfsWord) -> SfsWord {
        let mut raw = a.letters();
        raw.extend(b.letters());
        self.normalize(&raw)
    }

    pub fn invert(&self, w: &SfsWord) -> Result<SfsWord> {
        self.check(w)?;
        Ok(self.inv(w))
    }

    pub(crate) fn inv(&self, w: &SfsWord) -> SfsWord {
        let raw: RawWord = w.letters().iter().rev().map(|&(g, e)| (g, -e)).collect();
        self.normalize(&raw)
    }

    pub fn is_identity(&self, w: &SfsWord) -> bool {
        w.is_identity()
    }

    pub fn pow(&self, w: &SfsWord, k: i64) -> SfsWord {
        let base = if k < 0 { self.inv(w) } else { w.clone() };
        let mut raw = Vec::new();
        for _ in 0..k.unsigned_abs() {
            raw.extend(base.letters());
        }
        self.normalize(&raw)
    }

    /// `(c₁c₂)^p h^q`.
    pub fn boundary_element(&self, p: i64, q: i64) -> SfsWord {
        let mut raw = Vec::with_capacity(2 * p.unsigned_abs() as usize + 1);
        for _ in 0..p.unsigned_abs() {
            if p > 0 {
                raw.extend([(Gen::C1, 1), (Gen::C2, 1)]);
            } else {
                raw.extend([(Gen::C2, -1), (Gen::C1, -1)]);
            }
        }
        raw.push((Gen::H, q));
        self.normalize(&raw)
    }

    /// Canonical `(γ, δ)`: `γ ≡ -β⁻¹ (mod α)`, `0 < γ < α`, `δ = (1+βγ)/α`.
    ///
    /// Any other solution is `(γ+tα, δ+tβ)`, which names the same element
    /// since `c^α = h^-β`.
    pub fn exceptional_fiber(&self, fiber: Fiber) -> FiberData {
        let (a, b) = (self.alpha(fiber), self.beta(fiber));
        let inv = b.extended_gcd(&a).x.mod_floor(&a);
        let gamma = (-inv).mod_floor(&a);
        let delta = (1 + b * gamma) / a;
        debug_assert_eq!(a * delta - b * gamma, 1);
        FiberData { gamma, delta }
    }

    /// `η = c^γ h^δ` for the given fiber.
    pub fn eta(&self, fiber: Fiber) -> SfsWord {
        let FiberData { gamma, delta } = self.exceptional_fiber(fiber);
        self.normalize(&[(fiber.gen(), gamma), (Gen::H, delta)])
    }

    /// `Some((p, q))` iff `w = (c₁c₂)^p h^q`, i.e. `w ∈ π₁(∂M)`.
    pub fn peripheral_membership(&self, w: &SfsWord) -> Option<(i64, i64)> {
        let n = w.syllables.len();
        if n % 2 == 1 {
            return None;
        }
        let half = (n / 2) as i64;
        let p = match w.syllables.first() {
            None => 0,
            Some(&(Gen::C1, _)) => half,
            Some(_) => -half,
        };
        let candidate = self.boundary_element(p, 0);
        (candidate.syllables == w.syllables).then(|| (p, w.hpow - candidate.hpow))
    }

    /// Conjugacy of the images in `Z_α₁ * Z_α₂`.
    pub fn quotient_conjugate(&self, u: &SfsWord, v: &SfsWord) -> bool {
        let cu = self.cyclic_quotient(&u.syllables);
        let cv = self.cyclic_quotient(&v.syllables);
        if cu.len() != cv.len() {
            return false;
        }
        if cu.len() <= 1 {
            return cu == cv;
        }
        (0..cu.len()).any(|shift| cu.iter().cycle().skip(shift).take(cu.len()).eq(cv.iter()))
    }

    fn cyclic_quotient(&self, syl: &[(Gen, i64)]) -> Vec<(Gen, i64)> {
        let mut s = syl.to_vec();
        while s.len() >= 2 && s[0].0 == s[s.len() - 1].0 {
            let (g, e) = s.pop().expect("len >= 2");
            let merged = (s[0].1 + e).mod_floor(&self.alpha[g.fiber()]);
            if merged == 0 {
                s.remove(0);
            } else {
                s[0].1 = merged;
            }
        }
        s
    }
}

impl fmt::Display for SfsGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({}/{},{}/{})", self.beta[0], self.alpha[0], self.beta[1], self.alpha[1])
    }
}

impl FromStr for SfsGroup {
    type Err = Error;

    /// Parses `D(β₁/α₁,β₂/α₂)`.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('D')
            .map(str::trim_start)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.trim_end().strip_suffix(')'))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("expected D(p/q,p/q), got {t:?}") })?;
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::Parse { pos: 2, msg: "expected two slopes".into() })?;
        SfsGroup::from_slopes(&a.parse()?, &b.parse()?)
    }
}
