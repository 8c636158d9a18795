//! The word equation `w(a,b,c,d) = η₁^±1 or η₂^±1` with
//! `w(a,b,c,d) = (c₁c₂)^a h^b · η₁ · (c₁c₂)^c h^d`.
//!
//! [`predicted_solutions`] enumerates the closed-form families;
//! [`brute_force_solutions`] checks every tuple in the window by normal
//! forms and serves as the independent oracle.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sfs::{Fiber, Gen, SfsGroup, SfsWord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Target {
    Eta1,
    Eta1Inv,
    Eta2,
    Eta2Inv,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Eta1, Target::Eta1Inv, Target::Eta2, Target::Eta2Inv];

    fn eta2(sign: i64) -> Target {
        if sign > 0 {
            Target::Eta2
        } else {
            Target::Eta2Inv
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Eta1 => "eta1",
            Target::Eta1Inv => "eta1^-1",
            Target::Eta2 => "eta2",
            Target::Eta2Inv => "eta2^-1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Solution {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub target: Target,
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w({},{},{},{}) = {}", self.a, self.b, self.c, self.d, self.target)
    }
}

/// Inclusive ranges for `a, b, c, d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub a: RangeInclusive<i64>,
    pub b: RangeInclusive<i64>,
    pub c: RangeInclusive<i64>,
    pub d: RangeInclusive<i64>,
}

impl Window {
    /// `|a|,|c| <= ac` and `|b|,|d| <= bd`.
    pub fn symmetric(ac: i64, bd: i64) -> Self {
        Window { a: -ac..=ac, b: -bd..=bd, c: -ac..=ac, d: -bd..=bd }
    }

    pub fn empty() -> Self {
        #[allow(clippy::reversed_empty_ranges)]
        Window { a: 0..=-1, b: 0..=-1, c: 0..=-1, d: 0..=-1 }
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty() || self.b.is_empty() || self.c.is_empty() || self.d.is_empty()
    }

    pub fn contains(&self, s: &Solution) -> bool {
        self.a.contains(&s.a) && self.b.contains(&s.b) && self.c.contains(&s.c) && self.d.contains(&s.d)
    }
}

impl Default for Window {
    fn default() -> Self {
        Window::symmetric(3, 10)
    }
}

impl FromStr for Window {
    type Err = Error;

    /// `"AC,BD"`, e.g. `"3,10"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { pos: 0, msg: format!("expected window AC,BD, got {s:?}") };
        let (ac, bd) = s.split_once(',').ok_or_else(bad)?;
        let ac: i64 = ac.trim().parse().map_err(|_| bad())?;
        let bd: i64 = bd.trim().parse().map_err(|_| bad())?;
        if ac < 0 || bd < 0 {
            return Err(bad());
        }
        Ok(Window::symmetric(ac, bd))
    }
}

fn push_boundary(raw: &mut Vec<(Gen, i64)>, p: i64, q: i64) {
    for _ in 0..p.unsigned_abs() {
        if p > 0 {
            raw.extend([(Gen::C1, 1), (Gen::C2, 1)]);
        } else {
            raw.extend([(Gen::C2, -1), (Gen::C1, -1)]);
        }
    }
    raw.push((Gen::H, q));
}

pub fn build_w(group: &SfsGroup, a: i64, b: i64, c: i64, d: i64) -> SfsWord {
    let mut raw = Vec::new();
    push_boundary(&mut raw, a, b);
    raw.extend(group.eta(Fiber::One).letters());
    push_boundary(&mut raw, c, d);
    group.normalize(&raw)
}

pub fn target_element(group: &SfsGroup, t: Target) -> SfsWord {
    match t {
        Target::Eta1 => group.eta(Fiber::One),
        Target::Eta1Inv => group.inv(&group.eta(Fiber::One)),
        Target::Eta2 => group.eta(Fiber::Two),
        Target::Eta2Inv => group.inv(&group.eta(Fiber::Two)),
    }
}

/// `k` with `β = s + kα`, if any.
fn offset(beta: i64, sign: i64, alpha: i64) -> Option<i64> {
    ((beta - sign) % alpha == 0).then(|| (beta - sign) / alpha)
}

/// The closed-form solution families restricted to `window`:
///
/// - `w(0, b, 0, -b) = η₁`
/// - `w(s, b, s, -b + s(2k₁ + β₂)) = η₁⁻¹` when `β₁ = s + k₁α₁` and `α₂ = 2`
/// - `w(-1, b, 0, -b - k₁ - k₂) = η₂^s` when `β₁ = -1 + k₁α₁`, `β₂ = s + k₂α₂`
/// - `w(0, b, 1, -b + k₁ + k₂) = η₂^s` when `β₁ = 1 + k₁α₁`, `β₂ = -s + k₂α₂`
///
/// with `s ∈ {+1, -1}`. When `α₁ = 2` also `η₁² = h`, which adds
///
/// - `w(0, b, 0, -b - 1) = η₁⁻¹`
///
/// When `α₁ = α₂ = 2` the quotient is infinite dihedral and, writing
/// `σ = β₁ + β₂` and `δᵢ = (1 + βᵢ)/2`, every `a` gives
///
/// - `w(a, b, a, -b + aσ) = η₁` and `w(a, b, a, -b + aσ - 1) = η₁⁻¹`
/// - `w(a, b, a+1, -b + aσ + β₁ - δ₁ + δ₂) = η₂`
/// - `w(a, b, a+1, -b + aσ + β₁ + β₂ - δ₁ - δ₂) = η₂⁻¹`
///
/// [`listed_solutions`] omits both of these additions.
pub fn predicted_solutions(group: &SfsGroup, window: &Window) -> BTreeSet<Solution> {
    closed_form(group, window, true)
}

/// Families (i) to (iv) only, without the order-two family.
pub fn listed_solutions(group: &SfsGroup, window: &Window) -> BTreeSet<Solution> {
    closed_form(group, window, false)
}

fn closed_form(group: &SfsGroup, window: &Window, order_two: bool) -> BTreeSet<Solution> {
    let (a1, b1) = (group.alpha(Fiber::One), group.beta(Fiber::One));
    let (a2, b2) = (group.alpha(Fiber::Two), group.beta(Fiber::Two));
    let mut out = BTreeSet::new();
    if window.is_empty() {
        return out;
    }
    let mut family = |a: i64, c: i64, shift: i64, target: Target| {
        for b in window.b.clone() {
            let s = Solution { a, b, c, d: -b + shift, target };
            if window.contains(&s) {
                out.insert(s);
            }
        }
    };

    family(0, 0, 0, Target::Eta1);
    if order_two && a1 == 2 {
        family(0, 0, -1, Target::Eta1Inv);
    }
    if order_two && a1 == 2 && a2 == 2 {
        let d1 = group.exceptional_fiber(Fiber::One).delta;
        let d2 = group.exceptional_fiber(Fiber::Two).delta;
        let sigma = b1 + b2;
        for a in window.a.clone() {
            family(a, a, a * sigma, Target::Eta1);
            family(a, a, a * sigma - 1, Target::Eta1Inv);
            family(a, a + 1, a * sigma + b1 - d1 + d2, Target::Eta2);
            family(a, a + 1, a * sigma + b1 + b2 - d1 - d2, Target::Eta2Inv);
        }
    }

    for s in [1, -1] {
        if a2 == 2 {
            if let Some(k1) = offset(b1, s, a1) {
                family(s, s, s * (2 * k1 + b2), Target::Eta1Inv);
            }
        }
        if let (Some(k1), Some(k2)) = (offset(b1, -1, a1), offset(b2, s, a2)) {
            family(-1, 0, -k1 - k2, Target::eta2(s));
        }
        if let (Some(k1), Some(k2)) = (offset(b1, 1, a1), offset(b2, -s, a2)) {
            family(0, 1, k1 + k2, Target::eta2(s));
        }
    }
    out
}

/// Every `(a,b,c,d)` in the window whose `w` equals one of `η₁^±1, η₂^±1`,
/// found by comparing normal forms.
pub fn brute_force_solutions(group: &SfsGroup, window: &Window) -> BTreeSet<Solution> {
    if window.is_empty() {
        return BTreeSet::new();
    }
    let targets: Vec<(Target, SfsWord)> = Target::ALL.iter().map(|&t| (t, target_element(group, t))).collect();
    let tuples: Vec<(i64, i64)> = window.a.clone().flat_map(|a| window.c.clone().map(move |c| (a, c))).collect();
    tuples
        .par_iter()
        .flat_map_iter(|&(a, c)| {
            let targets = &targets;
            window.b.clone().flat_map(move |b| {
                window.d.clone().filter_map(move |d| {
                    let w = build_w(group, a, b, c, d);
                    targets.iter().find(|(_, t)| *t == w).map(|&(target, _)| Solution { a, b, c, d, target })
                })
            })
        })
        .collect()
}

/// All tuples in the window with `w(a,b,c,d) = 1`.
pub fn identity_solutions(group: &SfsGroup, window: &Window) -> Vec<(i64, i64, i64, i64)> {
    if window.is_empty() {
        return Vec::new();
    }
    let mut hits = Vec::new();
    for a in window.a.clone() {
        for b in window.b.clone() {
            for c in window.c.clone() {
                for d in window.d.clone() {
                    if build_w(group, a, b, c, d).is_identity() {
                        hits.push((a, b, c, d));
                    }
                }
            }
        }
    }
    hits
}
