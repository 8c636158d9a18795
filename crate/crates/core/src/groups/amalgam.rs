//! The amalgamated product `π₁(M₁) *_{Z²} π₁(M₂)` of two Seifert pieces over
//! the disk, glued so that fiber and horizontal loop are swapped:
//! `(c₁c₂)^p h^q` on side one is `(c₁c₂)^q h^p` on side two.
//!
//! Edge elements are recorded in side-one coordinates `(p, q)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::sfs::{Gen, SfsGroup, SfsWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

pub type Factor = (Side, SfsWord);

/// A reduced word: alternating factors, none in the edge subgroup. When the
/// factor list is empty the element is the edge element `edge`; otherwise
/// `edge` is `(0, 0)` and any edge part lives inside the first factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AmalgamWord {
    edge: (i64, i64),
    factors: Vec<Factor>,
}

impl AmalgamWord {
    pub fn identity() -> Self {
        AmalgamWord { edge: (0, 0), factors: Vec::new() }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The edge element in side-one coordinates.
    pub fn edge(&self) -> (i64, i64) {
        self.edge
    }

    /// The edge element written as `(c₁c₂)^p h^q` in the given side.
    pub fn edge_on(&self, side: Side) -> (i64, i64) {
        match side {
            Side::One => self.edge,
            Side::Two => (self.edge.1, self.edge.0),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty() && self.edge == (0, 0)
    }
}

impl fmt::Display for AmalgamWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "edge{:?}", self.edge);
        }
        for (i, (side, w)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            let tag = if *side == Side::One { 1 } else { 2 };
            write!(f, "[{tag}: {w}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmalgamGroup {
    pub vertex1: SfsGroup,
    pub vertex2: SfsGroup,
}

impl AmalgamGroup {
    pub fn new(vertex1: SfsGroup, vertex2: SfsGroup) -> Self {
        AmalgamGroup { vertex1, vertex2 }
    }

    pub fn vertex(&self, side: Side) -> &SfsGroup {
        match side {
            Side::One => &self.vertex1,
            Side::Two => &self.vertex2,
        }
    }

    /// The edge element `(p, q)` (side-one coordinates) as a word of `side`.
    pub fn edge_word(&self, side: Side, (p, q): (i64, i64)) -> SfsWord {
        match side {
            Side::One => self.vertex1.boundary_element(p, q),
            Side::Two => self.vertex2.boundary_element(q, p),
        }
    }

    /// Side-one coordinates of `w` if it lies in the edge subgroup.
    pub fn edge_coords(&self, side: Side, w: &SfsWord) -> Option<(i64, i64)> {
        let (p, q) = self.vertex(side).peripheral_membership(w)?;
        Some(match side {
            Side::One => (p, q),
            Side::Two => (q, p),
        })
    }

    /// A single-factor word.
    pub fn element(&self, side: Side, w: SfsWord) -> AmalgamWord {
        self.reduce(&[(side, w)])
    }

    pub fn edge_element(&self, e: (i64, i64)) -> AmalgamWord {
        AmalgamWord { edge: e, factors: Vec::new() }
    }

    /// Reduces an arbitrary factor sequence. Factors in the edge subgroup are
    /// carried across the gluing and merged into their neighbours until no
    /// interior factor is peripheral.
    pub fn reduce(&self, raw: &[Factor]) -> AmalgamWord {
        let mut edge = (0i64, 0i64);
        let mut stack: Vec<Factor> = Vec::with_capacity(raw.len());
        for (side, w) in raw {
            self.push(&mut edge, &mut stack, *side, w.clone());
        }
        AmalgamWord { edge, factors: stack }
    }

    fn push(&self, edge: &mut (i64, i64), stack: &mut Vec<Factor>, side: Side, word: SfsWord) {
        let (mut side, mut word) = (side, word);
        loop {
            if stack.last().is_some_and(|(s, _)| *s == side) {
                let (_, top) = stack.pop().expect("nonempty");
                word = self.vertex(side).mul(&top, &word);
            }
            if word.is_identity() {
                return;
            }
            if let Some(e) = self.edge_coords(side, &word) {
                match stack.last() {
                    None => {
                        edge.0 += e.0;
                        edge.1 += e.1;
                        return;
                    }
                    Some((top_side, _)) => {
                        side = *top_side;
                        word = self.edge_word(side, e);
                        continue;
                    }
                }
            }
            if stack.is_empty() && *edge != (0, 0) {
                word = self.vertex(side).mul(&self.edge_word(side, *edge), &word);
                *edge = (0, 0);
            }
            stack.push((side, word));
            return;
        }
    }

    fn raw(&self, w: &AmalgamWord) -> Vec<Factor> {
        let mut out = Vec::with_capacity(w.factors.len() + 1);
        if w.edge != (0, 0) {
            out.push((Side::One, self.edge_word(Side::One, w.edge)));
        }
        out.extend(w.factors.iter().cloned());
        out
    }

    pub fn multiply(&self, a: &AmalgamWord, b: &AmalgamWord) -> AmalgamWord {
        let mut raw = self.raw(a);
        raw.extend(self.raw(b));
        self.reduce(&raw)
    }

    pub fn product(&self, words: &[&AmalgamWord]) -> AmalgamWord {
        let raw: Vec<Factor> = words.iter().flat_map(|w| self.raw(w)).collect();
        self.reduce(&raw)
    }

    pub fn invert(&self, w: &AmalgamWord) -> AmalgamWord {
        let raw: Vec<Factor> = self.raw(w).iter().rev().map(|(s, f)| (*s, self.vertex(*s).inv(f))).collect();
        self.reduce(&raw)
    }

    pub fn equal(&self, a: &AmalgamWord, b: &AmalgamWord) -> bool {
        self.multiply(a, &self.invert(b)).is_identity()
    }

    /// `x w x⁻¹`.
    pub fn conjugate(&self, x: &AmalgamWord, w: &AmalgamWord) -> AmalgamWord {
        self.product(&[x, w, &self.invert(x)])
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(&self, x: &AmalgamWord, y: &AmalgamWord) -> AmalgamWord {
        self.product(&[x, y, &self.invert(x), &self.invert(y)])
    }

    /// Conjugates by the last factor while the first and last factors lie on
    /// the same side.
    pub fn cyclic_reduce(&self, w: &AmalgamWord) -> AmalgamWord {
        let mut w = w.clone();
        while w.factors.len() >= 2 && w.factors[0].0 == w.factors[w.factors.len() - 1].0 {
            let last = w.factors.pop().expect("len >= 2");
            let mut raw = vec![last];
            raw.extend(w.factors);
            w = self.reduce(&raw);
        }
        w
    }

    /// Length of a cyclically reduced conjugate. For values `>= 2` this is a
    /// conjugacy invariant.
    pub fn cyclic_reduced_length(&self, w: &AmalgamWord) -> usize {
        self.cyclic_reduce(w).len()
    }

    /// Conjugator candidates: an edge element `(p, q)` with `|p|,|q| <=
    /// edge_bound` followed by at most `depth` single-syllable factors.
    /// Returns the first `x` with `x u x⁻¹ = v`. `None` only means nothing was
    /// found inside the bounds.
    pub fn search_conjugator(
        &self,
        u: &AmalgamWord,
        v: &AmalgamWord,
        depth: usize,
        edge_bound: i64,
    ) -> Option<AmalgamWord> {
        let mut atoms: Vec<Factor> = Vec::new();
        for side in [Side::One, Side::Two] {
            let g = self.vertex(side);
            for (gen, fiber) in [(Gen::C1, super::sfs::Fiber::One), (Gen::C2, super::sfs::Fiber::Two)] {
                for e in 1..g.alpha(fiber) {
                    atoms.push((side, g.normalize(&[(gen, e)])));
                }
            }
        }
        let mut edges: Vec<(i64, i64)> =
            (-edge_bound..=edge_bound).flat_map(|p| (-edge_bound..=edge_bound).map(move |q| (p, q))).collect();
        edges.sort_by_key(|&(p, q)| (p.abs() + q.abs(), p, q));
        let v_inv = self.invert(v);

        let mut index = Vec::with_capacity(depth);
        for len in 0..=depth {
            index.clear();
            index.resize(len, 0usize);
            loop {
                for &e in &edges {
                    let mut raw = vec![(Side::One, self.edge_word(Side::One, e))];
                    raw.extend(index.iter().map(|&i| atoms[i].clone()));
                    let x = self.reduce(&raw);
                    if self.product(&[&x, u, &self.invert(&x), &v_inv]).is_identity() {
                        return Some(x);
                    }
                }
                // odometer over atom sequences of this length
                let mut k = len;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    index[k] += 1;
                    if index[k] < atoms.len() {
                        break;
                    }
                    index[k] = 0;
                    if k == 0 {
                        k = usize::MAX;
                        break;
                    }
                }
                if len == 0 || k == usize::MAX {
                    break;
                }
            }
        }
        None
    }
}
