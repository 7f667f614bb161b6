//! Weight vectors and the combinatorics of the coordinate tetrahedron.
//!
//! The six lines of the tetrahedron are indexed `1..=6`:
//!
//! | line | ideal   |
//! |------|---------|
//! | L1   | (a, b)  |
//! | L2   | (a, c)  |
//! | L3   | (a, d)  |
//! | L4   | (b, c)  |
//! | L5   | (b, d)  |
//! | L6   | (c, d)  |
//!
//! Lines `i` and `7 - i` are skew.  A weight vector `(a1, ..., a6)` stands
//! for the ideal `(a,b)^a1 ∩ (a,c)^a2 ∩ ... ∩ (c,d)^a6`.

mod reduction;
mod symmetry;

#[cfg(test)]
pub(crate) use reduction::step_unchecked as reduction_step_unchecked;
pub use reduction::{
    applicable_reductions, apply_reduction, facet_weights, is_reducible, is_s_minimal, max_line,
    reduce_to_minimal, ReductionStep, ReductionTrace,
};
pub use symmetry::{canonical_form, canonicalize, orbit, Symmetry};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::monomial::Variable;

/// Variable pairs spanning the six lines, zero-based.
pub(crate) const LINES: [[usize; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Zero-based index of the line spanned by two distinct variables.
pub(crate) fn line_of(p: usize, q: usize) -> usize {
    let (lo, hi) = if p < q { (p, q) } else { (q, p) };
    LINES
        .iter()
        .position(|l| l[0] == lo && l[1] == hi)
        .expect("distinct variables span a line")
}

/// Zero-based index of the line skew to `line`.
pub(crate) fn opposite(line: usize) -> usize {
    5 - line
}

/// Line multiplicities of a tetrahedral curve.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct WeightVector([u32; 6]);

impl WeightVector {
    pub const ZERO: WeightVector = WeightVector([0; 6]);

    pub fn new(a: [u32; 6]) -> Self {
        WeightVector(a)
    }

    pub fn as_array(&self) -> [u32; 6] {
        self.0
    }

    /// Weight of line `i`, with `i` in `1..=6`.
    pub fn weight(&self, i: usize) -> u32 {
        assert!((1..=6).contains(&i), "line index {i} out of range");
        self.0[i - 1]
    }

    pub(crate) fn at(&self, line: usize) -> u32 {
        self.0[line]
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 6]
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    /// Every weight vector with all entries in `0..=bound`, in lexicographic order.
    pub fn all_bounded(bound: u32) -> impl Iterator<Item = WeightVector> {
        let side = u64::from(bound) + 1;
        (0..side.pow(6)).map(move |mut code| {
            let mut a = [0u32; 6];
            for slot in a.iter_mut().rev() {
                *slot = (code % side) as u32;
                code /= side;
            }
            WeightVector(a)
        })
    }
}

impl From<[u32; 6]> for WeightVector {
    fn from(a: [u32; 6]) -> Self {
        WeightVector(a)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.0;
        write!(
            f,
            "[{}, {}, {}, {}, {}, {}]",
            a[0], a[1], a[2], a[3], a[4], a[5]
        )
    }
}

/// Accepts `a1,a2,a3,a4,a5,a6`, optionally wrapped in `[...]` or `(...)`.
impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = match (t.chars().next(), t.chars().last()) {
            (Some('['), Some(']')) | (Some('('), Some(')')) if t.len() >= 2 => &t[1..t.len() - 1],
            _ => t,
        };
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::Parse(format!(
                "expected 6 comma-separated weights, found {} in {s:?}",
                parts.len()
            )));
        }
        let mut a = [0u32; 6];
        for (slot, p) in a.iter_mut().zip(&parts) {
            *slot = p
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad weight {p:?}: {e}")))?;
        }
        Ok(WeightVector(a))
    }
}

/// The four faces of the tetrahedron, named by the variable common to the
/// ideals of their three edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Facet {
    A,
    B,
    C,
    D,
}

impl Facet {
    /// Scan order used when choosing among facets of equal weight.
    pub const ALL: [Facet; 4] = [Facet::A, Facet::B, Facet::C, Facet::D];

    pub fn pivot(self) -> Variable {
        Variable::from_index(self as usize)
    }

    /// One-based indices of the lines through the pivot, i.e. the lines whose
    /// weights a reduction of this facet decrements.
    pub fn reduced_lines(self) -> [usize; 3] {
        let mut out = [0; 3];
        for (slot, l) in out.iter_mut().zip(self.lines()) {
            *slot = l + 1;
        }
        out
    }

    pub(crate) fn lines(self) -> impl Iterator<Item = usize> {
        let v = self.pivot().index();
        (0..6).filter(move |&l| LINES[l].contains(&v))
    }

    pub fn tag(self) -> char {
        ['A', 'B', 'C', 'D'][self as usize]
    }

    pub fn weight(self, w: &WeightVector) -> u64 {
        self.lines().map(|l| u64::from(w.at(l))).sum()
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}
