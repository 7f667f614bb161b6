//! The symmetric group on the four vertices `{a, b, c, d}`, acting on lines,
//! weight vectors and monomials.

use std::cmp::Reverse;

use super::{line_of, WeightVector, LINES};
use crate::monomial::{Monomial, Variable};

/// A permutation of the variables; variable `v` is sent to `perm[v]`.
///
/// Acting on weight vectors it moves the weight of line `{p, q}` to line
/// `{σp, σq}`, so that `I(σ·w) = σ(I(w))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symmetry {
    perm: [usize; 4],
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { perm: [0, 1, 2, 3] };

    pub fn from_permutation(perm: [usize; 4]) -> Option<Symmetry> {
        let mut seen = [false; 4];
        for &p in &perm {
            if p >= 4 || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        Some(Symmetry { perm })
    }

    /// All 24 symmetries in lexicographic order of their permutation; the
    /// identity comes first.
    pub fn all() -> Vec<Symmetry> {
        let mut out = Vec::with_capacity(24);
        for p0 in 0..4 {
            for p1 in 0..4 {
                for p2 in 0..4 {
                    for p3 in 0..4 {
                        if let Some(s) = Symmetry::from_permutation([p0, p1, p2, p3]) {
                            out.push(s);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn permutation(&self) -> [usize; 4] {
        self.perm
    }

    pub fn inverse(&self) -> Symmetry {
        let mut inv = [0; 4];
        for (v, &p) in self.perm.iter().enumerate() {
            inv[p] = v;
        }
        Symmetry { perm: inv }
    }

    pub fn variable(&self, v: Variable) -> Variable {
        Variable::from_index(self.perm[v.index()])
    }

    /// Image of a zero-based line index.
    pub(crate) fn line_image(&self, line: usize) -> usize {
        let [p, q] = LINES[line];
        line_of(self.perm[p], self.perm[q])
    }

    /// The induced permutation of the one-based line indices: entry `i - 1`
    /// is the image of line `i`.
    pub fn line_table(&self) -> [usize; 6] {
        let mut t = [0; 6];
        for (l, slot) in t.iter_mut().enumerate() {
            *slot = self.line_image(l) + 1;
        }
        t
    }

    pub fn apply(&self, w: &WeightVector) -> WeightVector {
        let mut out = [0u32; 6];
        for l in 0..6 {
            out[self.line_image(l)] = w.at(l);
        }
        WeightVector::new(out)
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Monomial {
        let mut out = [0u32; 4];
        for (v, &e) in m.0.iter().enumerate() {
            out[self.perm[v]] = e;
        }
        Monomial(out)
    }
}

/// Distinct images of `w` under the 24 symmetries, sorted.
pub fn orbit(w: &WeightVector) -> Vec<WeightVector> {
    let mut out: Vec<WeightVector> = Symmetry::all().iter().map(|s| s.apply(w)).collect();
    out.sort();
    out.dedup();
    out
}

fn canonical_key(w: &WeightVector) -> [u32; 6] {
    let mut a = w.as_array();
    a.reverse();
    a
}

/// The canonical representative of `w` together with a symmetry `σ` such
/// that `σ·w` is that representative.
///
/// The representative maximises `(a6, a5, ..., a1)` lexicographically, so its
/// last entry is a maximal weight.  Among symmetries reaching it the first in
/// [`Symmetry::all`] order is returned, hence the identity for vectors that
/// are already canonical.
pub fn canonical_form(w: &WeightVector) -> (WeightVector, Symmetry) {
    Symmetry::all()
        .into_iter()
        .map(|s| (s.apply(w), s))
        .enumerate()
        .max_by_key(|(i, (img, _))| (canonical_key(img), Reverse(*i)))
        .map(|(_, pair)| pair)
        .expect("symmetry group is non-empty")
}

pub fn canonicalize(w: &WeightVector) -> WeightVector {
    canonical_form(w).0
}
