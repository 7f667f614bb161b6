//! The four facet reductions (basic double links) and the reduction algorithm.

use serde::{Deserialize, Serialize};

use super::{opposite, Facet, WeightVector, LINES};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, Variable};

/// Weights of facets A, B, C, D.
pub fn facet_weights(w: &WeightVector) -> [u64; 4] {
    Facet::ALL.map(|f| f.weight(w))
}

/// Whether the inequality system of `facet` holds: for every line `{x, y}`
/// not through the pivot `v`, `w{v,x} + w{v,y} >= w{x,y}`.
pub fn is_reducible(w: &WeightVector, facet: Facet) -> bool {
    let v = facet.pivot().index();
    LINES.iter().enumerate().all(|(l, &[x, y])| {
        if x == v || y == v {
            return true;
        }
        let vx = u64::from(w.at(super::line_of(v, x)));
        let vy = u64::from(w.at(super::line_of(v, y)));
        vx + vy >= u64::from(w.at(l))
    })
}

pub fn applicable_reductions(w: &WeightVector) -> Result<Vec<Facet>> {
    if w.is_zero() {
        return Err(Error::TrivialCurve);
    }
    Ok(Facet::ALL
        .into_iter()
        .filter(|&f| is_reducible(w, f))
        .collect())
}

/// One basic double link `I(before) = G·I(after) + (F)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub facet: Facet,
    pub f: Monomial,
    pub g: Variable,
    pub before: WeightVector,
    pub after: WeightVector,
}

pub fn apply_reduction(w: &WeightVector, facet: Facet) -> Result<ReductionStep> {
    if w.is_zero() {
        return Err(Error::TrivialCurve);
    }
    if !is_reducible(w, facet) {
        return Err(Error::NotReducible { facet, weights: *w });
    }
    Ok(step_unchecked(w, facet))
}

/// Builds the step for `facet` without checking its inequalities; the
/// resulting identity only holds when they are satisfied.
pub(crate) fn step_unchecked(w: &WeightVector, facet: Facet) -> ReductionStep {
    let g = facet.pivot();
    let mut after = w.as_array();
    let mut f = Monomial::ONE;
    for l in facet.lines() {
        let other = LINES[l].iter().copied().find(|&u| u != g.index()).unwrap();
        f.0[other] = w.at(l);
        after[l] = after[l].saturating_sub(1);
    }
    ReductionStep {
        facet,
        f,
        g,
        before: *w,
        after: WeightVector::new(after),
    }
}

/// One-based index of the first line of maximal weight (1 for the zero vector).
pub fn max_line(w: &WeightVector) -> usize {
    first_max(&w.as_array()) + 1
}

/// Index of the first strict maximum in a left-to-right scan.
fn first_max<T: PartialOrd + Copy>(xs: &[T]) -> usize {
    let mut best = 0;
    for (i, &x) in xs.iter().enumerate().skip(1) {
        if x > xs[best] {
            best = i;
        }
    }
    best
}

/// No facet of `w` can be reduced.  The trivial curve counts as S-minimal.
///
/// With `i` the first line of maximal weight and `W` the maximal facet weight,
/// `w` is S-minimal exactly when `a_i + a_{7-i} > W`.
pub fn is_s_minimal(w: &WeightVector) -> bool {
    if w.is_zero() {
        return true;
    }
    pair_weight(w) > max_facet_weight(w)
}

fn pair_weight(w: &WeightVector) -> u64 {
    let i = max_line(w) - 1;
    u64::from(w.at(i)) + u64::from(w.at(opposite(i)))
}

fn max_facet_weight(w: &WeightVector) -> u64 {
    facet_weights(w).into_iter().max().unwrap()
}

/// The chain of reductions from `start` to an S-minimal curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub start: WeightVector,
    pub steps: Vec<ReductionStep>,
    pub result: WeightVector,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Repeatedly reduces the first facet of maximal weight (scan order A, B, C,
/// D) until the curve is S-minimal.
pub fn reduce_to_minimal(w: &WeightVector) -> ReductionTrace {
    let mut current = *w;
    let mut steps = Vec::new();
    loop {
        if current.is_zero() {
            break;
        }
        let weights = facet_weights(&current);
        let k = first_max(&weights);
        if pair_weight(&current) > weights[k] {
            break;
        }
        // A facet of maximal weight is always reducible on a non-minimal curve.
        let step = apply_reduction(&current, Facet::ALL[k]).expect("maximal facet is reducible");
        current = step.after;
        steps.push(step);
    }
    ReductionTrace {
        start: *w,
        steps,
        result: current,
    }
}
