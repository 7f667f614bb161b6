//! ACM, Buchsbaum and Hartshorne-Rao diameter classification.
//!
//! "Isomorphic" curves are those related by one of the 24 symmetries of the
//! tetrahedron, so family tests scan the whole orbit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::{is_s_minimal, orbit, reduce_to_minimal, WeightVector};

/// Arithmetically Cohen-Macaulay: reduces to the trivial curve.
pub fn is_acm(w: &WeightVector) -> bool {
    reduce_to_minimal(w).result.is_zero()
}

/// ACM criterion for `(a1, 0, a3, a4, 0, a6)`, the curves supported on the
/// four lines of the complete intersection `(ac, bd)`.  Picture the lines as
/// the sides of a square: `a1` on top, `a6` at the bottom, `a3` left and
/// `a4` right, so each side meets its two neighbours.
pub fn schwartau_acm(a1: u32, a3: u32, a4: u32, a6: u32) -> bool {
    // (weight, weight of the opposite side) for lines L1, L3, L4, L6
    let sides = [(a1, a6), (a3, a4), (a4, a3), (a6, a1)];
    let zeros = sides.iter().filter(|(x, _)| *x == 0).count();
    let total = u64::from(a1) + u64::from(a3) + u64::from(a4) + u64::from(a6);
    match zeros {
        0 => {
            let lhs = i64::from(a1) + i64::from(a6);
            let rhs = i64::from(a3) + i64::from(a4);
            (lhs - rhs).abs() <= 1
        }
        1 => {
            let &(_, across) = sides.iter().find(|(x, _)| *x == 0).unwrap();
            // the two lines meeting the empty one are the remaining sides
            let adjacent = total - u64::from(across);
            u64::from(across) + 1 >= adjacent
        }
        // connected: at most one line, or two lines that are not opposite
        _ => !(a1 > 0 && a6 > 0 || a3 > 0 && a4 > 0),
    }
}

/// `a_i + 1 = a_j = a_{7-j} = a_{7-i} + 1` for some `i != j` in `{1,2,3}`,
/// with the remaining pair of weights zero.
pub fn buchsbaum_pattern(w: &WeightVector) -> bool {
    let a = |i: usize| w.weight(i);
    (1..=3).any(|i| {
        (1..=3).any(|j| {
            if i == j {
                return false;
            }
            let k = 6 - i - j;
            a(i) + 1 == a(j)
                && a(j) == a(7 - j)
                && a(7 - j) == a(7 - i) + 1
                && a(k) == 0
                && a(7 - k) == 0
        })
    })
}

fn pattern(w: &WeightVector, shape: impl Fn(u32) -> Option<[u32; 6]>) -> bool {
    shape(w.weight(1)).is_some_and(|p| p == w.as_array())
}

/// `(k, k-1, 0, 0, k-1, k)`, `k >= 1`.
fn family_buchsbaum(w: &WeightVector) -> bool {
    pattern(w, |k| (k >= 1).then(|| [k, k - 1, 0, 0, k - 1, k]))
}

/// `(k, k-1, 0, 0, k-1, k+1)`, `k >= 1`.
fn family_wide(w: &WeightVector) -> bool {
    pattern(w, |k| (k >= 1).then(|| [k, k - 1, 0, 0, k - 1, k + 1]))
}

/// `(k, k-2, 0, 0, k-1, k)`, `k >= 2`.
fn family_narrow(w: &WeightVector) -> bool {
    pattern(w, |k| (k >= 2).then(|| [k, k - 2, 0, 0, k - 1, k]))
}

/// `(a1, 0, 0, 0, 0, a6)`.
fn family_skew(w: &WeightVector) -> bool {
    let a = w.as_array();
    a[1..5].iter().all(|&x| x == 0)
}

fn orbit_has(w: &WeightVector, pred: impl Fn(&WeightVector) -> bool) -> bool {
    orbit(w).iter().any(pred)
}

/// Arithmetically Buchsbaum (ACM curves included).
pub fn is_buchsbaum(w: &WeightVector) -> bool {
    let m = reduce_to_minimal(w).result;
    m.is_zero() || orbit_has(&m, buchsbaum_pattern)
}

/// Diameter of the Hartshorne-Rao module, up to "more than two".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Diameter {
    Zero,
    One,
    Two,
    MoreThanTwo,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Diameter::Zero => "0",
            Diameter::One => "1",
            Diameter::Two => "2",
            Diameter::MoreThanTwo => ">2",
        })
    }
}

pub fn hr_diameter_class(w: &WeightVector) -> Diameter {
    let m = reduce_to_minimal(w).result;
    if m.is_zero() {
        Diameter::Zero
    } else if orbit_has(&m, buchsbaum_pattern) {
        Diameter::One
    } else if orbit_has(&m, |v| family_wide(v) || family_narrow(v)) {
        Diameter::Two
    } else {
        Diameter::MoreThanTwo
    }
}

/// Families of curves known to be unobstructed with a generically smooth
/// Hilbert scheme component of dimension `4 · deg C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnobstructedFamily {
    Acm,
    /// `(k, k-1, 0, 0, k-1, k)`
    Buchsbaum,
    /// `(k, k-1, 0, 0, k-1, k+1)`
    DiameterTwoWide,
    /// `(k, k-2, 0, 0, k-1, k)`
    DiameterTwoNarrow,
    /// `(a1, 0, 0, 0, 0, a6)`
    SkewPair,
}

impl fmt::Display for UnobstructedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnobstructedFamily::Acm => "ACM",
            UnobstructedFamily::Buchsbaum => "buchsbaum (k,k-1,0,0,k-1,k)",
            UnobstructedFamily::DiameterTwoWide => "diameter-two (k,k-1,0,0,k-1,k+1)",
            UnobstructedFamily::DiameterTwoNarrow => "diameter-two (k,k-2,0,0,k-1,k)",
            UnobstructedFamily::SkewPair => "skew-pair (a1,0,0,0,0,a6)",
        })
    }
}

/// The family that makes `w` known to be unobstructed, if any.  `None` means
/// "not covered", not "obstructed".
///
/// Families are matched against the orbit of `w` itself: membership of the
/// S-minimal reduction says nothing about the curve's own Hilbert scheme.
pub fn known_unobstructed(w: &WeightVector) -> Option<UnobstructedFamily> {
    if is_acm(w) {
        return Some(UnobstructedFamily::Acm);
    }
    type Test = (UnobstructedFamily, fn(&WeightVector) -> bool);
    let tests: [Test; 4] = [
        (UnobstructedFamily::Buchsbaum, family_buchsbaum),
        (UnobstructedFamily::DiameterTwoWide, family_wide),
        (UnobstructedFamily::DiameterTwoNarrow, family_narrow),
        (UnobstructedFamily::SkewPair, family_skew),
    ];
    let orb = orbit(w);
    tests
        .into_iter()
        .find(|(_, pred)| orb.iter().any(pred))
        .map(|(fam, _)| fam)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinearResolution {
    Yes,
    Unknown,
}

/// Non-trivial S-minimal curves have linear resolutions; nothing is claimed
/// for the rest.
pub fn linear_resolution_known(w: &WeightVector) -> LinearResolution {
    if !w.is_zero() && is_s_minimal(w) {
        LinearResolution::Yes
    } else {
        LinearResolution::Unknown
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClassification {
    pub trivial: bool,
    pub s_minimal: bool,
    pub acm: bool,
    pub buchsbaum: bool,
    pub hr_diameter: Diameter,
    pub known_unobstructed: Option<UnobstructedFamily>,
    pub linear_resolution: LinearResolution,
    pub reduction_count: usize,
    pub minimal_curve: WeightVector,
}

pub fn classify(w: &WeightVector) -> CurveClassification {
    let trace = reduce_to_minimal(w);
    let hr_diameter = hr_diameter_class(w);
    CurveClassification {
        trivial: w.is_zero(),
        s_minimal: is_s_minimal(w),
        acm: trace.result.is_zero(),
        buchsbaum: hr_diameter <= Diameter::One,
        hr_diameter,
        known_unobstructed: known_unobstructed(w),
        linear_resolution: linear_resolution_known(w),
        reduction_count: trace.len(),
        minimal_curve: trace.result,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(a: [u32; 6]) -> WeightVector {
        WeightVector::new(a)
    }

    #[test]
    fn acm_examples() {
        assert!(is_acm(&wv([6, 0, 8, 1, 0, 4])));
        assert!(!is_acm(&wv([1, 0, 0, 0, 0, 1])));
        for d in 0..=4 {
            assert!(is_acm(&wv([d; 6])), "({d},...,{d})");
        }
    }

    #[test]
    fn schwartau_examples() {
        assert!(schwartau_acm(1, 1, 1, 1));
        assert!(!schwartau_acm(1, 0, 0, 1));
        assert!(schwartau_acm(1, 1, 0, 0));
        assert!(schwartau_acm(0, 0, 0, 0));
        assert!(schwartau_acm(3, 0, 0, 0));
        // one zero (a3): a4 + 1 >= a1 + a6
        assert!(schwartau_acm(1, 0, 3, 1));
        assert!(schwartau_acm(2, 0, 3, 2));
        assert!(!schwartau_acm(2, 0, 2, 2));
    }

    #[test]
    fn buchsbaum_examples() {
        assert!(is_buchsbaum(&wv([1, 0, 0, 0, 0, 1])));
        assert!(is_buchsbaum(&wv([2, 1, 0, 0, 1, 2])));
        assert!(!is_buchsbaum(&wv([2, 0, 0, 0, 0, 2])));
        assert!(buchsbaum_pattern(&wv([2, 1, 0, 0, 1, 2])));
        assert!(!buchsbaum_pattern(&wv([2, 1, 0, 0, 1, 3])));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(hr_diameter_class(&wv([1, 0, 0, 0, 0, 2])), Diameter::Two);
        assert_eq!(
            hr_diameter_class(&wv([2, 0, 0, 0, 0, 2])),
            Diameter::MoreThanTwo
        );
        assert_eq!(hr_diameter_class(&WeightVector::ZERO), Diameter::Zero);
        assert_eq!(hr_diameter_class(&wv([1, 0, 0, 0, 0, 1])), Diameter::One);
        assert_eq!(hr_diameter_class(&wv([3, 1, 0, 0, 2, 3])), Diameter::Two);
    }

    #[test]
    fn unobstructed_examples() {
        assert_eq!(
            known_unobstructed(&wv([3, 0, 0, 0, 0, 5])),
            Some(UnobstructedFamily::SkewPair)
        );
        assert_eq!(
            known_unobstructed(&WeightVector::ZERO),
            Some(UnobstructedFamily::Acm)
        );
        assert_eq!(
            known_unobstructed(&wv([2, 1, 0, 0, 1, 2])),
            Some(UnobstructedFamily::Buchsbaum)
        );
        // reduces to (1,0,0,0,0,2) but is not itself in any family
        assert_eq!(
            reduce_to_minimal(&wv([2, 0, 0, 1, 1, 2])).result,
            wv([1, 0, 0, 0, 0, 2])
        );
        assert_eq!(known_unobstructed(&wv([2, 0, 0, 1, 1, 2])), None);
        assert_eq!(known_unobstructed(&wv([3, 1, 1, 1, 1, 4])), None);
    }

    #[test]
    fn linear_resolution_examples() {
        assert_eq!(
            linear_resolution_known(&wv([3, 1, 1, 1, 1, 4])),
            LinearResolution::Yes
        );
        assert_eq!(
            linear_resolution_known(&wv([5, 1, 3, 2, 2, 5])),
            LinearResolution::Unknown
        );
        assert_eq!(
            linear_resolution_known(&WeightVector::ZERO),
            LinearResolution::Unknown
        );
    }

    #[test]
    fn classification_record() {
        let c = classify(&wv([1, 0, 0, 0, 0, 1]));
        assert!(!c.acm && c.buchsbaum && c.s_minimal && !c.trivial);
        assert_eq!(c.hr_diameter, Diameter::One);
        let c = classify(&wv([6, 0, 8, 1, 0, 4]));
        assert!(c.acm && c.buchsbaum);
        assert_eq!(c.reduction_count, 10);
        let c = classify(&WeightVector::ZERO);
        assert!(c.trivial && c.acm);
    }
}
