//! Degree, genus and counts of S-minimal curves.

use crate::cell::resolution_hilbert_function;
use crate::curve::{canonicalize, is_s_minimal, WeightVector};
use crate::error::{Error, Result};
use crate::oracle::{hilbert_polynomial, tetrahedral_ideal, HilbertData, OracleCaps};

/// `Σ C(a_i + 1, 2)`.
pub fn degree(w: &WeightVector) -> u64 {
    w.as_array()
        .iter()
        .map(|&a| u64::from(a) * (u64::from(a) + 1) / 2)
        .sum()
}

fn minimal_canonical(w: &WeightVector) -> Result<WeightVector> {
    if w.is_zero() {
        return Err(Error::TrivialCurve);
    }
    if !is_s_minimal(w) {
        return Err(Error::NotSMinimal(*w));
    }
    Ok(canonicalize(w))
}

/// Smallest degree of a generator, `a1 + a6` after canonicalising.
pub fn initial_degree(w: &WeightVector) -> Result<u64> {
    let c = minimal_canonical(w)?;
    Ok(u64::from(c.weight(1)) + u64::from(c.weight(6)))
}

/// `deg · (s - 1) + 1 - C(s + 2, 3)` with `s = a1 + a6`.
pub fn genus_minimal(w: &WeightVector) -> Result<i128> {
    let s = i128::from(initial_degree(w)?);
    let deg = i128::from(degree(w));
    Ok(deg * (s - 1) + 1 - (s + 2) * (s + 1) * s / 6)
}

/// Arithmetic genus of any non-trivial curve; non-minimal curves go through
/// the Hilbert polynomial.
pub fn genus(w: &WeightVector, caps: &OracleCaps) -> Result<i128> {
    if w.is_zero() {
        return Err(Error::TrivialCurve);
    }
    if is_s_minimal(w) {
        return genus_minimal(w);
    }
    Ok(i128::from(hilbert_data(w, caps)?.fitted_genus))
}

/// Hilbert data of the curve from the oracle, using a window of
/// `max(4, Σ a_i)` degrees.  For S-minimal curves the values are also checked
/// against those predicted by the linear resolution.
pub fn hilbert_data(w: &WeightVector, caps: &OracleCaps) -> Result<HilbertData> {
    let window = u32::try_from(w.total().max(4)).unwrap_or(u32::MAX);
    let data = hilbert_polynomial(&tetrahedral_ideal(w), window, caps)?;
    if !w.is_zero() && is_s_minimal(w) {
        for (t, &v) in data.values.iter().enumerate() {
            let predicted = resolution_hilbert_function(w, t as u32)?;
            if predicted != v {
                return Err(Error::Inconsistent(format!(
                    "Hilbert function of {w} at {t}: enumerated {v}, resolution gives {predicted}"
                )));
            }
        }
    }
    Ok(data)
}

/// Number of S-minimal vectors with `a6 = m` the maximal entry:
///
/// `Σ_{a1 <= m} Σ_{a2, a5 < a1} min(a1 - a5, m - a2) · min(a1 - a2, m - a5)`.
pub fn count_minimal(m: u32) -> u64 {
    let m = u64::from(m);
    let mut n = 0;
    for a1 in 0..=m {
        for a2 in 0..a1 {
            for a5 in 0..a1 {
                n += (a1 - a5).min(m - a2) * (a1 - a2).min(m - a5);
            }
        }
    }
    n
}

/// The lower estimate
/// `Σ_{a1 <= m} Σ_{a2 < a1} [Σ_{k = a1-a2+1}^{a1} k² + (a1 - a2)³]`.
pub fn count_lower_bound(m: u32) -> u64 {
    let m = u64::from(m);
    let mut n = 0;
    for a1 in 0..=m {
        for a2 in 0..a1 {
            let squares: u64 = (a1 - a2 + 1..=a1).map(|k| k * k).sum();
            n += squares + (a1 - a2).pow(3);
        }
    }
    n
}

/// All S-minimal vectors with `a6 = m` the maximal entry, in lexicographic
/// order.  Empty for `m = 0`.
pub fn enumerate_minimal(m: u32) -> Vec<WeightVector> {
    let mut out = Vec::new();
    for a1 in 0..=m {
        for a2 in 0..a1 {
            for a3 in 0..a1 {
                for a4 in 0..a1 {
                    for a5 in 0..a1 {
                        let a3_ok = a3 < (a1 - a5).min(m - a2);
                        let a4_ok = a4 < (a1 - a2).min(m - a5);
                        if a3_ok && a4_ok {
                            out.push(WeightVector::new([a1, a2, a3, a4, a5, m]));
                        }
                    }
                }
            }
        }
    }
    out
}
