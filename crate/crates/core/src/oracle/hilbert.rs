//! Hilbert functions of `R/I` by counting standard monomials.

use super::{MonomialIdeal, OracleCaps};
use crate::error::{Error, Result};

/// Membership table: a monomial `a^i b^j c^k d^l` lies in the ideal iff
/// `l >= threshold(min(i, ma), min(j, mb), min(k, mc))`, where `ma, mb, mc`
/// are the largest generator exponents of `a, b, c`.
struct StandardMonomials {
    bounds: [usize; 3],
    threshold: Vec<u32>,
}

impl StandardMonomials {
    fn new(ideal: &MonomialIdeal) -> Self {
        let mut bounds = [0usize; 3];
        for g in ideal.generators() {
            for (v, b) in bounds.iter_mut().enumerate() {
                *b = (*b).max(g.0[v] as usize);
            }
        }
        let [ma, mb, mc] = bounds;
        let mut threshold = vec![u32::MAX; (ma + 1) * (mb + 1) * (mc + 1)];
        for i in 0..=ma {
            for j in 0..=mb {
                for k in 0..=mc {
                    let t = ideal
                        .generators()
                        .iter()
                        .filter(|g| {
                            g.0[0] as usize <= i && g.0[1] as usize <= j && g.0[2] as usize <= k
                        })
                        .map(|g| g.0[3])
                        .min()
                        .unwrap_or(u32::MAX);
                    threshold[(i * (mb + 1) + j) * (mc + 1) + k] = t;
                }
            }
        }
        StandardMonomials { bounds, threshold }
    }

    fn threshold(&self, i: u32, j: u32, k: u32) -> u32 {
        let [ma, mb, mc] = self.bounds;
        let (i, j, k) = (
            (i as usize).min(ma),
            (j as usize).min(mb),
            (k as usize).min(mc),
        );
        self.threshold[(i * (mb + 1) + j) * (mc + 1) + k]
    }

    /// Number of degree-`t` monomials outside the ideal.
    fn count(&self, t: u32) -> u64 {
        let mut n = 0;
        for i in 0..=t {
            for j in 0..=t - i {
                for k in 0..=t - i - j {
                    if t - i - j - k < self.threshold(i, j, k) {
                        n += 1;
                    }
                }
            }
        }
        n
    }
}

fn check_degree(t: u32, caps: &OracleCaps) -> Result<()> {
    if t > caps.max_degree {
        return Err(Error::CapExceeded {
            cap: "max_degree",
            limit: u64::from(caps.max_degree),
            needed: u64::from(t),
        });
    }
    Ok(())
}

/// `dim_k (R/I)_t`.
pub fn hilbert_function(ideal: &MonomialIdeal, t: u32, caps: &OracleCaps) -> Result<u64> {
    check_degree(t, caps)?;
    Ok(StandardMonomials::new(ideal).count(t))
}

/// Hilbert function values of a one-dimensional quotient and the fitted
/// polynomial `degree · t + 1 - genus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// `values[t]` for `t = 0..values.len()`.
    pub values: Vec<u64>,
    pub fitted_degree: u64,
    pub fitted_genus: i64,
    /// Smallest `t` from which the function agrees with the polynomial.
    pub stabilization_degree: u32,
}

impl HilbertData {
    pub fn polynomial_at(&self, t: i64) -> i64 {
        self.fitted_degree as i64 * t + 1 - self.fitted_genus
    }
}

/// Fits the Hilbert polynomial of a curve.
///
/// Values are enumerated up to `D - 3 + window`, where `D` is the degree of
/// the lcm of all generators; the Taylor resolution bounds the numerator of
/// the Hilbert series by `D`, so the function is polynomial from `D - 3` on
/// and at least `window` consecutive agreeing values are always observed.
pub fn hilbert_polynomial(
    ideal: &MonomialIdeal,
    window: u32,
    caps: &OracleCaps,
) -> Result<HilbertData> {
    let window = window.max(2);
    let bound = ideal.lcm_degree().saturating_sub(3);
    let last = bound + u64::from(window) - 1;
    let last = u32::try_from(last).unwrap_or(u32::MAX);
    check_degree(last, caps)?;

    let counter = StandardMonomials::new(ideal);
    let values: Vec<u64> = (0..=last).map(|t| counter.count(t)).collect();
    let top = values[last as usize] as i64;
    let slope = top - values[last as usize - 1] as i64;
    // value at t = 0 of the line through the last two points
    let constant = top - slope * i64::from(last);
    let mut stabilization = last;
    while stabilization > 0 {
        let t = stabilization - 1;
        if values[t as usize] as i64 != slope * i64::from(t) + constant {
            break;
        }
        stabilization = t;
    }
    Ok(HilbertData {
        values,
        fitted_degree: slope.max(0) as u64,
        fitted_genus: 1 - constant,
        stabilization_degree: stabilization,
    })
}
