//! Monomials in the four variables `a, b, c, d`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// One of the four coordinate variables of `k[a,b,c,d]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Variable {
    A,
    B,
    C,
    D,
}

impl Variable {
    pub const ALL: [Variable; 4] = [Variable::A, Variable::B, Variable::C, Variable::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Variable {
        Self::ALL[i]
    }

    pub fn name(self) -> char {
        ['a', 'b', 'c', 'd'][self.index()]
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponent vector `(e_a, e_b, e_c, e_d)`.
///
/// The derived order is lexicographic on the exponents, which is the order
/// used whenever generator sets are listed.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn new(ea: u32, eb: u32, ec: u32, ed: u32) -> Self {
        Monomial([ea, eb, ec, ed])
    }

    pub fn var(v: Variable) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Variable, e: u32) -> Self {
        let mut m = Self::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn exponents(&self) -> [u32; 4] {
        self.0
    }

    pub fn exp(&self, v: Variable) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(x, y)| x <= y)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, &e) in out.0.iter_mut().zip(other.0.iter()) {
            *o = (*o).max(e);
        }
        out
    }

    /// `self / divisor`, or `None` when `divisor` does not divide `self`.
    pub fn quotient(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let mut out = *self;
        for (o, &e) in out.0.iter_mut().zip(divisor.0.iter()) {
            *o -= e;
        }
        Some(out)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut out = self;
        for (o, &e) in out.0.iter_mut().zip(rhs.0.iter()) {
            *o += e;
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for v in Variable::ALL {
            match self.exp(v) {
                0 => {}
                1 => write!(f, "{v}")?,
                e => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}
