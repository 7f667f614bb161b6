use std::fmt;

use crate::curve::{ReductionStep, WeightVector, LINES};
use crate::monomial::{Monomial, Variable};

/// A monomial ideal stored as its minimal generators, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        MonomialIdeal { gens: Vec::new() }
    }

    pub fn unit() -> Self {
        MonomialIdeal {
            gens: vec![Monomial::ONE],
        }
    }

    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn from_generators<I: IntoIterator<Item = Monomial>>(gens: I) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by_key(|m| (m.degree(), *m));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort();
        MonomialIdeal { gens: kept }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// No generators, i.e. the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Generated by pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::from_generators(
            self.gens
                .iter()
                .flat_map(|g| other.gens.iter().map(move |h| g.lcm(h))),
        )
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::from_generators(self.gens.iter().chain(other.gens.iter()).copied())
    }

    pub fn scale(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal {
            gens: self.gens.iter().map(|g| *g * *m).collect(),
        }
    }

    /// Smallest generator degree, `None` for the zero ideal.
    pub fn initial_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).min()
    }

    /// Degree of the lcm of all generators.
    pub(crate) fn lcm_degree(&self) -> u64 {
        self.gens
            .iter()
            .fold(Monomial::ONE, |acc, g| acc.lcm(g))
            .degree()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// `(x, y)^n`.
pub fn power_ideal(x: Variable, y: Variable, n: u32) -> MonomialIdeal {
    assert_ne!(x, y, "power_ideal needs two distinct variables");
    MonomialIdeal::from_generators(
        (0..=n).map(|p| Monomial::var_pow(x, p) * Monomial::var_pow(y, n - p)),
    )
}

/// The intersection of the six line powers.
pub fn tetrahedral_ideal(w: &WeightVector) -> MonomialIdeal {
    LINES
        .iter()
        .enumerate()
        .map(|(l, &[p, q])| power_ideal(Variable::from_index(p), Variable::from_index(q), w.at(l)))
        .fold(MonomialIdeal::unit(), |acc, j| acc.intersect(&j))
}

/// Checks `G·I(after) + (F) = I(before)` on minimal generators.
pub fn bdl_check(step: &ReductionStep) -> bool {
    let linked = tetrahedral_ideal(&step.after)
        .scale(&Monomial::var(step.g))
        .sum(&MonomialIdeal::from_generators([step.f]));
    linked == tetrahedral_ideal(&step.before)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Variable::*;

    fn m(e: [u32; 4]) -> Monomial {
        Monomial(e)
    }

    #[test]
    fn powers() {
        assert!(power_ideal(A, B, 0).is_unit());
        assert_eq!(
            power_ideal(A, B, 2).generators(),
            &[m([0, 2, 0, 0]), m([1, 1, 0, 0]), m([2, 0, 0, 0])]
        );
        assert_eq!(
            power_ideal(C, D, 1).generators(),
            &[m([0, 0, 0, 1]), m([0, 0, 1, 0])]
        );
    }

    #[test]
    fn intersections() {
        let a = MonomialIdeal::from_generators([Monomial::var(A)]);
        let b = MonomialIdeal::from_generators([Monomial::var(B)]);
        assert_eq!(a.intersect(&b).generators(), &[m([1, 1, 0, 0])]);
        let ab = power_ideal(A, B, 1);
        assert_eq!(ab.intersect(&MonomialIdeal::unit()), ab);
        let skew = ab.intersect(&power_ideal(C, D, 1));
        let expect = MonomialIdeal::from_generators([
            m([1, 0, 1, 0]),
            m([1, 0, 0, 1]),
            m([0, 1, 1, 0]),
            m([0, 1, 0, 1]),
        ]);
        assert_eq!(skew, expect);
        assert!(ab.intersect(&MonomialIdeal::zero()).is_zero());
    }

    #[test]
    fn membership() {
        let ac = MonomialIdeal::from_generators([m([1, 0, 1, 0])]);
        assert!(ac.contains(&m([1, 1, 1, 0])));
        assert!(MonomialIdeal::unit().contains(&Monomial::ONE));
        let a2 = MonomialIdeal::from_generators([m([2, 0, 0, 0])]);
        assert!(!a2.contains(&m([1, 1, 0, 0])));
        assert!(!MonomialIdeal::zero().contains(&Monomial::ONE));
    }

    #[test]
    fn minimalize_is_order_independent() {
        let gens = [
            m([1, 1, 0, 0]),
            m([1, 0, 0, 0]),
            m([0, 2, 1, 0]),
            m([2, 0, 3, 1]),
        ];
        let mut rev = gens;
        rev.reverse();
        let i = MonomialIdeal::from_generators(gens);
        assert_eq!(i, MonomialIdeal::from_generators(rev));
        assert_eq!(i.generators(), &[m([0, 2, 1, 0]), m([1, 0, 0, 0])]);
        assert_eq!(MonomialIdeal::from_generators(i.generators().to_vec()), i);
    }

    #[test]
    fn trivial_and_skew_curves() {
        assert!(tetrahedral_ideal(&WeightVector::ZERO).is_unit());
        assert_eq!(
            tetrahedral_ideal(&WeightVector::new([1, 0, 0, 0, 0, 1])),
            power_ideal(A, B, 1).intersect(&power_ideal(C, D, 1))
        );
    }

    #[test]
    fn six_lines_by_two_routes() {
        let i = tetrahedral_ideal(&WeightVector::new([1; 6]));
        // each line needs one variable off it; the minimal such monomials of
        // degree <= 4 are found independently by scanning
        let mut scanned = Vec::new();
        for e in 0..5u32.pow(4) {
            let mono = m([e % 5, (e / 5) % 5, (e / 25) % 5, e / 125]);
            if mono.degree() > 4 {
                continue;
            }
            let x = mono.0;
            if LINES.iter().all(|&[p, q]| x[p] + x[q] >= 1) {
                scanned.push(mono);
            }
        }
        assert_eq!(i, MonomialIdeal::from_generators(scanned));
        // squarefree cubics: a support must meet every pair of variables
        assert_eq!(i.len(), 4);
        assert!(i.contains(&Monomial::new(1, 1, 1, 1)));
        assert!(i.generators().iter().all(|g| g.degree() == 3));
    }

    #[test]
    fn bdl_examples() {
        use crate::curve::{apply_reduction, Facet};
        let s = apply_reduction(&WeightVector::new([1, 0, 0, 0, 0, 0]), Facet::A).unwrap();
        assert!(bdl_check(&s));
        let s = apply_reduction(&WeightVector::new([4, 2, 2, 1, 1, 4]), Facet::A).unwrap();
        assert!(bdl_check(&s));
        // (3,1,1,1,1,4) violates a2 + a3 >= a6; forcing the link breaks the identity
        let forced = crate::curve::reduction_step_unchecked(
            &WeightVector::new([3, 1, 1, 1, 1, 4]),
            Facet::A,
        );
        assert!(!bdl_check(&forced));
    }
}
