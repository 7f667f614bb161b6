//! Multigraded Betti numbers from upper Koszul simplicial complexes.
//!
//! For a multidegree `b`, `K^b = { τ ⊆ {a,b,c,d} : x^(b-τ) ∈ I }` and the
//! Betti number of the `i`-th module (generators at `i = 1`) in degree `b`
//! is `dim H̃_{i-2}(K^b; Q)`.

use std::collections::{BTreeMap, BTreeSet};

use super::homology::reduced_homology;
use super::{MonomialIdeal, OracleCaps};
use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

fn koszul_faces(ideal: &MonomialIdeal, b: &Monomial) -> Vec<u8> {
    (0u8..16)
        .filter(|&tau| {
            let mut e = b.0;
            for (v, slot) in e.iter_mut().enumerate() {
                if tau & (1 << v) != 0 {
                    if *slot == 0 {
                        return false;
                    }
                    *slot -= 1;
                }
            }
            ideal.contains(&Monomial(e))
        })
        .collect()
}

/// Non-zero multigraded Betti numbers keyed by `(i, multidegree)`.
///
/// Every Betti multidegree is an lcm of generators, so its coordinates are
/// generator exponents; the grid of such points is scanned exhaustively.
pub fn multigraded_betti(
    ideal: &MonomialIdeal,
    caps: &OracleCaps,
) -> Result<BTreeMap<(usize, Monomial), u64>> {
    if ideal.len() > caps.max_generators {
        return Err(Error::CapExceeded {
            cap: "max_generators",
            limit: caps.max_generators as u64,
            needed: ideal.len() as u64,
        });
    }
    let coords: Vec<Vec<u32>> = (0..4)
        .map(|v| {
            let set: BTreeSet<u32> = ideal.generators().iter().map(|g| g.0[v]).collect();
            set.into_iter().collect()
        })
        .collect();
    let mut out = BTreeMap::new();
    for &ea in &coords[0] {
        for &eb in &coords[1] {
            for &ec in &coords[2] {
                for &ed in &coords[3] {
                    let b = Monomial([ea, eb, ec, ed]);
                    let h = reduced_homology(&koszul_faces(ideal, &b));
                    for (k, &dim) in h.iter().enumerate() {
                        if dim > 0 {
                            out.insert((k + 1, b), dim as u64);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn graded_betti(ideal: &MonomialIdeal, caps: &OracleCaps) -> Result<BettiTable> {
    let mut table = BettiTable::new();
    for ((i, b), n) in multigraded_betti(ideal, caps)? {
        table.add(i, b.degree(), n);
    }
    Ok(table)
}
