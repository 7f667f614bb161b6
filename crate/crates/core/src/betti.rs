//! Graded Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Graded Betti numbers `β_{i,j}` of an ideal, with `i = 1` counting minimal
/// generators, `i = 2` first syzygies, and so on.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, j: u64, n: u64) {
        if n > 0 {
            *self.entries.entry((i, j)).or_insert(0) += n;
        }
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total rank in homological degree `i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, &n)| n)
            .sum()
    }

    pub fn max_homological_degree(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Non-zero entries as `((i, j), β_{i,j})`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, u64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The `s` with every entry in degree `s + i - 1`, if the table is a
    /// single linear strand.
    pub fn linear_strand(&self) -> Option<u64> {
        let mut shift = None;
        for &(i, j) in self.entries.keys() {
            let s = (j + 1).checked_sub(i as u64)?;
            match shift {
                None => shift = Some(s),
                Some(t) if t != s => return None,
                _ => {}
            }
        }
        shift
    }

    /// `β_1 - β_2 + β_3 - ...`
    pub fn alternating_sum(&self) -> i64 {
        self.entries
            .iter()
            .map(|(&(i, _), &n)| if i % 2 == 1 { n as i64 } else { -(n as i64) })
            .sum()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, j), n) in self.iter() {
            writeln!(f, "beta_{i},{j} = {n}")?;
        }
        Ok(())
    }
}
