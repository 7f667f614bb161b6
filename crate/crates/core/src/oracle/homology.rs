//! Reduced homology over Q of simplicial complexes on at most four vertices.

use num_rational::Ratio;

type Q = Ratio<i64>;

/// Rank of a dense rational matrix by Gaussian elimination.
pub(crate) fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != Q::from_integer(0)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c];
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != Q::from_integer(0) {
                let factor = row[c] / pivot;
                for (x, &p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= factor * p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Dimensions of `H̃_k` for `k = -1..=3`, indexed `k + 1`, of the complex
/// whose faces are the bitmasks in `faces` (closed under taking subsets).
/// An empty `faces` is the void complex, whose homology vanishes.
pub(crate) fn reduced_homology(faces: &[u8]) -> [usize; 5] {
    let mut by_size: [Vec<u8>; 5] = Default::default();
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for v in by_size.iter_mut() {
        v.sort_unstable();
    }
    // boundary_rank[s] = rank of the map from faces of size s to size s - 1
    let mut boundary_rank = [0usize; 6];
    for s in 1..5 {
        if by_size[s].is_empty() || by_size[s - 1].is_empty() {
            continue;
        }
        let rows: Vec<Vec<Q>> = by_size[s]
            .iter()
            .map(|&face| {
                by_size[s - 1]
                    .iter()
                    .map(|&sub| {
                        if sub & face != sub {
                            return Q::from_integer(0);
                        }
                        let removed = face & !sub;
                        let pos = (face & (removed - 1)).count_ones();
                        Q::from_integer(if pos % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        boundary_rank[s] = rank(rows);
    }
    let mut out = [0usize; 5];
    for s in 0..5 {
        out[s] = by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1];
    }
    out
}
