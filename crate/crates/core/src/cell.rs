//! The cellular minimal free resolution of an S-minimal curve.
//!
//! After a symmetry moves a maximal weight to line 6, the minimal generators
//! of `(a1, ..., a6)` are the lattice points `(i, j)` of the rectangle
//! `[0, a6] × [0, a1]` that survive four diagonal corner cuts:
//!
//! ```text
//!   a3 <= i + j <= a1 + a6 - a4
//!   a5 - a1 <= i - j <= a6 - a2
//! ```
//!
//! with `(i, j)` standing for `a^j b^(a1-j) c^(a6-i) d^i`.  Unit edges and
//! unit squares spanned by surviving points form a planar cell complex whose
//! labelled chain complex is the minimal free resolution.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::curve::{canonical_form, is_s_minimal, Symmetry, WeightVector};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::oracle::MonomialIdeal;

/// Lattice point `(i, j)`: `i` grows East, `j` grows North.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub i: u32,
    pub j: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    East,
    North,
}

/// Unit segment from `start` one step in `dir`, oriented that way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub start: Point,
    pub dir: Direction,
}

impl Edge {
    pub fn end(&self) -> Point {
        match self.dir {
            Direction::East => Point {
                i: self.start.i + 1,
                j: self.start.j,
            },
            Direction::North => Point {
                i: self.start.i,
                j: self.start.j + 1,
            },
        }
    }
}

/// Unit square with lower-left corner `corner`, oriented counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Square {
    pub corner: Point,
}

impl Square {
    /// Boundary edges with incidence signs: bottom and right count `+1`,
    /// top and left `-1`.
    pub fn boundary(&self) -> [(Edge, i8); 4] {
        let Point { i, j } = self.corner;
        let east = |i, j| Edge {
            start: Point { i, j },
            dir: Direction::East,
        };
        let north = |i, j| Edge {
            start: Point { i, j },
            dir: Direction::North,
        };
        [
            (east(i, j), 1),
            (north(i + 1, j), 1),
            (east(i, j + 1), -1),
            (north(i, j), -1),
        ]
    }

    /// Corners counterclockwise from the lower-left one.
    pub fn vertices(&self) -> [Point; 4] {
        let Point { i, j } = self.corner;
        [
            Point { i, j },
            Point { i: i + 1, j },
            Point { i: i + 1, j: j + 1 },
            Point { i, j: j + 1 },
        ]
    }
}

/// The labelled cell complex of an S-minimal curve, in canonical coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    weights: WeightVector,
    to_input: Symmetry,
    vertices: Vec<Point>,
    edges: Vec<Edge>,
    facets: Vec<Square>,
}

fn require_minimal(w: &WeightVector) -> Result<()> {
    if w.is_zero() {
        return Err(Error::TrivialCurve);
    }
    if !is_s_minimal(w) {
        return Err(Error::NotSMinimal(*w));
    }
    Ok(())
}

impl CellComplex {
    pub fn new(w: &WeightVector) -> Result<CellComplex> {
        require_minimal(w)?;
        let (canon, sigma) = canonical_form(w);
        let [a1, _, _, _, _, a6] = canon.as_array();
        let mut cx = CellComplex {
            weights: canon,
            to_input: sigma.inverse(),
            vertices: Vec::new(),
            edges: Vec::new(),
            facets: Vec::new(),
        };
        for i in 0..=a6 {
            for j in 0..=a1 {
                let p = Point { i, j };
                if cx.is_vertex(p) {
                    cx.vertices.push(p);
                }
            }
        }
        let vertex_set: BTreeSet<Point> = cx.vertices.iter().copied().collect();
        for &p in &cx.vertices {
            for dir in [Direction::East, Direction::North] {
                let e = Edge { start: p, dir };
                if vertex_set.contains(&e.end()) {
                    cx.edges.push(e);
                }
            }
        }
        let edge_set: BTreeSet<Edge> = cx.edges.iter().copied().collect();
        for &p in &cx.vertices {
            let sq = Square { corner: p };
            if sq.boundary().iter().all(|(e, _)| edge_set.contains(e)) {
                cx.facets.push(sq);
            }
        }
        Ok(cx)
    }

    fn is_vertex(&self, p: Point) -> bool {
        let [a1, a2, a3, a4, a5, a6] = self.weights.as_array().map(i64::from);
        let (i, j) = (i64::from(p.i), i64::from(p.j));
        (0..=a6).contains(&i)
            && (0..=a1).contains(&j)
            && a3 <= i + j
            && i + j <= a1 + a6 - a4
            && a5 - a1 <= i - j
            && i - j <= a6 - a2
    }

    /// The canonical weight vector the complex is built on.
    pub fn weights(&self) -> WeightVector {
        self.weights
    }

    /// Symmetry carrying canonical coordinates back to the input curve.
    pub fn to_input(&self) -> Symmetry {
        self.to_input
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn facets(&self) -> &[Square] {
        &self.facets
    }

    /// `(#vertices, #edges, #facets)`.
    pub fn face_counts(&self) -> [usize; 3] {
        [self.vertices.len(), self.edges.len(), self.facets.len()]
    }

    pub fn vertex_label(&self, p: Point) -> Monomial {
        let a1 = self.weights.weight(1);
        let a6 = self.weights.weight(6);
        Monomial::new(p.j, a1 - p.j, a6 - p.i, p.i)
    }

    pub fn edge_label(&self, e: &Edge) -> Monomial {
        self.vertex_label(e.start).lcm(&self.vertex_label(e.end()))
    }

    pub fn facet_label(&self, s: &Square) -> Monomial {
        s.vertices()
            .iter()
            .fold(Monomial::ONE, |acc, &p| acc.lcm(&self.vertex_label(p)))
    }

    /// Degree `a1 + a6` of the generators.
    pub fn generator_degree(&self) -> u64 {
        u64::from(self.weights.weight(1)) + u64::from(self.weights.weight(6))
    }

    fn facets_per_edge(&self) -> HashMap<Edge, usize> {
        let mut count: HashMap<Edge, usize> = self.edges.iter().map(|&e| (e, 0)).collect();
        for s in &self.facets {
            for (e, _) in s.boundary() {
                *count
                    .get_mut(&e)
                    .expect("facet edges belong to the complex") += 1;
            }
        }
        count
    }

    /// Every edge lies on the boundary of exactly one facet.
    pub fn every_edge_bounds_one_facet(&self) -> bool {
        self.facets_per_edge().values().all(|&n| n == 1)
    }

    /// Every edge lies on the boundary of at least one facet.
    pub fn every_edge_bounds_a_facet(&self) -> bool {
        self.facets_per_edge().values().all(|&n| n >= 1)
    }

    fn has_facet(&self, i: u32, j: u32) -> bool {
        self.facets
            .binary_search(&Square {
                corner: Point { i, j },
            })
            .is_ok()
    }

    /// `(three facets in a row, 2×2 block of facets)`.
    pub fn forbidden_patterns(&self) -> (bool, bool) {
        let mut row = false;
        let mut block = false;
        for s in &self.facets {
            let Point { i, j } = s.corner;
            row |= self.has_facet(i + 1, j) && self.has_facet(i + 2, j);
            row |= self.has_facet(i, j + 1) && self.has_facet(i, j + 2);
            block |= self.has_facet(i + 1, j)
                && self.has_facet(i, j + 1)
                && self.has_facet(i + 1, j + 1);
        }
        (row, block)
    }
}

/// `φ(F) = Σ ε(F, F') (m_F / m_F') e_F'` as a sparse matrix: row `r`, column
/// `c` holds `sign · monomial`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<MatrixEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub monomial: Monomial,
}

/// A polynomial with integer coefficients, as a map from monomials.
pub type Polynomial = BTreeMap<Monomial, i64>;

impl MonomialMatrix {
    /// Entries of column `col`, in row order.
    pub fn column(&self, col: usize) -> impl Iterator<Item = &MatrixEntry> {
        self.entries.iter().filter(move |e| e.col == col)
    }

    /// Non-zero entries of `self · other`.
    pub fn product(&self, other: &MonomialMatrix) -> BTreeMap<(usize, usize), Polynomial> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut by_row: HashMap<usize, Vec<&MatrixEntry>> = HashMap::new();
        for e in &other.entries {
            by_row.entry(e.row).or_default().push(e);
        }
        let mut out: BTreeMap<(usize, usize), Polynomial> = BTreeMap::new();
        for x in &self.entries {
            for y in by_row.get(&x.col).into_iter().flatten() {
                let poly = out.entry((x.row, y.col)).or_default();
                *poly.entry(x.monomial * y.monomial).or_insert(0) += i64::from(x.sign * y.sign);
            }
        }
        for poly in out.values_mut() {
            poly.retain(|_, c| *c != 0);
        }
        out.retain(|_, p| !p.is_empty());
        out
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in 0..self.cols {
            write!(f, "  col {c}:")?;
            for e in self.column(c) {
                let s = if e.sign > 0 { '+' } else { '-' };
                write!(f, " {s}{}*e{}", e.monomial, e.row)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The cellular resolution `0 -> F2 -> F1 -> F0`, with monomials written in
/// the input curve's variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellularResolution {
    pub complex: CellComplex,
    /// Vertex labels (the minimal generators) in basis order.
    pub generators: Vec<Monomial>,
    /// Vertices × edges.
    pub phi1: MonomialMatrix,
    /// Edges × facets.
    pub phi2: MonomialMatrix,
}

impl CellularResolution {
    pub fn new(w: &WeightVector) -> Result<CellularResolution> {
        let cx = CellComplex::new(w)?;
        let back = cx.to_input();
        let v_index: HashMap<Point, usize> = cx
            .vertices()
            .iter()
            .enumerate()
            .map(|(k, &p)| (p, k))
            .collect();
        let e_index: HashMap<Edge, usize> = cx
            .edges()
            .iter()
            .enumerate()
            .map(|(k, &e)| (e, k))
            .collect();
        let quotient = |outer: Monomial, inner: Monomial| {
            back.apply_monomial(&outer.quotient(&inner).expect("face labels divide"))
        };

        let mut phi1 = Vec::with_capacity(2 * cx.edges().len());
        for (col, e) in cx.edges().iter().enumerate() {
            let m = cx.edge_label(e);
            for (p, sign) in [(e.end(), 1), (e.start, -1)] {
                phi1.push(MatrixEntry {
                    row: v_index[&p],
                    col,
                    sign,
                    monomial: quotient(m, cx.vertex_label(p)),
                });
            }
        }
        let mut phi2 = Vec::with_capacity(4 * cx.facets().len());
        for (col, s) in cx.facets().iter().enumerate() {
            let m = cx.facet_label(s);
            for (e, sign) in s.boundary() {
                phi2.push(MatrixEntry {
                    row: e_index[&e],
                    col,
                    sign,
                    monomial: quotient(m, cx.edge_label(&e)),
                });
            }
        }
        phi1.sort_by_key(|e| (e.col, e.row));
        phi2.sort_by_key(|e| (e.col, e.row));

        let generators = cx
            .vertices()
            .iter()
            .map(|&p| back.apply_monomial(&cx.vertex_label(p)))
            .collect();
        let [nv, ne, nf] = cx.face_counts();
        Ok(CellularResolution {
            complex: cx,
            generators,
            phi1: MonomialMatrix {
                rows: nv,
                cols: ne,
                entries: phi1,
            },
            phi2: MonomialMatrix {
                rows: ne,
                cols: nf,
                entries: phi2,
            },
        })
    }

    /// Degree shifts of `F0, F1, F2`.
    pub fn shifts(&self) -> [u64; 3] {
        let s = self.complex.generator_degree();
        [s, s + 1, s + 2]
    }
}

/// Minimal generators of an S-minimal curve read off the cut rectangle.
pub fn minimal_generators(w: &WeightVector) -> Result<MonomialIdeal> {
    let cx = CellComplex::new(w)?;
    let back = cx.to_input();
    Ok(MonomialIdeal::from_generators(
        cx.vertices()
            .iter()
            .map(|&p| back.apply_monomial(&cx.vertex_label(p))),
    ))
}

pub fn cell_complex(w: &WeightVector) -> Result<CellComplex> {
    CellComplex::new(w)
}

pub fn cellular_differentials(w: &WeightVector) -> Result<(MonomialMatrix, MonomialMatrix)> {
    let r = CellularResolution::new(w)?;
    Ok((r.phi1, r.phi2))
}

/// `(β1, β2, β3)` from the closed formulas, for a canonical S-minimal vector.
pub fn betti_counts(w: &WeightVector) -> Result<[u64; 3]> {
    require_minimal(w)?;
    let c = canonical_form(w).0.as_array().map(u64::from);
    let (a1, a6) = (c[0], c[5]);
    let tri: u64 = c[1..5].iter().map(|&x| x * (x + 1) / 2).sum();
    Ok([
        (a1 + 1) * (a6 + 1) - tri,
        2 * a1 * a6 + a1 + a6 - 2 * tri,
        a1 * a6 - tri,
    ])
}

/// Graded Betti numbers of an S-minimal curve: a linear strand starting in
/// degree `a1 + a6`.
pub fn betti_numbers(w: &WeightVector) -> Result<BettiTable> {
    let counts = betti_counts(w)?;
    let c = canonical_form(w).0;
    let s = u64::from(c.weight(1)) + u64::from(c.weight(6));
    let mut t = BettiTable::new();
    for (k, &n) in counts.iter().enumerate() {
        t.add(k + 1, s + k as u64, n);
    }
    Ok(t)
}

pub fn buchsbaum_cell_predicate(w: &WeightVector) -> Result<bool> {
    Ok(CellComplex::new(w)?.every_edge_bounds_one_facet())
}

pub fn forbidden_patterns(w: &WeightVector) -> Result<(bool, bool)> {
    Ok(CellComplex::new(w)?.forbidden_patterns())
}

fn binom3(n: i64) -> i64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Hilbert function of `R/I` read off the linear resolution:
/// `C(t+3,3) - β1 C(t-s+3,3) + β2 C(t-s+2,3) - β3 C(t-s+1,3)`.
pub fn resolution_hilbert_function(w: &WeightVector, t: u32) -> Result<u64> {
    let [b1, b2, b3] = betti_counts(w)?.map(|x| x as i64);
    let c = canonical_form(w).0;
    let s = i64::from(c.weight(1)) + i64::from(c.weight(6));
    let t = i64::from(t);
    let v =
        binom3(t + 3) - b1 * binom3(t - s + 3) + b2 * binom3(t - s + 2) - b3 * binom3(t - s + 1);
    Ok(v as u64)
}
