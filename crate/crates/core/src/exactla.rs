//! Dense exact linear algebra over `Q` and the order-module extraction step.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ordstruct::OrderModule;
use crate::ring::{FreeModule, ModuleTerm, Rat, TermOrder, VecP};

/// Row-major dense rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RatMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form with leftmost pivots. Zero rows are kept at the
    /// bottom. Returns the pivot columns in ascending order.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                if !self[(r, j)].is_zero() {
                    self[(r, j)] *= &inv;
                }
            }
            let pivot_row: Vec<(usize, Rat)> = (c..self.cols)
                .filter(|&j| !self[(r, j)].is_zero())
                .map(|j| (j, self[(r, j)].clone()))
                .collect();
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for (j, a) in &pivot_row {
                    let d = &f * a;
                    self[(i, *j)] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Coordinates of vectors over a fixed list of module terms.
pub struct Coords {
    pub terms: Vec<ModuleTerm>,
    pos: HashMap<ModuleTerm, usize>,
}

impl Coords {
    pub fn new(terms: Vec<ModuleTerm>) -> Self {
        let pos = terms.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Coords { terms, pos }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn position(&self, t: &ModuleTerm) -> Option<usize> {
        self.pos.get(t).copied()
    }

    pub fn matrix(&self, vectors: &[VecP]) -> Result<RatMatrix> {
        let mut m = RatMatrix::zeros(vectors.len(), self.len());
        for (i, v) in vectors.iter().enumerate() {
            for (t, c) in v.iter() {
                let j = self.position(t).ok_or_else(|| Error::UnsupportedTerm(t.clone()))?;
                m[(i, j)] = c.clone();
            }
        }
        Ok(m)
    }

    pub fn vector(&self, nvars: usize, rank: usize, row: &[Rat]) -> VecP {
        VecP::from_terms(
            nvars,
            rank,
            row.iter()
                .zip(&self.terms)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, t)| (t.clone(), c.clone())),
        )
    }
}

fn shape(vectors: &[VecP]) -> Option<(usize, usize)> {
    vectors.first().map(|v| (v.nvars(), v.rank()))
}

/// Basis of the span of `vectors`, as the nonzero RREF rows over `universe`.
/// The universe is taken in the order given; pass it in descending order to
/// get the usual echelon shape.
pub fn span_basis(vectors: &[VecP], universe: &[ModuleTerm]) -> Result<Vec<VecP>> {
    let Some((nvars, rank)) = shape(vectors) else {
        return Ok(Vec::new());
    };
    let coords = Coords::new(universe.to_vec());
    let (m, pivots) = coords.matrix(vectors)?.rref();
    Ok((0..pivots.len()).map(|i| coords.vector(nvars, rank, m.row(i))).collect())
}

/// Basis of `span(vectors) ∩ span_K(keep)`.
///
/// Coordinates outside `keep` are placed first, so after reduction the rows
/// whose pivot lies among the `keep` columns span the intersection.
pub fn intersect_with_coordinate_space(
    vectors: &[VecP],
    keep: &[ModuleTerm],
    order: &TermOrder,
) -> Vec<VecP> {
    let Some((nvars, rank)) = shape(vectors) else {
        return Vec::new();
    };
    let keep_set: HashSet<&ModuleTerm> = keep.iter().collect();
    let mut outside: Vec<ModuleTerm> = vectors
        .iter()
        .flat_map(|v| v.support())
        .filter(|t| !keep_set.contains(t))
        .cloned()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    order.sort_desc(&mut outside);
    let mut inside = keep.to_vec();
    order.sort_desc(&mut inside);
    let split = outside.len();
    outside.extend(inside);
    let coords = Coords::new(outside);
    let (m, pivots) = coords.matrix(vectors).expect("universe covers every support").rref();
    pivots
        .iter()
        .enumerate()
        .filter(|(_, &p)| p >= split)
        .map(|(i, _)| coords.vector(nvars, rank, m.row(i)))
        .collect()
}

/// Order module spanned by the pivot-free columns of the reduced matrix of
/// `gens` over all module terms of degree at most `d`.
///
/// The span `V` of `gens` must satisfy `(V + x_1 V + ... + x_n V) ∩ <L> = V`
/// for `L` the terms of degree at most `d`, and the ordering must be degree
/// compatible.
pub fn compute_order_module(space: &FreeModule, d: u32, gens: &[VecP]) -> Result<OrderModule> {
    if !space.order.is_degree_compatible() {
        return Err(Error::NotDegreeCompatible);
    }
    if gens.is_empty() && space.rank > 0 {
        return Err(Error::EmptyGenerators);
    }
    for (i, g) in gens.iter().enumerate() {
        g.check_rank(space.rank)?;
        if g.is_zero() {
            return Err(Error::ZeroGenerator(i));
        }
    }
    let universe = space.terms_up_to_degree(d);
    let coords = Coords::new(universe);
    let (_, pivots) = coords.matrix(gens)?.rref();

    let basis = span_basis(gens, &coords.terms)?;
    let mut grown = basis.clone();
    for v in &basis {
        for s in 0..space.nvars {
            grown.push(v.mul_term(&crate::ring::Term::var(space.nvars, s)));
        }
    }
    if intersect_with_coordinate_space(&grown, &coords.terms, &space.order).len() != basis.len() {
        return Err(Error::NotStable);
    }
    order_module_from_pivots(space, &coords.terms, &pivots)
}

/// The terms of `universe` whose columns carry no pivot.
pub(crate) fn order_module_from_pivots(
    space: &FreeModule,
    universe: &[ModuleTerm],
    pivots: &[usize],
) -> Result<OrderModule> {
    let pivot_set: HashSet<usize> = pivots.iter().copied().collect();
    let free = universe
        .iter()
        .enumerate()
        .filter(|(j, _)| !pivot_set.contains(j))
        .map(|(_, t)| t.clone());
    OrderModule::from_terms(space.nvars, space.rank, space.order, free)
}
