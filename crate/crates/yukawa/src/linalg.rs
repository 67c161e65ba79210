//! Exact linear algebra over the rational numbers.
//!
//! Every dimension, rank and quotient computed by this crate is a statement
//! over Q, so the arithmetic here is exact: arbitrary-precision rationals,
//! no floating point anywhere. Matrices are stored row-sparse (absent entry
//! means zero). Echelon forms use the leftmost-pivot rule; since the reduced
//! row-echelon form of a matrix is unique, every derived object (rank, pivot
//! columns, kernel basis, quotient coordinates) is reproducible bit for bit.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n/d` in lowest terms. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse vector: `(column, coefficient)` pairs with strictly increasing
/// columns and no zero coefficients.
pub type SparseVec = Vec<(usize, Rational)>;

/// Drop zero entries from a dense slice.
pub fn sparsify(dense: &[Rational]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j, c.clone()))
        .collect()
}

/// Expand a sparse vector to dense form of the given length.
pub fn densify(sparse: &[(usize, Rational)], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (j, c) in sparse {
        out[*j] = c.clone();
    }
    out
}

/// `target + coeff * source`, merged by column.
fn axpy(target: &[(usize, Rational)], coeff: &Rational, source: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() && j < source.len() {
        match target[i].0.cmp(&source[j].0) {
            std::cmp::Ordering::Less => {
                out.push(target[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((source[j].0, coeff * &source[j].1));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &target[i].1 + coeff * &source[j].1;
                if !c.is_zero() {
                    out.push((target[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&target[i..]);
    for (col, c) in &source[j..] {
        out.push((*col, coeff * c));
    }
    out
}

/// A rational matrix with sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<SparseVec>,
}

impl Matrix {
    pub fn zero(n_rows: usize, n_cols: usize) -> Self {
        Matrix {
            n_rows,
            n_cols,
            rows: vec![Vec::new(); n_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        Matrix {
            n_rows: n,
            n_cols: n,
            rows,
        }
    }

    /// Build from dense rows. All rows must share one length.
    pub fn from_rows(dense: Vec<Vec<Rational>>) -> Self {
        let n_rows = dense.len();
        let n_cols = dense.first().map_or(0, |r| r.len());
        let rows = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), n_cols, "ragged rows");
                sparsify(r)
            })
            .collect();
        Matrix {
            n_rows,
            n_cols,
            rows,
        }
    }

    /// Build from integer rows; convenient in tests.
    pub fn from_int_rows(dense: &[&[i64]]) -> Self {
        Matrix::from_rows(
            dense
                .iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    /// Build from sparse rows (each sorted by column, no zeros).
    pub fn from_sparse_rows(rows: Vec<SparseVec>, n_cols: usize) -> Self {
        for row in &rows {
            debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(row.iter().all(|(j, c)| *j < n_cols && !c.is_zero()));
        }
        Matrix {
            n_rows: rows.len(),
            n_cols,
            rows,
        }
    }

    /// Build from dense columns.
    pub fn from_cols(cols: Vec<Vec<Rational>>) -> Self {
        let n_cols = cols.len();
        let n_rows = cols.first().map_or(0, |c| c.len());
        let mut rows = vec![Vec::new(); n_rows];
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), n_rows, "ragged columns");
            for (i, c) in col.iter().enumerate() {
                if !c.is_zero() {
                    rows[i].push((j, c.clone()));
                }
            }
        }
        Matrix {
            n_rows,
            n_cols,
            rows,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i]
            .iter()
            .find(|(c, _)| *c == j)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn dense_row(&self, i: usize) -> Vec<Rational> {
        densify(&self.rows[i], self.n_cols)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn transpose(&self) -> Matrix {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); self.n_cols];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row {
                rows[*j].push((i, c.clone()));
            }
        }
        Matrix {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            rows,
        }
    }

    /// Matrix product `self * other`.
    pub fn mat_mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n_cols, other.n_rows, "shape mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: SparseVec = Vec::new();
                for (k, c) in row {
                    acc = axpy(&acc, c, &other.rows[*k]);
                }
                acc
            })
            .collect();
        Matrix {
            n_rows: self.n_rows,
            n_cols: other.n_cols,
            rows,
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.n_cols, "shape mismatch");
        self.rows
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for (j, c) in row {
                    acc += c * &v[*j];
                }
                acc
            })
            .collect()
    }

    /// Entrywise linear combination `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &Matrix) -> Matrix {
        assert_eq!((self.n_rows, self.n_cols), (other.n_rows, other.n_cols));
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| axpy(a, c, b))
            .collect();
        Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            rows,
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        if c.is_zero() {
            return Matrix::zero(self.n_rows, self.n_cols);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, c * v)).collect())
            .collect();
        Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            rows,
        }
    }

    /// Rank over Q, exact.
    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.n_cols);
        for row in &self.rows {
            ech.insert(row.clone());
        }
        ech.rank()
    }

    /// Reduced row-echelon form and its pivot columns (increasing order).
    ///
    /// The RREF of a matrix is unique, so the result does not depend on the
    /// elimination strategy; rows are emitted pivot-first with zero rows at
    /// the bottom, preserving the shape of `self`.
    pub fn row_echelon(&self) -> (Matrix, Vec<usize>) {
        let mut ech = Echelon::new(self.n_cols);
        for row in &self.rows {
            ech.insert(row.clone());
        }
        ech.finalize();
        let pivots = ech.pivot_cols();
        let mut rows: Vec<SparseVec> = pivots
            .iter()
            .map(|c| ech.rows[ech.by_col[c]].clone())
            .collect();
        rows.resize(self.n_rows, Vec::new());
        (
            Matrix {
                n_rows: self.n_rows,
                n_cols: self.n_cols,
                rows,
            },
            pivots,
        )
    }

    /// Basis of the right null space.
    ///
    /// One basis vector per non-pivot column, in increasing column order,
    /// with the free coordinate set to 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut ech = Echelon::new(self.n_cols);
        for row in &self.rows {
            ech.insert(row.clone());
        }
        ech.finalize();
        let free = ech.free_cols();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.n_cols];
                v[f] = Rational::one();
                for (&c, &ri) in &ech.by_col {
                    if let Some((_, coef)) = ech.rows[ri].iter().find(|(j, _)| *j == f) {
                        v[c] = -coef.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// Writes the class of `v` in `Q^cols / rowspan(span)` in the coordinates of
/// the complement basis given by the non-pivot columns of the echelon form,
/// in increasing column order. Returns the zero vector exactly when `v` lies
/// in the row span.
pub fn cokernel_coordinates(span: &Matrix, v: &[Rational]) -> Vec<Rational> {
    assert_eq!(v.len(), span.n_cols(), "vector length mismatch");
    let mut ech = Echelon::new(span.n_cols());
    for row in span.rows() {
        ech.insert(row.clone());
    }
    ech.finalize();
    ech.coords(sparsify(v))
}

/// Incremental echelon form: the workhorse behind rank, kernels and
/// quotient coordinates.
///
/// Rows are inserted one at a time and reduced against the current pivots
/// (leftmost column first). `finalize` runs the backward Jordan pass, after
/// which every stored row is supported on its pivot column plus non-pivot
/// columns only; reduction of further vectors is then a single sweep.
#[derive(Clone, Debug)]
pub struct Echelon {
    n_cols: usize,
    rows: Vec<SparseVec>,
    by_col: BTreeMap<usize, usize>,
    finalized: bool,
}

impl Echelon {
    pub fn new(n_cols: usize) -> Self {
        Echelon {
            n_cols,
            rows: Vec::new(),
            by_col: BTreeMap::new(),
            finalized: false,
        }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let mut ech = Echelon::new(m.n_cols());
        for row in m.rows() {
            ech.insert(row.clone());
        }
        ech
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Insert a row; returns true if it added a new pivot.
    pub fn insert(&mut self, mut row: SparseVec) -> bool {
        self.finalized = false;
        loop {
            let Some((col, coef)) = row.first().cloned() else {
                return false;
            };
            match self.by_col.get(&col) {
                Some(&ri) => {
                    let c = -coef;
                    row = axpy(&row, &c, &self.rows[ri]);
                }
                None => {
                    if !coef.is_one() {
                        let inv = coef.recip();
                        for (_, v) in row.iter_mut() {
                            *v *= &inv;
                        }
                    }
                    let idx = self.rows.len();
                    self.rows.push(row);
                    self.by_col.insert(col, idx);
                    return true;
                }
            }
        }
    }

    /// Backward Jordan pass: clear every pivot column from every other row.
    /// Idempotent; after this each row touches only its own pivot column and
    /// non-pivot columns, so `reduce` runs in one sweep.
    pub fn finalize(&mut self) {
        if self.finalized {
            return;
        }
        let pivot_cols: Vec<usize> = self.by_col.keys().copied().collect();
        for &col in pivot_cols.iter().rev() {
            let ri = self.by_col[&col];
            loop {
                // entries after the leading one that sit on pivot columns
                let hit = self.rows[ri]
                    .iter()
                    .skip(1)
                    .find(|(j, _)| self.by_col.contains_key(j))
                    .cloned();
                let Some((j, coef)) = hit else { break };
                let src = self.rows[self.by_col[&j]].clone();
                let c = -coef;
                self.rows[ri] = axpy(&self.rows[ri], &c, &src);
            }
        }
        self.finalized = true;
    }

    pub fn rank(&self) -> usize {
        self.by_col.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.by_col.keys().copied().collect()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_cols(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n_cols - self.by_col.len());
        let mut pivots = self.by_col.keys().copied().peekable();
        for j in 0..self.n_cols {
            if pivots.peek() == Some(&j) {
                pivots.next();
            } else {
                out.push(j);
            }
        }
        out
    }

    /// Reduce `v` modulo the row span; the result is supported on non-pivot
    /// columns only and is the canonical representative of the class of `v`.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut i = 0;
        while i < v.len() {
            let col = v[i].0;
            if let Some(&ri) = self.by_col.get(&col) {
                let c = -v[i].1.clone();
                v = axpy(&v, &c, &self.rows[ri]);
                // entries before position i are untouched: their columns are
                // smaller than every column of the pivot row
            } else {
                i += 1;
            }
        }
        v
    }

    /// Quotient coordinates of `v`: the reduced representative read off at
    /// the non-pivot columns, in increasing column order.
    pub fn coords(&self, v: SparseVec) -> Vec<Rational> {
        let reduced = self.reduce(v);
        let free = self.free_cols();
        let mut out = vec![Rational::zero(); free.len()];
        let mut k = 0;
        for (j, c) in reduced {
            while free[k] < j {
                k += 1;
            }
            debug_assert_eq!(free[k], j);
            out[k] = c;
        }
        out
    }

    /// True iff `v` lies in the row span.
    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}
