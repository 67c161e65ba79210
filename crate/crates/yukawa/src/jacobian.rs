//! Graded pieces of the Jacobian ring attached to a point arrangement on
//! the projective line, and the multiplication (Higgs) matrices between the
//! two distinguished pieces.
//!
//! For parameters `(m, r)` with `r | m` and `n = m - m/r - 1 >= 1`, and a
//! moduli point `a = (a_1, ..., a_{m-3})` with `a_i` distinct and different
//! from 0 and 1, the total deformation polynomial is
//! `F = mu_0*F_0 + ... + mu_{m-3}*F_{m-3}` with
//!
//! ```text
//! F_0 = y_2^r - (y_0^r + y_1^r)
//! F_i = y_{i+2}^r - (y_0^r + a_i * y_1^r),   1 <= i <= m-3
//! ```
//!
//! The Jacobian ring is the quotient by the ideal of partial derivatives of
//! `F`. All graded pieces are computed degree by degree: the invariant part
//! of the ideal in bidegree `(p, q)` is spanned by generator-times-monomial
//! products, and the quotient is read off an exact echelon form. No
//! rewriting from the relations is ever assumed; the hand identities the
//! relations suggest are cross-checked against the echelon route instead
//! ([`cross_check_explicit_matrix`]).

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{rat, Echelon, Matrix, Rational, SparseVec};
use crate::polyring::{enumerate_monomials, BigradedMonomial, Character, Polynomial};

/// Validated arrangement parameters: `m` branch points, cover degree `r`,
/// derived fiber dimension `n = m - m/r - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArrangementParams {
    m: usize,
    r: usize,
    n: usize,
}

impl ArrangementParams {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the moduli of ordered distinct points, `m - 3`.
    pub fn moduli_dim(&self) -> usize {
        self.m - 3
    }

    /// `m/r - 1`, the expected dimension of the target piece.
    pub fn target_dim(&self) -> usize {
        self.m / self.r - 1
    }

    /// Bidegree of the source piece, `(0, r*(n-1))`.
    pub fn source_bidegree(&self) -> (usize, usize) {
        (0, self.r * (self.n - 1))
    }

    /// Bidegree of the target piece, `(1, r*n)`.
    pub fn target_bidegree(&self) -> (usize, usize) {
        (1, self.r * self.n)
    }
}

/// Why a parameter pair was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamError {
    /// `r` does not divide `m`.
    NotDivisible { m: usize, r: usize },
    /// `r < 2`, `m < 4`, or the derived `n = m - m/r - 1` is below 1.
    TooSmall { constraint: &'static str },
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::NotDivisible { m, r } => {
                write!(f, "cover degree {r} does not divide point count {m}")
            }
            ParamError::TooSmall { constraint } => {
                write!(f, "parameters too small: {constraint}")
            }
        }
    }
}

impl std::error::Error for ParamError {}

/// Why a moduli point was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointError {
    WrongLength { expected: usize, got: usize },
    /// Some coordinate equals 0 or 1.
    BadCoordinate { index: usize },
    /// Two coordinates coincide.
    Collision { first: usize, second: usize },
}

impl fmt::Display for PointError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointError::WrongLength { expected, got } => {
                write!(f, "expected {expected} coordinates, got {got}")
            }
            PointError::BadCoordinate { index } => {
                write!(f, "coordinate a_{} lies in {{0, 1}}", index + 1)
            }
            PointError::Collision { first, second } => {
                write!(f, "coordinates a_{} and a_{} coincide", first + 1, second + 1)
            }
        }
    }
}

impl std::error::Error for PointError {}

/// Errors from the Higgs-map operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobianError {
    WrongLength { expected: usize, got: usize },
    /// The distinguished source monomials failed the independence check;
    /// cannot happen for valid inputs and signals an internal bug.
    DependentBasis,
}

impl fmt::Display for JacobianError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JacobianError::WrongLength { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            JacobianError::DependentBasis => {
                write!(f, "distinguished source monomials are dependent")
            }
        }
    }
}

impl std::error::Error for JacobianError {}

/// Check `(m, r)` against the admissibility constraints and derive `n`.
pub fn validate_params(m: usize, r: usize) -> Result<ArrangementParams, ParamError> {
    if r < 2 {
        return Err(ParamError::TooSmall {
            constraint: "cover degree r must be at least 2",
        });
    }
    if m < 4 {
        return Err(ParamError::TooSmall {
            constraint: "point count m must be at least 4",
        });
    }
    if !m.is_multiple_of(r) {
        return Err(ParamError::NotDivisible { m, r });
    }
    let n = m - m / r - 1;
    if n < 1 {
        return Err(ParamError::TooSmall {
            constraint: "derived dimension n = m - m/r - 1 must be at least 1",
        });
    }
    Ok(ArrangementParams { m, r, n })
}

/// A point of the moduli of ordered distinct points: coordinates
/// `(a_1, ..., a_{m-3})`, all outside `{0, 1}` and pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliPoint {
    a: Vec<Rational>,
}

impl ModuliPoint {
    pub fn coords(&self) -> &[Rational] {
        &self.a
    }
}

/// Check a coordinate vector against the moduli-point constraints.
pub fn validate_point(
    params: &ArrangementParams,
    a: Vec<Rational>,
) -> Result<ModuliPoint, PointError> {
    let expected = params.moduli_dim();
    if a.len() != expected {
        return Err(PointError::WrongLength {
            expected,
            got: a.len(),
        });
    }
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() || ai.is_one() {
            return Err(PointError::BadCoordinate { index: i });
        }
    }
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if a[i] == a[j] {
                return Err(PointError::Collision {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(ModuliPoint { a })
}

/// The point `a = (2, 3, ..., m-2)`, valid for every admissible `(m, r)`.
pub fn default_point(params: &ArrangementParams) -> ModuliPoint {
    let a = (0..params.moduli_dim())
        .map(|i| rat(i as i64 + 2))
        .collect();
    ModuliPoint { a }
}

/// A generator of the Jacobian ideal together with its bidegree and
/// character.
#[derive(Clone, Debug)]
pub struct Generator {
    pub poly: Polynomial,
    pub bidegree: (usize, usize),
    pub character: Character,
}

/// The `2m - 2` generators of the Jacobian ideal: the `m - 2` defining
/// polynomials `F_i` (bidegree `(0, r)`, invariant) followed by the `m`
/// scaled y-derivatives `-dF/(r dy_j)` (bidegree `(1, r-1)`, character
/// `-e_j`), with overall signs normalized as
///
/// ```text
/// y_0^{r-1} * (mu_0 + mu_1 + ... + mu_{m-3})
/// y_1^{r-1} * (mu_0 + a_1 mu_1 + ... + a_{m-3} mu_{m-3})
/// mu_i * y_{i+2}^{r-1},   0 <= i <= m-3
/// ```
pub fn jacobian_generators(params: &ArrangementParams, point: &ModuliPoint) -> Vec<Generator> {
    let m = params.m;
    let r = params.r as u32;
    let a = point.coords();
    let mut gens = Vec::with_capacity(2 * m - 2);

    // F_i = y_{i+2}^r - y_0^r - c_i y_1^r with c_0 = 1, c_i = a_i
    for i in 0..(m - 2) {
        let c_i = if i == 0 { Rational::one() } else { a[i - 1].clone() };
        let mut poly = Polynomial::from_term(BigradedMonomial::y_pow(m, i + 2, r), rat(1));
        poly.add_term(BigradedMonomial::y_pow(m, 0, r), rat(-1));
        poly.add_term(BigradedMonomial::y_pow(m, 1, r), -c_i);
        gens.push(Generator {
            poly,
            bidegree: (0, params.r),
            character: Character::trivial(m),
        });
    }

    // y_0^{r-1} * sum_i mu_i
    let mut g0 = Polynomial::zero();
    for i in 0..(m - 2) {
        g0.add_term(
            BigradedMonomial::mu_var(m, i).times(&BigradedMonomial::y_pow(m, 0, r - 1)),
            rat(1),
        );
    }
    gens.push(Generator {
        poly: g0,
        bidegree: (1, params.r - 1),
        character: Character::unit(m, 0, params.r).negate(params.r),
    });

    // y_1^{r-1} * (mu_0 + sum_i a_i mu_i)
    let mut g1 = Polynomial::zero();
    for i in 0..(m - 2) {
        let c_i = if i == 0 { Rational::one() } else { a[i - 1].clone() };
        g1.add_term(
            BigradedMonomial::mu_var(m, i).times(&BigradedMonomial::y_pow(m, 1, r - 1)),
            c_i,
        );
    }
    gens.push(Generator {
        poly: g1,
        bidegree: (1, params.r - 1),
        character: Character::unit(m, 1, params.r).negate(params.r),
    });

    // mu_i * y_{i+2}^{r-1}
    for i in 0..(m - 2) {
        let poly = Polynomial::from_term(
            BigradedMonomial::mu_var(m, i).times(&BigradedMonomial::y_pow(m, i + 2, r - 1)),
            rat(1),
        );
        gens.push(Generator {
            poly,
            bidegree: (1, params.r - 1),
            character: Character::unit(m, i + 2, params.r).negate(params.r),
        });
    }

    gens
}

/// A coordinatized invariant graded piece of the Jacobian ring.
///
/// `ambient` lists the invariant monomials of the bidegree in canonical
/// order; `ideal_rows` holds every generator-times-monomial product landing
/// in the invariant part, written in ambient coordinates; `quotient_basis`
/// is the monomials at the non-pivot columns of the echelon form, which
/// descend to a basis of the quotient. The echelon form is retained so that
/// classes of further vectors can be written in quotient coordinates.
#[derive(Clone, Debug)]
pub struct GradedPieceBasis {
    pub bidegree: (usize, usize),
    pub ambient: Vec<BigradedMonomial>,
    pub ideal_rows: Matrix,
    pub quotient_basis: Vec<BigradedMonomial>,
    pub dim: usize,
    echelon: Echelon,
    index: HashMap<BigradedMonomial, usize>,
}

impl GradedPieceBasis {
    /// Quotient coordinates of an ambient vector.
    pub fn coords_of_vector(&self, v: SparseVec) -> Vec<Rational> {
        self.echelon.coords(v)
    }

    /// Quotient coordinates of a polynomial supported on the ambient
    /// monomials. Panics if a term lies outside the piece.
    pub fn coords_of_poly(&self, poly: &Polynomial) -> Vec<Rational> {
        let mut entries: SparseVec = poly
            .terms()
            .map(|(mono, c)| {
                let col = *self
                    .index
                    .get(mono)
                    .unwrap_or_else(|| panic!("{mono} is not an ambient monomial of the piece"));
                (col, c.clone())
            })
            .collect();
        entries.sort_by_key(|(j, _)| *j);
        self.echelon.coords(entries)
    }

    /// Column index of an ambient monomial.
    pub fn column_of(&self, mono: &BigradedMonomial) -> Option<usize> {
        self.index.get(mono).copied()
    }

    /// Rank of the ideal rows.
    pub fn ideal_rank(&self) -> usize {
        self.echelon.rank()
    }
}

/// The invariant graded piece of the Jacobian ring in bidegree `(p, q)` as
/// an explicit quotient.
///
/// The ideal rows are all products `g * mono` where `g` runs over the
/// generators and `mono` over the monomials of complementary bidegree whose
/// character cancels the character of `g`: for the `F_i` that means
/// invariant monomials of bidegree `(p, q - r)`, for the y-derivative
/// generator in slot `j` monomials of bidegree `(p - 1, q - r + 1)` with
/// character `e_j`. Empty bidegrees yield a zero-dimensional piece.
pub fn graded_piece(
    params: &ArrangementParams,
    point: &ModuliPoint,
    p: usize,
    q: usize,
) -> GradedPieceBasis {
    let m = params.m;
    let r = params.r;
    let ambient = enumerate_monomials(m, r, p, q, &Character::trivial(m));
    let index: HashMap<BigradedMonomial, usize> = ambient
        .iter()
        .enumerate()
        .map(|(j, mono)| (mono.clone(), j))
        .collect();

    let mut rows: Vec<SparseVec> = Vec::new();
    for gen in jacobian_generators(params, point) {
        let (gp, gq) = gen.bidegree;
        if gp > p || gq > q {
            continue;
        }
        let comp_chi = gen.character.negate(r);
        for mono in enumerate_monomials(m, r, p - gp, q - gq, &comp_chi) {
            let mut row: SparseVec = gen
                .poly
                .terms()
                .map(|(t, c)| (index[&t.times(&mono)], c.clone()))
                .collect();
            row.sort_by_key(|(j, _)| *j);
            rows.push(row);
        }
    }
    let ideal_rows = Matrix::from_sparse_rows(rows.clone(), ambient.len());

    // elimination order: cheap rows first; the echelon form is canonical,
    // so this only affects speed
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| (rows[i].len(), i));
    let mut echelon = Echelon::new(ambient.len());
    for i in order {
        echelon.insert(rows[i].clone());
    }
    echelon.finalize();

    let free = echelon.free_cols();
    let quotient_basis: Vec<BigradedMonomial> =
        free.iter().map(|&j| ambient[j].clone()).collect();
    let dim = ambient.len() - echelon.rank();
    debug_assert_eq!(dim, quotient_basis.len());

    GradedPieceBasis {
        bidegree: (p, q),
        ambient,
        ideal_rows,
        quotient_basis,
        dim,
        echelon,
        index,
    }
}

/// The piece receiving the holomorphic forms: bidegree `(0, r*(n-1))`.
pub fn source_piece(params: &ArrangementParams, point: &ModuliPoint) -> GradedPieceBasis {
    let (p, q) = params.source_bidegree();
    graded_piece(params, point, p, q)
}

/// The piece receiving the antiholomorphic classes: bidegree `(1, r*n)`;
/// its dimension equals `m/r - 1` for valid inputs.
pub fn target_piece(params: &ArrangementParams, point: &ModuliPoint) -> GradedPieceBasis {
    let (p, q) = params.target_bidegree();
    graded_piece(params, point, p, q)
}

/// The distinguished monomials `y_0^{br} y_1^{cr}` with `b + c = n - 1`,
/// in canonical (descending powers of `y_0`) order.
pub fn vandermonde_monomials(params: &ArrangementParams) -> Vec<BigradedMonomial> {
    let r = params.r as u32;
    let n = params.n as u32;
    (0..n)
        .rev()
        .map(|b| BigradedMonomial::y0_y1(params.m, b * r, (n - 1 - b) * r))
        .collect()
}

/// The `n` monomials `y_0^{br} y_1^{cr}`, `b + c = n - 1`, verified to be
/// linearly independent in the source quotient. `DependentBasis` signals an
/// internal bug or invalid point; it cannot fire for valid inputs.
pub fn vandermonde_source_basis(
    params: &ArrangementParams,
    point: &ModuliPoint,
) -> Result<Vec<BigradedMonomial>, JacobianError> {
    let source = source_piece(params, point);
    vandermonde_basis_in(params, &source)
}

/// Same check against an already-computed source piece.
pub fn vandermonde_basis_in(
    params: &ArrangementParams,
    source: &GradedPieceBasis,
) -> Result<Vec<BigradedMonomial>, JacobianError> {
    let monomials = vandermonde_monomials(params);
    let cols: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|mono| {
            let col = source
                .column_of(mono)
                .expect("distinguished monomial must be an ambient monomial");
            source.coords_of_vector(vec![(col, Rational::one())])
        })
        .collect();
    let mat = Matrix::from_cols(cols);
    if mat.rank() == monomials.len() {
        Ok(monomials)
    } else {
        Err(JacobianError::DependentBasis)
    }
}

/// The `(n-1) x (m-3)` matrix with entry `a_i^e - a_i` in row `e - 2`,
/// column `i - 1`, for `e = 2, ..., n`. Its row space annihilates the
/// spanning vector `(mu_1 y_1^{rn}, ..., mu_{m-3} y_1^{rn})` of the target
/// piece.
pub fn relation_matrix(params: &ArrangementParams, point: &ModuliPoint) -> Matrix {
    let a = point.coords();
    let rows: Vec<Vec<Rational>> = (2..=params.n)
        .map(|e| {
            a.iter()
                .map(|ai| {
                    let mut pow = Rational::one();
                    for _ in 0..e {
                        pow *= ai;
                    }
                    pow - ai
                })
                .collect()
        })
        .collect();
    if rows.is_empty() {
        Matrix::zero(0, params.moduli_dim())
    } else {
        Matrix::from_rows(rows)
    }
}

/// The multiplication map by `beta = sum_i lambda_i mu_i y_1^r` from the
/// source piece to the target piece, in the distinguished source basis and
/// the echelon quotient coordinates of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiggsMatrixReport {
    pub lambda: Vec<Rational>,
    /// `(m/r - 1) x n`: one column per distinguished source monomial.
    pub matrix: Matrix,
    pub rank: usize,
    pub surjective: bool,
}

/// Precomputed pieces for repeated Higgs-matrix evaluations at one point.
pub struct HiggsContext {
    pub params: ArrangementParams,
    pub point: ModuliPoint,
    pub source: GradedPieceBasis,
    pub target: GradedPieceBasis,
    pub source_basis: Vec<BigradedMonomial>,
}

impl HiggsContext {
    pub fn new(params: &ArrangementParams, point: &ModuliPoint) -> Result<Self, JacobianError> {
        let source = source_piece(params, point);
        let target = target_piece(params, point);
        let source_basis = vandermonde_basis_in(params, &source)?;
        Ok(HiggsContext {
            params: *params,
            point: point.clone(),
            source,
            target,
            source_basis,
        })
    }

    /// `beta = sum_{i=1}^{m-3} lambda_i mu_i y_1^r` as a polynomial.
    pub fn beta(&self, lambda: &[Rational]) -> Polynomial {
        let m = self.params.m;
        let r = self.params.r as u32;
        let mut beta = Polynomial::zero();
        for (i, li) in lambda.iter().enumerate() {
            beta.add_term(
                BigradedMonomial::mu_var(m, i + 1).times(&BigradedMonomial::y_pow(m, 1, r)),
                li.clone(),
            );
        }
        beta
    }

    /// Multiply each distinguished source monomial by `beta` and reduce to
    /// target quotient coordinates.
    pub fn higgs_matrix(&self, lambda: &[Rational]) -> Result<HiggsMatrixReport, JacobianError> {
        let expected = self.params.moduli_dim();
        if lambda.len() != expected {
            return Err(JacobianError::WrongLength {
                expected,
                got: lambda.len(),
            });
        }
        let beta = self.beta(lambda);
        let cols: Vec<Vec<Rational>> = self
            .source_basis
            .iter()
            .map(|mono| {
                let product = beta.times_monomial(mono);
                self.target.coords_of_poly(&product)
            })
            .collect();
        let matrix = Matrix::from_cols(cols);
        let rank = matrix.rank();
        let surjective = rank == self.target.dim;
        Ok(HiggsMatrixReport {
            lambda: lambda.to_vec(),
            matrix,
            rank,
            surjective,
        })
    }

    /// The closed-form route to the same matrix: coefficients
    /// `(-a_i)^b lambda_i` against the classes of the spanning monomials
    /// `mu_i y_1^{rn}`, entirely bypassing the ring multiplication.
    pub fn explicit_matrix(&self, lambda: &[Rational]) -> Result<Matrix, JacobianError> {
        let expected = self.params.moduli_dim();
        if lambda.len() != expected {
            return Err(JacobianError::WrongLength {
                expected,
                got: lambda.len(),
            });
        }
        let m = self.params.m;
        let rn = (self.params.r * self.params.n) as u32;
        let a = self.point.coords();
        // classes of mu_i y_1^{rn} in target coordinates, i = 1..m-3
        let spanning: Vec<Vec<Rational>> = (1..=self.params.moduli_dim())
            .map(|i| {
                let mono = BigradedMonomial::mu_var(m, i).times(&BigradedMonomial::y_pow(m, 1, rn));
                let col = self
                    .target
                    .column_of(&mono)
                    .expect("spanning monomial must be ambient");
                self.target.coords_of_vector(vec![(col, Rational::one())])
            })
            .collect();
        let dim = self.target.dim;
        let cols: Vec<Vec<Rational>> = self
            .source_basis
            .iter()
            .map(|mono| {
                // mono = y_0^{br} y_1^{cr}
                let b = (mono.y[0] as usize) / self.params.r;
                let mut acc = vec![Rational::zero(); dim];
                for (i, li) in lambda.iter().enumerate() {
                    if li.is_zero() {
                        continue;
                    }
                    let mut pow = Rational::one();
                    let minus_a = -a[i].clone();
                    for _ in 0..b {
                        pow *= &minus_a;
                    }
                    let coef = pow * li;
                    for (slot, t) in acc.iter_mut().zip(&spanning[i]) {
                        *slot += &coef * t;
                    }
                }
                acc
            })
            .collect();
        Ok(Matrix::from_cols(cols))
    }
}

/// One-shot Higgs matrix at a point; builds the context internally.
pub fn higgs_matrix(
    params: &ArrangementParams,
    point: &ModuliPoint,
    lambda: &[Rational],
) -> Result<HiggsMatrixReport, JacobianError> {
    HiggsContext::new(params, point)?.higgs_matrix(lambda)
}

/// Compare the ring-multiplication route with the closed-form coefficient
/// route; returns true iff the two matrices agree entrywise.
pub fn cross_check_explicit_matrix(
    params: &ArrangementParams,
    point: &ModuliPoint,
    lambda: &[Rational],
) -> Result<bool, JacobianError> {
    let ctx = HiggsContext::new(params, point)?;
    cross_check_in(&ctx, lambda)
}

/// Same comparison against a precomputed context.
pub fn cross_check_in(ctx: &HiggsContext, lambda: &[Rational]) -> Result<bool, JacobianError> {
    let multiplied = ctx.higgs_matrix(lambda)?;
    let explicit = ctx.explicit_matrix(lambda)?;
    Ok(multiplied.matrix == explicit)
}
