//! Fiberwise Higgs data: Hodge-number formulas, the wedge-power Higgs
//! construction, iterated Higgs maps and coupling-length certificates.
//!
//! A weight-one pencil consists of the matrices of the Higgs map
//! `eta(v): F^{1,0} -> F^{0,1}` for the basis tangent directions. Its n-th
//! wedge power is the weight-n structure whose grade `E^{n-q,q}` has the
//! basis `e_S ^ f_T` with `S` an `(n-q)`-subset of the `F^{1,0}` basis and
//! `T` a `q`-subset of the `F^{0,1}` basis; the one-step map acts as a
//! derivation, replacing one `e` factor by its image under `eta(v)` with the
//! sign of the wedge reordering. The factorial normalization that sometimes
//! accompanies this formula is dropped: over Q it never affects whether a
//! composite vanishes, which is all the coupling length measures.
//!
//! The coupling length is certified from two sides: a direction whose
//! iterated diagonal composite is nonzero at depth `L` gives the lower
//! bound, and a zero grade at depth `L + 1` gives the structural upper
//! bound. The two are only ever reported as equal when both sides are in
//! hand.

use std::fmt;

use num_traits::{One, Zero};

use crate::jacobian::{ArrangementParams, HiggsContext, JacobianError, ModuliPoint};
use crate::linalg::{rat, Matrix, Rational};

/// Binomial coefficient; the values in play are tiny.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Hodge numbers `(h^{1,0}, h^{0,1}) = (n, m/r - 1)` of the weight-one
/// eigenspace structure.
pub fn hodge_numbers_w1(params: &ArrangementParams) -> (usize, usize) {
    (params.n(), params.target_dim())
}

/// Hodge numbers of a weight-`n` structure, listed as `h[q] = h^{n-q,q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeNumbers {
    pub weight: usize,
    pub h: Vec<usize>,
}

/// Hodge numbers `h^{n-q,q} = C(n,q) * C(m/r-1,q)` of the weight-`n`
/// eigenspace structure; automatically zero once `q` exceeds `m/r - 1`.
pub fn hodge_numbers_v1(params: &ArrangementParams) -> HodgeNumbers {
    let n = params.n();
    let k1 = params.target_dim();
    HodgeNumbers {
        weight: n,
        h: (0..=n).map(|q| binomial(n, q) * binomial(k1, q)).collect(),
    }
}

/// The structural upper bound `m/r - 1` for the coupling length.
pub fn structural_upper_bound(params: &ArrangementParams) -> usize {
    params.target_dim()
}

/// The grade index `m/r` at which the weight-`n` Hodge numbers vanish.
/// For `r = 2` this equals `n + 1`: the vanishing grade sits just past the
/// top of the filtration, i.e. the bound comes from exhausting the weight.
pub fn vanishing_grade(params: &ArrangementParams) -> usize {
    params.m() / params.r()
}

/// Errors from the wedge-power machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WedgeError {
    ShapeMismatch { detail: String },
    TooDeep { depth: usize, weight: usize },
}

impl fmt::Display for WedgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WedgeError::ShapeMismatch { detail } => write!(f, "shape mismatch: {detail}"),
            WedgeError::TooDeep { depth, weight } => {
                write!(f, "depth {depth} exceeds weight {weight}")
            }
        }
    }
}

impl std::error::Error for WedgeError {}

/// The Higgs maps of a weight-one structure along the basis tangent
/// directions: `eta_basis[i]` is the `(k-1) x n` matrix of `eta(v_i)`.
#[derive(Clone, Debug)]
pub struct HiggsPencil {
    pub dim_f10: usize,
    pub dim_f01: usize,
    pub eta_basis: Vec<Matrix>,
}

impl HiggsPencil {
    pub fn new(eta_basis: Vec<Matrix>) -> Result<Self, WedgeError> {
        let Some(first) = eta_basis.first() else {
            return Err(WedgeError::ShapeMismatch {
                detail: "pencil needs at least one direction".into(),
            });
        };
        let (dim_f01, dim_f10) = (first.n_rows(), first.n_cols());
        for m in &eta_basis {
            if (m.n_rows(), m.n_cols()) != (dim_f01, dim_f10) {
                return Err(WedgeError::ShapeMismatch {
                    detail: "pencil matrices have differing shapes".into(),
                });
            }
        }
        if dim_f01 > dim_f10 {
            return Err(WedgeError::ShapeMismatch {
                detail: "wedge construction needs h^{0,1} <= h^{1,0}".into(),
            });
        }
        Ok(HiggsPencil {
            dim_f10,
            dim_f01,
            eta_basis,
        })
    }

    /// Pencil of the arrangement family at a point: one Higgs matrix per
    /// coordinate direction of the moduli space.
    pub fn from_arrangement(
        params: &ArrangementParams,
        point: &ModuliPoint,
    ) -> Result<Self, JacobianError> {
        let ctx = HiggsContext::new(params, point)?;
        Self::from_context(&ctx)
    }

    /// Same, reusing an existing context.
    pub fn from_context(ctx: &HiggsContext) -> Result<Self, JacobianError> {
        let d = ctx.params.moduli_dim();
        let eta_basis = (0..d)
            .map(|i| {
                let mut lambda = vec![Rational::zero(); d];
                lambda[i] = Rational::one();
                Ok(ctx.higgs_matrix(&lambda)?.matrix)
            })
            .collect::<Result<Vec<_>, JacobianError>>()?;
        Ok(HiggsPencil::new(eta_basis).expect("matrices from one context share a shape"))
    }

    /// Number of tangent directions.
    pub fn directions(&self) -> usize {
        self.eta_basis.len()
    }

    /// `eta(v)` for an arbitrary direction, by linearity.
    pub fn eta_at(&self, v: &[Rational]) -> Matrix {
        assert_eq!(v.len(), self.directions(), "direction length mismatch");
        let mut acc = Matrix::zero(self.dim_f01, self.dim_f10);
        for (c, m) in v.iter().zip(&self.eta_basis) {
            if !c.is_zero() {
                acc = acc.add_scaled(c, m);
            }
        }
        acc
    }
}

/// All `k`-subsets of `{0, .., n-1}` in colexicographic order.
fn subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    for top in (k - 1)..n {
        for mut s in subsets_colex(top, k - 1) {
            s.push(top);
            out.push(s);
        }
    }
    out
}

/// The wedge power of a pencil: graded bases and the one-step derivation
/// maps for every basis direction.
///
/// Grade `q` is spanned by the pairs `(S, T)` with `|S| = n - q` and
/// `|T| = q`, ordered S-major with subsets in colexicographic order.
#[derive(Clone, Debug)]
pub struct WedgeHiggs {
    n: usize,
    k1: usize,
    dirs: usize,
    grades: Vec<Vec<(Vec<usize>, Vec<usize>)>>,
    /// `maps[dir][q]`: grade `q` to grade `q + 1` along basis direction `dir`.
    maps: Vec<Vec<Matrix>>,
}

impl WedgeHiggs {
    pub fn weight(&self) -> usize {
        self.n
    }

    pub fn dim_f01(&self) -> usize {
        self.k1
    }

    pub fn directions(&self) -> usize {
        self.dirs
    }

    /// Dimension of grade `q`; zero past the weight.
    pub fn grade_dim(&self, q: usize) -> usize {
        self.grades.get(q).map_or(0, |g| g.len())
    }

    pub fn grade_basis(&self, q: usize) -> &[(Vec<usize>, Vec<usize>)] {
        &self.grades[q]
    }

    pub fn basis_map(&self, dir: usize, q: usize) -> &Matrix {
        &self.maps[dir][q]
    }

    /// One-step map out of grade `q` along an arbitrary direction.
    pub fn theta_at(&self, q: usize, v: &[Rational]) -> Matrix {
        assert_eq!(v.len(), self.dirs, "direction length mismatch");
        let mut acc = Matrix::zero(self.grade_dim(q + 1), self.grade_dim(q));
        for (c, maps) in v.iter().zip(&self.maps) {
            if !c.is_zero() {
                acc = acc.add_scaled(c, &maps[q]);
            }
        }
        acc
    }
}

/// Build the wedge-power Higgs structure of a pencil.
pub fn wedge_power_higgs(pencil: &HiggsPencil) -> Result<WedgeHiggs, WedgeError> {
    let n = pencil.dim_f10;
    let k1 = pencil.dim_f01;
    let dirs = pencil.directions();

    let mut grades = Vec::with_capacity(n + 1);
    for q in 0..=n {
        let ss = subsets_colex(n, n - q);
        let ts = subsets_colex(k1, q);
        let mut basis = Vec::with_capacity(ss.len() * ts.len());
        for s in &ss {
            for t in &ts {
                basis.push((s.clone(), t.clone()));
            }
        }
        grades.push(basis);
    }

    // index of each basis pair within its grade
    type GradeIndex = std::collections::HashMap<(Vec<usize>, Vec<usize>), usize>;
    let index: Vec<GradeIndex> = grades
        .iter()
        .map(|g| {
            g.iter()
                .enumerate()
                .map(|(i, st)| (st.clone(), i))
                .collect()
        })
        .collect();

    let mut maps = Vec::with_capacity(dirs);
    for eta in &pencil.eta_basis {
        let mut per_grade = Vec::with_capacity(n);
        for q in 0..n {
            let src = &grades[q];
            let dst_index = &index[q + 1];
            let mut cols: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(src.len());
            for (s, t) in src {
                let mut col: Vec<(usize, Rational)> = Vec::new();
                for (pos, &slot) in s.iter().enumerate() {
                    // replacing e_slot by eta(v) e_slot: the new f factor
                    // walks right past the remaining e factors
                    let sign_e = if (s.len() - 1 - pos) % 2 == 0 { 1 } else { -1 };
                    for b in 0..k1 {
                        let coef = eta.get(b, slot);
                        if coef.is_zero() || t.contains(&b) {
                            continue;
                        }
                        let sign_f = if t.iter().filter(|&&x| x < b).count() % 2 == 0 {
                            1
                        } else {
                            -1
                        };
                        let mut s2: Vec<usize> =
                            s.iter().copied().filter(|&x| x != slot).collect();
                        s2.sort_unstable();
                        let mut t2 = t.clone();
                        t2.push(b);
                        t2.sort_unstable();
                        let row = dst_index[&(s2, t2)];
                        let value = coef * rat(sign_e * sign_f);
                        match col.iter_mut().find(|(r, _)| *r == row) {
                            Some((_, v)) => *v += value,
                            None => col.push((row, value)),
                        }
                    }
                }
                col.retain(|(_, v)| !v.is_zero());
                col.sort_by_key(|(r, _)| *r);
                cols.push(col);
            }
            // assemble target-dim x source-dim matrix from sparse columns
            let dst_dim = grades[q + 1].len();
            let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dst_dim];
            for (j, col) in cols.iter().enumerate() {
                for (r, v) in col {
                    rows[*r].push((j, v.clone()));
                }
            }
            per_grade.push(Matrix::from_sparse_rows(rows, src.len()));
        }
        maps.push(per_grade);
    }

    Ok(WedgeHiggs {
        n,
        k1,
        dirs,
        grades,
        maps,
    })
}

/// The composite of one-step maps along the given directions, as a matrix
/// from the top grade `E^{n,0}` to `E^{n-q,q}` where `q = dirs.len()`.
/// The empty composite is the identity on the (one-dimensional) top grade.
pub fn iterated_higgs(w: &WedgeHiggs, dirs: &[Vec<Rational>]) -> Result<Matrix, WedgeError> {
    let q = dirs.len();
    if q > w.n {
        return Err(WedgeError::TooDeep {
            depth: q,
            weight: w.n,
        });
    }
    for v in dirs {
        if v.len() != w.dirs {
            return Err(WedgeError::ShapeMismatch {
                detail: format!("direction has {} entries, pencil has {}", v.len(), w.dirs),
            });
        }
    }
    let mut acc = Matrix::identity(w.grade_dim(0));
    for (t, v) in dirs.iter().enumerate() {
        acc = w.theta_at(t, v).mat_mul(&acc);
    }
    Ok(acc)
}

fn diagonal_length_with_witness(w: &WedgeHiggs, v: &[Rational]) -> (usize, Matrix) {
    assert_eq!(v.len(), w.dirs, "direction length mismatch");
    let mut acc = Matrix::identity(w.grade_dim(0));
    let mut best = (0, acc.clone());
    for q in 1..=w.n {
        acc = w.theta_at(q - 1, v).mat_mul(&acc);
        if acc.is_zero() {
            return best;
        }
        best = (q, acc.clone());
    }
    best
}

/// The largest `q` with a nonzero diagonal composite along `v`
/// (0 if already the first step vanishes).
pub fn coupling_length_diagonal(w: &WedgeHiggs, v: &[Rational]) -> usize {
    diagonal_length_with_witness(w, v).0
}

/// Why no deeper iterated map can be nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpperReason {
    /// The grade at `q` is zero-dimensional (for `q` past the weight this
    /// means the filtration itself is exhausted).
    ZeroGrade { q: usize },
    /// No sampled direction reached the structural bound; the reported
    /// length is only a lower bound.
    Exhausted { trials: usize },
}

impl fmt::Display for UpperReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpperReason::ZeroGrade { q } => write!(f, "grade dim 0 at q = {q}"),
            UpperReason::Exhausted { trials } => {
                write!(f, "incomplete after {trials} trials")
            }
        }
    }
}

/// A coupling-length certificate: the achieved diagonal depth, the witness
/// direction with its nonzero composite, and the reason no deeper map can
/// be nonzero. `complete` is true only when lower and upper bounds meet.
#[derive(Clone, Debug)]
pub struct LengthCertificate {
    pub length: usize,
    pub witness: Option<(Vec<Rational>, Matrix)>,
    pub upper: UpperReason,
    pub complete: bool,
}

/// Certify the coupling length of the arrangement family at a point by
/// searching the given directions for one whose diagonal composite reaches
/// the structural bound. Incompleteness is reported, never suppressed.
pub fn coupling_length<I>(
    params: &ArrangementParams,
    point: &ModuliPoint,
    directions: I,
) -> Result<LengthCertificate, JacobianError>
where
    I: IntoIterator<Item = Vec<Rational>>,
{
    let pencil = HiggsPencil::from_arrangement(params, point)?;
    let w = wedge_power_higgs(&pencil).expect("arrangement pencil is well-shaped");
    Ok(certify_from_wedge(&w, directions))
}

/// The certificate search against an already-built wedge structure.
pub fn certify_from_wedge<I>(w: &WedgeHiggs, directions: I) -> LengthCertificate
where
    I: IntoIterator<Item = Vec<Rational>>,
{
    let mut best: (usize, Option<(Vec<Rational>, Matrix)>) = (0, None);
    let mut trials = 0;
    for v in directions {
        trials += 1;
        let (len, witness) = diagonal_length_with_witness(w, &v);
        if len > best.0 || best.1.is_none() {
            best = (len, Some((v, witness)));
        }
        if w.grade_dim(best.0 + 1) == 0 {
            break;
        }
    }
    let (length, witness) = best;
    let complete = w.grade_dim(length + 1) == 0;
    let upper = if complete {
        UpperReason::ZeroGrade { q: length + 1 }
    } else {
        UpperReason::Exhausted { trials }
    };
    LengthCertificate {
        length,
        witness: if length > 0 { witness } else { None },
        upper,
        complete,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobian::{default_point, validate_params};
    use crate::linalg::ratio;

    fn params(m: usize, r: usize) -> ArrangementParams {
        validate_params(m, r).unwrap()
    }

    #[test]
    fn hodge_numbers_weight_one() {
        assert_eq!(hodge_numbers_w1(&params(6, 2)), (2, 2));
        assert_eq!(hodge_numbers_w1(&params(6, 3)), (3, 1));
        assert_eq!(hodge_numbers_w1(&params(8, 2)), (3, 3));
        assert_eq!(hodge_numbers_w1(&params(8, 4)), (5, 1));
        assert_eq!(hodge_numbers_w1(&params(9, 3)), (5, 2));
    }

    #[test]
    fn hodge_numbers_weight_n() {
        assert_eq!(hodge_numbers_v1(&params(6, 2)).h, vec![1, 4, 1]);
        assert_eq!(hodge_numbers_v1(&params(6, 3)).h, vec![1, 3, 0, 0]);
        assert_eq!(hodge_numbers_v1(&params(8, 2)).h, vec![1, 9, 9, 1]);
        assert_eq!(hodge_numbers_v1(&params(8, 4)).h, vec![1, 5, 0, 0, 0, 0]);
        assert_eq!(hodge_numbers_v1(&params(9, 3)).h, vec![1, 10, 10, 0, 0, 0]);
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(structural_upper_bound(&params(6, 2)), 2);
        assert_eq!(structural_upper_bound(&params(8, 2)), 3);
        assert_eq!(structural_upper_bound(&params(8, 4)), 1);
        assert_eq!(vanishing_grade(&params(6, 3)), 2);
        // for r = 2 the vanishing grade sits one past the weight
        assert_eq!(vanishing_grade(&params(6, 2)), 3);
        assert_eq!(params(6, 2).n(), 2);
    }

    fn single_direction_pencil(eta: Matrix) -> HiggsPencil {
        HiggsPencil::new(vec![eta]).unwrap()
    }

    #[test]
    fn wedge_of_scalar_pencil() {
        // n = 1, k - 1 = 1: one wedge factor, the map is multiplication
        let c = ratio(3, 7);
        let pencil = single_direction_pencil(Matrix::from_rows(vec![vec![c.clone()]]));
        let w = wedge_power_higgs(&pencil).unwrap();
        assert_eq!(w.grade_dim(0), 1);
        assert_eq!(w.grade_dim(1), 1);
        let theta = iterated_higgs(&w, &[vec![rat(1)]]).unwrap();
        assert_eq!(theta.get(0, 0), c);
    }

    #[test]
    fn wedge_of_identity_two_by_two() {
        let pencil = single_direction_pencil(Matrix::identity(2));
        let w = wedge_power_higgs(&pencil).unwrap();
        assert_eq!(w.grade_dim(0), 1);
        assert_eq!(w.grade_dim(1), 4);
        assert_eq!(w.grade_dim(2), 1);
        let v = vec![rat(1)];
        let step1 = iterated_higgs(&w, std::slice::from_ref(&v)).unwrap();
        assert!(!step1.is_zero());
        let step2 = iterated_higgs(&w, &[v.clone(), v.clone()]).unwrap();
        assert_eq!((step2.n_rows(), step2.n_cols()), (1, 1));
        assert_eq!(step2.get(0, 0), rat(2));
        assert_eq!(coupling_length_diagonal(&w, &v), 2);
    }

    #[test]
    fn wedge_of_zero_pencil() {
        let pencil = single_direction_pencil(Matrix::zero(2, 3));
        let w = wedge_power_higgs(&pencil).unwrap();
        let v = vec![rat(1)];
        assert!(iterated_higgs(&w, std::slice::from_ref(&v)).unwrap().is_zero());
        assert_eq!(coupling_length_diagonal(&w, &v), 0);
    }

    #[test]
    fn empty_composite_is_identity() {
        let pencil = single_direction_pencil(Matrix::identity(2));
        let w = wedge_power_higgs(&pencil).unwrap();
        assert_eq!(iterated_higgs(&w, &[]).unwrap(), Matrix::identity(1));
    }

    #[test]
    fn zero_direction_kills_composite() {
        let pencil = single_direction_pencil(Matrix::identity(3));
        let w = wedge_power_higgs(&pencil).unwrap();
        let composite =
            iterated_higgs(&w, &[vec![rat(1)], vec![rat(0)], vec![rat(1)]]).unwrap();
        assert!(composite.is_zero());
    }

    #[test]
    fn too_deep_is_an_error() {
        let pencil = single_direction_pencil(Matrix::identity(2));
        let w = wedge_power_higgs(&pencil).unwrap();
        let dirs = vec![vec![rat(1)]; 3];
        assert_eq!(
            iterated_higgs(&w, &dirs),
            Err(WedgeError::TooDeep { depth: 3, weight: 2 })
        );
    }

    #[test]
    fn grade_dims_match_binomials() {
        // dims C(n,q) * C(k-1,q) for a synthetic 3 x 4 pencil
        let eta = Matrix::from_int_rows(&[&[1, 0, 2, -1], &[0, 3, 1, 1], &[5, -2, 0, 1]]);
        let pencil = single_direction_pencil(eta);
        let w = wedge_power_higgs(&pencil).unwrap();
        for q in 0..=4 {
            assert_eq!(w.grade_dim(q), binomial(4, q) * binomial(3, q));
        }
        assert_eq!(w.grade_dim(5), 0);
    }

    #[test]
    fn surjective_eta_reaches_full_depth() {
        // eta surjective 2 x 3: diagonal length must be exactly k - 1 = 2
        let eta = Matrix::from_int_rows(&[&[1, 0, 1], &[0, 1, -1]]);
        assert_eq!(eta.rank(), 2);
        let pencil = single_direction_pencil(eta);
        let w = wedge_power_higgs(&pencil).unwrap();
        assert_eq!(coupling_length_diagonal(&w, &[rat(1)]), 2);
    }

    #[test]
    fn diagonal_length_is_scale_invariant() {
        let eta = Matrix::from_int_rows(&[&[2, 1, 0], &[1, 1, 1]]);
        let pencil = single_direction_pencil(eta);
        let w = wedge_power_higgs(&pencil).unwrap();
        let base = coupling_length_diagonal(&w, &[rat(1)]);
        assert_eq!(coupling_length_diagonal(&w, &[ratio(-7, 3)]), base);
        assert_eq!(coupling_length_diagonal(&w, &[rat(100)]), base);
    }

    #[test]
    fn arrangement_wedge_dims_match_formula() {
        for (m, r) in [(4, 2), (6, 2), (6, 3)] {
            let p = params(m, r);
            let point = default_point(&p);
            let pencil = HiggsPencil::from_arrangement(&p, &point).unwrap();
            let w = wedge_power_higgs(&pencil).unwrap();
            let hv = hodge_numbers_v1(&p);
            for (q, &hq) in hv.h.iter().enumerate() {
                assert_eq!(w.grade_dim(q), hq, "grade {q} at ({m},{r})");
            }
        }
    }

    #[test]
    fn certify_four_two() {
        let p = params(4, 2);
        let point = default_point(&p);
        let cert = coupling_length(&p, &point, vec![vec![rat(1)]]).unwrap();
        assert_eq!(cert.length, 1);
        assert!(cert.complete);
        assert_eq!(cert.upper, UpperReason::ZeroGrade { q: 2 });
    }

    #[test]
    fn certify_six_two() {
        let p = params(6, 2);
        let point = default_point(&p);
        let dirs = vec![vec![rat(1), rat(1), rat(1)]];
        let cert = coupling_length(&p, &point, dirs).unwrap();
        assert_eq!(cert.length, 2);
        assert!(cert.complete);
        // r = 2: the upper reason is weight exhaustion, grade 3 of a weight-2
        // structure
        assert_eq!(cert.upper, UpperReason::ZeroGrade { q: 3 });
    }

    #[test]
    fn certify_six_three() {
        let p = params(6, 3);
        let point = default_point(&p);
        let dirs = vec![vec![rat(1), rat(2), rat(5)]];
        let cert = coupling_length(&p, &point, dirs).unwrap();
        assert_eq!(cert.length, 1);
        assert!(cert.complete);
        assert_eq!(cert.upper, UpperReason::ZeroGrade { q: 2 });
    }

    #[test]
    fn certify_eight_two_reaches_weight() {
        // r = 2 double cover: maximal length, equal to the weight n = 3
        let p = params(8, 2);
        let point = default_point(&p);
        let dirs = vec![vec![rat(1), rat(2), rat(4), rat(8), rat(16)]];
        let cert = coupling_length(&p, &point, dirs).unwrap();
        assert_eq!(cert.length, 3);
        assert!(cert.complete);
        assert_eq!(cert.upper, UpperReason::ZeroGrade { q: 4 });
    }

    #[test]
    fn incomplete_certificate_is_reported() {
        let p = params(6, 2);
        let point = default_point(&p);
        // the zero direction can never witness anything
        let dirs = vec![vec![rat(0), rat(0), rat(0)]];
        let cert = coupling_length(&p, &point, dirs).unwrap();
        assert_eq!(cert.length, 0);
        assert!(!cert.complete);
        assert_eq!(cert.upper, UpperReason::Exhausted { trials: 1 });
    }

    #[test]
    fn degenerate_family_has_length_zero() {
        let p = params(4, 4);
        let point = default_point(&p);
        let cert = coupling_length(&p, &point, Vec::<Vec<Rational>>::new()).unwrap();
        assert_eq!(cert.length, 0);
        assert!(cert.complete);
        assert_eq!(cert.upper, UpperReason::ZeroGrade { q: 1 });
    }

    #[test]
    fn iterated_map_symmetric_in_directions() {
        // two-direction synthetic pencil
        let eta0 = Matrix::from_int_rows(&[&[1, 2, 0], &[0, 1, 1]]);
        let eta1 = Matrix::from_int_rows(&[&[0, 1, -1], &[2, 0, 3]]);
        let pencil = HiggsPencil::new(vec![eta0, eta1]).unwrap();
        let w = wedge_power_higgs(&pencil).unwrap();
        let u = vec![rat(1), rat(-2)];
        let v = vec![rat(3), rat(5)];
        let uv = iterated_higgs(&w, &[u.clone(), v.clone()]).unwrap();
        let vu = iterated_higgs(&w, &[v, u]).unwrap();
        assert_eq!(uv, vu);
    }
}
