//! Exact computation of Griffiths-Yukawa coupling lengths for the
//! Calabi-Yau families attached to cyclic covers branched along point
//! arrangements.
//!
//! For integers `m`, `r` with `r | m`, `r >= 2` and `n = m - m/r - 1 >= 1`,
//! the family of `r`-fold cyclic covers of the projective line branched at
//! `m` ordered points carries a weight-one Hodge structure whose first
//! eigenspace has Hodge numbers `(n, m/r - 1)`. Its `n`-th wedge power is a
//! weight-`n` structure with Hodge numbers `C(n,q) * C(m/r-1,q)`, and the
//! coupling length of that structure is `m/r - 1`.
//!
//! This crate certifies the coupling length at chosen moduli points by
//! exact rational arithmetic:
//!
//! * [`linalg`] - sparse exact linear algebra over Q (rank, echelon forms,
//!   kernels, quotient coordinates);
//! * [`polyring`] - bigraded polynomials in the deformation variables
//!   `mu_0..mu_{m-3}` and cover coordinates `y_0..y_{m-1}`, with residue
//!   bookkeeping for the diagonal `(Z/r)^m` action;
//! * [`jacobian`] - graded pieces of the Jacobian ring of the total
//!   deformation polynomial, and the multiplication (Higgs) matrices
//!   between the distinguished pieces;
//! * [`higgs`] - Hodge-number formulas, the wedge-power Higgs construction,
//!   iterated Higgs maps and coupling-length certificates.

pub mod higgs;
pub mod jacobian;
pub mod linalg;
pub mod polyring;

pub use higgs::{
    coupling_length, coupling_length_diagonal, hodge_numbers_v1, hodge_numbers_w1,
    iterated_higgs, structural_upper_bound, wedge_power_higgs, HiggsPencil, HodgeNumbers,
    LengthCertificate, UpperReason, WedgeHiggs,
};
pub use jacobian::{
    cross_check_explicit_matrix, default_point, graded_piece, higgs_matrix, jacobian_generators,
    relation_matrix, source_piece, target_piece, validate_params, validate_point,
    vandermonde_source_basis, ArrangementParams, GradedPieceBasis, HiggsMatrixReport,
    JacobianError, ModuliPoint,
};
pub use linalg::{cokernel_coordinates, rat, ratio, Matrix, Rational};
pub use polyring::{enumerate_monomials, BigradedMonomial, Character, Polynomial};
