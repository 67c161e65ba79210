//! Independent recomputation of invariant graded-piece dimensions.
//!
//! This is the from-scratch route used to cross-examine the main pipeline:
//! monomials are enumerated here in ascending order (the exact reverse of
//! the pipeline's canonical order), generators are expanded directly from
//! the parameters without the polynomial-ring machinery, and the
//! elimination below is a plain textbook sweep with its own row
//! representation. Apart from the rational scalar type, nothing is shared
//! with the pipeline, so agreement between the two is meaningful.

use num_traits::{One, Zero};
use yukawa::{ArrangementParams, ModuliPoint, Rational};

/// Exponent vectors: mu-block of length `m - 2`, then y-block of length `m`.
type Expo = Vec<u32>;

/// A row: `(column, coefficient)` pairs sorted by column.
type Row = Vec<(usize, Rational)>;

/// All exponent tuples of the given total, smallest-first lexicographically.
fn tuples_ascending(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in tuples_ascending(total - first, parts - 1) {
            let mut v = Vec::with_capacity(parts);
            v.push(first);
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// Invariant monomials of bidegree `(p, q)` shifted by the residue vector
/// `shift` in the y-block, ascending; `shift` is the character of the
/// complementary factor.
fn monomials_ascending(m: usize, r: usize, p: usize, q: usize, shift: &[u32]) -> Vec<Expo> {
    let base: u32 = shift.iter().sum();
    if (q as u32) < base || !(q as u32 - base).is_multiple_of(r as u32) {
        return Vec::new();
    }
    let steps = (q as u32 - base) / r as u32;
    let mut out = Vec::new();
    for mu in tuples_ascending(p as u32, m - 2) {
        for t in tuples_ascending(steps, m) {
            let mut e = mu.clone();
            e.extend(
                t.iter()
                    .zip(shift)
                    .map(|(&ti, &si)| si + r as u32 * ti),
            );
            out.push(e);
        }
    }
    out
}

/// `target - coeff * source`.
fn sub_mul(target: &Row, coeff: &Rational, source: &Row) -> Row {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() && j < source.len() {
        match target[i].0.cmp(&source[j].0) {
            std::cmp::Ordering::Less => {
                out.push(target[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((source[j].0, -(coeff * &source[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &target[i].1 - coeff * &source[j].1;
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
        out.push((*col, -(coeff * c)));
    }
    out
}

/// Rank by sweeping rows against a growing pivot set; rows with fewer
/// entries are consumed first, which only affects speed, never the result.
fn rank_of_rows(mut rows: Vec<Row>) -> usize {
    rows.sort_by_key(|r| r.len());
    let mut pivots: std::collections::BTreeMap<usize, Row> = std::collections::BTreeMap::new();
    for mut row in rows {
        while let Some((col, coef)) = row.first().cloned() {
            match pivots.get(&col) {
                Some(p) => row = sub_mul(&row, &coef, p),
                None => {
                    if !coef.is_one() {
                        let inv = coef.recip();
                        for (_, v) in row.iter_mut() {
                            *v *= &inv;
                        }
                    }
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Dimension of the invariant graded piece in bidegree `(p, q)`, recomputed
/// from scratch in reversed monomial order.
pub fn graded_dim_reversed(params: &ArrangementParams, point: &ModuliPoint, p: usize, q: usize) -> usize {
    let m = params.m();
    let r = params.r();
    let a = point.coords();

    let ambient = monomials_ascending(m, r, p, q, &vec![0; m]);
    let index: std::collections::HashMap<Expo, usize> = ambient
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();

    let mut rows: Vec<Row> = Vec::new();
    let mut push_row = |terms: Vec<(Expo, Rational)>| {
        let mut row: Row = terms
            .into_iter()
            .map(|(e, c)| (index[&e], c))
            .collect();
        row.sort_by_key(|(j, _)| *j);
        rows.push(row);
    };

    // defining polynomials: y_{i+2}^r - y_0^r - c_i y_1^r, c_0 = 1, c_i = a_i
    if q >= r {
        for mono in monomials_ascending(m, r, p, q - r, &vec![0; m]) {
            for i in 0..(m - 2) {
                let c_i = if i == 0 { Rational::one() } else { a[i - 1].clone() };
                let bump = |slot: usize| {
                    let mut e = mono.clone();
                    e[m - 2 + slot] += r as u32;
                    e
                };
                push_row(vec![
                    (bump(i + 2), Rational::one()),
                    (bump(0), -Rational::one()),
                    (bump(1), -c_i),
                ]);
            }
        }
    }

    // scaled y-derivatives
    if p >= 1 && q + 1 >= r {
        // slot 0: y_0^{r-1} * sum_k mu_k, complementary character e_0
        // slot 1: y_1^{r-1} * (mu_0 + sum a_k mu_k), complementary character e_1
        for slot in [0usize, 1] {
            let mut shift = vec![0u32; m];
            shift[slot] = 1;
            for mono in monomials_ascending(m, r, p - 1, q + 1 - r, &shift) {
                let mut terms = Vec::new();
                for k in 0..(m - 2) {
                    let coef = if slot == 0 || k == 0 {
                        Rational::one()
                    } else {
                        a[k - 1].clone()
                    };
                    let mut e = mono.clone();
                    e[k] += 1;
                    e[m - 2 + slot] += r as u32 - 1;
                    terms.push((e, coef));
                }
                push_row(terms);
            }
        }
        // mu_i y_{i+2}^{r-1}, complementary character e_{i+2}
        for i in 0..(m - 2) {
            let mut shift = vec![0u32; m];
            shift[i + 2] = 1;
            for mono in monomials_ascending(m, r, p - 1, q + 1 - r, &shift) {
                let mut e = mono.clone();
                e[i] += 1;
                e[m - 2 + i + 2] += r as u32 - 1;
                push_row(vec![(e, Rational::one())]);
            }
        }
    }

    ambient.len() - rank_of_rows(rows)
}

/// Rank of an explicitly given dense matrix, using the oracle's own
/// elimination.
pub fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    let sparse: Vec<Row> = rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j, c.clone()))
                .collect()
        })
        .collect();
    rank_of_rows(sparse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use yukawa::{default_point, rat, validate_params};

    #[test]
    fn constants_piece() {
        let p = validate_params(4, 2).unwrap();
        let point = default_point(&p);
        assert_eq!(graded_dim_reversed(&p, &point, 0, 0), 1);
    }

    #[test]
    fn known_dims_agree_with_pipeline() {
        for (m, r) in [(4, 2), (6, 2), (6, 3)] {
            let p = validate_params(m, r).unwrap();
            let point = default_point(&p);
            let (sp, sq) = p.source_bidegree();
            let (tp, tq) = p.target_bidegree();
            assert_eq!(graded_dim_reversed(&p, &point, sp, sq), p.n(), "source ({m},{r})");
            assert_eq!(
                graded_dim_reversed(&p, &point, tp, tq),
                p.target_dim(),
                "target ({m},{r})"
            );
        }
    }

    #[test]
    fn dense_rank_small() {
        let rows = vec![
            vec![rat(2), rat(6), rat(12)],
            vec![rat(6), rat(24), rat(60)],
        ];
        assert_eq!(dense_rank(&rows), 2);
        assert_eq!(dense_rank(&[vec![rat(0), rat(0)]]), 0);
    }
}
