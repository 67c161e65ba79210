//! Bigraded polynomial arithmetic in the deformation variables
//! `mu_0..mu_{m-3}` and cover coordinates `y_0..y_{m-1}`.
//!
//! A monomial carries the bidegree `(p, q) = (sum of mu-exponents, sum of
//! y-exponents)`. The group `(Z/r)^m` acts diagonally on the y-variables and
//! trivially on the mu-variables, so the weight of a monomial is just its
//! y-exponent vector reduced mod `r`; roots of unity never need to be
//! materialized.
//!
//! The canonical monomial order is graded-lexicographic with the mu-block
//! before the y-block and `mu_0 > mu_1 > ... > y_0 > y_1 > ...`; enumeration
//! lists monomials from the largest down, so `y_0^2` precedes `y_1^2`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::linalg::Rational;

/// A monomial `prod mu_i^{a_i} * prod y_j^{b_j}`, stored as the two
/// exponent vectors (lengths `m - 2` and `m`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BigradedMonomial {
    pub mu: Vec<u32>,
    pub y: Vec<u32>,
}

impl BigradedMonomial {
    /// The unit monomial for a given number of branch points `m`.
    pub fn one(m: usize) -> Self {
        BigradedMonomial {
            mu: vec![0; m - 2],
            y: vec![0; m],
        }
    }

    /// `mu_i` as a monomial.
    pub fn mu_var(m: usize, i: usize) -> Self {
        let mut mono = Self::one(m);
        mono.mu[i] = 1;
        mono
    }

    /// `y_j^e` as a monomial.
    pub fn y_pow(m: usize, j: usize, e: u32) -> Self {
        let mut mono = Self::one(m);
        mono.y[j] = e;
        mono
    }

    /// `y_0^a * y_1^b`.
    pub fn y0_y1(m: usize, a: u32, b: u32) -> Self {
        let mut mono = Self::one(m);
        mono.y[0] = a;
        mono.y[1] = b;
        mono
    }

    /// Product of two monomials over the same variable set.
    pub fn times(&self, other: &Self) -> Self {
        assert_eq!(self.mu.len(), other.mu.len(), "variable count mismatch");
        assert_eq!(self.y.len(), other.y.len(), "variable count mismatch");
        BigradedMonomial {
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
        }
    }

    /// Bidegree `(p, q)`: total mu-degree and total y-degree.
    pub fn bidegree(&self) -> (usize, usize) {
        (
            self.mu.iter().map(|&e| e as usize).sum(),
            self.y.iter().map(|&e| e as usize).sum(),
        )
    }

    /// Weight of the diagonal `(Z/r)^m` action: y-exponents mod `r`.
    pub fn character(&self, r: usize) -> Character {
        assert!(r >= 2);
        Character {
            residues: self.y.iter().map(|&e| e % r as u32).collect(),
        }
    }

    /// True iff every y-exponent is divisible by `r`.
    pub fn is_invariant(&self, r: usize) -> bool {
        self.y.iter().all(|&e| e % r as u32 == 0)
    }

    /// Canonical (descending graded-lex) comparison key; enumeration and
    /// matrix columns use this order.
    fn sort_key(&self) -> (std::cmp::Reverse<usize>, Vec<std::cmp::Reverse<u32>>) {
        let (p, q) = self.bidegree();
        let concat = self
            .mu
            .iter()
            .chain(self.y.iter())
            .map(|&e| std::cmp::Reverse(e))
            .collect();
        (std::cmp::Reverse(p + q), concat)
    }
}

impl fmt::Display for BigradedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.mu.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("mu_{i}")),
                _ => parts.push(format!("mu_{i}^{e}")),
            }
        }
        for (j, &e) in self.y.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("y_{j}")),
                _ => parts.push(format!("y_{j}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A character of `(Z/r)^m`: one residue class per y-variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    residues: Vec<u32>,
}

impl Character {
    pub fn trivial(m: usize) -> Self {
        Character {
            residues: vec![0; m],
        }
    }

    /// The character with residue 1 in slot `j`, 0 elsewhere.
    pub fn unit(m: usize, j: usize, r: usize) -> Self {
        let mut chi = Self::trivial(m);
        chi.residues[j] = 1 % r as u32;
        chi
    }

    pub fn from_residues(residues: Vec<u32>, r: usize) -> Self {
        assert!(residues.iter().all(|&x| x < r as u32));
        Character { residues }
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn is_trivial(&self) -> bool {
        self.residues.iter().all(|&x| x == 0)
    }

    /// Sum of characters mod `r`.
    pub fn add(&self, other: &Character, r: usize) -> Character {
        Character {
            residues: self
                .residues
                .iter()
                .zip(&other.residues)
                .map(|(a, b)| (a + b) % r as u32)
                .collect(),
        }
    }

    /// Inverse character mod `r`.
    pub fn negate(&self, r: usize) -> Character {
        Character {
            residues: self
                .residues
                .iter()
                .map(|&a| (r as u32 - a) % r as u32)
                .collect(),
        }
    }
}

/// Bidegree `(p, q)` of a monomial.
pub fn bidegree(mono: &BigradedMonomial) -> (usize, usize) {
    mono.bidegree()
}

/// Character of a monomial under the diagonal action mod `r`.
pub fn character(mono: &BigradedMonomial, r: usize) -> Character {
    mono.character(r)
}

/// All exponent vectors of the given total over `parts` slots, first slot
/// largest first; the resulting monomial stream is descending lexicographic.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            let mut v = Vec::with_capacity(parts);
            v.push(first);
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// All monomials of bidegree `(p, q)` whose character equals `chi`, in the
/// canonical descending graded-lex order. Complete and duplicate-free.
pub fn enumerate_monomials(
    m: usize,
    r: usize,
    p: usize,
    q: usize,
    chi: &Character,
) -> Vec<BigradedMonomial> {
    assert_eq!(chi.residues.len(), m);
    let base: u32 = chi.residues.iter().sum();
    if (q as u32) < base || !(q as u32 - base).is_multiple_of(r as u32) {
        return Vec::new();
    }
    let steps = (q as u32 - base) / r as u32;
    let mu_parts = compositions(p as u32, m - 2);
    let y_steps = compositions(steps, m);
    let mut out = Vec::with_capacity(mu_parts.len() * y_steps.len());
    for mu in &mu_parts {
        for t in &y_steps {
            let y: Vec<u32> = t
                .iter()
                .zip(&chi.residues)
                .map(|(&ti, &ci)| ci + r as u32 * ti)
                .collect();
            out.push(BigradedMonomial { mu: mu.clone(), y });
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0].sort_key() < w[1].sort_key()));
    out
}

/// A polynomial with exact rational coefficients; zero coefficients are
/// never stored, so equality is term-map equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<BigradedMonomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(mono: BigradedMonomial, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigradedMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &BigradedMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, mono: BigradedMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), c * v))
                .collect(),
        }
    }

    /// Exact product; bidegrees add termwise and characters add mod `r`.
    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }

    /// Multiply by a single monomial.
    pub fn times_monomial(&self, mono: &BigradedMonomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.times(mono), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // display in the canonical descending order
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(mono, _)| mono.sort_key());
        for (k, (mono, coeff)) in terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({coeff})*{mono}")?;
        }
        Ok(())
    }
}

/// Sort monomials into the canonical descending graded-lex order.
pub fn sort_canonical(monomials: &mut [BigradedMonomial]) {
    monomials.sort_by_key(|mono| mono.sort_key());
}
