//! Sparse Clifford-valued polynomials in commuting variables `x_1..x_m`.
//!
//! Terms are keyed by `(Monomial, Blade)` and kept in graded-lexicographic
//! order on exponents, then by blade bitmask. Zero coefficients are never
//! stored, so structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clifford::{check_dim, same_dim, Blade, Multivector, TermJson};
use crate::error::{Error, Result};
use crate::scalar::{AlgebraMode, Scalar};
use crate::MAX_DIM;

/// Exponent vector packed one byte per variable, `x_1` in the most
/// significant byte so integer order is lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    degree: u16,
    packed: u64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        degree: 0,
        packed: 0,
    };

    fn shift(i: usize) -> u32 {
        ((MAX_DIM - 1 - i) * 8) as u32
    }

    /// Builds from a 0-based exponent slice; each exponent must be < 256.
    pub fn from_exps(exps: &[u32]) -> Result<Monomial> {
        if exps.len() > MAX_DIM {
            return Err(Error::DimensionUnsupported(exps.len()));
        }
        let mut m = Monomial::ONE;
        for (i, &a) in exps.iter().enumerate() {
            if a > 255 {
                return Err(Error::InvalidArgument(format!("exponent {a} too large")));
            }
            m.packed |= (a as u64) << Self::shift(i);
            m.degree += a as u16;
        }
        Ok(m)
    }

    /// The variable `x_j` (1-based).
    pub fn var(j: usize) -> Monomial {
        Monomial {
            degree: 1,
            packed: 1u64 << Self::shift(j - 1),
        }
    }

    /// Exponent of `x_j` (1-based).
    pub fn exp(self, j: usize) -> u32 {
        ((self.packed >> Self::shift(j - 1)) & 0xff) as u32
    }

    pub fn degree(self) -> u32 {
        self.degree as u32
    }

    pub fn exps(self, dim: usize) -> Vec<u32> {
        (1..=dim).map(|j| self.exp(j)).collect()
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            packed: self.packed + other.packed,
        }
    }

    /// Lowers the exponent of `x_j` by one; caller checks `exp(j) > 0`.
    pub(crate) fn lower(self, j: usize) -> Monomial {
        Monomial {
            degree: self.degree - 1,
            packed: self.packed - (1u64 << Self::shift(j - 1)),
        }
    }

    /// Largest variable index with a nonzero exponent, 0 for the constant monomial.
    pub fn top(self) -> usize {
        (1..=MAX_DIM).rev().find(|&j| self.exp(j) > 0).unwrap_or(0)
    }

    /// α! = α_1! ⋯ α_m!
    pub fn factorial(self) -> num_bigint::BigInt {
        let mut acc = num_bigint::BigInt::from(1);
        for j in 1..=MAX_DIM {
            for t in 2..=self.exp(j) {
                acc *= t;
            }
        }
        acc
    }

    /// All exponent vectors of total degree `k` in `dim` variables, in
    /// canonical (ascending) order.
    pub fn all_of_degree(dim: usize, k: u32) -> Vec<Monomial> {
        fn rec(dim: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == dim {
                cur.push(left);
                out.push(Monomial::from_exps(cur).expect("bounded"));
                cur.pop();
                return;
            }
            for a in 0..=left {
                cur.push(a);
                rec(dim, i + 1, left - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if dim == 0 {
            return out;
        }
        rec(dim, 0, k, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.exps(MAX_DIM))
    }
}

pub type TermKey = (Monomial, Blade);

/// A Cl_m-valued polynomial on ℝ^m.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MVPolynomial {
    dim: usize,
    terms: BTreeMap<TermKey, Scalar>,
}

/// Accumulator used by every operation that builds a polynomial term by term.
pub(crate) struct Acc {
    dim: usize,
    terms: BTreeMap<TermKey, Scalar>,
}

impl Acc {
    pub(crate) fn new(dim: usize) -> Self {
        Acc {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn add(&mut self, key: TermKey, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => *v += &c,
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub(crate) fn add_signed(&mut self, key: TermKey, c: &Scalar, neg: bool) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                if neg {
                    *v -= c
                } else {
                    *v += c
                }
            }
            None => {
                self.terms.insert(key, if neg { -c } else { c.clone() });
            }
        }
    }

    pub(crate) fn finish(mut self) -> MVPolynomial {
        self.terms.retain(|_, v| !v.is_zero());
        MVPolynomial {
            dim: self.dim,
            terms: self.terms,
        }
    }
}

impl MVPolynomial {
    pub fn zero(dim: usize) -> Self {
        MVPolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: &Multivector) -> Self {
        let mut acc = Acc::new(c.dim());
        for (b, v) in c.terms() {
            acc.add((Monomial::ONE, *b), v.clone());
        }
        acc.finish()
    }

    pub fn scalar(dim: usize, c: Scalar) -> Self {
        MVPolynomial::term(dim, Monomial::ONE, Blade::SCALAR, c)
    }

    pub fn one(dim: usize) -> Self {
        MVPolynomial::scalar(dim, Scalar::one())
    }

    pub fn term(dim: usize, mono: Monomial, blade: Blade, c: Scalar) -> Self {
        let mut acc = Acc::new(dim);
        acc.add((mono, blade), c);
        acc.finish()
    }

    /// The scalar polynomial `x_j`.
    pub fn var(dim: usize, j: usize) -> Self {
        MVPolynomial::term(dim, Monomial::var(j), Blade::SCALAR, Scalar::one())
    }

    /// The constant blade `e_b`.
    pub fn blade(dim: usize, b: Blade) -> Self {
        MVPolynomial::term(dim, Monomial::ONE, b, Scalar::one())
    }

    /// The constant generator `e_j`.
    pub fn e(dim: usize, j: usize) -> Self {
        MVPolynomial::blade(dim, Blade::generator(j))
    }

    /// The vector variable `x_1 e_1 + … + x_n e_n` inside ℝ^dim.
    pub fn vector_variable(dim: usize, n: usize) -> Self {
        let mut acc = Acc::new(dim);
        for j in 1..=n {
            acc.add((Monomial::var(j), Blade::generator(j)), Scalar::one());
        }
        acc.finish()
    }

    /// `r_n² = x_1² + … + x_n²` as a scalar polynomial in ℝ^dim.
    pub fn radius_squared(dim: usize, n: usize) -> Self {
        let mut acc = Acc::new(dim);
        for j in 1..=n {
            acc.add(
                (Monomial::var(j).mul(Monomial::var(j)), Blade::SCALAR),
                Scalar::one(),
            );
        }
        acc.finish()
    }

    pub fn from_terms(dim: usize, it: impl IntoIterator<Item = (TermKey, Scalar)>) -> Result<Self> {
        check_dim(dim)?;
        let mut acc = Acc::new(dim);
        for ((mono, b), c) in it {
            if mono.top() > dim || !b.fits(dim) {
                return Err(Error::IndexOutOfRange {
                    index: mono.top().max(b.top()),
                    dim,
                });
            }
            acc.add((mono, b), c);
        }
        Ok(acc.finish())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: Monomial, b: Blade) -> Scalar {
        self.terms.get(&(mono, b)).cloned().unwrap_or_default()
    }

    /// First term in canonical order.
    pub fn leading_term(&self) -> Option<(&TermKey, &Scalar)> {
        self.terms.iter().next()
    }

    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|(mo, _)| mo.degree() == k)
    }

    /// The common degree of all terms, if there is one (`None` for zero).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(mo, _)| mo.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_grade(&self, s: usize) -> bool {
        self.terms.keys().all(|(_, b)| b.grade() == s)
    }

    /// Sorted list of grades present.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|(_, b)| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }

    /// True when neither the variable `x_j` nor the generator `e_j` occur for `j > n`.
    pub fn lives_in(&self, n: usize) -> bool {
        self.terms
            .keys()
            .all(|(mo, b)| mo.top() <= n && b.top() <= n)
    }

    pub fn add(&self, other: &MVPolynomial) -> Result<MVPolynomial> {
        same_dim(self.dim, other.dim)?;
        let mut acc = Acc {
            dim: self.dim,
            terms: self.terms.clone(),
        };
        for (k, c) in &other.terms {
            acc.add(*k, c.clone());
        }
        Ok(acc.finish())
    }

    pub fn sub(&self, other: &MVPolynomial) -> Result<MVPolynomial> {
        same_dim(self.dim, other.dim)?;
        let mut acc = Acc {
            dim: self.dim,
            terms: self.terms.clone(),
        };
        for (k, c) in &other.terms {
            acc.add_signed(*k, c, true);
        }
        Ok(acc.finish())
    }

    pub fn neg(&self) -> MVPolynomial {
        MVPolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &Scalar) -> MVPolynomial {
        if c.is_zero() {
            return MVPolynomial::zero(self.dim);
        }
        MVPolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> MVPolynomial {
        self.scalar_mul(&Scalar::from_int(n))
    }

    /// Ring product: variables commute, coefficients multiply geometrically.
    pub fn mul(&self, other: &MVPolynomial) -> Result<MVPolynomial> {
        same_dim(self.dim, other.dim)?;
        let mut acc = Acc::new(self.dim);
        for ((ma, ba), ca) in &self.terms {
            for ((mb, bb), cb) in &other.terms {
                let (neg, b) = ba.mul(*bb);
                acc.add_signed((ma.mul(*mb), b), &(ca * cb), neg);
            }
        }
        Ok(acc.finish())
    }

    /// `p · a` with a constant multivector on the right.
    pub fn mul_right(&self, a: &Multivector) -> Result<MVPolynomial> {
        self.mul(&MVPolynomial::constant(a))
    }

    /// `a · p` with a constant multivector on the left.
    pub fn mul_left(&self, a: &Multivector) -> Result<MVPolynomial> {
        MVPolynomial::constant(a).mul(self)
    }

    /// `p · e_M`.
    pub fn right_mul_em(&self) -> MVPolynomial {
        let em = Blade::pseudoscalar(self.dim);
        let mut acc = Acc::new(self.dim);
        for ((mo, b), c) in &self.terms {
            let (neg, nb) = b.mul(em);
            acc.add_signed((*mo, nb), c, neg);
        }
        acc.finish()
    }

    /// `p · e_j` for a single generator.
    pub fn right_mul_e(&self, j: usize) -> MVPolynomial {
        let g = Blade::generator(j);
        let mut acc = Acc::new(self.dim);
        for ((mo, b), c) in &self.terms {
            let (neg, nb) = b.mul(g);
            acc.add_signed((*mo, nb), c, neg);
        }
        acc.finish()
    }

    pub fn pow(&self, e: u32) -> Result<MVPolynomial> {
        let mut acc = MVPolynomial::one(self.dim);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Formal `∂/∂x_j` (1-based).
    pub fn partial_derivative(&self, j: usize) -> Result<MVPolynomial> {
        if j == 0 || j > self.dim {
            return Err(Error::IndexOutOfRange {
                index: j,
                dim: self.dim,
            });
        }
        let mut acc = Acc::new(self.dim);
        for ((mo, b), c) in &self.terms {
            let a = mo.exp(j);
            if a > 0 {
                acc.add((mo.lower(j), *b), c.mul_int(a as i64));
            }
        }
        Ok(acc.finish())
    }

    /// Substitutes `x_m = 0`; the ambient dimension is unchanged.
    pub fn restrict_last(&self) -> MVPolynomial {
        let m = self.dim;
        MVPolynomial {
            dim: m,
            terms: self
                .terms
                .iter()
                .filter(|((mo, _), _)| mo.exp(m) == 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Writes an `x_m`-free `p` as `u + v·e_m` where neither `u` nor `v`
    /// contain the generator `e_m`.
    pub fn split_em(&self) -> Result<(MVPolynomial, MVPolynomial)> {
        let m = self.dim;
        if self.terms.keys().any(|(mo, _)| mo.exp(m) > 0) {
            return Err(Error::DependsOnLastVariable);
        }
        let em = Blade::generator(m);
        let mut u = Acc::new(m);
        let mut v = Acc::new(m);
        for ((mo, b), c) in &self.terms {
            if b.contains(m) {
                // b = b'·e_m · sign, with sign from the blade product
                let rest = Blade(b.0 & !em.0);
                let (neg, check) = rest.mul(em);
                debug_assert_eq!(check, *b);
                v.add_signed((*mo, rest), c, neg);
            } else {
                u.add((*mo, *b), c.clone());
            }
        }
        Ok((u.finish(), v.finish()))
    }

    /// Exact evaluation at a point.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Multivector> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: point.len(),
            });
        }
        let mut out = Multivector::zero(self.dim);
        for ((mo, b), c) in &self.terms {
            let mut v = c.clone();
            for (j, x) in point.iter().enumerate() {
                let e = mo.exp(j + 1);
                if e > 0 {
                    v = &v * &x.pow(e);
                }
            }
            out = out.add(&Multivector::term(self.dim, *b, v))?;
        }
        Ok(out)
    }

    /// Reinterprets the polynomial inside a larger ambient space.
    pub fn embed(&self, new_dim: usize) -> Result<MVPolynomial> {
        if new_dim < self.dim {
            return Err(Error::InvalidArgument(format!(
                "cannot embed dimension {} into {new_dim}",
                self.dim
            )));
        }
        check_dim(new_dim)?;
        Ok(MVPolynomial {
            dim: new_dim,
            terms: self.terms.clone(),
        })
    }

    /// Drops the ambient dimension; fails if a removed variable or generator occurs.
    pub fn shrink(&self, new_dim: usize) -> Result<MVPolynomial> {
        if !self.lives_in(new_dim) {
            return Err(Error::InvalidArgument(format!(
                "polynomial does not live in dimension {new_dim}"
            )));
        }
        check_dim(new_dim)?;
        Ok(MVPolynomial {
            dim: new_dim,
            terms: self.terms.clone(),
        })
    }

    /// Complex conjugate of every coefficient.
    pub fn conj(&self) -> MVPolynomial {
        MVPolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }

    pub fn re_part(&self) -> MVPolynomial {
        let mut acc = Acc::new(self.dim);
        for (k, c) in &self.terms {
            acc.add(*k, c.re_part());
        }
        acc.finish()
    }

    pub fn im_part(&self) -> MVPolynomial {
        let mut acc = Acc::new(self.dim);
        for (k, c) in &self.terms {
            acc.add(*k, c.im_part());
        }
        acc.finish()
    }

    /// Grade-`s` part.
    pub fn grade_part(&self, s: usize) -> MVPolynomial {
        MVPolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|((_, b), _)| b.grade() == s)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// If `self = c · other` for a nonzero scalar `c`, returns `c`.
    pub fn scalar_quotient(&self, other: &MVPolynomial) -> Option<Scalar> {
        if self.dim != other.dim || self.terms.len() != other.terms.len() || other.is_zero() {
            return None;
        }
        let ((k0, c0), (k1, c1)) = (self.terms.iter().next()?, other.terms.iter().next()?);
        if k0 != k1 {
            return None;
        }
        let q = c0 / c1;
        let ok = self
            .terms
            .iter()
            .zip(other.terms.iter())
            .all(|((ka, ca), (kb, cb))| ka == kb && *ca == &q * cb);
        ok.then_some(q)
    }

    /// Scales so the leading term (canonical order) has coefficient 1.
    pub fn normalized(&self) -> MVPolynomial {
        match self.leading_term() {
            Some((_, c)) => self.scalar_mul(&c.inv().expect("stored coefficients are nonzero")),
            None => self.clone(),
        }
    }

    pub fn check_mode(&self, mode: AlgebraMode) -> Result<()> {
        self.terms.values().try_for_each(|c| mode.check(c))
    }
}

impl fmt::Debug for MVPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MVPolynomial(dim={}, {})",
            self.dim,
            crate::render::to_text(self)
        )
    }
}

impl fmt::Display for MVPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::to_text(self))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    dim: usize,
    algebra: AlgebraMode,
    terms: Vec<TermJson>,
}

impl MVPolynomial {
    /// `{"dim": m, "algebra": "complex"|"real", "terms": [{"exps": [..], "blade": [..], "re": "p/q", "im": "p/q"}]}`
    pub fn to_json(&self, mode: AlgebraMode) -> Result<serde_json::Value> {
        self.check_mode(mode)?;
        let j = PolyJson {
            dim: self.dim,
            algebra: mode,
            terms: self
                .terms
                .iter()
                .map(|((mo, b), c)| TermJson::encode(Some(mo.exps(self.dim)), *b, c, mode))
                .collect(),
        };
        Ok(serde_json::to_value(j)?)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MVPolynomial> {
        let j: PolyJson = serde_json::from_value(v.clone())?;
        check_dim(j.dim)?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let exps = t
                .exps
                .as_ref()
                .ok_or_else(|| Error::Parse("term without exps".into()))?;
            if exps.len() != j.dim {
                return Err(Error::Parse(format!(
                    "exponent vector length {} != dim {}",
                    exps.len(),
                    j.dim
                )));
            }
            let c = t.scalar()?;
            j.algebra.check(&c)?;
            terms.push((
                (Monomial::from_exps(exps)?, Blade::from_indices(&t.blade)?),
                c,
            ));
        }
        MVPolynomial::from_terms(j.dim, terms)
    }
}

/// Monomial-blade basis of P_k^s(ℝ^m) in canonical order.
pub fn homogeneous_basis_keys(m: usize, k: u32, grades: &[usize]) -> Vec<TermKey> {
    let monos = Monomial::all_of_degree(m, k);
    let mut blades: Vec<Blade> = (0u32..(1u32 << m))
        .map(Blade)
        .filter(|b| grades.contains(&b.grade()))
        .collect();
    blades.sort();
    let mut keys = Vec::with_capacity(monos.len() * blades.len());
    for mo in &monos {
        for b in &blades {
            keys.push((*mo, *b));
        }
    }
    keys
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(m: usize, j: usize) -> MVPolynomial {
        MVPolynomial::var(m, j)
    }
    fn e(m: usize, j: usize) -> MVPolynomial {
        MVPolynomial::e(m, j)
    }
    fn c(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
    fn zp(m: usize) -> MVPolynomial {
        x(m, 1).add(&x(m, 2).scalar_mul(&Scalar::i())).unwrap()
    }
    fn wp(m: usize) -> MVPolynomial {
        e(m, 1).add(&e(m, 2).scalar_mul(&Scalar::i())).unwrap()
    }

    #[test]
    fn ring_examples() {
        let m = 2;
        let a = x(m, 1).mul(&e(m, 1)).unwrap();
        let b = x(m, 1).mul(&e(m, 2)).unwrap();
        let e12 = MVPolynomial::blade(m, Blade(0b11));
        assert_eq!(
            a.mul(&b).unwrap(),
            x(m, 1).pow(2).unwrap().mul(&e12).unwrap()
        );
        let xv = MVPolynomial::vector_variable(m, m);
        assert_eq!(
            xv.mul(&xv).unwrap(),
            MVPolynomial::radius_squared(m, m).neg()
        );
        assert!(a.add(&a.scale_int(-1)).unwrap().is_zero());
        assert!(a.mul(&MVPolynomial::one(3)).is_err());
    }

    #[test]
    fn derivative_examples() {
        let m = 2;
        let p = x(m, 1).pow(2).unwrap().mul(&e(m, 2)).unwrap();
        assert_eq!(
            p.partial_derivative(1).unwrap(),
            x(m, 1).mul(&e(m, 2)).unwrap().scale_int(2)
        );
        assert!(x(m, 1)
            .mul(&e(m, 1))
            .unwrap()
            .partial_derivative(2)
            .unwrap()
            .is_zero());
        let q = zp(m).pow(2).unwrap().mul(&wp(m)).unwrap();
        assert_eq!(
            q.partial_derivative(1).unwrap(),
            zp(m).mul(&wp(m)).unwrap().scale_int(2)
        );
        assert!(q.partial_derivative(3).is_err());
        assert!(q.partial_derivative(0).is_err());
    }

    #[test]
    fn restrict_examples() {
        let m = 3;
        let p = x(m, 3)
            .mul(&e(m, 3))
            .unwrap()
            .add(&x(m, 1).mul(&e(m, 1)).unwrap())
            .unwrap();
        assert_eq!(p.restrict_last(), x(m, 1).mul(&e(m, 1)).unwrap());
        // −z_+ e3 − x3 w_+ restricts to −z_+ e3
        let b = zp(m)
            .mul(&e(m, 3))
            .unwrap()
            .neg()
            .sub(&x(m, 3).mul(&wp(m)).unwrap())
            .unwrap();
        assert_eq!(b.restrict_last(), zp(m).mul(&e(m, 3)).unwrap().neg());
        let k = MVPolynomial::scalar(m, c(5));
        assert_eq!(k.restrict_last(), k);
    }

    #[test]
    fn split_examples() {
        let m = 3;
        let p = zp(m).mul(&e(m, 3)).unwrap().neg();
        let (u, v) = p.split_em().unwrap();
        assert!(u.is_zero());
        assert_eq!(v, zp(m).neg());
        let (u, v) = wp(m).split_em().unwrap();
        assert_eq!(u, wp(m));
        assert!(v.is_zero());
        let e13 = MVPolynomial::blade(m, Blade::from_indices(&[1, 3]).unwrap());
        let (u, v) = e13.split_em().unwrap();
        assert!(u.is_zero());
        assert_eq!(v, e(m, 1));
        assert!(matches!(
            x(m, 3).split_em(),
            Err(Error::DependsOnLastVariable)
        ));
    }

    #[test]
    fn evaluate_examples() {
        let m = 3;
        let p = x(m, 1).mul(&e(m, 1)).unwrap();
        let v = p.evaluate(&[c(2), c(0), c(0)]).unwrap();
        assert_eq!(v, Multivector::e(m, 1).scale(&c(2)));
        let q = zp(2).mul(&wp(2)).unwrap();
        let v = q.evaluate(&[c(1), c(2)]).unwrap();
        let w = Multivector::e(2, 1)
            .add(&Multivector::e(2, 2).scale(&Scalar::i()))
            .unwrap();
        assert_eq!(v, w.scale(&Scalar::complex(1, 2)));
        assert!(MVPolynomial::zero(2)
            .evaluate(&[c(7), c(-1)])
            .unwrap()
            .is_zero());
        assert!(q.evaluate(&[c(1)]).is_err());
    }

    #[test]
    fn embed_examples() {
        let p = zp(2).mul(&wp(2)).unwrap();
        let q = p.embed(3).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(q.restrict_last(), q);
        assert_eq!(q.shrink(2).unwrap(), p);
        assert!(q.embed(2).is_err());
        let (u, v) = wp(2).embed(3).unwrap().split_em().unwrap();
        assert_eq!(u, wp(3));
        assert!(v.is_zero());
    }

    #[test]
    fn basis_key_counts() {
        // binom(m,s) * binom(k+m-1, m-1)
        assert_eq!(homogeneous_basis_keys(3, 2, &[1]).len(), 3 * 6);
        assert_eq!(homogeneous_basis_keys(5, 4, &[2]).len(), 10 * 70);
        assert_eq!(homogeneous_basis_keys(4, 0, &[0, 1, 2, 3, 4]).len(), 16);
    }

    #[test]
    fn scalar_quotient_detects_multiples() {
        let p = zp(3).mul(&wp(3)).unwrap();
        let q = p.scalar_mul(&Scalar::complex(2, -3));
        assert_eq!(q.scalar_quotient(&p), Some(Scalar::complex(2, -3)));
        assert_eq!(p.add(&x(3, 3)).unwrap().scalar_quotient(&p), None);
    }

    #[test]
    fn json_round_trip() {
        let p = zp(3)
            .mul(&wp(3))
            .unwrap()
            .add(&x(3, 3).scalar_mul(&Scalar::ratio(-1, 3)))
            .unwrap();
        let j = p.to_json(AlgebraMode::Complex).unwrap();
        assert_eq!(MVPolynomial::from_json(&j).unwrap(), p);
        assert!(p.to_json(AlgebraMode::Real).is_err());
    }
}
