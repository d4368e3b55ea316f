//! The real Clifford algebra Cl(0,m) with relations `e_i e_j + e_j e_i = -2δ_ij`,
//! over exact Gaussian-rational scalars.
//!
//! Blades are bitmasks: bit `i-1` set means the generator `e_i` is present.
//! A blade always stands for the product of its generators in increasing
//! index order, so `Blade::from_indices(&[1, 3])` is `e1 e3 = e13`.
//!
//! Sign convention: `e_i² = -1`, hence the Clifford square of the vector
//! variable is `x² = -(x_1² + … + x_m²)`. Every identity downstream that
//! writes `x²` means this negative-definite square.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{AlgebraMode, Scalar};
use crate::MAX_DIM;

/// A basis blade `e_{i1} e_{i2} ⋯ e_{is}`, `i1 < i2 < ⋯ < is`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// The generator `e_i` (1-based).
    pub fn generator(i: usize) -> Blade {
        debug_assert!((1..=MAX_DIM).contains(&i));
        Blade(1 << (i - 1))
    }

    /// Builds a blade from 1-based indices; indices must be strictly increasing.
    pub fn from_indices(indices: &[usize]) -> Result<Blade> {
        let mut mask = 0u32;
        let mut last = 0usize;
        for &i in indices {
            if i == 0 || i > MAX_DIM || i <= last {
                return Err(Error::Parse(format!("invalid blade indices {indices:?}")));
            }
            mask |= 1 << (i - 1);
            last = i;
        }
        Ok(Blade(mask))
    }

    /// The pseudoscalar blade `e_1 ⋯ e_m`.
    pub fn pseudoscalar(m: usize) -> Blade {
        Blade(((1u64 << m) - 1) as u32)
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    /// Sorted 1-based indices.
    pub fn indices(self) -> Vec<usize> {
        (1..=32)
            .filter(|&i| self.0 & (1u32 << (i - 1)) != 0)
            .collect()
    }

    /// Highest generator index present, or 0 for the scalar blade.
    pub fn top(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn fits(self, dim: usize) -> bool {
        (self.0 as u64) < (1u64 << dim)
    }

    /// Geometric product of two blades: `e_a e_b = sign · e_{a Δ b}`.
    ///
    /// The sign counts transpositions needed to sort the concatenated index
    /// list, plus one factor `-1` per repeated generator (`e_i² = -1`).
    pub fn mul(self, other: Blade) -> (bool, Blade) {
        let mut a = self.0 >> 1;
        let mut swaps = 0u32;
        while a != 0 {
            swaps += (a & other.0).count_ones();
            a >>= 1;
        }
        swaps += (self.0 & other.0).count_ones();
        (swaps % 2 == 1, Blade(self.0 ^ other.0))
    }

    /// Sign `(-1)^{s(s+1)/2}` of the Clifford conjugate on grade `s`.
    pub fn conj_negates(self) -> bool {
        let s = self.grade();
        (s * (s + 1) / 2) % 2 == 1
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Element of Cl(0,m): a sparse map blade → scalar with no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<Blade, Scalar>,
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        Err(Error::DimensionUnsupported(dim))
    } else {
        Ok(())
    }
}

impl Multivector {
    pub fn zero(dim: usize) -> Self {
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, c: Scalar) -> Self {
        Multivector::term(dim, Blade::SCALAR, c)
    }

    pub fn term(dim: usize, blade: Blade, c: Scalar) -> Self {
        debug_assert!(blade.fits(dim));
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(blade, c);
        }
        Multivector { dim, terms }
    }

    pub fn blade(dim: usize, blade: Blade) -> Self {
        Multivector::term(dim, blade, Scalar::one())
    }

    /// The generator `e_i` (1-based).
    pub fn e(dim: usize, i: usize) -> Self {
        Multivector::blade(dim, Blade::generator(i))
    }

    pub fn from_terms(dim: usize, it: impl IntoIterator<Item = (Blade, Scalar)>) -> Result<Self> {
        check_dim(dim)?;
        let mut out = Multivector::zero(dim);
        for (b, c) in it {
            if !b.fits(dim) {
                return Err(Error::GradeOutOfRange {
                    grade: b.top(),
                    dim,
                });
            }
            out.add_term(b, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, b: Blade, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c.clone());
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: Blade) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        same_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Multivector {
        if c.is_zero() {
            return Multivector::zero(self.dim);
        }
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, v)| (*b, v * c)).collect(),
        }
    }

    /// Bilinear, associative Clifford product.
    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector> {
        same_dim(self.dim, other.dim)?;
        let mut out = Multivector::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (neg, blade) = a.mul(*b);
                let mut c = ca * cb;
                if neg {
                    c = -c;
                }
                out.add_term(blade, &c);
            }
        }
        Ok(out)
    }

    fn vector_check(&self) -> Result<()> {
        if self.terms.keys().all(|b| b.grade() == 1) {
            Ok(())
        } else {
            Err(Error::NotAVector)
        }
    }

    /// `u • v`: grade-lowering part of `u v` for a 1-vector `u`.
    pub fn inner_bullet(&self, v: &Multivector) -> Result<Multivector> {
        self.vector_split(v, true)
    }

    /// `u ∧ v`: grade-raising part of `u v` for a 1-vector `u`.
    pub fn outer_wedge(&self, v: &Multivector) -> Result<Multivector> {
        self.vector_split(v, false)
    }

    // e_j e_A is purely grade-lowering when j ∈ A and purely grade-raising otherwise.
    fn vector_split(&self, v: &Multivector, bullet: bool) -> Result<Multivector> {
        self.vector_check()?;
        same_dim(self.dim, v.dim)?;
        let mut out = Multivector::zero(self.dim);
        for (u, cu) in &self.terms {
            for (b, cb) in &v.terms {
                if (b.0 & u.0 != 0) != bullet {
                    continue;
                }
                let (neg, blade) = u.mul(*b);
                let mut c = cu * cb;
                if neg {
                    c = -c;
                }
                out.add_term(blade, &c);
            }
        }
        Ok(out)
    }

    /// Clifford conjugation: grade-s part scaled by `(-1)^{s(s+1)/2}`.
    pub fn clifford_conjugate(&self) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if b.conj_negates() { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Clifford conjugation composed with complex conjugation of every scalar.
    /// Identical to [`Multivector::clifford_conjugate`] on real multivectors.
    pub fn hermitian_bar(&self) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| {
                    let c = c.conj();
                    (*b, if b.conj_negates() { -c } else { c })
                })
                .collect(),
        }
    }

    /// `[a]_0`.
    pub fn scalar_part(&self) -> Scalar {
        self.coeff(Blade::SCALAR)
    }

    pub fn grade_projection(&self, s: usize) -> Result<Multivector> {
        if s > self.dim {
            return Err(Error::GradeOutOfRange {
                grade: s,
                dim: self.dim,
            });
        }
        Ok(Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == s)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        })
    }

    /// `e_M = e_1 e_2 ⋯ e_m`.
    pub fn pseudoscalar(m: usize) -> Multivector {
        Multivector::blade(m, Blade::pseudoscalar(m))
    }

    /// `a · e_M`.
    pub fn right_mul_em(&self) -> Multivector {
        self.geometric_product(&Multivector::pseudoscalar(self.dim))
            .expect("same dimension")
    }

    pub fn conj(&self) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, c.conj())).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }
}

pub(crate) fn same_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (b, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if *b == Blade::SCALAR {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{c}·{b}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector(dim={}, {})", self.dim, self)
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exps: Option<Vec<u32>>,
    pub blade: Vec<usize>,
    pub re: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub im: Option<String>,
}

impl TermJson {
    pub(crate) fn encode(
        exps: Option<Vec<u32>>,
        blade: Blade,
        c: &Scalar,
        mode: AlgebraMode,
    ) -> Self {
        TermJson {
            exps,
            blade: blade.indices(),
            re: Scalar::rat_to_string(c.re()),
            im: match mode {
                AlgebraMode::Real => None,
                AlgebraMode::Complex => Some(Scalar::rat_to_string(c.im())),
            },
        }
    }

    pub(crate) fn scalar(&self) -> Result<Scalar> {
        let re = Scalar::parse_rat(&self.re)?;
        let im = match &self.im {
            Some(s) => Scalar::parse_rat(s)?,
            None => Default::default(),
        };
        Ok(Scalar::new(re, im))
    }
}

#[derive(Serialize, Deserialize)]
struct MultivectorJson {
    dim: usize,
    terms: Vec<TermJson>,
}

impl Multivector {
    /// `{"dim": m, "terms": [{"blade": [..], "re": "p/q", "im": "p/q"}]}`;
    /// `"im"` is omitted in real mode.
    pub fn to_json(&self, mode: AlgebraMode) -> Result<serde_json::Value> {
        for c in self.terms.values() {
            mode.check(c)?;
        }
        let j = MultivectorJson {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| TermJson::encode(None, *b, c, mode))
                .collect(),
        };
        Ok(serde_json::to_value(j)?)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Multivector> {
        let j: MultivectorJson = serde_json::from_value(v.clone())?;
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((Blade::from_indices(&t.blade)?, t.scalar()?)))
            .collect::<Result<Vec<_>>>()?;
        Multivector::from_terms(j.dim, terms)
    }
}
