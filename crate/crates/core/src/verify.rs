//! Inner products, Gram matrices and brute-force oracles.
//!
//! The oracles never look at how a basis was built: kernel dimensions come
//! from exact elimination on the matrix of an operator in the monomial-blade
//! basis, and spans are compared by exact ranks.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::clifford::{same_dim, Blade};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::mvpoly::{homogeneous_basis_keys, MVPolynomial, Monomial, TermKey};
use crate::operators::{self, Atom};
use crate::par;
use crate::scalar::Scalar;

pub const DEFAULT_SIZE_CAP: usize = 5000;

/// Oracle size cap; `HODGE_GT_SIZE_CAP` overrides the default.
pub fn size_cap() -> usize {
    std::env::var("HODGE_GT_SIZE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SIZE_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerKind {
    Fischer,
    L2,
}

impl InnerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InnerKind::Fischer => "fischer",
            InnerKind::L2 => "l2",
        }
    }
}

/// `[bar(e_A) e_A]_0`, which is `+1` for every blade.
fn blade_pairing(a: Blade) -> Scalar {
    let (neg, _) = a.mul(a);
    if neg ^ a.conj_negates() {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    }
}

/// `Σ_α α! [bar(a_α) b_α]_0`.
pub fn fischer_inner(p: &MVPolynomial, q: &MVPolynomial) -> Result<Scalar> {
    same_dim(p.dim(), q.dim())?;
    let mut acc = Scalar::zero();
    for ((mono, blade), a) in p.terms() {
        let b = q.coeff(*mono, *blade);
        if b.is_zero() {
            continue;
        }
        let w = Scalar::real(BigRational::from_integer(mono.factorial()));
        acc += &(&(&a.conj() * &b) * &(&w * &blade_pairing(*blade)));
    }
    Ok(acc)
}

fn double_factorial_odd(n: u32) -> BigInt {
    // (n-1)!! for even n
    let mut acc = BigInt::one();
    let mut t = n as i64 - 1;
    while t > 1 {
        acc *= t;
        t -= 2;
    }
    acc
}

/// Normalized spherical moment `∫_{S^{m-1}} x^γ dσ` (total mass 1).
pub fn sphere_moment(m: usize, gamma: Monomial) -> BigRational {
    let mut num = BigInt::one();
    for j in 1..=m {
        let e = gamma.exp(j);
        if e % 2 == 1 {
            return BigRational::zero();
        }
        num *= double_factorial_odd(e);
    }
    let mut den = BigInt::one();
    for t in 0..gamma.degree() / 2 {
        den *= BigInt::from(m as u32 + 2 * t);
    }
    BigRational::new(num, den)
}

fn both_homogeneous_different(p: &MVPolynomial, q: &MVPolynomial) -> bool {
    matches!((p.homogeneous_degree(), q.homogeneous_degree()), (Some(a), Some(b)) if a != b)
}

/// `∫_{S^{m-1}} [bar(P) Q]_0 dσ` with the normalized measure. Two
/// homogeneous polynomials of different degree pair to zero by convention.
pub fn l2_inner(p: &MVPolynomial, q: &MVPolynomial) -> Result<Scalar> {
    same_dim(p.dim(), q.dim())?;
    if both_homogeneous_different(p, q) {
        return Ok(Scalar::zero());
    }
    let m = p.dim();
    let mut acc = Scalar::zero();
    for ((ma, ba), a) in p.terms() {
        let ca = a.conj();
        for ((mb, bb), b) in q.terms() {
            if ba != bb {
                continue;
            }
            let mom = sphere_moment(m, ma.mul(*mb));
            if mom.is_zero() {
                continue;
            }
            acc += &(&(&ca * b) * &(&Scalar::real(mom) * &blade_pairing(*ba)));
        }
    }
    Ok(acc)
}

pub fn inner(kind: InnerKind, p: &MVPolynomial, q: &MVPolynomial) -> Result<Scalar> {
    match kind {
        InnerKind::Fischer => fischer_inner(p, q),
        InnerKind::L2 => l2_inner(p, q),
    }
}

/// Moment-transformed copy of `q` on the given keys:
/// `T[(α, A)] = Σ_β q_{β,A} ∫ x^{α+β}`.
fn l2_transform(q: &MVPolynomial, keys: &[TermKey]) -> HashMap<TermKey, Scalar> {
    let m = q.dim();
    let mut out = HashMap::new();
    for key in keys {
        let mut acc = Scalar::zero();
        for ((mb, bb), b) in q.terms() {
            if *bb != key.1 || key.0.degree() != mb.degree() {
                continue;
            }
            let mom = sphere_moment(m, key.0.mul(*mb));
            if !mom.is_zero() {
                acc += &(b * &Scalar::real(mom));
            }
        }
        if !acc.is_zero() {
            out.insert(*key, acc);
        }
    }
    out
}

/// Exact Gram matrix summary.
#[derive(Clone, Debug, PartialEq)]
pub struct GramReport {
    pub kind: InnerKind,
    pub size: usize,
    pub diagonal: Vec<Scalar>,
    /// Off-diagonal entry of largest modulus (zero when orthogonal).
    pub max_off_diagonal: Scalar,
    pub first_nonzero_off_diagonal: Option<(usize, usize)>,
    pub ok: bool,
}

impl GramReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": self.kind.as_str(),
            "size": self.size,
            "diagonal": self.diagonal.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "max_off_diagonal": self.max_off_diagonal.to_string(),
            "first_nonzero_off_diagonal": self.first_nonzero_off_diagonal,
            "ok": self.ok,
        })
    }
}

/// Full Gram matrix (row-major). Rows are computed in parallel.
pub fn gram_matrix(elems: &[MVPolynomial], kind: InnerKind) -> Result<Vec<Vec<Scalar>>> {
    if let Some(first) = elems.first() {
        for e in elems {
            same_dim(first.dim(), e.dim())?;
        }
    }
    let homogeneous = elems
        .iter()
        .all(|e| e.homogeneous_degree().is_some() || e.is_zero());
    match kind {
        InnerKind::L2 if homogeneous => {
            let keys: Vec<TermKey> = elems
                .iter()
                .flat_map(|e| e.terms().map(|(k, _)| *k))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let transformed = par::map(elems, |q| l2_transform(q, &keys));
            Ok(par::map_range(elems.len(), |i| {
                let p = &elems[i];
                (0..elems.len())
                    .map(|j| {
                        if both_homogeneous_different(p, &elems[j]) {
                            return Scalar::zero();
                        }
                        let t = &transformed[j];
                        let mut acc = Scalar::zero();
                        for (key, a) in p.terms() {
                            if let Some(v) = t.get(key) {
                                acc += &(&(&a.conj() * v) * &blade_pairing(key.1));
                            }
                        }
                        acc
                    })
                    .collect()
            }))
        }
        _ => {
            let rows = par::map_range(elems.len(), |i| {
                (0..elems.len())
                    .map(|j| inner(kind, &elems[i], &elems[j]))
                    .collect::<Result<Vec<_>>>()
            });
            rows.into_iter().collect()
        }
    }
}

/// Gram report; `ok` iff the matrix is diagonal with positive real diagonal.
pub fn gram(elems: &[MVPolynomial], kind: InnerKind) -> Result<GramReport> {
    let g = gram_matrix(elems, kind)?;
    let n = elems.len();
    let mut max_off = Scalar::zero();
    let mut first = None;
    for (i, row) in g.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j && !v.is_zero() {
                if first.is_none() {
                    first = Some((i, j));
                }
                if v.norm_sqr() > max_off.norm_sqr() {
                    max_off = v.clone();
                }
            }
        }
    }
    let diagonal: Vec<Scalar> = (0..n).map(|i| g[i][i].clone()).collect();
    let ok = first.is_none() && diagonal.iter().all(Scalar::is_positive_real);
    Ok(GramReport {
        kind,
        size: n,
        diagonal,
        max_off_diagonal: max_off,
        first_nonzero_off_diagonal: first,
        ok,
    })
}

/// Per-element ratio `(P,P)_Fischer / (P,P)_L2`.
pub fn norm_ratios(elems: &[MVPolynomial]) -> Result<Vec<Scalar>> {
    let rows: Vec<Result<Scalar>> = par::map(elems, |p| {
        let f = fischer_inner(p, p)?;
        let l = l2_inner(p, p)?;
        let inv = l
            .inv()
            .ok_or_else(|| Error::InvalidArgument("zero L2 norm".into()))?;
        Ok(&f * &inv)
    });
    rows.into_iter().collect()
}

fn to_sparse(p: &MVPolynomial, index: &mut HashMap<TermKey, usize>) -> SparseVec {
    p.terms()
        .map(|(k, c)| {
            let n = index.len();
            (*index.entry(*k).or_insert(n), c.clone())
        })
        .collect()
}

/// Exact rank of a list of polynomials.
pub fn rank(polys: &[MVPolynomial]) -> usize {
    let mut index = HashMap::new();
    let vs: Vec<SparseVec> = polys.iter().map(|p| to_sparse(p, &mut index)).collect();
    linalg::rank(&vs)
}

/// Whether two lists of polynomials span the same space.
pub fn span_equal(a: &[MVPolynomial], b: &[MVPolynomial]) -> bool {
    let ra = rank(a);
    if ra != rank(b) {
        return false;
    }
    let all: Vec<MVPolynomial> = a.iter().chain(b).cloned().collect();
    rank(&all) == ra
}

/// Whether every element of `a` lies in the span of `b`.
pub fn span_contains(b: &[MVPolynomial], a: &[MVPolynomial]) -> bool {
    let all: Vec<MVPolynomial> = b.iter().chain(a).cloned().collect();
    rank(&all) == rank(b)
}

/// `dim P_k` of scalar polynomials in `m` variables: `binom(k+m-1, m-1)`.
pub fn dim_scalar_poly(m: usize, k: u32) -> usize {
    let mut acc: u128 = 1;
    for t in 1..m as u128 {
        acc = acc * (k as u128 + t) / t;
    }
    acc as usize
}

pub fn binom(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for t in 0..r as u128 {
        acc = acc * (n as u128 - t) / (t + 1);
    }
    acc as usize
}

/// Nullity of `op` restricted to the span of `domain`.
pub fn kernel_dim<F>(m: usize, domain: &[TermKey], op: F) -> Result<usize>
where
    F: Fn(&MVPolynomial) -> MVPolynomial + Sync + Send,
{
    let cap = size_cap();
    if domain.len() > cap {
        return Err(Error::SizeCap {
            size: domain.len(),
            cap,
        });
    }
    let images = par::map(domain, |(mono, blade)| {
        op(&MVPolynomial::term(m, *mono, *blade, Scalar::one()))
    });
    Ok(domain.len() - rank(&images))
}

/// A basis of the kernel of `op` on the span of `domain` (dense elimination).
pub fn kernel_basis<F>(m: usize, domain: &[TermKey], op: F) -> Result<Vec<MVPolynomial>>
where
    F: Fn(&MVPolynomial) -> MVPolynomial + Sync + Send,
{
    let cap = size_cap();
    if domain.len() > cap {
        return Err(Error::SizeCap {
            size: domain.len(),
            cap,
        });
    }
    let images = par::map(domain, |(mono, blade)| {
        op(&MVPolynomial::term(m, *mono, *blade, Scalar::one()))
    });
    let mut index = HashMap::new();
    let vs: Vec<SparseVec> = images.iter().map(|p| to_sparse(p, &mut index)).collect();
    let ker = linalg::kernel(&vs, index.len());
    ker.into_iter()
        .map(|coeffs| {
            MVPolynomial::from_terms(
                m,
                domain
                    .iter()
                    .zip(coeffs)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (*k, c)),
            )
        })
        .collect()
}

fn check_hodge_args(m: usize, s: usize) -> Result<()> {
    crate::clifford::check_dim(m)?;
    if s > m {
        return Err(Error::GradeOutOfRange { grade: s, dim: m });
    }
    Ok(())
}

/// `dim ker ∂` on `P_k^s(ℝ^m)`.
pub fn nullspace_dim_hodge(m: usize, k: u32, s: usize) -> Result<usize> {
    check_hodge_args(m, s)?;
    kernel_dim(m, &homogeneous_basis_keys(m, k, &[s]), operators::dirac)
}

/// A raw basis of `ker ∂` on `P_k^s(ℝ^m)`.
pub fn nullspace_basis_hodge(m: usize, k: u32, s: usize) -> Result<Vec<MVPolynomial>> {
    check_hodge_args(m, s)?;
    kernel_basis(m, &homogeneous_basis_keys(m, k, &[s]), operators::dirac)
}

/// `dim ker ∂` on `Cl_m^S`-valued `P_k`.
pub fn nullspace_dim_gmt(m: usize, k: u32, set: &[usize]) -> Result<usize> {
    crate::clifford::check_dim(m)?;
    let grades: Vec<usize> = set
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if let Some(&s) = grades.iter().find(|&&s| s > m) {
        return Err(Error::GradeOutOfRange { grade: s, dim: m });
    }
    if grades.is_empty() {
        return Ok(0);
    }
    kernel_dim(m, &homogeneous_basis_keys(m, k, &grades), operators::dirac)
}

/// `dim ker ∂^±` on `P_k^s(ℝ^m)`.
pub fn kernel_dim_split(plus: bool, m: usize, k: u32, s: usize) -> Result<usize> {
    check_hodge_args(m, s)?;
    let atom = if plus {
        Atom::DiracPlus
    } else {
        Atom::DiracMinus
    };
    kernel_dim(m, &homogeneous_basis_keys(m, k, &[s]), move |p| {
        atom.apply(p)
    })
}

/// `dim Harm_n(ℝ^m)` from the kernel of Δ on scalar polynomials.
pub fn harmonic_dim(m: usize, n: u32) -> Result<usize> {
    crate::clifford::check_dim(m)?;
    kernel_dim(m, &homogeneous_basis_keys(m, n, &[0]), operators::laplacian)
}

/// JSON summary of a membership check over a list of polynomials.
pub fn membership_report(elems: &[MVPolynomial]) -> serde_json::Value {
    let failures: Vec<usize> = elems
        .iter()
        .enumerate()
        .filter(|(_, p)| {
            !(operators::dirac_plus(p).is_zero() && operators::dirac_minus(p).is_zero())
        })
        .map(|(i, _)| i)
        .collect();
    json!({ "checked": elems.len(), "failures": failures, "ok": failures.is_empty() })
}

/// Groups indices by an equivalence key, preserving first-seen order.
pub fn group_by<K: Ord + Clone>(keys: &[K]) -> Vec<Vec<usize>> {
    let mut map: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    let mut order = Vec::new();
    for (i, k) in keys.iter().enumerate() {
        let e = map.entry(k.clone()).or_default();
        if e.is_empty() {
            order.push(k.clone());
        }
        e.push(i);
    }
    order.into_iter().map(|k| map.remove(&k).unwrap()).collect()
}
