//! Cauchy-Kovalevskaya extension from the hyperplane `x_m = 0`.
//!
//! The generic form sums the exponential series `Σ_j x_m^j/j! (e_m ∂̲)^j p0`,
//! which terminates at `j = deg p0`. For Hodge-de Rham data
//! `p0 = u0 + v0 e_m` the series splits into the coupled recursions
//! `u_{2t} = (∂̲⁺∂̲⁻)^t u0`, `u_{2t+1} = σ (∂̲⁺∂̲⁻)^t ∂̲⁺ v0`,
//! `v_{2t} = (∂̲⁻∂̲⁺)^t v0`, `v_{2t+1} = σ (∂̲⁻∂̲⁺)^t ∂̲⁻ u0`, with
//! `σ = (-1)^{s-1}`, and the extension is `Σ_j x_m^j/j! (u_j + v_j e_m)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::clifford::{check_dim, Blade};
use crate::error::{Error, Result};
use crate::mvpoly::{MVPolynomial, Monomial};
use crate::operators::Atom;
use crate::par;
use crate::scalar::Scalar;

/// Validated initial data `(u0, v0)` for `H_k^s(ℝ^m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct InitialDatum {
    m: usize,
    s: usize,
    k: u32,
    u0: MVPolynomial,
    v0: MVPolynomial,
}

fn check_on_hyperplane(p: &MVPolynomial, what: &str) -> Result<()> {
    let m = p.dim();
    if p.terms().any(|((mo, _), _)| mo.exp(m) > 0) {
        return Err(Error::DependsOnLastVariable);
    }
    if p.terms().any(|((_, b), _)| b.contains(m)) {
        return Err(Error::Compatibility(format!("{what} contains e_{m}")));
    }
    Ok(())
}

fn check_shape(p: &MVPolynomial, k: u32, grade: Option<usize>) -> Result<()> {
    if p.is_zero() {
        return Ok(());
    }
    if !p.is_homogeneous(k) {
        return Err(Error::NotHomogeneous);
    }
    match grade {
        Some(s) if p.is_grade(s) => Ok(()),
        Some(s) => Err(Error::NotPureGrade(s)),
        None => Err(Error::Compatibility(
            "nonzero datum in an empty grade".into(),
        )),
    }
}

impl InitialDatum {
    pub fn new(m: usize, s: usize, k: u32, u0: MVPolynomial, v0: MVPolynomial) -> Result<Self> {
        check_dim(m)?;
        if m < 2 {
            return Err(Error::DimensionUnsupported(m));
        }
        if s > m {
            return Err(Error::GradeOutOfRange { grade: s, dim: m });
        }
        for p in [&u0, &v0] {
            if p.dim() != m {
                return Err(Error::DimensionMismatch {
                    left: m,
                    right: p.dim(),
                });
            }
        }
        check_on_hyperplane(&u0, "u0")?;
        check_on_hyperplane(&v0, "v0")?;
        check_shape(&u0, k, (s < m).then_some(s))?;
        check_shape(&v0, k, s.checked_sub(1))?;
        if !Atom::DiracPlus.apply_in(&u0, m - 1).is_zero() {
            return Err(Error::Compatibility("∂̲⁺u0 ≠ 0".into()));
        }
        if !Atom::DiracMinus.apply_in(&v0, m - 1).is_zero() {
            return Err(Error::Compatibility("∂̲⁻v0 ≠ 0".into()));
        }
        Ok(InitialDatum { m, s, k, u0, v0 })
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn s(&self) -> usize {
        self.s
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn u0(&self) -> &MVPolynomial {
        &self.u0
    }
    pub fn v0(&self) -> &MVPolynomial {
        &self.v0
    }

    /// `u0 + v0 e_m`.
    pub fn combined(&self) -> MVPolynomial {
        self.u0.add(&self.v0.right_mul_e(self.m)).expect("same dim")
    }
}

/// Whether `(u0, v0)` is valid initial data of grade `s` and degree `k`.
pub fn is_in_iks(u0: &MVPolynomial, v0: &MVPolynomial, s: usize, k: u32) -> bool {
    InitialDatum::new(u0.dim(), s, k, u0.clone(), v0.clone()).is_ok()
}

fn inv_factorial(j: u32) -> Scalar {
    let f = (2..=j).fold(BigInt::from(1), |acc, t| acc * t);
    Scalar::real(BigRational::new(1.into(), f))
}

fn xm_power(m: usize, j: u32) -> Monomial {
    (0..j).fold(Monomial::ONE, |acc, _| acc.mul(Monomial::var(m)))
}

fn times_xm(p: &MVPolynomial, j: u32) -> MVPolynomial {
    let m = p.dim();
    let t = MVPolynomial::term(m, xm_power(m, j), Blade::SCALAR, inv_factorial(j));
    t.mul(p).expect("same dim")
}

/// `Σ_{j=0}^{k} x_m^j/j! (e_m ∂̲)^j p0` for an `x_m`-free homogeneous `p0`.
pub fn ck_extend_generic(p0: &MVPolynomial) -> Result<MVPolynomial> {
    let m = p0.dim();
    if m < 2 {
        return Err(Error::DimensionUnsupported(m));
    }
    if p0.terms().any(|((mo, _), _)| mo.exp(m) > 0) {
        return Err(Error::DependsOnLastVariable);
    }
    let Some(k) = p0.homogeneous_degree() else {
        return if p0.is_zero() {
            Ok(p0.clone())
        } else {
            Err(Error::NotHomogeneous)
        };
    };
    let em = MVPolynomial::e(m, m);
    let mut acc = p0.clone();
    let mut cur = p0.clone();
    for j in 1..=k {
        cur = em.mul(&Atom::Dirac.apply_in(&cur, m - 1))?;
        if cur.is_zero() {
            break;
        }
        acc = acc.add(&times_xm(&cur, j))?;
    }
    Ok(acc)
}

/// The coefficient sequence `(u_j, v_j)` for `j = 0..=k`.
pub fn hodge_chain(d: &InitialDatum) -> Vec<(MVPolynomial, MVPolynomial)> {
    let n = d.m - 1;
    let plus = |p: &MVPolynomial| Atom::DiracPlus.apply_in(p, n);
    let minus = |p: &MVPolynomial| Atom::DiracMinus.apply_in(p, n);
    let sigma_neg = d.s.is_multiple_of(2); // (-1)^{s-1}
    let sign = |p: MVPolynomial| if sigma_neg { p.neg() } else { p };
    let mut out = vec![(d.u0.clone(), d.v0.clone())];
    // even: (a, b) = ((∂̲⁺∂̲⁻)^t u0, (∂̲⁻∂̲⁺)^t v0); odd from the previous even pair
    let (mut ue, mut ve) = (d.u0.clone(), d.v0.clone());
    for j in 1..=d.k {
        if j % 2 == 1 {
            out.push((sign(plus(&ve)), sign(minus(&ue))));
        } else {
            ue = plus(&minus(&ue));
            ve = minus(&plus(&ve));
            out.push((ue.clone(), ve.clone()));
        }
    }
    out
}

/// CK extension of Hodge-de Rham initial data.
pub fn ck_extend_hodge(d: &InitialDatum) -> MVPolynomial {
    let m = d.m;
    let mut acc = MVPolynomial::zero(m);
    for (j, (u, v)) in hodge_chain(d).into_iter().enumerate() {
        if u.is_zero() && v.is_zero() {
            continue;
        }
        let piece = u.add(&v.right_mul_e(m)).expect("same dim");
        acc = acc.add(&times_xm(&piece, j as u32)).expect("same dim");
    }
    acc
}

/// Extends a batch of data, in parallel when enabled.
pub fn ck_extend_batch(data: &[InitialDatum]) -> Vec<MVPolynomial> {
    par::map(data, ck_extend_hodge)
}

/// The initial data of `p ∈ H_k^s(ℝ^m)`: `split_em(p|_{x_m=0})`.
pub fn restrict_to_initial(p: &MVPolynomial, s: usize, k: u32) -> Result<InitialDatum> {
    if !Atom::Dirac.apply(p).is_zero() {
        return Err(Error::Compatibility("polynomial is not monogenic".into()));
    }
    check_shape(p, k, Some(s))?;
    let (u0, v0) = p.restrict_last().split_em()?;
    InitialDatum::new(p.dim(), s, k, u0, v0)
}
