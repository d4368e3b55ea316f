//! Gegenbauer polynomials and the closed-form Cauchy-Kovalevskaya
//! multipliers.
//!
//! Throughout, `m` is the dimension of the target space and `x̲` is the
//! vector variable in the first `m - 1` coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mvpoly::{MVPolynomial, Monomial};
use crate::operators::{x_power, Atom, OperatorExpr};
use crate::scalar::Scalar;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, t| acc * t)
}

/// `(ν)_j = ν(ν+1)⋯(ν+j-1)`.
pub fn pochhammer(nu: &BigRational, j: u32) -> BigRational {
    (0..j).fold(BigRational::one(), |acc, t| {
        acc * (nu + BigRational::from_integer(t.into()))
    })
}

/// Coefficients of `C_j^ν(z)` in ascending powers of `z`.
pub fn gegenbauer_coeffs(j: u32, nu: &BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); j as usize + 1];
    for i in 0..=j / 2 {
        let p = j - 2 * i;
        let mut c = pochhammer(nu, j - i) * BigRational::from_integer(BigInt::from(2).pow(p))
            / BigRational::from_integer(factorial(i) * factorial(p));
        if i % 2 == 1 {
            c = -c;
        }
        out[p as usize] = c;
    }
    out
}

/// `C_j^ν(0)`.
pub fn gegenbauer_at_zero(j: u32, nu: &BigRational) -> BigRational {
    gegenbauer_coeffs(j, nu).swap_remove(0)
}

/// The homogenization `r_n^j C_j^ν(x_n / r_n)` with `r_n² = x_1² + ⋯ + x_n²`,
/// as a scalar polynomial on ℝ^dim.
pub fn gegenbauer_homog(j: u32, nu: &BigRational, n: usize, dim: usize) -> MVPolynomial {
    let r2 = MVPolynomial::radius_squared(dim, n);
    let mut acc = MVPolynomial::zero(dim);
    for (p, c) in gegenbauer_coeffs(j, nu).into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let p = p as u32;
        let i = (j - p) / 2;
        let mono = MVPolynomial::term(
            dim,
            Monomial::var(n).pow(p),
            crate::Blade::SCALAR,
            Scalar::real(c),
        );
        let term = mono.mul(&r2.pow(i).expect("same dim")).expect("same dim");
        acc = acc.add(&term).expect("same dim");
    }
    acc
}

/// `μ_k^j`, the normalizer making `X_k^j` restrict to `x̲^j`.
pub fn x_normalizer(m: usize, k: u32, j: u32) -> Result<BigRational> {
    let nu = rat(m as i64 + 2 * k as i64 - 2, 2);
    let l = j / 2;
    if j.is_multiple_of(2) {
        let c = gegenbauer_at_zero(2 * l, &nu);
        return Ok(BigRational::one() / c);
    }
    let d = m as i64 + 2 * k as i64 - 2;
    if d == 0 {
        return Err(Error::InvalidArgument(
            "odd multiplier undefined for m + 2k = 2".into(),
        ));
    }
    let c = gegenbauer_at_zero(2 * l, &(nu + BigRational::one()));
    Ok(rat(m as i64 + 2 * k as i64 + 2 * l as i64 - 1, d) / c)
}

fn em_bar(m: usize) -> MVPolynomial {
    MVPolynomial::e(m, m).neg()
}

/// `X_k^j` on ℝ^m: the polynomial with `CK(x̲^j P) = X_k^j P` for
/// `P ∈ M_k(ℝ^{m-1})`.
pub fn x_poly(m: usize, k: u32, j: u32) -> Result<MVPolynomial> {
    crate::clifford::check_dim(m)?;
    if m < 2 {
        return Err(Error::DimensionUnsupported(m));
    }
    if j == 0 {
        return Ok(MVPolynomial::one(m));
    }
    let nu = rat(m as i64 + 2 * k as i64 - 2, 2);
    let mu = x_normalizer(m, k, j)?;
    let g1 = gegenbauer_homog(j, &nu, m, m);
    let g2 = gegenbauer_homog(j - 1, &(&nu + BigRational::one()), m, m);
    let coef = rat(
        m as i64 + 2 * k as i64 - 2,
        m as i64 + 2 * k as i64 + j as i64 - 2,
    );
    let ex = em_bar(m).mul(&MVPolynomial::vector_variable(m, m - 1))?;
    let inner = g1.add(&g2.mul(&ex)?.scalar_mul(&Scalar::real(coef)))?;
    inner.scalar_mul(&Scalar::real(mu)).mul(&em_bar(m).pow(j)?)
}

/// Which closed-form multiplier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MultiplierKind {
    X,
    XHat,
    XCheck,
    YHat,
    YCheck,
}

/// A closed-form multiplier together with its operator realization.
#[derive(Clone, Debug, PartialEq)]
pub struct CkMultiplier {
    pub kind: MultiplierKind,
    pub m: usize,
    pub k: u32,
    pub j: u32,
    pub s: Option<usize>,
    pub op: OperatorExpr,
}

impl CkMultiplier {
    pub fn apply(&self, p: &MVPolynomial) -> Result<MVPolynomial> {
        self.op.apply(p)
    }
}

impl fmt::Display for CkMultiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            MultiplierKind::X => "X",
            MultiplierKind::XHat => "X̂",
            MultiplierKind::XCheck => "X̌",
            MultiplierKind::YHat => "Ŷ",
            MultiplierKind::YCheck => "Y̌",
        };
        match self.s {
            Some(s) => write!(f, "{name}[m={}, s={s}, k={}, j={}]", self.m, self.k, self.j),
            None => write!(f, "{name}[m={}, k={}, j={}]", self.m, self.k, self.j),
        }
    }
}

fn check_lower(m: usize, s: usize) -> Result<()> {
    if m < 3 {
        return Err(Error::DimensionUnsupported(m));
    }
    if s > m - 1 {
        return Err(Error::GradeOutOfRange {
            grade: s,
            dim: m - 1,
        });
    }
    Ok(())
}

pub fn x_multiplier(m: usize, k: u32, j: u32) -> Result<CkMultiplier> {
    Ok(CkMultiplier {
        kind: MultiplierKind::X,
        m,
        k,
        j,
        s: None,
        op: OperatorExpr::mul_left(x_poly(m, k, j)?),
    })
}

/// `X_{k+1}^{j-1}(x̲∧|•) + c'(X_k^j - X_{k+1}^{j-1}x̲)` with `c' = 1 - c` for
/// the wedge form and `c' = c` for the bullet form.
fn x_split(m: usize, s: usize, k: u32, j: u32, wedge: bool) -> Result<CkMultiplier> {
    check_lower(m, s)?;
    if j == 0 {
        return Err(Error::InvalidArgument(
            "split multipliers need j ≥ 1".into(),
        ));
    }
    let c = rat(s as i64 + k as i64, m as i64 - 1 + 2 * k as i64);
    let weight = if wedge { BigRational::one() - c } else { c };
    let low = x_poly(m, k + 1, j - 1)?;
    let rest = x_poly(m, k, j)?.sub(&low.mul(&MVPolynomial::vector_variable(m, m - 1))?)?;
    let atom = if wedge { Atom::XWedge } else { Atom::XBullet };
    let op = OperatorExpr::mul_left(low)
        .compose(OperatorExpr::atom_in(atom, m - 1))
        .plus(OperatorExpr::mul_left(rest).scaled(Scalar::real(weight)));
    let kind = if wedge {
        MultiplierKind::XHat
    } else {
        MultiplierKind::XCheck
    };
    Ok(CkMultiplier {
        kind,
        m,
        k,
        j,
        s: Some(s),
        op,
    })
}

/// `X̂_j`: `CK(x̲^{j-1}(x̲∧)P) = X̂_j P` for `P ∈ H_k^s(ℝ^{m-1})`.
pub fn x_hat(m: usize, s: usize, k: u32, j: u32) -> Result<CkMultiplier> {
    x_split(m, s, k, j, true)
}

/// `X̌_j`: `CK(x̲^{j-1}(x̲•)P) = X̌_j P`.
pub fn x_check(m: usize, s: usize, k: u32, j: u32) -> Result<CkMultiplier> {
    x_split(m, s, k, j, false)
}

/// `Y̌_{2j+2} = (s+k) X_k^{2j+2} + (2j+2) X̌_{2j+2}`.
pub fn y_check(m: usize, s: usize, k: u32, j: u32) -> Result<CkMultiplier> {
    let xc = x_check(m, s, k, 2 * j + 2)?;
    let op = OperatorExpr::mul_left(x_poly(m, k, 2 * j + 2)?)
        .scaled(Scalar::from_int(s as i64 + k as i64))
        .plus(xc.op.scaled(Scalar::from_int(2 * j as i64 + 2)));
    Ok(CkMultiplier {
        kind: MultiplierKind::YCheck,
        m,
        k,
        j,
        s: Some(s),
        op,
    })
}

/// `Ŷ_{2j+2} = (m-1-s+k) X_k^{2j+2} + (2j+2) X̂_{2j+2}`.
pub fn y_hat(m: usize, s: usize, k: u32, j: u32) -> Result<CkMultiplier> {
    let xh = x_hat(m, s, k, 2 * j + 2)?;
    let op = OperatorExpr::mul_left(x_poly(m, k, 2 * j + 2)?)
        .scaled(Scalar::from_int(m as i64 - 1 - s as i64 + k as i64))
        .plus(xh.op.scaled(Scalar::from_int(2 * j as i64 + 2)));
    Ok(CkMultiplier {
        kind: MultiplierKind::YHat,
        m,
        k,
        j,
        s: Some(s),
        op,
    })
}

/// `x̲^{j}(x̲∧)` (or `(x̲•)`) acting on polynomials of ℝ^m.
pub fn x_split_factor(m: usize, j: u32, wedge: bool) -> OperatorExpr {
    x_split_factor_in(m, m - 1, j, wedge)
}

/// `x^{j}(x∧)` (or `(x•)`) in the first `n` variables of ℝ^dim.
pub fn x_split_factor_in(dim: usize, n: usize, j: u32, wedge: bool) -> OperatorExpr {
    let atom = if wedge { Atom::XWedge } else { Atom::XBullet };
    OperatorExpr::mul_left(x_power(dim, n, j)).compose(OperatorExpr::atom_in(atom, n))
}

/// `y̌_{2j+2} = x̲^{2j+1}((s+k+2j+2)(x̲•) + (s+k)(x̲∧))` for `P` of grade `s`
/// and degree `k` in ℝ^{m-1}.
pub fn y_check_factor(m: usize, s: usize, k: u32, j: u32) -> OperatorExpr {
    y_plus_factor_in(m, m - 1, s, k, j)
}

/// `x^{2j+1}((x•)(A+2j+2) + (x∧)A)` in the first `n` variables, on grade `s`
/// and degree `k`, where `A` acts as `s + k`.
pub fn y_plus_factor_in(dim: usize, n: usize, s: usize, k: u32, j: u32) -> OperatorExpr {
    let a = s as i64 + k as i64;
    OperatorExpr::mul_left(x_power(dim, n, 2 * j + 1)).compose(
        OperatorExpr::atom_in(Atom::XBullet, n)
            .scaled(Scalar::from_int(a + 2 * j as i64 + 2))
            .plus(OperatorExpr::atom_in(Atom::XWedge, n).scaled(Scalar::from_int(a))),
    )
}

/// `ŷ_{2j+2} = x̲^{2j+1}((m+1-s+k+2j)(x̲∧) + (m-1-s+k)(x̲•))`.
pub fn y_hat_factor(m: usize, s: usize, k: u32, j: u32) -> OperatorExpr {
    y_minus_factor_in(m, m - 1, s, k, j)
}

/// `x^{2j+1}((x∧)(B+2j+2) + (x•)B)` in the first `n` variables, on grade `s`
/// and degree `k`, where `B` acts as `n - s + k`.
pub fn y_minus_factor_in(dim: usize, n: usize, s: usize, k: u32, j: u32) -> OperatorExpr {
    let b = n as i64 - s as i64 + k as i64;
    OperatorExpr::mul_left(x_power(dim, n, 2 * j + 1)).compose(
        OperatorExpr::atom_in(Atom::XWedge, n)
            .scaled(Scalar::from_int(b + 2 * j as i64 + 2))
            .plus(OperatorExpr::atom_in(Atom::XBullet, n).scaled(Scalar::from_int(b))),
    )
}

/// `(k-1+m-s)(x•) - (k-1+s)(x∧)`, mapping `H_{k-1}^s` into monogenics of
/// degree `k`.
pub fn gmt_factor(m: usize, k: u32, s: usize) -> OperatorExpr {
    let k = k as i64;
    OperatorExpr::atom(Atom::XBullet)
        .scaled(Scalar::from_int(k - 1 + m as i64 - s as i64))
        .minus(OperatorExpr::atom(Atom::XWedge).scaled(Scalar::from_int(k - 1 + s as i64)))
}

trait MonoPow {
    fn pow(self, p: u32) -> Monomial;
}

impl MonoPow for Monomial {
    fn pow(self, p: u32) -> Monomial {
        (0..p).fold(Monomial::ONE, |acc, _| acc.mul(self))
    }
}
