//! Invariant operators on Clifford-valued polynomials.
//!
//! Every operator can act in the first `n` variables only (`*_in` variants);
//! this is how the hyperplane operators `∂̲`, `x̲∧`, … of the
//! Cauchy-Kovalevskaya recursion are realized inside ℝ^m.
//!
//! Powers of the vector variable are Clifford powers: `x^{2j} = (x·x)^j =
//! (-|x|²)^j` and `x^{2j+1} = x^{2j}·x`.

use std::fmt;

use crate::clifford::Blade;
use crate::error::{Error, Result};
use crate::mvpoly::{Acc, MVPolynomial, Monomial};
use crate::scalar::Scalar;

/// The named atomic operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `∂ = Σ e_j ∂_{x_j}`
    Dirac,
    /// `∂⁺ = Σ e_j ∧ ∂_{x_j}`
    DiracPlus,
    /// `∂⁻ = Σ e_j • ∂_{x_j}`
    DiracMinus,
    /// left multiplication by `x = Σ x_j e_j`
    X,
    XWedge,
    XBullet,
    /// `E = Σ x_j ∂_{x_j}`
    Euler,
    /// `∂⁺⌋ = -Σ (e_j∧)(e_j•)`
    FermiPlus,
    /// `∂⁻⌋ = -Σ (e_j•)(e_j∧)`
    FermiMinus,
    /// `A = E + ∂⁺⌋`
    A,
    /// `B = E + ∂⁻⌋`
    B,
    /// `Δ = Σ ∂²_{x_j}`
    Laplacian,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Full,
    Wedge,
    Bullet,
}

impl Part {
    fn keeps(self, j: usize, b: Blade) -> bool {
        match self {
            Part::Full => true,
            Part::Wedge => !b.contains(j),
            Part::Bullet => b.contains(j),
        }
    }
}

fn check_vars(p: &MVPolynomial, n: usize) -> usize {
    assert!(
        n <= p.dim(),
        "operator acts in {n} variables but polynomial lives in dimension {}",
        p.dim()
    );
    n
}

/// `Σ_{j≤n} e_j ∘ ∂_j` restricted to one part of the Clifford product.
fn dirac_part(p: &MVPolynomial, n: usize, part: Part) -> MVPolynomial {
    let n = check_vars(p, n);
    let mut acc = Acc::new(p.dim());
    for ((mo, b), c) in p.terms() {
        for j in 1..=n {
            let a = mo.exp(j);
            if a == 0 || !part.keeps(j, *b) {
                continue;
            }
            let (neg, nb) = Blade::generator(j).mul(*b);
            acc.add_signed((mo.lower(j), nb), &c.mul_int(a as i64), neg);
        }
    }
    acc.finish()
}

/// `Σ_{j≤n} x_j e_j ∘` restricted to one part of the Clifford product.
fn x_part(p: &MVPolynomial, n: usize, part: Part) -> MVPolynomial {
    let n = check_vars(p, n);
    let mut acc = Acc::new(p.dim());
    for ((mo, b), c) in p.terms() {
        for j in 1..=n {
            if !part.keeps(j, *b) {
                continue;
            }
            let (neg, nb) = Blade::generator(j).mul(*b);
            acc.add_signed((mo.mul(Monomial::var(j)), nb), c, neg);
        }
    }
    acc.finish()
}

fn euler_in(p: &MVPolynomial, n: usize) -> MVPolynomial {
    let n = check_vars(p, n);
    let mut acc = Acc::new(p.dim());
    for ((mo, b), c) in p.terms() {
        let d: u32 = (1..=n).map(|j| mo.exp(j)).sum();
        acc.add((*mo, *b), c.mul_int(d as i64));
    }
    acc.finish()
}

/// `-Σ_j (e_j op1)(e_j op2)` evaluated literally on each blade.
fn fermi_in(p: &MVPolynomial, n: usize, plus: bool) -> MVPolynomial {
    let n = check_vars(p, n);
    let mut acc = Acc::new(p.dim());
    for ((mo, b), c) in p.terms() {
        for j in 1..=n {
            // inner letter first: • for ∂⁺⌋, ∧ for ∂⁻⌋
            let first_ok = if plus { b.contains(j) } else { !b.contains(j) };
            if !first_ok {
                continue;
            }
            let g = Blade::generator(j);
            let (n1, b1) = g.mul(*b);
            let second_ok = if plus {
                !b1.contains(j)
            } else {
                b1.contains(j)
            };
            if !second_ok {
                continue;
            }
            let (n2, b2) = g.mul(b1);
            // leading minus sign of the definition
            acc.add_signed((*mo, b2), c, !(n1 ^ n2));
        }
    }
    acc.finish()
}

fn laplacian_in(p: &MVPolynomial, n: usize) -> MVPolynomial {
    let n = check_vars(p, n);
    let mut acc = Acc::new(p.dim());
    for ((mo, b), c) in p.terms() {
        for j in 1..=n {
            let a = mo.exp(j);
            if a >= 2 {
                acc.add((mo.lower(j).lower(j), *b), c.mul_int((a * (a - 1)) as i64));
            }
        }
    }
    acc.finish()
}

impl Atom {
    /// Applies the operator acting in the first `n` variables/generators.
    pub fn apply_in(self, p: &MVPolynomial, n: usize) -> MVPolynomial {
        match self {
            Atom::Dirac => dirac_part(p, n, Part::Full),
            Atom::DiracPlus => dirac_part(p, n, Part::Wedge),
            Atom::DiracMinus => dirac_part(p, n, Part::Bullet),
            Atom::X => x_part(p, n, Part::Full),
            Atom::XWedge => x_part(p, n, Part::Wedge),
            Atom::XBullet => x_part(p, n, Part::Bullet),
            Atom::Euler => euler_in(p, n),
            Atom::FermiPlus => fermi_in(p, n, true),
            Atom::FermiMinus => fermi_in(p, n, false),
            Atom::A => add(&euler_in(p, n), &fermi_in(p, n, true)),
            Atom::B => add(&euler_in(p, n), &fermi_in(p, n, false)),
            Atom::Laplacian => laplacian_in(p, n),
        }
    }

    pub fn apply(self, p: &MVPolynomial) -> MVPolynomial {
        self.apply_in(p, p.dim())
    }

    fn symbol(self) -> &'static str {
        match self {
            Atom::Dirac => "∂",
            Atom::DiracPlus => "∂⁺",
            Atom::DiracMinus => "∂⁻",
            Atom::X => "x",
            Atom::XWedge => "(x∧)",
            Atom::XBullet => "(x•)",
            Atom::Euler => "E",
            Atom::FermiPlus => "∂⁺⌋",
            Atom::FermiMinus => "∂⁻⌋",
            Atom::A => "A",
            Atom::B => "B",
            Atom::Laplacian => "Δ",
        }
    }
}

fn add(a: &MVPolynomial, b: &MVPolynomial) -> MVPolynomial {
    a.add(b).expect("same dimension")
}

pub fn dirac(p: &MVPolynomial) -> MVPolynomial {
    Atom::Dirac.apply(p)
}
pub fn dirac_plus(p: &MVPolynomial) -> MVPolynomial {
    Atom::DiracPlus.apply(p)
}
pub fn dirac_minus(p: &MVPolynomial) -> MVPolynomial {
    Atom::DiracMinus.apply(p)
}
pub fn x_mult(p: &MVPolynomial) -> MVPolynomial {
    Atom::X.apply(p)
}
pub fn x_wedge(p: &MVPolynomial) -> MVPolynomial {
    Atom::XWedge.apply(p)
}
pub fn x_bullet(p: &MVPolynomial) -> MVPolynomial {
    Atom::XBullet.apply(p)
}
pub fn euler(p: &MVPolynomial) -> MVPolynomial {
    Atom::Euler.apply(p)
}
pub fn fermi_plus(p: &MVPolynomial) -> MVPolynomial {
    Atom::FermiPlus.apply(p)
}
pub fn fermi_minus(p: &MVPolynomial) -> MVPolynomial {
    Atom::FermiMinus.apply(p)
}
pub fn op_a(p: &MVPolynomial) -> MVPolynomial {
    Atom::A.apply(p)
}
pub fn op_b(p: &MVPolynomial) -> MVPolynomial {
    Atom::B.apply(p)
}
pub fn laplacian(p: &MVPolynomial) -> MVPolynomial {
    Atom::Laplacian.apply(p)
}

/// The Clifford power `x^j` of the vector variable in the first `n`
/// variables, as a polynomial in ℝ^dim.
pub fn x_power(dim: usize, n: usize, j: u32) -> MVPolynomial {
    let sq = MVPolynomial::radius_squared(dim, n).neg();
    let even = sq.pow(j / 2).expect("same dimension");
    if j.is_multiple_of(2) {
        even
    } else {
        even.mul(&MVPolynomial::vector_variable(dim, n))
            .expect("same dimension")
    }
}

/// A letter of a word in Ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Wedge,
    Bullet,
}

/// A word written left to right as in `(x∧)(x•)`; the rightmost letter
/// acts first.
pub type Word = Vec<Letter>;

/// Applies `w`; the empty word is the identity.
pub fn apply_word(w: &[Letter], p: &MVPolynomial) -> Result<MVPolynomial> {
    Ok(w.iter().rev().fold(p.clone(), |acc, l| match l {
        Letter::Wedge => x_wedge(&acc),
        Letter::Bullet => x_bullet(&acc),
    }))
}

/// The two alternating words of length `len` whose first-acting letter is
/// `first`; (x∧)² = (x•)² = 0 makes every other word trivial.
pub fn alternating_word(len: usize, first: Letter) -> Word {
    let mut w = Vec::with_capacity(len);
    let mut cur = first;
    for _ in 0..len {
        w.push(cur);
        cur = match cur {
            Letter::Wedge => Letter::Bullet,
            Letter::Bullet => Letter::Wedge,
        };
    }
    w.reverse();
    w
}

pub fn word_to_string(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|l| match l {
            Letter::Wedge => "(x∧)",
            Letter::Bullet => "(x•)",
        })
        .collect()
}

/// A composable description of a linear map on polynomials.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorExpr {
    Identity,
    Atom {
        atom: Atom,
        vars: Option<usize>,
    },
    /// left multiplication by a polynomial
    MulLeft(MVPolynomial),
    /// right multiplication by a polynomial
    MulRight(MVPolynomial),
    /// `Compose([T, S])` is `T ∘ S`: `S` acts first
    Compose(Vec<OperatorExpr>),
    Sum(Vec<OperatorExpr>),
    Scale(Scalar, Box<OperatorExpr>),
}

impl OperatorExpr {
    pub fn atom(atom: Atom) -> Self {
        OperatorExpr::Atom { atom, vars: None }
    }

    pub fn atom_in(atom: Atom, n: usize) -> Self {
        OperatorExpr::Atom {
            atom,
            vars: Some(n),
        }
    }

    pub fn mul_left(p: MVPolynomial) -> Self {
        OperatorExpr::MulLeft(p)
    }

    /// `self ∘ other`.
    pub fn compose(self, other: OperatorExpr) -> Self {
        let mut parts = match self {
            OperatorExpr::Compose(v) => v,
            e => vec![e],
        };
        match other {
            OperatorExpr::Compose(v) => parts.extend(v),
            e => parts.push(e),
        }
        OperatorExpr::Compose(parts)
    }

    pub fn plus(self, other: OperatorExpr) -> Self {
        let mut parts = match self {
            OperatorExpr::Sum(v) => v,
            e => vec![e],
        };
        parts.push(other);
        OperatorExpr::Sum(parts)
    }

    pub fn minus(self, other: OperatorExpr) -> Self {
        self.plus(other.scaled(Scalar::from_int(-1)))
    }

    pub fn scaled(self, c: Scalar) -> Self {
        OperatorExpr::Scale(c, Box::new(self))
    }

    /// `[T, S] = TS - ST`
    pub fn commutator(t: OperatorExpr, s: OperatorExpr) -> Self {
        t.clone().compose(s.clone()).minus(s.compose(t))
    }

    /// `{T, S} = TS + ST`
    pub fn anticommutator(t: OperatorExpr, s: OperatorExpr) -> Self {
        t.clone().compose(s.clone()).plus(s.compose(t))
    }

    pub fn apply(&self, p: &MVPolynomial) -> Result<MVPolynomial> {
        Ok(match self {
            OperatorExpr::Identity => p.clone(),
            OperatorExpr::Atom { atom, vars } => {
                let n = vars.unwrap_or(p.dim());
                if n > p.dim() {
                    return Err(Error::IndexOutOfRange {
                        index: n,
                        dim: p.dim(),
                    });
                }
                atom.apply_in(p, n)
            }
            OperatorExpr::MulLeft(q) => q.mul(p)?,
            OperatorExpr::MulRight(q) => p.mul(q)?,
            OperatorExpr::Compose(parts) => {
                let mut acc = p.clone();
                for op in parts.iter().rev() {
                    acc = op.apply(&acc)?;
                }
                acc
            }
            OperatorExpr::Sum(parts) => {
                let mut acc = MVPolynomial::zero(p.dim());
                for op in parts {
                    acc = acc.add(&op.apply(p)?)?;
                }
                acc
            }
            OperatorExpr::Scale(c, op) => op.apply(p)?.scalar_mul(c),
        })
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorExpr::Identity => write!(f, "1"),
            OperatorExpr::Atom { atom, vars } => match vars {
                Some(n) => write!(f, "{}[{n}]", atom.symbol()),
                None => write!(f, "{}", atom.symbol()),
            },
            OperatorExpr::MulLeft(q) => write!(f, "[{q}]·"),
            OperatorExpr::MulRight(q) => write!(f, "·[{q}]"),
            OperatorExpr::Compose(parts) => {
                for p in parts {
                    match p {
                        OperatorExpr::Sum(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
            OperatorExpr::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            OperatorExpr::Scale(c, op) => match **op {
                OperatorExpr::Sum(_) => write!(f, "{c}({op})"),
                _ => write!(f, "{c}{op}"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Blade;

    fn x(m: usize, j: usize) -> MVPolynomial {
        MVPolynomial::var(m, j)
    }
    fn e(m: usize, j: usize) -> MVPolynomial {
        MVPolynomial::e(m, j)
    }
    fn eb(m: usize, idx: &[usize]) -> MVPolynomial {
        MVPolynomial::blade(m, Blade::from_indices(idx).unwrap())
    }
    fn zp(m: usize) -> MVPolynomial {
        x(m, 1).add(&x(m, 2).scalar_mul(&Scalar::i())).unwrap()
    }
    fn wp(m: usize) -> MVPolynomial {
        e(m, 1).add(&e(m, 2).scalar_mul(&Scalar::i())).unwrap()
    }

    #[test]
    fn dirac_examples() {
        for m in 2..=5 {
            let xv = MVPolynomial::vector_variable(m, m);
            assert_eq!(
                dirac(&xv),
                MVPolynomial::scalar(m, Scalar::from_int(-(m as i64)))
            );
        }
        assert!(dirac(&zp(3).mul(&wp(3)).unwrap()).is_zero());
        assert!(dirac(&MVPolynomial::scalar(3, Scalar::from_int(4))).is_zero());
    }

    #[test]
    fn dirac_split_examples() {
        let m = 3;
        assert_eq!(dirac_plus(&x(m, 1)), e(m, 1));
        assert_eq!(
            dirac_minus(&x(m, 1).mul(&e(m, 1)).unwrap()),
            MVPolynomial::scalar(m, Scalar::from_int(-1))
        );
        let sc = x(m, 1).mul(&x(m, 2)).unwrap().add(&x(m, 3)).unwrap();
        assert!(dirac_minus(&sc).is_zero());
    }

    #[test]
    fn x_split_examples() {
        let m = 3;
        assert_eq!(x_bullet(&wp(m)), zp(m).neg());
        assert!(x_wedge(&eb(m, &[1, 2, 3])).is_zero());
        assert!(x_bullet(&MVPolynomial::one(m)).is_zero());
    }

    #[test]
    fn euler_examples() {
        let m = 2;
        let p = x(m, 1).pow(2).unwrap().mul(&x(m, 2)).unwrap();
        assert_eq!(euler(&p), p.scale_int(3));
        assert!(euler(&MVPolynomial::one(m)).is_zero());
        let q = zp(3).pow(2).unwrap().mul(&wp(3)).unwrap();
        assert_eq!(euler(&q), q.scale_int(2));
    }

    #[test]
    fn fermionic_examples() {
        assert_eq!(fermi_plus(&eb(3, &[1, 2])), eb(3, &[1, 2]).scale_int(2));
        assert_eq!(fermi_minus(&e(3, 1)), e(3, 1).scale_int(2));
        assert!(fermi_plus(&MVPolynomial::one(3)).is_zero());
    }

    #[test]
    fn a_b_examples() {
        let p = x(3, 1).mul(&eb(3, &[1, 2])).unwrap();
        assert_eq!(op_a(&p), p.scale_int(3));
        assert_eq!(op_b(&p), p.scale_int(2));
        assert!(op_a(&MVPolynomial::one(3)).is_zero());
    }

    #[test]
    fn laplacian_examples() {
        let m = 3;
        assert_eq!(
            laplacian(&x(m, 1).pow(2).unwrap()),
            MVPolynomial::scalar(m, Scalar::from_int(2))
        );
        let h = x(m, 1)
            .pow(2)
            .unwrap()
            .sub(&x(m, 2).pow(2).unwrap())
            .unwrap();
        assert!(laplacian(&h).is_zero());
        // Δ(|x|² p) = (4k + 2m) p for harmonic p of degree k
        let p = zp(m).pow(3).unwrap().mul(&wp(m)).unwrap();
        let r2 = MVPolynomial::radius_squared(m, m);
        assert_eq!(
            laplacian(&r2.mul(&p).unwrap()),
            p.scale_int(4 * 3 + 2 * m as i64)
        );
    }

    #[test]
    fn word_examples() {
        let m = 3;
        let p = zp(m).mul(&wp(m)).unwrap();
        assert!(apply_word(&[Letter::Wedge, Letter::Wedge], &p)
            .unwrap()
            .is_zero());
        assert!(
            apply_word(&[Letter::Wedge, Letter::Bullet], &MVPolynomial::one(m))
                .unwrap()
                .is_zero()
        );
        assert_eq!(
            apply_word(&[Letter::Bullet, Letter::Wedge], &MVPolynomial::one(m)).unwrap(),
            MVPolynomial::radius_squared(m, m).neg()
        );
        assert_eq!(apply_word(&[], &p).unwrap(), p);
        assert_eq!(
            alternating_word(3, Letter::Wedge),
            vec![Letter::Wedge, Letter::Bullet, Letter::Wedge]
        );
        assert_eq!(
            alternating_word(2, Letter::Wedge),
            vec![Letter::Bullet, Letter::Wedge]
        );
    }

    #[test]
    fn restricted_vars() {
        // ∂̲ in ℝ^3 ignores x3 and e3
        let m = 3;
        let p = x(m, 3)
            .mul(&e(m, 3))
            .unwrap()
            .add(&x(m, 1).mul(&e(m, 1)).unwrap())
            .unwrap();
        assert_eq!(
            Atom::Dirac.apply_in(&p, 2),
            MVPolynomial::scalar(m, Scalar::from_int(-1))
        );
        assert_eq!(x_power(3, 2, 2), MVPolynomial::radius_squared(3, 2).neg());
        assert_eq!(x_power(3, 3, 1), MVPolynomial::vector_variable(3, 3));
    }

    #[test]
    fn expr_composition() {
        let m = 3;
        let p = zp(m).mul(&wp(m)).unwrap();
        // x = (x∧) + (x•)
        let split = OperatorExpr::atom(Atom::XWedge).plus(OperatorExpr::atom(Atom::XBullet));
        assert_eq!(split.apply(&p).unwrap(), x_mult(&p));
        // ∂(x p) + x(∂ p) = -(m + 2E) p
        let ac = OperatorExpr::anticommutator(
            OperatorExpr::atom(Atom::Dirac),
            OperatorExpr::atom(Atom::X),
        );
        let lhs = ac.apply(&p).unwrap();
        let rhs = p
            .scale_int(-(m as i64))
            .sub(&euler(&p).scale_int(2))
            .unwrap();
        assert_eq!(lhs, rhs);
        assert!(OperatorExpr::atom_in(Atom::Dirac, 5).apply(&p).is_err());
        assert_eq!(
            OperatorExpr::atom(Atom::Dirac)
                .compose(OperatorExpr::atom(Atom::X))
                .to_string(),
            "∂x"
        );
    }
}
