//! Seeded random polynomials and random elements of solution spaces.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ck::InitialDatum;
use crate::error::Result;
use crate::mvpoly::{homogeneous_basis_keys, MVPolynomial};
use crate::operators::Atom;
use crate::scalar::Scalar;
use crate::verify;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coeff(rng: &mut SampleRng, complex: bool) -> Scalar {
    let mut re = 0;
    let mut im = 0;
    while re == 0 && im == 0 {
        re = rng.gen_range(-4..=4);
        im = if complex { rng.gen_range(-2..=2) } else { 0 };
    }
    Scalar::complex(re, im)
}

/// A nonzero polynomial of degree `k` with values in the given grades, on at
/// most `terms` basis terms (zero when the space is trivial).
pub fn random_poly(
    rng: &mut SampleRng,
    m: usize,
    k: u32,
    grades: &[usize],
    terms: usize,
    complex: bool,
) -> MVPolynomial {
    let keys = homogeneous_basis_keys(m, k, grades);
    let n = terms.clamp(1, keys.len().max(1));
    let chosen: Vec<_> = keys.choose_multiple(rng, n).copied().collect();
    MVPolynomial::from_terms(m, chosen.into_iter().map(|key| (key, coeff(rng, complex))))
        .expect("keys fit the dimension")
}

/// A random combination of `basis` with every coefficient nonzero.
pub fn random_combination(
    rng: &mut SampleRng,
    basis: &[MVPolynomial],
    complex: bool,
) -> Option<MVPolynomial> {
    let first = basis.first()?;
    let mut acc = MVPolynomial::zero(first.dim());
    for b in basis {
        acc = acc
            .add(&b.scalar_mul(&coeff(rng, complex)))
            .expect("same dim");
    }
    Some(acc)
}

/// Random nonzero element of `H_k^s(ℝ^m)` drawn from the raw nullspace
/// basis, or `None` when the space is trivial.
pub fn random_hodge(
    rng: &mut SampleRng,
    m: usize,
    k: u32,
    s: usize,
    complex: bool,
) -> Result<Option<MVPolynomial>> {
    let basis = verify::nullspace_basis_hodge(m, k, s)?;
    Ok(random_combination(rng, &basis, complex))
}

fn hyperplane_kernel(m: usize, k: u32, s: usize, atom: Atom) -> Result<Vec<MVPolynomial>> {
    let keys = homogeneous_basis_keys(m - 1, k, &[s]);
    verify::kernel_basis(m, &keys, move |p| atom.apply_in(p, m - 1))
}

/// Draws initial data `(u0, v0)` with `∂̲⁺u0 = 0` and `∂̲⁻v0 = 0` for one
/// `(m, s, k)`; the hyperplane kernels are computed once.
#[derive(Clone, Debug)]
pub struct InitialSampler {
    m: usize,
    s: usize,
    k: u32,
    plus: Vec<MVPolynomial>,
    minus: Vec<MVPolynomial>,
}

impl InitialSampler {
    pub fn new(m: usize, s: usize, k: u32) -> Result<Self> {
        let plus = if s < m {
            hyperplane_kernel(m, k, s, Atom::DiracPlus)?
        } else {
            Vec::new()
        };
        let minus = match s.checked_sub(1) {
            Some(g) if g < m => hyperplane_kernel(m, k, g, Atom::DiracMinus)?,
            _ => Vec::new(),
        };
        Ok(InitialSampler {
            m,
            s,
            k,
            plus,
            minus,
        })
    }

    /// Each part is independently zero with probability 1/4.
    pub fn sample(&self, rng: &mut SampleRng, complex: bool) -> Result<InitialDatum> {
        let zero = MVPolynomial::zero(self.m);
        let mut pick = |basis: &[MVPolynomial]| {
            if rng.gen_ratio(1, 4) {
                return zero.clone();
            }
            random_combination(rng, basis, complex).unwrap_or_else(|| zero.clone())
        };
        let u0 = pick(&self.plus);
        let v0 = pick(&self.minus);
        InitialDatum::new(self.m, self.s, self.k, u0, v0)
    }
}

pub fn random_initial_datum(
    rng: &mut SampleRng,
    m: usize,
    s: usize,
    k: u32,
    complex: bool,
) -> Result<InitialDatum> {
    InitialSampler::new(m, s, k)?.sample(rng, complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::dirac;

    #[test]
    fn deterministic_and_valid() {
        let a = random_poly(&mut rng(3), 3, 2, &[1, 2], 5, true);
        let b = random_poly(&mut rng(3), 3, 2, &[1, 2], 5, true);
        assert_eq!(a, b);
        assert!(a.is_homogeneous(2) && !a.is_zero());
        let h = random_hodge(&mut rng(1), 3, 2, 1, false).unwrap().unwrap();
        assert!(dirac(&h).is_zero() && h.is_real());
        assert!(random_hodge(&mut rng(1), 3, 2, 0, false).unwrap().is_none());
        for seed in 0..5 {
            let d = random_initial_datum(&mut rng(seed), 4, 2, 2, true).unwrap();
            assert!(d.u0().is_grade(2) && d.v0().is_grade(1));
        }
    }
}
