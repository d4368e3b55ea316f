//! Projections onto `Ker ∂±`, multiplicity-free splittings of those kernels,
//! and a dimension count of the full Fischer decomposition.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::mvpoly::{homogeneous_basis_keys, MVPolynomial};
use crate::operators::{
    self, alternating_word, apply_word, dirac_minus, dirac_plus, Letter, OperatorExpr,
};
use crate::par;
use crate::scalar::Scalar;
use crate::special::{x_split_factor_in, y_minus_factor_in, y_plus_factor_in};
use crate::verify::{self, InnerKind};

/// Supplies a basis of `H_k^s(ℝ^m)` as `(m, k, s) ↦ elements`.
pub type BasisProvider<'a> = dyn Fn(usize, u32, usize) -> Result<Vec<MVPolynomial>> + Sync + 'a;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KerSign {
    Plus,
    Minus,
}

impl KerSign {
    pub fn as_str(self) -> &'static str {
        match self {
            KerSign::Plus => "+",
            KerSign::Minus => "-",
        }
    }
}

fn shape(p: &MVPolynomial) -> Result<Option<(usize, u32)>> {
    if p.is_zero() {
        return Ok(None);
    }
    let k = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    match p.grades().as_slice() {
        [s] => Ok(Some((*s, k))),
        _ => Err(Error::InvalidArgument("polynomial has mixed grades".into())),
    }
}

/// `-(s+k)^{-1} ∂⁺(x•)`, the projection of `P_k^s` onto `Ker ∂⁺`.
pub fn proj_plus(p: &MVPolynomial) -> Result<MVPolynomial> {
    let Some((s, k)) = shape(p)? else {
        return Ok(p.clone());
    };
    if s == 0 && k == 0 {
        return Ok(p.clone());
    }
    let c = Scalar::ratio(-1, (s as i64) + k as i64);
    Ok(dirac_plus(&operators::x_bullet(p)).scalar_mul(&c))
}

/// `-(m-s+k)^{-1} ∂⁻(x∧)`, the projection of `P_k^s` onto `Ker ∂⁻`.
pub fn proj_minus(p: &MVPolynomial) -> Result<MVPolynomial> {
    let Some((s, k)) = shape(p)? else {
        return Ok(p.clone());
    };
    let m = p.dim();
    if s == m && k == 0 {
        return Ok(p.clone());
    }
    let c = Scalar::ratio(-1, (m - s) as i64 + k as i64);
    Ok(dirac_minus(&operators::x_wedge(p)).scalar_mul(&c))
}

/// The space a piece is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// `H_k^s`
    Hodge { k: u32, s: usize },
    /// all of `P_k^s`
    Full { k: u32, s: usize },
}

impl Source {
    fn to_json(self) -> Value {
        match self {
            Source::Hodge { k, s } => json!({ "space": "H", "k": k, "s": s }),
            Source::Full { k, s } => json!({ "space": "P", "k": k, "s": s }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Piece {
    pub factor: String,
    pub source: Source,
    pub elements: Vec<MVPolynomial>,
}

#[derive(Clone, Debug)]
pub struct KernelDecomposition {
    pub sign: KerSign,
    pub m: usize,
    pub k: u32,
    pub s: usize,
    pub pieces: Vec<Piece>,
    pub oracle_dim: usize,
}

impl KernelDecomposition {
    pub fn total_dim(&self) -> usize {
        self.pieces.iter().map(|p| p.elements.len()).sum()
    }

    pub fn all_elements(&self) -> Vec<MVPolynomial> {
        self.pieces
            .iter()
            .flat_map(|p| p.elements.iter().cloned())
            .collect()
    }

    /// Every element lies in the kernel.
    pub fn members_ok(&self) -> bool {
        let op = match self.sign {
            KerSign::Plus => dirac_plus,
            KerSign::Minus => dirac_minus,
        };
        self.pieces.iter().all(|p| {
            p.elements.iter().all(|e| {
                !e.is_zero() && e.is_grade(self.s) && e.is_homogeneous(self.k) && op(e).is_zero()
            })
        })
    }

    /// Elements of distinct pieces are Fischer-orthogonal.
    pub fn pieces_orthogonal(&self) -> Result<bool> {
        let mut pairs = Vec::new();
        for (a, pa) in self.pieces.iter().enumerate() {
            for pb in &self.pieces[a + 1..] {
                for x in &pa.elements {
                    for y in &pb.elements {
                        pairs.push((x, y));
                    }
                }
            }
        }
        let vals = par::map(&pairs, |(x, y)| verify::inner(InnerKind::Fischer, x, y));
        for v in vals {
            if !v?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimensions match the oracle and the union is independent.
    pub fn ok(&self) -> bool {
        self.total_dim() == self.oracle_dim
            && verify::rank(&self.all_elements()) == self.oracle_dim
            && self.members_ok()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "target": { "sign": self.sign.as_str(), "m": self.m, "k": self.k, "s": self.s },
            "pieces": self.pieces.iter().map(|p| json!({
                "factor": p.factor,
                "source": p.source.to_json(),
                "dim": p.elements.len(),
            })).collect::<Vec<_>>(),
            "oracle_dim": self.oracle_dim,
            "ok": self.ok(),
        })
    }
}

fn full_space(m: usize, k: u32, s: usize) -> Vec<MVPolynomial> {
    homogeneous_basis_keys(m, k, &[s])
        .into_iter()
        .map(|(mo, b)| MVPolynomial::term(m, mo, b, Scalar::one()))
        .collect()
}

fn realize(
    provider: &BasisProvider<'_>,
    m: usize,
    op: &OperatorExpr,
    k: u32,
    s: usize,
) -> Result<Vec<MVPolynomial>> {
    let src = provider(m, k, s)?;
    par::map(&src, |p| op.apply(p)).into_iter().collect()
}

/// Splits `Ker_k^s ∂±` into `H`-irreducible pieces with concrete bases.
pub fn decompose_ker(
    sign: KerSign,
    m: usize,
    k: u32,
    s: usize,
    provider: &BasisProvider<'_>,
) -> Result<KernelDecomposition> {
    crate::clifford::check_dim(m)?;
    if s > m {
        return Err(Error::GradeOutOfRange { grade: s, dim: m });
    }
    let oracle_dim = verify::kernel_dim_split(sign == KerSign::Plus, m, k, s)?;
    let identity = OperatorExpr::Identity;
    let mut pieces = Vec::new();
    let edge_full = match sign {
        KerSign::Plus => s == m,
        KerSign::Minus => s == 0,
    };
    let edge_hodge = match sign {
        KerSign::Plus => s == 0,
        KerSign::Minus => s == m,
    };
    if edge_full {
        pieces.push(Piece {
            factor: identity.to_string(),
            source: Source::Full { k, s },
            elements: full_space(m, k, s),
        });
    } else if edge_hodge {
        pieces.push(Piece {
            factor: identity.to_string(),
            source: Source::Hodge { k, s },
            elements: provider(m, k, s)?,
        });
    } else {
        pieces.push(Piece {
            factor: identity.to_string(),
            source: Source::Hodge { k, s },
            elements: provider(m, k, s)?,
        });
        let (wedge, side) = match sign {
            KerSign::Plus => (true, s - 1),
            KerSign::Minus => (false, s + 1),
        };
        let mut j = 0;
        while 2 * j < k {
            let op = x_split_factor_in(m, m, 2 * j, wedge);
            let kk = k - 2 * j - 1;
            pieces.push(Piece {
                factor: op.to_string(),
                source: Source::Hodge { k: kk, s: side },
                elements: realize(provider, m, &op, kk, side)?,
            });
            j += 1;
        }
        let mut j = 0;
        while 2 * j + 2 <= k {
            let kk = k - 2 * j - 2;
            let op = match sign {
                KerSign::Plus => y_plus_factor_in(m, m, s, kk, j),
                KerSign::Minus => y_minus_factor_in(m, m, s, kk, j),
            };
            pieces.push(Piece {
                factor: op.to_string(),
                source: Source::Hodge { k: kk, s },
                elements: realize(provider, m, &op, kk, s)?,
            });
            j += 1;
        }
    }
    Ok(KernelDecomposition {
        sign,
        m,
        k,
        s,
        pieces,
        oracle_dim,
    })
}

/// Number of nonvanishing alternating words of length `len` on `H^s(ℝ^m)`.
pub fn admissible_words(m: usize, s: usize, len: usize) -> Vec<Vec<Letter>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    if s < m {
        out.push(alternating_word(len, Letter::Wedge));
    }
    if s > 0 {
        out.push(alternating_word(len, Letter::Bullet));
    }
    out
}

/// Piece-by-piece count of `P_k^*` against `2^m·binom(k+m-1, m-1)`, with
/// the rank of the realized pieces.
#[derive(Clone, Debug)]
pub struct FischerReport {
    pub m: usize,
    pub k: u32,
    /// `(s, k', words, dim H_{k'}^s)`
    pub pieces: Vec<(usize, u32, usize, usize)>,
    pub total: usize,
    pub expected: usize,
    pub realized_rank: usize,
}

impl FischerReport {
    pub fn ok(&self) -> bool {
        self.total == self.expected && self.realized_rank == self.expected
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "k": self.k,
            "pieces": self.pieces.iter().map(|&(s, kk, w, d)| json!({ "s": s, "k": kk, "words": w, "dim": d })).collect::<Vec<_>>(),
            "total": self.total,
            "expected": self.expected,
            "realized_rank": self.realized_rank,
            "ok": self.ok(),
        })
    }
}

pub fn verify_fischer_full(
    m: usize,
    k: u32,
    provider: &BasisProvider<'_>,
) -> Result<FischerReport> {
    crate::clifford::check_dim(m)?;
    let mut pieces = Vec::new();
    let mut realized = Vec::new();
    for s in 0..=m {
        for kk in 0..=k {
            let dim = verify::nullspace_dim_hodge(m, kk, s)?;
            if dim == 0 {
                continue;
            }
            let words = admissible_words(m, s, (k - kk) as usize);
            pieces.push((s, kk, words.len(), dim));
            let basis = provider(m, kk, s)?;
            for w in &words {
                for p in &basis {
                    realized.push(apply_word(w, p)?);
                }
            }
        }
    }
    let total = pieces.iter().map(|&(_, _, w, d)| w * d).sum();
    let expected = (1usize << m) * verify::binom(k as usize + m - 1, m - 1);
    let realized_rank = verify::rank(&realized);
    Ok(FischerReport {
        m,
        k,
        pieces,
        total,
        expected,
        realized_rank,
    })
}
