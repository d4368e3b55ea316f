//! A compact run of the property matrix: operator identities, both extension
//! routes, basis verification against the oracle, reference files and
//! Fischer piece counts.

use serde::Serialize;
use serde_json::{json, Value};

use crate::ck::{ck_extend_generic, ck_extend_hodge, restrict_to_initial};
use crate::error::Result;
use crate::fischer::verify_fischer_full;
use crate::golden;
use crate::gt_basis::{gt_basis_hodge, verify_basis, Basis};
use crate::mvpoly::MVPolynomial;
use crate::operators::{x_power, Atom, OperatorExpr};
use crate::sample::{random_poly, rng, InitialSampler};
use crate::scalar::{AlgebraMode, Scalar};

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Restrict every matrix to `m ≤ 3`.
    pub quick: bool,
    /// Corrupt one basis element before verification.
    pub inject_fault: bool,
}

impl Options {
    fn max_dim(&self) -> usize {
        if self.quick {
            3
        } else {
            4
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ok": self.ok(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "ok": c.ok(),
                "cases": c.cases,
                "failures": c.failures,
            })).collect::<Vec<_>>(),
        })
    }
}

fn atom(a: Atom) -> OperatorExpr {
    OperatorExpr::atom(a)
}

fn int(c: i64) -> Scalar {
    Scalar::from_int(c)
}

fn zero() -> OperatorExpr {
    OperatorExpr::Identity.scaled(int(0))
}

/// `(name, lhs, rhs)` for the anticommutator and low-order commutator
/// identities in dimension `m`.
fn identities(m: usize) -> Vec<(String, OperatorExpr, OperatorExpr)> {
    use Atom::*;
    let anti = |a, b| OperatorExpr::anticommutator(atom(a), atom(b));
    let shifted = |a, c| atom(a).plus(OperatorExpr::Identity.scaled(int(c)));
    let mut ids = vec![
        ("{x∧, x∧} = 0".to_string(), anti(XWedge, XWedge), zero()),
        ("{x•, x•} = 0".into(), anti(XBullet, XBullet), zero()),
        (
            "{x∧, x•} = x²".into(),
            anti(XWedge, XBullet),
            OperatorExpr::mul_left(x_power(m, m, 2)),
        ),
        ("{∂⁺, ∂⁺} = 0".into(), anti(DiracPlus, DiracPlus), zero()),
        ("{∂⁻, ∂⁻} = 0".into(), anti(DiracMinus, DiracMinus), zero()),
        (
            "{∂⁺, ∂⁻} = -Δ".into(),
            anti(DiracPlus, DiracMinus),
            atom(Laplacian).scaled(int(-1)),
        ),
        (
            "{x•, ∂⁺} = -A".into(),
            anti(XBullet, DiracPlus),
            atom(A).scaled(int(-1)),
        ),
        (
            "{x∧, ∂⁻} = -B".into(),
            anti(XWedge, DiracMinus),
            atom(B).scaled(int(-1)),
        ),
        ("{x•, ∂⁻} = 0".into(), anti(XBullet, DiracMinus), zero()),
        ("{x∧, ∂⁺} = 0".into(), anti(XWedge, DiracPlus), zero()),
    ];
    for j in 0..=1u32 {
        let odd = OperatorExpr::mul_left(x_power(m, m, 2 * j + 1));
        let even = OperatorExpr::mul_left(x_power(m, m, 2 * j));
        let c = 2 * j as i64 + 2;
        let comm = |d: Atom, mult: Atom| {
            OperatorExpr::commutator(atom(d), odd.clone().compose(atom(mult)))
        };
        ids.push((
            format!("[∂⁺, x^{}(x•)] = x^{}(x∧)A", 2 * j + 1, 2 * j),
            comm(DiracPlus, XBullet),
            even.clone().compose(atom(XWedge)).compose(atom(A)),
        ));
        ids.push((
            format!("[∂⁺, x^{}(x∧)] = -x^{}(x∧)(A+{c})", 2 * j + 1, 2 * j),
            comm(DiracPlus, XWedge),
            even.clone()
                .compose(atom(XWedge))
                .compose(shifted(A, c))
                .scaled(int(-1)),
        ));
        ids.push((
            format!("[∂⁻, x^{}(x∧)] = x^{}(x•)B", 2 * j + 1, 2 * j),
            comm(DiracMinus, XWedge),
            even.clone().compose(atom(XBullet)).compose(atom(B)),
        ));
        ids.push((
            format!("[∂⁻, x^{}(x•)] = -x^{}(x•)(B+{c})", 2 * j + 1, 2 * j),
            comm(DiracMinus, XBullet),
            even.compose(atom(XBullet))
                .compose(shifted(B, c))
                .scaled(int(-1)),
        ));
    }
    ids
}

fn check_identities(opts: &Options) -> Result<Check> {
    let mut rng = rng(1);
    let mut check = Check {
        name: "operator identities".into(),
        cases: 0,
        failures: Vec::new(),
    };
    for m in 1..=opts.max_dim() {
        let grades: Vec<usize> = (0..=m).collect();
        for (name, lhs, rhs) in identities(m) {
            for k in 0..=3 {
                let p = random_poly(&mut rng, m, k, &grades, 6, true);
                check.cases += 1;
                if lhs.apply(&p)? != rhs.apply(&p)? {
                    check.failures.push(format!("m={m} k={k}: {name}"));
                }
            }
        }
    }
    Ok(check)
}

fn check_extension(opts: &Options) -> Result<Check> {
    let mut rng = rng(2);
    let mut check = Check {
        name: "extension routes".into(),
        cases: 0,
        failures: Vec::new(),
    };
    for m in 2..=opts.max_dim() {
        for k in 0..=2u32 {
            for s in 0..=m {
                let sampler = InitialSampler::new(m, s, k)?;
                for _ in 0..5 {
                    let d = sampler.sample(&mut rng, true)?;
                    let hodge = ck_extend_hodge(&d);
                    let generic = ck_extend_generic(&d.combined())?;
                    let back = restrict_to_initial(&hodge, s, k)?;
                    check.cases += 1;
                    if hodge != generic || back != d {
                        check.failures.push(format!("m={m} k={k} s={s}"));
                    }
                }
            }
        }
    }
    Ok(check)
}

/// Adds `x1·e1` or `x1` to the first element, which leaves the space of
/// solutions.
fn corrupt(b: &mut Basis) -> Result<()> {
    let m = b.meta.m;
    if let Some(e) = b.elements.first_mut() {
        let bump = crate::parse::parse(if e.poly.is_grade(1) { "x1 e1" } else { "x1" }, m)?;
        e.poly = e.poly.add(&bump)?;
    }
    Ok(())
}

fn check_bases(opts: &Options) -> Result<Check> {
    let mut check = Check {
        name: "bases against the oracle".into(),
        cases: 0,
        failures: Vec::new(),
    };
    for m in 2..=opts.max_dim() {
        for k in 0..=2u32 {
            for s in 0..=m {
                for mode in [AlgebraMode::Complex, AlgebraMode::Real] {
                    let mut b = gt_basis_hodge(m, k, s, mode)?;
                    if opts.inject_fault && (m, k, s) == (3, 1, 1) {
                        corrupt(&mut b)?;
                    }
                    check.cases += 1;
                    if !verify_basis(&b)?.ok {
                        check
                            .failures
                            .push(format!("m={m} k={k} s={s} {}", mode.as_str()));
                    }
                }
            }
        }
    }
    Ok(check)
}

fn check_golden() -> Result<Check> {
    let mut check = Check {
        name: "reference bases".into(),
        cases: 0,
        failures: Vec::new(),
    };
    for name in golden::names() {
        check.cases += 1;
        if let Err(why) = golden::compare(name)? {
            check.failures.push(why);
        }
    }
    Ok(check)
}

fn check_fischer(opts: &Options) -> Result<Check> {
    let provider = |m: usize, k: u32, s: usize| -> Result<Vec<MVPolynomial>> {
        Ok(gt_basis_hodge(m, k, s, AlgebraMode::Complex)?.polys())
    };
    let mut check = Check {
        name: "Fischer decomposition".into(),
        cases: 0,
        failures: Vec::new(),
    };
    for m in 2..=opts.max_dim() {
        for k in 0..=2u32 {
            let r = verify_fischer_full(m, k, &provider)?;
            check.cases += 1;
            if !r.ok() {
                check
                    .failures
                    .push(format!("m={m} k={k}: {} of {}", r.total, r.expected));
            }
        }
    }
    Ok(check)
}

pub fn run(opts: &Options) -> Result<Report> {
    Ok(Report {
        checks: vec![
            check_identities(opts)?,
            check_extension(opts)?,
            check_bases(opts)?,
            check_golden()?,
            check_fischer(opts)?,
        ],
    })
}
