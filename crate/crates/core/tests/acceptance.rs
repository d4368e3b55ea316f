//! Acceptance criteria 1–12, each at tolerance zero. Prints one line per
//! criterion and exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use hodge_gt::ck::{ck_extend_generic, ck_extend_hodge, restrict_to_initial};
use hodge_gt::fischer::{decompose_ker, verify_fischer_full, KerSign};
use hodge_gt::golden::{self, match_up_to_scalars};
use hodge_gt::gt_basis::{
    dual_basis, gmt_basis, gt_basis_hodge, harmonic_gt_basis, oracle_dim, riesz_basis,
    verify_basis, Basis,
};
use hodge_gt::operators::{
    dirac_minus, dirac_plus, laplacian, op_a, op_b, x_bullet, x_power, x_wedge,
};
use hodge_gt::sample::{random_hodge, random_poly, rng, InitialSampler, SampleRng};
use hodge_gt::special::{
    x_check, x_hat, x_poly, x_split_factor, y_check, y_check_factor, y_hat, y_hat_factor,
};
use hodge_gt::verify::{self, InnerKind};
use hodge_gt::{AlgebraMode, Blade, MVPolynomial, Result, Scalar};
use rand::Rng;

type Outcome = std::result::Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn provider(m: usize, k: u32, s: usize) -> Result<Vec<MVPolynomial>> {
    Ok(gt_basis_hodge(m, k, s, AlgebraMode::Complex)?.polys())
}

fn golden_vs_built(name: &str) -> std::result::Result<usize, String> {
    ok(golden::compare(name))?
}

fn criterion_1() -> Outcome {
    let mut cards = Vec::new();
    for k in 0..=2 {
        cards.push(golden_vs_built(&format!("hodge_m3_s1_k{k}"))?);
    }
    ensure(cards == [3, 5, 7], || format!("cardinalities {cards:?}"))?;
    Ok(format!("cardinalities {cards:?}"))
}

fn criterion_2() -> Outcome {
    let e123 = MVPolynomial::blade(3, Blade::pseudoscalar(3));
    for k in 0..=2u32 {
        let (g, _) = ok(golden::load(&format!("hodge_m3_s1_k{k}")))?;
        let shifted: Vec<_> = g.polys().iter().map(|p| p.mul(&e123).unwrap()).collect();
        let built = ok(gt_basis_hodge(3, k, 2, AlgebraMode::Complex))?;
        match_up_to_scalars(&shifted, &built.polys()).map_err(|e| format!("k={k}: {e}"))?;
        let dual = ok(dual_basis(&ok(gt_basis_hodge(
            3,
            k,
            1,
            AlgebraMode::Complex,
        ))?))?;
        match_up_to_scalars(&dual.polys(), &built.polys())
            .map_err(|e| format!("dual k={k}: {e}"))?;
    }
    Ok("k = 0, 1, 2".into())
}

fn criterion_3() -> Outcome {
    let mut cards = Vec::new();
    for k in 0..=2u32 {
        let n = golden_vs_built(&format!("hodge_m4_s2_k{k}"))?;
        let oracle = ok(verify::nullspace_dim_hodge(4, k, 2))?;
        ensure(n == oracle, || {
            format!("k={k}: printed {n}, oracle {oracle}")
        })?;
        cards.push(n);
    }
    ensure(cards[0] == 6, || format!("cardinalities {cards:?}"))?;
    Ok(format!("cardinalities {cards:?}"))
}

fn criterion_4() -> Outcome {
    let a = golden_vs_built("gmt_factor_m3_s1_k1")?;
    let b = golden_vs_built("gmt_factor_m3_s1_k2")?;
    Ok(format!("V_1: {a} elements, V_2: {b} elements"))
}

fn hodge_matrix() -> Vec<(usize, u32, usize)> {
    let mut out = Vec::new();
    for m in 2..=5usize {
        for k in 0..=4u32 {
            for s in 0..=m {
                out.push((m, k, s));
            }
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for (m, k, s) in hodge_matrix() {
        for mode in [AlgebraMode::Complex, AlgebraMode::Real] {
            let b = ok(gt_basis_hodge(m, k, s, mode))?;
            for e in &b.elements {
                let p = &e.poly;
                ensure(
                    !p.is_zero()
                        && p.is_homogeneous(k)
                        && p.is_grade(s)
                        && dirac_plus(p).is_zero()
                        && dirac_minus(p).is_zero(),
                    || format!("m={m} k={k} s={s} {mode:?}: {} fails membership", e.label),
                )?;
                ensure(mode == AlgebraMode::Complex || p.is_real(), || {
                    format!("{} is not real", e.label)
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} elements"))
}

fn gram_ok(b: &Basis, what: &str) -> std::result::Result<(), String> {
    let polys = b.polys();
    for kind in [InnerKind::Fischer, InnerKind::L2] {
        let r = ok(verify::gram(&polys, kind))?;
        ensure(r.ok, || {
            format!("{what} {}: {}", kind.as_str(), r.to_json())
        })?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut bases = 0;
    for (m, k, s) in hodge_matrix() {
        for mode in [AlgebraMode::Complex, AlgebraMode::Real] {
            gram_ok(
                &ok(gt_basis_hodge(m, k, s, mode))?,
                &format!("hodge m={m} k={k} s={s} {mode:?}"),
            )?;
            bases += 1;
        }
    }
    for m in 2..=4usize {
        for k in 0..=3u32 {
            let sets: Vec<Vec<usize>> = if m <= 3 {
                (1u32..1 << (m + 1))
                    .map(|mask| (0..=m).filter(|g| mask >> g & 1 == 1).collect())
                    .collect()
            } else {
                vec![(0..=m).collect(), vec![1, 2, 3], vec![0, 2, 4]]
            };
            for set in sets {
                for mode in [AlgebraMode::Complex, AlgebraMode::Real] {
                    gram_ok(
                        &ok(gmt_basis(m, k, &set, mode))?,
                        &format!("gmt m={m} k={k} S={set:?}"),
                    )?;
                    bases += 1;
                }
            }
            let r = ok(riesz_basis(m, k))?;
            gram_ok(&r, &format!("riesz m={m} k={k}"))?;
            gram_ok(&ok(dual_basis(&r))?, &format!("riesz dual m={m} k={k}"))?;
            gram_ok(
                &ok(harmonic_gt_basis(m, k + 1))?,
                &format!("harmonic m={m} n={}", k + 1),
            )?;
            bases += 3;
        }
    }
    Ok(format!("{bases} bases, Fischer and L2"))
}

fn criterion_7() -> Outcome {
    for (m, k, s) in hodge_matrix() {
        let b = ok(gt_basis_hodge(m, k, s, AlgebraMode::Complex))?;
        let oracle = ok(oracle_dim(&b.meta))?;
        ensure(b.len() == oracle, || {
            format!("m={m} k={k} s={s}: {} vs oracle {oracle}", b.len())
        })?;
        ensure(verify::rank(&b.polys()) == oracle, || {
            format!("m={m} k={k} s={s}: dependent")
        })?;
        if (s == 0 || s == m) && k >= 1 {
            ensure(oracle == 0, || {
                format!("m={m} k={k} s={s}: edge space not trivial")
            })?;
        }
    }
    for k in 0..=4u32 {
        let d = ok(verify::nullspace_dim_hodge(3, k, 1))?;
        ensure(d == 2 * k as usize + 3, || {
            format!("dim H_{k}^1(R^3) = {d}")
        })?;
    }
    Ok("m ≤ 5, k ≤ 4, all s".into())
}

fn criterion_8() -> Outcome {
    let mut n = 0;
    let mut rng = rng(8);
    for m in 2..=4usize {
        for k in 0..=3u32 {
            for s in 0..=m {
                let sampler = ok(InitialSampler::new(m, s, k))?;
                for _ in 0..100 {
                    let complex = rng.gen_bool(0.5);
                    let d = ok(sampler.sample(&mut rng, complex))?;
                    let ext = ck_extend_hodge(&d);
                    let generic = ok(ck_extend_generic(&d.combined()))?;
                    ensure(ext == generic, || {
                        format!("m={m} k={k} s={s}: routes disagree")
                    })?;
                    let back = ok(restrict_to_initial(&ext, s, k))?;
                    ensure(back.u0() == d.u0() && back.v0() == d.v0(), || {
                        format!("m={m} k={k} s={s}: round trip")
                    })?;
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} data"))
}

fn lower_vector_power(m: usize, j: u32) -> MVPolynomial {
    x_power(m, m - 1, j)
}

fn criterion_9() -> Outcome {
    let mut rng = rng(9);
    let mut checks = 0;
    for m in 3..=4usize {
        for k in 0..=3u32 {
            for s in 0..m {
                for _ in 0..2 {
                    let Some(q) = ok(random_hodge(&mut rng, m - 1, k, s, true))? else {
                        continue;
                    };
                    let q = ok(q.embed(m))?;
                    for p in [q.clone(), q.right_mul_e(m)] {
                        let ck = |f: MVPolynomial| ck_extend_generic(&f).map_err(|e| e.to_string());
                        for j in 0..=3u32 {
                            let lhs = ok(x_poly(m, k, j))?.mul(&p).unwrap();
                            let rhs = ck(lower_vector_power(m, j).mul(&p).unwrap())?;
                            ensure(lhs == rhs, || format!("X m={m} k={k} j={j} s={s}"))?;
                            checks += 1;
                        }
                        for j in 1..=3u32 {
                            let xh = ok(x_hat(m, s, k, j))?;
                            let xc = ok(x_check(m, s, k, j))?;
                            let hat = ok(xh.apply(&p))?;
                            let check = ok(xc.apply(&p))?;
                            let wedge = ok(x_split_factor(m, j - 1, true).apply(&p))?;
                            let bullet = ok(x_split_factor(m, j - 1, false).apply(&p))?;
                            ensure(hat == ck(wedge)?, || format!("X̂ m={m} k={k} j={j} s={s}"))?;
                            ensure(check == ck(bullet)?, || {
                                format!("X̌ m={m} k={k} j={j} s={s}")
                            })?;
                            let x = ok(x_poly(m, k, j))?.mul(&p).unwrap();
                            ensure(hat.add(&check).unwrap() == x, || {
                                format!("X̂ + X̌ m={m} k={k} j={j}")
                            })?;
                            checks += 3;
                        }
                        for j in 0..=1u32 {
                            let yc = ok(ok(y_check(m, s, k, j))?.apply(&p))?;
                            let yh = ok(ok(y_hat(m, s, k, j))?.apply(&p))?;
                            ensure(yc == ck(ok(y_check_factor(m, s, k, j).apply(&p))?)?, || {
                                format!("Y̌ m={m} k={k} j={j} s={s}")
                            })?;
                            ensure(yh == ck(ok(y_hat_factor(m, s, k, j).apply(&p))?)?, || {
                                format!("Ŷ m={m} k={k} j={j} s={s}")
                            })?;
                            let c = Scalar::from_int((m + 1) as i64 + 2 * k as i64 + 2 * j as i64);
                            let x = ok(x_poly(m, k, 2 * j + 2))?.mul(&p).unwrap().scalar_mul(&c);
                            ensure(yh.add(&yc).unwrap() == x, || {
                                format!("Ŷ + Y̌ m={m} k={k} j={j}")
                            })?;
                            checks += 3;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checks} equalities"))
}

type Op = Box<dyn Fn(&MVPolynomial) -> MVPolynomial>;

fn left(p: MVPolynomial) -> impl Fn(&MVPolynomial) -> MVPolynomial {
    move |q| p.mul(q).unwrap()
}

fn shift(op: fn(&MVPolynomial) -> MVPolynomial, c: i64) -> impl Fn(&MVPolynomial) -> MVPolynomial {
    move |p| op(p).add(&p.scale_int(c)).unwrap()
}

fn commutation_identities(m: usize) -> Vec<(String, Op, Op)> {
    let xx = x_power(m, m, 2);
    let mut ids: Vec<(String, Op, Op)> = vec![
        (
            "{x∧, x∧} = 0".into(),
            Box::new(|p| x_wedge(&x_wedge(p)).scale_int(2)),
            Box::new(|p| MVPolynomial::zero(p.dim())),
        ),
        (
            "{x•, x•} = 0".into(),
            Box::new(|p| x_bullet(&x_bullet(p)).scale_int(2)),
            Box::new(|p| MVPolynomial::zero(p.dim())),
        ),
        (
            "{x∧, x•} = x²".into(),
            Box::new(|p| x_wedge(&x_bullet(p)).add(&x_bullet(&x_wedge(p))).unwrap()),
            Box::new(left(xx.clone())),
        ),
        (
            "{∂⁺, ∂⁺} = 0".into(),
            Box::new(|p| dirac_plus(&dirac_plus(p)).scale_int(2)),
            Box::new(|p| MVPolynomial::zero(p.dim())),
        ),
        (
            "{∂⁻, ∂⁻} = 0".into(),
            Box::new(|p| dirac_minus(&dirac_minus(p)).scale_int(2)),
            Box::new(|p| MVPolynomial::zero(p.dim())),
        ),
        (
            "{∂⁺, ∂⁻} = -Δ".into(),
            Box::new(|p| {
                dirac_plus(&dirac_minus(p))
                    .add(&dirac_minus(&dirac_plus(p)))
                    .unwrap()
            }),
            Box::new(|p| laplacian(p).neg()),
        ),
        (
            "{x•, ∂⁺} = -A".into(),
            Box::new(|p| {
                x_bullet(&dirac_plus(p))
                    .add(&dirac_plus(&x_bullet(p)))
                    .unwrap()
            }),
            Box::new(|p| op_a(p).neg()),
        ),
        (
            "{x∧, ∂⁻} = -B".into(),
            Box::new(|p| {
                x_wedge(&dirac_minus(p))
                    .add(&dirac_minus(&x_wedge(p)))
                    .unwrap()
            }),
            Box::new(|p| op_b(p).neg()),
        ),
        (
            "{x•, ∂⁻} = 0".into(),
            Box::new(|p| {
                x_bullet(&dirac_minus(p))
                    .add(&dirac_minus(&x_bullet(p)))
                    .unwrap()
            }),
            Box::new(|p| MVPolynomial::zero(p.dim())),
        ),
        (
            "{x∧, ∂⁺} = 0".into(),
            Box::new(|p| {
                x_wedge(&dirac_plus(p))
                    .add(&dirac_plus(&x_wedge(p)))
                    .unwrap()
            }),
            Box::new(|p| MVPolynomial::zero(p.dim())),
        ),
    ];
    for j in 0..=2u32 {
        let o = x_power(m, m, 2 * j + 1);
        let e = x_power(m, m, 2 * j);
        let e2 = x_power(m, m, 2 * j + 2);
        let jj = 2 * j as i64 + 2;
        let (o1, e1) = (o.clone(), e.clone());
        ids.push((
            format!("[∂⁺, x^{}(x•)] = x^{}(x∧)A", 2 * j + 1, 2 * j),
            Box::new(move |p| {
                dirac_plus(&o1.mul(&x_bullet(p)).unwrap())
                    .sub(&o1.mul(&x_bullet(&dirac_plus(p))).unwrap())
                    .unwrap()
            }),
            Box::new(move |p| e1.mul(&x_wedge(&op_a(p))).unwrap()),
        ));
        let (o1, e1) = (o.clone(), e.clone());
        ids.push((
            format!("[∂⁺, x^{}(x∧)] = -x^{}(x∧)(A+{jj})", 2 * j + 1, 2 * j),
            Box::new(move |p| {
                dirac_plus(&o1.mul(&x_wedge(p)).unwrap())
                    .sub(&o1.mul(&x_wedge(&dirac_plus(p))).unwrap())
                    .unwrap()
            }),
            Box::new(move |p| e1.mul(&x_wedge(&shift(op_a, jj)(p))).unwrap().neg()),
        ));
        let (o1, e1) = (o.clone(), e.clone());
        ids.push((
            format!("[∂⁻, x^{}(x∧)] = x^{}(x•)B", 2 * j + 1, 2 * j),
            Box::new(move |p| {
                dirac_minus(&o1.mul(&x_wedge(p)).unwrap())
                    .sub(&o1.mul(&x_wedge(&dirac_minus(p))).unwrap())
                    .unwrap()
            }),
            Box::new(move |p| e1.mul(&x_bullet(&op_b(p))).unwrap()),
        ));
        let (o1, e1) = (o.clone(), e.clone());
        ids.push((
            format!("[∂⁻, x^{}(x•)] = -x^{}(x•)(B+{jj})", 2 * j + 1, 2 * j),
            Box::new(move |p| {
                dirac_minus(&o1.mul(&x_bullet(p)).unwrap())
                    .sub(&o1.mul(&x_bullet(&dirac_minus(p))).unwrap())
                    .unwrap()
            }),
            Box::new(move |p| e1.mul(&x_bullet(&shift(op_b, jj)(p))).unwrap().neg()),
        ));
        if j >= 1 {
            let lower = x_power(m, m, 2 * j - 2);
            let (e1, l1) = (e.clone(), lower.clone());
            ids.push((
                format!("[∂⁺, x^{}] = -{}x^{}(x∧)", 2 * j, 2 * j, 2 * j - 2),
                Box::new(move |p| {
                    dirac_plus(&e1.mul(p).unwrap())
                        .sub(&e1.mul(&dirac_plus(p)).unwrap())
                        .unwrap()
                }),
                Box::new(move |p| l1.mul(&x_wedge(p)).unwrap().scale_int(-2 * j as i64)),
            ));
            let (e1, l1) = (e.clone(), lower);
            ids.push((
                format!("[∂⁻, x^{}] = -{}x^{}(x•)", 2 * j, 2 * j, 2 * j - 2),
                Box::new(move |p| {
                    dirac_minus(&e1.mul(p).unwrap())
                        .sub(&e1.mul(&dirac_minus(p)).unwrap())
                        .unwrap()
                }),
                Box::new(move |p| l1.mul(&x_bullet(p)).unwrap().scale_int(-2 * j as i64)),
            ));
        }
        let (e21, o1) = (e2.clone(), o.clone());
        ids.push((
            format!("{{∂⁺, x^{}(x•)}} = -y⁺_{}", 2 * j + 2, 2 * j + 2),
            Box::new(move |p| {
                dirac_plus(&e21.mul(&x_bullet(p)).unwrap())
                    .add(&e21.mul(&x_bullet(&dirac_plus(p))).unwrap())
                    .unwrap()
            }),
            Box::new(move |p| y_plus(&o1, jj, p).neg()),
        ));
        let (e21, o1) = (e2.clone(), o.clone());
        ids.push((
            format!("{{∂⁻, x^{}(x∧)}} = -y⁻_{}", 2 * j + 2, 2 * j + 2),
            Box::new(move |p| {
                dirac_minus(&e21.mul(&x_wedge(p)).unwrap())
                    .add(&e21.mul(&x_wedge(&dirac_minus(p))).unwrap())
                    .unwrap()
            }),
            Box::new(move |p| y_minus(&o1, jj, p).neg()),
        ));
    }
    ids
}

/// `x^{2j+1}((x•)(A+2j+2) + (x∧)A)`
fn y_plus(odd: &MVPolynomial, jj: i64, p: &MVPolynomial) -> MVPolynomial {
    let inner = x_bullet(&shift(op_a, jj)(p))
        .add(&x_wedge(&op_a(p)))
        .unwrap();
    odd.mul(&inner).unwrap()
}

/// `x^{2j+1}((x∧)(B+2j+2) + (x•)B)`
fn y_minus(odd: &MVPolynomial, jj: i64, p: &MVPolynomial) -> MVPolynomial {
    let inner = x_wedge(&shift(op_b, jj)(p))
        .add(&x_bullet(&op_b(p)))
        .unwrap();
    odd.mul(&inner).unwrap()
}

fn random_grades(rng: &mut SampleRng, m: usize) -> Vec<usize> {
    let gs: Vec<usize> = (0..=m).filter(|_| rng.gen_bool(0.5)).collect();
    if gs.is_empty() {
        vec![rng.gen_range(0..=m)]
    } else {
        gs
    }
}

fn criterion_10() -> Outcome {
    let mut rng = rng(10);
    let mut count = 0;
    let mut names = 0;
    for m in 1..=4usize {
        let ids = commutation_identities(m);
        names = names.max(ids.len());
        for (name, lhs, rhs) in &ids {
            for _ in 0..50 {
                let deg = rng.gen_range(0..=4);
                let grades = random_grades(&mut rng, m);
                let complex = rng.gen_bool(0.5);
                let p = random_poly(&mut rng, m, deg, &grades, 6, complex);
                ensure(lhs(&p) == rhs(&p), || format!("m={m}: {name} fails on {p}"))?;
                count += 1;
            }
        }
    }
    // identities that hold on H_{k'}^s, with k = k' + 2j + 2
    let mut h_checks = 0;
    for m in 2..=4usize {
        for kp in 0..=2u32 {
            for s in 0..=m {
                for j in 0..=1u32 {
                    let odd = x_power(m, m, 2 * j + 1);
                    let even = x_power(m, m, 2 * j);
                    let jj = 2 * j as i64 + 2;
                    let c = -jj * (m as i64 + 2 * kp as i64 + 2 * j as i64 + 2);
                    for _ in 0..4 {
                        let Some(p) = ok(random_hodge(&mut rng, m, kp, s, true))? else {
                            break;
                        };
                        let yp = y_plus(&odd, jj, &p);
                        let ym = y_minus(&odd, jj, &p);
                        ensure(dirac_plus(&yp).is_zero(), || {
                            format!("∂⁺y⁺ ≠ 0 (m={m} k'={kp} s={s} j={j})")
                        })?;
                        ensure(dirac_minus(&ym).is_zero(), || {
                            format!("∂⁻y⁻ ≠ 0 (m={m} k'={kp} s={s} j={j})")
                        })?;
                        ensure(
                            dirac_minus(&yp) == even.mul(&x_bullet(&p)).unwrap().scale_int(c),
                            || format!("∂⁻y⁺ (m={m} k'={kp} s={s} j={j})"),
                        )?;
                        ensure(
                            dirac_plus(&ym) == even.mul(&x_wedge(&p)).unwrap().scale_int(c),
                            || format!("∂⁺y⁻ (m={m} k'={kp} s={s} j={j})"),
                        )?;
                        h_checks += 4;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{names} identities, {count} random checks; {h_checks} checks on H"
    ))
}

fn criterion_11() -> Outcome {
    for m in 2..=4usize {
        for k in 0..=3u32 {
            let r = ok(verify_fischer_full(m, k, &provider))?;
            ensure(r.ok(), || r.to_json().to_string())?;
            for s in 0..=m {
                for sign in [KerSign::Plus, KerSign::Minus] {
                    let d = ok(decompose_ker(sign, m, k, s, &provider))?;
                    ensure(d.ok(), || d.to_json().to_string())?;
                    ensure(ok(d.pieces_orthogonal())?, || {
                        format!("pieces not orthogonal: {}", d.to_json())
                    })?;
                }
            }
        }
    }
    Ok("m ≤ 4, k ≤ 3".into())
}

fn criterion_12() -> Outcome {
    for m in 2..=4usize {
        for k in 0..=3u32 {
            let r = ok(riesz_basis(m, k))?;
            let g = ok(gt_basis_hodge(m, k, 1, AlgebraMode::Complex))?;
            ensure(verify::span_equal(&r.polys(), &g.polys()), || {
                format!("m={m} k={k}: spans differ")
            })?;
        }
        for n in 0..=4u32 {
            let h = ok(harmonic_gt_basis(m, n))?;
            ensure(
                h.elements
                    .iter()
                    .all(|e| e.poly.is_grade(0) && laplacian(&e.poly).is_zero()),
                || format!("m={m} n={n}: not harmonic"),
            )?;
            let oracle = ok(verify::harmonic_dim(m, n))?;
            ensure(
                h.len() == oracle && verify::rank(&h.polys()) == oracle,
                || format!("m={m} n={n}: {} vs oracle {oracle}", h.len()),
            )?;
        }
    }
    let r = ok(verify_basis(&ok(riesz_basis(3, 2))?))?;
    ensure(r.ok, || r.to_json().to_string())?;
    Ok("m ≤ 4".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "golden bases, dimension 3", criterion_1),
        (2, "golden bases, dimension 3 duals", criterion_2),
        (3, "golden bases, dimension 4", criterion_3),
        (4, "golden GMT factor images", criterion_4),
        (5, "membership", criterion_5),
        (6, "orthogonality", criterion_6),
        (7, "oracle cardinality", criterion_7),
        (8, "CK consistency", criterion_8),
        (9, "multiplier oracle equality", criterion_9),
        (10, "operator identities", criterion_10),
        (11, "Fischer decomposition dimensions", criterion_11),
        (12, "Riesz equivalence and harmonic bases", criterion_12),
    ];
    let mut failed = 0;
    for (n, name, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {why} ({secs:.1}s)");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
