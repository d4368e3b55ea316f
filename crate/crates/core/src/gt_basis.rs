//! Gelfand-Tsetlin bases of `H_k^s(ℝ^m)` and derived bases.
//!
//! A basis of `H_k^s(ℝ^m)` is obtained from bases in dimension `m - 1` by
//! extending initial data through the CK operator. The initial data space
//! splits as `Ker ∂̲⁺ ⊕ (Ker ∂̲⁻) e_m`, and each kernel splits further into
//! pieces `P`, `x̲^{2j}(x̲∧)P`, `y̌_{2j+2}P` (resp. `Q`, `x̲^{2j}(x̲•)Q`,
//! `ŷ_{2j+2}Q`). The label of an element records which piece was used at
//! every step down to the two-dimensional seeds `z_±^k w_±`, `1`, `e12`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::ck::{ck_extend_batch, InitialDatum};
use crate::clifford::{check_dim, Blade};
use crate::error::{Error, Result};
use crate::mvpoly::MVPolynomial;
use crate::operators::{self, dirac, laplacian};
use crate::par;
use crate::scalar::{AlgebraMode, Scalar};
use crate::special::{gegenbauer_homog, gmt_factor, x_split_factor, y_check_factor, y_hat_factor};
use crate::verify::{self, GramReport, InnerKind};

/// One step of the dimension recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Direct,
    XHat(u32),
    YCheck(u32),
    EmDirect,
    XCheckEm(u32),
    YHatEm(u32),
}

/// Terminal tag of a label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseTag {
    Plus,
    Minus,
    Scalar,
    Pseudo,
    Re,
    Im,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Branch(Branch),
    Base(BaseTag),
    /// `(k_1, …, k_{m-2})` of a harmonic chain
    Chain(Vec<u32>),
    Riesz,
    Dual,
    /// piece `H_k^s` of a GMT basis
    Hodge(usize),
    /// piece `gmt_factor · H_{k-1}^s` of a GMT basis
    Factor(usize),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Branch(b) => match b {
                Branch::Direct => write!(f, "direct"),
                Branch::XHat(j) => write!(f, "xhat({j})"),
                Branch::YCheck(j) => write!(f, "ycheck({j})"),
                Branch::EmDirect => write!(f, "em_direct"),
                Branch::XCheckEm(j) => write!(f, "xcheck_em({j})"),
                Branch::YHatEm(j) => write!(f, "yhat_em({j})"),
            },
            Step::Base(t) => f.write_str(match t {
                BaseTag::Plus => "plus",
                BaseTag::Minus => "minus",
                BaseTag::Scalar => "scalar",
                BaseTag::Pseudo => "pseudo",
                BaseTag::Re => "re",
                BaseTag::Im => "im",
            }),
            Step::Chain(ks) => {
                let parts: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
                write!(f, "chain({})", parts.join(","))
            }
            Step::Riesz => write!(f, "riesz"),
            Step::Dual => write!(f, "dual"),
            Step::Hodge(s) => write!(f, "h({s})"),
            Step::Factor(s) => write!(f, "v({s})"),
        }
    }
}

impl FromStr for Step {
    type Err = Error;
    fn from_str(s: &str) -> Result<Step> {
        let bad = || Error::Parse(format!("bad label step '{s}'"));
        let (name, arg) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], Some(&s[i + 1..s.len() - 1])),
            Some(_) => return Err(bad()),
            None => (s, None),
        };
        let num = || -> Result<u32> { arg.ok_or_else(bad)?.parse().map_err(|_| bad()) };
        Ok(match (name, arg.is_some()) {
            ("direct", false) => Step::Branch(Branch::Direct),
            ("em_direct", false) => Step::Branch(Branch::EmDirect),
            ("xhat", true) => Step::Branch(Branch::XHat(num()?)),
            ("ycheck", true) => Step::Branch(Branch::YCheck(num()?)),
            ("xcheck_em", true) => Step::Branch(Branch::XCheckEm(num()?)),
            ("yhat_em", true) => Step::Branch(Branch::YHatEm(num()?)),
            ("plus", false) => Step::Base(BaseTag::Plus),
            ("minus", false) => Step::Base(BaseTag::Minus),
            ("scalar", false) => Step::Base(BaseTag::Scalar),
            ("pseudo", false) => Step::Base(BaseTag::Pseudo),
            ("re", false) => Step::Base(BaseTag::Re),
            ("im", false) => Step::Base(BaseTag::Im),
            ("riesz", false) => Step::Riesz,
            ("dual", false) => Step::Dual,
            ("h", true) => Step::Hodge(num()? as usize),
            ("v", true) => Step::Factor(num()? as usize),
            ("chain", true) => {
                let a = arg.unwrap();
                let ks = if a.is_empty() {
                    Vec::new()
                } else {
                    a.split(',')
                        .map(|t| t.trim().parse().map_err(|_| bad()))
                        .collect::<Result<Vec<u32>>>()?
                };
                Step::Chain(ks)
            }
            _ => return Err(bad()),
        })
    }
}

/// The construction path of a basis element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Label(pub Vec<Step>);

impl Label {
    fn prefixed(&self, step: Step) -> Label {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(step);
        v.extend(self.0.iter().cloned());
        Label(v)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn base(&self) -> Option<BaseTag> {
        match self.0.last() {
            Some(Step::Base(t)) => Some(*t),
            _ => None,
        }
    }

    fn with_base(&self, t: BaseTag) -> Label {
        let mut v = self.0.clone();
        if let Some(last) = v.last_mut() {
            *last = Step::Base(t);
        }
        Label(v)
    }

    /// Number of recursion records (`Branch` steps).
    pub fn branch_count(&self) -> usize {
        self.0
            .iter()
            .filter(|s| matches!(s, Step::Branch(_)))
            .count()
    }

    pub fn first_branch(&self) -> Option<Branch> {
        self.0.iter().find_map(|s| match s {
            Step::Branch(b) => Some(*b),
            _ => None,
        })
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|s| s.to_string()).collect()
    }

    pub fn parse(parts: &[String]) -> Result<Label> {
        parts
            .iter()
            .map(|p| p.parse())
            .collect::<Result<Vec<Step>>>()
            .map(Label)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_strings().join("/"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasisElement {
    pub label: Label,
    pub poly: MVPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Hodge,
    Gmt,
    Harmonic,
}

impl BasisKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisKind::Hodge => "hodge",
            BasisKind::Gmt => "gmt",
            BasisKind::Harmonic => "harmonic",
        }
    }
}

/// Target space of a basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisMeta {
    pub kind: BasisKind,
    pub m: usize,
    pub k: u32,
    /// a single grade for Hodge and harmonic bases, the set `S` for GMT
    pub grades: Vec<usize>,
    pub mode: AlgebraMode,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Basis {
    pub meta: BasisMeta,
    pub elements: Vec<BasisElement>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn polys(&self) -> Vec<MVPolynomial> {
        self.elements.iter().map(|e| e.poly.clone()).collect()
    }

    /// Scales each element so its leading term has coefficient 1.
    pub fn normalized(&self) -> Basis {
        let elements = self
            .elements
            .iter()
            .map(|e| BasisElement {
                label: e.label.clone(),
                poly: e.poly.normalized(),
            })
            .collect();
        Basis {
            meta: self.meta.clone(),
            elements,
        }
    }

    pub fn to_json(&self) -> Result<Value> {
        let mut meta = json!({
            "kind": self.meta.kind.as_str(),
            "m": self.meta.m,
            "k": self.meta.k,
            "mode": self.meta.mode.as_str(),
        });
        match self.meta.kind {
            BasisKind::Gmt => meta["S"] = json!(self.meta.grades),
            _ => meta["s"] = json!(self.meta.grades.first().copied().unwrap_or(0)),
        }
        let elements = self
            .elements
            .iter()
            .map(|e| Ok(json!({ "label": e.label.to_strings(), "poly": e.poly.to_json(self.meta.mode)? })))
            .collect::<Result<Vec<Value>>>()?;
        Ok(json!({ "meta": meta, "elements": elements }))
    }

    pub fn from_json(v: &Value) -> Result<Basis> {
        let bad = |what: &str| Error::Parse(format!("basis JSON: {what}"));
        let meta = v.get("meta").ok_or_else(|| bad("missing meta"))?;
        let kind = match meta.get("kind").and_then(Value::as_str).unwrap_or("hodge") {
            "hodge" => BasisKind::Hodge,
            "gmt" => BasisKind::Gmt,
            "harmonic" => BasisKind::Harmonic,
            other => return Err(bad(&format!("unknown kind '{other}'"))),
        };
        let m = meta
            .get("m")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("meta.m"))? as usize;
        check_dim(m)?;
        let k = meta
            .get("k")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("meta.k"))? as u32;
        let mode: AlgebraMode = meta
            .get("mode")
            .and_then(Value::as_str)
            .unwrap_or("complex")
            .parse()?;
        let grades = match kind {
            BasisKind::Gmt => {
                let arr = meta
                    .get("S")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("meta.S"))?;
                arr.iter()
                    .map(|g| {
                        g.as_u64()
                            .map(|g| g as usize)
                            .ok_or_else(|| bad("meta.S entry"))
                    })
                    .collect::<Result<_>>()?
            }
            _ => vec![meta
                .get("s")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("meta.s"))? as usize],
        };
        if let Some(&g) = grades.iter().find(|&&g| g > m) {
            return Err(Error::GradeOutOfRange { grade: g, dim: m });
        }
        let elems = v
            .get("elements")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("elements"))?;
        let mut elements = Vec::with_capacity(elems.len());
        for e in elems {
            let label_parts: Vec<String> = e
                .get("label")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("element label"))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| bad("label entry"))
                })
                .collect::<Result<_>>()?;
            let poly = MVPolynomial::from_json(e.get("poly").ok_or_else(|| bad("element poly"))?)?;
            if poly.dim() != m {
                return Err(Error::DimensionMismatch {
                    left: m,
                    right: poly.dim(),
                });
            }
            poly.check_mode(mode)?;
            elements.push(BasisElement {
                label: Label::parse(&label_parts)?,
                poly,
            });
        }
        Ok(Basis {
            meta: BasisMeta {
                kind,
                m,
                k,
                grades,
                mode,
            },
            elements,
        })
    }

    pub fn to_text(&self) -> String {
        self.render(crate::render::to_text)
    }

    pub fn to_latex(&self) -> String {
        let body: Vec<String> = self
            .elements
            .iter()
            .map(|e| crate::render::to_latex(&e.poly))
            .collect();
        format!("\\left\\{{ {} \\right\\}}\n", body.join(", \\\\\n"))
    }

    fn render(&self, f: fn(&MVPolynomial) -> String) -> String {
        let mut out = String::new();
        for e in &self.elements {
            out.push_str(&format!("[{}] {}\n", e.label, f(&e.poly)));
        }
        out
    }
}

pub fn label_of(e: &BasisElement) -> &Label {
    &e.label
}

pub fn find_by_label<'a>(b: &'a Basis, label: &Label) -> Option<&'a BasisElement> {
    b.elements.iter().find(|e| &e.label == label)
}

type Cache = Mutex<HashMap<(usize, u32, usize), Arc<Vec<BasisElement>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Drops all memoized bases.
pub fn clear_cache() {
    cache().lock().expect("cache lock").clear();
}

fn repeat_label(b: Branch, n: usize, tag: BaseTag) -> Label {
    let mut v = vec![Step::Branch(b); n];
    v.push(Step::Base(tag));
    Label(v)
}

fn seed_z_w(m: usize, k: u32, plus: bool) -> MVPolynomial {
    let s = if plus { Scalar::i() } else { -Scalar::i() };
    let z = MVPolynomial::var(m, 1)
        .add(&MVPolynomial::var(m, 2).scalar_mul(&s))
        .expect("same dim");
    let w = MVPolynomial::e(m, 1)
        .add(&MVPolynomial::e(m, 2).scalar_mul(&s))
        .expect("same dim");
    z.pow(k).expect("same dim").mul(&w).expect("same dim")
}

/// Complex-mode GT basis of `H_k^s(ℝ^m)`, memoized.
fn hodge_complex(m: usize, k: u32, s: usize) -> Result<Arc<Vec<BasisElement>>> {
    if let Some(hit) = cache().lock().expect("cache lock").get(&(m, k, s)) {
        return Ok(hit.clone());
    }
    let built = Arc::new(build_hodge(m, k, s)?);
    cache()
        .lock()
        .expect("cache lock")
        .insert((m, k, s), built.clone());
    Ok(built)
}

fn build_hodge(m: usize, k: u32, s: usize) -> Result<Vec<BasisElement>> {
    if s == 0 || s == m {
        if k > 0 {
            return Ok(Vec::new());
        }
        let (poly, label) = if s == 0 {
            (
                MVPolynomial::one(m),
                repeat_label(Branch::Direct, m - 2, BaseTag::Scalar),
            )
        } else {
            (
                MVPolynomial::blade(m, Blade::pseudoscalar(m)),
                repeat_label(Branch::EmDirect, m - 2, BaseTag::Pseudo),
            )
        };
        return Ok(vec![BasisElement { label, poly }]);
    }
    if m == 2 {
        return Ok(vec![
            BasisElement {
                label: Label(vec![Step::Base(BaseTag::Plus)]),
                poly: seed_z_w(2, k, true),
            },
            BasisElement {
                label: Label(vec![Step::Base(BaseTag::Minus)]),
                poly: seed_z_w(2, k, false),
            },
        ]);
    }
    let lower = m - 1;
    let zero = MVPolynomial::zero(m);
    // (label, u0, v0)
    let mut data: Vec<(Label, MVPolynomial, MVPolynomial)> = Vec::new();
    let lift = |p: &MVPolynomial| p.embed(m);

    for e in hodge_complex(lower, k, s)?.iter() {
        data.push((
            e.label.prefixed(Step::Branch(Branch::Direct)),
            lift(&e.poly)?,
            zero.clone(),
        ));
    }
    for j in 0..=k.saturating_sub(1) / 2 {
        if k < 2 * j + 1 {
            break;
        }
        let f = x_split_factor(m, 2 * j, true);
        for e in hodge_complex(lower, k - 2 * j - 1, s - 1)?.iter() {
            data.push((
                e.label.prefixed(Step::Branch(Branch::XHat(j))),
                f.apply(&lift(&e.poly)?)?,
                zero.clone(),
            ));
        }
    }
    for j in 0..=k.saturating_sub(2) / 2 {
        if k < 2 * j + 2 {
            break;
        }
        let kk = k - 2 * j - 2;
        let f = y_check_factor(m, s, kk, j);
        for e in hodge_complex(lower, kk, s)?.iter() {
            data.push((
                e.label.prefixed(Step::Branch(Branch::YCheck(j))),
                f.apply(&lift(&e.poly)?)?,
                zero.clone(),
            ));
        }
    }
    for e in hodge_complex(lower, k, s - 1)?.iter() {
        data.push((
            e.label.prefixed(Step::Branch(Branch::EmDirect)),
            zero.clone(),
            lift(&e.poly)?,
        ));
    }
    for j in 0..=k.saturating_sub(1) / 2 {
        if k < 2 * j + 1 {
            break;
        }
        let f = x_split_factor(m, 2 * j, false);
        for e in hodge_complex(lower, k - 2 * j - 1, s)?.iter() {
            data.push((
                e.label.prefixed(Step::Branch(Branch::XCheckEm(j))),
                zero.clone(),
                f.apply(&lift(&e.poly)?)?,
            ));
        }
    }
    for j in 0..=k.saturating_sub(2) / 2 {
        if k < 2 * j + 2 {
            break;
        }
        let kk = k - 2 * j - 2;
        let f = y_hat_factor(m, s - 1, kk, j);
        for e in hodge_complex(lower, kk, s - 1)?.iter() {
            data.push((
                e.label.prefixed(Step::Branch(Branch::YHatEm(j))),
                zero.clone(),
                f.apply(&lift(&e.poly)?)?,
            ));
        }
    }

    let mut labels = Vec::with_capacity(data.len());
    let mut initial = Vec::with_capacity(data.len());
    for (label, u0, v0) in data {
        initial.push(InitialDatum::new(m, s, k, u0, v0)?);
        labels.push(label);
    }
    let polys = ck_extend_batch(&initial);
    Ok(labels
        .into_iter()
        .zip(polys)
        .map(|(label, poly)| BasisElement { label, poly })
        .collect())
}

fn check_args(m: usize, grades: &[usize]) -> Result<()> {
    check_dim(m)?;
    if m < 2 {
        return Err(Error::DimensionUnsupported(m));
    }
    if let Some(&s) = grades.iter().find(|&&s| s > m) {
        return Err(Error::GradeOutOfRange { grade: s, dim: m });
    }
    Ok(())
}

fn finish(meta: BasisMeta, elements: Vec<BasisElement>) -> Result<Basis> {
    let b = Basis {
        meta: BasisMeta {
            mode: AlgebraMode::Complex,
            ..meta.clone()
        },
        elements,
    };
    match meta.mode {
        AlgebraMode::Complex => Ok(b),
        AlgebraMode::Real => realify(&b),
    }
}

/// GT basis of `H_k^s(ℝ^m)`.
pub fn gt_basis_hodge(m: usize, k: u32, s: usize, mode: AlgebraMode) -> Result<Basis> {
    check_args(m, &[s])?;
    let elements = hodge_complex(m, k, s)?.as_ref().clone();
    finish(
        BasisMeta {
            kind: BasisKind::Hodge,
            m,
            k,
            grades: vec![s],
            mode,
        },
        elements,
    )
}

/// Chains `n = k_0 ≥ k_1 ≥ ⋯ ≥ k_{m-2} ≥ 0`, returned as `(k_1, …, k_{m-2})`
/// in lexicographic order.
fn chains(m: usize, n: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max {
            cur.push(v);
            rec(len, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m - 2, n, &mut Vec::new(), &mut out);
    out
}

/// GT basis of scalar harmonics `Harm_n(ℝ^m)` from Gegenbauer chains.
pub fn harmonic_gt_basis(m: usize, n: u32) -> Result<Basis> {
    check_args(m, &[0])?;
    let chain_list = chains(m, n);
    let elements: Vec<Vec<BasisElement>> = par::map(&chain_list, |tail| {
        let mut ks = vec![n];
        ks.extend(tail.iter().copied());
        let last = *ks.last().unwrap();
        let mut prod = MVPolynomial::one(m);
        for j in 0..m - 2 {
            let deg = ks[j] - ks[j + 1];
            let nu = num_rational::BigRational::new(
                (m as i64 - j as i64 - 2 + 2 * ks[j + 1] as i64).into(),
                2.into(),
            );
            prod = prod
                .mul(&gegenbauer_homog(deg, &nu, m - j, m))
                .expect("same dim");
        }
        let z = |plus: bool| {
            let s = if plus { Scalar::i() } else { -Scalar::i() };
            MVPolynomial::var(m, 1)
                .add(&MVPolynomial::var(m, 2).scalar_mul(&s))
                .expect("same dim")
                .pow(last)
                .expect("same dim")
        };
        let chain = Step::Chain(tail.clone());
        if last == 0 {
            vec![BasisElement {
                label: Label(vec![chain, Step::Base(BaseTag::Scalar)]),
                poly: prod,
            }]
        } else {
            vec![
                BasisElement {
                    label: Label(vec![chain.clone(), Step::Base(BaseTag::Plus)]),
                    poly: z(true).mul(&prod).expect("same dim"),
                },
                BasisElement {
                    label: Label(vec![chain, Step::Base(BaseTag::Minus)]),
                    poly: z(false).mul(&prod).expect("same dim"),
                },
            ]
        }
    });
    let meta = BasisMeta {
        kind: BasisKind::Harmonic,
        m,
        k: n,
        grades: vec![0],
        mode: AlgebraMode::Complex,
    };
    Ok(Basis {
        meta,
        elements: elements.into_iter().flatten().collect(),
    })
}

/// `{∂Ξ}` over the harmonic GT basis of degree `k + 1`: a basis of `H_k^1`.
pub fn riesz_basis(m: usize, k: u32) -> Result<Basis> {
    let harm = harmonic_gt_basis(m, k + 1)?;
    let elements = par::map(&harm.elements, |e| BasisElement {
        label: e.label.prefixed(Step::Riesz),
        poly: dirac(&e.poly),
    });
    Ok(Basis {
        meta: BasisMeta {
            kind: BasisKind::Hodge,
            m,
            k,
            grades: vec![1],
            mode: AlgebraMode::Complex,
        },
        elements,
    })
}

/// `B·e_M`: a basis of `H_k^{m-s}` from one of `H_k^s`.
pub fn dual_basis(b: &Basis) -> Result<Basis> {
    if b.meta.kind != BasisKind::Hodge {
        return Err(Error::InvalidArgument(
            "duality applies to Hodge bases".into(),
        ));
    }
    let m = b.meta.m;
    let s = b.meta.grades[0];
    let elements = b
        .elements
        .iter()
        .map(|e| BasisElement {
            label: e.label.prefixed(Step::Dual),
            poly: e.poly.right_mul_em(),
        })
        .collect();
    Ok(Basis {
        meta: BasisMeta {
            grades: vec![m - s],
            ..b.meta.clone()
        },
        elements,
    })
}

/// Replaces each conjugate pair `P^±` by `Re P^+`, `Im P^+`; real elements
/// are kept.
pub fn realify(b: &Basis) -> Result<Basis> {
    if b.meta.mode == AlgebraMode::Real {
        return Ok(b.clone());
    }
    let index: HashMap<&Label, usize> = b
        .elements
        .iter()
        .enumerate()
        .map(|(i, e)| (&e.label, i))
        .collect();
    let mut out = Vec::with_capacity(b.elements.len());
    for e in &b.elements {
        match e.label.base() {
            Some(BaseTag::Plus) => {
                let partner_label = e.label.with_base(BaseTag::Minus);
                let partner = index
                    .get(&partner_label)
                    .map(|&i| &b.elements[i])
                    .ok_or_else(|| Error::Realify(format!("no partner for {}", e.label)))?;
                if partner.poly != e.poly.conj() {
                    return Err(Error::Realify(format!(
                        "{} and its partner are not conjugate",
                        e.label
                    )));
                }
                out.push(BasisElement {
                    label: e.label.with_base(BaseTag::Re),
                    poly: e.poly.re_part(),
                });
                out.push(BasisElement {
                    label: e.label.with_base(BaseTag::Im),
                    poly: e.poly.im_part(),
                });
            }
            Some(BaseTag::Minus) => {
                if !index.contains_key(&e.label.with_base(BaseTag::Plus)) {
                    return Err(Error::Realify(format!("no partner for {}", e.label)));
                }
            }
            _ => {
                if !e.poly.is_real() {
                    return Err(Error::Realify(format!(
                        "{} is neither real nor paired",
                        e.label
                    )));
                }
                out.push(e.clone());
            }
        }
    }
    Ok(Basis {
        meta: BasisMeta {
            mode: AlgebraMode::Real,
            ..b.meta.clone()
        },
        elements: out,
    })
}

/// Grades `s` with both `s - 1` and `s + 1` in `S`.
pub fn gmt_factor_grades(m: usize, set: &[usize]) -> Vec<usize> {
    let s: BTreeSet<usize> = set.iter().copied().collect();
    (1..m)
        .filter(|g| s.contains(&(g - 1)) && s.contains(&(g + 1)))
        .collect()
}

/// Basis of the `Cl_m^S`-valued monogenics `M_k^S(ℝ^m)`.
pub fn gmt_basis(m: usize, k: u32, set: &[usize], mode: AlgebraMode) -> Result<Basis> {
    check_args(m, set)?;
    let grades: Vec<usize> = set
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut elements = Vec::new();
    for &s in &grades {
        for e in hodge_complex(m, k, s)?.iter() {
            elements.push(BasisElement {
                label: e.label.prefixed(Step::Hodge(s)),
                poly: e.poly.clone(),
            });
        }
    }
    if k >= 1 {
        for s in gmt_factor_grades(m, &grades) {
            let f = gmt_factor(m, k, s);
            let lower = hodge_complex(m, k - 1, s)?;
            let images = par::map(lower.as_slice(), |e| f.apply(&e.poly));
            for (e, img) in lower.iter().zip(images) {
                elements.push(BasisElement {
                    label: e.label.prefixed(Step::Factor(s)),
                    poly: img?,
                });
            }
        }
    }
    finish(
        BasisMeta {
            kind: BasisKind::Gmt,
            m,
            k,
            grades,
            mode,
        },
        elements,
    )
}

/// Outcome of checking a basis against its target space.
#[derive(Clone, Debug)]
pub struct BasisReport {
    pub membership_failures: Vec<usize>,
    pub mode_ok: bool,
    pub fischer: GramReport,
    pub l2: GramReport,
    pub expected_dim: usize,
    pub rank: usize,
    /// Distinct Fischer/L2 norm ratios per piece.
    pub norm_ratios: Vec<(String, Vec<Scalar>)>,
    pub ok: bool,
}

impl BasisReport {
    pub fn to_json(&self) -> Value {
        json!({
            "membership_failures": self.membership_failures,
            "mode_ok": self.mode_ok,
            "gram_fischer": self.fischer.to_json(),
            "gram_l2": self.l2.to_json(),
            "expected_dim": self.expected_dim,
            "rank": self.rank,
            "norm_ratios": self.norm_ratios.iter().map(|(piece, rs)| {
                json!({ "piece": piece, "ratios": rs.iter().map(|r| r.to_string()).collect::<Vec<_>>() })
            }).collect::<Vec<_>>(),
            "ok": self.ok,
        })
    }
}

fn member(meta: &BasisMeta, p: &MVPolynomial) -> bool {
    if p.is_zero() || !p.is_homogeneous(meta.k) {
        return false;
    }
    match meta.kind {
        BasisKind::Hodge => {
            p.is_grade(meta.grades[0])
                && operators::dirac_plus(p).is_zero()
                && operators::dirac_minus(p).is_zero()
        }
        BasisKind::Gmt => p.grades().iter().all(|g| meta.grades.contains(g)) && dirac(p).is_zero(),
        BasisKind::Harmonic => p.is_grade(0) && laplacian(p).is_zero(),
    }
}

/// Oracle dimension of the target space of `meta`.
pub fn oracle_dim(meta: &BasisMeta) -> Result<usize> {
    match meta.kind {
        BasisKind::Hodge => verify::nullspace_dim_hodge(meta.m, meta.k, meta.grades[0]),
        BasisKind::Gmt => verify::nullspace_dim_gmt(meta.m, meta.k, &meta.grades),
        BasisKind::Harmonic => verify::harmonic_dim(meta.m, meta.k),
    }
}

fn piece_key(label: &Label) -> String {
    match label.steps().first() {
        Some(s @ (Step::Hodge(_) | Step::Factor(_))) => s.to_string(),
        _ => "all".into(),
    }
}

/// Membership, orthogonality under both inner products, mode, and
/// cardinality against the oracle.
pub fn verify_basis(b: &Basis) -> Result<BasisReport> {
    let polys = b.polys();
    let flags = par::map(&polys, |p| member(&b.meta, p));
    let membership_failures: Vec<usize> = flags
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| i)
        .collect();
    let mode_ok = b.meta.mode == AlgebraMode::Complex || polys.iter().all(MVPolynomial::is_real);
    let fischer = verify::gram(&polys, InnerKind::Fischer)?;
    let l2 = verify::gram(&polys, InnerKind::L2)?;
    let expected_dim = oracle_dim(&b.meta)?;
    let rank = verify::rank(&polys);
    let mut norm_ratios = Vec::new();
    if fischer.ok && l2.ok {
        let keys: Vec<String> = b.elements.iter().map(|e| piece_key(&e.label)).collect();
        for group in verify::group_by(&keys) {
            let mut distinct: Vec<Scalar> = Vec::new();
            for &i in &group {
                let r = &fischer.diagonal[i] * &l2.diagonal[i].inv().expect("positive");
                if !distinct.contains(&r) {
                    distinct.push(r);
                }
            }
            norm_ratios.push((keys[group[0]].clone(), distinct));
        }
    }
    let ok = membership_failures.is_empty()
        && mode_ok
        && fischer.ok
        && l2.ok
        && polys.len() == expected_dim
        && rank == expected_dim;
    Ok(BasisReport {
        membership_failures,
        mode_ok,
        fischer,
        l2,
        expected_dim,
        rank,
        norm_ratios,
        ok,
    })
}
