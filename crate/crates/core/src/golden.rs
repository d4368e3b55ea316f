//! Reference bases written out by hand from published listings, stored as
//! basis JSON with an `expr` string per element.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::gt_basis::{
    find_by_label, gmt_basis, gt_basis_hodge, Basis, BasisElement, BasisKind, Step,
};
use crate::mvpoly::MVPolynomial;
use crate::parse::parse;
use crate::scalar::{AlgebraMode, Scalar};

macro_rules! golden {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../golden/", $name, ".json")))),*]
    };
}

/// `(name, JSON text)` of every reference file.
pub const FILES: &[(&str, &str)] = golden!(
    "hodge_m3_s1_k0",
    "hodge_m3_s1_k1",
    "hodge_m3_s1_k2",
    "hodge_m4_s2_k0",
    "hodge_m4_s2_k1",
    "hodge_m4_s2_k2",
    "gmt_factor_m3_s1_k1",
    "gmt_factor_m3_s1_k2",
);

pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

pub fn raw(name: &str) -> Result<Value> {
    let (_, text) = FILES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::InvalidArgument(format!("no reference '{name}'")))?;
    Ok(serde_json::from_str(text)?)
}

/// The stored basis and the source expression of each element.
pub fn load(name: &str) -> Result<(Basis, Vec<String>)> {
    let v = raw(name)?;
    let exprs = v["elements"]
        .as_array()
        .map(|es| {
            es.iter()
                .map(|e| e["expr"].as_str().unwrap_or_default().to_string())
                .collect()
        })
        .unwrap_or_default();
    Ok((Basis::from_json(&v)?, exprs))
}

/// What the library builds for the space a reference file describes. For
/// `gmt` files this is only the factor-image part.
pub fn constructed(b: &Basis) -> Result<Vec<BasisElement>> {
    let (m, k) = (b.meta.m, b.meta.k);
    Ok(match b.meta.kind {
        BasisKind::Gmt => gmt_basis(m, k, &b.meta.grades, AlgebraMode::Complex)?
            .elements
            .into_iter()
            .filter(|e| matches!(e.label.steps().first(), Some(Step::Factor(_))))
            .collect(),
        _ => gt_basis_hodge(m, k, b.meta.grades[0], AlgebraMode::Complex)?.elements,
    })
}

/// Pairs every `expected[i]` with the unique `found[j]` such that
/// `expected[i] = c · found[j]`, requiring a bijection.
pub fn match_up_to_scalars(
    expected: &[MVPolynomial],
    found: &[MVPolynomial],
) -> std::result::Result<Vec<(usize, Scalar)>, String> {
    if expected.len() != found.len() {
        return Err(format!("cardinality {} vs {}", expected.len(), found.len()));
    }
    let mut used = vec![false; found.len()];
    let mut out = Vec::with_capacity(expected.len());
    for (i, e) in expected.iter().enumerate() {
        let hits: Vec<(usize, Scalar)> = found
            .iter()
            .enumerate()
            .filter_map(|(j, f)| e.scalar_quotient(f).map(|c| (j, c)))
            .collect();
        match hits.as_slice() {
            [(j, c)] if !used[*j] => {
                used[*j] = true;
                out.push((*j, c.clone()));
            }
            [] => return Err(format!("element {i} has no proportional partner")),
            _ => return Err(format!("element {i} matches ambiguously")),
        }
    }
    Ok(out)
}

/// Checks that the expressions parse to the stored polynomials, that the
/// stored elements match the constructed ones up to scalars, and that each
/// label points at a proportional element.
pub fn compare(name: &str) -> Result<std::result::Result<usize, String>> {
    let (b, exprs) = load(name)?;
    for (x, e) in exprs.iter().zip(&b.elements) {
        if parse(x, b.meta.m)? != e.poly {
            return Ok(Err(format!(
                "{name}: '{x}' does not parse to the stored polynomial"
            )));
        }
    }
    let built = Basis {
        meta: b.meta.clone(),
        elements: constructed(&b)?,
    };
    if let Err(why) = match_up_to_scalars(&b.polys(), &built.polys()) {
        return Ok(Err(format!("{name}: {why}")));
    }
    for e in &b.elements {
        match find_by_label(&built, &e.label) {
            Some(hit) if e.poly.scalar_quotient(&hit.poly).is_some() => {}
            _ => return Ok(Err(format!("{name}: label {} does not match", e.label))),
        }
    }
    Ok(Ok(b.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_reference_matches() {
        for name in names() {
            assert!(compare(name).unwrap().is_ok(), "{name}");
        }
        assert!(raw("missing").is_err());
    }
}
