use hodge_gt::golden::{self, compare, constructed, load, match_up_to_scalars};
use hodge_gt::gt_basis::verify_basis;
use hodge_gt::parse::parse;
use hodge_gt::AlgebraMode;
use serde_json::json;

#[test]
fn references_match_constructed_bases() {
    for name in golden::names() {
        assert_eq!(compare(name).unwrap().map(|_| ()), Ok(()), "{name}");
    }
}

#[test]
fn listed_hodge_bases_are_orthogonal_bases() {
    for name in golden::names().filter(|n| n.starts_with("hodge")) {
        let (b, _) = load(name).unwrap();
        let report = verify_basis(&b).unwrap();
        assert!(report.ok, "{name}: {}", report.to_json());
    }
}

#[test]
fn a_perturbed_reference_is_rejected() {
    let (b, _) = load("hodge_m3_s1_k2").unwrap();
    let built = constructed(&b).unwrap();
    let mut polys = b.polys();
    polys[3] = polys[3].add(&parse("x1^2 e1", 3).unwrap()).unwrap();
    let found: Vec<_> = built.iter().map(|e| e.poly.clone()).collect();
    assert!(match_up_to_scalars(&polys, &found).is_err());
    polys.pop();
    assert!(match_up_to_scalars(&polys, &found).is_err());
}

/// Rewrites the `poly` and `label` fields of every reference file from its
/// `expr` strings. Run with `cargo test --test golden -- --ignored`.
#[test]
#[ignore]
fn regenerate_reference_files() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    for name in golden::names() {
        let path = dir.join(format!("{name}.json"));
        let mut raw: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let m = raw["meta"]["m"].as_u64().unwrap() as usize;
        let exprs: Vec<String> = raw["elements"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["expr"].as_str().unwrap().to_string())
            .collect();
        let polys: Vec<_> = exprs.iter().map(|x| parse(x, m).unwrap()).collect();
        let (b, _) = load(name).unwrap();
        let built = constructed(&b).unwrap();
        let found: Vec<_> = built.iter().map(|e| e.poly.clone()).collect();
        let pairs = match_up_to_scalars(&polys, &found);
        let elements: Vec<_> = exprs
            .iter()
            .zip(&polys)
            .enumerate()
            .map(|(i, (x, p))| {
                let label = pairs.as_ref().map(|ps| built[ps[i].0].label.to_strings()).unwrap_or_default();
                json!({ "expr": x, "label": label, "poly": p.to_json(AlgebraMode::Complex).unwrap() })
            })
            .collect();
        raw["elements"] = json!(elements);
        std::fs::write(&path, serde_json::to_string_pretty(&raw).unwrap() + "\n").unwrap();
    }
}
