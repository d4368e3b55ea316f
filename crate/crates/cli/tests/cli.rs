use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge-gt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn reference(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/golden")
        .join(format!("{name}.json"))
}

#[test]
fn generate_text_lists_the_basis() {
    let o = run(&[
        "generate", "--dim", "3", "--degree", "1", "--grade", "1", "--format", "text",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = run(&[
        "generate", "--dim", "2", "--degree", "4", "--grade", "1", "--format", "text",
    ]);
    assert_eq!(stdout(&o), "[plus] z_+^4*w_+\n[minus] z_-^4*w_-\n");
    let o = run(&[
        "generate", "--dim", "3", "--degree", "1", "--set", "0,1,2", "--format", "latex",
    ]);
    assert!(o.status.success() && stdout(&o).starts_with("\\left\\{"));
}

#[test]
fn generated_file_verifies_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.json");
    let p = path.to_str().unwrap();
    let args = [
        "generate",
        "--dim",
        "4",
        "--degree",
        "1",
        "--grade",
        "2",
        "--algebra",
        "real",
        "--out",
        p,
    ];
    assert!(run(&args).status.success());
    let first = std::fs::read(&path).unwrap();
    assert!(run(&args).status.success());
    assert_eq!(first, std::fs::read(&path).unwrap());

    let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
    let b = hodge_gt::gt_basis::Basis::from_json(&v).unwrap();
    let built = hodge_gt::gt_basis::gt_basis_hodge(4, 1, 2, hodge_gt::AlgebraMode::Real).unwrap();
    assert_eq!(b.polys(), built.polys());

    let o = run(&["verify", p]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn verify_accepts_references_and_empty_bases() {
    assert!(
        run(&["verify", reference("hodge_m4_s2_k2").to_str().unwrap()])
            .status
            .success()
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    let p = path.to_str().unwrap();
    assert!(
        run(&["generate", "--dim", "3", "--degree", "1", "--grade", "0", "--out", p])
            .status
            .success()
    );
    assert!(run(&["verify", p]).status.success());
}

#[test]
fn verify_rejects_corrupted_files() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(reference("hodge_m3_s1_k1")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let first = v["elements"][0]["poly"].clone();
    v["elements"][1]["poly"] = first;
    let dup = dir.path().join("dup.json");
    std::fs::write(&dup, v.to_string()).unwrap();
    assert_eq!(
        run(&["verify", dup.to_str().unwrap()]).status.code(),
        Some(1)
    );

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, &text[..text.len() / 2]).unwrap();
    assert_eq!(
        run(&["verify", garbage.to_str().unwrap()]).status.code(),
        Some(1)
    );
}

#[test]
fn dims_table() {
    let o = run(&["dims", "--dim", "3", "--degree", "0"]);
    assert_eq!(stdout(&o), "s\tdim H_0^s(R^3)\n0\t1\n1\t3\n2\t3\n3\t1\n");
    let o = run(&["dims", "--dim", "3", "--degree", "1"]);
    assert!(stdout(&o).ends_with("0\t0\n1\t5\n2\t5\n3\t0\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["generate", "--dim", "3", "--degree", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["generate", "--dim", "1", "--degree", "1", "--grade", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["generate", "--dim", "3", "--degree", "1", "--grade", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_hodge-gt"))
        .args(["dims", "--dim", "3", "--degree", "2"])
        .env("HODGE_GT_SIZE_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn selftest_quick_and_fault() {
    assert!(run(&["selftest", "--quick"]).status.success());
    let o = run(&["selftest", "--quick", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}
