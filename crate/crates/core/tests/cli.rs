use std::process::{Command, Output};

use sl2_epoly::IntPoly;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2-epoly"))
        .args(args)
        .env_remove("EPOLY_MAX_GENUS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_text() {
    let o = cli(&[
        "compute",
        "--genus",
        "2",
        "--holonomy",
        "minus-id",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^6 - 2q^4 - 30q^3 - 2q^2 + 1\n");
}

#[test]
fn compute_json_round_trips() {
    let o = cli(&[
        "compute",
        "--genus",
        "3",
        "--holonomy",
        "xi",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let p: IntPoly = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        p,
        sl2_epoly::moduli_epoly(sl2_epoly::HolonomyClass::XiLambda, 3).unwrap()
    );
}

#[test]
fn unknown_holonomy_is_a_usage_error() {
    let o = cli(&["compute", "--genus", "2", "--holonomy", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bogus"));
}

#[test]
fn genus_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_sl2-epoly"))
        .args(["compute", "--genus", "5", "--holonomy", "id"])
        .env("EPOLY_MAX_GENUS", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("EPOLY_MAX_GENUS"));
}

#[test]
fn table_csv_degrees() {
    let o = cli(&["table", "--max-genus", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("genus,holonomy,degree,coefficients"));
    let mut rows = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let g: usize = f[0].parse().unwrap();
        let want = match f[1] {
            // e(M_Id) = q^2 + 1 at genus 1; the 6g - 6 rule starts at genus 2.
            "id" if g == 1 => 2,
            "id" | "minus-id" => 6 * g - 6,
            _ => 6 * g - 4,
        };
        assert_eq!(f[2].parse::<usize>().unwrap(), want, "{line}");
        assert_eq!(f[3].split(';').count(), want + 1);
        rows += 1;
    }
    assert_eq!(rows, 20);
}

#[test]
fn table_latex() {
    let o = cli(&["table", "--max-genus", "2", "--format", "latex"]);
    let out = stdout(&o);
    assert!(out.starts_with("\\begin{tabular}"));
    assert!(out.contains("2 & $\\mathrm{Id}$ & $q^{6} + 17q^{4} + q^{2} + 1$ \\\\"));
}

#[test]
fn identities_and_verify_pass() {
    let o = cli(&["identities", "--max-genus", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with(" checks, 0 failed\n"));

    let o = cli(&["verify", "--prime", "5", "--max-genus", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS g=1 id: count 1080 expected 1080"));
    assert!(out.ends_with(" 0 mismatched\n"));
}

#[test]
fn verify_rejects_bad_primes() {
    assert_eq!(cli(&["verify", "--prime", "15"]).status.code(), Some(2));
    assert_eq!(cli(&["verify", "--prime", "3"]).status.code(), Some(2));
}

#[test]
fn glue_json() {
    let o = cli(&["glue", "--left", "2", "--right", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["genus"], 3);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("sl2-epoly-cli-{}.txt", std::process::id()));
    let o = cli(&[
        "compute",
        "--genus",
        "1",
        "--holonomy",
        "xi",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "q^2 + 4q + 1\n");
    let _ = std::fs::remove_file(path);
}
