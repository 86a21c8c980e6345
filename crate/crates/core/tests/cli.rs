use std::process::{Command, Output};

use regen_core::cli::parse_csv;
use regen_core::exactmath::{rat, to_f64};

fn regen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn point_construction1() {
    let o = regen(&[
        "point",
        "--n",
        "5",
        "--k",
        "3",
        "--d",
        "3",
        "--construction",
        "c1",
        "--khat",
        "2",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "series,khat,alpha_exact,gamma_exact,alpha,gamma\nc1,2,2/5,3/4,0.4,0.75\n"
    );
}

#[test]
fn point_msr_and_bad_khat() {
    let o = regen(&[
        "point",
        "--n",
        "5",
        "--k",
        "3",
        "--d",
        "3",
        "--construction",
        "msr",
    ]);
    assert!(stdout(&o).contains("\nmsr,,1/3,1,"));
    let bad = regen(&[
        "point",
        "--n",
        "5",
        "--k",
        "3",
        "--d",
        "3",
        "--construction",
        "c1",
        "--khat",
        "9",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("k_hat = 9 out of range"));
    let invalid = regen(&[
        "point",
        "--n",
        "3",
        "--k",
        "3",
        "--d",
        "3",
        "--construction",
        "msr",
    ]);
    assert_eq!(invalid.status.code(), Some(2));
}

#[test]
fn point_functional_alpha() {
    let o = regen(&[
        "point", "--n", "5", "--k", "3", "--d", "3", "--alpha", "2/5",
    ]);
    assert!(stdout(&o).contains("functional,,2/5,3/5,0.4,0.6"));
}

#[test]
fn region_hull_533() {
    let o = regen(&[
        "region", "--n", "5", "--k", "3", "--d", "3", "--series", "hull",
    ]);
    assert!(o.status.success());
    let rows = parse_csv(&stdout(&o)).unwrap();
    let pts: Vec<_> = rows
        .iter()
        .map(|r| (r.alpha.clone(), r.gamma.clone()))
        .collect();
    assert_eq!(
        pts,
        vec![
            (rat(1, 3), rat(1, 1)),
            (rat(2, 5), rat(3, 4)),
            (rat(1, 2), rat(1, 2))
        ]
    );
}

#[test]
fn region_coincidence_433() {
    let o = regen(&[
        "region",
        "--n",
        "4",
        "--k",
        "3",
        "--d",
        "3",
        "--series",
        "baseline,c1,c2",
    ]);
    let rows = parse_csv(&stdout(&o)).unwrap();
    for kh in 1..=3 {
        let vals: Vec<_> = rows
            .iter()
            .filter(|r| r.khat == Some(kh))
            .map(|r| (r.alpha.clone(), r.gamma.clone()))
            .collect();
        assert_eq!(vals.len(), 3);
        assert!(vals.iter().all(|v| *v == vals[0]), "k_hat={kh}");
    }
}

#[test]
fn region_is_deterministic_and_decimals_match() {
    let args = [
        "region", "--n", "61", "--k", "55", "--d", "59", "--series", "all",
    ];
    let a = regen(&args);
    let b = regen(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let rows = parse_csv(&text).unwrap();
    assert!(rows.iter().any(|r| r.series == "c2"));
    for (line, row) in text.lines().skip(1).zip(&rows) {
        let cols: Vec<&str> = line.split(',').collect();
        let alpha: f64 = cols[4].parse().unwrap();
        assert!((alpha - to_f64(&row.alpha)).abs() < 1e-14, "{line}");
    }
}

#[test]
fn region_json_and_out_file() {
    let dir = tempdir();
    let path = dir.join("region.json");
    let o = regen(&[
        "region",
        "--n",
        "5",
        "--k",
        "3",
        "--d",
        "3",
        "--series",
        "c1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["rows"][1]["alpha_exact"], "2/5");
    assert_eq!(v["rows"][1]["gamma_exact"], "3/4");
    assert_eq!(v["rows"][1]["provenance"], "CONSTRUCTION1");

    let bad = regen(&[
        "region",
        "--n",
        "5",
        "--k",
        "3",
        "--d",
        "3",
        "--out",
        "/nonexistent/dir/x.csv",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("/nonexistent/dir/x.csv"));
}

fn tempdir() -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("regen-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn verify_pass_and_tamper() {
    let o = regen(&[
        "verify", "--n", "5", "--k", "3", "--d", "3", "--khat", "2", "--seed", "7",
    ]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert!(text.contains("\ngamma,3/4,3/4,PASS\n"));
    assert!(text.contains("\ngamma_nonempty,15/16,15/16,PASS\n"));
    assert!(text.contains("\nreconstructions,10 exact,,PASS\n"));
    assert!(text.ends_with("overall,,,PASS\n"));

    let t = regen(&[
        "verify", "--n", "5", "--k", "3", "--d", "3", "--khat", "2", "--seed", "7", "--tamper",
        "0,0",
    ]);
    assert_eq!(t.status.code(), Some(1));
    let text = stdout(&t);
    assert!(text.contains("repair of node"), "{text}");
    assert!(text.ends_with("overall,,,FAIL\n"));
}

#[test]
fn verify_degenerate_and_json() {
    let o = regen(&[
        "verify", "--n", "4", "--k", "2", "--d", "2", "--khat", "2", "--format", "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["copies"], 24);

    let capped = regen(&["verify", "--n", "8", "--k", "6", "--d", "6", "--khat", "2"]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap override"));
}

#[test]
fn oracle_subcommand() {
    let o = regen(&["oracle", "--n", "6", "--k", "3", "--d", "4", "--khat", "2"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "n,k,d,khat,oracle_exact,closed_form_exact,oracle,agree\n6,3,4,2,9/10,9/10,0.9,true\n"
    );
    let capped = regen(&[
        "oracle", "--n", "61", "--k", "55", "--d", "59", "--khat", "3",
    ]);
    assert_eq!(capped.status.code(), Some(2));
}
