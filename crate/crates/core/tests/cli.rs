//! The binary's subcommands, output formats and exit codes.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_skewlcd"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn tables_reproduce_with_exit_zero() {
    let (code, out, _) = run(&["tables"]);
    assert_eq!(code, 0, "{out}");
    for label in ["[12,10,2]", "[36,34,2]", "x^10+1", "w^14"] {
        assert!(out.contains(label), "missing {label}");
    }
    let (code, out, _) = run(&["--json", "tables", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.to_string().contains("[36,33,2] worked example"));
}

#[test]
fn factor_lists_known_divisors() {
    let (code, out, _) = run(&[
        "factor",
        "--field",
        "GF(2^4)",
        "--r",
        "2",
        "--n",
        "4",
        "--lambda",
        "1",
        "--max-deg",
        "3",
    ]);
    assert_eq!(code, 0);
    for g in ["g = x^2+w*x+w^6", "g = x+w^3"] {
        assert!(out.contains(g), "missing {g}");
    }
    let (_, out, _) = run(&[
        "factor",
        "--field",
        "GF(2^4)",
        "--r",
        "2",
        "--n",
        "4",
        "--lambda",
        "1",
        "--max-deg",
        "0",
    ]);
    assert!(out.contains("1 right divisors"));
    let (code, out, _) = run(&[
        "factor",
        "--field",
        "GF(3^2)",
        "--n",
        "10",
        "--lambda",
        "-1",
        "--max-deg",
        "6",
    ]);
    assert_eq!(code, 0);
    for g in [
        "g = x^4+w^5*x^2+1",
        "g = x^4+w^7*x^2+1",
        "g = x^6+w*x^4+w*x^2+1",
        "g = x^6+w^3*x^4+w^3*x^2+1",
    ] {
        assert!(out.contains(g), "missing {g}");
    }
}

#[test]
fn lcd_check_verdicts_and_certificates() {
    let (code, out, _) = run(&[
        "lcd-check",
        "--field",
        "GF(4)",
        "--n",
        "6",
        "--lambda",
        "1",
        "--g",
        "x^6+1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("LCD = true") && out.contains("hull dim = 0"));

    let (code, out, _) = run(&[
        "--json",
        "lcd-check",
        "--field",
        "GF(4)",
        "--n",
        "6",
        "--lambda",
        "1",
        "--g",
        "x+1",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lcd"], false);
    assert_eq!(v["components"][0]["gcrd"], "x+1");

    let args = [
        "lcd-check",
        "--field",
        "GF(9)",
        "--n",
        "10",
        "--alpha",
        "1",
        "--beta",
        "0",
        "--g1",
        "x^4+w*x^2+1",
        "--g2",
        "x^6+w^7*x^4+w^3*x^2+2",
    ];
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    assert!(out.contains("LCD = true"), "{out}");
}

#[test]
fn census_agrees_with_oracle() {
    let (code, out, _) = run(&[
        "--csv",
        "census",
        "--p",
        "3",
        "--n",
        "4",
        "--variant",
        "euclid-nega",
        "--oracle",
    ]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().ends_with(",6,6,true"), "{out}");
    let (code, out, _) = run(&[
        "--json",
        "census",
        "--p",
        "3",
        "--n",
        "4",
        "--lambda=1-2v",
        "--inner",
        "euclidean",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["formula_count"], "48");
}

#[test]
fn search_writes_a_deduplicated_catalog() {
    let dir = std::env::temp_dir().join(format!("skewlcd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalog.json");
    let path_s = path.to_str().unwrap();
    let search = [
        "search",
        "--field",
        "GF(4)",
        "--n",
        "6",
        "--max-deg",
        "1",
        "--catalog",
        path_s,
    ];
    let (code, out, _) = run(&search);
    assert_eq!(code, 0);
    assert!(out.contains("[12, 10, 2]"));
    let first = std::fs::read_to_string(&path).unwrap();
    let entries: Vec<serde_json::Value> = serde_json::from_str(&first).unwrap();
    assert_eq!(entries.len(), 9);
    run(&search);
    let again: Vec<serde_json::Value> =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(again, entries);

    let (code, out, _) = run(&[
        "search",
        "--field",
        "GF(4)",
        "--n",
        "6",
        "--min-deg",
        "2",
        "--max-deg",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("0 LCD"));
    let (_, out, _) = run(&[
        "search",
        "--field",
        "GF(4)",
        "--n",
        "18",
        "--max-deg",
        "2",
        "--wmax",
        "2",
    ]);
    assert!(out.contains("[36, 33, 2]"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn errors_exit_two() {
    for args in [
        &[
            "census",
            "--p",
            "4",
            "--n",
            "4",
            "--variant",
            "euclid-cyclic",
        ][..],
        &[
            "lcd-check",
            "--field",
            "GF(4)",
            "--n",
            "5",
            "--lambda",
            "1",
            "--g",
            "x+w",
        ],
        &["factor", "--field", "GF(6)", "--n", "4", "--lambda", "1"],
        &["tables", "7"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}
