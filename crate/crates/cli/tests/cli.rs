use std::io::Write;
use std::path::{Path, PathBuf};

use modbb_cli::{run, EXIT_MATH, EXIT_OK, EXIT_PARSE, EXIT_USAGE};
use tempfile::NamedTempFile;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

/// Runs `modbb args...` and returns `(exit code, stdout, stderr)`.
fn modbb(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("modbb").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const HEADER: &str = "ring Q[x,y]\nrank 2\norder degrevlex\n";

#[test]
fn compute_prints_the_order_module_and_basis() {
    let (code, out, err) = modbb(&["compute", path(&data("mbba.txt"))]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(
        out,
        "M = {e1, e2}\n\
         G1 = x*e1 + 4/3*e1 + 2/3*e2\n\
         G2 = y*e1 - e1\n\
         G3 = x*e2 - 2/3*e1 - 1/3*e2\n\
         G4 = y*e2 - e2\n"
    );
}

#[test]
fn check_reports_the_first_failing_pair() {
    for criterion in ["neighbors", "all-pairs"] {
        let (code, out, _) = modbb(&["check", path(&data("prebasis.txt")), "--criterion", criterion]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "NOT a border basis; witness SV(G1,G2), NR = x*e1 + y*e1 + e1 + e2\n");
    }
    let (_, out, _) = modbb(&["check", path(&data("prebasis.txt")), "--criterion", "matrices"]);
    assert!(out.starts_with("NOT a border basis"), "{out}");
}

#[test]
fn check_accepts_a_border_basis() {
    let f = file(&format!(
        "{HEADER}ordermodule:\ne1, e2\nvectors:\n\
         x*e1 + 4/3*e1 + 2/3*e2\nx*e2 - 2/3*e1 - 1/3*e2\ny*e1 - e1\ny*e2 - e2\n"
    ));
    for criterion in ["neighbors", "all-pairs", "matrices"] {
        let (code, out, _) = modbb(&["check", path(f.path()), "--criterion", criterion]);
        assert_eq!((code, out.as_str()), (EXIT_OK, "border basis\n"));
    }
}

#[test]
fn dividing_zero_gives_zero() {
    let (code, out, _) = modbb(&["divide", path(&data("prebasis.txt")), "--vector", "0"]);
    assert_eq!(code, EXIT_OK);
    let want: String = (1..=7).map(|j| format!("q{j} = 0\n")).chain(["NR = 0\n".to_string()]).collect();
    assert_eq!(out, want);
}

#[test]
fn division_example() {
    let (code, out, _) =
        modbb(&["divide", path(&data("prebasis.txt")), "--vector", "x^3*e1 + x*y*e1 + x^3*y*e2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "q1 = x\nq2 = 2\nq3 = 0\nq4 = y\nq5 = 0\nq6 = 0\nq7 = 0\nNR = -x*e2 + y*e1 + 2*e2\n");
}

#[test]
fn quotient_and_subideal_examples() {
    let (code, out, _) = modbb(&["quotient", path(&data("quotient.txt"))]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("M^S = {e1, e2}\n"), "{out}");
    assert_eq!(out.lines().count(), 5);

    let (code, out, _) = modbb(&["subideal", path(&data("subideal.txt"))]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "O_F = {f1, f2}");
    for g in ["x*f1 + 4/3*f1 + 2/3*f2 = ", "y*f1 - f1 = ", "x*f2 - 2/3*f1 - 1/3*f2 = ", "y*f2 - f2 = "] {
        assert!(lines.iter().any(|l| l.contains(g)), "missing {g} in {out}");
    }
}

#[test]
fn groebner_and_multmat_run() {
    let (code, out, _) = modbb(&["groebner", path(&data("mbba.txt"))]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 4);
    let (code, out, _) = modbb(&["multmat", path(&data("prebasis.txt"))]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("X_x =\n") && out.contains("X_y =\n"));
    assert!(out.ends_with("matrices do not commute\n"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for cmd in ["compute", "groebner"] {
        for format in ["pretty", "json"] {
            let a = modbb(&[cmd, path(&data("mbba.txt")), "--format", format]);
            let b = modbb(&[cmd, path(&data("mbba.txt")), "--format", format]);
            assert_eq!(a, b);
        }
    }
    assert_eq!(modbb(&["selftest", "--seed", "3", "--cases", "5"]), modbb(&["selftest", "--seed", "3", "--cases", "5"]));
}

#[test]
fn json_output_is_structured() {
    let (code, out, _) = modbb(&["compute", path(&data("mbba.txt")), "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order_module"].as_array().unwrap().len(), 2);
    let g1 = &v["basis"][0];
    assert_eq!(g1[0]["exponents"], serde_json::json!([1, 0]));
    assert_eq!(g1[1]["coeff"], "4/3");
    assert_eq!(g1[1]["component"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(modbb(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(modbb(&["compute"]).0, EXIT_USAGE);
    assert_eq!(modbb(&["compute", "/nonexistent/input.txt"]).0, EXIT_USAGE);
    assert_eq!(modbb(&["--help"]).0, EXIT_OK);

    let bad = file(&format!("{HEADER}vectors:\nx*e3\n"));
    let (code, _, err) = modbb(&["compute", path(bad.path())]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("5:"), "{err}");

    let no_section = file(HEADER);
    assert_eq!(modbb(&["compute", path(no_section.path())]).0, EXIT_PARSE);

    let open = file(&format!("{HEADER}ordermodule:\nx*e1, e2\nvectors:\ny*e1\n"));
    let (code, _, err) = modbb(&["check", path(open.path())]);
    assert_eq!(code, EXIT_MATH, "{err}");

    let (code, _, err) = modbb(&["compute", path(&data("mbba.txt")), "--max-degree", "0"]);
    assert_eq!(code, EXIT_MATH);
    assert!(err.contains("cap"), "{err}");

    let infinite = file(&format!("{HEADER}vectors:\nx*e1\ne2\n"));
    let (code, _, err) = modbb(&["compute", path(infinite.path()), "--preflight"]);
    assert_eq!(code, EXIT_MATH);
    assert!(err.contains("not finite"), "{err}");
}

#[test]
fn selftest_passes() {
    let (code, out, _) = modbb(&["selftest", "--seed", "11", "--cases", "8"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.ends_with("9 of 9 checks passed (seed 11)\n"));
}
