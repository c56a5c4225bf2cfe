use std::process::Command;

use ddb_sphere::cli::{run, Report, EXIT_OK, EXIT_REJECTED, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String) {
    let r = run(std::iter::once("ddb-sphere").chain(args.iter().copied()));
    (r.exit_code, r.payload)
}

fn ok(args: &[&str]) -> String {
    let (code, out) = call(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {out}");
    out
}

fn s2_file() -> tempfile_path::TempFile {
    tempfile_path::TempFile::new("deg 0: Z\ndeg 2: Z\n")
}

// Minimal scratch file that removes itself.
mod tempfile_path {
    use std::path::PathBuf;
    use std::sync::atomic::{AtomicUsize, Ordering};

    static NEXT: AtomicUsize = AtomicUsize::new(0);

    pub struct TempFile(pub PathBuf);

    impl TempFile {
        pub fn new(contents: &str) -> Self {
            let n = NEXT.fetch_add(1, Ordering::Relaxed);
            let path = std::env::temp_dir().join(format!("ddb-sphere-{}-{n}.txt", std::process::id()));
            std::fs::write(&path, contents).unwrap();
            TempFile(path)
        }

        pub fn as_str(&self) -> &str {
            self.0.to_str().unwrap()
        }
    }

    impl Drop for TempFile {
        fn drop(&mut self) {
            let _ = std::fs::remove_file(&self.0);
        }
    }
}

#[test]
fn golden_text() {
    assert_eq!(ok(&["sq", "--i", "1", "--poly", "w2", "--rank", "6"]), "w3");
    assert_eq!(ok(&["sq", "--i", "2", "--poly", "w3", "--rank", "5"]), "w2*w3 + w5");
    assert_eq!(ok(&["sq", "--i", "2", "--poly", "w2^2", "--rank", "3"]), "w3^2");
    assert_eq!(ok(&["sq", "--i", "3", "--poly", "w2^2", "--rank", "3"]), "0");
    assert_eq!(ok(&["sq-word", "--word", "2,1", "--poly", "w2", "--rank", "6"]), "w2*w3 + w5");
    assert_eq!(ok(&["h", "--s", "5"]), "3");
    assert_eq!(ok(&["h", "--s", "17"]), "8");
    assert_eq!(
        ok(&["spin-lemma", "--t", "1"]),
        "v_1 = w2*w3 + w5\nleading w5 present: true\nremainder: w2*w3\n\
         remainder max generator: 3 (bound 3)\nlemma holds: true"
    );
    assert_eq!(
        ok(&["quillen-gens", "--m", "3"]),
        "w2 [deg 2] = w2\nSq^1 w2 [deg 3] = w3\nSq^2 Sq^1 w2 [deg 5] = w2*w3"
    );
    assert_eq!(ok(&["in-ideal", "--m", "4", "--poly", "w4"]), "not a member");
    assert_eq!(ok(&["in-ideal", "--m", "5", "--poly", "w2*w4"]), "member\n  (w2) * (w4)");
    let spin = ok(&["spin-obstruction", "--k", "4"]);
    assert!(spin.starts_with("true\nk = 4 = 2^2, so t = 1\nt <= h(k+1) - 1: 1 <= h(5) - 1 = 2\n"), "{spin}");
    assert_eq!(
        ok(&["spin-obstruction", "--k", "6"]),
        "false\nk = 6 is not a power of two; lowest nonvanishing Stiefel-Whitney degree must be a power of 2"
    );
    assert_eq!(ok(&["euler-check", "--chi", "2,0,0"]), "true\nchi(B1) + chi(B2) - chi(L) = 2 + 0 - 0 = 2");
    assert!(ok(&["euler-check", "--chi", "0,0,0"]).starts_with("false"));
    let base = s2_file();
    assert_eq!(
        ok(&["gysin", "--fiber", "5", "--base", base.as_str()]),
        "deg 0: Z^1\ndeg 2: Z^1\ndeg 5: Z^1\ndeg 7: Z^1"
    );
    assert_eq!(
        ok(&["btop", "--dim", "5", "--k", "2"]),
        "s = 1\nm = 2\nZ[e,a]/<2e, ea, a^2, e^2>, |e| = 3, |a| = 5\ndeg 0: Z^1\ndeg 3: Z^0 + Z/2\ndeg 5: Z^1"
    );
    assert!(ok(&["btop", "--dim", "11", "--k", "3"]).starts_with("s = 2\nm = m"));
    assert!(ok(&["classify", "--n", "4", "--l", "1,1", "--orient", "n,n"]).starts_with("DiffeoS4"));
    assert!(ok(&["classify", "--n", "6", "--l", "3,2", "--orient", "o,o"]).starts_with("HomeoSphere"));
    let contra = ok(&["classify", "--n", "8", "--l", "3,2", "--orient", "orientable,orientable"]);
    assert!(contra.starts_with("Contradiction"), "{contra}");
    assert!(contra.contains("\n  R5 "), "{contra}");
}

#[test]
fn golden_glue_table() {
    let out = ok(&["glue", "--k", "4"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "k = 4, ring = connected-sum");
    assert_eq!(lines[1], "row1 | row2 | |det| | coker | verdict");
    assert_eq!(lines[2], "(-1, -1) | (-1, -1) | 0 | Z^1 | not a rational sphere");
    assert_eq!(lines[3], "(-1, -1) | (-1, 1) | 2 | Z/2 | rational sphere, H^{k+1} = Z_2");
    assert_eq!(lines.iter().filter(|l| l.ends_with("Z_2")).count(), 8);
    assert!(lines.contains(&"M_f dimension: 9"));
    assert_eq!(lines.last(), Some(&"admissible dimensions: {5, 9, 17}"));
    let product = ok(&["glue", "--k", "6", "--ring", "product"]);
    assert!(product.lines().skip(2).take(16).all(|l| l.contains("| 0 |") || l.contains("| 1 |")), "{product}");
}

#[test]
fn exit_codes() {
    let base = s2_file();
    let torsion_base = tempfile_path::TempFile::new("deg 0: Z\ndeg 3: Z/2\ndeg 5: Z\n");
    let bad_base = tempfile_path::TempFile::new("deg 0: Q\n");
    let corpus: &[(&[&str], i32)] = &[
        (&["sq", "--i", "1", "--poly", "w2", "--rank", "6"], EXIT_OK),
        (&["h", "--s", "9"], EXIT_OK),
        (&["classify", "--n", "8", "--l", "3,2", "--orient", "o,o"], EXIT_OK),
        (&["gysin", "--fiber", "3", "--base", base.as_str()], EXIT_OK),
        (&["--help"], EXIT_OK),
        // Domain rejections.
        (&["sq", "--i", "1", "--poly", "w9", "--rank", "6"], EXIT_REJECTED),
        (&["sq", "--i", "1", "--poly", "w1", "--rank", "6"], EXIT_REJECTED),
        (&["h", "--s", "0"], EXIT_REJECTED),
        (&["btop", "--dim", "6", "--k", "2"], EXIT_REJECTED),
        (&["btop", "--dim", "7", "--k", "2"], EXIT_REJECTED),
        (&["classify", "--n", "7", "--l", "3,2", "--orient", "o,o"], EXIT_REJECTED),
        (&["classify", "--n", "6", "--l", "6,1", "--orient", "o,o"], EXIT_REJECTED),
        (&["glue", "--k", "6"], EXIT_REJECTED),
        (&["glue", "--k", "3", "--ring", "product"], EXIT_REJECTED),
        (&["spin-obstruction", "--k", "5"], EXIT_REJECTED),
        (&["spin-obstruction", "--k", "64"], EXIT_REJECTED),
        (&["gysin", "--fiber", "2", "--base", torsion_base.as_str()], EXIT_REJECTED),
        (&["in-ideal", "--m", "9", "--poly", "w2^30", "--max-degree", "40"], EXIT_REJECTED),
        // Malformed input.
        (&["sq", "--i", "1", "--poly", "w2 +", "--rank", "6"], EXIT_USAGE),
        (&["sq", "--i", "1", "--poly", "w2^0", "--rank", "6"], EXIT_USAGE),
        (&["sq", "--i", "1", "--poly", "w2"], EXIT_USAGE),
        (&["sq", "--i", "x", "--poly", "w2", "--rank", "6"], EXIT_USAGE),
        (&["bogus"], EXIT_USAGE),
        (&[], EXIT_USAGE),
        (&["classify", "--n", "6", "--l", "3", "--orient", "o,o"], EXIT_USAGE),
        (&["classify", "--n", "6", "--l", "3,2", "--orient", "o,maybe"], EXIT_USAGE),
        (&["glue", "--k", "4", "--ring", "torus"], EXIT_USAGE),
        (&["euler-check", "--chi", "1,2"], EXIT_USAGE),
        (&["gysin", "--fiber", "2", "--base", bad_base.as_str()], EXIT_USAGE),
        (&["gysin", "--fiber", "2", "--base", "/nonexistent/base.txt"], EXIT_USAGE),
    ];
    for (args, want) in corpus {
        let (code, out) = call(args);
        assert_eq!(code, *want, "{args:?}: {out}");
    }
}

#[test]
fn json_round_trip() {
    let base = s2_file();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["sq", "--i", "2", "--poly", "w3", "--rank", "5"],
        vec!["sq-word", "--word", "4,2,1", "--poly", "w2", "--rank", "9"],
        vec!["spin-lemma", "--t", "2"],
        vec!["h", "--s", "17"],
        vec!["quillen-gens", "--m", "9"],
        vec!["in-ideal", "--m", "9", "--poly", "w9 + w2*w7"],
        vec!["spin-obstruction", "--k", "8"],
        vec!["euler-check", "--chi", "2,0,0"],
        vec!["gysin", "--fiber", "5", "--base", base.as_str()],
        vec!["btop", "--dim", "5", "--k", "2"],
        vec!["classify", "--n", "14", "--l", "9,4", "--orient", "o,o"],
        vec!["glue", "--k", "8"],
    ];
    for args in invocations {
        let text = ok(&args);
        let mut json_args = vec!["--json"];
        json_args.extend(&args);
        let json = ok(&json_args);
        let report: Report = serde_json::from_str(&json).unwrap_or_else(|e| panic!("{args:?}: {e}\n{json}"));
        // Fields round-trip, and the text mode is derived from the same data.
        let again = serde_json::to_string_pretty(&report).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&again).unwrap(), report);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["command"], args[0], "{args:?}");
        assert_eq!(report.render_text(), text, "{args:?}");
    }
}

#[test]
fn binary_routes_streams() {
    let bin = env!("CARGO_BIN_EXE_ddb-sphere");
    let out = Command::new(bin).args(["sq", "--i", "1", "--poly", "w2", "--rank", "6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "w3\n");
    let out = Command::new(bin).args(["btop", "--dim", "6", "--k", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_REJECTED));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("homotopy sphere"));
    let out = Command::new(bin).args(["sq", "--i", "1", "--poly", "w2 * ", "--rank", "6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
