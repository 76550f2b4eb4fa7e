use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use probecut_cli::{parse_instance, Answer, RunReport};
use tempfile::TempDir;

fn probecut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_probecut"))
        .args(args)
        .env_remove("PROBECUT_ORACLE_MAX_N")
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn report(out: &Output) -> RunReport {
    serde_json::from_slice(&out.stdout).expect("stdout is a run report")
}

#[test]
fn solve_mmc_on_p4_and_revalidate() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.txt", "e 0 1\ne 1 2\ne 2 3\n");
    let out = probecut(&["solve", "--problem", "mmc", "--algo", "poly", "--input", s(&p4)]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.answer, Answer::Yes);
    assert_eq!(r.certificate.as_ref().unwrap().size, 2);

    let saved = write(&dir, "report.json", &String::from_utf8(out.stdout).unwrap());
    let check = probecut(&["verify", "--input", s(&p4), "--colouring", s(&saved), "--d", "1"]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn brute_no_exits_one() {
    let dir = TempDir::new().unwrap();
    let k5 = write(
        &dir,
        "k5.json",
        r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]],"probes":[0,1,2,3,4],"nonprobes":[]}"#,
    );
    let out = probecut(&["solve", "--problem", "dcut", "--d", "2", "--algo", "brute", "--input", s(&k5)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out).answer, Answer::No);
}

#[test]
fn errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.txt", "e 0 1\ne 1 2\ne 2 3\n");
    let out = probecut(&["solve", "--problem", "dcut", "--d", "1", "--algo", "poly", "--input", s(&p4)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("d >= 2"));

    let bad = write(&dir, "bad.txt", "e 0 1\nedge 1 2\n");
    let out = probecut(&["solve", "--problem", "mc", "--algo", "brute", "--input", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let invalid = write(&dir, "n.json", r#"{"n":2,"edges":[[0,1]],"probes":[],"nonprobes":[0,1]}"#);
    let out = probecut(&["solve", "--problem", "mc", "--algo", "brute", "--input", s(&invalid)]);
    assert_eq!(out.status.code(), Some(2));

    let out = probecut(&["solve", "--problem", "mc", "--input", s(&p4)]);
    assert_eq!(out.status.code(), Some(2), "missing --algo is a usage error");
}

#[test]
fn oracle_scale_guard_and_override() {
    let dir = TempDir::new().unwrap();
    let text: String = (0..29).map(|i| format!("e {i} {}\n", i + 1)).collect();
    let path = write(&dir, "p30.txt", &text);
    let out = probecut(&["solve", "--problem", "mc", "--algo", "brute", "--input", s(&path)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("scale"));
    let out = Command::new(env!("CARGO_BIN_EXE_probecut"))
        .args(["solve", "--problem", "mc", "--algo", "brute", "--input", s(&path)])
        .env("PROBECUT_ORACLE_MAX_N", "40")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_certificates_and_colourings() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "e 0 1\ne 1 2\nf 0 2\n");
    let out = probecut(&["verify", "--input", s(&p3), "--pattern", "2P2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = probecut(&["verify", "--input", s(&p3), "--pattern", "C3"]);
    assert_eq!(out.status.code(), Some(1), "G + F is a triangle");
    assert!(report(&out).violation.unwrap().contains("C3"));

    let star = write(&dir, "star.txt", "e 0 1\ne 0 2\n");
    let colouring = write(&dir, "c.txt", "BRR");
    let out = probecut(&["verify", "--input", s(&star), "--colouring", s(&colouring), "--d", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(report(&out).violation.unwrap().contains("vertex 0"));

    let p4 = write(&dir, "p4.txt", "e 0 1\ne 1 2\ne 2 3\n");
    let colouring = write(&dir, "c2.json", r#"["R","R","B","B"]"#);
    let out = probecut(&["verify", "--input", s(&p4), "--colouring", s(&colouring), "--d", "1", "--perfect"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(report(&out).violation.unwrap().contains("\u{2260} 1 opposite"));
}

#[test]
fn generated_documents_round_trip_and_verify() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.txt", "e 0 1\n");
    let sat = write(
        &dir,
        "sat.json",
        r#"{"n_vars":6,"positive":[[0,1,2],[0,2,3],[1,4,5],[3,4,5]],"negative":[[0,1,3],[0,2,4],[1,3,5],[2,4,5]]}"#,
    );
    let cases: Vec<(Vec<&str>, &str, usize)> = vec![
        (vec!["--family", "random-probe-hfree", "--n", "8", "--h", "P1+P4"], "P1+P4", 8),
        (vec!["--family", "moshi", "--input", s(&k2)], "claw", 4),
        (vec!["--family", "moshi", "--n", "5"], "claw", 0),
        (vec!["--family", "subdivide4", "--n", "6"], "claw", 6 + 36),
        (vec!["--family", "split", "--n", "6"], "split", 6),
        (vec!["--family", "sat4p1", "--figure"], "4P1", 14),
        (vec!["--family", "sat4p1", "--input", s(&sat), "--d", "3"], "4P1", 14),
    ];
    for (i, (params, pattern, n)) in cases.into_iter().enumerate() {
        let mut args = vec!["generate", "--seed", "1"];
        args.extend(params.iter().copied());
        let out = probecut(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let text = String::from_utf8(out.stdout).unwrap();
        let doc = parse_instance(&text).unwrap();
        assert_eq!(doc.to_json().trim_end(), text.trim_end(), "byte-stable round trip");
        assert!(doc.certificate_f.is_some());
        assert_eq!(doc.metadata["seed"], "1");
        if n > 0 {
            assert_eq!(doc.n, n, "{args:?}");
        }
        let path = write(&dir, &format!("doc{i}.json"), &text);
        let out = probecut(&["verify", "--input", s(&path), "--pattern", pattern]);
        assert_eq!(out.status.code(), Some(0), "{args:?} fails {pattern}");
    }
}

#[test]
fn reduce_commands() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.txt", "e 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
    let out = probecut(&["reduce", "--from", "graph", "--construction", "subdivide4", "--input", s(&k4)]);
    assert_eq!(out.status.code(), Some(0));
    let doc = parse_instance(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc.n, 4 + 24);
    assert_eq!(doc.metadata["construction"], "subdivide4");

    let out = probecut(&["reduce", "--from", "graph", "--construction", "sat4p1", "--input", s(&k4)]);
    assert_eq!(out.status.code(), Some(2));
    let c5 = write(&dir, "c5.txt", "e 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n");
    let out = probecut(&["reduce", "--from", "graph", "--construction", "split", "--input", s(&c5)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn crosscheck_runs() {
    let dir = TempDir::new().unwrap();
    let dump = dir.path().join("dumps");
    let common = ["--count", "40", "--max-n", "9", "--seed", "7", "--dump-dir", s(&dump)];
    for problem in [vec!["dcut", "--d", "2"], vec!["dcut", "--d", "3"], vec!["mmc"], vec!["pmc"], vec!["mc"]] {
        let mut args = vec!["crosscheck", "--problem"];
        args.extend(problem.iter().copied());
        args.extend(common);
        let out = probecut(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("40/40 agree"));
    }
    let out = probecut(&["crosscheck", "--problem", "mmc", "--count", "0", "--max-n", "8", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let out = probecut(&["crosscheck", "--problem", "mmc", "--count", "1", "--max-n", "30", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn crosscheck_is_deterministic() {
    let run = |workers: &str| {
        let out = probecut(&[
            "crosscheck", "--problem", "dcut", "--d", "2", "--count", "20", "--max-n", "8", "--seed", "3",
            "--workers", workers,
        ]);
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        (v["agree"].clone(), v["checked"].clone())
    };
    assert_eq!(run("1"), run("4"));
}
