use std::path::{Path, PathBuf};

use chordal_cli::{run_with_args, CSV_HEADER};
use tempfile::TempDir;

const C4: &str = "p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
const K4: &str = "p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const P3: &str = "p 3 2\ne 1 2\ne 2 3\n";

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("chordal").chain(args.iter().copied());
    let code = run_with_args(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.txt", C4);
    let k4 = file(&dir, "k4.txt", K4);
    let bad = file(&dir, "bad.txt", "p 3 1\ne 1 9\n");

    let r = run(&["check", s(&c4), "--algo", "seq-partition"]);
    assert_eq!(r.code, 1, "{}", r.stderr);
    assert!(r.stdout.starts_with("chordal: no\n"));
    assert!(r.stdout.contains("witness: v=3 p=4 z=2"));
    assert!(r.stdout.contains("parse_ms: ") && r.stdout.contains("algorithm_ms: "));

    let r = run(&["check", s(&k4), "--algo", "parallel", "--workers", "2", "--seed", "7"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("chordal: yes\npeo: "));

    for algo in ["seq-labels", "seq-partition", "parallel"] {
        assert_eq!(run(&["check", s(&c4), "--algo", algo]).code, 1);
        assert_eq!(run(&["check", s(&k4), "--algo", algo]).code, 0);
    }

    let r = run(&["check", s(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
    assert_eq!(run(&["check", s(&dir.path().join("missing.txt"))]).code, 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["check", "x", "--algo", "quantum"]).code, 2);
    assert_eq!(run(&["gen", "clique", "10", "--param", "q=1"]).code, 2);
    let help = run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("check"));
}

#[test]
fn order_examples() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.txt", C4);
    let k4 = file(&dir, "k4.txt", K4);
    let p3 = file(&dir, "p3.txt", P3);
    let cases = [
        (&c4, "lexbfs-labels", "1 2 4 3\n"),
        (&c4, "lexbfs-partition", "1 2 4 3\n"),
        (&k4, "mcs", "1 2 3 4\n"),
        (&p3, "bfs", "1 2 3\n"),
        (&p3, "parallel-lexbfs", "1 2 3\n"),
    ];
    for (graph, algo, expected) in cases {
        let r = run(&["order", s(graph), "--algo", algo]);
        assert_eq!((r.code, r.stdout.as_str()), (0, expected), "{algo}: {}", r.stderr);
    }
    let target = dir.path().join("ord.txt");
    assert_eq!(run(&["order", s(&c4), "--out", s(&target)]).code, 0);
    assert_eq!(std::fs::read_to_string(&target).unwrap(), "1 2 4 3\n");
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.txt", C4);
    let ord = file(&dir, "ord.txt", "1 2 4 3\n");
    let not_bfs = file(&dir, "notbfs.txt", "1 3 2 4\n");
    let short = file(&dir, "short.txt", "1 2 2 3\n");

    let r = run(&["verify", s(&c4), s(&ord), "--property", "lb"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "property lb: holds\n"));

    let r = run(&["verify", s(&c4), s(&ord), "--property", "peo"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("witness: v=3 p=4 z=2"), "{}", r.stdout);

    let r = run(&["verify", s(&c4), s(&not_bfs), "--property", "b"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, "property b: violated at positions 1 2 3 (vertices 1 3 2)\n");

    let r = run(&["verify", s(&c4), s(&short), "--property", "b"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("invalid ordering"), "{}", r.stderr);
}

#[test]
fn gen_examples() {
    let dir = TempDir::new().unwrap();
    let cases = [
        (vec!["clique", "1000"], 499_500),
        (vec!["sparse", "10000", "--seed", "3"], 200_000),
        (vec!["tree", "10000", "--seed", "3"], 9_999),
        (vec!["chordal", "50", "--param", "k=0"], 0),
    ];
    for (args, m) in cases {
        let target = dir.path().join("g.txt");
        let mut argv = vec!["gen"];
        argv.extend(&args);
        argv.extend(["--out", s(&target)]);
        let r = run(&argv);
        assert_eq!(r.code, 0, "{}", r.stderr);
        assert!(r.stdout.ends_with(&format!("m: {m}\n")), "{}", r.stdout);
        let header = std::fs::read_to_string(&target).unwrap();
        assert!(header.starts_with(&format!("p {} {m}\n", args[1])));
    }
    let r = run(&["gen", "dense", "20", "--param", "p=0.5", "--seed", "1"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("p 20 "));
    assert_eq!(run(&["gen", "dense", "20", "--param", "p=1.5"]).code, 2);
    assert_eq!(run(&["gen", "clique", "0"]).code, 2);
    assert_eq!(run(&["gen", "chordal", "5", "--param", "k=5"]).code, 2);
}

#[test]
fn bench_csv_schema() {
    let dir = TempDir::new().unwrap();
    let csv_path = dir.path().join("bench.csv");
    let args = [
        "bench",
        "--classes",
        "clique,tree",
        "--sizes",
        "20,40",
        "--reps",
        "3",
        "--seed",
        "5",
        "--out",
    ];
    let mut argv = args.to_vec();
    argv.push(s(&csv_path));
    let r = run(&argv);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    // 2 classes x 2 sizes x 2 pipelines x 3 reps x 2 phases.
    assert_eq!(rows.len(), 48);
    for row in &rows {
        assert_eq!(row.len(), 8);
        assert!(["clique", "tree"].contains(&row[0]));
        let n: usize = row[1].parse().unwrap();
        let m: usize = row[2].parse().unwrap();
        assert!(["seq-partition", "parallel"].contains(&row[3]));
        let rep: u64 = row[4].parse().unwrap();
        assert_eq!(row[5].parse::<u64>().unwrap(), 5 + rep);
        assert!(["total", "algorithm"].contains(&row[6]));
        assert!(row[7].parse::<f64>().unwrap() >= 0.0);
        let expected_m = if row[0] == "clique" { n * (n - 1) / 2 } else { n - 1 };
        assert_eq!(m, expected_m);
    }
    let clique_rows = rows.iter().filter(|r| r[0] == "clique" && r[6] == "algorithm").count();
    assert_eq!(clique_rows, 2 * 2 * 3);

    let again = run(&["bench", "--classes", "chordal,sparse", "--sizes", "60", "--reps", "2"]);
    let first = run(&["bench", "--classes", "chordal,sparse", "--sizes", "60", "--reps", "2"]);
    let m_column = |csv: &str| {
        csv.lines()
            .map(|l| l.split(',').nth(2).unwrap().to_owned())
            .collect::<Vec<_>>()
    };
    assert_eq!(m_column(&again.stdout), m_column(&first.stdout));
}
