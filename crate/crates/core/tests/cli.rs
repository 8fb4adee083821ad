use std::path::PathBuf;

use cmramsey::cli::run;

fn fixture(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cmramsey-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cmramsey").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

const STAR: &str = "p cm 4 1\ne 0 1\ne 0 2\ne 0 3\n";
const K3: &str = "p cm 3 1\ne 0 1\ne 0 2\ne 1 2\n";

#[test]
fn decompose_star() {
    let f = fixture("star4.g", STAR);
    let (code, out, _) = invoke(&["decompose", "--n", "4", "--input", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# cmramsey decompose seed=0\n"));
    assert!(out.contains("S={0} Q={1} I={2,3}\n"));
    assert!(out.contains("|S|=1 |Q|=1 |I|=2\n"));
    assert!(out.contains("conditions 1-4: PASS\n"));
}

#[test]
fn loss_check_triangle() {
    let f = fixture("k3.g", K3);
    let (code, out, _) = invoke(&["loss-check", "--n", "4", "--input", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("f(G) = 3/2\n"));
    assert!(out.contains("Σf(v) = 3/2\n"));
    assert!(out.contains("vertex-loss inequality: HOLDS (equality)\n"));
}

#[test]
fn ramsey_scan() {
    let (code, out, _) = invoke(&["ramsey", "--k", "2", "--n", "4", "--max", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("R_cm(2,4) = 5\n"));
    assert!(out.contains("avoider on K_4:\np cm 4 2\n"));
    let (code, out, _) = invoke(&["ramsey", "--k", "2", "--n", "4", "--max", "3"]);
    assert_eq!(code, 3);
    assert!(out.contains("R_cm(2,4) > 3"));
}

#[test]
fn exit_codes() {
    let (code, _, err) = invoke(&["decompose", "--n", "3", "--input", "x"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
    assert_eq!(invoke(&["search", "--bogus"]).0, 1);
    assert_eq!(
        invoke(&["decompose", "--n", "4", "--input", "/nonexistent/file"]).0,
        1
    );
    assert_eq!(invoke(&["--help"]).0, 0);

    let path = fixture("p4.g", "p cm 4 1\ne 0 1\ne 1 2\ne 2 3\n");
    assert_eq!(
        invoke(&["decompose", "--n", "4", "--input", path.to_str().unwrap()]).0,
        2
    );
    assert_eq!(
        invoke(&["loss-check", "--n", "4", "--input", path.to_str().unwrap()]).0,
        2
    );

    assert_eq!(
        invoke(&[
            "search",
            "--n-vertices",
            "5",
            "--k",
            "2",
            "--n",
            "4",
            "--exhaustive"
        ])
        .0,
        2
    );
    let (code, out, _) = invoke(&[
        "search",
        "--n-vertices",
        "9",
        "--k",
        "3",
        "--n",
        "6",
        "--budget",
        "50",
    ]);
    assert_eq!(code, 3);
    assert!(out.contains("budget exhausted"));
    assert_eq!(
        invoke(&["search", "--n-vertices", "9", "--k", "4", "--n", "4"]).0,
        0
    );
}

#[test]
fn construct_outputs_parse_back() {
    let (code, out, _) = invoke(&["construct", "affine", "--q", "3"]);
    assert_eq!(code, 0);
    let body: String = out.lines().skip(1).map(|l| format!("{l}\n")).collect();
    let (g, c) = cmramsey::format::parse_graph(&body).unwrap();
    assert_eq!(g.vertex_count(), 9);
    assert_eq!(c.unwrap().color_count(), 4);

    let (code, out, _) = invoke(&[
        "construct",
        "cliques",
        "--vertices",
        "6",
        "--k",
        "2",
        "--max-clique",
        "3",
        "--dot",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("graph G {"));
    assert_eq!(invoke(&["construct", "affine", "--q", "4"]).0, 1);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let f = fixture("star4b.g", STAR);
    let path = f.to_str().unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "construct",
            "random",
            "--vertices",
            "8",
            "--k",
            "3",
            "--seed",
            "9",
        ],
        vec![
            "construct",
            "cliques",
            "--vertices",
            "10",
            "--k",
            "3",
            "--max-clique",
            "3",
            "--seed",
            "4",
        ],
        vec![
            "search",
            "--n-vertices",
            "5",
            "--k",
            "3",
            "--n",
            "4",
            "--shuffle",
            "--seed",
            "2",
        ],
        vec!["decompose", "--n", "4", "--input", path, "--dot"],
        vec!["loss-check", "--n", "4", "--input", path, "--ledger"],
        vec!["classify", "--n", "4", "--input", path],
        vec!["bounds-check", "--n", "4", "--input", path],
        vec!["ramsey", "--k", "2", "--n", "4", "--max", "6"],
    ];
    for args in commands {
        let first = invoke(&args);
        assert_eq!(first.0, 0, "{args:?}: {}", first.2);
        assert_eq!(first, invoke(&args), "{args:?}");
    }
    let a = invoke(&[
        "construct",
        "random",
        "--vertices",
        "8",
        "--k",
        "3",
        "--seed",
        "9",
    ])
    .1;
    let b = invoke(&[
        "construct",
        "random",
        "--vertices",
        "8",
        "--k",
        "3",
        "--seed",
        "10",
    ])
    .1;
    assert!(a.starts_with("# cmramsey construct seed=9\n"));
    assert_ne!(a, b);
}

#[test]
fn audit_reports_first_failure() {
    let (_, body, _) = invoke(&["construct", "affine", "--q", "3"]);
    let f = fixture("affine3.g", &body);
    let (code, out, _) = invoke(&[
        "audit",
        "--n",
        "4",
        "--k",
        "4",
        "--epsilon",
        "1/2",
        "--delta",
        "1/500",
        "--input",
        f.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("first failing step: v(G) > (k-1/2+epsilon)n\n"));
    assert!(out.contains("degree threshold (k-1/2)n = 14/1\n"));
}
