//! End-to-end tests of the `densitylab` binary: construct/count round trips,
//! curve CSV contract, graphon ops, verify suites, and the exit-code
//! contract.

use std::path::Path;
use std::process::{Command, Output};

use densitylab::counting::{count_left_stars, count_monotone_path3, count_stars};
use densitylab::graph_core::{parse_colored, parse_graph, OrderedGraph};


fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_densitylab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn construct_writes_the_star_file() {
    let out = run(&["construct", "--family", "sl", "--n", "5", "--m", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5 4\n1 2\n1 3\n1 4\n1 5\n");
}

#[test]
fn construct_count_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(Vec<&str>, bool)> = vec![
        (vec!["--family", "sl", "--n", "8", "--m", "11"], false),
        (vec!["--family", "sr", "--n", "8", "--m", "11"], false),
        (vec!["--family", "spider", "--n", "40", "--x", "0.5"], false),
        (vec!["--family", "banded", "--n", "40", "--x", "0.5"], false),
        (vec!["--family", "clique", "--n", "30", "--gamma", "0.5"], false),
        (vec!["--family", "coclique", "--n", "30", "--gamma", "0.5"], false),
        (vec!["--family", "color1", "--n", "24", "--xb", "0.25", "--xg", "0.25"], true),
        (vec!["--family", "color2", "--n", "24", "--xb", "0.4", "--xg", "0.4"], true),
        (vec!["--family", "kst", "--s", "2", "--t", "3"], true),
    ];
    for (i, (args, colored)) in cases.iter().enumerate() {
        let path = dir.path().join(format!("g{i}.txt"));
        let mut full = vec!["construct"];
        full.extend(args.iter().copied());
        full.push("--out");
        full.push(path.to_str().unwrap());
        let out = run(&full);
        assert!(out.status.success(), "construct failed: {args:?}");
        let text = std::fs::read_to_string(&path).unwrap();
        if *colored {
            let host = parse_colored(&text).unwrap();
            let counted = run(&[
                "count",
                "--in",
                path.to_str().unwrap(),
                "--kind",
                "kst",
                "--s",
                "2",
                "--t",
                "2",
            ]);
            assert!(counted.status.success());
            let pattern = densitylab::constructions::build_kst_pattern(2, 2).unwrap();
            let expected = densitylab::counting::count_colored_copies(&host, &pattern);
            assert!(
                stdout(&counted).contains(&format!("count = {expected}")),
                "kst count mismatch for {args:?}"
            );
        } else {
            let g: OrderedGraph = parse_graph(&text).unwrap().into();
            let counted = run(&[
                "count",
                "--in",
                path.to_str().unwrap(),
                "--kind",
                "left-star",
                "--k",
                "2",
            ]);
            assert!(counted.status.success());
            let expected = count_left_stars(&g, 2);
            assert!(
                stdout(&counted).contains(&format!("count = {expected}")),
                "left-star count mismatch for {args:?}: {}",
                stdout(&counted)
            );
        }
    }
}

#[test]
fn count_star_and_path3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let out = run(&[
        "construct",
        "--family",
        "banded",
        "--n",
        "60",
        "--x",
        "0.6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let g: OrderedGraph = parse_graph(&std::fs::read_to_string(&path).unwrap())
        .unwrap()
        .into();

    let star = run(&["count", "--in", path.to_str().unwrap(), "--kind", "star", "--k", "3"]);
    assert!(star.status.success());
    assert!(stdout(&star).contains(&format!("count = {}", count_stars(&g, 3))));

    let path3 = run(&["count", "--in", path.to_str().unwrap(), "--kind", "path3"]);
    assert!(path3.status.success());
    assert!(stdout(&path3).contains(&format!("count = {}", count_monotone_path3(&g))));
}

#[test]
fn count_induced_via_pattern_file() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("host.txt");
    let pattern = dir.path().join("k3.txt");
    std::fs::write(&host, "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    std::fs::write(&pattern, "3 3\n1 2\n1 3\n2 3\n").unwrap();
    let out = run(&[
        "count",
        "--in",
        host.to_str().unwrap(),
        "--kind",
        "induced",
        "--pattern",
        pattern.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("count = 4"));
}

#[test]
fn curve_contract() {
    let out = run(&["curve", "--formula", "ordered-pair", "--grid", "101"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "x,spider,banded,max");
    let mut prev_x = -1.0f64;
    let mut rows = 0;
    for line in lines {
        if line.starts_with('#') {
            // crossing annotation carries the bisection root
            assert!(line.contains("0.62545"), "annotation: {line}");
            continue;
        }
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cells.len(), 4);
        assert!(cells[0] > prev_x);
        assert!(cells.iter().all(|v| v.is_finite()));
        prev_x = cells[0];
        rows += 1;
    }
    assert_eq!(rows, 101);

    // grid endpoints cover [0, 1]
    let first = text.lines().nth(1).unwrap();
    assert!(first.starts_with("0,"));
    assert!(text.lines().any(|l| l.starts_with("1,")));

    let star = run(&["curve", "--formula", "star", "--k", "2", "--grid", "11"]);
    assert!(star.status.success());
    assert!(stdout(&star).starts_with("x,value\n"));

    let colored = run(&["curve", "--formula", "colored", "--s", "2", "--t", "2", "--grid", "5"]);
    assert!(colored.status.success());
    // the optimum 3/8 sits at x = 1/2, i.e. x_b = x_g = 1/4
    assert!(stdout(&colored).contains("0.5,0.375"));
    // unbalanced parts have no complete answer along this sweep
    let unbalanced = run(&["curve", "--formula", "colored", "--s", "2", "--t", "3", "--grid", "5"]);
    assert_eq!(unbalanced.status.code(), Some(2));
}

#[test]
fn graphon_ops() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.graphon");
    std::fs::write(
        &path,
        "alpha 0.4 0.4 0.2\nbeta 0 0 1 0 1 1 1 1 0\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();

    let density = run(&["graphon", "--in", p, "--op", "density"]);
    assert!(density.status.success());
    assert!(stdout(&density).contains("density = 0.48"));

    let degrees = run(&["graphon", "--in", p, "--op", "degrees"]);
    assert!(stdout(&degrees).contains("d[1] = 0.2"));
    assert!(stdout(&degrees).contains("d[3] = 0.8"));

    let t = run(&["graphon", "--in", p, "--op", "T"]);
    assert!(stdout(&t).contains("T = 0.288"));

    let star = run(&["graphon", "--in", p, "--op", "star", "2"]);
    assert!(stdout(&star).contains("star[2] = 0.288"));

    let perturb = run(&["graphon", "--in", p, "--op", "perturb", "3", "2", "3"]);
    assert!(perturb.status.success());
    let text = stdout(&perturb);
    assert!(text.contains("epsilon = 1.25"), "{text}");
    assert!(text.contains("alpha"));
    // moved graphon round-trips through the parser
    let graphon_part: String = text
        .lines()
        .filter(|l| l.starts_with("alpha") || l.starts_with("beta"))
        .map(|l| format!("{l}\n"))
        .collect();
    let moved = densitylab::graphon::parse_graphon(&graphon_part).unwrap();
    assert!((moved.edge_density() - 0.48).abs() < 1e-12);

    let good = run(&["graphon", "--in", p, "--op", "good", "power", "2", "0.01"]);
    assert!(stdout(&good).contains("delta_good = true"));

    let inapplicable = run(&["graphon", "--in", p, "--op", "perturb", "2", "2", "3"]);
    assert!(!inapplicable.status.success());

    for op in ["sort", "complement"] {
        let out = run(&["graphon", "--in", p, "--op", op]);
        assert!(out.status.success());
        densitylab::graphon::parse_graphon(&stdout(&out)).unwrap();
    }
    let corner = run(&["graphon", "--in", p, "--op", "corner0", "0.3"]);
    let w = densitylab::graphon::parse_graphon(&stdout(&corner)).unwrap();
    assert_eq!(w.parts(), 4);
    assert!((w.edge_density() - 0.49 * 0.48).abs() < 1e-12);
}

#[test]
fn verify_ord_suite_passes() {
    let out = run(&["verify", "--suite", "ord", "--n", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS ord n=6 m=1 k=1"));
    assert!(text.contains("PASS ord n=6 m=15 k=3"));
    assert!(text.contains("summary: ord all-pass"));
    assert!(!text.contains("FAIL "));
    // machine-readable block
    assert!(text.contains("suite,case,status,detail"));
}

#[test]
fn verify_rw_and_product_scaled_down() {
    let out = run(&["verify", "--suite", "rw", "--trials", "200", "--k", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("summary: rw all-pass"));

    let out = run(&["verify", "--suite", "product", "--trials", "50", "--n", "10"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("summary: product all-pass"));
}

#[test]
fn verify_colored_suite() {
    let out = run(&["verify", "--suite", "colored", "--n", "400"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("case1 n=400"));
    assert!(text.contains("summary: colored all-pass"));
}

#[test]
fn exit_codes() {
    // invalid input file
    let out = run(&["count", "--in", "/nonexistent/file", "--kind", "star", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // domain violation
    let out = run(&["construct", "--family", "spider", "--n", "10", "--x", "1.5"]);
    assert_eq!(out.status.code(), Some(2));

    // malformed graph file
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 2\n2 1\n1 3\n").unwrap();
    let out = run(&["count", "--in", path.to_str().unwrap(), "--kind", "star", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.csv");
    let to_file = run(&[
        "curve",
        "--formula",
        "spider",
        "--grid",
        "11",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(to_file.status.success());
    let on_stdout = run(&["curve", "--formula", "spider", "--grid", "11"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&on_stdout));
}

#[test]
fn verify_reports_are_deterministic() {
    let a = run(&["verify", "--suite", "rw", "--trials", "100", "--seed", "7"]);
    let b = run(&["verify", "--suite", "rw", "--trials", "100", "--seed", "7"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn threads_flag_keeps_reports_identical() {
    let single = run(&["verify", "--suite", "ord", "--n", "5", "--threads", "1"]);
    let many = run(&["verify", "--suite", "ord", "--n", "5", "--threads", "4"]);
    assert_eq!(stdout(&single), stdout(&many));
}

#[test]
fn graphon_file_rejects_bad_masses() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.graphon");
    std::fs::write(&path, "alpha 0.5 0.6\nbeta 0 0 0 0\n").unwrap();
    let out = run(&["graphon", "--in", path.to_str().unwrap(), "--op", "density"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_lists_subcommands() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for sub in ["count", "construct", "curve", "graphon", "verify"] {
        assert!(text.contains(sub), "missing {sub}");
    }
    assert!(Path::new(env!("CARGO_BIN_EXE_densitylab")).exists());
}
