use std::process::{Command, Output};

use parhom::report::{parse_json, render_json, TSV_HEADER};

fn parhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parhom"))
        .args(args)
        .env_remove("PARHOM_WEYL_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn analyze_grassmannian_with_chains() {
    let o = parhom(&["analyze", "--type", "A3", "--p", "2", "--q", "1", "--chain-length", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let r = parse_json(text.trim_end()).unwrap();
    assert_eq!(r.cycle.dim, 2);
    assert_eq!(r.reduction.reduced_marking.to_vec(), vec![1]);
    assert!(r.connectivity.connected);
    assert_eq!(r.connectivity.minimal_n, Some(2));
    assert_eq!(render_json(&r), text.trim_end());
}

#[test]
fn analyze_text_output() {
    let o = parhom(&["analyze", "--type", "A3", "--p", "2", "--q", "1", "--chain-length"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("Q-cycle: A2 marked at {1}, dim 2"));
    assert!(text.contains("minimal chain length N = 2"));
    assert!(text.contains("warning: linearity of cycles not computed"));
}

#[test]
fn analyze_g2_exception() {
    let o = parhom(&["analyze", "--type", "G2", "--p", "2", "--q", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = parse_json(stdout(&o).trim_end()).unwrap();
    assert!(r.flags.mok_zhang_exception);
    assert!(!r.connectivity.computed);
}

#[test]
fn input_errors_exit_2() {
    let o = parhom(&["analyze", "--type", "A3", "--p", "2", "--q", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("node 9 out of range"));

    let o = parhom(&["analyze", "--type", "H3", "--p", "1", "--q", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("H3"));

    let o = parhom(&["analyze", "--type", "A3", "--p", "3,1", "--q", ""]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("\"1\""));

    let o = parhom(&["analyze", "--type", "A3", "--p", "2"]);
    assert_eq!(o.status.code(), Some(2));

    let o = parhom(&["enumerate", "--type", "A3", "--format", "xml"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn guard_breach_exit_3() {
    let o = parhom(&["analyze", "--type", "E7", "--p", "1", "--q", "2", "--chain-length"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("2903040"));

    let o = parhom(&["analyze", "--type", "A3", "--p", "2", "--q", "1", "--chain-length", "--weyl-limit", "10"]);
    assert_eq!(o.status.code(), Some(3));

    let o = Command::new(env!("CARGO_BIN_EXE_parhom"))
        .args(["analyze", "--type", "A3", "--p", "2", "--q", "1", "--chain-length"])
        .env("PARHOM_WEYL_LIMIT", "23")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));

    // without chains the group is never enumerated
    let o = parhom(&["analyze", "--type", "E8", "--p", "1", "--q", "8"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn enumerate_tsv() {
    let o = parhom(&["enumerate", "--type", "A2", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], TSV_HEADER);
    assert_eq!(lines.len() - 1, 12);
    assert_eq!(lines[1], "A2\t1\t-\t2\t2\t-\ttrue\t-\t-");
}

#[test]
fn enumerate_nontrivial_only() {
    let o = parhom(&["enumerate", "--type", "B2", "--nontrivial-only", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<_> = stdout(&o).lines().map(|l| parse_json(l).unwrap()).collect();
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert!(!r.input.psi_q.is_empty());
        assert!(!r.input.psi_p.is_subset(&r.input.psi_q));
    }
}

#[test]
fn enumerate_with_chains_rows_match_criterion() {
    let o = parhom(&["enumerate", "--type", "B3", "--with-chains"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines().skip(1) {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 9);
        let p: Vec<&str> = cols[1].split(',').collect();
        let q: Vec<&str> = cols[2].split(',').collect();
        let disjoint = !p.iter().any(|x| q.contains(x));
        assert_eq!(cols[6] == "true", disjoint, "{line}");
        assert_eq!(cols[7] != "-", disjoint, "{line}");
    }
}
