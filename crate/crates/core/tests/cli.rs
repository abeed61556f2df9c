use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcd-cyclic")).args(args).output().unwrap()
}

#[test]
fn same_output_on_any_thread_count() {
    for args in [
        &["proj", "5", "3", "4", "--reversible"][..],
        &["analyze", "31", "2", "x^11+x^10+x^9+x^7+x^6+x^5+x^4+x^2+x+1", "--modulus", "2", "5", "1,0,1,0,0,1"],
        &["mindist", "63", "2", "x^13+x^9+x^7+x^6+x^4+1"],
    ] {
        let outs: Vec<_> = ["1", "2", "8"]
            .iter()
            .map(|t| run(&[args, &["--threads", t]].concat()).stdout)
            .collect();
        assert!(!outs[0].is_empty());
        assert!(outs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["anti", "2", "3", "4"]).status.code(), Some(0));
    // prediction mismatch
    assert_eq!(run(&["anti", "2", "3", "5"]).status.code(), Some(1));
    assert_eq!(run(&["audit", "anti", "2", "3"]).status.code(), Some(1));
    assert_eq!(run(&["audit", "anti", "2", "5"]).status.code(), Some(0));
    assert_eq!(run(&["bch", "3", "15", "3", "1"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "7", "2", "x^2+1"]).status.code(), Some(2));
    assert_eq!(run(&["field", "2", "3", "--modulus", "2", "3", "1,0,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn csv_and_json_shapes() {
    let out = run(&["reversible", "list", "7", "2", "--output", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "label,n,q,k,d_lower,d_exact,lcd,reversible,verdict");
    assert_eq!(lines.len(), 4);
    assert!(lines[1..].iter().all(|l| l.contains(",true,true,")));

    let out = run(&["reversible", "count", "26", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], "63");

    let out = run(&["bch", "2", "15", "5", "-2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["label"], "C(2,15,5,-2)");
}
