use std::process::{Command, Output};

use ckh2_cli::report::{self, AnalyzeOptions};
use ckh2_core::{GlyphStyle, OmegaSequence};

fn ckh2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ckh2")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_examples() {
    let o = ckh2(&["analyze", "0,0,1", "--group-filter"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("name          iiso(2) (2+1 Galilei)"));
    assert!(text.contains("classes       alpha^L_01, alpha^F_23, beta_13"));
    assert!(text.contains("heuristic group-level count 2"));

    let so5 = report::from_json(&stdout(&ckh2(&["analyze", "1,1,1,1", "--json"]))).unwrap();
    assert_eq!((so5.dims.h2, so5.name.as_deref()), (0, Some("so(5)")));
    let gal = report::from_json(&stdout(&ckh2(&["analyze", "0,0", "--json"]))).unwrap();
    assert_eq!(gal.dims.h2, 2);
}

#[test]
fn negative_entries_are_values_not_flags() {
    let o = ckh2(&["analyze", "-1,0,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("expanding Newton-Hooke"));
}

#[test]
fn json_round_trip() {
    for text in ["0,0,1", "2/3,0,-5,0", "1,1"] {
        let seq: OmegaSequence = text.parse().unwrap();
        let r = report::analyze(&seq, AnalyzeOptions { brackets: true, symbolic: true, style: GlyphStyle::Unicode })
            .unwrap();
        assert_eq!(report::from_json(&report::to_json(&r)).unwrap(), r);
    }
    let r = report::analyze(&"0,3/2,0".parse().unwrap(), AnalyzeOptions::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report::to_json(&r)).unwrap();
    assert_eq!(v["omega"][1], "3/2");
    assert!(v.get("brackets").is_none());
    for key in ["n", "name", "dims", "agree", "generators", "group_generators"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn bracket_listing_for_n2() {
    let o = ckh2(&["analyze", "0,0", "--brackets", "--symbolic"]);
    let text = stdout(&o);
    assert!(text.contains("[Omega_01, Omega_02] = omega_1 Omega_12 + alpha^F_12 Xi"));
    assert!(text.contains("[Omega_01, Omega_12] = -Omega_02"));
    assert!(text.contains("[Omega_02, Omega_12] = omega_2 Omega_01 + alpha^L_01 Xi"));
}

#[test]
fn exit_codes() {
    assert_eq!(ckh2(&["analyze", "1,x"]).status.code(), Some(2));
    assert_eq!(ckh2(&["analyze", "1"]).status.code(), Some(2));
    assert_eq!(ckh2(&["bogus"]).status.code(), Some(2));
    assert_eq!(ckh2(&["sweep", "1"]).status.code(), Some(2));
    assert_eq!(ckh2(&["table", "--n", "7"]).status.code(), Some(2));
    assert_eq!(ckh2(&["diagram", "1,1,1,1,1,1,1,1,1,1"]).status.code(), Some(2));
    assert_eq!(ckh2(&["sweep", "3"]).status.code(), Some(0));
}

#[test]
fn sweep_ceiling_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_ckh2"))
        .args(["sweep", "3", "--no-oracle"])
        .env("CK_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_ckh2"))
        .args(["sweep", "3", "--no-oracle"])
        .env("CK_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0/0 oracle checks agree"));
}

#[test]
fn parallel_sweep_matches_serial() {
    assert_eq!(stdout(&ckh2(&["sweep", "4", "--json", "--parallel"])), stdout(&ckh2(&["sweep", "4", "--json"])));
}

#[test]
fn table_and_diagram() {
    let t = stdout(&ckh2(&["table"]));
    assert!(t.contains(
        "(0,0,0,0) [alpha^L_01,alpha^F_12,alpha^L_12,alpha^F_23,alpha^L_23,alpha^F_34;beta_13,beta_14,beta_24]"
    ));
    assert!(t.lines().filter(|l| l.ends_with("6+3")).count() == 1);
    let d = stdout(&ckh2(&["diagram", "1,1,1"]));
    assert!(!d.contains("nontrivial") && !d.contains('|'));
    let u = stdout(&ckh2(&["--unicode", "diagram", "0,0,1"]));
    assert!(u.contains("β₁₃: Ω₀₁ ~ Ω₂₃"));
}
