use g2_core::cli::run;

fn ok(args: &[&str]) -> String {
    let (code, out) = run(args.iter().copied());
    assert_eq!(code, 0, "{args:?}: {out}");
    out
}

#[test]
fn bracket_and_rank() {
    assert_eq!(ok(&["bracket", "X[0,1]", "X[1,0]"]), "X[1,1]\n");
    assert_eq!(ok(&["bracket", "X[1,0]", "X[-1,0]"]), "H[1,0]\n");
    assert_eq!(ok(&["ad-rank", "X[1,0]+X[0,1]"]), "12\n");
    assert_eq!(ok(&["ad-rank", "-X[0,1]"]), "6\n");
}

#[test]
fn classification_verbs() {
    assert_eq!(ok(&["classify-nilpotent", "X[1,0]+X[3,2]"]), "A1_4\n");
    assert!(ok(&["match-schema", "X[0,1]+X[3,1]; X[2,1]"]).starts_with("row=16 "));
    assert_eq!(ok(&["normalizer", "X[1,0]+X[0,1]"]), "7/3*H[9,5]; X[1,0]+X[0,1]; X[3,2]\n");
    assert_eq!(ok(&["centralizer", "H[1,0]; H[0,1]"]), "H[1,0]; H[0,1]\n");
}

#[test]
fn counts_and_indices() {
    assert_eq!(ok(&["counts"]), "regular=64 semisimple_nonregular=2 solvable_nonregular=49\n");
    assert_eq!(
        ok(&["dynkin-index", "--triple", "2*H[3,1]; s2*X[0,-1]+s2*X[3,2]; s2*X[-3,-2]+s2*X[0,1]"]),
        "4\n"
    );
    let (code, _) = run(["dynkin-index", "--triple", "H[1,0]; X[1,0]; X[0,-1]"]);
    assert_eq!(code, 1);
}

#[test]
fn exp_ad_witness() {
    assert_eq!(ok(&["exp-ad", "-2/3", "X[1,0]", "X[3,1]"]), "X[3,1]\n");
}

#[test]
fn enumerate_outputs() {
    let t = ok(&["enumerate", "regular-types"]);
    assert!(t.ends_with("total=64\n"));
    let j = ok(&["--json", "enumerate", "regular-types"]);
    let v: serde_json::Value = serde_json::from_str(&j).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 64);
    let c = ok(&["enumerate", "closed-subsets"]);
    assert!(c.lines().last().unwrap().starts_with("total="));
}

#[test]
fn verify_targets() {
    let out = ok(&["verify", "T20"]);
    assert!(out.contains("T20:A1_28 ad_rank PASS | rank=12"));
    assert!(out.ends_with("summary: pass=8 fail=0 skipped=0\n"));
    let j = ok(&["verify", "T2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&j).unwrap();
    assert_eq!(v["fail"], 0);
    ok(&["verify", "prop2", "--subalgebra", "A1"]);
    ok(&["verify", "t3", "--lambda", "3", "--lambda", "-1/4"]);
    let f = ok(&["verify", "fuzz", "--seed", "9", "--count", "5"]);
    assert_eq!(f.lines().count(), 6);
}

#[test]
fn verify_all_is_the_gate_and_deterministic() {
    let a = ok(&["verify", "all"]);
    assert_eq!(a, ok(&["verify", "all"]));
    assert!(a.contains("fail=0"));
}

#[test]
fn errors_exit_two() {
    let (code, out) = run(["bracket", "X[1,2]", "X[0,1]"]);
    assert_eq!(code, 2);
    assert!(out.contains("position"), "{out}");
    let (code, _) = run(["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _) = run(["counts", "--bogus"]);
    assert_eq!(code, 2);
    let (code, _) = run(["verify", "T99"]);
    assert_eq!(code, 2);
    let (code, _) = run(["classify-nilpotent", "H[1,0]"]);
    assert_eq!(code, 2);
}
