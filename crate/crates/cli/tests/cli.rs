use numsgp_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["numsgp"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

#[test]
fn variety_golden() {
    assert_eq!(
        ok(&["variety", "2,5", "3,5,7"]),
        "<1>\n<2,3>\n<2,5>\n<3,4,5>\n<3,5,7>\n<4,5,6,7>\n<5,6,7,8,9>\n"
    );
}

#[test]
fn upper_sets_golden() {
    assert_eq!(
        ok(&["upper-sets", "4,5,11", "--modulus", "5"]),
        "{6}\n{7}\n{3,7}\n{6,7}\n{3,6,7}\n"
    );
}

#[test]
fn tree_dot_golden() {
    let dot = ok(&["tree", "--frobenius-bound", "5", "--depth", "2", "--format", "dot"]);
    assert!(dot.starts_with("digraph variety_tree {\n"));
    let nodes = dot.lines().filter(|l| l.ends_with("\";") && !l.contains("->")).count();
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    assert_eq!((nodes, edges), (11, 10));
    assert!(dot.contains("    \"<2,3>\" -> \"<3,4>\";\n"));
}

#[test]
fn tree_json_adjacency() {
    let text = ok(&["tree", "--frobenius-bound", "5", "--depth", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 11);
    assert_eq!(v["edges"].as_array().unwrap().len(), 10);
    assert_eq!(v["nodes"][0]["generators"], serde_json::json!([1]));
}

#[test]
fn single_semigroup_commands() {
    assert_eq!(
        ok(&["info", "5,7,9"]),
        "<5,7,9>\nfrobenius: 13\nmultiplicity: 5\ngenus: 8\nembedding dimension: 3\ndepth: 3\ngaps: 1,2,3,4,6,8,11,13\n"
    );
    assert_eq!(
        ok(&["info", "4,5,11", "--format", "json"]),
        "{\"generators\":[4,5,11],\"gaps\":[1,2,3,6,7],\"frobenius\":7,\"genus\":5,\"multiplicity\":4,\"depth\":2}\n"
    );
    assert_eq!(ok(&["info", "1"]).lines().nth(1), Some("frobenius: -1"));
    assert_eq!(ok(&["quotient", "3,5,7", "2"]), "<3,4,5>\n");
    assert_eq!(ok(&["intersect", "2,5", "3,5,7"]), "<5,6,7,8,9>\n");
    assert_eq!(ok(&["fundamental-gaps", "5,7,9"]), "6,8,11,13\n");
    assert_eq!(ok(&["fundamental-gaps", "5,7,9", "--format", "json"]), "[6,8,11,13]\n");
    assert_eq!(ok(&["pm", "3", "7", "1"]), "<3,5,7>\n");
    assert_eq!(ok(&["extensions", "2,5"]), "<1>\n<2,3>\n<2,5>\n");
    assert_eq!(ok(&["is-extension", "2,5", "2,3"]), "true\n");
    assert_eq!(ok(&["is-extension", "3,5,7", "2,5"]), "false\n");
    assert_eq!(ok(&["hull", "5,7,9", "--elements", "6"]), "<5,6,7,8,9>\n");
    assert_eq!(ok(&["hull", "5,7,9"]), "<5,7,9>\n");
}

#[test]
fn doubles_commands() {
    assert_eq!(ok(&["double", "4,5,11", "--modulus", "5", "--set", "3,6,7"]), "S(5; 3,6,7) = <5,8,11,17> F=14\n");
    let json = ok(&["double", "4,5,11", "--modulus", "9", "--set", "6,7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["m"], 9);
    assert_eq!(v["H"], serde_json::json!([6, 7]));
    assert_eq!(v["semigroup"]["frobenius"], 15);
    let all = ok(&["doubles", "4,5,11", "--frobenius-bound", "15"]);
    assert_eq!(all.lines().count(), 18);
    assert!(all.contains("S(9; 6,7) = <8,9,10,21,22,23> F=15\n"));
    assert_eq!(ok(&["doubles", "4,5,11", "--frobenius-bound", "13"]), "");
    assert_eq!(
        ok(&["doubles", "1", "--frobenius-bound", "5"]),
        "S(3;) = <2,3> F=1\nS(5;) = <2,5> F=3\nS(7;) = <2,7> F=5\n"
    );
}

#[test]
fn enumerate_all_and_oracle_check() {
    assert_eq!(ok(&["enumerate-all", "--frobenius-bound", "1"]), "<1>\n<2,3>\n");
    assert_eq!(
        ok(&["enumerate-all", "--frobenius-bound", "5", "--depth", "2"]).lines().count(),
        11
    );
    let report = ok(&["oracle-check", "--frobenius-bound", "12"]);
    assert!(report.ends_with("all checks passed (frobenius bound 12)\n"));
}

#[test]
fn domain_errors_exit_one() {
    let (code, out, err) = call(&["info", "4,6"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(out.is_empty());
    assert!(err.contains("GcdNotOne"));
    let (code, _, err) = call(&["upper-sets", "4,5,11", "--modulus", "4"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("BadM"));
    let (code, _, err) = call(&["double", "4,5,11", "--modulus", "5", "--set", "3"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("InvalidCertificate"));
    let (code, _, err) = call(&["quotient", "2,5", "0"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("NonPositiveDivisor"));
    let (code, _, err) = call(&["enumerate-all", "--frobenius-bound", "21"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("BoundTooLarge"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["info", "4,x"],
        &["info"],
        &["upper-sets", "4,5,11"],
        &["tree", "--frobenius-bound", "five"],
        &["info", "2,3", "--format", "dot"],
        &["info", "2,3", "--format", "yaml"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
    let (_, _, err) = call(&["tree", "--frobenius-bound", "five"]);
    assert!(err.contains("--frobenius-bound"));
}

#[test]
fn output_is_deterministic_and_file_identical() {
    let args = ["tree", "--frobenius-bound", "9", "--format", "json"];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tree.json");
    let path_str = path.to_str().unwrap();
    let mut with_output = args.to_vec();
    with_output.extend_from_slice(&["--output", path_str]);
    assert_eq!(ok(&with_output), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
}
