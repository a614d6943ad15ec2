use std::path::Path;
use std::process::Command;

const HEADER: &str = include_str!("../include/d2c.h");

#[test]
fn header_declares_the_api() {
    for name in [
        "D2C_H",
        "typedef struct D2cGraph D2cGraph;",
        "typedef struct D2cVerdict D2cVerdict;",
        "D2C_STATUS_OK = 0",
        "D2C_STATUS_PANIC = 8",
        "D2C_REASON_ISOMORPHIC_PAIR_NOT_ASYMMETRIC = 4",
        "D2C_CC_TO_GA_CASE_BALANCED = 3",
        "d2c_graph_from_graph6",
        "d2c_graph_from_edge_list",
        "d2c_graph_from_edges",
        "d2c_graph_free",
        "d2c_string_free",
        "d2c_last_error_message",
        "d2c_decide",
        "d2c_verdict_witness",
        "d2c_verdict_to_json",
        "d2c_has_nta",
        "d2c_has_color_preserving_nta",
        "d2c_are_isomorphic",
        "d2c_canonical_key",
        "d2c_verify_distinguishing",
        "d2c_oracle_chi_d_le_2",
        "d2c_ga_to_cc",
        "d2c_cc_to_ga",
    ] {
        assert!(HEADER.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let Ok(out) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(dir.join("tests/smoke.c"))
        .output()
    else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
