use std::ffi::{c_char, CStr, CString};
use std::ptr;

use d2c_ffi::*;

fn graph6(s: &str) -> *mut D2cGraph {
    let text = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { d2c_graph_from_graph6(text.as_ptr(), &mut g) }, D2cStatus::Ok);
    assert!(!g.is_null());
    g
}

fn take_string(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { d2c_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(d2c_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn graph_round_trip() {
    let g = graph6("Bg");
    unsafe {
        assert_eq!(d2c_graph_order(g), 3);
        assert_eq!(d2c_graph_size(g), 2);
        let mut s = ptr::null_mut();
        assert_eq!(d2c_graph_to_graph6(g, &mut s), D2cStatus::Ok);
        assert_eq!(take_string(s), "Bg");
        d2c_graph_free(g);
    }
}

#[test]
fn edges_and_edge_list() {
    unsafe {
        let edges = [0usize, 1, 1, 2];
        let mut g = ptr::null_mut();
        assert_eq!(d2c_graph_from_edges(3, edges.as_ptr(), 2, &mut g), D2cStatus::Ok);
        let text = CString::new("3 2\n0 1\n1 2\n").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(d2c_graph_from_edge_list(text.as_ptr(), &mut h), D2cStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        d2c_canonical_key(g, &mut a);
        d2c_canonical_key(h, &mut b);
        assert_eq!(take_string(a), take_string(b));

        let bad = [0usize, 3];
        let mut k = ptr::null_mut();
        assert_eq!(d2c_graph_from_edges(3, bad.as_ptr(), 1, &mut k), D2cStatus::InvalidInput);
        assert!(k.is_null());
        assert!(!last_error().is_empty());
        d2c_graph_free(g);
        d2c_graph_free(h);
    }
}

#[test]
fn parse_errors_set_message() {
    let text = CString::new("A").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { d2c_graph_from_graph6(text.as_ptr(), &mut g) }, D2cStatus::ParseError);
    assert!(g.is_null());
    assert!(!last_error().is_empty());
    let bytes = [0xffu8, 0];
    let status = unsafe { d2c_graph_from_graph6(bytes.as_ptr() as *const c_char, &mut g) };
    assert_eq!(status, D2cStatus::InvalidUtf8);
}

#[test]
fn null_pointers() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(d2c_graph_from_graph6(ptr::null(), &mut g), D2cStatus::NullPointer);
        let mut v = ptr::null_mut();
        assert_eq!(d2c_decide(ptr::null(), &mut v), D2cStatus::NullPointer);
        assert_eq!(d2c_graph_order(ptr::null()), 0);
        assert!(!d2c_verdict_is_yes(ptr::null()));
        d2c_graph_free(ptr::null_mut());
        d2c_verdict_free(ptr::null_mut());
        d2c_string_free(ptr::null_mut());
    }
}

#[test]
fn decide_yes() {
    let g = graph6("A_");
    unsafe {
        let mut v = ptr::null_mut();
        assert_eq!(d2c_decide(g, &mut v), D2cStatus::Ok);
        assert!(last_error().is_empty());
        assert!(d2c_verdict_is_yes(v));
        assert_eq!(d2c_verdict_reason(v), D2cReason::None);
        let mut buf = [0u8; 2];
        assert_eq!(d2c_verdict_witness(v, buf.as_mut_ptr(), 1), D2cStatus::BufferTooSmall);
        assert_eq!(d2c_verdict_witness(v, buf.as_mut_ptr(), 2), D2cStatus::Ok);
        assert_eq!(buf, [1, 2]);
        let mut ok = false;
        assert_eq!(d2c_verify_distinguishing(g, buf.as_ptr(), 2, &mut ok), D2cStatus::Ok);
        assert!(ok);
        let mut s = ptr::null_mut();
        d2c_verdict_to_string(v, &mut s);
        assert_eq!(take_string(s), "YES witness=[1,2]");
        d2c_verdict_free(v);
        d2c_graph_free(g);
    }
}

#[test]
fn decide_no() {
    let g = graph6("Bg");
    unsafe {
        let mut v = ptr::null_mut();
        assert_eq!(d2c_decide(g, &mut v), D2cStatus::Ok);
        assert!(!d2c_verdict_is_yes(v));
        assert_eq!(d2c_verdict_reason(v), D2cReason::ComponentNotDistinguishable);
        let mut buf = [0u8; 3];
        assert_eq!(d2c_verdict_witness(v, buf.as_mut_ptr(), 3), D2cStatus::InvalidInput);
        let mut s = ptr::null_mut();
        d2c_verdict_to_string(v, &mut s);
        assert_eq!(take_string(s), "NO ComponentNotDistinguishable nta=[2,1,0]");
        d2c_verdict_to_json(v, &mut s);
        let json = take_string(s);
        assert!(json.contains("\"verdict\":\"NO\""), "{json}");
        d2c_verdict_free(v);
        d2c_graph_free(g);

        let k3 = graph6("Bw");
        d2c_decide(k3, &mut v);
        assert_eq!(d2c_verdict_reason(v), D2cReason::NonBipartite);
        d2c_verdict_free(v);
        d2c_graph_free(k3);
    }
}

#[test]
fn automorphisms_and_isomorphism() {
    let p3 = graph6("Bg");
    unsafe {
        let mut perm = [0usize; 3];
        let mut found = false;
        assert_eq!(d2c_has_nta(p3, perm.as_mut_ptr(), 3, &mut found), D2cStatus::Ok);
        assert!(found);
        assert_eq!(perm, [2, 1, 0]);
        assert_eq!(d2c_has_nta(p3, perm.as_mut_ptr(), 2, &mut found), D2cStatus::BufferTooSmall);

        let colors = [1u8, 2, 2];
        assert_eq!(
            d2c_has_color_preserving_nta(p3, colors.as_ptr(), 3, perm.as_mut_ptr(), 3, &mut found),
            D2cStatus::Ok
        );
        assert!(!found);
        assert_eq!(
            d2c_has_color_preserving_nta(p3, colors.as_ptr(), 2, perm.as_mut_ptr(), 3, &mut found),
            D2cStatus::InvalidInput
        );

        let edges = [1usize, 0, 0, 2];
        let mut q = ptr::null_mut();
        d2c_graph_from_edges(3, edges.as_ptr(), 2, &mut q);
        assert_eq!(d2c_are_isomorphic(p3, q, perm.as_mut_ptr(), 3, &mut found), D2cStatus::Ok);
        assert!(found);
        assert_eq!(perm[1], 0);
        let k3 = graph6("Bw");
        assert_eq!(d2c_are_isomorphic(p3, k3, perm.as_mut_ptr(), 3, &mut found), D2cStatus::Ok);
        assert!(!found);
        d2c_graph_free(q);
        d2c_graph_free(k3);
        d2c_graph_free(p3);
    }
}

#[test]
fn oracle_refusal() {
    unsafe {
        let mut g = ptr::null_mut();
        d2c_graph_from_edges(10, ptr::null(), 0, &mut g);
        let mut out = true;
        assert_eq!(d2c_oracle_chi_d_le_2(g, 9, &mut out), D2cStatus::Refused);
        assert_eq!(d2c_oracle_chi_d_le_2(g, 10, &mut out), D2cStatus::Ok);
        assert!(!out);
        d2c_graph_free(g);
    }
}

#[test]
fn reductions() {
    let k2 = graph6("A_");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(d2c_ga_to_cc(k2, &mut s), D2cStatus::Ok);
        let mut text = ptr::null_mut();
        d2c_graph_to_graph6(s, &mut text);
        assert_eq!(take_string(text), "BW");
        d2c_graph_free(s);

        let c4 = graph6("Cr");
        let mut case = D2cCcToGaCase::K1OrK2;
        assert_eq!(d2c_cc_to_ga(c4, &mut s, &mut case), D2cStatus::Ok);
        assert_eq!(case, D2cCcToGaCase::Balanced);
        assert_eq!(d2c_graph_order(s), 7);
        d2c_graph_free(s);
        d2c_graph_free(c4);
        d2c_graph_free(k2);
    }
}
