//! C ABI over the `d2c` library.
//!
//! Graphs and verdicts are opaque heap handles released with their `_free`
//! function. Every fallible call returns a [`D2cStatus`]; on failure a
//! message is available from [`d2c_last_error_message`] on the same thread.
//! Strings returned through `char **` outputs are owned by the caller and
//! released with [`d2c_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

use d2c::d2c::{decide_d2c, verify_distinguishing, D2cVerdict as Verdict, NoReason};
use d2c::graph::{parse_edge_list, parse_graph6, write_graph6};
use d2c::iso::{are_isomorphic, canonical_form, has_color_preserving_nta, has_nta};
use d2c::oracle::Oracle;
use d2c::reductions::{cc_to_ga, ga_to_cc, CcToGaCase};
use d2c::{Error, Graph, Permutation, TwoColoring};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D2cStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    BufferTooSmall = 5,
    Refused = 6,
    Internal = 7,
    Panic = 8,
}

/// Verdict reason; `None` for a YES verdict.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D2cReason {
    None = 0,
    NonBipartite = 1,
    ComponentNotDistinguishable = 2,
    ThreeIsomorphicComponents = 3,
    IsomorphicPairNotAsymmetric = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D2cCcToGaCase {
    K1OrK2 = 0,
    NonBipartite = 1,
    Unbalanced = 2,
    Balanced = 3,
}

/// Opaque graph handle.
pub struct D2cGraph {
    inner: Graph,
}

/// Opaque decision result handle.
pub struct D2cVerdict {
    inner: Verdict,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: D2cStatus, msg: impl AsRef<str>) -> D2cStatus {
    set_error(msg.as_ref());
    status
}

fn from_error(e: Error) -> D2cStatus {
    let status = match e {
        Error::Graph6 { .. } | Error::EdgeList { .. } | Error::Coloring { .. } => D2cStatus::ParseError,
        Error::Refused { .. } => D2cStatus::Refused,
        Error::Internal(_) => D2cStatus::Internal,
        _ => D2cStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into `Panic` and clearing the error slot on success.
fn guard(f: impl FnOnce() -> Result<(), D2cStatus>) -> D2cStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            D2cStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => fail(D2cStatus::Panic, "panic inside d2c"),
    }
}

unsafe fn graph_ref<'a>(g: *const D2cGraph) -> Result<&'a Graph, D2cStatus> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| fail(D2cStatus::NullPointer, "null graph handle"))
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, D2cStatus> {
    if s.is_null() {
        return Err(fail(D2cStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(D2cStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, D2cStatus> {
    p.as_mut().ok_or_else(|| fail(D2cStatus::NullPointer, "null output pointer"))
}

unsafe fn write_string(s: String, out: *mut *mut c_char) -> Result<(), D2cStatus> {
    let out = out_ptr(out)?;
    *out = CString::new(s).map_err(|_| fail(D2cStatus::Internal, "interior nul"))?.into_raw();
    Ok(())
}

unsafe fn write_graph(g: Graph, out: *mut *mut D2cGraph) -> Result<(), D2cStatus> {
    *out_ptr(out)? = Box::into_raw(Box::new(D2cGraph { inner: g }));
    Ok(())
}

/// Copies `p` into `buf[..len]` when present and sets `*found`.
unsafe fn write_perm(
    p: Option<Permutation>,
    buf: *mut usize,
    len: usize,
    found: *mut bool,
) -> Result<(), D2cStatus> {
    let found = out_ptr(found)?;
    *found = p.is_some();
    if let Some(p) = p {
        if buf.is_null() {
            return Err(fail(D2cStatus::NullPointer, "null permutation buffer"));
        }
        if len < p.len() {
            return Err(fail(D2cStatus::BufferTooSmall, format!("need {} entries", p.len())));
        }
        slice::from_raw_parts_mut(buf, p.len()).copy_from_slice(p.images());
    }
    Ok(())
}

unsafe fn read_coloring(colors: *const u8, len: usize) -> Result<TwoColoring, D2cStatus> {
    if colors.is_null() && len > 0 {
        return Err(fail(D2cStatus::NullPointer, "null coloring"));
    }
    let values = if len == 0 { Vec::new() } else { slice::from_raw_parts(colors, len).to_vec() };
    TwoColoring::new(values).map_err(from_error)
}

#[no_mangle]
pub unsafe extern "C" fn d2c_graph_from_graph6(text: *const c_char, out: *mut *mut D2cGraph) -> D2cStatus {
    guard(|| write_graph(parse_graph6(c_str(text)?).map_err(from_error)?, out))
}

#[no_mangle]
pub unsafe extern "C" fn d2c_graph_from_edge_list(text: *const c_char, out: *mut *mut D2cGraph) -> D2cStatus {
    guard(|| write_graph(parse_edge_list(c_str(text)?).map_err(from_error)?, out))
}

/// `edges` holds `m` pairs as `2 * m` consecutive vertex ids.
#[no_mangle]
pub unsafe extern "C" fn d2c_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut D2cGraph,
) -> D2cStatus {
    guard(|| {
        if edges.is_null() && m > 0 {
            return Err(fail(D2cStatus::NullPointer, "null edge array"));
        }
        let flat = if m == 0 { &[][..] } else { slice::from_raw_parts(edges, 2 * m) };
        let g = Graph::new(n, flat.chunks_exact(2).map(|e| (e[0], e[1]))).map_err(from_error)?;
        write_graph(g, out)
    })
}

#[no_mangle]
pub unsafe extern "C" fn d2c_graph_free(g: *mut D2cGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn d2c_graph_order(g: *const D2cGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.n())
}

/// Number of edges; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn d2c_graph_size(g: *const D2cGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.m())
}

#[no_mangle]
pub unsafe extern "C" fn d2c_graph_to_graph6(g: *const D2cGraph, out: *mut *mut c_char) -> D2cStatus {
    guard(|| write_string(write_graph6(graph_ref(g)?), out))
}

#[no_mangle]
pub unsafe extern "C" fn d2c_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn d2c_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub unsafe extern "C" fn d2c_decide(g: *const D2cGraph, out: *mut *mut D2cVerdict) -> D2cStatus {
    guard(|| {
        let verdict = decide_d2c(graph_ref(g)?).map_err(from_error)?;
        *out_ptr(out)? = Box::into_raw(Box::new(D2cVerdict { inner: verdict }));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn d2c_verdict_free(v: *mut D2cVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

#[no_mangle]
pub unsafe extern "C" fn d2c_verdict_is_yes(v: *const D2cVerdict) -> bool {
    v.as_ref().is_some_and(|v| v.inner.is_yes())
}

#[no_mangle]
pub unsafe extern "C" fn d2c_verdict_reason(v: *const D2cVerdict) -> D2cReason {
    match v.as_ref().map(|v| &v.inner) {
        None | Some(Verdict::Yes { .. }) => D2cReason::None,
        Some(Verdict::No(r)) => match r {
            NoReason::NonBipartite { .. } => D2cReason::NonBipartite,
            NoReason::ComponentNotDistinguishable { .. } => D2cReason::ComponentNotDistinguishable,
            NoReason::ThreeIsomorphicComponents { .. } => D2cReason::ThreeIsomorphicComponents,
            NoReason::IsomorphicPairNotAsymmetric { .. } => D2cReason::IsomorphicPairNotAsymmetric,
        },
    }
}

/// Copies the witness coloring (values 1 and 2) of a YES verdict into `buf`.
#[no_mangle]
pub unsafe extern "C" fn d2c_verdict_witness(v: *const D2cVerdict, buf: *mut u8, len: usize) -> D2cStatus {
    guard(|| {
        let v = v.as_ref().ok_or_else(|| fail(D2cStatus::NullPointer, "null verdict"))?;
        let Verdict::Yes { witness } = &v.inner else {
            return Err(fail(D2cStatus::InvalidInput, "verdict is NO; no witness"));
        };
        if buf.is_null() {
            return Err(fail(D2cStatus::NullPointer, "null buffer"));
        }
        if len < witness.len() {
            return Err(fail(D2cStatus::BufferTooSmall, format!("need {} entries", witness.len())));
        }
        slice::from_raw_parts_mut(buf, witness.len()).copy_from_slice(witness.colors());
        Ok(())
    })
}

/// One-line summary, e.g. `YES witness=[1,2]`.
#[no_mangle]
pub unsafe extern "C" fn d2c_verdict_to_string(v: *const D2cVerdict, out: *mut *mut c_char) -> D2cStatus {
    guard(|| {
        let v = v.as_ref().ok_or_else(|| fail(D2cStatus::NullPointer, "null verdict"))?;
        write_string(v.inner.to_string(), out)
    })
}

/// Full certificate as JSON.
#[no_mangle]
pub unsafe extern "C" fn d2c_verdict_to_json(v: *const D2cVerdict, out: *mut *mut c_char) -> D2cStatus {
    guard(|| {
        let v = v.as_ref().ok_or_else(|| fail(D2cStatus::NullPointer, "null verdict"))?;
        let json = serde_json::to_string(&v.inner).map_err(|e| fail(D2cStatus::Internal, e.to_string()))?;
        write_string(json, out)
    })
}

/// Writes a nontrivial automorphism into `perm[..len]` (`len >= n`) if one exists.
#[no_mangle]
pub unsafe extern "C" fn d2c_has_nta(
    g: *const D2cGraph,
    perm: *mut usize,
    len: usize,
    found: *mut bool,
) -> D2cStatus {
    guard(|| write_perm(has_nta(graph_ref(g)?), perm, len, found))
}

#[no_mangle]
pub unsafe extern "C" fn d2c_has_color_preserving_nta(
    g: *const D2cGraph,
    colors: *const u8,
    ncolors: usize,
    perm: *mut usize,
    len: usize,
    found: *mut bool,
) -> D2cStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let c = read_coloring(colors, ncolors)?;
        if c.len() != g.n() {
            return Err(fail(D2cStatus::InvalidInput, "coloring length does not match graph"));
        }
        write_perm(has_color_preserving_nta(g, &c), perm, len, found)
    })
}

#[no_mangle]
pub unsafe extern "C" fn d2c_are_isomorphic(
    g1: *const D2cGraph,
    g2: *const D2cGraph,
    perm: *mut usize,
    len: usize,
    found: *mut bool,
) -> D2cStatus {
    guard(|| write_perm(are_isomorphic(graph_ref(g1)?, graph_ref(g2)?), perm, len, found))
}

#[no_mangle]
pub unsafe extern "C" fn d2c_canonical_key(g: *const D2cGraph, out: *mut *mut c_char) -> D2cStatus {
    guard(|| write_string(canonical_form(graph_ref(g)?, None).key, out))
}

#[no_mangle]
pub unsafe extern "C" fn d2c_verify_distinguishing(
    g: *const D2cGraph,
    colors: *const u8,
    ncolors: usize,
    out: *mut bool,
) -> D2cStatus {
    guard(|| {
        let c = read_coloring(colors, ncolors)?;
        *out_ptr(out)? = verify_distinguishing(graph_ref(g)?, &c).map_err(from_error)?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn d2c_oracle_chi_d_le_2(
    g: *const D2cGraph,
    threshold: usize,
    out: *mut bool,
) -> D2cStatus {
    guard(|| {
        *out_ptr(out)? = Oracle::new(threshold).chi_d_le_2(graph_ref(g)?).map_err(from_error)?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn d2c_ga_to_cc(g: *const D2cGraph, out: *mut *mut D2cGraph) -> D2cStatus {
    guard(|| write_graph(ga_to_cc(graph_ref(g)?).map_err(from_error)?.graph, out))
}

#[no_mangle]
pub unsafe extern "C" fn d2c_cc_to_ga(
    g: *const D2cGraph,
    out: *mut *mut D2cGraph,
    case_out: *mut D2cCcToGaCase,
) -> D2cStatus {
    guard(|| {
        let r = cc_to_ga(graph_ref(g)?).map_err(from_error)?;
        *out_ptr(case_out)? = match r.case {
            CcToGaCase::K1OrK2 => D2cCcToGaCase::K1OrK2,
            CcToGaCase::NonBipartite => D2cCcToGaCase::NonBipartite,
            CcToGaCase::Unbalanced => D2cCcToGaCase::Unbalanced,
            CcToGaCase::Balanced => D2cCcToGaCase::Balanced,
        };
        write_graph(r.graph, out)
    })
}
