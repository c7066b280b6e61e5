use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use stirling_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = stirling_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn named(name: &str) -> *mut StirlingGraph {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { stirling_graph_named(c(name).as_ptr(), &mut g) }, StirlingStatus::Ok);
    g
}

fn complex(g: *const StirlingGraph, sizes: &[usize], flags: u32) -> *mut StirlingComplex {
    let mut x = ptr::null_mut();
    let status = unsafe { stirling_complex_new(g, sizes.as_ptr(), sizes.len(), flags, &mut x) };
    assert_eq!(status, StirlingStatus::Ok);
    x
}

fn f_vector(x: *const StirlingComplex) -> Vec<u64> {
    let mut len = 0;
    assert_eq!(unsafe { stirling_complex_f_vector(x, ptr::null_mut(), 0, &mut len) }, StirlingStatus::Ok);
    let mut buf = vec![0u64; len];
    assert_eq!(unsafe { stirling_complex_f_vector(x, buf.as_mut_ptr(), len, &mut len) }, StirlingStatus::Ok);
    buf
}

#[test]
fn counts_through_handles() {
    let g = named("K4");
    let x = complex(g, &[2, 1, 1, 1], 0);
    assert_eq!(f_vector(x), vec![108, 288]);
    let (mut f0, mut f1, mut l) = (0, 0, 0);
    unsafe {
        assert_eq!(stirling_count_two_one(g, &mut f0, &mut f1), StirlingStatus::Ok);
        assert_eq!(stirling_wedge_count(g, &mut l), StirlingStatus::Ok);
    }
    assert_eq!((f0, f1, l), (108, 288, 181));

    let mut len = 0;
    let mut small = [0u64; 1];
    let status = unsafe { stirling_complex_f_vector(x, small.as_mut_ptr(), 1, &mut len) };
    assert_eq!(status, StirlingStatus::BufferTooSmall);
    assert_eq!(len, 2);
    unsafe {
        stirling_complex_free(x);
        stirling_graph_free(g);
    }
}

#[test]
fn uniform_counts_and_components() {
    let g = named("T4");
    let mut len = 0;
    let mut buf = [0u64; 8];
    let status = unsafe { stirling_count_uniform(g, 3, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(status, StirlingStatus::Ok);
    assert_eq!(&buf[..len], &[60, 126, 72, 0]);

    let y = complex(g, &[3, 2], 0);
    let mut count = 0;
    assert_eq!(unsafe { stirling_complex_component_count(y, &mut count) }, StirlingStatus::Ok);
    assert_eq!(count, 3);
    let hexagon = complex(g, &[1, 1], STIRLING_NO_COVER | STIRLING_SEPARATE_ALL);
    assert_eq!(f_vector(hexagon), vec![12, 12]);
    unsafe {
        stirling_complex_free(hexagon);
        stirling_complex_free(y);
        stirling_graph_free(g);
    }
}

#[test]
fn graph_construction() {
    let mut g = ptr::null_mut();
    let edges = [0usize, 1, 1, 2, 2, 0];
    assert_eq!(unsafe { stirling_graph_new(3, edges.as_ptr(), 3, &mut g) }, StirlingStatus::Ok);
    let (mut n, mut m) = (0, 0);
    unsafe {
        stirling_graph_vertex_count(g, &mut n);
        stirling_graph_edge_count(g, &mut m);
        stirling_graph_free(g);
    }
    assert_eq!((n, m), (3, 3));

    let mut g = ptr::null_mut();
    let status = unsafe { stirling_graph_parse(c("3 2\n0 1\n1 1\n").as_ptr(), &mut g) };
    assert_eq!(status, StirlingStatus::ParseError);
    assert!(g.is_null());
    assert!(last_error().contains("line 3"), "{}", last_error());

    let status = unsafe { stirling_graph_parse(c("3 2\n0 1\n1 2\n").as_ptr(), &mut g) };
    assert_eq!(status, StirlingStatus::Ok);
    assert!(stirling_last_error().is_null());
    unsafe { stirling_graph_free(g) };
}

#[test]
fn argument_errors() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(stirling_graph_named(ptr::null(), &mut g), StirlingStatus::NullPointer);
        assert_eq!(stirling_graph_named(c("K5").as_ptr(), ptr::null_mut()), StirlingStatus::NullPointer);
        assert_eq!(stirling_graph_named(c("X9").as_ptr(), &mut g), StirlingStatus::InvalidArgument);
    }
    let k = named("K3");
    let mut x = ptr::null_mut();
    unsafe {
        let zero = [0usize, 1];
        assert_eq!(stirling_complex_new(k, zero.as_ptr(), 2, 0, &mut x), StirlingStatus::InvalidArgument);
        assert_eq!(stirling_complex_new(k, [1usize].as_ptr(), 1, 8, &mut x), StirlingStatus::InvalidArgument);
        let mut count = 0;
        assert_eq!(stirling_complex_component_count(ptr::null(), &mut count), StirlingStatus::NullPointer);
        let mut l = 0;
        let big = named("K40");
        assert_eq!(stirling_wedge_count(big, &mut l), StirlingStatus::Overflow);
        stirling_graph_free(big);
        stirling_graph_free(k);
        stirling_graph_free(ptr::null_mut());
        stirling_complex_free(ptr::null_mut());
        stirling_string_free(ptr::null_mut());
    }
    let empty = complex(named("P4"), &[1, 1], 0);
    let mut count = 0;
    assert_eq!(unsafe { stirling_complex_component_count(empty, &mut count) }, StirlingStatus::EmptyComplex);
    unsafe { stirling_complex_free(empty) };
}

fn plan_text(x: *const StirlingComplex, from: &str, to: &str, mode: StirlingPlanMode) -> (StirlingStatus, String) {
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { stirling_plan(x, c(from).as_ptr(), c(to).as_ptr(), mode, &mut out) };
    if out.is_null() {
        return (status, String::new());
    }
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
    unsafe { stirling_string_free(out) };
    (status, text)
}

fn verify(x: *const StirlingComplex, text: &str) -> (StirlingStatus, c_int, usize) {
    let (mut valid, mut step) = (-1, usize::MAX);
    let status = unsafe { stirling_verify_plan(x, c(text).as_ptr(), ptr::null(), &mut valid, &mut step) };
    (status, valid, step)
}

#[test]
fn plan_and_verify() {
    let g = named("P3");
    let x = complex(g, &[2, 2, 1], 0);
    let (from, to) = ("{0,1}|{0,2}|{0}", "{1,2}|{0,2}|{2}");
    for mode in [StirlingPlanMode::Constructive, StirlingPlanMode::Bfs] {
        let (status, text) = plan_text(x, from, to, mode);
        assert_eq!(status, StirlingStatus::Ok);
        assert!(text.starts_with(from));
        assert_eq!(verify(x, &text), (StirlingStatus::Ok, 1, 0));
    }

    let tampered = format!("{from}\n2 0 1\n2 0 1\n# end: {to}\n");
    assert_eq!(verify(x, &tampered), (StirlingStatus::Ok, 0, 2));
    assert_eq!(verify(x, "{0,1}|{0,2}\n# end: {0,1}|{0,2}\n"), (StirlingStatus::Ok, 0, 0));
    assert_eq!(verify(x, from).0, StirlingStatus::InvalidArgument);
    assert_eq!(verify(x, "garbage").0, StirlingStatus::ParseError);

    let (status, _) = plan_text(x, from, "{0,1}|{0,2}", StirlingPlanMode::Bfs);
    assert_eq!(status, StirlingStatus::InvalidArgument);
    unsafe {
        stirling_complex_free(x);
        stirling_graph_free(g);
    }

    let y = named("T4");
    let x = complex(y, &[3, 2], 0);
    let (a, b) = ("{0,1,2}|{0,3}", "{0,1,3}|{0,2}");
    assert_eq!(plan_text(x, a, b, StirlingPlanMode::Bfs).0, StirlingStatus::Unreachable);
    assert_eq!(plan_text(x, a, b, StirlingPlanMode::Constructive).0, StirlingStatus::HypothesisNotMet);
    unsafe {
        stirling_complex_free(x);
        stirling_graph_free(y);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(stirling_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
