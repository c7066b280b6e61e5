//! C interface to the `stirling` crate.
//!
//! Graphs and complexes are opaque handles released with their `_free`
//! function. Every fallible call returns a [`StirlingStatus`]; after a
//! failure, [`stirling_last_error`] describes it. Strings handed to the
//! caller are released with [`stirling_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use stirling::complex::{count_formula_two_one, count_formula_uniform, wedge_count};
use stirling::planner::{plan, plan_bfs, verify_plan, PlanFile};
use stirling::skeleton::connected_components;
use stirling::{Cell, ColorVector, ComplexSpec, Error, NamedGraph, SimpleGraph};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    EmptyComplex = 4,
    Unreachable = 5,
    HypothesisNotMet = 6,
    Overflow = 7,
    BufferTooSmall = 8,
    /// Broken invariant or a caught panic.
    Internal = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingPlanMode {
    /// Constructive planner; needs a connected graph and at least three colors.
    Constructive = 0,
    /// Shortest plan by breadth-first search.
    Bfs = 1,
}

/// Flag for [`stirling_complex_new`]: drop the covering condition.
pub const STIRLING_NO_COVER: u32 = 1;
/// Flag for [`stirling_complex_new`]: separate robots of different colors too.
pub const STIRLING_SEPARATE_ALL: u32 = 2;

pub struct StirlingGraph(SimpleGraph);

pub struct StirlingComplex(ComplexSpec);

struct Failure {
    status: StirlingStatus,
    message: String,
}

impl Failure {
    fn new(status: StirlingStatus, message: impl Into<String>) -> Self {
        Failure { status, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Malformed { .. }
            | Error::Loop { .. }
            | Error::DuplicateEdge { .. }
            | Error::VertexOutOfRange { .. }
            | Error::CellSyntax(_) => StirlingStatus::ParseError,
            Error::Overflow(_) => StirlingStatus::Overflow,
            Error::EmptyComplex => StirlingStatus::EmptyComplex,
            Error::NoPath { .. } => StirlingStatus::Unreachable,
            Error::HypothesisNotMet(_) => StirlingStatus::HypothesisNotMet,
            Error::Internal(_) => StirlingStatus::Internal,
            _ => StirlingStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Outcome) -> StirlingStatus {
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|panic| {
        let what = panic
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| panic.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".into());
        Err(Failure::new(StirlingStatus::Internal, format!("panic: {what}")))
    });
    match result {
        Ok(()) => {
            set_last_error(None);
            StirlingStatus::Ok
        }
        Err(f) => {
            set_last_error(Some(f.message));
            f.status
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::new(StirlingStatus::NullPointer, format!("{what} is null"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(StirlingStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn to_u64(x: u128) -> Result<u64, Failure> {
    u64::try_from(x).map_err(|_| Failure::new(StirlingStatus::Overflow, format!("{x} does not fit in 64 bits")))
}

/// Writes `counts` into `buf`. A null `buf` only reports the length.
unsafe fn write_counts(counts: &[u128], buf: *mut u64, cap: usize, len: *mut usize) -> Outcome {
    let len = out(len, "len")?;
    *len = counts.len();
    if buf.is_null() {
        return Ok(());
    }
    if cap < counts.len() {
        return Err(Failure::new(
            StirlingStatus::BufferTooSmall,
            format!("need {} slots, got {cap}", counts.len()),
        ));
    }
    let values = counts.iter().map(|&c| to_u64(c)).collect::<Result<Vec<_>, _>>()?;
    ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn stirling_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null after a
/// successful one. Valid until the next call into the library.
#[no_mangle]
pub extern "C" fn stirling_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an edge list: `n m` header, then one `u v` line per edge.
///
/// # Safety
/// `edge_list` must be a NUL-terminated string and `graph` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stirling_graph_parse(edge_list: *const c_char, graph: *mut *mut StirlingGraph) -> StirlingStatus {
    guard(|| {
        let graph = out(graph, "graph")?;
        let g = SimpleGraph::parse_edge_list(text(edge_list, "edge_list")?)?;
        *graph = Box::into_raw(Box::new(StirlingGraph(g)));
        Ok(())
    })
}

/// Builds a named graph such as `"P4"`, `"T5"`, `"C6"` or `"K5"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `graph` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stirling_graph_named(name: *const c_char, graph: *mut *mut StirlingGraph) -> StirlingStatus {
    guard(|| {
        let graph = out(graph, "graph")?;
        let g = text(name, "name")?.parse::<NamedGraph>()?.build()?;
        *graph = Box::into_raw(Box::new(StirlingGraph(g)));
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `m` edges given as `2m` endpoints.
///
/// # Safety
/// `endpoints` must point to `2 * m` values (it may be null when `m` is 0).
#[no_mangle]
pub unsafe extern "C" fn stirling_graph_new(
    n: usize,
    endpoints: *const usize,
    m: usize,
    graph: *mut *mut StirlingGraph,
) -> StirlingStatus {
    guard(|| {
        let graph = out(graph, "graph")?;
        let flat: &[usize] = match m {
            0 => &[],
            _ if endpoints.is_null() => return Err(null("endpoints")),
            _ => std::slice::from_raw_parts(endpoints, 2 * m),
        };
        let g = SimpleGraph::new(n, flat.chunks_exact(2).map(|e| (e[0], e[1])))?;
        *graph = Box::into_raw(Box::new(StirlingGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `graph` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn stirling_graph_free(graph: *mut StirlingGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn stirling_graph_vertex_count(graph: *const StirlingGraph, n: *mut usize) -> StirlingStatus {
    guard(|| {
        *out(n, "n")? = borrow(graph, "graph")?.0.vertex_count();
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn stirling_graph_edge_count(graph: *const StirlingGraph, m: *mut usize) -> StirlingStatus {
    guard(|| {
        *out(m, "m")? = borrow(graph, "graph")?.0.edge_count();
        Ok(())
    })
}

/// Complex of `graph` with `r` groups of the given sizes. `flags` combines
/// `STIRLING_NO_COVER` and `STIRLING_SEPARATE_ALL`. The graph is copied.
///
/// # Safety
/// `sizes` must point to `r` values; other pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn stirling_complex_new(
    graph: *const StirlingGraph,
    sizes: *const usize,
    r: usize,
    flags: u32,
    complex: *mut *mut StirlingComplex,
) -> StirlingStatus {
    guard(|| {
        let complex = out(complex, "complex")?;
        let g = borrow(graph, "graph")?;
        if flags & !(STIRLING_NO_COVER | STIRLING_SEPARATE_ALL) != 0 {
            return Err(Failure::new(StirlingStatus::InvalidArgument, format!("unknown flags {flags:#x}")));
        }
        let sizes = match r {
            0 => Vec::new(),
            _ if sizes.is_null() => return Err(null("sizes")),
            _ => std::slice::from_raw_parts(sizes, r).to_vec(),
        };
        let mut spec = ComplexSpec::new(g.0.clone(), ColorVector::new(sizes)?);
        if flags & STIRLING_NO_COVER != 0 {
            spec = spec.without_cover();
        }
        if flags & STIRLING_SEPARATE_ALL != 0 {
            spec = spec.separating_all_robots();
        }
        *complex = Box::into_raw(Box::new(StirlingComplex(spec)));
        Ok(())
    })
}

/// # Safety
/// `complex` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn stirling_complex_free(complex: *mut StirlingComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// Cell counts by dimension. Pass a null `buf` to query the length.
///
/// # Safety
/// `buf` must hold `cap` values; other pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn stirling_complex_f_vector(
    complex: *const StirlingComplex,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> StirlingStatus {
    guard(|| {
        let f = borrow(complex, "complex")?.0.f_vector();
        write_counts(f.counts(), buf, cap, len)
    })
}

/// Number of connected components.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn stirling_complex_component_count(
    complex: *const StirlingComplex,
    count: *mut usize,
) -> StirlingStatus {
    guard(|| {
        let count = out(count, "count")?;
        *count = connected_components(&borrow(complex, "complex")?.0)?.count;
        Ok(())
    })
}

/// Closed-form counts for group sizes `(2, 1, ..., 1)` with one group per vertex.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn stirling_count_two_one(
    graph: *const StirlingGraph,
    f0: *mut u64,
    f1: *mut u64,
) -> StirlingStatus {
    guard(|| {
        let (f0, f1) = (out(f0, "f0")?, out(f1, "f1")?);
        let (a, b) = count_formula_two_one(&borrow(graph, "graph")?.0)?;
        (*f0, *f1) = (to_u64(a)?, to_u64(b)?);
        Ok(())
    })
}

/// `L = f1 - f0 + 1` for group sizes `(2, 1, ..., 1)`. Needs a connected graph.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn stirling_wedge_count(graph: *const StirlingGraph, count: *mut i64) -> StirlingStatus {
    guard(|| {
        let count = out(count, "count")?;
        let l = wedge_count(&borrow(graph, "graph")?.0)?;
        *count = i64::try_from(l).map_err(|_| Failure::new(StirlingStatus::Overflow, format!("{l} does not fit")))?;
        Ok(())
    })
}

/// Closed-form counts for `r` groups of size `n - 1`. Pass a null `buf`
/// to query the length.
///
/// # Safety
/// `buf` must hold `cap` values; other pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn stirling_count_uniform(
    graph: *const StirlingGraph,
    r: usize,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> StirlingStatus {
    guard(|| {
        let f = count_formula_uniform(&borrow(graph, "graph")?.0, r)?;
        write_counts(f.counts(), buf, cap, len)
    })
}

/// Plans moves between two 0-cells written like `{0,1}|{2}`. On success
/// `plan_text` receives the plan in the text format read by
/// [`stirling_verify_plan`]; free it with [`stirling_string_free`].
///
/// # Safety
/// Strings must be NUL-terminated; other pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn stirling_plan(
    complex: *const StirlingComplex,
    from: *const c_char,
    to: *const c_char,
    mode: StirlingPlanMode,
    plan_text: *mut *mut c_char,
) -> StirlingStatus {
    guard(|| {
        let plan_text = out(plan_text, "plan_text")?;
        let spec = &borrow(complex, "complex")?.0;
        let a: Cell = text(from, "from")?.parse()?;
        let b: Cell = text(to, "to")?.parse()?;
        for c in [&a, &b] {
            spec.check_cell(c)?;
            if c.dim() != 0 {
                return Err(Failure::new(StirlingStatus::InvalidArgument, format!("{c} is not a 0-cell")));
            }
        }
        let p = match mode {
            StirlingPlanMode::Constructive => plan(spec, &a, &b)?,
            StirlingPlanMode::Bfs => plan_bfs(spec, &a, &b)?
                .ok_or_else(|| Failure::new(StirlingStatus::Unreachable, format!("{b} is unreachable from {a}")))?,
        };
        *plan_text = into_c_string(p.to_text());
        Ok(())
    })
}

/// Replays a plan. `valid` receives 1 or 0; on 0, `step` receives the
/// failing step (0 for the start cell, `k + 1` for move `k`, moves + 1 for
/// the end cell). A null `end` uses the plan's `# end:` line.
///
/// # Safety
/// Strings must be NUL-terminated or null where allowed; other pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn stirling_verify_plan(
    complex: *const StirlingComplex,
    plan_text: *const c_char,
    end: *const c_char,
    valid: *mut c_int,
    step: *mut usize,
) -> StirlingStatus {
    guard(|| {
        let (valid, step) = (out(valid, "valid")?, out(step, "step")?);
        let spec = &borrow(complex, "complex")?.0;
        let parsed = PlanFile::parse(text(plan_text, "plan_text")?)?;
        let end = match end.is_null() {
            false => text(end, "end")?.parse::<Cell>()?,
            true => parsed.end.clone().ok_or_else(|| {
                Failure::new(StirlingStatus::InvalidArgument, "no end cell given and no `# end:` line")
            })?,
        };
        let p = parsed.into_plan(end);
        match verify_plan(spec, &p) {
            Ok(()) => (*valid, *step) = (1, 0),
            Err(fault) => (*valid, *step) = (0, fault.step(&p)),
        }
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn stirling_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
