//! C ABI over `exforge`.
//!
//! Conventions:
//! - every fallible function returns an [`ExStatus`] and writes results
//!   through out-pointers, which are left untouched on failure;
//! - after a failure, [`exforge_last_error_message`] describes it (per thread);
//! - graphs are opaque [`ExGraph`] handles released with [`exforge_graph_free`];
//! - strings returned by the library are released with [`exforge_string_free`];
//! - panics never cross the boundary; they surface as `EX_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use exforge::constructions::{paper_bound, pizer_bound};
use exforge::graph::{
    augment_iterated, is_bipartite, is_connected, read_graph, spectrum_dense, top2_eigenvalues, write_graph,
    GraphError, RegularGraph, SolverConfig,
};
use exforge::numtheory::{big_omega, divisor_count, find_p2_at_or_below, is_prime, wu_witness};
use exforge::pipeline::{certify, observe_plan, GraphSpec};
use exforge::Error;

/// Result codes; the nonzero library codes match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExStatus {
    Ok = 0,
    /// Invalid argument, parameter or input file contents.
    Usage = 2,
    /// A size budget would be exceeded.
    Budget = 3,
    /// An eigensolver did not reach its tolerance.
    Numerical = 4,
    /// File system failure.
    Io = 5,
    /// A required pointer argument was null.
    NullPointer = 6,
    /// Internal panic caught at the boundary.
    Panic = 7,
}

/// Opaque regular multigraph.
pub struct ExGraph {
    inner: RegularGraph,
}

/// Short-interval almost-prime witness for `x`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExWuWitness {
    pub x: u64,
    /// Left end of the open interval `(x - x^(101/232), x]`.
    pub interval_lo: f64,
    /// Largest almost-prime in the interval; meaningful only when `found`.
    pub q: u64,
    pub found: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ExStatus {
    match e {
        Error::Io(_) | Error::Graph(GraphError::Io(_)) => ExStatus::Io,
        _ => match e.exit_code() {
            3 => ExStatus::Budget,
            4 => ExStatus::Numerical,
            _ => ExStatus::Usage,
        },
    }
}

struct Failure(ExStatus, String);

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let e = e.into();
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(ExStatus::NullPointer, format!("{what} must not be null"))
}

/// Run `body`, translating errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> ExStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ExStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_error(format!("internal panic: {message}"));
            ExStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(ExStatus::Usage, format!("{what} is not valid UTF-8")))
}

unsafe fn graph_arg<'a>(g: *const ExGraph) -> Result<&'a RegularGraph, Failure> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn into_handle(g: RegularGraph) -> *mut ExGraph {
    Box::into_raw(Box::new(ExGraph { inner: g }))
}

fn solver(tolerance: f64, dense_threshold: usize, seed: u64) -> Result<SolverConfig, Failure> {
    if !(tolerance > 0.0 && tolerance.is_finite()) || dense_threshold == 0 {
        return Err(Failure(
            ExStatus::Usage,
            "tolerance and dense_threshold must be positive".into(),
        ));
    }
    Ok(SolverConfig {
        tolerance,
        dense_threshold,
        seed,
    })
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn exforge_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn exforge_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn exforge_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Build a graph from a spec string such as `"paley:13"` or `"pipeline:8,lps,1"`.
///
/// # Safety
/// `spec` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_construct(
    spec: *const c_char,
    size_budget: usize,
    out: *mut *mut ExGraph,
) -> ExStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let spec: GraphSpec = str_arg(spec, "spec")?.parse()?;
        let g = spec.build(size_budget)?;
        write_out(out, into_handle(g), "out")
    })
}

/// Read a graph file.
///
/// # Safety
/// `path` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_read(path: *const c_char, out: *mut *mut ExGraph) -> ExStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let file = read_graph(str_arg(path, "path")?)?;
        write_out(out, into_handle(file.graph), "out")
    })
}

/// Write a graph file (no extra comment lines).
///
/// # Safety
/// `g` must be a live handle; `path` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_write(g: *const ExGraph, path: *const c_char) -> ExStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let mut buf = Vec::new();
        write_graph(g, &[], &mut buf)?;
        std::fs::write(str_arg(path, "path")?, buf)?;
        Ok(())
    })
}

/// Release a graph handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_free(g: *mut ExGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_vertex_count(g: *const ExGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.n())
}

/// Degree, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_degree(g: *const ExGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.inner.k())
}

/// New handle for `g` with `steps` factors of `K2` appended.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_augment(
    g: *const ExGraph,
    steps: u32,
    size_budget: usize,
    out: *mut *mut ExGraph,
) -> ExStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let aug = augment_iterated(graph_arg(g)?, steps, size_budget)?;
        write_out(out, into_handle(aug), "out")
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_is_connected(g: *const ExGraph, out: *mut bool) -> ExStatus {
    guard(|| write_out(out, is_connected(graph_arg(g)?), "out"))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_is_bipartite(g: *const ExGraph, out: *mut bool) -> ExStatus {
    guard(|| write_out(out, is_bipartite(graph_arg(g)?), "out"))
}

/// The two largest eigenvalues of a connected graph, by Lanczos iteration.
///
/// # Safety
/// `g` must be a live handle; `lambda1` and `lambda2` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_top2(
    g: *const ExGraph,
    tolerance: f64,
    seed: u64,
    lambda1: *mut f64,
    lambda2: *mut f64,
) -> ExStatus {
    guard(|| {
        if lambda1.is_null() || lambda2.is_null() {
            return Err(null("lambda1/lambda2"));
        }
        let cfg = solver(tolerance, 1, seed)?;
        let s = top2_eigenvalues(graph_arg(g)?, cfg.tolerance, cfg.seed)?;
        write_out(lambda1, s.lambda1(), "lambda1")?;
        write_out(lambda2, s.lambda2(), "lambda2")
    })
}

/// All eigenvalues, descending, into `values[0..n]`; `capacity` must be at least `n`.
///
/// # Safety
/// `g` must be a live handle; `values` must have room for `capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_spectrum(
    g: *const ExGraph,
    tolerance: f64,
    values: *mut f64,
    capacity: usize,
) -> ExStatus {
    guard(|| {
        let g = graph_arg(g)?;
        if values.is_null() {
            return Err(null("values"));
        }
        if capacity < g.n() {
            return Err(Failure(
                ExStatus::Usage,
                format!("buffer holds {capacity} values, graph has {}", g.n()),
            ));
        }
        let cfg = solver(tolerance, 1, 0)?;
        let s = spectrum_dense(g, cfg.tolerance)?;
        ptr::copy_nonoverlapping(s.values.as_ptr(), values, s.values.len());
        Ok(())
    })
}

/// Certify `g` against the plan revealed by peeling `K2` factors; the
/// report document (TOML) is returned through `report`.
///
/// # Safety
/// `g` must be a live handle; `report` must be writable. Free the result
/// with [`exforge_string_free`].
#[no_mangle]
pub unsafe extern "C" fn exforge_graph_certify(
    g: *const ExGraph,
    tolerance: f64,
    dense_threshold: usize,
    seed: u64,
    size_budget: usize,
    report: *mut *mut c_char,
) -> ExStatus {
    guard(|| {
        if report.is_null() {
            return Err(null("report"));
        }
        let g = graph_arg(g)?;
        let cfg = solver(tolerance, dense_threshold, seed)?;
        let (plan, _) = observe_plan(g, size_budget);
        let doc = certify(g, &plan, &cfg)?.to_document()?;
        let c = CString::new(doc).map_err(|e| Failure(ExStatus::Usage, e.to_string()))?;
        write_out(report, c.into_raw(), "report")
    })
}

/// Deterministic primality for all 64-bit inputs.
#[no_mangle]
pub extern "C" fn exforge_is_prime(n: u64) -> bool {
    is_prime(n)
}

/// Number of prime factors of `n` with multiplicity.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exforge_big_omega(n: u64, out: *mut u32) -> ExStatus {
    guard(|| write_out(out, big_omega(n)?, "out"))
}

/// Number of divisors of `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exforge_divisor_count(n: u64, out: *mut u64) -> ExStatus {
    guard(|| write_out(out, divisor_count(n)?, "out"))
}

/// Largest `q <= x` with at most two prime factors; `in_interval` tells
/// whether `q > x - x^(101/232)`.
///
/// # Safety
/// `q` and `in_interval` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exforge_find_p2(x: u64, q: *mut u64, in_interval: *mut bool) -> ExStatus {
    guard(|| {
        if q.is_null() || in_interval.is_null() {
            return Err(null("q/in_interval"));
        }
        let sel = find_p2_at_or_below(x)?;
        write_out(q, sel.q, "q")?;
        write_out(in_interval, sel.in_interval, "in_interval")
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn exforge_wu_witness(x: u64, out: *mut ExWuWitness) -> ExStatus {
    guard(|| {
        let w = wu_witness(x)?;
        let value = ExWuWitness {
            x: w.x,
            interval_lo: w.interval_lo,
            q: w.q.unwrap_or(0),
            found: w.q.is_some(),
        };
        write_out(out, value, "out")
    })
}

/// `4 sqrt(k - 1) + k^(101/232)`.
#[no_mangle]
pub extern "C" fn exforge_paper_bound(k: u64) -> f64 {
    paper_bound(k)
}

/// `d(q + 1) sqrt(q)`.
#[no_mangle]
pub extern "C" fn exforge_pizer_bound(q: u64) -> f64 {
    pizer_bound(q)
}
