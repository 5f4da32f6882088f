//! C ABI for `partition-lab`.
//!
//! Matrices and solution lists are opaque handles created by `pl_*_new`-style
//! functions and released with the matching `pl_*_free`. Every fallible call
//! returns a [`PlStatus`]; on failure a message is available from
//! [`pl_last_error_message`] on the same thread.
//!
//! Functions that fill caller buffers always write the required length to
//! `len_out` and return `PL_STATUS_BUFFER_TOO_SMALL` when `cap` is short, so
//! callers can size the buffer with a first call using `cap = 0`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use partition_lab::{
    all_solutions, b_count, b_solutions, count_partitions_oracle, ell, frequency, hooks,
    matrix_to_partition, p_via_main_theorem, partition_to_matrix, project_to_m0, weight_p, Error,
    Partition, TwoLineMatrix,
};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidMatrix = 3,
    Overflow = 4,
    BufferTooSmall = 5,
    Mismatch = 6,
    Panic = 7,
}

/// Opaque two-line matrix.
pub struct PlMatrix(TwoLineMatrix);

/// Opaque list of canonical solution tuples.
pub struct PlSolutions(Vec<(u64, u64, Vec<u64>)>);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(e: &Error) -> PlStatus {
    match e {
        Error::InvalidMatrix(_) | Error::NotInM0 { .. } | Error::SingleColumn => {
            PlStatus::InvalidMatrix
        }
        Error::Overflow(_) => PlStatus::Overflow,
        _ => PlStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> PlStatus {
    let status = status_of(&e);
    set_error(e.to_string());
    status
}

fn guard(f: impl FnOnce() -> PlStatus) -> PlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => {
            if status == PlStatus::Ok {
                set_error("");
            }
            status
        }
        Err(_) => {
            set_error("internal panic");
            PlStatus::Panic
        }
    }
}

fn null() -> PlStatus {
    set_error("null pointer argument");
    PlStatus::NullPointer
}

/// # Safety
/// `data` must be null with `len == 0`, or point to `len` readable values.
unsafe fn slice<'a>(data: *const u64, len: usize) -> Option<&'a [u64]> {
    if len == 0 {
        Some(&[])
    } else if data.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(data, len))
    }
}

/// # Safety
/// `out` must be valid for `cap` writes when `cap > 0`; `len_out` must be valid.
unsafe fn fill(values: &[u64], out: *mut u64, cap: usize, len_out: *mut usize) -> PlStatus {
    if len_out.is_null() {
        return null();
    }
    *len_out = values.len();
    if values.len() > cap {
        set_error(format!("buffer holds {cap} values, {} needed", values.len()));
        return PlStatus::BufferTooSmall;
    }
    if !values.is_empty() {
        if out.is_null() {
            return null();
        }
        ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    }
    PlStatus::Ok
}

unsafe fn boxed_matrix(m: TwoLineMatrix, out: *mut *mut PlMatrix) -> PlStatus {
    *out = Box::into_raw(Box::new(PlMatrix(m)));
    PlStatus::Ok
}

/// Copies the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `cap`). Returns the full message length without the NUL.
///
/// # Safety
/// `buf` must be null or valid for `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn pl_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && cap > 0 {
            let n = msg.len().min(cap - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// `p(n)` from the pentagonal-number recurrence.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pl_count_partitions(n: u64, out: *mut u64) -> PlStatus {
    guard(|| {
        if out.is_null() {
            return null();
        }
        match count_partitions_oracle(n) {
            Ok(p) => {
                *out = p;
                PlStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds and validates a matrix from two rows of `columns` entries.
///
/// # Safety
/// `top` and `bottom` must point to `columns` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_new(
    top: *const u64,
    bottom: *const u64,
    columns: usize,
    out: *mut *mut PlMatrix,
) -> PlStatus {
    guard(|| {
        let (Some(top), Some(bottom)) = (slice(top, columns), slice(bottom, columns)) else {
            return null();
        };
        if out.is_null() {
            return null();
        }
        match TwoLineMatrix::new(top.to_vec(), bottom.to_vec()) {
            Ok(m) => boxed_matrix(m, out),
            Err(e) => fail(e),
        }
    })
}

/// Parses `{"top":[..],"bottom":[..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_from_json(json: *const c_char, out: *mut *mut PlMatrix) -> PlStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return null();
        }
        let Ok(text) = CStr::from_ptr(json).to_str() else {
            set_error("matrix JSON is not UTF-8");
            return PlStatus::InvalidArgument;
        };
        match serde_json::from_str::<TwoLineMatrix>(text) {
            Ok(m) => boxed_matrix(m, out),
            Err(e) => {
                set_error(e.to_string());
                PlStatus::InvalidMatrix
            }
        }
    })
}

/// The matrix of a weakly decreasing partition.
///
/// # Safety
/// `parts` must point to `len` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_from_partition(
    parts: *const u64,
    len: usize,
    out: *mut *mut PlMatrix,
) -> PlStatus {
    guard(|| {
        let Some(parts) = slice(parts, len) else {
            return null();
        };
        if out.is_null() {
            return null();
        }
        match Partition::new(parts.to_vec()).and_then(|p| partition_to_matrix(&p)) {
            Ok(m) => boxed_matrix(m, out),
            Err(e) => fail(e),
        }
    })
}

/// The `M0` matrix of `(l_2, l_2, l_3, ...)` for a partition with at least two parts.
///
/// # Safety
/// `parts` must point to `len` values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_project_to_m0(
    parts: *const u64,
    len: usize,
    out: *mut *mut PlMatrix,
) -> PlStatus {
    guard(|| {
        let Some(parts) = slice(parts, len) else {
            return null();
        };
        if out.is_null() {
            return null();
        }
        match Partition::new(parts.to_vec()).and_then(|p| project_to_m0(&p)) {
            Ok(m) => boxed_matrix(m, out),
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `matrix` must be null or a handle from this library that was not freed.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_free(matrix: *mut PlMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

/// Number of columns, or 0 for a null handle.
///
/// # Safety
/// `matrix` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_columns(matrix: *const PlMatrix) -> usize {
    matrix.as_ref().map_or(0, |m| m.0.columns())
}

/// Copies both rows into `top` and `bottom`, each of capacity `cap`.
///
/// # Safety
/// `matrix` must be a live handle; buffers must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_rows(
    matrix: *const PlMatrix,
    top: *mut u64,
    bottom: *mut u64,
    cap: usize,
    len_out: *mut usize,
) -> PlStatus {
    guard(|| {
        let Some(m) = matrix.as_ref() else {
            return null();
        };
        let status = fill(m.0.top(), top, cap, len_out);
        if status != PlStatus::Ok {
            return status;
        }
        fill(m.0.bottom(), bottom, cap, len_out)
    })
}

/// Column sums of the matrix.
///
/// # Safety
/// `matrix` must be a live handle; `parts` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_to_partition(
    matrix: *const PlMatrix,
    parts: *mut u64,
    cap: usize,
    len_out: *mut usize,
) -> PlStatus {
    guard(|| match matrix.as_ref() {
        Some(m) => fill(matrix_to_partition(&m.0).parts(), parts, cap, len_out),
        None => null(),
    })
}

/// Entry sum `l(M)`.
///
/// # Safety
/// `matrix` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_ell(matrix: *const PlMatrix, out: *mut u64) -> PlStatus {
    guard(|| match (matrix.as_ref(), out.is_null()) {
        (Some(m), false) => {
            *out = ell(&m.0);
            PlStatus::Ok
        }
        _ => null(),
    })
}

/// Hook sizes, largest first.
///
/// # Safety
/// `matrix` must be a live handle; `parts` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_hooks(
    matrix: *const PlMatrix,
    parts: *mut u64,
    cap: usize,
    len_out: *mut usize,
) -> PlStatus {
    guard(|| {
        let Some(m) = matrix.as_ref() else {
            return null();
        };
        match hooks(&m.0) {
            Ok(h) => fill(h.parts(), parts, cap, len_out),
            Err(e) => fail(e),
        }
    })
}

/// Path weight `P(M)`.
///
/// # Safety
/// `matrix` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pl_matrix_weight(matrix: *const PlMatrix, out: *mut u64) -> PlStatus {
    guard(|| {
        let (Some(m), false) = (matrix.as_ref(), out.is_null()) else {
            return null();
        };
        match weight_p(&m.0) {
            Ok(w) => {
                *out = w;
                PlStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// `f(m)`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pl_frequency(m: u64, out: *mut u64) -> PlStatus {
    guard(|| {
        if out.is_null() {
            return null();
        }
        *out = frequency(m);
        PlStatus::Ok
    })
}

/// `|B(m, n)|`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pl_b_count(m: u64, n: u64, out: *mut u64) -> PlStatus {
    guard(|| {
        if out.is_null() {
            return null();
        }
        *out = b_count(m, n);
        PlStatus::Ok
    })
}

/// Evaluates both sides of the partition identity for `n`. Returns
/// `PL_STATUS_MISMATCH` if they differ; both outputs are written either way.
///
/// # Safety
/// Both output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pl_verify(n: u64, p_oracle: *mut u64, p_theorem: *mut u64) -> PlStatus {
    guard(|| {
        if p_oracle.is_null() || p_theorem.is_null() {
            return null();
        }
        match p_via_main_theorem(n) {
            Ok(r) => {
                *p_oracle = r.p_oracle;
                *p_theorem = r.p_theorem;
                if r.matched {
                    PlStatus::Ok
                } else {
                    set_error(format!("p({n}) = {} but the sum gives {}", r.p_oracle, r.p_theorem));
                    PlStatus::Mismatch
                }
            }
            Err(e) => fail(e),
        }
    })
}

/// Canonical solutions for `m`; with `n > 0` only those with `b + c_1 <= n`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pl_solutions_new(m: u64, n: u64, out: *mut *mut PlSolutions) -> PlStatus {
    guard(|| {
        if out.is_null() {
            return null();
        }
        let sets = if n == 0 { all_solutions(m) } else { b_solutions(m, n) };
        let flat = sets
            .into_iter()
            .flat_map(|s| {
                let (a, b) = (s.a, s.b);
                s.solutions.into_iter().map(move |t| (a, b, t))
            })
            .collect();
        *out = Box::into_raw(Box::new(PlSolutions(flat)));
        PlStatus::Ok
    })
}

/// # Safety
/// `solutions` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pl_solutions_len(solutions: *const PlSolutions) -> usize {
    solutions.as_ref().map_or(0, |s| s.0.len())
}

/// Reads solution `index`: its `(a, b)` pair and the zero-padded tuple.
///
/// # Safety
/// `solutions` must be a live handle; all pointers must be valid; `tuple`
/// must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn pl_solutions_get(
    solutions: *const PlSolutions,
    index: usize,
    a: *mut u64,
    b: *mut u64,
    tuple: *mut u64,
    cap: usize,
    len_out: *mut usize,
) -> PlStatus {
    guard(|| {
        let Some(s) = solutions.as_ref() else {
            return null();
        };
        if a.is_null() || b.is_null() {
            return null();
        }
        let Some((sa, sb, t)) = s.0.get(index) else {
            set_error(format!("index {index} out of range ({} solutions)", s.0.len()));
            return PlStatus::InvalidArgument;
        };
        *a = *sa;
        *b = *sb;
        fill(t, tuple, cap, len_out)
    })
}

/// # Safety
/// `solutions` must be null or a handle that was not freed.
#[no_mangle]
pub unsafe extern "C" fn pl_solutions_free(solutions: *mut PlSolutions) {
    if !solutions.is_null() {
        drop(Box::from_raw(solutions));
    }
}
