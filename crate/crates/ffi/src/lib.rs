//! C ABI over the qmono core: opaque state handles, status codes, and
//! flat-array wrappers around the measure and bound evaluators.
//!
//! Conventions: every fallible call returns a [`QmStatus`] and writes
//! its result through out-pointers; on failure
//! [`qm_last_error_message`] retrieves a per-thread description of the
//! error. Handles returned by the constructors must be released with
//! [`qm_state_free`].

use qmono::measures::{self, MeasureKind};
use qmono::monogamy::{self, BoundParams, PartitionedMeasures};
use qmono::qstate::{self, AcinParams, PureState};
use qmono::{ineq, Error};
use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::ptr;

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    PreconditionViolated = 3,
    DegenerateInput = 4,
    ParseError = 5,
    NumericalError = 6,
}

/// Measure selector: 0 concurrence, 1 CREN, 2 Bures.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QmMeasureKind {
    Concurrence = 0,
    Cren = 1,
    Bures = 2,
}

impl From<QmMeasureKind> for MeasureKind {
    fn from(k: QmMeasureKind) -> Self {
        match k {
            QmMeasureKind::Concurrence => MeasureKind::Concurrence,
            QmMeasureKind::Cren => MeasureKind::Cren,
            QmMeasureKind::Bures => MeasureKind::Bures,
        }
    }
}

/// Opaque pure-state handle.
pub struct QmState {
    inner: PureState,
}

fn status_of(e: &Error) -> QmStatus {
    match e {
        Error::Precondition(_) => QmStatus::PreconditionViolated,
        Error::Degenerate(_) => QmStatus::DegenerateInput,
        Error::Parse(_) => QmStatus::ParseError,
        Error::Numerical(_) => QmStatus::NumericalError,
        _ => QmStatus::InvalidInput,
    }
}

fn fail(e: Error) -> QmStatus {
    let code = status_of(&e);
    set_error(e.to_string());
    code
}

fn write_out<T>(out: *mut T, value: T) -> QmStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return QmStatus::NullPointer;
    }
    unsafe { *out = value };
    QmStatus::Ok
}

/// Copies the most recent error message of this thread into `buf`
/// (NUL-terminated, truncated to `len`). Returns the full message
/// length in bytes, excluding the terminator.
///
/// # Safety
/// `buf` must point to `len` writable bytes, or be null (query mode).
#[no_mangle]
pub unsafe extern "C" fn qm_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

fn box_state(state: PureState, out: *mut *mut QmState) -> QmStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return QmStatus::NullPointer;
    }
    let handle = Box::into_raw(Box::new(QmState { inner: state }));
    unsafe { *out = handle };
    QmStatus::Ok
}

/// Parses a state from the JSON document
/// `{"dims":[2,2,2],"amps":[[re,im],...]}`.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn qm_state_from_json(
    json: *const c_char,
    out: *mut *mut QmState,
) -> QmStatus {
    if json.is_null() {
        set_error("json pointer is null");
        return QmStatus::NullPointer;
    }
    let text = match CStr::from_ptr(json).to_str() {
        Ok(t) => t,
        Err(_) => {
            set_error("json is not valid UTF-8");
            return QmStatus::ParseError;
        }
    };
    match PureState::from_json(text) {
        Ok(s) => box_state(s, out),
        Err(e) => fail(e),
    }
}

/// Builds a state from subsystem dimensions and interleaved
/// (re, im) amplitude pairs in lexicographic basis order.
///
/// # Safety
/// `dims` must point to `n_dims` values and `re_im` to `2 * n_amps`
/// doubles.
#[no_mangle]
pub unsafe extern "C" fn qm_state_new(
    dims: *const usize,
    n_dims: usize,
    re_im: *const f64,
    n_amps: usize,
    out: *mut *mut QmState,
) -> QmStatus {
    if dims.is_null() || re_im.is_null() {
        set_error("input pointer is null");
        return QmStatus::NullPointer;
    }
    let dims = std::slice::from_raw_parts(dims, n_dims).to_vec();
    let flat = std::slice::from_raw_parts(re_im, 2 * n_amps);
    let amps = flat
        .chunks_exact(2)
        .map(|p| qmono::cmatrix::Complex64::new(p[0], p[1]))
        .collect();
    match PureState::new(dims, amps) {
        Ok(s) => box_state(s, out),
        Err(e) => fail(e),
    }
}

/// Builds the canonical three-qubit state
/// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qm_acin_state(
    l0: f64,
    l1: f64,
    l2: f64,
    l3: f64,
    l4: f64,
    phi: f64,
    out: *mut *mut QmState,
) -> QmStatus {
    let params = match AcinParams::new([l0, l1, l2, l3, l4], phi) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    match qstate::acin_state(&params) {
        Ok(s) => box_state(s, out),
        Err(e) => fail(e),
    }
}

/// Deterministic random n-qubit state (1..=4 qubits).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qm_random_state(
    n_qubits: usize,
    seed: u64,
    out: *mut *mut QmState,
) -> QmStatus {
    match qstate::random_pure_state(n_qubits, seed) {
        Ok(s) => box_state(s, out),
        Err(e) => fail(e),
    }
}

/// Releases a handle returned by one of the constructors. Null is a
/// no-op.
///
/// # Safety
/// `state` must be a pointer previously returned by a constructor and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qm_state_free(state: *mut QmState) {
    if !state.is_null() {
        drop(Box::from_raw(state));
    }
}

/// Number of subsystems of a state handle; 0 for null.
///
/// # Safety
/// `state` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qm_state_subsystems(state: *const QmState) -> usize {
    if state.is_null() {
        0
    } else {
        (*state).inner.n_subsystems()
    }
}

/// Evaluates a measure on the split `party_a` vs the rest
/// (`party_b < 0`) or on the reduced pair (`party_a`, `party_b`).
///
/// # Safety
/// `state` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qm_measure(
    state: *const QmState,
    kind: QmMeasureKind,
    party_a: usize,
    party_b: isize,
    out: *mut f64,
) -> QmStatus {
    if state.is_null() {
        set_error("state pointer is null");
        return QmStatus::NullPointer;
    }
    let pb = if party_b < 0 {
        None
    } else {
        Some(party_b as usize)
    };
    match measures::measure(kind.into(), &(*state).inner, party_a, pb) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Closed-form concurrences of the canonical family, written as
/// (A|rest, AB, AC) into `out3`.
///
/// # Safety
/// `out3` must point to three writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qm_closed_form_concurrences(
    l0: f64,
    l1: f64,
    l2: f64,
    l3: f64,
    l4: f64,
    phi: f64,
    out3: *mut f64,
) -> QmStatus {
    if out3.is_null() {
        set_error("output pointer is null");
        return QmStatus::NullPointer;
    }
    let params = match AcinParams::new([l0, l1, l2, l3, l4], phi) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let (c_rest, c_ab, c_ac) = qstate::closed_form_concurrences(&params);
    *out3 = c_rest;
    *out3.add(1) = c_ab;
    *out3.add(2) = c_ac;
    QmStatus::Ok
}

/// B(c) = 2 - 2 sqrt((1 + sqrt(1 - c^2)) / 2).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qm_bures_from_concurrence(c: f64, out: *mut f64) -> QmStatus {
    match measures::bures_from_concurrence(c) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Smallest admissible exponent (1 + log2(m + 2)) * gamma.
#[no_mangle]
pub extern "C" fn qm_alpha_min(m: f64, gamma: f64) -> f64 {
    ineq::alpha_min(m, gamma)
}

/// Largest m admissible at the given exponent:
/// floor(2^(alpha/gamma - 1) - 2), clamped at zero.
#[no_mangle]
pub extern "C" fn qm_optimal_m(alpha: f64, gamma: f64) -> u64 {
    ineq::optimal_m(alpha, gamma)
}

/// Kernel h(x, y) = (1 + y)^x - y^x + y^(-x) - m x y.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qm_h_kernel(x: f64, y: f64, m: f64, out: *mut f64) -> QmStatus {
    match ineq::h_kernel(x, y, m) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Case-1 scalar lower bound on (1 + t)^x (0 < t <= k <= 1).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qm_case1_rhs(t: f64, k: f64, x: f64, m: f64, out: *mut f64) -> QmStatus {
    match ineq::case1_rhs(t, k, x, m) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Case-2 scalar lower bound on (1 + t)^x (t >= k >= 1).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qm_case2_rhs(t: f64, k: f64, x: f64, m: f64, out: *mut f64) -> QmStatus {
    match ineq::case2_rhs(t, k, x, m) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Case-1 chain, tightest first, written into `out6`.
///
/// # Safety
/// `out6` must point to six writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qm_case1_chain(
    t: f64,
    k: f64,
    x: f64,
    m: f64,
    out6: *mut f64,
) -> QmStatus {
    if out6.is_null() {
        set_error("output pointer is null");
        return QmStatus::NullPointer;
    }
    match ineq::case1_chain(t, k, x, m) {
        Ok(chain) => {
            for (i, v) in chain.as_array().into_iter().enumerate() {
                *out6.add(i) = v;
            }
            QmStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Case-2 chain, tightest first, written into `out5`.
///
/// # Safety
/// `out5` must point to five writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qm_case2_chain(
    t: f64,
    k: f64,
    x: f64,
    m: f64,
    out5: *mut f64,
) -> QmStatus {
    if out5.is_null() {
        set_error("output pointer is null");
        return QmStatus::NullPointer;
    }
    match ineq::case2_chain(t, k, x, m) {
        Ok(chain) => {
            for (i, v) in chain.as_array().into_iter().enumerate() {
                *out5.add(i) = v;
            }
            QmStatus::Ok
        }
        Err(e) => fail(e),
    }
}

fn make_params(alpha: f64, gamma: f64, m: f64, k: f64) -> Result<BoundParams, QmStatus> {
    BoundParams::new(alpha, gamma, m, k).map_err(fail)
}

/// Tripartite bound without side information (k = 1 family).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qm_tripartite_bound(
    e_ab: f64,
    e_ac: f64,
    alpha: f64,
    gamma: f64,
    m: f64,
    out: *mut f64,
) -> QmStatus {
    let p = match make_params(alpha, gamma, m, 1.0) {
        Ok(p) => p,
        Err(s) => return s,
    };
    match monogamy::tripartite_bound(e_ab, e_ac, &p) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Tripartite bound exploiting the ratio bound k.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qm_tripartite_bound_with_ratio(
    e_ab: f64,
    e_ac: f64,
    alpha: f64,
    gamma: f64,
    m: f64,
    k: f64,
    out: *mut f64,
) -> QmStatus {
    let p = match make_params(alpha, gamma, m, k) {
        Ok(p) => p,
        Err(s) => return s,
    };
    match monogamy::tripartite_bound_with_ratio(e_ab, e_ac, &p) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// N-partite cascade bound; `tails` must hold `n_pairwise - 1` values.
///
/// # Safety
/// `pairwise` and `tails` must point to the stated number of doubles;
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qm_cascade_bound(
    pairwise: *const f64,
    n_pairwise: usize,
    tails: *const f64,
    n_tails: usize,
    alpha: f64,
    gamma: f64,
    m: f64,
    k: f64,
    out: *mut f64,
) -> QmStatus {
    if pairwise.is_null() || tails.is_null() {
        set_error("input pointer is null");
        return QmStatus::NullPointer;
    }
    let p = match make_params(alpha, gamma, m, k) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let e = std::slice::from_raw_parts(pairwise, n_pairwise);
    let t = std::slice::from_raw_parts(tails, n_tails);
    match monogamy::multipartite_cascade_bound(e, t, &p) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// N-partite split-regime bound with split index `split` (1-based).
///
/// # Safety
/// `pairwise` and `tails` must point to the stated number of doubles;
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qm_split_bound(
    pairwise: *const f64,
    n_pairwise: usize,
    tails: *const f64,
    n_tails: usize,
    split: usize,
    alpha: f64,
    gamma: f64,
    m: f64,
    k: f64,
    out: *mut f64,
) -> QmStatus {
    if pairwise.is_null() || tails.is_null() {
        set_error("input pointer is null");
        return QmStatus::NullPointer;
    }
    let p = match make_params(alpha, gamma, m, k) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let e = std::slice::from_raw_parts(pairwise, n_pairwise).to_vec();
    let t = std::slice::from_raw_parts(tails, n_tails).to_vec();
    let pm = match PartitionedMeasures::new(e, t, split) {
        Ok(pm) => pm,
        Err(e) => return fail(e),
    };
    match monogamy::multipartite_split_bound(&pm, &p) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Scalar power-sum lower bound on (p_1 + ... + p_N)^x for descending
/// positive values.
///
/// # Safety
/// `values` must point to `n` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qm_power_sum_lower_bound(
    values: *const f64,
    n: usize,
    x: f64,
    m: f64,
    out: *mut f64,
) -> QmStatus {
    if values.is_null() {
        set_error("input pointer is null");
        return QmStatus::NullPointer;
    }
    let p = std::slice::from_raw_parts(values, n);
    match monogamy::power_sum_lower_bound(p, x, m) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Descending-order bound over sorted pairwise measures.
///
/// # Safety
/// `measures_desc` must point to `n` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qm_descending_order_bound(
    measures_desc: *const f64,
    n: usize,
    alpha: f64,
    gamma: f64,
    m: f64,
    out: *mut f64,
) -> QmStatus {
    if measures_desc.is_null() {
        set_error("input pointer is null");
        return QmStatus::NullPointer;
    }
    let p = match make_params(alpha, gamma, m, 1.0) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let e = std::slice::from_raw_parts(measures_desc, n);
    match monogamy::descending_order_bound(e, &p) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// The five relaxation levels of the descending-order bound, tightest
/// first, written into `out5`.
///
/// # Safety
/// `measures_desc` must point to `n` doubles; `out5` to five.
#[no_mangle]
pub unsafe extern "C" fn qm_descending_order_chain(
    measures_desc: *const f64,
    n: usize,
    alpha: f64,
    gamma: f64,
    m: f64,
    out5: *mut f64,
) -> QmStatus {
    if measures_desc.is_null() || out5.is_null() {
        set_error("pointer is null");
        return QmStatus::NullPointer;
    }
    let p = match make_params(alpha, gamma, m, 1.0) {
        Ok(p) => p,
        Err(s) => return s,
    };
    let e = std::slice::from_raw_parts(measures_desc, n);
    match monogamy::descending_order_chain(e, &p) {
        Ok(chain) => {
            for (i, v) in chain.as_array().into_iter().enumerate() {
                *out5.add(i) = v;
            }
            QmStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Simple descending bound e_1^a + sum [i^a - (i-1)^a] e_i^a, alpha >= 1.
///
/// # Safety
/// `measures_desc` must point to `n` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qm_ordered_power_bound(
    measures_desc: *const f64,
    n: usize,
    alpha: f64,
    out: *mut f64,
) -> QmStatus {
    if measures_desc.is_null() {
        set_error("input pointer is null");
        return QmStatus::NullPointer;
    }
    let e = std::slice::from_raw_parts(measures_desc, n);
    match monogamy::ordered_power_bound(e, alpha) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Runs the full verification sweep; returns 0 when every suite
/// passes, 1 otherwise.
#[no_mangle]
pub extern "C" fn qm_verify_run(seed: u64, factor: u64, threads: usize) -> i32 {
    let report = qmono::verify::run_all(seed, factor.max(1), threads.max(1));
    i32::from(!report.all_pass())
}
