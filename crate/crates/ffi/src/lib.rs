//! C ABI for `linper`.
//!
//! Every fallible function returns a [`LinperStatus`]; on failure a message
//! is available from [`linper_last_error`] on the same thread. Results that
//! own memory are returned through opaque handles that must be released with
//! the matching `*_free` function. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use linper::coweights::Partition;
use linper::flagmod::{cfl_count_brute, cfl_count_poly, collided_fiber_mass, CollidedMass};
use linper::levi::{is_antistandard, parse_blocks, sweep_a12, BlockLevi};
use linper::rsorbits::{k_orbits, verify_counts};
use linper::schur::{lemma242_decomposition, verify_lemma242, SchurDecomposition};
use linper::selftest::{run_all, Bounds};
use linper::stratcomb::verify_induced_iso;
use linper::Error;

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinperStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    SizeBound = 3,
    NonMonic = 4,
    IndexOutOfRange = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> LinperStatus {
    match e {
        Error::SizeBound(_) => LinperStatus::SizeBound,
        Error::NonMonic => LinperStatus::NonMonic,
        _ => LinperStatus::InvalidArgument,
    }
}

/// Runs `body`, converting errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (LinperStatus, String)>) -> LinperStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LinperStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LinperStatus::Panic
        }
    }
}

trait IntoFfi<T> {
    fn ffi(self) -> Result<T, (LinperStatus, String)>;
}

impl<T> IntoFfi<T> for linper::Result<T> {
    fn ffi(self) -> Result<T, (LinperStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

fn null() -> (LinperStatus, String) {
    (LinperStatus::NullPointer, "null pointer argument".into())
}

fn out<'a, T>(p: *mut T) -> Result<&'a mut T, (LinperStatus, String)> {
    // SAFETY: the caller promises `p` is either null or valid for writes.
    unsafe { p.as_mut() }.ok_or_else(null)
}

fn c_str<'a>(p: *const c_char) -> Result<&'a str, (LinperStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    // SAFETY: non-null and nul-terminated by contract.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|e| (LinperStatus::InvalidArgument, e.to_string()))
}

fn partition_arg(parts: *const u32, len: usize) -> Result<Partition, (LinperStatus, String)> {
    if len == 0 {
        return Ok(Partition::empty());
    }
    if parts.is_null() {
        return Err(null());
    }
    // SAFETY: non-null and valid for `len` reads by contract.
    let slice = unsafe { std::slice::from_raw_parts(parts, len) };
    Partition::new(slice.to_vec()).ffi()
}

/// Message for the last failed call on this thread, or null after a
/// success. Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn linper_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn linper_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn linper_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Opaque Schur decomposition.
pub struct LinperSchurDecomposition {
    entries: Vec<(Vec<u32>, u64)>,
}

/// Decomposes `Sym^d(Λ²V) ⊗ Sym^{d'−d}V` for `dim V = 2n`.
#[no_mangle]
pub extern "C" fn linper_lemma242_decompose(
    n: usize,
    d: u32,
    dp: u32,
    out_handle: *mut *mut LinperSchurDecomposition,
) -> LinperStatus {
    guard(|| {
        let slot = out(out_handle)?;
        if n == 0 {
            return Err((LinperStatus::InvalidArgument, "n must be positive".into()));
        }
        let dec: SchurDecomposition = lemma242_decomposition(n, d, dp).ffi()?;
        let entries = dec
            .multiplicities()
            .iter()
            .map(|(l, &m)| (l.parts().to_vec(), m))
            .collect();
        *slot = Box::into_raw(Box::new(LinperSchurDecomposition { entries }));
        Ok(())
    })
}

/// Number of distinct constituents.
///
/// # Safety
/// `h` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn linper_schur_decomposition_len(h: *const LinperSchurDecomposition) -> usize {
    h.as_ref().map_or(0, |h| h.entries.len())
}

/// Copies constituent `index` into `parts` (capacity `cap`), writing its
/// length and multiplicity. Returns `BUFFER_TOO_SMALL` with `len` set when
/// `cap` is insufficient.
///
/// # Safety
/// `h` must be a live handle; `parts` must be valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn linper_schur_decomposition_entry(
    h: *const LinperSchurDecomposition,
    index: usize,
    parts: *mut u32,
    cap: usize,
    len: *mut usize,
    multiplicity: *mut u64,
) -> LinperStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(null)?;
        let (p, m) = h
            .entries
            .get(index)
            .ok_or((LinperStatus::IndexOutOfRange, format!("index {index} out of range")))?;
        *out(len)? = p.len();
        *out(multiplicity)? = *m;
        if p.len() > cap {
            return Err((LinperStatus::BufferTooSmall, format!("need {} slots", p.len())));
        }
        if !p.is_empty() {
            if parts.is_null() {
                return Err(null());
            }
            ptr::copy_nonoverlapping(p.as_ptr(), parts, p.len());
        }
        Ok(())
    })
}

/// # Safety
/// `h` must come from [`linper_lemma242_decompose`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn linper_schur_decomposition_free(h: *mut LinperSchurDecomposition) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Opaque rational function in `q`.
pub struct LinperQRat {
    mass: CollidedMass,
}

/// Summary of a collided fiber mass.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct LinperMassSummary {
    pub degree: i64,
    pub leading: i64,
    pub e_count: u64,
    pub matches: bool,
}

/// Collided fiber mass for `0 ≤ d ≤ d'`.
#[no_mangle]
pub extern "C" fn linper_collided_fiber_mass(
    d: u32,
    dp: u32,
    out_handle: *mut *mut LinperQRat,
) -> LinperStatus {
    guard(|| {
        let slot = out(out_handle)?;
        let mass = collided_fiber_mass(d, dp).ffi()?;
        *slot = Box::into_raw(Box::new(LinperQRat { mass }));
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn linper_qrat_summary(
    h: *const LinperQRat,
    summary: *mut LinperMassSummary,
) -> LinperStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(null)?;
        let narrow = |v: i128| {
            i64::try_from(v).map_err(|_| (LinperStatus::SizeBound, "value exceeds 64 bits".to_string()))
        };
        *out(summary)? = LinperMassSummary {
            degree: h.mass.degree,
            leading: narrow(h.mass.leading)?,
            e_count: u64::try_from(h.mass.e_count)
                .map_err(|_| (LinperStatus::SizeBound, "value exceeds 64 bits".to_string()))?,
            matches: h.mass.matches(),
        };
        Ok(())
    })
}

/// Evaluates the mass at an integer `q` as the reduced fraction `num/den`.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn linper_qrat_eval(
    h: *const LinperQRat,
    q: i64,
    num: *mut i64,
    den: *mut i64,
) -> LinperStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(null)?;
        let (p, r) = h
            .mass
            .mass
            .eval(i128::from(q))
            .ok_or((LinperStatus::InvalidArgument, format!("pole at q = {q}")))?;
        let fit = |v: i128| i64::try_from(v).map_err(|_| (LinperStatus::SizeBound, "value exceeds 64 bits".to_string()));
        *out(num)? = fit(p)?;
        *out(den)? = fit(r)?;
        Ok(())
    })
}

/// # Safety
/// `h` must come from [`linper_collided_fiber_mass`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn linper_qrat_free(h: *mut LinperQRat) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Opaque block Levi subgroup of `GL_N`.
pub struct LinperLevi {
    levi: BlockLevi,
}

/// Sweep totals for the Levi inequality check.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct LinperLeviSweep {
    pub cells: u64,
    pub mu_checked: u64,
    pub equalities: u64,
    pub failures: u64,
    pub holds: bool,
}

/// Parses blocks written like `"1,3/2,4"`.
#[no_mangle]
pub extern "C" fn linper_levi_new(
    n: usize,
    blocks: *const c_char,
    out_handle: *mut *mut LinperLevi,
) -> LinperStatus {
    guard(|| {
        let slot = out(out_handle)?;
        let levi = parse_blocks(n, c_str(blocks)?).ffi()?;
        *slot = Box::into_raw(Box::new(LinperLevi { levi }));
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn linper_levi_is_antistandard(h: *const LinperLevi, result: *mut bool) -> LinperStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(null)?;
        *out(result)? = is_antistandard(&h.levi);
        Ok(())
    })
}

/// All `λ` with entries in `[−lambda_bound, lambda_bound]` against all
/// dominant `ν` with entries in `[−nu_bound, nu_bound]`.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn linper_levi_sweep(
    h: *const LinperLevi,
    lambda_bound: i64,
    nu_bound: i64,
    result: *mut LinperLeviSweep,
) -> LinperStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(null)?;
        if lambda_bound < 0 || nu_bound < 0 {
            return Err((LinperStatus::InvalidArgument, "bounds must be nonnegative".into()));
        }
        let s = sweep_a12(&h.levi, lambda_bound, nu_bound).ffi()?;
        *out(result)? = LinperLeviSweep {
            cells: s.cells as u64,
            mu_checked: s.mu_checked as u64,
            equalities: s.equalities as u64,
            failures: s.failures.len() as u64,
            holds: s.holds(),
        };
        Ok(())
    })
}

/// # Safety
/// `h` must come from [`linper_levi_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn linper_levi_free(h: *mut LinperLevi) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

#[no_mangle]
pub extern "C" fn linper_verify_lemma242(n: usize, d: u32, dp: u32, result: *mut bool) -> LinperStatus {
    guard(|| {
        let slot = out(result)?;
        if n == 0 {
            return Err((LinperStatus::InvalidArgument, "n must be positive".into()));
        }
        *slot = verify_lemma242(n, d, dp).ffi()?;
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn linper_verify_induced_iso(d: usize, dp: usize, result: *mut bool) -> LinperStatus {
    guard(|| {
        let slot = out(result)?;
        if d + dp > 7 {
            return Err((LinperStatus::SizeBound, format!("d + d' = {} exceeds 7", d + dp)));
        }
        *slot = verify_induced_iso(d, dp).ffi()?;
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn linper_k_orbits(d: usize, dp: usize, q: u32, result: *mut u64) -> LinperStatus {
    guard(|| {
        let slot = out(result)?;
        *slot = k_orbits(d, dp, q).ffi()? as u64;
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn linper_verify_counts(d: usize, dp: usize, q: u32, result: *mut bool) -> LinperStatus {
    guard(|| {
        let slot = out(result)?;
        *slot = verify_counts(d, dp, q).ffi()?;
        Ok(())
    })
}

/// Exhaustive complete-flag count for the module of type `parts` over `F_q`.
///
/// # Safety
/// `parts` must be valid for `len` reads (may be null when `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn linper_cfl_count_brute(
    parts: *const u32,
    len: usize,
    q: u32,
    result: *mut u64,
) -> LinperStatus {
    guard(|| {
        let slot = out(result)?;
        let mu = partition_arg(parts, len)?;
        *slot = cfl_count_brute(&mu, q).ffi()? as u64;
        Ok(())
    })
}

/// Coefficients of the complete-flag count polynomial, ascending in `q`.
/// Writes the number of coefficients to `len`; returns `BUFFER_TOO_SMALL`
/// when `cap` is insufficient.
///
/// # Safety
/// `parts` must be valid for `parts_len` reads; `coeffs` for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn linper_cfl_count_poly(
    parts: *const u32,
    parts_len: usize,
    coeffs: *mut i64,
    cap: usize,
    len: *mut usize,
) -> LinperStatus {
    guard(|| {
        let mu = partition_arg(parts, parts_len)?;
        let poly = cfl_count_poly(&mu);
        let c = poly.coeffs();
        *out(len)? = c.len();
        if c.len() > cap {
            return Err((LinperStatus::BufferTooSmall, format!("need {} slots", c.len())));
        }
        for (i, &v) in c.iter().enumerate() {
            let v = i64::try_from(v).map_err(|_| (LinperStatus::SizeBound, "coefficient exceeds 64 bits".to_string()))?;
            *coeffs.add(i) = v;
        }
        Ok(())
    })
}

/// Runs every acceptance check at default bounds. Bit `i` of `passed_mask`
/// is set when criterion `i + 1` passes; `report_json`, if non-null,
/// receives a JSON report to be freed with [`linper_string_free`].
///
/// # Safety
/// `passed_mask` must be valid for writes; `report_json` must be null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn linper_selftest(passed_mask: *mut u32, report_json: *mut *mut c_char) -> LinperStatus {
    guard(|| {
        let mask = out(passed_mask)?;
        let results = run_all(&Bounds::default());
        *mask = results
            .iter()
            .filter(|r| r.passed)
            .fold(0, |m, r| m | 1 << (r.id - 1));
        if !report_json.is_null() {
            let text = serde_json::to_string(&results)
                .map_err(|e| (LinperStatus::Panic, e.to_string()))?;
            *report_json = CString::new(text).expect("json has no nul").into_raw();
        }
        Ok(())
    })
}
