//! C ABI for the sgp numerical semigroup toolkit.
//!
//! Semigroups travel as opaque [`SgpSemigroup`] handles: the `sgp_new_*`
//! constructors allocate one, [`sgp_free`] releases it. Every fallible call
//! returns an [`SgpStatus`] and writes its result through out-pointers.
//!
//! Set-valued queries fill a caller-supplied `int64_t` buffer. The required
//! length always comes back through `written`; when it exceeds `cap` the
//! call returns [`SgpStatus::BufferTooSmall`] and leaves the buffer alone,
//! so a `cap = 0` probe followed by an exact-size call always works.
//!
//! The generated header lives at `include/sgp.h`.

use std::ffi::CStr;
use std::os::raw::c_char;
use std::ptr;

use sgp::classify::{
    classify_almost_symmetric_max_reduced, classify_med_max_reduced, construct_delta_fm,
    construct_delta_minus, construct_half_line, has_maximal_reduced_type, is_almost_symmetric,
    is_half_line, is_med, is_symmetric, Classification,
};
use sgp::enumerate::{count_by_predicate, verify, Predicate};
use sgp::{Error, IntSet, NumericalSemigroup};

/// Opaque semigroup handle; create with the `sgp_new_*` constructors and
/// release with `sgp_free`.
pub struct SgpSemigroup(NumericalSemigroup);

/// Outcome of a fallible call. Zero is success; everything else names the
/// first problem encountered.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgpStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// The generator list was empty.
    EmptyGenerators = 2,
    /// An element that must be positive was zero or negative.
    NotPositive = 3,
    /// The generators have a common divisor greater than one.
    GcdNotOne = 4,
    /// The proposed gap set is not the complement of anything additively
    /// closed.
    NotClosed = 5,
    /// The modulus passed to `sgp_apery_set` is a gap.
    NotMember = 6,
    /// The semigroup has a single minimal generator, so no second one.
    NoSecondGenerator = 7,
    /// An input is large enough to overflow internal arithmetic.
    Overflow = 8,
    /// Structurally invalid parameters for the requested family.
    BadParameters = 9,
    /// The requested Frobenius number is a multiple of the multiplicity.
    Divides = 10,
    /// The genus bound exceeds the configured cap.
    CapExceeded = 11,
    /// No registered claim has the given identifier.
    UnknownTheorem = 12,
    /// No filter has the given name.
    UnknownPredicate = 13,
    /// A serialized record declares a schema this build does not read.
    UnsupportedSchema = 14,
    /// The out buffer cannot hold the result; `written` carries the
    /// required length.
    BufferTooSmall = 15,
}

/// Family tag reported by the classification calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SgpFamily {
    HalfLine = 0,
    Symmetric = 1,
    DeltaMinus = 2,
    DeltaFm = 3,
    No = 4,
}

fn status_from(e: &Error) -> SgpStatus {
    match e {
        Error::EmptyGenerators => SgpStatus::EmptyGenerators,
        Error::NotPositive(_) => SgpStatus::NotPositive,
        Error::GcdNotOne(_) => SgpStatus::GcdNotOne,
        Error::NotClosed(_, _) => SgpStatus::NotClosed,
        Error::NotMember(_) => SgpStatus::NotMember,
        Error::NoSecondGenerator => SgpStatus::NoSecondGenerator,
        Error::Overflow(_) => SgpStatus::Overflow,
        Error::BadParameters(_) => SgpStatus::BadParameters,
        Error::Divides { .. } => SgpStatus::Divides,
        Error::CapExceeded { .. } => SgpStatus::CapExceeded,
        Error::UnknownTheorem(_) => SgpStatus::UnknownTheorem,
        Error::UnknownPredicate(_) => SgpStatus::UnknownPredicate,
        Error::UnsupportedSchema(_) => SgpStatus::UnsupportedSchema,
    }
}

/// Boxes a construction result into `out`; `out` holds null on failure.
unsafe fn emit(
    result: Result<NumericalSemigroup, Error>,
    out: *mut *mut SgpSemigroup,
) -> SgpStatus {
    if out.is_null() {
        return SgpStatus::NullArgument;
    }
    match result {
        Ok(s) => {
            unsafe { *out = Box::into_raw(Box::new(SgpSemigroup(s))) };
            SgpStatus::Ok
        }
        Err(e) => {
            unsafe { *out = ptr::null_mut() };
            status_from(&e)
        }
    }
}

/// Copies a sorted set into the caller's buffer under the `written`/`cap`
/// protocol described at the top of the header.
unsafe fn fill(set: &IntSet, buf: *mut i64, cap: usize, written: *mut usize) -> SgpStatus {
    if written.is_null() {
        return SgpStatus::NullArgument;
    }
    let needed = set.len();
    unsafe { *written = needed };
    if needed > cap {
        return SgpStatus::BufferTooSmall;
    }
    if needed > 0 {
        if buf.is_null() {
            return SgpStatus::NullArgument;
        }
        unsafe { std::slice::from_raw_parts_mut(buf, needed) }.copy_from_slice(set.as_slice());
    }
    SgpStatus::Ok
}

unsafe fn handle<'a>(s: *const SgpSemigroup) -> Option<&'a NumericalSemigroup> {
    unsafe { s.as_ref() }.map(|h| &h.0)
}

/// Builds the numerical semigroup generated by `gens[0..len]`.
///
/// # Safety
/// `gens` must point to `len` readable `int64_t` values (it may be null only
/// when `len` is zero) and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sgp_new_from_generators(
    gens: *const i64,
    len: usize,
    out: *mut *mut SgpSemigroup,
) -> SgpStatus {
    if gens.is_null() && len > 0 {
        return SgpStatus::NullArgument;
    }
    let slice = if len == 0 {
        &[][..]
    } else {
        unsafe { std::slice::from_raw_parts(gens, len) }
    };
    unsafe { emit(NumericalSemigroup::from_generators(slice), out) }
}

/// Builds the numerical semigroup whose gap set is exactly
/// `gaps[0..len]`. Fails with `NotClosed` when no such semigroup exists.
///
/// # Safety
/// `gaps` must point to `len` readable `int64_t` values (it may be null only
/// when `len` is zero) and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sgp_new_from_gaps(
    gaps: *const i64,
    len: usize,
    out: *mut *mut SgpSemigroup,
) -> SgpStatus {
    if gaps.is_null() && len > 0 {
        return SgpStatus::NullArgument;
    }
    let set: IntSet = if len == 0 {
        IntSet::new()
    } else {
        IntSet::from_vec(unsafe { std::slice::from_raw_parts(gaps, len) }.to_vec())
    };
    unsafe { emit(NumericalSemigroup::from_gaps(&set), out) }
}

/// Builds the half-line with the given multiplicity: zero together with
/// every integer from `multiplicity` on.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sgp_new_half_line(
    multiplicity: i64,
    out: *mut *mut SgpSemigroup,
) -> SgpStatus {
    unsafe { emit(construct_half_line(multiplicity), out) }
}

/// Builds the half-line of the given multiplicity with
/// `2 * multiplicity - semigroup_type` removed. Requires
/// `1 <= semigroup_type <= multiplicity - 1`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sgp_new_delta_minus(
    multiplicity: i64,
    semigroup_type: i64,
    out: *mut *mut SgpSemigroup,
) -> SgpStatus {
    unsafe { emit(construct_delta_minus(multiplicity, semigroup_type), out) }
}

/// Builds the semigroup of all multiples of `multiplicity` joined with
/// every integer past `frobenius`. Requires `2 <= multiplicity < frobenius`
/// and that `multiplicity` does not divide `frobenius`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sgp_new_delta_fm(
    frobenius: i64,
    multiplicity: i64,
    out: *mut *mut SgpSemigroup,
) -> SgpStatus {
    unsafe { emit(construct_delta_fm(frobenius, multiplicity), out) }
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `s` must have come from an `sgp_new_*` constructor and must not be used
/// after this call.
#[no_mangle]
pub unsafe extern "C" fn sgp_free(s: *mut SgpSemigroup) {
    if !s.is_null() {
        drop(unsafe { Box::from_raw(s) });
    }
}

/// Frobenius number: the largest integer outside the semigroup, `-1` for
/// the naturals. Returns `INT64_MIN` on a null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_frobenius(s: *const SgpSemigroup) -> i64 {
    unsafe { handle(s) }.map_or(i64::MIN, |s| s.frobenius())
}

/// Multiplicity: the least positive element. Returns `INT64_MIN` on a null
/// handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_multiplicity(s: *const SgpSemigroup) -> i64 {
    unsafe { handle(s) }.map_or(i64::MIN, |s| s.multiplicity())
}

/// Genus: the number of gaps. Returns `INT64_MIN` on a null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_genus(s: *const SgpSemigroup) -> i64 {
    unsafe { handle(s) }.map_or(i64::MIN, |s| s.genus())
}

/// Type: the number of pseudo-Frobenius elements. Returns `INT64_MIN` on a
/// null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_type(s: *const SgpSemigroup) -> i64 {
    unsafe { handle(s) }.map_or(i64::MIN, |s| s.semigroup_type())
}

/// Reduced type: the number of pseudo-Frobenius elements within one
/// multiplicity of the Frobenius number. Returns `INT64_MIN` on a null
/// handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_reduced_type(s: *const SgpSemigroup) -> i64 {
    unsafe { handle(s) }.map_or(i64::MIN, |s| s.reduced_type())
}

/// Embedding dimension: the number of minimal generators. Returns
/// `INT64_MIN` on a null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_embedding_dimension(s: *const SgpSemigroup) -> i64 {
    unsafe { handle(s) }.map_or(i64::MIN, |s| s.embedding_dimension())
}

/// Membership test. Returns false on a null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_contains(s: *const SgpSemigroup, x: i64) -> bool {
    unsafe { handle(s) }.map_or(false, |s| s.contains(x))
}

/// Second minimal generator, written to `out`. Fails with
/// `NoSecondGenerator` when the semigroup is generated by one element.
///
/// # Safety
/// `s` must be a live handle or null; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sgp_second_generator(s: *const SgpSemigroup, out: *mut i64) -> SgpStatus {
    if out.is_null() {
        return SgpStatus::NullArgument;
    }
    let Some(s) = (unsafe { handle(s) }) else {
        return SgpStatus::NullArgument;
    };
    match s.second_generator() {
        Ok(n) => {
            unsafe { *out = n };
            SgpStatus::Ok
        }
        Err(e) => status_from(&e),
    }
}

/// True when the type is one. Returns false on a null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_is_symmetric(s: *const SgpSemigroup) -> bool {
    unsafe { handle(s) }.map_or(false, is_symmetric)
}

/// True when twice the genus equals the Frobenius number plus the type.
/// Returns false on a null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_is_almost_symmetric(s: *const SgpSemigroup) -> bool {
    unsafe { handle(s) }.map_or(false, is_almost_symmetric)
}

/// True when the embedding dimension equals the multiplicity. Returns false
/// on a null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_is_med(s: *const SgpSemigroup) -> bool {
    unsafe { handle(s) }.map_or(false, is_med)
}

/// True when the reduced type equals the type. Returns false on a null
/// handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_has_max_reduced_type(s: *const SgpSemigroup) -> bool {
    unsafe { handle(s) }.map_or(false, has_maximal_reduced_type)
}

/// True when the Frobenius number is below the multiplicity. Returns false
/// on a null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_is_half_line(s: *const SgpSemigroup) -> bool {
    unsafe { handle(s) }.map_or(false, is_half_line)
}

/// True when the semigroup is all of the naturals. Returns false on a null
/// handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sgp_is_naturals(s: *const SgpSemigroup) -> bool {
    unsafe { handle(s) }.map_or(false, |s| s.is_naturals())
}

/// Writes the gap set, ascending.
///
/// # Safety
/// `s` must be a live handle or null; `buf` must hold `cap` writable
/// `int64_t` values (null allowed when `cap` is zero); `written` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sgp_gaps(
    s: *const SgpSemigroup,
    buf: *mut i64,
    cap: usize,
    written: *mut usize,
) -> SgpStatus {
    let Some(s) = (unsafe { handle(s) }) else {
        return SgpStatus::NullArgument;
    };
    unsafe { fill(&s.gaps(), buf, cap, written) }
}

/// Writes the minimal generating set, ascending.
///
/// # Safety
/// Same contract as `sgp_gaps`.
#[no_mangle]
pub unsafe extern "C" fn sgp_minimal_generators(
    s: *const SgpSemigroup,
    buf: *mut i64,
    cap: usize,
    written: *mut usize,
) -> SgpStatus {
    let Some(s) = (unsafe { handle(s) }) else {
        return SgpStatus::NullArgument;
    };
    unsafe { fill(s.minimal_generators(), buf, cap, written) }
}

/// Writes the pseudo-Frobenius elements, ascending.
///
/// # Safety
/// Same contract as `sgp_gaps`.
#[no_mangle]
pub unsafe extern "C" fn sgp_pseudo_frobenius(
    s: *const SgpSemigroup,
    buf: *mut i64,
    cap: usize,
    written: *mut usize,
) -> SgpStatus {
    let Some(s) = (unsafe { handle(s) }) else {
        return SgpStatus::NullArgument;
    };
    unsafe { fill(&s.pseudo_frobenius(), buf, cap, written) }
}

/// Writes the reduced pseudo-Frobenius elements, ascending.
///
/// # Safety
/// Same contract as `sgp_gaps`.
#[no_mangle]
pub unsafe extern "C" fn sgp_reduced_pf(
    s: *const SgpSemigroup,
    buf: *mut i64,
    cap: usize,
    written: *mut usize,
) -> SgpStatus {
    let Some(s) = (unsafe { handle(s) }) else {
        return SgpStatus::NullArgument;
    };
    unsafe { fill(&s.reduced_pf(), buf, cap, written) }
}

/// Writes the Apéry set with respect to `n`, ascending. Fails with
/// `NotMember` when `n` is not a positive element of the semigroup.
///
/// # Safety
/// Same contract as `sgp_gaps`.
#[no_mangle]
pub unsafe extern "C" fn sgp_apery_set(
    s: *const SgpSemigroup,
    n: i64,
    buf: *mut i64,
    cap: usize,
    written: *mut usize,
) -> SgpStatus {
    let Some(s) = (unsafe { handle(s) }) else {
        return SgpStatus::NullArgument;
    };
    match s.apery_set(n) {
        Ok(ap) => unsafe { fill(&ap.sorted(), buf, cap, written) },
        Err(e) => status_from(&e),
    }
}

fn family_parts(c: &Classification) -> (SgpFamily, i64, i64) {
    match c {
        Classification::HalfLine => (SgpFamily::HalfLine, 0, 0),
        Classification::Symmetric => (SgpFamily::Symmetric, 0, 0),
        Classification::DeltaMinus {
            multiplicity,
            semigroup_type,
        } => (SgpFamily::DeltaMinus, *multiplicity, *semigroup_type),
        Classification::DeltaFm {
            frobenius,
            multiplicity,
        } => (SgpFamily::DeltaFm, *frobenius, *multiplicity),
        Classification::No => (SgpFamily::No, 0, 0),
    }
}

unsafe fn classify_with(
    s: *const SgpSemigroup,
    run: fn(&NumericalSemigroup) -> Classification,
    family: *mut SgpFamily,
    param_a: *mut i64,
    param_b: *mut i64,
) -> SgpStatus {
    if family.is_null() || param_a.is_null() || param_b.is_null() {
        return SgpStatus::NullArgument;
    }
    let Some(s) = (unsafe { handle(s) }) else {
        return SgpStatus::NullArgument;
    };
    let (kind, a, b) = family_parts(&run(s));
    unsafe {
        *family = kind;
        *param_a = a;
        *param_b = b;
    }
    SgpStatus::Ok
}

/// Decides whether the semigroup is almost symmetric with maximal reduced
/// type and names the family that makes it so. `DeltaMinus` reports the
/// multiplicity in `param_a` and the type in `param_b`; the other verdicts
/// leave both at zero.
///
/// # Safety
/// `s` must be a live handle or null; `family`, `param_a`, and `param_b`
/// must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sgp_classify_almost_symmetric(
    s: *const SgpSemigroup,
    family: *mut SgpFamily,
    param_a: *mut i64,
    param_b: *mut i64,
) -> SgpStatus {
    unsafe {
        classify_with(
            s,
            classify_almost_symmetric_max_reduced,
            family,
            param_a,
            param_b,
        )
    }
}

/// Decides whether the semigroup has maximal embedding dimension together
/// with maximal reduced type and names the family that makes it so.
/// `DeltaFm` reports the Frobenius number in `param_a` and the multiplicity
/// in `param_b`; the other verdicts leave both at zero.
///
/// # Safety
/// Same contract as `sgp_classify_almost_symmetric`.
#[no_mangle]
pub unsafe extern "C" fn sgp_classify_med(
    s: *const SgpSemigroup,
    family: *mut SgpFamily,
    param_a: *mut i64,
    param_b: *mut i64,
) -> SgpStatus {
    unsafe { classify_with(s, classify_med_max_reduced, family, param_a, param_b) }
}

/// Counts semigroups of each genus from zero through `max_genus` that
/// satisfy the named filter (`"none"`, `"symmetric"`, `"almost_symmetric"`,
/// `"med"`, or `"max_reduced_type"`). `counts` receives `max_genus + 1`
/// entries under the usual `written`/`cap` protocol.
///
/// # Safety
/// `filter` must be a valid NUL-terminated string; `counts` must hold `cap`
/// writable `uint64_t` values (null allowed when `cap` is zero); `written`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sgp_count_by_genus(
    max_genus: u32,
    filter: *const c_char,
    counts: *mut u64,
    cap: usize,
    written: *mut usize,
) -> SgpStatus {
    if filter.is_null() || written.is_null() {
        return SgpStatus::NullArgument;
    }
    let Ok(name) = (unsafe { CStr::from_ptr(filter) }).to_str() else {
        return SgpStatus::BadParameters;
    };
    let predicate: Predicate = match name.parse() {
        Ok(p) => p,
        Err(e) => return status_from(&e),
    };
    let rows = match count_by_predicate(max_genus, predicate) {
        Ok(rows) => rows,
        Err(e) => return status_from(&e),
    };
    unsafe { *written = rows.len() };
    if rows.len() > cap {
        return SgpStatus::BufferTooSmall;
    }
    if !rows.is_empty() {
        if counts.is_null() {
            return SgpStatus::NullArgument;
        }
        let dst = unsafe { std::slice::from_raw_parts_mut(counts, rows.len()) };
        for (slot, (_, count)) in dst.iter_mut().zip(&rows) {
            *slot = *count;
        }
    }
    SgpStatus::Ok
}

/// Runs one registered claim against every semigroup of genus at most
/// `max_genus`. Writes how many semigroups the claim constrains to
/// `universe` and how many violated it to `violations`; zero violations
/// means the claim held.
///
/// # Safety
/// `theorem_id` must be a valid NUL-terminated string; `universe` and
/// `violations` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sgp_verify(
    theorem_id: *const c_char,
    max_genus: u32,
    universe: *mut u64,
    violations: *mut u64,
) -> SgpStatus {
    if theorem_id.is_null() || universe.is_null() || violations.is_null() {
        return SgpStatus::NullArgument;
    }
    let Ok(id) = (unsafe { CStr::from_ptr(theorem_id) }).to_str() else {
        return SgpStatus::BadParameters;
    };
    match verify(id, max_genus) {
        Ok(report) => {
            unsafe {
                *universe = report.universe_size;
                *violations = report.violations.len() as u64;
            }
            SgpStatus::Ok
        }
        Err(e) => status_from(&e),
    }
}

/// Library version as a static NUL-terminated string; do not free.
#[no_mangle]
pub extern "C" fn sgp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
