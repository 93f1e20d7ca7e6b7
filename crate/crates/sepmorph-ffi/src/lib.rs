//! C ABI for the sepmorph obstruction engine.
//!
//! Conventions, uniform across the whole surface:
//!
//! * Every fallible call returns an [`SmStatus`]; `SM_STATUS_OK` is zero.
//!   On failure a human-readable message is stored per thread and can be
//!   read with [`sm_last_error`].
//! * Handles (`SmSurface*`, `SmScheme*`) are opaque. They are created by
//!   `sm_*_parse`/`sm_*_builtin` calls, owned by the caller and released
//!   with the matching `sm_*_free`. Freeing `NULL` is a no-op. Handles are
//!   immutable, so sharing one across threads is safe.
//! * Text comes back through a caller-owned byte buffer: the required
//!   size including the terminating NUL is always written to `*len`, and
//!   `SM_STATUS_BUFFER_TOO_SMALL` is returned when `cap` is not enough.
//!   Calling with `buf == NULL` and `cap == 0` first is the intended way
//!   to size the buffer. Integer lists use the same protocol with `*len`
//!   counting values instead of bytes.
//!
//! Panics never unwind across the boundary; they surface as
//! `SM_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use sepmorph::obstruct::{self, CurveData, ObstructionVerdict, Rule};
use sepmorph::scheme::{self, RealScheme};
use sepmorph::{construct, lattice, surface_file, Error, SurfaceLattice};

/// Result of a C-ABI call. Zero is success; everything else is a failure
/// and leaves a message readable through `sm_last_error`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmStatus {
    /// The call succeeded.
    Ok = 0,
    /// The inputs describe no valid object (bad degree, component count,
    /// scheme text, surface data, trace, or an out-of-range query).
    InvalidInput = 1,
    /// The library caught itself producing contradictory results. Not a
    /// caller error; please report it.
    Inconsistent = 2,
    /// A required pointer argument was `NULL`.
    NullArgument = 3,
    /// A string argument was not valid UTF-8.
    Utf8 = 4,
    /// The output buffer cannot hold the result; `*len` holds the
    /// required size.
    BufferTooSmall = 5,
    /// An internal panic was caught at the boundary.
    Panic = 6,
}

/// Which obstruction rule produced a verdict. `SM_RULE_NONE` marks
/// verdicts where no rule excludes the queried degree.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmRule {
    None = 0,
    ThmMain = 1,
    ThmMainD1 = 2,
    PlaneOddClosedForm = 3,
    PlaneEvenClosedForm = 4,
    QuadricEvenClosedForm = 5,
    QuadricOddClosedForm = 6,
    QuinticSpecialCase = 7,
}

/// Scheme check: the curve degree must be positive.
pub const SM_CHECK_DEGREE_POSITIVE: u32 = 1;
/// Scheme check: a plane scheme has a pseudoline exactly for odd degree.
pub const SM_CHECK_PSEUDOLINE_PARITY: u32 = 1 << 1;
/// Scheme check: the component count exceeds g + 1.
pub const SM_CHECK_HARNACK_KLEIN: u32 = 1 << 2;
/// Scheme check: an oval nest is deeper than the degree allows.
pub const SM_CHECK_NEST_DEPTH: u32 = 1 << 3;
/// Scheme check: the component count has the wrong parity for a
/// separating curve of this class.
pub const SM_CHECK_PARITY: u32 = 1 << 4;

/// Answer of an obstruction query for one curve. When `applies` is true,
/// separating morphisms of degree exactly `l` do not exist and
/// `min_sep_degree` is a valid lower bound `l + 1`; otherwise the bound
/// degrades to `l` and the chain fields report why the rule refused.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmVerdict {
    /// Number of real connected components the query was made for.
    pub l: i64,
    /// Arithmetic genus of the curve class.
    pub genus: i64,
    pub applies: bool,
    pub rule: SmRule,
    /// Parity correction, 0 or 1.
    pub epsilon: i64,
    /// True when the rule reserves intersection points on a residual
    /// curve; the count is then in `m`.
    pub has_m: bool,
    pub m: i64,
    /// The rule applies iff `left_bound < middle < right_bound`.
    pub left_bound: i64,
    pub middle: i64,
    pub right_bound: i64,
    /// Number of rule hypotheses that failed; zero iff `applies`.
    pub failed_count: i64,
    /// True for the quintic special case, whose justification lies
    /// outside the closed-form rules.
    pub beyond_closed_forms: bool,
    /// Lower bound for the degree of any separating morphism.
    pub min_sep_degree: i64,
}

/// Component counts and shape measures of a parsed scheme.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmSchemeStats {
    /// Total components: ovals plus the pseudoline if present.
    pub l: i64,
    /// Deepest oval nesting, 0 for an empty scheme.
    pub depth: i64,
    /// Unordered oval pairs that are either disjoint or nested.
    pub injective_pairs: i64,
    pub pseudoline: bool,
}

/// Opaque handle to an intersection-lattice description of a surface.
pub struct SmSurface {
    inner: Arc<SurfaceLattice>,
}

/// Opaque handle to a parsed real scheme.
pub struct SmScheme {
    inner: RealScheme,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let owned = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = owned);
}

fn fail(e: &Error) -> SmStatus {
    set_last_error(&e.to_string());
    match e.exit_code() {
        2 => SmStatus::Inconsistent,
        _ => SmStatus::InvalidInput,
    }
}

fn null_arg() -> SmStatus {
    set_last_error("required pointer argument is NULL");
    SmStatus::NullArgument
}

fn guard(body: impl FnOnce() -> SmStatus) -> SmStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic caught at the C boundary");
            SmStatus::Panic
        }
    }
}

unsafe fn cstr_arg<'a>(p: *const c_char) -> Result<&'a str, SmStatus> {
    if p.is_null() {
        return Err(null_arg());
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_last_error("string argument is not valid UTF-8");
        SmStatus::Utf8
    })
}

unsafe fn write_text(s: &str, buf: *mut c_char, cap: usize, len: *mut usize) -> SmStatus {
    if len.is_null() {
        return null_arg();
    }
    let needed = s.len() + 1;
    *len = needed;
    if buf.is_null() || cap < needed {
        set_last_error("output buffer too small");
        return SmStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    *buf.add(s.len()) = 0;
    SmStatus::Ok
}

unsafe fn write_i64s(values: &[i64], buf: *mut i64, cap: usize, len: *mut usize) -> SmStatus {
    if len.is_null() {
        return null_arg();
    }
    *len = values.len();
    if values.len() > cap || (buf.is_null() && !values.is_empty()) {
        set_last_error("output buffer too small");
        return SmStatus::BufferTooSmall;
    }
    if !values.is_empty() {
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    SmStatus::Ok
}

fn map_rule(rule: Rule) -> SmRule {
    match rule {
        Rule::ThmMain => SmRule::ThmMain,
        Rule::ThmMainD1 => SmRule::ThmMainD1,
        Rule::PlaneOddClosedForm => SmRule::PlaneOddClosedForm,
        Rule::PlaneEvenClosedForm => SmRule::PlaneEvenClosedForm,
        Rule::QuadricEvenClosedForm => SmRule::QuadricEvenClosedForm,
        Rule::QuadricOddClosedForm => SmRule::QuadricOddClosedForm,
        Rule::QuinticSpecialCase => SmRule::QuinticSpecialCase,
        Rule::NoRule => SmRule::None,
    }
}

fn make_sm_verdict(curve: &CurveData, v: &ObstructionVerdict) -> SmVerdict {
    SmVerdict {
        l: curve.l,
        genus: curve.genus(),
        applies: v.applies,
        rule: map_rule(v.rule),
        epsilon: v.epsilon,
        has_m: v.m.is_some(),
        m: v.m.unwrap_or(0),
        left_bound: v.left_bound,
        middle: v.middle,
        right_bound: v.right_bound,
        failed_count: v.failed_hypotheses.len() as i64,
        beyond_closed_forms: v.beyond_closed_forms,
        min_sep_degree: obstruct::min_sep_degree_bound(curve, v),
    }
}

fn violation_bits(ids: &[&'static str]) -> u32 {
    let mut bits = 0;
    for id in ids {
        bits |= match *id {
            "degree-positive" => SM_CHECK_DEGREE_POSITIVE,
            "pseudoline-parity" => SM_CHECK_PSEUDOLINE_PARITY,
            "harnack-klein" => SM_CHECK_HARNACK_KLEIN,
            "nest-depth" => SM_CHECK_NEST_DEPTH,
            "parity" => SM_CHECK_PARITY,
            other => unreachable!("violation id {other} has no C flag"),
        };
    }
    bits
}

/// Version of the library as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing the most recent failure on the calling thread.
/// The pointer stays valid until the next failing call on this thread.
/// Before any failure it is the empty string, never `NULL`.
#[no_mangle]
pub extern "C" fn sm_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Look up a built-in surface by name (`P2` or `QuadricEllipsoid`) and
/// store a new handle in `*out`.
#[no_mangle]
pub unsafe extern "C" fn sm_surface_builtin(
    name: *const c_char,
    out: *mut *mut SmSurface,
) -> SmStatus {
    guard(|| {
        if out.is_null() {
            return null_arg();
        }
        let name = match cstr_arg(name) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match lattice::builtin_surface(name) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(SmSurface { inner }));
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Parse surface-definition TOML text and store a handle to the surface
/// named `name` in `*out`.
#[no_mangle]
pub unsafe extern "C" fn sm_surface_from_toml(
    text: *const c_char,
    name: *const c_char,
    out: *mut *mut SmSurface,
) -> SmStatus {
    guard(|| {
        if out.is_null() {
            return null_arg();
        }
        let text = match cstr_arg(text) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let name = match cstr_arg(name) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let surfaces = match surface_file::parse_surfaces(text) {
            Ok(list) => list,
            Err(e) => return fail(&e),
        };
        match surface_file::find_surface(&surfaces, name) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(SmSurface { inner }));
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Release a surface handle. `NULL` is accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn sm_surface_free(surface: *mut SmSurface) {
    if !surface.is_null() {
        drop(Box::from_raw(surface));
    }
}

/// Rank of the surface lattice, which is the length every coordinate
/// vector passed for this surface must have.
#[no_mangle]
pub unsafe extern "C" fn sm_surface_rank(surface: *const SmSurface, out: *mut usize) -> SmStatus {
    guard(|| {
        if surface.is_null() || out.is_null() {
            return null_arg();
        }
        let surface = &*surface;
        *out = surface.inner.rank;
        SmStatus::Ok
    })
}

/// True when the surface satisfies every setup condition the obstruction
/// rules assume.
#[no_mangle]
pub unsafe extern "C" fn sm_surface_setup_ok(
    surface: *const SmSurface,
    out: *mut bool,
) -> SmStatus {
    guard(|| {
        if surface.is_null() || out.is_null() {
            return null_arg();
        }
        let surface = &*surface;
        *out = surface.inner.setup_conditions().overall;
        SmStatus::Ok
    })
}

unsafe fn coords_slice<'a>(coords: *const i64, n_coords: usize) -> Option<&'a [i64]> {
    if n_coords == 0 {
        Some(&[])
    } else if coords.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(coords, n_coords))
    }
}

unsafe fn curve_from_raw(
    surface: *const SmSurface,
    coords: *const i64,
    n_coords: usize,
    l: i64,
) -> Result<CurveData, SmStatus> {
    if surface.is_null() {
        return Err(null_arg());
    }
    let coords = coords_slice(coords, n_coords).ok_or_else(null_arg)?;
    let surface = Arc::clone(&(*surface).inner);
    let class = surface.divisor(coords).map_err(|e| fail(&e))?;
    CurveData::new(class, l, true).map_err(|e| fail(&e))
}

/// Adjunction genus of the class with the given coordinates.
#[no_mangle]
pub unsafe extern "C" fn sm_adjunction_genus(
    surface: *const SmSurface,
    coords: *const i64,
    n_coords: usize,
    out: *mut i64,
) -> SmStatus {
    guard(|| {
        if surface.is_null() || out.is_null() {
            return null_arg();
        }
        let coords = match coords_slice(coords, n_coords) {
            Some(c) => c,
            None => return null_arg(),
        };
        let surface = &*surface;
        let class = match surface.inner.divisor(coords) {
            Ok(c) => c,
            Err(e) => return fail(&e),
        };
        match class.adjunction_genus() {
            Ok(g) => {
                *out = g;
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Run the general obstruction machinery for a separating curve of the
/// given class with `l` real components and fill `*out`.
#[no_mangle]
pub unsafe extern "C" fn sm_obstruction(
    surface: *const SmSurface,
    coords: *const i64,
    n_coords: usize,
    l: i64,
    out: *mut SmVerdict,
) -> SmStatus {
    guard(|| {
        if out.is_null() {
            return null_arg();
        }
        let curve = match curve_from_raw(surface, coords, n_coords, l) {
            Ok(c) => c,
            Err(status) => return status,
        };
        match obstruct::generic_obstruction(&curve) {
            Ok((_, verdict)) => {
                *out = make_sm_verdict(&curve, &verdict);
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Closed-form obstruction verdict for a plane curve of degree `d` with
/// `l` real components.
#[no_mangle]
pub unsafe extern "C" fn sm_plane_obstruction(d: i64, l: i64, out: *mut SmVerdict) -> SmStatus {
    guard(|| {
        if out.is_null() {
            return null_arg();
        }
        let curve = match CurveData::on_plane(d, l, true) {
            Ok(c) => c,
            Err(e) => return fail(&e),
        };
        match obstruct::plane_obstruction(d, l) {
            Ok(verdict) => {
                *out = make_sm_verdict(&curve, &verdict);
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Closed-form obstruction verdict for a bidegree `(d, d)` curve on the
/// quadric ellipsoid with `l` real components.
#[no_mangle]
pub unsafe extern "C" fn sm_quadric_obstruction(d: i64, l: i64, out: *mut SmVerdict) -> SmStatus {
    guard(|| {
        if out.is_null() {
            return null_arg();
        }
        let curve = match CurveData::on_quadric(d, l, true) {
            Ok(c) => c,
            Err(e) => return fail(&e),
        };
        match obstruct::quadric_obstruction(d, l) {
            Ok(verdict) => {
                *out = make_sm_verdict(&curve, &verdict);
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Lower bound for the number of base points of a totally real pencil on
/// a plane curve of degree `d` with `l` components. Errors when the
/// plane obstruction does not apply to the pair.
#[no_mangle]
pub unsafe extern "C" fn sm_pencil_bound(d: i64, l: i64, out: *mut i64) -> SmStatus {
    guard(|| {
        if out.is_null() {
            return null_arg();
        }
        match obstruct::pencil_bound(d, l) {
            Ok(b) => {
                *out = b;
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Enumerate, in increasing order, the component counts the closed-form
/// rules obstruct for the named built-in surface at the given degree.
/// Uses the integer buffer protocol: `*len` receives the count.
#[no_mangle]
pub unsafe extern "C" fn sm_enumerate_obstructed(
    surface_name: *const c_char,
    degree: i64,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> SmStatus {
    guard(|| {
        let name = match cstr_arg(surface_name) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match obstruct::enumerate_obstructed_l(name, degree) {
            Ok(values) => write_i64s(&values, buf, cap, len),
            Err(e) => fail(&e),
        }
    })
}

/// Parse scheme text (for example `J u <3 u 1<2>>`) into a canonical
/// scheme handle stored in `*out`.
#[no_mangle]
pub unsafe extern "C" fn sm_scheme_parse(
    text: *const c_char,
    out: *mut *mut SmScheme,
) -> SmStatus {
    guard(|| {
        if out.is_null() {
            return null_arg();
        }
        let text = match cstr_arg(text) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match scheme::parse_scheme(text) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(SmScheme { inner }));
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Release a scheme handle. `NULL` is accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn sm_scheme_free(scheme_handle: *mut SmScheme) {
    if !scheme_handle.is_null() {
        drop(Box::from_raw(scheme_handle));
    }
}

/// Fill `*out` with the component counts and shape measures of a scheme.
#[no_mangle]
pub unsafe extern "C" fn sm_scheme_stats(
    scheme_handle: *const SmScheme,
    out: *mut SmSchemeStats,
) -> SmStatus {
    guard(|| {
        if scheme_handle.is_null() || out.is_null() {
            return null_arg();
        }
        let s = &(*scheme_handle).inner;
        let stats = scheme::scheme_stats(s);
        *out = SmSchemeStats {
            l: stats.l,
            depth: stats.depth,
            injective_pairs: stats.injective_pairs,
            pseudoline: s.pseudoline(),
        };
        SmStatus::Ok
    })
}

/// Write the canonical text of a scheme using the text buffer protocol.
/// With `compact` true all spaces are dropped; the result still parses.
#[no_mangle]
pub unsafe extern "C" fn sm_scheme_print(
    scheme_handle: *const SmScheme,
    compact: bool,
    buf: *mut c_char,
    cap: usize,
    len: *mut usize,
) -> SmStatus {
    guard(|| {
        if scheme_handle.is_null() {
            return null_arg();
        }
        let s = &(*scheme_handle).inner;
        let text = if compact {
            scheme::print_scheme_compact(s)
        } else {
            scheme::print_scheme(s)
        };
        write_text(&text, buf, cap, len)
    })
}

/// Check a scheme against a plane curve of degree `degree`. On success
/// `*violations` is a bitmask of `SM_CHECK_*` flags, zero when the
/// scheme is consistent.
#[no_mangle]
pub unsafe extern "C" fn sm_scheme_check_plane(
    scheme_handle: *const SmScheme,
    degree: i64,
    violations: *mut u32,
) -> SmStatus {
    guard(|| {
        if scheme_handle.is_null() || violations.is_null() {
            return null_arg();
        }
        let ids = scheme::check_plane_scheme(&(*scheme_handle).inner, degree);
        *violations = violation_bits(&ids);
        SmStatus::Ok
    })
}

/// Check a scheme against a bidegree `(degree, degree)` curve on the
/// quadric ellipsoid. Schemes with a pseudoline are invalid input here.
/// The parity flag is only checked when `type_one` is true.
#[no_mangle]
pub unsafe extern "C" fn sm_scheme_check_quadric(
    scheme_handle: *const SmScheme,
    degree: i64,
    type_one: bool,
    violations: *mut u32,
) -> SmStatus {
    guard(|| {
        if scheme_handle.is_null() || violations.is_null() {
            return null_arg();
        }
        match scheme::check_quadric_scheme(&(*scheme_handle).inner, degree, type_one) {
            Ok(ids) => {
                *violations = violation_bits(&ids);
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// True when the scheme of a degree-`degree` plane curve contains a nest
/// deep enough to force a totally real pencil through its center.
#[no_mangle]
pub unsafe extern "C" fn sm_nest_pencil_exists(
    scheme_handle: *const SmScheme,
    degree: i64,
    out: *mut bool,
) -> SmStatus {
    guard(|| {
        if scheme_handle.is_null() || out.is_null() {
            return null_arg();
        }
        match obstruct::nest_pencil_exists(&(*scheme_handle).inner, degree) {
            Ok(b) => {
                *out = b;
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Enumerate, in increasing order, the component counts admissible for
/// the degree-`degree` stage of the plane construction. Integer buffer
/// protocol.
#[no_mangle]
pub unsafe extern "C" fn sm_admissible_l(
    degree: i64,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> SmStatus {
    guard(|| match construct::admissible_pairs(degree) {
        Ok(values) => write_i64s(&values, buf, cap, len),
        Err(e) => fail(&e),
    })
}

/// Build a construction trace reaching the admissible pair
/// `(degree, l)` and write its line-oriented text form using the text
/// buffer protocol.
#[no_mangle]
pub unsafe extern "C" fn sm_construct_trace(
    degree: i64,
    l: i64,
    buf: *mut c_char,
    cap: usize,
    len: *mut usize,
) -> SmStatus {
    guard(|| match construct::construct_trace(degree, l) {
        Ok(trace) => write_text(&construct::trace_to_text(&trace), buf, cap, len),
        Err(e) => fail(&e),
    })
}

/// Parse the line-oriented trace text and replay it. `*ok` reports
/// whether the replay reproduces the trace; unparsable text is an error.
#[no_mangle]
pub unsafe extern "C" fn sm_verify_trace(text: *const c_char, ok: *mut bool) -> SmStatus {
    guard(|| {
        if ok.is_null() {
            return null_arg();
        }
        let text = match cstr_arg(text) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match construct::parse_trace(text) {
            Ok(trace) => {
                *ok = construct::verify_trace(&trace);
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Check that every admissible pair with degree at most `d_max` is
/// reachable by the construction steps. `*ok` receives the answer.
#[no_mangle]
pub unsafe extern "C" fn sm_reachability(d_max: i64, ok: *mut bool) -> SmStatus {
    guard(|| {
        if ok.is_null() {
            return null_arg();
        }
        match construct::reachability_check(d_max) {
            Ok(b) => {
                *ok = b;
                SmStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// For plane degree `degree`, find the largest constructible component
/// count the obstruction also excludes. `*l_out` receives the count and,
/// when `verdict` is not `NULL`, `*verdict` the excluding verdict.
#[no_mangle]
pub unsafe extern "C" fn sm_witness(
    degree: i64,
    l_out: *mut i64,
    verdict: *mut SmVerdict,
) -> SmStatus {
    guard(|| {
        if l_out.is_null() {
            return null_arg();
        }
        let w = match construct::witness_no_pencil(degree) {
            Ok(w) => w,
            Err(e) => return fail(&e),
        };
        *l_out = w.l;
        if !verdict.is_null() {
            let curve = match CurveData::on_plane(degree, w.l, true) {
                Ok(c) => c,
                Err(e) => return fail(&e),
            };
            *verdict = make_sm_verdict(&curve, &w.verdict);
        }
        SmStatus::Ok
    })
}

/// Write the construction trace behind `sm_witness` for the same degree
/// using the text buffer protocol.
#[no_mangle]
pub unsafe extern "C" fn sm_witness_trace(
    degree: i64,
    buf: *mut c_char,
    cap: usize,
    len: *mut usize,
) -> SmStatus {
    guard(|| match construct::witness_no_pencil(degree) {
        Ok(w) => write_text(&construct::trace_to_text(&w.trace), buf, cap, len),
        Err(e) => fail(&e),
    })
}
