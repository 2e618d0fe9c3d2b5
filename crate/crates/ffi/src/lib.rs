//! C ABI over `branch2`.
//!
//! Every entry point returns a [`B2Status`] and writes results through out
//! pointers. On failure a message is kept per thread and can be read with
//! [`b2_last_error`]. Strings handed out by the library are released with
//! [`b2_string_free`]; handles with their matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use branch2::census::{load_census, quotient_report, Census, CensusError};
use branch2::hyperbolic::{
    conjugation_residual, core_geodesic_length, filling_family, HyperbolicError,
};
use branch2::involution::{extend_involution, InvolutionError, QuotientKnot, SymmetryType};
use branch2::seifert::{
    quotient_h1_order, quotient_invariants, sfs_h1_order, SeifertError, SeifertInvariants,
};
use branch2::slope::{canonical_exponents_bounded, slope_to_word, Slope, SlopeError};
use branch2::surgery::{blow_down, h1_order, rolfsen_twist, FramedLink, H1Order, SurgeryError};
use branch2::tangle::{
    diagram_determinant, two_bridge_diagram, PlanarDiagram, TangleError, TwistVector,
};
use num_complex::Complex64;

pub const B2_MAX_CROSSINGS: usize = 500;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum B2Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    UnknownKnot = 4,
    Overflow = 5,
    Panic = 6,
}

/// A planar diagram.
pub struct B2Diagram(PlanarDiagram);

/// A framed link.
pub struct B2Link(FramedLink);

/// A symmetry census, either the built-in table or one loaded from text.
pub enum B2Census {
    Embedded,
    Loaded(Census),
}

impl B2Census {
    fn get(&self) -> &Census {
        match self {
            B2Census::Embedded => Census::embedded(),
            B2Census::Loaded(c) => c,
        }
    }
}

/// Order of a first homology group; `infinite` set means `order` is unused.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct B2H1Order {
    pub infinite: bool,
    pub order: u64,
}

/// Outcome of extending an involution over a filling.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct B2Extension {
    pub extends: bool,
    pub free: bool,
    pub orientable: bool,
    pub degenerate: bool,
    pub branch_components: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(B2Status, String);

trait Classify: std::fmt::Display {
    fn status(&self) -> B2Status;
}

impl Classify for SlopeError {
    fn status(&self) -> B2Status {
        match self {
            SlopeError::Parse(_) => B2Status::Parse,
            SlopeError::Overflow => B2Status::Overflow,
            _ => B2Status::InvalidArgument,
        }
    }
}

impl Classify for TangleError {
    fn status(&self) -> B2Status {
        match self {
            TangleError::Parse { .. } => B2Status::Parse,
            TangleError::Overflow => B2Status::Overflow,
            TangleError::Slope(e) => e.status(),
            _ => B2Status::InvalidArgument,
        }
    }
}

impl Classify for SurgeryError {
    fn status(&self) -> B2Status {
        match self {
            SurgeryError::Parse { .. } => B2Status::Parse,
            SurgeryError::Overflow => B2Status::Overflow,
            SurgeryError::Slope(e) => e.status(),
            _ => B2Status::InvalidArgument,
        }
    }
}

impl Classify for SeifertError {
    fn status(&self) -> B2Status {
        match self {
            SeifertError::Parse(_) => B2Status::Parse,
            SeifertError::Overflow => B2Status::Overflow,
            _ => B2Status::InvalidArgument,
        }
    }
}

impl Classify for InvolutionError {
    fn status(&self) -> B2Status {
        match self {
            InvolutionError::UnknownType(_) => B2Status::Parse,
            InvolutionError::Slope(e) => e.status(),
            _ => B2Status::InvalidArgument,
        }
    }
}

impl Classify for CensusError {
    fn status(&self) -> B2Status {
        match self {
            CensusError::UnknownKnot(_) | CensusError::Unclassified(_) => B2Status::UnknownKnot,
            CensusError::Parse { .. } | CensusError::Validation { .. } | CensusError::Io(_) => {
                B2Status::Parse
            }
        }
    }
}

impl Classify for HyperbolicError {
    fn status(&self) -> B2Status {
        B2Status::InvalidArgument
    }
}

impl<E: Classify> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.status(), e.to_string())
    }
}

fn fail(status: B2Status, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `body`, recording any failure or panic.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> B2Status {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => B2Status::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            B2Status::Panic
        }
    }
}

fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    // SAFETY: the caller passes either NULL or a valid, writable pointer.
    unsafe { p.as_mut() }.ok_or_else(|| fail(B2Status::NullPointer, "null output pointer"))
}

fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    // SAFETY: non-NULL handles come from this library and are still live.
    unsafe { p.as_ref() }.ok_or_else(|| fail(B2Status::NullPointer, "null handle"))
}

fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(fail(B2Status::NullPointer, "null string"));
    }
    // SAFETY: the caller passes a NUL-terminated string.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| fail(B2Status::Parse, "string is not UTF-8"))
}

fn give_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("interior NULs removed")
        .into_raw()
}

fn give<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn slope(p: i64, q: i64) -> Result<Slope, Failure> {
    Ok(Slope::new(p, q)?)
}

fn to_u64(v: u128) -> Result<u64, Failure> {
    u64::try_from(v).map_err(|_| fail(B2Status::Overflow, "value does not fit in 64 bits"))
}

fn h1(order: H1Order) -> Result<B2H1Order, Failure> {
    Ok(match order {
        H1Order::Infinite => B2H1Order {
            infinite: true,
            order: 0,
        },
        H1Order::Finite(n) => B2H1Order {
            infinite: false,
            order: to_u64(n)?,
        },
    })
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn b2_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn b2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Canonical word, e.g. `"T S T^3 S"`, of the slope `p/q`.
#[no_mangle]
pub extern "C" fn b2_slope_word(p: i64, q: i64, word: *mut *mut c_char) -> B2Status {
    guard(|| {
        let w = out(word)?;
        *w = give_string(slope_to_word(slope(p, q)?).to_string());
        Ok(())
    })
}

/// Diagram of the two-bridge link `b(p,q)`, at most `B2_MAX_CROSSINGS`
/// crossings.
#[no_mangle]
pub extern "C" fn b2_diagram_two_bridge(p: i64, q: i64, diagram: *mut *mut B2Diagram) -> B2Status {
    guard(|| {
        let d = out(diagram)?;
        let s = slope(p, q)?;
        let too_big = || {
            fail(
                B2Status::InvalidArgument,
                format!("b({s}) needs more than {B2_MAX_CROSSINGS} crossings"),
            )
        };
        let exps = canonical_exponents_bounded(s, B2_MAX_CROSSINGS + 2).ok_or_else(too_big)?;
        if TwistVector::new(exps).crossing_count() > B2_MAX_CROSSINGS as u128 {
            return Err(too_big());
        }
        *d = give(B2Diagram(two_bridge_diagram(s)?));
        Ok(())
    })
}

/// Parses `X a b c d ±` / `L a` lines.
#[no_mangle]
pub extern "C" fn b2_diagram_parse(src: *const c_char, diagram: *mut *mut B2Diagram) -> B2Status {
    guard(|| {
        let d = out(diagram)?;
        let parsed: PlanarDiagram = text(src)?.parse()?;
        *d = give(B2Diagram(parsed));
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn b2_diagram_determinant(diagram: *const B2Diagram, det: *mut u64) -> B2Status {
    guard(|| {
        let d = handle(diagram)?;
        let o = out(det)?;
        *o = to_u64(diagram_determinant(&d.0)?)?;
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn b2_diagram_counts(
    diagram: *const B2Diagram,
    crossings: *mut usize,
    components: *mut usize,
) -> B2Status {
    guard(|| {
        let d = handle(diagram)?;
        *out(crossings)? = d.0.crossing_count();
        *out(components)? = d.0.component_count();
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn b2_diagram_to_string(diagram: *const B2Diagram, s: *mut *mut c_char) -> B2Status {
    guard(|| {
        let d = handle(diagram)?;
        *out(s)? = give_string(d.0.to_string());
        Ok(())
    })
}

/// # Safety
/// `diagram` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn b2_diagram_free(diagram: *mut B2Diagram) {
    if !diagram.is_null() {
        drop(Box::from_raw(diagram));
    }
}

/// Parses the `components: n` link format.
#[no_mangle]
pub extern "C" fn b2_link_parse(src: *const c_char, link: *mut *mut B2Link) -> B2Status {
    guard(|| {
        let l = out(link)?;
        let parsed: FramedLink = text(src)?.parse()?;
        *l = give(B2Link(parsed));
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn b2_link_len(link: *const B2Link, len: *mut usize) -> B2Status {
    guard(|| {
        *out(len)? = handle(link)?.0.len();
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn b2_link_h1_order(link: *const B2Link, order: *mut B2H1Order) -> B2Status {
    guard(|| {
        let l = handle(link)?;
        *out(order)? = h1(h1_order(&l.0)?)?;
        Ok(())
    })
}

/// `n` full twists along component `j`; writes a new handle.
#[no_mangle]
pub extern "C" fn b2_link_rolfsen_twist(
    link: *const B2Link,
    j: usize,
    n: i64,
    result: *mut *mut B2Link,
) -> B2Status {
    guard(|| {
        let l = handle(link)?;
        let r = out(result)?;
        *r = give(B2Link(rolfsen_twist(&l.0, j, n)?));
        Ok(())
    })
}

/// Blows down the `±1`-framed unknot `j`; writes a new handle.
#[no_mangle]
pub extern "C" fn b2_link_blow_down(
    link: *const B2Link,
    j: usize,
    result: *mut *mut B2Link,
) -> B2Status {
    guard(|| {
        let l = handle(link)?;
        let r = out(result)?;
        *r = give(B2Link(blow_down(&l.0, j)?));
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn b2_link_to_string(link: *const B2Link, s: *mut *mut c_char) -> B2Status {
    guard(|| {
        *out(s)? = give_string(handle(link)?.0.to_string());
        Ok(())
    })
}

/// # Safety
/// `link` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn b2_link_free(link: *mut B2Link) {
    if !link.is_null() {
        drop(Box::from_raw(link));
    }
}

/// Invariants of the quotient of `r/s` filling on the `(p,q)` torus knot.
#[no_mangle]
pub extern "C" fn b2_seifert_quotient(
    p: i64,
    q: i64,
    r: i64,
    s: i64,
    invariants: *mut *mut c_char,
    order: *mut u64,
) -> B2Status {
    guard(|| {
        let f = slope(r, s)?;
        let inv = quotient_invariants(p, q, f)?;
        let n = to_u64(quotient_h1_order(p, q, f)?)?;
        *out(order)? = n;
        *out(invariants)? = give_string(inv.to_string());
        Ok(())
    })
}

/// First homology order of `"{b,(Oo,0),(a1,b1),...}"`.
#[no_mangle]
pub extern "C" fn b2_seifert_h1_order(
    invariants: *const c_char,
    order: *mut B2H1Order,
) -> B2Status {
    guard(|| {
        let inv: SeifertInvariants = text(invariants)?.parse()?;
        *out(order)? = h1(sfs_h1_order(&inv)?)?;
        Ok(())
    })
}

/// Extends an involution of type `kind` (e.g. `"S1E"`) over `p/q` filling.
/// `quotient_knot` may be NULL except for type S1E. `quotient`, if not
/// NULL, receives a description of the quotient.
#[no_mangle]
pub extern "C" fn b2_extend_involution(
    kind: *const c_char,
    p: i64,
    q: i64,
    quotient_knot: *const c_char,
    extension: *mut B2Extension,
    quotient: *mut *mut c_char,
) -> B2Status {
    guard(|| {
        let t: SymmetryType = text(kind)?.parse()?;
        let qk = if quotient_knot.is_null() {
            None
        } else {
            Some(text(quotient_knot)?.parse::<QuotientKnot>()?)
        };
        let res = extend_involution(t, slope(p, q)?, qk.as_ref())?;
        *out(extension)? = B2Extension {
            extends: res.extends,
            free: res.free,
            orientable: res.quotient.orientable,
            degenerate: res.degenerate,
            branch_components: res.branch_components,
        };
        if !quotient.is_null() {
            *out(quotient)? = give_string(res.quotient.kind.to_string());
        }
        Ok(())
    })
}

/// Handle to the built-in census.
#[no_mangle]
pub extern "C" fn b2_census_embedded(census: *mut *mut B2Census) -> B2Status {
    guard(|| {
        *out(census)? = give(B2Census::Embedded);
        Ok(())
    })
}

/// Parses a census in the text format of the built-in table.
#[no_mangle]
pub extern "C" fn b2_census_parse(src: *const c_char, census: *mut *mut B2Census) -> B2Status {
    guard(|| {
        let c = out(census)?;
        let loaded = load_census(text(src)?.as_bytes())?;
        *c = give(B2Census::Loaded(loaded));
        Ok(())
    })
}

/// Quotient report as `key=value` lines: `quotient_count`, then
/// `quotient.N.class`, `.kind`, `.orientable`, `.free`,
/// `.branch_components` and `.via` per quotient, then `covers_s3` and,
/// when stated, `symmetry_group`.
#[no_mangle]
pub extern "C" fn b2_census_report(
    census: *const B2Census,
    knot: *const c_char,
    p: i64,
    q: i64,
    report: *mut *mut c_char,
) -> B2Status {
    guard(|| {
        let c = handle(census)?;
        let r = out(report)?;
        let rep = quotient_report(c.get(), text(knot)?, slope(p, q)?)?;
        let mut s = String::new();
        let _ = writeln!(s, "quotient_count={}", rep.lines.len());
        for (k, line) in rep.lines.iter().enumerate() {
            let res = &line.result;
            let via = line
                .via
                .as_ref()
                .map_or("-".to_string(), |(n, sl)| format!("{n}({sl})"));
            let _ = writeln!(s, "quotient.{k}.class={}", line.class);
            let _ = writeln!(s, "quotient.{k}.kind={}", res.quotient.kind);
            let _ = writeln!(s, "quotient.{k}.orientable={}", res.quotient.orientable);
            let _ = writeln!(s, "quotient.{k}.free={}", res.free);
            let _ = writeln!(
                s,
                "quotient.{k}.branch_components={}",
                res.branch_components
            );
            let _ = writeln!(s, "quotient.{k}.via={via}");
        }
        let _ = writeln!(s, "covers_s3={}", rep.covers_three_sphere());
        if let Some(g) = rep.symmetry_group {
            let _ = writeln!(s, "symmetry_group={}", g.tag());
        }
        *r = give_string(s);
        Ok(())
    })
}

/// # Safety
/// `census` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn b2_census_free(census: *mut B2Census) {
    if !census.is_null() {
        drop(Box::from_raw(census));
    }
}

/// `2π/(p² + q²)`.
#[no_mangle]
pub extern "C" fn b2_core_geodesic_length(p: i64, q: i64, length: *mut f64) -> B2Status {
    guard(|| {
        *out(length)? = core_geodesic_length(p, q)?;
        Ok(())
    })
}

/// Conjugation residuals of the filling family at `w` with modulus `zeta`.
#[no_mangle]
pub extern "C" fn b2_conjugation_residual(
    w_re: f64,
    w_im: f64,
    zeta_re: f64,
    zeta_im: f64,
    residual_a: *mut f64,
    residual_b: *mut f64,
) -> B2Status {
    guard(|| {
        let fam = filling_family(
            Some(Complex64::new(w_re, w_im)),
            Complex64::new(zeta_re, zeta_im),
        )?;
        let (a, b) = conjugation_residual(&fam)?;
        *out(residual_a)? = a;
        *out(residual_b)? = b;
        Ok(())
    })
}
