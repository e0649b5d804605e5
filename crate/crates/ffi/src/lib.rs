//! C ABI over `supersol`.
//!
//! Groups and subgroups are opaque heap handles; every fallible call returns
//! a [`SupersolStatus`] and writes its result through an out-pointer. The
//! message for the most recent failure on the calling thread is available
//! from [`supersol_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use supersol::catalog;
use supersol::verify;
use supersol::{Error, Group, GroupSpec, Permutation, Subgroup};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupersolStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    CapExceeded = 4,
    InvalidArgument = 5,
    NotAMember = 6,
    Verification = 7,
    Panic = 8,
}

/// Opaque group handle.
pub struct SupersolGroup {
    inner: Group,
}

/// Opaque subgroup handle, tied to the group it was created from.
pub struct SupersolSubgroup {
    inner: Subgroup,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SupersolReport {
    pub order: u64,
    pub abelian: bool,
    pub cyclic: bool,
    pub nilpotent: bool,
    pub soluble: bool,
    pub supersoluble: bool,
    pub metanilpotent: bool,
    pub sylow_tower_supersoluble: bool,
    pub abelian_sylows: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SupersolPairVerdict {
    pub a_subnormal: bool,
    pub b_subnormal: bool,
    pub a_supersoluble: bool,
    pub b_supersoluble: bool,
    pub generates: bool,
    pub hypotheses_hold: bool,
    pub condition1: bool,
    pub condition2: bool,
    pub corollary_condition: bool,
    /// Only meaningful when `hypotheses_hold`.
    pub supersoluble: bool,
    pub violation: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SupersolExampleSummary {
    pub passed: bool,
    pub e_order: u64,
    /// 0 when no candidate was found.
    pub h_order: u64,
    /// 0 when no candidate was found.
    pub x_order: u64,
    pub failing_clauses: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(SupersolStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) | Error::Spec(_) => SupersolStatus::Parse,
            Error::OrderCap { .. } | Error::SubgroupCap { .. } | Error::DegreeCap { .. } => SupersolStatus::CapExceeded,
            Error::NotAMember(_) => SupersolStatus::NotAMember,
            Error::Verification(_) => SupersolStatus::Verification,
            _ => SupersolStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SupersolStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            SupersolStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            SupersolStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(SupersolStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(SupersolStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// Builds a group from group-spec text (`name`, `degree`, `gen` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn supersol_group_from_spec(text: *const c_char, out: *mut *mut SupersolGroup) -> SupersolStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let spec = GroupSpec::parse(text)?;
        let g = Group::generate(&spec, Default::default())?;
        write_out(out, Box::into_raw(Box::new(SupersolGroup { inner: g })), "out")
    })
}

/// Builds a catalog group. `param` 0 means "no parameter".
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn supersol_group_from_family(
    name: *const c_char,
    param: u64,
    out: *mut *mut SupersolGroup,
) -> SupersolStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let param = (param != 0).then_some(param as usize);
        let spec = catalog::family(name, param)?;
        let g = Group::generate(&spec, Default::default())?;
        write_out(out, Box::into_raw(Box::new(SupersolGroup { inner: g })), "out")
    })
}

/// # Safety
/// `group` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn supersol_group_free(group: *mut SupersolGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Returns 0 for a null handle.
///
/// # Safety
/// `group` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn supersol_group_order(group: *const SupersolGroup) -> u64 {
    group.as_ref().map_or(0, |g| g.inner.order() as u64)
}

/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn supersol_group_classify(group: *const SupersolGroup, out: *mut SupersolReport) -> SupersolStatus {
    guard(|| {
        let r = deref(group, "group")?.inner.classify();
        let report = SupersolReport {
            order: r.order as u64,
            abelian: r.abelian,
            cyclic: r.cyclic,
            nilpotent: r.nilpotent,
            soluble: r.soluble,
            supersoluble: r.supersoluble,
            metanilpotent: r.metanilpotent,
            sylow_tower_supersoluble: r.sylow_tower_supersoluble,
            abelian_sylows: r.abelian_sylows,
        };
        write_out(out, report, "out")
    })
}

/// Subgroup generated by `;`-separated cycle-notation permutations.
///
/// # Safety
/// `group` must be a live handle, `gens` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn supersol_subgroup_from_generators(
    group: *const SupersolGroup,
    gens: *const c_char,
    out: *mut *mut SupersolSubgroup,
) -> SupersolStatus {
    guard(|| {
        let g = &deref(group, "group")?.inner;
        let gens = read_str(gens, "gens")?;
        let perms = gens
            .split(';')
            .map(|s| Permutation::parse(s.trim(), g.degree()).map_err(Error::from))
            .collect::<Result<Vec<_>, _>>()?;
        let h = g.subgroup_from(&perms)?;
        write_out(out, Box::into_raw(Box::new(SupersolSubgroup { inner: h })), "out")
    })
}

/// # Safety
/// `sub` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn supersol_subgroup_free(sub: *mut SupersolSubgroup) {
    if !sub.is_null() {
        drop(Box::from_raw(sub));
    }
}

/// Returns 0 for a null handle.
///
/// # Safety
/// `sub` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn supersol_subgroup_order(sub: *const SupersolSubgroup) -> u64 {
    sub.as_ref().map_or(0, |h| h.inner.order() as u64)
}

/// Writes the subnormal defect, or -1 when `sub` is not subnormal.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn supersol_subnormal_defect(
    group: *const SupersolGroup,
    sub: *const SupersolSubgroup,
    out: *mut i64,
) -> SupersolStatus {
    guard(|| {
        let g = &deref(group, "group")?.inner;
        let h = &deref(sub, "sub")?.inner;
        g.owns(h)?;
        let defect = g.is_subnormal(h).defect.map_or(-1, |d| d as i64);
        write_out(out, defect, "out")
    })
}

/// # Safety
/// All handles must be live and `a`, `b` must belong to `group`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn supersol_check_pair(
    group: *const SupersolGroup,
    a: *const SupersolSubgroup,
    b: *const SupersolSubgroup,
    out: *mut SupersolPairVerdict,
) -> SupersolStatus {
    guard(|| {
        let g = &deref(group, "group")?.inner;
        let a = &deref(a, "a")?.inner;
        let b = &deref(b, "b")?.inner;
        let v = verify::check_pair(g, a, b)?;
        let verdict = SupersolPairVerdict {
            a_subnormal: v.a_subnormal,
            b_subnormal: v.b_subnormal,
            a_supersoluble: v.a_supersoluble,
            b_supersoluble: v.b_supersoluble,
            generates: v.generates,
            hypotheses_hold: v.hypotheses_hold,
            condition1: v.condition1,
            condition2: v.condition2,
            corollary_condition: v.corollary_condition,
            supersoluble: v.conclusions.as_ref().is_some_and(|c| c.supersoluble),
            violation: v.violation.is_some(),
        };
        write_out(out, verdict, "out")
    })
}

/// Rebuilds the order-144 example and checks every clause.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn supersol_order_144_example(out: *mut SupersolExampleSummary) -> SupersolStatus {
    guard(|| {
        let r = verify::verify_order_144_example()?;
        let summary = SupersolExampleSummary {
            passed: r.passed,
            e_order: r.e_order as u64,
            h_order: r.h_order.unwrap_or(0) as u64,
            x_order: r.x_order.unwrap_or(0) as u64,
            failing_clauses: r.failing_clauses().len() as u32,
        };
        write_out(out, summary, "out")
    })
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn supersol_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
