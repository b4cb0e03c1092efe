//! C ABI for wythoff-core.
//!
//! Every fallible function returns a [`WythoffStatus`]; on anything other
//! than `WYTHOFF_STATUS_OK` a message is available from
//! [`wythoff_last_error_message`] on the same thread. Game specs, verdict
//! tables and sponge levels are opaque handles that the caller frees with the
//! matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wythoff_core::bitcore;
use wythoff_core::game::{self, GameSpec, MoveVector, VerdictTable};
use wythoff_core::oracle;
use wythoff_core::sponge::{self, Dyadic, DyadicPoint, SpongeLevel};
use wythoff_core::{Budget, Error, Move, Position};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WythoffStatus {
    Ok = 0,
    NullPointer = 1,
    EmptyInput = 2,
    DimensionMismatch = 3,
    UnsupportedDimension = 4,
    InvalidSpec = 5,
    IllegalMove = 6,
    NoWinningMove = 7,
    BudgetExceeded = 8,
    OutOfRange = 9,
    BufferTooSmall = 10,
    Panic = 11,
}

/// A move of the canonical game: `amount` tokens from heap `heap`
/// (zero-based), or from every heap when `heap` is `SIZE_MAX`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WythoffCanonicalMove {
    pub heap: usize,
    pub amount: u64,
}

/// `heap` value marking the all-ones diagonal move.
pub const WYTHOFF_DIAGONAL: usize = usize::MAX;

pub struct WythoffGameSpec(GameSpec);
pub struct WythoffVerdictTable(VerdictTable);
pub struct WythoffSponge(SpongeLevel);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg).unwrap_or_else(|_| c"error message contained NUL".into());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> WythoffStatus {
    match e {
        Error::EmptyInput => WythoffStatus::EmptyInput,
        Error::DimensionMismatch { .. } | Error::MixedDimensions(..) | Error::PlyDimension(_) => {
            WythoffStatus::DimensionMismatch
        }
        Error::UnsupportedDimension(_) => WythoffStatus::UnsupportedDimension,
        Error::InvalidSpec(_) | Error::ParsePosition(_) => WythoffStatus::InvalidSpec,
        Error::IllegalMove(_) => WythoffStatus::IllegalMove,
        Error::NoWinningMove(_) => WythoffStatus::NoWinningMove,
        Error::BudgetExceeded { .. } => WythoffStatus::BudgetExceeded,
        Error::ZeroBound
        | Error::OutsideBox(..)
        | Error::LevelZero
        | Error::DyadicOutOfRange { .. } => WythoffStatus::OutOfRange,
    }
}

struct Fail(WythoffStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(WythoffStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `body`, turning errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> WythoffStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => WythoffStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            WythoffStatus::Panic
        }
    }
}

/// # Safety
/// `ptr` must be NULL or point to `len` readable values.
unsafe fn heaps<'a>(ptr: *const u64, len: usize) -> Result<&'a [u64], Fail> {
    if ptr.is_null() {
        return Err(null("heaps"));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// # Safety
/// `out` must be NULL or valid for a write of `T`.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn to_canonical(mv: &Move) -> WythoffCanonicalMove {
    WythoffCanonicalMove {
        heap: mv.vector.unit_heap().unwrap_or(WYTHOFF_DIAGONAL),
        amount: mv.k,
    }
}

fn budget_or_default(max_cells: u64) -> Budget {
    if max_cells == 0 {
        Budget::default()
    } else {
        Budget::new(max_cells)
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn wythoff_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Bitwise XOR of `len` heap sizes.
///
/// # Safety
/// `heaps` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wythoff_nim_sum(
    heaps: *const u64,
    len: usize,
    out: *mut u64,
) -> WythoffStatus {
    guard(|| write_out(out, bitcore::nim_sum(self::heaps(heaps, len)?)?))
}

/// Whether the position is a P-position of the canonical game (odd `len >= 3`).
///
/// # Safety
/// `heaps` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wythoff_is_p_position(
    heaps: *const u64,
    len: usize,
    out: *mut bool,
) -> WythoffStatus {
    guard(|| write_out(out, oracle::is_p_position(self::heaps(heaps, len)?)?))
}

/// The constructed single-heap winning move. Fails with
/// `WYTHOFF_STATUS_NO_WINNING_MOVE` on P-positions.
///
/// # Safety
/// `heaps` must point to `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wythoff_winning_move(
    heaps: *const u64,
    len: usize,
    out: *mut WythoffCanonicalMove,
) -> WythoffStatus {
    guard(|| {
        let mv = oracle::winning_move(self::heaps(heaps, len)?)?;
        write_out(out, to_canonical(&mv))
    })
}

/// Every winning move of the canonical game. `*count` receives the number
/// of moves (at most `len + 1`); if it exceeds `capacity` nothing is written
/// to `moves` and `WYTHOFF_STATUS_BUFFER_TOO_SMALL` is returned.
///
/// # Safety
/// `heaps` must point to `len` values, `moves` to `capacity` writable slots
/// (may be NULL when `capacity` is 0), and `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wythoff_all_winning_moves(
    heaps: *const u64,
    len: usize,
    moves: *mut WythoffCanonicalMove,
    capacity: usize,
    count: *mut usize,
) -> WythoffStatus {
    guard(|| {
        let pos = Position::new(self::heaps(heaps, len)?.to_vec())?;
        oracle::check_oracle_dim(len)?;
        let all = oracle::all_winning_moves(&GameSpec::canonical(len)?, &pos)?;
        write_out(count, all.len())?;
        if all.len() > capacity {
            return Err(Fail(
                WythoffStatus::BufferTooSmall,
                format!("{} moves, capacity {capacity}", all.len()),
            ));
        }
        if !all.is_empty() && moves.is_null() {
            return Err(null("moves"));
        }
        for (i, mv) in all.iter().enumerate() {
            moves.add(i).write(to_canonical(mv));
        }
        Ok(())
    })
}

/// Canonical game on `n` heaps: the unit vectors, then the diagonal.
///
/// # Safety
/// `out` must be writable. Free the handle with [`wythoff_spec_free`].
#[no_mangle]
pub unsafe extern "C" fn wythoff_spec_canonical(
    n: usize,
    out: *mut *mut WythoffGameSpec,
) -> WythoffStatus {
    guard(|| {
        let spec = GameSpec::canonical(n)?;
        write_out(out, Box::into_raw(Box::new(WythoffGameSpec(spec))))
    })
}

/// Game with `count` move vectors of dimension `n`, stored row by row in
/// `vectors` (`count * n` values).
///
/// # Safety
/// `vectors` must point to `count * n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wythoff_spec_new(
    n: usize,
    vectors: *const u64,
    count: usize,
    out: *mut *mut WythoffGameSpec,
) -> WythoffStatus {
    guard(|| {
        let total = n
            .checked_mul(count)
            .ok_or_else(|| Fail(WythoffStatus::InvalidSpec, "n * count overflows".into()))?;
        let flat = self::heaps(vectors, total)?;
        let vs = if n == 0 {
            Vec::new()
        } else {
            flat.chunks(n)
                .map(|c| MoveVector::new(c.to_vec()))
                .collect::<Result<Vec<_>, _>>()?
        };
        let spec = GameSpec::new(n, vs)?;
        write_out(out, Box::into_raw(Box::new(WythoffGameSpec(spec))))
    })
}

/// # Safety
/// `spec` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wythoff_spec_free(spec: *mut WythoffGameSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// Retrograde analysis of `[0,bound)^n`. `max_cells = 0` selects the default
/// budget.
///
/// # Safety
/// `spec` must be a live handle; `out` must be writable. Free the table with
/// [`wythoff_table_free`].
#[no_mangle]
pub unsafe extern "C" fn wythoff_solve_box(
    spec: *const WythoffGameSpec,
    bound: u64,
    max_cells: u64,
    out: *mut *mut WythoffVerdictTable,
) -> WythoffStatus {
    guard(|| {
        let spec = spec.as_ref().ok_or_else(|| null("spec"))?;
        let table = game::solve_box_with_budget(&spec.0, bound, budget_or_default(max_cells))?;
        write_out(out, Box::into_raw(Box::new(WythoffVerdictTable(table))))
    })
}

/// # Safety
/// `table` must be a live handle, `heaps` must point to `len` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wythoff_table_is_p(
    table: *const WythoffVerdictTable,
    heaps: *const u64,
    len: usize,
    out: *mut bool,
) -> WythoffStatus {
    guard(|| {
        let table = table.as_ref().ok_or_else(|| null("table"))?;
        write_out(out, table.0.is_p(self::heaps(heaps, len)?)?)
    })
}

/// Number of positions in the table, or 0 for NULL.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wythoff_table_len(table: *const WythoffVerdictTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.len())
}

/// Number of P-positions in the table, or 0 for NULL.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wythoff_table_p_count(table: *const WythoffVerdictTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.p_count())
}

/// # Safety
/// `table` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wythoff_table_free(table: *mut WythoffVerdictTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// The sponge level `P_m^(n)`, points sorted lexicographically.
/// `max_cells = 0` selects the default budget.
///
/// # Safety
/// `out` must be writable. Free the handle with [`wythoff_sponge_free`].
#[no_mangle]
pub unsafe extern "C" fn wythoff_sponge_generate(
    n: usize,
    m: u32,
    max_cells: u64,
    out: *mut *mut WythoffSponge,
) -> WythoffStatus {
    guard(|| {
        let level = sponge::generate_level_with_budget(n, m, budget_or_default(max_cells))?;
        write_out(out, Box::into_raw(Box::new(WythoffSponge(level))))
    })
}

/// Number of points, or 0 for NULL.
///
/// # Safety
/// `level` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wythoff_sponge_len(level: *const WythoffSponge) -> usize {
    level.as_ref().map_or(0, |l| l.0.len())
}

/// Copies point `index` into `coords`, which must hold `len = n` values.
///
/// # Safety
/// `level` must be a live handle and `coords` writable for `len` values.
#[no_mangle]
pub unsafe extern "C" fn wythoff_sponge_point(
    level: *const WythoffSponge,
    index: usize,
    coords: *mut u64,
    len: usize,
) -> WythoffStatus {
    guard(|| {
        let level = level.as_ref().ok_or_else(|| null("level"))?;
        let point = level.0.points().get(index).ok_or_else(|| {
            Fail(
                WythoffStatus::OutOfRange,
                format!("index {index} >= {}", level.0.len()),
            )
        })?;
        if len != point.dim() {
            return Err(Error::DimensionMismatch {
                expected: point.dim(),
                found: len,
            }
            .into());
        }
        if coords.is_null() {
            return Err(null("coords"));
        }
        ptr::copy_nonoverlapping(point.as_ptr(), coords, len);
        Ok(())
    })
}

/// # Safety
/// `level` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wythoff_sponge_free(level: *mut WythoffSponge) {
    if !level.is_null() {
        drop(Box::from_raw(level));
    }
}

/// Closure membership of the dyadic point with coordinates
/// `numerators[i] / 2^levels[i]`.
///
/// # Safety
/// `numerators` and `levels` must point to `len` values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn wythoff_q_membership(
    numerators: *const u64,
    levels: *const u32,
    len: usize,
    out: *mut bool,
) -> WythoffStatus {
    guard(|| {
        let nums = self::heaps(numerators, len)?;
        if levels.is_null() {
            return Err(null("levels"));
        }
        let levels = std::slice::from_raw_parts(levels, len);
        let coords = nums
            .iter()
            .zip(levels)
            .map(|(&a, &l)| Dyadic::new(a, l))
            .collect::<Result<Vec<_>, _>>()?;
        write_out(out, sponge::q_membership(&DyadicPoint::new(coords)?)?)
    })
}
