use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use wythoff_ffi::*;

fn last_error() -> String {
    let p = wythoff_last_error_message();
    assert!(!p.is_null(), "no error message set");
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn oracle_calls() {
    unsafe {
        let pos = [7u64, 5, 6];
        let mut s = 0;
        assert_eq!(wythoff_nim_sum(pos.as_ptr(), 3, &mut s), WythoffStatus::Ok);
        assert_eq!(s, 4);
        assert!(wythoff_last_error_message().is_null());

        let mut mv = WythoffCanonicalMove {
            heap: 99,
            amount: 0,
        };
        assert_eq!(
            wythoff_winning_move(pos.as_ptr(), 3, &mut mv),
            WythoffStatus::Ok
        );
        assert_eq!(mv, WythoffCanonicalMove { heap: 0, amount: 4 });

        let p = [1u64, 2, 3];
        assert_eq!(
            wythoff_winning_move(p.as_ptr(), 3, &mut mv),
            WythoffStatus::NoWinningMove
        );
        assert!(last_error().contains("(1,2,3)"));

        let mut is_p = false;
        assert_eq!(
            wythoff_is_p_position(p.as_ptr(), 3, &mut is_p),
            WythoffStatus::Ok
        );
        assert!(is_p);
        assert_eq!(
            wythoff_is_p_position(p.as_ptr(), 2, &mut is_p),
            WythoffStatus::UnsupportedDimension
        );
        assert_eq!(
            wythoff_nim_sum(p.as_ptr(), 0, &mut s),
            WythoffStatus::EmptyInput
        );
        assert_eq!(
            wythoff_nim_sum(ptr::null(), 3, &mut s),
            WythoffStatus::NullPointer
        );
        assert_eq!(
            wythoff_nim_sum(p.as_ptr(), 3, ptr::null_mut()),
            WythoffStatus::NullPointer
        );
    }
}

#[test]
fn winning_move_buffer() {
    unsafe {
        let ones = [1u64, 1, 1];
        let mut count = 0;
        assert_eq!(
            wythoff_all_winning_moves(ones.as_ptr(), 3, ptr::null_mut(), 0, &mut count),
            WythoffStatus::BufferTooSmall
        );
        assert_eq!(count, 4);
        let mut buf = [WythoffCanonicalMove { heap: 0, amount: 0 }; 4];
        assert_eq!(
            wythoff_all_winning_moves(ones.as_ptr(), 3, buf.as_mut_ptr(), 4, &mut count),
            WythoffStatus::Ok
        );
        assert_eq!(
            buf[3],
            WythoffCanonicalMove {
                heap: WYTHOFF_DIAGONAL,
                amount: 1
            }
        );
        let p = [1u64, 2, 3];
        assert_eq!(
            wythoff_all_winning_moves(p.as_ptr(), 3, ptr::null_mut(), 0, &mut count),
            WythoffStatus::Ok
        );
        assert_eq!(count, 0);
    }
}

#[test]
fn spec_and_table_handles() {
    unsafe {
        let mut spec = ptr::null_mut();
        let vectors = [1u64, 0, 0, 1, 1, 1];
        assert_eq!(
            wythoff_spec_new(2, vectors.as_ptr(), 3, &mut spec),
            WythoffStatus::Ok
        );
        let mut table = ptr::null_mut();
        assert_eq!(
            wythoff_solve_box(spec, 64, 0, &mut table),
            WythoffStatus::Ok
        );
        assert_eq!(wythoff_table_len(table), 4096);
        assert_eq!(wythoff_table_p_count(table), 49);
        let mut is_p = false;
        assert_eq!(
            wythoff_table_is_p(table, [3u64, 5].as_ptr(), 2, &mut is_p),
            WythoffStatus::Ok
        );
        assert!(is_p);
        assert_eq!(
            wythoff_table_is_p(table, [64u64, 0].as_ptr(), 2, &mut is_p),
            WythoffStatus::OutOfRange
        );
        wythoff_table_free(table);

        assert_eq!(
            wythoff_solve_box(spec, 1000, 1000, &mut table),
            WythoffStatus::BudgetExceeded
        );
        assert!(last_error().contains("budget"));
        wythoff_spec_free(spec);

        let bad = [0u64, 0];
        assert_eq!(
            wythoff_spec_new(2, bad.as_ptr(), 1, &mut spec),
            WythoffStatus::InvalidSpec
        );
        assert_eq!(
            wythoff_solve_box(ptr::null(), 4, 0, &mut table),
            WythoffStatus::NullPointer
        );
        assert_eq!(wythoff_table_len(ptr::null()), 0);
        wythoff_spec_free(ptr::null_mut());
        wythoff_table_free(ptr::null_mut());
    }
}

#[test]
fn sponge_handles() {
    unsafe {
        let mut level = ptr::null_mut();
        assert_eq!(
            wythoff_sponge_generate(5, 2, 0, &mut level),
            WythoffStatus::Ok
        );
        assert_eq!(wythoff_sponge_len(level), 256);
        let mut pt = [0u64; 5];
        for i in 0..256 {
            assert_eq!(
                wythoff_sponge_point(level, i, pt.as_mut_ptr(), 5),
                WythoffStatus::Ok
            );
            assert_eq!(pt.iter().fold(0, |a, &x| a ^ x), 0);
        }
        assert_eq!(
            wythoff_sponge_point(level, 256, pt.as_mut_ptr(), 5),
            WythoffStatus::OutOfRange
        );
        assert_eq!(
            wythoff_sponge_point(level, 0, pt.as_mut_ptr(), 3),
            WythoffStatus::DimensionMismatch
        );
        wythoff_sponge_free(level);

        assert_eq!(
            wythoff_sponge_generate(4, 2, 0, &mut level),
            WythoffStatus::UnsupportedDimension
        );
        assert_eq!(
            wythoff_sponge_generate(3, 6, 100, &mut level),
            WythoffStatus::BudgetExceeded
        );

        let mut member = true;
        let (nums, levels) = ([1u64, 0, 0], [1u32, 0, 0]);
        assert_eq!(
            wythoff_q_membership(nums.as_ptr(), levels.as_ptr(), 3, &mut member),
            WythoffStatus::Ok
        );
        assert!(!member);
        let (nums, levels) = ([3u64, 0, 0], [1u32, 0, 0]);
        assert_eq!(
            wythoff_q_membership(nums.as_ptr(), levels.as_ptr(), 3, &mut member),
            WythoffStatus::OutOfRange
        );
    }
}

/// Builds `tests/c/smoke.c` against the generated header and the shared
/// library from this build, then runs it.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let lib_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .and_then(|deps| deps.parent())
        .unwrap()
        .to_path_buf();
    let so = lib_dir.join(format!(
        "{}wythoff_ffi{}",
        std::env::consts::DLL_PREFIX,
        std::env::consts::DLL_SUFFIX
    ));
    assert!(so.exists(), "shared library not found at {}", so.display());

    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let exe = std::env::temp_dir().join(format!("wythoff-smoke-{}", std::process::id()));
    let status = match Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg("-L")
        .arg(&lib_dir)
        .arg("-lwythoff_ffi")
        .arg("-o")
        .arg(&exe)
        .status()
    {
        Ok(status) => status,
        Err(e) => {
            eprintln!("skipping: no C compiler ({cc}): {e}");
            return;
        }
    };
    assert!(status.success(), "C compile failed");

    let out = Command::new(&exe)
        .env("LD_LIBRARY_PATH", &lib_dir)
        .env("DYLD_LIBRARY_PATH", &lib_dir)
        .output()
        .unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
