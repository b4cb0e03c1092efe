use std::path::PathBuf;
use std::process::{Command, Output};

fn wythoff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wythoff"))
        .args(args)
        .env_remove("WYTHOFF_MAX_CELLS")
        .output()
        .expect("run wythoff")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wythoff-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verdict_and_move() {
    let out = wythoff(&["verdict", "--pos", "1,2,3"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "P\n"));
    assert_eq!(stdout(&wythoff(&["verdict", "--pos", "1,1,1"])), "N\n");

    let out = wythoff(&["verdict", "--pos", "1,2,3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "P");

    assert_eq!(
        stdout(&wythoff(&["move", "--pos", "1,2,3"])),
        "P-position\n"
    );
    let out = wythoff(&["move", "--pos", "7,5,6", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["move"], serde_json::json!({"vector": [1, 0, 0], "k": 4}));
    assert_eq!(v["result"], serde_json::json!([3, 5, 6]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verdict", "--pos", "1,2"][..],
        &["verdict", "--pos", "1,x,3"],
        &["move", "--pos", "1,2,3,4"],
        &["verify", "--n", "4", "--bound", "4"],
        &["sponge", "--n", "5", "--m", "1", "--format", "ply"],
        &["decompose", "--n", "3", "--m", "0"],
        &["bogus"],
    ] {
        let out = wythoff(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_wythoff"))
        .args(["solve", "--n", "3", "--bound", "16"])
        .env("WYTHOFF_MAX_CELLS", "4095")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget exceeded"));
}

#[test]
fn verification_commands() {
    let out = wythoff(&["verify", "--n", "3", "--bound", "16"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "PASS (4096 positions matched, 256 P-positions)\n"
    );

    let out = wythoff(&["verify-classic", "--bound", "64"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS"));

    let out = wythoff(&["decompose", "--n", "3", "--m", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert_eq!(text.matches("1024 points, matches").count(), 4);

    let out = wythoff(&["dimension", "--n", "3", "--max-m", "3"]);
    assert_eq!(
        stdout(&out),
        "m\tcount\tslope\n0\t1\t-\n1\t4\t2\n2\t16\t2\n3\t64\t2\n"
    );
}

#[test]
fn solve_writes_csv() {
    let spec = scratch("classic.json");
    std::fs::write(&spec, r#"{"n":2,"vectors":[[1,0],[0,1],[1,1]]}"#).unwrap();
    let table = scratch("classic.csv");
    let out = wythoff(&[
        "solve",
        "--spec",
        spec.to_str().unwrap(),
        "--bound",
        "3",
        "--out",
        table.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&table).unwrap();
    assert_eq!(csv.lines().next(), Some("x1,x2,verdict"));
    assert!(csv.contains("\n1,2,P\n") && csv.contains("\n2,2,N\n"));

    std::fs::write(&spec, r#"{"n":2,"vectors":[[0,0]]}"#).unwrap();
    let out = wythoff(&["solve", "--spec", spec.to_str().unwrap(), "--bound", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sponge_export_is_deterministic() {
    let a = scratch("a.ply");
    let b = scratch("b.ply");
    for path in [&a, &b] {
        let out = wythoff(&[
            "sponge",
            "--n",
            "3",
            "--m",
            "6",
            "--format",
            "ply",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let text = String::from_utf8(bytes).unwrap();
    assert!(text.starts_with("ply\nformat ascii 1.0\nelement vertex 4096\n"));
    assert_eq!(text.lines().count(), 7 + 4096);

    let csv = stdout(&wythoff(&["sponge", "--n", "3", "--m", "0"]));
    assert_eq!(csv, "x1,x2,x3\n0,0,0\n");
}
