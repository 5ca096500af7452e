#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// (golden file, argv)
pub const GOLDEN: [(&str, &[&str]); 10] = [
    ("curve_2_10.svg", &["curve", "-i", "2", "-n", "10"]),
    ("curve_3_8.svg", &["curve", "-i", "3", "-n", "8", "--scale", "6"]),
    ("snowflake_2_2.svg", &["snowflake", "-i", "2", "-n", "2", "--format", "svg", "--grid"]),
    ("snowflake_5_1.svg", &["snowflake", "-i", "5", "-n", "1", "--format", "svg"]),
    ("tiling_2_1.svg", &["tile", "-i", "2", "-n", "1", "--certificate", "2", "--scale", "8"]),
    ("tiling_3_1.svg", &["tile", "-i", "3", "-n", "1", "--copies", "9"]),
    ("metrics_2_1.json", &["metrics", "-i", "2", "-n", "1", "--format", "json"]),
    ("metrics_5_40.json", &["metrics", "-i", "5", "-n", "40", "--format", "json"]),
    ("snowflake_4_1.json", &["snowflake", "-i", "4", "-n", "1", "--format", "json"]),
    ("tile_2_1.json", &["tile", "-i", "2", "-n", "1", "--format", "json"]),
];

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fibward"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn fibward")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// A fresh scratch directory under the target directory.
pub fn scratch(tag: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(tag);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

/// Checks one golden entry: two runs agree byte for byte and match the file.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let a = run(args);
    let b = run(args);
    if !a.status.success() {
        return Err(format!("{name}: exit {:?}", a.status.code()));
    }
    if a.stdout != b.stdout {
        return Err(format!("{name}: two runs differ"));
    }
    let want = std::fs::read(golden_path(name)).map_err(|e| format!("{name}: {e}"))?;
    if a.stdout != want {
        return Err(format!("{name}: output differs from the golden file"));
    }
    Ok(())
}
