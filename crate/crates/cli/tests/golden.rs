//! Byte-for-byte golden tests for the corpus files and every command report.
//!
//! `YAMAGUTI_BLESS=1 cargo test -p yamaguti-cli --test golden` rewrites both
//! directories from the current code.

mod common;

use common::*;
use yamaguti::model::{parse_model, serialize_model};

fn blessing() -> bool {
    std::env::var_os("YAMAGUTI_BLESS").is_some()
}

#[test]
fn corpus_files_are_current() {
    let dir = corpus_dir();
    if blessing() {
        std::fs::create_dir_all(&dir).unwrap();
    }
    for (name, text) in corpus_files() {
        let path = dir.join(&name);
        if blessing() {
            std::fs::write(&path, &text).unwrap();
        }
        assert_eq!(read(&path), text, "{name} is stale; rerun with YAMAGUTI_BLESS=1");
    }
}

#[test]
fn canonical_files_round_trip() {
    let mut checked = 0;
    for (name, text) in corpus_files() {
        if let Ok(m) = parse_model(&text) {
            assert_eq!(serialize_model(&m), text, "{name}");
            checked += 1;
        }
    }
    assert!(checked >= 30, "only {checked} canonical files");
}

#[test]
fn reports_match_golden() {
    let dir = golden_dir();
    if blessing() {
        std::fs::create_dir_all(&dir).unwrap();
    }
    for (name, args, code) in cases() {
        let out = run_case(&args);
        assert_eq!(out.code, code, "{name}: exit code\n{}", out.stdout);
        let path = golden_path(name);
        if blessing() {
            std::fs::write(&path, &out.stdout).unwrap();
        }
        assert_eq!(out.stdout, read(&path), "{name}");
        assert_eq!(run_case(&args), out, "{name}: second run differs");
    }
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_yamaguti");
    for (name, args, code) in cases() {
        let out = std::process::Command::new(exe).args(&args).current_dir(crate_dir()).output().unwrap();
        assert_eq!(out.status.code(), Some(code), "{name}");
        assert_eq!(String::from_utf8(out.stdout).unwrap(), read(&golden_path(name)), "{name}");
    }
}
