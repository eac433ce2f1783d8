//! Runs the example binaries that `cargo test` builds alongside the tests.

use std::path::PathBuf;
use std::process::Command;

fn example(name: &str) -> Option<PathBuf> {
    let deps = std::env::current_exe().ok()?.parent()?.to_path_buf();
    let path = deps.parent()?.join("examples").join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
    path.exists().then_some(path)
}

#[test]
fn examples_run_cleanly() {
    for name in ["factor", "constructions", "preimage", "certify", "search", "weak_family"] {
        let Some(path) = example(name) else {
            eprintln!("skipping {name}: binary not built");
            continue;
        };
        let out = Command::new(&path).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name}");
    }
}
