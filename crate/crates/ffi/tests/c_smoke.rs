use std::path::PathBuf;
use std::process::Command;

/// Compiles `smoke.c` against the generated header and runs it linked to
/// the shared library built alongside this test.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().unwrap().parent().unwrap().to_path_buf();
    if !lib_dir.join("liblucaslab_ffi.so").exists() {
        eprintln!(
            "shared library not found in {}; skipping",
            lib_dir.display()
        );
        return;
    }
    let tmp = tempfile::tempdir().unwrap();
    let bin = tmp.path().join("smoke");
    let status = match Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg("-L")
        .arg(&lib_dir)
        .arg("-llucaslab_ffi")
        .arg("-Werror")
        .arg("-o")
        .arg(&bin)
        .status()
    {
        Ok(s) => s,
        Err(e) => {
            eprintln!("no C compiler ({e}); skipping");
            return;
        }
    };
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin)
        .env("LD_LIBRARY_PATH", &lib_dir)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
