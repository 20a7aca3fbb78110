//! Byte comparison of the shipped example run against `tests/golden/`.
//! Set `K3WALLS_BLESS=1` to rewrite the golden files.

use std::fs;
use std::path::Path;

use k3walls::{load_run, render_halfplane_svg, render_ns_cone_svg, render_report, run_pipeline};

fn outputs() -> Vec<(&'static str, String)> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let (config, annotations) = load_run(&root.join("data/genus9.cfg")).unwrap();
    let report = run_pipeline(&config, &annotations).unwrap();
    vec![
        ("report.txt", render_report(&report)),
        ("halfplane.svg", render_halfplane_svg(&report)),
        ("ns_cone.svg", render_ns_cone_svg(&report)),
    ]
}

#[test]
fn golden_files_match() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("K3WALLS_BLESS").is_some();
    for (name, got) in outputs() {
        let path = dir.join(name);
        if bless {
            fs::create_dir_all(&dir).unwrap();
            fs::write(&path, &got).unwrap();
            continue;
        }
        let want = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(got == want, "{name} differs from {}", path.display());
    }
}

#[test]
fn repeated_runs_are_identical() {
    assert_eq!(outputs(), outputs());
}
