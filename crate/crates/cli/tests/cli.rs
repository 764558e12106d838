use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn polyhull(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyhull"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(path).unwrap()
}

fn manifest(dir: &Path, command: &str) -> serde_json::Value {
    let text = fs::read_to_string(dir.join(format!("{command}.manifest.json"))).unwrap();
    serde_json::from_str(&text).unwrap()
}

#[test]
fn bar_renders_as_ascii() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("bar.txt");
    fs::write(&input, "0,0\n1,0\n2,0\n").unwrap();
    let out = dir.path().join("out");
    let run = polyhull(&out, &["render", "--input", input.to_str().unwrap(), "--format", "ascii"]);
    assert!(run.status.success());
    assert_eq!(String::from_utf8(run.stdout).unwrap(), golden("bar.txt"));
    assert_eq!(fs::read_to_string(out.join("bar.txt")).unwrap(), golden("bar.txt"));
    assert_eq!(manifest(&out, "render")["exit_code"], 0);
}

#[test]
fn extremal_hexomino_svg_is_stable() {
    let mut seen = Vec::new();
    for workers in ["1", "4"] {
        let dir = TempDir::new().unwrap();
        let run = polyhull(dir.path(), &["construct", "--n", "6", "--m", "max", "--format", "svg", "--workers", workers]);
        assert!(run.status.success());
        seen.push(fs::read_to_string(dir.path().join("construct_n6_m6.svg")).unwrap());
    }
    assert_eq!(seen[0], golden("construct_n6_m6.svg"));
    assert_eq!(seen[0], seen[1]);
}

#[test]
fn dihex_svg() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("dihex.txt");
    fs::write(&input, "0,0\n1,0\n").unwrap();
    let run = polyhull(dir.path(), &["render", "--input", input.to_str().unwrap(), "--lattice", "hex"]);
    assert!(run.status.success());
    let svg = fs::read_to_string(dir.path().join("dihex.svg")).unwrap();
    assert_eq!(svg, golden("dihex.svg"));
    let hull = svg.lines().find(|l| l.contains("fill=\"none\"")).unwrap();
    assert_eq!(hull.matches(',').count(), 8);
}

#[test]
fn verify_spectrum_small() {
    let dir = TempDir::new().unwrap();
    let run = polyhull(dir.path(), &["verify", "--suite", "spectrum", "--n-max", "4"]);
    assert_eq!(run.status.code(), Some(0));
    let csv = fs::read_to_string(dir.path().join("verify_spectrum.csv")).unwrap();
    assert!(csv.starts_with("suite,check,n,d,expected,actual,pass\n"));
    assert!(csv.contains("spectrum,area spectrum,4,2,\"{4, 5}\",\"{4, 5}\",true"));
    let m = manifest(dir.path(), "verify");
    assert_eq!(m["exit_code"], 0);
    assert_eq!(m["artifacts"].as_array().unwrap().len(), 2);
    assert_eq!(m["guards"]["max_n_2d"], 14);
}

#[test]
fn verify_hex_flags_equality() {
    let dir = TempDir::new().unwrap();
    let run = polyhull(dir.path(), &["verify", "--suite", "hex", "--n-max", "2"]);
    assert_eq!(run.status.code(), Some(0));
    let table = fs::read_to_string(dir.path().join("verify_hex_table.csv")).unwrap();
    assert_eq!(table.lines().nth(2).unwrap(), "2,28,28,true,\"0,0;0,1\"");
}

#[test]
fn verify_formulas_reports_c2_table() {
    let dir = TempDir::new().unwrap();
    let run = polyhull(dir.path(), &["verify", "--suite", "formulas", "--n-max", "12", "--d-max", "3"]);
    assert_eq!(run.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("verify_formulas.json")).unwrap()).unwrap();
    let c2: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["check"] == "c2 closed vs series")
        .map(|c| c["actual"].as_str().unwrap())
        .collect();
    assert_eq!(c2[10..], ["36", "93"]);
    assert_eq!(report["failures"], 0);
}

#[test]
fn guard_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let run = polyhull(dir.path(), &["verify", "--suite", "extremal", "--n-max", "40"]);
    assert_eq!(run.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&run.stderr).contains("exceeds guard 14"));
    assert_eq!(manifest(dir.path(), "verify")["exit_code"], 2);

    let run = polyhull(dir.path(), &["spectrum", "--n", "12", "--d", "3"]);
    assert_eq!(run.status.code(), Some(2));
}

#[test]
fn bad_input_exits_with_one() {
    let dir = TempDir::new().unwrap();
    let run = polyhull(dir.path(), &["construct", "--n", "4", "--m", "1"]);
    assert_eq!(run.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&run.stderr).contains("not attainable"));

    let cube = dir.path().join("cube.txt");
    fs::write(&cube, "0,0,0\n0,0,1\n").unwrap();
    let run = polyhull(dir.path(), &["render", "--input", cube.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(1));
    assert_eq!(manifest(dir.path(), "render")["exit_code"], 1);

    let run = polyhull(dir.path(), &["no-such-command"]);
    assert_eq!(run.status.code(), Some(1));
}

#[test]
fn spectrum_output_is_deterministic() {
    let mut seen = Vec::new();
    for workers in ["1", "3", "8"] {
        let dir = TempDir::new().unwrap();
        let run = polyhull(dir.path(), &["spectrum", "--n", "8", "--workers", workers]);
        assert!(run.status.success());
        seen.push(fs::read(dir.path().join("spectrum_n8_d2_free.csv")).unwrap());
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]));
    let text = String::from_utf8(seen.remove(0)).unwrap();
    assert!(text.starts_with("area_num,area_den,count,witness_cells\n8,1,"));
    let total: u64 = text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 369);
}

#[test]
fn exact_numbers_only() {
    let dir = TempDir::new().unwrap();
    let run = polyhull(dir.path(), &["max-volume", "--n", "5", "--d", "4"]);
    assert!(run.status.success());
    let text = String::from_utf8(run.stdout).unwrap();
    assert!(text.starts_with("n=5 d=4 max="));
    assert!(!text.contains('.'));
}

#[test]
fn construction_round_trips_through_render() {
    let dir = TempDir::new().unwrap();
    assert!(polyhull(dir.path(), &["construct", "--n", "9", "--m", "7"]).status.success());
    let cells = dir.path().join("construct_n9_m7.txt");
    let run = polyhull(dir.path(), &["render", "--input", cells.to_str().unwrap(), "--format", "ascii"]);
    assert!(run.status.success());
    assert!(String::from_utf8(run.stdout).unwrap().ends_with("hull area 25/2\n"));
}
