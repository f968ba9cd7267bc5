//! Behavioral tests of the `quboip` binary: exit codes, stdout reports, and
//! emitted files.

use std::path::Path;
use std::process::{Command, Output};

use quboip::image_io::{load_image, save_image, BoolImage, GrayImage, LoadedImage, NetpbmFormat};

fn quboip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quboip"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no exit code")
}

fn write_gray_fixture(path: &Path, level: u16) {
    let img = GrayImage::filled(6, 6, 8, level).unwrap();
    save_image(&img, path, NetpbmFormat::PgmRaw).unwrap();
}

#[test]
fn run_without_noise_reports_agreement() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.pgm");
    let img = GrayImage::from_pixels(
        4,
        4,
        8,
        vec![
            250, 5, 250, 5, 5, 250, 5, 250, 250, 5, 250, 5, 5, 250, 5, 250,
        ],
    )
    .unwrap();
    save_image(&img, &input, NetpbmFormat::PgmRaw).unwrap();
    let out_dir = dir.path().join("out");
    let output = quboip(&[
        "run",
        "--input",
        input.to_str().unwrap(),
        "--out-dir",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("ooie=0"), "stdout: {stdout}");
    assert!(stdout.contains("diff_count=0"), "stdout: {stdout}");
    assert!(out_dir.join("edge_classical.pbm").exists());
    assert!(out_dir.join("edge_quantum.pbm").exists());
    assert!(out_dir.join("report.txt").exists());
}

#[test]
fn noisy_runs_are_reproducible_and_usually_divergent() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.pgm");
    let img = GrayImage::from_pixels(8, 8, 8, (0..64u16).map(|i| (i * 4) % 256).collect()).unwrap();
    save_image(&img, &input, NetpbmFormat::PgmRaw).unwrap();
    let args_for = |out: &Path| {
        vec![
            "run".to_string(),
            "--input".into(),
            input.to_str().unwrap().into(),
            "--out-dir".into(),
            out.to_str().unwrap().into(),
            "--noise-flip-prob".into(),
            "0.1".into(),
            "--seed".into(),
            "42".into(),
            "--emit-error-map".into(),
        ]
    };
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");
    let first = Command::new(env!("CARGO_BIN_EXE_quboip"))
        .args(args_for(&out_a))
        .output()
        .unwrap();
    let second = Command::new(env!("CARGO_BIN_EXE_quboip"))
        .args(args_for(&out_b))
        .output()
        .unwrap();
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    for name in [
        "edge_classical.pbm",
        "edge_quantum.pbm",
        "report.txt",
        "error_map.pbm",
    ] {
        let a = std::fs::read(out_a.join(name)).unwrap();
        let b = std::fs::read(out_b.join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between identical runs");
    }
}

#[test]
fn missing_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let output = quboip(&[
        "run",
        "--input",
        dir.path().join("absent.pgm").to_str().unwrap(),
        "--out-dir",
        dir.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 3);
}

#[test]
fn malformed_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.pgm");
    std::fs::write(&input, b"P9\nnot an image\n").unwrap();
    let output = quboip(&[
        "run",
        "--input",
        input.to_str().unwrap(),
        "--out-dir",
        dir.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 3);
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("parse error"), "stderr: {stderr}");
}

#[test]
fn even_kernel_width_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.pgm");
    write_gray_fixture(&input, 128);
    let output = quboip(&[
        "run",
        "--input",
        input.to_str().unwrap(),
        "--out-dir",
        dir.path().join("out").to_str().unwrap(),
        "--kernel-size",
        "4",
    ]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn unknown_flag_exits_2() {
    let output = quboip(&["run", "--no-such-flag"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn slice_writes_all_planes_and_msb_is_saturated() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.pgm");
    write_gray_fixture(&input, 128);
    let out_dir = dir.path().join("planes");
    let output = quboip(&[
        "slice",
        "--input",
        input.to_str().unwrap(),
        "--out-dir",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);
    for b in 0..8 {
        assert!(out_dir.join(format!("plane{b}.pbm")).exists(), "plane{b}");
    }
    match load_image(out_dir.join("plane7.pbm")).unwrap() {
        LoadedImage::Bool(plane) => {
            assert_eq!(plane, BoolImage::filled(6, 6, true).unwrap());
        }
        other => panic!("expected a bitplane, got {other:?}"),
    }
}

#[test]
fn classical_edge_of_a_lone_center_pixel_is_all_ones() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("center.pbm");
    let mut img = BoolImage::filled(3, 3, false).unwrap();
    img.set(1, 1, true);
    save_image(&img, &input, NetpbmFormat::PbmPlain).unwrap();
    let out_dir = dir.path().join("out");
    let output = quboip(&[
        "edge",
        "--input",
        input.to_str().unwrap(),
        "--out-dir",
        out_dir.to_str().unwrap(),
        "--backend",
        "classical",
    ]);
    assert_eq!(exit_code(&output), 0);
    match load_image(out_dir.join("edge_classical.pbm")).unwrap() {
        LoadedImage::Bool(edges) => {
            assert_eq!(edges, BoolImage::filled(3, 3, true).unwrap());
        }
        other => panic!("expected a bitplane, got {other:?}"),
    }
    assert!(!out_dir.join("edge_quantum.pbm").exists());
}

#[test]
fn compare_a_file_with_itself_reports_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.pbm");
    let img = BoolImage::from_bits(2, 3, vec![true, false, true, false, true, false]).unwrap();
    save_image(&img, &path, NetpbmFormat::PbmRaw).unwrap();
    let output = quboip(&["compare", path.to_str().unwrap(), path.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert_eq!(stdout, "ooie=0\ndiff_count=0\nrows=2\ncols=3\n");
}

#[test]
fn compare_detects_a_single_differing_pixel() {
    let dir = tempfile::tempdir().unwrap();
    let a_path = dir.path().join("a.pbm");
    let b_path = dir.path().join("b.pbm");
    let a = BoolImage::filled(3, 3, false).unwrap();
    let mut b = a.clone();
    b.set(2, 0, true);
    save_image(&a, &a_path, NetpbmFormat::PbmRaw).unwrap();
    save_image(&b, &b_path, NetpbmFormat::PbmRaw).unwrap();
    let out_dir = dir.path().join("cmp");
    let output = quboip(&[
        "compare",
        a_path.to_str().unwrap(),
        b_path.to_str().unwrap(),
        "--out-dir",
        out_dir.to_str().unwrap(),
        "--emit-error-map",
    ]);
    assert_eq!(exit_code(&output), 0);
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("ooie=1"));
    assert!(stdout.contains("diff_count=1"));
    match load_image(out_dir.join("error_map.pbm")).unwrap() {
        LoadedImage::Bool(map) => {
            assert_eq!(map.count_ones(), 1);
            assert!(map.get(2, 0));
        }
        other => panic!("expected a bitplane, got {other:?}"),
    }
}
