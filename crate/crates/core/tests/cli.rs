use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use merodiff::report::samples_from_json;
use merodiff::{Complex64, DiffMatrix};

fn merodiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_merodiff")).args(args).output().expect("spawn merodiff")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("merodiff-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_points(path: &PathBuf, key: &str, points: &[Complex64]) {
    let items: Vec<String> = points.iter().map(|z| format!("[{:?},{:?}]", z.re, z.im)).collect();
    fs::write(path, format!("{{\"{key}\":[{}]}}", items.join(","))).unwrap();
}

/// Parses the complex derivative column of a `diff` CSV.
fn derivative_column(csv: &str) -> Vec<Complex64> {
    csv.lines()
        .skip(1)
        .map(|line| {
            let cols: Vec<f64> = line.split(',').skip(1).map(|x| x.parse().unwrap()).collect();
            Complex64::new(cols[2], cols[3])
        })
        .collect()
}

#[test]
fn table1_csv_layout() {
    let out = stdout(&merodiff(&["table1", "--n-min", "4", "--n-max", "6"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "N,error");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("4,6.57"));
}

#[test]
fn output_is_deterministic() {
    let args = ["elliptic", "--function", "jacobi", "--n", "5,7,...,13", "--format", "json"];
    assert_eq!(stdout(&merodiff(&args)), stdout(&merodiff(&args)));
    let path = scratch("table.csv");
    let path_str = path.to_str().unwrap();
    stdout(&merodiff(&["table1", "--out", path_str]));
    let first = fs::read(&path).unwrap();
    stdout(&merodiff(&["table1", "--out", path_str]));
    assert_eq!(first, fs::read(&path).unwrap());
}

#[test]
fn even_node_count_is_an_input_error() {
    let out = merodiff(&["elliptic", "--function", "weierstrass", "--n", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_arguments_exit_with_two() {
    assert_eq!(merodiff(&["table1", "--n-min", "9", "--n-max", "5"]).status.code(), Some(2));
    assert_eq!(merodiff(&["table1", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(merodiff(&["kummer", "--b", "-2"]).status.code(), Some(2));
    assert_eq!(merodiff(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(merodiff(&["diff", "--nodes", "/nonexistent", "--samples", "/nonexistent", "--basis", "algebraic"]).status.code(), Some(2));
}

#[test]
fn kummer_summary_and_rows() {
    let summary = scratch("summary.json");
    let out = stdout(&merodiff(&["kummer", "--b", "2.5", "--basis", "trigonometric", "--summary", summary.to_str().unwrap()]));
    assert!(out.starts_with("k,Re z,Im z,Re f,Im f,Re M,Im M\n"));
    assert_eq!(out.lines().count(), 22);
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(doc["basis"], "trigonometric");
    assert!(doc["lambda_m"][0].as_f64().unwrap().abs() < 1e-6);
}

#[test]
fn diff_differentiates_a_cubic() {
    let nodes: Vec<Complex64> = [0.1, 0.4, -0.7, 1.2, -1.5].iter().zip([0.3, -0.2, 0.5, 0.1, -0.6]).map(|(&re, im)| Complex64::new(re, im)).collect();
    let (nodes_path, samples_path) = (scratch("cubic_nodes.json"), scratch("cubic_samples.json"));
    write_points(&nodes_path, "nodes", &nodes);
    write_points(&samples_path, "samples", &nodes.iter().map(|z| z * z * z).collect::<Vec<_>>());
    let out = stdout(&merodiff(&[
        "diff",
        "--nodes",
        nodes_path.to_str().unwrap(),
        "--samples",
        samples_path.to_str().unwrap(),
        "--basis",
        "algebraic",
    ]));
    assert!(out.starts_with("k,Re z,Im z,Re df,Im df\n"));
    for (df, z) in derivative_column(&out).iter().zip(&nodes) {
        assert!((df - 3.0 * z * z).norm() < 1e-12);
    }
}

#[test]
fn constant_samples_give_zero_derivative() {
    let nodes: Vec<Complex64> = (0..7).map(|k| Complex64::new(k as f64 * 0.8 - 2.4, 0.1)).collect();
    let (nodes_path, samples_path) = (scratch("const_nodes.json"), scratch("const_samples.json"));
    write_points(&nodes_path, "nodes", &nodes);
    write_points(&samples_path, "samples", &vec![Complex64::new(2.5, -1.0); nodes.len()]);
    for basis in ["algebraic", "trigonometric"] {
        let out = stdout(&merodiff(&[
            "diff",
            "--nodes",
            nodes_path.to_str().unwrap(),
            "--samples",
            samples_path.to_str().unwrap(),
            "--basis",
            basis,
        ]));
        assert!(derivative_column(&out).iter().all(|df| df.norm() < 1e-12), "{basis}");
    }
}

#[test]
fn dumped_matrix_reproduces_output() {
    let nodes: Vec<Complex64> = (0..6).map(|k| Complex64::new(0.5 + 0.1 * k as f64, 0.2 * k as f64)).collect();
    let samples: Vec<Complex64> = nodes.iter().map(|z| (z * 0.7).exp() / (z - Complex64::new(0.0, -1.0))).collect();
    let (nodes_path, samples_path, poles_path, matrix_path) =
        (scratch("dump_nodes.json"), scratch("dump_samples.json"), scratch("dump_poles.json"), scratch("dump_matrix.json"));
    write_points(&nodes_path, "nodes", &nodes);
    write_points(&samples_path, "samples", &samples);
    fs::write(&poles_path, r#"{"poles":[{"re":0.0,"im":-1.0,"order":1}]}"#).unwrap();
    let out = stdout(&merodiff(&[
        "diff",
        "--nodes",
        nodes_path.to_str().unwrap(),
        "--poles",
        poles_path.to_str().unwrap(),
        "--samples",
        samples_path.to_str().unwrap(),
        "--basis",
        "rational",
        "--order",
        "2",
        "--dump-matrix",
        matrix_path.to_str().unwrap(),
    ]));
    let d = DiffMatrix::from_json(&fs::read_to_string(&matrix_path).unwrap()).unwrap();
    assert_eq!(d.order(), 2);
    let f = samples_from_json(&fs::read_to_string(&samples_path).unwrap()).unwrap();
    assert_eq!(d.apply(&f).unwrap().into_inner(), derivative_column(&out));
}
