use std::path::PathBuf;
use std::process::Command;

use dpaths_cli::format::InstanceFile;
use dpaths_graph::validate;
use dpaths_oracle::{enumerate_solutions, DEFAULT_VERTEX_CAP};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn dpaths(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dpaths"))
        .args(args)
        .env_remove("DPATHS_THREADS")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("valid JSON")
}

fn without_run(mut value: Value) -> Value {
    value.as_object_mut().unwrap().remove("run");
    value
}

#[test]
fn fixtures_match_the_oracle() {
    for name in ["two_pairs.inst", "k4.inst", "prism.inst"] {
        let path = fixture(name);
        let (code, out, err) = dpaths(&["solve", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{name}: {err}");
        let result = json(&out);
        let text = std::fs::read_to_string(&path).unwrap();
        let instance = InstanceFile::parse(&text).unwrap().instance().unwrap();
        let truth = enumerate_solutions(&instance, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(result["length"].as_u64(), truth.min_length, "{name}");
        assert_eq!(
            result["count"].as_str().unwrap(),
            truth.count().to_string(),
            "{name}"
        );
    }
}

#[test]
fn two_pairs_example_has_length_eleven() {
    let (code, out, _) = dpaths(&["solve", fixture("two_pairs.inst").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["length"], 11);
}

#[test]
fn malformed_file_exits_with_parse_code() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.inst");
    std::fs::write(&bad, "vertices = 3\nedges = [[0, 1]]\nA = [0, 1]\n").unwrap();
    let (code, _, err) = dpaths(&["solve", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("edges"), "{err}");

    std::fs::write(&bad, "vertices = 2\nedges = [[0, 5, 1]]\nA = [0, 1]\n").unwrap();
    let (code, _, err) = dpaths(&["solve", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("edges[0]"), "{err}");

    let (code, _, _) = dpaths(&["solve", dir.path().join("missing.inst").to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn invalid_instance_exits_with_validation_code() {
    let dir = tempfile::tempdir().unwrap();
    let odd = dir.path().join("odd.inst");
    std::fs::write(
        &odd,
        "vertices = 3\nedges = [[0, 1, 1], [1, 2, 1]]\nA = [0]\n",
    )
    .unwrap();
    let (code, _, err) = dpaths(&["solve", odd.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(err.contains("odd"), "{err}");
}

#[test]
fn witness_index_out_of_range() {
    let k4 = fixture("k4.inst");
    let (code, out, _) = dpaths(&["witness", k4.to_str().unwrap(), "--index", "1"]);
    assert_eq!(code, 0);
    let result = json(&out);
    assert_eq!(result["witness"], serde_json::json!([[0, 1, 1], [2, 3, 1]]));
    let (code, _, err) = dpaths(&["witness", k4.to_str().unwrap(), "--index", "2"]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn infeasible_instance_exits_with_code_four() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.inst");
    std::fs::write(
        &path,
        "vertices = 4\nedges = [[0, 1, 1], [2, 3, 1]]\nA = [0, 2]\n",
    )
    .unwrap();
    let (code, out, _) = dpaths(&["solve", path.to_str().unwrap()]);
    assert_eq!(code, 4);
    assert_eq!(json(&out)["length"], "infeasible");
    let (code, _, _) = dpaths(&["sample", path.to_str().unwrap(), "--seed", "1"]);
    assert_eq!(code, 4);
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    for seed in [1u64, 2, 3] {
        let path = dir.path().join(format!("r{seed}.inst"));
        let seed_arg = seed.to_string();
        let (code, text, _) = dpaths(&["gen-random", "--n", "14", "--seed", &seed_arg]);
        assert_eq!(code, 0);
        std::fs::write(&path, text).unwrap();
        let outputs: Vec<Value> = ["1", "4", "8"]
            .iter()
            .map(|t| {
                let (code, out, _) = dpaths(&[
                    "solve",
                    path.to_str().unwrap(),
                    "--threads",
                    t,
                    "--dump-poly",
                ]);
                assert!(code == 0 || code == 4);
                without_run(json(&out))
            })
            .collect();
        assert_eq!(outputs[0], outputs[1]);
        assert_eq!(outputs[0], outputs[2]);
    }
}

#[test]
fn generator_is_deterministic_and_round_trips() {
    let args = [
        "gen-random",
        "--n",
        "16",
        "--max-length",
        "5",
        "--a",
        "4",
        "--b",
        "2",
        "--seed",
        "9",
        "--removed-edges",
        "3",
    ];
    let (code, first, _) = dpaths(&args);
    assert_eq!(code, 0);
    let (_, second, _) = dpaths(&args);
    assert_eq!(first, second);
    let parsed = InstanceFile::parse(&first).unwrap();
    assert_eq!(parsed.seed, Some(9));
    let instance = parsed.instance().unwrap();
    assert!(validate(&instance).is_valid());
    assert_eq!(instance.a.len(), 4);
    assert_eq!(instance.graph.edge_count(), 24 - 3);
    let again = InstanceFile::parse(&parsed.emit()).unwrap();
    assert_eq!(again, parsed);
}

#[test]
fn mis_commands() {
    let (code, out, _) = dpaths(&["oracle", "mis", fixture("prism.inst").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["alpha"], 2);
    assert_eq!(json(&out)["count"], "6");

    let (code, _, err) = dpaths(&["mis", fixture("k5.inst").to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(err.contains("not planar"), "{err}");

    let dir = tempfile::tempdir().unwrap();
    let reduced = dir.path().join("k4-reduced.inst");
    let (code, _, err) = dpaths(&[
        "mis",
        fixture("k4.inst").to_str().unwrap(),
        "--emit-reduced",
        reduced.to_str().unwrap(),
    ]);
    assert_eq!(code, 6, "{err}");
    let parsed = InstanceFile::parse(&std::fs::read_to_string(&reduced).unwrap()).unwrap();
    assert_eq!(parsed.vertices, 8 * 4 + 2 * 6);
    assert!(validate(&parsed.instance().unwrap()).is_valid());
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    let output = dir.path().join("out.json");
    std::fs::write(
        &config,
        format!(
            "engine = \"modular\"\nthreads = 2\noutput = {:?}\n",
            output.to_str().unwrap()
        ),
    )
    .unwrap();
    let k4 = fixture("k4.inst");
    let (code, stdout, _) = dpaths(&[
        "--config",
        config.to_str().unwrap(),
        "solve",
        k4.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let result = json(&std::fs::read_to_string(&output).unwrap());
    assert_eq!(result["config"]["engine"], "modular");
    assert_eq!(result["run"]["threads"], 2);

    let (code, _, _) = dpaths(&[
        "--config",
        config.to_str().unwrap(),
        "solve",
        k4.to_str().unwrap(),
        "--engine",
        "exact",
    ]);
    assert_eq!(code, 0);
    let result = json(&std::fs::read_to_string(&output).unwrap());
    assert_eq!(result["config"]["engine"], "exact");

    std::fs::write(&config, "engine = \"fast\"\n").unwrap();
    let (code, _, _) = dpaths(&[
        "--config",
        config.to_str().unwrap(),
        "solve",
        k4.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    std::fs::write(&config, "colour = 1\n").unwrap();
    let (code, _, _) = dpaths(&[
        "--config",
        config.to_str().unwrap(),
        "solve",
        k4.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
}

#[test]
fn thread_count_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_dpaths"))
        .args(["solve", fixture("k4.inst").to_str().unwrap()])
        .env("DPATHS_THREADS", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        json(&String::from_utf8(out.stdout).unwrap())["run"]["threads"],
        3
    );
}

#[test]
fn gadget_dump_lists_components() {
    let (code, out, _) = dpaths(&["gadget", "dump", fixture("two_pairs.inst").to_str().unwrap()]);
    assert_eq!(code, 0);
    let dump = json(&out);
    let parts = dump.as_array().unwrap();
    assert_eq!(parts.len(), 1);
    assert!(parts[0]["vertices"].as_u64().unwrap() > 0);
}
