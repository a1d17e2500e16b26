use std::process::{Command, Output};

fn eicat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eicat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

#[test]
fn enumerate_reports_hom_sizes() {
    let o = eicat(&["enumerate", "--species", "fi", "--n", "3", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["total_dim"], 24);
    assert_eq!(v["aut_orders"], serde_json::json!([1, 1, 2, 6]));
    assert_eq!(v["hom_sizes"][1][3], 3);

    let o = eicat(&["enumerate", "--species", "vi", "--q", "2", "--n", "2", "--format", "csv"]);
    assert!(stdout(&o).contains("1,2,3\n"));
    assert!(stdout(&o).contains("2,2,6\n"));
}

#[test]
fn gldim_pinned_values() {
    for (species, extra, n, c, expected) in [
        ("fi", None, "2", "3", "2"),
        ("oi", None, "3", "2", "3"),
        ("oi_g", Some(["--group", "c2"]), "2", "3", "2"),
        ("fi_d", Some(["--d", "2"]), "2", "5", "2"),
        ("vi", Some(["--q", "2"]), "2", "5", "2"),
    ] {
        let mut args = vec!["gldim", "--species", species, "--n", n, "--char", c, "--format", "json"];
        if let Some(e) = &extra {
            args.extend(e.iter());
        }
        let o = eicat(&args);
        assert!(o.status.success(), "{args:?}");
        let v = json(&o);
        assert_eq!(v["predicted"].to_string().trim_matches('"'), expected, "{args:?}");
        assert_eq!(v["agrees"], true);
    }
}

#[test]
fn gldim_infinite_flag() {
    let o = eicat(&["gldim", "--species", "fi", "--n", "2", "--char", "2", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["agrees"], true);
    assert_eq!(v["criterion"]["holds"], false);
}

#[test]
fn table_agrees_and_is_order_stable() {
    let args = ["table", "--species", "oi,fi", "--n", "2", "--char", "0,2", "--format", "csv"];
    let one = eicat(&args);
    assert!(one.status.success());
    let text = stdout(&one);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "species,n,field,bound,predicted,computed,criterion,agrees");
    assert_eq!(rows.len(), 1 + 2 * 3 * 2);
    assert!(rows[1].starts_with("OI,0,Q,"));
    assert!(rows[1..].iter().all(|r| r.ends_with(",true")));
    let many = eicat(&[&args[..], &["--threads", "3"]].concat());
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn resolve_examples() {
    let o = eicat(&["resolve", "--species", "oi", "--n", "2", "--char", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "s,0,1,2\n0,1,0,0\n1,0,1,0\n2,0,0,1\n");

    let o = eicat(&["resolve", "--species", "fi", "--n", "3", "--char", "5", "--module", "simple:1", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["length"], 2);
    assert_eq!(v["linear"], true);

    let o =
        eicat(&["resolve", "--species", "vi", "--q", "2", "--n", "2", "--char", "5", "--module", "representable:1", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["length"], 0);
    let args = [
        "resolve",
        "--species",
        "vi",
        "--q",
        "2",
        "--n",
        "2",
        "--char",
        "3",
        "--module",
        "representable:1",
        "--mode",
        "free",
        "--format",
        "json",
    ];
    let o = eicat(&args);
    assert!(o.status.success());
    assert_eq!(json(&o)["length"], 0);
}

#[test]
fn resolve_outside_the_regime_points_to_free_mode() {
    let o = eicat(&["resolve", "--species", "fi", "--n", "2", "--char", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--mode free"));
    let o = eicat(&["resolve", "--species", "fi", "--n", "2", "--char", "2", "--mode", "free", "--bound", "3"]);
    assert!(o.status.success());
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--species", "oi", "--n", "2", "--char", "2", "--seed", "7", "--samples", "5"];
    let a = eicat(&args);
    assert_eq!(a.status.code(), Some(0));
    let v = json(&a);
    assert!(v["properties"].as_array().unwrap().iter().all(|p| p["status"] == "pass"));
    assert_eq!(a.stdout, eicat(&args).stdout);
}

#[test]
fn verify_skips_regime_properties_in_modular_cells() {
    let o = eicat(&["verify", "--species", "fi", "--n", "2", "--char", "2", "--samples", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let status = |name: &str| v["properties"].as_array().unwrap().iter().find(|p| p["name"] == name).unwrap()["status"].clone();
    assert_eq!(status("minimal_resolution_is_exact"), "skipped");
    assert_eq!(status("free_resolution_is_exact"), "pass");
    assert!(v["properties"].as_array().unwrap().iter().all(|p| p["status"] != "fail"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["gldim", "--species", "xi", "--n", "2", "--char", "0"],
        vec!["gldim", "--species", "fi", "--n", "2", "--char", "4"],
        vec!["gldim", "--species", "fi", "--n", "2"],
        vec!["gldim", "--species", "fi_g", "--group", "q8", "--n", "2", "--char", "0"],
        vec!["resolve", "--species", "fi", "--n", "2", "--char", "0", "--module", "simple:5"],
        vec!["table", "--n", "5"],
    ] {
        assert_eq!(eicat(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn group_file_is_read() {
    let dir = std::env::temp_dir().join(format!("eicat-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c2.json");
    std::fs::write(&path, r#"{"name": "C2", "elements": ["e", "g"], "table": [[0, 1], [1, 0]]}"#).unwrap();
    let o = eicat(&["enumerate", "--species", "fi_g", "--group-file", path.to_str().unwrap(), "--n", "2", "--format", "json"]);
    let _ = std::fs::remove_dir_all(&dir);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["total_dim"], 17);
}
