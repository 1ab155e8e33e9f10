use std::fs;
use std::process::{Command, Output};

fn quintic(args: &[&str], cache: Option<&std::path::Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_quintic"));
    cmd.args(args).env_remove("QUINTIC_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("QUINTIC_CACHE_DIR", dir);
    }
    cmd.output().expect("run quintic")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_seed_constant() {
    let o = quintic(&["expand", "--order", "0", "--vars", "s3"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "s3 = (-6) + O(q^1/10)\n");
}

#[test]
fn expand_json_is_exact() {
    let o = quintic(&["expand", "--order", "10", "--vars", "Y,s0", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 10);
    assert_eq!(v["series"][0]["name"], "Y");
    assert_eq!(v["series"][0]["trunc"], "11/10");
    assert_eq!(v["series"][0]["terms"][1]["exp"], "10/10");
    assert_eq!(v["series"][0]["terms"][1]["coeff"]["rat"], "-23");
    assert_eq!(v["series"][1]["terms"][0]["coeff"]["irr"], "1/5");
}

#[test]
fn invariants_open_table() {
    let o = quintic(&["invariants", "--sector", "open", "--max-degree", "3"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 30\n3 1530\n");
    let o = quintic(&["invariants", "--sector", "closed", "--max-degree", "2", "--order", "15"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("need order 20"));
}

#[test]
fn verify_vf_lists_all_entries() {
    let o = quintic(&["verify", "vf"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let entries = out.lines().filter(|l| l.starts_with("PASS A_R[")).count();
    assert_eq!(entries, 25);
    assert!(!out.contains("FAIL"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [vec!["frobnicate"], vec!["expand", "--vars", "s9"], vec!["--epsilon", "2", "expand"], vec!["verify", "nope"]] {
        let o = quintic(&args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn epsilon_flips_disk_function() {
    let a = stdout(&quintic(&["expand", "--order", "5", "--vars", "F"], None));
    let b = stdout(&quintic(&["--epsilon", "1", "expand", "--order", "5", "--vars", "F"], None));
    assert_eq!(a, "F = (1875/2)*q^1/2 + O(q^3/5)\n");
    assert_eq!(b, "F = (-1875/2)*q^1/2 + O(q^3/5)\n");
}

#[test]
fn cache_round_trip_and_truncated_view() {
    let dir = tempfile::tempdir().unwrap();
    let fresh = stdout(&quintic(&["expand", "--order", "12"], None));
    let first = quintic(&["expand", "--order", "30", "--vars", "s7"], Some(dir.path()));
    assert_eq!(first.status.code(), Some(0));
    let file = dir.path().join("bundle-epsm1.txt");
    let stored = fs::read_to_string(&file).unwrap();
    assert!(stored.starts_with("quintic-bundle v1\norder 30\n"));

    // lower order is served from the cache without rewriting it
    let cached = stdout(&quintic(&["expand", "--order", "12"], Some(dir.path())));
    assert_eq!(cached, fresh);
    assert_eq!(fs::read_to_string(&file).unwrap(), stored);

    let again = stdout(&quintic(&["expand", "--order", "30", "--vars", "s7"], Some(dir.path())));
    assert_eq!(again, stdout(&first));

    fs::write(&file, stored.replacen("v1", "v7", 1)).unwrap();
    let o = quintic(&["expand", "--order", "3"], Some(dir.path()));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 15"));
}

#[test]
fn cache_dir_flag_creates_directory() {
    let dir = tempfile::tempdir().unwrap();
    let sub = dir.path().join("nested");
    let path = sub.to_str().unwrap();
    let o = quintic(&["--cache-dir", path, "expand", "--order", "2", "--vars", "s0"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(sub.join("bundle-epsm1.txt").exists());
}
