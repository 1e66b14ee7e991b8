use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quatrefl")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn decompose() {
    assert_eq!(ok(&["decompose", "4b", "4b"]).trim(), "1+3a+3b+4a+5");
    assert_eq!(ok(&["decompose", "2b", "4b"]).trim(), "3b+5");
    assert_eq!(ok(&["decompose", "2a+2b", "4b"]).trim(), "3a+3b+5+5");
    let v: serde_json::Value = serde_json::from_str(&ok(&["decompose", "2a", "2a", "--json"])).unwrap();
    assert_eq!(v["decomposition"], "1+3a");
    assert_eq!(v["dim"], 4);
}

#[test]
fn branch() {
    assert_eq!(ok(&["branch", "--two-j", "0"]).trim(), "1");
    assert_eq!(ok(&["branch", "--two-j", "5"]).trim(), "6");
    assert_eq!(ok(&["branch", "--two-j", "7"]).trim(), "2b+6");
}

#[test]
fn usage_errors() {
    for args in [
        &["decompose", "7", "2a"][..],
        &["orbits", "--order", "6"],
        &["verify", "--only", "nosuch"],
        &["branch"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let o = run(&["verify", "--only", "nosuch"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("coincidence"));
}

#[test]
fn verify_filtered() {
    let out = ok(&["verify", "--only", "coincidence"]);
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 8);
    assert!(!out.contains("FAIL  "));
}

#[test]
fn verify_full() {
    let a = run(&["verify"]);
    assert_eq!(a.status.code(), Some(1));
    let text = stdout(&a);
    assert!(text.is_ascii());
    let failed: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL  ")).collect();
    assert_eq!(failed.len(), 2, "{failed:?}");
    assert!(failed[0].contains("roots.reflections.products"));
    assert!(failed[1].contains("orbits.order4.sizes"));
    assert_eq!(stdout(&run(&["verify"])), text, "deterministic text");
}

#[test]
fn verify_json() {
    let strip = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("json");
        v.as_object_mut().unwrap().remove("elapsed_seconds");
        v
    };
    let a = strip(run(&["verify", "--json"]));
    let b = strip(run(&["verify", "--json"]));
    assert_eq!(a, b);
    let checks = a["checks"].as_array().unwrap();
    assert_eq!(a["summary"]["total"].as_u64().unwrap() as usize, checks.len());
    assert!(checks.iter().all(|c| c["id"].is_string() && c["status"].is_string()));
}

#[test]
fn other_commands() {
    for cmd in ["table", "roots", "algebra", "coincidence"] {
        assert!(ok(&[cmd]).is_ascii(), "{cmd}");
        let _: serde_json::Value = serde_json::from_str(&ok(&[cmd, "--json"])).expect(cmd);
    }
    for order in ["3", "4", "5"] {
        let out = ok(&["orbits", "--order", order]);
        assert!(!out.contains("representative 1\n"), "{out}");
    }
    assert!(ok(&["coincidence"]).contains("23d 26' 33.7\""));
}
