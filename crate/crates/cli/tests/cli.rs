use std::io::Write;
use std::process::Command;

use serde_json::json;
use zariski_cli::{run, Options};

fn exec(command: &str, job: serde_json::Value) -> (String, i32) {
    exec_with(command, job, &Options::default())
}

fn exec_with(command: &str, job: serde_json::Value, opts: &Options) -> (String, i32) {
    let out = run(command, &job.to_string(), opts);
    (out.text, out.code)
}

fn z() -> serde_json::Value {
    json!({"kind": "integer"})
}

fn qx() -> serde_json::Value {
    json!({"kind": "univariate", "var": "x"})
}

fn verbose() -> Options {
    Options {
        verbose_certs: true,
        ..Options::default()
    }
}

/// Feeds every `cert` line of a report back through verify-cert.
fn reverify(ring: serde_json::Value, report: &str) -> (String, i32) {
    let certs: Vec<serde_json::Value> = report
        .lines()
        .filter_map(|l| l.strip_prefix("cert "))
        .map(|c| serde_json::from_str(c).unwrap())
        .collect();
    assert!(!certs.is_empty(), "no certificates in {report}");
    exec("verify-cert", json!({"ring": ring, "certs": certs}))
}

#[test]
fn glue_prints_seven() {
    let job = json!({
        "ring": z(), "h": "1", "parts": ["2", "3"],
        "sections": [{"num": "14", "exp": 1}, {"num": "21", "exp": 1}]
    });
    let (text, code) = exec("glue", job.clone());
    assert_eq!((text.as_str(), code), ("7\n", 0));
    let (text, code) = exec_with("glue", job, &verbose());
    assert_eq!(code, 0);
    assert!(text.contains("trace d=1 N=0 D=1"));
    assert_eq!(reverify(z(), &text).1, 0);
}

#[test]
fn glue_polynomials_and_rejections() {
    let job = json!({
        "ring": qx(), "h": "1", "parts": ["x", "x - 1"],
        "sections": [{"num": "x^3 + x", "exp": 1}, {"num": "x^3 - x^2 + x - 1", "exp": 1}]
    });
    assert_eq!(exec("glue", job), ("x^2 + 1\n".into(), 0));
    let bad = json!({
        "ring": z(), "h": "1", "parts": ["2", "3"],
        "sections": [{"num": "1", "exp": 1}, {"num": "1", "exp": 1}]
    });
    let (text, code) = exec("glue", bad);
    assert_eq!(code, 1);
    assert!(text.starts_with("false: sections 1 and 2 disagree"));
    let not_cover = json!({
        "ring": z(), "h": "1", "parts": ["2", "4"],
        "sections": [{"num": "1", "exp": 0}, {"num": "1", "exp": 0}]
    });
    assert_eq!(exec("glue", not_cover).1, 1);
}

#[test]
fn lattice_commands() {
    let (text, code) = exec("lat-eq", json!({"ring": z(), "a": ["4", "6"], "b": ["2"]}));
    assert_eq!(code, 0);
    assert!(text.starts_with("true\n"));
    assert_eq!(reverify(z(), &text).1, 0);

    let (text, code) = exec("lat-leq", json!({"ring": z(), "a": ["2", "3"], "b": ["6"]}));
    assert_eq!((text.as_str(), code), ("false: 2 ∉ √⟨6⟩\n", 1));
    assert_eq!(exec("lat-leq", json!({"ring": z(), "a": ["6"], "b": ["2", "3"]})).1, 0);

    assert_eq!(exec("normalize", json!({"ring": z(), "a": ["4", "6"]})), ("[2]\n".into(), 0));
    assert_eq!(exec("normalize", json!({"ring": z(), "a": ["0", "0"]})), ("[]\n".into(), 0));
    let (text, code) = exec_with("normalize", json!({"ring": z(), "a": ["4", "6"]}), &verbose());
    assert_eq!(code, 0);
    assert_eq!(reverify(z(), &text).1, 0);

    assert_eq!(exec("join", json!({"ring": z(), "a": ["2"], "b": ["3"]})), ("[2, 3]\n".into(), 0));
    let (text, _) = exec("meet", json!({"ring": qx(), "a": ["x"], "b": ["x", "x - 1"]}));
    assert_eq!(text, "[x^2, x^2 - x]\n");
}

#[test]
fn basic_opens() {
    assert_eq!(exec("is-basic", json!({"ring": z(), "a": ["4", "6"]})), ("yes: D(2)\n".into(), 0));
    let qxy = json!({"kind": "multivariate", "vars": ["x", "y"]});
    assert_eq!(exec("is-basic", json!({"ring": qxy, "a": ["x", "y"]})), ("unknown\n".into(), 1));
    let (text, code) = exec_with("is-basic", json!({"ring": z(), "a": ["4", "6"]}), &verbose());
    assert_eq!(code, 0);
    assert_eq!(reverify(z(), &text).1, 0);
}

#[test]
fn cover_check_examples() {
    let (text, code) = exec("cover-check", json!({"ring": z(), "target": ["6"], "parts": ["2", "3"]}));
    assert_eq!((text.as_str(), code), ("false: 2 ∉ √⟨6⟩\n", 1));
    let (text, code) = exec("cover-check", json!({"ring": z(), "target": ["1"], "parts": ["2", "3"]}));
    assert_eq!(code, 0);
    assert_eq!(reverify(z(), &text).1, 0);
    assert_eq!(exec("cover-check", json!({"ring": z(), "target": ["6"], "parts": ["6", "18"]})).1, 0);
}

#[test]
fn localization_commands() {
    let job = json!({"ring": qx(), "den": "x", "a": {"num": "1", "exp": 1}, "b": {"num": "x", "exp": 2}});
    let (text, code) = exec("loc-eq", job);
    assert_eq!(code, 0);
    assert!(text.starts_with("true (k=0)\n"));
    assert_eq!(reverify(qx(), &text).1, 0);

    let m12 = json!({"kind": "modular", "modulus": "12"});
    let job = json!({"ring": m12, "den": "2", "a": {"num": "3", "exp": 0}, "b": {"num": "0", "exp": 0}});
    let (text, code) = exec("loc-eq", job);
    assert_eq!((code, text.lines().next()), (0, Some("true (k=2)")));

    let job = json!({"ring": z(), "den": "2", "a": {"num": "1", "exp": 1}, "b": {"num": "1", "exp": 2}});
    assert_eq!(exec("loc-eq", job), ("false\n".into(), 1));

    let job = json!({"ring": z(), "from": "2", "to": "6", "section": {"num": "1", "exp": 1}});
    assert_eq!(exec("restrict", job), ("3/6\n".into(), 0));
    let job = json!({"ring": qx(), "from": "x", "to": "x + 1", "section": {"num": "1", "exp": 0}});
    assert_eq!(exec("restrict", job).1, 1);
}

#[test]
fn section_equality() {
    let s = json!({"parts": ["2", "3"], "sections": [{"num": "14", "exp": 1}, {"num": "21", "exp": 1}]});
    let seven = json!({"parts": ["1"], "sections": [{"num": "7", "exp": 0}]});
    let eight = json!({"parts": ["1"], "sections": [{"num": "8", "exp": 0}]});
    assert_eq!(exec("section-eq", json!({"ring": z(), "over": ["1"], "s": s, "t": seven})), ("true\n".into(), 0));
    assert_eq!(exec("section-eq", json!({"ring": z(), "over": ["1"], "s": s, "t": eight})), ("false\n".into(), 1));
}

#[test]
fn randomized_suites() {
    let seeded = Options {
        seed: Some(11),
        samples: Some(20),
        verbose_certs: false,
    };
    let (text, code) = exec_with("support-check", json!({"ring": z()}), &seeded);
    assert_eq!(code, 0, "{text}");
    assert!(text.starts_with("pass: 20 pairs"));
    assert_eq!(exec("support-check", json!({"ring": z()})).1, 2);

    let (text, code) = exec_with("top-roundtrip", json!({"ring": z(), "parts": ["6", "10", "15"]}), &seeded);
    assert_eq!(code, 0, "{text}");
    let (_, code) = exec("top-roundtrip", json!({"ring": qx(), "parts": ["x", "x - 1"], "elements": ["x^5 - 2"]}));
    assert_eq!(code, 0);

    for (case, g) in [("iterated", Some("3")), ("mutual", Some("-2")), ("unit", None)] {
        let f = if case == "unit" { "-1" } else { "2" };
        let mut job = json!({"ring": z(), "case": case, "f": f});
        if let Some(g) = g {
            job["g"] = json!(g);
        }
        let (text, code) = exec_with("lemma2-test", job, &seeded);
        assert_eq!(code, 0, "{case}: {text}");
    }
    assert_eq!(exec("lemma2-test", json!({"ring": z(), "case": "iterated", "f": "2", "g": "3"})).1, 2);

    let (text, code) = exec_with("sheaf-test", json!({"ring": z(), "h": "1", "f": "2", "g": "3"}), &seeded);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("compatible pairs glued: 20 of 20"));
    assert!(text.contains("incompatible pairs rejected: 20 of 20"));
}

#[test]
fn deterministic_reports() {
    let opts = Options {
        seed: Some(5),
        samples: Some(30),
        verbose_certs: true,
    };
    let job = json!({"ring": qx(), "h": "1", "f": "x", "g": "x - 1"});
    let first = exec_with("sheaf-test", job.clone(), &opts);
    assert_eq!(first, exec_with("sheaf-test", job, &opts));
    let job = json!({"ring": z(), "a": ["12", "18", "30"], "b": ["6"]});
    assert_eq!(exec_with("lat-eq", job.clone(), &opts), exec_with("lat-eq", job, &opts));
}

#[test]
fn usage_and_parse_errors() {
    let (text, code) = exec("normalize", json!({"ring": qx(), "a": ["x^"]}));
    assert_eq!(code, 2);
    assert!(text.contains("offset 2"), "{text}");
    assert_eq!(exec("normalize", json!({"ring": qx(), "b": ["x"]})).1, 2);
    assert_eq!(exec("frobnicate", json!({"ring": z()})).1, 2);
    assert_eq!(exec("normalize", json!({"ring": {"kind": "modular", "modulus": 1}, "a": []})).1, 2);
    assert_eq!(exec("normalize", json!({"ring": z(), "command": "glue", "a": []})).1, 2);
    assert_eq!(run("normalize", "{not json", &Options::default()).code, 2);
}

#[test]
fn tampered_certificate_fails() {
    let cert = json!({"kind": "radical", "x": "2", "gens": ["4", "6"], "k": 1, "coeffs": ["2", "-2"]});
    let (text, code) = exec("verify-cert", json!({"ring": z(), "certs": [cert]}));
    assert_eq!(code, 1);
    assert!(text.contains("FAILED radical 1"));
    let ok = json!({"kind": "combination", "x": "1", "gens": ["6", "10", "15"], "coeffs": ["16", "-8", "-1"]});
    assert_eq!(exec("verify-cert", json!({"ring": z(), "certs": [ok]})).1, 0);
}

#[test]
fn binary_reads_job_files() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"ring": {{"kind": "integer"}}, "command": "glue", "h": "1", "parts": ["2", "3"],
            "sections": [{{"num": "14", "exp": 1}}, {{"num": "21", "exp": 1}}]}}"#
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_zariski"))
        .args(["glue", "--job"])
        .arg(file.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "7\n");

    let out = Command::new(env!("CARGO_BIN_EXE_zariski"))
        .args(["glue", "--job", "/nonexistent/job.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
