use std::collections::BTreeMap;
use std::process::Command;

use abelian_lcd::cli::run;
use serde_json::Value;

fn call(args: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("abelian-lcd").chain(args.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

type Fields = BTreeMap<String, String>;

/// Text output as (scalars, records grouped by tag).
fn parse_text(text: &str) -> (Fields, BTreeMap<String, Vec<Fields>>) {
    let mut scalars = Fields::new();
    let mut lists: BTreeMap<String, Vec<Fields>> = BTreeMap::new();
    for line in text.lines() {
        let mut parts = line.split('\t');
        let first = parts.next().unwrap();
        let kv = |s: &str| {
            let (k, v) = s.split_once('=').unwrap();
            (k.to_string(), v.to_string())
        };
        if first.contains('=') {
            scalars.extend(std::iter::once(kv(first)));
        } else if first == "summary" {
            scalars.extend(parts.map(kv));
        } else {
            lists
                .entry(first.to_string())
                .or_default()
                .push(parts.map(kv).collect());
        }
    }
    (scalars, lists)
}

fn parse_json(text: &str) -> (Fields, BTreeMap<String, Vec<Fields>>) {
    let v: Value = serde_json::from_str(text).unwrap();
    let mut scalars = Fields::new();
    let mut lists = BTreeMap::new();
    let fields = |o: &serde_json::Map<String, Value>| -> Fields {
        o.iter()
            .map(|(k, v)| (k.clone(), v.as_str().expect("string value").to_string()))
            .collect()
    };
    for (k, v) in v.as_object().unwrap() {
        match v {
            Value::String(s) if k != "command" => {
                scalars.insert(k.clone(), s.clone());
            }
            Value::Array(items) => {
                lists.insert(
                    k.clone(),
                    items
                        .iter()
                        .map(|i| fields(i.as_object().unwrap()))
                        .collect(),
                );
            }
            _ => {}
        }
    }
    (scalars, lists)
}

const PLURALS: &[(&str, &str)] = &[
    ("class", "classes"),
    ("ideal", "ideals"),
    ("witness", "witnesses"),
];

#[test]
fn text_and_json_carry_the_same_content() {
    for args in [
        "count --group 3,3 --p 2 --nu 1 --euclidean",
        "count --group 12,10 --p 3 --nu 2 --hermitian",
        "classify --group 3,5 --p 2 --hermitian",
        "classify --group 1 --p 7 --euclidean",
        "verify --group 6 --p 2 --euclidean",
        "verify --group 4 --p 3 --hermitian",
        "ideals --group 2,2 --p 3 --euclidean",
    ] {
        let (c1, text, _) = call(args);
        let (c2, json, _) = call(&format!("{args} --json"));
        assert_eq!((c1, c2), (0, 0), "{args}");
        let (ts, tl) = parse_text(&text);
        let (js, mut jl) = parse_json(&json);
        assert_eq!(ts, js, "{args}");
        for (tag, records) in tl {
            let plural = PLURALS.iter().find(|p| p.0 == tag).unwrap().1;
            assert_eq!(jl.remove(plural).unwrap(), records, "{args}");
        }
        assert!(jl.values().all(Vec::is_empty), "{args}: {jl:?}");
    }
}

#[test]
fn table_text_and_json_rows_agree() {
    let args = "table --p 2 --euclidean --max-order 30 --with-count";
    let (_, text, _) = call(args);
    let (_, json, _) = call(&format!("{args} --json"));
    let (_, lists) = parse_json(&json);
    let rows: Vec<Vec<String>> = lists["rows"]
        .iter()
        .map(|r| {
            ["order", "group", "r", "count"]
                .iter()
                .map(|k| r[*k].clone())
                .collect()
        })
        .collect();
    let tsv: Vec<Vec<String>> = text
        .lines()
        .map(|l| l.split('\t').map(String::from).collect())
        .collect();
    assert_eq!(rows, tsv);
}

#[test]
fn documented_examples() {
    let (code, out, _) = call("count --group 3,3 --p 2 --nu 1 --euclidean");
    let (s, _) = parse_text(&out);
    assert_eq!((code, s["r"].as_str(), s["count"].as_str()), (0, "5", "32"));

    let (code, out, _) = call("verify --group 7 --p 2 --nu 1 --euclidean");
    let (s, _) = parse_text(&out);
    assert_eq!(
        (code, s["agreement"].as_str(), s["lcd_total"].as_str()),
        (0, "true", "4")
    );

    let (code, out, _) = call("count --group 1 --p 2 --nu 1 --euclidean");
    assert_eq!((code, parse_text(&out).0["count"].as_str()), (0, "2"));

    let (_, out, _) = call("count --group 3,3,3,3,3 --p 2 --hermitian --json");
    assert_eq!(
        parse_json(&out).0["count"],
        (num_bigint::BigUint::from(1u8) << 243u32).to_string()
    );
}

#[test]
fn stored_table_check_exit_status_follows_the_byte_comparison() {
    use abelian_lcd::counting::{golden_table, render_table};
    use abelian_lcd::{generate_table, DualityContext, OrderFilter};
    for (flag, ctx) in [
        ("--euclidean", DualityContext::euclidean(2, 1).unwrap()),
        ("--hermitian", DualityContext::hermitian(2, 1).unwrap()),
    ] {
        let regenerated = render_table(
            &generate_table(ctx, 49, OrderFilter::OddOnly).unwrap(),
            false,
        );
        let expected = if regenerated == golden_table(ctx).unwrap() {
            0
        } else {
            2
        };
        let (code, out, err) = call(&format!(
            "table --p 2 --nu 1 {flag} --max-order 49 --odd-only --paper-check"
        ));
        assert_eq!(code, expected);
        assert_eq!(out, regenerated);
        assert!(err.contains("mismatched line"));
    }
    // No stored table for this context.
    assert_eq!(
        call("table --p 3 --euclidean --max-order 10 --paper-check").0,
        1
    );
}

#[test]
fn error_injection() {
    let cases = [
        // usage
        ("count --group 3 --p 2", 1),
        ("count --group 3 --p 2 --euclidean --hermitian", 1),
        ("count --p 2 --euclidean", 1),
        ("count --group 3 --p 2 --euclidean --frobnicate", 1),
        ("launch --group 3", 1),
        ("", 1),
        // bad group specs
        ("count --group 3,1 --p 2 --euclidean", 1),
        ("count --group x --p 2 --euclidean", 1),
        ("count --group 0 --p 2 --euclidean", 1),
        // domain
        ("count --group 3 --p 4 --euclidean", 1),
        ("count --group 3 --p 2 --nu 0 --euclidean", 1),
        ("classify --group 6 --p 2 --euclidean", 1),
        ("classify --group 9 --p 3 --hermitian", 1),
        ("table --p 2 --euclidean --max-order 0", 1),
        // capacity
        ("verify --group 21 --p 2 --euclidean", 3),
        ("ideals --group 5 --p 2 --euclidean --capacity 4", 3),
        ("verify --group 3 --p 11 --hermitian", 3),
        ("verify --group 3 --p 2 --nu 4 --hermitian", 3),
    ];
    for (args, expected) in cases {
        let (code, out, err) = call(args);
        assert_eq!(code, expected, "{args}: {err}");
        assert!(out.is_empty(), "{args}");
        assert!(!err.is_empty(), "{args}");
    }
    // The capacity flag lifts the bound.
    assert_eq!(
        call("verify --group 21 --p 2 --euclidean --capacity 21").0,
        0
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_abelian-lcd");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["count", "--group", "3,3", "--p", "2", "--euclidean"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("count=32"));
    assert_eq!(
        status(&["count", "--group", "3,1", "--p", "2", "--euclidean"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        status(&["verify", "--group", "21", "--p", "2", "--euclidean"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(status(&["--version"]).status.code(), Some(0));
}
