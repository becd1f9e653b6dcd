//! Text and JSON rendering. JSON is one object per invocation with
//! alphabetically ordered keys; text is line-oriented.

use serde_json::{json, Value};

use biop_core::bioperate::ConstructionTrace;
use biop_core::enumerate::{EnumerationReport, Query, RecordReport};
use biop_core::minimal::Minimality;
use biop_core::multiset::Multiset;
use biop_core::ring::RingElement;
use biop_core::Error;

fn emit(value: Value) {
    println!("{value}");
}

pub fn check(s: &Multiset, json_format: bool) -> Result<(), Error> {
    let report = s.classify()?;
    let minimality = if report.is_bioperational {
        Some(s.minimality()?)
    } else {
        None
    };
    let (minimal, witness) = match &minimality {
        None => (Value::Null, Value::Null),
        Some(Minimality::Minimal) => (Value::Bool(true), Value::Null),
        Some(Minimality::NonMinimal { removable }) => {
            (Value::Bool(false), Value::String(removable.to_literal()))
        }
    };
    if json_format {
        emit(json!({
            "command": "check",
            "ring": s.ring().name(),
            "elements": s.to_literal(),
            "sum": report.sum.to_string(),
            "product": report.product.to_string(),
            "bioperational": report.is_bioperational,
            "trivial": report.is_trivial,
            "vanishing": report.is_vanishing,
            "minimal": minimal,
            "witness": witness,
        }));
    } else {
        println!("ring: {}", s.ring().name());
        println!("elements: {s}");
        println!("sum: {}", report.sum);
        println!("product: {}", report.product);
        println!("bioperational: {}", report.is_bioperational);
        println!("trivial: {}", report.is_trivial);
        println!("vanishing: {}", report.is_vanishing);
        match minimality {
            None => {}
            Some(Minimality::Minimal) => println!("minimal: true"),
            Some(Minimality::NonMinimal { removable }) => {
                println!("minimal: false");
                println!("removable: {removable}");
            }
        }
    }
    Ok(())
}

pub fn construct(trace: &ConstructionTrace, json_format: bool) {
    if json_format {
        emit(json!({
            "command": "construct",
            "ring": trace.input_factors.ring().name(),
            "trace": trace.to_json(),
        }));
        return;
    }
    println!("ring: {}", trace.input_factors.ring().name());
    println!("factors: {}", trace.input_factors);
    println!("target: {}", trace.target);
    for t in &trace.case2_transforms {
        println!("transform: {} -> {}", t.removed, t.inserted);
    }
    for (label, count) in &trace.appendages_applied {
        println!("appendage: {label} x{count}");
    }
    for removed in &trace.trimmed {
        println!("trimmed: {removed}");
    }
    println!("result: {}", trace.result);
    println!("sum-product: {}", trace.target);
}

pub fn complete(input: &Multiset, appended: &RingElement, result: &Multiset, json_format: bool) {
    if json_format {
        emit(json!({
            "command": "complete",
            "ring": input.ring().name(),
            "elements": input.to_literal(),
            "appended": appended.to_string(),
            "result": result.to_literal(),
        }));
    } else {
        println!("ring: {}", input.ring().name());
        println!("elements: {input}");
        println!("appended: {appended}");
        println!("result: {result}");
    }
}

pub fn enumeration(report: &EnumerationReport, json_format: bool) {
    if json_format {
        let mut value = report.to_json();
        value["command"] = Value::String("enumerate".into());
        emit(value);
        return;
    }
    println!("ring: {}", report.ring.name());
    match report.query {
        Query::ByLength(n) => println!("query: length {n}"),
        Query::BySumProduct(m) => println!("query: sum-product {m}"),
    }
    println!("count: {}", report.count);
    for s in &report.solutions {
        println!("{}", s.to_literal());
    }
}

pub fn records(max_n: u64, report: &RecordReport, json_format: bool) {
    if json_format {
        let mut value = report.to_json();
        value["command"] = Value::String("records".into());
        value["max_n"] = json!(max_n);
        emit(value);
    } else {
        println!("max_n: {max_n}");
        println!(
            "positions: {}",
            report
                .positions
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        );
    }
}

pub fn uniform(modulus: i64, max_n: u64, solutions: &[(RingElement, u64)], json_format: bool) {
    if json_format {
        emit(json!({
            "command": "uniform",
            "modulus": modulus,
            "max_n": max_n,
            "solutions": solutions
                .iter()
                .map(|(a, n)| json!({ "a": a.to_string(), "n": n }))
                .collect::<Vec<_>>(),
        }));
    } else {
        println!("modulus: {modulus}");
        for (a, n) in solutions {
            println!("a={a} n={n}");
        }
    }
}

pub fn verdict(target: &str, pass: bool, json_format: bool) {
    if json_format {
        emit(json!({
            "command": "verify",
            "target": target,
            "pass": pass,
        }));
    } else {
        println!("target: {target}");
        println!("pass: {pass}");
    }
}

pub fn oeis(id: &str, count: usize, terms: &[u64], json_format: bool) {
    if json_format {
        emit(json!({
            "command": "oeis",
            "id": id,
            "offset": 2,
            "count": count,
            "terms": terms,
        }));
    } else {
        println!(
            "{}",
            terms
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        );
    }
}
