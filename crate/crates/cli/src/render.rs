//! Text and JSON renderings of core values.

use std::collections::BTreeMap;

use coxart_core::artin_parabolic::{ArtinIntersectionCertificate, ConjectureReduction};
use coxart_core::cosets::DihedralClass;
use coxart_core::reflections::ReflectionSequence;
use coxart_core::retraction::{Decision, RetractionTrace};
use coxart_core::verify::VerifyReport;
use coxart_core::{ArtinLetter, ArtinWord, CoxeterGraph, Vertex, VertexSubset};
use serde_json::{json, Value};

pub fn word(g: &CoxeterGraph, w: &[Vertex]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(" ")
}

pub fn word_json(g: &CoxeterGraph, w: &[Vertex]) -> Value {
    json!(w.iter().map(|&v| g.name(v)).collect::<Vec<_>>())
}

pub fn artin(g: &CoxeterGraph, w: &ArtinWord) -> String {
    w.display(g).to_string()
}

fn letter_json(g: &CoxeterGraph, l: ArtinLetter) -> Value {
    json!({ "v": g.name(l.vertex), "s": l.sign.as_i8() })
}

pub fn artin_json(g: &CoxeterGraph, w: &ArtinWord) -> Value {
    Value::Array(w.iter().map(|&l| letter_json(g, l)).collect())
}

pub fn subset(g: &CoxeterGraph, s: VertexSubset) -> String {
    format!("{{{}}}", g.subset_names(s).join(", "))
}

pub fn subset_json(g: &CoxeterGraph, s: VertexSubset) -> Value {
    json!(g.subset_names(s))
}

fn pairing_json(g: &CoxeterGraph, p: &BTreeMap<Vertex, Vertex>) -> Value {
    Value::Object(
        p.iter()
            .map(|(&j, &i)| (g.name(j).to_string(), json!(g.name(i))))
            .collect(),
    )
}

fn pairing_text(g: &CoxeterGraph, p: &BTreeMap<Vertex, Vertex>) -> String {
    p.iter()
        .map(|(&j, &i)| format!("{} -> {}", g.name(j), g.name(i)))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn sequence_text(g: &CoxeterGraph, seq: &ReflectionSequence) -> String {
    let mut out = String::new();
    for e in &seq.entries {
        out.push_str(&format!("{}\t{}\t{}", e.position, word(g, &e.word), word(g, e.element.word())));
        match e.in_x {
            Some(true) => out.push_str("\tkept"),
            Some(false) => out.push_str("\tdropped"),
            None => {}
        }
        out.push('\n');
    }
    out
}

pub fn sequence_json(g: &CoxeterGraph, seq: &ReflectionSequence) -> Value {
    Value::Array(
        seq.entries
            .iter()
            .map(|e| {
                json!({
                    "position": e.position,
                    "word": word_json(g, &e.word),
                    "element": word_json(g, e.element.word()),
                    "in_x": e.in_x,
                })
            })
            .collect(),
    )
}

pub fn trace_json(g: &CoxeterGraph, trace: &RetractionTrace) -> Value {
    Value::Array(
        trace
            .steps
            .iter()
            .map(|s| {
                let (decision, emitted) = match s.decision {
                    Decision::Emitted { vertex, sign } => {
                        ("emit", letter_json(g, ArtinLetter::new(vertex, sign)))
                    }
                    Decision::Skipped => ("skip", Value::Null),
                };
                json!({
                    "position": s.position,
                    "letter": letter_json(g, s.letter),
                    "decision": decision,
                    "emitted": emitted,
                    "snapshot": word_json(g, s.snapshot.word()),
                })
            })
            .collect(),
    )
}

pub fn class_text(g: &CoxeterGraph, c: &DihedralClass) -> String {
    match c {
        DihedralClass::Trivial => "trivial".into(),
        DihedralClass::SingleReflection(r) => format!("single reflection {}", word(g, r.word())),
        DihedralClass::FullDihedral { x1, pairing } => {
            format!("dihedral X1 = {}; {}", subset(g, *x1), pairing_text(g, pairing))
        }
    }
}

pub fn class_json(g: &CoxeterGraph, c: &DihedralClass) -> Value {
    match c {
        DihedralClass::Trivial => json!({ "class": "trivial" }),
        DihedralClass::SingleReflection(r) => {
            json!({ "class": "single", "reflection": word_json(g, r.word()) })
        }
        DihedralClass::FullDihedral { x1, pairing } => json!({
            "class": "dihedral",
            "X1": subset_json(g, *x1),
            "pairing": pairing_json(g, pairing),
        }),
    }
}

pub fn certificate_json(g: &CoxeterGraph, c: &ArtinIntersectionCertificate) -> Value {
    json!({
        "w1": word_json(g, c.w1_lift.source.word()),
        "X1": subset_json(g, c.x1),
        "Y1": subset_json(g, c.y1),
        "pairing": pairing_json(g, &c.pairing),
        "core": word_json(g, c.core.word()),
    })
}

pub fn reduction_text(g: &CoxeterGraph, r: &ConjectureReduction) -> String {
    format!(
        "X' = {}\nY' = {}\nbeta = {}\n",
        subset(g, r.new_x),
        subset(g, r.new_y),
        artin(g, &r.beta)
    )
}

pub fn reduction_json(g: &CoxeterGraph, r: &ConjectureReduction) -> Value {
    json!({
        "X": subset_json(g, r.new_x),
        "Y1": subset_json(g, r.new_y),
        "beta": artin_json(g, &r.beta),
        "normalized": artin_json(g, &r.normalized),
        "omega2": artin_json(g, &r.omega2),
    })
}

pub fn report_json(r: &VerifyReport) -> Value {
    json!({
        "seed": r.seed,
        "passed": r.passed(),
        "suites": r.suites.iter().map(|s| json!({
            "name": s.suite.name(),
            "cases": s.cases,
            "failures": s.failures,
        })).collect::<Vec<_>>(),
    })
}
