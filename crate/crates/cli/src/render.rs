//! Name-based JSON and human-readable views of the core reports. Maps are
//! emitted with sorted keys and all lists follow input index order, so
//! output bytes are stable for identical input.

use arbopack_core::conditions::{FeasibilityReport, Witness};
use arbopack_core::graph::{MixedGraph, Subpartition, VertexSet};
use arbopack_core::orient::OrientationResult;
use arbopack_core::pack::Packing;
use arbopack_core::pieo::{LaminarizationTrace, SetFamily};
use arbopack_core::verify::VerificationReport;
use serde_json::{json, Map, Value};

fn names(set: VertexSet, lookup: &dyn Fn(usize) -> String) -> Value {
    Value::Array(set.iter().map(|v| Value::String(lookup(v))).collect())
}

fn subpartition_json(sp: &Subpartition, lookup: &dyn Fn(usize) -> String) -> Value {
    Value::Array(sp.blocks().iter().map(|&b| names(b, lookup)).collect())
}

fn witness_json(witness: &Witness, g: &MixedGraph) -> Value {
    let lookup = |v: usize| g.vertex_name(v).to_string();
    match witness {
        Witness::Family(sp) => json!({
            "kind": "subpartition",
            "blocks": subpartition_json(sp, &lookup),
        }),
        Witness::Cut(set) => json!({
            "kind": "cut",
            "vertices": names(*set, &lookup),
        }),
    }
}

pub fn feasibility_json(report: &FeasibilityReport, g: &MixedGraph) -> Value {
    let slack: Map<String, Value> = report
        .slack_summary
        .iter()
        .map(|(c, &s)| (c.as_str().to_string(), json!(s)))
        .collect();
    match &report.violation {
        None => json!({
            "feasible": true,
            "violated_condition": "none",
            "witness": Value::Null,
            "slack_summary": slack,
        }),
        Some(v) => json!({
            "feasible": false,
            "violated_condition": v.condition.as_str(),
            "witness": v.witness.as_ref().map(|w| witness_json(w, g)),
            "lhs": v.lhs,
            "rhs": v.rhs,
            "slack_summary": slack,
        }),
    }
}

pub fn feasibility_human(report: &FeasibilityReport, g: &MixedGraph) -> String {
    let mut out = String::new();
    match &report.violation {
        None => out.push_str("feasible\n"),
        Some(v) => {
            out.push_str(&format!("infeasible: condition {} violated\n", v.condition));
            match &v.witness {
                Some(Witness::Family(sp)) => {
                    let lookup = |x: usize| g.vertex_name(x).to_string();
                    let blocks: Vec<String> = sp
                        .blocks()
                        .iter()
                        .map(|&b| {
                            let members: Vec<String> = b.iter().map(lookup).collect();
                            format!("{{{}}}", members.join(", "))
                        })
                        .collect();
                    out.push_str(&format!("witness subpartition: [{}]\n", blocks.join(", ")));
                    out.push_str(&format!("left side {} < required {}\n", v.lhs, v.rhs));
                }
                Some(Witness::Cut(set)) => {
                    let members: Vec<String> =
                        set.iter().map(|x| g.vertex_name(x).to_string()).collect();
                    out.push_str(&format!("witness vertex set: {{{}}}\n", members.join(", ")));
                    out.push_str(&format!("left side {} < required {}\n", v.lhs, v.rhs));
                }
                // Root budget runs the other way: f~(V) must stay within k.
                None => out.push_str(&format!("root demand {} exceeds k = {}\n", v.lhs, v.rhs)),
            }
        }
    }
    let slacks: Vec<String> = report
        .slack_summary
        .iter()
        .map(|(c, s)| format!("{c}={s}"))
        .collect();
    out.push_str(&format!("minimum slack: {}\n", slacks.join(", ")));
    out
}

pub fn packing_json(packing: &Packing, g: &MixedGraph) -> Value {
    json!({
        "trees": packing
            .trees
            .iter()
            .map(|t| {
                json!({
                    "root": g.vertex_name(t.root),
                    "edges": t.edges,
                    "arcs": t.arcs,
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn orientation_trace_json(orientation: &OrientationResult, g: &MixedGraph) -> Value {
    let lookup = |v: usize| g.vertex_name(v).to_string();
    json!({
        "orientation": orientation
            .orientation
            .iter()
            .map(|&(tail, head)| json!([lookup(tail), lookup(head)]))
            .collect::<Vec<_>>(),
        "steps": orientation
            .steps
            .iter()
            .map(|s| {
                json!({
                    "edge": s.edge,
                    "tail": lookup(s.tail),
                    "head": lookup(s.head),
                    "forced_by": s
                        .forced_by
                        .as_ref()
                        .map(|sp| subpartition_json(sp, &lookup)),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn verification_json(report: &VerificationReport) -> Value {
    json!({
        "ok": report.ok(),
        "failures": report
            .failures
            .iter()
            .map(|f| {
                json!({
                    "tree": f.tree,
                    "code": f.code.as_str(),
                    "detail": f.detail,
                    "edges": f.edges,
                    "arcs": f.arcs,
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn verification_human(report: &VerificationReport) -> String {
    if report.ok() {
        return "ok\n".to_string();
    }
    let mut out = String::new();
    for f in &report.failures {
        let scope = match f.tree {
            Some(i) => format!("tree {i}"),
            None => "packing".to_string(),
        };
        out.push_str(&format!("{scope}: {} ({})\n", f.code, f.detail));
    }
    out
}

fn family_json(family: &SetFamily, ground: &[String]) -> Value {
    let lookup = |v: usize| ground[v].clone();
    Value::Array(
        family
            .members()
            .iter()
            .map(|&m| names(m, &lookup))
            .collect(),
    )
}

pub fn pieo_trace_json(trace: &LaminarizationTrace, ground: &[String]) -> Value {
    let lookup = |v: usize| ground[v].clone();
    json!({
        "initial": family_json(&trace.initial, ground),
        "steps": trace
            .steps
            .iter()
            .map(|s| {
                json!({
                    "pair": [s.pair.0, s.pair.1],
                    "union": names(s.union, &lookup),
                    "intersection": names(s.intersection, &lookup),
                })
            })
            .collect::<Vec<_>>(),
        "final": family_json(&trace.laminar, ground),
        "maximal": family_json(&trace.maximal, ground),
        "remainder": family_json(&trace.remainder, ground),
    })
}
