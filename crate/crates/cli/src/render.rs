use std::fmt::Write;

use eicat_core::category::{FiniteCategory, Species};
use eicat_core::resolution::GlobalDimReport;
use eicat_core::verify::VerifyReport;
use serde_json::{json, Value};

pub fn json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn hom_sizes(cat: &FiniteCategory) -> Vec<Vec<usize>> {
    let n = cat.n();
    (0..=n).map(|a| (0..=n).map(|b| if a <= b { cat.hom_size(a, b) } else { 0 }).collect()).collect()
}

pub fn enumerate_json(cat: &FiniteCategory) -> Value {
    let n = cat.n();
    json!({
        "species": cat.species().describe(),
        "params": cat.species().params_json(),
        "n": n,
        "objects": (0..=n).collect::<Vec<_>>(),
        "hom_sizes": hom_sizes(cat),
        "aut_orders": (0..=n).map(|x| cat.hom_size(x, x)).collect::<Vec<_>>(),
        "total_dim": cat.total(),
        "category": cat.to_json(),
    })
}

pub fn enumerate_md(cat: &FiniteCategory) -> String {
    let n = cat.n();
    let mut out = format!("# {}, n = {n}\n\n", cat.species().describe());
    out.push_str("| hom(a, b) |");
    for b in 0..=n {
        write!(out, " {b} |").unwrap();
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(n + 1));
    out.push('\n');
    for (a, row) in hom_sizes(cat).iter().enumerate() {
        write!(out, "| {a} |").unwrap();
        for (b, h) in row.iter().enumerate() {
            if b < a {
                out.push_str(" |");
            } else {
                write!(out, " {h} |").unwrap();
            }
        }
        out.push('\n');
    }
    out.push_str("\n| x | \\|Aut(x)\\| |\n|---|---|\n");
    for x in 0..=n {
        writeln!(out, "| {x} | {} |", cat.hom_size(x, x)).unwrap();
    }
    writeln!(out, "\ntotal dimension: {}", cat.total()).unwrap();
    out
}

pub fn enumerate_csv(cat: &FiniteCategory) -> String {
    let mut out = String::from("a,b,hom_size\n");
    for (a, row) in hom_sizes(cat).iter().enumerate() {
        for (b, h) in row.iter().enumerate().skip(a) {
            writeln!(out, "{a},{b},{h}").unwrap();
        }
    }
    out
}

fn criterion_text(r: &GlobalDimReport) -> String {
    let orders: Vec<String> = r.criterion.objects.iter().map(|o| o.aut_order.to_string()).collect();
    let verdict = if r.criterion.holds { "holds" } else { "fails" };
    format!("{verdict} (|Aut(x)| = {})", orders.join(", "))
}

pub fn gldim_md(species: &Species, r: &GlobalDimReport) -> String {
    let mut out = format!("# gl.dim of k{}_{} over {}\n\n", species.describe(), r.n, r.field);
    writeln!(out, "- predicted: {}", r.predicted).unwrap();
    writeln!(out, "- computed: {}", r.computed).unwrap();
    writeln!(out, "- criterion: {}", criterion_text(r)).unwrap();
    writeln!(out, "- agrees: {}", if r.agrees { "yes" } else { "no" }).unwrap();
    out.push_str("\n| module | projective dimension |\n|---|---|\n");
    for s in &r.summands {
        writeln!(out, "| {} | {} |", s.module, s.projective_dimension).unwrap();
    }
    out
}

pub fn grid_md(rows: &[(Species, GlobalDimReport)]) -> String {
    let mut out = String::from("| species | n | field | predicted | computed | criterion | agrees |\n|---|---|---|---|---|---|---|\n");
    for (s, r) in rows {
        let criterion = if r.criterion.holds { "holds" } else { "fails" };
        let agrees = if r.agrees { "yes" } else { "NO" };
        writeln!(out, "| {} | {} | {} | {} | {} | {criterion} | {agrees} |", s.describe(), r.n, r.field, r.predicted, r.computed).unwrap();
    }
    out
}

pub fn grid_csv(rows: &[(Species, GlobalDimReport)]) -> String {
    let mut out = String::from("species,n,field,bound,predicted,computed,criterion,agrees\n");
    for (s, r) in rows {
        writeln!(out, "{},{},{},{},{},{},{},{}", s.describe(), r.n, r.field, r.bound, r.predicted, r.computed, r.criterion.holds, r.agrees)
            .unwrap();
    }
    out
}

pub struct ResolveMeta {
    pub category: String,
    pub params: Value,
    pub n: usize,
    pub field: String,
    pub module: String,
}

/// Rows `s`, columns objects `0..objects`.
pub fn rows_csv(rows: &[Vec<usize>], objects: usize) -> String {
    let mut out = String::from("s");
    for x in 0..objects {
        write!(out, ",{x}").unwrap();
    }
    out.push('\n');
    for (s, row) in rows.iter().enumerate() {
        out.push_str(&s.to_string());
        for x in 0..objects {
            write!(out, ",{}", row.get(x).copied().unwrap_or(0)).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn betti_md(meta: &ResolveMeta, mode: &str, rows: &[Vec<usize>], length: Option<i64>, linear: Option<bool>) -> String {
    let mut out = format!("# {mode} resolution of {} over k{}_{} ({})\n\n", meta.module, meta.category, meta.n, meta.field);
    match length {
        Some(l) => writeln!(out, "- length: {l}").unwrap(),
        None => writeln!(out, "- length: not reached within the bound").unwrap(),
    }
    if let Some(l) = linear {
        writeln!(out, "- linear: {}", if l { "yes" } else { "NO" }).unwrap();
    }
    out.push_str("\n| s |");
    for x in 0..=meta.n {
        write!(out, " {x} |").unwrap();
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(meta.n + 1));
    out.push('\n');
    for (s, row) in rows.iter().enumerate() {
        write!(out, "| {s} |").unwrap();
        for x in 0..=meta.n {
            write!(out, " {} |", row.get(x).copied().unwrap_or(0)).unwrap();
        }
        out.push('\n');
    }
    out
}

fn status(s: eicat_core::verify::Status) -> &'static str {
    use eicat_core::verify::Status;
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
    }
}

pub fn verify_md(r: &VerifyReport) -> String {
    let (pass, fail, skipped) = r.counts();
    let mut out = format!("# verify {} n = {} over {} (seed {}, headroom {})\n\n", r.species, r.n, r.field, r.seed, r.headroom);
    writeln!(out, "{pass} passed, {fail} failed, {skipped} skipped\n").unwrap();
    out.push_str("| property | status | cases | detail |\n|---|---|---|---|\n");
    for p in &r.properties {
        writeln!(out, "| {} | {} | {} | {} |", p.name, status(p.status), p.cases, p.detail.replace('|', "\\|")).unwrap();
    }
    out
}

pub fn verify_csv(r: &VerifyReport) -> String {
    let mut out = String::from("property,status,cases,detail\n");
    for p in &r.properties {
        writeln!(out, "{},{},{},\"{}\"", p.name, status(p.status).to_lowercase(), p.cases, p.detail.replace('"', "'")).unwrap();
    }
    out
}
