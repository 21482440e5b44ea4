use serde::Serialize;
use serde_json::Value;

use loopcomm::commutator::TcWitness;
use loopcomm::{SeriesReport, SubloopSet};

#[derive(Debug, Serialize)]
pub struct LoopInfo {
    pub n: usize,
    pub id: String,
}

#[derive(Debug, Default, Serialize)]
pub struct Flags {
    pub finite_mode: bool,
    pub pruned: bool,
    pub closure_cap: usize,
    pub tc_depth: Option<usize>,
    pub threads: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct SeriesJson {
    pub kind: &'static str,
    pub chain: Vec<Vec<usize>>,
    pub terminated: bool,
    pub length: usize,
}

impl From<&SeriesReport> for SeriesJson {
    fn from(r: &SeriesReport) -> Self {
        SeriesJson {
            kind: r.kind.label(),
            chain: r.chain.iter().map(SubloopSet::to_vec).collect(),
            terminated: r.terminated,
            length: r.length,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub term: String,
    pub a: usize,
    pub b: usize,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub values: [usize; 4],
}

impl From<&TcWitness> for WitnessJson {
    fn from(w: &TcWitness) -> Self {
        WitnessJson {
            term: w.term.clone(),
            a: w.a,
            b: w.b,
            u: w.u.clone(),
            v: w.v.clone(),
            values: w.values,
        }
    }
}

/// The JSON document; every key is always present.
#[derive(Debug, Serialize)]
pub struct Report {
    #[serde(rename = "loop")]
    pub loop_info: Option<LoopInfo>,
    pub operation: &'static str,
    pub wordset: Option<Vec<String>>,
    pub result: Value,
    pub witnesses: Vec<WitnessJson>,
    pub series: Vec<SeriesJson>,
    pub flags: Flags,
}

pub fn fmt_set(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn print_series(s: &SeriesJson) {
    let chain: Vec<String> = s.chain.iter().map(|c| fmt_set(c)).collect();
    let end = if s.terminated {
        "reaches 1"
    } else {
        "stabilizes"
    };
    println!("{}: length {}, {end}", s.kind, s.length);
    println!("  {}", chain.join(" > "));
}

pub fn print_witness(w: &WitnessJson) {
    println!("witness: t = {}", w.term);
    println!("  a = {}, b = {}, u = {:?}, v = {:?}", w.a, w.b, w.u, w.v);
    println!(
        "  t(a,u) = {}, t(a,v) = {}, t(b,u) = {}, t(b,v) = {}",
        w.values[0], w.values[1], w.values[2], w.values[3]
    );
}
