//! `loopcomm`: command-line front end for the loop commutator library.

mod input;
mod report;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use loopcomm::commutator::{
    associator_subloop, classify, comm_subloop, derived_subloop, series, tc_refute,
    upper_central_chain, Classification,
};
use loopcomm::normal::all_normal_subloops;
use loopcomm::permgrp::DEFAULT_CAP;
use loopcomm::words::{inn, mlt, totinn, totmlt, wordset_generates, InnerWordSet, Scope};
use loopcomm::{verify, CommutatorConfig, CommutatorEngine, Error, SeriesKind, WordSpec};

use input::Loaded;
use report::{
    fmt_set, print_series, print_witness, Flags, LoopInfo, Report, SeriesJson, WitnessJson,
};

#[derive(Parser)]
#[command(
    name = "loopcomm",
    version,
    about = "Commutator theory for finite loops"
)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct GlobalOpts {
    /// `auto`, `default`, comma-separated word names, or a file of `name = word` lines
    #[arg(long, global = true, default_value = "default")]
    wordset: String,
    /// Only require the words to generate the inner mapping group (default)
    #[arg(long, global = true, overrides_with = "no_finite_mode")]
    finite_mode: bool,
    /// Require the words to generate the total inner mapping group
    #[arg(long, global = true, overrides_with = "finite_mode")]
    no_finite_mode: bool,
    /// Vary every parameter slot independently
    #[arg(long, global = true)]
    no_prune: bool,
    /// Largest permutation group the closure may enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    closure_cap: usize,
    /// Emit a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the parallel parts
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Verb {
    /// Parse and validate a loop table
    Check { input: String },
    /// Basic invariants: mapping groups, center, derived and associator subloops, series
    Analyze { input: String },
    /// Orders of the multiplication and inner mapping groups
    Innmaps { input: String },
    /// All normal subloops
    Normals { input: String },
    /// The commutator [A,B] of two normal subloops
    Commutator {
        input: String,
        /// `Q`, `1`, `H` (G[⊕] loops only) or comma-separated indices
        #[arg(long = "A", default_value = "Q")]
        a: String,
        #[arg(long = "B", default_value = "Q")]
        b: String,
        /// Search for term-condition violations up to this depth
        #[arg(long)]
        tc_depth: Option<usize>,
        /// Normal subloop for the search; defaults to the computed commutator
        #[arg(long, requires = "tc_depth")]
        delta: Option<String>,
    },
    /// Lower central, congruence derived and Bruck derived series
    Series {
        input: String,
        /// `lower`, `derived`, `bruck` or `all`
        #[arg(long, default_value = "all")]
        kind: String,
    },
    /// Nilpotency class and solvability lengths
    Classify { input: String },
    /// Build a loop from parts
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Recompute the published worked examples
    VerifyPaper,
}

#[derive(Subcommand)]
enum Construct {
    /// G[⊕] from an abelian group table and a Latin square on its elements
    Gplus {
        #[arg(long)]
        group: String,
        #[arg(long)]
        oplus: String,
        /// Write the table here instead of standard output
        #[arg(long)]
        out: Option<String>,
    },
}

struct Ctx {
    opts: GlobalOpts,
    words: WordSpec,
}

impl Ctx {
    fn finite_mode(&self) -> bool {
        !self.opts.no_finite_mode
    }

    fn config(&self) -> CommutatorConfig {
        CommutatorConfig {
            words: self.words.clone(),
            finite_mode: self.finite_mode(),
            pruned: !self.opts.no_prune,
            early_exit: false,
            cap: self.opts.closure_cap,
        }
    }

    fn flags(&self, tc_depth: Option<usize>) -> Flags {
        Flags {
            finite_mode: self.finite_mode(),
            pruned: !self.opts.no_prune,
            closure_cap: self.opts.closure_cap,
            tc_depth,
            threads: self.opts.threads,
        }
    }

    fn report(&self, l: Option<&Loaded>, operation: &'static str, result: Value) -> Report {
        Report {
            loop_info: l.map(|l| LoopInfo {
                n: l.q.order(),
                id: l.id.clone(),
            }),
            operation,
            wordset: None,
            result,
            witnesses: Vec::new(),
            series: Vec::new(),
            flags: self.flags(None),
        }
    }
}

fn properties(l: &Loaded) -> Map<String, Value> {
    let q = &l.q;
    let v = json!({
        "order": q.order(),
        "identity": q.identity(),
        "commutative": q.is_commutative(),
        "associative": q.is_associative(),
        "abelian_group": q.is_abelian_group(),
        "inverse_property": q.has_inverse_property(),
        "automorphic_inverse_property": q.has_aaip(),
    });
    match v {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

fn classification_json(c: &Classification) -> Value {
    json!({
        "centrally_nilpotent": c.centrally_nilpotent,
        "congruence_solvable": c.congruence_solvable,
        "bruck_solvable": c.bruck_solvable,
    })
}

fn all_series(e: &CommutatorEngine<'_>, kinds: &[SeriesKind]) -> Result<Vec<SeriesJson>, Error> {
    kinds
        .iter()
        .map(|&k| series(e, k).map(|r| SeriesJson::from(&r)))
        .collect()
}

const ALL_KINDS: [SeriesKind; 3] = [
    SeriesKind::LowerCentral,
    SeriesKind::CongruenceDerived,
    SeriesKind::BruckDerived,
];

fn run(ctx: &Ctx, verb: Verb) -> anyhow::Result<Report> {
    let cap = ctx.opts.closure_cap;
    match verb {
        Verb::Check { input } => {
            let l = input::load(&input)?;
            let props = properties(&l);
            Ok(ctx.report(Some(&l), "check", Value::Object(props)))
        }
        Verb::Analyze { input } => {
            let l = input::load(&input)?;
            let q = &l.q;
            let e = CommutatorEngine::new(q, &ctx.config())?;
            let mut m = properties(&l);
            m.insert("mlt_order".into(), json!(mlt(q, cap)?.order()));
            m.insert("inn_order".into(), json!(inn(q, cap)?.order()));
            m.insert("totmlt_order".into(), json!(totmlt(q, cap)?.order()));
            m.insert("totinn_order".into(), json!(totinn(q, cap)?.order()));
            m.insert("center".into(), json!(q.center_elements().to_vec()));
            m.insert("derived_subloop".into(), json!(derived_subloop(q).to_vec()));
            m.insert(
                "associator_subloop".into(),
                json!(associator_subloop(q).to_vec()),
            );
            let c = comm_subloop(q);
            m.insert("comm".into(), json!(c.comm.to_vec()));
            m.insert("comm_is_normal".into(), json!(c.is_normal));
            m.insert(
                "normal_subloops".into(),
                json!(all_normal_subloops(q).len()),
            );
            m.insert("classification".into(), classification_json(&classify(&e)?));
            let mut r = ctx.report(Some(&l), "analyze", Value::Object(m));
            r.wordset = Some(e.word_names());
            r.series = all_series(&e, &ALL_KINDS)?;
            Ok(r)
        }
        Verb::Innmaps { input } => {
            let l = input::load(&input)?;
            let q = &l.q;
            let words = match &ctx.words {
                WordSpec::Words(ws) => ws.clone(),
                WordSpec::Auto => {
                    let e = CommutatorEngine::new(q, &ctx.config())?;
                    let names = e.word_names();
                    let names: Vec<&str> = names.iter().map(String::as_str).collect();
                    InnerWordSet::from_names(&names, Scope::Inn)?.words
                }
            };
            let names = words.iter().map(|w| w.name.clone()).collect();
            let gen_inn = wordset_generates(q, &InnerWordSet::new(words.clone(), Scope::Inn), cap)?;
            let gen_tot = wordset_generates(q, &InnerWordSet::new(words, Scope::TotInn), cap)?;
            let result = json!({
                "mlt_order": mlt(q, cap)?.order(),
                "inn_order": inn(q, cap)?.order(),
                "totmlt_order": totmlt(q, cap)?.order(),
                "totinn_order": totinn(q, cap)?.order(),
                "wordset_generates_inn": gen_inn,
                "wordset_generates_totinn": gen_tot,
            });
            let mut r = ctx.report(Some(&l), "innmaps", result);
            r.wordset = Some(names);
            Ok(r)
        }
        Verb::Normals { input } => {
            let l = input::load(&input)?;
            let ns: Vec<Vec<usize>> = all_normal_subloops(&l.q)
                .iter()
                .map(|n| n.to_vec())
                .collect();
            let result = json!({ "count": ns.len(), "normal_subloops": ns });
            Ok(ctx.report(Some(&l), "normals", result))
        }
        Verb::Commutator {
            input,
            a,
            b,
            tc_depth,
            delta,
        } => {
            let l = input::load(&input)?;
            let e = CommutatorEngine::new(&l.q, &ctx.config())?;
            let na = input::normal_subloop(&l, &a)?;
            let nb = input::normal_subloop(&l, &b)?;
            let c = e.commutator(&na, &nb)?;
            let mut m = Map::new();
            m.insert("A".into(), json!(na.to_vec()));
            m.insert("B".into(), json!(nb.to_vec()));
            m.insert("commutator".into(), json!(c.to_vec()));
            let mut witnesses = Vec::new();
            if let Some(depth) = tc_depth {
                let d = match &delta {
                    Some(s) => input::normal_subloop(&l, s)?,
                    None => c.clone(),
                };
                let w = tc_refute(&l.q, &na, &nb, &d, depth);
                m.insert("delta".into(), json!(d.to_vec()));
                m.insert("refuted".into(), json!(w.is_some()));
                witnesses.extend(w.as_ref().map(WitnessJson::from));
            }
            let mut r = ctx.report(Some(&l), "commutator", Value::Object(m));
            r.wordset = Some(e.word_names());
            r.witnesses = witnesses;
            r.flags = ctx.flags(tc_depth);
            Ok(r)
        }
        Verb::Series { input, kind } => {
            let l = input::load(&input)?;
            let e = CommutatorEngine::new(&l.q, &ctx.config())?;
            let kinds: Vec<SeriesKind> = match kind.as_str() {
                "lower" => vec![SeriesKind::LowerCentral],
                "derived" => vec![SeriesKind::CongruenceDerived],
                "bruck" => vec![SeriesKind::BruckDerived],
                "all" => ALL_KINDS.to_vec(),
                other => {
                    anyhow::bail!("unknown series kind {other:?}");
                }
            };
            let upper: Vec<Vec<usize>> = upper_central_chain(&l.q)?
                .iter()
                .map(|s| s.to_vec())
                .collect();
            let mut r = ctx.report(Some(&l), "series", json!({ "upper_central": upper }));
            r.wordset = Some(e.word_names());
            r.series = all_series(&e, &kinds)?;
            Ok(r)
        }
        Verb::Classify { input } => {
            let l = input::load(&input)?;
            let e = CommutatorEngine::new(&l.q, &ctx.config())?;
            let mut r = ctx.report(Some(&l), "classify", classification_json(&classify(&e)?));
            r.wordset = Some(e.word_names());
            r.series = all_series(&e, &ALL_KINDS)?;
            Ok(r)
        }
        Verb::Construct {
            what: Construct::Gplus { group, oplus, out },
        } => {
            let l = input::construct_gplus(&group, &oplus)?;
            let text = l.q.to_text();
            if let Some(path) = &out {
                fs::write(path, &text)?;
            }
            let rows: Vec<Vec<usize>> =
                l.q.mul_table()
                    .chunks(l.q.order())
                    .map(<[usize]>::to_vec)
                    .collect();
            let result = json!({ "table": rows, "written_to": out });
            Ok(ctx.report(Some(&l), "construct_gplus", result))
        }
        Verb::VerifyPaper => {
            let outcomes = verify::verify_all();
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            let claims: Vec<Value> = outcomes
                .iter()
                .map(|o| json!({ "id": o.id, "statement": o.statement, "passed": o.passed, "error": o.error }))
                .collect();
            let result =
                json!({ "claims": claims, "passed": outcomes.len() - failed, "failed": failed });
            Ok(ctx.report(None, "verify_paper", result))
        }
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::Array(xs) if xs.iter().all(Value::is_u64) => {
            let xs: Vec<usize> = xs
                .iter()
                .filter_map(Value::as_u64)
                .map(|x| x as usize)
                .collect();
            fmt_set(&xs)
        }
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn print_text(r: &Report) {
    if let Some(l) = &r.loop_info {
        // a comment line, so that constructed tables can be piped back in
        let mark = if r.operation == "construct_gplus" {
            "# "
        } else {
            ""
        };
        println!("{mark}loop {} (order {})", l.id, l.n);
    }
    if let Some(ws) = &r.wordset {
        println!("words: {}", ws.join(", "));
    }
    if r.operation == "construct_gplus" {
        for row in r.result["table"].as_array().into_iter().flatten() {
            let cells: Vec<String> = row
                .as_array()
                .into_iter()
                .flatten()
                .map(Value::to_string)
                .collect();
            println!("{}", cells.join(" "));
        }
        if let Some(path) = r.result["written_to"].as_str() {
            println!("# written to {path}");
        }
    } else if r.operation == "verify_paper" {
        for c in r.result["claims"].as_array().into_iter().flatten() {
            let mark = if c["passed"] == true { "PASS" } else { "FAIL" };
            let id = c["id"].as_str().unwrap_or_default();
            let statement = c["statement"].as_str().unwrap_or_default();
            println!("{mark} {id}: {statement}");
            if let Some(e) = c["error"].as_str() {
                println!("     error: {e}");
            }
        }
        println!(
            "{} passed, {} failed",
            r.result["passed"], r.result["failed"]
        );
    } else if let Value::Object(m) = &r.result {
        for (k, v) in m {
            match v {
                Value::Array(rows) if rows.iter().all(Value::is_array) && !rows.is_empty() => {
                    println!("{k}:");
                    for row in rows {
                        println!("  {}", render_value(row));
                    }
                }
                Value::Object(inner) => {
                    println!("{k}:");
                    for (k2, v2) in inner {
                        println!("  {k2}: {}", render_value(v2));
                    }
                }
                _ => println!("{k}: {}", render_value(v)),
            }
        }
    }
    for s in &r.series {
        print_series(s);
    }
    for w in &r.witnesses {
        print_witness(w);
    }
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. }) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(k) = cli.opts.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let words = match input::wordset(&cli.opts.wordset) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(exit_code_for(&e));
        }
    };
    let ctx = Ctx {
        opts: cli.opts,
        words,
    };
    match run(&ctx, cli.verb) {
        Ok(r) => {
            if ctx.opts.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&r).expect("serializable report")
                );
            } else {
                print_text(&r);
            }
            let mismatch = r.operation == "verify_paper" && r.result["failed"] != 0;
            if mismatch {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
