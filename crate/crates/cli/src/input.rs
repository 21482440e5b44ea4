use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use loopcomm::loopcore::{gplus_construct, parse_latin_square};
use loopcomm::words::parse_word;
use loopcomm::{corpus, Loop, NormalSubloop, WordSpec};

/// A loop together with how it was obtained.
pub struct Loaded {
    pub q: Loop,
    pub id: String,
    /// Order of `G` when the loop is some `G[⊕]`, whose `H` is `0..m`.
    pub gplus_half: Option<usize>,
}

fn builtin_is_gplus(name: &str) -> bool {
    matches!(name, "ex_z4" | "ex_z22" | "ex_comm")
        || (name.starts_with('Z') && name.ends_with("[-]"))
}

/// `@name` selects a built-in loop, anything else is a table file.
pub fn load(input: &str) -> anyhow::Result<Loaded> {
    if let Some(name) = input.strip_prefix('@') {
        let Some(q) = corpus::by_name(name) else {
            let known: Vec<String> = corpus::all_loops().into_iter().map(|(n, _)| n).collect();
            bail!(
                "unknown built-in loop {name:?}; known: {}",
                known.join(", ")
            );
        };
        let gplus_half = builtin_is_gplus(name).then_some(q.order() / 2);
        return Ok(Loaded {
            q,
            id: input.to_string(),
            gplus_half,
        });
    }
    let text = fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    let q = Loop::parse(&text)?;
    Ok(Loaded {
        q,
        id: input.to_string(),
        gplus_half: None,
    })
}

pub fn construct_gplus(group: &str, oplus: &str) -> anyhow::Result<Loaded> {
    let g = load(group)?;
    let text = fs::read_to_string(oplus).with_context(|| format!("reading {oplus}"))?;
    let sq = parse_latin_square(&text)?;
    let q = gplus_construct(&g.q, &sq)?;
    Ok(Loaded {
        gplus_half: Some(g.q.order()),
        id: format!("gplus({},{oplus})", g.id),
        q,
    })
}

/// `Q`, `1`, `H` or a comma-separated list of indices.
pub fn normal_subloop(l: &Loaded, spec: &str) -> anyhow::Result<NormalSubloop> {
    let q = &l.q;
    match spec.trim() {
        "Q" => return Ok(NormalSubloop::whole(q)),
        "1" => return Ok(NormalSubloop::trivial(q)),
        "H" => {
            let Some(m) = l.gplus_half else {
                bail!("H is only defined for constructed G[⊕] loops");
            };
            let h: Vec<usize> = (0..m).collect();
            return Ok(NormalSubloop::from_elements(q, &h)?);
        }
        _ => {}
    }
    let elems = spec
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("bad element {t:?}"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(NormalSubloop::from_elements(q, &elems)?)
}

/// `auto`, `default`, an existing file of `name = word` lines, or a
/// comma-separated list of built-in names.
pub fn wordset(spec: &str) -> anyhow::Result<WordSpec> {
    match spec {
        "auto" => return Ok(WordSpec::Auto),
        "default" => return Ok(WordSpec::named(&["L2", "R2", "T"])?),
        _ => {}
    }
    if Path::new(spec).is_file() {
        let text = fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        let mut words = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((name, body)) = line.split_once('=') else {
                bail!("{spec}:{}: expected `name = word`", i + 1);
            };
            words.push(parse_word(name.trim(), body.trim())?);
        }
        if words.is_empty() {
            bail!("{spec}: no words");
        }
        return Ok(WordSpec::Words(words));
    }
    let names: Vec<&str> = spec.split(',').map(str::trim).collect();
    Ok(WordSpec::named(&names)?)
}
