use std::collections::BTreeSet;

use super::catalog::builtin_ref;
use super::WordTemplate;
use crate::error::{Error, Result};
use crate::permgrp::{
    closure, groups_equal, schreier_stabilizer_gens, stabilizer_bruteforce, GroupClosure, Perm,
};
use crate::Loop;

/// Which group a word set is meant to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    Inn,
    TotInn,
}

impl Scope {
    pub fn label(self) -> &'static str {
        match self {
            Scope::Inn => "inner",
            Scope::TotInn => "total inner",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerWordSet {
    pub words: Vec<WordTemplate>,
    pub scope: Scope,
}

impl InnerWordSet {
    pub fn new(words: Vec<WordTemplate>, scope: Scope) -> Self {
        InnerWordSet { words, scope }
    }

    pub fn from_names(names: &[&str], scope: Scope) -> Result<Self> {
        let words = names
            .iter()
            .map(|n| builtin_ref(n).cloned())
            .collect::<Result<_>>()?;
        Ok(InnerWordSet { words, scope })
    }

    pub fn names(&self) -> Vec<String> {
        self.words.iter().map(|w| w.name.clone()).collect()
    }
}

/// `W_ā` for every parameter tuple, deduplicated and sorted.
pub fn word_images(q: &Loop, w: &WordTemplate) -> Vec<Perm> {
    let set: BTreeSet<Perm> = w.param_tuples(q.order()).map(|p| w.eval(q, &p)).collect();
    set.into_iter().collect()
}

/// Whether `W_ā(1) = 1` for every parameter tuple over `q`.
pub fn is_inner_for(q: &Loop, w: &WordTemplate) -> bool {
    let one = q.identity();
    w.param_tuples(q.order())
        .all(|p| w.apply(q, &p, one) == one)
}

/// `L_{x,y}, R_{x,y}, T_x`, and with `total` also `M_{x,y}, U_x`, over all
/// parameters; deduplicated and sorted.
pub fn standard_generators(q: &Loop, total: bool) -> Vec<Perm> {
    let names: &[&str] = if total {
        &["L2", "R2", "T", "M2", "U"]
    } else {
        &["L2", "R2", "T"]
    };
    let mut set = BTreeSet::new();
    for n in names {
        let w = builtin_ref(n).expect("standard word");
        for p in w.param_tuples(q.order()) {
            set.insert(w.eval(q, &p));
        }
    }
    set.into_iter().collect()
}

fn translations(q: &Loop, total: bool) -> Vec<Perm> {
    let mut gens = Vec::new();
    for x in q.elements() {
        gens.push(q.left(x));
        gens.push(q.right(x));
        if total {
            gens.push(q.middle(x));
        }
    }
    gens
}

pub fn mlt(q: &Loop, cap: usize) -> Result<GroupClosure> {
    closure(q.order(), &translations(q, false), cap)
}

pub fn totmlt(q: &Loop, cap: usize) -> Result<GroupClosure> {
    closure(q.order(), &translations(q, true), cap)
}

fn schreier_inner(q: &Loop, total: bool, cap: usize) -> Result<GroupClosure> {
    let gens = translations(q, total);
    let sg = schreier_stabilizer_gens(q.order(), &gens, q.identity(), |y| q.right(y))?;
    closure(q.order(), &sg, cap)
}

/// `Inn Q` as the closure of the Schreier generators for `g_y = R_y`.
pub fn inn(q: &Loop, cap: usize) -> Result<GroupClosure> {
    schreier_inner(q, false, cap)
}

/// `TotInn Q` as the closure of the Schreier generators for `g_y = R_y`.
pub fn totinn(q: &Loop, cap: usize) -> Result<GroupClosure> {
    schreier_inner(q, true, cap)
}

/// `Inn Q` as the stabilizer of `1` in the enumerated `Mlt Q`.
pub fn inn_bruteforce(q: &Loop, cap: usize) -> Result<GroupClosure> {
    Ok(stabilizer_bruteforce(&mlt(q, cap)?, q.identity()))
}

pub fn totinn_bruteforce(q: &Loop, cap: usize) -> Result<GroupClosure> {
    Ok(stabilizer_bruteforce(&totmlt(q, cap)?, q.identity()))
}

/// Whether the values of the words in `ws` generate exactly `Inn Q` or
/// `TotInn Q`, according to its scope.
pub fn wordset_generates(q: &Loop, ws: &InnerWordSet, cap: usize) -> Result<bool> {
    for w in &ws.words {
        if !is_inner_for(q, w) {
            return Err(Error::NotInnerWord(w.name.clone()));
        }
    }
    let mut gens = BTreeSet::new();
    for w in &ws.words {
        gens.extend(word_images(q, w));
    }
    let gens: Vec<Perm> = gens.into_iter().collect();
    let got = closure(q.order(), &gens, cap)?;
    let target = match ws.scope {
        Scope::Inn => inn(q, cap)?,
        Scope::TotInn => totinn(q, cap)?,
    };
    Ok(groups_equal(&got, &target))
}
