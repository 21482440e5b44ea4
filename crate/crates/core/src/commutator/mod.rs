//! Commutators of normal subloops.
//!
//! For normal subloops `A`, `B` and a set `𝒲` of inner words,
//!
//! ```text
//! [A,B]_Q = Ng{ W_ū(a) / W_v̄(a) : W ∈ 𝒲, a ∈ A, u_i / v_i ∈ B }
//! ```
//!
//! whenever `𝒲` generates the total inner mapping groups, or, for finite
//! loops, the inner mapping groups. Pairs with `u_i / v_i ∈ B` are produced
//! as `(b·v, v)`.

mod series;
mod subloops;
mod tc;

pub use series::{
    classify, is_abelian_in, series, upper_central_chain, Classification, SeriesKind, SeriesReport,
};
pub use subloops::{
    associator_subloop, associator_subloop_classical, comm_subloop, derived_subloop,
    derived_subloop_classical, value_subloop, CommReport,
};
pub use tc::{tc_refute, TcWitness};

use rayon::prelude::*;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::loopcore::{subloop_generated, SubloopSet};
use crate::normal::{close_normal, NormalSubloop};
use crate::permgrp::{closure, Perm, DEFAULT_CAP};
use crate::words::{builtin, word_images, WordTemplate};
use crate::Loop;

/// Which words to use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordSpec {
    /// Chosen from the structure of the loop: groups use `{T}`, inverse
    /// property loops `{L2, T}`, commutative loops `{L2, M2}` (`{L2}` in
    /// finite mode), all others `{L2, R2, T, M2, U}` (`{L2, R2, T}`).
    Auto,
    Words(Vec<WordTemplate>),
}

impl WordSpec {
    pub fn named(names: &[&str]) -> Result<WordSpec> {
        Ok(WordSpec::Words(
            names.iter().map(|n| builtin(n)).collect::<Result<_>>()?,
        ))
    }
}

#[derive(Debug, Clone)]
pub struct CommutatorConfig {
    pub words: WordSpec,
    /// Only require the words to generate `Inn Q` rather than `TotInn Q`.
    pub finite_mode: bool,
    /// Vary one parameter slot at a time, the others fixed to a common value.
    pub pruned: bool,
    /// Stop producing generators once their normal closure is `A ∩ B`.
    pub early_exit: bool,
    pub cap: usize,
}

impl Default for CommutatorConfig {
    fn default() -> Self {
        CommutatorConfig {
            words: WordSpec::named(&["L2", "R2", "T"]).expect("built-in words"),
            finite_mode: true,
            pruned: true,
            early_exit: false,
            cap: DEFAULT_CAP,
        }
    }
}

impl CommutatorConfig {
    pub fn with_words(names: &[&str], finite_mode: bool) -> Result<Self> {
        Ok(CommutatorConfig {
            words: WordSpec::named(names)?,
            finite_mode,
            ..Default::default()
        })
    }

    pub fn auto(finite_mode: bool) -> Self {
        CommutatorConfig {
            words: WordSpec::Auto,
            finite_mode,
            ..Default::default()
        }
    }
}

fn auto_names(q: &Loop, finite_mode: bool) -> &'static [&'static str] {
    if q.is_group() {
        &["T"]
    } else if q.has_inverse_property() {
        &["L2", "T"]
    } else if q.is_commutative() {
        if finite_mode {
            &["L2"]
        } else {
            &["L2", "M2"]
        }
    } else if finite_mode {
        &["L2", "R2", "T"]
    } else {
        &["L2", "R2", "T", "M2", "U"]
    }
}

/// Whether `w` agrees with `R_{x,y}` on `q`, up to the order of its two
/// parameters.
fn acts_as_r2(q: &Loop, w: &WordTemplate, r2: &WordTemplate) -> bool {
    if w.arity() != 2 {
        return false;
    }
    let agrees = |swap: bool| {
        q.elements().all(|x| {
            q.elements().all(|y| {
                let p = if swap { [y, x] } else { [x, y] };
                w.eval(q, &p) == r2.eval(q, &[x, y])
            })
        })
    };
    agrees(false) || agrees(true)
}

/// Words that may be dropped from `words` without changing the induced
/// commutator on `q`: a parameter-free word always, and `U_x` when some word
/// acts as `R_{x,y}`. They take part in the generation check only.
fn removable_extras(q: &Loop, words: &[WordTemplate]) -> Vec<WordTemplate> {
    let r2 = builtin("R2").expect("built-in");
    let mut extras = vec![builtin("J").expect("built-in")];
    if words.iter().any(|w| acts_as_r2(q, w, &r2)) {
        extras.push(builtin("U").expect("built-in"));
    }
    extras
}

/// Images of one word for every parameter tuple, stored flat:
/// `img[p * n + x] = W_p(x)` with `p` the lexicographic tuple index.
struct WordTable {
    arity: usize,
    img: Vec<u16>,
}

impl WordTable {
    fn new(q: &Loop, w: &WordTemplate) -> WordTable {
        let n = q.order();
        let mut img = Vec::with_capacity(n.pow(w.arity() as u32) * n);
        for p in w.param_tuples(n) {
            let perm = w.eval(q, &p);
            img.extend((0..n).map(|x| perm.apply(x) as u16));
        }
        WordTable {
            arity: w.arity(),
            img,
        }
    }

    #[inline]
    fn at(&self, n: usize, p: usize, x: usize) -> usize {
        self.img[p * n + x] as usize
    }
}

/// A validated word set bound to one loop.
pub struct CommutatorEngine<'q> {
    q: &'q Loop,
    words: Vec<WordTemplate>,
    tables: Vec<WordTable>,
    pruned: bool,
    early_exit: bool,
}

impl<'q> CommutatorEngine<'q> {
    /// Checks that every word is inner and that the words, together with
    /// their removable extras, generate `Inn Q` (finite mode) or `TotInn Q`.
    pub fn new(q: &'q Loop, config: &CommutatorConfig) -> Result<Self> {
        let words = match &config.words {
            WordSpec::Auto => auto_names(q, config.finite_mode)
                .iter()
                .map(|n| builtin(n))
                .collect::<Result<Vec<_>>>()?,
            WordSpec::Words(ws) => ws.clone(),
        };
        for w in &words {
            if !crate::words::is_inner_for(q, w) {
                return Err(Error::NotInnerWord(w.name.clone()));
            }
        }
        let mut gens: Vec<Perm> = Vec::new();
        for w in words.iter().chain(&removable_extras(q, &words)) {
            gens.extend(word_images(q, w));
        }
        gens.sort();
        gens.dedup();
        let group = closure(q.order(), &gens, config.cap)?;
        let (target, scope) = if config.finite_mode {
            (q.inn_generators(), "inner")
        } else {
            (q.totinn_generators(), "total inner")
        };
        if !target.iter().all(|g| group.contains(g)) {
            return Err(Error::WordSetInsufficient { scope });
        }
        let tables = words.iter().map(|w| WordTable::new(q, w)).collect();
        Ok(CommutatorEngine {
            q,
            words,
            tables,
            pruned: config.pruned,
            early_exit: config.early_exit,
        })
    }

    pub fn loop_ref(&self) -> &'q Loop {
        self.q
    }

    pub fn word_names(&self) -> Vec<String> {
        self.words.iter().map(|w| w.name.clone()).collect()
    }

    fn check_same(&self, s: &SubloopSet) -> Result<()> {
        if s.parent_order() != self.q.order() {
            return Err(Error::NotSameLoop {
                left: s.parent_order(),
                right: self.q.order(),
            });
        }
        Ok(())
    }

    /// Quotients `W_ū(a)/W_v̄(a)` contributed by word `i`.
    fn word_generators(&self, i: usize, a: &SubloopSet, b: &SubloopSet) -> ElemSet {
        let q = self.q;
        let n = q.order();
        let t = &self.tables[i];
        let k = t.arity;
        let mut out = ElemSet::empty(n);
        out.insert(q.identity());
        if k == 0 {
            return out;
        }
        let bs = b.to_vec();
        let as_ = a.to_vec();
        // pairs (u, v) with u/v ∈ B
        let pairs: Vec<(usize, usize)> = q
            .elements()
            .flat_map(|v| bs.iter().map(move |&b| (q.mul(b, v), v)))
            .collect();
        let index = |tuple: &[usize]| tuple.iter().fold(0, |acc, &x| acc * n + x);
        let mut emit = |pu: usize, pv: usize| {
            for &x in &as_ {
                out.insert(q.rdiv(t.at(n, pu, x), t.at(n, pv, x)));
            }
        };
        if self.pruned {
            let mut tuple = vec![0; k];
            for slot in 0..k {
                for rest in 0..n.pow(k as u32 - 1) {
                    let mut r = rest;
                    for s in (0..k).rev() {
                        if s != slot {
                            tuple[s] = r % n;
                            r /= n;
                        }
                    }
                    for &(u, v) in &pairs {
                        tuple[slot] = u;
                        let pu = index(&tuple);
                        tuple[slot] = v;
                        let pv = index(&tuple);
                        emit(pu, pv);
                    }
                }
            }
        } else {
            let m = pairs.len();
            let mut tu = vec![0; k];
            let mut tv = vec![0; k];
            for code in 0..m.pow(k as u32) {
                let mut c = code;
                for s in (0..k).rev() {
                    let (u, v) = pairs[c % m];
                    tu[s] = u;
                    tv[s] = v;
                    c /= m;
                }
                emit(index(&tu), index(&tv));
            }
        }
        out
    }

    /// The set of all quotient generators, before any closure.
    pub fn generators(&self, a: &SubloopSet, b: &SubloopSet) -> Result<ElemSet> {
        self.check_same(a)?;
        self.check_same(b)?;
        let parts: Vec<ElemSet> = (0..self.words.len())
            .into_par_iter()
            .map(|i| self.word_generators(i, a, b))
            .collect();
        let mut out = ElemSet::from_iter(self.q.order(), [self.q.identity()]);
        for p in &parts {
            out.union_with(p);
        }
        Ok(out)
    }

    /// `[A, B]_Q`.
    pub fn commutator(&self, a: &SubloopSet, b: &SubloopSet) -> Result<NormalSubloop> {
        self.check_same(a)?;
        self.check_same(b)?;
        let q = self.q;
        if a.is_trivial() || b.is_trivial() {
            return Ok(NormalSubloop::trivial(q));
        }
        let bound = a.members().intersection(b.members());
        let mut acc = ElemSet::from_iter(q.order(), [q.identity()]);
        if self.early_exit {
            for i in 0..self.words.len() {
                acc.union_with(&self.word_generators(i, a, b));
                close_normal(q, &mut acc, q.inn_generators());
                if acc == bound {
                    break;
                }
            }
        } else {
            acc = self.generators(a, b)?;
            close_normal(q, &mut acc, q.inn_generators());
        }
        Ok(NormalSubloop::trusted(SubloopSet::from_closed(acc)))
    }

    /// The subloop generated by the quotients, without normal closure.
    pub fn plain_subloop(&self, a: &SubloopSet, b: &SubloopSet) -> Result<SubloopSet> {
        let gens = self.generators(a, b)?;
        Ok(subloop_generated(self.q, gens.iter()))
    }
}

/// `[A, B]_Q` with a fresh engine.
pub fn commutator(
    q: &Loop,
    a: &SubloopSet,
    b: &SubloopSet,
    config: &CommutatorConfig,
) -> Result<NormalSubloop> {
    CommutatorEngine::new(q, config)?.commutator(a, b)
}
