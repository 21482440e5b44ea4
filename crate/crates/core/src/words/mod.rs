//! Loop terms and words in translations.
//!
//! A [`WordTemplate`] is a formal product `K¹_{t₁} ⋯ Kᵐ_{tₘ}` of translations
//! `K ∈ {L, R, M}` (possibly inverted) whose subscripts are terms over the
//! word's parameters. Evaluating a word at a tuple of loop elements gives a
//! permutation; the rightmost letter acts first.

mod catalog;
mod groups;
mod syntax;

pub(crate) use catalog::builtin_ref;
pub use catalog::{
    assoc_value, builtin, builtin_catalog, comm_value, elementwise_value, ElementwiseSide,
    ABELIAN_FAMILY, ASSOCIATORS, COMMUTATORS, ELEMENTWISE, GROUP_FAMILY,
};
pub use groups::{
    inn, inn_bruteforce, is_inner_for, mlt, standard_generators, totinn, totinn_bruteforce, totmlt,
    word_images, wordset_generates, InnerWordSet, Scope,
};
pub use syntax::{parse_term, parse_word};

use std::fmt;

use crate::permgrp::Perm;
use crate::Loop;

/// A loop term over parameters `Var(0), Var(1), …` and the constant `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    One,
    Mul(Box<Term>, Box<Term>),
    LDiv(Box<Term>, Box<Term>),
    RDiv(Box<Term>, Box<Term>),
}

impl Term {
    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn ldiv(a: Term, b: Term) -> Term {
        Term::LDiv(Box::new(a), Box::new(b))
    }

    pub fn rdiv(a: Term, b: Term) -> Term {
        Term::RDiv(Box::new(a), Box::new(b))
    }

    /// One more than the largest parameter index used.
    pub fn arity(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::One => 0,
            Term::Mul(a, b) | Term::LDiv(a, b) | Term::RDiv(a, b) => a.arity().max(b.arity()),
        }
    }

    /// Infix rendering with `*`, `\` and `/`, fully parenthesised below the root.
    pub fn render(&self, vars: &[char]) -> String {
        fn go(t: &Term, vars: &[char], top: bool, out: &mut String) {
            let (op, a, b) = match t {
                Term::Var(i) => {
                    out.push(vars.get(*i).copied().unwrap_or('?'));
                    return;
                }
                Term::One => {
                    out.push('1');
                    return;
                }
                Term::Mul(a, b) => ('*', a, b),
                Term::LDiv(a, b) => ('\\', a, b),
                Term::RDiv(a, b) => ('/', a, b),
            };
            if !top {
                out.push('(');
            }
            go(a, vars, false, out);
            out.push(op);
            go(b, vars, false, out);
            if !top {
                out.push(')');
            }
        }
        let mut s = String::new();
        go(self, vars, true, &mut s);
        s
    }
}

/// Evaluates `t` in `q` with `Var(i) = args[i]`.
pub fn eval_term(q: &Loop, t: &Term, args: &[usize]) -> usize {
    match t {
        Term::Var(i) => args[*i],
        Term::One => q.identity(),
        Term::Mul(a, b) => q.mul(eval_term(q, a, args), eval_term(q, b, args)),
        Term::LDiv(a, b) => q.ldiv(eval_term(q, a, args), eval_term(q, b, args)),
        Term::RDiv(a, b) => q.rdiv(eval_term(q, a, args), eval_term(q, b, args)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    L,
    R,
    M,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub kind: Kind,
    pub inverse: bool,
    pub sub: Term,
}

impl Letter {
    /// The translation `K_t^{±1}` applied to `x`.
    #[inline]
    fn act(kind: Kind, inverse: bool, q: &Loop, t: usize, x: usize) -> usize {
        match (kind, inverse) {
            (Kind::L, false) => q.mul(t, x),
            (Kind::L, true) => q.ldiv(t, x),
            (Kind::R, false) => q.mul(x, t),
            (Kind::R, true) => q.rdiv(x, t),
            (Kind::M, false) => q.ldiv(x, t),
            (Kind::M, true) => q.rdiv(t, x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordTemplate {
    pub name: String,
    /// Parameter names; `Var(i)` in a subscript refers to `vars[i]`.
    pub vars: Vec<char>,
    pub letters: Vec<Letter>,
}

impl WordTemplate {
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    /// `W_params` as a permutation.
    pub fn eval(&self, q: &Loop, params: &[usize]) -> Perm {
        assert_eq!(params.len(), self.arity(), "word {} arity", self.name);
        let subs: Vec<usize> = self
            .letters
            .iter()
            .map(|l| eval_term(q, &l.sub, params))
            .collect();
        Perm::from_fn(q.order(), |x| self.apply_with(q, &subs, x))
    }

    /// `W_params(x)` without building the permutation.
    pub fn apply(&self, q: &Loop, params: &[usize], x: usize) -> usize {
        let subs: Vec<usize> = self
            .letters
            .iter()
            .map(|l| eval_term(q, &l.sub, params))
            .collect();
        self.apply_with(q, &subs, x)
    }

    #[inline]
    fn apply_with(&self, q: &Loop, subs: &[usize], mut x: usize) -> usize {
        for (l, &t) in self.letters.iter().zip(subs).rev() {
            x = Letter::act(l.kind, l.inverse, q, t, x);
        }
        x
    }

    /// All parameter tuples over `q`, in lexicographic order.
    pub fn param_tuples(&self, n: usize) -> impl Iterator<Item = Vec<usize>> {
        let k = self.arity();
        let total = n.pow(k as u32);
        (0..total).map(move |mut code| {
            let mut p = vec![0; k];
            for slot in (0..k).rev() {
                p[slot] = code % n;
                code /= n;
            }
            p
        })
    }
}

impl fmt::Display for WordTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let k = match l.kind {
                Kind::L => 'L',
                Kind::R => 'R',
                Kind::M => 'M',
            };
            write!(f, "{k}[{}]", l.sub.render(&self.vars))?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Same as [`WordTemplate::eval`].
pub fn eval_word(q: &Loop, w: &WordTemplate, params: &[usize]) -> Perm {
    w.eval(q, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn term_evaluation() {
        let z4 = Loop::cyclic(4);
        assert_eq!(eval_term(&z4, &Term::One, &[]), 0);
        let t = Term::mul(Term::Var(0), Term::Var(1));
        assert_eq!(eval_term(&z4, &t, &[1, 2]), 3);
        let q = corpus::q1();
        let cancel = Term::ldiv(Term::Var(0), Term::mul(Term::Var(0), Term::Var(1)));
        for x in q.elements() {
            for y in q.elements() {
                assert_eq!(eval_term(&q, &cancel, &[x, y]), y);
            }
        }
    }

    #[test]
    fn t_on_abelian_group_is_identity() {
        let g = Loop::cyclic(5);
        let t = builtin("T").unwrap();
        for x in g.elements() {
            assert!(t.eval(&g, &[x]).is_identity());
        }
        let l2 = builtin("L2").unwrap();
        let q = corpus::q1();
        assert!(l2.eval(&q, &[0, 0]).is_identity());
    }

    #[test]
    fn t3_on_q1_fixes_2() {
        let q = corpus::q1();
        let t = builtin("T").unwrap();
        // 1-based labels 3 and 2 are indices 2 and 1
        assert_eq!(q.mul(2, 1), 3);
        assert_eq!(q.rdiv(3, 2), 1);
        assert_eq!(t.eval(&q, &[2]).apply(1), 1);
    }

    #[test]
    fn apply_matches_eval() {
        let q = corpus::q3();
        for w in builtin_catalog() {
            for p in w.param_tuples(q.order()).step_by(5) {
                let perm = w.eval(&q, &p);
                for x in q.elements() {
                    assert_eq!(w.apply(&q, &p, x), perm.apply(x), "{}", w.name);
                }
            }
        }
    }

    #[test]
    fn display_round_trip() {
        for w in builtin_catalog() {
            let again = parse_word(&w.name, &w.to_string()).unwrap();
            assert_eq!(again.letters, w.letters, "{}", w.name);
            assert_eq!(again.vars, w.vars, "{}", w.name);
        }
    }

    #[test]
    fn param_tuples_are_lexicographic() {
        let w = builtin("L2").unwrap();
        let all: Vec<Vec<usize>> = w.param_tuples(3).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[8], vec![2, 2]);
        let j = builtin("J").unwrap();
        assert_eq!(j.param_tuples(3).count(), 1);
    }
}
