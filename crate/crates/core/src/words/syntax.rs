//! Parser for the word mini-syntax, e.g. `M[y\x]^-1 M[x] M[y]`.
//!
//! A word is a sequence of letters `K[term]`, `K ∈ {L, R, M}`, each optionally
//! followed by `^-1` (also `^{-1}` or `⁻¹`). Terms are built from single
//! lowercase variables, the constant `1`, parentheses and the operations
//! `*` (or `·`), `\` and `/`. Juxtaposition `xy` is multiplication and binds
//! tighter than the three explicit operators, which share one precedence level
//! and associate to the left. Parameters are the variables in alphabetical
//! order.

use super::{Kind, Letter, Term, WordTemplate};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
enum Raw {
    Var(char),
    One,
    Bin(char, Box<Raw>, Box<Raw>),
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::WordSyntax(format!(
            "{msg} at position {} in {:?}",
            self.pos, self.src
        )))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let want: Vec<char> = s.chars().collect();
        if self.chars[self.pos..].starts_with(&want) {
            self.pos += want.len();
            true
        } else {
            false
        }
    }

    fn term(&mut self) -> Result<Raw> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                Some('*') | Some('·') => '*',
                Some('\\') => '\\',
                Some('/') => '/',
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.product()?;
            lhs = Raw::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn product(&mut self) -> Result<Raw> {
        let mut lhs = self.atom()?;
        while matches!(self.peek(), Some(c) if c == '(' || c == '1' || c.is_ascii_lowercase()) {
            let rhs = self.atom()?;
            lhs = Raw::Bin('*', Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Raw> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let t = self.term()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(t)
            }
            Some('1') => {
                self.pos += 1;
                Ok(Raw::One)
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                Ok(Raw::Var(c))
            }
            _ => self.err("expected a variable, 1 or '('"),
        }
    }

    fn letter(&mut self) -> Result<(Kind, bool, Raw)> {
        let kind = match self.peek() {
            Some('L') => Kind::L,
            Some('R') => Kind::R,
            Some('M') => Kind::M,
            _ => return self.err("expected L, R or M"),
        };
        self.pos += 1;
        if !self.eat('[') {
            return self.err("expected '['");
        }
        let sub = self.term()?;
        if !self.eat(']') {
            return self.err("expected ']'");
        }
        let inverse = if self.eat_str("^-1") || self.eat_str("^{-1}") || self.eat_str("⁻¹") {
            true
        } else {
            // an explicit positive exponent is allowed
            let _ = self.eat_str("^1") || self.eat_str("^{1}");
            false
        };
        Ok((kind, inverse, sub))
    }
}

fn collect_vars(t: &Raw, out: &mut Vec<char>) {
    match t {
        Raw::Var(c) => out.push(*c),
        Raw::One => {}
        Raw::Bin(_, a, b) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
    }
}

fn lower(t: &Raw, vars: &[char]) -> Term {
    match t {
        Raw::Var(c) => Term::Var(vars.binary_search(c).expect("collected variable")),
        Raw::One => Term::One,
        Raw::Bin(op, a, b) => {
            let (a, b) = (lower(a, vars), lower(b, vars));
            match op {
                '*' => Term::mul(a, b),
                '\\' => Term::ldiv(a, b),
                _ => Term::rdiv(a, b),
            }
        }
    }
}

fn sorted_vars(raws: &[&Raw]) -> Vec<char> {
    let mut vars = Vec::new();
    for r in raws {
        collect_vars(r, &mut vars);
    }
    vars.sort_unstable();
    vars.dedup();
    vars
}

/// Parses a single term; returns it with its variables in index order.
pub fn parse_term(text: &str) -> Result<(Term, Vec<char>)> {
    let mut p = Parser::new(text);
    let raw = p.term()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    let vars = sorted_vars(&[&raw]);
    Ok((lower(&raw, &vars), vars))
}

/// Parses a word. The text `1` (or an empty string) is the empty word.
pub fn parse_word(name: &str, text: &str) -> Result<WordTemplate> {
    let mut p = Parser::new(text);
    let mut raw = Vec::new();
    if p.peek() == Some('1') {
        p.pos += 1;
    } else {
        while p.peek().is_some() {
            raw.push(p.letter()?);
        }
    }
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    let subs: Vec<&Raw> = raw.iter().map(|(_, _, r)| r).collect();
    let vars = sorted_vars(&subs);
    let letters = raw
        .iter()
        .map(|(kind, inverse, sub)| Letter {
            kind: *kind,
            inverse: *inverse,
            sub: lower(sub, &vars),
        })
        .collect();
    Ok(WordTemplate {
        name: name.to_string(),
        vars,
        letters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn middle_inner_word() {
        let w = parse_word("M2", r"M[y\x]^-1 M[x] M[y]").unwrap();
        assert_eq!(w.vars, vec!['x', 'y']);
        assert_eq!(w.letters.len(), 3);
        assert_eq!(w.letters[0].kind, Kind::M);
        assert!(w.letters[0].inverse);
        assert_eq!(w.letters[0].sub, Term::ldiv(Term::Var(1), Term::Var(0)));
        assert!(!w.letters[2].inverse);
    }

    #[test]
    fn precedence() {
        let (t, vars) = parse_term(r"x\yz").unwrap();
        assert_eq!(vars, vec!['x', 'y', 'z']);
        assert_eq!(
            t,
            Term::ldiv(Term::Var(0), Term::mul(Term::Var(1), Term::Var(2)))
        );
        let (t, _) = parse_term("x*y/z").unwrap();
        assert_eq!(
            t,
            Term::rdiv(Term::mul(Term::Var(0), Term::Var(1)), Term::Var(2))
        );
        let (t, _) = parse_term("x·(y/z)").unwrap();
        assert_eq!(
            t,
            Term::mul(Term::Var(0), Term::rdiv(Term::Var(1), Term::Var(2)))
        );
        let (t, vars) = parse_term("1").unwrap();
        assert_eq!(t, Term::One);
        assert!(vars.is_empty());
    }

    #[test]
    fn exponent_spellings() {
        for s in ["L[x]^-1", "L[x]^{-1}", "L[x]⁻¹"] {
            assert!(parse_word("w", s).unwrap().letters[0].inverse, "{s}");
        }
        assert!(!parse_word("w", "L[x]^1").unwrap().letters[0].inverse);
    }

    #[test]
    fn empty_word() {
        assert!(parse_word("id", "1").unwrap().letters.is_empty());
        assert!(parse_word("id", "").unwrap().letters.is_empty());
    }

    #[test]
    fn syntax_errors() {
        for bad in ["L[x", "Q[x]", "L[]", "L[x]]", "L[x+y]", "M[(x]"] {
            assert!(
                matches!(parse_word("w", bad), Err(Error::WordSyntax(_))),
                "{bad}"
            );
        }
    }
}
