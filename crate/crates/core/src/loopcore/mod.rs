//! Finite loops given by Cayley tables.
//!
//! A [`Loop`] stores the multiplication table together with the left and
//! right division tables, which are recomputed from the multiplication at
//! construction time. Elements are dense indices `0..n`.

mod gplus;
mod subloop;
mod text;

pub use gplus::{gplus_construct, minus_construct, LatinSquare};
pub use subloop::{quotient, sub_as_loop, subloop_generated, Quotient, SubloopSet};
pub use text::parse_latin_square;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::permgrp::Perm;

pub struct Loop {
    n: usize,
    id: usize,
    mul: Vec<usize>,
    ldiv: Vec<usize>,
    rdiv: Vec<usize>,
    inn_gens: OnceLock<Vec<Perm>>,
    totinn_gens: OnceLock<Vec<Perm>>,
}

impl Clone for Loop {
    fn clone(&self) -> Self {
        Loop {
            n: self.n,
            id: self.id,
            mul: self.mul.clone(),
            ldiv: self.ldiv.clone(),
            rdiv: self.rdiv.clone(),
            inn_gens: OnceLock::new(),
            totinn_gens: OnceLock::new(),
        }
    }
}

impl PartialEq for Loop {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.mul == other.mul
    }
}

impl Eq for Loop {}

impl std::fmt::Debug for Loop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Loop")
            .field("n", &self.n)
            .field("id", &self.id)
            .finish_non_exhaustive()
    }
}

/// Checks the Latin property of a row-major `n × n` table.
pub(crate) fn check_latin(n: usize, table: &[usize]) -> Result<()> {
    if table.len() != n * n {
        return Err(Error::NotLatinSquare(format!(
            "expected {} cells, got {}",
            n * n,
            table.len()
        )));
    }
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = table[r * n + c];
            if v >= n {
                return Err(Error::NotLatinSquare(format!(
                    "entry {v} out of range at ({r},{c})"
                )));
            }
            if seen[v] == r {
                return Err(Error::NotLatinSquare(format!("row {r} repeats {v}")));
            }
            seen[v] = r;
        }
    }
    seen.fill(usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = table[r * n + c];
            if seen[v] == c {
                return Err(Error::NotLatinSquare(format!("column {c} repeats {v}")));
            }
            seen[v] = c;
        }
    }
    Ok(())
}

impl Loop {
    /// Validates a row-major multiplication table and builds the loop.
    pub fn from_table(n: usize, mul: Vec<usize>) -> Result<Loop> {
        if n == 0 {
            return Err(Error::NoIdentity);
        }
        check_latin(n, &mul)?;
        let candidates: Vec<usize> = (0..n)
            .filter(|&e| (0..n).all(|x| mul[e * n + x] == x && mul[x * n + e] == x))
            .collect();
        let id = match candidates.as_slice() {
            [e] => *e,
            [] => return Err(Error::NoIdentity),
            _ => unreachable!("a Latin square has at most one two-sided identity"),
        };
        let mut ldiv = vec![0; n * n];
        let mut rdiv = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let p = mul[x * n + y];
                // x \ p = y and p / y = x
                ldiv[x * n + p] = y;
                rdiv[p * n + y] = x;
            }
        }
        Ok(Loop {
            n,
            id,
            mul,
            ldiv,
            rdiv,
            inn_gens: OnceLock::new(),
            totinn_gens: OnceLock::new(),
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Loop> {
        let mul = (0..n * n).map(|i| f(i / n, i % n)).collect();
        Loop::from_table(n, mul)
    }

    /// The cyclic group of order `n` with identity 0.
    pub fn cyclic(n: usize) -> Loop {
        Loop::from_fn(n, |x, y| (x + y) % n).expect("cyclic table is a group")
    }

    /// Direct product; the pair `(x, y)` is encoded as `x * |b| + y`.
    pub fn direct_product(a: &Loop, b: &Loop) -> Loop {
        let m = b.n;
        Loop::from_fn(a.n * m, |p, q| {
            a.mul(p / m, q / m) * m + b.mul(p % m, q % m)
        })
        .expect("direct product of loops is a loop")
    }

    pub fn trivial() -> Loop {
        Loop::cyclic(1)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.id
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }

    /// `x \ y`, the unique `z` with `x · z = y`.
    #[inline]
    pub fn ldiv(&self, x: usize, y: usize) -> usize {
        self.ldiv[x * self.n + y]
    }

    /// `x / y`, the unique `z` with `z · y = x`.
    #[inline]
    pub fn rdiv(&self, x: usize, y: usize) -> usize {
        self.rdiv[x * self.n + y]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                elem: x,
                order: self.n,
            })
        }
    }

    /// `L_x : y ↦ xy`.
    pub fn left(&self, x: usize) -> Perm {
        Perm::from_fn(self.n, |y| self.mul(x, y))
    }

    /// `R_x : y ↦ yx`.
    pub fn right(&self, x: usize) -> Perm {
        Perm::from_fn(self.n, |y| self.mul(y, x))
    }

    /// `M_x : y ↦ y \ x`.
    pub fn middle(&self, x: usize) -> Perm {
        Perm::from_fn(self.n, |y| self.ldiv(y, x))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// Some `(x, y, z)` with `(xy)z ≠ x(yz)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                let xy = self.mul(x, y);
                for z in 0..self.n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_group(&self) -> bool {
        self.is_associative()
    }

    pub fn is_abelian_group(&self) -> bool {
        self.is_commutative() && self.is_associative()
    }

    /// The two-sided inverse of `x`, if the left and right inverses agree.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        let r = self.ldiv(x, self.id);
        let l = self.rdiv(self.id, x);
        (r == l).then_some(r)
    }

    pub fn has_two_sided_inverses(&self) -> bool {
        (0..self.n).all(|x| self.inverse(x).is_some())
    }

    pub fn has_aaip(&self) -> bool {
        let Some(inv) = self.inverses() else {
            return false;
        };
        (0..self.n).all(|x| (0..self.n).all(|y| inv[self.mul(x, y)] == self.mul(inv[y], inv[x])))
    }

    pub fn has_inverse_property(&self) -> bool {
        let Some(inv) = self.inverses() else {
            return false;
        };
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                self.mul(inv[x], self.mul(x, y)) == y && self.mul(self.mul(y, x), inv[x]) == y
            })
        })
    }

    fn inverses(&self) -> Option<Vec<usize>> {
        (0..self.n).map(|x| self.inverse(x)).collect()
    }

    /// `Z(Q)`: elements that commute and associate with everything.
    pub fn center_elements(&self) -> SubloopSet {
        let n = self.n;
        let members = (0..n).filter(|&a| {
            (0..n).all(|x| {
                self.mul(a, x) == self.mul(x, a)
                    && (0..n).all(|y| {
                        self.mul(a, self.mul(x, y)) == self.mul(self.mul(a, x), y)
                            && self.mul(x, self.mul(a, y)) == self.mul(self.mul(x, a), y)
                            && self.mul(x, self.mul(y, a)) == self.mul(self.mul(x, y), a)
                    })
            })
        });
        let set = crate::ElemSet::from_iter(n, members);
        SubloopSet::new(self, set).expect("the center is a subloop")
    }

    /// Cached standard generators `L_{x,y}, R_{x,y}, T_x` of `Inn Q`,
    /// deduplicated, in a deterministic order.
    pub fn inn_generators(&self) -> &[Perm] {
        self.inn_gens
            .get_or_init(|| crate::words::standard_generators(self, false))
    }

    /// Cached standard generators `L_{x,y}, R_{x,y}, M_{x,y}, T_x, U_x` of `TotInn Q`.
    pub fn totinn_generators(&self) -> &[Perm] {
        self.totinn_gens
            .get_or_init(|| crate::words::standard_generators(self, true))
    }

    /// Canonical text form: one row per element, tokens are decimal indices.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for x in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|y| self.mul(x, y).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the whitespace-separated table format; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Loop> {
        text::parse_loop(text)
    }
}
