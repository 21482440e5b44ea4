//! Bounded search for violations of the term condition `C(α, β; δ)`.
//!
//! A slim term is a spine `x1 = s_0, s_1, …, s_d` with
//! `s_{i+1} = s_i ∘ x_j` or `x_j ∘ s_i` for a fresh variable `x_j` and
//! `∘ ∈ {·, \, /}`. Repeated variables only specialize assignments, so fresh
//! variables lose nothing. The search runs breadth first over the value
//! tuples `(t(a,ū), t(a,v̄), t(b,ū), t(b,v̄))` in `Q/δ`; since `δ` is a
//! congruence, the blocks of the values depend only on the blocks of the
//! inputs.

use crate::loopcore::{quotient, SubloopSet};
use crate::Loop;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    Mul,
    LDiv,
    RDiv,
}

impl Op {
    fn apply(self, q: &Loop, x: usize, y: usize) -> usize {
        match self {
            Op::Mul => q.mul(x, y),
            Op::LDiv => q.ldiv(x, y),
            Op::RDiv => q.rdiv(x, y),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Op::Mul => "*",
            Op::LDiv => "\\",
            Op::RDiv => "/",
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Step {
    op: Op,
    spine_left: bool,
    u: usize,
    v: usize,
}

/// A term `t` and an assignment with `a α b`, `ū β v̄`,
/// `t(a,ū) δ t(a,v̄)` but not `t(b,ū) δ t(b,v̄)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TcWitness {
    /// Infix rendering over `x1, x2, …` with `*`, `\` and `/`.
    pub term: String,
    pub a: usize,
    pub b: usize,
    /// Values of `x2, x3, …` on the `ū` side.
    pub u: Vec<usize>,
    /// Values of `x2, x3, …` on the `v̄` side.
    pub v: Vec<usize>,
    /// `t(a,ū), t(a,v̄), t(b,ū), t(b,v̄)`.
    pub values: [usize; 4],
}

fn render(steps: &[Step]) -> String {
    let mut t = "x1".to_string();
    for (i, s) in steps.iter().enumerate() {
        let leaf = format!("x{}", i + 2);
        t = if s.spine_left {
            format!("({t}{}{leaf})", s.op.symbol())
        } else {
            format!("({leaf}{}{t})", s.op.symbol())
        };
    }
    if t.starts_with('(') {
        t = t[1..t.len() - 1].to_string();
    }
    t
}

fn advance(q: &Loop, st: [usize; 4], s: &Step) -> [usize; 4] {
    let side = [s.u, s.v, s.u, s.v];
    let mut out = [0; 4];
    for i in 0..4 {
        out[i] = if s.spine_left {
            s.op.apply(q, st[i], side[i])
        } else {
            s.op.apply(q, side[i], st[i])
        };
    }
    out
}

/// Pairs `(x, y)` with `x/y ∈ s`.
fn related_pairs(q: &Loop, s: &SubloopSet) -> Vec<(usize, usize)> {
    q.elements()
        .flat_map(|y| s.iter().map(move |m| (q.mul(m, y), y)))
        .collect()
}

/// Searches slim terms with at most `max_depth` operations for a violation
/// of `C(γ_A, γ_B; γ_D)`. `None` proves nothing.
///
/// # Panics
///
/// If `d` is not normal in `q`.
pub fn tc_refute(
    q: &Loop,
    a: &SubloopSet,
    b: &SubloopSet,
    d: &SubloopSet,
    max_depth: usize,
) -> Option<TcWitness> {
    let f = quotient(q, d).expect("δ must come from a normal subloop");
    let (qd, blocks) = (&f.quotient, &f.block_of);
    let k = qd.order();
    let code = |st: [usize; 4]| ((st[0] * k + st[1]) * k + st[2]) * k + st[3];

    // the search runs in Q/δ, each block pair keeping one concrete pair of Q
    let lift = |pairs: Vec<(usize, usize)>| -> Vec<((usize, usize), (usize, usize))> {
        let mut seen = vec![false; k * k];
        let mut out = Vec::new();
        for (x, y) in pairs {
            let (bx, by) = (blocks[x], blocks[y]);
            if !std::mem::replace(&mut seen[bx * k + by], true) {
                out.push(((bx, by), (x, y)));
            }
        }
        out
    };
    let beta = lift(related_pairs(q, b));
    let mut moves = Vec::with_capacity(6 * beta.len());
    for op in [Op::Mul, Op::LDiv, Op::RDiv] {
        for spine_left in [true, false] {
            for &((bu, bv), (u, v)) in &beta {
                moves.push((
                    Step {
                        op,
                        spine_left,
                        u: bu,
                        v: bv,
                    },
                    Step {
                        op,
                        spine_left,
                        u,
                        v,
                    },
                ));
            }
        }
    }

    struct Node {
        state: [usize; 4],
        parent: Option<(usize, usize)>,
        start: (usize, usize),
    }
    let mut nodes: Vec<Node> = Vec::new();
    let mut seen = vec![false; k.pow(4)];
    let mut frontier = Vec::new();
    for ((bx, by), (x, y)) in lift(related_pairs(q, a)) {
        let st = [bx, bx, by, by];
        seen[code(st)] = true;
        frontier.push(nodes.len());
        nodes.push(Node {
            state: st,
            parent: None,
            start: (x, y),
        });
    }

    let witness = |nodes: &[Node], mut i: usize| -> TcWitness {
        let mut steps = Vec::new();
        while let Some((p, m)) = nodes[i].parent {
            steps.push(moves[m].1);
            i = p;
        }
        steps.reverse();
        let (x, y) = nodes[i].start;
        let values = steps.iter().fold([x, x, y, y], |st, s| advance(q, st, s));
        TcWitness {
            term: render(&steps),
            a: x,
            b: y,
            u: steps.iter().map(|s| s.u).collect(),
            v: steps.iter().map(|s| s.v).collect(),
            values,
        }
    };

    for _ in 0..max_depth {
        let mut next = Vec::new();
        for &i in &frontier {
            let cur = nodes[i].state;
            for (m, (s, _)) in moves.iter().enumerate() {
                let st = advance(qd, cur, s);
                let c = code(st);
                if seen[c] {
                    continue;
                }
                seen[c] = true;
                let j = nodes.len();
                nodes.push(Node {
                    state: st,
                    parent: Some((i, m)),
                    start: nodes[i].start,
                });
                if st[0] == st[1] && st[2] != st[3] {
                    return Some(witness(&nodes, j));
                }
                next.push(j);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    None
}
