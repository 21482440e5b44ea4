//! The worked-example ledger: each claim recomputes one published fact from
//! the built-in tables.

use crate::commutator::{
    classify, comm_subloop, derived_subloop, is_abelian_in, series, CommutatorConfig,
    CommutatorEngine, SeriesKind,
};
use crate::corpus;
use crate::error::Result;
use crate::loopcore::{quotient, subloop_generated, SubloopSet};
use crate::normal::{all_normal_subloops, is_normal, NormalSubloop};
use crate::permgrp::{
    closure, group_is_solvable, groups_equal, schreier_stabilizer_gens, GroupClosure, Perm,
    DEFAULT_CAP,
};
use crate::words::{
    assoc_value, builtin, comm_value, inn, is_inner_for, totinn, totmlt, word_images,
    wordset_generates, InnerWordSet, Scope, ELEMENTWISE,
};
use crate::Loop;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    /// Set when the computation itself failed.
    pub error: Option<String>,
}

type Check = fn() -> Result<bool>;

fn set(q: &Loop, xs: &[usize]) -> Result<SubloopSet> {
    SubloopSet::from_elements(q, xs)
}

fn engine(q: &Loop) -> Result<CommutatorEngine<'_>> {
    CommutatorEngine::new(q, &CommutatorConfig::default())
}

fn comm(q: &Loop, a: &[usize], b: &[usize]) -> Result<Vec<usize>> {
    Ok(engine(q)?.commutator(&set(q, a)?, &set(q, b)?)?.to_vec())
}

fn word_group(q: &Loop, names: &[&str]) -> Result<GroupClosure> {
    let mut gens: Vec<Perm> = Vec::new();
    for n in names {
        gens.extend(word_images(q, &builtin(n)?));
    }
    closure(q.order(), &gens, DEFAULT_CAP)
}

fn proper_in_totinn(q: &Loop, names: &[&str]) -> Result<bool> {
    let g = word_group(q, names)?;
    let t = totinn(q, DEFAULT_CAP)?;
    Ok(g.elements().iter().all(|p| t.contains(p)) && g.order() < t.order())
}

/// Closure of the Schreier generators at `1` with coset representatives `R_y`.
fn schreier_closure(q: &Loop, total: bool) -> Result<GroupClosure> {
    let mut gens = Vec::new();
    for x in q.elements() {
        gens.push(q.left(x));
        gens.push(q.right(x));
        if total {
            gens.push(q.middle(x));
        }
    }
    let sg = schreier_stabilizer_gens(q.order(), &gens, q.identity(), |y| q.right(y))?;
    closure(q.order(), &sg, DEFAULT_CAP)
}

/// Whether two words agree as permutations, parameters of `b` reversed.
fn same_reversed(q: &Loop, a: &str, b: &str) -> Result<bool> {
    let (wa, wb) = (builtin(a)?, builtin(b)?);
    Ok(wa.param_tuples(q.order()).all(|p| {
        let rev: Vec<usize> = p.iter().rev().copied().collect();
        wa.eval(q, &p) == wb.eval(q, &rev)
    }))
}

/// Every associator and commutator value is `1` when `x = 1`, or for all `x` when `everywhere`.
fn elementwise_trivial(q: &Loop, everywhere: bool) -> Result<bool> {
    let one = q.identity();
    let xs: Vec<usize> = if everywhere {
        q.elements().collect()
    } else {
        vec![one]
    };
    for w in ELEMENTWISE {
        let binary = w.starts_with('C') || w.starts_with('D');
        for &x in &xs {
            for y in q.elements() {
                if binary {
                    if comm_value(q, w, x, y)? != one {
                        return Ok(false);
                    }
                    continue;
                }
                for z in q.elements() {
                    if assoc_value(q, w, x, y, z)? != one {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn group_commutator_agrees(g: &Loop) -> Result<bool> {
    let e = engine(g)?;
    let inv = |x: usize| g.ldiv(x, g.identity());
    let normals = all_normal_subloops(g);
    for a in &normals {
        for b in &normals {
            let vals = a
                .iter()
                .flat_map(|x| b.iter().map(move |y| (x, y)))
                .map(|(x, y)| g.mul(g.mul(inv(x), inv(y)), g.mul(x, y)));
            if subloop_generated(g, vals) != *e.commutator(a, b)?.subloop() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

const H: [usize; 4] = [0, 1, 2, 3];
const ALL8: [usize; 8] = [0, 1, 2, 3, 4, 5, 6, 7];

const CLAIMS: &[(&str, &str, Check)] = &[
    (
        "q1.parse",
        "the first 6-element table parses with identity at index 0",
        || {
            let q = corpus::q1();
            Ok(q.order() == 6 && q.identity() == 0 && q.mul(2, 1) == 3)
        },
    ),
    (
        "q1.q2.no_t",
        "<L2,R2,M2,U> is properly contained in TotInn for Q1 and Q2",
        || {
            Ok(proper_in_totinn(&corpus::q1(), &["L2", "R2", "M2", "U"])?
                && proper_in_totinn(&corpus::q2(), &["L2", "R2", "M2", "U"])?)
        },
    ),
    (
        "q3.q4.no_u",
        "<L2,R2,M2,T> is properly contained in TotInn for Q3 and Q4",
        || {
            Ok(proper_in_totinn(&corpus::q3(), &["L2", "R2", "M2", "T"])?
                && proper_in_totinn(&corpus::q4(), &["L2", "R2", "M2", "T"])?)
        },
    ),
    (
        "q3.q4.no_al",
        "<Ac,Bc> is properly contained in TotInn for Q3 and Q4",
        || {
            Ok(proper_in_totinn(&corpus::q3(), &["Ac", "Bc"])?
                && proper_in_totinn(&corpus::q4(), &["Ac", "Bc"])?)
        },
    ),
    (
        "klein.totmlt",
        "TotMlt of Z2xZ2 equals Mlt and has order 4",
        || {
            let k = corpus::klein();
            let t = totmlt(&k, DEFAULT_CAP)?;
            Ok(t.order() == 4 && crate::words::mlt(&k, DEFAULT_CAP)?.order() == 4)
        },
    ),
    (
        "groups.totinn_m2",
        "<M2> generates TotInn in the built-in groups",
        || {
            for (_, g) in corpus::groups() {
                let ws =
                    crate::words::InnerWordSet::from_names(&["M2"], crate::words::Scope::TotInn)?;
                if !crate::words::wordset_generates(&g, &ws, DEFAULT_CAP)? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    ),
    (
        "ex_z4.construct",
        "Z4[+] with cyclic square has H normal with quotient Z2",
        || {
            let q = corpus::ex_z4();
            let h = set(&q, &H)?;
            let f = quotient(&q, &h)?.quotient;
            Ok(is_normal(&q, &h) && f.order() == 2 && f.is_group())
        },
    ),
    (
        "ex_z4.assoc_value",
        "b(1,4,5) = 1 in Z4[+] with cyclic square",
        || Ok(assoc_value(&corpus::ex_z4(), "Bcc", 1, 4, 5)? == 1),
    ),
    (
        "ex_z4.derived",
        "Q' = H in Z4[+] with cyclic square",
        || Ok(derived_subloop(&corpus::ex_z4()).to_vec() == H),
    ),
    (
        "ex_z4.comm",
        "[H,H] = [H,Q] = H in Z4[+] with cyclic square",
        || {
            let q = corpus::ex_z4();
            Ok(comm(&q, &H, &H)? == H && comm(&q, &H, &ALL8)? == H)
        },
    ),
    (
        "ex_z4.solvability",
        "Z4[+] with cyclic square is Bruck solvable but not congruence solvable",
        || {
            let q = corpus::ex_z4();
            let e = engine(&q)?;
            let d = series(&e, SeriesKind::CongruenceDerived)?;
            let c = classify(&e)?;
            Ok(!d.terminated
                && d.chain.last().map(|s| s.to_vec()) == Some(H.to_vec())
                && c.bruck_solvable.is_some()
                && c.congruence_solvable.is_none())
        },
    ),
    (
        "ex_z4.totmlt",
        "TotMlt of Z4[+] with cyclic square is solvable",
        || Ok(group_is_solvable(&totmlt(&corpus::ex_z4(), DEFAULT_CAP)?)),
    ),
    (
        "ex_z4.not_abelian_in",
        "H is not abelian in Z4[+] with cyclic square",
        || {
            let q = corpus::ex_z4();
            Ok(!is_abelian_in(
                &engine(&q)?,
                &NormalSubloop::from_elements(&q, &H)?,
            )?)
        },
    ),
    (
        "ex_z22.derived",
        "Q' = K = {0,2} in Z4[+] with Klein square",
        || {
            let q = corpus::ex_z22();
            let d = derived_subloop(&q);
            let f = quotient(&q, &d)?.quotient;
            Ok(d.to_vec() == [0, 2] && f.is_abelian_group() && f.order() == 4)
        },
    ),
    (
        "ex_z22.comm",
        "[H,H] = K and [K,Q] = 1 in Z4[+] with Klein square",
        || {
            let q = corpus::ex_z22();
            Ok(comm(&q, &H, &H)? == [0, 2] && comm(&q, &[0, 2], &ALL8)? == [0])
        },
    ),
    (
        "ex_z22.normals",
        "0, K, H and Q are normal in Z4[+] with Klein square",
        || {
            let q = corpus::ex_z22();
            let ns: Vec<Vec<usize>> = all_normal_subloops(&q).iter().map(|n| n.to_vec()).collect();
            Ok([vec![0], vec![0, 2], H.to_vec(), ALL8.to_vec()]
                .iter()
                .all(|s| ns.contains(s)))
        },
    ),
    (
        "ex_z22.nilpotent",
        "Z4[+] with Klein square is centrally nilpotent and H is not abelian in it",
        || {
            let q = corpus::ex_z22();
            let e = engine(&q)?;
            Ok(series(&e, SeriesKind::LowerCentral)?.terminated
                && !is_abelian_in(&e, &NormalSubloop::from_elements(&q, &H)?)?)
        },
    ),
    ("minus4.derived", "Q' = 2G in Z4[-]", || {
        Ok(derived_subloop(&corpus::minus(4)).to_vec() == [0, 2])
    }),
    ("minus4.comm", "[H,H] = 1 and [H,Q] = 2H in Z4[-]", || {
        let q = corpus::minus(4);
        Ok(comm(&q, &H, &H)? == [0] && comm(&q, &H, &ALL8)? == [0, 2])
    }),
    (
        "minus4.classify",
        "Z4[-] is congruence solvable with Q^(2) = 1 and centrally nilpotent",
        || {
            let q = corpus::minus(4);
            let c = classify(&engine(&q)?)?;
            Ok(c.congruence_solvable == Some(2) && c.centrally_nilpotent.is_some())
        },
    ),
    (
        "minus_odd.not_nilpotent",
        "Z3[-] is not centrally nilpotent",
        || {
            let q = corpus::minus(3);
            Ok(classify(&engine(&q)?)?.centrally_nilpotent.is_none())
        },
    ),
    (
        "minus8.lower_central",
        "the lower central series of Z8[-] is Q, 2G, 4G, 1",
        || {
            let q = corpus::minus(8);
            let r = series(&engine(&q)?, SeriesKind::LowerCentral)?;
            let got: Vec<Vec<usize>> = r.chain.iter().map(|s| s.to_vec()).collect();
            Ok(got[1..] == [vec![0, 2, 4, 6], vec![0, 4], vec![0]])
        },
    ),
    (
        "ex_comm.comm",
        "Comm(Q) = {0,2} is not normal in the last Z4[+] example",
        || {
            let r = comm_subloop(&corpus::ex_comm());
            Ok(r.comm.to_vec() == [0, 2] && !r.is_normal)
        },
    ),
    (
        "nonnormal8.subloops",
        "{0,1} is not normal but {0,1,2,3} is in the 8-element commutative example",
        || {
            let q = corpus::nonnormal8();
            let gen = subloop_generated(&q, [1]);
            Ok(gen.to_vec() == [0, 1] && !is_normal(&q, &gen) && is_normal(&q, &set(&q, &H)?))
        },
    ),
    (
        "nonnormal8.plain",
        "the plain subloop of L2 quotients over {0,1,2,3} is {0,1}",
        || {
            let q = corpus::nonnormal8();
            let cfg = CommutatorConfig {
                pruned: false,
                ..CommutatorConfig::with_words(&["L2"], true)?
            };
            let e = CommutatorEngine::new(&q, &cfg)?;
            let a = set(&q, &H)?;
            Ok(e.plain_subloop(&a, &a)?.to_vec() == [0, 1])
        },
    ),
    (
        "q2.center",
        "Z(Q2) has two elements, {0,3} in the printed table",
        || Ok(corpus::q2().center_elements().to_vec() == [0, 3]),
    ),
    (
        "q2.n",
        "N = {0,1,2,3} is a normal abelian group in Q2 with [N,N] = Z(Q2)",
        || {
            let q = corpus::q2();
            let n = set(&q, &H)?;
            let (sub, _) = crate::loopcore::sub_as_loop(&q, &n)?;
            Ok(is_normal(&q, &n)
                && sub.is_abelian_group()
                && comm(&q, &H, &H)? == q.center_elements().to_vec())
        },
    ),
    (
        "q2.solvable",
        "Q2 is congruence solvable and N is not abelian in it",
        || {
            let q = corpus::q2();
            let e = engine(&q)?;
            Ok(classify(&e)?.congruence_solvable.is_some()
                && !is_abelian_in(&e, &NormalSubloop::from_elements(&q, &H)?)?)
        },
    ),
    ("q8.normals", "Q8 has six normal subgroups", || {
        Ok(all_normal_subloops(&corpus::q8()).len() == 6)
    }),
    (
        "q1.schreier",
        "Schreier generators at 1 generate Inn and TotInn of Q1",
        || {
            let q = corpus::q1();
            Ok(
                groups_equal(&schreier_closure(&q, false)?, &inn(&q, DEFAULT_CAP)?)
                    && groups_equal(&schreier_closure(&q, true)?, &totinn(&q, DEFAULT_CAP)?),
            )
        },
    ),
    (
        "words.inn_standard",
        "<L2,R2,T> generates Inn on every built-in loop, and L2 is inner on each",
        || {
            let ws = InnerWordSet::from_names(&["L2", "R2", "T"], Scope::Inn)?;
            for (_, q) in corpus::all_loops() {
                if !wordset_generates(&q, &ws, DEFAULT_CAP)? || !is_inner_for(&q, &builtin("L2")?) {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    ),
    (
        "words.acc_is_r2",
        "a··_{y,z} = R_{z,y}, d·_y = T_y and c·_y = T_y^-1 on every built-in loop",
        || {
            for (_, q) in corpus::all_loops() {
                let (dc, cc, t) = (builtin("Dc")?, builtin("Cc")?, builtin("T")?);
                let ok = same_reversed(&q, "Acc", "R2")?
                    && q.elements().all(|y| {
                        let ty = t.eval(&q, &[y]);
                        dc.eval(&q, &[y]) == ty && cc.eval(&q, &[y]) == ty.inverse()
                    });
                if !ok {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    ),
    (
        "words.elementwise",
        "Associator and commutator values are 1 at x = 1 on every built-in loop and everywhere on abelian groups",
        || {
            for (_, q) in corpus::all_loops() {
                if !elementwise_trivial(&q, q.is_abelian_group())? {
                    return Ok(false);
                }
            }
            elementwise_trivial(&corpus::klein(), true)
        },
    ),
    (
        "groups.commutator",
        "[A,B] is generated by the group commutators [a,b] in the built-in groups",
        || {
            for (_, g) in corpus::groups() {
                if !group_commutator_agrees(&g)? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    ),
    (
        "minus2k.lower_central",
        "the lower central series of Z2^k[-] is Q, 2G, 4G, ..., 1 for k = 1, 2, 3",
        || {
            for m in [2usize, 4, 8] {
                let q = corpus::minus(m);
                let r = series(&engine(&q)?, SeriesKind::LowerCentral)?;
                let mut want = vec![(0..2 * m).collect::<Vec<_>>()];
                let mut step = 2;
                while step <= m {
                    want.push((0..m).step_by(step).collect());
                    step *= 2;
                }
                let got: Vec<Vec<usize>> = r.chain.iter().map(|s| s.to_vec()).collect();
                if !r.terminated || got != want {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    ),
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.0).collect()
}

/// Evaluates every claim.
pub fn verify_all() -> Vec<ClaimOutcome> {
    CLAIMS
        .iter()
        .map(|&(id, statement, check)| match check() {
            Ok(passed) => ClaimOutcome {
                id,
                statement,
                passed,
                error: None,
            },
            Err(e) => ClaimOutcome {
                id,
                statement,
                passed: false,
                error: Some(e.to_string()),
            },
        })
        .collect()
}
