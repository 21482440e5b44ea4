use super::subloops::derived_subloop;
use super::CommutatorEngine;
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::loopcore::{quotient, sub_as_loop, SubloopSet};
use crate::normal::NormalSubloop;
use crate::Loop;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `Q_(i+1) = [Q_(i), Q]_Q`
    LowerCentral,
    /// `Q^(i+1) = [Q^(i), Q^(i)]_Q`
    CongruenceDerived,
    /// `Q^[i+1] = (Q^[i])′`, computed inside the subloop `Q^[i]`
    BruckDerived,
}

impl SeriesKind {
    pub fn label(self) -> &'static str {
        match self {
            SeriesKind::LowerCentral => "lower_central",
            SeriesKind::CongruenceDerived => "congruence_derived",
            SeriesKind::BruckDerived => "bruck_derived",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Starts at `Q`, strictly decreasing, ends at the first repeated term.
    pub chain: Vec<SubloopSet>,
    /// Whether the last term is trivial.
    pub terminated: bool,
    /// Number of strict steps, `chain.len() - 1`.
    pub length: usize,
}

fn finish(kind: SeriesKind, chain: Vec<SubloopSet>) -> SeriesReport {
    SeriesReport {
        kind,
        terminated: chain.last().is_some_and(|s| s.is_trivial()),
        length: chain.len() - 1,
        chain,
    }
}

fn bruck_series(q: &Loop) -> Result<SeriesReport> {
    let mut chain = vec![SubloopSet::whole(q)];
    // the current term as a loop of its own, with its labels in `q`
    let mut cur = q.clone();
    let mut map: Vec<usize> = q.elements().collect();
    loop {
        let d = derived_subloop(&cur);
        if d.len() == cur.order() {
            break;
        }
        let in_q = ElemSet::from_iter(q.order(), d.iter().map(|x| map[x]));
        chain.push(SubloopSet::new(q, in_q)?);
        let (sub, inner) = sub_as_loop(&cur, &d)?;
        map = inner.iter().map(|&x| map[x]).collect();
        cur = sub;
    }
    Ok(finish(SeriesKind::BruckDerived, chain))
}

/// Iterates the recurrence of `kind` until it stabilizes.
pub fn series(e: &CommutatorEngine<'_>, kind: SeriesKind) -> Result<SeriesReport> {
    let q = e.loop_ref();
    if kind == SeriesKind::BruckDerived {
        return bruck_series(q);
    }
    let whole = SubloopSet::whole(q);
    let mut chain = vec![whole.clone()];
    loop {
        let cur = chain.last().expect("nonempty");
        let other = match kind {
            SeriesKind::LowerCentral => &whole,
            _ => cur,
        };
        let next = e.commutator(cur, other)?.into_subloop();
        if &next == cur {
            break;
        }
        chain.push(next);
    }
    Ok(finish(kind, chain))
}

/// `1 = Z_0 ≤ Z_1 ≤ …` with `Z_{i+1}/Z_i = Z(Q/Z_i)`, up to the first
/// repeated term.
pub fn upper_central_chain(q: &Loop) -> Result<Vec<SubloopSet>> {
    let mut chain = vec![SubloopSet::trivial(q)];
    loop {
        let cur = chain.last().expect("nonempty");
        let f = quotient(q, cur)?;
        let z = f.quotient.center_elements();
        let pre = ElemSet::from_iter(
            q.order(),
            q.elements().filter(|&x| z.contains(f.block_of[x])),
        );
        let next = SubloopSet::new(q, pre)?;
        if &next == cur {
            break;
        }
        chain.push(next);
    }
    Ok(chain)
}

/// Class or length of each series when it reaches the trivial subloop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub centrally_nilpotent: Option<usize>,
    pub congruence_solvable: Option<usize>,
    pub bruck_solvable: Option<usize>,
}

pub fn classify(e: &CommutatorEngine<'_>) -> Result<Classification> {
    let at = |kind| -> Result<Option<usize>> {
        let r = series(e, kind)?;
        Ok(r.terminated.then_some(r.length))
    };
    let c = Classification {
        centrally_nilpotent: at(SeriesKind::LowerCentral)?,
        congruence_solvable: at(SeriesKind::CongruenceDerived)?,
        bruck_solvable: at(SeriesKind::BruckDerived)?,
    };
    debug_assert_eq!(c.centrally_nilpotent, {
        let up = upper_central_chain(e.loop_ref())?;
        up.last()
            .expect("nonempty")
            .is_whole()
            .then_some(up.len() - 1)
    });
    Ok(c)
}

/// Whether `[N, N]_Q` is trivial.
pub fn is_abelian_in(e: &CommutatorEngine<'_>, n: &NormalSubloop) -> Result<bool> {
    Ok(e.commutator(n, n)?.is_trivial())
}
