//! Normal subloops, normal closure and the normal-subloop lattice.
//!
//! Congruences are represented by their identity blocks throughout: the
//! congruence `γ_N` has `a γ_N b` iff `a/b ∈ N`.

use std::collections::BTreeSet;
use std::ops::Deref;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::loopcore::SubloopSet;
use crate::permgrp::Perm;
use crate::Loop;

/// A subloop verified to be invariant under the inner mapping groups.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalSubloop {
    set: SubloopSet,
}

impl std::fmt::Debug for NormalSubloop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.set.fmt(f)
    }
}

impl Deref for NormalSubloop {
    type Target = SubloopSet;
    fn deref(&self) -> &SubloopSet {
        &self.set
    }
}

impl PartialOrd for NormalSubloop {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by size, then lexicographically by sorted members.
impl Ord for NormalSubloop {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.len(), self.to_vec()).cmp(&(other.len(), other.to_vec()))
    }
}

impl NormalSubloop {
    /// Checks invariance under the `Inn` and `TotInn` generators.
    pub fn certify(q: &Loop, set: SubloopSet) -> Result<NormalSubloop> {
        if set.parent_order() != q.order() {
            return Err(Error::NotSameLoop {
                left: set.parent_order(),
                right: q.order(),
            });
        }
        if !invariant_under(&set, q.inn_generators()) {
            return Err(Error::NotNormal);
        }
        debug_assert!(invariant_under(&set, q.totinn_generators()));
        Ok(NormalSubloop { set })
    }

    pub fn from_elements(q: &Loop, elems: &[usize]) -> Result<NormalSubloop> {
        NormalSubloop::certify(q, SubloopSet::from_elements(q, elems)?)
    }

    /// For sets already known to be normal, e.g. normal closures.
    pub(crate) fn trusted(set: SubloopSet) -> NormalSubloop {
        NormalSubloop { set }
    }

    pub fn trivial(q: &Loop) -> NormalSubloop {
        NormalSubloop {
            set: SubloopSet::trivial(q),
        }
    }

    pub fn whole(q: &Loop) -> NormalSubloop {
        NormalSubloop {
            set: SubloopSet::whole(q),
        }
    }

    pub fn subloop(&self) -> &SubloopSet {
        &self.set
    }

    pub fn into_subloop(self) -> SubloopSet {
        self.set
    }

    pub fn intersection(&self, other: &NormalSubloop) -> NormalSubloop {
        NormalSubloop {
            set: self.set.intersection(&other.set),
        }
    }
}

fn invariant_under(s: &SubloopSet, gens: &[Perm]) -> bool {
    gens.iter()
        .all(|g| s.iter().all(|a| s.contains(g.apply(a))))
}

/// Normality as invariance under `L_{x,y}, R_{x,y}, T_x`.
pub fn is_normal(q: &Loop, s: &SubloopSet) -> bool {
    s.parent_order() == q.order() && invariant_under(s, q.inn_generators())
}

/// Normality as invariance under `L_{x,y}, R_{x,y}, M_{x,y}, T_x, U_x`.
pub fn is_normal_total(q: &Loop, s: &SubloopSet) -> bool {
    s.parent_order() == q.order() && invariant_under(s, q.totinn_generators())
}

/// Normality via `xN = Nx`, `x(yN) = (xy)N`, `N(xy) = (Nx)y`.
pub fn is_normal_cosets(q: &Loop, s: &SubloopSet) -> bool {
    let n = q.order();
    let image = |f: &dyn Fn(usize) -> usize| ElemSet::from_iter(n, s.iter().map(f));
    q.elements().all(|x| {
        image(&|a| q.mul(x, a)) == image(&|a| q.mul(a, x))
            && q.elements().all(|y| {
                let xy = q.mul(x, y);
                image(&|a| q.mul(x, q.mul(y, a))) == image(&|a| q.mul(xy, a))
                    && image(&|a| q.mul(a, xy)) == image(&|a| q.mul(q.mul(a, x), y))
            })
    })
}

/// Grows `set` to the least subloop containing it that is invariant under
/// `gens`.
pub(crate) fn close_normal(q: &Loop, set: &mut ElemSet, gens: &[Perm]) {
    set.insert(q.identity());
    let mut elems = set.to_vec();
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        let mut fresh = Vec::new();
        for g in gens {
            fresh.push(g.apply(x));
        }
        for &y in &elems[..=i] {
            fresh.push(q.mul(x, y));
            fresh.push(q.mul(y, x));
        }
        for p in fresh {
            if set.insert(p) {
                elems.push(p);
            }
        }
        i += 1;
    }
}

/// `Ng(X)`, the smallest normal subloop containing `X`.
pub fn normal_closure(q: &Loop, xs: impl IntoIterator<Item = usize>) -> NormalSubloop {
    let mut set = ElemSet::from_iter(q.order(), xs);
    close_normal(q, &mut set, q.inn_generators());
    NormalSubloop {
        set: SubloopSet::from_closed(set),
    }
}

/// Every normal subloop of `q`, sorted by size and then lexicographically.
pub fn all_normal_subloops(q: &Loop) -> Vec<NormalSubloop> {
    let mut found: BTreeSet<NormalSubloop> = BTreeSet::new();
    found.insert(NormalSubloop::trivial(q));
    for a in q.elements() {
        found.insert(normal_closure(q, [a]));
    }
    loop {
        let current: Vec<NormalSubloop> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let join = normal_closure(q, a.iter().chain(b.iter()));
                grew |= found.insert(join);
                grew |= found.insert(a.intersection(b));
            }
        }
        if !grew {
            break;
        }
    }
    found.into_iter().collect()
}

/// `N_α = Ng{x/y : (x,y) ∈ pairs}` for `α = Cg(pairs)`.
pub fn cg_pairs_to_normal(q: &Loop, pairs: &[(usize, usize)]) -> NormalSubloop {
    normal_closure(q, pairs.iter().map(|&(x, y)| q.rdiv(x, y)))
}

/// Blocks of `γ_N`, each sorted, ordered by their least element.
pub fn coset_decomposition(q: &Loop, n: &NormalSubloop) -> Result<Vec<Vec<usize>>> {
    if !is_normal(q, n) {
        return Err(Error::NotNormal);
    }
    let mut block = vec![usize::MAX; q.order()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for x in q.elements() {
        if block[x] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = q.elements().filter(|&y| n.contains(q.rdiv(y, x))).collect();
        for &y in &members {
            block[y] = blocks.len();
        }
        blocks.push(members);
    }
    for a in q.elements() {
        for b in q.elements() {
            let same = block[a] == block[b];
            assert_eq!(n.contains(q.ldiv(b, a)), same, "b\\a disagrees with a/b");
            assert_eq!(n.contains(q.rdiv(b, a)), same, "b/a disagrees with a/b");
            assert_eq!(n.contains(q.ldiv(a, b)), same, "a\\b disagrees with a/b");
        }
    }
    Ok(blocks)
}
