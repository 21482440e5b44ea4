use super::Loop;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// A subset of a loop closed under the three operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubloopSet {
    members: ElemSet,
}

impl std::fmt::Debug for SubloopSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.members.fmt(f)
    }
}

impl SubloopSet {
    /// Validates that `members` contains the identity and is closed under
    /// `·`, `\` and `/`.
    pub fn new(q: &Loop, members: ElemSet) -> Result<SubloopSet> {
        if members.domain() != q.order() {
            return Err(Error::NotSameLoop {
                left: members.domain(),
                right: q.order(),
            });
        }
        if !members.contains(q.identity()) {
            return Err(Error::NotSubloop);
        }
        let elems = members.to_vec();
        for &x in &elems {
            for &y in &elems {
                if !members.contains(q.mul(x, y))
                    || !members.contains(q.ldiv(x, y))
                    || !members.contains(q.rdiv(x, y))
                {
                    return Err(Error::NotSubloop);
                }
            }
        }
        Ok(SubloopSet { members })
    }

    pub fn from_elements(q: &Loop, elems: &[usize]) -> Result<SubloopSet> {
        for &x in elems {
            q.check_element(x)?;
        }
        SubloopSet::new(q, ElemSet::from_iter(q.order(), elems.iter().copied()))
    }

    pub(crate) fn from_closed(members: ElemSet) -> SubloopSet {
        SubloopSet { members }
    }

    pub fn trivial(q: &Loop) -> SubloopSet {
        SubloopSet {
            members: ElemSet::from_iter(q.order(), [q.identity()]),
        }
    }

    pub fn whole(q: &Loop) -> SubloopSet {
        SubloopSet {
            members: ElemSet::full(q.order()),
        }
    }

    pub fn parent_order(&self) -> usize {
        self.members.domain()
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.len() == self.parent_order()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &SubloopSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// The intersection of two subloops is a subloop.
    pub fn intersection(&self, other: &SubloopSet) -> SubloopSet {
        SubloopSet {
            members: self.members.intersection(&other.members),
        }
    }
}

/// Closes `set` under multiplication, in place. Finite and multiplication
/// closed, so also division closed.
pub(crate) fn close_under_mul(q: &Loop, set: &mut ElemSet) {
    set.insert(q.identity());
    let mut elems = set.to_vec();
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        let mut j = 0;
        while j <= i {
            let y = elems[j];
            for p in [q.mul(x, y), q.mul(y, x)] {
                if set.insert(p) {
                    elems.push(p);
                }
            }
            j += 1;
        }
        i += 1;
    }
}

/// The least subloop containing `gens`.
pub fn subloop_generated(q: &Loop, gens: impl IntoIterator<Item = usize>) -> SubloopSet {
    let mut set = ElemSet::from_iter(q.order(), gens);
    close_under_mul(q, &mut set);
    debug_assert!(SubloopSet::new(q, set.clone()).is_ok());
    SubloopSet { members: set }
}

/// Re-indexes a subloop as a loop of its own. `map[i]` is the element of `q`
/// that plays the role of `i`.
pub fn sub_as_loop(q: &Loop, s: &SubloopSet) -> Result<(Loop, Vec<usize>)> {
    if s.parent_order() != q.order() {
        return Err(Error::NotSameLoop {
            left: s.parent_order(),
            right: q.order(),
        });
    }
    let map = s.to_vec();
    let mut back = vec![usize::MAX; q.order()];
    for (i, &x) in map.iter().enumerate() {
        back[x] = i;
    }
    let m = map.len();
    let mut mul = Vec::with_capacity(m * m);
    for &x in &map {
        for &y in &map {
            let p = back[q.mul(x, y)];
            if p == usize::MAX {
                return Err(Error::NotClosed);
            }
            mul.push(p);
        }
    }
    let sub = Loop::from_table(m, mul)?;
    Ok((sub, map))
}

/// A quotient loop together with the canonical projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub quotient: Loop,
    /// `block_of[x]` is the index of the coset of `x` in `quotient`.
    pub block_of: Vec<usize>,
    /// Minimal element of each coset, in block order.
    pub reps: Vec<usize>,
}

/// `Q/N` on the left cosets `xN`, each represented by its least element.
pub fn quotient(q: &Loop, n: &SubloopSet) -> Result<Quotient> {
    if n.parent_order() != q.order() {
        return Err(Error::NotSameLoop {
            left: n.parent_order(),
            right: q.order(),
        });
    }
    if !crate::normal::is_normal(q, n) {
        return Err(Error::NotNormal);
    }
    let mut block_of = vec![usize::MAX; q.order()];
    let mut reps = Vec::new();
    for x in q.elements() {
        if block_of[x] != usize::MAX {
            continue;
        }
        let b = reps.len();
        reps.push(x);
        for a in n.iter() {
            block_of[q.mul(x, a)] = b;
        }
    }
    let k = reps.len();
    let mut mul = Vec::with_capacity(k * k);
    for &x in &reps {
        for &y in &reps {
            mul.push(block_of[q.mul(x, y)]);
        }
    }
    // well-definedness on every pair of representatives
    for x in q.elements() {
        for y in q.elements() {
            assert_eq!(
                block_of[q.mul(x, y)],
                mul[block_of[x] * k + block_of[y]],
                "coset product depends on representatives"
            );
        }
    }
    let quotient = Loop::from_table(k, mul)?;
    Ok(Quotient {
        quotient,
        block_of,
        reps,
    })
}
