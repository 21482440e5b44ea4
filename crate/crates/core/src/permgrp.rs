//! Permutation groups on `0..n`, enumerated exhaustively.
//!
//! Permutations act on the left: `p.compose(&q)` is `p ∘ q`, the map
//! `x ↦ p(q(x))`, so words are evaluated right to left.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Box<[u16]>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm::from_fn(n, |x| x)
    }

    /// Builds `x ↦ f(x)`. `f` must be a bijection; checked in debug builds.
    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Perm {
        assert!(n <= u16::MAX as usize + 1, "degree {n} too large");
        let img: Box<[u16]> = (0..n).map(|x| f(x) as u16).collect();
        let p = Perm { img };
        debug_assert!(p.is_bijection());
        p
    }

    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in images {
            if y >= n || std::mem::replace(&mut seen[y], true) {
                return Err(Error::NotLatinSquare(format!(
                    "image array {images:?} is not a permutation"
                )));
            }
        }
        Ok(Perm::from_fn(n, |x| images[x]))
    }

    fn is_bijection(&self) -> bool {
        let n = self.img.len();
        let mut seen = vec![false; n];
        self.img
            .iter()
            .all(|&y| (y as usize) < n && !std::mem::replace(&mut seen[y as usize], true))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            img: other.img.iter().map(|&x| self.img[x as usize]).collect(),
        }
    }

    pub fn try_compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u16; self.degree()].into_boxed_slice();
        for (x, &y) in self.img.iter().enumerate() {
            img[y as usize] = x as u16;
        }
        Perm { img }
    }

    /// `p⁻¹ q⁻¹ p q`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    /// `g p g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(x, &y)| x == y as usize)
    }

    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&y| y as usize).collect()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, y) in self.img.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, "]")
    }
}

/// An explicitly enumerated permutation group.
#[derive(Clone)]
pub struct GroupClosure {
    n: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashSet<Perm>,
}

impl fmt::Debug for GroupClosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupClosure")
            .field("degree", &self.n)
            .field("order", &self.elements.len())
            .field("generators", &self.generators.len())
            .finish()
    }
}

impl GroupClosure {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Elements in breadth-first discovery order; the identity comes first.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    fn from_elements(n: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> GroupClosure {
        let index = elements.iter().cloned().collect();
        GroupClosure {
            n,
            generators,
            elements,
            index,
        }
    }
}

/// Breadth-first closure of `gens` acting on `0..n`. Fails once more than
/// `cap` elements have been found.
pub fn closure(n: usize, gens: &[Perm], cap: usize) -> Result<GroupClosure> {
    for g in gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: g.degree(),
            });
        }
    }
    let mut uniq: Vec<Perm> = Vec::with_capacity(gens.len());
    let mut seen_gen = HashSet::new();
    for g in gens {
        if !g.is_identity() && seen_gen.insert(g.clone()) {
            uniq.push(g.clone());
        }
    }
    let id = Perm::identity(n);
    let mut index = HashSet::new();
    index.insert(id.clone());
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &uniq {
            let p = g.compose(&elements[i]);
            if !index.contains(&p) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(p.clone());
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    Ok(GroupClosure {
        n,
        generators: gens.to_vec(),
        elements,
        index,
    })
}

/// `{ g ∈ G : g(c) = c }` by filtering the element list.
pub fn stabilizer_bruteforce(g: &GroupClosure, c: usize) -> GroupClosure {
    let elems: Vec<Perm> = g
        .elements
        .iter()
        .filter(|p| p.apply(c) == c)
        .cloned()
        .collect();
    GroupClosure::from_elements(g.n, elems.clone(), elems)
}

pub fn orbit(n: usize, gens: &[Perm], c: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[c] = true;
    let mut out = vec![c];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

pub fn is_transitive(n: usize, gens: &[Perm]) -> bool {
    n <= 1 || orbit(n, gens, 0).len() == n
}

/// Schreier generators `g_{h(y)}⁻¹ h g_y` of the stabilizer of `c`, where
/// `coset_rep(y)` is an element of the group sending `c` to `y`. Output is
/// deduplicated and sorted.
pub fn schreier_stabilizer_gens(
    n: usize,
    gens: &[Perm],
    c: usize,
    coset_rep: impl Fn(usize) -> Perm,
) -> Result<Vec<Perm>> {
    if !is_transitive(n, gens) {
        return Err(Error::NotTransitive);
    }
    let reps: Vec<Perm> = (0..n).map(&coset_rep).collect();
    for (y, r) in reps.iter().enumerate() {
        if r.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: r.degree(),
            });
        }
        if r.apply(c) != y || (y == c && !r.is_identity()) {
            return Err(Error::BadCosetRep { point: y });
        }
    }
    let inv: Vec<Perm> = reps.iter().map(Perm::inverse).collect();
    let mut out = HashSet::new();
    for h in gens {
        for y in 0..n {
            let s = inv[h.apply(y)].compose(h).compose(&reps[y]);
            debug_assert_eq!(s.apply(c), c);
            out.insert(s);
        }
    }
    let mut out: Vec<Perm> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Whether every element of `a` lies in `b`.
pub fn subgroup_leq(a: &[Perm], b: &GroupClosure) -> Result<bool> {
    for p in a {
        if p.degree() != b.n {
            return Err(Error::DegreeMismatch {
                left: p.degree(),
                right: b.n,
            });
        }
    }
    Ok(a.iter().all(|p| b.contains(p)))
}

pub fn groups_equal(a: &GroupClosure, b: &GroupClosure) -> bool {
    a.n == b.n && a.order() == b.order() && a.elements.iter().all(|p| b.contains(p))
}

/// Grows `group` by `p` if it is not yet a member. Returns whether it grew.
fn absorb(gens: &mut Vec<Perm>, group: &mut GroupClosure, p: Perm) -> bool {
    if group.contains(&p) {
        return false;
    }
    gens.push(p);
    *group = closure(group.n, gens, usize::MAX).expect("subgroup of an enumerated group");
    true
}

/// Derived subgroup `[G, G]`, the normal closure of the generator
/// commutators under conjugation by the generators.
pub fn derived_subgroup(g: &GroupClosure) -> GroupClosure {
    let gg = &g.generators;
    let mut gens = Vec::new();
    let mut h = closure(g.n, &[], 1).expect("trivial group");
    for a in gg {
        for b in gg {
            absorb(&mut gens, &mut h, a.commutator(b));
        }
    }
    loop {
        let mut grew = false;
        let snapshot = gens.clone();
        for s in &snapshot {
            for x in gg {
                grew |= absorb(&mut gens, &mut h, s.conjugate_by(x));
                grew |= absorb(&mut gens, &mut h, s.conjugate_by(&x.inverse()));
            }
        }
        if !grew {
            break;
        }
    }
    h
}

pub fn group_is_solvable(g: &GroupClosure) -> bool {
    let mut h = g.clone();
    loop {
        if h.is_trivial() {
            return true;
        }
        let d = derived_subgroup(&h);
        if d.order() == h.order() {
            return false;
        }
        h = d;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::Loop;

    fn cycle(n: usize) -> Perm {
        Perm::from_fn(n, |x| (x + 1) % n)
    }

    fn transposition(n: usize, a: usize, b: usize) -> Perm {
        Perm::from_fn(n, |x| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        })
    }

    #[test]
    fn composition_basics() {
        let p = Perm::from_images(&[2, 0, 1, 3]).unwrap();
        let id = Perm::identity(4);
        assert_eq!(p.compose(&id), p);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
        let q = transposition(4, 0, 3);
        // apply q first
        assert_eq!(p.compose(&q).apply(0), p.apply(3));
        assert!(matches!(
            p.try_compose(&Perm::identity(3)),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(Perm::from_images(&[0, 0]).is_err());
        assert_eq!(p.to_string(), "[2,0,1,3]");
    }

    #[test]
    fn translations_of_z3_add() {
        let z3 = Loop::cyclic(3);
        assert_eq!(z3.left(1).compose(&z3.left(1)), z3.left(2));
    }

    #[test]
    fn closure_orders() {
        assert_eq!(closure(5, &[Perm::identity(5)], 10).unwrap().order(), 1);
        let z4 = Loop::cyclic(4);
        let gens: Vec<Perm> = z4
            .elements()
            .flat_map(|x| [z4.left(x), z4.right(x)])
            .collect();
        assert_eq!(closure(4, &gens, DEFAULT_CAP).unwrap().order(), 4);
        let s5 = closure(5, &[transposition(5, 0, 1), cycle(5)], DEFAULT_CAP).unwrap();
        assert_eq!(s5.order(), 120);
        assert_eq!(
            closure(5, &[transposition(5, 0, 1), cycle(5)], 50).unwrap_err(),
            Error::CapExceeded { cap: 50 }
        );
    }

    #[test]
    fn stabilizers() {
        let s3 = closure(3, &[transposition(3, 0, 1), cycle(3)], DEFAULT_CAP).unwrap();
        assert_eq!(stabilizer_bruteforce(&s3, 0).order(), 2);
        let z5 = closure(5, &[cycle(5)], DEFAULT_CAP).unwrap();
        assert!(stabilizer_bruteforce(&z5, 0).is_trivial());
    }

    #[test]
    fn transitivity() {
        assert!(!is_transitive(3, &[Perm::identity(3)]));
        assert!(is_transitive(6, &[cycle(6)]));
        let q = corpus::q1();
        let ls: Vec<Perm> = q.elements().map(|x| q.left(x)).collect();
        assert!(is_transitive(6, &ls));
    }

    #[test]
    fn schreier_on_regular_representation_is_trivial() {
        let z4 = Loop::cyclic(4);
        let gens: Vec<Perm> = z4.elements().map(|x| z4.left(x)).collect();
        let out = schreier_stabilizer_gens(4, &gens, 0, |y| z4.right(y)).unwrap();
        assert!(out.iter().all(Perm::is_identity));
    }

    #[test]
    fn schreier_rejects_bad_input() {
        let n = 4;
        let gens = [transposition(n, 0, 1)];
        assert_eq!(
            schreier_stabilizer_gens(n, &gens, 0, |_| Perm::identity(n)).unwrap_err(),
            Error::NotTransitive
        );
        let gens = [cycle(n)];
        assert_eq!(
            schreier_stabilizer_gens(n, &gens, 0, |_| Perm::identity(n)).unwrap_err(),
            Error::BadCosetRep { point: 1 }
        );
    }

    #[test]
    fn orbit_stabilizer() {
        for (name, q) in corpus::all_loops() {
            let n = q.order();
            let gens: Vec<Perm> = q.elements().flat_map(|x| [q.left(x), q.right(x)]).collect();
            let g = closure(n, &gens, DEFAULT_CAP).unwrap();
            let st = stabilizer_bruteforce(&g, q.identity());
            assert_eq!(
                st.order() * orbit(n, &gens, q.identity()).len(),
                g.order(),
                "{name}"
            );
        }
    }

    #[test]
    fn subgroup_comparison() {
        let s4 = closure(4, &[transposition(4, 0, 1), cycle(4)], DEFAULT_CAP).unwrap();
        let v = closure(4, &[cycle(4)], DEFAULT_CAP).unwrap();
        assert!(groups_equal(&s4, &s4));
        assert!(subgroup_leq(v.generators(), &s4).unwrap());
        assert!(!groups_equal(&v, &s4));
        assert!(!subgroup_leq(s4.generators(), &v).unwrap());
    }

    #[test]
    fn solvability() {
        let z6 = closure(6, &[cycle(6)], DEFAULT_CAP).unwrap();
        assert!(group_is_solvable(&z6));
        let s4 = closure(4, &[transposition(4, 0, 1), cycle(4)], DEFAULT_CAP).unwrap();
        assert!(group_is_solvable(&s4));
        assert_eq!(derived_subgroup(&s4).order(), 12);
        let s5 = closure(5, &[transposition(5, 0, 1), cycle(5)], DEFAULT_CAP).unwrap();
        assert!(!group_is_solvable(&s5));
        assert_eq!(derived_subgroup(&s5).order(), 60);
    }
}
