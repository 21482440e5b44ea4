//! Derived, associator and commutator subloops.

use crate::error::Result;
use crate::loopcore::{subloop_generated, SubloopSet};
use crate::normal::{is_normal, normal_closure, NormalSubloop};
use crate::words::{builtin_ref as word_ref, elementwise_value};
use crate::Loop;

/// `[x,y]` with `xy = (yx)[x,y]`.
fn classical_comm(q: &Loop, x: usize, y: usize) -> usize {
    q.ldiv(q.mul(y, x), q.mul(x, y))
}

/// `[x,y,z]` with `(xy)z = (x(yz))[x,y,z]`.
fn classical_assoc(q: &Loop, x: usize, y: usize, z: usize) -> usize {
    q.ldiv(q.mul(x, q.mul(y, z)), q.mul(q.mul(x, y), z))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

/// `Q′ = ⟨φ(z)/z⟩` for `φ` among `L_{x,y}, R_{x,y}, T_x`. The generated
/// subloop is normal without a closure step.
pub fn derived_subloop(q: &Loop) -> NormalSubloop {
    let gens = q
        .inn_generators()
        .iter()
        .flat_map(|g| q.elements().map(move |z| q.rdiv(g.apply(z), z)));
    let s = subloop_generated(q, gens);
    debug_assert!(is_normal(q, &s));
    NormalSubloop::trusted(s)
}

/// `Ng{[x,y], [x,y,z]}`.
pub fn derived_subloop_classical(q: &Loop) -> NormalSubloop {
    let n = q.order();
    let comms = (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    normal_closure(
        q,
        comms
            .map(|(x, y)| classical_comm(q, x, y))
            .chain(triples(n).map(|(x, y, z)| classical_assoc(q, x, y, z))),
    )
}

/// The plain subloop generated by every elementwise value of the named
/// table words.
pub fn value_subloop(q: &Loop, names: &[&str]) -> Result<SubloopSet> {
    let mut gens = Vec::new();
    for name in names {
        let w = word_ref(name)?;
        for p in w.param_tuples(q.order()) {
            for x in q.elements() {
                gens.push(elementwise_value(q, name, x, &p)?);
            }
        }
    }
    Ok(subloop_generated(q, gens))
}

/// `A(Q) = ⟨a··(x,y,z), b··(x,y,z)⟩`, normal without a closure step.
pub fn associator_subloop(q: &Loop) -> NormalSubloop {
    let s = value_subloop(q, &["Acc", "Bcc"]).expect("built-in words");
    debug_assert!(is_normal(q, &s));
    NormalSubloop::trusted(s)
}

/// `Ng{[x,y,z]}`.
pub fn associator_subloop_classical(q: &Loop) -> NormalSubloop {
    normal_closure(
        q,
        triples(q.order()).map(|(x, y, z)| classical_assoc(q, x, y, z)),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommReport {
    /// `Comm(Q) = ⟨c·(x,y), d·(x,y)⟩`.
    pub comm: SubloopSet,
    pub is_normal: bool,
    /// `Ng{[x,y]}`, the least normal subloop with commutative quotient.
    pub commutative_closure: NormalSubloop,
}

pub fn comm_subloop(q: &Loop) -> CommReport {
    let comm = value_subloop(q, &["Cc", "Dc"]).expect("built-in words");
    let n = q.order();
    let closure = normal_closure(
        q,
        (0..n).flat_map(|x| (0..n).map(move |y| classical_comm(q, x, y))),
    );
    CommReport {
        is_normal: is_normal(q, &comm),
        comm,
        commutative_closure: closure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::loopcore::quotient;

    #[test]
    fn derived_examples() {
        assert_eq!(derived_subloop(&corpus::ex_z4()).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(derived_subloop(&corpus::ex_z22()).to_vec(), vec![0, 2]);
        assert_eq!(derived_subloop(&corpus::minus(4)).to_vec(), vec![0, 2]);
        assert!(derived_subloop(&Loop::cyclic(6)).is_trivial());
    }

    #[test]
    fn derived_matches_classical() {
        for (name, q) in corpus::all_loops() {
            let d = derived_subloop(&q);
            assert_eq!(d, derived_subloop_classical(&q), "{name}");
            let f = quotient(&q, &d).unwrap().quotient;
            assert!(f.is_abelian_group(), "{name}");
        }
    }

    #[test]
    fn associator_examples() {
        assert_eq!(associator_subloop(&corpus::ex_z22()).to_vec(), vec![0, 2]);
        for (name, g) in corpus::groups() {
            assert!(associator_subloop(&g).is_trivial(), "{name}");
        }
        for (name, q) in corpus::all_loops() {
            let a = associator_subloop(&q);
            assert_eq!(a, associator_subloop_classical(&q), "{name}");
            assert!(quotient(&q, &a).unwrap().quotient.is_group(), "{name}");
        }
    }

    #[test]
    fn comm_example() {
        let r = comm_subloop(&corpus::ex_comm());
        assert_eq!(r.comm.to_vec(), vec![0, 2]);
        assert!(!r.is_normal);
        assert!(r.comm.is_subset(&r.commutative_closure));
        let r = comm_subloop(&corpus::ex_z22());
        assert!(r.comm.is_trivial() && r.is_normal);
    }
}
