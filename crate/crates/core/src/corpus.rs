//! Built-in test loops: small loops with known commutator behaviour, the
//! `G[⊕]` examples and a handful of small groups.

use crate::loopcore::{gplus_construct, minus_construct, parse_latin_square};
use crate::Loop;

pub const Q1_TEXT: &str = include_str!("../data/q1.loop");
pub const Q2_TEXT: &str = include_str!("../data/q2.loop");
pub const Q3_TEXT: &str = include_str!("../data/q3.loop");
pub const Q4_TEXT: &str = include_str!("../data/q4.loop");
pub const NONNORMAL8_TEXT: &str = include_str!("../data/nonnormal8.loop");
pub const OPLUS_Z4_TEXT: &str = include_str!("../data/oplus_z4.txt");
pub const OPLUS_Z22_TEXT: &str = include_str!("../data/oplus_z22.txt");
pub const OPLUS_COMM_TEXT: &str = include_str!("../data/oplus_comm.txt");

fn parsed(text: &str) -> Loop {
    Loop::parse(text).expect("built-in table is a loop")
}

/// `SmallLoop(6,8)`.
pub fn q1() -> Loop {
    parsed(Q1_TEXT)
}

/// `LeftBolLoop(8,1)`.
pub fn q2() -> Loop {
    parsed(Q2_TEXT)
}

/// `SmallLoop(6,47)`.
pub fn q3() -> Loop {
    parsed(Q3_TEXT)
}

/// `AutomorphicLoop(8,1)`.
pub fn q4() -> Loop {
    parsed(Q4_TEXT)
}

/// Commutative loop of order 8 in which `{0,1,2,3}` is normal but the plain
/// subloop generated by its `L`-quotients is not.
pub fn nonnormal8() -> Loop {
    parsed(NONNORMAL8_TEXT)
}

fn z4_with(oplus: &str) -> Loop {
    let sq = parse_latin_square(oplus).expect("built-in square");
    gplus_construct(&Loop::cyclic(4), &sq).expect("Z4 is an abelian group")
}

/// `Z4[⊕]` with `(Z4, ⊕) ≅ Z4`: not congruence solvable.
pub fn ex_z4() -> Loop {
    z4_with(OPLUS_Z4_TEXT)
}

/// `Z4[⊕]` with `(Z4, ⊕) ≅ Z2 × Z2`: centrally nilpotent.
pub fn ex_z22() -> Loop {
    z4_with(OPLUS_Z22_TEXT)
}

/// `Z4[⊕]` whose commutator subloop `Comm(Q)` is not normal.
pub fn ex_comm() -> Loop {
    z4_with(OPLUS_COMM_TEXT)
}

/// `Z_m[−]`.
pub fn minus(m: usize) -> Loop {
    minus_construct(m)
}

pub fn klein() -> Loop {
    Loop::direct_product(&Loop::cyclic(2), &Loop::cyclic(2))
}

/// Group of permutations of `0..k` with composition, elements in
/// lexicographic order of their image arrays.
fn symmetric(k: usize, keep: impl Fn(&[usize]) -> bool) -> Loop {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..k {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out.sort();
        out
    }
    let elems: Vec<Vec<usize>> = perms(k).into_iter().filter(|p| keep(p)).collect();
    let index = |p: &[usize]| elems.iter().position(|e| e == p).expect("closed");
    Loop::from_fn(elems.len(), |a, b| {
        let c: Vec<usize> = (0..k).map(|x| elems[a][elems[b][x]]).collect();
        index(&c)
    })
    .expect("permutation group")
}

/// `S3`, with the identity at index 0.
pub fn s3() -> Loop {
    symmetric(3, |_| true)
}

/// `D4` as the symmetries of the square with vertices `0,1,2,3` in cyclic order.
pub fn d4() -> Loop {
    symmetric(4, |p| {
        (0..4).all(|i| (p[(i + 1) % 4] + 4 - p[i]) % 4 % 2 == 1)
    })
}

/// Quaternion group; `s·4 + u` encodes `±1, ±i, ±j, ±k` with `s = 1` for the
/// minus sign and `u = 0, 1, 2, 3` for `1, i, j, k`.
pub fn q8() -> Loop {
    // unit products: (sign, unit) for u·v
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    Loop::from_fn(8, |a, b| {
        let (s, u) = UNIT[a % 4][b % 4];
        ((s + a / 4 + b / 4) % 2) * 4 + u
    })
    .expect("Q8 is a group")
}

/// The small groups used for group-theoretic cross checks.
pub fn groups() -> Vec<(String, Loop)> {
    let mut out: Vec<(String, Loop)> = (2..=8)
        .map(|n| (format!("Z{n}"), Loop::cyclic(n)))
        .collect();
    out.push(("Z2xZ2".into(), klein()));
    out.push(("S3".into(), s3()));
    out.push(("D4".into(), d4()));
    out.push(("Q8".into(), q8()));
    out
}

/// Every built-in loop with a short name.
pub fn all_loops() -> Vec<(String, Loop)> {
    let mut out: Vec<(String, Loop)> = vec![
        ("Q1".into(), q1()),
        ("Q2".into(), q2()),
        ("Q3".into(), q3()),
        ("Q4".into(), q4()),
        ("nonnormal8".into(), nonnormal8()),
        ("ex_z4".into(), ex_z4()),
        ("ex_z22".into(), ex_z22()),
        ("ex_comm".into(), ex_comm()),
    ];
    for m in [2, 3, 4, 8] {
        out.push((format!("Z{m}[-]"), minus(m)));
    }
    out.extend(groups());
    out
}

/// Looks up a built-in loop by its name in [`all_loops`].
pub fn by_name(name: &str) -> Option<Loop> {
    all_loops()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, q)| q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_identities() {
        for (name, q) in all_loops() {
            assert_eq!(q.identity(), 0, "{name}");
        }
        assert_eq!(s3().order(), 6);
        assert_eq!(d4().order(), 8);
        assert_eq!(q8().order(), 8);
        assert_eq!(minus(8).order(), 16);
    }

    #[test]
    fn groups_are_groups() {
        for (name, g) in groups() {
            assert!(g.is_group(), "{name}");
        }
        assert!(!s3().is_commutative());
        assert!(!d4().is_commutative());
        assert!(!q8().is_commutative());
        // D4 and Q8 differ in the number of involutions
        let involutions = |g: &Loop| g.elements().filter(|&x| x != 0 && g.mul(x, x) == 0).count();
        assert_eq!(involutions(&d4()), 5);
        assert_eq!(involutions(&q8()), 1);
    }

    #[test]
    fn proper_loops_are_not_groups() {
        for q in [
            q1(),
            q2(),
            q3(),
            q4(),
            nonnormal8(),
            ex_z4(),
            ex_z22(),
            ex_comm(),
            minus(3),
        ] {
            assert!(!q.is_associative());
        }
        assert!(nonnormal8().is_commutative());
        assert!(ex_z22().is_commutative());
        assert!(q4().has_two_sided_inverses());
    }

    #[test]
    fn lookup() {
        assert_eq!(by_name("Q8"), Some(q8()));
        assert!(by_name("nope").is_none());
    }
}
