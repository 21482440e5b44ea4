//! Built-in inner words.
//!
//! ASCII names: in the two-operation names the letters `c`, `l`, `r` stand
//! for `·`, `\`, `/`, so `Acl` is the associator word of the identity
//! `(x·y)\z = A(x)\(y\z)` and `Brc` the one of `z/(y·x) = (z/y)/B(x)`.
//! The single-operation names `Ac … Br` are the words `A°_{x,y}`, `B°_{x,y}`
//! of the identities `(z·x)∘y = A°(z)·(x∘y)` and `y∘(z·x) = B°(z)·(y∘x)`.

use std::sync::OnceLock;

use super::{parse_word, WordTemplate};
use crate::error::{Error, Result};
use crate::Loop;

const DEFINITIONS: &[(&str, &str)] = &[
    ("L2", r"L[x*y]^-1 L[x] L[y]"),
    ("R2", r"R[y*x]^-1 R[x] R[y]"),
    ("M2", r"M[y\x]^-1 M[x] M[y]"),
    ("T", r"R[x]^-1 L[x]"),
    ("U", r"R[x]^-1 M[x]"),
    ("J", r"M[1]"),
    ("Ac", r"R[x*y]^-1 R[y] R[x]"),
    ("Al", r"R[x\y]^-1 M[y] R[x]"),
    ("Ar", r"R[x/y]^-1 R[y]^-1 R[x]"),
    ("Bc", r"R[y*x]^-1 L[y] R[x]"),
    ("Bl", r"R[y\x]^-1 L[y]^-1 R[x]"),
    ("Br", r"R[y/x]^-1 M[y]^-1 R[x]"),
    ("Acc", r"R[y*z]^-1 R[z] R[y]"),
    ("Acl", r"M[y\z]^-1 M[z] R[y]"),
    ("Acr", r"R[y/z]^-1 R[z]^-1 R[y]"),
    ("Alc", r"M[y*z]^-1 R[z] M[y]"),
    ("All", r"R[y\z]^-1 M[z] M[y]"),
    ("Alr", r"M[y/z]^-1 R[z]^-1 M[y]"),
    ("Bcc", r"L[z*y]^-1 L[z] L[y]"),
    ("Brc", r"M[z/y]^-1 M[z]^-1 L[y]"),
    ("Blc", r"L[z\y]^-1 L[z]^-1 L[y]"),
    ("Bcr", r"M[z*y] L[z] M[y]^-1"),
    ("Brr", r"L[z/y]^-1 M[z]^-1 M[y]^-1"),
    ("Blr", r"M[z\y] L[z]^-1 M[y]^-1"),
    ("Cc", r"L[y]^-1 R[y]"),
    ("Cl", r"M[y] M[y]"),
    ("Dc", r"R[y]^-1 L[y]"),
    ("Dr", r"M[y]^-1 M[y]^-1"),
];

/// The twelve associator words of the elementwise table, `a` family first.
pub const ASSOCIATORS: [&str; 12] = [
    "Acc", "Acl", "Acr", "Alc", "All", "Alr", "Bcc", "Brc", "Blc", "Bcr", "Brr", "Blr",
];

/// The four commutator words.
pub const COMMUTATORS: [&str; 4] = ["Cc", "Cl", "Dc", "Dr"];

/// All sixteen associator and commutator words.
pub const ELEMENTWISE: [&str; 16] = [
    "Acc", "Acl", "Acr", "Alc", "All", "Alr", "Bcc", "Brc", "Blc", "Bcr", "Brr", "Blr", "Cc", "Cl",
    "Dc", "Dr",
];

/// Associators whose values lie in `N` iff `Q/N` is a group.
pub const GROUP_FAMILY: [&str; 8] = ["Acc", "Acr", "Alc", "Alr", "Bcc", "Blc", "Bcr", "Blr"];

/// Associators whose values lie in `N` iff `Q/N` is an abelian group.
pub const ABELIAN_FAMILY: [&str; 4] = ["Acl", "All", "Brc", "Brr"];

fn catalog() -> &'static [WordTemplate] {
    static CATALOG: OnceLock<Vec<WordTemplate>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        DEFINITIONS
            .iter()
            .map(|(name, text)| parse_word(name, text).expect("built-in word parses"))
            .collect()
    })
}

pub fn builtin_catalog() -> Vec<WordTemplate> {
    catalog().to_vec()
}

pub(crate) fn builtin_ref(name: &str) -> Result<&'static WordTemplate> {
    catalog()
        .iter()
        .find(|w| w.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn builtin(name: &str) -> Result<WordTemplate> {
    builtin_ref(name).cloned()
}

/// How an elementwise value is read off the inner mapping `W` at `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementwiseSide {
    /// `W(x)/x`
    Right,
    /// `x\W(x)`
    Left,
}

fn side_of(name: &str) -> Result<ElementwiseSide> {
    if !ELEMENTWISE.contains(&name) {
        return Err(Error::UnknownName(name.to_string()));
    }
    Ok(match name.as_bytes()[0] {
        b'A' | b'D' => ElementwiseSide::Right,
        _ => ElementwiseSide::Left,
    })
}

/// Elementwise value of a table word at point `x` and parameters `params`.
pub fn elementwise_value(q: &Loop, name: &str, x: usize, params: &[usize]) -> Result<usize> {
    let side = side_of(name)?;
    let w = builtin_ref(name)?;
    if params.len() != w.arity() {
        return Err(Error::UnknownName(format!(
            "{name} takes {} parameters",
            w.arity()
        )));
    }
    let wx = w.apply(q, params, x);
    Ok(match side {
        ElementwiseSide::Right => q.rdiv(wx, x),
        ElementwiseSide::Left => q.ldiv(x, wx),
    })
}

/// `a(x, y, z)` for one of the twelve associators, e.g. `a··(x,y,z) = A··_{y,z}(x)/x`.
pub fn assoc_value(q: &Loop, name: &str, x: usize, y: usize, z: usize) -> Result<usize> {
    if !ASSOCIATORS.contains(&name) {
        return Err(Error::UnknownName(name.to_string()));
    }
    elementwise_value(q, name, x, &[y, z])
}

/// `c(x, y)` for one of the four commutators, e.g. `c·(x,y) = x\C·_y(x)`.
pub fn comm_value(q: &Loop, name: &str, x: usize, y: usize) -> Result<usize> {
    if !COMMUTATORS.contains(&name) {
        return Err(Error::UnknownName(name.to_string()));
    }
    elementwise_value(q, name, x, &[y])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::permgrp::Perm;

    fn w(name: &str) -> WordTemplate {
        builtin(name).unwrap()
    }

    #[test]
    fn catalog_is_complete() {
        let names: Vec<String> = builtin_catalog().into_iter().map(|w| w.name).collect();
        for n in ELEMENTWISE.iter().chain(&["L2", "R2", "M2", "T", "U", "J"]) {
            assert!(names.iter().any(|m| m == n), "{n}");
        }
        assert_eq!(w("J").arity(), 0);
        assert_eq!(w("T").arity(), 1);
        assert_eq!(w("Cl").arity(), 1);
        assert_eq!(w("Blr").arity(), 2);
        assert_eq!(
            builtin("Xyz").unwrap_err(),
            Error::UnknownName("Xyz".into())
        );
    }

    #[test]
    fn multiplicative_words_match_standard_generators() {
        for (name, q) in corpus::all_loops() {
            for y in q.elements() {
                let t = w("T").eval(&q, &[y]);
                assert_eq!(w("Dc").eval(&q, &[y]), t, "{name}");
                assert_eq!(w("Cc").eval(&q, &[y]), t.inverse(), "{name}");
                for z in q.elements() {
                    assert_eq!(
                        w("Acc").eval(&q, &[y, z]),
                        w("R2").eval(&q, &[z, y]),
                        "{name}"
                    );
                    assert_eq!(
                        w("Bcc").eval(&q, &[y, z]),
                        w("L2").eval(&q, &[z, y]),
                        "{name}"
                    );
                }
            }
        }
    }

    #[test]
    fn defining_identities_hold() {
        // (x∘y)⊛z-style identities, checked pointwise against the table
        let q = corpus::q3();
        for x in q.elements() {
            for y in q.elements() {
                for z in q.elements() {
                    let p = [y, z];
                    let a = |n: &str| w(n).apply(&q, &p, x);
                    assert_eq!(q.mul(q.mul(x, y), z), q.mul(a("Acc"), q.mul(y, z)));
                    assert_eq!(q.ldiv(q.mul(x, y), z), q.ldiv(a("Acl"), q.ldiv(y, z)));
                    assert_eq!(q.rdiv(q.mul(x, y), z), q.mul(a("Acr"), q.rdiv(y, z)));
                    assert_eq!(q.mul(q.ldiv(x, y), z), q.ldiv(a("Alc"), q.mul(y, z)));
                    assert_eq!(q.ldiv(q.ldiv(x, y), z), q.mul(a("All"), q.ldiv(y, z)));
                    assert_eq!(q.rdiv(q.ldiv(x, y), z), q.ldiv(a("Alr"), q.rdiv(y, z)));
                    assert_eq!(q.mul(z, q.mul(y, x)), q.mul(q.mul(z, y), a("Bcc")));
                    assert_eq!(q.rdiv(z, q.mul(y, x)), q.rdiv(q.rdiv(z, y), a("Brc")));
                    assert_eq!(q.ldiv(z, q.mul(y, x)), q.mul(q.ldiv(z, y), a("Blc")));
                    assert_eq!(q.mul(z, q.rdiv(y, x)), q.rdiv(q.mul(z, y), a("Bcr")));
                    assert_eq!(q.rdiv(z, q.rdiv(y, x)), q.mul(q.rdiv(z, y), a("Brr")));
                    assert_eq!(q.ldiv(z, q.rdiv(y, x)), q.rdiv(q.ldiv(z, y), a("Blr")));
                }
                let c = |n: &str| w(n).apply(&q, &[y], x);
                assert_eq!(q.mul(x, y), q.mul(y, c("Cc")));
                assert_eq!(q.ldiv(x, y), q.rdiv(y, c("Cl")));
                assert_eq!(q.mul(y, x), q.mul(c("Dc"), y));
                assert_eq!(q.rdiv(y, x), q.ldiv(c("Dr"), y));
            }
        }
    }

    #[test]
    fn single_operation_reductions() {
        for (name, q) in corpus::all_loops() {
            for x in q.elements() {
                for y in q.elements() {
                    assert_eq!(
                        w("Ar").eval(&q, &[x, y]),
                        w("Ac").eval(&q, &[q.rdiv(x, y), y]).inverse(),
                        "{name}"
                    );
                    assert_eq!(
                        w("Bl").eval(&q, &[x, y]),
                        w("Bc").eval(&q, &[q.ldiv(y, x), y]).inverse(),
                        "{name}"
                    );
                    assert_eq!(
                        w("Br").eval(&q, &[x, y]),
                        w("Al").eval(&q, &[q.rdiv(y, x), y]).inverse(),
                        "{name}"
                    );
                }
            }
        }
    }

    #[test]
    fn generator_expansions() {
        for (name, q) in corpus::all_loops() {
            let t = |x: usize| w("T").eval(&q, &[x]);
            let u = |x: usize| w("U").eval(&q, &[x]);
            for x in q.elements() {
                for y in q.elements() {
                    // B·_{y,x} = T_{xy} L_{x,y} T_y⁻¹
                    let rhs: Perm = t(q.mul(x, y))
                        .compose(&w("L2").eval(&q, &[x, y]))
                        .compose(&t(y).inverse());
                    assert_eq!(w("Bc").eval(&q, &[y, x]), rhs, "{name}");
                    // A\_{y,x} = U_{y\x} M_{x,y} U_y⁻¹
                    let rhs = u(q.ldiv(y, x))
                        .compose(&w("M2").eval(&q, &[x, y]))
                        .compose(&u(y).inverse());
                    assert_eq!(w("Al").eval(&q, &[y, x]), rhs, "{name}");
                    // M_{x,y} = A·\_{y,x} U_y
                    let rhs = w("Acl").eval(&q, &[y, x]).compose(&u(y));
                    assert_eq!(w("M2").eval(&q, &[x, y]), rhs, "{name}");
                }
            }
        }
    }

    #[test]
    fn table_conditions_b_and_c() {
        for (name, q) in corpus::all_loops() {
            let one = q.identity();
            for n in ELEMENTWISE {
                let arity = w(n).arity();
                let params: Vec<Vec<usize>> = w(n).param_tuples(q.order()).collect();
                for p in &params {
                    assert_eq!(elementwise_value(&q, n, one, p).unwrap(), one, "{name} {n}");
                    if q.is_abelian_group() {
                        for x in q.elements() {
                            assert_eq!(elementwise_value(&q, n, x, p).unwrap(), one, "{name} {n}");
                        }
                    }
                }
                assert!(arity == 1 || arity == 2);
            }
        }
    }

    #[test]
    fn division_commutator_reductions() {
        for (name, q) in corpus::all_loops() {
            for x in q.elements() {
                for y in q.elements() {
                    assert_eq!(
                        comm_value(&q, "Cl", x, y).unwrap(),
                        comm_value(&q, "Cc", x, q.ldiv(x, y)).unwrap(),
                        "{name}"
                    );
                    assert_eq!(
                        comm_value(&q, "Dr", x, y).unwrap(),
                        comm_value(&q, "Dc", x, q.rdiv(y, x)).unwrap(),
                        "{name}"
                    );
                }
            }
        }
    }

    #[test]
    fn bcc_value_in_z4_example() {
        let q = corpus::ex_z4();
        // (x, ε) is encoded as ε·4 + x
        let v = assoc_value(&q, "Bcc", 1, 4, 5).unwrap();
        assert_eq!(v, 1);
    }

    #[test]
    fn value_name_checks() {
        let q = Loop::cyclic(3);
        assert!(assoc_value(&q, "Cc", 0, 0, 0).is_err());
        assert!(comm_value(&q, "Acc", 0, 0).is_err());
        assert!(comm_value(&q, "L2", 0, 0).is_err());
    }
}
