//! The order-doubling construction `G[⊕]` on `G × Z_2`.

use super::{check_latin, Loop};
use crate::error::{Error, Result};

/// An `m × m` Latin square over `0..m`, read positionally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    m: usize,
    cells: Vec<usize>,
}

impl LatinSquare {
    pub fn new(m: usize, cells: Vec<usize>) -> Result<Self> {
        check_latin(m, &cells)?;
        Ok(Self { m, cells })
    }

    pub(super) fn new_unchecked(m: usize, cells: Vec<usize>) -> Self {
        Self { m, cells }
    }

    pub fn from_fn(m: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new(m, (0..m * m).map(|i| f(i / m, i % m)).collect())
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn get(&self, r: usize, c: usize) -> usize {
        self.cells[r * self.m + c]
    }
}

/// Builds `G[⊕]`: `(x,a)(y,b) = (x+y, a+b)` if `a = 0` or `b = 0`, and
/// `(x ⊕ y, 0)` otherwise. The pair `(x, ε)` is encoded as `ε·m + x`, so the
/// kernel `H = G × {0}` of the projection onto `Z_2` is the prefix `0..m`.
pub fn gplus_construct(group: &Loop, oplus: &LatinSquare) -> Result<Loop> {
    if !group.is_abelian_group() {
        return Err(Error::NotAbelianGroup);
    }
    let m = group.order();
    if oplus.order() != m {
        return Err(Error::NotLatinSquare(format!(
            "⊕ table has order {}, group has order {m}",
            oplus.order()
        )));
    }
    Loop::from_fn(2 * m, |p, q| {
        let (x, a) = (p % m, p / m);
        let (y, b) = (q % m, q / m);
        if a == 0 || b == 0 {
            ((a + b) % 2) * m + group.mul(x, y)
        } else {
            oplus.get(x, y)
        }
    })
}

/// `G[−]` for the cyclic group `G = Z_m`, i.e. `x ⊕ y = x − y`.
pub fn minus_construct(m: usize) -> Loop {
    let g = Loop::cyclic(m);
    let minus = LatinSquare::from_fn(m, |x, y| (x + m - y) % m).expect("subtraction is Latin");
    gplus_construct(&g, &minus).expect("Z_m is an abelian group")
}
