//! The ℤ/2-graded Hom complex between two factorizations.

use super::{MatrixFactorization, MfError};
use crate::polyring::PolyMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// A homogeneous element of `Hom(P, Q)`. Even: `g1: P1 → Q1`, `g0: P0 → Q0`.
/// Odd: `g1: P1 → Q0`, `g0: P0 → Q1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomElement {
    pub parity: Parity,
    pub g1: PolyMatrix,
    pub g0: PolyMatrix,
}

/// `D g = q∘g − (−1)^k g∘p`.
///
/// On an even element this gives the odd pair `(q1·g1 − g0·p1, q0·g0 − g1·p0)`;
/// on an odd one the even pair `(q0·g1 + g0·p1, q1·g0 + g1·p0)`.
pub fn hom_differential(
    g: &HomElement,
    source: &MatrixFactorization,
    target: &MatrixFactorization,
) -> Result<HomElement, MfError> {
    let (p, q) = (source, target);
    let want = (q.rank(), p.rank());
    if g.g1.shape() != want || g.g0.shape() != want {
        return Err(MfError::ShapeMismatch(format!(
            "Hom element blocks are {:?} and {:?}, expected {want:?}",
            g.g1.shape(),
            g.g0.shape()
        )));
    }
    let (d1, d0) = match g.parity {
        Parity::Even => (
            q.p1().try_mul(&g.g1)?.try_sub(&g.g0.try_mul(p.p1())?)?,
            q.p0().try_mul(&g.g0)?.try_sub(&g.g1.try_mul(p.p0())?)?,
        ),
        Parity::Odd => (
            q.p0().try_mul(&g.g1)?.try_add(&g.g0.try_mul(p.p1())?)?,
            q.p1().try_mul(&g.g0)?.try_add(&g.g1.try_mul(p.p0())?)?,
        ),
    };
    Ok(HomElement { parity: g.parity.flip(), g1: d1, g0: d0 })
}
