use std::fmt;

use super::MfError;
use crate::polyring::{Poly, PolyMatrix, Ring, RingContext};

/// A pair `P1 --p1--> P0 --p0--> P1` of free modules of rank `d` whose two
/// composites are multiplication by `W`. The stored `W` is already shifted by
/// the ring's base point `w0`. Rank 0 is the zero object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    w: Poly,
    p1: PolyMatrix,
    p0: PolyMatrix,
}

impl MatrixFactorization {
    /// Validates `(p1, p0)` against `W − w0`, where `w0` comes from the ring.
    pub fn new(w: &Poly, p1: PolyMatrix, p0: PolyMatrix) -> Result<Self, MfError> {
        let w0 = Poly::constant(w.ring(), w.ring().w0().clone());
        Self::from_shifted(w.try_sub(&w0)?, p1, p0)
    }

    /// Like [`MatrixFactorization::new`] but `w` is taken as already shifted.
    pub fn from_shifted(w: Poly, p1: PolyMatrix, p0: PolyMatrix) -> Result<Self, MfError> {
        if w.is_zero() {
            return Err(MfError::ZeroSuperpotential);
        }
        if !p1.is_square() || !p0.is_square() || p1.rows() != p0.rows() {
            return Err(MfError::ShapeMismatch(format!(
                "p1 is {:?} and p0 is {:?}; both must be square of equal rank",
                p1.shape(),
                p0.shape()
            )));
        }
        if p1.ring() != w.ring() || p0.ring() != w.ring() {
            return Err(MfError::Poly(crate::polyring::PolyError::ContextMismatch));
        }
        let x = MatrixFactorization { w, p1, p0 };
        x.validate()?;
        Ok(x)
    }

    pub(crate) fn new_unchecked(w: Poly, p1: PolyMatrix, p0: PolyMatrix) -> Self {
        debug_assert!(p1.shape() == p0.shape());
        MatrixFactorization { w, p1, p0 }
    }

    /// Re-checks `p0·p1 = p1·p0 = W·I`, naming the first offending entry.
    pub fn validate(&self) -> Result<(), MfError> {
        for (name, prod) in [("p0*p1", self.p0.try_mul(&self.p1)?), ("p1*p0", self.p1.try_mul(&self.p0)?)] {
            if let Some((row, col, found)) = prod.first_deviation_from_scalar(&self.w) {
                let expected = if row == col { self.w.to_string() } else { "0".into() };
                return Err(MfError::NotAFactorization { product: name, row, col, found: found.to_string(), expected });
            }
        }
        Ok(())
    }

    /// The rank-0 factorization.
    pub fn zero_object(w: &Poly) -> Self {
        let ring = w.ring();
        MatrixFactorization::new_unchecked(w.clone(), PolyMatrix::zero(ring, 0, 0), PolyMatrix::zero(ring, 0, 0))
    }

    /// `(1, W)`, isomorphic to zero in the homotopy category.
    pub fn contractible(w: &Poly) -> Self {
        let ring = w.ring();
        MatrixFactorization::new_unchecked(w.clone(), PolyMatrix::identity(ring, 1), PolyMatrix::scalar(ring, 1, w))
    }

    pub fn ring(&self) -> &Ring {
        self.w.ring()
    }

    /// The shifted superpotential `W − w0`.
    pub fn w(&self) -> &Poly {
        &self.w
    }

    /// `W` before the shift, as written in files.
    pub fn unshifted_w(&self) -> Poly {
        &self.w + &Poly::constant(self.ring(), self.ring().w0().clone())
    }

    pub fn rank(&self) -> usize {
        self.p1.rows()
    }

    pub fn p1(&self) -> &PolyMatrix {
        &self.p1
    }

    pub fn p0(&self) -> &PolyMatrix {
        &self.p0
    }

    /// `X[1] = (−p0, −p1)`: the two modules swap places.
    pub fn shift(&self) -> Self {
        MatrixFactorization::new_unchecked(self.w.clone(), self.p0.neg(), self.p1.neg())
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, MfError> {
        if self.w != other.w {
            return Err(MfError::SuperpotentialMismatch);
        }
        Ok(MatrixFactorization::new_unchecked(
            self.w.clone(),
            PolyMatrix::diag_sum(&self.p1, &other.p1)?,
            PolyMatrix::diag_sum(&self.p0, &other.p0)?,
        ))
    }

    pub fn direct_sum_all(w: &Poly, parts: &[Self]) -> Result<Self, MfError> {
        parts.iter().try_fold(Self::zero_object(w), |acc, x| acc.direct_sum(x))
    }

    /// Knörrer's functor: tensor with the rank-1 factorization `(x, y)` of `xy`.
    ///
    /// The result lives over the ring extended by `x`, `y` and factors
    /// `W + x·y` with `k1 = [[p1, −y], [x, p0]]`, `k0 = [[p0, y], [−x, p1]]`.
    /// Weights extend so that `wt(x) + wt(y) = wt(W)`; for odd `wt(W)` all
    /// weights are doubled first.
    pub fn knorrer(&self, xvar: &str, yvar: &str) -> Result<Self, MfError> {
        let ring = knorrer_ring(self.ring(), &self.w, xvar, yvar)?;
        self.knorrer_in(&ring)
    }

    /// Knörrer's functor into a ring previously produced for the same `W`.
    pub fn knorrer_in(&self, ring: &Ring) -> Result<Self, MfError> {
        let n = self.ring().nvars();
        let x = Poly::var_power(ring, n, 1);
        let y = Poly::var_power(ring, n + 1, 1);
        let d = self.rank();
        let p1 = self.p1.embed(ring)?;
        let p0 = self.p0.embed(ring)?;
        let xi = PolyMatrix::scalar(ring, d, &x);
        let yi = PolyMatrix::scalar(ring, d, &y);
        let k1 = PolyMatrix::block_or_empty(ring, &[vec![&p1, &yi.neg()], vec![&xi, &p0]])?;
        let k0 = PolyMatrix::block_or_empty(ring, &[vec![&p0, &yi], vec![&xi.neg(), &p1]])?;
        let w = self.w.embed(ring)?.try_add(&(&x * &y))?;
        Ok(MatrixFactorization::new_unchecked(w, k1, k0))
    }
}

/// The ring `k[vars, x, y]` used by [`MatrixFactorization::knorrer`].
pub fn knorrer_ring(base: &Ring, w: &Poly, xvar: &str, yvar: &str) -> Result<Ring, MfError> {
    for v in [xvar, yvar] {
        if base.var_index(v).is_ok() {
            return Err(MfError::VariableCollision(v.to_string()));
        }
    }
    if xvar == yvar {
        return Err(MfError::VariableCollision(yvar.to_string()));
    }
    let weights = match (base.weights(), w.weighted_degree()) {
        (Some(ws), Ok(Some(d))) => {
            let d = d as u32;
            let mut ws = ws.to_vec();
            if d.is_multiple_of(2) {
                ws.extend([d / 2, d / 2]);
            } else {
                ws.iter_mut().for_each(|v| *v *= 2);
                ws.extend([d, d]);
            }
            Some(ws)
        }
        _ => None,
    };
    let ctx: RingContext = base.extend(&[xvar, yvar], weights)?;
    Ok(ctx.build())
}

impl fmt::Display for MatrixFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "W = {}", self.w)?;
        writeln!(f, "p1 =\n{}", self.p1)?;
        write!(f, "p0 =\n{}", self.p0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Field;

    fn zring() -> Ring {
        RingContext::univariate(Field::Rational, "z")
    }

    fn mf(r: &Ring, w: &str, p1: &str, p0: &str) -> Result<MatrixFactorization, MfError> {
        MatrixFactorization::new(
            &Poly::parse(w, r).unwrap(),
            PolyMatrix::parse(r, &[vec![p1]]).unwrap(),
            PolyMatrix::parse(r, &[vec![p0]]).unwrap(),
        )
    }

    #[test]
    fn constructor_accepts_and_rejects() {
        let r = zring();
        assert!(mf(&r, "z^5", "z^2", "z^3").is_ok());
        assert!(mf(&r, "z^2 - 1", "z - 1", "z + 1").is_ok());
        match mf(&r, "z^3", "z", "z") {
            Err(MfError::NotAFactorization { row: 0, col: 0, found, .. }) => assert_eq!(found, "z^2"),
            other => panic!("{other:?}"),
        }
        assert_eq!(mf(&r, "0", "0", "0"), Err(MfError::ZeroSuperpotential));
    }

    #[test]
    fn shift_swaps_and_negates() {
        let r = zring();
        let x = mf(&r, "z^5", "z^2", "z^3").unwrap();
        let s = x.shift();
        assert_eq!(s.p1().get(0, 0).to_string(), "-z^3");
        assert_eq!(s.p0().get(0, 0).to_string(), "-z^2");
        assert_eq!(s.shift(), x);
    }

    #[test]
    fn knorrer_block_product() {
        let r = zring();
        let x = mf(&r, "z^5", "z^2", "z^3").unwrap();
        let k = x.knorrer("x", "y").unwrap();
        assert_eq!(k.rank(), 2);
        k.validate().unwrap();
        assert_eq!(k.w().to_string(), "z^5 + x*y");
        assert_eq!(k.ring().weights(), Some(&[2, 5, 5][..]));
        assert_eq!(x.knorrer("z", "y"), Err(MfError::VariableCollision("z".into())));
    }

    #[test]
    fn knorrer_even_degree_weights() {
        let r = zring();
        let x = mf(&r, "z^4", "z", "z^3").unwrap();
        let k = x.knorrer("x", "y").unwrap();
        assert_eq!(k.ring().weights(), Some(&[1, 2, 2][..]));
        assert_eq!(k.w().weighted_degree().unwrap(), Some(4));
    }

    #[test]
    fn zero_object_sums() {
        let r = zring();
        let x = mf(&r, "z^3", "z", "z^2").unwrap();
        let zero = MatrixFactorization::zero_object(x.w());
        assert_eq!(zero.direct_sum(&x).unwrap(), x);
        zero.validate().unwrap();
        assert_eq!(x.direct_sum(&x).unwrap().rank(), 2);
    }
}
