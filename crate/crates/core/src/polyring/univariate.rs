//! Euclidean-domain operations on polynomials of a one-variable ring.

use super::field::FieldElem;
use super::poly::{Monomial, Poly, Ring};
use super::PolyError;

impl Poly {
    fn require_univariate(&self) -> Result<(), PolyError> {
        if self.ring().nvars() == 1 {
            Ok(())
        } else {
            Err(PolyError::NotUnivariate)
        }
    }

    /// Degree in the single variable; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms().keys().next_back().map(|m| m.0.iter().sum())
    }

    pub fn leading_coefficient(&self) -> Option<FieldElem> {
        self.terms().values().next_back().cloned()
    }

    /// Coefficients `c_0, …, c_d` in ascending degree.
    pub fn coefficients(&self) -> Result<Vec<FieldElem>, PolyError> {
        self.require_univariate()?;
        let field = self.ring().field();
        let Some(d) = self.degree() else {
            return Ok(Vec::new());
        };
        let mut out = vec![field.zero(); d as usize + 1];
        for (m, c) in self.terms() {
            out[m.0[0] as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn from_coefficients(ring: &Ring, coeffs: &[FieldElem]) -> Poly {
        assert_eq!(ring.nvars(), 1);
        let mut p = Poly::zero(ring);
        for (i, c) in coeffs.iter().enumerate() {
            p = &p + &Poly::monomial(ring, Monomial(vec![i as u32]), c.clone());
        }
        p
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading_coefficient() {
            Some(lc) => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.require_univariate()?;
        divisor.require_univariate()?;
        let ring = self.ring();
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = divisor.leading_coefficient().unwrap().inverse().unwrap();
        let mut q = Poly::zero(ring);
        let mut r = self.try_add(&Poly::zero(ring))?;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = &r.leading_coefficient().unwrap() * &lc_inv;
            let t = Poly::monomial(ring, Monomial(vec![rd - dd]), c);
            q = &q + &t;
            r = &r - &(&t * divisor);
        }
        Ok((q, r))
    }

    pub fn divides(&self, other: &Poly) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        Ok(other.div_rem(self)?.1.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b)?.1;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Evaluates a univariate polynomial at a square matrix by Horner's rule.
    pub fn evaluate_at_matrix(&self, m: &super::linalg::Mat) -> Result<super::linalg::Mat, PolyError> {
        let coeffs = self.coefficients()?;
        let field = self.ring().field();
        let mut acc = super::linalg::Mat::zeros(field, m.rows(), m.cols());
        for c in coeffs.iter().rev() {
            acc = acc.mul(m).add(&super::linalg::Mat::identity(field, m.rows()).scale(c));
        }
        Ok(acc)
    }
}

/// Lagrange interpolation through `(x_i, y_i)` with distinct `x_i`.
pub fn interpolate(ring: &Ring, xs: &[FieldElem], ys: &[FieldElem]) -> Poly {
    assert_eq!(xs.len(), ys.len());
    let z = Poly::var_power(ring, 0, 1);
    let mut acc = Poly::zero(ring);
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = Poly::constant(ring, yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = (xi - xj).inverse().expect("distinct nodes");
            let lin = &z - &Poly::constant(ring, xj.clone());
            basis = (&basis * &lin).scale(&denom);
        }
        acc = &acc + &basis;
    }
    acc
}
