use super::{MatrixFactorization, MfError};
use crate::polyring::{FieldElem, Poly, PolyMatrix, Ring};

/// A morphism of pairs: `f1: P1 → Q1`, `f0: P0 → Q0` with
/// `f1·p0 = q0·f0` and `q1·f1 = f0·p1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MfMorphism {
    source: MatrixFactorization,
    target: MatrixFactorization,
    f1: PolyMatrix,
    f0: PolyMatrix,
}

/// A null-homotopy `(s, t)` with `s: P0 → Q1`, `t: P1 → Q0`, witnessing
/// `f1 = q0·t + s·p1` and `f0 = t·p0 + q1·s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy {
    pub s: PolyMatrix,
    pub t: PolyMatrix,
}

fn check_shape(m: &PolyMatrix, rows: usize, cols: usize, name: &str) -> Result<(), MfError> {
    if m.shape() != (rows, cols) {
        return Err(MfError::ShapeMismatch(format!("{name} is {:?}, expected {:?}", m.shape(), (rows, cols))));
    }
    Ok(())
}

impl MfMorphism {
    pub fn new(
        source: &MatrixFactorization,
        target: &MatrixFactorization,
        f1: PolyMatrix,
        f0: PolyMatrix,
    ) -> Result<Self, MfError> {
        if source.w() != target.w() {
            return Err(MfError::SuperpotentialMismatch);
        }
        check_shape(&f1, target.rank(), source.rank(), "f1")?;
        check_shape(&f0, target.rank(), source.rank(), "f0")?;
        let f = MfMorphism { source: source.clone(), target: target.clone(), f1, f0 };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        source: &MatrixFactorization,
        target: &MatrixFactorization,
        f1: PolyMatrix,
        f0: PolyMatrix,
    ) -> Self {
        MfMorphism { source: source.clone(), target: target.clone(), f1, f0 }
    }

    pub fn validate(&self) -> Result<(), MfError> {
        let (p, q) = (&self.source, &self.target);
        let lhs = self.f1.try_mul(p.p0())?;
        let rhs = q.p0().try_mul(&self.f0)?;
        if let Some((row, col)) = lhs.first_difference(&rhs) {
            return Err(MfError::NotAMorphism { identity: "f1*p0 = q0*f0", row, col });
        }
        let lhs = q.p1().try_mul(&self.f1)?;
        let rhs = self.f0.try_mul(p.p1())?;
        if let Some((row, col)) = lhs.first_difference(&rhs) {
            return Err(MfError::NotAMorphism { identity: "q1*f1 = f0*p1", row, col });
        }
        Ok(())
    }

    pub fn identity(x: &MatrixFactorization) -> Self {
        let i = PolyMatrix::identity(x.ring(), x.rank());
        MfMorphism::new_unchecked(x, x, i.clone(), i)
    }

    pub fn zero(source: &MatrixFactorization, target: &MatrixFactorization) -> Self {
        let z = PolyMatrix::zero(source.ring(), target.rank(), source.rank());
        MfMorphism::new_unchecked(source, target, z.clone(), z)
    }

    /// Multiplication by a polynomial, an endomorphism of any factorization.
    pub fn multiplication(x: &MatrixFactorization, p: &Poly) -> Self {
        let m = PolyMatrix::scalar(x.ring(), x.rank(), p);
        MfMorphism::new_unchecked(x, x, m.clone(), m)
    }

    pub fn source(&self) -> &MatrixFactorization {
        &self.source
    }

    pub fn target(&self) -> &MatrixFactorization {
        &self.target
    }

    pub fn f1(&self) -> &PolyMatrix {
        &self.f1
    }

    pub fn f0(&self) -> &PolyMatrix {
        &self.f0
    }

    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f0.is_zero()
    }

    /// `self ∘ before`.
    pub fn compose(&self, before: &MfMorphism) -> Result<Self, MfError> {
        if before.target != self.source {
            return Err(MfError::ShapeMismatch("composition of non-composable morphisms".into()));
        }
        Ok(MfMorphism::new_unchecked(
            &before.source,
            &self.target,
            self.f1.try_mul(&before.f1)?,
            self.f0.try_mul(&before.f0)?,
        ))
    }

    fn check_parallel(&self, other: &MfMorphism) -> Result<(), MfError> {
        if self.source != other.source || self.target != other.target {
            return Err(MfError::ShapeMismatch("morphisms are not parallel".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MfMorphism) -> Result<Self, MfError> {
        self.check_parallel(other)?;
        Ok(MfMorphism::new_unchecked(
            &self.source,
            &self.target,
            self.f1.try_add(&other.f1)?,
            self.f0.try_add(&other.f0)?,
        ))
    }

    pub fn try_sub(&self, other: &MfMorphism) -> Result<Self, MfError> {
        self.check_parallel(other)?;
        Ok(MfMorphism::new_unchecked(
            &self.source,
            &self.target,
            self.f1.try_sub(&other.f1)?,
            self.f0.try_sub(&other.f0)?,
        ))
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        let p = Poly::constant(self.ring(), c.clone());
        MfMorphism::new_unchecked(&self.source, &self.target, self.f1.scale(&p), self.f0.scale(&p))
    }

    pub fn neg(&self) -> Self {
        MfMorphism::new_unchecked(&self.source, &self.target, self.f1.neg(), self.f0.neg())
    }

    /// `f[1] = (f0, f1)` between the shifted factorizations, with no sign.
    pub fn shift(&self) -> Self {
        MfMorphism::new_unchecked(&self.source.shift(), &self.target.shift(), self.f0.clone(), self.f1.clone())
    }

    /// Knörrer's functor on morphisms: `(diag(f1, f0), diag(f0, f1))`.
    pub fn knorrer_in(&self, ring: &Ring) -> Result<Self, MfError> {
        let f1 = self.f1.embed(ring)?;
        let f0 = self.f0.embed(ring)?;
        Ok(MfMorphism::new_unchecked(
            &self.source.knorrer_in(ring)?,
            &self.target.knorrer_in(ring)?,
            PolyMatrix::diag_sum(&f1, &f0)?,
            PolyMatrix::diag_sum(&f0, &f1)?,
        ))
    }
}

impl Homotopy {
    pub fn zero(source: &MatrixFactorization, target: &MatrixFactorization) -> Self {
        let z = PolyMatrix::zero(source.ring(), target.rank(), source.rank());
        Homotopy { s: z.clone(), t: z }
    }

    /// The explicit null-homotopy of multiplication by `∂W/∂x_i`:
    /// `(s, t) = (∂p0, ∂p1)`, from differentiating `p0·p1 = W·I`.
    pub fn derivative_witness(x: &MatrixFactorization, var: usize) -> Self {
        Homotopy { s: x.p0().derivative_at(var), t: x.p1().derivative_at(var) }
    }

    /// The morphism `D(s, t) = (q0·t + s·p1, t·p0 + q1·s)`.
    pub fn boundary(&self, source: &MatrixFactorization, target: &MatrixFactorization) -> Result<MfMorphism, MfError> {
        check_shape(&self.s, target.rank(), source.rank(), "s")?;
        check_shape(&self.t, target.rank(), source.rank(), "t")?;
        let f1 = target.p0().try_mul(&self.t)?.try_add(&self.s.try_mul(source.p1())?)?;
        let f0 = self.t.try_mul(source.p0())?.try_add(&target.p1().try_mul(&self.s)?)?;
        Ok(MfMorphism::new_unchecked(source, target, f1, f0))
    }

    /// Checks both homotopy identities for `f`, naming the first failure.
    pub fn check(&self, f: &MfMorphism) -> Result<(), MfError> {
        let d = self.boundary(f.source(), f.target())?;
        if let Some((row, col)) = d.f1.first_difference(&f.f1) {
            return Err(MfError::NotAHomotopy { identity: "f1 = q0*t + s*p1", row, col });
        }
        if let Some((row, col)) = d.f0.first_difference(&f.f0) {
            return Err(MfError::NotAHomotopy { identity: "f0 = t*p0 + q1*s", row, col });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Homotopy) -> Result<Self, MfError> {
        Ok(Homotopy { s: self.s.try_add(&other.s)?, t: self.t.try_add(&other.t)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, RingContext};

    fn setup(n: u32, mu: u32) -> MatrixFactorization {
        let r = RingContext::univariate(Field::Rational, "z");
        MatrixFactorization::new(
            &Poly::var_power(&r, 0, n),
            PolyMatrix::scalar(&r, 1, &Poly::var_power(&r, 0, mu)),
            PolyMatrix::scalar(&r, 1, &Poly::var_power(&r, 0, n - mu)),
        )
        .unwrap()
    }

    fn scalar(x: &MatrixFactorization, e: u32) -> PolyMatrix {
        PolyMatrix::scalar(x.ring(), 1, &Poly::var_power(x.ring(), 0, e))
    }

    #[test]
    fn projection_and_injection_validate() {
        let (x3, x1) = (setup(5, 3), setup(5, 1));
        MfMorphism::new(&x3, &x1, scalar(&x3, 2), scalar(&x3, 0)).unwrap();
        MfMorphism::new(&x1, &x3, scalar(&x3, 0), scalar(&x3, 2)).unwrap();
    }

    #[test]
    fn bad_morphism_names_identity() {
        let (x3, x1) = (setup(5, 3), setup(5, 1));
        let zero = PolyMatrix::zero(x3.ring(), 1, 1);
        let err = MfMorphism::new(&x3, &x1, scalar(&x3, 0), zero).unwrap_err();
        assert!(matches!(err, MfError::NotAMorphism { identity: "f1*p0 = q0*f0", .. }), "{err}");
    }

    #[test]
    fn derivative_witness_is_a_homotopy() {
        let x = setup(5, 2);
        let dw = x.w().derivative_at(0);
        let f = MfMorphism::multiplication(&x, &dw);
        Homotopy::derivative_witness(&x, 0).check(&f).unwrap();
    }

    #[test]
    fn shift_is_an_involution_on_morphisms() {
        let (x3, x1) = (setup(5, 3), setup(5, 1));
        let f = MfMorphism::new(&x3, &x1, scalar(&x3, 2), scalar(&x3, 0)).unwrap();
        f.shift().validate().unwrap();
        assert_eq!(f.shift().shift(), f);
    }
}
