//! Mapping cones and exact triangles.

use super::hom::hom_representatives;
use super::iso::{find_inverse, IsoWitness};
use super::solver::{combine, HomotopySystem};
use super::{find_null_homotopy, Homotopy, HomotopyOutcome, MatrixFactorization, MfError, MfMorphism, SearchPolicy};
use crate::polyring::PolyMatrix;

/// `P --f--> Q --g--> C(f) --h--> P[1]` with `g = (id, 0)`, `h = (0, −id)`.
#[derive(Clone, Debug)]
pub struct StandardTriangle {
    pub f: MfMorphism,
    pub cone: MatrixFactorization,
    pub g: MfMorphism,
    pub h: MfMorphism,
}

impl StandardTriangle {
    /// The cone of `f: P → Q` has `C1 = Q1 ⊕ P0`, `C0 = Q0 ⊕ P1` and
    /// `c1 = [[q1, f0], [0, −p0]]`, `c0 = [[q0, f1], [0, −p1]]`.
    pub fn of(f: &MfMorphism) -> Result<Self, MfError> {
        let (p, q) = (f.source(), f.target());
        let ring = p.ring();
        let (m, n) = (q.rank(), p.rank());
        let z_pq = PolyMatrix::zero(ring, n, m);
        let c1 = PolyMatrix::block_or_empty(ring, &[vec![q.p1(), f.f0()], vec![&z_pq, &p.p0().neg()]])?;
        let c0 = PolyMatrix::block_or_empty(ring, &[vec![q.p0(), f.f1()], vec![&z_pq, &p.p1().neg()]])?;
        let cone = MatrixFactorization::new_unchecked(p.w().clone(), c1, c0);
        let incl = PolyMatrix::vstack(&PolyMatrix::identity(ring, m), &PolyMatrix::zero(ring, n, m))?;
        let g = MfMorphism::new_unchecked(q, &cone, incl.clone(), incl);
        let proj = PolyMatrix::hstack(&PolyMatrix::zero(ring, n, m), &PolyMatrix::identity(ring, n).neg())?;
        let h = MfMorphism::new_unchecked(&cone, &p.shift(), proj.clone(), proj);
        Ok(StandardTriangle { f: f.clone(), cone, g, h })
    }

    /// Re-validates the cone and both structure maps.
    pub fn validate(&self) -> Result<(), MfError> {
        self.cone.validate()?;
        self.g.validate()?;
        self.h.validate()
    }

    /// Null-homotopies of `g∘f`, `h∘g` and `f[1]∘h`, in that order.
    pub fn composites_vanish(&self, policy: &SearchPolicy) -> Result<[HomotopyOutcome; 3], MfError> {
        Ok([
            find_null_homotopy(&self.g.compose(&self.f)?, policy)?,
            find_null_homotopy(&self.h.compose(&self.g)?, policy)?,
            find_null_homotopy(&self.f.shift().compose(&self.h)?, policy)?,
        ])
    }
}

/// A candidate triangle `X --f--> Y --g--> T --h--> X[1]` together with an
/// isomorphism `c: T → C(f)` of triangles `(id, id, c)` onto the standard one.
#[derive(Clone, Debug)]
pub struct TriangleWitness {
    pub f: MfMorphism,
    pub g: MfMorphism,
    pub h: MfMorphism,
    pub standard: StandardTriangle,
    /// `c∘g − g_std = D(square_g)`.
    pub square_g: Homotopy,
    /// `h_std∘c − h = D(square_h)`.
    pub square_h: Homotopy,
    /// `c` with its inverse.
    pub iso: IsoWitness,
}

impl TriangleWitness {
    pub fn verify(&self) -> Result<(), MfError> {
        self.standard.validate()?;
        self.iso.verify()?;
        let c = &self.iso.u;
        self.square_g.check(&c.compose(&self.g)?.try_sub(&self.standard.g)?)?;
        self.square_h.check(&self.standard.h.compose(c)?.try_sub(&self.h)?)
    }
}

#[derive(Clone, Debug)]
pub enum TriangleOutcome {
    Certified(Box<TriangleWitness>),
    /// No `c` makes both squares commute up to homotopy. Certified in graded
    /// mode.
    NoComparisonMap,
    /// A comparison map exists but no inverse was found.
    NotInvertible,
}

impl TriangleOutcome {
    pub fn witness(&self) -> Option<&TriangleWitness> {
        match self {
            TriangleOutcome::Certified(w) => Some(w),
            _ => None,
        }
    }
}

/// Certifies that `X → Y → T → X[1]` is isomorphic, with identities on `X`
/// and `Y`, to the standard triangle of `f`.
///
/// Finding `c` is one linear system over a basis of `Hom(T, C(f))` plus two
/// homotopies. Any such `c` is an isomorphism when the candidate is exact; the
/// inverse is searched and checked explicitly.
pub fn certify_triangle(
    f: &MfMorphism,
    g: &MfMorphism,
    h: &MfMorphism,
    policy: &SearchPolicy,
) -> Result<TriangleOutcome, MfError> {
    f.validate()?;
    g.validate()?;
    h.validate()?;
    if g.source() != f.target() || h.source() != g.target() || *h.target() != f.source().shift() {
        return Err(MfError::ShapeMismatch("maps do not form a triangle X -> Y -> T -> X[1]".into()));
    }
    let std = StandardTriangle::of(f)?;
    let t = g.target();
    let reps: Vec<MfMorphism> = hom_representatives(t, &std.cone, policy)?.into_iter().map(|(_, r)| r).collect();
    let mut sys = HomotopySystem::new(t.ring(), policy, reps.len());
    let via_g = reps.iter().enumerate().map(|(i, r)| Ok((i, r.compose(g)?))).collect::<Result<Vec<_>, MfError>>()?;
    sys.add(f.target(), &std.cone, &via_g, &std.g)?;
    let via_h =
        reps.iter().enumerate().map(|(i, r)| Ok((i, std.h.compose(r)?))).collect::<Result<Vec<_>, MfError>>()?;
    sys.add(t, &f.source().shift(), &via_h, h)?;
    let Some((sol, homotopies)) = sys.solve() else {
        return Ok(TriangleOutcome::NoComparisonMap);
    };
    let c = combine(t, &std.cone, &sol[..reps.len()], &reps)?;
    let back = hom_representatives(&std.cone, t, policy)?;
    let Some(iso) = find_inverse(&c, &back, policy)? else {
        return Ok(TriangleOutcome::NotInvertible);
    };
    Ok(TriangleOutcome::Certified(Box::new(TriangleWitness {
        f: f.clone(),
        g: g.clone(),
        h: h.clone(),
        standard: std,
        square_g: homotopies[0].clone(),
        square_h: homotopies[1].clone(),
        iso,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mfcat::is_iso_in_db;
    use crate::polyring::{Field, Poly, RingContext};

    fn cat(n: u32, mu: u32) -> MatrixFactorization {
        let r = RingContext::univariate(Field::Rational, "z");
        let z = |e| PolyMatrix::scalar(&r, 1, &Poly::var_power(&r, 0, e));
        MatrixFactorization::new(&Poly::var_power(&r, 0, n), z(mu), z(n - mu)).unwrap()
    }

    fn zmat(x: &MatrixFactorization, e: u32) -> PolyMatrix {
        PolyMatrix::scalar(x.ring(), 1, &Poly::var_power(x.ring(), 0, e))
    }

    #[test]
    fn cone_shapes_and_validity() {
        let (x1, x2) = (cat(5, 1), cat(5, 2));
        let f = MfMorphism::new(&x1, &x2, zmat(&x1, 0), zmat(&x1, 1)).unwrap();
        let st = StandardTriangle::of(&f).unwrap();
        st.validate().unwrap();
        assert_eq!(st.cone.rank(), 2);
        for out in st.composites_vanish(&SearchPolicy::default()).unwrap() {
            assert!(out.is_found());
        }
    }

    #[test]
    fn cone_of_zero_is_sum() {
        let (x1, x2) = (cat(5, 1), cat(5, 2));
        let st = StandardTriangle::of(&MfMorphism::zero(&x1, &x2)).unwrap();
        assert_eq!(st.cone, x2.direct_sum(&x1.shift()).unwrap());
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let x = cat(2, 1);
        let st = StandardTriangle::of(&MfMorphism::identity(&x)).unwrap();
        let id = MfMorphism::identity(&st.cone);
        assert!(find_null_homotopy(&id, &SearchPolicy::default()).unwrap().is_found());
    }

    #[test]
    fn standard_triangle_certifies_itself() {
        let (x1, x2) = (cat(4, 1), cat(4, 2));
        let f = MfMorphism::new(&x1, &x2, zmat(&x1, 0), zmat(&x1, 1)).unwrap();
        let st = StandardTriangle::of(&f).unwrap();
        let out = certify_triangle(&f, &st.g, &st.h, &SearchPolicy::default()).unwrap();
        out.witness().unwrap().verify().unwrap();
    }

    #[test]
    fn rotation_cone_of_g_is_shift() {
        let (x1, x2) = (cat(5, 1), cat(5, 2));
        let f = MfMorphism::new(&x1, &x2, zmat(&x1, 0), zmat(&x1, 1)).unwrap();
        let st = StandardTriangle::of(&f).unwrap();
        let rot = StandardTriangle::of(&st.g).unwrap();
        let out = is_iso_in_db(&rot.cone, &x1.shift(), &SearchPolicy::default()).unwrap();
        out.witness().unwrap().verify().unwrap();
    }
}
