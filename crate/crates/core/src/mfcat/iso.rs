//! Isomorphism search in the homotopy category.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::grading::Grading;
use super::hom::{graded_hom_with, hom_representatives};
use super::solver::{combine, HomotopySystem};
use super::{find_null_homotopy, Homotopy, MatrixFactorization, MfError, MfMorphism, SearchPolicy};

/// `u: X → Y`, `v: Y → X` with homotopies `v∘u − id_X = D(vu)` and
/// `u∘v − id_Y = D(uv)`.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub u: MfMorphism,
    pub v: MfMorphism,
    pub vu: Homotopy,
    pub uv: Homotopy,
}

impl IsoWitness {
    /// Re-checks all four identities exactly.
    pub fn verify(&self) -> Result<(), MfError> {
        self.u.validate()?;
        self.v.validate()?;
        let id_x = MfMorphism::identity(self.u.source());
        let id_y = MfMorphism::identity(self.u.target());
        self.vu.check(&self.v.compose(&self.u)?.try_sub(&id_x)?)?;
        self.uv.check(&self.u.compose(&self.v)?.try_sub(&id_y)?)
    }
}

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Isomorphic(Box<IsoWitness>),
    /// Certified by exact Hom dimensions.
    NotIsomorphic {
        reason: String,
    },
    /// Search exhausted without a verdict.
    NotFound {
        attempts: usize,
    },
}

impl IsoOutcome {
    pub fn witness(&self) -> Option<&IsoWitness> {
        match self {
            IsoOutcome::Isomorphic(w) => Some(w),
            _ => None,
        }
    }
}

const ATTEMPTS: usize = 16;
const SEED: u64 = 0x6d66_6361_7431;

/// Given `u: X → Y`, looks for `v` among combinations of `reps` (a basis of
/// `Hom(Y, X)`) with `v∘u ≃ id_X`, then checks `u∘v ≃ id_Y`.
///
/// The first step is one linear system in the coefficients of `v` and of the
/// homotopy, so it is exact for the given policy.
pub fn find_inverse(
    u: &MfMorphism,
    reps: &[(i64, MfMorphism)],
    policy: &SearchPolicy,
) -> Result<Option<IsoWitness>, MfError> {
    let (x, y) = (u.source(), u.target());
    let mut sys = HomotopySystem::new(x.ring(), policy, reps.len());
    let terms =
        reps.iter().enumerate().map(|(i, (_, v))| Ok((i, v.compose(u)?))).collect::<Result<Vec<_>, MfError>>()?;
    sys.add(x, x, &terms, &MfMorphism::identity(x))?;
    let Some((sol, homotopies)) = sys.solve() else {
        return Ok(None);
    };
    let basis: Vec<MfMorphism> = reps.iter().map(|(_, v)| v.clone()).collect();
    let v = combine(y, x, &sol[..reps.len()], &basis)?;
    let uv_diff = u.compose(&v)?.try_sub(&MfMorphism::identity(y))?;
    match find_null_homotopy(&uv_diff, policy)?.found() {
        Some(uv) => Ok(Some(IsoWitness { u: u.clone(), v, vu: homotopies[0].clone(), uv: uv.clone() })),
        None => Ok(None),
    }
}

/// Decides whether `X ≅ Y` in the homotopy category.
///
/// In graded mode the four Hom dimensions between `X` and `Y` are compared
/// first; a mismatch is a certified negative. Candidates for `u` are the basis
/// representatives of `Hom(X, Y)` followed by seeded random combinations.
pub fn is_iso_in_db(
    x: &MatrixFactorization,
    y: &MatrixFactorization,
    policy: &SearchPolicy,
) -> Result<IsoOutcome, MfError> {
    policy.check()?;
    if x.w() != y.w() {
        return Err(MfError::SuperpotentialMismatch);
    }
    let (reps_xy, reps_yx) = match policy {
        SearchPolicy::Graded { window } => {
            let gx = Grading::infer(x)?;
            let gy = Grading::infer(y)?;
            let end_x = graded_hom_with(x, x, &gx, &gx, *window)?.dim;
            let end_y = graded_hom_with(y, y, &gy, &gy, *window)?.dim;
            let xy = graded_hom_with(x, y, &gx, &gy, *window)?;
            let yx = graded_hom_with(y, x, &gy, &gx, *window)?;
            let dims = [end_x, end_y, xy.dim, yx.dim];
            if dims.iter().any(|&d| d != end_x) {
                return Ok(IsoOutcome::NotIsomorphic {
                    reason: format!(
                        "dim End(X) = {end_x}, dim End(Y) = {end_y}, dim Hom(X,Y) = {}, dim Hom(Y,X) = {}",
                        xy.dim, yx.dim
                    ),
                });
            }
            (xy.representatives, yx.representatives)
        }
        SearchPolicy::Bounded(_) => (hom_representatives(x, y, policy)?, hom_representatives(y, x, policy)?),
    };
    let mut candidates: Vec<MfMorphism> = Vec::new();
    if reps_xy.is_empty() {
        candidates.push(MfMorphism::zero(x, y));
    } else {
        candidates.extend(reps_xy.iter().map(|(_, f)| f.clone()));
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let field = x.ring().field().clone();
        for _ in 0..ATTEMPTS {
            let mut u = MfMorphism::zero(x, y);
            for (_, r) in &reps_xy {
                let c = field.from_i64(rng.gen_range(-7..=7));
                u = u.try_add(&r.scale(&c))?;
            }
            candidates.push(u);
        }
    }
    let attempts = candidates.len();
    for u in candidates {
        if let Some(w) = find_inverse(&u, &reps_yx, policy)? {
            return Ok(IsoOutcome::Isomorphic(Box::new(w)));
        }
    }
    Ok(IsoOutcome::NotFound { attempts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, Poly, PolyMatrix, RingContext};

    fn cat(n: u32, mu: u32) -> MatrixFactorization {
        let r = RingContext::univariate(Field::Rational, "z");
        let z = |e| PolyMatrix::scalar(&r, 1, &Poly::var_power(&r, 0, e));
        MatrixFactorization::new(&Poly::var_power(&r, 0, n), z(mu), z(n - mu)).unwrap()
    }

    #[test]
    fn object_is_isomorphic_to_itself() {
        let x = cat(5, 2);
        let w = is_iso_in_db(&x, &x, &SearchPolicy::default()).unwrap();
        w.witness().unwrap().verify().unwrap();
    }

    #[test]
    fn contractible_summand_is_invisible() {
        let x = cat(5, 2);
        let big = x.direct_sum(&MatrixFactorization::contractible(x.w())).unwrap();
        let out = is_iso_in_db(&x, &big, &SearchPolicy::default()).unwrap();
        out.witness().unwrap().verify().unwrap();
    }

    #[test]
    fn distinct_depths_are_not_isomorphic() {
        let out = is_iso_in_db(&cat(5, 2), &cat(5, 1), &SearchPolicy::default()).unwrap();
        assert!(matches!(out, IsoOutcome::NotIsomorphic { .. }), "{out:?}");
    }

    #[test]
    fn complementary_objects_are_isomorphic_via_shift() {
        // (z^3, z^2) is the shift of (z^2, z^3) up to sign.
        let out = is_iso_in_db(&cat(5, 3), &cat(5, 2).shift(), &SearchPolicy::default()).unwrap();
        out.witness().unwrap().verify().unwrap();
    }
}
