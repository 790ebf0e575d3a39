//! Null-homotopy search as exact linear algebra over the ground field.

use super::ansatz::{LinMatrix, LinSystem};
use super::grading::{block_monomials, homogeneous_components, Grading, HomOffsets};
use super::{Homotopy, MatrixFactorization, MfError, MfMorphism};
use crate::polyring::Monomial;

/// How far a search looks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchPolicy {
    /// Ansatz entries of total degree at most the bound; `None` picks the
    /// default (largest entry degree of the data plus `deg W`). Never proves
    /// nonexistence.
    Bounded(Option<u32>),
    /// Degree-by-degree over a quasi-homogeneous grading; exact. `window` is
    /// the number of trailing populated degrees that must contribute nothing
    /// before a Hom-dimension sum stops.
    Graded { window: usize },
}

impl Default for SearchPolicy {
    fn default() -> Self {
        SearchPolicy::Graded { window: 3 }
    }
}

impl SearchPolicy {
    pub fn check(&self) -> Result<(), MfError> {
        match self {
            SearchPolicy::Graded { window: 0 } => {
                Err(MfError::PolicyInfeasible("stale window must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomotopyOutcome {
    Found(Homotopy),
    /// Nothing within the degree bound; says nothing beyond it.
    NoneUpToBound {
        bound: u32,
    },
    /// Certified: the homogeneous component in one of these degrees has no
    /// null-homotopy at all.
    ProvenNone {
        degrees: Vec<i64>,
    },
}

impl HomotopyOutcome {
    pub fn found(&self) -> Option<&Homotopy> {
        match self {
            HomotopyOutcome::Found(h) => Some(h),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        self.found().is_some()
    }
}

/// Default degree bound for `f`: the largest entry degree among the
/// structure maps and `f`, plus `deg W`.
pub fn default_bound(f: &MfMorphism) -> u32 {
    let mats = [f.source().p1(), f.source().p0(), f.target().p1(), f.target().p0(), f.f1(), f.f0()];
    let m = mats.iter().filter_map(|m| m.max_degree()).max().unwrap_or(0);
    (m + f.source().w().total_degree().unwrap_or(0)) as u32
}

/// `D(s, t)` for linear unknowns `(s, t)`, as the pair `(f1, f0)`.
pub(crate) fn boundary_lin(
    p: &MatrixFactorization,
    q: &MatrixFactorization,
    s: &LinMatrix,
    t: &LinMatrix,
) -> (LinMatrix, LinMatrix) {
    let f1 = LinMatrix::left_mul(q.p0(), t).add(&LinMatrix::right_mul(s, p.p1()));
    let f0 = LinMatrix::right_mul(t, p.p0()).add(&LinMatrix::left_mul(q.p1(), s));
    (f1, f0)
}

/// Solves `D(s, t) = f` with `s`, `t` drawn from the given monomial slots.
pub(crate) fn solve_with_slots(
    f: &MfMorphism,
    s_monos: &[Vec<Vec<Monomial>>],
    t_monos: &[Vec<Vec<Monomial>>],
) -> Option<Homotopy> {
    let ring = f.ring();
    let mut next = 0;
    let s = LinMatrix::unknowns(ring, s_monos, &mut next);
    let t = LinMatrix::unknowns(ring, t_monos, &mut next);
    let (d1, d0) = boundary_lin(f.source(), f.target(), &s, &t);
    let mut sys = LinSystem::new(ring.field(), next);
    sys.equate(&d1, Some(f.f1()));
    sys.equate(&d0, Some(f.f0()));
    let sol = sys.solve()?;
    Some(Homotopy { s: s.instantiate(ring, &sol), t: t.instantiate(ring, &sol) })
}

fn uniform(rows: usize, cols: usize, monos: &[Monomial]) -> Vec<Vec<Vec<Monomial>>> {
    vec![vec![monos.to_vec(); cols]; rows]
}

/// Looks for `(s, t)` with `D(s, t) = f`.
pub fn find_null_homotopy(f: &MfMorphism, policy: &SearchPolicy) -> Result<HomotopyOutcome, MfError> {
    policy.check()?;
    let (rows, cols) = (f.target().rank(), f.source().rank());
    if f.is_zero() {
        return Ok(HomotopyOutcome::Found(Homotopy::zero(f.source(), f.target())));
    }
    match policy {
        SearchPolicy::Bounded(bound) => {
            let bound = bound.unwrap_or_else(|| default_bound(f));
            for b in 0..=bound {
                let monos = f.ring().monomials_up_to_degree(b);
                let slots = uniform(rows, cols, &monos);
                if let Some(h) = solve_with_slots(f, &slots, &slots) {
                    return Ok(HomotopyOutcome::Found(h));
                }
            }
            Ok(HomotopyOutcome::NoneUpToBound { bound })
        }
        SearchPolicy::Graded { .. } => {
            let gp = Grading::infer(f.source())?;
            let gq = Grading::infer(f.target())?;
            graded_null_homotopy(f, &gp, &gq)
        }
    }
}

/// Graded search with precomputed gradings; each homogeneous component is
/// decided on its own.
pub(crate) fn graded_null_homotopy(f: &MfMorphism, gp: &Grading, gq: &Grading) -> Result<HomotopyOutcome, MfError> {
    let offs = HomOffsets::new(gp, gq);
    let ring = f.ring();
    let mut total = Homotopy::zero(f.source(), f.target());
    let mut failed = Vec::new();
    for (e, part) in homogeneous_components(f, gp, gq)? {
        let s_monos = block_monomials(ring, &offs.s, e)?;
        let t_monos = block_monomials(ring, &offs.t, e)?;
        match solve_with_slots(&part, &s_monos, &t_monos) {
            Some(h) => total = total.try_add(&h)?,
            None => failed.push(e),
        }
    }
    if failed.is_empty() {
        Ok(HomotopyOutcome::Found(total))
    } else {
        Ok(HomotopyOutcome::ProvenNone { degrees: failed })
    }
}

/// Decides `f ≃ g` by searching a null-homotopy of `f − g`.
pub fn homotopy_equal(f: &MfMorphism, g: &MfMorphism, policy: &SearchPolicy) -> Result<HomotopyOutcome, MfError> {
    find_null_homotopy(&f.try_sub(g)?, policy)
}

/// Convenience: a null-homotopy with entries in `monos`, for callers that
/// already know a small ansatz suffices.
pub fn null_homotopy_with_monomials(f: &MfMorphism, monos: &[Monomial]) -> Option<Homotopy> {
    let slots = uniform(f.target().rank(), f.source().rank(), monos);
    solve_with_slots(f, &slots, &slots)
}
