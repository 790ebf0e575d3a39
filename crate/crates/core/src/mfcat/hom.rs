//! Hom spaces in the homotopy category: degree-0 cohomology of the Hom complex.

use super::ansatz::{coordinates, from_coordinates, slot_count, LinMatrix, LinSystem};
use super::grading::{block_monomials, superpotential_degree, Grading, HomOffsets};
use super::{Homotopy, MatrixFactorization, MfError, MfMorphism, SearchPolicy};
use crate::polyring::linalg::EchelonBasis;
use crate::polyring::{Field, FieldElem, Monomial, Poly, PolyMatrix, Ring};

type Slots = Vec<Vec<Vec<Monomial>>>;

/// The result of a graded Hom computation.
#[derive(Clone, Debug)]
pub struct GradedHom {
    /// Total dimension of `Hom(X, Y)` in the homotopy category.
    pub dim: usize,
    /// `(degree, dimension)` for every degree that contributed.
    pub by_degree: Vec<(i64, usize)>,
    /// Every degree examined, in order; the certificate of the computation.
    pub examined: Vec<i64>,
    /// Homogeneous cocycles whose classes form a basis.
    pub representatives: Vec<(i64, MfMorphism)>,
}

/// Cycles of the even part with entries in the given slots.
fn cycles(x: &MatrixFactorization, y: &MatrixFactorization, f1s: &Slots, f0s: &Slots) -> Vec<Vec<FieldElem>> {
    let ring = x.ring();
    let mut next = 0;
    let f1 = LinMatrix::unknowns(ring, f1s, &mut next);
    let f0 = LinMatrix::unknowns(ring, f0s, &mut next);
    let mut sys = LinSystem::new(ring.field(), next);
    sys.equate(&LinMatrix::left_mul(y.p1(), &f1).sub(&LinMatrix::right_mul(&f0, x.p1())), None);
    sys.equate(&LinMatrix::left_mul(y.p0(), &f0).sub(&LinMatrix::right_mul(&f1, x.p0())), None);
    sys.nullspace()
}

/// Images under `D` of the unit homotopies supported on the given slots,
/// as coordinate vectors against `(f1s, f0s)`.
fn boundaries(
    x: &MatrixFactorization,
    y: &MatrixFactorization,
    ss: &Slots,
    ts: &Slots,
    f1s: &Slots,
    f0s: &Slots,
) -> Result<Vec<Vec<FieldElem>>, MfError> {
    let ring = x.ring();
    let one = ring.field().one();
    let (rows, cols) = (y.rank(), x.rank());
    let mut out = Vec::new();
    for (which, slots) in [(0, ss), (1, ts)] {
        for (i, row) in slots.iter().enumerate() {
            for (j, monos) in row.iter().enumerate() {
                for m in monos {
                    let mut unit = PolyMatrix::zero(ring, rows, cols);
                    unit.set(i, j, Poly::monomial(ring, m.clone(), one.clone()));
                    let zero = PolyMatrix::zero(ring, rows, cols);
                    let h = if which == 0 { Homotopy { s: unit, t: zero } } else { Homotopy { s: zero, t: unit } };
                    let d = h.boundary(x, y)?;
                    let mut v = coordinates(d.f1(), f1s);
                    v.extend(coordinates(d.f0(), f0s));
                    out.push(v);
                }
            }
        }
    }
    Ok(out)
}

/// Indices of cycle vectors independent modulo the span of `bounds`.
fn independent_mod(field: &Field, len: usize, bounds: &[Vec<FieldElem>], cycles: &[Vec<FieldElem>]) -> Vec<usize> {
    let mut basis = EchelonBasis::new(field, len);
    for b in bounds {
        basis.insert(b);
    }
    cycles.iter().enumerate().filter(|(_, z)| basis.insert(z)).map(|(i, _)| i).collect()
}

fn split_vector(ring: &Ring, f1s: &Slots, f0s: &Slots, v: &[FieldElem]) -> (PolyMatrix, PolyMatrix) {
    let n1 = slot_count(f1s);
    (from_coordinates(ring, f1s, &v[..n1]), from_coordinates(ring, f0s, &v[n1..]))
}

/// Computes `Hom(X, Y)` degree by degree over quasi-homogeneous data.
///
/// Degrees are scanned upwards from the first one carrying any even cochain.
/// The scan stops once it is past the degree where every entry is populated
/// plus `deg W`, and the last `window` populated degrees contributed nothing.
pub fn graded_hom(x: &MatrixFactorization, y: &MatrixFactorization, window: usize) -> Result<GradedHom, MfError> {
    if x.w() != y.w() {
        return Err(MfError::SuperpotentialMismatch);
    }
    SearchPolicy::Graded { window }.check()?;
    let gx = Grading::infer(x)?;
    let gy = Grading::infer(y)?;
    graded_hom_with(x, y, &gx, &gy, window)
}

pub(crate) fn graded_hom_with(
    x: &MatrixFactorization,
    y: &MatrixFactorization,
    gx: &Grading,
    gy: &Grading,
    window: usize,
) -> Result<GradedHom, MfError> {
    let ring = x.ring();
    let d = superpotential_degree(x.w())?;
    let mut out = GradedHom { dim: 0, by_degree: Vec::new(), examined: Vec::new(), representatives: Vec::new() };
    if x.rank() == 0 || y.rank() == 0 {
        return Ok(out);
    }
    let offs = HomOffsets::new(gx, gy);
    let start = offs.first_even_degree();
    let settled = offs.all_even_degree() + d;
    let mut quiet = 0usize;
    let mut e = start;
    loop {
        let f1s = block_monomials(ring, &offs.f1, e)?;
        let f0s = block_monomials(ring, &offs.f0, e)?;
        let len = slot_count(&f1s) + slot_count(&f0s);
        if len > 0 {
            out.examined.push(e);
            let zs = cycles(x, y, &f1s, &f0s);
            let ss = block_monomials(ring, &offs.s, e)?;
            let ts = block_monomials(ring, &offs.t, e)?;
            let bs = boundaries(x, y, &ss, &ts, &f1s, &f0s)?;
            let reps = independent_mod(ring.field(), len, &bs, &zs);
            if reps.is_empty() {
                quiet += 1;
            } else {
                quiet = 0;
                out.dim += reps.len();
                out.by_degree.push((e, reps.len()));
                for i in reps {
                    let (f1, f0) = split_vector(ring, &f1s, &f0s, &zs[i]);
                    out.representatives.push((e, MfMorphism::new_unchecked(x, y, f1, f0)));
                }
            }
        }
        if e >= settled && quiet >= window {
            return Ok(out);
        }
        e += 1;
    }
}

/// Dimension of `Hom(X, Y)` in the homotopy category.
pub fn graded_stable_hom_dim(
    x: &MatrixFactorization,
    y: &MatrixFactorization,
    policy: &SearchPolicy,
) -> Result<usize, MfError> {
    match policy {
        SearchPolicy::Graded { window } => Ok(graded_hom(x, y, *window)?.dim),
        SearchPolicy::Bounded(_) => {
            Err(MfError::PolicyInfeasible("graded Hom dimension needs the graded policy".into()))
        }
    }
}

/// Uncertified estimate of `dim Hom(X, Y)` from cycles of total degree at
/// most `bound`, modulo boundaries of homotopies of degree at most `bound`.
/// Returns the estimate and representatives.
pub fn hom_estimate_bounded(
    x: &MatrixFactorization,
    y: &MatrixFactorization,
    bound: u32,
) -> Result<(usize, Vec<MfMorphism>), MfError> {
    if x.w() != y.w() {
        return Err(MfError::SuperpotentialMismatch);
    }
    let ring = x.ring();
    let (rows, cols) = (y.rank(), x.rank());
    if rows == 0 || cols == 0 {
        return Ok((0, Vec::new()));
    }
    let c = [x.p1(), x.p0(), y.p1(), y.p0()].iter().filter_map(|m| m.max_degree()).max().unwrap_or(0) as u32;
    let low = vec![vec![ring.monomials_up_to_degree(bound); cols]; rows];
    let wide = vec![vec![ring.monomials_up_to_degree(bound + c); cols]; rows];
    let zs: Vec<Vec<FieldElem>> = cycles(x, y, &low, &low)
        .into_iter()
        .map(|v| {
            let (f1, f0) = split_vector(ring, &low, &low, &v);
            let mut w = coordinates(&f1, &wide);
            w.extend(coordinates(&f0, &wide));
            w
        })
        .collect();
    let bs = boundaries(x, y, &low, &low, &wide, &wide)?;
    let len = 2 * slot_count(&wide);
    let reps = independent_mod(ring.field(), len, &bs, &zs);
    let morphisms = reps
        .iter()
        .map(|&i| {
            let (f1, f0) = split_vector(ring, &wide, &wide, &zs[i]);
            MfMorphism::new_unchecked(x, y, f1, f0)
        })
        .collect();
    Ok((reps.len(), morphisms))
}

/// Ansatz degree used by bounded mode when none is given: the largest entry
/// degree of either factorization plus `deg W`.
pub fn default_hom_bound(x: &MatrixFactorization, y: &MatrixFactorization) -> u32 {
    let m = [x.p1(), x.p0(), y.p1(), y.p0()].iter().filter_map(|m| m.max_degree()).max().unwrap_or(0);
    (m + x.w().total_degree().unwrap_or(0)) as u32
}

/// Basis representatives of `Hom(X, Y)` under the given policy, each tagged
/// with its degree (0 in bounded mode).
pub fn hom_representatives(
    x: &MatrixFactorization,
    y: &MatrixFactorization,
    policy: &SearchPolicy,
) -> Result<Vec<(i64, MfMorphism)>, MfError> {
    match policy {
        SearchPolicy::Graded { window } => Ok(graded_hom(x, y, *window)?.representatives),
        SearchPolicy::Bounded(b) => {
            let bound = b.unwrap_or_else(|| default_hom_bound(x, y));
            Ok(hom_estimate_bounded(x, y, bound)?.1.into_iter().map(|f| (0, f)).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::RingContext;

    fn cat(n: u32, mu: u32) -> MatrixFactorization {
        let r = RingContext::univariate(Field::Rational, "z");
        let z = |e| PolyMatrix::scalar(&r, 1, &Poly::var_power(&r, 0, e));
        MatrixFactorization::new(&Poly::var_power(&r, 0, n), z(mu), z(n - mu)).unwrap()
    }

    #[test]
    fn endomorphisms_of_catalogue_objects() {
        for n in 2..=6 {
            for mu in 1..n {
                let x = cat(n, mu);
                let h = graded_hom(&x, &x, 3).unwrap();
                assert_eq!(h.dim as u32, mu.min(n - mu), "n={n} mu={mu}");
                for (_, f) in &h.representatives {
                    f.validate().unwrap();
                }
            }
        }
    }

    #[test]
    fn hom_into_contractible_is_zero() {
        let x = cat(5, 2);
        let c = MatrixFactorization::contractible(x.w());
        assert_eq!(graded_stable_hom_dim(&x, &c, &SearchPolicy::default()).unwrap(), 0);
        assert_eq!(graded_stable_hom_dim(&c, &x, &SearchPolicy::default()).unwrap(), 0);
    }

    #[test]
    fn a2_off_diagonal() {
        assert_eq!(graded_stable_hom_dim(&cat(3, 1), &cat(3, 2), &SearchPolicy::default()).unwrap(), 1);
    }

    #[test]
    fn bounded_estimate_agrees_on_small_cases() {
        for mu in 1..5 {
            let x = cat(5, mu);
            assert_eq!(hom_estimate_bounded(&x, &x, 6).unwrap().0 as u32, mu.min(5 - mu));
        }
    }
}
