//! Linear problems of the form `Σ κ_i A_i − B = D(h)`.
//!
//! Several such identities may share the scalar unknowns `κ`; each identity
//! gets its own homotopy unknowns. In graded mode every homogeneous degree of
//! an identity gets a homogeneous homotopy, so the answer is exact.

use std::collections::BTreeMap;

use super::ansatz::{LinMatrix, LinSystem};
use super::grading::{block_monomials, homogeneous_components, Grading, HomOffsets};
use super::homotopy::{boundary_lin, default_bound};
use super::{Homotopy, MatrixFactorization, MfError, MfMorphism, SearchPolicy};
use crate::polyring::{FieldElem, PolyMatrix, Ring};

struct Piece {
    lin: (LinMatrix, LinMatrix),
    rhs: (PolyMatrix, PolyMatrix),
}

struct Equation {
    pieces: BTreeMap<i64, Piece>,
    homotopies: Vec<(LinMatrix, LinMatrix)>,
}

pub(crate) struct HomotopySystem {
    ring: Ring,
    policy: SearchPolicy,
    next: usize,
    equations: Vec<Equation>,
}

impl HomotopySystem {
    /// A system over `ncoeffs` shared scalar unknowns `κ_0..κ_{ncoeffs−1}`.
    pub fn new(ring: &Ring, policy: &SearchPolicy, ncoeffs: usize) -> Self {
        HomotopySystem { ring: ring.clone(), policy: *policy, next: ncoeffs, equations: Vec::new() }
    }

    /// Adds `Σ κ_i A_i − B = D(h)` for morphisms `P → Q`; returns its index.
    pub fn add(
        &mut self,
        p: &MatrixFactorization,
        q: &MatrixFactorization,
        terms: &[(usize, MfMorphism)],
        b: &MfMorphism,
    ) -> Result<usize, MfError> {
        let ring = self.ring.clone();
        let (rows, cols) = (q.rank(), p.rank());
        let mut pieces: BTreeMap<i64, Piece> = BTreeMap::new();
        let grading = match self.policy {
            SearchPolicy::Graded { .. } => Some((Grading::infer(p)?, Grading::infer(q)?)),
            SearchPolicy::Bounded(_) => None,
        };
        let split = |f: &MfMorphism| -> Result<Vec<(i64, MfMorphism)>, MfError> {
            match &grading {
                Some((gp, gq)) => Ok(homogeneous_components(f, gp, gq)?.into_iter().collect()),
                None => Ok(vec![(0, f.clone())]),
            }
        };
        for (i, a) in terms {
            for (e, part) in split(a)? {
                let slot = entry(&mut pieces, &ring, e, rows, cols);
                slot.lin.0 = slot.lin.0.add(&LinMatrix::from_known(part.f1(), *i));
                slot.lin.1 = slot.lin.1.add(&LinMatrix::from_known(part.f0(), *i));
            }
        }
        for (e, part) in split(b)? {
            let slot = entry(&mut pieces, &ring, e, rows, cols);
            slot.rhs.0 = slot.rhs.0.try_add(part.f1())?;
            slot.rhs.1 = slot.rhs.1.try_add(part.f0())?;
        }
        entry(&mut pieces, &ring, 0, rows, cols);
        let mut homotopies = Vec::new();
        match &grading {
            Some((gp, gq)) => {
                let offs = HomOffsets::new(gp, gq);
                for (&e, slot) in pieces.iter_mut() {
                    let s = LinMatrix::unknowns(&ring, &block_monomials(&ring, &offs.s, e)?, &mut self.next);
                    let t = LinMatrix::unknowns(&ring, &block_monomials(&ring, &offs.t, e)?, &mut self.next);
                    let (d1, d0) = boundary_lin(p, q, &s, &t);
                    slot.lin = (slot.lin.0.sub(&d1), slot.lin.1.sub(&d0));
                    homotopies.push((s, t));
                }
            }
            None => {
                let bound = match self.policy {
                    SearchPolicy::Bounded(Some(b)) => b,
                    _ => terms.iter().map(|(_, a)| a).chain(std::iter::once(b)).map(default_bound).max().unwrap_or(0),
                };
                let slots = vec![vec![ring.monomials_up_to_degree(bound); cols]; rows];
                let s = LinMatrix::unknowns(&ring, &slots, &mut self.next);
                let t = LinMatrix::unknowns(&ring, &slots, &mut self.next);
                let (d1, d0) = boundary_lin(p, q, &s, &t);
                let slot = entry(&mut pieces, &ring, 0, rows, cols);
                slot.lin = (slot.lin.0.sub(&d1), slot.lin.1.sub(&d0));
                homotopies.push((s, t));
            }
        }
        self.equations.push(Equation { pieces, homotopies });
        Ok(self.equations.len() - 1)
    }

    /// The scalar unknowns and one homotopy per identity, if solvable.
    pub fn solve(&self) -> Option<(Vec<FieldElem>, Vec<Homotopy>)> {
        let mut sys = LinSystem::new(self.ring.field(), self.next);
        for eq in &self.equations {
            for piece in eq.pieces.values() {
                sys.equate(&piece.lin.0, Some(&piece.rhs.0));
                sys.equate(&piece.lin.1, Some(&piece.rhs.1));
            }
        }
        let sol = sys.solve()?;
        let homotopies = self
            .equations
            .iter()
            .map(|eq| {
                let mut it = eq.homotopies.iter();
                let (s, t) = it.next().expect("every identity has a homotopy");
                let mut h = Homotopy { s: s.instantiate(&self.ring, &sol), t: t.instantiate(&self.ring, &sol) };
                for (s, t) in it {
                    h.s = h.s.try_add(&s.instantiate(&self.ring, &sol)).expect("same shape");
                    h.t = h.t.try_add(&t.instantiate(&self.ring, &sol)).expect("same shape");
                }
                h
            })
            .collect();
        Some((sol, homotopies))
    }
}

fn entry<'a>(pieces: &'a mut BTreeMap<i64, Piece>, ring: &Ring, e: i64, rows: usize, cols: usize) -> &'a mut Piece {
    pieces.entry(e).or_insert_with(|| Piece {
        lin: (LinMatrix::zero(rows, cols), LinMatrix::zero(rows, cols)),
        rhs: (PolyMatrix::zero(ring, rows, cols), PolyMatrix::zero(ring, rows, cols)),
    })
}

/// `Σ c_i f_i` for a list of parallel morphisms, or the zero morphism.
pub(crate) fn combine(
    source: &MatrixFactorization,
    target: &MatrixFactorization,
    coeffs: &[FieldElem],
    basis: &[MfMorphism],
) -> Result<MfMorphism, MfError> {
    let mut acc = MfMorphism::zero(source, target);
    for (c, f) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            acc = acc.try_add(&f.scale(c))?;
        }
    }
    Ok(acc)
}
