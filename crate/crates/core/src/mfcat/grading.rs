//! Gradings of factorizations of a quasi-homogeneous superpotential.
//!
//! With positive variable weights and `W` of weighted degree `d`, a
//! factorization is graded when the basis of `P0` carries shifts `a_i` and the
//! basis of `P1` shifts `b_j` such that `p1[i][j]` is homogeneous of degree
//! `a_i − b_j` and `p0[j][i]` of degree `b_j − a_i + d`. The Hom complex then
//! splits by degree and each piece is finite-dimensional.

use std::collections::{BTreeMap, VecDeque};

use super::{MatrixFactorization, MfError, MfMorphism};
use crate::polyring::{Monomial, Poly, PolyMatrix, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    /// Shifts of the basis of `P0`.
    pub a: Vec<i64>,
    /// Shifts of the basis of `P1`.
    pub b: Vec<i64>,
    /// Weighted degree of `W`.
    pub d: i64,
}

/// Weighted degree of the superpotential, or why there is none.
pub fn superpotential_degree(w: &Poly) -> Result<i64, MfError> {
    match w.weighted_degree() {
        Err(_) => Err(MfError::PolicyInfeasible(
            "graded mode needs variable weights (declare `weights`, or use a bounded search)".into(),
        )),
        Ok(None) => Err(MfError::NonQuasiHomogeneous(format!("W = {w} is not quasi-homogeneous"))),
        Ok(Some(d)) => Ok(d as i64),
    }
}

fn entry_degree(p: &Poly, what: &str) -> Result<Option<i64>, MfError> {
    match p.weighted_degree()? {
        None if p.is_zero() => Ok(None),
        None => Err(MfError::NonQuasiHomogeneous(format!("{what} = {p} is not homogeneous"))),
        Some(d) => Ok(Some(d as i64)),
    }
}

impl Grading {
    /// Finds shifts making `x` graded, propagating along nonzero entries.
    pub fn infer(x: &MatrixFactorization) -> Result<Grading, MfError> {
        let d = superpotential_degree(x.w())?;
        let r = x.rank();
        // Nodes 0..r are P0 basis vectors, r..2r are P1 basis vectors; an
        // edge (u, v, δ) asks shift(u) − shift(v) = δ.
        let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); 2 * r];
        for i in 0..r {
            for j in 0..r {
                if let Some(delta) = entry_degree(x.p1().get(i, j), &format!("p1[{i}][{j}]"))? {
                    adj[i].push((r + j, delta));
                    adj[r + j].push((i, -delta));
                }
                if let Some(delta) = entry_degree(x.p0().get(j, i), &format!("p0[{j}][{i}]"))? {
                    adj[r + j].push((i, delta - d));
                    adj[i].push((r + j, d - delta));
                }
            }
        }
        let mut shift: Vec<Option<i64>> = vec![None; 2 * r];
        for start in 0..2 * r {
            if shift[start].is_some() {
                continue;
            }
            shift[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = shift[u].unwrap();
                for &(v, delta) in &adj[u] {
                    let want = su - delta;
                    match shift[v] {
                        None => {
                            shift[v] = Some(want);
                            queue.push_back(v);
                        }
                        Some(sv) if sv != want => {
                            return Err(MfError::NonQuasiHomogeneous(
                                "entry degrees admit no consistent grading".into(),
                            ))
                        }
                        _ => {}
                    }
                }
            }
        }
        let shift: Vec<i64> = shift.into_iter().map(Option::unwrap).collect();
        Ok(Grading { a: shift[..r].to_vec(), b: shift[r..].to_vec(), d })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }
}

/// The degree offsets of each block of `Hom(P, Q)`: a degree-`e` element has
/// entry `[k][l]` of weighted degree `offset[k][l] + e`.
#[derive(Clone, Debug)]
pub(crate) struct HomOffsets {
    pub f1: Vec<Vec<i64>>,
    pub f0: Vec<Vec<i64>>,
    pub s: Vec<Vec<i64>>,
    pub t: Vec<Vec<i64>>,
}

impl HomOffsets {
    pub fn new(gp: &Grading, gq: &Grading) -> HomOffsets {
        let table = |rows: &[i64], cols: &[i64], c: i64| -> Vec<Vec<i64>> {
            rows.iter().map(|&x| cols.iter().map(|&y| x - y + c).collect()).collect()
        };
        HomOffsets {
            f1: table(&gq.b, &gp.b, 0),
            f0: table(&gq.a, &gp.a, 0),
            s: table(&gq.b, &gp.a, 0),
            t: table(&gq.a, &gp.b, -gp.d),
        }
    }

    /// Range of `e` for which some even entry can be nonzero starts here.
    pub fn first_even_degree(&self) -> i64 {
        self.f1.iter().chain(&self.f0).flatten().map(|o| -o).min().unwrap_or(0)
    }

    /// From this degree on every even entry has nonnegative degree.
    pub fn all_even_degree(&self) -> i64 {
        self.f1.iter().chain(&self.f0).flatten().map(|o| -o).max().unwrap_or(0)
    }
}

/// Monomials allowed in each entry of a block at degree `e`.
pub(crate) fn block_monomials(ring: &Ring, offsets: &[Vec<i64>], e: i64) -> Result<Vec<Vec<Vec<Monomial>>>, MfError> {
    offsets.iter().map(|row| row.iter().map(|&o| Ok(ring.monomials_of_weighted_degree(o + e)?)).collect()).collect()
}

/// Splits a morphism of graded factorizations into homogeneous components.
pub fn homogeneous_components(
    f: &MfMorphism,
    gp: &Grading,
    gq: &Grading,
) -> Result<BTreeMap<i64, MfMorphism>, MfError> {
    let offs = HomOffsets::new(gp, gq);
    let ring = f.ring().clone();
    let (rows, cols) = f.f1().shape();
    let mut parts: BTreeMap<i64, (PolyMatrix, PolyMatrix)> = BTreeMap::new();
    for (which, m, off) in [(1, f.f1(), &offs.f1), (0, f.f0(), &offs.f0)] {
        for k in 0..rows {
            for l in 0..cols {
                for (mono, c) in m.get(k, l).terms() {
                    let e = ring.weighted_degree_of(mono)? as i64 - off[k][l];
                    let slot = parts
                        .entry(e)
                        .or_insert_with(|| (PolyMatrix::zero(&ring, rows, cols), PolyMatrix::zero(&ring, rows, cols)));
                    let target = if which == 1 { &mut slot.0 } else { &mut slot.1 };
                    let v = target.get(k, l) + &Poly::monomial(&ring, mono.clone(), c.clone());
                    target.set(k, l, v);
                }
            }
        }
    }
    Ok(parts.into_iter().map(|(e, (f1, f0))| (e, MfMorphism::new_unchecked(f.source(), f.target(), f1, f0))).collect())
}
