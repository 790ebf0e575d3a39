//! Smith normal form over `k[z]`.

use super::QmError;
use crate::polyring::{Poly, PolyError, PolyMatrix, Ring};

/// `U·A·V = D` with `D` diagonal, each diagonal entry monic (or zero) and
/// dividing the next. `u_inv` is kept alongside `u` so that elements of the
/// cokernel can be lifted back without inverting a polynomial matrix.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: PolyMatrix,
    pub u_inv: PolyMatrix,
    pub v: PolyMatrix,
    pub diagonal: Vec<Poly>,
}

struct Work {
    a: Vec<Vec<Poly>>,
    u: Vec<Vec<Poly>>,
    u_inv: Vec<Vec<Poly>>,
    v: Vec<Vec<Poly>>,
}

fn identity(ring: &Ring, n: usize) -> Vec<Vec<Poly>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Poly::one(ring) } else { Poly::zero(ring) }).collect()).collect()
}

fn to_matrix(ring: &Ring, rows: usize, cols: usize, m: Vec<Vec<Poly>>) -> PolyMatrix {
    PolyMatrix::from_fn(ring, rows, cols, |i, j| m[i][j].clone())
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in &mut self.u_inv {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// `row_i += q·row_j` on `A` and `U`; `U⁻¹` picks up `col_j −= q·col_i`.
    fn add_row(&mut self, i: usize, j: usize, q: &Poly) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (dst, s) in m[i].iter_mut().zip(&src) {
                *dst = &*dst + &(q * s);
            }
        }
        for row in &mut self.u_inv {
            row[j] = &row[j] - &(q * &row[i]);
        }
    }

    /// `col_i += q·col_j` on `A` and `V`.
    fn add_col(&mut self, i: usize, j: usize, q: &Poly) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row[i] = &row[i] + &(q * &row[j]);
        }
    }
}

pub fn smith_normal_form(a: &PolyMatrix) -> Result<SmithForm, QmError> {
    let ring = a.ring();
    if ring.nvars() != 1 {
        return Err(QmError::NotUnivariate);
    }
    let (r, c) = a.shape();
    let mut w = Work {
        a: (0..r).map(|i| a.row_vec(i)).collect(),
        u: identity(ring, r),
        u_inv: identity(ring, r),
        v: identity(ring, c),
    };
    let mut diagonal = Vec::new();
    for t in 0..r.min(c) {
        loop {
            // Pivot on a nonzero entry of least degree, first in row-major order.
            let mut best: Option<(u32, usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if let Some(d) = w.a[i][j].degree() {
                        if best.is_none_or(|(bd, _, _)| d < bd) {
                            best = Some((d, i, j));
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                break;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let pivot = w.a[t][t].clone();
            let mut clean = true;
            for i in t + 1..r {
                if w.a[i][t].is_zero() {
                    continue;
                }
                let (q, rem) = w.a[i][t].div_rem(&pivot)?;
                w.add_row(i, t, &-&q);
                clean &= rem.is_zero();
            }
            for j in t + 1..c {
                if w.a[t][j].is_zero() {
                    continue;
                }
                let (q, rem) = w.a[t][j].div_rem(&pivot)?;
                w.add_col(j, t, &-&q);
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }
            // Pivot must divide the remaining block; otherwise pull in a row.
            let mut bad = None;
            'scan: for i in t + 1..r {
                for j in t + 1..c {
                    if !pivot.divides(&w.a[i][j])? {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => w.add_row(t, i, &Poly::one(ring)),
                None => break,
            }
        }
        let d = w.a[t][t].clone();
        if let Some(lc) = d.leading_coefficient() {
            let inv = lc.inverse().ok_or(PolyError::DivisionByZero)?;
            for x in w.a[t].iter_mut().chain(w.u[t].iter_mut()) {
                *x = x.scale(&inv);
            }
            for row in &mut w.u_inv {
                row[t] = row[t].scale(&lc);
            }
        }
        diagonal.push(w.a[t][t].clone());
    }
    Ok(SmithForm {
        u: to_matrix(ring, r, r, w.u),
        u_inv: to_matrix(ring, r, r, w.u_inv),
        v: to_matrix(ring, c, c, w.v),
        diagonal,
    })
}

impl SmithForm {
    /// Rebuilds `D` as a matrix of the original shape.
    pub fn d(&self, ring: &Ring) -> PolyMatrix {
        let (r, c) = (self.u.rows(), self.v.rows());
        PolyMatrix::from_fn(ring, r, c, |i, j| if i == j { self.diagonal[i].clone() } else { Poly::zero(ring) })
    }
}
