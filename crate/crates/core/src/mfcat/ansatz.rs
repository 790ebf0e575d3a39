//! Polynomial matrices whose entries are linear in unknown scalars.
//!
//! An entry `Σ_u c_u · poly_u` is stored as a map from unknown index to
//! `poly_u`. Products with known matrices stay linear, and an identity
//! `lin = known` flattens into one scalar equation per (entry, monomial).

use std::collections::{BTreeMap, BTreeSet};

use crate::polyring::{Field, FieldElem, Mat, Monomial, Poly, PolyMatrix, Ring};

pub(crate) type LinEntry = BTreeMap<usize, Poly>;

#[derive(Clone, Debug)]
pub(crate) struct LinMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<LinEntry>,
}

fn add_into(entry: &mut LinEntry, u: usize, p: Poly) {
    if p.is_zero() {
        return;
    }
    match entry.remove(&u) {
        Some(old) => {
            let s = &old + &p;
            if !s.is_zero() {
                entry.insert(u, s);
            }
        }
        None => {
            entry.insert(u, p);
        }
    }
}

impl LinMatrix {
    pub fn zero(rows: usize, cols: usize) -> LinMatrix {
        LinMatrix { rows, cols, entries: vec![LinEntry::new(); rows * cols] }
    }

    /// Fresh unknowns: entry `[i][j]` is a general combination of
    /// `monomials[i][j]`, one unknown per monomial, numbered from `*next`.
    pub fn unknowns(ring: &Ring, monomials: &[Vec<Vec<Monomial>>], next: &mut usize) -> LinMatrix {
        let rows = monomials.len();
        let cols = monomials.first().map_or(0, Vec::len);
        let mut m = LinMatrix::zero(rows, cols);
        let one = ring.field().one();
        for (i, row) in monomials.iter().enumerate() {
            for (j, monos) in row.iter().enumerate() {
                for mono in monos {
                    m.entries[i * cols + j].insert(*next, Poly::monomial(ring, mono.clone(), one.clone()));
                    *next += 1;
                }
            }
        }
        m
    }

    /// The known matrix `k` scaled by the single unknown `u`.
    pub fn from_known(k: &PolyMatrix, u: usize) -> LinMatrix {
        let mut m = LinMatrix::zero(k.rows(), k.cols());
        for i in 0..k.rows() {
            for j in 0..k.cols() {
                add_into(&mut m.entries[i * k.cols() + j], u, k.get(i, j).clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &LinEntry {
        &self.entries[i * self.cols + j]
    }

    /// `known · self`.
    pub fn left_mul(known: &PolyMatrix, lin: &LinMatrix) -> LinMatrix {
        assert_eq!(known.cols(), lin.rows);
        let mut out = LinMatrix::zero(known.rows(), lin.cols);
        for i in 0..known.rows() {
            for k in 0..known.cols() {
                let a = known.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..lin.cols {
                    for (&u, p) in lin.get(k, j) {
                        add_into(&mut out.entries[i * lin.cols + j], u, a * p);
                    }
                }
            }
        }
        out
    }

    /// `self · known`.
    pub fn right_mul(lin: &LinMatrix, known: &PolyMatrix) -> LinMatrix {
        assert_eq!(lin.cols, known.rows());
        let mut out = LinMatrix::zero(lin.rows, known.cols());
        for i in 0..lin.rows {
            for k in 0..lin.cols {
                for (&u, p) in lin.get(i, k) {
                    for j in 0..known.cols() {
                        let b = known.get(k, j);
                        if !b.is_zero() {
                            add_into(&mut out.entries[i * known.cols() + j], u, p * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &LinMatrix) -> LinMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            for (&u, p) in o {
                add_into(e, u, p.clone());
            }
        }
        out
    }

    pub fn neg(&self) -> LinMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            for p in e.values_mut() {
                *p = -&*p;
            }
        }
        out
    }

    pub fn sub(&self, other: &LinMatrix) -> LinMatrix {
        self.add(&other.neg())
    }

    /// Substitutes values for the unknowns.
    pub fn instantiate(&self, ring: &Ring, values: &[FieldElem]) -> PolyMatrix {
        PolyMatrix::from_fn(ring, self.rows, self.cols, |i, j| {
            let mut acc = Poly::zero(ring);
            for (&u, p) in self.get(i, j) {
                if !values[u].is_zero() {
                    acc = &acc + &p.scale(&values[u]);
                }
            }
            acc
        })
    }
}

/// Accumulates scalar equations `Σ a_u c_u = b` over a fixed set of unknowns.
pub(crate) struct LinSystem {
    field: Field,
    nunknowns: usize,
    rows: Vec<(BTreeMap<usize, FieldElem>, FieldElem)>,
}

impl LinSystem {
    pub fn new(field: &Field, nunknowns: usize) -> LinSystem {
        LinSystem { field: field.clone(), nunknowns, rows: Vec::new() }
    }

    /// Adds the equations `lin = known` entrywise and monomialwise. A `None`
    /// right-hand side means zero.
    pub fn equate(&mut self, lin: &LinMatrix, known: Option<&PolyMatrix>) {
        for i in 0..lin.rows {
            for j in 0..lin.cols {
                let entry = lin.get(i, j);
                let rhs = known.map(|k| k.get(i, j));
                let mut monos: BTreeSet<&Monomial> = entry.values().flat_map(|p| p.terms().keys()).collect();
                if let Some(r) = rhs {
                    monos.extend(r.terms().keys());
                }
                for m in monos {
                    let mut row = BTreeMap::new();
                    for (&u, p) in entry {
                        let c = p.coeff(m);
                        if !c.is_zero() {
                            row.insert(u, c);
                        }
                    }
                    let b = rhs.map_or_else(|| self.field.zero(), |r| r.coeff(m));
                    if !row.is_empty() || !b.is_zero() {
                        self.rows.push((row, b));
                    }
                }
            }
        }
    }

    fn matrix(&self) -> Mat {
        let mut a = Mat::zeros(&self.field, self.rows.len(), self.nunknowns);
        for (i, (row, _)) in self.rows.iter().enumerate() {
            for (&u, c) in row {
                a.set(i, u, c.clone());
            }
        }
        a
    }

    /// One solution with free unknowns set to zero.
    pub fn solve(&self) -> Option<Vec<FieldElem>> {
        if self.nunknowns == 0 {
            return self.rows.iter().all(|(_, b)| b.is_zero()).then(Vec::new);
        }
        let b: Vec<FieldElem> = self.rows.iter().map(|(_, b)| b.clone()).collect();
        if b.is_empty() {
            return Some(vec![self.field.zero(); self.nunknowns]);
        }
        self.matrix().solve(&b)
    }

    /// Basis of solutions of the homogeneous system.
    pub fn nullspace(&self) -> Vec<Vec<FieldElem>> {
        if self.rows.is_empty() {
            return (0..self.nunknowns)
                .map(|u| {
                    let mut v = vec![self.field.zero(); self.nunknowns];
                    v[u] = self.field.one();
                    v
                })
                .collect();
        }
        self.matrix().nullspace()
    }
}

/// Coordinates of a known polynomial matrix against a list of monomial
/// slots, used to turn matrices into vectors.
pub(crate) fn coordinates(m: &PolyMatrix, monomials: &[Vec<Vec<Monomial>>]) -> Vec<FieldElem> {
    let mut out = Vec::new();
    for (i, row) in monomials.iter().enumerate() {
        for (j, monos) in row.iter().enumerate() {
            let p = m.get(i, j);
            out.extend(monos.iter().map(|mono| p.coeff(mono)));
        }
    }
    out
}

/// Inverse of [`coordinates`].
pub(crate) fn from_coordinates(ring: &Ring, monomials: &[Vec<Vec<Monomial>>], v: &[FieldElem]) -> PolyMatrix {
    let rows = monomials.len();
    let cols = monomials.first().map_or(0, Vec::len);
    let mut it = v.iter();
    let mut out = PolyMatrix::zero(ring, rows, cols);
    for (i, row) in monomials.iter().enumerate() {
        for (j, monos) in row.iter().enumerate() {
            let mut p = Poly::zero(ring);
            for mono in monos {
                let c = it.next().expect("coordinate vector too short");
                if !c.is_zero() {
                    p = &p + &Poly::monomial(ring, mono.clone(), c.clone());
                }
            }
            out.set(i, j, p);
        }
    }
    out
}

pub(crate) fn slot_count(monomials: &[Vec<Vec<Monomial>>]) -> usize {
    monomials.iter().flatten().map(Vec::len).sum()
}
