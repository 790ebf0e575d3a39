use std::fmt;

use super::poly::{same_ring, Poly, Ring};
use super::PolyError;

/// A dense `rows × cols` matrix of polynomials over one ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![Poly::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> PolyMatrix {
        PolyMatrix::scalar(ring, n, &Poly::one(ring))
    }

    /// `p · I_n`.
    pub fn scalar(ring: &Ring, n: usize, p: &Poly) -> PolyMatrix {
        let mut m = PolyMatrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix, PolyError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(PolyError::ShapeMismatch { op: "from_rows", left: (r, c), right: (1, row.len()) });
            }
            for p in row {
                if !same_ring(p.ring(), ring) {
                    return Err(PolyError::ContextMismatch);
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: r, cols: c, entries })
    }

    /// Builds a matrix from polynomial strings.
    pub fn parse(ring: &Ring, rows: &[Vec<&str>]) -> Result<PolyMatrix, PolyError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| Poly::parse(s, ring)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        PolyMatrix::from_rows(ring, parsed)
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn row_vec(&self, i: usize) -> Vec<Poly> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Largest total degree among entries; `None` if all entries vanish.
    pub fn max_degree(&self) -> Option<u64> {
        self.entries.iter().filter_map(Poly::total_degree).max()
    }

    fn check(&self, other: &PolyMatrix, op: &'static str, same_shape: bool) -> Result<(), PolyError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(PolyError::ContextMismatch);
        }
        let ok = if same_shape { self.shape() == other.shape() } else { self.cols == other.rows };
        if !ok {
            return Err(PolyError::ShapeMismatch { op, left: self.shape(), right: other.shape() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        self.check(other, "add", true)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn try_sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        self.check(other, "sub", true)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        self.check(other, "mul", false)?;
        let mut out = PolyMatrix::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = &out.entries[i * other.cols + j] + &a.try_mul(b)?;
                        out.entries[i * other.cols + j] = v;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| -p)
    }

    pub fn scale(&self, p: &Poly) -> PolyMatrix {
        self.map(|e| e * p)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn derivative_at(&self, var: usize) -> PolyMatrix {
        self.map(|p| p.derivative_at(var))
    }

    pub fn embed(&self, ring: &Ring) -> Result<PolyMatrix, PolyError> {
        let entries = self.entries.iter().map(|p| p.embed(ring)).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix { ring: ring.clone(), rows: self.rows, cols: self.cols, entries })
    }

    /// Assembles a block matrix; blocks in a row share a height, blocks in a
    /// column share a width.
    pub fn block(blocks: &[Vec<&PolyMatrix>]) -> Result<PolyMatrix, PolyError> {
        let first = blocks.first().and_then(|r| r.first()).ok_or(PolyError::ShapeMismatch {
            op: "block",
            left: (0, 0),
            right: (0, 0),
        })?;
        let ring = first.ring.clone();
        let ncols_blocks = blocks[0].len();
        let heights: Vec<usize> = blocks.iter().map(|r| r[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        for (bi, row) in blocks.iter().enumerate() {
            if row.len() != ncols_blocks {
                return Err(PolyError::ShapeMismatch { op: "block", left: (bi, ncols_blocks), right: (bi, row.len()) });
            }
            for (bj, b) in row.iter().enumerate() {
                if !same_ring(&b.ring, &ring) {
                    return Err(PolyError::ContextMismatch);
                }
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(PolyError::ShapeMismatch {
                        op: "block",
                        left: (heights[bi], widths[bj]),
                        right: b.shape(),
                    });
                }
            }
        }
        let rows: usize = heights.iter().sum();
        let cols: usize = widths.iter().sum();
        let mut out = PolyMatrix::zero(&ring, rows, cols);
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    /// Block-diagonal sum `diag(a, b)`.
    pub fn diag_sum(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        let ring = a.ring.clone();
        let z12 = PolyMatrix::zero(&ring, a.rows, b.cols);
        let z21 = PolyMatrix::zero(&ring, b.rows, a.cols);
        PolyMatrix::block_or_empty(&ring, &[vec![a, &z12], vec![&z21, b]])
    }

    pub fn vstack(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        PolyMatrix::block_or_empty(&a.ring.clone(), &[vec![a], vec![b]])
    }

    pub fn hstack(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        PolyMatrix::block_or_empty(&a.ring.clone(), &[vec![a, b]])
    }

    /// Like [`PolyMatrix::block`] but tolerant of blocks with zero rows or columns.
    pub fn block_or_empty(ring: &Ring, blocks: &[Vec<&PolyMatrix>]) -> Result<PolyMatrix, PolyError> {
        let heights: Vec<usize> = blocks.iter().map(|r| r.iter().map(|b| b.rows).max().unwrap_or(0)).collect();
        let nb = blocks.first().map_or(0, Vec::len);
        let widths: Vec<usize> = (0..nb).map(|j| blocks.iter().map(|r| r[j].cols).max().unwrap_or(0)).collect();
        for (bi, row) in blocks.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                let empty = b.rows == 0 || b.cols == 0;
                if !empty && (b.rows != heights[bi] || b.cols != widths[bj]) {
                    return Err(PolyError::ShapeMismatch {
                        op: "block",
                        left: (heights[bi], widths[bj]),
                        right: b.shape(),
                    });
                }
                if !empty && !same_ring(&b.ring, ring) {
                    return Err(PolyError::ContextMismatch);
                }
            }
        }
        let mut out = PolyMatrix::zero(ring, heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                if b.rows == heights[bi] && b.cols == widths[bj] {
                    for i in 0..b.rows {
                        for j in 0..b.cols {
                            out.set(r0 + i, c0 + j, b.get(i, j).clone());
                        }
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    /// Submatrix of the given row and column ranges.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> PolyMatrix {
        let (r0, c0) = (rows.start, cols.start);
        PolyMatrix::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// First entry where `self` differs from `p · I`, as `(row, col, found)`.
    pub fn first_deviation_from_scalar(&self, p: &Poly) -> Option<(usize, usize, Poly)> {
        let zero = Poly::zero(&self.ring);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expected = if i == j { p } else { &zero };
                if self.get(i, j) != expected {
                    return Some((i, j, self.get(i, j).clone()));
                }
            }
        }
        None
    }

    /// First entry where two equally shaped matrices differ.
    pub fn first_difference(&self, other: &PolyMatrix) -> Option<(usize, usize)> {
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != other.get(i, j))
    }

    /// Determinant by cofactor expansion; meant for the small matrices of tests.
    pub fn determinant(&self) -> Result<Poly, PolyError> {
        if !self.is_square() {
            return Err(PolyError::ShapeMismatch { op: "determinant", left: self.shape(), right: self.shape() });
        }
        Ok(det_rec(self, &(0..self.rows).collect::<Vec<_>>(), 0))
    }

    pub fn rows_as_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row_vec(i).iter().map(ToString::to_string).collect()).collect()
    }
}

fn det_rec(m: &PolyMatrix, cols: &[usize], row: usize) -> Poly {
    if cols.is_empty() {
        return Poly::one(m.ring());
    }
    let mut acc = Poly::zero(m.ring());
    for (k, &c) in cols.iter().enumerate() {
        let a = m.get(row, c);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a * &det_rec(m, &rest, row + 1);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows_as_strings().iter().map(|r| format!("[{}]", r.join(", "))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
