//! The functor `Cok: X ↦ coker(p1)` from factorizations of a one-variable
//! superpotential to modules over `k[z]/(W)`.

use super::smith::{smith_normal_form, SmithForm};
use super::{companion, ModuleMorphism, QmError, QuotModule};
use crate::mfcat::{MatrixFactorization, MfMorphism};
use crate::polyring::{FieldElem, Mat, Poly, PolyMatrix};

#[derive(Clone, Debug)]
struct Block {
    row: usize,
    d: Poly,
    offset: usize,
}

/// `coker(p1)` in the basis read off a Smith form of `p1`: block `i` is
/// `k[z]/(d_i)` with basis `1, z, …, z^{deg d_i − 1}`, sitting in `P0` as the
/// `i`-th column of `U⁻¹`.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub module: QuotModule,
    pub smith: SmithForm,
    blocks: Vec<Block>,
}

impl Cokernel {
    pub fn of(x: &MatrixFactorization) -> Result<Self, QmError> {
        if x.ring().nvars() != 1 {
            return Err(QmError::NotUnivariate);
        }
        let smith = smith_normal_form(x.p1())?;
        let mut blocks = Vec::new();
        let mut parts = Vec::new();
        let mut offset = 0;
        for (row, d) in smith.diagonal.iter().enumerate() {
            // det p1 divides W^r, so no diagonal entry vanishes.
            let deg = d.degree().expect("p1 is nonsingular") as usize;
            if deg == 0 {
                continue;
            }
            parts.push(companion(d)?);
            blocks.push(Block { row, d: d.clone(), offset });
            offset += deg;
        }
        let z = Mat::direct_sum(&parts, x.ring().field());
        Ok(Cokernel { module: QuotModule::new_unchecked(x.w(), z), smith, blocks })
    }

    /// Coordinates of the class of `v ∈ P0`.
    pub fn class_of(&self, v: &[Poly]) -> Result<Vec<FieldElem>, QmError> {
        let field = self.module.field();
        let mut out = vec![field.zero(); self.module.dim()];
        for b in &self.blocks {
            let mut y = Poly::zero(self.module.ring());
            for (k, vk) in v.iter().enumerate() {
                y = &y + &(self.smith.u.get(b.row, k) * vk);
            }
            let rem = y.div_rem(&b.d)?.1;
            for (j, c) in rem.coefficients()?.into_iter().enumerate() {
                out[b.offset + j] = c;
            }
        }
        Ok(out)
    }

    /// A preimage in `P0` of the `k`-th basis vector.
    pub fn lift(&self, k: usize) -> Vec<Poly> {
        let b = self.blocks.iter().rev().find(|b| b.offset <= k).expect("index in range");
        let zj = Poly::var_power(self.module.ring(), 0, (k - b.offset) as u32);
        let u_inv = &self.smith.u_inv;
        (0..u_inv.rows()).map(|i| u_inv.get(i, b.row) * &zj).collect()
    }

    /// The map `Cok(f)` induced by `f0`, between two precomputed cokernels.
    pub fn induced(&self, target: &Cokernel, f: &MfMorphism) -> Result<ModuleMorphism, QmError> {
        let field = self.module.field();
        let (m, n) = (target.module.dim(), self.module.dim());
        let mut mat = Mat::zeros(field, m, n);
        for k in 0..n {
            let v = apply(f.f0(), &self.lift(k));
            for (i, c) in target.class_of(&v)?.into_iter().enumerate() {
                mat.set(i, k, c);
            }
        }
        ModuleMorphism::new(&self.module, &target.module, mat)
    }
}

fn apply(a: &PolyMatrix, v: &[Poly]) -> Vec<Poly> {
    (0..a.rows())
        .map(|i| v.iter().enumerate().fold(Poly::zero(a.ring()), |acc, (j, vj)| &acc + &(a.get(i, j) * vj)))
        .collect()
}

pub fn cok(x: &MatrixFactorization) -> Result<QuotModule, QmError> {
    Ok(Cokernel::of(x)?.module)
}

pub fn cok_morphism(f: &MfMorphism) -> Result<ModuleMorphism, QmError> {
    Cokernel::of(f.source())?.induced(&Cokernel::of(f.target())?, f)
}

/// Ranks of `p̄1`, `p̄0` acting on `(k[z]/W)^r`. The 2-periodic sequence
/// `… → P̄1 → P̄0 → P̄1 → …` is exact iff `rank p̄1 + rank p̄0 = r·deg W`
/// and both composites vanish; `Cok(X)` then has dimension `r·deg W − rank p̄1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicResolution {
    pub total: usize,
    pub rank_p1: usize,
    pub rank_p0: usize,
    pub dim_cok: usize,
    pub composites_vanish: bool,
}

impl PeriodicResolution {
    pub fn of(x: &MatrixFactorization) -> Result<Self, QmError> {
        if x.ring().nvars() != 1 {
            return Err(QmError::NotUnivariate);
        }
        let c = companion(&x.w().monic())?;
        let n = c.rows();
        let r = x.rank();
        let field = x.ring().field();
        let reduce = |p: &PolyMatrix| -> Result<Mat, QmError> {
            let mut out = Mat::zeros(field, r * n, r * n);
            for i in 0..r {
                for j in 0..r {
                    let blk = p.get(i, j).evaluate_at_matrix(&c)?;
                    for a in 0..n {
                        for b in 0..n {
                            out.set(i * n + a, j * n + b, blk.get(a, b).clone());
                        }
                    }
                }
            }
            Ok(out)
        };
        let (p1, p0) = (reduce(x.p1())?, reduce(x.p0())?);
        Ok(PeriodicResolution {
            total: r * n,
            rank_p1: p1.rank(),
            rank_p0: p0.rank(),
            dim_cok: cok(x)?.dim(),
            composites_vanish: p1.mul(&p0).is_zero() && p0.mul(&p1).is_zero(),
        })
    }

    pub fn is_exact(&self) -> bool {
        self.composites_vanish && self.rank_p1 + self.rank_p0 == self.total && self.dim_cok + self.rank_p1 == self.total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mfcat::{find_null_homotopy, SearchPolicy};
    use crate::polyring::{Field, RingContext};
    use crate::quotmod::stable_hom;

    fn ring() -> crate::polyring::Ring {
        RingContext::univariate(Field::Rational, "z")
    }

    fn cat(n: u32, mu: u32) -> MatrixFactorization {
        let r = ring();
        let z = |e| PolyMatrix::scalar(&r, 1, &Poly::var_power(&r, 0, e));
        MatrixFactorization::new(&Poly::var_power(&r, 0, n), z(mu), z(n - mu)).unwrap()
    }

    #[test]
    fn catalogue_cokernels_are_jordan_blocks() {
        for mu in 1..5 {
            let m = cok(&cat(5, mu)).unwrap();
            assert_eq!(m.dim(), mu as usize);
            assert_eq!(m.decompose().unwrap(), [(mu as usize, 1)].into());
            assert!(PeriodicResolution::of(&cat(5, mu)).unwrap().is_exact());
        }
        assert_eq!(cok(&MatrixFactorization::contractible(cat(5, 1).w())).unwrap().dim(), 0);
    }

    #[test]
    fn stabilize_then_cok_round_trips() {
        let r = ring();
        let w = Poly::parse("z^3 - 3*z", &r).unwrap();
        let m = QuotModule::new(&w, Mat::from_i64(&Field::Rational, &[vec![0, 3], vec![1, 0]])).unwrap();
        let x = m.stabilize().unwrap();
        let back = cok(&x).unwrap();
        assert_eq!(back.dim(), 2);
        assert!(PeriodicResolution::of(&x).unwrap().is_exact());
        assert_eq!(stable_hom(&m, &back).unwrap().dim(), stable_hom(&m, &m).unwrap().dim());
    }

    #[test]
    fn induced_maps_respect_homotopy() {
        let (x2, x3) = (cat(5, 2), cat(5, 3));
        let zp = |e| PolyMatrix::scalar(&x2.ring().clone(), 1, &Poly::var_power(x2.ring(), 0, e));
        let f = MfMorphism::new(&x2, &x3, zp(0), zp(1)).unwrap();
        let cf = cok_morphism(&f).unwrap();
        assert_eq!(cf.f.rank(), 2);
        // z^2 · id on X_2 is null-homotopic; its cokernel map is stably zero.
        let g = MfMorphism::new(&x2, &x2, zp(2), zp(2)).unwrap();
        assert!(find_null_homotopy(&g, &SearchPolicy::default()).unwrap().is_found());
        let cg = cok_morphism(&g).unwrap();
        assert!(stable_hom(&cg.source, &cg.target).unwrap().is_stably_zero(&cg.f));
    }

    #[test]
    fn larger_rank_cokernel() {
        let r = ring();
        let w = Poly::var_power(&r, 0, 4);
        let p1 = PolyMatrix::parse(&r, &[vec!["z", "1"], vec!["0", "z"]]).unwrap();
        let p0 = PolyMatrix::parse(&r, &[vec!["z^3", "-z^2"], vec!["0", "z^3"]]).unwrap();
        let x = MatrixFactorization::new(&w, p1, p0).unwrap();
        let m = cok(&x).unwrap();
        assert_eq!(m.decompose().unwrap(), [(2, 1)].into());
        assert!(PeriodicResolution::of(&x).unwrap().is_exact());
    }
}
