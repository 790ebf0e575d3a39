//! Finite-dimensional modules over `A = k[z]/(W)` and the stable module
//! category: the side of the picture where factorizations become cokernels.

pub mod cok;
pub mod critical;
pub mod smith;
pub mod stable;

pub use cok::{cok, Cokernel, PeriodicResolution};
pub use critical::{critical_values, CriticalValues};
pub use smith::{smith_normal_form, SmithForm};
pub use stable::{hom_space, stable_hom, StableHomSpace};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::mfcat::{MatrixFactorization, MfError};
use crate::polyring::{Field, Mat, Poly, PolyError, PolyMatrix, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QmError {
    #[error("relation violated: W(Z) has nonzero entry [{row}][{col}]")]
    RelationViolated { row: usize, col: usize },
    #[error("superpotential must be a nonzero polynomial in one variable")]
    WrongArity,
    #[error("factorization is not over a one-variable ring")]
    NotUnivariate,
    #[error("modules over different superpotentials")]
    SuperpotentialMismatch,
    #[error("decomposition needs W = c*z^n")]
    NotNilpotentForm,
    #[error("superpotential is constant")]
    ConstantSuperpotential,
    #[error("critical values are computed over the rationals only")]
    NotRational,
    #[error("matrix does not intertwine the module structures")]
    NotIntertwining,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Mf(#[from] MfError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A module over `k[z]/(W)`: a vector space `k^m` with the action `Z` of `z`,
/// subject to `W(Z) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotModule {
    w: Poly,
    z: Mat,
}

impl QuotModule {
    pub fn new(w: &Poly, z: Mat) -> Result<Self, QmError> {
        if w.ring().nvars() != 1 || w.is_zero() {
            return Err(QmError::WrongArity);
        }
        if z.rows() != z.cols() {
            return Err(QmError::ShapeMismatch(format!("Z is {}x{}", z.rows(), z.cols())));
        }
        if z.field() != w.ring().field() {
            return Err(QmError::Poly(PolyError::ContextMismatch));
        }
        let wz = w.evaluate_at_matrix(&z)?;
        for i in 0..wz.rows() {
            for j in 0..wz.cols() {
                if !wz.get(i, j).is_zero() {
                    return Err(QmError::RelationViolated { row: i, col: j });
                }
            }
        }
        Ok(QuotModule { w: w.clone(), z })
    }

    pub(crate) fn new_unchecked(w: &Poly, z: Mat) -> Self {
        QuotModule { w: w.clone(), z }
    }

    pub fn zero(w: &Poly) -> Self {
        QuotModule::new_unchecked(w, Mat::zeros(w.ring().field(), 0, 0))
    }

    /// `A` itself, with basis `1, z, …, z^{n−1}`.
    pub fn regular(w: &Poly) -> Result<Self, QmError> {
        if w.ring().nvars() != 1 || w.is_zero() {
            return Err(QmError::WrongArity);
        }
        Ok(QuotModule::new_unchecked(w, companion(&w.monic())?))
    }

    /// `k[z]/(d)` for a divisor `d` of `W`, with its companion matrix.
    pub fn cyclic(w: &Poly, d: &Poly) -> Result<Self, QmError> {
        QuotModule::new(w, companion(&d.monic())?)
    }

    /// The nilpotent Jordan block `V_μ = k[z]/(z^μ)` over `W`.
    pub fn jordan(w: &Poly, mu: usize) -> Result<Self, QmError> {
        let field = w.ring().field();
        let mut z = Mat::zeros(field, mu, mu);
        for i in 1..mu {
            z.set(i, i - 1, field.one());
        }
        QuotModule::new(w, z)
    }

    pub fn w(&self) -> &Poly {
        &self.w
    }

    pub fn ring(&self) -> &Ring {
        self.w.ring()
    }

    pub fn field(&self) -> &Field {
        self.w.ring().field()
    }

    pub fn dim(&self) -> usize {
        self.z.rows()
    }

    pub fn z(&self) -> &Mat {
        &self.z
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, QmError> {
        if self.w != other.w {
            return Err(QmError::SuperpotentialMismatch);
        }
        Ok(QuotModule::new_unchecked(&self.w, Mat::direct_sum(&[self.z.clone(), other.z.clone()], self.field())))
    }

    pub fn direct_sum_all(w: &Poly, parts: &[Self]) -> Result<Self, QmError> {
        parts.iter().try_fold(QuotModule::zero(w), |acc, m| acc.direct_sum(m))
    }

    /// The same module in the basis given by the columns of `c`: `c⁻¹ Z c`.
    pub fn conjugate(&self, c: &Mat) -> Option<Self> {
        let inv = c.inverse()?;
        Some(QuotModule::new_unchecked(&self.w, inv.mul(&self.z).mul(c)))
    }

    /// Jordan type for `W = c·z^n`: multiplicity of each `V_μ`, from
    /// `m_μ = rk Z^{μ−1} − 2 rk Z^μ + rk Z^{μ+1}`.
    pub fn decompose(&self) -> Result<BTreeMap<usize, usize>, QmError> {
        let n = match self.w.terms().keys().collect::<Vec<_>>().as_slice() {
            [m] if m.degree() > 0 => m.degree() as usize,
            _ => return Err(QmError::NotNilpotentForm),
        };
        let mut ranks = Vec::with_capacity(n + 2);
        let mut power = Mat::identity(self.field(), self.dim());
        for _ in 0..=n + 1 {
            ranks.push(power.rank() as i64);
            power = power.mul(&self.z);
        }
        let mut out = BTreeMap::new();
        for mu in 1..=n {
            let m = ranks[mu - 1] - 2 * ranks[mu] + ranks[mu + 1];
            if m > 0 {
                out.insert(mu, m as usize);
            }
        }
        Ok(out)
    }

    /// A factorization whose cokernel is this module: `p1 = z·I − Z` and
    /// `p0 = Σ_k w_k Σ_{j<k} z^j Z^{k−1−j}`, so that `p1·p0 = W(z)·I − W(Z)`.
    pub fn stabilize(&self) -> Result<MatrixFactorization, QmError> {
        let ring = self.ring();
        let m = self.dim();
        let z = Poly::var_power(ring, 0, 1);
        let lift =
            |a: &Mat| PolyMatrix::from_fn(ring, a.rows(), a.cols(), |i, j| Poly::constant(ring, a.get(i, j).clone()));
        let p1 = PolyMatrix::scalar(ring, m, &z).try_sub(&lift(&self.z))?;
        let coeffs = self.w.coefficients()?;
        let mut powers = vec![Mat::identity(self.field(), m)];
        for k in 1..coeffs.len() {
            powers.push(powers[k - 1].mul(&self.z));
        }
        let mut p0 = PolyMatrix::zero(ring, m, m);
        for (k, wk) in coeffs.iter().enumerate() {
            if wk.is_zero() {
                continue;
            }
            for j in 0..k {
                let zj = Poly::var_power(ring, 0, j as u32).scale(wk);
                p0 = p0.try_add(&lift(&powers[k - 1 - j]).scale(&zj))?;
            }
        }
        Ok(MatrixFactorization::from_shifted(self.w.clone(), p1, p0)?)
    }
}

impl fmt::Display for QuotModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "W = {}, dim = {}", self.w, self.dim())?;
        write!(f, "{}", self.z)
    }
}

/// A module map `F: M → N` with `F·Z_M = Z_N·F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    pub source: QuotModule,
    pub target: QuotModule,
    pub f: Mat,
}

impl ModuleMorphism {
    pub fn new(source: &QuotModule, target: &QuotModule, f: Mat) -> Result<Self, QmError> {
        if source.w != target.w {
            return Err(QmError::SuperpotentialMismatch);
        }
        if (f.rows(), f.cols()) != (target.dim(), source.dim()) {
            return Err(QmError::ShapeMismatch(format!(
                "map is {}x{}, expected {}x{}",
                f.rows(),
                f.cols(),
                target.dim(),
                source.dim()
            )));
        }
        if f.mul(&source.z) != target.z.mul(&f) {
            return Err(QmError::NotIntertwining);
        }
        Ok(ModuleMorphism { source: source.clone(), target: target.clone(), f })
    }
}

/// Companion matrix of a monic polynomial: `z·z^j = z^{j+1}` and
/// `z·z^{m−1} = −Σ c_k z^k`.
pub fn companion(d: &Poly) -> Result<Mat, QmError> {
    let c = d.coefficients()?;
    let field = d.ring().field();
    let m = c.len().saturating_sub(1);
    let mut z = Mat::zeros(field, m, m);
    for j in 1..m {
        z.set(j, j - 1, field.one());
    }
    for k in 0..m {
        z.set(k, m - 1, -&c[k]);
    }
    Ok(z)
}
