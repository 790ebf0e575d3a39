//! Realizations of the closed-form catalogue as factorizations of `z^n` and
//! as modules over `k[z]/(z^n)`.

use super::{basis_range, AnError, AnMorphism, AnObject};
use crate::mfcat::{MatrixFactorization, MfMorphism};
use crate::polyring::{Field, Mat, Poly, PolyMatrix, Ring, RingContext};
use crate::quotmod::QuotModule;

#[derive(Clone, Debug)]
pub struct Catalogue {
    pub n: usize,
    pub field: Field,
    pub ring: Ring,
    pub w: Poly,
}

impl Catalogue {
    pub fn new(field: &Field, n: usize) -> Result<Self, AnError> {
        super::check_n(n)?;
        let ring = RingContext::univariate(field.clone(), "z");
        let w = Poly::var_power(&ring, 0, n as u32);
        Ok(Catalogue { n, field: field.clone(), ring, w })
    }

    fn z(&self, e: usize) -> PolyMatrix {
        PolyMatrix::scalar(&self.ring, 1, &Poly::var_power(&self.ring, 0, e as u32))
    }

    /// `X_μ = (z^μ, z^{n−μ})`; the zero object for `μ ∈ {0, n}`.
    pub fn object(&self, mu: usize) -> MatrixFactorization {
        if mu == 0 || mu >= self.n {
            return MatrixFactorization::zero_object(&self.w);
        }
        MatrixFactorization::new(&self.w, self.z(mu), self.z(self.n - mu)).expect("catalogue objects factor z^n")
    }

    pub fn object_sum(&self, obj: &AnObject) -> Result<MatrixFactorization, AnError> {
        let parts: Vec<_> = obj.summands().into_iter().map(|mu| self.object(mu)).collect();
        Ok(MatrixFactorization::direct_sum_all(&self.w, &parts)?)
    }

    /// The basis element with peak `λ` is `(z^{λ−ν}, z^{λ−μ})`.
    pub fn morphism(&self, a: &AnMorphism) -> MfMorphism {
        let (p, q) = (self.object(a.source), self.object(a.target));
        let mut f = MfMorphism::zero(&p, &q);
        if p.rank() == 0 || q.rank() == 0 {
            return f;
        }
        for (lambda, c) in a.terms() {
            let c = Poly::constant(&self.ring, c.clone());
            let (f1, f0) = (self.z(lambda - a.target).scale(&c), self.z(lambda - a.source).scale(&c));
            f = f.try_add(&MfMorphism::new_unchecked(&p, &q, f1, f0)).expect("same ends");
        }
        f
    }

    /// `φ_μ = (−1, 1): X_{n−μ} → X_μ[1]`, the isomorphism realizing the
    /// translation on objects.
    pub fn phi(&self, mu: usize) -> MfMorphism {
        let (p, q) = (self.object(self.n - mu.min(self.n)), self.object(mu).shift());
        if p.rank() == 0 {
            return MfMorphism::zero(&p, &q);
        }
        MfMorphism::new(&p, &q, self.z(0).neg(), self.z(0)).expect("phi is a morphism")
    }

    /// `V_μ = k[z]/(z^μ)` with basis `1, z, …, z^{μ−1}`.
    pub fn module(&self, mu: usize) -> QuotModule {
        if mu == 0 || mu >= self.n {
            return QuotModule::zero(&self.w);
        }
        QuotModule::jordan(&self.w, mu).expect("z^mu divides z^n")
    }

    /// `z^j ↦ z^{j+λ−μ}` for the basis element with peak `λ`.
    pub fn module_map(&self, a: &AnMorphism) -> Mat {
        let (m, n) = (self.module(a.source).dim(), self.module(a.target).dim());
        let mut f = Mat::zeros(&self.field, n, m);
        for (lambda, c) in a.terms() {
            for j in 0..m {
                let i = j + lambda - a.source;
                if i < n {
                    let v = f.get(i, j) + c;
                    f.set(i, j, v);
                }
            }
        }
        f
    }

    /// Every basis element of every `Hom(V_μ, V_ν)`.
    pub fn all_basis_elements(&self) -> Vec<AnMorphism> {
        let mut out = Vec::new();
        for mu in 1..self.n {
            for nu in 1..self.n {
                for lambda in basis_range(self.n, mu, nu) {
                    out.push(AnMorphism::basis(&self.field, self.n, mu, nu, lambda).expect("in range"));
                }
            }
        }
        out
    }
}
