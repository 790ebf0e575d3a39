//! The two families of distinguished triangles in the catalogue.

use std::fmt;

use super::{basis_range, check_index, pad, AnError, AnMorphism, Catalogue};
use crate::mfcat::{certify_triangle, MatrixFactorization, MfMorphism, SearchPolicy, TriangleOutcome};
use crate::polyring::{Field, PolyMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleKind {
    /// `V_μ → V_ν → V_{(ν−μ)} → V_{(−μ)}` on a generator.
    Fst,
    /// `V_μ → V_ν → V_{(λ−μ)} ⊕ V_{(ν−λ)} → V_{(−μ)}` on a path through `λ`.
    Lst { lambda: usize },
}

/// `V_μ --f--> V_ν --g--> ⊕ T_i --h--> V_{(−μ)}`, with the last object
/// standing in for `V_μ[1]`. Index `0` is the zero object.
#[derive(Clone, Debug)]
pub struct AnTriangle {
    pub n: usize,
    pub kind: TriangleKind,
    pub f: AnMorphism,
    pub third: Vec<usize>,
    /// Components `V_ν → T_i`.
    pub g: Vec<AnMorphism>,
    /// Components `T_i → V_{(−μ)}`.
    pub h: Vec<AnMorphism>,
}

impl AnTriangle {
    /// `g = _{(ν−μ)}α_ν`, `h = ±_{(−μ)}α_{(ν−μ)}` with `−` iff `ν − μ < 0`.
    pub fn fst(field: &Field, n: usize, mu: usize, nu: usize) -> Result<Self, AnError> {
        check_index(n, mu)?;
        check_index(n, nu)?;
        let t = pad(n, nu as i64 - mu as i64);
        let last = pad(n, -(mu as i64));
        let mut h = AnMorphism::generator(field, n, t, last);
        if nu < mu {
            h = h.neg();
        }
        Ok(AnTriangle {
            n,
            kind: TriangleKind::Fst,
            f: AnMorphism::generator(field, n, mu, nu),
            third: vec![t],
            g: vec![AnMorphism::generator(field, n, nu, t)],
            h: vec![h],
        })
    }

    /// `f = _να_λ ∘ _λα_μ`, `g = (α, α)ᵗ`, `h = (α, −α)`. Needs
    /// `max(μ,ν) ≤ λ < μ+ν`; at `λ = max(μ,ν)` this is the first family
    /// with a zero summand.
    pub fn lst(field: &Field, n: usize, mu: usize, nu: usize, lambda: usize) -> Result<Self, AnError> {
        check_index(n, mu)?;
        check_index(n, nu)?;
        if !basis_range(n, mu, nu).contains(&lambda) {
            return Err(AnError::InvalidShape(format!(
                "peak {lambda} not a basis index for V_{mu} -> V_{nu} at n = {n}"
            )));
        }
        let t1 = pad(n, lambda as i64 - mu as i64);
        let t2 = pad(n, nu as i64 - lambda as i64);
        let last = pad(n, -(mu as i64));
        Ok(AnTriangle {
            n,
            kind: TriangleKind::Lst { lambda },
            f: AnMorphism::basis(field, n, mu, nu, lambda)?,
            third: vec![t1, t2],
            g: vec![AnMorphism::generator(field, n, nu, t1), AnMorphism::generator(field, n, nu, t2)],
            h: vec![AnMorphism::generator(field, n, t1, last), AnMorphism::generator(field, n, t2, last).neg()],
        })
    }

    pub fn mu(&self) -> usize {
        self.f.source
    }

    pub fn nu(&self) -> usize {
        self.f.target
    }

    /// Drops zero summands of the third object, with their components.
    pub fn reduced(&self) -> AnTriangle {
        let keep: Vec<usize> = (0..self.third.len()).filter(|&i| self.third[i] != 0).collect();
        AnTriangle {
            third: keep.iter().map(|&i| self.third[i]).collect(),
            g: keep.iter().map(|&i| self.g[i].clone()).collect(),
            h: keep.iter().map(|&i| self.h[i].clone()).collect(),
            ..self.clone()
        }
    }

    /// `(f, g, φ_μ∘h)` as morphisms of factorizations, ending at `X_μ[1]`.
    pub fn realize(&self, cat: &Catalogue) -> Result<(MfMorphism, MfMorphism, MfMorphism), AnError> {
        let ring = &cat.ring;
        let y = cat.object(self.nu());
        let parts: Vec<MatrixFactorization> = self.third.iter().map(|&t| cat.object(t)).collect();
        let t = MatrixFactorization::direct_sum_all(&cat.w, &parts)?;
        let f = cat.morphism(&self.f);
        let stack = |maps: Vec<MfMorphism>, vertical: bool| -> Result<(PolyMatrix, PolyMatrix), AnError> {
            let mut f1 = None::<PolyMatrix>;
            let mut f0 = None::<PolyMatrix>;
            for m in maps {
                let join = |acc: Option<PolyMatrix>, b: &PolyMatrix| -> Result<PolyMatrix, AnError> {
                    Ok(match acc {
                        None => b.clone(),
                        Some(a) if vertical => PolyMatrix::block_or_empty(ring, &[vec![&a], vec![b]])?,
                        Some(a) => PolyMatrix::block_or_empty(ring, &[vec![&a, b]])?,
                    })
                };
                f1 = Some(join(f1, m.f1())?);
                f0 = Some(join(f0, m.f0())?);
            }
            Ok((f1.unwrap(), f0.unwrap()))
        };
        let (g1, g0) = stack(self.g.iter().map(|c| cat.morphism(c)).collect(), true)?;
        let g = MfMorphism::new(&y, &t, g1, g0)?;
        let last = cat.object(pad(self.n, -(self.mu() as i64)));
        let (h1, h0) = stack(self.h.iter().map(|c| cat.morphism(c)).collect(), false)?;
        let h = MfMorphism::new(&t, &last, h1, h0)?;
        let h = cat.phi(self.mu()).compose(&h)?;
        Ok((f, g, h))
    }

    /// Certifies exactness against the standard triangle of `f`.
    pub fn certify(&self, cat: &Catalogue, policy: &SearchPolicy) -> Result<TriangleOutcome, AnError> {
        let (f, g, h) = self.realize(cat)?;
        Ok(certify_triangle(&f, &g, &h, policy)?)
    }
}

impl fmt::Display for AnTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let third: Vec<String> = self.third.iter().map(|t| format!("V{t}")).collect();
        let g: Vec<String> = self.g.iter().map(|c| c.to_string()).collect();
        let h: Vec<String> = self.h.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "V{} --[{}]--> V{} --[{}]--> {} --[{}]--> V{}",
            self.mu(),
            self.f,
            self.nu(),
            g.join(", "),
            third.join(" + "),
            h.join(", "),
            pad(self.n, -(self.mu() as i64))
        )
    }
}
