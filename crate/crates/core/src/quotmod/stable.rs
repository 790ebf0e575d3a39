//! Hom spaces of modules and their stable quotients.

use super::{ModuleMorphism, QmError, QuotModule};
use crate::polyring::linalg::EchelonBasis;
use crate::polyring::Mat;

/// Basis of `Hom_A(M, N)`: solutions of `F·Z_M = Z_N·F`.
pub fn hom_space(m: &QuotModule, n: &QuotModule) -> Result<Vec<Mat>, QmError> {
    if m.w() != n.w() {
        return Err(QmError::SuperpotentialMismatch);
    }
    let field = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dn * dm;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    // Unknown F[a][b] sits at a·dm + b; equation (i, j) likewise.
    let mut sys = Mat::zeros(field, unknowns, unknowns);
    for i in 0..dn {
        for j in 0..dm {
            let eq = i * dm + j;
            for b in 0..dm {
                let c = &sys.get(eq, i * dm + b).clone() + m.z().get(b, j);
                sys.set(eq, i * dm + b, c);
            }
            for a in 0..dn {
                let c = sys.get(eq, a * dm + j) - n.z().get(i, a);
                sys.set(eq, a * dm + j, c);
            }
        }
    }
    Ok(sys.nullspace().into_iter().map(|v| Mat::from_flat(field, dn, dm, v)).collect())
}

/// `Hom(M, N)` modulo maps factoring through a free module.
#[derive(Clone, Debug)]
pub struct StableHomSpace {
    pub hom: Vec<Mat>,
    /// Basis of the maps factoring through `A^k`.
    pub factoring: Vec<Mat>,
    /// Elements of `hom` projecting to a basis of the quotient.
    pub representatives: Vec<Mat>,
    echelon: EchelonBasis,
}

impl StableHomSpace {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Whether a module map factors through a free module.
    pub fn is_stably_zero(&self, f: &Mat) -> bool {
        self.echelon.contains(&f.flatten())
    }

    pub fn morphism_is_stably_zero(&self, f: &ModuleMorphism) -> bool {
        self.is_stably_zero(&f.f)
    }

    /// Dimension of the span of `maps` in the stable quotient.
    pub fn stable_rank(&self, maps: &[Mat]) -> usize {
        let mut e = self.echelon.clone();
        maps.iter().filter(|f| e.insert(&f.flatten())).count()
    }
}

/// Every map `M → A^k` is a sum of maps into single copies of `A`, and every
/// map `A → N` is `π_b: z^j ↦ Z_N^j b`. So the factoring maps are spanned by
/// `π_{e_i}∘φ` with `φ` over a basis of `Hom(M, A)`.
pub fn stable_hom(m: &QuotModule, n: &QuotModule) -> Result<StableHomSpace, QmError> {
    let hom = hom_space(m, n)?;
    let field = m.field();
    let a = QuotModule::regular(m.w())?;
    let to_a = hom_space(m, &a)?;
    let len = n.dim() * m.dim();
    let mut echelon = EchelonBasis::new(field, len);
    let mut factoring = Vec::new();
    let mut power = vec![Mat::identity(field, n.dim())];
    for j in 1..a.dim() {
        power.push(power[j - 1].mul(n.z()));
    }
    for i in 0..n.dim() {
        let mut pi = Mat::zeros(field, n.dim(), a.dim());
        for (j, pj) in power.iter().enumerate() {
            for r in 0..n.dim() {
                pi.set(r, j, pj.get(r, i).clone());
            }
        }
        for phi in &to_a {
            let g = pi.mul(phi);
            if echelon.insert(&g.flatten()) {
                factoring.push(g);
            }
        }
    }
    let mut quotient = echelon.clone();
    let representatives = hom.iter().filter(|f| quotient.insert(&f.flatten())).cloned().collect();
    Ok(StableHomSpace { hom, factoring, representatives, echelon })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, Poly, RingContext};

    fn w(s: &str) -> Poly {
        Poly::parse(s, &RingContext::univariate(Field::Rational, "z")).unwrap()
    }

    #[test]
    fn jordan_block_homs() {
        let w5 = w("z^5");
        let v = |mu| QuotModule::jordan(&w5, mu).unwrap();
        for a in 1..5 {
            for b in 1..5 {
                let s = stable_hom(&v(a), &v(b)).unwrap();
                assert_eq!(s.hom.len(), a.min(b));
                // min(a, b, n−a, n−b) survives stably.
                assert_eq!(s.dim(), a.min(b).min(5 - a).min(5 - b), "({a},{b})");
            }
        }
        let free = QuotModule::regular(&w5).unwrap();
        assert_eq!(stable_hom(&free, &free).unwrap().dim(), 0);
    }

    #[test]
    fn semisimple_case() {
        // W = z(z^2 − 3) with coprime factors, so k[z]/(z) is a summand of A.
        let w = w("z^3 - 3*z");
        let s = QuotModule::cyclic(&w, &Poly::parse("z", w.ring()).unwrap()).unwrap();
        assert_eq!(stable_hom(&s, &s).unwrap().dim(), 0);
    }
}
