//! The category of the `A_{n−1}` singularity `W = z^n`, described in closed
//! form: objects `V_1, …, V_{n−1}`, morphisms spanned by paths
//! `_να_λ ∘ _λα_μ`, and the relations that normalize them.
//!
//! Index `0` (and `n`) stands for the zero object. Morphism bases are
//! indexed by the peak `λ ∈ [max(μ,ν), min(μ+ν−1, n−1)]`.

pub mod bridge;
pub mod triangle;
pub mod verify;

pub use bridge::Catalogue;
pub use triangle::{AnTriangle, TriangleKind};
pub use verify::{an_verify, AnCheck, AnReport};

use std::fmt;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::mfcat::MfError;
use crate::polyring::{Field, FieldElem, PolyError};
use crate::quotmod::QmError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnError {
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("n must be at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("not composable: V_{left_source} vs V_{right_target}")]
    NotComposable { left_source: usize, right_target: usize },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error(transparent)]
    Mf(#[from] MfError),
    #[error(transparent)]
    Qm(#[from] QmError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn check_n(n: usize) -> Result<(), AnError> {
    if n < 2 {
        Err(AnError::DegreeTooSmall(n))
    } else {
        Ok(())
    }
}

fn check_index(n: usize, mu: usize) -> Result<(), AnError> {
    check_n(n)?;
    if (1..n).contains(&mu) {
        Ok(())
    } else {
        Err(AnError::IndexOutOfRange { index: mu, max: n - 1 })
    }
}

/// `((μ mod n) + n) mod n`; the result `0` is the zero object.
pub fn pad(n: usize, mu: i64) -> usize {
    mu.rem_euclid(n as i64) as usize
}

pub fn an_depth(n: usize, mu: usize) -> Result<usize, AnError> {
    check_index(n, mu)?;
    Ok(mu.min(n - mu))
}

pub fn an_hom_dim(n: usize, mu: usize, nu: usize) -> Result<usize, AnError> {
    Ok(an_depth(n, mu)?.min(an_depth(n, nu)?))
}

/// Peaks `λ` of the canonical basis of `Hom(V_μ, V_ν)`. Empty when either
/// index is the zero object.
pub(crate) fn basis_range(n: usize, mu: usize, nu: usize) -> RangeInclusive<usize> {
    if mu == 0 || nu == 0 || mu >= n || nu >= n {
        #[allow(clippy::reversed_empty_ranges)]
        return 1..=0;
    }
    mu.max(nu)..=(mu + nu - 1).min(n - 1)
}

pub fn an_hom_basis(n: usize, mu: usize, nu: usize) -> Result<Vec<usize>, AnError> {
    check_index(n, mu)?;
    check_index(n, nu)?;
    Ok(basis_range(n, mu, nu).collect())
}

/// Normal form of the path `V_{w_0} → V_{w_1} → … → V_{w_k}` of generators.
///
/// Returns the peak `λ` of the equal basis element, or `None` if the path is
/// zero. Repeats are identities, monotone stretches compose to a single
/// generator, and a valley `b` between `a` and `c` is replaced by the peak
/// `a + c − b`. Any index `≤ 0` or `≥ n` is the zero object.
pub fn normalize_path(n: usize, path: &[usize]) -> Option<usize> {
    if path.is_empty() || path.iter().any(|&i| i == 0 || i >= n) {
        return None;
    }
    let mut w: Vec<usize> = path.to_vec();
    loop {
        w.dedup();
        // Drop monotone middles.
        let mut i = 1;
        while i + 1 < w.len() {
            let (a, b, c) = (w[i - 1], w[i], w[i + 1]);
            if (a <= b && b <= c) || (a >= b && b >= c) {
                w.remove(i);
            } else {
                i += 1;
            }
        }
        // Peaks must stay below both n and the sum of their neighbours.
        for i in 1..w.len().saturating_sub(1) {
            if w[i] > w[i - 1] && (w[i] >= n || w[i] >= w[i - 1] + w[i + 1]) {
                return None;
            }
        }
        let valley = (1..w.len().saturating_sub(1)).find(|&i| w[i] < w[i - 1]);
        match valley {
            Some(i) => {
                let flipped = w[i - 1] + w[i + 1] - w[i];
                if flipped >= n {
                    return None;
                }
                w[i] = flipped;
            }
            None => break,
        }
    }
    let (mu, nu) = (w[0], w[w.len() - 1]);
    let lambda = match w.len() {
        1 | 2 => mu.max(nu),
        _ => w[1],
    };
    basis_range(n, mu, nu).contains(&lambda).then_some(lambda)
}

/// A morphism `V_μ → V_ν`, as coordinates over the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnMorphism {
    pub n: usize,
    pub source: usize,
    pub target: usize,
    pub coeffs: Vec<FieldElem>,
}

impl AnMorphism {
    pub fn zero(field: &Field, n: usize, source: usize, target: usize) -> Self {
        let len = basis_range(n, source, target).count();
        AnMorphism { n, source, target, coeffs: vec![field.zero(); len] }
    }

    /// The basis element with peak `λ`.
    pub fn basis(field: &Field, n: usize, source: usize, target: usize, lambda: usize) -> Result<Self, AnError> {
        check_index(n, source)?;
        check_index(n, target)?;
        let range = basis_range(n, source, target);
        if !range.contains(&lambda) {
            return Err(AnError::InvalidShape(format!(
                "peak {lambda} outside {}..={} for V_{source} -> V_{target}",
                range.start(),
                range.end()
            )));
        }
        let mut m = AnMorphism::zero(field, n, source, target);
        m.coeffs[lambda - range.start()] = field.one();
        Ok(m)
    }

    /// `_να_μ`; zero when an end is the zero object.
    pub fn generator(field: &Field, n: usize, source: usize, target: usize) -> Self {
        if source == 0 || target == 0 {
            return AnMorphism::zero(field, n, source, target);
        }
        AnMorphism::basis(field, n, source, target, source.max(target)).expect("generator is a basis element")
    }

    pub fn identity(field: &Field, n: usize, mu: usize) -> Self {
        AnMorphism::generator(field, n, mu, mu)
    }

    pub fn from_path(field: &Field, n: usize, path: &[usize]) -> Result<Self, AnError> {
        let (mu, nu) = match (path.first(), path.last()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => return Err(AnError::InvalidShape("empty path".into())),
        };
        check_index(n, mu)?;
        check_index(n, nu)?;
        Ok(match normalize_path(n, path) {
            Some(lambda) => AnMorphism::basis(field, n, mu, nu, lambda)?,
            None => AnMorphism::zero(field, n, mu, nu),
        })
    }

    pub fn field(&self) -> Option<Field> {
        self.coeffs.first().map(FieldElem::field)
    }

    pub fn lambdas(&self) -> RangeInclusive<usize> {
        basis_range(self.n, self.source, self.target)
    }

    /// `(λ, c)` for the nonzero coordinates.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &FieldElem)> {
        self.lambdas().zip(&self.coeffs).filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElem::is_zero)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        AnMorphism { coeffs: self.coeffs.iter().map(|x| x * c).collect(), ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        AnMorphism { coeffs: self.coeffs.iter().map(|x| -x).collect(), ..self.clone() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AnError> {
        if (self.n, self.source, self.target) != (other.n, other.source, other.target) {
            return Err(AnError::InvalidShape("adding morphisms with different ends".into()));
        }
        Ok(AnMorphism { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(), ..self.clone() })
    }

    /// `self ∘ before`.
    pub fn compose(&self, before: &AnMorphism) -> Result<AnMorphism, AnError> {
        an_compose(self, before)
    }

    /// The translation `V_μ ↦ V_{n−μ}`, `_να_μ ↦ _{n−ν}α_{n−μ}`. The path
    /// through `λ` becomes a path through `n−λ`, whose normal form has peak
    /// `n + λ − μ − ν`.
    pub fn translate(&self) -> AnMorphism {
        let (mu, nu) = (an_translate_object(self.n, self.source), an_translate_object(self.n, self.target));
        AnMorphism { n: self.n, source: mu, target: nu, coeffs: self.coeffs.clone() }
    }
}

impl fmt::Display for AnMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (lambda, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if !c.is_one() {
                write!(f, "({c})*")?;
            }
            if lambda == self.source.max(self.target) {
                write!(f, "a[{}<-{}]", self.target, self.source)?;
            } else {
                write!(f, "a[{}<-{}]a[{}<-{}]", self.target, lambda, lambda, self.source)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `a ∘ b` for `b: V_μ → V_ρ`, `a: V_ρ → V_ν`, extended bilinearly from the
/// normal forms of the paths `μ → λ_b → ρ → λ_a → ν`.
pub fn an_compose(a: &AnMorphism, b: &AnMorphism) -> Result<AnMorphism, AnError> {
    if a.n != b.n || a.source != b.target {
        return Err(AnError::NotComposable { left_source: a.source, right_target: b.target });
    }
    let n = a.n;
    let field = a.field().or_else(|| b.field());
    let (mu, rho, nu) = (b.source, b.target, a.target);
    let len = basis_range(n, mu, nu).count();
    let Some(field) = field else {
        return Ok(AnMorphism { n, source: mu, target: nu, coeffs: Vec::new() });
    };
    let mut out = AnMorphism { n, source: mu, target: nu, coeffs: vec![field.zero(); len] };
    let start = *basis_range(n, mu, nu).start();
    for (lb, cb) in b.terms() {
        for (la, ca) in a.terms() {
            if let Some(lambda) = normalize_path(n, &[mu, lb, rho, la, nu]) {
                let slot = &mut out.coeffs[lambda - start];
                *slot = &*slot + &(ca * cb);
            }
        }
    }
    Ok(out)
}

pub fn an_translate_object(n: usize, mu: usize) -> usize {
    if mu == 0 {
        0
    } else {
        n - mu
    }
}

/// A direct sum `⊕ V_μ^{m_μ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnObject {
    pub n: usize,
    /// `multiplicities[μ − 1] = m_μ`.
    pub multiplicities: Vec<usize>,
}

impl AnObject {
    pub fn new(n: usize, multiplicities: Vec<usize>) -> Result<Self, AnError> {
        check_n(n)?;
        if multiplicities.len() != n - 1 {
            return Err(AnError::InvalidShape(format!("expected {} multiplicities", n - 1)));
        }
        Ok(AnObject { n, multiplicities })
    }

    pub fn indecomposable(n: usize, mu: usize) -> Result<Self, AnError> {
        check_index(n, mu)?;
        let mut m = vec![0; n - 1];
        m[mu - 1] = 1;
        Ok(AnObject { n, multiplicities: m })
    }

    /// Summands in increasing order, with repetition.
    pub fn summands(&self) -> Vec<usize> {
        self.multiplicities.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m)).collect()
    }

    pub fn translate(&self) -> Self {
        let mut m = self.multiplicities.clone();
        m.reverse();
        AnObject { n: self.n, multiplicities: m }
    }
}

/// Multiplication table of `End(V_μ) ≅ k[x]/x^d` in the basis
/// `e_i = (μ, μ, μ + i)`, `0 ≤ i < d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndRing {
    pub n: usize,
    pub mu: usize,
    pub depth: usize,
    pub basis: Vec<AnMorphism>,
    /// `table[i][j] = e_i ∘ e_j`.
    pub table: Vec<Vec<AnMorphism>>,
}

impl EndRing {
    /// `x = e_1`, absent when `End(V_μ) = k`.
    pub fn generator(&self) -> Option<&AnMorphism> {
        self.basis.get(1)
    }

    /// `x^{d−1} ≠ 0 = x^d`, computed by repeated composition.
    pub fn nilpotency_index(&self) -> usize {
        let id = &self.basis[0];
        let Some(x) = self.generator() else {
            return 1;
        };
        let mut power = id.clone();
        let mut k = 0;
        while !power.is_zero() {
            power = x.compose(&power).expect("endomorphisms compose");
            k += 1;
        }
        k
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.depth).all(|i| (0..self.depth).all(|j| self.table[i][j] == self.table[j][i]))
    }
}

pub fn an_end_ring(field: &Field, n: usize, mu: usize) -> Result<EndRing, AnError> {
    let depth = an_depth(n, mu)?;
    let basis: Vec<AnMorphism> =
        (0..depth).map(|i| AnMorphism::basis(field, n, mu, mu, mu + i)).collect::<Result<_, _>>()?;
    let table = basis
        .iter()
        .map(|a| basis.iter().map(|b| a.compose(b)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EndRing { n, mu, depth, basis, table })
}
