use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{Field, FieldElem};
use super::PolyError;

/// Shared handle to a polynomial ring.
pub type Ring = Arc<RingContext>;

/// A polynomial ring `k[x_1..x_r]` together with optional positive variable
/// weights and the base point `w0` of the superpotential.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    field: Field,
    vars: Vec<String>,
    weights: Option<Vec<u32>>,
    w0: FieldElem,
}

impl RingContext {
    pub fn new<S: AsRef<str>>(field: Field, vars: &[S]) -> Result<RingContext, PolyError> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(PolyError::UnknownVariable(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        let w0 = field.zero();
        Ok(RingContext { field, vars, weights: None, w0 })
    }

    pub fn with_weights(mut self, weights: Vec<u32>) -> Result<RingContext, PolyError> {
        if weights.len() != self.vars.len() {
            return Err(PolyError::InvalidWeights(format!(
                "{} weights for {} variables",
                weights.len(),
                self.vars.len()
            )));
        }
        if weights.contains(&0) {
            return Err(PolyError::InvalidWeights("weights must be positive".into()));
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn with_w0(mut self, w0: FieldElem) -> Result<RingContext, PolyError> {
        if !self.field.contains(&w0) {
            return Err(PolyError::ContextMismatch);
        }
        self.w0 = w0;
        Ok(self)
    }

    pub fn build(self) -> Ring {
        Arc::new(self)
    }

    /// `k[z]` with weight 1, the ring of every one-variable example.
    pub fn univariate(field: Field, var: &str) -> Ring {
        RingContext::new(field, &[var]).and_then(|c| c.with_weights(vec![1])).expect("valid variable name").build()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    pub fn w0(&self) -> &FieldElem {
        &self.w0
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// Same ring with extra variables appended. Weights, if any, must be supplied
    /// for the new variables too (`None` drops the weighting).
    pub fn extend<S: AsRef<str>>(&self, new_vars: &[S], weights: Option<Vec<u32>>) -> Result<RingContext, PolyError> {
        let mut vars = self.vars.clone();
        vars.extend(new_vars.iter().map(|v| v.as_ref().to_string()));
        let mut ctx = RingContext::new(self.field.clone(), &vars)?.with_w0(self.w0.clone())?;
        if let Some(w) = weights {
            ctx = ctx.with_weights(w)?;
        }
        Ok(ctx)
    }

    pub fn weighted_degree_of(&self, m: &Monomial) -> Result<u64, PolyError> {
        let w = self.weights.as_ref().ok_or(PolyError::NoWeights)?;
        Ok(m.0.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum())
    }

    /// All monomials of weighted degree exactly `d` (empty for negative `d`).
    pub fn monomials_of_weighted_degree(&self, d: i64) -> Result<Vec<Monomial>, PolyError> {
        let w = self.weights.as_ref().ok_or(PolyError::NoWeights)?;
        let mut out = Vec::new();
        if d >= 0 {
            let mut cur = vec![0u32; w.len()];
            enumerate_weighted(w, 0, d as u64, &mut cur, &mut out);
        }
        out.sort();
        Ok(out)
    }

    /// All monomials of total degree at most `d`.
    pub fn monomials_up_to_degree(&self, d: u32) -> Vec<Monomial> {
        let ones = vec![1u32; self.nvars()];
        let mut out = Vec::new();
        for deg in 0..=d as u64 {
            let mut cur = vec![0u32; ones.len()];
            enumerate_weighted(&ones, 0, deg, &mut cur, &mut out);
        }
        out.sort();
        out
    }
}

fn enumerate_weighted(w: &[u32], i: usize, rest: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i == w.len() {
        if rest == 0 {
            out.push(Monomial(cur.clone()));
        }
        return;
    }
    let wi = w[i] as u64;
    let mut e = 0u64;
    while e * wi <= rest {
        cur[i] = e as u32;
        enumerate_weighted(w, i + 1, rest - e * wi, cur, out);
        e += 1;
    }
    cur[i] = 0;
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector, ordered graded-lexicographically (total degree first, ties
/// broken lexicographically with the first variable most significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()
            .map(Monomial)
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

/// A sparse polynomial. No zero coefficient is ever stored.
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Poly {
        Poly::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: FieldElem) -> Poly {
        Poly::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Ring, c: i64) -> Poly {
        Poly::constant(ring, ring.field().from_i64(c))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: FieldElem) -> Poly {
        assert_eq!(m.0.len(), ring.nvars(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Poly, PolyError> {
        let i = ring.var_index(name)?;
        Ok(Poly::var_power(ring, i, 1))
    }

    /// `x_i^e`.
    pub fn var_power(ring: &Ring, i: usize, e: u32) -> Poly {
        let mut m = vec![0; ring.nvars()];
        m[i] = e;
        Poly::monomial(ring, Monomial(m), ring.field().one())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, FieldElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    /// Constant term as a scalar if the polynomial is constant.
    pub fn as_constant(&self) -> Option<FieldElem> {
        match self.terms.len() {
            0 => Some(self.ring.field().zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Weighted degree `d` if every term has weighted degree `d`; `None` when
    /// the polynomial is zero or not quasi-homogeneous.
    pub fn weighted_degree(&self) -> Result<Option<u64>, PolyError> {
        let mut deg = None;
        for m in self.terms.keys() {
            let d = self.ring.weighted_degree_of(m)?;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Ok(None),
                _ => {}
            }
        }
        Ok(deg)
    }

    fn check_ring(&self, other: &Poly) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c);
        }
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                add_term(&mut terms, m1.checked_mul(m2)?, &(c1 * c2));
            }
        }
        Ok(Poly { ring: self.ring.clone(), terms })
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Poly, PolyError> {
        let i = self.ring.var_index(var)?;
        Ok(self.derivative_at(i))
    }

    pub fn derivative_at(&self, i: usize) -> Poly {
        let field = self.ring.field();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] = e - 1;
            add_term(&mut terms, m2, &(c * &field.from_i64(e as i64)));
        }
        Poly { ring: self.ring.clone(), terms }
    }

    /// Reinterprets the polynomial in a ring whose variables extend this one's.
    pub fn embed(&self, ring: &Ring) -> Result<Poly, PolyError> {
        let n = self.ring.nvars();
        if ring.field() != self.ring.field() || ring.nvars() < n || ring.vars()[..n] != self.ring.vars()[..] {
            return Err(PolyError::ContextMismatch);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.resize(ring.nvars(), 0);
                (Monomial(e), c.clone())
            })
            .collect();
        Ok(Poly { ring: ring.clone(), terms })
    }

    /// Evaluates at a point of `k^r`.
    pub fn evaluate(&self, point: &[FieldElem]) -> FieldElem {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = &t * x;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Terms from highest to lowest in graded-lex order.
    pub fn terms_descending(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter().rev()
    }
}

pub(crate) fn add_term(terms: &mut BTreeMap<Monomial, FieldElem>, m: Monomial, c: &FieldElem) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl fmt::Display for Poly {
    /// Canonical text form: terms in descending graded-lex order, e.g. `5*z*x + 6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms_descending().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (v, &e) in self.ring.vars().iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Poly { ring: self.ring.clone(), terms }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
