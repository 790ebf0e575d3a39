//! Critical values of a one-variable superpotential over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QmError;
use crate::polyring::univariate::interpolate;
use crate::polyring::{Field, FieldElem, Mat, Poly, RingContext};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalValues {
    /// Distinct rational critical values, ascending.
    pub rational: Vec<FieldElem>,
    /// `Res_z(W − w, W′)` as a polynomial in `w`; its roots are the critical values.
    pub resultant: Poly,
    /// Degree of the part of the resultant with no rational root. Positive
    /// exactly when some critical value is irrational or non-real.
    pub other_degree: u32,
}

impl CriticalValues {
    pub fn has_irrational(&self) -> bool {
        self.other_degree > 0
    }
}

fn sylvester(f: &[FieldElem], g: &[FieldElem], field: &Field) -> Mat {
    let (m, k) = (f.len() - 1, g.len() - 1);
    let size = m + k;
    let mut s = Mat::zeros(field, size, size);
    for i in 0..k {
        for (j, c) in f.iter().rev().enumerate() {
            s.set(i, i + j, c.clone());
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            s.set(k + i, i + j, c.clone());
        }
    }
    s
}

pub fn critical_values(w: &Poly) -> Result<CriticalValues, QmError> {
    let ring = w.ring();
    if ring.nvars() != 1 {
        return Err(QmError::WrongArity);
    }
    if *ring.field() != Field::Rational {
        return Err(QmError::NotRational);
    }
    let field = ring.field();
    let n = match w.degree() {
        Some(d) if d > 0 => d as usize,
        _ => return Err(QmError::ConstantSuperpotential),
    };
    let wr = RingContext::univariate(Field::Rational, "w");
    let coeffs = w.coefficients()?;
    let dcoeffs = w.derivative_at(0).coefficients()?;
    // Res(W − w, W′) has degree deg W′ = n − 1 in w; n samples pin it down.
    let xs: Vec<FieldElem> = (0..n as i64).map(|i| field.from_i64(i)).collect();
    let ys: Vec<FieldElem> = xs
        .iter()
        .map(|x| {
            let mut f = coeffs.clone();
            f[0] = &f[0] - x;
            sylvester(&f, &dcoeffs, field).determinant()
        })
        .collect();
    let resultant = interpolate(&wr, &xs, &ys);
    let (rational, other_degree) = rational_roots(&resultant)?;
    Ok(CriticalValues { rational, resultant, other_degree })
}

/// Distinct rational roots of a nonzero polynomial over Q, and the degree of
/// what is left after dividing them out with multiplicity.
pub(crate) fn rational_roots(p: &Poly) -> Result<(Vec<FieldElem>, u32), QmError> {
    let field = p.ring().field();
    let mut c: Vec<BigInt> = integer_coefficients(p);
    let mut roots = Vec::new();
    while c.len() > 1 && c[0].is_zero() {
        c.remove(0);
        if roots.is_empty() {
            roots.push(BigRational::zero());
        }
    }
    if c.len() > 1 {
        let (lo, hi) = (c[0].abs(), c[c.len() - 1].abs());
        let mut candidates = Vec::new();
        for num in divisors(&lo) {
            for den in divisors(&hi) {
                for s in [BigInt::one(), -BigInt::one()] {
                    let r = BigRational::new(&s * &num, den.clone());
                    if !candidates.contains(&r) {
                        candidates.push(r);
                    }
                }
            }
        }
        for r in candidates {
            let mut hit = false;
            while c.len() > 1 {
                let (q, rem) = deflate(&c, &r);
                if !rem.is_zero() {
                    break;
                }
                c = q;
                hit = true;
            }
            if hit {
                roots.push(r);
            }
        }
    }
    roots.sort();
    let other = (c.len() - 1) as u32;
    Ok((roots.into_iter().map(|r| field.from_fraction(r.numer(), r.denom())).collect::<Result<_, _>>()?, other))
}

/// Primitive integer multiple of `p`, ascending.
fn integer_coefficients(p: &Poly) -> Vec<BigInt> {
    let rat: Vec<BigRational> =
        p.coefficients().unwrap_or_default().iter().map(|c| c.as_rational().cloned().unwrap_or_default()).collect();
    let lcm = rat.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rat.iter().map(|r| (r * BigRational::from(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Divides an integer polynomial (ascending) by `x − r`; returns the
/// primitive quotient and the remainder.
fn deflate(c: &[BigInt], r: &BigRational) -> (Vec<BigInt>, BigRational) {
    let mut acc = BigRational::zero();
    let mut q = vec![BigRational::zero(); c.len() - 1];
    for i in (0..c.len()).rev() {
        acc = acc * r + BigRational::from(c[i].clone());
        if i > 0 {
            q[i - 1] = acc.clone();
        }
    }
    // The quotient may have denominators; rescale to a primitive integer vector.
    let lcm = q.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()));
    let ints: Vec<BigInt> = q.iter().map(|x| (x * BigRational::from(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
    let ints = if g.is_zero() { ints } else { ints.into_iter().map(|x| x / &g).collect() };
    (ints, acc)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let root = n.sqrt();
    let mut d = BigInt::one();
    while d <= root {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let e = n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out
}
