//! Randomized invariants across the polynomial layer, the homotopy category
//! and the catalogue.

use mfcat::andyn::{an_compose, an_hom_basis, AnMorphism, Catalogue};
use mfcat::mfcat::{hom_differential, HomElement, Homotopy, MatrixFactorization, Parity};
use mfcat::polyring::{Field, Poly, PolyMatrix, Ring, RingContext};
use mfcat::quotmod::cok::cok_morphism;
use mfcat::quotmod::{smith_normal_form, QuotModule};
use proptest::prelude::*;

const Q: Field = Field::Rational;

type Terms = Vec<(i64, u32, u32)>;

fn xy(field: Field) -> Ring {
    RingContext::new(field, &["x", "y"]).unwrap().build()
}

fn poly(ring: &Ring, terms: &Terms) -> Poly {
    terms.iter().fold(Poly::zero(ring), |acc, &(c, a, b)| {
        let m = Poly::var_power(ring, 0, a).try_mul(&Poly::var_power(ring, 1, b)).unwrap();
        acc.try_add(&m.scale(&ring.field().from_i64(c))).unwrap()
    })
}

fn terms() -> impl Strategy<Value = Terms> {
    prop::collection::vec((-6i64..=6, 0u32..4, 0u32..4), 0..5)
}

fn matrix(ring: &Ring, entries: &[Terms], rows: usize, cols: usize) -> PolyMatrix {
    PolyMatrix::from_fn(ring, rows, cols, |i, j| poly(ring, &entries[i * cols + j]))
}

/// A random combination of basis maps `V_μ → V_ν`.
fn an_map(field: &Field, n: usize, mu: usize, nu: usize, coeffs: &[i64]) -> AnMorphism {
    an_hom_basis(n, mu, nu).unwrap().into_iter().zip(coeffs.iter().cycle()).fold(
        AnMorphism::zero(field, n, mu, nu),
        |acc, (lambda, &c)| {
            let b = AnMorphism::basis(field, n, mu, nu, lambda).unwrap().scale(&field.from_i64(c));
            acc.try_add(&b).unwrap()
        },
    )
}

/// Catalogue objects and their Knörrer images, all over `k[z, x, y]`.
fn two_variable_objects(n: usize) -> Vec<MatrixFactorization> {
    let cat = Catalogue::new(&Q, n).unwrap();
    (1..n).map(|mu| cat.object(mu).knorrer("x", "y").unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in terms(), b in terms(), c in terms()) {
        let r = xy(Q);
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(a.try_add(&b).unwrap().try_add(&c).unwrap(), a.try_add(&b.try_add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(
            a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
            a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.try_mul(&Poly::one(&r)).unwrap(), a);
    }

    #[test]
    fn parse_inverts_print(a in terms(), p in prop::sample::select(vec![0u64, 5, 101])) {
        let field = if p == 0 { Q } else { Field::prime(p).unwrap() };
        let r = xy(field);
        let a = poly(&r, &a);
        let text = a.to_string();
        let back = Poly::parse(&text, &r).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn leibniz_rule(a in terms(), b in terms()) {
        let r = xy(Q);
        let (a, b) = (poly(&r, &a), poly(&r, &b));
        for v in ["x", "y"] {
            let lhs = a.try_mul(&b).unwrap().partial_derivative(v).unwrap();
            let rhs = a.partial_derivative(v).unwrap().try_mul(&b).unwrap()
                .try_add(&a.try_mul(&b.partial_derivative(v).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn reduction_mod_p_is_a_ring_map(a in terms(), b in terms(), p in prop::sample::select(vec![2u64, 5, 101])) {
        let (rq, rp) = (xy(Q), xy(Field::prime(p).unwrap()));
        let (aq, bq) = (poly(&rq, &a), poly(&rq, &b));
        let (ap, bp) = (poly(&rp, &a), poly(&rp, &b));
        let reduce = |f: &Poly| Poly::parse(&f.to_string(), &rp).unwrap();
        prop_assert_eq!(reduce(&aq.try_mul(&bq).unwrap()), ap.try_mul(&bp).unwrap());
        prop_assert_eq!(reduce(&aq.try_add(&bq).unwrap()), ap.try_add(&bp).unwrap());
    }

    #[test]
    fn transpose_reverses_products(a in prop::collection::vec(terms(), 6), b in prop::collection::vec(terms(), 6)) {
        let r = xy(Q);
        let (a, b) = (matrix(&r, &a, 2, 3), matrix(&r, &b, 3, 2));
        prop_assert_eq!(a.try_mul(&b).unwrap().transpose(), b.transpose().try_mul(&a.transpose()).unwrap());
    }

    #[test]
    fn smith_form_diagonalizes(entries in prop::collection::vec(prop::collection::vec((-4i64..=4, 0u32..4), 0..3), 4)) {
        let r = RingContext::univariate(Q, "z");
        let m = PolyMatrix::from_fn(&r, 2, 2, |i, j| {
            entries[2 * i + j].iter().fold(Poly::zero(&r), |acc, &(c, e)| {
                acc.try_add(&Poly::var_power(&r, 0, e).scale(&Q.from_i64(c))).unwrap()
            })
        });
        let s = smith_normal_form(&m).unwrap();
        prop_assert_eq!(s.u.try_mul(&m).unwrap().try_mul(&s.v).unwrap(), s.d(&r));
        prop_assert_eq!(s.u.try_mul(&s.u_inv).unwrap(), PolyMatrix::identity(&r, 2));
        for k in 1..s.diagonal.len() {
            let (a, b) = (&s.diagonal[k - 1], &s.diagonal[k]);
            prop_assert!(b.is_zero() || a.divides(b).unwrap(), "{} does not divide {}", a, b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hom_differential_squares_to_zero(
        n in 2usize..5,
        i in 0usize..8,
        j in 0usize..8,
        odd in any::<bool>(),
        e in prop::collection::vec(terms(), 8),
    ) {
        let objs = two_variable_objects(n);
        let (x, y) = (&objs[i % objs.len()], &objs[j % objs.len()]);
        let ring = x.ring().clone();
        let embed = |t: &Terms| {
            t.iter().fold(Poly::zero(&ring), |acc, &(c, a, b)| {
                let m = Poly::var_power(&ring, 1, a).try_mul(&Poly::var_power(&ring, 0, b)).unwrap();
                acc.try_add(&m.scale(&Q.from_i64(c))).unwrap()
            })
        };
        let (rows, cols) = (y.rank(), x.rank());
        let g1 = PolyMatrix::from_fn(&ring, rows, cols, |a, b| embed(&e[(a * cols + b) % 8]));
        let g0 = PolyMatrix::from_fn(&ring, rows, cols, |a, b| embed(&e[(a * cols + b + 4) % 8]));
        let g = HomElement { parity: if odd { Parity::Odd } else { Parity::Even }, g1, g0 };
        let dd = hom_differential(&hom_differential(&g, x, y).unwrap(), x, y).unwrap();
        prop_assert!(dd.g1.is_zero() && dd.g0.is_zero());
        if odd {
            // An odd element is a homotopy; its boundary is a null-homotopic morphism.
            let h = Homotopy { s: g.g0.clone(), t: g.g1.clone() };
            let f = h.boundary(x, y).unwrap();
            f.validate().unwrap();
            h.check(&f).unwrap();
        }
    }

    #[test]
    fn shift_is_an_involution(n in 2usize..8, mu in 1usize..8, nu in 1usize..8, c in prop::collection::vec(-3i64..=3, 4)) {
        let (mu, nu) = (1 + mu % (n - 1), 1 + nu % (n - 1));
        let cat = Catalogue::new(&Q, n).unwrap();
        let x = cat.object(mu);
        prop_assert_eq!(x.shift().shift(), x.clone());
        let f = cat.morphism(&an_map(&Q, n, mu, nu, &c));
        let ff = f.shift().shift();
        prop_assert_eq!(ff, f.clone());
        f.shift().validate().unwrap();
    }

    #[test]
    fn an_composition_is_associative(
        n in 2usize..10,
        idx in prop::collection::vec(1usize..10, 4),
        c in prop::collection::vec(-3i64..=3, 12),
    ) {
        let v: Vec<usize> = idx.iter().map(|i| 1 + i % (n - 1)).collect();
        let a = an_map(&Q, n, v[0], v[1], &c[0..4]);
        let b = an_map(&Q, n, v[1], v[2], &c[4..8]);
        let d = an_map(&Q, n, v[2], v[3], &c[8..12]);
        let left = an_compose(&an_compose(&d, &b).unwrap(), &a).unwrap();
        let right = an_compose(&d, &an_compose(&b, &a).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        // Translation is a functor.
        prop_assert_eq!(an_compose(&b, &a).unwrap().translate(), an_compose(&b.translate(), &a.translate()).unwrap());
        let id = AnMorphism::identity(&Q, n, v[0]);
        prop_assert_eq!(an_compose(&a, &id).unwrap(), a);
    }

    #[test]
    fn cok_is_a_functor(
        n in 2usize..7,
        idx in prop::collection::vec(1usize..7, 3),
        c in prop::collection::vec(-3i64..=3, 8),
        p in prop::sample::select(vec![0u64, 5, 101]),
    ) {
        let field = if p == 0 { Q } else { Field::prime(p).unwrap() };
        let v: Vec<usize> = idx.iter().map(|i| 1 + i % (n - 1)).collect();
        let cat = Catalogue::new(&field, n).unwrap();
        let f = cat.morphism(&an_map(&field, n, v[0], v[1], &c[0..4]));
        let g = cat.morphism(&an_map(&field, n, v[1], v[2], &c[4..8]));
        let composite = cok_morphism(&g.compose(&f).unwrap()).unwrap();
        let product = cok_morphism(&g).unwrap().f.mul(&cok_morphism(&f).unwrap().f);
        prop_assert_eq!(composite.f, product);
        let id = cok_morphism(&mfcat::mfcat::MfMorphism::identity(f.source())).unwrap();
        prop_assert_eq!(id.f, mfcat::polyring::Mat::identity(&field, cat.module(v[0]).dim()));
    }

    #[test]
    fn stabilize_then_cok_keeps_jordan_type(n in 2usize..7, parts in prop::collection::vec(1usize..7, 1..4)) {
        let cat = Catalogue::new(&Q, n).unwrap();
        let mods: Vec<QuotModule> = parts.iter().map(|&m| QuotModule::jordan(&cat.w, 1 + (m - 1) % n).unwrap()).collect();
        let m = QuotModule::direct_sum_all(&cat.w, &mods).unwrap();
        let x = m.stabilize().unwrap();
        x.validate().unwrap();
        prop_assert_eq!(mfcat::quotmod::cok(&x).unwrap().decompose().unwrap(), m.decompose().unwrap());
    }
}
