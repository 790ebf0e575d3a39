//! Acceptance suite: nine end-to-end criteria, each checked with exact
//! arithmetic and reported as one `PASS`/`FAIL` line.
//!
//! Runs without the libtest harness so the report is always printed.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::thread;

use mfcat::andyn::{an_hom_basis, AnMorphism, AnTriangle, Catalogue, TriangleKind};
use mfcat::mfcat::{
    find_null_homotopy, graded_stable_hom_dim, is_iso_in_db, Homotopy, IsoOutcome, MatrixFactorization, MfMorphism,
    SearchPolicy, StandardTriangle,
};
use mfcat::polyring::{Field, Mat, Poly, PolyMatrix, Ring, RingContext};
use mfcat::quotmod::cok::cok_morphism;
use mfcat::quotmod::{cok, critical_values, stable_hom, QuotModule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rational;

/// Counts checks and keeps the first few failures.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Records a fallible step; an error counts as a failure.
    fn attempt<T, E: std::fmt::Display>(&mut self, r: Result<T, E>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

type Key = (usize, usize, usize, usize);

fn depth(n: usize, mu: usize) -> usize {
    mu.min(n - mu)
}

fn field_name(f: &Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        other => format!("F_{}", other.characteristic()),
    }
}

fn policy() -> SearchPolicy {
    SearchPolicy::default()
}

/// Random invertible integer matrix: a product of elementary row operations.
fn random_unimodular(field: &Field, d: usize, rng: &mut ChaCha8Rng) -> Mat {
    let mut m = Mat::identity(field, d);
    if d < 2 {
        return m.scale(&field.from_i64(rng.gen_range(1..4)));
    }
    for _ in 0..3 * d {
        let (i, j) = (rng.gen_range(0..d), rng.gen_range(0..d));
        if i == j {
            continue;
        }
        let mut e = Mat::identity(field, d);
        e.set(i, j, field.from_i64(rng.gen_range(-3..=3)));
        m = e.mul(&m);
    }
    m
}

// 1. Stable Hom between the modules V_μ = k[z]/z^μ.
fn criterion_1(field: &Field, ns: &[usize]) -> (Tally, BTreeMap<Key, usize>) {
    let mut t = Tally::default();
    let mut dims = BTreeMap::new();
    for &n in ns {
        let cat = Catalogue::new(field, n).unwrap();
        for mu in 1..n {
            for nu in 1..n {
                let expected = depth(n, mu).min(depth(n, nu));
                let Some(s) = t.attempt(stable_hom(&cat.module(mu), &cat.module(nu)), || format!("n={n} {mu},{nu}"))
                else {
                    continue;
                };
                dims.insert((n, mu, nu, 0), s.dim());
                t.check(s.dim() == expected, || format!("n={n} mu={mu} nu={nu}: {} != {expected}", s.dim()));
            }
        }
    }
    (t, dims)
}

/// Catalogue objects, plus pairwise sums for small `n`.
fn catalogue_objects(cat: &Catalogue) -> Vec<(String, MatrixFactorization)> {
    let n = cat.n;
    let mut out: Vec<_> = (1..n).map(|mu| (format!("X{mu}"), cat.object(mu))).collect();
    if n <= 4 {
        for mu in 1..n {
            for nu in mu..n {
                out.push((format!("X{mu}+X{nu}"), cat.object(mu).direct_sum(&cat.object(nu)).unwrap()));
            }
        }
    }
    out
}

// 2. Hom in the homotopy category equals stable Hom of cokernels, and Cok
// kills null-homotopic maps.
fn criterion_2(field: &Field, ns: &[usize]) -> (Tally, BTreeMap<Key, usize>) {
    let mut t = Tally::default();
    let mut dims = BTreeMap::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for &n in ns {
        let cat = Catalogue::new(field, n).unwrap();
        let objs = catalogue_objects(&cat);
        for (i, (xn, x)) in objs.iter().enumerate() {
            for (j, (yn, y)) in objs.iter().enumerate() {
                let label = || format!("n={n} {xn}->{yn}");
                let Some(g) = t.attempt(graded_stable_hom_dim(x, y, &policy()), label) else { continue };
                let Some(mx) = t.attempt(cok(x), label) else { continue };
                let Some(my) = t.attempt(cok(y), label) else { continue };
                let Some(s) = t.attempt(stable_hom(&mx, &my), label) else { continue };
                dims.insert((n, i, j, 0), g);
                t.check(g == s.dim(), || format!("{}: graded {g} != stable {}", label(), s.dim()));
                // Boundaries of unit homotopies z^k in every slot, and a random mix.
                let ring = x.ring();
                let (rows, cols) = (y.rank(), x.rank());
                let mut homotopies = Vec::new();
                for k in 0..=n as u32 {
                    for slot in 0..2 * rows * cols {
                        let mut m = PolyMatrix::zero(ring, rows, cols);
                        let e = slot % (rows * cols);
                        m.set(e / cols, e % cols, Poly::var_power(ring, 0, k));
                        let zero = PolyMatrix::zero(ring, rows, cols);
                        homotopies.push(if slot < rows * cols {
                            Homotopy { s: m, t: zero }
                        } else {
                            Homotopy { s: zero, t: m }
                        });
                    }
                }
                let random = |rng: &mut ChaCha8Rng| {
                    PolyMatrix::from_fn(ring, rows, cols, |_, _| {
                        (0..=n as u32).fold(Poly::zero(ring), |acc, k| {
                            let c = field.from_i64(rng.gen_range(-5..=5));
                            acc.try_add(&Poly::var_power(ring, 0, k).scale(&c)).unwrap()
                        })
                    })
                };
                homotopies.push(Homotopy { s: random(&mut rng), t: random(&mut rng) });
                for h in homotopies {
                    let f = h.boundary(x, y).unwrap();
                    let Some(m) = t.attempt(cok_morphism(&f), label) else { continue };
                    t.check(s.morphism_is_stably_zero(&m), || {
                        format!("{}: Cok of a boundary not stably zero", label())
                    });
                }
            }
        }
    }
    (t, dims)
}

// 3. Hom between Knörrer images matches the catalogue.
fn criterion_3() -> Tally {
    let mut t = Tally::default();
    for n in 2..=4 {
        let cat = Catalogue::new(&Q, n).unwrap();
        let k: Vec<_> = (1..n).map(|mu| cat.object(mu).knorrer("x", "y").unwrap()).collect();
        t.check(k[0].unshifted_w().to_string() == format!("z^{n} + x*y"), || format!("W = {}", k[0].unshifted_w()));
        for mu in 1..n {
            for nu in 1..n {
                let expected = depth(n, mu).min(depth(n, nu));
                if let Some(d) = t
                    .attempt(graded_stable_hom_dim(&k[mu - 1], &k[nu - 1], &policy()), || format!("n={n} K{mu}->K{nu}"))
                {
                    t.check(d == expected, || format!("n={n} K{mu}->K{nu}: {d} != {expected}"));
                }
            }
        }
    }
    t
}

fn iso_certified(t: &mut Tally, x: &MatrixFactorization, y: &MatrixFactorization, label: impl Fn() -> String) -> bool {
    match t.attempt(is_iso_in_db(x, y, &policy()), &label) {
        Some(IsoOutcome::Isomorphic(w)) => {
            let ok = w.verify().is_ok();
            t.check(ok, || format!("{}: iso witness fails to verify", label()));
            ok
        }
        Some(other) => {
            t.check(false, || format!("{}: {other:?}", label()));
            false
        }
        None => false,
    }
}

fn null_homotopic(t: &mut Tally, f: &MfMorphism, policy: &SearchPolicy, label: impl Fn() -> String) -> bool {
    match t.attempt(find_null_homotopy(f, policy), &label) {
        Some(out) => match out.found() {
            Some(h) => {
                let ok = h.check(f).is_ok();
                t.check(ok, || format!("{}: homotopy fails to verify", label()));
                ok
            }
            None => {
                t.check(false, || format!("{}: {out:?}", label()));
                false
            }
        },
        None => false,
    }
}

// 4. Triangulated structure: [2] = id, cone(id) ≃ 0, composites vanish,
// rotation cone(g) ≅ P[1].
fn criterion_4(field: &Field, ns: &[usize]) -> (Tally, BTreeMap<Key, usize>) {
    let mut t = Tally::default();
    let mut out = BTreeMap::new();
    for &n in ns {
        let cat = Catalogue::new(field, n).unwrap();
        for mu in 1..n {
            let x = cat.object(mu);
            let before = t.failures.len();
            t.check(x.shift().shift() == x, || format!("n={n} X{mu}[2] != X{mu}"));
            let k = x.knorrer("x", "y").unwrap();
            t.check(k.shift().shift() == k, || format!("n={n} K{mu}[2] != K{mu}"));
            let cone = StandardTriangle::of(&MfMorphism::identity(&x)).unwrap().cone;
            null_homotopic(&mut t, &MfMorphism::identity(&cone), &policy(), || {
                format!("n={n} cone(id_X{mu}) not contractible")
            });
            out.insert((n, mu, 0, 0), usize::from(t.failures.len() == before));
            for nu in 1..n {
                let before = t.failures.len();
                for lambda in an_hom_basis(n, mu, nu).unwrap() {
                    let f = cat.morphism(&AnMorphism::basis(field, n, mu, nu, lambda).unwrap());
                    t.check(f.shift().shift() == f, || format!("n={n} f[2] != f"));
                    let tri = StandardTriangle::of(&f).unwrap();
                    t.check(tri.validate().is_ok(), || format!("n={n} triangle of {mu}->{nu} invalid"));
                    let gf = tri.g.compose(&tri.f).unwrap();
                    let hg = tri.h.compose(&tri.g).unwrap();
                    let fh = tri.f.shift().compose(&tri.h).unwrap();
                    for (name, m) in [("g.f", gf), ("h.g", hg), ("f[1].h", fh)] {
                        null_homotopic(&mut t, &m, &policy(), || {
                            format!("n={n} {mu}->{nu} peak {lambda}: {name} not null-homotopic")
                        });
                    }
                }
                // Rotation on the generator.
                let f = cat.morphism(&AnMorphism::generator(field, n, mu, nu));
                let tri = StandardTriangle::of(&f).unwrap();
                let rotated = StandardTriangle::of(&tri.g).unwrap().cone;
                iso_certified(&mut t, &rotated, &cat.object(mu).shift(), || {
                    format!("n={n} cone(g) vs X{mu}[1] for {mu}->{nu}")
                });
                out.insert((n, mu, nu, 1), usize::from(t.failures.len() == before));
            }
        }
    }
    (t, out)
}

// 5. The two triangle families certify with the stated signs.
fn criterion_5() -> Tally {
    let mut t = Tally::default();
    let check = |t: &mut Tally, tri: AnTriangle, cat: &Catalogue| {
        let label = || format!("n={} {tri}", cat.n);
        if let TriangleKind::Fst = tri.kind {
            let neg = tri.h[0].terms().any(|(_, c)| c.is_negative());
            t.check(neg == (tri.nu() < tri.mu()), || format!("{}: sign of h", label()));
        }
        if let Some(out) = t.attempt(tri.certify(cat, &policy()), label) {
            match out.witness() {
                Some(w) => t.check(w.verify().is_ok(), || format!("{}: witness fails", label())),
                None => t.check(false, || format!("{}: {out:?}", label())),
            }
        }
    };
    for n in 2..=6 {
        let cat = Catalogue::new(&Q, n).unwrap();
        for mu in 1..n {
            for nu in 1..n {
                check(&mut t, AnTriangle::fst(&Q, n, mu, nu).unwrap(), &cat);
                if n <= 5 {
                    for lambda in an_hom_basis(n, mu, nu).unwrap() {
                        check(&mut t, AnTriangle::lst(&Q, n, mu, nu, lambda).unwrap(), &cat);
                    }
                }
            }
        }
    }
    t
}

/// `I + c·m·E_ij` and its inverse, for `i ≠ j`.
fn elementary(ring: &Ring, r: usize, i: usize, j: usize, entry: &Poly) -> (PolyMatrix, PolyMatrix) {
    let mut e = PolyMatrix::identity(ring, r);
    let mut inv = PolyMatrix::identity(ring, r);
    e.set(i, j, entry.clone());
    inv.set(i, j, -entry);
    (e, inv)
}

/// `(E·p1·F, F⁻¹·p0·E⁻¹)` for random unimodular `E`, `F`.
fn scramble(x: &MatrixFactorization, rng: &mut ChaCha8Rng) -> MatrixFactorization {
    let ring = x.ring().clone();
    let r = x.rank();
    let (mut p1, mut p0) = (x.p1().clone(), x.p0().clone());
    if r < 2 {
        return x.clone();
    }
    let random_entry = |rng: &mut ChaCha8Rng| {
        let v = rng.gen_range(0..ring.nvars());
        Poly::var_power(&ring, v, rng.gen_range(0..3)).scale(&ring.field().from_i64(rng.gen_range(-3..=3)))
    };
    for _ in 0..4 {
        let (i, j) = (rng.gen_range(0..r), rng.gen_range(0..r));
        if i == j {
            continue;
        }
        let (e, e_inv) = elementary(&ring, r, i, j, &random_entry(rng));
        let (k, l) = (rng.gen_range(0..r), rng.gen_range(0..r));
        let (f, f_inv) = if k == l {
            (PolyMatrix::identity(&ring, r), PolyMatrix::identity(&ring, r))
        } else {
            elementary(&ring, r, k, l, &random_entry(rng))
        };
        p1 = e.try_mul(&p1).unwrap().try_mul(&f).unwrap();
        p0 = f_inv.try_mul(&p0).unwrap().try_mul(&e_inv).unwrap();
    }
    MatrixFactorization::new(&x.unshifted_w(), p1, p0).expect("unimodular change of basis preserves factorizations")
}

/// A random univariate factorization: a scrambled sum of catalogue objects
/// or a rank-one split of a product of linear factors.
fn random_univariate(rng: &mut ChaCha8Rng) -> MatrixFactorization {
    if rng.gen_bool(0.3) {
        let ring = RingContext::univariate(Q, "z");
        let z = Poly::var(&ring, "z").unwrap();
        let factors: Vec<Poly> = (0..rng.gen_range(2..5))
            .map(|_| z.try_sub(&Poly::from_i64(&ring, rng.gen_range(-3..=3))).unwrap())
            .collect();
        let cut = rng.gen_range(1..factors.len());
        let prod = |fs: &[Poly]| fs.iter().fold(Poly::one(&ring), |a, f| a.try_mul(f).unwrap());
        let (a, b) = (prod(&factors[..cut]), prod(&factors[cut..]));
        let w = a.try_mul(&b).unwrap();
        return MatrixFactorization::new(&w, PolyMatrix::scalar(&ring, 1, &a), PolyMatrix::scalar(&ring, 1, &b))
            .unwrap();
    }
    let n = rng.gen_range(2..=6);
    let cat = Catalogue::new(&Q, n).unwrap();
    let parts: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| cat.object(rng.gen_range(1..n))).collect();
    scramble(&MatrixFactorization::direct_sum_all(&cat.w, &parts).unwrap(), rng)
}

// 6. (∂p0, ∂p1) is a null-homotopy of multiplication by ∂W.
fn criterion_6() -> Tally {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..100 {
        let x = if i % 2 == 0 {
            random_univariate(&mut rng)
        } else {
            scramble(&random_univariate(&mut rng).knorrer("x", "y").unwrap(), &mut rng)
        };
        t.check(x.validate().is_ok(), || format!("sample {i}: invalid factorization"));
        for v in 0..x.ring().nvars() {
            let dw = x.w().derivative_at(v);
            let f = MfMorphism::multiplication(&x, &dw);
            let h = Homotopy::derivative_witness(&x, v);
            t.check(h.check(&f).is_ok(), || format!("sample {i}, variable {v}: W = {}", x.unshifted_w()));
        }
    }
    t
}

// 7. Smooth fibers: explicit contraction for z^2 − 1; critical values of
// z^3 − 3z and vanishing stable Hom at the value 0.
fn criterion_7() -> Tally {
    let mut t = Tally::default();
    let ring = RingContext::univariate(Q, "z");
    let p = |s: &str| Poly::parse(s, &ring).unwrap();
    let m = |s: &str| PolyMatrix::scalar(&ring, 1, &p(s));
    let x = MatrixFactorization::new(&p("z^2 - 1"), m("z - 1"), m("z + 1")).unwrap();
    let id = MfMorphism::identity(&x);
    let witness = Homotopy { s: m("-1/2"), t: m("1/2") };
    t.check(witness.check(&id).is_ok(), || "(-1/2, 1/2) is not a contraction of (z-1, z+1)".into());
    if let Some(out) = t.attempt(find_null_homotopy(&id, &SearchPolicy::Bounded(Some(2))), || "z^2 - 1 search".into()) {
        t.check(out.found() == Some(&witness), || format!("search found {out:?}"));
    }

    let w = p("z^3 - 3*z");
    if let Some(cv) = t.attempt(critical_values(&w), || "critical values".into()) {
        let got: Vec<String> = cv.rational.iter().map(|c| c.to_string()).collect();
        t.check(got == ["-2", "2"] && cv.other_degree == 0, || format!("critical values {got:?}"));
        t.check(!cv.rational.iter().any(|c| c.is_zero()), || "0 is critical".into());
    }
    for (a, b) in [("z", "z^2 - 3"), ("z^2 - 3", "z")] {
        let y = MatrixFactorization::new(&w, m(a), m(b)).unwrap();
        // Not quasi-homogeneous, so the search is bounded.
        null_homotopic(&mut t, &MfMorphism::identity(&y), &SearchPolicy::Bounded(None), || {
            format!("({a}, {b}) not contractible")
        });
    }
    // Every module over k[z]/(z^3 − 3z) is a sum of k[z]/z and k[z]/(z^2 − 3).
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut mods = Vec::new();
    for a in 0..=4 {
        for b in 0..=2 {
            let d = a + 2 * b;
            if d == 0 || d > 4 {
                continue;
            }
            let mut parts = vec![QuotModule::cyclic(&w, &p("z")).unwrap(); a];
            parts.extend(vec![QuotModule::cyclic(&w, &p("z^2 - 3")).unwrap(); b]);
            let sum = QuotModule::direct_sum_all(&w, &parts).unwrap();
            let c = random_unimodular(&Q, d, &mut rng);
            mods.push((format!("{a}x[z] + {b}x[z^2-3]"), sum.conjugate(&c).unwrap()));
        }
    }
    mods.push(("regular".into(), QuotModule::regular(&w).unwrap()));
    for (an, ma) in &mods {
        for (bn, mb) in &mods {
            if let Some(s) = t.attempt(stable_hom(ma, mb), || format!("{an} -> {bn}")) {
                t.check(s.dim() == 0, || format!("{an} -> {bn}: stable Hom has dim {}", s.dim()));
            }
        }
    }
    t
}

fn partitions(total: usize, largest: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=largest.min(total)).rev() {
        for mut rest in partitions(total - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

// 8. cok∘stabilize is the identity up to free summands; stabilize(V_μ) ≅ X_μ.
fn criterion_8() -> Tally {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 2..=5 {
        let cat = Catalogue::new(&Q, n).unwrap();
        for total in 1..=6 {
            for parts in partitions(total, n) {
                let label = || format!("n={n} parts={parts:?}");
                let blocks: Vec<_> = parts.iter().map(|&mu| QuotModule::jordan(&cat.w, mu).unwrap()).collect();
                let m = QuotModule::direct_sum_all(&cat.w, &blocks)
                    .unwrap()
                    .conjugate(&random_unimodular(&Q, total, &mut rng))
                    .unwrap();
                let Some(x) = t.attempt(m.stabilize(), label) else { continue };
                t.check(x.validate().is_ok(), || format!("{}: stabilize invalid", label()));
                let Some(back) = t.attempt(cok(&x), label) else { continue };
                let strip = |d: std::collections::BTreeMap<usize, usize>| {
                    d.into_iter().filter(|&(mu, _)| mu < n).collect::<Vec<_>>()
                };
                let (a, b) = (back.decompose().unwrap(), m.decompose().unwrap());
                t.check(strip(a.clone()) == strip(b.clone()), || format!("{}: {a:?} vs {b:?}", label()));
            }
        }
        for mu in 1..n {
            let Some(x) = t.attempt(cat.module(mu).stabilize(), || format!("n={n} V{mu}")) else { continue };
            iso_certified(&mut t, &x, &cat.object(mu), || format!("n={n} stabilize(V{mu}) vs X{mu}"));
        }
    }
    t
}

fn agree(t: &mut Tally, label: &str, got: &BTreeMap<Key, usize>, reference: &BTreeMap<Key, usize>) {
    for (k, v) in got {
        match reference.get(k) {
            Some(r) => t.check(r == v, || format!("{label} {k:?}: {v} != {r} over Q")),
            None => t.check(false, || format!("{label} {k:?}: no rational value")),
        }
    }
    t.check(!got.is_empty(), || format!("{label}: nothing compared"));
}

fn report(i: usize, t: &Tally, what: &str) {
    let status = if t.pass() { "PASS" } else { "FAIL" };
    println!("criterion {i}: {status} ({} checks) {what}", t.checks);
    for f in t.failures.iter().take(5) {
        println!("    {f}");
    }
}

fn main() -> ExitCode {
    // `--list` asks for test names; this target has none to offer.
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let ns1: Vec<usize> = (2..=8).collect();
    let ns2: Vec<usize> = (2..=6).collect();
    let ns4: Vec<usize> = (2..=5).collect();
    let primes = [5u64, 101];
    let (c1, c2, c3, c4, c5, c6, c7, c8, fp) = thread::scope(|s| {
        let h1 = s.spawn(|| criterion_1(&Q, &ns1));
        let h2 = s.spawn(|| criterion_2(&Q, &ns2));
        let h3 = s.spawn(criterion_3);
        let h4 = s.spawn(|| criterion_4(&Q, &ns4));
        let h5 = s.spawn(criterion_5);
        let h6 = s.spawn(criterion_6);
        let h7 = s.spawn(criterion_7);
        let h8 = s.spawn(criterion_8);
        let hp: Vec<_> = primes
            .iter()
            .map(|&p| {
                let (ns1, ns2, ns4) = (&ns1, &ns2, &ns4);
                s.spawn(move || {
                    let f = Field::prime(p).unwrap();
                    let keep = |ns: &[usize]| {
                        ns.iter().copied().filter(|n| !(*n as u64).is_multiple_of(p)).collect::<Vec<_>>()
                    };
                    (f.clone(), criterion_1(&f, &keep(ns1)), criterion_2(&f, &keep(ns2)), criterion_4(&f, &keep(ns4)))
                })
            })
            .collect();
        (
            h1.join().unwrap(),
            h2.join().unwrap(),
            h3.join().unwrap(),
            h4.join().unwrap(),
            h5.join().unwrap(),
            h6.join().unwrap(),
            h7.join().unwrap(),
            h8.join().unwrap(),
            hp.into_iter().map(|h| h.join().unwrap()).collect::<Vec<_>>(),
        )
    });
    let mut c9 = Tally::default();
    for (f, (t1, d1), (t2, d2), (t4, d4)) in fp {
        let name = field_name(&f);
        agree(&mut c9, &format!("{name} Hom table"), &d1, &c1.1);
        agree(&mut c9, &format!("{name} cokernel comparison"), &d2, &c2.1);
        agree(&mut c9, &format!("{name} triangulated checks"), &d4, &c4.1);
        for t in [t1, t2, t4] {
            c9.absorb(t);
        }
    }
    let results = [
        (&c1.0, "stable Hom of k[z]/z^mu is min depth, n = 2..8"),
        (&c2.0, "homotopy-category Hom equals stable Hom of cokernels, n <= 6"),
        (&c3, "Hom between Knoerrer images matches the catalogue, n = 2..4"),
        (&c4.0, "shift, cones, composites and rotation, n <= 5"),
        (&c5, "both triangle families certify, n <= 6 and n <= 5"),
        (&c6, "derivative null-homotopy on 100 random factorizations"),
        (&c7, "smooth fibers z^2 - 1 and z^3 - 3z"),
        (&c8, "stabilize and cokernel round trips, n <= 5"),
        (&c9, "criteria 1, 2, 4 over F_5 and F_101 agree with Q"),
    ];
    let mut all = true;
    for (i, (t, what)) in results.iter().enumerate() {
        report(i + 1, t, what);
        all &= t.pass();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
