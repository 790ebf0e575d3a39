use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use mfcat::andyn::{an_hom_dim, an_verify, Catalogue};
use mfcat::io::{mf_to_string, module_to_string, read_mf, read_module, read_morphism};
use mfcat::mfcat::{
    default_hom_bound, graded_hom, hom_estimate_bounded, MatrixFactorization, MfMorphism, SearchPolicy,
    StandardTriangle,
};
use mfcat::polyring::{Poly, RingContext};
use mfcat::quotmod::{cok, critical_values, stable_hom};

use crate::witness::WitnessDir;
use crate::{Cli, CliError, Command, Pairs};

/// Text for stdout, and whether every reported check passed.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, pass: true }
    }
}

const BOUND_VAR: &str = "MFCAT_DEFAULT_BOUND";

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Shift { mf } => emit(out, mf_to_string(&read_mf(mf)?.shift())),
        Command::Cone { morphism } => {
            let f = read_morphism(morphism)?.morphism;
            emit(out, mf_to_string(&StandardTriangle::of(&f)?.cone))
        }
        Command::Knorrer { mf, x, y } => emit(out, mf_to_string(&read_mf(mf)?.knorrer(x, y)?)),
        Command::Hom { source, target, bound, bounded, window, .. } => {
            let policy = if let Some(d) = bound {
                SearchPolicy::Bounded(Some(*d))
            } else if *bounded {
                SearchPolicy::Bounded(env_bound()?)
            } else {
                SearchPolicy::Graded { window: *window }
            };
            hom(source, target, &policy, out)
        }
        Command::StableHom { source, target } => {
            let s = stable_hom(&read_module(source)?, &read_module(target)?)?;
            Ok(Output::ok(format!("hom\t{}\nstable\t{}\n", s.hom.len(), s.dim())))
        }
        Command::Cok { mf } => emit(out, module_to_string(&cok(&read_mf(mf)?)?)),
        Command::Stabilize { module } => emit(out, mf_to_string(&read_module(module)?.stabilize()?)),
        Command::Decompose { module } => {
            let m = read_module(module)?;
            let mut text = format!("dim\t{}\n", m.dim());
            for (mu, mult) in m.decompose()? {
                writeln!(text, "V{mu}\t{mult}").unwrap();
            }
            Ok(Output::ok(text))
        }
        Command::CriticalValues { w, var } => {
            let ring = RingContext::univariate(cli.field.clone(), var);
            let cv = critical_values(&Poly::parse(w, &ring)?)?;
            let mut text = String::new();
            for c in &cv.rational {
                writeln!(text, "value\t{c}").unwrap();
            }
            writeln!(text, "irrational-degree\t{}", cv.other_degree).unwrap();
            writeln!(text, "resultant\t{}", cv.resultant).unwrap();
            Ok(Output::ok(text))
        }
        Command::AnTable { n, csv } => an_table(*n, *csv),
        Command::AnVerify { n } => {
            let report = an_verify(&cli.field, *n, &SearchPolicy::default())?;
            let dir = out.map(WitnessDir::create).transpose()?;
            let mut text = String::new();
            for (i, c) in report.checks.iter().enumerate() {
                let path = match (&dir, &c.witness) {
                    (Some(d), Some(w)) => d.triangle(&format!("{}-{i:03}", c.name), w)?,
                    _ => "-".into(),
                };
                writeln!(text, "{c}\t{path}").unwrap();
            }
            let failed = report.failures().count();
            writeln!(text, "summary\tn={n}\tchecks={}\tfailed={failed}", report.checks.len()).unwrap();
            Ok(Output { text, pass: failed == 0 })
        }
        Command::VerifyKnorrer { n, pairs } => verify_knorrer(cli, *n, *pairs, out),
    }
}

fn env_bound() -> Result<Option<u32>, CliError> {
    match std::env::var(BOUND_VAR) {
        Ok(v) => v.trim().parse().map(Some).map_err(|e| CliError::Usage(format!("{BOUND_VAR}={v:?}: {e}"))),
        Err(_) => Ok(None),
    }
}

/// Writes an object to `--out`, or returns it for stdout.
fn emit(out: Option<&Path>, body: String) -> Result<Output, CliError> {
    match out {
        Some(p) => {
            std::fs::write(p, body)?;
            Ok(Output::ok(format!("wrote\t{}\n", p.display())))
        }
        None => Ok(Output::ok(body)),
    }
}

fn validate(file: &Path) -> Result<Output, CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    let keys: Vec<String> = match serde_json::from_str::<serde_json::Value>(&text) {
        Ok(serde_json::Value::Object(map)) => map.keys().cloned().collect(),
        // Falls through to the factorization reader, which reports the position.
        _ => Vec::new(),
    };
    let has = |k: &str| keys.iter().any(|x| x == k);
    if has("f1") || has("f0") {
        let m = read_morphism(file)?;
        let f = &m.morphism;
        let mut out = format!("morphism\tvalid\t{}x{}\n", f.target().rank(), f.source().rank());
        if let Some(h) = &m.homotopy {
            h.check(f)?;
            out.push_str("homotopy\tvalid\n");
        }
        Ok(Output::ok(out))
    } else if has("Z") {
        let m = read_module(file)?;
        Ok(Output::ok(format!("module\tvalid\tdim={}\tW={}\n", m.dim(), m.w())))
    } else {
        let x = read_mf(file)?;
        Ok(Output::ok(format!("mf\tvalid\trank={}\tW={}\n", x.rank(), x.unshifted_w())))
    }
}

fn hom(source: &Path, target: &Path, policy: &SearchPolicy, out: Option<&Path>) -> Result<Output, CliError> {
    policy.check()?;
    let x = read_mf(source)?;
    let y = read_mf(target)?;
    let mut text = String::new();
    let reps: Vec<(i64, MfMorphism)> = match policy {
        SearchPolicy::Graded { window } => {
            let g = graded_hom(&x, &y, *window)?;
            writeln!(text, "dim\t{}", g.dim).unwrap();
            writeln!(text, "policy\tgraded\twindow={window}").unwrap();
            writeln!(text, "certified\tyes").unwrap();
            let examined: Vec<String> = g.examined.iter().map(|e| e.to_string()).collect();
            writeln!(text, "examined\t{}", examined.join(",")).unwrap();
            for (e, d) in &g.by_degree {
                writeln!(text, "degree\t{e}\t{d}").unwrap();
            }
            g.representatives
        }
        SearchPolicy::Bounded(b) => {
            let bound = b.unwrap_or_else(|| default_hom_bound(&x, &y));
            let (dim, reps) = hom_estimate_bounded(&x, &y, bound)?;
            writeln!(text, "dim\t{dim}").unwrap();
            writeln!(text, "policy\tbounded\tbound={bound}").unwrap();
            writeln!(text, "certified\tno").unwrap();
            reps.into_iter().map(|f| (0, f)).collect()
        }
    };
    if let Some(dir) = out {
        let dir = WitnessDir::create(dir)?;
        let s = dir.mf("source", &x)?;
        let t = dir.mf("target", &y)?;
        for (i, (_, f)) in reps.iter().enumerate() {
            let name = dir.morphism(&format!("rep-{i}"), f, &s, &t, None)?;
            writeln!(text, "witness\t{}", dir.path(&name).display()).unwrap();
        }
    }
    Ok(Output::ok(text))
}

fn an_table(n: usize, csv: bool) -> Result<Output, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("n must be at least 2, got {n}")));
    }
    let mut text = String::new();
    if csv {
        let head: Vec<String> = (1..n).map(|nu| format!("V{nu}")).collect();
        writeln!(text, "mu,{}", head.join(",")).unwrap();
    }
    for mu in 1..n {
        let row = (1..n).map(|nu| an_hom_dim(n, mu, nu).map(|d| d.to_string())).collect::<Result<Vec<_>, _>>()?;
        if csv {
            writeln!(text, "V{mu},{}", row.join(",")).unwrap();
        } else {
            writeln!(text, "{}", row.join(" ")).unwrap();
        }
    }
    Ok(Output::ok(text))
}

fn verify_knorrer(cli: &Cli, n: usize, pairs: Pairs, out: Option<&Path>) -> Result<Output, CliError> {
    let cat = Catalogue::new(&cli.field, n)?;
    let images = (1..n).map(|mu| cat.object(mu).knorrer("x", "y")).collect::<Result<Vec<MatrixFactorization>, _>>()?;
    let dir = out.map(WitnessDir::create).transpose()?;
    let names: Vec<String> = match &dir {
        Some(d) => (1..n).map(|mu| d.mf(&format!("K{mu}"), &images[mu - 1])).collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    let window = match SearchPolicy::default() {
        SearchPolicy::Graded { window } => window,
        SearchPolicy::Bounded(_) => unreachable!("default policy is graded"),
    };
    let mut text = String::new();
    let mut failed = 0;
    let mut total = 0;
    for mu in 1..n {
        for nu in 1..n {
            if pairs == Pairs::Diag && mu != nu {
                continue;
            }
            let g = graded_hom(&images[mu - 1], &images[nu - 1], window)?;
            let expected = an_hom_dim(n, mu, nu)?;
            let pass = g.dim == expected;
            total += 1;
            failed += usize::from(!pass);
            let witness: PathBuf = match &dir {
                Some(d) => {
                    for (i, (_, f)) in g.representatives.iter().enumerate() {
                        d.morphism(&format!("K-{mu}-{nu}-rep-{i}"), f, &names[mu - 1], &names[nu - 1], None)?;
                    }
                    d.path(&format!("K-{mu}-{nu}-rep-*"))
                }
                None => PathBuf::from("-"),
            };
            writeln!(
                text,
                "knorrer-hom\tn={n} mu={mu} nu={nu}\t{}\tdim={} expected={expected}\t{}",
                if pass { "PASS" } else { "FAIL" },
                g.dim,
                witness.display()
            )
            .unwrap();
        }
    }
    writeln!(text, "summary\tn={n}\tchecks={total}\tfailed={failed}").unwrap();
    Ok(Output { text, pass: failed == 0 })
}
