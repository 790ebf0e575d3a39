//! JSON file formats for factorizations, morphisms and modules.
//!
//! Polynomials are stored as strings in the canonical printed form, so a
//! round trip through a file is byte-stable.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mfcat::{Homotopy, MatrixFactorization, MfError, MfMorphism};
use crate::polyring::{Field, Mat, Poly, PolyError, PolyMatrix, Ring, RingContext};
use crate::quotmod::{QmError, QuotModule};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: line {line}, column {column}: {message}")]
    Json { path: String, line: usize, column: usize, message: String },
    #[error("{path}: {what}: {source}")]
    Poly { path: String, what: String, source: PolyError },
    #[error("{path}: {source}")]
    Mf { path: String, source: MfError },
    #[error("{path}: {source}")]
    Qm { path: String, source: QmError },
    #[error("{path}: {message}")]
    Shape { path: String, message: String },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MfFile {
    pub field: Field,
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    #[serde(default = "zero_string")]
    pub w0: String,
    #[serde(rename = "W")]
    pub w: String,
    pub rank: usize,
    pub p1: Vec<Vec<String>>,
    pub p0: Vec<Vec<String>>,
}

fn zero_string() -> String {
    "0".into()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismFile {
    pub source: String,
    pub target: String,
    pub f1: Vec<Vec<String>>,
    pub f0: Vec<Vec<String>>,
    /// When present, `(f1, f0) = D(s, t)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleFile {
    pub field: Field,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub var: Option<String>,
    #[serde(rename = "W")]
    pub w: String,
    pub dim: usize,
    #[serde(rename = "Z")]
    pub z: Vec<Vec<String>>,
}

fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.display().to_string(), source })
}

fn json<T: for<'de> Deserialize<'de>>(path: &str, text: &str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Json {
        path: path.into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types serialize");
    s.push('\n');
    s
}

/// Parses a shape-checked matrix; `cols` matters only when there are no rows.
fn matrix(ring: &Ring, rows: &[Vec<String>], cols: usize, path: &str, what: &str) -> Result<PolyMatrix, IoError> {
    if rows.is_empty() {
        return Ok(PolyMatrix::zero(ring, 0, cols));
    }
    let refs: Vec<Vec<&str>> = rows.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
    PolyMatrix::parse(ring, &refs).map_err(perr(path, what))
}

fn perr(path: &str, what: &str) -> impl FnOnce(PolyError) -> IoError {
    let (path, what) = (path.to_string(), what.to_string());
    move |source| IoError::Poly { path, what, source }
}

fn square(rows: &[Vec<String>], rank: usize, path: &str, what: &str) -> Result<(), IoError> {
    if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
        return Err(IoError::Shape { path: path.into(), message: format!("{what} is not {rank}x{rank}") });
    }
    Ok(())
}

impl MfFile {
    pub fn from_mf(x: &MatrixFactorization) -> Self {
        let ring = x.ring();
        MfFile {
            field: ring.field().clone(),
            vars: ring.vars().to_vec(),
            weights: ring.weights().map(<[u32]>::to_vec),
            w0: ring.w0().to_string(),
            w: x.unshifted_w().to_string(),
            rank: x.rank(),
            p1: x.p1().rows_as_strings(),
            p0: x.p0().rows_as_strings(),
        }
    }

    pub fn ring(&self, path: &str) -> Result<Ring, IoError> {
        let mut ctx = RingContext::new(self.field.clone(), &self.vars).map_err(perr(path, "vars"))?;
        if let Some(w) = &self.weights {
            ctx = ctx.with_weights(w.clone()).map_err(perr(path, "weights"))?;
        }
        let w0 = self.field.parse_scalar(&self.w0).map_err(perr(path, "w0"))?;
        Ok(ctx.with_w0(w0).map_err(perr(path, "w0"))?.build())
    }

    pub fn to_mf(&self, path: &str) -> Result<MatrixFactorization, IoError> {
        let ring = self.ring(path)?;
        let w = Poly::parse(&self.w, &ring).map_err(perr(path, "W"))?;
        square(&self.p1, self.rank, path, "p1")?;
        square(&self.p0, self.rank, path, "p0")?;
        let p1 = matrix(&ring, &self.p1, self.rank, path, "p1")?;
        let p0 = matrix(&ring, &self.p0, self.rank, path, "p0")?;
        MatrixFactorization::new(&w, p1, p0).map_err(|source| IoError::Mf { path: path.into(), source })
    }
}

pub fn mf_from_str(text: &str, path: &str) -> Result<MatrixFactorization, IoError> {
    json::<MfFile>(path, text)?.to_mf(path)
}

pub fn read_mf(path: &Path) -> Result<MatrixFactorization, IoError> {
    mf_from_str(&read(path)?, &path.display().to_string())
}

pub fn mf_to_string(x: &MatrixFactorization) -> String {
    to_pretty(&MfFile::from_mf(x))
}

/// A morphism read from disk, with the null-homotopy it carries if any.
#[derive(Clone, Debug)]
pub struct LoadedMorphism {
    pub morphism: MfMorphism,
    pub homotopy: Option<Homotopy>,
    pub source_path: PathBuf,
    pub target_path: PathBuf,
}

pub fn read_morphism(path: &Path) -> Result<LoadedMorphism, IoError> {
    let p = path.display().to_string();
    let file: MorphismFile = json(&p, &read(path)?)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let (sp, tp) = (dir.join(&file.source), dir.join(&file.target));
    let source = read_mf(&sp)?;
    let target = read_mf(&tp)?;
    let ring = source.ring().clone();
    let shape = |rows: &[Vec<String>], r: usize, c: usize, what: &str| {
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            Err(IoError::Shape { path: p.clone(), message: format!("{what} is not {r}x{c}") })
        } else {
            Ok(())
        }
    };
    let (m, n) = (target.rank(), source.rank());
    shape(&file.f1, m, n, "f1")?;
    shape(&file.f0, m, n, "f0")?;
    let f1 = matrix(&ring, &file.f1, n, &p, "f1")?;
    let f0 = matrix(&ring, &file.f0, n, &p, "f0")?;
    let morphism =
        MfMorphism::new(&source, &target, f1, f0).map_err(|source| IoError::Mf { path: p.clone(), source })?;
    let homotopy = match (&file.s, &file.t) {
        (None, None) => None,
        (Some(s), Some(t)) => {
            shape(s, m, n, "s")?;
            shape(t, m, n, "t")?;
            Some(Homotopy { s: matrix(&ring, s, n, &p, "s")?, t: matrix(&ring, t, n, &p, "t")? })
        }
        _ => return Err(IoError::Shape { path: p, message: "a homotopy needs both s and t".into() }),
    };
    Ok(LoadedMorphism { morphism, homotopy, source_path: sp, target_path: tp })
}

pub fn morphism_to_string(f: &MfMorphism, source: &str, target: &str, homotopy: Option<&Homotopy>) -> String {
    to_pretty(&MorphismFile {
        source: source.into(),
        target: target.into(),
        f1: f.f1().rows_as_strings(),
        f0: f.f0().rows_as_strings(),
        s: homotopy.map(|h| h.s.rows_as_strings()),
        t: homotopy.map(|h| h.t.rows_as_strings()),
    })
}

impl ModuleFile {
    pub fn from_module(m: &QuotModule) -> Self {
        let var = &m.ring().vars()[0];
        ModuleFile {
            field: m.field().clone(),
            var: (var != "z").then(|| var.clone()),
            w: m.w().to_string(),
            dim: m.dim(),
            z: (0..m.dim()).map(|i| m.z().row(i).iter().map(|c| c.to_string()).collect()).collect(),
        }
    }

    pub fn to_module(&self, path: &str) -> Result<QuotModule, IoError> {
        let ring = RingContext::univariate(self.field.clone(), self.var.as_deref().unwrap_or("z"));
        let w = Poly::parse(&self.w, &ring).map_err(perr(path, "W"))?;
        square(&self.z, self.dim, path, "Z")?;
        let rows = self
            .z
            .iter()
            .map(|r| r.iter().map(|c| self.field.parse_scalar(c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(perr(path, "Z"))?;
        let z = Mat::from_rows(&self.field, rows);
        QuotModule::new(&w, z).map_err(|source| IoError::Qm { path: path.into(), source })
    }
}

pub fn module_from_str(text: &str, path: &str) -> Result<QuotModule, IoError> {
    json::<ModuleFile>(path, text)?.to_module(path)
}

pub fn read_module(path: &Path) -> Result<QuotModule, IoError> {
    module_from_str(&read(path)?, &path.display().to_string())
}

pub fn module_to_string(m: &QuotModule) -> String {
    to_pretty(&ModuleFile::from_module(m))
}
