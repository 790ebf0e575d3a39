//! Witness files: every certificate is written as factorization and morphism
//! files that `validate` re-checks.

use std::path::{Path, PathBuf};

use mfcat::io::{mf_to_string, morphism_to_string};
use mfcat::mfcat::{Homotopy, IsoWitness, MatrixFactorization, MfMorphism, TriangleWitness};

use crate::CliError;

pub struct WitnessDir {
    dir: PathBuf,
}

impl WitnessDir {
    pub fn create(dir: &Path) -> Result<Self, CliError> {
        std::fs::create_dir_all(dir)?;
        Ok(WitnessDir { dir: dir.to_path_buf() })
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.dir.join(name)
    }

    /// Writes `<name>.json` and returns the bare file name.
    pub fn mf(&self, name: &str, x: &MatrixFactorization) -> Result<String, CliError> {
        let file = format!("{name}.json");
        std::fs::write(self.dir.join(&file), mf_to_string(x))?;
        Ok(file)
    }

    /// Writes a morphism file whose ends are files in the same directory.
    pub fn morphism(
        &self,
        name: &str,
        f: &MfMorphism,
        source: &str,
        target: &str,
        homotopy: Option<&Homotopy>,
    ) -> Result<String, CliError> {
        let file = format!("{name}.json");
        std::fs::write(self.dir.join(&file), morphism_to_string(f, source, target, homotopy))?;
        Ok(file)
    }

    /// `u`, `v` and the two null-homotopic differences `v∘u − id`, `u∘v − id`.
    pub fn iso(&self, prefix: &str, w: &IsoWitness, x: &str, y: &str) -> Result<(), CliError> {
        self.morphism(&format!("{prefix}-u"), &w.u, x, y, None)?;
        self.morphism(&format!("{prefix}-v"), &w.v, y, x, None)?;
        let vu = w.v.compose(&w.u)?.try_sub(&MfMorphism::identity(w.u.source()))?;
        let uv = w.u.compose(&w.v)?.try_sub(&MfMorphism::identity(w.u.target()))?;
        self.morphism(&format!("{prefix}-vu"), &vu, x, x, Some(&w.vu))?;
        self.morphism(&format!("{prefix}-uv"), &uv, y, y, Some(&w.uv))?;
        Ok(())
    }

    /// All objects and maps of a certified triangle, plus the comparison
    /// isomorphism and the two commuting squares.
    pub fn triangle(&self, prefix: &str, w: &TriangleWitness) -> Result<String, CliError> {
        let x = self.mf(&format!("{prefix}-X"), w.f.source())?;
        let y = self.mf(&format!("{prefix}-Y"), w.f.target())?;
        let t = self.mf(&format!("{prefix}-T"), w.g.target())?;
        let x1 = self.mf(&format!("{prefix}-X1"), w.h.target())?;
        let c = self.mf(&format!("{prefix}-C"), &w.standard.cone)?;
        self.morphism(&format!("{prefix}-f"), &w.f, &x, &y, None)?;
        self.morphism(&format!("{prefix}-g"), &w.g, &y, &t, None)?;
        self.morphism(&format!("{prefix}-h"), &w.h, &t, &x1, None)?;
        self.iso(&format!("{prefix}-c"), &w.iso, &t, &c)?;
        let sq_g = w.iso.u.compose(&w.g)?.try_sub(&w.standard.g)?;
        let sq_h = w.standard.h.compose(&w.iso.u)?.try_sub(&w.h)?;
        self.morphism(&format!("{prefix}-square-g"), &sq_g, &y, &c, Some(&w.square_g))?;
        self.morphism(&format!("{prefix}-square-h"), &sq_h, &t, &x1, Some(&w.square_h))?;
        Ok(self.path(&format!("{prefix}-*")).display().to_string())
    }
}
