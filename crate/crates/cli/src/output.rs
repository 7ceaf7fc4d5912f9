use std::fs;
use std::io::Write;
use std::path::Path;

use fvpg::mesh::{read_mesh, Triangulation};

use crate::args::{Levels, MeshSource};
use crate::failure::Failure;

/// Writes to `path`, or to stdout if `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::input(format!("stdout: {e}")))
        }
    }
}

pub fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

pub fn read_mesh_file(path: &Path) -> Result<Triangulation<f64>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    read_mesh(&text).map_err(|e| Failure::mesh(&path.display().to_string(), e))
}

/// Loads `--mesh`, or generates `--domain` at a single `--levels` value.
pub fn load(source: &MeshSource, levels: Levels) -> Result<(String, Triangulation<f64>), Failure> {
    if let Some(path) = &source.mesh {
        return Ok((path.display().to_string(), read_mesh_file(path)?));
    }
    let domain = source.domain.expect("clap enforces one mesh source");
    let level = levels
        .single()
        .ok_or_else(|| Failure::input("--levels must be a single level for a generated mesh"))?;
    Ok((format!("{domain} level {level}"), domain.generate(level)))
}

/// Scientific notation with 17 significant digits.
pub fn sci(v: f64) -> String {
    format!("{v:.16e}")
}
