//! Loader for surface-definition files: UTF-8 TOML with one `[[surface]]`
//! table per surface and keys `name`, `rank`, `gram` (row-major integers),
//! `canonical`, `chi`, `effective_generators`. Loaded surfaces carry the
//! user-asserted flag: lattice shape is validated here, the existence of a
//! real surface with that lattice is not.

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use crate::lattice::SurfaceLattice;
use crate::{Error, Result};

#[derive(Debug, Deserialize)]
struct FileRoot {
    #[serde(default)]
    surface: Vec<SurfaceDef>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceDef {
    name: String,
    rank: usize,
    /// Row-major, `rank * rank` entries.
    gram: Vec<i64>,
    canonical: Vec<i64>,
    chi: i64,
    effective_generators: Vec<Vec<i64>>,
}

/// Parse every surface record in the given file text.
pub fn parse_surfaces(text: &str) -> Result<Vec<Arc<SurfaceLattice>>> {
    let root: FileRoot = toml::from_str(text)
        .map_err(|e| Error::SurfaceFile(format!("not a valid surface file: {e}")))?;
    let mut out = Vec::with_capacity(root.surface.len());
    for def in root.surface {
        let expected = def
            .rank
            .checked_mul(def.rank)
            .ok_or_else(|| Error::SurfaceFile(format!("surface {}: rank overflow", def.name)))?;
        if def.gram.len() != expected {
            return Err(Error::SurfaceFile(format!(
                "surface {}: gram has {} entries, rank {} needs {expected}",
                def.name,
                def.gram.len(),
                def.rank
            )));
        }
        if def.rank == 0 {
            return Err(Error::SurfaceFile(format!(
                "surface {}: rank must be positive",
                def.name
            )));
        }
        let rows: Vec<Vec<i64>> = def.gram.chunks(def.rank).map(|r| r.to_vec()).collect();
        let lattice = SurfaceLattice::new(
            def.name.clone(),
            rows,
            def.canonical,
            def.chi,
            def.effective_generators,
            true,
        )
        .map_err(|e| Error::SurfaceFile(format!("surface {}: {e}", def.name)))?;
        if out
            .iter()
            .any(|s: &Arc<SurfaceLattice>| s.name == lattice.name)
        {
            return Err(Error::SurfaceFile(format!(
                "duplicate surface name {}",
                lattice.name
            )));
        }
        out.push(lattice);
    }
    Ok(out)
}

/// Read and parse a surface-definition file from disk.
pub fn load_surfaces(path: &Path) -> Result<Vec<Arc<SurfaceLattice>>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::SurfaceFile(format!("cannot read {}: {e}", path.display())))?;
    parse_surfaces(&text)
}

/// Pick a surface by name from a loaded file.
pub fn find_surface(
    surfaces: &[Arc<SurfaceLattice>],
    name: &str,
) -> Result<Arc<SurfaceLattice>> {
    surfaces
        .iter()
        .find(|s| s.name == name)
        .cloned()
        .ok_or_else(|| {
            let known: Vec<&str> = surfaces.iter().map(|s| s.name.as_str()).collect();
            Error::SurfaceFile(format!(
                "no surface named {name} in file (available: {})",
                known.join(", ")
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
        [[surface]]
        name = "plane-copy"
        rank = 1
        gram = [1]
        canonical = [-3]
        chi = 1
        effective_generators = [[1]]

        [[surface]]
        name = "hirzebruch-like"
        rank = 2
        gram = [0, 1, 1, -2]
        canonical = [-2, -1]
        chi = 1
        effective_generators = [[1, 0], [0, 1]]
    "#;

    #[test]
    fn parses_records_and_flags_them_user_asserted() {
        let surfaces = parse_surfaces(SAMPLE).unwrap();
        assert_eq!(surfaces.len(), 2);
        assert!(surfaces.iter().all(|s| s.user_asserted));
        let h = find_surface(&surfaces, "hirzebruch-like").unwrap();
        assert_eq!(h.gram[1][1], -2);
        assert!(matches!(
            find_surface(&surfaces, "absent"),
            Err(Error::SurfaceFile(_))
        ));
    }

    #[test]
    fn gram_length_must_match_rank() {
        let text = r#"
            [[surface]]
            name = "short"
            rank = 2
            gram = [0, 1, 1]
            canonical = [0, 0]
            chi = 1
            effective_generators = [[1, 0]]
        "#;
        assert!(matches!(parse_surfaces(text), Err(Error::SurfaceFile(_))));
    }

    #[test]
    fn asymmetric_gram_is_rejected() {
        let text = r#"
            [[surface]]
            name = "skew"
            rank = 2
            gram = [0, 1, 2, 0]
            canonical = [0, 0]
            chi = 1
            effective_generators = [[1, 0]]
        "#;
        assert!(matches!(parse_surfaces(text), Err(Error::SurfaceFile(_))));
    }

    #[test]
    fn unknown_keys_and_duplicates_are_rejected() {
        let unknown = r#"
            [[surface]]
            name = "extra"
            rank = 1
            gram = [1]
            canonical = [-3]
            chi = 1
            effective_generators = [[1]]
            comment = "not a key"
        "#;
        assert!(matches!(parse_surfaces(unknown), Err(Error::SurfaceFile(_))));
        let twice = r#"
            [[surface]]
            name = "dup"
            rank = 1
            gram = [1]
            canonical = [-3]
            chi = 1
            effective_generators = [[1]]

            [[surface]]
            name = "dup"
            rank = 1
            gram = [1]
            canonical = [-3]
            chi = 1
            effective_generators = [[1]]
        "#;
        assert!(matches!(parse_surfaces(twice), Err(Error::SurfaceFile(_))));
    }

    #[test]
    fn empty_file_is_an_empty_catalog() {
        assert!(parse_surfaces("").unwrap().is_empty());
    }
}
