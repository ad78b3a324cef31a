//! JSON presentation format for finite-dimensional algebras.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "basis": ["e1", "e2"],
//!   "idempotents": [0, 1],
//!   "source": {},
//!   "target": {},
//!   "table": [[[[0, 1]], []], [[], [[1, 1]]]]
//! }
//! ```
//!
//! Basis indices are 0-based. `table[i][j]` lists `[index, coefficient]`
//! pairs for the product `b_i · b_j`. `source` and `target` map every
//! non-idempotent basis index (as a string key) to a vertex, where vertex `v`
//! is the idempotent `idempotents[v]`.

use std::collections::BTreeMap;
use std::path::Path;

use hochschild_core::hhalgebra::{builtin, AlgebraPresentation};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub idempotents: Vec<usize>,
    #[serde(default)]
    pub source: BTreeMap<usize, usize>,
    #[serde(default)]
    pub target: BTreeMap<usize, usize>,
    pub table: Vec<Vec<Vec<(usize, i64)>>>,
}

impl AlgebraFile {
    pub fn from_presentation(a: &AlgebraPresentation) -> Self {
        let d = a.dim();
        let (source, target) = a.grading_maps();
        Self {
            dim: d,
            basis: a.labels().to_vec(),
            idempotents: a.idempotents().to_vec(),
            source,
            target,
            table: (0..d)
                .map(|i| (0..d).map(|j| a.product(i, j).clone()).collect())
                .collect(),
        }
    }

    /// Shape checks only; the algebra axioms are checked by `validate`.
    pub fn to_presentation(&self) -> Result<AlgebraPresentation, CliError> {
        if self.basis.len() != self.dim {
            return Err(CliError::Invalid(format!(
                "\"dim\" is {} but \"basis\" has {} labels",
                self.dim,
                self.basis.len()
            )));
        }
        Ok(AlgebraPresentation::new(
            self.basis.clone(),
            self.table.clone(),
            self.idempotents.clone(),
            &self.source,
            &self.target,
        )?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentations serialize")
    }
}

/// Loads `builtin:NAME` or a JSON file.
pub fn load(source: &str) -> Result<AlgebraPresentation, CliError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return Ok(builtin(name)?);
    }
    read(Path::new(source))
}

pub fn read(path: &Path) -> Result<AlgebraPresentation, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let file: AlgebraFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Invalid(format!("cannot parse {}: {e}", path.display())))?;
    file.to_presentation()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_round_trip() {
        for name in hochschild_core::hhalgebra::BUILTIN_NAMES {
            let a = builtin(name).unwrap();
            let file = AlgebraFile::from_presentation(&a);
            let parsed: AlgebraFile = serde_json::from_str(&file.to_json()).unwrap();
            assert_eq!(parsed.to_presentation().unwrap(), a);
        }
    }

    #[test]
    fn shipped_fixture_is_the_builtin() {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/sl2-catO.json");
        assert_eq!(read(&path).unwrap(), builtin("sl2-catO").unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let mut file = AlgebraFile::from_presentation(&builtin("ground-field").unwrap());
        file.dim = 2;
        assert!(matches!(file.to_presentation(), Err(CliError::Invalid(_))));
    }
}
