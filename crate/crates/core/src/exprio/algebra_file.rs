use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::coeff::{RingDoc, RingSpec, Scalar};
use crate::error::{Error, Result};
use crate::findim::StructureAlgebra;

/// A coefficient as written in a file: a string such as `"-1/2"` or a JSON
/// integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffDoc {
    Int(i64),
    Text(String),
}

impl CoeffDoc {
    fn scalar(&self, ring: RingSpec) -> Result<Scalar> {
        match self {
            CoeffDoc::Int(n) => Ok(ring.from_int(*n)),
            CoeffDoc::Text(s) => ring.parse_scalar(s),
        }
    }
}

/// Wire form of a finite-dimensional algebra:
/// `{"dim", "ring", "sc": [[i,j,k,c]...], "unit", "generators": {name: coords}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub ring: RingDoc,
    pub sc: Vec<(usize, usize, usize, CoeffDoc)>,
    pub unit: Vec<CoeffDoc>,
    /// Declaration order is kept.
    pub generators: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<AlgebraFile> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// Checks the schema, the unit axiom and associativity.
    pub fn validate(&self) -> Result<StructureAlgebra> {
        let ring = self.ring.to_ring()?;
        let coords = |what: &str, v: &[CoeffDoc]| -> Result<Vec<Scalar>> {
            if v.len() != self.dim {
                return Err(Error::Schema(format!(
                    "{what} has {} coordinates, expected {}",
                    v.len(),
                    self.dim
                )));
            }
            v.iter().map(|c| c.scalar(ring)).collect()
        };
        let sc = self
            .sc
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, c.scalar(ring)?)))
            .collect::<Result<Vec<_>>>()?;
        let unit = coords("unit", &self.unit)?;
        let mut gens = Vec::new();
        for (name, v) in &self.generators {
            let v: Vec<CoeffDoc> =
                serde_json::from_value(v.clone()).map_err(|e| Error::Schema(format!("generator {name:?}: {e}")))?;
            gens.push((name.clone(), coords(&format!("generator {name:?}"), &v)?));
        }
        let a = StructureAlgebra::new(ring, self.dim, sc, unit, gens)?;
        match &self.basis_names {
            Some(names) => a.with_basis_names(names.clone()),
            None => Ok(a),
        }
    }

    pub fn from_algebra(a: &StructureAlgebra) -> AlgebraFile {
        let doc = |v: &[Scalar]| v.iter().map(|c| CoeffDoc::Text(c.to_string())).collect::<Vec<_>>();
        let generators = a
            .generators()
            .iter()
            .map(|(name, e)| (name.clone(), serde_json::to_value(doc(e.coords())).expect("plain data")))
            .collect();
        AlgebraFile {
            dim: a.dim(),
            ring: RingDoc::from_ring(&a.ring()),
            sc: a
                .structure_constants()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, CoeffDoc::Text(c.to_string())))
                .collect(),
            unit: doc(a.unit().coords()),
            generators,
            basis_names: Some(a.basis_names().to_vec()),
        }
    }
}

/// Reads and validates an algebra file.
pub fn load_algebra(path: impl AsRef<Path>) -> Result<StructureAlgebra> {
    let text = std::fs::read_to_string(path)?;
    AlgebraFile::from_json(&text)?.validate()
}
