//! JSON descriptors for codes.
//!
//! A descriptor names the field tower, the block profile and the generator
//! matrix. Codes built from a recipe also record the recipe and its parameters;
//! loading rebuilds them and checks the stored generator. Other codes load as
//! explicit codes (or Hamming-metric codes for `1×1` profiles). Writing a loaded
//! descriptor reproduces it byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{recipes, ConstructError, Construction, SumRankCode};
use crate::gf::{Field, GfError};
use crate::hamming::{CodeError, LinearCode};
use crate::matrix::Matrix;
use crate::spaces::{MatrixProfile, SpaceError};

pub const FORMAT: &str = "sumrank-code/1";

#[derive(Debug, Error)]
pub enum DescriptorError {
    #[error("malformed descriptor: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("unsupported descriptor format {0}")]
    Format(String),
    #[error("descriptor is inconsistent: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    /// Degree of each step of the tower over the previous field.
    pub tower: Vec<u32>,
    /// Modulus of each step, low degree first, coefficients as subfield indices.
    pub polynomials: Vec<Vec<u32>>,
}

impl FieldDescriptor {
    pub fn of(field: &Field) -> FieldDescriptor {
        FieldDescriptor { p: field.p() as u64, tower: field.tower_degrees(), polynomials: field.tower_polynomials() }
    }

    pub fn field(&self) -> Result<Field, GfError> {
        Field::tower(self.p, &self.tower, Some(&self.polynomials))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecipeDescriptor {
    pub name: String,
    pub params: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct CodeDescriptor {
    pub format: String,
    pub label: String,
    pub field: FieldDescriptor,
    pub blocks: Vec<[usize; 2]>,
    pub construction: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub recipe: Option<RecipeDescriptor>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub designed_distance: Option<usize>,
    pub dimension: usize,
    pub generator: Vec<Vec<u32>>,
}

impl CodeDescriptor {
    pub fn of(code: &SumRankCode) -> CodeDescriptor {
        let recipe = code.origin().map(|o| RecipeDescriptor { name: o.recipe.clone(), params: o.params.clone() });
        let construction = match (code.construction(), &recipe) {
            (c, Some(_)) => c.tag(),
            (Construction::HammingMetric { .. }, None) => "hamming",
            (_, None) => "explicit",
        };
        CodeDescriptor {
            format: FORMAT.to_string(),
            label: code.label().to_string(),
            field: FieldDescriptor::of(code.field()),
            blocks: code.profile().blocks().iter().map(|&(n, m)| [n, m]).collect(),
            construction: construction.to_string(),
            recipe,
            designed_distance: code.designed_distance(),
            dimension: code.dim(),
            generator: code.generator().to_rows(),
        }
    }

    pub fn build(&self) -> Result<SumRankCode, DescriptorError> {
        if self.format != FORMAT {
            return Err(DescriptorError::Format(self.format.clone()));
        }
        let field = self.field.field()?;
        let profile = MatrixProfile::new(&field, self.blocks.iter().map(|b| (b[0], b[1])).collect())?;
        let amb = profile.ambient_dim();
        if let Some(row) = self.generator.iter().find(|r| r.len() != amb) {
            return Err(DescriptorError::Inconsistent(format!("generator row of length {}, expected {amb}", row.len())));
        }
        let generator = Matrix::from_vec(self.generator.len(), amb, self.generator.concat());
        let code = match (&self.recipe, self.construction.as_str()) {
            (Some(r), _) => {
                let code = recipes::build(&r.name, &r.params)?;
                if code.construction().tag() != self.construction {
                    return Err(DescriptorError::Inconsistent(format!(
                        "recipe {} builds a {} code, descriptor says {}",
                        r.name,
                        code.construction().tag(),
                        self.construction
                    )));
                }
                if code.profile() != &profile || code.generator() != &generator {
                    return Err(DescriptorError::Inconsistent(format!("recipe {} does not reproduce the stored generator", r.name)));
                }
                code
            }
            (None, "hamming") => {
                if self.blocks.iter().any(|b| b != &[1, 1]) {
                    return Err(DescriptorError::Inconsistent("a Hamming-metric code needs 1x1 blocks".into()));
                }
                SumRankCode::hamming_metric(&LinearCode::from_generator(&field, generator.clone(), self.label.clone())?)?
            }
            (None, "explicit") => SumRankCode::explicit(&profile, &generator, self.label.clone())?,
            (None, other) => {
                return Err(DescriptorError::Inconsistent(format!("construction {other} needs a recipe")));
            }
        };
        if code.generator() != &generator {
            return Err(DescriptorError::Inconsistent("generator is not in reduced form".into()));
        }
        if code.dim() != self.dimension {
            return Err(DescriptorError::Inconsistent(format!("dimension {} recorded, generator has rank {}", self.dimension, code.dim())));
        }
        let mut code = code.with_label(self.label.clone());
        if let Some(d) = self.designed_distance {
            code = code.with_designed_distance(d);
        }
        Ok(code)
    }
}

pub fn to_json(code: &SumRankCode) -> String {
    let mut s = serde_json::to_string_pretty(&CodeDescriptor::of(code)).expect("descriptor serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<SumRankCode, DescriptorError> {
    serde_json::from_str::<CodeDescriptor>(text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, u64)]) -> BTreeMap<String, u64> {
        kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn recipe_round_trip_is_byte_equal() {
        let code = recipes::build("quasi-perfect-2xm", &params(&[("q", 2), ("m", 2), ("u", 2)])).unwrap();
        let text = to_json(&code);
        let back = from_json(&text).unwrap();
        assert_eq!(back.generator(), code.generator());
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn explicit_round_trip() {
        let f = Field::from_order(4).unwrap();
        let profile = MatrixProfile::new(&f, vec![(1, 2), (2, 2)]).unwrap();
        let g = Matrix::from_rows(&[vec![1, 2, 0, 3, 1, 1]]);
        let code = SumRankCode::explicit(&profile, &g, "x").unwrap();
        let text = to_json(&code);
        assert_eq!(to_json(&from_json(&text).unwrap()), text);
    }

    #[test]
    fn tampered_generator_rejected() {
        let code = recipes::build("almost-msrd-2x2", &params(&[("q", 2), ("t", 4)])).unwrap();
        let mut d = CodeDescriptor::of(&code);
        d.generator[0][0] ^= 1;
        assert!(matches!(d.build(), Err(DescriptorError::Inconsistent(_))));
        let mut d = CodeDescriptor::of(&code);
        d.format = "other".into();
        assert!(matches!(d.build(), Err(DescriptorError::Format(_))));
    }
}
