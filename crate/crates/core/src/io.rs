//! JSON file formats. Rationals are written as `"p/q"` strings (integers
//! may also be bare numbers); indices are 0-based.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::Vector;
use crate::filtration::WeightedFlag;
use crate::geom::{SheafClass, SurfaceModel};
use crate::liecore::{LieAlgebraFile, Subspace};

/// Parses JSON, reporting the line and column of the first problem.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

/// Pretty, deterministic JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("library types serialize")
}

/// Flag file: `{ "weights": [...], "steps": [[row, ...], ...] }`, with an
/// optional `"algebra"` in the Lie-algebra format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FlagFile {
    pub weights: Vec<i64>,
    pub steps: Vec<Vec<Vector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<LieAlgebraFile>,
}

impl FlagFile {
    pub fn ambient_dim(&self) -> Result<usize> {
        self.steps
            .last()
            .and_then(|s| s.first())
            .map(Vec::len)
            .ok_or_else(|| Error::Parse("flag needs a nonempty last step".into()))
    }

    pub fn build(&self) -> Result<WeightedFlag> {
        let n = self.ambient_dim()?;
        let steps = self.steps.iter().map(|rows| Subspace::span(n, rows)).collect::<Result<Vec<_>>>()?;
        WeightedFlag::new(self.weights.clone(), steps)
    }
}

/// Split sheaf `⊕ summands` on a surface.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitSheafFile {
    pub surface: SurfaceModel,
    pub summands: Vec<SheafClass>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::{sl, LieAlgebra};
    use crate::stability::{example2_model, GSheafModel};

    #[test]
    fn algebra_round_trip() {
        let g = sl(3).unwrap();
        let back: LieAlgebra = from_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn model_round_trip() {
        let m = example2_model(3, -5).unwrap();
        let back: GSheafModel = from_json(&to_json(&m)).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn flag_file() {
        let text = r#"{ "weights": [-1, 0, 1], "steps": [[["0", "1", "0"]], [[0, 1, 0], ["1", 0, 0]], [[1, 0, 0], [0, 1, 0], [0, 0, "1/2"]]] }"#;
        let f: FlagFile = from_json(text).unwrap();
        let flag = f.build().unwrap();
        assert_eq!(flag.piece_dims(), vec![1, 1, 1]);
        let direct: WeightedFlag = from_json(text).unwrap();
        assert_eq!(direct, flag);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = from_json::<FlagFile>("{\n \"weights\": [1,\n").unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.starts_with("line")));
        assert!(from_json::<LieAlgebra>(r#"{"dim": 3, "constants": [[1, 0, 2, "1"]]}"#).is_err());
    }
}
