//! JSON document format for arrangements.
//!
//! ```json
//! {
//!   "name": "ceva6",
//!   "cyclotomic_order": 1,
//!   "lines": [["1", "0", "0"], ["0", "1", "0"], ...]
//! }
//! ```
//!
//! Each line is a triple of coefficient strings in the field-element
//! grammar. Serialization emits canonical coefficient strings, so a
//! round-trip reproduces the arrangement exactly.

use serde::{Deserialize, Serialize};

use super::{line_from_strs, ArrError, Arrangement};

#[derive(Serialize, Deserialize)]
struct RawArrangement {
    name: String,
    cyclotomic_order: u32,
    lines: Vec<[String; 3]>,
}

pub fn arrangement_from_json(text: &str) -> Result<Arrangement, ArrError> {
    let raw: RawArrangement =
        serde_json::from_str(text).map_err(|e| ArrError::Format(e.to_string()))?;
    let lines = raw
        .lines
        .iter()
        .map(|c| line_from_strs(raw.cyclotomic_order, [&c[0], &c[1], &c[2]]))
        .collect::<Result<Vec<_>, _>>()?;
    Arrangement::new(raw.name, raw.cyclotomic_order, lines)
}

pub fn arrangement_to_json(arr: &Arrangement) -> String {
    let raw = RawArrangement {
        name: arr.name().to_string(),
        cyclotomic_order: arr.order(),
        lines: arr
            .lines()
            .iter()
            .map(|l| {
                let c = l.coeffs();
                [c[0].to_string(), c[1].to_string(), c[2].to_string()]
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("serializable document")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{builtin_arrangement, BUILTIN_NAMES};

    #[test]
    fn builtins_roundtrip_through_json() {
        for name in BUILTIN_NAMES {
            let arr = builtin_arrangement(name).unwrap();
            let text = arrangement_to_json(&arr);
            let back = arrangement_from_json(&text).unwrap();
            assert_eq!(arr, back, "{name}");
        }
    }

    #[test]
    fn document_errors_are_reported() {
        assert!(matches!(
            arrangement_from_json("{"),
            Err(ArrError::Format(_))
        ));
        // Bad coefficient string inside a structurally valid document.
        let doc = r#"{"name":"x","cyclotomic_order":3,"lines":[["1","0","0"],["q","1","0"]]}"#;
        assert!(matches!(
            arrangement_from_json(doc),
            Err(ArrError::Field(_))
        ));
        // Coincident lines (up to scale).
        let doc = r#"{"name":"x","cyclotomic_order":1,"lines":[["1","0","0"],["-2","0","0"]]}"#;
        assert!(matches!(
            arrangement_from_json(doc),
            Err(ArrError::DuplicateLine(0, 1))
        ));
    }

    #[test]
    fn coefficients_serialize_canonically() {
        let arr = builtin_arrangement("hesse12").unwrap();
        let text = arrangement_to_json(&arr);
        // z^2 is reduced on the power basis of Q(zeta_3) to -1 - z.
        assert!(text.contains("\"-1 - z\""));
        assert!(text.contains("\"cyclotomic_order\": 3"));
        assert!(!text.contains("z^2"));
    }
}
