//! Builtin example arrangements.
//!
//! * `ceva6` — the complete quadrilateral spanned by a triangle and its
//!   medians: six lines over `Q`, four triple points, three double points.
//! * `hesse12` — the twelve lines through the nine inflection points of a
//!   smooth plane cubic, over `Q(zeta_3)`: nine quadruple points, twelve
//!   double points, four triangles.
//! * `dualhesse9` — the nine lines dual to the inflection points, over
//!   `Q(zeta_3)`: twelve triple points and no double points.

use super::{line_from_strs, ArrError, Arrangement};

pub const BUILTIN_NAMES: [&str; 3] = ["ceva6", "dualhesse9", "hesse12"];

fn build(name: &str, order: u32, coeffs: &[[&str; 3]]) -> Result<Arrangement, ArrError> {
    let lines = coeffs
        .iter()
        .map(|c| line_from_strs(order, *c))
        .collect::<Result<Vec<_>, _>>()?;
    Arrangement::new(name, order, lines)
}

/// Returns a builtin arrangement by name.
pub fn builtin_arrangement(name: &str) -> Result<Arrangement, ArrError> {
    match name {
        "ceva6" => build(
            name,
            1,
            &[
                ["1", "0", "0"],
                ["0", "1", "0"],
                ["1", "-1", "0"],
                ["1", "1", "-1"],
                ["1", "2", "-1"],
                ["2", "1", "-1"],
            ],
        ),
        "hesse12" => build(
            name,
            3,
            &[
                ["1", "0", "0"],
                ["0", "1", "0"],
                ["0", "0", "1"],
                ["1", "1", "1"],
                ["1", "z", "z^2"],
                ["1", "z^2", "z"],
                ["1", "1", "z"],
                ["1", "z", "1"],
                ["1", "z^2", "z^2"],
                ["1", "1", "z^2"],
                ["1", "z", "z"],
                ["1", "z^2", "1"],
            ],
        ),
        "dualhesse9" => build(
            name,
            3,
            &[
                ["0", "1", "-1"],
                ["1", "0", "-1"],
                ["1", "-1", "0"],
                ["0", "z", "-1"],
                ["z", "0", "-1"],
                ["z", "-1", "0"],
                ["0", "z^2", "-1"],
                ["z^2", "0", "-1"],
                ["z^2", "-1", "0"],
            ],
        ),
        other => Err(ArrError::UnknownBuiltin(other.to_string())),
    }
}
