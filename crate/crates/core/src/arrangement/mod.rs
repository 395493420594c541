//! Line arrangements in `P^2` and their intersection lattices.

mod builtins;
mod io;

pub use builtins::{builtin_arrangement, BUILTIN_NAMES};
pub use io::{arrangement_from_json, arrangement_to_json};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactfield::FieldError;
use crate::exec;
use crate::projgeom::{meet, GeomError, ProjLine, ProjMap, ProjPoint};

#[derive(Debug, Error)]
pub enum ArrError {
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("geometry error: {0}")]
    Geom(#[from] GeomError),
    #[error("lines {} and {} coincide", .0 + 1, .1 + 1)]
    DuplicateLine(usize, usize),
    #[error("line {} lives in Q(zeta_{found}), arrangement is over Q(zeta_{expected})", .line + 1)]
    OrderMismatch {
        expected: u32,
        found: u32,
        line: usize,
    },
    #[error("unknown builtin arrangement '{0}' (available: ceva6, dualhesse9, hesse12)")]
    UnknownBuiltin(String),
    #[error("invalid arrangement document: {0}")]
    Format(String),
}

/// A named finite set of pairwise distinct lines over one fixed cyclotomic
/// field `Q(zeta_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    name: String,
    order: u32,
    lines: Vec<ProjLine>,
}

impl Arrangement {
    pub fn new(
        name: impl Into<String>,
        order: u32,
        lines: Vec<ProjLine>,
    ) -> Result<Self, ArrError> {
        if order == 0 {
            return Err(ArrError::Field(FieldError::InvalidOrder));
        }
        for (i, l) in lines.iter().enumerate() {
            if l.order() != order {
                return Err(ArrError::OrderMismatch {
                    expected: order,
                    found: l.order(),
                    line: i,
                });
            }
            for (j, l2) in lines.iter().enumerate().take(i) {
                if l == l2 {
                    return Err(ArrError::DuplicateLine(j, i));
                }
            }
        }
        Ok(Arrangement {
            name: name.into(),
            order,
            lines,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The cyclotomic order `m` of the ambient field.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn n_lines(&self) -> usize {
        self.lines.len()
    }

    /// The image arrangement under a projective-linear map (lines transform
    /// by the transposed adjugate, preserving all incidences).
    pub fn transformed(&self, map: &ProjMap) -> Arrangement {
        Arrangement {
            name: self.name.clone(),
            order: self.order,
            lines: self.lines.iter().map(|l| map.apply_line(l)).collect(),
        }
    }
}

/// One vertex of the intersection lattice: a point where at least two lines
/// of the arrangement meet, with the sorted indices of all incident lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePoint {
    pub point: ProjPoint,
    pub lines: Vec<usize>,
}

impl LatticePoint {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

/// The full intersection lattice of an arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    points: Vec<LatticePoint>,
    per_line: Vec<Vec<usize>>,
}

impl Lattice {
    /// Lattice points in canonical (coordinate) order.
    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// For each line, the indices into [`Lattice::points`] of the lattice
    /// points lying on it, in canonical order.
    pub fn points_on_line(&self, line: usize) -> &[usize] {
        &self.per_line[line]
    }

    pub fn point_index(&self, p: &ProjPoint) -> Option<usize> {
        self.points.binary_search_by(|lp| lp.point.cmp(p)).ok()
    }

    /// Counts of lattice points per multiplicity.
    pub fn multiplicity_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for p in &self.points {
            *h.entry(p.multiplicity()).or_insert(0) += 1;
        }
        h
    }

    /// Indices of lattice points of multiplicity at least `t`.
    pub fn multiple_points(&self, t: usize) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&i| self.points[i].multiplicity() >= t)
            .collect()
    }
}

/// Computes all pairwise intersection points, merged by exact projective
/// equality. Pair meets run in parallel under the `parallel` feature; the
/// merge and the final order are canonical either way.
pub fn compute_lattice(arr: &Arrangement) -> Lattice {
    let n = arr.n_lines();
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    let lines = arr.lines();
    let meets = exec::map_collect(pairs, |(i, j)| {
        let p = meet(&lines[i], &lines[j]).expect("arrangement lines are distinct");
        (p, i, j)
    });
    let mut by_point: BTreeMap<ProjPoint, Vec<usize>> = BTreeMap::new();
    for (p, i, j) in meets {
        let entry = by_point.entry(p).or_default();
        for k in [i, j] {
            if !entry.contains(&k) {
                entry.push(k);
            }
        }
    }
    let points: Vec<LatticePoint> = by_point
        .into_iter()
        .map(|(point, mut lines)| {
            lines.sort_unstable();
            LatticePoint { point, lines }
        })
        .collect();
    let mut per_line = vec![Vec::new(); n];
    for (idx, lp) in points.iter().enumerate() {
        for &l in &lp.lines {
            per_line[l].push(idx);
        }
    }
    Lattice { points, per_line }
}

/// Euler characteristic of the complement `P^2` minus the union of lines:
/// `3 - 2n + sum_p (m_p - 1)`.
pub fn euler_complement(arr: &Arrangement, lat: &Lattice) -> i64 {
    let n = arr.n_lines() as i64;
    let correction: i64 = lat
        .points()
        .iter()
        .map(|p| p.multiplicity() as i64 - 1)
        .sum();
    3 - 2 * n + correction
}

/// Builds a line from coefficient strings in the field grammar.
pub fn line_from_strs(order: u32, coeffs: [&str; 3]) -> Result<ProjLine, ArrError> {
    let parsed = [
        crate::exactfield::parse_cyclo(coeffs[0], order)?,
        crate::exactfield::parse_cyclo(coeffs[1], order)?,
        crate::exactfield::parse_cyclo(coeffs[2], order)?,
    ];
    Ok(ProjLine::new(parsed)?)
}
