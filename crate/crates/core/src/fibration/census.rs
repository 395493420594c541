//! Census of the positive-dimensional translated components of the
//! characteristic variety coming from fibrations: one per point of
//! multiplicity at least three, one per net pencil.

use std::collections::BTreeMap;

use super::net::Net;
use crate::arrangement::{Arrangement, Lattice};

/// Topological shape of the fibration behind a component: enough to tell
/// which components could be exchanged by a self-map of the complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiberProfile {
    /// Dimension of the component.
    pub dimension: usize,
    /// Genus of the generic fiber of the inducing fibration.
    pub fiber_genus: usize,
    /// Punctures of the generic fiber.
    pub fiber_punctures: usize,
    /// Punctures of the base line.
    pub base_punctures: usize,
}

/// The fibration giving rise to a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentKind {
    /// Projection from the lattice point with this index.
    LocalPoint(usize),
    /// Pencil of the net with this index in the census input.
    NetPencil(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharComponent {
    pub kind: ComponentKind,
    pub profile: FiberProfile,
}

impl CharComponent {
    pub fn dimension(&self) -> usize {
        self.profile.dimension
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    components: Vec<CharComponent>,
}

impl Census {
    pub fn components(&self) -> &[CharComponent] {
        &self.components
    }

    pub fn total(&self) -> usize {
        self.components.len()
    }

    /// Component counts per dimension.
    pub fn by_dimension(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in &self.components {
            *out.entry(c.dimension()).or_insert(0) += 1;
        }
        out
    }

    /// Component indices grouped by profile.  Only components sharing a
    /// profile can be permuted by a self-homeomorphism of the complement.
    pub fn profile_classes(&self) -> BTreeMap<FiberProfile, Vec<usize>> {
        let mut out: BTreeMap<FiberProfile, Vec<usize>> = BTreeMap::new();
        for (i, c) in self.components.iter().enumerate() {
            out.entry(c.profile).or_default().push(i);
        }
        out
    }
}

/// Enumerates the components induced by point projections (multiplicity at
/// least three) and by the pencils of the given nets.
///
/// A multiplicity-`m` point yields a component of dimension `m - 1` whose
/// fibration has rational fibers with `n - m + 1` punctures over an
/// `m`-punctured base; a `(k, d)`-net yields a component of dimension
/// `k - 1` whose fibers have genus `(d - 1)(d - 2) / 2` and `d^2` punctures
/// over a `k`-punctured base.
pub fn census(arr: &Arrangement, lat: &Lattice, nets: &[Net]) -> Census {
    let n = arr.n_lines();
    let mut components = Vec::new();
    for (pi, p) in lat.points().iter().enumerate() {
        let m = p.multiplicity();
        if m >= 3 {
            components.push(CharComponent {
                kind: ComponentKind::LocalPoint(pi),
                profile: FiberProfile {
                    dimension: m - 1,
                    fiber_genus: 0,
                    fiber_punctures: n - m + 1,
                    base_punctures: m,
                },
            });
        }
    }
    for (ni, net) in nets.iter().enumerate() {
        components.push(CharComponent {
            kind: ComponentKind::NetPencil(ni),
            profile: FiberProfile {
                dimension: net.k - 1,
                fiber_genus: (net.d - 1) * (net.d - 2) / 2,
                fiber_punctures: net.d * net.d,
                base_punctures: net.k,
            },
        });
    }
    Census { components }
}
