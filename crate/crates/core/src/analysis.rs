//! One-call analysis pipeline: lattice, Euler characteristic, projection
//! fibrations with their special fibers, nets and pencils, the component
//! census, the linear automorphism group, orbit classes, and every
//! map-count bound computable from the arrangement alone.

use std::collections::BTreeMap;

use crate::arrangement::{compute_lattice, euler_complement, Arrangement, Lattice};
use crate::autgroup::{
    component_orbits, linear_aut_group, theorem4_report, AutError, LinearAutGroup, OrbitClass,
};
use crate::bounds::{
    appendix_point_bound, theorem_bounds, AppendixBounds, BigCount, BoundReport, SurfaceInvariants,
    TheoremFormula,
};
use crate::fibration::{
    all_nets, census, euler_identity_holds, lemma2_bound, pencil_fibration, projection_fibration,
    special_fibers, Census, Net, PencilFibration, ProjectionFibration, SpecialFiber,
};

/// A projection fibration bundled with its special fibers and the largest
/// fiber Euler characteristic magnitude admissible over its base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionReport {
    pub fibration: ProjectionFibration,
    pub specials: Vec<SpecialFiber>,
    pub lemma2: i64,
}

/// A machine-checkable caveat attached to an analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    /// Stable identifier (`census-completeness`, `census-empty`,
    /// `tcap-rounding`, `override-used`).
    pub code: String,
    pub detail: String,
}

fn warning(code: &str, detail: impl Into<String>) -> Warning {
    Warning {
        code: code.to_string(),
        detail: detail.into(),
    }
}

/// Everything the pipeline computes for one arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub arrangement: Arrangement,
    pub lattice: Lattice,
    pub euler: i64,
    /// One report per lattice point of multiplicity at least three, in
    /// lattice order.
    pub projections: Vec<ProjectionReport>,
    pub nets: Vec<Net>,
    /// One pencil fibration per net, in net order.
    pub pencils: Vec<PencilFibration>,
    pub census: Census,
    pub group: LinearAutGroup,
    pub classes: Vec<OrbitClass>,
    /// Point-projection map bounds; absent when the census is empty.
    pub appendix: Option<AppendixBounds>,
    /// Bound reports in a fixed order: the exact class-product bound, then
    /// the census-derived formula bounds, then the point bounds.
    pub bounds: Vec<BoundReport>,
    pub warnings: Vec<Warning>,
}

/// Runs the full pipeline.
///
/// Fibration identities are asserted along the way (they are exact integer
/// identities, so a failure is a defect, not an input problem). Arrangements
/// whose lattice is too degenerate for the automorphism search are rejected;
/// an empty census (no multiple points, no nets) is not an error but leaves
/// the bound list empty, with a warning.
pub fn analyze(
    arr: Arrangement,
    overrides: &BTreeMap<usize, BigCount>,
) -> Result<Analysis, AutError> {
    let lattice = compute_lattice(&arr);
    let euler = euler_complement(&arr, &lattice);
    let nets = all_nets(&arr, &lattice);
    let cens = census(&arr, &lattice, &nets);
    let group = linear_aut_group(&arr, &lattice)?;

    let mut projections = Vec::new();
    for pi in lattice.multiple_points(3) {
        let fibration = projection_fibration(&arr, &lattice, pi)?;
        let specials = special_fibers(&arr, &lattice, &fibration);
        assert!(
            euler_identity_holds(euler, &fibration, &specials),
            "projection fibration must satisfy the Euler identity"
        );
        let lemma2 = lemma2_bound(euler, fibration.e_base)?;
        assert!(
            -fibration.e_fiber <= lemma2,
            "generic fiber must satisfy the admissible Euler bound"
        );
        projections.push(ProjectionReport {
            fibration,
            specials,
            lemma2,
        });
    }
    let mut pencils = Vec::new();
    for net in &nets {
        let fibration = pencil_fibration(&arr, net)?;
        let lemma2 = lemma2_bound(euler, fibration.e_base)?;
        assert!(
            -fibration.e_fiber <= lemma2,
            "pencil fiber must satisfy the admissible Euler bound"
        );
        pencils.push(fibration);
    }

    let mut warnings = vec![warning(
        "census-completeness",
        "census lists the components arising from multiple points and nets; \
         no completeness certificate for other components is produced",
    )];
    let mut bounds = Vec::new();
    let mut classes = Vec::new();
    let mut appendix = None;
    if cens.total() == 0 {
        warnings.push(warning(
            "census-empty",
            "no multiple points and no nets: the census is empty and no map-count \
             bound applies",
        ));
    } else {
        classes = component_orbits(&arr, &lattice, &nets, &cens, &group)?;
        bounds.push(theorem4_report(&classes, overrides)?);
        let inv = SurfaceInvariants {
            n_components: Some(cens.total()),
            dims: Some(cens.components().iter().map(|c| c.dimension()).collect()),
            euler: Some(euler),
            h1: None,
            ambient_dim: None,
            index_s: None,
            k_top: None,
        };
        for which in [
            TheoremFormula::T4Simple,
            TheoremFormula::T1,
            TheoremFormula::T3,
            TheoremFormula::T5,
            TheoremFormula::C1,
        ] {
            bounds.push(theorem_bounds(&inv, which)?);
        }
        let points = appendix_point_bound(&arr, &lattice, &cens)?;
        bounds.push(BoundReport {
            formula_id: "appendix".to_string(),
            inputs: vec![
                ("point_bound".to_string(), points.point_bound.to_string()),
                (
                    "best_point_index".to_string(),
                    points.best_point.to_string(),
                ),
                ("global_bound".to_string(), points.global_bound.to_string()),
            ],
            value: points.point_bound.clone(),
            notes: Vec::new(),
        });
        appendix = Some(points);
    }
    for report in &bounds {
        for note in &report.notes {
            if note.contains("rounded") {
                warnings.push(warning(
                    "tcap-rounding",
                    format!("{}: {note}", report.formula_id),
                ));
            }
            if note.contains("overridden") {
                warnings.push(warning(
                    "override-used",
                    format!("{}: {note}", report.formula_id),
                ));
            }
        }
    }
    // A report may repeat one rounding note per component; a single warning
    // per distinct message is enough.
    warnings.dedup();

    Ok(Analysis {
        arrangement: arr,
        lattice,
        euler,
        projections,
        nets,
        pencils,
        census: cens,
        group,
        classes,
        appendix,
        bounds,
        warnings,
    })
}
