//! Report documents and printers.
//!
//! The JSON documents are deterministic: field order is fixed by struct
//! declaration order, maps are ordered, and every arbitrary-precision value
//! is a decimal string (coefficients use the exact-field grammar), so two
//! runs on the same input produce byte-identical output.

use std::collections::BTreeMap;

use linecomp_core::analysis::{Analysis, ProjectionReport, Warning};
use linecomp_core::arrangement::{Arrangement, Lattice};
use linecomp_core::autgroup::{LinearAutGroup, OrbitClass};
use linecomp_core::bounds::BoundReport;
use linecomp_core::exactfield::cyclo_to_string;
use linecomp_core::fibration::{Census, ComponentKind, FiberProfile, Net, PencilFibration};
use linecomp_core::projgeom::{P1Point, ProjMap, ProjPoint};
use serde::Serialize;

fn point3(p: &ProjPoint) -> [String; 3] {
    let c = p.coords();
    [
        cyclo_to_string(&c[0]),
        cyclo_to_string(&c[1]),
        cyclo_to_string(&c[2]),
    ]
}

fn point2(p: &P1Point) -> [String; 2] {
    let c = p.coords();
    [cyclo_to_string(&c[0]), cyclo_to_string(&c[1])]
}

fn matrix(m: &ProjMap) -> [[String; 3]; 3] {
    m.rows().clone().map(|row| row.map(|e| cyclo_to_string(&e)))
}

#[derive(Serialize)]
pub struct ArrangementDoc {
    name: String,
    cyclotomic_order: u32,
    n_lines: usize,
    lines: Vec<[String; 3]>,
}

impl ArrangementDoc {
    pub fn new(arr: &Arrangement) -> Self {
        ArrangementDoc {
            name: arr.name().to_string(),
            cyclotomic_order: arr.order(),
            n_lines: arr.n_lines(),
            lines: arr
                .lines()
                .iter()
                .map(|l| {
                    let c = l.coeffs();
                    [
                        cyclo_to_string(&c[0]),
                        cyclo_to_string(&c[1]),
                        cyclo_to_string(&c[2]),
                    ]
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct PointDoc {
    index: usize,
    coords: [String; 3],
    multiplicity: usize,
    lines: Vec<usize>,
}

#[derive(Serialize)]
struct LatticeDoc {
    n_points: usize,
    multiplicity_histogram: BTreeMap<usize, usize>,
    points: Vec<PointDoc>,
}

impl LatticeDoc {
    fn new(lat: &Lattice) -> Self {
        LatticeDoc {
            n_points: lat.points().len(),
            multiplicity_histogram: lat.multiplicity_histogram(),
            points: lat
                .points()
                .iter()
                .enumerate()
                .map(|(i, p)| PointDoc {
                    index: i,
                    coords: point3(&p.point),
                    multiplicity: p.multiplicity(),
                    lines: p.lines.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct SpecialDoc {
    base: [String; 2],
    euler: i64,
    points: Vec<usize>,
}

#[derive(Serialize)]
struct FibrationDoc {
    center: usize,
    multiplicity: usize,
    e_base: i64,
    e_fiber: i64,
    fiber_punctures: usize,
    base_punctures: Vec<[String; 2]>,
    special_fibers: Vec<SpecialDoc>,
    lemma2: i64,
}

impl FibrationDoc {
    fn new(p: &ProjectionReport) -> Self {
        FibrationDoc {
            center: p.fibration.center,
            multiplicity: p.fibration.multiplicity,
            e_base: p.fibration.e_base,
            e_fiber: p.fibration.e_fiber,
            fiber_punctures: p.fibration.fiber_puncture_count,
            base_punctures: p.fibration.base_punctures.iter().map(point2).collect(),
            special_fibers: p
                .specials
                .iter()
                .map(|s| SpecialDoc {
                    base: point2(&s.base),
                    euler: s.euler,
                    points: s.points.clone(),
                })
                .collect(),
            lemma2: p.lemma2,
        }
    }
}

#[derive(Serialize)]
struct PencilDoc {
    base_punctures: Vec<[String; 2]>,
    e_base: i64,
    fiber_genus: usize,
    fiber_punctures: usize,
    e_fiber: i64,
}

#[derive(Serialize)]
pub struct NetDoc {
    k: usize,
    d: usize,
    classes: Vec<Vec<usize>>,
    inter_points: Vec<usize>,
    intra_points: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pencil: Option<PencilDoc>,
}

impl NetDoc {
    pub fn new(net: &Net, pencil: Option<&PencilFibration>) -> Self {
        NetDoc {
            k: net.k,
            d: net.d,
            classes: net.classes.clone(),
            inter_points: net.inter_points.clone(),
            intra_points: net.intra_points.clone(),
            pencil: pencil.map(|p| PencilDoc {
                base_punctures: p.base_punctures.iter().map(point2).collect(),
                e_base: p.e_base,
                fiber_genus: p.fiber_genus,
                fiber_punctures: p.fiber_puncture_count,
                e_fiber: p.e_fiber,
            }),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "index")]
enum KindDoc {
    LocalPoint(usize),
    NetPencil(usize),
}

#[derive(Serialize)]
struct ProfileDoc {
    dimension: usize,
    fiber_genus: usize,
    fiber_punctures: usize,
    base_punctures: usize,
}

impl ProfileDoc {
    fn new(p: &FiberProfile) -> Self {
        ProfileDoc {
            dimension: p.dimension,
            fiber_genus: p.fiber_genus,
            fiber_punctures: p.fiber_punctures,
            base_punctures: p.base_punctures,
        }
    }
}

#[derive(Serialize)]
struct ComponentDoc {
    #[serde(flatten)]
    kind: KindDoc,
    dimension: usize,
    fiber_genus: usize,
    fiber_punctures: usize,
    base_punctures: usize,
}

#[derive(Serialize)]
struct CensusDoc {
    total: usize,
    by_dimension: BTreeMap<usize, usize>,
    components: Vec<ComponentDoc>,
}

impl CensusDoc {
    fn new(census: &Census) -> Self {
        CensusDoc {
            total: census.total(),
            by_dimension: census.by_dimension(),
            components: census
                .components()
                .iter()
                .map(|c| ComponentDoc {
                    kind: match c.kind {
                        ComponentKind::LocalPoint(i) => KindDoc::LocalPoint(i),
                        ComponentKind::NetPencil(i) => KindDoc::NetPencil(i),
                    },
                    dimension: c.profile.dimension,
                    fiber_genus: c.profile.fiber_genus,
                    fiber_punctures: c.profile.fiber_punctures,
                    base_punctures: c.profile.base_punctures,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct AutDoc {
    order: usize,
    elements: Vec<[[String; 3]; 3]>,
}

impl AutDoc {
    pub fn new(group: &LinearAutGroup) -> Self {
        AutDoc {
            order: group.order(),
            elements: group.elements().iter().map(matrix).collect(),
        }
    }
}

#[derive(Serialize)]
struct MemberDoc {
    component: usize,
    l_base: usize,
    l_fiber: String,
}

#[derive(Serialize)]
struct ClassDoc {
    profile: ProfileDoc,
    components: Vec<usize>,
    nu_upper: usize,
    nu_linear: Vec<usize>,
    l_base: usize,
    l_fiber: String,
    members: Vec<MemberDoc>,
}

impl ClassDoc {
    fn new(class: &OrbitClass) -> Self {
        ClassDoc {
            profile: ProfileDoc::new(&class.profile),
            components: class.components.clone(),
            nu_upper: class.nu_upper,
            nu_linear: class.nu_linear.clone(),
            l_base: class.l_base,
            l_fiber: class.l_fiber.to_string(),
            members: class
                .member_bounds
                .iter()
                .map(|m| MemberDoc {
                    component: m.component,
                    l_base: m.l_base,
                    l_fiber: m.l_fiber.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct BoundDoc {
    formula: String,
    value: String,
    inputs: Vec<(String, String)>,
    notes: Vec<String>,
}

impl BoundDoc {
    pub fn new(report: &BoundReport) -> Self {
        BoundDoc {
            formula: report.formula_id.clone(),
            value: report.value.to_string(),
            inputs: report.inputs.clone(),
            notes: report.notes.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct WarningDoc {
    code: String,
    detail: String,
}

impl WarningDoc {
    pub fn new(warning: &Warning) -> Self {
        WarningDoc {
            code: warning.code.clone(),
            detail: warning.detail.clone(),
        }
    }
}

/// The full machine-readable analysis document.
#[derive(Serialize)]
pub struct ReportDoc {
    arrangement: ArrangementDoc,
    lattice: LatticeDoc,
    euler: i64,
    fibrations: Vec<FibrationDoc>,
    nets: Vec<NetDoc>,
    census: CensusDoc,
    aut: AutDoc,
    orbit_classes: Vec<ClassDoc>,
    bounds: Vec<BoundDoc>,
    warnings: Vec<WarningDoc>,
}

impl ReportDoc {
    pub fn new(a: &Analysis) -> Self {
        ReportDoc {
            arrangement: ArrangementDoc::new(&a.arrangement),
            lattice: LatticeDoc::new(&a.lattice),
            euler: a.euler,
            fibrations: a.projections.iter().map(FibrationDoc::new).collect(),
            nets: a
                .nets
                .iter()
                .zip(&a.pencils)
                .map(|(n, p)| NetDoc::new(n, Some(p)))
                .collect(),
            census: CensusDoc::new(&a.census),
            aut: AutDoc::new(&a.group),
            orbit_classes: a.classes.iter().map(ClassDoc::new).collect(),
            bounds: a.bounds.iter().map(BoundDoc::new).collect(),
            warnings: a.warnings.iter().map(WarningDoc::new).collect(),
        }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("report documents serialize")
}

fn set(indices: &[usize]) -> String {
    let inner: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Prints the human-readable report.  Labels are 1-based; the JSON document
/// keeps the 0-based indices used by the library.
pub fn print_text(a: &Analysis) {
    let arr = &a.arrangement;
    let field = if arr.order() == 1 {
        "Q".to_string()
    } else {
        format!("Q(zeta_{})", arr.order())
    };
    println!(
        "arrangement {}: {} lines over {}",
        arr.name(),
        arr.n_lines(),
        field
    );
    let hist = a
        .lattice
        .multiplicity_histogram()
        .iter()
        .map(|(m, c)| format!("{c} of multiplicity {m}"))
        .collect::<Vec<_>>()
        .join(", ");
    println!("lattice: {} points ({hist})", a.lattice.points().len());
    println!("euler characteristic of the complement: {}", a.euler);

    println!("point projections: {}", a.projections.len());
    for (i, p) in a.projections.iter().enumerate() {
        println!(
            "  [{}] center point {} (multiplicity {}): e_base {}, e_fiber {}, \
             {} special fibers, |e(fiber)| <= {}",
            i + 1,
            p.fibration.center + 1,
            p.fibration.multiplicity,
            p.fibration.e_base,
            p.fibration.e_fiber,
            p.specials.len(),
            p.lemma2
        );
    }

    println!("nets: {}", a.nets.len());
    for (i, (net, pencil)) in a.nets.iter().zip(&a.pencils).enumerate() {
        let classes = net
            .classes
            .iter()
            .map(|c| set(c))
            .collect::<Vec<_>>()
            .join(" ");
        println!(
            "  [{}] ({},{}) net {classes}: {} base points; pencil fiber genus {}, \
             {} punctures",
            i + 1,
            net.k,
            net.d,
            net.inter_points.len(),
            pencil.fiber_genus,
            pencil.fiber_puncture_count
        );
    }

    println!("census: {} components", a.census.total());
    for (dim, count) in a.census.by_dimension() {
        println!("  dimension {dim}: {count}");
    }

    println!("linear automorphism group: order {}", a.group.order());

    // Orbit classes keep their 0-based indices: `--fiber-aut CLASS=VALUE`
    // and the bound inputs (`class0`, `class1`, ...) refer to them.
    println!("orbit classes: {}", a.classes.len());
    for (i, class) in a.classes.iter().enumerate() {
        let orbits = class
            .nu_linear
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(",");
        println!(
            "  class {}: profile (dim {}, fiber genus {}, fiber punctures {}, base \
             punctures {}): components {}, nu <= {}, linear orbit lengths [{orbits}], \
             L_base {}, L_fiber {}",
            i,
            class.profile.dimension,
            class.profile.fiber_genus,
            class.profile.fiber_punctures,
            class.profile.base_punctures,
            set(&class.components),
            class.nu_upper,
            class.l_base,
            class.l_fiber
        );
    }

    print_bounds(&a.bounds);

    println!("warnings:");
    for w in &a.warnings {
        println!("  {}: {}", w.code, w.detail);
    }
}

pub fn print_bounds(bounds: &[BoundReport]) {
    println!("bounds:");
    for b in bounds {
        println!("  {:<12} {}", b.formula_id, b.value);
        for (name, value) in &b.inputs {
            println!("      {name} = {value}");
        }
        for note in &b.notes {
            println!("      note: {note}");
        }
    }
}
