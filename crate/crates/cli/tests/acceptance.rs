//! Acceptance gate: the ten golden criteria, one test per criterion.
//! Each test prints a `PASS criterion N` line once all of its checks hold
//! (visible with `--nocapture`); a failing criterion fails its test.

use std::collections::BTreeMap;
use std::process::Command;
use std::sync::OnceLock;

use linecomp_core::arrangement::{
    builtin_arrangement, compute_lattice, euler_complement, Arrangement, Lattice,
};
use linecomp_core::autgroup::{
    component_orbits, linear_aut_group, theorem4_exact, theorem4_report, LinearAutGroup, OrbitClass,
};
use linecomp_core::bounds::{
    appendix_point_bound, aut_curve_bound, t_bounds, tc_bound, theorem_bounds, zeta_upper,
    BigCount, SurfaceInvariants, TheoremFormula,
};
use linecomp_core::exactfield::{cyclo_to_string, parse_cyclo, CycloElem, Rational};
use linecomp_core::fibration::{
    all_nets, census, euler_identity_holds, lemma2_bound, net_search, pencil_fibration,
    projection_fibration, special_fibers, Census, Net,
};
use linecomp_core::projgeom::{join, mobius_aut_group, MobiusMap, P1Point, ProjLine, ProjPoint};
use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Bundle {
    arr: Arrangement,
    lattice: Lattice,
    nets: Vec<Net>,
    census: Census,
    group: LinearAutGroup,
    classes: Vec<OrbitClass>,
}

fn bundle(name: &str) -> &'static Bundle {
    static CEVA: OnceLock<Bundle> = OnceLock::new();
    static DUAL: OnceLock<Bundle> = OnceLock::new();
    static HESSE: OnceLock<Bundle> = OnceLock::new();
    let slot = match name {
        "ceva6" => &CEVA,
        "dualhesse9" => &DUAL,
        "hesse12" => &HESSE,
        _ => unreachable!("unknown builtin"),
    };
    slot.get_or_init(|| {
        let arr = builtin_arrangement(name).expect("builtin loads");
        let lattice = compute_lattice(&arr);
        let nets = all_nets(&arr, &lattice);
        let cens = census(&arr, &lattice, &nets);
        let group = linear_aut_group(&arr, &lattice).expect("group search succeeds");
        let classes = component_orbits(&arr, &lattice, &nets, &cens, &group).expect("classes form");
        Bundle {
            arr,
            lattice,
            nets,
            census: cens,
            group,
            classes,
        }
    })
}

fn big(n: u64) -> BigCount {
    BigCount::from(n)
}

fn histogram(lat: &Lattice) -> BTreeMap<usize, usize> {
    lat.multiplicity_histogram()
}

#[test]
fn criterion_1_ceva6_golden_run() {
    let b = bundle("ceva6");
    assert_eq!(
        histogram(&b.lattice),
        BTreeMap::from([(2, 3), (3, 4)]),
        "ceva6 lattice must be 4 triple + 3 double points"
    );
    assert_eq!(euler_complement(&b.arr, &b.lattice), 2);
    assert_eq!(net_search(&b.arr, &b.lattice, 3).len(), 1);
    assert_eq!(b.census.total(), 5);
    assert_eq!(b.census.by_dimension(), BTreeMap::from([(2, 5)]));
    assert_eq!(b.group.order(), 24);
    let exact = theorem4_exact(&b.arr, &BTreeMap::new()).unwrap();
    assert_eq!(exact.value, big(120));
    let inv = SurfaceInvariants {
        n_components: Some(5),
        dims: Some(vec![2; 5]),
        euler: Some(2),
        h1: None,
        ambient_dim: None,
        index_s: None,
        k_top: None,
    };
    let simple = theorem_bounds(&inv, TheoremFormula::T4Simple).unwrap();
    assert_eq!(simple.value, big(2520));
    let points = appendix_point_bound(&b.arr, &b.lattice, &b.census).unwrap();
    assert_eq!(points.point_bound, big(1500));
    println!(
        "PASS criterion 1: ceva6 golden run (lattice 4x3+3x2, e=2, 1 net, census 5, \
         aut 24, exact bound 120, simple bound 2520, point bound 1500)"
    );
}

#[test]
fn criterion_2_dualhesse9_golden_run() {
    let b = bundle("dualhesse9");
    assert_eq!(
        histogram(&b.lattice),
        BTreeMap::from([(3, 12)]),
        "dualhesse9 lattice must be exactly 12 triple points"
    );
    assert_eq!(euler_complement(&b.arr, &b.lattice), 9);
    assert_eq!(net_search(&b.arr, &b.lattice, 3).len(), 4);
    assert_eq!(b.census.by_dimension(), BTreeMap::from([(2, 16)]));
    let report = theorem4_report(&b.classes, &BTreeMap::new()).unwrap();
    assert_eq!(report.value, big(216));
    let projection = b
        .classes
        .iter()
        .find(|c| c.profile.fiber_genus == 0)
        .expect("a genus-zero projection class");
    assert_eq!(
        BigCount::from(projection.nu_upper)
            * big(projection.l_base as u64)
            * projection.l_fiber.clone(),
        big(216),
        "the projection class must attain the minimum"
    );
    assert_eq!(projection.l_fiber, big(3), "fiber Moebius count");
    println!(
        "PASS criterion 2: dualhesse9 golden run (12 triple points, e=9, 4 nets, \
         16 components, bound 216 from the projection class with fiber count 3)"
    );
}

#[test]
fn criterion_3_hesse12_golden_run() {
    let b = bundle("hesse12");
    assert_eq!(
        histogram(&b.lattice),
        BTreeMap::from([(2, 12), (4, 9)]),
        "hesse12 lattice must be 9 quadruple + 12 double points"
    );
    assert_eq!(euler_complement(&b.arr, &b.lattice), 18);
    let nets = net_search(&b.arr, &b.lattice, 4);
    assert_eq!(nets.len(), 1, "exactly one (4,3) net");
    assert!(
        nets[0].classes.iter().all(|c| c.len() == 3),
        "the net splits the twelve lines into four triangles"
    );
    let pencil = pencil_fibration(&b.arr, &nets[0]).unwrap();
    assert_eq!(
        mobius_aut_group(&pencil.base_punctures).unwrap().order(),
        12,
        "pencil base punctures must have Moebius order 12"
    );
    let pencil_class = b
        .classes
        .iter()
        .position(|c| c.profile.fiber_genus == 1)
        .expect("a genus-one pencil class");
    let overrides = BTreeMap::from([(pencil_class, big(18))]);
    let overridden = theorem4_report(&b.classes, &overrides).unwrap();
    let input = &overridden.inputs[pencil_class].1;
    assert_eq!(
        input, "1 * 12 * 18 = 216",
        "overridden pencil class product"
    );
    let plain = theorem4_report(&b.classes, &BTreeMap::new()).unwrap();
    assert!(plain.value >= big(216), "unoverridden bound stays >= 216");
    println!(
        "PASS criterion 3: hesse12 golden run (9 quadruple + 12 double points, e=18, \
         four-triangle net, base Moebius 12, override gives 1*12*18=216, plain bound {} >= 216)",
        plain.value
    );
}

/// Random lines over the third cyclotomic field with a forced triple point.
fn random_corpus() -> &'static Vec<(Arrangement, Lattice)> {
    static CORPUS: OnceLock<Vec<(Arrangement, Lattice)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6c636f6d70);
        let mut out = Vec::new();
        while out.len() < 100 {
            if let Some(arr) = random_arrangement(&mut rng) {
                let lattice = compute_lattice(&arr);
                assert!(
                    lattice.points().iter().any(|p| p.multiplicity() >= 3),
                    "the corpus forces a triple point"
                );
                out.push((arr, lattice));
            }
        }
        out
    })
}

fn random_element(rng: &mut ChaCha8Rng) -> CycloElem {
    let a = CycloElem::from_int(3, rng.gen_range(-2..=2));
    let b = CycloElem::from_int(3, rng.gen_range(-2..=2));
    &a + &(&b * &CycloElem::root_of_unity(3))
}

fn random_point(rng: &mut ChaCha8Rng) -> Option<ProjPoint> {
    for _ in 0..32 {
        let coords = [
            random_element(rng),
            random_element(rng),
            random_element(rng),
        ];
        if let Ok(p) = ProjPoint::new(coords) {
            return Some(p);
        }
    }
    None
}

fn random_arrangement(rng: &mut ChaCha8Rng) -> Option<Arrangement> {
    let n = rng.gen_range(5..=8);
    let center = random_point(rng)?;
    let mut lines: Vec<ProjLine> = Vec::new();
    let mut attempts = 0;
    while lines.len() < 3 {
        attempts += 1;
        if attempts > 64 {
            return None;
        }
        let q = random_point(rng)?;
        if let Ok(l) = join(&center, &q) {
            if !lines.contains(&l) {
                lines.push(l);
            }
        }
    }
    while lines.len() < n {
        attempts += 1;
        if attempts > 128 {
            return None;
        }
        let coeffs = [
            random_element(rng),
            random_element(rng),
            random_element(rng),
        ];
        if let Ok(l) = ProjLine::new(coeffs) {
            if !lines.contains(&l) {
                lines.push(l);
            }
        }
    }
    Arrangement::new("random", 3, lines).ok()
}

#[test]
fn criterion_4_fibration_identities_hold() {
    let mut projections = 0usize;
    let mut pencils = 0usize;
    let mut check = |arr: &Arrangement, lattice: &Lattice, nets: &[Net]| {
        let e = euler_complement(arr, lattice);
        for pi in lattice.multiple_points(3) {
            let fib = projection_fibration(arr, lattice, pi).unwrap();
            let specials = special_fibers(arr, lattice, &fib);
            assert!(
                euler_identity_holds(e, &fib, &specials),
                "euler identity fails on {} center {pi}",
                arr.name()
            );
            for s in &specials {
                let excess: i64 = s
                    .points
                    .iter()
                    .map(|&qi| lattice.points()[qi].multiplicity() as i64 - 1)
                    .sum();
                assert_eq!(
                    s.euler,
                    fib.e_fiber + excess,
                    "special fiber characteristic fails on {}",
                    arr.name()
                );
            }
            let cap = lemma2_bound(e, fib.e_base).unwrap();
            assert!(-fib.e_fiber <= cap, "fiber bound fails on {}", arr.name());
            projections += 1;
        }
        for net in nets {
            let fib = pencil_fibration(arr, net).unwrap();
            let cap = lemma2_bound(e, fib.e_base).unwrap();
            assert!(
                -fib.e_fiber <= cap,
                "pencil fiber bound fails on {}",
                arr.name()
            );
            pencils += 1;
        }
    };
    for name in ["ceva6", "dualhesse9", "hesse12"] {
        let b = bundle(name);
        check(&b.arr, &b.lattice, &b.nets);
    }
    for (arr, lattice) in random_corpus() {
        let nets = all_nets(arr, lattice);
        check(arr, lattice, &nets);
    }
    assert!(projections >= 100, "the corpus exercises the identity");
    println!(
        "PASS criterion 4: euler and special-fiber identities and the fiber bound hold \
         on {projections} projections and {pencils} pencils (3 builtins + 100 random)"
    );
}

#[test]
fn criterion_5_lattice_counts_pairs() {
    let choose2 = |m: usize| m * (m - 1) / 2;
    let mut checked = 0usize;
    let mut check = |arr: &Arrangement, lattice: &Lattice| {
        let total: usize = lattice
            .points()
            .iter()
            .map(|p| choose2(p.multiplicity()))
            .sum();
        assert_eq!(
            total,
            choose2(arr.n_lines()),
            "pair count fails on {}",
            arr.name()
        );
        checked += 1;
    };
    for name in ["ceva6", "dualhesse9", "hesse12"] {
        let b = bundle(name);
        check(&b.arr, &b.lattice);
    }
    for (arr, lattice) in random_corpus() {
        check(arr, lattice);
    }
    println!("PASS criterion 5: sum of C(m_p, 2) equals C(n, 2) on all {checked} arrangements");
}

fn p1(order: u32, num: i64, den_zero: bool) -> P1Point {
    let coords = if den_zero {
        [CycloElem::one(order), CycloElem::zero(order)]
    } else {
        [CycloElem::from_int(order, num), CycloElem::one(order)]
    };
    P1Point::new(coords).expect("nonzero coordinates")
}

fn random_mobius(rng: &mut ChaCha8Rng, order: u32) -> MobiusMap {
    loop {
        let entry = |rng: &mut ChaCha8Rng| CycloElem::from_int(order, rng.gen_range(-3..=3));
        let m = [[entry(rng), entry(rng)], [entry(rng), entry(rng)]];
        if let Ok(map) = MobiusMap::new(m) {
            return map;
        }
    }
}

#[test]
fn criterion_6_moebius_orders() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f65);
    let zero_one_inf = vec![p1(1, 0, false), p1(1, 1, false), p1(1, 0, true)];
    let zero_one_five_inf = vec![
        p1(1, 0, false),
        p1(1, 1, false),
        p1(1, 5, false),
        p1(1, 0, true),
    ];
    let zeta = CycloElem::root_of_unity(3);
    let harmonic12 = vec![
        p1(3, 1, false),
        p1(3, 0, false),
        P1Point::new([zeta.clone(), CycloElem::one(3)]).unwrap(),
        P1Point::new([&zeta * &zeta, CycloElem::one(3)]).unwrap(),
    ];
    for (points, expected) in [
        (zero_one_inf, 6usize),
        (zero_one_five_inf, 4),
        (harmonic12, 12),
    ] {
        let order = mobius_aut_group(&points).unwrap().order();
        assert_eq!(order, expected, "symmetry order of {points:?}");
        let field = points[0].coords()[0].order();
        for _ in 0..3 {
            let m = random_mobius(&mut rng, field);
            let moved: Vec<P1Point> = points.iter().map(|p| m.apply(p)).collect();
            assert_eq!(
                mobius_aut_group(&moved).unwrap().order(),
                expected,
                "conjugation must preserve the symmetry order"
            );
        }
    }
    println!(
        "PASS criterion 6: Moebius orders 6, 4, 12 for the three reference sets, \
         invariant under random conjugation"
    );
}

#[test]
fn criterion_7_formula_spot_checks() {
    assert_eq!(aut_curve_bound(0, 5).unwrap(), big(25));
    assert_eq!(aut_curve_bound(1, 9).unwrap(), big(54));
    assert_eq!(tc_bound(2).unwrap(), big(8128));
    assert_eq!(t_bounds(0, 3).unwrap(), big(216));
    let inv = SurfaceInvariants {
        n_components: Some(5),
        dims: Some(vec![2; 5]),
        euler: Some(2),
        h1: None,
        ambient_dim: None,
        index_s: None,
        k_top: None,
    };
    assert_eq!(
        theorem_bounds(&inv, TheoremFormula::T4Simple)
            .unwrap()
            .value,
        big(2520)
    );
    let z = zeta_upper(6, 16);
    let lo = Rational::new(BigInt::from(1_017_343), BigInt::from(1_000_000));
    let hi = Rational::new(BigInt::from(1_027_343), BigInt::from(1_000_000));
    assert!(lo < z && z < hi, "zeta_upper(6,16) = {z} out of range");
    let mut last = zeta_upper(6, 4);
    for terms in [8u32, 16, 32, 64] {
        let next = zeta_upper(6, terms);
        assert!(next < last, "zeta_upper must decrease in the term count");
        last = next;
    }
    println!(
        "PASS criterion 7: A(0,5)=25, A(1,9)=54, Tc(2)=8128, T(0,3)=216, \
         simple bound 2520, zeta_upper(6,16) in range and decreasing"
    );
}

fn random_field_element(rng: &mut ChaCha8Rng, order: u32) -> CycloElem {
    let mut out = CycloElem::zero(order);
    for exp in 0..2u64 {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=4);
        let c = BigRational::new(BigInt::from(num), BigInt::from(den));
        out = &out + &CycloElem::from_power(order, exp, c);
    }
    out
}

#[test]
fn criterion_8_field_axioms_and_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x515a33);
    let mut checks = 0usize;
    for order in [3u32, 6] {
        let one = CycloElem::one(order);
        let zero = CycloElem::zero(order);
        for _ in 0..625 {
            let a = random_field_element(&mut rng, order);
            let b = random_field_element(&mut rng, order);
            let c = random_field_element(&mut rng, order);
            assert_eq!(&a + &b, &b + &a);
            checks += 1;
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            checks += 1;
            assert_eq!(&a * &b, &b * &a);
            checks += 1;
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            checks += 1;
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            checks += 1;
            assert_eq!(&a + &(-&a), zero);
            checks += 1;
            if !a.is_zero() {
                assert_eq!(&a * &a.inv().unwrap(), one);
            } else {
                assert!(a.inv().is_err());
            }
            checks += 1;
            let text = cyclo_to_string(&a);
            assert_eq!(parse_cyclo(&text, order).unwrap(), a);
            checks += 1;
        }
    }
    assert_eq!(checks, 10_000);
    println!(
        "PASS criterion 8: {checks} exact field-axiom and round-trip checks in the \
         third and sixth cyclotomic fields"
    );
}

#[test]
fn criterion_9_group_validity() {
    for name in ["ceva6", "dualhesse9", "hesse12"] {
        let b = bundle(name);
        assert!(
            b.group.verify(&b.arr, &b.lattice),
            "{name}: closure, inverses, and line preservation"
        );
        for class in &b.classes {
            for &len in &class.nu_linear {
                assert_eq!(
                    b.group.order() % len,
                    0,
                    "{name}: orbit length {len} must divide the group order"
                );
            }
        }
    }
    println!(
        "PASS criterion 9: all builtin groups pass exhaustive closure/inverse/line-set \
         verification and orbit lengths divide the group order"
    );
}

#[test]
fn criterion_10_json_reports_are_deterministic() {
    for name in ["ceva6", "dualhesse9", "hesse12"] {
        let run = || {
            let out = Command::new(env!("CARGO_BIN_EXE_linecomp"))
                .args(["analyze", "--builtin", name, "--json"])
                .output()
                .expect("the binary runs");
            assert!(
                out.status.success(),
                "analyze --builtin {name} --json failed: {}",
                String::from_utf8_lossy(&out.stderr)
            );
            out.stdout
        };
        let first = run();
        let second = run();
        assert!(!first.is_empty());
        assert_eq!(first, second, "{name}: reports must be byte-identical");
    }
    println!(
        "PASS criterion 10: analyze --builtin {{ceva6,dualhesse9,hesse12}} --json is \
         byte-identical across runs"
    );
}
