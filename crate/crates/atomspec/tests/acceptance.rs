//! Acceptance gate: one test per criterion, each printing a pass line and
//! asserting its runtime budget. The exhaustive criteria sweep every
//! labeled poset (with identity linear extension) of the stated size —
//! every finite poset is isomorphic to one of these.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use atomspec::model::{
    model_from_commutative_poset, model_from_quiver, model_from_triangular, QuiverPresentation,
};
use atomspec::poset::{FinitePoset, PointSubset};
use atomspec::symbolic::{graded, omega};
use atomspec::{brute_force_qualifying, check_dimension_bound, check_epi_containment,
    classify_graded_kx, gldim_via_atoms, graded_dims, model_graded_kx, qualifying_opens,
    DimValue};
use graded::{GradedPoint, GradedSetDescriptor};
use omega::{OmegaPoint, OmegaSetDescriptor};

const SEED: u64 = 0x5eed_a70e;

fn report(criterion: u32, what: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("[PASS] criterion {criterion}: {what} ({elapsed:?})");
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded budget {budget:?}: {elapsed:?}"
    );
}

/// All posets on `n` named points whose order respects the index order
/// (one representative per choice of forward relations; transitive
/// closure applied by the constructor).
fn all_posets(n: usize) -> Vec<FinitePoset> {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let rels: Vec<(String, String)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &(i, j))| (names[i].clone(), names[j].clone()))
            .collect();
        out.push(FinitePoset::from_relations(&names, &rels).unwrap());
    }
    out
}

fn random_poset(rng: &mut ChaCha8Rng, max_points: usize) -> FinitePoset {
    let n = rng.gen_range(1..=max_points);
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.4) {
                rels.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    FinitePoset::from_relations(&names, &rels).unwrap()
}

fn random_quiver(rng: &mut ChaCha8Rng) -> QuiverPresentation {
    let n = rng.gen_range(1..=5);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let arrows = (0..rng.gen_range(0..=8))
        .map(|_| {
            (
                vertices[rng.gen_range(0..n)].clone(),
                vertices[rng.gen_range(0..n)].clone(),
                rng.gen_range(1..=3),
            )
        })
        .collect();
    QuiverPresentation { vertices, arrows }
}

#[test]
fn criterion_1_counterexample_reproduction() {
    let start = Instant::now();
    let spectral = omega::spectral_check();
    assert!(spectral.kolmogorov);
    assert!(spectral.quasi_compact);
    assert!(spectral.qc_intersection);
    assert!(spectral.qc_basis);
    assert!(spectral.sober);

    let x_inf = OmegaSetDescriptor::singleton(OmegaPoint::Infinity);
    assert_eq!(omega::obstruction_points(), x_inf);

    let l = x_inf.limit_points();
    assert_eq!(l, x_inf.complement());
    assert!(!l.is_closed());
    assert_eq!(
        x_inf.closure().limit_points(),
        OmegaSetDescriptor::whole_space()
    );
    report(
        1,
        "omega-plus-one is spectral with obstruction exactly {x_inf}",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_graded_kx_reproduction() {
    let start = Instant::now();
    let strat = graded::stratify();
    assert_eq!(strat.simple_level, 0);
    assert_eq!(strat.generic_level, 1);
    assert_eq!(strat.space_dim, 1);
    // sampled point levels over [-10, 10]: every s_i is a closed point
    // peeled at stage 0 (it is maximal once g is the only point below)
    let space = graded::truncate(-10, 10).unwrap();
    let levels = space.stratify();
    for i in -10..=10 {
        assert_eq!(levels.level[&format!("s({i})")], 0);
    }
    assert_eq!(levels.level["g"], 1);
    assert_eq!(graded::chain_dimension(), 0);

    let classification = classify_graded_kx();
    let listed: Vec<&str> = classification
        .families
        .iter()
        .filter(|f| f.listed_in_source)
        .map(|f| f.name.as_str())
        .collect();
    assert_eq!(listed, ["empty", "up-ray(i0)", "whole-space"]);
    let flagged: Vec<&str> = classification
        .families
        .iter()
        .filter(|f| !f.listed_in_source)
        .map(|f| f.name.as_str())
        .collect();
    assert_eq!(flagged, ["all-simples"]);
    // within a finite window, the families' representatives qualify and
    // controls do not
    for i0 in -10..=10 {
        assert!(atomspec::graded_open_qualifies(
            &GradedSetDescriptor::up_ray(i0, false)
        ));
    }
    assert!(!atomspec::graded_open_qualifies(
        &GradedSetDescriptor::singleton(GradedPoint::Simple(0))
    ));
    report(
        2,
        "graded k[x] KG levels, chain dimension, and the 3+1 qualifying families",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_3_gabriel_at_desk_scale() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..200 {
        let p = random_poset(&mut rng, 7);
        let m = model_from_commutative_poset(&p);
        let qualifying = qualifying_opens(&m, 7).unwrap();
        let opens: Vec<Vec<String>> = p
            .enumerate_opens(7)
            .unwrap()
            .iter()
            .map(|o| p.names(o))
            .collect();
        assert_eq!(qualifying.qualifying, opens);
    }
    report(
        3,
        "commutative model qualifying = all opens on 200 random posets <= 7 points",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_4_triangular_criterion() {
    let start = Instant::now();
    for n in 1..=5 {
        for p in all_posets(n) {
            let m = model_from_triangular(&p).unwrap();
            let got: BTreeSet<Vec<String>> = qualifying_opens(&m, 2 * n)
                .unwrap()
                .qualifying
                .into_iter()
                .collect();
            // independent enumeration: pairs of up-sets with containment
            let opens = p.enumerate_opens(n).unwrap();
            let mut expected = BTreeSet::new();
            for phi1 in &opens {
                for phi2 in &opens {
                    if phi1.is_subset(phi2) {
                        let mut names: Vec<String> = phi1
                            .iter()
                            .map(|i| format!("P1({})", p.elements()[i]))
                            .chain(phi2.iter().map(|i| format!("P2({})", p.elements()[i])))
                            .collect();
                        names.sort();
                        expected.insert(names);
                    }
                }
            }
            assert_eq!(got, expected, "poset {:?}", p.elements());
        }
    }
    report(
        4,
        "triangular qualifying = {(phi1, phi2) up-sets, phi1 <= phi2} on all posets <= 5 points",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_5_quiver_classification() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for _ in 0..100 {
        let q = random_quiver(&mut rng);
        let m = model_from_quiver(&q).unwrap();
        let qualifying = qualifying_opens(&m, 5).unwrap();
        assert_eq!(qualifying, brute_force_qualifying(&m, 5).unwrap());
        // third route: no arrow from outside into the subset
        let n = q.vertices.len();
        let mut expected = Vec::new();
        for mask in 0u64..(1 << n) {
            let inside = |v: &str| {
                let i = q.vertices.iter().position(|x| x == v).unwrap();
                mask >> i & 1 == 1
            };
            if q.arrows.iter().all(|(s, t, _)| inside(s) || !inside(t)) {
                let subset: PointSubset = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                expected.push(subset);
            }
        }
        m.space().sort_deterministic(&mut expected);
        let expected: Vec<Vec<String>> =
            expected.iter().map(|s| m.space().names(s)).collect();
        assert_eq!(qualifying.qualifying, expected);
    }
    report(
        5,
        "quiver qualifying = brute force = no-arrow-inward subsets on 100 random quivers",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_6_limit_point_lemma_suite() {
    let start = Instant::now();
    for n in 1..=5 {
        for p in all_posets(n) {
            let masks = 1u64 << n;
            let subset = |m: u64| -> PointSubset { (0..n).filter(|i| m >> i & 1 == 1).collect() };
            for a in 0..masks {
                let sa = subset(a);
                // L({x}) = closure({x}) \ {x}
                for x in 0..n {
                    let sx = p.singleton(x);
                    assert_eq!(p.limit_points(&sx), p.closure(&sx).difference(&sx));
                }
                // L(S) closed; L(closure(S)) = L(S)
                let l = p.limit_points(&sa);
                assert!(p.is_closed(&l));
                assert_eq!(p.limit_points(&p.closure(&sa)), l);
                // closed F: L(F) = F \ {open points of F}
                let f = p.closure(&sa);
                let mut open_points = p.empty_subset();
                for x in f.iter() {
                    if f.iter().all(|y| !p.lt(x, y)) {
                        open_points.insert(x);
                    }
                }
                assert_eq!(p.limit_points(&f), f.difference(&open_points));
                for b in 0..masks {
                    let sb = subset(b);
                    // L(S1 ∪ S2) = L(S1) ∪ L(S2)
                    assert_eq!(
                        p.limit_points(&sa.union(&sb)),
                        p.limit_points(&sa).union(&p.limit_points(&sb))
                    );
                    // open U: U ∩ cl(S) ⊆ cl(U ∩ S) and U ∩ L(S) ⊆ L(U ∩ S)
                    if p.is_open(&sb) {
                        assert!(sb
                            .intersection(&p.closure(&sa))
                            .is_subset(&p.closure(&sb.intersection(&sa))));
                        assert!(sb
                            .intersection(&p.limit_points(&sa))
                            .is_subset(&p.limit_points(&sb.intersection(&sa))));
                    }
                }
            }
        }
    }
    report(
        6,
        "limit-point lemma identities on all posets <= 5 points, all subsets",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_7_dimension_theorems() {
    let start = Instant::now();
    let cap = 4;
    let degrees: Vec<u32> = (0..=cap).collect();
    // builtin models with complete Ext data
    let builtins = vec![
        model_from_quiver(&QuiverPresentation::kronecker()).unwrap(),
        model_from_quiver(&QuiverPresentation {
            vertices: vec!["v".into()],
            arrows: vec![],
        })
        .unwrap(),
        model_from_quiver(&QuiverPresentation {
            vertices: vec!["v".into()],
            arrows: vec![("v".into(), "v".into(), 1)],
        })
        .unwrap(),
    ];
    for m in &builtins {
        assert!(check_epi_containment(m, &degrees).unwrap().pass());
        assert!(check_dimension_bound(m, cap).unwrap().pass());
    }
    // graded k[x] via the closed-form calculus
    let gd = graded_dims(&model_graded_kx(), (-10, 10));
    assert!(gd.containment_holds && gd.bound_holds);
    assert_eq!(gd.kg_dim, 1);
    // random hereditary quivers
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    for _ in 0..100 {
        let q = random_quiver(&mut rng);
        let m = model_from_quiver(&q).unwrap();
        assert!(check_epi_containment(&m, &degrees).unwrap().pass());
        assert!(check_dimension_bound(&m, cap).unwrap().pass());
        let expected = if q.arrows.is_empty() { 0 } else { 1 };
        assert_eq!(
            gldim_via_atoms(&m, cap).unwrap(),
            DimValue::Exact(expected)
        );
    }
    report(
        7,
        "containment + bound theorems on builtins and 100 random quivers, gldim by arrows",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_8_duality_and_spectral_suite() {
    let start = Instant::now();
    // exhaustive for <= 4 points
    for n in 1..=4 {
        for p in all_posets(n) {
            assert!(p.spectral_check().all_pass());
            assert_eq!(p.hochster_dual().hochster_dual(), p);
        }
    }
    // sampled for 5 and 6 points
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    for _ in 0..300 {
        let n = rng.gen_range(5..=6);
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let mut rels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.4) {
                    rels.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        let p = FinitePoset::from_relations(&names, &rels).unwrap();
        assert!(p.spectral_check().all_pass());
        assert_eq!(p.hochster_dual().hochster_dual(), p);
    }
    report(
        8,
        "hochster involution + spectral pass, exhaustive <= 4 points, sampled 5-6",
        start,
        Duration::from_secs(60),
    );
}
