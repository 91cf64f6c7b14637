use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wildmat::corpus::connected_multigraphs;
use wildmat::periodic::{EdgeId, EpSet, Family, Vertex};
use wildmat::thin::*;
use wildmat::{verify_axioms, FiniteGraph};

const G: Family = Family::RayedG;

fn name(s: &str) -> EdgeId {
    G.parse_edge(s).unwrap()
}

fn ok<F: Field>(lam: &ThinCoefficients<F>) -> bool {
    is_thin_dependence(lam, &ThinFamily::m_plus()).unwrap().is_ok()
}

#[test]
fn oneray_family_up_to_30() {
    for n in 0..=30 {
        let lam: ThinCoefficients<Q> = build_lambda_f_oneray(n);
        assert!(ok(&lam), "n = {n}");
        assert!(!lam.is_zero());
        assert!(lam.support().same_set(&oneray_target(n)).unwrap(), "n = {n}");
        assert!(support_degree_check(&lam, &ThinFamily::m_plus()).unwrap());
    }
    let zero: ThinCoefficients<Q> = build_lambda_f_oneray(0);
    assert!(zero.value(name("l")).is_zero());
    assert_eq!(zero.value(name("r:0")), Q::from_i64(1));
}

#[test]
fn threerung_family_up_to_30() {
    let mut count = 0;
    for n in 2..=30 {
        for m in 1..n {
            for l in 0..m {
                let lam: ThinCoefficients<Q> = build_lambda_f_threerung(l, m, n).unwrap();
                assert!(ok(&lam), "({l}, {m}, {n})");
                assert!(lam.support().same_set(&threerung_target(l, m, n).unwrap()).unwrap());
                assert!(support_degree_check(&lam, &ThinFamily::m_plus()).unwrap());
                let rm = lam.value(EdgeId::Cell { index: m, slot: 2 });
                let rn = lam.value(EdgeId::Cell { index: n, slot: 2 });
                assert_eq!(rm, Q::from_i64(n as i64));
                assert_eq!(rn, Q::from_i64(-((m - l) as i64)));
                count += 1;
            }
        }
    }
    assert_eq!(count, (2..=30).map(|n| n * (n - 1) / 2).sum::<usize>());
}

/// The solver finds the same dependence as the explicit builders, up to a
/// scalar, so each of these circuits carries a one-dimensional space of
/// dependences.
fn proportional(a: &ThinCoefficients<Q>, b: &ThinCoefficients<Q>) -> bool {
    let s = a.support();
    if !s.same_set(&b.support()).unwrap() {
        return false;
    }
    let edges = s.edges_in_cells(G.first_cell(), s.onset() + 2 * s.period(), true);
    let ratio = a.value(edges[0]).div(&b.value(edges[0])).unwrap();
    edges.iter().all(|&e| a.value(e) == b.value(e).mul(&ratio))
}

#[test]
fn solver_recovers_builders() {
    let f = ThinFamily::m_plus();
    for n in 1..8 {
        let solved: ThinCoefficients<Q> = solve_thin_dependence(&f, &oneray_target(n)).unwrap();
        assert!(proportional(&solved, &build_lambda_f_oneray(n)), "n = {n}");
    }
    for (l, m, n) in [(0, 1, 2), (1, 2, 4), (2, 5, 9)] {
        let solved: ThinCoefficients<Q> = solve_thin_dependence(&f, &threerung_target(l, m, n).unwrap()).unwrap();
        assert!(proportional(&solved, &build_lambda_f_threerung(l, m, n).unwrap()));
    }
}

#[test]
fn solver_handles_finite_circuit_shapes() {
    let f = ThinFamily::m_plus();
    let targets = [
        two_squares_target(0, 2).unwrap(),
        two_squares_target(1, 5).unwrap(),
        loop_square_target(3),
        theta_target(0, 1, 2).unwrap(),
        theta_target(1, 3, 6).unwrap(),
    ];
    for t in targets {
        let lam: ThinCoefficients<Q> = solve_thin_dependence(&f, &t).unwrap();
        assert!(ok(&lam));
        assert!(lam.support().same_set(&t).unwrap());
        assert!(support_degree_check(&lam, &f).unwrap());
    }
    // Over GF(3) the twists of r:3 and r:6 both vanish, so the square cycle
    // between them is already dependent and the theta is no circuit.
    let lam3: ThinCoefficients<Gf3> = solve_thin_dependence(&f, &two_squares_target(1, 5).unwrap()).unwrap();
    assert!(is_thin_dependence(&lam3, &f).unwrap().is_ok());
    let theta = theta_target(1, 3, 6).unwrap();
    assert!(matches!(solve_thin_dependence::<Gf3>(&f, &theta), Err(ThinError::NoDependence(_))));
}

#[test]
fn single_circuits_of_m_carry_no_dependence() {
    let f = ThinFamily::m_plus();
    // A square alone: the twist at * forces its rung values to vanish.
    let sq = EpSet::finite(G, square(2)).unwrap();
    assert!(matches!(solve_thin_dependence::<Q>(&f, &sq), Err(ThinError::NoDependence(_))));
    // The double ray from r:n with n ≥ 1 likewise.
    let ray = oneray_target(4).without_edge(name("l"));
    assert!(matches!(solve_thin_dependence::<Q>(&f, &ray), Err(ThinError::NoDependence(_))));
}

#[test]
fn untwisted_rung_zero_makes_the_ray_dependent() {
    // r:0 carries no twist, so the double ray from r:0 is dependent on its
    // own and the loop cannot join it.
    let f = ThinFamily::m_plus();
    assert!(solve_thin_dependence::<Q>(&f, &oneray_target(0)).is_ok());
    let with_loop = oneray_target(0).with_edge(name("l"));
    assert!(matches!(solve_thin_dependence::<Q>(&f, &with_loop), Err(ThinError::NoDependence(_))));
}

#[test]
fn ill_defined_at_the_twist_vertex() {
    let lam = ThinCoefficients::<Q>::new(
        G,
        BTreeMap::new(),
        1,
        vec![PeriodicValue { slot: 2, residue: 0, onset: 0, value: Q::from_i64(1) }],
    )
    .unwrap();
    let v = is_thin_dependence(&lam, &ThinFamily::m_plus()).unwrap();
    assert_eq!(v, ThinVerdict::IllDefinedAt { vertex: "*".into() });
    // Without the twist, rungs alone fail at a vertex instead.
    assert!(matches!(is_thin_dependence(&lam, &ThinFamily::graph(G)).unwrap(), ThinVerdict::NonzeroAt { .. }));
}

#[test]
fn degree_check_requires_a_dependence() {
    let lam = ThinCoefficients::from_explicit(G, [(name("p:0"), Q::from_i64(1))]);
    assert!(matches!(support_degree_check(&lam, &ThinFamily::m_plus()), Err(ThinError::NotADependence(_))));
}

#[test]
fn coefficient_files_round_trip() {
    for n in [0, 3, 17] {
        let lam: ThinCoefficients<Q> = build_lambda_f_oneray(n);
        let json = serde_json::to_string(&lam.to_file()).unwrap();
        let file: CoefficientsFile = serde_json::from_str(&json).unwrap();
        assert_eq!(file.parse::<Q>(G).unwrap(), lam);
        assert_eq!(serde_json::to_string(&file).unwrap(), json);
    }
}

fn window_sum<F: Field>(lam: &ThinCoefficients<F>, f: &ThinFamily, v: Vertex, cells: usize) -> Option<F> {
    let mut edges: Vec<EdgeId> = G.prefix_edges().collect();
    for index in 0..cells {
        edges.extend((0..G.n_slots()).map(|slot| EdgeId::Cell { index, slot }));
    }
    let mut sum = F::zero();
    let mut nonzero = 0;
    for e in edges {
        let c = f.value(e, v);
        let term = lam.value(e).mul(&F::from_i64(c));
        if !term.is_zero() {
            nonzero += 1;
            sum = sum.add(&term);
        }
    }
    // A vertex meets at most a handful of edges of the window unless
    // infinitely many rungs reach the twist vertex.
    (nonzero <= 10).then_some(sum)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn dependence_check_agrees_with_direct_evaluation(
        twisted in any::<bool>(),
        explicit in prop::collection::vec((0usize..4, 0usize..3, -2i64..=2), 0..8),
        loop_value in -2i64..=2,
        period in 1usize..=2,
        onset in 0usize..4,
        periodic in prop::collection::vec(-1i64..=1, 6),
    ) {
        let f = if twisted { ThinFamily::m_plus() } else { ThinFamily::graph(G) };
        let mut ex: BTreeMap<EdgeId, Q> = explicit
            .into_iter()
            .map(|(index, slot, v)| (EdgeId::Cell { index, slot }, Q::from_i64(v)))
            .collect();
        ex.insert(EdgeId::Prefix(0), Q::from_i64(loop_value));
        let per = (0..3)
            .flat_map(|slot| (0..period).map(move |r| (slot, r)))
            .zip(periodic)
            .filter(|(_, v)| *v != 0)
            .map(|((slot, residue), v)| PeriodicValue { slot, residue, onset, value: Q::from_i64(v) })
            .collect();
        let lam = ThinCoefficients::new(G, ex, period, per).unwrap();
        let verdict = is_thin_dependence(&lam, &f).unwrap();
        let cells = 60;
        let mut expected = true;
        let mut ill = false;
        let vertices = std::iter::once(Vertex::Prefix(0))
            .chain((0..cells - 2).flat_map(|index| (0..2).map(move |label| Vertex::Cell { index, label })));
        for v in vertices {
            match window_sum(&lam, &f, v, cells) {
                None => { ill = true; expected = false; break; }
                Some(s) => if !s.is_zero() { expected = false; break; }
            }
        }
        prop_assert_eq!(verdict.is_ok(), expected, "{:?}", verdict);
        prop_assert_eq!(matches!(verdict, ThinVerdict::IllDefinedAt { .. }), ill);
    }
}

#[test]
fn finite_graphs_match_their_cycle_matroids() {
    for g in connected_multigraphs(4) {
        assert!(check_thm53_finite::<Q>(&g).unwrap());
        assert!(check_thm53_finite::<Gf2>(&g).unwrap());
        assert!(check_thm53_finite::<Gf3>(&g).unwrap());
        let m = thin_sums_matroid_finite(&FiniteThinFamily::<Q>::from_graph(&g)).unwrap();
        let indep = m.independent_sets().unwrap();
        assert!(verify_axioms(m.ground(), indep.members()).unwrap().is_ok());
    }
    let parallel = FiniteGraph::new(2, vec![(0, 1), (0, 1)]);
    let m = thin_sums_matroid_finite(&FiniteThinFamily::<Q>::from_graph(&parallel)).unwrap();
    assert_eq!(m.rank(), 1);
    assert_eq!(m.bases().len(), 2);
    let lp = FiniteGraph::new(1, vec![(0, 0)]);
    assert!(check_thm53_finite::<Q>(&lp).unwrap());
    assert_eq!(thin_sums_matroid_finite(&FiniteThinFamily::<Q>::from_graph(&lp)).unwrap().rank(), 0);
}

#[test]
fn canonical_recurrence() {
    for chain in [Chain::P, Chain::Q] {
        let fam = SkewFamily::<Q>::canonical(100, chain);
        let rec = mu_nu_recurrence(&fam.lambda0, &fam.lambdas, chain).unwrap();
        assert!(rec.nu.iter().chain(&rec.mu).all(|v| *v == Q::from_i64(1)));
        let all = fam.f.all_points();
        assert!(verify_telescoping(&rec.nu, &rec.mu, &fam.f, chain, 100, &all));
        assert!(verify_telescoping(&rec.nu, &rec.mu, &fam.f, chain, 0, &all));
        assert!(!rec.lambda_prime.value(EdgeId::Cell { index: 0, slot: 2 }).is_zero());
        let checked = lambda_prime_zero_sum(&rec, &fam.f, &all).unwrap();
        assert!(checked >= 100);
        let mut bad = rec.mu.clone();
        bad[5] = bad[5].add(&Q::from_i64(1));
        assert!(!verify_telescoping(&rec.nu, &bad, &fam.f, chain, 100, &all));
    }
}

#[test]
fn recurrence_uses_ratios_only() {
    let fam = SkewFamily::<Q>::canonical(12, Chain::P);
    let base = mu_nu_recurrence(&fam.lambda0, &fam.lambdas, Chain::P).unwrap();
    let mut scaled = fam.lambdas.clone();
    scaled[1] = scaled[1].scaled(&Q::from_i64(7));
    let again = mu_nu_recurrence(&fam.lambda0, &scaled, Chain::P).unwrap();
    assert_eq!(base.nu, again.nu);
    assert_eq!(base.mu, again.mu);
}

#[test]
fn random_families_over_q_and_gf3() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..40 {
        let chain = if trial % 2 == 0 { Chain::P } else { Chain::Q };
        let k = 1 + trial % 30;
        let fam = SkewFamily::random(k, chain, &mut rng, small_rational);
        let rec = mu_nu_recurrence(&fam.lambda0, &fam.lambdas, chain).unwrap();
        let all = fam.f.all_points();
        assert!(verify_telescoping(&rec.nu, &rec.mu, &fam.f, chain, k, &all));
        assert!(rec.nu.iter().chain(&rec.mu).all(|v| !v.is_zero()));
        assert!(lambda_prime_zero_sum(&rec, &fam.f, &chain_points(&fam.f, chain, k)).unwrap() == k);

        let fam3 = SkewFamily::random(k, chain, &mut rng, nonzero_gf3);
        let rec3 = mu_nu_recurrence(&fam3.lambda0, &fam3.lambdas, chain).unwrap();
        assert!(verify_telescoping(&rec3.nu, &rec3.mu, &fam3.f, chain, k, &fam3.f.all_points()));
        assert!(lambda_prime_zero_sum(&rec3, &fam3.f, &fam3.f.all_points()).is_ok());
    }
}
