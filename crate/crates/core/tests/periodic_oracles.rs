mod common;

use std::collections::HashMap;

use common::*;
use proptest::prelude::*;
use wildmat::periodic::{
    contains_double_ray, contains_finite_cycle, is_base_ma, is_circuit_ma, is_independent_ma, is_skew_cut_edges,
    EdgeId, EpSet, Family, PeriodicDoubleRay, Vertex,
};

const DEEP: usize = 200;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

/// Structural check of an explicit double ray inside a window: no cycle,
/// degree at most two everywhere and exactly two away from the window
/// edge, and everything in the early cells in one component.
fn looks_like_double_ray(f: Family, ray: &PeriodicDoubleRay, depth: usize) -> bool {
    let r = ray.edge_set(f);
    if r.is_finite() || window_has_cycle(&r, depth) {
        return false;
    }
    let edges = r.restrict(depth);
    let g = adjacency(f, &edges, depth);
    let vertices = f.window_vertices(depth);
    let period = ray.tails[0].period;
    let interior = f.last_cell(depth) - 2 * period;
    let mut uf: Vec<usize> = (0..g.n).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for &(a, b) in &g.edges {
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        uf[ra] = rb;
    }
    let mut root = None;
    for (i, v) in vertices.iter().enumerate() {
        let deg = g.adj[i].len();
        if deg > 2 {
            return false;
        }
        let early = v.cell().is_none_or(|c| c < interior);
        if early && deg > 0 {
            if deg != 2 {
                return false;
            }
            let r = find(&mut uf, i);
            if *root.get_or_insert(r) != r {
                return false;
            }
        }
    }
    root.is_some()
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn finite_cycle_agrees_with_window_search(s in ep_set()) {
        let decided = contains_finite_cycle(&s);
        prop_assert_eq!(decided.is_some(), window_has_cycle(&s, DEEP));
        if let Some(c) = decided {
            let f = s.family();
            prop_assert!(c.iter().all(|&e| s.contains(e)));
            let depth = c.iter().filter_map(|&e| Family::owner(e)).max().unwrap_or(f.first_cell()) + 2 - f.first_cell();
            let only = EpSet::finite(f, c.clone()).unwrap();
            prop_assert!(window_has_cycle(&only, depth));
            prop_assert!(is_circuit_ma(&only), "extracted cycle {:?}", s.edge_names(&c));
        }
    }

    #[test]
    fn double_ray_agrees_with_fan_oracle(s in ep_set()) {
        let decision = contains_double_ray(&s);
        let f = s.family();
        match decision.certificate() {
            Some(cert) => {
                for depth in [s.onset() + 2 * s.period() + 2, 40, DEEP] {
                    prop_assert!(window_has_two_fan(&s, depth), "depth {depth}");
                }
                if let Some(ray) = &cert.ray {
                    let r = ray.edge_set(f);
                    prop_assert!(r.is_subset(&s).unwrap());
                    prop_assert!(looks_like_double_ray(f, ray, 60));
                }
            }
            None => {
                prop_assert!(!window_has_two_fan(&s, DEEP));
            }
        }
    }

    #[test]
    fn fan_oracle_is_stable_past_the_decision(s in ep_set()) {
        // The sweep stops at the first repeated summary; past that cell plus
        // two periods the window oracle must already give the final answer.
        let decision = contains_double_ray(&s);
        let at = match &decision {
            wildmat::periodic::DoubleRayDecision::Found(c) => c.stabilized_at,
            wildmat::periodic::DoubleRayDecision::Absent { stabilized_at } => *stabilized_at,
        };
        let depth = at + 2 * s.period() + 2 - s.family().first_cell();
        prop_assert_eq!(window_has_two_fan(&s, depth), decision.is_found());
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn base_check_matches_window_brute_force(
        f in prop::sample::select(Family::ALL.to_vec()),
        extra in 0usize..3,
        period in 1usize..=2,
        bits in prop::collection::vec(prop::bool::weighted(0.3), 64),
    ) {
        let s = build(f, extra, period, &bits);
        let depth = 40;
        let independent = window_independent(&s, depth);
        let verdict = is_base_ma(&s);
        if !independent {
            prop_assert!(!verdict.is_base());
            return Ok(());
        }
        let probe_cells = s.onset() + 6 * s.period();
        let mut extendable = None;
        for e in f.prefix_edges().chain((f.first_cell()..probe_cells).flat_map(|index| {
            (0..f.n_slots()).map(move |slot| EdgeId::Cell { index, slot })
        })) {
            if !s.contains(e) && window_independent(&s.with_edge(e), depth) {
                extendable = Some(e);
                break;
            }
        }
        prop_assert_eq!(verdict.is_base(), extendable.is_none(), "{:?} / {:?}", verdict, extendable.map(|e| f.edge_name(e)));
    }

    #[test]
    fn independence_matches_windows(s in ep_set()) {
        prop_assert_eq!(is_independent_ma(&s), window_independent(&s, 80));
    }

    #[test]
    fn circuits_lose_dependence_when_any_edge_goes(s in ep_set()) {
        if is_circuit_ma(&s) {
            let f = s.family();
            let hi = s.onset() + 3 * s.period();
            for e in s.edges_in_cells(f.first_cell(), hi, true) {
                prop_assert!(is_independent_ma(&s.without_edge(e)));
            }
            prop_assert!(!is_independent_ma(&s));
        }
    }
}

/// Cuts `δ(X)` over finite vertex sets `X` among the early cells.
fn finite_side_cuts(f: Family, cells: usize) -> HashMap<Vec<EdgeId>, ()> {
    let depth = cells + 1;
    let vertices: Vec<Vertex> = f
        .window_vertices(depth)
        .into_iter()
        .filter(|v| v.cell().is_none_or(|c| c < f.first_cell() + cells))
        .collect();
    let edges = f.window_edges(depth);
    let mut out = HashMap::new();
    for mask in 1u32..(1 << vertices.len()) {
        let inside = |v: Vertex| vertices.iter().position(|&w| w == v).is_some_and(|k| mask >> k & 1 == 1);
        let mut cut: Vec<EdgeId> = edges
            .iter()
            .copied()
            .filter(|&e| {
                let (a, b) = f.endpoints(e);
                inside(a) != inside(b)
            })
            .collect();
        if !cut.is_empty() {
            cut.sort();
            out.insert(cut, ());
        }
    }
    out
}

#[test]
fn skew_cuts_match_minimal_finite_side_cuts() {
    for f in Family::ALL {
        let cells = if f == Family::DoubledH { 3 } else { 4 };
        let cuts = finite_side_cuts(f, cells + 1);
        let minimal: Vec<&Vec<EdgeId>> = cuts
            .keys()
            .filter(|c| !cuts.keys().any(|d| d.len() < c.len() && d.iter().all(|e| c.contains(e))))
            .collect();
        // Every small edge set in the early cells, checked both ways.
        let pool: Vec<EdgeId> = f
            .window_edges(cells)
            .into_iter()
            .collect();
        let mut checked = 0;
        for mask in 1u64..(1u64 << pool.len()) {
            if mask.count_ones() > 4 {
                continue;
            }
            let mut s: Vec<EdgeId> = (0..pool.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pool[k]).collect();
            s.sort();
            let brute = minimal.iter().any(|c| **c == s);
            assert_eq!(is_skew_cut_edges(f, &s), brute, "{f} {:?}", s.iter().map(|&e| f.edge_name(e)).collect::<Vec<_>>());
            checked += 1;
        }
        assert!(checked > 100);
    }
}

#[test]
fn every_double_ray_of_h_uses_one_rung() {
    let f = Family::DoubledH;
    let mut runner = proptest::test_runner::TestRunner::new(config(64));
    let seen = std::cell::Cell::new(0);
    runner
        .run(&(0usize..3, 1usize..=2, prop::collection::vec(prop::bool::weighted(0.5), 64)), |(extra, period, bits)| {
            let s = build(f, extra, period, &bits);
            if let Some(ray) = contains_double_ray(&s).certificate().and_then(|c| c.ray.clone()) {
                let r = ray.edge_set(f);
                let rungs = EpSet::slots_from(f, 1, &["r", "r'"]).unwrap();
                let meet = r.intersection(&rungs).unwrap();
                prop_assert_eq!(meet.cardinality(), wildmat::periodic::Cardinality::Finite(1));
                seen.set(seen.get() + 1);
            }
            Ok(())
        })
        .unwrap();
    assert!(seen.get() > 0);
}
