use wildmat::corpus::{connected_multigraphs, default_corpus};
use wildmat::matroid::subsets_of;
use wildmat::ops::*;
use wildmat::{verify_axioms, AxiomVerdict, ElementSet, FiniteMatroid, Ground, SetFamily};

/// Circuits straight from the definition: dependent sets all of whose
/// one-smaller subsets are independent.
fn brute_circuits(m: &FiniteMatroid) -> Vec<ElementSet> {
    let indep = |s: ElementSet| m.bases().iter().any(|b| s.is_subset(*b));
    let mut out: Vec<ElementSet> = subsets_of(m.ground().full())
        .filter(|&s| !indep(s) && s.iter().all(|e| indep(s.without(e))))
        .collect();
    out.sort();
    out
}

fn ground_is_base(m: &FiniteMatroid) -> bool {
    m.is_base(m.ground().full())
}

#[test]
fn corpus_size_and_axioms() {
    let corpus = default_corpus();
    assert_eq!(corpus.len(), 694);
    for m in &corpus {
        let indep = m.independent_sets().unwrap();
        assert_eq!(verify_axioms(m.ground(), indep.members()).unwrap(), AxiomVerdict::Ok);
    }
    let counts: Vec<usize> = (0..=6)
        .map(|k| connected_multigraphs(k).len())
        .collect();
    assert_eq!(counts, [1, 3, 9, 33, 155, 915, 6545]);
}

#[test]
fn seeded_violations_are_rejected() {
    let g = Ground::letters(3);
    let s = |names: &[&str]| g.set(names).unwrap();
    let no_empty = [s(&["a"])];
    let not_closed = [ElementSet::EMPTY, s(&["a"]), s(&["a", "b"])];
    let no_exchange = [ElementSet::EMPTY, s(&["a"]), s(&["b"]), s(&["c"]), s(&["b", "c"])];
    let axioms: Vec<&str> = [&no_empty[..], &not_closed, &no_exchange]
        .iter()
        .map(|f| match verify_axioms(&g, f).unwrap() {
            AxiomVerdict::Violated(v) => v.axiom(),
            AxiomVerdict::Ok => "ok",
        })
        .collect();
    assert_eq!(axioms, ["I1", "I2", "I3"]);
}

#[test]
fn circuits_match_the_definition_and_duality_is_an_involution() {
    for m in default_corpus() {
        assert_eq!(m.circuits().unwrap().members(), brute_circuits(&m).as_slice());
        assert_eq!(m.dual().dual(), m);
        assert_eq!(m.cocircuits().unwrap(), m.dual().circuits().unwrap());
    }
}

#[test]
fn circuits_and_cocircuits_never_meet_in_one_element() {
    for m in default_corpus() {
        let circuits = m.circuits().unwrap();
        let cocircuits = m.cocircuits().unwrap();
        for &c in circuits.members() {
            for &d in cocircuits.members() {
                assert_ne!(c.intersection(d).len(), 1);
            }
        }
        let (k, witness) = m.max_circuit_cocircuit_intersection().unwrap();
        assert!(k <= m.ground().len());
        if let Some((c, d)) = witness {
            assert_eq!(c.intersection(d).len(), k);
            assert_ne!(k, 1);
        }
    }
}

#[test]
fn deletion_and_contraction_are_dual() {
    for m in default_corpus() {
        for e in 0..m.ground().len() {
            let x = ElementSet::singleton(e);
            assert_eq!(m.delete(x).unwrap().dual(), m.dual().contract(x).unwrap());
            assert_eq!(m.contract(x).unwrap().dual(), m.dual().delete(x).unwrap());
        }
    }
}

#[test]
fn plus_circuits_by_lemma_match_brute_force() {
    let mut checked = 0;
    for m in default_corpus() {
        if ground_is_base(&m) {
            assert!(circuits_of_plus_via_lemma33(&m).is_err());
            continue;
        }
        let p = plus(&m).unwrap();
        assert_eq!(circuits_of_plus_via_lemma33(&m).unwrap(), p.circuits().unwrap());
        checked += 1;
    }
    assert!(checked > 500);
}

#[test]
fn minus_circuits_match_brute_force() {
    for m in default_corpus() {
        if m.rank() == 0 {
            assert!(minus(&m).is_err());
            continue;
        }
        assert_eq!(circuits_of_minus(&m).unwrap(), minus(&m).unwrap().circuits().unwrap());
    }
}

#[test]
fn plus_and_minus_are_dual() {
    for m in default_corpus() {
        if ground_is_base(&m) {
            continue;
        }
        let p = plus(&m).unwrap();
        assert_eq!(p.dual(), minus(&m.dual()).unwrap());
        assert!(m.bases().iter().all(|&b| p.bases().iter().any(|&pb| b.is_subset(pb))));
        assert_eq!(p.rank(), m.rank() + 1);
    }
}

#[test]
fn union_with_rank_one_uniform_is_plus() {
    for m in default_corpus() {
        if ground_is_base(&m) {
            continue;
        }
        assert_eq!(union(&m, &rank_one_uniform_like(&m)).unwrap(), plus(&m).unwrap());
    }
    let u13 = FiniteMatroid::uniform(1, 3);
    assert_eq!(union(&u13, &u13).unwrap(), FiniteMatroid::uniform(2, 3));
}

#[test]
fn circuits_of_m_become_independent_in_plus() {
    for m in default_corpus() {
        if ground_is_base(&m) {
            continue;
        }
        let p = plus(&m).unwrap();
        let circuits = m.circuits().unwrap();
        let plus_circuits = p.circuits().unwrap();
        for &c in circuits.members() {
            assert!(p.is_independent(c).unwrap());
            assert!(!plus_circuits.contains(c));
        }
        // A set is independent in M⁺ iff removing some single element
        // leaves an M-independent set.
        for s in subsets_of(m.ground().full()) {
            let by_removal = m.is_independent(s).unwrap() || s.iter().any(|e| m.is_independent(s.without(e)).unwrap());
            assert_eq!(p.is_independent(s).unwrap(), by_removal);
        }
    }
}

#[test]
fn two_circuits_are_dependent_in_plus() {
    for m in default_corpus() {
        if ground_is_base(&m) {
            continue;
        }
        let circuits = m.circuits().unwrap();
        let cs = circuits.members();
        for (i, &a) in cs.iter().enumerate() {
            for &b in &cs[i + 1..] {
                assert!(check_cor34(&m, a, b).unwrap());
            }
        }
    }
}

#[test]
fn circuit_families_are_antichains() {
    for m in default_corpus() {
        for fam in [m.circuits().unwrap(), m.cocircuits().unwrap()] {
            let sets: &SetFamily = &fam;
            for &a in sets.members() {
                for &b in sets.members() {
                    assert!(a == b || !a.is_subset(b));
                }
            }
        }
    }
}

#[test]
fn finite_matroids_meet_no_wildness_hypothesis() {
    for m in default_corpus() {
        let r = thm35_hypotheses(&m).unwrap();
        assert!(!r.implies_wild());
        assert_eq!(finitarization(&m), m);
    }
}
