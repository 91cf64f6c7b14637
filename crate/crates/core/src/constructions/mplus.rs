use super::certificate::{Certificate, CheckOutcome, Support};
use super::ConstructionError;
use crate::periodic::{
    contains_double_ray, contains_finite_cycle, intersection_cardinality, is_base_ma, is_circuit_ma, Cardinality,
    EdgeId, EpSet, Family,
};

const G: Family = Family::RayedG;
const LOOP: EdgeId = EdgeId::Prefix(0);

/// The objects behind the `M⁺` witness over `RAYED_G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MplusObjects {
    pub ray_start: usize,
    pub o: EpSet,
    pub o_prime: EpSet,
    pub o_double_prime: EpSet,
    pub base: EpSet,
}

impl MplusObjects {
    /// `O = {r_n} ∪ {p_i, q_i : i ≥ n}`, `O′ = O″ = {l}`,
    /// `B = {p_i} ∪ {r_i}`.
    pub fn standard(n: usize) -> MplusObjects {
        let tails = EpSet::slots_from(G, n, &["p", "q"]).expect("builtin slots");
        let o = tails.with_edge(EdgeId::Cell { index: n, slot: 2 });
        let lp = EpSet::finite(G, [LOOP]).expect("prefix edge");
        MplusObjects {
            ray_start: n,
            o,
            o_prime: lp.clone(),
            o_double_prime: lp,
            base: EpSet::slots_from(G, 0, &["p", "r"]).expect("builtin slots"),
        }
    }

    pub fn circuit(&self) -> EpSet {
        self.o.union(&self.o_double_prime).expect("same family")
    }

    pub fn cocircuit(&self) -> EpSet {
        self.base.complement()
    }
}

fn names(s: &EpSet) -> String {
    match s.finite_edges() {
        Some(es) => format!("{:?}", s.edge_names(&es)),
        None => format!("{s:?}"),
    }
}

/// Every claim of the witness, in a fixed order.
pub fn mplus_checks(ob: &MplusObjects, c: &EpSet, d: &EpSet) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let same_family = [&ob.o, &ob.o_prime, &ob.o_double_prime, &ob.base, c, d]
        .iter()
        .all(|s| s.family() == G);
    out.push(CheckOutcome::new("objects live on RAYED_G", same_family, ""));
    if !same_family {
        return out;
    }

    let ray = contains_double_ray(&ob.o);
    let o_is_ray = contains_finite_cycle(&ob.o).is_none() && ray.is_found() && !ob.o.is_finite();
    out.push(CheckOutcome::new(
        "O is a double ray",
        o_is_ray,
        match ray.certificate() {
            Some(cert) => format!("anchor {}", G.vertex_name(cert.anchor)),
            None => "no double ray found".to_string(),
        },
    ));
    out.push(CheckOutcome::new("O is a circuit of M_A(G)", is_circuit_ma(&ob.o), names(&ob.o)));
    out.push(CheckOutcome::new(
        "O′ is a circuit of M_A(G)",
        is_circuit_ma(&ob.o_prime),
        names(&ob.o_prime),
    ));
    out.push(CheckOutcome::new(
        "M has at least two circuits",
        !ob.o.same_set(&ob.o_prime).unwrap_or(true),
        "O and O′ are distinct circuits",
    ));

    // A single dependent element disjoint from O stays dependent in M/O,
    // so it is a loop, hence a circuit, of the contraction.
    let disjoint = ob.o.intersection(&ob.o_double_prime).map(|x| x.is_empty()).unwrap_or(false);
    let single = ob.o_double_prime.cardinality() == Cardinality::Finite(1);
    let dependent = contains_finite_cycle(&ob.o_double_prime).is_some();
    out.push(CheckOutcome::new(
        "O″ is a circuit of M/O",
        disjoint && single && dependent,
        format!("disjoint from O: {disjoint}, single edge: {single}, dependent in M: {dependent}"),
    ));
    out.push(CheckOutcome::new(
        "C = O ∪ O″",
        ob.o.union(&ob.o_double_prime).and_then(|u| u.same_set(c)).unwrap_or(false),
        names(c),
    ));

    let base = is_base_ma(&ob.base);
    out.push(CheckOutcome::new("B is a base of M_A(G)", base.is_base(), base.describe(G)));
    let o_minus_b = ob.o.difference(&ob.base).map(|x| x.cardinality());
    out.push(CheckOutcome::new(
        "O ∖ B is infinite",
        o_minus_b == Ok(Cardinality::Infinite),
        format!("{o_minus_b:?}"),
    ));
    out.push(CheckOutcome::new(
        "D = E ∖ B",
        ob.base.complement().same_set(d).unwrap_or(false),
        names(d),
    ));
    let meet = intersection_cardinality(c, d);
    out.push(CheckOutcome::new(
        "|C ∩ D| is infinite",
        meet == Ok(Cardinality::Infinite),
        format!("{meet:?}"),
    ));
    out
}

/// Verify the objects and package them; any failing check aborts with its
/// name.
pub fn certify_mplus(objects: MplusObjects) -> Result<Certificate, ConstructionError> {
    let c = objects.circuit();
    let d = objects.cocircuit();
    let checks = mplus_checks(&objects, &c, &d);
    let notes = vec![
        "C is a circuit of M⁺ because O is a circuit of M and O″ is a circuit of M/O".to_string(),
        "D is a cocircuit of M⁺ because E ∖ D = B is a base of M, so D is a base of M* and a circuit of (M*)⁻"
            .to_string(),
    ];
    let MplusObjects {
        ray_start,
        o,
        o_prime,
        o_double_prime,
        base,
    } = objects;
    Certificate::assemble(
        G,
        Support::MplusG {
            ray_start,
            o,
            o_prime,
            o_double_prime,
            base,
        },
        c,
        d,
        checks,
        notes,
    )
}

pub fn build_mplus_witness_at(n: usize) -> Result<Certificate, ConstructionError> {
    certify_mplus(MplusObjects::standard(n))
}

/// The witness with the double ray starting at rung `r:0`.
pub fn build_mplus_witness() -> Result<Certificate, ConstructionError> {
    build_mplus_witness_at(0)
}
