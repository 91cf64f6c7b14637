use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, CheckOutcome, Support};
use super::ConstructionError;
use crate::periodic::{intersection_cardinality, is_base_ma, is_independent_ma, Cardinality, EdgeId, EpSet, Family};

const H: Family = Family::DoubledH;
const U: usize = 0;
const D: usize = 1;
const R: usize = 2;
const U2: usize = 3;
const D2: usize = 4;
const R2: usize = 5;

fn edge(slot: usize, index: usize) -> EdgeId {
    EdgeId::Cell { index, slot }
}

fn set(pattern: &[(usize, usize)]) -> EpSet {
    EpSet::new(H, Vec::new(), H.first_cell(), 2, pattern.to_vec()).expect("valid pattern")
}

/// `C`: every horizontal edge together with the rung `r:1`.
pub fn build_c_union() -> EpSet {
    set(&[(U, 0), (U, 1), (D, 0), (D, 1), (U2, 0), (U2, 1), (D2, 0), (D2, 1)]).with_edge(edge(R, 1))
}

/// `D = {u_i} ∪ {r_i}`.
pub fn build_d_union() -> EpSet {
    set(&[(U, 0), (U, 1), (R, 0), (R, 1)])
}

/// `B₁ = {d_i} ∪ {u′_i, r′_i : i odd}`.
pub fn b1_union() -> EpSet {
    set(&[(D, 0), (D, 1), (U2, 1), (R2, 1)])
}

/// `B₂ = {d′_i} ∪ {u′_i, r′_i : i even} ∪ {r_1}`.
pub fn b2_union() -> EpSet {
    set(&[(D2, 0), (D2, 1), (U2, 0), (R2, 0)]).with_edge(edge(R, 1))
}

fn complement_of_d() -> EpSet {
    build_d_union().complement()
}

/// Two sets claimed independent in `M_A(H)` whose union covers
/// `(E ∖ D) + e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverWitness {
    pub e: String,
    pub first: EpSet,
    pub second: EpSet,
}

/// `B₁′` and `B₂′` for the rung index `n`: the `r′` edges below `n` trade
/// places between the two bases, `r_1` leaves `B₂′`, and `r_n` joins the
/// base whose parity matches `n`.
fn primed(n: usize) -> (EpSet, EpSet) {
    let (mut b1, mut b2) = (b1_union(), b2_union());
    for i in 1..n {
        let e = edge(R2, i);
        if i % 2 == 1 {
            b1 = b1.without_edge(e);
            b2 = b2.with_edge(e);
        } else {
            b1 = b1.with_edge(e);
            b2 = b2.without_edge(e);
        }
    }
    b2 = b2.without_edge(edge(R, 1));
    if n % 2 == 1 {
        b2 = b2.with_edge(edge(R, n));
    } else {
        b1 = b1.with_edge(edge(R, n));
    }
    (b1, b2)
}

/// The cover of `(E ∖ D) + e` for `e = r_n` or `e = u_m`.
///
/// For `u_m` the primed bases of `n = m + 1` are used: one base takes
/// `u_m` and gives up `r′_m`, the other takes `r′_m` and gives up `r_n`.
pub fn build_covers(e: &str) -> Result<CoverWitness, ConstructionError> {
    let id = H.parse_edge(e)?;
    let name = H.edge_name(id);
    let EdgeId::Cell { index, slot } = id else {
        return Err(ConstructionError::NotInD(name));
    };
    let (first, second) = match slot {
        R => primed(index),
        U => {
            let n = index + 1;
            let (b1, b2) = primed(n);
            let (takes_u, takes_r) = if n % 2 == 1 { (b1, b2) } else { (b2, b1) };
            let takes_u = takes_u.with_edge(id).without_edge(edge(R2, index));
            let takes_r = takes_r.with_edge(edge(R2, index)).without_edge(edge(R, n));
            if n % 2 == 1 {
                (takes_u, takes_r)
            } else {
                (takes_r, takes_u)
            }
        }
        _ => return Err(ConstructionError::NotInD(name)),
    };
    Ok(CoverWitness {
        e: name,
        first: first.normalized(),
        second: second.normalized(),
    })
}

/// Deliberately wrong cover for `u_m`: the primed bases with their roles
/// swapped and `u_m` added without the `r′` adjustments.
pub fn swapped_cover(m: usize) -> CoverWitness {
    let n = m + 1;
    let (b1, b2) = primed(n);
    let id = edge(U, m);
    let (first, second) = if n % 2 == 1 { (b2.with_edge(id), b1) } else { (b2, b1.with_edge(id)) };
    CoverWitness {
        e: H.edge_name(id),
        first,
        second,
    }
}

/// The three claims of one cover.
pub fn cover_checks(w: &CoverWitness) -> Vec<CheckOutcome> {
    let prefix = format!("cover {}", w.e);
    let e = match H.parse_edge(&w.e) {
        Ok(e) if w.first.family() == H && w.second.family() == H => e,
        _ => return vec![CheckOutcome::new(format!("{prefix}: well formed"), false, "bad edge or family")],
    };
    let in_d = build_d_union().contains(e);
    let first = is_independent_ma(&w.first);
    let second = is_independent_ma(&w.second);
    let target = complement_of_d().with_edge(e);
    let covered = w
        .first
        .union(&w.second)
        .and_then(|u| target.is_subset(&u))
        .unwrap_or(false);
    vec![
        CheckOutcome::new(format!("{prefix}: e lies in D"), in_d, ""),
        CheckOutcome::new(format!("{prefix}: first member independent"), first, ""),
        CheckOutcome::new(format!("{prefix}: second member independent"), second, ""),
        CheckOutcome::new(format!("{prefix}: union covers (E ∖ D) + e"), covered, ""),
    ]
}

/// One row of the window counting bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingRow {
    pub n: usize,
    /// `|E ∖ D|` inside the window `H_n`, by enumeration.
    pub lhs: usize,
    /// `2(2n − 1)`: at most this many edges of `H_n` are covered by two
    /// forests on its `2n` vertices.
    pub rhs: usize,
    pub two_edges_uncoverable: bool,
}

pub fn counting_check(n: usize) -> CountingRow {
    let lhs = complement_of_d().restrict(n).len();
    let rhs = 2 * (2 * n - 1);
    CountingRow {
        n,
        lhs,
        rhs,
        two_edges_uncoverable: lhs + 2 > rhs,
    }
}

fn counting_outcome(row: &CountingRow) -> CheckOutcome {
    let fresh = if row.n >= 1 { Some(counting_check(row.n)) } else { None };
    let passed = fresh == Some(*row) && row.lhs == 4 * row.n - 3 && row.two_edges_uncoverable;
    CheckOutcome::new(
        format!("counting H_{}", row.n),
        passed,
        format!("|E ∖ D| = {}, bound {}", row.lhs, row.rhs),
    )
}

/// `C − x` split into two independent sets, for a horizontal `x` or `r:1`:
/// the class of `x` loses `x` and keeps `r:1` with one bottom (or top)
/// class, everything else forms two disjoint rays.
pub fn split_c_without(x: EdgeId) -> Option<(EpSet, EpSet)> {
    let EdgeId::Cell { index, slot } = x else { return None };
    let pair = |a: usize, b: usize| set(&[(a, 0), (a, 1), (b, 0), (b, 1)]);
    let r1 = edge(R, 1);
    match slot {
        R if index == 1 => Some((pair(U, D), pair(U2, D2))),
        U | U2 | D | D2 => {
            let partner = |s: usize| match s {
                U => D2,
                U2 => D,
                D => U2,
                _ => U,
            };
            let twin = |s: usize| match s {
                U => U2,
                U2 => U,
                D => D2,
                _ => D,
            };
            let broken = pair(slot, partner(slot)).without_edge(x).with_edge(r1);
            let other = pair(twin(slot), partner(twin(slot)));
            Some((broken, other))
        }
        _ => None,
    }
}

/// Everything the union certificate claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionObjects {
    pub depth: usize,
    pub b1: EpSet,
    pub b2: EpSet,
    pub covers: Vec<CoverWitness>,
    pub counting: Vec<CountingRow>,
}

impl UnionObjects {
    pub fn standard(depth: usize) -> Result<UnionObjects, ConstructionError> {
        let mut covers = Vec::with_capacity(2 * depth);
        for n in 1..=depth {
            covers.push(build_covers(&format!("r:{n}"))?);
            covers.push(build_covers(&format!("u:{n}"))?);
        }
        Ok(UnionObjects {
            depth,
            b1: b1_union(),
            b2: b2_union(),
            covers,
            counting: (1..=depth).map(counting_check).collect(),
        })
    }
}

pub fn union_checks(ob: &UnionObjects, c: &EpSet, d: &EpSet) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let same_family = [&ob.b1, &ob.b2, c, d].iter().all(|s| s.family() == H);
    out.push(CheckOutcome::new("objects live on DOUBLED_H", same_family, ""));
    if !same_family {
        return out;
    }
    out.push(CheckOutcome::new(
        "C is all horizontal edges plus r:1",
        build_c_union().same_set(c).unwrap_or(false),
        format!("{c:?}"),
    ));
    out.push(CheckOutcome::new(
        "D is all u and r edges",
        build_d_union().same_set(d).unwrap_or(false),
        format!("{d:?}"),
    ));
    for (name, b) in [("B₁", &ob.b1), ("B₂", &ob.b2)] {
        let v = is_base_ma(b);
        out.push(CheckOutcome::new(format!("{name} is a base of M_A(H)"), v.is_base(), v.describe(H)));
    }
    out.push(CheckOutcome::new(
        "B₁ ∪ B₂ = (E ∖ D) + r:1",
        ob.b1
            .union(&ob.b2)
            .and_then(|u| u.same_set(&complement_of_d().with_edge(edge(R, 1))))
            .unwrap_or(false),
        "",
    ));
    let mut splits_ok = true;
    let mut first_bad = String::new();
    let horizontals = [U, D, U2, D2];
    let tested = std::iter::once(edge(R, 1))
        .chain((1..=ob.depth).flat_map(|i| horizontals.iter().map(move |&s| edge(s, i))));
    for x in tested {
        let ok = split_c_without(x).is_some_and(|(a, b)| {
            is_independent_ma(&a)
                && is_independent_ma(&b)
                && a.union(&b).and_then(|u| c.without_edge(x).is_subset(&u)).unwrap_or(false)
        });
        if !ok && splits_ok {
            splits_ok = false;
            first_bad = H.edge_name(x);
        }
    }
    out.push(CheckOutcome::new(
        "C minus any tested edge splits into two independent sets",
        splits_ok,
        if splits_ok { format!("r:1 and horizontals of cells 1..={}", ob.depth) } else { first_bad },
    ));

    let expected: Vec<String> = (1..=ob.depth).flat_map(|n| [format!("r:{n}"), format!("u:{n}")]).collect();
    let listed: Vec<&str> = ob.covers.iter().map(|w| w.e.as_str()).collect();
    out.push(CheckOutcome::new(
        "covers listed for r:n and u:n up to the depth",
        listed == expected.iter().map(String::as_str).collect::<Vec<_>>(),
        format!("{} covers", listed.len()),
    ));
    for w in &ob.covers {
        out.extend(cover_checks(w));
    }
    out.push(CheckOutcome::new(
        "counting rows listed up to the depth",
        ob.counting.iter().map(|r| r.n).eq(1..=ob.depth),
        format!("{} rows", ob.counting.len()),
    ));
    out.extend(ob.counting.iter().map(counting_outcome));
    let meet = intersection_cardinality(c, d);
    out.push(CheckOutcome::new(
        "|C ∩ D| is infinite",
        meet == Ok(Cardinality::Infinite),
        format!("{meet:?}"),
    ));
    out
}

pub fn certify_union(objects: UnionObjects) -> Result<Certificate, ConstructionError> {
    if objects.depth < 2 {
        return Err(ConstructionError::InsufficientDepth(objects.depth));
    }
    let c = build_c_union();
    let d = build_d_union();
    let checks = union_checks(&objects, &c, &d);
    let notes = vec![
        format!(
            "D is a cocircuit of M ∨ M at certificate level: each tested (E ∖ D) + e is covered by two independent \
             sets, and E ∖ D plus any two edges exceeds 2(2n − 1) inside H_n for n ≤ {}",
            objects.depth
        ),
        "C is shown minimal at certificate level only: C minus each tested edge is covered by two independent sets"
            .to_string(),
    ];
    let UnionObjects {
        depth,
        b1,
        b2,
        covers,
        counting,
    } = objects;
    Certificate::assemble(
        H,
        Support::UnionH {
            depth,
            b1,
            b2,
            covers,
            counting,
        },
        c,
        d,
        checks,
        notes,
    )
}

/// Covers for every `r_n` and `u_n` with `n ≤ n_max`, counting rows up to
/// `n_max`, and the infinite intersection of `C` and `D`.
pub fn verify_union_wildness(n_max: usize) -> Result<Certificate, ConstructionError> {
    if n_max < 2 {
        return Err(ConstructionError::InsufficientDepth(n_max));
    }
    certify_union(UnionObjects::standard(n_max)?)
}
