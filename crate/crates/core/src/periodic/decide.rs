//! Exact decisions on eventually periodic edge sets.
//!
//! Both procedures sweep the graph cell by cell and keep a small summary of
//! how the swept part connects to the current frontier (the vertices of the
//! last cell). Past the onset the summary evolves deterministically from
//! `(summary, cell mod period)`, so the sweep stops at the first repeat.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::edgeset::EpSet;
use super::family::{EdgeId, Family, Vertex};
use super::PeriodicError;
use crate::graph::{find_cycle, FiniteGraph, UnionFind};

/// The finite truncation with `depth` cells (plus the prefix).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowGraph {
    pub family: Family,
    pub depth: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl WindowGraph {
    pub fn to_finite_graph(&self) -> FiniteGraph {
        let f = self.family;
        FiniteGraph::with_labels(
            self.vertices.iter().map(|&v| f.vertex_name(v)).collect(),
            self.edges.iter().map(|&e| f.edge_name(e)).collect(),
            self.edges
                .iter()
                .map(|&e| {
                    let (a, b) = f.endpoints(e);
                    (f.vertex_index(a), f.vertex_index(b))
                })
                .collect(),
        )
    }
}

/// # Panics
/// If `depth` is 0.
pub fn window(family: Family, depth: usize) -> WindowGraph {
    assert!(depth >= 1, "a window has at least one cell");
    WindowGraph {
        family,
        depth,
        vertices: family.window_vertices(depth),
        edges: family.window_edges(depth),
    }
}

pub fn restrict(s: &EpSet, depth: usize) -> Vec<EdgeId> {
    s.restrict(depth)
}

fn dense_edges(f: Family, edges: &[EdgeId]) -> (usize, Vec<(usize, usize)>) {
    let pairs: Vec<(usize, usize)> = edges
        .iter()
        .map(|&e| {
            let (a, b) = f.endpoints(e);
            (f.vertex_index(a), f.vertex_index(b))
        })
        .collect();
    let n = pairs.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    (n, pairs)
}

fn cycle_among(f: Family, edges: &[EdgeId]) -> Option<Vec<EdgeId>> {
    let (n, pairs) = dense_edges(f, edges);
    find_cycle(n, &pairs).map(|ks| ks.into_iter().map(|k| edges[k]).collect())
}

fn canonical(roots: &[Option<usize>]) -> Vec<u8> {
    let mut seen: Vec<usize> = Vec::new();
    roots
        .iter()
        .map(|r| match r {
            None => GONE,
            Some(r) => match seen.iter().position(|x| x == r) {
                Some(k) => k as u8,
                None => {
                    seen.push(*r);
                    (seen.len() - 1) as u8
                }
            },
        })
        .collect()
}

/// A finite cycle inside `s`, or `None`.
///
/// Sweep with a union-find over the growing window. A new edge closes a
/// cycle exactly when its ends are already joined, and whether that can
/// still happen depends only on the partition of the frontier.
pub fn contains_finite_cycle(s: &EpSet) -> Option<Vec<EdgeId>> {
    let f = s.family();
    let first = f.first_cell();
    let mut uf = UnionFind::new(0);
    let join = |uf: &mut UnionFind, e: EdgeId| {
        let (a, b) = f.endpoints(e);
        let (a, b) = (f.vertex_index(a), f.vertex_index(b));
        uf.grow(a.max(b) + 1);
        uf.union(a, b)
    };
    let mut closed_at = None;
    for e in f.initial_edges().filter(|&e| s.contains(e)) {
        if !join(&mut uf, e) {
            closed_at = Some(first);
            break;
        }
    }
    let mut last = first;
    let mut seen = HashSet::new();
    while closed_at.is_none() {
        if last >= s.onset() {
            let roots: Vec<Option<usize>> = (0..f.width())
                .map(|label| {
                    let x = f.vertex_index(Vertex::Cell { index: last, label });
                    uf.grow(x + 1);
                    Some(uf.find(x))
                })
                .collect();
            if !seen.insert((canonical(&roots), last % s.period())) {
                return None;
            }
        }
        for e in f.step_edges(last).filter(|&e| s.contains(e)) {
            if !join(&mut uf, e) {
                closed_at = Some(last + 1);
                break;
            }
        }
        last += 1;
    }
    let depth = closed_at.expect("loop exits with a cycle") - first + 1;
    cycle_among(f, &s.restrict(depth))
}

const GONE: u8 = u8::MAX;

/// Which vertex is deleted in a summary element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Removed {
    Nothing,
    Interior,
    Frontier(u8),
}

/// Connectivity of the swept part of `S - w` seen from the frontier:
/// block labels per frontier position (`GONE` for `w` itself) and the
/// block holding the anchor, if the anchor still reaches the frontier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Elem {
    removed: Removed,
    labels: Vec<u8>,
    mark: Option<u8>,
}

type State = BTreeSet<Elem>;

/// Step edges of `s` from cell `n` to `n + 1` as pairs of local nodes:
/// `j` for label `j` in cell `n`, `width + j` for label `j` in cell `n + 1`.
fn step_pairs(s: &EpSet, n: usize) -> Vec<(usize, usize)> {
    let f = s.family();
    let local = |v: Vertex| match v {
        Vertex::Cell { index, label } if index == n => label,
        Vertex::Cell { index, label } if index == n + 1 => f.width() + label,
        _ => unreachable!("step edges join consecutive cells"),
    };
    f.step_edges(n)
        .filter(|&e| s.contains(e))
        .map(|e| {
            let (a, b) = f.endpoints(e);
            (local(a), local(b))
        })
        .collect()
}

fn advance(el: &Elem, pairs: &[(usize, usize)], width: usize, new_removed: Option<usize>) -> Elem {
    let mut uf = UnionFind::new(2 * width);
    for j in 0..width {
        for k in j + 1..width {
            if el.labels[j] != GONE && el.labels[j] == el.labels[k] {
                uf.union(j, k);
            }
        }
    }
    let old_removed = match el.removed {
        Removed::Frontier(j) => Some(j as usize),
        _ => None,
    };
    let dead = |z: usize| Some(z) == old_removed || (z >= width && Some(z - width) == new_removed);
    for &(x, y) in pairs {
        if !dead(x) && !dead(y) {
            uf.union(x, y);
        }
    }
    let roots: Vec<Option<usize>> = (0..width)
        .map(|j| (Some(j) != new_removed).then(|| uf.find(width + j)))
        .collect();
    let labels = canonical(&roots);
    let mark = el.mark.and_then(|b| {
        let j = (0..width).find(|&j| el.labels[j] == b)?;
        let r = uf.find(j);
        (0..width).find(|&k| roots[k] == Some(r)).map(|k| labels[k])
    });
    let removed = match (&el.removed, new_removed) {
        (Removed::Nothing, Some(j)) => Removed::Frontier(j as u8),
        (Removed::Nothing, None) => Removed::Nothing,
        _ => Removed::Interior,
    };
    Elem { removed, labels, mark }
}

fn advance_state(state: &State, pairs: &[(usize, usize)], width: usize) -> State {
    let mut out: State = state.iter().map(|el| advance(el, pairs, width, None)).collect();
    let whole = state
        .iter()
        .find(|el| el.removed == Removed::Nothing)
        .expect("state always holds the undeleted element");
    for j in 0..width {
        out.insert(advance(whole, pairs, width, Some(j)));
    }
    out
}

/// Summary of the one-cell window, deleting each vertex in turn (and
/// nothing). With an anchor, the anchor is never deleted and its block is
/// marked.
fn initial_state(s: &EpSet, anchor: Option<Vertex>) -> State {
    let f = s.family();
    let vertices = f.window_vertices(1);
    let edges: Vec<EdgeId> = f.initial_edges().filter(|&e| s.contains(e)).collect();
    let first = f.first_cell();
    let mut out = State::new();
    let removals = std::iter::once(None).chain(vertices.iter().copied().map(Some));
    for w in removals.filter(|&w| w.is_none() || w != anchor) {
        let mut uf = UnionFind::new(vertices.len());
        for &e in &edges {
            let (a, b) = f.endpoints(e);
            if Some(a) != w && Some(b) != w {
                uf.union(f.vertex_index(a), f.vertex_index(b));
            }
        }
        let roots: Vec<Option<usize>> = (0..f.width())
            .map(|label| {
                let v = Vertex::Cell { index: first, label };
                (Some(v) != w).then(|| uf.find(f.vertex_index(v)))
            })
            .collect();
        let labels = canonical(&roots);
        let mark = anchor.and_then(|v| {
            let r = uf.find(f.vertex_index(v));
            (0..f.width()).find(|&k| roots[k] == Some(r)).map(|k| labels[k])
        });
        let removed = match w {
            None => Removed::Nothing,
            Some(Vertex::Cell { label, .. }) => Removed::Frontier(label as u8),
            Some(Vertex::Prefix(_)) => Removed::Interior,
        };
        out.insert(Elem { removed, labels, mark });
    }
    out
}

/// Evidence that `s` contains a double ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleRayCertificate {
    /// A vertex with two paths to every frontier sharing only this vertex.
    pub anchor: Vertex,
    /// Last cell examined before the summary repeated.
    pub stabilized_at: usize,
    /// An explicit eventually periodic double ray inside `s`, when the
    /// bounded search finds one.
    pub ray: Option<PeriodicDoubleRay>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DoubleRayDecision {
    Found(DoubleRayCertificate),
    Absent { stabilized_at: usize },
}

impl DoubleRayDecision {
    pub fn certificate(&self) -> Option<&DoubleRayCertificate> {
        match self {
            DoubleRayDecision::Found(c) => Some(c),
            DoubleRayDecision::Absent { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        self.certificate().is_some()
    }
}

/// One tail of a double ray: `segment` runs from `start` to `start`
/// shifted by `period` cells, and the tail is the union of its shifts by
/// multiples of `period`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayTail {
    pub start: Vertex,
    pub segment: Vec<EdgeId>,
    pub period: usize,
}

/// A double ray: a finite path joining the starts of two disjoint
/// periodic tails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicDoubleRay {
    pub middle: Vec<EdgeId>,
    pub tails: [RayTail; 2],
}

impl RayTail {
    fn start_cell(&self) -> usize {
        self.start.cell().expect("tails start in a cell")
    }

    /// Edges of the copies starting below cell `limit`.
    pub fn edges_below(&self, limit: usize) -> Vec<EdgeId> {
        let mut out = Vec::new();
        let mut k = 0;
        while self.start_cell() + k * self.period < limit {
            out.extend(self.segment.iter().map(|&e| Family::shift(e, (k * self.period) as isize)));
            k += 1;
        }
        out
    }

    fn vertices_below(&self, f: Family, limit: usize) -> HashSet<Vertex> {
        let mut out = HashSet::new();
        for e in self.edges_below(limit) {
            let (a, b) = f.endpoints(e);
            out.insert(a);
            out.insert(b);
        }
        out.insert(self.start);
        out
    }
}

impl PeriodicDoubleRay {
    /// The edge set of the double ray.
    pub fn edge_set(&self, f: Family) -> EpSet {
        let period = self.tails[0].period;
        let tail_start = self.tails[0].start_cell();
        let onset = self
            .middle
            .iter()
            .filter_map(|&e| Family::owner(e))
            .map(|c| c + 1)
            .max()
            .unwrap_or(0)
            .max(tail_start)
            .max(f.first_cell());
        let mut exceptional: BTreeSet<EdgeId> = self.middle.iter().copied().collect();
        let mut pattern = BTreeSet::new();
        for t in &self.tails {
            for e in t.edges_below(onset + period) {
                match e {
                    EdgeId::Cell { index, slot } if index >= onset => {
                        if index < onset + period {
                            pattern.insert((slot, index % period));
                        }
                    }
                    _ => {
                        exceptional.insert(e);
                    }
                }
            }
        }
        EpSet::new(f, exceptional, onset, period, pattern).expect("constructed from valid edges")
    }
}

fn s_degree(s: &EpSet, v: Vertex) -> usize {
    let f = s.family();
    f.incident(v)
        .into_iter()
        .filter(|&e| s.contains(e))
        .filter(|&e| {
            let (a, b) = f.endpoints(e);
            a != b
        })
        .count()
}

/// Anchors that must be tried: prefix vertices and the cells up to one
/// period past the onset. Any double ray can be shifted by whole periods
/// until it meets one of these.
fn anchor_candidates(s: &EpSet) -> Vec<Vertex> {
    let f = s.family();
    let hi = s.onset().max(f.first_cell()) + s.period();
    let mut out: Vec<Vertex> = (0..f.n_prefix_vertices()).map(Vertex::Prefix).collect();
    for index in f.first_cell()..hi {
        out.extend((0..f.width()).map(|label| Vertex::Cell { index, label }));
    }
    out.retain(|&v| s_degree(s, v) >= 2);
    out
}

/// Sweep from the anchor's cell. `Ok(n)`: every frontier keeps two
/// anchor paths, and the summary repeated at cell `n`. `Err(n)`: the fan
/// dropped below two at cell `n`.
fn sweep_anchor(s: &EpSet, mut state: State, start: usize) -> Result<usize, usize> {
    let width = s.family().width();
    let mut seen = HashSet::new();
    let mut last = start;
    loop {
        if state.iter().any(|el| el.mark.is_none()) {
            return Err(last);
        }
        if last >= s.onset() && !seen.insert((state.clone(), last % s.period())) {
            return Ok(last);
        }
        state = advance_state(&state, &step_pairs(s, last), width);
        last += 1;
    }
}

/// Decide whether `s` contains a double ray.
///
/// In a locally finite one-ended graph, `s` has a double ray iff some vertex
/// `v` has, for every frontier, two paths to it meeting only at `v`
/// (two disjoint rays then follow by compactness). By Menger this fails
/// exactly when a single vertex separates `v` from the frontier, so the
/// sweep tracks, for every possible deleted vertex, whether `v` still
/// reaches the frontier.
pub fn contains_double_ray(s: &EpSet) -> DoubleRayDecision {
    let f = s.family();
    let width = f.width();
    let anchors = anchor_candidates(s);
    let mut unmarked: HashMap<usize, State> = HashMap::new();
    let top = anchors.iter().filter_map(|v| v.cell()).max().unwrap_or(f.first_cell());
    let mut state = initial_state(s, None);
    for c in f.first_cell()..=top {
        unmarked.insert(c, state.clone());
        state = advance_state(&state, &step_pairs(s, c), width);
    }

    let mut stabilized = s.onset();
    for &v in &anchors {
        let (start, init) = match v {
            Vertex::Prefix(_) => (f.first_cell(), initial_state(s, Some(v))),
            Vertex::Cell { index, label } => {
                let init = unmarked[&index]
                    .iter()
                    .filter(|el| el.removed != Removed::Frontier(label as u8))
                    .map(|el| Elem {
                        mark: Some(el.labels[label]),
                        ..el.clone()
                    })
                    .collect();
                (index, init)
            }
        };
        match sweep_anchor(s, init, start) {
            Ok(at) => {
                return DoubleRayDecision::Found(DoubleRayCertificate {
                    anchor: v,
                    stabilized_at: at,
                    ray: find_periodic_double_ray(s),
                })
            }
            Err(at) => stabilized = stabilized.max(at),
        }
    }
    DoubleRayDecision::Absent {
        stabilized_at: stabilized,
    }
}

/// Shortest path from `from` to `to` using edges of `s` accepted by
/// `edge_ok`, through vertices accepted by `vertex_ok` (`to` is always
/// accepted, and never passed through).
fn bfs_path(
    s: &EpSet,
    from: Vertex,
    to: Vertex,
    edge_ok: impl Fn(EdgeId) -> bool,
    vertex_ok: impl Fn(Vertex) -> bool,
) -> Option<Vec<EdgeId>> {
    let f = s.family();
    let mut prev: HashMap<Vertex, (Vertex, EdgeId)> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = HashSet::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = Vec::new();
            let mut cur = to;
            while cur != from {
                let (p, e) = prev[&cur];
                path.push(e);
                cur = p;
            }
            path.reverse();
            return Some(path);
        }
        for e in f.incident(x) {
            if !s.contains(e) || !edge_ok(e) {
                continue;
            }
            let (a, b) = f.endpoints(e);
            let y = if a == x { b } else { a };
            if y == x || seen.contains(&y) || !(y == to || vertex_ok(y)) {
                continue;
            }
            seen.insert(y);
            prev.insert(y, (x, e));
            queue.push_back(y);
        }
    }
    None
}

fn tail_segment(s: &EpSet, x: usize, period: usize, label: usize, avoid: &HashSet<Vertex>) -> Option<RayTail> {
    let start = Vertex::Cell { index: x, label };
    let target = Vertex::Cell {
        index: x + period,
        label,
    };
    let in_block = |v: Vertex| matches!(v.cell(), Some(c) if c >= x && c < x + period);
    let segment = bfs_path(
        s,
        start,
        target,
        |e| matches!(Family::owner(e), Some(c) if c >= x && c < x + period),
        |v| in_block(v) && !avoid.contains(&v),
    )?;
    Some(RayTail { start, segment, period })
}

/// Bounded search for an explicit eventually periodic double ray: two
/// disjoint tails repeating every `k · period` cells (`k ≤ 4`) from a cell
/// within four periods of the onset, joined by a shortest path.
fn find_periodic_double_ray(s: &EpSet) -> Option<PeriodicDoubleRay> {
    let f = s.family();
    let base = s.onset().max(f.first_cell());
    let width = f.width();
    for k in 1..=4 {
        let period = k * s.period();
        for x in base..base + 4 * s.period() {
            for a in 0..width {
                for b in 0..width {
                    if a == b {
                        continue;
                    }
                    let Some(ta) = tail_segment(s, x, period, a, &HashSet::new()) else {
                        continue;
                    };
                    let used = ta.vertices_below(f, x + 1);
                    let used: HashSet<Vertex> = used.into_iter().filter(|v| v.cell() != Some(x + period)).collect();
                    let Some(tb) = tail_segment(s, x, period, b, &used) else {
                        continue;
                    };
                    let limit = x + 2 * period;
                    let mut on_rays = ta.vertices_below(f, limit);
                    on_rays.extend(tb.vertices_below(f, limit));
                    let middle = bfs_path(
                        s,
                        ta.start,
                        tb.start,
                        |e| Family::owner(e).is_none_or(|c| c < limit),
                        |v| !on_rays.contains(&v) && v.cell().is_none_or(|c| c <= limit),
                    );
                    if let Some(middle) = middle {
                        return Some(PeriodicDoubleRay { middle, tails: [ta, tb] });
                    }
                }
            }
        }
    }
    None
}

/// Why an edge set is dependent in the algebraic cycle matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dependence {
    FiniteCycle(Vec<EdgeId>),
    DoubleRay(DoubleRayCertificate),
}

pub fn dependence(s: &EpSet) -> Option<Dependence> {
    if let Some(c) = contains_finite_cycle(s) {
        return Some(Dependence::FiniteCycle(c));
    }
    match contains_double_ray(s) {
        DoubleRayDecision::Found(c) => Some(Dependence::DoubleRay(c)),
        DoubleRayDecision::Absent { .. } => None,
    }
}

/// Independent in `M_A`: no finite cycle and no double ray.
pub fn is_independent_ma(s: &EpSet) -> bool {
    dependence(s).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseVerdict {
    Base,
    NotIndependent(Dependence),
    /// Adding this edge keeps the set independent.
    NotMaximal(EdgeId),
}

impl BaseVerdict {
    pub fn is_base(&self) -> bool {
        *self == BaseVerdict::Base
    }

    pub fn describe(&self, f: Family) -> String {
        match self {
            BaseVerdict::Base => "base".to_string(),
            BaseVerdict::NotIndependent(Dependence::FiniteCycle(c)) => format!(
                "not independent: contains the finite cycle {:?}",
                c.iter().map(|&e| f.edge_name(e)).collect::<Vec<_>>()
            ),
            BaseVerdict::NotIndependent(Dependence::DoubleRay(c)) => {
                format!("not independent: contains a double ray through {}", f.vertex_name(c.anchor))
            }
            BaseVerdict::NotMaximal(e) => format!("not maximal: {} can be added", f.edge_name(*e)),
        }
    }
}

/// Edges whose addition is tested by the maximality check: the prefix,
/// every cell below two periods past the onset, and one representative of
/// each `(slot, residue)` class in the following period.
fn maximality_probes(s: &EpSet) -> Vec<EdgeId> {
    let f = s.family();
    let hi = s.onset().max(f.first_cell()) + 3 * s.period();
    let mut out: Vec<EdgeId> = f.prefix_edges().collect();
    for index in f.first_cell()..hi {
        out.extend((0..f.n_slots()).map(|slot| EdgeId::Cell { index, slot }));
    }
    out
}

pub fn is_base_ma(s: &EpSet) -> BaseVerdict {
    if let Some(d) = dependence(s) {
        return BaseVerdict::NotIndependent(d);
    }
    for e in maximality_probes(s) {
        if !s.contains(e) && is_independent_ma(&s.with_edge(e)) {
            return BaseVerdict::NotMaximal(e);
        }
    }
    BaseVerdict::Base
}

/// Connected, and every touched vertex has degree exactly two (a loop
/// counts twice).
fn is_finite_cycle(f: Family, edges: &[EdgeId]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let (n, pairs) = dense_edges(f, edges);
    let mut degree = vec![0usize; n];
    let mut uf = UnionFind::new(n);
    for &(a, b) in &pairs {
        degree[a] += 1;
        degree[b] += 1;
        uf.union(a, b);
    }
    let touched: Vec<usize> = (0..n).filter(|&v| degree[v] > 0).collect();
    let root = uf.find(touched[0]);
    touched.iter().all(|&v| degree[v] == 2 && uf.find(v) == root)
}

/// Exactly the edge set of a finite cycle or of a double ray.
///
/// An infinite set without finite cycles is a double ray iff it equals any
/// double ray it contains, so the explicit ray from the certificate
/// decides. Without an explicit ray, each representative edge is removed in
/// turn and the rest must be independent.
pub fn is_circuit_ma(s: &EpSet) -> bool {
    let f = s.family();
    if let Some(edges) = s.finite_edges() {
        return is_finite_cycle(f, &edges);
    }
    if contains_finite_cycle(s).is_some() {
        return false;
    }
    match contains_double_ray(s) {
        DoubleRayDecision::Absent { .. } => false,
        DoubleRayDecision::Found(cert) => match cert.ray {
            Some(ray) => ray.edge_set(f).same_set(s).expect("same family"),
            None => maximality_probes(s)
                .into_iter()
                .filter(|&e| s.contains(e))
                .all(|e| is_independent_ma(&s.without_edge(e))),
        },
    }
}

/// A finite skew cut: a bond of the graph with a rayless side.
pub fn is_skew_cut(s: &EpSet) -> Result<bool, PeriodicError> {
    let edges = s.finite_edges().ok_or(PeriodicError::InfiniteSet)?;
    Ok(is_skew_cut_edges(s.family(), &edges))
}

/// For a finite `S`: the components of `G - S` meeting `S` must be exactly
/// two, with every edge of `S` joining them, and one of them finite. Past
/// the last cell touched by `S` the graph is intact and each cell is
/// connected, so everything reaching the last window cell is the single
/// infinite component.
pub fn is_skew_cut_edges(f: Family, edges: &[EdgeId]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let max_cell = edges.iter().filter_map(|&e| Family::owner(e)).max().unwrap_or(f.first_cell());
    let last = max_cell + 2;
    let depth = last - f.first_cell() + 1;
    let cut: HashSet<EdgeId> = edges.iter().copied().collect();
    let mut uf = UnionFind::new(f.window_vertices(depth).len());
    for e in f.window_edges(depth) {
        if !cut.contains(&e) {
            let (a, b) = f.endpoints(e);
            uf.union(f.vertex_index(a), f.vertex_index(b));
        }
    }
    let tail: Vec<usize> = (0..f.width())
        .map(|label| f.vertex_index(Vertex::Cell { index: last, label }))
        .collect();
    for w in tail.windows(2) {
        uf.union(w[0], w[1]);
    }
    let infinite = uf.find(tail[0]);
    let mut sides = BTreeSet::new();
    for &e in edges {
        let (a, b) = f.endpoints(e);
        let (ra, rb) = (uf.find(f.vertex_index(a)), uf.find(f.vertex_index(b)));
        if ra == rb {
            return false;
        }
        sides.insert((ra.min(rb), ra.max(rb)));
    }
    sides.len() == 1 && {
        let &(x, y) = sides.iter().next().expect("one pair");
        x != infinite || y != infinite
    }
}

/// Plain-name view of a certificate, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleRayReport {
    pub anchor: String,
    pub stabilized_at: usize,
    pub middle: Option<Vec<String>>,
    pub tails: Option<Vec<(String, Vec<String>, usize)>>,
}

impl DoubleRayCertificate {
    pub fn report(&self, f: Family) -> DoubleRayReport {
        let names = |es: &[EdgeId]| es.iter().map(|&e| f.edge_name(e)).collect::<Vec<_>>();
        DoubleRayReport {
            anchor: f.vertex_name(self.anchor),
            stabilized_at: self.stabilized_at,
            middle: self.ray.as_ref().map(|r| names(&r.middle)),
            tails: self.ray.as_ref().map(|r| {
                r.tails
                    .iter()
                    .map(|t| (f.vertex_name(t.start), names(&t.segment), t.period))
                    .collect()
            }),
        }
    }
}
