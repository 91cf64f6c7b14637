//! Brute-force oracles on finite windows, written independently of the
//! library's sweep procedures.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use proptest::prelude::*;
use wildmat::periodic::{EdgeId, EpSet, Family, Vertex};

pub struct Adjacency {
    pub n: usize,
    /// `(neighbour, edge position)` per vertex.
    pub adj: Vec<Vec<(usize, usize)>>,
    pub edges: Vec<(usize, usize)>,
}

pub fn adjacency(f: Family, edges: &[EdgeId], depth: usize) -> Adjacency {
    let n = f.window_vertices(depth).len();
    let mut adj = vec![Vec::new(); n];
    let mut pairs = Vec::new();
    for (k, &e) in edges.iter().enumerate() {
        let (a, b) = f.endpoints(e);
        let (a, b) = (f.vertex_index(a), f.vertex_index(b));
        adj[a].push((b, k));
        if a != b {
            adj[b].push((a, k));
        }
        pairs.push((a, b));
    }
    Adjacency { n, adj, edges: pairs }
}

/// Depth-first search for a back edge; a loop or a repeated pair is a cycle.
pub fn has_cycle(g: &Adjacency) -> bool {
    if g.edges.iter().any(|&(a, b)| a == b) {
        return true;
    }
    let mut visited = vec![false; g.n];
    for root in 0..g.n {
        if visited[root] {
            continue;
        }
        // (vertex, edge used to enter it)
        let mut stack = vec![(root, usize::MAX)];
        let mut parent_edge = vec![usize::MAX; g.n];
        let mut order = Vec::new();
        while let Some((v, via)) = stack.pop() {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            parent_edge[v] = via;
            order.push(v);
            for &(w, k) in &g.adj[v] {
                if k == via {
                    continue;
                }
                if visited[w] {
                    return true;
                }
                stack.push((w, k));
            }
        }
    }
    false
}

pub fn window_has_cycle(s: &EpSet, depth: usize) -> bool {
    let edges = s.restrict(depth);
    has_cycle(&adjacency(s.family(), &edges, depth))
}

/// Maximum number of paths from `source` to the last cell sharing only
/// `source`, capped at `cap`, by augmenting paths on the vertex-split graph.
pub fn fan_to_last_cell(s: &EpSet, depth: usize, source: Vertex, cap: usize) -> usize {
    let f = s.family();
    let edges = s.restrict(depth);
    let g = adjacency(f, &edges, depth);
    let last = f.last_cell(depth);
    // Node 2v = v_in, 2v+1 = v_out; sink = 2n.
    let sink = 2 * g.n;
    let mut cap_map: HashMap<(usize, usize), i64> = HashMap::new();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); 2 * g.n + 1];
    let add = |cap_map: &mut HashMap<(usize, usize), i64>, nbrs: &mut Vec<Vec<usize>>, x: usize, y: usize, c: i64| {
        *cap_map.entry((x, y)).or_insert(0) += c;
        cap_map.entry((y, x)).or_insert(0);
        nbrs[x].push(y);
        nbrs[y].push(x);
    };
    let src = f.vertex_index(source);
    for v in 0..g.n {
        let c = if v == src { cap as i64 } else { 1 };
        add(&mut cap_map, &mut nbrs, 2 * v, 2 * v + 1, c);
    }
    for &(a, b) in &g.edges {
        if a != b {
            add(&mut cap_map, &mut nbrs, 2 * a + 1, 2 * b, 1);
            add(&mut cap_map, &mut nbrs, 2 * b + 1, 2 * a, 1);
        }
    }
    for label in 0..f.width() {
        let v = f.vertex_index(Vertex::Cell { index: last, label });
        if v != src {
            add(&mut cap_map, &mut nbrs, 2 * v + 1, sink, 1);
        }
    }
    let start = 2 * src + 1;
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; 2 * g.n + 1];
        prev[start] = start;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &nbrs[x] {
                if prev[y] == usize::MAX && cap_map[&(x, y)] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != start {
            let x = prev[y];
            *cap_map.get_mut(&(x, y)).unwrap() -= 1;
            *cap_map.get_mut(&(y, x)).unwrap() += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// Vertices that any double ray can be shifted to meet.
pub fn anchor_region(s: &EpSet) -> Vec<Vertex> {
    let f = s.family();
    let hi = s.onset().max(f.first_cell()) + s.period();
    let mut out: Vec<Vertex> = (0..f.n_prefix_vertices()).map(Vertex::Prefix).collect();
    for index in f.first_cell()..hi {
        out.extend((0..f.width()).map(|label| Vertex::Cell { index, label }));
    }
    out
}

/// Some anchor still has two disjoint paths to the last cell of the window.
pub fn window_has_two_fan(s: &EpSet, depth: usize) -> bool {
    let f = s.family();
    anchor_region(s)
        .into_iter()
        .filter(|v| v.cell().is_none_or(|c| c < f.last_cell(depth)))
        .any(|v| fan_to_last_cell(s, depth, v, 2) >= 2)
}

pub fn window_independent(s: &EpSet, depth: usize) -> bool {
    !window_has_cycle(s, depth) && !window_has_two_fan(s, depth)
}

/// Random eventually periodic sets with small onsets and periods.
pub fn ep_set() -> impl Strategy<Value = EpSet> {
    (
        prop::sample::select(Family::ALL.to_vec()),
        0usize..4,
        1usize..=3,
        prop::collection::vec(prop::bool::weighted(0.35), 64),
    )
        .prop_map(|(f, extra, period, bits)| build(f, extra, period, &bits))
}

pub fn build(f: Family, extra: usize, period: usize, bits: &[bool]) -> EpSet {
    let onset = f.first_cell() + extra;
    let mut k = 0;
    let mut next = || {
        let b = bits[k % bits.len()];
        k += 1;
        b
    };
    let mut exc = Vec::new();
    for e in f.prefix_edges() {
        if next() {
            exc.push(e);
        }
    }
    for index in f.first_cell()..onset {
        for slot in 0..f.n_slots() {
            if next() {
                exc.push(EdgeId::Cell { index, slot });
            }
        }
    }
    let mut pat = Vec::new();
    for r in 0..period {
        for slot in 0..f.n_slots() {
            if next() {
                pat.push((slot, r));
            }
        }
    }
    EpSet::new(f, exc, onset, period, pat).unwrap()
}
