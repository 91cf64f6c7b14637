//! Reproducible families of small test objects.

use std::collections::HashSet;

use crate::graph::FiniteGraph;
use crate::matroid::{ElementSet, FiniteMatroid};

/// Every connected multigraph with at most `max_edges` edges, loops and
/// parallel edges included, on vertices `0..k`.
///
/// Graphs are grown edge by edge; each new edge has at least one endpoint
/// among the vertices already present, and may introduce the next vertex.
/// This reaches every connected graph whose vertices are numbered in order
/// of first appearance. Graphs are deduplicated by their sorted edge list
/// (not up to isomorphism). The single vertex with no edges is included.
pub fn connected_multigraphs(max_edges: usize) -> Vec<FiniteGraph> {
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<(usize, usize)>)> = vec![(1, Vec::new())];
    while let Some((nv, edges)) = stack.pop() {
        let mut key = edges.clone();
        key.sort_unstable();
        if !seen.insert(key) {
            continue;
        }
        out.push(FiniteGraph::new(nv, edges.clone()));
        if edges.len() == max_edges {
            continue;
        }
        for a in 0..nv {
            for b in a..=nv {
                let mut next = edges.clone();
                next.push((a, b));
                stack.push((if b == nv { nv + 1 } else { nv }, next));
            }
        }
    }
    out.sort_by(|x, y| (x.edges.len(), x.n_vertices(), &x.edges).cmp(&(y.edges.len(), y.n_vertices(), &y.edges)));
    out
}

/// The matroid test corpus: `U_{r,n}` for `n ≤ 6`, cycle matroids of the
/// connected multigraphs with at most `max_graph_edges` edges, and the duals
/// and single-element deletions and contractions of all of these.
/// Deduplicated (equal ground labels and equal base families).
pub fn matroid_corpus(max_graph_edges: usize) -> Vec<FiniteMatroid> {
    let mut base: Vec<FiniteMatroid> = Vec::new();
    for n in 0..=6 {
        for r in 0..=n {
            base.push(FiniteMatroid::uniform(r, n));
        }
    }
    for g in connected_multigraphs(max_graph_edges) {
        base.push(g.cycle_matroid().expect("corpus graphs are small"));
    }

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |m: FiniteMatroid, out: &mut Vec<FiniteMatroid>| {
        let key = (m.ground().labels().to_vec(), m.bases().to_vec());
        if seen.insert(key) {
            out.push(m);
        }
    };
    for m in base {
        let dual = m.dual();
        for e in 0..m.ground().len() {
            let x = ElementSet::singleton(e);
            push(m.delete(x).expect("element of ground"), &mut out);
            push(m.contract(x).expect("element of ground"), &mut out);
        }
        push(dual, &mut out);
        push(m, &mut out);
    }
    out
}

/// The default corpus: graphs with at most five edges.
pub fn default_corpus() -> Vec<FiniteMatroid> {
    matroid_corpus(5)
}
