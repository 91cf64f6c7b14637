use std::fmt;

use serde::{Deserialize, Serialize};

use super::PeriodicError;

/// An endpoint of a cell slot: a cell-vertex label and a cell offset (0 or 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotEnd {
    pub label: usize,
    pub offset: usize,
}

/// One edge per cell, joining the given ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    pub name: &'static str,
    pub from: SlotEnd,
    pub to: SlotEnd,
}

impl Slot {
    /// Both ends in the owning cell.
    pub fn is_internal(&self) -> bool {
        self.from.offset == 0 && self.to.offset == 0
    }
}

/// Where a prefix edge attaches: a prefix vertex, or a vertex of the first cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixEnd {
    Prefix(usize),
    FirstCell(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefixEdge {
    pub name: &'static str,
    pub from: PrefixEnd,
    pub to: PrefixEnd,
}

/// A one-ended locally finite graph: a finite prefix plus cells
/// `first_cell, first_cell + 1, ...`, each a copy of the same template.
#[derive(Debug, PartialEq, Eq)]
pub struct RayedGraphFamily {
    pub name: &'static str,
    pub first_cell: usize,
    pub cell_vertices: &'static [&'static str],
    pub slots: &'static [Slot],
    pub prefix_vertices: &'static [&'static str],
    pub prefix_edges: &'static [PrefixEdge],
}

const fn end(label: usize, offset: usize) -> SlotEnd {
    SlotEnd { label, offset }
}

const fn slot(name: &'static str, from: SlotEnd, to: SlotEnd) -> Slot {
    Slot { name, from, to }
}

const T: usize = 0;
const B: usize = 1;

static LADDER_L: RayedGraphFamily = RayedGraphFamily {
    name: "LADDER_L",
    first_cell: 1,
    cell_vertices: &["t", "b"],
    slots: &[
        slot("u", end(T, 0), end(T, 1)),
        slot("d", end(B, 0), end(B, 1)),
        slot("r", end(T, 0), end(B, 0)),
    ],
    prefix_vertices: &[],
    prefix_edges: &[],
};

static DOUBLED_H: RayedGraphFamily = RayedGraphFamily {
    name: "DOUBLED_H",
    first_cell: 1,
    cell_vertices: &["t", "b"],
    slots: &[
        slot("u", end(T, 0), end(T, 1)),
        slot("d", end(B, 0), end(B, 1)),
        slot("r", end(T, 0), end(B, 0)),
        slot("u'", end(T, 0), end(T, 1)),
        slot("d'", end(B, 0), end(B, 1)),
        slot("r'", end(T, 0), end(B, 0)),
    ],
    prefix_vertices: &[],
    prefix_edges: &[],
};

static RAYED_G: RayedGraphFamily = RayedGraphFamily {
    name: "RAYED_G",
    first_cell: 0,
    cell_vertices: &["a", "b"],
    slots: &[
        slot("p", end(0, 0), end(0, 1)),
        slot("q", end(1, 0), end(1, 1)),
        slot("r", end(0, 0), end(1, 0)),
    ],
    prefix_vertices: &["*"],
    prefix_edges: &[PrefixEdge {
        name: "l",
        from: PrefixEnd::Prefix(0),
        to: PrefixEnd::Prefix(0),
    }],
};

/// The three builtin graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "LADDER_L")]
    LadderL,
    #[serde(rename = "DOUBLED_H")]
    DoubledH,
    #[serde(rename = "RAYED_G")]
    RayedG,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::LadderL, Family::DoubledH, Family::RayedG];

    pub fn def(self) -> &'static RayedGraphFamily {
        match self {
            Family::LadderL => &LADDER_L,
            Family::DoubledH => &DOUBLED_H,
            Family::RayedG => &RAYED_G,
        }
    }

    pub fn name(self) -> &'static str {
        self.def().name
    }

    pub fn parse(s: &str) -> Result<Family, PeriodicError> {
        match s {
            "LADDER_L" | "L" => Ok(Family::LadderL),
            "DOUBLED_H" | "H" => Ok(Family::DoubledH),
            "RAYED_G" | "G" => Ok(Family::RayedG),
            other => Err(PeriodicError::UnknownFamily(other.to_string())),
        }
    }

    pub fn first_cell(self) -> usize {
        self.def().first_cell
    }

    /// Vertices per cell.
    pub fn width(self) -> usize {
        self.def().cell_vertices.len()
    }

    pub fn n_slots(self) -> usize {
        self.def().slots.len()
    }

    pub fn slot(self, s: usize) -> &'static Slot {
        &self.def().slots[s]
    }

    pub fn slot_index(self, name: &str) -> Result<usize, PeriodicError> {
        let name = name.replace('′', "'");
        self.def()
            .slots
            .iter()
            .position(|s| s.name == name)
            .ok_or_else(|| PeriodicError::UnknownSlot(name.to_string(), self.name()))
    }

    pub fn n_prefix_vertices(self) -> usize {
        self.def().prefix_vertices.len()
    }

    pub fn n_prefix_edges(self) -> usize {
        self.def().prefix_edges.len()
    }

    pub fn prefix_edges(self) -> impl Iterator<Item = EdgeId> {
        (0..self.n_prefix_edges()).map(EdgeId::Prefix)
    }

    /// Both endpoints of an edge.
    pub fn endpoints(self, e: EdgeId) -> (Vertex, Vertex) {
        match e {
            EdgeId::Prefix(k) => {
                let pe = &self.def().prefix_edges[k];
                let conv = |x: PrefixEnd| match x {
                    PrefixEnd::Prefix(j) => Vertex::Prefix(j),
                    PrefixEnd::FirstCell(label) => Vertex::Cell {
                        index: self.first_cell(),
                        label,
                    },
                };
                (conv(pe.from), conv(pe.to))
            }
            EdgeId::Cell { index, slot } => {
                let s = self.slot(slot);
                (
                    Vertex::Cell {
                        index: index + s.from.offset,
                        label: s.from.label,
                    },
                    Vertex::Cell {
                        index: index + s.to.offset,
                        label: s.to.label,
                    },
                )
            }
        }
    }

    /// Edges that appear when a window whose last cell is `n` grows to
    /// last cell `n + 1`: slots of cell `n` reaching forward, and internal
    /// slots of cell `n + 1`.
    pub fn step_edges(self, n: usize) -> impl Iterator<Item = EdgeId> {
        self.def().slots.iter().enumerate().map(move |(k, s)| EdgeId::Cell {
            index: if s.is_internal() { n + 1 } else { n },
            slot: k,
        })
    }

    /// Edges of the window with last cell `first_cell`: prefix edges and
    /// internal slots of the first cell.
    pub fn initial_edges(self) -> impl Iterator<Item = EdgeId> {
        let first = self.first_cell();
        self.prefix_edges().chain(
            self.def()
                .slots
                .iter()
                .enumerate()
                .filter(|(_, s)| s.is_internal())
                .map(move |(k, _)| EdgeId::Cell { index: first, slot: k }),
        )
    }

    /// The last cell of the window with `n` cells.
    pub fn last_cell(self, n: usize) -> usize {
        self.first_cell() + n - 1
    }

    /// Edges of the window with `n ≥ 1` cells, in construction order.
    pub fn window_edges(self, n: usize) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.initial_edges().collect();
        for c in self.first_cell()..self.last_cell(n) {
            out.extend(self.step_edges(c));
        }
        out
    }

    /// Vertices of the window with `n ≥ 1` cells.
    pub fn window_vertices(self, n: usize) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = (0..self.n_prefix_vertices()).map(Vertex::Prefix).collect();
        for index in self.first_cell()..=self.last_cell(n) {
            out.extend((0..self.width()).map(|label| Vertex::Cell { index, label }));
        }
        out
    }

    /// Dense index of a vertex inside any window that contains it.
    pub fn vertex_index(self, v: Vertex) -> usize {
        match v {
            Vertex::Prefix(j) => j,
            Vertex::Cell { index, label } => {
                self.n_prefix_vertices() + (index - self.first_cell()) * self.width() + label
            }
        }
    }

    /// Edges with `v` as an endpoint (a loop is listed once).
    pub fn incident(self, v: Vertex) -> Vec<EdgeId> {
        let mut out = Vec::new();
        for e in self.prefix_edges() {
            let (a, b) = self.endpoints(e);
            if a == v || b == v {
                out.push(e);
            }
        }
        if let Vertex::Cell { index, label } = v {
            for (k, s) in self.def().slots.iter().enumerate() {
                for end in [s.from, s.to] {
                    if end.label == label && index >= self.first_cell() + end.offset {
                        let e = EdgeId::Cell {
                            index: index - end.offset,
                            slot: k,
                        };
                        if !out.contains(&e) {
                            out.push(e);
                        }
                    }
                }
            }
        }
        out
    }

    /// Cell that owns an edge (`None` for prefix edges).
    pub fn owner(e: EdgeId) -> Option<usize> {
        match e {
            EdgeId::Prefix(_) => None,
            EdgeId::Cell { index, .. } => Some(index),
        }
    }

    pub fn edge_name(self, e: EdgeId) -> String {
        match e {
            EdgeId::Prefix(k) => self.def().prefix_edges[k].name.to_string(),
            EdgeId::Cell { index, slot } => format!("{}:{}", self.slot(slot).name, index),
        }
    }

    pub fn vertex_name(self, v: Vertex) -> String {
        match v {
            Vertex::Prefix(j) => self.def().prefix_vertices[j].to_string(),
            Vertex::Cell { index, label } => format!("{}{}", self.def().cell_vertices[label], index),
        }
    }

    /// Parse `"u:3"`, `"r':7"`, `"l"`. A `′` is accepted for `'`.
    pub fn parse_edge(self, s: &str) -> Result<EdgeId, PeriodicError> {
        let bad = || PeriodicError::BadEdgeId(s.to_string(), self.name());
        if let Some((name, idx)) = s.split_once(':') {
            let slot = self.slot_index(name).map_err(|_| bad())?;
            let index: usize = idx.trim().parse().map_err(|_| bad())?;
            if index < self.first_cell() {
                return Err(bad());
            }
            Ok(EdgeId::Cell { index, slot })
        } else {
            self.def()
                .prefix_edges
                .iter()
                .position(|p| p.name == s)
                .map(EdgeId::Prefix)
                .ok_or_else(bad)
        }
    }

    /// Shift a cell edge by `k` cells (prefix edges are fixed).
    pub fn shift(e: EdgeId, k: isize) -> EdgeId {
        match e {
            EdgeId::Prefix(_) => e,
            EdgeId::Cell { index, slot } => EdgeId::Cell {
                index: (index as isize + k) as usize,
                slot,
            },
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An edge: a prefix edge, or the copy of a slot owned by a cell.
/// Ordered by prefix first, then cell index, then slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeId {
    Prefix(usize),
    Cell { index: usize, slot: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Prefix(usize),
    Cell { index: usize, label: usize },
}

impl Vertex {
    pub fn cell(self) -> Option<usize> {
        match self {
            Vertex::Prefix(_) => None,
            Vertex::Cell { index, .. } => Some(index),
        }
    }

    pub fn shifted(self, k: isize) -> Vertex {
        match self {
            Vertex::Prefix(_) => self,
            Vertex::Cell { index, label } => Vertex::Cell {
                index: (index as isize + k) as usize,
                label,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_names_round_trip() {
        let h = Family::DoubledH;
        for s in ["u:3", "r':7", "d':1"] {
            assert_eq!(h.edge_name(h.parse_edge(s).unwrap()), s);
        }
        assert_eq!(h.parse_edge("r′:7").unwrap(), h.parse_edge("r':7").unwrap());
        assert!(h.parse_edge("u:0").is_err());
        assert!(h.parse_edge("l").is_err());
        let g = Family::RayedG;
        assert_eq!(g.parse_edge("l").unwrap(), EdgeId::Prefix(0));
        assert_eq!(g.edge_name(g.parse_edge("p:0").unwrap()), "p:0");
    }

    #[test]
    fn window_counts() {
        let h = Family::DoubledH;
        assert_eq!(h.window_vertices(1).len(), 2);
        let w1: Vec<_> = h.window_edges(1).iter().map(|&e| h.edge_name(e)).collect();
        assert_eq!(w1, vec!["r:1", "r':1"]);
        for n in 2..20 {
            assert_eq!(h.window_edges(n).len() - h.window_edges(n - 1).len(), 6);
            assert_eq!(h.window_vertices(n).len(), 2 * n);
        }
        let g = Family::RayedG;
        let w: Vec<_> = g.window_edges(2).iter().map(|&e| g.edge_name(e)).collect();
        assert_eq!(w, vec!["l", "r:0", "p:0", "q:0", "r:1"]);
    }

    #[test]
    fn endpoints_follow_templates() {
        let g = Family::RayedG;
        let (a, b) = g.endpoints(g.parse_edge("p:4").unwrap());
        assert_eq!((g.vertex_name(a), g.vertex_name(b)), ("a4".into(), "a5".into()));
        let (a, b) = g.endpoints(g.parse_edge("r:2").unwrap());
        assert_eq!((g.vertex_name(a), g.vertex_name(b)), ("a2".into(), "b2".into()));
        let (a, b) = g.endpoints(EdgeId::Prefix(0));
        assert_eq!(a, b);
    }
}
