//! Split graph representation.
//!
//! Vertices carry dense integer ids. The clique `K` occupies ids `0..m` and the
//! independent set `I` occupies ids `m..m + n`. Clique edges are never stored:
//! any two distinct `K` vertices are adjacent by definition, so only the
//! `K`–`I` edges are kept, once from each side.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// The clique `K`.
    Clique,
    /// The independent set `I`.
    Independent,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Clique => Side::Independent,
            Side::Independent => Side::Clique,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Clique => write!(f, "K"),
            Side::Independent => write!(f, "I"),
        }
    }
}

/// How clique edges are supplied to [`SplitGraph::build`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueEdges {
    /// Clique edges are implied; any `K`–`K` pairs in the edge list are ignored.
    Implicit,
    /// Every `K`–`K` pair must appear in the edge list.
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitGraph {
    n_clique: usize,
    n_independent: usize,
    /// For each `K` vertex, its sorted `I` neighbors.
    clique_adj: Vec<Vec<Vertex>>,
    /// For each `I` vertex (indexed by `id - m`), its sorted `K` neighbors.
    indep_adj: Vec<Vec<Vertex>>,
}

impl SplitGraph {
    /// Builds and validates a split graph from `K`–`I` edges with implicit clique edges.
    pub fn new(
        n_clique: usize,
        n_independent: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        Self::build(n_clique, n_independent, edges, CliqueEdges::Implicit)
    }

    pub fn build(
        n_clique: usize,
        n_independent: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
        clique_edges: CliqueEdges,
    ) -> Result<Self> {
        let g = Self::build_unchecked(n_clique, n_independent, edges, clique_edges)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Like [`SplitGraph::build`] but skips the connectivity check.
    pub fn build_unchecked(
        n_clique: usize,
        n_independent: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
        clique_edges: CliqueEdges,
    ) -> Result<Self> {
        let order = n_clique + n_independent;
        let mut clique_adj = vec![Vec::new(); n_clique];
        let mut indep_adj = vec![Vec::new(); n_independent];
        let mut clique_seen = vec![false; n_clique * n_clique];
        for (u, v) in edges {
            if u >= order {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= order {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::PartitionViolation(format!("self loop at {u}")));
            }
            match (u < n_clique, v < n_clique) {
                (true, true) => {
                    clique_seen[u * n_clique + v] = true;
                    clique_seen[v * n_clique + u] = true;
                }
                (false, false) => {
                    return Err(Error::PartitionViolation(format!(
                        "edge between independent vertices {u} and {v}"
                    )));
                }
                (true, false) => {
                    clique_adj[u].push(v);
                    indep_adj[v - n_clique].push(u);
                }
                (false, true) => {
                    clique_adj[v].push(u);
                    indep_adj[u - n_clique].push(v);
                }
            }
        }
        if clique_edges == CliqueEdges::Explicit {
            for a in 0..n_clique {
                for b in (a + 1)..n_clique {
                    if !clique_seen[a * n_clique + b] {
                        return Err(Error::PartitionViolation(format!(
                            "missing clique edge between {a} and {b}"
                        )));
                    }
                }
            }
        }
        for list in clique_adj.iter_mut().chain(indep_adj.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(SplitGraph {
            n_clique,
            n_independent,
            clique_adj,
            indep_adj,
        })
    }

    pub fn n_clique(&self) -> usize {
        self.n_clique
    }

    pub fn n_independent(&self) -> usize {
        self.n_independent
    }

    pub fn order(&self) -> usize {
        self.n_clique + self.n_independent
    }

    pub fn clique(&self) -> std::ops::Range<Vertex> {
        0..self.n_clique
    }

    pub fn independent(&self) -> std::ops::Range<Vertex> {
        self.n_clique..self.order()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn side(&self, v: Vertex) -> Side {
        debug_assert!(v < self.order());
        if v < self.n_clique {
            Side::Clique
        } else {
            Side::Independent
        }
    }

    pub fn side_vertices(&self, side: Side) -> std::ops::Range<Vertex> {
        match side {
            Side::Clique => self.clique(),
            Side::Independent => self.independent(),
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.order()
    }

    /// `N^I(u)` for a clique vertex `u`.
    pub fn independent_neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.clique_adj[u]
    }

    /// `N^K(x)` for an independent vertex `x`.
    pub fn clique_neighbors(&self, x: Vertex) -> &[Vertex] {
        &self.indep_adj[x - self.n_clique]
    }

    /// Neighbors on the opposite side of the partition.
    pub fn cross_neighbors(&self, v: Vertex) -> &[Vertex] {
        match self.side(v) {
            Side::Clique => self.independent_neighbors(v),
            Side::Independent => self.clique_neighbors(v),
        }
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        if u == v {
            return false;
        }
        match (self.side(u), self.side(v)) {
            (Side::Clique, Side::Clique) => true,
            (Side::Independent, Side::Independent) => false,
            (Side::Clique, Side::Independent) => self.clique_adj[u].binary_search(&v).is_ok(),
            (Side::Independent, Side::Clique) => self.clique_adj[v].binary_search(&u).is_ok(),
        }
    }

    /// Full open neighborhood, clique edges included.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        match self.side(v) {
            Side::Clique => self
                .clique()
                .filter(|&w| w != v)
                .chain(self.clique_adj[v].iter().copied())
                .collect(),
            Side::Independent => self.clique_neighbors(v).to_vec(),
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        match self.side(v) {
            Side::Clique => self.n_clique - 1 + self.clique_adj[v].len(),
            Side::Independent => self.clique_neighbors(v).len(),
        }
    }

    /// `Δ^K`: the largest number of clique neighbors of an independent vertex.
    pub fn max_independent_degree(&self) -> usize {
        self.indep_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// All `K`–`I` edges as `(k, i)` pairs, sorted.
    pub fn cross_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.clique_adj
            .iter()
            .enumerate()
            .flat_map(|(u, xs)| xs.iter().map(move |&x| (u, x)))
    }

    pub fn n_cross_edges(&self) -> usize {
        self.clique_adj.iter().map(Vec::len).sum()
    }

    /// Display label: `w1..wm` for the clique, `x1..xn` for the independent set.
    pub fn label(&self, v: Vertex) -> String {
        match self.side(v) {
            Side::Clique => format!("w{}", v + 1),
            Side::Independent => format!("x{}", v - self.n_clique + 1),
        }
    }

    pub fn is_connected(&self) -> bool {
        let order = self.order();
        if order == 0 {
            return true;
        }
        let members = vec![true; order];
        component_from(self, &members, 0)
            .iter()
            .filter(|&&r| r)
            .count()
            == order
    }

    /// True when every independent vertex has a neighbor in `set`.
    pub fn dominates_independent(&self, set: &[Vertex]) -> bool {
        let mut hit = vec![false; self.order()];
        for &v in set {
            hit[v] = true;
        }
        self.independent()
            .all(|x| hit[x] || self.clique_neighbors(x).iter().any(|&u| hit[u]))
    }

    /// Induced subgraph on the kept vertices. Returns the graph and, for every new
    /// vertex, the id it had in `self`. Kept vertices retain their relative order.
    pub fn induced(&self, keep: &[bool]) -> (SplitGraph, Vec<Vertex>) {
        let mut old_of_new = Vec::new();
        let mut new_of_old = vec![usize::MAX; self.order()];
        for v in self.clique().chain(self.independent()) {
            if keep[v] {
                new_of_old[v] = old_of_new.len();
                old_of_new.push(v);
            }
        }
        let m = self.clique().filter(|&v| keep[v]).count();
        let n = old_of_new.len() - m;
        let edges = self
            .cross_edges()
            .filter(|&(u, x)| keep[u] && keep[x])
            .map(|(u, x)| (new_of_old[u], new_of_old[x]));
        let g = SplitGraph::build_unchecked(m, n, edges, CliqueEdges::Implicit)
            .expect("induced subgraph of a split graph is a split graph");
        (g, old_of_new)
    }
}

/// BFS restricted to `members`, starting at `start`. Returns reachability flags.
pub(crate) fn component_from(g: &SplitGraph, members: &[bool], start: Vertex) -> Vec<bool> {
    let mut seen = vec![false; g.order()];
    if !members[start] {
        return seen;
    }
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut clique_done = false;
    while let Some(v) = queue.pop_front() {
        let mut push = |w: Vertex, queue: &mut VecDeque<Vertex>| {
            if members[w] && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        };
        match g.side(v) {
            Side::Clique => {
                // the first clique vertex reached pulls in every member of K
                if !clique_done {
                    clique_done = true;
                    for w in g.clique() {
                        push(w, &mut queue);
                    }
                }
                for &x in g.independent_neighbors(v) {
                    push(x, &mut queue);
                }
            }
            Side::Independent => {
                for &u in g.clique_neighbors(v) {
                    push(u, &mut queue);
                }
            }
        }
    }
    seen
}

/// Checks that `steiner` is a Steiner set for `terminals`: the two sets are disjoint
/// and the subgraph induced on their union is connected (breadth-first search).
pub fn verify_steiner(g: &SplitGraph, terminals: &[Vertex], steiner: &[Vertex]) -> bool {
    unreached_terminals(g, terminals, steiner).is_some_and(|u| u.is_empty())
}

/// Terminals outside the component of the first terminal in `G[S ∪ R]`.
/// `None` when the sets overlap or mention vertices outside the graph.
pub fn unreached_terminals(
    g: &SplitGraph,
    terminals: &[Vertex],
    steiner: &[Vertex],
) -> Option<Vec<Vertex>> {
    let mut members = vec![false; g.order()];
    for &r in terminals {
        if !g.contains(r) {
            return None;
        }
        members[r] = true;
    }
    for &s in steiner {
        if !g.contains(s) || members[s] {
            return None;
        }
    }
    for &s in steiner {
        members[s] = true;
    }
    let Some(&first) = terminals.first().or(steiner.first()) else {
        return Some(Vec::new());
    };
    let seen = component_from(g, &members, first);
    let mut missing: Vec<Vertex> = terminals.iter().copied().filter(|&r| !seen[r]).collect();
    if steiner.iter().any(|&s| !seen[s]) && missing.is_empty() {
        // a stray Steiner vertex disconnects G[S ∪ R] even when every terminal is reached
        missing.extend(steiner.iter().copied().filter(|&s| !seen[s]));
    }
    missing.sort_unstable();
    missing.dedup();
    Some(missing)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x3c_example() -> SplitGraph {
        crate::reductions::reduce_x3c(&crate::reductions::X3cInstance::example())
            .unwrap()
            .instance
            .graph
    }

    #[test]
    fn smallest_connected_instance() {
        let g = SplitGraph::new(1, 1, [(0, 1)]).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.is_adjacent(0, 1));
        assert_eq!(g.label(0), "w1");
        assert_eq!(g.label(1), "x1");
    }

    #[test]
    fn explicit_clique_requires_every_pair() {
        let err = SplitGraph::build(2, 1, [(0, 2), (1, 2)], CliqueEdges::Explicit).unwrap_err();
        assert!(matches!(err, Error::PartitionViolation(_)));
        let ok = SplitGraph::build(2, 1, [(0, 2), (1, 0)], CliqueEdges::Explicit).unwrap();
        assert!(ok.is_adjacent(0, 1));
    }

    #[test]
    fn rejects_independent_edges_and_disconnection() {
        assert!(matches!(
            SplitGraph::new(1, 2, [(0, 1), (1, 2)]),
            Err(Error::PartitionViolation(_))
        ));
        assert_eq!(SplitGraph::new(1, 2, [(0, 1)]), Err(Error::Disconnected));
        assert_eq!(
            SplitGraph::new(1, 1, [(0, 5)]),
            Err(Error::VertexOutOfRange(5))
        );
    }

    #[test]
    fn x3c_example_is_valid() {
        let g = x3c_example();
        assert_eq!((g.n_clique(), g.n_independent()), (5, 7));
        // x7 is adjacent to every c_i
        assert_eq!(g.clique_neighbors(11), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn steiner_verification_on_x3c_example() {
        let g = x3c_example();
        let terminals: Vec<_> = g.independent().collect();
        assert!(verify_steiner(&g, &terminals, &[1, 4]));
        assert!(!verify_steiner(&g, &terminals, &[0]));
        // c1 = {x1, x2, x3}; x4, x5, x6 stay unreached
        assert_eq!(
            unreached_terminals(&g, &terminals, &[0]).unwrap(),
            vec![8, 9, 10]
        );
        // overlapping sets are rejected
        assert!(!verify_steiner(&g, &terminals, &[5]));
    }

    #[test]
    fn all_vertices_as_terminals() {
        let g = x3c_example();
        let all: Vec<_> = g.vertices().collect();
        assert!(verify_steiner(&g, &all, &[]));
    }

    #[test]
    fn stray_steiner_vertex_is_rejected() {
        // w2 is adjacent to nothing in I; G[{x1, w1, w2}] is still connected via the clique
        let g = SplitGraph::new(2, 2, [(0, 2), (0, 3), (1, 3)]).unwrap();
        assert!(verify_steiner(&g, &[2], &[0, 1]));
        // R = {x1}, S = {w2}: w2 not adjacent to x1
        assert!(!verify_steiner(&g, &[2], &[1]));
    }
}
