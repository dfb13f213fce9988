//! Dominating sets through the Steiner framework, and the distance-network approximation.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{verify_steiner, Side, SplitGraph, Vertex};
use crate::instance::{Method, ProblemInstance, SteinerSolution};

/// Which domination predicates a vertex set satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominationCheck {
    pub dominating: bool,
    pub connected: bool,
    pub total: bool,
}

pub fn check_domination(g: &SplitGraph, set: &[Vertex]) -> DominationCheck {
    let mut inside = vec![false; g.order()];
    for &v in set {
        inside[v] = true;
    }
    let dominating = g
        .vertices()
        .all(|v| inside[v] || g.neighbors(v).iter().any(|&u| inside[u]));
    let total = g
        .vertices()
        .all(|v| g.neighbors(v).iter().any(|&u| inside[u]));
    let connected = !set.is_empty() && verify_steiner(g, set, &[]);
    DominationCheck {
        dominating: dominating && !set.is_empty(),
        connected,
        total,
    }
}

/// A one-vertex Steiner answer is never a total dominating set: the vertex has no
/// neighbor inside the set. Reported instead of asserted.
pub fn total_domination_degenerate(set: &[Vertex]) -> bool {
    set.len() == 1
}

/// Minimum dominating set via an exact Steiner solver with `R = I`.
///
/// When `|I| <= 1` the Steiner answer is empty, so one vertex is added: the smallest
/// neighbor of the independent vertex, or the first clique vertex.
pub fn ds_via_stree(
    instance: &ProblemInstance,
    solver: impl FnOnce(&ProblemInstance) -> Result<SteinerSolution>,
) -> Result<Vec<Vertex>> {
    let g = &instance.graph;
    let with_i = ProblemInstance {
        terminals: g.independent().collect(),
        budget: None,
        ..instance.clone()
    };
    let s = solver(&with_i)?.steiner_set;
    Ok(nonempty_dominating(g, push_ds_into_clique(g, &s)))
}

fn nonempty_dominating(g: &SplitGraph, mut set: Vec<Vertex>) -> Vec<Vertex> {
    if set.is_empty() {
        let pick = match g.independent().next() {
            Some(x) => g.clique_neighbors(x).first().copied().unwrap_or(x),
            None => 0,
        };
        if g.order() > 0 {
            set.push(pick);
        }
    }
    set
}

/// Replaces each independent member by its smallest neighbor.
pub fn push_ds_into_clique(g: &SplitGraph, set: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = set
        .iter()
        .map(|&v| match g.side(v) {
            Side::Clique => v,
            Side::Independent => g.clique_neighbors(v).first().copied().unwrap_or(v),
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxSteiner {
    pub solution: SteinerSolution,
    /// Edges of the final tree, `|S| + |R| - 1`.
    pub tree_edges: usize,
    /// Edge-cost guarantee `2 - 2/|R|`.
    pub guarantee: f64,
}

/// Terminal distance network, its minimum spanning tree, shortest path expansion,
/// spanning tree of the union and leaf pruning, on unit edge weights. Path expansion
/// prefers clique vertices of larger independent degree. A last pass drops Steiner
/// vertices that are not needed for connectivity.
pub fn approx_steiner(g: &SplitGraph, terminals: &[Vertex]) -> Result<ApproxSteiner> {
    let mut r: Vec<Vertex> = terminals.to_vec();
    r.sort_unstable();
    r.dedup();
    if r.is_empty() {
        return Err(Error::EmptyTerminals);
    }
    if let Some(&v) = r.iter().find(|&&v| !g.contains(v)) {
        return Err(Error::VertexOutOfRange(v));
    }
    let guarantee = 2.0 - 2.0 / r.len() as f64;
    if r.len() == 1 {
        return Ok(ApproxSteiner {
            solution: SteinerSolution::new(Vec::new(), Method::Approx),
            tree_edges: 0,
            guarantee,
        });
    }
    let adj: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v)).collect();
    let dist: Vec<Vec<usize>> = r.iter().map(|&t| bfs(&adj, t)).collect();
    if dist[0].contains(&usize::MAX) {
        return Err(Error::Disconnected);
    }

    // Prim on the terminal metric
    let mut in_tree = vec![false; r.len()];
    in_tree[0] = true;
    let mut mst = Vec::new();
    for _ in 1..r.len() {
        let (a, b) = (0..r.len())
            .filter(|&a| in_tree[a])
            .flat_map(|a| (0..r.len()).filter(|&b| !in_tree[b]).map(move |b| (a, b)))
            .min_by_key(|&(a, b)| (dist[a][r[b]], a, b))
            .expect("a terminal is outside the tree");
        in_tree[b] = true;
        mst.push((a, b));
    }

    let weight = |v: Vertex| match g.side(v) {
        Side::Clique => g.independent_neighbors(v).len(),
        Side::Independent => 0,
    };
    let mut union: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for (a, b) in mst {
        let da = &dist[a];
        let mut cur = r[b];
        while cur != r[a] {
            let prev = adj[cur]
                .iter()
                .copied()
                .filter(|&p| da[p] + 1 == da[cur])
                .max_by_key(|&p| (weight(p), std::cmp::Reverse(p)))
                .expect("shortest path predecessor");
            union.insert((prev.min(cur), prev.max(cur)));
            cur = prev;
        }
    }

    // spanning tree of the union, then prune non-terminal leaves
    let mut sub_adj: Vec<Vec<Vertex>> = vec![Vec::new(); g.order()];
    for &(u, v) in &union {
        sub_adj[u].push(v);
        sub_adj[v].push(u);
    }
    let mut tree_adj: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); g.order()];
    let mut seen = vec![false; g.order()];
    seen[r[0]] = true;
    let mut queue = VecDeque::from([r[0]]);
    while let Some(v) = queue.pop_front() {
        for &w in &sub_adj[v] {
            if !seen[w] {
                seen[w] = true;
                tree_adj[v].insert(w);
                tree_adj[w].insert(v);
                queue.push_back(w);
            }
        }
    }
    let is_terminal = |v: Vertex| r.binary_search(&v).is_ok();
    while let Some(leaf) = g
        .vertices()
        .find(|&v| !is_terminal(v) && seen[v] && tree_adj[v].len() <= 1)
    {
        seen[leaf] = false;
        for w in std::mem::take(&mut tree_adj[leaf]) {
            tree_adj[w].remove(&leaf);
        }
    }
    let mut steiner: Vec<Vertex> = g
        .vertices()
        .filter(|&v| seen[v] && !is_terminal(v))
        .collect();

    let mut order = steiner.clone();
    order.sort_by_key(|&v| (weight(v), std::cmp::Reverse(v)));
    for v in order {
        let rest: Vec<Vertex> = steiner.iter().copied().filter(|&s| s != v).collect();
        if verify_steiner(g, &r, &rest) {
            steiner = rest;
        }
    }
    debug_assert!(verify_steiner(g, &r, &steiner));
    let tree_edges = steiner.len() + r.len() - 1;
    Ok(ApproxSteiner {
        solution: SteinerSolution::new(steiner, Method::Approx),
        tree_edges,
        guarantee,
    })
}

fn bfs(adj: &[Vec<Vertex>], s: Vertex) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Approximate dominating set: the approximate Steiner set for `R = I`, pushed into
/// the clique and made nonempty.
pub fn approx_dominating_set(g: &SplitGraph) -> Result<Vec<Vertex>> {
    let independent: Vec<Vertex> = g.independent().collect();
    let s = if independent.is_empty() {
        Vec::new()
    } else {
        approx_steiner(g, &independent)?.solution.steiner_set
    };
    Ok(nonempty_dominating(g, push_ds_into_clique(g, &s)))
}
