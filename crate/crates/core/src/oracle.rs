//! Exhaustive reference solvers for small instances.
//!
//! Everything here works on `u64` adjacency masks and does its own connectivity
//! checks, so it shares no traversal code with the rest of the crate.

use crate::error::{Error, Result};
use crate::graph::{SplitGraph, Vertex};
use crate::instance::{Method, SteinerSolution};

pub const DEFAULT_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Largest accepted vertex count.
    pub cap: usize,
    /// Search all of `V \ R` even when `R = I` (audit mode).
    pub full_space: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            cap: DEFAULT_CAP,
            full_space: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domination {
    Dominating,
    Connected,
    Total,
}

struct Masks {
    adj: Vec<u64>,
}

impl Masks {
    fn new(g: &SplitGraph, cap: usize) -> Result<Self> {
        let order = g.order();
        if order > cap.min(64) {
            return Err(Error::CapExceeded { order, cap });
        }
        let mut adj = vec![0u64; order];
        for (u, row) in adj.iter_mut().enumerate() {
            for v in 0..order {
                if g.is_adjacent(u, v) {
                    *row |= 1 << v;
                }
            }
        }
        Ok(Masks { adj })
    }

    fn connected(&self, set: u64) -> bool {
        if set == 0 {
            return true;
        }
        let mut reach = set & set.wrapping_neg();
        loop {
            let mut next = reach;
            let mut bits = reach;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v] & set;
            }
            if next == reach {
                return reach == set;
            }
            reach = next;
        }
    }

    fn closed_neighborhood(&self, set: u64) -> u64 {
        let mut out = set;
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= self.adj[v];
        }
        out
    }
}

fn mask_of(vs: impl IntoIterator<Item = Vertex>) -> u64 {
    vs.into_iter().fold(0, |m, v| m | (1 << v))
}

fn vertices_of(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Visits the `k`-subsets of `0..n` in lexicographic order until `f` returns true.
pub(crate) fn for_each_combination(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> bool,
) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Smallest subset of `candidates` (by size, then lexicographic) satisfying `ok`.
fn smallest(candidates: &[Vertex], mut ok: impl FnMut(u64) -> bool) -> Option<u64> {
    for size in 0..=candidates.len() {
        let mut found = None;
        for_each_combination(candidates.len(), size, |idx| {
            let m = mask_of(idx.iter().map(|&i| candidates[i]));
            if ok(m) {
                found = Some(m);
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

pub fn oracle_min_steiner(g: &SplitGraph, terminals: &[Vertex]) -> Result<SteinerSolution> {
    oracle_min_steiner_with(g, terminals, OracleOptions::default())
}

/// Minimum Steiner set by enumeration in increasing size.
pub fn oracle_min_steiner_with(
    g: &SplitGraph,
    terminals: &[Vertex],
    opts: OracleOptions,
) -> Result<SteinerSolution> {
    let masks = Masks::new(g, opts.cap)?;
    let r = mask_of(terminals.iter().copied());
    let is_i = r == mask_of(g.independent());
    let candidates: Vec<Vertex> = if is_i && !opts.full_space {
        g.clique().collect()
    } else {
        g.vertices().filter(|&v| r & (1 << v) == 0).collect()
    };
    let best = smallest(&candidates, |s| masks.connected(s | r))
        .ok_or_else(|| Error::Infeasible("terminals cannot be connected".into()))?;
    Ok(SteinerSolution::new(vertices_of(best), Method::Oracle))
}

/// Smallest `K`-subset adjacent to every independent vertex.
pub fn oracle_min_cover(g: &SplitGraph) -> Result<Vec<Vertex>> {
    let masks = Masks::new(g, DEFAULT_CAP.max(g.order()).min(64))?;
    let i_mask = mask_of(g.independent());
    let candidates: Vec<Vertex> = g.clique().collect();
    smallest(&candidates, |s| {
        masks.closed_neighborhood(s) & i_mask == i_mask
    })
    .map(vertices_of)
    .ok_or_else(|| Error::Infeasible("some independent vertex has no neighbor".into()))
}

/// Every minimum `K`-subset adjacent to every independent vertex.
pub fn oracle_all_min_covers(g: &SplitGraph) -> Result<Vec<Vec<Vertex>>> {
    let size = oracle_min_cover(g)?.len();
    let masks = Masks::new(g, 64)?;
    let i_mask = mask_of(g.independent());
    let candidates: Vec<Vertex> = g.clique().collect();
    let mut all = Vec::new();
    for_each_combination(candidates.len(), size, |idx| {
        let m = mask_of(idx.iter().map(|&i| candidates[i]));
        if masks.closed_neighborhood(m) & i_mask == i_mask {
            all.push(vertices_of(m));
        }
        false
    });
    Ok(all)
}

pub fn oracle_min_dominating(g: &SplitGraph, variant: Domination) -> Result<Vec<Vertex>> {
    oracle_min_dominating_with(g, variant, DEFAULT_CAP)
}

pub fn oracle_min_dominating_with(
    g: &SplitGraph,
    variant: Domination,
    cap: usize,
) -> Result<Vec<Vertex>> {
    let masks = Masks::new(g, cap)?;
    let all = mask_of(g.vertices());
    let candidates: Vec<Vertex> = g.vertices().collect();
    let ok = |d: u64| {
        if masks.closed_neighborhood(d) != all {
            return false;
        }
        match variant {
            Domination::Dominating => true,
            Domination::Connected => masks.connected(d),
            Domination::Total => vertices_of(d).into_iter().all(|v| masks.adj[v] & d != 0),
        }
    };
    smallest(&candidates, ok)
        .map(vertices_of)
        .ok_or_else(|| Error::Infeasible(format!("no {variant:?} set exists")))
}

/// Minimum vertex cover size of a simple graph on `0..n`.
pub fn min_vertex_cover(n: usize, edges: &[(usize, usize)]) -> usize {
    let candidates: Vec<usize> = (0..n).collect();
    smallest(&candidates, |c| {
        edges
            .iter()
            .all(|&(a, b)| c & (1 << a) != 0 || c & (1 << b) != 0)
    })
    .map(|m| m.count_ones() as usize)
    .unwrap_or(n)
}

/// Some exact cover of `0..ground` by the given sets, as set indices, if one exists.
pub fn exact_cover(ground: usize, sets: &[[usize; 3]]) -> Option<Vec<usize>> {
    let full = (1u64 << ground) - 1;
    let set_masks: Vec<u64> = sets.iter().map(|s| mask_of(s.iter().copied())).collect();
    fn search(covered: u64, full: u64, sets: &[u64], chosen: &mut Vec<usize>) -> bool {
        if covered == full {
            return true;
        }
        let first = (!covered & full).trailing_zeros();
        for (i, &s) in sets.iter().enumerate() {
            if s & (1 << first) != 0 && s & covered == 0 {
                chosen.push(i);
                if search(covered | s, full, sets, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    search(0, full, &set_masks, &mut chosen).then(|| {
        chosen.sort_unstable();
        chosen
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn x3c_example_minimum_is_two() {
        let inst = fixtures::x3c_example();
        let sol = oracle_min_steiner(&inst.graph, &inst.terminal_vec()).unwrap();
        assert_eq!(sol.size(), 2);
        // lexicographically first optimum is {c2, c5}
        assert_eq!(sol.steiner_set, vec![1, 4]);
        let audit = oracle_min_steiner_with(
            &inst.graph,
            &inst.terminal_vec(),
            OracleOptions {
                full_space: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(audit.size(), 2);
    }

    #[test]
    fn all_vertices_as_terminals_need_nothing() {
        let inst = fixtures::x3c_example();
        let all: Vec<_> = inst.graph.vertices().collect();
        assert_eq!(oracle_min_steiner(&inst.graph, &all).unwrap().size(), 0);
    }

    #[test]
    fn p1_minimum_is_two() {
        let inst = fixtures::p1();
        assert_eq!(
            oracle_min_steiner(&inst.graph, &inst.terminal_vec())
                .unwrap()
                .size(),
            2
        );
        assert_eq!(oracle_min_cover(&inst.graph).unwrap(), vec![0, 1]);
        assert_eq!(
            oracle_all_min_covers(&inst.graph).unwrap(),
            vec![vec![0, 1]]
        );
    }

    #[test]
    fn domination_variants() {
        let complete =
            SplitGraph::new(2, 3, (0..2).flat_map(|u| (2..5).map(move |x| (u, x)))).unwrap();
        assert_eq!(
            oracle_min_dominating(&complete, Domination::Dominating)
                .unwrap()
                .len(),
            1
        );
        let star = SplitGraph::new(1, 2, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(
            oracle_min_dominating(&star, Domination::Connected).unwrap(),
            vec![0]
        );
        assert_eq!(
            oracle_min_dominating(&star, Domination::Total)
                .unwrap()
                .len(),
            2
        );
        let x3c_example = fixtures::x3c_example();
        assert_eq!(
            oracle_min_dominating(&x3c_example.graph, Domination::Dominating)
                .unwrap()
                .len(),
            2
        );
        let single = SplitGraph::new(1, 0, []).unwrap();
        assert!(matches!(
            oracle_min_dominating(&single, Domination::Total),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let g = SplitGraph::new(3, 20, (3..23).map(|x| (0, x))).unwrap();
        let r: Vec<_> = g.independent().collect();
        assert_eq!(
            oracle_min_steiner(&g, &r),
            Err(Error::CapExceeded {
                order: 23,
                cap: DEFAULT_CAP
            })
        );
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn small_reference_helpers() {
        assert_eq!(min_vertex_cover(3, &[(0, 1), (1, 2), (0, 2)]), 2);
        assert_eq!(min_vertex_cover(2, &[(0, 1)]), 1);
        assert_eq!(exact_cover(3, &[[0, 1, 2]]), Some(vec![0]));
        assert_eq!(exact_cover(6, &[[0, 1, 2], [1, 2, 3]]), None);
    }

    #[test]
    fn adding_edges_never_increases_the_minimum() {
        let inst = fixtures::p1();
        let before = oracle_min_cover(&inst.graph).unwrap().len();
        let mut edges: Vec<_> = inst.graph.cross_edges().collect();
        edges.push((0, 5));
        edges.push((0, 6));
        let denser = SplitGraph::new(3, 4, edges).unwrap();
        assert!(oracle_min_cover(&denser).unwrap().len() <= before);
    }
}
