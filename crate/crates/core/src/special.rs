//! Star-convex and comb-convex special cases.

use crate::convexity::{ConvexStructure, Kind, Layout};
use crate::error::{Error, Result};
use crate::graph::{CliqueEdges, Side, SplitGraph, Vertex};
use crate::instance::{Method, ProblemInstance, SteinerSolution};
use crate::oracle::for_each_combination;
use crate::path::greedy_interval_cover;

/// How the bounded-degree star solver split the leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSplit {
    /// Leaves whose neighborhood misses `N(z)`, with the vertex picked for each.
    pub r1: Vec<(Vertex, Vertex)>,
    /// Leaves sharing a neighbor with the root.
    pub r2: Vec<Vertex>,
    /// Vertices of `N(z)` in the solution.
    pub s2: Vec<Vertex>,
    pub cover: Vec<Vertex>,
}

pub fn solve_star_convex_i_bounded(
    instance: &ProblemInstance,
    d: usize,
) -> Result<SteinerSolution> {
    let s = instance.require(Kind::Star, Side::Independent)?;
    let split = star_bounded_cover(&instance.graph, s, d)?;
    if instance.graph.n_independent() <= 1 {
        return Ok(SteinerSolution::new(Vec::new(), Method::StarBounded));
    }
    Ok(SteinerSolution::new(split.cover, Method::StarBounded))
}

/// Minimum cover of `I` for a star-convex-on-`I` graph whose independent degrees are at
/// most `d`.
pub fn star_bounded_cover(
    g: &SplitGraph,
    structure: &ConvexStructure,
    d: usize,
) -> Result<StarSplit> {
    let Layout::Star { root } = structure.layout else {
        return Err(Error::StructureMismatch {
            expected: "star on I".into(),
            found: format!("{} on {}", structure.kind(), structure.side),
        });
    };
    for x in g.independent() {
        let degree = g.clique_neighbors(x).len();
        if degree > d {
            return Err(Error::DegreeBoundViolated {
                vertex: x,
                degree,
                bound: d,
            });
        }
    }
    let near_root = g.clique_neighbors(root);
    if near_root.is_empty() {
        return Err(Error::EmptyNeighborhood(root));
    }
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    for y in g.independent().filter(|&y| y != root) {
        let nbrs = g.clique_neighbors(y);
        if nbrs.iter().any(|u| near_root.binary_search(u).is_ok()) {
            r2.push(y);
        } else {
            let &pick = nbrs.first().ok_or(Error::EmptyNeighborhood(y))?;
            r1.push((y, pick));
        }
    }
    let mut s2 = Vec::new();
    for size in 0..=near_root.len() {
        let found = for_each_combination(near_root.len(), size, |idx| {
            let hits = |y: &Vertex| idx.iter().any(|&i| g.is_adjacent(near_root[i], *y));
            if r2.iter().all(hits) {
                s2 = idx.iter().map(|&i| near_root[i]).collect();
                true
            } else {
                false
            }
        });
        if found {
            break;
        }
    }
    if s2.is_empty() {
        s2.push(near_root[0]);
    }
    let mut cover: Vec<Vertex> = r1
        .iter()
        .map(|&(_, u)| u)
        .chain(s2.iter().copied())
        .collect();
    cover.sort_unstable();
    cover.dedup();
    Ok(StarSplit { r1, r2, s2, cover })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombOutcome {
    pub cover: Vec<Vertex>,
    /// Anchor sets of the winning assignment, one per interior backbone vertex.
    pub anchors: Vec<Vec<Vertex>>,
    pub assignments: usize,
    pub path_calls: usize,
}

pub fn solve_comb_convex_i_xp(instance: &ProblemInstance) -> Result<SteinerSolution> {
    let s = instance.require(Kind::Comb, Side::Independent)?;
    if instance.graph.n_independent() <= 1 {
        return Ok(SteinerSolution::new(Vec::new(), Method::CombXp));
    }
    Ok(SteinerSolution::new(
        comb_xp_cover(&instance.graph, s)?.cover,
        Method::CombXp,
    ))
}

/// Cover of `I` for a comb-convex-on-`I` graph with backbone `a_1..a_l`.
///
/// Each interior backbone vertex gets an anchor set of one to three of its neighbors,
/// consistently across the backbone. What remains splits into the end paths
/// `(t_1, a_1)`, `(a_l, t_l)` and the interior teeth, each covered greedily.
/// Minimum for `l <= 3`.
pub fn comb_xp_cover(g: &SplitGraph, structure: &ConvexStructure) -> Result<CombOutcome> {
    let Layout::Comb { backbone, teeth } = &structure.layout else {
        return Err(Error::StructureMismatch {
            expected: "comb on I".into(),
            found: format!("{} on {}", structure.kind(), structure.side),
        });
    };
    let l = backbone.len();
    if l <= 2 {
        let mut order = vec![teeth[0], backbone[0]];
        if l == 2 {
            order.extend([backbone[1], teeth[1]]);
        }
        let cover = greedy_interval_cover(g, &order)?;
        return Ok(CombOutcome {
            cover,
            anchors: Vec::new(),
            assignments: 1,
            path_calls: 1,
        });
    }
    let interior = &backbone[1..l - 1];
    let mut blocked = vec![false; g.order()];
    for &a in interior {
        for &u in g.clique_neighbors(a) {
            blocked[u] = true;
        }
    }
    let mut pieces = vec![
        vec![teeth[0], backbone[0]],
        vec![backbone[l - 1], teeth[l - 1]],
    ];
    pieces.extend(teeth[1..l - 1].iter().map(|&t| vec![t]));

    let mut search = CombSearch {
        g,
        interior,
        pieces: &pieces,
        blocked: &blocked,
        chosen: Vec::new(),
        anchors: Vec::new(),
        best: None,
        assignments: 0,
        path_calls: 0,
    };
    search.descend(0);
    let (cover, anchors) = search
        .best
        .ok_or_else(|| Error::Infeasible("no consistent anchor assignment".into()))?;
    Ok(CombOutcome {
        cover,
        anchors,
        assignments: search.assignments,
        path_calls: search.path_calls,
    })
}

struct CombSearch<'a> {
    g: &'a SplitGraph,
    interior: &'a [Vertex],
    pieces: &'a [Vec<Vertex>],
    blocked: &'a [bool],
    chosen: Vec<Vertex>,
    anchors: Vec<Vec<Vertex>>,
    best: Option<(Vec<Vertex>, Vec<Vec<Vertex>>)>,
    assignments: usize,
    path_calls: usize,
}

impl CombSearch<'_> {
    fn descend(&mut self, i: usize) {
        if i == self.interior.len() {
            self.complete();
            return;
        }
        let g = self.g;
        let a = self.interior[i];
        let pool = g.clique_neighbors(a);
        let forced: Vec<Vertex> = self
            .chosen
            .iter()
            .copied()
            .filter(|u| pool.binary_search(u).is_ok())
            .collect();
        if forced.len() > 3 {
            return;
        }
        // fresh anchors must not touch earlier interior vertices, or they would
        // have been anchors there too
        let fresh: Vec<Vertex> = pool
            .iter()
            .copied()
            .filter(|u| !forced.contains(u))
            .filter(|&u| !self.interior[..i].iter().any(|&b| g.is_adjacent(u, b)))
            .collect();
        let lo = 1usize.saturating_sub(forced.len());
        let hi = 3usize.saturating_sub(forced.len()).min(fresh.len());
        for extra in lo..=hi {
            for_each_combination(fresh.len(), extra, |idx| {
                let added: Vec<Vertex> = idx.iter().map(|&j| fresh[j]).collect();
                let mut set = forced.clone();
                set.extend(&added);
                set.sort_unstable();
                self.chosen.extend(&added);
                self.anchors.push(set);
                self.descend(i + 1);
                self.anchors.pop();
                self.chosen.truncate(self.chosen.len() - added.len());
                false
            });
        }
    }

    fn complete(&mut self) {
        self.assignments += 1;
        let g = self.g;
        let covered = |x: Vertex| self.chosen.iter().any(|&u| g.is_adjacent(u, x));
        let mut cover = self.chosen.clone();
        for piece in self.pieces {
            let rest: Vec<Vertex> = piece.iter().copied().filter(|&x| !covered(x)).collect();
            if rest.is_empty() {
                continue;
            }
            let clique: Vec<Vertex> = g
                .clique()
                .filter(|&u| !self.blocked[u])
                .filter(|&u| rest.iter().any(|&x| g.is_adjacent(u, x)))
                .collect();
            let m = clique.len();
            let edges = clique.iter().enumerate().flat_map(|(i, &u)| {
                rest.iter()
                    .enumerate()
                    .filter(move |&(_, &x)| g.is_adjacent(u, x))
                    .map(move |(j, _)| (i, m + j))
            });
            let Ok(sub) = SplitGraph::build_unchecked(m, rest.len(), edges, CliqueEdges::Implicit)
            else {
                return;
            };
            self.path_calls += 1;
            let order: Vec<Vertex> = sub.independent().collect();
            let Ok(picks) = greedy_interval_cover(&sub, &order) else {
                return;
            };
            cover.extend(picks.into_iter().map(|p| clique[p]));
        }
        cover.sort_unstable();
        cover.dedup();
        if self
            .best
            .as_ref()
            .is_none_or(|(b, _)| cover.len() < b.len())
        {
            self.best = Some((cover, self.anchors.clone()));
        }
    }
}

/// Result of the pendant-vertex kernel for star-convex instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarKernel {
    pub kernel: SplitGraph,
    /// Original id of each kernel vertex.
    pub origin: Vec<Vertex>,
    /// Clique vertices every cover must contain.
    pub forced: Vec<Vertex>,
    pub budget: usize,
    /// Kernel clique vertices with a neighbor other than the root.
    pub candidates: usize,
    /// Number of leaves of the star.
    pub leaves: usize,
}

impl StarKernel {
    /// Maps a kernel cover back and adds the forced vertices.
    pub fn lift(&self, kernel_cover: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = kernel_cover.iter().map(|&v| self.origin[v]).collect();
        out.extend(&self.forced);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `2^l - 1`, saturating.
    pub fn candidate_bound(&self) -> usize {
        1usize
            .checked_shl(self.leaves as u32)
            .map_or(usize::MAX, |b| b - 1)
    }
}

/// Forces the unique neighbor of every degree-one independent vertex, deletes what those
/// cover, then drops clique vertices whose remaining neighborhood is contained in
/// another's (ties keep the smaller id). Answers cover questions: `I` can be covered
/// with `k` vertices iff the kernel can with `budget`.
pub fn kernelize_star_pendant(instance: &ProblemInstance, k: usize) -> Result<StarKernel> {
    let s = instance.require(Kind::Star, Side::Independent)?;
    let Layout::Star { root } = s.layout else {
        unreachable!()
    };
    let g = &instance.graph;
    let mut forced: Vec<Vertex> = g
        .independent()
        .filter(|&y| g.clique_neighbors(y).len() == 1)
        .map(|y| g.clique_neighbors(y)[0])
        .collect();
    forced.sort_unstable();
    forced.dedup();
    if forced.len() > k {
        return Err(Error::BudgetExhausted {
            forced: forced.len(),
            budget: k,
        });
    }
    let mut alive = vec![true; g.order()];
    for &u in &forced {
        alive[u] = false;
        for &x in g.independent_neighbors(u) {
            alive[x] = false;
        }
    }
    let signature = |u: Vertex| -> Vec<Vertex> {
        g.independent_neighbors(u)
            .iter()
            .copied()
            .filter(|&x| alive[x])
            .collect()
    };
    let live: Vec<Vertex> = g.clique().filter(|&u| alive[u]).collect();
    let sigs: Vec<Vec<Vertex>> = live.iter().map(|&u| signature(u)).collect();
    for (i, &u) in live.iter().enumerate() {
        let dominated = sigs[i].is_empty()
            || (0..live.len()).any(|j| {
                j != i
                    && sigs[i].iter().all(|x| sigs[j].binary_search(x).is_ok())
                    && (sigs[i].len() < sigs[j].len() || live[j] < u)
            });
        if dominated {
            alive[u] = false;
        }
    }
    let keep: Vec<bool> = alive.clone();
    let (kernel, origin) = g.induced(&keep);
    let candidates = kernel
        .clique()
        .filter(|&u| {
            let nbrs = kernel.independent_neighbors(u);
            !(nbrs.len() == 1 && origin[nbrs[0]] == root)
        })
        .count();
    let out = StarKernel {
        kernel,
        origin,
        forced: forced.clone(),
        budget: k - forced.len(),
        candidates,
        leaves: g.n_independent() - 1,
    };
    assert!(
        out.candidates <= out.candidate_bound(),
        "kernel keeps {} candidates for {} leaves",
        out.candidates,
        out.leaves
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::verify_convexity;
    use crate::oracle::oracle_min_cover;

    /// Star on I rooted at x1.
    fn star(m: usize, n: usize, edges: &[(usize, usize)]) -> ProblemInstance {
        let g = SplitGraph::new(m, n, edges.iter().map(|&(u, x)| (u, m + x - 1))).unwrap();
        let inst = ProblemInstance::steiner_on_independent(
            g,
            Some(ConvexStructure::new(
                Side::Independent,
                Layout::Star { root: m },
            )),
        );
        assert!(
            verify_convexity(&inst.graph, inst.structure.as_ref().unwrap())
                .unwrap()
                .valid
        );
        inst
    }

    #[test]
    fn shared_neighbor_covers_all() {
        let inst = star(2, 4, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]);
        assert_eq!(
            solve_star_convex_i_bounded(&inst, 4).unwrap().steiner_set,
            vec![0]
        );
    }

    #[test]
    fn leaves_away_from_root_add_one_root_neighbor() {
        // x2 ~ w2, x3 ~ w3 only; root x1 ~ w1
        let inst = star(3, 3, &[(0, 1), (1, 2), (2, 3)]);
        let split = star_bounded_cover(&inst.graph, inst.structure.as_ref().unwrap(), 2).unwrap();
        assert!(split.r2.is_empty());
        assert_eq!(split.s2, vec![0]);
        assert_eq!(split.cover, vec![0, 1, 2]);
        assert_eq!(
            split.cover.len(),
            oracle_min_cover(&inst.graph).unwrap().len()
        );
    }

    #[test]
    fn degree_bound_is_checked() {
        let inst = star(2, 3, &[(0, 1), (1, 1), (0, 2), (1, 3)]);
        assert_eq!(
            solve_star_convex_i_bounded(&inst, 1),
            Err(Error::DegreeBoundViolated {
                vertex: 2,
                degree: 2,
                bound: 1
            })
        );
    }

    #[test]
    fn comb_with_one_tooth() {
        // backbone x1, tooth x2
        let g = SplitGraph::new(2, 2, [(0, 2), (1, 3), (1, 2)]).unwrap();
        let s = ConvexStructure::new(
            Side::Independent,
            Layout::Comb {
                backbone: vec![2],
                teeth: vec![3],
            },
        );
        assert!(verify_convexity(&g, &s).unwrap().valid);
        assert_eq!(comb_xp_cover(&g, &s).unwrap().cover, vec![1]);
    }

    #[test]
    fn vc_example_comb_needs_two() {
        let inst = crate::fixtures::vc_example();
        let out = comb_xp_cover(&inst.graph, inst.structure.as_ref().unwrap()).unwrap();
        assert_eq!(out.cover.len(), 2);
        assert!(out.assignments > 0);
    }

    #[test]
    fn pendant_kernel_forces_and_collapses_twins() {
        // x2 has the single neighbor w1; w2 and w3 are twins on {x1, x3}
        let inst = star(3, 3, &[(0, 2), (0, 1), (1, 1), (1, 3), (2, 1), (2, 3)]);
        let kernel = kernelize_star_pendant(&inst, 2).unwrap();
        assert_eq!(kernel.forced, vec![0]);
        assert_eq!(kernel.budget, 1);
        assert_eq!(kernel.kernel.n_clique(), 1);
        assert_eq!(kernel.origin[0], 1);
        let lifted = kernel.lift(&oracle_min_cover(&kernel.kernel).unwrap());
        assert_eq!(lifted, vec![0, 1]);
        assert!(inst.graph.dominates_independent(&lifted));
    }

    #[test]
    fn pendant_kernel_everything_forced() {
        let inst = star(3, 3, &[(0, 1), (1, 2), (2, 3)]);
        let kernel = kernelize_star_pendant(&inst, 3).unwrap();
        assert_eq!(kernel.kernel.n_independent(), 0);
        assert_eq!(kernel.forced.len(), 3);
        assert_eq!(
            kernelize_star_pendant(&inst, 2),
            Err(Error::BudgetExhausted {
                forced: 3,
                budget: 2
            })
        );
    }
}
