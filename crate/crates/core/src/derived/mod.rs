//! Solvers that guess how a single independent vertex is covered and hand the
//! rest to the path or tree black boxes.

mod circular_i;
mod circular_k;
mod triad;

pub use circular_i::{circular_i_case, circular_i_cover, solve_circular_convex_i};
pub use circular_k::{circular_k_case, circular_k_cover, solve_circular_convex_k};
pub use triad::{solve_triad_convex_i, triad_case, triad_cover};

use crate::convexity::ConvexStructure;
use crate::graph::{SplitGraph, Vertex};
use crate::oracle::for_each_combination;

/// Auxiliary vertices introduced when a cycle is cut open.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Aux {
    Alpha1,
    Alpha2,
    Beta1,
    Beta2,
}

/// Where a vertex of a derived instance comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    Original(Vertex),
    Auxiliary(Aux),
}

/// A derived instance with the structure its black box expects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubInstance {
    pub graph: SplitGraph,
    pub structure: ConvexStructure,
    /// Indexed by vertex of `graph`.
    pub origin: Vec<Origin>,
}

impl SubInstance {
    /// Original vertices among `picks`.
    pub fn lift(&self, picks: &[Vertex]) -> Vec<Vertex> {
        picks
            .iter()
            .filter_map(|&v| match self.origin[v] {
                Origin::Original(o) => Some(o),
                Origin::Auxiliary(_) => None,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRecord {
    pub anchors: Vec<Vertex>,
    /// Size of the assembled cover, `None` when the case was skipped.
    pub size: Option<usize>,
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedOutcome {
    /// Minimum cover of `I`, sorted.
    pub cover: Vec<Vertex>,
    /// Anchors of the winning case.
    pub anchors: Vec<Vertex>,
    pub path_calls: usize,
    pub cases: Vec<CaseRecord>,
}

/// Runs `case` on every anchor set of size `1..=max` drawn from `pool` (sorted) and keeps
/// the smallest cover. `case` returns the cover and the number of black-box calls, or
/// a skip reason.
pub(crate) fn best_over_anchors(
    pool: &[Vertex],
    max: usize,
    mut case: impl FnMut(&[Vertex]) -> (usize, Result<Vec<Vertex>, String>),
) -> Option<DerivedOutcome> {
    let mut best: Option<(Vec<Vertex>, Vec<Vertex>)> = None;
    let mut cases = Vec::new();
    let mut path_calls = 0;
    for size in 1..=max.min(pool.len()) {
        for_each_combination(pool.len(), size, |idx| {
            let anchors: Vec<Vertex> = idx.iter().map(|&i| pool[i]).collect();
            let (calls, result) = case(&anchors);
            path_calls += calls;
            match result {
                Ok(mut cover) => {
                    cover.sort_unstable();
                    cover.dedup();
                    cases.push(CaseRecord {
                        anchors: anchors.clone(),
                        size: Some(cover.len()),
                        skipped: None,
                    });
                    if best.as_ref().is_none_or(|(b, _)| cover.len() < b.len()) {
                        best = Some((cover, anchors));
                    }
                }
                Err(reason) => cases.push(CaseRecord {
                    anchors,
                    size: None,
                    skipped: Some(reason),
                }),
            }
            false
        });
    }
    best.map(|(cover, anchors)| DerivedOutcome {
        cover,
        anchors,
        path_calls,
        cases,
    })
}

/// Builds a split graph for a derived instance, reporting why it is unusable when some
/// independent vertex is left without neighbors.
pub(crate) fn build_sub(
    m: usize,
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    label: impl Fn(Vertex) -> String,
) -> Result<SplitGraph, String> {
    let g = SplitGraph::build_unchecked(m, n, edges, crate::graph::CliqueEdges::Implicit)
        .map_err(|e| e.to_string())?;
    if let Some(x) = g.independent().find(|&x| g.clique_neighbors(x).is_empty()) {
        return Err(format!("{} cannot be covered", label(x)));
    }
    Ok(g)
}

/// Independent vertex of minimum degree, ties to the smallest id.
pub fn min_degree_independent(g: &SplitGraph) -> Option<Vertex> {
    g.independent()
        .min_by_key(|&x| (g.clique_neighbors(x).len(), x))
}

/// `|N(z) ∩ S|`.
pub fn anchor_count(g: &SplitGraph, z: Vertex, s: &[Vertex]) -> usize {
    g.clique_neighbors(z)
        .iter()
        .filter(|u| s.contains(u))
        .count()
}

/// Whether `1 <= |N(z) ∩ S| <= bound` for every minimum cover `S`; covers come from
/// [`crate::oracle::oracle_all_min_covers`].
pub fn anchor_bound_holds(g: &SplitGraph, z: Vertex, bound: usize, covers: &[Vec<Vertex>]) -> bool {
    covers
        .iter()
        .all(|s| (1..=bound).contains(&anchor_count(g, z, s)))
}
