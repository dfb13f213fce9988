use super::{best_over_anchors, build_sub, DerivedOutcome, Origin, SubInstance};
use crate::convexity::{ConvexStructure, Kind, Layout};
use crate::error::{Error, Result};
use crate::graph::{Side, SplitGraph, Vertex};
use crate::instance::{Method, ProblemInstance, SteinerSolution};
use crate::path::greedy_interval_cover;

pub fn solve_triad_convex_i(instance: &ProblemInstance) -> Result<SteinerSolution> {
    let s = instance.require(Kind::Triad, Side::Independent)?;
    if instance.graph.n_independent() <= 1 {
        return Ok(SteinerSolution::new(Vec::new(), Method::Triad));
    }
    Ok(SteinerSolution::new(
        triad_cover(&instance.graph, s)?.cover,
        Method::Triad,
    ))
}

/// Per-leg path instances once `anchors` (a subset of `N(z)`) is fixed. A leg that the
/// anchors cover completely yields `None`.
pub fn triad_case(
    g: &SplitGraph,
    structure: &ConvexStructure,
    anchors: &[Vertex],
) -> Result<[Option<SubInstance>; 3], String> {
    let Layout::Triad { root, legs } = &structure.layout else {
        return Err(format!("expected a triad, found {}", structure.kind()));
    };
    let near_root = g.clique_neighbors(*root);
    let mut covered = vec![false; g.order()];
    for &a in anchors {
        for &x in g.independent_neighbors(a) {
            covered[x] = true;
        }
    }
    let mut out: [Option<SubInstance>; 3] = [None, None, None];
    for (leg_idx, leg) in legs.iter().enumerate() {
        let rest: Vec<Vertex> = leg.iter().copied().filter(|&x| !covered[x]).collect();
        if rest.is_empty() {
            continue;
        }
        let clique: Vec<Vertex> = g
            .clique()
            .filter(|u| near_root.binary_search(u).is_err())
            .filter(|&u| {
                g.independent_neighbors(u)
                    .iter()
                    .any(|&x| rest.contains(&x))
            })
            .collect();
        let m = clique.len();
        let mut edges = Vec::new();
        for (i, &u) in clique.iter().enumerate() {
            for (j, &x) in rest.iter().enumerate() {
                if g.is_adjacent(u, x) {
                    edges.push((i, m + j));
                }
            }
        }
        let sub = build_sub(m, rest.len(), edges, |v| g.label(rest[v - m]))
            .map_err(|e| format!("leg {}: {e}", leg_idx + 1))?;
        let origin = clique
            .iter()
            .chain(&rest)
            .map(|&v| Origin::Original(v))
            .collect();
        let order = (m..m + rest.len()).collect();
        let structure = ConvexStructure::new(Side::Independent, Layout::Path(order));
        out[leg_idx] = Some(SubInstance {
            graph: sub,
            structure,
            origin,
        });
    }
    Ok(out)
}

/// Minimum cover of `I` for a triad-convex-on-`I` graph.
pub fn triad_cover(g: &SplitGraph, structure: &ConvexStructure) -> Result<DerivedOutcome> {
    let Layout::Triad { root, .. } = &structure.layout else {
        return Err(Error::StructureMismatch {
            expected: "triad on I".into(),
            found: format!("{} on {}", structure.kind(), structure.side),
        });
    };
    let pool = g.clique_neighbors(*root).to_vec();
    if pool.is_empty() {
        return Err(Error::EmptyNeighborhood(*root));
    }
    best_over_anchors(&pool, 3, |anchors| {
        let subs = match triad_case(g, structure, anchors) {
            Ok(subs) => subs,
            Err(reason) => return (0, Err(reason)),
        };
        let mut cover = anchors.to_vec();
        let mut calls = 0;
        for sub in subs.iter().flatten() {
            calls += 1;
            let order = sub.structure.order().expect("path layout");
            match greedy_interval_cover(&sub.graph, order) {
                Ok(picks) => cover.extend(sub.lift(&picks)),
                Err(e) => return (calls, Err(e.to_string())),
            }
        }
        (calls, Ok(cover))
    })
    .ok_or_else(|| Error::Infeasible("every anchor case was skipped".into()))
}
