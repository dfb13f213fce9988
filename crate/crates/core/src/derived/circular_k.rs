use super::{
    best_over_anchors, build_sub, min_degree_independent, DerivedOutcome, Origin, SubInstance,
};
use crate::convexity::{ConvexStructure, Kind, Layout};
use crate::error::{Error, Result};
use crate::graph::{Side, SplitGraph, Vertex};
use crate::instance::{Method, ProblemInstance, SteinerSolution};
use crate::tree_k::tree_k_colouring;

pub fn solve_circular_convex_k(instance: &ProblemInstance) -> Result<SteinerSolution> {
    let s = instance.require(Kind::Cycle, Side::Clique)?;
    if instance.graph.n_independent() <= 1 {
        return Ok(SteinerSolution::new(Vec::new(), Method::CircularK));
    }
    Ok(SteinerSolution::new(
        circular_k_cover(&instance.graph, s)?.cover,
        Method::CircularK,
    ))
}

/// Residual instance once anchors `A ⊆ N(z)` are fixed, `z` the minimum-degree
/// independent vertex: the clique shrinks to the arc `K \ N(z)`, listed as a path
/// starting right after `N(z)`, and the independent side to `I \ N(A)`.
/// Returns `None` when the anchors already cover everything.
pub fn circular_k_case(
    g: &SplitGraph,
    structure: &ConvexStructure,
    anchors: &[Vertex],
) -> Result<Option<SubInstance>, String> {
    let Layout::Cycle(order) = &structure.layout else {
        return Err(format!("expected a cycle, found {}", structure.kind()));
    };
    let z = min_degree_independent(g).ok_or("no independent vertex")?;
    let near_z = g.clique_neighbors(z);
    let inside = |u: &Vertex| near_z.binary_search(u).is_ok();
    let rest: Vec<Vertex> = g
        .independent()
        .filter(|&x| !anchors.iter().any(|&a| g.is_adjacent(a, x)))
        .collect();
    if rest.is_empty() {
        return Ok(None);
    }
    let len = order.len();
    let start = (0..len)
        .find(|&p| !inside(&order[p]) && inside(&order[(p + len - 1) % len]))
        .unwrap_or(0);
    let arc: Vec<Vertex> = (0..len)
        .map(|i| order[(start + i) % len])
        .filter(|u| !inside(u))
        .collect();
    let m = arc.len();
    let mut edges = Vec::new();
    for (i, &u) in arc.iter().enumerate() {
        for (j, &x) in rest.iter().enumerate() {
            if g.is_adjacent(u, x) {
                edges.push((i, m + j));
            }
        }
    }
    let sub = build_sub(m, rest.len(), edges, |v| g.label(rest[v - m]))?;
    let origin = arc
        .iter()
        .chain(&rest)
        .map(|&v| Origin::Original(v))
        .collect();
    let structure = ConvexStructure::new(Side::Clique, Layout::Path((0..m).collect()));
    Ok(Some(SubInstance {
        graph: sub,
        structure,
        origin,
    }))
}

/// Minimum cover of `I` for a circular-convex-on-`K` graph.
pub fn circular_k_cover(g: &SplitGraph, structure: &ConvexStructure) -> Result<DerivedOutcome> {
    if structure.kind() != Kind::Cycle || structure.side != Side::Clique {
        return Err(Error::StructureMismatch {
            expected: "cycle on K".into(),
            found: format!("{} on {}", structure.kind(), structure.side),
        });
    }
    let z = min_degree_independent(g).ok_or(Error::Infeasible("empty independent set".into()))?;
    let pool = g.clique_neighbors(z).to_vec();
    if pool.is_empty() {
        return Err(Error::EmptyNeighborhood(z));
    }
    best_over_anchors(&pool, 2, |anchors| {
        let sub = match circular_k_case(g, structure, anchors) {
            Ok(Some(sub)) => sub,
            Ok(None) => return (0, Ok(anchors.to_vec())),
            Err(reason) => return (0, Err(reason)),
        };
        let tree = sub
            .structure
            .as_rooted_tree(&sub.graph)
            .expect("nonempty path");
        match tree_k_colouring(&sub.graph, &tree) {
            Ok(trace) => {
                let mut cover = anchors.to_vec();
                cover.extend(sub.lift(&trace.picks));
                (1, Ok(cover))
            }
            Err(e) => (1, Err(e.to_string())),
        }
    })
    .ok_or_else(|| Error::Infeasible("every anchor case was skipped".into()))
}
