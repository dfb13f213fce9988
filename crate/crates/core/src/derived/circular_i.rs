use super::{
    best_over_anchors, build_sub, min_degree_independent, Aux, DerivedOutcome, Origin, SubInstance,
};
use crate::convexity::{ConvexStructure, Kind, Layout};
use crate::error::{Error, Result};
use crate::graph::{Side, SplitGraph, Vertex};
use crate::instance::{Method, ProblemInstance, SteinerSolution};
use crate::path::greedy_interval_cover;

pub fn solve_circular_convex_i(instance: &ProblemInstance) -> Result<SteinerSolution> {
    let s = instance.require(Kind::Cycle, Side::Independent)?;
    if instance.graph.n_independent() <= 1 {
        return Ok(SteinerSolution::new(Vec::new(), Method::CircularI));
    }
    Ok(SteinerSolution::new(
        circular_i_cover(&instance.graph, s)?.cover,
        Method::CircularI,
    ))
}

/// Cuts the cycle open at the minimum-degree independent vertex `x` and builds the path
/// instance for one anchor set `A ⊆ N(x)` with `|A| ∈ {1, 2}`.
///
/// The independent side becomes `β2, x+1, ..., x-1, β1`. The part of the cut order
/// covered by `A` is a leading run `P` and a trailing run `Q`. With one anchor, fresh
/// clique vertices `α2 ~ {β2} ∪ P` and `α1 ~ Q ∪ {β1}` stand in for it; with two anchors,
/// the anchors themselves are wired that way. Every other clique vertex outside `N(x)`
/// keeps its edges.
pub fn circular_i_case(
    g: &SplitGraph,
    structure: &ConvexStructure,
    anchors: &[Vertex],
) -> Result<SubInstance, String> {
    let Layout::Cycle(order) = &structure.layout else {
        return Err(format!("expected a cycle, found {}", structure.kind()));
    };
    if !(1..=2).contains(&anchors.len()) {
        return Err(format!("{} anchors; expected 1 or 2", anchors.len()));
    }
    let x = min_degree_independent(g).ok_or("no independent vertex")?;
    let p = order.iter().position(|&v| v == x).expect("cycle covers I");
    let cut: Vec<Vertex> = order[p + 1..].iter().chain(&order[..p]).copied().collect();
    let covered = |v: Vertex| anchors.iter().any(|&a| g.is_adjacent(a, v));
    let lead = cut.iter().take_while(|&&v| covered(v)).count();
    let trail = cut[lead..]
        .iter()
        .rev()
        .take_while(|&&v| covered(v))
        .count();
    debug_assert!(
        cut[lead..cut.len() - trail].iter().all(|&v| !covered(v)),
        "anchor coverage must be an arc through the cut vertex"
    );

    let near_x = g.clique_neighbors(x);
    let mut clique: Vec<Origin> = g
        .clique()
        .filter(|u| near_x.binary_search(u).is_err())
        .map(Origin::Original)
        .collect();
    let (first, second) = if anchors.len() == 1 {
        (
            Origin::Auxiliary(Aux::Alpha2),
            Origin::Auxiliary(Aux::Alpha1),
        )
    } else {
        (Origin::Original(anchors[0]), Origin::Original(anchors[1]))
    };
    clique.push(first);
    clique.push(second);
    let m = clique.len();
    let n = cut.len() + 2;
    // independent ids: m is β2, m + 1 + i is cut[i], m + n - 1 is β1
    let mut edges = Vec::new();
    for (i, origin) in clique[..m - 2].iter().enumerate() {
        let Origin::Original(u) = *origin else {
            unreachable!()
        };
        for &y in g.independent_neighbors(u) {
            let j = cut
                .iter()
                .position(|&c| c == y)
                .expect("neighbor lies on the cut order");
            edges.push((i, m + 1 + j));
        }
    }
    edges.push((m - 2, m));
    edges.extend((0..lead).map(|j| (m - 2, m + 1 + j)));
    edges.extend((cut.len() - trail..cut.len()).map(|j| (m - 1, m + 1 + j)));
    edges.push((m - 1, m + n - 1));

    let label = |v: Vertex| match v - m {
        0 => "β2".to_string(),
        j if j == n - 1 => "β1".to_string(),
        j => g.label(cut[j - 1]),
    };
    let sub = build_sub(m, n, edges, label)?;
    let mut origin = clique;
    origin.push(Origin::Auxiliary(Aux::Beta2));
    origin.extend(cut.iter().map(|&v| Origin::Original(v)));
    origin.push(Origin::Auxiliary(Aux::Beta1));
    let structure = ConvexStructure::new(Side::Independent, Layout::Path((m..m + n).collect()));
    Ok(SubInstance {
        graph: sub,
        structure,
        origin,
    })
}

/// Minimum cover of `I` for a circular-convex-on-`I` graph.
pub fn circular_i_cover(g: &SplitGraph, structure: &ConvexStructure) -> Result<DerivedOutcome> {
    if structure.kind() != Kind::Cycle || structure.side != Side::Independent {
        return Err(Error::StructureMismatch {
            expected: "cycle on I".into(),
            found: format!("{} on {}", structure.kind(), structure.side),
        });
    }
    let x = min_degree_independent(g).ok_or(Error::Infeasible("empty independent set".into()))?;
    let pool = g.clique_neighbors(x).to_vec();
    if pool.is_empty() {
        return Err(Error::EmptyNeighborhood(x));
    }
    best_over_anchors(&pool, 2, |anchors| {
        let sub = match circular_i_case(g, structure, anchors) {
            Ok(sub) => sub,
            Err(reason) => return (0, Err(reason)),
        };
        let order = sub.structure.order().expect("path layout");
        match greedy_interval_cover(&sub.graph, order) {
            Ok(picks) => {
                let mut cover = anchors.to_vec();
                cover.extend(sub.lift(&picks));
                cover.sort_unstable();
                cover.dedup();
                // one anchor: two auxiliaries stand for it; two anchors: they are in picks
                debug_assert_eq!(cover.len() + 2 - anchors.len(), picks.len());
                (1, Ok(cover))
            }
            Err(e) => (1, Err(e.to_string())),
        }
    })
    .ok_or_else(|| Error::Infeasible("every anchor case was skipped".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::verify_convexity;
    use crate::oracle::oracle_min_cover;

    fn cycle(m: usize, n: usize, edges: &[(usize, usize)]) -> ProblemInstance {
        let g = SplitGraph::new(m, n, edges.iter().map(|&(u, x)| (u, m + x - 1))).unwrap();
        let order = g.independent().collect();
        let inst = ProblemInstance::steiner_on_independent(
            g,
            Some(ConvexStructure::new(
                Side::Independent,
                Layout::Cycle(order),
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
    fn full_circle_vertex() {
        let inst = cycle(2, 4, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]);
        assert_eq!(solve_circular_convex_i(&inst).unwrap().steiner_set, vec![0]);
    }

    #[test]
    fn optimum_needs_two_anchors() {
        // w1 ~ {x5, x6, x1}, w2 ~ {x1, x2, x3}, w3 ~ {x3, x4, x5, x6}
        let edges = [
            (0, 5),
            (0, 6),
            (0, 1),
            (1, 1),
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
        ];
        let inst = cycle(3, 6, &edges);
        let out = circular_i_cover(&inst.graph, inst.structure.as_ref().unwrap()).unwrap();
        assert_eq!(
            out.cover.len(),
            oracle_min_cover(&inst.graph).unwrap().len()
        );
        // w3 covers the far side; x1 needs either w1 or w2
        assert_eq!(out.cover.len(), 2);
        // every vertex has degree 2; only the two anchors at x1 reach far
        let edges = [
            (0, 5),
            (0, 6),
            (0, 1),
            (1, 1),
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 4),
            (4, 2),
            (5, 3),
            (6, 5),
            (7, 6),
        ];
        let inst = cycle(8, 6, &edges);
        let out = circular_i_cover(&inst.graph, inst.structure.as_ref().unwrap()).unwrap();
        assert_eq!(out.anchors, vec![0, 1]);
        assert_eq!(out.cover, vec![0, 1, 2]);
        assert_eq!(
            out.cover.len(),
            oracle_min_cover(&inst.graph).unwrap().len()
        );
    }

    #[test]
    fn cut_instances_are_path_convex() {
        let edges = [
            (0, 5),
            (0, 6),
            (0, 1),
            (1, 1),
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 4),
            (4, 2),
            (5, 3),
            (6, 5),
            (7, 6),
        ];
        let inst = cycle(8, 6, &edges);
        let s = inst.structure.as_ref().unwrap();
        assert_eq!(min_degree_independent(&inst.graph), Some(8));
        for anchors in [vec![0], vec![1], vec![0, 1]] {
            let sub = circular_i_case(&inst.graph, s, &anchors).unwrap();
            assert!(verify_convexity(&sub.graph, &sub.structure).unwrap().valid);
            assert_eq!(
                sub.origin[sub.graph.n_clique()],
                Origin::Auxiliary(Aux::Beta2)
            );
        }
    }

    #[test]
    fn single_independent_vertex_cover() {
        let g = SplitGraph::new(1, 1, [(0, 1)]).unwrap();
        let s = ConvexStructure::new(Side::Independent, Layout::Cycle(vec![1]));
        assert_eq!(circular_i_cover(&g, &s).unwrap().cover, vec![0]);
    }
}
