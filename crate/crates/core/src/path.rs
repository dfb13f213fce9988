//! Greedy interval covering for split graphs that are path-convex on `I`.

use crate::convexity::{ConvexStructure, Kind, Layout};
use crate::error::{Error, Result};
use crate::graph::{Side, SplitGraph, Vertex};
use crate::instance::{Method, ProblemInstance, SteinerSolution};

/// Minimum Steiner set for `R = I` on a path-convex-on-`I` instance.
///
/// With at most one independent vertex the empty set already induces a connected
/// graph; otherwise the answer is the greedy interval cover.
pub fn solve_path_convex_i(instance: &ProblemInstance) -> Result<SteinerSolution> {
    let s = instance.require(Kind::Path, Side::Independent)?;
    let g = &instance.graph;
    if g.n_independent() <= 1 {
        return Ok(SteinerSolution::new(Vec::new(), Method::Path));
    }
    let order = s.order().expect("path layout");
    Ok(SteinerSolution::new(
        greedy_interval_cover(g, order)?,
        Method::Path,
    ))
}

/// Right endpoint position `r(u)` of every clique vertex, `None` when `N^I(u)` is empty.
pub(crate) fn right_endpoints(g: &SplitGraph, pos: &[usize]) -> Vec<Option<usize>> {
    g.clique()
        .map(|u| {
            g.independent_neighbors(u)
                .iter()
                .map(|&x| pos[x - g.n_clique()])
                .max()
        })
        .collect()
}

fn positions(g: &SplitGraph, order: &[Vertex]) -> Vec<usize> {
    let mut pos = vec![0; g.n_independent()];
    for (i, &x) in order.iter().enumerate() {
        pos[x - g.n_clique()] = i;
    }
    pos
}

/// The neighbor of `x` reaching furthest right; ties go to the smaller id.
pub fn alpha(g: &SplitGraph, structure: &ConvexStructure, x: Vertex) -> Result<Vertex> {
    let Layout::Path(order) = &structure.layout else {
        return Err(Error::StructureMismatch {
            expected: "path on I".into(),
            found: format!("{} on {}", structure.kind(), structure.side),
        });
    };
    let pos = positions(g, order);
    let r = right_endpoints(g, &pos);
    alpha_with(g, &r, x)
}

fn alpha_with(g: &SplitGraph, r: &[Option<usize>], x: Vertex) -> Result<Vertex> {
    g.clique_neighbors(x)
        .iter()
        .copied()
        .max_by(|&a, &b| r[a].cmp(&r[b]).then(b.cmp(&a)))
        .ok_or(Error::EmptyNeighborhood(x))
}

/// Smallest set of clique vertices covering every independent vertex, assuming each
/// `N^I(u)` is an interval of `order`. Returned in pick order.
pub fn greedy_interval_cover(g: &SplitGraph, order: &[Vertex]) -> Result<Vec<Vertex>> {
    let pos = positions(g, order);
    let r = right_endpoints(g, &pos);
    let mut marked = vec![false; order.len()];
    let mut chosen = Vec::new();
    let mut next = 0;
    loop {
        while next < order.len() && marked[next] {
            next += 1;
        }
        if next == order.len() {
            return Ok(chosen);
        }
        let u = alpha_with(g, &r, order[next])?;
        for &x in g.independent_neighbors(u) {
            marked[pos[x - g.n_clique()]] = true;
        }
        chosen.push(u);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::oracle_min_cover;
    use proptest::prelude::*;

    fn path_instance(m: usize, n: usize, edges: &[(usize, usize)]) -> ProblemInstance {
        let g = SplitGraph::new(m, n, edges.iter().copied()).unwrap();
        let order = g.independent().collect();
        ProblemInstance::steiner_on_independent(
            g,
            Some(ConvexStructure::new(Side::Independent, Layout::Path(order))),
        )
    }

    #[test]
    fn p1_needs_w1_and_w2() {
        let inst = fixtures::p1();
        let sol = solve_path_convex_i(&inst).unwrap();
        assert_eq!(sol.steiner_set, vec![0, 1]);
        assert!(sol.is_valid_for(&inst));
    }

    #[test]
    fn single_independent_vertex() {
        let inst = path_instance(1, 1, &[(0, 1)]);
        // one terminal is already connected on its own
        assert!(solve_path_convex_i(&inst).unwrap().steiner_set.is_empty());
        // as a covering problem the lone vertex still needs its neighbor
        assert_eq!(greedy_interval_cover(&inst.graph, &[1]).unwrap(), vec![0]);
    }

    #[test]
    fn universal_clique_vertex() {
        let inst = path_instance(2, 4, &[(0, 2), (1, 2), (1, 3), (1, 4), (1, 5)]);
        assert_eq!(solve_path_convex_i(&inst).unwrap().steiner_set, vec![1]);
    }

    #[test]
    fn alpha_on_p1() {
        let inst = fixtures::p1();
        let s = inst.structure.as_ref().unwrap();
        assert_eq!(alpha(&inst.graph, s, 3).unwrap(), 0);
        assert_eq!(alpha(&inst.graph, s, 5).unwrap(), 1);
    }

    #[test]
    fn alpha_ties_prefer_smaller_id() {
        let inst = path_instance(2, 2, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        let s = inst.structure.as_ref().unwrap();
        assert_eq!(alpha(&inst.graph, s, 2).unwrap(), 0);
    }

    #[test]
    fn rejects_wrong_structure_and_terminals() {
        let mut inst = fixtures::p1();
        inst.terminals.remove(&3);
        assert_eq!(solve_path_convex_i(&inst), Err(Error::TerminalsNotI));
        let x3c_example = fixtures::x3c_example();
        assert!(matches!(
            solve_path_convex_i(&x3c_example),
            Err(Error::StructureMismatch { .. })
        ));
        let bad = path_instance(2, 3, &[(0, 2), (0, 4), (1, 3)]);
        assert!(matches!(
            solve_path_convex_i(&bad),
            Err(Error::NotConvex { .. })
        ));
    }

    fn interval_graph(m: usize, n: usize, spans: &[(usize, usize)]) -> Option<SplitGraph> {
        let edges = spans.iter().take(m).enumerate().flat_map(|(u, &(a, len))| {
            let a = a % n;
            let b = (a + len).min(n - 1);
            (a..=b).map(move |x| (u, m + x))
        });
        SplitGraph::new(m, n, edges).ok()
    }

    proptest! {
        #[test]
        fn greedy_matches_oracle(
            m in 1usize..7, n in 1usize..8,
            spans in proptest::collection::vec((0usize..8, 0usize..4), 7),
        ) {
            let Some(g) = interval_graph(m, n, &spans) else { return Ok(()) };
            let order: Vec<_> = g.independent().collect();
            let greedy = greedy_interval_cover(&g, &order).unwrap();
            prop_assert_eq!(greedy.len(), oracle_min_cover(&g).unwrap().len());
            prop_assert!(g.dominates_independent(&greedy));
        }

        #[test]
        fn greedy_is_deterministic(
            m in 1usize..7, n in 1usize..8,
            spans in proptest::collection::vec((0usize..8, 0usize..4), 7),
        ) {
            let Some(g) = interval_graph(m, n, &spans) else { return Ok(()) };
            let order: Vec<_> = g.independent().collect();
            prop_assert_eq!(greedy_interval_cover(&g, &order), greedy_interval_cover(&g, &order));
        }
    }
}
