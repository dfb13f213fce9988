//! Leaf colouring for split graphs that are tree-convex on `K`.
//!
//! Leaves of the imaginary tree are removed deepest first. A leaf with a pendant
//! independent neighbor in the shrinking graph is coloured black and joins the
//! solution; otherwise it is coloured white and simply deleted. The last remaining
//! vertex, the root, is added if anything is still uncovered.

use crate::convexity::{Kind, RootedTree};
use crate::error::{Error, Result};
use crate::graph::{Side, SplitGraph, Vertex};
use crate::instance::{Method, ProblemInstance, SteinerSolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Colour {
    Gray,
    White,
    Black,
}

/// Final colouring plus the cover it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouringTrace {
    /// Indexed by clique vertex.
    pub colour: Vec<Colour>,
    /// Black vertices in the order they were coloured; the root comes last if used.
    pub picks: Vec<Vertex>,
}

pub fn solve_tree_convex_k(instance: &ProblemInstance) -> Result<SteinerSolution> {
    let s = match instance.structure.as_ref().map(|s| s.kind()) {
        Some(kind) if kind.is_tree_like() => instance.require(kind, Side::Clique)?,
        _ => instance.require(Kind::Tree, Side::Clique)?,
    };
    let g = &instance.graph;
    if g.n_independent() <= 1 {
        return Ok(SteinerSolution::new(Vec::new(), Method::TreeK));
    }
    let tree = s
        .as_rooted_tree(g)
        .ok_or(Error::Infeasible("empty clique".into()))?;
    Ok(SteinerSolution::new(
        tree_k_colouring(g, &tree)?.picks,
        Method::TreeK,
    ))
}

/// Minimum clique subset covering `I` when every `N^K(x)` is a subtree of `tree`.
pub fn tree_k_colouring(g: &SplitGraph, tree: &RootedTree) -> Result<ColouringTrace> {
    let m = g.n_clique();
    let mut degree: Vec<usize> = g
        .independent()
        .map(|x| g.clique_neighbors(x).len())
        .collect();
    if let Some(i) = degree.iter().position(|&d| d == 0) {
        return Err(Error::EmptyNeighborhood(m + i));
    }
    let mut covered = vec![false; g.n_independent()];
    let mut colour = vec![Colour::Gray; m];
    let mut picks = Vec::new();
    let mut leaves: Vec<Vertex> = tree.vertices().filter(|&u| u != tree.root).collect();
    leaves.sort_by_key(|&u| (std::cmp::Reverse(tree.depth(u)), u));
    for u in leaves {
        let live = || {
            g.independent_neighbors(u)
                .iter()
                .map(|&x| x - m)
                .filter(|&i| !covered[i])
        };
        if live().any(|i| degree[i] == 1) {
            colour[u] = Colour::Black;
            picks.push(u);
            let hit: Vec<usize> = live().collect();
            hit.into_iter().for_each(|i| covered[i] = true);
        } else {
            colour[u] = Colour::White;
            let hit: Vec<usize> = live().collect();
            hit.into_iter().for_each(|i| degree[i] -= 1);
        }
    }
    if covered.iter().any(|c| !c) {
        colour[tree.root] = Colour::Black;
        picks.push(tree.root);
    } else {
        colour[tree.root] = Colour::White;
    }
    Ok(ColouringTrace { colour, picks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::{ConvexStructure, Layout};
    use crate::oracle::oracle_min_cover;

    fn on_k(m: usize, n: usize, edges: &[(usize, usize)], layout: Layout) -> ProblemInstance {
        let g = SplitGraph::new(m, n, edges.iter().copied()).unwrap();
        ProblemInstance::steiner_on_independent(g, Some(ConvexStructure::new(Side::Clique, layout)))
    }

    #[test]
    fn two_vertex_tree_with_pendant() {
        // w1 - w2, x1 adjacent to w2 only
        let inst = on_k(2, 1, &[(1, 2)], Layout::Path(vec![0, 1]));
        let tree = inst
            .structure
            .as_ref()
            .unwrap()
            .as_rooted_tree(&inst.graph)
            .unwrap();
        assert_eq!(tree_k_colouring(&inst.graph, &tree).unwrap().picks, vec![1]);
        assert!(solve_tree_convex_k(&inst).unwrap().steiner_set.is_empty());
    }

    #[test]
    fn single_vertex_clique_absorbs_everything() {
        let inst = on_k(
            1,
            3,
            &[(0, 1), (0, 2), (0, 3)],
            Layout::Tree { parent: vec![None] },
        );
        assert_eq!(solve_tree_convex_k(&inst).unwrap().steiner_set, vec![0]);
    }

    #[test]
    fn path_of_three() {
        // x1-w1, x2-w3, x3-{w1,w2,w3}
        let edges = [(0, 3), (2, 4), (0, 5), (1, 5), (2, 5)];
        let inst = on_k(3, 3, &edges, Layout::Path(vec![0, 1, 2]));
        let sol = solve_tree_convex_k(&inst).unwrap();
        assert_eq!(sol.steiner_set, vec![0, 2]);
        assert_eq!(sol.size(), oracle_min_cover(&inst.graph).unwrap().len());
    }

    #[test]
    fn colours_are_final() {
        let edges = [(0, 3), (2, 4), (0, 5), (1, 5), (2, 5)];
        let inst = on_k(3, 3, &edges, Layout::Path(vec![0, 1, 2]));
        let tree = inst
            .structure
            .as_ref()
            .unwrap()
            .as_rooted_tree(&inst.graph)
            .unwrap();
        let trace = tree_k_colouring(&inst.graph, &tree).unwrap();
        assert!(trace.colour.iter().all(|&c| c != Colour::Gray));
        assert_eq!(trace.colour[1], Colour::White);
    }

    #[test]
    fn accepts_star_layout_on_clique() {
        let edges = [(1, 4), (0, 4), (2, 5), (0, 5), (3, 6)];
        let inst = on_k(
            4,
            3,
            &[edges.as_slice(), &[(0, 6)]].concat(),
            Layout::Star { root: 0 },
        );
        let sol = solve_tree_convex_k(&inst).unwrap();
        assert_eq!(sol.steiner_set, vec![0]);
    }

    #[test]
    fn rejects_structure_on_wrong_side() {
        let inst = crate::fixtures::p1();
        assert!(matches!(
            solve_tree_convex_k(&inst),
            Err(Error::StructureMismatch { .. })
        ));
    }
}
