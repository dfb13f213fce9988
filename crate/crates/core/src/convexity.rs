//! Imaginary structures on one side of a split graph and convexity checks.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Side, SplitGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Path,
    Cycle,
    Star,
    Comb,
    Triad,
    Tree,
    Chordal,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Path,
        Kind::Cycle,
        Kind::Star,
        Kind::Comb,
        Kind::Triad,
        Kind::Tree,
        Kind::Chordal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Path => "path",
            Kind::Cycle => "cycle",
            Kind::Star => "star",
            Kind::Comb => "comb",
            Kind::Triad => "triad",
            Kind::Tree => "tree",
            Kind::Chordal => "chordal",
        }
    }

    /// Kinds whose imaginary graph is a tree.
    pub fn is_tree_like(self) -> bool {
        !matches!(self, Kind::Cycle | Kind::Chordal)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::MalformedLayout(format!("unknown structure kind `{s}`")))
    }
}

/// Kind-specific layout data. All vertices are global ids of the declared side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Layout {
    Path(Vec<Vertex>),
    Cycle(Vec<Vertex>),
    /// Every other vertex of the side is a leaf of `root`.
    Star {
        root: Vertex,
    },
    /// `teeth[i]` hangs off `backbone[i]`.
    Comb {
        backbone: Vec<Vertex>,
        teeth: Vec<Vertex>,
    },
    /// Each leg is listed starting next to the root.
    Triad {
        root: Vertex,
        legs: [Vec<Vertex>; 3],
    },
    /// `parent[i]` is the parent of the `i`-th vertex of the side; exactly one root.
    Tree {
        parent: Vec<Option<Vertex>>,
    },
    Chordal {
        edges: Vec<(Vertex, Vertex)>,
    },
}

impl Layout {
    pub fn kind(&self) -> Kind {
        match self {
            Layout::Path(_) => Kind::Path,
            Layout::Cycle(_) => Kind::Cycle,
            Layout::Star { .. } => Kind::Star,
            Layout::Comb { .. } => Kind::Comb,
            Layout::Triad { .. } => Kind::Triad,
            Layout::Tree { .. } => Kind::Tree,
            Layout::Chordal { .. } => Kind::Chordal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexStructure {
    pub side: Side,
    pub layout: Layout,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<(Vertex, String)>,
}

/// A rooted spanning tree of the imaginary structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    pub root: Vertex,
    offset: usize,
    parent: Vec<Option<Vertex>>,
    depth: Vec<usize>,
}

impl RootedTree {
    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v - self.offset]
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v - self.offset]
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        self.offset..self.offset + self.parent.len()
    }
}

impl ConvexStructure {
    pub fn new(side: Side, layout: Layout) -> Self {
        ConvexStructure { side, layout }
    }

    pub fn kind(&self) -> Kind {
        self.layout.kind()
    }

    /// Checks that the layout lists exactly the vertices of its side and is
    /// internally consistent (trees are trees, chordal graphs are chordal).
    pub fn validate(&self, g: &SplitGraph) -> Result<()> {
        let range = g.side_vertices(self.side);
        let size = range.len();
        let mismatch = |detail: String| Error::LayoutMismatch {
            side: self.side,
            detail,
        };
        let mut seen = vec![false; size];
        let mut mark = |v: Vertex| -> Result<()> {
            if !range.contains(&v) {
                return Err(mismatch(format!("vertex {v} is not on side {}", self.side)));
            }
            if std::mem::replace(&mut seen[v - range.start], true) {
                return Err(mismatch(format!("vertex {v} listed twice")));
            }
            Ok(())
        };
        match &self.layout {
            Layout::Path(order) | Layout::Cycle(order) => {
                order.iter().try_for_each(|&v| mark(v))?
            }
            Layout::Star { root } => {
                mark(*root)?;
                seen.iter_mut().for_each(|s| *s = true);
            }
            Layout::Comb { backbone, teeth } => {
                if backbone.is_empty() {
                    return Err(Error::MalformedLayout(
                        "comb needs a backbone vertex".into(),
                    ));
                }
                if backbone.len() != teeth.len() {
                    return Err(Error::MalformedLayout(format!(
                        "comb has {} backbone vertices but {} teeth",
                        backbone.len(),
                        teeth.len()
                    )));
                }
                backbone.iter().chain(teeth).try_for_each(|&v| mark(v))?;
            }
            Layout::Triad { root, legs } => {
                if let Some(short) = legs.iter().position(|leg| leg.len() < 2) {
                    return Err(Error::MalformedLayout(format!(
                        "triad leg {} has {} vertices; legs need at least 2",
                        short + 1,
                        legs[short].len()
                    )));
                }
                mark(*root)?;
                legs.iter().flatten().try_for_each(|&v| mark(v))?;
            }
            Layout::Tree { parent } => {
                if parent.len() != size {
                    return Err(mismatch(format!(
                        "tree lists {} parents for {size} vertices",
                        parent.len()
                    )));
                }
                seen.iter_mut().for_each(|s| *s = true);
                for p in parent.iter().flatten() {
                    if !range.contains(p) {
                        return Err(mismatch(format!("parent {p} is not on side {}", self.side)));
                    }
                }
                if parent.iter().filter(|p| p.is_none()).count() != 1 {
                    return Err(Error::MalformedLayout("tree needs exactly one root".into()));
                }
            }
            Layout::Chordal { edges } => {
                seen.iter_mut().for_each(|s| *s = true);
                for &(u, v) in edges {
                    if !range.contains(&u) || !range.contains(&v) || u == v {
                        return Err(mismatch(format!("bad imaginary edge ({u}, {v})")));
                    }
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(mismatch(format!(
                "vertex {} is not listed",
                range.start + missing
            )));
        }
        let adj = self.imaginary_adjacency(g);
        if self.kind().is_tree_like() {
            let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
            let everything = vec![true; size];
            if size > 0 && (edges != size - 1 || !connected_local(&adj, &everything)) {
                return Err(Error::MalformedLayout(format!(
                    "{} layout is not a tree",
                    self.kind()
                )));
            }
        }
        if self.kind() == Kind::Chordal && !is_chordal(&adj) {
            return Err(Error::MalformedLayout(
                "imaginary graph is not chordal".into(),
            ));
        }
        Ok(())
    }

    /// Adjacency lists of the imaginary graph, indexed by position within the side.
    pub fn imaginary_adjacency(&self, g: &SplitGraph) -> Vec<Vec<usize>> {
        let offset = g.side_vertices(self.side).start;
        let size = g.side_vertices(self.side).len();
        let mut adj = vec![Vec::new(); size];
        let mut link = |a: Vertex, b: Vertex| {
            let (a, b) = (a - offset, b - offset);
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        };
        match &self.layout {
            Layout::Path(order) => order.windows(2).for_each(|w| link(w[0], w[1])),
            Layout::Cycle(order) => {
                order.windows(2).for_each(|w| link(w[0], w[1]));
                if order.len() >= 3 {
                    link(order[order.len() - 1], order[0]);
                }
            }
            Layout::Star { root } => {
                for v in g.side_vertices(self.side) {
                    if v != *root {
                        link(*root, v);
                    }
                }
            }
            Layout::Comb { backbone, teeth } => {
                backbone.windows(2).for_each(|w| link(w[0], w[1]));
                backbone.iter().zip(teeth).for_each(|(&a, &t)| link(a, t));
            }
            Layout::Triad { root, legs } => {
                for leg in legs {
                    if let Some(&first) = leg.first() {
                        link(*root, first);
                    }
                    leg.windows(2).for_each(|w| link(w[0], w[1]));
                }
            }
            Layout::Tree { parent } => {
                for (i, p) in parent.iter().enumerate() {
                    if let Some(p) = p {
                        link(offset + i, *p);
                    }
                }
            }
            Layout::Chordal { edges } => edges.iter().for_each(|&(u, v)| link(u, v)),
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Rooted form of a tree-like structure. Paths are rooted at their first vertex.
    pub fn as_rooted_tree(&self, g: &SplitGraph) -> Option<RootedTree> {
        if !self.kind().is_tree_like() {
            return None;
        }
        let range = g.side_vertices(self.side);
        if range.is_empty() {
            return None;
        }
        let root = match &self.layout {
            Layout::Path(order) => order[0],
            Layout::Star { root } | Layout::Triad { root, .. } => *root,
            Layout::Comb { backbone, .. } => backbone[0],
            Layout::Tree { parent } => range.start + parent.iter().position(Option::is_none)?,
            Layout::Cycle(_) | Layout::Chordal { .. } => unreachable!(),
        };
        let adj = self.imaginary_adjacency(g);
        let offset = range.start;
        let mut parent = vec![None; range.len()];
        let mut depth = vec![usize::MAX; range.len()];
        depth[root - offset] = 0;
        let mut queue = VecDeque::from([root - offset]);
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                if depth[b] == usize::MAX {
                    depth[b] = depth[a] + 1;
                    parent[b] = Some(offset + a);
                    queue.push_back(b);
                }
            }
        }
        Some(RootedTree {
            root,
            offset,
            parent,
            depth,
        })
    }

    /// Position of each side vertex in a path or cycle order.
    pub fn order(&self) -> Option<&[Vertex]> {
        match &self.layout {
            Layout::Path(order) | Layout::Cycle(order) => Some(order),
            _ => None,
        }
    }

    /// Restricts the structure to kept vertices, renaming through `new_id`
    /// (`None` for dropped vertices). Trees are relinked through the nearest kept
    /// ancestor, so the result may need re-verification.
    pub fn restrict(
        &self,
        g: &SplitGraph,
        new_side: Side,
        new_id: &[Option<Vertex>],
    ) -> Option<ConvexStructure> {
        let range = g.side_vertices(self.side);
        let kept: Vec<Vertex> = range.clone().filter(|&v| new_id[v].is_some()).collect();
        if kept.is_empty() {
            return None;
        }
        let map = |v: Vertex| new_id[v].expect("kept vertex");
        let map_all = |vs: &[Vertex]| -> Vec<Vertex> {
            vs.iter()
                .filter(|&&v| new_id[v].is_some())
                .map(|&v| map(v))
                .collect()
        };
        let layout = match &self.layout {
            Layout::Path(order) => Layout::Path(map_all(order)),
            Layout::Cycle(order) => Layout::Cycle(map_all(order)),
            Layout::Chordal { edges } => Layout::Chordal {
                edges: edges
                    .iter()
                    .filter(|&&(u, v)| new_id[u].is_some() && new_id[v].is_some())
                    .map(|&(u, v)| (map(u), map(v)))
                    .collect(),
            },
            Layout::Star { root } if new_id[*root].is_some() => Layout::Star { root: map(*root) },
            _ => {
                let tree = self.as_rooted_tree(g)?;
                let nearest_kept = |mut v: Vertex| -> Option<Vertex> {
                    loop {
                        v = tree.parent(v)?;
                        if new_id[v].is_some() {
                            return Some(v);
                        }
                    }
                };
                // kept vertices without a kept ancestor hang off the first such vertex, in BFS order
                let mut by_depth = kept.clone();
                by_depth.sort_by_key(|&v| (tree.depth(v), v));
                let top = by_depth[0];
                let new_start = map(kept[0]);
                let mut parent = vec![None; kept.len()];
                for &v in &kept {
                    if v == top {
                        continue;
                    }
                    let p = nearest_kept(v).unwrap_or(top);
                    parent[map(v) - new_start] = Some(map(p));
                }
                Layout::Tree { parent }
            }
        };
        Some(ConvexStructure {
            side: new_side,
            layout,
        })
    }
}

/// Checks convexity of `g` with respect to `structure`: every vertex on the opposite
/// side must have a neighborhood that is connected in the imaginary graph.
/// Empty neighborhoods count as connected.
pub fn verify_convexity(g: &SplitGraph, structure: &ConvexStructure) -> Result<VerificationReport> {
    structure.validate(g)?;
    let adj = structure.imaginary_adjacency(g);
    let offset = g.side_vertices(structure.side).start;
    let mut violations = Vec::new();
    let mut member = vec![false; adj.len()];
    for v in g.side_vertices(structure.side.opposite()) {
        let nbrs = g.cross_neighbors(v);
        for &u in nbrs {
            member[u - offset] = true;
        }
        if !connected_local(&adj, &member) {
            let reason = match structure.kind() {
                Kind::Path => "neighborhood is not an interval of the order",
                Kind::Cycle => "neighborhood is not an arc of the cycle",
                Kind::Chordal => "neighborhood is not connected in the imaginary graph",
                _ => "neighborhood is not a subtree",
            };
            violations.push((v, reason.to_string()));
        }
        for &u in nbrs {
            member[u - offset] = false;
        }
    }
    Ok(VerificationReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// Like [`verify_convexity`] but turns a failed report into [`Error::NotConvex`].
pub fn require_convex(g: &SplitGraph, structure: &ConvexStructure) -> Result<()> {
    if verify_convexity(g, structure)?.valid {
        Ok(())
    } else {
        Err(Error::NotConvex {
            kind: structure.kind(),
            side: structure.side,
        })
    }
}

/// Least and greatest neighbor of `u` under a path order on the opposite side.
pub fn interval_endpoints(
    g: &SplitGraph,
    structure: &ConvexStructure,
    u: Vertex,
) -> Result<(Vertex, Vertex)> {
    let Layout::Path(order) = &structure.layout else {
        return Err(Error::StructureMismatch {
            expected: "path".into(),
            found: structure.kind().to_string(),
        });
    };
    let offset = g.side_vertices(structure.side).start;
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v - offset] = i;
    }
    let nbrs = g.cross_neighbors(u);
    let lo = nbrs
        .iter()
        .min_by_key(|&&v| pos[v - offset])
        .ok_or(Error::EmptyNeighborhood(u))?;
    let hi = nbrs.iter().max_by_key(|&&v| pos[v - offset]).unwrap();
    Ok((*lo, *hi))
}

fn connected_local(adj: &[Vec<usize>], member: &[bool]) -> bool {
    let Some(start) = member.iter().position(|&m| m) else {
        return true;
    };
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(a) = stack.pop() {
        for &b in &adj[a] {
            if member[b] && !seen[b] {
                seen[b] = true;
                count += 1;
                stack.push(b);
            }
        }
    }
    count == member.iter().filter(|&&m| m).count()
}

/// Chordality test: maximum cardinality search, then check that the reverse
/// visiting order is a perfect elimination ordering.
pub fn is_chordal(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for &w in &adj[v] {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    // in MCS order, each vertex's earlier neighbors must form a clique; it suffices to
    // check that they are all adjacent to the latest of them
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let earlier: Vec<usize> = adj[v]
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .collect();
        if let Some(&latest) = earlier.iter().max_by_key(|&&w| pos[w]) {
            for &w in &earlier {
                if w != latest && !adj[latest].contains(&w) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn x3c_example_star_on_independent_side() {
        let inst = fixtures::x3c_example();
        let s = inst.structure.as_ref().unwrap();
        assert_eq!(s.kind(), Kind::Star);
        assert!(verify_convexity(&inst.graph, s).unwrap().valid);
    }

    #[test]
    fn vc_example_comb_on_independent_side() {
        let inst = fixtures::vc_example();
        let s = inst.structure.as_ref().unwrap();
        assert_eq!(s.kind(), Kind::Comb);
        assert!(verify_convexity(&inst.graph, s).unwrap().valid);
    }

    #[test]
    fn gap_in_interval_is_reported() {
        // w1 adjacent to x1 and x3 but not x2
        let g = SplitGraph::new(2, 3, [(0, 2), (0, 4), (1, 3), (1, 2)]).unwrap();
        let s = ConvexStructure::new(Side::Independent, Layout::Path(vec![2, 3, 4]));
        let report = verify_convexity(&g, &s).unwrap();
        assert!(!report.valid);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].0, 0);
    }

    #[test]
    fn layout_must_cover_side() {
        let g = SplitGraph::new(1, 3, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = ConvexStructure::new(Side::Independent, Layout::Path(vec![1, 2]));
        assert!(matches!(
            verify_convexity(&g, &s),
            Err(Error::LayoutMismatch { .. })
        ));
        let s = ConvexStructure::new(Side::Independent, Layout::Path(vec![1, 2, 2]));
        assert!(matches!(
            verify_convexity(&g, &s),
            Err(Error::LayoutMismatch { .. })
        ));
    }

    #[test]
    fn triad_legs_need_two_vertices() {
        let g = SplitGraph::new(1, 6, (1..7).map(|x| (0, x))).unwrap();
        let s = ConvexStructure::new(
            Side::Independent,
            Layout::Triad {
                root: 1,
                legs: [vec![2, 3], vec![4, 5], vec![6]],
            },
        );
        assert!(matches!(
            verify_convexity(&g, &s),
            Err(Error::MalformedLayout(_))
        ));
    }

    #[test]
    fn endpoints_on_p1() {
        let inst = fixtures::p1();
        let s = inst.structure.as_ref().unwrap();
        let g = &inst.graph;
        // w2 -> (x2, x4)
        assert_eq!(interval_endpoints(g, s, 1).unwrap(), (4, 6));
        // w3 -> (x3, x3)
        assert_eq!(interval_endpoints(g, s, 2).unwrap(), (5, 5));
        let full = SplitGraph::new(1, 3, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let path = ConvexStructure::new(Side::Independent, Layout::Path(vec![1, 2, 3]));
        assert_eq!(interval_endpoints(&full, &path, 0).unwrap(), (1, 3));
        let lonely = SplitGraph::new(2, 1, [(0, 2)]).unwrap();
        let path = ConvexStructure::new(Side::Independent, Layout::Path(vec![2]));
        assert_eq!(
            interval_endpoints(&lonely, &path, 1),
            Err(Error::EmptyNeighborhood(1))
        );
    }

    #[test]
    fn chordality() {
        // C4 is not chordal, C4 plus a chord is
        let c4 = vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]];
        assert!(!is_chordal(&c4));
        let chorded = vec![vec![1, 2, 3], vec![0, 2], vec![0, 1, 3], vec![0, 2]];
        assert!(is_chordal(&chorded));
        let tree = vec![vec![1], vec![0, 2], vec![1]];
        assert!(is_chordal(&tree));
    }

    #[test]
    fn restricting_a_star_without_its_root_relinks() {
        let g = SplitGraph::new(1, 4, (1..5).map(|x| (0, x))).unwrap();
        let s = ConvexStructure::new(Side::Independent, Layout::Star { root: 1 });
        let new_id = vec![Some(0), None, Some(1), Some(2), Some(3)];
        let r = s.restrict(&g, Side::Independent, &new_id).unwrap();
        let h = SplitGraph::new(1, 3, (1..4).map(|x| (0, x))).unwrap();
        assert!(verify_convexity(&h, &r).unwrap().valid);
    }

    fn random_graph(m: usize, n: usize, bits: &[bool]) -> Option<SplitGraph> {
        let edges = (0..m)
            .flat_map(|u| (0..n).map(move |x| (u, x)))
            .filter(|&(u, x)| bits[u * n + x])
            .map(|(u, x)| (u, m + x));
        SplitGraph::new(m, n, edges).ok()
    }

    proptest! {
        #[test]
        fn path_verdict_matches_consecutive_indices(
            m in 1usize..6, n in 1usize..7, bits in proptest::collection::vec(any::<bool>(), 36),
            perm_seed in any::<u64>(),
        ) {
            let Some(g) = random_graph(m, n, &bits) else { return Ok(()) };
            let mut order: Vec<Vertex> = g.independent().collect();
            let len = order.len();
            for i in (1..len).rev() {
                order.swap(i, (perm_seed as usize / (i + 1)) % (i + 1));
            }
            let s = ConvexStructure::new(Side::Independent, Layout::Path(order.clone()));
            let verdict = verify_convexity(&g, &s).unwrap().valid;
            let direct = g.clique().all(|u| {
                let mut idx: Vec<usize> = g.independent_neighbors(u)
                    .iter()
                    .map(|x| order.iter().position(|y| y == x).unwrap())
                    .collect();
                idx.sort_unstable();
                idx.windows(2).all(|w| w[1] == w[0] + 1)
            });
            prop_assert_eq!(verdict, direct);
        }

        #[test]
        fn path_valid_implies_tree_valid(
            m in 1usize..6, n in 1usize..7, bits in proptest::collection::vec(any::<bool>(), 36),
        ) {
            let Some(g) = random_graph(m, n, &bits) else { return Ok(()) };
            let order: Vec<Vertex> = g.clique().collect();
            let path = ConvexStructure::new(Side::Clique, Layout::Path(order.clone()));
            let parent = (0..m).map(|i| if i == 0 { None } else { Some(i - 1) }).collect();
            let tree = ConvexStructure::new(Side::Clique, Layout::Tree { parent });
            if verify_convexity(&g, &path).unwrap().valid {
                prop_assert!(verify_convexity(&g, &tree).unwrap().valid);
            }
        }

        #[test]
        fn cycle_rotation_preserves_verdict(
            m in 1usize..6, n in 1usize..7, bits in proptest::collection::vec(any::<bool>(), 36),
            shift in 0usize..7,
        ) {
            let Some(g) = random_graph(m, n, &bits) else { return Ok(()) };
            let order: Vec<Vertex> = g.independent().collect();
            let mut rotated = order.clone();
            rotated.rotate_left(shift % order.len());
            let a = ConvexStructure::new(Side::Independent, Layout::Cycle(order));
            let b = ConvexStructure::new(Side::Independent, Layout::Cycle(rotated));
            prop_assert_eq!(
                verify_convexity(&g, &a).unwrap().valid,
                verify_convexity(&g, &b).unwrap().valid
            );
        }
    }
}
