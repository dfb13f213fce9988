//! Hardness constructions with solution back-mapping.

use crate::convexity::{ConvexStructure, Layout};
use crate::error::{Error, Result};
use crate::graph::{Side, SplitGraph, Vertex};
use crate::instance::ProblemInstance;

/// Exact cover by 3-sets over the ground set `0..ground`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X3cInstance {
    pub ground: usize,
    pub sets: Vec<[usize; 3]>,
}

impl X3cInstance {
    /// Six elements, five sets; `{C2, C5}` is the unique exact cover.
    pub fn example() -> Self {
        X3cInstance {
            ground: 6,
            sets: vec![[0, 1, 2], [1, 2, 3], [0, 1, 4], [1, 4, 5], [0, 4, 5]],
        }
    }

    pub fn q(&self) -> usize {
        self.ground / 3
    }

    pub fn validate(&self) -> Result<()> {
        if self.ground == 0 || !self.ground.is_multiple_of(3) {
            return Err(Error::MalformedX3C(format!(
                "ground set size {} is not 3q",
                self.ground
            )));
        }
        if self.sets.is_empty() {
            return Err(Error::MalformedX3C("empty collection".into()));
        }
        for (i, s) in self.sets.iter().enumerate() {
            if s.iter().any(|&e| e >= self.ground) || s[0] == s[1] || s[1] == s[2] || s[0] == s[2] {
                return Err(Error::MalformedX3C(format!(
                    "set {} is not a 3-subset",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    pub fn is_exact_cover(&self, chosen: &[usize]) -> bool {
        let mut hit = vec![0usize; self.ground];
        for &i in chosen {
            for &e in &self.sets[i] {
                hit[e] += 1;
            }
        }
        hit.iter().all(|&h| h == 1)
    }
}

/// Star-convex image of an X3C instance. Sets become clique vertices `c_i` (ids
/// `0..m`); elements become `x_1..x_3q` followed by the root `x_{3q+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X3cReduction {
    pub instance: ProblemInstance,
    pub sets: usize,
}

impl X3cReduction {
    pub fn clique_of_set(&self, i: usize) -> Vertex {
        i
    }

    pub fn independent_of_element(&self, e: usize) -> Vertex {
        self.sets + e
    }

    /// Set indices picked by a Steiner set.
    pub fn sets_of_solution(&self, steiner: &[Vertex]) -> Vec<usize> {
        steiner.iter().copied().filter(|&v| v < self.sets).collect()
    }
}

pub fn reduce_x3c(x3c: &X3cInstance) -> Result<X3cReduction> {
    x3c.validate()?;
    let m = x3c.sets.len();
    let n = x3c.ground + 1;
    let root = m + x3c.ground;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (i, s) in x3c.sets.iter().enumerate() {
        edges.extend(s.iter().map(|&e| (i, m + e)));
        edges.push((i, root));
    }
    let graph = SplitGraph::new(m, n, edges)?;
    let structure = ConvexStructure::new(Side::Independent, Layout::Star { root });
    let terminals: Vec<Vertex> = graph.independent().collect();
    let instance = ProblemInstance::new(graph, Some(structure), terminals, Some(x3c.q()))?;
    Ok(X3cReduction { instance, sets: m })
}

/// Vertex cover instance on a simple graph with vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcInstance {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

impl VcInstance {
    /// A triangle with budget 2.
    pub fn example() -> Self {
        VcInstance {
            n: 3,
            edges: vec![(0, 1), (1, 2), (0, 2)],
            k: 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.edges.is_empty() {
            return Err(Error::MalformedVC("graph has no edges".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in &self.edges {
            if a >= self.n || b >= self.n {
                return Err(Error::MalformedVC(format!(
                    "edge ({a}, {b}) leaves 0..{}",
                    self.n
                )));
            }
            if a == b {
                return Err(Error::MalformedVC(format!("loop at {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::MalformedVC(format!("parallel edge ({a}, {b})")));
            }
        }
        if self.k > self.n {
            return Err(Error::MalformedVC(format!(
                "budget {} exceeds {} vertices",
                self.k, self.n
            )));
        }
        Ok(())
    }

    pub fn is_cover(&self, cover: &[usize]) -> bool {
        self.edges
            .iter()
            .all(|(a, b)| cover.contains(a) || cover.contains(b))
    }
}

/// Comb-convex image of a vertex cover instance: clique `x_v` per vertex (ids `0..n`),
/// then `y_e` per edge, then `z_e` per edge. The backbone is the `z`s, the teeth the `y`s,
/// and the terminals are the `y`s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcReduction {
    pub instance: ProblemInstance,
    pub vertices: usize,
    pub edges: usize,
}

impl VcReduction {
    pub fn y(&self, e: usize) -> Vertex {
        self.vertices + e
    }

    pub fn z(&self, e: usize) -> Vertex {
        self.vertices + self.edges + e
    }

    /// Vertex cover read off a Steiner set.
    pub fn cover_of_solution(&self, steiner: &[Vertex]) -> Vec<usize> {
        steiner
            .iter()
            .copied()
            .filter(|&v| v < self.vertices)
            .collect()
    }
}

pub fn reduce_vertex_cover(vc: &VcInstance) -> Result<VcReduction> {
    vc.validate()?;
    let (n, m) = (vc.n, vc.edges.len());
    let mut edges = Vec::new();
    for (e, &(a, b)) in vc.edges.iter().enumerate() {
        edges.push((a, n + e));
        edges.push((b, n + e));
        edges.extend((0..n).map(|x| (x, n + m + e)));
    }
    let graph = SplitGraph::new(n, 2 * m, edges)?;
    let structure = ConvexStructure::new(
        Side::Independent,
        Layout::Comb {
            backbone: (n + m..n + 2 * m).collect(),
            teeth: (n..n + m).collect(),
        },
    );
    let instance = ProblemInstance::new(graph, Some(structure), n..n + m, Some(vc.k))?;
    Ok(VcReduction {
        instance,
        vertices: n,
        edges: m,
    })
}

/// Chordal-convex image of a split graph with `R = I`. The new clique holds `w_1..w_m`
/// (ids `0..m`) and one vertex `y_j` per independent vertex (ids `m..m+n`); the new
/// independent set holds copies `x'_j` adjacent to `N(x_j)` and to `y_j`. The imaginary
/// chordal graph on the new clique is the source graph itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordalReduction {
    pub instance: ProblemInstance,
    pub source: SplitGraph,
}

impl ChordalReduction {
    /// Maps a Steiner set of the image back to the source; each `y_j` is replaced by the
    /// smallest clique neighbor of `x_j`.
    pub fn solution_in_source(&self, steiner: &[Vertex]) -> Vec<Vertex> {
        let m = self.source.n_clique();
        let n = self.source.n_independent();
        let mut out: Vec<Vertex> = steiner
            .iter()
            .filter_map(|&v| {
                if v < m {
                    Some(v)
                } else if v < m + n {
                    self.source.clique_neighbors(v).first().copied()
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

pub fn reduce_split_to_chordal_convex(source: &SplitGraph) -> Result<ChordalReduction> {
    let (m, n) = (source.n_clique(), source.n_independent());
    let mut edges = Vec::new();
    for (u, x) in source.cross_edges() {
        // x is m + j in the source; its copy is m + n + j
        edges.push((u, x + n));
    }
    for j in 0..n {
        edges.push((m + j, m + n + j));
    }
    let graph = SplitGraph::new(m + n, n, edges)?;
    let imaginary = source
        .cross_edges()
        .chain((0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))));
    let structure = ConvexStructure::new(
        Side::Clique,
        Layout::Chordal {
            edges: imaginary.collect(),
        },
    );
    let terminals: Vec<Vertex> = graph.independent().collect();
    let instance = ProblemInstance::new(graph, Some(structure), terminals, None)?;
    Ok(ChordalReduction {
        instance,
        source: source.clone(),
    })
}

/// The dominating set instance is already a Steiner instance with `R = I`.
pub fn dominating_set_as_steiner(g: &SplitGraph, k: usize) -> Result<ProblemInstance> {
    ProblemInstance::new(g.clone(), None, g.independent(), Some(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::verify_convexity;
    use crate::oracle::{exact_cover, min_vertex_cover, oracle_min_cover, oracle_min_steiner};

    #[test]
    fn x3c_example_maps_to_star() {
        let red = reduce_x3c(&X3cInstance::example()).unwrap();
        let inst = &red.instance;
        assert!(
            verify_convexity(&inst.graph, inst.structure.as_ref().unwrap())
                .unwrap()
                .valid
        );
        assert_eq!(inst.budget, Some(2));
        let sol = oracle_min_steiner(&inst.graph, &inst.terminal_vec()).unwrap();
        let chosen = red.sets_of_solution(&sol.steiner_set);
        assert_eq!(chosen, vec![1, 4]);
        assert!(X3cInstance::example().is_exact_cover(&chosen));
    }

    #[test]
    fn single_set_x3c() {
        let x3c = X3cInstance {
            ground: 3,
            sets: vec![[0, 1, 2]],
        };
        let red = reduce_x3c(&x3c).unwrap();
        let sol = oracle_min_steiner(&red.instance.graph, &red.instance.terminal_vec()).unwrap();
        assert_eq!(sol.steiner_set, vec![0]);
        assert_eq!(exact_cover(3, &x3c.sets), Some(vec![0]));
    }

    #[test]
    fn malformed_x3c() {
        let bad = X3cInstance {
            ground: 4,
            sets: vec![[0, 1, 2]],
        };
        assert!(matches!(reduce_x3c(&bad), Err(Error::MalformedX3C(_))));
        let bad = X3cInstance {
            ground: 3,
            sets: vec![[0, 0, 2]],
        };
        assert!(matches!(reduce_x3c(&bad), Err(Error::MalformedX3C(_))));
    }

    #[test]
    fn triangle_maps_to_comb() {
        let red = reduce_vertex_cover(&VcInstance::example()).unwrap();
        let inst = &red.instance;
        assert!(
            verify_convexity(&inst.graph, inst.structure.as_ref().unwrap())
                .unwrap()
                .valid
        );
        let sol = oracle_min_steiner(&inst.graph, &inst.terminal_vec()).unwrap();
        assert_eq!(sol.size(), 2);
        let cover = red.cover_of_solution(&sol.steiner_set);
        assert!(VcInstance::example().is_cover(&cover));
        assert_eq!(min_vertex_cover(3, &VcInstance::example().edges), 2);
    }

    #[test]
    fn single_edge_vc() {
        let vc = VcInstance {
            n: 2,
            edges: vec![(0, 1)],
            k: 1,
        };
        let red = reduce_vertex_cover(&vc).unwrap();
        // a single edge gives a single terminal, which needs no Steiner vertex
        let sol = oracle_min_steiner(&red.instance.graph, &red.instance.terminal_vec()).unwrap();
        assert_eq!(sol.size(), 0);
        assert!(sol.size() <= vc.k);
        let empty = VcInstance {
            n: 2,
            edges: vec![],
            k: 0,
        };
        assert!(matches!(
            reduce_vertex_cover(&empty),
            Err(Error::MalformedVC(_))
        ));
    }

    #[test]
    fn chordal_image_of_single_edge() {
        let g = SplitGraph::new(1, 1, [(0, 1)]).unwrap();
        let red = reduce_split_to_chordal_convex(&g).unwrap();
        let inst = &red.instance;
        assert_eq!((inst.graph.n_clique(), inst.graph.n_independent()), (2, 1));
        assert!(
            verify_convexity(&inst.graph, inst.structure.as_ref().unwrap())
                .unwrap()
                .valid
        );
        // one terminal needs no Steiner vertex; covering it takes one clique vertex
        assert_eq!(
            oracle_min_steiner(&inst.graph, &inst.terminal_vec())
                .unwrap()
                .size(),
            0
        );
        assert_eq!(oracle_min_cover(&inst.graph).unwrap().len(), 1);
    }

    #[test]
    fn chordal_example_is_yes_at_two() {
        let red = crate::fixtures::chordal_example();
        let inst = &red.instance;
        assert!(
            verify_convexity(&inst.graph, inst.structure.as_ref().unwrap())
                .unwrap()
                .valid
        );
        let sol = oracle_min_steiner(&inst.graph, &inst.terminal_vec()).unwrap();
        assert_eq!(sol.size(), 2);
        let back = red.solution_in_source(&sol.steiner_set);
        let r: Vec<_> = red.source.independent().collect();
        assert!(crate::graph::verify_steiner(&red.source, &r, &back));
    }
}
