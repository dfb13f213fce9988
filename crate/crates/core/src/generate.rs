//! Seeded random samplers for every structure kind and for the hardness sources.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::convexity::{ConvexStructure, Kind, Layout};
use crate::error::{Error, Result};
use crate::graph::{Side, SplitGraph, Vertex};
use crate::instance::ProblemInstance;
use crate::reductions::{VcInstance, X3cInstance};

/// Deterministic generator from a seed.
pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

/// Random layout of `kind` over the vertices `offset..offset + size`.
pub fn random_layout<R: Rng>(
    rng: &mut R,
    kind: Kind,
    offset: usize,
    size: usize,
) -> Result<Layout> {
    let mut perm: Vec<Vertex> = (offset..offset + size).collect();
    perm.shuffle(rng);
    Ok(match kind {
        Kind::Path => {
            if size == 0 {
                return Err(bad("a path needs a vertex"));
            }
            Layout::Path(perm)
        }
        Kind::Cycle => {
            if size < 3 {
                return Err(bad("a cycle needs at least 3 vertices"));
            }
            Layout::Cycle(perm)
        }
        Kind::Star => {
            if size == 0 {
                return Err(bad("a star needs a root"));
            }
            Layout::Star { root: perm[0] }
        }
        Kind::Tree => {
            if size == 0 {
                return Err(bad("a tree needs a root"));
            }
            let mut parent = vec![None; size];
            for i in 1..size {
                parent[perm[i] - offset] = Some(perm[rng.gen_range(0..i)]);
            }
            Layout::Tree { parent }
        }
        Kind::Comb => {
            if size == 0 || !size.is_multiple_of(2) {
                return Err(bad("a comb has an even, nonzero number of vertices"));
            }
            let teeth = perm.split_off(size / 2);
            Layout::Comb {
                backbone: perm,
                teeth,
            }
        }
        Kind::Triad => {
            if size < 7 {
                return Err(bad(
                    "a triad with legs of length 2 needs at least 7 vertices",
                ));
            }
            let rest = size - 7;
            let a = rng.gen_range(0..=rest);
            let b = rng.gen_range(0..=rest - a);
            triad_layout(&perm, [2 + a, 2 + b, 2 + rest - a - b])?
        }
        Kind::Chordal => Layout::Chordal {
            edges: random_chordal_edges(rng, &perm),
        },
    })
}

fn triad_layout(perm: &[Vertex], legs: [usize; 3]) -> Result<Layout> {
    if legs.iter().any(|&l| l < 2) {
        return Err(bad("triad legs need at least 2 vertices"));
    }
    if perm.len() != 1 + legs.iter().sum::<usize>() {
        return Err(bad("leg lengths do not add up"));
    }
    let root = perm[0];
    let mut at = 1;
    let legs = legs.map(|l| {
        let leg = perm[at..at + l].to_vec();
        at += l;
        leg
    });
    Ok(Layout::Triad { root, legs })
}

/// Connected chordal graph: each new vertex joins a random clique around an older vertex.
fn random_chordal_edges<R: Rng>(rng: &mut R, perm: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); perm.len()];
    let mut edges = Vec::new();
    for i in 1..perm.len() {
        let u = rng.gen_range(0..i);
        let mut clique = vec![u];
        let mut around: Vec<usize> = adj[u].iter().copied().collect();
        around.shuffle(rng);
        for w in around {
            if rng.gen_bool(0.5) && clique.iter().all(|c| adj[w].contains(c)) {
                clique.push(w);
            }
        }
        for c in clique {
            adj[i].insert(c);
            adj[c].insert(i);
            edges.push((perm[c], perm[i]));
        }
    }
    edges
}

/// Connected subset of the imaginary graph with at most `size` vertices, grown from a
/// random seed vertex.
fn connected_subset<R: Rng>(rng: &mut R, adj: &[Vec<usize>], size: usize) -> BTreeSet<usize> {
    let mut set = BTreeSet::new();
    if size == 0 || adj.is_empty() {
        return set;
    }
    set.insert(rng.gen_range(0..adj.len()));
    while set.len() < size {
        let frontier: Vec<usize> = set
            .iter()
            .flat_map(|&v| adj[v].iter().copied())
            .filter(|w| !set.contains(w))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let Some(&w) = frontier.choose(rng) else {
            break;
        };
        set.insert(w);
    }
    set
}

/// Grows `set` along a shortest imaginary path until it contains `target`.
fn extend_to(adj: &[Vec<usize>], set: &mut BTreeSet<usize>, target: usize) {
    let mut prev = vec![usize::MAX; adj.len()];
    let mut queue: VecDeque<usize> = set.iter().copied().collect();
    for &s in set.iter() {
        prev[s] = s;
    }
    while let Some(v) = queue.pop_front() {
        if v == target {
            break;
        }
        for &w in &adj[v] {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut cur = target;
    while !set.contains(&cur) {
        set.insert(cur);
        cur = prev[cur];
    }
}

/// Random instance with `R = I` that is convex for the given structure. Each vertex of
/// the other side sees a random connected piece of at most `max_piece` vertices.
pub fn random_convex_instance<R: Rng>(
    rng: &mut R,
    kind: Kind,
    side: Side,
    m: usize,
    n: usize,
    max_piece: usize,
) -> Result<ProblemInstance> {
    let (offset, size) = match side {
        Side::Clique => (0, m),
        Side::Independent => (m, n),
    };
    let layout = random_layout(rng, kind, offset, size)?;
    with_layout(rng, ConvexStructure::new(side, layout), m, n, max_piece)
}

/// Random instance convex for a fixed structure.
pub fn with_layout<R: Rng>(
    rng: &mut R,
    structure: ConvexStructure,
    m: usize,
    n: usize,
    max_piece: usize,
) -> Result<ProblemInstance> {
    if m == 0 && n > 1 {
        return Err(bad("an empty clique leaves the graph disconnected"));
    }
    if max_piece == 0 {
        return Err(bad("neighborhood size cap must be positive"));
    }
    let probe = SplitGraph::build_unchecked(m, n, [], crate::graph::CliqueEdges::Implicit)?;
    structure.validate(&probe)?;
    let adj = structure.imaginary_adjacency(&probe);
    let (offset, other) = match structure.side {
        Side::Clique => (0, n),
        Side::Independent => (m, m),
    };
    let mut pieces: Vec<BTreeSet<usize>> = Vec::with_capacity(other);
    for _ in 0..other {
        let lo = usize::from(structure.side == Side::Clique);
        let size = rng.gen_range(lo..=max_piece.max(lo));
        pieces.push(connected_subset(rng, &adj, size));
    }
    if structure.side == Side::Independent && m > 0 {
        // every independent vertex needs a neighbor
        let mut order: Vec<usize> = (0..adj.len()).collect();
        order.shuffle(rng);
        for x in order {
            if pieces.iter().any(|p| p.contains(&x)) {
                continue;
            }
            let touching: Vec<usize> = (0..m)
                .filter(|&u| pieces[u].is_empty() || adj[x].iter().any(|y| pieces[u].contains(y)))
                .collect();
            let u = match touching.choose(rng) {
                Some(&u) => u,
                None => rng.gen_range(0..m),
            };
            if pieces[u].is_empty() {
                pieces[u].insert(x);
            } else {
                extend_to(&adj, &mut pieces[u], x);
            }
        }
    }
    let edges: Vec<(Vertex, Vertex)> = pieces
        .iter()
        .enumerate()
        .flat_map(|(i, p)| {
            p.iter().map(move |&j| match structure.side {
                Side::Clique => (offset + j, m + i),
                Side::Independent => (i, offset + j),
            })
        })
        .collect();
    let graph = SplitGraph::new(m, n, edges)?;
    Ok(ProblemInstance::steiner_on_independent(
        graph,
        Some(structure),
    ))
}

/// Triad-convex on `I` with the given leg lengths.
pub fn random_triad_instance<R: Rng>(
    rng: &mut R,
    m: usize,
    legs: [usize; 3],
    max_piece: usize,
) -> Result<ProblemInstance> {
    let n = 1 + legs.iter().sum::<usize>();
    let mut perm: Vec<Vertex> = (m..m + n).collect();
    perm.shuffle(rng);
    let layout = triad_layout(&perm, legs)?;
    with_layout(
        rng,
        ConvexStructure::new(Side::Independent, layout),
        m,
        n,
        max_piece,
    )
}

/// Star-convex on `I` with every independent degree at most `d`, by rejection.
pub fn random_star_bounded<R: Rng>(
    rng: &mut R,
    m: usize,
    n: usize,
    max_piece: usize,
    d: usize,
) -> Result<ProblemInstance> {
    for _ in 0..10_000 {
        let inst = random_convex_instance(rng, Kind::Star, Side::Independent, m, n, max_piece)?;
        if inst.graph.max_independent_degree() <= d {
            return Ok(inst);
        }
    }
    Err(bad(format!(
        "could not sample a star instance with degree bound {d}"
    )))
}

/// Connected split graph where each cross edge appears with probability `p`; vertices
/// left without a clique neighbor get a random one.
pub fn random_split_graph<R: Rng>(rng: &mut R, m: usize, n: usize, p: f64) -> Result<SplitGraph> {
    if m == 0 && n > 1 {
        return Err(bad("an empty clique leaves the graph disconnected"));
    }
    let mut edges = Vec::new();
    for x in m..m + n {
        let before = edges.len();
        for u in 0..m {
            if rng.gen_bool(p) {
                edges.push((u, x));
            }
        }
        if edges.len() == before && m > 0 {
            edges.push((rng.gen_range(0..m), x));
        }
    }
    SplitGraph::new(m, n, edges)
}

/// Random collection of `sets` triples over `3q` elements.
pub fn random_x3c<R: Rng>(rng: &mut R, q: usize, sets: usize) -> Result<X3cInstance> {
    if q == 0 || sets == 0 {
        return Err(bad("X3C needs q >= 1 and at least one set"));
    }
    let ground = 3 * q;
    let all: Vec<usize> = (0..ground).collect();
    let sets = (0..sets).map(|_| triple(rng, &all)).collect();
    Ok(X3cInstance { ground, sets })
}

/// X3C instance with a planted exact cover: a random partition into `q` triples plus
/// `extra` random triples, shuffled.
pub fn planted_x3c<R: Rng>(rng: &mut R, q: usize, extra: usize) -> Result<X3cInstance> {
    if q == 0 {
        return Err(bad("X3C needs q >= 1"));
    }
    let ground = 3 * q;
    let mut all: Vec<usize> = (0..ground).collect();
    all.shuffle(rng);
    let mut sets: Vec<[usize; 3]> = all
        .chunks(3)
        .map(|c| {
            let mut t = [c[0], c[1], c[2]];
            t.sort_unstable();
            t
        })
        .collect();
    all.sort_unstable();
    sets.extend((0..extra).map(|_| triple(rng, &all)));
    sets.shuffle(rng);
    Ok(X3cInstance { ground, sets })
}

fn triple<R: Rng>(rng: &mut R, all: &[usize]) -> [usize; 3] {
    let mut t: Vec<usize> = all.choose_multiple(rng, 3).copied().collect();
    t.sort_unstable();
    [t[0], t[1], t[2]]
}

/// Random simple graph on `n` vertices with at least one edge.
pub fn random_vc<R: Rng>(rng: &mut R, n: usize, p: f64, k: usize) -> Result<VcInstance> {
    if n < 2 {
        return Err(bad("vertex cover source needs two vertices"));
    }
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    if edges.is_empty() {
        let a = rng.gen_range(0..n - 1);
        edges.push((a, rng.gen_range(a + 1..n)));
    }
    Ok(VcInstance { n, edges, k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::verify_convexity;

    #[test]
    fn every_kind_on_both_sides_is_convex() {
        let mut rng = seeded(7);
        for kind in Kind::ALL {
            for side in [Side::Clique, Side::Independent] {
                for _ in 0..20 {
                    let inst = random_convex_instance(&mut rng, kind, side, 8, 8, 4).unwrap();
                    let s = inst.structure.as_ref().unwrap();
                    assert!(
                        verify_convexity(&inst.graph, s).unwrap().valid,
                        "{kind} on {side}"
                    );
                }
            }
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let a =
            random_convex_instance(&mut seeded(7), Kind::Path, Side::Independent, 5, 8, 3).unwrap();
        let b =
            random_convex_instance(&mut seeded(7), Kind::Path, Side::Independent, 5, 8, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn short_triad_legs_are_rejected() {
        assert!(matches!(
            random_triad_instance(&mut seeded(1), 4, [1, 2, 2], 3),
            Err(Error::BadParameter(_))
        ));
        assert!(random_triad_instance(&mut seeded(1), 4, [2, 2, 3], 3).is_ok());
    }

    #[test]
    fn planted_x3c_has_a_cover() {
        let x = planted_x3c(&mut seeded(3), 3, 4).unwrap();
        x.validate().unwrap();
        assert!(crate::oracle::exact_cover(x.ground, &x.sets).is_some());
    }

    #[test]
    fn star_degree_bound() {
        let inst = random_star_bounded(&mut seeded(5), 6, 7, 3, 2).unwrap();
        assert!(inst.graph.max_independent_degree() <= 2);
    }
}
