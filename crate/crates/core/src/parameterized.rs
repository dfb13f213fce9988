//! Bounded search tree over the clique, degree normalization and the hitting-set kernel.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{CliqueEdges, SplitGraph, Vertex};
use crate::instance::{Method, SteinerSolution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FptOutcome {
    pub solution: Option<Vec<Vertex>>,
    /// Search tree nodes visited.
    pub nodes: usize,
}

/// Steiner version: with at most one independent vertex the empty set is a solution.
pub fn fpt_branch_solve(g: &SplitGraph, k: usize) -> FptOutcome {
    if g.n_independent() <= 1 {
        return FptOutcome {
            solution: Some(Vec::new()),
            nodes: 1,
        };
    }
    fpt_cover(g, k)
}

/// Smallest `k` for which [`fpt_branch_solve`] succeeds.
pub fn fpt_minimum(g: &SplitGraph) -> Result<SteinerSolution> {
    (0..=g.n_clique())
        .find_map(|k| fpt_branch_solve(g, k).solution)
        .map(|s| SteinerSolution::new(s, Method::Fpt))
        .ok_or_else(|| Error::Infeasible("some independent vertex has no neighbor".into()))
}

/// Is there a set of at most `k` clique vertices adjacent to all of `I`?
///
/// Branches on the clique vertex with the most uncovered neighbors: take it or delete
/// it. A clique vertex that is the last neighbor of an uncovered vertex is taken
/// without branching, so the tree has at most `2^|K| - 1` nodes.
pub fn fpt_cover(g: &SplitGraph, k: usize) -> FptOutcome {
    let mut state = Branch {
        g,
        alive: vec![true; g.n_clique()],
        covered: vec![false; g.n_independent()],
        picks: Vec::new(),
        nodes: 0,
    };
    let found = state.search(k);
    let solution = found.then(|| {
        let mut s = state.picks.clone();
        s.sort_unstable();
        s
    });
    let bound = 1usize
        .checked_shl(g.n_clique() as u32)
        .unwrap_or(usize::MAX);
    assert!(
        state.nodes <= bound,
        "{} search nodes for |K| = {}",
        state.nodes,
        g.n_clique()
    );
    FptOutcome {
        solution,
        nodes: state.nodes,
    }
}

struct Branch<'a> {
    g: &'a SplitGraph,
    alive: Vec<bool>,
    covered: Vec<bool>,
    picks: Vec<Vertex>,
    nodes: usize,
}

impl Branch<'_> {
    fn live_degree(&self, u: Vertex) -> usize {
        let m = self.g.n_clique();
        self.g
            .independent_neighbors(u)
            .iter()
            .filter(|&&x| !self.covered[x - m])
            .count()
    }

    fn take(&mut self, u: Vertex) -> Vec<usize> {
        let m = self.g.n_clique();
        self.alive[u] = false;
        self.picks.push(u);
        let mut newly = Vec::new();
        for &x in self.g.independent_neighbors(u) {
            if !self.covered[x - m] {
                self.covered[x - m] = true;
                newly.push(x - m);
            }
        }
        newly
    }

    fn search(&mut self, budget: usize) -> bool {
        self.nodes += 1;
        let g = self.g;
        let m = g.n_clique();
        let saved_alive = self.alive.clone();
        let saved_covered = self.covered.clone();
        let saved_picks = self.picks.len();
        let restore = |s: &mut Self| {
            s.alive.clone_from(&saved_alive);
            s.covered.clone_from(&saved_covered);
            s.picks.truncate(saved_picks);
        };
        let mut budget = budget;
        // forced picks and dead ends
        loop {
            let mut forced = None;
            for (i, &c) in self.covered.iter().enumerate() {
                if c {
                    continue;
                }
                let mut live = g.clique_neighbors(m + i).iter().filter(|&&u| self.alive[u]);
                match (live.next(), live.next()) {
                    (None, _) => {
                        restore(self);
                        return false;
                    }
                    (Some(&u), None) => {
                        forced = Some(u);
                        break;
                    }
                    _ => {}
                }
            }
            let Some(u) = forced else { break };
            if budget == 0 {
                restore(self);
                return false;
            }
            budget -= 1;
            self.take(u);
        }
        for u in 0..m {
            if self.alive[u] && self.live_degree(u) == 0 {
                self.alive[u] = false;
            }
        }
        if self.covered.iter().all(|&c| c) {
            return true;
        }
        if budget == 0 {
            restore(self);
            return false;
        }
        let v = (0..m)
            .filter(|&u| self.alive[u])
            .max_by_key(|&u| (self.live_degree(u), std::cmp::Reverse(u)))
            .expect("an uncovered vertex has a live neighbor");
        let alive = self.alive.clone();
        let covered = self.covered.clone();
        let picks = self.picks.len();
        self.take(v);
        if self.search(budget - 1) {
            return true;
        }
        self.alive = alive;
        self.covered = covered;
        self.picks.truncate(picks);
        self.alive[v] = false;
        if self.search(budget) {
            return true;
        }
        restore(self);
        false
    }
}

/// Padding added by [`normalize_degrees`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCertificate {
    pub d: usize,
    pub original_clique: usize,
    pub original_independent: usize,
    /// `(padding vertex, original independent vertex it serves)`, in the padded graph's ids.
    pub padding: Vec<(Vertex, Vertex)>,
}

impl DegreeCertificate {
    /// Id in the padded graph of an original vertex.
    pub fn padded_id(&self, v: Vertex) -> Vertex {
        if v < self.original_clique {
            v
        } else {
            v + self.padding.len()
        }
    }

    /// Original id of a padded-graph vertex, `None` for padding.
    pub fn original_id(&self, v: Vertex) -> Option<Vertex> {
        let m = self.original_clique;
        let u = self.padding.len();
        if v < m {
            Some(v)
        } else if v < m + u {
            None
        } else {
            Some(v - u)
        }
    }
}

/// Pads every independent vertex up to the maximum independent degree `d` with fresh
/// clique vertices. Padding vertices join the clique and see only the vertex they serve.
pub fn normalize_degrees(g: &SplitGraph) -> (SplitGraph, DegreeCertificate) {
    let m = g.n_clique();
    let d = g.max_independent_degree();
    let mut padding = Vec::new();
    for x in g.independent() {
        for _ in g.clique_neighbors(x).len()..d {
            padding.push(x);
        }
    }
    let u = padding.len();
    let mut edges: Vec<(Vertex, Vertex)> = g.cross_edges().map(|(a, x)| (a, x + u)).collect();
    let padding: Vec<(Vertex, Vertex)> = padding
        .into_iter()
        .enumerate()
        .map(|(i, x)| (m + i, x))
        .collect();
    edges.extend(padding.iter().map(|&(p, x)| (p, x + u)));
    let padded =
        SplitGraph::build_unchecked(m + u, g.n_independent(), edges, CliqueEdges::Implicit)
            .expect("padding keeps the split partition");
    let cert = DegreeCertificate {
        d,
        original_clique: m,
        original_independent: g.n_independent(),
        padding,
    };
    (padded, cert)
}

/// `(2d - 1) k^(d-1) + k`, saturating.
pub fn hitting_set_kernel_bound(d: usize, k: usize) -> usize {
    if d == 0 {
        return k;
    }
    let pow = (0..d - 1)
        .try_fold(1usize, |acc, _| acc.checked_mul(k))
        .unwrap_or(usize::MAX);
    (2 * d - 1).saturating_mul(pow).saturating_add(k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCertificate {
    pub degrees: DegreeCertificate,
    /// Padded-graph id of each kernel clique vertex.
    pub element_origin: Vec<Vertex>,
    pub budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSetKernel {
    /// Clique: surviving elements. Independent side: one vertex per surviving set.
    pub kernel: SplitGraph,
    pub certificate: KernelCertificate,
    pub bound: usize,
}

impl HittingSetKernel {
    /// Number of surviving ground elements.
    pub fn order(&self) -> usize {
        self.kernel.n_clique()
    }

    pub fn within_bound(&self) -> bool {
        self.order() <= self.bound
    }
}

/// Reduces the set system `{N(x) : x in I}` of a degree-normalized graph for budget `k`:
/// duplicate and superset removal, element domination, sunflowers with `k + 1` petals and
/// a disjoint-packing test. Returns [`Error::NoInstance`] when the rules refute `k`.
pub fn kernelize_hitting_set(
    padded: &SplitGraph,
    degrees: &DegreeCertificate,
    k: usize,
) -> Result<HittingSetKernel> {
    let d = degrees.d;
    if let Some(x) = padded
        .independent()
        .find(|&x| padded.clique_neighbors(x).len() != d)
    {
        return Err(Error::BadParameter(format!(
            "vertex {x} has degree {} but the graph is normalized to {d}",
            padded.clique_neighbors(x).len()
        )));
    }
    let mut sets: Vec<BTreeSet<Vertex>> = padded
        .independent()
        .map(|x| padded.clique_neighbors(x).iter().copied().collect())
        .collect();
    loop {
        sets.sort();
        sets.dedup();
        let snapshot = sets.clone();
        sets.retain(|s| !snapshot.iter().any(|t| t != s && t.is_subset(s)));
        if dominate_one_element(&mut sets) {
            continue;
        }
        match find_sunflower(&sets, k + 1) {
            Some((core, _)) if core.is_empty() => return Err(Error::NoInstance(k)),
            Some((core, petals)) => {
                let mut i = 0;
                sets.retain(|_| {
                    i += 1;
                    !petals.contains(&(i - 1))
                });
                sets.push(core);
                continue;
            }
            None => {}
        }
        break;
    }
    if !sets.is_empty() && (k == 0 || greedy_packing(&sets) > k) {
        return Err(Error::NoInstance(k));
    }
    let elements: Vec<Vertex> = sets
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let m = elements.len();
    let edges = sets.iter().enumerate().flat_map(|(j, s)| {
        let elements = &elements;
        s.iter()
            .map(move |e| (elements.binary_search(e).unwrap(), m + j))
    });
    let kernel = SplitGraph::build_unchecked(m, sets.len(), edges, CliqueEdges::Implicit)
        .expect("kernel is a split graph");
    Ok(HittingSetKernel {
        kernel,
        certificate: KernelCertificate {
            degrees: degrees.clone(),
            element_origin: elements,
            budget: k,
        },
        bound: hitting_set_kernel_bound(d, k),
    })
}

/// Removes one element whose sets are contained in another element's sets; among
/// elements with identical sets the larger id goes.
fn dominate_one_element(sets: &mut [BTreeSet<Vertex>]) -> bool {
    let elements: BTreeSet<Vertex> = sets.iter().flatten().copied().collect();
    let occurs: Vec<(Vertex, Vec<usize>)> = elements
        .iter()
        .map(|&e| {
            (
                e,
                (0..sets.len()).filter(|&i| sets[i].contains(&e)).collect(),
            )
        })
        .collect();
    for (a, sa) in &occurs {
        for (b, sb) in &occurs {
            if a == b || !sa.iter().all(|i| sb.binary_search(i).is_ok()) {
                continue;
            }
            if sa.len() < sb.len() || a > b {
                for &i in sa {
                    sets[i].remove(a);
                }
                return true;
            }
        }
    }
    false
}

/// Some sunflower with `petals` petals: a core and the indices of sets whose remainders
/// outside the core are pairwise disjoint. Cores are tried smallest first.
fn find_sunflower(
    sets: &[BTreeSet<Vertex>],
    petals: usize,
) -> Option<(BTreeSet<Vertex>, Vec<usize>)> {
    let mut cores: Vec<BTreeSet<Vertex>> = Vec::new();
    for s in sets {
        let items: Vec<Vertex> = s.iter().copied().collect();
        for mask in 0u32..(1 << items.len()) - 1 {
            let core: BTreeSet<Vertex> = (0..items.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| items[i])
                .collect();
            cores.push(core);
        }
    }
    cores.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    cores.dedup();
    for core in cores {
        let mut used = BTreeSet::new();
        let mut chosen = Vec::new();
        for (i, s) in sets.iter().enumerate() {
            if s.len() > core.len()
                && core.is_subset(s)
                && s.difference(&core).all(|e| !used.contains(e))
            {
                used.extend(s.difference(&core).copied());
                chosen.push(i);
                if chosen.len() == petals {
                    return Some((core, chosen));
                }
            }
        }
    }
    None
}

fn greedy_packing(sets: &[BTreeSet<Vertex>]) -> usize {
    let mut order: Vec<&BTreeSet<Vertex>> = sets.iter().collect();
    order.sort_by_key(|s| s.len());
    let mut used = BTreeSet::new();
    let mut count = 0;
    for s in order {
        if s.is_disjoint(&used) {
            used.extend(s.iter().copied());
            count += 1;
        }
    }
    count
}

/// Maps a cover of the kernel back to the original graph, trading each padding vertex
/// for the smallest real neighbor of the vertex it served.
pub fn lift_solution(
    original: &SplitGraph,
    cert: &KernelCertificate,
    kernel_solution: &[Vertex],
) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    for &v in kernel_solution {
        let &padded = cert
            .element_origin
            .get(v)
            .ok_or_else(|| Error::CorruptCertificate(format!("kernel vertex {v} is unknown")))?;
        out.push(lift_padded(original, &cert.degrees, padded)?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Original clique vertex standing in for a vertex of the padded graph.
pub fn lift_padded(
    original: &SplitGraph,
    degrees: &DegreeCertificate,
    v: Vertex,
) -> Result<Vertex> {
    if let Some(o) = degrees.original_id(v) {
        if o >= original.n_clique() {
            return Err(Error::CorruptCertificate(format!(
                "{v} is not a clique vertex"
            )));
        }
        return Ok(o);
    }
    let &(_, served) = degrees
        .padding
        .iter()
        .find(|&&(p, _)| p == v)
        .ok_or_else(|| Error::CorruptCertificate(format!("padding vertex {v} is unknown")))?;
    original
        .clique_neighbors(served)
        .first()
        .copied()
        .ok_or_else(|| Error::CorruptCertificate(format!("{served} has no real neighbor")))
}

/// Normalizes, kernelizes for `k`, searches the kernel and lifts the answer. `Ok(None)`
/// means no cover of size `k` exists.
pub fn kernel_fpt_cover(g: &SplitGraph, k: usize) -> Result<Option<Vec<Vertex>>> {
    let (padded, degrees) = normalize_degrees(g);
    let kernel = match kernelize_hitting_set(&padded, &degrees, k) {
        Ok(kernel) => kernel,
        Err(Error::NoInstance(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    match fpt_cover(&kernel.kernel, k).solution {
        Some(s) => lift_solution(g, &kernel.certificate, &s).map(Some),
        None => Ok(None),
    }
}

/// Smallest `k` for which [`kernel_fpt_cover`] succeeds, with Steiner semantics.
pub fn kernel_fpt_minimum(g: &SplitGraph) -> Result<SteinerSolution> {
    if g.n_independent() <= 1 {
        return Ok(SteinerSolution::new(Vec::new(), Method::KernelFpt));
    }
    for k in 0..=g.n_clique() {
        if let Some(s) = kernel_fpt_cover(g, k)? {
            return Ok(SteinerSolution::new(s, Method::KernelFpt));
        }
    }
    Err(Error::Infeasible(
        "some independent vertex has no neighbor".into(),
    ))
}
