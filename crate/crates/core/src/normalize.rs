//! Reduction of arbitrary terminal sets to the case `R = I`.

use crate::convexity::verify_convexity;
use crate::error::{Error, Result};
use crate::graph::{Side, Vertex};
use crate::instance::ProblemInstance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TerminalCase {
    /// `R ⊆ K`: the empty set connects the terminals.
    CliqueOnly,
    /// `R ⊆ I`.
    IndependentOnly,
    /// Terminals on both sides.
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub case: TerminalCase,
    /// Sub-instance with `R = I`; `None` when nothing is left to connect.
    pub instance: Option<ProblemInstance>,
    /// Original id of each sub-instance vertex.
    pub back_map: Vec<Vertex>,
    /// Clique terminals, `R ∩ K`.
    pub mandated: Vec<Vertex>,
    /// The structure did not survive the restriction.
    pub structure_dropped: bool,
}

impl Normalized {
    /// Every remaining independent vertex needs its own clique neighbor in the answer,
    /// even when only one is left.
    pub fn needs_cover(&self) -> bool {
        self.case == TerminalCase::Mixed
    }

    /// Maps a sub-instance solution back to a Steiner set of the original instance.
    ///
    /// For the mixed case a single leftover independent vertex with an empty answer gets
    /// its smallest neighbor.
    pub fn lift(&self, sub_solution: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = sub_solution.iter().map(|&v| self.back_map[v]).collect();
        if let (true, Some(sub)) = (self.needs_cover(), &self.instance) {
            if sub_solution.is_empty() {
                if let Some(x) = sub.graph.independent().next() {
                    out.push(self.back_map[sub.graph.clique_neighbors(x)[0]]);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Splits on the terminal case and builds the induced sub-instance with `R' = I'`.
pub fn normalize_terminals(instance: &ProblemInstance) -> Result<Normalized> {
    let g = &instance.graph;
    if instance.terminals.is_empty() {
        return Err(Error::EmptyTerminals);
    }
    let mandated: Vec<Vertex> = instance
        .terminals
        .iter()
        .copied()
        .filter(|&v| g.side(v) == Side::Clique)
        .collect();
    let independent: Vec<Vertex> = instance
        .terminals
        .iter()
        .copied()
        .filter(|&v| g.side(v) == Side::Independent)
        .collect();
    let case = match (mandated.is_empty(), independent.is_empty()) {
        (_, true) => TerminalCase::CliqueOnly,
        (true, false) => TerminalCase::IndependentOnly,
        (false, false) => TerminalCase::Mixed,
    };
    let mut keep = vec![false; g.order()];
    match case {
        TerminalCase::CliqueOnly => {}
        TerminalCase::IndependentOnly => {
            for v in g.clique() {
                keep[v] = true;
            }
            for &x in &independent {
                keep[x] = true;
            }
        }
        TerminalCase::Mixed => {
            for v in g.clique() {
                keep[v] = true;
            }
            for &w in &mandated {
                keep[w] = false;
            }
            for &x in &independent {
                keep[x] = !g
                    .clique_neighbors(x)
                    .iter()
                    .any(|u| mandated.binary_search(u).is_ok());
            }
            // clique vertices are only useful next to a leftover terminal
            if !independent.iter().any(|&x| keep[x]) {
                keep.iter_mut().for_each(|k| *k = false);
            }
        }
    }
    if !keep.iter().any(|&k| k) {
        return Ok(Normalized {
            case,
            instance: None,
            back_map: Vec::new(),
            mandated,
            structure_dropped: false,
        });
    }
    let (sub, back_map) = g.induced(&keep);
    let mut new_id = vec![None; g.order()];
    for (new, &old) in back_map.iter().enumerate() {
        new_id[old] = Some(new);
    }
    let mut structure_dropped = false;
    let structure = instance.structure.as_ref().and_then(|s| {
        let r = s.restrict(g, s.side, &new_id).filter(|r| {
            r.validate(&sub).is_ok() && verify_convexity(&sub, r).is_ok_and(|rep| rep.valid)
        });
        structure_dropped = r.is_none();
        r
    });
    let sub_instance = ProblemInstance::steiner_on_independent(sub, structure);
    Ok(Normalized {
        case,
        instance: Some(sub_instance),
        back_map,
        mandated,
        structure_dropped,
    })
}
