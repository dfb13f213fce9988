use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::convexity::{require_convex, ConvexStructure, Kind};
use crate::error::{Error, Result};
use crate::graph::{Side, SplitGraph, Vertex};

/// A split graph with an optional convex structure, a terminal set and a budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    pub graph: SplitGraph,
    pub structure: Option<ConvexStructure>,
    pub terminals: BTreeSet<Vertex>,
    pub budget: Option<usize>,
}

impl ProblemInstance {
    pub fn new(
        graph: SplitGraph,
        structure: Option<ConvexStructure>,
        terminals: impl IntoIterator<Item = Vertex>,
        budget: Option<usize>,
    ) -> Result<Self> {
        let terminals: BTreeSet<Vertex> = terminals.into_iter().collect();
        if let Some(&bad) = terminals.iter().find(|&&v| !graph.contains(v)) {
            return Err(Error::VertexOutOfRange(bad));
        }
        if let Some(budget) = budget {
            if budget > graph.order() {
                return Err(Error::BudgetTooLarge {
                    budget,
                    order: graph.order(),
                });
            }
        }
        if let Some(s) = &structure {
            s.validate(&graph)?;
        }
        Ok(ProblemInstance {
            graph,
            structure,
            terminals,
            budget,
        })
    }

    /// Instance with `R = I` and no budget.
    pub fn steiner_on_independent(graph: SplitGraph, structure: Option<ConvexStructure>) -> Self {
        let terminals = graph.independent().collect();
        ProblemInstance {
            graph,
            structure,
            terminals,
            budget: None,
        }
    }

    pub fn terminals_are_independent_set(&self) -> bool {
        self.terminals.len() == self.graph.n_independent()
            && self
                .terminals
                .iter()
                .all(|&v| self.graph.side(v) == Side::Independent)
    }

    pub fn terminal_vec(&self) -> Vec<Vertex> {
        self.terminals.iter().copied().collect()
    }

    /// Checks that the instance declares a `kind` structure on `side`, that the graph
    /// is convex with respect to it, and that `R = I`.
    pub fn require(&self, kind: Kind, side: Side) -> Result<&ConvexStructure> {
        let expected = format!("{kind} on {side}");
        let s = self
            .structure
            .as_ref()
            .ok_or_else(|| Error::StructureMismatch {
                expected: expected.clone(),
                found: "none".into(),
            })?;
        if s.kind() != kind || s.side != side {
            return Err(Error::StructureMismatch {
                expected,
                found: format!("{} on {}", s.kind(), s.side),
            });
        }
        require_convex(&self.graph, s)?;
        if !self.terminals_are_independent_set() {
            return Err(Error::TerminalsNotI);
        }
        Ok(s)
    }
}

/// Which algorithm produced a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Auto,
    Path,
    TreeK,
    Triad,
    CircularI,
    CircularK,
    StarBounded,
    CombXp,
    Fpt,
    KernelFpt,
    Approx,
    Oracle,
    Normalized,
}

impl Method {
    pub const SELECTABLE: [Method; 12] = [
        Method::Auto,
        Method::Path,
        Method::TreeK,
        Method::Triad,
        Method::CircularI,
        Method::CircularK,
        Method::StarBounded,
        Method::CombXp,
        Method::Fpt,
        Method::KernelFpt,
        Method::Approx,
        Method::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Path => "path",
            Method::TreeK => "tree-k",
            Method::Triad => "triad",
            Method::CircularI => "circular-i",
            Method::CircularK => "circular-k",
            Method::StarBounded => "star-bounded",
            Method::CombXp => "comb-xp",
            Method::Fpt => "fpt",
            Method::KernelFpt => "kernel+fpt",
            Method::Approx => "approx",
            Method::Oracle => "oracle",
            Method::Normalized => "normalized",
        }
    }

    /// Whether the method always returns a minimum solution.
    pub fn is_exact(self) -> bool {
        !matches!(self, Method::Approx)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::SELECTABLE
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::BadParameter(format!("unknown method `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSolution {
    /// Sorted, duplicate free.
    pub steiner_set: Vec<Vertex>,
    pub method: Method,
}

impl SteinerSolution {
    pub fn new(mut steiner_set: Vec<Vertex>, method: Method) -> Self {
        steiner_set.sort_unstable();
        steiner_set.dedup();
        SteinerSolution {
            steiner_set,
            method,
        }
    }

    pub fn size(&self) -> usize {
        self.steiner_set.len()
    }

    pub fn is_valid_for(&self, instance: &ProblemInstance) -> bool {
        crate::graph::verify_steiner(&instance.graph, &instance.terminal_vec(), &self.steiner_set)
    }
}
