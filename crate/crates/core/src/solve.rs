//! Method dispatch with terminal normalization and fallbacks.

use crate::convexity::Kind;
use crate::derived::{solve_circular_convex_i, solve_circular_convex_k, solve_triad_convex_i};
use crate::domination::approx_steiner;
use crate::error::{Error, Result};
use crate::graph::Side;
use crate::instance::{Method, ProblemInstance, SteinerSolution};
use crate::normalize::normalize_terminals;
use crate::oracle::{oracle_min_steiner_with, OracleOptions, DEFAULT_CAP};
use crate::parameterized::{fpt_minimum, kernel_fpt_minimum};
use crate::path::solve_path_convex_i;
use crate::special::{solve_comb_convex_i_xp, solve_star_convex_i_bounded};
use crate::tree_k::solve_tree_convex_k;

/// Largest independent degree for which `auto` runs the star solver.
pub const AUTO_STAR_DEGREE: usize = 12;
/// Longest comb backbone for which `auto` runs the comb solver.
pub const AUTO_COMB_BACKBONE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub cap: usize,
    /// Degree bound for the star solver; defaults to the maximum independent degree.
    pub star_degree: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            cap: DEFAULT_CAP,
            star_degree: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub solution: SteinerSolution,
    pub warnings: Vec<String>,
}

impl SolveReport {
    /// `None` without a budget.
    pub fn within_budget(&self, instance: &ProblemInstance) -> Option<bool> {
        instance.budget.map(|k| self.solution.size() <= k)
    }
}

/// The exact solver `auto` would pick from the declared structure, if any.
pub fn auto_method(instance: &ProblemInstance) -> Option<Method> {
    let s = instance.structure.as_ref()?;
    let g = &instance.graph;
    Some(match (s.kind(), s.side) {
        (Kind::Path, Side::Independent) => Method::Path,
        (Kind::Cycle, Side::Independent) => Method::CircularI,
        (Kind::Triad, Side::Independent) => Method::Triad,
        (Kind::Cycle, Side::Clique) => Method::CircularK,
        (kind, Side::Clique) if kind.is_tree_like() => Method::TreeK,
        (Kind::Star, Side::Independent) if g.max_independent_degree() <= AUTO_STAR_DEGREE => {
            Method::StarBounded
        }
        (Kind::Comb, Side::Independent) => match &s.layout {
            crate::convexity::Layout::Comb { backbone, .. }
                if backbone.len() <= AUTO_COMB_BACKBONE =>
            {
                Method::CombXp
            }
            _ => return None,
        },
        _ => return None,
    })
}

/// Solves for a minimum Steiner set (approximate for [`Method::Approx`]). Terminal sets
/// other than `I` are normalized first, except for the oracle and the approximation,
/// which handle any terminal set.
pub fn solve(
    instance: &ProblemInstance,
    method: Method,
    opts: SolveOptions,
) -> Result<SolveReport> {
    let g = &instance.graph;
    if instance.terminals.is_empty() {
        return Err(Error::EmptyTerminals);
    }
    match method {
        Method::Oracle => {
            let cap = OracleOptions {
                cap: opts.cap,
                ..OracleOptions::default()
            };
            let solution = oracle_min_steiner_with(g, &instance.terminal_vec(), cap)?;
            return Ok(SolveReport {
                solution,
                warnings: Vec::new(),
            });
        }
        Method::Approx => {
            let solution = approx_steiner(g, &instance.terminal_vec())?.solution;
            return Ok(SolveReport {
                solution,
                warnings: Vec::new(),
            });
        }
        _ => {}
    }
    if instance.terminals_are_independent_set() {
        return dispatch(instance, method, opts);
    }
    let normalized = normalize_terminals(instance)?;
    let mut warnings = vec![format!(
        "terminal set normalized ({:?} case)",
        normalized.case
    )];
    if normalized.structure_dropped {
        warnings.push("declared structure does not survive normalization".into());
    }
    let Some(sub) = &normalized.instance else {
        return Ok(SolveReport {
            solution: SteinerSolution::new(Vec::new(), Method::Normalized),
            warnings,
        });
    };
    let report = dispatch(sub, method, opts)?;
    warnings.extend(report.warnings);
    let lifted = normalized.lift(&report.solution.steiner_set);
    Ok(SolveReport {
        solution: SteinerSolution::new(lifted, report.solution.method),
        warnings,
    })
}

fn dispatch(instance: &ProblemInstance, method: Method, opts: SolveOptions) -> Result<SolveReport> {
    if method != Method::Auto {
        let solution = run(instance, method, opts)?;
        return Ok(SolveReport {
            solution,
            warnings: Vec::new(),
        });
    }
    let mut warnings = Vec::new();
    if let Some(m) = auto_method(instance) {
        match run(instance, m, opts) {
            Ok(solution) => return Ok(SolveReport { solution, warnings }),
            Err(e) => warnings.push(format!("{m} not applicable: {e}")),
        }
    } else {
        warnings.push("no polynomial solver for the declared structure".into());
    }
    let fallback = if instance.graph.order() <= opts.cap {
        Method::Oracle
    } else {
        Method::Fpt
    };
    warnings.push(format!("falling back to {fallback}"));
    let solution = run(instance, fallback, opts)?;
    Ok(SolveReport { solution, warnings })
}

fn run(instance: &ProblemInstance, method: Method, opts: SolveOptions) -> Result<SteinerSolution> {
    let g = &instance.graph;
    match method {
        Method::Path => solve_path_convex_i(instance),
        Method::TreeK => solve_tree_convex_k(instance),
        Method::Triad => solve_triad_convex_i(instance),
        Method::CircularI => solve_circular_convex_i(instance),
        Method::CircularK => solve_circular_convex_k(instance),
        Method::StarBounded => {
            let d = opts
                .star_degree
                .unwrap_or_else(|| g.max_independent_degree());
            solve_star_convex_i_bounded(instance, d)
        }
        Method::CombXp => solve_comb_convex_i_xp(instance),
        Method::Fpt => fpt_minimum(g),
        Method::KernelFpt => kernel_fpt_minimum(g),
        Method::Approx => Ok(approx_steiner(g, &instance.terminal_vec())?.solution),
        Method::Oracle => oracle_min_steiner_with(
            g,
            &instance.terminal_vec(),
            OracleOptions {
                cap: opts.cap,
                ..OracleOptions::default()
            },
        ),
        Method::Auto | Method::Normalized => {
            Err(Error::BadParameter(format!("{method} is not a solver")))
        }
    }
}
