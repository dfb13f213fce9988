//! Minimum Steiner sets and dominating sets on split graphs with convex structures.
//!
//! Vertices are `usize` ids: the clique `K` is `0..m`, the independent set `I` is
//! `m..m+n`. Every exact solver is checked against the exhaustive [`oracle`].

pub mod convexity;
pub mod derived;
pub mod domination;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod normalize;
pub mod oracle;
pub mod parameterized;
pub mod path;
pub mod reductions;
pub mod solve;
pub mod special;
pub mod tree_k;

pub use convexity::{
    verify_convexity, ConvexStructure, Kind, Layout, RootedTree, VerificationReport,
};
pub use derived::{solve_circular_convex_i, solve_circular_convex_k, solve_triad_convex_i};
pub use domination::{approx_dominating_set, approx_steiner, ds_via_stree, push_ds_into_clique};
pub use error::{Error, Result};
pub use format::{emit_instance, emit_solution, parse_instance, parse_solution};
pub use graph::{unreached_terminals, verify_steiner, CliqueEdges, Side, SplitGraph, Vertex};
pub use instance::{Method, ProblemInstance, SteinerSolution};
pub use normalize::{normalize_terminals, Normalized, TerminalCase};
pub use oracle::{oracle_min_dominating, oracle_min_steiner, Domination};
pub use parameterized::{
    fpt_branch_solve, kernelize_hitting_set, lift_solution, normalize_degrees,
};
pub use path::solve_path_convex_i;
pub use reductions::{reduce_split_to_chordal_convex, reduce_vertex_cover, reduce_x3c};
pub use solve::{solve, SolveOptions, SolveReport};
pub use special::{kernelize_star_pendant, solve_comb_convex_i_xp, solve_star_convex_i_bounded};
pub use tree_k::solve_tree_convex_k;
