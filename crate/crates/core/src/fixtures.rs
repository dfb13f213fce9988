//! Small named instances used throughout the tests and by the CLI generator.

use crate::convexity::{ConvexStructure, Layout};
use crate::graph::{Side, SplitGraph};
use crate::instance::ProblemInstance;
use crate::reductions::{
    reduce_split_to_chordal_convex, reduce_vertex_cover, reduce_x3c, ChordalReduction, VcInstance,
    X3cInstance,
};

/// Path-convex on `I`: `w1 ~ {x1, x2}`, `w2 ~ {x2, x3, x4}`, `w3 ~ {x3}`.
pub fn p1() -> ProblemInstance {
    let g = SplitGraph::new(3, 4, [(0, 3), (0, 4), (1, 4), (1, 5), (1, 6), (2, 5)])
        .expect("fixture is a connected split graph");
    let s = ConvexStructure::new(Side::Independent, Layout::Path(vec![3, 4, 5, 6]));
    ProblemInstance::steiner_on_independent(g, Some(s))
}

/// Star-convex image of the six-element exact cover example.
pub fn x3c_example() -> ProblemInstance {
    reduce_x3c(&X3cInstance::example())
        .expect("valid example")
        .instance
}

/// Comb-convex image of the triangle with budget 2.
pub fn vc_example() -> ProblemInstance {
    reduce_vertex_cover(&VcInstance::example())
        .expect("valid example")
        .instance
}

/// Source for the chordal example: `w1 ~ {x1, x2}`, `w2 ~ {x3, x4}`, `w3 ~ {x2, x3}`.
pub fn chordal_source() -> SplitGraph {
    SplitGraph::new(3, 4, [(0, 3), (0, 4), (1, 5), (1, 6), (2, 4), (2, 5)])
        .expect("fixture is a connected split graph")
}

/// Chordal-convex image of [`chordal_source`], with budget 2.
pub fn chordal_example() -> ChordalReduction {
    let mut red = reduce_split_to_chordal_convex(&chordal_source()).expect("valid source");
    red.instance.budget = Some(2);
    red
}
