//! Seeded instance families for the solver benchmarks.

use splitsteiner::generate::{
    random_convex_instance, random_split_graph, random_triad_instance, seeded,
};
use splitsteiner::{Kind, ProblemInstance, Side, SplitGraph};

/// Convex instance with `R = I`; every vertex sees at most `max_piece` of the layout.
pub fn convex(
    kind: Kind,
    side: Side,
    m: usize,
    n: usize,
    max_piece: usize,
    seed: u64,
) -> ProblemInstance {
    random_convex_instance(&mut seeded(seed), kind, side, m, n, max_piece)
        .expect("valid generator parameters")
}

/// Triad-convex on `I` with three legs of length `leg`.
pub fn triad(m: usize, leg: usize, max_piece: usize, seed: u64) -> ProblemInstance {
    random_triad_instance(&mut seeded(seed), m, [leg; 3], max_piece)
        .expect("valid generator parameters")
}

/// Unstructured split graph for the parameterized and approximate solvers.
pub fn unstructured(m: usize, n: usize, p: f64, seed: u64) -> SplitGraph {
    random_split_graph(&mut seeded(seed), m, n, p).expect("valid generator parameters")
}

/// Sizes used across the polynomial solver groups.
pub const SIZES: [usize; 3] = [16, 64, 256];

#[cfg(test)]
mod tests {
    use super::*;
    use splitsteiner::verify_convexity;

    #[test]
    fn families_are_convex() {
        for kind in [Kind::Path, Kind::Cycle, Kind::Star, Kind::Tree] {
            let inst = convex(kind, Side::Independent, 10, 12, 4, 1);
            assert!(
                verify_convexity(&inst.graph, inst.structure.as_ref().unwrap())
                    .unwrap()
                    .valid
            );
        }
        let inst = triad(8, 3, 3, 2);
        assert_eq!(inst.graph.n_independent(), 10);
    }

    #[test]
    fn seeds_are_reproducible() {
        assert_eq!(unstructured(5, 7, 0.3, 9), unstructured(5, 7, 0.3, 9));
    }
}
