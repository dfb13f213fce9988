//! Commands behind the `splitsteiner` binary. Each command returns an [`Outcome`]
//! holding the text for standard output and the process exit code.

pub mod bench;
pub mod generate;
pub mod solve;
pub mod verify;

use std::path::Path;

use anyhow::Context;
use splitsteiner::{parse_instance, ProblemInstance, SplitGraph, Vertex};

/// Exit code for a yes answer or a valid solution.
pub const EXIT_YES: i32 = 0;
/// Exit code for a budgeted no answer or an invalid solution.
pub const EXIT_NO: i32 = 1;
/// Exit code for any error.
pub const EXIT_ERROR: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            code: EXIT_YES,
        }
    }
}

pub fn read_instance(path: &Path) -> anyhow::Result<ProblemInstance> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

/// One-based file ids.
pub(crate) fn file_ids(set: &[Vertex]) -> Vec<usize> {
    set.iter().map(|&v| v + 1).collect()
}

pub(crate) fn labels(g: &SplitGraph, set: &[Vertex]) -> Vec<String> {
    set.iter().map(|&v| g.label(v)).collect()
}

pub(crate) fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
