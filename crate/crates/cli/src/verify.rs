use std::path::Path;

use anyhow::Context;
use serde::Serialize;
use splitsteiner::domination::check_domination;
use splitsteiner::{parse_solution, unreached_terminals, verify_convexity};

use crate::{file_ids, labels, read_instance, to_json, Outcome, EXIT_NO, EXIT_YES};

#[derive(Clone, Debug, Serialize)]
pub struct VerifyDoc {
    pub valid: bool,
    /// `None` without a declared structure.
    pub convex: Option<bool>,
    pub structure: Option<String>,
    pub steiner: bool,
    pub overlaps_terminals: Vec<String>,
    pub unreached: Vec<String>,
    pub unreached_ids: Vec<usize>,
    pub size: usize,
    pub budget: Option<usize>,
    pub within_budget: Option<bool>,
    pub dominating: bool,
    pub connected_dominating: bool,
    pub total_dominating: bool,
    pub problems: Vec<String>,
}

pub fn cmd_verify(instance: &Path, solution: &Path, json: bool) -> anyhow::Result<Outcome> {
    let inst = read_instance(instance)?;
    let g = &inst.graph;
    let text = std::fs::read_to_string(solution)
        .with_context(|| format!("reading {}", solution.display()))?;
    let set = parse_solution(&text, g.order())
        .with_context(|| format!("parsing {}", solution.display()))?;
    let terminals = inst.terminal_vec();
    let mut problems = Vec::new();

    let (structure, convex) = match &inst.structure {
        Some(s) => {
            let report = verify_convexity(g, s)?;
            if !report.valid {
                problems.push(format!("graph is not {}-convex on {}", s.kind(), s.side));
            }
            (
                Some(format!("{} on {}", s.kind(), s.side)),
                Some(report.valid),
            )
        }
        None => (None, None),
    };

    let overlap: Vec<_> = set
        .iter()
        .copied()
        .filter(|v| inst.terminals.contains(v))
        .collect();
    if !overlap.is_empty() {
        problems.push(format!(
            "solution contains terminals {}",
            labels(g, &overlap).join(" ")
        ));
    }
    let rest: Vec<_> = set
        .iter()
        .copied()
        .filter(|v| !inst.terminals.contains(v))
        .collect();
    let unreached = unreached_terminals(g, &terminals, &rest).unwrap_or_default();
    if !unreached.is_empty() {
        problems.push(format!(
            "unreached terminals {}",
            labels(g, &unreached).join(" ")
        ));
    }
    let steiner = overlap.is_empty() && unreached.is_empty();

    let within_budget = inst.budget.map(|k| set.len() <= k);
    if within_budget == Some(false) {
        problems.push(format!(
            "size {} exceeds budget {}",
            set.len(),
            inst.budget.unwrap_or(0)
        ));
    }
    let dom = check_domination(g, &set);
    let doc = VerifyDoc {
        valid: problems.is_empty(),
        convex,
        structure,
        steiner,
        overlaps_terminals: labels(g, &overlap),
        unreached: labels(g, &unreached),
        unreached_ids: file_ids(&unreached),
        size: set.len(),
        budget: inst.budget,
        within_budget,
        dominating: dom.dominating,
        connected_dominating: dom.dominating && dom.connected,
        total_dominating: dom.total,
        problems,
    };
    let code = if doc.valid { EXIT_YES } else { EXIT_NO };
    let stdout = if json { to_json(&doc) } else { render(&doc) };
    Ok(Outcome { stdout, code })
}

fn render(doc: &VerifyDoc) -> String {
    let mut out = String::from(if doc.valid { "valid\n" } else { "invalid\n" });
    if let (Some(s), Some(c)) = (&doc.structure, doc.convex) {
        out += &format!(
            "structure {s}: {}\n",
            if c { "convex" } else { "not convex" }
        );
    }
    out += &format!("steiner   {}\n", doc.steiner);
    if !doc.unreached.is_empty() {
        out += &format!("unreached {}\n", doc.unreached.join(" "));
    }
    out += &format!("size      {}\n", doc.size);
    if let (Some(k), Some(ok)) = (doc.budget, doc.within_budget) {
        out += &format!("budget    {k} ({})\n", if ok { "met" } else { "exceeded" });
    }
    out += &format!(
        "dominating {} connected {} total {}\n",
        doc.dominating, doc.connected_dominating, doc.total_dominating
    );
    for p in &doc.problems {
        out += &format!("problem   {p}\n");
    }
    out
}
