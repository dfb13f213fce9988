use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use splitsteiner::{solve, Method, ProblemInstance, SolveOptions};

use crate::{file_ids, labels, read_instance, to_json, Outcome, EXIT_NO, EXIT_YES};

#[derive(Clone, Debug, Default)]
pub struct SolveArgs {
    pub method: Option<Method>,
    pub cap: Option<usize>,
    pub star_degree: Option<usize>,
    pub json: bool,
}

/// Result document of one solve. Field order is the output key order.
#[derive(Clone, Debug, Serialize)]
pub struct SolveDoc {
    pub instance: String,
    pub requested: String,
    pub method: String,
    pub size: usize,
    pub solution: Vec<usize>,
    pub labels: Vec<String>,
    pub verified: bool,
    pub budget: Option<usize>,
    pub answer: Option<&'static str>,
    pub warnings: Vec<String>,
    pub time_ms: f64,
}

pub fn solve_instance(
    name: &str,
    inst: &ProblemInstance,
    args: &SolveArgs,
) -> splitsteiner::Result<SolveDoc> {
    let requested = args.method.unwrap_or(Method::Auto);
    let mut opts = SolveOptions {
        star_degree: args.star_degree,
        ..SolveOptions::default()
    };
    if let Some(cap) = args.cap {
        opts.cap = cap;
    }
    let start = Instant::now();
    let report = solve(inst, requested, opts)?;
    let time_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    let set = &report.solution.steiner_set;
    Ok(SolveDoc {
        instance: name.to_string(),
        requested: requested.to_string(),
        method: report.solution.method.to_string(),
        size: set.len(),
        solution: file_ids(set),
        labels: labels(&inst.graph, set),
        verified: report.solution.is_valid_for(inst),
        budget: inst.budget,
        answer: report
            .within_budget(inst)
            .map(|yes| if yes { "yes" } else { "no" }),
        warnings: report.warnings,
        time_ms,
    })
}

pub fn cmd_solve(path: &Path, args: &SolveArgs) -> anyhow::Result<Outcome> {
    let inst = read_instance(path)?;
    let doc = solve_instance(&path.display().to_string(), &inst, args)?;
    let code = if doc.answer == Some("no") {
        EXIT_NO
    } else {
        EXIT_YES
    };
    let stdout = if args.json {
        to_json(&doc)
    } else {
        render(&doc)
    };
    Ok(Outcome { stdout, code })
}

fn render(doc: &SolveDoc) -> String {
    let ids: Vec<String> = doc.solution.iter().map(ToString::to_string).collect();
    let mut out = format!(
        "instance  {}\nmethod    {}\nsize      {}\nsolution  {}\nlabels    {}\nverified  {}\n",
        doc.instance,
        doc.method,
        doc.size,
        ids.join(" "),
        doc.labels.join(" "),
        doc.verified,
    );
    if let (Some(k), Some(answer)) = (doc.budget, doc.answer) {
        out += &format!("budget    {k}\nanswer    {answer}\n");
    }
    for w in &doc.warnings {
        out += &format!("warning   {w}\n");
    }
    out += &format!("time_ms   {:.3}\n", doc.time_ms);
    out
}
