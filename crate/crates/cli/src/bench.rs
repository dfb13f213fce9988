use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Context;
use rayon::prelude::*;
use serde::Serialize;
use splitsteiner::oracle::DEFAULT_CAP;
use splitsteiner::{parse_instance, solve, Method, ProblemInstance, SolveOptions};

use crate::{to_json, Outcome};

/// One instance solved by one method.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub method: String,
    pub order: usize,
    pub size: Option<usize>,
    pub time_ms: Option<f64>,
    pub optimum: Option<usize>,
    pub gap: Option<usize>,
    pub ratio: Option<f64>,
    /// `2 - 1/|I|` for approximation rows.
    pub ratio_bound: Option<f64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub max_ratio: Option<f64>,
}

pub fn default_methods() -> Vec<Method> {
    vec![Method::Auto, Method::Approx]
}

/// Instance files (`*.split`) in `dir`, sorted by file name.
pub fn corpus(dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "split"))
        .collect();
    files.sort();
    Ok(files)
}

pub fn bench_files(files: &[PathBuf], methods: &[Method], cap: usize) -> BenchReport {
    let mut rows: Vec<BenchRow> = files
        .par_iter()
        .flat_map_iter(|path| bench_one(path, methods, cap))
        .collect();
    let rank = |m: &str| {
        methods
            .iter()
            .position(|x| x.as_str() == m)
            .unwrap_or(usize::MAX)
    };
    rows.sort_by(|a, b| {
        a.instance
            .cmp(&b.instance)
            .then(rank(&a.method).cmp(&rank(&b.method)))
    });
    let max_ratio = rows.iter().filter_map(|r| r.ratio).reduce(f64::max);
    BenchReport { rows, max_ratio }
}

fn bench_one(path: &Path, methods: &[Method], cap: usize) -> Vec<BenchRow> {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let failed = |method: &str, order: usize, e: String| BenchRow {
        instance: name.clone(),
        method: method.to_string(),
        order,
        size: None,
        time_ms: None,
        optimum: None,
        gap: None,
        ratio: None,
        ratio_bound: None,
        error: Some(e),
    };
    let inst = match std::fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|t| parse_instance(&t).map_err(|e| e.to_string()))
    {
        Ok(inst) => inst,
        Err(e) => return vec![failed("-", 0, e)],
    };
    let order = inst.graph.order();
    let opts = SolveOptions {
        cap,
        ..SolveOptions::default()
    };
    let optimum = (order <= cap)
        .then(|| {
            solve(&inst, Method::Oracle, opts)
                .ok()
                .map(|r| r.solution.size())
        })
        .flatten();
    methods
        .iter()
        .map(|&method| {
            let start = Instant::now();
            match solve(&inst, method, opts) {
                Ok(report) => {
                    let size = report.solution.size();
                    let approx = method == Method::Approx;
                    BenchRow {
                        instance: name.clone(),
                        method: method.to_string(),
                        order,
                        size: Some(size),
                        time_ms: Some((start.elapsed().as_secs_f64() * 1e6).round() / 1e3),
                        optimum,
                        gap: optimum.map(|o| size.saturating_sub(o)),
                        ratio: if approx {
                            optimum.and_then(|o| ratio(size, o))
                        } else {
                            None
                        },
                        ratio_bound: approx.then(|| ratio_bound(&inst)),
                        error: None,
                    }
                }
                Err(e) => failed(method.as_str(), order, e.to_string()),
            }
        })
        .collect()
}

fn ratio(size: usize, optimum: usize) -> Option<f64> {
    match (size, optimum) {
        (0, 0) => Some(1.0),
        (_, 0) => None,
        _ => Some(size as f64 / optimum as f64),
    }
}

fn ratio_bound(inst: &ProblemInstance) -> f64 {
    2.0 - 1.0 / inst.graph.n_independent().max(1) as f64
}

pub fn cmd_bench(
    dir: &Path,
    methods: &[Method],
    cap: Option<usize>,
    json: bool,
) -> anyhow::Result<Outcome> {
    let files = corpus(dir)?;
    let report = bench_files(&files, methods, cap.unwrap_or(DEFAULT_CAP));
    Ok(Outcome::ok(if json {
        to_json(&report)
    } else {
        render(&report)
    }))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn render(report: &BenchReport) -> String {
    let mut out = format!(
        "{:<32} {:<12} {:>5} {:>5} {:>10} {:>5} {:>4} {:>6} {:>6}  error\n",
        "instance", "method", "order", "size", "time_ms", "opt", "gap", "ratio", "bound"
    );
    for r in &report.rows {
        out += &format!(
            "{:<32} {:<12} {:>5} {:>5} {:>10} {:>5} {:>4} {:>6} {:>6}  {}\n",
            r.instance,
            r.method,
            r.order,
            opt(r.size),
            opt(r.time_ms.map(|t| format!("{t:.3}"))),
            opt(r.optimum),
            opt(r.gap),
            opt(r.ratio.map(|x| format!("{x:.3}"))),
            opt(r.ratio_bound.map(|x| format!("{x:.3}"))),
            r.error.as_deref().unwrap_or(""),
        );
    }
    if let Some(x) = report.max_ratio {
        out += &format!("max approx ratio {x:.3}\n");
    }
    out
}
