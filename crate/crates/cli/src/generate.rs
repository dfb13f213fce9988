use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context};
use rand_chacha::ChaCha8Rng;
use splitsteiner::generate::{
    planted_x3c, random_convex_instance, random_split_graph, random_star_bounded,
    random_triad_instance, random_vc, random_x3c, seeded,
};
use splitsteiner::reductions::{VcInstance, X3cInstance};
use splitsteiner::{
    emit_instance, reduce_split_to_chordal_convex, reduce_vertex_cover, reduce_x3c,
    verify_convexity, Kind, ProblemInstance, Side,
};

use crate::{read_instance, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    RandomPath,
    RandomTriad,
    RandomCircularI,
    RandomCircularK,
    RandomTreeK,
    RandomStar,
    RandomComb,
    FromX3c,
    FromVc,
    ToChordal,
}

impl GenKind {
    pub const ALL: [GenKind; 10] = [
        GenKind::RandomPath,
        GenKind::RandomTriad,
        GenKind::RandomCircularI,
        GenKind::RandomCircularK,
        GenKind::RandomTreeK,
        GenKind::RandomStar,
        GenKind::RandomComb,
        GenKind::FromX3c,
        GenKind::FromVc,
        GenKind::ToChordal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GenKind::RandomPath => "random-path",
            GenKind::RandomTriad => "random-triad",
            GenKind::RandomCircularI => "random-circular-i",
            GenKind::RandomCircularK => "random-circular-k",
            GenKind::RandomTreeK => "random-tree-k",
            GenKind::RandomStar => "random-star",
            GenKind::RandomComb => "random-comb",
            GenKind::FromX3c => "from-x3c",
            GenKind::FromVc => "from-vc",
            GenKind::ToChordal => "to-chordal",
        }
    }
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<_> = GenKind::ALL.iter().map(|k| k.as_str()).collect();
                format!(
                    "unknown generator `{s}`; expected one of {}",
                    names.join(", ")
                )
            })
    }
}

/// Generator parameters; unset sizes get small defaults.
#[derive(Clone, Debug, Default)]
pub struct GenParams {
    /// `example`, `random` or `planted` for the reductions.
    pub variant: Option<String>,
    pub seed: u64,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub max_piece: Option<usize>,
    pub legs: Option<Vec<usize>>,
    pub degree: Option<usize>,
    pub q: Option<usize>,
    pub sets: Option<usize>,
    pub extra: Option<usize>,
    pub p: Option<f64>,
    pub k: Option<usize>,
    pub budget: Option<usize>,
    pub source: Option<PathBuf>,
}

pub fn generate(
    kind: GenKind,
    params: &GenParams,
    rng: &mut ChaCha8Rng,
) -> anyhow::Result<ProblemInstance> {
    let m = params.m.unwrap_or(5);
    let n = params.n.unwrap_or(8);
    let piece = params.max_piece.unwrap_or(3);
    let convex =
        |rng: &mut ChaCha8Rng, kind, side| random_convex_instance(rng, kind, side, m, n, piece);
    let mut inst = match kind {
        GenKind::RandomPath => convex(rng, Kind::Path, Side::Independent)?,
        GenKind::RandomCircularI => convex(rng, Kind::Cycle, Side::Independent)?,
        GenKind::RandomCircularK => convex(rng, Kind::Cycle, Side::Clique)?,
        GenKind::RandomTreeK => convex(rng, Kind::Tree, Side::Clique)?,
        GenKind::RandomComb => convex(rng, Kind::Comb, Side::Independent)?,
        GenKind::RandomStar => match params.degree {
            Some(d) => random_star_bounded(rng, m, n, piece, d)?,
            None => convex(rng, Kind::Star, Side::Independent)?,
        },
        GenKind::RandomTriad => {
            let legs = match params.legs.as_deref() {
                None => [2, 2, 2],
                Some(&[l]) => [l; 3],
                Some(&[a, b, c]) => [a, b, c],
                Some(other) => bail!("--legs takes one or three lengths, got {}", other.len()),
            };
            if let Some(l) = legs.iter().find(|&&l| l < 2) {
                bail!("triad legs need at least 2 vertices, got {l}");
            }
            random_triad_instance(rng, m, legs, piece)?
        }
        GenKind::FromX3c => {
            let x3c = match params.variant.as_deref().unwrap_or("example") {
                "example" => X3cInstance::example(),
                "random" => {
                    // an uncovered element has no neighbor in the image, so redraw
                    let (q, sets) = (params.q.unwrap_or(2), params.sets.unwrap_or(5));
                    let covers_all = |x: &X3cInstance| {
                        (0..x.ground).all(|e| x.sets.iter().any(|s| s.contains(&e)))
                    };
                    let mut x3c = random_x3c(rng, q, sets)?;
                    for _ in 0..1000 {
                        if covers_all(&x3c) {
                            break;
                        }
                        x3c = random_x3c(rng, q, sets)?;
                    }
                    if !covers_all(&x3c) {
                        bail!("{sets} random triples never covered all {} elements", 3 * q);
                    }
                    x3c
                }
                "planted" => planted_x3c(rng, params.q.unwrap_or(2), params.extra.unwrap_or(3))?,
                other => bail!("unknown from-x3c variant `{other}`"),
            };
            reduce_x3c(&x3c)?.instance
        }
        GenKind::FromVc => {
            let vc = match params.variant.as_deref().unwrap_or("example") {
                "example" => VcInstance::example(),
                "random" => {
                    let vertices = params.n.unwrap_or(5);
                    random_vc(
                        rng,
                        vertices,
                        params.p.unwrap_or(0.5),
                        params.k.unwrap_or(vertices / 2),
                    )?
                }
                other => bail!("unknown from-vc variant `{other}`"),
            };
            reduce_vertex_cover(&vc)?.instance
        }
        GenKind::ToChordal => {
            let source = match &params.source {
                Some(path) => read_instance(path)?.graph,
                None => random_split_graph(rng, m, n, params.p.unwrap_or(0.4))?,
            };
            reduce_split_to_chordal_convex(&source)?.instance
        }
    };
    if let Some(b) = params.budget {
        if b > inst.graph.order() {
            bail!(
                "budget {b} exceeds the number of vertices {}",
                inst.graph.order()
            );
        }
        inst.budget = Some(b);
    }
    if let Some(s) = &inst.structure {
        if !verify_convexity(&inst.graph, s)?.valid {
            bail!("generated instance failed its convexity check");
        }
    }
    Ok(inst)
}

/// Writes `count` instances. A single instance goes to `out` or standard output; several
/// go to `out` as a directory, named `<kind>-<seed>.split` with consecutive seeds.
pub fn cmd_generate(
    kind: GenKind,
    params: &GenParams,
    count: usize,
    out: Option<&Path>,
) -> anyhow::Result<Outcome> {
    if count == 0 {
        bail!("--count must be positive");
    }
    if count == 1 {
        let inst = generate(kind, params, &mut seeded(params.seed))?;
        let text = emit_instance(&inst);
        return match out {
            Some(path) => {
                std::fs::write(path, text)
                    .with_context(|| format!("writing {}", path.display()))?;
                Ok(Outcome::ok(format!("{}\n", path.display())))
            }
            None => Ok(Outcome::ok(text)),
        };
    }
    let Some(dir) = out else {
        bail!("--count above 1 needs --out <directory>")
    };
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut listing = String::new();
    for i in 0..count as u64 {
        let seed = params.seed.wrapping_add(i);
        let inst = generate(kind, params, &mut seeded(seed))?;
        let path = dir.join(format!("{}-{seed}.split", kind.as_str()));
        std::fs::write(&path, emit_instance(&inst))
            .with_context(|| format!("writing {}", path.display()))?;
        listing += &format!("{}\n", path.display());
    }
    Ok(Outcome::ok(listing))
}
