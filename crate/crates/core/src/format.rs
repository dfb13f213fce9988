//! Line-oriented text format for instances and solutions. Files use one-based ids:
//! clique vertices `1..=m`, independent vertices `m+1..=m+n`.
//!
//! ```text
//! split 3 4
//! e 1 4
//! e 1 5
//! structure path on I
//! order 4 5 6 7
//! terminals I
//! budget 2
//! ```

use std::fmt::Write as _;

use crate::convexity::{ConvexStructure, Kind, Layout};
use crate::error::{Error, Result};
use crate::graph::{Side, SplitGraph, Vertex};
use crate::instance::ProblemInstance;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

struct Ids {
    order: usize,
    line: usize,
}

impl Ids {
    fn one(&self, token: &str) -> Result<Vertex> {
        let id: usize = token
            .parse()
            .map_err(|_| parse_err(self.line, format!("`{token}` is not a vertex id")))?;
        if id == 0 || id > self.order {
            return Err(parse_err(
                self.line,
                format!("vertex {id} is outside 1..={}", self.order),
            ));
        }
        Ok(id - 1)
    }

    fn many<'a>(&self, tokens: impl IntoIterator<Item = &'a str>) -> Result<Vec<Vertex>> {
        tokens.into_iter().map(|t| self.one(t)).collect()
    }
}

fn parse_side(line: usize, token: Option<&str>) -> Result<Side> {
    match token {
        Some("K") => Ok(Side::Clique),
        Some("I") => Ok(Side::Independent),
        other => Err(parse_err(line, format!("expected K or I, found {other:?}"))),
    }
}

pub fn parse_instance(text: &str) -> Result<ProblemInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut structure: Option<(usize, Kind, Side)> = None;
    let mut layout: Option<Layout> = None;
    let mut chordal_edges = Vec::new();
    let mut terminals: Option<Vec<Vertex>> = None;
    let mut budget = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let directive = tokens.next().expect("nonempty line");
        if directive == "split" {
            if header.is_some() {
                return Err(parse_err(line, "second `split` header"));
            }
            let nums: Vec<usize> = tokens
                .map(|t| {
                    t.parse()
                        .map_err(|_| parse_err(line, format!("`{t}` is not a count")))
                })
                .collect::<Result<_>>()?;
            let [m, n] = nums[..] else {
                return Err(parse_err(line, "expected `split <m> <n>`"));
            };
            header = Some((m, n));
            continue;
        }
        let Some((m, n)) = header else {
            return Err(parse_err(line, "missing `split <m> <n>` header"));
        };
        let ids = Ids { order: m + n, line };
        let rest: Vec<&str> = tokens.collect();
        let set_layout = |layout: &mut Option<Layout>, kind: Kind, new: Layout| -> Result<()> {
            match structure {
                None => Err(parse_err(line, "layout line before `structure`")),
                Some((_, k, _)) if k != kind => Err(parse_err(
                    line,
                    format!("{kind} layout for a {k} structure"),
                )),
                Some(_) if layout.is_some() => Err(parse_err(line, "second layout line")),
                Some(_) => {
                    *layout = Some(new);
                    Ok(())
                }
            }
        };
        match directive {
            "e" => {
                let [u, v] = ids.many(rest.iter().copied())?[..] else {
                    return Err(parse_err(line, "expected `e <u> <v>`"));
                };
                match (u < m, v < m) {
                    (true, true) => {} // clique edges are implicit
                    (false, false) => {
                        return Err(parse_err(line, "edge between two independent vertices"));
                    }
                    _ => edges.push((u.min(v), u.max(v))),
                }
            }
            "structure" => {
                if structure.is_some() {
                    return Err(parse_err(line, "second `structure` line"));
                }
                let [kind, on, side] = rest[..] else {
                    return Err(parse_err(line, "expected `structure <kind> on <K|I>`"));
                };
                if on != "on" {
                    return Err(parse_err(line, "expected `on`"));
                }
                let kind: Kind = kind
                    .parse()
                    .map_err(|e: Error| parse_err(line, e.to_string()))?;
                structure = Some((line, kind, parse_side(line, Some(side))?));
            }
            "order" => {
                let order = ids.many(rest.iter().copied())?;
                let new = match structure.map(|s| s.1) {
                    Some(Kind::Cycle) => Layout::Cycle(order),
                    _ => Layout::Path(order),
                };
                let kind = new.kind();
                set_layout(&mut layout, kind, new)?;
            }
            "tree" => {
                let parent = rest
                    .iter()
                    .map(|&t| {
                        if t == "0" {
                            Ok(None)
                        } else {
                            ids.one(t).map(Some)
                        }
                    })
                    .collect::<Result<_>>()?;
                set_layout(&mut layout, Kind::Tree, Layout::Tree { parent })?;
            }
            "star" => {
                let ["root", root] = rest[..] else {
                    return Err(parse_err(line, "expected `star root <v>`"));
                };
                set_layout(
                    &mut layout,
                    Kind::Star,
                    Layout::Star {
                        root: ids.one(root)?,
                    },
                )?;
            }
            "comb" => {
                let split = rest.iter().position(|&t| t == "teeth");
                let (Some(&"backbone"), Some(split)) = (rest.first(), split) else {
                    return Err(parse_err(line, "expected `comb backbone ... teeth ...`"));
                };
                let backbone = ids.many(rest[1..split].iter().copied())?;
                let teeth = ids.many(rest[split + 1..].iter().copied())?;
                set_layout(&mut layout, Kind::Comb, Layout::Comb { backbone, teeth })?;
            }
            "triad" => {
                let (Some(&"root"), Some(root), Some(&"legs")) =
                    (rest.first(), rest.get(1), rest.get(2))
                else {
                    return Err(parse_err(
                        line,
                        "expected `triad root <v> legs <a ..> | <b ..> | <c ..>`",
                    ));
                };
                let root = ids.one(root)?;
                let legs: Vec<Vec<Vertex>> = rest[3..]
                    .split(|&t| t == "|")
                    .map(|leg| ids.many(leg.iter().copied()))
                    .collect::<Result<_>>()?;
                let legs: [Vec<Vertex>; 3] = legs
                    .try_into()
                    .map_err(|_| parse_err(line, "a triad has exactly three legs"))?;
                set_layout(&mut layout, Kind::Triad, Layout::Triad { root, legs })?;
            }
            "chordal" => {
                let ["e", u, v] = rest[..] else {
                    return Err(parse_err(line, "expected `chordal e <u> <v>`"));
                };
                match structure {
                    Some((_, Kind::Chordal, _)) => chordal_edges.push((ids.one(u)?, ids.one(v)?)),
                    _ => {
                        return Err(parse_err(
                            line,
                            "`chordal` line without a chordal structure",
                        ))
                    }
                }
            }
            "terminals" => {
                if terminals.is_some() {
                    return Err(parse_err(line, "second `terminals` line"));
                }
                terminals = Some(if rest == ["I"] {
                    (m..m + n).collect()
                } else {
                    ids.many(rest.iter().copied())?
                });
            }
            "budget" => {
                let [k] = rest[..] else {
                    return Err(parse_err(line, "expected `budget <k>`"));
                };
                budget = Some(
                    k.parse()
                        .map_err(|_| parse_err(line, format!("`{k}` is not a budget")))?,
                );
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }

    let (m, n) = header.ok_or_else(|| parse_err(0, "missing `split <m> <n>` header"))?;
    let structure = match structure {
        None => None,
        Some((_, Kind::Chordal, side)) => Some(ConvexStructure::new(
            side,
            Layout::Chordal {
                edges: chordal_edges,
            },
        )),
        Some((line, kind, side)) => {
            let layout = layout.ok_or_else(|| {
                parse_err(line, format!("{kind} structure without a layout line"))
            })?;
            Some(ConvexStructure::new(side, layout))
        }
    };
    let graph = SplitGraph::new(m, n, edges)?;
    let terminals = terminals.unwrap_or_else(|| (m..m + n).collect());
    ProblemInstance::new(graph, structure, terminals, budget)
}

fn ids_line(out: &mut String, vs: &[Vertex]) {
    for v in vs {
        write!(out, " {}", v + 1).unwrap();
    }
}

pub fn emit_instance(instance: &ProblemInstance) -> String {
    let g = &instance.graph;
    let mut out = format!("split {} {}\n", g.n_clique(), g.n_independent());
    for (u, x) in g.cross_edges() {
        writeln!(out, "e {} {}", u + 1, x + 1).unwrap();
    }
    if let Some(s) = &instance.structure {
        writeln!(out, "structure {} on {}", s.kind(), s.side).unwrap();
        match &s.layout {
            Layout::Path(order) | Layout::Cycle(order) => {
                out.push_str("order");
                ids_line(&mut out, order);
                out.push('\n');
            }
            Layout::Star { root } => writeln!(out, "star root {}", root + 1).unwrap(),
            Layout::Comb { backbone, teeth } => {
                out.push_str("comb backbone");
                ids_line(&mut out, backbone);
                out.push_str(" teeth");
                ids_line(&mut out, teeth);
                out.push('\n');
            }
            Layout::Triad { root, legs } => {
                write!(out, "triad root {} legs", root + 1).unwrap();
                for (i, leg) in legs.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" |");
                    }
                    ids_line(&mut out, leg);
                }
                out.push('\n');
            }
            Layout::Tree { parent } => {
                out.push_str("tree");
                for p in parent {
                    write!(out, " {}", p.map_or(0, |p| p + 1)).unwrap();
                }
                out.push('\n');
            }
            Layout::Chordal { edges } => {
                for (u, v) in edges {
                    writeln!(out, "chordal e {} {}", u + 1, v + 1).unwrap();
                }
            }
        }
    }
    if instance.terminals_are_independent_set() && g.n_independent() > 0 {
        out.push_str("terminals I\n");
    } else {
        out.push_str("terminals");
        ids_line(&mut out, &instance.terminal_vec());
        out.push('\n');
    }
    if let Some(k) = instance.budget {
        writeln!(out, "budget {k}").unwrap();
    }
    out
}

/// Solution files hold one-based ids separated by whitespace, optionally after a
/// `steiner` keyword; `#` starts a comment.
pub fn parse_solution(text: &str, order: usize) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ids = Ids { order, line: i + 1 };
        let content = raw.split('#').next().unwrap_or("");
        for token in content.split_whitespace().filter(|&t| t != "steiner") {
            out.push(ids.one(token)?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn emit_solution(steiner: &[Vertex]) -> String {
    let mut out = String::from("steiner");
    ids_line(&mut out, steiner);
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip_fixtures() {
        let mut budgeted = fixtures::vc_example();
        budgeted.budget = Some(2);
        for inst in [
            fixtures::p1(),
            fixtures::x3c_example(),
            budgeted,
            fixtures::chordal_example().instance,
        ] {
            let text = emit_instance(&inst);
            assert_eq!(parse_instance(&text).unwrap(), inst, "{text}");
        }
    }

    #[test]
    fn p1_text() {
        let text = emit_instance(&fixtures::p1());
        assert_eq!(
            text,
            "split 3 4\ne 1 4\ne 1 5\ne 2 5\ne 2 6\ne 2 7\ne 3 6\nstructure path on I\norder 4 5 6 7\nterminals I\n"
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_instance("split 1 1\ne 1 2\nfrobnicate\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                msg: "unknown directive `frobnicate`".into()
            }
        );
        assert!(matches!(
            parse_instance("e 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_instance("split 1 2\ne 2 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance("split 1 1\ne 1 9\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance("split 1 1\ne 1 2\norder 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn disconnected_file() {
        assert_eq!(
            parse_instance("split 1 2\ne 1 2\n"),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn triad_and_tree_layouts() {
        let text = "split 7 1\ne 1 8\nstructure triad on K\ntriad root 1 legs 2 3 | 4 5 | 6 7\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.structure.as_ref().unwrap().kind(), Kind::Triad);
        assert_eq!(parse_instance(&emit_instance(&inst)).unwrap(), inst);
        let text = "split 3 1\ne 2 4\nstructure tree on K\ntree 0 1 1\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(parse_instance(&emit_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn solutions() {
        assert_eq!(parse_solution("steiner 2 5\n", 12).unwrap(), vec![1, 4]);
        assert_eq!(
            parse_solution("# nothing\n", 12).unwrap(),
            Vec::<Vertex>::new()
        );
        assert_eq!(emit_solution(&[1, 4]), "steiner 2 5\n");
        assert!(parse_solution("13", 12).is_err());
    }
}
