//! DIMACS edge format: a `p edge <n> <m>` header followed by `e <u> <v>`
//! lines with 1-indexed endpoints. `c` comment lines are accepted on input.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

fn field(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    match tok {
        Some(t) => t
            .parse()
            .or_else(|_| err(line, format!("bad {what} `{t}`"))),
        None => err(line, format!("missing {what}")),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return err(line, "duplicate header");
                }
                if toks.next() != Some("edge") {
                    return err(line, "header must read `p edge <n> <m>`");
                }
                let n = field(line, toks.next(), "vertex count")?;
                let m = field(line, toks.next(), "edge count")?;
                if toks.next().is_some() {
                    return err(line, "trailing tokens in header");
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return err(line, "edge before header");
                };
                let u = field(line, toks.next(), "endpoint")?;
                let v = field(line, toks.next(), "endpoint")?;
                if toks.next().is_some() {
                    return err(line, "trailing tokens in edge line");
                }
                if u == 0 || v == 0 || u > n || v > n {
                    return err(line, format!("vertex id out of range 1..={n}"));
                }
                if u == v {
                    return err(line, format!("self-loop at vertex {u}"));
                }
                let key = (u.min(v) - 1, u.max(v) - 1);
                if !seen.insert(key) {
                    return err(line, format!("duplicate edge {u} {v}"));
                }
                edges.push(key);
            }
            Some(t) => return err(line, format!("unknown line type `{t}`")),
        }
    }

    let Some((n, m)) = header else {
        return err(last_line.max(1), "missing `p edge` header");
    };
    if edges.len() != m {
        return err(
            last_line.max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        );
    }
    Graph::from_edges(n, edges)
}

/// Canonical form: header, then edges sorted with `u < v`, LF endings, no
/// comments.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn k2_both_ways() {
        let g = parse_graph("p edge 2 1\ne 1 2").unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!(serialize_graph(&g), "p edge 2 1\ne 1 2\n");
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("c hello\n\np edge 3 2\ne 2 1\nc mid\ne 3 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn self_loop_rejected() {
        let e = parse_graph("p edge 2 1\ne 1 1").unwrap_err();
        assert_eq!(line_of(e), 2);
        assert!(parse_graph("e 1 1").is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of(parse_graph("p edge 3 2\ne 1 2\ne 2 1").unwrap_err()), 3);
        assert_eq!(line_of(parse_graph("p edge 3 1\ne 1 4").unwrap_err()), 2);
        assert_eq!(line_of(parse_graph("p edge 3 1\ne 0 1").unwrap_err()), 2);
        assert_eq!(line_of(parse_graph("p col 3 1").unwrap_err()), 1);
        assert_eq!(line_of(parse_graph("p edge x 1").unwrap_err()), 1);
        assert_eq!(line_of(parse_graph("p edge 3 2\ne 1 2").unwrap_err()), 2);
        assert_eq!(line_of(parse_graph("c only\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_graph("p edge 2 0\nx 1 2").unwrap_err()), 2);
    }

    #[test]
    fn serialized_edges_are_sorted() {
        let g = Graph::from_edges(4, [(3, 2), (0, 3), (1, 0)]).unwrap();
        assert_eq!(serialize_graph(&g), "p edge 4 3\ne 1 2\ne 1 4\ne 3 4\n");
    }
}
