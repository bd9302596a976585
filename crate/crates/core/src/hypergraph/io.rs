//! Text and JSON serialization for hypergraphs.
//!
//! The text format is line-oriented: a `v <count>` header, then one
//! `e <i1> <i2> ..` line per edge; blank lines and lines starting with `#`
//! are ignored. The JSON form is `{"v": <count>, "edges": [[..], ..]}`.
//! Both parsers run every input through [`Hypergraph::build`], so a parsed
//! value satisfies the same invariants as a constructed one, and
//! serialize-then-parse is the identity on valid hypergraphs.

use super::{Hypergraph, HypergraphError};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use thiserror::Error;

/// Parse failures for the text and JSON formats.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] HypergraphError),
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// Renders the line-oriented text form.
pub fn to_hg(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "v {}", h.vertex_count()).unwrap();
    for edge in h.edges() {
        out.push('e');
        for &vertex in edge {
            write!(out, " {vertex}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses the line-oriented text form.
pub fn from_hg(text: &str) -> Result<Hypergraph, FormatError> {
    let mut vertex_count: Option<usize> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for (index, raw_line) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw_line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let directive = tokens.next().expect("non-empty trimmed line");
        match directive {
            "v" => {
                if vertex_count.is_some() {
                    return Err(FormatError::Syntax {
                        line,
                        message: "repeated vertex-count line".into(),
                    });
                }
                let value = tokens.next().ok_or_else(|| FormatError::Syntax {
                    line,
                    message: "expected a count after `v`".into(),
                })?;
                if tokens.next().is_some() {
                    return Err(FormatError::Syntax {
                        line,
                        message: "unexpected tokens after the vertex count".into(),
                    });
                }
                vertex_count = Some(parse_usize(value, line)?);
            }
            "e" => {
                if vertex_count.is_none() {
                    return Err(FormatError::Syntax {
                        line,
                        message: "edge line before the vertex-count line".into(),
                    });
                }
                let edge = tokens
                    .map(|t| parse_usize(t, line))
                    .collect::<Result<Vec<usize>, FormatError>>()?;
                edges.push(edge);
            }
            other => {
                return Err(FormatError::Syntax {
                    line,
                    message: format!("unknown directive `{other}`"),
                });
            }
        }
    }
    let vertex_count = vertex_count.ok_or_else(|| FormatError::Syntax {
        line: text.lines().count() + 1,
        message: "missing `v <count>` line".into(),
    })?;
    Ok(Hypergraph::build(vertex_count, edges)?)
}

fn parse_usize(token: &str, line: usize) -> Result<usize, FormatError> {
    token.parse().map_err(|_| FormatError::Syntax {
        line,
        message: format!("expected a non-negative integer, found `{token}`"),
    })
}

#[derive(Serialize, Deserialize)]
struct JsonRepr {
    v: usize,
    edges: Vec<Vec<usize>>,
}

/// Renders the JSON form (compact, field order fixed).
pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(&JsonRepr {
        v: h.vertex_count(),
        edges: h.edges().to_vec(),
    })
    .expect("hypergraph JSON form always serializes")
}

/// Parses the JSON form.
pub fn from_json(text: &str) -> Result<Hypergraph, FormatError> {
    let repr: JsonRepr =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    Ok(Hypergraph::build(repr.v, repr.edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{generate, Family};
    use proptest::prelude::*;

    #[test]
    fn text_form_round_trips_the_standard_plane() {
        let h = generate(&Family::Fano).unwrap();
        let text = to_hg(&h);
        assert!(text.starts_with("v 7\ne 0 1 2\n"));
        assert_eq!(from_hg(&text).unwrap(), h);
    }

    #[test]
    fn text_parser_skips_comments_and_blank_lines() {
        let h = from_hg("# header\n\nv 4\n# middle\ne 0 1\n\ne 2 3\n").unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn text_parser_reports_syntax_errors_with_line_numbers() {
        match from_hg("v 4\nx 1 2\n").unwrap_err() {
            FormatError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("expected a syntax error, got {other:?}"),
        }
        match from_hg("e 0 1\nv 4\n").unwrap_err() {
            FormatError::Syntax { line, .. } => assert_eq!(line, 1),
            other => panic!("expected a syntax error, got {other:?}"),
        }
        assert!(matches!(from_hg("v 4\ne 0 9\n"), Err(FormatError::Invalid(_))));
    }

    #[test]
    fn json_form_round_trips() {
        let h = generate(&Family::OddCycle { length: 5 }).unwrap();
        let text = to_json(&h);
        assert_eq!(text, r#"{"v":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]}"#);
        assert_eq!(from_json(&text).unwrap(), h);
    }

    #[test]
    fn json_parser_validates_edges() {
        assert!(matches!(
            from_json(r#"{"v":2,"edges":[[0,5]]}"#),
            Err(FormatError::Invalid(_))
        ));
    }

    proptest! {
        /// Serialize-then-parse is the identity, in both formats, for any
        /// buildable hypergraph.
        #[test]
        fn serialization_round_trips(raw in proptest::collection::vec(
            proptest::collection::vec(0usize..9, 1..6),
            0..8,
        )) {
            if let Ok(h) = Hypergraph::build(9, raw) {
                prop_assert_eq!(from_hg(&to_hg(&h)).unwrap(), h.clone());
                prop_assert_eq!(from_json(&to_json(&h)).unwrap(), h);
            }
        }
    }
}
