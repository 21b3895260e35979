//! Graph text formats: whitespace edge lists and a small JSON document.
//!
//! Edge list: one `u v` pair per line, `#` starts a comment line, and an
//! optional leading `n <count>` header declares the order (needed only for
//! isolated vertices — without it the order is the largest index plus one).
//!
//! JSON: `{"n": 5, "edges": [[0,1],[1,2]]}`.
//!
//! Both serializers emit edges sorted `(u, v)` with `u < v`, so output is
//! canonical and `parse` round-trips exactly.

use crate::error::Error;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Parses either format, auto-detected: JSON if the text starts with `{`,
    /// otherwise an edge list.
    pub fn parse(text: &str) -> Result<Graph, Error> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_edge_list(text)
        }
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
        let mut declared_n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut max_index: Option<usize> = None;
        let mut saw_data_line = false;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let first = tokens.next().expect("non-empty line has a token");

            if first == "n" {
                if saw_data_line || declared_n.is_some() {
                    return Err(Error::Syntax {
                        line: line_no,
                        msg: "header 'n <count>' must be the first data line".into(),
                    });
                }
                let count = tokens
                    .next()
                    .ok_or_else(|| Error::Syntax {
                        line: line_no,
                        msg: "header 'n' needs a count".into(),
                    })?
                    .parse::<usize>()
                    .map_err(|e| Error::Syntax {
                        line: line_no,
                        msg: format!("bad vertex count: {e}"),
                    })?;
                if tokens.next().is_some() {
                    return Err(Error::Syntax {
                        line: line_no,
                        msg: "header has trailing tokens".into(),
                    });
                }
                if count == 0 {
                    return Err(Error::Syntax {
                        line: line_no,
                        msg: "vertex count must be at least 1".into(),
                    });
                }
                declared_n = Some(count);
                continue;
            }

            saw_data_line = true;
            let second = tokens.next().ok_or_else(|| Error::Syntax {
                line: line_no,
                msg: "expected two vertex indices".into(),
            })?;
            if tokens.next().is_some() {
                return Err(Error::Syntax {
                    line: line_no,
                    msg: "expected exactly two vertex indices".into(),
                });
            }
            let parse_vertex = |tok: &str| {
                tok.parse::<usize>().map_err(|e| Error::Syntax {
                    line: line_no,
                    msg: format!("bad vertex index '{tok}': {e}"),
                })
            };
            let u = parse_vertex(first)?;
            let v = parse_vertex(second)?;
            max_index = Some(max_index.map_or(u.max(v), |m: usize| m.max(u.max(v))));
            edges.push((u, v));
        }

        let n = match (declared_n, max_index) {
            (Some(n), _) => n,
            (None, Some(m)) => m + 1,
            (None, None) => {
                return Err(Error::Syntax {
                    line: 1,
                    msg: "empty input: no header and no edges".into(),
                })
            }
        };
        Graph::from_edges(n, &edges)
    }

    pub fn parse_json(text: &str) -> Result<Graph, Error> {
        let doc: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Syntax {
            line: e.line(),
            msg: e.to_string(),
        })?;
        Graph::from_edges(doc.n, &doc.edges)
    }

    /// Canonical edge-list form, header always included.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Canonical JSON form with sorted edges.
    pub fn to_json_string(&self) -> String {
        let doc = JsonGraph {
            n: self.n(),
            edges: self.edges(),
        };
        serde_json::to_string(&doc).expect("graph document serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_edge_list() {
        let g = Graph::parse("0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn comments_blanks_and_header() {
        let g = Graph::parse("# a path plus an isolated vertex\nn 4\n\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn header_only_is_edgeless() {
        let g = Graph::parse("n 1\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        match Graph::parse("0 1\nnot an edge\n") {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match Graph::parse("0 1 2\n") {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(Graph::parse(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn structural_errors() {
        assert_eq!(Graph::parse("0 0\n"), Err(Error::SelfLoop { vertex: 0 }));
        assert_eq!(
            Graph::parse("0 1\n1 0\n"),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::parse("n 2\n0 5\n"),
            Err(Error::VertexOutOfRange { index: 5, n: 2 })
        );
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::parse("{\"n\": 4, \"edges\": [[0,1],[1,2],[2,3]]}").unwrap();
        assert_eq!(g.n(), 4);
        let again = Graph::parse(&g.to_json_string()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn edge_list_round_trip_preserves_isolated() {
        let g = Graph::parse("n 5\n1 2\n3 4\n").unwrap();
        let text = g.to_edge_list_string();
        assert_eq!(text, "n 5\n1 2\n3 4\n");
        assert_eq!(Graph::parse(&text).unwrap(), g);
    }

    #[test]
    fn serializer_sorts_edges() {
        let g = Graph::from_edges(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(g.to_edge_list_string(), "n 3\n0 1\n1 2\n");
        assert_eq!(g.to_json_string(), "{\"n\":3,\"edges\":[[0,1],[1,2]]}");
    }
}
