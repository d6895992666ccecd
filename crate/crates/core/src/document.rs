//! Text formats for colorings: a JSON document and a DOT graph export.
//!
//! The JSON writer emits the fields in the order `n`, `k`, `classes`, `meta`
//! and puts one class per line, so identical colorings produce identical
//! bytes and fixtures diff cleanly.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphcore::{Edge, EdgeColoring};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("document declares k = {declared} but lists {actual} classes")]
    ClassCount { declared: usize, actual: usize },
    #[error("class {class} contains the loop [{vertex}, {vertex}]")]
    Loop { class: usize, vertex: u32 },
}

/// Where a coloring came from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tool_version: Option<String>,
}

impl Meta {
    fn is_empty(&self) -> bool {
        self.construction.is_none() && self.q.is_none() && self.tool_version.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub n: usize,
    pub k: usize,
    pub classes: Vec<Vec<[u32; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

impl ColoringDocument {
    pub fn from_coloring(c: &EdgeColoring, meta: Option<Meta>) -> Self {
        Self {
            n: c.n(),
            k: c.k(),
            classes: c
                .classes()
                .iter()
                .map(|class| class.iter().map(|e| [e.u(), e.v()]).collect())
                .collect(),
            meta: meta.filter(|m| !m.is_empty()),
        }
    }

    /// Converts to an unvalidated coloring. Pairs are canonicalized to
    /// `u < v`; range, duplicate and coverage problems are left to
    /// `verify_coloring`.
    pub fn to_coloring(&self) -> Result<EdgeColoring, DocumentError> {
        if self.k != self.classes.len() {
            return Err(DocumentError::ClassCount {
                declared: self.k,
                actual: self.classes.len(),
            });
        }
        let mut classes = Vec::with_capacity(self.classes.len());
        for (i, class) in self.classes.iter().enumerate() {
            let edges = class
                .iter()
                .map(|&[a, b]| {
                    Edge::try_new(a, b).ok_or(DocumentError::Loop {
                        class: i,
                        vertex: a,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            classes.push(edges);
        }
        Ok(EdgeColoring::new(self.n, classes))
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Compact JSON with one class per line, ending in a newline.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\"n\":{},\"k\":{},\"classes\":[", self.n, self.k);
        for (i, class) in self.classes.iter().enumerate() {
            out.push_str(if i == 0 { "\n" } else { ",\n" });
            out.push('[');
            for (j, [u, v]) in class.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                write!(out, "[{u},{v}]").unwrap();
            }
            out.push(']');
        }
        if !self.classes.is_empty() {
            out.push('\n');
        }
        out.push(']');
        if let Some(meta) = &self.meta {
            out.push_str(",\"meta\":");
            out.push_str(&serde_json::to_string(meta).expect("meta serializes"));
        }
        out.push_str("}\n");
        out
    }
}

/// Undirected DOT graph with every edge labelled by its class index.
/// Edges appear in lexicographic order.
pub fn to_dot(c: &EdgeColoring) -> String {
    let mut edges: Vec<(Edge, usize)> = c
        .classes()
        .iter()
        .enumerate()
        .flat_map(|(i, class)| class.iter().map(move |&e| (e, i)))
        .collect();
    edges.sort_unstable();
    let mut out = format!("graph K{} {{\n", c.n());
    for v in 0..c.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (e, class) in edges {
        writeln!(out, "  {} -- {} [class={class}];", e.u(), e.v()).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matchings() -> EdgeColoring {
        EdgeColoring::from_assignment(4, &[0, 1, 2, 2, 1, 0])
    }

    #[test]
    fn json_layout() {
        let doc = ColoringDocument::from_coloring(&matchings(), None);
        assert_eq!(
            doc.to_json(),
            "{\"n\":4,\"k\":3,\"classes\":[\n[[0,1],[2,3]],\n[[0,2],[1,3]],\n[[0,3],[1,2]]\n]}\n"
        );
    }

    #[test]
    fn meta_is_written_last() {
        let meta = Meta {
            construction: Some("plane".into()),
            q: Some(3),
            tool_version: None,
        };
        let json = ColoringDocument::from_coloring(&matchings(), Some(meta)).to_json();
        assert!(json.ends_with("],\"meta\":{\"construction\":\"plane\",\"q\":3}}\n"));
    }

    #[test]
    fn parse_canonicalizes_pairs() {
        let doc =
            ColoringDocument::parse(r#"{"n":3,"k":2,"classes":[[[1,0],[2,1]],[[0,2]]]}"#).unwrap();
        let c = doc.to_coloring().unwrap();
        assert_eq!(c.class(0), &[Edge::new(0, 1), Edge::new(1, 2)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            ColoringDocument::parse("{\"n\":3}"),
            Err(DocumentError::Syntax(_))
        ));
        let wrong_k = ColoringDocument::parse(r#"{"n":3,"k":3,"classes":[[[0,1]]]}"#).unwrap();
        assert!(matches!(
            wrong_k.to_coloring(),
            Err(DocumentError::ClassCount {
                declared: 3,
                actual: 1
            })
        ));
        let looped = ColoringDocument::parse(r#"{"n":3,"k":1,"classes":[[[2,2]]]}"#).unwrap();
        assert!(matches!(
            looped.to_coloring(),
            Err(DocumentError::Loop {
                class: 0,
                vertex: 2
            })
        ));
    }

    #[test]
    fn dot_lists_each_edge_once() {
        let dot = to_dot(&matchings());
        assert!(dot.starts_with("graph K4 {\n"));
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(dot.contains("  0 -- 3 [class=2];\n"));
    }
}
