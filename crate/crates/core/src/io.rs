//! JSON and Graphviz DOT forms of posets.
//!
//! JSON: `{"ranks": [..], "covers": [[low, high], ..], "labels": [..]}`, with
//! `labels` optional. Edge posets also carry `"edges": [[low, high], ..]`,
//! the cover of the source poset behind each element.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::edge::EdgeElement;
use crate::error::Result;
use crate::poset::GradedPoset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub ranks: Vec<usize>,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
}

impl PosetJson {
    pub fn from_poset(p: &GradedPoset) -> Self {
        PosetJson {
            ranks: p.ranks().to_vec(),
            covers: p.covers().iter().map(|&(a, b)| [a, b]).collect(),
            labels: p.labels().map(<[String]>::to_vec),
            edges: None,
        }
    }

    pub fn with_edges(mut self, edges: &[EdgeElement]) -> Self {
        self.edges = Some(edges.iter().map(|e| [e.low, e.high]).collect());
        self
    }

    pub fn to_poset(&self) -> Result<GradedPoset> {
        let p = GradedPoset::new(
            self.ranks.clone(),
            self.covers.iter().map(|&[a, b]| (a, b)).collect(),
        )?;
        match &self.labels {
            Some(l) => p.with_labels(l.clone()),
            None => Ok(p),
        }
    }
}

pub fn poset_from_json(text: &str) -> Result<GradedPoset> {
    serde_json::from_str::<PosetJson>(text)?.to_poset()
}

pub fn poset_to_json(p: &GradedPoset) -> String {
    serde_json::to_string(&PosetJson::from_poset(p)).expect("plain data serializes")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per element, a `rank=same` group per rank, and covers drawn
/// bottom to top.
pub fn to_dot(p: &GradedPoset, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=circle];");
    let _ = writeln!(out, "  edge [arrowhead=none];");
    for (r, level) in p.rank_levels().iter().enumerate() {
        if level.is_empty() {
            continue;
        }
        let _ = write!(out, "  {{ rank=same; // rank {r}\n   ");
        for &x in level {
            let _ = write!(out, " n{x} [label={}];", quote(&p.label(x)));
        }
        let _ = writeln!(out, "\n  }}");
    }
    for &(a, b) in p.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge::edge_poset;
    use crate::figures;

    #[test]
    fn json_round_trip() {
        let p = figures::fig1();
        let text = poset_to_json(&p);
        assert_eq!(poset_from_json(&text).unwrap(), p);
        assert!(!text.contains("labels"));
    }

    #[test]
    fn json_with_labels_and_edges() {
        let text = r#"{"ranks":[0,1],"covers":[[0,1]],"labels":["a","b"]}"#;
        let p = poset_from_json(text).unwrap();
        assert_eq!(p.label(1), "b");
        let e = edge_poset(&figures::diamond());
        let j = PosetJson::from_poset(&e.poset).with_edges(&e.edges);
        assert_eq!(j.edges.as_ref().unwrap()[0], [0, 1]);
    }

    #[test]
    fn json_errors() {
        assert!(poset_from_json(r#"{"ranks":[0,2],"covers":[[0,1]]}"#).is_err());
        assert!(poset_from_json(r#"{"ranks":[0]}"#).is_err());
        assert!(poset_from_json(r#"{"ranks":[0,1],"covers":[[0,1]],"labels":["a"]}"#).is_err());
    }

    #[test]
    fn dot_groups_ranks() {
        let d = to_dot(&figures::diamond(), "diamond");
        assert!(d.contains("rankdir=BT"));
        assert_eq!(d.matches("rank=same").count(), 3);
        assert!(d.contains("n0 -> n1;"));
        assert_eq!(d.matches("->").count(), 4);
    }
}
