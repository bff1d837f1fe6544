//! Node-link JSON serialization of code graphs, compatible with common
//! graph toolkits: `{"directed": true, "multigraph": true, "nodes": [...],
//! "links": [...]}` with nodes sorted by id and links by
//! (source, target, label).

use crate::graphs::{CodeGraph, EdgeLabel, GraphEdge, GraphNode};
use crate::subject::{AstNodeKind, NodeId};
use std::io::Write;
use std::path::Path;

#[derive(serde::Serialize, serde::Deserialize)]
struct NodeOut {
    id: u32,
    kind: AstNodeKind,
    code: String,
    line: u32,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct LinkOut {
    source: u32,
    target: u32,
    label: EdgeLabel,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct GraphOut {
    directed: bool,
    multigraph: bool,
    nodes: Vec<NodeOut>,
    links: Vec<LinkOut>,
}

/// Canonical JSON text for a graph (UTF-8, trailing newline).
pub fn graph_to_json(g: &CodeGraph) -> String {
    let mut nodes: Vec<NodeOut> = g
        .nodes
        .iter()
        .map(|n| NodeOut {
            id: n.id.0,
            kind: n.kind,
            code: n.code.clone(),
            line: n.line,
        })
        .collect();
    nodes.sort_by_key(|n| n.id);
    let mut links: Vec<LinkOut> = g
        .edges
        .iter()
        .map(|e| LinkOut {
            source: e.source.0,
            target: e.target.0,
            label: e.label,
        })
        .collect();
    links.sort_by_key(|l| (l.source, l.target, l.label.as_str()));
    let doc = GraphOut {
        directed: true,
        multigraph: true,
        nodes,
        links,
    };
    let mut text = serde_json::to_string(&doc).expect("graph serialization");
    text.push('\n');
    text
}

pub fn serialize_graph(g: &CodeGraph, path: &Path) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let mut f = std::fs::File::create(path)?;
    f.write_all(graph_to_json(g).as_bytes())
}

/// Read back the node and edge lists of a serialized graph.
pub fn read_graph(path: &Path) -> std::io::Result<(Vec<GraphNode>, Vec<GraphEdge>)> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
}

pub fn parse_graph(text: &str) -> Result<(Vec<GraphNode>, Vec<GraphEdge>), serde_json::Error> {
    let doc: GraphOut = serde_json::from_str(text)?;
    let nodes = doc
        .nodes
        .into_iter()
        .map(|n| GraphNode {
            id: NodeId(n.id),
            kind: n.kind,
            code: n.code,
            line: n.line,
        })
        .collect();
    let edges = doc
        .links
        .into_iter()
        .map(|l| GraphEdge {
            source: NodeId(l.source),
            target: NodeId(l.target),
            label: l.label,
        })
        .collect();
    Ok((nodes, edges))
}

/// Node and edge counts of a serialized graph file.
pub fn read_graph_counts(path: &Path) -> std::io::Result<(usize, usize)> {
    let (nodes, edges) = read_graph(path)?;
    Ok((nodes.len(), edges.len()))
}
