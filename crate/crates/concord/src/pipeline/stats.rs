//! Per-representation size statistics and reduction percentages against a
//! designated baseline representation.

use super::manifest::read_manifest;
use super::serialize::read_graph_counts;
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RepStats {
    pub name: String,
    /// Graphs successfully read; averages cover exactly these.
    pub samples: usize,
    pub avg_nodes: f64,
    pub avg_edges: f64,
    pub missing_files: usize,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Reduction {
    pub name: String,
    pub node_reduction_pct: f64,
    pub edge_reduction_pct: f64,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RunStats {
    pub representations: Vec<RepStats>,
    pub baseline: Option<String>,
    pub reductions: Vec<Reduction>,
}

#[derive(Debug, thiserror::Error)]
pub enum StatsError {
    #[error("manifest error: {0}")]
    Manifest(#[from] csv::Error),
    #[error("manifest has no representation columns")]
    NoRepresentations,
    #[error("unknown baseline representation '{0}'")]
    UnknownBaseline(String),
}

/// Representation names encoded in a manifest header
/// (`<name>_file` columns between `baseline_file` and `label`).
pub fn rep_names_of_header(header: &[String]) -> Vec<String> {
    header
        .iter()
        .skip(3)
        .take(header.len().saturating_sub(5))
        .filter_map(|h| h.strip_suffix("_file").map(str::to_string))
        .collect()
}

/// Compute averages per representation by reading every referenced graph
/// file (paths resolved relative to the manifest), plus reductions
/// against `baseline` (default: the first representation).
pub fn compute_stats(manifest: &Path, baseline: Option<&str>) -> Result<RunStats, StatsError> {
    let (header, rows) = read_manifest(manifest)?;
    let rep_names = rep_names_of_header(&header);
    if rep_names.is_empty() {
        return Err(StatsError::NoRepresentations);
    }
    let base_dir = manifest.parent().unwrap_or_else(|| Path::new("."));

    let mut reps = Vec::new();
    for (i, name) in rep_names.iter().enumerate() {
        let col = 3 + i;
        let mut samples = 0usize;
        let mut missing = 0usize;
        let mut node_sum = 0usize;
        let mut edge_sum = 0usize;
        for row in &rows {
            let cell = row.get(col).map(String::as_str).unwrap_or("");
            if cell.is_empty() {
                continue;
            }
            match read_graph_counts(&base_dir.join(cell)) {
                Ok((n, e)) => {
                    samples += 1;
                    node_sum += n;
                    edge_sum += e;
                }
                Err(_) => missing += 1,
            }
        }
        let avg = |sum: usize| {
            if samples > 0 {
                sum as f64 / samples as f64
            } else {
                0.0
            }
        };
        reps.push(RepStats {
            name: name.clone(),
            samples,
            avg_nodes: avg(node_sum),
            avg_edges: avg(edge_sum),
            missing_files: missing,
        });
    }

    let baseline_name = match baseline {
        Some(b) => {
            if !reps.iter().any(|r| r.name == b) {
                return Err(StatsError::UnknownBaseline(b.to_string()));
            }
            b.to_string()
        }
        None => reps[0].name.clone(),
    };
    let base = reps
        .iter()
        .find(|r| r.name == baseline_name)
        .cloned()
        .expect("baseline present");
    let pct = |b: f64, r: f64| if b > 0.0 { (b - r) / b * 100.0 } else { 0.0 };
    let reductions = reps
        .iter()
        .filter(|r| r.name != baseline_name)
        .map(|r| Reduction {
            name: r.name.clone(),
            node_reduction_pct: pct(base.avg_nodes, r.avg_nodes),
            edge_reduction_pct: pct(base.avg_edges, r.avg_edges),
        })
        .collect();

    Ok(RunStats {
        representations: reps,
        baseline: Some(baseline_name),
        reductions,
    })
}

pub fn render_table(stats: &RunStats) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<12} {:>8} {:>12} {:>12} {:>8}",
        "rep", "samples", "avg nodes", "avg edges", "missing"
    );
    for r in &stats.representations {
        let _ = writeln!(
            out,
            "{:<12} {:>8} {:>12.2} {:>12.2} {:>8}",
            r.name, r.samples, r.avg_nodes, r.avg_edges, r.missing_files
        );
    }
    if let Some(base) = &stats.baseline {
        for red in &stats.reductions {
            let _ = writeln!(
                out,
                "{} vs {}: {:.2}% fewer nodes, {:.2}% fewer edges",
                red.name, base, red.node_reduction_pct, red.edge_reduction_pct
            );
        }
    }
    out
}
