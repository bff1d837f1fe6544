//! The dataset manifest: one CSV row per code unit mapping it to its
//! per-representation graph files plus label and split slots.

use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestRow {
    pub concord_id: u64,
    pub project: String,
    pub baseline_file: String,
    /// One entry per representation, aligned with the header; empty when
    /// the unit produced no graph under that representation.
    pub rep_files: Vec<String>,
    pub label: i64,
    pub split: String,
}

pub fn manifest_header(rep_names: &[String]) -> Vec<String> {
    let mut header = vec![
        "concord_id".to_string(),
        "project".to_string(),
        "baseline_file".to_string(),
    ];
    for name in rep_names {
        header.push(format!("{name}_file"));
    }
    header.push("label".to_string());
    header.push("split".to_string());
    header
}

pub fn write_manifest(
    rows: &[ManifestRow],
    rep_names: &[String],
    path: &Path,
) -> Result<(), csv::Error> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(manifest_header(rep_names))?;
    for row in rows {
        debug_assert_eq!(row.rep_files.len(), rep_names.len());
        let mut record = vec![
            row.concord_id.to_string(),
            row.project.clone(),
            row.baseline_file.clone(),
        ];
        record.extend(row.rep_files.iter().cloned());
        record.push(row.label.to_string());
        record.push(row.split.clone());
        w.write_record(record)?;
    }
    w.flush()?;
    Ok(())
}

/// Header plus rows, as raw strings.
pub fn read_manifest(path: &Path) -> Result<(Vec<String>, Vec<Vec<String>>), csv::Error> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_path(path)?;
    let mut records = r.records();
    let header = match records.next() {
        Some(rec) => rec?.iter().map(str::to_string).collect(),
        None => Vec::new(),
    };
    let mut rows = Vec::new();
    for rec in records {
        rows.push(rec?.iter().map(str::to_string).collect());
    }
    Ok((header, rows))
}
