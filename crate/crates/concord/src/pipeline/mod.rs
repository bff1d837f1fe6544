//! End-to-end execution of a validated configuration: ingest repositories,
//! prune statements into a shadow tree, rebuild graphs per representation,
//! serialize them, and write the manifest and statistics.
//!
//! Work is partitioned per source file and may run in parallel; results
//! are merged by a single writer that assigns ids in (project, path, unit)
//! sort order, so outputs are byte-identical across runs regardless of
//! scheduling.

mod manifest;
mod serialize;
mod stats;

pub use manifest::{manifest_header, read_manifest, write_manifest, ManifestRow};
pub use serialize::{graph_to_json, parse_graph, read_graph, read_graph_counts, serialize_graph};
pub use stats::{compute_stats, render_table, Reduction, RepStats, RunStats, StatsError};

use crate::augment::{apply_task, AugmentContext};
use crate::dsl::{
    parse_config, validate_semantics, BaseGraphKind, ConcordModel, NodeKind, RepresentationSpec,
    Severity, Task,
};
use crate::graphs::{build_ast_graph, build_pdg, merge_bases, merge_class, CodeGraph};
use crate::pruner::{apply_conditions, collect_statements, PruneReport, StatementSpan};
use crate::subject::{parse_subject, AstNodeKind, NodeId, SubjectAst};
use log::{info, warn};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Granularity {
    Method,
    Class,
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub granularity: Granularity,
    /// Representation used as the reduction baseline; defaults to the
    /// first one declared.
    pub baseline: Option<String>,
    /// Worker threads; 0 means the library default.
    pub jobs: usize,
    /// Optional CSV joining labels/splits by (project, unit).
    pub labels: Option<PathBuf>,
    pub strict: bool,
    pub stats_out: Option<PathBuf>,
    /// Source file extensions to scan.
    pub extensions: Vec<String>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            granularity: Granularity::Method,
            baseline: None,
            jobs: 0,
            labels: None,
            strict: false,
            stats_out: None,
            extensions: vec!["java".into(), "c".into()],
        }
    }
}

#[derive(Debug)]
pub struct RunOutcome {
    pub stats: RunStats,
    pub manifest_path: PathBuf,
    pub warnings: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("invalid configuration {path}:\n{}", messages.join("\n"))]
    Config { path: String, messages: Vec<String> },
    #[error("unreadable repository list {path}: {message}")]
    RepoList { path: String, message: String },
    #[error("labels file {path}: {message}")]
    Labels { path: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Stats(#[from] StatsError),
}

/// Parse and validate a configuration file. Parse errors and error-level
/// diagnostics both surface as [`PipelineError::Config`].
pub fn load_model(config_path: &Path) -> Result<ConcordModel, PipelineError> {
    let display = config_path.display().to_string();
    let text = std::fs::read_to_string(config_path).map_err(|e| PipelineError::Config {
        path: display.clone(),
        messages: vec![e.to_string()],
    })?;
    let model = parse_config(&text).map_err(|errs| PipelineError::Config {
        path: display.clone(),
        messages: errs
            .iter()
            .map(|e| format!("error: {}:{}:{}: {}", display, e.line, e.col, e.message))
            .collect(),
    })?;
    Ok(validate_semantics(model))
}

fn require_executable(model: &ConcordModel, path: &Path) -> Result<(), PipelineError> {
    if model.is_executable() {
        return Ok(());
    }
    Err(PipelineError::Config {
        path: path.display().to_string(),
        messages: model
            .diagnostics
            .iter()
            .filter(|d| d.severity == Severity::Error)
            .map(|d| d.format_with_file(&path.display().to_string()))
            .collect(),
    })
}

fn sanitize_unit_name(name: &str) -> String {
    let cleaned: String = name
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect();
    if cleaned.is_empty() {
        "_unit".into()
    } else {
        cleaned
    }
}

/// Resolve a path from the configuration relative to the config file.
fn resolve_from(base_dir: &Path, value: &str) -> PathBuf {
    let p = Path::new(value);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base_dir.join(p)
    }
}

/// Read a repository list CSV: one `repo_path` column, header optional,
/// paths resolved relative to the CSV file.
fn read_repo_list(
    path: &Path,
    warnings: &mut Vec<String>,
) -> Result<Vec<(String, PathBuf)>, PipelineError> {
    let to_err = |message: String| PipelineError::RepoList {
        path: path.display().to_string(),
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_path(path)
        .map_err(|e| to_err(e.to_string()))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let mut repos = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| to_err(e.to_string()))?;
        let Some(cell) = record.get(0).map(str::trim) else {
            continue;
        };
        if cell.is_empty() || (i == 0 && cell == "repo_path") {
            continue;
        }
        let dir = resolve_from(base, cell);
        if !dir.is_dir() {
            let msg = format!("repository {} does not exist; skipped", dir.display());
            warn!("{msg}");
            warnings.push(msg);
            continue;
        }
        let project = dir
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| "repo".into());
        repos.push((project, dir));
    }
    Ok(repos)
}

fn scan_source_files(repo: &Path, extensions: &[String]) -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = walkdir::WalkDir::new(repo)
        .into_iter()
        .filter_map(Result::ok)
        .filter(|e| e.file_type().is_file())
        .filter(|e| {
            e.path()
                .extension()
                .and_then(|x| x.to_str())
                .is_some_and(|x| extensions.iter().any(|want| want == x))
        })
        .map(|e| e.path().strip_prefix(repo).unwrap().to_path_buf())
        .collect();
    files.sort();
    files
}

/// Identity of one code unit, stable across representations: pruning can
/// empty a method body but never removes or reorders units.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct UnitKey {
    project: String,
    rel: PathBuf,
    ordinal: usize,
}

struct UnitEntry {
    key: UnitKey,
    concord_id: u64,
    name: String,
    baseline_rel: String,
}

/// Units of one parsed file in declaration order.
fn discover_units(ast: &SubjectAst, granularity: Granularity) -> Vec<(String, NodeId)> {
    match granularity {
        Granularity::Method => ast
            .methods
            .iter()
            .map(|&m| (ast.decl_name(m).unwrap_or("_toplevel").to_string(), m))
            .collect(),
        Granularity::Class => ast
            .nodes
            .iter()
            .filter(|n| n.kind == AstNodeKind::TypeDecl)
            .map(|n| (ast.decl_name(n.id).unwrap_or("_class").to_string(), n.id))
            .collect(),
    }
}

/// Methods belonging to a class unit: those in its subtree that are not
/// inside a nested type declaration.
fn class_methods(ast: &SubjectAst, class: NodeId) -> Vec<NodeId> {
    let mut out = Vec::new();
    let mut stack: Vec<NodeId> = ast.children(class).to_vec();
    while let Some(id) = stack.pop() {
        let node = ast.node(id);
        match node.kind {
            AstNodeKind::TypeDecl => continue,
            AstNodeKind::MethodDecl => out.push(id),
            _ => stack.extend(node.children.iter().copied()),
        }
    }
    out.sort_unstable();
    out
}

fn build_method_graph(
    ast: &SubjectAst,
    unit: NodeId,
    rep: &RepresentationSpec,
    tasks: &[&Task],
) -> Result<CodeGraph, String> {
    let err = |e: &dyn std::fmt::Display| e.to_string();
    let ast_graph = if rep.base.contains(&BaseGraphKind::Ast) {
        Some(build_ast_graph(ast, unit).map_err(|e| err(&e))?)
    } else {
        None
    };
    let ctx = AugmentContext::new(ast, unit).map_err(|e| err(&e))?;
    let need_cfg = rep.base.contains(&BaseGraphKind::Cfg) || rep.base.contains(&BaseGraphKind::Pdg);
    let pdg = rep
        .base
        .contains(&BaseGraphKind::Pdg)
        .then(|| build_pdg(ast, &ctx.cfg, &ctx.occ));
    let mut graph = merge_bases(
        ast,
        unit,
        ast_graph.as_ref(),
        need_cfg.then_some(&ctx.cfg),
        pdg.as_deref(),
        &rep.base,
    )
    .map_err(|e| err(&e))?;
    for task in tasks {
        apply_task(&mut graph, task, &ctx).map_err(|e| err(&e))?;
    }
    Ok(graph)
}

fn build_unit_graph(
    ast: &SubjectAst,
    unit: NodeId,
    unit_name: &str,
    granularity: Granularity,
    rep: &RepresentationSpec,
    tasks: &[&Task],
) -> Result<CodeGraph, String> {
    match granularity {
        Granularity::Method => build_method_graph(ast, unit, rep, tasks),
        Granularity::Class => {
            let methods = class_methods(ast, unit);
            if methods.is_empty() {
                return Err(format!("class {unit_name} has no methods"));
            }
            let graphs = methods
                .iter()
                .map(|&m| build_method_graph(ast, m, rep, tasks))
                .collect::<Result<Vec<_>, _>>()?;
            merge_class(&graphs, unit_name).map_err(|e| e.to_string())
        }
    }
}

/// Per-task removal plans; each task's conditions scope its own targets.
fn removal_plans(tasks: &[&Task]) -> Vec<(BTreeSet<NodeKind>, Vec<crate::dsl::CodeCondition>)> {
    tasks
        .iter()
        .map(|t| {
            let targets: BTreeSet<NodeKind> = t
                .operations
                .iter()
                .filter_map(|op| match op.target {
                    crate::dsl::OpTarget::Node(k) if op.op_type == crate::dsl::OpType::Remove => {
                        Some(k)
                    }
                    _ => None,
                })
                .collect();
            (targets, t.conditions.clone())
        })
        .filter(|(targets, _)| !targets.is_empty())
        .collect()
}

fn prune_text(
    ast: &SubjectAst,
    text: &str,
    plans: &[(BTreeSet<NodeKind>, Vec<crate::dsl::CodeCondition>)],
) -> Result<(String, PruneReport), String> {
    let mut kept: Vec<StatementSpan> = Vec::new();
    let mut kept_spans: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut exempted = Vec::new();
    for (targets, conditions) in plans {
        let spans = collect_statements(ast, targets);
        let (keep, exempt) = apply_conditions(spans, conditions);
        for s in keep {
            if kept_spans.insert((s.byte_start, s.byte_end)) {
                kept.push(s);
            }
        }
        exempted.extend(exempt);
    }
    kept.sort_by_key(|s| (s.byte_start, s.byte_end));
    let (out, mut report) = crate::pruner::rewrite_file(text, &kept).map_err(|e| e.to_string())?;
    report.exempted = exempted
        .into_iter()
        .filter(|(s, _)| !kept_spans.contains(&(s.byte_start, s.byte_end)))
        .collect();
    Ok((out, report))
}

type LabelMap = BTreeMap<(String, String), (i64, String)>;

fn read_labels(path: &Path) -> Result<LabelMap, PipelineError> {
    let to_err = |message: String| PipelineError::Labels {
        path: path.display().to_string(),
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_path(path)
        .map_err(|e| to_err(e.to_string()))?;
    let mut map = LabelMap::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| to_err(e.to_string()))?;
        let get = |j: usize| record.get(j).map(str::trim).unwrap_or("");
        if i == 0 && get(0) == "project" {
            continue;
        }
        if get(0).is_empty() {
            continue;
        }
        let label: i64 = get(2).parse().map_err(|_| {
            to_err(format!(
                "row {}: label '{}' is not an integer",
                i + 1,
                get(2)
            ))
        })?;
        let split = if get(3).is_empty() { "train" } else { get(3) };
        map.insert(
            (get(0).to_string(), get(1).to_string()),
            (label, split.to_string()),
        );
    }
    Ok(map)
}

struct FileOutcome {
    units: Vec<(UnitKey, String)>,
    warnings: Vec<String>,
}

/// Execute a configuration end to end. Per-file failures are logged and
/// skipped; the run continues and reports them as warnings.
pub fn run(config_path: &Path, opts: &RunOptions) -> Result<RunOutcome, PipelineError> {
    let model = load_model(config_path)?;
    require_executable(&model, config_path)?;
    for d in model.warnings() {
        warn!("{}", d.format_with_file(&config_path.display().to_string()));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| std::io::Error::other(e.to_string()))?;
    pool.install(|| run_inner(config_path, &model, opts))
}

fn run_inner(
    config_path: &Path,
    model: &ConcordModel,
    opts: &RunOptions,
) -> Result<RunOutcome, PipelineError> {
    let config_dir = config_path
        .parent()
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("."));
    let mut warnings: Vec<String> = Vec::new();

    let labels = match &opts.labels {
        Some(p) => read_labels(p)?,
        None => LabelMap::new(),
    };

    // Repository sets, per representation and unioned (for the baseline).
    let mut rep_repos: Vec<Vec<(String, PathBuf)>> = Vec::new();
    let mut union: BTreeMap<String, PathBuf> = BTreeMap::new();
    for rep in &model.representations {
        let list_path = resolve_from(&config_dir, &rep.repo_list_path);
        let repos = read_repo_list(&list_path, &mut warnings)?;
        for (project, dir) in &repos {
            match union.get(project) {
                None => {
                    union.insert(project.clone(), dir.clone());
                }
                Some(existing) if existing != dir => {
                    let msg = format!(
                        "project name '{project}' maps to both {} and {}; keeping the first",
                        existing.display(),
                        dir.display()
                    );
                    warn!("{msg}");
                    warnings.push(msg);
                }
                _ => {}
            }
        }
        rep_repos.push(repos);
    }
    if union.is_empty() && !model.representations.is_empty() {
        let msg = "repository lists contained no usable repositories".to_string();
        warn!("{msg}");
        warnings.push(msg);
    }

    let out_root = model
        .representations
        .first()
        .map(|r| resolve_from(&config_dir, &r.output_dir))
        .unwrap_or_else(|| config_dir.join("out"));
    std::fs::create_dir_all(&out_root)?;

    // Baseline pass: fix the unit registry and ids from the unpruned
    // sources, then emit one .code snippet per unit.
    let mut work: Vec<(String, PathBuf, PathBuf)> = Vec::new();
    for (project, dir) in &union {
        for rel in scan_source_files(dir, &opts.extensions) {
            work.push((project.clone(), dir.join(&rel), rel));
        }
    }
    type BaselineScan = Result<(String, PathBuf, Vec<(String, String)>), String>;
    let baseline_results: Vec<BaselineScan> = work
        .par_iter()
        .map(|(project, abs, rel)| {
            let text = std::fs::read_to_string(abs)
                .map_err(|e| format!("{}: {e}; skipped", abs.display()))?;
            let ast = parse_subject(&text, rel);
            let units = discover_units(&ast, opts.granularity)
                .into_iter()
                .map(|(name, id)| (name, ast.node(id).code.clone()))
                .collect();
            Ok((project.clone(), rel.clone(), units))
        })
        .collect();

    let mut registry: Vec<UnitEntry> = Vec::new();
    let mut snippets: Vec<String> = Vec::new();
    for result in baseline_results {
        match result {
            Ok((project, rel, units)) => {
                for (ordinal, (name, snippet)) in units.into_iter().enumerate() {
                    registry.push(UnitEntry {
                        key: UnitKey {
                            project: project.clone(),
                            rel: rel.clone(),
                            ordinal,
                        },
                        concord_id: 0,
                        name,
                        baseline_rel: String::new(),
                    });
                    snippets.push(snippet);
                }
            }
            Err(msg) => {
                warn!("{msg}");
                warnings.push(msg);
            }
        }
    }
    let mut order: Vec<usize> = (0..registry.len()).collect();
    order.sort_by(|&a, &b| registry[a].key.cmp(&registry[b].key));
    let mut sorted_registry = Vec::with_capacity(registry.len());
    for (id, &idx) in order.iter().enumerate() {
        let mut entry = registry[idx].clone_with_id(id as u64);
        entry.baseline_rel = format!(
            "baseline/{}/{}_{}.code",
            entry.key.project,
            sanitize_unit_name(&entry.name),
            entry.concord_id
        );
        let path = out_root.join(&entry.baseline_rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        let mut snippet = snippets[idx].clone();
        if !snippet.ends_with('\n') {
            snippet.push('\n');
        }
        std::fs::write(&path, snippet)?;
        sorted_registry.push(entry);
    }
    let registry = sorted_registry;
    info!(
        "registered {} units over {} files",
        registry.len(),
        work.len()
    );

    let id_of: BTreeMap<&UnitKey, u64> = registry.iter().map(|e| (&e.key, e.concord_id)).collect();
    let name_of: BTreeMap<&UnitKey, &str> =
        registry.iter().map(|e| (&e.key, e.name.as_str())).collect();

    // Per-representation passes.
    let mut rep_cells: Vec<BTreeMap<UnitKey, String>> = Vec::new();
    for (rep, repos) in model.representations.iter().zip(&rep_repos) {
        let rep_out = resolve_from(&config_dir, &rep.output_dir);
        let tasks: Vec<&Task> = rep
            .tasks
            .iter()
            .filter_map(|name| model.task(name))
            .collect();
        let plans = removal_plans(&tasks);

        let mut rep_work: Vec<(String, PathBuf, PathBuf)> = Vec::new();
        for (project, dir) in repos {
            for rel in scan_source_files(dir, &opts.extensions) {
                rep_work.push((project.clone(), dir.join(&rel), rel));
            }
        }

        let outcomes: Vec<Result<FileOutcome, String>> = rep_work
            .par_iter()
            .map(|(project, abs, rel)| {
                process_file(
                    project, abs, rel, rep, &tasks, &plans, &rep_out, &out_root, opts, &id_of,
                    &name_of,
                )
                .map_err(|e| format!("{}: {e}; skipped", abs.display()))
            })
            .collect();

        let mut cells = BTreeMap::new();
        for outcome in outcomes {
            match outcome {
                Ok(res) => {
                    for w in res.warnings {
                        warn!("{w}");
                        warnings.push(w);
                    }
                    for (key, cell) in res.units {
                        cells.insert(key, cell);
                    }
                }
                Err(msg) => {
                    warn!("{msg}");
                    warnings.push(msg);
                }
            }
        }
        info!("representation {}: {} graphs", rep.name, cells.len());
        rep_cells.push(cells);
    }

    // Manifest.
    let rep_names: Vec<String> = model
        .representations
        .iter()
        .map(|r| r.name.clone())
        .collect();
    let rows: Vec<ManifestRow> = registry
        .iter()
        .map(|entry| {
            let (label, split) = labels
                .get(&(entry.key.project.clone(), entry.name.clone()))
                .cloned()
                .unwrap_or((0, "train".to_string()));
            ManifestRow {
                concord_id: entry.concord_id,
                project: entry.key.project.clone(),
                baseline_file: entry.baseline_rel.clone(),
                rep_files: rep_cells
                    .iter()
                    .map(|cells| cells.get(&entry.key).cloned().unwrap_or_default())
                    .collect(),
                label,
                split,
            }
        })
        .collect();
    let manifest_path = out_root.join("manifest.csv");
    write_manifest(&rows, &rep_names, &manifest_path)?;

    // Statistics.
    let stats = if rep_names.is_empty() {
        RunStats {
            representations: Vec::new(),
            baseline: None,
            reductions: Vec::new(),
        }
    } else {
        compute_stats(&manifest_path, opts.baseline.as_deref())?
    };
    let stats_json = {
        let mut text = serde_json::to_string_pretty(&stats).expect("stats serialization");
        text.push('\n');
        text
    };
    std::fs::write(out_root.join("stats.json"), &stats_json)?;
    if let Some(extra) = &opts.stats_out {
        if let Some(parent) = extra.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(extra, &stats_json)?;
    }

    Ok(RunOutcome {
        stats,
        manifest_path,
        warnings,
    })
}

impl UnitEntry {
    fn clone_with_id(&self, id: u64) -> UnitEntry {
        UnitEntry {
            key: self.key.clone(),
            concord_id: id,
            name: self.name.clone(),
            baseline_rel: self.baseline_rel.clone(),
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn process_file(
    project: &str,
    abs: &Path,
    rel: &Path,
    rep: &RepresentationSpec,
    tasks: &[&Task],
    plans: &[(BTreeSet<NodeKind>, Vec<crate::dsl::CodeCondition>)],
    rep_out: &Path,
    out_root: &Path,
    opts: &RunOptions,
    id_of: &BTreeMap<&UnitKey, u64>,
    name_of: &BTreeMap<&UnitKey, &str>,
) -> Result<FileOutcome, String> {
    let text = std::fs::read_to_string(abs).map_err(|e| e.to_string())?;
    let ast = parse_subject(&text, rel);

    let (pruned_text, report) = if plans.is_empty() {
        (text.clone(), PruneReport::default())
    } else {
        prune_text(&ast, &text, plans)?
    };

    // Shadow copy of the pruned source plus its report.
    let shadow = rep_out
        .join(&rep.name)
        .join("shadow")
        .join(project)
        .join(rel);
    if let Some(parent) = shadow.parent() {
        std::fs::create_dir_all(parent).map_err(|e| e.to_string())?;
    }
    std::fs::write(&shadow, &pruned_text).map_err(|e| e.to_string())?;
    let report_json = {
        let mut t = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
        t.push('\n');
        t
    };
    let report_path = shadow.with_file_name(format!(
        "{}.prune.json",
        shadow.file_name().unwrap_or_default().to_string_lossy()
    ));
    std::fs::write(&report_path, report_json).map_err(|e| e.to_string())?;

    let pruned_ast = parse_subject(&pruned_text, rel);
    let mut warnings = Vec::new();
    let mut units = Vec::new();
    for (ordinal, (name, unit_id)) in discover_units(&pruned_ast, opts.granularity)
        .into_iter()
        .enumerate()
    {
        let key = UnitKey {
            project: project.to_string(),
            rel: rel.to_path_buf(),
            ordinal,
        };
        let Some(&concord_id) = id_of.get(&key) else {
            warnings.push(format!(
                "{}: unit {name} (#{ordinal}) not present in the baseline scan; skipped",
                rel.display()
            ));
            continue;
        };
        // Keep the registry's name so files join across representations.
        let file_stem = sanitize_unit_name(name_of.get(&key).copied().unwrap_or(&name));
        match build_unit_graph(&pruned_ast, unit_id, &name, opts.granularity, rep, tasks) {
            Ok(graph) => {
                let rel_file = PathBuf::from(&rep.name)
                    .join(project)
                    .join(format!("{file_stem}_{concord_id}.json"));
                let path = rep_out.join(&rel_file);
                serialize_graph(&graph, &path).map_err(|e| e.to_string())?;
                let cell = match rep_out.strip_prefix(out_root) {
                    Ok(prefix) if prefix.as_os_str().is_empty() => {
                        rel_file.to_string_lossy().replace('\\', "/")
                    }
                    Ok(prefix) => prefix.join(&rel_file).to_string_lossy().replace('\\', "/"),
                    Err(_) => path.to_string_lossy().replace('\\', "/"),
                };
                units.push((key, cell));
            }
            Err(msg) => {
                warnings.push(format!("{}: unit {name}: {msg}; skipped", rel.display()));
            }
        }
    }
    Ok(FileOutcome { units, warnings })
}
