//! Semantic validation: all findings flow through diagnostics, never
//! through hard errors, so a single pass reports everything at once.

use super::{BaseGraphKind, ConcordModel, Diagnostic, EdgeKind, OpTarget, OpType, Severity};
use std::collections::BTreeSet;

/// Appends diagnostics for:
///
/// - operation type / target mismatches (error),
/// - unresolved task references (error),
/// - duplicate task or representation names (error),
/// - duplicate operations within a task (warning),
/// - `next_token`/`next_sibling` in a representation whose base set
///   excludes AST (warning).
pub fn validate_semantics(mut model: ConcordModel) -> ConcordModel {
    let mut diags = Vec::new();

    let mut seen_tasks: BTreeSet<&str> = BTreeSet::new();
    for task in &model.tasks {
        if !seen_tasks.insert(&task.name) {
            diags.push(Diagnostic {
                severity: Severity::Error,
                line: task.loc.line,
                col: task.loc.col,
                message: format!("duplicate task name '{}'", task.name),
            });
        }
        let mut seen_ops = BTreeSet::new();
        for op in &task.operations {
            match (op.op_type, op.target) {
                (OpType::Remove, OpTarget::Edge(k)) => diags.push(Diagnostic {
                    severity: Severity::Error,
                    line: op.loc.line,
                    col: op.loc.col,
                    message: format!(
                        "invalid operation 'remove {}': {} is an edge addition operation and cannot be removed",
                        k.token(),
                        k.token()
                    ),
                }),
                (OpType::Add, OpTarget::Node(k)) => diags.push(Diagnostic {
                    severity: Severity::Error,
                    line: op.loc.line,
                    col: op.loc.col,
                    message: format!(
                        "invalid operation 'add {}': {} is a node removal operation and cannot be added",
                        k.token(),
                        k.token()
                    ),
                }),
                _ => {}
            }
            if !seen_ops.insert((op.op_type, op.target)) {
                diags.push(Diagnostic {
                    severity: Severity::Warning,
                    line: op.loc.line,
                    col: op.loc.col,
                    message: format!(
                        "duplicate operation '{} {}' in task '{}'",
                        op.op_type.token(),
                        op.target.token(),
                        task.name
                    ),
                });
            }
        }
    }

    let mut seen_reps: BTreeSet<&str> = BTreeSet::new();
    for rep in &model.representations {
        if !seen_reps.insert(&rep.name) {
            diags.push(Diagnostic {
                severity: Severity::Error,
                line: rep.loc.line,
                col: rep.loc.col,
                message: format!("duplicate representation name '{}'", rep.name),
            });
        }
        for task_name in &rep.tasks {
            let Some(task) = model.task(task_name) else {
                diags.push(Diagnostic {
                    severity: Severity::Error,
                    line: rep.loc.line,
                    col: rep.loc.col,
                    message: format!(
                        "representation '{}' references undefined task '{}'",
                        rep.name, task_name
                    ),
                });
                continue;
            };
            if !rep.base.contains(&BaseGraphKind::Ast) {
                for op in &task.operations {
                    if let OpTarget::Edge(k @ (EdgeKind::NextToken | EdgeKind::NextSibling)) =
                        op.target
                    {
                        diags.push(Diagnostic {
                            severity: Severity::Warning,
                            line: rep.loc.line,
                            col: rep.loc.col,
                            message: format!(
                                "representation '{}' uses task '{}' but {} requires AST base",
                                rep.name,
                                task_name,
                                k.token()
                            ),
                        });
                    }
                }
            }
        }
    }

    model.diagnostics.append(&mut diags);
    model
}

#[cfg(test)]
mod tests {
    use super::super::parse_config;
    use super::*;

    fn validated(text: &str) -> ConcordModel {
        validate_semantics(parse_config(text).unwrap())
    }

    #[test]
    fn remove_edge_target_is_an_error() {
        let model = validated("Tasks { t { Node remove next_token } }");
        let errors: Vec<_> = model.errors().collect();
        assert_eq!(errors.len(), 1);
        assert!(errors[0].message.contains("remove next_token"));
        assert!(!model.is_executable());
    }

    #[test]
    fn add_node_target_is_an_error() {
        let model = validated("Tasks { t { Edge add print } }");
        let errors: Vec<_> = model.errors().collect();
        assert_eq!(errors.len(), 1);
        assert!(errors[0].message.contains("add print"));
    }

    #[test]
    fn reference_config_is_clean() {
        let model = validated(super::super::fixtures::LISTING5);
        assert_eq!(model.diagnostics.len(), 0);
        assert!(model.is_executable());
    }

    #[test]
    fn unresolved_task_reference_is_an_error() {
        let model = validated("Representations { r { \"a.csv\" \"out\" AST missing } }");
        let errors: Vec<_> = model.errors().collect();
        assert_eq!(errors.len(), 1);
        assert!(errors[0].message.contains("undefined task 'missing'"));
    }

    #[test]
    fn duplicate_operation_is_a_warning() {
        let model = validated("Tasks { t { Edge add next_token Edge add next_token } }");
        assert!(model.is_executable());
        let warnings: Vec<_> = model.warnings().collect();
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].message.contains("duplicate operation"));
    }

    #[test]
    fn next_token_without_ast_base_is_a_warning() {
        let model = validated(
            "Tasks { t { Edge add next_token } } \
             Representations { r { \"a.csv\" \"out\" CFG t } }",
        );
        assert!(model.is_executable());
        let warnings: Vec<_> = model.warnings().collect();
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].message.contains("next_token requires AST base"));
    }

    #[test]
    fn duplicate_task_names_are_errors() {
        let model = validated("Tasks { t { Edge add next_token } t { Edge add for_cfg } }");
        assert!(!model.is_executable());
    }
}
