//! Canonical concrete-syntax emitter. `parse_config(render_config(m))`
//! yields a model structurally equal to `m`.

use super::{ConcordModel, OpTarget};
use std::fmt::Write;

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error("model contains {0} error diagnostic(s) and cannot be rendered")]
    ErrorDiagnostics(usize),
}

pub fn render_config(model: &ConcordModel) -> Result<String, RenderError> {
    let errors = model.errors().count();
    if errors > 0 {
        return Err(RenderError::ErrorDiagnostics(errors));
    }
    let mut out = String::new();
    if !model.tasks.is_empty() {
        out.push_str("Tasks {\n");
        for task in &model.tasks {
            let _ = writeln!(out, "    {} {{", task.name);
            for op in &task.operations {
                let element = match op.target {
                    OpTarget::Edge(_) => "Edge",
                    OpTarget::Node(_) => "Node",
                };
                let _ = writeln!(
                    out,
                    "        {} {} {}",
                    element,
                    op.op_type.token(),
                    op.target.token()
                );
            }
            if !task.conditions.is_empty() {
                out.push_str("        Conditions {\n");
                for cond in &task.conditions {
                    let _ = writeln!(
                        out,
                        "            {} {}",
                        cond.action.token(),
                        cond.block.token()
                    );
                }
                out.push_str("        }\n");
            }
            out.push_str("    }\n");
        }
        out.push_str("}\n");
    }
    if !model.representations.is_empty() {
        out.push_str("Representations {\n");
        for rep in &model.representations {
            let _ = writeln!(out, "    {} {{", rep.name);
            let _ = writeln!(out, "        \"{}\"", rep.repo_list_path);
            let _ = writeln!(out, "        \"{}\"", rep.output_dir);
            for base in &rep.base {
                let _ = writeln!(out, "        {}", base.token());
            }
            for task in &rep.tasks {
                let _ = writeln!(out, "        {}", task);
            }
            out.push_str("    }\n");
        }
        out.push_str("}\n");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{
        fixtures::LISTING5, parse_config, validate_semantics, BlockKind, CodeCondition,
        ConditionAction, Loc, Severity,
    };
    use super::*;

    #[test]
    fn reference_config_round_trips() {
        let model = parse_config(LISTING5).unwrap();
        let rendered = render_config(&model).unwrap();
        let reparsed = parse_config(&rendered).unwrap();
        assert_eq!(reparsed.tasks, model.tasks);
        assert_eq!(reparsed.representations, model.representations);
    }

    #[test]
    fn empty_conditions_block_is_elided() {
        let model = parse_config("Tasks { t { Edge add next_token } }").unwrap();
        let rendered = render_config(&model).unwrap();
        assert!(!rendered.contains("Conditions"));
        assert_eq!(parse_config(&rendered).unwrap().tasks, model.tasks);
    }

    #[test]
    fn explicit_empty_conditions_round_trips() {
        let model = parse_config("Tasks { t { Edge add next_token Conditions { } } }").unwrap();
        assert!(model.tasks[0].conditions.is_empty());
        let rendered = render_config(&model).unwrap();
        assert_eq!(parse_config(&rendered).unwrap().tasks, model.tasks);
    }

    #[test]
    fn include_conditions_round_trip() {
        let mut model = parse_config("Tasks { t { Node remove print } }").unwrap();
        model.tasks[0].conditions.push(CodeCondition {
            action: ConditionAction::Include,
            block: BlockKind::Catch,
            loc: Loc::default(),
        });
        let rendered = render_config(&model).unwrap();
        assert!(rendered.contains("include catch_block"));
        assert_eq!(parse_config(&rendered).unwrap().tasks, model.tasks);
    }

    #[test]
    fn models_with_errors_are_not_rendered() {
        let model =
            validate_semantics(parse_config("Tasks { t { Node remove next_token } }").unwrap());
        assert!(model
            .diagnostics
            .iter()
            .any(|d| d.severity == Severity::Error));
        assert!(render_config(&model).is_err());
    }
}
