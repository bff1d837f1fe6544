//! Pruning invariants checked over generated methods: bracket
//! preservation, idempotence, monotone shrinkage, and exemption
//! soundness.

mod common;

use common::gen_method_source;
use concord::dsl::{BlockKind, CodeCondition, ConditionAction, Loc, NodeKind};
use concord::pruner::{apply_conditions, collect_statements, prune_source};
use concord::subject::parse_subject;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;
use std::collections::BTreeSet;

fn all_targets() -> BTreeSet<NodeKind> {
    BTreeSet::from([
        NodeKind::SimpleAssignment,
        NodeKind::Print,
        NodeKind::Logging,
        NodeKind::SysExit,
    ])
}

fn bracket_counts(text: &str) -> BTreeMap<char, usize> {
    let mut counts = BTreeMap::new();
    for c in text.chars() {
        if matches!(c, '{' | '}' | '(' | ')') {
            *counts.entry(c).or_insert(0) += 1;
        }
    }
    counts
}

#[test]
fn brackets_outside_removed_spans_are_preserved() {
    let mut rng = StdRng::seed_from_u64(0xB0B_0001);
    for case in 0..300 {
        let source = gen_method_source(&mut rng, case);
        let ast = parse_subject(&source, "gen.java");
        let spans = collect_statements(&ast, &all_targets());
        let (pruned, report) = prune_source(&ast, &source, &all_targets(), &[]).unwrap();

        let mut expected = bracket_counts(&source);
        for span in &report.removed {
            for (c, n) in bracket_counts(&source[span.byte_start..span.byte_end]) {
                *expected.get_mut(&c).unwrap() -= n;
            }
        }
        assert_eq!(bracket_counts(&pruned), expected, "case {case}:\n{source}");

        // The pruned text still parses without file-level recovery noise.
        let reparsed = parse_subject(&pruned, "gen.java");
        assert!(
            reparsed.warnings.iter().all(|w| !w.contains("unclosed")),
            "case {case} left unbalanced braces:\n{pruned}"
        );
        let _ = spans;
    }
}

#[test]
fn pruning_twice_removes_nothing_new() {
    let mut rng = StdRng::seed_from_u64(0xB0B_0002);
    for case in 0..200 {
        let source = gen_method_source(&mut rng, case);
        let targets = all_targets();
        let ast = parse_subject(&source, "gen.java");
        let (once, _) = prune_source(&ast, &source, &targets, &[]).unwrap();
        let ast2 = parse_subject(&once, "gen.java");
        let (twice, second) = prune_source(&ast2, &once, &targets, &[]).unwrap();
        assert_eq!(once, twice, "case {case}");
        assert!(second.removed.is_empty(), "case {case}");
    }
}

#[test]
fn output_shrinks_exactly_when_spans_were_removed() {
    let mut rng = StdRng::seed_from_u64(0xB0B_0003);
    for case in 0..200 {
        let source = gen_method_source(&mut rng, case);
        let ast = parse_subject(&source, "gen.java");
        let (pruned, report) = prune_source(&ast, &source, &all_targets(), &[]).unwrap();
        assert!(pruned.len() <= source.len(), "case {case}");
        assert_eq!(
            pruned.len() < source.len(),
            !report.removed.is_empty(),
            "case {case}"
        );
        assert_eq!(report.rewritten_bytes, pruned.len(), "case {case}");
    }
}

#[test]
fn removed_spans_respect_exclusions() {
    let mut rng = StdRng::seed_from_u64(0xB0B_0004);
    for case in 0..200 {
        let source = gen_method_source(&mut rng, case);
        let ast = parse_subject(&source, "gen.java");
        // Random exclusion set per case.
        let conditions: Vec<CodeCondition> = BlockKind::ALL
            .iter()
            .filter(|_| rng.gen_bool(0.4))
            .map(|&block| CodeCondition {
                action: ConditionAction::Exclude,
                block,
                loc: Loc::default(),
            })
            .collect();
        let excluded: BTreeSet<BlockKind> = conditions.iter().map(|c| c.block).collect();
        let spans = collect_statements(&ast, &all_targets());
        let total = spans.len();
        let (keep, exempted) = apply_conditions(spans, &conditions);
        assert_eq!(keep.len() + exempted.len(), total, "case {case}");
        for span in &keep {
            assert!(
                span.enclosing.is_disjoint(&excluded),
                "case {case}: kept span inside an excluded block"
            );
        }
        for (span, reason) in &exempted {
            assert!(span.enclosing.contains(reason), "case {case}");
            assert!(excluded.contains(reason), "case {case}");
        }
    }
}

#[test]
fn reparsed_pruned_output_has_consistent_spans() {
    let mut rng = StdRng::seed_from_u64(0xB0B_0005);
    for case in 0..100 {
        let source = gen_method_source(&mut rng, case);
        let ast = parse_subject(&source, "gen.java");
        let (pruned, _) = prune_source(&ast, &source, &all_targets(), &[]).unwrap();
        let reparsed = parse_subject(&pruned, "gen.java");
        for node in &reparsed.nodes {
            let mut prev_end = node.span.0;
            for &c in &node.children {
                let cs = reparsed.node(c).span;
                assert!(cs.0 >= prev_end, "case {case}: overlapping children");
                assert!(cs.1 <= node.span.1, "case {case}: child escapes parent");
                prev_end = cs.1;
            }
        }
    }
}
