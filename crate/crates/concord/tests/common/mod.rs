//! Seeded generators shared by the integration suites.
#![allow(dead_code)] // each test target uses a different subset

use rand::rngs::StdRng;
use rand::Rng;

pub const VARS: [&str; 3] = ["a", "b", "c"];

/// Random initializer expression over literals, identifiers, and the four
/// operator families, with nesting depth at most `depth`.
pub fn gen_initializer(rng: &mut StdRng, depth: usize) -> String {
    if depth == 0 || rng.gen_bool(0.35) {
        return gen_leaf(rng);
    }
    match rng.gen_range(0..8) {
        0 => format!("!{}", gen_initializer(rng, depth - 1)),
        1 => format!("~{}", gen_initializer(rng, depth - 1)),
        2 => format!("-{}", gen_initializer(rng, depth - 1)),
        3 => format!("({})", gen_initializer(rng, depth - 1)),
        _ => {
            let ops = [
                "+", "-", "*", "/", "%", "&", "|", "^", "<<", ">>", "&&", "||", "==", "!=", "<",
                ">", "<=", ">=",
            ];
            let op = ops[rng.gen_range(0..ops.len())];
            format!(
                "{} {} {}",
                gen_initializer(rng, depth - 1),
                op,
                gen_initializer(rng, depth - 1)
            )
        }
    }
}

fn gen_leaf(rng: &mut StdRng) -> String {
    match rng.gen_range(0..8) {
        0 => "true".into(),
        1 => "false".into(),
        2 => "\"s\"".into(),
        3 => "'c'".into(),
        4 => format!("{}.5", rng.gen_range(0..50)),
        5 | 6 => format!("{}", rng.gen_range(0..100)),
        _ => VARS[rng.gen_range(0..VARS.len())].to_string(),
    }
}

/// Random method body made of declarations, assignments, calls, prints,
/// branches, and loops. Always brace-balanced and parseable.
pub fn gen_method_source(rng: &mut StdRng, name_hint: usize) -> String {
    let mut body = String::new();
    let statements = rng.gen_range(1..=7);
    for _ in 0..statements {
        gen_statement(rng, 2, &mut body);
    }
    format!("void gen{name_hint}(int a, int b) {{\n{body}}}\n")
}

fn gen_statement(rng: &mut StdRng, depth: usize, out: &mut String) {
    let v = VARS[rng.gen_range(0..VARS.len())];
    let w = VARS[rng.gen_range(0..VARS.len())];
    match rng.gen_range(0..10) {
        0 => out.push_str(&format!("int {v} = {};\n", gen_initializer(rng, 2))),
        1 => out.push_str(&format!("{v} = {w} + 1;\n")),
        2 => out.push_str(&format!("{v} = {};\n", rng.gen_range(0..10))),
        3 => out.push_str(&format!("use({v});\n")),
        4 => out.push_str(&format!("System.out.println({v});\n")),
        5 if depth > 0 => {
            out.push_str(&format!("if ({v} > {w}) {{\n", v = v, w = w));
            gen_statement(rng, depth - 1, out);
            if rng.gen_bool(0.5) {
                out.push_str("} else {\n");
                gen_statement(rng, depth - 1, out);
            }
            out.push_str("}\n");
        }
        6 if depth > 0 => {
            out.push_str(&format!("while ({v} > 0) {{\n"));
            gen_statement(rng, depth - 1, out);
            out.push_str(&format!("{v} = {v} - 1;\n"));
            out.push_str("}\n");
        }
        7 if depth > 0 => {
            out.push_str(&format!(
                "for (int i{depth} = 0; i{depth} < {v}; ++i{depth}) {{\n"
            ));
            gen_statement(rng, depth - 1, out);
            out.push_str("}\n");
        }
        8 => out.push_str(&format!(
            "return{};\n",
            if rng.gen_bool(0.5) { " 0" } else { "" }
        )),
        _ => out.push_str(&format!("helper({v}, {w});\n")),
    }
}

/// Random structured program for dataflow checks: at most `max_stmts`
/// CFG statements (simple statements plus conditions) over [`VARS`].
pub fn gen_flow_program(rng: &mut StdRng, max_stmts: usize) -> String {
    let mut budget = rng.gen_range(2..=max_stmts);
    let mut body = String::new();
    while budget > 0 {
        gen_flow_statement(rng, &mut budget, 2, &mut body);
    }
    format!("void flow(int a) {{\n{body}}}\n")
}

fn gen_flow_statement(rng: &mut StdRng, budget: &mut usize, depth: usize, out: &mut String) {
    if *budget == 0 {
        return;
    }
    let v = VARS[rng.gen_range(0..VARS.len())];
    let w = VARS[rng.gen_range(0..VARS.len())];
    let choice = if depth == 0 || *budget < 3 {
        rng.gen_range(0..4)
    } else {
        rng.gen_range(0..7)
    };
    match choice {
        0 => {
            out.push_str(&format!("{v} = 1;\n"));
            *budget -= 1;
        }
        1 => {
            out.push_str(&format!("use({v});\n"));
            *budget -= 1;
        }
        2 => {
            out.push_str(&format!("{v} = {w} + 1;\n"));
            *budget -= 1;
        }
        3 => {
            out.push_str(&format!("sink({v}, {w});\n"));
            *budget -= 1;
        }
        4 => {
            *budget -= 1; // the condition
            out.push_str(&format!("if ({v} > 0) {{\n"));
            gen_flow_statement(rng, budget, depth - 1, out);
            out.push_str("}\n");
        }
        5 => {
            *budget -= 1;
            out.push_str(&format!("if ({v} > 0) {{\n"));
            gen_flow_statement(rng, budget, depth - 1, out);
            out.push_str("} else {\n");
            gen_flow_statement(rng, budget, depth - 1, out);
            out.push_str("}\n");
        }
        _ => {
            *budget -= 1;
            out.push_str(&format!("while ({v} > 0) {{\n"));
            gen_flow_statement(rng, budget, depth - 1, out);
            out.push_str("}\n");
        }
    }
}
