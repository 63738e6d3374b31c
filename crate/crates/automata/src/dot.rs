//! Graphviz DOT rendering for debugging automata.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::dfa::Dfa;
use crate::nfa::Nfa;

/// Renders an NFA as a DOT digraph. Parallel edges between the same pair of
/// states are merged into one edge labelled with all symbol names.
pub fn nfa_to_dot(a: &Nfa, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", sanitize(name));
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=circle];");
    for &q in a.final_states() {
        let _ = writeln!(out, "  s{q} [shape=doublecircle];");
    }
    for (i, &q) in a.initial_states().iter().enumerate() {
        let _ = writeln!(out, "  init{i} [shape=point, style=invis];");
        let _ = writeln!(out, "  init{i} -> s{q};");
    }
    let mut labels: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for &(p, s, q) in a.transitions() {
        labels
            .entry((p, q))
            .or_default()
            .push(a.alphabet().name_of(s).to_string());
    }
    for &(p, q) in a.epsilon_transitions() {
        labels.entry((p, q)).or_default().push("ε".to_string());
    }
    for ((p, q), syms) in labels {
        let _ = writeln!(out, "  s{p} -> s{q} [label=\"{}\"];", syms.join(","));
    }
    let _ = writeln!(out, "}}");
    out
}

/// Renders a DFA as a DOT digraph.
pub fn dfa_to_dot(d: &Dfa, name: &str) -> String {
    nfa_to_dot(&d.to_nfa(), name)
}

fn sanitize(name: &str) -> String {
    let cleaned: String = name
        .chars()
        .map(|c| if c.is_alphanumeric() || c == '_' { c } else { '_' })
        .collect();
    if cleaned.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        format!("g_{cleaned}")
    } else if cleaned.is_empty() {
        "g".to_string()
    } else {
        cleaned
    }
}
