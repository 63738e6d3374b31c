//! Brute-force reference semantics for the built-in frameworks.
//!
//! Each predicate evaluates a constraint/configuration pair directly from
//! its combinatorial definition, without running the interpretation
//! transducer, so the two can be checked against each other.

use crate::Framework;
use automata::{Alphabet, SymbolId, Word};

/// Whether configuration `c` satisfies constraint `a`, by running the
/// interpretation transducer on the pair's convolution.
pub fn satisfies(f: &Framework, a: &[SymbolId], c: &[SymbolId]) -> bool {
    transducers::oracle::relates(f.interp(), a, c)
}

/// Flattens one (possibly nested-product) constraint letter into its
/// per-clause letter-set bitmasks.
fn clause_masks(gamma: &Alphabet, letter: SymbolId, out: &mut Vec<SymbolId>) {
    match gamma.product_parts() {
        Some((left, right)) => {
            let (l, r) = gamma.product_components(letter);
            clause_masks(left, l, out);
            clause_masks(right, r, out);
        }
        None => out.push(letter),
    }
}

/// Disjunctive (CNF) semantics: on matching lengths, every clause must have
/// some position whose configuration letter lies in the clause's set; a
/// length mismatch satisfies the constraint.
pub fn disjunctive_holds(gamma: &Alphabet, a: &[SymbolId], c: &[SymbolId]) -> bool {
    if a.len() != c.len() {
        return true;
    }
    if a.is_empty() {
        return false;
    }
    let columns: Vec<Vec<SymbolId>> = a
        .iter()
        .map(|&letter| {
            let mut masks = Vec::new();
            clause_masks(gamma, letter, &mut masks);
            masks
        })
        .collect();
    let clauses = columns[0].len();
    (0..clauses).all(|j| {
        (0..c.len()).any(|i| columns[i][j] & (1 << c[i]) != 0)
    })
}

/// Exactly-one semantics: on matching lengths, precisely one position's
/// configuration letter lies in its constraint set; a length mismatch
/// satisfies the constraint.
pub fn xor_holds(a: &[SymbolId], c: &[SymbolId]) -> bool {
    if a.len() != c.len() {
        return true;
    }
    let matches = a
        .iter()
        .zip(c)
        .filter(|&(&mask, &s)| mask & (1 << s) != 0)
        .count();
    matches == 1
}

/// True if `pattern` is a scattered subword of `word`.
pub fn is_scattered_subword(pattern: &[SymbolId], word: &[SymbolId]) -> bool {
    let mut matched = 0;
    for &s in word {
        if matched < pattern.len() && pattern[matched] == s {
            matched += 1;
        }
    }
    matched == pattern.len()
}

/// Forbidden-views semantics: `a` must be a constant word; `c` satisfies it
/// when the lengths match and no view in the constraint's set occurs as a
/// scattered subword of `c`. `views` lists the view words in bit order.
pub fn views_hold(views: &[Word], a: &[SymbolId], c: &[SymbolId]) -> bool {
    if a.iter().any(|&letter| letter != a[0]) {
        return false;
    }
    if a.len() != c.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    views
        .iter()
        .enumerate()
        .filter(|&(j, _)| a[0] & (1 << j) != 0)
        .all(|(_, view)| !is_scattered_subword(view, c))
}
