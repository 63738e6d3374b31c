//! Brute-force reference implementations used to cross-check the automaton
//! algorithms. These deliberately avoid the subset construction, partition
//! refinement and product machinery they are used to validate.

use std::collections::BTreeSet;

use crate::alphabet::Alphabet;
use crate::nfa::Nfa;
use crate::ops::accepts;
use crate::{StateId, Word};

/// All words over the alphabet of length at most `max_len`, ordered by
/// length and then lexicographically by symbol id.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.size());
        for w in &layer {
            for s in alphabet.ids() {
                let mut w2 = w.clone();
                w2.push(s);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// All words of exactly length `len`.
pub fn words_of_length(alphabet: &Alphabet, len: usize) -> Vec<Word> {
    words_up_to(alphabet, len)
        .into_iter()
        .filter(|w| w.len() == len)
        .collect()
}

/// The language of `a` restricted to words of length at most `max_len`,
/// computed by membership queries on every candidate word.
pub fn language_up_to(a: &Nfa, max_len: usize) -> BTreeSet<Word> {
    words_up_to(a.alphabet(), max_len)
        .into_iter()
        .filter(|w| accepts(a, w).expect("enumerated words use valid ids"))
        .collect()
}

/// Membership by explicit enumeration of runs: tries every sequence of
/// transition choices, with a per-position bound on epsilon steps. This is
/// an independent check for [`accepts`].
pub fn accepts_by_run_enumeration(a: &Nfa, word: &Word) -> bool {
    fn search(a: &Nfa, word: &[usize], q: StateId, pos: usize, eps_seen: &mut Vec<StateId>) -> bool {
        if pos == word.len() && a.is_final(q) {
            return true;
        }
        if pos < word.len() {
            for r in a.successors(q, word[pos]) {
                if search(a, word, r, pos + 1, &mut vec![r]) {
                    return true;
                }
            }
        }
        for &(p, r) in a.epsilon_transitions() {
            if p == q && !eps_seen.contains(&r) {
                eps_seen.push(r);
                if search(a, word, r, pos, eps_seen) {
                    return true;
                }
            }
        }
        false
    }
    a.initial_states()
        .iter()
        .any(|&q| search(a, word, q, 0, &mut vec![q]))
}
