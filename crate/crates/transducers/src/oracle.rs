//! Enumeration oracles: relation membership decided word by word, with no
//! reliance on the relation algebra under test.

use std::collections::BTreeSet;

use automata::oracle::words_up_to;
use automata::Word;

use crate::Transducer;

/// Membership by direct convolution-and-run, usable as an oracle because it
/// exercises only the word-level acceptance path.
pub fn relates(t: &Transducer, u: &[usize], w: &[usize]) -> bool {
    t.relates(u, w).expect("oracle words use in-range symbols")
}

/// Every related pair with the given length bounds, in enumeration order.
pub fn pairs_up_to(t: &Transducer, max_left: usize, max_right: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for u in words_up_to(t.left_alphabet(), max_left) {
        for w in words_up_to(t.right_alphabet(), max_right) {
            if relates(t, &u, &w) {
                out.push((u.clone(), w));
            }
        }
    }
    out
}

/// The composed relation computed the slow way: existentially quantify the
/// middle word by enumeration.
pub fn join_by_enumeration(
    t1: &Transducer,
    t2: &Transducer,
    max_left: usize,
    max_right: usize,
    max_middle: usize,
) -> BTreeSet<(Word, Word)> {
    let middles = words_up_to(t1.right_alphabet(), max_middle);
    let mut out = BTreeSet::new();
    for u in words_up_to(t1.left_alphabet(), max_left) {
        for w in words_up_to(t2.right_alphabet(), max_right) {
            if middles
                .iter()
                .any(|v| relates(t1, &u, v) && relates(t2, v, &w))
            {
                out.insert((u.clone(), w));
            }
        }
    }
    out
}
