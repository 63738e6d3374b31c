//! The relation algebra: inverse, composition, projection, image and
//! preimage, identity relations, relation complement, and the cartesian
//! product of two languages.

use std::collections::HashMap;

use automata::{
    complement, eliminate_epsilon, intersect, trim, Alphabet, Nfa, NfaBuilder, StateId, SymbolId,
};

use crate::{valid_convolutions, Transducer, TransducerError};

/// Swaps the two tracks. Same state count.
pub fn inverse(t: &Transducer) -> Transducer {
    let left = t.right_alphabet().clone();
    let right = t.left_alphabet().clone();
    let old_pair = t.automaton().alphabet();
    let new_pair = Alphabet::paired(&left, &right);
    let transitions = t
        .automaton()
        .transitions()
        .iter()
        .map(|&(q, sym, q2)| {
            let (l, r) = old_pair.pair_components(sym);
            (q, new_pair.pair_id(r, l), q2)
        })
        .collect();
    let auto = Nfa::new(
        new_pair,
        t.automaton().num_states(),
        transitions,
        t.automaton().epsilon_transitions().to_vec(),
        t.automaton().initial_states().to_vec(),
        t.automaton().final_states().to_vec(),
    )
    .expect("track swap preserves well-formedness");
    Transducer::from_automaton_unchecked(left, right, auto)
        .expect("track swap preserves the pair alphabet")
}

/// State of the composition product: both runs live, or one side's entire
/// input already consumed (it parks in an accepting state while the other
/// track drains against the pad).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum ComposeState {
    Both(StateId, StateId),
    FirstDone(StateId),
    SecondDone(StateId),
}

/// Relation join: (u, w) is related iff some middle word v has (u, v) in
/// R(t1) and (v, w) in R(t2).
///
/// Product construction synchronized on the shared middle track. Both
/// operands must be in pad-suffix form (the public constructors guarantee
/// it); a deliberately-complete automaton must be `normalized()` first.
/// Output states ≤ l1·l2 + l1 + l2 before trimming.
pub fn compose(t1: &Transducer, t2: &Transducer) -> Result<Transducer, TransducerError> {
    if t1.right_alphabet() != t2.left_alphabet() {
        return Err(TransducerError::TrackMismatch {
            expected: t1.right_alphabet().summary(),
            found: t2.left_alphabet().summary(),
        });
    }
    let left = t1.left_alphabet().clone();
    let right = t2.right_alphabet().clone();
    let a1 = eliminate_epsilon(t1.automaton());
    let a2 = eliminate_epsilon(t2.automaton());
    let p1 = a1.alphabet();
    let p2 = a2.alphabet();
    let pair = Alphabet::paired(&left, &right);
    let apad = left.size();
    let bpad = t1.right_alphabet().size();
    let cpad = right.size();

    // a2's transitions from each state, bucketed by the middle-track symbol.
    let mut by_middle: Vec<Vec<Vec<(SymbolId, StateId)>>> =
        vec![vec![Vec::new(); bpad + 1]; a2.num_states()];
    for &(q, sym, q2) in a2.transitions() {
        let (b, c) = p2.pair_components(sym);
        by_middle[q][b].push((c, q2));
    }

    fn intern(
        s: ComposeState,
        index: &mut HashMap<ComposeState, StateId>,
        builder: &mut NfaBuilder,
        queue: &mut Vec<ComposeState>,
    ) -> StateId {
        *index.entry(s).or_insert_with(|| {
            queue.push(s);
            builder.add_state()
        })
    }

    let mut builder = NfaBuilder::new(pair.clone());
    let mut index: HashMap<ComposeState, StateId> = HashMap::new();
    let mut queue: Vec<ComposeState> = Vec::new();

    for &i1 in a1.initial_states() {
        for &i2 in a2.initial_states() {
            let id = intern(ComposeState::Both(i1, i2), &mut index, &mut builder, &mut queue);
            builder.set_initial(id);
        }
    }

    let mut cursor = 0;
    while cursor < queue.len() {
        let state = queue[cursor];
        cursor += 1;
        let from = index[&state];
        match state {
            ComposeState::Both(q1, q2) => {
                if a1.is_final(q1) && a2.is_final(q2) {
                    builder.set_final(from);
                }
                for (sym1, q1next) in a1.transitions_from(q1) {
                    let (a, b) = p1.pair_components(sym1);
                    if b != bpad {
                        // Both runs advance on a real middle letter.
                        for &(c, q2next) in &by_middle[q2][b] {
                            let to = intern(
                                ComposeState::Both(q1next, q2next),
                                &mut index,
                                &mut builder,
                                &mut queue,
                            );
                            if a == apad && c == cpad {
                                // The middle is longer than both outer
                                // words here; nothing shows in the output.
                                builder.add_epsilon(from, to);
                            } else {
                                builder.add_transition(from, pair.pair_id(a, c), to);
                            }
                        }
                    } else if a != apad {
                        // Middle exhausted, left track still running.
                        for &(c, q2next) in &by_middle[q2][bpad] {
                            if c != cpad {
                                let to = intern(
                                    ComposeState::Both(q1next, q2next),
                                    &mut index,
                                    &mut builder,
                                    &mut queue,
                                );
                                builder.add_transition(from, pair.pair_id(a, c), to);
                            }
                        }
                        // t2's whole input consumed: it parks in a final
                        // state while the left track drains.
                        if a2.is_final(q2) {
                            let to =
                                intern(ComposeState::SecondDone(q1next), &mut index, &mut builder, &mut queue);
                            builder.add_transition(from, pair.pair_id(a, cpad), to);
                        }
                    }
                }
                // t1's whole input consumed: right track drains.
                if a1.is_final(q1) {
                    for &(c, q2next) in &by_middle[q2][bpad] {
                        if c != cpad {
                            let to =
                                intern(ComposeState::FirstDone(q2next), &mut index, &mut builder, &mut queue);
                            builder.add_transition(from, pair.pair_id(apad, c), to);
                        }
                    }
                }
            }
            ComposeState::SecondDone(q1) => {
                if a1.is_final(q1) {
                    builder.set_final(from);
                }
                for (sym1, q1next) in a1.transitions_from(q1) {
                    let (a, b) = p1.pair_components(sym1);
                    if b == bpad && a != apad {
                        let to = intern(ComposeState::SecondDone(q1next), &mut index, &mut builder, &mut queue);
                        builder.add_transition(from, pair.pair_id(a, cpad), to);
                    }
                }
            }
            ComposeState::FirstDone(q2) => {
                if a2.is_final(q2) {
                    builder.set_final(from);
                }
                for &(c, q2next) in &by_middle[q2][bpad] {
                    if c != cpad {
                        let to = intern(ComposeState::FirstDone(q2next), &mut index, &mut builder, &mut queue);
                        builder.add_transition(from, pair.pair_id(apad, c), to);
                    }
                }
            }
        }
    }

    let auto = trim(&builder.build());
    Transducer::from_automaton_unchecked(left, right, auto)
}

/// Keeps one track of the relation; pad letters on the kept track become
/// ε-transitions, which are eliminated before returning.
pub fn project(t: &Transducer, track: u8) -> Nfa {
    assert!(track == 1 || track == 2, "track must be 1 or 2");
    let kept = if track == 1 {
        t.left_alphabet().clone()
    } else {
        t.right_alphabet().clone()
    };
    let pad = kept.size();
    let pair = t.automaton().alphabet();
    let mut builder = NfaBuilder::new(kept);
    builder.add_states(t.automaton().num_states());
    for &q in t.automaton().initial_states() {
        builder.set_initial(q);
    }
    for &q in t.automaton().final_states() {
        builder.set_final(q);
    }
    for &(q, q2) in t.automaton().epsilon_transitions() {
        builder.add_epsilon(q, q2);
    }
    for &(q, sym, q2) in t.automaton().transitions() {
        let (l, r) = pair.pair_components(sym);
        let s = if track == 1 { l } else { r };
        if s == pad {
            builder.add_epsilon(q, q2);
        } else {
            builder.add_transition(q, s, q2);
        }
    }
    eliminate_epsilon(&builder.build())
}

/// Post-image of a language under the relation: {w | some u in L(c) has
/// (u, w) related}.
pub fn image(c: &Nfa, t: &Transducer) -> Result<Nfa, TransducerError> {
    half_product(c, t, true)
}

/// Pre-image of a language under the relation: {u | some w in L(c) has
/// (u, w) related}.
pub fn preimage(t: &Transducer, c: &Nfa) -> Result<Nfa, TransducerError> {
    half_product(c, t, false)
}

/// Shared product of a one-track language with the relation, keeping the
/// other track. `forward` runs the language on the left track and keeps the
/// right one; otherwise the mirror image.
fn half_product(c: &Nfa, t: &Transducer, forward: bool) -> Result<Nfa, TransducerError> {
    let (bound_alpha, kept_alpha) = if forward {
        (t.left_alphabet(), t.right_alphabet())
    } else {
        (t.right_alphabet(), t.left_alphabet())
    };
    if c.alphabet() != bound_alpha {
        return Err(TransducerError::TrackMismatch {
            expected: bound_alpha.summary(),
            found: c.alphabet().summary(),
        });
    }
    let bound_pad = bound_alpha.size();
    let kept_pad = kept_alpha.size();
    let cc = eliminate_epsilon(c);
    let ta = eliminate_epsilon(t.automaton());
    let pair = ta.alphabet();

    fn intern(
        s: (StateId, StateId),
        index: &mut HashMap<(StateId, StateId), StateId>,
        builder: &mut NfaBuilder,
        queue: &mut Vec<(StateId, StateId)>,
    ) -> StateId {
        *index.entry(s).or_insert_with(|| {
            queue.push(s);
            builder.add_state()
        })
    }

    let mut builder = NfaBuilder::new(kept_alpha.clone());
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut queue: Vec<(StateId, StateId)> = Vec::new();
    for &qc in cc.initial_states() {
        for &qt in ta.initial_states() {
            let id = intern((qc, qt), &mut index, &mut builder, &mut queue);
            builder.set_initial(id);
        }
    }
    let mut cursor = 0;
    while cursor < queue.len() {
        let (qc, qt) = queue[cursor];
        cursor += 1;
        let from = index[&(qc, qt)];
        if cc.is_final(qc) && ta.is_final(qt) {
            builder.set_final(from);
        }
        for (sym, qt_next) in ta.transitions_from(qt) {
            let (l, r) = pair.pair_components(sym);
            let (bound_sym, kept_sym) = if forward { (l, r) } else { (r, l) };
            if bound_sym == bound_pad && kept_sym == kept_pad {
                continue;
            }
            if bound_sym == bound_pad {
                // The bound word has ended; it waits in place (acceptance
                // still requires it to have parked in a final state).
                let to = intern((qc, qt_next), &mut index, &mut builder, &mut queue);
                builder.add_transition(from, kept_sym, to);
            } else {
                for qc_next in cc.successors(qc, bound_sym) {
                    let to = intern((qc_next, qt_next), &mut index, &mut builder, &mut queue);
                    if kept_sym == kept_pad {
                        builder.add_epsilon(from, to);
                    } else {
                        builder.add_transition(from, kept_sym, to);
                    }
                }
            }
        }
    }
    Ok(trim(&eliminate_epsilon(&builder.build())))
}

/// The identity relation restricted to a language: {(u, u) | u in L(l)}.
/// One transducer state per state of `l`.
pub fn identity_on(l: &Nfa) -> Transducer {
    let alpha = l.alphabet().clone();
    let a = eliminate_epsilon(l);
    let pair = Alphabet::paired(&alpha, &alpha);
    let transitions = a
        .transitions()
        .iter()
        .map(|&(q, s, q2)| (q, pair.pair_id(s, s), q2))
        .collect();
    let auto = Nfa::new(
        pair,
        a.num_states(),
        transitions,
        vec![],
        a.initial_states().to_vec(),
        a.final_states().to_vec(),
    )
    .expect("relabeling preserves well-formedness");
    Transducer::from_automaton_unchecked(alpha.clone(), alpha, auto)
        .expect("pair alphabet built from the language's own alphabet")
}

/// All pairs of words NOT in the relation: automaton complement over the
/// paired padded alphabet, cut back down to the valid convolutions.
pub fn complement_relation(t: &Transducer) -> Transducer {
    let left = t.left_alphabet().clone();
    let right = t.right_alphabet().clone();
    let comp = complement(t.automaton()).to_nfa();
    let valid = valid_convolutions(&left, &right);
    let auto = trim(&intersect(&comp, &valid).expect("same paired alphabet"));
    Transducer::from_automaton_unchecked(left, right, auto)
        .expect("complement stays over the pair alphabet")
}

/// The full cartesian relation L(l) × L(r): every word of the first language
/// is related to every word of the second.
pub fn cross(l: &Nfa, r: &Nfa) -> Transducer {
    let left = l.alphabet().clone();
    let right = r.alphabet().clone();
    let pair = Alphabet::paired(&left, &right);
    let lpad = left.size();
    let rpad = right.size();

    // Track-1 component: spell a word of l on the left track, anything on
    // the right; after l finishes, pads self-loop at its final states.
    let la = eliminate_epsilon(l);
    let mut lift1 = NfaBuilder::new(pair.clone());
    lift1.add_states(la.num_states());
    for &q in la.initial_states() {
        lift1.set_initial(q);
    }
    for &q in la.final_states() {
        lift1.set_final(q);
        for rsym in 0..rpad {
            lift1.add_transition(q, pair.pair_id(lpad, rsym), q);
        }
    }
    for &(q, s, q2) in la.transitions() {
        for rsym in 0..=rpad {
            lift1.add_transition(q, pair.pair_id(s, rsym), q2);
        }
    }

    let ra = eliminate_epsilon(r);
    let mut lift2 = NfaBuilder::new(pair.clone());
    lift2.add_states(ra.num_states());
    for &q in ra.initial_states() {
        lift2.set_initial(q);
    }
    for &q in ra.final_states() {
        lift2.set_final(q);
        for lsym in 0..lpad {
            lift2.add_transition(q, pair.pair_id(lsym, rpad), q);
        }
    }
    for &(q, s, q2) in ra.transitions() {
        for lsym in 0..=lpad {
            lift2.add_transition(q, pair.pair_id(lsym, s), q2);
        }
    }

    let raw = intersect(&lift1.build(), &lift2.build()).expect("same paired alphabet");
    Transducer::new(left, right, raw).expect("pair alphabet matches by construction")
}
