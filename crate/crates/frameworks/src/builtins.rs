//! The three built-in frameworks: disjunctive (CNF clauses), xor
//! (exactly-one), and forbidden scattered views.

use crate::{combine::convolution_framework, enumerate_views, Framework, FrameworkError};
use automata::{Alphabet, Nfa, NfaBuilder, StateId, SymbolId, Word};
use std::collections::HashMap;
use transducers::Transducer;

/// Largest number of views `|Σ^{≤k}|` the views framework will enumerate.
pub const MAX_VIEWS: usize = 16;

/// The 1-clause disjunctive framework: a constraint word assigns one letter
/// set per position and a configuration of the same length satisfies it when
/// some position carries a letter from its set. Length mismatches satisfy
/// every constraint.
fn disjunctive_base(sigma: &Alphabet) -> Result<Framework, FrameworkError> {
    let gamma = Alphabet::powerset(sigma)?;
    let pair = Alphabet::paired(&gamma, sigma);
    let gamma_pad = gamma.size();
    let sigma_pad = sigma.size();

    let mut builder = NfaBuilder::new(pair.clone());
    builder.add_states(2);
    for g in 0..=gamma_pad {
        for s in 0..=sigma_pad {
            let letter = pair.pair_id(g, s);
            let matched = g == gamma_pad || s == sigma_pad || gamma.subset_contains(g, s);
            builder.add_transition(0, letter, if matched { 1 } else { 0 });
            builder.add_transition(1, letter, 1);
        }
    }
    builder.set_initial(0);
    builder.set_final(1);
    let interp = Transducer::from_automaton_unchecked(gamma.clone(), sigma.clone(), builder.build())?;
    let constraints = Nfa::universal(gamma.clone());
    Framework::new(gamma, sigma.clone(), constraints, interp)
}

/// The disjunctive framework with `b` clauses: the `b`-fold convolution of
/// the 1-clause framework. A constraint is a CNF formula with one positive
/// clause per convolution layer; its interpretation automaton has exactly
/// `2^b` reachable states.
pub fn disjunctive_framework(sigma: &Alphabet, b: usize) -> Result<Framework, FrameworkError> {
    assert!(b >= 1, "clause count must be at least 1");
    let mut f = disjunctive_base(sigma)?;
    for _ in 1..b {
        f = convolution_framework(&f, &disjunctive_base(sigma)?)?;
    }
    Ok(f)
}

/// The xor framework: a configuration of matching length satisfies a
/// constraint when exactly one position carries a letter from its set.
/// Length mismatches satisfy every constraint.
pub fn xor_framework(sigma: &Alphabet) -> Result<Framework, FrameworkError> {
    let gamma = Alphabet::powerset(sigma)?;
    let pair = Alphabet::paired(&gamma, sigma);
    let gamma_pad = gamma.size();
    let sigma_pad = sigma.size();

    // 0: no match yet; 1: one match; 2: too many matches; 3: pad seen.
    let mut builder = NfaBuilder::new(pair.clone());
    builder.add_states(4);
    for g in 0..=gamma_pad {
        for s in 0..=sigma_pad {
            let letter = pair.pair_id(g, s);
            if g == gamma_pad || s == sigma_pad {
                for q in 0..4 {
                    builder.add_transition(q, letter, 3);
                }
            } else {
                let matched = gamma.subset_contains(g, s);
                builder.add_transition(0, letter, if matched { 1 } else { 0 });
                builder.add_transition(1, letter, if matched { 2 } else { 1 });
                builder.add_transition(2, letter, 2);
                builder.add_transition(3, letter, 3);
            }
        }
    }
    builder.set_initial(0);
    builder.set_final(1);
    builder.set_final(3);
    let interp = Transducer::from_automaton_unchecked(gamma.clone(), sigma.clone(), builder.build())?;
    let constraints = Nfa::universal(gamma.clone());
    Framework::new(gamma, sigma.clone(), constraints, interp)
}

/// Name for a view word in the view base alphabet.
fn view_name(sigma: &Alphabet, view: &Word) -> String {
    if view.is_empty() {
        "-".to_string()
    } else {
        view.iter().map(|&s| sigma.name_of(s)).collect()
    }
}

/// States of the views interpretation automaton during construction.
#[derive(Clone, PartialEq, Eq, Hash)]
enum ViewState {
    Start,
    Dead,
    /// Fixed forbidden-view set and, per member view, the longest prefix
    /// matched as a scattered subword of the input read so far.
    Track { set: SymbolId, progress: Vec<u8> },
}

/// The forbidden-views framework: a constraint letter is a set F of view
/// words from Σ^{≤k}, a constraint word is the same letter repeated, and a
/// configuration of that length satisfies it when no view in F occurs as a
/// scattered subword. The framework is length-preserving: length mismatches
/// satisfy nothing.
pub fn views_framework(sigma: &Alphabet, k: usize) -> Result<Framework, FrameworkError> {
    assert!(k >= 1, "view length bound must be at least 1");
    let views = enumerate_views(sigma, k);
    if views.len() > MAX_VIEWS {
        return Err(FrameworkError::TooManyViews {
            views: views.len(),
            k,
            max: MAX_VIEWS,
        });
    }
    let names: Vec<String> = views.iter().map(|v| view_name(sigma, v)).collect();
    let view_base = Alphabet::new(names)?;
    let gamma = Alphabet::powerset(&view_base)?;
    let pair = Alphabet::paired(&gamma, sigma);
    let gamma_pad = gamma.size();
    let sigma_pad = sigma.size();

    // Constraint words are constant: one final state per set, entered and
    // looped on its own letter. The empty word is the (set-less) length-0
    // constraint.
    let mut constraints = NfaBuilder::new(gamma.clone());
    let start = constraints.add_state();
    constraints.set_initial(start);
    constraints.set_final(start);
    for set in 0..gamma.size() {
        let state = constraints.add_state();
        constraints.set_final(state);
        constraints.add_transition(start, set, state);
        constraints.add_transition(state, set, state);
    }
    let constraints = constraints.build();

    // Interpretation: advance every view of the fixed set greedily; a
    // completed view, a changed constraint letter, or any pad kills the run.
    let members: Vec<Vec<SymbolId>> = (0..gamma.size())
        .map(|set| gamma.subset_members(set))
        .collect();

    let mut builder = NfaBuilder::new(pair.clone());
    let mut index: HashMap<ViewState, StateId> = HashMap::new();
    let mut queue: Vec<ViewState> = Vec::new();
    let start = builder.add_state();
    index.insert(ViewState::Start, start);
    let dead = builder.add_state();
    index.insert(ViewState::Dead, dead);
    builder.set_initial(start);
    builder.set_final(start);

    let advance = |set: SymbolId, progress: &[u8], s: SymbolId| -> ViewState {
        let mut next = progress.to_vec();
        for (j, &view_id) in members[set].iter().enumerate() {
            let view = &views[view_id];
            let at = next[j] as usize;
            if at < view.len() && view[at] == s {
                next[j] += 1;
            }
            if next[j] as usize == view.len() {
                return ViewState::Dead;
            }
        }
        ViewState::Track { set, progress: next }
    };

    // Transitions out of Start: a real pair letter enters the tracking
    // component, anything else (pads, hence length mismatch) dies.
    for g in 0..=gamma_pad {
        for s in 0..=sigma_pad {
            let letter = pair.pair_id(g, s);
            let target = if g == gamma_pad || s == sigma_pad {
                ViewState::Dead
            } else {
                advance(g, &vec![0; members[g].len()], s)
            };
            let target = intern(target, &mut index, &mut builder, &mut queue);
            builder.add_transition(start, letter, target);
        }
    }
    for g in 0..=gamma_pad {
        for s in 0..=sigma_pad {
            builder.add_transition(dead, pair.pair_id(g, s), dead);
        }
    }
    while let Some(state) = queue.pop() {
        let (set, progress) = match &state {
            ViewState::Track { set, progress } => (*set, progress.clone()),
            _ => unreachable!("only tracking states are queued"),
        };
        let from = index[&state];
        for g in 0..=gamma_pad {
            for s in 0..=sigma_pad {
                let letter = pair.pair_id(g, s);
                let target = if g == set && s != sigma_pad {
                    advance(set, &progress, s)
                } else {
                    ViewState::Dead
                };
                let target = intern(target, &mut index, &mut builder, &mut queue);
                builder.add_transition(from, letter, target);
            }
        }
    }
    let interp = Transducer::from_automaton_unchecked(gamma.clone(), sigma.clone(), builder.build())?;
    Framework::new(gamma, sigma.clone(), constraints, interp)
}

fn intern(
    state: ViewState,
    index: &mut HashMap<ViewState, StateId>,
    builder: &mut NfaBuilder,
    queue: &mut Vec<ViewState>,
) -> StateId {
    if let Some(&id) = index.get(&state) {
        return id;
    }
    let id = builder.add_state();
    // Every tracking state is final: no forbidden view has completed and
    // no pad has been read, so constraint and configuration lengths agree.
    builder.set_final(id);
    index.insert(state.clone(), id);
    queue.push(state);
    id
}
