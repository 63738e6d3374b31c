//! Union and convolution of frameworks.

use crate::{Framework, FrameworkError};
use automata::{ops, Alphabet, Nfa, NfaBuilder, StateId};
use std::collections::HashMap;
use transducers::Transducer;

fn check_sigma(f1: &Framework, f2: &Framework) -> Result<(), FrameworkError> {
    if f1.sigma() != f2.sigma() {
        return Err(FrameworkError::SigmaMismatch {
            left: f1.sigma().summary(),
            right: f2.sigma().summary(),
        });
    }
    Ok(())
}

/// Rebuilds a constraint automaton over the tagged union alphabet, with
/// every symbol mapped to its tagged counterpart.
fn retag(a: &Nfa, gamma: &Alphabet, side: u8) -> Result<Nfa, FrameworkError> {
    let transitions = a
        .transitions()
        .iter()
        .map(|&(p, sym, q)| (p, gamma.tagged_id(side, sym), q))
        .collect();
    Ok(Nfa::new(
        gamma.clone(),
        a.num_states(),
        transitions,
        a.epsilon_transitions().to_vec(),
        a.initial_states().to_vec(),
        a.final_states().to_vec(),
    )?)
}

/// The union framework: constraint alphabets are tagged apart, the
/// constraint language is the union of the tagged sides, and a constraint is
/// interpreted by whichever side its letters come from. The empty constraint
/// word belongs to both sides; it is interpreted by side 1 when admissible
/// there and by side 2 otherwise.
///
/// The interpretation automaton has exactly n₁+n₂+2 states: both originals,
/// a fresh initial state, and a dead state for mixed-tag words.
pub fn union_framework(f1: &Framework, f2: &Framework) -> Result<Framework, FrameworkError> {
    check_sigma(f1, f2)?;
    let sigma = f1.sigma().clone();
    let gamma = Alphabet::tagged_union(f1.gamma(), f2.gamma());
    let constraints = ops::union(
        &retag(f1.constraints(), &gamma, 1)?,
        &retag(f2.constraints(), &gamma, 2)?,
    )?;

    let pair = Alphabet::paired(&gamma, &sigma);
    let pair1 = f1.interp().automaton().alphabet().clone();
    let pair2 = f2.interp().automaton().alphabet().clone();
    let gamma_pad = gamma.size();
    let pad1 = f1.gamma().size();
    let pad2 = f2.gamma().size();
    let sigma_pad = sigma.size();
    let n1 = f1.interp().num_states();
    let n2 = f2.interp().num_states();
    let side2 = |q: StateId| n1 + q;
    let fresh = n1 + n2;
    let dead = n1 + n2 + 1;

    let eps1 = f1.is_constraint(&[]);
    let eps2 = f2.is_constraint(&[]);

    let mut builder = NfaBuilder::new(pair.clone());
    builder.add_states(n1 + n2 + 2);
    for g in 0..=gamma_pad {
        for s in 0..=sigma_pad {
            let letter = pair.pair_id(g, s);
            let (tag, inner) = if g == gamma_pad {
                (0, 0)
            } else {
                gamma.tag_of(g)
            };

            for q in 0..n1 {
                let target = match tag {
                    0 => f1.delta().step(q, pair1.pair_id(pad1, s)),
                    1 => f1.delta().step(q, pair1.pair_id(inner, s)),
                    _ => dead,
                };
                builder.add_transition(q, letter, target);
            }
            for q in 0..n2 {
                let target = match tag {
                    0 => side2(f2.delta().step(q, pair2.pair_id(pad2, s))),
                    2 => side2(f2.delta().step(q, pair2.pair_id(inner, s))),
                    _ => dead,
                };
                builder.add_transition(side2(q), letter, target);
            }

            // The fresh initial state dispatches on the first letter's tag;
            // an initial Γ-pad commits to whichever side admits the empty
            // constraint word.
            let target = match tag {
                1 => f1.delta().step(f1.delta().initial(), pair1.pair_id(inner, s)),
                2 => side2(f2.delta().step(f2.delta().initial(), pair2.pair_id(inner, s))),
                _ if s == sigma_pad => dead,
                _ if eps1 => f1.delta().step(f1.delta().initial(), pair1.pair_id(pad1, s)),
                _ if eps2 => side2(f2.delta().step(f2.delta().initial(), pair2.pair_id(pad2, s))),
                _ => dead,
            };
            builder.add_transition(fresh, letter, target);
            builder.add_transition(dead, letter, dead);
        }
    }
    for q in 0..n1 {
        if f1.interp().automaton().is_final(q) {
            builder.set_final(q);
        }
    }
    for q in 0..n2 {
        if f2.interp().automaton().is_final(q) {
            builder.set_final(side2(q));
        }
    }
    let fresh_final = if eps1 {
        f1.interp().automaton().is_final(f1.delta().initial())
    } else if eps2 {
        f2.interp().automaton().is_final(f2.delta().initial())
    } else {
        false
    };
    if fresh_final {
        builder.set_final(fresh);
    }
    builder.set_initial(fresh);

    let interp = Transducer::from_automaton_unchecked(gamma.clone(), sigma.clone(), builder.build())?;
    Framework::new(gamma, sigma, constraints, interp)
}

/// Lifts a constraint automaton over one factor of a product alphabet to the
/// product, leaving the other factor unconstrained.
fn lift(a: &Nfa, gamma: &Alphabet, left_side: bool) -> Result<Nfa, FrameworkError> {
    let (g1, g2) = gamma
        .product_parts()
        .expect("convolution constraint alphabet is a product");
    let other = if left_side { g2.size() } else { g1.size() };
    let a = ops::eliminate_epsilon(a);
    let mut transitions = Vec::new();
    for &(p, sym, q) in a.transitions() {
        for o in 0..other {
            let id = if left_side {
                gamma.product_id(sym, o)
            } else {
                gamma.product_id(o, sym)
            };
            transitions.push((p, id, q));
        }
    }
    Ok(Nfa::new(
        gamma.clone(),
        a.num_states(),
        transitions,
        Vec::new(),
        a.initial_states().to_vec(),
        a.final_states().to_vec(),
    )?)
}

/// The convolution framework: constraint letters are pairs, the constraint
/// language is the set of equal-length overlays of both sides' constraints,
/// and a configuration satisfies a pair constraint when it satisfies both
/// components. The interpretation is the product of both interpretations,
/// restricted to its reachable part (at most n₁·n₂ states).
pub fn convolution_framework(f1: &Framework, f2: &Framework) -> Result<Framework, FrameworkError> {
    check_sigma(f1, f2)?;
    let sigma = f1.sigma().clone();
    let gamma = Alphabet::product(f1.gamma(), f2.gamma());
    let constraints = ops::intersect(
        &lift(f1.constraints(), &gamma, true)?,
        &lift(f2.constraints(), &gamma, false)?,
    )?;

    let pair = Alphabet::paired(&gamma, &sigma);
    let pair1 = f1.interp().automaton().alphabet().clone();
    let pair2 = f2.interp().automaton().alphabet().clone();
    let gamma_pad = gamma.size();
    let pad1 = f1.gamma().size();
    let pad2 = f2.gamma().size();
    let sigma_pad = sigma.size();

    let mut builder = NfaBuilder::new(pair.clone());
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let initial = (f1.delta().initial(), f2.delta().initial());
    index.insert(initial, builder.add_state());
    builder.set_initial(0);
    let mut queue = vec![initial];
    while let Some((q1, q2)) = queue.pop() {
        let from = index[&(q1, q2)];
        if f1.interp().automaton().is_final(q1) && f2.interp().automaton().is_final(q2) {
            builder.set_final(from);
        }
        for g in 0..=gamma_pad {
            let (c1, c2) = if g == gamma_pad {
                (pad1, pad2)
            } else {
                gamma.product_components(g)
            };
            for s in 0..=sigma_pad {
                let target = (
                    f1.delta().step(q1, pair1.pair_id(c1, s)),
                    f2.delta().step(q2, pair2.pair_id(c2, s)),
                );
                let to = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = builder.add_state();
                        index.insert(target, id);
                        queue.push(target);
                        id
                    }
                };
                builder.add_transition(from, pair.pair_id(g, s), to);
            }
        }
    }
    let interp = Transducer::from_automaton_unchecked(gamma.clone(), sigma.clone(), builder.build())?;
    Framework::new(gamma, sigma, constraints, interp)
}
