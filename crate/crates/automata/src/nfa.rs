//! Nondeterministic finite automata, immutable after construction.

use crate::alphabet::Alphabet;
use crate::error::AutomataError;
use crate::{StateId, SymbolId, Word};

/// A nondeterministic finite automaton over an indexed alphabet.
///
/// Epsilon transitions are permitted; the boolean operations in
/// [`crate::ops`] eliminate them internally where required.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    num_states: usize,
    transitions: Vec<(StateId, SymbolId, StateId)>,
    epsilon_transitions: Vec<(StateId, StateId)>,
    initial: Vec<StateId>,
    finals: Vec<StateId>,
}

impl Nfa {
    /// Validating constructor.
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        mut transitions: Vec<(StateId, SymbolId, StateId)>,
        mut epsilon_transitions: Vec<(StateId, StateId)>,
        mut initial: Vec<StateId>,
        mut finals: Vec<StateId>,
    ) -> Result<Nfa, AutomataError> {
        let check_state = |q: StateId| {
            if q >= num_states {
                Err(AutomataError::StateOutOfRange {
                    state: q,
                    num_states,
                })
            } else {
                Ok(())
            }
        };
        for &(p, s, q) in &transitions {
            check_state(p)?;
            check_state(q)?;
            if s >= alphabet.size() {
                return Err(AutomataError::SymbolOutOfRange {
                    id: s,
                    size: alphabet.size(),
                });
            }
        }
        for &(p, q) in &epsilon_transitions {
            check_state(p)?;
            check_state(q)?;
        }
        for &q in initial.iter().chain(finals.iter()) {
            check_state(q)?;
        }
        transitions.sort_unstable();
        transitions.dedup();
        epsilon_transitions.sort_unstable();
        epsilon_transitions.dedup();
        initial.sort_unstable();
        initial.dedup();
        finals.sort_unstable();
        finals.dedup();
        Ok(Nfa {
            alphabet,
            num_states,
            transitions,
            epsilon_transitions,
            initial,
            finals,
        })
    }

    /// The automaton with no states: recognises the empty language.
    pub fn empty(alphabet: Alphabet) -> Nfa {
        Nfa {
            alphabet,
            num_states: 0,
            transitions: Vec::new(),
            epsilon_transitions: Vec::new(),
            initial: Vec::new(),
            finals: Vec::new(),
        }
    }

    /// One-state automaton recognising every word over the alphabet.
    pub fn universal(alphabet: Alphabet) -> Nfa {
        let transitions = (0..alphabet.size()).map(|s| (0, s, 0)).collect();
        Nfa {
            alphabet,
            num_states: 1,
            transitions,
            epsilon_transitions: Vec::new(),
            initial: vec![0],
            finals: vec![0],
        }
    }

    /// Chain automaton recognising exactly `word`.
    pub fn single_word(alphabet: Alphabet, word: &[SymbolId]) -> Nfa {
        let transitions = word
            .iter()
            .enumerate()
            .map(|(i, &s)| (i, s, i + 1))
            .collect();
        Nfa {
            alphabet,
            num_states: word.len() + 1,
            transitions,
            epsilon_transitions: Vec::new(),
            initial: vec![0],
            finals: vec![word.len()],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn transitions(&self) -> &[(StateId, SymbolId, StateId)] {
        &self.transitions
    }

    pub fn epsilon_transitions(&self) -> &[(StateId, StateId)] {
        &self.epsilon_transitions
    }

    pub fn initial_states(&self) -> &[StateId] {
        &self.initial
    }

    pub fn final_states(&self) -> &[StateId] {
        &self.finals
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.binary_search(&q).is_ok()
    }

    pub fn is_epsilon_free(&self) -> bool {
        self.epsilon_transitions.is_empty()
    }

    /// Successors of `q` on `symbol` (no epsilon closure).
    pub fn successors(&self, q: StateId, symbol: SymbolId) -> impl Iterator<Item = StateId> + '_ {
        let start = self.transitions.partition_point(|&(p, s, _)| (p, s) < (q, symbol));
        self.transitions[start..]
            .iter()
            .take_while(move |&&(p, s, _)| p == q && s == symbol)
            .map(|&(_, _, r)| r)
    }

    /// Per-state outgoing transitions as `(symbol, target)` pairs.
    pub fn transitions_from(&self, q: StateId) -> impl Iterator<Item = (SymbolId, StateId)> + '_ {
        let start = self.transitions.partition_point(|&(p, _, _)| p < q);
        self.transitions[start..]
            .iter()
            .take_while(move |&&(p, _, _)| p == q)
            .map(|&(_, s, r)| (s, r))
    }
}

/// Incremental construction helper for [`Nfa`].
///
/// Builder misuse (out-of-range symbol or state ids) panics; use
/// [`Nfa::new`] for validated construction from untrusted input.
pub struct NfaBuilder {
    alphabet: Alphabet,
    num_states: usize,
    transitions: Vec<(StateId, SymbolId, StateId)>,
    epsilon_transitions: Vec<(StateId, StateId)>,
    initial: Vec<StateId>,
    finals: Vec<StateId>,
}

impl NfaBuilder {
    pub fn new(alphabet: Alphabet) -> NfaBuilder {
        NfaBuilder {
            alphabet,
            num_states: 0,
            transitions: Vec::new(),
            epsilon_transitions: Vec::new(),
            initial: Vec::new(),
            finals: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn add_state(&mut self) -> StateId {
        self.num_states += 1;
        self.num_states - 1
    }

    pub fn add_states(&mut self, n: usize) -> std::ops::Range<StateId> {
        let start = self.num_states;
        self.num_states += n;
        start..self.num_states
    }

    pub fn add_transition(&mut self, from: StateId, symbol: SymbolId, to: StateId) {
        assert!(from < self.num_states && to < self.num_states, "state out of range");
        assert!(symbol < self.alphabet.size(), "symbol out of range");
        self.transitions.push((from, symbol, to));
    }

    pub fn add_epsilon(&mut self, from: StateId, to: StateId) {
        assert!(from < self.num_states && to < self.num_states, "state out of range");
        self.epsilon_transitions.push((from, to));
    }

    pub fn set_initial(&mut self, q: StateId) {
        assert!(q < self.num_states, "state out of range");
        self.initial.push(q);
    }

    pub fn set_final(&mut self, q: StateId) {
        assert!(q < self.num_states, "state out of range");
        self.finals.push(q);
    }

    pub fn build(self) -> Nfa {
        Nfa::new(
            self.alphabet,
            self.num_states,
            self.transitions,
            self.epsilon_transitions,
            self.initial,
            self.finals,
        )
        .expect("builder-checked construction cannot fail")
    }
}

/// Convenience for tests and callers that hold words as names.
pub fn word_of(alphabet: &Alphabet, text: &str) -> Word {
    text.chars()
        .map(|c| {
            alphabet
                .id_of(&c.to_string())
                .unwrap_or_else(|| panic!("symbol {c:?} not in alphabet"))
        })
        .collect()
}
