//! Complete deterministic finite automata.

use crate::alphabet::Alphabet;
use crate::error::AutomataError;
use crate::nfa::Nfa;
use crate::{StateId, SymbolId};

/// A complete deterministic finite automaton: `delta` is total, the sink
/// state (if any) is explicit.
#[derive(Clone, Debug)]
pub struct Dfa {
    alphabet: Alphabet,
    num_states: usize,
    /// Row-major: `delta[q * alphabet.size() + s]`.
    delta: Vec<StateId>,
    initial: StateId,
    finals: Vec<StateId>,
}

impl Dfa {
    /// Validating constructor; `delta` must cover every (state, symbol) pair.
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        delta: Vec<StateId>,
        initial: StateId,
        mut finals: Vec<StateId>,
    ) -> Result<Dfa, AutomataError> {
        let expected = num_states * alphabet.size();
        if delta.len() != expected {
            return Err(AutomataError::IncompleteDelta {
                got: delta.len(),
                expected,
            });
        }
        if num_states == 0 {
            return Err(AutomataError::BadInitial(0));
        }
        for &q in delta.iter().chain(finals.iter()).chain([initial].iter()) {
            if q >= num_states {
                return Err(AutomataError::StateOutOfRange {
                    state: q,
                    num_states,
                });
            }
        }
        finals.sort_unstable();
        finals.dedup();
        Ok(Dfa {
            alphabet,
            num_states,
            delta,
            initial,
            finals,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initial_state(&self) -> StateId {
        self.initial
    }

    pub fn final_states(&self) -> &[StateId] {
        &self.finals
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.binary_search(&q).is_ok()
    }

    /// The successor of `q` on `symbol`.
    pub fn step(&self, q: StateId, symbol: SymbolId) -> StateId {
        self.delta[q * self.alphabet.size() + symbol]
    }

    /// Runs the automaton on a word of symbol ids.
    pub fn run(&self, word: &[SymbolId]) -> Result<StateId, AutomataError> {
        let mut q = self.initial;
        for &s in word {
            if s >= self.alphabet.size() {
                return Err(AutomataError::SymbolOutOfRange {
                    id: s,
                    size: self.alphabet.size(),
                });
            }
            q = self.step(q, s);
        }
        Ok(q)
    }

    pub fn accepts(&self, word: &[SymbolId]) -> Result<bool, AutomataError> {
        Ok(self.is_final(self.run(word)?))
    }

    /// View as an NFA (for the generic operations).
    pub fn to_nfa(&self) -> Nfa {
        let mut transitions = Vec::with_capacity(self.delta.len());
        for q in 0..self.num_states {
            for s in 0..self.alphabet.size() {
                transitions.push((q, s, self.step(q, s)));
            }
        }
        Nfa::new(
            self.alphabet.clone(),
            self.num_states,
            transitions,
            Vec::new(),
            vec![self.initial],
            self.finals.clone(),
        )
        .expect("a valid DFA is a valid NFA")
    }

    /// Number of live states: states from which some final state is
    /// reachable. For a minimal DFA this is the "trim" size, i.e. the total
    /// state count minus the explicit sink if one exists.
    pub fn live_state_count(&self) -> usize {
        let k = self.alphabet.size();
        // Backward reachability from the final states.
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); self.num_states];
        for q in 0..self.num_states {
            for s in 0..k {
                rev[self.step(q, s)].push(q);
            }
        }
        let mut live = vec![false; self.num_states];
        let mut stack: Vec<StateId> = self.finals.clone();
        for &q in &self.finals {
            live[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live.iter().filter(|&&b| b).count()
    }
}
