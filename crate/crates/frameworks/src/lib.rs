//! Regular abstraction frameworks.
//!
//! A framework is a triple: a constraint alphabet Γ, a regular language of
//! constraint words over Γ, and an interpretation assigning to each
//! constraint word the set of configurations (words over Σ) that satisfy it.
//! The interpretation is a deterministic, complete transducer over the
//! paired alphabet Γ×Σ, so a constraint/configuration pair can be checked by
//! a single run on its convolution.
//!
//! [`builtins`] provides the disjunctive, xor and forbidden-views
//! frameworks; [`combine`] the union and convolution combinators that build
//! larger frameworks out of smaller ones.

pub mod builtins;
pub mod combine;
mod error;
pub mod oracle;

pub use builtins::{disjunctive_framework, views_framework, xor_framework};
pub use combine::{convolution_framework, union_framework};
pub use error::FrameworkError;

use automata::{ops, Alphabet, Nfa, NfaBuilder, StateId, SymbolId, Word};
use transducers::Transducer;

/// An abstraction framework over a configuration alphabet Σ.
///
/// `constraints` is the language of admissible constraint words over the
/// constraint alphabet `gamma`; `interp` decides, per convolution, whether a
/// configuration satisfies a constraint. The interpretation automaton is
/// required to be deterministic and complete so that it also assigns a
/// (meaningless but harmless) verdict to words outside the constraint
/// language; such words are never consulted.
#[derive(Clone)]
pub struct Framework {
    gamma: Alphabet,
    sigma: Alphabet,
    constraints: Nfa,
    interp: Transducer,
    delta: DeltaTable,
}

impl std::fmt::Debug for Framework {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Framework")
            .field("gamma", &self.gamma.summary())
            .field("sigma", &self.sigma.summary())
            .field("constraint_states", &self.constraints.num_states())
            .field("interp_states", &self.interp.num_states())
            .finish()
    }
}

impl Framework {
    /// Validates the component alphabets and the determinism and
    /// completeness of the interpretation automaton.
    pub fn new(
        gamma: Alphabet,
        sigma: Alphabet,
        constraints: Nfa,
        interp: Transducer,
    ) -> Result<Framework, FrameworkError> {
        if constraints.alphabet() != &gamma {
            return Err(FrameworkError::ConstraintAlphabet {
                expected: gamma.summary(),
                found: constraints.alphabet().summary(),
            });
        }
        if interp.left_alphabet() != &gamma {
            return Err(FrameworkError::InterpAlphabet {
                expected: gamma.summary(),
                found: interp.left_alphabet().summary(),
            });
        }
        if interp.right_alphabet() != &sigma {
            return Err(FrameworkError::InterpAlphabet {
                expected: sigma.summary(),
                found: interp.right_alphabet().summary(),
            });
        }
        let delta = DeltaTable::new(interp.automaton())?;
        Ok(Framework {
            gamma,
            sigma,
            constraints,
            interp,
            delta,
        })
    }

    /// The constraint alphabet Γ.
    pub fn gamma(&self) -> &Alphabet {
        &self.gamma
    }

    /// The configuration alphabet Σ.
    pub fn sigma(&self) -> &Alphabet {
        &self.sigma
    }

    /// The language of admissible constraint words.
    pub fn constraints(&self) -> &Nfa {
        &self.constraints
    }

    /// The interpretation transducer over Γ×Σ.
    pub fn interp(&self) -> &Transducer {
        &self.interp
    }

    /// True if `a` is an admissible constraint word.
    pub fn is_constraint(&self, a: &[SymbolId]) -> bool {
        ops::accepts(&self.constraints, a).unwrap_or(false)
    }

    pub(crate) fn delta(&self) -> &DeltaTable {
        &self.delta
    }

    /// The set of configurations satisfying the constraint word `a`, as an
    /// NFA over Σ: the interpretation with its Γ-track fixed to `a`.
    ///
    /// Words over Σ shorter than `a` run against the pad-extension of `a`;
    /// words longer than `a` keep reading with the Γ-track already padded.
    pub fn interpret(&self, a: &[SymbolId]) -> Result<Nfa, FrameworkError> {
        if !self.is_constraint(a) {
            return Err(FrameworkError::ConstraintOutsideDomain {
                word: self.gamma.render(a),
            });
        }
        let auto = self.interp.automaton();
        let pair = auto.alphabet();
        let gamma_pad = self.gamma.size();
        let sigma_pad = self.sigma.size();
        let nq = auto.num_states();
        let len = a.len();
        let state_of = |q: StateId, i: usize| q * (len + 1) + i;

        // A product state (q, i) accepts when running the rest of `a`
        // against pads from q lands in a final state. Computed back to
        // front: chase_final[i][q] covers the suffix a[i..].
        let mut chase_final = vec![false; (len + 1) * nq];
        for q in 0..nq {
            chase_final[len * nq + q] = auto.is_final(q);
        }
        for i in (0..len).rev() {
            for q in 0..nq {
                let next = self.delta.step(q, pair.pair_id(a[i], sigma_pad));
                chase_final[i * nq + q] = chase_final[(i + 1) * nq + next];
            }
        }

        let mut builder = NfaBuilder::new(self.sigma.clone());
        builder.add_states(nq * (len + 1));
        for q in 0..nq {
            for i in 0..len {
                for s in 0..self.sigma.size() {
                    let next = self.delta.step(q, pair.pair_id(a[i], s));
                    builder.add_transition(state_of(q, i), s, state_of(next, i + 1));
                }
            }
            for s in 0..self.sigma.size() {
                let next = self.delta.step(q, pair.pair_id(gamma_pad, s));
                builder.add_transition(state_of(q, len), s, state_of(next, len));
            }
            for i in 0..=len {
                if chase_final[i * nq + q] {
                    builder.set_final(state_of(q, i));
                }
            }
        }
        builder.set_initial(state_of(self.delta.initial(), 0));
        Ok(ops::trim(&builder.build()))
    }
}

/// Dense transition table of a deterministic, complete automaton.
#[derive(Clone)]
pub(crate) struct DeltaTable {
    symbols: usize,
    initial: StateId,
    table: Vec<StateId>,
}

impl DeltaTable {
    /// Builds the table, rejecting automata that are not deterministic and
    /// complete over their whole alphabet.
    pub(crate) fn new(auto: &Nfa) -> Result<DeltaTable, FrameworkError> {
        if !auto.is_epsilon_free() {
            return Err(FrameworkError::InterpEpsilon);
        }
        if auto.initial_states().len() != 1 {
            return Err(FrameworkError::InterpInitialStates {
                count: auto.initial_states().len(),
            });
        }
        let symbols = auto.alphabet().size();
        let mut table = vec![usize::MAX; auto.num_states() * symbols];
        for &(p, sym, q) in auto.transitions() {
            let slot = &mut table[p * symbols + sym];
            if *slot != usize::MAX {
                return Err(FrameworkError::InterpNondeterministic {
                    state: p,
                    symbol: auto.alphabet().name_of(sym).to_string(),
                });
            }
            *slot = q;
        }
        for p in 0..auto.num_states() {
            for sym in 0..symbols {
                if table[p * symbols + sym] == usize::MAX {
                    return Err(FrameworkError::InterpIncomplete {
                        state: p,
                        symbol: auto.alphabet().name_of(sym).to_string(),
                    });
                }
            }
        }
        Ok(DeltaTable {
            symbols,
            initial: auto.initial_states()[0],
            table,
        })
    }

    pub(crate) fn initial(&self) -> StateId {
        self.initial
    }

    pub(crate) fn step(&self, q: StateId, sym: SymbolId) -> StateId {
        self.table[q * self.symbols + sym]
    }
}

/// Lists all candidate view words Σ^{≤k} in length-then-lexicographic
/// order, the empty view first. The order fixes the meaning of the bits in
/// the views framework's constraint letters.
pub fn enumerate_views(sigma: &Alphabet, k: usize) -> Vec<Word> {
    automata::oracle::words_up_to(sigma, k)
}
