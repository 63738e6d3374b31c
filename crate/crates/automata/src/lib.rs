//! Finite automata over indexed alphabets.
//!
//! This crate provides the alphabet machinery (padded, paired, powerset,
//! product and tagged-union alphabets), immutable NFA/DFA values, and the
//! boolean and structural operations the rest of the toolkit builds on:
//! intersection, union, determinization, complementation, minimization,
//! emptiness with shortest witnesses, and language equivalence with
//! shortest distinguishing words.
//!
//! All operations are deterministic: ties are broken by symbol id and BFS
//! discovery order, so witnesses and state numberings are reproducible.

pub mod alphabet;
pub mod dfa;
pub mod dot;
mod error;
pub mod lang;
pub mod nfa;
pub mod ops;
pub mod oracle;

pub use alphabet::{Alphabet, PAD_NAME};
pub use dfa::Dfa;
pub use error::AutomataError;
pub use lang::Lang;
pub use nfa::{word_of, Nfa, NfaBuilder};
pub use ops::{
    accepts, complement, determinize, eliminate_epsilon, equivalent, intersect, is_empty,
    length_window, minimize, same_language, trim, union,
};

/// Dense index of a symbol within an [`Alphabet`].
pub type SymbolId = usize;
/// Index of an automaton state.
pub type StateId = usize;
/// A word as a sequence of symbol ids.
pub type Word = Vec<SymbolId>;
