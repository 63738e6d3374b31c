use automata::AutomataError;
use thiserror::Error;
use transducers::TransducerError;

/// Errors raised while building or querying an abstraction framework.
#[derive(Debug, Error)]
pub enum FrameworkError {
    #[error("constraint automaton is over {found}, expected the constraint alphabet {expected}")]
    ConstraintAlphabet { expected: String, found: String },

    #[error("interpretation track mismatch: expected {expected}, found {found}")]
    InterpAlphabet { expected: String, found: String },

    #[error("configuration alphabets differ: {left} vs {right}")]
    SigmaMismatch { left: String, right: String },

    #[error("interpretation automaton must be epsilon-free")]
    InterpEpsilon,

    #[error("interpretation automaton must have exactly one initial state, found {count}")]
    InterpInitialStates { count: usize },

    #[error("interpretation is nondeterministic: state {state} has multiple transitions on {symbol}")]
    InterpNondeterministic { state: usize, symbol: String },

    #[error("interpretation is incomplete: state {state} has no transition on {symbol}")]
    InterpIncomplete { state: usize, symbol: String },

    #[error("constraint word \"{word}\" is outside the framework's constraint language")]
    ConstraintOutsideDomain { word: String },

    #[error("{views} views of length at most {k} exceed the supported bound of {max}; lower k or shrink the alphabet")]
    TooManyViews { views: usize, k: usize, max: usize },

    #[error(transparent)]
    Automata(#[from] AutomataError),

    #[error(transparent)]
    Transducer(#[from] TransducerError),
}
