use thiserror::Error;

/// Errors produced by alphabet and automaton constructors and operations.
#[derive(Debug, Error)]
pub enum AutomataError {
    #[error("duplicate symbol name {0:?}")]
    DuplicateSymbol(String),

    #[error("invalid symbol name {0:?}: names must be non-empty, free of whitespace and '/', and must not be the reserved pad \"_\"")]
    InvalidSymbolName(String),

    #[error("alphabet mismatch: expected {expected} but got {found}")]
    AlphabetMismatch { expected: String, found: String },

    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),

    #[error("symbol id {id} out of range for alphabet of size {size}")]
    SymbolOutOfRange { id: usize, size: usize },

    #[error("state {state} out of range for automaton with {num_states} states")]
    StateOutOfRange { state: usize, num_states: usize },

    #[error("initial state set must contain exactly one state for a DFA, got {0}")]
    BadInitial(usize),

    #[error("transition table has {got} entries, expected {expected} (states x symbols)")]
    IncompleteDelta { got: usize, expected: usize },

    #[error("powerset alphabet over {size} symbols exceeds the supported maximum of {max}")]
    PowersetTooLarge { size: usize, max: usize },

    #[error("alphabet {0} is not a padded alphabet")]
    NotPadded(String),

    #[error("alphabet {0} is not a paired alphabet")]
    NotPaired(String),
}
