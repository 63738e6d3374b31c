use automata::AutomataError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TransducerError {
    /// The automaton handed to a constructor is not over the paired padded
    /// alphabet derived from the two track alphabets.
    #[error("transducer automaton alphabet mismatch: expected {expected}, found {found}")]
    AutomatonAlphabet { expected: String, found: String },

    /// Two transducers (or a transducer and a language) disagree on the
    /// alphabet of the track they are supposed to share.
    #[error("track alphabet mismatch: expected {expected}, found {found}")]
    TrackMismatch { expected: String, found: String },

    #[error(transparent)]
    Automata(#[from] AutomataError),
}
