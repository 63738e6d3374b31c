//! Binary regular relations ("transducers") represented as NFAs over the
//! paired padded alphabet of their two tracks, together with the relation
//! algebra: inverse, composition, projection, image/preimage, identity,
//! relation complement.
//!
//! A pair (u, w) of words belongs to the relation iff the convolution of u
//! and w — the two words written on top of each other, aligned left, the
//! shorter one padded — is accepted by the automaton. Public constructors
//! normalize the automaton so it only accepts such valid convolutions (the
//! pad never appears on both tracks at once and each track's pads form a
//! suffix).

mod error;
mod ops;
pub mod oracle;

pub use error::TransducerError;
pub use ops::{
    complement_relation, compose, cross, identity_on, image, inverse, preimage, project,
};

use automata::{accepts, intersect, trim, Alphabet, Nfa, SymbolId, Word};

/// A binary regular relation between words over `left` and words over
/// `right`.
#[derive(Debug, Clone)]
pub struct Transducer {
    left: Alphabet,
    right: Alphabet,
    auto: Nfa,
    length_preserving: bool,
}

impl Transducer {
    /// Wraps `auto` (over `Alphabet::paired(&left, &right)`) as a relation,
    /// normalizing it to accept only valid convolutions.
    pub fn new(left: Alphabet, right: Alphabet, auto: Nfa) -> Result<Transducer, TransducerError> {
        check_pair_alphabet(&left, &right, &auto)?;
        let valid = valid_convolutions(&left, &right);
        let auto = trim(&intersect(&auto, &valid)?);
        Ok(Transducer::assemble(left, right, auto))
    }

    /// Wraps `auto` without the normalization pass.
    ///
    /// The caller asserts either that `auto` already accepts only valid
    /// convolutions, or that words outside the valid-convolution language
    /// are never consulted (the abstraction-framework interpretations are
    /// deliberately complete automata of this kind and are re-normalized
    /// before entering any relation-algebra operation).
    pub fn from_automaton_unchecked(
        left: Alphabet,
        right: Alphabet,
        auto: Nfa,
    ) -> Result<Transducer, TransducerError> {
        check_pair_alphabet(&left, &right, &auto)?;
        Ok(Transducer::assemble(left, right, auto))
    }

    /// The empty relation.
    pub fn empty(left: Alphabet, right: Alphabet) -> Transducer {
        let pair = Alphabet::paired(&left, &right);
        Transducer::assemble(left, right, Nfa::empty(pair))
    }

    fn assemble(left: Alphabet, right: Alphabet, auto: Nfa) -> Transducer {
        let length_preserving = compute_length_preserving(&left, &right, &auto);
        Transducer {
            left,
            right,
            auto,
            length_preserving,
        }
    }

    /// Re-runs the normalization pass, restricting the automaton to valid
    /// convolutions. Needed before feeding a deliberately-complete automaton
    /// (such as a framework interpretation) into the relation algebra.
    pub fn normalized(&self) -> Transducer {
        Transducer::new(self.left.clone(), self.right.clone(), self.auto.clone())
            .expect("alphabet already checked")
    }

    pub fn left_alphabet(&self) -> &Alphabet {
        &self.left
    }

    pub fn right_alphabet(&self) -> &Alphabet {
        &self.right
    }

    /// The underlying automaton, over `Alphabet::paired(left, right)`.
    pub fn automaton(&self) -> &Nfa {
        &self.auto
    }

    pub fn num_states(&self) -> usize {
        self.auto.num_states()
    }

    /// True iff no useful (reachable and co-reachable) transition carries a
    /// pad on either track, i.e. the relation only relates words of equal
    /// length.
    pub fn is_length_preserving(&self) -> bool {
        self.length_preserving
    }

    /// Membership test: is (u, w) in the relation?
    pub fn relates(&self, u: &[SymbolId], w: &[SymbolId]) -> Result<bool, TransducerError> {
        let word = convolve(self.auto.alphabet(), u, w)?;
        Ok(accepts(&self.auto, &word)?)
    }

    /// GraphViz rendering with `a/b` edge labels (`_` is the pad).
    pub fn to_dot(&self, name: &str) -> String {
        automata::dot::nfa_to_dot(&self.auto, name)
    }
}

fn check_pair_alphabet(
    left: &Alphabet,
    right: &Alphabet,
    auto: &Nfa,
) -> Result<(), TransducerError> {
    let expected = Alphabet::paired(left, right);
    if auto.alphabet() != &expected {
        return Err(TransducerError::AutomatonAlphabet {
            expected: expected.summary(),
            found: auto.alphabet().summary(),
        });
    }
    Ok(())
}

fn compute_length_preserving(left: &Alphabet, right: &Alphabet, auto: &Nfa) -> bool {
    let lpad = left.size();
    let rpad = right.size();
    let useful = trim(auto);
    useful.transitions().iter().all(|&(_, sym, _)| {
        let (l, r) = useful.alphabet().pair_components(sym);
        l != lpad && r != rpad
    })
}

/// The convolution of `u` and `w`: both words written on top of each other,
/// aligned left, the shorter padded. Returns a word over the paired padded
/// alphabet.
pub fn convolve(
    pair: &Alphabet,
    u: &[SymbolId],
    w: &[SymbolId],
) -> Result<Word, TransducerError> {
    let (left_padded, right_padded) = pair
        .pair_parts()
        .expect("convolve requires a paired alphabet");
    let lpad = left_padded.size() - 1;
    let rpad = right_padded.size() - 1;
    for &s in u {
        if s >= lpad {
            return Err(automata::AutomataError::SymbolOutOfRange { id: s, size: lpad }.into());
        }
    }
    for &s in w {
        if s >= rpad {
            return Err(automata::AutomataError::SymbolOutOfRange { id: s, size: rpad }.into());
        }
    }
    let len = u.len().max(w.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let l = u.get(i).copied().unwrap_or(lpad);
        let r = w.get(i).copied().unwrap_or(rpad);
        out.push(pair.pair_id(l, r));
    }
    Ok(out)
}

/// The fixed three-state automaton accepting exactly the valid convolutions:
/// no letter pads both tracks, and once a track pads it pads to the end.
pub fn valid_convolutions(left: &Alphabet, right: &Alphabet) -> Nfa {
    let pair = Alphabet::paired(left, right);
    let lpad = left.size();
    let rpad = right.size();
    let mut transitions = Vec::new();
    for l in 0..=lpad {
        for r in 0..=rpad {
            let sym = pair.pair_id(l, r);
            match (l == lpad, r == rpad) {
                (false, false) => transitions.push((0, sym, 0)),
                (true, false) => {
                    transitions.push((0, sym, 1));
                    transitions.push((1, sym, 1));
                }
                (false, true) => {
                    transitions.push((0, sym, 2));
                    transitions.push((2, sym, 2));
                }
                (true, true) => {}
            }
        }
    }
    Nfa::new(pair, 3, transitions, vec![], vec![0], vec![0, 1, 2])
        .expect("fixed automaton is well-formed")
}
