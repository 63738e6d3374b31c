//! Small combinator language for building NFAs in tests and model files.
//!
//! `Lang` terms are compiled by Thompson construction; the resulting NFA
//! contains epsilon transitions, which the operations in [`crate::ops`]
//! eliminate as needed.

use crate::alphabet::Alphabet;
use crate::error::AutomataError;
use crate::nfa::{Nfa, NfaBuilder};
use crate::SymbolId;

#[derive(Clone, Debug)]
pub enum Lang {
    Empty,
    Eps,
    Sym(SymbolId),
    Seq(Vec<Lang>),
    Alt(Vec<Lang>),
    Star(Box<Lang>),
    Plus(Box<Lang>),
}

impl Lang {
    pub fn letter(alphabet: &Alphabet, name: &str) -> Result<Lang, AutomataError> {
        Ok(Lang::Sym(alphabet.require(name)?))
    }

    /// Alternation of every symbol of the alphabet.
    pub fn any(alphabet: &Alphabet) -> Lang {
        Lang::Alt(alphabet.ids().map(Lang::Sym).collect())
    }

    pub fn word(ids: &[SymbolId]) -> Lang {
        Lang::Seq(ids.iter().copied().map(Lang::Sym).collect())
    }

    pub fn seq(parts: impl IntoIterator<Item = Lang>) -> Lang {
        Lang::Seq(parts.into_iter().collect())
    }

    pub fn alt(parts: impl IntoIterator<Item = Lang>) -> Lang {
        Lang::Alt(parts.into_iter().collect())
    }

    pub fn star(self) -> Lang {
        Lang::Star(Box::new(self))
    }

    pub fn plus(self) -> Lang {
        Lang::Plus(Box::new(self))
    }

    pub fn opt(self) -> Lang {
        Lang::Alt(vec![Lang::Eps, self])
    }

    /// Compiles to an NFA over the given alphabet.
    ///
    /// # Panics
    ///
    /// Panics if a symbol id is out of range for the alphabet.
    pub fn to_nfa(&self, alphabet: &Alphabet) -> Nfa {
        let mut b = NfaBuilder::new(alphabet.clone());
        let (start, end) = compile(self, &mut b);
        b.set_initial(start);
        b.set_final(end);
        b.build()
    }
}

fn compile(lang: &Lang, b: &mut NfaBuilder) -> (usize, usize) {
    match lang {
        Lang::Empty => (b.add_state(), b.add_state()),
        Lang::Eps => {
            let q = b.add_state();
            (q, q)
        }
        Lang::Sym(s) => {
            let p = b.add_state();
            let q = b.add_state();
            b.add_transition(p, *s, q);
            (p, q)
        }
        Lang::Seq(parts) => {
            if parts.is_empty() {
                let q = b.add_state();
                return (q, q);
            }
            let mut first = None;
            let mut last: Option<usize> = None;
            for part in parts {
                let (s, e) = compile(part, b);
                if let Some(prev_end) = last {
                    b.add_epsilon(prev_end, s);
                } else {
                    first = Some(s);
                }
                last = Some(e);
            }
            (first.unwrap(), last.unwrap())
        }
        Lang::Alt(parts) => {
            let start = b.add_state();
            let end = b.add_state();
            if parts.is_empty() {
                return (start, end);
            }
            for part in parts {
                let (s, e) = compile(part, b);
                b.add_epsilon(start, s);
                b.add_epsilon(e, end);
            }
            (start, end)
        }
        Lang::Star(inner) => {
            let hub = b.add_state();
            let (s, e) = compile(inner, b);
            b.add_epsilon(hub, s);
            b.add_epsilon(e, hub);
            (hub, hub)
        }
        Lang::Plus(inner) => {
            let (s, e) = compile(inner, b);
            b.add_epsilon(e, s);
            (s, e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::accepts;

    #[test]
    fn token_passing_initial_language() {
        let sigma = Alphabet::new(["t", "n"]).unwrap();
        let t = Lang::letter(&sigma, "t").unwrap();
        let n = Lang::letter(&sigma, "n").unwrap();
        let c_init = Lang::seq([t, n.star()]).to_nfa(&sigma);
        assert!(accepts(&c_init, &[0]).unwrap());
        assert!(accepts(&c_init, &[0, 1, 1]).unwrap());
        assert!(!accepts(&c_init, &[1, 0]).unwrap());
        assert!(!accepts(&c_init, &[]).unwrap());
    }

    #[test]
    fn star_accepts_empty_word() {
        let sigma = Alphabet::new(["a"]).unwrap();
        let a = Lang::Sym(0).star().to_nfa(&sigma);
        assert!(accepts(&a, &[]).unwrap());
        assert!(accepts(&a, &[0, 0, 0]).unwrap());
    }

    #[test]
    fn plus_requires_one() {
        let sigma = Alphabet::new(["a"]).unwrap();
        let a = Lang::Sym(0).plus().to_nfa(&sigma);
        assert!(!accepts(&a, &[]).unwrap());
        assert!(accepts(&a, &[0]).unwrap());
    }
}
