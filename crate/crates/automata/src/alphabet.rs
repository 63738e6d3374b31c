//! Indexed alphabets and the derived forms used throughout the toolkit.
//!
//! An [`Alphabet`] is an ordered list of distinct symbol names; every symbol
//! is addressed by its dense integer id. Derived alphabets remember their
//! provenance so callers can decode structured symbols:
//!
//! - [`Alphabet::padded`] appends the reserved pad symbol `_`,
//! - [`Alphabet::paired`] forms the product of two padded alphabets with
//!   `left/right` symbol names (the alphabet of transducers),
//! - [`Alphabet::powerset`] enumerates subsets `{a,b}` of a base alphabet,
//! - [`Alphabet::product`] forms plain tuples `(a,b)`,
//! - [`Alphabet::tagged_union`] prefixes symbols with `1:` / `2:` to force
//!   disjointness.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::AutomataError;
use crate::SymbolId;

/// Name of the reserved pad symbol added by [`Alphabet::padded`].
pub const PAD_NAME: &str = "_";

const POWERSET_MAX_BASE: usize = 16;

#[derive(Clone)]
enum Kind {
    Plain,
    /// Base alphabet plus the pad symbol (always the last id).
    Padded { base: Alphabet },
    /// Product of two *padded* alphabets; symbol names are `left/right`.
    Paired { left: Alphabet, right: Alphabet },
    /// All subsets of a base alphabet; symbol id encodes the subset bitmask.
    Powerset { base: Alphabet },
    /// Plain tuples of two alphabets; symbol names are `(left,right)`.
    Product { left: Alphabet, right: Alphabet },
    /// Disjoint union with `1:` / `2:` name prefixes.
    Tagged { left: Alphabet, right: Alphabet },
}

struct Inner {
    names: Vec<String>,
    index: HashMap<String, SymbolId>,
    kind: Kind,
}

/// An ordered set of distinct symbol names with dense integer ids.
#[derive(Clone)]
pub struct Alphabet {
    inner: Arc<Inner>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}
impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{}", self.summary())
    }
}

impl Alphabet {
    /// Builds a plain alphabet from distinct symbol names.
    ///
    /// # Errors
    ///
    /// Rejects duplicate names and names that are empty, contain whitespace
    /// or `/`, or collide with the reserved pad symbol `_`.
    pub fn new<I, S>(names: I) -> Result<Alphabet, AutomataError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for name in &names {
            if name.is_empty()
                || name == PAD_NAME
                || name.chars().any(|c| c.is_whitespace() || c == '/')
            {
                return Err(AutomataError::InvalidSymbolName(name.clone()));
            }
        }
        Self::from_names(names, Kind::Plain)
    }

    fn from_names(names: Vec<String>, kind: Kind) -> Result<Alphabet, AutomataError> {
        let mut index = HashMap::with_capacity(names.len());
        for (id, name) in names.iter().enumerate() {
            if index.insert(name.clone(), id).is_some() {
                return Err(AutomataError::DuplicateSymbol(name.clone()));
            }
        }
        Ok(Alphabet {
            inner: Arc::new(Inner { names, index, kind }),
        })
    }

    /// Number of symbols.
    pub fn size(&self) -> usize {
        self.inner.names.len()
    }

    /// Id of a symbol name, if present.
    pub fn id_of(&self, name: &str) -> Option<SymbolId> {
        self.inner.index.get(name).copied()
    }

    /// Id of a symbol name, as a `Result` for caller convenience.
    pub fn require(&self, name: &str) -> Result<SymbolId, AutomataError> {
        self.id_of(name)
            .ok_or_else(|| AutomataError::UnknownSymbol(name.to_string()))
    }

    /// Name of a symbol id.
    ///
    /// # Panics
    ///
    /// Panics if `id` is out of range.
    pub fn name_of(&self, id: SymbolId) -> &str {
        &self.inner.names[id]
    }

    /// All symbol names in id order.
    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    /// Ids in order, for iteration.
    pub fn ids(&self) -> impl Iterator<Item = SymbolId> {
        0..self.size()
    }

    /// A short human-readable rendering like `{t,n,...}` for error messages.
    pub fn summary(&self) -> String {
        const SHOW: usize = 6;
        let mut s = String::from("{");
        for (i, name) in self.inner.names.iter().take(SHOW).enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(name);
        }
        if self.size() > SHOW {
            s.push_str(",...");
        }
        s.push('}');
        s
    }

    /// Extends this alphabet with the reserved pad symbol `_` (the last id).
    pub fn padded(&self) -> Alphabet {
        let mut names = self.inner.names.clone();
        names.push(PAD_NAME.to_string());
        Self::from_names(names, Kind::Padded { base: self.clone() })
            .expect("pad symbol cannot collide: it is rejected by Alphabet::new")
    }

    /// True if this alphabet was produced by [`Alphabet::padded`].
    pub fn is_padded(&self) -> bool {
        matches!(self.inner.kind, Kind::Padded { .. })
    }

    /// Id of the pad symbol, if this is a padded alphabet.
    pub fn pad_id(&self) -> Option<SymbolId> {
        self.is_padded().then(|| self.size() - 1)
    }

    /// The alphabet this padded/powerset alphabet was derived from.
    pub fn base(&self) -> Option<&Alphabet> {
        match &self.inner.kind {
            Kind::Padded { base } | Kind::Powerset { base } => Some(base),
            _ => None,
        }
    }

    /// Pairs two alphabets for use as transducer tracks: both are padded and
    /// the result has one symbol `l/r` per pair, in row-major id order.
    pub fn paired(left: &Alphabet, right: &Alphabet) -> Alphabet {
        let lp = left.padded();
        let rp = right.padded();
        let mut names = Vec::with_capacity(lp.size() * rp.size());
        for l in lp.names() {
            for r in rp.names() {
                names.push(format!("{l}/{r}"));
            }
        }
        Self::from_names(names, Kind::Paired { left: lp, right: rp })
            .expect("pair names are distinct because track names are")
    }

    /// The two padded track alphabets of a paired alphabet.
    pub fn pair_parts(&self) -> Option<(&Alphabet, &Alphabet)> {
        match &self.inner.kind {
            Kind::Paired { left, right } => Some((left, right)),
            _ => None,
        }
    }

    fn expect_paired(&self) -> (&Alphabet, &Alphabet) {
        self.pair_parts()
            .unwrap_or_else(|| panic!("alphabet {} is not paired", self.summary()))
    }

    /// Id of the pair symbol `l/r` from padded track ids.
    pub fn pair_id(&self, l: SymbolId, r: SymbolId) -> SymbolId {
        let (_, right) = self.expect_paired();
        l * right.size() + r
    }

    /// Decomposes a pair symbol id into its padded track ids.
    pub fn pair_components(&self, id: SymbolId) -> (SymbolId, SymbolId) {
        let (_, right) = self.expect_paired();
        (id / right.size(), id % right.size())
    }

    /// The powerset alphabet of a base alphabet: one symbol per subset,
    /// named `{a,b}` with members in base id order; the symbol id is the
    /// subset bitmask (bit i = base symbol i).
    pub fn powerset(base: &Alphabet) -> Result<Alphabet, AutomataError> {
        if base.size() > POWERSET_MAX_BASE {
            return Err(AutomataError::PowersetTooLarge {
                size: base.size(),
                max: POWERSET_MAX_BASE,
            });
        }
        let n = base.size();
        let mut names = Vec::with_capacity(1 << n);
        for mask in 0u32..(1u32 << n) {
            let members: Vec<&str> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| base.name_of(i))
                .collect();
            names.push(format!("{{{}}}", members.join(",")));
        }
        Self::from_names(names, Kind::Powerset { base: base.clone() })
    }

    /// Base symbol ids contained in a powerset symbol.
    pub fn subset_members(&self, id: SymbolId) -> Vec<SymbolId> {
        match &self.inner.kind {
            Kind::Powerset { base } => (0..base.size()).filter(|i| id & (1 << i) != 0).collect(),
            _ => panic!("alphabet {} is not a powerset", self.summary()),
        }
    }

    /// True if the powerset symbol `id` contains the base symbol `member`.
    pub fn subset_contains(&self, id: SymbolId, member: SymbolId) -> bool {
        id & (1 << member) != 0
    }

    /// Plain tuple alphabet with symbols `(a,b)` in row-major id order.
    pub fn product(left: &Alphabet, right: &Alphabet) -> Alphabet {
        let mut names = Vec::with_capacity(left.size() * right.size());
        for l in left.names() {
            for r in right.names() {
                names.push(format!("({l},{r})"));
            }
        }
        Self::from_names(
            names,
            Kind::Product {
                left: left.clone(),
                right: right.clone(),
            },
        )
        .expect("product names are distinct because component names are")
    }

    /// The component alphabets of a product alphabet.
    pub fn product_parts(&self) -> Option<(&Alphabet, &Alphabet)> {
        match &self.inner.kind {
            Kind::Product { left, right } => Some((left, right)),
            _ => None,
        }
    }

    /// Id of the product symbol `(l,r)`.
    pub fn product_id(&self, l: SymbolId, r: SymbolId) -> SymbolId {
        match &self.inner.kind {
            Kind::Product { right, .. } => l * right.size() + r,
            _ => panic!("alphabet {} is not a product", self.summary()),
        }
    }

    /// Decomposes a product symbol id into its component ids.
    pub fn product_components(&self, id: SymbolId) -> (SymbolId, SymbolId) {
        match &self.inner.kind {
            Kind::Product { right, .. } => (id / right.size(), id % right.size()),
            _ => panic!("alphabet {} is not a product", self.summary()),
        }
    }

    /// Disjoint union of two alphabets, prefixing names with `1:` / `2:`.
    /// Left symbols keep their ids; right symbols follow.
    pub fn tagged_union(left: &Alphabet, right: &Alphabet) -> Alphabet {
        let mut names = Vec::with_capacity(left.size() + right.size());
        for l in left.names() {
            names.push(format!("1:{l}"));
        }
        for r in right.names() {
            names.push(format!("2:{r}"));
        }
        Self::from_names(
            names,
            Kind::Tagged {
                left: left.clone(),
                right: right.clone(),
            },
        )
        .expect("tag prefixes keep names distinct")
    }

    /// The component alphabets of a tagged union.
    pub fn tagged_parts(&self) -> Option<(&Alphabet, &Alphabet)> {
        match &self.inner.kind {
            Kind::Tagged { left, right } => Some((left, right)),
            _ => None,
        }
    }

    /// Side (1 or 2) and original id of a tagged symbol.
    pub fn tag_of(&self, id: SymbolId) -> (u8, SymbolId) {
        match &self.inner.kind {
            Kind::Tagged { left, .. } => {
                if id < left.size() {
                    (1, id)
                } else {
                    (2, id - left.size())
                }
            }
            _ => panic!("alphabet {} is not a tagged union", self.summary()),
        }
    }

    /// Id of the tagged symbol for `(side, inner_id)`.
    pub fn tagged_id(&self, side: u8, inner: SymbolId) -> SymbolId {
        match &self.inner.kind {
            Kind::Tagged { left, .. } => match side {
                1 => inner,
                2 => left.size() + inner,
                _ => panic!("tag side must be 1 or 2"),
            },
            _ => panic!("alphabet {} is not a tagged union", self.summary()),
        }
    }

    /// Translates a word of names into ids.
    pub fn word(&self, names: &[&str]) -> Result<Vec<SymbolId>, AutomataError> {
        names.iter().map(|n| self.require(n)).collect()
    }

    /// Renders a word of ids as its symbol names, space-free symbols joined
    /// with nothing for single-character names and spaces otherwise.
    pub fn render(&self, word: &[SymbolId]) -> String {
        let compact = word.iter().all(|&s| self.name_of(s).chars().count() == 1);
        let parts: Vec<&str> = word.iter().map(|&s| self.name_of(s)).collect();
        if compact {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_alphabet_ids_are_dense() {
        let a = Alphabet::new(["t", "n"]).unwrap();
        assert_eq!(a.size(), 2);
        assert_eq!(a.id_of("t"), Some(0));
        assert_eq!(a.id_of("n"), Some(1));
        assert_eq!(a.name_of(1), "n");
        assert_eq!(a.id_of("x"), None);
    }

    #[test]
    fn rejects_bad_names() {
        assert!(Alphabet::new(["t", "t"]).is_err());
        assert!(Alphabet::new([""]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
        assert!(Alphabet::new(["a/b"]).is_err());
        assert!(Alphabet::new(["_"]).is_err());
    }

    #[test]
    fn padded_adds_reserved_symbol_last() {
        let a = Alphabet::new(["t", "n"]).unwrap();
        let p = a.padded();
        assert_eq!(p.size(), 3);
        assert_eq!(p.pad_id(), Some(2));
        assert_eq!(p.name_of(2), "_");
        assert_eq!(p.base(), Some(&a));
    }

    #[test]
    fn paired_symbols_roundtrip() {
        let s = Alphabet::new(["t", "n"]).unwrap();
        let g = Alphabet::new(["a", "b", "c"]).unwrap();
        let pair = Alphabet::paired(&g, &s);
        assert_eq!(pair.size(), 4 * 3);
        let (lp, rp) = pair.pair_parts().unwrap();
        assert_eq!((lp.size(), rp.size()), (4, 3));
        for l in 0..lp.size() {
            for r in 0..rp.size() {
                let id = pair.pair_id(l, r);
                assert_eq!(pair.pair_components(id), (l, r));
            }
        }
        assert_eq!(pair.id_of("a/t"), Some(pair.pair_id(0, 0)));
        assert_eq!(pair.id_of("_/_"), Some(pair.pair_id(3, 2)));
    }

    #[test]
    fn powerset_masks() {
        let s = Alphabet::new(["t", "n"]).unwrap();
        let p = Alphabet::powerset(&s).unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(p.name_of(0), "{}");
        assert_eq!(p.name_of(1), "{t}");
        assert_eq!(p.name_of(2), "{n}");
        assert_eq!(p.name_of(3), "{t,n}");
        assert_eq!(p.subset_members(3), vec![0, 1]);
        assert!(p.subset_contains(1, 0));
        assert!(!p.subset_contains(1, 1));
    }

    #[test]
    fn tagged_union_dispatch() {
        let a = Alphabet::new(["x"]).unwrap();
        let b = Alphabet::new(["x", "y"]).unwrap();
        let u = Alphabet::tagged_union(&a, &b);
        assert_eq!(u.size(), 3);
        assert_eq!(u.name_of(0), "1:x");
        assert_eq!(u.name_of(2), "2:y");
        assert_eq!(u.tag_of(2), (2, 1));
        assert_eq!(u.tagged_id(2, 0), 1);
    }

    #[test]
    fn product_components() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let b = Alphabet::new(["u", "v", "w"]).unwrap();
        let p = Alphabet::product(&a, &b);
        assert_eq!(p.size(), 6);
        assert_eq!(p.name_of(p.product_id(1, 2)), "(y,w)");
        assert_eq!(p.product_components(5), (1, 2));
    }
}
