//! Property tests: the relation algebra against pair-enumeration oracles on
//! randomly generated transducers.

use automata::oracle::words_up_to;
use automata::{accepts, intersect, is_empty, same_language, Alphabet, Nfa};
use proptest::prelude::*;
use transducers::oracle::{join_by_enumeration, relates};
use transducers::{
    complement_relation, compose, image, inverse, preimage, project, valid_convolutions,
    Transducer,
};

fn sigma() -> Alphabet {
    Alphabet::new(["t", "n"]).unwrap()
}

#[derive(Debug, Clone)]
struct RawRelation {
    num_states: usize,
    // (from, left symbol or pad, right symbol or pad, to); pad = 2
    transitions: Vec<(usize, usize, usize, usize)>,
    initial: Vec<usize>,
    finals: Vec<usize>,
}

impl RawRelation {
    fn build(&self) -> Transducer {
        let s = sigma();
        let pair = Alphabet::paired(&s, &s);
        let transitions = self
            .transitions
            .iter()
            .filter(|&&(_, l, r, _)| !(l == 2 && r == 2))
            .map(|&(q, l, r, q2)| (q, pair.pair_id(l, r), q2))
            .collect();
        let auto = Nfa::new(
            pair,
            self.num_states,
            transitions,
            vec![],
            self.initial.clone(),
            self.finals.clone(),
        )
        .unwrap();
        Transducer::new(s.clone(), s, auto).unwrap()
    }

    fn build_length_preserving(&self) -> Transducer {
        let s = sigma();
        let pair = Alphabet::paired(&s, &s);
        let transitions = self
            .transitions
            .iter()
            .map(|&(q, l, r, q2)| (q, pair.pair_id(l.min(1), r.min(1)), q2))
            .collect();
        let auto = Nfa::new(
            pair,
            self.num_states,
            transitions,
            vec![],
            self.initial.clone(),
            self.finals.clone(),
        )
        .unwrap();
        Transducer::new(s.clone(), s, auto).unwrap()
    }
}

fn raw_relation(max_states: usize) -> impl Strategy<Value = RawRelation> {
    (1..=max_states).prop_flat_map(move |n| {
        let transition = (0..n, 0..3usize, 0..3usize, 0..n);
        (
            proptest::collection::vec(transition, 0..=4 * n),
            proptest::collection::vec(0..n, 1..=n),
            proptest::collection::vec(0..n, 0..=n),
        )
            .prop_map(move |(transitions, initial, finals)| RawRelation {
                num_states: n,
                transitions,
                initial,
                finals,
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructors_enforce_valid_convolutions(raw in raw_relation(4)) {
        let t = raw.build();
        let s = sigma();
        let invalid = automata::complement(&valid_convolutions(&s, &s)).to_nfa();
        let overlap = intersect(t.automaton(), &invalid).unwrap();
        prop_assert!(is_empty(&overlap).is_none());
    }

    #[test]
    fn inverse_is_an_involution(raw in raw_relation(4)) {
        let t = raw.build();
        let double = inverse(&inverse(&t));
        prop_assert!(same_language(double.automaton(), t.automaton()).unwrap());
        for u in words_up_to(t.left_alphabet(), 3) {
            for w in words_up_to(t.right_alphabet(), 3) {
                prop_assert_eq!(relates(&t, &u, &w), relates(&inverse(&t), &w, &u));
            }
        }
    }

    #[test]
    fn compose_agrees_with_enumeration_join(ra in raw_relation(3), rb in raw_relation(3)) {
        // Length-preserving operands keep the middle word as short as the
        // outer ones, so the bounded enumeration is exact.
        let t1 = ra.build_length_preserving();
        let t2 = rb.build_length_preserving();
        let c = compose(&t1, &t2).unwrap();
        let expected = join_by_enumeration(&t1, &t2, 4, 4, 4);
        for u in words_up_to(t1.left_alphabet(), 4) {
            for w in words_up_to(t2.right_alphabet(), 4) {
                prop_assert_eq!(
                    relates(&c, &u, &w),
                    expected.contains(&(u.clone(), w.clone())),
                    "pair {:?} {:?}", u, w
                );
            }
        }
        let (l1, l2) = (t1.num_states(), t2.num_states());
        prop_assert!(c.num_states() <= l1 * l2 + l1 + l2);
        prop_assert!(c.is_length_preserving());
    }

    #[test]
    fn complement_relation_flips_membership(raw in raw_relation(3)) {
        let t = raw.build();
        let comp = complement_relation(&t);
        for u in words_up_to(t.left_alphabet(), 3) {
            for w in words_up_to(t.right_alphabet(), 3) {
                prop_assert_eq!(relates(&comp, &u, &w), !relates(&t, &u, &w));
            }
        }
    }

    #[test]
    fn projection_matches_membership(raw in raw_relation(3)) {
        let t = raw.build_length_preserving();
        let p1 = project(&t, 1);
        let p2 = project(&t, 2);
        let words = words_up_to(t.left_alphabet(), 4);
        for u in &words {
            let in_p1 = words.iter().any(|w| w.len() == u.len() && relates(&t, u, w));
            prop_assert_eq!(accepts(&p1, u).unwrap(), in_p1, "left word {:?}", u);
            let in_p2 = words.iter().any(|w| w.len() == u.len() && relates(&t, w, u));
            prop_assert_eq!(accepts(&p2, u).unwrap(), in_p2, "right word {:?}", u);
        }
    }

    #[test]
    fn image_and_preimage_match_enumeration(raw in raw_relation(3), c_raw in proptest::collection::vec((0..3usize, 0..2usize, 0..3usize), 0..6)) {
        let t = raw.build_length_preserving();
        let s = sigma();
        let c = Nfa::new(
            s.clone(),
            3,
            c_raw,
            vec![],
            vec![0],
            vec![2],
        ).unwrap();
        let img = image(&c, &t).unwrap();
        let pre = preimage(&t, &c).unwrap();
        let words = words_up_to(&s, 4);
        for w in &words {
            let in_img = words.iter().any(|u| {
                u.len() == w.len() && accepts(&c, u).unwrap() && relates(&t, u, w)
            });
            prop_assert_eq!(accepts(&img, w).unwrap(), in_img, "image word {:?}", w);
            let in_pre = words.iter().any(|x| {
                x.len() == w.len() && accepts(&c, x).unwrap() && relates(&t, w, x)
            });
            prop_assert_eq!(accepts(&pre, w).unwrap(), in_pre, "preimage word {:?}", w);
        }
    }
}
