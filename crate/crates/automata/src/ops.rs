//! Boolean and structural operations on automata.
//!
//! All operations are pure; deterministic tie-breaking (symbol-id order,
//! BFS discovery order) makes every output and witness reproducible.

use std::collections::HashMap;

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::AutomataError;
use crate::nfa::Nfa;
use crate::{StateId, SymbolId, Word};

fn check_same_alphabet(a: &Nfa, b: &Nfa) -> Result<(), AutomataError> {
    if a.alphabet() != b.alphabet() {
        return Err(AutomataError::AlphabetMismatch {
            expected: a.alphabet().summary(),
            found: b.alphabet().summary(),
        });
    }
    Ok(())
}

/// Removes epsilon transitions without changing the language or the number
/// of states.
pub fn eliminate_epsilon(a: &Nfa) -> Nfa {
    if a.is_epsilon_free() {
        return a.clone();
    }
    let n = a.num_states();
    let mut eps_adj: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for &(p, q) in a.epsilon_transitions() {
        eps_adj[p].push(q);
    }
    // Epsilon closure of each state.
    let mut closures: Vec<Vec<StateId>> = Vec::with_capacity(n);
    for q in 0..n {
        let mut seen = vec![false; n];
        let mut stack = vec![q];
        seen[q] = true;
        while let Some(p) = stack.pop() {
            for &r in &eps_adj[p] {
                if !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                }
            }
        }
        closures.push((0..n).filter(|&r| seen[r]).collect());
    }
    let mut transitions = Vec::new();
    let mut finals = Vec::new();
    for q in 0..n {
        let mut is_final = false;
        for &c in &closures[q] {
            if a.is_final(c) {
                is_final = true;
            }
            for (s, r) in a.transitions_from(c) {
                transitions.push((q, s, r));
            }
        }
        if is_final {
            finals.push(q);
        }
    }
    Nfa::new(
        a.alphabet().clone(),
        n,
        transitions,
        Vec::new(),
        a.initial_states().to_vec(),
        finals,
    )
    .expect("epsilon elimination preserves validity")
}

/// Intersection by product construction; only product states reachable from
/// the initial pairs are materialized, so the result has at most n1*n2
/// states.
pub fn intersect(a: &Nfa, b: &Nfa) -> Result<Nfa, AutomataError> {
    check_same_alphabet(a, b)?;
    let a = eliminate_epsilon(a);
    let b = eliminate_epsilon(b);
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut order: Vec<(StateId, StateId)> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for &p in a.initial_states() {
        for &q in b.initial_states() {
            if !index.contains_key(&(p, q)) {
                index.insert((p, q), order.len());
                order.push((p, q));
                queue.push_back((p, q));
            }
        }
    }
    let mut transitions = Vec::new();
    while let Some((p, q)) = queue.pop_front() {
        let from = index[&(p, q)];
        for s in 0..a.alphabet().size() {
            for p2 in a.successors(p, s) {
                for q2 in b.successors(q, s) {
                    let to = *index.entry((p2, q2)).or_insert_with(|| {
                        order.push((p2, q2));
                        queue.push_back((p2, q2));
                        order.len() - 1
                    });
                    transitions.push((from, s, to));
                }
            }
        }
    }
    let finals = order
        .iter()
        .enumerate()
        .filter(|(_, &(p, q))| a.is_final(p) && b.is_final(q))
        .map(|(i, _)| i)
        .collect();
    let initial = (0..order.len())
        .filter(|&i| {
            let (p, q) = order[i];
            a.initial_states().contains(&p) && b.initial_states().contains(&q)
        })
        .collect();
    Nfa::new(
        a.alphabet().clone(),
        order.len(),
        transitions,
        Vec::new(),
        initial,
        finals,
    )
    .map_err(|e| unreachable!("product construction is valid: {e}"))
}

/// Union by disjoint juxtaposition: at most n1+n2 states.
pub fn union(a: &Nfa, b: &Nfa) -> Result<Nfa, AutomataError> {
    check_same_alphabet(a, b)?;
    let off = a.num_states();
    let mut transitions = a.transitions().to_vec();
    transitions.extend(b.transitions().iter().map(|&(p, s, q)| (p + off, s, q + off)));
    let mut eps = a.epsilon_transitions().to_vec();
    eps.extend(b.epsilon_transitions().iter().map(|&(p, q)| (p + off, q + off)));
    let mut initial = a.initial_states().to_vec();
    initial.extend(b.initial_states().iter().map(|&q| q + off));
    let mut finals = a.final_states().to_vec();
    finals.extend(b.final_states().iter().map(|&q| q + off));
    Nfa::new(
        a.alphabet().clone(),
        a.num_states() + b.num_states(),
        transitions,
        eps,
        initial,
        finals,
    )
    .map_err(|e| unreachable!("disjoint union is valid: {e}"))
}

/// Subset construction. The result is complete; only reachable subsets are
/// materialized, numbered in BFS discovery order (symbols in id order).
pub fn determinize(a: &Nfa) -> Dfa {
    let a = eliminate_epsilon(a);
    let k = a.alphabet().size();
    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut subsets: Vec<Vec<StateId>> = Vec::new();
    let start: Vec<StateId> = a.initial_states().to_vec();
    index.insert(start.clone(), 0);
    subsets.push(start);
    let mut delta: Vec<StateId> = Vec::new();
    let mut next = 0;
    while next < subsets.len() {
        let current = subsets[next].clone();
        next += 1;
        for s in 0..k {
            let mut targets: Vec<StateId> = current
                .iter()
                .flat_map(|&q| a.successors(q, s))
                .collect();
            targets.sort_unstable();
            targets.dedup();
            let id = *index.entry(targets.clone()).or_insert_with(|| {
                subsets.push(targets);
                subsets.len() - 1
            });
            delta.push(id);
        }
    }
    let finals = subsets
        .iter()
        .enumerate()
        .filter(|(_, sub)| sub.iter().any(|&q| a.is_final(q)))
        .map(|(i, _)| i)
        .collect();
    Dfa::new(a.alphabet().clone(), subsets.len(), delta, 0, finals)
        .expect("subset construction is complete by construction")
}

/// Complement relative to the declared alphabet: determinize, then flip the
/// final states.
pub fn complement(a: &Nfa) -> Dfa {
    let d = determinize(a);
    let finals = (0..d.num_states()).filter(|&q| !d.is_final(q)).collect();
    Dfa::new(
        d.alphabet().clone(),
        d.num_states(),
        (0..d.num_states() * d.alphabet().size())
            .map(|i| d.step(i / d.alphabet().size(), i % d.alphabet().size()))
            .collect(),
        d.initial_state(),
        finals,
    )
    .expect("flipping finals preserves validity")
}

/// Moore partition refinement; produces the unique minimal complete DFA for
/// the language, with states numbered by BFS from the initial state in
/// symbol-id order.
pub fn minimize(d: &Dfa) -> Dfa {
    let k = d.alphabet().size();
    // Restrict to reachable states first.
    let mut reach_order: Vec<StateId> = vec![d.initial_state()];
    let mut reach_index: HashMap<StateId, usize> = HashMap::new();
    reach_index.insert(d.initial_state(), 0);
    let mut head = 0;
    while head < reach_order.len() {
        let q = reach_order[head];
        head += 1;
        for s in 0..k {
            let r = d.step(q, s);
            if !reach_index.contains_key(&r) {
                reach_index.insert(r, reach_order.len());
                reach_order.push(r);
            }
        }
    }
    let n = reach_order.len();
    let step = |i: usize, s: usize| reach_index[&d.step(reach_order[i], s)];

    let mut block: Vec<usize> = (0..n)
        .map(|i| usize::from(d.is_final(reach_order[i])))
        .collect();
    // Normalize block ids to first-occurrence order so numbering is stable.
    loop {
        let mut sig_index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut new_block = vec![0usize; n];
        let mut count = 0;
        for i in 0..n {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(block[i]);
            for s in 0..k {
                sig.push(block[step(i, s)]);
            }
            let id = *sig_index.entry(sig).or_insert_with(|| {
                count += 1;
                count - 1
            });
            new_block[i] = id;
        }
        let stable = count == block.iter().copied().max().map_or(1, |m| m + 1);
        block = new_block;
        if stable {
            break;
        }
    }

    // Quotient automaton, renumbered by BFS from the initial block.
    let num_blocks = block.iter().copied().max().map_or(1, |m| m + 1);
    let mut rep = vec![usize::MAX; num_blocks];
    for i in 0..n {
        if rep[block[i]] == usize::MAX {
            rep[block[i]] = i;
        }
    }
    let mut bfs_index = vec![usize::MAX; num_blocks];
    let mut bfs_order = Vec::with_capacity(num_blocks);
    bfs_index[block[0]] = 0;
    bfs_order.push(block[0]);
    let mut head = 0;
    while head < bfs_order.len() {
        let b = bfs_order[head];
        head += 1;
        for s in 0..k {
            let nb = block[step(rep[b], s)];
            if bfs_index[nb] == usize::MAX {
                bfs_index[nb] = bfs_order.len();
                bfs_order.push(nb);
            }
        }
    }
    let m = bfs_order.len();
    let mut delta = vec![0usize; m * k];
    let mut finals = Vec::new();
    for (new_id, &b) in bfs_order.iter().enumerate() {
        for s in 0..k {
            delta[new_id * k + s] = bfs_index[block[step(rep[b], s)]];
        }
        if d.is_final(reach_order[rep[b]]) {
            finals.push(new_id);
        }
    }
    Dfa::new(d.alphabet().clone(), m, delta, 0, finals)
        .expect("quotient of a complete DFA is complete")
}

/// Restricts to states that are both reachable from an initial state and
/// co-reachable from a final state; surviving states keep their relative
/// order. The empty automaton is returned when no accepting path exists.
pub fn trim(a: &Nfa) -> Nfa {
    let n = a.num_states();
    let mut fwd = vec![false; n];
    let mut stack: Vec<StateId> = a.initial_states().to_vec();
    for &q in a.initial_states() {
        fwd[q] = true;
    }
    let mut succ: Vec<Vec<StateId>> = vec![Vec::new(); n];
    let mut pred: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for &(p, _, q) in a.transitions() {
        succ[p].push(q);
        pred[q].push(p);
    }
    for &(p, q) in a.epsilon_transitions() {
        succ[p].push(q);
        pred[q].push(p);
    }
    while let Some(q) = stack.pop() {
        for &r in &succ[q] {
            if !fwd[r] {
                fwd[r] = true;
                stack.push(r);
            }
        }
    }
    let mut bwd = vec![false; n];
    let mut stack: Vec<StateId> = a.final_states().to_vec();
    for &q in a.final_states() {
        bwd[q] = true;
    }
    while let Some(q) = stack.pop() {
        for &r in &pred[q] {
            if !bwd[r] {
                bwd[r] = true;
                stack.push(r);
            }
        }
    }
    let mut remap = vec![usize::MAX; n];
    let mut kept = 0;
    for q in 0..n {
        if fwd[q] && bwd[q] {
            remap[q] = kept;
            kept += 1;
        }
    }
    if kept == 0 {
        return Nfa::empty(a.alphabet().clone());
    }
    let transitions = a
        .transitions()
        .iter()
        .filter(|&&(p, _, q)| remap[p] != usize::MAX && remap[q] != usize::MAX)
        .map(|&(p, s, q)| (remap[p], s, remap[q]))
        .collect();
    let eps = a
        .epsilon_transitions()
        .iter()
        .filter(|&&(p, q)| remap[p] != usize::MAX && remap[q] != usize::MAX)
        .map(|&(p, q)| (remap[p], remap[q]))
        .collect();
    let initial = a
        .initial_states()
        .iter()
        .filter(|&&q| remap[q] != usize::MAX)
        .map(|&q| remap[q])
        .collect();
    let finals = a
        .final_states()
        .iter()
        .filter(|&&q| remap[q] != usize::MAX)
        .map(|&q| remap[q])
        .collect();
    Nfa::new(a.alphabet().clone(), kept, transitions, eps, initial, finals)
        .expect("trimming preserves validity")
}

/// Shortest accepted word with lexicographic (symbol-id) tie-breaking, or
/// `None` when the language is empty.
pub fn is_empty(a: &Nfa) -> Option<Word> {
    let a = eliminate_epsilon(a);
    shortest_word_to(&a, |q| a.is_final(q))
}

fn shortest_word_to(a: &Nfa, target: impl Fn(StateId) -> bool) -> Option<Word> {
    let n = a.num_states();
    // Backward distances to the nearest target state.
    let mut pred: Vec<Vec<(StateId, SymbolId)>> = vec![Vec::new(); n];
    for &(p, s, q) in a.transitions() {
        pred[q].push((p, s));
    }
    let mut bdist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for q in 0..n {
        if target(q) {
            bdist[q] = 0;
            queue.push_back(q);
        }
    }
    while let Some(q) = queue.pop_front() {
        for &(p, _) in &pred[q] {
            if bdist[p] == usize::MAX {
                bdist[p] = bdist[q] + 1;
                queue.push_back(p);
            }
        }
    }
    let len = a
        .initial_states()
        .iter()
        .map(|&q| bdist[q])
        .min()
        .filter(|&d| d != usize::MAX)?;
    // Greedy reconstruction: always take the smallest symbol that still
    // allows reaching a target within the remaining distance budget.
    let mut word = Vec::with_capacity(len);
    let mut current: Vec<StateId> = a
        .initial_states()
        .iter()
        .copied()
        .filter(|&q| bdist[q] <= len)
        .collect();
    for remaining in (0..len).rev() {
        'symbols: for s in 0..a.alphabet().size() {
            let mut next: Vec<StateId> = current
                .iter()
                .flat_map(|&q| a.successors(q, s))
                .filter(|&r| bdist[r] != usize::MAX && bdist[r] <= remaining)
                .collect();
            if !next.is_empty() {
                next.sort_unstable();
                next.dedup();
                word.push(s);
                current = next;
                break 'symbols;
            }
        }
    }
    debug_assert_eq!(word.len(), len);
    Some(word)
}

/// Membership test; epsilon transitions are handled by on-the-fly closure.
pub fn accepts(a: &Nfa, word: &[SymbolId]) -> Result<bool, AutomataError> {
    for &s in word {
        if s >= a.alphabet().size() {
            return Err(AutomataError::SymbolOutOfRange {
                id: s,
                size: a.alphabet().size(),
            });
        }
    }
    let n = a.num_states();
    let mut eps_adj: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for &(p, q) in a.epsilon_transitions() {
        eps_adj[p].push(q);
    }
    let closure = |set: &mut Vec<bool>| {
        let mut stack: Vec<StateId> = (0..n).filter(|&q| set[q]).collect();
        while let Some(q) = stack.pop() {
            for &r in &eps_adj[q] {
                if !set[r] {
                    set[r] = true;
                    stack.push(r);
                }
            }
        }
    };
    let mut current = vec![false; n];
    for &q in a.initial_states() {
        current[q] = true;
    }
    closure(&mut current);
    for &s in word {
        let mut next = vec![false; n];
        for q in 0..n {
            if current[q] {
                for r in a.successors(q, s) {
                    next[r] = true;
                }
            }
        }
        closure(&mut next);
        current = next;
    }
    Ok((0..n).any(|q| current[q] && a.is_final(q)))
}

/// Language equivalence. Returns `None` when the languages are equal,
/// otherwise the shortest word (lexicographically least among shortest) in
/// the symmetric difference.
pub fn equivalent(a: &Nfa, b: &Nfa) -> Result<Option<Word>, AutomataError> {
    check_same_alphabet(a, b)?;
    let da = determinize(a);
    let db = determinize(b);
    let k = da.alphabet().size();
    // Complete-DFA product, expressed as an NFA for the witness search.
    let na = da.num_states();
    let nb = db.num_states();
    let mut transitions = Vec::with_capacity(na * nb * k);
    for p in 0..na {
        for q in 0..nb {
            let from = p * nb + q;
            for s in 0..k {
                transitions.push((from, s, da.step(p, s) * nb + db.step(q, s)));
            }
        }
    }
    let product = Nfa::new(
        da.alphabet().clone(),
        na * nb,
        transitions,
        Vec::new(),
        vec![da.initial_state() * nb + db.initial_state()],
        Vec::new(),
    )
    .expect("product of DFAs is valid");
    Ok(shortest_word_to(&product, |state| {
        da.is_final(state / nb) != db.is_final(state % nb)
    }))
}

/// Convenience: language-equality as a plain boolean.
pub fn same_language(a: &Nfa, b: &Nfa) -> Result<bool, AutomataError> {
    Ok(equivalent(a, b)?.is_none())
}

/// Builds an [`Nfa`] recognising all words over `alphabet` whose length lies
/// in `min..=max` — a common restriction window for bounded comparisons.
pub fn length_window(alphabet: &Alphabet, min: usize, max: usize) -> Nfa {
    let states = max + 1;
    let mut transitions = Vec::new();
    for q in 0..max {
        for s in 0..alphabet.size() {
            transitions.push((q, s, q + 1));
        }
    }
    let finals = (min..=max).collect();
    Nfa::new(
        alphabet.clone(),
        states,
        transitions,
        Vec::new(),
        vec![0],
        finals,
    )
    .expect("length window is valid")
}
