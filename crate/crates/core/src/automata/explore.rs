//! Breadth-first construction of automata from implicit state spaces.

use alloc::vec::Vec;
use core::hash::Hash;

use hashbrown::HashMap;

use super::{Alphabet, Dfa, Nfa, StateId, Symbol};
use crate::error::{Error, Result};

struct Interner<S> {
    states: Vec<S>,
    index: HashMap<S, StateId>,
    budget: usize,
}

impl<S: Clone + Eq + Hash> Interner<S> {
    fn new(budget: usize) -> Self {
        Self { states: Vec::new(), index: HashMap::new(), budget }
    }

    fn intern(&mut self, s: S) -> Result<StateId> {
        if let Some(&id) = self.index.get(&s) {
            return Ok(id);
        }
        if self.states.len() >= self.budget {
            return Err(Error::StateBudgetExceeded { limit: self.budget });
        }
        let id = self.states.len() as StateId;
        self.states.push(s.clone());
        self.index.insert(s, id);
        Ok(id)
    }
}

fn explore<S, A, F>(
    initials: Vec<S>,
    budget: usize,
    mut accept: A,
    mut successors: F,
) -> Result<(Vec<StateId>, Vec<bool>, Vec<Vec<(Symbol, StateId)>>)>
where
    S: Clone + Eq + Hash,
    A: FnMut(&S) -> Result<bool>,
    F: FnMut(&S, &mut Vec<(Symbol, S)>) -> Result<()>,
{
    let mut interner = Interner::new(budget);
    let init_ids = initials.into_iter().map(|s| interner.intern(s)).collect::<Result<Vec<_>>>()?;
    let mut rows: Vec<Vec<(Symbol, StateId)>> = Vec::new();
    let mut accepting = Vec::new();
    let mut buf = Vec::new();
    let mut i = 0;
    while i < interner.states.len() {
        let s = interner.states[i].clone();
        accepting.push(accept(&s)?);
        buf.clear();
        successors(&s, &mut buf)?;
        let mut row = Vec::with_capacity(buf.len());
        for (a, t) in buf.drain(..) {
            row.push((a, interner.intern(t)?));
        }
        row.sort_unstable();
        rows.push(row);
        i += 1;
    }
    Ok((init_ids, accepting, rows))
}

/// Builds the reachable part of a deterministic automaton. `successors`
/// must list each symbol at most once per state; unlisted symbols are dead.
pub fn explore_dfa<S, A, F>(
    alphabet: Alphabet,
    initial: S,
    budget: usize,
    accept: A,
    successors: F,
) -> Result<Dfa>
where
    S: Clone + Eq + Hash,
    A: FnMut(&S) -> Result<bool>,
    F: FnMut(&S, &mut Vec<(Symbol, S)>) -> Result<()>,
{
    let (init, accepting, rows) = explore(alloc::vec![initial], budget, accept, successors)?;
    debug_assert!(rows.iter().all(|r| r.windows(2).all(|w| w[0].0 != w[1].0)));
    Ok(Dfa::from_sorted(alphabet, init[0], accepting, rows))
}

/// Nondeterministic counterpart of [`explore_dfa`].
pub fn explore_nfa<S, A, F>(
    alphabet: Alphabet,
    initials: Vec<S>,
    budget: usize,
    accept: A,
    successors: F,
) -> Result<Nfa>
where
    S: Clone + Eq + Hash,
    A: FnMut(&S) -> Result<bool>,
    F: FnMut(&S, &mut Vec<(Symbol, S)>) -> Result<()>,
{
    let (init, accepting, rows) = explore(initials, budget, accept, successors)?;
    Nfa::new(alphabet, init, accepting, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counter_mod_three() {
        let a = Alphabet::digits(1, 1).unwrap();
        // Digit sums divisible by 3.
        let d = explore_dfa(
            a,
            0i32,
            100,
            |&s| Ok(s == 0),
            |&s, out| {
                for dig in -1..=1 {
                    out.push((a.digit_index(dig), (s + dig).rem_euclid(3)));
                }
                Ok(())
            },
        )
        .unwrap();
        assert_eq!(d.num_states(), 3);
        assert!(d.accepts(&a.word_of_digits(&[1, 1, 1]).unwrap()));
        assert!(!d.accepts(&a.word_of_digits(&[1, -1, 1]).unwrap()));
    }

    #[test]
    fn budget_is_enforced() {
        let a = Alphabet::digits(1, 1).unwrap();
        let r = explore_dfa(a, 0u64, 10, |_| Ok(false), |&s, out| {
            out.push((0, s + 1));
            Ok(())
        });
        assert_eq!(r.unwrap_err(), Error::StateBudgetExceeded { limit: 10 });
    }
}
