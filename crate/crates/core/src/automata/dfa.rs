use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{Alphabet, StateId, Symbol};
use crate::error::{Error, Result};

/// Deterministic automaton with sparse rows; a symbol absent from a row
/// goes to an implicit dead state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: StateId,
    accepting: Vec<bool>,
    rows: Vec<Vec<(Symbol, StateId)>>,
}

impl Dfa {
    /// Builds a Dfa from raw parts. Rows are sorted; a repeated symbol in a
    /// row or an out-of-range target is rejected.
    pub fn from_parts(
        alphabet: Alphabet,
        initial: StateId,
        accepting: Vec<bool>,
        mut rows: Vec<Vec<(Symbol, StateId)>>,
    ) -> Result<Self> {
        let n = accepting.len();
        if rows.len() != n || (initial as usize) >= n {
            return Err(Error::DimensionMismatch { expected: n, got: rows.len() });
        }
        let space = alphabet.symbol_space();
        for row in &mut rows {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::Parse("nondeterministic transition".into()));
            }
            if row.iter().any(|&(s, t)| s >= space || t as usize >= n) {
                return Err(Error::Parse("transition out of range".into()));
            }
        }
        Ok(Self { alphabet, initial, accepting, rows })
    }

    pub(crate) fn from_sorted(
        alphabet: Alphabet,
        initial: StateId,
        accepting: Vec<bool>,
        rows: Vec<Vec<(Symbol, StateId)>>,
    ) -> Self {
        debug_assert!(rows.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)));
        Self { alphabet, initial, accepting, rows }
    }

    /// The empty language.
    pub fn empty(alphabet: Alphabet) -> Self {
        Self { alphabet, initial: 0, accepting: vec![false], rows: vec![Vec::new()] }
    }

    /// All padding-legal words, one state per set of ended tracks.
    pub fn universal(alphabet: Alphabet) -> Self {
        let masks = 1usize << alphabet.arity();
        let rows = (0..masks as u32)
            .map(|ended| {
                alphabet
                    .legal_symbols_after(ended)
                    .into_iter()
                    .map(|s| (s, alphabet.pad_mask(s)))
                    .collect()
            })
            .collect();
        Self { alphabet, initial: 0, accepting: vec![true; masks], rows }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_accepting(&self, s: StateId) -> bool {
        self.accepting[s as usize]
    }

    pub fn accepting(&self) -> &[bool] {
        &self.accepting
    }

    pub fn row(&self, s: StateId) -> &[(Symbol, StateId)] {
        &self.rows[s as usize]
    }

    pub fn rows(&self) -> &[Vec<(Symbol, StateId)>] {
        &self.rows
    }

    pub fn step(&self, s: StateId, sym: Symbol) -> Option<StateId> {
        let row = &self.rows[s as usize];
        row.binary_search_by_key(&sym, |&(a, _)| a).ok().map(|i| row[i].1)
    }

    pub fn run(&self, word: &[Symbol]) -> Option<StateId> {
        word.iter().try_fold(self.initial, |s, &a| self.step(s, a))
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        self.run(word).map_or(false, |s| self.is_accepting(s))
    }

    /// Length of the shortest accepted word from each state, `None` when
    /// acceptance is unreachable.
    pub fn distances_to_accept(&self) -> Vec<Option<u32>> {
        let n = self.num_states();
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for (s, row) in self.rows.iter().enumerate() {
            for &(_, t) in row {
                rev[t as usize].push(s as StateId);
            }
        }
        let mut dist = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if self.accepting[s] {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(t) = queue.pop_front() {
            let d = dist[t].unwrap() + 1;
            for &s in &rev[t] {
                if dist[s as usize].is_none() {
                    dist[s as usize] = Some(d);
                    queue.push_back(s as usize);
                }
            }
        }
        dist
    }

    pub fn is_empty(&self) -> bool {
        self.distances_to_accept()[self.initial as usize].is_none()
    }

    /// The llex-least accepted word: shortest length first, then the
    /// smallest symbol code at each position among states that can still
    /// finish in time.
    pub fn llex_least_member(&self) -> Option<Vec<Symbol>> {
        let dist = self.distances_to_accept();
        let mut remaining = dist[self.initial as usize]?;
        let mut s = self.initial;
        let mut word = Vec::with_capacity(remaining as usize);
        while remaining > 0 {
            let &(a, t) = self.rows[s as usize]
                .iter()
                .find(|&&(_, t)| dist[t as usize] == Some(remaining - 1))
                .expect("distance labelling is consistent");
            word.push(a);
            s = t;
            remaining -= 1;
        }
        Some(word)
    }

    /// Number of accepted words of each length `0..=maxlen`.
    pub fn count_by_length(&self, maxlen: usize) -> Vec<BigUint> {
        let n = self.num_states();
        let mut cur = vec![BigUint::zero(); n];
        cur[self.initial as usize] = BigUint::one();
        let mut out = Vec::with_capacity(maxlen + 1);
        for len in 0..=maxlen {
            let accepted: BigUint =
                (0..n).filter(|&s| self.accepting[s]).map(|s| &cur[s]).sum();
            out.push(accepted);
            if len == maxlen {
                break;
            }
            let mut next = vec![BigUint::zero(); n];
            for (s, row) in self.rows.iter().enumerate() {
                if cur[s].is_zero() {
                    continue;
                }
                for &(_, t) in row {
                    next[t as usize] += &cur[s];
                }
            }
            cur = next;
        }
        out
    }

    /// Number of accepted words of length at most `maxlen`.
    pub fn count_accepted(&self, maxlen: usize) -> BigUint {
        self.count_by_length(maxlen).into_iter().sum()
    }

    /// Every accepted word of length at most `maxlen`, in llex order of
    /// symbol codes.
    pub fn accepted_words(&self, maxlen: usize) -> Vec<Vec<Symbol>> {
        let dist = self.distances_to_accept();
        let mut out = Vec::new();
        for len in 0..=maxlen {
            let mut word = Vec::with_capacity(len);
            self.collect_exact(self.initial, len, &dist, &mut word, &mut out);
        }
        out
    }

    fn collect_exact(
        &self,
        s: StateId,
        remaining: usize,
        dist: &[Option<u32>],
        word: &mut Vec<Symbol>,
        out: &mut Vec<Vec<Symbol>>,
    ) {
        match dist[s as usize] {
            Some(d) if (d as usize) <= remaining => {}
            _ => return,
        }
        if remaining == 0 {
            if self.accepting[s as usize] {
                out.push(word.clone());
            }
            return;
        }
        for &(a, t) in &self.rows[s as usize] {
            word.push(a);
            self.collect_exact(t, remaining - 1, dist, word, out);
            word.pop();
        }
    }

    /// States reachable from the initial one, in BFS order by symbol.
    pub(crate) fn bfs_order(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![self.initial];
        seen[self.initial as usize] = true;
        let mut i = 0;
        while i < order.len() {
            for &(_, t) in &self.rows[order[i] as usize] {
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    order.push(t);
                }
            }
            i += 1;
        }
        order
    }
}

/// Nondeterministic automaton; rows are sorted and may repeat a symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    initials: Vec<StateId>,
    accepting: Vec<bool>,
    rows: Vec<Vec<(Symbol, StateId)>>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        initials: Vec<StateId>,
        accepting: Vec<bool>,
        mut rows: Vec<Vec<(Symbol, StateId)>>,
    ) -> Result<Self> {
        let n = accepting.len();
        if rows.len() != n || initials.iter().any(|&s| s as usize >= n) {
            return Err(Error::DimensionMismatch { expected: n, got: rows.len() });
        }
        for row in &mut rows {
            row.sort_unstable();
            row.dedup();
            if row.iter().any(|&(_, t)| t as usize >= n) {
                return Err(Error::Parse("transition out of range".into()));
            }
        }
        Ok(Self { alphabet, initials, accepting, rows })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initials(&self) -> &[StateId] {
        &self.initials
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn is_accepting(&self, s: StateId) -> bool {
        self.accepting[s as usize]
    }

    pub fn row(&self, s: StateId) -> &[(Symbol, StateId)] {
        &self.rows[s as usize]
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        let mut cur: Vec<StateId> = self.initials.clone();
        cur.sort_unstable();
        cur.dedup();
        for &a in word {
            let mut next: Vec<StateId> = cur
                .iter()
                .flat_map(|&s| {
                    let row = &self.rows[s as usize];
                    let lo = row.partition_point(|&(b, _)| b < a);
                    row[lo..].iter().take_while(move |&&(b, _)| b == a).map(|&(_, t)| t)
                })
                .collect();
            next.sort_unstable();
            next.dedup();
            if next.is_empty() {
                return false;
            }
            cur = next;
        }
        cur.iter().any(|&s| self.accepting[s as usize])
    }
}

impl From<&Dfa> for Nfa {
    fn from(d: &Dfa) -> Self {
        Self {
            alphabet: d.alphabet,
            initials: vec![d.initial],
            accepting: d.accepting.clone(),
            rows: d.rows.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma3() -> Alphabet {
        Alphabet::digits(1, 2).unwrap()
    }

    #[test]
    fn universal_counts() {
        let u = Dfa::universal(sigma3());
        assert_eq!(u.count_accepted(2), BigUint::from(31u32));
        assert_eq!(u.llex_least_member(), Some(vec![]));
        assert!(Dfa::empty(sigma3()).llex_least_member().is_none());
        assert!(Dfa::empty(sigma3()).is_empty());
    }

    #[test]
    fn universal_binary_respects_padding() {
        let a = Alphabet::digits(2, 1).unwrap();
        let u = Dfa::universal(a);
        // Pairs of strings over a 3-letter alphabet with max length <= 2:
        // lengths (i, j) with max <= 2 give 3^(i+j) each.
        let expected: u32 = (0..=2u32)
            .flat_map(|i| (0..=2u32).map(move |j| 3u32.pow(i + j)))
            .sum();
        assert_eq!(u.count_accepted(2), BigUint::from(expected));
        let words = u.accepted_words(2);
        assert_eq!(words.len() as u32, expected);
        let bad = [a.pack(&[3, 0]), a.pack(&[0, 0])];
        assert!(!u.accepts(&bad));
    }

    #[test]
    fn from_parts_rejects_nondeterminism() {
        let a = sigma3();
        assert!(Dfa::from_parts(a, 0, vec![true], vec![vec![(0, 0), (0, 0)]]).is_err());
        assert!(Dfa::from_parts(a, 0, vec![true], vec![vec![(0, 1)]]).is_err());
        assert!(Dfa::from_parts(a, 0, vec![true], vec![vec![(1, 0), (0, 0)]]).is_ok());
    }

    #[test]
    fn nfa_acceptance() {
        let a = sigma3();
        // Words ending in digit 2 (index 4).
        let nfa = Nfa::new(
            a,
            vec![0],
            vec![false, true],
            vec![(0..5).map(|s| (s, 0)).chain([(4, 1)]).collect(), vec![]],
        )
        .unwrap();
        assert!(nfa.accepts(&[0, 4]));
        assert!(!nfa.accepts(&[4, 0]));
        assert!(!nfa.accepts(&[]));
    }
}
