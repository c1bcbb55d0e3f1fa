//! Boolean operations, projection, determinization, minimization and
//! track fixing.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{explore_dfa, Alphabet, Dfa, Nfa, StateId, Symbol};
use crate::error::{Error, Result};
use crate::words::Letter;

fn same_alphabet(a: &Dfa, b: &Dfa) -> Result<()> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}

pub fn intersect(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    same_alphabet(a, b)?;
    explore_dfa(
        *a.alphabet(),
        (a.initial(), b.initial()),
        usize::MAX,
        |&(x, y)| Ok(a.is_accepting(x) && b.is_accepting(y)),
        |&(x, y), out| {
            let (ra, rb) = (a.row(x), b.row(y));
            let (mut i, mut j) = (0, 0);
            while i < ra.len() && j < rb.len() {
                match ra[i].0.cmp(&rb[j].0) {
                    core::cmp::Ordering::Less => i += 1,
                    core::cmp::Ordering::Greater => j += 1,
                    core::cmp::Ordering::Equal => {
                        out.push((ra[i].0, (ra[i].1, rb[j].1)));
                        i += 1;
                        j += 1;
                    }
                }
            }
            Ok(())
        },
    )
}

pub fn union(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    same_alphabet(a, b)?;
    let acc = |d: &Dfa, s: Option<StateId>| s.map_or(false, |s| d.is_accepting(s));
    explore_dfa(
        *a.alphabet(),
        (Some(a.initial()), Some(b.initial())),
        usize::MAX,
        |&(x, y)| Ok(acc(a, x) || acc(b, y)),
        |&(x, y), out| {
            let ra = x.map_or(&[][..], |s| a.row(s));
            let rb = y.map_or(&[][..], |s| b.row(s));
            let (mut i, mut j) = (0, 0);
            while i < ra.len() || j < rb.len() {
                let sa = ra.get(i).map(|e| e.0);
                let sb = rb.get(j).map(|e| e.0);
                match (sa, sb) {
                    (Some(p), Some(q)) if p == q => {
                        out.push((p, (Some(ra[i].1), Some(rb[j].1))));
                        i += 1;
                        j += 1;
                    }
                    (Some(p), Some(q)) if p < q => {
                        out.push((p, (Some(ra[i].1), None)));
                        i += 1;
                    }
                    (Some(p), None) => {
                        out.push((p, (Some(ra[i].1), None)));
                        i += 1;
                    }
                    (_, Some(q)) => {
                        out.push((q, (None, Some(rb[j].1))));
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            Ok(())
        },
    )
}

/// Complement within the padding-legal words of the same alphabet.
pub fn complement(a: &Dfa) -> Result<Dfa> {
    let alpha = *a.alphabet();
    let masks = 1usize << alpha.arity();
    let legal: Vec<Vec<Symbol>> = (0..masks as u32).map(|m| alpha.legal_symbols_after(m)).collect();
    explore_dfa(
        alpha,
        (Some(a.initial()), 0u32),
        usize::MAX,
        |&(s, _)| Ok(!s.map_or(false, |s| a.is_accepting(s))),
        |&(s, ended), out| {
            for &sym in &legal[ended as usize] {
                let t = s.and_then(|s| a.step(s, sym));
                out.push((sym, (t, alpha.pad_mask(sym))));
            }
            Ok(())
        },
    )
}

/// Drops track `track` of a symbol.
fn remove_track(alpha: &Alphabet, sym: Symbol, track: usize) -> Symbol {
    let r = alpha.radix();
    let low_mod = r.pow(track as u32);
    let low = sym % low_mod;
    let high = sym / (low_mod * r);
    low + high * low_mod
}

/// Existential projection: the words over the other tracks that extend to
/// an accepted word whose dropped track is legally padded. Steps where only
/// the dropped track still carries a letter are folded into acceptance.
pub fn project(a: &Nfa, track: usize) -> Result<Nfa> {
    let alpha = *a.alphabet();
    let m = alpha.arity();
    if track >= m {
        return Err(Error::BadTrack { track, arity: m });
    }
    let out_alpha = alpha.with_arity(m - 1)?;
    let rest_pad = out_alpha.all_pad_mask();
    let pad = alpha.pad_index();
    let n = a.num_states();
    // State 2s + e: state s of `a`, e = whether the dropped track has ended.
    let mut rows = vec![Vec::new(); 2 * n];
    let mut tails: Vec<Vec<StateId>> = vec![Vec::new(); 2 * n];
    for s in 0..n as StateId {
        for &(sym, t) in a.row(s) {
            if alpha.pad_mask(sym) == alpha.all_pad_mask() {
                continue;
            }
            let dropped_pad = alpha.track_index(sym, track) == pad;
            let rest = remove_track(&alpha, sym, track);
            for e in [false, true] {
                if e && !dropped_pad {
                    continue;
                }
                let from = 2 * s + e as StateId;
                let to = 2 * t + (e || dropped_pad) as StateId;
                if out_alpha.pad_mask(rest) == rest_pad {
                    tails[to as usize].push(from);
                } else {
                    rows[from as usize].push((rest, to));
                }
            }
        }
    }
    // Backward closure of acceptance along tail steps.
    let mut accepting: Vec<bool> = (0..2 * n).map(|s| a.is_accepting((s / 2) as StateId)).collect();
    let mut stack: Vec<StateId> = (0..2 * n as StateId).filter(|&s| accepting[s as usize]).collect();
    while let Some(t) = stack.pop() {
        for &s in &tails[t as usize] {
            if !accepting[s as usize] {
                accepting[s as usize] = true;
                stack.push(s);
            }
        }
    }
    let initials = a.initials().iter().map(|&s| 2 * s).collect();
    Nfa::new(out_alpha, initials, accepting, rows)
}

/// Subset construction over reachable subsets.
pub fn determinize(a: &Nfa, budget: usize) -> Result<Dfa> {
    let mut init: Vec<StateId> = a.initials().to_vec();
    init.sort_unstable();
    init.dedup();
    let mut scratch: Vec<(Symbol, StateId)> = Vec::new();
    explore_dfa(
        *a.alphabet(),
        init,
        budget,
        |set: &Vec<StateId>| Ok(set.iter().any(|&s| a.is_accepting(s))),
        |set, out| {
            scratch.clear();
            for &s in set {
                scratch.extend_from_slice(a.row(s));
            }
            scratch.sort_unstable();
            scratch.dedup();
            let mut i = 0;
            while i < scratch.len() {
                let sym = scratch[i].0;
                let mut targets = Vec::new();
                while i < scratch.len() && scratch[i].0 == sym {
                    targets.push(scratch[i].1);
                    i += 1;
                }
                out.push((sym, targets));
            }
            Ok(())
        },
    )
}

/// The minimal trim automaton, numbered canonically by breadth-first search
/// in symbol order, so language-equal inputs give identical outputs.
pub fn minimize(a: &Dfa) -> Dfa {
    let alpha = *a.alphabet();
    let dist = a.distances_to_accept();
    if dist[a.initial() as usize].is_none() {
        return Dfa::empty(alpha);
    }
    let order = a.bfs_order();
    let useful: Vec<StateId> = order.into_iter().filter(|&s| dist[s as usize].is_some()).collect();
    let n = a.num_states();
    let mut class = vec![u32::MAX; n];
    let mut count = 0u32;
    {
        let (mut acc_id, mut rej_id) = (None, None);
        for &s in &useful {
            let slot = if a.is_accepting(s) { &mut acc_id } else { &mut rej_id };
            let id = *slot.get_or_insert_with(|| {
                count += 1;
                count - 1
            });
            class[s as usize] = id;
        }
    }
    let signature = |class: &[u32], s: StateId| -> (u32, Vec<(Symbol, u32)>) {
        let row = a
            .row(s)
            .iter()
            .filter(|&&(_, t)| class[t as usize] != u32::MAX)
            .map(|&(sym, t)| (sym, class[t as usize]))
            .collect();
        (class[s as usize], row)
    };
    loop {
        let mut ids: HashMap<(u32, Vec<(Symbol, u32)>), u32> = HashMap::new();
        let mut next = vec![u32::MAX; n];
        for &s in &useful {
            let sig = signature(&class, s);
            let fresh = ids.len() as u32;
            next[s as usize] = *ids.entry(sig).or_insert(fresh);
        }
        let new_count = ids.len() as u32;
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    // Canonical numbering.
    let mut rep: Vec<Option<StateId>> = vec![None; count as usize];
    for &s in &useful {
        rep[class[s as usize] as usize].get_or_insert(s);
    }
    let mut number: Vec<Option<StateId>> = vec![None; count as usize];
    let start = class[a.initial() as usize];
    number[start as usize] = Some(0);
    let mut queue = vec![start];
    let mut i = 0;
    while i < queue.len() {
        let c = queue[i];
        for &(_, t) in a.row(rep[c as usize].unwrap()) {
            let tc = class[t as usize];
            if tc != u32::MAX && number[tc as usize].is_none() {
                number[tc as usize] = Some(queue.len() as StateId);
                queue.push(tc);
            }
        }
        i += 1;
    }
    let accepting = queue.iter().map(|&c| a.is_accepting(rep[c as usize].unwrap())).collect();
    let rows = queue
        .iter()
        .map(|&c| {
            a.row(rep[c as usize].unwrap())
                .iter()
                .filter(|&&(_, t)| class[t as usize] != u32::MAX)
                .map(|&(sym, t)| (sym, number[class[t as usize] as usize].unwrap()))
                .collect()
        })
        .collect();
    Dfa::from_sorted(alpha, 0, accepting, rows)
}

/// Restricts track `track` to the fixed word `w`, leaving an automaton over
/// the remaining tracks. Steps past the end of the other tracks (where only
/// `w` still has letters) are folded into acceptance.
pub fn fix_track(a: &Dfa, track: usize, w: &[Letter]) -> Result<Dfa> {
    let alpha = *a.alphabet();
    let m = alpha.arity();
    if track >= m {
        return Err(Error::BadTrack { track, arity: m });
    }
    let out_alpha = alpha.with_arity(m - 1)?;
    let rest_pad = out_alpha.all_pad_mask();
    let pad = alpha.pad_index();
    let w: Vec<u32> = w.iter().map(|&l| alpha.letter_index(Some(l))).collect::<Result<_>>()?;
    let stride = alpha.radix().pow(track as u32);
    let top = track + 1 == m;
    let tail_symbol = |letter: u32| {
        let mut idx = vec![pad; m];
        idx[track] = letter;
        alpha.pack(&idx)
    };
    explore_dfa(
        out_alpha,
        (a.initial(), 0usize),
        usize::MAX,
        |&(s, pos)| {
            let mut cur = Some(s);
            for &l in &w[pos..] {
                cur = cur.and_then(|c| a.step(c, tail_symbol(l)));
            }
            Ok(cur.map_or(false, |c| a.is_accepting(c)))
        },
        |&(s, pos), out| {
            let expected = w.get(pos).copied().unwrap_or(pad);
            let next = (pos + 1).min(w.len());
            let row = a.row(s);
            let slice = if top {
                let lo = row.partition_point(|&(sym, _)| sym < expected * stride);
                let hi = row.partition_point(|&(sym, _)| sym < (expected + 1) * stride);
                &row[lo..hi]
            } else {
                row
            };
            for &(sym, t) in slice {
                if alpha.track_index(sym, track) != expected {
                    continue;
                }
                let rest = remove_track(&alpha, sym, track);
                if out_alpha.pad_mask(rest) != rest_pad {
                    out.push((rest, (t, next)));
                }
            }
            Ok(())
        },
    )
}

/// One factor of a [`join`]: an automaton and the positions of its tracks
/// among the joined tracks.
#[derive(Clone, Copy, Debug)]
pub struct JoinTrack<'a> {
    pub dfa: &'a Dfa,
    pub tracks: &'a [usize],
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Part {
    Run(StateId),
    /// The factor accepted and all its tracks have ended.
    Done,
}

/// Natural join of relations on shared tracks: accepts a padding-legal word
/// over `arity` tracks iff every factor accepts its own tracks' part. A
/// factor whose tracks have all ended must have accepted at that point.
/// Every joined track must be covered by some factor.
pub fn join(parts: &[JoinTrack<'_>], arity: usize, budget: usize) -> Result<Dfa> {
    let first = parts.first().ok_or(Error::DimensionMismatch { expected: 1, got: 0 })?;
    let base = *first.dfa.alphabet();
    let alpha = base.with_arity(arity)?;
    let mut covered = vec![false; arity];
    for p in parts {
        let a = p.dfa.alphabet();
        if a.digit_bound() != base.digit_bound() || a.aux_letters() != base.aux_letters() {
            return Err(Error::AlphabetMismatch);
        }
        if p.tracks.len() != a.arity() {
            return Err(Error::DimensionMismatch { expected: a.arity(), got: p.tracks.len() });
        }
        for &t in p.tracks {
            if t >= arity {
                return Err(Error::BadTrack { track: t, arity });
            }
            covered[t] = true;
        }
    }
    if let Some(t) = covered.iter().position(|c| !c) {
        return Err(Error::BadTrack { track: t, arity });
    }
    let pad = alpha.pad_index();
    // For factor i, the positions (within its own tracks) already fixed by
    // earlier factors.
    let shared: Vec<Vec<usize>> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            (0..p.tracks.len())
                .filter(|&k| parts[..i].iter().any(|q| q.tracks.contains(&p.tracks[k])))
                .collect()
        })
        .collect();
    type Entry = (Vec<u32>, Part);
    // Per factor and state: row entries as letter-index vectors, bucketed by
    // the shared-track letters.
    let mut cache: Vec<HashMap<Part, HashMap<Vec<u32>, Vec<Entry>>>> =
        (0..parts.len()).map(|_| HashMap::new()).collect();

    let accept = |state: &Vec<Part>| {
        Ok(state.iter().zip(parts).all(|(s, p)| match s {
            Part::Done => true,
            Part::Run(s) => p.dfa.is_accepting(*s),
        }))
    };
    let initial: Vec<Part> = parts.iter().map(|p| Part::Run(p.dfa.initial())).collect();

    explore_dfa(alpha, initial, budget, accept, |state, out| {
        for (i, p) in parts.iter().enumerate() {
            cache[i].entry(state[i]).or_insert_with(|| {
                let a = p.dfa.alphabet();
                let mut buckets: HashMap<Vec<u32>, Vec<Entry>> = HashMap::new();
                let mut push = |idx: Vec<u32>, to: Part| {
                    let key = shared[i].iter().map(|&k| idx[k]).collect();
                    buckets.entry(key).or_default().push((idx, to));
                };
                match state[i] {
                    Part::Done => push(vec![pad; a.arity()], Part::Done),
                    Part::Run(s) => {
                        for &(sym, t) in p.dfa.row(s) {
                            push(a.indices(sym), Part::Run(t));
                        }
                        if p.dfa.is_accepting(s) {
                            push(vec![pad; a.arity()], Part::Done);
                        }
                    }
                }
                buckets
            });
        }
        let mut assign = vec![u32::MAX; arity];
        let mut targets = Vec::with_capacity(parts.len());
        enumerate(parts, &shared, &cache, state, 0, &mut assign, &mut targets, &mut |assign, targets| {
            if assign.iter().all(|&l| l == pad) {
                return;
            }
            out.push((alpha.pack(assign), targets.clone()));
        });
        Ok(())
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    parts: &[JoinTrack<'_>],
    shared: &[Vec<usize>],
    cache: &[HashMap<Part, HashMap<Vec<u32>, Vec<(Vec<u32>, Part)>>>],
    state: &[Part],
    i: usize,
    assign: &mut Vec<u32>,
    targets: &mut Vec<Part>,
    emit: &mut dyn FnMut(&[u32], &Vec<Part>),
) {
    if i == parts.len() {
        emit(assign, targets);
        return;
    }
    let tracks = parts[i].tracks;
    let key: Vec<u32> = shared[i].iter().map(|&k| assign[tracks[k]]).collect();
    let Some(entries) = cache[i][&state[i]].get(&key) else { return };
    for (idx, to) in entries {
        let saved: Vec<u32> = tracks.iter().map(|&t| assign[t]).collect();
        for (k, &t) in tracks.iter().enumerate() {
            assign[t] = idx[k];
        }
        targets.push(*to);
        enumerate(parts, shared, cache, state, i + 1, assign, targets, emit);
        targets.pop();
        for (k, &t) in tracks.iter().enumerate() {
            assign[t] = saved[k];
        }
    }
}

/// Projection of an Nfa through a list of tracks, each one followed by a
/// subset construction; nested existentials stay deterministic in between.
pub fn project_all(a: &Dfa, tracks: &[usize], budget: usize) -> Result<Dfa> {
    let mut sorted: Vec<usize> = tracks.to_vec();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    let mut cur = a.clone();
    for t in sorted {
        cur = minimize(&determinize(&project(&Nfa::from(&cur), t)?, budget)?);
    }
    Ok(cur)
}
