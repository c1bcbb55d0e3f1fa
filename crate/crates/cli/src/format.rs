//! JSON and DOT forms of automata.
//!
//! JSON schema:
//! `{params?: {n, p, q}, arity, digit_bound, aux_letters, states, initial,
//! accepting, transitions: [{from, symbol, to}]}` where each symbol is a
//! list with one entry per track: a digit, `"pad"`, or `"auxK"` for the
//! `K`-th auxiliary letter.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use torus_automata_core::automata::{Alphabet, Dfa, StateId, Symbol};
use torus_automata_core::words::Letter;
use torus_automata_core::{Error, ReprParams, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsHeader {
    pub n: usize,
    pub p: Vec<i64>,
    pub q: i64,
}

impl ParamsHeader {
    pub fn of(params: &ReprParams) -> Self {
        Self { n: params.degree(), p: params.p().to_vec(), q: params.q() }
    }

    pub fn to_params(&self) -> Result<ReprParams> {
        if self.p.len() + 1 != self.n {
            return Err(Error::InvalidParams(format!("n = {} but {} coefficients p", self.n, self.p.len())));
        }
        ReprParams::new(self.p.clone(), self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Transition {
    pub from: StateId,
    pub symbol: Vec<Value>,
    pub to: StateId,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AutomatonJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsHeader>,
    pub arity: usize,
    pub digit_bound: u32,
    #[serde(default)]
    pub aux_letters: u8,
    pub states: Vec<StateId>,
    pub initial: StateId,
    pub accepting: Vec<StateId>,
    pub transitions: Vec<Transition>,
}

fn letter_value(l: Option<Letter>) -> Value {
    match l {
        None => Value::from("pad"),
        Some(Letter::Digit(d)) => Value::from(d),
        Some(Letter::Aux(k)) => Value::from(format!("aux{k}")),
    }
}

fn letter_text(l: Option<Letter>) -> String {
    match l {
        None => "#".into(),
        Some(Letter::Digit(d)) => d.to_string(),
        Some(Letter::Aux(k)) => format!("a{k}"),
    }
}

fn parse_letter(v: &Value) -> Result<Option<Letter>> {
    match v {
        Value::String(s) if s == "pad" => Ok(None),
        Value::String(s) => s
            .strip_prefix("aux")
            .and_then(|k| k.parse().ok())
            .map(|k| Some(Letter::Aux(k)))
            .ok_or_else(|| Error::Parse(format!("letter {s}"))),
        Value::Number(n) => n
            .as_i64()
            .and_then(|d| i32::try_from(d).ok())
            .map(|d| Some(Letter::Digit(d)))
            .ok_or_else(|| Error::Parse(format!("letter {n}"))),
        other => Err(Error::Parse(format!("letter {other}"))),
    }
}

pub fn to_json(dfa: &Dfa, params: Option<&ReprParams>) -> AutomatonJson {
    let alpha = dfa.alphabet();
    let n = dfa.num_states() as StateId;
    let mut transitions = Vec::with_capacity(dfa.num_transitions());
    for s in 0..n {
        for &(sym, to) in dfa.row(s) {
            let symbol = alpha.decode(sym).into_iter().map(letter_value).collect();
            transitions.push(Transition { from: s, symbol, to });
        }
    }
    AutomatonJson {
        params: params.map(ParamsHeader::of),
        arity: alpha.arity(),
        digit_bound: alpha.digit_bound(),
        aux_letters: alpha.aux_letters(),
        states: (0..n).collect(),
        initial: dfa.initial(),
        accepting: (0..n).filter(|&s| dfa.is_accepting(s)).collect(),
        transitions,
    }
}

/// Rebuilds the automaton; state ids are renumbered densely in the order
/// of `states`.
pub fn from_json(json: &AutomatonJson) -> Result<Dfa> {
    let alpha = Alphabet::new(json.arity, json.digit_bound, json.aux_letters)?;
    let index: BTreeMap<StateId, StateId> =
        json.states.iter().enumerate().map(|(i, &s)| (s, i as StateId)).collect();
    if index.len() != json.states.len() {
        return Err(Error::Parse("duplicate state id".into()));
    }
    let id = |s: StateId| index.get(&s).copied().ok_or_else(|| Error::Parse(format!("unknown state {s}")));
    let mut accepting = vec![false; index.len()];
    for &s in &json.accepting {
        accepting[id(s)? as usize] = true;
    }
    let mut rows: Vec<Vec<(Symbol, StateId)>> = vec![Vec::new(); index.len()];
    for t in &json.transitions {
        let letters = t.symbol.iter().map(parse_letter).collect::<Result<Vec<_>>>()?;
        rows[id(t.from)? as usize].push((alpha.encode(&letters)?, id(t.to)?));
    }
    Dfa::from_parts(alpha, id(json.initial)?, accepting, rows)
}

pub fn parse_json(text: &str) -> Result<AutomatonJson> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("automaton JSON: {e}")))
}

/// Graphviz text; parallel transitions share one edge with all labels.
pub fn to_dot(dfa: &Dfa) -> String {
    let alpha = dfa.alphabet();
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  start [shape=point];\n");
    for s in 0..dfa.num_states() as StateId {
        let shape = if dfa.is_accepting(s) { "doublecircle" } else { "circle" };
        writeln!(out, "  {s} [shape={shape}];").unwrap();
    }
    writeln!(out, "  start -> {};", dfa.initial()).unwrap();
    for s in 0..dfa.num_states() as StateId {
        let mut edges: BTreeMap<StateId, Vec<String>> = BTreeMap::new();
        for &(sym, to) in dfa.row(s) {
            let tuple: Vec<String> = alpha.decode(sym).into_iter().map(letter_text).collect();
            let label = if tuple.len() == 1 { tuple[0].clone() } else { format!("({})", tuple.join(",")) };
            edges.entry(to).or_default().push(label);
        }
        for (to, labels) in edges {
            writeln!(out, "  {s} -> {to} [label=\"{}\"];", labels.join(" ")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use torus_automata_core::presentation::Presentation;

    #[test]
    fn round_trip_preserves_the_automaton() {
        let params = ReprParams::quadratic(1, 3).unwrap();
        let pres = Presentation::compile(&params).unwrap();
        for dfa in [pres.dom(), pres.equiv()] {
            let json = to_json(dfa, Some(&params));
            let text = serde_json::to_string(&json).unwrap();
            let back = parse_json(&text).unwrap();
            assert_eq!(back.params.as_ref().unwrap().to_params().unwrap(), params);
            assert_eq!(&from_json(&back).unwrap(), dfa);
        }
    }

    #[test]
    fn symbols_name_padding_and_aux_letters() {
        let alpha = Alphabet::new(2, 1, 2).unwrap();
        let sym = alpha.encode(&[Some(Letter::Aux(1)), None]).unwrap();
        let dfa = Dfa::from_parts(alpha, 0, vec![false, true], vec![vec![(sym, 1)], vec![]]).unwrap();
        let json = to_json(&dfa, None);
        assert_eq!(json.transitions[0].symbol, vec![Value::from("aux1"), Value::from("pad")]);
        assert_eq!(from_json(&json).unwrap(), dfa);
        assert!(to_dot(&dfa).contains("0 -> 1 [label=\"(a1,#)\"]"));
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(parse_json("{").is_err());
        let mut json = to_json(&Dfa::universal(Alphabet::digits(1, 1).unwrap()), None);
        json.transitions[0].to = 7;
        assert!(from_json(&json).is_err());
        json.transitions[0].to = 0;
        json.transitions[0].symbol = vec![Value::from(5)];
        assert!(from_json(&json).is_err());
    }
}
