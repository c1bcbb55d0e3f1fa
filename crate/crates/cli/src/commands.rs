//! Command definitions and their execution.

use std::path::PathBuf;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use torus_automata_core::automata::Dfa;
use torus_automata_core::evidence::{
    dfa_sample, divisibility_cascade, nerode_lower_bound, subgroup_language_sample, zero_prefix_witness, LABEL,
};
use torus_automata_core::linmaps::{is_recognizable_automorphism, PolyMap};
use torus_automata_core::matrix::Mat2;
use torus_automata_core::pell::{cayley_lift, enumerate_families, fundamental_solution, generate_solutions, ClassifyBounds};
use torus_automata_core::presentation::{build_add_on_dom, Presentation};
use torus_automata_core::ring::reduce;
use torus_automata_core::semidirect::{
    build_representation, decode_z, encode_z, multiply, parse_z_text, phi_on_dom, verify_property_a, z_text,
    SemiElement,
};
use torus_automata_core::{DigitString, Error, IntVec, Polynomial, ReprParams, DEFAULT_STATE_BUDGET};

use crate::format::{self, to_json};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Input(String),
}

impl CliError {
    /// 1 for invalid input, 2 for an exhausted state budget, 3 for an
    /// internal invariant breach.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Core(Error::StateBudgetExceeded { .. }) => 2,
            Self::Core(Error::CarryOutOfBounds { .. } | Error::CarryCycle | Error::ReductionBudgetExceeded { .. }) => 3,
            _ => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Core(e) => write!(f, "{e}"),
            Self::Input(s) => f.write_str(s),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Text to print and whether a verification inside the command failed.
#[derive(Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Self { text: text.into(), failed: false }
    }

    fn json(v: &Value) -> Self {
        Self::ok(serde_json::to_string_pretty(v).expect("JSON values serialize"))
    }
}

#[derive(Debug, Parser)]
#[command(name = "torus-automata", version, about = "Automatic presentations of Z^n and torus bundle groups")]
pub struct Cli {
    /// Cap on states created by subset constructions and products.
    #[arg(long, global = true, env = "TORUS_AUTOMATA_STATE_BUDGET", default_value_t = DEFAULT_STATE_BUDGET)]
    pub budget: usize,
    /// Seed for randomized verification.
    #[arg(long, global = true, default_value_t = 0x7a5)]
    pub seed: u64,
    /// Worker threads for randomized verification (0 uses every core).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Coefficients p_1,...,p_{n-1} of t(x) = x^n + p_{n-1}x^{n-1} + ... + p_1 x - q.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub p: Vec<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: i64,
}

impl ParamArgs {
    fn params(&self) -> CliResult<ReprParams> {
        Ok(ReprParams::new(self.p.clone(), self.q)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildWhat {
    Equiv,
    Add,
    Dom,
    PhiG,
    Multiplier,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a polynomial (constant term first) to one with digits below |q|.
    Reduce {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        poly: Vec<i64>,
    },
    /// Canonical string of an integer vector.
    Encode {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        v: Vec<i64>,
    },
    /// Integer vector of a digit string such as [1,-2,0].
    Decode {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Canonical string of the sum of two digit strings.
    Add {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Compile an automaton and write it as JSON.
    Build {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        what: BuildWhat,
        /// Output file; the JSON goes to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Multiplier polynomial g (constant term first) for phi-g.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        g: Vec<i64>,
        /// Matrix a,b,c,d (row-major) for multiplier.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        /// Generator index 0 (t), 1 or 2 for multiplier.
        #[arg(long, default_value_t = 0)]
        generator: usize,
    },
    /// Solutions of x^2 - n y^2 = rhs.
    Pell {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        rhs: i64,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Recognizable matrices with p^2 + 4q = n, one JSON record per matrix.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Bound on the family parameter; families have |p| <= 2*bound+1.
        #[arg(long)]
        bound: i64,
        /// Bound on the trace |c| of listed matrices.
        #[arg(long, default_value_t = 50)]
        max_c: u64,
    },
    /// Representations of Z^2 x_A Z.
    Semidirect {
        /// Matrix a,b,c,d (row-major).
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[command(flatten)]
        params: ParamArgs,
        #[command(subcommand)]
        action: SemiAction,
    },
    /// Finite lower bounds on automaton sizes and zero-prefix witnesses.
    Evidence {
        #[command(flatten)]
        params: ParamArgs,
        /// dom, xi, eta, a multiple such as 2xi, or a vector such as 1,-1.
        #[arg(long, allow_hyphen_values = true)]
        subgroup: String,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
        #[arg(long, default_value_t = 6)]
        suffix_len: usize,
        /// Also report zero-prefix witnesses for k = 1..K.
        #[arg(long)]
        zero_prefix: Option<u32>,
        /// Also report the divisibility cascade from this integer.
        #[arg(long, allow_hyphen_values = true)]
        cascade: Option<i64>,
    },
    /// Graphviz DOT of an automaton JSON file.
    ExportDot { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum SemiAction {
    /// Property a) report and multiplier spot checks on random elements.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Word of the element (b, h).
    Encode {
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        h: Vec<i64>,
    },
    /// Element of an integer word such as +011 and a canonical digit string.
    Decode {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
}

fn digits(s: &str) -> CliResult<DigitString> {
    Ok(s.parse()?)
}

fn big(x: &BigInt) -> Value {
    i64::try_from(x).map_or_else(|_| Value::from(x.to_string()), Value::from)
}

fn coords(v: &IntVec) -> Value {
    Value::Array(v.coords().iter().map(big).collect())
}

fn matrix_value(m: &Mat2) -> Value {
    json!([[big(m.entry(0, 0)), big(m.entry(0, 1))], [big(m.entry(1, 0)), big(m.entry(1, 1))]])
}

fn parse_matrix(s: &str) -> CliResult<Mat2> {
    let e: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| CliError::Input(format!("bad matrix entry {t:?}"))))
        .collect::<CliResult<_>>()?;
    match e[..] {
        [a, b, c, d] => Ok(Mat2::new(a, b, c, d)),
        _ => Err(CliError::Input(format!("matrix needs 4 entries, got {}", e.len()))),
    }
}

fn workers(requested: usize) -> usize {
    if requested > 0 {
        requested
    } else {
        thread::available_parallelism().map_or(1, |n| n.get())
    }
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let budget = cli.budget;
    match &cli.command {
        Command::Reduce { params, poly } => {
            let params = params.params()?;
            let r = reduce(&Polynomial::from_coeffs(poly.iter().copied()), &params)?;
            let w = DigitString::from_polynomial(&r).ok_or_else(|| CliError::Input("reduced digits overflow".into()))?;
            Ok(Output::ok(w.to_string()))
        }
        Command::Encode { params, v } => {
            let pres = Presentation::compile_with_budget(&params.params()?, budget)?;
            Ok(Output::ok(pres.encode(&IntVec::from_i64s(v))?.to_string()))
        }
        Command::Decode { params, w } => {
            let pres = Presentation::compile_with_budget(&params.params()?, budget)?;
            Ok(Output::ok(pres.decode(&digits(w)?)?.to_string()))
        }
        Command::Add { params, x, y } => {
            let pres = Presentation::compile_with_budget(&params.params()?, budget)?;
            Ok(Output::ok(pres.add(&digits(x)?, &digits(y)?)?.to_string()))
        }
        Command::Build { params, what, out, g, matrix, generator } => {
            let params = params.params()?;
            let pres = Presentation::compile_with_budget(&params, budget)?;
            let dfa = build(&pres, *what, g, matrix.as_deref(), *generator, budget)?;
            let text = serde_json::to_string(&to_json(&dfa, Some(&params))).expect("JSON values serialize");
            match out {
                Some(path) => {
                    std::fs::write(path, text + "\n")
                        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Output::ok(format!("{} states, written to {}", dfa.num_states(), path.display())))
                }
                None => Ok(Output::ok(text)),
            }
        }
        Command::Pell { n, rhs, count } => pell(*n, *rhs, *count),
        Command::Classify { n, bound, max_c } => classify(*n, *bound, *max_c),
        Command::Semidirect { matrix, params, action } => {
            let a = parse_matrix(matrix)?;
            let params = params.params()?;
            if !is_recognizable_automorphism(&a, &params)? {
                return Err(Error::NotRecognizable(format!("{a} is not a unimodular multiplication map")).into());
            }
            let pres = Presentation::compile_with_budget(&params, budget)?;
            match action {
                SemiAction::Verify { samples } => verify(&a, &pres, *samples, cli, budget),
                SemiAction::Encode { b, h } => {
                    let w = pres.encode(&IntVec::from_i64s(h))?;
                    Ok(Output::json(&json!({ "b": z_text(&encode_z(*b)), "h": w.to_string() })))
                }
                SemiAction::Decode { b, h } => {
                    let b = decode_z(&parse_z_text(b)?)?;
                    let w = digits(h)?;
                    w.check_bound(params.digit_bound())?;
                    if !pres.is_canonical(&w) {
                        return Err(CliError::Input(format!("{w} is not a canonical string")));
                    }
                    Ok(Output::json(&json!({ "b": b, "h": coords(&pres.decode(&w)?) })))
                }
            }
        }
        Command::Evidence { params, subgroup, maxlen, suffix_len, zero_prefix, cascade } => {
            let pres = Presentation::compile_with_budget(&params.params()?, budget)?;
            evidence(&pres, subgroup, *maxlen, *suffix_len, *zero_prefix, *cascade)
        }
        Command::ExportDot { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", file.display())))?;
            Ok(Output::ok(format::to_dot(&format::from_json(&format::parse_json(&text)?)?).trim_end().to_string()))
        }
    }
}

fn build(
    pres: &Presentation,
    what: BuildWhat,
    g: &[i64],
    matrix: Option<&str>,
    generator: usize,
    budget: usize,
) -> CliResult<Dfa> {
    Ok(match what {
        BuildWhat::Equiv => pres.equiv().clone(),
        BuildWhat::Dom => pres.dom().clone(),
        BuildWhat::Add => build_add_on_dom(pres, budget)?,
        BuildWhat::PhiG => {
            if g.is_empty() {
                return Err(CliError::Input("phi-g needs --g".into()));
            }
            phi_on_dom(pres, &PolyMap::new(g.to_vec()), budget)?
        }
        BuildWhat::Multiplier => {
            let a = parse_matrix(matrix.ok_or_else(|| CliError::Input("multiplier needs --matrix".into()))?)?;
            build_representation(&a, pres, budget)?.multiplier(generator)?.clone()
        }
    })
}

fn pell(n: i64, rhs: i64, count: usize) -> CliResult<Output> {
    let pair = |x: &BigInt, y: &BigInt| json!([big(x), big(y)]);
    let Some(fund) = fundamental_solution(n, rhs)? else {
        return Ok(Output::json(&json!({ "n": n, "rhs": rhs, "fundamental": null, "solutions": [] })));
    };
    let sols: Vec<Value> = generate_solutions(&fund, count)?.iter().map(|s| pair(s.x(), s.y())).collect();
    let mut report = json!({ "n": n, "rhs": rhs, "fundamental": pair(fund.x(), fund.y()), "solutions": sols });
    if rhs.abs() == 4 {
        if let Ok(lift) = cayley_lift(&fund) {
            report["lift"] = json!({ "rhs": lift.rhs(), "solution": pair(lift.x(), lift.y()) });
        }
    }
    Ok(Output::json(&report))
}

fn classify(n: i64, bound: i64, max_c: u64) -> CliResult<Output> {
    if bound < 0 {
        return Err(CliError::Input("bound must be nonnegative".into()));
    }
    let fams = enumerate_families(n, &ClassifyBounds { max_abs_p: 2 * bound + 1, max_abs_c: max_c })?;
    let mut lines = Vec::new();
    for fam in fams.iter().filter(|f| f.r.is_none_or(|r| r.abs() <= bound)) {
        for m in &fam.matrices {
            let record = json!({
                "n": fam.n, "case": fam.case.name(), "p": fam.p, "q": fam.q,
                "c": big(&m.c), "a": big(&m.a), "matrix": matrix_value(&m.matrix), "det": big(&m.matrix.det()),
            });
            lines.push(record.to_string());
        }
    }
    Ok(Output::ok(lines.join("\n")))
}

fn verify(a: &Mat2, pres: &Presentation, samples: usize, cli: &Cli, budget: usize) -> CliResult<Output> {
    let rep = build_representation(a, pres, budget)?;
    let fixed: Vec<IntVec> = [[1, 0], [0, 1], [3, -4]].iter().map(|v| IntVec::from_i64s(v)).collect();
    let report = verify_property_a(&rep, &fixed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let elements: Vec<SemiElement> = (0..samples)
        .map(|_| {
            let h = [rng.gen_range(-50..=50), rng.gen_range(-50..=50)];
            SemiElement::new(rng.gen_range(-5..=5), IntVec::from_i64s(&h))
        })
        .collect();
    let chunk = elements.len().div_ceil(workers(cli.workers)).max(1);
    let failures: Vec<String> = thread::scope(|s| {
        let handles: Vec<_> = elements
            .chunks(chunk)
            .map(|part| {
                let rep = &rep;
                s.spawn(move || -> CliResult<Vec<String>> {
                    let mut bad = Vec::new();
                    for x in part {
                        for i in 0..3 {
                            let y = multiply(x, &SemiElement::generator(i)?, a)?;
                            let wrong = SemiElement::new(y.b, &y.h + &IntVec::from_i64s(&[1, 0]));
                            if !rep.accepts_step(i, x, &y)? || rep.accepts_step(i, x, &wrong)? {
                                bad.push(format!("{x} * g{i}"));
                            }
                        }
                    }
                    Ok(bad)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker")).collect::<CliResult<Vec<_>>>()
    })?
    .into_iter()
    .flatten()
    .collect();
    let passed = report.passed() && failures.is_empty();
    let checks: Vec<Value> = report.checks.iter().map(|(name, ok)| json!({ "check": name, "ok": ok })).collect();
    let value = json!({
        "matrix": matrix_value(a),
        "p": pres.params().p(),
        "q": pres.params().q(),
        "subgroup_states": report.subgroup_states,
        "r_a_states": report.r_a_states,
        "multiplier_states": report.multiplier_states,
        "checks": checks,
        "spot_checks": samples * 3,
        "spot_failures": failures,
        "seed": cli.seed,
        "passed": passed,
    });
    Ok(Output { failed: !passed, ..Output::json(&value) })
}

/// `dom`, `xi`, `eta`, `<m>xi`, `<m>eta` or a comma-separated vector.
fn parse_subgroup(s: &str, n: usize) -> CliResult<Option<IntVec>> {
    let s = s.trim();
    if s == "dom" {
        return Ok(None);
    }
    for (name, axis) in [("xi", 0), ("eta", 1)] {
        if let Some(m) = s.strip_suffix(name) {
            let m: i64 = if m.is_empty() { 1 } else { m.parse().map_err(|_| CliError::Input(format!("subgroup {s}")))? };
            return Ok(Some(IntVec::unit(n, axis).scale(&BigInt::from(m))));
        }
    }
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| CliError::Input(format!("subgroup {s}"))))
        .collect::<CliResult<_>>()?;
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.len() }.into());
    }
    Ok(Some(IntVec::from_i64s(&v)))
}

fn evidence(
    pres: &Presentation,
    subgroup: &str,
    maxlen: usize,
    suffix_len: usize,
    zero_prefix: Option<u32>,
    cascade: Option<i64>,
) -> CliResult<Output> {
    let params = pres.params();
    let (language, sample) = match parse_subgroup(subgroup, params.degree())? {
        None => ("Dom".to_string(), dfa_sample(pres.dom(), maxlen)?),
        Some(g) => (format!("<{g}>"), subgroup_language_sample(pres, &g, maxlen)?),
    };
    let bound = nerode_lower_bound(&sample, suffix_len);
    let mut report = json!({
        "label": LABEL,
        "language": language,
        "p": params.p(),
        "q": params.q(),
        "maxlen": bound.maxlen,
        "suffix_len": bound.suffix_len,
        "lower_bound": bound.bound,
        "extension_len": bound.extension_len,
        "witnesses": bound.prefixes.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "summary": bound.to_string(),
    });
    if let Some(k) = zero_prefix {
        let ws = (1..=k)
            .map(|k| {
                let w = zero_prefix_witness(pres, k)?;
                Ok(json!({
                    "k": w.k, "canonical": w.canonical.to_string(), "reduced": w.reduced.to_string(), "holds": w.holds,
                }))
            })
            .collect::<CliResult<Vec<_>>>()?;
        report["zero_prefix"] = Value::Array(ws);
    }
    if let Some(start) = cascade {
        let c = divisibility_cascade(pres, &BigInt::from(start))?;
        let steps: Vec<Value> = c.steps.iter().map(|s| json!({ "value": big(&s.value), "zeros": s.zeros })).collect();
        report["cascade"] = json!({ "steps": steps, "holds": c.holds });
    }
    Ok(Output::json(&report))
}
