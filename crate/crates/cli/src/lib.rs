//! Command-line front end: parses a request, runs it against `gl3sixj` and
//! renders deterministic JSON.
//!
//! Exit codes: `0` success, `1` internal failure, `2` usage or parse error,
//! `3` inputs that parse but are incompatible (non-zero `m3`, bad patterns,
//! labels that do not fit their weights, problems over the size bound).

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use gl3sixj::gamma::{enumerate_patterns, norm_sq};
use gl3sixj::invariants::{enumerate_tau, enumerate_tau_generators};
use gl3sixj::sixj::MatchingSystem;
use gl3sixj::threej::threej_value;
use gl3sixj::{
    AgkzBasis, Error, GTPattern, GtBasis, Rational, SixJConfig, SixJEvaluator, SixJMethod, SixJProblem, TauLabel,
    ThreeJQuery, Weight3,
};
use serde_json::{json, Map, Value};

/// Environment variable holding the worker count for `--parallel`.
pub const THREADS_ENV: &str = "GL3SIXJ_THREADS";

#[derive(Parser, Debug)]
#[command(name = "gl3sixj", version, about = "Exact gl(3) Gelfand-Tsetlin bases, 3j- and 6j-symbols")]
struct Cli {
    /// Run library joins on a thread pool (size from GL3SIXJ_THREADS).
    #[arg(long, global = true)]
    parallel: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gelfand-Tsetlin basis of an irreducible representation.
    Basis {
        /// Highest weight "m1,m2,0".
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// Multiplicity labels of the invariant in a triple product.
    Multiplicity {
        #[arg(num_args = 3, value_names = ["W1", "W2", "W3"])]
        weights: Vec<String>,
        /// Include labels with both τ1 and τ8 positive.
        #[arg(long)]
        all_generators: bool,
    },
    /// A single 3j-symbol.
    Threej {
        #[arg(num_args = 3, value_names = ["W1", "W2", "W3"])]
        weights: Vec<String>,
        /// Patterns "m13,m23,m33;m12,m22;m11", one per weight.
        #[arg(long, num_args = 3, required = true)]
        patterns: Vec<String>,
        /// Label as 8 comma-separated integers.
        #[arg(long, required = true)]
        tau: String,
    },
    /// A 6j-symbol.
    Sixj {
        #[arg(num_args = 6, value_names = ["V1", "V2", "U", "V3", "W", "H"])]
        weights: Vec<String>,
        /// Labels of f1 (V1,V2,U), f2 (U,V3,W), f3 (V2,V3,H), f4 (V1,H,W).
        #[arg(long, num_args = 4, required = true)]
        tau: Vec<String>,
        #[arg(long, value_enum, default_value_t = Method::Contract)]
        method: Method,
        /// Largest pattern six-tuple count for the definition route.
        #[arg(long)]
        max_pattern_tuples: Option<u128>,
    },
    /// Selection rule: whether a matched support tuple exists.
    CheckSelection {
        #[arg(num_args = 6, value_names = ["V1", "V2", "U", "V3", "W", "H"])]
        weights: Vec<String>,
        #[arg(long, num_args = 4, required = true)]
        tau: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Lattice,
    Contract,
    Definition,
    All,
}

/// Rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

impl Outcome {
    fn json(code: u8, v: &Value) -> Self {
        let mut stdout = serde_json::to_string(v).expect("JSON values serialize");
        stdout.push('\n');
        Outcome { code, stdout }
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) => 2,
        Error::InvalidWeight(_)
        | Error::NotAPattern(_)
        | Error::IncompatibleLabels(_)
        | Error::GroupMismatch(_)
        | Error::ScaleExceeded { .. } => 3,
        Error::NotWeightVector(_) | Error::InvalidLattice(_) | Error::Unbounded(_) | Error::Unsolvable(_) => 1,
    }
}

fn error_json(kind: &str, message: &str) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}

/// Parses and runs a command line (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.to_string(),
                },
                _ => Outcome::json(2, &error_json("usage", e.to_string().trim_end())),
            };
        }
    };
    match execute(&cli) {
        Ok(v) => Outcome::json(0, &v),
        Err(Failure::Usage(msg)) => Outcome::json(2, &error_json("usage", &msg)),
        Err(Failure::Lib(e)) => Outcome::json(exit_code(&e), &error_json(e.kind(), &e.to_string())),
    }
}

fn parse<T: FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    s.parse().map_err(Failure::Lib)
}

fn parse_all<T: FromStr<Err = Error>>(items: &[String]) -> Result<Vec<T>, Failure> {
    items.iter().map(|s| parse(s)).collect()
}

fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn label(t: &TauLabel) -> Value {
    Value::Array(t.0.iter().map(|&x| Value::from(x)).collect())
}

fn problem(weights: &[String], taus: &[String]) -> Result<SixJProblem, Failure> {
    let ws: Vec<Weight3> = parse_all(weights)?;
    let ts: Vec<TauLabel> = parse_all(taus)?;
    let ws: [Weight3; 6] = ws.try_into().map_err(|_| Failure::Usage("six weights expected".into()))?;
    let ts: [TauLabel; 4] = ts.try_into().map_err(|_| Failure::Usage("four labels expected".into()))?;
    Ok(SixJProblem::new(ws, ts)?)
}

fn execute(cli: &Cli) -> Result<Value, Failure> {
    let parallel = cli.parallel && configure_pool();
    match &cli.command {
        Command::Basis { weight } => basis(parse(weight)?),
        Command::Multiplicity {
            weights,
            all_generators,
        } => {
            let ws: Vec<Weight3> = parse_all(weights)?;
            let labels = if *all_generators {
                enumerate_tau_generators(ws[0], ws[1], ws[2])
            } else {
                enumerate_tau(ws[0], ws[1], ws[2])
            };
            Ok(json!({
                "weights": ws.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "labels": labels.iter().map(label).collect::<Vec<_>>(),
            }))
        }
        Command::Threej { weights, patterns, tau } => {
            let ws: Vec<Weight3> = parse_all(weights)?;
            let ps: Vec<GTPattern> = parse_all(patterns)?;
            let q = ThreeJQuery::new([ws[0], ws[1], ws[2]], [ps[0], ps[1], ps[2]], parse(tau)?)?;
            Ok(json!({ "value": rational(&threej_value(&q)?) }))
        }
        Command::Sixj {
            weights,
            tau,
            method,
            max_pattern_tuples,
        } => {
            let p = problem(weights, tau)?;
            let mut config = SixJConfig {
                parallel,
                ..SixJConfig::default()
            };
            if let Some(b) = max_pattern_tuples {
                config.max_pattern_tuples = *b;
            }
            let eval = SixJEvaluator::agkz(config);
            let single = |m: SixJMethod| -> Result<Value, Failure> { Ok(json!({ "value": rational(&eval.evaluate(&p, m)?) })) };
            match method {
                Method::Lattice => single(SixJMethod::Lattice),
                Method::Contract => single(SixJMethod::Contract),
                Method::Definition => single(SixJMethod::Definition),
                Method::All => {
                    let mut out = Map::new();
                    let mut values = Vec::new();
                    for m in SixJMethod::ALL {
                        let v = eval.evaluate(&p, m)?;
                        out.insert(m.name().to_string(), rational(&v));
                        values.push(v);
                    }
                    out.insert("agree".into(), Value::Bool(values.windows(2).all(|w| w[0] == w[1])));
                    Ok(Value::Object(out))
                }
            }
        }
        Command::CheckSelection { weights, tau } => {
            let p = problem(weights, tau)?;
            let count = MatchingSystem::new(&p)?.count(parallel);
            Ok(json!({
                "selection_rule": count > 0,
                "matched_tuples": count.to_string(),
            }))
        }
    }
}

fn basis(w: Weight3) -> Result<Value, Failure> {
    let mut vectors = Vec::new();
    for p in enumerate_patterns(w) {
        let f = AgkzBasis.vector(&p)?;
        let mut poly = Map::new();
        for (m, c) in f.terms() {
            poly.insert(f.format_monomial(m), rational(c));
        }
        vectors.push(json!({
            "pattern": p.to_string(),
            "norm_sq": rational(&norm_sq(&p)?),
            "polynomial": Value::Object(poly),
        }));
    }
    Ok(json!({
        "weight": w.to_string(),
        "dimension": w.dimension(),
        "vectors": vectors,
    }))
}

/// Sizes the global pool from [`THREADS_ENV`]; returns whether parallel
/// evaluation is available.
fn configure_pool() -> bool {
    #[cfg(feature = "parallel")]
    {
        if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|s| s.parse::<usize>().ok()) {
            // the pool can only be built once per process
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        true
    }
    #[cfg(not(feature = "parallel"))]
    false
}

#[cfg(test)]
mod tests;
