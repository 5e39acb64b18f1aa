use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use patternlab::genfun::{
    cf_series, decreasing_closed, kt1_closed, layered_closed, occurrence_gf, CfSpec, ClosedFamily,
    Engine, OccurrenceSpec, QPoly, DEFAULT_ORDER_LIMIT,
};
use patternlab::motzkin::generate_paths_with_limit;
use patternlab::oracle::Oracle;
use patternlab::verify::{conjecture_sweep, verify_tables};
use patternlab::{Error, IntPoly, MotzkinPath, PatternSet, Permutation, PowerSeries, RatFunc};

/// Exact enumeration of 3412-avoiding involutions.
#[derive(Parser)]
#[command(name = "patternlab", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest length the brute-force enumerator will visit
    /// (default: PATTERNLAB_LIMIT, else 14).
    #[arg(long, global = true)]
    limit: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// |I_n(3412, T)| by direct enumeration.
    Count {
        /// Comma-separated patterns; "" is the empty set.
        #[arg(long, allow_hyphen_values = true)]
        avoid: String,
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of F_T through x^N from the recursive engine.
    Series {
        #[arg(long, allow_hyphen_values = true)]
        avoid: String,
        #[arg(long, short = 'N')]
        order: usize,
    },
    /// Closed-form generating function for a pattern family.
    Closed {
        /// decreasing, layered, fibonacci, k312, k4231, k4132, k4213 or k4123.
        family: String,
        /// Family parameter (length for decreasing, k otherwise).
        #[arg(long)]
        k: Option<usize>,
        /// Layer sizes for layered, comma-separated.
        #[arg(long, value_delimiter = ',')]
        layers: Vec<usize>,
        /// Also expand through x^N.
        #[arg(long, short = 'N')]
        order: Option<usize>,
    },
    /// Statistic distributions from the continued fraction.
    Cf {
        /// inv, m, lrmax, rlmin, fix, avoid:<len> or linear:<l1,l2,...>.
        #[arg(long)]
        stat: String,
        #[arg(long, short = 'N')]
        order: usize,
        /// Truncation depth; defaults to one that suffices for the order.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Involutions with exactly r occurrences of a decreasing pattern.
    Occurrences {
        /// Length of the decreasing pattern.
        #[arg(long)]
        len: usize,
        #[arg(long)]
        r: u64,
        #[arg(long, short = 'N')]
        order: usize,
    },
    /// The path-to-involution bijection, either direction.
    Phi {
        #[arg(long, conflicts_with = "perm", required_unless_present = "perm")]
        path: Option<String>,
        #[arg(long)]
        perm: Option<String>,
    },
    /// All Motzkin paths of length n with their involutions.
    Paths {
        #[arg(long)]
        n: usize,
    },
    /// Checks the tabulated enumerations against the oracle and the engine.
    VerifyTables {
        #[arg(long, alias = "n", default_value_t = 10)]
        n_max: usize,
    },
    /// Checks that layered series are symmetric in the layer sizes.
    Conjecture {
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        l_max: usize,
        #[arg(long, short = 'N', default_value_t = 15)]
        order: usize,
    },
}

struct Output {
    text: String,
    json: Value,
    mismatch: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            mismatch: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let oracle = cli.limit.map(Oracle::new).unwrap_or_else(Oracle::from_env);
    match run(cli.cmd, &oracle) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
                if !out.text.ends_with('\n') {
                    println!();
                }
            }
            if out.mismatch {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn series_output(t: &PatternSet, s: &PowerSeries) -> Output {
    let text = join(s.coeffs());
    Output::ok(
        text,
        serde_json::to_value(s.to_json(t)).expect("series serializes"),
    )
}

fn ratfunc_json(f: &RatFunc) -> Value {
    serde_json::to_value(f.to_json()).expect("rational function serializes")
}

fn run(cmd: Cmd, oracle: &Oracle) -> Result<Output, Error> {
    match cmd {
        Cmd::Count { avoid, n } => {
            let t: PatternSet = avoid.parse()?;
            let c = oracle.count_avoiders(&t, n)?;
            Ok(Output::ok(
                c.to_string(),
                json!({ "pattern_set": t.iter().map(|p| p.to_string()).collect::<Vec<_>>(), "n": n, "count": c.to_string() }),
            ))
        }
        Cmd::Series { avoid, order } => {
            let t: PatternSet = avoid.parse()?;
            let s = Engine::new(DEFAULT_ORDER_LIMIT.max(order)).ft_series(&t, order)?;
            Ok(series_output(&t, &s))
        }
        Cmd::Closed {
            family,
            k,
            layers,
            order,
        } => {
            let need_k = || k.ok_or_else(|| Error::Domain(format!("family {family} needs --k")));
            let f = match family.as_str() {
                "decreasing" => decreasing_closed(need_k()?)?,
                "layered" => layered_closed(&layers)?,
                "fibonacci" => {
                    // avoiding {k…21, 12} leaves one involution of each length below k
                    let k = need_k()?;
                    kt1_closed(&RatFunc::from_poly(IntPoly::from_i64s(&vec![1; k])))
                }
                other => other.parse::<ClosedFamily>()?.closed(need_k()?)?,
            };
            let mut text = f.to_string();
            let mut j = json!({ "family": family, "gf": ratfunc_json(&f) });
            if let Some(n) = order {
                let s = f.series(n)?;
                text = format!("{text}\n{}", join(s.coeffs()));
                j["coefficients"] =
                    json!(s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
            }
            Ok(Output::ok(text, j))
        }
        Cmd::Cf { stat, order, depth } => {
            let spec = parse_cf(&stat)?;
            let s = cf_series(&spec, order, depth)?;
            let mut text = String::new();
            for (n, c) in s.coeffs().iter().enumerate() {
                text.push_str(&format!("{n:>3}  {c}\n"));
            }
            let coeffs: Vec<Value> = s.coeffs().iter().map(qpoly_json).collect();
            Ok(Output::ok(
                text,
                json!({ "stat": stat, "order": order, "coefficients": coeffs }),
            ))
        }
        Cmd::Occurrences { len, r, order } => {
            let spec = OccurrenceSpec::for_length(len, r)?;
            let f = occurrence_gf(&spec)?;
            let s = f.series(order)?;
            Ok(Output::ok(
                format!("{f}\n{}", join(s.coeffs())),
                json!({
                    "pattern": spec.pattern().to_string(),
                    "r": r,
                    "gf": ratfunc_json(&f),
                    "coefficients": s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                }),
            ))
        }
        Cmd::Phi { path, perm } => match (path, perm) {
            (Some(p), _) => {
                let path: MotzkinPath = p.parse()?;
                let q = path.phi();
                Ok(Output::ok(
                    q.to_string(),
                    json!({ "path": path.to_string(), "perm": q.to_string() }),
                ))
            }
            (None, Some(q)) => {
                let q: Permutation = q.parse()?;
                let path = MotzkinPath::phi_inverse(&q)?;
                Ok(Output::ok(
                    path.to_string(),
                    json!({ "path": path.to_string(), "perm": q.to_string() }),
                ))
            }
            (None, None) => unreachable!("clap requires one of --path and --perm"),
        },
        Cmd::Paths { n } => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for p in generate_paths_with_limit(n, oracle.limit())? {
                let q = p.phi();
                text.push_str(&format!("{p:<width$}  {q}\n", width = n.max(1)));
                rows.push(json!({ "path": p.to_string(), "perm": q.to_string() }));
            }
            Ok(Output::ok(text, json!({ "n": n, "paths": rows })))
        }
        Cmd::VerifyTables { n_max } => {
            let mut engine = Engine::default();
            let report = verify_tables(n_max, oracle, &mut engine)?;
            Ok(Output {
                text: report.to_string(),
                json: report.to_json(),
                mismatch: !report.success(),
            })
        }
        Cmd::Conjecture { m, l_max, order } => {
            let mut engine = Engine::new(DEFAULT_ORDER_LIMIT.max(order));
            let report = conjecture_sweep(m, l_max, order, &mut engine)?;
            Ok(Output::ok(report.to_string(), report.to_json()))
        }
    }
}

fn parse_cf(s: &str) -> Result<CfSpec, Error> {
    let bad = || Error::Parse {
        what: "statistic",
        token: s.to_string(),
    };
    Ok(match s {
        "inv" => CfSpec::Inv,
        "m" => CfSpec::M,
        "lrmax" | "rlmin" => CfSpec::Lrmax,
        "fix" => CfSpec::Fix,
        _ => match s.split_once(':') {
            Some(("avoid", k)) => CfSpec::AvoidDecreasing(k.parse().map_err(|_| bad())?),
            Some(("linear", ws)) => CfSpec::Linear(
                ws.split(',')
                    .map(|w| w.trim().parse::<i64>().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?,
            ),
            _ => return Err(bad()),
        },
    })
}

fn qpoly_json(p: &QPoly) -> Value {
    let terms: serde_json::Map<String, Value> = p
        .terms()
        .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
        .collect();
    Value::Object(terms)
}
