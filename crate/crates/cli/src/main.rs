mod args;

use args::{Cli, Command, Format, IdealCommand, KrnArgs, VerifyCommand};
use clap::Parser;
use jackideal::arith::{parse_rat, BigRat, RatJson, Scalar};
use jackideal::ideal::{self, IdealBasis};
use jackideal::jack::{principal_specialization, JackCache};
use jackideal::operators::{verify_commutators, CommutatorConfig};
use jackideal::partitions::{enumerate_admissible, partitions_of, validate_kr, AdmissibleParams, Partition};
use jackideal::{MSymPoly, Report};
use serde_json::{json, Value};
use std::io::Read;
use std::process::ExitCode;

/// Exit status and message for anything that stops a command early.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn failed(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

enum Output {
    Value { json: Value, text: String },
    Report(Report),
    Membership { json: Value, text: String, member: bool },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w as usize).build_global() {
            eprintln!("error: --workers: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => emit(out, cli.format),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(out: Output, format: Format) -> ExitCode {
    let (json, text, ok) = match out {
        Output::Value { json, text } => (json, text, true),
        Output::Membership { json, text, member } => (json, text, member),
        Output::Report(r) => {
            let ok = r.all_pass();
            (serde_json::to_value(&r).expect("report serializes"), r.to_string(), ok)
        }
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&json).expect("json")),
        Format::Text => println!("{text}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cache(cli: &Cli) -> Result<JackCache, Failure> {
    match &cli.cache_dir {
        Some(dir) => JackCache::with_dir(dir).map_err(|e| usage(format!("--cache-dir {}: {e}", dir.display()))),
        None => Ok(JackCache::new()),
    }
}

fn lambda(s: &str, n: usize) -> Result<Partition, Failure> {
    let l = Partition::parse(s).map_err(|e| {
        usage(format!(
            "--lambda {s:?}: {e}; expected comma-separated weakly decreasing integers"
        ))
    })?;
    l.require_fits(n)
        .map_err(|_| usage(format!("--lambda {l} has more than --n {n} parts")))?;
    Ok(l)
}

fn params(k: u32, r: u32, n: usize) -> Result<AdmissibleParams, Failure> {
    validate_kr(k, r).map_err(|e| {
        usage(format!(
            "--k {k} --r {r}: {e}; expected k >= 1, r >= 2 and gcd(k+1, r-1) = 1"
        ))
    })?;
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    AdmissibleParams::new(k, r, n).map_err(failed)
}

fn beta(s: &str) -> Result<BigRat, Failure> {
    parse_rat(s).map_err(|e| usage(format!("--beta {s:?}: {e}; expected a rational p/q")))
}

fn partitions_text(ps: &[Partition]) -> String {
    ps.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Partitions(a) => {
            let kr = a.k.zip(a.r);
            if let Some((k, r)) = kr {
                params(k, r, a.n.max(1))?;
            }
            match (&a.lambda, a.dmax) {
                (Some(s), _) => {
                    let l = lambda(s, a.n)?;
                    let Some((k, r)) = kr else {
                        return Err(usage("checking --lambda needs --k and --r"));
                    };
                    let ok = params(k, r, a.n)?.admits(&l);
                    Ok(Output::Value {
                        json: json!({"lambda": l, "k": k, "r": r, "n": a.n, "admissible": ok}),
                        text: format!("{l} {}admissible", if ok { "" } else { "not " }),
                    })
                }
                (None, Some(dmax)) => {
                    let ps: Vec<Partition> = match kr {
                        Some((k, r)) => enumerate_admissible(k, r, a.n, dmax)
                            .map_err(failed)?
                            .iter()
                            .cloned()
                            .collect(),
                        None => (0..=dmax).flat_map(|d| partitions_of(d, a.n)).collect(),
                    };
                    Ok(Output::Value {
                        text: partitions_text(&ps),
                        json: json!(ps),
                    })
                }
                (None, None) => Err(usage("partitions needs --dmax (enumerate) or --lambda (check)")),
            }
        }
        Command::Jack(a) => {
            let l = lambda(&a.lambda, a.n)?;
            let cache = cache(cli)?;
            if let (Some(k), Some(r)) = (a.k, a.r) {
                params(k, r, a.n)?;
                let s = cache.specialize(&l, a.n, k, r).map_err(failed)?;
                return Ok(Output::Value {
                    text: s.poly.to_string(),
                    json: s.to_json(),
                });
            }
            let jack = cache.jack(&l, a.n).map_err(failed)?;
            match &a.beta {
                Some(b) => {
                    let b0 = beta(b)?;
                    let p = jack.specialize_at(&b0).map_err(failed)?;
                    let mut json = p.to_json();
                    json["lambda"] = json!(l);
                    json["beta"] = json!(RatJson::from(&b0));
                    Ok(Output::Value {
                        text: p.to_string(),
                        json,
                    })
                }
                None => Ok(Output::Value {
                    text: jack.poly().to_string(),
                    json: jack.to_json(),
                }),
            }
        }
        Command::Ideal(IdealCommand::Basis(a)) => {
            let basis = basis(cli, a)?;
            let text = (0..=a.dmax)
                .map(|d| {
                    let ls: Vec<String> = basis.degree(d).iter().map(|j| j.lambda.to_string()).collect();
                    format!("degree {d}: {}", ls.join(" "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::Value {
                json: basis.to_json(),
                text,
            })
        }
        Command::Ideal(IdealCommand::Member(a)) => {
            let basis = basis(cli, &a.params)?;
            let raw = match &a.input {
                Some(path) => {
                    std::fs::read_to_string(path).map_err(|e| usage(format!("--input {}: {e}", path.display())))?
                }
                None => {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s).map_err(failed)?;
                    s
                }
            };
            let v: Value = serde_json::from_str(&raw).map_err(|e| usage(format!("input is not JSON: {e}")))?;
            let p = MSymPoly::<BigRat>::from_json(&v).map_err(|e| usage(format!("input polynomial: {e}")))?;
            let cert = ideal::reduce_membership(&p, &basis).map_err(failed)?;
            let text = if cert.member {
                let terms: Vec<String> = cert.combination.iter().map(|(l, c)| format!("({c})·P{l}")).collect();
                format!(
                    "member: {}",
                    if terms.is_empty() {
                        "0".into()
                    } else {
                        terms.join(" + ")
                    }
                )
            } else {
                format!(
                    "not a member; leading obstruction {}",
                    cert.obstruction.as_ref().map_or("-".into(), ToString::to_string)
                )
            };
            Ok(Output::Membership {
                member: cert.member,
                json: serde_json::to_value(&cert).expect("certificate serializes"),
                text,
            })
        }
        Command::Character(a) => {
            params(a.k, a.r, a.n)?;
            let c = enumerate_admissible(a.k, a.r, a.n, a.dmax).map_err(failed)?.character();
            Ok(Output::Value {
                text: c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                json: json!(c),
            })
        }
        Command::SpecializePrincipal(a) => {
            let l = lambda(&a.lambda, a.n)?;
            let f = principal_specialization(&l, a.n).map_err(failed)?;
            let at = match (&a.beta, a.k.zip(a.r)) {
                (Some(b), _) => Some(beta(b)?),
                (None, Some((k, r))) => Some(params(k, r, a.n)?.beta()),
                (None, None) => None,
            };
            match at {
                None => Ok(Output::Value {
                    text: f.to_string(),
                    json: json!({"lambda": l, "n": a.n, "value": f.to_json()}),
                }),
                Some(b0) => {
                    let v = f.evaluate_at(&b0).map_err(failed)?;
                    Ok(Output::Value {
                        text: v.to_string(),
                        json: json!({"lambda": l, "n": a.n, "beta": RatJson::from(&b0), "value": RatJson::from(&v)}),
                    })
                }
            }
        }
        Command::Verify(v) => verify(cli, v).map(Output::Report),
    }
}

fn basis(cli: &Cli, a: &KrnArgs) -> Result<IdealBasis, Failure> {
    let p = params(a.k, a.r, a.n)?;
    IdealBasis::build(p, a.dmax, &cache(cli)?).map_err(failed)
}

fn verify(cli: &Cli, v: &VerifyCommand) -> Result<Report, Failure> {
    let cache = cache(cli)?;
    let c = &cache;
    match v {
        VerifyCommand::Commutators {
            n,
            dmax,
            trials,
            seed,
            tmax,
            mmax,
        } => {
            if *n < 2 {
                return Err(usage("--n must be at least 2 for the commutator suite"));
            }
            if *tmax < 2 {
                return Err(usage("--tmax must be at least 2"));
            }
            if *mmax < -1 {
                return Err(usage("--mmax must be at least -1"));
            }
            let mut cfg = CommutatorConfig::new(*n, *dmax, *trials, *seed);
            cfg.tmax = *tmax;
            cfg.mmax = *mmax;
            Ok(verify_commutators(&cfg))
        }
        VerifyCommand::Pieri(a) | VerifyCommand::Lassalle(a) => {
            let pieri = matches!(v, VerifyCommand::Pieri(_));
            if a.symbolic {
                return Ok(if pieri {
                    ideal::verify_pieri_symbolic(a.n, a.dmax, c)
                } else {
                    ideal::verify_lassalle_symbolic(a.n, a.dmax, c)
                });
            }
            let (k, r) = (a.k.expect("required by clap"), a.r.expect("required by clap"));
            params(k, r, a.n)?;
            let run = if pieri {
                ideal::verify_pieri_specialization
            } else {
                ideal::verify_lassalle_specialization
            };
            run(k, r, a.n, a.dmax, c).map_err(failed)
        }
        VerifyCommand::Closure { params: a, mmax, tmax } => {
            params(a.k, a.r, a.n)?;
            if *tmax < 2 {
                return Err(usage("--tmax must be at least 2"));
            }
            ideal::verify_closure(a.k, a.r, a.n, a.dmax, *mmax, *tmax, c).map_err(failed)
        }
        VerifyCommand::Restriction { params: a, jmax } => {
            params(a.k, a.r, a.n)?;
            if a.n < 2 {
                return Err(usage("--n must be at least 2 to restrict a variable"));
            }
            ideal::verify_restriction(a.k, a.r, a.n, a.dmax, *jmax, c).map_err(failed)
        }
        VerifyCommand::Regularity(a) => {
            params(a.k, a.r, a.n)?;
            ideal::verify_regularity(a.k, a.r, a.n, a.dmax, c).map_err(failed)
        }
        VerifyCommand::Wheel { k, n, dmax } => {
            params(*k, 2, *n)?;
            ideal::verify_wheel_theorem(*k, *n, *dmax, c).map_err(failed)
        }
        VerifyCommand::Phi3 { r } => {
            params(2, *r, 3)?;
            ideal::verify_phi3(*r, c).map_err(failed)
        }
        VerifyCommand::Sekiguchi { n, dmax } => {
            if *n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            Ok(ideal::verify_jack_eigen(*n, *dmax, c))
        }
    }
}
