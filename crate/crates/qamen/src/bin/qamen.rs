//! Batch command-line surface: load quivers and representations from JSON,
//! run the exact computations, and write one deterministic JSON or CSV
//! artifact per invocation.
//!
//! Exit codes: 0 when all checks pass, 1 on a check failure (with a
//! machine-readable report), 2 on parse or input errors.

use clap::{Parser, Subcommand, ValueEnum};
use num::rational::BigRational;
use qamen::error::Error;
use qamen::fixtures::{pair_fixture, FIXTURE_NAMES};
use qamen::functors::{exceptional_pair_check, pair_report_json, wild_witness, WildWitness};
use qamen::hyperfinite::{profile_search, verify_certificate, HyperfiniteCertificate};
use qamen::kronecker::{
    block_bound_pre, gen_block, pencil_canonical_form, shrink_any, shrink_preprojective,
    KroneckerBlock, KroneckerShrink,
};
use qamen::poly::Poly;
use qamen::quiver::{DimVector, EulerData, IntMatrix, Quiver, QuiverClass};
use qamen::rep::Representation;
use qamen::scalar::{format_rational, parse_rational, FieldSpec};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qamen", version, about = "Exact-arithmetic quiver representation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a quiver by the sign behavior of its Tits form.
    QuiverClassify {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Euler matrix, Coxeter transformation, and radical data.
    QuiverEuler {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coxeter orbits of the simple regular dimension vectors.
    QuiverOrbits {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit one canonical two-arrow block as a representation file.
    KronGen {
        /// Block descriptor: pre:I, inj:I, reginf:M, or reg:C0,C1,..,CD:E
        /// (polynomial coefficients from the constant term up).
        #[arg(long)]
        block: String,
        /// Field: "q" for the rationals or "gf:P" for a prime field.
        #[arg(long, default_value = "gf:2")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pencil canonical form of a two-arrow representation.
    KronCanon {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shrinking certificate for a preprojective index or a representation
    /// file; with --sweep, a table over all indices up to --i.
    KronShrink {
        #[arg(long)]
        i: Option<u64>,
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Exact tolerance "a/b"; may be given several times in sweep mode.
        #[arg(long, required = true)]
        eps: Vec<String>,
        #[arg(long, default_value = "gf:2")]
        field: String,
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate file against its representation from scratch.
    HfVerify {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a large certified submodule under a block bound.
    HfProfile {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, value_name = "L")]
        l: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Numeric identity checks on the regular orbits of a Euclidean quiver.
    LemmaCheck {
        #[arg(value_enum)]
        kind: LemmaKind,
        #[arg(long)]
        quiver: PathBuf,
        /// Largest translate shift swept by the shifted identities.
        #[arg(long, default_value_t = 20)]
        r_max: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhibit a wildness witness: a multi-arrow pair or a proper Euclidean
    /// subquiver.
    WildWitness {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orthogonal-pair report for a built-in fixture (example1..example4) or
    /// for files given via --quiver/--x/--y.
    PairCheck {
        target: String,
        #[arg(long)]
        quiver: Option<PathBuf>,
        #[arg(long)]
        x: Option<PathBuf>,
        #[arg(long)]
        y: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaKind {
    /// Orbit sums equal the radical generator; sizes match the tubular type.
    #[value(name = "3.1")]
    OrbitSums,
    /// Cyclic 1/-1/0 Euler pattern inside each tube.
    #[value(name = "3.2-pattern")]
    OrbitPattern,
    /// Shifted pairing of translated projectives against tube mouths.
    #[value(name = "3.3")]
    TubeShift,
    /// Hom-minus-ext dimension formula for translated projectives.
    #[value(name = "3.4-homdims")]
    HomDims,
}

/// A command outcome: the artifact text plus whether every check passed.
struct Outcome {
    text: String,
    pass: bool,
}

impl Outcome {
    fn json(v: serde_json::Value, pass: bool) -> Outcome {
        Outcome { text: format!("{}\n", serde_json::to_string_pretty(&v).unwrap()), pass }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = out_path_of(&cli.command).cloned();
    match run(cli.command) {
        Ok(outcome) => {
            let written = match &out_path {
                Some(p) => std::fs::write(p, &outcome.text).map_err(|e| e.to_string()),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) if outcome.pass => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn out_path_of(c: &Command) -> Option<&PathBuf> {
    match c {
        Command::QuiverClassify { out, .. }
        | Command::QuiverEuler { out, .. }
        | Command::QuiverOrbits { out, .. }
        | Command::KronGen { out, .. }
        | Command::KronCanon { out, .. }
        | Command::KronShrink { out, .. }
        | Command::HfVerify { out, .. }
        | Command::HfProfile { out, .. }
        | Command::LemmaCheck { out, .. }
        | Command::WildWitness { out, .. }
        | Command::PairCheck { out, .. } => out.as_ref(),
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::QuiverClassify { quiver, .. } => {
            let e = load_euler(&quiver)?;
            let mut v = serde_json::Map::new();
            let class = match &e.classification {
                QuiverClass::Dynkin => "dynkin",
                QuiverClass::Euclidean { .. } => "euclidean",
                QuiverClass::Wild => "wild",
            };
            v.insert("class".into(), class.into());
            if let QuiverClass::Euclidean { tubular_type } = &e.classification {
                v.insert("tubular_type".into(), serde_json::json!(tubular_type));
            }
            if let Some(h) = &e.radical_generator {
                v.insert("radical_generator".into(), dimvec_json(&e.quiver, h));
            }
            Ok(Outcome::json(serde_json::Value::Object(v), true))
        }
        Command::QuiverEuler { quiver, .. } => {
            let e = load_euler(&quiver)?;
            let mut v = serde_json::Map::new();
            v.insert("euler_matrix".into(), int_matrix_json(&e.euler_matrix));
            v.insert("coxeter".into(), int_matrix_json(&e.coxeter));
            v.insert("coxeter_inverse".into(), int_matrix_json(&e.coxeter_inverse));
            if let Ok(d) = e.coxeter_number() {
                v.insert("coxeter_number".into(), d.into());
            }
            if let Some(h) = &e.radical_generator {
                v.insert("radical_generator".into(), dimvec_json(&e.quiver, h));
            }
            Ok(Outcome::json(serde_json::Value::Object(v), true))
        }
        Command::QuiverOrbits { quiver, .. } => {
            let e = load_euler(&quiver)?;
            let h = e.radical_generator.clone().ok_or(Error::NotEuclidean)?;
            let orbits = e.simple_regular_orbits()?;
            let n = e.quiver.num_vertices();
            let sums_ok = orbits.iter().all(|o| {
                o.iter().fold(DimVector::zeros(n), |a, x| a.add(x)) == h
            });
            let pattern_ok = e.orbit_euler_pattern_holds()?;
            let v = serde_json::json!({
                "radical_generator": dimvec_json(&e.quiver, &h),
                "orbits": orbits
                    .iter()
                    .map(|o| o.iter().map(|x| dimvec_json(&e.quiver, x)).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "orbit_sizes": orbits.iter().map(|o| o.len()).collect::<Vec<_>>(),
                "sums_equal_radical": sums_ok,
                "euler_pattern": pattern_ok,
            });
            Ok(Outcome::json(v, sums_ok && pattern_ok))
        }
        Command::KronGen { block, field, .. } => {
            let f = parse_field(&field)?;
            let b = parse_block(&block, f)?;
            let m = gen_block(&b, f)?;
            Ok(Outcome::json(m.to_json(), true))
        }
        Command::KronCanon { rep, .. } => {
            let m = load_rep(&rep)?;
            let form = pencil_canonical_form(&m)?;
            Ok(Outcome::json(form.to_json(), true))
        }
        Command::KronShrink { i, rep, eps, field, sweep, format, .. } => {
            let eps: Vec<BigRational> =
                eps.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?;
            if sweep {
                let max_i =
                    i.ok_or_else(|| Error::InvalidInput("--sweep needs --i".into()))?;
                let f = parse_field(&field)?;
                run_sweep(max_i, &eps, f, format)
            } else {
                let e = eps
                    .first()
                    .ok_or_else(|| Error::InvalidInput("missing --eps".into()))?;
                let shrink = match (&rep, i) {
                    (Some(path), _) => shrink_any(&load_rep(path)?, e)?,
                    (None, Some(i)) => {
                        shrink_preprojective(parse_field(&field)?, i as usize, e)?
                    }
                    (None, None) => {
                        return Err(Error::InvalidInput("need --i or --rep".into()))
                    }
                };
                let verified =
                    verify_certificate(&shrink.cert.ambient, &shrink.cert).is_ok();
                Ok(Outcome::json(shrink_json(&shrink, verified), verified))
            }
        }
        Command::HfVerify { rep, cert, .. } => {
            let m = load_rep(&rep)?;
            let c = HyperfiniteCertificate::from_json(&m, &read_json(&cert)?)?;
            match verify_certificate(&m, &c) {
                Ok(()) => Ok(Outcome::json(serde_json::json!({"ok": true}), true)),
                Err(e) => Ok(Outcome::json(
                    serde_json::json!({"ok": false, "violation": e.to_string()}),
                    false,
                )),
            }
        }
        Command::HfProfile { rep, l, .. } => {
            let m = load_rep(&rep)?;
            let result = profile_search(&m, l);
            let verified = verify_certificate(&m, &result.certificate).is_ok();
            Ok(Outcome::json(
                serde_json::json!({
                    "L": l,
                    "dim_M": m.total_dim(),
                    "best_dim": result.best_dim,
                    "exact": result.exact,
                    "verified": verified,
                    "certificate": result.certificate.to_json(),
                }),
                verified,
            ))
        }
        Command::LemmaCheck { kind, quiver, r_max, .. } => {
            let e = load_euler(&quiver)?;
            let (name, holds, detail) = match kind {
                LemmaKind::OrbitSums => {
                    let h = e.radical_generator.clone().ok_or(Error::NotEuclidean)?;
                    let orbits = e.simple_regular_orbits()?;
                    let n = e.quiver.num_vertices();
                    let sums_ok = orbits.iter().all(|o| {
                        o.iter().fold(DimVector::zeros(n), |a, x| a.add(x)) == h
                    });
                    let mut sizes: Vec<i64> =
                        orbits.iter().map(|o| o.len() as i64).collect();
                    sizes.sort_unstable_by(|a, b| b.cmp(a));
                    let mut expected: Vec<i64> = match &e.classification {
                        QuiverClass::Euclidean { tubular_type } => {
                            tubular_type.iter().copied().filter(|&t| t > 1).collect()
                        }
                        _ => Vec::new(),
                    };
                    expected.sort_unstable_by(|a, b| b.cmp(a));
                    (
                        "3.1",
                        sums_ok && sizes == expected,
                        serde_json::json!({"orbit_sizes": sizes, "expected_sizes": expected}),
                    )
                }
                LemmaKind::OrbitPattern => {
                    ("3.2-pattern", e.orbit_euler_pattern_holds()?, serde_json::json!({}))
                }
                LemmaKind::TubeShift => (
                    "3.3",
                    e.tube_shift_identity_holds(r_max)?,
                    serde_json::json!({"r_max": r_max}),
                ),
                LemmaKind::HomDims => (
                    "3.4-homdims",
                    e.tube_homdim_identity_holds(r_max)?,
                    serde_json::json!({"r_max": r_max}),
                ),
            };
            Ok(Outcome::json(
                serde_json::json!({"check": name, "holds": holds, "detail": detail}),
                holds,
            ))
        }
        Command::WildWitness { quiver, .. } => {
            let q = load_quiver(&quiver)?;
            let witness = wild_witness(&q)?;
            let v = match witness {
                None => serde_json::json!({"witness": serde_json::Value::Null}),
                Some(WildWitness::MultiArrow { from, to, count }) => serde_json::json!({
                    "witness": {"kind": "multi_arrow", "from": from, "to": to, "count": count}
                }),
                Some(WildWitness::ProperEuclideanSubquiver(sub)) => serde_json::json!({
                    "witness": {"kind": "euclidean_subquiver", "quiver": sub.to_json()}
                }),
            };
            Ok(Outcome::json(v, true))
        }
        Command::PairCheck { target, quiver, x, y, .. } => {
            let (name, e, xm, ym) = if target == "files" {
                let q = load_euler(
                    &quiver.ok_or_else(|| Error::InvalidInput("need --quiver".into()))?,
                )?;
                let xm =
                    load_rep(&x.ok_or_else(|| Error::InvalidInput("need --x".into()))?)?;
                let ym =
                    load_rep(&y.ok_or_else(|| Error::InvalidInput("need --y".into()))?)?;
                ("files".to_string(), q, xm, ym)
            } else if FIXTURE_NAMES.contains(&target.as_str()) {
                let fx = pair_fixture(&target)?;
                (target.clone(), fx.euler, fx.x, fx.y)
            } else {
                return Err(Error::InvalidInput(format!("unknown pair target {target:?}")));
            };
            let report = exceptional_pair_check(&e, &xm, &ym)?;
            let v = serde_json::json!({
                "target": name,
                "x_dimv": dimvec_json(&e.quiver, &xm.dim_vector()),
                "y_dimv": dimvec_json(&e.quiver, &ym.dim_vector()),
                "report": pair_report_json(&report),
            });
            Ok(Outcome::json(v, report.qualifies))
        }
    }
}

fn run_sweep(
    max_i: u64,
    eps: &[BigRational],
    field: FieldSpec,
    format: Format,
) -> Result<Outcome, Error> {
    let mut rows = Vec::new();
    let mut all_ok = true;
    for e in eps {
        let l = block_bound_pre(e);
        for i in 0..=max_i {
            let shrink = shrink_preprojective(field, i as usize, e)?;
            let verified = verify_certificate(&shrink.cert.ambient, &shrink.cert).is_ok();
            all_ok &= verified;
            rows.push((
                i,
                shrink.cert.dim_m(),
                format_rational(e),
                shrink.cert.dim_p(),
                shrink.cert.max_block(),
                l,
                verified,
            ));
        }
    }
    let text = match format {
        Format::Csv => {
            let mut s = String::from("i,dim,eps,dim_P,max_block,L,verified\n");
            for (i, dim, eps, dim_p, max_block, l, verified) in &rows {
                s.push_str(&format!("{i},{dim},{eps},{dim_p},{max_block},{l},{verified}\n"));
            }
            s
        }
        Format::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|(i, dim, eps, dim_p, max_block, l, verified)| {
                    serde_json::json!({
                        "i": i, "dim": dim, "eps": eps, "dim_P": dim_p,
                        "max_block": max_block, "L": l, "verified": verified,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    };
    Ok(Outcome { text, pass: all_ok })
}

fn shrink_json(s: &KroneckerShrink, verified: bool) -> serde_json::Value {
    serde_json::json!({
        "certificate": s.cert.to_json(),
        "claimed_blocks": s.claimed.iter().map(|b| b.to_json()).collect::<Vec<_>>(),
        "verified": verified,
    })
}

fn read_json(path: &PathBuf) -> Result<serde_json::Value, Error> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_quiver(path: &PathBuf) -> Result<Quiver, Error> {
    Quiver::from_json(&read_json(path)?)
}

fn load_euler(path: &PathBuf) -> Result<EulerData, Error> {
    EulerData::new(&load_quiver(path)?)
}

fn load_rep(path: &PathBuf) -> Result<Representation, Error> {
    Representation::from_json(&read_json(path)?)
}

fn parse_field(s: &str) -> Result<FieldSpec, Error> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = s.strip_prefix("gf:") {
        let p: u64 =
            p.parse().map_err(|_| Error::Parse(format!("bad field spec {s:?}")))?;
        return FieldSpec::prime_field(p);
    }
    Err(Error::Parse(format!("bad field spec {s:?}; expected q or gf:P")))
}

fn parse_block(s: &str, field: FieldSpec) -> Result<KroneckerBlock, Error> {
    let bad = || Error::Parse(format!("bad block descriptor {s:?}"));
    let mut parts = s.split(':');
    let kind = parts.next().ok_or_else(bad)?;
    match kind {
        "pre" | "inj" | "reginf" => {
            let n: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if parts.next().is_some() {
                return Err(bad());
            }
            Ok(match kind {
                "pre" => KroneckerBlock::Pre(n),
                "inj" => KroneckerBlock::Inj(n),
                _ => KroneckerBlock::RegInf(n),
            })
        }
        "reg" => {
            let coeffs: Vec<i64> = parts
                .next()
                .ok_or_else(bad)?
                .split(',')
                .map(|c| c.parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            let e: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if parts.next().is_some() {
                return Err(bad());
            }
            Ok(KroneckerBlock::Reg { p: Poly::from_ints(field, &coeffs), e })
        }
        _ => Err(bad()),
    }
}

fn dimvec_json(q: &Quiver, d: &DimVector) -> serde_json::Value {
    let mut m = serde_json::Map::new();
    for (label, &v) in q.vertices.iter().zip(&d.0) {
        m.insert(label.clone(), v.into());
    }
    serde_json::Value::Object(m)
}

fn int_matrix_json(m: &IntMatrix) -> serde_json::Value {
    serde_json::json!(
        (0..m.n)
            .map(|i| (0..m.n).map(|j| m.get(i, j)).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    )
}
