use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use qaffine_core::dorey::{dorey, minimal_pair_triple, multiple_pole_class, DoreyTriple, EmbedError, EmbedSearch};
use qaffine_core::labeled::QuiverDoc;
use qaffine_core::quiver::{
    adapted_total_order, adapted_word, ar_quiver, convex_order_q, height_function, minimal_pairs, parse_orientation,
    ARData, AdaptedTarget,
};
use qaffine_core::rootsys::{Family, FiniteType, Root};
use qaffine_core::sequiver::{schur_weyl_quiver, se0_window, se_window, vertex_class};
use qaffine_core::spectral::{denominator, AffineFamily, AffineType, SpectralParam};
use qaffine_core::verify::{run_all, run_check, VerifyConfig};
use qaffine_core::{Error, Exec};

#[derive(Parser)]
#[command(
    name = "qaffine",
    version,
    about = "AR quivers, R-matrix denominators and Dorey rules for types A and D"
)]
struct Cli {
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gamma_Q with its phi labels and m_i values.
    ArQuiver(QuiverArgs),
    /// The order <=_Q and the adapted total order.
    ConvexOrder(QuiverArgs),
    /// Minimal pairs for the adapted total order, with their Dorey triples.
    MinimalPairs {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Positive root as comma-separated coefficients; all roots if absent.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Factors and zeros of d_{k,l}(z).
    Denominator {
        #[command(flatten)]
        g: AffineArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        /// Also report the order of the zero at this point.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// A finite window of Se(g).
    SeQuiver {
        #[command(flatten)]
        g: AffineArgs,
        /// Bound on the q-power of spectral parameters.
        #[arg(long, default_value_t = 8)]
        bound: i32,
        /// Seed vertices `i:x`; without seeds the Se_0 window is shown.
        #[arg(long, allow_hyphen_values = true)]
        seed: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The Schur-Weyl quiver Se^J for the simple-root vertices of Gamma_Q.
    SchurWeyl {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// 1 for the untwisted type, 2 for the twisted type.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        t: u8,
    },
    /// Decide V(i,x) (x) V(j,y) ->> V(k,z).
    Dorey {
        #[command(flatten)]
        g: AffineArgs,
        #[arg(long)]
        i: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        j: usize,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Realize an adjacent pair of Se(g) inside some Gamma_Q.
    EmbedPair {
        #[command(flatten)]
        g: AffineArgs,
        #[arg(long)]
        i: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        j: usize,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Run named property sweeps.
    Verify {
        /// A check name or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        /// Override the spectral window of the checks that use one.
        #[arg(long)]
        window: Option<i32>,
        /// Disable data parallelism.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args)]
struct QuiverArgs {
    /// A or D.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
    /// One arrow per edge, e.g. `1>2,3>2`.
    #[arg(long)]
    arrows: String,
    /// Height-function base `vertex=value`.
    #[arg(long, default_value = "1=0", allow_hyphen_values = true)]
    base: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct AffineArgs {
    /// A1, D1, A2 or D2.
    #[arg(long)]
    g: String,
    #[arg(long = "N")]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut output = String::new();
    let status = run(cli.command, &mut output);
    let write = |text: &str| -> std::io::Result<()> {
        match &cli.out {
            Some(path) => std::fs::write(path, text),
            None => std::io::stdout().write_all(text.as_bytes()),
        }
    };
    if let Err(e) = write(&output) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match status {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit_json(out: &mut String, v: &impl Serialize) {
    out.push_str(&serde_json::to_string(v).expect("serializable"));
    out.push('\n');
}

fn finite_type(family: &str, rank: usize) -> CliResult<FiniteType> {
    Ok(FiniteType::new(family.parse::<Family>()?, rank)?)
}

fn affine_type(args: &AffineArgs) -> CliResult<AffineType> {
    Ok(AffineType::new(args.g.parse::<AffineFamily>()?, args.n)?)
}

fn spectral(s: &str) -> CliResult<SpectralParam> {
    Ok(s.parse()?)
}

fn build_ar(args: &QuiverArgs) -> CliResult<ARData> {
    let ty = finite_type(&args.family, args.rank)?;
    let q = parse_orientation(ty, &args.arrows)?;
    let (v, h) = args
        .base
        .split_once('=')
        .ok_or_else(|| Failure::Usage(format!("base must be vertex=value, got {:?}", args.base)))?;
    let v: usize = v
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("bad base vertex {v:?}")))?;
    let h: i32 = h
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("bad base value {h:?}")))?;
    let xi = height_function(&q, v, h)?;
    Ok(ar_quiver(&q, &xi))
}

fn gamma_doc(ar: &ARData) -> QuiverDoc {
    let labels = ar
        .vertices()
        .iter()
        .map(|&v| (v, ar.root_at(v).expect("vertex of Gamma_Q").clone()));
    let quiver = qaffine_core::labeled::LabeledQuiver::new(
        ar.vertices().iter().copied(),
        ar.arrows().iter().map(|&(s, t)| (s, t, 1)),
    )
    .expect("Gamma_Q has no loops or 2-cycles");
    let names: std::collections::BTreeMap<(usize, i32), Root> = labels.collect();
    quiver.to_doc(|v| format!("({},{}) {}", v.0, v.1, names[v]))
}

fn run(command: Command, out: &mut String) -> CliResult<()> {
    match command {
        Command::ArQuiver(args) => {
            let ar = build_ar(&args)?;
            let doc = gamma_doc(&ar);
            match args.format {
                Format::Dot => out.push_str(&doc.to_dot("GammaQ")),
                Format::Json => {
                    let tau = adapted_word(ar.quiver(), AdaptedTarget::Coxeter);
                    let phi: Vec<Value> = ar
                        .vertices()
                        .iter()
                        .map(|&(i, p)| json!({"i": i, "p": p, "root": ar.root_at((i, p)).expect("in Gamma_Q").to_string()}))
                        .collect();
                    emit_json(
                        out,
                        &json!({
                            "type": ar.finite_type().to_string(),
                            "orientation": ar.quiver().to_string(),
                            "height": ar.height().values(),
                            "coxeter_word": tau.letters(),
                            "m": ar.m_values(),
                            "phi": phi,
                            "vertices": doc.vertices,
                            "arrows": doc.arrows,
                        }),
                    );
                }
            }
        }
        Command::ConvexOrder(args) => {
            let ar = build_ar(&args)?;
            let ord = convex_order_q(&ar);
            let total = adapted_total_order(ar.quiver());
            let w0 = adapted_word(ar.quiver(), AdaptedTarget::LongestElement);
            let relation: Vec<String> = ord
                .matrix()
                .iter()
                .map(|row| row.iter().map(|&b| if b { '1' } else { '0' }).collect())
                .collect();
            emit_json(
                out,
                &json!({
                    "roots": ord.roots().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                    "leq": relation,
                    "adapted_word": w0.letters(),
                    "adapted_order": total.sequence().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                    "refines": ord.is_refined_by(&total),
                }),
            );
        }
        Command::MinimalPairs { quiver, alpha } => {
            let ar = build_ar(&quiver)?;
            let ty = ar.finite_type();
            let order = adapted_total_order(ar.quiver());
            let alphas: Vec<Root> = match alpha {
                Some(s) => {
                    let coeffs =
                        parse_root_coeffs(&s, ty.rank()).ok_or_else(|| Failure::Usage(format!("bad root {s:?}")))?;
                    let r = Root::from_coeffs(coeffs);
                    if !ar.root_system().contains(&r) {
                        return Err(Error::NotAPositiveRoot(s).into());
                    }
                    vec![r]
                }
                None => order.sequence().to_vec(),
            };
            let g = AffineType::untwisted(ty);
            let mut rows = Vec::new();
            for a in &alphas {
                for (b, c) in minimal_pairs(&order, a) {
                    let t = minimal_pair_triple(&ar, &order, a, (&b, &c), false)?;
                    let verdict = dorey(&t)?;
                    rows.push(json!({
                        "alpha": a.to_string(),
                        "beta": b.to_string(),
                        "gamma": c.to_string(),
                        "triple": t,
                        "condition": verdict.condition,
                    }));
                }
            }
            emit_json(out, &json!({"type": g.to_string(), "pairs": rows}));
        }
        Command::Denominator { g, k, l, at } => {
            let g = affine_type(&g)?;
            let d = denominator(g, k, l)?;
            let roots: Vec<Value> = d
                .roots()
                .iter()
                .map(|(r, m)| json!({"root": r.to_string(), "mult": m}))
                .collect();
            let mut v = json!({
                "type": g.to_string(),
                "k": k,
                "l": l,
                "factors": d.factors().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "roots": roots,
                "degree": d.degree(),
            });
            if let Some(x) = at {
                let x = spectral(&x)?;
                v["at"] = json!(x.to_string());
                v["order"] = json!(d.order_at(x));
            }
            emit_json(out, &v);
        }
        Command::SeQuiver { g, bound, seed, format } => {
            let g = affine_type(&g)?;
            let seeds = seed
                .iter()
                .map(|s| {
                    let (i, x) = s
                        .split_once(':')
                        .ok_or_else(|| Failure::Usage(format!("seed must be i:x, got {s:?}")))?;
                    let i: usize = i
                        .trim()
                        .parse()
                        .map_err(|_| Failure::Usage(format!("bad index {i:?}")))?;
                    Ok(vertex_class(g, i, spectral(x)?)?)
                })
                .collect::<CliResult<Vec<_>>>()?;
            let seeds = if seeds.is_empty() { se0_window(g, bound) } else { seeds };
            let q = se_window(g, &seeds, bound);
            let doc = q.to_doc(|v| v.to_string());
            match format {
                Format::Dot => out.push_str(&doc.to_dot("Se")),
                Format::Json => emit_json(out, &doc),
            }
        }
        Command::SchurWeyl { quiver, t } => {
            let ar = build_ar(&quiver)?;
            let sw = schur_weyl_quiver(&ar, t == 2);
            let doc = sw.quiver().to_doc(|j| j.to_string());
            match quiver.format {
                Format::Dot => out.push_str(&doc.to_dot("SeJ")),
                Format::Json => {
                    let j: Vec<Value> = (1..=ar.finite_type().rank())
                        .map(|j| {
                            let (i, p) = sw.ar_vertices()[j - 1];
                            json!({"j": j, "vertex": [i, p], "s": sw.s(j), "X": sw.x(j).to_string()})
                        })
                        .collect();
                    let qexp: Vec<Value> = sw
                        .qexp()
                        .iter()
                        .map(|(&(a, b), &(dab, dba))| json!({"a": a, "b": b, "d_ab": dab, "d_ba": dba}))
                        .collect();
                    emit_json(
                        out,
                        &json!({
                            "type": sw.affine_type().to_string(),
                            "J": j,
                            "vertices": doc.vertices,
                            "arrows": doc.arrows,
                            "cartan": sw.cartan(),
                            "qexp": qexp,
                            "equals_reversed_quiver": sw.is_reverse_of(ar.quiver()),
                        }),
                    );
                }
            }
        }
        Command::Dorey { g, i, x, j, y, k, z } => {
            let g = affine_type(&g)?;
            let t = DoreyTriple::new(g, [(i, spectral(&x)?), (j, spectral(&y)?), (k, spectral(&z)?)])?;
            let verdict = dorey(&t)?;
            let mut v = serde_json::Map::new();
            v.insert("holds".into(), json!(verdict.holds));
            if let Some(c) = verdict.condition {
                v.insert("condition".into(), json!(c));
                let (pole, _) = multiple_pole_class(&t)?;
                v.insert("pole".into(), json!(pole));
            }
            if let Some((lift, c)) = verdict.witness {
                v.insert("witness".into(), json!({"triple": lift, "condition": c}));
            }
            emit_json(out, &Value::Object(v));
        }
        Command::EmbedPair { g, i, x, j, y } => {
            let g = affine_type(&g)?;
            if g.is_twisted() {
                return Err(Error::WrongAffineType {
                    expected: "untwisted".into(),
                    got: g.to_string(),
                }
                .into());
            }
            let v = vertex_class(g, i, spectral(&x)?)?;
            let w = vertex_class(g, j, spectral(&y)?)?;
            let search = EmbedSearch::new(g.finite_type());
            match search.embed(&v, &w) {
                Ok(found) => emit_json(
                    out,
                    &json!({
                        "found": true,
                        "orientation": found.quiver.to_string(),
                        "height": found.height.values(),
                        "a": found.a.to_string(),
                        "s": found.s,
                        "t": found.t,
                        "fast_path": found.fast_path,
                        "validated": found.validate(&v, &w),
                    }),
                ),
                Err(e) => {
                    let reason = match e {
                        EmbedError::NotAdjacent => "not_adjacent",
                        EmbedError::DualPair => "dual_pair",
                        EmbedError::NotFound => "not_found",
                    };
                    emit_json(out, &json!({"found": false, "reason": reason}));
                }
            }
        }
        Command::Verify {
            check,
            max_rank,
            window,
            sequential,
        } => {
            let cfg = VerifyConfig {
                max_rank,
                window,
                exec: if sequential { Exec::Sequential } else { Exec::Parallel },
            };
            let reports = if check == "all" {
                run_all(&cfg)
            } else {
                vec![run_check(&check, &cfg)?]
            };
            emit_json(out, &reports);
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

/// Accepts either a coefficient list `1,1,0` or a sum of simple roots `a1+a2`.
fn parse_root_coeffs(s: &str, rank: usize) -> Option<Vec<i32>> {
    if !s.contains('a') {
        return s.split(',').map(|c| c.trim().parse::<i32>().ok()).collect();
    }
    let mut coeffs = vec![0; rank];
    for term in s.split('+') {
        let i: usize = term.trim().strip_prefix('a')?.parse().ok()?;
        *coeffs.get_mut(i.checked_sub(1)?)? += 1;
    }
    Some(coeffs)
}
