use std::path::PathBuf;

use anyhow::Context;
use clap::{Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use wildmat::periodic::{EpSet, Family};
use wildmat::thin::{self, *};
use wildmat::GraphFile;

use crate::io::{read_json, to_json};
use crate::report::{CliError, Report};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FieldArg {
    Q,
    Gf2,
    Gf3,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ChainArg {
    P,
    Q,
}

#[derive(Debug, Subcommand)]
pub enum ThinCommand {
    /// Decide whether a coefficient file is a thin dependence.
    Check {
        /// Coefficient file; `-` or omitted reads standard input.
        #[arg(default_value = "-")]
        path: PathBuf,
        #[arg(long, default_value = "G")]
        family: String,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
        /// Use the plain incidence functions on RAYED_G, without the twist
        /// at `*`.
        #[arg(long)]
        untwisted: bool,
    },
    /// Emit an explicit dependence of the twisted family.
    Build {
        #[command(subcommand)]
        shape: BuildShape,
    },
    /// Compare the thin sums matroid of a finite graph with its cycle
    /// matroid.
    Equiv {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
    },
    /// Find a dependence of the twisted family supported exactly on an
    /// edge-set file.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
    },
    /// Run the skew-cut recurrence on the canonical family and on random
    /// families.
    Recurrence {
        #[arg(long, default_value_t = 100)]
        k: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = ChainArg::Q)]
        chain: ChainArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum BuildShape {
    /// The loop, rung `r:n` and the double ray from it.
    Oneray {
        #[arg(long)]
        n: usize,
    },
    /// The cycle through rungs `l` and `m` with the double ray from `n`.
    Threerung {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

fn thin_error(e: ThinError) -> CliError {
    match e {
        ThinError::BadParameters(_) | ThinError::NoDependence(_) | ThinError::NotADependence(_) => {
            CliError::Precondition(e.to_string())
        }
        other => CliError::Input(other.into()),
    }
}

pub fn run(cmd: ThinCommand, seed: u64) -> Result<Report, CliError> {
    match cmd {
        ThinCommand::Check {
            path,
            family,
            field,
            untwisted,
        } => {
            let family = Family::parse(&family).context("--family")?;
            let f = if family == Family::RayedG && !untwisted {
                ThinFamily::m_plus()
            } else {
                ThinFamily::graph(family)
            };
            let file: CoefficientsFile = read_json(&path)?;
            match field {
                FieldArg::Q => check::<Q>(&file, &f),
                FieldArg::Gf2 => check::<Gf2>(&file, &f),
                FieldArg::Gf3 => check::<Gf3>(&file, &f),
            }
        }
        ThinCommand::Build { shape } => {
            let lam: ThinCoefficients<Q> = match shape {
                BuildShape::Oneray { n } => build_lambda_f_oneray(n),
                BuildShape::Threerung { l, m, n } => build_lambda_f_threerung(l, m, n).map_err(thin_error)?,
            };
            let file = lam.to_file();
            Ok(Report::pass(to_json(&file), serde_json::to_value(&file).expect("serializable")))
        }
        ThinCommand::Equiv { path, field } => {
            let file: GraphFile = read_json(&path)?;
            let g = file.to_graph().context("resolving edge endpoints")?;
            let equal = match field {
                FieldArg::Q => check_thm53_finite::<Q>(&g),
                FieldArg::Gf2 => check_thm53_finite::<Gf2>(&g),
                FieldArg::Gf3 => check_thm53_finite::<Gf3>(&g),
            }
            .map_err(thin_error)?;
            let json = json!({ "equal": equal, "edges": g.edges.len() });
            Ok(if equal {
                Report::pass("equal: the thin sums matroid is the cycle matroid", json)
            } else {
                Report::fail("different: the thin sums matroid is not the cycle matroid", json)
            })
        }
        ThinCommand::Solve { path, field } => {
            let target: EpSet = read_json(&path)?;
            match field {
                FieldArg::Q => solve::<Q>(&target),
                FieldArg::Gf2 => solve::<Gf2>(&target),
                FieldArg::Gf3 => solve::<Gf3>(&target),
            }
        }
        ThinCommand::Recurrence { k, trials, field, chain } => {
            let chain = match chain {
                ChainArg::P => Chain::P,
                ChainArg::Q => Chain::Q,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            match field {
                FieldArg::Q => recurrence::<Q>(k, trials, chain, small_rational, &mut rng),
                FieldArg::Gf3 => recurrence::<Gf3>(k, trials, chain, nonzero_gf3, &mut rng),
                FieldArg::Gf2 => recurrence::<Gf2>(k, trials, chain, |_| Gf2::one(), &mut rng),
            }
        }
    }
}

fn check<F: Field>(file: &CoefficientsFile, f: &ThinFamily) -> Result<Report, CliError> {
    let lam: ThinCoefficients<F> = file.parse(f.family()).map_err(thin_error)?;
    let verdict = is_thin_dependence(&lam, f).map_err(thin_error)?;
    let json = serde_json::to_value(&verdict).expect("serializable");
    Ok(match &verdict {
        ThinVerdict::Ok { trivial: true } => {
            eprintln!("warning: every coefficient is zero, so the dependence is trivial");
            Report::pass("ok (trivial: all coefficients are zero)", json)
        }
        ThinVerdict::Ok { trivial: false } => Report::pass(format!("ok: a thin dependence over {}", F::NAME), json),
        ThinVerdict::IllDefinedAt { vertex } => Report::fail(format!("ill-defined: infinitely many nonzero terms at {vertex}"), json),
        ThinVerdict::NonzeroAt { vertex, sum } => Report::fail(format!("not a dependence: the sum at {vertex} is {sum}"), json),
    })
}

fn solve<F: Field>(target: &EpSet) -> Result<Report, CliError> {
    let lam: ThinCoefficients<F> = thin::solve_thin_dependence(&ThinFamily::m_plus(), target).map_err(thin_error)?;
    let file = lam.to_file();
    Ok(Report::pass(to_json(&file), serde_json::to_value(&file).expect("serializable")))
}

fn recurrence<F: Field>(
    k: usize,
    trials: usize,
    chain: Chain,
    draw: impl Fn(&mut ChaCha8Rng) -> F,
    rng: &mut ChaCha8Rng,
) -> Result<Report, CliError> {
    let mut failures = Vec::new();
    let mut run_one = |label: String, fam: SkewFamily<F>| -> Result<(), CliError> {
        let rec = mu_nu_recurrence(&fam.lambda0, &fam.lambdas, chain).map_err(thin_error)?;
        let all = fam.f.all_points();
        if !verify_telescoping(&rec.nu, &rec.mu, &fam.f, chain, fam.k(), &all) {
            failures.push(format!("{label}: telescoping fails"));
        }
        if rec.mu[0].is_zero() {
            failures.push(format!("{label}: λ′ vanishes at r:0"));
        }
        if let Err(p) = lambda_prime_zero_sum(&rec, &fam.f, &all) {
            failures.push(format!("{label}: λ′ sum is nonzero at {p}"));
        }
        Ok(())
    };
    run_one("canonical".into(), SkewFamily::canonical(k, chain))?;
    for t in 0..trials {
        run_one(format!("trial {t}"), SkewFamily::random(k, chain, rng, &draw))?;
    }
    let json = json!({ "field": F::NAME, "k": k, "trials": trials, "failures": failures });
    Ok(if failures.is_empty() {
        Report::pass(format!("ok: canonical family and {trials} random families over {} with k = {k}", F::NAME), json)
    } else {
        Report::fail(failures.join("\n"), json)
    })
}
