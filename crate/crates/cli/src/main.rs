//! `normforms`: exact JSON front end for the normal-form library.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 when an internal identity
//! check fails.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use normforms::critforms::{
    belyi_poly, bicritical_conjugacy, ncrit_polynomial, verify_ramification_poly, BelyiParams, Bicritical,
    NCritSpec, Param,
};
use normforms::cubic::{classify_partial_fpm, cubic_poly_to_sigma, curve_c_member, lemma4_construct, phi_normal_form, SigmaPair};
use normforms::exactalg::{QPoly, Rational, Var};
use normforms::projdyn::{multiplier_spectrum, RationalMap};
use normforms::transversality::{
    d10_failure_report, jacobian_certify, ncrit_reduce_mod_p, d4_spec, sylvester_datum, tricritical_jacobian_mod3,
    SylvesterDatum,
};
use normforms::Error;

#[derive(Parser)]
#[command(name = "normforms", version, about = "Exact normal forms of polynomial and rational maps")]
struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sigma-invariants of a rational map given as {"num": [...], "den": [...]}.
    Sigma {
        #[arg(long)]
        map: String,
    },
    /// The sigma normal form of a cubic polynomial class.
    Phi {
        #[arg(long, allow_hyphen_values = true)]
        s1: Rational,
        #[arg(long, allow_hyphen_values = true)]
        s3: Rational,
    },
    /// Sigma pair and normal form of a cubic polynomial.
    ClassifyCubic {
        #[arg(long)]
        map: String,
    },
    /// Cubic map whose fixed points are the roots of a quartic and equal their multipliers.
    FpmBuild {
        /// Coefficients of the quartic, lowest degree first, as a JSON array.
        #[arg(long)]
        phi: String,
    },
    /// Fixed-point multiplier form classification of a degree 2 or 3 map.
    FpmClassify {
        #[arg(long)]
        map: String,
    },
    /// Normalized Belyi polynomial of type (d; d - k, k + 1, d).
    Belyi {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// The n-critical normal form.
    Ncrit {
        #[arg(long)]
        d: usize,
        /// Comma-separated k values.
        #[arg(long, value_delimiter = ',')]
        ks: Vec<usize>,
        /// Comma-separated critical points; `g` or `h` are symbols.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gammas: Vec<Param>,
        /// Replace the critical point at this index by the symbol g.
        #[arg(long)]
        symbolic_gamma: Option<usize>,
        #[arg(long, default_value = "a", allow_hyphen_values = true)]
        a: Param,
        #[arg(long, default_value = "c", allow_hyphen_values = true)]
        c: Param,
    },
    /// Conjugacy of two bicritical maps given as a,c,d,k.
    BicriticalConj {
        #[arg(long, allow_hyphen_values = true)]
        f0: String,
        #[arg(long, allow_hyphen_values = true)]
        f1: String,
    },
    /// Transversality certificate for period-m and period-n critical orbits.
    Transversality {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Degree of the field scanned for intersection points (1 or 2).
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
        ext: u32,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// The three-critical-point examples where the reduction argument fails.
    Failure {
        #[arg(long, value_enum)]
        case: FailureCase,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Largest prime tried for the degree-10 case.
        #[arg(long, default_value_t = 13)]
        max_prime: u64,
    },
    /// Batch checks over parameter grids.
    Sweep {
        #[arg(long, value_enum)]
        task: SweepTask,
        #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
        hi: i64,
        #[arg(long, default_value_t = 3)]
        d_min: usize,
        #[arg(long, default_value_t = 8)]
        d_max: usize,
        #[arg(long, default_value_t = 3)]
        max_period: usize,
        /// Scan F_(p^2) for degrees up to this bound.
        #[arg(long, default_value_t = 5)]
        ext_up_to: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FailureCase {
    D10,
    D4,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepTask {
    PhiRoundtrip,
    TransversalityGrid,
    BelyiAudit,
}

enum Failure {
    Input(String),
    Theorem(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_theorem_violation() {
            Failure::Theorem(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Out = Result<Value, Failure>;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn parse_map(s: &str) -> Result<RationalMap, Failure> {
    serde_json::from_str(s).map_err(|e| Failure::Input(format!("bad map: {e}")))
}

fn parse_bicritical(s: &str) -> Result<Bicritical, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(Failure::Input(format!("expected a,c,d,k, got {s:?}")));
    }
    let rat = |x: &str| x.trim().parse::<Rational>().map_err(Failure::from);
    let int = |x: &str| x.trim().parse::<usize>().map_err(|e| Failure::Input(format!("{x:?}: {e}")));
    Ok(Bicritical::new(rat(parts[0])?, rat(parts[1])?, int(parts[2])?, int(parts[3])?)?)
}

fn sigma_cmd(map: &str) -> Out {
    let f = parse_map(map)?;
    Ok(json!({ "sigma": multiplier_spectrum(&f).sigma }))
}

fn phi_cmd(s1: Rational, s3: Rational) -> Out {
    let f = phi_normal_form(&SigmaPair::new(s1, s3))?;
    Ok(json!({ "map": f }))
}

fn classify_cubic_cmd(map: &str) -> Out {
    let f = parse_map(map)?;
    let s = cubic_poly_to_sigma(&f)?;
    let form = phi_normal_form(&s)?;
    Ok(json!({ "sigma1": s.sigma1, "sigma3": s.sigma3, "on_curve": curve_c_member(&s), "normal_form": form }))
}

fn fpm_build_cmd(phi: &str) -> Out {
    let phi: QPoly = serde_json::from_str(phi).map_err(|e| Failure::Input(format!("bad quartic: {e}")))?;
    Ok(json!({ "map": lemma4_construct(&phi)? }))
}

fn fpm_classify_cmd(map: &str) -> Out {
    Ok(to_value(&classify_partial_fpm(&parse_map(map)?)?))
}

fn belyi_cmd(d: usize, k: usize) -> Out {
    Ok(json!({ "poly": belyi_poly(BelyiParams::new(d, k)?) }))
}

fn ncrit_cmd(d: usize, ks: Vec<usize>, mut gammas: Vec<Param>, symbolic: Option<usize>, a: Param, c: Param) -> Out {
    if let Some(i) = symbolic {
        let slot = gammas
            .get_mut(i)
            .ok_or_else(|| Failure::Input(format!("no critical point at index {i}")))?;
        *slot = Param::Symbol(Var::G);
    }
    let spec = NCritSpec::new(d, ks, gammas, a, c)?;
    Ok(json!({ "spec": spec, "poly": ncrit_polynomial(&spec)? }))
}

fn bicritical_cmd(f0: &str, f1: &str) -> Out {
    let (f0, f1) = (parse_bicritical(f0)?, parse_bicritical(f1)?);
    Ok(json!({
        "relation": bicritical_conjugacy(&f0, &f1),
        "canonical": [f0.canonical(), f1.canonical()],
    }))
}

fn transversality_cmd(d: usize, k: usize, m: usize, n: usize, ext: u32, fault: bool) -> Out {
    if m == 0 || n == 0 {
        return Err(Failure::Input("periods start at 1".into()));
    }
    let mut sd = sylvester_datum(d, k)?;
    if fault {
        // p >= 3, so this always changes s
        sd = SylvesterDatum { s: sd.s % (sd.p - 1) + 1, ..sd };
    }
    let report = jacobian_certify(&sd, m, n, ext)?;
    if !report.certified() {
        return Err(Failure::Theorem(to_value(&report).to_string()));
    }
    Ok(to_value(&report))
}

fn failure_cmd(case: FailureCase, m: usize, n: usize, k: usize, max_prime: u64) -> Out {
    match case {
        FailureCase::D10 => Ok(json!({ "reductions": d10_failure_report(max_prime)? })),
        FailureCase::D4 => {
            if m == 0 || n == 0 || k == 0 {
                return Err(Failure::Input("periods start at 1".into()));
            }
            let reduction = ncrit_reduce_mod_p(&d4_spec(1), 3)?;
            let det = tricritical_jacobian_mod3(m, n, k)?;
            Ok(json!({ "reduction": reduction, "determinant": det, "determinant_is_zero": det.is_zero() }))
        }
    }
}

#[derive(Serialize)]
struct SweepSummary {
    checked: usize,
    failed: usize,
    first_failure: Option<Value>,
}

fn summarize(results: Vec<Result<(), Value>>) -> Value {
    let failures: Vec<Value> = results.iter().filter_map(|r| r.clone().err()).collect();
    to_value(&SweepSummary { checked: results.len(), failed: failures.len(), first_failure: failures.into_iter().next() })
}

fn phi_roundtrip(s1: i64, s3: i64) -> Result<(), Value> {
    let s = SigmaPair::new(s1, s3);
    let fail = |why: String| json!({ "sigma1": s1, "sigma3": s3, "reason": why });
    let f = phi_normal_form(&s).map_err(|e| fail(e.to_string()))?;
    let got = multiplier_spectrum(&f).sigma;
    if got != s.expected_sigma() {
        return Err(fail(format!("sigma of the normal form is {got:?}")));
    }
    Ok(())
}

fn transversality_item(d: usize, k: usize, m: usize, n: usize, ext: u32) -> Result<(), Value> {
    let fail = |why: String| json!({ "d": d, "k": k, "m": m, "n": n, "reason": why });
    let sd = sylvester_datum(d, k).map_err(|e| fail(e.to_string()))?;
    let r = jacobian_certify(&sd, m, n, ext).map_err(|e| fail(e.to_string()))?;
    if !r.certified() {
        return Err(fail("certificate failed".into()));
    }
    Ok(())
}

fn belyi_item(d: usize, k: usize) -> Result<(), Value> {
    let fail = |why: &str| json!({ "d": d, "k": k, "reason": why });
    let bp = BelyiParams::new(d, k).map_err(|e| fail(&e.to_string()))?;
    let b = belyi_poly(bp);
    if !b.coeffs().iter().all(Rational::is_integer) {
        return Err(fail("non-integer coefficient"));
    }
    if !b.eval(&Rational::zero()).is_zero() || !b.eval(&Rational::one()).is_one() {
        return Err(fail("not normalized"));
    }
    let spec = NCritSpec::new(d, vec![k], vec![Param::value(1)], Param::value(1), Param::value(0))
        .map_err(|e| fail(&e.to_string()))?;
    if verify_ramification_poly(&b, &spec) != Ok(true) {
        return Err(fail("derivative is not const z^(d-k-1) (z-1)^k"));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn sweep_cmd(task: SweepTask, lo: i64, hi: i64, d_min: usize, d_max: usize, max_period: usize, ext_up_to: usize) -> Out {
    if lo > hi || d_min < 3 || d_min > d_max || max_period == 0 {
        return Err(Failure::Input("empty or invalid range".into()));
    }
    let results: Vec<Result<(), Value>> = match task {
        SweepTask::PhiRoundtrip => {
            let grid: Vec<(i64, i64)> = (lo..=hi).flat_map(|a| (lo..=hi).map(move |b| (a, b))).collect();
            grid.par_iter().map(|&(a, b)| phi_roundtrip(a, b)).collect()
        }
        SweepTask::TransversalityGrid => {
            let mut items = Vec::new();
            for d in d_min..=d_max {
                for k in 1..=BelyiParams::canonical_bound(d) {
                    for m in 1..=max_period {
                        for n in 1..=max_period {
                            items.push((d, k, m, n, if d <= ext_up_to { 2 } else { 1 }));
                        }
                    }
                }
            }
            items.par_iter().map(|&(d, k, m, n, e)| transversality_item(d, k, m, n, e)).collect()
        }
        SweepTask::BelyiAudit => {
            let items: Vec<(usize, usize)> = (d_min..=d_max).flat_map(|d| (1..=d - 2).map(move |k| (d, k))).collect();
            items.par_iter().map(|&(d, k)| belyi_item(d, k)).collect()
        }
    };
    Ok(summarize(results))
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Sigma { map } => sigma_cmd(&map),
        Cmd::Phi { s1, s3 } => phi_cmd(s1, s3),
        Cmd::ClassifyCubic { map } => classify_cubic_cmd(&map),
        Cmd::FpmBuild { phi } => fpm_build_cmd(&phi),
        Cmd::FpmClassify { map } => fpm_classify_cmd(&map),
        Cmd::Belyi { d, k } => belyi_cmd(d, k),
        Cmd::Ncrit { d, ks, gammas, symbolic_gamma, a, c } => ncrit_cmd(d, ks, gammas, symbolic_gamma, a, c),
        Cmd::BicriticalConj { f0, f1 } => bicritical_cmd(&f0, &f1),
        Cmd::Transversality { d, k, m, n, ext, inject_fault } => transversality_cmd(d, k, m, n, ext, inject_fault),
        Cmd::Failure { case, m, n, k, max_prime } => failure_cmd(case, m, n, k, max_prime),
        Cmd::Sweep { task, lo, hi, d_min, d_max, max_period, ext_up_to, jobs } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| Failure::Input(e.to_string()))?;
            pool.install(|| sweep_cmd(task, lo, hi, d_min, d_max, max_period, ext_up_to))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, code) = match run(cli.cmd) {
        Ok(v) => (v, 0),
        Err(Failure::Input(m)) => {
            eprintln!("{}", json!({ "error": "invalid-input", "message": m }));
            return ExitCode::from(2);
        }
        Err(Failure::Theorem(m)) => (json!({ "error": "theorem-check", "message": m }), 3),
    };
    let text = doc.to_string();
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, format!("{text}\n")) {
                eprintln!("{}", json!({ "error": "io", "message": e.to_string() }));
                return ExitCode::from(2);
            }
        }
        None => println!("{text}"),
    }
    if code == 3 {
        eprintln!("identity check failed");
    }
    ExitCode::from(code)
}
