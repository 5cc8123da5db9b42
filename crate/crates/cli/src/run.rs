use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use workbench_core::battery::{self, BatteryConfig, GROUPS};
use workbench_core::carlitz::{
    carlitz_totient, check_example39, check_galois_action, check_psi_degree, check_psi_primitive,
    check_torsion_factorization, example39_element, psi_cyclotomic,
};
use workbench_core::fieldcore::{FieldCtx, Poly};
use workbench_core::heckelat::{
    check_bridge, check_hecke_mult, check_newton, d_count, phi_count, random_sublattice, sublattices_of_type, Fault,
    InvariantType, Lattice, PhiMethod,
};
use workbench_core::json::bigint_value;
use workbench_core::lseries::{
    check_character_tail, check_mod_norm_factorization, check_noinf_relation, check_norm_grouping, check_phi_agreement,
    check_tail, phi_series, split_quadratic, stickelberger_q, theta_n, theta_noinf, verify_identities, PhiSeriesMethod,
    StickCtx,
};
use workbench_core::report::CheckRecord;

use crate::args::{CarlitzCmd, Cli, Command, FaultArg, HeckeCmd, PhiArg, SeriesArg, StickCmd};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] workbench_core::Error),
}

pub struct Outcome {
    pub command: String,
    pub result: Value,
    pub checks: Vec<CheckRecord>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

/// Comma-separated little-endian coefficients.
pub fn parse_poly(ctx: &FieldCtx, s: &str) -> Result<Poly, CliError> {
    let coeffs = s
        .split(',')
        .map(|c| c.trim().parse::<u64>().map_err(|_| CliError::Invalid(format!("bad coefficient {c:?} in {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ctx.poly_from_coeffs(&coeffs)?)
}

fn parse_monic(ctx: &FieldCtx, name: &str, s: &str) -> Result<Poly, CliError> {
    let p = parse_poly(ctx, s)?;
    if !p.is_monic() || p.degree().is_none_or(|d| d == 0) {
        return Err(CliError::Invalid(format!("--{name} must be monic of degree at least 1, got {p}")));
    }
    Ok(p)
}

/// Entries separated by ';', largest first.
pub fn parse_chain(ctx: &FieldCtx, s: &str) -> Result<InvariantType, CliError> {
    let polys = s.split(';').map(|e| parse_poly(ctx, e)).collect::<Result<Vec<_>, _>>()?;
    Ok(InvariantType::new(ctx, polys)?)
}

fn rank(n: usize) -> Result<usize, CliError> {
    if n == 0 {
        return Err(CliError::Invalid("--n must be at least 1".into()));
    }
    Ok(n)
}

fn test_lattices(ctx: &FieldCtx, n: usize, samples: usize, seed: u64) -> Vec<Lattice> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lats = vec![Lattice::standard(n)];
    lats.extend((0..samples).map(|_| random_sublattice(ctx, n, 1, &mut rng)));
    lats
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    let fault = match g.inject_fault {
        Some(FaultArg::Newton) => Fault::NewtonSigmaOne,
        None => Fault::None,
    };
    if let Command::VerifyAll(args) = &cli.command {
        for name in &args.groups {
            if !GROUPS.contains(&name.as_str()) {
                return Err(CliError::Invalid(format!("unknown group {name:?}; known: {}", GROUPS.join(", "))));
            }
        }
        let cfg = BatteryConfig { seed: g.seed, fault };
        let groups: Vec<&str> =
            if args.groups.is_empty() { GROUPS.to_vec() } else { args.groups.iter().map(String::as_str).collect() };
        let mut checks = Vec::new();
        for name in &groups {
            checks.extend(battery::run_group(name, &cfg)?);
        }
        return Ok(Outcome { command: "verify-all".into(), result: json!({ "groups": groups }), checks });
    }

    let ctx = FieldCtx::new(g.p, g.m)?.with_seed(g.seed);
    match &cli.command {
        Command::Stick(cmd) => stick(&ctx, cmd),
        Command::Hecke(cmd) => hecke(&ctx, cmd, g.seed, fault),
        Command::Carlitz(cmd) => carlitz(&ctx, cmd),
        Command::VerifyAll(_) => unreachable!("handled above"),
    }
}

fn stick(ctx: &FieldCtx, cmd: &StickCmd) -> Result<Outcome, CliError> {
    match cmd {
        StickCmd::Q { ideal, extra } => {
            let s = StickCtx::new(ctx, &parse_monic(ctx, "ideal", ideal)?)?;
            let st = stickelberger_q(&s, *extra);
            let checks = vec![check_tail(&s), check_character_tail(&s)?];
            let result = json!({ "q": s.q(), "d": s.d(), "group_order": s.group().order(), "gammas": st.gammas, "tail": st.tail });
            Ok(Outcome { command: "stick q".into(), result, checks })
        }
        StickCmd::Theta { ideal, n, method } => {
            let n = rank(*n)?;
            let s = StickCtx::new(ctx, &parse_monic(ctx, "ideal", ideal)?)?;
            let m = match method {
                SeriesArg::Lattice => PhiSeriesMethod::Lattice,
                SeriesArg::Generating => PhiSeriesMethod::Generating,
            };
            let result = json!({
                "theta": theta_n(&s, n, m)?,
                "theta_noinf": theta_noinf(&s, n, m)?,
                "phi_series": phi_series(&s, n, n * s.d(), m)?,
            });
            let mut checks =
                vec![check_phi_agreement(&s, n)?, check_mod_norm_factorization(&s, n)?, check_noinf_relation(&s, n)?];
            if n == 2 && *s.ideal() == split_quadratic(&s) {
                checks.push(check_norm_grouping(&s)?);
            }
            Ok(Outcome { command: "stick theta".into(), result, checks })
        }
        StickCmd::Verify { ideal, n_max } => {
            let s = StickCtx::new(ctx, &parse_monic(ctx, "ideal", ideal)?)?;
            let checks = verify_identities(&s, rank(*n_max)?)?;
            Ok(Outcome { command: "stick verify".into(), result: Value::Null, checks })
        }
    }
}

fn hecke(ctx: &FieldCtx, cmd: &HeckeCmd, seed: u64, fault: Fault) -> Result<Outcome, CliError> {
    match cmd {
        HeckeCmd::Phi { g, n, method } => {
            let n = rank(*n)?;
            let g = parse_monic(ctx, "g", g)?;
            let m = match method {
                PhiArg::Enumerate => PhiMethod::Enumerate,
                PhiArg::Hermite => PhiMethod::HermiteCount,
                PhiArg::Closed => PhiMethod::ClosedForm,
            };
            let value = phi_count(ctx, &g, n, m)?;
            let checks = vec![check_bridge(ctx, &g, n)?];
            Ok(Outcome { command: "hecke phi".into(), result: json!({ "phi": bigint_value(&value) }), checks })
        }
        HeckeCmd::Dcount { chain } => {
            let chain = parse_chain(ctx, chain)?;
            let value = d_count(ctx, &chain)?;
            let listed = sublattices_of_type(ctx, &Lattice::standard(chain.len()), &chain)?.len();
            let ok = value == listed.into();
            let check = CheckRecord::new(
                format!("hecke.dcount({})", workbench_core::heckelat::chain_tag(&chain)),
                "hecke-counts",
                ok,
                json!({ "d_count": bigint_value(&value), "listed": listed }),
            );
            Ok(Outcome {
                command: "hecke dcount".into(),
                result: json!({ "d": bigint_value(&value) }),
                checks: vec![check],
            })
        }
        HeckeCmd::Newton { x, n, r, samples } => {
            let n = rank(*n)?;
            let x = parse_monic(ctx, "x", x)?;
            let lats = test_lattices(ctx, n, *samples, seed);
            let checks = vec![check_newton(ctx, &x, n, *r, &lats, fault)?];
            Ok(Outcome { command: "hecke newton".into(), result: json!({ "test_lattices": lats }), checks })
        }
        HeckeCmd::Mult { j, jbar, samples } => {
            let j = parse_chain(ctx, j)?;
            let jbar = parse_chain(ctx, jbar)?;
            if j.len() != jbar.len() {
                return Err(CliError::Invalid("--j and --jbar must have the same length".into()));
            }
            let lats = test_lattices(ctx, j.len(), *samples, seed);
            let checks = vec![check_hecke_mult(ctx, &j, &jbar, &lats)?];
            Ok(Outcome { command: "hecke mult".into(), result: json!({ "test_lattices": lats }), checks })
        }
    }
}

fn carlitz(ctx: &FieldCtx, cmd: &CarlitzCmd) -> Result<Outcome, CliError> {
    match cmd {
        CarlitzCmd::Psi { ideal } => {
            let i = parse_monic(ctx, "ideal", ideal)?;
            let psi = psi_cyclotomic(ctx, &i)?;
            let result = json!({
                "psi": psi,
                "degree": psi.degree(),
                "totient": carlitz_totient(ctx, &i)?,
            });
            let checks = vec![
                check_torsion_factorization(ctx, &i)?,
                check_psi_degree(ctx, &i)?,
                check_psi_primitive(ctx, &i)?,
                check_galois_action(ctx, &i)?,
            ];
            Ok(Outcome { command: "carlitz psi".into(), result, checks })
        }
        CarlitzCmd::Example39 { ideal } => {
            let i = parse_monic(ctx, "ideal", ideal)?;
            let ex = example39_element(ctx, &i)?;
            let checks = check_example39(ctx, &i)?;
            Ok(Outcome { command: "carlitz example39".into(), result: to_value(&ex), checks })
        }
    }
}
