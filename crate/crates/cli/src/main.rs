//! `coldspot` — Gaussian lattice sums, shell designs, and cold-spot
//! certificates from the command line.
//!
//! Exit codes: 0 success, 1 usage or runtime error, 2 a certificate that
//! computed fine but whose verdict is false.

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coldspot_core::catalog::{self, leech_hole_profiles, sort_profiles_ascending, HoleProfile};
use coldspot_core::certify::{certify_stable_coldspot, CertifyConfig};
use coldspot_core::designs::{design_strength, DEFAULT_DESIGN_TOL};
use coldspot_core::enumerate::shell_decomposition;
use coldspot_core::json as corejson;
use coldspot_core::lp::local_threshold_alpha;
use coldspot_core::potential::{coldspot_search, gradient, potential, SearchConfig};
use coldspot_core::ratio::{self, parse_rat, rat_to_f64, Rat};
use coldspot_core::Lattice;

const EXIT_CERT_FAILED: i32 = 2;

#[derive(Parser)]
#[command(
    name = "coldspot",
    version,
    about = "Inhomogeneous Gaussian lattice sums, shell designs, and cold-spot certificates",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (results are independent of this).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct LatticeArg {
    /// Named lattice (e8, d4, a2, e6*, k12, bw16, leech, z3, ...) or a
    /// path to a lattice JSON file.
    #[arg(long)]
    lattice: String,
}

#[derive(Args)]
struct PointArgs {
    /// Point in ambient coordinates: comma-separated rationals ("p/q",
    /// decimals, integers).
    #[arg(long)]
    point: Option<String>,
    /// Point as rational coefficients of the lattice basis.
    #[arg(long, conflicts_with = "point")]
    point_basis: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Gaussian sum with a certified tail bound.
    Potential {
        #[command(flatten)]
        lattice: LatticeArg,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1e-10)]
        eps: f64,
    },
    /// Cold-spot search over a grid of alpha values; emits CSV.
    Scan {
        #[command(flatten)]
        lattice: LatticeArg,
        /// Grid "start:end:step", inclusive.
        #[arg(long = "alpha-grid")]
        alpha_grid: String,
        #[arg(long, default_value_t = 32)]
        starts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "grad-tol", default_value_t = 1e-8)]
        grad_tol: f64,
    },
    /// Enumerate shells around a point up to a squared radius.
    Shells {
        #[command(flatten)]
        lattice: LatticeArg,
        #[command(flatten)]
        point: PointArgs,
        /// Exact squared radius (rational).
        #[arg(long)]
        rsq: String,
    },
    /// Design-strength report for each shell up to a squared radius.
    Design {
        #[command(flatten)]
        lattice: LatticeArg,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        rsq: String,
        #[arg(long, default_value_t = 6)]
        tmax: usize,
        #[arg(long, default_value_t = DEFAULT_DESIGN_TOL)]
        tol: f64,
    },
    /// Build a stable cold-spot certificate.
    Certify {
        #[command(flatten)]
        lattice: LatticeArg,
        #[arg(long)]
        alpha0: Option<f64>,
        /// Search for the smallest passing alpha0 instead of checking one.
        #[arg(long = "find-alpha0", default_value_t = false)]
        find_alpha0: bool,
    },
    /// Print the 23 Leech deep-hole profiles in ascending asymptotic
    /// order, flagging the limit of the cold spots.
    LeechOrder,
    /// Shell profile (radii, counts, first-shell strength) of a point.
    Profile {
        #[command(flatten)]
        lattice: LatticeArg,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Dump a lattice as JSON (re-imports to the identical Gram matrix).
    ExportLattice {
        #[command(flatten)]
        lattice: LatticeArg,
    },
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("COLDSPOT_LOG")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap would exit(2); keep 2 reserved for failed certificates.
            let _ = e.print();
            std::process::exit(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn load_lattice(arg: &LatticeArg) -> Result<Lattice> {
    let spec = arg.lattice.trim();
    if spec.ends_with(".json") || std::path::Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec)
            .with_context(|| format!("reading lattice file `{spec}`"))?;
        let value: Value = serde_json::from_str(&text)?;
        let lattice = corejson::lattice_from_json(&value)?;
        log::debug!("loaded lattice `{}` from {spec}", lattice.name());
        Ok(lattice)
    } else {
        Lattice::by_name(spec).map_err(|e| anyhow!("unknown lattice `{spec}`: {e}"))
    }
}

fn parse_point(lattice: &Lattice, args: &PointArgs) -> Result<Vec<Rat>> {
    let parse_list = |s: &str| -> Result<Vec<Rat>> {
        s.split(',')
            .map(|c| parse_rat(c).map_err(|e| anyhow!("malformed point entry `{c}`: {e}")))
            .collect()
    };
    match (&args.point, &args.point_basis) {
        (Some(p), None) => {
            let coords = parse_list(p)?;
            if coords.len() != lattice.ambient_dim() {
                bail!(
                    "point has {} coordinates, lattice ambient dimension is {}",
                    coords.len(),
                    lattice.ambient_dim()
                );
            }
            Ok(coords)
        }
        (None, Some(p)) => {
            let coeffs = parse_list(p)?;
            if coeffs.len() != lattice.rank() {
                bail!(
                    "basis point has {} coefficients, lattice rank is {}",
                    coeffs.len(),
                    lattice.rank()
                );
            }
            let mut z = vec![Rat::from_integer(0.into()); lattice.ambient_dim()];
            for (c, b) in coeffs.iter().zip(lattice.basis()) {
                for (zc, bc) in z.iter_mut().zip(b) {
                    *zc += c * bc;
                }
            }
            Ok(z)
        }
        _ => bail!("provide a point via --point or --point-basis"),
    }
}

/// A float with 12 significant digits, plain decimal when reasonable.
fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        format!("{:.*}", decimals, x)
    } else {
        format!("{:.11e}", x)
    }
}

fn envelope(command: &str, input: Value) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("tool".into(), Value::from("coldspot"));
    m.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), Value::from(command));
    m.insert("input".into(), input);
    m
}

fn emit(cli: &Cli, content: &str) -> Result<()> {
    let mut content = content.to_string();
    if !content.ends_with('\n') {
        content.push('\n');
    }
    match &cli.out {
        Some(path) => {
            std::fs::write(path, content).with_context(|| format!("writing {path:?}"))?
        }
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Potential { lattice, point, alpha, eps } => {
            let l = load_lattice(lattice)?;
            let z = parse_point(&l, point)?;
            let p = potential(&l, *alpha, &z, *eps)?;
            let g = gradient(&l, *alpha, &z, *eps)?;
            let gnorm = g.iter().map(|c| c * c).sum::<f64>().sqrt();
            match cli.format {
                Format::Json => {
                    let mut m = envelope(
                        "potential",
                        json!({
                            "lattice": l.name(),
                            "point": z.iter().map(ratio::format_rat).collect::<Vec<_>>(),
                            "alpha": alpha,
                            "eps": eps,
                        }),
                    );
                    m.insert("value".into(), json!(p.value));
                    m.insert("tail_bound".into(), json!(p.tail_bound));
                    m.insert("truncation_radius_sq".into(), json!(p.truncation_radius_sq));
                    m.insert("gradient_norm".into(), json!(gnorm));
                    emit(cli, &serde_json::to_string_pretty(&Value::Object(m))?)?;
                }
                _ => {
                    emit(
                        cli,
                        &format!(
                            "p({}, alpha={}) = {}\ntail_bound = {}\ntruncation_radius_sq = {}\ngradient_norm = {}",
                            l.name(),
                            sig12(*alpha),
                            sig12(p.value),
                            sig12(p.tail_bound),
                            sig12(p.truncation_radius_sq),
                            sig12(gnorm),
                        ),
                    )?;
                }
            }
            Ok(0)
        }

        Command::Scan { lattice, alpha_grid, starts, seed, grad_tol } => {
            let l = load_lattice(lattice)?;
            let grid = parse_grid(alpha_grid)?;
            let mut csv = String::new();
            csv.push_str("alpha,value");
            for i in 0..l.ambient_dim() {
                csv.push_str(&format!(",point_{}", i + 1));
            }
            csv.push_str(",grad_norm\n");
            for &alpha in &grid {
                let config = SearchConfig {
                    starts: *starts,
                    grad_tol: *grad_tol,
                    seed: *seed,
                    ..Default::default()
                };
                let found = coldspot_search(&l, alpha, &config)?;
                let best = found
                    .first()
                    .ok_or_else(|| anyhow!("search produced no candidates"))?;
                csv.push_str(&sig12(alpha));
                csv.push(',');
                csv.push_str(&sig12(best.value));
                for c in &best.point {
                    csv.push(',');
                    csv.push_str(&sig12(*c));
                }
                csv.push(',');
                csv.push_str(&sig12(best.gradient_norm));
                csv.push('\n');
            }
            emit(cli, &csv)?;
            Ok(0)
        }

        Command::Shells { lattice, point, rsq } => {
            let l = load_lattice(lattice)?;
            let z = parse_point(&l, point)?;
            let r_sq = parse_rat(rsq)?;
            let shells = shell_decomposition(&l, &z, &r_sq)?;
            match cli.format {
                Format::Json => {
                    let mut m = envelope(
                        "shells",
                        json!({
                            "lattice": l.name(),
                            "point": z.iter().map(ratio::format_rat).collect::<Vec<_>>(),
                            "rsq": ratio::format_rat(&r_sq),
                        }),
                    );
                    m.insert(
                        "shells".into(),
                        Value::Array(shells.iter().map(corejson::shell_to_json).collect()),
                    );
                    emit(cli, &serde_json::to_string_pretty(&Value::Object(m))?)?;
                }
                _ => {
                    let mut text = format!("shells around ({})\n", fmt_point(&z));
                    for s in &shells {
                        text.push_str(&format!(
                            "r^2 = {:<12} count = {}\n",
                            ratio::format_rat(&s.radius_sq),
                            s.count()
                        ));
                    }
                    emit(cli, &text)?;
                }
            }
            Ok(0)
        }

        Command::Design { lattice, point, rsq, tmax, tol } => {
            let l = load_lattice(lattice)?;
            let z = parse_point(&l, point)?;
            let r_sq = parse_rat(rsq)?;
            let shells = shell_decomposition(&l, &z, &r_sq)?;
            let mut rows = Vec::new();
            for shell in &shells {
                if shell.radius_sq == Rat::from_integer(0.into()) {
                    continue;
                }
                let rep = design_strength(&l, shell, *tmax, *tol)?;
                rows.push(rep);
            }
            match cli.format {
                Format::Json => {
                    let mut m = envelope(
                        "design",
                        json!({
                            "lattice": l.name(),
                            "point": z.iter().map(ratio::format_rat).collect::<Vec<_>>(),
                            "rsq": ratio::format_rat(&r_sq),
                            "tmax": tmax,
                            "tol": tol,
                        }),
                    );
                    m.insert(
                        "shells".into(),
                        Value::Array(
                            rows.iter()
                                .map(|r| {
                                    json!({
                                        "radius_sq": ratio::format_rat(&r.radius_sq),
                                        "count": r.count,
                                        "strength": r.strength,
                                        "exact_one_design": r.exact_one_design,
                                        "exact_two_design": r.exact_two_design,
                                        "first_moment_norm": r.first_moment_norm,
                                        "second_moment_defect": r.second_moment_defect,
                                        "per_degree_defects": r.per_degree_defects,
                                    })
                                })
                                .collect(),
                        ),
                    );
                    emit(cli, &serde_json::to_string_pretty(&Value::Object(m))?)?;
                }
                _ => {
                    let mut text = String::new();
                    for r in &rows {
                        text.push_str(&format!(
                            "r^2 = {} count = {} strength = {}\n",
                            ratio::format_rat(&r.radius_sq),
                            r.count,
                            r.strength
                        ));
                        for (k, d) in r.per_degree_defects.iter().enumerate() {
                            text.push_str(&format!("  degree {:<2} defect {}\n", k + 1, sig12(*d)));
                        }
                    }
                    emit(cli, &text)?;
                }
            }
            Ok(0)
        }

        Command::Certify { lattice, alpha0, find_alpha0 } => {
            let l = load_lattice(lattice)?;
            let config = CertifyConfig::default();
            let cert = if *find_alpha0 {
                let found = search_alpha0(&l, &config)?;
                certify_stable_coldspot(&l, found, &config)?
            } else {
                let a0 = alpha0.ok_or_else(|| anyhow!("--alpha0 or --find-alpha0 required"))?;
                certify_stable_coldspot(&l, a0, &config)?
            };
            match cli.format {
                Format::Json => {
                    let mut m = envelope(
                        "certify",
                        json!({ "lattice": l.name(), "alpha0": cert.alpha0 }),
                    );
                    m.insert("certificate".into(), serde_json::to_value(&cert)?);
                    emit(cli, &serde_json::to_string_pretty(&Value::Object(m))?)?;
                }
                _ => {
                    let mut text = format!(
                        "certificate for {} at alpha0 = {}\n  verdict: {}\n  symmetric holes: {}\n  threshold alpha: {}\n  local radius R: {}\n  rho: {}\n  uncovered max norm: {}\n  far factor: {}\n  subdivision depth (halvings): {} ({} nodes)\n",
                        cert.lattice,
                        sig12(cert.alpha0),
                        cert.verdict,
                        cert.symmetric_holes,
                        sig12(cert.alpha_threshold),
                        sig12(cert.local_radius),
                        sig12(cert.rho),
                        sig12(cert.uncovered_max_norm),
                        sig12(cert.far_factor_value),
                        cert.subdivision_depth,
                        cert.subdivision_nodes,
                    );
                    for t in &cert.trace {
                        text.push_str(&format!(
                            "  [{}] {}: lhs = {} rhs = {}\n",
                            if t.passed { "ok" } else { "FAIL" },
                            t.check,
                            sig12(t.lhs),
                            sig12(t.rhs)
                        ));
                    }
                    emit(cli, &text)?;
                }
            }
            Ok(if cert.verdict { 0 } else { EXIT_CERT_FAILED })
        }

        Command::LeechOrder => {
            let mut profiles = leech_hole_profiles();
            sort_profiles_ascending(&mut profiles)?;
            let asymptotic = profiles[0].label.clone();
            match cli.format {
                Format::Json => {
                    let mut m = envelope("leech-order", json!({}));
                    m.insert(
                        "profiles".into(),
                        Value::Array(profiles.iter().map(profile_json).collect()),
                    );
                    m.insert("asymptotic_coldspot".into(), Value::from(asymptotic));
                    emit(cli, &serde_json::to_string_pretty(&Value::Object(m))?)?;
                }
                _ => {
                    let mut text = String::from(
                        "Leech deep holes, ascending asymptotic potential:\n",
                    );
                    for (i, p) in profiles.iter().enumerate() {
                        let (r1, a1) = (&p.entries[0].0, p.entries[0].1.unwrap_or(0));
                        let r2 = &p.entries[1].0;
                        text.push_str(&format!(
                            "{:>2}. {:<14} r1^2 = {:<3} a1 = {:<3} r2^2 = {:<6} strength = {}{}\n",
                            i + 1,
                            p.label,
                            ratio::format_rat(r1),
                            a1,
                            ratio::format_rat(r2),
                            p.first_shell_strength.unwrap_or(0),
                            if i == 0 { "   <- asymptotic cold spot" } else { "" }
                        ));
                    }
                    emit(cli, &text)?;
                }
            }
            Ok(0)
        }

        Command::Profile { lattice, point, depth } => {
            let l = load_lattice(lattice)?;
            let z = parse_point(&l, point)?;
            let profile = catalog::computed_profile(&l, &z, *depth)?;
            match cli.format {
                Format::Json => {
                    let mut m = envelope(
                        "profile",
                        json!({
                            "lattice": l.name(),
                            "point": z.iter().map(ratio::format_rat).collect::<Vec<_>>(),
                            "depth": depth,
                        }),
                    );
                    m.insert("profile".into(), profile_json(&profile));
                    emit(cli, &serde_json::to_string_pretty(&Value::Object(m))?)?;
                }
                _ => {
                    let mut text = format!("profile of ({})\n", fmt_point(&z));
                    for (r, a) in &profile.entries {
                        text.push_str(&format!(
                            "r^2 = {:<10} count = {}\n",
                            ratio::format_rat(r),
                            a.map(|v| v.to_string()).unwrap_or_else(|| "?".into())
                        ));
                    }
                    if let Some(s) = profile.first_shell_strength {
                        text.push_str(&format!("first shell strength = {s}\n"));
                    }
                    emit(cli, &text)?;
                }
            }
            Ok(0)
        }

        Command::ExportLattice { lattice } => {
            let l = load_lattice(lattice)?;
            emit(cli, &serde_json::to_string_pretty(&corejson::lattice_to_json(&l))?)?;
            Ok(0)
        }
    }
}

fn profile_json(p: &HoleProfile) -> Value {
    json!({
        "label": p.label,
        "entries": p.entries.iter().map(|(r, a)| {
            json!({ "radius_sq": ratio::format_rat(r), "count": a })
        }).collect::<Vec<_>>(),
        "first_shell_strength": p.first_shell_strength,
    })
}

fn fmt_point(z: &[Rat]) -> String {
    z.iter().map(ratio::format_rat).collect::<Vec<_>>().join(", ")
}

fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        bail!("alpha grid must be start:end:step, got `{spec}`");
    }
    let start: f64 = parts[0].parse().context("grid start")?;
    let end: f64 = parts[1].parse().context("grid end")?;
    let step: f64 = parts[2].parse().context("grid step")?;
    if step <= 0.0 {
        bail!("grid step must be positive");
    }
    let mut v = Vec::new();
    let mut a = start;
    while a <= end + 1e-12 {
        v.push(a);
        a += step;
    }
    Ok(v)
}

/// Convenience search for the smallest alpha0 that passes, by doubling
/// then bisection; relies on the empirically monotone verdict.
fn search_alpha0(lattice: &Lattice, config: &CertifyConfig) -> Result<f64> {
    let mu_sq = rat_to_f64(&lattice.covering_radius_sq()?);
    let lo_base = local_threshold_alpha(lattice.rank(), mu_sq, true)
        .min(local_threshold_alpha(lattice.rank(), mu_sq, false));
    let mut hi = (lo_base + 1.0).max(1.0);
    let mut tries = 0;
    while !certify_stable_coldspot(lattice, hi, config)?.verdict {
        hi *= 2.0;
        tries += 1;
        if tries > 24 {
            bail!("no passing alpha0 found up to {hi}");
        }
    }
    let mut lo = lo_base.max(hi / 2.0).min(hi - 1e-6);
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if certify_stable_coldspot(lattice, mid, config)?.verdict {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // Round outward so the reported value still passes.
    Ok((hi * 1000.0).ceil() / 1000.0)
}
