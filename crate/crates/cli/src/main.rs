//! `chowlab`: enumeration dumps and verification suites for Chow rings of
//! matroids, Stembridge codes, and the associated fans.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chowlab::bijections::{phi, phi_tilde};
use chowlab::chow::{aug_fy_basis, fy_basis_matroid, FYMonomial, GradedBasis};
use chowlab::codes::{enumerate_codes, enumerate_extended_codes};
use chowlab::fans::{aug_bergman_cones, aug_rays, bergman_cones, bergman_rays};
use chowlab::matroid::Matroid;
use chowlab::subset::Subset;
use chowlab::verify::{
    suite_bijection, suite_codes, suite_fans, suite_frobenius, suite_fy, suite_oracle, RunReport,
};

const DEFAULT_CODES_CAP: u32 = 8;
const DEFAULT_FLATS_CAP: usize = 16;

#[derive(Parser)]
#[command(name = "chowlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args)]
struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    /// Override the desk-scale guard rails.
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List codes of length n, graded by index.
    Codes {
        #[arg(long)]
        n: u32,
        /// Enumerate extended codes (letters may be "inf").
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Dump a monomial basis and its Hilbert series for a matroid.
    Fy {
        /// Matroid: a JSON file path, "boolean:N", "uniform:N,R".
        #[arg(long)]
        matroid: String,
        /// Use the augmented ring.
        #[arg(long)]
        augmented: bool,
        /// Restrict the dump to one degree.
        #[arg(long)]
        degree: Option<u32>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print the basis-to-code correspondence for the Boolean matroid.
    Bijection {
        #[arg(long)]
        n: u32,
        /// Use the augmented basis and extended codes.
        #[arg(long)]
        augmented: bool,
        /// Restrict to one degree.
        #[arg(long)]
        degree: Option<u32>,
        /// Translate a single monomial, written as space-separated factors
        /// "1.4 1.2.4.7 1.2.4.5.6.7.9^2" (elements dot-separated, optional
        /// ^exponent), instead of the full table.
        #[arg(long)]
        monomial: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Dump the (augmented) Bergman fan cones of a matroid.
    Fans {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        augmented: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run a verification suite and report pass/fail per check.
    Verify {
        /// One of: codes, fy, bijection, oracle, fans, frobenius, all.
        #[arg(long)]
        suite: String,
        /// Scale parameter for the code/bijection/frobenius suites.
        #[arg(long)]
        n: Option<u32>,
        /// Matroid for the fy/oracle/fans suites.
        #[arg(long)]
        matroid: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CHOWLAB_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t >= 1 => chowlab::par::configure_threads(t),
            _ => {
                eprintln!("chowlab: CHOWLAB_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("chowlab: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Codes { n, extended, common } => cmd_codes(n, extended, &common),
        Command::Fy {
            matroid,
            augmented,
            degree,
            common,
        } => cmd_fy(&matroid, augmented, degree, &common),
        Command::Bijection {
            n,
            augmented,
            degree,
            monomial,
            common,
        } => cmd_bijection(n, augmented, degree, monomial.as_deref(), &common),
        Command::Fans {
            matroid,
            augmented,
            common,
        } => cmd_fans(&matroid, augmented, &common),
        Command::Verify {
            suite,
            n,
            matroid,
            common,
        } => cmd_verify(&suite, n, matroid.as_deref(), &common),
    }
}

fn parse_matroid(spec: &str) -> Result<Matroid, String> {
    let from_json = |v: serde_json::Value| -> Result<Matroid, String> {
        if let Some(family) = v.get("family").and_then(|f| f.as_str()) {
            let n = v
                .get("n")
                .and_then(|n| n.as_u64())
                .ok_or("matroid JSON needs a numeric \"n\"")? as u32;
            return match family {
                "boolean" => Matroid::boolean(n).map_err(|e| e.to_string()),
                "uniform" => {
                    let r = v
                        .get("r")
                        .and_then(|r| r.as_u64())
                        .ok_or("uniform matroid needs a numeric \"r\"")?
                        as u32;
                    Matroid::uniform(n, r).map_err(|e| e.to_string())
                }
                other => Err(format!("unknown matroid family {other:?}")),
            };
        }
        let n = v
            .get("n")
            .and_then(|n| n.as_u64())
            .ok_or("matroid JSON needs a numeric \"n\"")? as u32;
        let bases_json = v
            .get("bases")
            .and_then(|b| b.as_array())
            .ok_or("matroid JSON needs \"bases\": [[...], ...]")?;
        let mut bases = Vec::new();
        for b in bases_json {
            let members: Vec<u32> = b
                .as_array()
                .ok_or("each basis must be an array of elements")?
                .iter()
                .map(|e| e.as_u64().map(|x| x as u32).ok_or("basis elements must be integers"))
                .collect::<Result<_, _>>()?;
            bases.push(Subset::from_members(n, &members).map_err(|e| e.to_string())?);
        }
        Matroid::from_bases(n, bases).map_err(|e| e.to_string())
    };

    if let Some((family, params)) = spec.split_once(':') {
        return match family {
            "boolean" => {
                let n: u32 = params.parse().map_err(|_| "boolean:N needs integer N")?;
                Matroid::boolean(n).map_err(|e| e.to_string())
            }
            "uniform" => {
                let (n, r) = params
                    .split_once(',')
                    .ok_or("uniform:N,R needs two integers")?;
                let n: u32 = n.trim().parse().map_err(|_| "uniform:N,R needs integer N")?;
                let r: u32 = r.trim().parse().map_err(|_| "uniform:N,R needs integer R")?;
                Matroid::uniform(n, r).map_err(|e| e.to_string())
            }
            other => Err(format!("unknown matroid family {other:?}")),
        };
    }
    let text = std::fs::read_to_string(spec).map_err(|e| format!("cannot read {spec}: {e}"))?;
    let v: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("{spec} is not valid JSON: {e}"))?;
    from_json(v)
}

fn check_codes_cap(n: u32, force: bool) -> Result<(), String> {
    if n < 1 {
        return Err("n must be at least 1".into());
    }
    if n > DEFAULT_CODES_CAP && !force {
        return Err(format!(
            "n = {n} exceeds the default cap {DEFAULT_CODES_CAP}; pass --force to override"
        ));
    }
    Ok(())
}

fn cmd_codes(n: u32, extended: bool, common: &CommonOpts) -> Result<ExitCode, String> {
    check_codes_cap(n, common.force)?;
    let mut out = String::new();
    if extended {
        let groups = enumerate_extended_codes(n);
        match common.format {
            Format::Tsv => {
                for (j, group) in groups.iter().enumerate() {
                    let index = j as i64 - 1;
                    for c in group {
                        let _ = writeln!(out, "{index}\t{c}");
                    }
                }
                let counts: Vec<String> = groups.iter().map(|g| g.len().to_string()).collect();
                let _ = writeln!(out, "# counts by index from -1: {}", counts.join(","));
            }
            Format::Json => {
                let v: Vec<serde_json::Value> = groups
                    .iter()
                    .enumerate()
                    .map(|(j, g)| {
                        serde_json::json!({
                            "index": j as i64 - 1,
                            "codes": g.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                out = serde_json::to_string_pretty(&v).unwrap();
                out.push('\n');
            }
        }
    } else {
        let groups = enumerate_codes(n);
        match common.format {
            Format::Tsv => {
                for (j, group) in groups.iter().enumerate() {
                    for c in group {
                        let _ = writeln!(out, "{j}\t{c}");
                    }
                }
                let counts: Vec<String> = groups.iter().map(|g| g.len().to_string()).collect();
                let _ = writeln!(out, "# counts by index: {}", counts.join(","));
            }
            Format::Json => {
                let v: Vec<serde_json::Value> = groups
                    .iter()
                    .enumerate()
                    .map(|(j, g)| {
                        serde_json::json!({
                            "index": j,
                            "codes": g.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                out = serde_json::to_string_pretty(&v).unwrap();
                out.push('\n');
            }
        }
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn dump_basis(
    basis: &GradedBasis,
    degree: Option<u32>,
    common: &CommonOpts,
) -> Result<ExitCode, String> {
    if let Some(d) = degree {
        if d as usize >= basis.by_degree.len() {
            return Err(format!(
                "degree {d} is empty; the top degree is {}",
                basis.by_degree.len() - 1
            ));
        }
    }
    let mut out = String::new();
    match common.format {
        Format::Tsv => {
            for (d, ms) in basis.by_degree.iter().enumerate() {
                if degree.is_some_and(|want| want as usize != d) {
                    continue;
                }
                for m in ms {
                    let _ = writeln!(out, "{d}\t{m}");
                }
            }
            let counts: Vec<String> = basis
                .hilbert_series()
                .iter()
                .map(|c| c.to_string())
                .collect();
            let _ = writeln!(out, "# hilbert series: {}", counts.join(","));
        }
        Format::Json => {
            let mut v = basis.to_json();
            if let Some(d) = degree {
                v = v.as_array().unwrap()[d as usize].clone();
            }
            out = serde_json::to_string_pretty(&v).unwrap();
            out.push('\n');
        }
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_fy(
    spec: &str,
    augmented: bool,
    degree: Option<u32>,
    common: &CommonOpts,
) -> Result<ExitCode, String> {
    let m = parse_matroid(spec)?;
    let basis = if augmented {
        aug_fy_basis(&m)
    } else {
        fy_basis_matroid(&m)
    };
    dump_basis(&basis, degree, common)
}

fn parse_monomial(n: u32, text: &str) -> Result<FYMonomial, String> {
    let mut chain = Vec::new();
    let mut exps = Vec::new();
    for factor in text.split_whitespace() {
        let (set_text, exp) = match factor.split_once('^') {
            Some((s, e)) => (
                s,
                e.parse::<u32>()
                    .map_err(|_| format!("bad exponent in {factor:?}"))?,
            ),
            None => (factor, 1),
        };
        let members: Vec<u32> = set_text
            .split('.')
            .map(|p| p.parse::<u32>().map_err(|_| format!("bad element in {factor:?}")))
            .collect::<Result<_, _>>()?;
        chain.push(Subset::from_members(n, &members).map_err(|e| e.to_string())?);
        exps.push(exp);
    }
    Ok(FYMonomial { chain, exps })
}

fn cmd_bijection(
    n: u32,
    augmented: bool,
    degree: Option<u32>,
    monomial: Option<&str>,
    common: &CommonOpts,
) -> Result<ExitCode, String> {
    check_codes_cap(n, common.force)?;
    let pairs: Vec<(FYMonomial, String, i64)> = if let Some(text) = monomial {
        let u = parse_monomial(n, text)?;
        if augmented {
            let c = phi_tilde(n, &u).map_err(|e| e.to_string())?;
            vec![(u, c.to_string(), c.index())]
        } else {
            let c = phi(n, &u).map_err(|e| e.to_string())?;
            vec![(u, c.to_string(), c.index())]
        }
    } else {
        let basis = if augmented {
            aug_fy_basis(&Matroid::boolean(n).map_err(|e| e.to_string())?)
        } else {
            fy_basis_matroid(&Matroid::boolean(n).map_err(|e| e.to_string())?)
        };
        let mut rows = Vec::new();
        for u in basis.iter() {
            if degree.is_some_and(|want| want != u.degree()) {
                continue;
            }
            if augmented {
                let c = phi_tilde(n, u).map_err(|e| e.to_string())?;
                rows.push((u.clone(), c.to_string(), c.index()));
            } else {
                let c = phi(n, u).map_err(|e| e.to_string())?;
                rows.push((u.clone(), c.to_string(), c.index()));
            }
        }
        rows
    };
    let mut out = String::new();
    match common.format {
        Format::Tsv => {
            for (u, code, index) in &pairs {
                let _ = writeln!(out, "{u}\t{code}\t{index}");
            }
        }
        Format::Json => {
            let v: Vec<serde_json::Value> = pairs
                .iter()
                .map(|(u, code, index)| {
                    serde_json::json!({
                        "monomial": {
                            "chain": u.chain.iter().map(|s| s.members()).collect::<Vec<_>>(),
                            "exps": u.exps,
                        },
                        "code": code,
                        "index": index,
                    })
                })
                .collect();
            out = serde_json::to_string_pretty(&v).unwrap();
            out.push('\n');
        }
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_fans(spec: &str, augmented: bool, common: &CommonOpts) -> Result<ExitCode, String> {
    let m = parse_matroid(spec)?;
    let flats = m.flats().flats.len();
    if flats > DEFAULT_FLATS_CAP && !common.force {
        return Err(format!(
            "matroid has {flats} flats, above the default cap {DEFAULT_FLATS_CAP}; pass --force"
        ));
    }
    let n = m.n();
    let mut out = String::new();
    if augmented {
        let cones = aug_bergman_cones(&m);
        match common.format {
            Format::Tsv => {
                for pair in &cones {
                    let flag: Vec<String> = pair.flag.iter().map(|f| f.to_string()).collect();
                    let rays: Vec<String> = aug_rays(pair, n)
                        .iter()
                        .map(|r| {
                            format!(
                                "[{}]",
                                r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                            )
                        })
                        .collect();
                    let _ = writeln!(
                        out,
                        "I={} ; flag=[{}] ; rays=[{}]",
                        pair.indep,
                        flag.join(","),
                        rays.join(",")
                    );
                }
                let _ = writeln!(out, "# cones: {}", cones.len());
            }
            Format::Json => {
                let v: Vec<serde_json::Value> = cones
                    .iter()
                    .map(|pair| {
                        serde_json::json!({
                            "indep": pair.indep.members(),
                            "flag": pair.flag.iter().map(|f| f.members()).collect::<Vec<_>>(),
                            "rays": aug_rays(pair, n),
                        })
                    })
                    .collect();
                out = serde_json::to_string_pretty(&v).unwrap();
                out.push('\n');
            }
        }
    } else {
        let cones = bergman_cones(&m);
        match common.format {
            Format::Tsv => {
                for flag in &cones {
                    let names: Vec<String> = flag.iter().map(|f| f.to_string()).collect();
                    let rays: Vec<String> = bergman_rays(flag, n)
                        .iter()
                        .map(|r| {
                            format!(
                                "[{}]",
                                r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                            )
                        })
                        .collect();
                    let _ = writeln!(
                        out,
                        "I={{}} ; flag=[{}] ; rays=[{}]",
                        names.join(","),
                        rays.join(",")
                    );
                }
                let _ = writeln!(out, "# cones: {}", cones.len());
            }
            Format::Json => {
                let v: Vec<serde_json::Value> = cones
                    .iter()
                    .map(|flag| {
                        serde_json::json!({
                            "flag": flag.iter().map(|f| f.members()).collect::<Vec<_>>(),
                            "rays": bergman_rays(flag, n),
                        })
                    })
                    .collect();
                out = serde_json::to_string_pretty(&v).unwrap();
                out.push('\n');
            }
        }
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: &str,
    n: Option<u32>,
    matroid: Option<&str>,
    common: &CommonOpts,
) -> Result<ExitCode, String> {
    let n = n.unwrap_or(4);
    check_codes_cap(n, common.force)?;
    let m = match matroid {
        Some(spec) => Some(parse_matroid(spec)?),
        None => None,
    };
    let need_matroid = || -> Result<Matroid, String> {
        match &m {
            Some(m) => {
                let flats = m.flats().flats.len();
                if flats > DEFAULT_FLATS_CAP && !common.force {
                    return Err(format!(
                        "matroid has {flats} flats, above the default cap {DEFAULT_FLATS_CAP}; pass --force"
                    ));
                }
                Ok(m.clone())
            }
            None => Matroid::boolean(n.min(4)).map_err(|e| e.to_string()),
        }
    };
    let report: RunReport = match suite {
        "codes" => suite_codes(n),
        "bijection" => suite_bijection(n),
        "oracle" => suite_oracle(&need_matroid()?),
        "fy" => suite_fy(&need_matroid()?),
        "fans" => suite_fans(&need_matroid()?),
        "frobenius" => suite_frobenius(n),
        "all" => {
            let m = need_matroid()?;
            let mut all = suite_codes(n)
                .merge(suite_bijection(n))
                .merge(suite_oracle(&m))
                .merge(suite_fy(&m))
                .merge(suite_fans(&m))
                .merge(suite_frobenius(n));
            for c in &mut all.checks[..] {
                if !c.name.contains('/') {
                    c.name = format!("codes/{}", c.name);
                }
            }
            all.suite = "all".into();
            all
        }
        other => return Err(format!("unknown suite {other:?}")),
    };
    match common.format {
        Format::Tsv => print!("{}", report.render()),
        Format::Json => {
            let v = serde_json::json!({
                "suite": report.suite,
                "passed": report.all_passed(),
                "checks": report
                    .checks
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "name": c.name,
                            "passed": c.passed,
                            "expected": c.expected,
                            "actual": c.actual,
                        })
                    })
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
