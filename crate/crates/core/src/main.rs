use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use carter_kit::carter::carter_subgroups;
use carter_kit::corpus::{default_corpus, load_corpus, run_corpus};
use carter_kit::harness::{any_fail, catalog_json, check_gjh, check_main_theorem, check_sylow_theorems};
use carter_kit::induced::induced_aut;
use carter_kit::io::{load_group, save_group, GroupFile};
use carter_kit::recognize::{construct, GroupSpec};
use carter_kit::series::{chief_series, composition_series, rc_series, Section, Series};
use carter_kit::structure::factorize;
use carter_kit::{Config, Error, Result};

#[derive(Parser)]
#[command(name = "carter-kit", version, about = "Finite-group structure toolkit")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Maximum group order for element enumeration
    #[arg(long, global = true)]
    cap_order: Option<u128>,
    /// Maximum permutation degree
    #[arg(long, global = true)]
    cap_degree: Option<usize>,
    /// Maximum coset-space size
    #[arg(long, global = true)]
    cap_cosets: Option<u128>,
    /// Seed for seeded series sampling
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Time budget for the bounded isomorphism search
    #[arg(long, global = true)]
    timeout_iso_search_ms: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// List Carter subgroup classes of a group
    Carter {
        groupfile: PathBuf,
    },
    /// Compute a chief, composition, or rc series
    Series {
        groupfile: PathBuf,
        #[arg(long, default_value = "rc")]
        kind: String,
    },
    /// Induced automorphism group of a section A/B under a subgroup H
    InducedAut {
        groupfile: PathBuf,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Acting subgroup (defaults to the whole group)
        #[arg(long)]
        h: Option<PathBuf>,
    },
    /// Run the verification checks against a single group
    Verify {
        groupfile: PathBuf,
        /// Sylow prime for the normalizer checks
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    /// Construct a named group and write it as a group file
    Construct {
        family: String,
        params: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a corpus of groups and checks, writing a report catalog
    Corpus {
        /// Corpus description file (defaults to the built-in corpus)
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Optional overrides loaded from the file named by CARTER_KIT_CONFIG; these
/// win over command-line flags.
#[derive(Default, Deserialize)]
#[serde(default)]
struct ConfigOverride {
    cap_degree: Option<usize>,
    cap_order: Option<u128>,
    cap_cosets: Option<u128>,
    cap_nilpotent: Option<u128>,
    cap_classes: Option<usize>,
    timeout_iso_search_ms: Option<u64>,
    seed: Option<u64>,
}

fn effective_config(caps: &CapArgs) -> Result<Config> {
    let mut cfg = Config::default();
    if let Some(v) = caps.cap_order {
        cfg.cap_order = v;
    }
    if let Some(v) = caps.cap_degree {
        cfg.cap_degree = v;
    }
    if let Some(v) = caps.cap_cosets {
        cfg.cap_cosets = v;
    }
    if let Some(v) = caps.seed {
        cfg.seed = v;
    }
    if let Some(v) = caps.timeout_iso_search_ms {
        cfg.timeout_iso_search_ms = v;
    }
    if let Ok(path) = std::env::var("CARTER_KIT_CONFIG") {
        let text = std::fs::read_to_string(&path)?;
        let over: ConfigOverride = serde_json::from_str(&text)?;
        if let Some(v) = over.cap_degree {
            cfg.cap_degree = v;
        }
        if let Some(v) = over.cap_order {
            cfg.cap_order = v;
        }
        if let Some(v) = over.cap_cosets {
            cfg.cap_cosets = v;
        }
        if let Some(v) = over.cap_nilpotent {
            cfg.cap_nilpotent = v;
        }
        if let Some(v) = over.cap_classes {
            cfg.cap_classes = v;
        }
        if let Some(v) = over.timeout_iso_search_ms {
            cfg.timeout_iso_search_ms = v;
        }
        if let Some(v) = over.seed {
            cfg.seed = v;
        }
    }
    Ok(cfg)
}

fn series_json(s: &Series) -> serde_json::Value {
    json!({
        "kind": s.kind.as_str(),
        "term_orders": s.term_orders().iter().map(|o| o.to_string()).collect::<Vec<_>>(),
        "factor_orders": s.factor_orders().iter().map(|o| o.to_string()).collect::<Vec<_>>(),
        "terms": s.terms.iter().map(|t| {
            t.generators().iter().map(|p| p.images().to_vec()).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    })
}

fn parse_spec(family: &str, params: &[u64]) -> Result<GroupSpec> {
    let need = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "{family} takes {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match family {
        "symmetric" => {
            need(1)?;
            Ok(GroupSpec::Symmetric { n: params[0] as usize })
        }
        "alternating" => {
            need(1)?;
            Ok(GroupSpec::Alternating { n: params[0] as usize })
        }
        "cyclic" => {
            need(1)?;
            Ok(GroupSpec::Cyclic { m: params[0] as usize })
        }
        "dihedral" => {
            need(1)?;
            Ok(GroupSpec::Dihedral { m: params[0] as usize })
        }
        "frobenius" => {
            need(2)?;
            Ok(GroupSpec::Frobenius { p: params[0], k: params[1] })
        }
        "psl2" => {
            need(1)?;
            Ok(GroupSpec::Psl2 { q: params[0] })
        }
        "psigma_l2" => {
            need(2)?;
            Ok(GroupSpec::PsigmaL2 { p: params[0], f: params[1] as u32 })
        }
        other => Err(Error::InvalidParameter(format!("unknown family: {other}"))),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = effective_config(&cli.caps)?;
    match cli.command {
        Command::Carter { groupfile } => {
            let (_, g) = load_group(&groupfile, &cfg)?;
            let witnesses = carter_subgroups(&g, &cfg)?;
            let out: Vec<_> = witnesses
                .iter()
                .map(|w| {
                    json!({
                        "order": w.k.order().to_string(),
                        "odd_order": w.odd_order,
                        "three_divides": w.three_divides,
                        "generators": w.k.generators().iter().map(|p| p.images().to_vec()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Series { groupfile, kind } => {
            let (_, g) = load_group(&groupfile, &cfg)?;
            let s = match kind.as_str() {
                "chief" => chief_series(&g, &cfg)?,
                "composition" => composition_series(&g, cfg.seed, &cfg)?,
                "rc" => rc_series(&g, &cfg)?,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown series kind: {other}"
                    )))
                }
            };
            println!("{}", serde_json::to_string_pretty(&series_json(&s))?);
            Ok(ExitCode::SUCCESS)
        }
        Command::InducedAut { groupfile, a, b, h } => {
            let (_, g) = load_group(&groupfile, &cfg)?;
            let (_, a) = load_group(&a, &cfg)?;
            let (_, b) = load_group(&b, &cfg)?;
            let h = match h {
                Some(path) => load_group(&path, &cfg)?.1,
                None => g.clone(),
            };
            let sec = Section::new(&g, a, b)?;
            let ind = induced_aut(&h, &sec, &cfg)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "normalizer_order": ind.normalizer_part.order().to_string(),
                    "kernel_order": ind.kernel.order().to_string(),
                    "image_order": ind.image.order().to_string(),
                    "image_degree": ind.image.degree(),
                }))?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { groupfile, p } => {
            let (name, g) = load_group(&groupfile, &cfg)?;
            let mut reports = Vec::new();
            reports.push(check_main_theorem(&name, &g, None, &cfg)?);
            let rc = rc_series(&g, &cfg)?;
            let comp = composition_series(&g, cfg.seed, &cfg)?;
            reports.push(check_gjh(&name, &g, &rc, &comp, &cfg)?.1);
            reports.push(check_sylow_theorems(&name, &g, p, &cfg)?);
            println!("{}", catalog_json(&reports)?);
            Ok(if any_fail(&reports) {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Construct { family, params, out } => {
            let spec = parse_spec(&family, &params)?;
            let g = construct(&spec, &cfg)?;
            let name = spec.to_string();
            match out {
                Some(path) => {
                    save_group(Path::new(&path), &name, &g)?;
                    eprintln!(
                        "wrote {} (degree {}, order {} = {:?})",
                        path.display(),
                        g.degree(),
                        g.order(),
                        factorize(g.order())
                    );
                }
                None => {
                    let gf = GroupFile::from_group(&name, &g);
                    println!("{}", serde_json::to_string_pretty(&gf)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { corpus, out } => {
            let entries = match corpus {
                Some(path) => load_corpus(&path)?,
                None => default_corpus(),
            };
            let reports = run_corpus(&entries, &cfg);
            let catalog = catalog_json(&reports)?;
            match out {
                Some(path) => std::fs::write(&path, &catalog)?,
                None => println!("{catalog}"),
            }
            Ok(if any_fail(&reports) {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("carter-kit: {e}");
            ExitCode::from(2)
        }
    }
}
