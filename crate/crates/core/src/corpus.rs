//! Corpus definitions and the batch runner that produces a report catalog.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::carter::{carter_subgroups, is_carter, CarterWitness};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::harness::{
    check_carter_induced, check_gjh, check_main_theorem, check_sylow_theorems, Report, Verdict,
};
use crate::io::load_group;
use crate::recognize::{construct, GroupSpec};
use crate::series::{composition_series, rc_series};
use crate::structure::sylow_subgroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum CheckSpec {
    MainTheorem {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        hint_sylow: Option<u64>,
    },
    CarterInduced {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        hint_sylow: Option<u64>,
    },
    Gjh,
    Sylow {
        p: u64,
    },
}

impl CheckSpec {
    fn name(&self) -> String {
        match self {
            CheckSpec::MainTheorem { .. } => "main_theorem".into(),
            CheckSpec::CarterInduced { .. } => "carter_induced".into(),
            CheckSpec::Gjh => "gjh".into(),
            CheckSpec::Sylow { p } => format!("sylow_p{p}"),
        }
    }
}

/// One corpus unit: a group given by spec or by file, plus enabled checks.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    pub checks: Vec<CheckSpec>,
}

fn standard_checks() -> Vec<CheckSpec> {
    vec![
        CheckSpec::MainTheorem { hint_sylow: None },
        CheckSpec::CarterInduced { hint_sylow: None },
        CheckSpec::Gjh,
        CheckSpec::Sylow { p: 3 },
    ]
}

fn spec_entry(spec: GroupSpec, checks: Vec<CheckSpec>) -> CorpusEntry {
    CorpusEntry {
        name: spec.to_string(),
        spec: Some(spec),
        file: None,
        checks,
    }
}

/// The built-in corpus: symmetric and alternating groups up to degree 6,
/// dihedral groups of order up to 20, the Frobenius groups of order 21 and
/// 55, cyclic groups up to order 30, PSL(2,q) for small q, and
/// PSigmaL(2,27).
pub fn default_corpus() -> Vec<CorpusEntry> {
    let mut entries = Vec::new();
    for n in 2..=6 {
        entries.push(spec_entry(GroupSpec::Symmetric { n }, standard_checks()));
    }
    for n in 4..=6 {
        entries.push(spec_entry(GroupSpec::Alternating { n }, standard_checks()));
    }
    for m in 3..=10 {
        entries.push(spec_entry(GroupSpec::Dihedral { m }, standard_checks()));
    }
    let mut f21 = standard_checks();
    f21.push(CheckSpec::Sylow { p: 7 });
    entries.push(spec_entry(GroupSpec::Frobenius { p: 7, k: 3 }, f21));
    let mut f55 = standard_checks();
    f55.push(CheckSpec::Sylow { p: 5 });
    f55.push(CheckSpec::Sylow { p: 11 });
    entries.push(spec_entry(GroupSpec::Frobenius { p: 11, k: 5 }, f55));
    for m in 1..=30 {
        entries.push(spec_entry(GroupSpec::Cyclic { m }, standard_checks()));
    }
    for q in [5, 7, 9, 11, 13] {
        entries.push(spec_entry(GroupSpec::Psl2 { q }, standard_checks()));
    }
    entries.push(spec_entry(
        GroupSpec::PsigmaL2 { p: 3, f: 3 },
        vec![
            CheckSpec::MainTheorem { hint_sylow: Some(3) },
            CheckSpec::CarterInduced { hint_sylow: Some(3) },
            CheckSpec::Gjh,
            CheckSpec::Sylow { p: 3 },
        ],
    ));
    entries
}

pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn error_verdict(e: &Error) -> Verdict {
    match e {
        Error::DegreeCapExceeded { .. }
        | Error::OrderCapExceeded { .. }
        | Error::CosetCapExceeded { .. }
        | Error::ClassCapExceeded { .. } => Verdict::CapacityExceeded,
        _ => Verdict::Unresolved,
    }
}

fn error_report(group: &str, check: &str, e: &Error) -> Report {
    let mut evidence = serde_json::Map::new();
    evidence.insert("error".into(), json!(e.to_string()));
    Report {
        group: group.to_string(),
        check: check.to_string(),
        verdict: error_verdict(e),
        evidence,
    }
}

/// A validated Sylow-p Carter hint (the escape hatch for groups too large
/// for full nilpotent enumeration).
fn sylow_hint(g: &Group, p: u64, cfg: &Config) -> Result<CarterWitness> {
    let s = sylow_subgroup(g, p, cfg)?;
    if !is_carter(g, &s, cfg)? {
        return Err(Error::InvalidParameter(format!(
            "Sylow {p}-subgroup is not a Carter subgroup"
        )));
    }
    Ok(CarterWitness::new(g, s))
}

fn run_check(name: &str, g: &Group, check: &CheckSpec, cfg: &Config) -> Result<Report> {
    match check {
        CheckSpec::MainTheorem { hint_sylow } => {
            let hint = match hint_sylow {
                Some(p) => Some(sylow_hint(g, *p, cfg)?.k),
                None => None,
            };
            check_main_theorem(name, g, hint.as_ref(), cfg)
        }
        CheckSpec::CarterInduced { hint_sylow } => {
            let witness = match hint_sylow {
                Some(p) => Some(sylow_hint(g, *p, cfg)?),
                None => carter_subgroups(g, cfg)?.into_iter().next(),
            };
            check_carter_induced(name, g, witness.as_ref(), cfg)
        }
        CheckSpec::Gjh => {
            let rc = rc_series(g, cfg)?;
            let comp = composition_series(g, cfg.seed, cfg)?;
            Ok(check_gjh(name, g, &rc, &comp, cfg)?.1)
        }
        CheckSpec::Sylow { p } => check_sylow_theorems(name, g, *p, cfg),
    }
}

/// Runs every enabled check on every entry. Per-entry failures (unreadable
/// files, caps) become reports; they never abort the batch. Timings go to
/// stderr so the catalog stays byte-stable.
pub fn run_corpus(entries: &[CorpusEntry], cfg: &Config) -> Vec<Report> {
    let mut reports = Vec::new();
    for entry in entries {
        let started = std::time::Instant::now();
        let group = match materialize(entry, cfg) {
            Ok(g) => g,
            Err(e) => {
                reports.push(error_report(&entry.name, "load", &e));
                continue;
            }
        };
        for check in &entry.checks {
            let report = run_check(&entry.name, &group, check, cfg)
                .unwrap_or_else(|e| error_report(&entry.name, &check.name(), &e));
            reports.push(report);
        }
        eprintln!(
            "corpus: {} ({} checks) in {:?}",
            entry.name,
            entry.checks.len(),
            started.elapsed()
        );
    }
    reports.sort_by(|a, b| (&a.group, &a.check).cmp(&(&b.group, &b.check)));
    reports
}

fn materialize(entry: &CorpusEntry, cfg: &Config) -> Result<Group> {
    match (&entry.spec, &entry.file) {
        (Some(spec), None) => construct(spec, cfg),
        (None, Some(path)) => Ok(load_group(Path::new(path), cfg)?.1),
        _ => Err(Error::InvalidParameter(
            "corpus entry needs exactly one of spec or file".into(),
        )),
    }
}
