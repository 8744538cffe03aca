use std::fs;

use pareto_core::analysis::{
    perturbation_search, reproduce_example, verify_theorem, SearchMode, TheoremVerdict,
};
use pareto_core::axioms::{axiom_matrix, check_axiom};
use pareto_core::rules::example_default_size;
use pareto_core::{
    Axiom, Correspondence, DomainIndex, Error, Result, SizeLimits, TableFile, Universe,
    MAX_ALTERNATIVES,
};
use serde::Serialize;

use crate::render;
use crate::{Format, RuleArgs, SizeArgs};

pub struct Settings {
    pub format: Format,
    pub max_domain: u64,
}

/// What a successful run found; errors are reported separately.
pub enum Status {
    Clean,
    Found,
}

impl Status {
    fn from_clean(clean: bool) -> Self {
        if clean {
            Status::Clean
        } else {
            Status::Found
        }
    }
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("records serialize")
    );
}

fn domain(settings: &Settings, m: usize, n: usize) -> Result<DomainIndex> {
    let limits = SizeLimits {
        max_alternatives: MAX_ALTERNATIVES,
        max_individuals: usize::MAX,
    };
    let d = DomainIndex::with_limits(m, n, limits)?;
    if d.total() > settings.max_domain {
        return Err(Error::Config(format!(
            "(m = {m}, n = {n}) has {} profiles, above --max-domain {}",
            d.total(),
            settings.max_domain
        )));
    }
    Ok(d)
}

fn example_id(name: &str) -> Option<u8> {
    let rest = name.trim().strip_prefix("example:")?;
    rest.split(':').next()?.parse().ok()
}

/// `--m`/`--n` if given, else the example's own size, else `fallback`.
fn sizes(rule: Option<&str>, size: &SizeArgs, fallback: (usize, usize)) -> (usize, usize) {
    let base = rule
        .and_then(example_id)
        .and_then(example_default_size)
        .unwrap_or(fallback);
    (size.m.unwrap_or(base.0), size.n.unwrap_or(base.1))
}

fn relabel(g: Correspondence, labels: Option<&str>) -> Result<Correspondence> {
    if g.has_fixed_labels() {
        if labels.is_some() {
            return Err(Error::Config(format!("'{}' has fixed labels", g.name())));
        }
        return Ok(g);
    }
    let m = g.alternatives();
    let universe = match labels {
        Some(l) => Universe::with_labels(l)?,
        None => Universe::xyzwt(m)?,
    };
    g.with_universe(universe)
}

fn load_table(path: &std::path::Path) -> Result<Correspondence> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    TableFile::from_json(&text)?.build()
}

fn resolve(
    rule: &RuleArgs,
    size: &SizeArgs,
    fallback_rule: Option<&str>,
) -> Result<Correspondence> {
    if let Some(path) = &rule.table {
        let g = load_table(path)?;
        for (given, actual, what) in [
            (size.m, g.alternatives(), "m"),
            (size.n, g.individuals(), "n"),
        ] {
            if given.is_some_and(|v| v != actual) {
                return Err(Error::Config(format!("table has {what} = {actual}")));
            }
        }
        return Ok(g);
    }
    let name = rule
        .rule
        .as_deref()
        .or(fallback_rule)
        .ok_or_else(|| Error::Config("give --rule or --table".into()))?;
    let (m, n) = sizes(Some(name), size, (3, 3));
    relabel(
        Correspondence::from_name(name, m, n)?,
        rule.labels.as_deref(),
    )
}

#[derive(Serialize)]
struct EvalRecord {
    rule: String,
    profile: String,
    choice: Vec<String>,
}

pub fn eval(settings: &Settings, rule: &RuleArgs, profile: &str) -> Result<Status> {
    let g = match (&rule.table, &rule.rule) {
        (Some(path), _) => load_table(path)?,
        (None, Some(name)) => {
            let n = profile.split('|').count();
            let seen: Vec<char> = profile
                .chars()
                .filter(|c| !c.is_whitespace() && *c != '|')
                .collect();
            let inferred = match &rule.labels {
                Some(l) => Universe::with_labels(l)?,
                None => Universe::infer(seen.iter().copied())?,
            };
            let g = Correspondence::from_name(name, inferred.size(), n)?;
            if g.has_fixed_labels() {
                g
            } else {
                g.with_universe(inferred)?
            }
        }
        (None, None) => return Err(Error::Config("give --rule or --table".into())),
    };
    let u = g.parse_profile(profile)?;
    let choice = g.evaluate(&u)?;
    let labels = g.universe().set_labels(choice);
    match settings.format {
        Format::Table => println!("{}", labels.join(" ")),
        Format::Json => print_json(&EvalRecord {
            rule: g.name().to_string(),
            profile: g.format_profile(&u),
            choice: labels,
        }),
    }
    Ok(Status::Clean)
}

#[derive(Serialize)]
struct CheckRecord {
    rule: String,
    m: usize,
    n: usize,
    reports: Vec<pareto_core::axioms::ReportRecord>,
}

pub fn check(
    settings: &Settings,
    rule: &RuleArgs,
    size: &SizeArgs,
    axioms: &str,
) -> Result<Status> {
    let axioms = Axiom::parse_list(axioms)?;
    let g = resolve(rule, size, None)?;
    let d = domain(settings, g.alternatives(), g.individuals())?;
    let reports = axioms
        .iter()
        .map(|&a| check_axiom(a, &g, &d))
        .collect::<Result<Vec<_>>>()?;
    let clean = reports.iter().all(|r| r.passed());
    match settings.format {
        Format::Table => print!("{}", render::check(&g, &d, &reports)),
        Format::Json => print_json(&CheckRecord {
            rule: g.name().to_string(),
            m: d.alternatives(),
            n: d.individuals(),
            reports: reports.iter().map(|r| r.record(&g)).collect(),
        }),
    }
    Ok(Status::from_clean(clean))
}

pub fn matrix(
    settings: &Settings,
    rules: &str,
    labels: Option<&str>,
    size: &SizeArgs,
    axioms: &str,
) -> Result<Status> {
    let axioms = Axiom::parse_list(axioms)?;
    let names: Vec<&str> = rules
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if names.is_empty() {
        return Err(Error::Config("empty rule list".into()));
    }
    let (m, n) = sizes(None, size, (3, 3));
    let d = domain(settings, m, n)?;
    let rules = names
        .iter()
        .map(|name| relabel(Correspondence::from_name(name, m, n)?, labels))
        .collect::<Result<Vec<_>>>()?;
    let matrix = axiom_matrix(&rules, &axioms, &d)?;
    match settings.format {
        Format::Table => print!("{}", render::matrix(&matrix, &d)),
        Format::Json => print_json(&matrix.record(&d)),
    }
    Ok(Status::from_clean(matrix.all_pass()))
}

pub fn example(settings: &Settings, k: u8) -> Result<Status> {
    let report = reproduce_example(k)?;
    match settings.format {
        Format::Table => print!("{}", render::example(&report)),
        Format::Json => print_json(&report),
    }
    Ok(Status::from_clean(report.passed()))
}

pub fn theorem(settings: &Settings, k: u8, rule: &RuleArgs, size: &SizeArgs) -> Result<Status> {
    pareto_core::analysis::theorem_axioms(k)?;
    // Plain rules default to the theorem's own number of alternatives.
    let plain = rule.table.is_none() && rule.rule.as_deref().and_then(example_id).is_none();
    let size = SizeArgs {
        m: size.m.or(plain.then_some(k as usize + 1)),
        n: size.n,
    };
    let g = resolve(rule, &size, Some("pareto"))?;
    let d = domain(settings, g.alternatives(), g.individuals())?;
    let report = verify_theorem(k, &g, &d)?;
    match settings.format {
        Format::Table => print!("{}", render::theorem(&report, &g)),
        Format::Json => print_json(&report.record(&g)),
    }
    Ok(Status::from_clean(
        report.verdict == TheoremVerdict::ConsistentEqual,
    ))
}

pub fn search(
    settings: &Settings,
    size: &SizeArgs,
    axioms: &str,
    mode: SearchMode,
    budget: u64,
    labels: Option<&str>,
) -> Result<Status> {
    let axioms = Axiom::parse_list(axioms)?;
    let (m, n) = sizes(None, size, (4, 3));
    let d = domain(settings, m, n)?;
    let universe = match labels {
        Some(l) => Universe::with_labels(l)?,
        None => Universe::xyzwt(m)?,
    };
    let result = perturbation_search(&d, &universe, &axioms, mode, budget)?;
    let record = result.record(&d, &universe, &axioms, mode, budget);
    match settings.format {
        Format::Table => print!("{}", render::search(&record)),
        Format::Json => print_json(&record),
    }
    Ok(Status::Clean)
}
