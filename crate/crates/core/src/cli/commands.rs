use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cli::{CliError, Config, Format, Method, VerifyReport};
use crate::genfunc::{catalog as all_entries, find, CatalogEntry, GenfuncError, Section};
use crate::index::{parse_index, Index};
use crate::numeric::{format_magnitude, Evaluator, PrecisionCtx};
use crate::relations::{Membership, RelationSystem, SpanChecker};

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub digits: u32,
    pub symbolic: bool,
    pub symbolic_cap: u32,
    pub weight_cap: u32,
    /// Where relation systems are cached; `None` always regenerates.
    pub cache_dir: Option<PathBuf>,
}

fn pool(cfg: &Config) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))
}

pub(crate) fn eval(cfg: &Config, text: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let index = parse_index(text)?;
    let ev = Evaluator::new(PrecisionCtx::new(cfg.digits)?)?;
    let r = match &index {
        Index::Euler(c) => ev.euler(c)?,
        Index::Mtv(t) => ev.mtv(t)?,
    };
    writeln!(out, "{}", r.value.to_decimal(cfg.digits as usize))?;
    writeln!(out, "error bound: {}", format_magnitude(r.error_bound))?;
    Ok(0)
}

fn unknown_name(name: &str) -> CliError {
    let names: Vec<&str> = all_entries().iter().map(|e| e.name).collect();
    CliError::Usage(format!(
        "unknown identity {name:?}; valid names: {}",
        names.join(", ")
    ))
}

fn section_filter(section: Option<&str>) -> Result<Option<Section>, CliError> {
    section
        .map(|s| {
            Section::parse(s).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown section {s:?}; use depth2, depth3a, depth3b or aux"
                ))
            })
        })
        .transpose()
}

fn load_system(opts: &VerifyOptions, w: u32) -> Result<RelationSystem, CliError> {
    Ok(match &opts.cache_dir {
        Some(dir) => RelationSystem::load_or_generate(dir, w, opts.weight_cap)?,
        None => RelationSystem::generate(w, opts.weight_cap)?,
    })
}

/// Checks one catalog entry at weight `w`; with a checker the span
/// certificate is required as well.
pub fn verify_entry(
    entry: &CatalogEntry,
    w: u32,
    ev: &Evaluator,
    checker: Option<&SpanChecker<'_>>,
) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    let id = entry.instantiate(w)?;
    let digits = ev.ctx().digits;
    let (residual, _) = ev.coefficient_residual(&id.difference())?;
    let threshold = 10f64.powi(-(digits as i32 - 5));
    let mut pass = residual <= threshold;
    let mut method = Method::Numeric;
    if let Some(ch) = checker {
        method = Method::Both;
        pass &= ch.check(&id)?.is_certified();
    }
    let value = |p: &crate::algebra::RegPoly| -> Result<String, CliError> {
        let r = ev.lincomb(&p.coeff(0))?;
        Ok(r.value.to_decimal(digits as usize))
    };
    Ok(VerifyReport {
        identity: entry.name.to_string(),
        weight: w,
        digits,
        lhs: value(&id.lhs)?,
        rhs: value(&id.rhs)?,
        residual: format_magnitude(residual.abs()),
        pass,
        method,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Which catalog entries `verify` runs, at which weights.
pub(crate) struct Selection<'a> {
    pub name: Option<&'a str>,
    pub section: Option<&'a str>,
    pub weights: Option<(u32, u32)>,
}

pub(crate) fn verify(
    cfg: &Config,
    sel: Selection<'_>,
    opts: &VerifyOptions,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let Selection {
        name,
        section,
        weights,
    } = sel;
    let section = section_filter(section)?;
    let mut jobs: Vec<(&'static CatalogEntry, u32)> = Vec::new();
    match name {
        Some(n) => {
            let e = find(n).map_err(|_| unknown_name(n))?;
            let (a, b) = weights.unwrap_or((e.min_weight, e.min_weight));
            for w in a..=b {
                if !e.valid_at(w) {
                    return Err(GenfuncError::Range {
                        what: e.name.to_string(),
                        weight: w,
                        min: e.min_weight,
                    }
                    .into());
                }
                jobs.push((e, w));
            }
        }
        None => {
            for e in all_entries() {
                if section.is_some_and(|s| s != e.section) {
                    continue;
                }
                let (a, b) = weights.unwrap_or((e.min_weight, e.min_weight));
                jobs.extend((a..=b).filter(|&w| e.valid_at(w)).map(|w| (e, w)));
            }
        }
    }

    let pool = pool(cfg)?;
    let ev = Evaluator::new(PrecisionCtx::new(opts.digits)?)?;
    let mut systems = BTreeMap::new();
    if opts.symbolic {
        let mut skipped = Vec::new();
        for &(_, w) in &jobs {
            if w > opts.symbolic_cap {
                skipped.push(w);
            } else if let std::collections::btree_map::Entry::Vacant(e) = systems.entry(w) {
                e.insert(load_system(opts, w)?);
            }
        }
        skipped.sort_unstable();
        skipped.dedup();
        for w in skipped {
            writeln!(
                err,
                "note: symbolic check not attempted at weight {w} (above the symbolic cap {})",
                opts.symbolic_cap
            )?;
        }
    }
    let checkers: BTreeMap<u32, SpanChecker<'_>> =
        pool.install(|| systems.par_iter().map(|(&w, s)| (w, s.checker())).collect());

    let reports = pool.install(|| {
        jobs.par_iter()
            .map(|&(e, w)| verify_entry(e, w, &ev, checkers.get(&w)))
            .collect::<Result<Vec<_>, _>>()
    })?;
    super::write_reports(out, &reports, format)?;
    Ok(if reports.iter().all(|r| r.pass) { 0 } else { 1 })
}

pub(crate) fn relations(
    cfg: &Config,
    w: u32,
    check: Option<&str>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let entry = check
        .map(|n| find(n).map_err(|_| unknown_name(n)))
        .transpose()?;
    let id = entry.map(|e| e.instantiate(w)).transpose()?;
    let opts = VerifyOptions {
        digits: cfg.digits,
        symbolic: true,
        symbolic_cap: cfg.symbolic_cap,
        weight_cap: cfg.weight_cap,
        cache_dir: Some(cfg.cache_dir.clone()),
    };
    let sys = load_system(&opts, w)?;
    let checker = sys.checker();
    writeln!(
        out,
        "weight {w}: {} symbols, {} rows, rank {}",
        sys.basis().len(),
        sys.rows().len(),
        checker.rank()
    )?;
    writeln!(
        out,
        "degree 0: {} symbols, rank {}",
        sys.basis().degree_count(0),
        sys.rank_at_degree(0)
    )?;
    let Some(id) = id else {
        return Ok(0);
    };
    match checker.check(&id)? {
        Membership::Certificate(cert) => {
            writeln!(
                out,
                "{}: certificate with {} rows",
                id.name,
                cert.multipliers.len()
            )?;
            for (i, m) in &cert.multipliers {
                writeln!(
                    out,
                    "  {}  {}",
                    crate::lincomb::fmt_rational(m),
                    sys.rows()[*i].provenance
                )?;
            }
            Ok(0)
        }
        Membership::Residual(r) => {
            writeln!(
                out,
                "{}: not in the span; reduced residual has {} terms",
                id.name,
                r.len()
            )?;
            for (s, q) in &r {
                writeln!(out, "  {}  {s}", crate::lincomb::fmt_rational(q))?;
            }
            Ok(1)
        }
    }
}

#[derive(Serialize)]
struct CatalogRow<'a> {
    name: &'a str,
    section: &'a str,
    provenance: &'a str,
    min_weight: u32,
    max_weight: Option<u32>,
    lhs: &'a str,
    rhs: &'a str,
}

pub(crate) fn catalog(
    section: Option<&str>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let section = section_filter(section)?;
    let rows: Vec<CatalogRow<'_>> = all_entries()
        .iter()
        .filter(|e| section.is_none_or(|s| s == e.section))
        .map(|e| CatalogRow {
            name: e.name,
            section: e.section.label(),
            provenance: e.provenance,
            min_weight: e.min_weight,
            max_weight: e.max_weight,
            lhs: e.lhs_text,
            rhs: e.rhs_text,
        })
        .collect();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)
                .map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &rows {
                w.serialize(r).map_err(|e| CliError::Io(e.to_string()))?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in &rows {
                let range = match r.max_weight {
                    Some(m) if m == r.min_weight => format!("w={m}"),
                    Some(m) => format!("w={}..{m}", r.min_weight),
                    None => format!("w>={}", r.min_weight),
                };
                writeln!(
                    out,
                    "{:<28} {:<8} {:<7} {}",
                    r.name, r.section, range, r.provenance
                )?;
                writeln!(out, "    {} = {}", r.lhs, r.rhs)?;
            }
            writeln!(out, "{} identities", rows.len())?;
        }
    }
    Ok(0)
}
