//! Batch analysis of graph6 corpora.
//!
//! Every connected graph in the input yields one flat [`ScanRecord`]. Bound
//! checks that fail are listed in the record's `violations` field and in the
//! summary; they never stop the scan. Lines that do not parse, or parse to a
//! disconnected graph, are logged, counted and skipped.

use std::io::Write;
use std::path::{Path, PathBuf};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::abp::{abp_sharp_constant, abp_universal_coefficient};
use crate::boundary::{boundary_set, isoperimetric_report};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, degree_extremes, Graph};
use crate::hardy::{hardy_certificate, hardy_check};
use crate::io::graph6::parse_graph6;
use crate::spectral::{faber_krahn_report, hotspots_ratio_check, hotspots_report, HotspotsOverall};
use crate::walks::{hitting_potential, RngSeed};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Seed for the random test functions of the Hardy sampling check.
    pub seed: u64,
    /// Random test functions per graph for the Hardy sampling check.
    pub hardy_samples: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: None,
            seed: 0,
            hardy_samples: 100,
        }
    }
}

/// One analyzed graph. Fields that do not apply (single vertex, empty interior,
/// inapplicable eigenvector check) are `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    pub graph_id: String,
    pub graph6: String,
    pub n: usize,
    pub edge_count: usize,
    pub diameter: u32,
    pub mindeg: usize,
    pub maxdeg: usize,
    pub boundary_size: usize,
    pub isoperimetric_lhs: u64,
    pub isoperimetric_rhs: Option<f64>,
    pub max_exit_time: Option<f64>,
    pub exit_time_bound: Option<f64>,
    pub lambda1: Option<f64>,
    pub faber_krahn_bound: Option<f64>,
    pub hardy_certificate: Option<f64>,
    pub hardy_sample_failures: Option<usize>,
    pub abp_sharp_constant: Option<f64>,
    pub abp_bound: Option<f64>,
    pub hotspots: Option<HotspotsOverall>,
    pub lambda2: Option<f64>,
    pub multiplicity: Option<usize>,
    pub hotspots_ratio: Option<f64>,
    pub hotspots_ratio_bound: Option<f64>,
    /// Names of failed checks, `;`-separated.
    pub violations: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph_id: String,
    pub check: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanSummary {
    pub records: usize,
    pub parse_errors: usize,
    pub disconnected: usize,
    pub violations: Vec<Violation>,
    pub hotspots_holds: usize,
    pub hotspots_violated: usize,
    pub hotspots_degenerate: usize,
    pub hotspots_violation_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

const EXIT_TIME_SLACK: f64 = 1e-9;
const HARDY_CERTIFICATE_SLACK: f64 = 1e-8;
const ABP_SLACK: f64 = 1e-6;

/// Run every check on one graph. `stream` selects the random substream.
pub fn analyze_graph(g: &Graph, graph_id: String, options: &ScanOptions, stream: u64) -> Result<ScanRecord> {
    let dist = all_pairs_distances(g);
    let boundary = boundary_set(g, &dist);
    let (mindeg, maxdeg) = degree_extremes(g);
    let diam = dist.diameter();
    let mut record = ScanRecord {
        graph_id,
        graph6: crate::io::graph6::to_graph6(g),
        n: g.n(),
        edge_count: g.edge_count(),
        diameter: diam,
        mindeg,
        maxdeg,
        boundary_size: boundary.len(),
        isoperimetric_lhs: boundary.len() as u64,
        isoperimetric_rhs: None,
        max_exit_time: None,
        exit_time_bound: None,
        lambda1: None,
        faber_krahn_bound: None,
        hardy_certificate: None,
        hardy_sample_failures: None,
        abp_sharp_constant: None,
        abp_bound: None,
        hotspots: None,
        lambda2: None,
        multiplicity: None,
        hotspots_ratio: None,
        hotspots_ratio_bound: None,
        violations: String::new(),
    };
    if g.n() == 1 {
        return Ok(record);
    }
    let mut violations: Vec<&str> = Vec::new();

    let iso = isoperimetric_report(g, &dist, &boundary)?;
    record.isoperimetric_rhs = Some(*iso.rhs.numer() as f64 / *iso.rhs.denom() as f64);
    if !iso.holds {
        violations.push("isoperimetric");
    }

    let members: Vec<usize> = boundary.members().collect();
    let potential = hitting_potential(g, &members)?;
    let exit_bound = maxdeg as f64 * f64::from(diam).powi(2);
    record.max_exit_time = Some(potential.max());
    record.exit_time_bound = Some(exit_bound);
    if potential.max() > exit_bound + EXIT_TIME_SLACK * exit_bound {
        violations.push("exit_time");
    }

    let fk = faber_krahn_report(g, &dist, &boundary)?;
    record.faber_krahn_bound = Some(fk.bound);
    record.lambda1 = fk.lambda1;
    if !fk.holds {
        violations.push("faber_krahn");
    }

    if !fk.interior_empty {
        let cert = hardy_certificate(g, &boundary, &potential)?;
        record.hardy_certificate = Some(cert);
        if cert < -HARDY_CERTIFICATE_SLACK {
            violations.push("hardy_certificate");
        }
        let mut rng = RngSeed::new(options.seed, stream).rng();
        let mut failures = 0;
        for _ in 0..options.hardy_samples {
            let f: Vec<f64> = (0..g.n())
                .map(|v| if boundary.contains(v) { 0.0 } else { rng.gen_range(-1.0..1.0) })
                .collect();
            if !hardy_check(g, &boundary, &potential, &f)?.holds {
                failures += 1;
            }
        }
        record.hardy_sample_failures = Some(failures);
        if failures > 0 {
            violations.push("hardy_sample");
        }

        let sharp = abp_sharp_constant(g, &members)?;
        let bound = abp_universal_coefficient(g, &dist);
        record.abp_sharp_constant = Some(sharp);
        record.abp_bound = Some(bound);
        if sharp > bound + ABP_SLACK {
            violations.push("abp");
        }
    }

    let hs = hotspots_report(g, &boundary)?;
    record.hotspots = Some(hs.overall);
    record.lambda2 = Some(hs.lambda2);
    record.multiplicity = Some(hs.multiplicity);

    let ratio = hotspots_ratio_check(g, &dist, &boundary)?;
    record.hotspots_ratio = ratio.ratio;
    record.hotspots_ratio_bound = ratio.bound;
    if ratio.applicable && !ratio.holds {
        violations.push("hotspots_ratio");
    }

    record.violations = violations.join(";");
    Ok(record)
}

/// Input line with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusLine {
    pub source: String,
    pub line: usize,
    pub text: String,
}

/// Expand files and directories (non-recursively, sorted by name) into graph6 lines.
pub fn read_corpus(paths: &[PathBuf]) -> Result<Vec<CorpusLine>> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut entries: Vec<PathBuf> = std::fs::read_dir(p)?
                .map(|e| e.map(|e| e.path()))
                .collect::<std::io::Result<_>>()?;
            entries.retain(|e| e.is_file());
            entries.sort();
            files.extend(entries);
        } else {
            files.push(p.clone());
        }
    }
    let mut lines = Vec::new();
    for f in files {
        let text = std::fs::read_to_string(&f)?;
        lines.extend(corpus_lines(&f.display().to_string(), &text));
    }
    Ok(lines)
}

/// Split graph6 text into lines, dropping blank ones.
pub fn corpus_lines(source: &str, text: &str) -> Vec<CorpusLine> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| CorpusLine {
            source: source.to_string(),
            line: i + 1,
            text: l.trim().to_string(),
        })
        .collect()
}

enum Outcome {
    Record(Box<ScanRecord>),
    ParseError,
    Disconnected,
}

/// Analyze every line; the output order is the input order for any worker count.
pub fn scan_corpus(lines: &[CorpusLine], options: &ScanOptions) -> Result<ScanReport> {
    let run = || -> Result<Vec<Outcome>> {
        lines
            .par_iter()
            .enumerate()
            .map(|(i, l)| {
                let id = format!("{}:{}", l.source, l.line);
                match parse_graph6(&l.text) {
                    Ok(g) => analyze_graph(&g, id, options, i as u64).map(|r| Outcome::Record(Box::new(r))),
                    Err(Error::DisconnectedAfterParse) => {
                        log::warn!("{id}: disconnected graph skipped");
                        Ok(Outcome::Disconnected)
                    }
                    Err(e) => {
                        log::warn!("{id}: {e}");
                        Ok(Outcome::ParseError)
                    }
                }
            })
            .collect()
    };
    let outcomes = match options.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(run)?,
        None => run()?,
    };

    let mut records = Vec::new();
    let (mut parse_errors, mut disconnected) = (0, 0);
    for o in outcomes {
        match o {
            Outcome::Record(r) => records.push(*r),
            Outcome::ParseError => parse_errors += 1,
            Outcome::Disconnected => disconnected += 1,
        }
    }
    let summary = summarize(&records, parse_errors, disconnected);
    Ok(ScanReport { records, summary })
}

fn summarize(records: &[ScanRecord], parse_errors: usize, disconnected: usize) -> ScanSummary {
    let violations = records
        .iter()
        .flat_map(|r| {
            r.violations
                .split(';')
                .filter(|c| !c.is_empty())
                .map(|c| Violation {
                    graph_id: r.graph_id.clone(),
                    check: c.to_string(),
                })
        })
        .collect();
    let count = |want: HotspotsOverall| records.iter().filter(|r| r.hotspots == Some(want)).count();
    let (holds, violated, degenerate) = (
        count(HotspotsOverall::Holds),
        count(HotspotsOverall::Violated),
        count(HotspotsOverall::Degenerate),
    );
    let judged = holds + violated + degenerate;
    ScanSummary {
        records: records.len(),
        parse_errors,
        disconnected,
        violations,
        hotspots_holds: holds,
        hotspots_violated: violated,
        hotspots_degenerate: degenerate,
        hotspots_violation_rate: if judged == 0 { 0.0 } else { violated as f64 / judged as f64 },
    }
}

pub fn write_json<W: Write>(report: &ScanReport, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, report).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

/// Records only, one CSV row each; absent values are empty cells.
pub fn write_csv<W: Write>(records: &[ScanRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Convenience wrapper: read, scan, and return the report.
pub fn scan_paths(paths: &[impl AsRef<Path>], options: &ScanOptions) -> Result<ScanReport> {
    let paths: Vec<PathBuf> = paths.iter().map(|p| p.as_ref().to_path_buf()).collect();
    scan_corpus(&read_corpus(&paths)?, options)
}
