//! Exhaustive comparison of the structural prediction with direct
//! computation over all small poset pairs.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{verify_pair, Clause, PairReport};
use crate::error::{Error, Result};
use crate::poset::{generate_posets, Poset};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    /// Smallest poset size included.
    pub min_n: usize,
    /// Largest poset size included.
    pub max_n: usize,
    pub workers: usize,
    pub limits: Limits,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            min_n: 1,
            max_n: 4,
            workers: 1,
            limits: Limits::default(),
        }
    }
}

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if self.min_n == 0 || self.max_n < self.min_n {
            return Err(Error::Precondition(format!(
                "invalid size range {}..={}",
                self.min_n, self.max_n
            )));
        }
        if self.workers == 0 || self.limits.hom_cap == 0 || self.limits.cover_cap == 0 {
            return Err(Error::Precondition(
                "workers and caps must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// One row of the flat summary table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSummary {
    /// Position of `P` in the sweep's class list.
    pub p_index: usize,
    pub q_index: usize,
    pub p_size: usize,
    pub q_size: usize,
    pub predicted: bool,
    pub clause: Clause,
    pub computed: bool,
    pub agree: bool,
    pub witness_verified: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub min_n: usize,
    pub max_n: usize,
    pub classes: Vec<Poset>,
    pub pairs_checked: usize,
    pub agreements: usize,
    /// Pairs whose prediction disagrees with computation, or whose witness
    /// failed to re-verify.
    pub disagreements: Vec<PairReport>,
    pub clause_tallies: BTreeMap<Clause, usize>,
    pub pairs: Vec<PairSummary>,
    pub wall_time_secs: f64,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// All isomorphism classes with sizes in `min_n..=max_n`, smallest first.
pub fn sweep_classes(config: &SweepConfig) -> Result<Vec<Poset>> {
    config.validate()?;
    let mut classes = Vec::new();
    for n in config.min_n..=config.max_n {
        classes.extend(generate_posets(n, config.limits.generate_max_n)?);
    }
    Ok(classes)
}

/// Verifies every ordered pair of class representatives.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let start = Instant::now();
    let classes = sweep_classes(config)?;
    let pairs: Vec<(usize, usize)> = (0..classes.len())
        .flat_map(|i| (0..classes.len()).map(move |j| (i, j)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    let reports: Vec<PairReport> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(i, j)| verify_pair(&classes[i], &classes[j], &config.limits))
            .collect::<Result<Vec<_>>>()
    })?;

    let mut clause_tallies = BTreeMap::new();
    let mut summaries = Vec::with_capacity(reports.len());
    let mut disagreements = Vec::new();
    for (&(i, j), report) in pairs.iter().zip(reports) {
        *clause_tallies.entry(report.clause).or_insert(0) += 1;
        summaries.push(PairSummary {
            p_index: i,
            q_index: j,
            p_size: classes[i].len(),
            q_size: classes[j].len(),
            predicted: report.predicted,
            clause: report.clause,
            computed: report.computed,
            agree: report.agree,
            witness_verified: report.witness_verified,
        });
        if !report.is_consistent() {
            disagreements.push(report);
        }
    }

    Ok(SweepReport {
        min_n: config.min_n,
        max_n: config.max_n,
        pairs_checked: pairs.len(),
        agreements: pairs.len() - disagreements.len(),
        disagreements,
        clause_tallies,
        pairs: summaries,
        classes,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}
