//! Run instrumentation: per-vector cover numbers, r-class coverage, jump
//! event counters, and per-generation trajectory records.
//!
//! Everything here observes the engine; nothing feeds back into it. All
//! quantities are computed on the post-selection population of each
//! generation.

use std::collections::{BTreeSet, HashMap};

use crate::nsga3::Individual;
use crate::ojzj::{ObjectiveVector, OjzjInstance, RVector};

/// One per-generation observation.
#[derive(Debug, Clone)]
pub struct GenerationRecord {
    pub t: u64,
    /// Number of target-front vectors with cover number >= 1.
    pub covered_front_count: u32,
    /// Minimum cover number over the covered front vectors (0 if none).
    pub min_cover: u32,
    /// Minimum over the whole front of `min(cover, alpha_cap)`.
    pub capped_min_cover: u32,
    /// r-classes currently represented by Pareto-optimal individuals.
    pub r_classes: BTreeSet<RVector>,
    /// Cumulative offspring that reached an all-ones/all-zeros block from a
    /// parent block that was neither.
    pub jump_events: u64,
    /// Subset of `jump_events` where the parent block sat exactly at the
    /// far edge of the fitness valley (k bits from the reached boundary).
    pub k_jump_events: u64,
}

/// Recorded history of one run. `alpha_cap` is the largest cover number the
/// preservation invariant is checked at: `floor(mu / (2 (1 + 2n/m)^{m/2}))`.
#[derive(Debug, Clone)]
pub struct Trajectory {
    alpha_cap: u32,
    records: Vec<GenerationRecord>,
}

impl Trajectory {
    pub fn new(alpha_cap: u32) -> Self {
        Trajectory { alpha_cap, records: Vec::new() }
    }

    pub fn alpha_cap(&self) -> u32 {
        self.alpha_cap
    }

    /// Appends one record. Panics unless the generation index strictly
    /// increases.
    pub fn record_generation(&mut self, record: GenerationRecord) {
        if let Some(last) = self.records.last() {
            assert!(
                record.t > last.t,
                "trajectory indices must strictly increase (got {} after {})",
                record.t,
                last.t
            );
        }
        self.records.push(record);
    }

    pub fn records(&self) -> &[GenerationRecord] {
        &self.records
    }
}

/// Cover number of every target-front vector: how many individuals have
/// exactly that objective vector. Vectors absent from the population map
/// to 0.
pub fn cover_numbers(
    population: &[Individual],
    target_front: &[ObjectiveVector],
) -> HashMap<ObjectiveVector, u32> {
    let mut counts: HashMap<&ObjectiveVector, u32> = HashMap::new();
    for ind in population {
        *counts.entry(&ind.objectives).or_insert(0) += 1;
    }
    target_front
        .iter()
        .map(|v| (v.clone(), counts.get(v).copied().unwrap_or(0)))
        .collect()
}

/// Set of r-classes represented by the Pareto-optimal individuals of the
/// population (the paper's class coverage set).
pub fn r_class_coverage(population: &[Individual], instance: &OjzjInstance) -> BTreeSet<RVector> {
    population
        .iter()
        .filter_map(|ind| instance.genome_class(&ind.genome))
        .collect()
}

/// Largest cover number with a preservation guarantee in the theorem
/// regime: `floor(mu / (2 (1 + 2n/m)^{m/2}))`, using the conservative
/// antichain bound `(1 + 2n/m)^{m/2}`.
pub fn lemma1_cap(mu: usize, instance: &OjzjInstance) -> u32 {
    let bound = (instance.block_len() as u128 + 1)
        .checked_pow(instance.blocks() as u32)
        .unwrap_or(u128::MAX);
    let cap = (mu as u128) / (2 * bound);
    cap.min(u32::MAX as u128) as u32
}
