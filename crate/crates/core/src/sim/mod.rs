//! Slot-synchronous simulation of queued nodes contending for an access point.
//!
//! Each slot runs in a fixed order: Bernoulli arrivals, access decisions of
//! backlogged nodes, channel draws for the transmitters, reception at the AP,
//! head-of-line dequeue of every decoded node, optional deadline drops, and
//! the AoI update. A delivery in slot `n` of an update generated in slot `g`
//! has system delay `n − g + 1`, and the AP's age for that node becomes the
//! delay plus one at the end of the slot. Ages start at 0.
//!
//! The first 10% of slots of every run are a warm-up excluded from the
//! metrics. Conservation totals cover the whole run.

mod config;
mod engine;
mod metrics;

pub use config::{ChannelConfig, CsiConfig, Policy, ScenarioConfig, MIN_DISTANCE_M};
pub use engine::{
    ap_receive, node_placement, policy_decision, run_once, NodeState, Simulator, SlotOutcome,
};
pub use metrics::{MetricEstimate, MetricsReport, RunMetrics, Totals, METRICS};

use rayon::prelude::*;

use crate::error::Result;

/// Runs every replication of `config` in parallel on the current rayon pool.
///
/// Run `k` uses random streams derived from `(config.seed, k)` only, so the
/// report does not depend on the pool size.
pub fn run(config: &ScenarioConfig) -> Result<MetricsReport> {
    config.validate()?;
    let runs = (0..config.n_runs)
        .into_par_iter()
        .map(|k| run_once(config, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(MetricsReport::from_runs(config.clone(), runs))
}

/// One per-slot trace record.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    pub slot: u64,
    pub transmitters: usize,
    pub decoded: usize,
    pub aoi: Vec<u64>,
}

/// Per-slot trace of the first run of `config` over all `n_slots` slots.
pub fn trace(config: &ScenarioConfig) -> Result<Vec<TraceRecord>> {
    let mut sim = Simulator::new(config, 0)?;
    Ok((0..config.n_slots)
        .map(|_| {
            let o = sim.step();
            TraceRecord {
                slot: o.slot,
                transmitters: o.transmitters.len(),
                decoded: o.decoded.len(),
                aoi: sim.nodes().iter().map(|n| n.instantaneous_aoi).collect(),
            }
        })
        .collect())
}
