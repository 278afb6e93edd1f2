use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{CsiConfig, Policy, ScenarioConfig};
use super::metrics::{Accumulator, RunMetrics};
use crate::channel::{sample_csi_pair, sample_power, NodeProfile};
use crate::error::Result;
use crate::sic::{decode_slot, CsiMode, ReceptionEntry, SlotReception};

const STREAMS_PER_NODE: u64 = 3;

/// Deterministic per-run, per-purpose random stream.
fn stream(seed: u64, run_index: usize, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((run_index as u64) << 32) | id);
    rng
}

/// Link statistics of every node. Placement depends on the seed only, so all
/// runs of a scenario share one geometry.
pub fn node_placement(config: &ScenarioConfig) -> Result<Vec<NodeProfile>> {
    config.node_profiles(&mut stream(config.seed, 0, u32::MAX as u64))
}

/// Dynamic state of one node.
#[derive(Debug, Clone)]
pub struct NodeState {
    pub profile: NodeProfile,
    /// Generation slots of the queued updates, oldest first.
    pub queue: VecDeque<u64>,
    /// AoI at the AP at the end of the last simulated slot.
    pub instantaneous_aoi: u64,
    arrivals: ChaCha8Rng,
    access: ChaCha8Rng,
    fading: ChaCha8Rng,
}

impl NodeState {
    pub fn backlogged(&self) -> bool {
        !self.queue.is_empty()
    }
}

/// Whether a backlogged node contends in this slot.
pub fn policy_decision<R: Rng + ?Sized>(
    policy: Policy,
    tx_prob: f64,
    instantaneous_aoi: u64,
    rng: &mut R,
) -> bool {
    match policy {
        Policy::SicRa | Policy::Standard => rng.random_bool(tx_prob),
        Policy::Adra { age_threshold } => {
            instantaneous_aoi > age_threshold && rng.random_bool(tx_prob)
        }
    }
}

/// Node ids decoded by the AP from one slot's reception.
///
/// Without SIC a slot succeeds only if a single node transmitted and its SNR
/// clears the threshold.
pub fn ap_receive(
    reception: &SlotReception,
    policy: Policy,
    noise_power: f64,
    gamma: f64,
    csi_mode: CsiMode,
) -> Vec<usize> {
    match policy {
        Policy::SicRa => decode_slot(reception, noise_power, gamma, csi_mode)
            .decoded()
            .to_vec(),
        Policy::Standard | Policy::Adra { .. } => match reception.entries.as_slice() {
            [only] if only.true_power >= gamma * noise_power => vec![only.node_id],
            _ => Vec::new(),
        },
    }
}

/// What happened in one slot.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SlotOutcome {
    pub slot: u64,
    pub arrivals: usize,
    pub transmitters: Vec<usize>,
    /// Decoded node ids in decoding order.
    pub decoded: Vec<usize>,
    /// System delay of each decoded update, aligned with `decoded`.
    pub delays: Vec<u64>,
    pub dropped: usize,
}

/// One simulation run.
pub struct Simulator {
    config: ScenarioConfig,
    nodes: Vec<NodeState>,
    slot: u64,
    noise_power: f64,
    gamma: f64,
    reception: SlotReception,
    acc: Accumulator,
}

impl Simulator {
    pub fn new(config: &ScenarioConfig, run_index: usize) -> Result<Self> {
        config.validate()?;
        let profiles = node_placement(config)?;
        let nodes = profiles
            .into_iter()
            .enumerate()
            .map(|(i, profile)| {
                let base = i as u64 * STREAMS_PER_NODE;
                NodeState {
                    profile,
                    queue: VecDeque::new(),
                    instantaneous_aoi: 0,
                    arrivals: stream(config.seed, run_index, base),
                    access: stream(config.seed, run_index, base + 1),
                    fading: stream(config.seed, run_index, base + 2),
                }
            })
            .collect();
        Ok(Self {
            config: config.clone(),
            nodes,
            slot: 0,
            noise_power: config.channel.noise_power(),
            gamma: config.gamma(),
            reception: SlotReception::default(),
            acc: Accumulator::new(config.n_nodes, config.warmup_slots()),
        })
    }

    pub fn nodes(&self) -> &[NodeState] {
        &self.nodes
    }

    pub fn slot(&self) -> u64 {
        self.slot
    }

    /// Advances the network by one slot.
    pub fn step(&mut self) -> SlotOutcome {
        let now = self.slot;
        let cfg = &self.config;
        let mut outcome = SlotOutcome { slot: now, ..Default::default() };

        // Arrivals, then the queue as seen by this slot's contention.
        for node in &mut self.nodes {
            if node.arrivals.random_bool(cfg.arrival_prob) {
                node.queue.push_back(now);
                outcome.arrivals += 1;
            }
        }
        self.acc.record_arrivals(now, outcome.arrivals);
        self.acc.record_queues(now, self.nodes.iter().map(|n| n.queue.len()));

        // Contention and channel draws.
        self.reception.clear();
        for (id, node) in self.nodes.iter_mut().enumerate() {
            if !node.backlogged() {
                continue;
            }
            self.acc.record_opportunity(now, id);
            if !policy_decision(cfg.policy, cfg.tx_prob, node.instantaneous_aoi, &mut node.access) {
                continue;
            }
            outcome.transmitters.push(id);
            let p = &node.profile;
            let entry = match cfg.csi {
                CsiConfig::Perfect => ReceptionEntry::perfect(id, sample_power(p.lambda, &mut node.fading)),
                CsiConfig::Imperfect { sigma_eps_sq } => {
                    let d = sample_csi_pair(p.lambda, sigma_eps_sq, p.mean_rx_power, &mut node.fading)
                        .expect("variance validated");
                    ReceptionEntry {
                        node_id: id,
                        true_power: d.true_power,
                        estimated_power: d.estimated_power,
                        residual_power: d.residual_power,
                    }
                }
            };
            self.reception.entries.push(entry);
        }

        let csi_mode = match cfg.csi {
            CsiConfig::Perfect => CsiMode::Perfect,
            CsiConfig::Imperfect { .. } => CsiMode::Imperfect,
        };
        outcome.decoded = ap_receive(&self.reception, cfg.policy, self.noise_power, self.gamma, csi_mode);

        // Deliveries: the AP's age resets to the delay of the delivered update plus one.
        let mut delivered = vec![false; self.nodes.len()];
        for &id in &outcome.decoded {
            let node = &mut self.nodes[id];
            let generated = node.queue.pop_front().expect("transmitter was backlogged");
            let delay = now - generated + 1;
            node.instantaneous_aoi = delay + 1;
            delivered[id] = true;
            outcome.delays.push(delay);
            self.acc.record_delivery(now, id, delay, cfg.deadline_slots);
        }

        if cfg.drop_on_deadline {
            let deadline = cfg.deadline_slots as u64;
            for node in &mut self.nodes {
                while node.queue.front().is_some_and(|&g| now - g + 1 >= deadline) {
                    node.queue.pop_front();
                    outcome.dropped += 1;
                }
            }
            self.acc.record_drops(now, outcome.dropped);
        }

        for (node, &fresh) in self.nodes.iter_mut().zip(&delivered) {
            if !fresh {
                node.instantaneous_aoi += 1;
            }
        }
        self.acc.record_slot(
            now,
            outcome.decoded.len(),
            self.nodes.iter().map(|n| n.instantaneous_aoi),
        );

        self.slot += 1;
        outcome
    }

    /// Updates generated, delivered, dropped and still queued since slot 0.
    pub fn conservation(&self) -> (u64, u64, u64, u64) {
        let queued = self.nodes.iter().map(|n| n.queue.len() as u64).sum();
        let t = self.acc.totals();
        (t.generated, t.delivered, t.dropped, queued)
    }

    /// Runs the remaining slots and summarises the measurement window.
    pub fn finish(mut self) -> RunMetrics {
        while self.slot < self.config.n_slots {
            self.step();
        }
        let queued = self.nodes.iter().map(|n| n.queue.len() as u64).sum();
        self.acc.into_metrics(queued)
    }
}

/// Executes run `run_index` of `config`.
pub fn run_once(config: &ScenarioConfig, run_index: usize) -> Result<RunMetrics> {
    Ok(Simulator::new(config, run_index)?.finish())
}
