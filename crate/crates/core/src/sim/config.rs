use std::fmt;

use rand::Rng;

use crate::analytics::LinkBudget;
use crate::channel::{db_to_linear, ChannelParams, NodeProfile};
use crate::error::{Error, Result};

/// Channel access rule of every node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Policy {
    /// Slotted ALOHA with a SIC receiver at the AP.
    SicRa,
    /// Slotted ALOHA over a collision channel.
    Standard,
    /// Age-dependent random access: contend only while the AoI exceeds the threshold.
    Adra { age_threshold: u64 },
}

impl Policy {
    pub fn name(&self) -> &'static str {
        match self {
            Policy::SicRa => "sic-ra",
            Policy::Standard => "standard",
            Policy::Adra { .. } => "adra",
        }
    }

    pub fn age_threshold(&self) -> Option<u64> {
        match self {
            Policy::Adra { age_threshold } => Some(*age_threshold),
            _ => None,
        }
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CsiConfig {
    Perfect,
    Imperfect { sigma_eps_sq: f64 },
}

impl CsiConfig {
    pub fn sigma_eps_sq(&self) -> f64 {
        match self {
            CsiConfig::Perfect => 0.0,
            CsiConfig::Imperfect { sigma_eps_sq } => *sigma_eps_sq,
        }
    }

    /// `Perfect` for zero variance, `Imperfect` otherwise.
    pub fn from_variance(sigma_eps_sq: f64) -> Self {
        if sigma_eps_sq == 0.0 {
            CsiConfig::Perfect
        } else {
            CsiConfig::Imperfect { sigma_eps_sq }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelConfig {
    /// Every node has the same mean SNR; noise power is normalised to 1.
    EqualSnr { snr_db: f64, rate_threshold: f64 },
    /// Nodes placed uniformly in a square around the AP.
    Geometric(ChannelParams),
}

impl ChannelConfig {
    pub fn rate_threshold(&self) -> f64 {
        match self {
            ChannelConfig::EqualSnr { rate_threshold, .. } => *rate_threshold,
            ChannelConfig::Geometric(p) => p.rate_threshold,
        }
    }

    pub fn gamma(&self) -> f64 {
        self.rate_threshold().exp2() - 1.0
    }

    pub fn noise_power(&self) -> f64 {
        match self {
            ChannelConfig::EqualSnr { .. } => 1.0,
            ChannelConfig::Geometric(p) => p.noise_power,
        }
    }

    pub fn mode_name(&self) -> &'static str {
        match self {
            ChannelConfig::EqualSnr { .. } => "equal-snr",
            ChannelConfig::Geometric(_) => "geometric",
        }
    }
}

/// Full parameterisation of a simulation or analytic evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub n_nodes: usize,
    pub tx_prob: f64,
    pub arrival_prob: f64,
    pub deadline_slots: u32,
    pub policy: Policy,
    pub csi: CsiConfig,
    pub channel: ChannelConfig,
    /// Side of the square deployment area, AP at the centre (geometric channel only).
    pub area_m: f64,
    pub n_slots: u64,
    pub n_runs: usize,
    pub seed: u64,
    pub drop_on_deadline: bool,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            n_nodes: 5,
            tx_prob: 0.1,
            arrival_prob: 0.4,
            deadline_slots: 5,
            policy: Policy::SicRa,
            csi: CsiConfig::Perfect,
            channel: ChannelConfig::EqualSnr {
                snr_db: 20.0,
                rate_threshold: 1.0,
            },
            area_m: 200.0,
            n_slots: 100_000,
            n_runs: 10,
            seed: 1,
            drop_on_deadline: false,
        }
    }
}

/// Nodes closer than this to the AP are placed at this distance.
pub const MIN_DISTANCE_M: f64 = 1.0;

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        let prob = |field: &str, v: f64| {
            if (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(Error::config(field, format!("must lie in [0, 1], got {v}")))
            }
        };
        if self.n_nodes == 0 {
            return Err(Error::config("scenario.n_nodes", "must be at least 1"));
        }
        prob("scenario.tx_prob", self.tx_prob)?;
        prob("scenario.arrival_prob", self.arrival_prob)?;
        if self.deadline_slots == 0 {
            return Err(Error::config("scenario.deadline_slots", "must be at least 1"));
        }
        if self.n_slots == 0 {
            return Err(Error::config("scenario.n_slots", "must be at least 1"));
        }
        if self.n_runs == 0 {
            return Err(Error::config("scenario.n_runs", "must be at least 1"));
        }
        if let CsiConfig::Imperfect { sigma_eps_sq } = self.csi {
            if !(sigma_eps_sq >= 0.0 && sigma_eps_sq.is_finite()) {
                return Err(Error::config("csi.sigma_eps_sq", "must be non-negative"));
            }
        }
        match &self.channel {
            ChannelConfig::EqualSnr { snr_db, rate_threshold } => {
                if !snr_db.is_finite() {
                    return Err(Error::config("channel.snr_db", "must be finite"));
                }
                if !(*rate_threshold >= 0.0 && rate_threshold.is_finite()) {
                    return Err(Error::config("channel.rate_threshold", "must be non-negative"));
                }
            }
            ChannelConfig::Geometric(p) => {
                p.validate()?;
                if !(self.area_m > 0.0 && self.area_m.is_finite()) {
                    return Err(Error::config("scenario.area_m", "must be positive"));
                }
            }
        }
        Ok(())
    }

    pub fn gamma(&self) -> f64 {
        self.channel.gamma()
    }

    pub fn offered_load(&self) -> f64 {
        self.n_nodes as f64 * self.tx_prob
    }

    /// Slots excluded from the metrics at the start of each run.
    pub fn warmup_slots(&self) -> u64 {
        self.n_slots / 10
    }

    /// Equal-SNR aggregate for the closed forms; `None` for geometric placement.
    pub fn link_budget(&self) -> Option<LinkBudget> {
        match self.channel {
            ChannelConfig::EqualSnr { snr_db, .. } => Some(
                LinkBudget::equal_snr(
                    self.n_nodes,
                    self.tx_prob,
                    self.arrival_prob,
                    self.deadline_slots,
                    snr_db,
                    self.gamma(),
                )
                .with_estimation_error(self.csi.sigma_eps_sq()),
            ),
            ChannelConfig::Geometric(_) => None,
        }
    }

    /// Static link statistics of every node. Geometric placement draws from `rng`.
    pub fn node_profiles<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Vec<NodeProfile>> {
        match &self.channel {
            ChannelConfig::EqualSnr { snr_db, .. } => (0..self.n_nodes)
                .map(|id| NodeProfile::with_mean_power(id, db_to_linear(*snr_db)))
                .collect(),
            ChannelConfig::Geometric(params) => (0..self.n_nodes)
                .map(|id| {
                    let half = self.area_m / 2.0;
                    let x = rng.random_range(-half..half);
                    let y = rng.random_range(-half..half);
                    let d = x.hypot(y).max(MIN_DISTANCE_M);
                    NodeProfile::at_distance(id, d, params)
                })
                .collect(),
        }
    }
}
