//! Large-scale path loss and block Rayleigh fading.
//!
//! A node's instantaneous received power in a slot is `I = P |h|^2` with
//! `h = c / sqrt(L_d)` and `c ~ CN(0, 1)`, so `I` is exponential with rate
//! `λ = L_d / P`. Fading is redrawn independently every slot.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Physical-layer parameters shared by every node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    pub tx_power_dbm: f64,
    /// Noise power σ² in watts.
    pub noise_power: f64,
    /// Target rate R̂ in bits/s/Hz.
    pub rate_threshold: f64,
    /// Path loss at 1 m, in dB.
    pub pathloss_ref_db: f64,
    pub pathloss_exponent: f64,
}

impl Default for ChannelParams {
    fn default() -> Self {
        // 20 dBm transmitters, free-space exponent, ~2.4 GHz reference loss and a
        // -90 dBm noise floor: a node 100 m away sees a mean SNR of 30 dB.
        Self {
            tx_power_dbm: 20.0,
            noise_power: 1e-12,
            rate_threshold: 1.0,
            pathloss_ref_db: 40.0,
            pathloss_exponent: 2.0,
        }
    }
}

impl ChannelParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.noise_power > 0.0 && self.noise_power.is_finite()) {
            return Err(Error::config("channel.noise_power", "must be positive and finite"));
        }
        if !self.tx_power_dbm.is_finite() {
            return Err(Error::config("channel.tx_power_dbm", "must be finite"));
        }
        if !(self.rate_threshold >= 0.0 && self.rate_threshold.is_finite()) {
            return Err(Error::config("channel.rate_threshold", "must be non-negative"));
        }
        if !self.pathloss_ref_db.is_finite() {
            return Err(Error::config("channel.pathloss_ref_db", "must be finite"));
        }
        if !(self.pathloss_exponent > 0.0 && self.pathloss_exponent.is_finite()) {
            return Err(Error::config("channel.pathloss_exponent", "must be positive"));
        }
        Ok(())
    }

    /// SINR threshold `γ = 2^R̂ − 1`.
    pub fn gamma(&self) -> f64 {
        self.rate_threshold.exp2() - 1.0
    }

    pub fn tx_power_watts(&self) -> f64 {
        dbm_to_watts(self.tx_power_dbm)
    }
}

/// Static link statistics of one node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeProfile {
    pub node_id: usize,
    pub distance_m: f64,
    /// Rate of the exponential received power, `1 / mean_rx_power`.
    pub lambda: f64,
    pub mean_rx_power: f64,
}

impl NodeProfile {
    pub fn at_distance(node_id: usize, distance_m: f64, params: &ChannelParams) -> Result<Self> {
        let lambda = lambda_for(distance_m, params)?;
        Ok(Self {
            node_id,
            distance_m,
            lambda,
            mean_rx_power: 1.0 / lambda,
        })
    }

    /// Profile with a prescribed mean received power and no geometry.
    pub fn with_mean_power(node_id: usize, mean_rx_power: f64) -> Result<Self> {
        if !(mean_rx_power > 0.0 && mean_rx_power.is_finite()) {
            return Err(Error::domain(format!(
                "mean received power must be positive, got {mean_rx_power}"
            )));
        }
        Ok(Self {
            node_id,
            distance_m: f64::NAN,
            lambda: 1.0 / mean_rx_power,
            mean_rx_power,
        })
    }
}

pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Linear path-loss factor `L_d = 10^(ref/10) · d^α`.
pub fn path_loss(distance_m: f64, params: &ChannelParams) -> Result<f64> {
    if !(distance_m > 0.0 && distance_m.is_finite()) {
        return Err(Error::domain(format!(
            "distance must be positive, got {distance_m}"
        )));
    }
    Ok(db_to_linear(params.pathloss_ref_db) * distance_m.powf(params.pathloss_exponent))
}

/// Exponential rate of the received power of a node at `distance_m`.
pub fn lambda_for(distance_m: f64, params: &ChannelParams) -> Result<f64> {
    Ok(path_loss(distance_m, params)? / params.tx_power_watts())
}

/// Unit-power complex Gaussian coefficient, returned as `(re, im)`.
fn unit_complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    (re * std::f64::consts::FRAC_1_SQRT_2, im * std::f64::consts::FRAC_1_SQRT_2)
}

/// Draws one instantaneous received power with rate `lambda`.
///
/// The draw is `|c|^2 / λ` for `c ~ CN(0, 1)`, consuming two standard normals.
pub fn sample_power<R: Rng + ?Sized>(lambda: f64, rng: &mut R) -> f64 {
    let (re, im) = unit_complex_gaussian(rng);
    (re * re + im * im) / lambda
}

/// One slot's channel draw under imperfect channel estimation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsiDraw {
    pub true_power: f64,
    pub estimated_power: f64,
    /// Power of the estimation error left behind after cancellation.
    pub residual_power: f64,
}

/// Draws the true channel `c`, the estimation error `ε ~ CN(0, σ_ε²)` and the
/// estimate `ĥ = c − ε`, returning the corresponding received powers.
///
/// Always consumes four standard normals. The true power is computed exactly
/// as in [`sample_power`], so with `σ_ε² = 0` the estimate equals the truth and
/// the residual is zero.
pub fn sample_csi_pair<R: Rng + ?Sized>(
    lambda: f64,
    sigma_eps_sq: f64,
    mean_rx_power: f64,
    rng: &mut R,
) -> Result<CsiDraw> {
    if !(sigma_eps_sq >= 0.0 && sigma_eps_sq.is_finite()) {
        return Err(Error::domain(format!(
            "estimation-error variance must be non-negative, got {sigma_eps_sq}"
        )));
    }
    let (c_re, c_im) = unit_complex_gaussian(rng);
    let (z_re, z_im) = unit_complex_gaussian(rng);
    let sd = sigma_eps_sq.sqrt();
    let (e_re, e_im) = (sd * z_re, sd * z_im);
    let (h_re, h_im) = (c_re - e_re, c_im - e_im);

    Ok(CsiDraw {
        true_power: (c_re * c_re + c_im * c_im) / lambda,
        estimated_power: (h_re * h_re + h_im * h_im) / lambda,
        residual_power: mean_rx_power * (e_re * e_re + e_im * e_im),
    })
}

/// Outage probability of a lone transmitter, `1 − exp(−λγσ²)`.
pub fn single_outage(lambda: f64, params: &ChannelParams) -> f64 {
    -(-lambda * params.gamma() * params.noise_power).exp_m1()
}
