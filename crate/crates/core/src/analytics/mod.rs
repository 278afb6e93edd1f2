//! Closed-form performance metrics of the SIC-assisted random-access uplink.
//!
//! All closed forms assume every node sees the same average SNR, so a scenario
//! collapses to a [`LinkBudget`]. The heterogeneous success probability is
//! available through [`avg_outage_general`], which estimates the per-order
//! success terms by conditional Monte-Carlo.

mod general;
pub mod oracle;
mod queue;
mod success;

pub use general::{avg_outage_general, success_update_prob_general, Estimate, MAX_ENUMERATED_NODES};
pub use queue::{
    avg_aoi, deadline_violation, delay_pdf, mean_delay, queue_distribution, queue_load,
};
pub use success::{
    binomial_pmf, decoded_count_distribution, order_probability, outage_equal,
    outage_equal_imperfect, rank_success_equal, rank_success_imperfect, success_update_prob,
    throughput,
};

use crate::channel::db_to_linear;
use crate::error::{Error, Result};

/// Aggregate parameters of an equal-SNR scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget {
    /// `λγσ²`, the single-user outage exponent.
    pub lambda_gamma_sigma2: f64,
    pub gamma: f64,
    /// Rate `λ` of the exponential received power, in the same power unit as `csi_v`.
    pub lambda: f64,
    pub n_nodes: usize,
    pub tx_prob: f64,
    pub arrival_prob: f64,
    pub deadline_slots: u32,
    /// Rate of the exponential cancellation residual; infinite for perfect CSI.
    pub csi_v: f64,
}

impl LinkBudget {
    /// Equal-SNR budget with unit noise power and perfect CSI.
    pub fn equal_snr(
        n_nodes: usize,
        tx_prob: f64,
        arrival_prob: f64,
        deadline_slots: u32,
        snr_db: f64,
        gamma: f64,
    ) -> Self {
        let snr = db_to_linear(snr_db);
        Self {
            lambda_gamma_sigma2: gamma / snr,
            gamma,
            lambda: 1.0 / snr,
            n_nodes,
            tx_prob,
            arrival_prob,
            deadline_slots,
            csi_v: f64::INFINITY,
        }
    }

    /// Residual rate for channel-estimation error variance `sigma_eps_sq`:
    /// `v = 1 / (σ_ε² · E[I]) = λ / σ_ε²`.
    pub fn with_estimation_error(mut self, sigma_eps_sq: f64) -> Self {
        self.csi_v = if sigma_eps_sq > 0.0 {
            self.lambda / sigma_eps_sq
        } else {
            f64::INFINITY
        };
        self
    }

    /// Offered load `G = N p`.
    pub fn offered_load(&self) -> f64 {
        self.n_nodes as f64 * self.tx_prob
    }

    pub fn validate(&self) -> Result<()> {
        let prob = |name: &str, v: f64| {
            if (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(Error::domain(format!("{name} must lie in [0, 1], got {v}")))
            }
        };
        prob("tx_prob", self.tx_prob)?;
        prob("arrival_prob", self.arrival_prob)?;
        if self.n_nodes == 0 {
            return Err(Error::domain("n_nodes must be at least 1"));
        }
        if self.deadline_slots == 0 {
            return Err(Error::domain("deadline must be at least one slot"));
        }
        if !(self.lambda_gamma_sigma2 >= 0.0) || !(self.gamma >= 0.0) || !(self.lambda > 0.0) {
            return Err(Error::domain("λγσ², γ must be non-negative and λ positive"));
        }
        if !(self.csi_v > 0.0) {
            return Err(Error::domain("csi_v must be positive or infinite"));
        }
        Ok(())
    }
}

/// Closed-form metrics for one scenario.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticReport {
    pub q_s: f64,
    /// `None` when the queue is unstable and the average AoI diverges.
    pub avg_aoi: Option<f64>,
    pub throughput: f64,
    /// Set to 1 for unstable queues.
    pub deadline_violation: f64,
    pub rho: f64,
    pub stable: bool,
}

/// Evaluates every closed-form metric of `budget`.
pub fn analytic_report(budget: &LinkBudget, imperfect: bool) -> Result<AnalyticReport> {
    budget.validate()?;
    let q_s = success_update_prob(budget, imperfect);
    if !(0.0..=1.0).contains(&q_s) {
        return Err(Error::domain(format!(
            "closed-form success probability {q_s} falls outside [0, 1] (γ = {})",
            budget.gamma
        ))
        .in_metric("q_s"));
    }
    let throughput = throughput(budget, imperfect);
    let rho = queue_load(budget.arrival_prob, q_s);

    let avg_aoi = match avg_aoi(budget, q_s) {
        Ok(v) => Some(v),
        Err(Error::UnstableQueue { .. }) => None,
        Err(e) => return Err(e.in_metric("avg_aoi")),
    };
    let (deadline_violation, stable) = match deadline_violation(budget, q_s) {
        Ok(v) => (v, true),
        Err(Error::UnstableQueue { .. }) => (1.0, false),
        Err(e) => return Err(e.in_metric("deadline_violation")),
    };

    Ok(AnalyticReport {
        q_s,
        avg_aoi,
        throughput,
        deadline_violation,
        rho,
        stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn silent_network_report() {
        let b = LinkBudget::equal_snr(5, 0.0, 0.4, 5, 20.0, 1.0);
        let r = analytic_report(&b, false).unwrap();
        assert_eq!(r.q_s, 0.0);
        assert_eq!(r.throughput, 0.0);
        assert!(!r.stable);
        assert_eq!(r.deadline_violation, 1.0);
        assert!(r.avg_aoi.is_none());
    }

    #[test]
    fn estimation_error_degrades_report() {
        let b = LinkBudget::equal_snr(5, 0.5, 0.15, 5, 20.0, 1.0);
        let perfect = analytic_report(&b, false).unwrap();
        let imperfect = analytic_report(&b.with_estimation_error(0.05), true).unwrap();
        assert!(perfect.stable && imperfect.stable);
        assert!(imperfect.q_s < perfect.q_s);
        assert!(imperfect.deadline_violation > perfect.deadline_violation);
        assert!(imperfect.avg_aoi.unwrap() > perfect.avg_aoi.unwrap());
        assert!(imperfect.throughput < perfect.throughput);
    }

    #[test]
    fn out_of_range_closed_form_is_reported() {
        let b = LinkBudget::equal_snr(4, 1.0, 0.1, 5, 20.0, 0.5);
        let err = analytic_report(&b, false).unwrap_err();
        assert!(matches!(err, Error::Metric { metric: "q_s", .. }));
    }

    #[test]
    fn invalid_budget_rejected() {
        let mut b = LinkBudget::equal_snr(5, 0.5, 0.4, 5, 20.0, 1.0);
        b.tx_prob = 1.5;
        assert!(analytic_report(&b, false).is_err());
        let mut b = LinkBudget::equal_snr(5, 0.5, 0.4, 5, 20.0, 1.0);
        b.deadline_slots = 0;
        assert!(analytic_report(&b, false).is_err());
    }

    #[test]
    fn offered_load_and_csi_mapping() {
        let b = LinkBudget::equal_snr(50, 0.02, 0.4, 5, 20.0, 1.0);
        assert!((b.offered_load() - 1.0).abs() < 1e-12);
        assert!(b.csi_v.is_infinite());
        let b = b.with_estimation_error(0.05);
        // λ/v = σ_ε².
        assert!((b.lambda / b.csi_v - 0.05).abs() < 1e-15);
        assert!(b.with_estimation_error(0.0).csi_v.is_infinite());
    }
}
