//! Per-node Bernoulli-arrival queue with geometric service.
//!
//! With arrival probability `p_a` and per-slot delivery probability `q_s`, the
//! queue moves up with `r = p_a(1 − q_s)` and down with `s = q_s(1 − p_a)`.

use super::LinkBudget;
use crate::error::{Error, Result};

/// `ρ = r / s`; infinite when the node never delivers.
pub fn queue_load(p_a: f64, q_s: f64) -> f64 {
    let r = p_a * (1.0 - q_s);
    let s = q_s * (1.0 - p_a);
    if s > 0.0 {
        r / s
    } else if r == 0.0 && p_a == 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

fn stable_load(budget: &LinkBudget, q_s: f64) -> Result<f64> {
    let p_a = budget.arrival_prob;
    if !(0.0..=1.0).contains(&q_s) {
        return Err(Error::domain(format!("q_s must lie in [0, 1], got {q_s}")));
    }
    let rho = queue_load(p_a, q_s);
    if rho >= 1.0 || q_s <= p_a {
        return Err(Error::UnstableQueue { q_s, p_a, rho });
    }
    Ok(rho)
}

/// Time-average age of information of one node.
pub fn avg_aoi(budget: &LinkBudget, q_s: f64) -> Result<f64> {
    let p_a = budget.arrival_prob;
    if !(p_a > 0.0 && p_a < 1.0) {
        return Err(Error::domain(format!(
            "average AoI needs 0 < p_a < 1, got {p_a}"
        )));
    }
    stable_load(budget, q_s)?;
    Ok(1.0 / p_a + (1.0 - p_a) / (q_s - p_a) + p_a / q_s - p_a / (q_s * q_s))
}

/// Steady-state queue-length probabilities `Q_0, Q_1, …`, seen just after the
/// slot's arrival. Truncated once the remaining tail mass drops below 1e-12.
pub fn queue_distribution(budget: &LinkBudget, q_s: f64) -> Result<Vec<f64>> {
    let p_a = budget.arrival_prob;
    if p_a <= 0.0 {
        return Err(Error::domain("queue distribution needs p_a > 0"));
    }
    let rho = stable_load(budget, q_s)?;
    let q1 = p_a * (1.0 - rho) / q_s;
    let q0 = q_s * (1.0 - p_a) * q1 / p_a;

    let mut out = vec![q0];
    let mut qj = q1;
    // Tail beyond the current term: qj · ρ / (1 − ρ).
    loop {
        out.push(qj);
        if qj * rho / (1.0 - rho) < 1e-12 || qj == 0.0 {
            break;
        }
        qj *= rho;
    }
    Ok(out)
}

/// Service-completion rate of the end-to-end delay, `μ = q_s (1 − ρ)`.
fn delay_rate(budget: &LinkBudget, q_s: f64) -> Result<f64> {
    let rho = stable_load(budget, q_s)?;
    Ok(q_s * (1.0 - rho))
}

/// Mean system delay `1/μ` in slots.
pub fn mean_delay(budget: &LinkBudget, q_s: f64) -> Result<f64> {
    Ok(1.0 / delay_rate(budget, q_s)?)
}

/// `Pr{T = t}` for the system delay `T ≥ 1` in slots.
pub fn delay_pdf(budget: &LinkBudget, q_s: f64, t: u64) -> Result<f64> {
    if t == 0 {
        return Err(Error::domain("delay is at least one slot"));
    }
    let mu = delay_rate(budget, q_s)?;
    Ok(mu * (1.0 - mu).powf((t - 1) as f64))
}

/// `Pr{T > D}`.
pub fn deadline_violation(budget: &LinkBudget, q_s: f64) -> Result<f64> {
    let mu = delay_rate(budget, q_s)?;
    Ok((1.0 - mu).powi(budget.deadline_slots as i32))
}
