use super::LinkBudget;
use crate::error::{Error, Result};

/// Probability that independent exponentials with the given rates come out in
/// exactly this (descending) order.
pub fn order_probability(ordered_lambdas: &[f64]) -> f64 {
    let mut prefix = ordered_lambdas.first().copied().unwrap_or(0.0);
    let mut prob = 1.0;
    for &l in ordered_lambdas.iter().skip(1) {
        prefix += l;
        prob *= l / prefix;
    }
    prob
}

fn ln_binomial(n: usize, k: usize) -> f64 {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    (0..k).map(|j| ((n - j) as f64 / (j + 1) as f64).ln()).sum()
}

/// `C(n, k) p^k (1 − p)^(n − k)`.
pub fn binomial_pmf(n: usize, k: usize, p: f64) -> f64 {
    if k > n {
        return 0.0;
    }
    if p <= 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if p >= 1.0 {
        return if k == n { 1.0 } else { 0.0 };
    }
    (ln_binomial(n, k) + k as f64 * p.ln() + (n - k) as f64 * (-p).ln_1p()).exp()
}

/// `C(m, i) exp(−i·exponent) / (γ i + 1)^(m − i)`, evaluated in log space.
fn rank_term(i: usize, m: usize, exponent: f64, gamma: f64) -> f64 {
    (ln_binomial(m, i) - exponent - (m - i) as f64 * (gamma * i as f64).ln_1p()).exp()
}

fn check_rank(i: usize, m: usize) -> Result<()> {
    if i == 0 || i > m {
        Err(Error::domain(format!("rank {i} outside 1..={m}")))
    } else {
        Ok(())
    }
}

/// Closed-form success term of rank `i` among `m` equal-SNR signals.
pub fn rank_success_equal(i: usize, m: usize, budget: &LinkBudget) -> Result<f64> {
    check_rank(i, m)?;
    Ok(rank_term(
        i,
        m,
        i as f64 * budget.lambda_gamma_sigma2,
        budget.gamma,
    ))
}

/// Rank success term with the cancellation residual: the exponent becomes
/// `i λ γ (σ² + i / v)`.
pub fn rank_success_imperfect(i: usize, m: usize, budget: &LinkBudget) -> Result<f64> {
    check_rank(i, m)?;
    let extra = budget.lambda * budget.gamma * i as f64 / budget.csi_v;
    Ok(rank_term(
        i,
        m,
        i as f64 * (budget.lambda_gamma_sigma2 + extra),
        budget.gamma,
    ))
}

/// Cumulative products `Π_{j ≤ i} X(j)` for `i = 1..=m`: the probability that
/// at least `i` of `m` colliding signals are decoded.
fn at_least_products(m: usize, budget: &LinkBudget, imperfect: bool) -> Vec<f64> {
    let mut acc = 1.0;
    (1..=m)
        .map(|j| {
            let x = if imperfect {
                rank_success_imperfect(j, m, budget)
            } else {
                rank_success_equal(j, m, budget)
            }
            .expect("rank within range");
            acc *= x;
            acc
        })
        .collect()
}

/// Order-averaged outage `Γ_m` of a node colliding with `m − 1` others.
pub fn outage_equal(m: usize, budget: &LinkBudget) -> f64 {
    assert!(m >= 1, "outage needs at least one transmitter");
    1.0 - at_least_products(m, budget, false).iter().sum::<f64>() / m as f64
}

/// `Γ̂_m`: outage including the cancellation residual of imperfect CSI.
pub fn outage_equal_imperfect(m: usize, budget: &LinkBudget) -> f64 {
    assert!(m >= 1, "outage needs at least one transmitter");
    1.0 - at_least_products(m, budget, true).iter().sum::<f64>() / m as f64
}

/// Successful update probability `q_s` of a saturated node.
pub fn success_update_prob(budget: &LinkBudget, imperfect: bool) -> f64 {
    let n = budget.n_nodes;
    let p = budget.tx_prob;
    (1..=n)
        .map(|m| {
            let weight = p * binomial_pmf(n - 1, m - 1, p);
            if weight == 0.0 {
                return 0.0;
            }
            let outage = if imperfect {
                outage_equal_imperfect(m, budget)
            } else {
                outage_equal(m, budget)
            };
            weight * (1.0 - outage)
        })
        .sum()
}

/// Distribution of the number of packets decoded in a slot, `P_i` for
/// `i = 0..=N`, when all `N` nodes contend with probability `p`.
pub fn decoded_count_distribution(budget: &LinkBudget, imperfect: bool) -> Vec<f64> {
    let n = budget.n_nodes;
    let mut at_least = vec![0.0; n + 2];
    at_least[0] = 1.0;
    for m in 1..=n {
        let weight = binomial_pmf(n, m, budget.tx_prob);
        if weight == 0.0 {
            continue;
        }
        for (i, prod) in at_least_products(m, budget, imperfect).into_iter().enumerate() {
            at_least[i + 1] += weight * prod;
        }
    }
    (0..=n).map(|i| at_least[i] - at_least[i + 1]).collect()
}

/// Mean number of packets decoded per slot.
pub fn throughput(budget: &LinkBudget, imperfect: bool) -> f64 {
    decoded_count_distribution(budget, imperfect)
        .iter()
        .enumerate()
        .map(|(i, p)| i as f64 * p)
        .sum()
}
