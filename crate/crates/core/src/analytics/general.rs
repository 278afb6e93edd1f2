//! Outage averaged over decoding orders for unequal average received powers.
//!
//! No closed form exists for the per-order success terms when the rates
//! differ, so they are estimated by sampling the received powers conditioned
//! on each order. Conditioned on `I_{π1} > … > I_{πm}`, independent
//! exponentials have independent spacings: the smallest is `Exp(Σ_k λ_{πk})`
//! and each gap `I_{πk} − I_{π(k+1)}` is `Exp(Σ_{j≤k} λ_{πj})`.

use rand::Rng;
use rand_distr::Exp1;

use super::success::order_probability;
use crate::error::{Error, Result};

/// Largest collision size for which all decoding orders are enumerated.
pub const MAX_ENUMERATED_NODES: usize = 8;

const BATCHES: usize = 10;

/// Monte-Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub std_error: f64,
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                extend(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(m), &mut vec![false; m], &mut out);
    out
}

/// Counts, per rank, how many conditional draws pass the SINR test.
fn sample_rank_successes<R: Rng + ?Sized>(
    rates: &[f64],
    gamma: f64,
    noise_power: f64,
    draws: usize,
    rng: &mut R,
    powers: &mut [f64],
    successes: &mut [u64],
) {
    let m = rates.len();
    let cumulative: Vec<f64> = rates
        .iter()
        .scan(0.0, |acc, &l| {
            *acc += l;
            Some(*acc)
        })
        .collect();
    for _ in 0..draws {
        let e: f64 = rng.sample(Exp1);
        powers[m - 1] = e / cumulative[m - 1];
        for k in (0..m - 1).rev() {
            let e: f64 = rng.sample(Exp1);
            powers[k] = powers[k + 1] + e / cumulative[k];
        }
        let mut later: f64 = powers.iter().sum();
        for k in 0..m {
            later -= powers[k];
            if powers[k] >= gamma * (noise_power + later.max(0.0)) {
                successes[k] += 1;
            }
        }
    }
}

/// Outage of the node at `tagged` when the nodes with rates `active_lambdas`
/// collide, averaged over every decoding order.
///
/// For each order the per-rank success probabilities are estimated from
/// `samples_per_order` conditional draws and combined as a product up to the
/// tagged node's rank.
pub fn avg_outage_general<R: Rng + ?Sized>(
    tagged: usize,
    active_lambdas: &[f64],
    gamma: f64,
    noise_power: f64,
    samples_per_order: usize,
    rng: &mut R,
) -> Result<Estimate> {
    let m = active_lambdas.len();
    if m > MAX_ENUMERATED_NODES {
        return Err(Error::UnsupportedSize(format!(
            "{m} colliding nodes exceeds the enumeration bound of {MAX_ENUMERATED_NODES}; use the simulator"
        )));
    }
    if tagged >= m {
        return Err(Error::domain(format!("tagged index {tagged} out of range for {m} nodes")));
    }
    if active_lambdas.iter().any(|&l| !(l > 0.0 && l.is_finite())) {
        return Err(Error::domain("rates must be positive and finite"));
    }
    if m == 1 {
        return Ok(Estimate {
            value: -(-active_lambdas[0] * gamma * noise_power).exp_m1(),
            std_error: 0.0,
        });
    }
    let per_batch = samples_per_order.div_ceil(BATCHES).max(1);

    let mut pooled = 0.0;
    let mut batch_values = [0.0; BATCHES];
    let mut powers = vec![0.0; m];
    let mut successes = vec![0u64; m];
    let mut totals = vec![0u64; m];
    for order in permutations(m) {
        let rates: Vec<f64> = order.iter().map(|&i| active_lambdas[i]).collect();
        let weight = order_probability(&rates);
        let rank = order.iter().position(|&i| i == tagged).expect("tagged in order");

        totals.iter_mut().for_each(|t| *t = 0);
        for value in batch_values.iter_mut() {
            successes.iter_mut().for_each(|s| *s = 0);
            sample_rank_successes(&rates, gamma, noise_power, per_batch, rng, &mut powers, &mut successes);
            let chain: f64 = successes[..=rank]
                .iter()
                .map(|&s| s as f64 / per_batch as f64)
                .product();
            *value += weight * (1.0 - chain);
            for (t, s) in totals.iter_mut().zip(&successes) {
                *t += s;
            }
        }
        let n = (per_batch * BATCHES) as f64;
        let chain: f64 = totals[..=rank].iter().map(|&s| s as f64 / n).product();
        pooled += weight * (1.0 - chain);
    }

    let mean = batch_values.iter().sum::<f64>() / BATCHES as f64;
    let var = batch_values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (BATCHES - 1) as f64;
    Ok(Estimate {
        value: pooled,
        std_error: (var / BATCHES as f64).sqrt(),
    })
}

/// Successful update probability of node `tagged` among nodes with rates
/// `lambdas`, all saturated and contending with probability `tx_prob`.
pub fn success_update_prob_general<R: Rng + ?Sized>(
    tagged: usize,
    lambdas: &[f64],
    tx_prob: f64,
    gamma: f64,
    noise_power: f64,
    samples_per_order: usize,
    rng: &mut R,
) -> Result<Estimate> {
    let n = lambdas.len();
    if n > MAX_ENUMERATED_NODES {
        return Err(Error::UnsupportedSize(format!(
            "{n} nodes exceeds the enumeration bound of {MAX_ENUMERATED_NODES}; use the simulator"
        )));
    }
    if tagged >= n {
        return Err(Error::domain(format!("tagged index {tagged} out of range for {n} nodes")));
    }
    let others: Vec<usize> = (0..n).filter(|&i| i != tagged).collect();
    let mut value = 0.0;
    let mut var = 0.0;
    for mask in 0u32..(1 << others.len()) {
        let k = mask.count_ones() as i32;
        let weight = tx_prob.powi(k + 1) * (1.0 - tx_prob).powi(others.len() as i32 - k);
        if weight == 0.0 {
            continue;
        }
        let mut active = vec![lambdas[tagged]];
        active.extend(
            others
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &i)| lambdas[i]),
        );
        let outage = avg_outage_general(0, &active, gamma, noise_power, samples_per_order, rng)?;
        value += weight * (1.0 - outage.value);
        var += (weight * outage.std_error).powi(2);
    }
    Ok(Estimate {
        value,
        std_error: var.sqrt(),
    })
}
