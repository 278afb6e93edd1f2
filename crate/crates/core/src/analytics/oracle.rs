//! Brute-force Monte-Carlo counterparts of the closed forms.
//!
//! These draw raw channel realisations and run them through the AP decoder,
//! sharing no code with the formulas they check.

use rand::Rng;

use crate::channel::sample_power;
use crate::sic::{decode_slot, CsiMode, SlotReception};

/// Histogram of decoded counts over simulated `m`-signal collisions.
#[derive(Debug, Clone, PartialEq)]
pub struct CollisionStats {
    pub m: usize,
    pub slots: u64,
    /// `exactly[k]` = slots with exactly `k` signals decoded, `k = 0..=m`.
    pub exactly: Vec<u64>,
}

impl CollisionStats {
    /// Slots with at least `i` decoded signals.
    pub fn at_least(&self, i: usize) -> u64 {
        self.exactly[i.min(self.m + 1)..].iter().sum()
    }

    /// `Pr{≥ i decoded}` with its binomial standard error.
    pub fn at_least_prob(&self, i: usize) -> (f64, f64) {
        binomial_estimate(self.at_least(i), self.slots)
    }

    /// `Pr{rank i decoded | ranks < i decoded}` with its binomial standard error.
    pub fn conditional_rank_success(&self, i: usize) -> (f64, f64) {
        binomial_estimate(self.at_least(i), self.at_least(i - 1))
    }

    /// Empirical outage of a uniformly chosen colliding node, `1 − E[decoded]/m`,
    /// with its standard error.
    pub fn outage(&self) -> (f64, f64) {
        let n = self.slots as f64;
        let m = self.m as f64;
        let mut s1 = 0.0;
        let mut s2 = 0.0;
        for (k, &c) in self.exactly.iter().enumerate() {
            let x = k as f64 / m;
            s1 += c as f64 * x;
            s2 += c as f64 * x * x;
        }
        let mean = s1 / n;
        let var = (s2 / n - mean * mean).max(0.0) * n / (n - 1.0);
        (1.0 - mean, (var / n).sqrt())
    }
}

fn binomial_estimate(hits: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (f64::NAN, f64::NAN);
    }
    let p = hits as f64 / trials as f64;
    (p, (p * (1.0 - p) / trials as f64).sqrt())
}

/// Decodes `slots` collisions of `m` equal-SNR signals with unit mean power.
///
/// The noise power is chosen so that `λγσ² = lambda_gamma_sigma2`.
pub fn simulate_collisions<R: Rng + ?Sized>(
    m: usize,
    gamma: f64,
    lambda_gamma_sigma2: f64,
    slots: u64,
    rng: &mut R,
) -> CollisionStats {
    assert!(gamma > 0.0, "collision oracle needs a positive SINR threshold");
    let noise_power = lambda_gamma_sigma2 / gamma;
    let mut exactly = vec![0u64; m + 1];
    let mut reception = SlotReception::default();
    for _ in 0..slots {
        reception.clear();
        for id in 0..m {
            reception
                .entries
                .push(crate::sic::ReceptionEntry::perfect(id, sample_power(1.0, rng)));
        }
        exactly[decode_slot(&reception, noise_power, gamma, CsiMode::Perfect).decoded_count] += 1;
    }
    CollisionStats { m, slots, exactly }
}

/// Fraction of draws in which exponentials with the given rates appear in the
/// listed (descending) order.
pub fn empirical_order_probability<R: Rng + ?Sized>(
    ordered_lambdas: &[f64],
    draws: u64,
    rng: &mut R,
) -> (f64, f64) {
    let mut hits = 0u64;
    let mut powers = vec![0.0; ordered_lambdas.len()];
    for _ in 0..draws {
        for (p, &l) in powers.iter_mut().zip(ordered_lambdas) {
            *p = sample_power(l, rng);
        }
        if powers.windows(2).all(|w| w[0] > w[1]) {
            hits += 1;
        }
    }
    binomial_estimate(hits, draws)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_exponential_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let (p, se) = empirical_order_probability(&[2.0, 1.0], 1_000_000, &mut rng);
        assert!((p - 1.0 / 3.0).abs() < 3.0 * se, "{p} ± {se}");
    }

    #[test]
    fn lone_signal_statistics() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let s = simulate_collisions(1, 1.0, 0.1, 200_000, &mut rng);
        let (p, se) = s.at_least_prob(1);
        assert!((p - (-0.1f64).exp()).abs() < 3.0 * se);
        assert_eq!(s.at_least(0), s.slots);
    }

    #[test]
    fn strongest_of_two_at_unit_threshold() {
        // Pr{rank 1 decoded} = 2 e^{-0.1} / 2 for γ = 1, λγσ² = 0.1.
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let s = simulate_collisions(2, 1.0, 0.1, 1_000_000, &mut rng);
        let (p, se) = s.at_least_prob(1);
        assert!((p - (-0.1f64).exp()).abs() < 3.0 * se, "{p} ± {se}");
        let (g, se) = s.outage();
        assert!((g - 0.17717).abs() < 3.0 * se + 1e-5, "{g} ± {se}");
    }
}
