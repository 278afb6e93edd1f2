//! Simulator statistics against closed forms and brute-force collision oracles.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sicra::analytics::oracle::simulate_collisions;
use sicra::analytics::{binomial_pmf, decoded_count_distribution, delay_pdf, success_update_prob};
use sicra::sim::{self, ChannelConfig, Policy, ScenarioConfig};
use sicra::stats::{chi_square_gof, Summary};

fn saturated(n: usize, p: f64) -> ScenarioConfig {
    ScenarioConfig {
        n_nodes: n,
        tx_prob: p,
        arrival_prob: 1.0,
        channel: ChannelConfig::EqualSnr { snr_db: 20.0, rate_threshold: 1.0 },
        n_slots: 50_000,
        n_runs: 10,
        seed: 21,
        ..Default::default()
    }
}

/// `q_s` of a saturated node built from oracle collision outages instead of
/// the closed-form rank products.
fn chain_success(n: usize, p: f64, lgs: f64, rng: &mut ChaCha8Rng) -> (f64, f64) {
    let mut value = 0.0;
    let mut var = 0.0;
    for m in 1..=n {
        let w = p * binomial_pmf(n - 1, m - 1, p);
        let (outage, se) = simulate_collisions(m, 1.0, lgs, 400_000, rng).outage();
        value += w * (1.0 - outage);
        var += (w * se).powi(2);
    }
    (value, var.sqrt())
}

#[test]
fn saturated_success_matches_exact_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for p in [0.3, 0.6] {
        let cfg = saturated(5, p);
        let report = sim::run(&cfg).unwrap();
        let s = report.q_s_empirical.summary();
        let (exact, se) = chain_success(5, p, 0.01, &mut rng);
        let tol = 4.0 * (s.std_error().powi(2) + se * se).sqrt();
        assert!((s.mean - exact).abs() < tol, "p={p}: sim {} vs chain {exact}", s.mean);
    }
}

#[test]
fn two_node_decoded_counts_match_closed_form() {
    // With at most two colliders and γ = 1 the rank products are exact.
    let cfg = ScenarioConfig { n_slots: 100_000, ..saturated(2, 0.7) };
    let report = sim::run(&cfg).unwrap();
    let law = decoded_count_distribution(&cfg.link_budget().unwrap(), false);
    for (k, &expected) in law.iter().enumerate() {
        let per_seed: Vec<f64> = report
            .runs
            .iter()
            .map(|r| r.decoded_histogram[k] as f64 / r.measured_slots as f64)
            .collect();
        let z = Summary::of(&per_seed).z_score(expected);
        assert!(z.abs() < 3.0, "P{k}: z = {z}");
    }
}

#[test]
fn lone_node_delay_is_geometric() {
    let cfg = ScenarioConfig {
        n_nodes: 1,
        tx_prob: 0.6,
        arrival_prob: 0.2,
        n_slots: 200_000,
        n_runs: 4,
        seed: 4,
        ..saturated(1, 0.6)
    };
    let b = cfg.link_budget().unwrap();
    let q_s = success_update_prob(&b, false);
    let report = sim::run(&cfg).unwrap();
    let hist = report.delay_histogram();
    let observed: Vec<u64> = (1..=25).map(|t| hist.get(t).copied().unwrap_or(0)).collect();
    let overflow: u64 = hist.iter().skip(26).sum();
    let probs: Vec<f64> = (1..=25).map(|t| delay_pdf(&b, q_s, t).unwrap()).collect();
    // Consecutive delays are positively correlated, so the plain chi-square
    // statistic is inflated; only a gross mismatch is flagged here.
    let chi = chi_square_gof(&observed, &probs, overflow);
    assert!(chi.p_value > 1e-6, "{chi:?}");
    let mean = report.mean_delay.summary();
    let expected = sicra::analytics::mean_delay(&b, q_s).unwrap();
    assert!(mean.z_score(expected).abs() < 4.0, "{} vs {expected}", mean.mean);
}

#[test]
fn adra_queues_longer_than_sic_ra() {
    for p in [0.2, 0.4, 0.6] {
        let base = ScenarioConfig {
            n_nodes: 5,
            tx_prob: p,
            arrival_prob: 0.1,
            n_slots: 50_000,
            n_runs: 4,
            seed: 12,
            ..Default::default()
        };
        let sic = sim::run(&base).unwrap();
        let adra = sim::run(&ScenarioConfig { policy: Policy::Adra { age_threshold: 5 }, ..base }).unwrap();
        assert!(
            adra.mean_delay.mean >= sic.mean_delay.mean,
            "p={p}: ADRA {} < SIC-RA {}",
            adra.mean_delay.mean,
            sic.mean_delay.mean
        );
    }
}

#[test]
fn conservation_holds_for_every_policy() {
    for policy in [Policy::SicRa, Policy::Standard, Policy::Adra { age_threshold: 10 }] {
        for drop in [false, true] {
            let cfg = ScenarioConfig {
                n_nodes: 8,
                tx_prob: 0.2,
                policy,
                drop_on_deadline: drop,
                n_slots: 10_000,
                n_runs: 3,
                ..Default::default()
            };
            let r = sim::run(&cfg).unwrap();
            assert!(r.runs.iter().all(|m| m.conserved()));
            for m in &r.runs {
                for v in [m.throughput / cfg.n_nodes as f64, m.q_s_empirical, m.drop_rate] {
                    assert!((0.0..=1.0).contains(&v) || v.is_nan(), "{v}");
                }
            }
        }
    }
}
