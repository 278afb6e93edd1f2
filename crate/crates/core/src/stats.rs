//! Small statistical helpers for across-seed aggregation and goodness of fit.

use statrs::distribution::{ChiSquared, ContinuousCDF, StudentsT};

/// Sample mean and spread of independent replications.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary {
    pub n: usize,
    pub mean: f64,
    /// Unbiased sample standard deviation (0 when `n < 2`).
    pub std_dev: f64,
}

impl Summary {
    pub fn of(values: &[f64]) -> Self {
        let n = values.len();
        if n == 0 {
            return Self {
                n,
                mean: f64::NAN,
                std_dev: f64::NAN,
            };
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let std_dev = if n < 2 {
            0.0
        } else {
            let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
            (ss / (n - 1) as f64).sqrt()
        };
        Self { n, mean, std_dev }
    }

    pub fn std_error(&self) -> f64 {
        if self.n < 2 {
            0.0
        } else {
            self.std_dev / (self.n as f64).sqrt()
        }
    }

    /// Half-width of the two-sided 95% Student-t confidence interval.
    pub fn ci95_half_width(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        let t = StudentsT::new(0.0, 1.0, (self.n - 1) as f64)
            .expect("dof is positive")
            .inverse_cdf(0.975);
        t * self.std_error()
    }

    /// Standardized deviation of the mean from `reference`.
    ///
    /// A zero standard error yields 0 for an exact match and infinity otherwise.
    pub fn z_score(&self, reference: f64) -> f64 {
        let diff = self.mean - reference;
        let se = self.std_error();
        if se > 0.0 {
            diff / se
        } else if diff == 0.0 {
            0.0
        } else {
            f64::INFINITY.copysign(diff)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    /// Number of bins after pooling sparse ones.
    pub bins: usize,
}

/// Pearson goodness-of-fit test of `observed` counts against cell
/// probabilities `probs` (which need not sum to one; the leftover mass is a
/// final implicit cell holding any unlisted observations `overflow`).
///
/// Adjacent cells are pooled from the right until each has an expected count
/// of at least 5.
pub fn chi_square_gof(observed: &[u64], probs: &[f64], overflow: u64) -> ChiSquareTest {
    assert_eq!(observed.len(), probs.len());
    let total = observed.iter().sum::<u64>() + overflow;
    let n = total as f64;
    let rest = (1.0 - probs.iter().sum::<f64>()).max(0.0);

    let mut cells: Vec<(f64, f64)> = observed
        .iter()
        .zip(probs)
        .map(|(&o, &p)| (o as f64, p * n))
        .collect();
    cells.push((overflow as f64, rest * n));

    let mut pooled: Vec<(f64, f64)> = Vec::with_capacity(cells.len());
    let mut acc = (0.0, 0.0);
    for &(o, e) in cells.iter().rev() {
        acc.0 += o;
        acc.1 += e;
        if acc.1 >= 5.0 {
            pooled.push(acc);
            acc = (0.0, 0.0);
        }
    }
    if acc.1 > 0.0 || acc.0 > 0.0 {
        match pooled.last_mut() {
            Some(last) => {
                last.0 += acc.0;
                last.1 += acc.1;
            }
            None => pooled.push(acc),
        }
    }

    let statistic: f64 = pooled
        .iter()
        .map(|&(o, e)| if e > 0.0 { (o - e).powi(2) / e } else if o > 0.0 { f64::INFINITY } else { 0.0 })
        .sum();
    let dof = pooled.len().saturating_sub(1).max(1);
    let p_value = if statistic.is_finite() {
        1.0 - ChiSquared::new(dof as f64).expect("dof ≥ 1").cdf(statistic)
    } else {
        0.0
    };
    ChiSquareTest {
        statistic,
        dof,
        p_value,
        bins: pooled.len(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KsTest {
    pub statistic: f64,
    pub p_value: f64,
}

/// One-sample Kolmogorov–Smirnov test against a continuous CDF.
pub fn ks_test(samples: &mut [f64], cdf: impl Fn(f64) -> f64) -> KsTest {
    samples.sort_by(|a, b| a.total_cmp(b));
    let n = samples.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in samples.iter().enumerate() {
        let f = cdf(x);
        d = d.max((i + 1) as f64 / n - f).max(f - i as f64 / n);
    }
    let sqrt_n = n.sqrt();
    // Stephens' small-sample correction to the asymptotic Kolmogorov law.
    let lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
    KsTest {
        statistic: d,
        p_value: kolmogorov_survival(lambda),
    }
}

/// `Q_KS(λ) = 2 Σ_{k≥1} (−1)^{k−1} exp(−2k²λ²)`.
fn kolmogorov_survival(lambda: f64) -> f64 {
    if lambda < 1e-3 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=100 {
        let term = sign * (-2.0 * (k * k) as f64 * lambda * lambda).exp();
        sum += term;
        if term.abs() < 1e-12 {
            break;
        }
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}
