use crate::stats::Summary;

use super::config::ScenarioConfig;

/// Event counts over a whole run, warm-up included.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Totals {
    pub generated: u64,
    pub delivered: u64,
    pub dropped: u64,
}

/// Metric accumulation for one run. Events before `warmup` are counted only in
/// the conservation totals.
#[derive(Debug, Clone)]
pub(crate) struct Accumulator {
    warmup: u64,
    totals: Totals,
    measured_slots: u64,
    generated: u64,
    delivered: u64,
    dropped: u64,
    violations: u64,
    delay_sum: u64,
    aoi_sum: u128,
    opportunities: Vec<u64>,
    deliveries: Vec<u64>,
    delay_histogram: Vec<u64>,
    queue_histogram: Vec<u64>,
    decoded_histogram: Vec<u64>,
}

fn bump(hist: &mut Vec<u64>, index: usize) {
    if hist.len() <= index {
        hist.resize(index + 1, 0);
    }
    hist[index] += 1;
}

impl Accumulator {
    pub(crate) fn new(n_nodes: usize, warmup: u64) -> Self {
        Self {
            warmup,
            totals: Totals::default(),
            measured_slots: 0,
            generated: 0,
            delivered: 0,
            dropped: 0,
            violations: 0,
            delay_sum: 0,
            aoi_sum: 0,
            opportunities: vec![0; n_nodes],
            deliveries: vec![0; n_nodes],
            delay_histogram: Vec::new(),
            queue_histogram: Vec::new(),
            decoded_histogram: vec![0; n_nodes + 1],
        }
    }

    fn measured(&self, now: u64) -> bool {
        now >= self.warmup
    }

    pub(crate) fn totals(&self) -> Totals {
        self.totals
    }

    pub(crate) fn record_arrivals(&mut self, now: u64, count: usize) {
        self.totals.generated += count as u64;
        if self.measured(now) {
            self.generated += count as u64;
        }
    }

    pub(crate) fn record_queues(&mut self, now: u64, lens: impl Iterator<Item = usize>) {
        if self.measured(now) {
            for len in lens {
                bump(&mut self.queue_histogram, len);
            }
        }
    }

    pub(crate) fn record_opportunity(&mut self, now: u64, node: usize) {
        if self.measured(now) {
            self.opportunities[node] += 1;
        }
    }

    pub(crate) fn record_delivery(&mut self, now: u64, node: usize, delay: u64, deadline: u32) {
        self.totals.delivered += 1;
        if self.measured(now) {
            self.delivered += 1;
            self.deliveries[node] += 1;
            self.delay_sum += delay;
            if delay > deadline as u64 {
                self.violations += 1;
            }
            bump(&mut self.delay_histogram, delay as usize);
        }
    }

    pub(crate) fn record_drops(&mut self, now: u64, count: usize) {
        self.totals.dropped += count as u64;
        if self.measured(now) {
            self.dropped += count as u64;
        }
    }

    pub(crate) fn record_slot(&mut self, now: u64, decoded: usize, aois: impl Iterator<Item = u64>) {
        if self.measured(now) {
            self.measured_slots += 1;
            bump(&mut self.decoded_histogram, decoded);
            self.aoi_sum += aois.map(u128::from).sum::<u128>();
        }
    }

    pub(crate) fn into_metrics(self, queued: u64) -> RunMetrics {
        let n_nodes = self.opportunities.len();
        let slots = self.measured_slots as f64;
        let ratio = |a: u64, b: u64| if b == 0 { f64::NAN } else { a as f64 / b as f64 };
        let per_node: Vec<f64> = self
            .deliveries
            .iter()
            .zip(&self.opportunities)
            .filter(|(_, &o)| o > 0)
            .map(|(&d, &o)| d as f64 / o as f64)
            .collect();
        let q_s_empirical = if per_node.is_empty() {
            f64::NAN
        } else {
            per_node.iter().sum::<f64>() / per_node.len() as f64
        };
        RunMetrics {
            measured_slots: self.measured_slots,
            avg_aoi: self.aoi_sum as f64 / (slots * n_nodes as f64),
            throughput: self.delivered as f64 / slots,
            deadline_violation: ratio(self.violations, self.delivered),
            drop_rate: ratio(self.dropped, self.generated),
            q_s_empirical,
            mean_delay: ratio(self.delay_sum, self.delivered),
            totals: self.totals,
            queued,
            delay_histogram: self.delay_histogram,
            queue_histogram: self.queue_histogram,
            decoded_histogram: self.decoded_histogram,
        }
    }
}

/// Metrics of one run over its measurement window.
///
/// Ratios with an empty denominator are NaN.
#[derive(Debug, Clone, PartialEq)]
pub struct RunMetrics {
    pub measured_slots: u64,
    /// Time-and-node average of the instantaneous AoI, in slots.
    pub avg_aoi: f64,
    /// Delivered updates per slot.
    pub throughput: f64,
    /// Fraction of delivered updates with system delay above the deadline.
    pub deadline_violation: f64,
    /// Dropped over generated updates.
    pub drop_rate: f64,
    /// Deliveries per slot with a nonempty queue at contention time, averaged over nodes.
    pub q_s_empirical: f64,
    pub mean_delay: f64,
    pub totals: Totals,
    /// Updates left in the queues when the run ends.
    pub queued: u64,
    /// `delay_histogram[t]` = deliveries with system delay `t` slots.
    pub delay_histogram: Vec<u64>,
    /// `queue_histogram[k]` = node-slots with `k` queued updates, observed after arrivals.
    pub queue_histogram: Vec<u64>,
    /// `decoded_histogram[k]` = slots with `k` decoded updates.
    pub decoded_histogram: Vec<u64>,
}

impl RunMetrics {
    pub fn conserved(&self) -> bool {
        let t = self.totals;
        t.generated == t.delivered + t.dropped + self.queued
    }
}

/// Across-run summary of one metric.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricEstimate {
    pub mean: f64,
    pub std_error: f64,
    /// Half-width of the 95% confidence interval of the mean.
    pub ci95: f64,
    pub per_seed: Vec<f64>,
}

impl MetricEstimate {
    /// Summarises the non-NaN per-run values.
    pub fn from_runs(per_seed: Vec<f64>) -> Self {
        let finite: Vec<f64> = per_seed.iter().copied().filter(|v| !v.is_nan()).collect();
        let s = Summary::of(&finite);
        Self {
            mean: s.mean,
            std_error: s.std_error(),
            ci95: s.ci95_half_width(),
            per_seed,
        }
    }

    pub fn summary(&self) -> Summary {
        let finite: Vec<f64> = self.per_seed.iter().copied().filter(|v| !v.is_nan()).collect();
        Summary::of(&finite)
    }

    /// Runs that produced a value.
    pub fn count(&self) -> usize {
        self.per_seed.iter().filter(|v| !v.is_nan()).count()
    }
}

/// Metrics of every run of a scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    pub config: ScenarioConfig,
    pub runs: Vec<RunMetrics>,
    pub avg_aoi: MetricEstimate,
    pub throughput: MetricEstimate,
    pub deadline_violation: MetricEstimate,
    pub drop_rate: MetricEstimate,
    pub q_s_empirical: MetricEstimate,
    pub mean_delay: MetricEstimate,
}

/// Metric names in report order.
pub const METRICS: [&str; 6] = [
    "avg_aoi",
    "throughput",
    "deadline_violation",
    "drop_rate",
    "q_s",
    "mean_delay",
];

impl MetricsReport {
    pub fn from_runs(config: ScenarioConfig, runs: Vec<RunMetrics>) -> Self {
        let collect = |f: fn(&RunMetrics) -> f64| MetricEstimate::from_runs(runs.iter().map(f).collect());
        Self {
            avg_aoi: collect(|r| r.avg_aoi),
            throughput: collect(|r| r.throughput),
            deadline_violation: collect(|r| r.deadline_violation),
            drop_rate: collect(|r| r.drop_rate),
            q_s_empirical: collect(|r| r.q_s_empirical),
            mean_delay: collect(|r| r.mean_delay),
            config,
            runs,
        }
    }

    /// Estimates paired with their names, in [`METRICS`] order.
    pub fn metrics(&self) -> [(&'static str, &MetricEstimate); 6] {
        [
            (METRICS[0], &self.avg_aoi),
            (METRICS[1], &self.throughput),
            (METRICS[2], &self.deadline_violation),
            (METRICS[3], &self.drop_rate),
            (METRICS[4], &self.q_s_empirical),
            (METRICS[5], &self.mean_delay),
        ]
    }

    /// Histogram summed over runs, padded to the longest run.
    fn pooled(&self, pick: fn(&RunMetrics) -> &Vec<u64>) -> Vec<u64> {
        let len = self.runs.iter().map(|r| pick(r).len()).max().unwrap_or(0);
        let mut out = vec![0; len];
        for r in &self.runs {
            for (o, &c) in out.iter_mut().zip(pick(r)) {
                *o += c;
            }
        }
        out
    }

    pub fn delay_histogram(&self) -> Vec<u64> {
        self.pooled(|r| &r.delay_histogram)
    }

    pub fn queue_histogram(&self) -> Vec<u64> {
        self.pooled(|r| &r.queue_histogram)
    }

    pub fn decoded_histogram(&self) -> Vec<u64> {
        self.pooled(|r| &r.decoded_histogram)
    }
}
