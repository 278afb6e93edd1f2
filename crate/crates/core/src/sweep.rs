//! Scenario files, parameter sweeps and the rows behind the CSV output.
//!
//! A scenario file holds one `key = value` pair per line; `#` starts a
//! comment. Overrides given later win, so command-line `--set` pairs applied
//! after the file take precedence over it.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analytics::{
    analytic_report, avg_aoi, deadline_violation, mean_delay, success_update_prob_general,
    LinkBudget, MAX_ENUMERATED_NODES,
};
use crate::channel::ChannelParams;
use crate::error::{Error, Result};
use crate::sim::{
    self, node_placement, ChannelConfig, CsiConfig, MetricsReport, Policy, ScenarioConfig,
};

/// Every key a scenario file may set.
pub const KEYS: [&str; 23] = [
    "scenario.n_nodes",
    "scenario.tx_prob",
    "scenario.arrival_prob",
    "scenario.deadline_slots",
    "scenario.policy",
    "scenario.adra_threshold",
    "scenario.area_m",
    "scenario.n_slots",
    "scenario.n_runs",
    "scenario.seed",
    "scenario.drop_on_deadline",
    "csi.sigma_eps_sq",
    "channel.mode",
    "channel.snr_db",
    "channel.rate_threshold",
    "channel.tx_power_dbm",
    "channel.noise_power",
    "channel.pathloss_ref_db",
    "channel.pathloss_exponent",
    "sweep.axis",
    "sweep.values",
    "sweep.runs_per_point",
    "compare.samples_per_order",
];

/// Ordered `key = value` settings; the last assignment of a key wins.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    pairs: Vec<(String, String)>,
}

impl Settings {
    /// Parses a scenario file.
    pub fn parse(text: &str) -> Result<Self> {
        let mut s = Self::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::config(format!("line {}", n + 1), format!("expected key = value, got {line:?}"))
            })?;
            s.set(k.trim(), v.trim())?;
        }
        Ok(s)
    }

    /// Applies a `key=value` override.
    pub fn set_pair(&mut self, pair: &str) -> Result<()> {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Error::config(pair, "expected key=value"))?;
        self.set(k.trim(), v.trim())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        if !KEYS.contains(&key) {
            return Err(Error::config(key, "unknown key"));
        }
        self.pairs.push((key.to_owned(), value.to_owned()));
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.pairs.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn parsed<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.get(key)
            .map(|v| {
                v.parse::<T>()
                    .map_err(|_| Error::config(key, format!("cannot parse {v:?}")))
            })
            .transpose()
    }

    fn or<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T> {
        Ok(self.parsed(key)?.unwrap_or(default))
    }

    /// Builds and validates the scenario.
    pub fn scenario(&self) -> Result<ScenarioConfig> {
        let d = ScenarioConfig::default();
        let policy = match self.get("scenario.policy").unwrap_or("sic-ra") {
            "sic-ra" => Policy::SicRa,
            "standard" => Policy::Standard,
            "adra" => Policy::Adra {
                age_threshold: self.parsed("scenario.adra_threshold")?.ok_or_else(|| {
                    Error::config("scenario.adra_threshold", "required when scenario.policy = adra")
                })?,
            },
            other => {
                return Err(Error::config(
                    "scenario.policy",
                    format!("expected sic-ra, standard or adra, got {other:?}"),
                ))
            }
        };
        let dp = ChannelParams::default();
        let channel = match self.get("channel.mode").unwrap_or("equal-snr") {
            "equal-snr" => ChannelConfig::EqualSnr {
                snr_db: self.or("channel.snr_db", 20.0)?,
                rate_threshold: self.or("channel.rate_threshold", 1.0)?,
            },
            "geometric" => ChannelConfig::Geometric(ChannelParams {
                tx_power_dbm: self.or("channel.tx_power_dbm", dp.tx_power_dbm)?,
                noise_power: self.or("channel.noise_power", dp.noise_power)?,
                rate_threshold: self.or("channel.rate_threshold", dp.rate_threshold)?,
                pathloss_ref_db: self.or("channel.pathloss_ref_db", dp.pathloss_ref_db)?,
                pathloss_exponent: self.or("channel.pathloss_exponent", dp.pathloss_exponent)?,
            }),
            other => {
                return Err(Error::config(
                    "channel.mode",
                    format!("expected equal-snr or geometric, got {other:?}"),
                ))
            }
        };
        let drop_on_deadline = match self.get("scenario.drop_on_deadline") {
            None => d.drop_on_deadline,
            Some("true" | "on" | "1") => true,
            Some("false" | "off" | "0") => false,
            Some(v) => {
                return Err(Error::config("scenario.drop_on_deadline", format!("expected true or false, got {v:?}")))
            }
        };
        let cfg = ScenarioConfig {
            n_nodes: self.or("scenario.n_nodes", d.n_nodes)?,
            tx_prob: self.or("scenario.tx_prob", d.tx_prob)?,
            arrival_prob: self.or("scenario.arrival_prob", d.arrival_prob)?,
            deadline_slots: self.or("scenario.deadline_slots", d.deadline_slots)?,
            policy,
            csi: CsiConfig::from_variance(self.or("csi.sigma_eps_sq", 0.0)?),
            channel,
            area_m: self.or("scenario.area_m", d.area_m)?,
            n_slots: self.or("scenario.n_slots", d.n_slots)?,
            n_runs: self.or("scenario.n_runs", d.n_runs)?,
            seed: self.or("scenario.seed", d.seed)?,
            drop_on_deadline,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// The sweep described by the `sweep.*` keys, if any.
    pub fn sweep(&self) -> Result<Option<SweepSpec>> {
        let Some(axis) = self.get("sweep.axis") else {
            if self.get("sweep.values").is_some() {
                return Err(Error::config("sweep.axis", "required when sweep.values is set"));
            }
            return Ok(None);
        };
        let axis: Axis = axis.parse()?;
        let values = parse_values(
            self.get("sweep.values")
                .ok_or_else(|| Error::config("sweep.values", "required when sweep.axis is set"))?,
        )?;
        let base = self.scenario()?;
        let runs_per_point = self.or("sweep.runs_per_point", base.n_runs)?;
        let spec = SweepSpec::new(base, axis, values, runs_per_point);
        spec.points()?;
        Ok(Some(spec))
    }

    /// Sweep if one is configured, otherwise the single scenario.
    pub fn sweep_or_single(&self) -> Result<SweepSpec> {
        match self.sweep()? {
            Some(s) => Ok(s),
            None => Ok(SweepSpec::single(self.scenario()?)),
        }
    }

    /// Monte-Carlo draws per decoding order for heterogeneous closed forms.
    pub fn samples_per_order(&self) -> Result<Option<usize>> {
        self.parsed("compare.samples_per_order")
    }
}

/// Comma-separated numbers, or `start:stop:count` for evenly spaced points.
pub fn parse_values(text: &str) -> Result<Vec<f64>> {
    let bad = || Error::config("sweep.values", format!("cannot parse {text:?}"));
    let values: Vec<f64> = if let [a, b, n] = text.split(':').collect::<Vec<_>>()[..] {
        let (a, b): (f64, f64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        match n {
            0 => Vec::new(),
            1 => vec![a],
            _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
        }
    } else {
        text.split(',')
            .map(|v| v.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<Result<_>>()?
    };
    if values.is_empty() {
        return Err(Error::config("sweep.values", "must not be empty"));
    }
    Ok(values)
}

/// Swept scenario parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    /// Transmission probability.
    P,
    /// Offered load `G = N p`; sets `p = G / N`.
    G,
    /// Arrival probability.
    Pa,
    /// Channel-estimation error variance.
    SigmaEpsSq,
    /// Number of nodes.
    N,
}

impl Axis {
    pub fn name(&self) -> &'static str {
        match self {
            Axis::P => "p",
            Axis::G => "G",
            Axis::Pa => "p_a",
            Axis::SigmaEpsSq => "sigma_eps_sq",
            Axis::N => "N",
        }
    }

    /// `base` with this parameter set to `value`.
    pub fn apply(&self, base: &ScenarioConfig, value: f64) -> Result<ScenarioConfig> {
        let mut cfg = base.clone();
        match self {
            Axis::P => cfg.tx_prob = value,
            Axis::G => cfg.tx_prob = value / cfg.n_nodes as f64,
            Axis::Pa => cfg.arrival_prob = value,
            Axis::SigmaEpsSq => cfg.csi = CsiConfig::from_variance(value),
            Axis::N => {
                if !(value >= 1.0 && value.fract() == 0.0) {
                    return Err(Error::config("sweep.values", format!("N must be a positive integer, got {value}")));
                }
                cfg.n_nodes = value as usize;
            }
        }
        cfg.validate()
            .map_err(|e| Error::config("sweep.values", format!("{} = {value}: {e}", self.name())))?;
        Ok(cfg)
    }
}

impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(Axis::P),
            "G" => Ok(Axis::G),
            "p_a" => Ok(Axis::Pa),
            "sigma_eps_sq" => Ok(Axis::SigmaEpsSq),
            "N" => Ok(Axis::N),
            _ => Err(Error::config(
                "sweep.axis",
                format!("expected one of p, G, p_a, sigma_eps_sq, N, got {s:?}"),
            )),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A base scenario and one swept parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: ScenarioConfig,
    /// `None` for a single-point evaluation of `base`.
    pub axis: Option<Axis>,
    pub values: Vec<f64>,
    pub runs_per_point: usize,
}

impl SweepSpec {
    pub fn new(base: ScenarioConfig, axis: Axis, values: Vec<f64>, runs_per_point: usize) -> Self {
        Self { base, axis: Some(axis), values, runs_per_point }
    }

    pub fn single(base: ScenarioConfig) -> Self {
        Self { runs_per_point: base.n_runs, axis: None, values: Vec::new(), base }
    }

    /// Scenario of every sweep point, in sweep order.
    pub fn points(&self) -> Result<Vec<SweepPoint>> {
        if self.runs_per_point == 0 {
            return Err(Error::config("sweep.runs_per_point", "must be at least 1"));
        }
        let Some(axis) = self.axis else {
            let mut config = self.base.clone();
            config.n_runs = self.runs_per_point;
            return Ok(vec![SweepPoint { index: 0, value: None, config }]);
        };
        if self.values.is_empty() {
            return Err(Error::config("sweep.values", "must not be empty"));
        }
        self.values
            .iter()
            .enumerate()
            .map(|(index, &v)| {
                let mut config = axis.apply(&self.base, v)?;
                config.n_runs = self.runs_per_point;
                Ok(SweepPoint { index, value: Some(v), config })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub index: usize,
    pub value: Option<f64>,
    pub config: ScenarioConfig,
}

/// Closed-form metrics of one scenario. A `None` metric has no closed form in
/// the scenario's regime, with the reason in `note`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AnalyticValues {
    pub q_s: Option<f64>,
    pub avg_aoi: Option<f64>,
    pub throughput: Option<f64>,
    pub deadline_violation: Option<f64>,
    pub mean_delay: Option<f64>,
    pub rho: Option<f64>,
    pub stable: Option<bool>,
    pub note: String,
}

impl AnalyticValues {
    fn absent(note: impl Into<String>) -> Self {
        Self { note: note.into(), ..Default::default() }
    }

    /// Closed-form value of a simulated metric, by [`sim::METRICS`] name.
    pub fn metric(&self, name: &str) -> Option<f64> {
        match name {
            "q_s" => self.q_s,
            "avg_aoi" => self.avg_aoi,
            "throughput" => self.throughput,
            "deadline_violation" => self.deadline_violation,
            "mean_delay" => self.mean_delay,
            _ => None,
        }
    }
}

/// Default Monte-Carlo effort for heterogeneous closed forms: about 2·10⁵
/// conditional draws per collision size.
fn default_samples(m: usize) -> usize {
    let orders: usize = (1..=m).product();
    (200_000 / orders).max(100)
}

const UNSTABLE: &str = "unstable queue (q_s <= p_a)";

/// Closed-form metrics of `config`.
///
/// Equal-SNR SIC-RA scenarios use the closed forms directly. Geometric
/// placement with perfect CSI and at most [`MAX_ENUMERATED_NODES`] nodes uses
/// the order-enumerating estimator for each node's success probability.
/// Anything else has no closed form.
pub fn analytic_values(config: &ScenarioConfig, samples_per_order: Option<usize>) -> Result<AnalyticValues> {
    if config.policy != Policy::SicRa {
        return Ok(AnalyticValues::absent(format!("no closed form for policy {}", config.policy)));
    }
    match config.channel {
        ChannelConfig::EqualSnr { .. } => {
            let budget = config.link_budget().expect("equal-SNR budget");
            let imperfect = matches!(config.csi, CsiConfig::Imperfect { .. });
            let r = match analytic_report(&budget, imperfect) {
                Ok(r) => r,
                Err(e @ Error::Metric { .. }) => return Ok(AnalyticValues::absent(e.to_string())),
                Err(e) => return Err(e),
            };
            let delay = if r.stable { mean_delay(&budget, r.q_s).ok() } else { None };
            Ok(AnalyticValues {
                q_s: Some(r.q_s),
                avg_aoi: r.avg_aoi,
                throughput: Some(r.throughput),
                deadline_violation: r.stable.then_some(r.deadline_violation),
                mean_delay: delay,
                rho: Some(r.rho),
                stable: Some(r.stable),
                note: if r.stable { String::new() } else { UNSTABLE.into() },
            })
        }
        ChannelConfig::Geometric(params) => {
            if matches!(config.csi, CsiConfig::Imperfect { .. }) {
                return Ok(AnalyticValues::absent("no closed form for imperfect CSI with unequal powers"));
            }
            if config.n_nodes > MAX_ENUMERATED_NODES {
                return Ok(AnalyticValues::absent(format!(
                    "no closed form for more than {MAX_ENUMERATED_NODES} nodes with unequal powers"
                )));
            }
            heterogeneous(config, &params, samples_per_order)
        }
    }
}

fn heterogeneous(
    config: &ScenarioConfig,
    params: &ChannelParams,
    samples_per_order: Option<usize>,
) -> Result<AnalyticValues> {
    let lambdas: Vec<f64> = node_placement(config)?.iter().map(|p| p.lambda).collect();
    let samples = samples_per_order.unwrap_or_else(|| default_samples(config.n_nodes));
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(u64::MAX);
    let gamma = config.gamma();
    let q: Vec<f64> = (0..config.n_nodes)
        .map(|k| {
            success_update_prob_general(k, &lambdas, config.tx_prob, gamma, params.noise_power, samples, &mut rng)
                .map(|e| e.value)
        })
        .collect::<Result<_>>()?;

    // The queue formulas only read the arrival probability and deadline.
    let budget = LinkBudget::equal_snr(
        config.n_nodes,
        config.tx_prob,
        config.arrival_prob,
        config.deadline_slots,
        0.0,
        gamma,
    );
    let n = config.n_nodes as f64;
    let mean_of = |f: &dyn Fn(f64) -> Result<f64>| -> Option<f64> {
        q.iter().map(|&qs| f(qs).ok()).sum::<Option<f64>>().map(|s| s / n)
    };
    let avg = mean_of(&|qs| avg_aoi(&budget, qs));
    let stable = q.iter().all(|&qs| deadline_violation(&budget, qs).is_ok());
    Ok(AnalyticValues {
        q_s: Some(q.iter().sum::<f64>() / n),
        avg_aoi: avg,
        throughput: Some(q.iter().sum()),
        deadline_violation: mean_of(&|qs| deadline_violation(&budget, qs)),
        mean_delay: mean_of(&|qs| mean_delay(&budget, qs)),
        rho: None,
        stable: Some(stable),
        note: if stable {
            "estimated by order enumeration".into()
        } else {
            format!("estimated by order enumeration; {UNSTABLE} at some node")
        },
    })
}

/// Runs `f` over every point, in parallel, keeping sweep order.
pub fn map_points<T: Send>(
    points: &[SweepPoint],
    f: impl Fn(&SweepPoint) -> Result<T> + Sync + Send,
) -> Result<Vec<T>> {
    use rayon::prelude::*;
    points.par_iter().map(f).collect()
}

/// One metric at one sweep point.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub point: usize,
    pub axis: Option<Axis>,
    pub axis_value: Option<f64>,
    pub config: ScenarioConfig,
    pub metric: &'static str,
    pub analytic: Option<f64>,
    pub sim_mean: Option<f64>,
    pub ci95: Option<f64>,
    pub std_error: Option<f64>,
    /// Runs that produced a value for this metric.
    pub seeds: usize,
    pub z: Option<f64>,
    pub note: String,
}

/// Column names of [`ResultRow::fields`].
pub const RESULT_COLUMNS: [&str; 25] = [
    "point",
    "axis",
    "axis_value",
    "policy",
    "adra_threshold",
    "n_nodes",
    "tx_prob",
    "offered_load",
    "arrival_prob",
    "deadline_slots",
    "drop_on_deadline",
    "sigma_eps_sq",
    "channel",
    "snr_db",
    "rate_threshold",
    "n_slots",
    "seed",
    "metric",
    "analytic",
    "sim_mean",
    "ci95",
    "std_error",
    "seeds",
    "z",
    "note",
];

/// Column names of [`AnalyticRow::fields`].
pub const ANALYTIC_COLUMNS: [&str; 25] = [
    "point",
    "axis",
    "axis_value",
    "policy",
    "adra_threshold",
    "n_nodes",
    "tx_prob",
    "offered_load",
    "arrival_prob",
    "deadline_slots",
    "drop_on_deadline",
    "sigma_eps_sq",
    "channel",
    "snr_db",
    "rate_threshold",
    "n_slots",
    "seed",
    "q_s",
    "avg_aoi",
    "throughput",
    "deadline_violation",
    "mean_delay",
    "rho",
    "stable",
    "note",
];

/// Text of an optional number; empty when absent or NaN.
pub fn fmt_opt(v: Option<f64>) -> String {
    match v {
        Some(x) if !x.is_nan() => x.to_string(),
        _ => String::new(),
    }
}

fn scenario_fields(point: usize, axis: Option<Axis>, value: Option<f64>, c: &ScenarioConfig) -> Vec<String> {
    let snr = match c.channel {
        ChannelConfig::EqualSnr { snr_db, .. } => Some(snr_db),
        ChannelConfig::Geometric(_) => None,
    };
    vec![
        point.to_string(),
        axis.map(|a| a.name().to_owned()).unwrap_or_default(),
        fmt_opt(value),
        c.policy.name().to_owned(),
        c.policy.age_threshold().map(|t| t.to_string()).unwrap_or_default(),
        c.n_nodes.to_string(),
        c.tx_prob.to_string(),
        c.offered_load().to_string(),
        c.arrival_prob.to_string(),
        c.deadline_slots.to_string(),
        c.drop_on_deadline.to_string(),
        c.csi.sigma_eps_sq().to_string(),
        c.channel.mode_name().to_owned(),
        fmt_opt(snr),
        c.channel.rate_threshold().to_string(),
        c.n_slots.to_string(),
        c.seed.to_string(),
    ]
}

impl ResultRow {
    /// Values in [`RESULT_COLUMNS`] order.
    pub fn fields(&self) -> Vec<String> {
        let mut out = scenario_fields(self.point, self.axis, self.axis_value, &self.config);
        out.extend([
            self.metric.to_owned(),
            fmt_opt(self.analytic),
            fmt_opt(self.sim_mean),
            fmt_opt(self.ci95),
            fmt_opt(self.std_error),
            self.seeds.to_string(),
            fmt_opt(self.z),
            self.note.clone(),
        ]);
        out
    }
}

/// Closed-form metrics at one sweep point.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticRow {
    pub point: usize,
    pub axis: Option<Axis>,
    pub axis_value: Option<f64>,
    pub config: ScenarioConfig,
    pub values: AnalyticValues,
}

impl AnalyticRow {
    /// Values in [`ANALYTIC_COLUMNS`] order.
    pub fn fields(&self) -> Vec<String> {
        let v = &self.values;
        let mut out = scenario_fields(self.point, self.axis, self.axis_value, &self.config);
        out.extend([
            fmt_opt(v.q_s),
            fmt_opt(v.avg_aoi),
            fmt_opt(v.throughput),
            fmt_opt(v.deadline_violation),
            fmt_opt(v.mean_delay),
            fmt_opt(v.rho),
            v.stable.map(|s| s.to_string()).unwrap_or_default(),
            v.note.clone(),
        ]);
        out
    }
}

/// Closed-form metrics of every sweep point.
pub fn analyze(spec: &SweepSpec, samples_per_order: Option<usize>) -> Result<Vec<AnalyticRow>> {
    let points = spec.points()?;
    map_points(&points, |pt| {
        Ok(AnalyticRow {
            point: pt.index,
            axis: spec.axis,
            axis_value: pt.value,
            config: pt.config.clone(),
            values: analytic_values(&pt.config, samples_per_order)?,
        })
    })
}

/// Simulates every sweep point.
pub fn simulate(spec: &SweepSpec) -> Result<Vec<(SweepPoint, MetricsReport)>> {
    let points = spec.points()?;
    let reports = map_points(&points, |pt| sim::run(&pt.config))?;
    Ok(points.into_iter().zip(reports).collect())
}

/// Long-format rows of simulated metrics, with closed forms and z-scores when
/// `analytics` is given per point.
pub fn result_rows(
    spec: &SweepSpec,
    results: &[(SweepPoint, MetricsReport)],
    analytics: Option<&[AnalyticValues]>,
) -> Vec<ResultRow> {
    let mut rows = Vec::new();
    for (k, (pt, report)) in results.iter().enumerate() {
        let a = analytics.map(|a| &a[k]);
        for (metric, est) in report.metrics() {
            let seeds = est.count();
            let sim_mean = (seeds > 0).then_some(est.mean);
            let analytic = a.and_then(|a| a.metric(metric));
            let z = match (analytic, sim_mean) {
                (Some(x), Some(_)) => Some(est.summary().z_score(x)),
                _ => None,
            };
            let note = match a {
                _ if seeds == 0 => "no simulated value".into(),
                Some(a) if metric != "drop_rate" => a.note.clone(),
                _ => String::new(),
            };
            rows.push(ResultRow {
                point: pt.index,
                axis: spec.axis,
                axis_value: pt.value,
                config: pt.config.clone(),
                metric,
                analytic,
                sim_mean,
                ci95: sim_mean.map(|_| est.ci95),
                std_error: sim_mean.map(|_| est.std_error),
                seeds,
                z,
                note,
            });
        }
    }
    rows
}

/// Largest `|z|` over the rows that have one, with its row.
pub fn max_deviation(rows: &[ResultRow]) -> Option<&ResultRow> {
    rows.iter()
        .filter(|r| r.z.is_some())
        .max_by(|a, b| a.z.unwrap().abs().total_cmp(&b.z.unwrap().abs()))
}
