//! Dynamic-ordered successive interference cancellation at the access point.
//!
//! Collided signals are decoded strongest first. Each decoded signal is
//! subtracted from the composite; with imperfect channel estimates the
//! subtraction leaves the estimation-error power behind as extra interference.
//! The first failed signal ends the slot.

use std::cmp::Ordering;

/// Which power the AP uses to rank collided signals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsiMode {
    Perfect,
    Imperfect,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReceptionEntry {
    pub node_id: usize,
    pub true_power: f64,
    pub estimated_power: f64,
    pub residual_power: f64,
}

impl ReceptionEntry {
    /// Entry for a perfectly estimated channel.
    pub fn perfect(node_id: usize, power: f64) -> Self {
        Self {
            node_id,
            true_power: power,
            estimated_power: power,
            residual_power: 0.0,
        }
    }
}

/// Everything the AP hears in one slot.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SlotReception {
    pub entries: Vec<ReceptionEntry>,
}

impl SlotReception {
    pub fn new(entries: Vec<ReceptionEntry>) -> Self {
        Self { entries }
    }

    pub fn from_powers(powers: &[(usize, f64)]) -> Self {
        Self::new(
            powers
                .iter()
                .map(|&(id, p)| ReceptionEntry::perfect(id, p))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn clear(&mut self) {
        self.entries.clear();
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct DecodeResult {
    /// Node ids in decoding order.
    pub order: Vec<usize>,
    /// Length of the successfully decoded prefix of `order`.
    pub decoded_count: usize,
    /// Decoded flag per entry of the input reception (same indexing).
    pub per_node: Vec<bool>,
}

impl DecodeResult {
    pub fn decoded(&self) -> &[usize] {
        &self.order[..self.decoded_count]
    }
}

/// Indices into `reception.entries`, strongest first. Ties go to the lower node id.
pub fn order_indices(reception: &SlotReception, mode: CsiMode) -> Vec<usize> {
    let key = |e: &ReceptionEntry| match mode {
        CsiMode::Perfect => e.true_power,
        CsiMode::Imperfect => e.estimated_power,
    };
    let mut idx: Vec<usize> = (0..reception.entries.len()).collect();
    idx.sort_by(|&a, &b| {
        let (ea, eb) = (&reception.entries[a], &reception.entries[b]);
        key(eb)
            .partial_cmp(&key(ea))
            .unwrap_or(Ordering::Equal)
            .then(ea.node_id.cmp(&eb.node_id))
    });
    idx
}

/// Decoding order as node ids.
pub fn order_slot(reception: &SlotReception, mode: CsiMode) -> Vec<usize> {
    order_indices(reception, mode)
        .into_iter()
        .map(|i| reception.entries[i].node_id)
        .collect()
}

/// SINR of each rank in `order`, assuming every earlier rank was cancelled.
///
/// Rank `i` sees the noise, the true power of all later ranks and the
/// cancellation residuals of ranks `1..=i` (its own included).
pub fn rank_sinrs(
    reception: &SlotReception,
    order: &[usize],
    noise_power: f64,
    mode: CsiMode,
) -> Vec<f64> {
    let entries = &reception.entries;
    // tail[k] = Σ true power of ranks after k.
    let mut tail = vec![0.0; order.len()];
    for k in (0..order.len().saturating_sub(1)).rev() {
        tail[k] = tail[k + 1] + entries[order[k + 1]].true_power;
    }
    let mut residual = 0.0;
    order
        .iter()
        .zip(&tail)
        .map(|(&i, &later)| {
            let e = &entries[i];
            if mode == CsiMode::Imperfect {
                residual += e.residual_power;
            }
            e.true_power / (noise_power + later + residual)
        })
        .collect()
}

/// Runs the SIC chain over one slot.
pub fn decode_slot(
    reception: &SlotReception,
    noise_power: f64,
    gamma: f64,
    mode: CsiMode,
) -> DecodeResult {
    let order = order_indices(reception, mode);
    let sinrs = rank_sinrs(reception, &order, noise_power, mode);
    let decoded_count = sinrs.iter().take_while(|&&s| s >= gamma).count();

    let mut per_node = vec![false; reception.entries.len()];
    for &i in &order[..decoded_count] {
        per_node[i] = true;
    }
    DecodeResult {
        order: order.iter().map(|&i| reception.entries[i].node_id).collect(),
        decoded_count,
        per_node,
    }
}
