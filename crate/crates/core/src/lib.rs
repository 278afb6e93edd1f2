//! Slot-synchronous simulator and closed-form analytics for a slotted-ALOHA
//! uplink whose access point resolves collisions with successive interference
//! cancellation (SIC).
//!
//! - [`channel`]: path loss, block Rayleigh fading, channel-estimation error.
//! - [`sic`]: dynamic-ordered SIC decoding of one slot.
//! - [`analytics`]: success probability, AoI, throughput, delay and deadline
//!   violation in closed form, plus Monte-Carlo oracles.
//! - [`sim`]: queued nodes under SIC-RA, standard slotted ALOHA or ADRA access.
//! - [`sweep`]: parameter sweeps, config files and CSV output.

pub mod analytics;
pub mod channel;
pub mod error;
pub mod sic;
pub mod sim;
pub mod stats;
pub mod sweep;

pub use error::{Error, Result};
