//! Ergodic-rate analysis and optimization for an active-IRS-aided
//! point-to-point MIMO link under statistical CSI.
//!
//! The crate has three layers:
//!
//! * [`linalg`] — dense complex Hermitian primitives (eigendecomposition,
//!   matrix square root, log-determinants, resolvent traces) shared by
//!   everything else.
//! * [`channel`] + [`rate`] — the statistical channel description
//!   (Kronecker-correlated Rayleigh fading with an active reflecting
//!   surface) and a Monte-Carlo oracle for the exact normalized ergodic
//!   rate.
//! * [`da`] + [`optim`] — the random-matrix deterministic approximation
//!   of the rate via two coupled fixed-point systems, and an alternating
//!   optimizer for the transmit covariance and the reflection matrix
//!   under the transmit/amplification power budgets.
//!
//! All internal rates are in nats; conversion to bits happens at
//! reporting boundaries. The crate is `no_std`-compatible (with `alloc`);
//! IO, file formats and the CLI live in the companion `airs-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod channel;
pub mod da;
pub mod error;
pub mod linalg;
pub(crate) mod math;
pub mod optim;
pub mod rate;

pub use channel::{ChannelRealization, CorrelationSpec, SystemConfig};
pub use da::{AlphaSolution, DaRate, DeltaSolution, FixedPointOptions};
pub use error::Error;
pub use linalg::{CMat, HermitianMatrix};
pub use optim::{AoOptions, AoTrace, ReflectionParams, TransmitCovariance};
pub use rate::RateReport;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
