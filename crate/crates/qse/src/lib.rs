//! Unified (q,s)-entropies of quantum states and channels.
//!
//! The two-parameter entropy family
//! H_q^{(s)}(ρ) = [(tr ρ^q)^s − 1] / ((1−q)s) interpolates the von Neumann
//! (q = 1), Tsallis (s = 1) and Rényi (s → 0) entropies. This crate applies
//! it to quantum channels at desk scale (dense matrices, dimensions up to a
//! few dozen):
//!
//! - [`linalg`]: complex dense linear algebra — Hilbert-Schmidt inner
//!   products, Schatten norms, Hermitian spectra, partial traces, and the
//!   support-dimension factor relating Schatten norms of different orders.
//! - [`entropy`]: the (q,s) family on spectra, classical distributions and
//!   density operators, with exact handling of the q = 1 and s = 0 limits.
//! - [`channel`]: Kraus sets and Choi (rescaled dynamical) matrices,
//!   conversions, tensor products, CPTP validation, standard channels, and
//!   seeded random channels/states/unitaries.
//! - [`unraveling`]: effect-probability Gram matrices, extremal unravelings
//!   minimizing the effect entropy, and the input-entropy lower bound.
//! - [`exchange`]: entropy exchange via the environment (W matrix) with a
//!   purification-route oracle, triangle relations, and two-sided bounds on
//!   the output entropy of maximally entangled inputs.
//! - [`bounds`]: map entropies, the exact additivity identity with its
//!   sub/superadditivity classification, and Fannes-type continuity bounds.
//! - [`verify`]: randomized verification suites behind the `qse verify` and
//!   `qse scan` commands.
//!
//! The `qse` binary exposes the functionality as a small CLI; see the
//! `examples/` directory for library walkthroughs of each capability.

pub mod bounds;
pub mod channel;
pub mod cli;
pub mod entropy;
pub mod error;
pub mod exchange;
pub mod io;
pub mod linalg;
pub mod report;
pub mod unraveling;
pub mod verify;

pub use bounds::{
    additivity_residual, classify_additivity, fannes_frobenius_global_bound,
    fannes_frobenius_small_bound, fannes_trace_bound, frobenius_distance_as_2mean, map_entropy,
    AdditivityClass, BoundResult, NormKind,
};
pub use channel::{
    haar_random_unitary, maximally_entangled_state, random_channel, random_density,
    standard_channel, validate_cptp, ChannelKind, ChoiMatrix, CptpReport, KrausSet, UnitaryMatrix,
};
pub use entropy::{
    binary_tsallis, eta_q, q_log, renyi_tsallis_bridge, unified_entropy,
    unified_entropy_spectrum, DensityOperator, EntropyMode, EntropyParams, ProbabilityVector,
};
pub use error::{QseError, Result};
pub use exchange::{
    check_entangled_output_bounds, check_triangle_relations, entropy_exchange,
    entropy_exchange_via_purification, exchange_matrix, purify, stinespring_isometry, Purification,
};
pub use linalg::{
    hermitian_eig, hs_inner, kron, partial_trace, q_mean, schatten_bound_factor, schatten_norm,
    singular_values, support_dim, CMatrix, CVector, HermitianSpectrum, Subsystem,
};
pub use report::{CheckReport, IneqMargin, SuiteReport};
pub use unraveling::{
    check_extremal_minimality, check_input_entropy_bound, effect_gram, extremal_unraveling,
    unraveling_entropy, EffectGram, ExtremalUnraveling,
};
