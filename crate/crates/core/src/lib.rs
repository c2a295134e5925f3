//! # fdiv
//!
//! f-divergences between probability measures on finite alphabets and
//! 1-D densities, together with a catalog of inequalities between them
//! evaluated as certified bound reports, and numerical searches for the
//! distribution pairs that make the sharp constants tight.
//!
//! The crate is organized around five ideas:
//!
//! - [`generators`]: convex generator functions f with f(1) = 0, their
//!   conjugates f*(t) = t·f(1/t), sums, and offset normalization.
//! - [`distributions`]: finite discrete distributions and 1-D density
//!   pairs, relative information, the β₁/β₂ context of a pair, and the
//!   divergence evaluators (exact sums and adaptive quadrature).
//! - [`kappa`]: analysis of the ratio κ(t) = f(t)/g(t) — its global
//!   supremum, the supremum/infimum restricted to the likelihood-ratio
//!   window (β₂, 1) ∪ (1, β₁⁻¹), and its one-sided limits at 1. These
//!   are the sharp constants of the domination bounds.
//! - [`bounds`]: every inequality in the catalog evaluated on a concrete
//!   pair, producing a [`BoundReport`] with left side, right side, slack,
//!   and precondition status.
//! - [`extremal`]: multi-start derivative-free searches over small
//!   alphabets for pairs approaching the tight constants, plus a
//!   mixture-path probe of the local (P → Q) behavior of ratios.
//!
//! All internal values are in nats; conversion to bits happens only at
//! the presentation layer. Infinite values are first-class through
//! [`ExtReal`], and NaN is never a legal value.
//!
//! The `examples/` directory holds one runnable example per capability;
//! the `fdiv` binary exposes the same operations as subcommands.

pub mod bounds;
pub mod cli;
pub mod distributions;
mod error;
pub mod ext_real;
pub mod extremal;
pub mod generators;
pub mod kappa;
mod quad;

pub use error::{Error, Result};
pub use ext_real::ExtReal;

pub use bounds::{run_catalog, BoundReport, Units};
pub use distributions::{
    divergence, divergence_density, laplace_pair, mixture_path, pair_context,
    relative_information, total_variation, DensityPair, DiscreteDist, PairContext,
};
pub use generators::{builtin, check_convexity, normalize_offset, star, sum, symmetrized, Generator};
pub use kappa::{kappa_at, kappa_limits_at_one, kappa_profile, kappa_restricted, kappa_sup, KappaProfile};
pub use extremal::{
    constrained_ratio_search, local_behavior_probe, ratio_supremum_search, Direction, FeasibleSet,
    RatioObjective, SearchConfig, SearchResult,
};
