//! Finite discrete distributions, 1-D density pairs, relative
//! information, and the core f-divergence evaluator.
//!
//! Discrete distributions are compared by atom label; a label missing
//! from one side is an explicit zero atom, which keeps absolute-
//! continuity checks exact rather than tolerance-based. Zero-probability
//! conventions follow the dQ-integral: atoms with Q(a) = 0 are dropped
//! from the divergence sum and from essential suprema/infima, and atoms
//! with P(a) = 0 < Q(a) contribute Q(a)·f(0) through the generator's
//! continuous extension.

mod density;
mod discrete;

pub use density::{divergence_density, laplace_pair, DensityDivergence, DensityPair};
pub use discrete::{
    divergence, mixture_path, pair_context, relative_information, total_variation, DiscreteDist,
    PairContext,
};

pub(crate) use discrete::divergence_probs;
