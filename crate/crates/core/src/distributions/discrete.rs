use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ext_real::{ExtReal, Finite, NegInf, PosInf};
use crate::generators::Generator;

/// How far a probability vector may stray from summing to 1 before it is
/// rejected outright.
pub const SIMPLEX_TOL: f64 = 1e-12;

/// A probability distribution over a finite labelled alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDist {
    atoms: Vec<(String, f64)>,
}

impl DiscreteDist {
    /// Validates and wraps a list of `(label, probability)` atoms.
    /// Probabilities must be non-negative and sum to 1 within 1e−12;
    /// labels must be unique.
    pub fn new(atoms: Vec<(String, f64)>) -> Result<DiscreteDist> {
        DiscreteDist::with_tolerance(atoms, SIMPLEX_TOL)
    }

    /// Like [`DiscreteDist::new`] but accepts a mass defect up to `tol`
    /// and renormalizes. Used by the CLI's opt-in renormalize flag.
    pub fn with_tolerance(atoms: Vec<(String, f64)>, tol: f64) -> Result<DiscreteDist> {
        if atoms.is_empty() {
            return Err(Error::InvalidDistribution("no atoms".into()));
        }
        let mut seen = HashSet::new();
        for (label, p) in &atoms {
            if !p.is_finite() || *p < 0.0 {
                return Err(Error::InvalidDistribution(format!(
                    "atom `{label}` has probability {p}"
                )));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::InvalidDistribution(format!("duplicate label `{label}`")));
            }
        }
        let total: f64 = atoms.iter().map(|(_, p)| p).sum();
        if (total - 1.0).abs() > tol {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {total}, not 1 (tolerance {tol:e})"
            )));
        }
        let atoms = if total == 1.0 {
            atoms
        } else {
            atoms.into_iter().map(|(l, p)| (l, p / total)).collect()
        };
        Ok(DiscreteDist { atoms })
    }

    /// Builds a distribution over labels `"0"`, `"1"`, ... from raw
    /// probabilities.
    pub fn from_probs(probs: &[f64]) -> Result<DiscreteDist> {
        DiscreteDist::new(
            probs
                .iter()
                .enumerate()
                .map(|(i, &p)| (i.to_string(), p))
                .collect(),
        )
    }

    pub fn atoms(&self) -> &[(String, f64)] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Probability of `label`; labels absent from the alphabet carry
    /// zero mass.
    pub fn prob(&self, label: &str) -> f64 {
        self.atoms
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, p)| *p)
            .unwrap_or(0.0)
    }

    pub fn probs(&self) -> Vec<f64> {
        self.atoms.iter().map(|(_, p)| *p).collect()
    }
}

/// Pairs up two distributions atom by atom over the union of their
/// alphabets (p's label order first, then q's novel labels).
pub(crate) fn align(p: &DiscreteDist, q: &DiscreteDist) -> Vec<(f64, f64)> {
    let same_labels = p.atoms.len() == q.atoms.len()
        && p.atoms
            .iter()
            .zip(q.atoms.iter())
            .all(|((lp, _), (lq, _))| lp == lq);
    if same_labels {
        return p
            .atoms
            .iter()
            .zip(q.atoms.iter())
            .map(|((_, pp), (_, qp))| (*pp, *qp))
            .collect();
    }
    let mut pairs: Vec<(f64, f64)> = p
        .atoms
        .iter()
        .map(|(label, pp)| (*pp, q.prob(label)))
        .collect();
    for (label, qp) in &q.atoms {
        if p.atoms.iter().all(|(l, _)| l != label) {
            pairs.push((0.0, *qp));
        }
    }
    pairs
}

/// The relative information ı(a) = ln(P(a)/Q(a)) in nats; −∞ when
/// P(a) = 0 < Q(a). Errors when P(a) > 0 = Q(a), since the density
/// dP/dQ does not exist there.
pub fn relative_information(p: &DiscreteDist, q: &DiscreteDist, label: &str) -> Result<ExtReal> {
    let (pa, qa) = (p.prob(label), q.prob(label));
    if pa == 0.0 {
        return Ok(NegInf);
    }
    if qa == 0.0 {
        return Err(Error::AbsoluteContinuity(format!(
            "P({label}) = {pa} > 0 while Q({label}) = 0"
        )));
    }
    Ok(Finite((pa / qa).ln()))
}

/// The (P, Q) context used by the bounded-relative-information bounds:
/// absolute-continuity flags, β₁ and β₂, the minimum of Q, and the
/// range of the relative information over P's support.
///
/// β₁ is the reciprocal essential supremum of dP/dQ under Q (zero when
/// P is not dominated by Q) and β₂ the essential infimum; atoms of
/// Q-measure zero are excluded from both, matching the essential-support
/// convention.
#[derive(Debug, Clone)]
pub struct PairContext {
    pub p: DiscreteDist,
    pub q: DiscreteDist,
    pub p_ac_q: bool,
    pub q_ac_p: bool,
    pub beta1: f64,
    pub beta2: f64,
    pub q_min: f64,
    pub relinfo_min: ExtReal,
    pub relinfo_max: ExtReal,
    max_ratio: ExtReal,
}

impl PairContext {
    /// β₁⁻¹ as the exactly stored maximum likelihood ratio (+∞ when
    /// β₁ = 0), avoiding the double rounding of `1.0 / beta1`.
    pub fn beta1_inv(&self) -> ExtReal {
        self.max_ratio
    }

    /// True when β₁, β₂ both lie strictly inside (0, 1).
    pub fn betas_interior(&self) -> bool {
        self.beta1 > 0.0 && self.beta1 < 1.0 && self.beta2 > 0.0 && self.beta2 < 1.0
    }
}

/// Computes the [`PairContext`] for a pair of distributions on aligned
/// alphabets. Never fails on non-absolute-continuity; the flags encode it.
pub fn pair_context(p: &DiscreteDist, q: &DiscreteDist) -> PairContext {
    let pairs = align(p, q);
    let mut p_ac_q = true;
    let mut q_ac_p = true;
    let mut max_ratio = f64::NEG_INFINITY;
    let mut min_ratio = f64::INFINITY;
    let mut q_min = f64::INFINITY;
    let mut ri_min = PosInf;
    let mut ri_max = NegInf;

    for &(pa, qa) in &pairs {
        if qa > 0.0 {
            q_min = q_min.min(qa);
            let ratio = pa / qa;
            max_ratio = max_ratio.max(ratio);
            min_ratio = min_ratio.min(ratio);
            if pa == 0.0 {
                q_ac_p = false;
            }
        } else if pa > 0.0 {
            p_ac_q = false;
        }
        if pa > 0.0 {
            let ri = if qa > 0.0 { Finite((pa / qa).ln()) } else { PosInf };
            ri_min = ri_min.min(ri);
            ri_max = ri_max.max(ri);
        }
    }

    let (beta1, max_ratio) = if p_ac_q {
        (1.0 / max_ratio, Finite(max_ratio))
    } else {
        (0.0, PosInf)
    };
    let beta2 = if q_ac_p { min_ratio } else { 0.0 };

    PairContext {
        p: p.clone(),
        q: q.clone(),
        p_ac_q,
        q_ac_p,
        beta1,
        beta2,
        q_min,
        relinfo_min: ri_min,
        relinfo_max: ri_max,
        max_ratio,
    }
}

/// D_f(P‖Q) = Σ_{a: Q(a)>0} Q(a)·f(P(a)/Q(a)) in the generator's scale
/// (nats where f carries a logarithm).
///
/// Atoms with P(a) = 0 contribute Q(a)·f(0) through the continuous
/// extension; atoms with P(a) = Q(a) = 0 are dropped; the result is +∞
/// as soon as one term is. Errors unless P ≪ Q.
pub fn divergence(f: &Generator, p: &DiscreteDist, q: &DiscreteDist) -> Result<ExtReal> {
    let pairs = align(p, q);
    divergence_aligned(f, &pairs)
}

pub(crate) fn divergence_probs(f: &Generator, p: &[f64], q: &[f64]) -> Result<ExtReal> {
    debug_assert_eq!(p.len(), q.len());
    let pairs: Vec<(f64, f64)> = p.iter().copied().zip(q.iter().copied()).collect();
    divergence_aligned(f, &pairs)
}

fn divergence_aligned(f: &Generator, pairs: &[(f64, f64)]) -> Result<ExtReal> {
    for &(pa, qa) in pairs {
        if qa == 0.0 && pa > 0.0 {
            return Err(Error::AbsoluteContinuity(format!(
                "P has mass {pa} on an atom where Q vanishes"
            )));
        }
    }
    let mut acc = 0.0f64;
    for &(pa, qa) in pairs {
        if qa == 0.0 {
            continue;
        }
        let term = if pa == 0.0 {
            match f.value_at_zero() {
                PosInf => return Ok(PosInf),
                Finite(v) => qa * v,
                NegInf => unreachable!("f(0) is never -inf by construction"),
            }
        } else {
            qa * f.eval(pa / qa)
        };
        if term.is_nan() {
            return Err(Error::Numerical(format!(
                "generator `{}` produced NaN at t = {}",
                f.name(),
                pa / qa
            )));
        }
        if term == f64::INFINITY {
            return Ok(PosInf);
        }
        acc += term;
    }
    ExtReal::new(acc)
}

/// |P − Q| = Σ_a |P(a) − Q(a)|, which ranges over [0, 2]. Defined for
/// every pair; coincides with `divergence(tv, P, Q)` whenever P ≪ Q.
pub fn total_variation(p: &DiscreteDist, q: &DiscreteDist) -> f64 {
    align(p, q).iter().map(|(pa, qa)| (pa - qa).abs()).sum()
}

/// The mixture (1 − ε)·Q + ε·Q′, which converges to Q in the strong
/// sense that the essential supremum of its density against Q tends
/// to 1 as ε ↓ 0. Requires Q′ ≪ Q.
pub fn mixture_path(q: &DiscreteDist, q_prime: &DiscreteDist, eps: f64) -> Result<DiscreteDist> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::InvalidDistribution(format!("mixture weight {eps} outside [0,1]")));
    }
    let pairs = align(q_prime, q);
    if pairs.iter().any(|&(qp, qa)| qa == 0.0 && qp > 0.0) {
        return Err(Error::AbsoluteContinuity(
            "mixture endpoint is not dominated by the base distribution".into(),
        ));
    }
    // Union alphabet in q-prime-first order, matching `align`.
    let mut labels: Vec<String> = q_prime.atoms().iter().map(|(l, _)| l.clone()).collect();
    for (l, _) in q.atoms() {
        if q_prime.atoms().iter().all(|(lp, _)| lp != l) {
            labels.push(l.clone());
        }
    }
    let atoms = labels
        .into_iter()
        .zip(pairs)
        .map(|(label, (qp, qa))| (label, (1.0 - eps) * qa + eps * qp))
        .collect();
    DiscreteDist::new(atoms)
}
