use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ext_real::{ExtReal, Finite, PosInf};
use crate::generators::Generator;
use crate::quad::adaptive_quadrature;

type DensityFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

const QUAD_TOL: f64 = 1e-9;
const MAX_PANELS: usize = 1 << 14;
/// Densities below this fraction of their peak are treated as tail.
const TAIL_FRACTION: f64 = 1e-15;

/// A pair of 1-D probability densities with a window that contains
/// essentially all of their mass.
#[derive(Clone)]
pub struct DensityPair {
    p: DensityFn,
    q: DensityFn,
    support_hint: (f64, f64),
    closed_form_betas: Option<(f64, f64)>,
}

impl DensityPair {
    /// Wraps two densities after checking that each integrates to 1
    /// within 1e−9 over the hinted support.
    pub fn new(
        p: impl Fn(f64) -> f64 + Send + Sync + 'static,
        q: impl Fn(f64) -> f64 + Send + Sync + 'static,
        support_hint: (f64, f64),
        closed_form_betas: Option<(f64, f64)>,
    ) -> Result<DensityPair> {
        let pair = DensityPair {
            p: Arc::new(p),
            q: Arc::new(q),
            support_hint,
            closed_form_betas,
        };
        for (name, d) in [("p", &pair.p), ("q", &pair.q)] {
            let f = |x: f64| {
                let v = d(x);
                if v < 0.0 || !v.is_finite() {
                    return Err(Error::InvalidDistribution(format!(
                        "density {name} takes value {v} at x = {x}"
                    )));
                }
                Ok(v)
            };
            let (mass, _) =
                adaptive_quadrature(&f, support_hint.0, support_hint.1, QUAD_TOL, MAX_PANELS)?;
            if (mass - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidDistribution(format!(
                    "density {name} integrates to {mass} over the support hint"
                )));
            }
        }
        Ok(pair)
    }

    pub fn p(&self, x: f64) -> f64 {
        (self.p)(x)
    }

    pub fn q(&self, x: f64) -> f64 {
        (self.q)(x)
    }

    pub fn support_hint(&self) -> (f64, f64) {
        self.support_hint
    }

    /// (β₁, β₂, estimated): closed-form values when the pair was built
    /// with them, otherwise essential bounds of p/q estimated on a scan
    /// grid and flagged as such.
    pub fn betas(&self) -> (f64, f64, bool) {
        if let Some((b1, b2)) = self.closed_form_betas {
            return (b1, b2, false);
        }
        let (lo, hi) = self.window();
        let n = 4096;
        let mut max_ratio = f64::NEG_INFINITY;
        let mut min_ratio = f64::INFINITY;
        for i in 0..=n {
            let x = lo + (hi - lo) * i as f64 / n as f64;
            let (px, qx) = (self.p(x), self.q(x));
            if qx > 0.0 && px > 0.0 {
                let r = px / qx;
                max_ratio = max_ratio.max(r);
                min_ratio = min_ratio.min(r);
            }
        }
        (1.0 / max_ratio, min_ratio, true)
    }

    /// The support hint expanded until both densities have decayed to
    /// the tail fraction of their peaks at the edges.
    pub(crate) fn window(&self) -> (f64, f64) {
        let (mut lo, mut hi) = self.support_hint;
        let n = 2048;
        let mut peak = 0.0f64;
        for i in 0..=n {
            let x = lo + (hi - lo) * i as f64 / n as f64;
            peak = peak.max(self.p(x)).max(self.q(x));
        }
        let thr = TAIL_FRACTION * peak;
        let step = (hi - lo) / 8.0;
        let mut guard = 0;
        while (self.p(lo).max(self.q(lo)) > thr) && guard < 256 {
            lo -= step;
            guard += 1;
        }
        guard = 0;
        while (self.p(hi).max(self.q(hi)) > thr) && guard < 256 {
            hi += step;
            guard += 1;
        }
        (lo, hi)
    }
}

/// The value of ∫ q·f(p/q) dμ together with the quadrature error estimate.
#[derive(Debug, Clone, Copy)]
pub struct DensityDivergence {
    pub value: ExtReal,
    pub error_estimate: f64,
}

/// D_f(P‖Q) = ∫ q·f(p/q) dμ by adaptive quadrature with absolute
/// tolerance 1e−9, over the pair's expanded window.
///
/// Nodes with q = 0 < p trip an absolute-continuity error; nodes with
/// p = 0 < q contribute q·f(0), so a generator with f(0) = +∞ makes the
/// divergence +∞ as soon as p vanishes on q's support.
pub fn divergence_density(f: &Generator, pair: &DensityPair) -> Result<DensityDivergence> {
    let (lo, hi) = pair.window();

    // Scan for infinite contributions before integrating: the quadrature
    // cannot represent q·f(0) = ∞ as a node value.
    let f0 = f.value_at_zero();
    if f0 == PosInf {
        let n = 4096;
        for i in 0..=n {
            let x = lo + (hi - lo) * i as f64 / n as f64;
            if pair.q(x) > 0.0 && pair.p(x) == 0.0 {
                return Ok(DensityDivergence {
                    value: PosInf,
                    error_estimate: f64::INFINITY,
                });
            }
        }
    }

    let integrand = |x: f64| -> Result<f64> {
        let (px, qx) = (pair.p(x), pair.q(x));
        if px < 0.0 || qx < 0.0 {
            return Err(Error::InvalidDistribution(format!(
                "negative density at x = {x}"
            )));
        }
        if qx == 0.0 {
            if px > 0.0 {
                return Err(Error::AbsoluteContinuity(format!(
                    "p({x}) = {px} > 0 while q({x}) = 0"
                )));
            }
            return Ok(0.0);
        }
        if px == 0.0 {
            return match f0 {
                Finite(v) => Ok(qx * v),
                _ => Err(Error::Numerical(
                    "integrand is infinite off the scan grid".into(),
                )),
            };
        }
        Ok(qx * f.eval(px / qx))
    };

    let (value, error_estimate) = adaptive_quadrature(&integrand, lo, hi, QUAD_TOL, MAX_PANELS)?;
    Ok(DensityDivergence {
        value: ExtReal::new(value)?,
        error_estimate,
    })
}

/// Two Laplace densities with common rate λ shifted to a₀ and a₁. Their
/// likelihood ratio is pinned to [e^{−λ|a₁−a₀|}, e^{λ|a₁−a₀|}], so
/// β₁ = β₂ = e^{−λ|a₁−a₀|} in closed form.
pub fn laplace_pair(lambda: f64, a0: f64, a1: f64) -> Result<DensityPair> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidDistribution(format!(
            "laplace rate must be positive, got {lambda}"
        )));
    }
    if !(a0.is_finite() && a1.is_finite()) {
        return Err(Error::InvalidDistribution("laplace shifts must be finite".into()));
    }
    let beta = (-lambda * (a1 - a0).abs()).exp();
    let density = move |center: f64| move |x: f64| 0.5 * lambda * (-lambda * (x - center).abs()).exp();
    let margin = 40.0 / lambda;
    let hint = (a0.min(a1) - margin, a0.max(a1) + margin);
    DensityPair::new(density(a0), density(a1), hint, Some((beta, beta)))
}
