//! Generator functions of f-divergences.
//!
//! A generator is a convex function f on (0, ∞) with f(1) = 0, together
//! with the metadata a divergence evaluator needs but cannot recover from
//! a callback:
//!
//! - `value_at_zero`: the continuous extension f(0) = lim_{t↓0} f(t),
//!   which lives in (−∞, +∞];
//! - `star_at_zero`: f*(0) = lim_{u→∞} f(u)/u, the asymptotic slope;
//! - the one-sided derivatives at t = 1, when they exist.
//!
//! The conjugate f*(t) = t·f(1/t) generates the reversed divergence
//! (D_f(P‖Q) = D_{f*}(Q‖P)) and swaps the two limits above. Adding a
//! multiple of (t − 1) to f leaves every divergence unchanged, which is
//! what [`normalize_offset`] exploits to center a generator so that
//! f'(1) = 0 and f ≥ 0.
//!
//! All logarithms are natural; unit conversion happens only at the
//! presentation layer.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ext_real::{ExtReal, Finite, PosInf};

/// Names accepted by [`builtin`], in registry order.
pub const BUILTIN_NAMES: [&str; 7] = [
    "kl",
    "reverse_kl",
    "tv",
    "chi2",
    "reverse_chi2",
    "marton_s",
    "neg_log",
];

type EvalFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A convex generator with its limit metadata. Immutable after
/// construction; cheap to clone and safe to share across threads.
#[derive(Clone)]
pub struct Generator {
    name: String,
    eval: EvalFn,
    value_at_zero: ExtReal,
    star_at_zero: ExtReal,
    deriv_at_one_left: Option<f64>,
    deriv_at_one_right: Option<f64>,
    metadata_estimated: bool,
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Generator")
            .field("name", &self.name)
            .field("value_at_zero", &self.value_at_zero)
            .field("star_at_zero", &self.star_at_zero)
            .field("deriv_at_one_left", &self.deriv_at_one_left)
            .field("deriv_at_one_right", &self.deriv_at_one_right)
            .field("metadata_estimated", &self.metadata_estimated)
            .finish()
    }
}

impl Generator {
    /// Builds a user-defined generator. The callback must satisfy
    /// f(1) = 0 exactly; both limits must be supplied because they
    /// cannot be inferred reliably from a callback.
    pub fn custom(
        name: impl Into<String>,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        value_at_zero: ExtReal,
        star_at_zero: ExtReal,
        derivs_at_one: Option<(f64, f64)>,
    ) -> Result<Generator> {
        let name = name.into();
        let at_one = eval(1.0);
        if at_one != 0.0 {
            return Err(Error::InvalidGenerator {
                name,
                reason: format!("f(1) = {at_one}, expected exactly 0"),
            });
        }
        if matches!(value_at_zero, ExtReal::NegInf) {
            return Err(Error::InvalidGenerator {
                name,
                reason: "f(0) must lie in (-inf, +inf]".into(),
            });
        }
        let (dl, dr) = match derivs_at_one {
            Some((l, r)) => (Some(l), Some(r)),
            None => (None, None),
        };
        Ok(Generator {
            name,
            eval: Arc::new(eval),
            value_at_zero,
            star_at_zero,
            deriv_at_one_left: dl,
            deriv_at_one_right: dr,
            metadata_estimated: false,
        })
    }

    /// Like [`Generator::custom`] but with both limits estimated by
    /// sampling near the domain boundary. The resulting generator carries
    /// an `estimated` flag that propagates into reports built from it.
    pub fn custom_estimated(
        name: impl Into<String>,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Generator> {
        let value_at_zero = ExtReal::new(eval(1e-12))?;
        let star_at_zero = ExtReal::new(eval(1e12) / 1e12)?;
        let mut g = Generator::custom(name, eval, value_at_zero, star_at_zero, None)?;
        g.metadata_estimated = true;
        Ok(g)
    }

    fn built(
        name: &str,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        value_at_zero: ExtReal,
        star_at_zero: ExtReal,
        derivs: (f64, f64),
    ) -> Generator {
        Generator {
            name: name.to_string(),
            eval: Arc::new(eval),
            value_at_zero,
            star_at_zero,
            deriv_at_one_left: Some(derivs.0),
            deriv_at_one_right: Some(derivs.1),
            metadata_estimated: false,
        }
    }

    /// Evaluates f(t) for t in (0, ∞). Use [`Generator::value_at_zero`]
    /// for the t = 0 extension.
    pub fn eval(&self, t: f64) -> f64 {
        debug_assert!(t > 0.0, "generator domain is (0, inf), got {t}");
        (self.eval)(t)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The continuous extension f(0).
    pub fn value_at_zero(&self) -> ExtReal {
        self.value_at_zero
    }

    /// f*(0) = lim_{u→∞} f(u)/u.
    pub fn star_at_zero(&self) -> ExtReal {
        self.star_at_zero
    }

    pub fn deriv_at_one_left(&self) -> Option<f64> {
        self.deriv_at_one_left
    }

    pub fn deriv_at_one_right(&self) -> Option<f64> {
        self.deriv_at_one_right
    }

    /// True when the limit metadata was estimated from samples rather
    /// than supplied or derived analytically.
    pub fn metadata_estimated(&self) -> bool {
        self.metadata_estimated
    }

    /// The two-sided derivative at 1, when both one-sided derivatives
    /// exist and agree.
    pub fn deriv_at_one(&self) -> Option<f64> {
        match (self.deriv_at_one_left, self.deriv_at_one_right) {
            (Some(l), Some(r)) if l == r => Some(l),
            _ => None,
        }
    }
}

/// Looks up a builtin generator by name.
///
/// | name           | f(t)               | divergence            |
/// |----------------|--------------------|-----------------------|
/// | `kl`           | t ln t + (1 − t)   | relative entropy      |
/// | `reverse_kl`   | (t − 1) − ln t     | reversed rel. entropy |
/// | `tv`           | \|t − 1\|          | total variation       |
/// | `chi2`         | (t − 1)²           | χ² divergence         |
/// | `reverse_chi2` | (1 − t)²/t         | reversed χ²           |
/// | `marton_s`     | (t − 1)²·1{t < 1}  | Marton's d₂²          |
/// | `neg_log`      | −ln t              | reversed rel. entropy up to offset |
pub fn builtin(name: &str) -> Result<Generator> {
    let g = match name {
        "kl" => Generator::built(
            "kl",
            |t| t * t.ln() + (1.0 - t),
            Finite(1.0),
            PosInf,
            (0.0, 0.0),
        ),
        "reverse_kl" => Generator::built(
            "reverse_kl",
            |t| (t - 1.0) - t.ln(),
            PosInf,
            Finite(1.0),
            (0.0, 0.0),
        ),
        "tv" => Generator::built("tv", |t| (t - 1.0).abs(), Finite(1.0), Finite(1.0), (-1.0, 1.0)),
        "chi2" => Generator::built(
            "chi2",
            |t| (t - 1.0) * (t - 1.0),
            Finite(1.0),
            PosInf,
            (0.0, 0.0),
        ),
        "reverse_chi2" => Generator::built(
            "reverse_chi2",
            |t| (1.0 - t) * (1.0 - t) / t,
            PosInf,
            Finite(1.0),
            (0.0, 0.0),
        ),
        "marton_s" => Generator::built(
            "marton_s",
            |t| {
                if t < 1.0 {
                    (t - 1.0) * (t - 1.0)
                } else {
                    0.0
                }
            },
            Finite(1.0),
            ExtReal::ZERO,
            (0.0, 0.0),
        ),
        "neg_log" => Generator::built("neg_log", |t| -t.ln(), PosInf, ExtReal::ZERO, (-1.0, -1.0)),
        other => return Err(Error::UnknownGenerator(other.to_string())),
    };
    Ok(g)
}

/// The conjugate generator f*(t) = t·f(1/t).
///
/// f* is convex with f*(1) = 0, and generates the reversed divergence:
/// D_{f*}(Q‖P) = D_f(P‖Q). The limits swap roles — f*(0) = lim f(u)/u
/// and (f*)*(0) = f(0) — and the one-sided derivatives at 1 swap sides
/// with a sign flip.
pub fn star(f: &Generator) -> Generator {
    let inner = Arc::clone(&f.eval);
    Generator {
        name: format!("star({})", f.name),
        eval: Arc::new(move |t: f64| t * inner(1.0 / t)),
        value_at_zero: f.star_at_zero,
        star_at_zero: f.value_at_zero,
        // (f*)'(t) = f(1/t) − f'(1/t)/t, so at 1 the sides swap: the
        // right derivative of f* sees 1/t approach 1 from below.
        deriv_at_one_left: f.deriv_at_one_right.map(|d| -d),
        deriv_at_one_right: f.deriv_at_one_left.map(|d| -d),
        metadata_estimated: f.metadata_estimated,
    }
}

/// Pointwise sum f + g, which generates the sum of the two divergences.
pub fn sum(f: &Generator, g: &Generator) -> Result<Generator> {
    let (fe, ge) = (Arc::clone(&f.eval), Arc::clone(&g.eval));
    let both = |a: Option<f64>, b: Option<f64>| match (a, b) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    };
    Ok(Generator {
        name: format!("{}+{}", f.name, g.name),
        eval: Arc::new(move |t: f64| fe(t) + ge(t)),
        value_at_zero: f.value_at_zero.add(g.value_at_zero)?,
        star_at_zero: f.star_at_zero.add(g.star_at_zero)?,
        deriv_at_one_left: both(f.deriv_at_one_left, g.deriv_at_one_left),
        deriv_at_one_right: both(f.deriv_at_one_right, g.deriv_at_one_right),
        metadata_estimated: f.metadata_estimated || g.metadata_estimated,
    })
}

/// The symmetrized generator f + f*.
pub fn symmetrized(f: &Generator) -> Result<Generator> {
    sum(f, &star(f))
}

/// Subtracts the tangent line at 1: f_b(t) = f(t) − f'(1)·(t − 1).
///
/// This leaves every divergence unchanged while making the stationary
/// point at 1 a minimum, so the centered generator is non-negative.
/// Errors unless both one-sided derivatives at 1 exist and agree.
pub fn normalize_offset(f: &Generator) -> Result<Generator> {
    let d = f
        .deriv_at_one()
        .ok_or_else(|| Error::NotDifferentiableAtOne { name: f.name.clone() })?;
    if d == 0.0 {
        return Ok(f.clone());
    }
    let inner = Arc::clone(&f.eval);
    // f_b(0) = f(0) + f'(1); (f_b)*(0) = f*(0) − f'(1).
    let value_at_zero = f.value_at_zero.add(Finite(d))?;
    let star_at_zero = f.star_at_zero.add(Finite(-d))?;
    Ok(Generator {
        name: format!("centered({})", f.name),
        eval: Arc::new(move |t: f64| inner(t) - d * (t - 1.0)),
        value_at_zero,
        star_at_zero,
        deriv_at_one_left: Some(0.0),
        deriv_at_one_right: Some(0.0),
        metadata_estimated: f.metadata_estimated,
    })
}

/// Stored f(0) metadata together with its provenance flag.
pub fn value_at_zero(f: &Generator) -> (ExtReal, bool) {
    (f.value_at_zero(), f.metadata_estimated())
}

/// Outcome of a midpoint-convexity scan.
#[derive(Debug, Clone)]
pub struct ConvexityReport {
    pub passed: bool,
    /// First violating triple (s, midpoint, t) with the violation size.
    pub witness: Option<(f64, f64, f64, f64)>,
    pub grid_size: usize,
}

/// Samples a log-spaced grid on [1e−6, 1e6] and checks midpoint
/// convexity f((s+t)/2) ≤ (f(s) + f(t))/2 on triples at several span
/// widths. The tolerance is 1e−10 scaled by the magnitude of the values
/// involved, so quadratic generators pass at the far end of the grid.
pub fn check_convexity(f: &Generator, grid_size: usize) -> Result<ConvexityReport> {
    if grid_size < 3 {
        return Err(Error::Numerical("convexity grid needs at least 3 points".into()));
    }
    let (lo, hi) = (1e-6_f64, 1e6_f64);
    let step = (hi / lo).ln() / (grid_size - 1) as f64;
    let grid: Vec<f64> = (0..grid_size).map(|i| lo * (step * i as f64).exp()).collect();
    let vals: Vec<f64> = grid.iter().map(|&t| f.eval(t)).collect();

    for span in [2usize, 8, 64, 512] {
        if span >= grid_size {
            break;
        }
        for i in 0..grid_size - span {
            let (s, t) = (grid[i], grid[i + span]);
            let (fs, ft) = (vals[i], vals[i + span]);
            let mid = 0.5 * (s + t);
            let fmid = f.eval(mid);
            let tol = 1e-10 * (1.0 + fs.abs() + ft.abs());
            let violation = fmid - 0.5 * (fs + ft);
            if violation > tol {
                return Ok(ConvexityReport {
                    passed: false,
                    witness: Some((s, mid, t, violation)),
                    grid_size,
                });
            }
        }
    }
    Ok(ConvexityReport {
        passed: true,
        witness: None,
        grid_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext_real::{Finite, PosInf};

    fn grid() -> Vec<f64> {
        // 0.1, 0.2, ..., 10.0 plus a few awkward points
        let mut g: Vec<f64> = (1..=100).map(|i| i as f64 / 10.0).collect();
        g.retain(|&t| (t - 1.0).abs() > 1e-12);
        g.extend([1e-6, 1e-3, 37.5, 1e3, 1e6]);
        g
    }

    #[test]
    fn builtins_vanish_at_one() {
        for name in BUILTIN_NAMES {
            let g = builtin(name).unwrap();
            assert_eq!(g.eval(1.0), 0.0, "{name}(1) must be exactly 0");
        }
    }

    #[test]
    fn builtin_metadata() {
        assert_eq!(builtin("kl").unwrap().value_at_zero(), Finite(1.0));
        assert_eq!(builtin("kl").unwrap().star_at_zero(), PosInf);
        assert_eq!(builtin("marton_s").unwrap().value_at_zero(), Finite(1.0));
        assert_eq!(builtin("marton_s").unwrap().star_at_zero(), Finite(0.0));
        assert_eq!(builtin("chi2").unwrap().star_at_zero(), PosInf);
        assert_eq!(builtin("neg_log").unwrap().value_at_zero(), PosInf);
        assert_eq!(builtin("neg_log").unwrap().star_at_zero(), Finite(0.0));
    }

    #[test]
    fn unknown_name_errors() {
        assert!(matches!(builtin("hellinger"), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn star_of_kl_is_reverse_kl() {
        let s = star(&builtin("kl").unwrap());
        let rkl = builtin("reverse_kl").unwrap();
        for t in grid() {
            assert!(
                (s.eval(t) - rkl.eval(t)).abs() <= 1e-12 * (1.0 + rkl.eval(t).abs()),
                "mismatch at t={t}"
            );
        }
        assert_eq!(s.value_at_zero(), PosInf);
        assert_eq!(s.star_at_zero(), Finite(1.0));
    }

    #[test]
    fn star_of_tv_is_tv() {
        let s = star(&builtin("tv").unwrap());
        let tv = builtin("tv").unwrap();
        for t in grid() {
            assert!((s.eval(t) - tv.eval(t)).abs() <= 1e-12 * (1.0 + tv.eval(t)));
        }
    }

    #[test]
    fn star_chi2_value() {
        let s = star(&builtin("chi2").unwrap());
        assert!((s.eval(2.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn star_is_involutive() {
        for name in BUILTIN_NAMES {
            let f = builtin(name).unwrap();
            let ss = star(&star(&f));
            for t in grid() {
                let (a, b) = (f.eval(t), ss.eval(t));
                assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()), "{name} at t={t}");
            }
            assert_eq!(ss.value_at_zero(), f.value_at_zero());
            assert_eq!(ss.star_at_zero(), f.star_at_zero());
        }
    }

    #[test]
    fn star_swaps_derivative_sides() {
        let s = star(&builtin("tv").unwrap());
        assert_eq!(s.deriv_at_one_left(), Some(-1.0));
        assert_eq!(s.deriv_at_one_right(), Some(1.0));
    }

    #[test]
    fn normalize_neg_log_gives_reverse_kl() {
        let n = normalize_offset(&builtin("neg_log").unwrap()).unwrap();
        let rkl = builtin("reverse_kl").unwrap();
        for t in grid() {
            assert!((n.eval(t) - rkl.eval(t)).abs() <= 1e-12 * (1.0 + rkl.eval(t).abs()));
        }
        assert_eq!(n.deriv_at_one(), Some(0.0));
        assert_eq!(n.value_at_zero(), PosInf);
        assert_eq!(n.star_at_zero(), Finite(1.0));
    }

    #[test]
    fn normalize_is_identity_for_centered_generators() {
        for name in ["kl", "chi2", "marton_s"] {
            let f = builtin(name).unwrap();
            let n = normalize_offset(&f).unwrap();
            assert_eq!(n.name(), f.name());
            for t in grid() {
                assert_eq!(n.eval(t), f.eval(t));
            }
        }
    }

    #[test]
    fn normalize_rejects_kinked_generators() {
        assert!(matches!(
            normalize_offset(&builtin("tv").unwrap()),
            Err(Error::NotDifferentiableAtOne { .. })
        ));
    }

    #[test]
    fn centered_generators_are_nonnegative() {
        let n = normalize_offset(&builtin("neg_log").unwrap()).unwrap();
        for t in grid() {
            assert!(n.eval(t) >= -1e-15, "centered value negative at t={t}");
        }
    }

    #[test]
    fn convexity_passes_for_builtins() {
        for name in BUILTIN_NAMES {
            let report = check_convexity(&builtin(name).unwrap(), 1000).unwrap();
            assert!(report.passed, "{name} flagged non-convex: {:?}", report.witness);
        }
    }

    #[test]
    fn convexity_fails_with_witness_for_sine() {
        let one = 1.0_f64;
        let f = Generator::custom(
            "sine",
            move |t| t.sin() - one.sin(),
            Finite(-(1.0_f64.sin())),
            Finite(0.0),
            None,
        )
        .unwrap();
        let report = check_convexity(&f, 1000).unwrap();
        assert!(!report.passed);
        assert!(report.witness.is_some());
    }

    #[test]
    fn custom_requires_zero_at_one() {
        let bad = Generator::custom("bad", |t| t, Finite(0.0), Finite(1.0), None);
        assert!(matches!(bad, Err(Error::InvalidGenerator { .. })));
    }

    #[test]
    fn estimated_metadata_flag_propagates() {
        let f = Generator::custom_estimated("quad", |t| (t - 1.0).powi(2)).unwrap();
        assert!(f.metadata_estimated());
        assert!(star(&f).metadata_estimated());
        let (v, estimated) = value_at_zero(&f);
        assert!(estimated);
        assert!((v.to_f64() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn sum_combines_metadata() {
        let f = symmetrized(&builtin("marton_s").unwrap()).unwrap();
        // (s + s*)(0) = 1 + 0, slope at infinity = 0 + 1.
        assert_eq!(f.value_at_zero(), Finite(1.0));
        assert_eq!(f.star_at_zero(), Finite(1.0));
        assert_eq!(f.deriv_at_one(), Some(0.0));
        // s + s* collapses to (t−1)²/max{1,t}.
        for t in grid() {
            let expect = (t - 1.0).powi(2) / t.max(1.0);
            assert!((f.eval(t) - expect).abs() <= 1e-12 * (1.0 + expect));
        }
    }
}
