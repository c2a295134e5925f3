//! Analysis of the ratio κ(t) = f(t)/g(t) of two generators.
//!
//! The supremum of κ over (0,1) ∪ (1,∞) is the sharp constant in the
//! domination bound D_f ≤ κ̄·D_g, and the supremum/infimum restricted to
//! the likelihood-ratio window (β₂, 1) ∪ (1, β₁⁻¹) gives the tightened
//! constants available under bounded relative information. The one-sided
//! limits of κ at 1 control the local behavior of the two divergences
//! along any path P → Q with essentially bounded density.
//!
//! Suprema are located by a log-spaced scan with golden-section
//! refinement around each interior local extremum, plus analytic
//! boundary candidates: f(0)/g(0) at t ↓ 0, the slope ratio
//! f*(0)/g*(0) at t → ∞, and Richardson-extrapolated limits at t → 1.
//! Indeterminate boundary ratios (∞/∞) fall back to an evaluation at the
//! domain edge and are flagged as estimated.

use crate::error::{Error, Result};
use crate::ext_real::{ExtReal, Finite, NegInf, PosInf};
use crate::generators::Generator;

/// Knobs for the scan-and-refine search. The defaults match the
/// accuracy the rest of the crate assumes (1e−6 relative on finite
/// suprema).
#[derive(Debug, Clone)]
pub struct KappaConfig {
    /// Log-spaced scan points on each side of 1.
    pub grid_per_side: usize,
    /// Scan domain; boundary behavior beyond it is handled analytically.
    pub domain: (f64, f64),
    /// Relative width at which golden-section refinement stops.
    pub refine_rel_tol: f64,
}

impl Default for KappaConfig {
    fn default() -> Self {
        KappaConfig {
            grid_per_side: 4096,
            domain: (1e-9, 1e9),
            refine_rel_tol: 1e-10,
        }
    }
}

impl KappaConfig {
    /// A cheaper profile for inner loops that evaluate κ* per pair.
    pub fn light() -> Self {
        KappaConfig {
            grid_per_side: 512,
            ..KappaConfig::default()
        }
    }
}

/// Where an extremum of κ was located.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KappaWitness {
    AtZero,
    AtOneLeft,
    AtOneRight,
    AtInfinity,
    Interior(f64),
}

/// An extremal value of κ with its witness. `estimated` marks values
/// that came from an indeterminate-boundary fallback evaluation.
#[derive(Debug, Clone, Copy)]
pub struct KappaExtremum {
    pub value: ExtReal,
    pub witness: KappaWitness,
    pub estimated: bool,
}

/// Supremum and infimum of κ over a restricted window.
#[derive(Debug, Clone, Copy)]
pub struct WindowExtrema {
    pub sup: KappaExtremum,
    pub inf: KappaExtremum,
}

/// The full κ analysis of a generator pair.
#[derive(Debug, Clone)]
pub struct KappaProfile {
    pub f_name: String,
    pub g_name: String,
    pub kappa_bar: ExtReal,
    pub kappa_star_sup: ExtReal,
    pub kappa_star_inf: ExtReal,
    /// The window (β₂, β₁⁻¹) the starred values refer to.
    pub window: (f64, ExtReal),
    pub limit_left_one: ExtReal,
    pub limit_right_one: ExtReal,
    pub argmax: KappaWitness,
    pub estimated: bool,
}

/// κ(t) = f(t)/g(t) for t in (0,1) ∪ (1,∞). Errors at t = 1 (use
/// [`kappa_limits_at_one`]) and wherever g is not positive.
pub fn kappa_at(f: &Generator, g: &Generator, t: f64) -> Result<ExtReal> {
    if !(t > 0.0) || t == 1.0 || !t.is_finite() {
        return Err(Error::KappaDomain(t));
    }
    let gv = g.eval(t);
    if !(gv > 0.0) {
        return Err(Error::DominationHypothesis { t, value: gv });
    }
    let fv = f.eval(t);
    if fv.is_nan() {
        return Err(Error::Numerical(format!(
            "generator `{}` produced NaN at t = {t}",
            f.name()
        )));
    }
    ExtReal::new(fv / gv)
}

/// Supremum of κ over (0,1) ∪ (1,∞), boundary limits included.
pub fn kappa_sup(f: &Generator, g: &Generator) -> Result<KappaExtremum> {
    kappa_sup_with(f, g, &KappaConfig::default())
}

pub fn kappa_sup_with(f: &Generator, g: &Generator, cfg: &KappaConfig) -> Result<KappaExtremum> {
    let mut candidates = boundary_candidates(f, g, cfg)?;
    let (left, right) = scan_windows(cfg.domain, None, None, cfg);
    for window in [left, right] {
        let (max, _min) = scan_extrema(f, g, window, cfg)?;
        candidates.extend(max);
    }
    Ok(pick_max(&candidates))
}

/// Supremum and infimum of κ over (β₂, 1) ∪ (1, β₁⁻¹), with the open
/// endpoints entering as one-sided limit candidates (κ is continuous, so
/// the endpoint value itself is the limit). β₁ = 0 extends the right
/// window to ∞ and β₂ = 0 the left window to 0.
pub fn kappa_restricted(
    f: &Generator,
    g: &Generator,
    beta1: f64,
    beta2: f64,
) -> Result<WindowExtrema> {
    kappa_restricted_with(f, g, beta1, beta2, &KappaConfig::default())
}

pub fn kappa_restricted_with(
    f: &Generator,
    g: &Generator,
    beta1: f64,
    beta2: f64,
    cfg: &KappaConfig,
) -> Result<WindowExtrema> {
    for (name, b) in [("beta1", beta1), ("beta2", beta2)] {
        if !(0.0..1.0).contains(&b) {
            return Err(Error::Numerical(format!(
                "{name} = {b} outside [0, 1) for a restricted window"
            )));
        }
    }

    let mut candidates = Vec::new();

    // Endpoint candidates. A zero β falls back to the matching global
    // boundary candidate.
    if beta2 > 0.0 {
        let v = kappa_at(f, g, beta2)?;
        candidates.push(Candidate::exact(v, KappaWitness::Interior(beta2)));
    } else {
        candidates.push(zero_boundary_candidate(f, g, cfg)?);
    }
    if beta1 > 0.0 {
        let hi = 1.0 / beta1;
        let v = kappa_at(f, g, hi)?;
        candidates.push(Candidate::exact(v, KappaWitness::Interior(hi)));
    } else {
        candidates.push(infinity_boundary_candidate(f, g, cfg)?);
    }

    let (ll, lr) = kappa_limits_at_one(f, g, None)?;
    candidates.push(Candidate::exact(ll, KappaWitness::AtOneLeft));
    candidates.push(Candidate::exact(lr, KappaWitness::AtOneRight));

    let lo = if beta2 > 0.0 { Some(beta2) } else { None };
    let hi = if beta1 > 0.0 { Some(1.0 / beta1) } else { None };
    let (left, right) = scan_windows(cfg.domain, lo, hi, cfg);
    let mut min_candidates = candidates.clone();
    for window in [left, right] {
        let (max, min) = scan_extrema(f, g, window, cfg)?;
        candidates.extend(max);
        min_candidates.extend(min);
    }

    Ok(WindowExtrema {
        sup: pick_max(&candidates),
        inf: pick_min(&min_candidates),
    })
}

/// One-sided limits of κ at t = 1 via Richardson extrapolation of the
/// sequences t = 1 ± h₀·2⁻ᵏ, to roughly 1e−8 on smooth ratios. When the
/// second derivatives of f and g at 1 are known, passing them short-
/// circuits the extrapolation with the analytic ratio f''(1)/g''(1)
/// (both generators are then assumed offset-normalized).
pub fn kappa_limits_at_one(
    f: &Generator,
    g: &Generator,
    second_derivs: Option<(f64, f64)>,
) -> Result<(ExtReal, ExtReal)> {
    if let Some((fpp, gpp)) = second_derivs {
        if !(gpp > 0.0) || !fpp.is_finite() {
            return Err(Error::Numerical(format!(
                "analytic curvature ratio needs g''(1) > 0, got f''={fpp}, g''={gpp}"
            )));
        }
        let v = Finite(fpp / gpp);
        return Ok((v, v));
    }
    let left = one_sided_limit(f, g, -1.0)?;
    let right = one_sided_limit(f, g, 1.0)?;
    Ok((left, right))
}

/// Assembles the full κ profile of a pair for a given (β₁, β₂).
pub fn kappa_profile(
    f: &Generator,
    g: &Generator,
    beta1: f64,
    beta2: f64,
) -> Result<KappaProfile> {
    let cfg = KappaConfig::default();
    let bar = kappa_sup_with(f, g, &cfg)?;
    let window = kappa_restricted_with(f, g, beta1, beta2, &cfg)?;
    let (ll, lr) = kappa_limits_at_one(f, g, None)?;
    Ok(KappaProfile {
        f_name: f.name().to_string(),
        g_name: g.name().to_string(),
        kappa_bar: bar.value,
        kappa_star_sup: window.sup.value,
        kappa_star_inf: window.inf.value,
        window: (
            beta2,
            if beta1 > 0.0 { Finite(1.0 / beta1) } else { PosInf },
        ),
        limit_left_one: ll,
        limit_right_one: lr,
        argmax: bar.witness,
        estimated: bar.estimated || window.sup.estimated || window.inf.estimated,
    })
}

// ---------------------------------------------------------------------------
// Candidate machinery
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: ExtReal,
    witness: KappaWitness,
    estimated: bool,
}

impl Candidate {
    fn exact(value: ExtReal, witness: KappaWitness) -> Candidate {
        Candidate {
            value,
            witness,
            estimated: false,
        }
    }
}

fn pick_max(candidates: &[Candidate]) -> KappaExtremum {
    let best = candidates
        .iter()
        .max_by(|a, b| a.value.partial_cmp(&b.value).expect("ExtReal order is total"))
        .expect("candidate list is never empty");
    KappaExtremum {
        value: best.value,
        witness: best.witness,
        estimated: best.estimated,
    }
}

fn pick_min(candidates: &[Candidate]) -> KappaExtremum {
    let best = candidates
        .iter()
        .min_by(|a, b| a.value.partial_cmp(&b.value).expect("ExtReal order is total"))
        .expect("candidate list is never empty");
    KappaExtremum {
        value: best.value,
        witness: best.witness,
        estimated: best.estimated,
    }
}

fn boundary_candidates(f: &Generator, g: &Generator, cfg: &KappaConfig) -> Result<Vec<Candidate>> {
    let (ll, lr) = kappa_limits_at_one(f, g, None)?;
    Ok(vec![
        zero_boundary_candidate(f, g, cfg)?,
        infinity_boundary_candidate(f, g, cfg)?,
        Candidate::exact(ll, KappaWitness::AtOneLeft),
        Candidate::exact(lr, KappaWitness::AtOneRight),
    ])
}

/// lim_{t↓0} κ(t), resolved from the stored f(0), g(0) metadata.
fn zero_boundary_candidate(f: &Generator, g: &Generator, cfg: &KappaConfig) -> Result<Candidate> {
    limit_ratio_candidate(
        f.value_at_zero(),
        g.value_at_zero(),
        f,
        g,
        cfg.domain.0,
        KappaWitness::AtZero,
    )
}

/// lim_{t→∞} κ(t) = f*(0)/g*(0), the ratio of asymptotic slopes.
fn infinity_boundary_candidate(
    f: &Generator,
    g: &Generator,
    cfg: &KappaConfig,
) -> Result<Candidate> {
    limit_ratio_candidate(
        f.star_at_zero(),
        g.star_at_zero(),
        f,
        g,
        cfg.domain.1,
        KappaWitness::AtInfinity,
    )
}

fn limit_ratio_candidate(
    num: ExtReal,
    den: ExtReal,
    f: &Generator,
    g: &Generator,
    fallback_t: f64,
    witness: KappaWitness,
) -> Result<Candidate> {
    let estimate = |fv: &Generator, gv: &Generator| -> Result<Candidate> {
        let v = kappa_at(fv, gv, fallback_t)?;
        Ok(Candidate {
            value: v,
            witness,
            estimated: true,
        })
    };
    let candidate = match (num, den) {
        (Finite(a), Finite(b)) => {
            if b > 0.0 {
                Candidate::exact(Finite(a / b), witness)
            } else if a != 0.0 && b == 0.0 {
                Candidate::exact(if a > 0.0 { PosInf } else { NegInf }, witness)
            } else {
                // 0/0: indeterminate, fall back to an edge evaluation.
                return estimate(f, g);
            }
        }
        (PosInf, Finite(_)) => Candidate::exact(PosInf, witness),
        (NegInf, Finite(_)) => Candidate::exact(NegInf, witness),
        (Finite(_), PosInf) => Candidate::exact(Finite(0.0), witness),
        // ∞/∞: indeterminate.
        _ => return estimate(f, g),
    };
    Ok(candidate)
}

// ---------------------------------------------------------------------------
// Interior scan
// ---------------------------------------------------------------------------

/// Log-space scan windows strictly inside (lo, 1) and (1, hi).
fn scan_windows(
    domain: (f64, f64),
    restrict_lo: Option<f64>,
    restrict_hi: Option<f64>,
    _cfg: &KappaConfig,
) -> ((f64, f64), (f64, f64)) {
    let lo = restrict_lo.unwrap_or(domain.0).max(domain.0);
    let hi = restrict_hi.unwrap_or(domain.1).min(domain.1);
    ((lo, 1.0), (1.0, hi))
}

/// Scans κ on a log grid over one side of 1 and refines every interior
/// local maximum (and minimum) by golden section in log-space. Returns
/// (max candidates, min candidates).
fn scan_extrema(
    f: &Generator,
    g: &Generator,
    window: (f64, f64),
    cfg: &KappaConfig,
) -> Result<(Vec<Candidate>, Vec<Candidate>)> {
    let (lo, hi) = window;
    if !(lo > 0.0 && hi > lo) {
        return Ok((Vec::new(), Vec::new()));
    }
    let n = cfg.grid_per_side.max(8);
    // Log-space bounds, staying strictly off t = 1: the side that ends at
    // 1 stops one grid step short of it.
    let (ulo, uhi) = if hi == 1.0 {
        let a = lo.ln();
        (a, a / n as f64)
    } else if lo == 1.0 {
        let b = hi.ln();
        (b / n as f64, b)
    } else {
        (lo.ln(), hi.ln())
    };
    if !(uhi > ulo) {
        return Ok((Vec::new(), Vec::new()));
    }

    let us: Vec<f64> = (0..n)
        .map(|i| ulo + (uhi - ulo) * i as f64 / (n - 1) as f64)
        .collect();
    let mut vals = Vec::with_capacity(n);
    for &u in &us {
        let v = kappa_at(f, g, u.exp())?;
        match v {
            Finite(x) => vals.push(x),
            PosInf => {
                return Ok((
                    vec![Candidate::exact(PosInf, KappaWitness::Interior(u.exp()))],
                    Vec::new(),
                ))
            }
            NegInf => {
                return Ok((
                    Vec::new(),
                    vec![Candidate::exact(NegInf, KappaWitness::Interior(u.exp()))],
                ))
            }
        }
    }

    let mut maxima = Vec::new();
    let mut minima = Vec::new();
    // Grid end values are candidates as they stand; boundary limits are
    // handled analytically elsewhere.
    maxima.push(Candidate::exact(Finite(vals[0]), KappaWitness::Interior(us[0].exp())));
    maxima.push(Candidate::exact(
        Finite(vals[n - 1]),
        KappaWitness::Interior(us[n - 1].exp()),
    ));
    minima.push(Candidate::exact(Finite(vals[0]), KappaWitness::Interior(us[0].exp())));
    minima.push(Candidate::exact(
        Finite(vals[n - 1]),
        KappaWitness::Interior(us[n - 1].exp()),
    ));

    for i in 1..n - 1 {
        if vals[i] >= vals[i - 1] && vals[i] >= vals[i + 1] {
            let (u, v) = golden_refine(f, g, us[i - 1], us[i + 1], cfg.refine_rel_tol, true)?;
            maxima.push(Candidate::exact(Finite(v), KappaWitness::Interior(u.exp())));
        }
        if vals[i] <= vals[i - 1] && vals[i] <= vals[i + 1] {
            let (u, v) = golden_refine(f, g, us[i - 1], us[i + 1], cfg.refine_rel_tol, false)?;
            minima.push(Candidate::exact(Finite(v), KappaWitness::Interior(u.exp())));
        }
    }
    Ok((maxima, minima))
}

/// Golden-section search for an extremum of u ↦ κ(eᵘ) inside [a, b].
fn golden_refine(
    f: &Generator,
    g: &Generator,
    a: f64,
    b: f64,
    tol: f64,
    maximize: bool,
) -> Result<(f64, f64)> {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let eval = |u: f64| -> Result<f64> {
        Ok(match kappa_at(f, g, u.exp())? {
            Finite(x) => x,
            PosInf => f64::MAX,
            NegInf => f64::MIN,
        })
    };
    let (mut a, mut b) = (a, b);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    let better = |x: f64, y: f64| if maximize { x > y } else { x < y };
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if better(fc, fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = eval(d)?;
        }
    }
    let u = 0.5 * (a + b);
    Ok((u, eval(u)?))
}

// ---------------------------------------------------------------------------
// Limits at one
// ---------------------------------------------------------------------------

fn one_sided_limit(f: &Generator, g: &Generator, side: f64) -> Result<ExtReal> {
    const H0: f64 = 0.25;
    const STEPS: usize = 18;

    let mut raw = Vec::with_capacity(STEPS);
    for k in 0..STEPS {
        let h = H0 * 0.5f64.powi(k as i32);
        let t = 1.0 + side * h;
        let v = match kappa_at(f, g, t)? {
            Finite(x) => x,
            PosInf => return Ok(PosInf),
            NegInf => return Ok(NegInf),
        };
        raw.push(v);

        // Divergence detection: sustained geometric growth well past the
        // starting scale means the limit is infinite.
        if k >= 4 {
            let window = &raw[k - 4..=k];
            let growing = window.windows(2).all(|w| w[1].abs() > w[0].abs() * 1.4);
            if growing && v.abs() > 1e3 * (1.0 + raw[0].abs()) {
                return Ok(if v > 0.0 { PosInf } else { NegInf });
            }
        }
    }

    // Richardson table for a step-halving sequence with error expansion
    // in integer powers of h.
    let n = raw.len();
    let mut table = vec![raw.clone()];
    let mut best = raw[n - 1];
    let mut best_gap = f64::INFINITY;
    for j in 1..n {
        let prev = &table[j - 1];
        let mut row = Vec::with_capacity(n - j);
        let factor = 2f64.powi(j as i32) - 1.0;
        for i in 0..prev.len() - 1 {
            row.push(prev[i + 1] + (prev[i + 1] - prev[i]) / factor);
        }
        if let (Some(&last), Some(&prev_last)) = (row.last(), prev.last()) {
            let gap = (last - prev_last).abs();
            if gap < best_gap {
                best_gap = gap;
                best = last;
            }
            if gap <= 1e-9 * (1.0 + last.abs()) {
                return ExtReal::new(last);
            }
        }
        table.push(row);
    }

    // Accept a slowly converging sequence if the raw tail is Cauchy at
    // the documented accuracy; otherwise report non-convergence.
    let tail_gap = (raw[n - 1] - raw[n - 2]).abs();
    if tail_gap <= 1e-6 * (1.0 + raw[n - 1].abs()) || best_gap <= 1e-6 * (1.0 + best.abs()) {
        return ExtReal::new(best);
    }
    Err(Error::Numerical(format!(
        "one-sided kappa limit at 1 ({}) did not converge: last values {:?}",
        if side < 0.0 { "left" } else { "right" },
        &raw[n.saturating_sub(3)..]
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{builtin, star, sum, symmetrized};

    fn gen(name: &str) -> Generator {
        builtin(name).unwrap()
    }

    #[test]
    fn kappa_at_examples() {
        let v = kappa_at(&gen("kl"), &gen("chi2"), 2.0).unwrap().finite().unwrap();
        assert!((v - (2.0 * std::f64::consts::LN_2 - 1.0)).abs() < 1e-15);

        let same = kappa_at(&gen("kl"), &gen("kl"), 3.7).unwrap().finite().unwrap();
        assert!((same - 1.0).abs() < 1e-12);

        let v = kappa_at(&gen("chi2"), &gen("tv"), 3.0).unwrap().finite().unwrap();
        assert!((v - 2.0).abs() < 1e-15);
    }

    #[test]
    fn kappa_at_domain_errors() {
        assert!(matches!(
            kappa_at(&gen("kl"), &gen("chi2"), 1.0),
            Err(Error::KappaDomain(_))
        ));
        // marton_s vanishes on [1, inf), violating the positivity hypothesis.
        assert!(matches!(
            kappa_at(&gen("kl"), &gen("marton_s"), 2.0),
            Err(Error::DominationHypothesis { .. })
        ));
    }

    #[test]
    fn sup_of_identity_ratio_is_one() {
        for name in ["kl", "reverse_kl", "tv", "chi2", "reverse_chi2"] {
            let f = gen(name);
            let sup = kappa_sup(&f, &f).unwrap();
            assert!(
                (sup.value.to_f64() - 1.0).abs() <= 1e-9,
                "{name}: {:?}",
                sup.value
            );
        }
    }

    #[test]
    fn symmetrized_kl_over_symmetrized_chi2_is_half() {
        let f = symmetrized(&gen("kl")).unwrap();
        let g = sum(&gen("chi2"), &gen("reverse_chi2")).unwrap();
        let sup = kappa_sup(&f, &g).unwrap();
        assert!((sup.value.to_f64() - 0.5).abs() <= 1e-8, "{:?}", sup);
        assert!(matches!(sup.witness, KappaWitness::AtOneLeft | KappaWitness::AtOneRight));
    }

    #[test]
    fn symmetrized_marton_over_kl_is_two() {
        let f = symmetrized(&gen("marton_s")).unwrap();
        let sup = kappa_sup(&f, &gen("kl")).unwrap();
        assert!((sup.value.to_f64() - 2.0).abs() <= 1e-8, "{:?}", sup);
    }

    #[test]
    fn chi2_over_tv_diverges() {
        let sup = kappa_sup(&gen("chi2"), &gen("tv")).unwrap();
        assert_eq!(sup.value, PosInf);
        assert_eq!(sup.witness, KappaWitness::AtInfinity);
    }

    #[test]
    fn kl_over_chi2_sup_is_one_at_zero() {
        let sup = kappa_sup(&gen("kl"), &gen("chi2")).unwrap();
        assert!((sup.value.to_f64() - 1.0).abs() <= 1e-9);
        assert_eq!(sup.witness, KappaWitness::AtZero);
        assert!(!sup.estimated);
    }

    #[test]
    fn restricted_chi2_tv_example() {
        let w = kappa_restricted(&gen("chi2"), &gen("tv"), 2.0 / 3.0, 0.5).unwrap();
        assert!((w.sup.value.to_f64() - 0.5).abs() <= 1e-12, "{:?}", w.sup);
    }

    #[test]
    fn restricted_kl_reverse_kl_window() {
        let w = kappa_restricted(&gen("kl"), &gen("reverse_kl"), 0.5, 0.5).unwrap();
        let ln2 = std::f64::consts::LN_2;
        let expected_sup = (2.0 * ln2 - 1.0) / (1.0 - ln2);
        let expected_inf = (0.5 - 0.5 * ln2) / (ln2 - 0.5);
        assert!((w.sup.value.to_f64() - expected_sup).abs() <= 1e-9, "{:?}", w.sup);
        assert!((w.inf.value.to_f64() - expected_inf).abs() <= 1e-9, "{:?}", w.inf);
    }

    #[test]
    fn unrestricted_window_recovers_global_sup() {
        let f = symmetrized(&gen("marton_s")).unwrap();
        let w = kappa_restricted(&f, &gen("kl"), 0.0, 0.0).unwrap();
        let sup = kappa_sup(&f, &gen("kl")).unwrap();
        assert!((w.sup.value.to_f64() - sup.value.to_f64()).abs() <= 1e-8);
    }

    #[test]
    fn window_growth_is_monotone() {
        let (f, g) = (gen("kl"), gen("chi2"));
        let mut prev_sup = f64::NEG_INFINITY;
        let mut prev_inf = f64::INFINITY;
        // Shrinking betas enlarge the window.
        for (b1, b2) in [(0.8, 0.8), (0.5, 0.5), (0.2, 0.2), (0.05, 0.05)] {
            let w = kappa_restricted(&f, &g, b1, b2).unwrap();
            let sup = w.sup.value.to_f64();
            let inf = w.inf.value.to_f64();
            assert!(sup >= prev_sup - 1e-10);
            assert!(inf <= prev_inf + 1e-10);
            prev_sup = sup;
            prev_inf = inf;
        }
    }

    #[test]
    fn sandwich_for_monotone_ratio() {
        // kappa for (kl, reverse_kl) is monotone increasing, so the window
        // extrema sit at the endpoints.
        let (f, g) = (gen("kl"), gen("reverse_kl"));
        let (b1, b2) = (0.4, 0.3);
        let w = kappa_restricted(&f, &g, b1, b2).unwrap();
        let at_hi = kappa_at(&f, &g, 1.0 / b1).unwrap().to_f64();
        let at_lo = kappa_at(&f, &g, b2).unwrap().to_f64();
        assert!((w.sup.value.to_f64() - at_hi).abs() <= 1e-9);
        assert!((w.inf.value.to_f64() - at_lo).abs() <= 1e-9);
    }

    #[test]
    fn limits_at_one_examples() {
        let (l, r) = kappa_limits_at_one(&gen("kl"), &gen("chi2"), None).unwrap();
        assert!((l.to_f64() - 0.5).abs() <= 1e-6, "left {l:?}");
        assert!((r.to_f64() - 0.5).abs() <= 1e-6, "right {r:?}");

        let (l, r) = kappa_limits_at_one(&gen("kl"), &gen("reverse_kl"), None).unwrap();
        assert!((l.to_f64() - 1.0).abs() <= 1e-6);
        assert!((r.to_f64() - 1.0).abs() <= 1e-6);

        let (l, r) = kappa_limits_at_one(&gen("chi2"), &gen("chi2"), None).unwrap();
        assert_eq!((l.to_f64(), r.to_f64()), (1.0, 1.0));
    }

    #[test]
    fn limits_detect_divergence() {
        let (l, r) = kappa_limits_at_one(&gen("tv"), &gen("chi2"), None).unwrap();
        assert_eq!(l, PosInf);
        assert_eq!(r, PosInf);
    }

    #[test]
    fn one_sided_zero_ratio() {
        // marton_s vanishes to the right of 1.
        let (l, r) = kappa_limits_at_one(&gen("marton_s"), &gen("kl"), None).unwrap();
        assert!((l.to_f64() - 2.0).abs() <= 1e-6);
        assert!(r.to_f64().abs() <= 1e-9);
    }

    #[test]
    fn analytic_curvature_short_circuit() {
        let (l, r) = kappa_limits_at_one(&gen("kl"), &gen("chi2"), Some((1.0, 2.0))).unwrap();
        assert_eq!(l, Finite(0.5));
        assert_eq!(r, Finite(0.5));
    }

    #[test]
    fn profile_invariants() {
        let f = gen("kl");
        let g = gen("chi2");
        let p = kappa_profile(&f, &g, 0.5, 0.5).unwrap();
        assert!(p.kappa_star_sup <= p.kappa_bar);
        assert!(p.kappa_star_inf <= p.kappa_star_sup);
        // Window contains a neighborhood of 1, so both limits lie inside
        // the window extrema.
        for lim in [p.limit_left_one, p.limit_right_one] {
            assert!(lim.to_f64() >= p.kappa_star_inf.to_f64() - 1e-8);
            assert!(lim.to_f64() <= p.kappa_star_sup.to_f64() + 1e-8);
        }
    }

    #[test]
    fn star_pair_sup_matches_conjugate_symmetry() {
        // kappa of (f*, g*) at t equals kappa of (f, g) at 1/t, so the
        // suprema agree.
        let (f, g) = (gen("kl"), gen("chi2"));
        let a = kappa_sup(&f, &g).unwrap().value.to_f64();
        let b = kappa_sup(&star(&f), &star(&g)).unwrap().value.to_f64();
        assert!((a - b).abs() <= 1e-6 * (1.0 + a.abs()));
    }
}
