//! Independent numerical oracles: a directional limsup-quotient estimator
//! (the derivative producing a metric from a function), a finite-difference
//! Levi form, an order-of-vanishing estimator, and a Taylor-coefficient
//! estimator.  These are deliberately separate evaluation routes used to
//! cross-check the closed forms elsewhere in the crate.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::foundations::ComplexVector;

/// Radial/angular sampling grid for `limsup_{lambda -> 0} f(lambda)/|lambda|`.
///
/// Radii form the geometric sequence `r_m = r0 * rho^m`; every radius is
/// probed at `n_theta` equispaced angles.  The evaluator must return the
/// metric function along the curve, erroring outside its domain.
pub struct CurveSampler<F>
where
    F: Fn(Complex64) -> Result<f64>,
{
    pub eval: F,
    pub r0: f64,
    pub rho: f64,
    pub levels: usize,
    pub n_theta: usize,
}

impl<F> CurveSampler<F>
where
    F: Fn(Complex64) -> Result<f64>,
{
    pub fn new(eval: F) -> Self {
        Self {
            eval,
            r0: 1e-2,
            rho: 0.5,
            levels: 10,
            n_theta: 32,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.r0 > 0.0 && self.r0 <= 1e-1) {
            return Err(Error::InvalidInput(format!(
                "initial radius must lie in (0, 1e-1], got {}",
                self.r0
            )));
        }
        if !(self.rho > 0.0 && self.rho < 1.0) {
            return Err(Error::InvalidInput(format!(
                "radius ratio must lie in (0, 1), got {}",
                self.rho
            )));
        }
        if self.n_theta < 8 {
            return Err(Error::InvalidInput("need at least 8 angles".into()));
        }
        if self.levels < 4 {
            return Err(Error::InvalidInput("need at least 4 radial levels".into()));
        }
        Ok(())
    }
}

/// Drift state of the per-radius maxima at the finest sampled radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Increasing,
    Stable,
    Decreasing,
}

/// Extrapolates a radially sampled quotient sequence assuming one leading
/// power-law correction.  Two sliding windows must agree: a genuine power
/// law extrapolates to the same limit from both, while log-type corrections
/// (whose contraction ratio creeps toward 1) do not.
fn richardson_tail(q: &[f64], atol: f64) -> Option<f64> {
    let extrap = |m: usize| -> Option<f64> {
        let d2 = q[m] - q[m - 1];
        if d2.abs() <= atol {
            return Some(q[m]);
        }
        let d1 = q[m - 1] - q[m - 2];
        if d1.abs() <= atol {
            return None;
        }
        let t = d2 / d1;
        if !(1e-9..=0.97).contains(&t) {
            return None;
        }
        Some(q[m] + d2 * t / (1.0 - t))
    };
    let n = q.len();
    let last = extrap(n - 1)?;
    let prev = extrap(n - 2)?;
    let scale = q.iter().fold(1.0f64, |a, &b| a.max(b.abs()));
    if (last - prev).abs() > (1e-3 * scale).max(10.0 * atol) {
        return None;
    }
    Some(last)
}

/// Estimates `limsup_{lambda -> 0} f(lambda) / |lambda|` as the maximum over
/// angles of the Richardson-extrapolated radial quotient sequences.
///
/// Errors with `NoConvergence` when the per-radius maxima are still drifting
/// at the finest radius, and `NonFiniteSample` on bad evaluations.
pub fn limsup_quotient<F>(sampler: &CurveSampler<F>) -> Result<(f64, Trend)>
where
    F: Fn(Complex64) -> Result<f64>,
{
    sampler.validate()?;
    let radii: Vec<f64> = (0..sampler.levels)
        .map(|m| sampler.r0 * sampler.rho.powi(m as i32))
        .collect();
    // quotients[theta][m]
    let mut quotients = vec![vec![0.0; radii.len()]; sampler.n_theta];
    for (i, row) in quotients.iter_mut().enumerate() {
        let theta = 2.0 * std::f64::consts::PI * i as f64 / sampler.n_theta as f64;
        let dir = Complex64::from_polar(1.0, theta);
        for (m, &r) in radii.iter().enumerate() {
            let lambda = dir * r;
            let v = (sampler.eval)(lambda)?;
            if !v.is_finite() || v < 0.0 {
                return Err(Error::NonFiniteSample(format!(
                    "f({lambda}) = {v} is not a finite nonnegative value"
                )));
            }
            row[m] = v / r;
        }
    }

    let maxima: Vec<f64> = (0..radii.len())
        .map(|m| {
            quotients
                .iter()
                .map(|row| row[m])
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    let scale = maxima.iter().cloned().fold(1.0, f64::max);
    let atol = 1e-9 * scale;

    let n = maxima.len();
    let d1 = maxima[n - 1] - maxima[n - 2];
    let d2 = maxima[n - 2] - maxima[n - 3];
    let trend = if d1.abs() <= atol.max(0.97 * d2.abs()) {
        Trend::Stable
    } else if d1 > 0.0 {
        Trend::Increasing
    } else {
        Trend::Decreasing
    };
    if trend != Trend::Stable {
        return Err(Error::NoConvergence(format!(
            "per-radius maxima still drift by {d1:e} at radius {:e}",
            radii[n - 1]
        )));
    }

    let mut estimate = f64::NEG_INFINITY;
    for row in &quotients {
        let e = richardson_tail(row, atol).ok_or_else(|| {
            Error::NoConvergence("radial sequence has no power-law contraction".into())
        })?;
        estimate = estimate.max(e);
    }
    Ok((estimate.max(0.0), trend))
}

/// Four-point complex-Laplacian stencil for the Levi form restricted to a
/// complex line.
#[derive(Debug, Clone, Copy)]
pub struct LeviStencil {
    pub h: f64,
}

impl LeviStencil {
    pub fn new(h: f64) -> Result<Self> {
        if !(1e-6..=1e-2).contains(&h) {
            return Err(Error::InvalidInput(format!(
                "stencil step must lie in [1e-6, 1e-2], got {h}"
            )));
        }
        Ok(Self { h })
    }
}

struct Stencil {
    value: f64,
    scale: f64,
    /// All five samples bitwise equal: u is flat along the stencil.
    flat: bool,
}

fn levi_raw<U>(u: &U, a: &ComplexVector, x: &ComplexVector, h: f64) -> Result<Stencil>
where
    U: Fn(&ComplexVector) -> f64,
{
    let hr = Complex64::new(h, 0.0);
    let hi = Complex64::new(0.0, h);
    let samples = [
        u(&a.add_scaled(hr, x)?),
        u(&a.add_scaled(-hr, x)?),
        u(&a.add_scaled(hi, x)?),
        u(&a.add_scaled(-hi, x)?),
    ];
    let center = u(a);
    for v in samples.iter().chain([&center]) {
        if !v.is_finite() {
            return Err(Error::NonFiniteSample("stencil sample".into()));
        }
    }
    let numerator = samples.iter().sum::<f64>() - 4.0 * center;
    let scale = samples
        .iter()
        .chain([&center])
        .fold(0.0f64, |m, v| m.max(v.abs()));
    Ok(Stencil {
        value: numerator / (4.0 * h * h),
        scale,
        flat: samples.iter().all(|&s| s == center),
    })
}

/// Finite-difference Levi form `L u(a; X)` via the restriction identity:
/// one quarter of the 2-D Laplacian of `lambda -> u(a + lambda X)` at 0,
/// i.e. `(u(a+hX) + u(a-hX) + u(a+ihX) + u(a-ihX) - 4 u(a)) / (4 h^2)`.
///
/// Errors with `StepTooSmall` when rounding has eaten more than half the
/// significand, detected by comparing the stencil at `h` and `h/2`.
pub fn levi_form<U>(u: U, a: &ComplexVector, x: &ComplexVector, stencil: &LeviStencil) -> Result<f64>
where
    U: Fn(&ComplexVector) -> f64,
{
    let h = stencil.h;
    let s = levi_raw(&u, a, x, h)?;
    if s.flat {
        return Ok(0.0);
    }
    // Rounding floor of the 5-term combination; the numerator keeps
    // log10(|num| / noise) significant digits.  When fewer than half the
    // f64 digits could survive, a second stencil at h/2 must agree, else
    // the value is cancellation noise.
    let numerator = s.value * 4.0 * h * h;
    let noise = 8.0 * f64::EPSILON * s.scale;
    if numerator.abs() < noise {
        // below one rounding quantum: no digits of the combination survive
        return Err(Error::StepTooSmall(format!(
            "stencil numerator {numerator:e} sits under the rounding floor \
             {noise:e}; increase the step"
        )));
    }
    if numerator.abs() < 1e8 * noise {
        let half = levi_raw(&u, a, x, h / 2.0)?;
        let spread = (s.value - half.value).abs();
        if spread > 0.25 * s.value.abs().max(half.value.abs()) {
            return Err(Error::StepTooSmall(format!(
                "stencil values at h and h/2 disagree ({:e} vs {:e}); \
                 cancellation has eaten more than half the significand",
                s.value, half.value
            )));
        }
    }
    Ok(s.value)
}

/// Order of vanishing of `u` at `a` along `X`: least-squares slope of
/// `log u(a + tX)` against `log t` over one decade of real `t`, rounded to
/// the nearest integer when within 0.1.
pub fn order_of_vanishing<U>(u: U, a: &ComplexVector, x: &ComplexVector) -> Result<f64>
where
    U: Fn(&ComplexVector) -> f64,
{
    let n = 12;
    let (t_hi, t_lo) = (1e-3f64, 1e-4f64);
    let mut logs_t = Vec::with_capacity(n);
    let mut logs_u = Vec::with_capacity(n);
    for i in 0..n {
        let t = t_hi * (t_lo / t_hi).powf(i as f64 / (n - 1) as f64);
        let v = u(&a.add_scaled(Complex64::new(t, 0.0), x)?);
        if !v.is_finite() || v < 0.0 {
            return Err(Error::NonFiniteSample(format!("u(a + {t} X) = {v}")));
        }
        if v == 0.0 {
            return Err(Error::Undetermined(
                "u vanishes identically along the sampled ray".into(),
            ));
        }
        logs_t.push(t.ln());
        logs_u.push(v.ln());
    }
    let mean_t = logs_t.iter().sum::<f64>() / n as f64;
    let mean_u = logs_u.iter().sum::<f64>() / n as f64;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for i in 0..n {
        sxx += (logs_t[i] - mean_t).powi(2);
        sxy += (logs_t[i] - mean_t) * (logs_u[i] - mean_u);
    }
    let slope = sxy / sxx;
    let residual = (0..n)
        .map(|i| (logs_u[i] - mean_u - slope * (logs_t[i] - mean_t)).abs())
        .fold(0.0f64, f64::max);
    if residual > 0.05 {
        return Err(Error::Undetermined(format!(
            "log-log fit residual {residual:.3} too large for a clean order"
        )));
    }
    let rounded = slope.round();
    if (slope - rounded).abs() <= 0.1 && rounded >= 0.0 {
        Ok(rounded)
    } else {
        Ok(slope)
    }
}

/// Richardson-extrapolated limit of `u(a + tX) / t^p` for real `t -> 0+`,
/// estimating `(1/p!) |u^{(p)}(a)(X)|` for the nonnegative candidates in
/// scope.  Errors with `OrderMismatch` when the quotient diverges or decays,
/// i.e. the true order of vanishing is not `p`.
pub fn taylor_p_coefficient<U>(
    u: U,
    a: &ComplexVector,
    x: &ComplexVector,
    p: u32,
) -> Result<f64>
where
    U: Fn(&ComplexVector) -> f64,
{
    if p == 0 {
        return Err(Error::InvalidOrder("p must be >= 1".into()));
    }
    let levels = 10;
    let (t0, rho) = (1e-2f64, 0.6f64);
    let mut q = Vec::with_capacity(levels);
    for m in 0..levels {
        let t: f64 = t0 * rho.powi(m as i32);
        let v = u(&a.add_scaled(Complex64::new(t, 0.0), x)?);
        if !v.is_finite() || v < 0.0 {
            return Err(Error::NonFiniteSample(format!("u(a + {t} X) = {v}")));
        }
        q.push(v / t.powi(p as i32));
    }
    let scale = q.iter().cloned().fold(0.0f64, f64::max);
    if scale == 0.0 {
        return Err(Error::OrderMismatch(
            "quotient vanishes identically: order of vanishing exceeds p".into(),
        ));
    }
    // Slope of the quotient across the geometric grid detects a wrong p.
    let drift = (q[levels - 1] / q[0]).ln() / (rho.powi((levels - 1) as i32)).ln();
    if drift > 0.1 {
        return Err(Error::OrderMismatch(format!(
            "quotient still decays like t^{drift:.2}: order of vanishing exceeds p"
        )));
    }
    if drift < -0.1 {
        return Err(Error::OrderMismatch(format!(
            "quotient diverges like t^{drift:.2}: order of vanishing is below p"
        )));
    }
    richardson_tail(&q, 1e-12 * scale.max(1.0))
        .ok_or_else(|| Error::OrderMismatch("no power-law contraction in the quotient".into()))
}
