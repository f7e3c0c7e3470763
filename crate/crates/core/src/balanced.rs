//! Balanced and complete circled domains described by Minkowski
//! functionals: evaluation, the convex-envelope seminorm via infimal
//! convolution, the invariant-metric identities at the origin, and the
//! product-domain upper bound for complete circled domains.
//!
//! At the origin of a pseudoconvex balanced domain the whole chain
//! collapses onto gauges: the Green function and the Azukawa metric equal
//! the Minkowski functional `h`, while the Carathéodory-Reiffen and Sibony
//! metrics equal the gauge of the convex envelope, i.e. the largest
//! seminorm below `h`.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foundations::{ComplexVector, MetricKind, MetricValue, ValueStatus};

fn default_weights() -> Vec<f64> {
    Vec::new()
}

/// Structured Minkowski functionals.  All variants are absolutely
/// homogeneous, circled (they depend only on coordinate moduli), monotone
/// in each modulus, and logarithmically plurisubharmonic by construction,
/// so the domains `{h < 1}` are pseudoconvex balanced domains.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MinkowskiSpec {
    /// `h(z) = (sum_j (w_j |z_j|)^q)^{1/q}` with `w_j > 0`, `q >= 1`.
    WeightedNorm { weights: Vec<f64>, exponent: f64 },
    /// `h(z) = prod_j (w_j |z_j|)^{theta_j}` with `theta_j >= 0` summing
    /// to 1; weights default to 1.
    Monomial {
        exponents: Vec<f64>,
        #[serde(default = "default_weights")]
        weights: Vec<f64>,
    },
    /// Pointwise maximum of sub-functionals.
    MaxOf { parts: Vec<MinkowskiSpec> },
}

impl MinkowskiSpec {
    /// Coordinate dimension of the functional.
    pub fn dim(&self) -> Result<usize> {
        match self {
            MinkowskiSpec::WeightedNorm { weights, .. } => Ok(weights.len()),
            MinkowskiSpec::Monomial { exponents, .. } => Ok(exponents.len()),
            MinkowskiSpec::MaxOf { parts } => {
                let first = parts
                    .first()
                    .ok_or_else(|| Error::InvalidInput("empty max list".into()))?
                    .dim()?;
                for p in parts {
                    if p.dim()? != first {
                        return Err(Error::DimensionMismatch {
                            expected: first,
                            got: p.dim()?,
                        });
                    }
                }
                Ok(first)
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            MinkowskiSpec::WeightedNorm { weights, exponent } => {
                if weights.is_empty() || weights.iter().any(|&w| w <= 0.0 || !w.is_finite()) {
                    return Err(Error::InvalidInput("weights must be positive".into()));
                }
                if *exponent < 1.0 || !exponent.is_finite() {
                    return Err(Error::InvalidInput("norm exponent must be >= 1".into()));
                }
            }
            MinkowskiSpec::Monomial { exponents, weights } => {
                if exponents.is_empty() || exponents.iter().any(|&t| t < 0.0 || !t.is_finite()) {
                    return Err(Error::InvalidInput(
                        "monomial exponents must be nonnegative".into(),
                    ));
                }
                let total: f64 = exponents.iter().sum();
                if (total - 1.0).abs() > 1e-12 {
                    return Err(Error::InvalidInput(format!(
                        "monomial exponents must sum to 1, got {total}"
                    )));
                }
                if !weights.is_empty() {
                    if weights.len() != exponents.len() {
                        return Err(Error::DimensionMismatch {
                            expected: exponents.len(),
                            got: weights.len(),
                        });
                    }
                    if weights.iter().any(|&w| w <= 0.0 || !w.is_finite()) {
                        return Err(Error::InvalidInput("weights must be positive".into()));
                    }
                }
            }
            MinkowskiSpec::MaxOf { parts } => {
                if parts.is_empty() {
                    return Err(Error::InvalidInput("empty max list".into()));
                }
                for p in parts {
                    p.validate()?;
                }
                self.dim()?;
            }
        }
        Ok(())
    }

    /// Evaluation on coordinate moduli (all inputs nonnegative).
    pub fn eval_abs(&self, m: &[f64]) -> f64 {
        match self {
            MinkowskiSpec::WeightedNorm { weights, exponent } => {
                let q = *exponent;
                let total: f64 = weights
                    .iter()
                    .zip(m)
                    .map(|(&w, &x)| (w * x).powf(q))
                    .sum();
                total.powf(1.0 / q)
            }
            MinkowskiSpec::Monomial { exponents, weights } => {
                let mut log_sum = 0.0;
                for (j, &t) in exponents.iter().enumerate() {
                    if t == 0.0 {
                        continue;
                    }
                    let w = weights.get(j).copied().unwrap_or(1.0);
                    let x = w * m[j];
                    if x == 0.0 {
                        return 0.0;
                    }
                    log_sum += t * x.ln();
                }
                log_sum.exp()
            }
            MinkowskiSpec::MaxOf { parts } => parts
                .iter()
                .map(|p| p.eval_abs(m))
                .fold(0.0f64, f64::max),
        }
    }

    /// Sufficient convexity check (used only to sharpen certificates).
    pub fn is_convex(&self) -> bool {
        match self {
            MinkowskiSpec::WeightedNorm { .. } => true,
            MinkowskiSpec::Monomial { exponents, .. } => {
                exponents.iter().filter(|&&t| t > 0.0).count() <= 1
            }
            MinkowskiSpec::MaxOf { parts } => parts.iter().all(|p| p.is_convex()),
        }
    }
}

/// Evaluates a Minkowski functional at a point of `C^n`.
/// Membership in the domain is exactly `h(z) < 1`.
pub fn minkowski_eval(spec: &MinkowskiSpec, z: &ComplexVector) -> Result<f64> {
    spec.validate()?;
    let n = spec.dim()?;
    if z.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: z.dim(),
        });
    }
    let m: Vec<f64> = z.entries().iter().map(|e| e.norm()).collect();
    Ok(spec.eval_abs(&m))
}

/// Result of the infimal-convolution approximation of the envelope gauge.
#[derive(Debug, Clone)]
pub struct EnvelopeResult {
    /// Upper bound on the envelope gauge, exact in the optimization limit.
    pub value: f64,
    /// Decomposition realizing `value`; parts sum to the query point.
    pub decomposition: Vec<ComplexVector>,
    /// Disagreement between the two internal optimization routes; small
    /// values certify convergence.
    pub certificate_gap: f64,
}

/// Optimizer configuration. Restart starts are seeded deterministically,
/// so results are reproducible regardless of scheduling.
#[derive(Debug, Clone)]
pub struct EnvelopeConfig {
    pub parts: usize,
    pub restarts: usize,
    pub seed: u64,
    pub stationarity_tol: f64,
}

impl EnvelopeConfig {
    /// Default configuration for dimension `n`: `2n + 1` parts (the
    /// Carathéodory bound over real dimension `2n`) and 64 restarts.
    pub fn for_dimension(n: usize) -> Self {
        Self {
            parts: 2 * n + 1,
            restarts: 64,
            seed: 0x1292_83aa_77d1_c0de,
            stationarity_tol: 1e-9,
        }
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }
}

/// Pattern-search minimizer over flattened coordinates with a projection
/// step supplied by the caller through the objective itself.
fn pattern_search<O>(vars: &mut [f64], objective: O, scale: f64, tol: f64) -> (f64, bool)
where
    O: Fn(&[f64]) -> f64,
{
    let mut best = objective(vars);
    let mut step = 0.25 * scale;
    let mut sweeps = 0usize;
    while step > tol && sweeps < 600 {
        sweeps += 1;
        let mut improved = false;
        for i in 0..vars.len() {
            let original = vars[i];
            for delta in [step, -step] {
                vars[i] = original + delta;
                let v = objective(vars);
                if v < best - 1e-18 {
                    best = v;
                    improved = true;
                    break;
                }
                vars[i] = original;
            }
        }
        if !improved {
            step *= 0.5;
        }
        if best <= 1e-15 {
            break;
        }
    }
    (best, step <= tol || best <= 1e-15)
}

/// Route A: free complex parts, last part bound by the sum constraint.
fn envelope_complex_route(
    spec: &MinkowskiSpec,
    z: &ComplexVector,
    cfg: &EnvelopeConfig,
    rng: &mut ChaCha8Rng,
) -> Result<(f64, Vec<ComplexVector>, bool)> {
    let n = z.dim();
    let free = cfg.parts - 1;
    let dims = 2 * n * free;
    let scale = 1.0 + z.entries().iter().map(|e| e.norm()).fold(0.0f64, f64::max);

    let assemble = |vars: &[f64]| -> Vec<Vec<Complex64>> {
        let mut parts: Vec<Vec<Complex64>> = Vec::with_capacity(cfg.parts);
        let mut rest: Vec<Complex64> = z.entries().to_vec();
        for i in 0..free {
            let mut part = Vec::with_capacity(n);
            for j in 0..n {
                let re = vars[2 * (i * n + j)];
                let im = vars[2 * (i * n + j) + 1];
                let c = Complex64::new(re, im);
                rest[j] -= c;
                part.push(c);
            }
            parts.push(part);
        }
        parts.push(rest);
        parts
    };
    let objective = |vars: &[f64]| -> f64 {
        assemble(vars)
            .iter()
            .map(|part| {
                let m: Vec<f64> = part.iter().map(|e| e.norm()).collect();
                spec.eval_abs(&m)
            })
            .sum()
    };

    let mut starts: Vec<Vec<f64>> = Vec::new();
    // no split: all free parts zero, last part carries z
    starts.push(vec![0.0; dims]);
    // axis split: free part j carries coordinate j, last part is zero
    if free >= n {
        let mut v = vec![0.0; dims];
        for j in 0..n {
            v[2 * (j * n + j)] = z.get(j).re;
            v[2 * (j * n + j) + 1] = z.get(j).im;
        }
        starts.push(v);
    }
    // uniform split
    {
        let mut v = vec![0.0; dims];
        let f = 1.0 / cfg.parts as f64;
        for i in 0..free {
            for j in 0..n {
                v[2 * (i * n + j)] = z.get(j).re * f;
                v[2 * (i * n + j) + 1] = z.get(j).im * f;
            }
        }
        starts.push(v);
    }
    while starts.len() < cfg.restarts.max(3) {
        let v: Vec<f64> = (0..dims)
            .map(|_| (rng.gen::<f64>() - 0.5) * scale)
            .collect();
        starts.push(v);
    }

    let mut best_val = f64::INFINITY;
    let mut best_vars = starts[0].clone();
    let mut any_converged = false;
    for mut start in starts {
        let (v, converged) =
            pattern_search(&mut start, objective, scale, cfg.stationarity_tol * scale);
        any_converged |= converged;
        if v < best_val {
            best_val = v;
            best_vars = start;
        }
        if best_val <= 1e-15 {
            break;
        }
    }
    let decomposition = assemble(&best_vars)
        .into_iter()
        .map(ComplexVector::new)
        .collect::<Result<Vec<_>>>()?;
    Ok((best_val, decomposition, any_converged))
}

/// Route B: the circled reduction.  For circled monotone functionals the
/// infimal convolution can be taken over componentwise shares of the
/// coordinate moduli, with `n + 1` parts.
fn envelope_abs_route(
    spec: &MinkowskiSpec,
    z: &ComplexVector,
    cfg: &EnvelopeConfig,
    rng: &mut ChaCha8Rng,
) -> Result<(f64, Vec<ComplexVector>, bool)> {
    let n = z.dim();
    let parts = n + 1;
    let target: Vec<f64> = z.entries().iter().map(|e| e.norm()).collect();
    let scale = 1.0 + target.iter().cloned().fold(0.0f64, f64::max);

    // shares[i * n + j] clamped to [0, target_j]; the last part absorbs the
    // remainder of each coordinate (clamped at zero to stay feasible, the
    // penalty keeps the optimizer honest).
    let free = parts - 1;
    let dims = free * n;
    let objective = |vars: &[f64]| -> f64 {
        let mut total = 0.0;
        let mut rest = target.clone();
        let mut penalty = 0.0;
        for i in 0..free {
            let mut m = Vec::with_capacity(n);
            for j in 0..n {
                let x = vars[i * n + j];
                if !(0.0..=rest[j] + 1e-18).contains(&x) {
                    penalty += 10.0 * (x.min(0.0).abs() + (x - rest[j]).max(0.0));
                }
                let x = x.clamp(0.0, rest[j]);
                rest[j] -= x;
                m.push(x);
            }
            total += spec.eval_abs(&m);
        }
        total + spec.eval_abs(&rest) + penalty
    };

    let mut starts: Vec<Vec<f64>> = Vec::new();
    starts.push(vec![0.0; dims]);
    {
        // axis split
        let mut v = vec![0.0; dims];
        for j in 0..n.min(free) {
            v[j * n + j] = target[j];
        }
        starts.push(v);
    }
    {
        let f = 1.0 / parts as f64;
        let mut v = vec![0.0; dims];
        for i in 0..free {
            for j in 0..n {
                v[i * n + j] = target[j] * f;
            }
        }
        starts.push(v);
    }
    while starts.len() < cfg.restarts.max(3) {
        let v: Vec<f64> = (0..dims)
            .map(|i| rng.gen::<f64>() * target[i % n])
            .collect();
        starts.push(v);
    }

    let mut best_val = f64::INFINITY;
    let mut best_vars = starts[0].clone();
    let mut any_converged = false;
    for mut start in starts {
        let (v, converged) =
            pattern_search(&mut start, objective, scale, cfg.stationarity_tol * scale);
        any_converged |= converged;
        if v < best_val {
            best_val = v;
            best_vars = start;
        }
        if best_val <= 1e-15 {
            break;
        }
    }

    // Reconstruct complex parts carrying the phases of z.
    let phases: Vec<Complex64> = z
        .entries()
        .iter()
        .map(|e| {
            if e.norm_sqr() == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                e / e.norm()
            }
        })
        .collect();
    let mut decomposition = Vec::with_capacity(parts);
    let mut rest = target.clone();
    for i in 0..free {
        let mut part = Vec::with_capacity(n);
        for j in 0..n {
            let x = best_vars[i * n + j].clamp(0.0, rest[j]);
            rest[j] -= x;
            part.push(phases[j] * x);
        }
        decomposition.push(ComplexVector::new(part)?);
    }
    decomposition.push(ComplexVector::new(
        rest.iter()
            .zip(&phases)
            .map(|(&x, &ph)| ph * x)
            .collect(),
    )?);
    Ok((best_val, decomposition, any_converged))
}

/// Approximates the envelope gauge
/// `inf { sum_i h(z_i) : sum_i z_i = z }`, the largest seminorm below `h`,
/// by deterministic multi-start local minimization along two independent
/// routes (free complex parts, and the circled modulus reduction).
pub fn convex_envelope(
    spec: &MinkowskiSpec,
    z: &ComplexVector,
    cfg: &EnvelopeConfig,
) -> Result<EnvelopeResult> {
    spec.validate()?;
    let n = spec.dim()?;
    if z.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: z.dim(),
        });
    }
    if cfg.parts < 2 {
        return Err(Error::InvalidInput("need at least 2 parts".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (va, deca, ca) = envelope_complex_route(spec, z, cfg, &mut rng)?;
    let (vb, decb, cb) = envelope_abs_route(spec, z, cfg, &mut rng)?;
    if !ca && !cb {
        return Err(Error::ConvergenceFailure(format!(
            "no restart reached stationarity tolerance {}",
            cfg.stationarity_tol
        )));
    }
    let gap = (va - vb).abs();
    let (value, decomposition) = if vb <= va { (vb, decb) } else { (va, deca) };
    Ok(EnvelopeResult {
        value,
        decomposition,
        certificate_gap: gap,
    })
}

/// Largest axis-aligned seminorm below `h`: `max_j h(e_j) |z_j|`.
/// A certified lower bound for the envelope gauge.
pub fn axis_seminorm_lower_bound(spec: &MinkowskiSpec, z: &ComplexVector) -> Result<f64> {
    let n = spec.dim()?;
    if z.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: z.dim(),
        });
    }
    let mut best = 0.0f64;
    for j in 0..n {
        let mut unit = vec![0.0; n];
        unit[j] = 1.0;
        best = best.max(spec.eval_abs(&unit) * z.get(j).norm());
    }
    Ok(best)
}

/// Invariant objects of a pseudoconvex balanced domain at the origin:
/// Green and Azukawa equal the gauge `h`; Carathéodory-Reiffen and the
/// Sibony metric equal the envelope gauge.
pub fn balanced_metrics_at_zero(
    spec: &MinkowskiSpec,
    pseudoconvex: bool,
    kind: MetricKind,
    z_or_x: &ComplexVector,
) -> Result<MetricValue> {
    kind.validate()?;
    if !pseudoconvex {
        return Err(Error::Unsupported(
            "the Green/Azukawa gauge identities require pseudoconvexity".into(),
        ));
    }
    let h = minkowski_eval(spec, z_or_x)?;
    match kind {
        MetricKind::Green => {
            if h >= 1.0 {
                return Err(Error::DomainViolation(format!(
                    "target has gauge {h} >= 1, outside the domain"
                )));
            }
            MetricValue::exact(h)
        }
        MetricKind::Azukawa => MetricValue::exact(h),
        MetricKind::Caratheodory | MetricKind::Sibony | MetricKind::SibonyHigherMetric(2) => {
            let cfg = EnvelopeConfig::for_dimension(spec.dim()?);
            let env = convex_envelope(spec, z_or_x, &cfg)?;
            if env.certificate_gap <= 1e-6 {
                MetricValue::exact(env.value)
            } else {
                let lower = if spec.is_convex() {
                    h
                } else {
                    axis_seminorm_lower_bound(spec, z_or_x)?
                };
                MetricValue::interval(lower.min(env.value.min(h)), env.value.min(h), ValueStatus::Bounds)
            }
        }
        other => Err(Error::UnsupportedKind(format!(
            "{} has no gauge identity at the origin of a balanced domain",
            other.name()
        ))),
    }
}

/// Upper bound for the Green function (hence every higher-order Sibony
/// function) of the product neighborhood `{ |z'| < eps } x { h_D < R, |z''| < k }`
/// at the origin: `max( |z'|/eps, h_D(z'')/R, |z''|/k )`.
pub fn usc_product_bound(
    eps: f64,
    r_cap: f64,
    k: f64,
    h_d: &MinkowskiSpec,
    z_prime: &ComplexVector,
    z_second: &ComplexVector,
) -> Result<f64> {
    let bad = |x: f64| x.is_nan() || x <= 0.0;
    if bad(eps) || bad(k) || bad(r_cap) || r_cap >= 1.0 {
        return Err(Error::InvalidInput(
            "need eps > 0, k > 0 and 0 < R < 1".into(),
        ));
    }
    let h = minkowski_eval(h_d, z_second)?;
    Ok((z_prime.norm() / eps)
        .max(h / r_cap)
        .max(z_second.norm() / k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(res: &[f64]) -> ComplexVector {
        ComplexVector::from_reals(res).unwrap()
    }

    fn geometric_mean() -> MinkowskiSpec {
        MinkowskiSpec::Monomial {
            exponents: vec![0.5, 0.5],
            weights: vec![],
        }
    }

    /// max(|z1|, |z2|, 2 |z1 z2|^{1/2})
    fn spiked_max() -> MinkowskiSpec {
        MinkowskiSpec::MaxOf {
            parts: vec![
                MinkowskiSpec::Monomial {
                    exponents: vec![1.0, 0.0],
                    weights: vec![],
                },
                MinkowskiSpec::Monomial {
                    exponents: vec![0.0, 1.0],
                    weights: vec![],
                },
                MinkowskiSpec::Monomial {
                    exponents: vec![0.5, 0.5],
                    weights: vec![2.0, 2.0],
                },
            ],
        }
    }

    fn small_cfg() -> EnvelopeConfig {
        EnvelopeConfig::for_dimension(2).with_restarts(8)
    }

    #[test]
    fn minkowski_examples() {
        assert!((minkowski_eval(&geometric_mean(), &cv(&[4.0, 1.0])).unwrap() - 2.0).abs() < 1e-14);
        let max_norm = MinkowskiSpec::MaxOf {
            parts: vec![
                MinkowskiSpec::WeightedNorm {
                    weights: vec![1.0, 1e-12],
                    exponent: 1.0,
                },
                MinkowskiSpec::WeightedNorm {
                    weights: vec![1e-12, 1.0],
                    exponent: 1.0,
                },
            ],
        };
        let v = minkowski_eval(&max_norm, &cv(&[0.3, 0.9])).unwrap();
        assert!((v - 0.9).abs() < 1e-11);
        assert_eq!(minkowski_eval(&spiked_max(), &cv(&[0.0, 0.0])).unwrap(), 0.0);
    }

    #[test]
    fn envelope_of_geometric_mean_vanishes() {
        let env = convex_envelope(&geometric_mean(), &cv(&[1.0, 1.0]), &small_cfg()).unwrap();
        assert!(env.value <= 1e-12, "value {}", env.value);
        let sum: Vec<Complex64> = {
            let mut acc = vec![Complex64::new(0.0, 0.0); 2];
            for part in &env.decomposition {
                for (j, e) in part.entries().iter().enumerate() {
                    acc[j] += e;
                }
            }
            acc
        };
        assert!((sum[0] - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        assert!((sum[1] - Complex64::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn envelope_of_convex_norm_is_identity() {
        let spec = MinkowskiSpec::WeightedNorm {
            weights: vec![1.0, 2.0],
            exponent: 2.0,
        };
        let z = cv(&[0.4, 0.3]);
        let h = minkowski_eval(&spec, &z).unwrap();
        let env = convex_envelope(&spec, &z, &small_cfg()).unwrap();
        assert!((env.value - h).abs() < 1e-8, "env {} vs h {}", env.value, h);
    }

    #[test]
    fn envelope_of_spiked_max_at_diagonal() {
        // Best split of (1,1) is (0.8, 0.2) + (0.2, 0.8): each part costs
        // 0.8, total 1.6, strictly below h(1,1) = 2.
        let env = convex_envelope(&spiked_max(), &cv(&[1.0, 1.0]), &small_cfg()).unwrap();
        assert!((env.value - 1.6).abs() < 1e-6, "value {}", env.value);
        assert!(env.certificate_gap < 1e-6);
    }

    #[test]
    fn balanced_chain_values() {
        // Azukawa = h = 1 and Sibony = envelope = 0 for the geometric mean.
        let x = cv(&[1.0, 1.0]);
        let a = balanced_metrics_at_zero(&geometric_mean(), true, MetricKind::Azukawa, &x)
            .unwrap();
        assert_eq!(a.value(), Some(1.0));
        let s =
            balanced_metrics_at_zero(&geometric_mean(), true, MetricKind::Sibony, &x).unwrap();
        assert!(s.value().unwrap() <= 1e-9);
        // Axis direction of the spiked max: everything is pinched to 1.
        let e1 = cv(&[1.0, 0.0]);
        let g = balanced_metrics_at_zero(&spiked_max(), true, MetricKind::Caratheodory, &e1)
            .unwrap();
        assert!((g.value().unwrap() - 1.0).abs() < 1e-8);
        assert!(balanced_metrics_at_zero(&geometric_mean(), false, MetricKind::Azukawa, &x)
            .is_err());
    }

    #[test]
    fn product_bound_examples() {
        let h = MinkowskiSpec::WeightedNorm {
            weights: vec![0.5],
            exponent: 2.0,
        };
        // h(b) = 0.5, |b| = 1, eps = 0.1, R = 0.9, k = 10:
        // max(0, 0.5/0.9, 0.1) = 0.5556
        let v = usc_product_bound(0.1, 0.9, 10.0, &h, &cv(&[0.0]), &cv(&[1.0])).unwrap();
        assert!((v - 0.5 / 0.9).abs() < 1e-15);
        let zero = usc_product_bound(0.1, 0.9, 10.0, &h, &cv(&[0.0]), &cv(&[0.0])).unwrap();
        assert_eq!(zero, 0.0);
        assert!(usc_product_bound(0.0, 0.9, 10.0, &h, &cv(&[0.0]), &cv(&[0.5])).is_err());
        // R -> 1, k -> infinity recovers the gauge of the fiber factor
        let v = usc_product_bound(0.1, 1.0 - 1e-12, 1e12, &h, &cv(&[0.0]), &cv(&[1.0])).unwrap();
        assert!((v - 0.5).abs() < 1e-9);
    }
}
