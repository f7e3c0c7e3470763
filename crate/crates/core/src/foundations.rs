//! Shared vocabulary: points of `C^n`, metric kinds, evaluation results,
//! candidate functions, and the structured holomorphic maps used by the
//! contractibility checks.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point (or direction) of `C^n`, `n >= 1`, with finite coordinates.
///
/// Immutable: the dimension is fixed for the vector's lifetime.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexVector {
    entries: Vec<Complex64>,
}

impl ComplexVector {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidValue("empty coordinate vector".into()));
        }
        for (j, e) in entries.iter().enumerate() {
            if !e.re.is_finite() || !e.im.is_finite() {
                return Err(Error::InvalidValue(format!(
                    "non-finite coordinate {j}: {e}"
                )));
            }
        }
        Ok(Self { entries })
    }

    /// Builds a vector from real parts only.
    pub fn from_reals(res: &[f64]) -> Result<Self> {
        Self::new(res.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    /// One-dimensional vector holding a single scalar.
    pub fn scalar(v: Complex64) -> Self {
        Self { entries: vec![v] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, j: usize) -> Complex64 {
        self.entries[j]
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
    }

    /// The single entry of a one-dimensional vector.
    pub fn as_scalar(&self) -> Result<Complex64> {
        if self.dim() != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: self.dim(),
            });
        }
        Ok(self.entries[0])
    }

    /// Coordinatewise `self + lambda * other`.
    pub fn add_scaled(&self, lambda: Complex64, other: &ComplexVector) -> Result<ComplexVector> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(ComplexVector {
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a + lambda * b)
                .collect(),
        })
    }

    pub fn scale(&self, lambda: Complex64) -> ComplexVector {
        ComplexVector {
            entries: self.entries.iter().map(|e| lambda * e).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.re == 0.0 && e.im == 0.0)
    }
}

/// The invariant objects this crate evaluates.
///
/// `Sibony` is the classical object of order 2: handed to a function
/// evaluator it means the Sibony function (identical to
/// `SibonyHigherFunction(2)`), handed to a metric evaluator it means the
/// Sibony pseudometric (identical to `SibonyHigherMetric(2)`).
/// `SibonyHigherMetric(q)` carries the full order `q = 2p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MetricKind {
    Mobius,
    Caratheodory,
    Green,
    Azukawa,
    Sibony,
    SibonyHigherFunction(u32),
    SibonyHigherMetric(u32),
}

impl MetricKind {
    /// True for the distance-like objects `d^F_G(a, z)`.
    pub fn is_function_kind(self) -> bool {
        matches!(
            self,
            MetricKind::Mobius
                | MetricKind::Green
                | MetricKind::Sibony
                | MetricKind::SibonyHigherFunction(_)
        )
    }

    /// True for the derivative-like objects `delta^F_G(a; X)`.
    pub fn is_metric_kind(self) -> bool {
        matches!(
            self,
            MetricKind::Caratheodory
                | MetricKind::Azukawa
                | MetricKind::Sibony
                | MetricKind::SibonyHigherMetric(_)
        )
    }

    /// Rejects malformed orders (zero order, and for the higher metric the
    /// caller decides whether odd orders are meaningful).
    pub fn validate(self) -> Result<()> {
        match self {
            MetricKind::SibonyHigherFunction(0) => {
                Err(Error::InvalidKind("higher-order function with p = 0".into()))
            }
            MetricKind::SibonyHigherMetric(0) => {
                Err(Error::InvalidKind("higher-order metric with order 0".into()))
            }
            _ => Ok(()),
        }
    }

    pub fn name(self) -> String {
        match self {
            MetricKind::Mobius => "mobius".into(),
            MetricKind::Caratheodory => "caratheodory".into(),
            MetricKind::Green => "green".into(),
            MetricKind::Azukawa => "azukawa".into(),
            MetricKind::Sibony => "sibony".into(),
            MetricKind::SibonyHigherFunction(p) => format!("sibony-function({p})"),
            MetricKind::SibonyHigherMetric(q) => format!("sibony-metric({q})"),
        }
    }
}

/// Convergence status of an evaluation result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ValueStatus {
    /// Closed-form value, exact up to floating rounding.
    Exact,
    /// Value backed by a proof; the citation string names the argument.
    ProvenExact,
    /// Numerically certified enclosure of a well-defined quantity.
    Bounds,
    /// No effective formula is known; the interval holds proven bounds.
    Unknown,
}

/// Evaluation result: an exact value, a proven value with citation, or an
/// interval `[lower, upper]` when no formula is available.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricValue {
    pub lower: f64,
    pub upper: f64,
    pub status: ValueStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub citation: Option<String>,
}

impl MetricValue {
    pub fn exact(v: f64) -> Result<Self> {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::InvalidValue(format!(
                "metric values must be finite and nonnegative, got {v}"
            )));
        }
        Ok(Self {
            lower: v,
            upper: v,
            status: ValueStatus::Exact,
            citation: None,
        })
    }

    pub fn proven(v: f64, citation: impl Into<String>) -> Result<Self> {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::InvalidValue(format!(
                "metric values must be finite and nonnegative, got {v}"
            )));
        }
        Ok(Self {
            lower: v,
            upper: v,
            status: ValueStatus::ProvenExact,
            citation: Some(citation.into()),
        })
    }

    pub fn interval(lower: f64, upper: f64, status: ValueStatus) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() || lower < 0.0 || lower > upper {
            return Err(Error::InvalidValue(format!(
                "need 0 <= lower <= upper, got [{lower}, {upper}]"
            )));
        }
        Ok(Self {
            lower,
            upper,
            status,
            citation: None,
        })
    }

    pub fn with_citation(mut self, citation: impl Into<String>) -> Self {
        self.citation = Some(citation.into());
        self
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.status, ValueStatus::Exact | ValueStatus::ProvenExact)
    }

    /// The value of an exact result.
    pub fn value(&self) -> Option<f64> {
        if self.lower == self.upper {
            Some(self.lower)
        } else {
            None
        }
    }

    /// Interval intersection; both sides must describe the same quantity.
    /// `slack` absorbs floating rounding between evaluation paths.
    pub fn intersect(&self, other: &MetricValue, slack: f64) -> Result<MetricValue> {
        let lower = self.lower.max(other.lower);
        let upper = self.upper.min(other.upper);
        if lower > upper + slack {
            return Err(Error::InvalidValue(format!(
                "empty intersection: [{}, {}] vs [{}, {}]",
                self.lower, self.upper, other.lower, other.upper
            )));
        }
        let status = if self.is_exact() || other.is_exact() {
            ValueStatus::Exact
        } else {
            ValueStatus::Bounds
        };
        MetricValue::interval(lower.min(upper), upper, status)
    }
}

/// Exact-value constructor used across the crate.
pub fn metric_value_exact(v: f64) -> Result<MetricValue> {
    MetricValue::exact(v)
}

/// Families of candidate functions whose suprema define the invariant
/// objects; only the structured forms used by the counterexamples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CandidateFamily {
    /// `(|z_1| e^{phi})^{1 + eps/p}` on a Hartogs domain.
    MonomialHartogs,
    /// `g^{1 + eps/p}` built from a Green function.
    PowerOfGreen,
    Custom,
}

/// A concrete member of one of the candidate families: vanishes at the base
/// point, takes values in `[0, 1)` on the domain.
pub type CandidateEvaluator = Box<dyn Fn(&ComplexVector) -> Result<f64> + Send + Sync>;

pub struct CandidateFunction {
    pub family: CandidateFamily,
    pub base: ComplexVector,
    pub order: u32,
    pub eps: f64,
    evaluator: CandidateEvaluator,
}

impl std::fmt::Debug for CandidateFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CandidateFunction")
            .field("family", &self.family)
            .field("base", &self.base)
            .field("order", &self.order)
            .field("eps", &self.eps)
            .finish()
    }
}

impl CandidateFunction {
    pub fn new(
        family: CandidateFamily,
        base: ComplexVector,
        order: u32,
        eps: f64,
        evaluator: CandidateEvaluator,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder("candidate order must be >= 1".into()));
        }
        if eps <= 0.0 || !eps.is_finite() {
            return Err(Error::InvalidInput(format!(
                "exponent tweak must be positive, got {eps}"
            )));
        }
        let c = Self {
            family,
            base,
            order,
            eps,
            evaluator,
        };
        let at_base = c.eval(&c.base.clone())?;
        if at_base.abs() > 1e-12 {
            return Err(Error::InvalidValue(format!(
                "candidate does not vanish at its base point: {at_base}"
            )));
        }
        Ok(c)
    }

    /// Evaluates the candidate, enforcing the `[0, 1)` range contract.
    pub fn eval(&self, z: &ComplexVector) -> Result<f64> {
        let v = (self.evaluator)(z)?;
        if !v.is_finite() || !(0.0..1.0).contains(&v) {
            return Err(Error::InvalidValue(format!(
                "candidate value {v} outside [0, 1)"
            )));
        }
        Ok(v)
    }
}

/// Structured holomorphic maps; enough for every contractibility check in
/// scope, not a general symbolic representation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum HolomorphicMapSpec {
    /// `F_i(z) = c_i * prod_j z_j^{beta_ij}` with integer exponents.
    /// Negative exponents require nonzero coordinates in the source.
    MonomialMap {
        coefficients: Vec<Complex64>,
        exponents: Vec<Vec<i64>>,
    },
    /// Inserts fixed values at the given target slots, source coordinates
    /// fill the remaining slots in order.
    CoordinateEmbedding {
        target_dim: usize,
        fixed: Vec<(usize, Complex64)>,
    },
    /// Keeps the listed coordinates.
    Projection { indices: Vec<usize> },
    /// One-parameter affine curve `lambda -> base + lambda * direction`.
    Curve {
        base: ComplexVector,
        direction: ComplexVector,
    },
}

impl HolomorphicMapSpec {
    pub fn source_dim(&self) -> usize {
        match self {
            HolomorphicMapSpec::MonomialMap { exponents, .. } => {
                exponents.first().map_or(0, |row| row.len())
            }
            HolomorphicMapSpec::CoordinateEmbedding { target_dim, fixed } => {
                target_dim - fixed.len()
            }
            HolomorphicMapSpec::Projection { indices } => {
                indices.iter().max().map_or(1, |m| m + 1)
            }
            HolomorphicMapSpec::Curve { .. } => 1,
        }
    }

    pub fn target_dim(&self) -> usize {
        match self {
            HolomorphicMapSpec::MonomialMap { coefficients, .. } => coefficients.len(),
            HolomorphicMapSpec::CoordinateEmbedding { target_dim, .. } => *target_dim,
            HolomorphicMapSpec::Projection { indices } => indices.len(),
            HolomorphicMapSpec::Curve { base, .. } => base.dim(),
        }
    }
}

/// `z^k` for integer `k`; `DomainViolation` on `0^k`, `k < 0`.
fn int_pow(z: Complex64, k: i64) -> Result<Complex64> {
    if k < 0 && z.norm_sqr() == 0.0 {
        return Err(Error::DomainViolation(
            "negative exponent at a zero coordinate".into(),
        ));
    }
    if k >= 0 {
        Ok(z.powu(k as u32))
    } else {
        Ok(z.powi(k as i32))
    }
}

/// Applies a structured holomorphic map to a point.
pub fn apply_map(map: &HolomorphicMapSpec, z: &ComplexVector) -> Result<ComplexVector> {
    match map {
        HolomorphicMapSpec::MonomialMap {
            coefficients,
            exponents,
        } => {
            if exponents.len() != coefficients.len() {
                return Err(Error::InvalidInput(
                    "one exponent row per coefficient required".into(),
                ));
            }
            let n = map.source_dim();
            if z.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: z.dim(),
                });
            }
            let mut out = Vec::with_capacity(coefficients.len());
            for (c, row) in coefficients.iter().zip(exponents.iter()) {
                if row.len() != n {
                    return Err(Error::InvalidInput("ragged exponent matrix".into()));
                }
                let mut v = *c;
                for (j, &b) in row.iter().enumerate() {
                    v *= int_pow(z.get(j), b)?;
                }
                out.push(v);
            }
            ComplexVector::new(out)
        }
        HolomorphicMapSpec::CoordinateEmbedding { target_dim, fixed } => {
            let n = target_dim - fixed.len();
            if z.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: z.dim(),
                });
            }
            let mut out = vec![None; *target_dim];
            for &(idx, val) in fixed {
                if idx >= *target_dim || out[idx].is_some() {
                    return Err(Error::InvalidInput(format!(
                        "bad fixed slot {idx} for target dimension {target_dim}"
                    )));
                }
                out[idx] = Some(val);
            }
            let mut src = z.entries().iter();
            let filled: Vec<Complex64> = out
                .into_iter()
                .map(|slot| slot.unwrap_or_else(|| *src.next().expect("slot count checked")))
                .collect();
            ComplexVector::new(filled)
        }
        HolomorphicMapSpec::Projection { indices } => {
            for &i in indices {
                if i >= z.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: i + 1,
                        got: z.dim(),
                    });
                }
            }
            ComplexVector::new(indices.iter().map(|&i| z.get(i)).collect())
        }
        HolomorphicMapSpec::Curve { base, direction } => {
            let lambda = z.as_scalar()?;
            base.add_scaled(lambda, direction)
        }
    }
}

/// Exact derivative `F'(a) X` of a structured map.
pub fn apply_derivative(
    map: &HolomorphicMapSpec,
    a: &ComplexVector,
    x: &ComplexVector,
) -> Result<ComplexVector> {
    if a.dim() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: x.dim(),
        });
    }
    match map {
        HolomorphicMapSpec::MonomialMap {
            coefficients,
            exponents,
        } => {
            let n = map.source_dim();
            if a.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: a.dim(),
                });
            }
            let mut out = Vec::with_capacity(coefficients.len());
            for (c, row) in coefficients.iter().zip(exponents.iter()) {
                let mut deriv = Complex64::new(0.0, 0.0);
                for (j, &bj) in row.iter().enumerate() {
                    if bj == 0 {
                        continue;
                    }
                    // term = c * b_j * X_j * prod_k a_k^{b_k - delta_jk}
                    let mut term = *c * Complex64::new(bj as f64, 0.0) * x.get(j);
                    for (k, &bk) in row.iter().enumerate() {
                        let e = if k == j { bk - 1 } else { bk };
                        term *= int_pow(a.get(k), e)?;
                        if term.norm_sqr() == 0.0 {
                            break;
                        }
                    }
                    deriv += term;
                }
                out.push(deriv);
            }
            ComplexVector::new(out)
        }
        HolomorphicMapSpec::CoordinateEmbedding { target_dim, fixed } => {
            let zeros = fixed.iter().map(|&(i, _)| (i, Complex64::new(0.0, 0.0)));
            let zero_map = HolomorphicMapSpec::CoordinateEmbedding {
                target_dim: *target_dim,
                fixed: zeros.collect(),
            };
            apply_map(&zero_map, x)
        }
        HolomorphicMapSpec::Projection { .. } => apply_map(map, x),
        HolomorphicMapSpec::Curve { direction, .. } => {
            let lambda = x.as_scalar()?;
            Ok(direction.scale(lambda))
        }
    }
}

/// Composes two monomial maps: `(F o G)(z) = F(G(z))`.
pub fn compose_monomial(
    f: &HolomorphicMapSpec,
    g: &HolomorphicMapSpec,
) -> Result<HolomorphicMapSpec> {
    let (fc, fe) = match f {
        HolomorphicMapSpec::MonomialMap {
            coefficients,
            exponents,
        } => (coefficients, exponents),
        _ => return Err(Error::InvalidInput("outer map must be monomial".into())),
    };
    let (gc, ge) = match g {
        HolomorphicMapSpec::MonomialMap {
            coefficients,
            exponents,
        } => (coefficients, exponents),
        _ => return Err(Error::InvalidInput("inner map must be monomial".into())),
    };
    if f.source_dim() != g.target_dim() {
        return Err(Error::DimensionMismatch {
            expected: f.source_dim(),
            got: g.target_dim(),
        });
    }
    let n_in = g.source_dim();
    let mut coefficients = Vec::with_capacity(fc.len());
    let mut exponents = Vec::with_capacity(fc.len());
    for (ci, row_f) in fc.iter().zip(fe.iter()) {
        let mut c = *ci;
        let mut row = vec![0i64; n_in];
        for (m, &b_im) in row_f.iter().enumerate() {
            if b_im == 0 {
                continue;
            }
            c *= int_pow(gc[m], b_im)?;
            for (j, &g_mj) in ge[m].iter().enumerate() {
                row[j] += b_im * g_mj;
            }
        }
        coefficients.push(c);
        exponents.push(row);
    }
    Ok(HolomorphicMapSpec::MonomialMap {
        coefficients,
        exponents,
    })
}
