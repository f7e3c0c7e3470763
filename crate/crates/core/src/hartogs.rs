//! Hartogs-type counterexample domains driven by plurisubharmonic
//! log-series: the three-dimensional domain whose higher-order Sibony
//! objects fail upper semicontinuity, its two-dimensional slice (showing
//! the regularized families are not holomorphically contractible), and the
//! increasing family whose Sibony functions fail monotone convergence.
//!
//! Series evaluations are certified: every value comes with a rigorous
//! bound on the truncation error, and queries the bounds cannot cover are
//! refused rather than degraded.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foundations::{
    CandidateFamily, CandidateFunction, ComplexVector, MetricKind, MetricValue,
};
use crate::sum::NeumaierSum;

const LN2: f64 = std::f64::consts::LN_2;

/// Floating slack added to every certified bound to absorb the compensated
/// summation's own rounding.
const ROUNDING_SLACK: f64 = 1e-13;

/// Weighted log-series `phi(xi, eta) = sum_k 2^{-k} log((|xi - a_k|^2 + |eta|)/k)`
/// over a dense sequence `a_k` in the punctured disc with `|a_k| >= 2^{-k}`.
///
/// The sequence enumerates a rational grid of the disc, greedily reordered
/// so the k-th point has modulus at least `2^{-k}`; that keeps the series
/// finite at the origin and gives a geometric tail bound.
#[derive(Debug, Clone)]
pub struct Exam1Series {
    points: Vec<Complex64>,
    truncation: usize,
}

impl Exam1Series {
    pub const DEFAULT_TRUNCATION: usize = 64;

    pub fn with_truncation(truncation: usize) -> Result<Self> {
        if truncation == 0 {
            return Err(Error::InvalidInput("need at least one series term".into()));
        }
        let mut pool: Vec<Complex64> = Vec::new();
        let mut consumed: Vec<bool> = Vec::new();
        let mut next_shell = 2i64;
        let mut points = Vec::with_capacity(truncation);
        for k in 1..=truncation {
            let threshold = 0.5f64.powi(k as i32);
            loop {
                let found = pool
                    .iter()
                    .enumerate()
                    .find(|(i, p)| !consumed[*i] && p.norm() >= threshold);
                if let Some((i, p)) = found {
                    points.push(*p);
                    consumed[i] = true;
                    break;
                }
                // extend the rational grid by the next denominator shell
                let d = next_shell;
                next_shell += 1;
                for u in -(d - 1)..=(d - 1) {
                    for v in -(d - 1)..=(d - 1) {
                        if gcd3(u.unsigned_abs(), v.unsigned_abs(), d as u64) != 1 {
                            continue;
                        }
                        let p = Complex64::new(u as f64 / d as f64, v as f64 / d as f64);
                        let norm = p.norm();
                        if norm > 0.0 && norm < 1.0 {
                            pool.push(p);
                            consumed.push(false);
                        }
                    }
                }
            }
        }
        Ok(Self { points, truncation })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// The k-th grid point (1-based).
    pub fn point(&self, k: usize) -> Complex64 {
        self.points[k - 1]
    }

    /// Weight `lambda_k = 2^{-k}` (1-based).
    pub fn weight(k: usize) -> f64 {
        0.5f64.powi(k as i32)
    }

    /// Certified evaluation of the truncated series plus its tail bound.
    ///
    /// The certified region is `eta != 0` (any `xi`) together with the axis
    /// `xi = 0` (any `eta`); with `eta = 0` and `xi != 0` the dense grid
    /// approaches `xi` and no tail bound exists, so the query is refused.
    pub fn phi(&self, xi: Complex64, eta: Complex64) -> Result<(f64, f64)> {
        let eta_abs = eta.norm();
        let xi_abs = xi.norm();
        if eta_abs == 0.0 && xi_abs != 0.0 {
            return Err(Error::RegionViolation(
                "with eta = 0 only xi = 0 admits a certified tail bound".into(),
            ));
        }
        let mut acc = NeumaierSum::new();
        for (i, a) in self.points.iter().enumerate() {
            let k = i + 1;
            let arg = ((xi - a).norm_sqr() + eta_abs) / k as f64;
            if arg < 1e-28 {
                return Err(Error::SingularPoint(format!(
                    "query point hits grid point #{k} at {a}"
                )));
            }
            acc.add(Self::weight(k) * arg.ln());
        }
        let kk = self.truncation as f64;
        let m_big = (1.0 + xi_abs).powi(2) + eta_abs;
        let pos_part = m_big.ln().max(0.0);
        let tail_scale = 0.5f64.powi(self.truncation as i32);
        let tail = if xi_abs == 0.0 {
            // |log arg| <= 2k log 2 + log k + log^+ M
            tail_scale * (2.0 * LN2 * (kk + 2.0) + (kk + 1.0).ln() + 1.0 + pos_part)
        } else {
            // |log arg| <= log k + |log eta| + log^+ M
            tail_scale * ((kk + 1.0).ln() + 1.0 + eta_abs.ln().abs() + pos_part)
        };
        Ok((acc.total(), tail + ROUNDING_SLACK))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(gcd(a, b), c)
}

/// Exact partial sum `phi_k(lambda) = sum_{s=2}^k s^{-2} log|lambda - 1/s|`.
pub fn phi3_partial(k: usize, lambda: Complex64) -> Result<f64> {
    if k < 2 {
        return Err(Error::InvalidInput("partial sums start at k = 2".into()));
    }
    if lambda.norm() >= 0.5 {
        return Err(Error::RegionViolation(
            "partial sums are used on |lambda| < 1/2".into(),
        ));
    }
    let mut acc = NeumaierSum::new();
    for s in 2..=k {
        let d = (lambda - Complex64::new(1.0 / s as f64, 0.0)).norm();
        if d < 1e-14 {
            return Err(Error::SingularPoint(format!(
                "lambda within 1e-14 of the singularity 1/{s}"
            )));
        }
        acc.add(d.ln() / (s * s) as f64);
    }
    Ok(acc.total())
}

/// Certified evaluation of the full series
/// `phi(lambda) = sum_{s=2}^infty s^{-2} log|lambda - 1/s|`, `|lambda| < 1/2`.
///
/// The truncation index adapts to the target error; the tail is enclosed by
/// integral bounds and reported as a certified half-width.
pub fn phi3_full(lambda: Complex64, target_err: f64) -> Result<(f64, f64)> {
    if lambda.norm() >= 0.5 {
        return Err(Error::RegionViolation(
            "the series is defined on |lambda| < 1/2".into(),
        ));
    }
    if target_err.is_nan() || target_err <= 0.0 {
        return Err(Error::InvalidInput("target error must be positive".into()));
    }
    let r = lambda.norm();
    let k = if r == 0.0 {
        // half-width ~ log K / K^2
        let mut k = 1000.0f64;
        for _ in 0..4 {
            k = (k.ln().max(1.0) / target_err).sqrt();
        }
        (k.ceil() as usize).clamp(1000, 4_000_000)
    } else {
        let base = (3.0 / r).ceil();
        if base > 1e7 {
            return Err(Error::RegionViolation(
                "lambda too close to the accumulation point of the singularities".into(),
            ));
        }
        let from_err = (((r.ln().abs() / 2.0) + 0.75 / r) / target_err).sqrt().ceil();
        (base.max(from_err).max(1000.0) as usize).min(10_000_000)
    };

    let mut acc = NeumaierSum::new();
    for s in 2..=k {
        let d = (lambda - Complex64::new(1.0 / s as f64, 0.0)).norm();
        if d < 1e-14 {
            return Err(Error::SingularPoint(format!(
                "lambda within 1e-14 of the singularity 1/{s}"
            )));
        }
        acc.add(d.ln() / (s * s) as f64);
    }
    let kk = k as f64;
    let (tail_mid, tail_half) = if r == 0.0 {
        // tail of -sum log s / s^2, enclosed by integrals of log x / x^2
        let hi = (kk.ln() + 1.0) / kk;
        let lo = ((kk + 1.0).ln() + 1.0) / (kk + 1.0);
        (-(hi + lo) / 2.0, (hi - lo) / 2.0)
    } else {
        // tail = log|lambda| * sum_{s>K} s^{-2} + O(1/(s|lambda|)) terms
        let hi = 1.0 / kk;
        let lo = 1.0 / (kk + 1.0);
        let mid = r.ln() * (hi + lo) / 2.0;
        let half = r.ln().abs() * (hi - lo) / 2.0 + 0.75 / (kk * kk * r);
        (mid, half)
    };
    Ok((acc.total() + tail_mid, tail_half + ROUNDING_SLACK))
}

/// Specification of a certified series evaluation.
#[derive(Debug, Clone)]
pub enum PhiSeriesSpec {
    /// The two-variable weighted log-series with its truncation.
    Exam1(Exam1Series),
    /// Partial sum of the one-variable series.
    Exam3Partial { k: usize },
    /// Full one-variable series at a target certified error.
    Exam3Full { target_err: f64 },
}

/// Evaluates a series spec at a point, returning the value and a rigorous
/// bound on its error (zero for exact partial sums).
pub fn phi_eval(spec: &PhiSeriesSpec, point: &ComplexVector) -> Result<(f64, f64)> {
    match spec {
        PhiSeriesSpec::Exam1(series) => {
            if point.dim() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    got: point.dim(),
                });
            }
            series.phi(point.get(0), point.get(1))
        }
        PhiSeriesSpec::Exam3Partial { k } => {
            let lambda = point.as_scalar()?;
            Ok((phi3_partial(*k, lambda)?, 0.0))
        }
        PhiSeriesSpec::Exam3Full { target_err } => {
            let lambda = point.as_scalar()?;
            phi3_full(lambda, *target_err)
        }
    }
}

/// Membership verdict carrying the certification margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    In,
    Out,
    /// The defining inequality is within the certified error of the series.
    Indeterminate,
}

/// The counterexample domains.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub enum HartogsDomain {
    /// `{ z in C^3 : |z_1| e^{phi(z_2, z_3)} < 1 }`.
    Exam1G { truncation: usize },
    /// The slice `{ (z_1, z_2) : (z_1, z_2, 0) in Exam1G }`.
    Exam1Slice { truncation: usize },
    /// `{ |z_1| < 1/2, |z_2| e^{phi_k(z_1)} < 1 }` for a partial sum.
    Exam3Gk { k: usize },
    /// The union domain of the full series.
    Exam3G,
}

impl HartogsDomain {
    pub fn dim(&self) -> usize {
        match self {
            HartogsDomain::Exam1G { .. } => 3,
            _ => 2,
        }
    }

    fn series(&self) -> Result<Exam1Series> {
        match self {
            HartogsDomain::Exam1G { truncation } | HartogsDomain::Exam1Slice { truncation } => {
                Exam1Series::with_truncation(*truncation)
            }
            _ => Err(Error::InvalidInput("not a two-variable-series domain".into())),
        }
    }

    /// Certified membership test.
    pub fn contains(&self, z: &ComplexVector) -> Result<Membership> {
        if z.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: z.dim(),
            });
        }
        match self {
            HartogsDomain::Exam1G { .. } => {
                let z1 = z.get(0).norm();
                if z1 == 0.0 {
                    return Ok(Membership::In);
                }
                let (phi, err) = self.series()?.phi(z.get(1), z.get(2))?;
                hartogs_margin(z1, phi, err)
            }
            HartogsDomain::Exam1Slice { truncation } => {
                let embedded = ComplexVector::new(vec![
                    z.get(0),
                    z.get(1),
                    Complex64::new(0.0, 0.0),
                ])?;
                HartogsDomain::Exam1G {
                    truncation: *truncation,
                }
                .contains(&embedded)
            }
            HartogsDomain::Exam3Gk { k } => {
                let lambda = z.get(0);
                if lambda.norm() >= 0.5 {
                    return Ok(Membership::Out);
                }
                if is_exact_singularity(lambda, *k) {
                    return Ok(Membership::In);
                }
                match phi3_partial(*k, lambda) {
                    Ok(phi) => hartogs_margin(z.get(1).norm(), phi, 1e-13),
                    Err(Error::SingularPoint(_)) => Ok(Membership::Indeterminate),
                    Err(e) => Err(e),
                }
            }
            HartogsDomain::Exam3G => {
                let lambda = z.get(0);
                if lambda.norm() >= 0.5 {
                    return Ok(Membership::Out);
                }
                if is_exact_singularity(lambda, usize::MAX) {
                    return Ok(Membership::In);
                }
                match phi3_full(lambda, 1e-10) {
                    Ok((phi, err)) => hartogs_margin(z.get(1).norm(), phi, err),
                    Err(Error::SingularPoint(_)) => Ok(Membership::Indeterminate),
                    Err(e) => Err(e),
                }
            }
        }
    }
}

fn hartogs_margin(fiber_abs: f64, phi: f64, err: f64) -> Result<Membership> {
    if fiber_abs == 0.0 {
        return Ok(Membership::In);
    }
    let log_m = fiber_abs.ln() + phi;
    if log_m + err < 0.0 {
        Ok(Membership::In)
    } else if log_m - err >= 0.0 {
        Ok(Membership::Out)
    } else {
        Ok(Membership::Indeterminate)
    }
}

/// Does `lambda` equal the f64 rounding of some singularity `1/s`?
fn is_exact_singularity(lambda: Complex64, max_s: usize) -> bool {
    if lambda.im != 0.0 || lambda.re <= 0.0 {
        return false;
    }
    let guess = (1.0 / lambda.re).round();
    if guess < 2.0 || !guess.is_finite() {
        return false;
    }
    let s = guess as usize;
    s <= max_s && lambda.re == 1.0 / guess
}

/// A metric query: either a target point or a direction at the base.
#[derive(Debug, Clone, Copy)]
pub enum Query<'a> {
    Point(&'a ComplexVector),
    Direction(&'a ComplexVector),
}

/// Certified lower bound obtained from the explicit candidate functions.
///
/// For point queries this evaluates the candidate
/// `(fiber-modulus * e^phi)^{1 + eps/p}` at the target; for direction
/// queries it returns the closed-form limsup quotient of the unweighted
/// candidate (the `eps`-free order-2p member), which lower-bounds the
/// corresponding higher-order Sibony metric.
pub fn candidate_lower_bound(
    domain: &HartogsDomain,
    base: &ComplexVector,
    p: u32,
    query: Query<'_>,
    eps: f64,
) -> Result<f64> {
    if p == 0 {
        return Err(Error::InvalidOrder("order p must be >= 1".into()));
    }
    if eps <= 0.0 || !eps.is_finite() {
        return Err(Error::InvalidInput("eps must be positive".into()));
    }
    match domain {
        HartogsDomain::Exam1G { .. } => {
            if base.dim() != 3 {
                return Err(Error::DimensionMismatch {
                    expected: 3,
                    got: base.dim(),
                });
            }
            let t = base.get(2);
            if base.get(0).norm() != 0.0
                || base.get(1).norm() != 0.0
                || t.im != 0.0
                || t.re <= 0.0
            {
                return Err(Error::InvalidBase(
                    "candidates exist at the bases (0, 0, t) with t > 0 only".into(),
                ));
            }
            let series = domain.series()?;
            match query {
                Query::Point(z) => {
                    if z.dim() != 3 {
                        return Err(Error::DimensionMismatch {
                            expected: 3,
                            got: z.dim(),
                        });
                    }
                    if domain.contains(z)? == Membership::Out {
                        return Err(Error::DomainViolation("target outside the domain".into()));
                    }
                    let z1 = z.get(0).norm();
                    if z1 == 0.0 {
                        return Ok(0.0);
                    }
                    let (phi, _) = series.phi(z.get(1), z.get(2))?;
                    Ok((z1 * phi.exp()).powf(1.0 + eps / p as f64))
                }
                Query::Direction(x) => {
                    if x.dim() != 3 {
                        return Err(Error::DimensionMismatch {
                            expected: 3,
                            got: x.dim(),
                        });
                    }
                    let (phi, _) = series.phi(Complex64::new(0.0, 0.0), t)?;
                    Ok(x.get(0).norm() * phi.exp())
                }
            }
        }
        HartogsDomain::Exam3Gk { k } => {
            if base.dim() != 2 || !base.is_zero() {
                return Err(Error::InvalidBase(
                    "candidates exist at the base (0, 0) only".into(),
                ));
            }
            match query {
                Query::Point(z) => {
                    if z.dim() != 2 {
                        return Err(Error::DimensionMismatch {
                            expected: 2,
                            got: z.dim(),
                        });
                    }
                    if domain.contains(z)? == Membership::Out {
                        return Err(Error::DomainViolation("target outside the domain".into()));
                    }
                    let z2 = z.get(1).norm();
                    if z2 == 0.0 {
                        return Ok(0.0);
                    }
                    let phi = phi3_partial(*k, z.get(0))?;
                    Ok((z2 * phi.exp()).powf(1.0 + eps / p as f64))
                }
                Query::Direction(x) => {
                    if x.dim() != 2 {
                        return Err(Error::DimensionMismatch {
                            expected: 2,
                            got: x.dim(),
                        });
                    }
                    let phi0 = phi3_partial(*k, Complex64::new(0.0, 0.0))?;
                    Ok(x.get(1).norm() * phi0.exp())
                }
            }
        }
        HartogsDomain::Exam3G => Err(Error::InvalidBase(
            "the limit domain admits no smooth candidates at the origin; \
             its Sibony objects there are proven to vanish"
                .into(),
        )),
        HartogsDomain::Exam1Slice { .. } => Err(Error::InvalidBase(
            "no candidate functions on the slice; its Sibony objects are \
             proven to vanish on the cylinder over the disc"
                .into(),
        )),
    }
}

/// Builds the explicit candidate behind [`candidate_lower_bound`] as a
/// first-class [`CandidateFunction`]: the monomial-Hartogs member
/// `(fiber-modulus * e^phi)^{1 + eps/p}` vanishing at the base point.
pub fn hartogs_candidate(
    domain: &HartogsDomain,
    base: &ComplexVector,
    p: u32,
    eps: f64,
) -> Result<CandidateFunction> {
    if p == 0 {
        return Err(Error::InvalidOrder("order p must be >= 1".into()));
    }
    let exponent = 1.0 + eps / f64::from(p);
    match domain {
        HartogsDomain::Exam1G { truncation } => {
            let t = base.get(2);
            if base.dim() != 3
                || base.get(0).norm() != 0.0
                || base.get(1).norm() != 0.0
                || t.im != 0.0
                || t.re <= 0.0
            {
                return Err(Error::InvalidBase(
                    "candidates exist at the bases (0, 0, t) with t > 0 only".into(),
                ));
            }
            let series = Exam1Series::with_truncation(*truncation)?;
            let eval = move |z: &ComplexVector| -> Result<f64> {
                if z.dim() != 3 {
                    return Err(Error::DimensionMismatch {
                        expected: 3,
                        got: z.dim(),
                    });
                }
                let z1 = z.get(0).norm();
                if z1 == 0.0 {
                    return Ok(0.0);
                }
                let (phi, _) = series.phi(z.get(1), z.get(2))?;
                Ok((z1 * phi.exp()).powf(exponent))
            };
            CandidateFunction::new(
                CandidateFamily::MonomialHartogs,
                base.clone(),
                p,
                eps,
                Box::new(eval),
            )
        }
        HartogsDomain::Exam3Gk { k } => {
            if base.dim() != 2 || !base.is_zero() {
                return Err(Error::InvalidBase(
                    "candidates exist at the base (0, 0) only".into(),
                ));
            }
            let k = *k;
            let eval = move |z: &ComplexVector| -> Result<f64> {
                if z.dim() != 2 {
                    return Err(Error::DimensionMismatch {
                        expected: 2,
                        got: z.dim(),
                    });
                }
                let z2 = z.get(1).norm();
                if z2 == 0.0 {
                    return Ok(0.0);
                }
                Ok((z2 * phi3_partial(k, z.get(0))?.exp()).powf(exponent))
            };
            CandidateFunction::new(
                CandidateFamily::MonomialHartogs,
                base.clone(),
                p,
                eps,
                Box::new(eval),
            )
        }
        _ => Err(Error::InvalidBase(
            "no candidate functions on this domain".into(),
        )),
    }
}

/// Paper-backed exact values. The whitelist is closed: queries outside the
/// proven tuples are refused with `NotProven`, never interpolated.
pub fn proven_value(
    domain: &HartogsDomain,
    kind: MetricKind,
    base: &ComplexVector,
    query: Query<'_>,
) -> Result<MetricValue> {
    kind.validate()?;
    if base.dim() != domain.dim() {
        return Err(Error::DimensionMismatch {
            expected: domain.dim(),
            got: base.dim(),
        });
    }
    match domain {
        HartogsDomain::Exam1G { .. } => {
            let series = domain.series()?;
            let t = base.get(2);
            let base_is_origin = base.is_zero();
            let base_is_ct = base.get(0).norm() == 0.0
                && base.get(1).norm() == 0.0
                && t.im == 0.0
                && t.re > 0.0;
            match (kind, query) {
                // Sibony functions of every order vanish from the origin to
                // any certifiable point of the z3 = 0 slice.
                (
                    MetricKind::Sibony | MetricKind::SibonyHigherFunction(_),
                    Query::Point(z),
                ) if base_is_origin => {
                    expect_dim(z, 3)?;
                    if z.get(2).norm() != 0.0 || z.get(1).norm() != 0.0 {
                        return Err(Error::NotProven(
                            "vanishing is certified on targets (b, 0, 0) only".into(),
                        ));
                    }
                    if domain.contains(z)? == Membership::Out {
                        return Err(Error::DomainViolation("target outside the domain".into()));
                    }
                    MetricValue::proven(
                        0.0,
                        "admissible candidates are constant on the lines C x {a_k} x {0} \
                         and vanish on {0} x C x {0}; smoothness and log-plurisubharmonicity \
                         force them to vanish on the whole z3 = 0 slice",
                    )
                }
                (
                    MetricKind::Sibony | MetricKind::SibonyHigherMetric(_),
                    Query::Direction(x),
                ) if base_is_origin => {
                    expect_dim(x, 3)?;
                    if x.get(1).norm() != 0.0 || x.get(2).norm() != 0.0 {
                        return Err(Error::NotProven(
                            "vanishing is proven along directions (X1, 0, 0) only".into(),
                        ));
                    }
                    MetricValue::proven(
                        0.0,
                        "higher-order Sibony metrics at the origin vanish along (X1, 0, 0): \
                         every admissible differential is killed on the z3 = 0 slice",
                    )
                }
                (MetricKind::Caratheodory, Query::Direction(x)) if base_is_origin => {
                    expect_dim(x, 3)?;
                    if x.get(1).norm() != 0.0 || x.get(2).norm() != 0.0 {
                        return Err(Error::NotProven(
                            "vanishing is proven along directions (X1, 0, 0) only".into(),
                        ));
                    }
                    MetricValue::proven(
                        0.0,
                        "bounded holomorphic functions are constant on the affine lines \
                         inside the domain (a Liouville argument), so their derivative \
                         at the origin vanishes along (X1, 0, 0)",
                    )
                }
                (
                    MetricKind::Azukawa | MetricKind::Sibony | MetricKind::SibonyHigherMetric(_),
                    Query::Direction(x),
                ) if base_is_ct => {
                    expect_dim(x, 3)?;
                    if x.get(1).norm() != 0.0 || x.get(2).norm() != 0.0 {
                        return Err(Error::NotProven(
                            "the value is proven along directions (X1, 0, 0) only".into(),
                        ));
                    }
                    if let MetricKind::SibonyHigherMetric(q) = kind {
                        if q % 2 == 1 {
                            return Err(Error::InvalidOrder(format!(
                                "higher-order Sibony metric needs an even order, got {q}"
                            )));
                        }
                    }
                    let (phi, err) = series.phi(Complex64::new(0.0, 0.0), t)?;
                    let value = x.get(0).norm() * phi.exp();
                    MetricValue::proven(
                        value,
                        format!(
                            "pinched between the candidate lower bound and the disc-map \
                             upper bound: both equal |X1| e^{{phi(0,t)}} (series error \
                             <= {err:.2e})"
                        ),
                    )
                }
                _ => Err(Error::NotProven(
                    "no proven value for this (kind, base, query) tuple".into(),
                )),
            }
        }
        HartogsDomain::Exam1Slice { truncation } => {
            // Vanishing of every Sibony object based in the cylinder over
            // the unit disc in the second coordinate.
            let w2 = base.get(1);
            if w2.norm() >= 1.0 {
                return Err(Error::NotProven(
                    "vanishing is proven for bases in C x D only".into(),
                ));
            }
            if w2.norm() != 0.0 {
                return Err(Error::NotProven(
                    "membership of this base cannot be certified; use bases (w1, 0)".into(),
                ));
            }
            let g = HartogsDomain::Exam1G {
                truncation: *truncation,
            };
            let embedded = ComplexVector::new(vec![
                base.get(0),
                base.get(1),
                Complex64::new(0.0, 0.0),
            ])?;
            if g.contains(&embedded)? == Membership::Out {
                return Err(Error::DomainViolation("base outside the slice".into()));
            }
            match (kind, query) {
                (MetricKind::Sibony | MetricKind::SibonyHigherFunction(_), Query::Point(z)) => {
                    expect_dim(z, 2)?;
                    if z.get(1).norm() != 0.0 {
                        return Err(Error::NotProven(
                            "target membership is certified on (t1, 0) only".into(),
                        ));
                    }
                    if domain.contains(z)? == Membership::Out {
                        return Err(Error::DomainViolation("target outside the slice".into()));
                    }
                    MetricValue::proven(
                        0.0,
                        "Sibony functions based in the cylinder over the disc vanish \
                         identically on the slice domain",
                    )
                }
                (
                    MetricKind::Sibony | MetricKind::SibonyHigherMetric(_),
                    Query::Direction(x),
                ) => {
                    expect_dim(x, 2)?;
                    MetricValue::proven(
                        0.0,
                        "higher-order Sibony metrics based in the cylinder over the disc \
                         vanish in every direction on the slice domain",
                    )
                }
                _ => Err(Error::NotProven(
                    "no proven value for this (kind, base, query) tuple".into(),
                )),
            }
        }
        HartogsDomain::Exam3G => {
            if !base.is_zero() {
                return Err(Error::NotProven(
                    "vanishing is proven at the base (0, 0) only".into(),
                ));
            }
            let phi0 = phi3_full(Complex64::new(0.0, 0.0), 1e-10)?.0;
            match (kind, query) {
                (MetricKind::Sibony | MetricKind::SibonyHigherFunction(_), Query::Point(z)) => {
                    expect_dim(z, 2)?;
                    if z.get(0).norm() != 0.0 {
                        return Err(Error::NotProven(
                            "vanishing is proven on the fiber targets (0, z2) only".into(),
                        ));
                    }
                    if z.get(1).norm() >= phi0.exp() {
                        return Err(Error::NotProven(format!(
                            "vanishing is proven for |z2| < e^phi(0) ~ {:.6} only",
                            phi0.exp()
                        )));
                    }
                    MetricValue::proven(
                        0.0,
                        "candidates are constant on the singular fibers, continuous at \
                         the origin, and log-plurisubharmonic, hence vanish on the fiber \
                         over 0 within radius e^phi(0)",
                    )
                }
                (
                    MetricKind::Sibony | MetricKind::SibonyHigherMetric(_),
                    Query::Direction(x),
                ) => {
                    expect_dim(x, 2)?;
                    if x.get(0).norm() != 0.0 {
                        return Err(Error::NotProven(
                            "vanishing is proven along directions (0, X2) only".into(),
                        ));
                    }
                    MetricValue::proven(
                        0.0,
                        "the Sibony metrics of the union domain vanish along (0, X2) at \
                         the origin, although every member of the increasing family is \
                         bounded below there",
                    )
                }
                _ => Err(Error::NotProven(
                    "no proven value for this (kind, base, query) tuple".into(),
                )),
            }
        }
        HartogsDomain::Exam3Gk { .. } => Err(Error::NotProven(
            "only candidate lower bounds are available on the family members".into(),
        )),
    }
}

fn expect_dim(v: &ComplexVector, n: usize) -> Result<()> {
    if v.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.dim(),
        });
    }
    Ok(())
}

/// One row of the increasing-family table.
#[derive(Debug, Clone, Serialize)]
pub struct IncreasingRow {
    pub k: usize,
    /// `phi_k(0)` (exact partial sum).
    pub phi_k_at_zero: f64,
    /// `e^{phi_k(0)}`, strictly decreasing in `k`.
    pub fiber_scale: f64,
    /// Candidate lower bound for the order-p Sibony function of the k-th
    /// family member at `(0, z2)`.
    pub lower_bound: f64,
    /// `e^{phi(0)}`, the limit of the `fiber_scale` column.
    pub limit_value: f64,
    /// The proven value on the union domain: zero.
    pub proven_limit: f64,
}

/// Table demonstrating the failure of the increasing-domain property: the
/// candidate lower bounds stay above `|z2| e^{phi(0)} > 0` for every `k`
/// while the value on the union domain is proven to be zero.
pub fn increasing_family_table(k_max: usize, z2_abs: f64, p: u32) -> Result<Vec<IncreasingRow>> {
    if k_max < 2 {
        return Err(Error::InvalidInput("need k_max >= 2".into()));
    }
    if p == 0 {
        return Err(Error::InvalidOrder("order p must be >= 1".into()));
    }
    let (phi0, err) = phi3_full(Complex64::new(0.0, 0.0), 1e-10)?;
    let limit = phi0.exp();
    if !(z2_abs > 0.0 && z2_abs < limit * (1.0 - err)) {
        return Err(Error::InvalidInput(format!(
            "need 0 < |z2| < e^phi(0) ~ {limit:.6}"
        )));
    }
    let mut rows = Vec::with_capacity(k_max - 1);
    let mut acc = NeumaierSum::new();
    for s in 2..=k_max {
        acc.add(-(s as f64).ln() / (s * s) as f64);
        let phi_k = acc.total();
        rows.push(IncreasingRow {
            k: s,
            phi_k_at_zero: phi_k,
            fiber_scale: phi_k.exp(),
            lower_bound: z2_abs * phi_k.exp(),
            limit_value: limit,
            proven_limit: 0.0,
        });
    }
    Ok(rows)
}
