//! Closed-form primitives on the unit disc: the Möbius distance, the
//! Carathéodory-Reiffen metric, and the reference normalizations every
//! invariant family satisfies there.
//!
//! On the disc all the objects in scope collapse: every function kind equals
//! the Möbius distance, every even-order metric kind equals the
//! Carathéodory-Reiffen metric, and odd-order Sibony metrics vanish.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::foundations::{MetricKind, MetricValue};

/// Margin below which a point counts as sitting on the boundary.
/// Boundary-adjacent points are rejected rather than clamped.
const BOUNDARY_MARGIN: f64 = 1e-15;

/// A point strictly inside the unit disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscPoint(Complex64);

impl DiscPoint {
    pub fn new(value: Complex64) -> Result<Self> {
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::InvalidValue("non-finite disc point".into()));
        }
        if value.norm() >= 1.0 - BOUNDARY_MARGIN {
            return Err(Error::DomainViolation(format!(
                "|{value}| >= 1 - 1e-15 is outside the open unit disc"
            )));
        }
        Ok(Self(value))
    }

    pub fn real(t: f64) -> Result<Self> {
        Self::new(Complex64::new(t, 0.0))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }
}

/// Möbius distance `m(a, z) = |(z - a) / (1 - conj(a) z)|`.
///
/// Symmetric, zero iff `a = z`, and `m(0, t) = t`.
pub fn mobius_distance(a: DiscPoint, z: DiscPoint) -> f64 {
    let (a, z) = (a.value(), z.value());
    ((z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z)).norm()
}

/// Checked variant taking raw complex numbers.
pub fn mobius_distance_checked(a: Complex64, z: Complex64) -> Result<f64> {
    Ok(mobius_distance(DiscPoint::new(a)?, DiscPoint::new(z)?))
}

/// Carathéodory-Reiffen metric of the disc: `gamma(a; Y) = |Y| / (1 - |a|^2)`.
pub fn gamma_disc(a: DiscPoint, y: Complex64) -> f64 {
    y.norm() / (1.0 - a.value().norm_sqr())
}

/// Reference value of any metric kind on the disc at base point 0.
///
/// Function kinds return `t` itself and require `t < 1`; metric kinds are
/// homogeneous with value 1 at direction 1, so they return the input scale.
/// Odd-order Sibony metrics are identically zero.
pub fn disc_reference_value(kind: MetricKind, t_or_x: f64) -> Result<MetricValue> {
    kind.validate()?;
    if !t_or_x.is_finite() || t_or_x < 0.0 {
        return Err(Error::InvalidValue(format!(
            "reference argument must be finite and >= 0, got {t_or_x}"
        )));
    }
    if kind.is_function_kind() && t_or_x >= 1.0 {
        return Err(Error::DomainViolation(format!(
            "function-kind reference needs t < 1, got {t_or_x}"
        )));
    }
    match kind {
        MetricKind::Mobius | MetricKind::Green | MetricKind::Sibony => {
            MetricValue::exact(t_or_x)
        }
        MetricKind::SibonyHigherFunction(_) => MetricValue::exact(t_or_x),
        MetricKind::Caratheodory | MetricKind::Azukawa => MetricValue::exact(t_or_x),
        MetricKind::SibonyHigherMetric(q) if q % 2 == 0 => MetricValue::exact(t_or_x),
        MetricKind::SibonyHigherMetric(q) => MetricValue::proven(
            0.0,
            format!(
                "odd-order Sibony metric vanishes identically: the order-{q} \
                 Fréchet differential of a nonnegative function with a zero of \
                 order {q} at the base point is zero for odd {q}"
            ),
        ),
    }
}

/// `d`-type value of any function kind on the disc at an arbitrary base.
///
/// Disc automorphisms identify every base point with 0, where all function
/// kinds coincide with the Möbius distance.
pub fn disc_function_value(kind: MetricKind, a: Complex64, z: Complex64) -> Result<MetricValue> {
    kind.validate()?;
    if !kind.is_function_kind() {
        return Err(Error::UnsupportedKind(format!(
            "{} is not a function kind",
            kind.name()
        )));
    }
    MetricValue::exact(mobius_distance_checked(a, z)?)
}

/// `delta`-type value of any metric kind on the disc at an arbitrary base.
pub fn disc_metric_value(kind: MetricKind, a: Complex64, x: Complex64) -> Result<MetricValue> {
    kind.validate()?;
    if !kind.is_metric_kind() {
        return Err(Error::UnsupportedKind(format!(
            "{} is not a metric kind",
            kind.name()
        )));
    }
    let a = DiscPoint::new(a)?;
    match kind {
        MetricKind::SibonyHigherMetric(q) if q % 2 == 1 => {
            MetricValue::proven(0.0, "odd-order Sibony metric vanishes identically")
        }
        _ => MetricValue::exact(gamma_disc(a, x)),
    }
}
