//! Elementary Reinhardt domains
//! `D_alpha = { z : |z_1|^{alpha_1} ... |z_n|^{alpha_n} < 1 }`
//! (with the axes excluded wherever `alpha_j < 0`): membership, point
//! classification, and closed-form evaluators for all six invariant objects.
//!
//! Two arithmetic classes of exponent vectors behave differently.  For
//! relatively prime integer exponents everything reduces through the
//! monomial `z -> z^alpha` to the unit disc, e.g.
//! `g(a, z) = m(a^alpha, z^alpha)^{1/r(a)}`.  For exponents that are not a
//! real multiple of an integer vector the Möbius function degenerates to 0
//! and only moduli formulas remain.  Higher-order Sibony metrics follow a
//! three-way classification: equal to Azukawa under a divisibility
//! condition, identically zero under an incommensurability condition, and
//! otherwise unknown (reported as proven bounds, never guessed).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disc::{gamma_disc, mobius_distance, DiscPoint};
use crate::error::{Error, Result};
use crate::foundations::{ComplexVector, MetricKind, MetricValue, ValueStatus};
use crate::sum::neumaier_sum;

/// Relative tolerance for the floating divisibility checks of the
/// higher-order classification on generic (non-integer) exponents.
const DIVISIBILITY_RTOL: f64 = 1e-9;

/// Largest denominator the rational-reconstruction validator certifies.
const RECONSTRUCTION_DENOMINATOR: i64 = 1_000_000;

/// Declared arithmetic class of an exponent vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithmeticClass {
    /// All exponents are integers with gcd 1.
    #[serde(rename = "integers")]
    RelPrimeIntegers,
    /// The vector is not a real multiple of an integer vector.
    #[serde(rename = "generic")]
    NotInRZn,
}

/// Exponent data of an elementary Reinhardt domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExponentVector {
    alpha: Vec<f64>,
    class: ArithmeticClass,
    ints: Option<Vec<i64>>,
}

impl ExponentVector {
    /// Relatively prime integer exponents.
    pub fn integers(alpha: Vec<i64>) -> Result<Self> {
        if alpha.len() < 2 {
            return Err(Error::InvalidInput("need dimension n >= 2".into()));
        }
        if alpha.contains(&0) {
            return Err(Error::InvalidInput("exponents must be nonzero".into()));
        }
        let mut g = 0u64;
        for &a in &alpha {
            g = gcd(g, a.unsigned_abs());
        }
        if g != 1 {
            return Err(Error::InvalidInput(format!(
                "integer exponents must be relatively prime (gcd = {g})"
            )));
        }
        Ok(Self {
            alpha: alpha.iter().map(|&a| a as f64).collect(),
            class: ArithmeticClass::RelPrimeIntegers,
            ints: Some(alpha),
        })
    }

    /// Exponents declared outside `R * Z^n`.  Validation is best effort:
    /// vectors whose coordinate ratios all reconstruct as rationals with
    /// denominator up to 10^6 are rejected; beyond that the caller's
    /// declaration is trusted.
    pub fn generic(alpha: Vec<f64>) -> Result<Self> {
        if alpha.len() < 2 {
            return Err(Error::InvalidInput("need dimension n >= 2".into()));
        }
        if alpha.iter().any(|&a| a == 0.0 || !a.is_finite()) {
            return Err(Error::InvalidInput(
                "exponents must be nonzero and finite".into(),
            ));
        }
        let base = alpha[0];
        let all_rational = alpha[1..]
            .iter()
            .all(|&a| reconstruct_rational(a / base).is_some());
        if all_rational {
            return Err(Error::InvalidInput(
                "exponent vector is a real multiple of an integer vector; \
                 declare it with the integer constructor instead"
                    .into(),
            ));
        }
        Ok(Self {
            alpha,
            class: ArithmeticClass::NotInRZn,
            ints: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn integer_alpha(&self) -> Option<&[i64]> {
        self.ints.as_deref()
    }

    pub fn class(&self) -> ArithmeticClass {
        self.class
    }

    fn check_dim(&self, v: &ComplexVector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.dim(),
            });
        }
        Ok(())
    }

    /// `|z^alpha|`; errors when a zero coordinate meets a negative exponent.
    pub fn abs_monomial(&self, z: &ComplexVector) -> Result<f64> {
        self.check_dim(z)?;
        let mut logs = Vec::with_capacity(self.dim());
        for (&a, e) in self.alpha.iter().zip(z.entries()) {
            let m = e.norm();
            if m == 0.0 {
                if a < 0.0 {
                    return Err(Error::DomainViolation(
                        "zero coordinate with negative exponent".into(),
                    ));
                }
                return Ok(0.0);
            }
            logs.push(a * m.ln());
        }
        Ok(neumaier_sum(logs).exp())
    }

    /// The complex value `z^alpha`; integer class only.
    pub fn complex_monomial(&self, z: &ComplexVector) -> Result<Complex64> {
        self.check_dim(z)?;
        let ints = self.ints.as_ref().ok_or_else(|| {
            Error::InvalidInput("complex monomial requires integer exponents".into())
        })?;
        let mut v = Complex64::new(1.0, 0.0);
        for (&a, e) in ints.iter().zip(z.entries()) {
            if e.norm_sqr() == 0.0 {
                if a < 0 {
                    return Err(Error::DomainViolation(
                        "zero coordinate with negative exponent".into(),
                    ));
                }
                return Ok(Complex64::new(0.0, 0.0));
            }
            v *= int_pow(*e, a);
        }
        Ok(v)
    }

    /// Membership in `D_alpha` (false outside `C^n(alpha)`).
    pub fn contains(&self, z: &ComplexVector) -> Result<bool> {
        self.check_dim(z)?;
        for (&a, e) in self.alpha.iter().zip(z.entries()) {
            if a < 0.0 && e.norm_sqr() == 0.0 {
                return Ok(false);
            }
        }
        Ok(self.abs_monomial(z)? < 1.0)
    }

    fn require_member(&self, z: &ComplexVector, role: &str) -> Result<()> {
        if !self.contains(z)? {
            return Err(Error::DomainViolation(format!(
                "{role} is not a point of D_alpha"
            )));
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn int_pow(z: Complex64, k: i64) -> Complex64 {
    if k >= 0 {
        z.powu(k as u32)
    } else {
        z.powi(k as i32)
    }
}

/// Continued-fraction reconstruction of `x` as `p/q`, `q <= 10^6`.
/// Returns the fraction only when it matches `x` to a few ulps.
fn reconstruct_rational(x: f64) -> Option<(i64, i64)> {
    if !x.is_finite() {
        return None;
    }
    let target = x;
    let mut x = x;
    // convergents p_k / q_k
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, x.floor() as i64, 1i64);
    for _ in 0..64 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - target).abs() <= 64.0 * f64::EPSILON * target.abs().max(1.0) {
            return Some((p1, q1));
        }
        let frac = x - x.floor();
        if frac.abs() < 1e-15 {
            break;
        }
        x = 1.0 / frac;
        let a = x.floor() as i64;
        let (p2, q2) = (
            a.checked_mul(p1)?.checked_add(p0)?,
            a.checked_mul(q1)?.checked_add(q0)?,
        );
        if q2 > RECONSTRUCTION_DENOMINATOR {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    None
}

/// Classification data of a base point `a` of `D_alpha`:
/// the vanishing index set, its cardinality, and the derived exponents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointClass {
    /// `Xi(a) = { j : alpha_j > 0 and a_j = 0 }`.
    pub xi: Vec<usize>,
    /// `sigma(a) = #Xi(a)`.
    pub sigma: usize,
    /// `r(a) = 1` when `sigma = 0`, else the sum of `alpha_j` over `Xi(a)`.
    pub r: f64,
    /// `mu(a) = min { alpha_j : j in Xi(a) }`; undefined when `sigma = 0`.
    pub mu: Option<f64>,
    /// Exact integer value of `r(a)` for integer exponent vectors.
    pub r_int: Option<i64>,
}

/// Classifies a base point of `D_alpha`.
pub fn classify(alpha: &ExponentVector, a: &ComplexVector) -> Result<PointClass> {
    alpha.require_member(a, "base point")?;
    let xi: Vec<usize> = alpha
        .alpha()
        .iter()
        .enumerate()
        .filter(|&(j, &aj)| aj > 0.0 && a.get(j).norm_sqr() == 0.0)
        .map(|(j, _)| j)
        .collect();
    let sigma = xi.len();
    let (r, r_int) = if sigma == 0 {
        (1.0, alpha.integer_alpha().map(|_| 1))
    } else {
        let r = neumaier_sum(xi.iter().map(|&j| alpha.alpha()[j]));
        let r_int = alpha
            .integer_alpha()
            .map(|ints| xi.iter().map(|&j| ints[j]).sum());
        (r, r_int)
    };
    let mu = if sigma == 0 {
        None
    } else {
        Some(
            xi.iter()
                .map(|&j| alpha.alpha()[j])
                .fold(f64::INFINITY, f64::min),
        )
    };
    Ok(PointClass {
        xi,
        sigma,
        r,
        mu,
        r_int,
    })
}

/// A validated point of `D_alpha` carrying its cached classification.
#[derive(Debug, Clone, PartialEq)]
pub struct ReinhardtPoint {
    point: ComplexVector,
    class: PointClass,
}

impl ReinhardtPoint {
    pub fn new(alpha: &ExponentVector, point: ComplexVector) -> Result<Self> {
        let class = classify(alpha, &point)?;
        Ok(Self { point, class })
    }

    pub fn point(&self) -> &ComplexVector {
        &self.point
    }

    pub fn class(&self) -> &PointClass {
        &self.class
    }
}

/// Value of the defining monomial at a point: the full complex number for
/// integer exponents, the modulus alone for generic ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MonomialValue {
    Complex(Complex64),
    Modulus(f64),
}

impl MonomialValue {
    pub fn modulus(&self) -> f64 {
        match self {
            MonomialValue::Complex(c) => c.norm(),
            MonomialValue::Modulus(m) => *m,
        }
    }
}

/// `z^alpha` as a [`MonomialValue`] according to the arithmetic class.
pub fn monomial_power(alpha: &ExponentVector, z: &ComplexVector) -> Result<MonomialValue> {
    match alpha.class() {
        ArithmeticClass::RelPrimeIntegers => {
            Ok(MonomialValue::Complex(alpha.complex_monomial(z)?))
        }
        ArithmeticClass::NotInRZn => Ok(MonomialValue::Modulus(alpha.abs_monomial(z)?)),
    }
}

/// Leading Taylor coefficient of `lambda -> (a + lambda X)^alpha` at 0,
/// together with its order.  Integer exponent class only.
///
/// For `sigma(a) >= 1` the coefficient is
/// `prod_{j not in Xi} a_j^{alpha_j} * prod_{j in Xi} X_j^{alpha_j}` at
/// order `r(a)`; for `sigma(a) = 0` it is the first derivative
/// `a^alpha * sum_j alpha_j X_j / a_j` at order 1.
pub fn taylor_lowest_coefficient(
    alpha: &ExponentVector,
    a: &ComplexVector,
    x: &ComplexVector,
) -> Result<(Complex64, f64)> {
    let ints = alpha.integer_alpha().ok_or_else(|| {
        Error::InvalidInput("Taylor coefficients require integer exponents".into())
    })?;
    alpha.check_dim(x)?;
    let class = classify(alpha, a)?;
    if class.sigma == 0 {
        let a_pow = alpha.complex_monomial(a)?;
        let mut log_deriv = Complex64::new(0.0, 0.0);
        for (j, &aj) in ints.iter().enumerate() {
            log_deriv += Complex64::new(aj as f64, 0.0) * x.get(j) / a.get(j);
        }
        Ok((a_pow * log_deriv, 1.0))
    } else {
        let mut c = Complex64::new(1.0, 0.0);
        for (j, &aj) in ints.iter().enumerate() {
            let factor = if class.xi.contains(&j) { x.get(j) } else { a.get(j) };
            if factor.norm_sqr() == 0.0 {
                if aj < 0 {
                    return Err(Error::DomainViolation(
                        "zero coordinate with negative exponent".into(),
                    ));
                }
                return Ok((Complex64::new(0.0, 0.0), class.r));
            }
            c *= int_pow(factor, aj);
        }
        Ok((c, class.r))
    }
}

/// Modulus of the leading coefficient, defined for both arithmetic classes
/// when `sigma(a) >= 1`.
fn abs_leading_coefficient(
    alpha: &ExponentVector,
    class: &PointClass,
    a: &ComplexVector,
    x: &ComplexVector,
) -> Result<f64> {
    let mut logs = Vec::with_capacity(alpha.dim());
    for (j, &aj) in alpha.alpha().iter().enumerate() {
        let m = if class.xi.contains(&j) {
            x.get(j).norm()
        } else {
            a.get(j).norm()
        };
        if m == 0.0 {
            if aj < 0.0 {
                return Err(Error::DomainViolation(
                    "zero coordinate with negative exponent".into(),
                ));
            }
            return Ok(0.0);
        }
        logs.push(aj * m.ln());
    }
    Ok(neumaier_sum(logs).exp())
}

fn mobius_of_monomials(
    alpha: &ExponentVector,
    a: &ComplexVector,
    z: &ComplexVector,
) -> Result<f64> {
    let ap = DiscPoint::new(alpha.complex_monomial(a)?)?;
    let zp = DiscPoint::new(alpha.complex_monomial(z)?)?;
    Ok(mobius_distance(ap, zp))
}

fn green_value(
    alpha: &ExponentVector,
    class: &PointClass,
    a: &ComplexVector,
    z: &ComplexVector,
) -> Result<f64> {
    match alpha.class() {
        ArithmeticClass::RelPrimeIntegers => {
            // sigma >= 1 forces a^alpha = 0, where the Möbius quotient is
            // plainly |z^alpha|; sharing that route keeps the sigma = 1
            // identity with the Sibony formula bit-exact
            if class.sigma >= 1 {
                Ok(alpha.abs_monomial(z)?.powf(1.0 / class.r))
            } else {
                Ok(mobius_of_monomials(alpha, a, z)?.powf(1.0 / class.r))
            }
        }
        ArithmeticClass::NotInRZn => {
            if class.sigma == 0 {
                Ok(0.0)
            } else {
                Ok(alpha.abs_monomial(z)?.powf(1.0 / class.r))
            }
        }
    }
}

/// Closed-form value of a function kind on `D_alpha`.
pub fn eval_function(
    alpha: &ExponentVector,
    kind: MetricKind,
    a: &ComplexVector,
    z: &ComplexVector,
) -> Result<MetricValue> {
    kind.validate()?;
    if !kind.is_function_kind() {
        return Err(Error::UnsupportedKind(format!(
            "{} is a metric kind; use eval_metric",
            kind.name()
        )));
    }
    alpha.require_member(a, "base point")?;
    alpha.require_member(z, "target point")?;
    let class = classify(alpha, a)?;
    let integer = alpha.class() == ArithmeticClass::RelPrimeIntegers;

    // The classical Sibony function is the order-2 member of the family.
    let kind = match kind {
        MetricKind::SibonyHigherFunction(2) => MetricKind::Sibony,
        k => k,
    };

    match kind {
        MetricKind::Mobius => {
            if integer {
                if class.sigma >= 1 {
                    MetricValue::exact(alpha.abs_monomial(z)?)
                } else {
                    MetricValue::exact(mobius_of_monomials(alpha, a, z)?)
                }
            } else {
                MetricValue::exact(0.0)
            }
        }
        MetricKind::Green => MetricValue::exact(green_value(alpha, &class, a, z)?),
        MetricKind::Sibony => {
            if class.sigma == 0 {
                if integer {
                    MetricValue::exact(mobius_of_monomials(alpha, a, z)?)
                } else {
                    MetricValue::exact(0.0)
                }
            } else {
                let mu = class.mu.expect("sigma >= 1");
                MetricValue::exact(alpha.abs_monomial(z)?.powf(1.0 / mu))
            }
        }
        MetricKind::SibonyHigherFunction(_) => {
            if class.sigma <= 1 {
                MetricValue::exact(green_value(alpha, &class, a, z)?)
            } else {
                // No effective formula is known; report the proven bracket
                // between the Möbius and Green values (a^alpha = 0 here).
                let lower = if integer { alpha.abs_monomial(z)? } else { 0.0 };
                let upper = green_value(alpha, &class, a, z)?;
                MetricValue::interval(lower.min(upper), upper, ValueStatus::Unknown)
            }
        }
        _ => unreachable!("function kinds handled above"),
    }
}

fn gamma_value(alpha: &ExponentVector, a: &ComplexVector, x: &ComplexVector) -> Result<f64> {
    match alpha.class() {
        ArithmeticClass::RelPrimeIntegers => {
            let (c, order) = taylor_lowest_coefficient(alpha, a, x)?;
            if order == 1.0 {
                let ap = DiscPoint::new(alpha.complex_monomial(a)?)?;
                Ok(gamma_disc(ap, c))
            } else {
                Ok(0.0)
            }
        }
        ArithmeticClass::NotInRZn => Ok(0.0),
    }
}

fn azukawa_value(
    alpha: &ExponentVector,
    class: &PointClass,
    a: &ComplexVector,
    x: &ComplexVector,
) -> Result<f64> {
    match alpha.class() {
        ArithmeticClass::RelPrimeIntegers => {
            let (c, order) = taylor_lowest_coefficient(alpha, a, x)?;
            let ap = DiscPoint::new(alpha.complex_monomial(a)?)?;
            Ok(gamma_disc(ap, c).powf(1.0 / order))
        }
        ArithmeticClass::NotInRZn => {
            if class.sigma == 0 {
                Ok(0.0)
            } else {
                Ok(abs_leading_coefficient(alpha, class, a, x)?.powf(1.0 / class.r))
            }
        }
    }
}

/// Is `p * alpha_j / r` a positive integer for every `j` in `Xi(a)`?
fn divisibility_holds(alpha: &ExponentVector, class: &PointClass, p: u64) -> bool {
    match (&class.r_int, alpha.integer_alpha()) {
        (Some(r), Some(ints)) => class
            .xi
            .iter()
            .all(|&j| (p as i64 * ints[j]).rem_euclid(*r) == 0),
        _ => class.xi.iter().all(|&j| {
            let q = p as f64 * alpha.alpha()[j] / class.r;
            (q - q.round()).abs() <= DIVISIBILITY_RTOL * q.abs().max(1.0) && q.round() >= 1.0
        }),
    }
}

/// Closed-form or classified value of a metric kind on `D_alpha`.
pub fn eval_metric(
    alpha: &ExponentVector,
    kind: MetricKind,
    a: &ComplexVector,
    x: &ComplexVector,
) -> Result<MetricValue> {
    kind.validate()?;
    if !kind.is_metric_kind() {
        return Err(Error::UnsupportedKind(format!(
            "{} is a function kind; use eval_function",
            kind.name()
        )));
    }
    alpha.require_member(a, "base point")?;
    alpha.check_dim(x)?;
    let class = classify(alpha, a)?;
    let integer = alpha.class() == ArithmeticClass::RelPrimeIntegers;

    let kind = match kind {
        MetricKind::SibonyHigherMetric(2) => MetricKind::Sibony,
        MetricKind::SibonyHigherMetric(q) if q % 2 == 1 => {
            return Err(Error::InvalidOrder(format!(
                "higher-order Sibony metric needs an even order, got {q}"
            )))
        }
        k => k,
    };

    match kind {
        MetricKind::Caratheodory => MetricValue::exact(gamma_value(alpha, a, x)?),
        MetricKind::Azukawa => MetricValue::exact(azukawa_value(alpha, &class, a, x)?),
        MetricKind::Sibony => {
            let equals_azukawa = if integer {
                class.sigma <= 1
            } else {
                class.sigma == 1
            };
            if equals_azukawa {
                MetricValue::exact(azukawa_value(alpha, &class, a, x)?)
            } else {
                MetricValue::exact(0.0)
            }
        }
        MetricKind::SibonyHigherMetric(q) => {
            let p = (q / 2) as u64;
            if class.sigma <= 1 || divisibility_holds(alpha, &class, p) {
                return MetricValue::exact(azukawa_value(alpha, &class, a, x)?);
            }
            if !divisibility_holds(alpha, &class, 2 * p) {
                return MetricValue::proven(
                    0.0,
                    format!(
                        "order-{q} Sibony metric vanishes: 2p*alpha_j/r(a) is not \
                         an integer for some vanishing coordinate, so every \
                         admissible order-{q} differential is zero"
                    ),
                );
            }
            // Divisibility holds at order 2p but not at p: no formula known.
            let lower = gamma_value(alpha, a, x)?;
            let upper = azukawa_value(alpha, &class, a, x)?;
            MetricValue::interval(lower.min(upper), upper, ValueStatus::Unknown)
        }
        _ => unreachable!("metric kinds handled above"),
    }
}

/// Green-power candidate `g(a, .)^{1 + eps/p}`: a member of the order-`p`
/// candidate family wherever the Green function's powers are smooth at the
/// base, which on these domains means `sigma(a) <= 1`.  Its values realize
/// the higher-order Sibony function in the limit `eps -> 0`.
pub fn green_power_candidate(
    alpha: &ExponentVector,
    base: &ComplexVector,
    p: u32,
    eps: f64,
) -> Result<crate::foundations::CandidateFunction> {
    if p == 0 {
        return Err(Error::InvalidOrder("order p must be >= 1".into()));
    }
    let class = classify(alpha, base)?;
    if class.sigma > 1 {
        return Err(Error::InvalidBase(format!(
            "the Green power is not smooth enough at a base with sigma = {}",
            class.sigma
        )));
    }
    let exponent = 1.0 + eps / f64::from(p);
    let alpha = alpha.clone();
    let base_clone = base.clone();
    let eval = move |z: &ComplexVector| -> Result<f64> {
        let g = eval_function(&alpha, MetricKind::Green, &base_clone, z)?;
        Ok(g.upper.powf(exponent))
    };
    crate::foundations::CandidateFunction::new(
        crate::foundations::CandidateFamily::PowerOfGreen,
        base.clone(),
        p,
        eps,
        Box::new(eval),
    )
}

/// Scalar exclusion predicate for exponent pairs `(q, 1)` at order `2p`:
/// true iff `q = (2p - k)/k` for some `k in {1, ..., 2p-1}`.
///
/// `q` is the exact rational `q_num / q_den`.  Outside this set the
/// order-`2p` Sibony metric of `D_{(q,1)}` at the origin vanishes.
pub fn in_exclusion_set(q_num: u64, q_den: u64, p: u32) -> Result<bool> {
    if q_num == 0 || q_den == 0 {
        return Err(Error::InvalidInput("q must be a positive rational".into()));
    }
    if p == 0 {
        return Err(Error::InvalidOrder("p must be >= 1".into()));
    }
    // q = (2p - k)/k  <=>  k (q + 1) = 2p  <=>  k = 2p q_den / (q_num + q_den)
    let s = q_num as u128 + q_den as u128;
    let t = 2 * p as u128 * q_den as u128;
    if !t.is_multiple_of(s) {
        return Ok(false);
    }
    let k = t / s;
    Ok(k >= 1 && k < 2 * p as u128)
}

/// Vector form of the exclusion predicate: true iff `alpha` (given as exact
/// rationals, ordered so the vanishing coordinates come last) falls in the
/// removed union, i.e. `2p alpha_j = k (alpha_{s+1} + ... + alpha_n)` for
/// some `p <= p_max`, `k < 2p`, `j > s`.
pub fn excluded_from_cs(alpha: &[(i64, i64)], s: usize, p_max: u32) -> Result<bool> {
    let n = alpha.len();
    if n < 2 || s > n - 2 {
        return Err(Error::InvalidInput(
            "need s <= n - 2 trailing positive coordinates".into(),
        ));
    }
    if alpha.iter().any(|&(num, den)| den <= 0 || num == 0) {
        return Err(Error::InvalidInput(
            "rational exponents need positive denominators and nonzero numerators".into(),
        ));
    }
    if alpha[s..].iter().any(|&(num, _)| num <= 0) {
        return Err(Error::InvalidInput(
            "coordinates after position s must be positive".into(),
        ));
    }
    // R = sum_{j > s} alpha_j over the common denominator of the tail.
    let mut r_num: i128 = 0;
    let mut r_den: i128 = 1;
    for &(num, den) in &alpha[s..] {
        r_num = r_num
            .checked_mul(den as i128)
            .and_then(|v| v.checked_add(num as i128 * r_den))
            .ok_or_else(|| Error::InvalidInput("rational overflow".into()))?;
        r_den = r_den
            .checked_mul(den as i128)
            .ok_or_else(|| Error::InvalidInput("rational overflow".into()))?;
    }
    for p in 1..=p_max as i128 {
        for k in 1..2 * p {
            for &(num, den) in &alpha[s..] {
                // 2p * num/den == k * r_num/r_den
                let lhs = 2 * p * num as i128 * r_den;
                let rhs = k * r_num * den as i128;
                if lhs == rhs {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(res: &[f64]) -> ComplexVector {
        ComplexVector::from_reals(res).unwrap()
    }

    fn alpha122() -> ExponentVector {
        ExponentVector::integers(vec![1, 2, 2]).unwrap()
    }

    #[test]
    fn classify_origin_and_shifted() {
        let a = alpha122();
        let c = classify(&a, &cv(&[0.0, 0.0, 0.0])).unwrap();
        assert_eq!((c.xi.as_slice(), c.sigma, c.r, c.mu), (&[0, 1, 2][..], 3, 5.0, Some(1.0)));
        let c = classify(&a, &cv(&[1.0 / 3.0, 0.0, 0.0])).unwrap();
        assert_eq!((c.xi.as_slice(), c.sigma, c.r, c.mu), (&[1, 2][..], 2, 4.0, Some(2.0)));
        let c = classify(
            &ExponentVector::integers(vec![2, 3]).unwrap(),
            &cv(&[0.5, 0.5]),
        )
        .unwrap();
        assert_eq!((c.sigma, c.r, c.mu), (0, 1.0, None));
    }

    #[test]
    fn sigma_one_means_r_equals_mu() {
        let a = ExponentVector::integers(vec![1, 2]).unwrap();
        let c = classify(&a, &cv(&[0.0, 0.5])).unwrap();
        assert_eq!(c.sigma, 1);
        assert_eq!(c.r, c.mu.unwrap());
    }

    #[test]
    fn monomial_products() {
        let a = alpha122();
        let v = a.abs_monomial(&cv(&[0.5, 0.5, 0.5])).unwrap();
        assert!((v - 1.0 / 32.0).abs() < 1e-16);
        let a11 = ExponentVector::integers(vec![1, 1]).unwrap();
        assert_eq!(a11.abs_monomial(&cv(&[0.0, 0.7])).unwrap(), 0.0);
        let neg = ExponentVector::integers(vec![-1, 2]).unwrap();
        assert!((neg.abs_monomial(&cv(&[0.5, 0.5])).unwrap() - 0.5).abs() < 1e-15);
        assert!(neg.abs_monomial(&cv(&[0.0, 0.5])).is_err());
    }

    #[test]
    fn taylor_coefficients() {
        let a11 = ExponentVector::integers(vec![1, 1]).unwrap();
        let (c, r) =
            taylor_lowest_coefficient(&a11, &cv(&[0.3, 0.4]), &cv(&[1.0, 2.0])).unwrap();
        assert!((c - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(r, 1.0);
        let (c, r) = taylor_lowest_coefficient(&a11, &cv(&[0.0, 0.0]), &cv(&[3.0, 5.0])).unwrap();
        assert!((c - Complex64::new(15.0, 0.0)).norm() < 1e-14);
        assert_eq!(r, 2.0);
        let a = alpha122();
        let (c, r) =
            taylor_lowest_coefficient(&a, &cv(&[0.0, 0.0, 0.0]), &cv(&[1.0, 1.0, 1.0])).unwrap();
        assert!((c - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(r, 5.0);
    }

    #[test]
    fn green_sibony_mobius_at_origin() {
        let a = alpha122();
        let origin = cv(&[0.0, 0.0, 0.0]);
        let z = cv(&[0.5, 0.5, 0.5]);
        let g = eval_function(&a, MetricKind::Green, &origin, &z).unwrap();
        assert!((g.value().unwrap() - 0.5).abs() < 1e-14);
        let s = eval_function(&a, MetricKind::Sibony, &origin, &z).unwrap();
        assert!((s.value().unwrap() - 1.0 / 32.0).abs() < 1e-16);
        let m = eval_function(&a, MetricKind::Mobius, &origin, &z).unwrap();
        assert!((m.value().unwrap() - 1.0 / 32.0).abs() < 1e-16);
    }

    #[test]
    fn sibony_at_shifted_base() {
        let a = alpha122();
        let base = cv(&[1.0 / 3.0, 0.0, 0.0]);
        let z = cv(&[0.5, 0.5, 0.5]);
        let s = eval_function(&a, MetricKind::Sibony, &base, &z).unwrap();
        assert!((s.value().unwrap() - (1.0f64 / 32.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn generic_class_mobius_vanishes() {
        let a = ExponentVector::generic(vec![std::f64::consts::SQRT_2, 1.0]).unwrap();
        let base = cv(&[0.5, 0.5]);
        let m = eval_function(&a, MetricKind::Mobius, &base, &cv(&[0.3, 0.3])).unwrap();
        assert_eq!(m.value(), Some(0.0));
        let g = eval_function(&a, MetricKind::Green, &base, &cv(&[0.3, 0.3])).unwrap();
        assert_eq!(g.value(), Some(0.0));
    }

    #[test]
    fn generic_validation_rejects_rational_multiples() {
        assert!(ExponentVector::generic(vec![2.0, 4.0]).is_err());
        assert!(ExponentVector::generic(vec![0.5, 0.25]).is_err());
        assert!(ExponentVector::generic(vec![std::f64::consts::SQRT_2, 1.0]).is_ok());
    }

    #[test]
    fn azukawa_closed_forms() {
        let a11 = ExponentVector::integers(vec![1, 1]).unwrap();
        // sigma = 0 base: gamma_D(0.12; 1.0) = 1/(1 - 0.0144)
        let v = eval_metric(&a11, MetricKind::Azukawa, &cv(&[0.3, 0.4]), &cv(&[1.0, 2.0]))
            .unwrap();
        assert!((v.value().unwrap() - 1.0 / 0.9856).abs() < 1e-14);
        // sigma = 2 at the origin: |X1 X2|^{1/2}, no 1/r! factor
        let v = eval_metric(&a11, MetricKind::Azukawa, &cv(&[0.0, 0.0]), &cv(&[1.0, 1.0]))
            .unwrap();
        assert!((v.value().unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sibony_metric_branches() {
        let a31 = ExponentVector::integers(vec![3, 1]).unwrap();
        let v = eval_metric(&a31, MetricKind::Sibony, &cv(&[0.0, 0.0]), &cv(&[1.0, 1.0]))
            .unwrap();
        assert_eq!(v.value(), Some(0.0));
        let a11 = ExponentVector::integers(vec![1, 1]).unwrap();
        // order 4k at the origin equals Azukawa
        let v = eval_metric(
            &a11,
            MetricKind::SibonyHigherMetric(4),
            &cv(&[0.0, 0.0]),
            &cv(&[1.0, 1.0]),
        )
        .unwrap();
        assert_eq!(v.value(), Some(1.0));
        assert_eq!(v.status, ValueStatus::Exact);
        // order 6: divisible at 2p = 6 but not at p = 3, so unknown bounds
        let v = eval_metric(
            &a11,
            MetricKind::SibonyHigherMetric(6),
            &cv(&[0.0, 0.0]),
            &cv(&[1.0, 1.0]),
        )
        .unwrap();
        assert_eq!(v.status, ValueStatus::Unknown);
        assert_eq!(v.lower, 0.0);
        assert!((v.upper - 1.0).abs() < 1e-15);
        // odd order rejected
        assert!(matches!(
            eval_metric(
                &a11,
                MetricKind::SibonyHigherMetric(3),
                &cv(&[0.0, 0.0]),
                &cv(&[1.0, 1.0]),
            ),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn zero_branch_cross_check_on_3_1() {
        // For alpha = (3,1) at the origin, r = 4 and 2*alpha_1/r = 6/4 is not
        // an integer, so the order-2 classification agrees with the closed
        // Sibony formula sigma >= 2 => 0.
        let a31 = ExponentVector::integers(vec![3, 1]).unwrap();
        let class = classify(&a31, &cv(&[0.0, 0.0])).unwrap();
        assert!(!divisibility_holds(&a31, &class, 1));
        assert!(!divisibility_holds(&a31, &class, 2));
    }

    #[test]
    fn exclusion_set_examples() {
        assert!(in_exclusion_set(1, 1, 1).unwrap());
        assert!(in_exclusion_set(3, 1, 2).unwrap());
        assert!(!in_exclusion_set(5, 1, 1).unwrap());
        assert!(in_exclusion_set(0, 1, 1).is_err());
        // q = 1/3 at p = 2: k (q+1) = 4 => k = 3 in {1,2,3} => excluded
        assert!(in_exclusion_set(1, 3, 2).unwrap());
    }

    #[test]
    fn cs_vector_predicate() {
        // alpha = (1, 1), s = 0: 2p alpha_1 = k (alpha_1 + alpha_2) with
        // p = 1, k = 1 => excluded.
        assert!(excluded_from_cs(&[(1, 1), (1, 1)], 0, 1).unwrap());
        // alpha = (5, 7), R = 12: 10p = 12k needs p divisible by 6, so the
        // first excluded order is p = 6 (k = 5 < 12).
        assert!(!excluded_from_cs(&[(5, 1), (7, 1)], 0, 5).unwrap());
        assert!(excluded_from_cs(&[(5, 1), (7, 1)], 0, 6).unwrap());
    }

    #[test]
    fn unknown_function_bounds_bracket_mobius_and_green() {
        let a = alpha122();
        let base = cv(&[1.0 / 3.0, 0.0, 0.0]);
        let z = cv(&[0.5, 0.5, 0.5]);
        let v = eval_function(&a, MetricKind::SibonyHigherFunction(3), &base, &z).unwrap();
        assert_eq!(v.status, ValueStatus::Unknown);
        let m = 1.0 / 32.0;
        let g = (1.0f64 / 32.0).powf(0.25);
        assert!((v.lower - m).abs() < 1e-15);
        assert!((v.upper - g).abs() < 1e-15);
    }

    #[test]
    fn strict_chain_values_on_2_3() {
        // m = 1/32 < s = (1/32)^{1/2} < g = (1/32)^{1/5} at the origin
        let a = ExponentVector::integers(vec![2, 3]).unwrap();
        let origin = cv(&[0.0, 0.0]);
        let z = cv(&[0.5, 0.5]);
        let m = eval_function(&a, MetricKind::Mobius, &origin, &z).unwrap();
        let s = eval_function(&a, MetricKind::Sibony, &origin, &z).unwrap();
        let g = eval_function(&a, MetricKind::Green, &origin, &z).unwrap();
        assert!((m.lower - 1.0 / 32.0).abs() < 1e-15);
        assert!((s.lower - (1.0f64 / 32.0).sqrt()).abs() < 1e-15);
        assert!((g.lower - 0.5).abs() < 1e-14);
        assert!(m.lower < s.lower && s.lower < g.lower);
    }

    #[test]
    fn green_power_candidate_realizes_the_sibony_function() {
        let a = alpha122();
        let base = cv(&[0.0, 0.4, 0.5]); // sigma = 1
        let z = cv(&[0.5, 0.5, 0.5]);
        let s3 = eval_function(&a, MetricKind::SibonyHigherFunction(3), &base, &z)
            .unwrap()
            .value()
            .unwrap();
        let mut prev = 0.0;
        for eps in [0.5, 0.1, 0.01, 1e-4] {
            let cand = green_power_candidate(&a, &base, 3, eps).unwrap();
            let v = cand.eval(&z).unwrap();
            assert!(v <= s3 + 1e-15, "candidate {v} exceeds s3 {s3}");
            assert!(v >= prev, "candidate values must increase as eps drops");
            prev = v;
        }
        assert!((prev - s3).abs() < 1e-4, "eps -> 0 limit {prev} vs {s3}");
        // no candidate at a base with two vanishing coordinates
        assert!(matches!(
            green_power_candidate(&a, &cv(&[0.5, 0.0, 0.0]), 3, 0.1),
            Err(Error::InvalidBase(_))
        ));
    }

    #[test]
    fn membership_checks() {
        let a = ExponentVector::integers(vec![-1, 2]).unwrap();
        assert!(a.contains(&cv(&[0.5, 0.5])).unwrap());
        assert!(!a.contains(&cv(&[0.0, 0.5])).unwrap());
        assert!(!a.contains(&cv(&[0.1, 5.0])).unwrap());
        let p = ReinhardtPoint::new(&a, cv(&[0.5, 0.5])).unwrap();
        assert_eq!(p.class().sigma, 0);
        assert!(ReinhardtPoint::new(&a, cv(&[0.0, 0.5])).is_err());
    }
}
