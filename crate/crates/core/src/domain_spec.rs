//! JSON-facing domain descriptions and a unified evaluation dispatch.
//! Used by the verification harness for replayable reproducers and by the
//! command-line front end for spec files.

use serde::{Deserialize, Serialize};

use crate::balanced::{balanced_metrics_at_zero, MinkowskiSpec};
use crate::disc::{disc_function_value, disc_metric_value};
use crate::error::{Error, Result};
use crate::foundations::{ComplexVector, MetricKind, MetricValue};
use crate::hartogs::{proven_value, HartogsDomain, Query};
use crate::reinhardt::{eval_function, eval_metric, ArithmeticClass, ExponentVector};

fn default_true() -> bool {
    true
}

/// A domain document as it appears in spec files and reproducers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum DomainSpec {
    Disc,
    Reinhardt {
        alpha: Vec<f64>,
        class: ArithmeticClass,
    },
    Balanced {
        h: MinkowskiSpec,
        #[serde(default = "default_true")]
        pseudoconvex: bool,
    },
    Hartogs {
        variant: HartogsVariant,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        k: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        truncation: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HartogsVariant {
    #[serde(rename = "exam1")]
    Exam1,
    #[serde(rename = "exam1-slice")]
    Exam1Slice,
    #[serde(rename = "exam3")]
    Exam3,
}

/// Runtime handle built from a [`DomainSpec`].
#[derive(Debug, Clone)]
pub enum Domain {
    Disc,
    Reinhardt(ExponentVector),
    Balanced { h: MinkowskiSpec, pseudoconvex: bool },
    Hartogs(HartogsDomain),
}

impl DomainSpec {
    pub fn build(&self) -> Result<Domain> {
        match self {
            DomainSpec::Disc => Ok(Domain::Disc),
            DomainSpec::Reinhardt { alpha, class } => {
                let ev = match class {
                    ArithmeticClass::RelPrimeIntegers => {
                        let ints: Vec<i64> = alpha
                            .iter()
                            .map(|&a| {
                                if a.fract() == 0.0 && a.abs() <= i64::MAX as f64 {
                                    Ok(a as i64)
                                } else {
                                    Err(Error::InvalidInput(format!(
                                        "integer-class exponent {a} is not an integer"
                                    )))
                                }
                            })
                            .collect::<Result<_>>()?;
                        ExponentVector::integers(ints)?
                    }
                    ArithmeticClass::NotInRZn => ExponentVector::generic(alpha.clone())?,
                };
                Ok(Domain::Reinhardt(ev))
            }
            DomainSpec::Balanced { h, pseudoconvex } => {
                h.validate()?;
                Ok(Domain::Balanced {
                    h: h.clone(),
                    pseudoconvex: *pseudoconvex,
                })
            }
            DomainSpec::Hartogs {
                variant,
                k,
                truncation,
            } => {
                let trunc = truncation.unwrap_or(crate::hartogs::Exam1Series::DEFAULT_TRUNCATION);
                let dom = match variant {
                    HartogsVariant::Exam1 => HartogsDomain::Exam1G { truncation: trunc },
                    HartogsVariant::Exam1Slice => HartogsDomain::Exam1Slice { truncation: trunc },
                    HartogsVariant::Exam3 => match k {
                        Some(k) => HartogsDomain::Exam3Gk { k: *k },
                        None => HartogsDomain::Exam3G,
                    },
                };
                Ok(Domain::Hartogs(dom))
            }
        }
    }
}

impl Domain {
    pub fn dim(&self) -> usize {
        match self {
            Domain::Disc => 1,
            Domain::Reinhardt(ev) => ev.dim(),
            Domain::Balanced { h, .. } => h.dim().unwrap_or(0),
            Domain::Hartogs(d) => d.dim(),
        }
    }

    /// `d`-type evaluation dispatch.
    pub fn eval_function(
        &self,
        kind: MetricKind,
        a: &ComplexVector,
        z: &ComplexVector,
    ) -> Result<MetricValue> {
        match self {
            Domain::Disc => disc_function_value(kind, a.as_scalar()?, z.as_scalar()?),
            Domain::Reinhardt(ev) => eval_function(ev, kind, a, z),
            Domain::Balanced { h, pseudoconvex } => {
                if !a.is_zero() {
                    return Err(Error::DomainViolation(
                        "balanced-domain identities hold at the origin only".into(),
                    ));
                }
                balanced_metrics_at_zero(h, *pseudoconvex, kind, z)
            }
            Domain::Hartogs(d) => proven_value(d, kind, a, Query::Point(z)),
        }
    }

    /// `delta`-type evaluation dispatch.
    pub fn eval_metric(
        &self,
        kind: MetricKind,
        a: &ComplexVector,
        x: &ComplexVector,
    ) -> Result<MetricValue> {
        match self {
            Domain::Disc => disc_metric_value(kind, a.as_scalar()?, x.as_scalar()?),
            Domain::Reinhardt(ev) => eval_metric(ev, kind, a, x),
            Domain::Balanced { h, pseudoconvex } => {
                if !a.is_zero() {
                    return Err(Error::DomainViolation(
                        "balanced-domain identities hold at the origin only".into(),
                    ));
                }
                balanced_metrics_at_zero(h, *pseudoconvex, kind, x)
            }
            Domain::Hartogs(d) => proven_value(d, kind, a, Query::Direction(x)),
        }
    }

    /// Membership test where the domain family supports it.
    pub fn contains(&self, z: &ComplexVector) -> Result<bool> {
        match self {
            Domain::Disc => Ok(z.as_scalar()?.norm() < 1.0),
            Domain::Reinhardt(ev) => ev.contains(z),
            Domain::Balanced { h, .. } => Ok(crate::balanced::minkowski_eval(h, z)? < 1.0),
            Domain::Hartogs(d) => Ok(d.contains(z)? == crate::hartogs::Membership::In),
        }
    }
}
