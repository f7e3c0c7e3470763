//! The `eval` subcommand: parse a spec file and point literals, dispatch to
//! the library evaluators, print the result.

use std::path::Path;
use std::process::ExitCode;

use num_complex::Complex64;

use invmetrics::domain_spec::DomainSpec;
use invmetrics::foundations::ValueStatus;
use invmetrics::{ComplexVector, Error, MetricKind, MetricValue};

/// Complex literals are `re:im` pairs joined by commas, e.g.
/// `0.5:0,0:0.25,1:0`.
pub fn parse_vector(s: &str) -> Result<ComplexVector, String> {
    let entries = s
        .split(',')
        .map(|pair| {
            let mut it = pair.split(':');
            let re = it
                .next()
                .ok_or_else(|| format!("empty component in {pair:?}"))?
                .trim()
                .parse::<f64>()
                .map_err(|e| format!("bad real part in {pair:?}: {e}"))?;
            let im = match it.next() {
                Some(im) => im
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| format!("bad imaginary part in {pair:?}: {e}"))?,
                None => 0.0,
            };
            if it.next().is_some() {
                return Err(format!("too many colons in {pair:?}"));
            }
            Ok(Complex64::new(re, im))
        })
        .collect::<Result<Vec<_>, String>>()?;
    ComplexVector::new(entries).map_err(|e| e.to_string())
}

pub fn parse_kind(metric: &str, order: Option<u32>) -> Result<MetricKind, String> {
    match (metric, order) {
        ("mobius", None) => Ok(MetricKind::Mobius),
        ("caratheodory", None) => Ok(MetricKind::Caratheodory),
        ("green", None) => Ok(MetricKind::Green),
        ("azukawa", None) => Ok(MetricKind::Azukawa),
        ("sibony", None) => Ok(MetricKind::Sibony),
        ("sibony-function", Some(p)) => Ok(MetricKind::SibonyHigherFunction(p)),
        ("sibony-metric", Some(q)) => Ok(MetricKind::SibonyHigherMetric(q)),
        ("sibony-function" | "sibony-metric", None) => {
            Err(format!("{metric} requires --order"))
        }
        (m, Some(_)) => Err(format!("--order is not accepted for {m}")),
        (m, None) => Err(format!("unknown metric kind {m:?}")),
    }
}

fn exit_for_error(e: &Error) -> ExitCode {
    match e {
        Error::DomainViolation(_)
        | Error::DimensionMismatch { .. }
        | Error::RegionViolation(_)
        | Error::SingularPoint(_)
        | Error::NotProven(_)
        | Error::InvalidBase(_) => ExitCode::from(4),
        _ => ExitCode::from(2),
    }
}

fn print_value(v: &MetricValue, csv: bool) {
    if csv {
        let citation = v.citation.as_deref().unwrap_or("");
        let quoted = if citation.is_empty() {
            String::new()
        } else {
            format!("\"{}\"", citation.replace('"', "\"\""))
        };
        println!(
            "lower,upper,status,citation\n{:.16e},{:.16e},{:?},{}",
            v.lower, v.upper, v.status, quoted
        );
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(v).expect("metric values serialize")
        );
    }
}

#[allow(clippy::too_many_arguments)]
pub fn run(
    spec_path: &Path,
    metric: &str,
    order: Option<u32>,
    base: &str,
    target: Option<&str>,
    dir: Option<&str>,
    csv: bool,
    allow_bounds: bool,
) -> ExitCode {
    let raw = match std::fs::read_to_string(spec_path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", spec_path.display());
            return ExitCode::from(2);
        }
    };
    let spec: DomainSpec = match serde_json::from_str(&raw) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: invalid domain spec: {e}");
            return ExitCode::from(2);
        }
    };
    let domain = match spec.build() {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let kind = match parse_kind(metric, order) {
        Ok(k) => k,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let base = match parse_vector(base) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: bad base point: {e}");
            return ExitCode::from(2);
        }
    };

    let result = match (target, dir) {
        (Some(t), None) => match parse_vector(t) {
            Ok(z) => domain.eval_function(kind, &base, &z),
            Err(e) => {
                eprintln!("error: bad target point: {e}");
                return ExitCode::from(2);
            }
        },
        (None, Some(x)) => match parse_vector(x) {
            Ok(x) => domain.eval_metric(kind, &base, &x),
            Err(e) => {
                eprintln!("error: bad direction: {e}");
                return ExitCode::from(2);
            }
        },
        _ => {
            eprintln!("error: exactly one of --target or --dir is required");
            return ExitCode::from(2);
        }
    };

    match result {
        Ok(v) => {
            print_value(&v, csv);
            match v.status {
                ValueStatus::Exact | ValueStatus::ProvenExact => ExitCode::SUCCESS,
                ValueStatus::Bounds | ValueStatus::Unknown => {
                    if allow_bounds {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(3)
                    }
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_for_error(&e)
        }
    }
}
