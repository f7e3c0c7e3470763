//! Seeded property-test harness for the universally quantified claims:
//! inequality chains, holomorphic contractibility, disc normalizations,
//! and the non-upper-semicontinuity witness.  Every failure carries a
//! standalone reproducer that replays to the same violation, and identical
//! seeds produce byte-identical reports.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::disc::disc_reference_value;
use crate::domain_spec::{Domain, DomainSpec};
use crate::error::{Error, Result};
use crate::foundations::{
    apply_derivative, apply_map, ComplexVector, HolomorphicMapSpec, MetricKind,
};
use crate::reinhardt::{ArithmeticClass, ExponentVector};

/// Configuration of one property suite run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PropertySuite {
    pub name: String,
    pub domains: Vec<DomainSpec>,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl PropertySuite {
    /// Default chain suite: the disc plus seven exponent vectors covering
    /// both arithmetic classes and vanishing orders 0 through 3.
    pub fn chain_default(seed: u64, samples: usize) -> Self {
        PropertySuite {
            name: "chain".into(),
            domains: default_chain_domains(),
            samples,
            seed,
            tolerance: 1e-9,
        }
    }
}

pub fn default_chain_domains() -> Vec<DomainSpec> {
    vec![
        DomainSpec::Disc,
        DomainSpec::Reinhardt {
            alpha: vec![1.0, 2.0, 2.0],
            class: ArithmeticClass::RelPrimeIntegers,
        },
        DomainSpec::Reinhardt {
            alpha: vec![2.0, 3.0],
            class: ArithmeticClass::RelPrimeIntegers,
        },
        DomainSpec::Reinhardt {
            alpha: vec![3.0, 1.0],
            class: ArithmeticClass::RelPrimeIntegers,
        },
        DomainSpec::Reinhardt {
            alpha: vec![1.0, 1.0],
            class: ArithmeticClass::RelPrimeIntegers,
        },
        DomainSpec::Reinhardt {
            alpha: vec![-1.0, 2.0, 2.0],
            class: ArithmeticClass::RelPrimeIntegers,
        },
        DomainSpec::Reinhardt {
            alpha: vec![std::f64::consts::SQRT_2, 1.0],
            class: ArithmeticClass::NotInRZn,
        },
        DomainSpec::Reinhardt {
            alpha: vec![std::f64::consts::SQRT_2, 1.0, 1.0],
            class: ArithmeticClass::NotInRZn,
        },
    ]
}

/// What a reproducer replays.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum CheckKind {
    /// `lower(m) <= upper(s_p)` and `lower(s_p) <= upper(g)`.
    ChainFunction { p: u32 },
    /// `lower(gamma) <= upper(S_2p)` and `lower(S_2p) <= upper(A)`.
    ChainMetric { p: u32 },
    /// `lower(d_target(F a, F z)) <= upper(d_source(a, z))`.
    ContractFunction { kind: MetricKind },
    /// `lower(delta_target(F a; F'(a) X)) <= upper(delta_source(a; X))`.
    ContractMetric { kind: MetricKind },
    /// `s((1/k, 0, 0), z) > s(0, z)`.
    NonUscWitness { k: u32 },
}

/// Standalone failure reproducer: domain spec plus inputs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Reproducer {
    pub check: CheckKind,
    pub domain: DomainSpec,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub target_domain: Option<DomainSpec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub map: Option<HolomorphicMapSpec>,
    pub base: ComplexVector,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub target: Option<ComplexVector>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub direction: Option<ComplexVector>,
}

/// Recomputes the signed excess of a reproducer; positive means violation.
pub fn replay(r: &Reproducer) -> Result<f64> {
    let domain = r.domain.build()?;
    match &r.check {
        CheckKind::ChainFunction { p } => {
            let z = r.target.as_ref().ok_or_missing("target")?;
            let m = domain.eval_function(MetricKind::Mobius, &r.base, z)?;
            let s = domain.eval_function(MetricKind::SibonyHigherFunction(*p), &r.base, z)?;
            let g = domain.eval_function(MetricKind::Green, &r.base, z)?;
            Ok((m.lower - s.upper).max(s.lower - g.upper))
        }
        CheckKind::ChainMetric { p } => {
            let x = r.direction.as_ref().ok_or_missing("direction")?;
            let gamma = domain.eval_metric(MetricKind::Caratheodory, &r.base, x)?;
            let s = domain.eval_metric(MetricKind::SibonyHigherMetric(2 * p), &r.base, x)?;
            let a = domain.eval_metric(MetricKind::Azukawa, &r.base, x)?;
            Ok((gamma.lower - s.upper).max(s.lower - a.upper))
        }
        CheckKind::ContractFunction { kind } => {
            let z = r.target.as_ref().ok_or_missing("target")?;
            let map = r.map.as_ref().ok_or_missing("map")?;
            let target_domain = r
                .target_domain
                .as_ref()
                .ok_or_missing("target_domain")?
                .build()?;
            let fa = apply_map(map, &r.base)?;
            let fz = apply_map(map, z)?;
            let dt = target_domain.eval_function(*kind, &fa, &fz)?;
            let ds = domain.eval_function(*kind, &r.base, z)?;
            Ok(dt.lower - ds.upper)
        }
        CheckKind::ContractMetric { kind } => {
            let x = r.direction.as_ref().ok_or_missing("direction")?;
            let map = r.map.as_ref().ok_or_missing("map")?;
            let target_domain = r
                .target_domain
                .as_ref()
                .ok_or_missing("target_domain")?
                .build()?;
            let fa = apply_map(map, &r.base)?;
            let fx = apply_derivative(map, &r.base, x)?;
            let dt = target_domain.eval_metric(*kind, &fa, &fx)?;
            let ds = domain.eval_metric(*kind, &r.base, x)?;
            Ok(dt.lower - ds.upper)
        }
        CheckKind::NonUscWitness { k } => {
            let z = r.target.as_ref().ok_or_missing("target")?;
            let origin = ComplexVector::from_reals(&[0.0, 0.0, 0.0])?;
            let shifted =
                ComplexVector::from_reals(&[1.0 / f64::from(*k), 0.0, 0.0])?;
            let s0 = domain.eval_function(MetricKind::Sibony, &origin, z)?;
            let sk = domain.eval_function(MetricKind::Sibony, &shifted, z)?;
            // strict inequality required: violation when sk <= s0
            Ok(s0.lower - sk.upper)
        }
    }
}

trait OrMissing<T> {
    fn ok_or_missing(self, what: &str) -> Result<T>;
}

impl<T> OrMissing<T> for Option<T> {
    fn ok_or_missing(self, what: &str) -> Result<T> {
        self.ok_or_else(|| Error::InvalidInput(format!("reproducer is missing {what}")))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Failure {
    pub sample_index: usize,
    pub violation: f64,
    pub reproducer: Reproducer,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub property: String,
    pub samples_run: usize,
    pub failures: Vec<Failure>,
    pub max_violation: f64,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {} (seed {})\n", self.suite, self.seed));
        for v in &self.verdicts {
            out.push_str(&format!(
                "  [{}] {}: {} samples, {} failures, max excess {:.3e}\n",
                if v.passed() { "pass" } else { "FAIL" },
                v.property,
                v.samples_run,
                v.failures.len(),
                v.max_violation,
            ));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// sampling

struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn phase(&mut self) -> Complex64 {
        let theta = self.rng.gen_range(0.0..std::f64::consts::TAU);
        Complex64::from_polar(1.0, theta)
    }

    fn disc_point(&mut self) -> Complex64 {
        let r = self.rng.gen_range(0.0..0.85);
        self.phase() * r
    }

    fn direction(&mut self, n: usize) -> ComplexVector {
        loop {
            let entries: Vec<Complex64> = (0..n)
                .map(|_| {
                    Complex64::new(
                        self.rng.gen_range(-1.0..1.0),
                        self.rng.gen_range(-1.0..1.0),
                    )
                })
                .collect();
            if entries.iter().any(|e| e.norm() > 1e-3) {
                return ComplexVector::new(entries).expect("finite entries");
            }
        }
    }

    /// A point of `D_alpha` with `|z^alpha|` log-uniform in a safe range
    /// and uniform phases.
    fn reinhardt_member(&mut self, ev: &ExponentVector) -> ComplexVector {
        let n = ev.dim();
        let alpha = ev.alpha().to_vec();
        // adjust the coordinate with the largest exponent magnitude,
        // preferring a positive exponent
        let adjust = alpha
            .iter()
            .enumerate()
            .max_by(|(_, x), (_, y)| {
                let kx = (x.signum(), x.abs());
                let ky = (y.signum(), y.abs());
                kx.partial_cmp(&ky).unwrap()
            })
            .map(|(j, _)| j)
            .unwrap();
        loop {
            let target_ln = self.rng.gen_range((1e-5f64).ln()..(0.9f64).ln());
            let mut moduli: Vec<f64> =
                (0..n).map(|_| self.rng.gen_range(0.3..1.2)).collect();
            let partial: f64 = alpha
                .iter()
                .zip(&moduli)
                .enumerate()
                .filter(|(j, _)| *j != adjust)
                .map(|(_, (&a, &m))| a * m.ln())
                .sum();
            let needed = ((target_ln - partial) / alpha[adjust]).exp();
            if !(1e-3..=1e3).contains(&needed) {
                continue;
            }
            moduli[adjust] = needed;
            let entries: Vec<Complex64> =
                moduli.iter().map(|&m| self.phase() * m).collect();
            let v = ComplexVector::new(entries).expect("finite entries");
            if ev.contains(&v).unwrap_or(false) {
                return v;
            }
        }
    }

    /// A base point with exactly `sigma` vanishing positive-exponent
    /// coordinates.
    fn reinhardt_base(&mut self, ev: &ExponentVector, sigma: usize) -> ComplexVector {
        if sigma == 0 {
            return self.reinhardt_member(ev);
        }
        let positive: Vec<usize> = ev
            .alpha()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0.0)
            .map(|(j, _)| j)
            .collect();
        let sigma = sigma.min(positive.len());
        // deterministic choice of the vanishing set
        let mut chosen = positive.clone();
        for i in (1..chosen.len()).rev() {
            let j = self.rng.gen_range(0..=i);
            chosen.swap(i, j);
        }
        chosen.truncate(sigma);
        let entries: Vec<Complex64> = (0..ev.dim())
            .map(|j| {
                if chosen.contains(&j) {
                    Complex64::new(0.0, 0.0)
                } else {
                    self.phase() * self.rng.gen_range(0.3..1.2)
                }
            })
            .collect();
        ComplexVector::new(entries).expect("finite entries")
    }
}

fn max_sigma(ev: &ExponentVector) -> usize {
    ev.alpha().iter().filter(|&&a| a > 0.0).count().min(3)
}

// ---------------------------------------------------------------------------
// suites

/// Chain suite: `m <= s^(p) <= g` and `gamma <= S^(2p) <= A` for
/// `p = 1..4`, compared interval-aware so unknown branches cannot produce
/// false failures.
pub fn check_chain(suite: &PropertySuite) -> Result<Verdict> {
    let domains: Vec<(DomainSpec, Domain)> = suite
        .domains
        .iter()
        .map(|s| Ok((s.clone(), s.build()?)))
        .collect::<Result<_>>()?;
    for (spec, dom) in &domains {
        match dom {
            Domain::Disc | Domain::Reinhardt(_) => {}
            _ => {
                return Err(Error::InvalidInput(format!(
                    "chain suite supports disc and Reinhardt domains, got {spec:?}"
                )))
            }
        }
    }
    let mut sampler = Sampler::new(suite.seed);
    let mut failures = Vec::new();
    let mut max_violation = f64::NEG_INFINITY;
    for i in 0..suite.samples {
        let (spec, dom) = &domains[i % domains.len()];
        let (base, z, x) = match dom {
            Domain::Disc => (
                ComplexVector::scalar(sampler.disc_point()),
                ComplexVector::scalar(sampler.disc_point()),
                sampler.direction(1),
            ),
            Domain::Reinhardt(ev) => {
                let sigma = (i / domains.len()) % (max_sigma(ev) + 1);
                (
                    sampler.reinhardt_base(ev, sigma),
                    sampler.reinhardt_member(ev),
                    sampler.direction(ev.dim()),
                )
            }
            _ => unreachable!(),
        };
        for p in 1..=4u32 {
            for (check, violation) in [
                (
                    CheckKind::ChainFunction { p },
                    chain_function_excess(dom, p, &base, &z)?,
                ),
                (
                    CheckKind::ChainMetric { p },
                    chain_metric_excess(dom, p, &base, &x)?,
                ),
            ] {
                max_violation = max_violation.max(violation);
                if violation > suite.tolerance {
                    failures.push(Failure {
                        sample_index: i,
                        violation,
                        reproducer: Reproducer {
                            check,
                            domain: spec.clone(),
                            target_domain: None,
                            map: None,
                            base: base.clone(),
                            target: Some(z.clone()),
                            direction: Some(x.clone()),
                        },
                    });
                }
            }
        }
    }
    Ok(Verdict {
        property: "chain".into(),
        samples_run: suite.samples,
        failures,
        max_violation,
    })
}

fn chain_function_excess(
    dom: &Domain,
    p: u32,
    base: &ComplexVector,
    z: &ComplexVector,
) -> Result<f64> {
    let m = dom.eval_function(MetricKind::Mobius, base, z)?;
    let s = dom.eval_function(MetricKind::SibonyHigherFunction(p), base, z)?;
    let g = dom.eval_function(MetricKind::Green, base, z)?;
    Ok((m.lower - s.upper).max(s.lower - g.upper))
}

fn chain_metric_excess(
    dom: &Domain,
    p: u32,
    base: &ComplexVector,
    x: &ComplexVector,
) -> Result<f64> {
    let gamma = dom.eval_metric(MetricKind::Caratheodory, base, x)?;
    let s = dom.eval_metric(MetricKind::SibonyHigherMetric(2 * p), base, x)?;
    let a = dom.eval_metric(MetricKind::Azukawa, base, x)?;
    Ok((gamma.lower - s.upper).max(s.lower - a.upper))
}

/// Contractibility suite for one structured map: function and metric
/// inequalities on sampled source points, with the derivative computed
/// exactly.  Errors with `MapRangeViolation` when a sample leaves the
/// declared target domain.
pub fn check_contractibility(
    map: &HolomorphicMapSpec,
    source: &DomainSpec,
    target: &DomainSpec,
    suite: &PropertySuite,
) -> Result<Verdict> {
    let source_dom = source.build()?;
    let target_dom = target.build()?;
    let mut sampler = Sampler::new(suite.seed);
    let mut failures = Vec::new();
    let mut max_violation = f64::NEG_INFINITY;

    let function_kinds = [
        MetricKind::Mobius,
        MetricKind::Green,
        MetricKind::Sibony,
        MetricKind::SibonyHigherFunction(1),
        MetricKind::SibonyHigherFunction(3),
    ];
    let metric_kinds = [
        MetricKind::Caratheodory,
        MetricKind::Azukawa,
        MetricKind::Sibony,
        MetricKind::SibonyHigherMetric(4),
        MetricKind::SibonyHigherMetric(6),
    ];

    for i in 0..suite.samples {
        let (base, z, x) = match &source_dom {
            Domain::Disc => (
                ComplexVector::scalar(sampler.disc_point()),
                ComplexVector::scalar(sampler.disc_point()),
                sampler.direction(1),
            ),
            Domain::Reinhardt(ev) => {
                let sigma = i % (max_sigma(ev) + 1);
                (
                    sampler.reinhardt_base(ev, sigma),
                    sampler.reinhardt_member(ev),
                    sampler.direction(ev.dim()),
                )
            }
            _ => {
                return Err(Error::InvalidInput(
                    "contractibility sampling supports disc and Reinhardt sources".into(),
                ))
            }
        };
        let fa = apply_map(map, &base)?;
        let fz = apply_map(map, &z)?;
        for (pt, name) in [(&fa, "F(a)"), (&fz, "F(z)")] {
            if !target_dom.contains(pt)? {
                return Err(Error::MapRangeViolation(format!(
                    "{name} = {pt:?} left the target domain at sample {i}"
                )));
            }
        }
        let fx = apply_derivative(map, &base, &x)?;

        for kind in function_kinds {
            let dt = target_dom.eval_function(kind, &fa, &fz)?;
            let ds = source_dom.eval_function(kind, &base, &z)?;
            let violation = dt.lower - ds.upper;
            max_violation = max_violation.max(violation);
            if violation > suite.tolerance {
                failures.push(Failure {
                    sample_index: i,
                    violation,
                    reproducer: Reproducer {
                        check: CheckKind::ContractFunction { kind },
                        domain: source.clone(),
                        target_domain: Some(target.clone()),
                        map: Some(map.clone()),
                        base: base.clone(),
                        target: Some(z.clone()),
                        direction: None,
                    },
                });
            }
        }
        for kind in metric_kinds {
            let dt = target_dom.eval_metric(kind, &fa, &fx)?;
            let ds = source_dom.eval_metric(kind, &base, &x)?;
            let violation = dt.lower - ds.upper;
            max_violation = max_violation.max(violation);
            if violation > suite.tolerance {
                failures.push(Failure {
                    sample_index: i,
                    violation,
                    reproducer: Reproducer {
                        check: CheckKind::ContractMetric { kind },
                        domain: source.clone(),
                        target_domain: Some(target.clone()),
                        map: Some(map.clone()),
                        base: base.clone(),
                        target: None,
                        direction: Some(x.clone()),
                    },
                });
            }
        }
    }
    Ok(Verdict {
        property: format!("contractibility:{}", suite.name),
        samples_run: suite.samples,
        failures,
        max_violation,
    })
}

/// The built-in structured maps exercised by the contractibility suite.
/// Every map provably sends its source into its target.
pub fn builtin_contractibility_cases(
) -> Vec<(String, HolomorphicMapSpec, DomainSpec, DomainSpec)> {
    let one = Complex64::new(1.0, 0.0);
    let reinhardt = |alpha: &[f64]| DomainSpec::Reinhardt {
        alpha: alpha.to_vec(),
        class: ArithmeticClass::RelPrimeIntegers,
    };
    let curve = |base: &[f64], dir: &[f64]| HolomorphicMapSpec::Curve {
        base: ComplexVector::from_reals(base).unwrap(),
        direction: ComplexVector::from_reals(dir).unwrap(),
    };
    let monomial = |coeffs: Vec<Complex64>, exps: Vec<Vec<i64>>| HolomorphicMapSpec::MonomialMap {
        coefficients: coeffs,
        exponents: exps,
    };
    vec![
        (
            "disc-diagonal-into-d11".into(),
            curve(&[0.0, 0.0], &[1.0, 1.0]),
            DomainSpec::Disc,
            reinhardt(&[1.0, 1.0]),
        ),
        (
            "disc-diagonal-into-d122".into(),
            curve(&[0.0, 0.0, 0.0], &[1.0, 1.0, 1.0]),
            DomainSpec::Disc,
            reinhardt(&[1.0, 2.0, 2.0]),
        ),
        (
            "disc-diagonal-into-d23".into(),
            curve(&[0.0, 0.0], &[1.0, 1.0]),
            DomainSpec::Disc,
            reinhardt(&[2.0, 3.0]),
        ),
        (
            "disc-affine-curve-into-d11".into(),
            curve(&[0.1, 0.2], &[0.3, 0.4]),
            DomainSpec::Disc,
            reinhardt(&[1.0, 1.0]),
        ),
        (
            "disc-squaring-self-map".into(),
            monomial(vec![one], vec![vec![2]]),
            DomainSpec::Disc,
            DomainSpec::Disc,
        ),
        (
            "monomial-collapse-d11-to-disc".into(),
            monomial(vec![one], vec![vec![1, 1]]),
            reinhardt(&[1.0, 1.0]),
            DomainSpec::Disc,
        ),
        (
            "monomial-collapse-d122-to-disc".into(),
            monomial(vec![one], vec![vec![1, 2, 2]]),
            reinhardt(&[1.0, 2.0, 2.0]),
            DomainSpec::Disc,
        ),
        (
            "monomial-d122-to-d11".into(),
            monomial(vec![one, one], vec![vec![1, 0, 0], vec![0, 2, 2]]),
            reinhardt(&[1.0, 2.0, 2.0]),
            reinhardt(&[1.0, 1.0]),
        ),
        (
            "swap-d11".into(),
            monomial(vec![one, one], vec![vec![0, 1], vec![1, 0]]),
            reinhardt(&[1.0, 1.0]),
            reinhardt(&[1.0, 1.0]),
        ),
        (
            "coordinate-squares-d122".into(),
            monomial(
                vec![one, one, one],
                vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]],
            ),
            reinhardt(&[1.0, 2.0, 2.0]),
            reinhardt(&[1.0, 2.0, 2.0]),
        ),
        (
            "rotation-d23".into(),
            monomial(
                vec![Complex64::from_polar(1.0, 0.7), Complex64::from_polar(1.0, -1.3)],
                vec![vec![1, 0], vec![0, 1]],
            ),
            reinhardt(&[2.0, 3.0]),
            reinhardt(&[2.0, 3.0]),
        ),
        (
            "embed-d12-into-d122".into(),
            HolomorphicMapSpec::CoordinateEmbedding {
                target_dim: 3,
                fixed: vec![(2, Complex64::new(0.0, 0.0))],
            },
            reinhardt(&[1.0, 2.0]),
            reinhardt(&[1.0, 2.0, 2.0]),
        ),
    ]
}

/// Disc normalization suite: exact reference values for every kind on the
/// grid `t in {0, 0.1, ..., 0.9}` and orders `p in {1, .., 4}`, including
/// the odd-order zero metrics.
pub fn check_normalization() -> Verdict {
    let mut failures = Vec::new();
    let mut max_violation: f64 = f64::NEG_INFINITY;
    let mut samples = 0usize;
    let mut probe = |kind: MetricKind, t: f64, expected: f64| {
        samples += 1;
        let v = disc_reference_value(kind, t);
        let violation = match v {
            Ok(v) => (v.lower - expected).abs().max((v.upper - expected).abs()),
            Err(_) => f64::INFINITY,
        };
        max_violation = max_violation.max(violation);
        if violation > 1e-15 {
            failures.push(Failure {
                sample_index: samples - 1,
                violation,
                reproducer: Reproducer {
                    check: CheckKind::ChainFunction { p: 1 },
                    domain: DomainSpec::Disc,
                    target_domain: None,
                    map: None,
                    base: ComplexVector::from_reals(&[t]).unwrap(),
                    target: None,
                    direction: None,
                },
            });
        }
    };
    for i in 0..10 {
        let t = i as f64 / 10.0;
        probe(MetricKind::Mobius, t, t);
        probe(MetricKind::Green, t, t);
        probe(MetricKind::Sibony, t, t);
        probe(MetricKind::Caratheodory, t, t);
        probe(MetricKind::Azukawa, t, t);
        for p in 1..=4u32 {
            probe(MetricKind::SibonyHigherFunction(p), t, t);
            probe(MetricKind::SibonyHigherMetric(2 * p), t, t);
            probe(MetricKind::SibonyHigherMetric(2 * p - 1), t, 0.0);
        }
    }
    Verdict {
        property: "normalization".into(),
        samples_run: samples,
        failures,
        max_violation,
    }
}

/// Non-upper-semicontinuity witness on the exponent vector `(1, 2, 2)`:
/// the Sibony function from the perturbed bases `(1/k, 0, 0)` strictly
/// exceeds its value from the origin at every off-axis target.
pub fn check_nonusc_witness(samples: usize, k_max: u32, seed: u64) -> Result<Verdict> {
    let spec = DomainSpec::Reinhardt {
        alpha: vec![1.0, 2.0, 2.0],
        class: ArithmeticClass::RelPrimeIntegers,
    };
    let dom = spec.build()?;
    let ev = match &dom {
        Domain::Reinhardt(ev) => ev.clone(),
        _ => unreachable!(),
    };
    let origin = ComplexVector::from_reals(&[0.0, 0.0, 0.0])?;
    let mut sampler = Sampler::new(seed);
    let mut failures = Vec::new();
    let mut max_violation = f64::NEG_INFINITY;
    let mut run = 0usize;
    for i in 0..samples {
        let z = sampler.reinhardt_member(&ev);
        if z.entries().iter().any(|e| e.norm() == 0.0) {
            continue;
        }
        run += 1;
        let s0 = dom.eval_function(MetricKind::Sibony, &origin, &z)?;
        for k in 1..=k_max {
            let shifted = ComplexVector::from_reals(&[1.0 / f64::from(k), 0.0, 0.0])?;
            let sk = dom.eval_function(MetricKind::Sibony, &shifted, &z)?;
            let violation = s0.lower - sk.upper; // must be strictly negative
            max_violation = max_violation.max(violation);
            if violation >= 0.0 {
                failures.push(Failure {
                    sample_index: i,
                    violation,
                    reproducer: Reproducer {
                        check: CheckKind::NonUscWitness { k },
                        domain: spec.clone(),
                        target_domain: None,
                        map: None,
                        base: origin.clone(),
                        target: Some(z.clone()),
                        direction: None,
                    },
                });
            }
        }
    }
    Ok(Verdict {
        property: "nonusc".into(),
        samples_run: run,
        failures,
        max_violation,
    })
}

/// Runs one named suite ("chain", "contractibility", "normalization",
/// "nonusc") or "all".
pub fn run_suite(name: &str, seed: u64, samples: usize) -> Result<Report> {
    let mut verdicts = Vec::new();
    let known = ["chain", "contractibility", "normalization", "nonusc", "all"];
    if !known.contains(&name) {
        return Err(Error::InvalidInput(format!(
            "unknown suite {name}; expected one of {known:?}"
        )));
    }
    if name == "normalization" || name == "all" {
        verdicts.push(check_normalization());
    }
    if name == "chain" || name == "all" {
        verdicts.push(check_chain(&PropertySuite::chain_default(seed, samples))?);
    }
    if name == "nonusc" || name == "all" {
        verdicts.push(check_nonusc_witness(samples.clamp(200, 400), 100, seed)?);
    }
    if name == "contractibility" || name == "all" {
        for (case_name, map, source, target) in builtin_contractibility_cases() {
            let suite = PropertySuite {
                name: case_name,
                domains: vec![source.clone()],
                samples: samples.clamp(100, 400),
                seed,
                tolerance: 1e-9,
            };
            verdicts.push(check_contractibility(&map, &source, &target, &suite)?);
        }
    }
    Ok(Report {
        suite: name.into(),
        seed,
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_suite_passes() {
        let v = check_normalization();
        assert!(v.passed(), "{:?}", v.failures.first());
    }

    #[test]
    fn chain_suite_small_run_passes() {
        let suite = PropertySuite::chain_default(42, 160);
        let v = check_chain(&suite).unwrap();
        assert!(v.passed(), "{:?}", v.failures.first());
        assert!(v.max_violation <= 1e-9);
    }

    #[test]
    fn nonusc_witness_passes() {
        let v = check_nonusc_witness(50, 20, 7).unwrap();
        assert!(v.passed());
        assert!(v.samples_run > 0);
    }

    #[test]
    fn contractibility_case_passes_and_reproducers_replay() {
        let (name, map, source, target) = builtin_contractibility_cases()
            .into_iter()
            .next()
            .unwrap();
        let suite = PropertySuite {
            name,
            domains: vec![source.clone()],
            samples: 60,
            seed: 11,
            tolerance: 1e-9,
        };
        let v = check_contractibility(&map, &source, &target, &suite).unwrap();
        assert!(v.passed(), "{:?}", v.failures.first());
    }

    #[test]
    fn range_violations_are_reported_as_errors() {
        // a curve that exits the declared target for large sampled radii
        let map = HolomorphicMapSpec::Curve {
            base: ComplexVector::from_reals(&[0.0, 0.0]).unwrap(),
            direction: ComplexVector::from_reals(&[2.0, 2.0]).unwrap(),
        };
        let source = DomainSpec::Disc;
        let target = DomainSpec::Reinhardt {
            alpha: vec![1.0, 1.0],
            class: ArithmeticClass::RelPrimeIntegers,
        };
        let suite = PropertySuite {
            name: "escaping-curve".into(),
            domains: vec![source.clone()],
            samples: 100,
            seed: 3,
            tolerance: 1e-9,
        };
        assert!(matches!(
            check_contractibility(&map, &source, &target, &suite),
            Err(Error::MapRangeViolation(_))
        ));
    }

    #[test]
    fn same_seed_identical_reports() {
        let a = run_suite("chain", 31, 80).unwrap().to_json();
        let b = run_suite("chain", 31, 80).unwrap().to_json();
        assert_eq!(a, b);
        let c = run_suite("chain", 32, 80).unwrap().to_json();
        assert_ne!(a, c);
    }

    #[test]
    fn forced_failures_produce_replayable_reproducers() {
        // An impossible tolerance turns equalities into violations, which
        // exercises the failure and replay paths.
        let mut suite = PropertySuite::chain_default(5, 24);
        suite.tolerance = -0.5;
        let v = check_chain(&suite).unwrap();
        assert!(!v.passed());
        for f in v.failures.iter().take(5) {
            let replayed = replay(&f.reproducer).unwrap();
            assert!(
                (replayed - f.violation).abs() <= 1e-12,
                "replayed {replayed} vs recorded {}",
                f.violation
            );
        }
    }
}
