//! Property tests for the algebraic invariants: conformal invariance,
//! composition laws, rotation invariance, scaling identities, interval
//! consistency across evaluation routes, and monotonicity of the series.

use num_complex::Complex64;
use proptest::prelude::*;

use invmetrics::disc::{mobius_distance, DiscPoint};
use invmetrics::foundations::{
    apply_map, compose_monomial, ComplexVector, HolomorphicMapSpec,
};
use invmetrics::reinhardt::{eval_function, eval_metric, ExponentVector};
use invmetrics::MetricKind;

fn cv(entries: Vec<Complex64>) -> ComplexVector {
    ComplexVector::new(entries).unwrap()
}

fn disc_c64() -> impl Strategy<Value = Complex64> {
    (0.0..0.9f64, 0.0..std::f64::consts::TAU)
        .prop_map(|(r, th)| Complex64::from_polar(r, th))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Disc automorphisms preserve the Möbius distance.
    #[test]
    fn mobius_invariant_under_automorphisms(a in disc_c64(), z in disc_c64(), c in disc_c64()) {
        let phi = |w: Complex64| (w - c) / (Complex64::new(1.0, 0.0) - c.conj() * w);
        let before = mobius_distance(DiscPoint::new(a).unwrap(), DiscPoint::new(z).unwrap());
        let after = mobius_distance(
            DiscPoint::new(phi(a)).unwrap(),
            DiscPoint::new(phi(z)).unwrap(),
        );
        prop_assert!((before - after).abs() <= 1e-12);
    }

    /// Composition of monomial maps agrees with pointwise application.
    #[test]
    fn monomial_maps_compose(
        c1 in disc_c64(),
        c2 in disc_c64(),
        b in proptest::collection::vec(0i64..4, 4),
        z1 in disc_c64(),
        z2 in disc_c64(),
    ) {
        let f = HolomorphicMapSpec::MonomialMap {
            coefficients: vec![c1 + Complex64::new(0.1, 0.0)],
            exponents: vec![vec![b[0], b[1]]],
        };
        let g = HolomorphicMapSpec::MonomialMap {
            coefficients: vec![c2, Complex64::new(0.3, -0.2)],
            exponents: vec![vec![b[2], b[3]], vec![1, 1]],
        };
        let fg = compose_monomial(&f, &g).unwrap();
        let z = cv(vec![z1, z2]);
        let direct = apply_map(&f, &apply_map(&g, &z).unwrap()).unwrap();
        let composed = apply_map(&fg, &z).unwrap();
        let scale = direct.get(0).norm().max(1.0);
        prop_assert!((direct.get(0) - composed.get(0)).norm() <= 1e-12 * scale);
    }

    /// Coordinatewise rotations leave `|z^alpha|`-driven values unchanged.
    #[test]
    fn rotation_invariance_of_green(
        th in proptest::collection::vec(0.0..std::f64::consts::TAU, 3),
        m in proptest::collection::vec(0.05..0.9f64, 3),
    ) {
        let alpha = ExponentVector::integers(vec![1, 2, 2]).unwrap();
        let origin = cv(vec![Complex64::new(0.0, 0.0); 3]);
        let z = cv(m.iter().map(|&r| Complex64::new(r, 0.0)).collect());
        let rotated = cv(
            m.iter()
                .zip(&th)
                .map(|(&r, &t)| Complex64::from_polar(r, t))
                .collect(),
        );
        prop_assume!(alpha.contains(&z).unwrap());
        let plain = eval_function(&alpha, MetricKind::Green, &origin, &z).unwrap();
        let turned = eval_function(&alpha, MetricKind::Green, &origin, &rotated).unwrap();
        prop_assert!((plain.lower - turned.lower).abs() <= 1e-12);
        // the defining monomial modulus itself is rotation invariant
        prop_assert!(
            (alpha.abs_monomial(&z).unwrap() - alpha.abs_monomial(&rotated).unwrap()).abs()
                <= 1e-12
        );
    }

    /// Scaling the vanishing-coordinate directions by `lambda` scales the
    /// Azukawa metric by `|lambda|` exactly (the literal formula scaling,
    /// exponent `sum_Xi alpha_j / r = 1`).
    #[test]
    fn azukawa_scaling_on_vanishing_directions(
        lam in 0.2..2.0f64,
        th in 0.0..std::f64::consts::TAU,
        x_re in proptest::collection::vec(0.1..1.0f64, 3),
    ) {
        let alpha = ExponentVector::integers(vec![1, 2, 2]).unwrap();
        let base = cv(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.4, 0.0),
        ]);
        let lambda = Complex64::from_polar(lam, th);
        let x = cv(x_re.iter().map(|&r| Complex64::new(r, 0.1)).collect());
        // Xi(base) = {1, 2}; scale those coordinates only
        let x_scaled = cv(vec![lambda * x.get(0), lambda * x.get(1), x.get(2)]);
        let plain = eval_metric(&alpha, MetricKind::Azukawa, &base, &x).unwrap();
        let scaled = eval_metric(&alpha, MetricKind::Azukawa, &base, &x_scaled).unwrap();
        let expected = lam * plain.lower;
        prop_assert!((scaled.lower - expected).abs() <= 1e-11 * expected.max(1.0));
    }

    /// Two evaluation routes for the same quantity always intersect: the
    /// Green closed form versus the Möbius power identity.
    #[test]
    fn green_power_identity_routes_intersect(
        m in proptest::collection::vec(0.05..0.85f64, 3),
        th in proptest::collection::vec(0.0..std::f64::consts::TAU, 3),
        base_sigma in 0usize..3,
    ) {
        let alpha = ExponentVector::integers(vec![1, 2, 2]).unwrap();
        let z = cv(
            m.iter()
                .zip(&th)
                .map(|(&r, &t)| Complex64::from_polar(r, t))
                .collect(),
        );
        prop_assume!(alpha.contains(&z).unwrap());
        let base = match base_sigma {
            0 => cv(vec![
                Complex64::new(0.3, 0.0),
                Complex64::new(0.4, 0.1),
                Complex64::new(0.5, 0.0),
            ]),
            1 => cv(vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.4, 0.1),
                Complex64::new(0.5, 0.0),
            ]),
            _ => cv(vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.5, 0.0),
            ]),
        };
        let green = eval_function(&alpha, MetricKind::Green, &base, &z).unwrap();
        let r = invmetrics::reinhardt::classify(&alpha, &base).unwrap().r;
        let mobius = eval_function(&alpha, MetricKind::Mobius, &base, &z).unwrap();
        // g^r = m, rebuilt as an interval and intersected with the direct value
        let rebuilt = invmetrics::foundations::MetricValue::exact(
            mobius.lower.powf(1.0 / r),
        ).unwrap();
        let merged = green.intersect(&rebuilt, 1e-12);
        prop_assert!(merged.is_ok());
        prop_assert!((green.lower.powf(r) - mobius.lower).abs() <= 1e-12);
    }
}

/// At bases with a single vanishing coordinate the Sibony and Green
/// formulas are two routes to the same value; their intersection is never
/// empty and in fact exact.
#[test]
fn sigma_one_sibony_green_routes_intersect() {
    let alpha = ExponentVector::integers(vec![1, 2, 2]).unwrap();
    let base = cv(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(0.4, 0.2),
        Complex64::new(0.5, -0.1),
    ]);
    for z in [
        cv(vec![
            Complex64::new(0.5, 0.0),
            Complex64::new(0.5, 0.0),
            Complex64::new(0.5, 0.0),
        ]),
        cv(vec![
            Complex64::new(0.9, 0.1),
            Complex64::new(0.3, -0.6),
            Complex64::new(0.2, 0.2),
        ]),
    ] {
        let s = eval_function(&alpha, MetricKind::Sibony, &base, &z).unwrap();
        let g = eval_function(&alpha, MetricKind::Green, &base, &z).unwrap();
        let merged = s.intersect(&g, 1e-12).unwrap();
        assert_eq!(merged.value(), s.value());
        assert_eq!(s.value(), g.value(), "sigma = 1 forces r = mu");
    }
}

/// Envelope gauge is absolutely homogeneous and subadditive on samples;
/// sampled deterministically because each evaluation runs an optimizer.
#[test]
fn envelope_is_a_seminorm_on_samples() {
    use invmetrics::balanced::{convex_envelope, EnvelopeConfig, MinkowskiSpec};
    let spec = MinkowskiSpec::MaxOf {
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
    };
    let cfg = EnvelopeConfig::for_dimension(2).with_restarts(6);
    let value = |z: &ComplexVector| convex_envelope(&spec, z, &cfg).unwrap().value;
    let pairs = [
        ([1.0, 1.0], [1.0, 0.0]),
        ([0.5, 1.0], [0.25, 0.1]),
        ([1.0, 0.2], [0.0, 1.0]),
    ];
    for (za, zb) in pairs {
        let a = ComplexVector::from_reals(&za).unwrap();
        let b = ComplexVector::from_reals(&zb).unwrap();
        let sum = ComplexVector::new(vec![
            a.get(0) + b.get(0),
            a.get(1) + b.get(1),
        ])
        .unwrap();
        let (va, vb, vs) = (value(&a), value(&b), value(&sum));
        assert!(vs <= va + vb + 1e-8, "subadditivity: {vs} > {va} + {vb}");
        // absolute homogeneity under a complex scalar
        let lam = Complex64::from_polar(0.7, 1.1);
        let scaled = value(&a.scale(lam));
        assert!(
            (scaled - 0.7 * va).abs() <= 1e-8 * va.max(1.0),
            "homogeneity: {scaled} vs {}",
            0.7 * va
        );
    }
}

/// Enlarging a MaxOf list pointwise increases the gauge and its envelope.
#[test]
fn envelope_monotone_in_the_max_list() {
    use invmetrics::balanced::{convex_envelope, minkowski_eval, EnvelopeConfig, MinkowskiSpec};
    let small = MinkowskiSpec::MaxOf {
        parts: vec![
            MinkowskiSpec::Monomial {
                exponents: vec![1.0, 0.0],
                weights: vec![],
            },
            MinkowskiSpec::Monomial {
                exponents: vec![0.0, 1.0],
                weights: vec![],
            },
        ],
    };
    let large = MinkowskiSpec::MaxOf {
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
    };
    let cfg = EnvelopeConfig::for_dimension(2).with_restarts(6);
    for z in [[1.0, 1.0], [0.3, 0.9], [1.2, 0.1]] {
        let z = ComplexVector::from_reals(&z).unwrap();
        assert!(minkowski_eval(&small, &z).unwrap() <= minkowski_eval(&large, &z).unwrap() + 1e-12);
        let es = convex_envelope(&small, &z, &cfg).unwrap().value;
        let el = convex_envelope(&large, &z, &cfg).unwrap().value;
        assert!(es <= el + 1e-8, "envelope monotonicity: {es} > {el}");
    }
}

/// Levi-form linearity in the direction: `L u(a; lambda X) = |lambda|^2 L u(a; X)`.
#[test]
fn levi_form_direction_scaling() {
    use invmetrics::numerics::{levi_form, LeviStencil};
    let u = |z: &ComplexVector| (z.get(0) * z.get(1)).norm_sqr();
    let a = ComplexVector::from_reals(&[1.0, 0.8]).unwrap();
    let x = ComplexVector::new(vec![
        Complex64::new(0.6, 0.2),
        Complex64::new(-0.1, 0.4),
    ])
    .unwrap();
    let stencil = LeviStencil::new(1e-4).unwrap();
    let base = levi_form(u, &a, &x, &stencil).unwrap();
    for lam in [
        Complex64::new(2.0, 0.0),
        Complex64::from_polar(0.5, 0.9),
        Complex64::from_polar(1.3, -2.0),
    ] {
        let scaled = levi_form(u, &a, &x.scale(lam), &stencil).unwrap();
        let expected = lam.norm_sqr() * base;
        assert!(
            (scaled - expected).abs() <= 1e-6 * expected.abs().max(1.0),
            "lambda {lam}: {scaled} vs {expected}"
        );
    }
}

/// The partial sums of the one-variable series decrease strictly in k at
/// every non-singular point.
#[test]
fn phi3_partial_sums_decrease() {
    use invmetrics::hartogs::phi3_partial;
    for lambda in [
        Complex64::new(0.0, 0.0),
        Complex64::new(0.2, 0.1),
        Complex64::new(-0.3, 0.0),
        Complex64::new(0.05, -0.4),
    ] {
        let mut prev = f64::INFINITY;
        for k in 2..40 {
            let v = phi3_partial(k, lambda).unwrap();
            assert!(v < prev, "phi_{k}({lambda}) = {v} did not decrease");
            prev = v;
        }
    }
}
