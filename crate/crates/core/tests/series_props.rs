//! Randomized algebra checks on the series layer.

use harmkit::{AnalyticSeries, Complex};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Complex> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex::new(re, im))
}

fn series(max_len: usize) -> impl Strategy<Value = AnalyticSeries> {
    prop::collection::vec(coeff(), 1..max_len).prop_map(|v| AnalyticSeries::new(v).unwrap())
}

const PROBES: [Complex; 3] = [
    Complex::new(0.3, 0.4),
    Complex::new(-0.55, 0.1),
    Complex::new(0.05, -0.6),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear_combine_evaluates_pointwise(s in series(12), t in series(12), re in -1.0..1.0f64, im in -1.0..1.0f64) {
        let w = Complex::new(re, im);
        let one = Complex::new(1.0, 0.0);
        let combo = AnalyticSeries::linear_combine(&[(one, &s), (w, &t)]).unwrap();
        for z in PROBES {
            let expect = s.eval(z) + w * t.eval(z);
            prop_assert!((combo.eval(z) - expect).norm() <= 1e-12);
        }
    }

    #[test]
    fn all_ones_kernel_is_a_hadamard_identity(s in series(12)) {
        let ones = AnalyticSeries::half_plane(s.degree()).unwrap();
        prop_assert!(s.hadamard(&ones).approx_eq(&s, 0.0));
    }

    #[test]
    fn angular_derivative_of_integral_product_recovers_the_plain_product(
        s in series(12),
        t in series(12),
    ) {
        let plain = s.hadamard(&t);
        let integral = s.integral_hadamard(&t);
        let d = integral.derivative();
        for z in PROBES {
            let got = z * d.eval(z);
            prop_assert!((got - plain.eval(z)).norm() <= 1e-12);
        }
    }

    #[test]
    fn derivative_matches_finite_differences(s in series(10)) {
        let d = s.derivative();
        let h = 1e-5;
        for z in PROBES {
            let fd = (s.eval(z + Complex::new(h, 0.0)) - s.eval(z - Complex::new(h, 0.0)))
                / Complex::new(2.0 * h, 0.0);
            let exact = d.eval(z);
            prop_assert!((fd - exact).norm() <= 1e-5 * exact.norm().max(1.0));
        }
    }

    #[test]
    fn hadamard_truncates_to_the_shorter_factor(s in series(12), t in series(12)) {
        let prod = s.hadamard(&t);
        prop_assert_eq!(prod.degree(), s.degree().min(t.degree()));
        for n in 1..=prod.degree() {
            let expect = s.coeff(n) * t.coeff(n);
            prop_assert!((prod.coeff(n) - expect).norm() == 0.0);
        }
    }
}
