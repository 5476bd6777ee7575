use proptest::prelude::*;

use logcoeff::arith::{cpow, principal_log, PrecisionContext};
use logcoeff::bounds::{ps_bound, ps_classify, WeightSpec};
use logcoeff::classes::{member_from_schwarz, sample_schwarz, SampleKind};
use logcoeff::logcoef::{gamma123_mobius, log_coeffs};
use logcoeff::verify::{check_weighted_ineq, SchwarzFunctional};
use logcoeff::{ClassSpec, TruncatedSeries};

fn ctx() -> PrecisionContext {
    PrecisionContext::default()
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 128,
        ..ProptestConfig::default()
    }
}

fn series(coeffs: &[(f64, f64)]) -> TruncatedSeries {
    let c = ctx();
    TruncatedSeries::from_coeffs(coeffs.iter().map(|&(re, im)| c.complex(re, im)).collect()).unwrap()
}

fn coeff_vec(len: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), len)
}

fn class_spec() -> impl Strategy<Value = ClassSpec> {
    prop_oneof![
        (0.05..2.0f64).prop_map(|c| ClassSpec::fc(c).unwrap()),
        (-1.0..1.0f64, 0.01..1.0f64).prop_map(|(b, d)| {
            let a = (b + d * (1.0 - b)).min(1.0);
            ClassSpec::janowski(a, b).unwrap()
        }),
        (-1.5..1.5f64).prop_map(|a| ClassSpec::robertson(a).unwrap()),
    ]
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn exp_inverts_log_on_annulus(r in 0.1..10.0f64, t in -3.1..3.1f64) {
        let c = ctx();
        let z = c.complex(r * t.cos(), r * t.sin());
        let back = principal_log(&z).unwrap().exp();
        prop_assert!((&back - &z).abs() < c.tolerance(16) * r);
    }

    #[test]
    fn principal_power_adds_exponents(
        zr in -3.0..3.0f64, zi in 0.1..3.0f64,
        a in (-2.0..2.0f64, -1.0..1.0f64), b in (-2.0..2.0f64, -1.0..1.0f64),
    ) {
        let c = ctx();
        let z = c.complex(zr, zi);
        let (wa, wb) = (c.complex(a.0, a.1), c.complex(b.0, b.1));
        let lhs = cpow(&z, &(&wa + &wb)).unwrap();
        let rhs = &cpow(&z, &wa).unwrap() * &cpow(&z, &wb).unwrap();
        prop_assert!((&lhs - &rhs).abs() < c.tolerance(24) * (lhs.abs() + 1u32));
    }

    #[test]
    fn series_product_commutes(a in coeff_vec(9), b in coeff_vec(9)) {
        let (x, y) = (series(&a), series(&b));
        prop_assert!(x.mul(&y).max_abs_diff(&y.mul(&x)) < ctx().tolerance(16));
    }

    #[test]
    fn composition_associates(a in coeff_vec(7), b in coeff_vec(6), d in coeff_vec(6)) {
        let c = ctx();
        let f = series(&a);
        let mut gb = vec![(0.0, 0.0)];
        gb.extend(b.iter().map(|&(re, im)| (re / 4.0, im / 4.0)));
        let mut hb = vec![(0.0, 0.0)];
        hb.extend(d.iter().map(|&(re, im)| (re / 4.0, im / 4.0)));
        let (g, h) = (series(&gb), series(&hb));
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        let scale = left.max_abs() + 1u32;
        prop_assert!(left.max_abs_diff(&right) < c.tolerance(24) * scale);
    }

    #[test]
    fn log_and_exp_are_inverse(a in coeff_vec(10)) {
        let c = ctx();
        let mut v = vec![(1.0, 0.0)];
        v.extend(a.iter().map(|&(re, im)| (re / 3.0, im / 3.0)));
        let s = series(&v);
        let back = s.log_series().unwrap().exp_series().unwrap();
        prop_assert!(back.max_abs_diff(&s) < c.tolerance(24) * (s.max_abs() + 1u32));
    }

    #[test]
    fn series_powers_multiply(a in coeff_vec(8), p in -2.0..2.0f64, q in -2.0..2.0f64) {
        let c = ctx();
        let mut v = vec![(1.0, 0.0)];
        v.extend(a.iter().map(|&(re, im)| (re / 3.0, im / 3.0)));
        let s = series(&v);
        let (wp, wq) = (c.complex(p, 0.0), c.complex(q, 0.0));
        let lhs = s.pow_series(&(&wp + &wq)).unwrap();
        let rhs = s.pow_series(&wp).unwrap().mul(&s.pow_series(&wq).unwrap());
        prop_assert!(lhs.max_abs_diff(&rhs) < c.tolerance(32) * (lhs.max_abs() + 1u32));
    }

    #[test]
    fn closed_gamma_formulas_match_the_log_series(spec in class_spec(), seed in any::<u64>()) {
        let c = ctx();
        let w = sample_schwarz(seed, SampleKind::Mixed, 6, c).unwrap();
        let f = member_from_schwarz(&spec, &w, 6).unwrap();
        let g = log_coeffs(f.series(), 3).unwrap();
        let (p, q) = spec.phi_params(c);
        let closed = gamma123_mobius([w.coeff(1), w.coeff(2), w.coeff(3)], &p, &q);
        for (k, ck) in closed.iter().enumerate() {
            prop_assert!((ck - g.get(k + 1)).abs() < c.tolerance(32), "{} gamma_{}", spec, k + 1);
        }
    }

    #[test]
    fn weighted_inequality_holds_for_members(spec in class_spec(), seed in any::<u64>()) {
        let c = ctx();
        let w = sample_schwarz(seed, SampleKind::Mixed, 16, c).unwrap();
        let f = member_from_schwarz(&spec, &w, 17).unwrap();
        let r = check_weighted_ineq(&f, &WeightSpec::NSquared, 16).unwrap();
        prop_assert!(r.pass, "{} margin {}", spec, r.margin);
    }

    #[test]
    fn schwarz_functional_is_dominated(mu in -6.0..6.0f64, nu in -6.0..6.0f64, seed in any::<u64>()) {
        let c = ctx();
        let (m, n) = (c.real(mu), c.real(nu));
        let bound = ps_bound(&m, &n).unwrap();
        prop_assert!(bound >= 0u32);
        let w = sample_schwarz(seed, SampleKind::Mixed, 3, c).unwrap();
        let v = SchwarzFunctional::MuNu(m, n)
            .eval(&[w.coeff(1).clone(), w.coeff(2).clone(), w.coeff(3).clone()])
            .abs();
        prop_assert!(v <= bound + c.tolerance(24));
    }

    #[test]
    fn region_classification_is_total(mu in -50.0..50.0f64, nu in -50.0..50.0f64) {
        let c = ctx();
        prop_assert!(ps_classify(&c.real(mu), &c.real(nu)).is_ok());
    }

    #[test]
    fn sampling_is_deterministic(seed in any::<u64>()) {
        let c = ctx();
        let a = sample_schwarz(seed, SampleKind::Mixed, 8, c).unwrap();
        let b = sample_schwarz(seed, SampleKind::Mixed, 8, c).unwrap();
        prop_assert_eq!(a.series().to_json(), b.series().to_json());
        prop_assert!(a.coeff(0).is_zero());
        prop_assert!(a.boundary_sup_sqr() <= 1u32 + c.tolerance(16));
    }
}
