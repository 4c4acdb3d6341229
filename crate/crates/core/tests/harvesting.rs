use std::f64::consts::PI;

use proptest::prelude::*;
use vh_core::angular::{gaunt_integral, wigner_d, EulerAngles, HarmonicIndex};
use vh_core::harvesting::{
    assemble_state, compute_terms, leading_negativity, nonlocal_term, positivity_report, term_integrands,
    time_integral_scaled, ModelKind,
};
use vh_core::survey::{evaluate_point, Axis, Param, PointParams, ScanSettings, Spacing};

fn params(omega_t: f64, d: f64, tba: f64) -> PointParams {
    PointParams { omega_t, d_over_t: d, tba_over_t: tba, ..PointParams::default() }
}

fn model() -> impl Strategy<Value = ModelKind> {
    prop_oneof![Just(ModelKind::EmDipole), Just(ModelKind::UdwScalar), Just(ModelKind::UdwDerivative)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn negativity_is_clamped_leading_order(m in model(), om in 0.5..15.0f64, d in 0.0..20.0f64, t in 0.0..15.0f64) {
        let row = evaluate_point(m, vec![], &params(om, d, t), &ScanSettings::default()).unwrap();
        prop_assert!(row.converged);
        prop_assert_eq!(row.n, row.n2.max(0.0));
        prop_assert!((row.n2 - leading_negativity(row.l_aa, row.l_aa, row.m_abs)).abs() <= 1e-12 * row.l_aa.max(row.m_abs));
    }

    #[test]
    fn orientation_enters_as_cosine(om in 0.5..13.0f64, d in 0.3..15.0f64, t in 0.0..12.0f64, theta in 0.0..PI, psi in -PI..PI, phi in -PI..PI) {
        let s = ScanSettings::default();
        let parallel = params(om, d, t).pair(ModelKind::EmDipole, &s).unwrap();
        let tilted = PointParams { theta, psi, phi, ..params(om, d, t) }.pair(ModelKind::EmDipole, &s).unwrap();
        let m0 = nonlocal_term(&parallel).unwrap();
        let m = nonlocal_term(&tilted).unwrap();
        let expected = m0.value.norm() * theta.cos().abs();
        prop_assert!((m.value.norm() - expected).abs() <= 1e-9 * m0.value.norm() + m.abs_error_estimate + m0.abs_error_estimate);
    }

    #[test]
    fn local_terms_ignore_separation_and_delay(m in model(), om in 0.5..15.0f64, d in 0.0..25.0f64, t in -10.0..10.0f64, theta in 0.0..PI) {
        let s = ScanSettings::default();
        let reference = compute_terms(&params(om, 1.0, 1.0).pair(m, &s).unwrap()).unwrap();
        let moved = compute_terms(&PointParams { theta, ..params(om, d, t) }.pair(m, &s).unwrap()).unwrap();
        prop_assert_eq!(reference.l_aa, moved.l_aa);
        prop_assert_eq!(moved.l_aa, moved.l_bb);
    }

    #[test]
    fn derivative_coupling_adds_k_squared(om in 0.5..15.0f64, d in 0.0..10.0f64, t in 0.0..10.0f64, k in 0.01..30.0f64) {
        let s = ScanSettings::default();
        let scalar = term_integrands(&params(om, d, t).pair(ModelKind::UdwScalar, &s).unwrap(), k).unwrap();
        let derivative = term_integrands(&params(om, d, t).pair(ModelKind::UdwDerivative, &s).unwrap(), k).unwrap();
        // subnormal products carry only a few significant bits
        prop_assume!(scalar.local.is_normal() && scalar.nonlocal.re.is_normal() && scalar.nonlocal.im.is_normal());
        prop_assert!((derivative.local - k * k * scalar.local).abs() <= 1e-12 * derivative.local.abs());
        prop_assert!((derivative.nonlocal - scalar.nonlocal * (k * k)).norm() <= 1e-12 * derivative.nonlocal.norm());
    }

    #[test]
    fn density_matrix_is_physical(m in model(), om in 0.5..15.0f64, d in 0.0..20.0f64, t in 0.0..15.0f64) {
        let terms = compute_terms(&params(om, d, t).pair(m, &ScanSettings::default()).unwrap()).unwrap();
        let report = positivity_report(&terms, 1.0);
        prop_assert!(report.passes(), "{:?}", report);
        prop_assert!(terms.l_ab.norm() <= terms.l_aa + terms.total_error());
        let state = assemble_state(&terms).unwrap();
        let trace: f64 = (0..4).map(|i| state.rho[i][i].re).sum();
        prop_assert!((trace - 1.0).abs() < 1e-14);
        for i in 0..4 {
            for j in 0..4 {
                prop_assert_eq!(state.rho[i][j], state.rho[j][i].conj());
            }
        }
    }

    #[test]
    fn time_kernel_is_symmetric_under_exchange(oa in 0.1..10.0f64, ob in 0.1..10.0f64, k in 0.0..20.0f64, ta in -5.0..5.0f64, tb in -5.0..5.0f64) {
        let a = time_integral_scaled(oa, ob, k, ta, tb).unwrap();
        let b = time_integral_scaled(ob, oa, k, tb, ta).unwrap();
        prop_assert!((a - b).norm() <= 1e-14 * a.norm().max(1e-300));
    }

    #[test]
    fn gaunt_selection_rule(l in proptest::collection::vec(0..=3u32, 3), m in proptest::collection::vec(-3..=3i32, 3)) {
        let set: Vec<HarmonicIndex> = l.iter().zip(&m).map(|(&l, &m)| HarmonicIndex::new(l, m.clamp(-(l as i32), l as i32))).collect();
        let msum: i32 = set.iter().map(|h| h.m).sum();
        let lsum: u32 = set.iter().map(|h| h.l).sum();
        let g = gaunt_integral(&set).unwrap();
        if msum != 0 || lsum % 2 == 1 {
            prop_assert_eq!(g, 0.0);
        }
    }

    #[test]
    fn wigner_matrices_are_unitary(l in 0..=3u32, psi in -PI..PI, theta in 0.0..PI, phi in -PI..PI) {
        let angles = EulerAngles { psi, theta, phi };
        let li = l as i32;
        for a in -li..=li {
            for b in -li..=li {
                let mut s = num_complex::Complex64::new(0.0, 0.0);
                for mu in -li..=li {
                    s += wigner_d(l, mu, a, angles).unwrap().conj() * wigner_d(l, mu, b, angles).unwrap();
                }
                let expected = if a == b { 1.0 } else { 0.0 };
                prop_assert!((s.re - expected).abs() < 1e-12 && s.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn axis_values_hit_both_ends(min in 0.01..10.0f64, span in 0.1..100.0f64, count in 2usize..60, log in any::<bool>()) {
        let axis = Axis { param: Param::DOverT, min, max: min + span, count, spacing: if log { Spacing::Log } else { Spacing::Linear } };
        let v = axis.values();
        prop_assert_eq!(v.len(), count);
        prop_assert_eq!(v[0], min);
        prop_assert_eq!(v[count - 1], min + span);
        prop_assert!(v.windows(2).all(|w| w[1] > w[0]));
    }
}

#[test]
fn perpendicular_orbitals_give_zero_negativity() {
    for &(om, d) in &[(1.0, 1.0), (1.0, 1.15), (1.0, 1.25), (12.0, 11.0)] {
        let p = PointParams { theta: PI / 2.0, ..params(om, d, d) };
        assert_eq!(evaluate_point(ModelKind::EmDipole, vec![], &p, &ScanSettings::default()).unwrap().n, 0.0);
    }
}

#[test]
fn gaussian_switching_harvests_beyond_nine_sigma() {
    let sigma = std::f64::consts::FRAC_1_SQRT_2;
    let p = PointParams { omega_t: 12.0, d_over_t: 6.4, tba_over_t: 0.0, ..PointParams::default() };
    assert!(p.d_over_t - p.tba_over_t >= 9.0 * sigma);
    let row = evaluate_point(ModelKind::EmDipole, vec![], &p, &ScanSettings::default()).unwrap();
    assert!(row.harvestable && row.n > 10.0 * row.quad_error, "{row:?}");
}

#[test]
fn scalar_models_converge_at_coincident_positions() {
    for m in [ModelKind::UdwScalar, ModelKind::UdwDerivative] {
        for t in [0.0, 3.0, 10.0] {
            let row = evaluate_point(m, vec![], &params(13.0, 0.0, t), &ScanSettings::default()).unwrap();
            assert!(row.converged, "{m:?} t={t}");
        }
    }
}
