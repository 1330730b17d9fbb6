use nalgebra::{DMatrix, DVector};
use wishart_moments::validation::{
    cross_check, estimate_moment_mc, estimate_moments_mc, mgf_eval, mgf_moment_fd,
    CrossCheckOptions, SimulationConfig,
};
use wishart_moments::{Exec, MomentSpec, WishartParams, C64};

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn theta(p: usize, entries: &[C64]) -> DMatrix<C64> {
    DMatrix::from_row_slice(p, p, entries)
}

fn phi(nu: f64, u: f64, v: f64, w: f64) -> f64 {
    (1.0 - u - v + u * v - w).powf(-nu)
}

#[test]
fn real_two_by_two_mgf_closed_form() {
    let nu = 3.5;
    let params = WishartParams::central_real(nu, DMatrix::identity(2, 2)).unwrap();
    for &t11 in &[-0.1, 0.0, 0.07] {
        for &t22 in &[-0.05, 0.03] {
            for &t12 in &[-0.08, 0.0, 0.11] {
                let th = theta(2, &[c(t11), c(t12 / 2.0), c(t12 / 2.0), c(t22)]);
                let got = mgf_eval(&params, &th).unwrap().re();
                let base: f64 = 1.0 - 2.0 * t11 - 2.0 * t22 + 4.0 * t11 * t22 - t12 * t12;
                let want = base.powf(-nu / 2.0);
                assert!(((got - want) / want).abs() < 1e-12, "{got} vs {want}");
            }
        }
    }
}

#[test]
fn complex_and_real_mgfs_share_phi() {
    let nu = 2.5;
    let complex =
        WishartParams::complex(nu, DMatrix::identity(2, 2), DMatrix::zeros(2, 2)).unwrap();
    let real = WishartParams::central_real(2.0 * nu, DMatrix::identity(2, 2)).unwrap();
    for &(u, v, t) in &[(0.05, -0.1, 0.07), (0.1, 0.02, -0.12), (-0.2, 0.1, 0.0)] {
        let w = t * t;
        // Θ = (t_ij)' so θ_21 = t_12 and θ_12 = t_21.
        let cz = mgf_eval(&complex, &theta(2, &[c(u), c(t), c(t), c(v)]))
            .unwrap()
            .as_complex();
        let rz = mgf_eval(
            &real,
            &theta(2, &[c(u / 2.0), c(t / 2.0), c(t / 2.0), c(v / 2.0)]),
        )
        .unwrap()
        .re();
        let want = phi(nu, u, v, w);
        assert!(((cz.re - want) / want).abs() < 1e-12 && cz.im.abs() < 1e-12 * want);
        assert!(((rz - want) / want).abs() < 1e-12);
    }
}

#[test]
fn fd_error_is_second_order() {
    let params = WishartParams::real(
        5.0,
        DMatrix::from_element(1, 1, 1.3),
        DMatrix::from_element(1, 1, 0.7),
    )
    .unwrap();
    let spec = MomentSpec::real(1, vec![(1, 1)]).unwrap();
    let exact = 5.0 * 1.3 + 0.7;
    let err = |h: f64| (mgf_moment_fd(&spec, &params, h).unwrap().re() - exact).abs();
    let ratio = err(1e-3) / err(5e-4);
    assert!((3.2..=4.8).contains(&ratio), "ratio {ratio}");
}

#[test]
fn mc_reports_are_bit_identical_for_fixed_seed() {
    let sigma = DMatrix::from_row_slice(2, 2, &[1.0, 0.3, 0.3, 2.0]);
    let delta = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.5, 0.5]);
    let params = WishartParams::real(4.0, sigma, delta).unwrap();
    let cfg = SimulationConfig::new(params, 50_000, 99).with_streams(16);
    let spec = MomentSpec::real(2, vec![(1, 2), (1, 1)]).unwrap();
    let a = estimate_moment_mc(&spec, &cfg).unwrap();
    let b = estimate_moment_mc(&spec, &cfg).unwrap();
    assert_eq!(a.estimate.to_bits(), b.estimate.to_bits());
    assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());

    // Streams only reorder the same sample set.
    let other = estimate_moment_mc(&spec, &cfg.clone().with_streams(3)).unwrap();
    assert!((other.estimate - a.estimate).abs() < 1e-9 * a.estimate.abs());
    assert!(a.passes(5.0), "{a:?}");
}

#[test]
fn explicit_means_match_synthesized_delta() {
    let mu = vec![
        DVector::from_vec(vec![c(1.0), c(0.5)]),
        DVector::from_vec(vec![c(0.0), c(-0.5)]),
        DVector::from_vec(vec![c(0.0), c(0.0)]),
    ];
    let delta = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.5, 0.5]);
    let params = WishartParams::real(3.0, DMatrix::identity(2, 2), delta).unwrap();
    let cfg = SimulationConfig::new(params, 100_000, 4).with_mean_vectors(mu);
    let specs = [
        MomentSpec::real(2, vec![(1, 2)]).unwrap(),
        MomentSpec::real(2, vec![(1, 1), (2, 2)]).unwrap(),
    ];
    for r in estimate_moments_mc(&specs, &cfg, Exec::Parallel).unwrap() {
        assert!(r.passes(5.0), "{r:?}");
    }
}

#[test]
fn complex_pseudo_covariance_vanishes() {
    // E[w12 w12] = 0 centrally for CN; a nonzero pseudo-covariance would bias it.
    let params =
        WishartParams::complex(3.0, DMatrix::identity(2, 2), DMatrix::zeros(2, 2)).unwrap();
    let cfg = SimulationConfig::new(params, 200_000, 8);
    let spec = MomentSpec::complex(2, vec![(1, 2), (1, 2)]).unwrap();
    let r = estimate_moment_mc(&spec, &cfg).unwrap();
    assert_eq!(r.reference, 0.0);
    assert!(r.passes(5.0), "{r:?}");
}

#[test]
fn sampler_reference_values() {
    let cases = [
        (
            WishartParams::real(
                4.0,
                DMatrix::from_row_slice(2, 2, &[1.0, 0.3, 0.3, 1.0]),
                DMatrix::zeros(2, 2),
            )
            .unwrap(),
            MomentSpec::real(2, vec![(1, 2)]).unwrap(),
            1.2,
        ),
        (
            WishartParams::complex(3.0, DMatrix::identity(1, 1) * c(2.0), DMatrix::zeros(1, 1))
                .unwrap(),
            MomentSpec::complex(1, vec![(1, 1)]).unwrap(),
            6.0,
        ),
        (
            WishartParams::central_real(4.0, DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.5, 1.0]))
                .unwrap(),
            MomentSpec::real(2, vec![(1, 1), (2, 2)]).unwrap(),
            18.0,
        ),
        (
            WishartParams::central_real(3.0, DMatrix::identity(2, 2)).unwrap(),
            MomentSpec::real(2, vec![(1, 2), (1, 2), (1, 1)]).unwrap(),
            15.0,
        ),
    ];
    for (k, (params, spec, want)) in cases.into_iter().enumerate() {
        let cfg = SimulationConfig::new(params, 1_000_000, 100 + k as u64);
        let r = estimate_moment_mc(&spec, &cfg).unwrap();
        assert!(
            (r.reference - want).abs() < 1e-12,
            "{spec}: {}",
            r.reference
        );
        assert!(r.passes(5.0), "{spec}: {r:?}");
    }
}

#[test]
fn cross_checks_on_degenerate_and_random_covariances() {
    let opts = CrossCheckOptions {
        finite_difference: true,
        ..Default::default()
    };
    let independent = WishartParams::central_real(3.0, DMatrix::identity(4, 4)).unwrap();
    let spec = MomentSpec::real(4, vec![(1, 2), (3, 4)]).unwrap();
    let r = cross_check(
        &spec,
        &SimulationConfig::new(independent, 200_000, 5),
        &opts,
    )
    .unwrap();
    assert_eq!(r.symbolic, 0.0);
    assert!(r.fd.unwrap().rel_err < 1e-6);
    assert!(r.pass, "{r:?}");

    let a = DMatrix::from_row_slice(3, 3, &[1.0, 0.4, -0.3, 0.2, 0.9, 0.5, -0.1, 0.3, 1.1]);
    let sigma = &a * a.transpose();
    let params = WishartParams::central_real(6.0, sigma).unwrap();
    let spec = MomentSpec::real(3, vec![(1, 1), (2, 2), (1, 2)]).unwrap();
    let r = cross_check(&spec, &SimulationConfig::new(params, 1_000_000, 6), &opts).unwrap();
    assert!(r.pass, "{r:?}");
}
