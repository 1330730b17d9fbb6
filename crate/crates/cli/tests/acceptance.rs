//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use wishart_moments::closed_forms::{
    complex_2x2_moment_by_exponents, hermite_coeffs, kibble_moment, laguerre_eval,
    noncentral_chisq_moment, real_2x2_moment_by_exponent,
};
use wishart_moments::combinatorics::{
    binomial, coeff_f, coeff_g, cycle_histogram, factorial, noncentral_stirling,
    odd_double_factorial, phi, psi, recurrence_polynomial, EnumerationLimit, GraphFamily,
};
use wishart_moments::engine::{Entry, Substitution};
use wishart_moments::validation::{
    estimate_moments_mc, mgf_moment_fd, relative_error, SimulationConfig,
};
use wishart_moments::{
    evaluate, expand_moment, BivariateMomentPoly, Exec, Flavor, MomentPolynomial, MomentSpec,
    NuPolynomial, WishartParams, C64,
};

type Check = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Check>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, budget: Duration) -> Result<(), String> {
    let spent = started.elapsed();
    ensure(spent < budget, || {
        format!("took {spent:?}, budget {budget:?}")
    })
}

fn wishmom(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_wishmom"))
        .args(args)
        .env_remove("WISHART_THREADS")
        .output()
        .map_err(|e| format!("cannot run wishmom: {e}"))?;
    if !out.status.success() {
        return Err(format!(
            "wishmom {args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn repeated(factors: &[((u32, u32), u64)]) -> Vec<(u32, u32)> {
    factors
        .iter()
        .flat_map(|&(f, k)| std::iter::repeat_n(f, k as usize))
        .collect()
}

fn nu_only(poly: &NuPolynomial) -> BivariateMomentPoly {
    BivariateMomentPoly::from_nu_poly(poly, 0, 0)
}

fn timed_wishmom(args: &[&str]) -> Result<String, String> {
    let started = Instant::now();
    let out = wishmom(args)?;
    within(started, Duration::from_secs(1))?;
    Ok(out)
}

fn criterion_1() -> Check {
    let started = Instant::now();
    let cases = [
        (
            Flavor::Real,
            "w[1,2] w[3,4] w[5,6]",
            76u64,
            vec![1u64, 6, 8, 3, 6, 12, 24, 3, 12, 1],
        ),
        (
            Flavor::Complex,
            "w[1,4] w[2,5] w[3,6]",
            34,
            vec![1, 3, 2, 3, 3, 6, 6, 3, 6, 1],
        ),
    ];
    for (flavor, expr, mass, shapes) in &cases {
        let name = flavor.to_string();
        let base = [
            "moment",
            "--flavor",
            name.as_str(),
            "--p",
            "6",
            "--expr",
            expr,
        ];
        let text = timed_wishmom(&[&base[..], &["--symbolic"]].concat())?;
        let spec =
            wishart_cli::parse_moment_expression(expr, *flavor, 6).map_err(|e| e.to_string())?;
        let poly = MomentPolynomial::from_json_str(text.trim(), spec).map_err(|e| e.to_string())?;
        ensure(poly.total_mass() == BigUint::from(*mass), || {
            format!("{flavor}: mass {} != {mass}", poly.total_mass())
        })?;
        let grouped: serde_json::Value =
            serde_json::from_str(&timed_wishmom(&[&base[..], &["--shapes"]].concat())?)
                .map_err(|e| e.to_string())?;
        let got: Vec<u64> = grouped["shapes"]
            .as_array()
            .ok_or("shapes array missing")?
            .iter()
            .map(|s| {
                s["multiplicity"]
                    .as_str()
                    .and_then(|m| m.parse().ok())
                    .unwrap_or(0)
            })
            .collect();
        ensure(&got == shapes, || {
            format!("{flavor}: multiplicities {got:?} != {shapes:?}")
        })?;
    }
    Ok(format!(
        "masses 76/34 and shape multiplicities exact, each call < 1 s ({:?} total)",
        started.elapsed()
    ))
}

fn criterion_2() -> Check {
    let started = Instant::now();
    for (family, max_n, coeff) in [
        (
            GraphFamily::Undirected,
            6,
            coeff_f as fn(i64, i64, i64) -> BigUint,
        ),
        (GraphFamily::Directed, 7, coeff_g),
    ] {
        for n in 1..=max_n {
            let hist = cycle_histogram(family, n, EnumerationLimit::default(), Exec::Parallel)
                .map_err(|e| e.to_string())?;
            ensure(hist.keys().all(|&(m, l)| l <= m && m <= n), || {
                format!("{family:?} n={n}: key out of support")
            })?;
            for m in 0..=n {
                for l in 0..=m {
                    let seen = BigUint::from(hist.get(&(m, l)).copied().unwrap_or(0));
                    let want = coeff(l as i64, m as i64, n as i64);
                    ensure(seen == want, || {
                        format!("{family:?} l={l} m={m} n={n}: {seen} != {want}")
                    })?;
                }
            }
        }
    }
    within(started, Duration::from_secs(120))?;
    Ok(format!(
        "histograms equal f (n<=6) and g (n<=7) ({:?})",
        started.elapsed()
    ))
}

fn criterion_3() -> Check {
    let (one, zero) = (BigInt::one(), BigInt::zero());
    for n in 1..=10u64 {
        for m in 0..=n {
            let (mu, nu) = (m as usize, n as usize);
            let ph = phi(mu, nu).map_err(|e| e.to_string())?;
            let ps = psi(mu, nu).map_err(|e| e.to_string())?;
            ensure(
                ph == recurrence_polynomial(GraphFamily::Undirected, mu, nu),
                || format!("phi({m},{n})"),
            )?;
            ensure(
                ps == recurrence_polynomial(GraphFamily::Directed, mu, nu),
                || format!("psi({m},{n})"),
            )?;

            let c = binomial(n, m);
            let phi1 = BigInt::from(binomial(2 * n, 2 * m) * odd_double_factorial(m));
            let psi1 = BigInt::from(&c * &c * factorial(m));
            ensure(ph.eval_int(&one) == phi1, || format!("phi({m},{n})(1)"))?;
            ensure(ps.eval_int(&one) == psi1, || format!("psi({m},{n})(1)"))?;
            let (phi0, psi0) = if m == n {
                (BigUint::zero(), BigUint::zero())
            } else {
                let den = factorial(m) * factorial(n - m) * factorial(n - m - 1);
                let num = factorial(n) * factorial(n - 1);
                ((&num << m as usize) / &den, num / den)
            };
            ensure(ph.eval_int(&zero) == BigInt::from(phi0), || {
                format!("phi({m},{n})(0)")
            })?;
            ensure(ps.eval_int(&zero) == BigInt::from(psi0), || {
                format!("psi({m},{n})(0)")
            })?;
        }
    }
    Ok("phi/psi equal recurrence tables for m<=n<=10; values at nu=1, nu=0 exact".into())
}

fn criterion_4() -> Check {
    let mut checked = 0;
    for n in 1..=8usize {
        for m in 0..=n {
            for l in 0..=m {
                let s = noncentral_stirling(n, m, l).map_err(|e| e.to_string())?;
                let c = binomial(n as u64, m as u64);
                let (li, mi, ni) = (l as i64, m as i64, n as i64);
                ensure(coeff_g(li, mi, ni) == &c * &s, || format!("g({l},{m},{n})"))?;
                ensure(coeff_f(li, mi, ni) == (c * s) << (m - l), || {
                    format!("f({l},{m},{n})")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (l,m,n) triples satisfy both Stirling factorizations"
    ))
}

fn specialize(
    spec: &MomentSpec,
    f: impl Fn(Entry, u32, u32) -> Option<Substitution>,
) -> Result<BivariateMomentPoly, String> {
    expand_moment(spec)
        .and_then(|p| p.specialize(f))
        .map_err(|e| e.to_string())
}

fn identity_cov(kind: Entry, i: u32, j: u32) -> Option<Substitution> {
    match kind {
        Entry::Sigma if i == j => Some(Substitution::constant(1)),
        _ => None,
    }
}

fn criterion_5() -> Check {
    let started = Instant::now();
    let mut count = 0;
    for n in 1..=5u64 {
        let spec = MomentSpec::real(1, repeated(&[((1, 1), n)])).map_err(|e| e.to_string())?;
        let got = specialize(&spec, |kind, _, _| {
            Some(match kind {
                Entry::Sigma => Substitution::constant(1),
                Entry::Delta => Substitution::delta(),
            })
        })?;
        ensure(got == noncentral_chisq_moment(n as usize), || {
            format!("chisq n={n}")
        })?;
        count += 1;
    }
    for b in 0..=5u64 {
        for c in 0..=(5 - b) {
            if b + c == 0 {
                continue;
            }
            let spec = MomentSpec::real(2, repeated(&[((1, 1), b), ((2, 2), c)]))
                .map_err(|e| e.to_string())?;
            let got = specialize(&spec, |kind, i, j| match kind {
                Entry::Delta => None,
                Entry::Sigma if i == j => Some(Substitution::constant(1)),
                Entry::Sigma => Some(Substitution::rho()),
            })?;
            ensure(got == kibble_moment(b, c), || format!("kibble b={b} c={c}"))?;
            count += 1;
        }
    }
    // Real 2x2: w12 exponent e = 2a (even) or odd; total degree e+b+c, with 2a+b+c <= 5.
    for e in 0..=5u64 {
        for b in 0..=(5 - e) {
            for c in 0..=(5 - e - b) {
                if e + b + c == 0 {
                    continue;
                }
                let spec = MomentSpec::real(2, repeated(&[((1, 2), e), ((1, 1), b), ((2, 2), c)]))
                    .map_err(|e| e.to_string())?;
                let got = specialize(&spec, identity_cov)?;
                let want = nu_only(&real_2x2_moment_by_exponent(e, b, c));
                ensure(got == want, || format!("real 2x2 w12^{e} w11^{b} w22^{c}"))?;
                ensure(e % 2 == 0 || got.is_zero(), || {
                    format!("odd w12^{e} not zero")
                })?;
                count += 1;
            }
        }
    }
    // Complex 2x2: (w12 w21)^a balanced, plus unbalanced w12^e w21^f; degree e+f+b+c <= 5.
    for e in 0..=5u64 {
        for f in 0..=(5 - e) {
            for b in 0..=(5 - e - f) {
                for c in 0..=(5 - e - f - b) {
                    if e + f + b + c == 0 {
                        continue;
                    }
                    let spec = MomentSpec::complex(
                        2,
                        repeated(&[((1, 2), e), ((2, 1), f), ((1, 1), b), ((2, 2), c)]),
                    )
                    .map_err(|e| e.to_string())?;
                    let got = specialize(&spec, identity_cov)?;
                    let want = nu_only(&complex_2x2_moment_by_exponents(e, f, b, c));
                    ensure(got == want, || {
                        format!("complex 2x2 w12^{e} w21^{f} w11^{b} w22^{c}")
                    })?;
                    ensure(e == f || got.is_zero(), || {
                        format!("unbalanced w12^{e} w21^{f} not zero")
                    })?;
                    count += 1;
                }
            }
        }
    }
    within(started, Duration::from_secs(300))?;
    Ok(format!(
        "{count} closed forms equal engine polynomials ({:?})",
        started.elapsed()
    ))
}

fn criterion_6() -> Check {
    for n in 1..=5u64 {
        let chi = noncentral_chisq_moment(n as usize);
        for (flavor, sigma, want) in [
            (Flavor::Real, 1, chi.clone()),
            (Flavor::Complex, 2, chi.rescale_nu(2)),
        ] {
            // Every entry of W equal: take distinct indices so all σ and δ entries are hit.
            let p = 2 * n as usize;
            let factors = (0..n as u32).map(|k| (2 * k + 1, 2 * k + 2)).collect();
            let spec = MomentSpec::new(flavor, p, factors).map_err(|e| e.to_string())?;
            let got = specialize(&spec, |kind, _, _| {
                Some(match kind {
                    Entry::Sigma => Substitution::constant(sigma),
                    Entry::Delta => Substitution::delta(),
                })
            })?;
            ensure(got == want, || format!("{flavor} n={n}"))?;
        }
    }
    Ok(
        "sigma=1 (real) and sigma=2 with nu->2nu (complex) reproduce chi-square moments, n<=5"
            .into(),
    )
}

struct Scenario {
    name: &'static str,
    params: WishartParams,
}

fn real_params(nu: f64, p: usize, sigma: &[f64], delta: &[f64]) -> WishartParams {
    WishartParams::real(
        nu,
        DMatrix::from_row_slice(p, p, sigma),
        DMatrix::from_row_slice(p, p, delta),
    )
    .unwrap()
}

fn complex_params(nu: f64, p: usize, sigma: &[(f64, f64)], delta: &[(f64, f64)]) -> WishartParams {
    let m = |v: &[(f64, f64)]| {
        DMatrix::from_iterator(p, p, v.iter().map(|&(re, im)| C64::new(re, im))).transpose()
    };
    WishartParams::complex(nu, m(sigma), m(delta)).unwrap()
}

fn scenarios() -> Vec<Scenario> {
    let z = (0.0, 0.0);
    let r = |x: f64| (x, 0.0);
    vec![
        Scenario {
            name: "real p1 noncentral",
            params: real_params(5.0, 1, &[1.0], &[2.0]),
        },
        Scenario {
            name: "real p1 central",
            params: real_params(3.0, 1, &[1.5], &[0.0]),
        },
        Scenario {
            name: "real p2 kibble",
            params: real_params(4.0, 2, &[1.0, 0.5, 0.5, 1.0], &[0.0; 4]),
        },
        Scenario {
            name: "real p2 noncentral",
            params: real_params(3.0, 2, &[1.0, 0.0, 0.0, 1.0], &[1.0, 0.5, 0.5, 0.5]),
        },
        Scenario {
            name: "real p3 central",
            params: real_params(
                6.0,
                3,
                &[2.0, 0.3, -0.2, 0.3, 1.0, 0.4, -0.2, 0.4, 1.5],
                &[0.0; 9],
            ),
        },
        Scenario {
            name: "real p3 noncentral",
            params: real_params(
                8.0,
                3,
                &[1.0, 0.2, 0.1, 0.2, 1.2, -0.3, 0.1, -0.3, 0.8],
                &[1.0, 0.5, 0.0, 0.5, 0.5, 0.0, 0.0, 0.0, 0.0],
            ),
        },
        Scenario {
            name: "complex p1 central",
            params: complex_params(3.0, 1, &[r(2.0)], &[z]),
        },
        Scenario {
            name: "complex p1 noncentral",
            params: complex_params(4.0, 1, &[r(1.0)], &[r(1.5)]),
        },
        Scenario {
            name: "complex p2 central",
            params: complex_params(4.0, 2, &[r(1.0), z, z, r(1.0)], &[z; 4]),
        },
        Scenario {
            name: "complex p2 noncentral",
            params: complex_params(
                5.0,
                2,
                &[r(1.0), (0.3, 0.2), (0.3, -0.2), r(2.0)],
                &[r(0.5), (0.2, -0.1), (0.2, 0.1), r(0.3)],
            ),
        },
        Scenario {
            name: "complex p3 central",
            params: complex_params(
                7.0,
                3,
                &[
                    r(1.5),
                    (0.2, 0.3),
                    (0.0, -0.1),
                    (0.2, -0.3),
                    r(1.0),
                    (0.1, 0.1),
                    (0.0, 0.1),
                    (0.1, -0.1),
                    r(0.8),
                ],
                &[z; 9],
            ),
        },
        Scenario {
            name: "complex p3 noncentral",
            params: complex_params(
                3.0,
                3,
                &[
                    r(1.0),
                    (0.1, 0.1),
                    z,
                    (0.1, -0.1),
                    r(1.0),
                    (0.2, 0.0),
                    z,
                    r(0.2),
                    r(1.0),
                ],
                &[
                    r(1.0),
                    (0.5, 0.5),
                    r(0.5),
                    (0.5, -0.5),
                    r(0.5),
                    (0.25, -0.25),
                    r(0.5),
                    (0.25, 0.25),
                    r(0.25),
                ],
            ),
        },
    ]
}

/// Every product of 1..=max_degree entries, as multisets of index pairs.
fn all_specs(flavor: Flavor, p: usize, max_degree: usize) -> Vec<MomentSpec> {
    let p32 = p as u32;
    let entries: Vec<(u32, u32)> = (1..=p32)
        .flat_map(|a| (1..=p32).map(move |b| (a, b)))
        .filter(|&(a, b)| flavor == Flavor::Complex || a <= b)
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<(u32, u32)>)> = vec![(0, Vec::new())];
    while let Some((from, factors)) = stack.pop() {
        if !factors.is_empty() {
            out.push(MomentSpec::new(flavor, p, factors.clone()).unwrap());
        }
        if factors.len() < max_degree {
            for (k, &e) in entries.iter().enumerate().skip(from) {
                let mut next = factors.clone();
                next.push(e);
                stack.push((k, next));
            }
        }
    }
    out
}

fn criterion_7() -> Check {
    let started = Instant::now();
    let mut specs_checked = 0;
    let mut worst = (0.0f64, String::new());
    for (k, sc) in scenarios().into_iter().enumerate() {
        let specs = all_specs(sc.params.flavor(), sc.params.p(), 3);
        let cfg = SimulationConfig::new(sc.params.clone(), 1_000_000, 0xC0FFEE + k as u64);
        let reports = estimate_moments_mc(&specs, &cfg, Exec::Parallel)
            .map_err(|e| format!("{}: {e}", sc.name))?;
        for (spec, r) in specs.iter().zip(&reports) {
            let z = r
                .imaginary
                .map_or(r.z_score.abs(), |im| r.z_score.abs().max(im.z_score.abs()));
            if z > worst.0 || z.is_nan() {
                worst = (z, format!("{} {spec}", sc.name));
            }
            ensure(r.passes(5.0), || format!("{} {spec}: {r:?}", sc.name))?;
            specs_checked += 1;
        }
    }
    within(started, Duration::from_secs(300))?;
    Ok(format!(
        "{specs_checked} specs over 12 scenarios, N=1e6, max |z| {:.2} at {} ({:?})",
        worst.0,
        worst.1,
        started.elapsed()
    ))
}

fn criterion_8() -> Check {
    let mut checked = 0;
    let mut worst = 0.0f64;
    let mut ratios = Vec::new();
    for sc in scenarios() {
        let params = &sc.params;
        for spec in all_specs(params.flavor(), params.p(), 2) {
            let symbolic = evaluate(&expand_moment(&spec).unwrap(), params)
                .unwrap()
                .as_complex();
            let h = wishart_moments::validation::default_fd_step(spec.n());
            let fd = mgf_moment_fd(&spec, params, h)
                .map_err(|e| format!("{} {spec}: {e}", sc.name))?
                .as_complex();
            let rel = if symbolic.norm() == 0.0 {
                fd.norm()
            } else {
                (fd - symbolic).norm() / symbolic.norm()
            };
            worst = worst.max(rel);
            ensure(rel < 1e-4, || {
                format!("{} {spec}: fd {fd} vs {symbolic} (rel {rel:e})", sc.name)
            })?;
            checked += 1;
        }
        // Halving test on w11, whose third moment keeps the h² term alive.
        let spec = MomentSpec::new(params.flavor(), params.p(), vec![(1, 1)]).unwrap();
        let exact = evaluate(&expand_moment(&spec).unwrap(), params)
            .unwrap()
            .re();
        let err = |h: f64| relative_error(mgf_moment_fd(&spec, params, h).unwrap().re(), exact);
        let ratio = err(1e-3) / err(5e-4);
        ensure((3.2..=4.8).contains(&ratio), || {
            format!("{}: halving ratio {ratio}", sc.name)
        })?;
        ratios.push(ratio);
    }
    let (lo, hi) = ratios
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(a, b), &r| (a.min(r), b.max(r)));
    Ok(format!(
        "{checked} order<=2 specs, max rel err {worst:.2e}; halving ratios in [{lo:.3}, {hi:.3}]"
    ))
}

fn criterion_9() -> Check {
    let (nu, x, t) = (3.0f64, 1.5f64, 0.05f64);
    let mut sum = 0.0;
    let mut fact = 1.0;
    for n in 0..=8usize {
        if n > 0 {
            fact *= n as f64;
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * t.powi(n as i32) / fact * laguerre_eval(n, nu, x);
    }
    let closed =
        (1.0 - 2.0 * t).powf(-nu / 2.0) * (-(x / 2.0) * (1.0 / (1.0 - 2.0 * t) - 1.0)).exp();
    let rel = ((sum - closed) / closed).abs();
    ensure(rel < 1e-8, || {
        format!("generating function rel err {rel:e}")
    })?;
    for n in 1..=9usize {
        let (prev, cur, next) = (
            hermite_coeffs(n - 1),
            hermite_coeffs(n),
            hermite_coeffs(n + 1),
        );
        let mut want = vec![BigInt::zero(); n + 2];
        for (k, c) in cur.iter().enumerate() {
            want[k + 1] += c;
        }
        for (k, c) in prev.iter().enumerate() {
            want[k] -= c * BigInt::from(n);
        }
        ensure(next == want, || {
            format!("Hermite recurrence fails at n={n}")
        })?;
    }
    Ok(format!(
        "Laguerre GF rel err {rel:.2e}; Hermite He_(n+1) = x He_n - n He_(n-1) for n<=10"
    ))
}

fn criterion_10(dir: &Path) -> Check {
    let file = dir.join("params.json");
    std::fs::write(
        &file,
        r#"{"flavor":"complex","nu":4,"sigma":[[1,[0.2,0.1]],[[0.2,-0.1],1.5]],"delta":[[0.5,0],[0,0.2]]}"#,
    )
    .map_err(|e| e.to_string())?;
    let path = file.to_str().ok_or("non-UTF-8 temp path")?;
    let args = [
        "validate",
        "--expr",
        "w[1,2] w[2,1] w[1,1]",
        "--params",
        path,
        "--samples",
        "200000",
        "--seed",
        "42",
        "--fd",
    ];
    let first = wishmom(&args)?;
    let again = wishmom(&args)?;
    let threaded = wishmom(&[&args[..], &["--threads", "3"]].concat())?;
    ensure(first == again && first == threaded, || {
        format!("reports differ:\n{first}{again}{threaded}")
    })?;
    let report: serde_json::Value = serde_json::from_str(&first).map_err(|e| e.to_string())?;
    ensure(report["pass"] == true, || {
        format!("report did not pass: {first}")
    })?;

    let mut round_trips = 0;
    for (flavor, p, expr) in [
        ("real", "3", "w[1,1]*w[1,2]^2 w[2,3] w[3,3]"),
        ("complex", "3", "w[1,2] w[2,3] w[3,1] w[2,1]^2"),
        ("real", "6", "w[1,2] w[3,4] w[5,6]"),
    ] {
        let text = wishmom(&[
            "moment",
            "--flavor",
            flavor,
            "--p",
            p,
            "--expr",
            expr,
            "--symbolic",
        ])?;
        let fl = if flavor == "real" {
            Flavor::Real
        } else {
            Flavor::Complex
        };
        let spec = wishart_cli::parse_moment_expression(expr, fl, p.parse().unwrap())
            .map_err(|e| e.to_string())?;
        let direct = expand_moment(&spec).map_err(|e| e.to_string())?;
        let parsed =
            MomentPolynomial::from_json_str(text.trim(), spec).map_err(|e| e.to_string())?;
        ensure(parsed == direct, || {
            format!("{expr}: JSON round trip differs")
        })?;
        ensure(parsed.to_json_string() == text.trim(), || {
            format!("{expr}: re-emitted JSON differs")
        })?;
        round_trips += 1;
    }
    Ok(format!("validate reports byte-identical across runs and thread counts; {round_trips} JSON round trips exact"))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let criteria: Vec<Criterion> = vec![
        ("term counts and shapes", Box::new(criterion_1)),
        ("enumeration vs recurrence", Box::new(criterion_2)),
        ("phi/psi vs recurrence tables", Box::new(criterion_3)),
        ("Stirling identities", Box::new(criterion_4)),
        ("closed forms vs engine", Box::new(criterion_5)),
        ("degenerate collapse", Box::new(criterion_6)),
        ("Monte Carlo agreement", Box::new(criterion_7)),
        ("MGF finite differences", Box::new(criterion_8)),
        ("Laguerre and Hermite", Box::new(criterion_9)),
        (
            "determinism and round trip",
            Box::new(move || criterion_10(dir.path())),
        ),
    ];
    let mut failures = BTreeMap::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let id = k + 1;
        match check() {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail}"),
            Err(why) => {
                println!("criterion {id:>2} FAIL  {name}: {why}");
                failures.insert(id, why);
            }
        }
    }
    if !failures.is_empty() {
        eprintln!(
            "{} acceptance criteria failed: {:?}",
            failures.len(),
            failures.keys().collect::<Vec<_>>()
        );
        std::process::exit(1);
    }
}
