//! Acceptance suite: one test per criterion, each printing a PASS line
//! once its assertions hold (run with `--nocapture` to see them).

use std::f64::consts::PI;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use grover_exact::exactmath::{chebyshev_like, decide_rational_angle, integer_roots, NivenVerdict, Rational};
use grover_exact::grover::{ExactnessVerdict, InstanceParams};
use grover_exact::simulator::{grover_step, run, success_probability, uniform_state, SearchSpec};
use grover_exact::survey::{cross_validate, survey_range};

fn params(t: u64, n: u64) -> InstanceParams {
    InstanceParams::new(t, n).unwrap()
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

#[test]
fn criterion_1_one_out_of_four_exactness() {
    let spec = SearchSpec::new(4, [3]).unwrap();
    let (state, _) = run(&spec, 1, false).unwrap();
    let p = success_probability(&state, &spec).unwrap();
    assert!((p - 1.0).abs() <= 1e-12, "simulated p_1 = {p}");

    assert_eq!(params(1, 4).success_probability_exact(1), Rational::one());
    assert_eq!(params(1, 4).classify_exactness(), ExactnessVerdict::Exact { iterations: 1 });
    println!("criterion 1 (one-out-of-four exactness): PASS");
}

#[test]
fn criterion_2_main_theorem_survey() {
    let records = survey_range(128, 8);
    let summary = cross_validate(&records);
    assert!(
        summary.disagreements.is_empty(),
        "cross-validation disagreements: {:?}",
        summary.disagreements
    );

    let mut exact_count = 0;
    for record in &records {
        let ratio = rat(record.target_count as i64, record.database_size as i64);
        let is_exact = matches!(record.verdict, ExactnessVerdict::Exact { .. });
        assert_eq!(is_exact, ratio == rat(1, 4), "t={} N={}", record.target_count, record.database_size);
        let is_all = matches!(record.verdict, ExactnessVerdict::TrivialAllTargets);
        assert_eq!(is_all, record.target_count == record.database_size);
        if is_exact {
            exact_count += 1;
        }
    }
    assert_eq!(exact_count, 32);
    println!("criterion 2 (exhaustive survey to N=128): PASS");
}

#[test]
fn criterion_3_half_ratio_is_constant_half() {
    for size in (2..=64u64).step_by(2) {
        let probs = params(size / 2, size).success_probabilities_exact(100);
        for (n, p) in probs.iter().enumerate() {
            assert_eq!(p, &rat(1, 2), "t={} N={size} n={n}", size / 2);
        }
    }
    println!("criterion 3 (t/N = 1/2 gives constant 1/2): PASS");
}

#[test]
fn criterion_4_three_out_of_four_pattern() {
    let probs = params(3, 4).success_probabilities_exact(100);
    for (n, p) in probs.iter().enumerate() {
        let expected = if (2 * n + 1) % 3 == 0 { Rational::zero() } else { rat(3, 4) };
        assert_eq!(p, &expected, "n={n}");
    }
    println!("criterion 4 (3-out-of-4 cycles through 0 and 3/4): PASS");
}

#[test]
fn criterion_5_post_measurement_remark() {
    assert_eq!(params(3, 4).post_measurement_strategy().unwrap(), Rational::one());
    let scaled = params(6, 8).post_measurement_strategy().unwrap();
    assert_eq!(scaled, rat(6, 7));
    assert!(scaled < Rational::one());
    println!("criterion 5 (post-measurement strategy): PASS");
}

#[test]
fn criterion_6_chebyshev_identity() {
    let polys: Vec<_> = (0..=64u64).map(chebyshev_like).collect();
    let mut rng = StdRng::seed_from_u64(0x6_c4e8);
    for _ in 0..200 {
        let phi: f64 = rng.gen_range(0.0..PI);
        let x = 2.0 * phi.cos();
        let x_exact = Rational::from_f64_exact(x).unwrap();
        for (n, poly) in polys.iter().enumerate() {
            let value = poly.eval(&x_exact).to_f64();
            let expected = 2.0 * (n as f64 * phi).cos();
            assert!(
                (value - expected).abs() <= 1e-9,
                "n={n} phi={phi}: f_n(2cosφ) = {value}, 2cos(nφ) = {expected}"
            );
        }
    }
    println!("criterion 6 (Chebyshev identity, 200 random angles, n <= 64): PASS");
}

#[test]
fn criterion_7_niven_containment() {
    let allowed: Vec<_> = (-2i64..=2).map(Rational::from_integer).collect();
    for q in 1..=50u64 {
        let f = chebyshev_like(q);
        for shift in [-2i64, 2] {
            for root in integer_roots(&f.add_constant(shift)).unwrap() {
                let root = Rational::from_integer(root);
                if root.abs() <= Rational::from_integer(2) {
                    assert!(allowed.contains(&root), "f_{q} {shift:+} has root {root}");
                }
            }
        }
    }

    let special = [rat(1, 1), rat(1, 2), rat(0, 1), rat(-1, 2), rat(-1, 1)];
    let mut rng = StdRng::seed_from_u64(0x7_1a2b);
    let mut checked = 0;
    while checked < 500 {
        let den = rng.gen_range(1i64..=1000);
        let num = rng.gen_range(-den + 1..den);
        let c = rat(num, den);
        if special.contains(&c) {
            continue;
        }
        assert_eq!(
            decide_rational_angle(&c).unwrap(),
            NivenVerdict::IrrationalAngle,
            "c = {c}"
        );
        checked += 1;
    }
    println!("criterion 7 (Niven containment and irrational-angle sampling): PASS");
}

#[test]
fn criterion_8_float_exact_agreement() {
    for size in 1..=64u64 {
        for targets in 0..=size {
            let inst = params(targets, size);
            let exact = inst.success_probabilities_exact(50);
            let spec = SearchSpec::new(size as usize, 1..=targets as usize).unwrap();
            let mut state = uniform_state(size as usize).unwrap();
            for n in 0..=50u64 {
                if n > 0 {
                    state = grover_step(&state, &spec).unwrap();
                }
                let expected = exact[n as usize].to_f64();
                let simulated = success_probability(&state, &spec).unwrap();
                assert!(
                    (simulated - expected).abs() <= 1e-10,
                    "simulator t={targets} N={size} n={n}: {simulated} vs {expected}"
                );
                let closed_form = inst.success_probability_float(n);
                assert!(
                    (closed_form - expected).abs() <= 1e-10,
                    "closed form t={targets} N={size} n={n}: {closed_form} vs {expected}"
                );
            }
        }
    }
    println!("criterion 8 (simulator / closed form / exact agreement): PASS");
}

#[test]
fn criterion_9_optimal_iteration_sanity() {
    for size in [16u64, 64, 256, 1024] {
        let inst = params(1, size);
        let (n, p) = inst.optimal_iterations().unwrap();
        let bound = (PI * (size as f64).sqrt() / 4.0).ceil() as u64 + 2;
        let brute = (0..=bound)
            .max_by(|&a, &b| {
                inst.success_probability_float(a)
                    .partial_cmp(&inst.success_probability_float(b))
                    .unwrap()
            })
            .unwrap();
        assert_eq!(n, brute, "N={size}");
        assert!((p - inst.success_probability_float(brute)).abs() <= 1e-15);
        let predicted = PI * (size as f64).sqrt() / 4.0 - 0.5;
        assert!(
            (n as f64 - predicted).abs() <= 1.0,
            "N={size}: n={n} vs π√N/4 - 1/2 = {predicted}"
        );
    }
    println!("criterion 9 (optimal iteration count sanity): PASS");
}
