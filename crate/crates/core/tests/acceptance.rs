//! Acceptance suite: one test per release criterion, each printing a
//! `[criterion N] name: PASS` line on success (run with `-- --nocapture`
//! to see them). Every tolerance is pinned here, not configurable.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;
use zerobound::fuzz::{generate_instance, run_campaign, FuzzConfig, Regime};
use zerobound::optimizer::{
    grid_oracle, optimize_t1, optimize_t2, optimize_t3, quality, FeasibleRegion, GridRanges,
};
use zerobound::roots::{
    containment_default, find_roots_default, tightness, vieta_check, Containment,
};
use zerobound::theorems::{
    baseline_disk, disk_cor1, disk_t1, disk_t2, disk_t3, TheoremId, TheoremParams,
};
use zerobound::Polynomial;

const EX1_COEFFS: [f64; 6] = [-1.0, 1.0, 2.0, 3.0, 4.0, 3.0];
const EX1_ROOTS: [(f64, f64); 5] = [
    (-0.9154, 0.4962),
    (-0.9154, -0.4962),
    (0.0530, 0.8845),
    (0.0530, -0.8845),
    (0.3916, 0.0),
];
const EX2_COEFFS: [f64; 7] = [-2.0, 0.0, 1.0, 3.0, 2.0, 2.0, -1.0];
const EX2_ROOTS: [(f64, f64); 6] = [
    (3.0197, 0.0),
    (-0.7682, 0.5814),
    (-0.7682, -0.5814),
    (-0.0803, 1.0233),
    (-0.0803, -1.0233),
    (0.6773, 0.0),
];

fn assert_roots_match(found: &[Complex64], expected: &[(f64, f64)], tol: f64) {
    assert_eq!(found.len(), expected.len());
    for &(re, im) in expected {
        let want = Complex64::new(re, im);
        let dist = found
            .iter()
            .map(|r| (r - want).norm())
            .fold(f64::INFINITY, f64::min);
        assert!(
            dist <= tol,
            "no root within {tol} of {want} (closest {dist})"
        );
    }
}

#[test]
fn criterion_1_example_1_reproduction() {
    let started = Instant::now();

    let p: Polynomial = "-1,1,2,3,4,3".parse().unwrap();
    assert_eq!(p.coeffs(), &EX1_COEFFS);
    let disk = disk_t1(&p, 2.0, 0.0, 0.0).unwrap();
    assert!((disk.center.re - (-2.0 / 3.0)).abs() <= 1e-12);
    assert_eq!(disk.center.im, 0.0);
    assert!((disk.radius - 7.0 / 3.0).abs() <= 1e-12);

    // end to end through the CLI surface
    let (json, exit) = zerobound::cli::cmd_bound(&bound_args(&[
        "zerobound",
        "bound",
        "-c",
        "-1,1,2,3,4,3",
        "--theorem",
        "t1",
        "--alpha",
        "2",
        "--beta",
        "0",
    ]));
    assert_eq!(exit, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert!((v["entries"][0]["disk"]["center"][0].as_f64().unwrap() + 2.0 / 3.0).abs() <= 1e-12);
    assert!((v["entries"][0]["disk"]["radius"].as_f64().unwrap() - 7.0 / 3.0).abs() <= 1e-12);

    let roots = find_roots_default(&p);
    assert!(roots.converged);
    assert_roots_match(&roots.roots, &EX1_ROOTS, 5e-4);
    assert_eq!(containment_default(&roots, &disk), Containment::Contained);

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("[criterion 1] example 1 reproduction (disk, roots, containment, < 1 s): PASS");
}

fn bound_args(argv: &[&str]) -> zerobound::cli::BoundArgs {
    use clap::Parser;
    match zerobound::cli::Cli::try_parse_from(argv).unwrap().command {
        zerobound::cli::Command::Bound(a) => a,
        other => panic!("expected bound, got {other:?}"),
    }
}

#[test]
fn criterion_2_example_2_reproduction() {
    let q = Polynomial::new(EX2_COEFFS.to_vec()).unwrap();
    let disk = disk_t3(&q, 0.0, 1.0, 3, 0.0).unwrap();
    assert!((disk.center.re - 2.0).abs() <= 1e-12);
    assert!((disk.radius - 9.0).abs() <= 1e-12);

    let roots = find_roots_default(&q);
    assert!(roots.converged);
    assert_roots_match(&roots.roots, &EX2_ROOTS, 5e-4);
    assert_eq!(containment_default(&roots, &disk), Containment::Contained);

    // expected tightness derived from the 4-decimal reference roots: the
    // farthest from center 2 is -0.7682 + 0.5814i
    let expected = f64::hypot(2.0 + 0.7682, 0.5814) / 9.0;
    let t = tightness(&roots, &disk).unwrap();
    assert!((t - expected).abs() <= 5e-3, "tightness {t} vs {expected}");
    println!("[criterion 2] example 2 reproduction (disk, roots, containment, tightness): PASS");
}

#[test]
fn criterion_3_positive_nondecreasing_chains_stay_in_unit_disk() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for i in 0..1000 {
        let (p, _) = generate_instance(&mut rng, TheoremId::A, 2, 12, 1.0, Regime::Proven);
        let roots = find_roots_default(&p);
        assert!(roots.converged, "instance {i} did not converge: {p}");
        for r in &roots.roots {
            assert!(
                r.norm() <= 1.0 + 1e-8,
                "instance {i}: root {r} outside unit disk for {p}"
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!("[criterion 3] 1000 positive nondecreasing chains, all roots in |z| <= 1 + 1e-8, < 10 s: PASS");
}

#[test]
fn criterion_4_containment_fuzz_per_theorem() {
    let theorems = [
        TheoremId::B,
        TheoremId::C,
        TheoremId::D,
        TheoremId::Cor1,
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
    ];
    for theorem in theorems {
        let summary = run_campaign(&FuzzConfig::new(theorem, 1000, 42));
        assert_eq!(
            summary.failures, 0,
            "{theorem}: containment failures {:?}",
            summary.failing
        );
        assert!(
            summary.inconclusive < 10,
            "{theorem}: inconclusive rate {}/1000",
            summary.inconclusive
        );
    }
    println!("[criterion 4] 1000-instance containment fuzz per theorem (b, c, d, cor1, t1, t2, t3), zero failures, inconclusive < 1%: PASS");
}

#[test]
fn criterion_5_specialization_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let bits = |d: &zerobound::Disk| {
        (
            d.center.re.to_bits(),
            d.center.im.to_bits(),
            d.radius.to_bits(),
        )
    };

    // t2 is t3 at t = 0, bit for bit
    for _ in 0..500 {
        let (p, params) = generate_instance(&mut rng, TheoremId::T2, 2, 15, 1.0, Regime::Proven);
        let TheoremParams::T2 { s, lambda } = params else {
            unreachable!()
        };
        let a = disk_t2(&p, s, lambda, 0.0).unwrap();
        let b = disk_t3(&p, s, 0.0, lambda, 0.0).unwrap();
        assert_eq!(bits(&a), bits(&b));
    }

    // cor1 is t1 at alpha = (k-1)a_n, beta = (1-rho)a_0, bit for bit
    for _ in 0..500 {
        let (p, params) = generate_instance(&mut rng, TheoremId::Cor1, 2, 15, 1.0, Regime::Proven);
        let TheoremParams::Cor1 { k, rho } = params else {
            unreachable!()
        };
        let a = disk_cor1(&p, k, rho, 0.0).unwrap();
        let b = disk_t1(&p, (k - 1.0) * p.leading(), (1.0 - rho) * p.constant(), 0.0).unwrap();
        assert_eq!(bits(&a), bits(&b));
    }

    // b is t1 at (0, 0) under b's hypothesis, bit for bit
    for _ in 0..500 {
        let (p, _) = generate_instance(&mut rng, TheoremId::B, 2, 15, 1.0, Regime::Proven);
        let a = baseline_disk(&p, &TheoremParams::B, 0.0).unwrap();
        let b = disk_t1(&p, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(bits(&a), bits(&b));
    }

    // with a_0 > 0, the cor1 radius equals the d radius k + 2a_0(1-rho)/a_n
    let mut checked = 0;
    while checked < 500 {
        let (p, params) = generate_instance(&mut rng, TheoremId::D, 2, 15, 1.0, Regime::Proven);
        let TheoremParams::D { k, rho } = params else {
            unreachable!()
        };
        if p.constant() <= 0.0 {
            continue;
        }
        checked += 1;
        let cor1 = disk_cor1(&p, k, rho, 0.0).unwrap();
        let d_radius = k + 2.0 * p.constant() * (1.0 - rho) / p.leading();
        assert!(
            (cor1.radius - d_radius).abs() <= 1e-12 * (1.0 + d_radius.abs()),
            "cor1 radius {} vs d radius {d_radius} on {p}",
            cor1.radius
        );
    }
    println!("[criterion 5] specialization identities (t2 = t3|t=0, cor1 = t1 substitution, b = t1(0,0), cor1 = d radius) on 500 instances each: PASS");
}

#[test]
fn criterion_6_closed_form_optimizers_match_grid_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let step = 1e-3;
    let span = 0.5;

    for _ in 0..200 {
        let (p, _) = generate_instance(&mut rng, TheoremId::T1, 2, 8, 1.0, Regime::Proven);
        let closed = optimize_t1(&p).unwrap();
        let region = FeasibleRegion::of(&p).t1.unwrap();
        let (_, oracle_q) = grid_oracle(
            &p,
            &GridRanges::T1 {
                alpha: (region.alpha_min, region.alpha_min + span),
                beta: (region.beta_min, region.beta_min + span),
            },
            step,
        )
        .unwrap();
        assert!(
            quality(&closed.disk) <= oracle_q + 1e-9,
            "t1 closed {} vs oracle {oracle_q} on {p}",
            quality(&closed.disk)
        );
    }

    for _ in 0..200 {
        let (p, _) = generate_instance(&mut rng, TheoremId::T3, 2, 8, 1.0, Regime::Proven);
        let closed = optimize_t3(&p).unwrap();
        let region = FeasibleRegion::of(&p).t3.unwrap();
        let (_, oracle_q) = grid_oracle(
            &p,
            &GridRanges::T3 {
                s: (region.s_min, region.s_min + span),
                t: (region.t_max - span, region.t_max),
            },
            step,
        )
        .unwrap();
        assert!(
            quality(&closed.disk) <= oracle_q + 1e-9,
            "t3 closed {} vs oracle {oracle_q} on {p}",
            quality(&closed.disk)
        );
    }

    for _ in 0..200 {
        let (p, _) = generate_instance(&mut rng, TheoremId::T2, 2, 8, 1.0, Regime::Proven);
        let closed = optimize_t2(&p).unwrap();
        let region = FeasibleRegion::of(&p).t3.unwrap();
        let (_, oracle_q) = grid_oracle(
            &p,
            &GridRanges::T3 {
                s: (region.s_min, region.s_min + span),
                t: (0.0, 0.0),
            },
            step,
        )
        .unwrap();
        assert!(
            quality(&closed.disk) <= oracle_q + 1e-9,
            "t2 closed {} vs oracle {oracle_q} on {p}",
            quality(&closed.disk)
        );
    }
    println!("[criterion 6] closed-form optima within 1e-9 of the 1e-3-step grid oracle, 200 instances per bound (t1, t2, t3): PASS");
}

#[test]
fn criterion_7_root_solver_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for i in 0..200 {
        let n = rng.random_range(1..=15);
        let mut coeffs: Vec<f64> = (0..=n).map(|_| rng.random_range(-10.0..10.0)).collect();
        while coeffs[n].abs() < 0.5 {
            coeffs[n] = rng.random_range(-10.0..10.0);
        }
        let p = Polynomial::new(coeffs).unwrap();
        let rs = find_roots_default(&p);
        assert!(rs.converged, "instance {i} did not converge: {p}");
        for (j, residual) in rs.residuals.iter().enumerate() {
            assert!(
                *residual <= 1e-10,
                "instance {i}: scaled residual {residual} at root {j} for {p}"
            );
        }

        let (sum_res, prod_res) = vieta_check(&p, &rs);
        let a = p.coeffs();
        let sum_scale = 1.0 + (a[n - 1] / a[n]).abs();
        let prod_scale = 1.0 + (a[0] / a[n]).abs();
        assert!(
            sum_res <= 1e-8 * sum_scale,
            "instance {i}: vieta sum {sum_res}"
        );
        assert!(
            prod_res <= 1e-8 * prod_scale,
            "instance {i}: vieta product {prod_res}"
        );

        // reconstruct the coefficients from the roots
        let mut poly = vec![Complex64::new(1.0, 0.0)];
        for &r in &rs.roots {
            let mut next = vec![Complex64::new(0.0, 0.0); poly.len() + 1];
            for (j, &c) in poly.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= r * c;
            }
            poly = next;
        }
        for (j, &c) in poly.iter().enumerate() {
            let reconstructed = c * p.leading();
            let target = p.coeffs()[j];
            let tol = 1e-7 * target.abs().max(1.0);
            assert!(
                (reconstructed.re - target).abs() <= tol && reconstructed.im.abs() <= tol,
                "instance {i}: coefficient {j} reconstructed {reconstructed} vs {target} for {p}"
            );
        }
    }
    println!("[criterion 7] 200 random solves: scaled residuals <= 1e-10, Vieta residuals <= 1e-8, reconstruction within 1e-7: PASS");
}
