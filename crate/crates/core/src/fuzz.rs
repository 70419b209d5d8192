//! Seeded fuzz campaigns: generate polynomials satisfying a chosen chain
//! hypothesis by construction, solve for their zeros, and check the disk.
//!
//! Instance streams come from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded
//! with the configured value; identical configs produce byte-identical
//! summaries. Generation is sequential from the seed stream and reports
//! keep generation order.

use crate::optimizer::{BoundEntry, ContainmentTag};
use crate::poly::Polynomial;
use crate::roots::{containment_default, find_roots_default, tightness, Containment};
use crate::theorems::{theorem_disk, TheoremId, TheoremParams};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Which part of the parameter space to sample.
///
/// `Proven` keeps every instance inside the regime where the chain argument
/// certifies all zeros (`a_n > 0`, and `α ≥ 0` for t1), so containment
/// failures are genuine bugs. `Full` also samples `a_n < 0` and `α < 0`,
/// where the produced disk can miss zeros of modulus < 1; failures there
/// are data, flagged `unverified_regime`, not assertions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Proven,
    Full,
}

impl std::str::FromStr for Regime {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "proven" => Ok(Regime::Proven),
            "full" => Ok(Regime::Full),
            other => Err(format!(
                "unknown regime {other:?} (expected proven or full)"
            )),
        }
    }
}

/// Campaign configuration; equal configs generate identical streams.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub theorem: TheoremId,
    pub count: u64,
    pub degree_min: usize,
    pub degree_max: usize,
    pub scale: f64,
    pub seed: u64,
    pub regime: Regime,
}

impl FuzzConfig {
    pub fn new(theorem: TheoremId, count: u64, seed: u64) -> Self {
        FuzzConfig {
            theorem,
            count,
            degree_min: 2,
            degree_max: 15,
            scale: 1.0,
            seed,
            regime: Regime::Proven,
        }
    }
}

/// A containment failure, reported with everything needed to replay it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailingInstance {
    pub coeffs: Vec<f64>,
    pub entry: BoundEntry,
    pub worst_root: [f64; 2],
    pub excess: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    pub passes: u64,
    pub failures: u64,
    pub inconclusive: u64,
    pub failing: Vec<FailingInstance>,
}

fn unit(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(0.0..1.0)
}

fn positive(rng: &mut ChaCha8Rng, scale: f64) -> f64 {
    scale * rng.random_range(0.05..1.0)
}

fn signed(rng: &mut ChaCha8Rng, scale: f64) -> f64 {
    scale * rng.random_range(-1.0..1.0)
}

fn leading(rng: &mut ChaCha8Rng, scale: f64, regime: Regime) -> f64 {
    let magnitude = positive(rng, scale);
    if regime == Regime::Full && rng.random_bool(0.5) {
        -magnitude
    } else {
        magnitude
    }
}

fn nudge_up_until(mut x: f64, ok: impl Fn(f64) -> bool) -> f64 {
    for _ in 0..8 {
        if ok(x) {
            break;
        }
        x = x.next_up();
    }
    x
}

fn nudge_down_until(mut x: f64, ok: impl Fn(f64) -> bool) -> f64 {
    for _ in 0..8 {
        if ok(x) {
            break;
        }
        x = x.next_down();
    }
    x
}

/// `max(1, a_{n−1}/a_n)` plus nonnegative slack, adjusted so the chain top
/// holds in floats.
fn sample_k(rng: &mut ChaCha8Rng, a: &[f64], scale: f64) -> f64 {
    let n = a.len() - 1;
    let base = nudge_up_until((a[n - 1] / a[n]).max(1.0), |k| a[n - 1] <= k * a[n]);
    base + scale * unit(rng)
}

/// `a_0` at or below `a_1/ρ`, adjusted so `ρ·a_0 ≤ a_1` holds in floats.
fn sample_a0_for_rho(rng: &mut ChaCha8Rng, a1: f64, rho: f64, scale: f64) -> f64 {
    let raw = a1 / rho - scale * unit(rng);
    nudge_down_until(raw, |a0| rho * a0 <= a1)
}

/// Ascending run `a[from..=to]` built left to right with nonnegative steps.
fn fill_ascending(rng: &mut ChaCha8Rng, a: &mut [f64], from: usize, to: usize, scale: f64) {
    for j in from + 1..=to {
        a[j] = a[j - 1] + scale * unit(rng);
    }
}

/// Unimodal interior `a_1 ≤ … ≤ a_λ ≥ … ≥ a_{n−1}` built right to left
/// from a given `a_{n−1}`.
fn fill_unimodal_interior(rng: &mut ChaCha8Rng, a: &mut [f64], lambda: usize, scale: f64) {
    let n = a.len() - 1;
    for j in (lambda..n - 1).rev() {
        a[j] = a[j + 1] + scale * unit(rng);
    }
    for j in (1..lambda).rev() {
        a[j] = a[j + 1] - scale * unit(rng);
    }
}

/// Draws one polynomial/parameter pair satisfying `theorem`'s hypothesis.
pub fn generate_instance(
    rng: &mut ChaCha8Rng,
    theorem: TheoremId,
    degree_min: usize,
    degree_max: usize,
    scale: f64,
    regime: Regime,
) -> (Polynomial, TheoremParams) {
    let n = rng.random_range(degree_min..=degree_max);
    let mut a = vec![0.0; n + 1];
    let (a, params) = match theorem {
        TheoremId::A => {
            a[0] = scale * rng.random_range(0.01..1.0);
            fill_ascending(rng, &mut a, 0, n, scale);
            (a, TheoremParams::A)
        }
        TheoremId::B => {
            a[n] = positive(rng, scale);
            for j in (0..n).rev() {
                a[j] = a[j + 1] - scale * unit(rng);
            }
            (a, TheoremParams::B)
        }
        TheoremId::C => {
            a[0] = scale * rng.random_range(0.01..1.0);
            fill_ascending(rng, &mut a, 0, n - 1, scale);
            a[n] = positive(rng, scale);
            let k = sample_k(rng, &a, scale);
            (a, TheoremParams::C { k })
        }
        TheoremId::D => {
            let rho = rng.random_range(0.05..=1.0);
            a[1] = scale * unit(rng);
            fill_ascending(rng, &mut a, 1, n - 1, scale);
            a[0] = if a[1] > 0.0 {
                nudge_down_until(rng.random_range(0.0..a[1] / rho), |x| rho * x <= a[1])
            } else {
                0.0
            };
            a[n] = positive(rng, scale);
            let k = sample_k(rng, &a, scale);
            (a, TheoremParams::D { k, rho })
        }
        TheoremId::E => {
            let lambda = rng.random_range(1..n);
            a[n] = leading(rng, scale, regime);
            a[n - 1] = a[n] + scale * unit(rng);
            fill_unimodal_interior(rng, &mut a, lambda, scale);
            let rho = rng.random_range(0.05..=1.0);
            a[0] = sample_a0_for_rho(rng, a[1], rho, scale);
            (a, TheoremParams::E { rho, lambda })
        }
        TheoremId::Cor1 => {
            a[1] = signed(rng, scale);
            fill_ascending(rng, &mut a, 1, n - 1, scale);
            a[n] = positive(rng, scale);
            let k = sample_k(rng, &a, scale);
            let rho = rng.random_range(0.05..=1.0);
            a[0] = sample_a0_for_rho(rng, a[1], rho, scale);
            (a, TheoremParams::Cor1 { k, rho })
        }
        TheoremId::T1 => {
            a[1] = signed(rng, scale);
            fill_ascending(rng, &mut a, 1, n - 1, scale);
            a[0] = signed(rng, scale);
            a[n] = leading(rng, scale, regime);
            let alpha_base = match regime {
                // alpha < 0 satisfies the chain but the disk can miss
                // zeros of modulus < 1; the proven campaign stays at
                // alpha >= 0 where the bound is a theorem
                Regime::Proven => (a[n - 1] - a[n]).max(0.0),
                Regime::Full => a[n - 1] - a[n],
            };
            let alpha = nudge_up_until(alpha_base, |x| a[n - 1] <= a[n] + x) + scale * unit(rng);
            let beta = nudge_up_until(a[0] - a[1], |x| a[0] - x <= a[1]) + scale * unit(rng);
            (a, TheoremParams::T1 { alpha, beta })
        }
        TheoremId::T2 => {
            let lambda = rng.random_range(1..n);
            a[n] = leading(rng, scale, regime);
            a[n - 1] = a[n] + scale * unit(rng);
            fill_unimodal_interior(rng, &mut a, lambda, scale);
            a[0] = signed(rng, scale);
            let s = nudge_up_until(a[0] - a[1], |x| a[0] - x <= a[1]) + scale * unit(rng);
            (a, TheoremParams::T2 { s, lambda })
        }
        TheoremId::T3 => {
            let lambda = rng.random_range(1..n);
            a[n - 1] = signed(rng, scale);
            fill_unimodal_interior(rng, &mut a, lambda, scale);
            a[0] = signed(rng, scale);
            a[n] = leading(rng, scale, regime);
            let s = nudge_up_until(a[0] - a[1], |x| a[0] - x <= a[1]) + scale * unit(rng);
            let t = nudge_down_until(a[n - 1] - a[n], |x| a[n - 1] >= a[n] + x) - scale * unit(rng);
            (a, TheoremParams::T3 { s, t, lambda })
        }
    };
    let p = Polynomial::new(a).expect("generated coefficients are valid");
    (p, params)
}

/// Runs a campaign: every instance satisfies its hypothesis by
/// construction, so the verdict counts measure the bound itself (and the
/// solver). Failures are data, not panics.
pub fn run_campaign(config: &FuzzConfig) -> FuzzSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut summary = FuzzSummary {
        config: config.clone(),
        passes: 0,
        failures: 0,
        inconclusive: 0,
        failing: Vec::new(),
    };
    for _ in 0..config.count {
        let (p, params) = generate_instance(
            &mut rng,
            config.theorem,
            config.degree_min,
            config.degree_max,
            config.scale,
            config.regime,
        );
        let disk =
            theorem_disk(&p, &params, 0.0).expect("generated instance satisfies its hypothesis");
        let roots = find_roots_default(&p);
        match containment_default(&roots, &disk) {
            Containment::Contained => summary.passes += 1,
            Containment::Inconclusive => summary.inconclusive += 1,
            Containment::Failed { worst, excess } => {
                summary.failures += 1;
                summary.failing.push(FailingInstance {
                    coeffs: p.coeffs().to_vec(),
                    entry: BoundEntry {
                        params,
                        disk,
                        containment: ContainmentTag::Failed,
                        tightness: tightness(&roots, &disk).ok(),
                        unverified_regime: !disk.covers_unit_disk(),
                    },
                    worst_root: [worst.re, worst.im],
                    excess,
                });
            }
            Containment::Unchecked => unreachable!("campaign always checks"),
        }
    }
    summary
}
