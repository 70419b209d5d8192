//! Free-parameter selection for the t1/t2/t3 bounds, cross-bound ranking,
//! and the [`BoundReport`] wire type.
//!
//! Disks from different bounds have different centers, so ranking uses the
//! scalar `quality(d) = |center| + radius`: the radius of the smallest
//! origin-centered disk containing `d`. Other metrics (plain radius, area)
//! rank differently; this one is documented on the CLI and in the README.

use crate::disk::Disk;
use crate::poly::Polynomial;
use crate::roots::{containment_default, tightness, Containment, RootSet};
use crate::theorems::{disk_t1, disk_t3, feasible_lambdas, theorem_disk, TheoremId, TheoremParams};
use serde::{Deserialize, Serialize};

/// Ranking scalar `|center| + radius`; ties between disks are broken by the
/// smaller radius.
pub fn quality(d: &Disk) -> f64 {
    d.center.norm() + d.radius
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OptError {
    #[error("{0}: no feasible parameters")]
    Infeasible(TheoremId),
}

/// Exact feasible parameter region of the t1 chain: `α ≥ alpha_min` and
/// `β ≥ beta_min`, provided the interior chain `a_1 ≤ … ≤ a_{n−1}` holds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct T1Region {
    pub alpha_min: f64,
    pub beta_min: f64,
}

/// Exact feasible parameter region of the t3 chain at any feasible λ:
/// `s ≥ s_min`, `t ≤ t_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct T3Region {
    pub s_min: f64,
    pub t_max: f64,
    /// Admissible peak indices, ascending (a contiguous range).
    pub lambdas: Vec<usize>,
}

/// Feasible parameter regions of both optimizable bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibleRegion {
    pub t1: Option<T1Region>,
    pub t3: Option<T3Region>,
}

impl FeasibleRegion {
    pub fn of(p: &Polynomial) -> FeasibleRegion {
        let a = p.coeffs();
        let n = p.degree();
        let t1 = if n == 1 {
            // the chain ends collapse onto a_1: alpha >= 0 is the constraint
            Some(T1Region {
                alpha_min: 0.0,
                beta_min: a[0] - a[1],
            })
        } else if a[1..n].windows(2).all(|w| w[0] <= w[1]) {
            Some(T1Region {
                alpha_min: a[n - 1] - a[n],
                beta_min: a[0] - a[1],
            })
        } else {
            None
        };
        let lambdas = feasible_lambdas(p);
        let t3 = if lambdas.is_empty() {
            None
        } else {
            Some(T3Region {
                s_min: a[0] - a[1],
                t_max: a[n - 1] - a[n],
                lambdas,
            })
        };
        FeasibleRegion { t1, t3 }
    }
}

/// Boundary values like `alpha_min = a_{n−1} − a_n` can round so that the
/// chain inequality they were solved from just misses in floats; bump by
/// ulps until the constraint actually holds.
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

/// Boundary candidate plus 0 when 0 is feasible (`min ≤ 0`), deduplicated.
fn lower_bounded_candidates(min: f64) -> Vec<f64> {
    if min < 0.0 {
        vec![min, 0.0]
    } else if min == 0.0 {
        vec![0.0]
    } else {
        vec![min]
    }
}

fn upper_bounded_candidates(max: f64) -> Vec<f64> {
    if max > 0.0 {
        vec![max, 0.0]
    } else if max == 0.0 {
        vec![0.0]
    } else {
        vec![max]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalT1 {
    pub alpha: f64,
    pub beta: f64,
    pub disk: Disk,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalT2 {
    pub s: f64,
    pub lambda: usize,
    pub disk: Disk,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalT3 {
    pub s: f64,
    pub t: f64,
    pub lambda: usize,
    pub disk: Disk,
}

/// Minimizes `quality(disk_t1(p, α, β))` over the feasible region.
///
/// The quality is piecewise-linear in each parameter with its only kink at
/// 0 (β enters through `β + |β|`, α through `|α|` in the center and `α` in
/// the radius), so the minimum is attained on the candidate set
/// `{alpha_min, 0} × {beta_min, 0}` intersected with the region. Ties are
/// broken by smaller `|α|`, then smaller `|β|`; the grid oracle guards this
/// reasoning in the test suite.
pub fn optimize_t1(p: &Polynomial) -> Result<OptimalT1, OptError> {
    let region = FeasibleRegion::of(p)
        .t1
        .ok_or(OptError::Infeasible(TheoremId::T1))?;
    let a = p.coeffs();
    let n = p.degree();
    let alpha_min = if n == 1 {
        0.0
    } else {
        nudge_up_until(region.alpha_min, |x| a[n - 1] <= a[n] + x)
    };
    let beta_min = nudge_up_until(region.beta_min, |x| a[0] - x <= a[1]);

    let mut best: Option<OptimalT1> = None;
    for &alpha in &lower_bounded_candidates(alpha_min) {
        for &beta in &lower_bounded_candidates(beta_min) {
            let disk = disk_t1(p, alpha, beta, 0.0).expect("candidate lies in feasible region");
            let q = quality(&disk);
            let better = match &best {
                None => true,
                Some(b) => {
                    let bq = quality(&b.disk);
                    q < bq || (q == bq && (alpha.abs(), beta.abs()) < (b.alpha.abs(), b.beta.abs()))
                }
            };
            if better {
                best = Some(OptimalT1 { alpha, beta, disk });
            }
        }
    }
    Ok(best.expect("candidate set is nonempty"))
}

/// Minimizes quality over the t3 parameters `(s, t, λ)`.
///
/// For each feasible λ the candidates are `{s_min, 0} × {t_max, 0}`
/// intersected with `s ≥ s_min`, `t ≤ t_max` (quality is piecewise-linear in
/// `s` via `s + |s|` and in `t` via `|t|` plus the center shift `t/a_n`,
/// with kinks only at 0 and the feasibility boundary). Ties are broken by
/// smaller λ, then smaller `|s|`, then smaller `|t|`.
pub fn optimize_t3(p: &Polynomial) -> Result<OptimalT3, OptError> {
    let region = FeasibleRegion::of(p)
        .t3
        .ok_or(OptError::Infeasible(TheoremId::T3))?;
    let a = p.coeffs();
    let n = p.degree();
    let s_min = nudge_up_until(region.s_min, |x| a[0] - x <= a[1]);
    let t_max = nudge_down_until(region.t_max, |x| a[n - 1] >= a[n] + x);

    let mut best: Option<OptimalT3> = None;
    for &lambda in &region.lambdas {
        for &s in &lower_bounded_candidates(s_min) {
            for &t in &upper_bounded_candidates(t_max) {
                let disk =
                    disk_t3(p, s, t, lambda, 0.0).expect("candidate lies in feasible region");
                let q = quality(&disk);
                let better = match &best {
                    None => true,
                    Some(b) => {
                        let bq = quality(&b.disk);
                        q < bq
                            || (q == bq
                                && (lambda, s.abs(), t.abs()) < (b.lambda, b.s.abs(), b.t.abs()))
                    }
                };
                if better {
                    best = Some(OptimalT3 { s, t, lambda, disk });
                }
            }
        }
    }
    Ok(best.expect("candidate set is nonempty"))
}

/// The `t = 0` restriction of [`optimize_t3`]: minimizes quality over
/// `(s, λ)`. Infeasible when `a_{n−1} < a_n` (t = 0 violates the chain top).
pub fn optimize_t2(p: &Polynomial) -> Result<OptimalT2, OptError> {
    let region = FeasibleRegion::of(p)
        .t3
        .ok_or(OptError::Infeasible(TheoremId::T2))?;
    let a = p.coeffs();
    let n = p.degree();
    if a[n - 1] < a[n] {
        return Err(OptError::Infeasible(TheoremId::T2));
    }
    let s_min = nudge_up_until(region.s_min, |x| a[0] - x <= a[1]);

    let mut best: Option<OptimalT2> = None;
    for &lambda in &region.lambdas {
        for &s in &lower_bounded_candidates(s_min) {
            let disk = disk_t3(p, s, 0.0, lambda, 0.0).expect("candidate is feasible");
            let q = quality(&disk);
            let better = match &best {
                None => true,
                Some(b) => {
                    let bq = quality(&b.disk);
                    q < bq || (q == bq && (lambda, s.abs()) < (b.lambda, b.s.abs()))
                }
            };
            if better {
                best = Some(OptimalT2 { s, lambda, disk });
            }
        }
    }
    Ok(best.expect("candidate set is nonempty"))
}

/// Parameter ranges for the exhaustive [`grid_oracle`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridRanges {
    T1 { alpha: (f64, f64), beta: (f64, f64) },
    T3 { s: (f64, f64), t: (f64, f64) },
}

fn lattice(range: (f64, f64), step: f64) -> Vec<f64> {
    let (lo, hi) = range;
    if step > hi - lo {
        return vec![lo];
    }
    let mut values = Vec::new();
    let count = ((hi - lo) / step).floor() as usize;
    for i in 0..=count {
        let v = lo + step * i as f64;
        if v <= hi + step * 1e-9 {
            values.push(v.min(hi));
        }
    }
    values
}

/// Exhaustive quality minimization over a feasibility-filtered parameter
/// lattice. Brute force on purpose: the test suites use it as the
/// independent check on the closed-form optimizers. Tie-breaks match the
/// optimizers (λ, then parameter magnitudes).
pub fn grid_oracle(
    p: &Polynomial,
    ranges: &GridRanges,
    step: f64,
) -> Result<(TheoremParams, f64), OptError> {
    match *ranges {
        GridRanges::T1 { alpha, beta } => {
            let mut best: Option<(f64, f64, f64)> = None;
            for &a in &lattice(alpha, step) {
                for &b in &lattice(beta, step) {
                    let Ok(disk) = disk_t1(p, a, b, 0.0) else {
                        continue;
                    };
                    let q = quality(&disk);
                    let better = match best {
                        None => true,
                        Some((bq, ba, bb)) => {
                            q < bq || (q == bq && (a.abs(), b.abs()) < (ba.abs(), bb.abs()))
                        }
                    };
                    if better {
                        best = Some((q, a, b));
                    }
                }
            }
            best.map(|(q, alpha, beta)| (TheoremParams::T1 { alpha, beta }, q))
                .ok_or(OptError::Infeasible(TheoremId::T1))
        }
        GridRanges::T3 { s, t } => {
            let n = p.degree();
            let mut best: Option<(f64, f64, f64, usize)> = None;
            for lambda in 1..n {
                for &sv in &lattice(s, step) {
                    for &tv in &lattice(t, step) {
                        let Ok(disk) = disk_t3(p, sv, tv, lambda, 0.0) else {
                            continue;
                        };
                        let q = quality(&disk);
                        let better = match best {
                            None => true,
                            Some((bq, bs, bt, bl)) => {
                                q < bq
                                    || (q == bq
                                        && (lambda, sv.abs(), tv.abs()) < (bl, bs.abs(), bt.abs()))
                            }
                        };
                        if better {
                            best = Some((q, sv, tv, lambda));
                        }
                    }
                }
            }
            best.map(|(q, s, t, lambda)| (TheoremParams::T3 { s, t, lambda }, q))
                .ok_or(OptError::Infeasible(TheoremId::T3))
        }
    }
}

/// Containment verdict tag as serialized in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ContainmentTag {
    Contained,
    Failed,
    Inconclusive,
    Unchecked,
}

impl From<&Containment> for ContainmentTag {
    fn from(c: &Containment) -> Self {
        match c {
            Containment::Contained => ContainmentTag::Contained,
            Containment::Failed { .. } => ContainmentTag::Failed,
            Containment::Inconclusive => ContainmentTag::Inconclusive,
            Containment::Unchecked => ContainmentTag::Unchecked,
        }
    }
}

/// One theorem application inside a [`BoundReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "EntryRepr", into = "EntryRepr")]
pub struct BoundEntry {
    pub params: TheoremParams,
    pub disk: Disk,
    pub containment: ContainmentTag,
    pub tightness: Option<f64>,
    /// True when the disk does not cover the closed unit disk, i.e. zeros
    /// of modulus < 1 fall outside what the chain argument certifies; a
    /// failed containment on such an entry refutes nothing.
    pub unverified_regime: bool,
}

impl BoundEntry {
    pub fn theorem(&self) -> TheoremId {
        self.params.theorem()
    }

    pub fn quality(&self) -> f64 {
        quality(&self.disk)
    }
}

/// Flat parameter map as serialized under `"params"`.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct ParamsRepr {
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    theorem: TheoremId,
    params: ParamsRepr,
    disk: Disk,
    containment: ContainmentTag,
    tightness: Option<f64>,
    unverified_regime: bool,
}

impl From<BoundEntry> for EntryRepr {
    fn from(e: BoundEntry) -> Self {
        let mut params = ParamsRepr::default();
        match e.params {
            TheoremParams::A | TheoremParams::B => {}
            TheoremParams::C { k } => params.k = Some(k),
            TheoremParams::D { k, rho } => {
                params.k = Some(k);
                params.rho = Some(rho);
            }
            TheoremParams::E { rho, lambda } => {
                params.rho = Some(rho);
                params.lambda = Some(lambda);
            }
            TheoremParams::Cor1 { k, rho } => {
                params.k = Some(k);
                params.rho = Some(rho);
            }
            TheoremParams::T1 { alpha, beta } => {
                params.alpha = Some(alpha);
                params.beta = Some(beta);
            }
            TheoremParams::T2 { s, lambda } => {
                params.s = Some(s);
                params.lambda = Some(lambda);
            }
            TheoremParams::T3 { s, t, lambda } => {
                params.s = Some(s);
                params.t = Some(t);
                params.lambda = Some(lambda);
            }
        }
        EntryRepr {
            theorem: e.params.theorem(),
            params,
            disk: e.disk,
            containment: e.containment,
            tightness: e.tightness,
            unverified_regime: e.unverified_regime,
        }
    }
}

impl TryFrom<EntryRepr> for BoundEntry {
    type Error = String;
    fn try_from(r: EntryRepr) -> Result<Self, String> {
        let missing = |name: &str| format!("{}: missing param {name}", r.theorem);
        let p = &r.params;
        let params = match r.theorem {
            TheoremId::A => TheoremParams::A,
            TheoremId::B => TheoremParams::B,
            TheoremId::C => TheoremParams::C {
                k: p.k.ok_or_else(|| missing("k"))?,
            },
            TheoremId::D => TheoremParams::D {
                k: p.k.ok_or_else(|| missing("k"))?,
                rho: p.rho.ok_or_else(|| missing("rho"))?,
            },
            TheoremId::E => TheoremParams::E {
                rho: p.rho.ok_or_else(|| missing("rho"))?,
                lambda: p.lambda.ok_or_else(|| missing("lambda"))?,
            },
            TheoremId::Cor1 => TheoremParams::Cor1 {
                k: p.k.ok_or_else(|| missing("k"))?,
                rho: p.rho.ok_or_else(|| missing("rho"))?,
            },
            TheoremId::T1 => TheoremParams::T1 {
                alpha: p.alpha.ok_or_else(|| missing("alpha"))?,
                beta: p.beta.ok_or_else(|| missing("beta"))?,
            },
            TheoremId::T2 => TheoremParams::T2 {
                s: p.s.ok_or_else(|| missing("s"))?,
                lambda: p.lambda.ok_or_else(|| missing("lambda"))?,
            },
            TheoremId::T3 => TheoremParams::T3 {
                s: p.s.ok_or_else(|| missing("s"))?,
                t: p.t.ok_or_else(|| missing("t"))?,
                lambda: p.lambda.ok_or_else(|| missing("lambda"))?,
            },
        };
        Ok(BoundEntry {
            params,
            disk: r.disk,
            containment: r.containment,
            tightness: r.tightness,
            unverified_regime: r.unverified_regime,
        })
    }
}

/// Every applicable bound for one polynomial, ranked by quality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub polynomial: Polynomial,
    pub entries: Vec<BoundEntry>,
    /// Index of the quality-minimal entry whose containment is not
    /// `failed`; `None` when no bound applies.
    pub best: Option<usize>,
}

/// Smallest admissible `k` for the chains ending in `k·a_n`:
/// `max(1, max_{j<n} a_j/a_n)`; defined only for `a_n > 0`.
pub fn k_min(p: &Polynomial) -> Option<f64> {
    let a = p.coeffs();
    let n = p.degree();
    if a[n] <= 0.0 {
        return None;
    }
    let raw = a[..n].iter().fold(1.0f64, |m, &c| m.max(c / a[n]));
    Some(nudge_up_until(raw, |k| a[n - 1] <= k * a[n]))
}

/// Largest `ρ ∈ (0, 1]` with `ρ·a_0 ≤ a_1`; `None` when no such ρ exists
/// (needs `a_0 > 0` to divide when `a_1 < a_0`).
pub fn rho_max(p: &Polynomial) -> Option<f64> {
    let a = p.coeffs();
    if a[1] >= a[0] {
        return Some(1.0);
    }
    if a[0] > 0.0 && a[1] > 0.0 {
        let raw = (a[1] / a[0]).min(1.0);
        let rho = nudge_down_until(raw, |r| r * a[0] <= a[1]);
        if rho > 0.0 {
            return Some(rho);
        }
    }
    None
}

/// Builds the report entry for one parameter choice, checking its
/// hypothesis and (when roots are supplied) containment and tightness.
pub fn entry_for(
    p: &Polynomial,
    params: TheoremParams,
    chain_tol: f64,
    roots: Option<&RootSet>,
) -> Result<BoundEntry, crate::theorems::TheoremError> {
    let disk = theorem_disk(p, &params, chain_tol)?;
    let (containment, tight) = match roots {
        None => (ContainmentTag::Unchecked, None),
        Some(rs) => {
            let verdict = containment_default(rs, &disk);
            let tight = if rs.converged {
                tightness(rs, &disk).ok()
            } else {
                None
            };
            (ContainmentTag::from(&verdict), tight)
        }
    };
    Ok(BoundEntry {
        params,
        disk,
        containment,
        tightness: tight,
        unverified_regime: !disk.covers_unit_disk(),
    })
}

/// Enumerates every applicable bound: a, b, c (k = k_min), d (k_min, ρ_max),
/// e (every feasible λ at ρ_max), cor1 (k_min, ρ_max), and the optimized
/// t1, t2, t3. Deterministic: enumeration order and tie-breaks are fixed,
/// so identical inputs produce identical reports.
pub fn best_bound(p: &Polynomial, roots: Option<&RootSet>, chain_tol: f64) -> BoundReport {
    let mut entries = Vec::new();
    let mut push = |params: TheoremParams| {
        if let Ok(entry) = entry_for(p, params, chain_tol, roots) {
            entries.push(entry);
        }
    };

    push(TheoremParams::A);
    push(TheoremParams::B);
    let k = k_min(p);
    let rho = rho_max(p);
    if let Some(k) = k {
        push(TheoremParams::C { k });
        if let (Some(rho), true) = (rho, p.constant() >= 0.0) {
            push(TheoremParams::D { k, rho });
        }
    }
    if let Some(rho) = rho {
        for lambda in feasible_lambdas(p) {
            push(TheoremParams::E { rho, lambda });
        }
    }
    if let (Some(k), Some(rho)) = (k, rho) {
        push(TheoremParams::Cor1 { k, rho });
    }
    if let Ok(opt) = optimize_t1(p) {
        push(TheoremParams::T1 {
            alpha: opt.alpha,
            beta: opt.beta,
        });
    }
    if let Ok(opt) = optimize_t2(p) {
        push(TheoremParams::T2 {
            s: opt.s,
            lambda: opt.lambda,
        });
    }
    if let Ok(opt) = optimize_t3(p) {
        push(TheoremParams::T3 {
            s: opt.s,
            t: opt.t,
            lambda: opt.lambda,
        });
    }

    let best = entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.containment != ContainmentTag::Failed)
        .min_by(|(_, x), (_, y)| {
            (x.quality(), x.disk.radius)
                .partial_cmp(&(y.quality(), y.disk.radius))
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .map(|(i, _)| i);

    BoundReport {
        polynomial: p.clone(),
        entries,
        best,
    }
}
