//! Coefficient-chain hypotheses and the closed-form disks they imply.
//!
//! Nine bounds are implemented, identified by the ids used on the CLI:
//!
//! | id   | hypothesis on `a_0..a_n`                                | disk |
//! |------|---------------------------------------------------------|------|
//! | a    | `0 < a_0 ≤ a_1 ≤ … ≤ a_n`                               | `\|z\| ≤ 1` |
//! | b    | `a_0 ≤ a_1 ≤ … ≤ a_n`                                   | `\|z\| ≤ (a_n − a_0 + \|a_0\|)/\|a_n\|` |
//! | c    | `0 < a_0 ≤ … ≤ a_{n−1} ≤ k·a_n`, `k ≥ 1`                | `\|z + k − 1\| ≤ k` |
//! | d    | `0 ≤ ρa_0 ≤ a_1 ≤ … ≤ k·a_n`, `k ≥ 1`, `ρ ∈ (0,1]`      | `\|z + k − 1\| ≤ k + (2a_0/a_n)(1−ρ)` |
//! | e    | `ρa_0 ≤ a_1 ≤ … ≤ a_λ ≥ … ≥ a_n`, `ρ ∈ (0,1]`, `1 ≤ λ < n` | `\|z + a_{n−1}/a_n − 1\| ≤ (2a_λ − a_{n−1} + (2−ρ)\|a_0\| − ρa_0)/\|a_n\|` |
//! | cor1 | `ρa_0 ≤ a_1 ≤ … ≤ k·a_n`                                | t1 at `α = (k−1)a_n`, `β = (1−ρ)a_0` |
//! | t1   | `a_0 − β ≤ a_1 ≤ … ≤ a_n + α`, real `α, β`              | `\|z + α/a_n\| ≤ (a_n + α − a_0 + β + \|β\| + \|a_0\|)/\|a_n\|` |
//! | t2   | t3 at `t = 0`                                           | t3 at `t = 0` |
//! | t3   | `a_0 − s ≤ a_1 ≤ … ≤ a_λ ≥ … ≥ a_{n−1} ≥ a_n + t`       | `\|z + a_{n−1}/a_n − 1 − t/a_n\| ≤ (2a_λ − a_{n−1} + s − a_0 + \|s\| + \|a_0\| + \|t\|)/\|a_n\|` |
//!
//! All chain comparisons are non-strict and exact by default; a `chain_tol`
//! of `T` relaxes `x ≤ y` to `x ≤ y + T` for user data. The endpoint sign
//! conditions (`0 < a_0` for a/c, `0 ≤ ρa_0` for d) stay strict regardless.
//!
//! Bound e is stated for `0 ≤ λ < n` in the literature but its chain reads
//! `a_{λ−1}`; this implementation requires `λ ≥ 1`.

use crate::disk::Disk;
use crate::poly::Polynomial;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Identifies one of the nine bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    A,
    B,
    C,
    D,
    E,
    Cor1,
    T1,
    T2,
    T3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::A,
        TheoremId::B,
        TheoremId::C,
        TheoremId::D,
        TheoremId::E,
        TheoremId::Cor1,
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::A => "a",
            TheoremId::B => "b",
            TheoremId::C => "c",
            TheoremId::D => "d",
            TheoremId::E => "e",
            TheoremId::Cor1 => "cor1",
            TheoremId::T1 => "t1",
            TheoremId::T2 => "t2",
            TheoremId::T3 => "t3",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(TheoremId::A),
            "b" => Ok(TheoremId::B),
            "c" => Ok(TheoremId::C),
            "d" => Ok(TheoremId::D),
            "e" => Ok(TheoremId::E),
            "cor1" => Ok(TheoremId::Cor1),
            "t1" => Ok(TheoremId::T1),
            "t2" => Ok(TheoremId::T2),
            "t3" => Ok(TheoremId::T3),
            other => Err(format!("unknown theorem id {other:?}")),
        }
    }
}

/// Per-bound parameter record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TheoremParams {
    A,
    B,
    C { k: f64 },
    D { k: f64, rho: f64 },
    E { rho: f64, lambda: usize },
    Cor1 { k: f64, rho: f64 },
    T1 { alpha: f64, beta: f64 },
    T2 { s: f64, lambda: usize },
    T3 { s: f64, t: f64, lambda: usize },
}

impl TheoremParams {
    pub fn theorem(&self) -> TheoremId {
        match self {
            TheoremParams::A => TheoremId::A,
            TheoremParams::B => TheoremId::B,
            TheoremParams::C { .. } => TheoremId::C,
            TheoremParams::D { .. } => TheoremId::D,
            TheoremParams::E { .. } => TheoremId::E,
            TheoremParams::Cor1 { .. } => TheoremId::Cor1,
            TheoremParams::T1 { .. } => TheoremId::T1,
            TheoremParams::T2 { .. } => TheoremId::T2,
            TheoremParams::T3 { .. } => TheoremId::T3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TheoremError {
    #[error("{theorem}: hypothesis violated: {detail}")]
    HypothesisViolated { theorem: TheoremId, detail: String },
    #[error("{theorem}: bad parameter: {detail}")]
    BadParam { theorem: TheoremId, detail: String },
}

impl TheoremError {
    fn hypothesis(theorem: TheoremId, detail: impl Into<String>) -> Self {
        TheoremError::HypothesisViolated {
            theorem,
            detail: detail.into(),
        }
    }

    fn bad_param(theorem: TheoremId, detail: impl Into<String>) -> Self {
        TheoremError::BadParam {
            theorem,
            detail: detail.into(),
        }
    }
}

#[inline]
fn le(a: f64, b: f64, tol: f64) -> bool {
    a <= b + tol
}

#[inline]
fn ge(a: f64, b: f64, tol: f64) -> bool {
    a + tol >= b
}

fn check_param(theorem: TheoremId, name: &str, value: f64) -> Result<(), TheoremError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(TheoremError::bad_param(
            theorem,
            format!("{name} must be finite"),
        ))
    }
}

fn check_k(theorem: TheoremId, k: f64) -> Result<(), TheoremError> {
    check_param(theorem, "k", k)?;
    if k >= 1.0 {
        Ok(())
    } else {
        Err(TheoremError::bad_param(
            theorem,
            format!("k = {k} must be >= 1"),
        ))
    }
}

fn check_rho(theorem: TheoremId, rho: f64) -> Result<(), TheoremError> {
    check_param(theorem, "rho", rho)?;
    if rho > 0.0 && rho <= 1.0 {
        Ok(())
    } else {
        Err(TheoremError::bad_param(
            theorem,
            format!("rho = {rho} must lie in (0, 1]"),
        ))
    }
}

fn check_lambda(theorem: TheoremId, lambda: usize, n: usize) -> Result<(), TheoremError> {
    if lambda >= 1 && lambda < n {
        Ok(())
    } else {
        Err(TheoremError::bad_param(
            theorem,
            format!("lambda = {lambda} must satisfy 1 <= lambda < n = {n}"),
        ))
    }
}

/// Chain `a_0 − β ≤ a_1 ≤ … ≤ a_{n−1} ≤ a_n + α`.
///
/// For `n = 1` the two chain ends collapse onto `a_1`, reading
/// `a_0 − β ≤ a_1 ≤ a_1 + α`, i.e. additionally `α ≥ 0`.
pub fn hypothesis_t1(p: &Polynomial, alpha: f64, beta: f64, chain_tol: f64) -> bool {
    let a = p.coeffs();
    let n = p.degree();
    if !le(a[0] - beta, a[1], chain_tol) {
        return false;
    }
    if n == 1 {
        return alpha + chain_tol >= 0.0;
    }
    for j in 1..n - 1 {
        if !le(a[j], a[j + 1], chain_tol) {
            return false;
        }
    }
    le(a[n - 1], a[n] + alpha, chain_tol)
}

/// Disk `|z + α/a_n| ≤ (a_n + α − a_0 + β + |β| + |a_0|)/|a_n|` under the
/// t1 chain.
pub fn disk_t1(
    p: &Polynomial,
    alpha: f64,
    beta: f64,
    chain_tol: f64,
) -> Result<Disk, TheoremError> {
    check_param(TheoremId::T1, "alpha", alpha)?;
    check_param(TheoremId::T1, "beta", beta)?;
    if !hypothesis_t1(p, alpha, beta, chain_tol) {
        return Err(TheoremError::hypothesis(
            TheoremId::T1,
            format!("chain a_0 - beta <= a_1 <= ... <= a_n + alpha fails for alpha = {alpha}, beta = {beta}"),
        ));
    }
    let a = p.coeffs();
    let an = p.leading();
    let center = 0.0 - alpha / an;
    let radius = (an + alpha - a[0] + beta + beta.abs() + a[0].abs()) / an.abs();
    Ok(Disk::real(center, radius))
}

/// Disk `|z + k − 1| ≤ (k·a_n − ρa_0 + |a_0|(2−ρ))/|a_n|` under the chain
/// `ρa_0 ≤ a_1 ≤ … ≤ k·a_n`.
///
/// Routed through [`disk_t1`] at `α = (k−1)a_n`, `β = (1−ρ)a_0`, so the
/// substitution identity holds bit-for-bit; the direct formula above is kept
/// as a debug cross-check (the two agree exactly in real arithmetic because
/// `(1−ρ)|a_0| = |(1−ρ)a_0|`).
pub fn disk_cor1(p: &Polynomial, k: f64, rho: f64, chain_tol: f64) -> Result<Disk, TheoremError> {
    check_k(TheoremId::Cor1, k)?;
    check_rho(TheoremId::Cor1, rho)?;
    let an = p.leading();
    let a0 = p.constant();
    let alpha = (k - 1.0) * an;
    let beta = (1.0 - rho) * a0;
    let disk = disk_t1(p, alpha, beta, chain_tol).map_err(|_| {
        TheoremError::hypothesis(
            TheoremId::Cor1,
            format!("chain rho*a_0 <= a_1 <= ... <= k*a_n fails for k = {k}, rho = {rho}"),
        )
    })?;
    if a0 >= 0.0 {
        let direct = (k * an - rho * a0 + a0.abs() * (2.0 - rho)) / an.abs();
        debug_assert!(
            (disk.radius - direct).abs() <= 1e-12 * (1.0 + direct.abs()),
            "cor1 direct formula disagrees: {} vs {direct}",
            disk.radius
        );
    }
    Ok(disk)
}

/// Chain `a_0 − s ≤ a_1 ≤ … ≤ a_λ ≥ a_{λ+1} ≥ … ≥ a_{n−1} ≥ a_n + t`
/// for an interior peak index `0 < λ < n`.
pub fn hypothesis_t3(
    p: &Polynomial,
    s: f64,
    t: f64,
    lambda: usize,
    chain_tol: f64,
) -> Result<bool, TheoremError> {
    let n = p.degree();
    check_lambda(TheoremId::T3, lambda, n)?;
    let a = p.coeffs();
    if !le(a[0] - s, a[1], chain_tol) {
        return Ok(false);
    }
    for j in 1..lambda {
        if !le(a[j], a[j + 1], chain_tol) {
            return Ok(false);
        }
    }
    for j in lambda..n - 1 {
        if !ge(a[j], a[j + 1], chain_tol) {
            return Ok(false);
        }
    }
    Ok(ge(a[n - 1], a[n] + t, chain_tol))
}

/// Disk `|z + a_{n−1}/a_n − (1 + t/a_n)| ≤
/// (2a_λ − a_{n−1} + s − a_0 + |s| + |a_0| + |t|)/|a_n|` under the t3 chain.
pub fn disk_t3(
    p: &Polynomial,
    s: f64,
    t: f64,
    lambda: usize,
    chain_tol: f64,
) -> Result<Disk, TheoremError> {
    check_param(TheoremId::T3, "s", s)?;
    check_param(TheoremId::T3, "t", t)?;
    if !hypothesis_t3(p, s, t, lambda, chain_tol)? {
        return Err(TheoremError::hypothesis(
            TheoremId::T3,
            format!("unimodal chain fails for s = {s}, t = {t}, lambda = {lambda}"),
        ));
    }
    let a = p.coeffs();
    let n = p.degree();
    let an = p.leading();
    let center = 1.0 + t / an - a[n - 1] / an;
    let radius =
        (2.0 * a[lambda] - a[n - 1] + s - a[0] + s.abs() + a[0].abs() + t.abs()) / an.abs();
    Ok(Disk::real(center, radius))
}

/// The `t = 0` case of [`disk_t3`]; the two formulas coincide identically,
/// so this is a pure delegation.
pub fn disk_t2(
    p: &Polynomial,
    s: f64,
    lambda: usize,
    chain_tol: f64,
) -> Result<Disk, TheoremError> {
    disk_t3(p, s, 0.0, lambda, chain_tol)
}

fn hypothesis_a(p: &Polynomial, chain_tol: f64) -> bool {
    let a = p.coeffs();
    a[0] > 0.0 && a.windows(2).all(|w| le(w[0], w[1], chain_tol))
}

fn hypothesis_b(p: &Polynomial, chain_tol: f64) -> bool {
    p.coeffs().windows(2).all(|w| le(w[0], w[1], chain_tol))
}

fn hypothesis_c(p: &Polynomial, k: f64, chain_tol: f64) -> bool {
    let a = p.coeffs();
    let n = p.degree();
    a[0] > 0.0
        && a[..n].windows(2).all(|w| le(w[0], w[1], chain_tol))
        && le(a[n - 1], k * a[n], chain_tol)
}

fn hypothesis_d(p: &Polynomial, k: f64, rho: f64, chain_tol: f64) -> bool {
    let a = p.coeffs();
    let n = p.degree();
    rho * a[0] >= 0.0
        && le(rho * a[0], a[1], chain_tol)
        && a[1..n].windows(2).all(|w| le(w[0], w[1], chain_tol))
        && le(a[n - 1], k * a[n], chain_tol)
}

fn hypothesis_e(p: &Polynomial, rho: f64, lambda: usize, chain_tol: f64) -> bool {
    let a = p.coeffs();
    let n = p.degree();
    if !le(rho * a[0], a[1], chain_tol) {
        return false;
    }
    for j in 1..lambda {
        if !le(a[j], a[j + 1], chain_tol) {
            return false;
        }
    }
    for j in lambda..n {
        if !ge(a[j], a[j + 1], chain_tol) {
            return false;
        }
    }
    true
}

/// Disk for one of the baseline bounds a, b, c, d, e.
pub fn baseline_disk(
    p: &Polynomial,
    params: &TheoremParams,
    chain_tol: f64,
) -> Result<Disk, TheoremError> {
    let a = p.coeffs();
    let n = p.degree();
    let an = p.leading();
    match *params {
        TheoremParams::A => {
            if hypothesis_a(p, chain_tol) {
                Ok(Disk::real(0.0, 1.0))
            } else {
                Err(TheoremError::hypothesis(
                    TheoremId::A,
                    "coefficients must satisfy 0 < a_0 <= a_1 <= ... <= a_n",
                ))
            }
        }
        // b is the alpha = beta = 0 case of t1; delegating keeps the
        // specialization identity exact.
        TheoremParams::B => disk_t1(p, 0.0, 0.0, chain_tol).map_err(|_| {
            TheoremError::hypothesis(
                TheoremId::B,
                "coefficients must satisfy a_0 <= a_1 <= ... <= a_n",
            )
        }),
        TheoremParams::C { k } => {
            check_k(TheoremId::C, k)?;
            if hypothesis_c(p, k, chain_tol) {
                Ok(Disk::real(0.0 - (k - 1.0), k))
            } else {
                Err(TheoremError::hypothesis(
                    TheoremId::C,
                    format!("chain 0 < a_0 <= ... <= k*a_n fails for k = {k}"),
                ))
            }
        }
        TheoremParams::D { k, rho } => {
            check_k(TheoremId::D, k)?;
            check_rho(TheoremId::D, rho)?;
            if hypothesis_d(p, k, rho, chain_tol) {
                Ok(Disk::real(
                    0.0 - (k - 1.0),
                    k + (2.0 * a[0] / an) * (1.0 - rho),
                ))
            } else {
                Err(TheoremError::hypothesis(
                    TheoremId::D,
                    format!(
                        "chain 0 <= rho*a_0 <= a_1 <= ... <= k*a_n fails for k = {k}, rho = {rho}"
                    ),
                ))
            }
        }
        TheoremParams::E { rho, lambda } => {
            check_rho(TheoremId::E, rho)?;
            check_lambda(TheoremId::E, lambda, n)?;
            if hypothesis_e(p, rho, lambda, chain_tol) {
                let radius =
                    (2.0 * a[lambda] - a[n - 1] + (2.0 - rho) * a[0].abs() - rho * a[0]) / an.abs();
                Ok(Disk::real(1.0 - a[n - 1] / an, radius))
            } else {
                Err(TheoremError::hypothesis(
                    TheoremId::E,
                    format!("unimodal chain fails for rho = {rho}, lambda = {lambda}"),
                ))
            }
        }
        _ => unreachable!("baseline_disk only handles a, b, c, d, e"),
    }
}

/// Disk for any of the nine bounds.
pub fn theorem_disk(
    p: &Polynomial,
    params: &TheoremParams,
    chain_tol: f64,
) -> Result<Disk, TheoremError> {
    match *params {
        TheoremParams::A
        | TheoremParams::B
        | TheoremParams::C { .. }
        | TheoremParams::D { .. }
        | TheoremParams::E { .. } => baseline_disk(p, params, chain_tol),
        TheoremParams::Cor1 { k, rho } => disk_cor1(p, k, rho, chain_tol),
        TheoremParams::T1 { alpha, beta } => disk_t1(p, alpha, beta, chain_tol),
        TheoremParams::T2 { s, lambda } => disk_t2(p, s, lambda, chain_tol),
        TheoremParams::T3 { s, t, lambda } => disk_t3(p, s, t, lambda, chain_tol),
    }
}

/// Whether the chain hypothesis of `params` holds (parameter-domain errors
/// are still reported as `BadParam`).
pub fn hypothesis_holds(
    p: &Polynomial,
    params: &TheoremParams,
    chain_tol: f64,
) -> Result<bool, TheoremError> {
    match *params {
        TheoremParams::A => Ok(hypothesis_a(p, chain_tol)),
        TheoremParams::B => Ok(hypothesis_b(p, chain_tol)),
        TheoremParams::C { k } => {
            check_k(TheoremId::C, k)?;
            Ok(hypothesis_c(p, k, chain_tol))
        }
        TheoremParams::D { k, rho } => {
            check_k(TheoremId::D, k)?;
            check_rho(TheoremId::D, rho)?;
            Ok(hypothesis_d(p, k, rho, chain_tol))
        }
        TheoremParams::E { rho, lambda } => {
            check_rho(TheoremId::E, rho)?;
            check_lambda(TheoremId::E, lambda, p.degree())?;
            Ok(hypothesis_e(p, rho, lambda, chain_tol))
        }
        TheoremParams::Cor1 { k, rho } => {
            check_k(TheoremId::Cor1, k)?;
            check_rho(TheoremId::Cor1, rho)?;
            let alpha = (k - 1.0) * p.leading();
            let beta = (1.0 - rho) * p.constant();
            Ok(hypothesis_t1(p, alpha, beta, chain_tol))
        }
        TheoremParams::T1 { alpha, beta } => Ok(hypothesis_t1(p, alpha, beta, chain_tol)),
        TheoremParams::T2 { s, lambda } => hypothesis_t3(p, s, 0.0, lambda, chain_tol),
        TheoremParams::T3 { s, t, lambda } => hypothesis_t3(p, s, t, lambda, chain_tol),
    }
}

/// All interior peak indices `0 < λ < n` for which the t3 interior chain
/// `a_1 ≤ … ≤ a_λ ≥ … ≥ a_{n−1}` holds. Empty for degree 1; otherwise a
/// contiguous (possibly empty) range around the interior maximum plateau.
pub fn feasible_lambdas(p: &Polynomial) -> Vec<usize> {
    let a = p.coeffs();
    let n = p.degree();
    if n < 2 {
        return Vec::new();
    }
    (1..n)
        .filter(|&lambda| {
            (1..lambda).all(|j| a[j] <= a[j + 1]) && (lambda..n - 1).all(|j| a[j] >= a[j + 1])
        })
        .collect()
}
