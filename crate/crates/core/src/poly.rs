//! Real polynomials in ascending coefficient order, Horner evaluation, and
//! the (1−z)·p(z) product.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Errors from constructing or parsing a [`Polynomial`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    /// A token was not a finite decimal number, or the JSON form was invalid.
    #[error("malformed input: {0}")]
    MalformedInput(String),
    /// The leading coefficient a_n is zero.
    #[error("degenerate leading coefficient: a_n must be nonzero")]
    DegenerateLeading,
    /// Fewer than two coefficients (degree < 1).
    #[error("too short: need at least two coefficients (degree >= 1)")]
    TooShort,
}

/// A real polynomial `p(z) = a_0 + a_1 z + ... + a_n z^n`.
///
/// Coefficients are stored in ascending power order (`a_0` first), the same
/// order every coefficient-chain hypothesis in this crate is written in, and
/// the same order all text/JSON I/O uses. Invariants: at least two
/// coefficients (degree ≥ 1), `a_n != 0`, all coefficients finite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

/// Wire form: `{"coeffs": [a_0, ..., a_n]}`.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<f64>,
}

impl TryFrom<PolyRepr> for Polynomial {
    type Error = PolyError;
    fn try_from(repr: PolyRepr) -> Result<Self, PolyError> {
        Polynomial::new(repr.coeffs)
    }
}

impl From<Polynomial> for PolyRepr {
    fn from(p: Polynomial) -> Self {
        PolyRepr { coeffs: p.coeffs }
    }
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients `[a_0, ..., a_n]`.
    pub fn new(coeffs: Vec<f64>) -> Result<Self, PolyError> {
        if coeffs.len() < 2 {
            return Err(PolyError::TooShort);
        }
        if let Some(bad) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(PolyError::MalformedInput(format!(
                "non-finite coefficient {bad}"
            )));
        }
        if *coeffs.last().unwrap() == 0.0 {
            return Err(PolyError::DegenerateLeading);
        }
        Ok(Polynomial { coeffs })
    }

    /// Ascending coefficients `[a_0, ..., a_n]`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree `n` (always ≥ 1).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Leading coefficient `a_n`.
    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    /// Constant term `a_0`.
    pub fn constant(&self) -> f64 {
        self.coeffs[0]
    }

    /// Evaluates `p(z)` by Horner's scheme, highest coefficient first.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Derivative `p'(z)` by Horner's scheme.
    pub fn eval_deriv(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (j, &c)| {
                acc * z + c * j as f64
            })
    }

    /// The product `g(z) = (1 − z) · p(z)`, with coefficients
    /// `[a_0, a_1 − a_0, ..., a_n − a_{n−1}, −a_n]` and degree `n + 1`.
    ///
    /// Every zero of `p` is a zero of `g`; the coefficient differences are
    /// what the chain hypotheses telescope over.
    pub fn one_minus_z_product(&self) -> Polynomial {
        let n = self.degree();
        let mut g = Vec::with_capacity(n + 2);
        g.push(self.coeffs[0]);
        for j in 1..=n {
            g.push(self.coeffs[j] - self.coeffs[j - 1]);
        }
        g.push(-self.coeffs[n]);
        // leading term is −a_n != 0, so this cannot fail
        Polynomial::new(g).unwrap()
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;

    /// Parses either the comma-separated ascending list `a_0,a_1,...,a_n`
    /// or the JSON forms `{"coeffs": [...]}` / `[...]`.
    fn from_str(text: &str) -> Result<Self, PolyError> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') || trimmed.starts_with('[') {
            let coeffs: Vec<f64> = if trimmed.starts_with('{') {
                serde_json::from_str::<PolyRepr>(trimmed)
                    .map_err(|e| PolyError::MalformedInput(e.to_string()))?
                    .coeffs
            } else {
                serde_json::from_str(trimmed)
                    .map_err(|e| PolyError::MalformedInput(e.to_string()))?
            };
            return Polynomial::new(coeffs);
        }
        let mut coeffs = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let value: f64 = token
                .parse()
                .map_err(|_| PolyError::MalformedInput(format!("bad token {token:?}")))?;
            if !value.is_finite() {
                return Err(PolyError::MalformedInput(format!(
                    "non-finite token {token:?}"
                )));
            }
            coeffs.push(value);
        }
        Polynomial::new(coeffs)
    }
}

impl fmt::Display for Polynomial {
    /// Comma-separated ascending coefficients; `parse(serialize(p)) == p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
