//! Closed disks in the complex plane.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A closed disk `|z − center| ≤ radius`.
///
/// Every disk produced by the theorem formulas has a real center
/// (−α/a_n, −(k−1), or 1 + t/a_n − a_{n−1}/a_n); the center is kept complex
/// so containment checks and plotting treat roots and disks uniformly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    /// Center, serialized as `[re, im]`.
    #[serde(with = "complex_pair")]
    pub center: Complex64,
    /// Radius, ≥ 0 for every disk a passing hypothesis produces.
    pub radius: f64,
}

impl Disk {
    /// Disk with a real center.
    pub fn real(center: f64, radius: f64) -> Self {
        Disk {
            center: Complex64::new(center, 0.0),
            radius,
        }
    }

    /// Distance of `z` beyond the disk edge (≤ 0 means inside or on it).
    pub fn excess(&self, z: Complex64) -> f64 {
        (z - self.center).norm() - self.radius
    }

    /// Containment with a relative + absolute slack on the radius.
    pub fn contains(&self, z: Complex64, rel_tol: f64, abs_tol: f64) -> bool {
        (z - self.center).norm() <= self.radius * (1.0 + rel_tol) + abs_tol
    }

    /// Whether the disk covers the closed unit disk `|z| ≤ 1`.
    ///
    /// When a chain hypothesis holds, zeros of modulus ≥ 1 always lie in the
    /// produced disk; zeros of modulus < 1 are only covered by the argument
    /// when the disk contains the unit disk. Entries where this fails are
    /// flagged `unverified_regime` in reports.
    pub fn covers_unit_disk(&self) -> bool {
        self.radius + 1e-12 >= 1.0 + self.center.norm()
    }
}

/// Serializes a complex number as the two-element array `[re, im]`.
mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}
