//! Truncated integer power series and the counting harness.
//!
//! Coefficients are arbitrary-precision: class counts near degree 200
//! overflow 32 bits and keep growing, and silent wrapping would void every
//! equinumerosity verdict. Multiplication is dense schoolbook with early
//! truncation; factors of the shape `1/(1 - q^k)` and `(1 + q^k)` are
//! applied by in-place accumulation.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partitions::OddModulus;

/// Integer coefficients for degrees `0 ..= truncation()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigUint>,
}

impl IntSeries {
    pub fn zero(truncation: usize) -> Self {
        IntSeries {
            coeffs: vec![BigUint::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0] = BigUint::one();
        s
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        IntSeries {
            coeffs: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigUint {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Multiply by `1/(1 - q^k)` in place.
    pub fn mul_geometric(&mut self, k: usize) {
        assert!(k >= 1);
        for i in k..self.coeffs.len() {
            let add = self.coeffs[i - k].clone();
            self.coeffs[i] += add;
        }
    }

    /// Multiply by `(1 + q^k)` in place.
    pub fn mul_one_plus(&mut self, k: usize) {
        assert!(k >= 1);
        for i in (k..self.coeffs.len()).rev() {
            let add = self.coeffs[i - k].clone();
            self.coeffs[i] += add;
        }
    }

    /// Schoolbook product, truncated to the shorter operand.
    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        let t = self.truncation().min(other.truncation());
        let mut out = IntSeries::zero(t);
        for i in 0..=t {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=t - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let add = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] += add;
            }
        }
        out
    }

    /// Add `q^shift * other`, truncating.
    pub fn add_shifted(&mut self, other: &IntSeries, shift: usize) {
        for i in shift..self.coeffs.len() {
            let j = i - shift;
            if j <= other.truncation() {
                let add = other.coeffs[j].clone();
                self.coeffs[i] += add;
            }
        }
    }
}

/// The principal character product `prod 1/(1 - t^k)` over `k` odd and not
/// divisible by `p`.
pub fn product_character(m: &OddModulus, truncation: usize) -> IntSeries {
    let mut s = IntSeries::one(truncation);
    for k in 1..=truncation {
        if k % 2 == 1 && k as u64 % m.p() != 0 {
            s.mul_geometric(k);
        }
    }
    s
}

/// `prod (1 + t^k)` over `k` not divisible by `p`: the distinct-parts count
/// of the class `D_p`.
pub fn d_class_series(m: &OddModulus, truncation: usize) -> IntSeries {
    let mut s = IntSeries::one(truncation);
    for k in 1..=truncation {
        if k as u64 % m.p() != 0 {
            s.mul_one_plus(k);
        }
    }
    s
}

/// `prod 1/(1 - t^k)` over parts congruent to `+-a` mod `b`.
pub fn congruence_series(a: u64, b: u64, truncation: usize) -> IntSeries {
    let mut s = IntSeries::one(truncation);
    for k in 1..=truncation {
        let r = k as u64 % b;
        if r == a % b || r == (b - a % b) % b {
            s.mul_geometric(k);
        }
    }
    s
}

/// Sum side of the Rogers-Ramanujan identities:
/// `sum_{n >= 0} q^{n(n+sigma)} / prod_{k=1}^{n} (1 - q^k)`.
pub fn rr_sum_side(sigma: u64, truncation: usize) -> IntSeries {
    assert!(sigma <= 1);
    let mut total = IntSeries::zero(truncation);
    let mut running = IntSeries::one(truncation);
    let mut n = 0u64;
    loop {
        let exponent = n * (n + sigma);
        if exponent as usize > truncation {
            break;
        }
        if n > 0 {
            running.mul_geometric(n as usize);
        }
        total.add_shifted(&running, exponent as usize);
        n += 1;
    }
    total
}

/// Product side of the Rogers-Ramanujan identities:
/// `prod_{n >= 0} 1/[(1 - q^{5n + sigma + 1})(1 - q^{5n + 4 - sigma})]`.
pub fn rr_product_side(sigma: u64, truncation: usize) -> IntSeries {
    assert!(sigma <= 1);
    congruence_series(sigma + 1, 5, truncation)
}

/// Per-size comparison of two counting sequences.
#[derive(Debug, Clone)]
pub struct PtReport {
    pub class_a: String,
    pub class_b: String,
    pub max_n: u64,
    pub counts_a: Vec<BigUint>,
    pub counts_b: Vec<BigUint>,
    pub first_mismatch: Option<u64>,
    /// Sample members of each class at the first mismatching size.
    pub witness_a: Vec<crate::partitions::Partition>,
    pub witness_b: Vec<crate::partitions::Partition>,
}

impl PtReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares two count vectors and names the smallest disagreeing size.
pub fn compare_counts(
    class_a: &str,
    class_b: &str,
    counts_a: Vec<BigUint>,
    counts_b: Vec<BigUint>,
) -> PtReport {
    let max_n = counts_a.len().min(counts_b.len()).saturating_sub(1) as u64;
    let first_mismatch = (0..=max_n).find(|&n| counts_a[n as usize] != counts_b[n as usize]);
    PtReport {
        class_a: class_a.to_string(),
        class_b: class_b.to_string(),
        max_n,
        counts_a,
        counts_b,
        first_mismatch,
        witness_a: Vec::new(),
        witness_b: Vec::new(),
    }
}
