//! Exact polynomial interpolation and arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::modular_interp::falling_factorials;
use crate::SolveError;

/// Coefficients in increasing degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyCoeffs {
    pub coeffs: Vec<BigInt>,
}

impl PolyCoeffs {
    pub fn trimmed(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyCoeffs { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<(usize, &BigInt)> {
        self.degree().map(|d| (d, &self.coeffs[d]))
    }

    pub fn eval(&self, s: u64) -> BigInt {
        let x = BigInt::from(s);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    pub fn mul(&self, other: &PolyCoeffs) -> PolyCoeffs {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return PolyCoeffs::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyCoeffs::trimmed(out)
    }

    pub fn add_scaled(&mut self, other: &PolyCoeffs, factor: &BigInt) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c * factor;
        }
        let trimmed = PolyCoeffs::trimmed(std::mem::take(&mut self.coeffs));
        *self = trimmed;
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Interpolates through `(s, value)` for `s = 0, 1, ..., N` exactly.
pub fn interpolate(points: &[(u64, BigInt)]) -> Result<PolyCoeffs, SolveError> {
    for (i, &(s, _)) in points.iter().enumerate() {
        if s != i as u64 {
            return Err(SolveError::InterpolationPoints);
        }
    }
    let values: Vec<BigInt> = points.iter().map(|(_, v)| v.clone()).collect();
    interpolate_consecutive(&values)
}

/// Newton forward differences scaled by `N!` so that every step stays integral.
pub fn interpolate_consecutive(values: &[BigInt]) -> Result<PolyCoeffs, SolveError> {
    let n = values.len();
    if n == 0 {
        return Ok(PolyCoeffs::default());
    }
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(n);
    for k in 0..n {
        leading.push(diffs[0].clone());
        for i in 0..n - 1 - k {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    let mut factorial = vec![BigInt::one(); n];
    for k in 1..n {
        factorial[k] = &factorial[k - 1] * BigInt::from(k);
    }
    let big_n = &factorial[n - 1];
    let falling = falling_factorials(n, |c| BigInt::from(c), |a, b| a * b);
    let mut scaled = vec![BigInt::zero(); n];
    for k in 0..n {
        if leading[k].is_zero() {
            continue;
        }
        let weight = &leading[k] * (big_n / &factorial[k]);
        for (j, c) in falling[k].iter().enumerate() {
            scaled[j] += &weight * c;
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    for (degree, c) in scaled.into_iter().enumerate() {
        let (q, r) = c.div_rem(big_n);
        if !r.is_zero() {
            return Err(SolveError::NonIntegerCoefficient { degree });
        }
        coeffs.push(q);
    }
    Ok(PolyCoeffs::trimmed(coeffs))
}
