use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::SkewMatrix;
use crate::PfaffianError;

/// Determinant by fraction-free Bareiss elimination with row pivoting.
pub fn det_exact<T>(m: &SkewMatrix<T>) -> T
where
    T: Clone + Integer + Signed,
{
    let n = m.dim();
    if n == 0 {
        return T::one();
    }
    let mut a = m.rows();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return T::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num.div_floor(&prev);
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact square root by Newton iteration; fails unless `x` is a perfect square.
pub fn isqrt_exact(x: &BigInt) -> Result<BigInt, PfaffianError> {
    if x.is_negative() {
        return Err(PfaffianError::NotPerfectSquare(x.clone()));
    }
    if x.is_zero() {
        return Ok(BigInt::zero());
    }
    let bits = x.bits();
    let mut r = BigInt::one() << bits.div_ceil(2);
    loop {
        let next = (&r + x / &r) >> 1;
        if next >= r {
            break;
        }
        r = next;
    }
    if &r * &r == *x {
        Ok(r)
    } else {
        Err(PfaffianError::NotPerfectSquare(x.clone()))
    }
}
