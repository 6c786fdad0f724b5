//! Interpolation over prime fields.

use dpaths_pfaffian::modular::inv_mod;

/// Coefficients of the falling factorials `s(s-1)...(s-k+1)` for `k < n`, built with `scalar` and `mul`.
pub fn falling_factorials<T, S, M>(n: usize, scalar: S, mul: M) -> Vec<Vec<T>>
where
    T: Clone + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
    S: Fn(i64) -> T,
    M: Fn(&T, &T) -> T,
{
    let mut out: Vec<Vec<T>> = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    out.push(vec![scalar(1)]);
    for k in 1..n {
        let prev = &out[k - 1];
        let shift = scalar((k - 1) as i64);
        let mut next = vec![scalar(0); prev.len() + 1];
        for (j, c) in prev.iter().enumerate() {
            next[j + 1] = next[j + 1].clone() + c.clone();
            next[j] = next[j].clone() - mul(c, &shift);
        }
        out.push(next);
    }
    out
}

/// Interpolates values at `s = 0..n-1` modulo `p`; requires `p > n`.
pub fn interpolate_mod(values: &[u64], p: u64) -> Vec<u64> {
    let n = values.len();
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(n);
    for k in 0..n {
        leading.push(diffs[0]);
        for i in 0..n - 1 - k {
            diffs[i] = (diffs[i + 1] + p - diffs[i]) % p;
        }
    }
    let mut coeffs = vec![0u64; n];
    let mut falling = vec![1u64];
    let mut inv_fact = 1u64;
    for k in 0..n {
        if k > 0 {
            let shift = (k - 1) as u64 % p;
            let mut next = vec![0u64; falling.len() + 1];
            for (j, &c) in falling.iter().enumerate() {
                next[j + 1] = (next[j + 1] + c) % p;
                next[j] = (next[j] + p - c * shift % p) % p;
            }
            falling = next;
            inv_fact = inv_fact * inv_mod(k as u64 % p, p) % p;
        }
        let w = leading[k] * inv_fact % p;
        if w == 0 {
            continue;
        }
        for (j, &c) in falling.iter().enumerate() {
            coeffs[j] = (coeffs[j] + w * c) % p;
        }
    }
    coeffs
}
