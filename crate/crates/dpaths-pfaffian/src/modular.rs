//! Sparse Pfaffian elimination over prime fields.

use std::collections::BTreeMap;

use dpaths_graph::Graph;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::orientation::Orientation;

/// All primes used by the modular engine lie below this bound.
pub const PRIME_CEILING: u64 = 1 << 31;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `count` largest primes below [`PRIME_CEILING`], in decreasing order.
pub fn primes_below(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = PRIME_CEILING - 1;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n -= 2;
    }
    out
}

/// Chinese remaindering into the symmetric range around zero.
pub fn crt_symmetric(residues: &[u64], primes: &[u64]) -> BigInt {
    let mut value = BigInt::zero();
    let mut modulus = BigInt::one();
    for (&r, &p) in residues.iter().zip(primes) {
        let pb = BigInt::from(p);
        let current = (&value % &pb + &pb) % &pb;
        let current = u64::try_from(current).expect("reduced below p");
        let m_mod = u64::try_from(&modulus % &pb).expect("reduced below p");
        let diff = (r % p + p - current) % p;
        let t = mul_mod(diff, inv_mod(m_mod, p), p);
        value += &modulus * t;
        modulus *= p;
    }
    if &value * 2 > modulus {
        value - modulus
    } else {
        value
    }
}

/// Oriented edge list of a graph, ready for repeated Pfaffian evaluations mod primes.
#[derive(Clone, Debug)]
pub struct ModularPfaffian {
    dim: usize,
    /// `(tail, head, length)` per edge.
    arcs: Vec<(usize, usize, u64)>,
}

impl ModularPfaffian {
    pub fn new(graph: &Graph, orientation: &Orientation) -> Self {
        let arcs = graph
            .edges()
            .iter()
            .zip(&orientation.forward)
            .map(|(e, &fwd)| {
                if fwd {
                    (e.u, e.v, e.length)
                } else {
                    (e.v, e.u, e.length)
                }
            })
            .collect();
        ModularPfaffian {
            dim: graph.vertex_count(),
            arcs,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Pfaffian of the signed matrix with entries `s^length`, reduced mod `p`.
    pub fn eval(&self, s: u64, p: u64) -> u64 {
        if self.dim % 2 == 1 {
            return 0;
        }
        let mut rows: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); self.dim];
        for &(t, h, len) in &self.arcs {
            let w = pow_mod(s, len, p);
            if w != 0 {
                rows[t].insert(h, w);
                rows[h].insert(t, p - w);
            }
        }
        let mut alive = vec![true; self.dim];
        let mut remaining = self.dim;
        let mut pf = 1u64;
        while remaining > 0 {
            let Some(i) = (0..self.dim)
                .filter(|&v| alive[v])
                .min_by_key(|&v| (rows[v].len(), v))
            else {
                break;
            };
            let Some(j) = rows[i].keys().copied().min_by_key(|&w| (rows[w].len(), w)) else {
                return 0;
            };
            let (i, j) = if i < j { (i, j) } else { (j, i) };
            let pos_i = (0..i).filter(|&v| alive[v]).count();
            let pos_j = (0..j).filter(|&v| alive[v]).count();
            let a = rows[i][&j];
            pf = mul_mod(pf, a, p);
            if (pos_i + pos_j - 1) % 2 == 1 {
                pf = (p - pf) % p;
            }
            let a_inv = inv_mod(a, p);
            let row_i = std::mem::take(&mut rows[i]);
            let row_j = std::mem::take(&mut rows[j]);
            alive[i] = false;
            alive[j] = false;
            remaining -= 2;
            let mut touched: Vec<usize> = row_i
                .keys()
                .chain(row_j.keys())
                .copied()
                .filter(|&x| alive[x])
                .collect();
            touched.sort_unstable();
            touched.dedup();
            for &x in &touched {
                rows[x].remove(&i);
                rows[x].remove(&j);
            }
            // A[x][i] = -A[i][x], A[j][y] as stored in row j.
            let get = |row: &BTreeMap<usize, u64>, k: usize| row.get(&k).copied().unwrap_or(0);
            for (ix, &x) in touched.iter().enumerate() {
                let x_i = (p - get(&row_i, x)) % p;
                let x_j = (p - get(&row_j, x)) % p;
                for &y in &touched[ix + 1..] {
                    let j_y = get(&row_j, y);
                    let i_y = get(&row_i, y);
                    let delta = (mul_mod(x_i, j_y, p) + p - mul_mod(x_j, i_y, p)) % p;
                    if delta == 0 {
                        continue;
                    }
                    let delta = mul_mod(delta, a_inv, p);
                    let updated = (get(&rows[x], y) + delta) % p;
                    if updated == 0 {
                        rows[x].remove(&y);
                        rows[y].remove(&x);
                    } else {
                        rows[x].insert(y, updated);
                        rows[y].insert(x, p - updated);
                    }
                }
            }
        }
        pf
    }
}
