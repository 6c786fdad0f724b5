//! Matching polynomials of the subgraphs `H(X)`, exactly or through prime fields.

use dpaths_gadget::TerminalSubset;
use dpaths_pfaffian::{
    build_skew_matrix, crt_symmetric, det_exact, isqrt_exact, kasteleyn_orient, primes_below,
    BigSkewMatrix, ModularPfaffian,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::modular_interp::interpolate_mod;
use crate::poly::{interpolate_consecutive, PolyCoeffs};
use crate::prepare::Part;
use crate::SolveError;

/// How the matching polynomials are computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    /// Exact for small parts, modular otherwise.
    #[default]
    Auto,
    /// Bareiss determinants over big integers and an integer square root per point.
    Exact,
    /// Sparse Pfaffian elimination modulo several primes with Chinese remaindering.
    Modular,
}

/// Parts whose exact cost stays below this run on the exact engine under [`Engine::Auto`].
pub const AUTO_EXACT_LIMIT: f64 = 2.0e7;

/// Nanoseconds per unit of exact work, measured on a desktop core.
const EXACT_NS: f64 = 16.0;
/// Nanoseconds per unit of modular work.
const MODULAR_NS: f64 = 8.0;

/// Rough running-time estimates for one part, in nanoseconds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WorkEstimate {
    /// Number of subsets `X` whose polynomial is needed.
    pub subsets: f64,
    pub points: f64,
    pub primes: usize,
    pub exact: f64,
    pub modular: f64,
}

impl WorkEstimate {
    pub fn of(part: &Part) -> Self {
        let k = part.gadget.terminal_count();
        let subsets = if k == 0 { 1.0 } else { 2f64.powi(k as i32 - 1) };
        let points = part.lambda as f64 + 1.0;
        let m = part.gadget.graph.vertex_count() as f64;
        let bits = coefficient_bits(part) + points.log2() * points;
        let primes = prime_count(part);
        let exact = EXACT_NS * subsets * points * (m * m * m / 3.0) * (1.0 + bits / 64.0);
        let modular = MODULAR_NS * subsets * points * primes as f64 * (m * m + 8.0 * m);
        WorkEstimate {
            subsets,
            points,
            primes,
            exact,
            modular,
        }
    }

    pub fn resolve(&self, engine: Engine) -> Engine {
        match engine {
            Engine::Auto if self.exact <= AUTO_EXACT_LIMIT => Engine::Exact,
            Engine::Auto => Engine::Modular,
            other => other,
        }
    }

    pub fn cost(&self, engine: Engine) -> f64 {
        match self.resolve(engine) {
            Engine::Exact => self.exact,
            _ => self.modular,
        }
    }
}

/// Upper bound on `log2` of any coefficient, from the degree bound on perfect matchings.
fn coefficient_bits(part: &Part) -> f64 {
    let g = &part.gadget.graph;
    (0..g.vertex_count())
        .map(|v| {
            let d = g.degree(v);
            let fact: f64 = (1..=d).map(|i| i as f64).product();
            if d == 0 {
                0.0
            } else {
                fact.log2() / (2.0 * d as f64)
            }
        })
        .sum()
}

/// Primes needed to pin every coefficient, plus one spent on verification.
pub fn prime_count(part: &Part) -> usize {
    let bits = coefficient_bits(part).ceil() as usize + 2;
    bits.div_ceil(30) + 1
}

pub(crate) fn subset_polynomial(
    part: &Part,
    subset: &TerminalSubset,
    engine: Engine,
) -> Result<PolyCoeffs, SolveError> {
    let sub = part.gadget.subgraph_hx(subset);
    if sub.graph.vertex_count() % 2 == 1 {
        return Ok(PolyCoeffs::default());
    }
    let orientation = kasteleyn_orient(&sub.graph, &sub.embedding);
    let poly = match engine {
        Engine::Exact | Engine::Auto => {
            let mut values = Vec::with_capacity(part.lambda as usize + 1);
            for s in 0..=part.lambda {
                let m: BigSkewMatrix = build_skew_matrix(&sub.graph, &orientation, s);
                let det = det_exact(&m);
                let root = isqrt_exact(&det)
                    .map_err(|e| SolveError::InternalInconsistency(e.to_string()))?;
                values.push(root.abs());
            }
            interpolate_consecutive(&values)?
        }
        Engine::Modular => {
            modular_polynomial(part, &ModularPfaffian::new(&sub.graph, &orientation))?
        }
    };
    if !poly.all_nonnegative() {
        return Err(SolveError::InternalInconsistency(
            "matching polynomial has a negative coefficient".into(),
        ));
    }
    Ok(poly)
}

fn modular_polynomial(part: &Part, pfaffian: &ModularPfaffian) -> Result<PolyCoeffs, SolveError> {
    let primes = primes_below(prime_count(part));
    let points = part.lambda + 1;
    let residues: Vec<Vec<u64>> = primes
        .iter()
        .map(|&p| {
            let values: Vec<u64> = (0..points).map(|s| pfaffian.eval(s, p)).collect();
            interpolate_mod(&values, p)
        })
        .collect();
    let (check_prime, pin_primes) = primes.split_last().expect("at least two primes");
    let mut coeffs = Vec::with_capacity(points as usize);
    let mut sign = 0i8;
    for j in 0..points as usize {
        let column: Vec<u64> = residues[..pin_primes.len()].iter().map(|r| r[j]).collect();
        let c = crt_symmetric(&column, pin_primes);
        let check = BigInt::from(*check_prime);
        let reduced = ((&c % &check) + &check) % &check;
        if reduced != BigInt::from(residues[pin_primes.len()][j]) {
            return Err(SolveError::InternalInconsistency(format!(
                "coefficient {j} failed the verification prime"
            )));
        }
        if !c.is_zero() {
            let s = if c.is_negative() { -1 } else { 1 };
            if sign != 0 && s != sign {
                return Err(SolveError::InternalInconsistency(
                    "Pfaffian polynomial has mixed signs".into(),
                ));
            }
            sign = s;
        }
        coeffs.push(c.abs());
    }
    Ok(PolyCoeffs::trimmed(coeffs))
}
