//! Assembly of the signed polynomial and extraction of its leading monomial.

use dpaths_gadget::TerminalSubset;
use dpaths_graph::{Instance, PlanarEmbedding, Role};
use dpaths_pfaffian::count_pm;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::engine::{subset_polynomial, Engine, WorkEstimate};
use crate::poly::PolyCoeffs;
use crate::prepare::{prepare, Part, Prepared};
use crate::{SolutionSummary, SolveError};

/// Default ceiling on estimated running time: one hour, in nanoseconds.
pub const DEFAULT_MAX_WORK: f64 = 3.6e12;

#[derive(Clone, Debug, PartialEq)]
pub struct SolveOptions {
    pub threads: usize,
    pub engine: Engine,
    pub max_work: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            threads: 1,
            engine: Engine::Auto,
            max_work: DEFAULT_MAX_WORK,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub lambda: u64,
    pub terminal_count: usize,
    pub engine: Engine,
    pub poly: PolyCoeffs,
    /// Optimum of the cubic instance, before the reduction offset.
    pub reduced_length: Option<u64>,
    pub length_offset: i64,
    pub count: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub summary: SolutionSummary,
    pub components: Vec<ComponentReport>,
    pub infeasible_reason: Option<String>,
}

pub fn solve(
    instance: &Instance,
    rotation: Option<&PlanarEmbedding>,
    options: &SolveOptions,
) -> Result<SolveReport, SolveError> {
    solve_prepared(&prepare(instance, rotation)?, options)
}

pub fn solve_prepared(
    prepared: &Prepared,
    options: &SolveOptions,
) -> Result<SolveReport, SolveError> {
    let parts = match &prepared.parts {
        Ok(parts) => parts,
        Err(reason) => {
            return Ok(SolveReport {
                summary: SolutionSummary::infeasible(),
                components: Vec::new(),
                infeasible_reason: Some(reason.clone()),
            })
        }
    };
    let estimates: Vec<WorkEstimate> = parts.iter().map(WorkEstimate::of).collect();
    let estimate: f64 = estimates.iter().map(|e| e.cost(options.engine)).sum();
    if estimate > options.max_work {
        return Err(SolveError::CapacityExceeded {
            estimate,
            limit: options.max_work,
        });
    }
    let run = || -> Result<Vec<ComponentReport>, SolveError> {
        parts
            .iter()
            .zip(&estimates)
            .map(|(part, est)| solve_part(part, est.resolve(options.engine), options.threads > 1))
            .collect()
    };
    let components = if options.threads > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| SolveError::ThreadPool(e.to_string()))?
            .install(run)?
    } else {
        run()?
    };

    let mut length = 0u64;
    let mut count = BigUint::one();
    for c in &components {
        match c.reduced_length {
            None => {
                return Ok(SolveReport {
                    summary: SolutionSummary::infeasible(),
                    components,
                    infeasible_reason: Some(
                        "no disjoint path system exists in some component".into(),
                    ),
                })
            }
            Some(l) => {
                let lifted = l as i64 + c.length_offset;
                if lifted < 0 {
                    return Err(SolveError::InternalInconsistency(format!(
                        "negative lifted length {lifted}"
                    )));
                }
                length += lifted as u64;
                count *= &c.count;
            }
        }
    }
    Ok(SolveReport {
        summary: SolutionSummary {
            length: Some(length),
            count,
            witness: None,
        },
        components,
        infeasible_reason: None,
    })
}

/// Even subsets `X` containing terminal 0, or just the empty set when there are no terminals.
fn pair_representatives(k: usize) -> Vec<u64> {
    if k == 0 {
        return vec![0];
    }
    (0..1u64 << (k - 1))
        .map(|rest| rest << 1 | 1)
        .filter(|m| m.count_ones() % 2 == 0)
        .collect()
}

fn a_mask(part: &Part) -> u64 {
    let roles = part.normalized.instance.roles();
    part.gadget
        .terminals
        .iter()
        .enumerate()
        .filter(|(_, &t)| roles[t] == Role::A)
        .fold(0u64, |acc, (i, _)| acc | 1 << i)
}

fn solve_part(part: &Part, engine: Engine, parallel: bool) -> Result<ComponentReport, SolveError> {
    let k = part.gadget.terminal_count();
    let full = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let reps = pair_representatives(k);
    let mut masks: Vec<u64> = reps.iter().flat_map(|&x| [x, full ^ x]).collect();
    masks.sort_unstable();
    masks.dedup();
    let compute =
        |&mask: &u64| subset_polynomial(part, &TerminalSubset::from_mask(mask, k), engine);
    let polys: Vec<PolyCoeffs> = if parallel {
        masks.par_iter().map(compute).collect::<Result<_, _>>()?
    } else {
        masks.iter().map(compute).collect::<Result<_, _>>()?
    };
    let poly_of = |mask: u64| &polys[masks.binary_search(&mask).expect("mask computed")];

    let a = a_mask(part);
    let mut p = PolyCoeffs::default();
    for &x in &reps {
        let y = full ^ x;
        let sign = if (x & a).count_ones() % 2 == 0 { 1 } else { -1 };
        let factor = if x == y {
            BigInt::from(sign)
        } else {
            BigInt::from(2 * sign)
        };
        p.add_scaled(&poly_of(x).mul(poly_of(y)), &factor);
    }

    let mut report = ComponentReport {
        lambda: part.lambda,
        terminal_count: k,
        engine,
        poly: p.clone(),
        reduced_length: None,
        length_offset: part.normalized.trace.length_offset,
        count: BigUint::zero(),
    };
    let Some((d, c)) = p.leading() else {
        return Ok(report);
    };
    if !c.is_positive() {
        return Err(SolveError::InternalInconsistency(format!(
            "leading coefficient {c} at degree {d} is not positive"
        )));
    }
    if d as u64 > 2 * part.lambda {
        return Err(SolveError::InternalInconsistency(format!(
            "degree {d} exceeds 2 * {}",
            part.lambda
        )));
    }
    let divisor = BigInt::one() << (k / 2);
    let (q, r) = c.div_rem(&divisor);
    if !r.is_zero() {
        return Err(SolveError::InternalInconsistency(format!(
            "leading coefficient {c} is not divisible by {divisor}"
        )));
    }
    report.reduced_length = Some(2 * part.lambda - d as u64);
    report.count = q.magnitude().clone();
    Ok(report)
}

/// Direct value of the signed sum at `s`, one determinant per subset.
pub fn evaluate_p(part: &Part, s: u64) -> Result<BigInt, SolveError> {
    let k = part.gadget.terminal_count();
    let full = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let a = a_mask(part);
    let mut total = BigInt::zero();
    for x in 0..=full {
        if x.count_ones() % 2 == 1 {
            continue;
        }
        let pm = |mask: u64| {
            let sub = part.gadget.subgraph_hx(&TerminalSubset::from_mask(mask, k));
            count_pm(&sub.graph, &sub.embedding, s)
                .map_err(|e| SolveError::InternalInconsistency(e.to_string()))
        };
        let term = BigInt::from(pm(x)? * pm(full ^ x)?);
        if (x & a).count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}
