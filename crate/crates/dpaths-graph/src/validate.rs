//! Well-formedness checks for instances.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{Instance, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SelfLoop {
        vertex: VertexId,
    },
    ParallelEdge {
        u: VertexId,
        v: VertexId,
    },
    DegreeTooHigh {
        vertex: VertexId,
        degree: usize,
    },
    LengthOutOfRange {
        u: VertexId,
        v: VertexId,
        length: u64,
    },
    TerminalOutOfRange {
        vertex: VertexId,
    },
    DuplicateTerminal {
        vertex: VertexId,
    },
    TerminalOverlap {
        vertex: VertexId,
    },
    OddA {
        size: usize,
    },
    OddB {
        size: usize,
    },
    EmptyA,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Violation::ParallelEdge { u, v } => write!(f, "parallel edges between {u} and {v}"),
            Violation::DegreeTooHigh { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree} > 3")
            }
            Violation::LengthOutOfRange { u, v, length } => {
                write!(
                    f,
                    "edge ({u}, {v}) has length {length}, expected at least 1"
                )
            }
            Violation::TerminalOutOfRange { vertex } => {
                write!(f, "terminal {vertex} is not a vertex")
            }
            Violation::DuplicateTerminal { vertex } => write!(f, "terminal {vertex} listed twice"),
            Violation::TerminalOverlap { vertex } => write!(f, "A ∩ B ≠ ∅ (vertex {vertex})"),
            Violation::OddA { size } => write!(f, "|A| odd ({size})"),
            Violation::OddB { size } => write!(f, "|B| odd ({size})"),
            Violation::EmptyA => write!(f, "A is empty"),
        }
    }
}

/// All violated invariants; empty iff the instance is well-formed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn validate(instance: &Instance) -> ValidationReport {
    validate_terminal_lists(instance, &instance.a, &instance.b)
}

/// Like [`validate`] but on raw terminal lists, so duplicates are still visible.
pub fn validate_terminal_lists(
    instance: &Instance,
    a: &[VertexId],
    b: &[VertexId],
) -> ValidationReport {
    let g = &instance.graph;
    let mut violations = Vec::new();
    let mut seen_pairs = BTreeSet::new();
    for e in g.edges() {
        if e.u == e.v {
            violations.push(Violation::SelfLoop { vertex: e.u });
        } else if !seen_pairs.insert(e.key()) {
            violations.push(Violation::ParallelEdge { u: e.u, v: e.v });
        }
        if e.length == 0 {
            violations.push(Violation::LengthOutOfRange {
                u: e.u,
                v: e.v,
                length: e.length,
            });
        }
    }
    for v in 0..g.vertex_count() {
        if g.degree(v) > 3 {
            violations.push(Violation::DegreeTooHigh {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    let mut in_a = BTreeSet::new();
    for &z in a {
        if z >= g.vertex_count() {
            violations.push(Violation::TerminalOutOfRange { vertex: z });
        }
        if !in_a.insert(z) {
            violations.push(Violation::DuplicateTerminal { vertex: z });
        }
    }
    let mut in_b = BTreeSet::new();
    for &z in b {
        if z >= g.vertex_count() {
            violations.push(Violation::TerminalOutOfRange { vertex: z });
        }
        if !in_b.insert(z) {
            violations.push(Violation::DuplicateTerminal { vertex: z });
        }
        if in_a.contains(&z) {
            violations.push(Violation::TerminalOverlap { vertex: z });
        }
    }
    if in_a.is_empty() {
        violations.push(Violation::EmptyA);
    }
    if in_a.len() % 2 == 1 {
        violations.push(Violation::OddA { size: in_a.len() });
    }
    if in_b.len() % 2 == 1 {
        violations.push(Violation::OddB { size: in_b.len() });
    }
    ValidationReport { violations }
}
