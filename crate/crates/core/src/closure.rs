//! Randomized check that the binary connectives keep truth-value sets inside
//! the unit interval.

use std::fmt;

use crate::nlogic::{set_and, set_implies, set_or, Semantics};
use crate::nsets::{member_probes, unit_interval, NSet};
use crate::ordfield::RationalFunction;
use crate::random;

type SetOp = fn(&NSet, &NSet, Semantics) -> NSet;

const OPS: [(&str, SetOp); 3] = [("and", set_and), ("or", set_or), ("implies", set_implies)];

/// A connective result that is not a subset of the unit interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub seed: u64,
    pub iteration: u64,
    pub op: &'static str,
    pub a: NSet,
    pub b: NSet,
    pub result: NSet,
    /// A member of `result` outside the unit interval, if a probe found one.
    pub member: Option<RationalFunction>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "first violation: seed {} iteration {}", self.seed, self.iteration)?;
        writeln!(f, "  A = {}", self.a)?;
        writeln!(f, "  B = {}", self.b)?;
        writeln!(f, "  A {} B = {}", self.op, self.result)?;
        match &self.member {
            Some(m) => write!(f, "  offending member: {}", m.display_expanded()),
            None => write!(f, "  offending member: none among probes"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureReport {
    pub semantics: Semantics,
    pub seed: u64,
    pub iterations: u64,
    /// Number of iterations with at least one violating result.
    pub violations: u64,
    pub first: Option<Violation>,
}

impl ClosureReport {
    fn merge(mut self, other: ClosureReport) -> ClosureReport {
        self.iterations += other.iterations;
        self.violations += other.violations;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if a.iteration <= b.iteration { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

impl fmt::Display for ClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "semantics: {}", self.semantics)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "iterations: {}", self.iterations)?;
        write!(f, "violations: {}", self.violations)?;
        if let Some(v) = &self.first {
            write!(f, "\n{v}")?;
        }
        Ok(())
    }
}

/// Runs iteration `index`: draws operands and checks every connective.
pub fn check_iteration(seed: u64, index: u64, sem: Semantics) -> Option<Violation> {
    let mut rng = random::stream(seed, index);
    let a = random::truth_set(&mut rng);
    let b = random::truth_set(&mut rng);
    let unit = unit_interval();
    for (name, op) in OPS {
        let result = op(&a, &b, sem);
        let member = member_probes(&result).into_iter().find(|x| !unit.contains(x));
        if member.is_some() || !result.is_subset(&unit) {
            return Some(Violation {
                seed,
                iteration: index,
                op: name,
                a,
                b,
                result,
                member,
            });
        }
    }
    None
}

fn single(seed: u64, index: u64, sem: Semantics) -> ClosureReport {
    let first = check_iteration(seed, index, sem);
    ClosureReport {
        semantics: sem,
        seed,
        iterations: 1,
        violations: first.is_some() as u64,
        first,
    }
}

fn empty(seed: u64, sem: Semantics) -> ClosureReport {
    ClosureReport {
        semantics: sem,
        seed,
        iterations: 0,
        violations: 0,
        first: None,
    }
}

pub fn run_sequential(iters: u64, seed: u64, sem: Semantics) -> ClosureReport {
    (0..iters).map(|i| single(seed, i, sem)).fold(empty(seed, sem), ClosureReport::merge)
}

#[cfg(feature = "parallel")]
pub fn run_parallel(iters: u64, seed: u64, sem: Semantics) -> ClosureReport {
    use rayon::prelude::*;
    (0..iters)
        .into_par_iter()
        .map(|i| single(seed, i, sem))
        .reduce(|| empty(seed, sem), ClosureReport::merge)
}

/// Data-parallel when built with the `parallel` feature, sequential otherwise.
/// Both give identical reports.
pub fn run(iters: u64, seed: u64, sem: Semantics) -> ClosureReport {
    #[cfg(feature = "parallel")]
    return run_parallel(iters, seed, sem);
    #[cfg(not(feature = "parallel"))]
    return run_sequential(iters, seed, sem);
}
