//! Neutrosophic values `(T, I, F)` and their connectives.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::nsets::{clamp_to_unit, elem_sub, obslash, obslash_prime, one_plus, ovee, ovee_prime, owedge, NSet};

mod formula;

pub use formula::Formula;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Semantics {
    /// Images of the multi-affine maps; truth values stay in the unit interval.
    #[default]
    Corrected,
    /// Disjunction and implication built from elementwise set arithmetic.
    Original,
    /// `Original` with out-of-range material replaced by `⁻0` or `1⁺`.
    Clamped,
}

impl Semantics {
    pub const ALL: [Semantics; 3] = [Semantics::Corrected, Semantics::Original, Semantics::Clamped];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Corrected => "corrected",
            Semantics::Original => "original",
            Semantics::Clamped => "clamped",
        }
    }

    fn finish(self, s: NSet) -> NSet {
        match self {
            Semantics::Clamped => clamp_to_unit(&s),
            _ => s,
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Semantics::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown semantics `{s}` (expected corrected, original or clamped)"))
    }
}

pub fn set_and(a: &NSet, b: &NSet, sem: Semantics) -> NSet {
    sem.finish(owedge(a, b))
}

pub fn set_or(a: &NSet, b: &NSet, sem: Semantics) -> NSet {
    match sem {
        Semantics::Corrected => ovee(a, b),
        _ => sem.finish(ovee_prime(a, b)),
    }
}

pub fn set_implies(a: &NSet, b: &NSet, sem: Semantics) -> NSet {
    match sem {
        Semantics::Corrected => obslash(a, b),
        _ => sem.finish(obslash_prime(a, b)),
    }
}

/// `{c - x : c ∈ 1⁺, x ∈ a}`.
pub fn set_not(a: &NSet, sem: Semantics) -> NSet {
    sem.finish(elem_sub(&one_plus(), a))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NValue {
    pub t: NSet,
    pub i: NSet,
    pub f: NSet,
}

impl NValue {
    pub fn new(t: NSet, i: NSet, f: NSet) -> NValue {
        NValue { t, i, f }
    }

    pub fn components(&self) -> [&NSet; 3] {
        [&self.t, &self.i, &self.f]
    }

    pub fn component(&self, c: Component) -> &NSet {
        match c {
            Component::T => &self.t,
            Component::I => &self.i,
            Component::F => &self.f,
        }
    }

    fn zip(&self, other: &NValue, op: impl Fn(&NSet, &NSet) -> NSet) -> NValue {
        NValue::new(op(&self.t, &other.t), op(&self.i, &other.i), op(&self.f, &other.f))
    }

    pub fn and(&self, other: &NValue, sem: Semantics) -> NValue {
        self.zip(other, |a, b| set_and(a, b, sem))
    }

    pub fn or(&self, other: &NValue, sem: Semantics) -> NValue {
        self.zip(other, |a, b| set_or(a, b, sem))
    }

    pub fn implies(&self, other: &NValue, sem: Semantics) -> NValue {
        self.zip(other, |a, b| set_implies(a, b, sem))
    }

    pub fn not(&self, sem: Semantics) -> NValue {
        NValue::new(set_not(&self.t, sem), set_not(&self.i, sem), set_not(&self.f, sem))
    }
}

impl fmt::Display for NValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.i, self.f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Component {
    T,
    I,
    F,
}

impl Component {
    pub const ALL: [Component; 3] = [Component::T, Component::I, Component::F];
}

pub type Environment = BTreeMap<String, NValue>;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum EvalError {
    #[error("unbound atom `{0}`")]
    UnboundAtom(String),
}

pub fn eval(phi: &Formula, env: &Environment, sem: Semantics) -> Result<NValue, EvalError> {
    Ok(match phi {
        Formula::Atom(name) => env.get(name).cloned().ok_or_else(|| EvalError::UnboundAtom(name.clone()))?,
        Formula::Not(a) => eval(a, env, sem)?.not(sem),
        Formula::And(a, b) => eval(a, env, sem)?.and(&eval(b, env, sem)?, sem),
        Formula::Or(a, b) => eval(a, env, sem)?.or(&eval(b, env, sem)?, sem),
        Formula::Implies(a, b) => eval(a, env, sem)?.implies(&eval(b, env, sem)?, sem),
    })
}

/// Evaluates `phi` in the single-component logic, with each atom bound to one set.
pub fn component_eval(phi: &Formula, env: &BTreeMap<String, NSet>, sem: Semantics) -> Result<NSet, EvalError> {
    Ok(match phi {
        Formula::Atom(name) => env.get(name).cloned().ok_or_else(|| EvalError::UnboundAtom(name.clone()))?,
        Formula::Not(a) => set_not(&component_eval(a, env, sem)?, sem),
        Formula::And(a, b) => set_and(&component_eval(a, env, sem)?, &component_eval(b, env, sem)?, sem),
        Formula::Or(a, b) => set_or(&component_eval(a, env, sem)?, &component_eval(b, env, sem)?, sem),
        Formula::Implies(a, b) => set_implies(&component_eval(a, env, sem)?, &component_eval(b, env, sem)?, sem),
    })
}

/// Projects an environment onto one component.
pub fn project(env: &Environment, c: Component) -> BTreeMap<String, NSet> {
    env.iter().map(|(k, v)| (k.clone(), v.component(c).clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nsets::{right_monad, unit_interval};
    use crate::ordfield::RationalFunction;

    fn pt(n: i64) -> NSet {
        NSet::point(RationalFunction::from_int(n))
    }

    fn paradox_env() -> Environment {
        let mut env = Environment::new();
        env.insert("A".into(), NValue::new(pt(1), pt(0), pt(0)));
        env.insert("B".into(), NValue::new(pt(0), pt(0), pt(1)));
        env
    }

    #[test]
    fn conjunction_of_the_paradox() {
        let env = paradox_env();
        let phi = Formula::and(Formula::atom("A"), Formula::atom("B"));
        let v = eval(&phi, &env, Semantics::Corrected).unwrap();
        assert_eq!(v, NValue::new(pt(0), pt(0), pt(0)));
        assert_eq!(v.to_string(), "({0}, {0}, {0})");
    }

    #[test]
    fn negation_of_the_paradox() {
        let env = paradox_env();
        let v = eval(&Formula::not(Formula::atom("A")), &env, Semantics::Corrected).unwrap();
        let one = RationalFunction::one();
        assert_eq!(v.i, right_monad(&one));
        assert_eq!(v.t, right_monad(&RationalFunction::zero()));
        let twice = v.not(Semantics::Clamped);
        assert!(twice.t.is_subset(&unit_interval()));
    }

    #[test]
    fn implication_and_disjunction() {
        let a = NValue::new(pt(1), pt(0), pt(0));
        assert_eq!(a.implies(&a, Semantics::Corrected).t, right_monad(&RationalFunction::one()));
        let b = NValue::new(pt(0).union(&pt(1)), pt(0), pt(0));
        let c = NValue::new(pt(1), pt(0), pt(0));
        assert!(b.or(&c, Semantics::Original).t.contains(&RationalFunction::from_int(2)));
        assert!(!b.or(&c, Semantics::Clamped).t.contains(&RationalFunction::from_int(2)));
    }

    #[test]
    fn unbound_atom() {
        let env = paradox_env();
        let err = eval(&Formula::atom("C"), &env, Semantics::Corrected).unwrap_err();
        assert_eq!(err, EvalError::UnboundAtom("C".into()));
    }

    #[test]
    fn component_logic() {
        let mut env = BTreeMap::new();
        env.insert("A".to_string(), NSet::point(RationalFunction::from_ratio(1, 2)));
        let phi = Formula::and(Formula::atom("A"), Formula::atom("A"));
        let r = component_eval(&phi, &env, Semantics::Corrected).unwrap();
        assert_eq!(r, NSet::point(RationalFunction::from_ratio(1, 4)));
    }
}
