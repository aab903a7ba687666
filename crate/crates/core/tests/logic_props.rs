use std::collections::BTreeMap;

use nsl_core::nlogic::{component_eval, eval, project, Component, Environment, Formula, Semantics};
use nsl_core::nsets::{clamp_to_unit, unit_interval};
use nsl_core::random;

const ATOMS: [&str; 3] = ["A", "B", "C"];

fn environment(rng: &mut random::Stream) -> Environment {
    ATOMS.iter().map(|a| (a.to_string(), random::connected_nvalue(rng))).collect()
}

fn rename(phi: &Formula, map: &BTreeMap<&str, &str>) -> Formula {
    match phi {
        Formula::Atom(n) => Formula::atom(map[n.as_str()]),
        Formula::Not(a) => Formula::not(rename(a, map)),
        Formula::And(a, b) => Formula::and(rename(a, map), rename(b, map)),
        Formula::Or(a, b) => Formula::or(rename(a, map), rename(b, map)),
        Formula::Implies(a, b) => Formula::implies(rename(a, map), rename(b, map)),
    }
}

#[test]
fn evaluation_factors_through_components() {
    for i in 0..200 {
        let mut rng = random::stream(21, i);
        let phi = random::formula(&mut rng, 5, &ATOMS);
        let env = environment(&mut rng);
        for sem in Semantics::ALL {
            let full = eval(&phi, &env, sem).unwrap();
            for c in Component::ALL {
                let part = component_eval(&phi, &project(&env, c), sem).unwrap();
                assert_eq!(&part, full.component(c), "{phi} under {sem}, component {c:?}");
            }
        }
    }
}

#[test]
fn corrected_and_clamped_results_stay_in_range() {
    let unit = unit_interval();
    for i in 0..200 {
        let mut rng = random::stream(22, i);
        let phi = random::formula(&mut rng, 4, &ATOMS);
        let env = environment(&mut rng);
        for sem in [Semantics::Corrected, Semantics::Clamped] {
            let v = eval(&phi, &env, sem).unwrap();
            for c in v.components() {
                assert!(c.is_subset(&unit), "{phi} under {sem} gives {c}");
            }
        }
        let clamped = eval(&phi, &env, Semantics::Clamped).unwrap();
        for c in clamped.components() {
            assert_eq!(&clamp_to_unit(c), c);
        }
    }
}

#[test]
fn evaluation_ignores_atom_names() {
    let map: BTreeMap<&str, &str> = [("A", "P"), ("B", "Q1"), ("C", "r_2")].into_iter().collect();
    for i in 0..100 {
        let mut rng = random::stream(23, i);
        let phi = random::formula(&mut rng, 4, &ATOMS);
        let env = environment(&mut rng);
        let renamed_env: Environment = env.iter().map(|(k, v)| (map[k.as_str()].to_string(), v.clone())).collect();
        let psi = rename(&phi, &map);
        for sem in Semantics::ALL {
            assert_eq!(eval(&phi, &env, sem).unwrap(), eval(&psi, &renamed_env, sem).unwrap());
        }
    }
}
