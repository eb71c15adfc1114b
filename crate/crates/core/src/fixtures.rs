//! Hand-built models shared by the unit tests.

use crate::formula::Formula;
use crate::model::{Adf, AtomTable, BooleanNetwork};
use crate::semantics::{Interp3, State};

pub(crate) fn interp(s: &str) -> Interp3 {
    Interp3::parse(s).unwrap()
}

pub(crate) fn state(s: &str) -> State {
    State::parse(s).unwrap()
}

/// The travel framework over atoms p, v, t, f:
/// C_p = p, C_v = !t & p, C_t = p, C_f = t | v.
pub(crate) fn travel() -> Adf {
    let atoms = AtomTable::from_names(["p", "v", "t", "f"]);
    let p = Formula::atom(0);
    let conditions = vec![
        p.clone(),
        Formula::And(vec![Formula::not(Formula::atom(2)), p.clone()]),
        p,
        Formula::Or(vec![Formula::atom(2), Formula::atom(1)]),
    ];
    Adf::new(atoms, conditions).unwrap()
}

/// Three atoms attacking each other in a cycle: C_a = !c, C_b = !a, C_c = !b.
pub(crate) fn negation_cycle() -> Adf {
    let atoms = AtomTable::from_names(["a", "b", "c"]);
    let conditions = vec![
        Formula::not(Formula::atom(2)),
        Formula::not(Formula::atom(0)),
        Formula::not(Formula::atom(1)),
    ];
    Adf::new(atoms, conditions).unwrap()
}

/// A single self-supporting atom: C_a = a.
pub(crate) fn self_supporting() -> Adf {
    let atoms = AtomTable::from_names(["a"]);
    Adf::new(atoms, vec![Formula::atom(0)]).unwrap()
}

/// C_a = a | !a, C_b = b: a condition that is constant only semantically.
pub(crate) fn tautology_pair() -> Adf {
    let atoms = AtomTable::from_names(["a", "b"]);
    let taut = Formula::Or(vec![Formula::atom(0), Formula::not(Formula::atom(0))]);
    Adf::new(atoms, vec![taut, Formula::atom(1)]).unwrap()
}

/// The four-variable network with an input node v4:
/// f1 = v2, f2 = !v1 & v4, f3 = v1 | (v2 & !v4), f4 = v4.
pub(crate) fn four_variable_network() -> BooleanNetwork {
    let atoms = AtomTable::from_names(["v1", "v2", "v3", "v4"]);
    let v1 = || Formula::atom(0);
    let v2 = || Formula::atom(1);
    let v4 = || Formula::atom(3);
    let functions = vec![
        v2(),
        Formula::And(vec![Formula::not(v1()), v4()]),
        Formula::Or(vec![v1(), Formula::And(vec![v2(), Formula::not(v4())])]),
        v4(),
    ];
    BooleanNetwork::new(atoms, functions).unwrap()
}
