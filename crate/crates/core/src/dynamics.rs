//! Network dynamics: state transition graphs under both update schemes,
//! trap sets, attractors, stable states, and trap spaces.
//!
//! Subspaces are [`Interp3`] values read with [`Tri::Undec`] as the free
//! value. The trap-space test does not walk the transition graph: a subspace
//! is a trap space exactly when every variable it fixes keeps its fixed
//! value under the componentwise image of the update functions
//! ([`subspace_image`]), which mirrors the admissibility of the
//! corresponding interpretation. The direct graph-closure definition is kept
//! alongside ([`Stg::is_trap_set`]) as an independent route.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{AtomId, Tri};
use crate::model::BooleanNetwork;
use crate::semantics::{scan_interpretations, Interp3, State};
use crate::Budget;

/// How states advance in one time step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UpdateScheme {
    /// All variables update simultaneously; every state has exactly one
    /// successor.
    Synchronous,
    /// Exactly one variable updates per step; a self-loop is recorded only
    /// for states fixed by every update function, so each state has between
    /// one and `n` successors.
    Asynchronous,
}

impl fmt::Display for UpdateScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpdateScheme::Synchronous => write!(f, "synchronous"),
            UpdateScheme::Asynchronous => write!(f, "asynchronous"),
        }
    }
}

fn check_state(network: &BooleanNetwork, state: &State) -> Result<()> {
    if state.len() != network.num_variables() {
        return Err(Error::AtomCountMismatch {
            expected: network.num_variables(),
            found: state.len(),
        });
    }
    Ok(())
}

/// The unique synchronous successor: every variable set to the value of its
/// update function.
pub fn synchronous_successor(network: &BooleanNetwork, state: &State) -> Result<State> {
    check_state(network, state)?;
    let values = network
        .functions()
        .iter()
        .map(|f| f.eval2(state.values()))
        .collect::<Result<Vec<bool>>>()?;
    Ok(State::new(values))
}

/// The successor states under the chosen scheme, in index order.
pub fn successors(
    network: &BooleanNetwork,
    state: &State,
    scheme: UpdateScheme,
) -> Result<Vec<State>> {
    match scheme {
        UpdateScheme::Synchronous => Ok(vec![synchronous_successor(network, state)?]),
        UpdateScheme::Asynchronous => {
            check_state(network, state)?;
            let mut out = Vec::new();
            for (i, f) in network.functions().iter().enumerate() {
                let target = f.eval2(state.values())?;
                if target != state.get(AtomId(i)) {
                    let mut values = state.values().to_vec();
                    values[i] = target;
                    out.push(State::new(values));
                }
            }
            if out.is_empty() {
                out.push(state.clone());
            }
            Ok(out)
        }
    }
}

/// Successors when one *or more* variables update per step: one state per
/// non-empty subset of the variables that want to change. This generalised
/// asynchronous scheme is exposed for experimentation; reports stick to the
/// two standard schemes.
pub fn generalized_async_successors(
    network: &BooleanNetwork,
    state: &State,
) -> Result<Vec<State>> {
    check_state(network, state)?;
    let mut changing = Vec::new();
    for (i, f) in network.functions().iter().enumerate() {
        if f.eval2(state.values())? != state.get(AtomId(i)) {
            changing.push(i);
        }
    }
    // every subset of the changing variables yields a distinct state; the
    // empty subset stands for the steps that only touch stable variables
    let mut out = Vec::new();
    for mask in 0..(1usize << changing.len()) {
        let mut values = state.values().to_vec();
        for (bit, &idx) in changing.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                values[idx] = !values[idx];
            }
        }
        out.push(State::new(values));
    }
    out.sort();
    Ok(out)
}

/// The complete state transition graph: all 2^n states with their
/// successors under one scheme.
#[derive(Clone, Debug)]
pub struct Stg {
    scheme: UpdateScheme,
    num_atoms: usize,
    succ: Vec<Vec<usize>>,
}

impl Stg {
    pub fn scheme(&self) -> UpdateScheme {
        self.scheme
    }

    pub fn num_atoms(&self) -> usize {
        self.num_atoms
    }

    pub fn num_states(&self) -> usize {
        self.succ.len()
    }

    pub fn states(&self) -> impl Iterator<Item = State> + '_ {
        (0..self.succ.len()).map(|i| State::from_index(i, self.num_atoms))
    }

    pub fn successor_indices(&self, state_index: usize) -> &[usize] {
        &self.succ[state_index]
    }

    pub fn successors_of(&self, state: &State) -> Vec<State> {
        self.succ[state.to_index()]
            .iter()
            .map(|&i| State::from_index(i, self.num_atoms))
            .collect()
    }

    /// All transitions in (source, target) index order.
    pub fn edges(&self) -> impl Iterator<Item = (State, State)> + '_ {
        self.succ.iter().enumerate().flat_map(move |(v, ws)| {
            ws.iter().map(move |&w| {
                (
                    State::from_index(v, self.num_atoms),
                    State::from_index(w, self.num_atoms),
                )
            })
        })
    }

    /// Whether the set is closed under transitions.
    pub fn is_trap_set(&self, states: &BTreeSet<State>) -> Result<bool> {
        let mut member = vec![false; self.succ.len()];
        for s in states {
            if s.len() != self.num_atoms {
                return Err(Error::AtomCountMismatch {
                    expected: self.num_atoms,
                    found: s.len(),
                });
            }
            member[s.to_index()] = true;
        }
        for s in states {
            if self.succ[s.to_index()].iter().any(|&w| !member[w]) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Builds the full transition graph; guarded by the state-scan budget.
pub fn build_stg(
    network: &BooleanNetwork,
    scheme: UpdateScheme,
    budget: &Budget,
) -> Result<Stg> {
    let n = network.num_variables();
    budget.check_state_scan(n)?;
    let mut succ = Vec::with_capacity(1 << n);
    for index in 0..(1usize << n) {
        let state = State::from_index(index, n);
        let targets = successors(network, &state, scheme)?;
        succ.push(targets.iter().map(State::to_index).collect());
    }
    Ok(Stg {
        scheme,
        num_atoms: n,
        succ,
    })
}

/// Iterative Tarjan decomposition into strongly connected components.
pub(crate) fn strongly_connected_components(succ: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = succ.len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut components = Vec::new();
    let mut counter = 0usize;
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, 0));

        while let Some(&(v, child)) = frames.last() {
            if child < succ[v].len() {
                frames.last_mut().unwrap().1 += 1;
                let w = succ[v][child];
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut component = Vec::new();
                    loop {
                        let w = stack.pop().expect("component root is on the stack");
                        on_stack[w] = false;
                        component.push(w);
                        if w == v {
                            break;
                        }
                    }
                    components.push(component);
                }
            }
        }
    }
    components
}

/// The attractors of the graph: its terminal strongly connected components,
/// each returned as a sorted state set.
pub fn attractors(stg: &Stg) -> Vec<Vec<State>> {
    let components = strongly_connected_components(&stg.succ);
    let mut component_of = vec![0usize; stg.succ.len()];
    for (ci, component) in components.iter().enumerate() {
        for &v in component {
            component_of[v] = ci;
        }
    }
    let mut result: Vec<Vec<usize>> = components
        .iter()
        .enumerate()
        .filter(|(ci, component)| {
            component
                .iter()
                .all(|&v| stg.succ[v].iter().all(|&w| component_of[w] == *ci))
        })
        .map(|(_, component)| {
            let mut sorted = component.clone();
            sorted.sort_unstable();
            sorted
        })
        .collect();
    result.sort();
    result
        .into_iter()
        .map(|component| {
            component
                .into_iter()
                .map(|v| State::from_index(v, stg.num_atoms))
                .collect()
        })
        .collect()
}

/// The attraction basin of each attractor: all states from which the
/// attractor is reachable, computed by reverse reachability.
pub fn basins(stg: &Stg, attractors: &[Vec<State>]) -> Vec<Vec<State>> {
    let mut reverse = vec![Vec::new(); stg.succ.len()];
    for (v, ws) in stg.succ.iter().enumerate() {
        for &w in ws {
            reverse[w].push(v);
        }
    }
    attractors
        .iter()
        .map(|attractor| {
            let mut seen = vec![false; stg.succ.len()];
            let mut queue: VecDeque<usize> = attractor
                .iter()
                .map(|s| {
                    let i = s.to_index();
                    seen[i] = true;
                    i
                })
                .collect();
            while let Some(v) = queue.pop_front() {
                for &u in &reverse[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            seen.iter()
                .enumerate()
                .filter(|(_, s)| **s)
                .map(|(i, _)| State::from_index(i, stg.num_atoms))
                .collect()
        })
        .collect()
}

/// The componentwise image of a subspace under the update functions: each
/// variable maps to the value its function is forced to on the subspace, or
/// stays free when both values remain reachable.
///
/// Each function has the subspace's fixed variables substituted in and the
/// constants folded; the residual is checked for semantic constancy over its
/// remaining free variables.
pub fn subspace_image(network: &BooleanNetwork, subspace: &Interp3) -> Result<Interp3> {
    if subspace.len() != network.num_variables() {
        return Err(Error::AtomCountMismatch {
            expected: network.num_variables(),
            found: subspace.len(),
        });
    }
    let bindings: BTreeMap<AtomId, bool> = subspace.fixed().collect();
    let open = Interp3::all_undec(network.num_variables());
    let values = network
        .functions()
        .iter()
        .map(|f| {
            f.substitute(&bindings)
                .fold_constants()
                .eval3(open.values())
        })
        .collect::<Result<Vec<Tri>>>()?;
    Ok(Interp3::new(values))
}

/// Whether the subspace is a trap space: every variable it fixes is forced
/// to that same value by [`subspace_image`]. Agrees with the direct
/// graph-closure definition under both update schemes.
pub fn is_trap_space(network: &BooleanNetwork, subspace: &Interp3) -> Result<bool> {
    let image = subspace_image(network, subspace)?;
    Ok(subspace.leq_info(&image))
}

/// The subspace order: `a <= b` when every state of `a` lies in `b`, i.e.
/// when `b`'s fixed variables are fixed identically by `a`.
pub fn subspace_leq(a: &Interp3, b: &Interp3) -> bool {
    b.fixed().all(|(atom, value)| a.get(atom) == Tri::from_bool(value))
}

/// Stable states: fixpoints of the synchronous update (identical under both
/// schemes), by a full state scan.
pub fn stable_states(network: &BooleanNetwork, budget: &Budget) -> Result<Vec<State>> {
    let n = network.num_variables();
    budget.check_state_scan(n)?;
    let mut out = Vec::new();
    for index in 0..(1usize << n) {
        let state = State::from_index(index, n);
        if synchronous_successor(network, &state)? == state {
            out.push(state);
        }
    }
    Ok(out)
}

/// Everything the trap-space analysis produces for one network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrapReport {
    pub scheme: UpdateScheme,
    /// Every trap space, the trivial all-free one included.
    pub trap_spaces: Vec<Interp3>,
    /// Trap spaces with no smaller trap space below them.
    pub minimal: Vec<Interp3>,
    /// Maximal elements among the non-trivial trap spaces.
    pub maximal: Vec<Interp3>,
    /// Attractors of the transition graph under `scheme`.
    pub attractors: Vec<Vec<State>>,
    /// Attraction basin of each attractor, index-parallel to `attractors`.
    pub basins: Vec<Vec<State>>,
    pub stable_states: Vec<State>,
}

/// Scans all 3^n subspaces for trap spaces and combines them with the
/// attractor analysis of the transition graph under `scheme`.
pub fn trap_spaces(
    network: &BooleanNetwork,
    scheme: UpdateScheme,
    budget: &Budget,
) -> Result<TrapReport> {
    let n = network.num_variables();
    budget.check_interpretation_scan(n)?;
    let mut traps = Vec::new();
    for subspace in scan_interpretations(n) {
        if is_trap_space(network, &subspace)? {
            traps.push(subspace);
        }
    }
    let minimal: Vec<Interp3> = traps
        .iter()
        .filter(|m| {
            !traps
                .iter()
                .any(|m2| *m2 != **m && subspace_leq(m2, m))
        })
        .cloned()
        .collect();
    let nontrivial: Vec<&Interp3> = traps
        .iter()
        .filter(|m| m.fixed().next().is_some())
        .collect();
    let maximal: Vec<Interp3> = nontrivial
        .iter()
        .filter(|m| {
            !nontrivial
                .iter()
                .any(|m2| **m2 != ***m && subspace_leq(m, m2))
        })
        .map(|m| (*m).clone())
        .collect();

    let stg = build_stg(network, scheme, budget)?;
    let attractors = attractors(&stg);
    let basins = basins(&stg, &attractors);
    let stable = stable_states(network, budget)?;

    debug_assert!(minimal.iter().all(|m| traps.contains(m)));
    debug_assert!(maximal.iter().all(|m| traps.contains(m)));
    debug_assert!(stable
        .iter()
        .all(|s| attractors.iter().any(|a| a.contains(s))));

    Ok(TrapReport {
        scheme,
        trap_spaces: traps,
        minimal,
        maximal,
        attractors,
        basins,
        stable_states: stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        four_variable_network, interp, negation_cycle, self_supporting, state, tautology_pair,
    };
    use crate::model::adf_to_bn;
    use crate::model::{AtomTable, BooleanNetwork};
    use crate::Formula;

    fn cycle_network() -> BooleanNetwork {
        adf_to_bn(&negation_cycle()).0
    }

    fn self_network() -> BooleanNetwork {
        adf_to_bn(&self_supporting()).0
    }

    fn taut_network() -> BooleanNetwork {
        adf_to_bn(&tautology_pair()).0
    }

    fn render_states(states: &[State]) -> Vec<String> {
        states.iter().map(State::to_string).collect()
    }

    #[test]
    fn synchronous_successor_of_the_negation_cycle() {
        let bn = cycle_network();
        let next = successors(&bn, &state("000"), UpdateScheme::Synchronous).unwrap();
        assert_eq!(render_states(&next), vec!["111"]);
    }

    #[test]
    fn fixpoints_loop_under_both_schemes() {
        let bn = four_variable_network();
        for scheme in [UpdateScheme::Synchronous, UpdateScheme::Asynchronous] {
            let next = successors(&bn, &state("0000"), scheme).unwrap();
            assert_eq!(render_states(&next), vec!["0000"], "{scheme}");
        }
    }

    #[test]
    fn asynchronous_steps_change_one_variable() {
        let bn = cycle_network();
        let next = successors(&bn, &state("000"), UpdateScheme::Asynchronous).unwrap();
        assert_eq!(render_states(&next), vec!["100", "010", "001"]);
    }

    #[test]
    fn generalized_async_extends_both_schemes() {
        let bn = cycle_network();
        let s = state("000");
        let general = generalized_async_successors(&bn, &s).unwrap();
        let sync = successors(&bn, &s, UpdateScheme::Synchronous).unwrap();
        let async_ = successors(&bn, &s, UpdateScheme::Asynchronous).unwrap();
        for t in sync.iter().chain(&async_) {
            assert!(general.contains(t));
        }
        // 2^3 subsets of three changing variables
        assert_eq!(general.len(), 8);
    }

    #[test]
    fn stg_of_the_negation_cycle_has_the_short_cycle() {
        let stg = build_stg(&cycle_network(), UpdateScheme::Synchronous, &Budget::default())
            .unwrap();
        assert_eq!(stg.successors_of(&state("000")), vec![state("111")]);
        assert_eq!(stg.successors_of(&state("111")), vec![state("000")]);
    }

    #[test]
    fn stg_over_zero_variables_is_a_self_loop() {
        let bn = BooleanNetwork::new(AtomTable::new(), Vec::new()).unwrap();
        let stg = build_stg(&bn, UpdateScheme::Synchronous, &Budget::default()).unwrap();
        assert_eq!(stg.num_states(), 1);
        assert_eq!(stg.successor_indices(0), &[0]);
    }

    #[test]
    fn trap_set_closure_checks() {
        let stg = build_stg(&cycle_network(), UpdateScheme::Synchronous, &Budget::default())
            .unwrap();
        let short: BTreeSet<State> = [state("000"), state("111")].into();
        assert!(stg.is_trap_set(&short).unwrap());
        let all: BTreeSet<State> = stg.states().collect();
        assert!(stg.is_trap_set(&all).unwrap());
        let leaky: BTreeSet<State> = [state("000")].into();
        assert!(!stg.is_trap_set(&leaky).unwrap());
    }

    #[test]
    fn negation_cycle_attractors_sync() {
        let stg = build_stg(&cycle_network(), UpdateScheme::Synchronous, &Budget::default())
            .unwrap();
        let att = attractors(&stg);
        assert_eq!(att.len(), 2);
        assert_eq!(render_states(&att[0]), vec!["000", "111"]);
        assert_eq!(
            render_states(&att[1]),
            vec!["001", "010", "011", "100", "101", "110"]
        );
    }

    #[test]
    fn negation_cycle_attractor_async() {
        let stg = build_stg(
            &cycle_network(),
            UpdateScheme::Asynchronous,
            &Budget::default(),
        )
        .unwrap();
        let att = attractors(&stg);
        assert_eq!(att.len(), 1);
        assert_eq!(
            render_states(&att[0]),
            vec!["001", "010", "011", "100", "101", "110"]
        );
    }

    #[test]
    fn single_input_variable_has_two_point_attractors() {
        let bn = self_network();
        let stg = build_stg(&bn, UpdateScheme::Synchronous, &Budget::default()).unwrap();
        let att = attractors(&stg);
        assert_eq!(att.len(), 2);
        assert_eq!(render_states(&att[0]), vec!["0"]);
        assert_eq!(render_states(&att[1]), vec!["1"]);
    }

    #[test]
    fn four_variable_network_attractors() {
        let bn = four_variable_network();
        let stg = build_stg(&bn, UpdateScheme::Synchronous, &Budget::default()).unwrap();
        let att = attractors(&stg);
        assert_eq!(att.len(), 2);
        assert_eq!(render_states(&att[0]), vec!["0000"]);
        assert_eq!(
            render_states(&att[1]),
            vec!["0011", "0101", "1011", "1101"]
        );
        // the attractor states split by the frozen input variable
        let basins = basins(&stg, &att);
        assert_eq!(basins[0].len(), 8);
        assert_eq!(basins[1].len(), 8);
    }

    #[test]
    fn subspace_image_keeps_dependent_variables_free() {
        // f_a = (a | b) & c, m = 0-1: the residual is b, so a stays free
        let atoms = AtomTable::from_names(["a", "b", "c"]);
        let f_a = Formula::And(vec![
            Formula::Or(vec![Formula::atom(0), Formula::atom(1)]),
            Formula::atom(2),
        ]);
        let bn =
            BooleanNetwork::new(atoms, vec![f_a, Formula::atom(1), Formula::atom(2)]).unwrap();
        let image = subspace_image(&bn, &interp("0-1")).unwrap();
        assert_eq!(image.render_subspace(), "--1");
    }

    #[test]
    fn subspace_image_of_a_full_state_is_the_successor() {
        let bn = four_variable_network();
        let m = interp("0101");
        let image = subspace_image(&bn, &m).unwrap();
        let next = synchronous_successor(&bn, &m.to_state().unwrap()).unwrap();
        assert_eq!(image, Interp3::from_state(&next));
    }

    #[test]
    fn subspace_image_detects_semantic_constants() {
        // f_a = a | !a is forced to 1 even with a free
        let bn = taut_network();
        let image = subspace_image(&bn, &interp("--")).unwrap();
        assert_eq!(image.render_subspace(), "1-");
    }

    #[test]
    fn trap_spaces_of_the_tautology_network() {
        // the formal definition certifies six trap spaces here
        let bn = taut_network();
        let report =
            trap_spaces(&bn, UpdateScheme::Synchronous, &Budget::default()).unwrap();
        let rendered: Vec<String> =
            report.trap_spaces.iter().map(Interp3::render_subspace).collect();
        assert_eq!(rendered, vec!["10", "11", "1-", "-0", "-1", "--"]);
        let minimal: Vec<String> = report.minimal.iter().map(Interp3::render_subspace).collect();
        assert_eq!(minimal, vec!["10", "11"]);
        let maximal: Vec<String> = report.maximal.iter().map(Interp3::render_subspace).collect();
        assert_eq!(maximal, vec!["1-", "-0", "-1"]);
    }

    #[test]
    fn trap_spaces_of_the_self_supporting_atom() {
        let report = trap_spaces(
            &self_network(),
            UpdateScheme::Synchronous,
            &Budget::default(),
        )
        .unwrap();
        let rendered: Vec<String> =
            report.trap_spaces.iter().map(Interp3::render_subspace).collect();
        assert_eq!(rendered, vec!["0", "1", "-"]);
        let minimal: Vec<String> = report.minimal.iter().map(Interp3::render_subspace).collect();
        assert_eq!(minimal, vec!["0", "1"]);
        assert!(!report.minimal.contains(&interp("-")));
    }

    #[test]
    fn single_fixed_variables_never_trap_the_negation_cycle() {
        let bn = cycle_network();
        for m in ["0--", "1--", "-0-", "-1-", "--0", "--1"] {
            assert!(!is_trap_space(&bn, &interp(m)).unwrap(), "{m}");
        }
        let report =
            trap_spaces(&bn, UpdateScheme::Synchronous, &Budget::default()).unwrap();
        assert!(report.stable_states.is_empty());
    }

    #[test]
    fn trap_spaces_of_the_empty_network() {
        let bn = BooleanNetwork::new(AtomTable::new(), Vec::new()).unwrap();
        let report =
            trap_spaces(&bn, UpdateScheme::Synchronous, &Budget::default()).unwrap();
        assert_eq!(report.trap_spaces, vec![Interp3::all_undec(0)]);
        assert!(report.maximal.is_empty());
    }

    #[test]
    fn image_criterion_matches_graph_closure_on_small_networks() {
        let budget = Budget::default();
        for bn in [taut_network(), cycle_network(), four_variable_network()] {
            for scheme in [UpdateScheme::Synchronous, UpdateScheme::Asynchronous] {
                let stg = build_stg(&bn, scheme, &budget).unwrap();
                for m in scan_interpretations(bn.num_variables()) {
                    let direct = stg
                        .is_trap_set(&m.completions(&budget).unwrap().into_iter().collect())
                        .unwrap();
                    assert_eq!(
                        is_trap_space(&bn, &m).unwrap(),
                        direct,
                        "{} under {}",
                        m.render_subspace(),
                        scheme
                    );
                }
            }
        }
    }

    #[test]
    fn subspace_order_examples() {
        assert!(subspace_leq(&interp("10"), &interp("1-")));
        assert!(subspace_leq(&interp("10"), &interp("--")));
        assert!(!subspace_leq(&interp("1-"), &interp("10")));
        assert!(!subspace_leq(&interp("0-"), &interp("1-")));
    }

    #[test]
    fn stable_states_agree_across_schemes() {
        for bn in [cycle_network(), four_variable_network(), taut_network()] {
            let stable = stable_states(&bn, &Budget::default()).unwrap();
            for scheme in [UpdateScheme::Synchronous, UpdateScheme::Asynchronous] {
                let stg = build_stg(&bn, scheme, &Budget::default()).unwrap();
                let fixpoints: Vec<State> = stg
                    .states()
                    .filter(|s| stg.successors_of(s) == vec![s.clone()])
                    .collect();
                assert_eq!(stable, fixpoints, "{scheme}");
            }
        }
    }
}
