//! Three-valued interpretations, the consensus (Gamma) operator, the reduct,
//! and exhaustive enumeration of the six framework semantics.
//!
//! Everything here is exact: two-valued models come from a scan over all 2^n
//! states, admissible and complete interpretations from a scan over all 3^n
//! interpretations, preferred and grounded from order comparisons on those
//! sets. The grounded interpretation additionally has a fast path that
//! iterates the consensus operator from the all-undecided interpretation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{AtomId, Formula, Tri};
use crate::model::{Adf, AtomTable};
use crate::Budget;

/// A total two-valued assignment: one bit per atom, in atom order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State(Vec<bool>);

impl State {
    pub fn new(values: Vec<bool>) -> State {
        State(values)
    }

    /// Decodes a state from its index, with atom 0 as the most significant
    /// bit so that ascending indices agree with the lexicographic order of
    /// the rendered bit strings.
    pub fn from_index(index: usize, num_atoms: usize) -> State {
        State(
            (0..num_atoms)
                .map(|i| index >> (num_atoms - 1 - i) & 1 == 1)
                .collect(),
        )
    }

    pub fn to_index(&self) -> usize {
        self.0
            .iter()
            .fold(0, |acc, &b| (acc << 1) | usize::from(b))
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, atom: AtomId) -> bool {
        self.0[atom.index()]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses a bit string such as `1010`.
    pub fn parse(text: &str) -> Option<State> {
        text.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<bool>>>()
            .map(State)
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A total three-valued interpretation; doubles as a subspace, with
/// [`Tri::Undec`] read as the free (star) value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interp3(Vec<Tri>);

impl Interp3 {
    pub fn new(values: Vec<Tri>) -> Interp3 {
        Interp3(values)
    }

    pub fn all_undec(num_atoms: usize) -> Interp3 {
        Interp3(vec![Tri::Undec; num_atoms])
    }

    pub fn from_state(state: &State) -> Interp3 {
        Interp3(state.values().iter().map(|&b| Tri::from_bool(b)).collect())
    }

    pub fn values(&self) -> &[Tri] {
        &self.0
    }

    pub fn get(&self, atom: AtomId) -> Tri {
        self.0[atom.index()]
    }

    pub fn set(&mut self, atom: AtomId, value: Tri) {
        self.0[atom.index()] = value;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_undec(&self) -> usize {
        self.0.iter().filter(|t| t.is_undec()).count()
    }

    /// The fixed atoms (non-undecided positions) with their values.
    pub fn fixed(&self) -> impl Iterator<Item = (AtomId, bool)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, t)| t.as_bool().map(|b| (AtomId(i), b)))
    }

    pub fn is_two_valued(&self) -> bool {
        self.0.iter().all(|t| !t.is_undec())
    }

    pub fn to_state(&self) -> Option<State> {
        self.0
            .iter()
            .map(|t| t.as_bool())
            .collect::<Option<Vec<bool>>>()
            .map(State)
    }

    /// Pointwise information order: `self` is below `other` when every atom
    /// decided by `self` is decided identically by `other`.
    pub fn leq_info(&self, other: &Interp3) -> bool {
        assert_eq!(self.0.len(), other.0.len(), "interpretations over different atom sets");
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| a.leq_info(*b))
    }

    /// All two-valued extensions, i.e. the states of the corresponding
    /// subspace. Guarded by the state-scan budget on the number of
    /// undecided atoms.
    pub fn completions(&self, budget: &Budget) -> Result<Vec<State>> {
        let open: Vec<usize> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_undec())
            .map(|(i, _)| i)
            .collect();
        budget.check_state_scan(open.len())?;
        let base: Vec<bool> = self.0.iter().map(|t| *t == Tri::True).collect();
        let mut out = Vec::with_capacity(1 << open.len());
        for mask in 0..(1usize << open.len()) {
            let mut values = base.clone();
            // highest open position varies slowest, keeping the output sorted
            for (bit, &idx) in open.iter().rev().enumerate() {
                values[idx] = mask >> bit & 1 == 1;
            }
            out.push(State(values));
        }
        Ok(out)
    }

    /// Renders with `u` for the undecided value (framework style).
    pub fn render_adf(&self) -> String {
        self.render_with('u')
    }

    /// Renders with `-` for the free value (subspace style).
    pub fn render_subspace(&self) -> String {
        self.render_with('-')
    }

    fn render_with(&self, undec: char) -> String {
        self.0
            .iter()
            .map(|t| match t {
                Tri::False => '0',
                Tri::True => '1',
                Tri::Undec => undec,
            })
            .collect()
    }

    /// Parses a string over `0`, `1` and `u`/`-` (both accepted).
    pub fn parse(text: &str) -> Option<Interp3> {
        text.chars()
            .map(|c| match c {
                '0' => Some(Tri::False),
                '1' => Some(Tri::True),
                'u' | '-' => Some(Tri::Undec),
                _ => None,
            })
            .collect::<Option<Vec<Tri>>>()
            .map(Interp3)
    }
}

/// The six semantics of a framework.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    TwoValued,
    Admissible,
    Complete,
    Preferred,
    Grounded,
    Stable,
}

impl Semantics {
    pub const ALL: [Semantics; 6] = [
        Semantics::TwoValued,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Preferred,
        Semantics::Grounded,
        Semantics::Stable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Semantics::TwoValued => "two-valued",
            Semantics::Admissible => "admissible",
            Semantics::Complete => "complete",
            Semantics::Preferred => "preferred",
            Semantics::Grounded => "grounded",
            Semantics::Stable => "stable",
        }
    }
}

/// Applies the consensus operator: every atom receives the three-valued
/// value of its condition under `nu`.
pub fn gamma(adf: &Adf, nu: &Interp3) -> Result<Interp3> {
    if nu.len() != adf.num_atoms() {
        return Err(Error::AtomCountMismatch {
            expected: adf.num_atoms(),
            found: nu.len(),
        });
    }
    let values = adf
        .conditions()
        .iter()
        .map(|c| c.eval3(nu.values()))
        .collect::<Result<Vec<Tri>>>()?;
    Ok(Interp3(values))
}

/// The grounded interpretation, computed by iterating the consensus operator
/// from the all-undecided interpretation to its least fixpoint.
///
/// The operator is monotone in the information order, so the iteration
/// reaches the fixpoint in at most `n` steps.
pub fn grounded(adf: &Adf) -> Interp3 {
    let mut current = Interp3::all_undec(adf.num_atoms());
    loop {
        let next = gamma(adf, &current).expect("interpretation covers the framework");
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Whether `omega` satisfies every acceptance condition exactly where its
/// atom is accepted.
pub fn is_two_valued_model(adf: &Adf, omega: &State) -> Result<bool> {
    if omega.len() != adf.num_atoms() {
        return Err(Error::AtomCountMismatch {
            expected: adf.num_atoms(),
            found: omega.len(),
        });
    }
    for (i, cond) in adf.conditions().iter().enumerate() {
        if omega.get(AtomId(i)) != cond.eval2(omega.values())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All two-valued models, by scanning the full state space.
pub fn two_valued_models(adf: &Adf, budget: &Budget) -> Result<Vec<State>> {
    let n = adf.num_atoms();
    budget.check_state_scan(n)?;
    let mut out = Vec::new();
    for index in 0..(1usize << n) {
        let state = State::from_index(index, n);
        if is_two_valued_model(adf, &state)? {
            out.push(state);
        }
    }
    Ok(out)
}

/// The reduct of a framework at a two-valued model: atoms restricted to the
/// accepted ones, rejected atoms substituted by the constant false.
pub fn reduct(adf: &Adf, omega: &State) -> Result<Adf> {
    if !is_two_valued_model(adf, omega)? {
        return Err(Error::NotATwoValuedModel);
    }
    let mut remap: BTreeMap<AtomId, AtomId> = BTreeMap::new();
    let mut names = Vec::new();
    let mut bindings = BTreeMap::new();
    for (atom, name) in adf.atoms().iter() {
        if omega.get(atom) {
            remap.insert(atom, AtomId(names.len()));
            names.push(name.to_string());
        } else {
            bindings.insert(atom, false);
        }
    }
    let rename = |a: AtomId| remap[&a];
    let conditions: Vec<Formula> = adf
        .atoms()
        .ids()
        .filter(|a| omega.get(*a))
        .map(|a| adf.condition(a).substitute(&bindings).map_atoms(&rename))
        .collect();
    let links = adf
        .links()
        .iter()
        .filter(|(u, v)| omega.get(*u) && omega.get(*v))
        .map(|(u, v)| (remap[u], remap[v]))
        .collect();
    Adf::with_links(AtomTable::from_names(names), conditions, links)
}

/// Whether `omega` is a stable model: a two-valued model whose reduct's
/// grounded interpretation accepts every remaining atom.
pub fn is_stable(adf: &Adf, omega: &State) -> Result<bool> {
    if !is_two_valued_model(adf, omega)? {
        return Ok(false);
    }
    let reduced = reduct(adf, omega)?;
    let w = grounded(&reduced);
    Ok(w.values().iter().all(|t| *t == Tri::True))
}

/// Iterates all 3^n interpretations in lexicographic order of their value
/// vectors (atom 0 as the most significant digit).
pub(crate) fn scan_interpretations(n: usize) -> impl Iterator<Item = Interp3> {
    let total: usize = 3usize.pow(n as u32);
    const DIGITS: [Tri; 3] = [Tri::False, Tri::True, Tri::Undec];
    (0..total).map(move |code| {
        let mut values = vec![Tri::Undec; n];
        let mut rest = code;
        for slot in values.iter_mut().rev() {
            *slot = DIGITS[rest % 3];
            rest /= 3;
        }
        Interp3(values)
    })
}

/// Enumerates the full, sorted set of interpretations of the requested
/// semantics.
///
/// Two-valued and stable enumeration scan 2^n states; admissible, complete
/// and preferred scan 3^n interpretations; grounded uses the fixpoint
/// iteration and needs no scan budget.
pub fn enumerate(adf: &Adf, semantics: Semantics, budget: &Budget) -> Result<Vec<Interp3>> {
    let n = adf.num_atoms();
    match semantics {
        Semantics::TwoValued => Ok(two_valued_models(adf, budget)?
            .iter()
            .map(Interp3::from_state)
            .collect()),
        Semantics::Stable => {
            let mut out = Vec::new();
            for state in two_valued_models(adf, budget)? {
                if is_stable(adf, &state)? {
                    out.push(Interp3::from_state(&state));
                }
            }
            Ok(out)
        }
        Semantics::Admissible => {
            budget.check_interpretation_scan(n)?;
            let mut out = Vec::new();
            for nu in scan_interpretations(n) {
                if nu.leq_info(&gamma(adf, &nu)?) {
                    out.push(nu);
                }
            }
            Ok(out)
        }
        Semantics::Complete => {
            budget.check_interpretation_scan(n)?;
            let mut out = Vec::new();
            for nu in scan_interpretations(n) {
                if gamma(adf, &nu)? == nu {
                    out.push(nu);
                }
            }
            Ok(out)
        }
        Semantics::Preferred => {
            let admissible = enumerate(adf, Semantics::Admissible, budget)?;
            Ok(maximal_by_information(&admissible))
        }
        Semantics::Grounded => Ok(vec![grounded(adf)]),
    }
}

/// The information-maximal elements of a set, by pairwise comparison.
fn maximal_by_information(set: &[Interp3]) -> Vec<Interp3> {
    set.iter()
        .filter(|nu| {
            !set.iter()
                .any(|other| *nu != other && nu.leq_info(other))
        })
        .cloned()
        .collect()
}
