//! Propositional formulas over atom indices.
//!
//! One formula type serves both model families: it is the acceptance
//! condition of an atom in an [`Adf`](crate::Adf) and the update function of
//! a variable in a [`BooleanNetwork`](crate::BooleanNetwork). Atoms are
//! referenced by index into the owning model's [`AtomTable`](crate::AtomTable);
//! a formula evaluated against an assignment that does not cover its atoms
//! fails with [`Error::ForeignAtom`].

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// Index of an atom in the owning model's atom table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomId(pub usize);

impl AtomId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A truth value of three-valued (Kleene) logic.
///
/// The derived order `False < True < Undec` matches the lexicographic order
/// of the rendered symbols `0 < 1 < u`, so sorted sets of interpretations
/// print in a stable order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tri {
    False,
    True,
    Undec,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Tri::False => Some(false),
            Tri::True => Some(true),
            Tri::Undec => None,
        }
    }

    pub fn is_undec(self) -> bool {
        self == Tri::Undec
    }

    /// The information order: `Undec` carries less information than either
    /// classical value, which are incomparable with each other.
    pub fn leq_info(self, other: Tri) -> bool {
        self == Tri::Undec || self == other
    }
}

/// Syntactic polarity of an atom occurrence, counted by negations (and
/// implication antecedents) above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Positive,
    Negative,
    /// Occurs under both an even and an odd flip count.
    Both,
    /// Does not occur in the formula.
    Absent,
}

/// Semantic polarity of an atom: how flipping it from 0 to 1 can move the
/// formula's value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemanticPolarity {
    /// Flipping the atom up never lowers the value (increasing monotone).
    Supporting,
    /// Flipping the atom up never raises the value (decreasing monotone).
    Attacking,
    /// The value never depends on the atom at all.
    Both,
    /// Some flip raises the value and some flip lowers it.
    Neither,
}

/// A propositional formula with n-ary conjunction and disjunction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(AtomId),
    True,
    False,
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    /// Material implication; eliminated by [`Formula::to_nnf`].
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(i: usize) -> Formula {
        Formula::Atom(AtomId(i))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    pub fn constant(b: bool) -> Formula {
        if b {
            Formula::True
        } else {
            Formula::False
        }
    }

    /// The free atoms of the formula, in index order.
    pub fn atoms(&self) -> BTreeSet<AtomId> {
        let mut acc = BTreeSet::new();
        self.collect_atoms(&mut acc);
        acc
    }

    fn collect_atoms(&self, acc: &mut BTreeSet<AtomId>) {
        match self {
            Formula::Atom(a) => {
                acc.insert(*a);
            }
            Formula::True | Formula::False => {}
            Formula::Not(x) => x.collect_atoms(acc),
            Formula::And(xs) | Formula::Or(xs) => {
                for x in xs {
                    x.collect_atoms(acc);
                }
            }
            Formula::Implies(l, r) => {
                l.collect_atoms(acc);
                r.collect_atoms(acc);
            }
        }
    }

    /// `Some(value)` when the formula is literally the constant `value`.
    pub fn as_constant(&self) -> Option<bool> {
        match self {
            Formula::True => Some(true),
            Formula::False => Some(false),
            _ => None,
        }
    }

    /// Classical two-valued evaluation under a total assignment, indexed by
    /// atom.
    pub fn eval2(&self, state: &[bool]) -> Result<bool> {
        match self {
            Formula::Atom(a) => state.get(a.index()).copied().ok_or(Error::ForeignAtom {
                index: a.index(),
                len: state.len(),
            }),
            Formula::True => Ok(true),
            Formula::False => Ok(false),
            Formula::Not(x) => Ok(!x.eval2(state)?),
            Formula::And(xs) => {
                for x in xs {
                    if !x.eval2(state)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Formula::Or(xs) => {
                for x in xs {
                    if x.eval2(state)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            Formula::Implies(l, r) => Ok(!l.eval2(state)? || r.eval2(state)?),
        }
    }

    /// Three-valued evaluation as the consensus over all two-valued
    /// completions of the assignment.
    ///
    /// Returns a classical value exactly when every completion of the
    /// undecided *free* atoms agrees on it, and [`Tri::Undec`] otherwise.
    /// Only the undecided atoms that actually occur in the formula are
    /// enumerated, so the cost is `2^k` evaluations where `k` is bounded by
    /// the formula's in-degree.
    pub fn eval3(&self, values: &[Tri]) -> Result<Tri> {
        let mut scratch: Vec<bool> = values.iter().map(|t| *t == Tri::True).collect();
        let mut open: Vec<usize> = Vec::new();
        for a in self.atoms() {
            match values.get(a.index()) {
                Some(Tri::Undec) => open.push(a.index()),
                Some(_) => {}
                None => {
                    return Err(Error::ForeignAtom {
                        index: a.index(),
                        len: values.len(),
                    })
                }
            }
        }
        let mut seen = [false, false];
        for mask in 0u64..(1u64 << open.len()) {
            for (bit, &idx) in open.iter().enumerate() {
                scratch[idx] = mask & (1 << bit) != 0;
            }
            seen[self.eval2(&scratch)? as usize] = true;
            if seen[0] && seen[1] {
                return Ok(Tri::Undec);
            }
        }
        Ok(Tri::from_bool(seen[1]))
    }

    /// Negation normal form: negations pushed onto atoms, implications
    /// eliminated, constants preserved.
    pub fn to_nnf(&self) -> Formula {
        self.nnf(false)
    }

    fn nnf(&self, negated: bool) -> Formula {
        match self {
            Formula::Atom(a) => {
                if negated {
                    Formula::not(Formula::Atom(*a))
                } else {
                    Formula::Atom(*a)
                }
            }
            Formula::True => Formula::constant(!negated),
            Formula::False => Formula::constant(negated),
            Formula::Not(x) => x.nnf(!negated),
            Formula::And(xs) => {
                let children = xs.iter().map(|x| x.nnf(negated)).collect();
                if negated {
                    Formula::Or(children)
                } else {
                    Formula::And(children)
                }
            }
            Formula::Or(xs) => {
                let children = xs.iter().map(|x| x.nnf(negated)).collect();
                if negated {
                    Formula::And(children)
                } else {
                    Formula::Or(children)
                }
            }
            Formula::Implies(l, r) => {
                if negated {
                    Formula::And(vec![l.nnf(false), r.nnf(true)])
                } else {
                    Formula::Or(vec![l.nnf(true), r.nnf(false)])
                }
            }
        }
    }

    /// Rewrites every atom reference through `rename` (used when a formula
    /// moves to a model with a different atom table).
    pub fn map_atoms(&self, rename: &impl Fn(AtomId) -> AtomId) -> Formula {
        match self {
            Formula::Atom(a) => Formula::Atom(rename(*a)),
            Formula::True => Formula::True,
            Formula::False => Formula::False,
            Formula::Not(x) => Formula::not(x.map_atoms(rename)),
            Formula::And(xs) => Formula::And(xs.iter().map(|x| x.map_atoms(rename)).collect()),
            Formula::Or(xs) => Formula::Or(xs.iter().map(|x| x.map_atoms(rename)).collect()),
            Formula::Implies(l, r) => {
                Formula::implies(l.map_atoms(rename), r.map_atoms(rename))
            }
        }
    }

    /// Replaces every bound atom by its constant. No simplification happens
    /// here; pair with [`Formula::fold_constants`] when a normal form is
    /// wanted.
    pub fn substitute(&self, bindings: &BTreeMap<AtomId, bool>) -> Formula {
        match self {
            Formula::Atom(a) => match bindings.get(a) {
                Some(&b) => Formula::constant(b),
                None => Formula::Atom(*a),
            },
            Formula::True => Formula::True,
            Formula::False => Formula::False,
            Formula::Not(x) => Formula::not(x.substitute(bindings)),
            Formula::And(xs) => Formula::And(xs.iter().map(|x| x.substitute(bindings)).collect()),
            Formula::Or(xs) => Formula::Or(xs.iter().map(|x| x.substitute(bindings)).collect()),
            Formula::Implies(l, r) => {
                Formula::implies(l.substitute(bindings), r.substitute(bindings))
            }
        }
    }

    /// Constant folding: eliminates `True`/`False` subterms. The result
    /// contains no constant unless it is itself one.
    pub fn fold_constants(&self) -> Formula {
        match self {
            Formula::Atom(a) => Formula::Atom(*a),
            Formula::True => Formula::True,
            Formula::False => Formula::False,
            Formula::Not(x) => match x.fold_constants() {
                Formula::True => Formula::False,
                Formula::False => Formula::True,
                other => Formula::not(other),
            },
            Formula::And(xs) => {
                let mut kept = Vec::new();
                for x in xs {
                    match x.fold_constants() {
                        Formula::False => return Formula::False,
                        Formula::True => {}
                        other => kept.push(other),
                    }
                }
                match kept.len() {
                    0 => Formula::True,
                    1 => kept.pop().unwrap(),
                    _ => Formula::And(kept),
                }
            }
            Formula::Or(xs) => {
                let mut kept = Vec::new();
                for x in xs {
                    match x.fold_constants() {
                        Formula::True => return Formula::True,
                        Formula::False => {}
                        other => kept.push(other),
                    }
                }
                match kept.len() {
                    0 => Formula::False,
                    1 => kept.pop().unwrap(),
                    _ => Formula::Or(kept),
                }
            }
            Formula::Implies(l, r) => match (l.fold_constants(), r.fold_constants()) {
                (Formula::False, _) => Formula::True,
                (_, Formula::True) => Formula::True,
                (Formula::True, r) => r,
                (l, Formula::False) => Formula::not(l),
                (l, r) => Formula::implies(l, r),
            },
        }
    }

    /// Syntactic polarity of every occurring atom. Atoms under an even
    /// number of flips (negations and implication antecedents) count as
    /// positive, odd as negative, mixed as [`Polarity::Both`].
    pub fn syntactic_polarities(&self) -> BTreeMap<AtomId, Polarity> {
        let mut acc = BTreeMap::new();
        self.collect_polarities(false, &mut acc);
        acc
    }

    /// Syntactic polarity of a single atom, [`Polarity::Absent`] when it does
    /// not occur.
    pub fn polarity_of(&self, atom: AtomId) -> Polarity {
        self.syntactic_polarities()
            .get(&atom)
            .copied()
            .unwrap_or(Polarity::Absent)
    }

    fn collect_polarities(&self, odd: bool, acc: &mut BTreeMap<AtomId, Polarity>) {
        match self {
            Formula::Atom(a) => {
                let here = if odd {
                    Polarity::Negative
                } else {
                    Polarity::Positive
                };
                acc.entry(*a)
                    .and_modify(|p| {
                        if *p != here {
                            *p = Polarity::Both;
                        }
                    })
                    .or_insert(here);
            }
            Formula::True | Formula::False => {}
            Formula::Not(x) => x.collect_polarities(!odd, acc),
            Formula::And(xs) | Formula::Or(xs) => {
                for x in xs {
                    x.collect_polarities(odd, acc);
                }
            }
            Formula::Implies(l, r) => {
                l.collect_polarities(!odd, acc);
                r.collect_polarities(odd, acc);
            }
        }
    }

    /// Semantic polarity of `atom`, decided by brute force over all
    /// assignments of the formula's other free atoms.
    ///
    /// An atom that does not occur is vacuously [`SemanticPolarity::Both`].
    pub fn semantic_polarity(&self, atom: AtomId) -> SemanticPolarity {
        let free = self.atoms();
        if !free.contains(&atom) {
            return SemanticPolarity::Both;
        }
        let others: Vec<usize> = free
            .iter()
            .filter(|a| **a != atom)
            .map(|a| a.index())
            .collect();
        let width = free.iter().map(|a| a.index()).max().unwrap() + 1;
        let mut scratch = vec![false; width];
        let mut raises = false;
        let mut lowers = false;
        for mask in 0u64..(1u64 << others.len()) {
            for (bit, &idx) in others.iter().enumerate() {
                scratch[idx] = mask & (1 << bit) != 0;
            }
            scratch[atom.index()] = false;
            let low = self.eval2(&scratch).expect("scratch covers all atoms");
            scratch[atom.index()] = true;
            let high = self.eval2(&scratch).expect("scratch covers all atoms");
            raises |= !low && high;
            lowers |= low && !high;
            if raises && lowers {
                return SemanticPolarity::Neither;
            }
        }
        match (raises, lowers) {
            (false, false) => SemanticPolarity::Both,
            (true, false) => SemanticPolarity::Supporting,
            (false, true) => SemanticPolarity::Attacking,
            (true, true) => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Formula {
        Formula::atom(0)
    }
    fn b() -> Formula {
        Formula::atom(1)
    }

    // C_v of the travel framework: not t and p, with p at index 0 and t at 1.
    fn not_t_and_p() -> Formula {
        Formula::And(vec![Formula::not(Formula::atom(1)), Formula::atom(0)])
    }

    #[test]
    fn eval2_travel_condition() {
        // p=1, t=0
        assert_eq!(not_t_and_p().eval2(&[true, false]).unwrap(), true);
        // p=1, t=1
        assert_eq!(not_t_and_p().eval2(&[true, true]).unwrap(), false);
    }

    #[test]
    fn eval2_tautology() {
        let taut = Formula::Or(vec![a(), Formula::not(a())]);
        assert!(taut.eval2(&[false]).unwrap());
        assert!(taut.eval2(&[true]).unwrap());
    }

    #[test]
    fn eval2_single_negation() {
        // not c over three atoms, c at index 2
        let f = Formula::not(Formula::atom(2));
        assert_eq!(f.eval2(&[false, false, false]).unwrap(), true);
    }

    #[test]
    fn eval2_foreign_atom() {
        let err = Formula::atom(3).eval2(&[false]).unwrap_err();
        assert_eq!(err, Error::ForeignAtom { index: 3, len: 1 });
    }

    #[test]
    fn eval3_constant_under_all_completions() {
        let taut = Formula::Or(vec![a(), Formula::not(a())]);
        assert_eq!(taut.eval3(&[Tri::Undec]).unwrap(), Tri::True);
    }

    #[test]
    fn eval3_depends_on_open_atom() {
        // p=1, t=u: completions disagree
        assert_eq!(
            not_t_and_p().eval3(&[Tri::True, Tri::Undec]).unwrap(),
            Tri::Undec
        );
        // p=0, t=u: both completions are 0
        assert_eq!(
            not_t_and_p().eval3(&[Tri::False, Tri::Undec]).unwrap(),
            Tri::False
        );
    }

    #[test]
    fn eval3_ignores_unrelated_undecided_atoms() {
        // b is undecided but does not occur
        let f = a();
        assert_eq!(f.eval3(&[Tri::True, Tri::Undec]).unwrap(), Tri::True);
    }

    #[test]
    fn nnf_de_morgan() {
        let f = Formula::not(Formula::And(vec![a(), Formula::not(b())]));
        assert_eq!(f.to_nnf(), Formula::Or(vec![Formula::not(a()), b()]));
    }

    #[test]
    fn nnf_eliminates_implication() {
        let f = Formula::implies(a(), b());
        assert_eq!(f.to_nnf(), Formula::Or(vec![Formula::not(a()), b()]));
    }

    #[test]
    fn nnf_fixes_nnf_input() {
        let f = not_t_and_p();
        assert_eq!(f.to_nnf(), f);
    }

    #[test]
    fn nnf_preserves_truth() {
        // exhaustive over 3 atoms for a nested formula
        let f = Formula::not(Formula::Implies(
            Box::new(Formula::Or(vec![a(), Formula::not(b())])),
            Box::new(Formula::And(vec![Formula::atom(2), Formula::not(a())])),
        ));
        let g = f.to_nnf();
        for mask in 0..8u32 {
            let state = [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0];
            assert_eq!(f.eval2(&state).unwrap(), g.eval2(&state).unwrap());
        }
    }

    #[test]
    fn syntactic_polarity_negated_conjunction() {
        let f = Formula::not(Formula::And(vec![a(), Formula::not(b())]));
        let pol = f.syntactic_polarities();
        assert_eq!(pol[&AtomId(0)], Polarity::Negative);
        assert_eq!(pol[&AtomId(1)], Polarity::Positive);
    }

    #[test]
    fn syntactic_polarity_mixed() {
        let f = Formula::Or(vec![a(), Formula::not(a())]);
        assert_eq!(f.polarity_of(AtomId(0)), Polarity::Both);
        assert_eq!(f.polarity_of(AtomId(1)), Polarity::Absent);
    }

    #[test]
    fn syntactic_polarity_implication_antecedent_flips() {
        let f = Formula::implies(a(), b());
        assert_eq!(f.polarity_of(AtomId(0)), Polarity::Negative);
        assert_eq!(f.polarity_of(AtomId(1)), Polarity::Positive);
        // agrees with the semantic reading
        assert_eq!(f.semantic_polarity(AtomId(0)), SemanticPolarity::Attacking);
        assert_eq!(f.semantic_polarity(AtomId(1)), SemanticPolarity::Supporting);
    }

    #[test]
    fn semantic_polarity_attacker() {
        // t attacks in (not t and p); t is at index 1
        assert_eq!(
            not_t_and_p().semantic_polarity(AtomId(1)),
            SemanticPolarity::Attacking
        );
    }

    #[test]
    fn semantic_polarity_redundant_atom() {
        let contradiction = Formula::And(vec![a(), Formula::not(a())]);
        assert_eq!(
            contradiction.semantic_polarity(AtomId(0)),
            SemanticPolarity::Both
        );
    }

    #[test]
    fn semantic_polarity_xor_is_neither() {
        let xor = Formula::Or(vec![
            Formula::And(vec![a(), Formula::not(b())]),
            Formula::And(vec![Formula::not(a()), b()]),
        ]);
        assert_eq!(xor.semantic_polarity(AtomId(0)), SemanticPolarity::Neither);
    }

    #[test]
    fn substitute_keeps_structure() {
        let f = not_t_and_p();
        let mut bind = BTreeMap::new();
        bind.insert(AtomId(1), false);
        assert_eq!(
            f.substitute(&bind),
            Formula::And(vec![Formula::not(Formula::False), Formula::atom(0)])
        );
    }

    #[test]
    fn substitute_worked_example() {
        // (a or b) and c with a := 0, b := 1
        let f = Formula::And(vec![Formula::Or(vec![a(), b()]), Formula::atom(2)]);
        let mut bind = BTreeMap::new();
        bind.insert(AtomId(0), false);
        bind.insert(AtomId(1), true);
        let sub = f.substitute(&bind);
        assert_eq!(
            sub,
            Formula::And(vec![
                Formula::Or(vec![Formula::False, Formula::True]),
                Formula::atom(2)
            ])
        );
        // and folding the result leaves just c
        assert_eq!(sub.fold_constants(), Formula::atom(2));
    }

    #[test]
    fn substitute_empty_bindings_is_identity() {
        let f = not_t_and_p();
        assert_eq!(f.substitute(&BTreeMap::new()), f);
    }

    #[test]
    fn fold_constants_reaches_fixpoints() {
        let f = Formula::implies(Formula::True, Formula::False);
        assert_eq!(f.fold_constants(), Formula::False);
        let g = Formula::Or(vec![Formula::False, Formula::not(Formula::False)]);
        assert_eq!(g.fold_constants(), Formula::True);
    }

    #[test]
    fn eval3_definite_matches_every_completion() {
        let f = Formula::Or(vec![a(), Formula::And(vec![b(), Formula::atom(2)])]);
        let nu = [Tri::True, Tri::Undec, Tri::Undec];
        assert_eq!(f.eval3(&nu).unwrap(), Tri::True);
        for mask in 0..4u32 {
            let state = [true, mask & 1 != 0, mask & 2 != 0];
            assert!(f.eval2(&state).unwrap());
        }
    }
}
