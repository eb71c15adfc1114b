//! The two syntactic faces of one model: abstract dialectical frameworks and
//! Boolean networks, plus the conversion bridge and subclass classification.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{AtomId, Formula, Polarity, SemanticPolarity};

/// Ordered atom (variable) names. The order is the declaration order of the
/// source document; every state and interpretation string follows it.
#[derive(Clone, Debug, Default)]
pub struct AtomTable {
    names: Vec<String>,
    lookup: HashMap<String, AtomId>,
}

impl AtomTable {
    pub fn new() -> AtomTable {
        AtomTable::default()
    }

    /// Builds a table from names, panicking on duplicates (programmatic use;
    /// parsers report duplicates as positioned errors instead).
    pub fn from_names<I, S>(names: I) -> AtomTable
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut table = AtomTable::new();
        for name in names {
            let name = name.into();
            assert!(
                table.push(&name).is_some(),
                "duplicate atom name `{name}`"
            );
        }
        table
    }

    /// Appends a name, returning `None` when it is already present.
    pub fn push(&mut self, name: &str) -> Option<AtomId> {
        if self.lookup.contains_key(name) {
            return None;
        }
        let id = AtomId(self.names.len());
        self.names.push(name.to_string());
        self.lookup.insert(name.to_string(), id);
        Some(id)
    }

    pub fn id(&self, name: &str) -> Option<AtomId> {
        self.lookup.get(name).copied()
    }

    pub fn name(&self, atom: AtomId) -> &str {
        &self.names[atom.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (AtomId, &str)> {
        self.names
            .iter()
            .enumerate()
            .map(|(i, n)| (AtomId(i), n.as_str()))
    }

    pub fn ids(&self) -> impl Iterator<Item = AtomId> {
        (0..self.names.len()).map(AtomId)
    }
}

impl PartialEq for AtomTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for AtomTable {}

/// An abstract dialectical framework: atoms, links, and one acceptance
/// condition per atom over its parents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adf {
    atoms: AtomTable,
    conditions: Vec<Formula>,
    links: BTreeSet<(AtomId, AtomId)>,
}

impl Adf {
    /// Builds a framework whose links are exactly the dependencies of the
    /// conditions (reflexive links included).
    pub fn new(atoms: AtomTable, conditions: Vec<Formula>) -> Result<Adf> {
        let links = inferred_links(&conditions);
        Adf::with_links(atoms, conditions, links)
    }

    /// Builds a framework with an explicit link set, which must cover every
    /// dependency; links without an occurrence in the target's condition are
    /// retained as vacuous links.
    pub fn with_links(
        atoms: AtomTable,
        conditions: Vec<Formula>,
        links: BTreeSet<(AtomId, AtomId)>,
    ) -> Result<Adf> {
        if atoms.len() != conditions.len() {
            return Err(Error::AtomCountMismatch {
                expected: atoms.len(),
                found: conditions.len(),
            });
        }
        for &(u, v) in &links {
            if u.index() >= atoms.len() || v.index() >= atoms.len() {
                return Err(Error::DanglingLink {
                    from: link_name(&atoms, u),
                    to: link_name(&atoms, v),
                });
            }
        }
        for (i, cond) in conditions.iter().enumerate() {
            let target = AtomId(i);
            for parent in cond.atoms() {
                if parent.index() >= atoms.len() {
                    return Err(Error::ForeignAtom {
                        index: parent.index(),
                        len: atoms.len(),
                    });
                }
                if !links.contains(&(parent, target)) {
                    return Err(Error::MissingLink {
                        atom: atoms.name(target).to_string(),
                        parent: atoms.name(parent).to_string(),
                    });
                }
            }
        }
        Ok(Adf {
            atoms,
            conditions,
            links,
        })
    }

    pub fn atoms(&self) -> &AtomTable {
        &self.atoms
    }

    pub fn num_atoms(&self) -> usize {
        self.atoms.len()
    }

    pub fn condition(&self, atom: AtomId) -> &Formula {
        &self.conditions[atom.index()]
    }

    pub fn conditions(&self) -> &[Formula] {
        &self.conditions
    }

    pub fn links(&self) -> &BTreeSet<(AtomId, AtomId)> {
        &self.links
    }

    /// The parents of `atom`: sources of its incoming links.
    pub fn parents(&self, atom: AtomId) -> Vec<AtomId> {
        self.links
            .iter()
            .filter(|(_, v)| *v == atom)
            .map(|(u, _)| *u)
            .collect()
    }

    /// Links whose source does not occur in the target's condition. They
    /// never influence any semantics.
    pub fn vacuous_links(&self) -> Vec<(AtomId, AtomId)> {
        self.links
            .iter()
            .filter(|(u, v)| !self.conditions[v.index()].atoms().contains(u))
            .copied()
            .collect()
    }
}

fn link_name(atoms: &AtomTable, atom: AtomId) -> String {
    if atom.index() < atoms.len() {
        atoms.name(atom).to_string()
    } else {
        format!("#{}", atom.index())
    }
}

fn inferred_links(conditions: &[Formula]) -> BTreeSet<(AtomId, AtomId)> {
    let mut links = BTreeSet::new();
    for (i, cond) in conditions.iter().enumerate() {
        for parent in cond.atoms() {
            links.insert((parent, AtomId(i)));
        }
    }
    links
}

/// Sign of a regulatory interaction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A Boolean logical model together with its signed regulatory graph.
///
/// The graph is derived from the update functions: an atom occurring
/// positively in the negation normal form of `f_v` contributes an activating
/// edge into `v`, a negative occurrence an inhibiting one, and a mixed
/// occurrence both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanNetwork {
    variables: AtomTable,
    functions: Vec<Formula>,
    edges: BTreeSet<(AtomId, AtomId, Sign)>,
}

impl BooleanNetwork {
    pub fn new(variables: AtomTable, functions: Vec<Formula>) -> Result<BooleanNetwork> {
        if variables.len() != functions.len() {
            return Err(Error::AtomCountMismatch {
                expected: variables.len(),
                found: functions.len(),
            });
        }
        let mut edges = BTreeSet::new();
        for (i, f) in functions.iter().enumerate() {
            let target = AtomId(i);
            for (parent, polarity) in f.to_nnf().syntactic_polarities() {
                if parent.index() >= variables.len() {
                    return Err(Error::ForeignAtom {
                        index: parent.index(),
                        len: variables.len(),
                    });
                }
                match polarity {
                    Polarity::Positive => {
                        edges.insert((parent, target, Sign::Plus));
                    }
                    Polarity::Negative => {
                        edges.insert((parent, target, Sign::Minus));
                    }
                    Polarity::Both => {
                        edges.insert((parent, target, Sign::Plus));
                        edges.insert((parent, target, Sign::Minus));
                    }
                    Polarity::Absent => unreachable!("polarity map only covers occurring atoms"),
                }
            }
        }
        Ok(BooleanNetwork {
            variables,
            functions,
            edges,
        })
    }

    pub fn variables(&self) -> &AtomTable {
        &self.variables
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn function(&self, var: AtomId) -> &Formula {
        &self.functions[var.index()]
    }

    pub fn functions(&self) -> &[Formula] {
        &self.functions
    }

    pub fn edges(&self) -> &BTreeSet<(AtomId, AtomId, Sign)> {
        &self.edges
    }

    /// The unsigned regulatory graph.
    pub fn unsigned_edges(&self) -> BTreeSet<(AtomId, AtomId)> {
        self.edges.iter().map(|&(u, v, _)| (u, v)).collect()
    }

    /// Input nodes: variables whose function is the variable itself.
    pub fn inputs(&self) -> Vec<AtomId> {
        self.variables
            .ids()
            .filter(|v| self.functions[v.index()] == Formula::Atom(*v))
            .collect()
    }
}

/// Converts a Boolean network into the framework with the same conditions
/// and the unsigned edge set as links.
pub fn bn_to_adf(network: &BooleanNetwork) -> Adf {
    Adf::with_links(
        network.variables.clone(),
        network.functions.clone(),
        network.unsigned_edges(),
    )
    .expect("network dependencies are covered by its own edges")
}

/// A mixed-polarity occurrence found while deriving signed edges: the parent
/// contributes both an activating and an inhibiting edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedPolarity {
    pub parent: AtomId,
    pub target: AtomId,
}

/// Converts a framework into a Boolean network by normalising every
/// condition to NNF and reading signed edges off the occurrence polarities.
///
/// Atoms occurring with both polarities yield both edges and a warning.
pub fn adf_to_bn(adf: &Adf) -> (BooleanNetwork, Vec<MixedPolarity>) {
    let functions: Vec<Formula> = adf.conditions().iter().map(Formula::to_nnf).collect();
    let mut warnings = Vec::new();
    for (i, f) in functions.iter().enumerate() {
        for (parent, polarity) in f.syntactic_polarities() {
            if polarity == Polarity::Both {
                warnings.push(MixedPolarity {
                    parent,
                    target: AtomId(i),
                });
            }
        }
    }
    let network = BooleanNetwork::new(adf.atoms().clone(), functions)
        .expect("conditions only reference atoms of the framework");
    (network, warnings)
}

/// Result of classifying every link of a framework.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// No link is [`SemanticPolarity::Neither`].
    pub bipolar: bool,
    pub links: BTreeMap<(AtomId, AtomId), SemanticPolarity>,
}

/// Classifies each link of the framework by the semantic polarity of its
/// source in the target's condition.
///
/// Vacuous links come out as [`SemanticPolarity::Both`]: their source never
/// occurs, so flipping it never matters. For a Boolean network,
/// sign-definiteness is `classify(&bn_to_adf(network)).bipolar`.
pub fn classify(adf: &Adf) -> Classification {
    let mut links = BTreeMap::new();
    let mut bipolar = true;
    for &(u, v) in adf.links() {
        let polarity = adf.condition(v).semantic_polarity(u);
        if polarity == SemanticPolarity::Neither {
            bipolar = false;
        }
        links.insert((u, v), polarity);
    }
    Classification { bipolar, links }
}

/// Whether every update function of the network is monotone (increasing or
/// decreasing) in each of its arguments.
pub fn is_sign_definite(network: &BooleanNetwork) -> bool {
    classify(&bn_to_adf(network)).bipolar
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::travel;

    #[test]
    fn travel_links_include_reflexive_dependency() {
        let adf = travel();
        let p = AtomId(0);
        let v = AtomId(1);
        let t = AtomId(2);
        let f = AtomId(3);
        let expected: BTreeSet<_> = [(p, p), (p, v), (p, t), (t, v), (t, f), (v, f)]
            .into_iter()
            .collect();
        assert_eq!(*adf.links(), expected);
        assert!(adf.vacuous_links().is_empty());
    }

    #[test]
    fn classify_travel_is_bipolar() {
        let adf = travel();
        let cls = classify(&adf);
        assert!(cls.bipolar);
        assert_eq!(
            cls.links[&(AtomId(2), AtomId(1))],
            SemanticPolarity::Attacking
        );
        assert_eq!(
            cls.links[&(AtomId(0), AtomId(1))],
            SemanticPolarity::Supporting
        );
    }

    #[test]
    fn classify_xor_condition_is_not_bipolar() {
        let atoms = AtomTable::from_names(["a", "b", "c"]);
        let xor = Formula::Or(vec![
            Formula::And(vec![Formula::atom(0), Formula::not(Formula::atom(1))]),
            Formula::And(vec![Formula::not(Formula::atom(0)), Formula::atom(1)]),
        ]);
        let conditions = vec![Formula::atom(0), Formula::atom(1), xor];
        let adf = Adf::new(atoms, conditions).unwrap();
        let cls = classify(&adf);
        assert!(!cls.bipolar);
        assert_eq!(cls.links[&(AtomId(0), AtomId(2))], SemanticPolarity::Neither);
        assert_eq!(cls.links[&(AtomId(1), AtomId(2))], SemanticPolarity::Neither);
    }

    #[test]
    fn classify_constant_condition_reports_both() {
        let atoms = AtomTable::from_names(["a", "b"]);
        let contradiction = Formula::And(vec![Formula::atom(1), Formula::not(Formula::atom(1))]);
        let adf = Adf::new(atoms, vec![contradiction, Formula::atom(1)]).unwrap();
        let cls = classify(&adf);
        assert!(cls.bipolar);
        assert_eq!(cls.links[&(AtomId(1), AtomId(0))], SemanticPolarity::Both);
    }

    #[test]
    fn vacuous_links_classify_as_both() {
        let atoms = AtomTable::from_names(["a", "b"]);
        let mut links = BTreeSet::new();
        links.insert((AtomId(0), AtomId(1))); // vacuous: C_b does not mention a
        links.insert((AtomId(1), AtomId(1)));
        let adf =
            Adf::with_links(atoms, vec![Formula::True, Formula::atom(1)], links).unwrap();
        assert_eq!(adf.vacuous_links(), vec![(AtomId(0), AtomId(1))]);
        let cls = classify(&adf);
        assert_eq!(cls.links[&(AtomId(0), AtomId(1))], SemanticPolarity::Both);
    }

    #[test]
    fn missing_link_is_rejected() {
        let atoms = AtomTable::from_names(["a", "b"]);
        let links = BTreeSet::new();
        let err = Adf::with_links(atoms, vec![Formula::atom(1), Formula::atom(1)], links)
            .unwrap_err();
        assert_eq!(
            err,
            Error::MissingLink {
                atom: "a".into(),
                parent: "b".into()
            }
        );
    }

    #[test]
    fn empty_conversion_round_trip() {
        let empty = BooleanNetwork::new(AtomTable::new(), Vec::new()).unwrap();
        let adf = bn_to_adf(&empty);
        assert_eq!(adf.num_atoms(), 0);
        let (back, warnings) = adf_to_bn(&adf);
        assert_eq!(back, empty);
        assert!(warnings.is_empty());
    }

    #[test]
    fn adf_to_bn_reads_signs_off_nnf() {
        let adf = travel();
        let (bn, warnings) = adf_to_bn(&adf);
        assert!(warnings.is_empty());
        let t = AtomId(2);
        let v = AtomId(1);
        let p = AtomId(0);
        assert!(bn.edges().contains(&(t, v, Sign::Minus)));
        assert!(bn.edges().contains(&(p, v, Sign::Plus)));
    }

    #[test]
    fn adf_to_bn_self_supporting_atom() {
        let atoms = AtomTable::from_names(["a"]);
        let adf = Adf::new(atoms, vec![Formula::atom(0)]).unwrap();
        let (bn, _) = adf_to_bn(&adf);
        assert_eq!(
            *bn.edges(),
            [(AtomId(0), AtomId(0), Sign::Plus)].into_iter().collect()
        );
        assert_eq!(bn.inputs(), vec![AtomId(0)]);
    }

    #[test]
    fn adf_to_bn_normalises_before_reading_polarity() {
        // C_b = !(a & !b) becomes !a | b: edges (a,b,-) and (b,b,+)
        let atoms = AtomTable::from_names(["a", "b"]);
        let cond_b = Formula::not(Formula::And(vec![
            Formula::atom(0),
            Formula::not(Formula::atom(1)),
        ]));
        let adf = Adf::new(atoms, vec![Formula::atom(0), cond_b]).unwrap();
        let (bn, warnings) = adf_to_bn(&adf);
        assert!(warnings.is_empty());
        assert!(bn.edges().contains(&(AtomId(0), AtomId(1), Sign::Minus)));
        assert!(bn.edges().contains(&(AtomId(1), AtomId(1), Sign::Plus)));
    }

    #[test]
    fn mixed_polarity_produces_both_edges_and_warning() {
        let atoms = AtomTable::from_names(["a", "b"]);
        let taut = Formula::Or(vec![Formula::atom(0), Formula::not(Formula::atom(0))]);
        let adf = Adf::new(atoms, vec![taut, Formula::atom(1)]).unwrap();
        let (bn, warnings) = adf_to_bn(&adf);
        assert!(bn.edges().contains(&(AtomId(0), AtomId(0), Sign::Plus)));
        assert!(bn.edges().contains(&(AtomId(0), AtomId(0), Sign::Minus)));
        assert_eq!(
            warnings,
            vec![MixedPolarity {
                parent: AtomId(0),
                target: AtomId(0)
            }]
        );
    }

    #[test]
    fn sign_definiteness_matches_bipolarity() {
        let atoms = AtomTable::from_names(["a", "b"]);
        let and = Formula::And(vec![Formula::atom(0), Formula::not(Formula::atom(1))]);
        let bn = BooleanNetwork::new(atoms, vec![and, Formula::atom(1)]).unwrap();
        assert!(is_sign_definite(&bn));

        let atoms = AtomTable::from_names(["a", "b"]);
        let xor = Formula::Or(vec![
            Formula::And(vec![Formula::atom(0), Formula::not(Formula::atom(1))]),
            Formula::And(vec![Formula::not(Formula::atom(0)), Formula::atom(1)]),
        ]);
        let bn = BooleanNetwork::new(atoms, vec![xor, Formula::atom(1)]).unwrap();
        assert!(!is_sign_definite(&bn));
    }
}
