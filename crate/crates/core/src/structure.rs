//! Signed-graph analysis: cycle signs, fixpoint-existence predicates,
//! minimum feedback vertex sets, and exact model counting.
//!
//! Arc signs come from the semantic classification of the links, so these
//! operations require a sign-definite network. A link that is both
//! supporting and attacking is treated as carrying both signs; any cycle
//! through such a link can be read with either sign, and the existence
//! predicates draw no conclusion from a graph where that happens.

use std::collections::BTreeSet;

use crate::dynamics::strongly_connected_components;
use crate::error::{Error, Result};
use crate::formula::{AtomId, SemanticPolarity};
use crate::model::{bn_to_adf, classify, Adf, BooleanNetwork};
use crate::semantics::two_valued_models;
use crate::Budget;

/// Parity of the inhibiting arcs along a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleSign {
    /// Even number of inhibiting arcs.
    Positive,
    /// Odd number of inhibiting arcs.
    Negative,
}

impl CycleSign {
    pub fn as_str(self) -> &'static str {
        match self {
            CycleSign::Positive => "positive",
            CycleSign::Negative => "negative",
        }
    }
}

/// A simple cycle with one of its achievable signs, rotated to start at its
/// smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedCycle {
    pub vertices: Vec<AtomId>,
    pub sign: CycleSign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct ArcSigns {
    plus: bool,
    minus: bool,
}

/// Adjacency with per-arc sign sets from the semantic link classification.
fn signed_adjacency(network: &BooleanNetwork) -> Result<Vec<Vec<(usize, ArcSigns)>>> {
    let classification = classify(&bn_to_adf(network));
    let mut adjacency = vec![Vec::new(); network.num_variables()];
    for (&(u, v), polarity) in &classification.links {
        let signs = match polarity {
            SemanticPolarity::Supporting => ArcSigns {
                plus: true,
                minus: false,
            },
            SemanticPolarity::Attacking => ArcSigns {
                plus: false,
                minus: true,
            },
            SemanticPolarity::Both => ArcSigns {
                plus: true,
                minus: true,
            },
            SemanticPolarity::Neither => {
                return Err(Error::NotSignDefinite {
                    atom: network.variables().name(v).to_string(),
                    parent: network.variables().name(u).to_string(),
                })
            }
        };
        adjacency[u.index()].push((v.index(), signs));
    }
    for row in &mut adjacency {
        row.sort_by_key(|(w, _)| *w);
    }
    Ok(adjacency)
}

#[derive(Clone, Debug)]
struct CycleInfo {
    vertices: Vec<usize>,
    can_positive: bool,
    can_negative: bool,
    /// Some arc on the cycle carries both signs.
    flexible: bool,
}

/// Enumerates every simple cycle exactly once (rooted at its smallest
/// vertex), up to the budget's cycle cap.
fn enumerate_cycles(
    adjacency: &[Vec<(usize, ArcSigns)>],
    cap: usize,
) -> Result<Vec<CycleInfo>> {
    let n = adjacency.len();
    let mut cycles = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();

    struct Dfs<'a> {
        adjacency: &'a [Vec<(usize, ArcSigns)>],
        start: usize,
        cap: usize,
    }

    impl Dfs<'_> {
        fn run(
            &self,
            v: usize,
            minus_parity: bool,
            flexible_arcs: usize,
            on_path: &mut Vec<bool>,
            path: &mut Vec<usize>,
            cycles: &mut Vec<CycleInfo>,
        ) -> Result<()> {
            for &(w, signs) in &self.adjacency[v] {
                if w < self.start {
                    continue;
                }
                let arc_flexible = signs.plus && signs.minus;
                let arc_minus = signs.minus && !signs.plus;
                if w == self.start {
                    if cycles.len() >= self.cap {
                        return Err(Error::CycleCapExceeded(self.cap));
                    }
                    let flexible = flexible_arcs > 0 || arc_flexible;
                    let parity = minus_parity ^ arc_minus;
                    cycles.push(CycleInfo {
                        vertices: path.clone(),
                        can_positive: flexible || !parity,
                        can_negative: flexible || parity,
                        flexible,
                    });
                } else if !on_path[w] {
                    on_path[w] = true;
                    path.push(w);
                    self.run(
                        w,
                        minus_parity ^ arc_minus,
                        flexible_arcs + usize::from(arc_flexible),
                        on_path,
                        path,
                        cycles,
                    )?;
                    path.pop();
                    on_path[w] = false;
                }
            }
            Ok(())
        }
    }

    for start in 0..n {
        let dfs = Dfs {
            adjacency,
            start,
            cap,
        };
        on_path[start] = true;
        path.push(start);
        dfs.run(start, false, 0, &mut on_path, &mut path, &mut cycles)?;
        path.pop();
        on_path[start] = false;
    }
    Ok(cycles)
}

/// All simple cycles with their achievable signs. A cycle through a
/// both-signed link appears once per sign.
pub fn signed_cycles(network: &BooleanNetwork, budget: &Budget) -> Result<Vec<SignedCycle>> {
    let adjacency = signed_adjacency(network)?;
    let mut out = Vec::new();
    for info in enumerate_cycles(&adjacency, budget.cycle_cap)? {
        let vertices: Vec<AtomId> = info.vertices.iter().map(|&v| AtomId(v)).collect();
        if info.can_positive {
            out.push(SignedCycle {
                vertices: vertices.clone(),
                sign: CycleSign::Positive,
            });
        }
        if info.can_negative {
            out.push(SignedCycle {
                vertices,
                sign: CycleSign::Negative,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Whether a closed walk of even/odd inhibiting parity exists, via
/// reachability in the parity-doubled graph.
///
/// A *no* answer rules the corresponding simple cycles out without
/// enumerating them; a *yes* answer is only necessary, since a closed walk
/// may combine several cycles of the other sign.
pub fn signed_walk_presence(network: &BooleanNetwork) -> Result<(bool, bool)> {
    let adjacency = signed_adjacency(network)?;
    let n = adjacency.len();
    let mut positive_walk = false;
    let mut negative_walk = false;
    for origin in 0..n {
        // parity-annotated BFS from the origin's outgoing arcs
        let mut seen = vec![[false; 2]; n];
        let mut queue = Vec::new();
        let push = |seen: &mut Vec<[bool; 2]>,
                    queue: &mut Vec<(usize, usize)>,
                    w: usize,
                    p: usize| {
            if !seen[w][p] {
                seen[w][p] = true;
                queue.push((w, p));
            }
        };
        for &(w, signs) in &adjacency[origin] {
            if signs.plus {
                push(&mut seen, &mut queue, w, 0);
            }
            if signs.minus {
                push(&mut seen, &mut queue, w, 1);
            }
        }
        while let Some((v, parity)) = queue.pop() {
            for &(w, signs) in &adjacency[v] {
                if signs.plus {
                    push(&mut seen, &mut queue, w, parity);
                }
                if signs.minus {
                    push(&mut seen, &mut queue, w, parity ^ 1);
                }
            }
        }
        positive_walk |= seen[origin][0];
        negative_walk |= seen[origin][1];
        if positive_walk && negative_walk {
            break;
        }
    }
    Ok((positive_walk, negative_walk))
}

/// What the structural predicates allow to conclude about the number of
/// stable states.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// No cycles: exactly one stable state.
    Unique,
    /// No positive cycles: at most one stable state.
    AtMostOne,
    /// No negative cycles: at least one stable state.
    AtLeastOne,
    /// A predecessor-closed component with only negative cycles: no stable
    /// state.
    None,
    NoConclusion,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::Unique => "unique",
            Conclusion::AtMostOne => "at_most_one",
            Conclusion::AtLeastOne => "at_least_one",
            Conclusion::None => "none",
            Conclusion::NoConclusion => "no_conclusion",
        }
    }
}

/// Structural existence analysis of a sign-definite network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceReport {
    pub acyclic: bool,
    pub has_positive_cycle: bool,
    pub has_negative_cycle: bool,
    /// Some strongly connected component has only negative cycles and is
    /// closed under predecessors.
    pub negative_closed_scc: bool,
    /// A both-signed link lies on a cycle; the predicates then draw no
    /// conclusion.
    pub ambiguous_cycle: bool,
    pub conclusion: Conclusion,
    pub fvs_size: usize,
    pub fvs_witness: Vec<AtomId>,
    /// Exact number of stable states, when the network fits the state-scan
    /// budget.
    pub exact_count: Option<u64>,
}

/// Runs every structural existence predicate and, when the exact count is
/// within budget, asserts the drawn conclusion against it.
pub fn existence_report(network: &BooleanNetwork, budget: &Budget) -> Result<ExistenceReport> {
    let adjacency = signed_adjacency(network)?;
    let n = adjacency.len();

    let (positive_walk, negative_walk) = signed_walk_presence(network)?;
    let cycles = if !positive_walk && !negative_walk {
        Vec::new()
    } else {
        enumerate_cycles(&adjacency, budget.cycle_cap)?
    };
    let acyclic = cycles.is_empty();
    let has_positive_cycle = cycles.iter().any(|c| c.can_positive);
    let has_negative_cycle = cycles.iter().any(|c| c.can_negative);
    let ambiguous_cycle = cycles.iter().any(|c| c.flexible);
    debug_assert!(positive_walk || !has_positive_cycle);
    debug_assert!(negative_walk || !has_negative_cycle);

    let unsigned: Vec<Vec<usize>> = adjacency
        .iter()
        .map(|row| row.iter().map(|&(w, _)| w).collect())
        .collect();
    let negative_closed_scc = has_negative_closed_scc(&unsigned, &cycles);

    let conclusion = if acyclic {
        Conclusion::Unique
    } else if ambiguous_cycle {
        Conclusion::NoConclusion
    } else if negative_closed_scc {
        Conclusion::None
    } else if !has_positive_cycle {
        Conclusion::AtMostOne
    } else if !has_negative_cycle {
        Conclusion::AtLeastOne
    } else {
        Conclusion::NoConclusion
    };

    let edges: BTreeSet<(usize, usize)> = unsigned
        .iter()
        .enumerate()
        .flat_map(|(v, ws)| ws.iter().map(move |&w| (v, w)))
        .collect();
    let (fvs_size, witness) = min_fvs(n, &edges, budget)?;
    let fvs_witness = witness.into_iter().map(AtomId).collect();

    let exact_count = if n <= budget.state_scan {
        Some(count_two_valued(&bn_to_adf(network), budget)?)
    } else {
        None
    };
    if let Some(count) = exact_count {
        let consistent = match conclusion {
            Conclusion::Unique => count == 1,
            Conclusion::AtMostOne => count <= 1,
            Conclusion::AtLeastOne => count >= 1,
            Conclusion::None => count == 0,
            Conclusion::NoConclusion => true,
        };
        assert!(
            consistent,
            "structural conclusion {} contradicts the exact count {count}",
            conclusion.as_str()
        );
    }

    Ok(ExistenceReport {
        acyclic,
        has_positive_cycle,
        has_negative_cycle,
        negative_closed_scc,
        ambiguous_cycle,
        conclusion,
        fvs_size,
        fvs_witness,
        exact_count,
    })
}

/// A strongly connected component that contains a cycle, has only
/// unambiguously negative cycles, and is closed under predecessors.
fn has_negative_closed_scc(unsigned: &[Vec<usize>], cycles: &[CycleInfo]) -> bool {
    let components = strongly_connected_components(unsigned);
    'components: for component in &components {
        let members: BTreeSet<usize> = component.iter().copied().collect();
        let mut inner_cycles = 0;
        for cycle in cycles {
            if cycle.vertices.iter().all(|v| members.contains(v)) {
                if cycle.can_positive {
                    continue 'components;
                }
                inner_cycles += 1;
            }
        }
        if inner_cycles == 0 {
            continue;
        }
        // closed under predecessors: arcs into the component start inside it
        let closed = unsigned.iter().enumerate().all(|(u, ws)| {
            ws.iter().all(|w| !members.contains(w) || members.contains(&u))
        });
        if closed {
            return true;
        }
    }
    false
}

fn is_acyclic_without(adjacency: &[Vec<usize>], removed: &[bool]) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Grey,
        Black,
    }
    let n = adjacency.len();
    let mut color = vec![Color::White; n];
    for root in 0..n {
        if removed[root] || color[root] != Color::White {
            continue;
        }
        // iterative DFS with explicit frames
        let mut frames = vec![(root, 0usize)];
        color[root] = Color::Grey;
        while let Some(&(v, child)) = frames.last() {
            if child < adjacency[v].len() {
                frames.last_mut().unwrap().1 += 1;
                let w = adjacency[v][child];
                if removed[w] {
                    continue;
                }
                match color[w] {
                    Color::Grey => return false,
                    Color::White => {
                        color[w] = Color::Grey;
                        frames.push((w, 0));
                    }
                    Color::Black => {}
                }
            } else {
                color[v] = Color::Black;
                frames.pop();
            }
        }
    }
    true
}

/// A minimum feedback vertex set of a directed graph, by exact search over
/// vertex subsets of increasing size. Vertices carrying a self-loop are
/// forced into every candidate.
pub fn min_fvs(
    num_vertices: usize,
    edges: &BTreeSet<(usize, usize)>,
    budget: &Budget,
) -> Result<(usize, Vec<usize>)> {
    budget.check_state_scan(num_vertices)?;
    let mut adjacency = vec![Vec::new(); num_vertices];
    for &(u, v) in edges {
        adjacency[u].push(v);
    }
    let forced: Vec<usize> = (0..num_vertices)
        .filter(|&v| edges.contains(&(v, v)))
        .collect();
    let pool: Vec<usize> = (0..num_vertices).filter(|v| !forced.contains(v)).collect();

    let mut removed = vec![false; num_vertices];
    for &v in &forced {
        removed[v] = true;
    }
    for extra in 0..=pool.len() {
        let mut chosen = Vec::with_capacity(extra);
        if let Some(solution) = search_subset(&adjacency, &pool, extra, 0, &mut chosen, &mut removed)
        {
            let mut witness = forced.clone();
            witness.extend(solution);
            witness.sort_unstable();
            return Ok((witness.len(), witness));
        }
    }
    unreachable!("removing every vertex leaves an acyclic graph")
}

fn search_subset(
    adjacency: &[Vec<usize>],
    pool: &[usize],
    want: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    removed: &mut Vec<bool>,
) -> Option<Vec<usize>> {
    if chosen.len() == want {
        if is_acyclic_without(adjacency, removed) {
            return Some(chosen.clone());
        }
        return None;
    }
    let still_needed = want - chosen.len();
    for i in from..pool.len() {
        if pool.len() - i < still_needed {
            break;
        }
        let v = pool[i];
        chosen.push(v);
        removed[v] = true;
        let found = search_subset(adjacency, pool, want, i + 1, chosen, removed);
        removed[v] = false;
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Exact number of two-valued models, by a full state scan.
pub fn count_two_valued(adf: &Adf, budget: &Budget) -> Result<u64> {
    Ok(two_valued_models(adf, budget)?.len() as u64)
}
