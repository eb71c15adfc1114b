//! Abstract dialectical frameworks and Boolean networks over one shared core.
//!
//! Both formalisms attach a propositional formula to every node of a directed
//! graph: an *acceptance condition* in an abstract dialectical framework
//! ([`Adf`]), an *update function* in a Boolean network
//! ([`BooleanNetwork`]). This crate keeps the two views interconvertible and
//! computes, by exhaustive desk-scale enumeration,
//!
//! * the classical framework semantics (two-valued, admissible, complete,
//!   preferred, grounded, stable) in [`semantics`],
//! * the network dynamics (state transition graphs under synchronous and
//!   asynchronous updates, trap sets, attractors, trap spaces) in
//!   [`dynamics`],
//! * signed-graph structure analysis (cycle signs, fixpoint existence
//!   predicates, feedback vertex sets, exact model counting) in
//!   [`structure`].
//!
//! Everything here is an exact reference implementation: every algorithm is
//! exponential by design and guarded by an explicit [`Budget`]. Text formats
//! for both model families live in [`textio`].

pub mod dynamics;
pub mod error;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod formula;
pub mod model;
pub mod semantics;
pub mod structure;
pub mod textio;

pub use error::{BudgetKind, Error, ParseError, Result};
pub use formula::{AtomId, Formula, Polarity, SemanticPolarity, Tri};
pub use model::{Adf, AtomTable, BooleanNetwork, Sign};
pub use semantics::{Interp3, Semantics, State};

/// Hard limits for the exhaustive scans.
///
/// Every enumeration in this crate is exponential; exceeding a limit yields
/// [`Error::BudgetExceeded`] (or [`Error::CycleCapExceeded`]) instead of a
/// silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum atom count for scans over all 3^n interpretations.
    pub interpretation_scan: usize,
    /// Maximum atom count for scans over all 2^n states.
    pub state_scan: usize,
    /// Maximum number of simple cycles enumerated in a signed graph.
    pub cycle_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            interpretation_scan: 12,
            state_scan: 20,
            cycle_cap: 100_000,
        }
    }
}

impl Budget {
    /// A budget that admits at most `n` atoms in either scan (test helper).
    pub fn with_atoms(n: usize) -> Self {
        Budget {
            interpretation_scan: n,
            state_scan: n,
            ..Budget::default()
        }
    }

    pub(crate) fn check_interpretation_scan(&self, atoms: usize) -> Result<()> {
        if atoms > self.interpretation_scan {
            return Err(Error::BudgetExceeded {
                kind: BudgetKind::InterpretationScan,
                atoms,
                limit: self.interpretation_scan,
            });
        }
        Ok(())
    }

    pub(crate) fn check_state_scan(&self, atoms: usize) -> Result<()> {
        if atoms > self.state_scan {
            return Err(Error::BudgetExceeded {
                kind: BudgetKind::StateScan,
                atoms,
                limit: self.state_scan,
            });
        }
        Ok(())
    }
}
