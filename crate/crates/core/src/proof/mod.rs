//! Instance-level replay of the argument that an EDCS contains a
//! `(2/3 - ε)`-approximate matching.
//!
//! Given `G` and an EDCS `H`, [`verify_trace`] fixes maximum matchings `M` of
//! `H` and `M*` of `G`, decomposes `H` (Gallai-Edmonds), classifies every
//! augmenting path of `M ∪ M*` by a suitable-edge witness, builds the
//! auxiliary bipartite graph `B`, and evaluates each intermediate inequality
//! exactly. See [`trace::CHECK_NAMES`] for the list of recorded checks.

mod auxiliary;
mod classify;
mod part_size;
mod trace;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::edcs::EdcsCheck;
use crate::exact::{serialize_rational, Rational};
use crate::gallai_edmonds::GeError;
use crate::matching::MatchingError;

pub use auxiliary::{build_auxiliary_b, AuxiliaryB};
pub use classify::{
    classify_augmenting_paths, validate_witness, PathClassification, PathKind, Witness,
};
pub use part_size::{verify_part_size_bound, BipartiteEdges};
pub use trace::{
    verify_trace, verify_trace_with_matching, ProofTrace, CHECK_NAMES, NEEDS_GUARANTEE,
};

#[derive(Debug, Error)]
pub enum ProofError {
    #[error("H is not an EDCS of G for the given parameters ({} P1, {} P2 violations)", .0.p1_violations.len(), .0.p2_violations.len())]
    NotEdcs(EdcsCheck),
    #[error("H is not a subgraph of G")]
    NotSubgraph,
    #[error(transparent)]
    Decomposition(#[from] GeError),
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error("the supplied matching of H is not maximum")]
    MatchingNotMaximum,
    #[error("augmenting path {path:?} admits neither witness type\n{dump}")]
    Unclassifiable { path: Vec<usize>, dump: String },
    #[error("witness for augmenting path {path:?} failed independent validation: {reason}")]
    InvalidWitness { path: Vec<usize>, reason: String },
    #[error("witnesses are inconsistent with the decomposition: {0}")]
    InconsistentWitness(String),
    #[error("part-size bound precondition violated: {0}")]
    PartSizePrecondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    AtLeast,
    AtMost,
    Equal,
}

impl Relation {
    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::AtLeast => lhs >= rhs,
            Relation::AtMost => lhs <= rhs,
            Relation::Equal => lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The quantity is undefined because a set it averages over is empty.
    SkippedEmpty,
    /// Evaluated, but the parameters are outside the regime where the
    /// inequality is guaranteed, so the outcome is informational.
    ParamsBelowGuarantee,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::SkippedEmpty => "SKIPPED-EMPTY",
            CheckStatus::ParamsBelowGuarantee => "PARAMS-BELOW-GUARANTEE",
        })
    }
}

/// One evaluated inequality `lhs <relation> rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub relation: Relation,
    #[serde(serialize_with = "serialize_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub rhs: Rational,
    pub status: CheckStatus,
}

impl CheckRecord {
    pub fn compare(name: &str, lhs: Rational, relation: Relation, rhs: Rational) -> Self {
        let status = if relation.holds(&lhs, &rhs) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        CheckRecord {
            name: name.to_owned(),
            relation,
            lhs,
            rhs,
            status,
        }
    }

    pub fn skipped(name: &str, relation: Relation) -> Self {
        CheckRecord {
            name: name.to_owned(),
            relation,
            lhs: Rational::default(),
            rhs: Rational::default(),
            status: CheckStatus::SkippedEmpty,
        }
    }

    pub fn holds(&self) -> bool {
        self.relation.holds(&self.lhs, &self.rhs)
    }

    pub fn is_failure(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} lhs={} rhs={} {}",
            self.name, self.lhs, self.rhs, self.status
        )
    }
}
