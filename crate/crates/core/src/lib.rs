//! Edge-degree constrained subgraphs (EDCS) and the matching structure
//! around them.
//!
//! The crate builds and verifies EDCSs of general graphs, computes maximum
//! matchings and Gallai-Edmonds decompositions, and replays the argument that
//! an EDCS with `β >= 50/ε` and `β⁻ >= (1 - ε/10)β` keeps a
//! `(2/3 - ε)`-approximate matching on concrete instances: every
//! intermediate inequality is evaluated in exact rational arithmetic. A
//! one-way communication protocol built on EDCS is simulated in [`comm`].

pub mod cli;
pub mod comm;
pub mod edcs;
pub mod exact;
pub mod gallai_edmonds;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod proof;

pub use edcs::{construct_edcs, params_for_epsilon, verify_edcs, EdcsCheck, EdcsParams};
pub use exact::{Epsilon, Rational};
pub use gallai_edmonds::{decompose, verify_ge_properties, GallaiEdmonds};
pub use generate::{generate, Family, GeneratorConfig};
pub use graph::{Edge, Graph};
pub use matching::{maximum_matching, Matching};
pub use proof::{verify_trace, CheckStatus, ProofTrace};
