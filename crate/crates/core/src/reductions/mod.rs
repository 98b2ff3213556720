//! The reduction chain Independence Number Compare -> Maximum Set Packing
//! Compare -> Young Ranking -> Young Winner, as instance generators, together
//! with exhaustive `alpha` and `kappa` oracles to check them.

mod amplify;
mod chain;
mod graph;
mod sets;
mod young;

pub use amplify::amplify_for_winner;
pub use chain::{verify_reduction_chain, ChainCaps, ChainReport};
pub use graph::{alpha, Graph, DEFAULT_ALPHA_CAP};
pub use sets::{inc_to_mspc, incidence_family, kappa, MspcInstance, SetFamily, DEFAULT_KAPPA_CAP};
pub use young::{mspc_to_young_ranking, Side, VoterForm, YoungReductionOutput};
