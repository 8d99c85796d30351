//! Lower bounds on the broadcast rate: the maximum acyclic induced subgraph,
//! exact minrank over GF(2), and the entropic linear-programming bound built
//! from decodability and submodularity.

mod chain;
mod entropic;
mod mais;
mod minrank;
pub mod simplex;

pub use chain::verify_entropy_chain;
pub use entropic::{
    shannon_lower_bound, shannon_lower_bound_with_certificate, EntropicLp, LpCertificate,
    MAX_LP_N,
};
pub use mais::mais;
pub use minrank::{minrank2, rank2, FittingMatrix, MAX_ARCS};
