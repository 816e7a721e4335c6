//! Symbolic and ordinary powers of squarefree monomial ideals, and the
//! hypergraph and integer-programming checks that decide when they agree.

pub mod covering;
pub mod error;
pub mod hypergraph;
pub mod ideal;
pub mod lp;
pub mod monomial;
pub mod par;
pub mod paths;
pub mod symbolic;

pub use error::{Error, Result};
pub use hypergraph::{Graph, Hypergraph, VertexSet};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use par::Exec;
