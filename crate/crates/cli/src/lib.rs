//! Library side of the `sqfree` command: instance parsing, the bundled
//! corpus, certificates and the reproduction suite.

pub mod certificate;
pub mod corpus;
pub mod instance;
pub mod job;
pub mod repro;
