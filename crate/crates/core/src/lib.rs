//! Graph algebras and the quasivarieties generated by graphs.
//!
//! A finite directed graph `G = (V, E)` determines the *graph algebra*
//! `⟨V ∪ {∞}; ·, ∞⟩` where `u · v = u` when `(u, v)` is an edge and `∞`
//! otherwise. This crate evaluates terms in such algebras, checks identities
//! and quasi-identities (implications), decides whether a finite graph lies
//! in the quasivariety generated by a finite class of graphs, and compiles
//! forbidden-subgraph classes into sets of implications.
//!
//! Module map:
//!
//! * [`graph`]: graphs, products, unions, reachability, homomorphism search
//! * [`term`]: the term language, term graphs and their inverse
//! * [`algebra`]: evaluation, satisfaction, graph encodings as identity sets
//! * [`quasivariety`]: membership, separating implications, embeddings
//! * [`forbidden`]: implication sets for forbidden strong-homomorphic images
//! * [`small`]: exhaustive enumeration of small digraphs and terms

pub mod algebra;
pub mod error;
pub mod forbidden;
pub mod graph;
pub mod name;
pub mod quasivariety;
pub mod small;
pub mod term;

pub use error::{Error, Result};
pub use graph::Graph;
pub use name::Name;
