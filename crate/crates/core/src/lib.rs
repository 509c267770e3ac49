//! Right-angled Artin groups and their poly-free decompositions.
//!
//! The crate covers the whole pipeline from a finite simplicial graph to
//! explicit semidirect product decompositions of the group it defines:
//!
//! * [`graph`]: graphs, exact clique/chromatic solvers, cycles and forests.
//! * [`words`]: the word problem and shortlex normal forms.
//! * [`freegrp`]: free-group words and subgroup index via folding.
//! * [`semidirect`]: generic `F ⋊ Q` arithmetic driven by an [`semidirect::Action`].
//! * [`tower`]: the split `AΓ ≅ F ⋊ AΓ_L` peeled off one color class at a time.
//! * [`dbcp`]: the doubly breakable cycle property, the length-2 splitting
//!   `F ⋊ F(C)`, Euler characteristics and the poly-fg-free classifier.
//! * [`cli`]: report builders behind the `polyfree` binary.

pub mod cli;
pub mod dbcp;
pub mod error;
pub mod fixtures;
pub mod freegrp;
pub mod graph;
pub mod semidirect;
pub mod tower;
pub mod words;

pub use error::{Error, Result};
pub use graph::{Coloring, Graph, Limits, Shape, VertexSet};
pub use words::{Letter, TraceWord};
