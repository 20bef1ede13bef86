//! Network coding under Byzantine node attacks.
//!
//! This library implements the machinery needed to study single-source,
//! single-destination network coding when an adversary controls a bounded
//! number of nodes of unknown location:
//!
//! * [`netgraph`] — directed acyclic network model, validation, the
//!   normalization transforms that reduce every admissible network to
//!   2-to-2 and 2-to-1 internal nodes, and the planar-class membership check.
//! * [`cutset`] — capacity upper bounds: the backward-edge-free cut-set
//!   bound, its per-node-pair instances, a tighter bound that also handles
//!   cuts with backward edges, and the replication construction that turns a
//!   limited-traitor problem into an all-node one.
//! * [`polytope`] — bounded integer lattice polytopes, the exact rational
//!   joint distributions they induce, marginals, entropies, and the
//!   rank law linking subset entropies to nullspace row ranks.
//! * [`fundprop`] — the feasibility test for when matching marginals force a
//!   full joint distribution, its corollaries, and a brute-force
//!   marginal-forcing oracle used to cross-check all of them.
//! * [`codegen`] — code construction: edge labeling, symbol tracking,
//!   Vandermonde generator matrices, coefficient selection, and the three
//!   hand-built reference codes.
//! * [`simulate`] — honest and adversarial execution, comparison bits,
//!   suspect-list compilation, decoding, and adversary sweeps.
//! * [`linbound`] — linear-capacity rank bounds and the two-traitor
//!   information-theoretic bound evaluator.

pub mod codegen;
pub mod cutset;
pub mod fixtures;
pub mod fundprop;
pub mod linalg;
pub mod linbound;
pub mod lp;
pub mod netgraph;
pub mod polytope;
pub mod rat;
pub mod report;
pub mod simulate;
