//! Exact-arithmetic classification toolkit for scrolls over projective space.
//!
//! A scroll `F(m; a_1, ..., a_r)` is the projectivization of the split vector
//! bundle `O(a_1) + ... + O(a_r)` over `P^m`.  This crate computes, entirely
//! over the integers:
//!
//! - [`chow`]: the Chow cohomology ring `Z[x,t]/<x^{m+1}, P(x,t)>` of a
//!   scroll, with monomial normal forms and the degree (integration) map;
//! - [`forms`]: the integral binary cubic intersection form on the Picard
//!   lattice of a three-dimensional scroll, its invariants, and GL2(Z)
//!   equivalence decisions (bounded witness search, an exact procedure for
//!   degenerate forms, and congruence refutation certificates);
//! - [`scrolls`]: twist normalization and the weak-equivalence classifiers
//!   for scrolls over `P^1` (sum of twists modulo rank) and for rank-2
//!   scrolls over `P^2`, cross-checked against the cubic-form engine;
//! - [`a1pi`]: symbolic presentations of motivic homotopy sheaf groups of
//!   projective spaces, punctured affine spaces, SL_n, scrolls, projective
//!   bundles, and linear blow-ups, with a canonical normal form on
//!   presentation expressions;
//! - [`lens`]: the classical lens-space homotopy classifier, the
//!   number-theoretic analogue of the scroll phenomenon;
//! - [`cli`]: the deterministic command-line frontend (`ring`, `form`,
//!   `equiv`, `classify`, `pi`, `table`, `lens`, `scan`).
//!
//! The headline computation: scrolls such as `F(1;0,0,1)` and `F(1;0,0,2)`
//! have entrywise-isomorphic homotopy-group presentations in every degree,
//! yet their Chow rings are non-isomorphic — the classifiers return
//! `inequivalent` with a machine-checkable certificate.  See the `examples/`
//! directory for runnable walkthroughs of each capability.

pub mod a1pi;
pub mod chow;
pub mod cli;
pub mod forms;
pub mod lens;
pub mod scrolls;

pub use chow::{build_ring, chern_polynomial, BundleSpec, ChowRing, IntPoly};
pub use forms::{BinaryCubicForm, UnimodularMatrix};
pub use scrolls::ScrollSpec;
