//! Toolkit for singly connected graph orientations.
//!
//! A directed graph is *singly connected* if for every ordered vertex pair
//! (s, t) there is at most one directed simple path from s to t.  An
//! *sc-orientation* of an undirected graph assigns a direction to every edge
//! so that the resulting digraph is singly connected.
//!
//! The crate provides:
//! - [`graph`]: core graph types, parsing/serialization, and classic
//!   structure algorithms (girth, chromatic number, biconnected blocks,
//!   bipartiteness, pattern search, contraction, small-graph enumeration).
//! - [`check`]: verification that a digraph is singly connected, plus an
//!   independent flow-based oracle and a rewriting procedure that removes
//!   long directed cycles from sc-orientations.
//! - [`solve`]: exact decision procedures for sc-orientability (reduction
//!   preprocessing, block-wise backtracking search, and a brute-force
//!   baseline for small inputs).
//! - [`poly`]: polynomial-time orientation strategies for restricted graph
//!   classes (high girth vs. chromatic number, near-bipartite graphs, and
//!   strongly distance-hereditary graphs).
//! - [`forge`]: generators for structured benchmark families, including a
//!   3-SAT reduction whose instances are sc-orientable exactly when the
//!   formula is satisfiable, coupling-gadget assemblies, and a
//!   perfect-graph preserving edge transformation.

pub mod check;
pub mod forge;
pub mod graph;
pub mod poly;
pub mod solve;
