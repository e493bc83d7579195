//! Determinantal ideals of extended Hankel matrices and their blow-up
//! algebras: defining equations of the Rees algebra and fiber cone, maximal
//! cliques of the sorted-pair graph, free resolutions of the Alexander dual,
//! and the resulting regularity, dimension and Gorenstein invariants.

pub mod clique;
pub mod error;
pub mod ideal;
pub mod invariants;
pub mod linalg;
pub mod params;
pub mod poly;
pub mod resolution;
pub mod straighten;
pub mod varset;

pub use clique::{CliqueGraph, CliqueSet, ColonData, MaximalClique};
pub use error::{Error, Result};
pub use params::{DiagonalIndex, OrderKind, ScrollParams, XMonomial, YMonomial, YVars};
pub use poly::{Polynomial, TermOrder};
pub use varset::VarSet;
