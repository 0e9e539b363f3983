//! Skeletal presenters for Stokes torsors as finite combinatorial objects.
//!
//! The crate models Stokes data at desk scale: finitely presented groupoids
//! with functor enumeration into finite targets, stratified 2-complexes with
//! cellular group actions, edge-labeled cocycles modulo vertex gauge,
//! equivariant cocycles for finite Galois descent, strict 2-pushout
//! presenters with curve-style gluing relations, block-unipotent Stokes
//! groups over prime fields, and a double-precision local model chart.
//! Every equivalence claim is checked by exhaustive counting.

pub mod cocycle;
pub mod complex;
pub mod equivariant;
pub mod error;
pub mod finite;
pub mod glp;
pub mod group;
pub mod groupoid;
pub mod json;
pub mod presenter;
pub mod simplify;
pub mod stratum;
pub mod unipotent;
pub mod word;

pub use cocycle::{Cocycle, CocycleSystem, GaugeTransform};
pub use complex::{CellularAction, StratComplex2};
pub use equivariant::{EquivariantCocycle, EquivariantSystem, LabelAction};
pub use error::{Error, Result};
pub use finite::FiniteGroupoid;
pub use group::{GroupHom, LabelGroup};
pub use groupoid::PresentedGroupoid;
pub use presenter::{Cospan, CurveSpec, PushoutPresenter};
pub use stratum::{StratumGroups, StratumPoset};
pub use word::{Letter, Sign, Word};
