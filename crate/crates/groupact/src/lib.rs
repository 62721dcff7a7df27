//! Exact computation with partial actions of finite groupoids on split
//! rings F_p^n.
//!
//! The crate provides, over an exactly computable ring model:
//!
//! * validated finite groupoids with transversals and the
//!   coarse × isotropy factorization ([`groupoid`]);
//! * split rings, atom-subset ideals and partial ring isomorphisms with
//!   inverse-semigroup composition ([`ring`]);
//! * partial groupoid actions with full axiom verification, classification
//!   (global, unital, group-type, recoverable) and the extension order
//!   ([`action`]);
//! * restriction data, the restrict/extend adjunction and base transport
//!   ([`datum`]);
//! * globalization: the enveloping construction for group actions and the
//!   assembled groupoid globalization, all re-verified ([`globalization`]);
//! * partial skew groupoid rings with corner Morita contexts ([`skew`]);
//! * invariants, trace maps, Galois certificates and the four-way
//!   equivalence report ([`galois`]);
//! * census enumeration of actions and restriction data ([`census`]),
//!   built-in fixtures ([`fixtures`]) and a text scenario format
//!   ([`scenario`]).
//!
//! Verification sweeps and the census fan out over rayon when the
//! `parallel` feature (default) is enabled and degrade to sequential loops
//! without it.

pub mod action;
pub mod census;
pub mod datum;
pub(crate) mod dsu;
pub mod fixtures;
pub mod galois;
pub mod globalization;
pub mod groupoid;
pub mod modp;
pub mod par;
pub mod ring;
pub mod scenario;
pub mod skew;

pub use action::{ActionReport, IsotropyAction, ParMorphism, PartialAction, RingMap, Violation};
pub use datum::{
    check_adjunction_action, check_adjunction_datum, extend, restrict, transport, AdjunctionReport,
    Datum, DatumMorphism, DatumReport,
};
pub use galois::{EquivalenceReport, GaloisCertificate, GaloisSetup};
pub use globalization::{
    build_globalization, globalize_group, is_globalizable, synthesize_globalization_data,
    verify_globalization, GlobalizationData,
};
pub use groupoid::{
    brandt_groupoid, coarse_groupoid, cyclic_group, validate_groupoid, Groupoid, GroupoidTable,
    Mor, Obj, Transversal,
};
pub use ring::{Ideal, PartialRingIso, RingElement, SplitRing};
pub use skew::SkewAlgebra;
