//! Exact-arithmetic outer (dual) billiards around polygons.
//!
//! The outer billiard map T reflects an exterior point through the tangency
//! vertex of its right tangent line to a convex table. Around lattice tables
//! every orbit is periodic or finite; around the regular octagon and
//! dodecagon the map carries self-similar renormalization structures whose
//! derived systems, first-return tables and period-growth witnesses this
//! crate computes exactly over Q(√2) and Q(√3).
//!
//! Modules:
//! - [`field`]: exact arithmetic over Q, Q(√2), Q(√3) with exact sign.
//! - [`geom`]: points, convex polygons, rigid motions, exact clipping.
//! - [`billiard`]: the map itself, orbits, and the folded sector system.
//! - [`structure`]: components, first-return partitions, invariant figures,
//!   lattice censuses, plane classification scans.
//! - [`octagon`]: the folded octagon system (u/v/w pieces, substitution,
//!   count matrix, aperiodic witness).
//! - [`dodecagon`]: the dodecagon rocket family, return tables, scaling
//!   conjugacies and the period-growth witness.

pub mod billiard;
pub mod dodecagon;
pub mod field;
pub mod geom;
pub mod octagon;
pub mod structure;

pub use billiard::{BilliardTable, FoldedSector, Outcome, TableSpec};
pub use field::{Quad, Rational};
pub use geom::{ConvexPolygon, Isometry, Point};
