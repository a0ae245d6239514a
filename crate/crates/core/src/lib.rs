//! Exact computations for stability of principal sheaves and Lie-algebra
//! sheaves on polarized surfaces.
//!
//! The crate works at two levels. At the fiber level it handles a
//! semisimple Lie algebra `g` given by rational structure constants: Killing
//! form, weighted flags and their μ-weight, graded limits, and the
//! correspondence between balanced algebra filtrations and integral grading
//! elements. At the sheaf level it handles numerical classes
//! `(rank, c1, ch2)` on a surface, Hilbert polynomials by Riemann–Roch, and
//! verdicts of the Gieseker, slope and tensor stability tests over a
//! declared list of candidate filtrations.
//!
//! All arithmetic is exact ([`Rational`] over big integers).

pub mod error;
pub mod exactmath;
pub mod filtration;
pub mod geom;
pub mod io;
pub mod liecore;
pub mod parabolic;
pub mod stability;

pub use error::{Error, Result};
pub use exactmath::{EventualSign, Matrix, Mode, Poly, Rational, Vector};
pub use filtration::{GradedSplitting, WeightedFlag};
pub use geom::{SheafClass, SurfaceModel};
pub use liecore::{sl, KillingInvariants, LieAlgebra, StructureConstants, Subspace};
pub use parabolic::ParabolicData;
pub use stability::{GSheafModel, SheafFiltrationSpec, StabilityVerdict, Status};
