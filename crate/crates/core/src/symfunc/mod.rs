//! Characteristic-class algebra on graded class vectors: Chern, Segre and
//! Chern-character conversions, Thom–Porteous determinants, and the
//! partition-sum expansions of Segre products in Chern characters.
//!
//! Everything here is generic over the coefficient ring so the same code
//! serves symbolic identity checks (ring = [`ClassExpr`]) and evaluation on
//! model spaces (ring = cohomology classes).

mod determinant;
mod expr;
mod partitions;
mod vector;

pub use determinant::{delta_determinant, determinant};
pub use expr::{ClassExpr, ClassKind, Generator, Monomial};
pub use partitions::{
    complete_homogeneous_in_ch, multiplicity_vectors, partitions, square_expansion, sshift_expansion,
    ssq_expansion, Partition,
};
pub use vector::{ch_to_chern, chern_to_ch, chern_to_segre, dualize, segre_to_chern, GradedClassVector};

/// Coefficient-wise product of two series over any ring.
pub fn hadamard<T: crate::Ring>(
    a: &crate::PowerSeries<T>,
    b: &crate::PowerSeries<T>,
) -> crate::Result<crate::PowerSeries<T>> {
    a.hadamard(b)
}
