//! Catalan lattices through series parallel interval orders.
//!
//! The crate models four Catalan families (series parallel interval
//! orders, planar trees, Dyck paths and 312-avoiding permutations), the
//! bijections between them, and four partial orders on them:
//!
//! * the Dyck order (also known as the Stanley lattice), via principal
//!   ideals, ancestor counts, or path domination;
//! * the Tamari order, via principal filters or descendant sets;
//! * the weak and strong Bruhat orders restricted to `Av_n(312)`.
//!
//! [`verify`] checks every structural claim about these objects by
//! exhaustion at small sizes.

pub mod error;
pub mod hasse;
pub mod orders;
pub mod perm;
pub mod relation;
pub mod spio;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use hasse::{hasse, HasseDiagram};
pub use orders::{CatalanOrder, OrderTable};
pub use perm::Permutation;
pub use relation::{BinaryRelation, ForbiddenPattern, LabelSet};
pub use spio::{LinearExtension, Spio};
pub use tree::{DyckPath, PlanarTree};

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan_number(n: u64) -> u64 {
    // binom(2n, n) built incrementally stays integral at every step.
    let binom = (1..=n).fold(1u64, |acc, k| acc * (n + k) / k);
    binom / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::catalan_number;

    #[test]
    fn catalan_numbers() {
        let first: Vec<u64> = (0..=10).map(catalan_number).collect();
        assert_eq!(first, [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
    }
}
