//! Rational Dyck paths: Dyck paths of height at most two whose runs of
//! consecutive 1-peaks are followed by enough consecutive 0-valleys, governed
//! by a positive rational `q = r/s`.
//!
//! - [`path`]: the path type, text form and block factorization.
//! - [`param`]: `q = r/s` and the integer quantities derived from it.
//! - [`classes`]: membership and generation for `R`, `R̃` and `Q`, plus a
//!   brute-force oracle.
//! - [`counting`]: recurrences, generating functions and exact series expansion.
//! - [`compositions`]: restricted compositions and their bijection with paths.
//! - [`qmap`]: the map φ between `Q` and `R̃` and its collisions.

pub mod classes;
pub mod compositions;
pub mod counting;
pub mod error;
pub mod param;
pub mod path;
pub mod qmap;

pub use classes::{generate, member, oracle_all_height2, oracle_generate, Generator, PathClass};
pub use compositions::{comp_to_path, enumerate_compositions, path_to_comp, Composition, PartSet};
pub use counting::{
    chi_gf, compositions_gf, count_enumeration, count_recurrence, delta_gf, delta_tilde_gf,
    series_coeffs, CountSource, CountTable, Polynomial, RationalSeries,
};
pub use error::{Error, Result};
pub use param::RationalParam;
pub use path::{Block, DyckPath, Factorization, Step};
pub use qmap::{check_bijection, collision_pair, phi, phi_inv, PhiReport};
