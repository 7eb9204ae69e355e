//! Exact computation of Long-Moody type braid group representations.
//!
//! The universal Long-Moody matrices live over the group ring of
//! `F_n ⋊ B_n`; concrete representations arise by specializing each entry.
//! Variants cover subgroups (pure braids and Gassner), mixed braid groups
//! and the Lawrence tower, the universal Lawrence representation with its
//! Hecke quadratic relation, and the reduced construction.

pub mod braid;
pub mod error;
pub mod exec;
pub mod free;
pub mod garside;
pub mod gassner;
pub mod group_ring;
pub mod hecke;
pub mod io;
pub mod lawrence;
pub mod long_moody;
pub mod matrix;
pub mod perm;
pub mod poly;
pub mod rep;
pub mod semidirect;
pub mod subgroup;
pub mod suites;
pub mod word;

pub use braid::{braid_eq, BraidWord};
pub use error::{Error, Result};
pub use exec::Exec;
pub use free::{artin_act, free_reduce, FreeWord};
pub use garside::GarsideNf;
pub use group_ring::{GroupRingElement, GroupRingMatrix};
pub use matrix::{Matrix, Ring};
pub use poly::{LaurentPoly, Poly, Vars};
pub use semidirect::{embed_sd_into_braid, sd_inv, sd_mul, SemidirectElement};
pub use word::Letter;
