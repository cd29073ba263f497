//! Root data and exact characters for the orthogonal Lie algebras of types
//! `B_r` and `D_r`.

mod branching;
mod character;
mod freudenthal;
mod roots;
mod weight;

pub use branching::branch_b_to_d;
pub use character::{elementary_char, irrep_char, Character};
pub use freudenthal::{dominant_rep, dominant_weights_below, freudenthal_mults, weyl_orbit_size};
pub use roots::{build_root_system, weyl_dim, RootSystem};
pub use weight::{parse_parts, Family, Weight};
