//! Exact computation of Plücker degrees of Schubert varieties.
//!
//! The degree `f^λ` is computed four independent ways and checked against a
//! brute-force count of standard Young tableaux:
//!
//! * [`partitions::degree_hook`]: the hook length formula,
//! * [`schurdet::degree_determinant`]: `|λ|! · Δ_λ(exp t)`,
//! * [`ringb::degree_derivative`]: `∂^d S_λ / ∂x_1^d`,
//! * [`grasshom::degree_cap`]: `σ_1^d ∩ Ω^λ` in the homology of a Grassmannian.
//!
//! The remaining modules verify the surrounding identities: the action of
//! `c_t(Q_r)` on `H_*(G(r,n))` through differential operators on `B`, Giambelli's
//! formula, and Schubert derivations on finite exterior algebras.
//!
//! All arithmetic is exact.

pub mod det;
pub mod error;
pub mod fock;
pub mod grasshom;
pub mod num;
pub mod partitions;
pub mod ringb;
pub mod schurdet;
pub mod symz;

pub use error::{Error, Result};
pub use num::Q;
pub use partitions::Partition;
