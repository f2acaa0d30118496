//! Exact computer algebra for tridiagonal determinant families, local Heun
//! and hypergeometric series, and the polynomial model of SU(2).
//!
//! Everything is computed over the exact scalar fields Q and Q(i); there is
//! no floating point anywhere in this crate. The main entry points are:
//!
//! - [`seqdet`]: the determinant families `P`, `Q`, `Cay`, `Kraw`, `Sylv`,
//!   their zero sets, factorization checks, and the palindromic-pair checker.
//! - [`series`]: power-series solutions of Heun-type equations, the
//!   hypergeometric polynomials `a`, `b`, `c±`, and polynomiality tests.
//! - [`rep`]: the representation `pi_n` of SU(2) on polynomials of degree at
//!   most `n`, its differential, and the two realized second-order operators.
//! - [`solver`]: exact kernels of the realized operators, their dimensions,
//!   and the classification of the finite group action on them.
//! - [`ktype`]: parameter-set membership and degree-progression lists,
//!   cross-checked against the solver.
//! - [`verify`]: machine-checkable suites tying all of the above together.

pub mod scalar;
pub mod poly;
pub mod linalg;
pub mod roots;
pub mod sets;
pub mod seqdet;
pub mod series;
pub mod rep;
pub mod solver;
pub mod ktype;
pub mod verify;

pub use poly::Poly;
pub use scalar::{GaussRat, Rat, Scalar};
