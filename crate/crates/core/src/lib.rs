//! Computer-algebra engine for holonomic structures of Ising-class
//! integrals: exact series generators for form factors and the
//! `Phi_H`/`Phi_D` families, series-to-ODE discovery (exact, mod-prime and
//! floating point), a noncommutative differential-operator calculus
//! (factorization, symmetric powers, intertwiners, direct sums, scaling
//! limits), and the elliptic/modular side (Landen fixed points, the
//! j-function, complex multiplication, Nickelian singularities).

pub mod num;
pub mod rings;

pub mod diff_op;
pub mod series_gen;

pub mod ode_fit;

pub mod dd;
pub mod modular;
pub mod scaling;
pub mod verify;

pub mod cache;
pub mod data;
pub mod io;
