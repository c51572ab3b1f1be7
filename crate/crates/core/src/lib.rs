//! Skew-symmetric matrix Schubert varieties: Pfaffian ideals, their Gröbner
//! bases, fpf-involution pipe dreams, subword complexes and symplectic
//! Grothendieck polynomials, together with the classical matrix Schubert case.

pub mod complexes;
pub mod coxeter;
pub mod groebner;
pub mod grothendieck;
pub mod pipedreams;
pub mod polyring;
pub mod schubert_ideals;
pub mod tableaux;
pub mod verify;
