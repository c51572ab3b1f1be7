//! Symplectic Grothendieck polynomials, from extended pipe dreams and from
//! the K-polynomial of the monomial ideal `J^ss_z`.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::coxeter::{in_fpf_image, Diagram, Permutation};
use crate::groebner::{KPolynomial, MonomialIdeal};
use crate::pipedreams::{enumerate_fp, enumerate_fp_plus, triangle, PipeDreamError};
use crate::polyring::VarSpace;
use crate::schubert_ideals::{ssj_generators_of, IdealError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrothError {
    #[error("{0} is not in the fpf image of window {1}")]
    NotInImage(String, usize),
    #[error("inclusion-exclusion over {0} pipe dreams is too large")]
    TooManyDreams(usize),
    #[error(transparent)]
    Dreams(#[from] PipeDreamError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Largest `|FP(z)|` accepted by [`groth_sp_inclusion_exclusion`].
pub const MAX_IE_DREAMS: usize = 16;

fn check(z: &Permutation, n: usize) -> Result<(), GrothError> {
    if in_fpf_image(z, n) {
        Ok(())
    } else {
        Err(GrothError::NotInImage(z.to_string(), n))
    }
}

/// `∏_{(i,j) ∈ D} (1 − a_i a_j)`.
pub fn product_over(d: &Diagram) -> KPolynomial {
    d.iter().fold(KPolynomial::one(), |k, c| {
        &k * &KPolynomial::one_minus(c.row, c.col)
    })
}

/// `Σ_{D ∈ FP⁺(z), D ⊆ ▽_n} (−1)^{|D| − ℓ_fpf(z)} ∏_{(i,j) ∈ D} (1 − a_i a_j)`.
pub fn groth_sp_dreams(z: &Permutation, n: usize) -> Result<KPolynomial, GrothError> {
    check(z, n)?;
    let q: Diagram = triangle(n).into_iter().collect();
    let l = z.fpf_length().expect("fpf");
    let mut total = KPolynomial::zero();
    for d in enumerate_fp_plus(z, n, &q)? {
        let p = product_over(&d);
        total = if (d.len() - l).is_multiple_of(2) {
            &total + &p
        } else {
            &total - &p
        };
    }
    Ok(total)
}

/// `K(J^ss_z)` by pivot splitting.
pub fn groth_sp_kpoly(z: &Permutation, n: usize) -> Result<KPolynomial, GrothError> {
    check(z, n)?;
    Ok(ssj_generators_of(z, n)?.k_polynomial())
}

/// `Σ_{∅ ≠ S ⊆ FP(z)} (−1)^{|S|−1} ∏_{(i,j) ∈ ∪S} (1 − a_i a_j)`.
pub fn groth_sp_inclusion_exclusion(z: &Permutation, n: usize) -> Result<KPolynomial, GrothError> {
    check(z, n)?;
    let fp = enumerate_fp(z, n)?;
    if fp.len() > MAX_IE_DREAMS {
        return Err(GrothError::TooManyDreams(fp.len()));
    }
    let mut total = KPolynomial::zero();
    for mask in 1u32..(1 << fp.len()) {
        let union = (0..fp.len())
            .filter(|&k| mask >> k & 1 == 1)
            .fold(Diagram::new(), |acc, k| acc.union(&fp[k]));
        let p = product_over(&union);
        total = if mask.count_ones() % 2 == 1 {
            &total + &p
        } else {
            &total - &p
        };
    }
    Ok(total)
}

/// `J^ss_z` rebuilt as the intersection of the pipe-dream ideals.
pub fn dream_ideal_intersection(z: &Permutation, n: usize) -> Result<MonomialIdeal, GrothError> {
    check(z, n)?;
    let ideals: Vec<MonomialIdeal> = enumerate_fp(z, n)?
        .iter()
        .map(|d| MonomialIdeal::of_variables(d.iter().map(|c| (c.row, c.col)), VarSpace::Skew))
        .collect();
    Ok(MonomialIdeal::intersect_all(&ideals, VarSpace::Skew))
}

/// Whether `groth_sp_kpoly` agrees on the windows `n < n2`.
pub fn groth_sp_stability(z: &Permutation, n: usize, n2: usize) -> Result<bool, GrothError> {
    check(z, n)?;
    check(z, n2)?;
    assert!(n < n2, "windows must increase");
    Ok(groth_sp_kpoly(z, n)? == groth_sp_kpoly(z, n2)?)
}

/// Value at `a_i = 1`: one for `1_FPF`, zero otherwise.
pub fn value_at_one(k: &KPolynomial) -> BigInt {
    k.eval_at_one()
}

/// Lowest total degree after `a_i ↦ 1 − x_i`.
pub fn lowest_x_degree(k: &KPolynomial) -> Option<u32> {
    k.one_minus_x().min_degree()
}

/// Whether `value_at_one` matches the expected Kronecker delta.
pub fn specialization_ok(z: &Permutation, k: &KPolynomial) -> bool {
    let want = if z.fpf_length() == Ok(0) {
        BigInt::one()
    } else {
        BigInt::from(0)
    };
    value_at_one(k) == want
}
