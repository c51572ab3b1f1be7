//! Fomin growth diagrams, rank tables of monomials and realization of rank
//! tables by permutations.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{fpf_standardize, rank_table, Permutation, RankTable};
use crate::polyring::{Monomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauxError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix rows have different lengths")]
    Ragged,
    #[error("increment condition fails at ({0},{1})")]
    Increment(usize, usize),
    #[error("column-propagation condition fails at ({0},{1})")]
    Propagation(usize, usize),
    #[error("diagonal entry r({0},{0}) is odd")]
    OddDiagonal(usize),
    #[error("monomial has a variable that is not below the diagonal")]
    NotSkew,
}

/// A partition as a weakly decreasing sequence of positive parts.
pub type Partition = Vec<u32>;

fn part(p: &Partition, k: usize) -> u32 {
    p.get(k).copied().unwrap_or(0)
}

/// Number of odd-length columns of `λ`.
pub fn odd_columns(lambda: &Partition) -> usize {
    let width = part(lambda, 0);
    (1..=width)
        .filter(|&c| lambda.iter().filter(|&&p| p >= c).count() % 2 == 1)
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthDiagram {
    m: usize,
    n: usize,
    shapes: Vec<Vec<Partition>>,
}

impl GrowthDiagram {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `λ(i,j)` for `0 ≤ i ≤ m`, `0 ≤ j ≤ n`.
    pub fn shape(&self, i: usize, j: usize) -> &Partition {
        &self.shapes[i][j]
    }

    /// The table `(i,j) ↦ ℓ(λ(i,j))`.
    pub fn length_table(&self) -> RankTable {
        RankTable::from_fn(self.m, self.n, |i, j| self.shapes[i][j].len())
    }
}

/// The growth diagram of a nonnegative integer matrix by the local rule
/// `λ_k = max(μ_k, ν_k) + carry`, `carry ← min(μ_k, ν_k) − ρ_k`.
pub fn growth_diagram(x: &[Vec<u32>]) -> Result<GrowthDiagram, TableauxError> {
    let m = x.len();
    let n = x.first().map_or(0, |r| r.len());
    if x.iter().any(|r| r.len() != n) {
        return Err(TableauxError::Ragged);
    }
    let mut shapes = vec![vec![Partition::new(); n + 1]; m + 1];
    for i in 1..=m {
        for j in 1..=n {
            let rho = &shapes[i - 1][j - 1];
            let mu = &shapes[i - 1][j];
            let nu = &shapes[i][j - 1];
            let mut carry = x[i - 1][j - 1];
            let mut lambda = Partition::new();
            let mut k = 0;
            loop {
                let (a, b) = (part(mu, k), part(nu, k));
                let l = a.max(b) + carry;
                if l == 0 {
                    break;
                }
                lambda.push(l);
                carry = a.min(b) - part(rho, k);
                k += 1;
            }
            shapes[i][j] = lambda;
        }
    }
    Ok(GrowthDiagram { m, n, shapes })
}

/// The 0/1 matrix on `[m]×[n]` marking variables dividing `mono`.
pub fn support_matrix(mono: &Monomial, m: usize, n: usize) -> Vec<Vec<u32>> {
    let mut x = vec![vec![0; n]; m];
    for v in mono.vars() {
        let (i, j) = (v.row as usize, v.col as usize);
        if i <= m && j <= n {
            x[i - 1][j - 1] = 1;
        }
    }
    x
}

/// `r_M(i,j)`: the largest `r` with `u_AB | M` for some `A ⊆ [i]`, `B ⊆ [j]` of size `r`.
pub fn rank_table_of_monomial(mono: &Monomial, m: usize, n: usize) -> RankTable {
    growth_diagram(&support_matrix(mono, m, n))
        .expect("rectangular")
        .length_table()
}

/// `dbl(u_ij) = u_ij u_ji`.
pub fn dbl(mono: &Monomial) -> Monomial {
    Monomial::from_pairs(mono.factors().iter().flat_map(|&(v, e)| {
        [
            (v, e),
            (
                Var {
                    row: v.col,
                    col: v.row,
                },
                e,
            ),
        ]
    }))
}

/// `r^ss_M` on `[n]×[n]`, computed as `r_{dbl(M)}`.
pub fn ss_rank_table_of_monomial(mono: &Monomial, n: usize) -> Result<RankTable, TableauxError> {
    if mono.vars().any(|v| v.row <= v.col) {
        return Err(TableauxError::NotSkew);
    }
    Ok(rank_table_of_monomial(&dbl(mono), n, n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealizeMode {
    Classical,
    Fpf,
}

fn check_conditions(r: &RankTable) -> Result<(), TableauxError> {
    for i in 1..=r.m() {
        for j in 1..=r.n() {
            let dr = r.get(i, j) as i64 - r.get(i, j - 1) as i64;
            let dc = r.get(i, j) as i64 - r.get(i - 1, j) as i64;
            if !(0..=1).contains(&dr) || !(0..=1).contains(&dc) {
                return Err(TableauxError::Increment(i, j));
            }
            if r.get(i - 1, j) as i64 - r.get(i - 1, j - 1) as i64 == 1 && dr != 1 {
                return Err(TableauxError::Propagation(i, j));
            }
        }
    }
    Ok(())
}

/// Positions `(i,j)` with `r(i,j) − r(i,j−1) = 1` and `r(i−1,j) − r(i−1,j−1) = 0`.
fn marked_positions(r: &RankTable) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=r.m() {
        for j in 1..=r.n() {
            if r.get(i, j) - r.get(i, j - 1) == 1 && r.get(i - 1, j) == r.get(i - 1, j - 1) {
                out.push((i, j));
            }
        }
    }
    out
}

/// The unique `w ∈ S^{m,n}_∞` whose `m×n` partial permutation matrix has 1s at `marks`.
fn complete_partial_permutation(marks: &[(usize, usize)], m: usize, n: usize) -> Permutation {
    let mut row_image = vec![0usize; m + 1];
    let mut used_cols = vec![false; n + 1];
    for &(i, j) in marks {
        row_image[i] = j;
        used_cols[j] = true;
    }
    let unmarked_rows = (1..=m).filter(|&i| row_image[i] == 0).count();
    let mut next_big = n + 1;
    let mut images = Vec::new();
    for i in 1..=m {
        if row_image[i] == 0 {
            images.push(next_big);
            next_big += 1;
        } else {
            images.push(row_image[i]);
        }
    }
    // rows past m take the unused values in increasing order
    let free_cols: Vec<usize> = (1..=n).filter(|&j| !used_cols[j]).collect();
    images.extend(free_cols);
    debug_assert_eq!(next_big, n + 1 + unmarked_rows);
    Permutation::from_one_line(&images).expect("completion is a permutation")
}

/// Finds a permutation with the given rank table on its window.
///
/// Classical mode returns the unique `w ∈ S^{m,n}_∞` with `r_w = r` on `[m]×[n]`.
/// Fpf mode needs a symmetric `n×n` table with even diagonal and returns
/// `z ∈ FPF_n(I_n)` with `r_z = r`; the involution on `[n]` is read off the
/// marked positions and its remaining points are standardized.
pub fn realize_rank_table(r: &RankTable, mode: RealizeMode) -> Result<Permutation, TableauxError> {
    if mode == RealizeMode::Fpf {
        if !r.is_symmetric() {
            return Err(TableauxError::NotSymmetric);
        }
        if let Some(i) = (1..=r.n()).find(|&i| r.get(i, i) % 2 == 1) {
            return Err(TableauxError::OddDiagonal(i));
        }
    }
    check_conditions(r)?;
    let marks = marked_positions(r);
    let w = complete_partial_permutation(&marks, r.m(), r.n());
    debug_assert_eq!(&rank_table(&w, r.m(), r.n()), r);
    match mode {
        RealizeMode::Classical => Ok(w),
        RealizeMode::Fpf => {
            let n = r.n();
            let images: Vec<usize> = (1..=n)
                .map(|i| {
                    let v = w.apply(i);
                    if v <= n {
                        v
                    } else {
                        i
                    }
                })
                .collect();
            let y =
                Permutation::from_one_line(&images).expect("symmetric marks give an involution");
            let z = fpf_standardize(&y, n).expect("involution on [n]");
            debug_assert_eq!(&rank_table(&z, n, n), r);
            Ok(z)
        }
    }
}

/// For symmetric `X`, the number of odd columns of `λ(i,i)` for `i = 1..=n`.
pub fn odd_column_counts(x: &[Vec<u32>]) -> Result<Vec<usize>, TableauxError> {
    let n = x.len();
    if x.iter().any(|r| r.len() != n) {
        return Err(TableauxError::Ragged);
    }
    for i in 0..n {
        for j in 0..i {
            if x[i][j] != x[j][i] {
                return Err(TableauxError::NotSymmetric);
            }
        }
    }
    let g = growth_diagram(x)?;
    Ok((1..=n).map(|i| odd_columns(g.shape(i, i))).collect())
}
