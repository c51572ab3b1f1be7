//! Generator families: Pfaffian generators of the skew-symmetric Schubert
//! ideals, their monomial counterparts, the block Pfaffians `g_AB` and
//! `f_AB`, and the classical minors and antidiagonal monomials.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{
    essential_set, in_fpf_image, rank_table, ss_rothe_diagram, Permutation, RankTable,
};
use crate::groebner::{buchberger, Budget, GroebnerBasis, GroebnerError, MonomialIdeal};
use crate::polyring::{
    determinant, generic_submatrix, pfaffian, skew_entry, skew_submatrix, Monomial, PolyError,
    Polynomial, TermOrder, VarSpace,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("index sets have sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("rank table is not symmetric")]
    NotSymmetric,
    #[error("{0} is not in the fpf image of window {1}")]
    NotInImage(String, usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// What a generator set was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Context {
    Involution { n: usize, z: String },
    Permutation { m: usize, n: usize, w: String },
    Table { n: usize, table: Vec<Vec<usize>> },
}

impl Context {
    pub fn space(&self) -> VarSpace {
        match self {
            Context::Permutation { .. } => VarSpace::General,
            _ => VarSpace::Skew,
        }
    }
}

/// How a single generator was produced; [`Provenance::rebuild`] recomputes it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// `pf(U^ss_RR)`, first witnessed by the rank condition at `(i,j)`.
    Pfaffian { i: usize, j: usize, r: Vec<usize> },
    /// `f_AB` for the pair `(a, b)` drawn at `(i,j)` with `q = rank + 1`.
    Block {
        i: usize,
        j: usize,
        q: usize,
        a: Vec<usize>,
        b: Vec<usize>,
    },
    /// `det(U_AB)` on rows `a`, columns `b`.
    Minor {
        i: usize,
        j: usize,
        q: usize,
        a: Vec<usize>,
        b: Vec<usize>,
    },
}

impl Provenance {
    pub fn rebuild(&self) -> Polynomial {
        match self {
            Provenance::Pfaffian { r, .. } => pfaffian(&skew_submatrix(r, r)).expect("skew"),
            Provenance::Block { a, b, .. } => f_ab(a, b).expect("equal sizes"),
            Provenance::Minor { a, b, .. } => {
                determinant(&generic_submatrix(a, b)).expect("square")
            }
        }
    }
}

mod poly_text {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(gens: &[Polynomial], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = gens.iter().map(|f| f.to_text(TermOrder::RevLex)).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Polynomial>, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter()
            .map(|s| Polynomial::parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub context: Context,
    #[serde(with = "poly_text")]
    pub generators: Vec<Polynomial>,
    pub provenance: Vec<Provenance>,
}

impl GeneratorSet {
    fn new(context: Context) -> Self {
        GeneratorSet {
            context,
            generators: Vec::new(),
            provenance: Vec::new(),
        }
    }

    fn push(&mut self, f: Polynomial, p: Provenance) {
        if !f.is_zero() {
            self.generators.push(f);
            self.provenance.push(p);
        }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn space(&self) -> VarSpace {
        self.context.space()
    }

    pub fn groebner_basis(
        &self,
        order: TermOrder,
        budget: Budget,
    ) -> Result<GroebnerBasis, GroebnerError> {
        buchberger(&self.generators, self.space(), order, budget)
    }

    /// The ideal generated by the initial terms of the generators (not the
    /// initial ideal unless the set is a Gröbner basis).
    pub fn initial_terms_ideal(&self, order: TermOrder) -> MonomialIdeal {
        MonomialIdeal::new(
            self.generators
                .iter()
                .filter_map(|f| f.leading_monomial(order)),
            self.space(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// All `k`-subsets of `[n]`, each ascending, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn sorted_set(a: &[usize]) -> Vec<usize> {
    let mut v = a.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// `A ⊙ B`: ascending `A` matched against descending `B`.
pub fn odot(a: &[usize], b: &[usize]) -> Result<Vec<(usize, usize)>, IdealError> {
    let (a, b) = (sorted_set(a), sorted_set(b));
    if a.len() != b.len() {
        return Err(IdealError::SizeMismatch(a.len(), b.len()));
    }
    Ok(a.iter().copied().zip(b.iter().rev().copied()).collect())
}

/// `u_AB = ∏_{(a,b) ∈ A⊙B} u_ab`.
pub fn u_ab(a: &[usize], b: &[usize]) -> Result<Monomial, IdealError> {
    Ok(Monomial::product_of(odot(a, b)?))
}

/// `u^ss_AB`: zero when `A⊙B` meets the diagonal, otherwise the squarefree
/// product over below-diagonal positions of `A⊙B ∪ B⊙A`.
pub fn u_ss_ab(a: &[usize], b: &[usize]) -> Result<Option<Monomial>, IdealError> {
    let pairs = odot(a, b)?;
    if pairs.iter().any(|&(x, y)| x == y) {
        return Ok(None);
    }
    let cells: BTreeSet<(usize, usize)> =
        pairs.iter().map(|&(x, y)| (x.max(y), x.min(y))).collect();
    Ok(Some(Monomial::product_of(cells)))
}

/// `ε_{T,S}`: sign of the permutation taking `sort(T)` to `sort(T∖S) sort(S)`.
pub fn epsilon(t: &[usize], s: &[usize]) -> i32 {
    let t = sorted_set(t);
    let s = sorted_set(s);
    let mut word: Vec<usize> = t.iter().copied().filter(|x| !s.contains(x)).collect();
    word.extend(s.iter().copied().filter(|x| t.contains(x)));
    let mut inv = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Closed form `(−1)^{|S||T| + C(|S|,2) + ΣI}` where `S = {t_i : i ∈ I}`.
pub fn epsilon_closed_form(t: &[usize], s: &[usize]) -> i32 {
    let t = sorted_set(t);
    let s = sorted_set(s);
    let sum_i: usize = t
        .iter()
        .enumerate()
        .filter(|(_, x)| s.contains(x))
        .map(|(i, _)| i + 1)
        .sum();
    let k = s.len();
    let e = k * t.len() + k * k.saturating_sub(1) / 2 + sum_i;
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `g_AB`: the Pfaffian of `[[U^ss_BB, U^ss_BA], [U^ss_AB, 0]]` with rows
/// `sort(B)` then `sort(A)`.
pub fn g_ab(a: &[usize], b: &[usize]) -> Polynomial {
    let (a, b) = (sorted_set(a), sorted_set(b));
    let nb = b.len();
    let idx: Vec<usize> = b.iter().chain(&a).copied().collect();
    let m = idx.len();
    let mut mat = vec![vec![Polynomial::zero(); m]; m];
    for p in 0..m {
        for q in 0..m {
            if p >= nb && q >= nb {
                continue;
            }
            mat[p][q] = skew_entry(idx[p], idx[q]);
        }
    }
    pfaffian(&mat).expect("block matrix is skew")
}

/// `A ⊖ B`: the `a ∈ A` not matched both ways by `A⊙B`.
pub fn ominus(a: &[usize], b: &[usize]) -> Result<Vec<usize>, IdealError> {
    let pairs = odot(a, b)?;
    let set: BTreeSet<(usize, usize)> = pairs.iter().copied().collect();
    Ok(pairs
        .iter()
        .filter(|&&(x, y)| !set.contains(&(y, x)))
        .map(|&(x, _)| x)
        .collect())
}

/// `f_AB = g_{A⊖B, B}`.
pub fn f_ab(a: &[usize], b: &[usize]) -> Result<Polynomial, IdealError> {
    Ok(g_ab(&ominus(a, b)?, b))
}

/// `(A,B)` with `A` ascending and `B` descending is untwisted unless
/// `b_i > a_j > a_i > b_j` for some `i < j`.
pub fn is_untwisted(a: &[usize], b: &[usize]) -> bool {
    let a = sorted_set(a);
    let mut b = sorted_set(b);
    b.reverse();
    let q = a.len().min(b.len());
    for i in 0..q {
        for j in i + 1..q {
            if b[i] > a[j] && a[j] > a[i] && a[i] > b[j] {
                return false;
            }
        }
    }
    true
}

/// Swaps columns of the two-row array `(A ascending; B descending)` until
/// it is untwisted. Returns `(A', B')` as sorted sets.
pub fn untwist(a: &[usize], b: &[usize]) -> Result<(Vec<usize>, Vec<usize>), IdealError> {
    let a = sorted_set(a);
    let mut b = sorted_set(b);
    if a.len() != b.len() {
        return Err(IdealError::SizeMismatch(a.len(), b.len()));
    }
    b.reverse();
    let (mut top, mut bottom) = (a, b);
    untwist_in_place(&mut top, &mut bottom);
    bottom.reverse();
    Ok((top, bottom))
}

fn untwist_in_place(top: &mut [usize], bottom: &mut [usize]) {
    let q = top.len();
    if q < 2 || bottom[0] < top[1] {
        return;
    }
    let i = (1..q).rev().find(|&k| bottom[0] >= top[k]).unwrap();
    if top[0] >= bottom[i] {
        let new_top: Vec<usize> = bottom[..=i].iter().rev().copied().collect();
        let new_bottom: Vec<usize> = top[..=i].iter().rev().copied().collect();
        top[..=i].copy_from_slice(&new_top);
        bottom[..=i].copy_from_slice(&new_bottom);
    }
    untwist_in_place(&mut top[1..=i], &mut bottom[1..=i]);
}

fn check_image(z: &Permutation, n: usize) -> Result<(), IdealError> {
    if in_fpf_image(z, n) {
        Ok(())
    } else {
        Err(IdealError::NotInImage(z.to_string(), n))
    }
}

/// Cells `(i,j)`, `i ≥ j`, at which rank conditions are imposed.
fn ss_windows(z: &Permutation, n: usize, essential_only: bool) -> Vec<(usize, usize)> {
    if essential_only {
        let d = ss_rothe_diagram(z).expect("fpf tail");
        essential_set(&d)
            .iter()
            .map(|c| (c.row, c.col))
            .filter(|&(i, j)| i <= n && j <= n && i >= j)
            .collect()
    } else {
        (1..=n).flat_map(|i| (1..=i).map(move |j| (i, j))).collect()
    }
}

/// Pfaffians `pf(U^ss_RR)` over even nonempty `R ⊆ [i]` with
/// `|R ∩ [j]| > rank z_[i][j]`, one per `R`.
pub fn ssi_generators(
    z: &Permutation,
    n: usize,
    essential_only: bool,
) -> Result<GeneratorSet, IdealError> {
    check_image(z, n)?;
    let r = rank_table(z, n, n);
    let mut found: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
    for (i, j) in ss_windows(z, n, essential_only) {
        let rank = r.get(i, j);
        for size in (2..=i).step_by(2) {
            for set in subsets(i, size) {
                if set.iter().filter(|&&x| x <= j).count() > rank {
                    found.entry(set).or_insert((i, j));
                }
            }
        }
    }
    let mut out = GeneratorSet::new(Context::Involution {
        n,
        z: z.to_string(),
    });
    for (set, (i, j)) in found {
        let f = pfaffian(&skew_submatrix(&set, &set))?;
        out.push(f, Provenance::Pfaffian { i, j, r: set });
    }
    Ok(out)
}

/// Minimal generators of `J^ss_r`.
pub fn ssj_generators(r: &RankTable) -> Result<MonomialIdeal, IdealError> {
    if !r.is_symmetric() {
        return Err(IdealError::NotSymmetric);
    }
    let n = r.m();
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=i {
            let q = r.get(i, j) + 1;
            if q > j {
                continue;
            }
            let bs = subsets(j, q);
            for a in subsets(i, q) {
                for b in &bs {
                    if let Some(m) = u_ss_ab(&a, b)? {
                        gens.push(m);
                    }
                }
            }
        }
    }
    Ok(MonomialIdeal::new(gens, VarSpace::Skew))
}

/// `J^ss_z = J^ss_{r_z}` on the window `n`.
pub fn ssj_generators_of(z: &Permutation, n: usize) -> Result<MonomialIdeal, IdealError> {
    check_image(z, n)?;
    ssj_generators(&rank_table(z, n, n))
}

/// The `f_AB` over untwisted `(A,B) ∈ C([i],q) × C([j],q)`, `i ≥ j`,
/// `q = rank z_[i][j] + 1`, one per `(A⊖B, B)`.
pub fn groebner_generators_ss(z: &Permutation, n: usize) -> Result<GeneratorSet, IdealError> {
    check_image(z, n)?;
    let r = rank_table(z, n, n);
    let mut seen: BTreeMap<(Vec<usize>, Vec<usize>), Provenance> = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=i {
            let q = r.get(i, j) + 1;
            if q > j {
                continue;
            }
            let bs = subsets(j, q);
            for a in subsets(i, q) {
                for b in &bs {
                    if !is_untwisted(&a, b) {
                        continue;
                    }
                    let key = (ominus(&a, b)?, b.clone());
                    if (key.0.len() + key.1.len()) % 2 == 1 {
                        continue;
                    }
                    seen.entry(key).or_insert_with(|| Provenance::Block {
                        i,
                        j,
                        q,
                        a: a.clone(),
                        b: b.clone(),
                    });
                }
            }
        }
    }
    let mut out = GeneratorSet::new(Context::Involution {
        n,
        z: z.to_string(),
    });
    for ((am, b), prov) in seen {
        out.push(g_ab(&am, &b), prov);
    }
    Ok(out)
}

/// Minors `det(U_AB)` of size `rank w_[i][j] + 1` over `[m]×[n]`, and the
/// monomial ideal `J_w` of their antidiagonal terms `u_AB`.
pub fn classical_generators(
    w: &Permutation,
    m: usize,
    n: usize,
) -> Result<(GeneratorSet, MonomialIdeal), IdealError> {
    let r = rank_table(w, m, n);
    let mut seen: BTreeMap<(Vec<usize>, Vec<usize>), _> = BTreeMap::new();
    let mut monos = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            let q = r.get(i, j) + 1;
            if q > i || q > j {
                continue;
            }
            let bs = subsets(j, q);
            for a in subsets(i, q) {
                for b in &bs {
                    monos.push(u_ab(&a, b)?);
                    seen.entry((a.clone(), b.clone())).or_insert((i, j, q));
                }
            }
        }
    }
    let mut out = GeneratorSet::new(Context::Permutation {
        m,
        n,
        w: w.to_one_line(),
    });
    for ((a, b), (i, j, q)) in seen {
        let f = determinant(&generic_submatrix(&a, &b))?;
        out.push(f, Provenance::Minor { i, j, q, a, b });
    }
    Ok((out, MonomialIdeal::new(monos, VarSpace::General)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{fpf_standardize, z_square};
    use crate::groebner::reduce;

    fn z6(cycles: &str) -> Permutation {
        fpf_standardize(&Permutation::parse_cycles(cycles).unwrap(), 6).unwrap()
    }

    fn m(s: &str) -> Monomial {
        Polynomial::parse(s)
            .unwrap()
            .terms()
            .next()
            .unwrap()
            .0
            .clone()
    }

    fn ideal(monos: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(monos.iter().map(|s| m(s)), VarSpace::Skew)
    }

    #[test]
    fn odot_examples() {
        assert_eq!(odot(&[1], &[2]).unwrap(), vec![(1, 2)]);
        assert_eq!(
            odot(&[2, 3, 4, 5], &[1, 3, 4, 6]).unwrap(),
            vec![(2, 6), (3, 4), (4, 3), (5, 1)]
        );
        assert!(odot(&[1, 2], &[1]).is_err());
        assert_eq!(
            u_ab(&[1, 3, 4], &[1, 2, 3]).unwrap(),
            m("u[1,3]*u[3,2]*u[4,1]")
        );
    }

    #[test]
    fn u_ss_examples() {
        assert_eq!(u_ss_ab(&[1, 2, 3], &[1, 2, 3]).unwrap(), None);
        assert_eq!(
            u_ss_ab(&[2, 3, 4], &[1, 2, 3]).unwrap(),
            Some(m("u[3,2]*u[4,1]"))
        );
        assert_eq!(u_ss_ab(&[3, 4], &[1, 2]).unwrap(), Some(m("u[4,1]*u[3,2]")));
        assert_eq!(
            u_ss_ab(&[2, 3, 4, 5], &[1, 3, 4, 6]).unwrap(),
            Some(m("u[4,3]*u[6,2]*u[5,1]"))
        );
    }

    #[test]
    fn ominus_example() {
        assert_eq!(ominus(&[2, 3, 4, 5], &[6, 4, 3, 1]).unwrap(), vec![2, 5]);
    }

    #[test]
    fn epsilon_agrees_with_closed_form() {
        for n in 0..=6 {
            for k in 0..=n {
                for t in subsets(8, n) {
                    for pick in subsets(n, k) {
                        let s: Vec<usize> = pick.iter().map(|&p| t[p - 1]).collect();
                        assert_eq!(epsilon(&t, &s), epsilon_closed_form(&t, &s), "{t:?} {s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn f_ab_initial_terms() {
        let o = TermOrder::RevLex;
        let f = f_ab(&[2, 3, 4, 5], &[6, 4, 3, 1]).unwrap();
        let (lm, lc) = f.leading_term(o).unwrap();
        assert_eq!(lm, m("u[5,3]*u[6,1]*u[4,2]"));
        // Coefficient signs follow the pf definition; only ±1 is asserted upstream.
        let one = crate::polyring::parse_rational("1").unwrap();
        assert_eq!(lc, one);
        let g = f_ab(&[1, 3, 4, 6], &[2, 3, 4, 5]).unwrap();
        assert!(is_untwisted(&[1, 3, 4, 6], &[2, 3, 4, 5]));
        let (lm, lc) = g.leading_term(o).unwrap();
        assert_eq!(Some(lm), u_ss_ab(&[1, 3, 4, 6], &[2, 3, 4, 5]).unwrap());
        assert_eq!(lc, one);
        assert!(f_ab(&[1, 2, 3], &[1, 2, 3]).unwrap().is_zero());
    }

    #[test]
    fn untwist_example() {
        let (a, b) = untwist(&[2, 3, 4, 5], &[6, 4, 3, 1]).unwrap();
        assert_eq!((a.clone(), b.clone()), (vec![1, 3, 4, 6], vec![2, 3, 4, 5]));
        assert!(is_untwisted(&a, &b));
        assert!(!is_untwisted(&[2, 3, 4, 5], &[6, 4, 3, 1]));
        assert_eq!(untwist(&[1, 2], &[3, 4]).unwrap(), (vec![1, 2], vec![3, 4]));
    }

    #[test]
    fn untwist_exhaustive() {
        for k in 1..=6 {
            for l in 1..=k {
                for q in 1..=l {
                    for a in subsets(k, q) {
                        for b in subsets(l, q) {
                            let (a2, b2) = untwist(&a, &b).unwrap();
                            assert!(is_untwisted(&a2, &b2), "{a:?} {b:?}");
                            assert_eq!(u_ss_ab(&a, &b).unwrap(), u_ss_ab(&a2, &b2).unwrap());
                            assert!(a2.iter().all(|&x| x <= k) && b2.iter().all(|&x| x <= l));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ssj_example() {
        let z = z6("(1,2)(3,6)(4,5)");
        let j = ssj_generators_of(&z, 6).unwrap();
        assert_eq!(
            j,
            ideal(&["u[3,2]*u[4,1]", "u[3,2]*u[5,1]", "u[3,1]*u[4,2]*u[5,1]"])
        );
    }

    #[test]
    fn z_square_gives_all_variables() {
        for n in 2..=5 {
            let z = z_square(n);
            let all: Vec<(usize, usize)> =
                (1..=n).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
            assert_eq!(
                ssj_generators_of(&z, n).unwrap(),
                MonomialIdeal::of_variables(all.clone(), VarSpace::Skew)
            );
            let g = ssi_generators(&z, n, false).unwrap();
            for &(i, j) in &all {
                assert!(
                    g.generators.contains(&(-&Polynomial::u(i, j))),
                    "n={n} u{i}{j}"
                );
            }
        }
    }

    #[test]
    fn ssi_example_ideal() {
        let z = z6("(1,4)(2,6)(3,5)");
        let expect = [
            "u[2,1]",
            "u[3,2]",
            "u[3,1]",
            "-u[4,1]*u[5,2] + u[5,1]*u[4,2]",
        ]
        .iter()
        .map(|s| Polynomial::parse(s).unwrap())
        .collect::<Vec<_>>();
        let want = buchberger(
            &expect,
            VarSpace::Skew,
            TermOrder::RevLex,
            Budget::default(),
        )
        .unwrap();
        for ess in [false, true] {
            let g = ssi_generators(&z, 6, ess).unwrap();
            let gb = g
                .groebner_basis(TermOrder::RevLex, Budget::default())
                .unwrap();
            assert_eq!(gb, want, "essential_only={ess}");
            assert_eq!(
                gb.initial_ideal(),
                ideal(&["u[2,1]", "u[3,2]", "u[3,1]", "u[4,2]*u[5,1]"])
            );
        }
        let ess = ssi_generators(&z, 6, true).unwrap();
        assert_eq!(ess.len(), 6);
    }

    #[test]
    fn ssi_empty_for_maximal_table() {
        // 1_FPF is Bruhat-minimal, so its ranks are maximal
        let z = Permutation::one_fpf();
        assert!(ssi_generators(&z, 4, false).unwrap().is_empty());
        assert!(ssj_generators_of(&z, 4).unwrap().is_zero());
    }

    #[test]
    fn non_groebner_pair() {
        let z = z6("(1,2)(3,6)(4,5)");
        let g = ssi_generators(&z, 6, true).unwrap();
        let gb = g
            .groebner_basis(TermOrder::RevLex, Budget::default())
            .unwrap();
        assert_eq!(gb.initial_ideal(), ssj_generators_of(&z, 6).unwrap());
        let f = Polynomial::parse("u[3,2]*u[4,1] - u[3,1]*u[4,2] + u[2,1]*u[4,3]").unwrap();
        let h = Polynomial::parse("u[3,2]*u[5,1] - u[3,1]*u[5,2] + u[2,1]*u[5,3]").unwrap();
        assert!(!crate::groebner::is_groebner_basis(
            &[f.clone(), h.clone()],
            TermOrder::RevLex
        ));
        let s = &(&Polynomial::u(4, 1) * &h) - &(&Polynomial::u(5, 1) * &f);
        let r = reduce(&s, &[f, h], TermOrder::RevLex);
        assert_eq!(
            r.leading_monomial(TermOrder::RevLex),
            Some(m("u[3,1]*u[4,2]*u[5,1]"))
        );
    }

    #[test]
    fn groebner_generators_example() {
        let z = z6("(1,2)(3,6)(4,5)");
        let g = groebner_generators_ss(&z, 6).unwrap();
        assert_eq!(
            g.initial_terms_ideal(TermOrder::RevLex),
            ssj_generators_of(&z, 6).unwrap()
        );
        assert!(crate::groebner::is_groebner_basis(
            &g.generators,
            TermOrder::RevLex
        ));
    }

    #[test]
    fn classical_2143() {
        let w = Permutation::parse_one_line("2143").unwrap();
        let (i, j) = classical_generators(&w, 3, 3).unwrap();
        let jw = MonomialIdeal::new([m("u[1,1]"), m("u[3,1]*u[2,2]*u[1,3]")], VarSpace::General);
        assert_eq!(j, jw);
        let gb = i
            .groebner_basis(TermOrder::RevLex, Budget::default())
            .unwrap();
        let det3 = determinant(&generic_submatrix(&[1, 2, 3], &[1, 2, 3])).unwrap();
        let want = buchberger(
            &[Polynomial::u(1, 1), det3],
            VarSpace::General,
            TermOrder::RevLex,
            Budget::default(),
        )
        .unwrap();
        assert_eq!(gb, want);
        let (i0, j0) = classical_generators(&Permutation::identity(), 3, 3).unwrap();
        assert!(i0.is_empty() && j0.is_zero());
    }

    #[test]
    fn provenance_rebuilds_and_json_round_trips() {
        let z = z6("(1,2)(3,6)(4,5)");
        for g in [
            ssi_generators(&z, 6, true).unwrap(),
            groebner_generators_ss(&z, 6).unwrap(),
        ] {
            for (f, p) in g.generators.iter().zip(&g.provenance) {
                assert_eq!(&p.rebuild(), f);
            }
            let back = GeneratorSet::from_json(&g.to_json()).unwrap();
            assert_eq!(back, g);
        }
    }
}
