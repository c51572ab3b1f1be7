use num_rational::BigRational;
use num_traits::Signed;
use pfaffschub::coxeter::{bruhat_leq, rank_table, BruhatMode, RankTable};
use pfaffschub::groebner::MonomialIdeal;
use pfaffschub::polyring::{pfaffian, skew_submatrix, Monomial, Polynomial, TermOrder, VarSpace};
use pfaffschub::schubert_ideals::{
    epsilon, epsilon_closed_form, f_ab, g_ab, groebner_generators_ss, is_untwisted, ssj_generators,
    ssj_generators_of, subsets, u_ss_ab, untwist,
};
use pfaffschub::tableaux::ss_rank_table_of_monomial;
use pfaffschub::verify::fpf_instances;
use proptest::prelude::*;

/// A nonempty subset of `[n]` of size at most `k`, ascending.
fn subset(n: usize, k: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::sample::subsequence((1..=n).collect::<Vec<_>>(), 1..=k)
}

/// `(A, B)` of equal size inside `[6]`.
fn pair() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    (1usize..=3).prop_flat_map(|q| {
        (
            prop::sample::subsequence((1..=6).collect::<Vec<_>>(), q),
            prop::sample::subsequence((1..=6).collect::<Vec<_>>(), q),
        )
    })
}

fn skew_monomial(n: usize) -> impl Strategy<Value = Monomial> {
    let cells: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
    prop::sample::subsequence(cells.clone(), 0..=cells.len()).prop_map(Monomial::product_of)
}

fn instance(n: usize) -> impl Strategy<Value = pfaffschub::coxeter::Permutation> {
    prop::sample::select(fpf_instances(n))
}

fn table(z: &pfaffschub::coxeter::Permutation, n: usize) -> RankTable {
    rank_table(z, n, n)
}

proptest! {
    #[test]
    fn epsilon_matches_closed_form(t in subset(8, 8), pick in prop::collection::vec(any::<bool>(), 8)) {
        let s: Vec<usize> = t.iter().zip(&pick).filter(|(_, &p)| p).map(|(&x, _)| x).collect();
        prop_assert_eq!(epsilon(&t, &s), epsilon_closed_form(&t, &s));
    }

    #[test]
    fn untwisting_preserves_the_monomial((a, b) in pair()) {
        let (a2, b2) = untwist(&a, &b).unwrap();
        prop_assert!(is_untwisted(&a2, &b2));
        prop_assert_eq!(u_ss_ab(&a2, &b2).unwrap(), u_ss_ab(&a, &b).unwrap());
    }

    #[test]
    fn initial_term_of_untwisted_block_pfaffian((a, b) in pair()) {
        prop_assume!(is_untwisted(&a, &b));
        let Some(u) = u_ss_ab(&a, &b).unwrap() else { return Ok(()) };
        let f = f_ab(&a, &b).unwrap();
        let (m, c) = f.leading_term(TermOrder::RevLex).unwrap();
        prop_assert_eq!(m, u);
        prop_assert_eq!(c.abs(), BigRational::from_integer(1.into()));
    }

    #[test]
    fn block_pfaffian_expansion(a in subset(7, 3), b in subset(7, 4)) {
        prop_assume!(a.len() <= b.len());
        let a_minus_b: Vec<usize> = a.iter().copied().filter(|x| !b.contains(x)).collect();
        let mut rhs = Polynomial::zero();
        for size in 0..=a_minus_b.len() {
            for pos in subsets(a_minus_b.len(), size) {
                let s: Vec<usize> = pos.iter().map(|&p| a_minus_b[p - 1]).collect();
                let mut bs: Vec<usize> = b.iter().chain(&s).copied().collect();
                bs.sort_unstable();
                let rest: Vec<usize> = a.iter().copied().filter(|x| !s.contains(x)).collect();
                if bs.len() % 2 == 1 || rest.len() % 2 == 1 {
                    continue;
                }
                let sign = if (rest.len() / 2).is_multiple_of(2) { 1 } else { -1 } * epsilon(&a, &s) * epsilon(&bs, &s);
                let term = &pfaffian(&skew_submatrix(&rest, &rest)).unwrap()
                    * &pfaffian(&skew_submatrix(&bs, &bs)).unwrap();
                rhs = if sign == 1 { &rhs + &term } else { &rhs - &term };
            }
        }
        prop_assert_eq!(g_ab(&a, &b), rhs);
    }

    #[test]
    fn monomial_avoids_its_own_rank_ideal(n in 2usize..=6, seed in any::<u64>()) {
        let cells: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
        let m = Monomial::product_of(
            cells.iter().enumerate().filter(|(k, _)| seed >> (k % 64) & 1 == 1).map(|(_, &c)| c),
        );
        let r = ss_rank_table_of_monomial(&m, n).unwrap();
        prop_assert!(!ssj_generators(&r).unwrap().contains(&m));
    }

    #[test]
    fn rank_ideals_of_minimum_add(y in instance(5), z in instance(5)) {
        let (ry, rz) = (table(&y, 5), table(&z, 5));
        let jy = ssj_generators(&ry).unwrap();
        let jz = ssj_generators(&rz).unwrap();
        prop_assert_eq!(ssj_generators(&ry.min(&rz).unwrap()).unwrap(), jy.sum(&jz));
    }

    #[test]
    fn rank_ideal_is_intersection_over_bruhat_minimal(y in instance(5), z in instance(5)) {
        let n = 5;
        let r = table(&y, n).min(&table(&z, n)).unwrap();
        let mode = BruhatMode::Fpf { n };
        let cands: Vec<_> = fpf_instances(n).into_iter().filter(|x| table(x, n).le(&r)).collect();
        let minimal: Vec<MonomialIdeal> = cands
            .iter()
            .filter(|x| !cands.iter().any(|w| w != *x && bruhat_leq(w, x, mode).unwrap()))
            .map(|x| ssj_generators_of(x, n).unwrap())
            .collect();
        prop_assert!(!minimal.is_empty());
        prop_assert_eq!(MonomialIdeal::intersect_all(&minimal, VarSpace::Skew), ssj_generators(&r).unwrap());
    }

    #[test]
    fn squarefree_monomials_realize_their_tables(m in skew_monomial(5)) {
        let r = ss_rank_table_of_monomial(&m, 5).unwrap();
        prop_assert!(r.is_symmetric());
        prop_assert!(fpf_instances(5).iter().any(|z| table(z, 5) == r));
    }
}

#[test]
fn rank_ideals_grow_along_bruhat_order() {
    for n in 1..=5 {
        let zs = fpf_instances(n);
        let mode = BruhatMode::Fpf { n };
        for y in &zs {
            let jy = ssj_generators_of(y, n).unwrap();
            for z in &zs {
                if bruhat_leq(y, z, mode).unwrap() {
                    assert!(
                        ssj_generators_of(z, n).unwrap().contains_ideal(&jy),
                        "{y} <= {z}"
                    );
                }
            }
        }
    }
}

#[test]
fn initial_terms_contain_the_rank_ideal() {
    for n in 1..=6 {
        for z in fpf_instances(n) {
            let init = groebner_generators_ss(&z, n)
                .unwrap()
                .initial_terms_ideal(TermOrder::RevLex);
            assert!(
                init.contains_ideal(&ssj_generators_of(&z, n).unwrap()),
                "{z} at n={n}"
            );
        }
    }
}
