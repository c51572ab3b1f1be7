use num_rational::BigRational;
use pfaffschub::groebner::{
    buchberger, hilbert_series_check, is_groebner_basis, monomials_of_degree, reduce, Budget,
    KPolynomial, MonomialIdeal, Pivot,
};
use pfaffschub::polyring::{Monomial, Polynomial, TermOrder, Var, VarSpace};
use proptest::prelude::*;

fn gen_vars() -> Vec<Var> {
    (1..=2)
        .flat_map(|i| (1..=2).map(move |j| Var::new(i, j)))
        .collect()
}

fn skew_vars() -> Vec<Var> {
    (1..=4)
        .flat_map(|i| (1..i).map(move |j| Var::new(i, j)))
        .collect()
}

/// A homogeneous quadric in the four variables of a 2x2 generic matrix.
fn quadric() -> impl Strategy<Value = Polynomial> {
    let quads = monomials_of_degree(&gen_vars(), 2);
    prop::collection::vec((0..quads.len(), -3i64..=3), 1..4).prop_map(move |ts| {
        Polynomial::from_terms(
            ts.into_iter()
                .map(|(k, c)| (quads[k].clone(), BigRational::from_integer(c.into()))),
        )
    })
}

fn ideal_gens() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(quadric(), 1..4)
        .prop_map(|v| v.into_iter().filter(|f| !f.is_zero()).collect())
}

fn skew_monomial() -> impl Strategy<Value = Monomial> {
    let vars = skew_vars();
    prop::collection::vec((0..vars.len(), 1u32..=2), 1..4)
        .prop_map(move |v| Monomial::from_pairs(v.into_iter().map(|(k, e)| (vars[k], e))))
}

fn monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(skew_monomial(), 1..4).prop_map(|g| MonomialIdeal::new(g, VarSpace::Skew))
}

fn order() -> impl Strategy<Value = TermOrder> {
    prop_oneof![Just(TermOrder::RevLex), Just(TermOrder::DegLex)]
}

fn gb(gens: &[Polynomial], o: TermOrder) -> pfaffschub::groebner::GroebnerBasis {
    buchberger(gens, VarSpace::General, o, Budget::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_basis_is_a_fixed_point(o in order(), gens in ideal_gens()) {
        let g = gb(&gens, o);
        prop_assert!(g.reduced);
        prop_assert!(is_groebner_basis(&g.basis, o));
        for f in &gens {
            prop_assert!(reduce(f, &g.basis, o).is_zero());
        }
        prop_assert_eq!(gb(&g.basis, o).basis, g.basis.clone());
    }

    #[test]
    fn initial_ideal_has_the_same_hilbert_function(gens in ideal_gens()) {
        let cmp = hilbert_series_check(&gens, VarSpace::General, &gen_vars(), 4).unwrap();
        prop_assert!(cmp.agrees(), "{:?}", cmp);
    }

    #[test]
    fn initial_ideals_of_sums(o in order(), a in ideal_gens(), b in ideal_gens()) {
        let ia = gb(&a, o).initial_ideal();
        let ib = gb(&b, o).initial_ideal();
        let sum: Vec<Polynomial> = a.iter().chain(&b).cloned().collect();
        let isum = gb(&sum, o).initial_ideal();
        prop_assert!(isum.contains_ideal(&ia));
        prop_assert!(isum.contains_ideal(&ia.sum(&ib)));
        // equal initial ideals over a containment force equality
        if isum == ia {
            let ga = gb(&a, o);
            for f in &b {
                prop_assert!(ga.contains(f));
            }
        }
    }

    #[test]
    fn monomial_ideal_lattice(a in monomial_ideal(), b in monomial_ideal(), c in monomial_ideal()) {
        prop_assert_eq!(a.intersect(&b.sum(&c)), a.intersect(&b).sum(&a.intersect(&c)));
        prop_assert_eq!(a.sum(&b.intersect(&c)), a.sum(&b).intersect(&a.sum(&c)));
        prop_assert!(a.contains_ideal(&a.intersect(&b)));
        prop_assert!(a.sum(&b).contains_ideal(&a));
        for d in 0..=4 {
            let brute = monomials_of_degree(&skew_vars(), d)
                .into_iter()
                .filter(|m| a.generators().iter().any(|g| g.divides(m)))
                .count();
            prop_assert_eq!(a.graded_dimension(&skew_vars(), d), brute);
        }
    }

    #[test]
    fn k_polynomial_is_pivot_independent(a in monomial_ideal(), seed in any::<u64>()) {
        let k = a.k_polynomial();
        prop_assert_eq!(&a.k_polynomial_with(Pivot::First), &k);
        prop_assert_eq!(&a.k_polynomial_with(Pivot::Seeded(seed)), &k);
    }

    #[test]
    fn k_polynomial_is_additive(a in monomial_ideal(), b in monomial_ideal()) {
        let lhs = &a.intersect(&b).k_polynomial() + &a.sum(&b).k_polynomial();
        let rhs = &a.k_polynomial() + &b.k_polynomial();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn k_polynomial_of_principal_ideal(m in skew_monomial()) {
        let mut w = KPolynomial::one();
        for &(v, e) in m.factors() {
            for _ in 0..e {
                w = &w * &KPolynomial::degree_of(v.row as usize, v.col as usize);
            }
        }
        let k = MonomialIdeal::new([m], VarSpace::Skew).k_polynomial();
        prop_assert_eq!(k, &KPolynomial::one() - &w);
    }
}
