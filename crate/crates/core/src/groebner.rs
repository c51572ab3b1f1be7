//! Buchberger's algorithm, multivariate division, monomial ideals and
//! multigraded K-polynomials.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{Coeff, Monomial, PolyError, Polynomial, TermOrder, Var, VarSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("pair budget of {0} exceeded")]
    PairBudget(usize),
    #[error("reduction step budget of {0} exceeded")]
    StepBudget(usize),
    #[error("degree-{degree} linear algebra needs {rows} rows, over the cap of {cap}")]
    DimensionBudget {
        degree: u32,
        rows: usize,
        cap: usize,
    },
    #[error("generator is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Resource caps for a Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_steps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 200_000,
            max_steps: 50_000_000,
        }
    }
}

type Terms = Vec<(Monomial, Coeff)>;

fn sorted(f: &Polynomial, order: TermOrder) -> Terms {
    f.sorted_terms(order)
}

fn to_poly(t: &[(Monomial, Coeff)]) -> Polynomial {
    Polynomial::from_terms(t.iter().cloned())
}

/// `a − c·m·g` for term lists sorted in decreasing order.
fn axpy(
    a: &[(Monomial, Coeff)],
    c: &Coeff,
    m: &Monomial,
    g: &[(Monomial, Coeff)],
    order: TermOrder,
) -> Terms {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut shifted = g.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
    while i < a.len() || shifted.peek().is_some() {
        match shifted.peek() {
            None => {
                out.push(a[i].clone());
                i += 1;
            }
            Some((sm, _)) if i < a.len() => match order.compare(&a[i].0, sm) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (sm, sc) = shifted.next().unwrap();
                    out.push((sm, -sc));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (_, sc) = shifted.next().unwrap();
                    let v = &a[i].1 - sc;
                    if !v.is_zero() {
                        out.push((a[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            },
            Some(_) => {
                let (sm, sc) = shifted.next().unwrap();
                out.push((sm, -sc));
                j += 1;
            }
        }
    }
    let _ = j;
    out
}

struct Reducer<'a> {
    order: TermOrder,
    steps: &'a mut usize,
    max_steps: usize,
}

impl Reducer<'_> {
    /// Full reduction of `f` by `basis` (each entry monic, sorted).
    fn reduce(&mut self, f: Terms, basis: &[&Terms]) -> Result<Terms, GroebnerError> {
        let mut p = f;
        let mut start = 0;
        let mut rem = Vec::new();
        while start < p.len() {
            let (lm, lc) = (&p[start].0, &p[start].1);
            let div = basis.iter().find(|g| g[0].0.divides(lm));
            match div {
                Some(g) => {
                    *self.steps += 1;
                    if *self.steps > self.max_steps {
                        return Err(GroebnerError::StepBudget(self.max_steps));
                    }
                    let q = g[0].0.quotient_of(lm).unwrap();
                    let c = lc / &g[0].1;
                    p = axpy(&p[start..], &c, &q, g, self.order);
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        Ok(rem)
    }
}

fn make_monic(t: &mut Terms) {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.recip();
            for (_, d) in t.iter_mut() {
                *d *= &inv;
            }
        }
    }
}

/// Remainder of `f` on division by `g`; no term of the result is divisible by
/// an initial term of an element of `g`.
pub fn reduce(f: &Polynomial, g: &[Polynomial], order: TermOrder) -> Polynomial {
    let basis: Vec<Terms> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut t = sorted(p, order);
            make_monic(&mut t);
            t
        })
        .collect();
    let refs: Vec<&Terms> = basis.iter().collect();
    let mut steps = 0;
    let mut r = Reducer {
        order,
        steps: &mut steps,
        max_steps: usize::MAX,
    };
    to_poly(&r.reduce(sorted(f, order), &refs).expect("unbounded"))
}

/// `S(f,g) = (L/lt(f))·f − (L/lt(g))·g` with `L` the lcm of the leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: TermOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let l = fm.lcm(&gm);
    let a = f
        .mul_monomial(&fm.quotient_of(&l).unwrap())
        .scale(&fc.recip());
    let b = g
        .mul_monomial(&gm.quotient_of(&l).unwrap())
        .scale(&gc.recip());
    &a - &b
}

fn spoly_terms(f: &Terms, g: &Terms, order: TermOrder) -> Terms {
    let l = f[0].0.lcm(&g[0].0);
    let qf = f[0].0.quotient_of(&l).unwrap();
    let qg = g[0].0.quotient_of(&l).unwrap();
    // both monic
    let a: Terms = f[1..]
        .iter()
        .map(|(m, c)| (m.mul(&qf), c.clone()))
        .collect();
    axpy(&a, &Coeff::one(), &qg, &g[1..], order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub basis: Vec<Polynomial>,
    pub order: TermOrder,
    pub space: VarSpace,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.basis
                .iter()
                .filter_map(|f| f.leading_monomial(self.order)),
            self.space,
        )
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.basis, self.order)
    }

    /// Ideal membership by reduction to zero.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Polynomial text of each element, in basis order.
    pub fn to_text(&self) -> Vec<String> {
        self.basis.iter().map(|f| f.to_text(self.order)).collect()
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed smallest lcm first; pairs with coprime leading
/// monomials and pairs covered by the chain criterion are skipped.
pub fn buchberger(
    gens: &[Polynomial],
    space: VarSpace,
    order: TermOrder,
    budget: Budget,
) -> Result<GroebnerBasis, GroebnerError> {
    for f in gens {
        space.check(f)?;
    }
    let mut steps = 0usize;
    let mut red = Reducer {
        order,
        steps: &mut steps,
        max_steps: budget.max_steps,
    };
    let mut g: Vec<Terms> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    let mut pairs_made = 0usize;

    let mut add = |h: Terms,
                   g: &mut Vec<Terms>,
                   pending: &mut Vec<Pair>,
                   pending_set: &mut HashSet<(usize, usize)>| {
        let idx = g.len();
        for (i, gi) in g.iter().enumerate() {
            pending.push(Pair {
                i,
                j: idx,
                lcm: gi[0].0.lcm(&h[0].0),
            });
            pending_set.insert((i, idx));
            pairs_made += 1;
        }
        g.push(h);
        if pairs_made > budget.max_pairs {
            Err(GroebnerError::PairBudget(budget.max_pairs))
        } else {
            Ok(())
        }
    };

    let mut inputs: Vec<Terms> = gens
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| sorted(f, order))
        .collect();
    inputs.sort_by(|a, b| order.compare(&a[0].0, &b[0].0));
    for f in inputs {
        let refs: Vec<&Terms> = g.iter().collect();
        let mut h = red.reduce(f, &refs)?;
        if !h.is_empty() {
            make_monic(&mut h);
            add(h, &mut g, &mut pending, &mut pending_set)?;
        }
    }

    while !pending.is_empty() {
        let best = (0..pending.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pending[a], &pending[b]);
                order
                    .compare(&p.lcm, &q.lcm)
                    .then((p.j, p.i).cmp(&(q.j, q.i)))
            })
            .unwrap();
        let Pair { i, j, lcm } = pending.swap_remove(best);
        pending_set.remove(&(i, j));
        if g[i][0].0.is_coprime(&g[j][0].0) {
            continue;
        }
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k][0].0.divides(&lcm)
                && !pending_set.contains(&key(i, k))
                && !pending_set.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = spoly_terms(&g[i], &g[j], order);
        let refs: Vec<&Terms> = g.iter().collect();
        let mut h = red.reduce(s, &refs)?;
        if !h.is_empty() {
            make_monic(&mut h);
            add(h, &mut g, &mut pending, &mut pending_set)?;
        }
    }

    // minimal basis, then interreduce
    let mut idx: Vec<usize> = (0..g.len()).collect();
    idx.sort_by(|&a, &b| order.compare(&g[a][0].0, &g[b][0].0).then(a.cmp(&b)));
    let mut kept: Vec<usize> = Vec::new();
    for a in idx {
        if !kept.iter().any(|&b| g[b][0].0.divides(&g[a][0].0)) {
            kept.push(a);
        }
    }
    let mut out = Vec::with_capacity(kept.len());
    for (pos, &a) in kept.iter().enumerate() {
        let others: Vec<&Terms> = kept
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos)
            .map(|(_, &b)| &g[b])
            .collect();
        let head = g[a][0].clone();
        let tail = red.reduce(g[a][1..].to_vec(), &others)?;
        let mut t = vec![head];
        t.extend(tail);
        make_monic(&mut t);
        out.push(to_poly(&t));
    }
    Ok(GroebnerBasis {
        basis: out,
        order,
        space,
        reduced: true,
    })
}

/// Buchberger's criterion: every S-polynomial of a pair with non-coprime
/// leading monomials reduces to zero.
pub fn is_groebner_basis(g: &[Polynomial], order: TermOrder) -> bool {
    let basis: Vec<Terms> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut t = sorted(p, order);
            make_monic(&mut t);
            t
        })
        .collect();
    let refs: Vec<&Terms> = basis.iter().collect();
    let mut steps = 0;
    let mut red = Reducer {
        order,
        steps: &mut steps,
        max_steps: usize::MAX,
    };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i][0].0.is_coprime(&basis[j][0].0) {
                continue;
            }
            let s = spoly_terms(&basis[i], &basis[j], order);
            if !red.reduce(s, &refs).expect("unbounded").is_empty() {
                return false;
            }
        }
    }
    true
}

/// A monomial ideal, stored by its minimal generators in increasing
/// (degree, structural) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    #[serde(with = "monomial_list")]
    gens: Vec<Monomial>,
    space: VarSpace,
}

mod monomial_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(gens: &[Monomial], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = gens.iter().map(|m| m.to_text()).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Monomial>, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter()
            .map(|s| {
                let p = Polynomial::parse(s).map_err(serde::de::Error::custom)?;
                let t = p.terms().next().map(|(m, c)| (m.clone(), c.is_one()));
                match t {
                    Some((m, true)) if p.num_terms() == 1 => Ok(m),
                    _ => Err(serde::de::Error::custom(format!("not a monomial: {s}"))),
                }
            })
            .collect()
    }
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I, space: VarSpace) -> Self {
        MonomialIdeal {
            gens: minimize(gens.into_iter().collect()),
            space,
        }
    }

    pub fn zero(space: VarSpace) -> Self {
        MonomialIdeal {
            gens: Vec::new(),
            space,
        }
    }

    /// `(u_ij : (i,j) ∈ cells)`.
    pub fn of_variables<I: IntoIterator<Item = (usize, usize)>>(cells: I, space: VarSpace) -> Self {
        Self::new(cells.into_iter().map(|(i, j)| Monomial::u(i, j)), space)
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        self.same_space(other);
        other.gens.iter().all(|m| self.contains(m))
    }

    fn same_space(&self, other: &MonomialIdeal) {
        assert_eq!(self.space, other.space, "mixed variable spaces");
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.same_space(other);
        Self::new(self.gens.iter().chain(&other.gens).cloned(), self.space)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.same_space(other);
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        Self::new(lcms, self.space)
    }

    /// Intersection of several ideals, folding the smallest first. The
    /// intersection of no ideals is the unit ideal.
    pub fn intersect_all(ideals: &[MonomialIdeal], space: VarSpace) -> MonomialIdeal {
        let mut v: Vec<&MonomialIdeal> = ideals.iter().collect();
        v.sort_by_key(|i| i.gens.len());
        let mut acc = MonomialIdeal::new([Monomial::one()], space);
        for i in v {
            acc = acc.intersect(i);
        }
        acc
    }

    /// `I : m`, generated by `g / gcd(g, m)`.
    pub fn quotient(&self, m: &Monomial) -> MonomialIdeal {
        Self::new(
            self.gens.iter().map(|g| g.gcd(m).quotient_of(g).unwrap()),
            self.space,
        )
    }

    pub fn add_variable(&self, v: Var) -> MonomialIdeal {
        Self::new(
            self.gens.iter().cloned().chain([Monomial::var(v)]),
            self.space,
        )
    }

    /// Whether `I ∩ (m) = m·I`.
    pub fn intersect_principal_is_product(&self, m: &Monomial) -> bool {
        let lhs = self.intersect(&Self::new([m.clone()], self.space));
        let rhs = Self::new(self.gens.iter().map(|g| g.mul(m)), self.space);
        lhs == rhs
    }

    pub fn to_text(&self) -> String {
        let inner: Vec<String> = self.gens.iter().map(|m| m.to_text()).collect();
        format!("({})", inner.join(", "))
    }

    /// Dimension of the degree-`d` part of the ideal inside the polynomial
    /// ring on `vars`.
    pub fn graded_dimension(&self, vars: &[Var], d: u32) -> usize {
        monomials_of_degree(vars, d)
            .iter()
            .filter(|m| self.contains(m))
            .count()
    }

    /// K-polynomial of `R/I` under `deg u_ij = a_i a_j`, by splitting on a pivot variable.
    pub fn k_polynomial(&self) -> KPolynomial {
        self.k_polynomial_with(Pivot::MostFrequent)
    }

    pub fn k_polynomial_with(&self, pivot: Pivot) -> KPolynomial {
        let mut memo = HashMap::new();
        let mut rng = match pivot {
            Pivot::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
            _ => None,
        };
        k_rec(self.gens.clone(), pivot, &mut rng, &mut memo)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// How K-polynomial splitting picks its pivot variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    /// The variable dividing the most non-linear generators.
    MostFrequent,
    /// The smallest variable of the first non-linear generator.
    First,
    /// A seeded random variable of a random non-linear generator.
    Seeded(u64),
}

fn k_rec(
    gens: Vec<Monomial>,
    pivot: Pivot,
    rng: &mut Option<ChaCha8Rng>,
    memo: &mut HashMap<Vec<Monomial>, KPolynomial>,
) -> KPolynomial {
    if gens.first().is_some_and(Monomial::is_one) {
        return KPolynomial::zero();
    }
    if let Some(k) = memo.get(&gens) {
        return k.clone();
    }
    let nonlinear: Vec<&Monomial> = gens.iter().filter(|m| m.degree() > 1).collect();
    let result = if nonlinear.is_empty() {
        let mut k = KPolynomial::one();
        for m in &gens {
            let v = m.vars().next().unwrap();
            k = &k * &KPolynomial::one_minus(v.row as usize, v.col as usize);
        }
        k
    } else {
        let u = match pivot {
            Pivot::First => nonlinear[0].vars().next().unwrap(),
            Pivot::MostFrequent => {
                let mut count: BTreeMap<Var, usize> = BTreeMap::new();
                for m in &nonlinear {
                    for v in m.vars() {
                        *count.entry(v).or_default() += 1;
                    }
                }
                let best = *count.values().max().unwrap();
                *count.iter().find(|(_, &c)| c == best).unwrap().0
            }
            Pivot::Seeded(_) => {
                let r = rng.as_mut().unwrap();
                let m = nonlinear.choose(r).unwrap();
                let vs: Vec<Var> = m.vars().collect();
                *vs.choose(r).unwrap()
            }
        };
        let um = Monomial::var(u);
        let plus = minimize(gens.iter().cloned().chain([um.clone()]).collect());
        let colon = minimize(
            gens.iter()
                .map(|g| g.gcd(&um).quotient_of(g).unwrap())
                .collect(),
        );
        let kp = k_rec(plus, pivot, rng, memo);
        let kc = k_rec(colon, pivot, rng, memo);
        &kp + &(&kc * &KPolynomial::degree_of(u.row as usize, u.col as usize))
    };
    memo.insert(gens, result.clone());
    result
}

/// All monomials of degree `d` in the given variables.
pub fn monomials_of_degree(vars: &[Var], d: u32) -> Vec<Monomial> {
    fn rec(vars: &[Var], d: u32, cur: &mut Vec<(Var, u32)>, out: &mut Vec<Monomial>) {
        if d == 0 {
            out.push(Monomial::from_pairs(cur.iter().copied()));
            return;
        }
        let Some((&v, rest)) = vars.split_first() else {
            return;
        };
        for e in (0..=d).rev() {
            if e > 0 {
                cur.push((v, e));
            }
            rec(rest, d - e, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, d, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> usize {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r.min(usize::MAX as u128) as usize
}

/// Graded dimensions of `I` and of `init(I)` in degrees `0..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertComparison {
    pub ideal: Vec<usize>,
    pub initial: Vec<usize>,
}

impl HilbertComparison {
    pub fn agrees(&self) -> bool {
        self.ideal == self.initial
    }
}

/// Cap on the number of spanning rows per degree in [`graded_dimensions`].
pub const MAX_SPAN_ROWS: usize = 200_000;

/// Graded dimensions of the ideal generated by homogeneous `gens` inside the
/// ring on `vars`, by exact row reduction of the spanning products.
pub fn graded_dimensions(
    gens: &[Polynomial],
    vars: &[Var],
    d: u32,
) -> Result<Vec<usize>, GroebnerError> {
    for f in gens {
        if !f.is_homogeneous() {
            return Err(GroebnerError::NotHomogeneous(f.to_string()));
        }
    }
    let order = TermOrder::RevLex;
    let mut dims = Vec::new();
    for e in 0..=d {
        let rows: usize = gens
            .iter()
            .filter_map(|g| g.total_degree())
            .filter(|&gd| gd <= e)
            .map(|gd| binomial(vars.len() + (e - gd) as usize - 1, (e - gd) as usize))
            .sum();
        if rows > MAX_SPAN_ROWS {
            return Err(GroebnerError::DimensionBudget {
                degree: e,
                rows,
                cap: MAX_SPAN_ROWS,
            });
        }
        let mut pivots: HashMap<Monomial, Terms> = HashMap::new();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let gd = g.total_degree().unwrap();
            if gd > e {
                continue;
            }
            for m in monomials_of_degree(vars, e - gd) {
                let mut row = sorted(&g.mul_monomial(&m), order);
                while let Some((lm, lc)) = row.first().cloned() {
                    match pivots.get(&lm) {
                        Some(p) => row = axpy(&row, &lc, &Monomial::one(), p, order),
                        None => {
                            make_monic(&mut row);
                            pivots.insert(lm, row);
                            break;
                        }
                    }
                }
            }
        }
        dims.push(pivots.len());
    }
    Ok(dims)
}

/// Compares the graded dimensions of `ideal(gens)` with those of its initial
/// ideal (computed by Buchberger) in degrees `0..=d`.
pub fn hilbert_series_check(
    gens: &[Polynomial],
    space: VarSpace,
    vars: &[Var],
    d: u32,
) -> Result<HilbertComparison, GroebnerError> {
    let ideal = graded_dimensions(gens, vars, d)?;
    let gb = buchberger(gens, space, TermOrder::RevLex, Budget::default())?;
    let init = gb.initial_ideal();
    let initial = (0..=d).map(|e| init.graded_dimension(vars, e)).collect();
    Ok(HilbertComparison { ideal, initial })
}

/// An integer polynomial in the grading symbols `a_1, a_2, ...`; exponent
/// vectors are stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KPolynomial {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl KPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([(Vec::new(), BigInt::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, BigInt)>>(terms: I) -> Self {
        let mut k = KPolynomial::zero();
        for (e, c) in terms {
            k.add_term(e, c);
        }
        k
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// `a_i a_j`, the degree of `u_ij`.
    pub fn degree_of(i: usize, j: usize) -> Self {
        let mut e = vec![0; i.max(j)];
        e[i - 1] += 1;
        e[j - 1] += 1;
        Self::from_terms([(e, BigInt::one())])
    }

    /// `1 − a_i a_j`.
    pub fn one_minus(i: usize, j: usize) -> Self {
        &Self::one() - &Self::degree_of(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// Largest index `k` with `a_k` appearing.
    pub fn max_symbol(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    /// Value with every `a_i = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `a_i = 1 − x_i`; the result is keyed the same way in `x`.
    pub fn one_minus_x(&self) -> KPolynomial {
        let mut out = KPolynomial::zero();
        for (e, c) in &self.terms {
            let mut t = KPolynomial::from_terms([(Vec::new(), c.clone())]);
            for (k, &p) in e.iter().enumerate() {
                let mut x = vec![0; k + 1];
                x[k] = 1;
                let base = &KPolynomial::one() - &KPolynomial::from_terms([(x, BigInt::one())]);
                for _ in 0..p {
                    t = &t * &base;
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Smallest total degree among the terms.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Terms in increasing graded-lex order: by total degree, then by
    /// exponent vector with larger exponents of `a_1` first.
    fn ordered(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            da.cmp(&db).then_with(|| {
                let n = a.len().max(b.len());
                for k in 0..n {
                    let (x, y) = (
                        a.get(k).copied().unwrap_or(0),
                        b.get(k).copied().unwrap_or(0),
                    );
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                std::cmp::Ordering::Equal
            })
        });
        v
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.ordered().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    let name = if i < 9 {
                        format!("a{}", i + 1)
                    } else {
                        format!("a[{}]", i + 1)
                    };
                    if p == 1 {
                        name
                    } else {
                        format!("{name}^{p}")
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    pub fn parse(s: &str) -> Result<Self, PolyError> {
        let err = |m: &str| PolyError::Parse(format!("{m} in {s:?}"));
        let mut out = KPolynomial::zero();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let bytes = compact.as_bytes();
        let mut pos = 0;
        let mut first = true;
        while pos < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[pos] == b'-' || bytes[pos] == b'+' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if !first {
                return Err(err("expected sign"));
            }
            first = false;
            let end = compact[pos..]
                .find(['+', '-'])
                .map_or(bytes.len(), |k| pos + k);
            let term = &compact[pos..end];
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let mut coeff = sign;
            let mut exps: Vec<u32> = Vec::new();
            for f in term.split('*') {
                if f.is_empty() {
                    return Err(err("empty factor"));
                }
                if let Some(rest) = f.strip_prefix('a') {
                    let (idx, pow) = match rest.split_once('^') {
                        Some((i, p)) => (i, p.parse::<u32>().map_err(|_| err("bad exponent"))?),
                        None => (rest, 1),
                    };
                    let idx = idx
                        .strip_prefix('[')
                        .and_then(|x| x.strip_suffix(']'))
                        .unwrap_or(idx);
                    let i: usize = idx.parse().map_err(|_| err("bad index"))?;
                    if i == 0 || i > 4096 || pow > 1 << 16 {
                        return Err(err("index out of range"));
                    }
                    if exps.len() < i {
                        exps.resize(i, 0);
                    }
                    exps[i - 1] += pow;
                } else {
                    coeff *= BigInt::from_str(f).map_err(|_| err("bad coefficient"))?;
                }
            }
            out.add_term(exps, coeff);
            pos = end;
        }
        Ok(out)
    }
}

impl fmt::Display for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl FromStr for KPolynomial {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        KPolynomial::parse(s)
    }
}

/// Serialized as its text form.
impl Serialize for KPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for KPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        KPolynomial::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl std::ops::Add for &KPolynomial {
    type Output = KPolynomial;
    fn add(self, rhs: &KPolynomial) -> KPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &KPolynomial {
    type Output = KPolynomial;
    fn sub(self, rhs: &KPolynomial) -> KPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &KPolynomial {
    type Output = KPolynomial;
    fn neg(self) -> KPolynomial {
        KPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Mul for &KPolynomial {
    type Output = KPolynomial;
    fn mul(self, rhs: &KPolynomial) -> KPolynomial {
        let mut out = KPolynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let n = a.len().max(b.len());
                let e: Vec<u32> = (0..n)
                    .map(|k| a.get(k).copied().unwrap_or(0) + b.get(k).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, c * d);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    fn mono(s: &str) -> Monomial {
        p(s).terms().next().unwrap().0.clone()
    }

    fn skew_vars(n: usize) -> Vec<Var> {
        (1..=n)
            .flat_map(|i| (1..i).map(move |j| Var::new(i, j)))
            .collect()
    }

    #[test]
    fn reduce_trivia() {
        let f = p("u[3,2]*u[4,1] - u[3,1]*u[4,2] + u[2,1]*u[4,3]");
        assert!(reduce(&f, std::slice::from_ref(&f), TermOrder::RevLex).is_zero());
        assert!(reduce(
            &Polynomial::zero(),
            std::slice::from_ref(&f),
            TermOrder::RevLex
        )
        .is_zero());
    }

    #[test]
    fn variables_are_a_basis() {
        let gens = vec![Polynomial::u(2, 1), Polynomial::u(3, 1)];
        let gb = buchberger(&gens, VarSpace::Skew, TermOrder::RevLex, Budget::default()).unwrap();
        assert_eq!(gb.basis, vec![Polynomial::u(3, 1), Polynomial::u(2, 1)]);
        assert!(is_groebner_basis(&gens, TermOrder::RevLex));
    }

    #[test]
    fn buchberger_rejects_wrong_space() {
        let r = buchberger(
            &[Polynomial::u(1, 2)],
            VarSpace::Skew,
            TermOrder::RevLex,
            Budget::default(),
        );
        assert!(matches!(
            r,
            Err(GroebnerError::Poly(PolyError::WrongSpace(
                1,
                2,
                VarSpace::Skew
            )))
        ));
    }

    #[test]
    fn pair_budget_is_enforced() {
        let gens: Vec<Polynomial> = [
            "u[2,1]*u[3,2] - u[3,1]^2",
            "u[3,1]*u[3,2] - u[2,1]^2",
            "u[2,1]*u[3,1] - u[3,2]^2",
        ]
        .iter()
        .map(|s| p(s))
        .collect();
        let tiny = Budget {
            max_pairs: 1,
            max_steps: 1000,
        };
        assert_eq!(
            buchberger(&gens, VarSpace::Skew, TermOrder::RevLex, tiny),
            Err(GroebnerError::PairBudget(1))
        );
        let gb = buchberger(&gens, VarSpace::Skew, TermOrder::RevLex, Budget::default()).unwrap();
        assert!(is_groebner_basis(&gb.basis, TermOrder::RevLex));
        let again = buchberger(
            &gb.basis,
            VarSpace::Skew,
            TermOrder::RevLex,
            Budget::default(),
        )
        .unwrap();
        assert_eq!(again, gb);
    }

    #[test]
    fn monomial_ideal_basics() {
        let i = MonomialIdeal::new(
            [mono("u[2,1]*u[3,1]"), mono("u[2,1]"), mono("u[3,2]^2")],
            VarSpace::Skew,
        );
        assert_eq!(i.generators(), &[mono("u[2,1]"), mono("u[3,2]^2")]);
        assert_eq!(i.intersect(&i), i);
        let j = MonomialIdeal::of_variables([(3, 1)], VarSpace::Skew);
        assert_eq!(
            i.intersect(&j).to_text(),
            "(u[2,1]*u[3,1], u[3,1]*u[3,2]^2)"
        );
        assert_eq!(i.quotient(&mono("u[3,2]")).to_text(), "(u[2,1], u[3,2])");
        assert!(i.intersect_principal_is_product(&mono("u[3,1]")));
        assert!(!i.intersect_principal_is_product(&mono("u[2,1]")));
    }

    #[test]
    fn k_polynomial_of_variable_ideal() {
        let i = MonomialIdeal::of_variables([(2, 1), (3, 1)], VarSpace::Skew);
        let expect = &KPolynomial::one_minus(2, 1) * &KPolynomial::one_minus(3, 1);
        assert_eq!(i.k_polynomial(), expect);
        assert_eq!(
            MonomialIdeal::zero(VarSpace::Skew).k_polynomial(),
            KPolynomial::one()
        );
        assert_eq!(
            MonomialIdeal::new([Monomial::one()], VarSpace::Skew).k_polynomial(),
            KPolynomial::zero()
        );
    }

    #[test]
    fn k_polynomial_of_principal_ideal() {
        // K(R/(m)) = 1 − deg m
        let i = MonomialIdeal::new([mono("u[2,1]*u[3,2]^2")], VarSpace::Skew);
        let deg = &KPolynomial::degree_of(2, 1)
            * &(&KPolynomial::degree_of(3, 2) * &KPolynomial::degree_of(3, 2));
        assert_eq!(i.k_polynomial(), &KPolynomial::one() - &deg);
    }

    #[test]
    fn kpoly_text_round_trip() {
        let k = &KPolynomial::one_minus(2, 1) * &KPolynomial::one_minus(11, 3);
        let t = k.to_text();
        assert_eq!(t, "1 - a1*a2 - a3*a[11] + a1*a2*a3*a[11]");
        assert_eq!(KPolynomial::parse(&t).unwrap(), k);
        assert_eq!(KPolynomial::parse("1").unwrap(), KPolynomial::one());
        assert_eq!(
            KPolynomial::parse("-2*a1^2 + 0").unwrap().to_text(),
            "-2*a1^2"
        );
        for bad in ["", "1 +", "a0", "b1", "2**a1"] {
            assert!(KPolynomial::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn graded_dimensions_of_principal_ideal() {
        let f = p("u[3,2]*u[4,1] - u[3,1]*u[4,2] + u[2,1]*u[4,3]");
        let vars = skew_vars(4);
        let dims = graded_dimensions(std::slice::from_ref(&f), &vars, 4).unwrap();
        // (f) in degree e has dimension C(6 + e - 2 - 1, e - 2)
        assert_eq!(dims, vec![0, 0, 1, 6, 21]);
        let cmp = hilbert_series_check(&[f], VarSpace::Skew, &vars, 4).unwrap();
        assert!(cmp.agrees());
    }

    #[test]
    fn monomials_of_degree_counts() {
        let vars = skew_vars(4);
        for d in 0..5 {
            assert_eq!(
                monomials_of_degree(&vars, d).len(),
                binomial(6 + d as usize - 1, d as usize)
            );
        }
    }
}
