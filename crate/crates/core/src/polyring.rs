//! Sparse polynomials over the rationals in the variables `u_ij`, term orders,
//! determinants and Pfaffians.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Coeff = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("variable u[{0},{1}] is not in the {2:?} space")]
    WrongSpace(u16, u16, VarSpace),
    #[error("parse error: {0}")]
    Parse(String),
}

/// The indeterminate `u_ij`. Variables order by row, then column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Var {
    pub row: u16,
    pub col: u16,
}

impl Var {
    pub fn new(row: usize, col: usize) -> Self {
        Var {
            row: row as u16,
            col: col as u16,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u[{},{}]", self.row, self.col)
    }
}

/// Which variables a ring uses: all `u_ij`, or only those with `i > j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarSpace {
    General,
    Skew,
}

impl VarSpace {
    pub fn admits_var(self, v: Var) -> bool {
        match self {
            VarSpace::General => v.row >= 1 && v.col >= 1,
            VarSpace::Skew => v.row > v.col && v.col >= 1,
        }
    }

    pub fn check_monomial(self, m: &Monomial) -> Result<(), PolyError> {
        for &(v, _) in m.factors() {
            if !self.admits_var(v) {
                return Err(PolyError::WrongSpace(v.row, v.col, self));
            }
        }
        Ok(())
    }

    pub fn check(self, f: &Polynomial) -> Result<(), PolyError> {
        f.terms.keys().try_for_each(|m| self.check_monomial(m))
    }
}

/// A monomial, stored as `(variable, exponent)` pairs sorted by variable with
/// positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn u(i: usize, j: usize) -> Self {
        Self::var(Var::new(i, j))
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs; repeated
    /// variables add up and zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// Product of `u_ij` over the given cells.
    pub fn product_of<I: IntoIterator<Item = (usize, usize)>>(cells: I) -> Self {
        Self::from_pairs(cells.into_iter().map(|(i, j)| (Var::new(i, j), 1)))
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map_or(0, |k| self.0[k].1)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, _)| (v, 1)).collect())
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (v, e) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                i += 1;
                (a[i - 1].0, f(a[i - 1].1, 0))
            } else if i == a.len() || b[j].0 < a[i].0 {
                j += 1;
                (b[j - 1].0, f(0, b[j - 1].1))
            } else {
                i += 1;
                j += 1;
                (a[i - 1].0, f(a[i - 1].1, b[j - 1].1))
            };
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |x, y| x + y)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::min)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        let b = &other.0;
        for &(v, e) in &self.0 {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(other.merge(self, |x, y| x - y))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Drops the variable `v` entirely (the monomial part of `M : v^∞`).
    pub fn without(&self, v: Var) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }

    /// Lowers the exponent of `v` by one if present.
    pub fn divide_var(&self, v: Var) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(w, e)| {
                    if w != v {
                        Some((w, e))
                    } else if e > 1 {
                        Some((w, e - 1))
                    } else {
                        None
                    }
                })
                .collect(),
        )
    }

    pub fn to_text(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// A monomial order. The orders here are graded; they differ in how ties are broken.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TermOrder {
    /// Graded; at the largest variable where exponents differ, the larger
    /// exponent makes the monomial smaller. Generic minors have antidiagonal
    /// initial terms under this order.
    #[default]
    RevLex,
    /// Graded; at the largest variable where exponents differ, the larger
    /// exponent makes the monomial larger. Minors get diagonal initial terms.
    DegLex,
}

impl TermOrder {
    pub fn name(self) -> &'static str {
        match self {
            TermOrder::RevLex => "revlex",
            TermOrder::DegLex => "deglex",
        }
    }

    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        let d = a.degree().cmp(&b.degree());
        if d != Ordering::Equal {
            return d;
        }
        let (x, y) = (&a.0, &b.0);
        let (mut i, mut j) = (x.len(), y.len());
        while i > 0 || j > 0 {
            // walk both from the largest variable down
            let (vx, ex) = if i > 0 {
                (Some(x[i - 1].0), x[i - 1].1)
            } else {
                (None, 0)
            };
            let (vy, ey) = if j > 0 {
                (Some(y[j - 1].0), y[j - 1].1)
            } else {
                (None, 0)
            };
            let (ea, eb) = match (vx, vy) {
                (Some(p), Some(q)) if p == q => {
                    i -= 1;
                    j -= 1;
                    (ex, ey)
                }
                (Some(p), Some(q)) if p > q => {
                    i -= 1;
                    (ex, 0)
                }
                (Some(_), None) => {
                    i -= 1;
                    (ex, 0)
                }
                _ => {
                    j -= 1;
                    (0, ey)
                }
            };
            if ea != eb {
                return match self {
                    TermOrder::RevLex => eb.cmp(&ea),
                    TermOrder::DegLex => ea.cmp(&eb),
                };
            }
        }
        Ordering::Equal
    }
}

impl FromStr for TermOrder {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "revlex" => Ok(TermOrder::RevLex),
            "deglex" => Ok(TermOrder::DegLex),
            _ => Err(PolyError::Parse(format!("unknown term order {s:?}"))),
        }
    }
}

/// A polynomial with rational coefficients; no zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

fn rat(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, rat(1))
    }

    /// `u_ij`.
    pub fn u(i: usize, j: usize) -> Self {
        Self::monomial(Monomial::u(i, j))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.vars().collect::<Vec<_>>())
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: TermOrder) -> Vec<(Monomial, Coeff)> {
        let mut v: Vec<(Monomial, Coeff)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: TermOrder) -> Option<(Monomial, Coeff)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn leading_monomial(&self, order: TermOrder) -> Option<Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// The initial term with its coefficient; zero for the zero polynomial.
    pub fn initial_term(&self, order: TermOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((m, c)) => Polynomial::term(m, c),
            None => Polynomial::zero(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, order: TermOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => Polynomial::zero(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn to_text(&self, order: TermOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push('*');
                }
                out.push_str(&m.to_text());
            }
        }
        out
    }

    pub fn parse(s: &str) -> Result<Polynomial, PolyError> {
        Parser {
            s: s.as_bytes(),
            pos: 0,
        }
        .polynomial()
    }

    pub fn to_json_terms(&self, order: TermOrder) -> Vec<JsonTerm> {
        self.sorted_terms(order)
            .into_iter()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                vars: m
                    .factors()
                    .iter()
                    .map(|&(v, e)| [v.row as u32, v.col as u32, e])
                    .collect(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Polynomial, PolyError> {
        let mut p = Polynomial::zero();
        for t in terms {
            let c = parse_rational(t.coeff.trim())?;
            let mut pairs = Vec::new();
            for &[i, j, e] in &t.vars {
                if i == 0 || j == 0 || i > u16::MAX as u32 || j > u16::MAX as u32 {
                    return Err(PolyError::Parse(format!("bad variable index [{i},{j}]")));
                }
                pairs.push((
                    Var {
                        row: i as u16,
                        col: j as u16,
                    },
                    e,
                ));
            }
            p.add_term(Monomial::from_pairs(pairs), c);
        }
        Ok(p)
    }

    pub fn to_json(&self, order: TermOrder) -> serde_json::Value {
        serde_json::to_value(self.to_json_terms(order)).expect("serializable")
    }

    pub fn from_json(v: &str) -> Result<Polynomial, PolyError> {
        let terms: Vec<JsonTerm> =
            serde_json::from_str(v).map_err(|e| PolyError::Parse(e.to_string()))?;
        Self::from_json_terms(&terms)
    }

    /// Substitutes polynomials for variables; unmapped variables are kept.
    pub fn substitute(&self, f: &dyn Fn(Var) -> Option<Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for &(v, e) in m.factors() {
                let r = f(v).unwrap_or_else(|| Polynomial::monomial(Monomial::var(v)));
                t = &t * &r.pow(e);
            }
            out = &out + &t;
        }
        out
    }
}

/// One term of the JSON polynomial form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub vars: Vec<[u32; 3]>,
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text(TermOrder::RevLex))
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Polynomial::parse(s)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
}

pub fn parse_rational(s: &str) -> Result<Coeff, PolyError> {
    let bad = || PolyError::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> PolyError {
        PolyError::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn small(&mut self, max: u32) -> Result<u32, PolyError> {
        let d = self.digits()?;
        match d.parse::<u32>() {
            Ok(v) if v <= max => Ok(v),
            _ => Err(self.err("integer out of range")),
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial, PolyError> {
        let mut p = Polynomial::zero();
        let mut first = true;
        loop {
            let neg = if self.eat(b'-') {
                true
            } else if self.eat(b'+') || first {
                false
            } else if self.peek().is_none() {
                break;
            } else {
                return Err(self.err("expected '+' or '-'"));
            };
            first = false;
            let (m, c) = self.term()?;
            p.add_term(m, if neg { -c } else { c });
            if self.peek().is_none() {
                break;
            }
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(Monomial, Coeff), PolyError> {
        let mut c = rat(1);
        let mut pairs = Vec::new();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let n = BigInt::from_str(self.digits()?).unwrap();
                    let mut q = BigRational::from_integer(n);
                    if self.eat(b'/') {
                        let d = BigInt::from_str(self.digits()?).unwrap();
                        if d.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        q /= BigRational::from_integer(d);
                    }
                    c *= q;
                }
                Some(b'u') => {
                    self.pos += 1;
                    if !self.eat(b'[') {
                        return Err(self.err("expected '['"));
                    }
                    let i = self.small(u16::MAX as u32)?;
                    if !self.eat(b',') {
                        return Err(self.err("expected ','"));
                    }
                    let j = self.small(u16::MAX as u32)?;
                    if !self.eat(b']') {
                        return Err(self.err("expected ']'"));
                    }
                    if i == 0 || j == 0 {
                        return Err(self.err("indices are positive"));
                    }
                    let e = if self.eat(b'^') {
                        self.small(1 << 16)?
                    } else {
                        1
                    };
                    pairs.push((
                        Var {
                            row: i as u16,
                            col: j as u16,
                        },
                        e,
                    ));
                }
                _ => return Err(self.err("expected a factor")),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((Monomial::from_pairs(pairs), c))
    }
}

pub type Matrix = Vec<Vec<Polynomial>>;

/// The generic matrix `U = (u_ij)` and the skew matrix `U^ss` with
/// `U^ss_ij = u_ij` for `i > j`, `-u_ji` for `i < j` and zero diagonal.
pub fn generic_matrices(n: usize) -> (Matrix, Matrix) {
    let u = (1..=n)
        .map(|i| (1..=n).map(|j| Polynomial::u(i, j)).collect())
        .collect();
    let uss = (1..=n)
        .map(|i| (1..=n).map(|j| skew_entry(i, j)).collect())
        .collect();
    (u, uss)
}

/// The `(i,j)` entry of `U^ss`.
pub fn skew_entry(i: usize, j: usize) -> Polynomial {
    match i.cmp(&j) {
        Ordering::Greater => Polynomial::u(i, j),
        Ordering::Less => -&Polynomial::u(j, i),
        Ordering::Equal => Polynomial::zero(),
    }
}

/// `U_RC`, rows and columns in the given order.
pub fn generic_submatrix(rows: &[usize], cols: &[usize]) -> Matrix {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| Polynomial::u(i, j)).collect())
        .collect()
}

/// `U^ss_RC`, rows and columns in the given order.
pub fn skew_submatrix(rows: &[usize], cols: &[usize]) -> Matrix {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| skew_entry(i, j)).collect())
        .collect()
}

/// Determinant by Laplace expansion along rows, memoized on the set of used columns.
pub fn determinant(a: &[Vec<Polynomial>]) -> Result<Polynomial, PolyError> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(PolyError::NotSquare);
    }
    assert!(n < 32, "determinant size out of range");
    fn rec(
        a: &[Vec<Polynomial>],
        row: usize,
        free: u32,
        memo: &mut HashMap<u32, Polynomial>,
    ) -> Polynomial {
        if row == a.len() {
            return Polynomial::one();
        }
        if let Some(p) = memo.get(&free) {
            return p.clone();
        }
        let mut out = Polynomial::zero();
        let mut pos = 0;
        for c in 0..a.len() {
            if free & (1 << c) == 0 {
                continue;
            }
            let entry = &a[row][c];
            if !entry.is_zero() {
                let minor = rec(a, row + 1, free & !(1 << c), memo);
                let t = entry * &minor;
                out = if pos % 2 == 0 { &out + &t } else { &out - &t };
            }
            pos += 1;
        }
        memo.insert(free, out.clone());
        out
    }
    Ok(rec(a, 0, (1u32 << n) - 1, &mut HashMap::new()))
}

fn check_skew(a: &[Vec<Polynomial>]) -> Result<(), PolyError> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(PolyError::NotSquare);
    }
    for i in 0..n {
        if !a[i][i].is_zero() {
            return Err(PolyError::NotSkew);
        }
        for j in 0..i {
            if a[i][j] != -&a[j][i] {
                return Err(PolyError::NotSkew);
            }
        }
    }
    Ok(())
}

/// The Pfaffian, normalized so that `pf([[0, a], [-a, 0]]) = a`; zero for odd size.
pub fn pfaffian(a: &[Vec<Polynomial>]) -> Result<Polynomial, PolyError> {
    check_skew(a)?;
    let n = a.len();
    if n % 2 == 1 {
        return Ok(Polynomial::zero());
    }
    assert!(n < 32, "pfaffian size out of range");
    if n <= 6 {
        Ok(pfaffian_matchings(a))
    } else {
        Ok(pfaffian_expand(a))
    }
}

/// Sum over perfect matchings, each signed by its crossing number.
fn pfaffian_matchings(a: &[Vec<Polynomial>]) -> Polynomial {
    fn rec(
        a: &[Vec<Polynomial>],
        free: &mut Vec<usize>,
        pairs: &mut Vec<(usize, usize)>,
        out: &mut Polynomial,
    ) {
        if free.is_empty() {
            let mut crossings = 0;
            for (k, &(p, q)) in pairs.iter().enumerate() {
                for &(r, s) in &pairs[..k] {
                    if (r < p && p < s && s < q) || (p < r && r < q && q < s) {
                        crossings += 1;
                    }
                }
            }
            let mut t = Polynomial::one();
            for &(p, q) in pairs.iter() {
                t = &t * &a[p][q];
                if t.is_zero() {
                    return;
                }
            }
            *out = if crossings % 2 == 0 {
                &*out + &t
            } else {
                &*out - &t
            };
            return;
        }
        let first = free.remove(0);
        for k in 0..free.len() {
            let partner = free.remove(k);
            if !a[first][partner].is_zero() {
                pairs.push((first, partner));
                rec(a, free, pairs, out);
                pairs.pop();
            }
            free.insert(k, partner);
        }
        free.insert(0, first);
    }
    let mut out = Polynomial::zero();
    rec(a, &mut (0..a.len()).collect(), &mut Vec::new(), &mut out);
    out
}

/// Expansion along the first remaining row, memoized on the remaining index set.
fn pfaffian_expand(a: &[Vec<Polynomial>]) -> Polynomial {
    fn rec(a: &[Vec<Polynomial>], free: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
        if free == 0 {
            return Polynomial::one();
        }
        if let Some(p) = memo.get(&free) {
            return p.clone();
        }
        let first = free.trailing_zeros() as usize;
        let rest = free & !(1 << first);
        let mut out = Polynomial::zero();
        let mut pos = 0;
        for j in 0..a.len() {
            if rest & (1 << j) == 0 {
                continue;
            }
            pos += 1;
            if a[first][j].is_zero() {
                continue;
            }
            let sub = rec(a, rest & !(1 << j), memo);
            let t = &a[first][j] * &sub;
            out = if pos % 2 == 1 { &out + &t } else { &out - &t };
        }
        memo.insert(free, out.clone());
        out
    }
    rec(a, (1u32 << a.len()) - 1, &mut HashMap::new())
}
