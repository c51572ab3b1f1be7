//! Permutations of the positive integers with finite support, fixed-point-free
//! involutions, Rothe diagrams, rank tables and Bruhat order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("images do not form a permutation of [{0}]")]
    NotAPermutation(usize),
    #[error("fpf tail requires an even window, got {0}")]
    OddFpfWindow(usize),
    #[error("an fpf tail needs a fixed-point-free involution on its window")]
    NotFpfWindow,
    #[error("not an involution")]
    NotInvolution,
    #[error("not a fixed-point-free involution")]
    NotFpf,
    #[error("{point} is moved but lies outside [{n}]")]
    OutsideWindow { point: usize, n: usize },
    #[error("operation needs an identity tail")]
    NeedsIdentityTail,
    #[error("window mismatch: {0}")]
    WindowMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Behaviour of a permutation beyond its stored window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tail {
    /// `w(i) = i` past the window.
    Identity,
    /// `w(i) = i - (-1)^i` past the window, as in `1_FPF = (1,2)(3,4)...`.
    Fpf,
}

/// A permutation of the positive integers that agrees with a fixed tail
/// outside a finite window. The window is kept minimal, so structural
/// equality is equality of permutations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
    tail: Tail,
}

fn tail_image(tail: Tail, i: usize) -> usize {
    match tail {
        Tail::Identity => i,
        Tail::Fpf => {
            if i % 2 == 1 {
                i + 1
            } else {
                i - 1
            }
        }
    }
}

impl Permutation {
    /// Builds a permutation from `w(1..=N)` and a tail.
    pub fn new(images: Vec<usize>, tail: Tail) -> Result<Self, CoxeterError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(CoxeterError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        if tail == Tail::Fpf {
            if n % 2 == 1 {
                return Err(CoxeterError::OddFpfWindow(n));
            }
            for (k, &v) in images.iter().enumerate() {
                if v == k + 1 || images[v - 1] != k + 1 {
                    return Err(CoxeterError::NotFpfWindow);
                }
            }
        }
        Ok(Self::from_raw(images, tail))
    }

    fn from_raw(mut images: Vec<usize>, tail: Tail) -> Self {
        match tail {
            Tail::Identity => {
                while images.last() == Some(&images.len()) {
                    images.pop();
                }
            }
            Tail::Fpf => {
                while images.len() >= 2 {
                    let n = images.len();
                    if images[n - 2] == n && images[n - 1] == n - 1 {
                        images.truncate(n - 2);
                    } else {
                        break;
                    }
                }
            }
        }
        Permutation { images, tail }
    }

    pub fn identity() -> Self {
        Permutation {
            images: Vec::new(),
            tail: Tail::Identity,
        }
    }

    /// `1_FPF = (1,2)(3,4)(5,6)...`
    pub fn one_fpf() -> Self {
        Permutation {
            images: Vec::new(),
            tail: Tail::Fpf,
        }
    }

    pub fn transposition(i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1);
        let n = i.max(j);
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Self::from_raw(images, Tail::Identity)
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(i: usize) -> Self {
        Self::transposition(i, i + 1)
    }

    pub fn from_one_line(images: &[usize]) -> Result<Self, CoxeterError> {
        Self::new(images.to_vec(), Tail::Identity)
    }

    /// Parses one-line notation such as `"3 1 4 2"`; commas are accepted as separators.
    pub fn parse_one_line(s: &str) -> Result<Self, CoxeterError> {
        let t = s.trim();
        let mut images = Vec::new();
        let packed = !t.contains([' ', ',', '\t']);
        if packed {
            for ch in t.chars() {
                let d = ch
                    .to_digit(10)
                    .ok_or_else(|| CoxeterError::Parse(format!("bad digit {ch:?}")))?;
                images.push(d as usize);
            }
        } else {
            for tok in t.split([' ', ',', '\t']) {
                if tok.is_empty() {
                    continue;
                }
                let v: usize = tok
                    .parse()
                    .map_err(|_| CoxeterError::Parse(format!("bad entry {tok:?}")))?;
                images.push(v);
            }
        }
        Self::from_one_line(&images)
    }

    /// Parses cycle notation such as `"(1,2)(3,6)(4,5)"`; `"()"` or the empty
    /// string is the identity. Cycles of any length are allowed.
    pub fn parse_cycles(s: &str) -> Result<Self, CoxeterError> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(CoxeterError::Parse(format!("expected '(' at {rest:?}")));
            };
            let close = body
                .find(')')
                .ok_or_else(|| CoxeterError::Parse("unclosed cycle".into()))?;
            let inner = body[..close].trim();
            let mut cyc = Vec::new();
            if !inner.is_empty() {
                for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
                    if tok.is_empty() {
                        continue;
                    }
                    let v: usize = tok
                        .parse()
                        .map_err(|_| CoxeterError::Parse(format!("bad point {tok:?}")))?;
                    if v == 0 {
                        return Err(CoxeterError::Parse("points are positive".into()));
                    }
                    cyc.push(v);
                }
            }
            cycles.push(cyc);
            rest = body[close + 1..].trim_start();
        }
        let n = cycles.iter().flatten().copied().max().unwrap_or(0);
        if n > 1 << 16 {
            return Err(CoxeterError::Parse("point too large".into()));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for cyc in &cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if seen[a] {
                    return Err(CoxeterError::Parse(format!("point {a} repeated")));
                }
                seen[a] = true;
                images[a - 1] = cyc[(k + 1) % cyc.len()];
            }
        }
        Ok(Self::from_raw(images, Tail::Identity))
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    /// Size of the minimal stored window.
    pub fn window(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        if i <= self.images.len() {
            self.images[i - 1]
        } else {
            tail_image(self.tail, i)
        }
    }

    /// `w(1..=m)`; `m` is rounded up to the window if smaller.
    pub fn images_up_to(&self, m: usize) -> Vec<usize> {
        (1..=m.max(self.window())).map(|i| self.apply(i)).collect()
    }

    /// One-line images on the window extended to `m`, requiring `w` to fix `[m]`
    /// setwise. For fpf tails `m` is made even.
    fn materialize(&self, m: usize) -> Vec<usize> {
        let mut m = m.max(self.window());
        if self.tail == Tail::Fpf && m % 2 == 1 {
            m += 1;
        }
        (1..=m).map(|i| self.apply(i)).collect()
    }

    pub fn inverse(&self) -> Self {
        let n = self.window();
        let mut inv = vec![0; n];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Self::from_raw(inv, self.tail)
    }

    pub fn inverse_apply(&self, j: usize) -> usize {
        if j <= self.window() {
            self.images
                .iter()
                .position(|&v| v == j)
                .map(|k| k + 1)
                .unwrap()
        } else {
            tail_image(self.tail, j)
        }
    }

    /// `self ∘ other` for identity-tail permutations.
    pub fn compose(&self, other: &Self) -> Result<Self, CoxeterError> {
        if self.tail != Tail::Identity || other.tail != Tail::Identity {
            return Err(CoxeterError::NeedsIdentityTail);
        }
        let n = self.window().max(other.window());
        let images = (1..=n).map(|i| self.apply(other.apply(i))).collect();
        Ok(Self::from_raw(images, Tail::Identity))
    }

    /// `w · (i,j)`, i.e. the one-line notation with positions `i` and `j` swapped.
    pub fn times_transposition(&self, i: usize, j: usize) -> Self {
        assert_eq!(
            self.tail,
            Tail::Identity,
            "right multiplication needs an identity tail"
        );
        let mut images = self.materialize(i.max(j));
        images.swap(i - 1, j - 1);
        Self::from_raw(images, Tail::Identity)
    }

    /// `(i,j) · w · (i,j)`.
    pub fn conjugate(&self, i: usize, j: usize) -> Self {
        let t = |k: usize| {
            if k == i {
                j
            } else if k == j {
                i
            } else {
                k
            }
        };
        let m = i.max(j);
        let base = self.materialize(m);
        let images: Vec<usize> = (1..=base.len()).map(|k| t(base[t(k) - 1])).collect();
        Self::from_raw(images, self.tail)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| self.images[v - 1] == k + 1)
    }

    /// Whether this lies in `I^FPF_∞`.
    pub fn is_fpf_involution(&self) -> bool {
        // the constructor enforces the window condition for fpf tails
        self.tail == Tail::Fpf
    }

    /// Number of inversions; only finite for identity tails.
    pub fn length(&self) -> Result<usize, CoxeterError> {
        if self.tail != Tail::Identity {
            return Err(CoxeterError::NeedsIdentityTail);
        }
        let w = &self.images;
        let mut inv = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    inv += 1;
                }
            }
        }
        Ok(inv)
    }

    /// `ℓ_fpf(z) = |D^ss(z)|`.
    pub fn fpf_length(&self) -> Result<usize, CoxeterError> {
        Ok(ss_rothe_diagram(self)?.len())
    }

    /// Cycles of length two within the window, as `(a, b)` with `a < b`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.images
            .iter()
            .enumerate()
            .filter(|(k, &v)| k + 1 < v)
            .map(|(k, &v)| (k + 1, v))
            .collect()
    }

    /// Cycle notation of the window, omitting fixed points; `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let n = self.window();
        let mut seen = vec![false; n + 1];
        let mut out = String::new();
        for start in 1..=n {
            if seen[start] || self.images[start - 1] == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.images[start - 1];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x - 1];
            }
            out.push('(');
            out.push_str(
                &cyc.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    pub fn to_one_line(&self) -> String {
        self.images
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tail {
            Tail::Identity => write!(f, "{}", self.to_cycle_string()),
            Tail::Fpf => {
                if self.images.is_empty() {
                    write!(f, "1_FPF")
                } else {
                    write!(f, "{}...", self.to_cycle_string())
                }
            }
        }
    }
}

impl FromStr for Permutation {
    type Err = CoxeterError;
    /// Cycle notation if the string starts with `(`, otherwise one-line notation.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim_start().starts_with('(') || s.trim().is_empty() {
            Permutation::parse_cycles(s)
        } else {
            Permutation::parse_one_line(s)
        }
    }
}

/// A position `(row, col)`. Cells order by row ascending, then column
/// descending, which is the pipe-dream reading order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
    pub fn transpose(self) -> Self {
        Cell {
            row: self.col,
            col: self.row,
        }
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.row.cmp(&other.row).then(other.col.cmp(&self.col))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A finite set of cells, iterated in reading order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Diagram {
    cells: BTreeSet<Cell>,
}

impl Diagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_cells<I: IntoIterator<Item = (usize, usize)>>(cells: I) -> Self {
        Diagram {
            cells: cells.into_iter().map(Cell::from).collect(),
        }
    }

    /// `[m] × [n]`.
    pub fn rectangle(m: usize, n: usize) -> Self {
        Self::from_cells((1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))))
    }

    /// `▽_n = {(i,j) ∈ [n]×[n] : i > j}`.
    pub fn lower_triangle(n: usize) -> Self {
        Self::from_cells((1..=n).flat_map(|i| (1..i).map(move |j| (i, j))))
    }

    /// Parses `"r,c;r,c;..."`. Empty input is the empty diagram.
    pub fn parse_cells(s: &str) -> Result<Self, CoxeterError> {
        let mut d = Diagram::new();
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let part = part.trim_start_matches('(').trim_end_matches(')');
            let mut it = part.split(',');
            let (Some(r), Some(c), None) = (it.next(), it.next(), it.next()) else {
                return Err(CoxeterError::Parse(format!("bad cell {part:?}")));
            };
            let r: usize = r
                .trim()
                .parse()
                .map_err(|_| CoxeterError::Parse(format!("bad row {r:?}")))?;
            let c: usize = c
                .trim()
                .parse()
                .map_err(|_| CoxeterError::Parse(format!("bad column {c:?}")))?;
            if r == 0 || c == 0 {
                return Err(CoxeterError::Parse("coordinates are positive".into()));
            }
            d.insert(Cell::new(r, c));
        }
        Ok(d)
    }

    pub fn to_cells_string(&self) -> String {
        self.cells
            .iter()
            .map(|c| format!("{},{}", c.row, c.col))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.cells.insert(c)
    }

    pub fn remove(&mut self, c: &Cell) -> bool {
        self.cells.remove(c)
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    pub fn contains_rc(&self, row: usize, col: usize) -> bool {
        self.cells.contains(&Cell::new(row, col))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Cell> + '_ {
        self.cells.iter()
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn is_subset(&self, other: &Diagram) -> bool {
        self.cells.is_subset(&other.cells)
    }

    pub fn is_disjoint(&self, other: &Diagram) -> bool {
        self.cells.is_disjoint(&other.cells)
    }

    pub fn union(&self, other: &Diagram) -> Diagram {
        Diagram {
            cells: self.cells.union(&other.cells).copied().collect(),
        }
    }

    pub fn difference(&self, other: &Diagram) -> Diagram {
        Diagram {
            cells: self.cells.difference(&other.cells).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &Diagram) -> Diagram {
        Diagram {
            cells: self.cells.intersection(&other.cells).copied().collect(),
        }
    }

    pub fn transpose(&self) -> Diagram {
        Diagram {
            cells: self.cells.iter().map(|c| c.transpose()).collect(),
        }
    }

    pub fn max_row(&self) -> usize {
        self.cells.iter().map(|c| c.row).max().unwrap_or(0)
    }

    pub fn max_col(&self) -> usize {
        self.cells.iter().map(|c| c.col).max().unwrap_or(0)
    }
}

impl FromIterator<Cell> for Diagram {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Diagram {
            cells: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.cells.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// An `(m+1) × (n+1)` table of nonnegative integers with zero row and column 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankTable {
    m: usize,
    n: usize,
    entries: Vec<usize>,
}

impl RankTable {
    pub fn zeros(m: usize, n: usize) -> Self {
        RankTable {
            m,
            n,
            entries: vec![0; (m + 1) * (n + 1)],
        }
    }

    pub fn from_fn(m: usize, n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut t = Self::zeros(m, n);
        for i in 1..=m {
            for j in 1..=n {
                t.set(i, j, f(i, j));
            }
        }
        t
    }

    /// Builds a table from rows `1..=m` (each of length `n`).
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, CoxeterError> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(CoxeterError::WindowMismatch("ragged rank table".into()));
        }
        Ok(Self::from_fn(m, n, |i, j| rows[i - 1][j - 1]))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        assert!(i <= self.m && j <= self.n, "rank table index out of range");
        self.entries[i * (self.n + 1) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        assert!(i >= 1 && j >= 1 && i <= self.m && j <= self.n);
        self.entries[i * (self.n + 1) + j] = v;
    }

    /// Rows `1..=m` restricted to columns `1..=n`.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.m)
            .map(|i| (1..=self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.m == self.n && (1..=self.m).all(|i| (1..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Entrywise minimum of two tables of the same shape.
    pub fn min(&self, other: &RankTable) -> Result<RankTable, CoxeterError> {
        if self.m != other.m || self.n != other.n {
            return Err(CoxeterError::WindowMismatch(
                "rank tables differ in shape".into(),
            ));
        }
        Ok(RankTable::from_fn(self.m, self.n, |i, j| {
            self.get(i, j).min(other.get(i, j))
        }))
    }

    /// Whether every entry of `self` is at most the matching entry of `other`.
    pub fn le(&self, other: &RankTable) -> bool {
        self.m == other.m
            && self.n == other.n
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            writeln!(
                f,
                "{}",
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            )?;
        }
        Ok(())
    }
}

/// `FPF_n(y)`: pairs the fixed points `i_1 < ... < i_k` of `y` with
/// `n+1, ..., n+k` and continues with the shifted fpf tail.
pub fn fpf_standardize(y: &Permutation, n: usize) -> Result<Permutation, CoxeterError> {
    if y.tail != Tail::Identity || !y.is_involution() {
        return Err(CoxeterError::NotInvolution);
    }
    if y.window() > n {
        return Err(CoxeterError::OutsideWindow {
            point: y.window(),
            n,
        });
    }
    let fixed: Vec<usize> = (1..=n).filter(|&i| y.apply(i) == i).collect();
    let k = fixed.len();
    let mut images = vec![0; n + k];
    for i in 1..=n {
        images[i - 1] = y.apply(i);
    }
    for (t, &f) in fixed.iter().enumerate() {
        images[f - 1] = n + t + 1;
        images[n + t] = f;
    }
    Permutation::new(images, Tail::Fpf)
}

/// Inverse of [`fpf_standardize`] on its image: `Some(y)` with `FPF_n(y) = z`.
pub fn fpf_unstandardize(z: &Permutation, n: usize) -> Option<Permutation> {
    if z.tail != Tail::Fpf {
        return None;
    }
    let images: Vec<usize> = (1..=n)
        .map(|i| {
            let v = z.apply(i);
            if v <= n {
                v
            } else {
                i
            }
        })
        .collect();
    let y = Permutation::from_one_line(&images).ok()?;
    match fpf_standardize(&y, n) {
        Ok(zz) if &zz == z => Some(y),
        _ => None,
    }
}

/// Reads cycle notation as an element of `FPF_n(I_n)`.
///
/// The string is first taken literally as an fpf involution whose pairs past
/// the listed points follow `1_FPF` (so `"()"` is `1_FPF`); if that has fixed
/// points it is read as an involution `y` of `[n]` and standardized.
pub fn parse_fpf(s: &str, n: usize) -> Result<Permutation, CoxeterError> {
    let y = Permutation::parse_cycles(s)?;
    let literal = Permutation::new(y.images_up_to(y.window()), Tail::Fpf)
        .ok()
        .filter(|z| z.is_fpf_involution());
    let z = match literal {
        Some(z) => z,
        None => fpf_standardize(&y, n)?,
    };
    if in_fpf_image(&z, n) {
        Ok(z)
    } else {
        Err(CoxeterError::WindowMismatch(format!(
            "{z} is not in the fpf image of window {n}"
        )))
    }
}

/// Whether `z ∈ FPF_n(I_n)`.
pub fn in_fpf_image(z: &Permutation, n: usize) -> bool {
    fpf_unstandardize(z, n).is_some()
}

/// Visible descents `i` with `z(i+1) < min(i, z(i))`, scanned through the window.
pub fn visible_descents(z: &Permutation) -> Vec<usize> {
    (1..=z.window() + 2)
        .filter(|&i| z.apply(i + 1) < i.min(z.apply(i)))
        .collect()
}

/// All involutions of `[n]`, as identity-tail permutations, in lexicographic
/// order of their one-line notation.
pub fn involutions(n: usize) -> Vec<Permutation> {
    fn rec(images: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        let Some(first) = images.iter().position(|&v| v == 0) else {
            out.push(images.clone());
            return;
        };
        images[first] = first + 1;
        rec(images, n, out);
        images[first] = 0;
        for b in first + 1..n {
            if images[b] == 0 {
                images[first] = b + 1;
                images[b] = first + 1;
                rec(images, n, out);
                images[first] = 0;
                images[b] = 0;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0; n], n, &mut out);
    out.sort();
    out.into_iter()
        .map(|v| Permutation::from_one_line(&v).unwrap())
        .collect()
}

/// `FPF_n(I_n)`, in the order of [`involutions`].
pub fn fpf_involutions(n: usize) -> Vec<Permutation> {
    involutions(n)
        .iter()
        .map(|y| fpf_standardize(y, n).unwrap())
        .collect()
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation::from_one_line(cur).unwrap());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, n, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n + 1], n, &mut out);
    out
}

/// `z_square(n) = FPF_n(1) = (1,n+1)(2,n+2)...(n,2n)`.
pub fn z_square(n: usize) -> Permutation {
    fpf_standardize(&Permutation::identity(), n).unwrap()
}

/// `w_square(m,n) = (n+1)(n+2)...(n+m)12...n`, whose diagram is `[m]×[n]`.
pub fn w_square(m: usize, n: usize) -> Permutation {
    let images: Vec<usize> = (n + 1..=n + m).chain(1..=n).collect();
    Permutation::from_one_line(&images).unwrap()
}

/// `D(w) = {(i,j) : j < w(i), i < w⁻¹(j)}` for identity-tail `w`.
pub fn rothe_diagram(w: &Permutation) -> Result<Diagram, CoxeterError> {
    if w.tail != Tail::Identity {
        return Err(CoxeterError::NeedsIdentityTail);
    }
    let n = w.window();
    let mut d = Diagram::new();
    for i in 1..=n {
        for j in 1..w.apply(i) {
            if i < w.inverse_apply(j) {
                d.insert(Cell::new(i, j));
            }
        }
    }
    Ok(d)
}

/// `D^ss(z) = {(i,j) : j < z(i), j < i < z(j)}`.
pub fn ss_rothe_diagram(z: &Permutation) -> Result<Diagram, CoxeterError> {
    if z.tail != Tail::Fpf {
        return Err(CoxeterError::NotFpf);
    }
    // Past the window z(i) = i ± 1, so every cell has both coordinates in the window.
    let n = z.window();
    let mut d = Diagram::new();
    for i in 1..=n {
        for j in 1..i {
            if j < z.apply(i) && i < z.apply(j) {
                d.insert(Cell::new(i, j));
            }
        }
    }
    Ok(d)
}

/// Cells `(i,j) ∈ D` with `(i+1,j) ∉ D` and `(i,j+1) ∉ D`.
pub fn essential_set(d: &Diagram) -> Diagram {
    d.iter()
        .filter(|c| !d.contains_rc(c.row + 1, c.col) && !d.contains_rc(c.row, c.col + 1))
        .copied()
        .collect()
}

/// `r_w(i,j) = #{k ≤ i : w(k) ≤ j}` on `[m]×[n]`.
pub fn rank_table(w: &Permutation, m: usize, n: usize) -> RankTable {
    let mut t = RankTable::zeros(m, n);
    for i in 1..=m {
        let wi = w.apply(i);
        for j in 1..=n {
            let v = t.get(i - 1, j) + usize::from(wi <= j);
            t.set(i, j, v);
        }
    }
    t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BruhatMode {
    /// Both arguments in `S^{m,n}_∞`.
    Classical { m: usize, n: usize },
    /// Both arguments in `FPF_n(I_n)`.
    Fpf { n: usize },
}

/// Whether `x ≤ y` in Bruhat order, decided by rank-table domination:
/// `x ≤ y` iff `r_y ≤ r_x` entrywise on the window.
pub fn bruhat_leq(
    x: &Permutation,
    y: &Permutation,
    mode: BruhatMode,
) -> Result<bool, CoxeterError> {
    match mode {
        BruhatMode::Classical { m, n } => {
            for w in [x, y] {
                let d = rothe_diagram(w)?;
                if d.max_row() > m || d.max_col() > n {
                    return Err(CoxeterError::WindowMismatch(format!(
                        "{w} is not in S^({m},{n})"
                    )));
                }
            }
            Ok(rank_table(y, m, n).le(&rank_table(x, m, n)))
        }
        BruhatMode::Fpf { n } => {
            for z in [x, y] {
                if !in_fpf_image(z, n) {
                    return Err(CoxeterError::WindowMismatch(format!(
                        "{z} is not in FPF_{n}(I_{n})"
                    )));
                }
            }
            Ok(rank_table(y, n, n).le(&rank_table(x, n, n)))
        }
    }
}

/// Rank-table domination on an explicit square window, without membership checks.
pub fn rank_leq_on_window(x: &Permutation, y: &Permutation, window: usize) -> bool {
    let mut rx = vec![0usize; window + 1];
    let mut ry = vec![0usize; window + 1];
    for i in 1..=window {
        let (xi, yi) = (x.apply(i), y.apply(i));
        let mut cx = 0;
        let mut cy = 0;
        for j in 1..=window {
            cx += usize::from(xi == j);
            cy += usize::from(yi == j);
            rx[j] += cx;
            ry[j] += cy;
            if ry[j] > rx[j] {
                return false;
            }
        }
    }
    true
}

/// The dominant component `dom(z) = {(i,j) : r_z(i,j) = 0}` and its outer corners,
/// the cells `(i,j) ∉ dom(z)` whose upper and left neighbours lie in
/// `dom(z)` or on the zero row/column.
pub fn dominant_component(z: &Permutation) -> (Diagram, Diagram) {
    let rows = z.inverse_apply(1);
    let cols = z.apply(1);
    let t = rank_table(z, rows, cols);
    let mut dom = Diagram::new();
    for i in 1..=rows {
        for j in 1..=cols {
            if t.get(i, j) == 0 {
                dom.insert(Cell::new(i, j));
            }
        }
    }
    let in_dom = |i: usize, j: usize| i == 0 || j == 0 || dom.contains_rc(i, j);
    let mut corners = Diagram::new();
    for i in 1..=rows {
        for j in 1..=cols {
            if !dom.contains_rc(i, j) && in_dom(i - 1, j) && in_dom(i, j - 1) {
                corners.insert(Cell::new(i, j));
            }
        }
    }
    (dom, corners)
}

/// Whether `D^ss(z) = dom(z) ∩ ▽_n`.
pub fn is_fpf_dominant(z: &Permutation, n: usize) -> bool {
    let Ok(d) = ss_rothe_diagram(z) else {
        return false;
    };
    let (dom, _) = dominant_component(z);
    let below: Diagram = dom
        .iter()
        .filter(|c| c.row > c.col && c.row <= n)
        .copied()
        .collect();
    d == below
}

/// `Ψ(z,p) = {(p,r) z (p,r) : r > p, ℓ_fpf = ℓ_fpf(z) + 1}`, ordered by `r`.
pub fn transitions_psi(z: &Permutation, p: usize) -> Result<Vec<Permutation>, CoxeterError> {
    let base = z.fpf_length()?;
    // For r beyond window + 4 some e between p and r has z(p) < z(e) < z(r).
    let top = z.window().max(p) + 4;
    let mut out = Vec::new();
    for r in p + 1..=top {
        let v = z.conjugate(p, r);
        if v.fpf_length()? == base + 1 {
            out.push(v);
        }
    }
    Ok(out)
}

/// `Φ(w,p) = {w (p,r) : r > p, ℓ = ℓ(w) + 1}`, ordered by `r`.
pub fn transitions_phi(w: &Permutation, p: usize) -> Result<Vec<Permutation>, CoxeterError> {
    let base = w.length()?;
    let top = w.window().max(p) + 1;
    let mut out = Vec::new();
    for r in p + 1..=top {
        let v = w.times_transposition(p, r);
        if v.length()? == base + 1 {
            out.push(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fpf(cycles: &str, n: usize) -> Permutation {
        fpf_standardize(&Permutation::parse_cycles(cycles).unwrap(), n).unwrap()
    }

    fn cells(v: &[(usize, usize)]) -> Diagram {
        Diagram::from_cells(v.iter().copied())
    }

    #[test]
    fn standardize_examples() {
        let z = fpf("(1,4)", 5);
        let expect = [4, 6, 7, 1, 8, 2, 3, 5, 10, 9, 12, 11];
        for (k, &v) in expect.iter().enumerate() {
            assert_eq!(z.apply(k + 1), v);
        }
        let zs = fpf("()", 4);
        assert_eq!(zs.images_up_to(10), vec![5, 6, 7, 8, 1, 2, 3, 4, 10, 9]);
        assert_eq!(fpf("(1,2)", 2), Permutation::one_fpf());
    }

    #[test]
    fn standardize_rejects() {
        let w = Permutation::parse_one_line("2 3 1").unwrap();
        assert_eq!(fpf_standardize(&w, 3), Err(CoxeterError::NotInvolution));
        let y = Permutation::parse_cycles("(1,5)").unwrap();
        assert!(matches!(
            fpf_standardize(&y, 4),
            Err(CoxeterError::OutsideWindow { .. })
        ));
    }

    #[test]
    fn rothe_examples() {
        let w = Permutation::parse_one_line("3142").unwrap();
        assert_eq!(rothe_diagram(&w).unwrap(), cells(&[(1, 1), (1, 2), (3, 2)]));
        assert!(rothe_diagram(&Permutation::identity()).unwrap().is_empty());
        let w = Permutation::parse_one_line("2143").unwrap();
        assert_eq!(rothe_diagram(&w).unwrap(), cells(&[(1, 1), (3, 3)]));
    }

    #[test]
    fn ss_rothe_examples() {
        assert_eq!(
            ss_rothe_diagram(&fpf("(1,2)(3,5)(4,6)", 6)).unwrap(),
            cells(&[(4, 3)])
        );
        assert_eq!(
            ss_rothe_diagram(&fpf("(1,2)(3,6)(4,5)", 6)).unwrap(),
            cells(&[(4, 3), (5, 3)])
        );
        assert!(ss_rothe_diagram(&Permutation::one_fpf())
            .unwrap()
            .is_empty());
        assert!(ss_rothe_diagram(&Permutation::identity()).is_err());
    }

    #[test]
    fn essential_examples() {
        assert_eq!(essential_set(&cells(&[(4, 3), (5, 3)])), cells(&[(5, 3)]));
        assert!(essential_set(&Diagram::new()).is_empty());
        let d = ss_rothe_diagram(&fpf("(1,4)(2,6)(3,5)", 6)).unwrap();
        assert_eq!(essential_set(&d), cells(&[(3, 2), (5, 2)]));
    }

    #[test]
    fn rank_table_examples() {
        let z = fpf("(1,4)(2,6)(3,5)", 6);
        let expect = vec![
            vec![0, 0, 0, 1, 1, 1],
            vec![0, 0, 0, 1, 1, 2],
            vec![0, 0, 0, 1, 2, 3],
            vec![1, 1, 1, 2, 3, 4],
            vec![1, 1, 2, 3, 4, 5],
            vec![1, 2, 3, 4, 5, 6],
        ];
        assert_eq!(rank_table(&z, 6, 6).rows(), expect);
        let t = rank_table(&Permutation::identity(), 3, 3);
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(t.get(i, j), i.min(j));
            }
        }
        for n in 1..6 {
            assert_eq!(rank_table(&z_square(n), n, n), RankTable::zeros(n, n));
        }
    }

    #[test]
    fn cycle_and_one_line_round_trip() {
        for w in permutations(4) {
            assert_eq!(Permutation::parse_cycles(&w.to_cycle_string()).unwrap(), w);
            if w.window() > 0 {
                assert_eq!(Permutation::parse_one_line(&w.to_one_line()).unwrap(), w);
            }
        }
        assert_eq!(
            Permutation::parse_cycles("()").unwrap(),
            Permutation::identity()
        );
        assert!(Permutation::parse_cycles("(1,2").is_err());
        assert!(Permutation::parse_cycles("(1,2)(2,3)").is_err());
        assert!(Permutation::parse_one_line("1 1").is_err());
    }

    #[test]
    fn lengths_match_diagrams() {
        for w in permutations(5) {
            assert_eq!(w.length().unwrap(), rothe_diagram(&w).unwrap().len());
        }
    }

    #[test]
    fn fpf_image_has_no_big_visible_descent() {
        for n in 1..=6 {
            let ys = involutions(n);
            for y in &ys {
                let z = fpf_standardize(y, n).unwrap();
                assert!(visible_descents(&z).iter().all(|&d| d <= n));
                assert_eq!(fpf_unstandardize(&z, n).as_ref(), Some(y));
                let d = ss_rothe_diagram(&z).unwrap();
                assert!(d.max_row() <= n && d.max_col() <= n);
            }
            let mut zs = fpf_involutions(n);
            zs.sort();
            zs.dedup();
            assert_eq!(zs.len(), ys.len());
        }
    }

    #[test]
    fn rothe_window_characterization() {
        // w ∈ S^{m,n} (no right descent > m, no left descent > n) iff D(w) ⊆ [m]×[n]
        for w in permutations(5) {
            let inv = w.inverse();
            let d = rothe_diagram(&w).unwrap();
            for m in 1..=5 {
                for n in 1..=5 {
                    let desc_ok = (m + 1..6).all(|i| w.apply(i) < w.apply(i + 1))
                        && (n + 1..6).all(|i| inv.apply(i) < inv.apply(i + 1));
                    let fits = d.max_row() <= m && d.max_col() <= n;
                    assert_eq!(desc_ok, fits, "w={w} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn dominant_examples() {
        let (_, corners) = dominant_component(&fpf("(1,5)(2,4)(3,6)", 6));
        assert_eq!(corners, cells(&[(1, 5), (2, 4), (4, 2), (5, 1)]));
        let (dom, corners) = dominant_component(&Permutation::one_fpf());
        assert_eq!(dom, cells(&[(1, 1)]));
        assert_eq!(corners, cells(&[(1, 2), (2, 1)]));
        for n in 1..6 {
            let (dom, corners) = dominant_component(&z_square(n));
            assert!(Diagram::rectangle(n, n).is_subset(&dom));
            assert!(corners.iter().all(|c| c.row > n || c.col > n));
        }
    }

    #[test]
    fn corners_are_permutation_positions() {
        for n in 1..=6 {
            for z in fpf_involutions(n) {
                let (dom, corners) = dominant_component(&z);
                for c in corners.iter() {
                    assert_eq!(z.apply(c.row), c.col);
                }
                // Young diagram
                for c in dom.iter() {
                    if c.row > 1 {
                        assert!(dom.contains_rc(c.row - 1, c.col));
                    }
                    if c.col > 1 {
                        assert!(dom.contains_rc(c.row, c.col - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn psi_scan_is_wide_enough() {
        for n in 1..=5 {
            for z in fpf_involutions(n) {
                let base = z.fpf_length().unwrap();
                for p in 1..=n + 2 {
                    let psi = transitions_psi(&z, p).unwrap();
                    let wide: Vec<_> = (p + 1..=z.window() + 16)
                        .map(|r| z.conjugate(p, r))
                        .filter(|v| v.fpf_length().unwrap() == base + 1)
                        .collect();
                    assert_eq!(psi, wide);
                }
            }
        }
    }

    #[test]
    fn psi_of_one_fpf() {
        let psi = transitions_psi(&Permutation::one_fpf(), 2).unwrap();
        // only r = 3 qualifies: (2,3) 1_FPF (2,3) = (1,3)(2,4)
        assert_eq!(
            psi,
            vec![Permutation::parse_cycles("(1,3)(2,4)")
                .map(|y| fpf_standardize(&y, 4).unwrap())
                .unwrap()]
        );
    }

    #[test]
    fn psi_at_corners_stays_in_image() {
        for n in 2..=6 {
            for z in fpf_involutions(n) {
                let (_, corners) = dominant_component(&z);
                for c in corners.iter().filter(|c| c.row <= n && c.row > c.col) {
                    for v in transitions_psi(&z, c.row).unwrap() {
                        assert!(in_fpf_image(&v, n), "z={z} corner={c} v={v}");
                    }
                }
            }
        }
    }

    #[test]
    fn phi_lengths() {
        for w in permutations(4) {
            for p in 1..=4 {
                for v in transitions_phi(&w, p).unwrap() {
                    assert_eq!(v.length().unwrap(), w.length().unwrap() + 1);
                }
            }
        }
    }

    #[test]
    fn window_two_n_domination_follows_from_n() {
        for n in 1..=5 {
            let zs = fpf_involutions(n);
            for x in &zs {
                for y in &zs {
                    let small = rank_table(y, n, n).le(&rank_table(x, n, n));
                    let big = rank_leq_on_window(x, y, 2 * n);
                    assert_eq!(small, big);
                }
            }
        }
    }

    #[test]
    fn fpf_bruhat_extremes() {
        for n in 1..=5 {
            let top = z_square(n);
            for z in fpf_involutions(n) {
                assert!(bruhat_leq(&z, &z, BruhatMode::Fpf { n }).unwrap());
                assert!(bruhat_leq(&z, &top, BruhatMode::Fpf { n }).unwrap());
            }
        }
        assert!(bruhat_leq(&z_square(3), &z_square(3), BruhatMode::Fpf { n: 2 }).is_err());
    }

    #[test]
    fn cell_order_is_reading_order() {
        let d = cells(&[(1, 3), (1, 4), (2, 6), (5, 3), (5, 5), (5, 4)]);
        let order: Vec<_> = d.iter().map(|c| (c.row, c.col)).collect();
        assert_eq!(order, vec![(1, 4), (1, 3), (2, 6), (5, 5), (5, 4), (5, 3)]);
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            "[[1,4],[1,3],[2,6],[5,5],[5,4],[5,3]]"
        );
        let back: Diagram = serde_json::from_str("[[5,3],[1,4]]").unwrap();
        assert_eq!(back, cells(&[(1, 4), (5, 3)]));
        assert_eq!(Diagram::parse_cells("1,4;5,3").unwrap(), back);
        assert_eq!(Diagram::parse_cells(&back.to_cells_string()).unwrap(), back);
    }
}
