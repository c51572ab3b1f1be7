//! Reading words, reduced pipe dreams, fpf-involution pipe dreams and their
//! extended variant, built on the 0-Hecke-style `∗` action.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{
    dominant_component, in_fpf_image, transitions_psi, Cell, CoxeterError, Diagram, Permutation,
    Tail,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipeDreamError {
    #[error("{0} is not in the fpf image of window {1}")]
    NotInImage(String, usize),
    #[error("{0} is not a fixed-point-free involution")]
    NotFpf(String),
    #[error("Q must lie strictly below the diagonal of window {0}")]
    NotInTriangle(usize),
    #[error("({0},{1}) is not an outer corner of dom(z) inside the triangle")]
    NotACorner(usize, usize),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Classical,
    Fpf,
    ExtendedFpf,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PipeDream {
    pub cells: Diagram,
    pub flavor: Flavor,
}

impl PipeDream {
    pub fn word(&self) -> Vec<usize> {
        reading_word(&self.cells)
    }

    /// Rows `1..=n` of `.` and `+`.
    pub fn render(&self, n: usize) -> String {
        render(&self.cells, n)
    }
}

/// ASCII picture of `d` on an `n × n` window: `+` for cells, `.` otherwise.
pub fn render(d: &Diagram, n: usize) -> String {
    let mut s = String::new();
    for i in 1..=n {
        for j in 1..=n {
            s.push(if d.contains_rc(i, j) { '+' } else { '.' });
        }
        s.push('\n');
    }
    s
}

/// Letters `i+j−1`, rows top to bottom, each row right to left.
pub fn reading_word(d: &Diagram) -> Vec<usize> {
    d.iter().map(|c| c.row + c.col - 1).collect()
}

/// Element of `{1} ⊔ I^FPF_∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HeckeFpf {
    Unit,
    Inv(Permutation),
}

impl HeckeFpf {
    pub fn start() -> Self {
        HeckeFpf::Inv(Permutation::one_fpf())
    }

    /// `z ∗ s_i`.
    pub fn star(&self, i: usize) -> HeckeFpf {
        match self {
            HeckeFpf::Unit => HeckeFpf::Unit,
            HeckeFpf::Inv(z) => {
                let (a, b) = (z.apply(i), z.apply(i + 1));
                if a == i + 1 {
                    HeckeFpf::Unit
                } else if a > b {
                    self.clone()
                } else {
                    HeckeFpf::Inv(z.conjugate(i, i + 1))
                }
            }
        }
    }
}

impl fmt::Display for HeckeFpf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeckeFpf::Unit => write!(f, "1"),
            HeckeFpf::Inv(z) => write!(f, "{z}"),
        }
    }
}

/// `δ_fpf(i_1 ⋯ i_l) = (⋯(1_FPF ∗ s_{i_1}) ⋯) ∗ s_{i_l}`.
pub fn delta_fpf(word: &[usize]) -> HeckeFpf {
    word.iter().fold(HeckeFpf::start(), |z, &i| z.star(i))
}

/// Cells of `▽_n = {(i,j) ∈ [n]² : i > j}` in reading order.
pub fn triangle(n: usize) -> Vec<Cell> {
    let mut v: Vec<Cell> = (1..=n)
        .flat_map(|i| (1..i).map(move |j| Cell::new(i, j)))
        .collect();
    v.sort();
    v
}

/// Fixed-size one-line array of an fpf involution that preserves `[len]`.
#[derive(Clone)]
struct RawFpf {
    img: Vec<usize>,
}

enum Step {
    Unit,
    Stay,
    Conj,
}

impl RawFpf {
    fn new(z: &Permutation, len: usize) -> Self {
        RawFpf {
            img: z.images_up_to(len),
        }
    }

    fn step(&self, a: usize) -> Step {
        let (x, y) = (self.img[a - 1], self.img[a]);
        if x == a + 1 {
            Step::Unit
        } else if x > y {
            Step::Stay
        } else {
            Step::Conj
        }
    }

    /// `s_a z s_a`; self-inverse, so it also undoes itself.
    fn conj(&mut self, a: usize) {
        let (x, y) = (self.img[a - 1], self.img[a]);
        self.img[a - 1] = y;
        self.img[a] = x;
        self.img[x - 1] = a + 1;
        self.img[y - 1] = a;
    }

    /// `self ≤ z` given the rank table of `z` on the window.
    fn leq(&self, z_ranks: &[Vec<u16>]) -> bool {
        let n = self.img.len();
        let mut col = vec![0u16; n + 1];
        for i in 1..=n {
            let v = self.img[i - 1];
            let mut run = 0u16;
            for j in 1..=n {
                run += u16::from(v == j);
                col[j] += run;
                if z_ranks[i][j] > col[j] {
                    return false;
                }
            }
        }
        true
    }
}

fn raw_ranks(z: &[usize]) -> Vec<Vec<u16>> {
    let n = z.len();
    // t[i][j] = #{k ≤ i : z(k) ≤ j}
    let mut t = vec![vec![0u16; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            t[i][j] = t[i - 1][j] + u16::from(z[i - 1] <= j);
        }
    }
    t
}

fn fpf_window(z: &Permutation, n: usize) -> usize {
    let w = z.window().max(2 * n);
    w + (w % 2)
}

fn check_fpf(z: &Permutation) -> Result<(), PipeDreamError> {
    if z.is_fpf_involution() {
        Ok(())
    } else {
        Err(PipeDreamError::NotFpf(z.to_string()))
    }
}

/// `FP(z)` inside `▽_n`: sets whose reading word is an fpf-involution word
/// for `z`, found by depth-first search in reading order. Each included cell
/// must raise the fpf length by one, and partial products must stay `≤ z`.
pub fn enumerate_fp(z: &Permutation, n: usize) -> Result<Vec<Diagram>, PipeDreamError> {
    if !in_fpf_image(z, n) {
        return Err(PipeDreamError::NotInImage(z.to_string(), n));
    }
    Ok(fp_in_triangle(z, n))
}

/// `FP(z) ∩ P(▽_n)` without the window precondition.
pub fn fp_in_triangle(z: &Permutation, n: usize) -> Vec<Diagram> {
    let len = fpf_window(z, n);
    let target = z.images_up_to(len);
    let ranks = raw_ranks(&target);
    let goal = z.fpf_length().unwrap_or(0);
    let cells = triangle(n);
    let mut out = Vec::new();
    let mut cur = RawFpf::new(&Permutation::one_fpf(), len);
    let mut chosen = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        cells: &[Cell],
        goal: usize,
        cur: &mut RawFpf,
        chosen: &mut Vec<Cell>,
        target: &[usize],
        ranks: &[Vec<u16>],
        out: &mut Vec<Diagram>,
    ) {
        if chosen.len() == goal {
            if cur.img == target {
                out.push(chosen.iter().copied().collect());
            }
            return;
        }
        if cells.len() - k < goal - chosen.len() {
            return;
        }
        let c = cells[k];
        let a = c.row + c.col - 1;
        if let Step::Conj = cur.step(a) {
            cur.conj(a);
            if cur.leq(ranks) {
                chosen.push(c);
                rec(k + 1, cells, goal, cur, chosen, target, ranks, out);
                chosen.pop();
            }
            cur.conj(a);
        }
        rec(k + 1, cells, goal, cur, chosen, target, ranks, out);
    }
    rec(
        0,
        &cells,
        goal,
        &mut cur,
        &mut chosen,
        &target,
        &ranks,
        &mut out,
    );
    out.sort();
    out
}

/// `FP⁺(z)` restricted to subsets of `q ⊆ ▽_n`: all `D ⊆ q` with
/// `δ_fpf(word(D)) = z`.
pub fn enumerate_fp_plus(
    z: &Permutation,
    n: usize,
    q: &Diagram,
) -> Result<Vec<Diagram>, PipeDreamError> {
    check_fpf(z)?;
    if q.iter().any(|c| c.row <= c.col || c.row > n) {
        return Err(PipeDreamError::NotInTriangle(n));
    }
    let len = fpf_window(z, n);
    let target = z.images_up_to(len);
    let ranks = raw_ranks(&target);
    let cells: Vec<Cell> = q.iter().copied().collect();
    let mut out = Vec::new();
    let mut cur = RawFpf::new(&Permutation::one_fpf(), len);
    let mut chosen = Vec::new();
    fn rec(
        k: usize,
        cells: &[Cell],
        cur: &mut RawFpf,
        chosen: &mut Vec<Cell>,
        target: &[usize],
        ranks: &[Vec<u16>],
        out: &mut Vec<Diagram>,
    ) {
        if k == cells.len() {
            if cur.img == target {
                out.push(chosen.iter().copied().collect());
            }
            return;
        }
        let c = cells[k];
        let a = c.row + c.col - 1;
        match cur.step(a) {
            Step::Unit => {}
            Step::Stay => {
                chosen.push(c);
                rec(k + 1, cells, cur, chosen, target, ranks, out);
                chosen.pop();
            }
            Step::Conj => {
                cur.conj(a);
                if cur.leq(ranks) {
                    chosen.push(c);
                    rec(k + 1, cells, cur, chosen, target, ranks, out);
                    chosen.pop();
                }
                cur.conj(a);
            }
        }
        rec(k + 1, cells, cur, chosen, target, ranks, out);
    }
    rec(0, &cells, &mut cur, &mut chosen, &target, &ranks, &mut out);
    out.sort();
    Ok(out)
}

/// Powerset scan of `q`, the unpruned oracle for [`enumerate_fp_plus`].
pub fn fp_plus_brute_force(z: &Permutation, q: &Diagram) -> Vec<Diagram> {
    let cells: Vec<Cell> = q.iter().copied().collect();
    assert!(cells.len() < 24, "powerset too large");
    let want = HeckeFpf::Inv(z.clone());
    let mut out = Vec::new();
    for mask in 0u32..(1 << cells.len()) {
        let d: Diagram = (0..cells.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| cells[k])
            .collect();
        if delta_fpf(&reading_word(&d)) == want {
            out.push(d);
        }
    }
    out.sort();
    out
}

/// Left-multiplication state `u = v⁻¹ w` on a fixed window.
struct RawLeft {
    one_line: Vec<usize>,
    pos: Vec<usize>,
    length: usize,
}

impl RawLeft {
    fn new(w: &Permutation, len: usize) -> Self {
        let one_line = w.images_up_to(len);
        let mut pos = vec![0; len + 1];
        for (k, &v) in one_line.iter().enumerate() {
            pos[v] = k + 1;
        }
        let length = w.length().expect("identity tail");
        RawLeft {
            one_line,
            pos,
            length,
        }
    }

    fn is_left_descent(&self, a: usize) -> bool {
        self.pos[a] > self.pos[a + 1]
    }

    /// `u ↦ s_a u`; self-inverse up to the length bookkeeping.
    fn swap_values(&mut self, a: usize) {
        let (p, q) = (self.pos[a], self.pos[a + 1]);
        self.one_line[p - 1] = a + 1;
        self.one_line[q - 1] = a;
        self.pos.swap(a, a + 1);
    }
}

/// `RP(w)` inside the `m × n` window, by depth-first search in reading
/// order: a cell is taken only if its letter keeps the partial word a
/// prefix of a reduced word for `w`.
pub fn enumerate_rp(w: &Permutation, m: usize, n: usize) -> Result<Vec<Diagram>, PipeDreamError> {
    if w.tail() != Tail::Identity {
        return Err(CoxeterError::NeedsIdentityTail.into());
    }
    let cells: Vec<Cell> = {
        let mut v: Vec<Cell> = (1..=m)
            .flat_map(|i| (1..=n).map(move |j| Cell::new(i, j)))
            .collect();
        v.sort();
        v
    };
    Ok(rp_search(w, &cells, |_, _| None))
}

/// Symmetric `D = D^T ∈ RP(y)` for `y ∈ S_m` with cells `i + j ≤ m`.
pub fn enumerate_symmetric_rp(y: &Permutation, m: usize) -> Vec<Diagram> {
    let cells: Vec<Cell> = {
        let mut v: Vec<Cell> = (1..m)
            .flat_map(|i| (1..=m - i).map(move |j| Cell::new(i, j)))
            .collect();
        v.sort();
        v
    };
    // a cell below the diagonal copies the decision made for its transpose
    rp_search(y, &cells, |c, chosen| {
        if c.row > c.col {
            Some(chosen.contains(&c.transpose()))
        } else {
            None
        }
    })
}

fn rp_search(
    w: &Permutation,
    cells: &[Cell],
    forced: impl Fn(Cell, &BTreeSet<Cell>) -> Option<bool>,
) -> Vec<Diagram> {
    let len = cells
        .iter()
        .map(|c| c.row + c.col)
        .max()
        .unwrap_or(0)
        .max(w.window())
        + 1;
    let mut state = RawLeft::new(w, len);
    let mut chosen = BTreeSet::new();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[Cell],
        st: &mut RawLeft,
        chosen: &mut BTreeSet<Cell>,
        forced: &dyn Fn(Cell, &BTreeSet<Cell>) -> Option<bool>,
        out: &mut Vec<Diagram>,
    ) {
        if st.length == 0 {
            if (k..cells.len()).all(|t| forced(cells[t], chosen) != Some(true)) {
                out.push(Diagram::from_cells(chosen.iter().map(|c| (c.row, c.col))));
            }
            return;
        }
        if cells.len() - k < st.length {
            return;
        }
        let c = cells[k];
        let a = c.row + c.col - 1;
        let f = forced(c, chosen);
        if f != Some(false) && st.is_left_descent(a) {
            st.swap_values(a);
            st.length -= 1;
            chosen.insert(c);
            rec(k + 1, cells, st, chosen, forced, out);
            chosen.remove(&c);
            st.length += 1;
            st.swap_values(a);
        }
        if f != Some(true) {
            rec(k + 1, cells, st, chosen, forced, out);
        }
    }
    rec(0, cells, &mut state, &mut chosen, &forced, &mut out);
    out.sort();
    out
}

/// `FP(z)` from the literal definition: symmetric reduced pipe dreams of the
/// restriction of `z` to `[m]`, intersected with the strict lower triangle.
/// `m` must be even with `z` preserving `[m]`.
pub fn fp_via_symmetric_rp(z: &Permutation, m: usize) -> Option<Vec<Diagram>> {
    if m % 2 == 1 || (1..=m).any(|i| z.apply(i) > m) {
        return None;
    }
    let y = Permutation::new(z.images_up_to(m), Tail::Identity).ok()?;
    let mut out: Vec<Diagram> = enumerate_symmetric_rp(&y, m)
        .into_iter()
        .map(|d| d.iter().filter(|c| c.row > c.col).copied().collect())
        .collect();
    out.sort();
    out.dedup();
    Some(out)
}

/// Least even `m` such that `z` preserves `[m]`.
pub fn preserved_even_window(z: &Permutation) -> usize {
    (0..)
        .step_by(2)
        .find(|&m| (1..=m).all(|i| z.apply(i) <= m) && m >= z.window())
        .unwrap()
}

/// Checks that `(p,q)` lies in no `D ∈ FP(z)` and that `D ↦ D ⊔ {(p,q)}`
/// is a bijection onto the disjoint union of `FP(y)`, `y ∈ Ψ(z,p)`.
pub fn transition_bijection_check(
    z: &Permutation,
    n: usize,
    p: usize,
    q: usize,
) -> Result<bool, PipeDreamError> {
    if !in_fpf_image(z, n) {
        return Err(PipeDreamError::NotInImage(z.to_string(), n));
    }
    let (_, corners) = dominant_component(z);
    if !(p > q && p <= n && corners.contains_rc(p, q)) {
        return Err(PipeDreamError::NotACorner(p, q));
    }
    let corner = Cell::new(p, q);
    let fp = fp_in_triangle(z, n);
    if fp.iter().any(|d| d.contains(&corner)) {
        return Ok(false);
    }
    let mut image: Vec<Diagram> = fp
        .into_iter()
        .map(|mut d| {
            d.insert(corner);
            d
        })
        .collect();
    image.sort();
    let mut union = Vec::new();
    for y in transitions_psi(z, p)? {
        let ny = n.max(y.window());
        union.extend(fp_in_triangle(&y, ny));
    }
    union.sort();
    Ok(image == union)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{fpf_standardize, involutions, permutations, ss_rothe_diagram, z_square};

    fn cells(v: &[(usize, usize)]) -> Diagram {
        Diagram::from_cells(v.iter().copied())
    }

    fn fpf(cycles: &str, n: usize) -> Permutation {
        fpf_standardize(&Permutation::parse_cycles(cycles).unwrap(), n).unwrap()
    }

    #[test]
    fn reading_word_examples() {
        let d = cells(&[(1, 4), (1, 3), (2, 6), (5, 5), (5, 4), (5, 3)]);
        assert_eq!(reading_word(&d), vec![4, 3, 7, 9, 8, 7]);
        assert!(reading_word(&Diagram::new()).is_empty());
        assert_eq!(reading_word(&cells(&[(3, 1), (3, 2)])), vec![4, 3]);
    }

    #[test]
    fn delta_fpf_basics() {
        assert_eq!(delta_fpf(&[]), HeckeFpf::start());
        assert_eq!(delta_fpf(&[1]), HeckeFpf::Unit);
        assert_eq!(delta_fpf(&[2]), HeckeFpf::Inv(z_square(2)));
        assert_eq!(HeckeFpf::Unit.star(3), HeckeFpf::Unit);
    }

    #[test]
    fn rp_examples() {
        assert_eq!(
            enumerate_rp(&Permutation::identity(), 3, 3).unwrap(),
            vec![Diagram::new()]
        );
        assert_eq!(
            enumerate_rp(&Permutation::simple(1), 2, 2).unwrap(),
            vec![cells(&[(1, 1)])]
        );
        let w = Permutation::parse_one_line("2143").unwrap();
        let mut want = vec![
            cells(&[(1, 1), (1, 3)]),
            cells(&[(1, 1), (3, 1)]),
            cells(&[(1, 1), (2, 2)]),
        ];
        want.sort();
        assert_eq!(enumerate_rp(&w, 4, 4).unwrap(), want);
    }

    /// Powerset scan of the staircase `i + j ≤ 4`, checking reducedness by multiplication.
    #[test]
    fn rp_counts_in_s4_match_subsets() {
        let stair: Vec<Cell> = (1..=3)
            .flat_map(|i| (1..=4 - i).map(move |j| Cell::new(i, j)))
            .collect();
        for w in permutations(4) {
            let len = w.length().unwrap();
            let mut count = 0;
            for mask in 0u32..(1 << stair.len()) {
                let d: Diagram = (0..stair.len())
                    .filter(|&k| mask >> k & 1 == 1)
                    .map(|k| stair[k])
                    .collect();
                if d.len() != len {
                    continue;
                }
                let mut v = Permutation::identity();
                for a in reading_word(&d) {
                    v = v.times_transposition(a, a + 1);
                }
                if v == w {
                    count += 1;
                }
            }
            assert_eq!(enumerate_rp(&w, 3, 3).unwrap().len(), count, "{w}");
        }
    }

    #[test]
    fn fp_example() {
        let z = fpf("(1,2)(3,6)(4,5)", 6);
        let mut want = vec![
            cells(&[(4, 1), (5, 1)]),
            cells(&[(3, 2), (5, 1)]),
            cells(&[(3, 2), (4, 2)]),
            cells(&[(3, 1), (3, 2)]),
        ];
        want.sort();
        assert_eq!(enumerate_fp(&z, 6).unwrap(), want);
        assert_eq!(
            enumerate_fp(&Permutation::one_fpf(), 4).unwrap(),
            vec![Diagram::new()]
        );
    }

    #[test]
    fn fp_agrees_with_symmetric_rp() {
        for n in 1..=5 {
            for y in involutions(n) {
                let z = fpf_standardize(&y, n).unwrap();
                let fp = enumerate_fp(&z, n).unwrap();
                let m0 = preserved_even_window(&z);
                for m in [m0, m0 + 2] {
                    assert_eq!(fp_via_symmetric_rp(&z, m).unwrap(), fp, "{z} m={m}");
                }
                let l = z.fpf_length().unwrap();
                assert!(fp.iter().all(|d| d.len() == l));
                for d in &fp {
                    assert_eq!(delta_fpf(&reading_word(d)), HeckeFpf::Inv(z.clone()));
                }
            }
        }
    }

    #[test]
    fn dominant_has_one_dream() {
        for n in 2..=5 {
            let z = z_square(n);
            assert_eq!(
                enumerate_fp(&z, n).unwrap(),
                vec![ss_rothe_diagram(&z).unwrap()]
            );
        }
    }

    #[test]
    fn fp_plus_matches_brute_force() {
        let q: Diagram = triangle(5).into_iter().collect();
        for y in involutions(5) {
            let z = fpf_standardize(&y, 5).unwrap();
            let fast = enumerate_fp_plus(&z, 5, &q).unwrap();
            assert_eq!(fast, fp_plus_brute_force(&z, &q), "{z}");
            let l = z.fpf_length().unwrap();
            let fp = enumerate_fp(&z, 5).unwrap();
            for d in &fast {
                assert!(d.len() >= l);
                assert_eq!(d.len() == l, fp.contains(d));
            }
        }
    }

    #[test]
    fn fp_plus_small_cases() {
        assert_eq!(
            enumerate_fp_plus(&Permutation::one_fpf(), 3, &Diagram::new()).unwrap(),
            vec![Diagram::new()]
        );
        let q = cells(&[(2, 1)]);
        assert_eq!(
            enumerate_fp_plus(&z_square(2), 2, &q).unwrap(),
            vec![q.clone()]
        );
        assert!(enumerate_fp_plus(&z_square(2), 2, &cells(&[(1, 2)])).is_err());
    }

    #[test]
    fn transitions_are_bijections() {
        for n in 2..=5 {
            for y in involutions(n) {
                let z = fpf_standardize(&y, n).unwrap();
                let (_, corners) = dominant_component(&z);
                for c in corners.iter().filter(|c| c.row > c.col && c.row <= n) {
                    assert!(
                        transition_bijection_check(&z, n, c.row, c.col).unwrap(),
                        "{z} {c}"
                    );
                }
            }
        }
        // the unit in window 2: FP = {∅} maps onto FP(z_square(2))
        assert!(transition_bijection_check(&Permutation::one_fpf(), 2, 2, 1).unwrap());
        assert!(transition_bijection_check(&Permutation::one_fpf(), 2, 1, 2).is_err());
    }

    #[test]
    fn render_shape() {
        assert_eq!(render(&cells(&[(2, 1)]), 2), "..\n+.\n");
    }
}
