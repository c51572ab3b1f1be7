//! Simplicial complexes on cells, fpf subword complexes, links and
//! deletions, vertex decomposition and Stanley–Reisner ideals.
//!
//! Vertex decomposability follows the convention where both `{∅}` and the
//! void complex `∅` are base cases and the pivot need not be a face.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::coxeter::{Cell, Diagram, Permutation};
use crate::groebner::MonomialIdeal;
use crate::pipedreams::fp_in_triangle;
use crate::polyring::{Monomial, VarSpace};

/// A complex stored by its facets, as bitmasks over a sorted vertex list.
/// No facets means the void complex; the single facet `0` is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<Cell>,
    facets: Vec<u64>,
}

fn maximal(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    sets.dedup();
    let mut out: Vec<u64> = Vec::new();
    for s in sets {
        if !out.iter().any(|&t| s & t == s) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

impl SimplicialComplex {
    pub fn new<I: IntoIterator<Item = Diagram>>(vertices: &Diagram, facets: I) -> Self {
        let verts: Vec<Cell> = vertices.iter().copied().collect();
        assert!(verts.len() <= 64, "at most 64 vertices");
        let mask = |d: &Diagram| -> u64 {
            d.iter()
                .map(|c| {
                    let k = verts
                        .binary_search(c)
                        .expect("facet vertex outside the vertex set");
                    1u64 << k
                })
                .fold(0, |a, b| a | b)
        };
        let fs = facets.into_iter().map(|d| mask(&d)).collect();
        SimplicialComplex {
            vertices: verts,
            facets: maximal(fs),
        }
    }

    pub fn void(vertices: &Diagram) -> Self {
        Self::new(vertices, [])
    }

    pub fn empty_face(vertices: &Diagram) -> Self {
        Self::new(vertices, [Diagram::new()])
    }

    pub fn simplex(vertices: &Diagram) -> Self {
        Self::new(vertices, [vertices.clone()])
    }

    pub fn vertices(&self) -> Diagram {
        self.vertices.iter().copied().collect()
    }

    fn to_diagram(&self, m: u64) -> Diagram {
        (0..self.vertices.len())
            .filter(|&k| m >> k & 1 == 1)
            .map(|k| self.vertices[k])
            .collect()
    }

    fn to_mask(&self, d: &Diagram) -> Option<u64> {
        let mut m = 0;
        for c in d.iter() {
            m |= 1u64 << self.vertices.binary_search(c).ok()?;
        }
        Some(m)
    }

    pub fn facets(&self) -> Vec<Diagram> {
        self.facets.iter().map(|&m| self.to_diagram(m)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, f: &Diagram) -> bool {
        match self.to_mask(f) {
            Some(m) => self.facets.iter().any(|&g| g & m == m),
            None => false,
        }
    }

    /// Largest face dimension; `None` for the void complex.
    pub fn dimension(&self) -> Option<i64> {
        self.facets.iter().map(|m| m.count_ones() as i64 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|m| m.count_ones());
        match sizes.next() {
            Some(k) => sizes.all(|s| s == k),
            None => true,
        }
    }

    fn restrict(&self, keep: &Diagram, facets: Vec<u64>) -> SimplicialComplex {
        let ds: Vec<Diagram> = facets.into_iter().map(|m| self.to_diagram(m)).collect();
        SimplicialComplex::new(keep, ds)
    }

    /// `link_F Δ = {E ∈ Δ : E ∩ F = ∅, E ∪ F ∈ Δ}` on `V ∖ F`.
    pub fn link(&self, f: &Diagram) -> SimplicialComplex {
        let keep = self.vertices().difference(f);
        let Some(fm) = self.to_mask(f) else {
            return SimplicialComplex::void(&keep);
        };
        let fs = self
            .facets
            .iter()
            .filter(|&&g| g & fm == fm)
            .map(|&g| g & !fm)
            .collect();
        self.restrict(&keep, fs)
    }

    /// `del_F Δ = {E ∈ Δ : E ∩ F = ∅}` on `V ∖ F`.
    pub fn deletion(&self, f: &Diagram) -> SimplicialComplex {
        let keep = self.vertices().difference(f);
        let fm = self.to_mask(&f.intersection(&self.vertices())).unwrap();
        let fs = self.facets.iter().map(|&g| g & !fm).collect();
        self.restrict(&keep, fs)
    }

    /// All faces, for small complexes.
    pub fn faces(&self) -> Vec<Diagram> {
        let mut all = Vec::new();
        for &g in &self.facets {
            let mut sub = g;
            loop {
                all.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & g;
            }
        }
        all.sort_unstable();
        all.dedup();
        all.into_iter().map(|m| self.to_diagram(m)).collect()
    }

    /// `χ̃(Δ) = Σ_{F ∈ Δ} (−1)^{|F|−1}`, so `χ̃({∅}) = −1` and `χ̃(∅) = 0`;
    /// computed by `χ̃(Δ) = χ̃(del_v Δ) − χ̃(link_v Δ)`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        fn rec(facets: Vec<u64>, memo: &mut HashMap<Vec<u64>, i64>) -> i64 {
            if facets.is_empty() {
                return 0;
            }
            if facets == [0] {
                return -1;
            }
            if let Some(&v) = memo.get(&facets) {
                return v;
            }
            let union = facets.iter().fold(0, |a, &b| a | b);
            let bit = union & union.wrapping_neg();
            let del = maximal(facets.iter().map(|&g| g & !bit).collect());
            let link = maximal(
                facets
                    .iter()
                    .filter(|&&g| g & bit != 0)
                    .map(|&g| g & !bit)
                    .collect(),
            );
            let v = rec(del, memo) - rec(link, memo);
            memo.insert(facets, v);
            v
        }
        rec(self.facets.clone(), &mut HashMap::new())
    }

    /// Minimal non-faces, as minimal transversals of the facet complements.
    pub fn minimal_nonfaces(&self) -> Vec<Diagram> {
        let all = if self.vertices.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertices.len()) - 1
        };
        let mut tr: Vec<u64> = vec![0];
        for &g in &self.facets {
            let edge = all & !g;
            let mut next = Vec::new();
            for &t in &tr {
                if t & edge != 0 {
                    next.push(t);
                } else {
                    let mut e = edge;
                    while e != 0 {
                        let b = e & e.wrapping_neg();
                        next.push(t | b);
                        e &= e - 1;
                    }
                }
            }
            tr = minimal(next);
        }
        let mut out: Vec<Diagram> = tr.into_iter().map(|m| self.to_diagram(m)).collect();
        out.sort();
        out
    }

    /// Level-wise scan for minimal non-faces: a set is one exactly when it
    /// is not a face but every subset obtained by dropping one vertex is.
    pub fn minimal_nonfaces_levelwise(&self) -> Vec<Diagram> {
        let n = self.vertices.len();
        let is_face = |m: u64| self.facets.iter().any(|&g| g & m == m);
        let mut out = Vec::new();
        if !is_face(0) {
            return vec![Diagram::new()];
        }
        let mut level: Vec<u64> = vec![0];
        while !level.is_empty() {
            let mut next = Vec::new();
            for &f in &level {
                let top = if f == 0 {
                    0
                } else {
                    64 - f.leading_zeros() as usize
                };
                for v in top..n {
                    let cand = f | 1u64 << v;
                    let mut sub_ok = true;
                    let mut rest = cand;
                    while rest != 0 {
                        let b = rest & rest.wrapping_neg();
                        rest &= rest - 1;
                        if !is_face(cand & !b) {
                            sub_ok = false;
                            break;
                        }
                    }
                    if !sub_ok {
                        continue;
                    }
                    if is_face(cand) {
                        next.push(cand);
                    } else {
                        out.push(cand);
                    }
                }
            }
            level = next;
        }
        let mut out: Vec<Diagram> = out.into_iter().map(|m| self.to_diagram(m)).collect();
        out.sort();
        out
    }

    /// The Stanley–Reisner ideal, with `u_ij` attached to the vertex `(i,j)`.
    pub fn stanley_reisner(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.minimal_nonfaces()
                .iter()
                .map(|d| Monomial::product_of(d.iter().map(|c| (c.row, c.col)))),
            VarSpace::Skew,
        )
    }

    /// Searches for a vertex decomposition, trying pivots from the last
    /// vertex in reading order down.
    pub fn vertex_decomposition(&self) -> Option<VdCertificate> {
        let mut memo = HashMap::new();
        vd(self, &mut memo)
    }

    pub fn is_vertex_decomposable(&self) -> bool {
        self.vertex_decomposition().is_some()
    }

    pub fn report(&self) -> ComplexReport {
        ComplexReport {
            vertices: self.vertices(),
            facets: self.facets(),
            minimal_nonfaces: self.minimal_nonfaces(),
            euler: self.reduced_euler_characteristic(),
            pure: self.is_pure(),
            dimension: self.dimension(),
        }
    }
}

fn minimal(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|m| m.count_ones());
    sets.dedup();
    let mut out: Vec<u64> = Vec::new();
    for s in sets {
        if !out.iter().any(|&t| t & !s == 0) {
            out.push(s);
        }
    }
    out
}

/// Pivot tree witnessing vertex decomposability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VdCertificate {
    /// The void complex.
    Void,
    /// The complex `{∅}`.
    EmptyFace,
    Split {
        pivot: Cell,
        deletion: Box<VdCertificate>,
        link: Box<VdCertificate>,
    },
}

impl VdCertificate {
    /// Pivots in preorder.
    pub fn pivots(&self) -> Vec<Cell> {
        match self {
            VdCertificate::Split {
                pivot,
                deletion,
                link,
            } => {
                let mut v = vec![*pivot];
                v.extend(deletion.pivots());
                v.extend(link.pivots());
                v
            }
            _ => Vec::new(),
        }
    }

    /// Replays the certificate against `delta`.
    pub fn check(&self, delta: &SimplicialComplex) -> bool {
        match self {
            VdCertificate::Void => delta.is_void(),
            VdCertificate::EmptyFace => delta.facets == [0],
            VdCertificate::Split {
                pivot,
                deletion,
                link,
            } => {
                let v = Diagram::from_cells([(pivot.row, pivot.col)]);
                delta.is_pure()
                    && delta.vertices.contains(pivot)
                    && deletion.check(&delta.deletion(&v))
                    && link.check(&delta.link(&v))
            }
        }
    }
}

fn vd(
    delta: &SimplicialComplex,
    memo: &mut HashMap<Vec<Diagram>, Option<VdCertificate>>,
) -> Option<VdCertificate> {
    if delta.is_void() {
        return Some(VdCertificate::Void);
    }
    if delta.facets == [0] {
        return Some(VdCertificate::EmptyFace);
    }
    if !delta.is_pure() {
        return None;
    }
    let key = delta.facets();
    if let Some(r) = memo.get(&key) {
        return r.clone();
    }
    let union = delta.facets.iter().fold(0, |a, &b| a | b);
    let mut result = None;
    for k in (0..delta.vertices.len())
        .rev()
        .filter(|&k| union >> k & 1 == 1)
    {
        let v = delta.vertices[k];
        let single = Diagram::from_cells([(v.row, v.col)]);
        let Some(d) = vd(&delta.deletion(&single), memo) else {
            continue;
        };
        let Some(l) = vd(&delta.link(&single), memo) else {
            continue;
        };
        result = Some(VdCertificate::Split {
            pivot: v,
            deletion: Box::new(d),
            link: Box::new(l),
        });
        break;
    }
    memo.insert(key, result.clone());
    result
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub vertices: Diagram,
    pub facets: Vec<Diagram>,
    pub minimal_nonfaces: Vec<Diagram>,
    pub euler: i64,
    pub pure: bool,
    pub dimension: Option<i64>,
}

/// `Σ(z,Q)`: faces `S ⊆ Q` such that `Q ∖ S` contains some `D ∈ FP(z)`.
/// `Q` must lie in `▽_n`.
pub fn subword_complex(z: &Permutation, n: usize, q: &Diagram) -> SimplicialComplex {
    let facets: Vec<Diagram> = fp_in_triangle(z, n)
        .into_iter()
        .filter(|d| d.is_subset(q))
        .map(|d| q.difference(&d))
        .collect();
    SimplicialComplex::new(q, facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::fpf_standardize;

    fn cells(v: &[(usize, usize)]) -> Diagram {
        Diagram::from_cells(v.iter().copied())
    }

    fn example() -> (Permutation, Diagram) {
        let z = fpf_standardize(&Permutation::parse_cycles("(1,2)(3,6)(4,5)").unwrap(), 6).unwrap();
        (z, cells(&[(3, 1), (3, 2), (4, 1), (4, 2), (5, 1)]))
    }

    #[test]
    fn example_facets_and_nonfaces() {
        let (z, q) = example();
        let s = subword_complex(&z, 6, &q);
        let mut want = vec![
            cells(&[(3, 1), (3, 2), (4, 2)]),
            cells(&[(3, 1), (4, 1), (4, 2)]),
            cells(&[(3, 1), (4, 1), (5, 1)]),
            cells(&[(4, 1), (4, 2), (5, 1)]),
        ];
        want.sort();
        let mut got = s.facets();
        got.sort();
        assert_eq!(got, want);
        let mut nf = vec![
            cells(&[(3, 2), (4, 1)]),
            cells(&[(3, 2), (5, 1)]),
            cells(&[(3, 1), (4, 2), (5, 1)]),
        ];
        nf.sort();
        assert_eq!(s.minimal_nonfaces(), nf);
        assert_eq!(s.minimal_nonfaces_levelwise(), nf);
        assert_eq!(s.reduced_euler_characteristic(), 0);
        assert!(s.is_pure());
        assert_eq!(s.dimension(), Some(2));
        let cert = s.vertex_decomposition().unwrap();
        assert!(cert.check(&s));
    }

    #[test]
    fn conventions() {
        let v = cells(&[(2, 1), (3, 1)]);
        assert_eq!(
            SimplicialComplex::empty_face(&v).reduced_euler_characteristic(),
            -1
        );
        assert_eq!(
            SimplicialComplex::void(&v).reduced_euler_characteristic(),
            0
        );
        assert!(SimplicialComplex::empty_face(&v).is_vertex_decomposable());
        assert!(SimplicialComplex::void(&v).is_vertex_decomposable());
        assert_eq!(
            SimplicialComplex::void(&v).minimal_nonfaces(),
            vec![Diagram::new()]
        );
        assert!(SimplicialComplex::simplex(&v).stanley_reisner().is_zero());
        assert_eq!(
            SimplicialComplex::simplex(&v).reduced_euler_characteristic(),
            0
        );
        let s = SimplicialComplex::simplex(&v);
        assert_eq!(s.link(&Diagram::new()), s);
    }

    #[test]
    fn non_pure_is_not_decomposable() {
        let v = cells(&[(2, 1), (3, 1), (3, 2)]);
        let d = SimplicialComplex::new(&v, [cells(&[(2, 1), (3, 1)]), cells(&[(3, 2)])]);
        assert!(!d.is_vertex_decomposable());
    }

    #[test]
    fn deletion_of_nonface_vertex() {
        let v = cells(&[(2, 1), (3, 1), (3, 2)]);
        let d = SimplicialComplex::new(&v, [cells(&[(2, 1), (3, 1)])]);
        let x = cells(&[(3, 2)]);
        assert_eq!(d.deletion(&x).facets(), d.facets());
        assert!(d.link(&x).is_void());
    }

    #[test]
    fn euler_matches_face_count() {
        let (z, q) = example();
        let s = subword_complex(&z, 6, &q);
        let direct: i64 = s
            .faces()
            .iter()
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum();
        assert_eq!(direct, s.reduced_euler_characteristic());
    }

    #[test]
    fn one_fpf_gives_simplex() {
        let q = cells(&[(2, 1), (3, 1), (4, 3)]);
        assert_eq!(
            subword_complex(&Permutation::one_fpf(), 4, &q),
            SimplicialComplex::simplex(&q)
        );
        let (z, _) = example();
        assert!(subword_complex(&z, 6, &cells(&[(2, 1)])).is_void());
    }
}
