use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::{RootSystem, Weight};

/// Default enumeration cap; E7 and E8 need an explicit override.
pub const DEFAULT_WEYL_CAP: u64 = 1_000_000;

/// A Weyl group element: a reduced word (0-based simple-reflection indices, read as the
/// left-to-right product `s_{w[0]} s_{w[1]} ...`) and its integer matrix on
/// fundamental-weight coordinates (row-major).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: Vec<i64>,
    rank: usize,
}

fn mat_mul(a: &[i64], b: &[i64], l: usize) -> Vec<i64> {
    let mut out = vec![0; l * l];
    for i in 0..l {
        for k in 0..l {
            let aik = a[i * l + k];
            if aik == 0 {
                continue;
            }
            for j in 0..l {
                out[i * l + j] += aik * b[k * l + j];
            }
        }
    }
    out
}

fn mat_vec(m: &[i64], x: &[i64]) -> Vec<i64> {
    let l = x.len();
    (0..l)
        .map(|i| m[i * l..(i + 1) * l].iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

fn identity_matrix(l: usize) -> Vec<i64> {
    let mut m = vec![0; l * l];
    for i in 0..l {
        m[i * l + i] = 1;
    }
    m
}

fn reflection_matrix(rs: &RootSystem, i: usize) -> Vec<i64> {
    // (s_i x)_j = x_j - x_i a_ij
    let l = rs.rank();
    let mut m = identity_matrix(l);
    for j in 0..l {
        m[j * l + i] -= rs.cartan()[i][j];
    }
    m
}

/// Lexicographically smallest reduced word of the element sending `rho` to `image`.
fn greedy_word(rs: &RootSystem, image: &[i64]) -> Vec<usize> {
    let mut v = image.to_vec();
    let mut word = Vec::new();
    while let Some(i) = v.iter().position(|&c| c < 0) {
        word.push(i);
        rs.reflect_int(i, &mut v);
    }
    word
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            word: Vec::new(),
            matrix: identity_matrix(rank),
            rank,
        }
    }

    /// Element given by an arbitrary (possibly non-reduced) word; the stored word is reduced.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let l = rs.rank();
        let mut m = identity_matrix(l);
        for &i in word {
            if i >= l {
                return Err(Error::DimensionMismatch {
                    expected: l,
                    got: i + 1,
                });
            }
            m = mat_mul(&m, &reflection_matrix(rs, i), l);
        }
        Ok(Self::from_matrix(rs, m))
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        Self {
            word: vec![i],
            matrix: reflection_matrix(rs, i),
            rank: rs.rank(),
        }
    }

    pub(crate) fn from_matrix(rs: &RootSystem, matrix: Vec<i64>) -> Self {
        let image = mat_vec(&matrix, &rs.rho_int());
        Self {
            word: greedy_word(rs, &image),
            matrix,
            rank: rs.rank(),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The reduced word with 1-based indices, as printed in the usual notation.
    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `(-1)^length`.
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn act_int(&self, x: &[i64]) -> Vec<i64> {
        mat_vec(&self.matrix, x)
    }

    pub fn act(&self, mu: &Weight) -> Result<Weight> {
        if mu.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: mu.rank(),
            });
        }
        let l = self.rank;
        Ok(Weight::new(
            (0..l)
                .map(|i| {
                    (0..l)
                        .map(|j| mu.coords()[j] * Rational::from_integer(self.matrix[i * l + j]))
                        .sum()
                })
                .collect(),
        ))
    }

    /// The shifted action `w(x + rho) - rho`.
    pub fn circ_act_int(&self, x: &[i64]) -> Vec<i64> {
        let shifted: Vec<i64> = x.iter().map(|c| c + 1).collect();
        self.act_int(&shifted).into_iter().map(|c| c - 1).collect()
    }

    pub fn circ_act(&self, rs: &RootSystem, mu: &Weight) -> Result<Weight> {
        let rho = rs.rho();
        Ok(&self.act(&(mu + &rho))? - &rho)
    }

    /// `self * other`.
    pub fn compose(&self, rs: &RootSystem, other: &Self) -> Self {
        Self::from_matrix(rs, mat_mul(&self.matrix, &other.matrix, self.rank))
    }

    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        let mut m = identity_matrix(self.rank);
        for &i in &rev {
            m = mat_mul(&m, &reflection_matrix(rs, i), self.rank);
        }
        Self::from_matrix(rs, m)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, rs: &RootSystem) -> usize {
        rs.positive_roots_int()
            .iter()
            .filter(|g| rs.height_scaled(&self.act_int(g)) < 0)
            .count()
    }

    /// `w^{-1}(x)`, via the transpose-free route of undoing the word.
    pub fn act_inverse_int(&self, rs: &RootSystem, x: &[i64]) -> Vec<i64> {
        let mut v = x.to_vec();
        for &i in &self.word {
            rs.reflect_int(i, &mut v);
        }
        v
    }
}

/// A fully enumerated finite Weyl group.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    by_rho_image: HashMap<Vec<i64>, usize>,
    longest: usize,
}

impl WeylGroup {
    /// Breadth-first enumeration; each element carries its lexicographically smallest
    /// reduced word.
    pub fn enumerate(rs: &RootSystem, cap: u64) -> Result<Self> {
        let order = rs.weyl_order();
        if order > cap {
            return Err(Error::WeylCapExceeded { required: order, cap });
        }
        let l = rs.rank();
        let rho = rs.rho_int();
        let reflections: Vec<Vec<i64>> = (0..l).map(|i| reflection_matrix(rs, i)).collect();
        let reflected_rho: Vec<Vec<i64>> = reflections.iter().map(|m| mat_vec(m, &rho)).collect();

        let mut elements = vec![WeylElement::identity(l)];
        let mut by_rho_image = HashMap::with_capacity(order as usize);
        by_rho_image.insert(rho.clone(), 0);
        let mut level_start = 0;
        while level_start < elements.len() {
            let level_end = elements.len();
            for idx in level_start..level_end {
                for j in 0..l {
                    // rho-image of w s_j is w(s_j rho)
                    let image = mat_vec(&elements[idx].matrix, &reflected_rho[j]);
                    if by_rho_image.contains_key(&image) {
                        continue;
                    }
                    let matrix = mat_mul(&elements[idx].matrix, &reflections[j], l);
                    let mut word = elements[idx].word.clone();
                    word.push(j);
                    by_rho_image.insert(image, elements.len());
                    elements.push(WeylElement {
                        word,
                        matrix,
                        rank: l,
                    });
                }
            }
            level_start = level_end;
        }
        if elements.len() as u64 != order {
            return Err(Error::Internal(format!(
                "enumerated {} Weyl elements, expected {order}",
                elements.len()
            )));
        }
        let longest = elements.len() - 1;
        Ok(Self {
            elements,
            by_rho_image,
            longest,
        })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.longest]
    }

    /// Position of the element with the given matrix.
    pub fn index_of(&self, rs: &RootSystem, w: &WeylElement) -> Option<usize> {
        self.by_rho_image.get(&w.act_int(&rs.rho_int())).copied()
    }

    pub fn get(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }
}

/// Up to `limit` distinct reduced words of `w`, in lexicographic order.
pub fn reduced_words(rs: &RootSystem, w: &WeylElement, limit: usize) -> Vec<Vec<usize>> {
    fn go(rs: &RootSystem, v: Vec<i64>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        let descents: Vec<usize> = (0..v.len()).filter(|&i| v[i] < 0).collect();
        if descents.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in descents {
            let mut next = v.clone();
            rs.reflect_int(i, &mut next);
            prefix.push(i);
            go(rs, next, prefix, out, limit);
            prefix.pop();
            if out.len() >= limit {
                return;
            }
        }
    }
    let mut out = Vec::new();
    go(rs, w.act_int(&rs.rho_int()), &mut Vec::new(), &mut out, limit);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse::<CartanType>().unwrap()).unwrap()
    }

    #[test]
    fn small_groups() {
        let a1 = rs("A1");
        let g = WeylGroup::enumerate(&a1, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.longest().word(), &[0]);

        let a2 = rs("A2");
        let g = WeylGroup::enumerate(&a2, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.longest().length(), 3);
        assert_eq!(g.longest().word_one_based(), vec![1, 2, 1]);

        let a3 = rs("A3");
        let g = WeylGroup::enumerate(&a3, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(g.len(), 24);
        assert_eq!(g.longest().length(), 6);
    }

    #[test]
    fn bfs_counts_match_order_table() {
        for s in ["A4", "D4", "D5"] {
            let r = rs(s);
            let g = WeylGroup::enumerate(&r, DEFAULT_WEYL_CAP).unwrap();
            assert_eq!(g.len() as u64, r.weyl_order(), "{s}");
            assert_eq!(g.longest().length(), r.num_positive_roots());
        }
    }

    #[test]
    fn cap_refuses_without_partial_output() {
        let e7 = rs("E7");
        assert_eq!(
            WeylGroup::enumerate(&e7, DEFAULT_WEYL_CAP).unwrap_err(),
            Error::WeylCapExceeded {
                required: 2_903_040,
                cap: DEFAULT_WEYL_CAP
            }
        );
        let a3 = rs("A3");
        assert!(WeylGroup::enumerate(&a3, 23).is_err());
    }

    #[test]
    fn words_are_lex_smallest_and_lengths_are_inversions() {
        for s in ["A1", "A2", "A3", "D4"] {
            let r = rs(s);
            let g = WeylGroup::enumerate(&r, DEFAULT_WEYL_CAP).unwrap();
            for w in g.elements() {
                let all = reduced_words(&r, w, usize::MAX);
                assert_eq!(all.first().unwrap(), w.word());
                assert_eq!(w.length(), w.inversion_count(&r));
                let rebuilt = WeylElement::from_word(&r, w.word()).unwrap();
                assert_eq!(&rebuilt, w);
            }
        }
    }

    #[test]
    fn longest_element_properties() {
        for s in ["A1", "A2", "A3", "A4", "D4", "D5", "E6"] {
            let r = rs(s);
            let g = WeylGroup::enumerate(&r, DEFAULT_WEYL_CAP).unwrap();
            let w0 = g.longest();
            assert!(w0.compose(&r, w0).is_identity());
            let rho = r.rho_int();
            assert_eq!(w0.act_int(&rho), rho.iter().map(|c| -c).collect::<Vec<_>>());
            // -w0 permutes simple roots as the diagram automorphism
            for i in 0..r.rank() {
                let mut e = vec![0; r.rank()];
                e[i] = 1;
                let img: Vec<i64> = w0.act_int(&e).iter().map(|c| -c).collect();
                assert_eq!(img, r.dual_int(&e), "{s} index {i}");
            }
            // circ_act(w0, 0) = -2 rho
            assert_eq!(
                w0.circ_act_int(&vec![0; r.rank()]),
                rho.iter().map(|c| -2 * c).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn circ_act_examples() {
        let a1 = rs("A1");
        let s1 = WeylElement::simple(&a1, 0);
        assert_eq!(
            s1.circ_act(&a1, &Weight::zero(1)).unwrap(),
            Weight::from_ints(&[-2])
        );
        let e = WeylElement::identity(1);
        let mu = Weight::from_ints(&[5]);
        assert_eq!(e.circ_act(&a1, &mu).unwrap(), mu);
        assert!(s1.act(&Weight::zero(2)).is_err());
    }

    #[test]
    fn inverse_and_compose() {
        let r = rs("A3");
        let g = WeylGroup::enumerate(&r, DEFAULT_WEYL_CAP).unwrap();
        for w in g.elements() {
            let inv = w.inverse(&r);
            assert!(w.compose(&r, &inv).is_identity());
            assert_eq!(inv.length(), w.length());
            let x = vec![3, -1, 2];
            assert_eq!(w.act_inverse_int(&r, &x), inv.act_int(&x));
        }
    }

    #[test]
    fn reduced_words_of_longest_a2() {
        let r = rs("A2");
        let g = WeylGroup::enumerate(&r, DEFAULT_WEYL_CAP).unwrap();
        let words = reduced_words(&r, g.longest(), 10);
        assert_eq!(words, vec![vec![0, 1, 0], vec![1, 0, 1]]);
    }
}
