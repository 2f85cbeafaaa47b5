//! Simply-laced root systems: Cartan data, roots, the invariant form, Weyl groups.

mod lattice;
mod weight;
mod weyl;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

pub use lattice::{dominant_weights_within, enum_dominant_in_q, lattice_points_in_ball};
pub use weight::Weight;
pub(crate) use weight::{add_ints, scale_ints, sub_ints};
pub use weyl::{reduced_words, WeylElement, WeylGroup, DEFAULT_WEYL_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{family:?}{rank}")))
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("valid A rank")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).expect("valid D rank")
    }

    pub fn e(rank: usize) -> Self {
        Self::new(Family::E, rank).expect("valid E rank")
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCartanType(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Self::new(family, rank).map_err(|_| bad())
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Edges of the Dynkin diagram in Bourbaki numbering, 0-based.
fn dynkin_edges(t: CartanType) -> Vec<(usize, usize)> {
    let l = t.rank;
    match t.family {
        Family::A => (1..l).map(|i| (i - 1, i)).collect(),
        Family::D => {
            let mut e: Vec<_> = (1..l - 1).map(|i| (i - 1, i)).collect();
            e.push((l - 3, l - 1));
            e
        }
        Family::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((3..l).map(|i| (i - 1, i)));
            e
        }
    }
}

/// Exact Gauss-Jordan inverse and determinant of an integer matrix.
fn invert(m: &[Vec<i64>]) -> (Vec<Vec<Rational>>, Rational) {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|&x| int(x)).collect();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is nonsingular");
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let pv = a[col][col];
        det *= pv;
        for x in a[col].iter_mut() {
            *x /= pv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    (a.into_iter().map(|r| r[n..].to_vec()).collect(), det)
}

/// Cartan data for one simply-laced type. Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    inv_cartan: Vec<Vec<Rational>>,
    det: i64,
    /// `det * inv_cartan`, an integer matrix.
    adj: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
    positive_roots: Vec<Vec<i64>>,
    /// The same roots in fundamental-weight coordinates.
    positive_roots_fund: Vec<Vec<i64>>,
    theta: Vec<i64>,
    coxeter_h: i64,
    dim_g: i64,
    degrees: Vec<i64>,
    weyl_order: u64,
}

impl RootSystem {
    pub fn build(t: CartanType) -> Result<Self> {
        let t = CartanType::new(t.family, t.rank)?;
        let l = t.rank;
        let mut cartan = vec![vec![0i64; l]; l];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in dynkin_edges(t) {
            cartan[i][j] = -1;
            cartan[j][i] = -1;
        }
        let (inv_cartan, det) = invert(&cartan);
        let det = det.to_integer();
        let adj: Vec<Vec<i64>> = inv_cartan
            .iter()
            .map(|r| r.iter().map(|x| (x * int(det)).to_integer()).collect())
            .collect();

        // All roots form one W-orbit; close the simple roots under simple reflections.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..l {
            let mut e = vec![0; l];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..l {
                let pair: i64 = (0..l).map(|j| cartan[i][j] * r[j]).sum();
                if pair == 0 {
                    continue;
                }
                let mut s = r.clone();
                s[i] -= pair;
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut positive_roots: Vec<Vec<i64>> =
            seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let positive_roots_fund = positive_roots
            .iter()
            .map(|m| {
                (0..l)
                    .map(|j| (0..l).map(|i| m[i] * cartan[i][j]).sum())
                    .collect()
            })
            .collect();

        let theta = positive_roots.last().expect("nonempty root system").clone();
        let top: i64 = theta.iter().sum();
        let n_top = positive_roots
            .iter()
            .filter(|r| r.iter().sum::<i64>() == top)
            .count();
        if n_top != 1 {
            return Err(Error::Internal("highest root is not unique".into()));
        }
        let coxeter_h = top + 1;
        let dim_g = l as i64 + 2 * positive_roots.len() as i64;

        // Exponents are the parts of the partition dual to the height distribution.
        let mut by_height = vec![0i64; top as usize + 2];
        for r in &positive_roots {
            by_height[r.iter().sum::<i64>() as usize] += 1;
        }
        let mut degrees = Vec::with_capacity(l);
        for m in 1..=top as usize {
            for _ in 0..(by_height[m] - by_height[m + 1]) {
                degrees.push(m as i64 + 1);
            }
        }
        if degrees.len() != l {
            return Err(Error::Internal("exponent count differs from rank".into()));
        }
        let weyl_order = degrees.iter().map(|&d| d as u64).product();

        Ok(Self {
            cartan_type: t,
            cartan,
            inv_cartan,
            det,
            adj,
            positive_roots,
            positive_roots_fund,
            theta,
            coxeter_h,
            dim_g,
            degrees,
            weyl_order,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inv_cartan(&self) -> &[Vec<Rational>] {
        &self.inv_cartan
    }

    /// Determinant of the Cartan matrix, equal to `|P/Q|`.
    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_h
    }

    pub fn dim_g(&self) -> i64 {
        self.dim_g
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots_simple(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_roots_int(&self) -> &[Vec<i64>] {
        &self.positive_roots_fund
    }

    pub fn positive_roots(&self) -> Vec<Weight> {
        self.positive_roots_fund
            .iter()
            .map(|r| Weight::from_ints(r))
            .collect()
    }

    pub fn rho_int(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    pub fn rho(&self) -> Weight {
        Weight::from_ints(&self.rho_int())
    }

    /// Highest root in simple-root coordinates.
    pub fn theta_simple(&self) -> &[i64] {
        &self.theta
    }

    pub fn theta_int(&self) -> Vec<i64> {
        self.positive_roots_fund.last().expect("nonempty").clone()
    }

    pub fn theta(&self) -> Weight {
        Weight::from_ints(&self.theta_int())
    }

    pub fn simple_root_int(&self, i: usize) -> Vec<i64> {
        self.cartan[i].clone()
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::from_ints(&self.cartan[i])
    }

    fn check_rank(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: len,
            })
        }
    }

    /// The invariant form with `(alpha_i, alpha_i) = 2`.
    pub fn pairing(&self, mu: &Weight, nu: &Weight) -> Result<Rational> {
        self.check_rank(mu.rank())?;
        self.check_rank(nu.rank())?;
        let mut acc = Rational::zero();
        for (i, a) in mu.coords().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in nu.coords().iter().enumerate() {
                acc += a * b * self.inv_cartan[i][j];
            }
        }
        Ok(acc)
    }

    /// `det * (x, y)` for integral weights; always an integer.
    pub fn pairing_scaled(&self, x: &[i64], y: &[i64]) -> i64 {
        debug_assert_eq!(x.len(), self.rank());
        debug_assert_eq!(y.len(), self.rank());
        let mut acc = 0i64;
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = &self.adj[i];
            let s: i64 = row.iter().zip(y).map(|(c, b)| c * b).sum();
            acc += a * s;
        }
        acc
    }

    /// `(x, y)` for integral weights.
    pub fn pairing_int(&self, x: &[i64], y: &[i64]) -> Rational {
        Rational::new(self.pairing_scaled(x, y), self.det)
    }

    pub fn norm_sq(&self, mu: &Weight) -> Result<Rational> {
        self.pairing(mu, mu)
    }

    pub fn norm_sq_int(&self, x: &[i64]) -> Rational {
        self.pairing_int(x, x)
    }

    /// Coordinates in the simple-root basis.
    pub fn to_root_coords(&self, mu: &Weight) -> Result<Vec<Rational>> {
        self.check_rank(mu.rank())?;
        Ok((0..self.rank())
            .map(|i| {
                mu.coords()
                    .iter()
                    .enumerate()
                    .map(|(j, c)| self.inv_cartan[i][j] * c)
                    .sum()
            })
            .collect())
    }

    pub fn from_root_coords_int(&self, m: &[i64]) -> Vec<i64> {
        let l = self.rank();
        (0..l)
            .map(|j| (0..l).map(|i| m[i] * self.cartan[i][j]).sum())
            .collect()
    }

    /// Height `(x, rho)` scaled by `det`; its sign tells positive from negative roots.
    pub(crate) fn height_scaled(&self, x: &[i64]) -> i64 {
        self.adj
            .iter()
            .map(|row| row.iter().zip(x).map(|(c, v)| c * v).sum::<i64>())
            .sum()
    }

    pub fn in_weight_lattice(&self, mu: &Weight) -> bool {
        mu.is_integral()
    }

    pub fn in_root_lattice(&self, mu: &Weight) -> bool {
        mu.is_integral()
            && self
                .to_root_coords(mu)
                .map(|c| c.iter().all(|x| x.is_integer()))
                .unwrap_or(false)
    }

    pub fn in_root_lattice_int(&self, x: &[i64]) -> bool {
        self.adj
            .iter()
            .all(|row| row.iter().zip(x).map(|(c, v)| c * v).sum::<i64>() % self.det == 0)
    }

    pub fn is_dominant(&self, mu: &Weight) -> bool {
        mu.coords().iter().all(|c| *c >= Rational::zero())
    }

    /// Classical Weyl dimension formula.
    pub fn weyl_dim(&self, beta: &Weight) -> Result<u64> {
        self.check_rank(beta.rank())?;
        let b = beta.to_ints().ok_or(Error::NotInSet("integral"))?;
        if b.iter().any(|&c| c < 0) {
            return Err(Error::NotInSet("dominant"));
        }
        Ok(self.weyl_dim_int(&b))
    }

    pub(crate) fn weyl_dim_int(&self, b: &[i64]) -> u64 {
        // (beta + rho, gamma) = sum_i m_i (b_i + 1) for gamma = sum_i m_i alpha_i
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for m in &self.positive_roots {
            let top: i64 = m.iter().zip(b).map(|(mi, bi)| mi * (bi + 1)).sum();
            let bottom: i64 = m.iter().sum();
            num *= top as u128;
            den *= bottom as u128;
            let g = num_integer::gcd(num, den);
            num /= g;
            den /= g;
        }
        assert_eq!(den, 1, "Weyl dimension is an integer");
        u64::try_from(num).expect("dimension fits in u64")
    }

    /// Apply the simple reflection `s_i` in place.
    pub(crate) fn reflect_int(&self, i: usize, x: &mut [i64]) {
        let c = x[i];
        if c != 0 {
            for (xj, aij) in x.iter_mut().zip(&self.cartan[i]) {
                *xj -= c * aij;
            }
        }
    }

    /// The diagram automorphism `mu -> -w0(mu)` on fundamental-weight indices.
    pub fn dual_index(&self, i: usize) -> usize {
        let l = self.rank();
        match self.cartan_type.family {
            Family::A => l - 1 - i,
            Family::D if l % 2 == 1 && i >= l - 2 => 2 * l - 3 - i,
            Family::D => i,
            Family::E if l == 6 => [5, 1, 4, 3, 2, 0][i],
            Family::E => i,
        }
    }

    /// `-w0(x)` by the diagram automorphism.
    pub fn dual_int(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        for (i, &c) in x.iter().enumerate() {
            out[self.dual_index(i)] = c;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn invalid_types_rejected() {
        for s in ["A0", "D3", "E5", "E9", "B2", "", "A", "Ax"] {
            assert!(s.parse::<CartanType>().is_err(), "{s}");
        }
        assert!(CartanType::new(Family::D, 3).is_err());
    }

    #[test]
    fn a1_data() {
        let r = rs("A1");
        assert_eq!(r.coxeter_number(), 2);
        assert_eq!(r.dim_g(), 3);
        assert_eq!(r.rho(), Weight::from_ints(&[1]));
        assert_eq!(r.theta(), Weight::from_ints(&[2]));
        assert_eq!(r.weyl_order(), 2);
    }

    #[test]
    fn a2_data() {
        let r = rs("A2");
        assert_eq!(r.coxeter_number(), 3);
        assert_eq!(r.dim_g(), 8);
        assert_eq!(r.theta_simple(), &[1, 1]);
        assert_eq!(r.pairing(&r.rho(), &r.theta()).unwrap(), int(2));
    }

    #[test]
    fn e8_data() {
        let r = rs("E8");
        assert_eq!(r.weyl_order(), 696_729_600);
        assert_eq!(r.dim_g(), 248);
        assert_eq!(r.coxeter_number(), 30);
        assert_eq!(r.det(), 1);
    }

    #[test]
    fn weyl_orders_match_tables() {
        let fact = |n: u64| (1..=n).product::<u64>();
        for l in 1..=7u64 {
            assert_eq!(rs(&format!("A{l}")).weyl_order(), fact(l + 1));
        }
        for l in 4..=7u64 {
            assert_eq!(rs(&format!("D{l}")).weyl_order(), (1 << (l - 1)) * fact(l));
        }
        assert_eq!(rs("E6").weyl_order(), 51_840);
        assert_eq!(rs("E7").weyl_order(), 2_903_040);
    }

    #[test]
    fn pairing_examples() {
        let a1 = rs("A1");
        let al = a1.simple_root(0);
        let om = Weight::fundamental(1, 0);
        assert_eq!(a1.pairing(&al, &al).unwrap(), int(2));
        assert_eq!(a1.pairing(&om, &om).unwrap(), rat(1, 2));
        let a2 = rs("A2");
        assert_eq!(
            a2.pairing(&a2.simple_root(0), &a2.simple_root(1)).unwrap(),
            int(-1)
        );
        assert!(a2.pairing(&al, &a2.rho()).is_err());
    }

    #[test]
    fn structural_invariants_all_types() {
        for s in ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8"] {
            let r = rs(s);
            let l = r.rank();
            // inv_cartan * cartan = identity
            for i in 0..l {
                for j in 0..l {
                    let v: Rational = (0..l).map(|k| r.inv_cartan()[i][k] * int(r.cartan()[k][j])).sum();
                    assert_eq!(v, if i == j { int(1) } else { int(0) });
                }
            }
            for i in 0..l {
                for j in 0..l {
                    let p = r.pairing(&r.simple_root(i), &r.simple_root(j)).unwrap();
                    assert_eq!(p, int(r.cartan()[i][j]));
                    let q = r.pairing(&Weight::fundamental(l, i), &r.simple_root(j)).unwrap();
                    assert_eq!(q, int((i == j) as i64));
                }
            }
            let rho_theta = r.pairing(&r.rho(), &r.theta()).unwrap();
            assert_eq!(rho_theta + int(1), int(r.coxeter_number()), "{s}");
            // strange formula
            let lhs = r.norm_sq(&r.rho()).unwrap();
            assert_eq!(lhs, rat(r.coxeter_number() * r.dim_g(), 12), "{s}");
            // rho is half the sum of positive roots
            let mut sum = vec![0i64; l];
            for root in r.positive_roots_int() {
                sum = add_ints(&sum, root);
            }
            assert_eq!(sum, scale_ints(&r.rho_int(), 2));
        }
    }

    #[test]
    fn weyl_dim_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.weyl_dim(&Weight::zero(1)).unwrap(), 1);
        assert_eq!(a1.weyl_dim(&a1.simple_root(0)).unwrap(), 3);
        let a2 = rs("A2");
        assert_eq!(a2.weyl_dim(&a2.rho()).unwrap(), 8);
        assert_eq!(a2.weyl_dim(&Weight::fundamental(2, 0)).unwrap(), 3);
        let e8 = rs("E8");
        assert_eq!(e8.weyl_dim(&e8.theta()).unwrap(), 248);
        assert!(a2.weyl_dim(&Weight::from_ints(&[-1, 0])).is_err());
        assert!(a2.weyl_dim(&Weight::new(vec![rat(1, 2), int(0)])).is_err());
    }

    #[test]
    fn root_lattice_membership() {
        let a2 = rs("A2");
        assert!(a2.in_root_lattice(&a2.rho()));
        assert!(!a2.in_root_lattice(&Weight::fundamental(2, 0)));
        let a1 = rs("A1");
        assert!(!a1.in_root_lattice(&a1.rho()));
        assert!(a1.in_root_lattice_int(&[2]));
        assert!(!a1.in_root_lattice_int(&[1]));
    }
}
