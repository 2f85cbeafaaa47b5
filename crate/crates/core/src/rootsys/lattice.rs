use num_traits::Zero;

use crate::rational::{int, integers_near, NormBound, Rational};

use super::{RootSystem, Weight};

/// Dominant integral `a` with `|a + shift| <= bound` that pass `keep`.
///
/// `shift` must be dominant: then `|a + shift|` grows with every coordinate of `a`, so the
/// search stops along a coordinate as soon as the bound fails.
pub fn dominant_weights_within(
    rs: &RootSystem,
    shift: &[i64],
    bound: &NormBound,
    keep: impl Fn(&[i64]) -> bool,
) -> Vec<Vec<i64>> {
    fn go(
        rs: &RootSystem,
        shift: &[i64],
        bound: &NormBound,
        keep: &dyn Fn(&[i64]) -> bool,
        a: &mut Vec<i64>,
        pos: usize,
        out: &mut Vec<Vec<i64>>,
    ) {
        if pos == a.len() {
            if keep(a) {
                out.push(a.clone());
            }
            return;
        }
        loop {
            let v: Vec<i64> = a.iter().zip(shift).map(|(x, s)| x + s).collect();
            if !bound.admits(rs.norm_sq_int(&v)) {
                break;
            }
            go(rs, shift, bound, keep, a, pos + 1, out);
            a[pos] += 1;
        }
        a[pos] = 0;
    }
    debug_assert!(shift.iter().all(|&s| s >= 0));
    let mut out = Vec::new();
    go(rs, shift, bound, &keep, &mut vec![0; rs.rank()], 0, &mut out);
    out
}

/// All `alpha` in `P_+ ∩ Q` with `|alpha + rho| <= bound`, sorted by `|alpha|^2` and then
/// lexicographically.
pub fn enum_dominant_in_q(rs: &RootSystem, bound: &NormBound) -> Vec<Weight> {
    let mut found = dominant_weights_within(rs, &rs.rho_int(), bound, |a| rs.in_root_lattice_int(a));
    found.sort_by_cached_key(|a| (rs.norm_sq_int(a), a.clone()));
    found.iter().map(|a| Weight::from_ints(a)).collect()
}

/// Integer simple-root coordinate vectors `m` with `|sum (m_i - c_i) alpha_i|^2 <= radius_sq`.
///
/// Exact Fincke-Pohst enumeration over the Cartan matrix as Gram matrix.
pub fn lattice_points_in_ball(rs: &RootSystem, center: &[Rational], radius_sq: Rational) -> Vec<Vec<i64>> {
    let n = rs.rank();
    // q(x) = sum_i d[i] (x_i + sum_{j>i} u[i][j] x_j)^2
    let mut q: Vec<Vec<Rational>> = rs
        .cartan()
        .iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let sub = q[k][i] * q[i][l];
                q[k][l] -= sub;
            }
        }
    }

    struct Search<'a> {
        q: &'a [Vec<Rational>],
        center: &'a [Rational],
        m: Vec<i64>,
        out: Vec<Vec<i64>>,
    }

    impl Search<'_> {
        fn go(&mut self, i: usize, budget: Rational) {
            let n = self.m.len();
            let t: Rational = (i + 1..n)
                .map(|j| self.q[i][j] * (int(self.m[j]) - self.center[j]))
                .sum();
            let mid = self.center[i] - t;
            let d = self.q[i][i];
            for mi in integers_near(mid, budget / d) {
                let dev = int(mi) - mid;
                let rest = budget - d * dev * dev;
                self.m[i] = mi;
                if i == 0 {
                    self.out.push(self.m.clone());
                } else {
                    self.go(i - 1, rest);
                }
            }
        }
    }

    if radius_sq < Rational::zero() {
        return Vec::new();
    }
    let mut s = Search {
        q: &q,
        center,
        m: vec![0; n],
        out: Vec::new(),
    };
    s.go(n - 1, radius_sq);
    s.out.sort();
    s.out
}
