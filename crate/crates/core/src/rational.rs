//! Exact rational helpers shared by every module.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Rational = Ratio<i64>;

pub fn rat(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

pub fn int(n: i64) -> Rational {
    Ratio::from_integer(n)
}

/// Largest integer `m` with `m * m <= n`.
pub fn isqrt(n: i64) -> i64 {
    assert!(n >= 0, "isqrt of negative value");
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Integers `m` with `(m - center)^2 <= radius_sq`, in increasing order.
pub fn integers_near(center: Rational, radius_sq: Rational) -> std::ops::RangeInclusive<i64> {
    if radius_sq.is_negative() {
        #[allow(clippy::reversed_empty_ranges)]
        return 1..=0;
    }
    let fits = |m: i64| {
        let d = int(m) - center;
        d * d <= radius_sq
    };
    let c = center.floor().to_integer();
    let mut lo = c + 1;
    while fits(lo - 1) {
        lo -= 1;
    }
    let mut hi = c;
    while fits(hi + 1) {
        hi += 1;
    }
    lo..=hi
}

/// An exact bound of the form `sqrt(a) + sqrt(b)` with `a, b >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormBound {
    pub a: Rational,
    pub b: Rational,
}

impl NormBound {
    /// The bound `sqrt(sq)`.
    pub fn sqrt(sq: Rational) -> Self {
        Self {
            a: sq,
            b: Rational::zero(),
        }
    }

    /// The bound `r` for a rational `r >= 0`.
    pub fn rational(r: Rational) -> Self {
        Self::sqrt(r * r)
    }

    /// The bound `c + sqrt(sq)`.
    pub fn shifted_sqrt(c: Rational, sq: Rational) -> Self {
        Self { a: c * c, b: sq }
    }

    /// Divide the bound by a positive rational.
    pub fn scaled_down(self, by: Rational) -> Self {
        let by2 = by * by;
        Self {
            a: self.a / by2,
            b: self.b / by2,
        }
    }

    /// Whether `sqrt(norm_sq) <= sqrt(a) + sqrt(b)`, decided exactly.
    pub fn admits(&self, norm_sq: Rational) -> bool {
        let lhs = norm_sq - self.a - self.b;
        if !lhs.is_positive() {
            return true;
        }
        lhs * lhs <= int(4) * self.a * self.b
    }

    /// A rational upper bound for the square of the bound.
    pub fn square_upper(&self) -> Rational {
        // 2 sqrt(ab) <= a + b
        int(2) * (self.a + self.b)
    }
}

/// Least non-negative residue.
pub fn modulo(x: i64, m: i64) -> i64 {
    x.mod_floor(&m)
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_small() {
        for n in 0..200 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
    }

    #[test]
    fn integers_near_is_exact() {
        assert_eq!(integers_near(rat(1, 2), rat(1, 4)), 0..=1);
        assert!(integers_near(rat(1, 3), rat(1, 100)).is_empty());
        assert_eq!(integers_near(int(-2), int(4)), -4..=0);
    }

    #[test]
    fn norm_bound_sum_of_roots() {
        // sqrt(2) + sqrt(8) = 3 sqrt(2), squared is 18
        let b = NormBound { a: int(2), b: int(8) };
        assert!(b.admits(int(18)));
        assert!(!b.admits(rat(18001, 1000)));
        assert!(NormBound::rational(int(4)).admits(int(16)));
        assert!(!NormBound::rational(int(4)).admits(int(17)));
    }
}
