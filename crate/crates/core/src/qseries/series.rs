use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// A truncated q-series `q^base (c₀ + c₁ q + … + c_N q^N + O(q^{N+1}))` with integer
/// coefficients on one integer-step grid.
///
/// Normalized so that `c₀ != 0` unless every coefficient vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    base: Rational,
    coeffs: Vec<i64>,
}

fn offset(from: Rational, to: Rational) -> Result<i64> {
    let d = to - from;
    if d.is_integer() {
        Ok(d.to_integer())
    } else {
        Err(Error::IncompatibleBases(from, to))
    }
}

impl QSeries {
    /// Builds and normalizes; `coeffs` must be nonempty.
    pub fn new(base: Rational, coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a q-series needs at least one coefficient");
        let lead = coeffs.iter().position(|&c| c != 0).unwrap_or(0);
        Self {
            base: base + int(lead as i64),
            coeffs: coeffs[lead..].to_vec(),
        }
    }

    /// `q^exponent + O(q^{exponent + order + 1})`.
    pub fn monomial(exponent: Rational, order: usize) -> Self {
        let mut coeffs = vec![0; order + 1];
        coeffs[0] = 1;
        Self {
            base: exponent,
            coeffs,
        }
    }

    /// `O(q^{base + order + 1})`.
    pub fn zero(base: Rational, order: usize) -> Self {
        Self {
            base,
            coeffs: vec![0; order + 1],
        }
    }

    pub fn base(&self) -> Rational {
        self.base
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Number of reliable coefficients after the leading one.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Last exponent whose coefficient is known.
    pub fn top(&self) -> Rational {
        self.base + int(self.order() as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn leading_coefficient(&self) -> i64 {
        self.coeffs[0]
    }

    /// Coefficient of `q^exponent`; `None` past the truncation or off the grid.
    pub fn coeff_at(&self, exponent: Rational) -> Option<i64> {
        let k = offset(self.base, exponent).ok()?;
        if k < 0 {
            return Some(0);
        }
        self.coeffs.get(k as usize).copied()
    }

    /// Keep coefficients up to relative order `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderUnderflow {
                required: order as i64,
                available: self.order() as i64,
            });
        }
        Ok(Self {
            base: self.base,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Coefficients aligned on `[from, from + len)`, zero-filled below the base.
    fn window(&self, from: Rational, len: usize) -> Result<Vec<i64>> {
        let shift = offset(from, self.base)?;
        Ok((0..len as i64)
            .map(|i| {
                let k = i - shift;
                if k < 0 {
                    0
                } else {
                    self.coeffs[k as usize]
                }
            })
            .collect())
    }
}

pub fn qs_add(a: &QSeries, b: &QSeries) -> Result<QSeries> {
    offset(a.base, b.base)?;
    let base = a.base.min(b.base);
    let top = a.top().min(b.top());
    let span = offset(base, top)?;
    if span < 0 {
        return Err(Error::OrderUnderflow {
            required: -span,
            available: 0,
        });
    }
    let len = span as usize + 1;
    let (x, y) = (a.window(base, len)?, b.window(base, len)?);
    let coeffs = x
        .iter()
        .zip(&y)
        .map(|(u, v)| u.checked_add(*v).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(QSeries::new(base, coeffs))
}

pub fn qs_scale(a: &QSeries, m: i64) -> Result<QSeries> {
    let coeffs = a
        .coeffs
        .iter()
        .map(|c| c.checked_mul(m).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(QSeries::new(a.base, coeffs))
}

pub fn qs_sub(a: &QSeries, b: &QSeries) -> Result<QSeries> {
    qs_add(a, &qs_scale(b, -1)?)
}

pub fn qs_mul(a: &QSeries, b: &QSeries) -> Result<QSeries> {
    let order = a.order().min(b.order());
    let mut coeffs = vec![0i64; order + 1];
    for (i, &x) in a.coeffs.iter().take(order + 1).enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.coeffs.iter().take(order + 1 - i).enumerate() {
            let t = x.checked_mul(y).ok_or(Error::Overflow)?;
            coeffs[i + j] = coeffs[i + j].checked_add(t).ok_or(Error::Overflow)?;
        }
    }
    Ok(QSeries::new(a.base + b.base, coeffs))
}

/// Equality of all coefficients up to `min(a.base, b.base) + order`.
pub fn qs_eq(a: &QSeries, b: &QSeries, order: usize) -> Result<bool> {
    Ok(compare(a, b, order)?.iter().all(|&d| d == 0))
}

/// `a >= b` coefficientwise up to `min(a.base, b.base) + order`.
pub fn qs_dominates(a: &QSeries, b: &QSeries, order: usize) -> Result<bool> {
    Ok(compare(a, b, order)?.iter().all(|&d| d >= 0))
}

fn compare(a: &QSeries, b: &QSeries, order: usize) -> Result<Vec<i64>> {
    offset(a.base, b.base)?;
    let base = a.base.min(b.base);
    let top = base + int(order as i64);
    for s in [a, b] {
        if s.top() < top {
            let available = offset(base, s.top())?;
            return Err(Error::OrderUnderflow {
                required: order as i64,
                available,
            });
        }
    }
    let (x, y) = (a.window(base, order + 1)?, b.window(base, order + 1)?);
    Ok(x.iter().zip(&y).map(|(u, v)| u - v).collect())
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Frac {
            num: i64,
            den: i64,
        }
        let mut st = s.serialize_struct("QSeries", 3)?;
        st.serialize_field(
            "base",
            &Frac {
                num: *self.base.numer(),
                den: *self.base.denom(),
            },
        )?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.serialize_field("order", &self.order())?;
        st.end()
    }
}

/// Accumulates signed monomials `c q^e` on the grid `base + Z`, keeping offsets `0..=order`.
#[derive(Debug, Clone)]
pub(crate) struct TermSum {
    base: Rational,
    coeffs: Vec<i64>,
}

impl TermSum {
    pub(crate) fn new(base: Rational, order: usize) -> Self {
        Self {
            base,
            coeffs: vec![0; order + 1],
        }
    }

    pub(crate) fn add(&mut self, exponent: Rational, c: i64) -> Result<()> {
        let k = offset(self.base, exponent)?;
        if k < 0 {
            return Err(Error::Internal(format!(
                "term q^{exponent} below the base {}",
                self.base
            )));
        }
        if let Some(slot) = self.coeffs.get_mut(k as usize) {
            *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        }
        Ok(())
    }

    pub(crate) fn top(&self) -> Rational {
        self.base + int(self.coeffs.len() as i64 - 1)
    }

    pub(crate) fn into_series(self) -> QSeries {
        QSeries {
            base: self.base,
            coeffs: self.coeffs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn s(base: Rational, c: &[i64]) -> QSeries {
        QSeries::new(base, c.to_vec())
    }

    #[test]
    fn add_zero_is_identity() {
        let x = s(rat(1, 12), &[1, 0, 1, 1, 2]);
        let z = QSeries::zero(rat(1, 12), 10);
        assert_eq!(qs_add(&x, &z).unwrap(), x);
    }

    #[test]
    fn mul_adds_bases() {
        let a = QSeries::monomial(rat(1, 8), 3);
        let p = qs_mul(&a, &a).unwrap();
        assert_eq!(p.base(), rat(1, 4));
        assert_eq!(p.coeffs(), &[1, 0, 0, 0]);
    }

    #[test]
    fn incompatible_bases_rejected() {
        let a = QSeries::monomial(rat(1, 8), 3);
        let b = QSeries::monomial(rat(1, 4), 3);
        assert!(matches!(qs_add(&a, &b), Err(Error::IncompatibleBases(_, _))));
        assert!(qs_eq(&a, &b, 2).is_err());
    }

    #[test]
    fn order_underflow_reported() {
        let a = QSeries::monomial(int(0), 2);
        let b = QSeries::monomial(int(0), 5);
        assert!(matches!(qs_eq(&a, &b, 4), Err(Error::OrderUnderflow { .. })));
        assert!(qs_eq(&a, &b, 2).unwrap());
        let far = QSeries::monomial(int(10), 2);
        assert_eq!(qs_add(&a, &far).unwrap(), a);
    }

    #[test]
    fn cancellation_renormalizes() {
        let a = s(int(0), &[1, 2, 3]);
        let b = s(int(0), &[1, 1, 0]);
        let d = qs_sub(&a, &b).unwrap();
        assert_eq!(d.base(), int(1));
        assert_eq!(d.coeffs(), &[1, 3]);
        assert_eq!(d.top(), int(2));
    }
}
