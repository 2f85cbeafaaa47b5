use crate::error::{Error, Result};
use crate::rational::rat;

use super::QSeries;

fn divisor_sum(n: i64) -> i128 {
    let mut s = 0i128;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            s += d as i128;
            if d * d != n {
                s += (n / d) as i128;
            }
        }
        d += 1;
    }
    s
}

/// `η(q)^{-l} = q^{-l/24} Σ p_l(n) qⁿ`, where `p_l` counts `l`-coloured partitions.
///
/// Uses the logarithmic-derivative recurrence `n a(n) = l Σ_{k=1}^{n} σ(k) a(n-k)`.
pub fn eta_inv_pow(l: usize, order: usize) -> Result<QSeries> {
    assert!(l >= 1, "eta power must be positive");
    let sigma: Vec<i128> = (0..=order as i64)
        .map(|k| if k == 0 { 0 } else { divisor_sum(k) })
        .collect();
    let mut a: Vec<i128> = vec![0; order + 1];
    a[0] = 1;
    for n in 1..=order {
        let mut acc: i128 = 0;
        for k in 1..=n {
            let t = sigma[k].checked_mul(a[n - k]).ok_or(Error::Overflow)?;
            acc = acc.checked_add(t).ok_or(Error::Overflow)?;
        }
        acc = acc.checked_mul(l as i128).ok_or(Error::Overflow)?;
        debug_assert_eq!(acc % n as i128, 0);
        a[n] = acc / n as i128;
    }
    let coeffs = a
        .into_iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(QSeries::new(rat(-(l as i64), 24), coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_numbers() {
        let e = eta_inv_pow(1, 5).unwrap();
        assert_eq!(e.coeffs(), &[1, 1, 2, 3, 5, 7]);
        assert_eq!(e.base(), rat(-1, 24));
    }

    #[test]
    fn two_colour_partitions() {
        let e = eta_inv_pow(2, 4).unwrap();
        assert_eq!(e.coeffs(), &[1, 2, 5, 10, 20]);
        assert_eq!(e.base(), rat(-2, 24));
    }

    #[test]
    fn large_power_stays_exact() {
        let e = eta_inv_pow(8, 30).unwrap();
        assert_eq!(e.coeffs()[1], 8);
        assert_eq!(e.coeffs()[2], 44);
        assert_eq!(e.base(), rat(-1, 3));
    }
}
