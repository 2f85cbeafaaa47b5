//! Characters `tr q^{L₀ - c/24}` of Fock modules, of the W-modules `W(-√pα + λ)` (direct and
//! affine-orbit forms), of the full modules `W_{√pQ+λ}`, and of the lattice modules
//! `V_{√pQ+λ}`.

use crate::affine::affine_exponent;
use crate::error::{Error, Result};
use crate::params::{LambdaParam, ModelParams, ScaledWeight};
use crate::rational::{int, NormBound, Rational};
use crate::rootsys::{add_ints, dominant_weights_within, sub_ints, Weight, WeylElement};

use super::{eta_inv_pow, qs_mul, QSeries, TermSum};

fn alpha_ints(mp: &ModelParams, alpha: &Weight) -> Result<Vec<i64>> {
    let rs = mp.rs();
    if alpha.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: alpha.rank(),
        });
    }
    match alpha.to_ints() {
        Some(a) if a.iter().all(|&c| c >= 0) && rs.in_root_lattice_int(&a) => Ok(a),
        _ => Err(Error::NotInSet("in P_+ ∩ Q")),
    }
}

fn check_lambda(mp: &ModelParams, lam: &LambdaParam) -> Result<()> {
    if lam.p != mp.p() {
        return Err(Error::ModulusMismatch(mp.p(), lam.p));
    }
    mp.lambda(lam.lambda0.clone(), lam.sp.clone()).map(|_| ())
}

/// `(α + λ₀ + ρ, √pλ_p + ρ)` as integer vectors.
fn shifted_pair(mp: &ModelParams, alpha: &[i64], lam: &LambdaParam) -> (Vec<i64>, Vec<i64>) {
    let rho = mp.rs().rho_int();
    (
        add_ints(&add_ints(alpha, &lam.lambda0), &rho),
        add_ints(&lam.sp, &rho),
    )
}

/// `½|√pσ(α + λ₀ + ρ) - λ_p - ρ/√p|² = (1/2p)|pσ(α + λ₀ + ρ) - (√pλ_p + ρ)|²`.
pub fn w_exponent(
    mp: &ModelParams,
    sigma: &WeylElement,
    alpha: &Weight,
    lam: &LambdaParam,
) -> Result<Rational> {
    let a = alpha_ints(mp, alpha)?;
    check_lambda(mp, lam)?;
    Ok(w_exponent_int(mp, sigma, &a, lam))
}

fn w_exponent_int(mp: &ModelParams, sigma: &WeylElement, alpha: &[i64], lam: &LambdaParam) -> Rational {
    let (top, v) = shifted_pair(mp, alpha, lam);
    let moved: Vec<i64> = sigma.act_int(&top).iter().map(|c| c * mp.p()).collect();
    mp.rs().norm_sq_int(&sub_ints(&moved, &v)) / int(2 * mp.p())
}

fn times_eta(mp: &ModelParams, numerator: TermSum, order: usize) -> Result<QSeries> {
    qs_mul(&numerator.into_series(), &eta_inv_pow(mp.rank(), order)?)
}

/// `q^{½|μ - Q₀ρ|²} η(q)^{-l}`.
pub fn fock_char(mp: &ModelParams, mu: &ScaledWeight, order: usize) -> Result<QSeries> {
    mp.scaled(mu.x().to_vec())?;
    if mu.p() != mp.p() {
        return Err(Error::ModulusMismatch(mp.p(), mu.p()));
    }
    qs_mul(
        &QSeries::monomial(mp.lowest_exponent(mu), order),
        &eta_inv_pow(mp.rank(), order)?,
    )
}

/// `Σ_{σ∈W} (-1)^{l(σ)} q^{½|√pσ(α+λ₀+ρ) - λ_p - ρ/√p|²} / η(q)^l`.
pub fn w_char(mp: &ModelParams, alpha: &Weight, lam: &LambdaParam, order: usize) -> Result<QSeries> {
    let a = alpha_ints(mp, alpha)?;
    check_lambda(mp, lam)?;
    let group = mp.weyl_group()?;
    let base = w_exponent_int(mp, &WeylElement::identity(mp.rank()), &a, lam);
    let mut num = TermSum::new(base, order);
    for w in group.elements() {
        num.add(w_exponent_int(mp, w, &a, lam), w.sign())?;
    }
    times_eta(mp, num, order)
}

/// The same signed sum with exponents `(1/2p)|\overline{y_σ ∘ μ_λ} + ρ|²`; narrow `λ` only.
pub fn w_char_affine(mp: &ModelParams, alpha: &Weight, lam: &LambdaParam, order: usize) -> Result<QSeries> {
    alpha_ints(mp, alpha)?;
    check_lambda(mp, lam)?;
    mp.require_narrow(&lam.sp)?;
    let group = mp.weyl_group()?;
    let terms = group
        .elements()
        .iter()
        .map(|w| Ok((affine_exponent(mp, w, alpha, lam)?, w.sign())))
        .collect::<Result<Vec<_>>>()?;
    let base = terms.iter().map(|t| t.0).min().expect("W is nonempty");
    let mut num = TermSum::new(base, order);
    for (e, s) in terms {
        num.add(e, s)?;
    }
    times_eta(mp, num, order)
}

/// `α ∈ P_+ ∩ Q` whose terms can reach exponent `top`: the reverse triangle inequality gives
/// `(1/2p)(p|α+λ₀+ρ| - |√pλ_p+ρ|)²` as a lower bound for every exponent of `α`.
fn alphas_reaching(mp: &ModelParams, lam: &LambdaParam, top: Rational) -> Vec<Vec<i64>> {
    let rs = mp.rs();
    let (shift, v) = shifted_pair(mp, &vec![0; mp.rank()], lam);
    let p = int(mp.p());
    let bound = NormBound {
        a: rs.norm_sq_int(&v),
        b: int(2) * p * top,
    }
    .scaled_down(p);
    dominant_weights_within(rs, &shift, &bound, |a| rs.in_root_lattice_int(a))
}

/// `Σ_{α∈P_+∩Q} dim L(α + λ₀) · tr_{W(-√pα+λ)} q^{L₀ - c/24}`.
pub fn module_char(mp: &ModelParams, lam: &LambdaParam, order: usize) -> Result<QSeries> {
    check_lambda(mp, lam)?;
    let rs = mp.rs();
    let group = mp.weyl_group()?;
    let zero = vec![0; mp.rank()];
    let base = w_exponent_int(mp, &WeylElement::identity(mp.rank()), &zero, lam);
    let mut num = TermSum::new(base, order);
    for a in alphas_reaching(mp, lam, num.top()) {
        let dim = i64::try_from(rs.weyl_dim_int(&add_ints(&a, &lam.lambda0))).map_err(|_| Error::Overflow)?;
        for w in group.elements() {
            let e = w_exponent_int(mp, w, &a, lam);
            if e <= num.top() {
                num.add(e, w.sign() * dim)?;
            }
        }
    }
    times_eta(mp, num, order)
}

/// `Σ_{α∈Q} tr_{F(-√pα+λ)} q^{L₀ - c/24}`, the character of the lattice module.
pub fn lattice_char(mp: &ModelParams, lam: &LambdaParam, order: usize) -> Result<QSeries> {
    check_lambda(mp, lam)?;
    let rs = mp.rs();
    let p = mp.p();
    let (shift, v) = shifted_pair(mp, &vec![0; mp.rank()], lam);
    // exponent of B = β + λ₀ + ρ is (p/2)|B - v/p|²; β = 0 bounds the minimum from above
    let reference =
        rs.norm_sq_int(&sub_ints(&shift.iter().map(|c| c * p).collect::<Vec<_>>(), &v)) / int(2 * p);
    let top = reference + int(order as i64);
    let radius_sq = int(2) * top / int(p);
    let offset: Vec<Rational> = v
        .iter()
        .zip(&shift)
        .map(|(vi, si)| Rational::new(*vi, p) - int(*si))
        .collect();
    let center = rs.to_root_coords(&Weight::new(offset))?;
    let mut exponents = Vec::new();
    for m in crate::rootsys::lattice_points_in_ball(rs, &center, radius_sq) {
        let beta = rs.from_root_coords_int(&m);
        let b: Vec<i64> = add_ints(&beta, &shift).iter().map(|c| c * p).collect();
        exponents.push(rs.norm_sq_int(&sub_ints(&b, &v)) / int(2 * p));
    }
    let base = exponents
        .iter()
        .copied()
        .min()
        .ok_or_else(|| Error::Internal("empty lattice ball".into()))?;
    let mut num = TermSum::new(base, order);
    for e in exponents {
        num.add(e, 1)?;
    }
    times_eta(mp, num, order)
}
