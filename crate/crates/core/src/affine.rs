//! The affine Weyl group `W ⋉ Q` acting on `h* ⊕ CΛ₀ ⊕ Cδ`, the chamber criterion, and the
//! elements feeding the affine-orbit form of the W-module characters.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::params::{LambdaParam, ModelParams};
use crate::rational::{int, Rational};
use crate::rootsys::{add_ints, scale_ints, sub_ints, RootSystem, Weight, WeylElement};

/// `μ = μ̄ + ⟨μ, K⟩Λ₀ + (μ, Λ₀)δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub classical: Weight,
    pub level: Rational,
    pub delta: Rational,
}

impl AffineWeight {
    pub fn new(classical: Weight, level: Rational, delta: Rational) -> Self {
        Self {
            classical,
            level,
            delta,
        }
    }

    pub fn classical_only(classical: Weight) -> Self {
        Self::new(classical, Rational::zero(), Rational::zero())
    }

    fn shifted(&self, rs: &RootSystem, sign: i64) -> Self {
        let rho = rs.rho().scale(int(sign));
        Self {
            classical: &self.classical + &rho,
            level: self.level + int(sign * rs.coxeter_number()),
            delta: self.delta,
        }
    }
}

/// `σ t_β` with `β ∈ Q`, stored in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    pub sigma: WeylElement,
    pub beta: Vec<i64>,
}

impl AffineWeylElement {
    pub fn new(rs: &RootSystem, sigma: WeylElement, beta: Vec<i64>) -> Result<Self> {
        if beta.len() != rs.rank() || sigma.rank() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: beta.len(),
            });
        }
        if !rs.in_root_lattice_int(&beta) {
            return Err(Error::NotInSet("in the root lattice"));
        }
        Ok(Self { sigma, beta })
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            sigma: WeylElement::identity(rank),
            beta: vec![0; rank],
        }
    }

    /// `(σ t_β)(σ' t_β') = σσ' t_{σ'^{-1}β + β'}`.
    pub fn compose(&self, rs: &RootSystem, other: &Self) -> Self {
        let moved = other.sigma.act_inverse_int(rs, &self.beta);
        Self {
            sigma: self.sigma.compose(rs, &other.sigma),
            beta: add_ints(&moved, &other.beta),
        }
    }

    /// `(σ t_β)^{-1} = σ^{-1} t_{-σβ}`.
    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let beta = self.sigma.act_int(&self.beta).iter().map(|c| -c).collect();
        Self {
            sigma: self.sigma.inverse(rs),
            beta,
        }
    }
}

/// `σt_β(μ) = σ(μ̄ + ⟨μ,K⟩β) + ⟨μ,K⟩Λ₀ + ((μ, Λ₀ - β) - ½|β|²⟨μ,K⟩)δ`.
pub fn aff_act(rs: &RootSystem, y: &AffineWeylElement, mu: &AffineWeight) -> Result<AffineWeight> {
    if mu.classical.rank() != rs.rank() || y.beta.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: mu.classical.rank(),
        });
    }
    let beta = Weight::from_ints(&y.beta);
    let translated = &mu.classical + &beta.scale(mu.level);
    let classical = y.sigma.act(&translated)?;
    let beta_sq = rs.norm_sq_int(&y.beta);
    let delta = mu.delta - rs.pairing(&mu.classical, &beta)? - beta_sq * mu.level / int(2);
    Ok(AffineWeight {
        classical,
        level: mu.level,
        delta,
    })
}

/// `y ∘ μ = y(μ + ρ + hΛ₀) - (ρ + hΛ₀)`.
pub fn aff_circ(rs: &RootSystem, y: &AffineWeylElement, mu: &AffineWeight) -> Result<AffineWeight> {
    Ok(aff_act(rs, y, &mu.shifted(rs, 1))?.shifted(rs, -1))
}

/// Membership in the closed fundamental chamber `Ĉ⁺` straight from its definition:
/// `(γ, μ + ρ + hΛ₀) >= 0` for every positive real affine root `γ`.
pub fn in_chamber_direct(rs: &RootSystem, mu: &AffineWeight) -> Result<bool> {
    let nu = mu.shifted(rs, 1);
    // (γ̄ + nδ, ν) = (γ̄, ν̄) + n⟨ν, K⟩ ; n = 1 is the binding case when the level is >= 0
    if nu.level < Rational::zero() {
        return Ok(false);
    }
    for root in rs.positive_roots() {
        let v = rs.pairing(&root, &nu.classical)?;
        if v < Rational::zero() || -v + nu.level < Rational::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `α + λ₀ + ρ`.
fn shifted_highest(rs: &RootSystem, alpha: &[i64], lambda0: &[i64]) -> Vec<i64> {
    add_ints(&add_ints(alpha, lambda0), &rs.rho_int())
}

fn alpha_ints(mp: &ModelParams, alpha: &Weight) -> Result<Vec<i64>> {
    let rs = mp.rs();
    if alpha.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: alpha.rank(),
        });
    }
    let a = alpha.to_ints().ok_or(Error::NotInSet("in P_+ ∩ Q"))?;
    if a.iter().any(|&c| c < 0) || !rs.in_root_lattice_int(&a) {
        return Err(Error::NotInSet("in P_+ ∩ Q"));
    }
    Ok(a)
}

/// The finite chamber criterion:
/// `0 <= (σ^{-1}γ̄, p(β - (α + λ₀ + ρ)) + √pλ_p + ρ) <= p` for every `γ̄ ∈ Δ⁺`.
pub fn lemma39_test(
    mp: &ModelParams,
    sigma: &WeylElement,
    beta: &[i64],
    alpha: &Weight,
    lam: &LambdaParam,
) -> Result<bool> {
    let a = alpha_ints(mp, alpha)?;
    Ok(lemma39_test_int(mp, sigma, beta, &a, lam))
}

pub(crate) fn lemma39_test_int(
    mp: &ModelParams,
    sigma: &WeylElement,
    beta: &[i64],
    alpha: &[i64],
    lam: &LambdaParam,
) -> bool {
    let rs = mp.rs();
    let p = mp.p();
    let top = shifted_highest(rs, alpha, &lam.lambda0);
    let v = add_ints(
        &add_ints(&scale_ints(&sub_ints(beta, &top), p), &lam.sp),
        &rs.rho_int(),
    );
    let det = rs.det();
    rs.positive_roots_int().iter().all(|g| {
        let pre = sigma.act_inverse_int(rs, g);
        let val = rs.pairing_scaled(&pre, &v);
        debug_assert_eq!(val % det, 0);
        let val = val / det;
        (0..=p).contains(&val)
    })
}

/// `(ω_{λ₀}, σ_{λ₀})` for every member of `Λ₀`, found by exhaustive search over `W`.
fn chambers(mp: &ModelParams) -> Result<&[(Vec<i64>, WeylElement)]> {
    if let Some(c) = mp.chambers.get() {
        return Ok(c);
    }
    let rs = mp.rs();
    let group = mp.weyl_group()?;
    let mut out = Vec::new();
    for lambda0 in mp.lambda0_ints() {
        let omega = mp.class_rep(&add_ints(lambda0, &rs.rho_int()));
        // σ^{-1}(Δ⁺) = T  ⟺  σ(T) ⊆ Δ⁺, with
        // T = {γ ∈ Δ⁺ : (γ, ω) = 0} ∪ {-γ : γ ∈ Δ⁺, (γ, ω) = 1}
        let mut target = Vec::new();
        for g in rs.positive_roots_int() {
            let pair = rs.pairing_int(g, &omega);
            if pair.is_zero() {
                target.push(g.clone());
            } else if pair == int(1) {
                target.push(g.iter().map(|c| -c).collect());
            }
        }
        if target.len() != rs.num_positive_roots() {
            return Err(Error::Internal(format!("ω = {omega:?} is not minuscule")));
        }
        let found: Vec<&WeylElement> = group
            .elements()
            .iter()
            .filter(|w| target.iter().all(|t| rs.height_scaled(&w.act_int(t)) > 0))
            .collect();
        match found.as_slice() {
            [sigma] => out.push((omega, (*sigma).clone())),
            [] => return Err(Error::Internal(format!("no σ for λ₀ = {lambda0:?}"))),
            _ => return Err(Error::Internal(format!("σ for λ₀ = {lambda0:?} is not unique"))),
        }
    }
    Ok(mp.chambers.get_or_init(|| out))
}

fn chamber_for(mp: &ModelParams, lambda0: &[i64]) -> Result<(Vec<i64>, WeylElement)> {
    let idx = mp
        .lambda0_ints()
        .iter()
        .position(|w| w == lambda0)
        .ok_or(Error::NotInSet("a member of Λ₀"))?;
    Ok(chambers(mp)?[idx].clone())
}

/// Output of the chamber construction for `(α, λ₀)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberPair {
    pub omega: Vec<i64>,
    pub sigma: WeylElement,
    pub beta: Vec<i64>,
}

/// `ω_{λ₀} ∈ Λ₀`, `σ_{λ₀} ∈ W` and `β_{λ₀} = α + λ₀ + ρ - ω_{λ₀} ∈ Q`.
pub fn lemma310_construct(mp: &ModelParams, alpha: &Weight, lambda0: &Weight) -> Result<ChamberPair> {
    let a = alpha_ints(mp, alpha)?;
    let l0 = lambda0.to_ints().ok_or(Error::NotInSet("a member of Λ₀"))?;
    lemma310_int(mp, &a, &l0)
}

pub(crate) fn lemma310_int(mp: &ModelParams, alpha: &[i64], lambda0: &[i64]) -> Result<ChamberPair> {
    let rs = mp.rs();
    let (omega, sigma) = chamber_for(mp, lambda0)?;
    let beta = sub_ints(&shifted_highest(rs, alpha, lambda0), &omega);
    if !rs.in_root_lattice_int(&beta) {
        return Err(Error::Internal("β_{λ₀} outside Q".into()));
    }
    Ok(ChamberPair { omega, sigma, beta })
}

/// `y_{α,λ₀} = t_{ω_{λ₀} - (α + λ₀ + ρ)} σ_{λ₀}^{-1}`.
pub fn y_alpha(mp: &ModelParams, alpha: &Weight, lambda0: &Weight) -> Result<AffineWeylElement> {
    y_sigma(mp, &WeylElement::identity(mp.rank()), alpha, lambda0)
}

/// `y_σ = t_{σ(ω_{λ₀}) - (α + λ₀ + ρ)} σ σ_{λ₀}^{-1}`.
pub fn y_sigma(
    mp: &ModelParams,
    sigma: &WeylElement,
    alpha: &Weight,
    lambda0: &Weight,
) -> Result<AffineWeylElement> {
    let a = alpha_ints(mp, alpha)?;
    let l0 = lambda0.to_ints().ok_or(Error::NotInSet("a member of Λ₀"))?;
    y_sigma_int(mp, sigma, &a, &l0)
}

pub(crate) fn y_sigma_int(
    mp: &ModelParams,
    sigma: &WeylElement,
    alpha: &[i64],
    lambda0: &[i64],
) -> Result<AffineWeylElement> {
    let rs = mp.rs();
    let pair = lemma310_int(mp, alpha, lambda0)?;
    let translation = sub_ints(&sigma.act_int(&pair.omega), &shifted_highest(rs, alpha, lambda0));
    if !rs.in_root_lattice_int(&translation) {
        return Err(Error::Internal("translation part of y_σ outside Q".into()));
    }
    // t_γ w = w t_{w^{-1}γ}
    let w = sigma.compose(rs, &pair.sigma.inverse(rs));
    let beta = w.act_inverse_int(rs, &translation);
    Ok(AffineWeylElement { sigma: w, beta })
}

/// `μ_λ = σ_{λ₀}(-pω_{λ₀} + √pλ_p + ρ) - ρ + kΛ₀`.
pub fn mu_lambda(mp: &ModelParams, lam: &LambdaParam) -> Result<AffineWeight> {
    mp.check_digits(&lam.sp)?;
    let rs = mp.rs();
    let (omega, sigma) = chamber_for(mp, &lam.lambda0)?;
    let inner = add_ints(&add_ints(&scale_ints(&omega, -mp.p()), &lam.sp), &rs.rho_int());
    let classical = sub_ints(&sigma.act_int(&inner), &rs.rho_int());
    Ok(AffineWeight::new(
        Weight::from_ints(&classical),
        mp.k(),
        Rational::zero(),
    ))
}

/// `(1/2p)|\overline{y_σ ∘ μ_λ} + ρ|²`, defined for narrow `λ`.
pub fn affine_exponent(
    mp: &ModelParams,
    sigma: &WeylElement,
    alpha: &Weight,
    lam: &LambdaParam,
) -> Result<Rational> {
    mp.require_narrow(&lam.sp)?;
    let y = y_sigma(mp, sigma, alpha, &lam.lambda0_weight())?;
    let moved = aff_circ(mp.rs(), &y, &mu_lambda(mp, lam)?)?;
    let v = &moved.classical + &mp.rs().rho();
    Ok(mp.rs().norm_sq(&v)? / int(2 * mp.p()))
}
