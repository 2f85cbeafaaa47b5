//! Parameter combinatorics of the rescaled lattice `sqrt(p) Q`: the sets `Λ₀`, `Λ_p`,
//! `Λ`, the `*` action, the twists `ε`, conformal weights and the narrow condition.
//!
//! A point `μ ∈ (1/√p)P` is stored as the integral weight `x = √p μ`, so every exposed
//! scalar is rational without ever evaluating `√p`.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, modulo, rat, Rational};
use crate::rootsys::{
    add_ints, scale_ints, sub_ints, RootSystem, Weight, WeylElement, WeylGroup, DEFAULT_WEYL_CAP,
};

/// An element `x / √p` of `(1/√p)P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScaledWeight {
    x: Vec<i64>,
    p: i64,
}

impl ScaledWeight {
    pub fn new(x: Vec<i64>, p: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Self { x, p })
    }

    pub fn zero(rank: usize, p: i64) -> Result<Self> {
        Self::new(vec![0; rank], p)
    }

    /// `√p μ`, an integral weight.
    pub fn x(&self) -> &[i64] {
        &self.x
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    fn same_p(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.p, other.p))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_p(other)?;
        Ok(Self {
            x: add_ints(&self.x, &other.x),
            p: self.p,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_p(other)?;
        Ok(Self {
            x: sub_ints(&self.x, &other.x),
            p: self.p,
        })
    }

    /// `|μ|^2 = |x|^2 / p`.
    pub fn norm_sq(&self, rs: &RootSystem) -> Rational {
        rs.norm_sq_int(&self.x) / int(self.p)
    }

    /// `√p (μ, ρ) = (x, ρ)`.
    pub fn rho_pairing_scaled(&self, rs: &RootSystem) -> Rational {
        rs.pairing_int(&self.x, &rs.rho_int())
    }
}

/// `λ = -√p λ₀ + λ_p` with `λ₀ ∈ Λ₀` and `√p λ_p = Σ s_i ω_i`, `0 <= s_i <= p-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LambdaParam {
    pub lambda0: Vec<i64>,
    pub sp: Vec<i64>,
    pub p: i64,
}

impl LambdaParam {
    pub fn to_scaled(&self) -> ScaledWeight {
        let x = add_ints(&scale_ints(&self.lambda0, -self.p), &self.sp);
        ScaledWeight { x, p: self.p }
    }

    pub fn lambda0_weight(&self) -> Weight {
        Weight::from_ints(&self.lambda0)
    }

    pub fn is_zero(&self) -> bool {
        self.lambda0.iter().chain(&self.sp).all(|&c| c == 0)
    }
}

/// Representatives of `P/Q` inside `P_+`: zero and the minuscule fundamental weights.
pub fn lambda0_set(rs: &RootSystem) -> Vec<Weight> {
    lambda0_ints(rs).iter().map(|w| Weight::from_ints(w)).collect()
}

fn lambda0_ints(rs: &RootSystem) -> Vec<Vec<i64>> {
    let l = rs.rank();
    let mut out = vec![vec![0; l]];
    for i in 0..l {
        // (omega_i, theta) is the i-th simple-root coefficient of theta
        if rs.theta_simple()[i] == 1 {
            let mut w = vec![0; l];
            w[i] = 1;
            out.push(w);
        }
    }
    out
}

/// `μ = -√p μ₀ + μ_p`: returns `(μ₀, s)` with `s_i = x_i mod p`.
pub fn decompose(mu: &ScaledWeight) -> (Vec<i64>, Vec<i64>) {
    let p = mu.p;
    let s: Vec<i64> = mu.x.iter().map(|&c| modulo(c, p)).collect();
    let mu0 = s.iter().zip(&mu.x).map(|(si, xi)| (si - xi) / p).collect();
    (mu0, s)
}

/// Model data for one root system and one `p >= 2`.
#[derive(Debug)]
pub struct ModelParams {
    rs: RootSystem,
    p: i64,
    weyl_cap: u64,
    lambda0: Vec<Vec<i64>>,
    group: OnceLock<WeylGroup>,
    pub(crate) chambers: OnceLock<Vec<(Vec<i64>, WeylElement)>>,
}

impl Clone for ModelParams {
    fn clone(&self) -> Self {
        Self {
            rs: self.rs.clone(),
            p: self.p,
            weyl_cap: self.weyl_cap,
            lambda0: self.lambda0.clone(),
            group: self.group.clone(),
            chambers: self.chambers.clone(),
        }
    }
}

impl ModelParams {
    pub fn new(rs: RootSystem, p: i64) -> Result<Self> {
        Self::with_weyl_cap(rs, p, DEFAULT_WEYL_CAP)
    }

    pub fn with_weyl_cap(rs: RootSystem, p: i64, weyl_cap: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidModulus(p));
        }
        let lambda0 = lambda0_ints(&rs);
        Ok(Self {
            rs,
            p,
            weyl_cap,
            lambda0,
            group: OnceLock::new(),
            chambers: OnceLock::new(),
        })
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn weyl_cap(&self) -> u64 {
        self.weyl_cap
    }

    /// The enumerated Weyl group, computed once.
    pub fn weyl_group(&self) -> Result<&WeylGroup> {
        if let Some(g) = self.group.get() {
            return Ok(g);
        }
        let g = WeylGroup::enumerate(&self.rs, self.weyl_cap)?;
        Ok(self.group.get_or_init(|| g))
    }

    pub fn longest(&self) -> Result<&WeylElement> {
        Ok(self.weyl_group()?.longest())
    }

    /// `Q₀² = (p-1)²/p` where `Q₀ = √p - 1/√p`.
    pub fn q0_sq(&self) -> Rational {
        rat((self.p - 1) * (self.p - 1), self.p)
    }

    /// `c = l - 12|Q₀ρ|²`.
    pub fn central_charge(&self) -> Rational {
        let rho_sq = self.rs.norm_sq_int(&self.rs.rho_int());
        int(self.rank() as i64) - int(12) * self.q0_sq() * rho_sq
    }

    /// `c = l - Q₀² h dim g`, the second printed form.
    pub fn central_charge_alt(&self) -> Rational {
        int(self.rank() as i64) - self.q0_sq() * int(self.rs.coxeter_number() * self.rs.dim_g())
    }

    /// `k = p - h`.
    pub fn k(&self) -> Rational {
        int(self.p - self.rs.coxeter_number())
    }

    /// `k' = 1/p - h`.
    pub fn k_dual(&self) -> Rational {
        rat(1, self.p) - int(self.rs.coxeter_number())
    }

    pub fn lambda0_ints(&self) -> &[Vec<i64>] {
        &self.lambda0
    }

    pub fn lambda0_set(&self) -> Vec<Weight> {
        lambda0_set(&self.rs)
    }

    /// Index in `Λ₀` of the representative of the class of `x` in `P/Q`.
    pub fn class_index(&self, x: &[i64]) -> usize {
        self.lambda0
            .iter()
            .position(|w| self.rs.in_root_lattice_int(&sub_ints(x, w)))
            .expect("Λ₀ meets every class of P/Q")
    }

    /// Representative in `Λ₀` of the class of `x` in `P/Q`.
    pub fn class_rep(&self, x: &[i64]) -> Vec<i64> {
        self.lambda0[self.class_index(x)].clone()
    }

    pub fn scaled(&self, x: Vec<i64>) -> Result<ScaledWeight> {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: x.len(),
            });
        }
        ScaledWeight::new(x, self.p)
    }

    fn check_mu(&self, mu: &ScaledWeight) -> Result<()> {
        if mu.p != self.p {
            return Err(Error::ModulusMismatch(self.p, mu.p));
        }
        if mu.x.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: mu.x.len(),
            });
        }
        Ok(())
    }

    pub fn check_digits(&self, sp: &[i64]) -> Result<()> {
        if sp.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: sp.len(),
            });
        }
        if sp.iter().any(|&s| s < 0 || s >= self.p) {
            return Err(Error::DigitsOutOfRange {
                digits: sp.to_vec(),
                max: self.p - 1,
            });
        }
        Ok(())
    }

    /// Validates and builds a `LambdaParam`; `lambda0` must be a member of `Λ₀`.
    pub fn lambda(&self, lambda0: Vec<i64>, sp: Vec<i64>) -> Result<LambdaParam> {
        self.check_digits(&sp)?;
        if !self.lambda0.contains(&lambda0) {
            return Err(Error::NotInSet("a member of Λ₀"));
        }
        Ok(LambdaParam {
            lambda0,
            sp,
            p: self.p,
        })
    }

    /// `σ * μ = -√p μ₀ + (1/√p) σ∘(√p μ_p)`.
    pub fn star_act(&self, w: &WeylElement, mu: &ScaledWeight) -> Result<ScaledWeight> {
        self.check_mu(mu)?;
        let (mu0, s) = decompose(mu);
        let x = add_ints(&scale_ints(&mu0, -self.p), &w.circ_act_int(&s));
        Ok(ScaledWeight { x, p: self.p })
    }

    /// `ε_{λ_p}(σ) = (1/√p)(σ*λ_p - (σ*λ_p)_p)`, an element of `P`.
    pub fn epsilon(&self, sp: &[i64], w: &WeylElement) -> Result<Vec<i64>> {
        self.check_digits(sp)?;
        let moved = w.circ_act_int(sp);
        let (mu0, _) = decompose(&ScaledWeight { x: moved, p: self.p });
        Ok(mu0.iter().map(|c| -c).collect())
    }

    /// `Δ_μ = ½|μ|² - Q₀(μ, ρ)`.
    pub fn conformal_weight(&self, mu: &ScaledWeight) -> Result<Rational> {
        self.check_mu(mu)?;
        let p = int(self.p);
        Ok(mu.norm_sq(&self.rs) / int(2) - (int(1) - int(1) / p) * mu.rho_pairing_scaled(&self.rs))
    }

    /// `½|μ - Q₀ρ|² + (c - l)/24`, the other printed form of `Δ_μ`.
    pub fn conformal_weight_shifted_form(&self, mu: &ScaledWeight) -> Result<Rational> {
        self.check_mu(mu)?;
        Ok(self.lowest_exponent(mu) + (self.central_charge() - int(self.rank() as i64)) / int(24))
    }

    /// `½|μ - Q₀ρ|²`, the exponent of the lowest term of the Fock-module character.
    pub(crate) fn lowest_exponent(&self, mu: &ScaledWeight) -> Rational {
        // √p(μ - Q₀ρ) = x - (p-1)ρ
        let v: Vec<i64> = mu.x.iter().map(|c| c - (self.p - 1)).collect();
        self.rs.norm_sq_int(&v) / int(2 * self.p)
    }

    /// `(√p λ_p + ρ, θ)`.
    pub fn narrow_lhs(&self, sp: &[i64]) -> i64 {
        sp.iter()
            .zip(self.rs.theta_simple())
            .map(|(s, t)| (s + 1) * t)
            .sum()
    }

    /// The narrow condition `(√p λ_p + ρ, θ) <= p`.
    pub fn narrow(&self, sp: &[i64]) -> Result<bool> {
        self.check_digits(sp)?;
        Ok(self.narrow_lhs(sp) <= self.p)
    }

    pub fn require_narrow(&self, sp: &[i64]) -> Result<()> {
        if self.narrow(sp)? {
            Ok(())
        } else {
            Err(Error::NotNarrow {
                lhs: self.narrow_lhs(sp),
                p: self.p,
            })
        }
    }

    /// Condition (1) of the narrow-screening criterion along the reduced word `word`
    /// of `w₀` (0-based indices, `w₀ = s_{word[0]} ... s_{word[L-1]}`).
    pub fn lemma216_cond1(&self, sp: &[i64], word: &[usize]) -> Result<bool> {
        self.check_digits(sp)?;
        let len = word.len();
        let as_element = WeylElement::from_word(&self.rs, word)?;
        if len != self.rs.num_positive_roots() || as_element.length() != len {
            return Err(Error::NotLongestWord(word.to_vec()));
        }
        // w₀ = σ_{i_L} ... σ_{i_1}, so i_n = word[L - n]
        for n in 1..len {
            let prefix = WeylElement::from_word(&self.rs, &word[len - n..])?;
            let eps = self.epsilon(sp, &prefix)?;
            if eps[word[len - n - 1]] != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The unique `λ ∈ Λ` with `x ≡ λ` modulo `√p Q`.
    pub fn canonical_lambda(&self, mu: &ScaledWeight) -> Result<LambdaParam> {
        self.check_mu(mu)?;
        let (mu0, sp) = decompose(mu);
        Ok(LambdaParam {
            lambda0: self.class_rep(&mu0),
            sp,
            p: self.p,
        })
    }

    /// Canonical representative of `λ' = -w₀(λ)`.
    pub fn dual_param(&self, lam: &LambdaParam) -> Result<LambdaParam> {
        let x = lam.to_scaled();
        self.canonical_lambda(&ScaledWeight {
            x: self.rs.dual_int(&x.x),
            p: self.p,
        })
    }

    /// Canonical representative of `w₀ * λ'`, the parameter of the contragredient module.
    pub fn dual_module_param(&self, lam: &LambdaParam) -> Result<LambdaParam> {
        let dual = ScaledWeight {
            x: self.rs.dual_int(&lam.to_scaled().x),
            p: self.p,
        };
        let moved = self.star_act(self.longest()?, &dual)?;
        self.canonical_lambda(&moved)
    }

    /// All of `Λ`: `λ₀` in `Λ₀` order, then digit vectors lexicographically.
    pub fn lambda_set(&self) -> Vec<LambdaParam> {
        let l = self.rank();
        let digits = all_digit_vectors(l, self.p);
        let mut out = Vec::with_capacity(self.lambda0.len() * digits.len());
        for lambda0 in &self.lambda0 {
            for sp in &digits {
                out.push(LambdaParam {
                    lambda0: lambda0.clone(),
                    sp: sp.clone(),
                    p: self.p,
                });
            }
        }
        out
    }

    /// `|Λ| = |Λ₀| p^l`, without enumerating.
    pub fn lambda_count(&self) -> u128 {
        self.lambda0.len() as u128 * (self.p as u128).pow(self.rank() as u32)
    }
}

/// All `s ∈ {0, …, p-1}^l`, lexicographically.
pub fn all_digit_vectors(l: usize, p: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(l)];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..p).map(move |d| {
                    let mut v = prefix.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out
}

impl ModelParams {
    /// `ε_{λ_p}(w₀)` compared with `-ρ`; `None` when they agree.
    pub fn lemma215_deviation(&self, sp: &[i64]) -> Result<Option<Vec<i64>>> {
        let eps = self.epsilon(sp, self.longest()?)?;
        let minus_rho: Vec<i64> = vec![-1; self.rank()];
        Ok((eps != minus_rho).then_some(eps))
    }
}
