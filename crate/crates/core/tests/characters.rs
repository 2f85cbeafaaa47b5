use triplet_core::params::{LambdaParam, ModelParams};
use triplet_core::qseries::{
    eta_inv_pow, fock_char, lattice_char, module_char, qs_add, qs_eq, qs_mul, qs_scale, w_char,
    w_char_affine, QSeries,
};
use triplet_core::rational::{int, rat, NormBound, Rational};
use triplet_core::rootsys::{enum_dominant_in_q, CartanType, RootSystem, Weight};

fn mp(t: &str, p: i64) -> ModelParams {
    ModelParams::new(RootSystem::build(t.parse::<CartanType>().unwrap()).unwrap(), p).unwrap()
}

/// `∏_{n>=1} (1 - q^n)^{-l}` by multiplying geometric series one factor at a time.
fn product_oracle(l: usize, order: usize) -> Vec<i64> {
    let mut c = vec![0i64; order + 1];
    c[0] = 1;
    for _ in 0..l {
        for n in 1..=order {
            for k in n..=order {
                c[k] += c[k - n];
            }
        }
    }
    c
}

#[test]
fn eta_powers_match_product_expansion() {
    for l in 1..=8 {
        let e = eta_inv_pow(l, 25).unwrap();
        assert_eq!(e.base(), rat(-(l as i64), 24));
        assert_eq!(e.coeffs(), product_oracle(l, 25).as_slice(), "l = {l}");
    }
}

/// `(q^{E(e)} - q^{E(σ₁)}) / η` written out by hand for `sl₂`.
#[test]
fn a1_characters_match_closed_form() {
    let order = 15;
    for p in 2..=6 {
        let m = mp("A1", p);
        for lambda0 in [0, 1] {
            for s in 0..p {
                for n in 0..3 {
                    let lam = m.lambda(vec![lambda0], vec![s]).unwrap();
                    let alpha = Weight::from_ints(&[2 * n]);
                    let a = p * (2 * n + lambda0 + 1);
                    let e_id = Rational::new((a - (s + 1)).pow(2), 4 * p);
                    let e_refl = Rational::new((a + s + 1).pow(2), 4 * p);
                    let eta = eta_inv_pow(1, order).unwrap();
                    let plus = QSeries::monomial(e_id, order);
                    let minus = QSeries::monomial(e_refl, order + 40);
                    let numerator = qs_add(&plus, &qs_scale(&minus, -1).unwrap()).unwrap();
                    let expected = qs_mul(&numerator, &eta).unwrap();
                    let got = w_char(&m, &alpha, &lam, order).unwrap();
                    assert_eq!(got.base(), expected.base());
                    assert!(
                        qs_eq(&got, &expected, order).unwrap(),
                        "p={p} lambda0={lambda0} s={s} n={n}"
                    );
                    assert_eq!(got, w_char_affine(&m, &alpha, &lam, order).unwrap());
                }
            }
        }
    }
}

#[test]
fn fock_base_is_conformal_weight_shifted_by_central_charge() {
    for (t, p) in [("A1", 3), ("A2", 4), ("D4", 5), ("E6", 13)] {
        let m = mp(t, p);
        for x in [
            vec![0; m.rank()],
            (0..m.rank() as i64).collect(),
            (0..m.rank() as i64).map(|i| 3 - 2 * i).collect(),
        ] {
            let mu = m.scaled(x).unwrap();
            let f = fock_char(&m, &mu, 5).unwrap();
            assert_eq!(
                f.base(),
                m.conformal_weight(&mu).unwrap() - m.central_charge() / int(24)
            );
            assert_eq!(f.leading_coefficient(), 1);
        }
    }
}

/// Sum of `dim L(α + λ₀) · w_char(α)` over a generous explicit set of `α`.
fn module_oracle(m: &ModelParams, lam: &LambdaParam, order: usize) -> QSeries {
    let rs = m.rs();
    let mut total: Option<QSeries> = None;
    for alpha in enum_dominant_in_q(rs, &NormBound::sqrt(int(60))) {
        let top = &alpha + &lam.lambda0_weight();
        let dim = rs.weyl_dim(&top).unwrap() as i64;
        let term = qs_scale(&w_char(m, &alpha, lam, order).unwrap(), dim).unwrap();
        total = Some(match total {
            None => term,
            Some(t) => qs_add(&t, &term).unwrap(),
        });
    }
    total.unwrap()
}

#[test]
fn module_char_matches_explicit_weight_sum() {
    let order = 8;
    for (t, p) in [("A1", 2), ("A1", 3), ("A2", 2), ("A2", 3), ("A2", 4)] {
        let m = mp(t, p);
        for lam in m.lambda_set() {
            let got = module_char(&m, &lam, order).unwrap();
            let expected = module_oracle(&m, &lam, order);
            assert_eq!(got.base(), expected.base(), "{t} p={p} {lam:?}");
            assert!(
                qs_eq(&got, &expected, order).unwrap(),
                "{t} p={p} {lam:?}: {got:?} vs {expected:?}"
            );
        }
    }
}

/// Fock characters of `-√pβ + λ` summed over a box of root-lattice points.
fn lattice_oracle(m: &ModelParams, lam: &LambdaParam, order: usize, radius: i64) -> QSeries {
    let rs = m.rs();
    let x = lam.to_scaled().x().to_vec();
    let l = m.rank();
    let mut coords = vec![vec![]];
    for _ in 0..l {
        coords = coords
            .into_iter()
            .flat_map(|c: Vec<i64>| (-radius..=radius).map(move |v| [c.clone(), vec![v]].concat()))
            .collect();
    }
    let mut terms: Vec<QSeries> = coords
        .iter()
        .map(|mcoord| {
            let beta = rs.from_root_coords_int(mcoord);
            let y: Vec<i64> = x.iter().zip(&beta).map(|(a, b)| a - m.p() * b).collect();
            fock_char(m, &m.scaled(y).unwrap(), order).unwrap()
        })
        .collect();
    let min = terms.iter().map(|t| t.base()).min().unwrap();
    terms.retain(|t| t.base() <= min + int(order as i64));
    let stretched: Vec<QSeries> = terms
        .iter()
        .map(|t| {
            let pad = (t.base() - min).to_integer() as usize;
            let mut c = vec![0; pad];
            c.extend_from_slice(t.coeffs());
            QSeries::new(min, c)
        })
        .collect();
    stretched
        .iter()
        .skip(1)
        .fold(stretched[0].clone(), |a, b| qs_add(&a, b).unwrap())
}

#[test]
fn lattice_char_matches_box_sum() {
    let order = 6;
    for (t, p) in [("A1", 2), ("A1", 5), ("A2", 2), ("A2", 3)] {
        let m = mp(t, p);
        for lam in m.lambda_set() {
            let got = lattice_char(&m, &lam, order).unwrap();
            let expected = lattice_oracle(&m, &lam, order, 6);
            assert_eq!(got.base(), expected.base(), "{t} p={p} {lam:?}");
            assert!(qs_eq(&got, &expected, order).unwrap(), "{t} p={p} {lam:?}");
        }
    }
}

#[test]
fn a1_lattice_exponents() {
    // exponents (4n+1)²/8 over n ∈ Z
    let m = mp("A1", 2);
    let lam = m.lambda(vec![0], vec![0]).unwrap();
    let theta: Vec<Rational> = (-5i64..=5)
        .map(|n| Rational::new((4 * n + 1).pow(2), 8))
        .collect();
    let got = lattice_char(&m, &lam, 10).unwrap();
    let mut numerator = vec![0i64; 11];
    for e in theta {
        let k = e - rat(1, 8);
        if k <= int(10) {
            numerator[k.to_integer() as usize] += 1;
        }
    }
    let expected = qs_mul(&QSeries::new(rat(1, 8), numerator), &eta_inv_pow(1, 10).unwrap()).unwrap();
    assert_eq!(got, expected);
}
