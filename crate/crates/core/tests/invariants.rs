use proptest::prelude::*;
use triplet_core::affine::{aff_act, aff_circ, AffineWeight, AffineWeylElement};
use triplet_core::params::{decompose, ModelParams};
use triplet_core::qseries::{qs_add, qs_mul, QSeries};
use triplet_core::rational::{rat, Rational};
use triplet_core::rootsys::{CartanType, RootSystem, Weight, WeylElement, WeylGroup, DEFAULT_WEYL_CAP};

const TYPES: [&str; 6] = ["A1", "A2", "A3", "D4", "A4", "D5"];

fn rs(t: &str) -> RootSystem {
    RootSystem::build(t.parse::<CartanType>().unwrap()).unwrap()
}

fn weight(rank: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec((-20i64..20, 1i64..7), rank)
        .prop_map(|v| Weight::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn element(rs: &RootSystem) -> impl Strategy<Value = WeylElement> {
    let r = rs.clone();
    proptest::collection::vec(0..rs.rank(), 0..12).prop_map(move |w| WeylElement::from_word(&r, &w).unwrap())
}

fn type_and<S: Strategy, F: Fn(&RootSystem) -> S + Clone + 'static>(
    f: F,
) -> impl Strategy<Value = (RootSystem, S::Value)> {
    proptest::sample::select(TYPES.to_vec()).prop_flat_map(move |t| {
        let r = rs(t);
        (Just(r.clone()), f(&r))
    })
}

proptest! {
    #[test]
    fn pairing_is_weyl_invariant((r, (w, mu, nu)) in type_and(|r| (element(r), weight(r.rank()), weight(r.rank())))) {
        let lhs = r.pairing(&w.act(&mu).unwrap(), &w.act(&nu).unwrap()).unwrap();
        prop_assert_eq!(lhs, r.pairing(&mu, &nu).unwrap());
    }

    #[test]
    fn length_is_inversion_count((r, w) in type_and(element)) {
        prop_assert_eq!(w.length(), w.inversion_count(&r));
        prop_assert_eq!(w.sign(), if w.length() % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn circ_act_is_an_action((r, (a, b, mu)) in type_and(|r| (element(r), element(r), weight(r.rank())))) {
        let ab = a.compose(&r, &b);
        let lhs = ab.circ_act(&r, &mu).unwrap();
        let rhs = a.circ_act(&r, &b.circ_act(&r, &mu).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_composes_to_identity((r, w) in type_and(element)) {
        prop_assert!(w.compose(&r, &w.inverse(&r)).is_identity());
    }

    #[test]
    fn decompose_reconstructs(x in proptest::collection::vec(-60i64..60, 3), p in 2i64..9) {
        let mp = ModelParams::new(rs("A3"), p).unwrap();
        let mu = mp.scaled(x.clone()).unwrap();
        let (mu0, s) = decompose(&mu);
        prop_assert!(s.iter().all(|&d| (0..p).contains(&d)));
        let back: Vec<i64> = s.iter().zip(&mu0).map(|(si, m)| si - p * m).collect();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn canonical_lambda_is_constant_on_cosets(
        x in proptest::collection::vec(-30i64..30, 2),
        m in proptest::collection::vec(-4i64..4, 2),
        p in 2i64..7,
    ) {
        let mp = ModelParams::new(rs("A2"), p).unwrap();
        let beta = mp.rs().from_root_coords_int(&m);
        let shifted: Vec<i64> = x.iter().zip(&beta).map(|(a, b)| a + p * b).collect();
        let a = mp.canonical_lambda(&mp.scaled(x).unwrap()).unwrap();
        let b = mp.canonical_lambda(&mp.scaled(shifted).unwrap()).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(mp.canonical_lambda(&a.to_scaled()).unwrap(), a);
    }

    #[test]
    fn series_ring_axioms(
        base in (-10i64..10, 1i64..6),
        a in proptest::collection::vec(-50i64..50, 8),
        b in proptest::collection::vec(-50i64..50, 8),
        c in proptest::collection::vec(-50i64..50, 8),
        shift in 0i64..3,
    ) {
        let base = rat(base.0, base.1);
        let x = QSeries::new(base, a);
        let y = QSeries::new(base + Rational::from_integer(shift), b);
        let z = QSeries::new(base, c);
        let eq = |u: &QSeries, v: &QSeries| {
            // compare on the grid both series are known on
            let top = u.top().min(v.top());
            let from = u.base().min(v.base());
            let mut n = from;
            while n <= top {
                if u.coeff_at(n) != v.coeff_at(n) {
                    return false;
                }
                n += Rational::from_integer(1);
            }
            true
        };
        let assoc_l = qs_mul(&qs_mul(&x, &y).unwrap(), &z).unwrap();
        let assoc_r = qs_mul(&x, &qs_mul(&y, &z).unwrap()).unwrap();
        prop_assert!(eq(&assoc_l, &assoc_r));
        let dist_l = qs_mul(&x, &qs_add(&y, &z).unwrap()).unwrap();
        let dist_r = qs_add(&qs_mul(&x, &y).unwrap(), &qs_mul(&x, &z).unwrap()).unwrap();
        prop_assert!(eq(&dist_l, &dist_r));
        let comm = qs_add(&x, &z).unwrap();
        prop_assert!(eq(&comm, &qs_add(&z, &x).unwrap()));
        prop_assert!(eq(&qs_mul(&x, &y).unwrap(), &qs_mul(&y, &x).unwrap()));
    }
}

fn affine_elements(r: &RootSystem) -> Vec<AffineWeylElement> {
    let group = WeylGroup::enumerate(r, DEFAULT_WEYL_CAP).unwrap();
    let mut out = Vec::new();
    for w in group.elements() {
        for m in [[0, 0], [1, 0], [0, -1], [2, 1]] {
            let beta = r.from_root_coords_int(&m[..r.rank()]);
            out.push(AffineWeylElement::new(r, w.clone(), beta).unwrap());
        }
    }
    out
}

#[test]
fn affine_action_respects_the_group_law() {
    let r = rs("A2");
    let elems = affine_elements(&r);
    let mu = AffineWeight::new(Weight::new(vec![rat(1, 3), rat(-2, 1)]), rat(5, 2), rat(1, 7));
    for y1 in &elems {
        for y2 in &elems {
            let prod = y1.compose(&r, y2);
            let lhs = aff_act(&r, &prod, &mu).unwrap();
            let rhs = aff_act(&r, y1, &aff_act(&r, y2, &mu).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs.level, mu.level);
            let lhs = aff_circ(&r, &prod, &mu).unwrap();
            let rhs = aff_circ(&r, y1, &aff_circ(&r, y2, &mu).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
        let back = aff_act(&r, &y1.inverse(&r), &aff_act(&r, y1, &mu).unwrap()).unwrap();
        assert_eq!(back, mu);
    }
}

#[test]
fn affine_action_preserves_the_form() {
    // (μ, ν) = (μ̄, ν̄) + ⟨μ,K⟩(ν,Λ₀) + ⟨ν,K⟩(μ,Λ₀)
    let r = rs("A2");
    let form = |a: &AffineWeight, b: &AffineWeight| {
        r.pairing(&a.classical, &b.classical).unwrap() + a.level * b.delta + b.level * a.delta
    };
    let mu = AffineWeight::new(Weight::new(vec![rat(1, 3), rat(-2, 1)]), rat(5, 2), rat(1, 7));
    let nu = AffineWeight::new(Weight::new(vec![rat(4, 1), rat(1, 2)]), rat(-1, 1), rat(3, 1));
    for y in affine_elements(&r) {
        let (a, b) = (aff_act(&r, &y, &mu).unwrap(), aff_act(&r, &y, &nu).unwrap());
        assert_eq!(form(&a, &b), form(&mu, &nu));
    }
}
