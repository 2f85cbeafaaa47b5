use triplet_core::affine::{affine_exponent, lemma310_construct, lemma39_test, mu_lambda, y_alpha, y_sigma};
use triplet_core::params::ModelParams;
use triplet_core::rational::{int, rat, NormBound};
use triplet_core::rootsys::{enum_dominant_in_q, CartanType, RootSystem, Weight, WeylElement, WeylGroup};

fn rs(t: &str) -> RootSystem {
    RootSystem::build(t.parse::<CartanType>().unwrap()).unwrap()
}

#[test]
fn group_orders_and_dimensions() {
    let table = [
        ("A1", 2, 3, 2u64),
        ("A2", 3, 8, 6),
        ("A3", 4, 15, 24),
        ("A4", 5, 24, 120),
        ("A5", 6, 35, 720),
        ("D4", 6, 28, 192),
        ("D5", 8, 45, 1920),
        ("E6", 12, 78, 51840),
        ("E7", 18, 133, 2903040),
        ("E8", 30, 248, 696729600),
    ];
    for (t, h, dim, order) in table {
        let r = rs(t);
        assert_eq!(
            (r.coxeter_number(), r.dim_g(), r.weyl_order()),
            (h, dim, order),
            "{t}"
        );
        assert_eq!(r.norm_sq(&r.rho()).unwrap(), int(h * dim) / int(12));
    }
    for t in ["A1", "A2", "A3", "D4", "A4", "D5"] {
        let r = rs(t);
        assert_eq!(
            WeylGroup::enumerate(&r, 10_000).unwrap().len() as u64,
            r.weyl_order()
        );
    }
}

#[test]
fn dominant_enumeration_examples() {
    let a1 = rs("A1");
    let rho = NormBound::sqrt(a1.norm_sq(&a1.rho()).unwrap());
    assert_eq!(enum_dominant_in_q(&a1, &rho), vec![Weight::zero(1)]);
    let got = enum_dominant_in_q(&a1, &NormBound::rational(int(4)));
    assert_eq!(
        got,
        vec![Weight::zero(1), Weight::from_ints(&[2]), Weight::from_ints(&[4])]
    );
    let a2 = rs("A2");
    let rho = NormBound::sqrt(a2.norm_sq(&a2.rho()).unwrap());
    assert_eq!(enum_dominant_in_q(&a2, &rho), vec![Weight::zero(2)]);
}

#[test]
fn weyl_dimension_examples() {
    assert_eq!(rs("A1").weyl_dim(&Weight::from_ints(&[2])).unwrap(), 3);
    assert_eq!(rs("A2").weyl_dim(&Weight::from_ints(&[1, 1])).unwrap(), 8);
    assert_eq!(rs("E8").weyl_dim(&Weight::fundamental(8, 7)).unwrap(), 248);
    assert_eq!(rs("E6").weyl_dim(&Weight::fundamental(6, 0)).unwrap(), 27);
    assert!(rs("A2").weyl_dim(&Weight::from_ints(&[-1, 2])).is_err());
}

#[test]
fn chamber_construction_examples() {
    let a1 = ModelParams::new(rs("A1"), 2).unwrap();
    let pair = lemma310_construct(&a1, &Weight::zero(1), &Weight::zero(1)).unwrap();
    assert_eq!(
        (pair.omega.clone(), pair.sigma.word_one_based(), pair.beta.clone()),
        (vec![1], vec![1], vec![0])
    );
    let a2 = ModelParams::new(rs("A2"), 3).unwrap();
    let pair = lemma310_construct(&a2, &Weight::zero(2), &Weight::zero(2)).unwrap();
    assert_eq!(
        (pair.omega, pair.sigma.length(), pair.beta),
        (vec![0, 0], 0, vec![1, 1])
    );
    let pair = lemma310_construct(&a2, &Weight::zero(2), &Weight::from_ints(&[1, 0])).unwrap();
    assert_eq!(
        (pair.omega, pair.sigma.word_one_based(), pair.beta),
        (vec![1, 0], vec![2, 1], vec![1, 1])
    );

    let lam = a1.lambda(vec![0], vec![0]).unwrap();
    let s1 = WeylElement::simple(a1.rs(), 0);
    assert!(lemma39_test(&a1, &s1, &[0], &Weight::zero(1), &lam).unwrap());
    assert!(!lemma39_test(&a1, &WeylElement::identity(1), &[0], &Weight::zero(1), &lam).unwrap());
}

#[test]
fn affine_examples() {
    let a1 = ModelParams::new(rs("A1"), 2).unwrap();
    let zero = Weight::zero(1);
    let y = y_alpha(&a1, &zero, &zero).unwrap();
    assert_eq!((y.sigma.word_one_based(), y.beta.clone()), (vec![1], vec![0]));
    let s1 = WeylElement::simple(a1.rs(), 0);
    let y = y_sigma(&a1, &s1, &zero, &zero).unwrap();
    assert_eq!((y.sigma.length(), y.beta), (0, vec![-2]));
    let lam = a1.lambda(vec![0], vec![0]).unwrap();
    let mu = mu_lambda(&a1, &lam).unwrap();
    assert_eq!((mu.classical, mu.level), (Weight::zero(1), int(0)));
    assert_eq!(
        affine_exponent(&a1, &WeylElement::identity(1), &zero, &lam).unwrap(),
        rat(1, 8)
    );
    assert_eq!(affine_exponent(&a1, &s1, &zero, &lam).unwrap(), rat(9, 8));
}

#[test]
fn parameter_examples() {
    let a1 = ModelParams::new(rs("A1"), 2).unwrap();
    assert_eq!(a1.lambda_set().len(), 4);
    assert!(a1.lambda_set().iter().all(|l| a1.narrow(&l.sp).unwrap()));
    let a2 = ModelParams::new(rs("A2"), 2).unwrap();
    let narrow: Vec<_> = a2
        .lambda_set()
        .into_iter()
        .filter(|l| a2.narrow(&l.sp).unwrap())
        .collect();
    assert_eq!(narrow.len(), 3);
    assert!(narrow.iter().all(|l| l.sp == [0, 0]));
    let e8 = ModelParams::new(rs("E8"), 31).unwrap();
    assert_eq!(e8.lambda_count(), 31u128.pow(8));
    assert_eq!(e8.central_charge(), e8.central_charge_alt());
}
