use poisson_core::deformation::is_lie_biderivation;
use poisson_core::{
    annihilator, bracket_preset, combine, hochschild_delta, idempotent_central_check, instantiate, is_lie_k_derivation,
    kernel_basis, lie_biderivation_space, list_entries, ph_cochain_space, ph_delta_check, split, verify,
    CochainSymmetry, Matrix, MultilinearMap, Params, PoissonPair, Rational, SymmetryFilter,
};
use proptest::prelude::*;

fn catalog() -> Vec<(String, PoissonPair)> {
    let mut out: Vec<(String, PoissonPair)> = list_entries()
        .into_iter()
        .map(|s| (s.name.to_string(), instantiate(s.name, &Params::new()).unwrap()))
        .collect();
    for name in ["P_5^2", "P_5^3", "P_7^3"] {
        let p = instantiate(name, &Params::new().with("a", Rational::zero())).unwrap();
        out.push((format!("{name}(a=0)"), p));
    }
    let heis = Params::new().with_bracket(bracket_preset("heisenberg").unwrap());
    out.push(("P_12^3(heisenberg)".into(), instantiate("P_12^3", &heis).unwrap()));
    out
}

fn as_map(arity: usize, dim: usize, v: &[Rational]) -> MultilinearMap {
    MultilinearMap::new(arity, dim, v.to_vec()).unwrap()
}

fn bilinear(n: usize) -> impl Strategy<Value = MultilinearMap> {
    proptest::collection::vec(-4i64..=4, n * n * n)
        .prop_map(move |v| as_map(2, n, &v.into_iter().map(Rational::from_integer).collect::<Vec<_>>()))
}

fn any_pair() -> impl Strategy<Value = PoissonPair> {
    (2usize..=4).prop_flat_map(|n| (bilinear(n), bilinear(n))).prop_map(|(x, y)| {
        let (s, _) = poisson_core::sym_skew_parts(&x).unwrap();
        let (_, k) = poisson_core::sym_skew_parts(&y).unwrap();
        PoissonPair::new(s, k).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn split_and_combine_are_inverse(p in any_pair()) {
        let a = combine(&p);
        prop_assert_eq!(&split(&a), &p);
        prop_assert_eq!(combine(&split(&a)), a);
    }
}

fn random_matrix(rows: usize, cols: usize, rank_cap: usize, seed: &[i64]) -> Matrix {
    // product of a rows×r and an r×cols integer matrix has rank at most r
    let r = rank_cap.max(1);
    let g = |i: usize, j: usize, s: i64| ((i as i64 * 31 + j as i64 * 17 + s) % 7) - 3;
    let left: Vec<Vec<i64>> = (0..rows).map(|i| (0..r).map(|k| g(i, k, seed[0])).collect()).collect();
    let right: Vec<Vec<i64>> = (0..r).map(|k| (0..cols).map(|j| g(k, j, seed[1])).collect()).collect();
    let rows_v: Vec<Vec<i64>> =
        (0..rows).map(|i| (0..cols).map(|j| (0..r).map(|k| left[i][k] * right[k][j]).sum()).collect()).collect();
    Matrix::from_rows(&rows_v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn rank_nullity_up_to_100(rows in 1usize..=100, cols in 1usize..=100, cap in 1usize..=100, s0 in 0i64..50, s1 in 0i64..50) {
        let m = random_matrix(rows, cols, cap, &[s0, s1]);
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.dim(), cols);
        for v in k.basis() {
            prop_assert!(m.mul_vector(v).unwrap().iter().all(Rational::is_zero));
        }
    }
}

#[test]
fn rank_nullity_full_size() {
    let m = random_matrix(100, 100, 60, &[3, 11]);
    let k = kernel_basis(&m);
    assert_eq!(m.rank() + k.dim(), 100);
    assert!(k.dim() >= 40);
}

#[test]
fn annihilator_vectors_annihilate() {
    for (name, p) in catalog() {
        let a = combine(&p);
        let n = a.dim();
        for x in annihilator(&a).basis() {
            for j in 0..n {
                let e = poisson_core::multilinear::unit(n, j);
                assert!(a.multiply(x, &e).unwrap().iter().all(Rational::is_zero), "{name}");
                assert!(a.multiply(&e, x).unwrap().iter().all(Rational::is_zero), "{name}");
            }
        }
    }
}

#[test]
fn basis_idempotents_are_central() {
    for (name, p) in catalog() {
        assert!(verify(&p).all_hold(), "{name}");
        for i in 0..p.dim() {
            let e = poisson_core::multilinear::unit(p.dim(), i);
            if p.bullet().apply(&[&e, &e]).unwrap() == e {
                assert!(idempotent_central_check(&p, &e).unwrap(), "{name} e{}", i + 1);
            }
        }
    }
}

#[test]
fn hochschild_coboundary_of_biderivation_is_a_three_derivation() {
    use poisson_core::deformation::lie_k_derivation_space;
    for (name, p) in catalog() {
        let n = p.dim();
        for f in [SymmetryFilter::Symmetric, SymmetryFilter::Skew] {
            for v in lie_biderivation_space(&p, f).unwrap().basis() {
                let phi = as_map(2, n, v);
                assert!(is_lie_biderivation(&p, &phi).unwrap());
                let image = hochschild_delta(&p, &phi).unwrap();
                assert!(is_lie_k_derivation(&p, &image).unwrap(), "{name} {f:?}");
            }
        }
        for v in lie_k_derivation_space(&p, 2, SymmetryFilter::None).unwrap().basis() {
            let image = hochschild_delta(&p, &as_map(2, n, v)).unwrap();
            assert!(is_lie_k_derivation(&p, &image).unwrap(), "{name}");
        }
    }
}

#[test]
fn chain_identity_fails_for_mixed_biderivations() {
    // neither symmetric nor skew: the biderivation condition alone is too weak
    let p = instantiate("P_5^3", &Params::new()).unwrap();
    let failing = lie_biderivation_space(&p, SymmetryFilter::None)
        .unwrap()
        .basis()
        .iter()
        .filter(|v| {
            let image = hochschild_delta(&p, &as_map(2, 3, v)).unwrap();
            !is_lie_k_derivation(&p, &image).unwrap()
        })
        .count();
    assert!(failing > 0);
}

#[test]
fn poisson_hochschild_complex_is_closed() {
    for (name, p) in catalog() {
        let n = p.dim();
        let next = ph_cochain_space(&p, 3, CochainSymmetry::Alternator).unwrap();
        for v in ph_cochain_space(&p, 2, CochainSymmetry::Alternator).unwrap().basis() {
            let r = ph_delta_check(&p, &as_map(2, n, v)).unwrap();
            assert!(next.contains(r.image.coordinates()).unwrap(), "{name}");
        }
    }
}

#[test]
fn full_symmetry_is_stricter_for_trilinear_cochains() {
    let p = PoissonPair::zero(2);
    let v = ph_cochain_space(&p, 3, CochainSymmetry::Alternator).unwrap().dim();
    let f = ph_cochain_space(&p, 3, CochainSymmetry::Full).unwrap().dim();
    // with two basis vectors every triple repeats an index, so the alternator
    // condition is empty; full symmetry leaves 4 multisets per output
    assert_eq!((v, f), (16, 8));
    let k2 = ph_cochain_space(&p, 2, CochainSymmetry::Alternator).unwrap();
    assert_eq!(k2, ph_cochain_space(&p, 2, CochainSymmetry::Full).unwrap());
}
