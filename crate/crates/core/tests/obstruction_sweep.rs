//! Second-order extension of every first-order deformation with
//! coefficients in {-1, 0, 1} over the cocycle basis, on every
//! two-dimensional catalog algebra.

use poisson_core::{
    combine, extend_jet, instantiate, DeformationKind, Extension, Jet, MultilinearMap, Params, Rational,
};

fn combinations(dim: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                [-1, 0, 1].into_iter().map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

fn sweep(name: &str, params: Params, kind: DeformationKind) -> (usize, usize) {
    let a = combine(&instantiate(name, &params).unwrap());
    let kernel = match extend_jet(&Jet::zero(a.clone()).unwrap(), kind).unwrap() {
        Extension::Solutions { kernel, .. } => kernel,
        Extension::Obstructed { .. } => unreachable!(),
    };
    let (mut tried, mut obstructed) = (0, 0);
    for coeffs in combinations(kernel.dim()) {
        let mut v = vec![Rational::zero(); 8];
        for (c, b) in coeffs.iter().zip(kernel.basis()) {
            for (x, y) in v.iter_mut().zip(b) {
                *x += Rational::from_integer(*c) * y;
            }
        }
        let jet = Jet::new(a.clone(), vec![MultilinearMap::new(2, 2, v).unwrap()]).unwrap();
        tried += 1;
        if matches!(extend_jet(&jet, kind).unwrap(), Extension::Obstructed { .. }) {
            obstructed += 1;
        }
    }
    (tried, obstructed)
}

#[test]
fn dimension_two_sweep() {
    use DeformationKind::*;
    let one = || Params::new().with("a", Rational::one());
    let zero = || Params::new().with("a", Rational::zero());
    // (entry, params, kind, grid points, obstructed)
    let expected = [
        ("P_1^2", Params::new(), General, 81, 0),
        ("P_1^2", Params::new(), Lie, 1, 0),
        ("P_1^2", Params::new(), Associative, 81, 0),
        ("P_2^2", Params::new(), General, 81, 0),
        ("P_2^2", Params::new(), Associative, 81, 0),
        ("P_3^2", Params::new(), General, 81, 0),
        ("P_3^2", Params::new(), Associative, 81, 0),
        ("P_4^2", Params::new(), General, 81, 0),
        ("P_4^2", Params::new(), Associative, 81, 0),
        ("P_5^2", one(), General, 27, 18),
        ("P_5^2", one(), Lie, 9, 0),
        ("P_5^2", one(), Associative, 3, 2),
        ("P_5^2", zero(), General, 6561, 6464),
        ("P_5^2", zero(), Lie, 9, 0),
        ("P_5^2", zero(), Associative, 729, 640),
    ];
    for (name, params, kind, grid, obstructed) in expected {
        let got = sweep(name, params.clone(), kind);
        assert_eq!(got, (grid, obstructed), "{name} {:?} {kind:?}", params.values);
    }
}
