//! Subspace dimensions computed independently (sympy nullspaces over the
//! same catalog encodings) and frozen here.

use poisson_core::deformation::lie_k_derivation_space;
use poisson_core::{
    annihilator, assoc_first_order_space, bracket_preset, cocycle_space, combine, instantiate, lie_biderivation_space,
    lie_first_order_space, OperatorKind, Params, PoissonPair, Rational, SymmetryFilter,
};

use OperatorKind::*;
use SymmetryFilter::{None as All, Skew, Symmetric};

// Z2P skew sym lie1 assoc1 bider bider_sym bider_skew kder2 C2_skew C2 H2 L1 L2 H0
type Row = [usize; 15];

fn dims(p: &PoissonPair) -> Row {
    let a = combine(p);
    let cs = |k, f| cocycle_space(&a, k, f).unwrap().dim();
    let bd = |f| lie_biderivation_space(p, f).unwrap().dim();
    [
        cs(P2, All),
        cs(P2, Skew),
        cs(P2, Symmetric),
        lie_first_order_space(&a).unwrap().dim(),
        assoc_first_order_space(&a).unwrap().dim(),
        bd(All),
        bd(Symmetric),
        bd(Skew),
        lie_k_derivation_space(p, 2, All).unwrap().dim(),
        cs(C2, Skew),
        cs(C2, All),
        cs(H2, All),
        cs(L1, All),
        cs(L2, All),
        annihilator(&a).dim(),
    ]
}

fn with_l1_h0(mut row: Row, l1: usize, h0: usize) -> Row {
    row[12] = l1;
    row[14] = h0;
    row
}

#[test]
fn frozen_dimensions() {
    let a = |v: i64| Params::new().with("a", Rational::from_integer(v));
    let p13: Row = [9, 0, 9, 0, 9, 27, 18, 9, 27, 9, 27, 9, 0, 27, 0];
    let dim2: Row = [4, 0, 4, 0, 4, 8, 6, 2, 8, 2, 8, 4, 0, 8, 0];
    let cases: Vec<(&str, Params, Row)> = vec![
        ("P_1^2", Params::new(), dim2),
        ("P_2^2", Params::new(), with_l1_h0(dim2, 2, 0)),
        ("P_3^2", Params::new(), with_l1_h0(dim2, 4, 1)),
        ("P_4^2", Params::new(), with_l1_h0(dim2, 2, 1)),
        ("P_5^2", a(1), [3, 2, 1, 2, 1, 1, 1, 0, 2, 2, 4, 8, 8, 4, 0]),
        ("P_1^3", Params::new(), p13),
        ("P_2^3", Params::new(), p13),
        ("P_3^3", Params::new(), with_l1_h0(p13, 3, 0)),
        ("P_4^3", Params::new(), with_l1_h0(p13, 6, 0)),
        ("P_5^3", a(1), [7, 2, 2, 2, 2, 8, 5, 1, 8, 6, 15, 11, 12, 12, 0]),
        ("P_6^3", Params::new(), with_l1_h0(p13, 3, 1)),
        ("P_7^3", a(1), [8, 2, 3, 2, 3, 8, 5, 1, 8, 6, 15, 13, 12, 12, 0]),
        ("P_8^3", Params::new(), with_l1_h0(p13, 6, 1)),
        ("P_9^3", Params::new(), with_l1_h0(p13, 6, 1)),
        (
            "P_10^3",
            Params::new().with("a", Rational::from_integer(2)).with("b", Rational::from_integer(-1)),
            [8, 2, 3, 2, 3, 8, 5, 1, 8, 6, 15, 13, 15, 12, 1],
        ),
        ("P_11^3", Params::new(), with_l1_h0(p13, 9, 1)),
        (
            "P_12^3",
            Params::new().with_bracket(bracket_preset("sl2").unwrap()),
            [6, 6, 0, 6, 0, 0, 0, 0, 1, 6, 9, 27, 27, 0, 0],
        ),
        (
            "P_12^3",
            Params::new().with_bracket(bracket_preset("heisenberg").unwrap()),
            [13, 8, 5, 8, 5, 8, 5, 1, 8, 8, 17, 27, 27, 18, 1],
        ),
    ];
    for (name, params, expected) in cases {
        let p = instantiate(name, &params).unwrap();
        assert_eq!(dims(&p), expected, "{name}");
    }
}
