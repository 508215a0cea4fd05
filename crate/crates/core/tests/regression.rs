//! Frozen values from independent computations.

use lietriple::catalog::{block, block_unchecked, witt_embedding, BlockCoefficient, BlockSpec, WittSpec};
use lietriple::deform::{is_extendable, obstruction, Deformation, ExtensionSign};
use lietriple::exactlin::{int, rat, Matrix};
use lietriple::lts::{check_lts, Lts, Rep};
use lietriple::reynolds::ReynoldsComplex;
use lietriple::yamaguti::YamagutiComplex;
use lietriple::Budget;

fn witt3() -> lietriple::reynolds::GenReynolds {
    witt_embedding(&WittSpec { max_degree: 3, lambda: int(1) }).unwrap()
}

#[test]
fn witt_reynolds_cohomology() {
    let g = witt3();
    let c = ReynoldsComplex::new(&g, Budget::default());
    let dims: Vec<(usize, usize, usize)> =
        (0..3).map(|n| c.cohomology_dims(n).unwrap()).map(|d| (d.cocycles, d.coboundaries, d.cohomology)).collect();
    assert_eq!(dims, vec![(3, 0, 3), (5, 3, 2), (13, 11, 2)]);
}

#[test]
fn abelian_plane_with_trivial_line() {
    let l = Lts::abelian(2);
    let m = Rep::zero(2, 1);
    let c = YamagutiComplex::new(&l, &m, Budget::default()).unwrap();
    assert_eq!(c.cohomology_dims(0).unwrap().cohomology, 2);
    assert_eq!(c.cohomology_dims(1).unwrap().cohomology, 2);
}

#[test]
fn printed_block_coefficient_breaks_the_cyclic_identity() {
    let spec = |q: i64, n: usize, coefficient| BlockSpec { q: int(q), max_total_degree: n, lambda: int(1), coefficient };
    let breaks_cyclic = |s: BlockSpec| {
        let report = check_lts(&block_unchecked(&s).unwrap().lts);
        report.violations.iter().any(|v| v.check == "cyclic identity")
    };
    assert!(block(&spec(0, 3, BlockCoefficient::Printed)).is_ok());
    assert!(breaks_cyclic(spec(0, 4, BlockCoefficient::Printed)));
    assert!(breaks_cyclic(spec(1, 2, BlockCoefficient::Printed)));
    assert!(breaks_cyclic(spec(-2, 2, BlockCoefficient::Printed)));
    for q in [0, 1, -2] {
        assert!(block(&spec(q, 4, BlockCoefficient::LieDerived)).is_ok(), "q = {q}");
    }
}

#[test]
fn witt_first_order_deformation_extends_with_the_minus_sign() {
    let g = witt3();
    let mut t1 = Matrix::zeros(4, 4);
    t1.set(1, 1, rat(-9, 4));
    t1.set(2, 2, int(1));
    let d = Deformation::new(g, vec![t1]).unwrap();
    assert!(!obstruction(&d).unwrap().is_zero());
    let e = is_extendable(&d, Budget::default()).unwrap().expect("class vanishes");
    assert_eq!(e.sign, ExtensionSign::Minus);
    assert_eq!(e.next.get(1, 1), &rat(-135, 8));
}
