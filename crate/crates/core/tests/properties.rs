//! Property tests for the invariants each module promises.

use lietriple::catalog::{random_lie_instance, random_small_lie, random_verified_instance};
use lietriple::deform::{attempt_extension, obstruction, obstruction_is_closed, Deformation, ExtensionSign};
use lietriple::exactlin::{format_rational, parse_rational, rat, Matrix, Rational};
use lietriple::linfty::{cubic_l3, mc_residual, quartic_l4, McContext};
use lietriple::lts::{
    check_lie_two_cocycle, check_lts, check_rep, lie_to_lts, lie_two_cocycle_to_lts_three_cocycle, regular_rep, twisted_semidirect_unchecked,
    LieAlg, LieRep,
};
use lietriple::mlin::{cochain_space_basis, constraint_residual, Tuples};
use lietriple::ns::{adjacent_lie, induced_ns_from_gen_reynolds, ns_lie_from_lie_gen_reynolds, ns_lie_to_ns_lts, subadjacent};
use lietriple::reynolds::{
    check_generalized_reynolds, descended_bracket_tensor, embed_weighted, graph_subalgebra_check, induced_bracket, induced_bracket_tensor,
    induced_rep_theta_t, lambda_t, lie_to_lts_operator, partial_t, GenReynolds, ReynoldsCochain, ReynoldsComplex, WeightedReynolds,
};
use lietriple::yamaguti::{check_three_cocycle, delta, delta1, YamagutiComplex};
use lietriple::{Budget, MultiMap, Vector};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(rational(), rows * cols).prop_map(move |v| {
        let rows_v: Vec<Vector> = v.chunks(cols).map(<[Rational]>::to_vec).collect();
        Matrix::from_rows(rows_v).expect("rectangular")
    })
}

fn instance(seed: u64, max_dim: usize) -> GenReynolds {
    random_verified_instance(seed, max_dim).expect("seeded instance").g
}

fn small_lie(seed: u64) -> LieAlg {
    random_small_lie(&mut ChaCha8Rng::seed_from_u64(seed)).1
}

fn fill(m: &Matrix, values: &[Rational]) -> Matrix {
    let mut out = m.clone();
    let cols = m.cols();
    for (k, v) in values.iter().enumerate().take(m.rows() * cols) {
        out.set(k / cols, k % cols, v.clone());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn kernel_rank_and_solve(a in matrix(3, 5), x in prop::collection::vec(rational(), 5)) {
        let kernel = a.kernel_basis();
        for v in &kernel {
            prop_assert!(a.apply(v).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(a.rank() + kernel.len(), a.cols());
        let b = a.apply(&x);
        let solution = a.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(a.apply(&solution), b);
        prop_assert_eq!(a.rref(), a.clone().rref());
    }

    #[test]
    fn rationals_are_canonical(n in -50i64..50, d in 1i64..20) {
        let r = rat(n, d);
        prop_assert!(r.denom() >= &num_bigint::BigInt::one());
        let reduced = Rational::new(r.numer().clone(), r.denom().clone());
        prop_assert!(reduced.numer() == r.numer() && reduced.denom() == r.denom());
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn cochain_basis_satisfies_constraints(dim in 1usize..=3, out in 1usize..=2, level in 0usize..=1) {
        let basis = cochain_space_basis(dim, out, level, Budget::default()).unwrap();
        for b in basis.elements() {
            prop_assert!(constraint_residual(&b, level).unwrap().satisfied);
        }
    }

    #[test]
    fn evaluation_is_multilinear(seed in 0u64..64, a in prop::collection::vec(rational(), 9), s in rational()) {
        let l = lie_to_lts(&small_lie(seed)).unwrap();
        let d = l.dim();
        let (x, y, z) = (&a[..d], &a[3..3 + d], &a[6..6 + d]);
        let combo: Vector = x.iter().zip(y).map(|(p, q)| p * &s + q).collect();
        let lhs = l.tensor().eval(&[&combo, y, z]).unwrap();
        let rhs: Vector = l.tensor().eval(&[x, y, z]).unwrap().iter().zip(l.tensor().eval(&[y, y, z]).unwrap()).map(|(p, q)| p * &s + q).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_algebras_give_triple_systems(seed in any::<u64>()) {
        let l = lie_to_lts(&small_lie(seed)).unwrap();
        prop_assert!(check_lts(&l).passed());
        let d = l.dim();
        let e = |i: usize| lietriple::exactlin::unit_vector(d, i);
        // z ↦ [x,y,z] is a derivation of the bracket.
        for t in Tuples::new(5, d) {
            let (x, y) = (e(t[0]), e(t[1]));
            let inner = l.bracket(&e(t[2]), &e(t[3]), &e(t[4]));
            let lhs = l.bracket(&x, &y, &inner);
            let mut rhs = l.bracket(&l.bracket(&x, &y, &e(t[2])), &e(t[3]), &e(t[4]));
            for (acc, v) in rhs.iter_mut().zip(l.bracket(&e(t[2]), &l.bracket(&x, &y, &e(t[3])), &e(t[4]))) {
                *acc += v;
            }
            for (acc, v) in rhs.iter_mut().zip(l.bracket(&e(t[2]), &e(t[3]), &l.bracket(&x, &y, &e(t[4])))) {
                *acc += v;
            }
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn semidirect_restrictions(seed in 0u64..256) {
        let g = instance(seed, 3);
        let big = twisted_semidirect_unchecked(&g.lts, &g.rep, &g.h);
        let (dl, dm) = (g.dim_l(), g.dim_m());
        for t in Tuples::new(3, dm) {
            let shifted: Vec<usize> = t.iter().map(|i| i + dl).collect();
            prop_assert!(big.tensor().value(&shifted).iter().all(Zero::is_zero));
        }
        for t in Tuples::new(3, dl) {
            prop_assert_eq!(&big.tensor().value(&t)[..dl], g.lts.tensor().value(&t));
        }
    }

    #[test]
    fn coboundary_squares_to_zero(seed in 0u64..256) {
        let g = instance(seed, 2);
        let c = YamagutiComplex::new(&g.lts, &g.rep, Budget::default()).unwrap();
        for level in 0..2 {
            let first = c.coboundary_matrix(level).unwrap().mul(&c.cochain_basis_matrix(level).unwrap()).unwrap();
            prop_assert!(c.coboundary_matrix(level + 1).unwrap().mul(&first).unwrap().is_zero());
        }
    }

    #[test]
    fn generic_and_hand_coded_coboundaries_agree(seed in 0u64..256, values in prop::collection::vec(rational(), 9)) {
        let g = instance(seed, 3);
        let phi = fill(&Matrix::zeros(g.dim_m(), g.dim_l()), &values);
        let f = MultiMap::from_matrix(&phi);
        prop_assert_eq!(delta(&g.lts, &g.rep, &f).unwrap(), delta1(&g.lts, &g.rep, &f).unwrap());
    }

    #[test]
    fn lie_two_cocycles_give_three_cocycles(seed in 0u64..256, values in prop::collection::vec(rational(), 9)) {
        let lie = small_lie(seed);
        let rho = LieRep::adjoint(&lie);
        let d = lie.dim();
        let f = fill(&Matrix::zeros(d, d), &values);
        // φ = d f, a Lie 2-coboundary.
        let phi = MultiMap::from_fn(2, d, d, |t| {
            let (x, y) = (lietriple::exactlin::unit_vector(d, t[0]), lietriple::exactlin::unit_vector(d, t[1]));
            let mut v = rho.rho(&x, &f.apply(&y));
            for (acc, s) in v.iter_mut().zip(rho.rho(&y, &f.apply(&x))) {
                *acc -= s;
            }
            for (acc, s) in v.iter_mut().zip(f.apply(&lie.bracket(&x, &y))) {
                *acc -= s;
            }
            v
        });
        prop_assert!(check_lie_two_cocycle(&lie, &rho, &phi).unwrap().passed());
        let omega = lie_two_cocycle_to_lts_three_cocycle(&lie, &rho, &phi).unwrap();
        let l = lie_to_lts(&lie).unwrap();
        let m = lietriple::lts::lie_rep_to_lts_rep(&lie, &rho).unwrap();
        prop_assert!(check_three_cocycle(&l, &m, &omega).unwrap().passed());
    }

    #[test]
    fn characterizations_agree_under_perturbation(seed in 0u64..256, values in prop::collection::vec(rational(), 9), scale in 0i64..=1) {
        let g = instance(seed, 3);
        let p = fill(&Matrix::zeros(g.dim_l(), g.dim_m()), &values).scale(&rat(scale, 1));
        let h = g.with_t(g.t.add(&p).unwrap()).unwrap();
        let identity = check_generalized_reynolds(&h).unwrap().passed();
        prop_assert_eq!(identity, graph_subalgebra_check(&h).passed());
        let ctx = McContext::new(&h.lts, &h.rep, &h.h).unwrap();
        prop_assert_eq!(identity, mc_residual(&ctx, &h.t).unwrap().is_zero());
    }

    #[test]
    fn brackets_are_homogeneous(seed in 0u64..256, c in rational(), values in prop::collection::vec(rational(), 9)) {
        let g = instance(seed, 3);
        let ctx = McContext::new(&g.lts, &g.rep, &g.h).unwrap();
        let t = fill(&Matrix::zeros(g.dim_l(), g.dim_m()), &values);
        let c3 = &c * &c * &c;
        prop_assert_eq!(cubic_l3(&ctx, &t.scale(&c)).unwrap(), cubic_l3(&ctx, &t).unwrap().scale(&c3));
        prop_assert_eq!(quartic_l4(&ctx, &t.scale(&c)).unwrap(), quartic_l4(&ctx, &t).unwrap().scale(&(&c3 * &c)));
    }

    #[test]
    fn induced_structures_pass(seed in 0u64..256) {
        let g = instance(seed, 3);
        let l = induced_bracket(&g).unwrap();
        prop_assert!(check_lts(&l).passed());
        prop_assert!(check_rep(&l, &induced_rep_theta_t(&g).unwrap()).unwrap().passed());
        let ns = induced_ns_from_gen_reynolds(&g).unwrap();
        let (sub_lts, _) = subadjacent(&ns).unwrap();
        prop_assert_eq!(sub_lts.tensor(), &induced_bracket_tensor(&g));
    }

    #[test]
    fn differential_squares_to_zero(seed in 0u64..256, values in prop::collection::vec(rational(), 9)) {
        let g = instance(seed, 2);
        let complex = ReynoldsComplex::new(&g, Budget::default());
        for level in 0..2 {
            for c in complex.basis(level).unwrap() {
                prop_assert!(lambda_t(&g, &lambda_t(&g, &c).unwrap()).unwrap().is_zero());
            }
        }
        let chi = fill(&Matrix::zeros(g.dim_l(), g.dim_l()), &values);
        let image = ReynoldsCochain::Map(partial_t(&g, &chi).unwrap());
        prop_assert!(lambda_t(&g, &image).unwrap().is_zero());
    }

    #[test]
    fn lie_level_operators_lift(seed in any::<u64>()) {
        let lie = random_lie_instance(seed).unwrap();
        let lifted = lie_to_lts_operator(&lie.g).unwrap();
        prop_assert!(check_generalized_reynolds(&lifted).unwrap().passed());
        let a = ns_lie_from_lie_gen_reynolds(&lie.g).unwrap();
        let n = ns_lie_to_ns_lts(&a).unwrap();
        let expected = lie_to_lts(&adjacent_lie(&a).unwrap()).unwrap();
        prop_assert_eq!(subadjacent(&n).unwrap().0, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn obstructions_of_first_order_cocycles(seed in 0u64..128) {
        let g = instance(seed, 2);
        let complex = ReynoldsComplex::new(&g, Budget::default());
        let basis = complex.basis(1).unwrap();
        let cols: Vec<Vector> = basis.iter().map(|b| lambda_t(&g, b).unwrap().as_map().unwrap().coeffs().to_vec()).collect();
        let a = Matrix::from_columns(cols[0].len(), &cols).unwrap();
        for v in a.kernel_basis() {
            let mut f = MultiMap::zero(1, g.dim_m(), g.dim_l());
            for (c, b) in v.iter().zip(&basis) {
                f.add_scaled(c, b.as_map().unwrap()).unwrap();
            }
            let d = Deformation::new(g.clone(), vec![f.to_matrix()]).unwrap();
            prop_assert!(obstruction_is_closed(&d).unwrap());
            let obs = obstruction(&d).unwrap();
            let class_trivial = complex.preimage(&obs).unwrap().is_some();
            let attempt = attempt_extension(&d, ExtensionSign::Minus, Budget::default()).unwrap();
            prop_assert_eq!(class_trivial, attempt.solution.is_some());
            prop_assert_eq!(attempt.solution.is_some(), attempt.reverified);
        }
    }

    #[test]
    fn descended_and_induced_brackets_agree(n in 1usize..=4, lambda in rational().prop_filter("nonzero", |r| !r.is_zero())) {
        let lie = lietriple::catalog::witt_lie(n);
        let l = lie_to_lts(&lie).unwrap();
        let r = lietriple::catalog::witt_operator(n, &lambda);
        let op = WeightedReynolds::on_lts(l.clone(), r, &lambda * rat(2, 1)).unwrap();
        prop_assert_eq!(descended_bracket_tensor(&op).unwrap(), induced_bracket_tensor(&embed_weighted(&op).unwrap()));
        prop_assert!(check_rep(&l, &regular_rep(&l).unwrap()).unwrap().passed());
    }
}
