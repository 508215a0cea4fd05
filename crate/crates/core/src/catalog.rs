//! Example structures: the truncated Witt algebra, Block-type triple
//! systems and seeded random instances that pass every check.
//!
//! Truncation is a quotient: products landing above the top degree are
//! set to zero. All gradings are non-negative, so the discarded span is an
//! ideal.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{int, rat, zero_vector, Matrix, Rational};
use crate::lts::{check_lie, check_lts, check_rep, lie_rep_to_lts_rep_unchecked, lie_to_lts_unchecked, regular_rep_unchecked, LieAlg, LieRep, Lts, Rep};
use crate::mlin::MultiMap;
use crate::report::Report;
use crate::reynolds::{
    check_generalized_reynolds, check_lie_generalized_reynolds, check_weighted_reynolds, embed_weighted, inverse_construction,
    GenReynolds, LieGenReynolds, WeightedReynolds,
};

fn require(report: Report, what: &'static str) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::postcondition(what, report))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittSpec {
    pub max_degree: usize,
    pub lambda: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittInstance {
    pub lie: LieAlg,
    pub lts: Lts,
    /// Weight `λ` on the Lie algebra.
    pub lie_op: WeightedReynolds,
    /// Weight `2λ` on the triple system.
    pub lts_op: WeightedReynolds,
}

pub fn witt_labels(max_degree: usize) -> Vec<String> {
    (0..=max_degree).map(|m| format!("l{m}")).collect()
}

/// `[l_m, l_n] = (m−n) l_{m+n}` on `l_0 … l_N`.
pub fn witt_lie(max_degree: usize) -> LieAlg {
    let d = max_degree + 1;
    LieAlg::new(MultiMap::from_fn(2, d, d, |t| {
        let mut v = zero_vector(d);
        if t[0] + t[1] < d {
            v[t[0] + t[1]] = int(t[0] as i64 - t[1] as i64);
        }
        v
    }))
    .expect("bilinear")
}

/// `R(l_m) = −1/(λ(m+1)) l_m`.
pub fn witt_operator(max_degree: usize, lambda: &Rational) -> Matrix {
    let entries: Vec<Rational> = (0..=max_degree).map(|m| -(lambda * int(m as i64 + 1)).recip()).collect();
    Matrix::diagonal(&entries)
}

pub fn witt(spec: &WittSpec) -> Result<WittInstance> {
    if spec.lambda.is_zero() {
        return Err(Error::Invalid("the Witt operator needs a nonzero weight".into()));
    }
    let lie = witt_lie(spec.max_degree);
    require(check_lie(&lie), "truncated Witt Lie algebra")?;
    let lts = lie_to_lts_unchecked(&lie);
    require(check_lts(&lts), "truncated Witt triple system")?;
    let r = witt_operator(spec.max_degree, &spec.lambda);
    let lie_op = WeightedReynolds::on_lie(lie.clone(), r.clone(), spec.lambda.clone())?;
    require(check_weighted_reynolds(&lie_op)?, "Witt operator on the Lie algebra")?;
    let lts_op = WeightedReynolds::on_lts(lts.clone(), r, &spec.lambda * int(2))?;
    require(check_weighted_reynolds(&lts_op)?, "Witt operator on the triple system")?;
    Ok(WittInstance { lie, lts, lie_op, lts_op })
}

/// Sign convention for the closed form of the square product on Witt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WittSquareForm {
    /// `2(m−n)(m+n−p) / (λ²(m+1)(n+1)(p+1))`, as usually quoted.
    Printed,
    /// `−2(m−n)(m+n−p) / (λ²(m+1)(n+1)(p+1))`: each `R` contributes a minus.
    Computed,
}

/// `{l_m,l_n,l_p} = (m−n)(m+n−p) / (λ²(n+1)(p+1)) l_{m+n+p}` and the square
/// product `2λ[Rl_m,Rl_n,Rl_p]` in the chosen form.
pub fn witt_ns_closed_forms(spec: &WittSpec, form: WittSquareForm) -> (MultiMap, MultiMap) {
    let d = spec.max_degree + 1;
    let l2 = &spec.lambda * &spec.lambda;
    let sign = match form {
        WittSquareForm::Printed => int(2),
        WittSquareForm::Computed => int(-2),
    };
    let coeff = |t: &[usize]| -> Option<(usize, Rational)> {
        let (m, n, p) = (t[0] as i64, t[1] as i64, t[2] as i64);
        let target = t[0] + t[1] + t[2];
        (target < d).then(|| (target, int((m - n) * (m + n - p))))
    };
    let curly = MultiMap::from_fn(3, d, d, |t| {
        let mut v = zero_vector(d);
        if let Some((k, c)) = coeff(t) {
            v[k] = c / (&l2 * int((t[1] as i64 + 1) * (t[2] as i64 + 1)));
        }
        v
    });
    let square = MultiMap::from_fn(3, d, d, |t| {
        let mut v = zero_vector(d);
        if let Some((k, c)) = coeff(t) {
            v[k] = c * &sign / (&l2 * int((t[0] as i64 + 1) * (t[1] as i64 + 1) * (t[2] as i64 + 1)));
        }
        v
    });
    (curly, square)
}

/// Which structure constants to use for the Block-type triple system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockCoefficient {
    /// `(n(i+q) − m(j+q))(p(i+j+q) − (m+n)(p+q))`.
    Printed,
    /// `(n(i+q) − m(j+q))(p(i+j+q) − (m+n)(k+q))`, the triple system
    /// `[[x,y],z]` of the Block Lie algebra.
    LieDerived,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSpec {
    pub q: Rational,
    pub max_total_degree: usize,
    pub lambda: Rational,
    pub coefficient: BlockCoefficient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockInstance {
    /// `(m, i)` for each basis element `L_{m,i}`.
    pub basis: Vec<(usize, usize)>,
    pub lts: Lts,
    /// `R(L_{m,i}) = −1/(λ(m+i+1)) L_{m,i}`, with weight `2λ`.
    pub op: WeightedReynolds,
}

/// `L_{m,i}` with `m + i ≤ N`, ordered by `(m+i, m)`.
pub fn block_basis(max_total_degree: usize) -> Vec<(usize, usize)> {
    let mut basis: Vec<(usize, usize)> = (0..=max_total_degree).flat_map(|t| (0..=t).map(move |m| (m, t - m))).collect();
    basis.sort_by_key(|&(m, i)| (m + i, m));
    basis
}

pub fn block_labels(max_total_degree: usize) -> Vec<String> {
    block_basis(max_total_degree).iter().map(|(m, i)| format!("L{m}_{i}")).collect()
}

fn block_index(basis: &[(usize, usize)], target: (usize, usize)) -> Option<usize> {
    basis.iter().position(|&b| b == target)
}

fn block_tensor(basis: &[(usize, usize)], coeff: impl Fn((i64, i64), (i64, i64), (i64, i64)) -> Rational) -> MultiMap {
    let d = basis.len();
    MultiMap::from_fn(3, d, d, |t| {
        let (a, b, c) = (basis[t[0]], basis[t[1]], basis[t[2]]);
        let mut v = zero_vector(d);
        if let Some(k) = block_index(basis, (a.0 + b.0 + c.0, a.1 + b.1 + c.1)) {
            let sig = |p: (usize, usize)| (p.0 as i64, p.1 as i64);
            v[k] = coeff(sig(a), sig(b), sig(c));
        }
        v
    })
}

/// The triple system and operator without any check.
pub fn block_unchecked(spec: &BlockSpec) -> Result<BlockInstance> {
    if spec.lambda.is_zero() {
        return Err(Error::Invalid("the Block operator needs a nonzero λ".into()));
    }
    let basis = block_basis(spec.max_total_degree);
    let q = spec.q.clone();
    let kind = spec.coefficient;
    let tensor = block_tensor(&basis, |(m, i), (n, j), (p, k)| {
        let first = int(n) * (int(i) + &q) - int(m) * (int(j) + &q);
        let last = match kind {
            BlockCoefficient::Printed => int(p),
            BlockCoefficient::LieDerived => int(k),
        };
        let second = int(p) * (int(i + j) + &q) - int(m + n) * (last + &q);
        first * second
    });
    let lts = Lts::new(tensor)?;
    let r = Matrix::diagonal(&basis.iter().map(|&(m, i)| -(&spec.lambda * int((m + i + 1) as i64)).recip()).collect::<Vec<_>>());
    let op = WeightedReynolds::on_lts(lts.clone(), r, &spec.lambda * int(2))?;
    Ok(BlockInstance { basis, lts, op })
}

/// Checked: fails when the coefficient does not give a triple system.
pub fn block(spec: &BlockSpec) -> Result<BlockInstance> {
    let inst = block_unchecked(spec)?;
    require(check_lts(&inst.lts), "Block-type triple system")?;
    require(check_weighted_reynolds(&inst.op)?, "Block operator")?;
    Ok(inst)
}

/// `{L_{m,i},L_{n,j},L_{p,k}} =
///  (n(i+q) − m(j+q))(p(i+j+q) − (m+n)(p+q)) / (λ²(n+j+1)(p+k+1)) L_{m+n+p,i+j+k}`.
pub fn block_ns_closed_form(spec: &BlockSpec) -> MultiMap {
    let basis = block_basis(spec.max_total_degree);
    let q = spec.q.clone();
    let l2 = &spec.lambda * &spec.lambda;
    block_tensor(&basis, |(m, i), (n, j), (p, k)| {
        let first = int(n) * (int(i) + &q) - int(m) * (int(j) + &q);
        let second = int(p) * (int(i + j) + &q) - int(m + n) * (int(p) + &q);
        first * second / (&l2 * int((n + j + 1) * (p + k + 1)))
    })
}

/// A seeded instance that passes every check, with a note on how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomInstance {
    pub construction: String,
    pub g: GenReynolds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomLieInstance {
    pub construction: String,
    pub g: LieGenReynolds,
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| small_rational(rng)).collect()).collect();
        let m = Matrix::from_rows(rows).expect("rectangular");
        if n == 0 || m.inverse().is_some() {
            return m;
        }
    }
}

fn lie_from_table(d: usize, entries: &[(usize, usize, usize, Rational)]) -> LieAlg {
    let mut t = MultiMap::zero(2, d, d);
    for (i, j, k, c) in entries {
        t.set(&[*i, *j], *k, c.clone());
        t.set(&[*j, *i], *k, -c.clone());
    }
    LieAlg::new(t).expect("bilinear")
}

/// A Lie algebra of dimension at most 3 from a fixed list of families,
/// written in a random basis.
pub fn random_small_lie(rng: &mut ChaCha8Rng) -> (String, LieAlg) {
    let c = small_rational(rng);
    let families: Vec<(String, LieAlg)> = vec![
        ("abelian 2".into(), LieAlg::abelian(2)),
        ("affine line".into(), lie_from_table(2, &[(0, 1, 1, int(1))])),
        ("Heisenberg".into(), lie_from_table(3, &[(0, 1, 2, int(1))])),
        ("sl2".into(), lie_from_table(3, &[(0, 1, 1, int(2)), (0, 2, 2, int(-2)), (1, 2, 0, int(1))])),
        ("so3".into(), lie_from_table(3, &[(0, 1, 2, int(1)), (1, 2, 0, int(1)), (2, 0, 1, int(1))])),
        (format!("solvable r3({c})"), lie_from_table(3, &[(0, 1, 1, int(1)), (0, 2, 2, c.clone())])),
        ("Witt l0..l2".into(), witt_lie(2)),
    ];
    let (name, g) = families.choose(rng).expect("nonempty").clone();
    let p = random_invertible(rng, g.dim());
    let pinv = p.inverse().expect("invertible");
    let d = g.dim();
    let pc: Vec<Vec<Rational>> = (0..d).map(|i| p.column(i)).collect();
    let changed = LieAlg::new(MultiMap::from_fn(2, d, d, |t| pinv.apply(&g.bracket(&pc[t[0]], &pc[t[1]])))).expect("bilinear");
    (name, changed)
}

/// `T = φ⁻¹` and `H = −d φ` for a random invertible `φ: L → M`, with `M`
/// the adjoint or a trivial module of the same dimension.
pub fn random_lie_instance(seed: u64) -> Result<RandomLieInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (name, lie) = random_small_lie(&mut rng);
    let d = lie.dim();
    let (rep_name, rho) = if rng.gen_bool(0.5) {
        ("adjoint", LieRep::adjoint(&lie))
    } else {
        ("trivial", LieRep::new(d, vec![Matrix::zeros(d, d); d])?)
    };
    let phi = random_invertible(&mut rng, d);
    let t = phi.inverse().expect("invertible");
    let pc: Vec<Vec<Rational>> = (0..d).map(|i| phi.column(i)).collect();
    // H(x,y) = −(ρ(x)φ(y) − ρ(y)φ(x) − φ([x,y]))
    let h = MultiMap::from_fn(2, d, d, |p| {
        let (x, y) = (p[0], p[1]);
        let mut v = rho.rho_matrix(y).apply(&pc[x]);
        crate::exactlin::sub_assign(&mut v, &rho.rho_matrix(x).apply(&pc[y]));
        let b = lie.tensor().value(&[x, y]).to_vec();
        crate::exactlin::add_assign(&mut v, &phi.apply(&b));
        v
    });
    let g = LieGenReynolds::new(lie, rho, h, t)?;
    require(check_lie_generalized_reynolds(&g)?, "random Lie-level operator")?;
    Ok(RandomLieInstance { construction: format!("{name}, {rep_name} module, T = φ^-1"), g })
}

/// A seeded generalized Reynolds operator on a triple system of dimension
/// at most `max_dim`, drawn from constructions that are valid by design
/// and then verified. Falls back to an abelian pair with `T = 0`.
pub fn random_verified_instance(seed: u64, max_dim: usize) -> Result<RandomInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let (name, lie) = random_small_lie(&mut rng);
        if lie.dim() > max_dim {
            continue;
        }
        let lts = lie_to_lts_unchecked(&lie);
        let d = lts.dim();
        let choice = rng.gen_range(0..3);
        let candidate = match choice {
            0 => {
                let rep = regular_rep_unchecked(&lts);
                let phi = random_invertible(&mut rng, d);
                (format!("{name}, regular module, T = φ^-1, H = −δφ"), inverse_construction(&lts, &rep, &phi)?)
            }
            1 => {
                let rep = lie_rep_to_lts_rep_unchecked(&LieRep::adjoint(&lie));
                let phi = random_invertible(&mut rng, d);
                (format!("{name}, adjoint-induced module, T = φ^-1, H = −δφ"), inverse_construction(&lts, &rep, &phi)?)
            }
            _ => {
                let rep = Rep::zero(d, d);
                let phi = random_invertible(&mut rng, d);
                (format!("{name}, zero module, T = φ^-1, H = −δφ"), inverse_construction(&lts, &rep, &phi)?)
            }
        };
        if check_generalized_reynolds(&candidate.1)?.passed() {
            return Ok(RandomInstance { construction: candidate.0, g: candidate.1 });
        }
    }
    let d = max_dim.max(1);
    let g = GenReynolds::new(Lts::abelian(d), Rep::zero(d, d), MultiMap::zero(3, d, d), Matrix::zeros(d, d))?;
    Ok(RandomInstance { construction: "abelian fallback, T = 0".into(), g })
}

/// The Witt triple system with the weighted operator as a generalized
/// Reynolds operator (regular module, `H = 2λ[·,·,·]`).
pub fn witt_embedding(spec: &WittSpec) -> Result<GenReynolds> {
    let w = witt(spec)?;
    embed_weighted(&w.lts_op)
}

/// The Lie-level Witt operator as a generalized Reynolds operator (adjoint
/// module, `H = λ[·,·]`).
pub fn witt_lie_instance(spec: &WittSpec) -> Result<LieGenReynolds> {
    let w = witt(spec)?;
    let h = w.lie.tensor().scale(&spec.lambda);
    let g = LieGenReynolds::new(w.lie.clone(), LieRep::adjoint(&w.lie), h, w.lie_op.r.clone())?;
    require(check_lie_generalized_reynolds(&g)?, "Witt Lie-level operator")?;
    Ok(g)
}

/// Checks for the pair underlying a catalog generalized Reynolds operator.
pub fn regular_pair_checks(l: &Lts) -> Result<Report> {
    let rep = regular_rep_unchecked(l);
    let mut report = check_lts(l);
    report.absorb(check_rep(l, &rep)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize) -> WittSpec {
        WittSpec { max_degree: n, lambda: int(1) }
    }

    #[test]
    fn witt_small_cases() {
        let w = witt(&spec(0)).unwrap();
        assert!(w.lts.tensor().is_zero());
        assert_eq!(w.lie_op.r.get(0, 0), &int(-1));
        let w = witt(&spec(3)).unwrap();
        assert_eq!(w.lts.tensor().value(&[1, 2, 0]), &[int(0), int(0), int(0), int(-3)]);
        assert_eq!(w.lie_op.r.get(2, 2), &rat(-1, 3));
    }

    #[test]
    fn block_basis_and_spot_value() {
        assert_eq!(block_basis(2), vec![(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]);
        let s = BlockSpec { q: int(0), max_total_degree: 2, lambda: int(1), coefficient: BlockCoefficient::Printed };
        let b = block_unchecked(&s).unwrap();
        let i10 = b.basis.iter().position(|&x| x == (1, 0)).unwrap();
        let i01 = b.basis.iter().position(|&x| x == (0, 1)).unwrap();
        assert!(b.lts.tensor().value(&[i10, i01, i10]).iter().all(|c| c.is_zero()));
        assert!(block(&s).is_ok());
    }

    #[test]
    fn printed_block_fails_for_q_one_and_lie_derived_passes() {
        let printed = BlockSpec { q: int(1), max_total_degree: 2, lambda: int(1), coefficient: BlockCoefficient::Printed };
        assert!(!check_lts(&block_unchecked(&printed).unwrap().lts).passed());
        assert!(check_weighted_reynolds_unchecked_carrier(&printed));
        let derived = BlockSpec { coefficient: BlockCoefficient::LieDerived, ..printed };
        assert!(block(&derived).is_ok());
    }

    fn check_weighted_reynolds_unchecked_carrier(s: &BlockSpec) -> bool {
        crate::reynolds::weighted_reynolds_identity(&block_unchecked(s).unwrap().op).passed()
    }

    #[test]
    fn witt_square_product_carries_the_sign_of_r_cubed() {
        let s = spec(3);
        let ns = crate::ns::ns_from_weighted_reynolds(&witt(&s).unwrap().lts_op).unwrap();
        let (curly, computed) = witt_ns_closed_forms(&s, WittSquareForm::Computed);
        let (_, printed) = witt_ns_closed_forms(&s, WittSquareForm::Printed);
        assert_eq!(ns.curly(), &curly);
        assert_eq!(ns.square(), &computed);
        assert_eq!(printed, computed.scale(&int(-1)));
    }

    #[test]
    fn random_instances_are_deterministic_and_valid() {
        for seed in 0..6 {
            let a = random_verified_instance(seed, 3).unwrap();
            assert_eq!(a, random_verified_instance(seed, 3).unwrap());
            assert!(check_generalized_reynolds(&a.g).unwrap().passed());
            let l = random_lie_instance(seed).unwrap();
            assert_eq!(l, random_lie_instance(seed).unwrap());
        }
    }
}
