//! Maurer–Cartan description of generalized Reynolds operators.
//!
//! Degree-0 elements are maps `T: M → L`. The two nonzero brackets on
//! them have closed forms on the diagonal,
//!
//! ```text
//! l3(T,T,T)(u,v,w)   = 6([Tu,Tv,Tw] − T(θ(Tv,Tw)u − θ(Tu,Tw)v + D(Tu,Tv)w))
//! l4(T,T,T,T)(u,v,w) = −24 T(H(Tu,Tv,Tw))
//! ```
//!
//! and mixed arguments are recovered by polarization over ℚ.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{add_assign, int, rat, sub, sub_assign, unit_vector, Matrix, Rational, Vector};
use crate::lts::{check_lts, check_rep, Lts, Rep};
use crate::mlin::MultiMap;
use crate::report::Report;
use crate::yamaguti;

/// A triple system, a representation and a 3-cocycle, shared by all
/// degree-0 elements.
#[derive(Debug, Clone, Copy)]
pub struct McContext<'a> {
    pub lts: &'a Lts,
    pub rep: &'a Rep,
    pub h: &'a MultiMap,
}

impl<'a> McContext<'a> {
    /// Verifies the triple system, the representation and the cocycle.
    pub fn new(lts: &'a Lts, rep: &'a Rep, h: &'a MultiMap) -> Result<Self> {
        let ctx = Self::unchecked(lts, rep, h)?;
        let r = check_lts(lts);
        if !r.passed() {
            return Err(Error::precondition("L is not a Lie triple system", r));
        }
        let r = check_rep(lts, rep)?;
        if !r.passed() {
            return Err(Error::precondition("M is not a representation", r));
        }
        let r = yamaguti::check_three_cocycle(lts, rep, h)?;
        if !r.passed() {
            return Err(Error::precondition("H is not a 3-cocycle", r));
        }
        Ok(ctx)
    }

    /// Shapes only.
    pub fn unchecked(lts: &'a Lts, rep: &'a Rep, h: &'a MultiMap) -> Result<Self> {
        if rep.dim_l() != lts.dim() || h.arity() != 3 || h.dim_in() != lts.dim() || h.dim_out() != rep.dim_m() {
            return Err(Error::Invalid("inconsistent triple system, representation and cocycle".into()));
        }
        Ok(McContext { lts, rep, h })
    }

    pub fn dim_l(&self) -> usize {
        self.lts.dim()
    }

    pub fn dim_m(&self) -> usize {
        self.rep.dim_m()
    }

    fn check_degree_zero(&self, t: &Matrix) -> Result<()> {
        if t.rows() != self.dim_l() || t.cols() != self.dim_m() {
            return Err(Error::DimensionMismatch {
                what: "degree-0 element as a map M -> L",
                expected: self.dim_l() * self.dim_m(),
                found: t.rows() * t.cols(),
            });
        }
        Ok(())
    }

    fn h3(&self, a: &[Rational], b: &[Rational], c: &[Rational]) -> Vector {
        self.h.eval(&[a, b, c]).expect("shapes checked")
    }
}

fn columns(t: &Matrix) -> Vec<Vector> {
    (0..t.cols()).map(|u| t.column(u)).collect()
}

pub fn cubic_l3(ctx: &McContext, t: &Matrix) -> Result<MultiMap> {
    ctx.check_degree_zero(t)?;
    let dm = ctx.dim_m();
    let tc = columns(t);
    let six = int(6);
    Ok(MultiMap::from_fn_par(3, dm, ctx.dim_l(), |x| {
        let (u, v, w) = (x[0], x[1], x[2]);
        let mut inner = ctx.rep.theta(&tc[v], &tc[w], &unit_vector(dm, u));
        sub_assign(&mut inner, &ctx.rep.theta(&tc[u], &tc[w], &unit_vector(dm, v)));
        add_assign(&mut inner, &ctx.rep.d(&tc[u], &tc[v], &unit_vector(dm, w)));
        let r = sub(&ctx.lts.bracket(&tc[u], &tc[v], &tc[w]), &t.apply(&inner));
        r.iter().map(|c| c * &six).collect()
    }))
}

pub fn quartic_l4(ctx: &McContext, t: &Matrix) -> Result<MultiMap> {
    ctx.check_degree_zero(t)?;
    let tc = columns(t);
    let factor = int(-24);
    Ok(MultiMap::from_fn_par(3, ctx.dim_m(), ctx.dim_l(), |x| {
        t.apply(&ctx.h3(&tc[x[0]], &tc[x[1]], &tc[x[2]])).iter().map(|c| c * &factor).collect()
    }))
}

/// `Σ_{S ≠ ∅} (−1)^{k−|S|} f(Σ S) / k!` for a form `f` homogeneous of degree `k`.
fn polarize(args: &[&Matrix], f: impl Fn(&Matrix) -> Result<MultiMap>) -> Result<MultiMap> {
    let k = args.len();
    let factorial: i64 = (1..=k as i64).product();
    let mut acc: Option<MultiMap> = None;
    for mask in 1u32..(1 << k) {
        let mut sum = Matrix::zeros(args[0].rows(), args[0].cols());
        for (i, a) in args.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = sum.add(a)?;
            }
        }
        let sign = if (k - mask.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
        let term = f(&sum)?.scale(&rat(sign, factorial));
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    Ok(acc.expect("at least one argument"))
}

/// The symmetric trilinear map with diagonal [`cubic_l3`].
pub fn l3_polarized(ctx: &McContext, a: &Matrix, b: &Matrix, c: &Matrix) -> Result<MultiMap> {
    polarize(&[a, b, c], |x| cubic_l3(ctx, x))
}

/// The symmetric quadrilinear map with diagonal [`quartic_l4`].
pub fn l4_polarized(ctx: &McContext, a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<MultiMap> {
    polarize(&[a, b, c, d], |x| quartic_l4(ctx, x))
}

/// `⅙ l3(T,T,T) + 1/24 l4(T,T,T,T)`.
pub fn mc_residual(ctx: &McContext, t: &Matrix) -> Result<MultiMap> {
    cubic_l3(ctx, t)?.scale(&rat(1, 6)).add(&quartic_l4(ctx, t)?.scale(&rat(1, 24)))
}

/// `l1^T(P) = ½ l3(T,T,P) + ⅙ l4(T,T,T,P)`
pub fn twisted_l1(ctx: &McContext, t: &Matrix, p: &Matrix) -> Result<MultiMap> {
    l3_polarized(ctx, t, t, p)?.scale(&rat(1, 2)).add(&l4_polarized(ctx, t, t, t, p)?.scale(&rat(1, 6)))
}

/// `l2^T(P,Q) = l3(T,P,Q) + ½ l4(T,T,P,Q)`
pub fn twisted_l2(ctx: &McContext, t: &Matrix, p: &Matrix, q: &Matrix) -> Result<MultiMap> {
    l3_polarized(ctx, t, p, q)?.add(&l4_polarized(ctx, t, t, p, q)?.scale(&rat(1, 2)))
}

/// `l3^T(P,Q,R) = l3(P,Q,R) + l4(T,P,Q,R)`
pub fn twisted_l3(ctx: &McContext, t: &Matrix, p: &Matrix, q: &Matrix, r: &Matrix) -> Result<MultiMap> {
    l3_polarized(ctx, p, q, r)?.add(&l4_polarized(ctx, t, p, q, r)?)
}

/// `l4^T = l4`
pub fn twisted_l4(ctx: &McContext, p: &Matrix, q: &Matrix, r: &Matrix, s: &Matrix) -> Result<MultiMap> {
    l4_polarized(ctx, p, q, r, s)
}

fn require_mc(ctx: &McContext, t: &Matrix) -> Result<()> {
    let residual = mc_residual(ctx, t)?;
    if residual.is_zero() {
        return Ok(());
    }
    let mut report = Report::new("Maurer-Cartan equation");
    for (idx, v) in residual.nonzero_values() {
        report.record("Maurer-Cartan residual", &idx, v.to_vec());
    }
    Err(Error::precondition("T is not a Maurer-Cartan element", report))
}

/// `l1^T(P) + ½ l2^T(P,P) + ⅙ l3^T(P,P,P) + 1/24 l4^T(P,P,P,P)` for a
/// Maurer–Cartan element `T`.
pub fn twisted_mc(ctx: &McContext, t: &Matrix, p: &Matrix) -> Result<MultiMap> {
    require_mc(ctx, t)?;
    ctx.check_degree_zero(p)?;
    let mut acc = twisted_l1(ctx, t, p)?;
    acc.add_scaled(&rat(1, 2), &twisted_l2(ctx, t, p, p)?)?;
    acc.add_scaled(&rat(1, 6), &twisted_l3(ctx, t, p, p, p)?)?;
    acc.add_scaled(&rat(1, 24), &twisted_l4(ctx, p, p, p, p)?)?;
    Ok(acc)
}

/// The part of the induced structure built from `π + θ` (no `H`):
/// bracket `θ(Tv,Tw)u − θ(Tu,Tw)v + D(Tu,Tv)w` and action
/// `[x,Tu,Tv] − T(D(x,Tu)v − θ(x,Tv)u)`.
fn structure_without_h(ctx: &McContext, t: &Matrix) -> Result<(Lts, Rep)> {
    let (dl, dm) = (ctx.dim_l(), ctx.dim_m());
    let tc = columns(t);
    let bracket = MultiMap::from_fn(3, dm, dm, |x| {
        let (u, v, w) = (x[0], x[1], x[2]);
        let mut out = ctx.rep.theta(&tc[v], &tc[w], &unit_vector(dm, u));
        sub_assign(&mut out, &ctx.rep.theta(&tc[u], &tc[w], &unit_vector(dm, v)));
        add_assign(&mut out, &ctx.rep.d(&tc[u], &tc[v], &unit_vector(dm, w)));
        out
    });
    let rep = Rep::from_fn(dm, dl, |u, v| {
        let cols: Vec<Vector> = (0..dl)
            .map(|xi| {
                let x = unit_vector(dl, xi);
                let mut inner = ctx.rep.d(&x, &tc[u], &unit_vector(dm, v));
                sub_assign(&mut inner, &ctx.rep.theta(&x, &tc[v], &unit_vector(dm, u)));
                sub(&ctx.lts.bracket(&x, &tc[u], &tc[v]), &t.apply(&inner))
            })
            .collect();
        Matrix::from_columns(dl, &cols).expect("square")
    })?;
    Ok((Lts::new(bracket)?, rep))
}

/// The part built from `H`: bracket `H(Tu,Tv,Tw)` and action `−T H(x,Tu,Tv)`.
fn structure_of_h(ctx: &McContext, t: &Matrix) -> Result<(Lts, Rep)> {
    let (dl, dm) = (ctx.dim_l(), ctx.dim_m());
    let tc = columns(t);
    let bracket = MultiMap::from_fn(3, dm, dm, |x| ctx.h3(&tc[x[0]], &tc[x[1]], &tc[x[2]]));
    let rep = Rep::from_fn(dm, dl, |u, v| {
        let cols: Vec<Vector> = (0..dl)
            .map(|xi| {
                let y = t.apply(&ctx.h3(&unit_vector(dl, xi), &tc[u], &tc[v]));
                y.iter().map(|c| -c).collect()
            })
            .collect();
        Matrix::from_columns(dl, &cols).expect("square")
    })?;
    Ok((Lts::new(bracket)?, rep))
}

fn level_sign(f: &MultiMap) -> Rational {
    let n = f.arity().div_ceil(2);
    if n % 2 == 1 {
        int(1)
    } else {
        int(-1)
    }
}

fn check_cochain(ctx: &McContext, f: &MultiMap) -> Result<()> {
    if f.dim_in() != ctx.dim_m() || f.dim_out() != ctx.dim_l() || f.arity().is_multiple_of(2) {
        return Err(Error::Invalid("a cochain here is a map M^(2n-1) -> L".into()));
    }
    Ok(())
}

/// `½ l3(T,T,f)` from the grouped expansion: the coboundary formula with
/// the `H`-free part of the induced structure, times `(−1)^{n−1}`.
pub fn half_l3_ttf_grouped(ctx: &McContext, t: &Matrix, f: &MultiMap) -> Result<MultiMap> {
    ctx.check_degree_zero(t)?;
    check_cochain(ctx, f)?;
    let (lts, rep) = structure_without_h(ctx, t)?;
    Ok(yamaguti::delta_unchecked(&lts, &rep, f)?.scale(&level_sign(f)))
}

/// `⅙ l4(T,T,T,f)` from the grouped expansion with the `H` part.
pub fn sixth_l4_tttf_grouped(ctx: &McContext, t: &Matrix, f: &MultiMap) -> Result<MultiMap> {
    ctx.check_degree_zero(t)?;
    check_cochain(ctx, f)?;
    let (lts, rep) = structure_of_h(ctx, t)?;
    Ok(yamaguti::delta_unchecked(&lts, &rep, f)?.scale(&level_sign(f)))
}

pub fn d_t_grouped(ctx: &McContext, t: &Matrix, f: &MultiMap) -> Result<MultiMap> {
    half_l3_ttf_grouped(ctx, t, f)?.add(&sixth_l4_tttf_grouped(ctx, t, f)?)
}

/// `d_T(f) = ½ l3(T,T,f) + ⅙ l4(T,T,T,f)` for a Maurer–Cartan element `T`.
///
/// Maps `M → L` are degree-0 elements, so the mixed brackets come from
/// polarization; longer cochains use the grouped expansion.
pub fn d_t(ctx: &McContext, t: &Matrix, f: &MultiMap) -> Result<MultiMap> {
    require_mc(ctx, t)?;
    check_cochain(ctx, f)?;
    if f.arity() == 1 {
        let p = f.to_matrix();
        return twisted_l1(ctx, t, &p);
    }
    d_t_grouped(ctx, t, f)
}

/// Skewness of a residual in its first two slots.
pub fn residual_is_skew(r: &MultiMap) -> bool {
    let d = r.dim_in();
    for u in 0..d {
        for v in 0..d {
            for w in 0..d {
                let a = r.value(&[u, v, w]);
                let b = r.value(&[v, u, w]);
                if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Cyclic sum over the three slots vanishes.
pub fn residual_is_cyclic(r: &MultiMap) -> bool {
    let d = r.dim_in();
    for u in 0..d {
        for v in 0..d {
            for w in 0..d {
                let mut s = r.value(&[u, v, w]).to_vec();
                add_assign(&mut s, r.value(&[v, w, u]));
                add_assign(&mut s, r.value(&[w, u, v]));
                if s.iter().any(|x| !x.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::zero_vector;
    use crate::lts::{lie_to_lts, regular_rep_unchecked, LieAlg};
    use crate::reynolds::{generalized_reynolds_residual, lambda_t, GenReynolds, ReynoldsCochain};

    fn witt_lts() -> Lts {
        let d = 4;
        let g = LieAlg::new(MultiMap::from_fn(2, d, d, |t| {
            let mut v = zero_vector(d);
            if t[0] + t[1] <= 3 {
                v[t[0] + t[1]] = int(t[0] as i64 - t[1] as i64);
            }
            v
        }))
        .unwrap();
        lie_to_lts(&g).unwrap()
    }

    fn witt_t() -> Matrix {
        let e: Vec<Rational> = (0..4).map(|m| rat(-1, m + 1)).collect();
        Matrix::diagonal(&e)
    }

    fn sample(k: i64) -> Matrix {
        Matrix::from_rows((0..4).map(|r| (0..4).map(|c| rat((r * 3 + c * 5 + k) % 7 - 3, 1 + (r + c + k) % 3)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn witt_is_maurer_cartan_and_perturbation_is_not() {
        let l = witt_lts();
        let rep = regular_rep_unchecked(&l);
        let h = l.tensor().scale(&int(2));
        let ctx = McContext::new(&l, &rep, &h).unwrap();
        assert!(mc_residual(&ctx, &witt_t()).unwrap().is_zero());
        let mut bad = witt_t();
        *bad.entry_mut(1, 1) += int(1);
        let r = mc_residual(&ctx, &bad).unwrap();
        assert!(!r.is_zero());
        assert!(residual_is_skew(&r) && residual_is_cyclic(&r));
        let g = GenReynolds::new(l.clone(), rep.clone(), h.clone(), bad).unwrap();
        let report = generalized_reynolds_residual(&g);
        let v = report.first_violation().unwrap();
        assert_eq!(r.value(&v.indices), v.residual.as_slice());
    }

    #[test]
    fn polarization_recovers_diagonal_and_homogeneity() {
        let l = witt_lts();
        let rep = regular_rep_unchecked(&l);
        let h = l.tensor().scale(&int(2));
        let ctx = McContext::unchecked(&l, &rep, &h).unwrap();
        let a = sample(1);
        assert_eq!(l3_polarized(&ctx, &a, &a, &a).unwrap(), cubic_l3(&ctx, &a).unwrap());
        assert_eq!(l4_polarized(&ctx, &a, &a, &a, &a).unwrap(), quartic_l4(&ctx, &a).unwrap());
        let two = a.scale(&int(2));
        assert_eq!(cubic_l3(&ctx, &two).unwrap(), cubic_l3(&ctx, &a).unwrap().scale(&int(8)));
        assert_eq!(quartic_l4(&ctx, &two).unwrap(), quartic_l4(&ctx, &a).unwrap().scale(&int(16)));
    }

    #[test]
    fn twisted_mc_is_shifted_residual() {
        let l = witt_lts();
        let rep = regular_rep_unchecked(&l);
        let h = l.tensor().scale(&int(2));
        let ctx = McContext::unchecked(&l, &rep, &h).unwrap();
        let t = witt_t();
        let p = sample(2);
        assert_eq!(twisted_mc(&ctx, &t, &p).unwrap(), mc_residual(&ctx, &t.add(&p).unwrap()).unwrap());
        assert!(twisted_mc(&ctx, &p, &t).is_err());
    }

    #[test]
    fn level_one_paths_agree() {
        let l = witt_lts();
        let rep = regular_rep_unchecked(&l);
        let h = l.tensor().scale(&int(2));
        let ctx = McContext::unchecked(&l, &rep, &h).unwrap();
        let t = witt_t();
        let g = GenReynolds::new(l.clone(), rep.clone(), h.clone(), t.clone()).unwrap();
        for k in 0..4 {
            let p = sample(k);
            let f = MultiMap::from_matrix(&p);
            assert_eq!(l3_polarized(&ctx, &t, &t, &p).unwrap().scale(&rat(1, 2)), half_l3_ttf_grouped(&ctx, &t, &f).unwrap());
            assert_eq!(l4_polarized(&ctx, &t, &t, &t, &p).unwrap().scale(&rat(1, 6)), sixth_l4_tttf_grouped(&ctx, &t, &f).unwrap());
            let d = d_t(&ctx, &t, &f).unwrap();
            let ReynoldsCochain::Map(lam) = lambda_t(&g, &ReynoldsCochain::Map(f.clone())).unwrap() else { unreachable!() };
            assert_eq!(d, lam);
            assert!(d_t(&ctx, &t, &d).unwrap().is_zero());
        }
    }
}
