//! Weighted and generalized Reynolds operators and the cochain complex
//! attached to a generalized Reynolds operator.
//!
//! A generalized Reynolds operator is a map `T: M → L` for a Lie triple
//! system `L`, a representation `(M, θ)` and a 3-cocycle `H`, with
//!
//! ```text
//! [Tu,Tv,Tw] = T(D(Tu,Tv)w + θ(Tv,Tw)u − θ(Tu,Tw)v + H(Tu,Tv,Tw)).
//! ```
//!
//! Its complex has pairs `L⊗L` at level 0 and, at level `n ≥ 1`, cochains
//! `M^{⊗(2n−1)} → L`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::{add_assign, axpy, int, rat, sub, sub_assign, unit_vector, zero_vector, Echelon, Matrix, Rational, Vector};
use crate::lts::{
    check_lie, check_lie_rep, check_lie_two_cocycle, check_lts, check_rep, lie_rep_to_lts_rep_unchecked,
    lie_to_lts_unchecked, lie_two_cocycle_to_three_cochain, regular_rep_unchecked, twisted_semidirect_unchecked, LieAlg,
    LieRep, Lts, Rep,
};
use crate::mlin::{ambient_size, cochain_space_basis, Budget, MultiMap, Tuples};
use crate::report::Report;
use crate::yamaguti::{self, CohomologyDims};

fn sign(exp: usize) -> Rational {
    if exp.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Carrier {
    Lie(LieAlg),
    Lts(Lts),
}

impl Carrier {
    pub fn dim(&self) -> usize {
        match self {
            Carrier::Lie(g) => g.dim(),
            Carrier::Lts(l) => l.dim(),
        }
    }
}

/// An operator `R` on a Lie algebra or Lie triple system with a weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedReynolds {
    pub carrier: Carrier,
    pub r: Matrix,
    pub weight: Rational,
}

impl WeightedReynolds {
    /// The Lie algebra definition requires a nonzero weight.
    pub fn on_lie(g: LieAlg, r: Matrix, weight: Rational) -> Result<Self> {
        if weight.is_zero() {
            return Err(Error::Invalid("a weighted Reynolds operator on a Lie algebra needs a nonzero weight".into()));
        }
        Self::build(Carrier::Lie(g), r, weight)
    }

    pub fn on_lts(l: Lts, r: Matrix, weight: Rational) -> Result<Self> {
        Self::build(Carrier::Lts(l), r, weight)
    }

    fn build(carrier: Carrier, r: Matrix, weight: Rational) -> Result<Self> {
        let d = carrier.dim();
        if r.rows() != d || r.cols() != d {
            return Err(Error::DimensionMismatch { what: "operator size", expected: d, found: r.rows() });
        }
        Ok(WeightedReynolds { carrier, r, weight })
    }
}

/// The defining identity only, without checking the carrier.
///
/// Lie case: `[Rx,Ry] = R([Rx,y] + [x,Ry] + λ[Rx,Ry])`.
/// Triple case: `[Rx,Ry,Rz] = R([Rx,Ry,z] + [x,Ry,Rz] + [Rx,y,Rz] + λ[Rx,Ry,Rz])`.
pub fn weighted_reynolds_identity(op: &WeightedReynolds) -> Report {
    let d = op.carrier.dim();
    let rc: Vec<Vector> = (0..d).map(|i| op.r.column(i)).collect();
    let e = |i: usize| unit_vector(d, i);
    match &op.carrier {
        Carrier::Lie(g) => {
            let mut report = Report::new("weighted Reynolds operator (Lie)");
            for t in Tuples::new(2, d) {
                let (x, y) = (t[0], t[1]);
                let lhs = g.bracket(&rc[x], &rc[y]);
                let mut inner = g.bracket(&rc[x], &e(y));
                add_assign(&mut inner, &g.bracket(&e(x), &rc[y]));
                axpy(&mut inner, &op.weight, &lhs);
                report.record("weighted Reynolds identity", &t, sub(&lhs, &op.r.apply(&inner)));
            }
            report
        }
        Carrier::Lts(l) => {
            let parts: Vec<Report> = (0..d)
                .into_par_iter()
                .map(|x| {
                    let mut part = Report::new("");
                    for rest in Tuples::new(2, d) {
                        let (y, z) = (rest[0], rest[1]);
                        let lhs = l.bracket(&rc[x], &rc[y], &rc[z]);
                        let mut inner = l.bracket(&rc[x], &rc[y], &e(z));
                        add_assign(&mut inner, &l.bracket(&e(x), &rc[y], &rc[z]));
                        add_assign(&mut inner, &l.bracket(&rc[x], &e(y), &rc[z]));
                        axpy(&mut inner, &op.weight, &lhs);
                        part.record("weighted Reynolds identity", &[x, y, z], sub(&lhs, &op.r.apply(&inner)));
                    }
                    part
                })
                .collect();
            Report::collect("weighted Reynolds operator (triple system)", parts)
        }
    }
}

/// Checks the carrier, then the defining identity.
pub fn check_weighted_reynolds(op: &WeightedReynolds) -> Result<Report> {
    let carrier = match &op.carrier {
        Carrier::Lie(g) => check_lie(g),
        Carrier::Lts(l) => check_lts(l),
    };
    if !carrier.passed() {
        return Err(Error::precondition("the carrier fails its axioms", carrier));
    }
    Ok(weighted_reynolds_identity(op))
}

fn require(report: Report, what: &'static str) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition(what, report))
    }
}

/// The same operator on the induced triple system `[[x,y],z]`, with the weight doubled.
pub fn weight_doubling(op: &WeightedReynolds) -> Result<WeightedReynolds> {
    let Carrier::Lie(g) = &op.carrier else {
        return Err(Error::Invalid("weight doubling starts from a Lie algebra operator".into()));
    };
    require(check_weighted_reynolds(op)?, "the Lie operator fails its identity")?;
    WeightedReynolds::on_lts(lie_to_lts_unchecked(g), op.r.clone(), &op.weight * int(2))
}

/// `[x,y,z]_R = [Rx,Ry,z] + [Rx,y,Rz] + [x,Ry,Rz] + λ[Rx,Ry,Rz]`, with no
/// check on the operator.
pub fn descended_bracket_tensor(op: &WeightedReynolds) -> Result<MultiMap> {
    let Carrier::Lts(l) = &op.carrier else {
        return Err(Error::Invalid("the descended bracket needs a triple system operator".into()));
    };
    let d = l.dim();
    let rc: Vec<Vector> = (0..d).map(|i| op.r.column(i)).collect();
    Ok(MultiMap::from_fn_par(3, d, d, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let (ex, ey, ez) = (unit_vector(d, x), unit_vector(d, y), unit_vector(d, z));
        let mut out = l.bracket(&rc[x], &rc[y], &ez);
        add_assign(&mut out, &l.bracket(&rc[x], &ey, &rc[z]));
        add_assign(&mut out, &l.bracket(&ex, &rc[y], &rc[z]));
        axpy(&mut out, &op.weight, &l.bracket(&rc[x], &rc[y], &rc[z]));
        out
    }))
}

/// The descended triple system, after checking the operator.
pub fn descend_bracket(op: &WeightedReynolds) -> Result<Lts> {
    require(check_weighted_reynolds(op)?, "the operator fails its identity")?;
    Lts::new(descended_bracket_tensor(op)?)
}

/// `R([x,y,z]_R) = [Rx,Ry,Rz]` on basis triples.
pub fn descended_morphism_check(op: &WeightedReynolds, descended: &Lts) -> Result<Report> {
    let Carrier::Lts(l) = &op.carrier else {
        return Err(Error::Invalid("needs a triple system operator".into()));
    };
    let d = l.dim();
    let rc: Vec<Vector> = (0..d).map(|i| op.r.column(i)).collect();
    let mut report = Report::new("R is a morphism from the descended bracket");
    for t in Tuples::new(3, d) {
        let lhs = op.r.apply(descended.tensor().value(&t));
        report.record("R intertwines brackets", &t, sub(&lhs, &l.bracket(&rc[t[0]], &rc[t[1]], &rc[t[2]])));
    }
    Ok(report)
}

/// A generalized Reynolds operator `T: M → L` (a `dim L × dim M` matrix).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenReynolds {
    pub lts: Lts,
    pub rep: Rep,
    pub h: MultiMap,
    pub t: Matrix,
}

impl GenReynolds {
    /// Checks shapes only; see [`check_generalized_reynolds`] for the identity.
    pub fn new(lts: Lts, rep: Rep, h: MultiMap, t: Matrix) -> Result<Self> {
        let (dl, dm) = (lts.dim(), rep.dim_m());
        if rep.dim_l() != dl {
            return Err(Error::DimensionMismatch { what: "representation base", expected: dl, found: rep.dim_l() });
        }
        if h.arity() != 3 || h.dim_in() != dl || h.dim_out() != dm {
            return Err(Error::Invalid("H must be a trilinear map L x L x L -> M".into()));
        }
        if t.rows() != dl || t.cols() != dm {
            return Err(Error::DimensionMismatch { what: "T as a map M -> L", expected: dl * dm, found: t.rows() * t.cols() });
        }
        Ok(GenReynolds { lts, rep, h, t })
    }

    pub fn dim_l(&self) -> usize {
        self.lts.dim()
    }

    pub fn dim_m(&self) -> usize {
        self.rep.dim_m()
    }

    /// The same pair and cocycle with another operator.
    pub fn with_t(&self, t: Matrix) -> Result<Self> {
        GenReynolds::new(self.lts.clone(), self.rep.clone(), self.h.clone(), t)
    }

    fn t_columns(&self) -> Vec<Vector> {
        (0..self.dim_m()).map(|u| self.t.column(u)).collect()
    }

    fn h3(&self, a: &[Rational], b: &[Rational], c: &[Rational]) -> Vector {
        self.h.eval(&[a, b, c]).expect("shapes checked at construction")
    }
}

/// Checks `L`, `M` and `H`, returning the first failure.
pub fn check_pair(g: &GenReynolds) -> Result<()> {
    require(check_lts(&g.lts), "L is not a Lie triple system")?;
    require(check_rep(&g.lts, &g.rep)?, "M is not a representation")?;
    require(yamaguti::check_three_cocycle(&g.lts, &g.rep, &g.h)?, "H is not a 3-cocycle")
}

/// Residual `[Tu,Tv,Tw] − T(D(Tu,Tv)w + θ(Tv,Tw)u − θ(Tu,Tw)v + H(Tu,Tv,Tw))`
/// on every basis triple of `M`, with no check on the pair.
pub fn generalized_reynolds_residual(g: &GenReynolds) -> Report {
    let dm = g.dim_m();
    let tc = g.t_columns();
    let parts: Vec<Report> = (0..dm)
        .into_par_iter()
        .map(|u| {
            let mut part = Report::new("");
            for rest in Tuples::new(2, dm) {
                let (v, w) = (rest[0], rest[1]);
                let lhs = g.lts.bracket(&tc[u], &tc[v], &tc[w]);
                let mut inner = g.rep.d(&tc[u], &tc[v], &unit_vector(dm, w));
                add_assign(&mut inner, &g.rep.theta(&tc[v], &tc[w], &unit_vector(dm, u)));
                sub_assign(&mut inner, &g.rep.theta(&tc[u], &tc[w], &unit_vector(dm, v)));
                add_assign(&mut inner, &g.h3(&tc[u], &tc[v], &tc[w]));
                part.record("generalized Reynolds identity", &[u, v, w], sub(&lhs, &g.t.apply(&inner)));
            }
            part
        })
        .collect();
    Report::collect("generalized Reynolds operator", parts)
}

pub fn check_generalized_reynolds(g: &GenReynolds) -> Result<Report> {
    check_pair(g)?;
    Ok(generalized_reynolds_residual(g))
}

/// A weighted operator on a triple system as a generalized Reynolds
/// operator: regular representation, `H = λ[·,·,·]`, `T = R`.
pub fn embed_weighted(op: &WeightedReynolds) -> Result<GenReynolds> {
    let Carrier::Lts(l) = &op.carrier else {
        return Err(Error::Invalid("the embedding needs a triple system operator".into()));
    };
    let rep = regular_rep_unchecked(l);
    GenReynolds::new(l.clone(), rep, l.tensor().scale(&op.weight), op.r.clone())
}

/// Closure of the graph `{(Tu, u)}` under the twisted semidirect bracket:
/// the `L`-part of each bracket of graph elements must be `T` of its `M`-part.
pub fn graph_subalgebra_check(g: &GenReynolds) -> Report {
    let (dl, dm) = (g.dim_l(), g.dim_m());
    let big = twisted_semidirect_unchecked(&g.lts, &g.rep, &g.h);
    let graph: Vec<Vector> = (0..dm)
        .map(|u| {
            let mut v = g.t.column(u);
            v.extend(unit_vector(dm, u));
            v
        })
        .collect();
    let mut report = Report::new("graph of T is a subalgebra");
    for t in Tuples::new(3, dm) {
        let b = big.bracket(&graph[t[0]], &graph[t[1]], &graph[t[2]]);
        let (l_part, m_part) = b.split_at(dl);
        report.record("graph closure", &t, sub(l_part, &g.t.apply(m_part)));
    }
    report
}

/// `[u,v,w]_T = θ(Tv,Tw)u − θ(Tu,Tw)v + D(Tu,Tv)w + H(Tu,Tv,Tw)`, unchecked.
pub fn induced_bracket_tensor(g: &GenReynolds) -> MultiMap {
    let dm = g.dim_m();
    let tc = g.t_columns();
    MultiMap::from_fn_par(3, dm, dm, |t| {
        let (u, v, w) = (t[0], t[1], t[2]);
        let mut out = g.rep.theta(&tc[v], &tc[w], &unit_vector(dm, u));
        sub_assign(&mut out, &g.rep.theta(&tc[u], &tc[w], &unit_vector(dm, v)));
        add_assign(&mut out, &g.rep.d(&tc[u], &tc[v], &unit_vector(dm, w)));
        add_assign(&mut out, &g.h3(&tc[u], &tc[v], &tc[w]));
        out
    })
}

pub fn induced_bracket(g: &GenReynolds) -> Result<Lts> {
    require(check_generalized_reynolds(g)?, "T fails the generalized Reynolds identity")?;
    Lts::new(induced_bracket_tensor(g))
}

/// `T([u,v,w]_T) = [Tu,Tv,Tw]` on basis triples of `M`.
pub fn t_morphism_check(g: &GenReynolds, induced: &Lts) -> Report {
    let tc = g.t_columns();
    let mut report = Report::new("T is a morphism from the induced bracket");
    for t in Tuples::new(3, g.dim_m()) {
        let lhs = g.t.apply(induced.tensor().value(&t));
        report.record("T intertwines brackets", &t, sub(&lhs, &g.lts.bracket(&tc[t[0]], &tc[t[1]], &tc[t[2]])));
    }
    report
}

/// `θ_T(u,v)x = [x,Tu,Tv] − T(D(x,Tu)v − θ(x,Tv)u + H(x,Tu,Tv))` as a
/// representation of the induced triple system on `L`, unchecked.
pub fn induced_rep_unchecked(g: &GenReynolds) -> Rep {
    let (dl, dm) = (g.dim_l(), g.dim_m());
    let tc = g.t_columns();
    Rep::from_fn(dm, dl, |u, v| {
        let cols: Vec<Vector> = (0..dl).map(|x| theta_t_apply(g, &tc, u, v, &unit_vector(dl, x))).collect();
        Matrix::from_columns(dl, &cols).expect("columns of length dim L")
    })
    .expect("well formed")
}

pub fn induced_rep_theta_t(g: &GenReynolds) -> Result<Rep> {
    require(check_generalized_reynolds(g)?, "T fails the generalized Reynolds identity")?;
    Ok(induced_rep_unchecked(g))
}

fn theta_t_apply(g: &GenReynolds, tc: &[Vector], u: usize, v: usize, x: &[Rational]) -> Vector {
    let dm = g.dim_m();
    let mut inner = g.rep.d(x, &tc[u], &unit_vector(dm, v));
    sub_assign(&mut inner, &g.rep.theta(x, &tc[v], &unit_vector(dm, u)));
    add_assign(&mut inner, &g.h3(x, &tc[u], &tc[v]));
    sub(&g.lts.bracket(x, &tc[u], &tc[v]), &g.t.apply(&inner))
}

/// `D_T(u,v)x = [Tu,Tv,x] − T(θ(Tv,x)u − θ(Tu,x)v + H(Tu,Tv,x))`.
fn d_t_apply(g: &GenReynolds, tc: &[Vector], u: usize, v: usize, x: &[Rational]) -> Vector {
    let dm = g.dim_m();
    let mut inner = g.rep.theta(&tc[v], x, &unit_vector(dm, u));
    sub_assign(&mut inner, &g.rep.theta(&tc[u], x, &unit_vector(dm, v)));
    add_assign(&mut inner, &g.h3(&tc[u], &tc[v], x));
    sub(&g.lts.bracket(&tc[u], &tc[v], x), &g.t.apply(&inner))
}

/// Level-0 cochains are pairs `χ = Σ χ_ij e_i⊗e_j`, stored as the square
/// coefficient matrix; higher levels are multilinear maps `M^{⊗k} → L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReynoldsCochain {
    Pairs(Matrix),
    Map(MultiMap),
}

impl ReynoldsCochain {
    /// 0 for pairs, `n` for maps of arity `2n−1`.
    pub fn level(&self) -> usize {
        match self {
            ReynoldsCochain::Pairs(_) => 0,
            ReynoldsCochain::Map(f) => f.arity().div_ceil(2),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ReynoldsCochain::Pairs(c) => c.is_zero(),
            ReynoldsCochain::Map(f) => f.is_zero(),
        }
    }

    pub fn as_map(&self) -> Option<&MultiMap> {
        match self {
            ReynoldsCochain::Map(f) => Some(f),
            ReynoldsCochain::Pairs(_) => None,
        }
    }
}

/// `(χ − χᵗ)/2`: the part of a pair that the differential sees.
pub fn skew_projection(chi: &Matrix) -> Matrix {
    chi.sub(&chi.transpose()).expect("square").scale(&rat(1, 2))
}

/// `∂_T(χ)u = T(D(χ)u + H(χ,Tu)) − [χ,Tu]`, extended linearly over pairs.
pub fn partial_t(g: &GenReynolds, chi: &Matrix) -> Result<MultiMap> {
    let (dl, dm) = (g.dim_l(), g.dim_m());
    if chi.rows() != dl || chi.cols() != dl {
        return Err(Error::DimensionMismatch { what: "pair coefficients", expected: dl, found: chi.rows() });
    }
    let tc = g.t_columns();
    let one = int(1);
    Ok(MultiMap::from_fn(1, dm, dl, |t| {
        let u = t[0];
        let eu = unit_vector(dm, u);
        let mut inner = zero_vector(dm);
        let mut bracket = zero_vector(dl);
        for i in 0..dl {
            for j in 0..dl {
                let c = chi.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let mut part = zero_vector(dm);
                g.rep.add_d(&mut part, &one, i, j, &eu);
                add_assign(&mut part, &g.h3(&unit_vector(dl, i), &unit_vector(dl, j), &tc[u]));
                axpy(&mut inner, c, &part);
                axpy(&mut bracket, c, &g.lts.bracket(&unit_vector(dl, i), &unit_vector(dl, j), &tc[u]));
            }
        }
        sub(&g.t.apply(&inner), &bracket)
    }))
}

/// The differential of the complex of `T`.
///
/// Pairs go to `∂_T`. A map of arity `2n−1` goes to the coboundary of the
/// induced triple system `(M, [·,·,·]_T)` with coefficients in `(L, θ_T)`,
/// evaluated through the expansion in terms of `T`, `θ`, `H` and the bracket
/// of `L`; the induced structures are never formed as tensors here.
pub fn lambda_t(g: &GenReynolds, c: &ReynoldsCochain) -> Result<ReynoldsCochain> {
    match c {
        ReynoldsCochain::Pairs(chi) => Ok(ReynoldsCochain::Map(partial_t(g, chi)?)),
        ReynoldsCochain::Map(f) => Ok(ReynoldsCochain::Map(lambda_t_map(g, f)?)),
    }
}

fn check_cochain(g: &GenReynolds, f: &MultiMap) -> Result<()> {
    if f.dim_in() != g.dim_m() || f.dim_out() != g.dim_l() || f.arity().is_multiple_of(2) {
        return Err(Error::Invalid("a cochain of the complex of T is a map M^(2n-1) -> L".into()));
    }
    Ok(())
}

fn lambda_t_map(g: &GenReynolds, f: &MultiMap) -> Result<MultiMap> {
    check_cochain(g, f)?;
    let (dl, dm) = (g.dim_l(), g.dim_m());
    let n = f.arity().div_ceil(2);
    let tc = g.t_columns();
    // Values on basis elements of M of the operators acting on f-values.
    let theta_t: Vec<Matrix> = Tuples::new(2, dm)
        .map(|p| {
            let cols: Vec<Vector> = (0..dl).map(|x| theta_t_apply(g, &tc, p[0], p[1], &unit_vector(dl, x))).collect();
            Matrix::from_columns(dl, &cols).expect("square")
        })
        .collect();
    let d_t: Vec<Matrix> = Tuples::new(2, dm)
        .map(|p| {
            let cols: Vec<Vector> = (0..dl).map(|x| d_t_apply(g, &tc, p[0], p[1], &unit_vector(dl, x))).collect();
            Matrix::from_columns(dl, &cols).expect("square")
        })
        .collect();
    // [u,v,w]_T = θ(Tv,Tw)u − θ(Tu,Tw)v + D(Tu,Tv)w + H(Tu,Tv,Tw)
    let bracket_t: Vec<Vec<(usize, Rational)>> = Tuples::new(3, dm)
        .map(|t| {
            let (u, v, w) = (t[0], t[1], t[2]);
            let mut out = g.rep.theta(&tc[v], &tc[w], &unit_vector(dm, u));
            sub_assign(&mut out, &g.rep.theta(&tc[u], &tc[w], &unit_vector(dm, v)));
            add_assign(&mut out, &g.rep.d(&tc[u], &tc[v], &unit_vector(dm, w)));
            add_assign(&mut out, &g.h3(&tc[u], &tc[v], &tc[w]));
            out.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
        })
        .collect();
    fn op(ops: &[Matrix], dm: usize, a: usize, b: usize) -> &Matrix {
        &ops[a * dm + b]
    }
    Ok(MultiMap::from_fn_par(2 * n + 1, dm, dl, |x| {
        let mut acc = op(&theta_t, dm, x[2 * n - 1], x[2 * n]).apply(f.value(&x[..2 * n - 1]));
        let mut args = x[..2 * n - 2].to_vec();
        args.push(x[2 * n - 1]);
        sub_assign(&mut acc, &op(&theta_t, dm, x[2 * n - 2], x[2 * n]).apply(f.value(&args)));
        for k in 1..=n {
            let (a, b) = (x[2 * k - 2], x[2 * k - 1]);
            let mut rest: Vec<usize> = x[..2 * k - 2].to_vec();
            rest.extend_from_slice(&x[2 * k..]);
            axpy(&mut acc, &sign(n + k), &op(&d_t, dm, a, b).apply(f.value(&rest)));
            let s = sign(n + k + 1);
            for j in 2 * k..=2 * n {
                let pos = j - 2;
                let saved = rest[pos];
                for (q, c) in &bracket_t[(a * dm + b) * dm + x[j]] {
                    rest[pos] = *q;
                    axpy(&mut acc, &(&s * c), f.value(&rest));
                }
                rest[pos] = saved;
            }
        }
        acc
    }))
}

/// The same differential on maps, computed as the generic Yamaguti
/// coboundary of the induced pair.
pub fn lambda_t_via_induced_pair(g: &GenReynolds, f: &MultiMap) -> Result<MultiMap> {
    check_cochain(g, f)?;
    let lts = Lts::new(induced_bracket_tensor(g))?;
    let rep = induced_rep_unchecked(g);
    yamaguti::delta_unchecked(&lts, &rep, f)
}

/// The closedness condition for a 1-cochain `φ: M → L`, written out in
/// terms of the original data:
///
/// ```text
///   [φu1,Tu2,Tu3] + [Tu1,φu2,Tu3] + [Tu1,Tu2,φu3]
/// − T(D(φu1,Tu2)u3 − θ(φu1,Tu3)u2 + H(φu1,Tu2,Tu3))
/// + T(D(φu2,Tu1)u3 − θ(φu2,Tu3)u1 + H(φu2,Tu1,Tu3))
/// − T(θ(Tu2,φu3)u1 − θ(Tu1,φu3)u2 + H(Tu1,Tu2,φu3))
/// − φ(θ(Tu2,Tu3)u1 − θ(Tu1,Tu3)u2 + D(Tu1,Tu2)u3 + H(Tu1,Tu2,Tu3))
/// ```
pub fn level_one_closedness(g: &GenReynolds, phi: &MultiMap) -> Result<MultiMap> {
    check_cochain(g, phi)?;
    if phi.arity() != 1 {
        return Err(Error::DimensionMismatch { what: "1-cochain arity", expected: 1, found: phi.arity() });
    }
    let (dl, dm) = (g.dim_l(), g.dim_m());
    let tc = g.t_columns();
    let pm = phi.to_matrix();
    let pc: Vec<Vector> = (0..dm).map(|u| pm.column(u)).collect();
    let e = |i: usize| unit_vector(dm, i);
    Ok(MultiMap::from_fn(3, dm, dl, |t| {
        let (u1, u2, u3) = (t[0], t[1], t[2]);
        let mut acc = g.lts.bracket(&pc[u1], &tc[u2], &tc[u3]);
        add_assign(&mut acc, &g.lts.bracket(&tc[u1], &pc[u2], &tc[u3]));
        add_assign(&mut acc, &g.lts.bracket(&tc[u1], &tc[u2], &pc[u3]));

        let mut a = g.rep.d(&pc[u1], &tc[u2], &e(u3));
        sub_assign(&mut a, &g.rep.theta(&pc[u1], &tc[u3], &e(u2)));
        add_assign(&mut a, &g.h3(&pc[u1], &tc[u2], &tc[u3]));
        let mut b = g.rep.d(&pc[u2], &tc[u1], &e(u3));
        sub_assign(&mut b, &g.rep.theta(&pc[u2], &tc[u3], &e(u1)));
        add_assign(&mut b, &g.h3(&pc[u2], &tc[u1], &tc[u3]));
        let mut c = g.rep.theta(&tc[u2], &pc[u3], &e(u1));
        sub_assign(&mut c, &g.rep.theta(&tc[u1], &pc[u3], &e(u2)));
        add_assign(&mut c, &g.h3(&tc[u1], &tc[u2], &pc[u3]));
        let mut inner = sub(&b, &a);
        sub_assign(&mut inner, &c);
        add_assign(&mut acc, &g.t.apply(&inner));

        let mut m = g.rep.theta(&tc[u2], &tc[u3], &e(u1));
        sub_assign(&mut m, &g.rep.theta(&tc[u1], &tc[u3], &e(u2)));
        add_assign(&mut m, &g.rep.d(&tc[u1], &tc[u2], &e(u3)));
        add_assign(&mut m, &g.h3(&tc[u1], &tc[u2], &tc[u3]));
        sub_assign(&mut acc, &pm.apply(&m));
        acc
    }))
}

/// The complex of a generalized Reynolds operator. Level 0 is `L∧L` (pairs
/// after skew projection), level `n ≥ 1` holds cochains of arity `2n−1`.
#[derive(Debug, Clone, Copy)]
pub struct ReynoldsComplex<'a> {
    pub g: &'a GenReynolds,
    pub budget: Budget,
}

impl<'a> ReynoldsComplex<'a> {
    pub fn new(g: &'a GenReynolds, budget: Budget) -> Self {
        ReynoldsComplex { g, budget }
    }

    /// Basis of the cochains at `level`.
    pub fn basis(&self, level: usize) -> Result<Vec<ReynoldsCochain>> {
        let (dl, dm) = (self.g.dim_l(), self.g.dim_m());
        if level == 0 {
            let mut out = Vec::new();
            for i in 0..dl {
                for j in i + 1..dl {
                    let mut chi = Matrix::zeros(dl, dl);
                    chi.set(i, j, int(1));
                    chi.set(j, i, int(-1));
                    out.push(ReynoldsCochain::Pairs(chi));
                }
            }
            return Ok(out);
        }
        let basis = cochain_space_basis(dm, dl, level - 1, self.budget)?;
        Ok(basis.elements().map(ReynoldsCochain::Map).collect())
    }

    fn ambient(&self, level: usize) -> u128 {
        ambient_size(2 * level - 1, self.g.dim_m(), self.g.dim_l())
    }

    fn images(&self, level: usize) -> Result<(Vec<ReynoldsCochain>, Vec<Vector>)> {
        let basis = self.basis(level)?;
        let next = self.ambient(level + 1);
        self.budget.admit(|| format!("differential matrix at level {level}"), next.saturating_mul(basis.len() as u128))?;
        let mut cols = Vec::with_capacity(basis.len());
        for b in &basis {
            match lambda_t(self.g, b)? {
                ReynoldsCochain::Map(f) => cols.push(f.coeffs().to_vec()),
                ReynoldsCochain::Pairs(_) => unreachable!("the differential never lands in pairs"),
            }
        }
        Ok((basis, cols))
    }

    fn rank(cols: Vec<Vector>, width: usize) -> usize {
        let mut e = Echelon::new(width);
        for c in cols {
            e.insert(c);
        }
        e.rank()
    }

    pub fn cohomology_dims(&self, level: usize) -> Result<CohomologyDims> {
        let (basis, cols) = self.images(level)?;
        let cocycles = basis.len() - Self::rank(cols, self.ambient(level + 1) as usize);
        let coboundaries = if level == 0 {
            0
        } else {
            let (_, prev) = self.images(level - 1)?;
            Self::rank(prev, self.ambient(level) as usize)
        };
        Ok(CohomologyDims { cocycles, coboundaries, cohomology: cocycles - coboundaries })
    }

    /// A preimage of a cochain at level `n ≥ 1` under the differential.
    pub fn preimage(&self, f: &MultiMap) -> Result<Option<ReynoldsCochain>> {
        check_cochain(self.g, f)?;
        let level = f.arity().div_ceil(2);
        let (basis, cols) = self.images(level - 1)?;
        let a = Matrix::from_columns(f.coeffs().len(), &cols)?;
        let Some(x) = a.solve(f.coeffs())? else {
            return Ok(None);
        };
        let mut acc: Option<ReynoldsCochain> = None;
        for (c, b) in x.iter().zip(&basis) {
            acc = Some(match (acc, b) {
                (None, ReynoldsCochain::Pairs(p)) => ReynoldsCochain::Pairs(p.scale(c)),
                (None, ReynoldsCochain::Map(m)) => ReynoldsCochain::Map(m.scale(c)),
                (Some(ReynoldsCochain::Pairs(s)), ReynoldsCochain::Pairs(p)) => {
                    ReynoldsCochain::Pairs(s.add(&p.scale(c))?)
                }
                (Some(ReynoldsCochain::Map(mut s)), ReynoldsCochain::Map(m)) => {
                    s.add_scaled(c, m)?;
                    ReynoldsCochain::Map(s)
                }
                _ => unreachable!("basis of a single level"),
            });
        }
        Ok(Some(acc.unwrap_or_else(|| {
            if level == 1 {
                ReynoldsCochain::Pairs(Matrix::zeros(self.g.dim_l(), self.g.dim_l()))
            } else {
                ReynoldsCochain::Map(MultiMap::zero(2 * level - 3, self.g.dim_m(), self.g.dim_l()))
            }
        })))
    }
}

/// `T = φ⁻¹` for an invertible 1-cochain `φ: L → M` (a `dim M × dim L`
/// matrix), with `H = −δ¹φ`.
pub fn inverse_construction(lts: &Lts, rep: &Rep, phi: &Matrix) -> Result<GenReynolds> {
    let t = phi.inverse().ok_or(Error::NotInvertible { what: "the 1-cochain" })?;
    let d1 = yamaguti::delta1(lts, rep, &MultiMap::from_matrix(phi))?;
    GenReynolds::new(lts.clone(), rep.clone(), d1.scale(&int(-1)), t)
}

/// `T_φ = T(Id + φT)⁻¹` for a 1-cocycle `φ: L → M` with `Id + φT` invertible.
pub fn admissible_gauge(g: &GenReynolds, phi: &Matrix) -> Result<GenReynolds> {
    let a = gauge_factor(g, phi)?;
    let inv = a.inverse().ok_or(Error::NotInvertible { what: "Id + φT" })?;
    g.with_t(g.t.mul(&inv)?)
}

/// `Id + φT` after checking that `φ` is a 1-cocycle.
pub fn gauge_factor(g: &GenReynolds, phi: &Matrix) -> Result<Matrix> {
    if phi.rows() != g.dim_m() || phi.cols() != g.dim_l() {
        return Err(Error::DimensionMismatch { what: "φ as a map L -> M", expected: g.dim_m() * g.dim_l(), found: phi.rows() * phi.cols() });
    }
    let d1 = yamaguti::delta1(&g.lts, &g.rep, &MultiMap::from_matrix(phi))?;
    if !d1.is_zero() {
        let mut report = Report::new("1-cocycle");
        for (t, v) in d1.nonzero_values() {
            report.record("1-cocycle identity", &t, v.to_vec());
        }
        return Err(Error::precondition("φ is not a 1-cocycle", report));
    }
    Matrix::identity(g.dim_m()).add(&phi.mul(&g.t)?)
}

/// `A[u,v,w]_T = [Au,Av,Aw]_{T_φ}` with `A = Id + φT`.
pub fn gauge_intertwining_check(g: &GenReynolds, gauged: &GenReynolds, a: &Matrix) -> Report {
    let before = induced_bracket_tensor(g);
    let after = Lts::new(induced_bracket_tensor(gauged)).expect("well formed");
    let ac: Vec<Vector> = (0..g.dim_m()).map(|u| a.column(u)).collect();
    let mut report = Report::new("Id + φT intertwines the induced brackets");
    for t in Tuples::new(3, g.dim_m()) {
        let lhs = a.apply(before.value(&t));
        report.record("intertwining", &t, sub(&lhs, &after.bracket(&ac[t[0]], &ac[t[1]], &ac[t[2]])));
    }
    report
}

/// `κ_φ = [[Id,0],[φ,Id]]` as a map from `L ⋉^H M` to `L ⋉^{H−δ¹φ} M`,
/// checked to be a morphism on all basis triples. `φ` is any 1-cochain.
pub fn kappa_twist_check(lts: &Lts, rep: &Rep, h: &MultiMap, phi: &Matrix) -> Result<Report> {
    let (dl, dm) = (lts.dim(), rep.dim_m());
    let d1 = yamaguti::delta1(lts, rep, &MultiMap::from_matrix(phi))?;
    let h2 = h.sub(&d1)?;
    let source = twisted_semidirect_unchecked(lts, rep, h);
    let target = twisted_semidirect_unchecked(lts, rep, &h2);
    let n = dl + dm;
    let mut kappa = Matrix::identity(n);
    for r in 0..dm {
        for c in 0..dl {
            kappa.set(dl + r, c, phi.get(r, c).clone());
        }
    }
    let kc: Vec<Vector> = (0..n).map(|i| kappa.column(i)).collect();
    let mut report = Report::new("κ_φ is a morphism of twisted semidirect products");
    for t in Tuples::new(3, n) {
        let lhs = kappa.apply(source.tensor().value(&t));
        report.record("κ intertwines brackets", &t, sub(&lhs, &target.bracket(&kc[t[0]], &kc[t[1]], &kc[t[2]])));
    }
    Ok(report)
}

/// A pair `(φ: L → L', ψ: M → M')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismWitness {
    pub phi: Matrix,
    pub psi: Matrix,
}

/// `φT = T'ψ`, `ψ(θ(x,y)u) = θ'(φx,φy)ψu`, `ψH(x,y,z) = H'(φx,φy,φz)` and
/// `φ` a morphism of triple systems.
pub fn morphism_check(g: &GenReynolds, g2: &GenReynolds, w: &MorphismWitness) -> Result<Report> {
    let (dl, dm) = (g.dim_l(), g.dim_m());
    if w.phi.rows() != g2.dim_l() || w.phi.cols() != dl || w.psi.rows() != g2.dim_m() || w.psi.cols() != dm {
        return Err(Error::Invalid("witness shapes do not match the two operators".into()));
    }
    let mut report = Report::new("morphism of generalized Reynolds operators");
    let c1 = w.phi.mul(&g.t)?.sub(&g2.t.mul(&w.psi)?)?;
    report.record("φT = T'ψ", &[], c1.entries().to_vec());
    let pc: Vec<Vector> = (0..dl).map(|x| w.phi.column(x)).collect();
    let qc: Vec<Vector> = (0..dm).map(|u| w.psi.column(u)).collect();
    for x in 0..dl {
        for y in 0..dl {
            for u in 0..dm {
                let lhs = w.psi.apply(g.rep.theta_matrix(x, y).column(u).as_slice());
                let rhs = g2.rep.theta(&pc[x], &pc[y], &qc[u]);
                report.record("ψθ = θ'(φ,φ)ψ", &[x, y, u], sub(&lhs, &rhs));
            }
        }
    }
    for t in Tuples::new(3, dl) {
        let lhs = w.psi.apply(g.h.value(&t));
        report.record("ψH = H'(φ,φ,φ)", &t, sub(&lhs, &g2.h3(&pc[t[0]], &pc[t[1]], &pc[t[2]])));
        let lhs = w.phi.apply(g.lts.tensor().value(&t));
        report.record("φ preserves brackets", &t, sub(&lhs, &g2.lts.bracket(&pc[t[0]], &pc[t[1]], &pc[t[2]])));
    }
    Ok(report)
}

/// `Θ(χ) = (φ⊗φ)χ` on pairs and `Θ(f) = φ∘f∘(ψ⁻¹,…,ψ⁻¹)` on maps.
pub fn transport(w: &MorphismWitness, c: &ReynoldsCochain) -> Result<ReynoldsCochain> {
    match c {
        ReynoldsCochain::Pairs(chi) => Ok(ReynoldsCochain::Pairs(w.phi.mul(chi)?.mul(&w.phi.transpose())?)),
        ReynoldsCochain::Map(f) => {
            let inv = w.psi.inverse().ok_or(Error::NotInvertible { what: "ψ" })?;
            let ic: Vec<Vector> = (0..inv.cols()).map(|u| inv.column(u)).collect();
            let out = MultiMap::from_fn(f.arity(), inv.cols(), w.phi.rows(), |t| {
                let args: Vec<&[Rational]> = t.iter().map(|&u| ic[u].as_slice()).collect();
                w.phi.apply(&f.eval(&args).expect("shapes match"))
            });
            Ok(ReynoldsCochain::Map(out))
        }
    }
}

/// `Θ∘Λ_T = Λ_T'∘Θ` on a basis of the given level.
pub fn transport_commutes(g: &GenReynolds, g2: &GenReynolds, w: &MorphismWitness, level: usize, budget: Budget) -> Result<Report> {
    let mut report = Report::new(format!("transport commutes with the differential at level {level}"));
    let basis: Vec<ReynoldsCochain> = if level == 0 {
        let dl = g.dim_l();
        Tuples::new(2, dl)
            .map(|p| {
                let mut chi = Matrix::zeros(dl, dl);
                chi.set(p[0], p[1], int(1));
                ReynoldsCochain::Pairs(chi)
            })
            .collect()
    } else {
        ReynoldsComplex::new(g, budget).basis(level)?
    };
    for (i, c) in basis.iter().enumerate() {
        let left = transport(w, &lambda_t(g, c)?)?;
        let right = lambda_t(g2, &transport(w, c)?)?;
        let (ReynoldsCochain::Map(a), ReynoldsCochain::Map(b)) = (left, right) else {
            unreachable!("the differential lands in maps")
        };
        report.record("cochain map identity", &[i], a.sub(&b)?.coeffs().to_vec());
    }
    Ok(report)
}

/// A generalized Reynolds operator for a Lie algebra: `T: M → L` with
/// `[Tu,Tv] = T(ρ(Tu)v − ρ(Tv)u + H(Tu,Tv))` for a Lie 2-cocycle `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieGenReynolds {
    pub lie: LieAlg,
    pub rho: LieRep,
    pub h: MultiMap,
    pub t: Matrix,
}

impl LieGenReynolds {
    pub fn new(lie: LieAlg, rho: LieRep, h: MultiMap, t: Matrix) -> Result<Self> {
        let (dl, dm) = (lie.dim(), rho.dim_m());
        if rho.dim_l() != dl || h.arity() != 2 || h.dim_in() != dl || h.dim_out() != dm || t.rows() != dl || t.cols() != dm {
            return Err(Error::Invalid("inconsistent shapes for a Lie generalized Reynolds operator".into()));
        }
        Ok(LieGenReynolds { lie, rho, h, t })
    }
}

pub fn lie_generalized_reynolds_residual(g: &LieGenReynolds) -> Report {
    let dm = g.rho.dim_m();
    let tc: Vec<Vector> = (0..dm).map(|u| g.t.column(u)).collect();
    let mut report = Report::new("Lie generalized Reynolds operator");
    for p in Tuples::new(2, dm) {
        let (u, v) = (p[0], p[1]);
        let lhs = g.lie.bracket(&tc[u], &tc[v]);
        let mut inner = g.rho.rho(&tc[u], &unit_vector(dm, v));
        sub_assign(&mut inner, &g.rho.rho(&tc[v], &unit_vector(dm, u)));
        add_assign(&mut inner, &g.h.eval(&[&tc[u], &tc[v]]).expect("shapes checked"));
        report.record("Lie generalized Reynolds identity", &p, sub(&lhs, &g.t.apply(&inner)));
    }
    report
}

pub fn check_lie_generalized_reynolds(g: &LieGenReynolds) -> Result<Report> {
    require(check_lie(&g.lie), "not a Lie algebra")?;
    require(check_lie_rep(&g.lie, &g.rho)?, "not a Lie representation")?;
    require(check_lie_two_cocycle(&g.lie, &g.rho, &g.h)?, "H is not a Lie 2-cocycle")?;
    Ok(lie_generalized_reynolds_residual(g))
}

/// The same `T` on the induced triple system, representation `ρ(y)ρ(x)`
/// and 3-cocycle `H([x,y],z) − ρ(z)H(x,y)`.
pub fn lie_to_lts_operator(g: &LieGenReynolds) -> Result<GenReynolds> {
    let lts = lie_to_lts_unchecked(&g.lie);
    let rep = lie_rep_to_lts_rep_unchecked(&g.rho);
    let omega = lie_two_cocycle_to_three_cochain(&g.lie, &g.rho, &g.h);
    GenReynolds::new(lts, rep, omega, g.t.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lts::lie_to_lts;

    fn witt(n: usize) -> LieAlg {
        let d = n + 1;
        LieAlg::new(MultiMap::from_fn(2, d, d, |t| {
            let mut v = zero_vector(d);
            if t[0] + t[1] <= n {
                v[t[0] + t[1]] = int(t[0] as i64 - t[1] as i64);
            }
            v
        }))
        .unwrap()
    }

    fn witt_r(n: usize, lambda: &Rational) -> Matrix {
        let entries: Vec<Rational> = (0..=n).map(|m| -(lambda * int(m as i64 + 1)).recip()).collect();
        Matrix::diagonal(&entries)
    }

    fn witt_embedding(n: usize) -> GenReynolds {
        let lam = int(1);
        let op = WeightedReynolds::on_lie(witt(n), witt_r(n, &lam), lam).unwrap();
        embed_weighted(&weight_doubling(&op).unwrap()).unwrap()
    }

    #[test]
    fn witt_lie_operator_and_spot_value() {
        let lam = int(1);
        let op = WeightedReynolds::on_lie(witt(3), witt_r(3, &lam), lam).unwrap();
        assert!(check_weighted_reynolds(&op).unwrap().passed());
        let g = witt(3);
        let r = &op.r;
        let lhs = g.bracket(&r.column(0), &r.column(1));
        assert_eq!(lhs, vec![int(0), rat(-1, 2), int(0), int(0)]);
    }

    #[test]
    fn zero_operator_passes() {
        let l = lie_to_lts(&witt(3)).unwrap();
        let op = WeightedReynolds::on_lts(l, Matrix::zeros(4, 4), rat(3, 5)).unwrap();
        assert!(check_weighted_reynolds(&op).unwrap().passed());
        assert!(descended_bracket_tensor(&op).unwrap().is_zero());
        assert!(WeightedReynolds::on_lie(witt(2), Matrix::zeros(3, 3), int(0)).is_err());
    }

    #[test]
    fn doubling_and_descent() {
        let lam = int(1);
        let op = WeightedReynolds::on_lie(witt(3), witt_r(3, &lam), lam).unwrap();
        let lts_op = weight_doubling(&op).unwrap();
        assert_eq!(lts_op.weight, int(2));
        assert!(check_weighted_reynolds(&lts_op).unwrap().passed());
        let Carrier::Lts(l) = &lts_op.carrier else { unreachable!() };
        let r = &lts_op.r;
        assert_eq!(l.bracket(&r.column(0), &r.column(1), &r.column(2)), vec![int(0), int(0), int(0), rat(-1, 6)]);
        let desc = descend_bracket(&lts_op).unwrap();
        assert!(check_lts(&desc).passed());
        assert!(descended_morphism_check(&lts_op, &desc).unwrap().passed());
        let again = WeightedReynolds::on_lts(desc, lts_op.r.clone(), lts_op.weight.clone()).unwrap();
        assert!(check_weighted_reynolds(&again).unwrap().passed());
    }

    #[test]
    fn identity_operator_descends_to_scaled_bracket() {
        let l = lie_to_lts(&witt(3)).unwrap();
        let op = WeightedReynolds::on_lts(l.clone(), Matrix::identity(4), int(-3)).unwrap();
        assert!(descended_bracket_tensor(&op).unwrap().is_zero());
        assert!(!weighted_reynolds_identity(&op).passed());
        let op = WeightedReynolds::on_lts(l.clone(), Matrix::identity(4), int(-2)).unwrap();
        assert!(weighted_reynolds_identity(&op).passed());
        assert_eq!(&descended_bracket_tensor(&op).unwrap(), l.tensor());
    }

    #[test]
    fn embedding_graph_and_induced_bracket() {
        let g = witt_embedding(3);
        assert!(check_generalized_reynolds(&g).unwrap().passed());
        assert!(graph_subalgebra_check(&g).passed());
        let ind = induced_bracket(&g).unwrap();
        assert!(check_lts(&ind).passed());
        assert!(t_morphism_check(&g, &ind).passed());
        let zero = g.with_t(Matrix::zeros(4, 4)).unwrap();
        assert!(generalized_reynolds_residual(&zero).passed());
        assert!(induced_bracket_tensor(&zero).is_zero());
    }

    #[test]
    fn induced_rep_and_d_t() {
        let g = witt_embedding(3);
        let ind = induced_bracket(&g).unwrap();
        let rep = induced_rep_theta_t(&g).unwrap();
        assert!(check_rep(&ind, &rep).unwrap().passed());
        let tc = g.t_columns();
        for p in Tuples::new(3, 4) {
            let x = unit_vector(4, p[2]);
            let expected = rep.d(&unit_vector(4, p[0]), &unit_vector(4, p[1]), &x);
            assert_eq!(d_t_apply(&g, &tc, p[0], p[1], &x), expected);
        }
    }

    #[test]
    fn partial_t_examples() {
        let g = witt_embedding(3);
        let mut diag = Matrix::zeros(4, 4);
        diag.set(2, 2, int(1));
        assert!(partial_t(&g, &diag).unwrap().is_zero());
        let mut chi = Matrix::zeros(4, 4);
        chi.set(0, 1, int(1));
        let c = partial_t(&g, &chi).unwrap();
        assert!(!c.is_zero());
        assert!(lambda_t_map(&g, &c).unwrap().is_zero());
        assert_eq!(partial_t(&g, &skew_projection(&chi)).unwrap(), c);
    }

    #[test]
    fn lambda_matches_induced_pair_and_level_one_form() {
        let g = witt_embedding(3);
        for k in 0..16 {
            let f = MultiMap::from_fn(1, 4, 4, |t| {
                let mut v = zero_vector(4);
                v[(t[0] * 3 + k) % 4] = rat((k + t[0]) as i64 - 5, 2);
                v
            });
            let a = lambda_t_map(&g, &f).unwrap();
            assert_eq!(a, lambda_t_via_induced_pair(&g, &f).unwrap());
            assert_eq!(a, level_one_closedness(&g, &f).unwrap());
        }
    }

    #[test]
    fn kappa_for_arbitrary_cochains() {
        let l = lie_to_lts(&witt(3)).unwrap();
        let r = regular_rep_unchecked(&l);
        let h = l.tensor().scale(&int(2));
        assert!(kappa_twist_check(&l, &r, &h, &Matrix::zeros(4, 4)).unwrap().passed());
        assert!(kappa_twist_check(&l, &r, &h, &Matrix::identity(4)).unwrap().passed());
    }

    #[test]
    fn identity_witness_and_transport() {
        let g = witt_embedding(3);
        let w = MorphismWitness { phi: Matrix::identity(4), psi: Matrix::identity(4) };
        assert!(morphism_check(&g, &g, &w).unwrap().passed());
        for level in 0..3 {
            assert!(transport_commutes(&g, &g, &w, level, Budget::default()).unwrap().passed());
        }
    }

    #[test]
    fn inverse_construction_passes() {
        let l = lie_to_lts(&witt(3)).unwrap();
        let r = regular_rep_unchecked(&l);
        let g = inverse_construction(&l, &r, &Matrix::identity(4)).unwrap();
        assert!(check_generalized_reynolds(&g).unwrap().passed());
    }

    #[test]
    fn abelian_zero_operator_cohomology() {
        let g = GenReynolds::new(Lts::abelian(2), Rep::zero(2, 3), MultiMap::zero(3, 2, 3), Matrix::zeros(2, 3)).unwrap();
        let c = ReynoldsComplex::new(&g, Budget::default());
        let h1 = c.cohomology_dims(1).unwrap();
        assert_eq!(h1.cohomology, 6);
    }
}
