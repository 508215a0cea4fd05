//! Truncated formal deformations `T_λ = T_0 + λT_1 + … + λⁿTₙ` of a
//! generalized Reynolds operator, their obstruction and extension, and
//! equivalences between them.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{add_assign, axpy, int, is_zero_vector, sub_assign, unit_vector, zero_vector, Matrix, Vector};
use crate::mlin::{Budget, MultiMap, Tuples};
use crate::report::Report;
use crate::reynolds::{lambda_t, partial_t, GenReynolds, ReynoldsCochain, ReynoldsComplex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deformation {
    pub base: GenReynolds,
    /// `terms[0]` is the base operator.
    pub terms: Vec<Matrix>,
}

impl Deformation {
    /// `T_λ = T + Σ_{i≥1} λ^i higher[i−1]`.
    pub fn new(base: GenReynolds, higher: Vec<Matrix>) -> Result<Self> {
        for m in &higher {
            if m.rows() != base.dim_l() || m.cols() != base.dim_m() {
                return Err(Error::DimensionMismatch { what: "deformation term", expected: base.dim_l() * base.dim_m(), found: m.rows() * m.cols() });
            }
        }
        let mut terms = vec![base.t.clone()];
        terms.extend(higher);
        Ok(Deformation { base, terms })
    }

    /// `T_λ = T` viewed as an order-`n` deformation.
    pub fn trivial(base: GenReynolds, order: usize) -> Self {
        let zero = Matrix::zeros(base.dim_l(), base.dim_m());
        let terms = std::iter::once(base.t.clone()).chain(std::iter::repeat_n(zero, order)).collect();
        Deformation { base, terms }
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn extended(&self, next: Matrix) -> Result<Self> {
        let mut higher = self.terms[1..].to_vec();
        higher.push(next);
        Deformation::new(self.base.clone(), higher)
    }
}

fn combos(parts: usize, total: usize, limit: usize) -> Vec<Vec<usize>> {
    fn go(parts: usize, total: usize, limit: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            if total <= limit {
                cur.push(total);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for i in 0..=total.min(limit) {
            cur.push(i);
            go(parts - 1, total - i, limit, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(parts, total, limit, &mut Vec::new(), &mut out);
    out
}

/// Coefficients of `λ^0 … λ^up_to` of
/// `[T_λu,T_λv,T_λw] − T_λ(D(T_λu,T_λv)w + θ(T_λv,T_λw)u − θ(T_λu,T_λw)v + H(T_λu,T_λv,T_λw))`.
pub fn residual_coefficients(d: &Deformation, up_to: usize) -> Vec<MultiMap> {
    let g = &d.base;
    let (dl, dm) = (g.dim_l(), g.dim_m());
    let top = d.order();
    let cols: Vec<Vec<Vector>> = (0..dm).map(|u| d.terms.iter().map(|t| t.column(u)).collect()).collect();
    let pairs: Vec<Vec<Vec<usize>>> = (0..=up_to).map(|s| combos(2, s, top)).collect();
    let triples: Vec<Vec<Vec<usize>>> = (0..=up_to).map(|s| combos(3, s, top)).collect();
    let width = up_to + 1;
    let all = MultiMap::from_fn_par(3, dm, width * dl, |x| {
        let (u, v, w) = (x[0], x[1], x[2]);
        let (cu, cv, cw) = (&cols[u], &cols[v], &cols[w]);
        let (eu, ev, ew) = (unit_vector(dm, u), unit_vector(dm, v), unit_vector(dm, w));
        let mut inner: Vec<Vector> = vec![zero_vector(dm); width];
        for (s, slot) in inner.iter_mut().enumerate() {
            for p in &pairs[s] {
                let (j, k) = (p[0], p[1]);
                add_assign(slot, &g.rep.d(&cu[j], &cv[k], &ew));
                add_assign(slot, &g.rep.theta(&cv[j], &cw[k], &eu));
                sub_assign(slot, &g.rep.theta(&cu[j], &cw[k], &ev));
            }
            for t in &triples[s] {
                if is_zero_vector(&cu[t[0]]) || is_zero_vector(&cv[t[1]]) || is_zero_vector(&cw[t[2]]) {
                    continue;
                }
                add_assign(slot, &g.h.eval(&[&cu[t[0]], &cv[t[1]], &cw[t[2]]]).expect("shapes"));
            }
        }
        let mut out = Vec::with_capacity(width * dl);
        for s in 0..width {
            let mut acc = zero_vector(dl);
            for t in &triples[s] {
                add_assign(&mut acc, &g.lts.bracket(&cu[t[0]], &cv[t[1]], &cw[t[2]]));
            }
            for a in 0..=s.min(top) {
                sub_assign(&mut acc, &d.terms[a].apply(&inner[s - a]));
            }
            out.extend(acc);
        }
        out
    });
    (0..width)
        .map(|s| {
            MultiMap::from_fn(3, dm, dl, |x| all.value(x)[s * dl..(s + 1) * dl].to_vec())
        })
        .collect()
}

/// Whether the coefficients of `λ^0 … λ^n` all vanish.
pub fn is_order_n(d: &Deformation) -> bool {
    residual_coefficients(d, d.order()).iter().all(|c| c.is_zero())
}

/// The first-order term, when there is one.
pub fn infinitesimal(d: &Deformation) -> Option<&Matrix> {
    d.terms.get(1)
}

/// The coefficient of `λ^{n+1}` with no term of degree `n+1`.
pub fn obstruction(d: &Deformation) -> Result<MultiMap> {
    let coeffs = residual_coefficients(d, d.order() + 1);
    if let Some((s, c)) = coeffs[..=d.order()].iter().enumerate().find(|(_, c)| !c.is_zero()) {
        let mut report = Report::new("order-n deformation");
        for (idx, v) in c.nonzero_values() {
            report.record(&format!("coefficient of λ^{s}"), &idx, v.to_vec());
        }
        return Err(Error::precondition("not a deformation of the stated order", report));
    }
    Ok(coeffs.into_iter().last().expect("n+2 coefficients"))
}

/// Relative sign between the obstruction and the differential of the next term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtensionSign {
    /// Solve `Λ_T(X) = −Obs`.
    Minus,
    /// Solve `Λ_T(X) = Obs`.
    Plus,
}

impl ExtensionSign {
    pub const BOTH: [ExtensionSign; 2] = [ExtensionSign::Minus, ExtensionSign::Plus];

    pub fn label(self) -> &'static str {
        match self {
            ExtensionSign::Minus => "minus",
            ExtensionSign::Plus => "plus",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionAttempt {
    pub sign: ExtensionSign,
    /// A solution of the linear system, if it has one.
    pub solution: Option<Matrix>,
    /// Whether appending the solution kills the `λ^{n+1}` coefficient.
    pub reverified: bool,
}

/// Solves `Λ_T(X) = ±Obs` for one sign and re-checks the appended deformation.
pub fn attempt_extension(d: &Deformation, sign: ExtensionSign, budget: Budget) -> Result<ExtensionAttempt> {
    let obs = obstruction(d)?;
    let target = match sign {
        ExtensionSign::Minus => obs.scale(&int(-1)),
        ExtensionSign::Plus => obs,
    };
    let complex = ReynoldsComplex::new(&d.base, budget);
    let solution = match complex.preimage(&target)? {
        Some(ReynoldsCochain::Map(x)) => Some(x.to_matrix()),
        Some(ReynoldsCochain::Pairs(_)) => unreachable!("preimages of 3-cochains are 1-cochains"),
        None => None,
    };
    let reverified = match &solution {
        Some(x) => is_order_n(&d.extended(x.clone())?),
        None => false,
    };
    Ok(ExtensionAttempt { sign, solution, reverified })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub next: Matrix,
    pub sign: ExtensionSign,
    pub extended: Deformation,
}

/// An extension to order `n+1`, trying the minus sign first.
pub fn is_extendable(d: &Deformation, budget: Budget) -> Result<Option<Extension>> {
    for sign in ExtensionSign::BOTH {
        let attempt = attempt_extension(d, sign, budget)?;
        if let (true, Some(next)) = (attempt.reverified, attempt.solution) {
            let extended = d.extended(next.clone())?;
            return Ok(Some(Extension { next, sign, extended }));
        }
    }
    Ok(None)
}

/// Whether the obstruction is closed under the differential.
pub fn obstruction_is_closed(d: &Deformation) -> Result<bool> {
    let obs = obstruction(d)?;
    Ok(lambda_t(&d.base, &ReynoldsCochain::Map(obs))?.is_zero())
}

/// `χ ∈ L∧L` (as a skew coefficient matrix) and the higher terms
/// `φ_i`, `ψ_i` for `i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub chi: Matrix,
    pub phis: Vec<Matrix>,
    pub psis: Vec<Matrix>,
}

impl EquivalenceWitness {
    pub fn trivial(dim_l: usize) -> Self {
        EquivalenceWitness { chi: Matrix::zeros(dim_l, dim_l), phis: Vec::new(), psis: Vec::new() }
    }
}

/// `x ↦ Σ χ_ij [e_i,e_j,x]`.
fn bracket_with_pair(g: &GenReynolds, chi: &Matrix) -> Matrix {
    let dl = g.dim_l();
    let cols: Vec<Vector> = (0..dl)
        .map(|x| {
            let mut out = zero_vector(dl);
            for i in 0..dl {
                for j in 0..dl {
                    let c = chi.get(i, j);
                    if !c.is_zero() {
                        axpy(&mut out, c, &g.lts.bracket(&unit_vector(dl, i), &unit_vector(dl, j), &unit_vector(dl, x)));
                    }
                }
            }
            out
        })
        .collect();
    Matrix::from_columns(dl, &cols).expect("square")
}

/// `u ↦ Σ χ_ij (D(e_i,e_j)u + H(e_i,e_j,Tu))`.
fn pair_action(g: &GenReynolds, chi: &Matrix) -> Matrix {
    let (dl, dm) = (g.dim_l(), g.dim_m());
    let one = int(1);
    let cols: Vec<Vector> = (0..dm)
        .map(|u| {
            let eu = unit_vector(dm, u);
            let tu = g.t.column(u);
            let mut out = zero_vector(dm);
            for i in 0..dl {
                for j in 0..dl {
                    let c = chi.get(i, j);
                    if c.is_zero() {
                        continue;
                    }
                    let mut part = zero_vector(dm);
                    g.rep.add_d(&mut part, &one, i, j, &eu);
                    add_assign(&mut part, &g.h.eval(&[&unit_vector(dl, i), &unit_vector(dl, j), &tu]).expect("shapes"));
                    axpy(&mut out, c, &part);
                }
            }
            out
        })
        .collect();
    Matrix::from_columns(dm, &cols).expect("square")
}

/// The coefficient lists of `φ_λ` and `ψ_λ` up to `λⁿ`.
fn witness_series(g: &GenReynolds, w: &EquivalenceWitness, order: usize) -> (Vec<Matrix>, Vec<Matrix>) {
    let (dl, dm) = (g.dim_l(), g.dim_m());
    let mut phis = vec![Matrix::identity(dl), bracket_with_pair(g, &w.chi)];
    let mut psis = vec![Matrix::identity(dm), pair_action(g, &w.chi)];
    for i in 2..=order {
        phis.push(w.phis.get(i - 2).cloned().unwrap_or_else(|| Matrix::zeros(dl, dl)));
        psis.push(w.psis.get(i - 2).cloned().unwrap_or_else(|| Matrix::zeros(dm, dm)));
    }
    phis.truncate(order + 1);
    psis.truncate(order + 1);
    (phis, psis)
}

/// The morphism conditions between `T_λ` and `T'_λ` for
/// `φ_λ = Id + λ[χ,−] + Σ λ^i φ_i` and
/// `ψ_λ = Id + λ(D(χ)(−) + H(χ,T−)) + Σ λ^i ψ_i`, coefficient by
/// coefficient up to `λⁿ`.
pub fn verify_equivalence(d: &Deformation, d2: &Deformation, w: &EquivalenceWitness) -> Result<Report> {
    let g = &d.base;
    let (dl, dm) = (g.dim_l(), g.dim_m());
    if d.order() != d2.order() || d2.base.dim_l() != dl || d2.base.dim_m() != dm {
        return Err(Error::Invalid("the two deformations must share shapes and order".into()));
    }
    if w.chi.rows() != dl || w.chi.cols() != dl || w.phis.iter().any(|m| m.rows() != dl || m.cols() != dl) || w.psis.iter().any(|m| m.rows() != dm || m.cols() != dm) {
        return Err(Error::Invalid("malformed equivalence witness".into()));
    }
    if w.chi.add(&w.chi.transpose())?.entries().iter().any(|x| !x.is_zero()) {
        return Err(Error::Invalid("χ must be skew".into()));
    }
    let n = d.order();
    let (phis, psis) = witness_series(g, w, n);
    let mut report = Report::new("equivalence of deformations");
    for s in 0..=n {
        let mut c1 = Matrix::zeros(dl, dm);
        for a in 0..=s {
            c1 = c1.add(&phis[a].mul(&d.terms[s - a])?)?.sub(&d2.terms[a].mul(&psis[s - a])?)?;
        }
        report.record(&format!("φT = T'ψ at λ^{s}"), &[s], c1.entries().to_vec());
    }
    for s in 0..=n {
        let triples = combos(3, s, n);
        for t in Tuples::new(2, dl) {
            let (x, y) = (t[0], t[1]);
            let px: Vec<Vector> = phis.iter().map(|p| p.column(x)).collect();
            let py: Vec<Vector> = phis.iter().map(|p| p.column(y)).collect();
            for u in 0..dm {
                let mut lhs = psis[s].apply(g.rep.theta_matrix(x, y).column(u).as_slice());
                for c in &triples {
                    sub_assign(&mut lhs, &g.rep.theta(&px[c[0]], &py[c[1]], &psis[c[2]].column(u)));
                }
                report.record(&format!("ψθ = θ(φ,φ)ψ at λ^{s}"), &[x, y, u], lhs);
            }
        }
        for t in Tuples::new(3, dl) {
            let cols: Vec<Vec<Vector>> = t.iter().map(|&i| phis.iter().map(|p| p.column(i)).collect()).collect();
            let mut c3 = psis[s].apply(g.h.value(&t));
            let mut br = phis[s].apply(g.lts.tensor().value(&t));
            for c in &triples {
                sub_assign(&mut c3, &g.h.eval(&[&cols[0][c[0]], &cols[1][c[1]], &cols[2][c[2]]])?);
                sub_assign(&mut br, &g.lts.bracket(&cols[0][c[0]], &cols[1][c[1]], &cols[2][c[2]]));
            }
            report.record(&format!("ψH = H(φ,φ,φ) at λ^{s}"), &t, c3);
            report.record(&format!("φ preserves brackets at λ^{s}"), &t, br);
        }
    }
    Ok(report)
}

/// Whether `T'_1 − T_1` is `∂_T` of some pair, returning the pair.
pub fn infinitesimal_class_check(d: &Deformation, d2: &Deformation) -> Result<Option<Matrix>> {
    let (Some(t1), Some(t1p)) = (infinitesimal(d), infinitesimal(d2)) else {
        return Err(Error::Invalid("both deformations need a first-order term".into()));
    };
    let diff = t1p.sub(t1)?;
    let dl = d.base.dim_l();
    let basis: Vec<(usize, usize)> = (0..dl).flat_map(|i| (i + 1..dl).map(move |j| (i, j))).collect();
    let mut cols = Vec::with_capacity(basis.len());
    for &(i, j) in &basis {
        let mut chi = Matrix::zeros(dl, dl);
        chi.set(i, j, int(1));
        chi.set(j, i, int(-1));
        cols.push(partial_t(&d.base, &chi)?.to_matrix().entries().to_vec());
    }
    let a = Matrix::from_columns(diff.entries().len(), &cols)?;
    Ok(a.solve(diff.entries())?.map(|x| {
        let mut chi = Matrix::zeros(dl, dl);
        for (c, &(i, j)) in x.iter().zip(&basis) {
            chi.set(i, j, c.clone());
            chi.set(j, i, -c.clone());
        }
        chi
    }))
}

/// `T'_1 − T_1 + ∂_T(χ)` for the witness pair: zero whenever the first-order
/// morphism condition holds.
pub fn first_order_class_residual(d: &Deformation, d2: &Deformation, chi: &Matrix) -> Result<Matrix> {
    let (Some(t1), Some(t1p)) = (infinitesimal(d), infinitesimal(d2)) else {
        return Err(Error::Invalid("both deformations need a first-order term".into()));
    };
    let p = partial_t(&d.base, chi)?.to_matrix();
    t1p.sub(t1)?.add(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, Rational};
    use crate::lts::{lie_to_lts, regular_rep_unchecked, LieAlg};

    fn witt_g() -> GenReynolds {
        let d = 4;
        let lie = LieAlg::new(MultiMap::from_fn(2, d, d, |t| {
            let mut v = zero_vector(d);
            if t[0] + t[1] <= 3 {
                v[t[0] + t[1]] = int(t[0] as i64 - t[1] as i64);
            }
            v
        }))
        .unwrap();
        let l = lie_to_lts(&lie).unwrap();
        let rep = regular_rep_unchecked(&l);
        let h = l.tensor().scale(&int(2));
        let e: Vec<Rational> = (0..4).map(|m| rat(-1, m + 1)).collect();
        GenReynolds::new(l, rep, h, Matrix::diagonal(&e)).unwrap()
    }

    #[test]
    fn trivial_deformation() {
        let d = Deformation::trivial(witt_g(), 2);
        assert!(is_order_n(&d));
        assert!(obstruction(&d).unwrap().is_zero());
        let ext = is_extendable(&d, Budget::default()).unwrap().unwrap();
        assert!(ext.next.is_zero());
    }

    #[test]
    fn first_coefficient_is_the_differential() {
        let g = witt_g();
        let t1 = Matrix::from_rows((0..4).map(|r| (0..4).map(|c| rat(r as i64 - c as i64, 3)).collect()).collect()).unwrap();
        let d = Deformation::new(g.clone(), vec![t1.clone()]).unwrap();
        let c = residual_coefficients(&d, 1);
        let ReynoldsCochain::Map(l) = lambda_t(&g, &ReynoldsCochain::Map(MultiMap::from_matrix(&t1))).unwrap() else { unreachable!() };
        assert_eq!(c[1], l);
    }

    #[test]
    fn gauged_infinitesimal_is_in_the_class() {
        let g = witt_g();
        let mut chi = Matrix::zeros(4, 4);
        chi.set(0, 1, int(1));
        chi.set(1, 0, int(-1));
        let t1 = partial_t(&g, &chi).unwrap().to_matrix();
        let d = Deformation::new(g.clone(), vec![t1]).unwrap();
        assert!(is_order_n(&d));
        let triv = Deformation::trivial(g.clone(), 1);
        assert!(infinitesimal_class_check(&d, &triv).unwrap().is_some());
        assert!(first_order_class_residual(&d, &triv, &chi).unwrap().is_zero());
        let same = verify_equivalence(&d, &d, &EquivalenceWitness::trivial(4)).unwrap();
        assert!(same.passed());
    }
}
