//! The Yamaguti cochain complex of a Lie triple system with coefficients in
//! a representation.
//!
//! Levels follow [`crate::mlin`]: level `n` holds cochains of arity `2n+1`.
//! The coboundary raises the arity by two.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{axpy, int, zero_vector, Echelon, Matrix, Rational, Vector};
use crate::lts::{Lts, Rep};
use crate::mlin::{ambient_size, cochain_space_basis, constraint_residual, Budget, MultiMap, Tuples};
use crate::report::Report;

fn sign(exp: usize) -> Rational {
    if exp.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn check_pair(l: &Lts, m: &Rep, psi: &MultiMap) -> Result<()> {
    if m.dim_l() != l.dim() {
        return Err(Error::DimensionMismatch { what: "representation base", expected: l.dim(), found: m.dim_l() });
    }
    if psi.dim_in() != l.dim() || psi.dim_out() != m.dim_m() {
        return Err(Error::DimensionMismatch { what: "cochain dimensions", expected: l.dim(), found: psi.dim_in() });
    }
    if psi.arity().is_multiple_of(2) {
        return Err(Error::Invalid(format!("cochains have odd arity, got {}", psi.arity())));
    }
    Ok(())
}

/// The coboundary of a cochain of arity `2n−1`, evaluated on
/// `(x_1, …, x_{2n+1})` as
///
/// ```text
///   θ(x_{2n}, x_{2n+1}) ψ(x_1..x_{2n−1}) − θ(x_{2n−1}, x_{2n+1}) ψ(x_1..x_{2n−2}, x_{2n})
/// + Σ_k (−1)^{n+k} D(x_{2k−1}, x_{2k}) ψ(.. x̂_{2k−1}, x̂_{2k} ..)
/// + Σ_k Σ_{j>2k} (−1)^{n+k+1} ψ(.. x̂_{2k−1}, x̂_{2k} .. [x_{2k−1}, x_{2k}, x_j] ..)
/// ```
///
/// The input is not required to satisfy the cochain conditions; see
/// [`delta`] for the checked version.
pub fn delta_unchecked(l: &Lts, m: &Rep, psi: &MultiMap) -> Result<MultiMap> {
    check_pair(l, m, psi)?;
    let n = psi.arity().div_ceil(2);
    let out_arity = 2 * n + 1;
    let d = l.dim();
    let dm = m.dim_m();
    let one = int(1);
    let minus = int(-1);
    Ok(MultiMap::from_fn_par(out_arity, d, dm, |x| {
        let mut acc = zero_vector(dm);
        m.add_theta(&mut acc, &one, x[2 * n - 1], x[2 * n], psi.value(&x[..2 * n - 1]));
        let mut args = x[..2 * n - 2].to_vec();
        args.push(x[2 * n - 1]);
        m.add_theta(&mut acc, &minus, x[2 * n - 2], x[2 * n], psi.value(&args));
        for k in 1..=n {
            let (a, b) = (x[2 * k - 2], x[2 * k - 1]);
            let mut rest: Vec<usize> = x[..2 * k - 2].to_vec();
            rest.extend_from_slice(&x[2 * k..]);
            m.add_d(&mut acc, &sign(n + k), a, b, psi.value(&rest));
            let s = sign(n + k + 1);
            for j in 2 * k..=2 * n {
                let pos = j - 2;
                let saved = rest[pos];
                for (q, c) in l.bracket_basis(a, b, x[j]) {
                    rest[pos] = *q;
                    axpy(&mut acc, &(&s * c), psi.value(&rest));
                }
                rest[pos] = saved;
            }
        }
        acc
    }))
}

/// Coboundary of a cochain that satisfies the cochain conditions.
pub fn delta(l: &Lts, m: &Rep, psi: &MultiMap) -> Result<MultiMap> {
    check_pair(l, m, psi)?;
    let level = (psi.arity() - 1) / 2;
    let check = constraint_residual(psi, level)?;
    if let Some((what, tuple, out, value)) = check.first_violation {
        return Err(Error::Invalid(format!(
            "input violates the cochain condition ({what}) at {tuple:?}, output {out}: {value}"
        )));
    }
    delta_unchecked(l, m, psi)
}

/// `D(x1,x2)φ(x3) − θ(x1,x3)φ(x2) + θ(x2,x3)φ(x1) − φ([x1,x2,x3])`, written
/// out for 1-cochains.
pub fn delta1(l: &Lts, m: &Rep, phi: &MultiMap) -> Result<MultiMap> {
    check_pair(l, m, phi)?;
    if phi.arity() != 1 {
        return Err(Error::DimensionMismatch { what: "1-cochain arity", expected: 1, found: phi.arity() });
    }
    let d = l.dim();
    let dm = m.dim_m();
    let one = int(1);
    Ok(MultiMap::from_fn(3, d, dm, |t| {
        let (x1, x2, x3) = (t[0], t[1], t[2]);
        let mut acc = zero_vector(dm);
        m.add_d(&mut acc, &one, x1, x2, phi.value(&[x3]));
        m.add_theta(&mut acc, &-&one, x1, x3, phi.value(&[x2]));
        m.add_theta(&mut acc, &one, x2, x3, phi.value(&[x1]));
        for (k, c) in l.bracket_basis(x1, x2, x3) {
            axpy(&mut acc, &-c, phi.value(&[*k]));
        }
        acc
    }))
}

/// Checks `H(x,x,y) = 0`, the cyclic identity and the long 3-cocycle
/// identity
///
/// ```text
/// H(x1,x2,[y1,y2,y3]) + D(x1,x2)H(y1,y2,y3) − H([x1,x2,y1],y2,y3) − H(y1,[x1,x2,y2],y3)
///   = H(y1,y2,[x1,x2,y3]) + θ(y2,y3)H(x1,x2,y1) − θ(y1,y3)H(x1,x2,y2) + D(y1,y2)H(x1,x2,y3)
/// ```
///
/// on all basis tuples.
pub fn check_three_cocycle(l: &Lts, m: &Rep, h: &MultiMap) -> Result<Report> {
    check_pair(l, m, h)?;
    if h.arity() != 3 {
        return Err(Error::DimensionMismatch { what: "3-cochain arity", expected: 3, found: h.arity() });
    }
    let d = l.dim();
    let dm = m.dim_m();
    let mut report = Report::new("3-cocycle");
    for t in Tuples::new(3, d) {
        let (a, b, c) = (t[0], t[1], t[2]);
        if a <= b {
            let mut r = h.value(&[a, b, c]).to_vec();
            crate::exactlin::add_assign(&mut r, h.value(&[b, a, c]));
            report.record("skew H(x,x,y)=0", &t, r);
        }
    }
    for t in Tuples::new(3, d) {
        let (a, b, c) = (t[0], t[1], t[2]);
        let mut r = h.value(&[a, b, c]).to_vec();
        crate::exactlin::add_assign(&mut r, h.value(&[b, c, a]));
        crate::exactlin::add_assign(&mut r, h.value(&[c, a, b]));
        report.record("cyclic identity", &t, r);
    }
    let one = int(1);
    let minus = int(-1);
    let parts: Vec<Report> = {
        use rayon::prelude::*;
        (0..d)
            .into_par_iter()
            .map(|x1| {
                let mut part = Report::new("");
                for rest in Tuples::new(4, d) {
                    let (x2, y1, y2, y3) = (rest[0], rest[1], rest[2], rest[3]);
                    let mut r = zero_vector(dm);
                    for (k, c) in l.bracket_basis(y1, y2, y3) {
                        axpy(&mut r, c, h.value(&[x1, x2, *k]));
                    }
                    m.add_d(&mut r, &one, x1, x2, h.value(&[y1, y2, y3]));
                    for (k, c) in l.bracket_basis(x1, x2, y1) {
                        axpy(&mut r, &-c, h.value(&[*k, y2, y3]));
                    }
                    for (k, c) in l.bracket_basis(x1, x2, y2) {
                        axpy(&mut r, &-c, h.value(&[y1, *k, y3]));
                    }
                    for (k, c) in l.bracket_basis(x1, x2, y3) {
                        axpy(&mut r, &-c, h.value(&[y1, y2, *k]));
                    }
                    m.add_theta(&mut r, &minus, y2, y3, h.value(&[x1, x2, y1]));
                    m.add_theta(&mut r, &one, y1, y3, h.value(&[x1, x2, y2]));
                    m.add_d(&mut r, &minus, y1, y2, h.value(&[x1, x2, y3]));
                    part.record("long cocycle identity", &[x1, x2, y1, y2, y3], r);
                }
                part
            })
            .collect()
    };
    report.absorb(Report::collect("", parts));
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CohomologyDims {
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

/// A Lie triple system with a representation, viewed as a cochain complex.
#[derive(Debug, Clone, Copy)]
pub struct YamagutiComplex<'a> {
    pub lts: &'a Lts,
    pub rep: &'a Rep,
    pub budget: Budget,
}

impl<'a> YamagutiComplex<'a> {
    pub fn new(lts: &'a Lts, rep: &'a Rep, budget: Budget) -> Result<Self> {
        if rep.dim_l() != lts.dim() {
            return Err(Error::DimensionMismatch { what: "representation base", expected: lts.dim(), found: rep.dim_l() });
        }
        Ok(YamagutiComplex { lts, rep, budget })
    }

    pub fn delta(&self, psi: &MultiMap) -> Result<MultiMap> {
        delta(self.lts, self.rep, psi)
    }

    pub fn is_cocycle(&self, psi: &MultiMap) -> Result<bool> {
        Ok(self.delta(psi)?.is_zero())
    }

    /// Images under the coboundary of the cochain basis at `level`, as a
    /// dense matrix with one column per basis element.
    fn image_columns(&self, level: usize) -> Result<(Vec<MultiMap>, Vec<Vector>)> {
        let (d, dm) = (self.lts.dim(), self.rep.dim_m());
        let basis = cochain_space_basis(d, dm, level, self.budget)?;
        let next = ambient_size(2 * level + 3, d, dm);
        self.budget.admit(|| format!("coboundary matrix at level {level}"), next.saturating_mul(basis.len() as u128))?;
        let elements: Vec<MultiMap> = basis.elements().collect();
        let mut columns = Vec::with_capacity(elements.len());
        for b in &elements {
            columns.push(delta_unchecked(self.lts, self.rep, b)?.coeffs().to_vec());
        }
        Ok((elements, columns))
    }

    fn rank_of(columns: Vec<Vector>, width: usize) -> usize {
        let mut e = Echelon::new(width);
        for c in columns {
            e.insert(c);
        }
        e.rank()
    }

    /// Columns are the cochain basis at `level`, in ambient coordinates.
    pub fn cochain_basis_matrix(&self, level: usize) -> Result<Matrix> {
        let basis = cochain_space_basis(self.lts.dim(), self.rep.dim_m(), level, self.budget)?;
        let columns: Vec<Vector> = basis.elements().map(|b| b.coeffs().to_vec()).collect();
        Matrix::from_columns(basis.ambient_dim() as usize, &columns)
    }

    /// The coboundary from arity `2·level+1` to `2·level+3` on the whole
    /// ambient space, one column per coefficient.
    pub fn coboundary_matrix(&self, level: usize) -> Result<Matrix> {
        let (d, dm) = (self.lts.dim(), self.rep.dim_m());
        let (cols, rows) = (ambient_size(2 * level + 1, d, dm), ambient_size(2 * level + 3, d, dm));
        self.budget.admit(|| format!("coboundary matrix at level {level}"), rows.saturating_mul(cols))?;
        let mut columns = Vec::with_capacity(cols as usize);
        for c in 0..cols as usize {
            let mut coeffs = zero_vector(cols as usize);
            coeffs[c] = int(1);
            let unit = MultiMap::from_coeffs(2 * level + 1, d, dm, coeffs)?;
            columns.push(delta_unchecked(self.lts, self.rep, &unit)?.coeffs().to_vec());
        }
        Matrix::from_columns(rows as usize, &columns)
    }

    pub fn cohomology_dims(&self, level: usize) -> Result<CohomologyDims> {
        let (d, dm) = (self.lts.dim(), self.rep.dim_m());
        let (elements, columns) = self.image_columns(level)?;
        let width = ambient_size(2 * level + 3, d, dm) as usize;
        let cocycles = elements.len() - Self::rank_of(columns, width);
        let coboundaries = if level == 0 {
            0
        } else {
            let (_, prev) = self.image_columns(level - 1)?;
            Self::rank_of(prev, ambient_size(2 * level + 1, d, dm) as usize)
        };
        Ok(CohomologyDims { cocycles, coboundaries, cohomology: cocycles - coboundaries })
    }

    /// A preimage of `psi` under the coboundary, if there is one.
    pub fn is_coboundary(&self, psi: &MultiMap) -> Result<Option<MultiMap>> {
        check_pair(self.lts, self.rep, psi)?;
        let level = (psi.arity() - 1) / 2;
        if level == 0 {
            return Err(Error::Invalid("the complex starts at 1-cochains; nothing maps into level 0".into()));
        }
        let (elements, columns) = self.image_columns(level - 1)?;
        let rows = psi.coeffs().len();
        let a = Matrix::from_columns(rows, &columns)?;
        let Some(x) = a.solve(psi.coeffs())? else {
            return Ok(None);
        };
        let mut pre = MultiMap::zero(2 * level - 1, psi.dim_in(), psi.dim_out());
        for (c, b) in x.iter().zip(&elements) {
            if !c.is_zero() {
                pre.add_scaled(c, b)?;
            }
        }
        Ok(Some(pre))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, unit_vector};
    use crate::lts::{lie_to_lts, regular_rep, LieAlg};

    fn witt_pair(n: usize) -> (Lts, Rep) {
        let d = n + 1;
        let g = LieAlg::new(MultiMap::from_fn(2, d, d, |t| {
            let mut v = zero_vector(d);
            if t[0] + t[1] <= n {
                v[t[0] + t[1]] = int(t[0] as i64 - t[1] as i64);
            }
            v
        }))
        .unwrap();
        let l = lie_to_lts(&g).unwrap();
        let r = regular_rep(&l).unwrap();
        (l, r)
    }

    #[test]
    fn zero_and_abelian() {
        let (l, r) = witt_pair(3);
        assert!(delta(&l, &r, &MultiMap::zero(1, 4, 4)).unwrap().is_zero());
        let la = Lts::abelian(2);
        let ra = Rep::zero(2, 1);
        let psi = MultiMap::from_fn(1, 2, 1, |t| vec![int(t[0] as i64 + 1)]);
        assert!(delta(&la, &ra, &psi).unwrap().is_zero());
    }

    #[test]
    fn identity_coboundary_on_witt() {
        let (l, r) = witt_pair(3);
        let id = MultiMap::from_matrix(&Matrix::identity(4));
        let out = delta(&l, &r, &id).unwrap();
        assert_eq!(out.value(&[0, 1, 2]), &unit_vector(4, 3).iter().map(|x| x * int(2)).collect::<Vec<_>>()[..]);
        assert_eq!(out, delta1(&l, &r, &id).unwrap());
    }

    #[test]
    fn coboundary_matrices_square_to_zero() {
        let (l, r) = witt_pair(1);
        let c = YamagutiComplex::new(&l, &r, Budget::default()).unwrap();
        for level in 0..2 {
            let first = c.coboundary_matrix(level).unwrap().mul(&c.cochain_basis_matrix(level).unwrap()).unwrap();
            assert!(c.coboundary_matrix(level + 1).unwrap().mul(&first).unwrap().is_zero(), "level {level}");
        }
    }

    #[test]
    fn input_conditions_are_enforced() {
        let (l, r) = witt_pair(2);
        let mut bad = MultiMap::zero(3, 3, 3);
        bad.set(&[0, 0, 1], 0, int(1));
        assert!(delta(&l, &r, &bad).is_err());
    }

    #[test]
    fn scaled_bracket_is_a_three_cocycle() {
        let (l, r) = witt_pair(3);
        assert!(check_three_cocycle(&l, &r, &MultiMap::zero(3, 4, 4)).unwrap().passed());
        let h = l.tensor().scale(&int(2));
        assert!(check_three_cocycle(&l, &r, &h).unwrap().passed());
        let mut sym = MultiMap::zero(3, 4, 4);
        sym.set(&[1, 1, 0], 2, rat(1, 2));
        let report = check_three_cocycle(&l, &r, &sym).unwrap();
        assert_eq!(report.first_violation().unwrap().check, "skew H(x,x,y)=0");
    }

    #[test]
    fn long_identity_is_minus_the_coboundary() {
        let (l, r) = witt_pair(3);
        let basis = cochain_space_basis(4, 4, 1, Budget::default()).unwrap();
        for (i, h) in basis.elements().enumerate().step_by(7) {
            let is_cocycle = delta(&l, &r, &h).unwrap().is_zero();
            assert_eq!(is_cocycle, check_three_cocycle(&l, &r, &h).unwrap().passed(), "basis element {i}");
        }
    }

    #[test]
    fn abelian_plane_cohomology() {
        let l = Lts::abelian(2);
        let r = Rep::zero(2, 1);
        let c = YamagutiComplex::new(&l, &r, Budget::default()).unwrap();
        let h1 = c.cohomology_dims(0).unwrap();
        let h3 = c.cohomology_dims(1).unwrap();
        assert_eq!((h1.cocycles, h1.coboundaries, h1.cohomology), (2, 0, 2));
        assert_eq!((h3.cocycles, h3.coboundaries, h3.cohomology), (2, 0, 2));
        let mut psi = MultiMap::zero(3, 2, 1);
        psi.set(&[0, 1, 0], 0, int(1));
        psi.set(&[1, 0, 0], 0, int(-1));
        assert!(c.is_cocycle(&psi).unwrap());
        assert!(c.is_coboundary(&psi).unwrap().is_none());
    }

    #[test]
    fn coboundaries_have_preimages() {
        let (l, r) = witt_pair(3);
        let c = YamagutiComplex::new(&l, &r, Budget::default()).unwrap();
        let eta = MultiMap::from_fn(1, 4, 4, |t| {
            let mut v = zero_vector(4);
            v[(t[0] + 1) % 4] = rat(t[0] as i64 + 1, 3);
            v
        });
        let psi = c.delta(&eta).unwrap();
        assert!(c.is_cocycle(&psi).unwrap());
        let pre = c.is_coboundary(&psi).unwrap().unwrap();
        assert_eq!(c.delta(&pre).unwrap(), psi);
        let zero = MultiMap::zero(3, 4, 4);
        assert!(c.is_coboundary(&zero).unwrap().unwrap().is_zero());
    }
}
