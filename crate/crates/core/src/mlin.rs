//! Dense multilinear maps and the constrained cochain subspaces.
//!
//! A [`MultiMap`] of arity `k` from `V` (dimension `dim_in`) to `W`
//! (dimension `dim_out`) stores its value on every basis tuple, tuples in
//! lexicographic order, each value expanded in the basis of `W`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{add_assign, axpy, int, is_zero_vector, zero_vector, Matrix, Rational, Vector};

pub const DEFAULT_BUDGET: usize = 2_000_000;

/// Upper bound on the number of coefficients a dense object may hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub usize);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn admit(&self, what: impl FnOnce() -> String, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            return Err(Error::ResourceExceeded { what: what(), needed, budget: self.0 });
        }
        Ok(())
    }
}

/// `dim_in^arity * dim_out` without overflow.
pub fn ambient_size(arity: usize, dim_in: usize, dim_out: usize) -> u128 {
    let mut n: u128 = dim_out as u128;
    for _ in 0..arity {
        n = n.saturating_mul(dim_in as u128);
    }
    n
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiMap {
    arity: usize,
    dim_in: usize,
    dim_out: usize,
    coeffs: Vec<Rational>,
}

impl std::fmt::Debug for MultiMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiMap(arity {}, {} -> {}) {{", self.arity, self.dim_in, self.dim_out)?;
        for (t, v) in self.nonzero_values() {
            let vals: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, " {t:?}: [{}]", vals.join(", "))?;
        }
        write!(f, " }}")
    }
}

impl MultiMap {
    pub fn zero(arity: usize, dim_in: usize, dim_out: usize) -> Self {
        let len = ambient_size(arity, dim_in, dim_out);
        MultiMap { arity, dim_in, dim_out, coeffs: vec![Rational::zero(); len as usize] }
    }

    /// Like [`MultiMap::zero`] but refuses sizes above the budget.
    pub fn zero_within(arity: usize, dim_in: usize, dim_out: usize, budget: Budget) -> Result<Self> {
        budget.admit(|| format!("arity-{arity} map {dim_in} -> {dim_out}"), ambient_size(arity, dim_in, dim_out))?;
        Ok(Self::zero(arity, dim_in, dim_out))
    }

    pub fn from_coeffs(arity: usize, dim_in: usize, dim_out: usize, coeffs: Vec<Rational>) -> Result<Self> {
        let expected = ambient_size(arity, dim_in, dim_out) as usize;
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch { what: "multilinear coefficients", expected, found: coeffs.len() });
        }
        Ok(MultiMap { arity, dim_in, dim_out, coeffs })
    }

    /// Fills every basis tuple from `f`, which must return `dim_out` entries.
    pub fn from_fn(arity: usize, dim_in: usize, dim_out: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let mut m = Self::zero(arity, dim_in, dim_out);
        for (flat, tuple) in Tuples::new(arity, dim_in).enumerate() {
            let v = f(&tuple);
            assert_eq!(v.len(), dim_out, "value of wrong length");
            m.coeffs[flat * dim_out..(flat + 1) * dim_out].clone_from_slice(&v);
        }
        m
    }

    /// Builds the values in parallel over the first argument; the result does
    /// not depend on scheduling.
    pub fn from_fn_par(arity: usize, dim_in: usize, dim_out: usize, f: impl Fn(&[usize]) -> Vector + Sync) -> Self {
        use rayon::prelude::*;
        if arity == 0 || dim_in == 0 {
            return Self::from_fn(arity, dim_in, dim_out, f);
        }
        let block = ambient_size(arity - 1, dim_in, 1) as usize;
        let chunks: Vec<Vec<Rational>> = (0..dim_in)
            .into_par_iter()
            .map(|first| {
                let mut out = Vec::with_capacity(block * dim_out);
                for rest in Tuples::new(arity - 1, dim_in) {
                    let mut tuple = Vec::with_capacity(arity);
                    tuple.push(first);
                    tuple.extend_from_slice(&rest);
                    let v = f(&tuple);
                    assert_eq!(v.len(), dim_out, "value of wrong length");
                    out.extend(v);
                }
                out
            })
            .collect();
        let coeffs = chunks.concat();
        MultiMap { arity, dim_in, dim_out, coeffs }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn flat_index(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity);
        tuple.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim_in);
            acc * self.dim_in + i
        })
    }

    /// Value on a basis tuple.
    pub fn value(&self, tuple: &[usize]) -> &[Rational] {
        let f = self.flat_index(tuple);
        &self.coeffs[f * self.dim_out..(f + 1) * self.dim_out]
    }

    pub fn value_mut(&mut self, tuple: &[usize]) -> &mut [Rational] {
        let f = self.flat_index(tuple);
        &mut self.coeffs[f * self.dim_out..(f + 1) * self.dim_out]
    }

    pub fn set(&mut self, tuple: &[usize], out: usize, value: Rational) {
        self.value_mut(tuple)[out] = value;
    }

    pub fn tuples(&self) -> Tuples {
        Tuples::new(self.arity, self.dim_in)
    }

    /// Basis tuples with a nonzero value, in lexicographic order.
    pub fn nonzero_values(&self) -> impl Iterator<Item = (Vec<usize>, &[Rational])> {
        self.tuples().map(|t| {
            let v = self.value(&t);
            (t, v)
        })
        .filter(|(_, v)| !is_zero_vector(v))
    }

    /// First nonzero coefficient as (tuple, output index).
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, usize)> {
        let pos = self.coeffs.iter().position(|x| !x.is_zero())?;
        let flat = pos / self.dim_out.max(1);
        Some((unflatten(flat, self.arity, self.dim_in), pos % self.dim_out.max(1)))
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval(&self, args: &[&[Rational]]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(Error::DimensionMismatch { what: "number of arguments", expected: self.arity, found: args.len() });
        }
        for a in args {
            if a.len() != self.dim_in {
                return Err(Error::DimensionMismatch { what: "argument length", expected: self.dim_in, found: a.len() });
            }
        }
        let mut out = zero_vector(self.dim_out);
        let supports: Vec<Vec<(usize, &Rational)>> =
            args.iter().map(|a| crate::exactlin::support(a).collect()).collect();
        let mut tuple = vec![0; self.arity];
        self.eval_rec(&supports, 0, &int(1), &mut tuple, &mut out);
        Ok(out)
    }

    fn eval_rec(
        &self,
        supports: &[Vec<(usize, &Rational)>],
        depth: usize,
        weight: &Rational,
        tuple: &mut Vec<usize>,
        out: &mut Vector,
    ) {
        if depth == self.arity {
            axpy(out, weight, self.value(tuple));
            return;
        }
        for (i, x) in &supports[depth] {
            tuple[depth] = *i;
            self.eval_rec(supports, depth + 1, &(weight * *x), tuple, out);
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coeffs)
    }

    fn check_same_shape(&self, other: &MultiMap) -> Result<()> {
        if (self.arity, self.dim_in, self.dim_out) != (other.arity, other.dim_in, other.dim_out) {
            return Err(Error::DimensionMismatch {
                what: "multilinear map shape",
                expected: self.coeffs.len(),
                found: other.coeffs.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiMap) -> Result<MultiMap> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        add_assign(&mut out.coeffs, &other.coeffs);
        Ok(out)
    }

    pub fn sub(&self, other: &MultiMap) -> Result<MultiMap> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        crate::exactlin::sub_assign(&mut out.coeffs, &other.coeffs);
        Ok(out)
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &Rational, other: &MultiMap) -> Result<()> {
        self.check_same_shape(other)?;
        axpy(&mut self.coeffs, s, &other.coeffs);
        Ok(())
    }

    pub fn scale(&self, s: &Rational) -> MultiMap {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c *= s;
        }
        out
    }

    /// An arity-1 map as the `dim_out x dim_in` matrix acting on columns.
    pub fn to_matrix(&self) -> Matrix {
        assert_eq!(self.arity, 1);
        let mut m = Matrix::zeros(self.dim_out, self.dim_in);
        for i in 0..self.dim_in {
            for (o, x) in self.value(&[i]).iter().enumerate() {
                m.set(o, i, x.clone());
            }
        }
        m
    }

    pub fn from_matrix(m: &Matrix) -> MultiMap {
        MultiMap::from_fn(1, m.cols(), m.rows(), |t| m.column(t[0]))
    }
}

pub fn unflatten(mut flat: usize, arity: usize, dim: usize) -> Vec<usize> {
    let mut t = vec![0; arity];
    for slot in (0..arity).rev() {
        t[slot] = flat % dim;
        flat /= dim;
    }
    t
}

/// All tuples in `{0..dim}^arity`, lexicographically.
#[derive(Debug, Clone)]
pub struct Tuples {
    dim: usize,
    next: Option<Vec<usize>>,
}

impl Tuples {
    pub fn new(arity: usize, dim: usize) -> Self {
        let next = if dim == 0 && arity > 0 { None } else { Some(vec![0; arity]) };
        Tuples { dim, next }
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut slot = succ.len();
        loop {
            if slot == 0 {
                break;
            }
            slot -= 1;
            succ[slot] += 1;
            if succ[slot] < self.dim {
                self.next = Some(succ);
                break;
            }
            succ[slot] = 0;
        }
        Some(current)
    }
}

/// First failing cochain condition, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintCheck {
    pub satisfied: bool,
    /// (condition, basis tuple, output index, offending value)
    pub first_violation: Option<(&'static str, Vec<usize>, usize, Rational)>,
}

/// Tests the two cochain conditions on the last three slots: vanishing on
/// a repeated pair, tested in polarized form `ψ(..,a,b,c) + ψ(..,b,a,c)`,
/// and the cyclic sum over the last three arguments.
pub fn constraint_residual(psi: &MultiMap, level: usize) -> Result<ConstraintCheck> {
    let arity = 2 * level + 1;
    if psi.arity() != arity {
        return Err(Error::DimensionMismatch { what: "cochain arity", expected: arity, found: psi.arity() });
    }
    if level == 0 {
        return Ok(ConstraintCheck { satisfied: true, first_violation: None });
    }
    let d = psi.dim_in();
    for tuple in Tuples::new(arity, d) {
        let (a, b, c) = (tuple[arity - 3], tuple[arity - 2], tuple[arity - 1]);
        let mut swapped = tuple.clone();
        swapped[arity - 3] = b;
        swapped[arity - 2] = a;
        let mut shift1 = tuple.clone();
        shift1[arity - 3..].copy_from_slice(&[b, c, a]);
        let mut shift2 = tuple.clone();
        shift2[arity - 3..].copy_from_slice(&[c, a, b]);
        for o in 0..psi.dim_out() {
            let skew = &psi.value(&tuple)[o] + &psi.value(&swapped)[o];
            if !skew.is_zero() {
                return Ok(ConstraintCheck { satisfied: false, first_violation: Some(("repeated pair", tuple, o, skew)) });
            }
            let cyclic = &psi.value(&tuple)[o] + &psi.value(&shift1)[o] + &psi.value(&shift2)[o];
            if !cyclic.is_zero() {
                return Ok(ConstraintCheck { satisfied: false, first_violation: Some(("cyclic sum", tuple, o, cyclic)) });
            }
        }
    }
    Ok(ConstraintCheck { satisfied: true, first_violation: None })
}

/// Constraint matrix of the last-three-slot conditions for a single output
/// coordinate, columns indexed by `{0..dim}^3`.
pub fn triple_constraint_matrix(dim: usize) -> Matrix {
    let col = |a: usize, b: usize, c: usize| (a * dim + b) * dim + c;
    let width = dim * dim * dim;
    let mut rows = Vec::new();
    for a in 0..dim {
        for b in a..dim {
            for c in 0..dim {
                let mut r = zero_vector(width);
                r[col(a, b, c)] += int(1);
                r[col(b, a, c)] += int(1);
                rows.push(r);
            }
        }
    }
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                let mut r = zero_vector(width);
                r[col(a, b, c)] += int(1);
                r[col(b, c, a)] += int(1);
                r[col(c, a, b)] += int(1);
                rows.push(r);
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(0, width);
    }
    Matrix::from_rows(rows).expect("rows share a width")
}

/// Basis of the cochains of arity `2n+1` satisfying both conditions.
///
/// The constraint matrix is block diagonal: one block per choice of the
/// leading `2n-2` arguments and output coordinate, all blocks equal to
/// [`triple_constraint_matrix`]. The basis below is exactly the canonical
/// kernel basis of the full matrix, assembled block by block.
#[derive(Debug, Clone)]
pub struct CochainSpaceBasis {
    pub level: usize,
    pub dim_in: usize,
    pub dim_out: usize,
    /// Sparse coefficient lists (flat coefficient index, value).
    elements: Vec<Vec<(usize, Rational)>>,
}

impl CochainSpaceBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn arity(&self) -> usize {
        2 * self.level + 1
    }

    pub fn ambient_dim(&self) -> u128 {
        ambient_size(self.arity(), self.dim_in, self.dim_out)
    }

    pub fn element(&self, index: usize) -> MultiMap {
        let mut m = MultiMap::zero(self.arity(), self.dim_in, self.dim_out);
        for (pos, x) in &self.elements[index] {
            m.coeffs[*pos] = x.clone();
        }
        m
    }

    pub fn elements(&self) -> impl Iterator<Item = MultiMap> + '_ {
        (0..self.len()).map(|i| self.element(i))
    }
}

pub fn cochain_space_basis(dim_in: usize, dim_out: usize, level: usize, budget: Budget) -> Result<CochainSpaceBasis> {
    let arity = 2 * level + 1;
    budget.admit(|| format!("cochains of arity {arity} on {dim_in} -> {dim_out}"), ambient_size(arity, dim_in, dim_out))?;
    let mut elements = Vec::new();
    if level == 0 {
        for pos in 0..dim_in * dim_out {
            elements.push(vec![(pos, int(1))]);
        }
        return Ok(CochainSpaceBasis { level, dim_in, dim_out, elements });
    }
    let block_kernel = triple_constraint_matrix(dim_in).kernel_basis();
    let triple = dim_in * dim_in * dim_in;
    let prefixes = ambient_size(arity - 3, dim_in, 1) as usize;
    for prefix in 0..prefixes {
        for kv in &block_kernel {
            for out in 0..dim_out {
                let entries = kv
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(t, x)| (((prefix * triple) + t) * dim_out + out, x.clone()))
                    .collect();
                elements.push(entries);
            }
        }
    }
    Ok(CochainSpaceBasis { level, dim_in, dim_out, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    #[test]
    fn tuples_enumerate_lexicographically() {
        let all: Vec<Vec<usize>> = Tuples::new(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(Tuples::new(0, 3).count(), 1);
        assert_eq!(Tuples::new(2, 0).count(), 0);
        assert_eq!(unflatten(5, 3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn eval_is_multilinear_on_a_sample() {
        let m = MultiMap::from_fn(2, 2, 1, |t| vec![int((t[0] * 2 + t[1] + 1) as i64)]);
        let x = vec![rat(1, 2), int(3)];
        let y = vec![int(-1), rat(2, 3)];
        // 1/2*(-1)*1 + 1/2*(2/3)*2 + 3*(-1)*3 + 3*(2/3)*4
        let expected = rat(-1, 2) + rat(2, 3) - int(9) + int(8);
        assert_eq!(m.eval(&[&x, &y]).unwrap(), vec![expected]);
        assert!(m.eval(&[&x]).is_err());
    }

    #[test]
    fn constraint_examples() {
        let zero = MultiMap::zero(3, 2, 1);
        assert!(constraint_residual(&zero, 1).unwrap().satisfied);

        let mut diag = MultiMap::zero(3, 2, 1);
        diag.set(&[0, 0, 0], 0, int(1));
        let check = constraint_residual(&diag, 1).unwrap();
        assert!(!check.satisfied);
        assert_eq!(check.first_violation.unwrap().0, "repeated pair");

        let (a, b) = (rat(3, 7), int(-5));
        let mut skew = MultiMap::zero(3, 2, 1);
        skew.set(&[0, 1, 0], 0, a.clone());
        skew.set(&[1, 0, 0], 0, -a);
        skew.set(&[0, 1, 1], 0, b.clone());
        skew.set(&[1, 0, 1], 0, -b);
        assert!(constraint_residual(&skew, 1).unwrap().satisfied);

        assert!(constraint_residual(&zero, 0).is_err());
    }

    #[test]
    fn cochain_space_sizes() {
        let b = Budget::default();
        assert_eq!(cochain_space_basis(2, 1, 0, b).unwrap().len(), 2);
        assert_eq!(cochain_space_basis(2, 1, 1, b).unwrap().len(), 2);
        assert_eq!(cochain_space_basis(1, 1, 1, b).unwrap().len(), 0);
        // dim 3: Λ²V⊗V minus Λ³V per output coordinate
        assert_eq!(cochain_space_basis(3, 2, 1, b).unwrap().len(), (3 * 3 - 1) * 2);
        assert_eq!(cochain_space_basis(2, 1, 2, b).unwrap().len(), 4 * 2);
    }

    #[test]
    fn block_assembly_matches_full_kernel() {
        for (d, o, level) in [(2, 2, 1), (3, 1, 1), (2, 1, 2)] {
            let basis = cochain_space_basis(d, o, level, Budget::default()).unwrap();
            let arity = 2 * level + 1;
            let width = ambient_size(arity, d, o) as usize;
            let mut rows = Vec::new();
            let base = triple_constraint_matrix(d);
            let prefixes = ambient_size(arity - 3, d, 1) as usize;
            for prefix in 0..prefixes {
                for out in 0..o {
                    for r in 0..base.rows() {
                        let mut row = zero_vector(width);
                        for (t, x) in base.row(r).iter().enumerate() {
                            row[(prefix * d * d * d + t) * o + out] = x.clone();
                        }
                        rows.push(row);
                    }
                }
            }
            let full = Matrix::from_rows(rows).unwrap().kernel_basis();
            let assembled: Vec<Vector> = basis.elements().map(|m| m.coeffs().to_vec()).collect();
            assert_eq!(full, assembled, "dims ({d},{o}) level {level}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = cochain_space_basis(10, 10, 3, Budget(1000)).unwrap_err();
        assert!(matches!(err, Error::ResourceExceeded { .. }));
    }
}
