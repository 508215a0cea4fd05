//! Lie algebras, Lie triple systems and their representations.
//!
//! Brackets are stored as full tensors. Each structure also keeps a sparse
//! table of its values on basis tuples so that the axiom checks, which run
//! over every basis tuple, only touch nonzero products.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::{axpy, int, support, zero_vector, Matrix, Rational, Vector};
use crate::mlin::{MultiMap, Tuples};
use crate::report::Report;

pub type Sparse = Vec<(usize, Rational)>;

fn sparse_table(m: &MultiMap) -> Vec<Sparse> {
    m.tuples().map(|t| support(m.value(&t)).map(|(i, x)| (i, x.clone())).collect()).collect()
}

fn sparse_columns(m: &Matrix) -> Vec<Sparse> {
    (0..m.cols())
        .map(|c| (0..m.rows()).filter(|&r| !num_traits::Zero::is_zero(m.get(r, c))).map(|r| (r, m.get(r, c).clone())).collect())
        .collect()
}

/// Adds `scale * M v` to `acc`, where `M` is given by sparse columns.
fn apply_sparse(acc: &mut [Rational], columns: &[Sparse], scale: &Rational, v: &[Rational]) {
    for (a, x) in support(v) {
        let s = scale * x;
        for (b, c) in &columns[a] {
            acc[*b] += &s * c;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlg {
    bracket: MultiMap,
    table: Vec<Sparse>,
}

impl LieAlg {
    pub fn new(bracket: MultiMap) -> Result<Self> {
        if bracket.arity() != 2 || bracket.dim_in() != bracket.dim_out() {
            return Err(Error::Invalid("a Lie bracket is a bilinear map L x L -> L".into()));
        }
        let table = sparse_table(&bracket);
        Ok(LieAlg { bracket, table })
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(MultiMap::zero(2, dim, dim)).expect("well formed")
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim_in()
    }

    pub fn tensor(&self) -> &MultiMap {
        &self.bracket
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (i, a) in support(x) {
            for (j, b) in support(y) {
                let s = a * b;
                for (k, c) in self.bracket_basis(i, j) {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_i) = [e_i, -]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            for (k, c) in self.bracket_basis(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }
}

pub fn check_lie(g: &LieAlg) -> Report {
    let d = g.dim();
    let mut report = Report::new("Lie algebra");
    for i in 0..d {
        for j in i..d {
            let mut r = zero_vector(d);
            for (k, c) in g.bracket_basis(i, j).iter().chain(g.bracket_basis(j, i)) {
                r[*k] += c;
            }
            report.record("antisymmetry", &[i, j], r);
        }
    }
    for t in Tuples::new(3, d) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let mut r = zero_vector(d);
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            for (l, s) in g.bracket_basis(a, b) {
                for (m, u) in g.bracket_basis(*l, c) {
                    r[*m] += s * u;
                }
            }
        }
        report.record("Jacobi identity", &t, r);
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lts {
    bracket: MultiMap,
    table: Vec<Sparse>,
}

impl Lts {
    pub fn new(bracket: MultiMap) -> Result<Self> {
        if bracket.arity() != 3 || bracket.dim_in() != bracket.dim_out() {
            return Err(Error::Invalid("a triple bracket is a trilinear map L x L x L -> L".into()));
        }
        let table = sparse_table(&bracket);
        Ok(Lts { bracket, table })
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(MultiMap::zero(3, dim, dim)).expect("well formed")
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim_in()
    }

    pub fn tensor(&self) -> &MultiMap {
        &self.bracket
    }

    pub fn bracket_basis(&self, i: usize, j: usize, k: usize) -> &[(usize, Rational)] {
        let d = self.dim();
        &self.table[(i * d + j) * d + k]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (i, a) in support(x) {
            for (j, b) in support(y) {
                let ab = a * b;
                for (k, c) in support(z) {
                    let s = &ab * c;
                    for (l, u) in self.bracket_basis(i, j, k) {
                        out[*l] += &s * u;
                    }
                }
            }
        }
        out
    }

    /// `acc += scale * [e_i, e_j, e_k]`.
    fn add_basis(&self, acc: &mut [Rational], scale: &Rational, i: usize, j: usize, k: usize) {
        for (l, u) in self.bracket_basis(i, j, k) {
            acc[*l] += scale * u;
        }
    }
}

/// Checks skewness in the first two slots, the cyclic identity and the
/// fundamental identity on all basis tuples.
pub fn check_lts(l: &Lts) -> Report {
    let d = l.dim();
    let mut report = Report::new("Lie triple system");
    for t in Tuples::new(3, d) {
        let (x, y, z) = (t[0], t[1], t[2]);
        if x <= y {
            let mut r = zero_vector(d);
            l.add_basis(&mut r, &int(1), x, y, z);
            l.add_basis(&mut r, &int(1), y, x, z);
            report.record("skew [x,x,z]=0", &t, r);
        }
    }
    for t in Tuples::new(3, d) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let mut r = zero_vector(d);
        l.add_basis(&mut r, &int(1), x, y, z);
        l.add_basis(&mut r, &int(1), y, z, x);
        l.add_basis(&mut r, &int(1), z, x, y);
        report.record("cyclic identity", &t, r);
    }
    let parts: Vec<Report> = (0..d)
        .into_par_iter()
        .map(|x| {
            let mut part = Report::new("");
            for rest in Tuples::new(4, d) {
                let (y, z, t, e) = (rest[0], rest[1], rest[2], rest[3]);
                let mut r = zero_vector(d);
                for (m, c) in l.bracket_basis(z, t, e) {
                    l.add_basis(&mut r, c, x, y, *m);
                }
                for (m, c) in l.bracket_basis(x, y, z) {
                    l.add_basis(&mut r, &-c, *m, t, e);
                }
                for (m, c) in l.bracket_basis(x, y, t) {
                    l.add_basis(&mut r, &-c, z, *m, e);
                }
                for (m, c) in l.bracket_basis(x, y, e) {
                    l.add_basis(&mut r, &-c, z, t, *m);
                }
                part.record("fundamental identity", &[x, y, z, t, e], r);
            }
            part
        })
        .collect();
    report.absorb(Report::collect("", parts));
    report
}

/// A representation of a Lie triple system: `θ(e_i, e_j)` as a matrix on `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    dim_l: usize,
    dim_m: usize,
    theta: Vec<Matrix>,
    columns: Vec<Vec<Sparse>>,
}

impl Rep {
    pub fn new(dim_l: usize, dim_m: usize, theta: Vec<Matrix>) -> Result<Self> {
        if theta.len() != dim_l * dim_l {
            return Err(Error::DimensionMismatch { what: "theta operators", expected: dim_l * dim_l, found: theta.len() });
        }
        for m in &theta {
            if m.rows() != dim_m || m.cols() != dim_m {
                return Err(Error::DimensionMismatch { what: "theta operator size", expected: dim_m, found: m.rows() });
            }
        }
        let columns = theta.iter().map(sparse_columns).collect();
        Ok(Rep { dim_l, dim_m, theta, columns })
    }

    pub fn from_fn(dim_l: usize, dim_m: usize, mut f: impl FnMut(usize, usize) -> Matrix) -> Result<Self> {
        let mut theta = Vec::with_capacity(dim_l * dim_l);
        for i in 0..dim_l {
            for j in 0..dim_l {
                theta.push(f(i, j));
            }
        }
        Self::new(dim_l, dim_m, theta)
    }

    pub fn zero(dim_l: usize, dim_m: usize) -> Self {
        Self::from_fn(dim_l, dim_m, |_, _| Matrix::zeros(dim_m, dim_m)).expect("well formed")
    }

    pub fn dim_l(&self) -> usize {
        self.dim_l
    }

    pub fn dim_m(&self) -> usize {
        self.dim_m
    }

    pub fn theta_matrix(&self, i: usize, j: usize) -> &Matrix {
        &self.theta[i * self.dim_l + j]
    }

    /// `acc += scale * θ(e_i, e_j) v`.
    pub fn add_theta(&self, acc: &mut [Rational], scale: &Rational, i: usize, j: usize, v: &[Rational]) {
        apply_sparse(acc, &self.columns[i * self.dim_l + j], scale, v);
    }

    /// `acc += scale * D(e_i, e_j) v` with `D(x,y) = θ(y,x) − θ(x,y)`.
    pub fn add_d(&self, acc: &mut [Rational], scale: &Rational, i: usize, j: usize, v: &[Rational]) {
        self.add_theta(acc, scale, j, i, v);
        self.add_theta(acc, &-scale, i, j, v);
    }

    pub fn theta(&self, x: &[Rational], y: &[Rational], v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim_m);
        for (i, a) in support(x) {
            for (j, b) in support(y) {
                self.add_theta(&mut out, &(a * b), i, j, v);
            }
        }
        out
    }

    pub fn d(&self, x: &[Rational], y: &[Rational], v: &[Rational]) -> Vector {
        let mut out = self.theta(y, x, v);
        crate::exactlin::sub_assign(&mut out, &self.theta(x, y, v));
        out
    }

    fn check_dims(&self, l: &Lts) -> Result<()> {
        if l.dim() != self.dim_l {
            return Err(Error::DimensionMismatch { what: "representation base", expected: l.dim(), found: self.dim_l });
        }
        Ok(())
    }
}

/// Checks the two defining identities of a representation and the derived
/// commutator identity for `D` on all basis 4-tuples. Each residual is the
/// operator on `M`, flattened column by column.
pub fn check_rep(l: &Lts, m: &Rep) -> Result<Report> {
    m.check_dims(l)?;
    let d = l.dim();
    let dm = m.dim_m();
    let parts: Vec<Report> = (0..d)
        .into_par_iter()
        .map(|x| {
            let mut part = Report::new("");
            let one = int(1);
            let minus = int(-1);
            for rest in Tuples::new(3, d) {
                let (y, z, t) = (rest[0], rest[1], rest[2]);
                let mut r3 = Vec::with_capacity(dm * dm);
                let mut r4 = Vec::with_capacity(dm * dm);
                let mut r5 = Vec::with_capacity(dm * dm);
                for a in 0..dm {
                    let u = crate::exactlin::unit_vector(dm, a);
                    // θ(z,t)θ(x,y) − θ(y,t)θ(x,z) − θ(x,[y,z,t]) + D(y,z)θ(x,t)
                    let mut acc = zero_vector(dm);
                    let mut w = zero_vector(dm);
                    m.add_theta(&mut w, &one, x, y, &u);
                    m.add_theta(&mut acc, &one, z, t, &w);
                    let mut w = zero_vector(dm);
                    m.add_theta(&mut w, &one, x, z, &u);
                    m.add_theta(&mut acc, &minus, y, t, &w);
                    for (k, c) in l.bracket_basis(y, z, t) {
                        m.add_theta(&mut acc, &-c, x, *k, &u);
                    }
                    let mut w = zero_vector(dm);
                    m.add_theta(&mut w, &one, x, t, &u);
                    m.add_d(&mut acc, &one, y, z, &w);
                    r3.extend(acc);

                    // θ(z,t)D(x,y) − D(x,y)θ(z,t) + θ([x,y,z],t) + θ(z,[x,y,t])
                    let mut acc = zero_vector(dm);
                    let mut w = zero_vector(dm);
                    m.add_d(&mut w, &one, x, y, &u);
                    m.add_theta(&mut acc, &one, z, t, &w);
                    let mut w = zero_vector(dm);
                    m.add_theta(&mut w, &one, z, t, &u);
                    m.add_d(&mut acc, &minus, x, y, &w);
                    for (k, c) in l.bracket_basis(x, y, z) {
                        m.add_theta(&mut acc, c, *k, t, &u);
                    }
                    for (k, c) in l.bracket_basis(x, y, t) {
                        m.add_theta(&mut acc, c, z, *k, &u);
                    }
                    r4.extend(acc);

                    // D(z,t)D(x,y) − D(x,y)D(z,t) + D([x,y,z],t) + D(z,[x,y,t])
                    let mut acc = zero_vector(dm);
                    let mut w = zero_vector(dm);
                    m.add_d(&mut w, &one, x, y, &u);
                    m.add_d(&mut acc, &one, z, t, &w);
                    let mut w = zero_vector(dm);
                    m.add_d(&mut w, &one, z, t, &u);
                    m.add_d(&mut acc, &minus, x, y, &w);
                    for (k, c) in l.bracket_basis(x, y, z) {
                        m.add_d(&mut acc, c, *k, t, &u);
                    }
                    for (k, c) in l.bracket_basis(x, y, t) {
                        m.add_d(&mut acc, c, z, *k, &u);
                    }
                    r5.extend(acc);
                }
                let idx = [x, y, z, t];
                part.record("theta product identity", &idx, r3);
                part.record("theta derivation identity", &idx, r4);
                part.record("D commutator identity", &idx, r5);
            }
            part
        })
        .collect();
    Ok(Report::collect("representation", parts))
}

/// `θ(x,y)z = [z,x,y]`.
pub fn regular_rep(l: &Lts) -> Result<Rep> {
    let report = check_lts(l);
    if !report.passed() {
        return Err(Error::precondition("regular representation needs a Lie triple system", report));
    }
    Ok(regular_rep_unchecked(l))
}

pub fn regular_rep_unchecked(l: &Lts) -> Rep {
    let d = l.dim();
    Rep::from_fn(d, d, |i, j| {
        let mut m = Matrix::zeros(d, d);
        for k in 0..d {
            for (r, c) in l.bracket_basis(k, i, j) {
                m.set(*r, k, c.clone());
            }
        }
        m
    })
    .expect("square operators")
}

/// A representation of a Lie algebra: `ρ(e_i)` as a matrix on `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieRep {
    dim_m: usize,
    rho: Vec<Matrix>,
}

impl LieRep {
    pub fn new(dim_m: usize, rho: Vec<Matrix>) -> Result<Self> {
        for m in &rho {
            if m.rows() != dim_m || m.cols() != dim_m {
                return Err(Error::DimensionMismatch { what: "rho operator size", expected: dim_m, found: m.rows() });
            }
        }
        Ok(LieRep { dim_m, rho })
    }

    pub fn adjoint(g: &LieAlg) -> Self {
        LieRep { dim_m: g.dim(), rho: (0..g.dim()).map(|i| g.ad(i)).collect() }
    }

    pub fn dim_l(&self) -> usize {
        self.rho.len()
    }

    pub fn dim_m(&self) -> usize {
        self.dim_m
    }

    pub fn rho_matrix(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn rho(&self, x: &[Rational], v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim_m);
        for (i, a) in support(x) {
            axpy(&mut out, a, &self.rho[i].apply(v));
        }
        out
    }

    /// `ρ(x)` as a matrix.
    pub fn operator(&self, x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.dim_m, self.dim_m);
        for (i, a) in support(x) {
            out = out.add(&self.rho[i].scale(a)).expect("same shape");
        }
        out
    }
}

pub fn check_lie_rep(g: &LieAlg, rho: &LieRep) -> Result<Report> {
    if rho.dim_l() != g.dim() {
        return Err(Error::DimensionMismatch { what: "Lie representation base", expected: g.dim(), found: rho.dim_l() });
    }
    let d = g.dim();
    let mut report = Report::new("Lie representation");
    for i in 0..d {
        for j in 0..d {
            let mut lhs = Matrix::zeros(rho.dim_m, rho.dim_m);
            for (k, c) in g.bracket_basis(i, j) {
                lhs = lhs.add(&rho.rho[*k].scale(c))?;
            }
            let comm = rho.rho[i].mul(&rho.rho[j])?.sub(&rho.rho[j].mul(&rho.rho[i])?)?;
            report.record("rho preserves brackets", &[i, j], lhs.sub(&comm)?.entries().to_vec());
        }
    }
    Ok(report)
}

/// `[x,y,z] = [[x,y],z]`.
pub fn lie_to_lts(g: &LieAlg) -> Result<Lts> {
    let report = check_lie(g);
    if !report.passed() {
        return Err(Error::precondition("input is not a Lie algebra", report));
    }
    Ok(lie_to_lts_unchecked(g))
}

pub fn lie_to_lts_unchecked(g: &LieAlg) -> Lts {
    let d = g.dim();
    let tensor = MultiMap::from_fn(3, d, d, |t| {
        let mut out = zero_vector(d);
        for (l, c) in g.bracket_basis(t[0], t[1]) {
            for (m, u) in g.bracket_basis(*l, t[2]) {
                out[*m] += c * u;
            }
        }
        out
    });
    Lts::new(tensor).expect("well formed")
}

/// `θ_ρ(x,y) = ρ(y)ρ(x)`.
pub fn lie_rep_to_lts_rep(g: &LieAlg, rho: &LieRep) -> Result<Rep> {
    let report = check_lie_rep(g, rho)?;
    if !report.passed() {
        return Err(Error::precondition("input is not a Lie representation", report));
    }
    Ok(lie_rep_to_lts_rep_unchecked(rho))
}

pub fn lie_rep_to_lts_rep_unchecked(rho: &LieRep) -> Rep {
    Rep::from_fn(rho.dim_l(), rho.dim_m, |i, j| rho.rho[j].mul(&rho.rho[i]).expect("square"))
        .expect("well formed")
}

/// Skewness and the cocycle identity
/// `Σ_cyc ρ(x)φ(y,z) + φ(x,[y,z]) = 0` on basis triples.
pub fn check_lie_two_cocycle(g: &LieAlg, rho: &LieRep, phi: &MultiMap) -> Result<Report> {
    if phi.arity() != 2 || phi.dim_in() != g.dim() || phi.dim_out() != rho.dim_m() {
        return Err(Error::Invalid("a Lie 2-cochain is a bilinear map L x L -> M".into()));
    }
    let d = g.dim();
    let dm = rho.dim_m();
    let mut report = Report::new("Lie 2-cocycle");
    for i in 0..d {
        for j in i..d {
            let mut r = phi.value(&[i, j]).to_vec();
            crate::exactlin::add_assign(&mut r, phi.value(&[j, i]));
            report.record("skew", &[i, j], r);
        }
    }
    for t in Tuples::new(3, d) {
        let mut r = zero_vector(dm);
        for (x, y, z) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])] {
            crate::exactlin::add_assign(&mut r, &rho.rho[x].apply(phi.value(&[y, z])));
            for (k, c) in g.bracket_basis(y, z) {
                axpy(&mut r, c, phi.value(&[x, *k]));
            }
        }
        report.record("cocycle identity", &t, r);
    }
    Ok(report)
}

/// `ω(x,y,z) = φ([x,y],z) − ρ(z)φ(x,y)`.
pub fn lie_two_cocycle_to_lts_three_cocycle(g: &LieAlg, rho: &LieRep, phi: &MultiMap) -> Result<MultiMap> {
    let report = check_lie_two_cocycle(g, rho, phi)?;
    if !report.passed() {
        return Err(Error::precondition("input is not a Lie 2-cocycle", report));
    }
    Ok(lie_two_cocycle_to_three_cochain(g, rho, phi))
}

pub fn lie_two_cocycle_to_three_cochain(g: &LieAlg, rho: &LieRep, phi: &MultiMap) -> MultiMap {
    let d = g.dim();
    let dm = rho.dim_m();
    MultiMap::from_fn(3, d, dm, |t| {
        let mut out = zero_vector(dm);
        for (k, c) in g.bracket_basis(t[0], t[1]) {
            axpy(&mut out, c, phi.value(&[*k, t[2]]));
        }
        crate::exactlin::sub_assign(&mut out, &rho.rho[t[2]].apply(phi.value(&[t[0], t[1]])));
        out
    })
}

/// The bracket on `L ⊕ M`, basis of `L` first:
/// `[x+u, y+v, z+w] = ([x,y,z], θ(y,z)u − θ(x,z)v + D(x,y)w + H(x,y,z))`.
pub fn twisted_semidirect_unchecked(l: &Lts, m: &Rep, h: &MultiMap) -> Lts {
    let dl = l.dim();
    let dm = m.dim_m();
    let n = dl + dm;
    let one = int(1);
    let tensor = MultiMap::from_fn(3, n, n, |t| {
        let mut out = zero_vector(n);
        let in_l = |i: usize| i < dl;
        let (a, b, c) = (t[0], t[1], t[2]);
        match (in_l(a), in_l(b), in_l(c)) {
            (true, true, true) => {
                for (k, x) in l.bracket_basis(a, b, c) {
                    out[*k] = x.clone();
                }
                for (k, x) in h.value(&[a, b, c]).iter().enumerate() {
                    out[dl + k] = x.clone();
                }
            }
            (false, true, true) => {
                let mut w = zero_vector(dm);
                m.add_theta(&mut w, &one, b, c, &crate::exactlin::unit_vector(dm, a - dl));
                out[dl..].clone_from_slice(&w);
            }
            (true, false, true) => {
                let mut w = zero_vector(dm);
                m.add_theta(&mut w, &-&one, a, c, &crate::exactlin::unit_vector(dm, b - dl));
                out[dl..].clone_from_slice(&w);
            }
            (true, true, false) => {
                let mut w = zero_vector(dm);
                m.add_d(&mut w, &one, a, b, &crate::exactlin::unit_vector(dm, c - dl));
                out[dl..].clone_from_slice(&w);
            }
            _ => {}
        }
        out
    });
    Lts::new(tensor).expect("well formed")
}

pub fn twisted_semidirect(l: &Lts, m: &Rep, h: &MultiMap) -> Result<Lts> {
    let report = check_lts(l);
    if !report.passed() {
        return Err(Error::precondition("base is not a Lie triple system", report));
    }
    let report = check_rep(l, m)?;
    if !report.passed() {
        return Err(Error::precondition("not a representation", report));
    }
    let report = crate::yamaguti::check_three_cocycle(l, m, h)?;
    if !report.passed() {
        return Err(Error::precondition("H is not a 3-cocycle", report));
    }
    Ok(twisted_semidirect_unchecked(l, m, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, unit_vector};

    /// Witt structure constants written out by hand, independent of the catalog.
    fn witt_lie(n: usize) -> LieAlg {
        let d = n + 1;
        LieAlg::new(MultiMap::from_fn(2, d, d, |t| {
            let mut v = zero_vector(d);
            let (m, k) = (t[0] as i64, t[1] as i64);
            if t[0] + t[1] <= n {
                v[t[0] + t[1]] = int(m - k);
            }
            v
        }))
        .unwrap()
    }

    fn two_dim_nonabelian() -> LieAlg {
        let mut b = MultiMap::zero(2, 2, 2);
        b.set(&[0, 1], 1, int(1));
        b.set(&[1, 0], 1, int(-1));
        LieAlg::new(b).unwrap()
    }

    #[test]
    fn abelian_structures_pass() {
        assert!(check_lts(&Lts::abelian(3)).passed());
        assert!(check_rep(&Lts::abelian(2), &Rep::zero(2, 3)).unwrap().passed());
        assert!(check_lie(&LieAlg::abelian(2)).passed());
    }

    #[test]
    fn witt_triple_system_and_regular_rep() {
        let g = witt_lie(3);
        assert!(check_lie(&g).passed());
        let l = lie_to_lts(&g).unwrap();
        assert!(check_lts(&l).passed());
        // [l_1, l_2, l_0] = (1-2)(1+2-0) l_3
        assert_eq!(l.bracket_basis(1, 2, 0), &[(3, int(-3))]);
        let r = regular_rep(&l).unwrap();
        assert!(check_rep(&l, &r).unwrap().passed());
        let v = r.theta(&unit_vector(4, 1), &unit_vector(4, 2), &unit_vector(4, 0));
        assert_eq!(v, unit_vector(4, 3));
    }

    #[test]
    fn missing_cyclic_completion_fails() {
        let mut b = MultiMap::zero(3, 2, 2);
        b.set(&[0, 1, 0], 0, int(1));
        let report = check_lts(&Lts::new(b).unwrap());
        assert!(report.violations.iter().any(|v| v.check == "cyclic identity"));
    }

    #[test]
    fn identity_theta_is_not_a_representation() {
        let l = lie_to_lts(&witt_lie(3)).unwrap();
        let rep = Rep::from_fn(4, 4, |_, _| Matrix::identity(4)).unwrap();
        assert!(!check_rep(&l, &rep).unwrap().passed());
    }

    #[test]
    fn nonabelian_plane() {
        let l = lie_to_lts(&two_dim_nonabelian()).unwrap();
        assert!(l.bracket_basis(0, 1, 1).is_empty());
        assert_eq!(l.bracket_basis(0, 1, 0), &[(1, int(-1))]);
    }

    #[test]
    fn induced_rep_from_adjoint() {
        let g = witt_lie(3);
        let rho = LieRep::adjoint(&g);
        assert!(check_lie_rep(&g, &rho).unwrap().passed());
        let l = lie_to_lts(&g).unwrap();
        let theta = lie_rep_to_lts_rep(&g, &rho).unwrap();
        assert!(check_rep(&l, &theta).unwrap().passed());
    }

    #[test]
    fn bracket_as_adjoint_cocycle() {
        let g = witt_lie(3);
        let rho = LieRep::adjoint(&g);
        let phi = g.tensor().clone();
        assert!(check_lie_two_cocycle(&g, &rho, &phi).unwrap().passed());
        let omega = lie_two_cocycle_to_lts_three_cocycle(&g, &rho, &phi).unwrap();
        let l = lie_to_lts(&g).unwrap();
        let theta = lie_rep_to_lts_rep(&g, &rho).unwrap();
        assert!(crate::yamaguti::check_three_cocycle(&l, &theta, &omega).unwrap().passed());
    }

    #[test]
    fn zero_and_abelian_cocycles_give_zero() {
        let g = LieAlg::abelian(2);
        let rho = LieRep::new(1, vec![Matrix::zeros(1, 1); 2]).unwrap();
        let mut phi = MultiMap::zero(2, 2, 1);
        phi.set(&[0, 1], 0, rat(5, 3));
        phi.set(&[1, 0], 0, rat(-5, 3));
        assert!(lie_two_cocycle_to_lts_three_cocycle(&g, &rho, &phi).unwrap().is_zero());
    }

    #[test]
    fn twisted_semidirect_with_scaled_bracket() {
        let l = lie_to_lts(&witt_lie(3)).unwrap();
        let r = regular_rep(&l).unwrap();
        let h = l.tensor().scale(&int(2));
        let big = twisted_semidirect(&l, &r, &h).unwrap();
        assert!(check_lts(&big).passed());
        for t in Tuples::new(3, 4) {
            assert_eq!(&big.tensor().value(&t)[..4], l.tensor().value(&t));
        }
        for t in Tuples::new(3, 4) {
            let shifted: Vec<usize> = t.iter().map(|i| i + 4).collect();
            assert!(big.bracket_basis(shifted[0], shifted[1], shifted[2]).is_empty());
        }
    }

    #[test]
    fn d_acts_as_derivation() {
        let l = lie_to_lts(&witt_lie(4)).unwrap();
        let r = regular_rep(&l).unwrap();
        let d = l.dim();
        for t in Tuples::new(5, d) {
            let e: Vec<Vector> = t.iter().map(|&i| unit_vector(d, i)).collect();
            let lhs = r.d(&e[0], &e[1], &l.bracket(&e[2], &e[3], &e[4]));
            let mut rhs = l.bracket(&r.d(&e[0], &e[1], &e[2]), &e[3], &e[4]);
            crate::exactlin::add_assign(&mut rhs, &l.bracket(&e[2], &r.d(&e[0], &e[1], &e[3]), &e[4]));
            crate::exactlin::add_assign(&mut rhs, &l.bracket(&e[2], &e[3], &r.d(&e[0], &e[1], &e[4])));
            assert_eq!(lhs, rhs);
        }
    }
}
