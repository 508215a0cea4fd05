//! Command implementations: each one loads its inputs, runs the checks
//! and constructions from `lietriple`, and fills an [`Outcome`].

use std::path::Path;

use lietriple::catalog::{self, BlockCoefficient, BlockSpec, WittSpec};
use lietriple::deform::{self, Deformation, EquivalenceWitness};
use lietriple::linfty::{self, McContext};
use lietriple::lts::{
    check_lie, check_lie_rep, check_lie_two_cocycle, check_lts, check_rep, lie_rep_to_lts_rep_unchecked, lie_to_lts_unchecked,
    lie_two_cocycle_to_three_cochain, regular_rep_unchecked, LieAlg, LieRep, Lts, Rep,
};
use lietriple::ns::{self, NsLts};
use lietriple::reynolds::{self, Carrier, GenReynolds, LieGenReynolds, MorphismWitness, ReynoldsComplex, WeightedReynolds};
use lietriple::yamaguti::{check_three_cocycle, YamagutiComplex};
use lietriple::exactlin::int;
use lietriple::{Budget, Error, Matrix, MultiMap, Rational, Report};

use crate::format::{self, AlgebraFile, CarrierKind, ParseError, RepBlock, ReynoldsBlock};
use crate::output::{Outcome, Output};

/// Why a command stopped before producing a report.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Core(#[from] Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Parse { .. } | Failure::Io { .. } => 2,
            Failure::Core(Error::ResourceExceeded { .. }) => 3,
            Failure::Core(Error::DimensionMismatch { .. } | Error::Invalid(_)) => 2,
            Failure::Core(_) => 1,
        }
    }
}

pub type CmdResult<T> = std::result::Result<T, Failure>;

pub fn load(path: &Path) -> CmdResult<AlgebraFile> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| Failure::Io { path: shown.clone(), source })?;
    format::parse(&text).map_err(|source| Failure::Parse { path: shown, source })
}

/// Records a check. A failed precondition or postcondition inside the
/// library becomes a failed check rather than an abort.
fn record(o: &mut Outcome, name: &str, result: lietriple::Result<Report>) -> CmdResult<bool> {
    match result {
        Ok(report) => {
            let passed = report.passed();
            o.check(name, report);
            Ok(passed)
        }
        Err(Error::PreconditionFailed { what, report } | Error::PostconditionFailed { what, report }) => {
            o.blocked(name, what, *report);
            Ok(false)
        }
        Err(e @ (Error::NotInvertible { .. } | Error::Unsolvable(_))) => {
            o.blocked(name, e.to_string(), Report::new(name));
            Ok(false)
        }
        Err(e) => Err(e.into()),
    }
}

/// A single yes/no fact as a report with one instance.
fn flag(name: &str, identity: &str, holds: bool) -> Report {
    let mut r = Report::new(name);
    r.record(identity, &[], vec![int(if holds { 0 } else { 1 })]);
    r
}

fn tensor_report(name: &str, identity: &str, t: &MultiMap) -> Report {
    let mut r = Report::new(name);
    for idx in t.tuples() {
        r.record(identity, &idx, t.value(&idx).to_vec());
    }
    r
}

fn lie_of(f: &AlgebraFile) -> CmdResult<Option<LieAlg>> {
    Ok(f.lie_bracket.clone().map(LieAlg::new).transpose()?)
}

/// The declared triple system, or `[[x,y],z]` of the declared Lie algebra.
fn lts_of(f: &AlgebraFile) -> CmdResult<Lts> {
    if let Some(t) = &f.triple_bracket {
        return Ok(Lts::new(t.clone())?);
    }
    match lie_of(f)? {
        Some(g) => Ok(lie_to_lts_unchecked(&g)),
        None => Err(Failure::Usage("the file declares neither [triple_bracket] nor [lie_bracket]".into())),
    }
}

fn lie_rep_of(f: &AlgebraFile) -> CmdResult<Option<LieRep>> {
    match &f.rep {
        Some(RepBlock::Rho { dim_m, rho }) => Ok(Some(LieRep::new(*dim_m, rho.clone())?)),
        _ => Ok(None),
    }
}

/// The declared representation; the regular one when none is declared.
fn rep_of(f: &AlgebraFile, l: &Lts) -> CmdResult<Rep> {
    match &f.rep {
        Some(RepBlock::Theta { dim_m, theta }) => Ok(Rep::new(l.dim(), *dim_m, theta.clone())?),
        Some(RepBlock::Rho { .. }) => Ok(lie_rep_to_lts_rep_unchecked(&lie_rep_of(f)?.expect("rho block"))),
        None => Ok(regular_rep_unchecked(l)),
    }
}

/// `H` as declared, or induced from a Lie 2-cocycle, or zero.
fn h_of(f: &AlgebraFile, l: &Lts, m: &Rep) -> CmdResult<MultiMap> {
    if let Some(h) = &f.cocycle_h {
        return Ok(h.clone());
    }
    if let (Some(h2), Some(g), Some(rho)) = (&f.lie_cocycle_h, lie_of(f)?, lie_rep_of(f)?) {
        return Ok(lie_two_cocycle_to_three_cochain(&g, &rho, h2));
    }
    Ok(MultiMap::zero(3, l.dim(), m.dim_m()))
}

fn gen_of(f: &AlgebraFile) -> CmdResult<GenReynolds> {
    let l = lts_of(f)?;
    let m = rep_of(f, &l)?;
    let h = h_of(f, &l, &m)?;
    let t = f.map_t.clone().ok_or_else(|| Failure::Usage("the file declares no [map_t]".into()))?;
    Ok(GenReynolds::new(l, m, h, t)?)
}

fn lie_gen_of(f: &AlgebraFile) -> CmdResult<Option<LieGenReynolds>> {
    let (Some(g), Some(rho), Some(t)) = (lie_of(f)?, lie_rep_of(f)?, f.map_t.clone()) else {
        return Ok(None);
    };
    let h = f.lie_cocycle_h.clone().unwrap_or_else(|| MultiMap::zero(2, g.dim(), rho.dim_m()));
    Ok(Some(LieGenReynolds::new(g, rho, h, t)?))
}

fn weighted_of(f: &AlgebraFile, b: &ReynoldsBlock) -> CmdResult<WeightedReynolds> {
    match b.carrier {
        CarrierKind::Lie => {
            let g = lie_of(f)?.ok_or_else(|| Failure::Usage("a reynolds block on carrier lie needs [lie_bracket]".into()))?;
            Ok(WeightedReynolds::on_lie(g, b.r.clone(), b.weight.clone())?)
        }
        CarrierKind::Lts => Ok(WeightedReynolds::on_lts(lts_of(f)?, b.r.clone(), b.weight.clone())?),
    }
}

/// Every well-formed pair a generalized Reynolds operator needs, as checks.
fn pair_checks(o: &mut Outcome, g: &GenReynolds) -> CmdResult<bool> {
    let a = record(o, "lie triple system", Ok(check_lts(&g.lts)))?;
    let b = record(o, "representation", check_rep(&g.lts, &g.rep))?;
    let c = record(o, "3-cocycle H", check_three_cocycle(&g.lts, &g.rep, &g.h))?;
    Ok(a && b && c)
}

pub fn verify(o: &mut Outcome, f: &AlgebraFile) -> CmdResult<()> {
    let lie = lie_of(f)?;
    if let Some(g) = &lie {
        record(o, "lie algebra", Ok(check_lie(g)))?;
    }
    if f.triple_bracket.is_some() || lie.is_some() {
        let l = lts_of(f)?;
        if f.triple_bracket.is_some() {
            record(o, "lie triple system", Ok(check_lts(&l)))?;
        }
        if let Some(rho) = lie_rep_of(f)? {
            let g = lie.as_ref().ok_or_else(|| Failure::Usage("rho lines need [lie_bracket]".into()))?;
            record(o, "lie algebra representation", check_lie_rep(g, &rho))?;
            if let Some(h2) = &f.lie_cocycle_h {
                record(o, "lie 2-cocycle H", check_lie_two_cocycle(g, &rho, h2))?;
            }
        } else if f.rep.is_some() {
            let m = rep_of(f, &l)?;
            record(o, "representation", check_rep(&l, &m))?;
        }
        if f.cocycle_h.is_some() {
            let m = rep_of(f, &l)?;
            record(o, "3-cocycle H", check_three_cocycle(&l, &m, &h_of(f, &l, &m)?))?;
        }
    }
    for b in &f.reynolds {
        let op = weighted_of(f, b)?;
        let name = match b.carrier {
            CarrierKind::Lie => "weighted reynolds operator on the lie algebra",
            CarrierKind::Lts => "weighted reynolds operator on the triple system",
        };
        record(o, name, reynolds::check_weighted_reynolds(&op))?;
    }
    if f.map_t.is_some() {
        let g = gen_of(f)?;
        record(o, "generalized reynolds operator", reynolds::check_generalized_reynolds(&g))?;
        if let Some(lg) = lie_gen_of(f)? {
            record(o, "lie-level generalized reynolds operator", reynolds::check_lie_generalized_reynolds(&lg))?;
        }
        if !f.deformation.is_empty() {
            let d = Deformation::new(g, f.deformation.clone())?;
            let mut r = Report::new("deformation");
            for (s, c) in deform::residual_coefficients(&d, d.order()).iter().enumerate() {
                for idx in c.tuples() {
                    r.record(&format!("coefficient of λ^{s}"), &idx, c.value(&idx).to_vec());
                }
            }
            record(o, &format!("deformation of order {}", d.order()), Ok(r))?;
        }
    }
    if let Some((curly, square)) = &f.ns {
        let n = NsLts::new(curly.clone(), square.clone())?;
        record(o, "NS-Lie triple system", Ok(ns::check_ns_lts(&n)))?;
    }
    if o.checks.is_empty() {
        return Err(Failure::Usage("the file declares no structure to verify".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    Yamaguti,
    Reynolds,
}

pub fn cohomology(o: &mut Outcome, f: &AlgebraFile, levels: &[usize], kind: ComplexKind, budget: Budget) -> CmdResult<()> {
    let mut parts = Vec::new();
    match kind {
        ComplexKind::Yamaguti => {
            let l = lts_of(f)?;
            let m = rep_of(f, &l)?;
            let ok_l = record(o, "lie triple system", Ok(check_lts(&l)))?;
            let ok_m = record(o, "representation", check_rep(&l, &m))?;
            if !(ok_l && ok_m) {
                return Ok(());
            }
            let complex = YamagutiComplex::new(&l, &m, budget)?;
            for &arity in levels {
                if arity % 2 == 0 {
                    return Err(Failure::Usage(format!("cochains have odd arity; level {arity} does not exist")));
                }
                let dims = complex.cohomology_dims((arity - 1) / 2)?;
                parts.push(format!("H{arity} dim={}", dims.cohomology));
                o.output(format!("H{arity}.cocycles"), Output::Count(dims.cocycles));
                o.output(format!("H{arity}.coboundaries"), Output::Count(dims.coboundaries));
            }
        }
        ComplexKind::Reynolds => {
            let g = gen_of(f)?;
            if !pair_checks(o, &g)? || !record(o, "generalized reynolds operator", reynolds::check_generalized_reynolds(&g))? {
                return Ok(());
            }
            let complex = ReynoldsComplex::new(&g, budget);
            for &level in levels {
                let dims = complex.cohomology_dims(level)?;
                parts.push(format!("HT{level} dim={}", dims.cohomology));
                o.output(format!("HT{level}.cocycles"), Output::Count(dims.cocycles));
                o.output(format!("HT{level}.coboundaries"), Output::Count(dims.coboundaries));
            }
        }
    }
    o.outputs.insert(0, ("cohomology".into(), Output::Line(parts.join(", "))));
    Ok(())
}

fn mc_report(ctx: &McContext, t: &Matrix) -> CmdResult<(MultiMap, Report)> {
    let residual = linfty::mc_residual(ctx, t)?;
    let report = tensor_report("Maurer-Cartan equation", "Maurer-Cartan residual", &residual);
    Ok((residual, report))
}

pub fn reynolds_check(o: &mut Outcome, f: &AlgebraFile) -> CmdResult<()> {
    for b in &f.reynolds {
        let op = weighted_of(f, b)?;
        let name = match b.carrier {
            CarrierKind::Lie => "weighted reynolds operator on the lie algebra",
            CarrierKind::Lts => "weighted reynolds operator on the triple system",
        };
        record(o, name, reynolds::check_weighted_reynolds(&op))?;
    }
    if f.map_t.is_none() {
        if f.reynolds.is_empty() {
            return Err(Failure::Usage("the file declares neither [map_t] nor [reynolds]".into()));
        }
        return Ok(());
    }
    let g = gen_of(f)?;
    if !pair_checks(o, &g)? {
        return Ok(());
    }
    let direct = record(o, "generalized reynolds operator", reynolds::check_generalized_reynolds(&g))?;
    let graph = record(o, "graph is a subalgebra", Ok(reynolds::graph_subalgebra_check(&g)))?;
    let ctx = McContext::unchecked(&g.lts, &g.rep, &g.h)?;
    let (_, r) = mc_report(&ctx, &g.t)?;
    let mc = record(o, "Maurer-Cartan equation", Ok(r))?;
    let agree = direct == graph && graph == mc;
    o.output("characterizations agree", Output::Text(if agree { "yes" } else { "no" }.into()));
    Ok(())
}

pub fn mc(o: &mut Outcome, f: &AlgebraFile) -> CmdResult<()> {
    let g = gen_of(f)?;
    if !pair_checks(o, &g)? {
        return Ok(());
    }
    let ctx = McContext::unchecked(&g.lts, &g.rep, &g.h)?;
    let (residual, r) = mc_report(&ctx, &g.t)?;
    record(o, "Maurer-Cartan equation", Ok(r))?;
    o.output("mc residual", Output::Tensor(residual));
    Ok(())
}

pub fn twisted_mc(o: &mut Outcome, f: &AlgebraFile) -> CmdResult<()> {
    let g = gen_of(f)?;
    let p = f.perturbation.clone().ok_or_else(|| Failure::Usage("the file declares no [perturbation]".into()))?;
    if !pair_checks(o, &g)? {
        return Ok(());
    }
    let ctx = McContext::unchecked(&g.lts, &g.rep, &g.h)?;
    let twisted = match linfty::twisted_mc(&ctx, &g.t, &p) {
        Ok(t) => t,
        Err(e) => {
            record(o, "base operator is Maurer-Cartan", Err(e))?;
            return Ok(());
        }
    };
    let sum = g.t.add(&p)?;
    let direct = linfty::mc_residual(&ctx, &sum)?;
    record(o, "twisted residual equals residual of T+P", Ok(tensor_report("twisting", "difference", &twisted.sub(&direct)?)))?;
    record(o, "perturbation is Maurer-Cartan in the twisted algebra", Ok(tensor_report("twisted", "twisted residual", &twisted)))?;
    o.output("twisted residual", Output::Tensor(twisted));
    Ok(())
}

fn deformation_of(f: &AlgebraFile) -> CmdResult<Deformation> {
    if f.deformation.is_empty() {
        return Err(Failure::Usage("the file declares no [deformation_term]".into()));
    }
    Ok(Deformation::new(gen_of(f)?, f.deformation.clone())?)
}

pub fn obstruction(o: &mut Outcome, f: &AlgebraFile, budget: Budget) -> CmdResult<()> {
    let d = deformation_of(f)?;
    if !pair_checks(o, &d.base)? {
        return Ok(());
    }
    let obs = match deform::obstruction(&d) {
        Ok(obs) => obs,
        Err(e) => {
            record(o, &format!("deformation of order {}", d.order()), Err(e))?;
            return Ok(());
        }
    };
    let closed = deform::obstruction_is_closed(&d)?;
    record(o, "obstruction is closed", Ok(flag("obstruction", "obstruction is closed", closed)))?;
    let trivial = deform::is_extendable(&d, budget)?.is_some();
    o.output("order", Output::Count(d.order()));
    o.output("obstruction", Output::Tensor(obs));
    o.output("class vanishes", Output::Text(if trivial { "yes" } else { "no" }.into()));
    Ok(())
}

pub fn extend(o: &mut Outcome, f: &AlgebraFile, budget: Budget) -> CmdResult<()> {
    let d = deformation_of(f)?;
    if !pair_checks(o, &d.base)? {
        return Ok(());
    }
    if let Err(e) = deform::obstruction(&d) {
        record(o, &format!("deformation of order {}", d.order()), Err(e))?;
        return Ok(());
    }
    match deform::is_extendable(&d, budget)? {
        Some(ext) => {
            let mut r = Report::new("extension");
            for (s, c) in deform::residual_coefficients(&ext.extended, ext.extended.order()).iter().enumerate() {
                for idx in c.tuples() {
                    r.record(&format!("coefficient of λ^{s}"), &idx, c.value(&idx).to_vec());
                }
            }
            record(o, &format!("extended deformation of order {}", ext.extended.order()), Ok(r))?;
            o.output("sign", Output::Text(ext.sign.label().into()));
            o.output(format!("T{}", ext.extended.order()), Output::Matrix(ext.next));
        }
        None => {
            record(o, "extension exists", Ok(flag("extension", "obstruction class is nonzero", false)))?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Induced {
    Lts,
    Ns,
    Rep,
}

pub fn induce(o: &mut Outcome, f: &AlgebraFile, what: Induced) -> CmdResult<()> {
    let g = gen_of(f)?;
    if !pair_checks(o, &g)? || !record(o, "generalized reynolds operator", reynolds::check_generalized_reynolds(&g))? {
        return Ok(());
    }
    match what {
        Induced::Lts => {
            let t = reynolds::induced_bracket_tensor(&g);
            let l = Lts::new(t.clone())?;
            record(o, "induced bracket is a lie triple system", Ok(check_lts(&l)))?;
            record(o, "T is a morphism", Ok(reynolds::t_morphism_check(&g, &l)))?;
            o.output("triple_bracket", Output::Tensor(t));
        }
        Induced::Rep => {
            let l = Lts::new(reynolds::induced_bracket_tensor(&g))?;
            let rep = reynolds::induced_rep_unchecked(&g);
            record(o, "induced action is a representation", check_rep(&l, &rep))?;
            let dm = g.dim_m();
            for i in 0..dm {
                for j in 0..dm {
                    let m = rep.theta_matrix(i, j);
                    if !m.is_zero() {
                        o.output(format!("theta_T({i},{j})"), Output::Matrix(m.clone()));
                    }
                }
            }
        }
        Induced::Ns => {
            let n = ns::induced_ns_unchecked(&g);
            record(o, "induced NS-Lie triple system", Ok(ns::check_ns_lts(&n)))?;
            record(o, "subadjacent bracket is the induced bracket", Ok(subadjacent_matches(&g, &n)))?;
            o.output("curly", Output::Tensor(n.curly().clone()));
            o.output("square", Output::Tensor(n.square().clone()));
        }
    }
    Ok(())
}

fn subadjacent_matches(g: &GenReynolds, n: &NsLts) -> Report {
    let diff = n.subadjacent_tensor().sub(&reynolds::induced_bracket_tensor(g)).expect("same shape");
    tensor_report("subadjacent", "difference", &diff)
}

pub fn transport(o: &mut Outcome, src: &AlgebraFile, dst: &AlgebraFile, witness: &AlgebraFile, level: usize, budget: Budget) -> CmdResult<()> {
    let g = gen_of(src)?;
    let g2 = gen_of(dst)?;
    let phi = witness.morphism_phi.clone().ok_or_else(|| Failure::Usage("the witness declares no [morphism_phi]".into()))?;
    let psi = witness.morphism_psi.clone().ok_or_else(|| Failure::Usage("the witness declares no [morphism_psi]".into()))?;
    let w = MorphismWitness { phi, psi };
    if !record(o, "morphism of generalized reynolds operators", reynolds::morphism_check(&g, &g2, &w))? {
        return Ok(());
    }
    record(o, &format!("transport commutes with the differential at level {level}"), reynolds::transport_commutes(&g, &g2, &w, level, budget))?;
    Ok(())
}

pub fn equivalence(o: &mut Outcome, first: &AlgebraFile, second: &AlgebraFile, witness: Option<&AlgebraFile>) -> CmdResult<()> {
    let d = deformation_of(first)?;
    let d2 = deformation_of(second)?;
    if d.base != d2.base {
        return Err(Failure::Usage("the two deformations have different base operators".into()));
    }
    let chi = deform::infinitesimal_class_check(&d, &d2)?;
    record(o, "same infinitesimal class", Ok(flag("infinitesimal class", "first-order terms differ by a coboundary", chi.is_some())))?;
    if let Some(chi) = chi {
        o.output("chi", Output::Matrix(chi));
    }
    if let Some(w) = witness {
        let chi = w.equivalence_chi.clone().ok_or_else(|| Failure::Usage("the witness declares no [equivalence_chi]".into()))?;
        let ew = EquivalenceWitness { chi, phis: w.equivalence_phis.clone(), psis: w.equivalence_psis.clone() };
        record(o, "equivalence witness", deform::verify_equivalence(&d, &d2, &ew))?;
    }
    Ok(())
}

fn regular_theta(l: &Lts) -> Vec<Matrix> {
    let rep = regular_rep_unchecked(l);
    let d = l.dim();
    (0..d * d).map(|k| rep.theta_matrix(k / d, k % d).clone()).collect()
}

/// The Witt instance as a file: both brackets, the regular module,
/// `H = 2λ[·,·,·]`, `T = R`, both weighted operators and the NS structure.
pub fn witt_file(spec: &WittSpec) -> CmdResult<AlgebraFile> {
    let w = catalog::witt(spec)?;
    let g = reynolds::embed_weighted(&w.lts_op)?;
    let n = ns::ns_from_weighted_reynolds(&w.lts_op)?;
    let Carrier::Lie(lie) = &w.lie_op.carrier else { unreachable!("Lie carrier") };
    Ok(AlgebraFile {
        dim: Some(w.lts.dim()),
        labels: Some(catalog::witt_labels(spec.max_degree)),
        lie_bracket: Some(lie.tensor().clone()),
        triple_bracket: Some(w.lts.tensor().clone()),
        rep: Some(RepBlock::Theta { dim_m: w.lts.dim(), theta: regular_theta(&w.lts) }),
        cocycle_h: Some(g.h.clone()),
        map_t: Some(g.t.clone()),
        reynolds: vec![
            ReynoldsBlock { carrier: CarrierKind::Lie, weight: w.lie_op.weight.clone(), r: w.lie_op.r.clone() },
            ReynoldsBlock { carrier: CarrierKind::Lts, weight: w.lts_op.weight.clone(), r: w.lts_op.r.clone() },
        ],
        ns: Some((n.curly().clone(), n.square().clone())),
        ..AlgebraFile::default()
    })
}

/// The Block instance as a file. `checked` refuses structures that fail
/// their axioms; unchecked output is emitted as computed.
pub fn block_file(spec: &BlockSpec, checked: bool) -> CmdResult<AlgebraFile> {
    let b = if checked { catalog::block(spec)? } else { catalog::block_unchecked(spec)? };
    let h = b.lts.tensor().scale(&b.op.weight);
    Ok(AlgebraFile {
        dim: Some(b.lts.dim()),
        labels: Some(catalog::block_labels(spec.max_total_degree)),
        triple_bracket: Some(b.lts.tensor().clone()),
        rep: Some(RepBlock::Theta { dim_m: b.lts.dim(), theta: regular_theta(&b.lts) }),
        cocycle_h: Some(h),
        map_t: Some(b.op.r.clone()),
        reynolds: vec![ReynoldsBlock { carrier: CarrierKind::Lts, weight: b.op.weight.clone(), r: b.op.r.clone() }],
        ..AlgebraFile::default()
    })
}

pub fn random_file(seed: u64, max_dim: usize) -> CmdResult<(String, AlgebraFile)> {
    let inst = catalog::random_verified_instance(seed, max_dim)?;
    let g = inst.g;
    let (d, dm) = (g.dim_l(), g.dim_m());
    let theta = (0..d * d).map(|k| g.rep.theta_matrix(k / d, k % d).clone()).collect();
    Ok((
        inst.construction,
        AlgebraFile {
            dim: Some(d),
            triple_bracket: Some(g.lts.tensor().clone()),
            rep: Some(RepBlock::Theta { dim_m: dm, theta }),
            cocycle_h: Some(g.h.clone()),
            map_t: Some(g.t.clone()),
            ..AlgebraFile::default()
        },
    ))
}

pub fn block_spec(q: Rational, max_total_degree: usize, lambda: Rational, lie_derived: bool) -> BlockSpec {
    let coefficient = if lie_derived { BlockCoefficient::LieDerived } else { BlockCoefficient::Printed };
    BlockSpec { q, max_total_degree, lambda, coefficient }
}
