//! The algebra-description text format.
//!
//! ```text
//! # comment
//! basis l0 l1 l2          # or: dim 3
//! [lie_bracket]
//! 1 2 = 0:-1              # [e1,e2] = -e0
//! [triple_bracket]
//! 1 2 0 = 0:3 2:1/2
//! [rep dim_m=2]
//! theta 0 1 1 = 0:1       # θ(e0,e1) f1 = f0
//! [cocycle_h]
//! 0 1 2 = 1:-2            # values in M
//! [map_t rows=3 cols=2]
//! 1 0
//! 0 1/2
//! 0 0
//! [reynolds carrier=lts weight=2 rows=3 cols=3]
//! ...
//! ```
//!
//! Tensor entries list only nonzero values as `index:coefficient`. Every
//! matrix section states its own shape, so witness files need no basis.
//! Sections may appear in any order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use lietriple::exactlin::{format_rational, parse_rational};
use lietriple::{Matrix, MultiMap, Rational};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarrierKind {
    Lie,
    Lts,
}

impl CarrierKind {
    fn name(self) -> &'static str {
        match self {
            CarrierKind::Lie => "lie",
            CarrierKind::Lts => "lts",
        }
    }
}

/// A representation either of the triple system (`theta`) or of the Lie
/// algebra (`rho`), which is then pulled back along `[[x,y],z]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepBlock {
    Theta { dim_m: usize, theta: Vec<Matrix> },
    Rho { dim_m: usize, rho: Vec<Matrix> },
}

impl RepBlock {
    pub fn dim_m(&self) -> usize {
        match self {
            RepBlock::Theta { dim_m, .. } | RepBlock::Rho { dim_m, .. } => *dim_m,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReynoldsBlock {
    pub carrier: CarrierKind,
    pub weight: Rational,
    pub r: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraFile {
    pub dim: Option<usize>,
    pub labels: Option<Vec<String>>,
    pub lie_bracket: Option<MultiMap>,
    pub triple_bracket: Option<MultiMap>,
    pub rep: Option<RepBlock>,
    pub cocycle_h: Option<MultiMap>,
    pub lie_cocycle_h: Option<MultiMap>,
    pub map_t: Option<Matrix>,
    pub reynolds: Vec<ReynoldsBlock>,
    pub ns: Option<(MultiMap, MultiMap)>,
    /// `T_1, T_2, …` of a deformation whose base is `map_t`.
    pub deformation: Vec<Matrix>,
    pub perturbation: Option<Matrix>,
    pub morphism_phi: Option<Matrix>,
    pub morphism_psi: Option<Matrix>,
    pub equivalence_chi: Option<Matrix>,
    /// `φ_2, φ_3, …`.
    pub equivalence_phis: Vec<Matrix>,
    pub equivalence_psis: Vec<Matrix>,
}

#[derive(Debug, Clone)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

#[derive(Debug, Clone)]
struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn error(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column, message: message.into() }
    }
}

#[derive(Debug)]
struct Section<'a> {
    header: Line<'a>,
    name: &'a str,
    attrs: BTreeMap<&'a str, (&'a str, usize)>,
    body: Vec<Line<'a>>,
}

impl<'a> Section<'a> {
    fn attr(&self, key: &str) -> Result<(&'a str, usize), ParseError> {
        self.attrs
            .get(key)
            .copied()
            .ok_or_else(|| self.header.error(1, format!("section [{}] needs {key}=", self.name)))
    }

    fn usize_attr(&self, key: &str) -> Result<usize, ParseError> {
        let (v, col) = self.attr(key)?;
        v.parse().map_err(|_| self.header.error(col, format!("{key} must be a non-negative integer")))
    }

    fn rational_attr(&self, key: &str) -> Result<Rational, ParseError> {
        let (v, col) = self.attr(key)?;
        parse_rational(v).map_err(|e| self.header.error(col, e.to_string()))
    }

    fn check_attrs(&self, allowed: &[&str]) -> Result<(), ParseError> {
        for (k, (_, col)) in &self.attrs {
            if !allowed.contains(k) {
                return Err(self.header.error(col - k.chars().count() - 1, format!("unknown attribute {k:?} in [{}]", self.name)));
            }
        }
        Ok(())
    }
}

fn tokenize(number: usize, raw: &str) -> Line<'_> {
    let content = raw.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in content.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push(Token { text: &content[s..i], column: content[..s].chars().count() + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push(Token { text: &content[s..], column: content[..s].chars().count() + 1 });
    }
    Line { number, tokens }
}

fn parse_header(line: Line<'_>) -> Result<Section<'_>, ParseError> {
    let first = &line.tokens[0];
    let last = line.tokens.last().expect("nonempty");
    if !last.text.ends_with(']') {
        return Err(line.error(last.column + last.text.chars().count(), "section header must end with ']'"));
    }
    let name = first.text.trim_start_matches('[').trim_end_matches(']');
    if name.is_empty() {
        return Err(line.error(first.column, "empty section name"));
    }
    let mut attrs = BTreeMap::new();
    for tok in &line.tokens[1..] {
        let text = tok.text.trim_end_matches(']');
        if text.is_empty() {
            continue;
        }
        let Some((k, v)) = text.split_once('=') else {
            return Err(line.error(tok.column, format!("expected key=value, found {text:?}")));
        };
        if attrs.insert(k, (v, tok.column + k.chars().count() + 1)).is_some() {
            return Err(line.error(tok.column, format!("duplicate attribute {k:?}")));
        }
    }
    Ok(Section { name, attrs, body: Vec::new(), header: line })
}

fn parse_index(line: &Line, tok: &Token, bound: usize, what: &str) -> Result<usize, ParseError> {
    let i: usize = tok.text.parse().map_err(|_| line.error(tok.column, format!("expected a {what} index, found {:?}", tok.text)))?;
    if i >= bound {
        return Err(line.error(tok.column, format!("{what} index {i} out of range (dimension {bound})")));
    }
    Ok(i)
}

fn parse_rational_token(line: &Line, text: &str, column: usize) -> Result<Rational, ParseError> {
    parse_rational(text).map_err(|e| line.error(column, e.to_string()))
}

/// Input indices and the sparse output value of one entry line.
type Entry = (Vec<usize>, Vec<(usize, Rational)>);

/// `i j k = l:c l:c …` after an optional keyword token.
fn parse_entry(line: &Line, skip: usize, arity: usize, dim_in: &[usize], dim_out: usize) -> Result<Entry, ParseError> {
    let toks = &line.tokens[skip..];
    if toks.len() < arity + 1 {
        let col = toks.last().map(|t| t.column).unwrap_or(1);
        return Err(line.error(col, format!("expected {arity} indices followed by '='")));
    }
    let mut idx = Vec::with_capacity(arity);
    for (k, tok) in toks[..arity].iter().enumerate() {
        idx.push(parse_index(line, tok, dim_in[k], "input")?);
    }
    let eq = &toks[arity];
    if eq.text != "=" {
        return Err(line.error(eq.column, format!("expected '=', found {:?}", eq.text)));
    }
    let mut terms: Vec<(usize, Rational)> = Vec::new();
    for tok in &toks[arity + 1..] {
        let Some((o, c)) = tok.text.split_once(':') else {
            return Err(line.error(tok.column, format!("expected index:coefficient, found {:?}", tok.text)));
        };
        let out_tok = Token { text: o, column: tok.column };
        let out = parse_index(line, &out_tok, dim_out, "output")?;
        if terms.iter().any(|(k, _)| *k == out) {
            return Err(line.error(tok.column, format!("output index {out} repeated")));
        }
        let coeff = parse_rational_token(line, c, tok.column + o.chars().count() + 1)?;
        terms.push((out, coeff));
    }
    Ok((idx, terms))
}

fn require_dim(dim: Option<usize>, s: &Section) -> Result<usize, ParseError> {
    dim.ok_or_else(|| s.header.error(1, format!("section [{}] needs a preceding 'dim' or 'basis' line", s.name)))
}

fn parse_tensor(s: &Section, arity: usize, dim_in: usize, dim_out: usize, keyword: Option<&str>) -> Result<MultiMap, ParseError> {
    let mut t = MultiMap::zero(arity, dim_in, dim_out);
    let mut seen = std::collections::BTreeSet::new();
    for line in &s.body {
        let skip = match keyword {
            Some(k) => {
                if line.tokens[0].text != k {
                    return Err(line.error(line.tokens[0].column, format!("expected {k:?}")));
                }
                1
            }
            None => 0,
        };
        let (idx, terms) = parse_entry(line, skip, arity, &vec![dim_in; arity], dim_out)?;
        if !seen.insert(idx.clone()) {
            return Err(line.error(line.tokens[skip].column, format!("entry {idx:?} given twice")));
        }
        for (o, c) in terms {
            t.set(&idx, o, c);
        }
    }
    Ok(t)
}

fn parse_matrix(s: &Section) -> Result<Matrix, ParseError> {
    let rows = s.usize_attr("rows")?;
    let cols = s.usize_attr("cols")?;
    if s.body.len() != rows {
        let at = s.body.get(rows).unwrap_or(&s.header);
        return Err(at.error(1, format!("[{}] declares {rows} rows, found {}", s.name, s.body.len())));
    }
    let mut m = Matrix::zeros(rows, cols);
    for (r, line) in s.body.iter().enumerate() {
        if line.tokens.len() != cols {
            let col = line.tokens.get(cols).or(line.tokens.last()).map(|t| t.column).unwrap_or(1);
            return Err(line.error(col, format!("expected {cols} entries, found {}", line.tokens.len())));
        }
        for (c, tok) in line.tokens.iter().enumerate() {
            m.set(r, c, parse_rational_token(line, tok.text, tok.column)?);
        }
    }
    Ok(m)
}

fn parse_rep(s: &Section, dim: usize) -> Result<RepBlock, ParseError> {
    let dim_m = s.usize_attr("dim_m")?;
    let kind = s.body.first().map(|l| l.tokens[0].text).unwrap_or("theta");
    if let Some(first) = s.body.first() {
        if kind != "theta" && kind != "rho" {
            return Err(first.error(first.tokens[0].column, "expected 'theta' or 'rho'"));
        }
    }
    let lie = kind == "rho";
    let slots = if lie { 1 } else { 2 };
    let mut mats = vec![Matrix::zeros(dim_m, dim_m); if lie { dim } else { dim * dim }];
    let mut seen = std::collections::BTreeSet::new();
    for line in &s.body {
        let head = &line.tokens[0];
        if head.text != kind {
            return Err(line.error(head.column, format!("expected {kind:?}; a rep block holds either theta or rho lines")));
        }
        let mut dims = vec![dim; slots];
        dims.push(dim_m);
        let (idx, terms) = parse_entry(line, 1, slots + 1, &dims, dim_m)?;
        if !seen.insert(idx.clone()) {
            return Err(line.error(line.tokens[1].column, format!("entry {idx:?} given twice")));
        }
        let slot = if lie { idx[0] } else { idx[0] * dim + idx[1] };
        for (b, c) in terms {
            mats[slot].set(b, idx[slots], c);
        }
    }
    Ok(if lie { RepBlock::Rho { dim_m, rho: mats } } else { RepBlock::Theta { dim_m, theta: mats } })
}

fn ordered_index(s: &Section, expected: usize) -> Result<(), ParseError> {
    let index = s.usize_attr("index")?;
    if index != expected {
        let (_, col) = s.attr("index")?;
        return Err(s.header.error(col, format!("expected index={expected} (terms must appear in order)")));
    }
    Ok(())
}

pub fn parse(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut file = AlgebraFile::default();
    let mut sections: Vec<Section> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = tokenize(n + 1, raw);
        if line.tokens.is_empty() {
            continue;
        }
        let head = line.tokens[0].text;
        if head.starts_with('[') {
            sections.push(parse_header(line)?);
        } else if let Some(s) = sections.last_mut() {
            s.body.push(line);
        } else {
            match head {
                "dim" | "basis" if file.dim.is_some() => {
                    return Err(line.error(1, "dimension declared twice"));
                }
                "dim" => {
                    let tok = line.tokens.get(1).ok_or_else(|| line.error(1, "dim needs a value"))?;
                    if line.tokens.len() > 2 {
                        return Err(line.error(line.tokens[2].column, "unexpected token after dim"));
                    }
                    file.dim = Some(tok.text.parse().map_err(|_| line.error(tok.column, "dim must be a non-negative integer"))?);
                }
                "basis" => {
                    let labels: Vec<String> = line.tokens[1..].iter().map(|t| t.text.to_string()).collect();
                    file.dim = Some(labels.len());
                    file.labels = Some(labels);
                }
                other => return Err(line.error(1, format!("unexpected {other:?} outside a section"))),
            }
        }
    }

    let mut seen = std::collections::BTreeSet::new();
    // Shapes first, so tensor sections can refer to dim_m in any order.
    let dim_m = sections.iter().find(|s| s.name == "rep").map(|s| s.usize_attr("dim_m")).transpose()?;
    for s in &sections {
        let repeatable = matches!(s.name, "reynolds" | "deformation_term" | "equivalence_phi" | "equivalence_psi");
        if !repeatable && !seen.insert(s.name) {
            return Err(s.header.error(1, format!("section [{}] appears twice", s.name)));
        }
        match s.name {
            "lie_bracket" => {
                s.check_attrs(&[])?;
                let d = require_dim(file.dim, s)?;
                file.lie_bracket = Some(parse_tensor(s, 2, d, d, None)?);
            }
            "triple_bracket" => {
                s.check_attrs(&[])?;
                let d = require_dim(file.dim, s)?;
                file.triple_bracket = Some(parse_tensor(s, 3, d, d, None)?);
            }
            "rep" => {
                s.check_attrs(&["dim_m"])?;
                let d = require_dim(file.dim, s)?;
                file.rep = Some(parse_rep(s, d)?);
            }
            "cocycle_h" | "lie_cocycle_h" => {
                s.check_attrs(&[])?;
                let d = require_dim(file.dim, s)?;
                let dm = dim_m.ok_or_else(|| s.header.error(1, format!("section [{}] needs a [rep] section", s.name)))?;
                if s.name == "cocycle_h" {
                    file.cocycle_h = Some(parse_tensor(s, 3, d, dm, None)?);
                } else {
                    file.lie_cocycle_h = Some(parse_tensor(s, 2, d, dm, None)?);
                }
            }
            "map_t" => {
                s.check_attrs(&["rows", "cols"])?;
                file.map_t = Some(parse_matrix(s)?);
            }
            "reynolds" => {
                s.check_attrs(&["carrier", "weight", "rows", "cols"])?;
                let (c, col) = s.attr("carrier")?;
                let carrier = match c {
                    "lie" => CarrierKind::Lie,
                    "lts" => CarrierKind::Lts,
                    _ => return Err(s.header.error(col, "carrier must be 'lie' or 'lts'")),
                };
                if file.reynolds.iter().any(|b| b.carrier == carrier) {
                    return Err(s.header.error(col, format!("a reynolds block on carrier {c} appears twice")));
                }
                file.reynolds.push(ReynoldsBlock { carrier, weight: s.rational_attr("weight")?, r: parse_matrix(s)? });
            }
            "ns" => {
                s.check_attrs(&[])?;
                let d = require_dim(file.dim, s)?;
                let mut curly = MultiMap::zero(3, d, d);
                let mut square = MultiMap::zero(3, d, d);
                let mut keys = std::collections::BTreeSet::new();
                for line in &s.body {
                    let head = &line.tokens[0];
                    let target = match head.text {
                        "curly" => &mut curly,
                        "square" => &mut square,
                        _ => return Err(line.error(head.column, "expected 'curly' or 'square'")),
                    };
                    let (idx, terms) = parse_entry(line, 1, 3, &[d, d, d], d)?;
                    if !keys.insert((head.text, idx.clone())) {
                        return Err(line.error(line.tokens[1].column, format!("entry {idx:?} given twice")));
                    }
                    for (o, c) in terms {
                        target.set(&idx, o, c);
                    }
                }
                file.ns = Some((curly, square));
            }
            "deformation_term" => {
                s.check_attrs(&["index", "rows", "cols"])?;
                ordered_index(s, file.deformation.len() + 1)?;
                file.deformation.push(parse_matrix(s)?);
            }
            "perturbation" | "morphism_phi" | "morphism_psi" | "equivalence_chi" => {
                s.check_attrs(&["rows", "cols"])?;
                let m = Some(parse_matrix(s)?);
                match s.name {
                    "perturbation" => file.perturbation = m,
                    "morphism_phi" => file.morphism_phi = m,
                    "morphism_psi" => file.morphism_psi = m,
                    _ => file.equivalence_chi = m,
                }
            }
            "equivalence_phi" | "equivalence_psi" => {
                s.check_attrs(&["index", "rows", "cols"])?;
                let list = if s.name == "equivalence_phi" { &mut file.equivalence_phis } else { &mut file.equivalence_psis };
                ordered_index(s, list.len() + 2)?;
                list.push(parse_matrix(s)?);
            }
            other => return Err(s.header.error(1, format!("unknown section [{other}]"))),
        }
    }
    Ok(file)
}

fn emit_terms(out: &mut String, v: &[Rational]) {
    out.push_str(" =");
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() {
            let _ = write!(out, " {k}:{}", format_rational(c));
        }
    }
    out.push('\n');
}

fn emit_tensor(out: &mut String, prefix: &str, t: &MultiMap) {
    for (idx, v) in t.nonzero_values() {
        out.push_str(prefix);
        let joined: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        out.push_str(&joined.join(" "));
        emit_terms(out, v);
    }
}

fn emit_matrix(out: &mut String, header: &str, m: &Matrix) {
    let _ = writeln!(out, "[{header} rows={} cols={}]", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(format_rational).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
}

fn emit_rep_matrix(out: &mut String, prefix: &str, m: &Matrix) {
    for a in 0..m.cols() {
        let col = m.column(a);
        if col.iter().any(|c| !c.is_zero()) {
            let _ = write!(out, "{prefix} {a}");
            emit_terms(out, &col);
        }
    }
}

/// Canonical text for `file`; `parse(&emit(f)) == f` for every parsed `f`.
pub fn emit(file: &AlgebraFile) -> String {
    let mut out = String::new();
    match (&file.labels, file.dim) {
        (Some(labels), _) => {
            let _ = writeln!(out, "basis {}", labels.join(" "));
        }
        (None, Some(d)) => {
            let _ = writeln!(out, "dim {d}");
        }
        (None, None) => {}
    }
    if let Some(t) = &file.lie_bracket {
        out.push_str("[lie_bracket]\n");
        emit_tensor(&mut out, "", t);
    }
    if let Some(t) = &file.triple_bracket {
        out.push_str("[triple_bracket]\n");
        emit_tensor(&mut out, "", t);
    }
    if let Some(rep) = &file.rep {
        let _ = writeln!(out, "[rep dim_m={}]", rep.dim_m());
        match rep {
            RepBlock::Theta { theta, .. } => {
                let d = file.dim.unwrap_or(0);
                for i in 0..d {
                    for j in 0..d {
                        emit_rep_matrix(&mut out, &format!("theta {i} {j}"), &theta[i * d + j]);
                    }
                }
            }
            RepBlock::Rho { rho, .. } => {
                for (i, m) in rho.iter().enumerate() {
                    emit_rep_matrix(&mut out, &format!("rho {i}"), m);
                }
            }
        }
    }
    if let Some(t) = &file.cocycle_h {
        out.push_str("[cocycle_h]\n");
        emit_tensor(&mut out, "", t);
    }
    if let Some(t) = &file.lie_cocycle_h {
        out.push_str("[lie_cocycle_h]\n");
        emit_tensor(&mut out, "", t);
    }
    if let Some(m) = &file.map_t {
        emit_matrix(&mut out, "map_t", m);
    }
    for b in &file.reynolds {
        emit_matrix(&mut out, &format!("reynolds carrier={} weight={}", b.carrier.name(), format_rational(&b.weight)), &b.r);
    }
    if let Some((curly, square)) = &file.ns {
        out.push_str("[ns]\n");
        emit_tensor(&mut out, "curly ", curly);
        emit_tensor(&mut out, "square ", square);
    }
    for (i, m) in file.deformation.iter().enumerate() {
        emit_matrix(&mut out, &format!("deformation_term index={}", i + 1), m);
    }
    if let Some(m) = &file.perturbation {
        emit_matrix(&mut out, "perturbation", m);
    }
    if let Some(m) = &file.morphism_phi {
        emit_matrix(&mut out, "morphism_phi", m);
    }
    if let Some(m) = &file.morphism_psi {
        emit_matrix(&mut out, "morphism_psi", m);
    }
    if let Some(m) = &file.equivalence_chi {
        emit_matrix(&mut out, "equivalence_chi", m);
    }
    for (i, m) in file.equivalence_phis.iter().enumerate() {
        emit_matrix(&mut out, &format!("equivalence_phi index={}", i + 2), m);
    }
    for (i, m) in file.equivalence_psis.iter().enumerate() {
        emit_matrix(&mut out, &format!("equivalence_psi index={}", i + 2), m);
    }
    out
}

/// Sparse `index:value` rendering of a vector, `0` when it vanishes.
pub fn sparse(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| format!("{k}:{}", format_rational(c))).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lietriple::exactlin::{int, rat};

    const SAMPLE: &str = "\
basis a b
[triple_bracket]
0 1 0 = 1:1/2
1 0 0 = 1:-1/2
[rep dim_m=1]
theta 0 1 0 = 0:3
[cocycle_h]
0 1 1 = 0:-2
[map_t rows=2 cols=1]
1
0
[reynolds carrier=lts weight=-2 rows=2 cols=2]
1 0
0 1/3
[deformation_term index=1 rows=2 cols=1]
0
1
";

    #[test]
    fn round_trip_is_byte_identical() {
        let f = parse(SAMPLE).unwrap();
        assert_eq!(emit(&f), SAMPLE);
        assert_eq!(parse(&emit(&f)).unwrap(), f);
        assert_eq!(f.triple_bracket.as_ref().unwrap().value(&[0, 1, 0]), &[int(0), rat(1, 2)]);
        assert_eq!(f.reynolds[0].weight, int(-2));
    }

    #[test]
    fn malformed_rational_has_location() {
        let err = parse("dim 1\n[map_t rows=1 cols=1]\n1//2\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 1));
        let err = parse("dim 2\n[triple_bracket]\n0 1 0 = 1:1//2\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 11));
    }

    #[test]
    fn index_out_of_range() {
        let err = parse("dim 2\n[triple_bracket]\n0 2 0 = 1:1\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 3));
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn canonicalizes_rationals() {
        let f = parse("dim 1\n[map_t rows=1 cols=2]\n2/4 -6/3\n").unwrap();
        assert_eq!(emit(&f), "dim 1\n[map_t rows=1 cols=2]\n1/2 -2\n");
    }
}
