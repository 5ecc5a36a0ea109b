//! Evaluate one row of a structure map, or of a composite of structure maps.
//!
//! Expressions are built from `mu`, `eta`, `delta`, `epsilon`, `mu_hat`,
//! `A`, `C`, `Theta`, `R`, `L`, `T` and `id`, joined with `∘` (or `.`) and
//! `⊗` (or `x`), with parentheses. `A`, `C`, `Theta`, `R`, `L` and `id` act
//! on `h̄`; a `^-1` suffix selects the inverse. `T` acts on `h̄⊗j_V` with
//! `V = I`, or `T[d1,d2,...]` for another `V`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Format, Instance, RunConfig};
use crate::base::{BaseObject, BraidedCategory, Dir, GradedObject, GradedVect, PlainObject, PlainVect};
use crate::bialgebra::{diag, Bialgebra, Encodable};
use crate::error::{Error, Result};
use crate::index::{pair, Index};
use crate::matcat::{assoc, mat_id, units, MatMorphism, Side};

#[derive(Clone, Debug, PartialEq)]
enum Expr {
    Name { name: String, inverse: bool, arg: Option<Vec<i64>> },
    Compose(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Inv,
    List(Vec<i64>),
    Compose,
    Tensor,
    Open,
    Close,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn int_list(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse().map_err(|_| usage(format!("not an integer: {p:?}"))))
        .collect()
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(ch) = it.next() {
        match ch {
            c if c.is_whitespace() => {}
            '∘' | '.' => out.push(Tok::Compose),
            '⊗' => out.push(Tok::Tensor),
            '(' => out.push(Tok::Open),
            ')' => out.push(Tok::Close),
            '^' => {
                let rest: String = [it.next(), it.next()].into_iter().flatten().collect();
                if rest != "-1" {
                    return Err(usage("only ^-1 is supported"));
                }
                out.push(Tok::Inv);
            }
            '[' => {
                let body: String = it.by_ref().take_while(|&c| c != ']').collect();
                out.push(Tok::List(int_list(&body)?));
            }
            c if c.is_alphanumeric() || c == '_' || c == '̂' => {
                let mut id = String::from(c);
                while let Some(&n) = it.peek() {
                    if n.is_alphanumeric() || n == '_' || n == '̂' {
                        id.push(n);
                        it.next();
                    } else {
                        break;
                    }
                }
                if id == "x" {
                    out.push(Tok::Tensor);
                } else {
                    out.push(Tok::Ident(id));
                }
            }
            c => return Err(usage(format!("unexpected character {c:?} in expression"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.tensor()?;
        while self.peek() == Some(&Tok::Compose) {
            self.bump();
            e = Expr::Compose(Box::new(e), Box::new(self.tensor()?));
        }
        Ok(e)
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while self.peek() == Some(&Tok::Tensor) {
            self.bump();
            e = Expr::Tensor(Box::new(e), Box::new(self.atom()?));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Tok::Open) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::Close) => Ok(e),
                    _ => Err(usage("missing ')'")),
                }
            }
            Some(Tok::Ident(name)) => {
                let mut inverse = false;
                let mut arg = None;
                loop {
                    match self.peek() {
                        Some(Tok::Inv) if !inverse => inverse = true,
                        Some(Tok::List(l)) if arg.is_none() => arg = Some(l.clone()),
                        _ => break,
                    }
                    self.bump();
                }
                Ok(Expr::Name { name: canonical(&name)?.into(), inverse, arg })
            }
            t => Err(usage(format!("expected a map name, found {t:?}"))),
        }
    }
}

fn canonical(name: &str) -> Result<&'static str> {
    Ok(match name {
        "mu" | "μ" => "mu",
        "eta" | "η" => "eta",
        "delta" | "Δ" => "delta",
        "epsilon" | "ε" => "epsilon",
        "mu_hat" | "muhat" | "μ̂" => "mu_hat",
        "A" => "A",
        "C" => "C",
        "Theta" | "Θ" => "Theta",
        "R" => "R",
        "L" => "L",
        "T" => "T",
        "id" | "Id" => "id",
        other => return Err(usage(format!("unknown map {other:?}"))),
    })
}

fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(s)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(usage(format!("trailing input in expression {s:?}")));
    }
    Ok(e)
}

/// A row given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowSpec {
    Star,
    Number(Index),
    /// `x0`, the encoded unit object.
    X0,
    /// `[d1,...]`: the summand `γ(x,x)` of `h̄` for the object with this word.
    Summand(Vec<i64>),
    Pair(Box<RowSpec>, Box<RowSpec>),
}

/// Parse `*`, a natural number, `x0`, `[d1,...]` or a pair `(r,s)`.
pub fn parse_row(s: &str) -> Result<RowSpec> {
    let (row, rest) = row_prefix(s.trim())?;
    if !rest.trim().is_empty() {
        return Err(usage(format!("trailing input in row {s:?}")));
    }
    Ok(row)
}

fn row_prefix(s: &str) -> Result<(RowSpec, &str)> {
    let s = s.trim_start();
    if let Some(rest) = s.strip_prefix('*').or_else(|| s.strip_prefix('∗')) {
        return Ok((RowSpec::Star, rest));
    }
    if let Some(rest) = s.strip_prefix("x0") {
        return Ok((RowSpec::X0, rest));
    }
    if let Some(rest) = s.strip_prefix('[') {
        let end = rest.find(']').ok_or_else(|| usage("missing ']' in row"))?;
        return Ok((RowSpec::Summand(int_list(&rest[..end])?), &rest[end + 1..]));
    }
    if let Some(rest) = s.strip_prefix('(') {
        let (a, rest) = row_prefix(rest)?;
        let rest = rest.trim_start().strip_prefix(',').ok_or_else(|| usage("expected ',' in row pair"))?;
        let (b, rest) = row_prefix(rest)?;
        let rest = rest.trim_start().strip_prefix(')').ok_or_else(|| usage("expected ')' in row pair"))?;
        return Ok((RowSpec::Pair(Box::new(a), Box::new(b)), rest));
    }
    let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
    if end == 0 {
        return Err(usage(format!("cannot read a row from {s:?}")));
    }
    let n = s[..end].parse().map_err(|_| usage("bad row number"))?;
    Ok((RowSpec::Number(Index(n)), &s[end..]))
}

/// Base objects that can be written as an integer list on the command line.
trait FromList: Encodable {
    fn from_list(ds: &[i64]) -> Result<Self>;
}

impl FromList for GradedObject {
    fn from_list(ds: &[i64]) -> Result<Self> {
        Ok(GradedObject::from_degrees(ds.iter().copied()))
    }
}

impl FromList for PlainObject {
    fn from_list(ds: &[i64]) -> Result<Self> {
        match ds {
            [n] if *n >= 0 => Ok(PlainObject(*n as usize)),
            _ => Err(usage("a plain object is written [n] with n ≥ 0")),
        }
    }
}

fn resolve<O: FromList>(r: &RowSpec) -> Result<Index> {
    Ok(match r {
        RowSpec::Star => Index::star(),
        RowSpec::Number(i) => i.clone(),
        RowSpec::X0 => crate::bialgebra::x0::<O>(),
        RowSpec::Summand(ds) => diag(&O::from_list(ds)?.encode()),
        RowSpec::Pair(a, b) => pair(&resolve::<O>(a)?, &resolve::<O>(b)?),
    })
}

fn build<C>(b: &Bialgebra<C>, e: &Expr) -> Result<MatMorphism<C::Obj>>
where
    C: BraidedCategory,
    C::Obj: FromList,
{
    match e {
        Expr::Compose(g, f) => build(b, g)?.compose(&build(b, f)?),
        Expr::Tensor(f, g) => Ok(build(b, f)?.tensor(&build(b, g)?)),
        Expr::Name { name, inverse, arg } => {
            let h = b.h();
            let dir = if *inverse { Dir::Inverse } else { Dir::Forward };
            let plain = |m: MatMorphism<C::Obj>| {
                if *inverse {
                    Err(usage(format!("{name} has no inverse form here")))
                } else {
                    Ok(m)
                }
            };
            if arg.is_some() && name != "T" {
                return Err(usage(format!("{name} takes no object argument")));
            }
            match name.as_str() {
                "mu" => plain(b.mu()),
                "eta" => plain(b.eta()),
                "delta" => plain(b.delta()),
                "epsilon" => plain(b.epsilon()),
                "mu_hat" => plain(b.mu_hat()?.mor),
                "id" => Ok(mat_id(h)),
                "A" => Ok(assoc(h, h, h, dir)),
                "C" => Ok(b.cat().braid_m(h, h, dir)),
                "Theta" => {
                    let t = b.cat().twist_m(h);
                    if *inverse {
                        Err(usage("Theta^-1 is not provided"))
                    } else {
                        Ok(t)
                    }
                }
                "R" => Ok(units(h, Side::Right, dir)),
                "L" => Ok(units(h, Side::Left, dir)),
                "T" => {
                    let v = match arg {
                        Some(ds) => C::Obj::from_list(ds)?,
                        None => C::Obj::unit(),
                    };
                    plain(b.action_t(&v))
                }
                _ => unreachable!("names are canonical"),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryReport {
    pub column: String,
    pub src: String,
    pub dst: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport {
    pub expr: String,
    pub row: String,
    pub entries: Vec<EntryReport>,
}

impl EvalReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = format!("{} at row {}: {} nonzero entries\n", self.expr, self.row, self.entries.len());
                for e in &self.entries {
                    let rows: Vec<String> = e.matrix.iter().map(|r| r.join(" ")).collect();
                    s.push_str(&format!("  column {}: {} → {}  [{}]\n", e.column, e.src, e.dst, rows.join("; ")));
                }
                s
            }
        }
    }
}

fn eval_in<C>(base: C, expr: &str, row: &RowSpec) -> Result<EvalReport>
where
    C: BraidedCategory,
    C::Obj: FromList,
{
    let e = parse_expr(expr)?;
    let b = Bialgebra::new(base);
    let m = build(&b, &e)?;
    let x = resolve::<C::Obj>(row)?;
    let entries: BTreeMap<_, _> = m.row(&x)?;
    Ok(EvalReport {
        expr: expr.to_string(),
        row: x.to_string(),
        entries: entries
            .into_iter()
            .map(|(y, f)| EntryReport {
                column: y.to_string(),
                src: f.src().to_string(),
                dst: f.dst().to_string(),
                matrix: f
                    .matrix()
                    .to_dense()
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect())
                    .collect(),
            })
            .collect(),
    })
}

/// Evaluate `expr` at `row` in the instance selected by `cfg`.
pub fn eval_morphism(expr: &str, row: &RowSpec, cfg: &RunConfig) -> Result<EvalReport> {
    cfg.validate()?;
    match cfg.instance {
        Instance::Graded => eval_in(GradedVect::new(cfg.q.clone())?, expr, row),
        Instance::Symmetric => eval_in(PlainVect, expr, row),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(expr: &str, row: &str) -> Result<EvalReport> {
        eval_morphism(expr, &parse_row(row)?, &RunConfig::default())
    }

    #[test]
    fn parses_composites() {
        let e = parse_expr("mu ∘ (mu ⊗ id)").unwrap();
        assert!(matches!(e, Expr::Compose(_, _)));
        assert_eq!(parse_expr("mu.(id x mu)").unwrap(), parse_expr("μ∘(Id⊗μ)").unwrap());
        assert!(parse_expr("A^-1").is_ok());
        assert!(parse_expr("nu").is_err());
        assert!(parse_expr("mu ∘").is_err());
        assert!(parse_expr("(mu").is_err());
    }

    #[test]
    fn parses_rows() {
        assert_eq!(parse_row("*").unwrap(), RowSpec::Star);
        assert_eq!(parse_row("41").unwrap(), RowSpec::Number(Index::from(41u64)));
        assert_eq!(
            parse_row("(x0, [1,2])").unwrap(),
            RowSpec::Pair(Box::new(RowSpec::X0), Box::new(RowSpec::Summand(vec![1, 2])))
        );
        assert!(parse_row("(1,").is_err());
        assert!(parse_row("abc").is_err());
    }

    #[test]
    fn eta_at_star() {
        let r = run("eta", "*").unwrap();
        assert_eq!(r.entries.len(), 1);
        // γ(x₀, x₀) with x₀ = 1
        assert_eq!(r.entries[0].column, "4");
        assert_eq!(r.entries[0].matrix, vec![vec!["1".to_string()]]);
    }

    #[test]
    fn counit_on_a_summand() {
        let r = run("epsilon", "[1]").unwrap();
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].column, "0");
        assert_eq!(r.entries[0].matrix, vec![vec!["1".to_string()]]);
    }

    #[test]
    fn composites_evaluate() {
        let r = run("epsilon ∘ eta", "*").unwrap();
        assert_eq!(r.entries.len(), 1);
        assert!(run("mu ∘ (mu ⊗ id)", "(([1],[2]),[1])").is_ok());
        assert!(run("mu ∘ mu", "*").is_err());
        assert!(run("T[1,2]", "([1], x0)").is_ok());
        let rows = run("A^-1 ∘ A", "(([1],[2]),[1])").unwrap();
        assert_eq!(rows.entries.len(), 1);
    }

    #[test]
    fn rows_outside_the_domain_are_errors() {
        assert!(matches!(run("mu", "5"), Err(Error::NotMember { .. })));
    }
}
