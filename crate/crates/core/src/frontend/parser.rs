//! Recursive-descent parser for the manifold DSL. Items are first read into
//! a small syntax tree with spans, then resolved against the declared
//! parameters and handed to the spec builder.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use super::lexer::{tokenize, SourceSpan, Tok, Token};
use crate::model::{AlgebraSpec, SpecError};
use crate::scalar::{Matrix, Params, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(span: &SourceSpan, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        span: span.clone(),
        message: message.into(),
    })
}

#[derive(Clone, Debug)]
enum Expr {
    Num(Rational),
    Var(String, SourceSpan),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, SourceSpan),
    Pow(Box<Expr>, u32),
}

/// `coef * e_basis`, with 1-based basis index.
#[derive(Clone, Debug)]
struct VecTerm {
    coef: Option<Expr>,
    basis: usize,
    span: SourceSpan,
}

#[derive(Clone, Debug)]
enum MetricForm {
    Diag(Vec<Expr>),
    Rows(Vec<Vec<Expr>>),
}

#[derive(Clone, Debug)]
enum Item {
    Dim(usize),
    Params(Vec<(String, SourceSpan)>),
    Metric(MetricForm),
    Bracket(usize, SourceSpan, usize, SourceSpan, Vec<VecTerm>),
    Phi(usize, Vec<VecTerm>),
    Xi(Vec<VecTerm>),
    Eta(Vec<VecTerm>),
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

fn basis_index(s: &str) -> Option<usize> {
    let digits = s.strip_prefix('e')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn span(&self) -> SourceSpan {
        self.toks[self.pos].span.clone()
    }

    fn prev_span(&self) -> SourceSpan {
        self.toks[self.pos.saturating_sub(1)].span.clone()
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_punct(&self, c: char) -> bool {
        *self.peek() == Tok::Punct(c)
    }

    fn eat_punct(&mut self, c: char) -> bool {
        let hit = self.is_punct(c);
        if hit {
            self.bump();
        }
        hit
    }

    fn expect_punct(&mut self, c: char) -> Result<SourceSpan, ParseError> {
        if self.is_punct(c) {
            Ok(self.bump().span)
        } else {
            err(&self.span(), format!("expected `{c}`, found {}", self.peek()))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<SourceSpan, ParseError> {
        match self.peek() {
            Tok::Ident(s) if s == kw => Ok(self.bump().span),
            t => err(&self.span(), format!("expected `{kw}`, found {t}")),
        }
    }

    fn expect_int(&mut self) -> Result<(usize, SourceSpan), ParseError> {
        let sp = self.span();
        match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                s.parse()
                    .map(|n| (n, sp.clone()))
                    .or_else(|_| err(&sp, "integer too large"))
            }
            t => err(&sp, format!("expected an integer, found {t}")),
        }
    }

    fn expect_basis(&mut self) -> Result<(usize, SourceSpan), ParseError> {
        let sp = self.span();
        match self.peek().clone() {
            Tok::Ident(s) => match basis_index(&s) {
                Some(k) => {
                    self.bump();
                    Ok((k, sp))
                }
                None => err(&sp, format!("expected a basis vector `eK`, found `{s}`")),
            },
            t => err(&sp, format!("expected a basis vector `eK`, found {t}")),
        }
    }

    fn at_basis(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if basis_index(s).is_some())
    }

    fn at_dual(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == "dual")
    }

    // scalar = ["+"|"-"] product {("+"|"-") product}
    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut e = if self.eat_punct('-') {
            Expr::Neg(Box::new(self.product()?))
        } else {
            self.eat_punct('+');
            self.product()?
        };
        loop {
            if self.eat_punct('+') {
                e = Expr::Add(Box::new(e), Box::new(self.product()?));
            } else if self.eat_punct('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.product()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.factor()?;
        loop {
            if self.is_punct('*') {
                self.bump();
                e = Expr::Mul(Box::new(e), Box::new(self.factor()?));
            } else if self.is_punct('/') {
                let sp = self.bump().span;
                e = Expr::Div(Box::new(e), Box::new(self.factor()?), sp);
            } else {
                return Ok(e);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.eat_punct('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat_punct('^') {
            let (n, sp) = self.expect_int()?;
            let n = u32::try_from(n).or_else(|_| err(&sp, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let sp = self.span();
        match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                let n: num_bigint::BigInt = s.parse().expect("digits");
                Ok(Expr::Num(Rational::from_integer(n)))
            }
            Tok::Ident(s) if basis_index(&s).is_some() => err(&sp, format!("basis vector `{s}` in a scalar position")),
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr::Var(s, sp))
            }
            Tok::Punct('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_punct(')')?;
                Ok(e)
            }
            t => err(&sp, format!("expected a scalar, found {t}")),
        }
    }

    /// `vecexpr`; with `dual` set the basis is written `dual(eK)`.
    fn vecexpr(&mut self, dual: bool) -> Result<Vec<VecTerm>, ParseError> {
        if matches!(self.peek(), Tok::Int(s) if s == "0") && !matches!(self.peek_at(1), Tok::Punct('*' | '/')) {
            self.bump();
            return Ok(Vec::new());
        }
        let mut terms = Vec::new();
        let mut negate = self.eat_punct('-');
        if !negate {
            self.eat_punct('+');
        }
        loop {
            let mut t = self.vec_term(dual)?;
            if negate {
                t.coef = Some(Expr::Neg(Box::new(
                    t.coef.unwrap_or(Expr::Num(Rational::from_integer(1.into()))),
                )));
            }
            terms.push(t);
            if self.eat_punct('+') {
                negate = false;
            } else if self.eat_punct('-') {
                negate = true;
            } else {
                return Ok(terms);
            }
        }
    }

    fn basis_ref(&mut self, dual: bool) -> Result<(usize, SourceSpan), ParseError> {
        if dual {
            let start = self.expect_keyword("dual")?;
            self.expect_punct('(')?;
            let (k, _) = self.expect_basis()?;
            let end = self.expect_punct(')')?;
            Ok((k, start.to(&end)))
        } else {
            self.expect_basis()
        }
    }

    fn at_basis_ref(&self, dual: bool) -> bool {
        if dual {
            self.at_dual()
        } else {
            self.at_basis()
        }
    }

    fn vec_term(&mut self, dual: bool) -> Result<VecTerm, ParseError> {
        let start = self.span();
        if self.at_basis_ref(dual) {
            let (basis, span) = self.basis_ref(dual)?;
            return Ok(VecTerm {
                coef: None,
                basis,
                span,
            });
        }
        let mut coef = self.factor()?;
        loop {
            if self.is_punct('*') {
                self.bump();
                if self.at_basis_ref(dual) {
                    let (basis, end) = self.basis_ref(dual)?;
                    return Ok(VecTerm {
                        coef: Some(coef),
                        basis,
                        span: start.to(&end),
                    });
                }
                coef = Expr::Mul(Box::new(coef), Box::new(self.factor()?));
            } else if self.is_punct('/') {
                let sp = self.bump().span;
                coef = Expr::Div(Box::new(coef), Box::new(self.factor()?), sp);
            } else {
                let what = if dual { "dual(eK)" } else { "eK" };
                return err(
                    &self.span(),
                    format!("expected `* {what}` after coefficient, found {}", self.peek()),
                );
            }
        }
    }

    fn item(&mut self) -> Result<(Item, SourceSpan), ParseError> {
        let sp = self.span();
        let kw = match self.peek().clone() {
            Tok::Ident(s) => s,
            t => return err(&sp, format!("expected an item, found {t}")),
        };
        self.bump();
        let item = match kw.as_str() {
            "dim" => Item::Dim(self.expect_int()?.0),
            "params" => {
                self.expect_punct('[')?;
                let mut names = Vec::new();
                loop {
                    let psp = self.span();
                    match self.peek().clone() {
                        Tok::Ident(s) => {
                            self.bump();
                            names.push((s, psp));
                        }
                        t => return err(&psp, format!("expected a parameter name, found {t}")),
                    }
                    if !self.eat_punct(',') {
                        break;
                    }
                }
                self.expect_punct(']')?;
                Item::Params(names)
            }
            "metric" => {
                let form_sp = self.span();
                match self.peek().clone() {
                    Tok::Ident(f) if f == "diag" => {
                        self.bump();
                        self.expect_punct('(')?;
                        let mut v = vec![self.expr()?];
                        while self.eat_punct(',') {
                            v.push(self.expr()?);
                        }
                        self.expect_punct(')')?;
                        Item::Metric(MetricForm::Diag(v))
                    }
                    Tok::Ident(f) if f == "rows" => {
                        self.bump();
                        self.expect_punct('(')?;
                        let mut rows = Vec::new();
                        loop {
                            let mut row = vec![self.expr()?];
                            while self.eat_punct(',') {
                                row.push(self.expr()?);
                            }
                            rows.push(row);
                            if !self.eat_punct(';') {
                                break;
                            }
                        }
                        self.expect_punct(')')?;
                        Item::Metric(MetricForm::Rows(rows))
                    }
                    t => return err(&form_sp, format!("expected `diag` or `rows`, found {t}")),
                }
            }
            "bracket" => {
                self.expect_punct('[')?;
                let (i, isp) = self.expect_int()?;
                self.expect_punct(',')?;
                let (j, jsp) = self.expect_int()?;
                self.expect_punct(']')?;
                self.expect_punct('=')?;
                Item::Bracket(i, isp, j, jsp, self.vecexpr(false)?)
            }
            "phi" => {
                let (k, _) = self.expect_basis()?;
                self.expect_punct('=')?;
                Item::Phi(k, self.vecexpr(false)?)
            }
            "xi" => {
                self.expect_punct('=')?;
                Item::Xi(self.vecexpr(false)?)
            }
            "eta" => {
                self.expect_punct('=')?;
                Item::Eta(self.vecexpr(true)?)
            }
            other => return err(&sp, format!("unknown item `{other}`")),
        };
        Ok((item, sp.to(&self.prev_span())))
    }
}

struct Resolver<'a> {
    params: &'a Params,
    dim: usize,
}

impl Resolver<'_> {
    fn scalar(&self, e: &Expr) -> Result<Scalar, ParseError> {
        Ok(match e {
            Expr::Num(r) => Scalar::from_rational(r.clone()),
            Expr::Var(name, sp) => match self.params.index_of(name) {
                Some(i) => Scalar::param(self.params, i),
                None => return err(sp, format!("unknown parameter `{name}`")),
            },
            Expr::Neg(a) => -self.scalar(a)?,
            Expr::Add(a, b) => &self.scalar(a)? + &self.scalar(b)?,
            Expr::Sub(a, b) => &self.scalar(a)? - &self.scalar(b)?,
            Expr::Mul(a, b) => &self.scalar(a)? * &self.scalar(b)?,
            Expr::Div(a, b, sp) => {
                let d = self.scalar(b)?;
                match d.as_rational() {
                    Some(r) if r.is_zero() => return err(sp, "division by zero"),
                    Some(_) => &self.scalar(a)? / &d,
                    None => return err(sp, "division by a non-constant expression"),
                }
            }
            Expr::Pow(a, n) => self.scalar(a)?.pow(*n),
        })
    }

    fn index(&self, k: usize, sp: &SourceSpan) -> Result<usize, ParseError> {
        if k == 0 || k > self.dim {
            return err(sp, format!("index {k} out of range for dimension {}", self.dim));
        }
        Ok(k - 1)
    }

    fn vector(&self, terms: &[VecTerm]) -> Result<Vec<Scalar>, ParseError> {
        let mut v = vec![Scalar::zero(); self.dim];
        for t in terms {
            let k = self.index(t.basis, &t.span)?;
            let c = match &t.coef {
                Some(e) => self.scalar(e)?,
                None => Scalar::one(),
            };
            v[k] = &v[k] + &c;
        }
        Ok(v)
    }

    fn constant(&self, terms: &[VecTerm], what: &str, sp: &SourceSpan) -> Result<Vec<Rational>, ParseError> {
        self.vector(terms)?
            .iter()
            .map(|s| {
                s.as_rational()
                    .map_or_else(|| err(sp, format!("{what} must have parameter-free components")), Ok)
            })
            .collect()
    }
}

pub fn parse_spec(text: &str) -> Result<AlgebraSpec, ParseError> {
    parse_spec_named(text, "<input>")
}

pub fn parse_spec_named(text: &str, file: &str) -> Result<AlgebraSpec, ParseError> {
    let toks = tokenize(text, file).map_err(|(span, message)| ParseError { span, message })?;
    let mut p = Parser { toks, pos: 0 };
    let head = p.expect_keyword("manifold")?;
    let name = match p.peek().clone() {
        Tok::Str(s) => {
            p.bump();
            s
        }
        t => return err(&p.span(), format!("expected a quoted manifold name, found {t}")),
    };
    p.expect_punct('{')?;
    let mut items = Vec::new();
    while !p.is_punct('}') {
        if *p.peek() == Tok::Eof {
            return err(&p.span(), "expected `}` before end of input");
        }
        items.push(p.item()?);
    }
    let close = p.expect_punct('}')?;
    if *p.peek() != Tok::Eof {
        return err(&p.span(), format!("unexpected {} after the manifold block", p.peek()));
    }

    let find = |pred: fn(&Item) -> bool| items.iter().filter(move |(it, _)| pred(it));
    let single = |pred: fn(&Item) -> bool, what: &str| -> Result<Option<&(Item, SourceSpan)>, ParseError> {
        let mut it = find(pred);
        let first = it.next();
        if let Some((_, sp)) = it.next() {
            return err(sp, format!("`{what}` given twice"));
        }
        Ok(first)
    };

    let (dim, dim_sp) = match single(|i| matches!(i, Item::Dim(_)), "dim")? {
        Some((Item::Dim(d), sp)) => (*d, sp.clone()),
        _ => return err(&close, "missing required item: dim"),
    };
    if dim < 3 || dim % 2 == 0 {
        return err(&dim_sp, format!("dimension must be odd and at least 3, got {dim}"));
    }
    let mut names: Vec<String> = Vec::new();
    if let Some((Item::Params(ps), _)) = single(|i| matches!(i, Item::Params(_)), "params")? {
        for (n, sp) in ps {
            if basis_index(n).is_some() || n == "dual" {
                return err(sp, format!("`{n}` is reserved and cannot name a parameter"));
            }
            if names.contains(n) {
                return err(sp, format!("parameter `{n}` declared twice"));
            }
            names.push(n.clone());
        }
    }
    let params = Params::new(names);
    let r = Resolver { params: &params, dim };
    let mut b = AlgebraSpec::builder(name, dim, params.clone());

    let (metric, metric_sp) = match single(|i| matches!(i, Item::Metric(_)), "metric")? {
        Some((Item::Metric(form), sp)) => {
            let m = match form {
                MetricForm::Diag(v) => {
                    if v.len() != dim {
                        return err(sp, format!("metric has {} diagonal entries, expected {dim}", v.len()));
                    }
                    Matrix::diag(v.iter().map(|e| r.scalar(e)).collect::<Result<_, _>>()?)
                }
                MetricForm::Rows(rows) => {
                    if rows.len() != dim || rows.iter().any(|row| row.len() != dim) {
                        return err(sp, format!("metric must be {dim} rows of {dim} entries"));
                    }
                    let rows = rows
                        .iter()
                        .map(|row| row.iter().map(|e| r.scalar(e)).collect::<Result<Vec<_>, _>>())
                        .collect::<Result<Vec<_>, _>>()?;
                    Matrix::from_rows(rows).expect("square")
                }
            };
            (m, sp.clone())
        }
        _ => return err(&close, "missing required item: metric"),
    };
    b = b.metric(metric.clone());

    let mut seen = BTreeSet::new();
    let mut seen_phi = BTreeSet::new();
    for (item, sp) in &items {
        match item {
            Item::Bracket(i, isp, j, jsp, terms) => {
                let (i0, j0) = (r.index(*i, isp)?, r.index(*j, jsp)?);
                if i0 == j0 {
                    return err(&isp.to(jsp), "bracket indices must differ");
                }
                if !seen.insert((i0.min(j0), i0.max(j0))) {
                    return err(
                        sp,
                        format!("bracket [{},{}] defined twice", i0.min(j0) + 1, i0.max(j0) + 1),
                    );
                }
                b = b.bracket(i0, j0, r.vector(terms)?);
            }
            Item::Phi(k, terms) => {
                let k0 = r.index(*k, sp)?;
                if !seen_phi.insert(k0) {
                    return err(sp, format!("phi e{k} defined twice"));
                }
                b = b.phi(k0, r.vector(terms)?);
            }
            _ => {}
        }
    }

    let xi = match single(|i| matches!(i, Item::Xi(_)), "xi")? {
        Some((Item::Xi(terms), sp)) => r.constant(terms, "xi", sp)?,
        _ => return err(&close, "missing required item: xi"),
    };
    b = b.xi(xi.clone());
    if let Some((Item::Eta(terms), sp)) = single(|i| matches!(i, Item::Eta(_)), "eta")? {
        let eta = r.constant(terms, "eta", sp)?;
        let xs: Vec<Scalar> = xi.iter().cloned().map(Scalar::from).collect();
        let g_xi: Vec<Scalar> = metric.mul_vec(&xs);
        if g_xi.iter().zip(&eta).any(|(a, e)| a.as_rational().as_ref() != Some(e)) {
            return err(sp, "eta does not equal g(., xi)");
        }
        b = b.eta(eta);
    }

    b.build().map_err(|e| {
        let sp = match e {
            SpecError::MetricNotConstant | SpecError::MetricNotSymmetric | SpecError::MetricSingular => &metric_sp,
            _ => &head,
        };
        ParseError {
            span: sp.clone(),
            message: e.to_string(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn error_of(src: &str) -> ParseError {
        parse_spec(src).expect_err("should not parse")
    }

    #[test]
    fn reference_source() {
        assert_eq!(parse_spec(fixtures::F1_SOURCE).unwrap(), fixtures::f1_symbolic());
    }

    #[test]
    fn missing_xi() {
        let src = fixtures::F1_SOURCE
            .replace("  xi = e3\n", "")
            .replace("  eta = dual(e3)\n", "");
        let e = error_of(&src);
        assert_eq!(e.message, "missing required item: xi");
        assert_eq!((e.span.line, e.span.column), (11, 1));
    }

    #[test]
    fn diagonal_bracket_span() {
        let src = fixtures::F1_SOURCE.replace("bracket [1,2] = alpha * e3", "bracket [1,1] = e3");
        let e = error_of(&src);
        assert_eq!(e.message, "bracket indices must differ");
        assert_eq!((e.span.line, e.span.column, e.span.length), (5, 12, 3));
    }

    #[test]
    fn spans_point_at_the_offence() {
        let e = error_of(&fixtures::F1_SOURCE.replace("beta * e2", "gamma * e2"));
        assert_eq!(e.message, "unknown parameter `gamma`");
        assert_eq!((e.span.line, e.span.column, e.span.length), (6, 19, 5));
        let e = error_of(&fixtures::F1_SOURCE.replace("phi e2 = e1", "phi e2 = e4"));
        assert_eq!((e.span.line, e.span.column), (9, 12));
        assert!(e.message.contains("out of range"), "{}", e.message);
        let e = error_of(&fixtures::F1_SOURCE.replace("phi e3 = 0", "phi e1 = 0"));
        assert_eq!(e.message, "phi e1 defined twice");
        let e = error_of(&fixtures::F1_SOURCE.replace("bracket [2,3]", "bracket [3,1]"));
        assert_eq!(e.message, "bracket [1,3] defined twice");
        let e = error_of(&fixtures::F1_SOURCE.replace("dim 3", "dim 3 %"));
        assert_eq!((e.span.line, e.span.column), (2, 9));
    }

    #[test]
    fn eta_is_cross_checked() {
        let e = error_of(&fixtures::F1_SOURCE.replace("dual(e3)", "2 * dual(e3)"));
        assert_eq!(e.message, "eta does not equal g(., xi)");
        let implicit = parse_spec(&fixtures::F1_SOURCE.replace("  eta = dual(e3)\n", "")).unwrap();
        assert_eq!(implicit, fixtures::f1_symbolic());
    }

    #[test]
    fn scalar_expressions() {
        let src = r#"manifold "m" {
  dim 3
  params [t]
  metric rows(1, 0, 0; 0, -1, 0; 0, 0, 1)  # same as diag
  bracket [1,2] = -(t + 1)^2 * e3 + 1/2*t * e1 - e2
  phi e1 = e2
  phi e2 = e1
  xi = e3
}"#;
        let spec = parse_spec(src).unwrap();
        let v = spec.bracket(0, 1);
        assert_eq!(v[0].to_string(), "1/2*t");
        assert_eq!(v[1], Scalar::from_int(-1));
        assert_eq!(v[2].to_string(), "-t^2 - 2*t - 1");
    }
}
