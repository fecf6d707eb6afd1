//! The constants and formula manifest, and a table-driven evaluator for it.
//!
//! Line format: `key | kind | expression | anchor`, with `kind` one of
//! `const` or `formula`. Expressions use + − * / ^, parentheses, the
//! functions ln, exp, sqrt, cbrt, abs, min, max and the built-ins pi, e,
//! C0 (Euler's constant) and C2 (twin prime constant).

use std::cell::RefCell;
use std::collections::HashMap;

use super::constants::Context;
use super::hp::{Ctx, R};
use crate::error::{Error, Result};

pub const BUILTIN: &str = include_str!("../../manifest/bounds.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Const,
    Formula,
}

#[derive(Clone, Debug)]
pub enum Expr {
    Num(String),
    Var(String),
    Neg(Box<Expr>),
    Bin(char, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub key: String,
    pub kind: Kind,
    pub source: String,
    pub anchor: String,
    pub expr: Expr,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct Manifest {
    entries: Vec<Entry>,
    index: HashMap<String, usize>,
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Format { line: self.line, msg: format!("{msg} at column {}", self.pos + 1) })
    }

    fn skip(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Bin(c as char, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Bin(c as char, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let exp = self.unary()?;
            return Ok(Expr::Bin('^', Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'.') {
                    self.pos += 1;
                }
                if self.pos < self.s.len() && self.s[self.pos] == b'e' {
                    let save = self.pos;
                    self.pos += 1;
                    if self.pos < self.s.len() && (self.s[self.pos] == b'-' || self.s[self.pos] == b'+') {
                        self.pos += 1;
                    }
                    if self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                            self.pos += 1;
                        }
                    } else {
                        self.pos = save;
                    }
                }
                Ok(Expr::Num(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || matches!(self.s[self.pos], b'_' | b'.'))
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.s[start..self.pos]).into_owned();
                if self.eat(b'(') {
                    let mut args = vec![self.expr()?];
                    while self.eat(b',') {
                        args.push(self.expr()?);
                    }
                    if !self.eat(b')') {
                        return self.err("expected ')' after arguments");
                    }
                    return Ok(Expr::Call(name, args));
                }
                Ok(Expr::Var(name))
            }
            _ => self.err("expected a number, name or '('"),
        }
    }
}

/// Parses one expression; `line` is used in error messages.
pub fn parse_expr(src: &str, line: usize) -> Result<Expr> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, line };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Manifest {
    pub fn builtin() -> Manifest {
        Manifest::parse(BUILTIN).expect("shipped manifest parses")
    }

    pub fn parse(text: &str) -> Result<Manifest> {
        let mut entries = Vec::new();
        let mut index = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = t.split('|').map(str::trim).collect();
            if cols.len() != 4 {
                return Err(Error::Format { line, msg: format!("expected 4 columns, found {}", cols.len()) });
            }
            let kind = match cols[1] {
                "const" => Kind::Const,
                "formula" => Kind::Formula,
                k => return Err(Error::Format { line, msg: format!("unknown kind {k:?}") }),
            };
            let expr = parse_expr(cols[2], line)?;
            if kind == Kind::Const && !matches!(expr, Expr::Num(_)) {
                return Err(Error::Format { line, msg: "const entries must be a decimal literal".into() });
            }
            if cols[3].is_empty() {
                return Err(Error::Format { line, msg: "missing anchor".into() });
            }
            if index.insert(cols[0].to_string(), entries.len()).is_some() {
                return Err(Error::Format { line, msg: format!("duplicate key {}", cols[0]) });
            }
            entries.push(Entry {
                key: cols[0].into(),
                kind,
                source: cols[2].into(),
                anchor: cols[3].into(),
                expr,
                line,
            });
        }
        Ok(Manifest { entries, index })
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Entry> {
        self.index.get(key).map(|&i| &self.entries[i])
    }

    pub fn evaluator<'a>(&'a self, ctx: Ctx, context: Context) -> Evaluator<'a> {
        Evaluator { m: self, ctx, context, env: HashMap::new(), cache: RefCell::new(HashMap::new()) }
    }
}

/// Evaluates manifest keys under fixed inputs. Results are cached per
/// evaluator, so rebuild it when inputs change.
pub struct Evaluator<'a> {
    m: &'a Manifest,
    ctx: Ctx,
    context: Context,
    env: HashMap<String, R>,
    cache: RefCell<HashMap<String, R>>,
}

const MAX_DEPTH: usize = 64;

impl<'a> Evaluator<'a> {
    pub fn set(mut self, name: &str, v: R) -> Self {
        self.env.insert(name.into(), v);
        self.cache.borrow_mut().clear();
        self
    }

    fn prefix(&self) -> &'static str {
        match self.context {
            Context::Zeta => "zeta",
            Context::GeneralQ => "general",
        }
    }

    pub fn eval(&self, key: &str) -> Result<R> {
        self.lookup(key, 0)
    }

    fn lookup(&self, name: &str, depth: usize) -> Result<R> {
        if let Some(v) = self.env.get(name) {
            return Ok(v.clone());
        }
        let c = &self.ctx;
        match name {
            "pi" => return Ok(c.pi()),
            "e" => return Ok(c.e()),
            "C0" => return Ok(c.euler_gamma()),
            "C2" => return Ok(c.c2()),
            _ => {}
        }
        if depth > MAX_DEPTH {
            return Err(Error::Config(format!("manifest recursion too deep at {name}")));
        }
        let scoped = format!("{}.{name}", self.prefix());
        let key = if self.m.index.contains_key(&scoped) { scoped } else { name.to_string() };
        if let Some(v) = self.cache.borrow().get(&key) {
            return Ok(v.clone());
        }
        let entry = self.m.get(&key).ok_or_else(|| Error::Config(format!("manifest has no entry for {name}")))?;
        let v = self.expr(&entry.expr, depth + 1)?;
        self.cache.borrow_mut().insert(key, v.clone());
        Ok(v)
    }

    fn expr(&self, e: &Expr, depth: usize) -> Result<R> {
        Ok(match e {
            Expr::Num(s) => self.ctx.parse(s)?,
            Expr::Var(n) => self.lookup(n, depth)?,
            Expr::Neg(a) => -self.expr(a, depth)?,
            Expr::Bin(op, a, b) => {
                let (a, b) = (self.expr(a, depth)?, self.expr(b, depth)?);
                match op {
                    '+' => a + b,
                    '-' => a - b,
                    '*' => a * b,
                    '/' => a / b,
                    _ => a.pow(&b),
                }
            }
            Expr::Call(f, args) => {
                let v: Vec<R> = args.iter().map(|a| self.expr(a, depth)).collect::<Result<_>>()?;
                match (f.as_str(), v.as_slice()) {
                    ("ln", [a]) => a.ln(),
                    ("exp", [a]) => a.exp(),
                    ("sqrt", [a]) => a.sqrt(),
                    ("cbrt", [a]) => a.cbrt(),
                    ("abs", [a]) => a.abs(),
                    ("min", [a, b]) => a.min(b),
                    ("max", [a, b]) => a.max(b),
                    _ => return Err(Error::Config(format!("unknown function {f}/{}", v.len()))),
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::constants::AssumptionConstants;

    #[test]
    fn parses_and_rejects() {
        let m = Manifest::builtin();
        assert!(m.entries().len() > 100);
        assert!(m.entries().iter().all(|e| !e.anchor.is_empty()));
        assert!(Manifest::parse("a | const | 1 + 2 | x").is_err());
        assert!(Manifest::parse("a | const | 1 |").is_err());
        assert!(Manifest::parse("a | const | 1 | x\na | const | 2 | y").is_err());
        assert!(matches!(Manifest::parse("a | formula | (1 | x"), Err(Error::Format { line: 1, .. })));
    }

    #[test]
    fn arithmetic_and_precedence() {
        let c = Ctx::default();
        let m = Manifest::parse("a | formula | -2^2 + 3*4/2 - 1 | t\nb | formula | 2^3^2 | t\nc | formula | 1.5e-3*1e3 | t")
            .unwrap();
        let ev = m.evaluator(c, Context::Zeta);
        assert_eq!(ev.eval("a").unwrap(), 1.0);
        assert_eq!(ev.eval("b").unwrap(), 512.0);
        assert_eq!(ev.eval("c").unwrap(), 1.5);
    }

    #[test]
    fn constants_match_tables() {
        let c = Ctx::default();
        let m = Manifest::builtin();
        let z = AssumptionConstants::zeta(&c);
        let ev = m.evaluator(c, Context::Zeta).set("q", c.int(1));
        for (name, v) in z.entries() {
            assert!(ev.eval(name).unwrap().rel_diff(&v) < 1e-45, "zeta {name}");
        }
        for q in [3u64, 4, 401, 400_001, 1_234_567] {
            let g = AssumptionConstants::general(&c, q).unwrap();
            let ev = m.evaluator(c, Context::GeneralQ).set("q", c.int(q as i64));
            for (name, v) in g.entries() {
                assert!(ev.eval(name).unwrap().rel_diff(&v) < 1e-45, "general {name} at q = {q}");
            }
        }
    }

    #[test]
    fn one_point_four_four_three_flagged() {
        let m = Manifest::builtin();
        let e = m.get("jconst").unwrap();
        assert_eq!(e.source, "1.443");
        assert!(e.anchor.contains("1.433"));
    }
}
