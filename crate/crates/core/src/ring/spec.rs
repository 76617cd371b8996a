use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

use crate::error::SpecError;

/// Exponent vector over the variables of a monomial algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Index of the single variable this monomial is a power of, if any.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    pub fn render(&self, vars: &[String]) -> String {
        let mut out = String::new();
        for (v, &e) in vars.iter().zip(&self.0) {
            match e {
                0 => {}
                1 => out.push_str(v),
                _ => {
                    out.push_str(v);
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

/// Description of a finite commutative ring with unity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum RingSpec {
    /// Integers modulo `n`.
    Zmod { n: u64 },
    /// The field with `p^k` elements.
    Gf { p: u64, k: u32 },
    /// `GF(q)[vars] / (killed)` for a set of monomials that makes every
    /// variable nilpotent.
    MonAlg {
        q: u64,
        vars: Vec<String>,
        killed: Vec<Monomial>,
    },
    Product { factors: Vec<RingSpec> },
    Table { source: PathBuf },
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<RingSpec, SpecError> {
        parse_ring_spec(text)
    }

    /// Checks the semantic constraints that the grammar cannot express.
    pub fn validate(&self) -> Result<(), SpecError> {
        let bad = |m: String| Err(SpecError::Semantic(m));
        match self {
            RingSpec::Zmod { n } if *n < 2 => bad(format!("Z {n}: modulus must be at least 2")),
            RingSpec::Zmod { .. } => Ok(()),
            RingSpec::Gf { p, k } => {
                if !is_prime(*p) {
                    bad(format!("GF {p} {k}: {p} is not prime"))
                } else if *k == 0 {
                    bad(format!("GF {p} {k}: degree must be at least 1"))
                } else {
                    Ok(())
                }
            }
            RingSpec::MonAlg { q, vars, killed } => {
                if prime_power(*q).is_none() {
                    return bad(format!("mon {q}: {q} is not a prime power"));
                }
                if vars.is_empty() || vars.len() > 4 {
                    return bad(format!("mon {q}: expected 1 to 4 variables, got {}", vars.len()));
                }
                for (i, v) in vars.iter().enumerate() {
                    if vars[..i].contains(v) {
                        return bad(format!("mon {q}: duplicate variable {v}"));
                    }
                }
                if killed.is_empty() {
                    return bad(format!("mon {q}: killed monomial set is empty"));
                }
                if killed.iter().any(|m| m.degree() == 0) {
                    return bad(format!("mon {q}: cannot kill the constant monomial"));
                }
                for (i, v) in vars.iter().enumerate() {
                    if !killed.iter().any(|m| m.pure_power_of() == Some(i)) {
                        return bad(format!("mon {q}: variable {v} is not nilpotent (no pure power killed)"));
                    }
                }
                Ok(())
            }
            RingSpec::Product { factors } => {
                if factors.len() < 2 {
                    return bad(format!("prod: needs at least 2 factors, got {}", factors.len()));
                }
                factors.iter().try_for_each(RingSpec::validate)
            }
            RingSpec::Table { .. } => Ok(()),
        }
    }

    /// Flattens nested products.
    pub fn normalized(&self) -> RingSpec {
        match self {
            RingSpec::Product { factors } => {
                let mut flat = Vec::new();
                for f in factors {
                    match f.normalized() {
                        RingSpec::Product { factors } => flat.extend(factors),
                        other => flat.push(other),
                    }
                }
                RingSpec::Product { factors: flat }
            }
            other => other.clone(),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod { n } => write!(f, "Z {n}"),
            RingSpec::Gf { p, k } => write!(f, "GF {p} {k}"),
            RingSpec::MonAlg { q, vars, killed } => {
                let monos: Vec<String> = killed.iter().map(|m| m.render(vars)).collect();
                write!(f, "mon {q} [{}] / ({})", vars.join(","), monos.join(","))
            }
            RingSpec::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(|s| s.to_string()).collect();
                write!(f, "prod({})", parts.join(", "))
            }
            RingSpec::Table { source } => write!(f, "table {}", source.display()),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Returns `(p, k)` with `q = p^k`.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Parses the ring-spec grammar:
///
/// ```text
/// spec := "Z" INT | "GF" INT INT?
///       | "mon" INT "[" var ("," var)* "]" "/" "(" mono ("," mono)* ")"
///       | "prod" "(" spec ("," spec)* ")" | "table" PATH
/// mono := var("^"INT)? (var("^"INT)?)*
/// ```
///
/// A missing `GF` degree means 1. Whitespace between tokens is optional. Monomials are juxtapositions of
/// declared variable names (longest match), optionally separated by `*`.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let mut p = Parser { src: text, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.err("empty ring spec"));
    }
    let spec = p.spec()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    spec.validate()?;
    Ok(spec)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn err(&self, msg: impl Into<String>) -> SpecError {
        SpecError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn keyword(&mut self) -> &'a str {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        let word = &self.rest()[..len];
        self.pos += len;
        word
    }

    fn int(&mut self) -> Result<u64, SpecError> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.err("expected an integer"));
        }
        let value = self.rest()[..len]
            .parse()
            .map_err(|_| self.err("integer out of range"))?;
        self.pos += len;
        Ok(value)
    }

    fn ident(&mut self) -> Result<String, SpecError> {
        self.skip_ws();
        let mut chars = self.rest().char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.err("expected a variable name")),
        }
        let len = chars
            .find(|(_, c)| !(c.is_ascii_alphanumeric() || *c == '_'))
            .map(|(i, _)| i)
            .unwrap_or(self.rest().len());
        let name = self.rest()[..len].to_string();
        self.pos += len;
        Ok(name)
    }

    fn spec(&mut self) -> Result<RingSpec, SpecError> {
        let start = self.pos;
        match self.keyword() {
            "Z" => Ok(RingSpec::Zmod { n: self.int()? }),
            "GF" => {
                let p = self.int()?;
                self.skip_ws();
                let k = if self.peek().is_some_and(|c| c.is_ascii_digit()) { self.int()? } else { 1 };
                let k = u32::try_from(k).map_err(|_| self.err("degree out of range"))?;
                Ok(RingSpec::Gf { p, k })
            }
            "mon" => self.monalg(),
            "prod" => {
                self.expect('(')?;
                let mut factors = vec![self.spec()?];
                while self.eat(',') {
                    factors.push(self.spec()?);
                }
                self.expect(')')?;
                Ok(RingSpec::Product { factors })
            }
            "table" => {
                self.skip_ws();
                let len = self
                    .rest()
                    .find(|c: char| c.is_whitespace() || c == ',' || c == ')')
                    .unwrap_or(self.rest().len());
                if len == 0 {
                    return Err(self.err("expected a table path"));
                }
                let source = PathBuf::from(&self.rest()[..len]);
                self.pos += len;
                Ok(RingSpec::Table { source })
            }
            other => {
                self.pos = start;
                self.skip_ws();
                Err(self.err(format!(
                    "expected one of Z, GF, mon, prod, table; found {:?}",
                    if other.is_empty() { self.rest().chars().take(8).collect::<String>() } else { other.to_string() }
                )))
            }
        }
    }

    fn monalg(&mut self) -> Result<RingSpec, SpecError> {
        let q = self.int()?;
        self.expect('[')?;
        let mut vars = vec![self.ident()?];
        while self.eat(',') {
            vars.push(self.ident()?);
        }
        self.expect(']')?;
        self.expect('/')?;
        self.expect('(')?;
        let mut killed = vec![self.monomial(&vars)?];
        while self.eat(',') {
            killed.push(self.monomial(&vars)?);
        }
        self.expect(')')?;
        killed.sort();
        killed.dedup();
        Ok(RingSpec::MonAlg { q, vars, killed })
    }

    fn monomial(&mut self, vars: &[String]) -> Result<Monomial, SpecError> {
        let mut exps = vec![0u32; vars.len()];
        let mut factors = 0;
        loop {
            self.skip_ws();
            if factors > 0 && self.peek() == Some('*') {
                self.pos += 1;
                self.skip_ws();
            }
            let rest = self.rest();
            let hit = vars
                .iter()
                .enumerate()
                .filter(|(_, v)| rest.starts_with(v.as_str()))
                .max_by_key(|(_, v)| v.len());
            let Some((i, v)) = hit else {
                if factors == 0 {
                    return Err(self.err("expected a monomial over the declared variables"));
                }
                break;
            };
            self.pos += v.len();
            let e = if self.eat('^') {
                u32::try_from(self.int()?).map_err(|_| self.err("exponent out of range"))?
            } else {
                1
            };
            exps[i] += e;
            factors += 1;
        }
        Ok(Monomial(exps))
    }
}
