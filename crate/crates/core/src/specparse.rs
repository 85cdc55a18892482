//! Parser for ideal descriptors such as `u^3+2u^2*(x^2+1)`, `(u^2+2,2u)` or
//! `<u^3, 2u>`, and for `;`-separated per-factor code descriptors.

use std::sync::Arc;

use crate::codes::FactorSystem;
use crate::error::{Error, Result};
use crate::idealenum::IdealSpec;
use crate::polyarith::{F2Poly, Z4Poly};
use crate::rings::{ChainEl, GaloisRing, MixedEl};

#[derive(Clone, Copy, Debug, PartialEq)]
enum Tok {
    Num(u64),
    X,
    U,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn lex(input: &str, text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut v = c.to_digit(10).unwrap_or(0) as u64;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v.checked_mul(10).and_then(|v| v.checked_add(d as u64)).ok_or_else(|| Error::parse(input, "number too large"))?;
                    chars.next();
                }
                Tok::Num(v)
            }
            'x' => Tok::X,
            'u' => Tok::U,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            other => return Err(Error::parse(input, format!("unexpected character `{other}`"))),
        };
        out.push(tok);
    }
    Ok(out)
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a Arc<GaloisRing>,
    k: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).copied()
    }

    fn err(&self, why: &str) -> Error {
        Error::parse(self.input, why)
    }

    fn expr(&mut self) -> Result<MixedEl> {
        let mut acc = self.term()?;
        while let Some(op @ (Tok::Plus | Tok::Minus)) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == Tok::Plus { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MixedEl> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => self.pos += 1,
                Some(Tok::Num(_) | Tok::X | Tok::U | Tok::Open) => {}
                _ => return Ok(acc),
            }
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
    }

    fn factor(&mut self) -> Result<MixedEl> {
        if self.peek() == Some(Tok::Minus) {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(Tok::Num(e)) => {
                self.pos += 1;
                Ok(self.pow(&base, e))
            }
            _ => Err(self.err("expected an exponent after `^`")),
        }
    }

    fn pow(&self, base: &MixedEl, mut e: u64) -> MixedEl {
        let mut acc = MixedEl::one(self.ring, self.k);
        let mut sq = base.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    fn atom(&mut self) -> Result<MixedEl> {
        let tok = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        Ok(match tok {
            Tok::Num(v) => MixedEl::monomial(self.ring, self.k, (v % 4) as u8, 0),
            Tok::X => MixedEl::new(self.ring, &[Z4Poly::x()], self.k),
            Tok::U => MixedEl::monomial(self.ring, self.k, 1, 1),
            Tok::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(Tok::Close) {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                inner
            }
            _ => return Err(self.err("expected a number, `x`, `u` or `(`")),
        })
    }
}

/// Parses one polynomial in `x` and `u` into `K[u]/<u^k>`.
pub fn parse_element(text: &str, ring: &Arc<GaloisRing>, k: usize) -> Result<MixedEl> {
    let toks = lex(text, text)?;
    if toks.is_empty() {
        return Err(Error::parse(text, "empty expression"));
    }
    let mut p = Parser { input: text, toks, pos: 0, ring, k };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

fn strip_brackets(s: &str) -> &str {
    let s = s.trim();
    for (open, close) in [('<', '>'), ('⟨', '⟩')] {
        if let Some(inner) = s.strip_prefix(open).and_then(|r| r.strip_suffix(close)) {
            return inner.trim();
        }
    }
    s
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Generator texts: `(g1,g2)` and `g1,g2` both give two generators.
fn generator_texts(s: &str) -> Vec<&str> {
    let s = strip_brackets(s);
    let top = split_top_level(s);
    if top.len() > 1 {
        return top;
    }
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let parts = split_top_level(inner);
        if parts.len() > 1 && balanced(inner) {
            return parts;
        }
    }
    top
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

enum Part {
    Zero,
    Two(usize),
    Principal { i: usize, twist: Option<(usize, Vec<F2Poly>)> },
}

fn lowest(c: &ChainEl) -> Option<usize> {
    c.coeffs().iter().position(|b| !b.is_zero())
}

fn analyze(input: &str, g: &MixedEl) -> Result<Part> {
    if g.is_zero() {
        return Ok(Part::Zero);
    }
    let (eta0, eta1) = g.two_adic_split();
    let Some(i) = lowest(&eta0) else {
        return Ok(Part::Two(lowest(&eta1).unwrap_or(0)));
    };
    let exact = eta0.coeffs().iter().enumerate().all(|(l, b)| if l == i { b.is_one() } else { b.is_zero() });
    if !exact {
        return Err(Error::parse(input, "the part of a generator outside 2R must be exactly u^i"));
    }
    let twist = lowest(&eta1).map(|t| (t, eta1.coeffs()[t..].to_vec()));
    Ok(Part::Principal { i, twist })
}

fn principal_spec(d: usize, k: usize, i: usize, twist: &Option<(usize, Vec<F2Poly>)>) -> Result<IdealSpec> {
    match twist {
        Some((t, h)) if *t < i => IdealSpec::principal(d, k, i, *t, h),
        _ => IdealSpec::u_power(d, k, i),
    }
}

/// Generator level and optional twist `(t, h)` of the unit-part generator.
type Principal = (usize, Option<(usize, Vec<F2Poly>)>);

/// Reads an ideal descriptor and returns its normalized spec.
pub fn parse_ideal_spec(text: &str, ring: &Arc<GaloisRing>, k: usize) -> Result<IdealSpec> {
    if k < 2 {
        return Err(Error::InvalidChainLength(k));
    }
    let d = ring.degree();
    let mut two: Option<usize> = None;
    let mut principal: Option<Principal> = None;
    for g in generator_texts(text) {
        let el = parse_element(g, ring, k).map_err(|e| match e {
            Error::Parse { reason, .. } => Error::parse(text, reason),
            other => other,
        })?;
        match analyze(text, &el)? {
            Part::Zero => {}
            Part::Two(s) => two = Some(two.map_or(s, |m| m.min(s))),
            Part::Principal { i, twist } => {
                if principal.is_some() {
                    return Err(Error::parse(text, "at most one generator may have a unit part"));
                }
                principal = Some((i, twist));
            }
        }
    }
    match (principal, two) {
        (None, None) => Ok(IdealSpec::zero_ideal(d, k)),
        (None, Some(s)) => IdealSpec::two_u_power(d, k, s),
        (Some((i, twist)), None) => principal_spec(d, k, i, &twist),
        (Some((i, twist)), Some(s)) => match twist {
            Some((t, h)) if t < i => {
                if s >= i.min(k - i + t) {
                    IdealSpec::principal(d, k, i, t, &h)
                } else if t >= s {
                    IdealSpec::pair(d, k, i, s)
                } else {
                    IdealSpec::pair_twisted(d, k, i, s, t, &h)
                }
            }
            _ if s >= i => IdealSpec::u_power(d, k, i),
            _ => IdealSpec::pair(d, k, i, s),
        },
    }
}

/// Reads `;`-separated descriptors, one per factor, and returns them in
/// canonical factor order. With `paper_order` the terms follow
/// [`FactorSystem::block_order`] instead.
pub fn parse_code_specs(text: &str, system: &FactorSystem, k: usize, paper_order: bool) -> Result<Vec<IdealSpec>> {
    let terms: Vec<&str> = text.split(';').map(str::trim).collect();
    if terms.len() != system.r() {
        return Err(Error::parse(text, format!("expected {} `;`-separated terms, got {}", system.r(), terms.len())));
    }
    let mut specs: Vec<Option<IdealSpec>> = vec![None; system.r()];
    for (pos, term) in terms.iter().enumerate() {
        let j = if paper_order { system.block_order()[pos] } else { pos };
        specs[j] = Some(parse_ideal_spec(term, &system.factor(j).ring, k)?);
    }
    specs.into_iter().map(|s| s.ok_or_else(|| Error::Internal("unassigned factor".into()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealenum::{enumerate_ideal_specs, Case};

    fn ring(d: usize) -> Arc<GaloisRing> {
        GaloisRing::with_degree(d).unwrap()
    }

    #[test]
    fn display_round_trips() {
        for d in 1..=3 {
            let r = ring(d);
            for k in 2..=5 {
                for spec in enumerate_ideal_specs(d, k).unwrap() {
                    assert_eq!(parse_ideal_spec(&spec.to_string(), &r, k).unwrap(), spec, "{spec}");
                }
            }
        }
    }

    #[test]
    fn printed_notation() {
        let r = ring(1);
        let s = parse_ideal_spec("⟨u^2+2(1+u)⟩", &r, 4).unwrap();
        assert_eq!((s.case, s.i, s.t), (Case::III, Some(2), Some(0)));
        assert_eq!(parse_ideal_spec("<u^3,2u>", &r, 4).unwrap(), IdealSpec::pair(1, 4, 3, 1).unwrap());
        assert_eq!(parse_ideal_spec("u^4", &r, 4).unwrap(), IdealSpec::zero_ideal(1, 4));
        assert_eq!(parse_ideal_spec("u^3 + 2u^3", &r, 4).unwrap(), IdealSpec::u_power(1, 4, 3).unwrap());
        assert_eq!(parse_ideal_spec("3u^2", &r, 4).unwrap(), IdealSpec::u_power(1, 4, 2).unwrap());
        assert_eq!(parse_ideal_spec("(2u^2, 2u)", &r, 4).unwrap(), IdealSpec::two_u_power(1, 4, 1).unwrap());
        assert_eq!(parse_ideal_spec("(u^2, 2u^3)", &r, 4).unwrap(), IdealSpec::u_power(1, 4, 2).unwrap());
        let r3 = GaloisRing::new(Z4Poly::new(vec![3, 2, 3, 1])).unwrap();
        let s = parse_ideal_spec("u^3+2x^2u^2", &r3, 4).unwrap();
        assert_eq!(s.h.as_ref().unwrap()[0], F2Poly::new(vec![0, 0, 1]));
        let s2 = parse_ideal_spec("u^3+2(x^2+x+1)u^2", &r3, 4).unwrap();
        assert_eq!(s2.h.as_ref().unwrap()[0], F2Poly::new(vec![1, 1, 1]));
        let s3 = parse_ideal_spec("u^3+2*x^5*u^2", &r3, 4).unwrap();
        assert_eq!(s3.h.as_ref().unwrap()[0].degree().map(|e| e < 3), Some(true));
    }

    #[test]
    fn redundant_second_generator_collapses() {
        let r = ring(1);
        // u^3 (u + 2) = 2u^3
        assert_eq!(parse_ideal_spec("(u+2,2u^3)", &r, 4).unwrap(), IdealSpec::principal(1, 4, 1, 0, &[F2Poly::one()]).unwrap());
        assert_eq!(parse_ideal_spec("(u^2+2,2u)", &r, 4).unwrap().case, Case::VI);
        assert_eq!(parse_ideal_spec("(u^3+2u^2,2u)", &r, 5).unwrap(), IdealSpec::pair(1, 5, 3, 1).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let r = ring(1);
        for bad in ["", "u^", "y", "(u", "u+1+u^2*(", "(u,u^2)", "1+u+2"] {
            assert!(parse_ideal_spec(bad, &r, 4).is_err(), "{bad}");
        }
        let r2 = ring(2);
        assert!(parse_ideal_spec("x*u", &r2, 4).is_err());
    }

    #[test]
    fn code_specs() {
        let system = FactorSystem::new(7).unwrap();
        let specs = parse_code_specs("u^4; u^3; u^4", &system, 4, false).unwrap();
        assert_eq!(specs[1], IdealSpec::u_power(3, 4, 3).unwrap());
        assert!(parse_code_specs("u^4;u^3", &system, 4, false).is_err());
        let system = FactorSystem::new(15).unwrap();
        let n = system.r();
        let mut terms = vec!["u^4".to_string(); n];
        terms[system.lambda()] = "u^2".into();
        let specs = parse_code_specs(&terms.join(";"), &system, 4, true).unwrap();
        let j = system.block_order()[system.lambda()];
        assert_eq!(specs[j].i, Some(2));
    }
}
