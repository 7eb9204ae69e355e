//! Multivariate Laurent polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// An ordered list of variable names. Exponent vectors index into it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vars(Arc<Vec<String>>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(valid_name(n), "invalid variable name `{n}`");
            assert!(!names[..i].contains(n), "duplicate variable `{n}`");
        }
        Vars(Arc::new(names))
    }

    pub fn empty() -> Self {
        Vars(Arc::new(Vec::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// `self` followed by the names of `other` not already present.
    pub fn union(&self, other: &Vars) -> Vars {
        if other.0.iter().all(|n| self.0.contains(n)) {
            return self.clone();
        }
        let mut names = self.0.to_vec();
        for n in other.0.iter() {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
        Vars(Arc::new(names))
    }

    pub fn contains_all(&self, other: &Vars) -> bool {
        other.0.iter().all(|n| self.0.contains(n))
    }
}

fn valid_name(n: &str) -> bool {
    let mut chars = n.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

type Monomial = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, BigRational>,
}

pub type Poly = LaurentPoly;

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: &Vars, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars.len()], c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    pub fn int(vars: &Vars, c: i64) -> Self {
        Self::constant(vars, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn rational(vars: &Vars, num: i64, den: i64) -> Self {
        Self::constant(vars, BigRational::new(num.into(), den.into()))
    }

    /// The variable `name`, which must be declared in `vars`.
    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::VariableMismatch(format!("`{name}` not in {:?}", vars.names())))?;
        let mut m = vec![0; vars.len()];
        m[i] = 1;
        Ok(Self::monomial(vars, m, BigRational::one()))
    }

    pub fn monomial(vars: &Vars, exps: Vec<i32>, c: BigRational) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &BigRational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if this polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Units of `Q[x^±1]` are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Ok(Self::monomial(&self.vars, m.iter().map(|e| -e).collect(), c.recip()))
    }

    fn check(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "polynomial variable sets differ: {:?} vs {:?}",
            self.vars.names(),
            other.vars.names()
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                accumulate(&mut terms, m, c1 * c2);
            }
        }
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut out = Self::one(&self.vars);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Re-expresses this polynomial over a superset of its variables.
    pub fn embed(&self, target: &Vars) -> Result<Self> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| Error::VariableMismatch(format!("`{n}` missing from {:?}", target.names())))
            })
            .collect::<Result<_>>()?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; target.len()];
                for (k, &x) in m.iter().enumerate() {
                    e[map[k]] = x;
                }
                (e, c.clone())
            })
            .collect();
        Ok(LaurentPoly { vars: target.clone(), terms })
    }

    /// Substitutes each variable by a polynomial over `target`.
    ///
    /// Variables absent from `values` are mapped to the same-named variable of
    /// `target`. Negative powers need unit values.
    pub fn substitute(&self, target: &Vars, values: &[(&str, Poly)]) -> Result<Self> {
        let mut images = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            let img = match values.iter().find(|(n, _)| n == name) {
                Some((_, v)) => v.embed(target)?,
                None => Poly::var(target, name)?,
            };
            images.push(img);
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (k, &e) in m.iter().enumerate() {
                if e != 0 {
                    term = term.mul(&images[k].pow(e as i64)?);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Evaluates at rational values for every variable.
    pub fn eval(&self, values: &[BigRational]) -> Result<BigRational> {
        assert_eq!(values.len(), self.vars.len());
        let mut out = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.iter().enumerate() {
                if e != 0 {
                    if values[k].is_zero() && e < 0 {
                        return Err(Error::NotAUnit("0".into()));
                    }
                    t *= num::pow::Pow::pow(&values[k], e);
                }
            }
            out += t;
        }
        Ok(out)
    }

    pub fn parse(vars: &Vars, text: &str) -> Result<Self> {
        Parser { vars, src: text.as_bytes(), pos: 0 }.parse()
    }

    /// Parses, declaring variables in order of first appearance.
    pub fn parse_auto(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_alphabetic() {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let name = &text[start..i];
                if !names.iter().any(|n| n == name) {
                    names.push(name.to_string());
                }
            } else {
                i += 1;
            }
        }
        Self::parse(&Vars::new(&names), text)
    }

    fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| graded_lex_desc(a.0, b.0));
        ts
    }
}

/// Descending graded-lexicographic order.
fn graded_lex_desc(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    let name = &self.vars.names()[i];
                    if e == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    vars: &'a Vars,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {} in `{}`", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap())
    }

    fn parse(mut self) -> Result<Poly> {
        let mut out = Poly::zero(self.vars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(_) if first => 1,
                Some(_) => return Err(self.err("expected `+` or `-`")),
            };
            first = false;
            let term = self.term()?;
            out = if sign < 0 { out.sub(&term) } else { out.add(&term) };
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut t = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            t = t.mul(&self.factor()?);
        }
        Ok(t)
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer().unwrap();
                let mut c = BigRational::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.integer().ok_or_else(|| self.err("expected denominator"))?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    c /= BigRational::from_integer(d);
                }
                Ok(Poly::constant(self.vars, c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v = Poly::var(self.vars, name)?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let neg = if self.peek() == Some(b'-') {
                        self.pos += 1;
                        true
                    } else {
                        false
                    };
                    let e = self.integer().ok_or_else(|| self.err("expected exponent"))?;
                    let e: i64 = e.try_into().map_err(|_| self.err("exponent too large"))?;
                    v.pow(if neg { -e } else { e })
                } else {
                    Ok(v)
                }
            }
            _ => Err(self.err("expected number or variable")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st() -> Vars {
        Vars::new(&["s", "t"])
    }

    #[test]
    fn print_parse_roundtrip() {
        let v = Vars::new(&["t1", "q"]);
        let p = Poly::parse(&v, "3*t1^2*q^-1 - 2").unwrap();
        assert_eq!(p.to_string(), "3*t1^2*q^-1 - 2");
        let p = Poly::parse(&st(), "1 - t").unwrap();
        assert_eq!(p.to_string(), "-t + 1");
        assert_eq!(Poly::parse(&st(), &p.to_string()).unwrap(), p);
        assert_eq!(Poly::parse(&st(), "3/2*s - s*t + 0").unwrap().to_string(), "-s*t + 3/2*s");
        assert!(Poly::parse(&st(), "x").is_err());
        assert!(Poly::parse(&st(), "").is_err());
        assert!(Poly::parse(&st(), "s t").is_err());
    }

    #[test]
    fn units_and_inverse() {
        let t = Poly::var(&st(), "t").unwrap();
        assert!(t.is_unit());
        assert!(t.mul(&t.inverse().unwrap()).is_one());
        let one_minus_t = Poly::one(&st()).sub(&t);
        assert!(!one_minus_t.is_unit());
        assert!(one_minus_t.inverse().is_err());
        assert!(Poly::zero(&st()).is_zero());
    }

    #[test]
    fn substitute_and_embed() {
        let p = Poly::parse(&st(), "s^2*t^-1 + 3").unwrap();
        let bigger = Vars::new(&["q", "s", "t"]);
        let e = p.embed(&bigger).unwrap();
        assert_eq!(e.to_string(), "s^2*t^-1 + 3");
        let half = Poly::rational(&Vars::empty(), 1, 2);
        let r = p.substitute(&Vars::new(&["s"]), &[("t", half)]).unwrap();
        assert_eq!(r.to_string(), "2*s^2 + 3");
        assert!(p.embed(&Vars::new(&["s"])).is_err());
    }
}
