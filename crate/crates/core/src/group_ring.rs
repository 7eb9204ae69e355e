//! The group ring `Z[F_n ⋊ B_n]` with Laurent-polynomial coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::garside::GarsideNf;
use crate::matrix::{Matrix, Ring};
use crate::poly::{Poly, Vars};
use crate::semidirect::SemidirectElement;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupRingElement {
    n: usize,
    coeffs: Vars,
    terms: BTreeMap<SemidirectElement, Poly>,
}

pub type GroupRingMatrix = Matrix<GroupRingElement>;

impl GroupRingElement {
    pub fn zero(n: usize, coeffs: &Vars) -> Self {
        GroupRingElement { n, coeffs: coeffs.clone(), terms: BTreeMap::new() }
    }

    pub fn one(n: usize, coeffs: &Vars) -> Self {
        Self::from_element(SemidirectElement::identity(n), coeffs)
    }

    pub fn from_element(x: SemidirectElement, coeffs: &Vars) -> Self {
        Self::term(x, Poly::one(coeffs))
    }

    pub fn term(x: SemidirectElement, c: Poly) -> Self {
        let mut out = Self::zero(x.n(), c.vars());
        if !c.is_zero() {
            out.terms.insert(x, c);
        }
        out
    }

    pub fn free(w: FreeWord, coeffs: &Vars) -> Self {
        Self::from_element(SemidirectElement::free_part(w), coeffs)
    }

    pub fn braid(b: &BraidWord, coeffs: &Vars) -> Self {
        Self::from_element(SemidirectElement::braid_part(b), coeffs)
    }

    pub fn scalar(n: usize, c: Poly) -> Self {
        Self::term(SemidirectElement::identity(n), c)
    }

    pub fn int(n: usize, coeffs: &Vars, c: i64) -> Self {
        Self::scalar(n, Poly::int(coeffs, c))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff_vars(&self) -> &Vars {
        &self.coeffs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SemidirectElement, &Poly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, x: &SemidirectElement) -> Poly {
        self.terms.get(x).cloned().unwrap_or_else(|| Poly::zero(&self.coeffs))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!("group ring over n={} vs n={}", self.n, other.n)));
        }
        if self.coeffs != other.coeffs {
            return Err(Error::VariableMismatch(format!("{:?} vs {:?}", self.coeffs.names(), other.coeffs.names())));
        }
        Ok(())
    }

    fn insert(&mut self, x: SemidirectElement, c: Poly) {
        match self.terms.entry(x) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.insert(x.clone(), c.clone());
        }
        Ok(out)
    }

    /// Convolution product; keys multiply through `sd_mul`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n, &self.coeffs);
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                out.insert(x.mul(y), a.mul(b));
            }
        }
        Ok(out)
    }

    /// Applies `b ▷ ·` to the free part of every key, keeping braid parts.
    pub fn act_on_free(&self, b: &GarsideNf) -> Self {
        let mut out = Self::zero(self.n, &self.coeffs);
        for (x, c) in &self.terms {
            out.insert(x.act_on_free(b), c.clone());
        }
        out
    }

    /// Whether every key has trivial braid part.
    pub fn is_free_only(&self) -> bool {
        self.terms.keys().all(|x| x.braid().is_identity())
    }

    /// Substitutes values into the coefficients.
    pub fn map_coeffs(&self, target: &Vars, f: impl Fn(&Poly) -> Result<Poly>) -> Result<Self> {
        let mut out = Self::zero(self.n, target);
        for (x, c) in &self.terms {
            out.insert(x.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl Ring for GroupRingElement {
    fn zero_like(&self) -> Self {
        Self::zero(self.n, &self.coeffs)
    }
    fn one_like(&self) -> Self {
        Self::one(self.n, &self.coeffs)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("group ring operands")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("group ring operands")
    }
    fn neg(&self) -> Self {
        GroupRingElement {
            n: self.n,
            coeffs: self.coeffs.clone(),
            terms: self.terms.iter().map(|(x, c)| (x.clone(), c.neg())).collect(),
        }
    }
}

impl fmt::Display for GroupRingElement {
    /// Terms `c*x` in key order, `0` for the empty sum.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (x, c)) in self.terms.iter().enumerate() {
            let (neg, c) = match c.as_constant() {
                Some(v) if v < num::zero() => (true, c.neg()),
                _ => (false, c.clone()),
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let coeff = if c.is_one() {
                None
            } else if c.num_terms() == 1 || x.is_identity() {
                Some(c.to_string())
            } else {
                Some(format!("({c})"))
            };
            match (coeff, x.is_identity()) {
                (None, true) => f.write_str("1")?,
                (None, false) => write!(f, "{x}")?,
                (Some(c), true) => f.write_str(&c)?,
                (Some(c), false) => write!(f, "{c}*{x}")?,
            }
        }
        Ok(())
    }
}

pub fn gre_add(a: &GroupRingElement, b: &GroupRingElement) -> Result<GroupRingElement> {
    a.try_add(b)
}

pub fn gre_mul(a: &GroupRingElement, b: &GroupRingElement) -> Result<GroupRingElement> {
    a.try_mul(b)
}

fn check_matrix_ring(a: &GroupRingMatrix, b: &GroupRingMatrix) -> Result<()> {
    if let (Some((_, _, x)), Some((_, _, y))) = (a.entries().next(), b.entries().next()) {
        if x.n() != y.n() {
            return Err(Error::SizeMismatch(format!("group ring over n={} vs n={}", x.n(), y.n())));
        }
        if x.coeff_vars() != y.coeff_vars() {
            return Err(Error::VariableMismatch("group ring coefficient variables differ".into()));
        }
    }
    Ok(())
}

pub fn grm_mul(a: &GroupRingMatrix, b: &GroupRingMatrix) -> Result<GroupRingMatrix> {
    check_matrix_ring(a, b)?;
    a.mul(b)
}

pub fn grm_scalar_lmul(x: &GroupRingElement, a: &GroupRingMatrix) -> Result<GroupRingMatrix> {
    if let Some((_, _, e)) = a.entries().next() {
        x.check(e)?;
    }
    Ok(a.scale_left(x))
}

pub fn grm_scalar_rmul(a: &GroupRingMatrix, x: &GroupRingElement) -> Result<GroupRingMatrix> {
    if let Some((_, _, e)) = a.entries().next() {
        x.check(e)?;
    }
    Ok(a.scale_right(x))
}

pub fn grm_eq(a: &GroupRingMatrix, b: &GroupRingMatrix) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch { left: a.shape(), right: b.shape() });
    }
    check_matrix_ring(a, b)?;
    Ok(a == b)
}

/// Applies `b ▷ ·` entrywise to free parts.
pub fn grm_act(b: &GarsideNf, a: &GroupRingMatrix) -> GroupRingMatrix {
    a.map(|e| e.act_on_free(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, s: &str) -> GroupRingElement {
        GroupRingElement::free(FreeWord::parse(n, s).unwrap(), &Vars::empty())
    }

    fn s(n: usize, w: &str) -> GroupRingElement {
        GroupRingElement::braid(&BraidWord::parse(n, w).unwrap(), &Vars::empty())
    }

    fn one(n: usize) -> GroupRingElement {
        GroupRingElement::one(n, &Vars::empty())
    }

    #[test]
    fn element_examples() {
        let a = one(2).sub(&g(2, "g1"));
        assert_eq!(gre_add(&a, &g(2, "g1")).unwrap(), one(2));
        assert_eq!(gre_mul(&g(2, "g1"), &g(2, "g1^-1")).unwrap(), one(2));
        let prod = gre_mul(&s(2, "s1"), &g(2, "g1")).unwrap();
        assert_eq!(prod.num_terms(), 1);
        assert_eq!(prod, gre_mul(&g(2, "g2"), &s(2, "s1")).unwrap());
        assert!(gre_mul(&g(2, "g1"), &g(3, "g1")).is_err());
    }

    #[test]
    fn matrix_examples() {
        let m = GroupRingMatrix::from_rows(vec![
            vec![GroupRingElement::zero(2, &Vars::empty()), g(2, "g1")],
            vec![one(2), one(2).sub(&g(2, "g1"))],
        ])
        .unwrap();
        let sq = grm_mul(&m, &m).unwrap();
        let expected = GroupRingMatrix::from_rows(vec![
            vec![g(2, "g1"), g(2, "g1").sub(&g(2, "g1 g1"))],
            vec![one(2).sub(&g(2, "g1")), one(2).sub(&g(2, "g1")).add(&g(2, "g1 g1"))],
        ])
        .unwrap();
        assert!(grm_eq(&sq, &expected).unwrap());
        let id = GroupRingMatrix::identity(2, &one(2));
        assert!(grm_eq(&grm_mul(&id, &m).unwrap(), &m).unwrap());
        let lm = grm_scalar_lmul(&s(2, "s1"), &m).unwrap();
        assert_eq!(lm.get(0, 1), &gre_mul(&g(2, "g2"), &s(2, "s1")).unwrap());
        assert_eq!(grm_scalar_lmul(&one(2), &m).unwrap(), m);
        let d = grm_scalar_lmul(&s(2, "s1"), &id).unwrap();
        assert_eq!(d.get(0, 0), &s(2, "s1"));
        assert!(d.get(0, 1).is_zero());
    }

    #[test]
    fn display() {
        let e = one(2).sub(&g(2, "g1"));
        assert_eq!(e.to_string(), "1 - g1");
        assert_eq!(s(2, "s1").to_string(), "s1");
    }
}
