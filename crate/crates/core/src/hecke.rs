//! The Iwahori-Hecke algebra `H_m(q)`: the quotient of `Z[q^±1][B_m]` by
//! `(σ_j + q)(σ_j - 1) = 0`, with basis `T_w`, `w ∈ S_m`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group_ring::{GroupRingElement, GroupRingMatrix};
use crate::matrix::{Matrix, Ring};
use crate::perm::{self, Perm};
use crate::poly::{Poly, Vars};
use crate::word::Letter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    m: usize,
    vars: Vars,
    terms: BTreeMap<Perm, Poly>,
}

impl HeckeElement {
    /// Coefficients live over `vars`, which must contain `q`.
    pub fn zero(m: usize, vars: &Vars) -> Self {
        HeckeElement { m, vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(m: usize, c: Poly) -> Self {
        let mut out = Self::zero(m, c.vars());
        out.insert(perm::identity(m), c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Poly)> {
        self.terms.iter()
    }

    fn q(&self) -> Poly {
        Poly::var(&self.vars, "q").expect("Hecke coefficients contain q")
    }

    fn insert(&mut self, w: Perm, c: Poly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&w) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    /// `T_{s_j} · self`, 0-based `j`.
    fn lmul_generator(&self, j: usize) -> Self {
        let q = self.q();
        let one = Poly::one(&self.vars);
        let mut out = Self::zero(self.m, &self.vars);
        for (w, c) in &self.terms {
            let mut sw = w.clone();
            perm::swap_values(&mut sw, j);
            if perm::length(&sw) > perm::length(w) {
                out.insert(sw, c.clone());
            } else {
                out.insert(w.clone(), c.mul(&one.sub(&q)));
                out.insert(sw, c.mul(&q));
            }
        }
        out
    }

    /// `σ_j^±1 · self` in the quotient (`σ^-1 = q^-1 σ + 1 - q^-1`).
    pub fn lmul_letter(&self, l: Letter) -> Self {
        let j = l.index() - 1;
        let t = self.lmul_generator(j);
        if !l.is_inverse() {
            return t;
        }
        let qi = self.q().inverse().expect("q is a unit");
        let one = Poly::one(&self.vars);
        let mut out = Self::zero(self.m, &self.vars);
        for (w, c) in t.terms {
            out.insert(w, c.mul(&qi));
        }
        for (w, c) in &self.terms {
            out.insert(w.clone(), c.mul(&one.sub(&qi)));
        }
        out
    }

    /// The image of a σ-word.
    pub fn of_letters(m: usize, vars: &Vars, letters: &[Letter]) -> Self {
        let mut out = Self::scalar(m, Poly::one(vars));
        for &l in letters.iter().rev() {
            out = out.lmul_letter(l);
        }
        out
    }

    /// Reduces a group-ring element of `⟨q⟩ × B_m` into the quotient.
    pub fn reduce(e: &GroupRingElement, m: usize) -> Result<Self> {
        let vars = e.coeff_vars().clone();
        if vars.index_of("q").is_none() {
            return Err(Error::VariableMismatch("Hecke reduction needs a `q` coefficient".into()));
        }
        let mut out = Self::zero(m, &vars);
        for (x, c) in e.terms() {
            if !x.free().is_identity() {
                return Err(Error::Invalid("free-group terms have no Hecke image".into()));
            }
            let word = x.braid().to_word();
            let image =
                if m <= 1 { Self::scalar(m, Poly::one(&vars)) } else { Self::of_letters(m, &vars, word.letters()) };
            for (w, d) in image.terms {
                out.insert(w, d.mul(c));
            }
        }
        Ok(out)
    }
}

/// Entrywise reduction of a universal Lawrence matrix.
pub fn reduce_matrix(u: &GroupRingMatrix, m: usize) -> Result<Matrix<HeckeElement>> {
    u.try_map(|e| HeckeElement::reduce(e, m))
}

impl Ring for HeckeElement {
    fn zero_like(&self) -> Self {
        Self::zero(self.m, &self.vars)
    }
    fn one_like(&self) -> Self {
        Self::scalar(self.m, Poly::one(&self.vars))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = self.zero_like();
        for (w, c) in &self.terms {
            let letters: Vec<Letter> = perm::reduced_word(w).into_iter().map(|i| Letter::pos(i + 1)).collect();
            let mut prod = rhs.clone();
            for &l in letters.iter().rev() {
                prod = prod.lmul_letter(l);
            }
            for (v, d) in prod.terms {
                out.insert(v, d.mul(c));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        HeckeElement {
            m: self.m,
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = perm::reduced_word(w).into_iter().map(|i| format!("T{}", i + 1)).collect();
                if word.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", word.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn vars() -> Vars {
        Vars::new(&["q"])
    }

    fn of(m: usize, s: &[i32]) -> HeckeElement {
        let w = BraidWord::from_signed(m, s).unwrap();
        HeckeElement::of_letters(m, &vars(), w.letters())
    }

    #[test]
    fn quadratic_and_braid_relations() {
        let q = Poly::var(&vars(), "q").unwrap();
        let t = of(3, &[1]);
        let one = HeckeElement::scalar(3, Poly::one(&vars()));
        let lhs = t.add(&HeckeElement::scalar(3, q)).mul(&t.sub(&one));
        assert!(lhs.is_zero());
        assert_eq!(of(3, &[1, 2, 1]), of(3, &[2, 1, 2]));
        assert_eq!(of(3, &[1, -1]), one);
        assert_eq!(of(4, &[1, 3]), of(4, &[3, 1]));
        assert_ne!(of(3, &[1, 2]), of(3, &[2, 1]));
    }

    #[test]
    fn product_matches_word_concatenation() {
        let a = of(4, &[1, -2, 3, 3]);
        let b = of(4, &[2, 1, -3]);
        assert_eq!(a.mul(&b), of(4, &[1, -2, 3, 3, 2, 1, -3]));
    }
}
