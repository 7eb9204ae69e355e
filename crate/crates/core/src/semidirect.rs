use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free::{automorphism_of, FreeWord};
use crate::garside::GarsideNf;

/// An element `w·β` of `F_n ⋊ B_n` with the free part on the left.
///
/// The braid part is kept in Garside normal form, so derived equality is
/// equality in the group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SemidirectElement {
    free: FreeWord,
    braid: GarsideNf,
}

impl SemidirectElement {
    pub fn new(free: FreeWord, braid: &BraidWord) -> Result<Self> {
        Self::from_parts(free, braid.normal_form())
    }

    pub fn from_parts(free: FreeWord, braid: GarsideNf) -> Result<Self> {
        if free.rank() != braid.strands() {
            return Err(Error::SizeMismatch(format!("free rank {} with {} strands", free.rank(), braid.strands())));
        }
        Ok(SemidirectElement { free, braid })
    }

    pub fn identity(n: usize) -> Self {
        SemidirectElement { free: FreeWord::identity(n), braid: GarsideNf::identity(n) }
    }

    pub fn free_part(free: FreeWord) -> Self {
        let n = free.rank();
        SemidirectElement { free, braid: GarsideNf::identity(n) }
    }

    pub fn braid_part(braid: &BraidWord) -> Self {
        SemidirectElement { free: FreeWord::identity(braid.strands()), braid: braid.normal_form() }
    }

    pub fn n(&self) -> usize {
        self.free.rank()
    }

    pub fn free(&self) -> &FreeWord {
        &self.free
    }

    pub fn braid(&self) -> &GarsideNf {
        &self.braid
    }

    pub fn is_identity(&self) -> bool {
        self.free.is_identity() && self.braid.is_identity()
    }

    /// `(w1, b1)(w2, b2) = (w1 · b1▷w2, b1 b2)`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "semidirect size mismatch");
        let moved =
            if self.braid.is_identity() { other.free.clone() } else { automorphism_of(&self.braid).apply(&other.free) };
        SemidirectElement { free: self.free.mul(&moved), braid: self.braid.mul(&other.braid) }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(format!(
                "F_{} ⋊ B_{} vs F_{} ⋊ B_{}",
                self.n(),
                self.n(),
                other.n(),
                other.n()
            )));
        }
        Ok(self.mul(other))
    }

    /// `(w, b)^-1 = (b^-1 ▷ w^-1, b^-1)`.
    pub fn inverse(&self) -> Self {
        let binv = self.braid.inverse();
        let free =
            if binv.is_identity() { self.free.inverse() } else { automorphism_of(&binv).apply(&self.free.inverse()) };
        SemidirectElement { free, braid: binv }
    }

    /// Conjugates the free part by `b`: returns `(b▷w, self.braid)`.
    pub(crate) fn act_on_free(&self, b: &GarsideNf) -> Self {
        if b.is_identity() {
            return self.clone();
        }
        SemidirectElement { free: automorphism_of(b).apply(&self.free), braid: self.braid.clone() }
    }
}

impl fmt::Display for SemidirectElement {
    /// Prints `g.. * s..`, `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free = self.free.to_string().replace(' ', "*");
        let braid = self.braid.to_word().to_string().replace(' ', "*");
        match (free.is_empty(), braid.is_empty()) {
            (true, true) => f.write_str("1"),
            (false, true) => f.write_str(&free),
            (true, false) => f.write_str(&braid),
            (false, false) => write!(f, "{free}*{braid}"),
        }
    }
}

pub fn sd_mul(x: &SemidirectElement, y: &SemidirectElement) -> Result<SemidirectElement> {
    x.try_mul(y)
}

pub fn sd_inv(x: &SemidirectElement) -> SemidirectElement {
    x.inverse()
}

/// Words in `B_{n+1}` for `g_i = (σ_n..σ_{i+1}) σ_i^2 (σ_n..σ_{i+1})^-1`, i = 1..n.
pub fn free_generator_words(n: usize) -> Vec<BraidWord> {
    (1..=n).map(|i| free_generator_word(n, i)).collect()
}

pub fn free_generator_word(n: usize, i: usize) -> BraidWord {
    let conj: Vec<i32> = (i + 1..=n).rev().map(|k| k as i32).collect();
    let mut letters = conj.clone();
    letters.push(i as i32);
    letters.push(i as i32);
    letters.extend(conj.iter().rev().map(|&k| -k));
    BraidWord::from_signed(n + 1, &letters).expect("indices in range")
}

/// The homomorphism `F_n ⋊ B_n → B_{n+1}`.
pub fn embed_sd_into_braid(x: &SemidirectElement) -> BraidWord {
    let n = x.n();
    let gens = free_generator_words(n);
    let mut letters = Vec::new();
    for l in x.free().letters() {
        let g = &gens[l.index() - 1];
        if l.is_inverse() {
            letters.extend_from_slice(g.inverse().letters());
        } else {
            letters.extend_from_slice(g.letters());
        }
    }
    letters.extend_from_slice(x.braid().to_word().letters());
    BraidWord::new(n + 1, letters).expect("indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: usize, free: &str, braid: &str) -> SemidirectElement {
        SemidirectElement::new(FreeWord::parse(n, free).unwrap(), &BraidWord::parse(n, braid).unwrap()).unwrap()
    }

    #[test]
    fn sd_mul_examples() {
        let s1 = el(2, "", "s1");
        let g1 = el(2, "g1", "");
        assert_eq!(s1.mul(&g1), el(2, "g2", "s1"));
        let x = el(3, "g1 g3^-1", "s2 s1^-1");
        assert_eq!(SemidirectElement::identity(3).mul(&x), x);
        assert!(x.mul(&x.inverse()).is_identity());
        assert!(sd_mul(&x, &g1).is_err());
    }

    #[test]
    fn sd_inv_examples() {
        assert!(sd_inv(&SemidirectElement::identity(2)).is_identity());
        assert_eq!(sd_inv(&el(2, "g1", "")), el(2, "g1^-1", ""));
        assert_eq!(sd_inv(&el(2, "", "s1")), el(2, "", "s1^-1"));
    }

    #[test]
    fn embedding_examples() {
        let gn = embed_sd_into_braid(&el(2, "g2", ""));
        assert!(gn.braid_eq(&BraidWord::parse(3, "s2 s2").unwrap()).unwrap());
        let g1 = embed_sd_into_braid(&el(2, "g1", ""));
        assert_eq!(g1, BraidWord::parse(3, "s2 s1 s1 s2^-1").unwrap());
        let s1 = embed_sd_into_braid(&el(2, "", "s1"));
        assert!(s1.braid_eq(&BraidWord::parse(3, "s1").unwrap()).unwrap());
    }

    #[test]
    fn embedding_respects_semidirect_relations() {
        for n in 2..=4 {
            for i in 1..n {
                for j in 1..=n {
                    let s = el(n, "", &format!("s{i}"));
                    let g = el(n, &format!("g{j}"), "");
                    let lhs = embed_sd_into_braid(&s.mul(&g));
                    let rhs = embed_sd_into_braid(&s).concat(&embed_sd_into_braid(&g)).unwrap();
                    assert!(lhs.braid_eq(&rhs).unwrap(), "n={n} i={i} j={j}");
                }
            }
        }
    }
}
