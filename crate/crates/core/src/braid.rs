use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::garside::GarsideNf;
use crate::perm::{self, Perm};
use crate::word::{fmt_letters, free_reduce_letters, invert_letters, parse_letters, Letter};

/// A word in the Artin generators `σ_1, .., σ_{n-1}` of `B_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            if l.index() + 1 > strands {
                return Err(Error::IndexOutOfRange { what: "braid group", index: l.index(), size: strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn generator(strands: usize, i: usize) -> Self {
        Self::new(strands, vec![Letter::pos(i)]).expect("generator index")
    }

    /// Builds a word from signed indices, `-i` meaning `σ_i^-1`.
    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&l| {
                if l == 0 {
                    Err(Error::Parse("letter 0".into()))
                } else {
                    Ok(Letter::new(l.unsigned_abs() as usize, l < 0))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = parse_letters(text, 's').map_err(Error::Parse)?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: invert_letters(&self.letters) }
    }

    /// Cancels adjacent `σ_i σ_i^-1` pairs.
    pub fn free_reduced(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: free_reduce_letters(self.letters.iter().copied()) }
    }

    /// Signed exponent sum.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| if l.is_inverse() { -1 } else { 1 }).sum()
    }

    /// The image in the symmetric group.
    pub fn permutation(&self) -> Perm {
        let mut p = perm::identity(self.strands);
        for l in &self.letters {
            perm::swap_positions(&mut p, l.index() - 1);
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        perm::is_identity(&self.permutation())
    }

    /// The same word viewed in `B_m` for `m >= strands`.
    pub fn widen(&self, strands: usize) -> BraidWord {
        assert!(strands >= self.strands);
        BraidWord { strands, letters: self.letters.clone() }
    }

    pub fn normal_form(&self) -> GarsideNf {
        GarsideNf::from_word(self)
    }

    pub fn braid_eq(&self, other: &BraidWord) -> Result<bool> {
        self.check_strands(other)?;
        Ok(self.normal_form() == other.normal_form())
    }

    fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::SizeMismatch(format!("braid words on {} and {} strands", self.strands, other.strands)));
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(f, &self.letters, 's')
    }
}

/// Decides equality in `B_n` via Garside normal forms.
pub fn braid_eq(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.braid_eq(b)
}

/// Letters of a braid word without strand information, for quick literals.
impl FromStr for BraidWord {
    type Err = Error;

    /// Parses with the minimal strand count that fits the letters.
    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s, 's').map_err(Error::Parse)?;
        let strands = letters.iter().map(|l| l.index() + 1).max().unwrap_or(1);
        Self::new(strands, letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w = BraidWord::parse(4, "s1 s2^-1 s3^2").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.to_string(), "s1 s2^-1 s3 s3");
        assert!(BraidWord::parse(3, "s3").is_err());
        assert!(BraidWord::parse(3, "g1").is_err());
        assert!(BraidWord::parse(3, "").unwrap().is_empty());
    }

    #[test]
    fn relation_examples() {
        let a = BraidWord::parse(3, "s1 s2 s1").unwrap();
        let b = BraidWord::parse(3, "s2 s1 s2").unwrap();
        assert!(braid_eq(&a, &b).unwrap());
        let a = BraidWord::parse(4, "s1 s3").unwrap();
        let b = BraidWord::parse(4, "s3 s1").unwrap();
        assert!(braid_eq(&a, &b).unwrap());
        let a = BraidWord::parse(3, "s1").unwrap();
        let b = BraidWord::parse(3, "s2").unwrap();
        assert!(!braid_eq(&a, &b).unwrap());
        assert!(braid_eq(&a, &BraidWord::parse(4, "s1").unwrap()).is_err());
    }

    #[test]
    fn purity() {
        assert!(BraidWord::parse(3, "s1 s1").unwrap().is_pure());
        assert!(!BraidWord::parse(3, "s1 s2").unwrap().is_pure());
    }
}
