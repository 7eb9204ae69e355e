use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::garside::GarsideNf;
use crate::word::{fmt_letters, free_reduce_letters, invert_letters, parse_letters, Letter};

/// A freely reduced word in `g_1, .., g_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    /// Validates indices and freely reduces.
    pub fn new(rank: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(l) = letters.iter().find(|l| l.index() > rank) {
            return Err(Error::IndexOutOfRange { what: "free group", index: l.index(), size: rank });
        }
        Ok(FreeWord { rank, letters: free_reduce_letters(letters) })
    }

    pub fn from_signed(rank: usize, letters: &[i32]) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Parse("letter 0".into()));
        }
        Self::new(rank, letters.iter().map(|&l| Letter::new(l.unsigned_abs() as usize, l < 0)).collect())
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        Self::new(rank, vec![Letter::pos(i)]).expect("generator index")
    }

    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        Self::new(rank, parse_letters(text, 'g').map_err(Error::Parse)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        assert_eq!(self.rank, other.rank, "free group rank mismatch");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { rank: self.rank, letters: free_reduce_letters(letters) }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: invert_letters(&self.letters) }
    }

    /// Exponent sum of each generator.
    pub fn abelianization(&self) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for l in &self.letters {
            out[l.index() - 1] += if l.is_inverse() { -1 } else { 1 };
        }
        out
    }

    /// Replaces each `g_j` by `images[j-1]`.
    pub fn substitute(&self, images: &[Vec<Letter>]) -> FreeWord {
        FreeWord { rank: self.rank, letters: substitute_letters(&self.letters, images) }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(f, &self.letters, 'g')
    }
}

/// `free_reduce` from raw letters.
pub fn free_reduce(letters: Vec<Letter>, rank: usize) -> Result<FreeWord> {
    FreeWord::new(rank, letters)
}

fn substitute_letters(letters: &[Letter], images: &[Vec<Letter>]) -> Vec<Letter> {
    let mut out = Vec::new();
    for l in letters {
        let img = &images[l.index() - 1];
        if l.is_inverse() {
            out.extend(img.iter().rev().map(|x| x.inverse()));
        } else {
            out.extend_from_slice(img);
        }
    }
    free_reduce_letters(out)
}

/// Image of `g_j` under `σ_i^±1`.
fn letter_action(b: Letter, j: usize) -> Vec<Letter> {
    let i = b.index();
    let g = Letter::pos;
    match (b.is_inverse(), j) {
        (false, j) if j == i => vec![g(i + 1)],
        (false, j) if j == i + 1 => vec![Letter::neg(i + 1), g(i), g(i + 1)],
        (true, j) if j == i + 1 => vec![g(i)],
        (true, j) if j == i => vec![g(i), g(i + 1), Letter::neg(i)],
        _ => vec![g(j)],
    }
}

/// The automorphism `w ↦ b w b^-1` of `F_n`, stored as generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<Vec<Letter>>,
}

impl Automorphism {
    pub fn identity(rank: usize) -> Self {
        Automorphism { images: (1..=rank).map(|j| vec![Letter::pos(j)]).collect() }
    }

    pub fn of_word(b: &BraidWord) -> Self {
        let mut aut = Self::identity(b.strands());
        for &l in b.letters() {
            aut.push_letter(l);
        }
        aut
    }

    /// `self ∘ act(l)`, i.e. the automorphism of `b·l` given that of `b`.
    pub fn push_letter(&mut self, l: Letter) {
        let rank = self.images.len();
        self.images = (1..=rank).map(|j| substitute_letters(&letter_action(l, j), &self.images)).collect();
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images)
    }

    pub fn images(&self) -> &[Vec<Letter>] {
        &self.images
    }
}

const CACHE_LIMIT: usize = 1 << 14;

thread_local! {
    static AUT_CACHE: RefCell<HashMap<GarsideNf, Rc<Automorphism>>> = RefCell::new(HashMap::new());
}

/// Cached automorphism of a braid given in normal form.
pub(crate) fn automorphism_of(nf: &GarsideNf) -> Rc<Automorphism> {
    if nf.is_identity() {
        return Rc::new(Automorphism::identity(nf.strands()));
    }
    AUT_CACHE.with(|cache| {
        if let Some(a) = cache.borrow().get(nf) {
            return a.clone();
        }
        let a = Rc::new(Automorphism::of_word(&nf.to_word()));
        let mut c = cache.borrow_mut();
        if c.len() >= CACHE_LIMIT {
            c.clear();
        }
        c.insert(nf.clone(), a.clone());
        a
    })
}

/// The Artin action `b · w · b^-1`, computed letter by letter.
pub fn artin_act(b: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    if b.strands() != w.rank() {
        return Err(Error::SizeMismatch(format!(
            "braid on {} strands acting on free group of rank {}",
            b.strands(),
            w.rank()
        )));
    }
    Ok(Automorphism::of_word(b).apply(w))
}
