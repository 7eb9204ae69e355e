//! Left-greedy Garside normal form `Δ^k A_1 .. A_r` on permutation factors.

use crate::braid::BraidWord;
use crate::perm::{self, Perm};
use crate::word::Letter;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GarsideNf {
    strands: usize,
    delta: i64,
    factors: Vec<Perm>,
}

impl GarsideNf {
    pub fn identity(strands: usize) -> Self {
        GarsideNf { strands, delta: 0, factors: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta
    }

    pub fn factors(&self) -> &[Perm] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta == 0 && self.factors.is_empty()
    }

    pub fn from_word(word: &BraidWord) -> Self {
        let mut nf = Self::identity(word.strands());
        for &l in word.letters() {
            nf.push_letter(l);
        }
        nf
    }

    fn trivial_group(&self) -> bool {
        self.strands <= 1
    }

    /// Right-multiplies by a single generator or inverse.
    pub fn push_letter(&mut self, l: Letter) {
        if self.trivial_group() {
            return;
        }
        let i = l.index() - 1;
        if l.is_inverse() {
            // σ_i^-1 = Δ^-1 (Δ σ_i^-1), and X Δ^-1 = Δ^-1 τ(X).
            for f in &mut self.factors {
                *f = perm::flip(f);
            }
            self.delta -= 1;
            let mut a = perm::longest(self.strands);
            perm::swap_positions(&mut a, i);
            self.push_simple(a);
        } else {
            let mut a = perm::identity(self.strands);
            perm::swap_positions(&mut a, i);
            self.push_simple(a);
        }
    }

    /// Appends a simple factor and restores left-weightedness.
    fn push_simple(&mut self, a: Perm) {
        self.factors.push(a);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            if !self.left_weight_pair(j - 1) {
                break;
            }
            j -= 1;
        }
        // One right-to-left pass suffices; the sweep below only runs if it did not.
        while let Some(k) = (0..self.factors.len().saturating_sub(1))
            .find(|&k| perm::left_descents(&self.factors[k + 1]) & !perm::right_descents(&self.factors[k]) != 0)
        {
            self.left_weight_pair(k);
        }
        self.tidy();
    }

    /// Makes `(A_j, A_{j+1})` left-weighted. Returns whether anything moved.
    fn left_weight_pair(&mut self, j: usize) -> bool {
        let (left, right) = self.factors.split_at_mut(j + 1);
        let a = &mut left[j];
        let b = &mut right[0];
        let mut changed = false;
        loop {
            let extra = perm::left_descents(b) & !perm::right_descents(a);
            if extra == 0 {
                break;
            }
            let i = extra.trailing_zeros() as usize;
            perm::swap_positions(a, i);
            perm::swap_values(b, i);
            changed = true;
        }
        changed
    }

    /// Absorbs leading Δ factors and drops trailing identities.
    fn tidy(&mut self) {
        let full = perm::length(&perm::longest(self.strands));
        let lead = self.factors.iter().take_while(|f| perm::length(f) == full).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.delta += lead as i64;
        }
        while self.factors.last().is_some_and(|f| perm::is_identity(f)) {
            self.factors.pop();
        }
    }

    /// Product in `B_n`.
    pub fn mul(&self, other: &GarsideNf) -> GarsideNf {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        if self.trivial_group() {
            return self.clone();
        }
        // Δ^a X Δ^b Y = Δ^(a+b) τ^b(X) Y
        let mut out = GarsideNf {
            strands: self.strands,
            delta: self.delta + other.delta,
            factors: if other.delta % 2 == 0 {
                self.factors.clone()
            } else {
                self.factors.iter().map(|f| perm::flip(f)).collect()
            },
        };
        for f in &other.factors {
            out.push_simple(f.clone());
        }
        out
    }

    pub fn inverse(&self) -> GarsideNf {
        GarsideNf::from_word(&self.to_word().inverse())
    }

    /// A word representing this braid: `Δ^k` expanded, then each factor.
    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        let delta_word: Vec<Letter> =
            perm::reduced_word(&perm::longest(self.strands)).into_iter().map(|i| Letter::pos(i + 1)).collect();
        if self.delta >= 0 {
            for _ in 0..self.delta {
                letters.extend_from_slice(&delta_word);
            }
        } else {
            let inv: Vec<Letter> = delta_word.iter().rev().map(|l| l.inverse()).collect();
            for _ in 0..-self.delta {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend(perm::reduced_word(f).into_iter().map(|i| Letter::pos(i + 1)));
        }
        BraidWord::new(self.strands, letters).expect("normal form letters are in range")
    }

    pub fn permutation(&self) -> Perm {
        let mut p = if self.delta % 2 == 0 { perm::identity(self.strands) } else { perm::longest(self.strands) };
        for f in &self.factors {
            p = perm::compose(&p, f);
        }
        p
    }

    /// Checks the structural invariants of a left-greedy normal form.
    pub fn is_canonical(&self) -> bool {
        let full = perm::length(&perm::longest(self.strands));
        let no_trivial = self.factors.iter().all(|f| !perm::is_identity(f) && perm::length(f) != full);
        let weighted = self.factors.windows(2).all(|w| perm::left_descents(&w[1]) & !perm::right_descents(&w[0]) == 0);
        no_trivial && weighted
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(n: usize, w: &[i32]) -> GarsideNf {
        BraidWord::from_signed(n, w).unwrap().normal_form()
    }

    #[test]
    fn delta_squared_is_central() {
        let d2 = [1, 2, 1, 1, 2, 1];
        let mut left = d2.to_vec();
        left.push(1);
        let mut right = vec![1];
        right.extend_from_slice(&d2);
        assert_eq!(nf(3, &left), nf(3, &right));
        assert_eq!(nf(3, &d2).delta_power(), 2);
        assert!(nf(3, &d2).factors().is_empty());
    }

    #[test]
    fn inverse_letters_cancel() {
        assert!(nf(4, &[1, -1, 3, 2, -2, -3]).is_identity());
        assert!(nf(4, &[-2, 2]).is_identity());
    }

    #[test]
    fn roundtrip_through_word() {
        let x = nf(4, &[1, -2, 3, 3, -1, 2, -3]);
        assert!(x.is_canonical());
        assert_eq!(x.to_word().normal_form(), x);
        assert!(x.mul(&x.inverse()).is_identity());
    }

    #[test]
    fn trivial_groups() {
        assert!(nf(1, &[]).is_identity());
        assert!(GarsideNf::identity(0).mul(&GarsideNf::identity(0)).is_identity());
    }

    #[test]
    fn permutation_matches_word() {
        let w = BraidWord::from_signed(5, &[1, -3, 2, 4, -1, 2]).unwrap();
        assert_eq!(w.normal_form().permutation(), w.permutation());
    }
}
