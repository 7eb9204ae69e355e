//! Subgroups of `B_N` cut out by a block partition of the strands, and
//! rewriting of σ-words into their generators.
//!
//! `P_n` (singleton blocks), `B_{n,m}` (blocks `{1..n} | {n+1..n+m}`) and
//! `B_n` itself are preimages of Young subgroups of the symmetric group. A
//! σ-word whose permutation preserves the blocks is rewritten with the
//! Reidemeister-Schreier process over minimal coset representatives: each
//! Schreier generator is either a within-block `σ_j^±1` or a conjugate
//! `T σ_i^±2 T^-1` of a cross-block twist by a positive permutation braid,
//! which unfolds into pure generators `A_ij`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::garside::GarsideNf;
use crate::perm::{self, Perm};
use crate::word::{free_reduce_letters, invert_letters, Letter};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum BraidSubgroup {
    /// `B_n`.
    Full { n: usize },
    /// `P_n`, generated by `A_ij`.
    Pure { n: usize },
    /// `B_{n,m} ≤ B_{n+m}`.
    Mixed { n: usize, m: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupGenerator {
    pub name: String,
    pub word: BraidWord,
}

impl fmt::Display for BraidSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidSubgroup::Full { n } => write!(f, "B_{n}"),
            BraidSubgroup::Pure { n } => write!(f, "P_{n}"),
            BraidSubgroup::Mixed { n, m } => write!(f, "B_{{{n},{m}}}"),
        }
    }
}

/// `A_ij = (σ_{j-1}..σ_{i+1}) σ_i^2 (σ_{j-1}..σ_{i+1})^-1`, 1-based `i < j`.
pub fn pure_generator_word(strands: usize, i: usize, j: usize) -> BraidWord {
    assert!(1 <= i && i < j && j <= strands);
    let conj: Vec<i32> = (i + 1..j).rev().map(|k| k as i32).collect();
    let mut letters = conj.clone();
    letters.extend([i as i32, i as i32]);
    letters.extend(conj.iter().rev().map(|&k| -k));
    BraidWord::from_signed(strands, &letters).expect("indices in range")
}

/// Index pairs `(i, j)`, 1-based, in lexicographic order.
pub fn pure_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

impl BraidSubgroup {
    /// `B_{n,m}`, identified with the full braid group when a block is empty.
    pub fn mixed(n: usize, m: usize) -> Self {
        if n == 0 || m == 0 {
            BraidSubgroup::Full { n: n + m }
        } else {
            BraidSubgroup::Mixed { n, m }
        }
    }

    /// The subgroup `G ≤ B_{N-1}` for which `F_{N-1} ⋊ G` sits inside this
    /// group with the last strand carrying the free part.
    pub fn free_semidirect_base(&self) -> Option<BraidSubgroup> {
        match *self {
            BraidSubgroup::Full { n } if n >= 2 => Some(BraidSubgroup::Full { n: n - 1 }),
            BraidSubgroup::Pure { n } if n >= 2 => Some(BraidSubgroup::Pure { n: n - 1 }),
            BraidSubgroup::Mixed { n, m } => Some(BraidSubgroup::mixed(n, m - 1)),
            _ => None,
        }
    }

    pub fn strands(&self) -> usize {
        match *self {
            BraidSubgroup::Full { n } | BraidSubgroup::Pure { n } => n,
            BraidSubgroup::Mixed { n, m } => n + m,
        }
    }

    pub fn generators(&self) -> Vec<SubgroupGenerator> {
        let strands = self.strands();
        let sigma = |k: usize| SubgroupGenerator { name: format!("s{k}"), word: BraidWord::generator(strands, k) };
        match *self {
            BraidSubgroup::Full { n } => (1..n).map(sigma).collect(),
            BraidSubgroup::Pure { n } => pure_pairs(n)
                .into_iter()
                .map(|(i, j)| SubgroupGenerator { name: format!("a{i}_{j}"), word: pure_generator_word(n, i, j) })
                .collect(),
            BraidSubgroup::Mixed { n, m } => {
                let mut gens: Vec<_> = (1..n).map(sigma).collect();
                if n >= 1 && m >= 1 {
                    gens.push(SubgroupGenerator {
                        name: format!("s{n}^2"),
                        word: BraidWord::from_signed(strands, &[n as i32, n as i32]).unwrap(),
                    });
                }
                gens.extend((n + 1..n + m).map(sigma));
                gens
            }
        }
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators().iter().position(|g| g.name == name)
    }

    fn block_of(&self, v: usize) -> usize {
        match *self {
            BraidSubgroup::Full { .. } => 0,
            BraidSubgroup::Pure { .. } => v,
            BraidSubgroup::Mixed { n, .. } => usize::from(v >= n),
        }
    }

    pub fn contains_permutation(&self, p: &[u8]) -> bool {
        p.iter().enumerate().all(|(x, &v)| self.block_of(x) == self.block_of(v as usize))
    }

    pub fn contains(&self, w: &BraidWord) -> bool {
        w.strands() == self.strands() && self.contains_permutation(&w.permutation())
    }

    /// The σ-word of a word in this subgroup's generators.
    pub fn expand(&self, word: &[Letter]) -> Result<BraidWord> {
        let gens = self.generators();
        let mut letters = Vec::new();
        for l in word {
            let g = gens.get(l.index() - 1).ok_or(Error::IndexOutOfRange {
                what: "subgroup generators",
                index: l.index(),
                size: gens.len(),
            })?;
            if l.is_inverse() {
                letters.extend(invert_letters(g.word.letters()));
            } else {
                letters.extend_from_slice(g.word.letters());
            }
        }
        BraidWord::new(self.strands(), letters)
    }

    /// Rewrites a σ-word of this subgroup as a word in its generators.
    pub fn rewrite(&self, w: &BraidWord) -> Result<Vec<Letter>> {
        if !self.contains(w) {
            return Err(Error::NotInSubgroup(self.to_string()));
        }
        match self {
            BraidSubgroup::Full { .. } => Ok(w.letters().to_vec()),
            _ => Ok(rewriter(*self).rewrite(w)),
        }
    }

    /// Minimal representative of the right coset `H p`.
    fn min_coset_rep(&self, p: &[u8]) -> Perm {
        let n = p.len();
        let mut out = vec![0u8; n];
        let mut by_block: HashMap<usize, Vec<usize>> = HashMap::new();
        for (x, &v) in p.iter().enumerate() {
            by_block.entry(self.block_of(v as usize)).or_default().push(x);
        }
        for positions in by_block.values() {
            let mut values: Vec<u8> = positions.iter().map(|&x| p[x]).collect();
            values.sort_unstable();
            for (&x, v) in positions.iter().zip(values) {
                out[x] = v;
            }
        }
        out
    }

    /// Minimal right coset representatives of this subgroup in `B_N`.
    pub fn coset_representatives(&self) -> Vec<Perm> {
        let mut reps: Vec<Perm> =
            perm::all(self.strands()).into_iter().filter(|p| self.min_coset_rep(p) == *p).collect();
        reps.sort_by_key(|p| perm::length(p));
        reps
    }

    /// Positive permutation braid of `p`.
    pub fn permutation_braid(strands: usize, p: &[u8]) -> BraidWord {
        let letters = perm::reduced_word(p).into_iter().map(|i| Letter::pos(i + 1)).collect();
        BraidWord::new(strands, letters).expect("indices in range")
    }

    /// A `A_ab` letter (pair index) rendered in this subgroup's generators.
    fn pure_letter_in_generators(&self, pair: (usize, usize), inverse: bool, pairs_index: usize) -> Vec<Letter> {
        let (i, j) = pair;
        let word: Vec<Letter> = match *self {
            BraidSubgroup::Full { .. } => pure_generator_word(self.strands(), i, j).letters().to_vec(),
            BraidSubgroup::Pure { .. } => vec![Letter::pos(pairs_index + 1)],
            BraidSubgroup::Mixed { n, .. } => {
                if (i <= n) == (j <= n) {
                    pure_generator_word(self.strands(), i, j).letters().to_vec()
                } else {
                    // (σ_{j-1}..σ_{n+1}) (σ_{n-1}..σ_i)^-1 σ_n^2 (σ_{n-1}..σ_i) (σ_{j-1}..σ_{n+1})^-1
                    let outer: Vec<Letter> = (n + 1..j).rev().map(Letter::pos).collect();
                    let inner: Vec<Letter> = (i..n).rev().map(Letter::pos).collect();
                    let mut w = outer.clone();
                    w.extend(invert_letters(&inner));
                    w.push(Letter::pos(n));
                    w.extend(inner);
                    w.extend(invert_letters(&outer));
                    w
                }
            }
        };
        if inverse {
            invert_letters(&word)
        } else {
            word
        }
    }
}

/// `σ_k A_ab σ_k^-1` as words in the `A`'s, for every `k` and pair.
struct ConjTable {
    pairs: Vec<(usize, usize)>,
    /// `conj[k-1][pair]`, letters index into `pairs` (1-based).
    conj: Vec<Vec<Vec<Letter>>>,
}

impl ConjTable {
    fn build(strands: usize) -> Self {
        let pairs = pure_pairs(strands);
        let words: Vec<BraidWord> = pairs.iter().map(|&(i, j)| pure_generator_word(strands, i, j)).collect();
        let letters: Vec<Letter> = (1..=pairs.len()).flat_map(|k| [Letter::pos(k), Letter::neg(k)]).collect();
        let expand = |w: &[Letter]| -> BraidWord {
            let mut out = Vec::new();
            for l in w {
                let base = &words[l.index() - 1];
                if l.is_inverse() {
                    out.extend(invert_letters(base.letters()));
                } else {
                    out.extend_from_slice(base.letters());
                }
            }
            BraidWord::new(strands, out).unwrap()
        };
        let mut table: HashMap<GarsideNf, Vec<Letter>> = HashMap::new();
        let mut add = |w: Vec<Letter>| {
            table.entry(expand(&w).normal_form()).or_insert(w);
        };
        for &x in &letters {
            add(vec![x]);
        }
        for &x in &letters {
            for &y in &letters {
                if y.index() != x.index() {
                    add(vec![x, y, x.inverse()]);
                }
            }
        }
        for &x in &letters {
            for &y in &letters {
                if y != x.inverse() {
                    add(vec![x, y]);
                }
            }
        }
        let conj = (1..strands)
            .map(|k| {
                words
                    .iter()
                    .map(|w| {
                        let mut target = vec![Letter::pos(k)];
                        target.extend_from_slice(w.letters());
                        target.push(Letter::neg(k));
                        let nf = BraidWord::new(strands, target).unwrap().normal_form();
                        table
                            .get(&nf)
                            .cloned()
                            .unwrap_or_else(|| panic!("no short pure word for a conjugate on {strands} strands"))
                    })
                    .collect()
            })
            .collect();
        ConjTable { pairs, conj }
    }

    fn conjugate(&self, k: usize, word: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::new();
        for l in word {
            let img = &self.conj[k - 1][l.index() - 1];
            if l.is_inverse() {
                out.extend(invert_letters(img));
            } else {
                out.extend_from_slice(img);
            }
        }
        free_reduce_letters(out)
    }
}

fn conj_table(strands: usize) -> Arc<ConjTable> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<ConjTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().unwrap().get(&strands) {
        return t.clone();
    }
    let t = Arc::new(ConjTable::build(strands));
    tables.lock().unwrap().entry(strands).or_insert(t).clone()
}

pub(crate) struct Rewriter {
    group: BraidSubgroup,
    table: Arc<ConjTable>,
    memo: Mutex<HashMap<(Perm, usize), Vec<Letter>>>,
}

fn rewriter(group: BraidSubgroup) -> Arc<Rewriter> {
    static REWRITERS: OnceLock<Mutex<HashMap<BraidSubgroup, Arc<Rewriter>>>> = OnceLock::new();
    let all = REWRITERS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = all.lock().unwrap().get(&group) {
        return r.clone();
    }
    let r = Arc::new(Rewriter { group, table: conj_table(group.strands()), memo: Mutex::new(HashMap::new()) });
    all.lock().unwrap().entry(group).or_insert(r).clone()
}

impl Rewriter {
    /// `T_τ σ_{p+1}^2 T_τ^-1` as a word in the pure generators.
    fn twist(&self, tau: &[u8], p: usize) -> Vec<Letter> {
        let key = (tau.to_vec(), p);
        if let Some(w) = self.memo.lock().unwrap().get(&key) {
            return w.clone();
        }
        let out = if perm::is_identity(tau) {
            let idx = self.table.pairs.iter().position(|&pr| pr == (p + 1, p + 2)).unwrap();
            vec![Letter::pos(idx + 1)]
        } else {
            // τ = s_k τ' with k a left descent, so T_τ = σ_{k+1} T_τ'.
            let k = perm::left_descents(tau).trailing_zeros() as usize;
            let mut rest = tau.to_vec();
            perm::swap_values(&mut rest, k);
            let inner = self.twist(&rest, p);
            self.table.conjugate(k + 1, &inner)
        };
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    fn rewrite(&self, w: &BraidWord) -> Vec<Letter> {
        let g = self.group;
        let mut tau = perm::identity(w.strands());
        let mut pure: Vec<(Letter, bool)> = Vec::new(); // (letter, is_pure_letter)
        for &l in w.letters() {
            let p = l.index() - 1;
            let (a, b) = (tau[p] as usize, tau[p + 1] as usize);
            if g.block_of(a) == g.block_of(b) {
                debug_assert_eq!(a + 1, b);
                pure.push((Letter::new(a + 1, l.is_inverse()), false));
                continue;
            }
            let mut next = tau.clone();
            perm::swap_positions(&mut next, p);
            if a < b {
                if l.is_inverse() {
                    pure.extend(invert_letters(&self.twist(&tau, p)).into_iter().map(|x| (x, true)));
                }
            } else if !l.is_inverse() {
                pure.extend(self.twist(&next, p).into_iter().map(|x| (x, true)));
            }
            tau = next;
        }
        debug_assert!(perm::is_identity(&tau));
        let mut out = Vec::new();
        for (l, is_pure) in pure {
            if is_pure {
                let pair = self.table.pairs[l.index() - 1];
                out.extend(g.pure_letter_in_generators(pair, l.is_inverse(), l.index() - 1));
            } else {
                out.push(l);
            }
        }
        free_reduce_letters(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_rewrite(g: BraidSubgroup, w: &BraidWord) {
        let gw = g.rewrite(w).unwrap();
        let back = g.expand(&gw).unwrap();
        assert!(back.braid_eq(w).unwrap(), "{g}: {w} rewrote to {back}");
    }

    #[test]
    fn generator_lists() {
        let names = |g: BraidSubgroup| g.generators().into_iter().map(|x| x.name).collect::<Vec<_>>();
        assert_eq!(names(BraidSubgroup::Mixed { n: 2, m: 1 }), ["s1", "s2^2"]);
        assert_eq!(names(BraidSubgroup::Mixed { n: 0, m: 3 }), ["s1", "s2"]);
        assert_eq!(names(BraidSubgroup::Mixed { n: 3, m: 0 }), ["s1", "s2"]);
        assert_eq!(names(BraidSubgroup::Pure { n: 3 }), ["a1_2", "a1_3", "a2_3"]);
    }

    #[test]
    fn cross_generator_formula() {
        for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 2), (1, 3)] {
            let g = BraidSubgroup::Mixed { n, m };
            for (idx, &(i, j)) in pure_pairs(n + m).iter().enumerate() {
                let w = g.pure_letter_in_generators((i, j), false, idx);
                let expanded = g.expand(&w).unwrap();
                assert!(expanded.braid_eq(&pure_generator_word(n + m, i, j)).unwrap(), "A_{i}{j} in B_{n},{m}");
            }
        }
    }

    #[test]
    fn rewrites_pure_braids() {
        let g = BraidSubgroup::Pure { n: 4 };
        for w in [&[1, 2, 2, 1][..], &[1, 1], &[3, -2, -2, 3, 3, 2, 2, 3], &[-1, 2, 3, 1, 2, 1, -2, -3, -1, -2, -1, 1]]
        {
            let w = BraidWord::from_signed(4, w).unwrap();
            if w.is_pure() {
                check_rewrite(g, &w);
            }
        }
        let d2 = BraidWord::from_signed(4, &[1, 2, 3, 1, 2, 1, 1, 2, 3, 1, 2, 1]).unwrap();
        check_rewrite(g, &d2);
        assert!(g.rewrite(&BraidWord::from_signed(4, &[1]).unwrap()).is_err());
    }

    #[test]
    fn rewrites_mixed_braids() {
        let g = BraidSubgroup::Mixed { n: 2, m: 2 };
        let w = BraidWord::from_signed(4, &[2, 1, 3, 2, -1, 2, 3, 1, 2, 1]).unwrap();
        let fix = w.permutation();
        // append the positive braid returning to a partition-preserving permutation
        let mut letters = w.letters().to_vec();
        let target = g.min_coset_rep(&fix);
        letters.extend(BraidSubgroup::permutation_braid(4, &perm::inverse(&target)).letters().iter().copied());
        let w = BraidWord::new(4, letters).unwrap();
        assert!(g.contains(&w));
        check_rewrite(g, &w);
        assert!(g.rewrite(&BraidWord::from_signed(4, &[2]).unwrap()).is_err());
    }
}

#[cfg(test)]
mod random_tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Random word of `group`, closed up by a positive braid into the subgroup.
    fn random_member(group: BraidSubgroup, len: usize, rng: &mut impl Rng) -> BraidWord {
        let n = group.strands();
        let mut letters: Vec<Letter> = (0..len).map(|_| Letter::new(rng.gen_range(1..n), rng.gen_bool(0.5))).collect();
        let p = BraidWord::new(n, letters.clone()).unwrap().permutation();
        letters.extend(BraidSubgroup::permutation_braid(n, &perm::inverse(&p)).letters().iter().copied());
        BraidWord::new(n, letters).unwrap()
    }

    #[test]
    fn random_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [
            BraidSubgroup::Pure { n: 5 },
            BraidSubgroup::Mixed { n: 3, m: 2 },
            BraidSubgroup::Mixed { n: 1, m: 4 },
            BraidSubgroup::Pure { n: 7 },
            BraidSubgroup::Mixed { n: 4, m: 3 },
        ] {
            for _ in 0..20 {
                let w = random_member(g, 14, &mut rng);
                let gw = g.rewrite(&w).unwrap();
                assert!(g.expand(&gw).unwrap().braid_eq(&w).unwrap(), "{g}: {w}");
            }
        }
    }
}
