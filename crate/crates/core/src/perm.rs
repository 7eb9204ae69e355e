//! Permutations of `{0, .., n-1}` stored as images, `p[x] = p(x)`.
//!
//! Products compose as functions: `(p * q)(x) = p(q(x))`. The braid word
//! `s_{i1} .. s_{ik}` maps to `s_{i1} * .. * s_{ik}`, so right
//! multiplication by `s_i` swaps positions `i, i+1` and left multiplication
//! swaps the values `i, i+1`.

pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn longest(n: usize) -> Perm {
    (0..n as u8).rev().collect()
}

pub fn is_identity(p: &[u8]) -> bool {
    p.iter().enumerate().all(|(i, &v)| v as usize == i)
}

pub fn compose(p: &[u8], q: &[u8]) -> Perm {
    q.iter().map(|&x| p[x as usize]).collect()
}

pub fn inverse(p: &[u8]) -> Perm {
    let mut inv = vec![0u8; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

pub fn length(p: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

pub fn swap_positions(p: &mut [u8], i: usize) {
    p.swap(i, i + 1);
}

pub fn swap_values(p: &mut [u8], v: usize) {
    for x in p.iter_mut() {
        if *x as usize == v {
            *x = (v + 1) as u8;
        } else if *x as usize == v + 1 {
            *x = v as u8;
        }
    }
}

/// Right descents: `{i : p(i) > p(i+1)}` as a bitmask.
pub fn right_descents(p: &[u8]) -> u64 {
    let mut mask = 0;
    for i in 0..p.len().saturating_sub(1) {
        if p[i] > p[i + 1] {
            mask |= 1 << i;
        }
    }
    mask
}

/// Left descents: `{i : p^-1(i) > p^-1(i+1)}` as a bitmask.
pub fn left_descents(p: &[u8]) -> u64 {
    right_descents(&inverse(p))
}

/// Conjugation by the longest element.
pub fn flip(p: &[u8]) -> Perm {
    let n = p.len();
    (0..n).map(|x| (n - 1 - p[n - 1 - x] as usize) as u8).collect()
}

/// A reduced word (0-based generator indices) of `p`.
pub fn reduced_word(p: &[u8]) -> Vec<usize> {
    let mut p = p.to_vec();
    let mut word = Vec::with_capacity(length(&p));
    'outer: loop {
        for i in 0..p.len().saturating_sub(1) {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                word.push(i);
                continue 'outer;
            }
        }
        break;
    }
    word.reverse();
    word
}

/// All permutations of `n` points in lexicographic order.
pub fn all(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_word_reconstructs() {
        for p in all(4) {
            let mut q = identity(4);
            for i in reduced_word(&p) {
                swap_positions(&mut q, i);
            }
            assert_eq!(p, q);
            assert_eq!(reduced_word(&p).len(), length(&p));
        }
    }

    #[test]
    fn flip_is_conjugation_by_longest() {
        let w0 = longest(5);
        for p in all(5).into_iter().step_by(7) {
            assert_eq!(flip(&p), compose(&compose(&w0, &p), &w0));
        }
    }

    #[test]
    fn all_counts() {
        assert_eq!(all(0).len(), 1);
        assert_eq!(all(4).len(), 24);
    }
}
