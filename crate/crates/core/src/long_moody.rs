//! The universal Long-Moody representation, its specializations, and the
//! constructions built from it.

use std::collections::BTreeMap;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::free::FreeWord;
use crate::garside::GarsideNf;
use crate::group_ring::{GroupRingElement, GroupRingMatrix};
use crate::matrix::{Matrix, Ring};
use crate::poly::{Poly, Vars};
use crate::rep::{GroupKind, Representation};
use crate::semidirect::{free_generator_word, SemidirectElement};
use crate::subgroup::BraidSubgroup;
use crate::word::Letter;

fn int(n: usize, c: i64) -> GroupRingElement {
    GroupRingElement::int(n, &Vars::empty(), c)
}

fn gen_free(n: usize, i: usize, inverse: bool) -> GroupRingElement {
    let w = FreeWord::new(n, vec![Letter::new(i, inverse)]).expect("index in range");
    GroupRingElement::free(w, &Vars::empty())
}

fn sigma(n: usize, i: usize, inverse: bool) -> GroupRingElement {
    let b = BraidWord::new(n, vec![Letter::new(i, inverse)]).expect("index in range");
    GroupRingElement::braid(&b, &Vars::empty())
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { what: "braid generators", index: i, size: n.saturating_sub(1) });
    }
    Ok(())
}

fn block_at(n: usize, size: usize, r0: usize, block: &[Vec<GroupRingElement>]) -> GroupRingMatrix {
    let mut m = Matrix::identity(size, &int(n, 0));
    for (r, row) in block.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            m.set(r0 + r, r0 + c, x.clone());
        }
    }
    m
}

/// `blockdiag(I_{i-1}, [[0, g_i], [1, 1 - g_i]], I_{n-i-1})`.
pub fn r_matrix(i: usize, n: usize) -> Result<GroupRingMatrix> {
    check_index(i, n)?;
    let g = gen_free(n, i, false);
    let block = vec![vec![int(n, 0), g.clone()], vec![int(n, 1), int(n, 1).sub(&g)]];
    Ok(block_at(n, n, i - 1, &block))
}

/// `blockdiag(I_{i-1}, [[1 - g_i^-1, 1], [g_i^-1, 0]], I_{n-i-1})`.
pub fn r_matrix_inv(i: usize, n: usize) -> Result<GroupRingMatrix> {
    check_index(i, n)?;
    let gi = gen_free(n, i, true);
    let block = vec![vec![int(n, 1).sub(&gi), int(n, 1)], vec![gi, int(n, 0)]];
    Ok(block_at(n, n, i - 1, &block))
}

/// `φ(σ_i) = σ_i · R_i` and `φ(σ_i^-1) = R_i^-1 · σ_i^-1`.
pub fn phi_letter(l: Letter, n: usize) -> Result<GroupRingMatrix> {
    let i = l.index();
    if l.is_inverse() {
        Ok(r_matrix_inv(i, n)?.scale_right(&sigma(n, i, true)))
    } else {
        Ok(r_matrix(i, n)?.scale_left(&sigma(n, i, false)))
    }
}

/// The universal Long-Moody image: the ordered product of letter images.
pub fn phi(b: &BraidWord) -> Result<GroupRingMatrix> {
    let n = b.strands();
    let mut acc = Matrix::identity(n, &int(n, 0));
    for &l in b.letters() {
        acc = acc.mul(&phi_letter(l, n)?)?;
    }
    Ok(acc)
}

/// Splits `φ(b) = A · b` with every entry of `A` in `Z[F_n]`.
///
/// With `φ(x_k) = x_k N_k` and prefixes `p_k = x_1..x_k`, pushing every
/// braid scalar to the right gives `A = Π_k (p_k ▷ N_k)`.
pub fn factor_entries(b: &BraidWord) -> Result<(GroupRingMatrix, BraidWord)> {
    let n = b.strands();
    let mut acc = Matrix::identity(n, &int(n, 0));
    let mut prefix = GarsideNf::identity(n);
    for &l in b.letters() {
        let i = l.index();
        prefix.push_letter(l);
        let local = if l.is_inverse() {
            // σ_i^-1 ▷ (σ_i ▷ R_i^-1) = R_i^-1
            let mut s = GarsideNf::identity(n);
            s.push_letter(Letter::pos(i));
            r_matrix_inv(i, n)?.map(|e| e.act_on_free(&s))
        } else {
            r_matrix(i, n)?
        };
        acc = acc.mul(&local.map(|e| e.act_on_free(&prefix)))?;
    }
    Ok((acc, b.clone()))
}

/// The same factorization with the braid on the left: `φ(b) = b · A'`,
/// where `A' = b^-1 ▷ A`.
pub fn factor_entries_left(b: &BraidWord) -> Result<(BraidWord, GroupRingMatrix)> {
    let (a, _) = factor_entries(b)?;
    let inv = b.normal_form().inverse();
    Ok((b.clone(), a.map(|e| e.act_on_free(&inv))))
}

/// Recombines a factorization into `A · b`.
pub fn recombine(a: &GroupRingMatrix, b: &BraidWord) -> GroupRingMatrix {
    let scalar = GroupRingElement::braid(b, &Vars::empty());
    a.map(|e| e.mul(&scalar))
}

/// Applies a representation of `F_n ⋊ G` entrywise to a group-ring matrix.
pub fn specialize(u: &GroupRingMatrix, rho: &Representation) -> Result<Matrix<Poly>> {
    let d = rho.dim();
    let zero = Poly::zero(rho.vars());
    let mut out = Matrix::zeros(u.rows() * d, u.cols() * d, &zero);
    for (r, c, e) in u.entries() {
        let block = specialize_element(e, rho)?;
        out.set_block(r * d, c * d, &block);
    }
    Ok(out)
}

/// `Σ c·(w, β) ↦ Σ c·ρ(w)ρ(β)`, evaluating each distinct `β` once.
pub fn specialize_element(e: &GroupRingElement, rho: &Representation) -> Result<Matrix<Poly>> {
    let vars = rho.vars();
    let zero = Matrix::zeros(rho.dim(), rho.dim(), &Poly::zero(vars));
    let mut by_braid: BTreeMap<&GarsideNf, Vec<(&SemidirectElement, &Poly)>> = BTreeMap::new();
    for (x, c) in e.terms() {
        by_braid.entry(x.braid()).or_default().push((x, c));
    }
    let mut total = zero.clone();
    for (beta, terms) in by_braid {
        let mut sum = zero.clone();
        for (x, c) in terms {
            let c = c.embed(vars)?;
            sum = sum.add(&rho.eval_free(x.free())?.scale_left(&c))?;
        }
        if !beta.is_identity() {
            sum = sum.mul(&rho.eval_braid(&beta.to_word())?)?;
        }
        total = total.add(&sum)?;
    }
    Ok(total)
}

/// The Long-Moody image of a word of `G` under `ρ: F_n ⋊ G → GL(V)`,
/// computed through the factorization `φ(b) = A·b`.
pub fn lm_subgroup(rho: &Representation, b: &BraidWord) -> Result<Matrix<Poly>> {
    let g = match rho.kind() {
        GroupKind::FreeSemidirect(g) => g,
        other => {
            return Err(Error::GroupKind { expected: "a representation of F_n ⋊ G".into(), found: other.to_string() })
        }
    };
    if !g.contains(b) {
        return Err(Error::NotInSubgroup(g.to_string()));
    }
    let (a, _) = factor_entries(b)?;
    let rho_b = rho.eval_braid(b)?;
    let d = rho.dim();
    let n = b.strands();
    let zero = Poly::zero(rho.vars());
    let mut out = Matrix::zeros(n * d, n * d, &zero);
    for (r, c, e) in a.entries() {
        if e.is_zero() {
            continue;
        }
        let block = specialize_element(e, rho)?.mul(&rho_b)?;
        out.set_block(r * d, c * d, &block);
    }
    Ok(out)
}

/// The representation `ρ⁺` of `G` obtained from `ρ: F_n ⋊ G → GL(V)`.
pub fn long_moody(rho: &Representation) -> Result<Representation> {
    long_moody_with(rho, Exec::default())
}

pub fn long_moody_with(rho: &Representation, exec: Exec) -> Result<Representation> {
    let g = match rho.kind() {
        GroupKind::FreeSemidirect(g) => g,
        other => {
            return Err(Error::GroupKind { expected: "a representation of F_n ⋊ G".into(), found: other.to_string() })
        }
    };
    let words: Vec<BraidWord> = g.generators().into_iter().map(|x| x.word).collect();
    let jobs: Vec<BraidWord> = words.iter().flat_map(|w| [w.clone(), w.inverse()]).collect();
    let mats = exec.map(jobs, |w| lm_subgroup(rho, &w)).into_iter().collect::<Result<Vec<_>>>()?;
    let (images, inverses): (Vec<_>, Vec<_>) = mats.chunks(2).map(|p| (p[0].clone(), p[1].clone())).unzip();
    Representation::with_inverses(GroupKind::Braid(g), rho.vars(), g.strands() * rho.dim(), images, inverses)
}

/// Product of the generator matrices `s·blockdiag(I, [[0,t],[1,1-t]], I)`
/// and their inverses, over `Z[s^±1, t^±1]`.
pub fn burau_oracle(n: usize, b: &BraidWord) -> Result<Matrix<Poly>> {
    if b.strands() != n {
        return Err(Error::SizeMismatch(format!("{}-strand word for n = {n}", b.strands())));
    }
    let vars = Vars::new(&["s", "t"]);
    let s = Poly::var(&vars, "s")?;
    let t = Poly::var(&vars, "t")?;
    let (si, ti) = (s.inverse()?, t.inverse()?);
    let one = Poly::one(&vars);
    let zero = Poly::zero(&vars);
    let mut acc = Matrix::identity(n, &zero);
    for l in b.letters() {
        let i = l.index() - 1;
        let mut m = Matrix::identity(n, &zero);
        let (block, scale) = if l.is_inverse() {
            ([[one.sub(&ti), one.clone()], [ti.clone(), zero.clone()]], &si)
        } else {
            ([[zero.clone(), t.clone()], [one.clone(), one.sub(&t)]], &s)
        };
        for (r, row) in block.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                m.set(i + r, i + c, x.clone());
            }
        }
        acc = acc.mul(&m.scale_left(scale))?;
    }
    Ok(acc)
}

/// `ρ_t(g_i) = t·ρ(g_i)`, `ρ_t(β) = ρ(β)`.
pub fn rescale_rep(rho: &Representation, t: &Poly) -> Result<Representation> {
    let rank = rho.kind().free_rank();
    rescale_each(rho, &vec![t.clone(); rank])
}

/// Multiplies the image of `g_i` by `ts[i-1]`.
pub(crate) fn rescale_each(rho: &Representation, ts: &[Poly]) -> Result<Representation> {
    let rank = rho.kind().free_rank();
    if rank == 0 {
        return Err(Error::GroupKind {
            expected: "a representation of F_n ⋊ G".into(), found: rho.kind().to_string()
        });
    }
    if ts.len() != rank {
        return Err(Error::SizeMismatch(format!("{} parameters for {rank} free generators", ts.len())));
    }
    let vars = ts.iter().fold(rho.vars().clone(), |v, t| v.union(t.vars()));
    let rho = rho.embed(&vars)?;
    let mut images = rho.images().to_vec();
    let mut inverses = rho.inverses().to_vec();
    for (k, t) in ts.iter().enumerate() {
        let t = t.embed(&vars)?;
        let ti = t.inverse()?;
        images[k] = images[k].scale_left(&t);
        inverses[k] = inverses[k].scale_left(&ti);
    }
    Representation::with_inverses(rho.kind(), &vars, rho.dim(), images, inverses)
}

/// Restricts a representation of `G' ≤ B_{N+1}` to `F_N ⋊ G`, where the
/// free generators are `g_i = (σ_N..σ_{i+1}) σ_i^2 (σ_N..σ_{i+1})^-1` and
/// `G ≤ B_N` sits inside `G'` by adding a straight last strand.
pub fn restrict_from_bn1(rho: &Representation) -> Result<Representation> {
    let parent = match rho.kind() {
        GroupKind::Braid(g) => g,
        other => {
            return Err(Error::GroupKind { expected: "a braid group representation".into(), found: other.to_string() })
        }
    };
    let base =
        parent.free_semidirect_base().ok_or_else(|| Error::Invalid(format!("{parent} has no F_n ⋊ G subgroup")))?;
    let n = base.strands();
    let mut words: Vec<BraidWord> = (1..=n).map(|i| free_generator_word(n, i)).collect();
    words.extend(base.generators().into_iter().map(|x| x.word.widen(n + 1)));
    let images = words.iter().map(|w| rho.eval_braid(w)).collect::<Result<Vec<_>>>()?;
    let inverses = words.iter().map(|w| rho.eval_braid(&w.inverse())).collect::<Result<Vec<_>>>()?;
    Representation::with_inverses(GroupKind::FreeSemidirect(base), rho.vars(), rho.dim(), images, inverses)
}

/// Iterates restrict → rescale → Long-Moody from `B_N` down to `B_{n_target}`.
pub fn lm_tower(base: &Representation, params: &[Poly], n_target: usize) -> Result<Representation> {
    let n = match base.kind() {
        GroupKind::Braid(BraidSubgroup::Full { n }) => n,
        other => return Err(Error::GroupKind { expected: "a representation of B_N".into(), found: other.to_string() }),
    };
    if n_target > n || params.len() != n - n_target {
        return Err(Error::SizeMismatch(format!("{} parameters to go from B_{n} to B_{n_target}", params.len())));
    }
    let mut rho = base.clone();
    for t in params {
        rho = long_moody(&rescale_rep(&restrict_from_bn1(&rho)?, t)?)?;
    }
    Ok(rho)
}

/// `S_i = [[1, g_i, 0], [0, -g_i, 0], [0, 1, 1]]` at rows/cols `i-1, i, i+1`
/// (1-based) of an `(n-1)`-square identity, cut off at the edges.
pub fn s_matrix(i: usize, n: usize) -> Result<GroupRingMatrix> {
    check_index(i, n)?;
    let g = gen_free(n, i, false);
    let (z, o) = (int(n, 0), int(n, 1));
    let block = [[o.clone(), g.clone(), z.clone()], [z.clone(), g.neg(), z.clone()], [z, o.clone(), o]];
    Ok(cut_block(n, i, &block))
}

/// `S_i^-1 = [[1, 1, 0], [0, -g_i^-1, 0], [0, g_i^-1, 1]]`, cut the same way.
pub fn s_matrix_inv(i: usize, n: usize) -> Result<GroupRingMatrix> {
    check_index(i, n)?;
    let gi = gen_free(n, i, true);
    let (z, o) = (int(n, 0), int(n, 1));
    let block = [[o.clone(), o.clone(), z.clone()], [z.clone(), gi.neg(), z.clone()], [z, gi, o]];
    Ok(cut_block(n, i, &block))
}

fn cut_block(n: usize, i: usize, block: &[[GroupRingElement; 3]; 3]) -> GroupRingMatrix {
    let size = n - 1;
    let mut m = Matrix::identity(size, &int(n, 0));
    // local index k sits at 0-based row i - 2 + k
    for (r, row) in block.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            let (gr, gc) = ((i + r).checked_sub(2), (i + c).checked_sub(2));
            if let (Some(gr), Some(gc)) = (gr, gc) {
                if gr < size && gc < size {
                    m.set(gr, gc, x.clone());
                }
            }
        }
    }
    m
}

/// The reduced universal image: `φ_r(σ_i) = σ_i·S_i`, `φ_r(σ_i^-1) = S_i^-1·σ_i^-1`.
pub fn phi_r(b: &BraidWord) -> Result<GroupRingMatrix> {
    let n = b.strands();
    if n < 2 {
        return Err(Error::Invalid("the reduced construction needs n ≥ 2".into()));
    }
    let mut acc = Matrix::identity(n - 1, &int(n, 0));
    for &l in b.letters() {
        let i = l.index();
        let m = if l.is_inverse() {
            s_matrix_inv(i, n)?.scale_right(&sigma(n, i, true))
        } else {
            s_matrix(i, n)?.scale_left(&sigma(n, i, false))
        };
        acc = acc.mul(&m)?;
    }
    Ok(acc)
}

/// `(φ(σ_i) + c·I)(φ(σ_i) - σ_i·I)` for a left scalar `c`.
pub fn quadratic_product(i: usize, n: usize, c: &GroupRingElement) -> Result<GroupRingMatrix> {
    let p = phi_letter(Letter::pos(i), n)?;
    let id = Matrix::identity(n, &int(n, 0));
    let left = p.add(&id.scale_left(c))?;
    let right = p.sub(&id.scale_left(&sigma(n, i, false)))?;
    left.mul(&right)
}

/// Whether `(φ(σ_i) + σ_i g_i·I)(φ(σ_i) - σ_i·I) = 0`.
pub fn quadratic_check_universal(i: usize, n: usize) -> Result<bool> {
    check_index(i, n)?;
    let c = sigma(n, i, false).mul(&gen_free(n, i, false));
    Ok(quadratic_product(i, n, &c)?.is_zero())
}
