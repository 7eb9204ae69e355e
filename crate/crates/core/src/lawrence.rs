//! Mixed braid groups, the Lawrence tower, the universal Lawrence
//! representation and Hecke quadratic relations.

use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::group_ring::{GroupRingElement, GroupRingMatrix};
use crate::long_moody::{lm_subgroup, long_moody, restrict_from_bn1};
use crate::matrix::{Matrix, Ring};
use crate::poly::{Poly, Vars};
use crate::rep::{GroupKind, Representation};
use crate::semidirect::SemidirectElement;
use crate::subgroup::{BraidSubgroup, SubgroupGenerator};
use crate::word::Letter;

/// Generators `σ_1..σ_{n-1}, σ_n^2, σ_{n+1}..σ_{n+m-1}` of `B_{n,m} ≤ B_{n+m}`.
pub fn bnm_generators(n: usize, m: usize) -> Vec<SubgroupGenerator> {
    BraidSubgroup::Mixed { n, m }.generators()
}

fn mixed_parent(rho: &Representation) -> Result<BraidSubgroup> {
    match rho.kind() {
        GroupKind::Braid(g @ BraidSubgroup::Mixed { .. }) => Ok(g),
        other => Err(Error::GroupKind { expected: "a representation of B_{n,m+1}".into(), found: other.to_string() }),
    }
}

/// The image of `b ∈ B_{n,m}` under the representation of `B_{n,m}` built
/// from `ρ: B_{n,m+1} → GL(V)`.
pub fn lawrence_step(rho: &Representation, b: &BraidWord) -> Result<Matrix<Poly>> {
    mixed_parent(rho)?;
    lm_subgroup(&restrict_from_bn1(rho)?, b)
}

/// The whole representation of `B_{n,m}` on `V^{n+m}` built from `ρ`.
pub fn lawrence_step_rep(rho: &Representation) -> Result<Representation> {
    mixed_parent(rho)?;
    long_moody(&restrict_from_bn1(rho)?)
}

/// `ρ'` on `B_{n,m}`: `σ_i ↦ 1` (`i < n`), `σ_n^2 ↦ q`, `σ_{n+i} ↦ ρ(σ_i)`.
pub fn lawrence_seed(rho: &Representation, q: &Poly, n: usize) -> Result<Representation> {
    let m = match rho.kind() {
        GroupKind::Braid(BraidSubgroup::Full { n: m }) => m,
        other => return Err(Error::GroupKind { expected: "a representation of B_m".into(), found: other.to_string() }),
    };
    if n == 0 || m == 0 {
        return Err(Error::Invalid("the Lawrence construction needs n ≥ 1 and m ≥ 1".into()));
    }
    let vars = rho.vars().union(q.vars());
    let rho = rho.embed(&vars)?;
    let q = q.embed(&vars)?;
    let d = rho.dim();
    let id = rho.identity_matrix();
    let mut images = vec![id.clone(); n - 1];
    let mut inverses = vec![id; n - 1];
    images.push(Matrix::scalar(&vars, d, &q));
    inverses.push(Matrix::scalar(&vars, d, &q.inverse()?));
    images.extend(rho.images().iter().cloned());
    inverses.extend(rho.inverses().iter().cloned());
    Representation::with_inverses(GroupKind::Braid(BraidSubgroup::Mixed { n, m }), &vars, d, images, inverses)
}

/// `ρ⁺_q` of `B_n` on `V^k`, `k = (n+m-1)!/(n-1)!`, from `ρ: B_m → GL(V)`.
pub fn lawrence_tower(rho: &Representation, q: &Poly, n: usize) -> Result<Representation> {
    let mut r = lawrence_seed(rho, q, n)?;
    while let GroupKind::Braid(BraidSubgroup::Mixed { .. }) = r.kind() {
        r = lawrence_step_rep(&r)?;
    }
    Ok(r)
}

/// `(n+m-1)!/(n-1)!`.
pub fn lawrence_multiplicity(n: usize, m: usize) -> usize {
    (n..n + m).product()
}

/// Increasing `m`-subsets of `1..=n` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawrenceBasis {
    n: usize,
    m: usize,
    subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl LawrenceBasis {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m > n {
            return Err(Error::Invalid(format!("m = {m} exceeds n = {n}")));
        }
        let mut subsets = Vec::new();
        let mut current = Vec::with_capacity(m);
        fn rec(start: usize, n: usize, m: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if current.len() == m {
                out.push(current.clone());
                return;
            }
            for v in start..=n {
                current.push(v);
                rec(v + 1, n, m, current, out);
                current.pop();
            }
        }
        rec(1, n, m, &mut current, &mut subsets);
        let index = subsets.iter().enumerate().map(|(k, s)| (s.clone(), k)).collect();
        Ok(LawrenceBasis { n, m, subsets, index })
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn position(&self, subset: &[usize]) -> Option<usize> {
        self.index.get(subset).copied()
    }

    pub fn label(&self, k: usize) -> String {
        let parts: Vec<String> = self.subsets[k].iter().map(|v| v.to_string()).collect();
        format!("e{{{}}}", parts.join(","))
    }
}

/// Coefficient ring of the universal Lawrence representation:
/// `Z[q^±1]` times the group ring of `B_m` (on at least one strand).
pub fn lawrence_ring_strands(m: usize) -> usize {
    m.max(1)
}

pub fn q_vars() -> Vars {
    Vars::new(&["q"])
}

fn lawrence_letter(basis: &LawrenceBasis, l: Letter) -> Result<GroupRingMatrix> {
    let (n, m) = (basis.n, basis.m);
    let i = l.index();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { what: "braid generators", index: i, size: n.saturating_sub(1) });
    }
    let rs = lawrence_ring_strands(m);
    let vars = q_vars();
    let scalar = |p: Poly| GroupRingElement::scalar(rs, p);
    let q = Poly::var(&vars, "q")?;
    let qi = q.inverse()?;
    let one = Poly::one(&vars);
    let size = basis.len();
    let mut out = Matrix::zeros(size, size, &GroupRingElement::zero(rs, &vars));
    for (col, a) in basis.subsets.iter().enumerate() {
        let has_i = a.contains(&i);
        let has_next = a.contains(&(i + 1));
        let swap = |from: usize, to: usize| -> usize {
            let mut b: Vec<usize> = a.iter().map(|&v| if v == from { to } else { v }).collect();
            b.sort_unstable();
            basis.position(&b).expect("subset stays in basis")
        };
        match (has_i, has_next, l.is_inverse()) {
            (false, false, _) => out.set(col, col, scalar(one.clone())),
            (true, false, false) => out.set(swap(i, i + 1), col, scalar(one.clone())),
            (false, true, false) => {
                out.set(swap(i + 1, i), col, scalar(q.clone()));
                out.set(col, col, scalar(one.sub(&q)));
            }
            (true, false, true) => {
                out.set(col, col, scalar(one.sub(&qi)));
                out.set(swap(i, i + 1), col, scalar(qi.clone()));
            }
            (false, true, true) => out.set(swap(i + 1, i), col, scalar(one.clone())),
            (true, true, inverse) => {
                let j = a.iter().filter(|&&v| v < i).count();
                let b = BraidWord::new(rs, vec![Letter::new(j + 1, inverse)])?;
                out.set(col, col, GroupRingElement::term(SemidirectElement::braid_part(&b), one.clone()));
            }
        }
    }
    Ok(out)
}

/// The universal Lawrence image of `b ∈ B_n` on the lexicographic basis of
/// `m`-subsets, over `Z[⟨q⟩ × B_m]`.
pub fn universal_lawrence(n: usize, m: usize, b: &BraidWord) -> Result<GroupRingMatrix> {
    if b.strands() != n {
        return Err(Error::SizeMismatch(format!("{}-strand word for n = {n}", b.strands())));
    }
    let basis = LawrenceBasis::new(n, m)?;
    let rs = lawrence_ring_strands(m);
    let mut acc = Matrix::identity(basis.len(), &GroupRingElement::zero(rs, &q_vars()));
    for &l in b.letters() {
        acc = acc.mul(&lawrence_letter(&basis, l)?)?;
    }
    Ok(acc)
}

/// Applies `ρ: B_m → GL(V)` entrywise and substitutes `q ↦ qval`.
pub fn specialize_lawrence(u: &GroupRingMatrix, rho: &Representation, qval: &Poly) -> Result<Matrix<Poly>> {
    let m = match rho.kind() {
        GroupKind::Braid(BraidSubgroup::Full { n }) => n,
        other => return Err(Error::GroupKind { expected: "a representation of B_m".into(), found: other.to_string() }),
    };
    let vars = rho.vars().union(qval.vars());
    let rho = rho.embed(&vars)?;
    let d = rho.dim();
    let zero = Matrix::zeros(d, d, &Poly::zero(&vars));
    let mut out = Matrix::zeros(u.rows() * d, u.cols() * d, &Poly::zero(&vars));
    for (r, c, e) in u.entries() {
        let mut block = zero.clone();
        for (x, coeff) in e.terms() {
            let c = coeff.substitute(&vars, &[("q", qval.clone())])?;
            let image = if x.braid().is_identity() {
                rho.identity_matrix()
            } else {
                if x.n() != m {
                    return Err(Error::SizeMismatch(format!("B_{} entries for a representation of B_{m}", x.n())));
                }
                rho.eval_braid(&x.braid().to_word())?
            };
            block = block.add(&image.scale_left(&c))?;
        }
        out.set_block(r * d, c * d, &block);
    }
    Ok(out)
}

/// Whether `(M + qI)(M - I) = 0`.
pub fn hecke_quadratic_check(m: &Matrix<Poly>, q: &Poly) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch { left: m.shape(), right: m.shape() });
    }
    let vars = m.vars().map_or_else(|| q.vars().clone(), |v| v.union(q.vars()));
    let m = m.embed(&vars)?;
    let q = q.embed(&vars)?;
    let id = Matrix::identity(m.rows(), &Poly::zero(&vars));
    Ok(m.add(&id.scale_left(&q))?.mul(&m.sub(&id)?)?.is_zero())
}

/// A nonzero entry of `(φ(σ_i) + qI)(φ(σ_i) - I)` and, if it has the shape
/// `±(q + σ_j)(1 - σ_j)`, the index `j` and the sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryShape {
    pub row: usize,
    pub col: usize,
    pub factor: Option<(usize, i8)>,
}

pub fn lawrence_entry_shapes(n: usize, m: usize, i: usize) -> Result<Vec<EntryShape>> {
    let basis = LawrenceBasis::new(n, m)?;
    let p = lawrence_letter(&basis, Letter::pos(i))?;
    let rs = lawrence_ring_strands(m);
    let vars = q_vars();
    let id = Matrix::identity(basis.len(), &GroupRingElement::zero(rs, &vars));
    let q = GroupRingElement::scalar(rs, Poly::var(&vars, "q")?);
    let prod = p.add(&id.scale_left(&q))?.mul(&p.sub(&id)?)?;
    let one = GroupRingElement::one(rs, &vars);
    let candidates: Vec<(usize, GroupRingElement)> = (1..m)
        .map(|j| {
            let s = GroupRingElement::braid(&BraidWord::generator(rs, j), &vars);
            (j, q.add(&s).mul(&one.sub(&s)))
        })
        .collect();
    Ok(prod
        .entries()
        .filter(|(_, _, e)| !e.is_zero())
        .map(|(row, col, e)| {
            let factor = candidates.iter().find_map(|(j, c)| {
                if c == e {
                    Some((*j, 1))
                } else if &c.neg() == e {
                    Some((*j, -1))
                } else {
                    None
                }
            });
            EntryShape { row, col, factor }
        })
        .collect())
}

/// Whether every nonzero entry of `(φ(σ_i) + qI)(φ(σ_i) - I)` is, up to
/// sign, `(q + σ_j)(1 - σ_j)` for some `j`.
pub fn lawrence_entry_claim(n: usize, m: usize, i: usize) -> Result<bool> {
    Ok(lawrence_entry_shapes(n, m, i)?.iter().all(|s| s.factor.is_some()))
}
