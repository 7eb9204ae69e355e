//! Finite-dimensional representations given by generator images.

use std::collections::HashMap;
use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::free::{artin_act, FreeWord};
use crate::matrix::Matrix;
use crate::poly::{Poly, Vars};
use crate::semidirect::SemidirectElement;
use crate::subgroup::BraidSubgroup;
use crate::word::{invert_letters, Letter};

/// The group a representation is defined on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// A subgroup `G ≤ B_N`.
    Braid(BraidSubgroup),
    /// `F_N ⋊ G` for a subgroup `G ≤ B_N`.
    FreeSemidirect(BraidSubgroup),
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Braid(g) => write!(f, "{g}"),
            GroupKind::FreeSemidirect(g) => write!(f, "F_{} ⋊ {g}", g.strands()),
        }
    }
}

impl GroupKind {
    pub fn subgroup(&self) -> BraidSubgroup {
        match *self {
            GroupKind::Braid(g) | GroupKind::FreeSemidirect(g) => g,
        }
    }

    pub fn strands(&self) -> usize {
        self.subgroup().strands()
    }

    pub fn free_rank(&self) -> usize {
        match self {
            GroupKind::Braid(_) => 0,
            GroupKind::FreeSemidirect(g) => g.strands(),
        }
    }

    /// Generator names in canonical order: `g1..gN` (free part) then the
    /// subgroup generators.
    pub fn generator_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (1..=self.free_rank()).map(|i| format!("g{i}")).collect();
        names.extend(self.subgroup().generators().into_iter().map(|g| g.name));
        names
    }
}

/// A relation between two words in a representation's generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: Vec<Letter>,
    pub rhs: Vec<Letter>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationOutcome {
    pub name: String,
    /// First differing entry, if the relation fails.
    pub failure: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    kind: GroupKind,
    vars: Vars,
    dim: usize,
    images: Vec<Matrix<Poly>>,
    inverses: Vec<Matrix<Poly>>,
}

impl Representation {
    /// Builds a representation, inverting each image over the Laurent ring.
    pub fn new(kind: GroupKind, vars: &Vars, dim: usize, images: Vec<Matrix<Poly>>) -> Result<Self> {
        let inverses = images.iter().map(|m| m.embed(vars)?.inverse()).collect::<Result<Vec<_>>>()?;
        Self::with_inverses(kind, vars, dim, images, inverses)
    }

    pub fn with_inverses(
        kind: GroupKind,
        vars: &Vars,
        dim: usize,
        images: Vec<Matrix<Poly>>,
        inverses: Vec<Matrix<Poly>>,
    ) -> Result<Self> {
        let count = kind.generator_names().len();
        for list in [&images, &inverses] {
            if list.len() != count {
                return Err(Error::SizeMismatch(format!("{kind} has {count} generators, got {} images", list.len())));
            }
            if let Some(m) = list.iter().find(|m| m.shape() != (dim, dim)) {
                return Err(Error::ShapeMismatch { left: (dim, dim), right: m.shape() });
            }
        }
        let embed = |list: Vec<Matrix<Poly>>| list.iter().map(|m| m.embed(vars)).collect::<Result<Vec<_>>>();
        Ok(Representation { kind, vars: vars.clone(), dim, images: embed(images)?, inverses: embed(inverses)? })
    }

    /// Builds a representation from images keyed by generator name.
    pub fn from_named(kind: GroupKind, vars: &Vars, dim: usize, named: &HashMap<String, Matrix<Poly>>) -> Result<Self> {
        let images = kind
            .generator_names()
            .into_iter()
            .map(|name| named.get(&name).cloned().ok_or(Error::MissingImage(name)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(kind, vars, dim, images)
    }

    /// Every generator acts as the identity.
    pub fn trivial(kind: GroupKind, vars: &Vars, dim: usize) -> Self {
        let id = Matrix::identity(dim, &Poly::zero(vars));
        let count = kind.generator_names().len();
        Representation { kind, vars: vars.clone(), dim, images: vec![id.clone(); count], inverses: vec![id; count] }
    }

    /// One-dimensional representation with the given generator values.
    pub fn one_dim(kind: GroupKind, vars: &Vars, values: Vec<Poly>) -> Result<Self> {
        let images = values.into_iter().map(|v| Matrix::scalar(vars, 1, &v)).collect();
        Self::new(kind, vars, 1, images)
    }

    /// The one-dimensional representation of `F_n ⋊ B_n` with `σ_i ↦ s`,
    /// `g_i ↦ t`.
    pub fn one_dim_semidirect(n: usize, s: &Poly, t: &Poly) -> Result<Self> {
        let vars = s.vars().union(t.vars());
        let (s, t) = (s.embed(&vars)?, t.embed(&vars)?);
        let kind = GroupKind::FreeSemidirect(BraidSubgroup::Full { n });
        let values = (0..n).map(|_| t.clone()).chain((1..n).map(|_| s.clone())).collect();
        Self::one_dim(kind, &vars, values)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[Matrix<Poly>] {
        &self.images
    }

    pub fn inverses(&self) -> &[Matrix<Poly>] {
        &self.inverses
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.kind.generator_names()
    }

    pub fn image(&self, name: &str) -> Option<&Matrix<Poly>> {
        self.generator_names().iter().position(|n| n == name).map(|k| &self.images[k])
    }

    /// The same images read as a representation of an isomorphic group with
    /// the same generator list.
    pub fn relabel(mut self, kind: GroupKind) -> Result<Self> {
        if kind.generator_names() != self.kind.generator_names() {
            return Err(Error::GroupKind { expected: self.kind.to_string(), found: kind.to_string() });
        }
        self.kind = kind;
        Ok(self)
    }

    /// Extends the scalar ring to `vars`.
    pub fn embed(&self, vars: &Vars) -> Result<Self> {
        self.map_entries(vars, |p| p.embed(vars))
    }

    /// Applies `f` to every entry of every image and inverse.
    pub fn map_entries(&self, vars: &Vars, f: impl Fn(&Poly) -> Result<Poly>) -> Result<Self> {
        let map = |list: &[Matrix<Poly>]| list.iter().map(|m| m.try_map(&f)).collect::<Result<Vec<_>>>();
        Ok(Representation {
            kind: self.kind,
            vars: vars.clone(),
            dim: self.dim,
            images: map(&self.images)?,
            inverses: map(&self.inverses)?,
        })
    }

    /// Substitutes values for variables; `target` is the resulting ring.
    pub fn substitute(&self, target: &Vars, values: &[(&str, Poly)]) -> Result<Self> {
        self.map_entries(target, |p| p.substitute(target, values))
    }

    pub fn identity_matrix(&self) -> Matrix<Poly> {
        Matrix::identity(self.dim, &Poly::zero(&self.vars))
    }

    /// Product of images along a word in generator indices (1-based).
    pub fn eval_letters(&self, letters: &[Letter]) -> Result<Matrix<Poly>> {
        let mut acc = self.identity_matrix();
        for l in letters {
            let k = l.index() - 1;
            let list = if l.is_inverse() { &self.inverses } else { &self.images };
            let m = list.get(k).ok_or(Error::IndexOutOfRange {
                what: "representation generators",
                index: l.index(),
                size: list.len(),
            })?;
            acc = acc.mul(m)?;
        }
        Ok(acc)
    }

    /// Image of a σ-word lying in the subgroup part of the group.
    pub fn eval_braid(&self, b: &BraidWord) -> Result<Matrix<Poly>> {
        let letters = self.subgroup_letters(b)?;
        self.eval_letters(&letters)
    }

    /// Rewrites a σ-word into this representation's generator indices.
    pub fn subgroup_letters(&self, b: &BraidWord) -> Result<Vec<Letter>> {
        let g = self.kind.subgroup();
        if b.strands() != g.strands() {
            return Err(Error::SizeMismatch(format!("{}-strand word for {g}", b.strands())));
        }
        let offset = self.kind.free_rank();
        Ok(g.rewrite(b)?.into_iter().map(|l| Letter::new(l.index() + offset, l.is_inverse())).collect())
    }

    pub fn eval_free(&self, w: &FreeWord) -> Result<Matrix<Poly>> {
        if self.kind.free_rank() != w.rank() {
            return Err(Error::GroupKind {
                expected: format!("a representation of F_{} ⋊ G", w.rank()),
                found: self.kind.to_string(),
            });
        }
        self.eval_letters(w.letters())
    }

    pub fn eval_element(&self, x: &SemidirectElement) -> Result<Matrix<Poly>> {
        let free = self.eval_free(x.free())?;
        if x.braid().is_identity() {
            return Ok(free);
        }
        free.mul(&self.eval_braid(&x.braid().to_word())?)
    }

    /// The defining relations of the group, as pairs of generator words.
    pub fn relations(&self) -> Result<Vec<Relation>> {
        let names = self.generator_names();
        let show = |w: &[Letter]| -> String {
            if w.is_empty() {
                return "1".into();
            }
            let parts: Vec<String> = w
                .iter()
                .map(|l| {
                    let n = &names[l.index() - 1];
                    if l.is_inverse() {
                        format!("{n}^-1")
                    } else {
                        n.clone()
                    }
                })
                .collect();
            parts.join(" ")
        };
        let mut out = Vec::new();
        let g = self.kind.subgroup();
        let offset = self.kind.free_rank();
        let shift = |w: Vec<Letter>| -> Vec<Letter> {
            w.into_iter().map(|l| Letter::new(l.index() + offset, l.is_inverse())).collect()
        };
        let mut push = |name: String, lhs: Vec<Letter>, rhs: Vec<Letter>| {
            let name = if name.is_empty() { format!("{} = {}", show(&lhs), show(&rhs)) } else { name };
            out.push(Relation { name, lhs, rhs });
        };
        let n = g.strands();
        let braid_relators = braid_relations(n);
        match g {
            BraidSubgroup::Full { .. } => {
                for (l, r) in braid_relators {
                    push(String::new(), shift(l), shift(r));
                }
            }
            _ => {
                for tau in g.coset_representatives() {
                    let t = BraidSubgroup::permutation_braid(n, &tau);
                    for (l, r) in &braid_relators {
                        let mut letters = t.letters().to_vec();
                        letters.extend(l.iter().copied());
                        letters.extend(invert_letters(r));
                        letters.extend(invert_letters(t.letters()));
                        let word = BraidWord::new(n, letters)?;
                        let lhs = shift(g.rewrite(&word)?);
                        let name = format!(
                            "T r T^-1 with T = {t}, r = {}",
                            BraidWord::new(n, l.clone())?.concat(&BraidWord::new(n, r.clone())?.inverse())?
                        );
                        push(name, lhs, Vec::new());
                    }
                }
                for (k, gen) in g.generators().into_iter().enumerate() {
                    let lhs = shift(vec![Letter::pos(k + 1)]);
                    let rhs = shift(g.rewrite(&gen.word)?);
                    push(format!("{} = rewrite({})", gen.name, gen.word), lhs, rhs);
                }
            }
        }
        if offset > 0 {
            for (k, gen) in g.generators().into_iter().enumerate() {
                for i in 1..=offset {
                    let x = Letter::pos(offset + k + 1);
                    let image = artin_act(&gen.word, &FreeWord::generator(offset, i))?;
                    push(String::new(), vec![x, Letter::pos(i), x.inverse()], image.letters().to_vec());
                }
            }
        }
        Ok(out)
    }

    /// Checks inverse pairs and every defining relation.
    pub fn check_relations(&self, exec: Exec) -> Result<Vec<RelationOutcome>> {
        let id = self.identity_matrix();
        let mut out = Vec::new();
        for (k, name) in self.generator_names().into_iter().enumerate() {
            let prod = self.images[k].mul(&self.inverses[k])?;
            out.push(RelationOutcome { name: format!("{name} {name}^-1 = 1"), failure: prod.first_difference(&id) });
        }
        let checked = exec.map(self.relations()?, |rel| -> Result<RelationOutcome> {
            let lhs = self.eval_letters(&rel.lhs)?;
            let rhs = self.eval_letters(&rel.rhs)?;
            Ok(RelationOutcome { name: rel.name, failure: lhs.first_difference(&rhs) })
        });
        for r in checked {
            out.push(r?);
        }
        Ok(out)
    }

    /// Fails with the first relation that does not hold.
    pub fn verify(&self, exec: Exec) -> Result<()> {
        match self.check_relations(exec)?.into_iter().find(|o| o.failure.is_some()) {
            Some(RelationOutcome { name, failure: Some((row, col)) }) => {
                Err(Error::RelationFailed { relation: name, row, col })
            }
            _ => Ok(()),
        }
    }
}

/// The Artin relations of `B_n` as `(lhs, rhs)` σ-words.
pub fn braid_relations(n: usize) -> Vec<(Vec<Letter>, Vec<Letter>)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            let (a, b) = (Letter::pos(i), Letter::pos(j));
            if j == i + 1 {
                out.push((vec![a, b, a], vec![b, a, b]));
            } else {
                out.push((vec![a, b], vec![b, a]));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars_t() -> Vars {
        Vars::new(&["t"])
    }

    #[test]
    fn canonical_generator_names() {
        let kind = GroupKind::FreeSemidirect(BraidSubgroup::Mixed { n: 2, m: 1 });
        assert_eq!(kind.generator_names(), ["g1", "g2", "g3", "s1", "s2^2"]);
    }

    #[test]
    fn trivial_representations_verify() {
        let vars = vars_t();
        for g in [BraidSubgroup::Full { n: 4 }, BraidSubgroup::Pure { n: 4 }, BraidSubgroup::Mixed { n: 2, m: 2 }] {
            for kind in [GroupKind::Braid(g), GroupKind::FreeSemidirect(g)] {
                Representation::trivial(kind, &vars, 2).verify(Exec::Sequential).unwrap();
            }
        }
    }

    #[test]
    fn one_dim_semidirect_verifies_and_bad_one_fails() {
        let vars = Vars::new(&["s", "t"]);
        let s = Poly::var(&vars, "s").unwrap();
        let t = Poly::var(&vars, "t").unwrap();
        let rep = Representation::one_dim_semidirect(3, &s, &t).unwrap();
        rep.verify(Exec::Sequential).unwrap();
        // g_1 ↦ t, g_2 ↦ t^2 breaks σ_1 g_1 σ_1^-1 = g_2.
        let kind = rep.kind();
        let values = vec![t.clone(), t.mul(&t), t.clone(), s.clone(), s];
        let bad = Representation::one_dim(kind, &vars, values).unwrap();
        assert!(matches!(bad.verify(Exec::Sequential), Err(Error::RelationFailed { .. })));
    }

    #[test]
    fn pure_one_dim_characters() {
        // Any assignment of units to the A_ij defines a character of P_n.
        let vars = Vars::new(&["a", "b", "c"]);
        let vals: Vec<Poly> = ["a", "b", "c"].iter().map(|v| Poly::var(&vars, v).unwrap()).collect();
        let rep = Representation::one_dim(GroupKind::Braid(BraidSubgroup::Pure { n: 3 }), &vars, vals).unwrap();
        rep.verify(Exec::Sequential).unwrap();
        let w = BraidWord::from_signed(3, &[1, 2, 2, 1]).unwrap();
        // σ1 σ2^2 σ1 = A_12 · A_13 in abelianized P_3.
        assert_eq!(rep.eval_braid(&w).unwrap().get(0, 0).to_string(), "a*b");
    }

    #[test]
    fn non_abelian_pure_relation_failure_is_detected() {
        // Images of A_12 and A_13 that do not commute with A_12 A_13 A_23
        // (central in P_3) must be rejected.
        let vars = Vars::empty();
        let a = Matrix::int(&vars, vec![vec![1, 1], vec![0, 1]]);
        let b = Matrix::int(&vars, vec![vec![1, 0], vec![1, 1]]);
        let id = Matrix::int(&vars, vec![vec![1, 0], vec![0, 1]]);
        let rep =
            Representation::new(GroupKind::Braid(BraidSubgroup::Pure { n: 3 }), &vars, 2, vec![a, b, id]).unwrap();
        assert!(rep.verify(Exec::Sequential).is_err());
    }
}
