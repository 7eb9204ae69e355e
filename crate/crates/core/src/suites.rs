//! Verification suites: each check is an exact identity, and independent
//! checks fan out through [`Exec`].

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gassner::{gassner, gassner_rep, pure_generators};
use crate::group_ring::GroupRingMatrix;
use crate::hecke::reduce_matrix;
use crate::lawrence::{hecke_quadratic_check, lawrence_entry_shapes, specialize_lawrence, universal_lawrence};
use crate::long_moody::{burau_oracle, factor_entries, phi, phi_r, quadratic_check_universal, recombine, specialize};
use crate::matrix::Matrix;
use crate::poly::{Poly, Vars};
use crate::rep::{braid_relations, GroupKind, Representation};
use crate::subgroup::{pure_pairs, BraidSubgroup};
use crate::word::Letter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    /// What went wrong, for failed checks.
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(label: impl Into<String>) -> Self {
        Check { label: label.into(), passed: true, detail: None }
    }

    pub fn fail(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { label: label.into(), passed: false, detail: Some(detail.into()) }
    }

    fn from_difference(label: String, diff: Option<(usize, usize)>) -> Self {
        match diff {
            None => Check::pass(label),
            Some((r, c)) => Check::fail(label, format!("entries differ at ({r}, {c})")),
        }
    }

    fn from_result(label: String, r: Result<bool>) -> Self {
        match r {
            Ok(true) => Check::pass(label),
            Ok(false) => Check::fail(label, "identity does not hold"),
            Err(e) => Check::fail(label, e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>, checks: Vec<Check>) -> Self {
        Report { name: name.into(), checks }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        let verdict = if failed == 0 { "PASS" } else { "FAIL" };
        writeln!(f, "{}: {verdict} ({} checks, {failed} failed)", self.name, self.checks.len())?;
        for c in &self.checks {
            match &c.detail {
                None => writeln!(f, "  ok    {}", c.label)?,
                Some(d) => writeln!(f, "  FAIL  {}: {d}", c.label)?,
            }
        }
        Ok(())
    }
}

fn word(n: usize, letters: &[Letter]) -> Result<BraidWord> {
    BraidWord::new(n, letters.to_vec())
}

fn group_ring_relations(
    n: usize,
    exec: Exec,
    image: impl Fn(&BraidWord) -> Result<GroupRingMatrix> + Send + Sync,
) -> Result<Vec<Check>> {
    let mut jobs: Vec<(Vec<Letter>, Vec<Letter>)> = braid_relations(n);
    jobs.extend((1..n).map(|i| (vec![Letter::pos(i), Letter::neg(i)], Vec::new())));
    let checks = exec.map(jobs, |(l, r)| -> Result<Check> {
        let (lw, rw) = (word(n, &l)?, word(n, &r)?);
        let label = format!("{} = {}", show(&lw), show(&rw));
        Ok(Check::from_difference(label, image(&lw)?.first_difference(&image(&rw)?)))
    });
    checks.into_iter().collect()
}

fn show(w: &BraidWord) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.to_string()
    }
}

/// The Artin relations and inverse pairs for the universal Long-Moody matrices.
pub fn braid_relation_suite(n: usize, exec: Exec) -> Result<Report> {
    Ok(Report::new(format!("universal braid relations, n = {n}"), group_ring_relations(n, exec, phi)?))
}

/// The same relations for the reduced universal matrices.
pub fn reduced_relation_suite(n: usize, exec: Exec) -> Result<Report> {
    Ok(Report::new(format!("reduced braid relations, n = {n}"), group_ring_relations(n, exec, phi_r)?))
}

/// `(φ(σ_i) + σ_i g_i I)(φ(σ_i) - σ_i I) = 0` for every `i`.
pub fn quadratic_suite(n: usize, exec: Exec) -> Result<Report> {
    let checks = exec.map_range(n.saturating_sub(1), |k| {
        let i = k + 1;
        Check::from_result(format!("(φ(s{i}) + s{i} g{i})(φ(s{i}) - s{i}) = 0"), quadratic_check_universal(i, n))
    });
    Ok(Report::new(format!("quadratic relation, n = {n}"), checks))
}

/// Artin relations for the universal Lawrence matrices, both exactly over
/// `Z[⟨q⟩ × B_m]` and after reduction to the Hecke algebra `H_m(q)`.
pub fn lawrence_relation_suite(n: usize, m: usize, exec: Exec) -> Result<Report> {
    let mut jobs: Vec<(Vec<Letter>, Vec<Letter>)> = braid_relations(n);
    jobs.extend((1..n).map(|i| (vec![Letter::pos(i), Letter::neg(i)], Vec::new())));
    let checks = exec.map(jobs, |(l, r)| -> Result<[Check; 2]> {
        let (lw, rw) = (word(n, &l)?, word(n, &r)?);
        let (a, b) = (universal_lawrence(n, m, &lw)?, universal_lawrence(n, m, &rw)?);
        let label = format!("{} = {}", show(&lw), show(&rw));
        let exact = Check::from_difference(format!("{label} (group ring)"), a.first_difference(&b));
        let ra = reduce_matrix(&a, m.max(1))?;
        let rb = reduce_matrix(&b, m.max(1))?;
        let hecke = Check::from_difference(format!("{label} (Hecke quotient)"), ra.first_difference(&rb));
        Ok([exact, hecke])
    });
    let checks = checks.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    Ok(Report::new(format!("universal Lawrence relations, n = {n}, m = {m}"), checks))
}

/// Whether each nonzero entry of `(φ(σ_i) + qI)(φ(σ_i) - I)` in the universal
/// Lawrence representation is `±(q + σ_j)(1 - σ_j)`.
pub fn entry_claim_suite(n: usize, m: usize, exec: Exec) -> Result<Report> {
    let checks = exec.map_range(n.saturating_sub(1), |k| -> Result<Check> {
        let i = k + 1;
        let shapes = lawrence_entry_shapes(n, m, i)?;
        let label = format!("entries of (φ(s{i}) + q)(φ(s{i}) - 1)");
        Ok(match shapes.iter().find(|s| s.factor.is_none()) {
            None => {
                let signs: Vec<String> = shapes
                    .iter()
                    .map(|s| {
                        let (j, sign) = s.factor.expect("checked above");
                        format!("({}, {}) = {}(q + s{j})(1 - s{j})", s.row, s.col, if sign < 0 { "-" } else { "" })
                    })
                    .collect();
                let mut c = Check::pass(label);
                if !signs.is_empty() {
                    c.label.push_str(&format!(": {}", signs.join(", ")));
                }
                c
            }
            Some(s) => Check::fail(label, format!("entry ({}, {}) has another shape", s.row, s.col)),
        })
    });
    Ok(Report::new(format!("Lawrence entry shapes, n = {n}, m = {m}"), checks.into_iter().collect::<Result<_>>()?))
}

fn input_m(rho: &Representation) -> Result<usize> {
    match rho.kind() {
        GroupKind::Braid(BraidSubgroup::Full { n }) => Ok(n),
        other => Err(Error::GroupKind { expected: "a representation of B_m".into(), found: other.to_string() }),
    }
}

/// Hecke preservation: given `ρ: B_m → GL(V)` whose generators satisfy
/// `(M + qI)(M - I) = 0`, checks the same relation for every generator image
/// of the Lawrence representation `ρ⁺` of `B_n`.
pub fn hecke_suite(n: usize, rho: &Representation, q: &Poly, exec: Exec) -> Result<Report> {
    let m = input_m(rho)?;
    let mut checks: Vec<Check> = rho
        .images()
        .iter()
        .enumerate()
        .map(|(k, img)| {
            Check::from_result(format!("input ρ(s{}) satisfies the quadratic", k + 1), hecke_quadratic_check(img, q))
        })
        .collect();
    let images = exec.map_range(n.saturating_sub(1), |k| -> Result<Check> {
        let i = k + 1;
        let u = universal_lawrence(n, m, &BraidWord::generator(n, i))?;
        let image = specialize_lawrence(&u, rho, q)?;
        Ok(Check::from_result(format!("ρ⁺(s{i}) satisfies (M + q)(M - 1) = 0"), hecke_quadratic_check(&image, q)))
    });
    checks.extend(images.into_iter().collect::<Result<Vec<_>>>()?);
    Ok(Report::new(format!("Hecke preservation, n = {n}, m = {m}, dim ρ = {}", rho.dim()), checks))
}

/// Representations of `B_m` satisfying `(M + qI)(M - I) = 0` over `Z[q^±1]`:
/// the characters `σ ↦ 1` and `σ ↦ -q`, and a two-dimensional Burau
/// representation at `t = q` (unreduced for `m = 2`, reduced for `m = 3`).
pub fn standard_hecke_inputs(m: usize) -> Result<Vec<(String, Representation)>> {
    if m == 0 {
        return Err(Error::Invalid("Hecke inputs need m ≥ 1".into()));
    }
    let vars = Vars::new(&["q"]);
    let q = Poly::var(&vars, "q")?;
    let one = Poly::one(&vars);
    let kind = GroupKind::Braid(BraidSubgroup::Full { n: m });
    let mut out = vec![("ρ = 1".to_string(), Representation::one_dim(kind, &vars, vec![one.clone(); m - 1])?)];
    if m >= 2 {
        out.push(("ρ = -q".to_string(), Representation::one_dim(kind, &vars, vec![q.neg(); m - 1])?));
    }
    if m == 2 {
        let b = Matrix::from_rows(vec![vec![Poly::zero(&vars), q.clone()], vec![one.clone(), one.sub(&q)]])?;
        out.push(("2-dim Burau at q".to_string(), Representation::new(kind, &vars, 2, vec![b])?));
    }
    if m == 3 {
        let rho = Representation::one_dim_semidirect(3, &one, &q)?;
        let images =
            (1..3).map(|i| specialize(&phi_r(&BraidWord::generator(3, i))?, &rho)).collect::<Result<Vec<_>>>()?;
        out.push(("2-dim reduced Burau at q".to_string(), Representation::new(kind, &vars, 2, images)?));
    }
    Ok(out)
}

fn t_params(n: usize) -> (Vars, Vec<Poly>) {
    let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    let vars = Vars::new(&names);
    let ts = names.iter().map(|v| Poly::var(&vars, v).expect("declared")).collect();
    (vars, ts)
}

/// The Gassner family of `P_n` from the trivial one-dimensional input:
/// defining relations, `det A_ij = t_i t_j`, and agreement with Burau at
/// `s = 1` when all parameters coincide.
pub fn gassner_suite(n: usize, exec: Exec) -> Result<Report> {
    if n < 2 {
        return Err(Error::Invalid("the Gassner suite needs n ≥ 2".into()));
    }
    let (vars, ts) = t_params(n);
    let trivial = Representation::trivial(GroupKind::Braid(BraidSubgroup::Pure { n: n + 1 }), &vars, 1);
    let rep = gassner_rep(&trivial, &ts)?;
    let mut checks: Vec<Check> =
        rep.check_relations(exec)?.into_iter().map(|o| Check::from_difference(o.name, o.failure)).collect();
    for ((i, j), img) in pure_pairs(n).into_iter().zip(rep.images()) {
        let label = format!("det a{i}_{j} = t{i}*t{j}");
        checks.push(match img.det() {
            Ok(d) if d == ts[i - 1].mul(&ts[j - 1]) => Check::pass(label),
            Ok(d) => Check::fail(label, format!("det is {d}")),
            Err(e) => Check::fail(label, e.to_string()),
        });
    }
    let st = Vars::new(&["s", "t"]);
    let t = Poly::var(&st, "t")?;
    let trivial_st = Representation::trivial(GroupKind::Braid(BraidSubgroup::Pure { n: n + 1 }), &st, 1);
    let equal = vec![t; n];
    let burau = exec.map(pure_generators(n), |w| -> Result<Check> {
        let g = gassner(&trivial_st, &equal, &w)?;
        let b = burau_oracle(n, &w)?.substitute(&st, &[("s", Poly::one(&st))])?;
        Ok(Check::from_difference(format!("equal parameters on {w} give Burau at s = 1"), g.first_difference(&b)))
    });
    checks.extend(burau.into_iter().collect::<Result<Vec<_>>>()?);
    Ok(Report::new(format!("Gassner family, n = {n}"), checks))
}

/// Specializing the universal matrices at the one-dimensional input
/// `g_i ↦ t`, `σ_i ↦ s` reproduces the Burau matrices on each word.
pub fn burau_suite(words: Vec<BraidWord>, exec: Exec) -> Result<Report> {
    let checks = exec.map(words, |w| -> Result<Check> {
        let n = w.strands();
        let st = Vars::new(&["s", "t"]);
        let rho = Representation::one_dim_semidirect(n, &Poly::var(&st, "s")?, &Poly::var(&st, "t")?)?;
        let lhs = specialize(&phi(&w)?, &rho)?;
        Ok(Check::from_difference(format!("n = {n}: {}", show(&w)), lhs.first_difference(&burau_oracle(n, &w)?)))
    });
    Ok(Report::new("Burau specialization", checks.into_iter().collect::<Result<_>>()?))
}

/// `φ(b) = A·b` for the entry factorization of each word.
pub fn factorization_suite(words: Vec<BraidWord>, exec: Exec) -> Result<Report> {
    let checks = exec.map(words, |w| -> Result<Check> {
        let (a, b) = factor_entries(&w)?;
        let label = format!("n = {}: {}", w.strands(), show(&w));
        Ok(Check::from_difference(label, recombine(&a, &b).first_difference(&phi(&w)?)))
    });
    Ok(Report::new("entry factorization", checks.into_iter().collect::<Result<_>>()?))
}

/// The defining relations of an arbitrary representation.
pub fn representation_suite(rep: &Representation, exec: Exec) -> Result<Report> {
    let checks = rep.check_relations(exec)?.into_iter().map(|o| Check::from_difference(o.name, o.failure)).collect();
    Ok(Report::new(format!("relations of a {}-dimensional representation of {}", rep.dim(), rep.kind()), checks))
}

/// Whether every generator image is invertible over the Laurent ring, i.e.
/// has a unit determinant.
pub fn unit_determinants(rep: &Representation) -> Report {
    let checks = rep
        .generator_names()
        .into_iter()
        .zip(rep.images())
        .map(|(name, m): (String, &Matrix<Poly>)| {
            let label = format!("det of {name} is a unit");
            match m.det() {
                Ok(d) if d.is_unit() => Check::pass(label),
                Ok(d) => Check::fail(label, format!("det is {d}")),
                Err(e) => Check::fail(label, e.to_string()),
            }
        })
        .collect();
    Report::new("unit determinants", checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert!(braid_relation_suite(3, exec).unwrap().passed());
            assert!(reduced_relation_suite(3, exec).unwrap().passed());
            assert!(quadratic_suite(3, exec).unwrap().passed());
            assert!(gassner_suite(2, exec).unwrap().passed());
            assert!(entry_claim_suite(3, 2, exec).unwrap().passed());
        }
    }

    #[test]
    fn lawrence_report_separates_quotient() {
        let r = lawrence_relation_suite(3, 2, Exec::Sequential).unwrap();
        assert!(!r.passed());
        assert!(r.failures().all(|c| c.label.ends_with("(group ring)")));
        assert!(lawrence_relation_suite(3, 1, Exec::Sequential).unwrap().passed());
    }

    #[test]
    fn hecke_suite_on_characters() {
        let vars = Vars::new(&["q"]);
        let q = Poly::var(&vars, "q").unwrap();
        let kind = GroupKind::Braid(BraidSubgroup::Full { n: 2 });
        for m in 1..=3 {
            for (_, rho) in standard_hecke_inputs(m).unwrap() {
                assert!(hecke_suite(4, &rho, &q, Exec::Sequential).unwrap().passed());
            }
        }
        let bad = Representation::one_dim(kind, &vars, vec![q.clone()]).unwrap();
        assert!(!hecke_suite(3, &bad, &q, Exec::Sequential).unwrap().passed());
    }

    #[test]
    fn report_display() {
        let r = Report::new("demo", vec![Check::pass("a"), Check::fail("b", "entries differ at (0, 1)")]);
        assert_eq!(r.to_string(), "demo: FAIL (2 checks, 1 failed)\n  ok    a\n  FAIL  b: entries differ at (0, 1)\n");
    }
}
