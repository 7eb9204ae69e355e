//! The Long-Moody construction on pure braid groups: the `n`-parameter
//! Gassner family.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::long_moody::{lm_subgroup, long_moody, rescale_each, restrict_from_bn1};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::rep::{GroupKind, Representation};
use crate::semidirect::free_generator_words;
use crate::subgroup::{pure_generator_word, pure_pairs, BraidSubgroup};

/// The generators `A_ij` of `P_n`, in lexicographic order of `(i, j)`.
pub fn pure_generators(n: usize) -> Vec<BraidWord> {
    pure_pairs(n).into_iter().map(|(i, j)| pure_generator_word(n, i, j)).collect()
}

/// `g_i = (σ_n..σ_{i+1}) σ_i^2 (σ_n..σ_{i+1})^-1 ∈ P_{n+1}`, `i = 1..n`.
pub fn free_in_pure_generators(n: usize) -> Vec<BraidWord> {
    free_generator_words(n)
}

/// Restricts `ρ: P_{n+1} → GL(V)` to `F_n ⋊ P_n` and scales `g_i` by `t_i`.
pub fn gassner_rescale(rho: &Representation, ts: &[Poly]) -> Result<Representation> {
    let n = match rho.kind() {
        GroupKind::Braid(BraidSubgroup::Pure { n }) if n >= 2 => n - 1,
        other => {
            return Err(Error::GroupKind { expected: "a representation of P_{n+1}".into(), found: other.to_string() })
        }
    };
    if ts.len() != n {
        return Err(Error::SizeMismatch(format!("{} parameters for P_{}", ts.len(), n + 1)));
    }
    rescale_each(&restrict_from_bn1(rho)?, ts)
}

/// The Gassner-type image of a pure braid.
pub fn gassner(rho: &Representation, ts: &[Poly], b: &BraidWord) -> Result<Matrix<Poly>> {
    if !b.is_pure() {
        return Err(Error::NotPure);
    }
    lm_subgroup(&gassner_rescale(rho, ts)?, b)
}

/// The whole representation of `P_n` on `V^n`.
pub fn gassner_rep(rho: &Representation, ts: &[Poly]) -> Result<Representation> {
    long_moody(&gassner_rescale(rho, ts)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Exec;
    use crate::long_moody::burau_oracle;
    use crate::poly::Vars;

    fn params(n: usize) -> (Vars, Vec<Poly>) {
        let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
        let vars = Vars::new(&names);
        let ts = names.iter().map(|v| Poly::var(&vars, v).unwrap()).collect();
        (vars, ts)
    }

    fn trivial(n: usize, vars: &Vars) -> Representation {
        Representation::trivial(GroupKind::Braid(BraidSubgroup::Pure { n }), vars, 1)
    }

    #[test]
    fn generator_lists() {
        let shown: Vec<String> = free_in_pure_generators(2).iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["s2 s1 s1 s2^-1", "s2 s2"]);
        assert!(free_in_pure_generators(4).iter().all(|w| w.is_pure()));
        assert_eq!(pure_generators(3).len(), 3);
    }

    #[test]
    fn two_strand_matrix() {
        let (vars, ts) = params(2);
        let b = BraidWord::from_signed(2, &[1, 1]).unwrap();
        let m = gassner(&trivial(3, &vars), &ts, &b).unwrap();
        let expected = [["t2", "-t1*t2 + t2"], ["-t2 + 1", "t1*t2 - t2 + 1"]];
        for (r, row) in expected.iter().enumerate() {
            for (c, want) in row.iter().enumerate() {
                assert_eq!(m.get(r, c).to_string(), *want);
            }
        }
        assert_eq!(m.det().unwrap().to_string(), "t1*t2");
    }

    #[test]
    fn rescaled_input_is_well_defined() {
        let (vars, ts) = params(3);
        let r = gassner_rescale(&trivial(4, &vars), &ts).unwrap();
        r.verify(Exec::Sequential).unwrap();
        gassner_rep(&trivial(4, &vars), &ts).unwrap().verify(Exec::Sequential).unwrap();
    }

    #[test]
    fn equal_parameters_give_burau() {
        let vars = Vars::new(&["s", "t"]);
        let t = Poly::var(&vars, "t").unwrap();
        let b = BraidWord::from_signed(3, &[1, 2, 2, 1, -2, -2]).unwrap();
        let m = gassner(&trivial(4, &vars), &[t.clone(), t.clone(), t], &b).unwrap();
        let burau = burau_oracle(3, &b).unwrap().substitute(&vars, &[("s", Poly::one(&vars))]).unwrap();
        assert_eq!(m, burau);
    }

    #[test]
    fn purity_gate() {
        let (vars, ts) = params(2);
        let b = BraidWord::from_signed(2, &[1]).unwrap();
        assert_eq!(gassner(&trivial(3, &vars), &ts, &b), Err(Error::NotPure));
        assert!(gassner(&trivial(3, &vars), &ts[..1], &BraidWord::identity(2)).is_err());
    }
}
