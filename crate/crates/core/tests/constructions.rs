//! End-to-end constructions through the public API.

use lmbraid::exec::Exec;
use lmbraid::gassner::gassner_rep;
use lmbraid::io::{read_representation, write_representation};
use lmbraid::lawrence::{lawrence_step_rep, lawrence_tower};
use lmbraid::long_moody::{burau_oracle, lm_tower, long_moody, phi, rescale_rep, specialize};
use lmbraid::matrix::Matrix;
use lmbraid::poly::{Poly, Vars};
use lmbraid::rep::{GroupKind, Representation};
use lmbraid::subgroup::BraidSubgroup;
use lmbraid::{BraidWord, Error};

fn vars(names: &[&str]) -> Vars {
    Vars::new(names)
}

fn var(v: &Vars, name: &str) -> Poly {
    Poly::var(v, name).unwrap()
}

fn w(n: usize, s: &[i32]) -> BraidWord {
    BraidWord::from_signed(n, s).unwrap()
}

fn full(n: usize) -> GroupKind {
    GroupKind::Braid(BraidSubgroup::Full { n })
}

#[test]
fn burau_on_two_strands() {
    let v = vars(&["s", "t"]);
    let rho = Representation::one_dim_semidirect(2, &var(&v, "s"), &var(&v, "t")).unwrap();
    let m = specialize(&phi(&w(2, &[1])).unwrap(), &rho).unwrap();
    assert_eq!(m.to_string(), "[0, s*t]\n[s, -s*t + s]\n");
    assert!(specialize(&phi(&BraidWord::identity(2)).unwrap(), &rho).unwrap().is_identity());
}

#[test]
fn long_moody_of_rescaled_trivial_input_is_burau() {
    let v = vars(&["t"]);
    let t = var(&v, "t");
    let trivial = Representation::trivial(GroupKind::FreeSemidirect(BraidSubgroup::Full { n: 3 }), &v, 1);
    let rep = long_moody(&rescale_rep(&trivial, &t).unwrap()).unwrap();
    assert_eq!(rep.dim(), 3);
    rep.verify(Exec::Sequential).unwrap();
    for i in 1..3 {
        let oracle =
            burau_oracle(3, &BraidWord::generator(3, i)).unwrap().substitute(&v, &[("s", Poly::one(&v))]).unwrap();
        assert_eq!(rep.images()[i - 1], oracle);
    }
}

#[test]
fn gassner_file_round_trip() {
    let v = vars(&["t1", "t2"]);
    let trivial = Representation::trivial(GroupKind::Braid(BraidSubgroup::Pure { n: 3 }), &v, 1);
    let rep = gassner_rep(&trivial, &[var(&v, "t1"), var(&v, "t2")]).unwrap();
    assert_eq!(rep.dim(), 2);
    assert_eq!(rep.kind(), GroupKind::Braid(BraidSubgroup::Pure { n: 2 }));
    let text = write_representation(&rep);
    assert_eq!(read_representation(&text).unwrap(), rep);
}

#[test]
fn lawrence_tower_dimension_twelve() {
    let v = vars(&["q", "t"]);
    let rho = Representation::one_dim(full(2), &v, vec![var(&v, "t")]).unwrap();
    let tower = lawrence_tower(&rho, &var(&v, "q"), 3).unwrap();
    assert_eq!(tower.dim(), 12);
    assert_eq!(tower.kind(), full(3));
    tower.verify(Exec::Parallel).unwrap();
    let back = read_representation(&write_representation(&tower)).unwrap();
    assert_eq!(back, tower);
}

#[test]
fn lawrence_step_needs_a_mixed_group() {
    let v = vars(&["t"]);
    let rho = Representation::one_dim(full(3), &v, vec![var(&v, "t"); 2]).unwrap();
    assert!(matches!(lawrence_step_rep(&rho), Err(Error::GroupKind { .. })));
}

#[test]
fn tower_from_larger_braid_group() {
    let v = vars(&["t", "u"]);
    let base = Representation::one_dim(full(4), &v, vec![Poly::one(&v); 3]).unwrap();
    let rep = lm_tower(&base, &[var(&v, "t"), var(&v, "u")], 2).unwrap();
    assert_eq!(rep.dim(), 3 * 2);
    rep.verify(Exec::Sequential).unwrap();
}

#[test]
fn pure_representation_evaluates_arbitrary_pure_words() {
    let v = vars(&["t1", "t2", "t3"]);
    let trivial = Representation::trivial(GroupKind::Braid(BraidSubgroup::Pure { n: 4 }), &v, 1);
    let ts: Vec<Poly> = ["t1", "t2", "t3"].iter().map(|n| var(&v, n)).collect();
    let rep = gassner_rep(&trivial, &ts).unwrap();
    let b = w(3, &[1, 2, 2, -1, 2, 1, 1, -2]);
    let direct = rep.eval_braid(&b).unwrap();
    let mut split = Matrix::identity(3, &Poly::zero(&v));
    for part in [w(3, &[1, 2, 2, -1]), w(3, &[2, 1, 1, -2])] {
        split = split.mul(&rep.eval_braid(&part).unwrap()).unwrap();
    }
    assert_eq!(direct, split);
    assert!(matches!(rep.eval_braid(&w(3, &[1])), Err(Error::NotInSubgroup(_))));
}
