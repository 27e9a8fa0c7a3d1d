//! Structural checks run on every constructed algebra: commutativity,
//! symmetric invariant form, Hermitian positive definiteness and sampled
//! Norton inequalities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{add, FDAlgebra, Vector};
use crate::exact::{CycNum, Mat, Rational};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PropertyReport {
    pub algebra: String,
    pub dim: usize,
    pub commutative: bool,
    pub form_symmetric: bool,
    pub invariant: bool,
    pub star_automorphism: bool,
    pub positive_definite: bool,
    pub norton_samples: usize,
    pub norton_ok: bool,
    pub failures: Vec<String>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn commutativity(a: &FDAlgebra) -> Option<String> {
    let n = a.dim();
    for i in 0..n {
        for j in i + 1..n {
            let mut x = a.mult[i][j].clone();
            let mut y = a.mult[j][i].clone();
            x.sort_by_key(|t| t.0);
            y.sort_by_key(|t| t.0);
            if x != y {
                return Some(format!("{} * {} != {} * {}", a.names[i], a.names[j], a.names[j], a.names[i]));
            }
        }
    }
    None
}

pub fn form_symmetry(a: &FDAlgebra) -> Option<String> {
    let n = a.dim();
    for i in 0..n {
        for j in i + 1..n {
            if a.gram[(i, j)] != a.gram[(j, i)] {
                return Some(format!("<{}, {}> is not symmetric", a.names[i], a.names[j]));
            }
        }
    }
    None
}

/// `<b_i b_j, b_k> = <b_j, b_i b_k>` for all basis triples.
pub fn invariance(a: &FDAlgebra) -> Option<String> {
    let n = a.dim();
    let gram_rows: Vec<Vec<(usize, CycNum)>> =
        (0..n).map(|l| (0..n).filter(|&k| !a.gram[(l, k)].is_zero()).map(|k| (k, a.gram[(l, k)].clone())).collect()).collect();
    for i in 0..n {
        // t[j][k] = <b_i b_j, b_k>
        let mut t = vec![vec![CycNum::zero(); n]; n];
        for j in 0..n {
            for (l, c) in &a.mult[i][j] {
                for (k, g) in &gram_rows[*l] {
                    t[j][*k] += c * g;
                }
            }
        }
        for j in 0..n {
            for k in j + 1..n {
                if t[j][k] != t[k][j] {
                    return Some(format!("<{0} {1}, {2}> != <{1}, {0} {2}>", a.names[i], a.names[j], a.names[k]));
                }
            }
        }
    }
    None
}

/// The star map is a conjugate-linear algebra automorphism and an involution.
pub fn star_automorphism(a: &FDAlgebra) -> Option<String> {
    let n = a.dim();
    let s: Vec<Vector> = (0..n).map(|i| a.star_apply(&a.basis(i))).collect();
    for i in 0..n {
        if a.star_apply(&s[i]) != a.basis(i) {
            return Some(format!("star is not an involution on {}", a.names[i]));
        }
        for j in i..n {
            if a.star_apply(&a.product(&a.basis(i), &a.basis(j))) != a.product(&s[i], &s[j]) {
                return Some(format!("star does not respect {} * {}", a.names[i], a.names[j]));
            }
        }
    }
    None
}

/// Hermitian matrix `H_ij = <star b_i, b_j>`.
pub fn hermitian_matrix(a: &FDAlgebra) -> Mat<CycNum> {
    let st = a.star.transpose();
    st.mul(&a.gram)
}

/// Checks that `H` is Hermitian with positive real pivots in symmetric
/// elimination.
pub fn positive_definite(a: &FDAlgebra) -> Option<String> {
    let mut h = hermitian_matrix(a);
    let n = h.rows;
    for i in 0..n {
        for j in i..n {
            if h[(j, i)] != h[(i, j)].conj() {
                return Some(format!("Hermitian form is not Hermitian at ({}, {})", a.names[i], a.names[j]));
            }
        }
    }
    for k in 0..n {
        let p = h[(k, k)].clone();
        if p.real_sign() != Some(1) {
            return Some(format!("pivot {} at {} is not positive", p, a.names[k]));
        }
        let pinv = p.inv();
        let col: Vec<CycNum> = (k + 1..n).map(|i| h[(i, k)].clone()).collect();
        for (di, f) in col.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let i = k + 1 + di;
            let f = f * &pinv;
            for j in k + 1..n {
                let t = &h[(k, j)];
                if !t.is_zero() {
                    let d = &f * t;
                    h[(i, j)] -= &d;
                }
            }
        }
    }
    None
}

fn sample_real(a: &FDAlgebra, rng: &mut ChaCha8Rng) -> Vector {
    let n = a.dim();
    let i = CycNum::i();
    let x: Vector = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                return CycNum::zero();
            }
            let re = Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            let im = Rational::new(rng.gen_range(-2..=2), rng.gen_range(1..=2));
            &CycNum::from_rational(re) + &i.scale(&im)
        })
        .collect();
    add(&x, &a.star_apply(&x))
}

/// `<aa, bb> >= <ab, ab> >= 0` on `samples` pseudo-random real pairs.
pub fn norton(a: &FDAlgebra, samples: usize, seed: u64) -> Option<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..samples {
        let x = sample_real(a, &mut rng);
        let y = sample_real(a, &mut rng);
        let lhs = a.form(&a.product(&x, &x), &a.product(&y, &y));
        let xy = a.product(&x, &y);
        let rhs = a.form(&xy, &xy);
        let ok = rhs.real_sign().is_some_and(|s| s >= 0) && (&lhs - &rhs).real_sign().is_some_and(|s| s >= 0);
        if !ok {
            return Some(format!("sample {t}: <aa,bb> = {lhs}, <ab,ab> = {rhs}"));
        }
    }
    None
}

pub fn run_all(a: &FDAlgebra, samples: usize) -> PropertyReport {
    let mut failures = Vec::new();
    let mut record = |r: Option<String>| -> bool {
        match r {
            None => true,
            Some(f) => {
                failures.push(f);
                false
            }
        }
    };
    let commutative = record(commutativity(a));
    let form_symmetric = record(form_symmetry(a));
    let invariant = record(invariance(a));
    let star_ok = record(star_automorphism(a));
    let positive_definite = record(positive_definite(a));
    let norton_ok = record(norton(a, samples, 0x5eed ^ a.dim() as u64));
    PropertyReport {
        algebra: a.name.clone(),
        dim: a.dim(),
        commutative,
        form_symmetric,
        invariant,
        star_automorphism: star_ok,
        positive_definite,
        norton_samples: samples,
        norton_ok,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(c: i64) -> FDAlgebra {
        // one idempotent-like generator with e e = 2e, <e,e> = c
        FDAlgebra::from_table("line", &["e"], &[(0, 0, vec![(0, CycNum::from_int(2))])], &[(0, 0, CycNum::from_int(c))]).unwrap()
    }

    #[test]
    fn one_dimensional() {
        assert!(run_all(&line(1), 20).all_pass());
        let bad = run_all(&line(-1), 20);
        assert!(!bad.positive_definite);
    }

    #[test]
    fn broken_invariance_is_caught() {
        let a = FDAlgebra::from_table(
            "skew",
            &["a", "b"],
            &[(0, 0, vec![(1, CycNum::one())]), (0, 1, vec![]), (1, 1, vec![])],
            &[(0, 0, CycNum::one()), (1, 1, CycNum::one())],
        )
        .unwrap();
        assert!(invariance(&a).is_some());
    }
}
