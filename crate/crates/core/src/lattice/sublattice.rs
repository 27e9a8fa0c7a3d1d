//! Cosets of full-rank sublattices and orthogonal complements.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{Mat, Rational};
use crate::lattice::{enumerate, intmat, IVec, IntegralLattice};

/// Coset decomposition `ambient / sub` for a full-rank sublattice.
#[derive(Clone, Debug)]
pub struct Cosets {
    /// Sublattice basis rows in ambient coordinates.
    pub sub_basis: Vec<IVec>,
    /// Transposed inverse of the sublattice basis.
    inv: Mat<Rational>,
    /// Minimal-norm representatives; the zero coset comes first, the rest by
    /// (norm, lexicographic) order of the representative.
    pub reps: Vec<IVec>,
    keys: BTreeMap<Vec<Rational>, usize>,
    /// Smith invariants greater than one.
    pub invariants: Vec<i64>,
}

impl Cosets {
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    fn key(&self, x: &[i64]) -> Vec<Rational> {
        let xr: Vec<Rational> = x.iter().map(|&v| Rational::from_int(v)).collect();
        let t = self.inv.mul_vec(&xr);
        t.iter().map(Rational::fract_pos).collect()
    }

    /// Index of the coset containing `x`.
    pub fn coset_of(&self, x: &[i64]) -> usize {
        self.keys[&self.key(x)]
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.key(x).iter().all(Rational::is_zero)
    }
}

/// Cosets of the sublattice spanned by `sub_rows` inside `ambient`.
pub fn cosets(ambient: &IntegralLattice, sub_rows: &[IVec]) -> Result<Cosets> {
    let n = ambient.rank();
    let sub_basis = intmat::hnf(sub_rows);
    if sub_basis.len() != n {
        return Err(Error::Invalid(format!("sublattice has rank {} in rank {n}", sub_basis.len())));
    }
    let b = Mat::from_fn(n, n, |i, j| Rational::from_int(sub_basis[i][j]));
    let index = b.det().abs().to_i64().ok_or_else(|| Error::Invalid("index too large".into()))? as usize;
    let inv = b.inverse().expect("full-rank basis").transpose();
    let invariants: Vec<i64> = intmat::smith_invariants(&sub_basis).iter().map(|x| x.to_i64().unwrap()).filter(|&x| x > 1).collect();
    let mut c = Cosets { sub_basis, inv, reps: vec![vec![0; n]], keys: BTreeMap::new(), invariants };
    let zero_key = c.key(&vec![0; n]);
    c.keys.insert(zero_key, 0);
    let mut bound = 2;
    while c.reps.len() < index {
        let found = enumerate::vectors_up_to(&ambient.gram, bound);
        let mut cands: Vec<(i64, IVec)> = found.into_iter().map(|v| (ambient.norm(&v), v)).collect();
        cands.sort();
        for (_, v) in cands {
            let k = c.key(&v);
            if !c.keys.contains_key(&k) {
                c.keys.insert(k, c.reps.len());
                c.reps.push(v);
            }
        }
        bound *= 2;
    }
    Ok(c)
}

/// `{x in ambient : <x, s> = 0 for all s in sub}`, as basis rows.
pub fn annihilator(ambient: &IntegralLattice, sub_rows: &[IVec]) -> Vec<IVec> {
    let m = intmat::mat_mul_int(sub_rows, &ambient.gram);
    intmat::integer_kernel(&m, ambient.rank())
}

/// `{x in L : <x, w_k> = 0 mod modulus for all k}` where `pairings[k]` is the
/// vector of pairings of the basis of `L` with `w_k`. Returns basis rows.
pub fn congruence_sublattice(rank: usize, pairings: &[IVec], modulus: i64) -> Vec<IVec> {
    // Kernel of [P | m I] projected to the first block.
    let k = pairings.len();
    let m: Vec<IVec> = (0..k)
        .map(|r| {
            let mut row = pairings[r].clone();
            row.extend((0..k).map(|s| if s == r { modulus } else { 0 }));
            row
        })
        .collect();
    let ker = intmat::integer_kernel(&m, rank + k);
    let proj: Vec<IVec> = ker.iter().map(|v| v[..rank].to_vec()).collect();
    intmat::hnf(&proj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_mod_2z() {
        let z2 = IntegralLattice::new("Z2", vec![vec![1, 0], vec![0, 1]]).unwrap();
        let c = cosets(&z2, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(c.index(), 4);
        assert_eq!(c.reps[0], vec![0, 0]);
        assert_eq!(c.invariants, vec![2, 2]);
        assert!(c.contains(&[4, -2]));
        assert_eq!(c.coset_of(&[3, 0]), c.coset_of(&[1, 2]));
    }

    #[test]
    fn congruence_index() {
        let rows = congruence_sublattice(2, &[vec![1, 1]], 3);
        let det = Mat::from_fn(2, 2, |i, j| Rational::from_int(rows[i][j])).det();
        assert_eq!(det.abs(), Rational::from_int(3));
    }
}
