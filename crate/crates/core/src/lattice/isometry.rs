//! Backtracking isometry search between integral lattices.

use std::collections::HashMap;

use crate::lattice::{enumerate, intmat, IVec, IntegralLattice};

/// Searches for an isometry `a -> b`. On success returns the images of the
/// basis of `a` in the coordinates of `b` (one row per basis vector of `a`).
///
/// Both lattices are LLL-conditioned first; the images of the reduced basis
/// are chosen among short vectors of `b`, pruned by every inner product
/// with the images already fixed.
pub fn isometry_test(a: &IntegralLattice, b: &IntegralLattice) -> Option<Vec<IVec>> {
    if a.rank() != b.rank() || a.det() != b.det() {
        return None;
    }
    let n = a.rank();
    if n == 0 {
        return Some(Vec::new());
    }
    let (ar, ua) = a.reduced();
    let (br, ub) = b.reduced();
    let a_dual = |v: &IVec| -> IVec { (0..n).map(|k| (0..n).map(|j| ar.gram[k][j] * v[j]).sum()).collect() };
    let mut lists: Vec<Vec<(IVec, IVec)>> = Vec::with_capacity(n);
    let mut pools: HashMap<i64, (Vec<IVec>, Vec<(IVec, IVec, Profile)>)> = HashMap::new();
    for i in 0..n {
        let nn = ar.gram[i][i];
        let (a_vecs, b_cands) = pools.entry(nn).or_insert_with(|| {
            let a_vecs = enumerate::short_vectors(&ar.gram, nn);
            let b_vecs = enumerate::short_vectors(&br.gram, nn);
            let b_duals: Vec<IVec> = b_vecs.iter().map(|v| (0..n).map(|k| (0..n).map(|j| br.gram[k][j] * v[j]).sum()).collect()).collect();
            let cands = b_vecs
                .iter()
                .zip(&b_duals)
                .map(|(v, d)| (v.clone(), d.clone(), profile(d, &b_vecs)))
                .collect();
            (a_vecs, cands)
        });
        let basis_vec: IVec = (0..n).map(|k| (k == i) as i64).collect();
        let want = profile(&a_dual(&basis_vec), a_vecs);
        let list: Vec<(IVec, IVec)> = b_cands.iter().filter(|c| c.2 == want).map(|c| (c.0.clone(), c.1.clone())).collect();
        if list.is_empty() {
            return None;
        }
        lists.push(list);
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let lists: Vec<&Vec<(IVec, IVec)>> = lists.iter().collect();
    if !backtrack(&ar.gram, &lists, &mut chosen) {
        return None;
    }
    // Images of the reduced basis of `a`, in reduced coordinates of `b`.
    let img_red: Vec<IVec> = chosen.iter().enumerate().map(|(i, &k)| lists[i][k].0.clone()).collect();
    // Back to original coordinates of `b`: x_b = sum_j y_j ub[j].
    let img_b: Vec<IVec> = intmat::mat_mul_int(&img_red, &ub);
    // The reduced basis of `a` is ua * (old basis); invert ua over Z.
    let inv = int_inverse(&ua)?;
    let map = intmat::mat_mul_int(&inv, &img_b);
    debug_assert_eq!(intmat::gram_of(&map, &b.gram), a.gram);
    Some(map)
}

/// Histogram of inner products of a vector (given by its dual row) with a
/// set of lattice vectors; an isometry must preserve it.
type Profile = Vec<(i64, usize)>;

fn profile(dual: &[i64], vecs: &[IVec]) -> Profile {
    let mut h: std::collections::BTreeMap<i64, usize> = std::collections::BTreeMap::new();
    for v in vecs {
        *h.entry(dual.iter().zip(v).map(|(a, b)| a * b).sum()).or_default() += 1;
    }
    h.into_iter().collect()
}

fn backtrack(gram: &[IVec], lists: &[&Vec<(IVec, IVec)>], chosen: &mut Vec<usize>) -> bool {
    let i = chosen.len();
    if i == gram.len() {
        return true;
    }
    'cand: for (k, (v, _)) in lists[i].iter().enumerate() {
        for (j, &cj) in chosen.iter().enumerate() {
            let dual = &lists[j][cj].1;
            let ip: i64 = dual.iter().zip(v).map(|(a, b)| a * b).sum();
            if ip != gram[i][j] {
                continue 'cand;
            }
        }
        chosen.push(k);
        if backtrack(gram, lists, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Inverse of a unimodular integer matrix.
pub fn int_inverse(u: &[IVec]) -> Option<Vec<IVec>> {
    use crate::exact::{Mat, Rational};
    let n = u.len();
    let m = Mat::from_fn(n, n, |i, j| Rational::from_int(u[i][j]));
    let inv = m.inverse()?;
    (0..n).map(|i| (0..n).map(|j| inv[(i, j)].to_i64()).collect::<Option<IVec>>()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_in_two_bases() {
        let a = IntegralLattice::new("A2", vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let b = IntegralLattice::new("A2'", vec![vec![2, 1], vec![1, 2]]).unwrap();
        let m = isometry_test(&a, &b).unwrap();
        assert_eq!(intmat::gram_of(&m, &b.gram), a.gram);
        let z2 = IntegralLattice::new("Z2x3", vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert!(isometry_test(&a, &z2).is_none());
    }

    #[test]
    fn same_det_different_lattice() {
        let a = IntegralLattice::new("x", vec![vec![1, 0], vec![0, 4]]).unwrap();
        let b = IntegralLattice::new("y", vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert!(isometry_test(&a, &b).is_none());
    }
}
