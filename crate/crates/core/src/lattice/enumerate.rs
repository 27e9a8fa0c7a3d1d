//! Fincke-Pohst enumeration of lattice vectors of bounded norm.
//!
//! The quadratic-form decomposition q(x) = sum_i Q_ii (x_i + sum_{j>i} Q_ij x_j)^2
//! is computed exactly; the search runs on its floating image with a slack
//! margin and every leaf is confirmed with the integer Gram matrix, so the
//! output is exact.

use rayon::prelude::*;

use crate::exact::Rational;
use crate::lattice::intmat::IVec;

/// Exact Fincke-Pohst coefficients `Q` (diagonal and strict upper part).
pub fn pohst_coefficients(gram: &[IVec]) -> Vec<Vec<Rational>> {
    let n = gram.len();
    let mut q = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            q[i][j] = Rational::from_int(gram[i][j]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let t = &q[k][i] * &q[i][l];
                q[k][l] -= t;
            }
        }
    }
    for i in 0..n {
        for j in 0..i {
            q[i][j] = Rational::zero();
        }
    }
    q
}

struct Search<'a> {
    n: usize,
    gram: &'a [IVec],
    qd: Vec<f64>,
    qo: Vec<Vec<f64>>,
    bound: f64,
    slack: f64,
    min_norm: i64,
    max_norm: i64,
}

impl Search<'_> {
    fn exact_norm(&self, x: &[i64]) -> i64 {
        let mut s: i128 = 0;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            let mut row: i128 = 0;
            for j in 0..self.n {
                row += self.gram[i][j] as i128 * x[j] as i128;
            }
            s += row * x[i] as i128;
        }
        s as i64
    }

    fn range(&self, i: usize, x: &[i64], used: f64) -> (i64, i64, f64) {
        let mut c = 0.0;
        for j in i + 1..self.n {
            c -= self.qo[i][j] * x[j] as f64;
        }
        let rem = self.bound - used + self.slack;
        if rem < 0.0 {
            return (1, 0, c);
        }
        let r = (rem / self.qd[i]).sqrt();
        ((c - r - 1e-9).ceil() as i64, (c + r + 1e-9).floor() as i64, c)
    }

    fn descend(&self, i: usize, x: &mut Vec<i64>, used: f64, all_zero_above: bool, out: &mut Vec<IVec>) {
        let (mut lo, hi, c) = self.range(i, x, used);
        if all_zero_above {
            lo = lo.max(0);
        }
        for v in lo..=hi {
            if all_zero_above && i == 0 && v == 0 {
                continue;
            }
            x[i] = v;
            let d = v as f64 - c;
            let u = used + self.qd[i] * d * d;
            if u > self.bound + self.slack {
                continue;
            }
            if i == 0 {
                let nrm = self.exact_norm(x);
                if nrm >= self.min_norm && nrm <= self.max_norm {
                    out.push(x.clone());
                }
            } else {
                self.descend(i - 1, x, u, all_zero_above && v == 0, out);
            }
        }
        x[i] = 0;
    }
}

/// One representative per +- pair (last nonzero coordinate positive) of
/// every nonzero vector with `min_norm <= norm <= max_norm`, sorted by
/// norm then lexicographically.
pub fn canonical_vectors(gram: &[IVec], min_norm: i64, max_norm: i64) -> Vec<IVec> {
    let n = gram.len();
    if n == 0 || max_norm <= 0 {
        return Vec::new();
    }
    let q = pohst_coefficients(gram);
    let s = Search {
        n,
        gram,
        qd: (0..n).map(|i| q[i][i].to_f64()).collect(),
        qo: q.iter().map(|r| r.iter().map(Rational::to_f64).collect()).collect(),
        bound: max_norm as f64,
        slack: 1e-6 * (1.0 + max_norm as f64),
        min_norm: min_norm.max(1),
        max_norm,
    };
    let top = n - 1;
    let x0 = vec![0i64; n];
    let (lo, hi, _) = s.range(top, &x0, 0.0);
    let parts: Vec<Vec<IVec>> = (lo.max(0)..=hi)
        .into_par_iter()
        .map(|v| {
            let mut x = x0.clone();
            let mut out = Vec::new();
            x[top] = v;
            let c = 0.0;
            let d = v as f64 - c;
            let used = s.qd[top] * d * d;
            if top == 0 {
                if v != 0 {
                    let nrm = s.exact_norm(&x);
                    if nrm >= s.min_norm && nrm <= s.max_norm {
                        out.push(x.clone());
                    }
                }
            } else if used <= s.bound + s.slack {
                s.descend(top - 1, &mut x, used, v == 0, &mut out);
            }
            out
        })
        .collect();
    let mut all: Vec<(i64, IVec)> = parts.into_iter().flatten().map(|v| (s.exact_norm(&v), v)).collect();
    all.sort();
    all.into_iter().map(|(_, v)| v).collect()
}

/// All vectors of norm exactly `norm`, each followed by its negative.
pub fn short_vectors(gram: &[IVec], norm: i64) -> Vec<IVec> {
    with_negatives(canonical_vectors(gram, norm, norm))
}

/// All nonzero vectors of norm at most `max_norm`, +- pairs adjacent.
pub fn vectors_up_to(gram: &[IVec], max_norm: i64) -> Vec<IVec> {
    with_negatives(canonical_vectors(gram, 1, max_norm))
}

fn with_negatives(reps: Vec<IVec>) -> Vec<IVec> {
    let mut out = Vec::with_capacity(reps.len() * 2);
    for v in reps {
        let neg: IVec = v.iter().map(|x| -x).collect();
        out.push(v);
        out.push(neg);
    }
    out
}

pub fn norm_of(gram: &[IVec], x: &[i64]) -> i64 {
    inner(gram, x, x)
}

pub fn inner(gram: &[IVec], x: &[i64], y: &[i64]) -> i64 {
    let mut s: i128 = 0;
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            s += xi as i128 * gram[i][j] as i128 * yj as i128;
        }
    }
    s as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_roots() {
        let g = vec![vec![2, -1], vec![-1, 2]];
        let v = short_vectors(&g, 2);
        assert_eq!(v.len(), 6);
        for pair in v.chunks(2) {
            assert_eq!(pair[0].iter().map(|x| -x).collect::<Vec<_>>(), pair[1]);
        }
    }

    #[test]
    fn z1_counts() {
        let g = vec![vec![1]];
        assert_eq!(short_vectors(&g, 4), vec![vec![2], vec![-2]]);
        assert!(short_vectors(&g, 3).is_empty());
    }

    #[test]
    fn pohst_reconstructs_form() {
        let g = vec![vec![4, 1, 0], vec![1, 3, -1], vec![0, -1, 2]];
        let q = pohst_coefficients(&g);
        let x = [2i64, -1, 3];
        let mut tot = Rational::zero();
        for i in 0..3 {
            let mut y = Rational::from_int(x[i]);
            for j in i + 1..3 {
                y += &q[i][j] * &Rational::from_int(x[j]);
            }
            tot += &q[i][i] * &y * &y;
        }
        assert_eq!(tot, Rational::from_int(norm_of(&g, &x)));
    }
}
