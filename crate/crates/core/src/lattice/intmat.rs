//! Integer row reduction: Hermite form, integer kernels, Smith invariants and
//! an exact LLL pass used to condition bases before enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{Mat, Rational};

pub type IVec = Vec<i64>;

fn to_big(rows: &[IVec]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn to_small(rows: Vec<Vec<BigInt>>) -> Vec<IVec> {
    rows.into_iter().map(|r| r.into_iter().map(|x| x.to_i64().expect("entry exceeds i64")).collect()).collect()
}

/// Row-style Hermite normal form of the Z-span of `rows`: upper echelon,
/// positive pivots, entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped.
pub fn hnf(rows: &[IVec]) -> Vec<IVec> {
    to_small(hnf_big(to_big(rows), None).0)
}

/// HNF over `BigInt`. When `limit` is set only the first `limit` columns
/// are pivoted; the returned count is the number of pivot rows.
fn hnf_big(mut m: Vec<Vec<BigInt>>, limit: Option<usize>) -> (Vec<Vec<BigInt>>, usize) {
    let ncols = m.first().map_or(0, Vec::len);
    let limit = limit.unwrap_or(ncols);
    let mut r = 0;
    let mut pivot_cols = Vec::new();
    for c in 0..limit {
        if r == m.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m.len() {
                if !m[i][c].is_zero() && best.map_or(true, |b| m[i][c].abs() < m[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(p) = best else { break };
            m.swap(r, p);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let qt = m[i][c].div_floor(&m[r][c]);
                let (head, tail) = m.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(head[r].iter()) {
                    *x -= &qt * y;
                }
                if !tail[0][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let qt = m[i][c].div_floor(&m[r][c]);
            if qt.is_zero() {
                continue;
            }
            let (head, tail) = m.split_at_mut(r);
            for (x, y) in head[i].iter_mut().zip(tail[0].iter()) {
                *x -= &qt * y;
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if limit == ncols {
        m.truncate(r);
    }
    (m, r)
}

/// Basis of `{x in Z^n : m x = 0}` for an integer matrix with `n` columns.
pub fn integer_kernel(m: &[IVec], n: usize) -> Vec<IVec> {
    let rows = m.len();
    // Augment the transpose with an identity; unimodular row operations that
    // clear the first block leave kernel vectors in the second.
    let aug: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigInt> = (0..rows).map(|i| BigInt::from(m[i][j])).collect();
            row.extend((0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let (red, r) = hnf_big(aug, Some(rows));
    let ker: Vec<Vec<BigInt>> = red[r..].iter().map(|row| row[rows..].to_vec()).collect();
    if ker.is_empty() {
        return Vec::new();
    }
    hnf(&to_small(ker))
}

/// Smith invariants (all diagonal entries, including 1s) of the row span.
pub fn smith_invariants(rows: &[IVec]) -> Vec<BigInt> {
    let mut m = to_big(rows);
    let nr = m.len();
    let nc = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !m[i][j].is_zero() && best.map_or(true, |(a, b)| m[i][j].abs() < m[a][b].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..nr {
            let qt = m[i][t].div_floor(&m[t][t]);
            if !qt.is_zero() {
                let (head, tail) = m.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(head[t].iter()) {
                    *x -= &qt * y;
                }
            }
            if !m[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..nc {
            let qt = m[t][j].div_floor(&m[t][t]);
            if !qt.is_zero() {
                for row in m.iter_mut() {
                    let y = row[t].clone();
                    row[j] -= &qt * y;
                }
            }
            if !m[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: fold any entry not divisible by the pivot back in.
        let p = m[t][t].clone();
        let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !(&m[i][j] % &p).is_zero()));
        if let Some(i) = bad {
            let (head, tail) = m.split_at_mut(i);
            for (x, y) in head[t].iter_mut().zip(tail[0].iter()) {
                *x += y;
            }
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}

/// LLL-reduces a basis given by its Gram matrix. Returns the unimodular
/// transform `u` (new basis row i = sum_j u[i][j] * old basis j) and the new
/// Gram matrix. Exact rational Gram-Schmidt, delta = 99/100.
pub fn lll_gram(gram: &[IVec]) -> (Vec<IVec>, Vec<IVec>) {
    let n = gram.len();
    let mut g: Vec<Vec<i128>> = gram.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect();
    let delta = Rational::new(99, 100);
    let half = Rational::new(1, 2);

    let gso = |g: &Vec<Vec<i128>>| -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let mut mu = vec![vec![Rational::zero(); n]; n];
        let mut bstar = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..i {
                let mut s = Rational::from_int(g[i][j] as i64);
                for k in 0..j {
                    s -= &mu[j][k] * &mu[i][k] * &bstar[k];
                }
                mu[i][j] = s / &bstar[j];
            }
            let mut s = Rational::from_int(g[i][i] as i64);
            for k in 0..i {
                s -= &mu[i][k] * &mu[i][k] * &bstar[k];
            }
            bstar[i] = s;
        }
        (mu, bstar)
    };

    // b_i -= q b_j, updating the Gram matrix and the transform
    let sub_row = |g: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, i: usize, j: usize, q: i128| {
        for k in 0..n {
            u[i][k] -= q * u[j][k];
        }
        let gii = g[i][i] - 2 * q * g[i][j] + q * q * g[j][j];
        for k in 0..n {
            if k != i {
                let v = g[i][k] - q * g[j][k];
                g[i][k] = v;
                g[k][i] = v;
            }
        }
        g[i][i] = gii;
    };

    let (mut mu, mut bstar) = gso(&g);
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            if mu[k][j].abs() > half {
                let q = (&mu[k][j] + &half).floor().to_i64().unwrap();
                sub_row(&mut g, &mut u, k, j, q as i128);
                let qr = Rational::from_int(q);
                for l in 0..j {
                    let t = &qr * &mu[j][l];
                    mu[k][l] -= t;
                }
                mu[k][j] -= qr;
            }
        }
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &bstar[k - 1];
        if bstar[k] >= rhs {
            k += 1;
        } else {
            g.swap(k, k - 1);
            for row in g.iter_mut() {
                row.swap(k, k - 1);
            }
            u.swap(k, k - 1);
            let (m2, b2) = gso(&g);
            mu = m2;
            bstar = b2;
            k = (k - 1).max(1);
        }
    }
    let conv = |m: Vec<Vec<i128>>| -> Vec<IVec> { m.into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect() };
    (conv(u), conv(g))
}

/// `rows * gram * rows^T` over the integers.
pub fn gram_of(rows: &[IVec], gram: &[IVec]) -> Vec<IVec> {
    let tmp: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| (0..gram.len()).map(|j| r.iter().zip(gram.iter()).map(|(&a, g)| a as i128 * g[j] as i128).sum()).collect())
        .collect();
    rows.iter()
        .map(|s| tmp.iter().map(|t| t.iter().zip(s.iter()).map(|(&a, &b)| a * b as i128).sum::<i128>() as i64).collect())
        .collect()
}

pub fn rational_det(gram: &[IVec]) -> Rational {
    Mat::from_fn(gram.len(), gram.len(), |i, j| Rational::from_int(gram[i][j])).det()
}

pub fn mat_mul_int(a: &[IVec], b: &[IVec]) -> Vec<IVec> {
    let n = b.first().map_or(0, Vec::len);
    a.iter().map(|r| (0..n).map(|j| r.iter().zip(b.iter()).map(|(&x, row)| x * row[j]).sum()).collect()).collect()
}
