//! Linear ternary codes; symbols are stored as -1, 0, 1.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type Word = Vec<i8>;

pub fn f3(x: i64) -> i8 {
    match x.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

pub fn add(a: &[i8], b: &[i8]) -> Word {
    a.iter().zip(b).map(|(&x, &y)| f3(x as i64 + y as i64)).collect()
}

pub fn scale(a: &[i8], s: i64) -> Word {
    a.iter().map(|&x| f3(x as i64 * s)).collect()
}

pub fn weight(a: &[i8]) -> usize {
    a.iter().filter(|&&x| x != 0).count()
}

pub fn dot(a: &[i8], b: &[i8]) -> i8 {
    f3(a.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    pub length: usize,
    /// Row-reduced generator matrix.
    pub generators: Vec<Word>,
}

impl LinearCode {
    /// Code spanned by the given rows (reduced to an echelon basis).
    pub fn from_generators(length: usize, rows: &[Word]) -> Result<Self> {
        if rows.iter().any(|r| r.len() != length) {
            return Err(Error::Invalid(format!("generator rows must have length {length}")));
        }
        let mut m: Vec<Word> = rows.iter().map(|r| r.iter().map(|&x| f3(x as i64)).collect()).collect();
        let mut r = 0;
        for c in 0..length {
            let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, p);
            let inv = m[r][c] as i64; // 1 and -1 are self-inverse mod 3
            m[r] = scale(&m[r], inv);
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = -(m[i][c] as i64);
                    let row = scale(&m[r], f);
                    m[i] = add(&m[i], &row);
                }
            }
            r += 1;
        }
        m.truncate(r);
        Ok(LinearCode { length, generators: m })
    }

    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    /// All codewords, sorted.
    pub fn words(&self) -> Vec<Word> {
        let mut out = vec![vec![0i8; self.length]];
        for g in &self.generators {
            let mut next = Vec::with_capacity(out.len() * 3);
            for w in &out {
                next.push(w.clone());
                next.push(add(w, g));
                next.push(add(w, &scale(g, -1)));
            }
            out = next;
        }
        out.sort();
        out
    }

    pub fn min_weight(&self) -> usize {
        self.words().iter().map(|w| weight(w)).filter(|&w| w > 0).min().unwrap_or(0)
    }

    pub fn weight_distribution(&self) -> Vec<usize> {
        let mut d = vec![0; self.length + 1];
        for w in self.words() {
            d[weight(&w)] += 1;
        }
        d
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.generators.iter().all(|a| self.generators.iter().all(|b| dot(a, b) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.length && self.is_self_orthogonal()
    }

    pub fn contains(&self, w: &[i8]) -> bool {
        if w.len() != self.length {
            return false;
        }
        let mut rows = self.generators.clone();
        rows.push(w.to_vec());
        LinearCode::from_generators(self.length, &rows).map(|c| c.dimension() == self.dimension()).unwrap_or(false)
    }

    pub fn word_set(&self) -> BTreeSet<Word> {
        self.words().into_iter().collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("length {}\n", self.length);
        for g in &self.generators {
            let r: Vec<String> = g.iter().map(|x| x.to_string()).collect();
            s.push_str(&r.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut length = None;
        let mut rows = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(v) = line.strip_prefix("length") {
                length = Some(v.trim().parse::<usize>().map_err(|_| Error::Parse(format!("line {}: bad length", ln + 1)))?);
                continue;
            }
            let row: std::result::Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| Error::Parse(format!("line {}: non-integer symbol", ln + 1)))?;
            rows.push(row.into_iter().map(f3).collect::<Word>());
        }
        let length = length.ok_or_else(|| Error::Parse("missing length".into()))?;
        LinearCode::from_generators(length, &rows)
    }
}

/// The tetracode from generator rows (1,1,1,0) and (1,-1,0,1).
pub fn tetracode() -> LinearCode {
    LinearCode::from_generators(4, &[vec![1, 1, 1, 0], vec![1, -1, 0, 1]]).expect("valid generators")
}

/// Tetracode with coordinates cyclically moved one place to the right,
/// `(x1, x2, x3, x4) -> (x4, x1, x2, x3)`. This is the copy that makes the
/// length-12 construction below contain the two distinguished words used
/// for the Leech isometries.
pub fn tetracode_shifted() -> LinearCode {
    let rows: Vec<Word> = tetracode().generators.iter().map(|g| vec![g[3], g[0], g[1], g[2]]).collect();
    LinearCode::from_generators(4, &rows).expect("valid generators")
}

/// Length-12 ternary Golay code built from a length-4 code `c4`:
/// words `(c0, -cp, cm)` with `c0 + cp + cm = -(sum c0) (1,1,1,1)` and
/// `cp - cm` in `c4`.
pub fn golay12_from(c4: &LinearCode) -> LinearCode {
    let mut words = Vec::new();
    let quad: Vec<Word> = (0..81)
        .map(|mut k| {
            (0..4)
                .map(|_| {
                    let d = f3(k % 3);
                    k /= 3;
                    d
                })
                .collect()
        })
        .collect();
    for c0 in &quad {
        let s = c0.iter().map(|&x| x as i64).sum::<i64>();
        let target: Word = (0..4).map(|i| f3(-s - c0[i] as i64)).collect();
        for t in c4.words() {
            // cp + cm = target, cp - cm = t  =>  cp = -(target + t), cm = target - cp
            let cp: Word = (0..4).map(|i| f3(-(target[i] as i64 + t[i] as i64))).collect();
            let cm: Word = (0..4).map(|i| f3(target[i] as i64 - cp[i] as i64)).collect();
            let mut w = c0.clone();
            w.extend(cp.iter().map(|&x| f3(-(x as i64))));
            w.extend(cm);
            words.push(w);
        }
    }
    LinearCode::from_generators(12, &words).expect("valid words")
}

pub fn golay12() -> LinearCode {
    golay12_from(&tetracode_shifted())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetracode_basics() {
        let t = tetracode();
        assert_eq!(t.words().len(), 9);
        assert_eq!(t.min_weight(), 3);
        assert!(t.is_self_dual());
        assert!(!t.contains(&[1, 0, 0, 0]));
    }

    #[test]
    fn text_round_trip() {
        let t = tetracode();
        assert_eq!(LinearCode::from_text(&t.to_text()).unwrap(), t);
    }
}
