//! Integral lattices given by Gram matrices, root systems, sublattices,
//! ternary codes and the Niemeier/Leech construction.

pub mod codes;
pub mod enumerate;
pub mod intmat;
pub mod isometry;
pub mod niemeier;
pub mod roots;
pub mod sublattice;

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Mat, Rational};
pub use enumerate::{inner, norm_of, short_vectors, vectors_up_to};
pub use intmat::IVec;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralLattice {
    pub name: String,
    pub gram: Vec<IVec>,
}

impl IntegralLattice {
    /// Validates symmetry and positive definiteness (leading minors).
    pub fn new(name: impl Into<String>, gram: Vec<IVec>) -> Result<Self> {
        let name = name.into();
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid(format!("{name}: Gram matrix is not square")));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Invalid(format!("{name}: Gram matrix is not symmetric at ({i},{j})")));
                }
            }
        }
        if !leading_minors_positive(&gram) {
            return Err(Error::NotPositiveDefinite(name));
        }
        Ok(IntegralLattice { name, gram })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn det(&self) -> Rational {
        intmat::rational_det(&self.gram)
    }

    pub fn det_i64(&self) -> i64 {
        self.det().to_i64().expect("integral Gram has integral determinant")
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[i][i] % 2 == 0)
    }

    pub fn is_unimodular(&self) -> bool {
        self.det_i64().abs() == 1
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        inner(&self.gram, x, y)
    }

    pub fn norm(&self, x: &[i64]) -> i64 {
        norm_of(&self.gram, x)
    }

    pub fn short_vectors(&self, norm: i64) -> Vec<IVec> {
        short_vectors(&self.gram, norm)
    }

    pub fn min_norm(&self) -> i64 {
        let mut bound = 1;
        loop {
            if let Some(v) = enumerate::canonical_vectors(&self.gram, 1, bound).first() {
                return self.norm(v);
            }
            bound *= 2;
        }
    }

    /// Scales the form by an integer factor.
    pub fn scaled(&self, k: i64) -> Self {
        IntegralLattice { name: format!("sqrt{k}{}", self.name), gram: self.gram.iter().map(|r| r.iter().map(|x| x * k).collect()).collect() }
    }

    /// Sublattice spanned by the given coordinate rows, as its own lattice.
    pub fn sublattice(&self, name: impl Into<String>, rows: &[IVec]) -> Result<Self> {
        let basis = intmat::hnf(rows);
        IntegralLattice::new(name, intmat::gram_of(&basis, &self.gram))
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &IntegralLattice) -> Self {
        let (a, b) = (self.rank(), other.rank());
        let gram = (0..a + b)
            .map(|i| {
                (0..a + b)
                    .map(|j| match (i < a, j < a) {
                        (true, true) => self.gram[i][j],
                        (false, false) => other.gram[i - a][j - a],
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        IntegralLattice { name: format!("{}+{}", self.name, other.name), gram }
    }

    /// LLL-conditioned copy plus the transform into the old coordinates.
    pub fn reduced(&self) -> (Self, Vec<IVec>) {
        let (u, g) = intmat::lll_gram(&self.gram);
        (IntegralLattice { name: self.name.clone(), gram: g }, u)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("name {}\nrank {}\ngram\n", self.name, self.rank());
        for row in &self.gram {
            let r: Vec<String> = row.iter().map(i64::to_string).collect();
            s.push_str(&r.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the text format written by `to_text`; `#` starts a comment.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut name = None;
        let mut rank = None;
        let mut rows: Vec<IVec> = Vec::new();
        let mut in_gram = false;
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: &str| Error::Parse(format!("line {}: {m}", ln + 1));
            if in_gram {
                let row: std::result::Result<IVec, _> = line.split_whitespace().map(str::parse).collect();
                rows.push(row.map_err(|_| err("non-integer Gram entry"))?);
                continue;
            }
            let (key, val) = line.split_once(char::is_whitespace).map_or((line, ""), |(k, v)| (k, v.trim()));
            match key {
                "name" => name = Some(val.to_string()),
                "rank" => rank = Some(val.parse::<usize>().map_err(|_| err("bad rank"))?),
                "gram" => in_gram = true,
                _ => return Err(err(&format!("unknown key {key:?}"))),
            }
        }
        let rank = rank.ok_or_else(|| Error::Parse("missing rank".into()))?;
        if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
            return Err(Error::Parse(format!("expected a {rank}x{rank} Gram matrix")));
        }
        IntegralLattice::new(name.unwrap_or_else(|| "unnamed".into()), rows)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_text(&std::fs::read_to_string(path)?)
    }
}

impl fmt::Debug for IntegralLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegralLattice({}, rank {})", self.name, self.rank())
    }
}

fn leading_minors_positive(gram: &[IVec]) -> bool {
    (1..=gram.len()).all(|k| {
        let m = Mat::from_fn(k, k, |i, j| Rational::from_int(gram[i][j]));
        m.det().signum() > 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_indefinite_and_asymmetric() {
        assert!(matches!(IntegralLattice::new("h", vec![vec![0, 1], vec![1, 0]]), Err(Error::NotPositiveDefinite(_))));
        assert!(IntegralLattice::new("x", vec![vec![2, 1], vec![0, 2]]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let l = IntegralLattice::new("A2", vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let back = IntegralLattice::from_text(&l.to_text()).unwrap();
        assert_eq!(back, l);
        assert!(IntegralLattice::from_text("rank 2\ngram\n1 0\n").is_err());
    }
}
