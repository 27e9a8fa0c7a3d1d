//! Glued A2 lattices: the E8 copy from the tetracode, the Niemeier lattice
//! with root system A2^12 from the length-12 Golay code, and the Leech
//! lattice obtained from it by an index-3 neighbour step.
//!
//! Vectors live in `(A2 (x) Q)^k` written in "thirds": the integer vector `u`
//! stands for `u / 3` in the simple-root basis of each A2 block.

use crate::error::{Error, Result};
use crate::lattice::codes::{self, LinearCode, Word};
use crate::lattice::{enumerate, intmat, sublattice, IVec, IntegralLattice};

/// Integer form on thirds coordinates; inner products are `x F y / 9`.
pub fn a2_blocks(k: usize) -> Vec<IVec> {
    let n = 2 * k;
    let mut f = vec![vec![0i64; n]; n];
    for b in 0..k {
        f[2 * b][2 * b] = 2;
        f[2 * b + 1][2 * b + 1] = 2;
        f[2 * b][2 * b + 1] = -1;
        f[2 * b + 1][2 * b] = -1;
    }
    f
}

/// A lattice spanned by rows in thirds coordinates of `(A2 (x) Q)^k`.
#[derive(Clone, Debug)]
pub struct GluedLattice {
    pub name: String,
    pub blocks: usize,
    /// Hermite-reduced basis rows.
    pub basis: Vec<IVec>,
}

impl GluedLattice {
    pub fn from_rows(name: impl Into<String>, blocks: usize, rows: &[IVec]) -> Self {
        GluedLattice { name: name.into(), blocks, basis: intmat::hnf(rows) }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `9 <x, y>` for thirds vectors.
    pub fn pair9(&self, x: &[i64], y: &[i64]) -> i64 {
        enumerate::inner(&a2_blocks(self.blocks), x, y)
    }

    pub fn gram(&self) -> Result<Vec<IVec>> {
        let g9 = intmat::gram_of(&self.basis, &a2_blocks(self.blocks));
        g9.iter()
            .map(|r| {
                r.iter()
                    .map(|&x| if x % 9 == 0 { Ok(x / 9) } else { Err(Error::Invalid(format!("{} is not integral", self.name))) })
                    .collect()
            })
            .collect()
    }

    pub fn lattice(&self) -> Result<IntegralLattice> {
        IntegralLattice::new(self.name.clone(), self.gram()?)
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(x.to_vec());
        intmat::hnf(&rows) == self.basis
    }

    pub fn contains_all(&self, rows: &[IVec]) -> bool {
        let mut all = self.basis.clone();
        all.extend(rows.iter().cloned());
        intmat::hnf(&all) == self.basis
    }
}

/// Thirds coordinates of the glue vector of a word: digit `t` in block `k`
/// contributes `t (a1 - a2) / 3`.
pub fn glue_vector(word: &[i8]) -> IVec {
    word.iter().flat_map(|&t| [t as i64, -(t as i64)]).collect()
}

/// `union over c in code of (glue(c) + A2^k)`.
pub fn glued(name: &str, code: &LinearCode) -> GluedLattice {
    let k = code.length;
    let mut rows: Vec<IVec> = (0..2 * k).map(|j| (0..2 * k).map(|i| if i == j { 3 } else { 0 }).collect()).collect();
    rows.extend(code.generators.iter().map(|g| glue_vector(g)));
    GluedLattice::from_rows(name, k, &rows)
}

/// The E8 copy glued from the shifted tetracode over `A2^4`.
pub fn e8_from_tetracode() -> GluedLattice {
    glued("E8", &codes::tetracode_shifted())
}

/// Rotation of order 3 on one A2 block: `a1 -> a2 -> -(a1 + a2)`.
pub fn rotate(a: i64, b: i64, power: i64) -> (i64, i64) {
    match power.rem_euclid(3) {
        0 => (a, b),
        1 => (-b, a - b),
        _ => (b - a, -a),
    }
}

/// Blockwise isometry `h(x) = (+) rotation^{x_k}` for a word `x`.
pub fn codeword_isometry(word: &[i8], v: &[i64]) -> IVec {
    let mut out = v.to_vec();
    for (k, &t) in word.iter().enumerate() {
        let (a, b) = rotate(v[2 * k], v[2 * k + 1], t as i64);
        out[2 * k] = a;
        out[2 * k + 1] = b;
    }
    out
}

/// Signs of the twelve `delta` blocks of the neighbour vector.
pub const DELTA_SIGNS: [i64; 12] = [1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1];

/// `delta_hat` in thirds: `delta = a1 + a2` in each block with the signs above.
pub fn delta_hat() -> IVec {
    DELTA_SIGNS.iter().flat_map(|&s| [3 * s, 3 * s]).collect()
}

/// `(-a1, 0, ..., 0) + delta_hat / 3`.
///
/// With `delta` the highest root, `a1 + delta/3` has norm 26/9 and the
/// resulting vector would not even be integral; `-a1` pairs to `-1` with
/// `delta` and gives norm 4.
pub fn neighbour_vector() -> IVec {
    let mut v: IVec = DELTA_SIGNS.iter().flat_map(|&s| [s, s]).collect();
    v[0] -= 3;
    v
}

/// Word `x` with the signs of `DELTA_SIGNS` applied.
///
/// For `y` in the glue class of `c`, `<h(x) y - y, delta_hat>` is
/// `sum_k eps_k c_k x_k` modulo 3, so `h(x)` keeps the index-3 sublattice
/// exactly when the twisted word is orthogonal to the code, i.e. lies in it.
pub fn delta_twist(word: &[i8]) -> Word {
    word.iter().zip(DELTA_SIGNS).map(|(&x, s)| codes::f3(x as i64 * s)).collect()
}

pub fn preserves_niemeier_zero(golay: &LinearCode, word: &[i8]) -> bool {
    golay.contains(&delta_twist(word))
}

#[derive(Clone, Debug)]
pub struct LeechConstruction {
    pub golay: LinearCode,
    pub niemeier: GluedLattice,
    pub niemeier_zero: GluedLattice,
    pub neighbour: IVec,
    pub leech: GluedLattice,
}

/// Sublattice of `lat` of vectors whose pairing with `w` is divisible by `m`.
pub fn congruence(lat: &GluedLattice, name: &str, w: &[i64], m: i64) -> GluedLattice {
    let pair: IVec = lat
        .basis
        .iter()
        .map(|b| {
            let p9 = lat.pair9(b, w);
            assert_eq!(p9 % 9, 0, "pairing is not integral");
            p9 / 9
        })
        .collect();
    let coeffs = sublattice::congruence_sublattice(lat.rank(), &[pair], m);
    let rows = intmat::mat_mul_int(&coeffs, &lat.basis);
    GluedLattice::from_rows(name, lat.blocks, &rows)
}

pub fn leech_from_niemeier() -> LeechConstruction {
    let golay = codes::golay12();
    let niemeier = glued("N(A2^12)", &golay);
    let niemeier_zero = congruence(&niemeier, "N0", &delta_hat(), 3);
    let neighbour = neighbour_vector();
    let mut rows = niemeier_zero.basis.clone();
    rows.push(neighbour.clone());
    let leech = GluedLattice::from_rows("Leech", 12, &rows);
    LeechConstruction { golay, niemeier, niemeier_zero, neighbour, leech }
}

/// `R~ = span{(0, w, w) : w in E8}` inside the Niemeier coordinates, using
/// blocks 5..8 and 9..12.
pub fn diagonal_e8_in_niemeier() -> GluedLattice {
    let e8 = e8_from_tetracode();
    let rows: Vec<IVec> = e8
        .basis
        .iter()
        .map(|w| {
            let mut v = vec![0i64; 8];
            v.extend(w.iter().copied());
            v.extend(w.iter().copied());
            v
        })
        .collect();
    GluedLattice::from_rows("R~", 12, &rows)
}

/// The two distinguished Golay words.
pub fn d1() -> Word {
    vec![0, -1, -1, -1, 0, 0, 0, 0, 0, 1, 1, 1]
}

pub fn d2() -> Word {
    vec![1, 1, 0, -1, 0, 0, 0, 0, 1, 1, -1, 0]
}

pub fn image(lat: &GluedLattice, name: &str, word: &[i8]) -> GluedLattice {
    let rows: Vec<IVec> = lat.basis.iter().map(|b| codeword_isometry(word, b)).collect();
    GluedLattice::from_rows(name, lat.blocks, &rows)
}

pub fn sum(name: &str, parts: &[&GluedLattice]) -> GluedLattice {
    let rows: Vec<IVec> = parts.iter().flat_map(|p| p.basis.iter().cloned()).collect();
    GluedLattice::from_rows(name, parts[0].blocks, &rows)
}

/// Roots (norm 2 vectors) of a glued lattice, counted exactly.
pub fn root_count(lat: &GluedLattice) -> Result<usize> {
    Ok(enumerate::short_vectors(&lat.gram()?, 2).len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_has_order_three() {
        for (a, b) in [(1, 0), (0, 1), (2, -1), (1, -1)] {
            assert_eq!(rotate(a, b, 3), (a, b));
            assert_eq!(rotate(rotate(a, b, 1).0, rotate(a, b, 1).1, 2), (a, b));
        }
    }

    #[test]
    fn neighbour_vector_norm() {
        let v = neighbour_vector();
        assert_eq!(enumerate::inner(&a2_blocks(12), &v, &v), 36);
    }

    #[test]
    fn e8_copy_is_even_unimodular() {
        let e = e8_from_tetracode().lattice().unwrap();
        assert_eq!(e.det_i64(), 1);
        assert!(e.is_even());
        assert_eq!(e.short_vectors(2).len(), 240);
    }
}
