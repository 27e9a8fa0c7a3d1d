//! The weight-two algebra of the 3A-algebra: the printed table and its
//! realization as the product closure of an Ising orbit in sqrt2 E8.

use std::sync::Arc;

use super::{closure, comb, isomorphism_by_generators, unit, FDAlgebra, Vector};
use crate::algebra::commutant::swap_star;
use crate::error::{Error, Result};
use crate::exact::{cyc_make, CycNum, Mat};
use crate::lattice::roots::{self, RootKind};
use crate::lattice::{sublattice, IVec};
use crate::w2::{Character, W2Element, W2Space};

/// Basis `w1` (c = 4/5), `w2` (c = 6/7), `X+`, `X-`.
pub fn table() -> FDAlgebra {
    let c = CycNum::frac;
    let mut a = FDAlgebra::from_table(
        "U3A",
        &["w1", "w2", "X+", "X-"],
        &[
            (0, 0, vec![(0, c(2, 1))]),
            (0, 1, vec![]),
            (0, 2, vec![(2, c(2, 3))]),
            (0, 3, vec![(3, c(2, 3))]),
            (1, 1, vec![(1, c(2, 1))]),
            (1, 2, vec![(2, c(4, 3))]),
            (1, 3, vec![(3, c(4, 3))]),
            (2, 2, vec![(3, c(20, 1))]),
            (2, 3, vec![(0, c(135, 1)), (1, c(252, 1))]),
            (3, 3, vec![(2, c(20, 1))]),
        ],
        &[(0, 0, c(2, 5)), (1, 1, c(3, 7)), (2, 3, c(81, 1))],
    )
    .expect("valid table");
    a.star = swap_star(4, 2, 3);
    a
}

fn zeta3(k: i64) -> CycNum {
    cyc_make(3, k).expect("cube roots live in Q(zeta_12)")
}

/// The three Ising vectors `e^i`, `i = 0, 1, 2`, of the table algebra.
pub fn ising(i: i64) -> Vector {
    let c = CycNum::frac;
    vec![c(5, 32), c(7, 16), &c(1, 32) * &zeta3(i), &c(1, 32) * &zeta3(-i)]
}

/// The three `c = 4/5` vectors `x^i` of the table algebra.
pub fn x_vector(i: i64) -> Vector {
    let c = CycNum::frac;
    vec![c(1, 16), c(7, 8), &c(-1, 48) * &zeta3(i), &c(-1, 48) * &zeta3(-i)]
}

/// E8 with E6 on its first six nodes and the orthogonal A2.
#[derive(Clone, Debug)]
pub struct E8Frame {
    pub space: Arc<W2Space>,
    pub e6_rows: Vec<IVec>,
    pub a2_rows: Vec<IVec>,
    /// Three mutually orthogonal A2's inside the E6.
    pub three_a2_rows: Vec<IVec>,
    pub e6_roots: Vec<IVec>,
    pub a2_roots: Vec<IVec>,
    /// The special Ising vector `tilde omega_{E8}`.
    pub ising: W2Element,
    /// `tilde omega_{A2}` (c = 4/5) and `tilde omega_{E6}` (c = 6/7).
    pub a2_vector: W2Element,
    pub e6_vector: W2Element,
}

impl E8Frame {
    pub fn new() -> Result<Self> {
        let space = W2Space::new(RootKind::E8)?;
        let e8 = roots::build_root_lattice(RootKind::E8, 1)?;
        let pad = |v: &IVec| -> IVec {
            let mut w = v.clone();
            w.resize(8, 0);
            w
        };
        let e6_rows: Vec<IVec> = (0..6).map(|i| (0..8).map(|k| (k == i) as i64).collect()).collect();
        let a2_rows = sublattice::annihilator(&e8.lattice, &e6_rows);
        let three_a2_rows = roots::node_sublattice(RootKind::E6, 3)?.basis.iter().map(pad).collect();
        let e6_roots: Vec<IVec> = space.vectors.iter().filter(|v| v[6] == 0 && v[7] == 0).cloned().collect();
        let a2_roots: Vec<IVec> = space.vectors.iter().filter(|v| e6_rows.iter().all(|r| e8.lattice.inner(v, r) == 0)).cloned().collect();
        if e6_roots.len() != 72 || a2_roots.len() != 6 {
            return Err(Error::Invalid("unexpected E6 + A2 root counts in E8".into()));
        }
        let ising = space.tilde_omega_full()?;
        let a2_vector = space.tilde_omega(&a2_roots, 3)?;
        let e6_vector = space.tilde_omega(&e6_roots, 12)?;
        Ok(E8Frame { space, e6_rows, a2_rows, three_a2_rows, e6_roots, a2_roots, ising, a2_vector, e6_vector })
    }

    /// Nontrivial order-3 character of E8 trivial on `A2 + E6`.
    pub fn rho(&self) -> Character {
        let rows: Vec<IVec> = self.e6_rows.iter().chain(&self.a2_rows).cloned().collect();
        Character::group_killing(8, &rows, 3).into_iter().find(|c| !c.is_trivial()).expect("E8 / (A2 + E6) has order 3")
    }

    /// Characters of E8 trivial on `A2^4`.
    pub fn a2_four_characters(&self) -> Vec<Character> {
        let rows: Vec<IVec> = self.three_a2_rows.iter().chain(&self.a2_rows).cloned().collect();
        Character::group_killing(8, &rows, 3)
    }
}

#[derive(Clone, Debug)]
pub struct OrbitU3A {
    pub frame: E8Frame,
    pub rho: Character,
    pub algebra: FDAlgebra,
    /// Columns: images of the table basis in the orbit algebra.
    pub isomorphism: Option<Mat<CycNum>>,
    /// The images of `w1`, `w2` are `tilde omega_{A2}` and `tilde omega_{E6}`.
    pub frame_matches: bool,
}

/// Product closure of `{e, rho e, rho^2 e}` for the special Ising vector.
pub fn from_orbit() -> Result<OrbitU3A> {
    let frame = E8Frame::new()?;
    let rho = frame.rho();
    let sp = &frame.space;
    let d = sp.dim();
    let gens: Vec<Vector> = (0..3).map(|k| rho.power(k).apply(sp, &frame.ising).to_dense(d)).collect();
    let basis = closure(sp, &gens, 8)?;
    if basis.len() != 4 {
        return Err(Error::Invalid(format!("orbit closure has dimension {}, expected 4", basis.len())));
    }
    let names: Vec<String> = (0..basis.len()).map(|k| if k < 3 { format!("e{k}") } else { format!("q{}", k - 3) }).collect();
    let algebra = FDAlgebra::spanned_by(sp, "U3A (orbit)", names, basis)?;
    let t = table();
    let gens_b: Vec<Vector> = (0..3).map(|k| unit(4, k)).collect();
    let mut isomorphism = None;
    for perm in [[0i64, 1, 2], [0, 2, 1]] {
        let gens_a: Vec<Vector> = perm.iter().map(|&i| ising(i)).collect();
        if let Some(phi) = isomorphism_by_generators(&t, &gens_a, &algebra, &gens_b) {
            isomorphism = Some(phi);
            break;
        }
    }
    let frame_matches = match &isomorphism {
        Some(phi) => {
            algebra.lift(&phi.col(0)).ok().as_ref() == Some(&frame.a2_vector) && algebra.lift(&phi.col(1)).ok().as_ref() == Some(&frame.e6_vector)
        }
        None => false,
    };
    Ok(OrbitU3A { frame, rho, algebra, isomorphism, frame_matches })
}

/// `<e^0, e^1>` in the table algebra.
pub fn ising_inner() -> CycNum {
    table().form(&ising(0), &ising(1))
}

/// `w1 + w2`, the characteristic frame of the table algebra.
pub fn frame_vector() -> Vector {
    comb(&[(CycNum::one(), &unit(4, 0)), (CycNum::one(), &unit(4, 1))])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_vectors() {
        let t = table();
        for i in 0..3 {
            let e = ising(i);
            assert!(t.is_virasoro(&e));
            assert_eq!(t.central_charge(&e), CycNum::frac(1, 2));
            let x = x_vector(i);
            assert!(t.is_virasoro(&x));
            assert_eq!(t.central_charge(&x), CycNum::frac(4, 5));
        }
        assert_eq!(ising_inner(), CycNum::frac(13, 1024));
    }
}
