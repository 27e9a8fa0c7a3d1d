//! SU(3) matrices over Q(zeta_12), the E8 (+) E8 triple and its copy inside
//! the Leech lattice.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{CycNum, Mat};
use crate::lattice::isometry::isometry_test;
use crate::lattice::niemeier::{self, GluedLattice};
use crate::lattice::roots::{self, RootKind};
use crate::lattice::{enumerate, IVec, IntegralLattice};

/// One exact comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Verification {
    pub fn new(name: &str, expected: impl ToString, computed: impl ToString) -> Self {
        let (e, c) = (expected.to_string(), computed.to_string());
        Verification { name: name.into(), pass: e == c, expected: e, computed: c }
    }

    pub fn flag(name: &str, ok: bool) -> Self {
        Verification::new(name, true, ok)
    }
}

pub fn all_pass(v: &[Verification]) -> bool {
    v.iter().all(|c| c.pass)
}

pub type SmallMatrix = Mat<CycNum>;

fn zeta(k: i64) -> CycNum {
    CycNum::zeta12(4 * k)
}

pub fn show(m: &SmallMatrix) -> String {
    let rows: Vec<String> = m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")).collect();
    format!("[[{}]]", rows.join("], ["))
}

/// Cyclic permutation matrix.
pub fn tau() -> SmallMatrix {
    Mat::from_fn(3, 3, |i, j| if j == (i + 1) % 3 { CycNum::one() } else { CycNum::zero() })
}

/// `1/sqrt3 [[z, z^2, 1], [z^2, z, 1], [1, 1, 1]]` with `z` a primitive cube root of unity.
pub fn s() -> SmallMatrix {
    let k = CycNum::sqrt3().inv();
    let e = [[1, 2, 0], [2, 1, 0], [0, 0, 0]];
    Mat::from_fn(3, 3, |i, j| &zeta(e[i][j]) * &k)
}

pub fn r() -> SmallMatrix {
    Mat::from_fn(3, 3, |i, j| match (i == j, i) {
        (true, 0) => zeta(1),
        (true, 1) => zeta(2),
        (true, _) => CycNum::one(),
        _ => CycNum::zero(),
    })
}

pub fn conj_transpose(m: &SmallMatrix) -> SmallMatrix {
    m.transpose().map(|x| x.conj())
}

/// `X -> (X^T)^{-1}`.
pub fn theta(m: &SmallMatrix) -> SmallMatrix {
    m.transpose().inverse().expect("invertible")
}

pub fn su3_checks() -> Vec<Verification> {
    let (t, s, r) = (tau(), s(), r());
    let id = Mat::identity(3);
    let s_inv = s.inverse().expect("s is invertible");
    vec![
        Verification::new("s^-1 tau s = r", show(&r), show(&s_inv.mul(&t).mul(&s))),
        Verification::new("tau^3", show(&id), show(&t.pow(3))),
        Verification::new("s^T = s", show(&s), show(&s.transpose())),
        Verification::new("s^4", show(&id), show(&s.pow(4))),
        Verification::new("(s^T)^-1 = s^3", show(&s.pow(3)), show(&s.transpose().inverse().expect("s^T is invertible"))),
        Verification::new("s unitary", show(&id), show(&s.mul(&conj_transpose(&s)))),
        Verification::new("tau unitary", show(&id), show(&t.mul(&conj_transpose(&t)))),
        Verification::new("det tau", "1", t.det()),
        Verification::new("det s", -CycNum::i(), s.det()),
        Verification::new("det(zeta_12 s)", "1", s.scale(&CycNum::zeta12(1)).det()),
    ]
}

pub fn theta_checks() -> Vec<Verification> {
    let (t, s, r) = (tau(), s(), r());
    vec![
        Verification::new("theta(s) = s^3", show(&s.pow(3)), show(&theta(&s))),
        Verification::new("theta(tau) = tau", show(&t), show(&theta(&t))),
        Verification::new("theta(r) = conj(r)", show(&r.map(|x| x.conj())), show(&theta(&r))),
        Verification::new("theta^2(s) = s", show(&s), show(&theta(&theta(&s)))),
        Verification::new("theta s theta s^-1 = s^2", show(&s.pow(2)), show(&theta(&s).mul(&s.inverse().expect("invertible")))),
    ]
}

fn e8() -> GluedLattice {
    niemeier::e8_from_tetracode()
}

fn sqrt2_e8() -> Result<IntegralLattice> {
    Ok(roots::build_root_lattice(RootKind::E8, 2)?.lattice)
}

/// `h1 = id + rot + rot + rot`, `h2 = rot + rot + rot^-1 + id` on the four A2 blocks of E8.
pub fn h1() -> Vec<i8> {
    niemeier::d1()[8..].to_vec()
}

pub fn h2() -> Vec<i8> {
    niemeier::d2()[8..].to_vec()
}

/// `{(x, h x) : x in E8}` in E8 (+) E8.
pub fn graph(name: &str, word: &[i8]) -> GluedLattice {
    let rows: Vec<IVec> = e8()
        .basis
        .iter()
        .map(|w| {
            let mut a = w.clone();
            a.extend(niemeier::codeword_isometry(word, w));
            a
        })
        .collect();
    GluedLattice::from_rows(name, 8, &rows)
}

#[derive(Clone, Debug)]
pub struct E8Triple {
    pub r: GluedLattice,
    pub r1: GluedLattice,
    pub r2: GluedLattice,
    pub sum: GluedLattice,
}

pub fn e8_perp_e8_triple() -> E8Triple {
    let r = graph("R", &[0, 0, 0, 0]);
    let r1 = graph("R1", &h1());
    let r2 = graph("R2", &h2());
    let sum = niemeier::sum("L", &[&r, &r1, &r2]);
    E8Triple { r, r1, r2, sum }
}

/// Vectors of E8 pairing into `3Z` with `(0, d, d, d)` and `(d, d, -d, 0)`, `d = a1 + a2`.
pub fn k_sublattice() -> GluedLattice {
    let d = vec![3i64, 3];
    let w1 = [vec![0, 0], d.clone(), d.clone(), d.clone()].concat();
    let w2 = [d.clone(), d.clone(), vec![-3, -3], vec![0, 0]].concat();
    let k1 = niemeier::congruence(&e8(), "K1", &w1, 3);
    niemeier::congruence(&k1, "K", &w2, 3)
}

fn order_and_stabilizes(word: &[i8]) -> (bool, bool) {
    let e = e8();
    let cube = e.basis.iter().all(|b| {
        let mut x = b.clone();
        for _ in 0..3 {
            x = niemeier::codeword_isometry(word, &x);
        }
        x == *b
    });
    let nontrivial = e.basis.iter().any(|b| niemeier::codeword_isometry(word, b) != *b);
    let rows: Vec<IVec> = e.basis.iter().map(|b| niemeier::codeword_isometry(word, b)).collect();
    (cube && nontrivial, e.contains_all(&rows))
}

pub fn triple_checks() -> Result<Vec<Verification>> {
    let t = e8_perp_e8_triple();
    let target = sqrt2_e8()?;
    let mut out = Vec::new();
    for x in [&t.r, &t.r1, &t.r2] {
        let l = x.lattice()?;
        out.push(Verification::flag(&format!("{} = sqrt2 E8", x.name), isometry_test(&l, &target).is_some()));
    }
    out.push(Verification::new("rank(R + R1 + R2)", 16, t.sum.rank()));
    let k = k_sublattice().lattice()?;
    let a24 = IntegralLattice::new("A2^4", niemeier::a2_blocks(4))?;
    out.push(Verification::new("det K", 81, k.det_i64()));
    out.push(Verification::flag("K = A2^4", isometry_test(&k, &a24).is_some()));
    for (name, w) in [("h1", h1()), ("h2", h2())] {
        let (order3, keeps) = order_and_stabilizes(&w);
        out.push(Verification::flag(&format!("{name} has order 3"), order3));
        out.push(Verification::flag(&format!("{name} preserves E8"), keeps));
    }
    Ok(out)
}

/// `R~ = {(0, x, x)}`, `R~1 = h1^(R~)`, `R~2 = h2^(R~)` inside the
/// index-3 sublattice of the Niemeier lattice, compared with `R + R1 + R2`.
pub fn leech_embedding_checks() -> Result<Vec<Verification>> {
    let c = niemeier::leech_from_niemeier();
    let rt = niemeier::diagonal_e8_in_niemeier();
    let rt1 = niemeier::image(&rt, "R~1", &niemeier::d1());
    let rt2 = niemeier::image(&rt, "R~2", &niemeier::d2());
    let target = sqrt2_e8()?;
    let mut out = Vec::new();
    for x in [&rt, &rt1, &rt2] {
        out.push(Verification::flag(&format!("{} in N0", x.name), c.niemeier_zero.contains_all(&x.basis)));
        out.push(Verification::flag(&format!("{} in Leech", x.name), c.leech.contains_all(&x.basis)));
        out.push(Verification::flag(&format!("{} = sqrt2 E8", x.name), isometry_test(&x.lattice()?, &target).is_some()));
    }
    out.push(Verification::flag("d1, d2 preserve N0", [niemeier::d1(), niemeier::d2()].iter().all(|w| niemeier::preserves_niemeier_zero(&c.golay, w))));
    let lt = niemeier::sum("L~", &[&rt, &rt1, &rt2]);
    let l = e8_perp_e8_triple().sum;
    out.push(Verification::new("rank L~ = rank L", l.rank(), lt.rank()));
    out.push(Verification::flag("L~ = L", isometry_test(&l.lattice()?, &lt.lattice()?).is_some()));
    let copy = |offset: usize| -> Vec<IVec> {
        e8().basis.iter().map(|w| {
            let mut v = vec![0i64; 24];
            v[offset..offset + 8].copy_from_slice(w);
            v
        }).collect()
    };
    let (e1, e2) = (copy(8), copy(16));
    let orth = e1.iter().all(|x| e2.iter().all(|y| c.niemeier.pair9(x, y) == 0));
    out.push(Verification::flag("(E1, E2) = 0", orth));
    let triple: Vec<IVec> = e1.iter().chain(&e2).map(|x| x.iter().map(|t| 3 * t).collect()).collect();
    out.push(Verification::flag("3 (E1 + E2) in Leech", c.leech.contains_all(&triple)));
    Ok(out)
}

/// Niemeier and Leech invariants; `enumerate` adds the 196560 count.
pub fn leech_chain_checks(enumerate_shell: bool) -> Result<Vec<Verification>> {
    let c = niemeier::leech_from_niemeier();
    let n = c.niemeier.lattice()?;
    let n0 = c.niemeier_zero.lattice()?;
    let l = c.leech.lattice()?;
    let mut out = vec![
        Verification::new("rank N", 24, n.rank()),
        Verification::new("det N", 1, n.det_i64()),
        Verification::flag("N even", n.is_even()),
        Verification::new("roots of N", 72, niemeier::root_count(&c.niemeier)?),
        Verification::new("det N0", 9, n0.det_i64()),
        Verification::new("[N : N0]", 3, (1..).find(|k| k * k * n.det_i64() >= n0.det_i64()).unwrap_or(0)),
        Verification::new("det Leech", 1, l.det_i64()),
        Verification::flag("Leech even", l.is_even()),
    ];
    let (red, _) = l.reduced();
    out.push(Verification::new("Leech roots", 0, enumerate::short_vectors(&red.gram, 2).len()));
    if enumerate_shell {
        out.push(Verification::new("Leech min norm", 4, red.min_norm()));
        out.push(Verification::new("Leech norm-4 vectors", 196560, enumerate::short_vectors(&red.gram, 4).len()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_identities() {
        for c in su3_checks().iter().chain(&theta_checks()) {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn r_is_diagonal_unitary() {
        let r = r();
        assert_eq!(r.mul(&conj_transpose(&r)), Mat::identity(3));
        assert_eq!(r.pow(3), Mat::identity(3));
    }
}
