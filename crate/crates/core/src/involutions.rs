//! Miyamoto involutions as exact matrices: adjoint spectra of Virasoro
//! vectors, tau- and sigma-type involutions, orders, scans and group
//! closure.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Embedding, FDAlgebra, SpanSolver, Vector};
use crate::error::{Error, Result};
use crate::exact::{CycNum, Mat, Rational};
use crate::minimal_models;

#[derive(Clone, Debug, PartialEq)]
pub struct LinMap {
    pub space: String,
    pub matrix: Mat<CycNum>,
}

impl LinMap {
    pub fn identity(alg: &FDAlgebra) -> Self {
        LinMap { space: alg.name.clone(), matrix: Mat::identity(alg.dim()) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows
    }

    pub fn apply(&self, v: &[CycNum]) -> Vector {
        self.matrix.mul_vec(v)
    }

    /// `self o other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        LinMap { space: self.space.clone(), matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Mat::identity(self.dim())
    }

    pub fn inverse(&self) -> Option<LinMap> {
        Some(LinMap { space: self.space.clone(), matrix: self.matrix.inverse()? })
    }

    fn key(&self) -> Vec<CycNum> {
        self.matrix.to_rows().into_iter().flatten().collect()
    }
}

/// Eigenspace decomposition of `ad(v)` for a Virasoro vector `v`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub central_charge: Rational,
    pub m: u32,
    /// Nonzero eigenspaces, by eigenvalue.
    pub spaces: Vec<(Rational, Vec<Vector>)>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> Vec<Rational> {
        self.spaces.iter().map(|(h, _)| h.clone()).collect()
    }

    pub fn multiplicities(&self) -> Vec<(Rational, usize)> {
        self.spaces.iter().map(|(h, b)| (h.clone(), b.len())).collect()
    }

    pub fn multiplicity(&self, h: &Rational) -> usize {
        self.spaces.iter().find(|(x, _)| x == h).map_or(0, |(_, b)| b.len())
    }
}

/// Eigenspaces of `ad(v)` over the candidate list `{2}` together with the
/// conformal weights at the level matching the central charge of `v`.
pub fn ad_spectrum(alg: &FDAlgebra, v: &[CycNum]) -> Result<Spectrum> {
    if !alg.is_virasoro(v) {
        return Err(Error::Invalid(format!("{} is not a Virasoro vector of {}", alg.show(v), alg.name)));
    }
    let c = alg.central_charge(v);
    let c = c.as_rational().cloned().ok_or_else(|| Error::Invalid(format!("central charge {c} is not rational")))?;
    let m = minimal_models::series_index(&c).ok_or_else(|| Error::Invalid(format!("central charge {c} is not in the unitary series")))?;
    let mut cands = minimal_models::weights(m);
    if !cands.contains(&Rational::from_int(2)) {
        cands.push(Rational::from_int(2));
    }
    cands.sort();
    let ad = alg.ad(v);
    let mut spaces = Vec::new();
    let mut total = 0;
    for h in cands {
        let k = ad.shift(&CycNum::from_rational(h.clone())).kernel();
        if !k.is_empty() {
            total += k.len();
            spaces.push((h, k));
        }
    }
    if total != alg.dim() {
        return Err(Error::SpectrumIncomplete(format!(
            "ad({}) on {}: candidate eigenspaces cover {} of {} dimensions",
            alg.show(v),
            alg.name,
            total,
            alg.dim()
        )));
    }
    Ok(Spectrum { central_charge: c, m, spaces })
}

fn from_signs(alg: &FDAlgebra, spec: &Spectrum, sign: impl Fn(&Rational) -> Result<i32>) -> Result<LinMap> {
    let n = alg.dim();
    let mut cols = Vec::with_capacity(n);
    let mut d = Vec::with_capacity(n);
    for (h, basis) in &spec.spaces {
        let s = sign(h)?;
        for b in basis {
            cols.push(b.clone());
            d.push(CycNum::from_int(s as i64));
        }
    }
    let p = Mat::from_cols(&cols);
    let pinv = p.inverse().expect("eigenvectors form a basis");
    let mut dm = Mat::zeros(n, n);
    for (i, x) in d.into_iter().enumerate() {
        dm[(i, i)] = x;
    }
    let f = LinMap { space: alg.name.clone(), matrix: p.mul(&dm).mul(&pinv) };
    if !is_automorphism(alg, &f) {
        return Err(Error::Invalid(format!("the involution built on {} is not an automorphism", alg.name)));
    }
    Ok(f)
}

/// `-1` on the `1/16`-eigenspace of an Ising vector, `+1` elsewhere.
pub fn tau_involution(alg: &FDAlgebra, e: &[CycNum]) -> Result<LinMap> {
    let spec = ad_spectrum(alg, e)?;
    if spec.m != 1 {
        return Err(Error::Invalid(format!("central charge {} is not 1/2", spec.central_charge)));
    }
    from_signs(alg, &spec, |h| {
        if *h == Rational::from_int(2) {
            return Ok(1);
        }
        minimal_models::tau_sign(1, h).ok_or_else(|| Error::Invalid(format!("eigenvalue {h} is not an Ising weight")))
    })
}

/// Sigma-type involution of a Virasoro vector at level `m`: the sign of
/// `h_{1,s}` (even `m`) or `h_{r,1}` (odd `m`) on each eigenspace. Errors
/// when an eigenvalue lies outside the sigma-type set.
pub fn sigma_involution(alg: &FDAlgebra, v: &[CycNum]) -> Result<LinMap> {
    let spec = ad_spectrum(alg, v)?;
    let m = spec.m;
    from_signs(alg, &spec, |h| {
        if let Some(s) = minimal_models::sigma_sign(m, h) {
            return Ok(s);
        }
        if *h == Rational::from_int(2) {
            return Ok(1);
        }
        Err(Error::Invalid(format!("eigenvalue {h} is not of sigma type at c = {}", spec.central_charge)))
    })
}

pub fn is_automorphism(alg: &FDAlgebra, f: &LinMap) -> bool {
    let n = alg.dim();
    if f.dim() != n {
        return false;
    }
    let cols: Vec<Vector> = (0..n).map(|i| f.matrix.col(i)).collect();
    (0..n).into_par_iter().all(|i| {
        (i..n).all(|j| {
            let bij = alg.product(&alg.basis(i), &alg.basis(j));
            f.apply(&bij) == alg.product(&cols[i], &cols[j]) && alg.form(&cols[i], &cols[j]) == alg.gram[(i, j)]
        })
    })
}

/// Least `k <= cap` with `f^k = 1`.
pub fn map_order(f: &LinMap, cap: u32) -> Result<u32> {
    let id = Mat::identity(f.dim());
    let mut acc = f.matrix.clone();
    for k in 1..=cap {
        if acc == id {
            return Ok(k);
        }
        acc = acc.mul(&f.matrix);
    }
    Err(Error::CapExceeded(format!("order exceeds {cap}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanKind {
    TauIsing,
    SigmaC67,
}

impl ScanKind {
    pub fn bound(self) -> u32 {
        match self {
            ScanKind::TauIsing => 6,
            ScanKind::SigmaC67 => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairOrder {
    pub i: usize,
    pub j: usize,
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub pairs: Vec<PairOrder>,
    pub violations: Vec<PairOrder>,
}

pub fn involution_of(alg: &FDAlgebra, v: &[CycNum], kind: ScanKind) -> Result<LinMap> {
    match kind {
        ScanKind::TauIsing => tau_involution(alg, v),
        ScanKind::SigmaC67 => {
            let c = alg.central_charge(v);
            if c != CycNum::frac(6, 7) {
                return Err(Error::Invalid(format!("central charge {c} is not 6/7")));
            }
            sigma_involution(alg, v)
        }
    }
}

/// Orders of `f_i f_j` for all pairs `i < j`, with violations of the bound.
pub fn transposition_scan(alg: &FDAlgebra, vectors: &[Vector], kind: ScanKind) -> Result<ScanReport> {
    let maps: Vec<LinMap> = vectors.par_iter().map(|v| involution_of(alg, v, kind)).collect::<Result<_>>()?;
    scan_maps(&maps, kind)
}

pub fn scan_maps(maps: &[LinMap], kind: ScanKind) -> Result<ScanReport> {
    let idx: Vec<(usize, usize)> = (0..maps.len()).flat_map(|i| (i + 1..maps.len()).map(move |j| (i, j))).collect();
    let pairs: Vec<PairOrder> =
        idx.par_iter().map(|&(i, j)| map_order(&maps[i].compose(&maps[j]), 24).map(|order| PairOrder { i, j, order })).collect::<Result<_>>()?;
    let violations = pairs.iter().filter(|p| p.order > kind.bound()).cloned().collect();
    Ok(ScanReport { kind, pairs, violations })
}

/// All elements of the group generated by `gens` (exact matrix equality).
pub fn group_closure(gens: &[LinMap], cap: usize) -> Result<Vec<LinMap>> {
    let Some(first) = gens.first() else {
        return Err(Error::Invalid("no generators".into()));
    };
    let id = LinMap { space: first.space.clone(), matrix: Mat::identity(first.dim()) };
    let mut seen: HashSet<Vec<CycNum>> = HashSet::new();
    seen.insert(id.key());
    let mut elems = vec![id];
    let mut k = 0;
    while k < elems.len() {
        let x = elems[k].clone();
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.key()) {
                elems.push(y);
                if elems.len() > cap {
                    return Err(Error::CapExceeded(format!("group closure exceeds {cap} elements")));
                }
            }
        }
        k += 1;
    }
    Ok(elems)
}

/// Matrix of `f` (on `parent`) in the basis of the subalgebra `sub`.
pub fn restrict_map(f: &LinMap, sub: &FDAlgebra) -> Result<LinMap> {
    let images = match &sub.embedding {
        Some(Embedding::Sub { images, .. }) => images,
        _ => return Err(Error::Invalid(format!("{} is not embedded in an algebra", sub.name))),
    };
    let solver = SpanSolver::new(images.clone())?;
    let n = sub.dim();
    let mut m = Mat::zeros(n, n);
    for (j, img) in images.iter().enumerate() {
        let c = solver.coords(&f.apply(img)).ok_or_else(|| Error::NotClosed(format!("the map does not preserve {}", sub.name)))?;
        for (i, x) in c.into_iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    Ok(LinMap { space: sub.name.clone(), matrix: m })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two orthogonal Ising idempotents spanning a 2-dim algebra.
    fn two_ising() -> FDAlgebra {
        FDAlgebra::from_table(
            "2x Ising",
            &["a", "b"],
            &[(0, 0, vec![(0, CycNum::from_int(2))]), (0, 1, vec![]), (1, 1, vec![(1, CycNum::from_int(2))])],
            &[(0, 0, CycNum::frac(1, 4)), (1, 1, CycNum::frac(1, 4))],
        )
        .unwrap()
    }

    #[test]
    fn spectra_and_trivial_involutions() {
        let a = two_ising();
        let s = ad_spectrum(&a, &a.basis(0)).unwrap();
        assert_eq!(s.multiplicities(), vec![(Rational::zero(), 1), (Rational::from_int(2), 1)]);
        let t = tau_involution(&a, &a.basis(0)).unwrap();
        assert!(t.is_identity());
        assert_eq!(map_order(&t, 24).unwrap(), 1);
        assert_eq!(group_closure(&[t], 10).unwrap().len(), 1);
    }

    #[test]
    fn transvection_is_not_automorphism() {
        let a = two_ising();
        let mut m = Mat::identity(2);
        m[(0, 1)] = CycNum::one();
        assert!(!is_automorphism(&a, &LinMap { space: a.name.clone(), matrix: m }));
        assert!(is_automorphism(&a, &LinMap::identity(&a)));
    }

    #[test]
    fn non_virasoro_is_rejected() {
        let a = two_ising();
        let v = vec![CycNum::one(), CycNum::one()];
        assert!(ad_spectrum(&a, &crate::algebra::scale(&v, &CycNum::frac(1, 3))).is_err());
    }

    #[test]
    fn swap_has_order_two() {
        let mut m = Mat::zeros(2, 2);
        m[(0, 1)] = CycNum::one();
        m[(1, 0)] = CycNum::one();
        let f = LinMap { space: "x".into(), matrix: m };
        assert_eq!(map_order(&f, 24).unwrap(), 2);
        assert_eq!(group_closure(&[f], 10).unwrap().len(), 2);
    }
}
