//! Nine conjugates of the special Ising vector of sqrt2 E8 under the
//! characters trivial on `A2^4`, and the involutions they define.

use super::u3a::E8Frame;
use super::{closure, FDAlgebra, Vector};
use crate::error::{Error, Result};
use crate::exact::CycNum;
use crate::involutions::{group_closure, restrict_map, sigma_involution, tau_involution, transposition_scan, LinMap, ScanKind, ScanReport};
use crate::w2::Character;

#[derive(Clone, Debug)]
pub struct NineOrbit {
    pub frame: E8Frame,
    /// `rho1` is trivial on `A2 + E6`, `rho2` completes it to the group of `A2^4`.
    pub rho1: Character,
    pub rho2: Character,
    /// Coordinates of `rho1^i rho2^j e` (index `3i + j`) in `algebra`.
    pub vectors: Vec<Vector>,
    pub algebra: FDAlgebra,
}

impl NineOrbit {
    pub fn vector(&self, i: usize, j: usize) -> &Vector {
        &self.vectors[3 * i + j]
    }
}

pub fn nine_orbit() -> Result<NineOrbit> {
    let frame = E8Frame::new()?;
    let rho1 = frame.rho();
    let chars = frame.a2_four_characters();
    if chars.len() != 9 {
        return Err(Error::Invalid(format!("E8 / A2^4 has {} characters of order 3, expected 9", chars.len())));
    }
    let multiples: Vec<Character> = (0..3).map(|k| rho1.power(k)).collect();
    let same = |a: &Character, b: &Character| a.weight.iter().zip(&b.weight).all(|(x, y)| (x - y).rem_euclid(3) == 0);
    let rho2 = chars.iter().find(|c| !multiples.iter().any(|m| same(m, c))).cloned().expect("group of order 9");
    let sp = &frame.space;
    let d = sp.dim();
    let dense: Vec<Vector> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| rho1.power(i).apply(sp, &rho2.power(j).apply(sp, &frame.ising)).to_dense(d))
        .collect();
    let basis = closure(sp, &dense, 40)?;
    let names = (0..basis.len()).map(|k| format!("b{k}")).collect();
    let algebra = FDAlgebra::spanned_by(sp, "E8 orbit closure", names, basis)?;
    let vectors = dense
        .iter()
        .map(|v| algebra.coords_of(&crate::w2::W2Element::from_dense(v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(NineOrbit { frame, rho1, rho2, vectors, algebra })
}

pub fn tau_scan(o: &NineOrbit) -> Result<ScanReport> {
    transposition_scan(&o.algebra, &o.vectors, ScanKind::TauIsing)
}

/// Order of `<tau_e, tau_{rho1 e}, tau_{rho2 e}>` on the orbit closure.
pub fn tau_group_order(o: &NineOrbit) -> Result<usize> {
    let gens = [o.vector(0, 0), o.vector(1, 0), o.vector(0, 1)]
        .iter()
        .map(|v| tau_involution(&o.algebra, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(group_closure(&gens, 10_000)?.len())
}

/// Kernel of `ad(u)` for `u = tilde omega_{A2}` inside the orbit closure.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    pub kernel: FDAlgebra,
    /// `tilde omega_{E6}` in kernel coordinates.
    pub v: Vector,
}

pub fn stabilizer(o: &NineOrbit) -> Result<Stabilizer> {
    let u = o.algebra.coords_of(&o.frame.a2_vector)?;
    let ker = o.algebra.ad(&u).kernel();
    if ker.is_empty() {
        return Err(Error::Invalid("ad(u) has trivial kernel".into()));
    }
    let names = (0..ker.len()).map(|k| format!("k{k}")).collect();
    let kernel = FDAlgebra::spanned_by(&o.algebra, "ker ad(u)", names, ker)?;
    let v_parent = o.algebra.coords_of(&o.frame.e6_vector)?;
    let v = super::SpanSolver::new(match &kernel.embedding {
        Some(super::Embedding::Sub { images, .. }) => images.clone(),
        _ => unreachable!("spanned_by embeds into its ambient"),
    })?
    .coords(&v_parent)
    .ok_or_else(|| Error::Invalid("tilde omega_{E6} is not in ker ad(u)".into()))?;
    Ok(Stabilizer { kernel, v })
}

#[derive(Clone, Debug)]
pub struct RestrictionCheck {
    /// `(i, restricted tau equals sigma_v)` for `e = rho1^i e`.
    pub matches: Vec<(usize, bool)>,
    pub kernel_dim: usize,
}

impl RestrictionCheck {
    pub fn ok(&self) -> bool {
        self.matches.iter().all(|m| m.1)
    }
}

/// Restricts `tau_{rho1^i e}` to the stabilizer and compares with
/// `sigma_v`, each computed on its own.
pub fn restriction_check(o: &NineOrbit, st: &Stabilizer) -> Result<RestrictionCheck> {
    let sigma = sigma_involution(&st.kernel, &st.v)?;
    let mut matches = Vec::new();
    for i in 0..3 {
        let tau = tau_involution(&o.algebra, o.vector(i, 0))?;
        let r: LinMap = restrict_map(&tau, &st.kernel)?;
        matches.push((i, r.matrix == sigma.matrix));
    }
    Ok(RestrictionCheck { matches, kernel_dim: st.kernel.dim() })
}

/// Sigma scan on `rho2^j tilde omega_{E6}` inside the stabilizer.
pub fn sigma_scan(o: &NineOrbit, st: &Stabilizer) -> Result<ScanReport> {
    let sp = &o.frame.space;
    let images = match &st.kernel.embedding {
        Some(super::Embedding::Sub { images, .. }) => images.clone(),
        _ => unreachable!("spanned_by embeds into its ambient"),
    };
    let solver = super::SpanSolver::new(images)?;
    let vs = (0..3)
        .map(|j| {
            let w = o.rho2.power(j).apply(sp, &o.frame.e6_vector);
            let p = o.algebra.coords_of(&w)?;
            solver.coords(&p).ok_or_else(|| Error::Invalid(format!("rho2^{j} tilde omega_{{E6}} leaves ker ad(u)")))
        })
        .collect::<Result<Vec<_>>>()?;
    transposition_scan(&st.kernel, &vs, ScanKind::SigmaC67)
}

/// `<e, f>` for all pairs of distinct orbit vectors, without repeats.
pub fn orbit_inner_products(o: &NineOrbit) -> Vec<CycNum> {
    let mut out: Vec<CycNum> = Vec::new();
    for a in 0..9 {
        for b in a + 1..9 {
            let x = o.algebra.form(&o.vectors[a], &o.vectors[b]);
            if !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out
}
