//! Weight-two space of the lattice VOA `V_{sqrt2 L}` for an even lattice `L`
//! (in practice a root lattice).
//!
//! The working basis is *signed*: symmetric Heisenberg monomials
//! `b_i(-1) b_j(-1) 1` (`i <= j`, `b_i = sqrt2 alpha_i`) and one exponential
//! `e^beta` for every norm-4 vector `beta` of `sqrt2 L`. Products are the
//! `(1)`-products of the lattice VOA with trivial cocycle; the only product
//! leaving the symmetric part is `e^beta (1) e^-beta`, whose `beta(-2)` term is
//! returned separately so callers can check that it cancels. The theta-even
//! part (Heisenberg monomials plus `e^beta + e^-beta`) is a commutative
//! algebra and is exported as an [`FDAlgebra`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::exact::{CycNum, Mat, Rational};
use crate::lattice::roots::{self, RootKind};
use crate::lattice::{enumerate, IVec};

#[derive(Debug)]
pub struct W2Space {
    pub name: String,
    pub kind: Option<RootKind>,
    /// Form of the unscaled lattice `L`; `sqrt2 L` has twice this Gram.
    pub cartan: Vec<IVec>,
    pub rank: usize,
    pub pairs: Vec<(usize, usize)>,
    pair_index: Vec<Vec<usize>>,
    /// Norm-2 vectors of `L` (norm 4 in `sqrt2 L`), `+-` pairs adjacent.
    pub vectors: Vec<IVec>,
    index: HashMap<IVec, usize>,
    duals: Vec<IVec>,
}

/// Element of the signed weight-two space, sparse over the signed basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct W2Element {
    pub coeffs: BTreeMap<usize, CycNum>,
}

impl W2Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: usize) -> Self {
        let mut e = Self::zero();
        e.coeffs.insert(k, CycNum::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, k: usize) -> CycNum {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: usize, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn add(&self, o: &W2Element) -> W2Element {
        let mut out = self.clone();
        for (k, c) in &o.coeffs {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, o: &W2Element) -> W2Element {
        self.add(&o.scale(&CycNum::from_int(-1)))
    }

    pub fn scale(&self, s: &CycNum) -> W2Element {
        if s.is_zero() {
            return W2Element::zero();
        }
        W2Element { coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * s)).collect() }
    }

    pub fn scale_q(&self, n: i64, d: i64) -> W2Element {
        self.scale(&CycNum::frac(n, d))
    }

    pub fn conj(&self) -> W2Element {
        W2Element { coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.conj())).collect() }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(); dim];
        for (k, c) in &self.coeffs {
            v[*k] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[CycNum]) -> Self {
        W2Element { coeffs: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect() }
    }
}

pub fn lin_comb(terms: &[(CycNum, &W2Element)]) -> W2Element {
    let mut out = W2Element::zero();
    for (c, e) in terms {
        out = out.add(&e.scale(c));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirasoroCheck {
    pub is_virasoro: bool,
    pub central_charge: CycNum,
}

/// JSON shape of an element: Heisenberg monomials and exponentials by
/// index into the deterministic norm-4 vector ordering.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct W2ElementJson {
    pub heis: Vec<(usize, usize, CycNum)>,
    pub exps: Vec<(usize, CycNum)>,
}

impl W2Space {
    pub fn new(kind: RootKind) -> Result<Arc<Self>> {
        let rl = roots::build_root_lattice(kind, 1)?;
        let mut s = Self::from_gram(&format!("sqrt2{kind}"), rl.lattice.gram.clone())?;
        s.kind = Some(kind);
        Ok(Arc::new(s))
    }

    /// Space for `sqrt2 L` where `gram` is the (even) Gram matrix of `L`.
    pub fn from_gram(name: &str, gram: Vec<IVec>) -> Result<Self> {
        let rank = gram.len();
        if (0..rank).any(|i| gram[i][i] % 2 != 0) {
            return Err(Error::Invalid(format!("{name}: lattice is not even")));
        }
        let mut pairs = Vec::new();
        let mut pair_index = vec![vec![0; rank]; rank];
        for i in 0..rank {
            for j in i..rank {
                pair_index[i][j] = pairs.len();
                pair_index[j][i] = pairs.len();
                pairs.push((i, j));
            }
        }
        let vectors = enumerate::short_vectors(&gram, 2);
        let index = vectors.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect();
        let duals = vectors.iter().map(|v| (0..rank).map(|i| (0..rank).map(|j| gram[i][j] * v[j]).sum()).collect()).collect();
        Ok(W2Space { name: name.into(), kind: None, cartan: gram, rank, pairs, pair_index, vectors, index, duals })
    }

    pub fn npairs(&self) -> usize {
        self.pairs.len()
    }

    /// Dimension of the signed space.
    pub fn dim(&self) -> usize {
        self.pairs.len() + self.vectors.len()
    }

    /// Dimension of the theta-even part.
    pub fn even_dim(&self) -> usize {
        self.pairs.len() + self.vectors.len() / 2
    }

    pub fn pair(&self, i: usize, j: usize) -> usize {
        self.pair_index[i][j]
    }

    pub fn exp_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).map(|k| self.npairs() + k)
    }

    /// Signed basis index of `e^{sqrt2 v}` for a norm-2 vector `v` of `L`.
    pub fn exp(&self, v: &[i64]) -> Result<W2Element> {
        self.exp_index(v).map(W2Element::basis).ok_or_else(|| Error::Invalid(format!("{v:?} is not a norm-2 vector of {}", self.name)))
    }

    pub fn vector_of(&self, k: usize) -> Option<&IVec> {
        k.checked_sub(self.npairs()).map(|t| &self.vectors[t])
    }

    /// Index of the negative of the exponential at signed index `k`.
    pub fn neg_index(&self, k: usize) -> usize {
        let t = k - self.npairs();
        self.npairs() + (t ^ 1)
    }

    /// `<b_i, b_j>` in `sqrt2 L`.
    fn g(&self, i: usize, j: usize) -> i64 {
        2 * self.cartan[i][j]
    }

    /// `h(-1) h'(-1) 1` for `h = sum x_i b_i`, `h' = sum y_j b_j`.
    pub fn quad(&self, x: &[Rational], y: &[Rational]) -> W2Element {
        let mut out = W2Element::zero();
        for i in 0..self.rank {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if y[j].is_zero() {
                    continue;
                }
                out.add_term(self.pair(i, j), &CycNum::from_rational(&x[i] * &y[j]));
            }
        }
        out
    }

    pub fn quad_int(&self, x: &[i64], y: &[i64]) -> W2Element {
        let xr: Vec<Rational> = x.iter().map(|&v| Rational::from_int(v)).collect();
        let yr: Vec<Rational> = y.iter().map(|&v| Rational::from_int(v)).collect();
        self.quad(&xr, &yr)
    }

    /// Product of two signed basis vectors: symmetric part plus the
    /// coefficient vector of the `h(-2) 1` part.
    pub fn basis_product(&self, a: usize, b: usize) -> (Vec<(usize, i64, i64)>, Option<(usize, i64)>) {
        // entries (index, numerator, denominator)
        let np = self.npairs();
        match (a < np, b < np) {
            (true, true) => {
                let (i, j) = self.pairs[a];
                let (k, l) = self.pairs[b];
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for (g, p, q) in [(self.g(i, k), j, l), (self.g(i, l), j, k), (self.g(j, k), i, l), (self.g(j, l), i, k)] {
                    if g != 0 {
                        *acc.entry(self.pair(p, q)).or_default() += g;
                    }
                }
                (acc.into_iter().filter(|(_, c)| *c != 0).map(|(k, c)| (k, c, 1)).collect(), None)
            }
            (true, false) | (false, true) => {
                let (h, e) = if a < np { (a, b) } else { (b, a) };
                let (i, j) = self.pairs[h];
                let d = &self.duals[e - np];
                let c = 4 * d[i] * d[j];
                (if c == 0 { vec![] } else { vec![(e, c, 1)] }, None)
            }
            (false, false) => {
                let (s, t) = (a - np, b - np);
                if s ^ 1 == t {
                    // e^beta (1) e^-beta = 1/2 beta(-1)^2 + 1/2 beta(-2)
                    let v = &self.vectors[s];
                    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                    for i in 0..self.rank {
                        for j in 0..self.rank {
                            if v[i] != 0 && v[j] != 0 {
                                *acc.entry(self.pair(i, j)).or_default() += v[i] * v[j];
                            }
                        }
                    }
                    let sym = acc.into_iter().filter(|(_, c)| *c != 0).map(|(k, c)| (k, c, 2)).collect();
                    return (sym, Some((s, 1)));
                }
                let p: i64 = self.duals[s].iter().zip(&self.vectors[t]).map(|(x, y)| x * y).sum();
                if p == -1 {
                    let sum: IVec = self.vectors[s].iter().zip(&self.vectors[t]).map(|(x, y)| x + y).collect();
                    let k = self.index[&sum];
                    (vec![(np + k, 1, 1)], None)
                } else {
                    (vec![], None)
                }
            }
        }
    }

    /// Product with the `h(-2)` part: returns the symmetric part and the
    /// coefficients of `b_i(-2) 1`.
    pub fn product_full(&self, a: &W2Element, b: &W2Element) -> (W2Element, Vec<CycNum>) {
        let mut dense = vec![CycNum::zero(); self.dim()];
        let mut deriv = vec![CycNum::zero(); self.rank];
        for (ka, ca) in &a.coeffs {
            for (kb, cb) in &b.coeffs {
                let (terms, d) = self.basis_product(*ka, *kb);
                if terms.is_empty() && d.is_none() {
                    continue;
                }
                let c = ca * cb;
                for (k, n, q) in terms {
                    dense[k] += c.scale(&Rational::new(n, q));
                }
                if let Some((s, sign)) = d {
                    // 1/2 beta(-2) with beta = vectors[s] in the b-basis
                    let half = c.scale(&Rational::new(sign, 2));
                    for (i, &vi) in self.vectors[s].iter().enumerate() {
                        if vi != 0 {
                            deriv[i] += half.scale(&Rational::from_int(vi));
                        }
                    }
                }
            }
        }
        (W2Element::from_dense(&dense), deriv)
    }

    /// `a (1) b`; errors when the result has a nonzero `h(-2)` part.
    pub fn product(&self, a: &W2Element, b: &W2Element) -> Result<W2Element> {
        let (p, d) = self.product_full(a, b);
        if d.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotClosed(format!("product in {} has a nonzero h(-2) part", self.name)));
        }
        Ok(p)
    }

    /// Bilinear form (no conjugation).
    pub fn form(&self, a: &W2Element, b: &W2Element) -> CycNum {
        let np = self.npairs();
        let mut acc = CycNum::zero();
        for (ka, ca) in &a.coeffs {
            if *ka < np {
                let (i, j) = self.pairs[*ka];
                for (kb, cb) in b.coeffs.range(..np) {
                    let (k, l) = self.pairs[*kb];
                    let g = self.g(i, k) * self.g(j, l) + self.g(i, l) * self.g(j, k);
                    if g != 0 {
                        acc += (ca * cb).scale(&Rational::from_int(g));
                    }
                }
            } else if let Some(cb) = b.coeffs.get(&self.neg_index(*ka)) {
                acc += ca * cb;
            }
        }
        acc
    }

    /// The lift of `-1`: fixes Heisenberg monomials, `e^beta -> e^-beta`.
    pub fn theta(&self, a: &W2Element) -> W2Element {
        let np = self.npairs();
        W2Element { coeffs: a.coeffs.iter().map(|(k, c)| (if *k < np { *k } else { self.neg_index(*k) }, c.clone())).collect() }
    }

    /// Positive-definite Hermitian form `<theta(conj a), b>`.
    pub fn hermitian(&self, a: &W2Element, b: &W2Element) -> CycNum {
        self.form(&self.theta(&a.conj()), b)
    }

    pub fn is_theta_even(&self, a: &W2Element) -> bool {
        self.theta(a) == *a
    }

    /// Conformal vector `1/2 sum (G^-1)_{ij} b_i b_j`.
    pub fn conformal(&self) -> W2Element {
        let g = Mat::from_fn(self.rank, self.rank, |i, j| Rational::from_int(self.g(i, j)));
        let inv = g.inverse().expect("lattice form is nondegenerate");
        let mut out = W2Element::zero();
        let half = Rational::new(1, 2);
        for i in 0..self.rank {
            for j in 0..self.rank {
                out.add_term(self.pair(i, j), &CycNum::from_rational(&inv[(i, j)] * &half));
            }
        }
        out
    }

    /// `omega_S = 1/(4h) sum_{alpha in Phi(S)} alpha(-1)^2` where `alpha` are
    /// the norm-2 vectors of the `sqrt2`-scaled root system, written here
    /// through `sqrt2 alpha = sum c_i b_i`.
    pub fn omega_roots(&self, roots: &[IVec], coxeter: u32) -> W2Element {
        let mut out = W2Element::zero();
        for r in roots {
            out = out.add(&self.quad_int(r, r));
        }
        out.scale(&CycNum::frac(1, 8 * coxeter as i64))
    }

    pub fn exp_sum(&self, roots: &[IVec]) -> Result<W2Element> {
        let mut out = W2Element::zero();
        for r in roots {
            out.add_term(self.exp_index(r).ok_or_else(|| Error::Invalid(format!("{r:?} is not a root")))?, &CycNum::one());
        }
        Ok(out)
    }

    /// `2/(h+2) omega_S + 1/(h+2) sum e^{sqrt2 alpha}`.
    pub fn tilde_omega(&self, roots: &[IVec], coxeter: u32) -> Result<W2Element> {
        let h = coxeter as i64;
        if roots.is_empty() {
            return Err(Error::Invalid("empty root system".into()));
        }
        let w = self.omega_roots(roots, coxeter).scale_q(2, h + 2);
        Ok(w.add(&self.exp_sum(roots)?.scale_q(1, h + 2)))
    }

    /// `tilde_omega` of the whole lattice (requires a root lattice).
    pub fn tilde_omega_full(&self) -> Result<W2Element> {
        let kind = self.kind.ok_or_else(|| Error::Invalid(format!("{} has no root type", self.name)))?;
        self.tilde_omega(&self.vectors, kind.coxeter_number())
    }

    pub fn virasoro_check(&self, v: &W2Element) -> Result<VirasoroCheck> {
        let vv = self.product(v, v)?;
        let c = self.form(v, v).scale(&Rational::from_int(2));
        Ok(VirasoroCheck { is_virasoro: !v.is_zero() && vv == v.scale(&CycNum::from_int(2)), central_charge: c })
    }

    /// Sum of `e^{sqrt2 beta}` over the norm-2 vectors `beta` selected by `keep`.
    pub fn coset_sum(&self, keep: impl Fn(&IVec) -> bool) -> W2Element {
        let mut out = W2Element::zero();
        for (k, v) in self.vectors.iter().enumerate() {
            if keep(v) {
                out.add_term(self.npairs() + k, &CycNum::one());
            }
        }
        out
    }

    /// Diagonal action of a character on exponentials: `e^beta -> chi(beta) e^beta`.
    pub fn apply_character(&self, chi: &dyn Fn(&IVec) -> CycNum, a: &W2Element) -> W2Element {
        let np = self.npairs();
        W2Element {
            coeffs: a
                .coeffs
                .iter()
                .map(|(k, c)| (*k, if *k < np { c.clone() } else { c * &chi(&self.vectors[*k - np]) }))
                .collect(),
        }
    }

    pub fn to_json(&self, a: &W2Element) -> W2ElementJson {
        let np = self.npairs();
        W2ElementJson {
            heis: a.coeffs.range(..np).map(|(k, c)| (self.pairs[*k].0, self.pairs[*k].1, c.clone())).collect(),
            exps: a.coeffs.range(np..).map(|(k, c)| (*k - np, c.clone())).collect(),
        }
    }

    pub fn from_json(&self, j: &W2ElementJson) -> Result<W2Element> {
        let mut out = W2Element::zero();
        for (i, jj, c) in &j.heis {
            if *i >= self.rank || *jj >= self.rank {
                return Err(Error::Invalid(format!("Heisenberg index ({i},{jj}) out of range")));
            }
            out.add_term(self.pair(*i, *jj), c);
        }
        for (k, c) in &j.exps {
            if *k >= self.vectors.len() {
                return Err(Error::Invalid(format!("exponential index {k} out of range")));
            }
            out.add_term(self.npairs() + k, c);
        }
        Ok(out)
    }

    /// Theta-even coordinates: Heisenberg part, then one coefficient per
    /// class `e^beta + e^-beta` (canonical member first in the ordering).
    pub fn to_even(&self, a: &W2Element) -> Result<Vec<CycNum>> {
        if !self.is_theta_even(a) {
            return Err(Error::Invalid("element is not theta-even".into()));
        }
        let np = self.npairs();
        let mut v = vec![CycNum::zero(); self.even_dim()];
        for (k, c) in &a.coeffs {
            if *k < np {
                v[*k] = c.clone();
            } else if (*k - np) % 2 == 0 {
                v[np + (*k - np) / 2] = c.clone();
            }
        }
        Ok(v)
    }

    pub fn from_even(&self, v: &[CycNum]) -> W2Element {
        let np = self.npairs();
        let mut out = W2Element::zero();
        for (k, c) in v.iter().enumerate() {
            if k < np {
                out.add_term(k, c);
            } else {
                let t = k - np;
                out.add_term(np + 2 * t, c);
                out.add_term(np + 2 * t + 1, c);
            }
        }
        out
    }

    /// The theta-even weight-two algebra with basis Heisenberg monomials and
    /// `P_beta = e^beta + e^-beta`.
    pub fn even_algebra(self: &Arc<Self>) -> Result<FDAlgebra> {
        let n = self.even_dim();
        let np = self.npairs();
        let basis: Vec<W2Element> = (0..n)
            .map(|k| {
                let mut v = vec![CycNum::zero(); n];
                v[k] = CycNum::one();
                self.from_even(&v)
            })
            .collect();
        let mut names: Vec<String> = self.pairs.iter().map(|(i, j)| format!("h{i}h{j}")).collect();
        names.extend((0..self.vectors.len() / 2).map(|t| format!("P{t}")));
        let mut mult = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let p = self.product(&basis[a], &basis[b])?;
                let coords = self.to_even(&p)?;
                mult[a][b] = coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
        let mut gram = Mat::zeros(n, n);
        for a in 0..np {
            for b in 0..np {
                gram[(a, b)] = self.form(&basis[a], &basis[b]);
            }
        }
        for t in np..n {
            gram[(t, t)] = CycNum::from_int(2);
        }
        let mut alg = FDAlgebra::new(format!("{}+", self.name), names, mult, gram)?;
        alg.embedding = Some(crate::algebra::Embedding::Lattice { space: Arc::clone(self), images: basis });
        Ok(alg)
    }
}

impl fmt::Display for W2Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (signed dim {}, theta-even dim {})", self.name, self.dim(), self.even_dim())
    }
}

/// Character `beta -> zeta_m^{w . beta}` on lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub weight: IVec,
    pub modulus: u32,
}

impl Character {
    pub fn eval(&self, v: &[i64]) -> CycNum {
        let k: i64 = self.weight.iter().zip(v).map(|(a, b)| a * b).sum();
        crate::exact::cyc_make(self.modulus, k.rem_euclid(self.modulus as i64)).expect("modulus divides 12")
    }

    pub fn power(&self, k: i64) -> Character {
        Character { weight: self.weight.iter().map(|w| w * k).collect(), modulus: self.modulus }
    }

    /// Checks that the character is trivial on `sub` (rows in lattice coordinates).
    pub fn kills(&self, sub: &[IVec]) -> bool {
        sub.iter().all(|s| self.weight.iter().zip(s).map(|(a, b)| a * b).sum::<i64>().rem_euclid(self.modulus as i64) == 0)
    }

    pub fn apply(&self, space: &W2Space, a: &W2Element) -> W2Element {
        space.apply_character(&|v| self.eval(v), a)
    }

    pub fn is_trivial(&self) -> bool {
        self.weight.iter().all(|w| w.rem_euclid(self.modulus as i64) == 0)
    }

    /// Exact order of the character.
    pub fn order(&self) -> u32 {
        (1..=self.modulus).find(|&k| self.power(k as i64).is_trivial()).unwrap_or(self.modulus)
    }

    /// All characters `x -> zeta_m^{w.x}` of `Z^rank` trivial on `rows`,
    /// with `w` reduced mod `m`, the trivial one first.
    pub fn group_killing(rank: usize, rows: &[IVec], modulus: u32) -> Vec<Character> {
        let m = modulus as i64;
        let total = m.pow(rank as u32);
        (0..total)
            .map(|mut k| {
                (0..rank)
                    .map(|_| {
                        let d = k % m;
                        k /= m;
                        d
                    })
                    .collect::<IVec>()
            })
            .map(|w| Character { weight: w, modulus })
            .filter(|c| c.kills(rows))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let e8 = W2Space::new(RootKind::E8).unwrap();
        assert_eq!(e8.even_dim(), 156);
        assert_eq!(e8.dim(), 276);
        let e6 = W2Space::new(RootKind::E6).unwrap();
        assert_eq!(e6.even_dim(), 57);
    }

    #[test]
    fn conformal_vector_acts_by_two() {
        let a2 = W2Space::new(RootKind::A(2)).unwrap();
        let w = a2.conformal();
        assert_eq!(a2.form(&w, &w), CycNum::from_int(1));
        for k in 0..a2.dim() {
            let b = W2Element::basis(k);
            assert_eq!(a2.product(&w, &b).unwrap(), b.scale(&CycNum::from_int(2)));
        }
    }

    #[test]
    fn single_root_ising() {
        let a1 = W2Space::new(RootKind::A(1)).unwrap();
        let beta = a1.quad_int(&[1], &[1]).scale_q(1, 16);
        let e = beta.add(&a1.coset_sum(|_| true).scale_q(1, 4));
        let chk = a1.virasoro_check(&e).unwrap();
        assert!(chk.is_virasoro);
        assert_eq!(chk.central_charge, CycNum::frac(1, 2));
    }

    #[test]
    fn opposite_exponentials_leave_a_derivative() {
        let a1 = W2Space::new(RootKind::A(1)).unwrap();
        let (_, d) = a1.product_full(&W2Element::basis(1), &W2Element::basis(2));
        assert!(d.iter().any(|c| !c.is_zero()));
        let p = W2Element::basis(1).add(&W2Element::basis(2));
        assert!(a1.product(&p, &p).is_ok());
    }
}
