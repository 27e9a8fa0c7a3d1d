//! Finite-dimensional commutative algebras with an invariant form, given by
//! structure constants, and the tools to cut them out of a larger space.

pub mod commutant;
pub mod orbit;
pub mod props;
pub mod u3a;

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{CycNum, Mat};
use crate::w2::{W2Element, W2Space};

pub type Vector = Vec<CycNum>;

/// Where the basis of an algebra lives.
#[derive(Clone, Debug)]
pub enum Embedding {
    /// Images in the signed weight-two space of a lattice VOA.
    Lattice { space: Arc<W2Space>, images: Vec<W2Element> },
    /// Coordinates in the basis of a parent algebra.
    Sub { parent: String, images: Vec<Vector> },
}

#[derive(Clone, Debug)]
pub struct FDAlgebra {
    pub name: String,
    pub names: Vec<String>,
    /// `mult[i][j]` = sparse coordinates of `b_i b_j`.
    pub mult: Vec<Vec<Vec<(usize, CycNum)>>>,
    pub gram: Mat<CycNum>,
    /// Conjugate-linear involution `x -> star * conj(x)` making
    /// `<star x, y>` Hermitian; identity when the basis is real.
    pub star: Mat<CycNum>,
    pub embedding: Option<Embedding>,
}

/// A space with a bilinear product, a bilinear form and a conjugate-linear
/// star, in dense coordinates.
pub trait Ambient {
    fn dim(&self) -> usize;
    fn label(&self) -> String;
    fn mul(&self, a: &[CycNum], b: &[CycNum]) -> Result<Vector>;
    fn pair(&self, a: &[CycNum], b: &[CycNum]) -> CycNum;
    fn star_of(&self, a: &[CycNum]) -> Vector;
    fn lattice_space(&self) -> Option<Arc<W2Space>> {
        None
    }
}

impl Ambient for Arc<W2Space> {
    fn dim(&self) -> usize {
        W2Space::dim(self)
    }
    fn label(&self) -> String {
        self.name.clone()
    }
    fn mul(&self, a: &[CycNum], b: &[CycNum]) -> Result<Vector> {
        let p = self.product(&W2Element::from_dense(a), &W2Element::from_dense(b))?;
        Ok(p.to_dense(W2Space::dim(self)))
    }
    fn pair(&self, a: &[CycNum], b: &[CycNum]) -> CycNum {
        self.form(&W2Element::from_dense(a), &W2Element::from_dense(b))
    }
    fn star_of(&self, a: &[CycNum]) -> Vector {
        self.theta(&W2Element::from_dense(a).conj()).to_dense(W2Space::dim(self))
    }
    fn lattice_space(&self) -> Option<Arc<W2Space>> {
        Some(Arc::clone(self))
    }
}

impl Ambient for FDAlgebra {
    fn dim(&self) -> usize {
        FDAlgebra::dim(self)
    }
    fn label(&self) -> String {
        self.name.clone()
    }
    fn mul(&self, a: &[CycNum], b: &[CycNum]) -> Result<Vector> {
        Ok(self.product(a, b))
    }
    fn pair(&self, a: &[CycNum], b: &[CycNum]) -> CycNum {
        self.form(a, b)
    }
    fn star_of(&self, a: &[CycNum]) -> Vector {
        self.star_apply(a)
    }
}

/// Coordinates with respect to a fixed independent family of vectors.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    pub vectors: Vec<Vector>,
    pivots: Vec<usize>,
    inv: Mat<CycNum>,
}

impl SpanSolver {
    pub fn new(vectors: Vec<Vector>) -> Result<Self> {
        let n = vectors.len();
        let d = vectors.first().map_or(0, Vec::len);
        let mut m = Mat::from_fn(n, d, |i, j| vectors[i][j].clone());
        let pivots = m.rref();
        if pivots.len() != n {
            return Err(Error::Invalid(format!("{} vectors span only {} dimensions", n, pivots.len())));
        }
        let b = Mat::from_fn(n, n, |i, k| vectors[k][pivots[i]].clone());
        let inv = b.inverse().expect("pivot minor is invertible");
        Ok(SpanSolver { vectors, pivots, inv })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Coordinates of `x`, or `None` when `x` is outside the span.
    pub fn coords(&self, x: &[CycNum]) -> Option<Vector> {
        let rhs: Vector = self.pivots.iter().map(|&p| x[p].clone()).collect();
        let c = self.inv.mul_vec(&rhs);
        let mut back = vec![CycNum::zero(); x.len()];
        for (ck, v) in c.iter().zip(&self.vectors) {
            if ck.is_zero() {
                continue;
            }
            for (b, vj) in back.iter_mut().zip(v) {
                if !vj.is_zero() {
                    *b += ck * vj;
                }
            }
        }
        (back == x).then_some(c)
    }
}

fn sparse(v: Vector) -> Vec<(usize, CycNum)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn unit(n: usize, k: usize) -> Vector {
    let mut v = vec![CycNum::zero(); n];
    v[k] = CycNum::one();
    v
}

pub fn add(a: &[CycNum], b: &[CycNum]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[CycNum], b: &[CycNum]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[CycNum], s: &CycNum) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn comb(terms: &[(CycNum, &Vector)]) -> Vector {
    let n = terms.first().map_or(0, |t| t.1.len());
    let mut out = vec![CycNum::zero(); n];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

impl FDAlgebra {
    pub fn new(name: impl Into<String>, names: Vec<String>, mult: Vec<Vec<Vec<(usize, CycNum)>>>, gram: Mat<CycNum>) -> Result<Self> {
        let n = names.len();
        if mult.len() != n || mult.iter().any(|r| r.len() != n) || gram.rows != n || gram.cols != n {
            return Err(Error::Invalid("structure constants do not match the basis size".into()));
        }
        if mult.iter().flatten().flatten().any(|(k, _)| *k >= n) {
            return Err(Error::Invalid("structure constant index out of range".into()));
        }
        Ok(FDAlgebra { name: name.into(), names, mult, gram, star: Mat::identity(n), embedding: None })
    }

    /// Algebra from a symmetric product table given on pairs `i <= j`.
    pub fn from_table(name: &str, names: &[&str], products: &[(usize, usize, Vec<(usize, CycNum)>)], form: &[(usize, usize, CycNum)]) -> Result<Self> {
        let n = names.len();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (i, j, p) in products {
            let p: Vec<(usize, CycNum)> = p.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
            mult[*i][*j] = p.clone();
            mult[*j][*i] = p;
        }
        let mut gram = Mat::zeros(n, n);
        for (i, j, c) in form {
            gram[(*i, *j)] = c.clone();
            gram[(*j, *i)] = c.clone();
        }
        FDAlgebra::new(name, names.iter().map(|s| s.to_string()).collect(), mult, gram)
    }

    /// Subalgebra of `amb` spanned by independent `vectors`; every product
    /// must lie in the span.
    pub fn spanned_by<A: Ambient>(amb: &A, name: &str, names: Vec<String>, vectors: Vec<Vector>) -> Result<Self> {
        let n = vectors.len();
        let solver = SpanSolver::new(vectors)?;
        let vs = &solver.vectors;
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let p = amb.mul(&vs[i], &vs[j])?;
                let c = solver
                    .coords(&p)
                    .ok_or_else(|| Error::NotClosed(format!("{name}: {} * {} is outside the span", names[i], names[j])))?;
                mult[i][j] = sparse(c);
            }
        }
        let gram = Mat::from_fn(n, n, |i, j| amb.pair(&vs[i], &vs[j]));
        let mut star = Mat::zeros(n, n);
        for i in 0..n {
            let s = solver
                .coords(&amb.star_of(&vs[i]))
                .ok_or_else(|| Error::NotClosed(format!("{name}: star of {} is outside the span", names[i])))?;
            for (k, c) in s.into_iter().enumerate() {
                star[(k, i)] = c;
            }
        }
        let embedding = match amb.lattice_space() {
            Some(space) => Embedding::Lattice { space, images: vs.iter().map(|v| W2Element::from_dense(v)).collect() },
            None => Embedding::Sub { parent: amb.label(), images: vs.clone() },
        };
        let mut alg = FDAlgebra::new(name, names, mult, gram)?;
        alg.star = star;
        alg.embedding = Some(embedding);
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis(&self, k: usize) -> Vector {
        unit(self.dim(), k)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn product(&self, a: &[CycNum], b: &[CycNum]) -> Vector {
        let n = self.dim();
        let mut out = vec![CycNum::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() || self.mult[i][j].is_empty() {
                    continue;
                }
                let c = ai * bj;
                for (k, m) in &self.mult[i][j] {
                    out[*k] += &c * m;
                }
            }
        }
        out
    }

    pub fn form(&self, a: &[CycNum], b: &[CycNum]) -> CycNum {
        let mut acc = CycNum::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let g = &self.gram[(i, j)];
                if !bj.is_zero() && !g.is_zero() {
                    acc += ai * &(bj * g);
                }
            }
        }
        acc
    }

    pub fn star_apply(&self, a: &[CycNum]) -> Vector {
        let c: Vector = a.iter().map(CycNum::conj).collect();
        self.star.mul_vec(&c)
    }

    /// `<star a, b>`.
    pub fn hermitian(&self, a: &[CycNum], b: &[CycNum]) -> CycNum {
        self.form(&self.star_apply(a), b)
    }

    /// Matrix of `x -> v x`.
    pub fn ad(&self, v: &[CycNum]) -> Mat<CycNum> {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for j in 0..n {
            let col = self.product(v, &self.basis(j));
            for (i, c) in col.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        m
    }

    pub fn is_virasoro(&self, v: &[CycNum]) -> bool {
        v.iter().any(|c| !c.is_zero()) && self.product(v, v) == scale(v, &CycNum::from_int(2))
    }

    pub fn central_charge(&self, v: &[CycNum]) -> CycNum {
        self.form(v, v).scale(&crate::exact::Rational::from_int(2))
    }

    /// Coordinates of a lattice element in the basis, when embedded.
    pub fn coords_of(&self, x: &W2Element) -> Result<Vector> {
        match &self.embedding {
            Some(Embedding::Lattice { space, images }) => {
                let d = space.dim();
                let solver = SpanSolver::new(images.iter().map(|e| e.to_dense(d)).collect())?;
                solver.coords(&x.to_dense(d)).ok_or_else(|| Error::NotClosed(format!("element is outside {}", self.name)))
            }
            _ => Err(Error::Invalid(format!("{} has no lattice embedding", self.name))),
        }
    }

    /// Lattice element of a coordinate vector, when embedded.
    pub fn lift(&self, v: &[CycNum]) -> Result<W2Element> {
        match &self.embedding {
            Some(Embedding::Lattice { images, .. }) => {
                let mut out = W2Element::zero();
                for (c, e) in v.iter().zip(images) {
                    out = out.add(&e.scale(c));
                }
                Ok(out)
            }
            _ => Err(Error::Invalid(format!("{} has no lattice embedding", self.name))),
        }
    }

    /// Renders a coordinate vector like `2/7 w1 + 1/14 X`.
    pub fn show(&self, v: &[CycNum]) -> String {
        let mut parts = Vec::new();
        for (c, n) in v.iter().zip(&self.names) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(n.clone());
            } else if c.is_rational() || !c.to_string().contains('+') {
                parts.push(format!("{c} {n}"));
            } else {
                parts.push(format!("({c}) {n}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn to_json(&self) -> FDAlgebraJson {
        let n = self.dim();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in i..n {
                for (k, c) in &self.mult[i][j] {
                    mult.push((i, j, *k, c.clone()));
                }
            }
        }
        FDAlgebraJson { name: self.name.clone(), basis: self.names.clone(), mult, gram: self.gram.to_rows() }
    }

    /// Product and form tables in markdown.
    pub fn to_markdown(&self) -> String {
        let n = self.dim();
        let mut s = format!("### {}\n\n| product |", self.name);
        for name in &self.names {
            let _ = write!(s, " {name} |");
        }
        s.push_str("\n|---|");
        s.push_str(&"---|".repeat(n));
        s.push('\n');
        for i in 0..n {
            let _ = write!(s, "| {} |", self.names[i]);
            for j in 0..n {
                let cell = if j < i { String::new() } else { self.show(&self.product(&self.basis(i), &self.basis(j))) };
                let _ = write!(s, " {cell} |");
            }
            s.push('\n');
        }
        s.push_str("\n| form |");
        for name in &self.names {
            let _ = write!(s, " {name} |");
        }
        s.push_str("\n|---|");
        s.push_str(&"---|".repeat(n));
        s.push('\n');
        for i in 0..n {
            let _ = write!(s, "| {} |", self.names[i]);
            for j in 0..n {
                let cell = if j < i { String::new() } else { self.gram[(i, j)].to_string() };
                let _ = write!(s, " {cell} |");
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FDAlgebraJson {
    pub name: String,
    pub basis: Vec<String>,
    /// `(i, j, k, c)`: the coefficient of `b_k` in `b_i b_j`, for `i <= j`.
    pub mult: Vec<(usize, usize, usize, CycNum)>,
    pub gram: Vec<Vec<CycNum>>,
}

/// Product closure of the span of `gens` inside `amb`, as an independent
/// list of vectors (generators first). Errors past `cap` dimensions.
pub fn closure<A: Ambient>(amb: &A, gens: &[Vector], cap: usize) -> Result<Vec<Vector>> {
    let d = amb.dim();
    let mut basis: Vec<Vector> = Vec::new();
    let rank_of = |basis: &Vec<Vector>| Mat::from_fn(basis.len(), d, |i, j| basis[i][j].clone()).rank();
    for g in gens {
        basis.push(g.clone());
        if rank_of(&basis) < basis.len() {
            basis.pop();
        }
    }
    let mut done = 0;
    while done < basis.len() {
        let i = done;
        for j in 0..=i {
            let p = amb.mul(&basis[i], &basis[j])?;
            basis.push(p);
            if rank_of(&basis) < basis.len() {
                basis.pop();
            } else if basis.len() > cap {
                return Err(Error::CapExceeded(format!("product closure exceeds dimension {cap}")));
            }
        }
        done += 1;
    }
    Ok(basis)
}

/// Tries to extend a generator correspondence `gens_a[k] -> gens_b[k]` to an
/// algebra isomorphism `a -> b`. Returns the matrix (columns = images of the
/// basis of `a` in coordinates of `b`) when products and forms match.
pub fn isomorphism_by_generators(a: &FDAlgebra, gens_a: &[Vector], b: &FDAlgebra, gens_b: &[Vector]) -> Option<Mat<CycNum>> {
    if a.dim() != b.dim() || gens_a.len() != gens_b.len() {
        return None;
    }
    let n = a.dim();
    // Words in the generators, expanded breadth-first in both algebras.
    let mut wa: Vec<Vector> = gens_a.to_vec();
    let mut wb: Vec<Vector> = gens_b.to_vec();
    let mut k = 0;
    while wa.len() < 4 * n * n && k < wa.len() {
        for j in 0..=k {
            wa.push(a.product(&wa[k], &wa[j]));
            wb.push(b.product(&wb[k], &wb[j]));
        }
        k += 1;
    }
    // Pick an independent subfamily in `a`.
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..wa.len() {
        chosen.push(i);
        let m = Mat::from_fn(chosen.len(), n, |r, c| wa[chosen[r]][c].clone());
        if m.rank() < chosen.len() {
            chosen.pop();
        }
        if chosen.len() == n {
            break;
        }
    }
    if chosen.len() < n {
        return None;
    }
    let pa = Mat::from_fn(n, n, |r, c| wa[chosen[c]][r].clone());
    let pb = Mat::from_fn(n, n, |r, c| wb[chosen[c]][r].clone());
    let phi = pb.mul(&pa.inverse()?);
    if phi.rank() < n {
        return None;
    }
    // Every word must map correctly, and the map must respect structure.
    for (x, y) in wa.iter().zip(&wb) {
        if phi.mul_vec(x) != *y {
            return None;
        }
    }
    for i in 0..n {
        let fi = phi.col(i);
        for j in i..n {
            let fj = phi.col(j);
            if phi.mul_vec(&a.product(&a.basis(i), &a.basis(j))) != b.product(&fi, &fj) {
                return None;
            }
            if a.gram[(i, j)] != b.form(&fi, &fj) {
                return None;
            }
        }
    }
    Some(phi)
}
