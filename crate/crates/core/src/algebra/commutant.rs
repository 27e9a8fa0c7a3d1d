//! The weight-two algebras cut out of the sqrt2 E6 lattice VOA by deleting one
//! node of the extended E6 diagram: Virasoro frame vectors of the remaining
//! components plus coset sums, with the character automorphism of order
//! equal to the node's mark.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{FDAlgebra, Vector};
use crate::error::{Error, Result};
use crate::exact::{CycNum, Mat};
use crate::involutions::LinMap;
use crate::lattice::roots::{self, NodeSublattice, RootKind};
use crate::lattice::IVec;
use crate::w2::{Character, W2Element, W2Space};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Node {
    #[serde(rename = "1A")]
    N1A,
    #[serde(rename = "2A")]
    N2A,
    #[serde(rename = "3A")]
    N3A,
}

impl Node {
    pub const ALL: [Node; 3] = [Node::N1A, Node::N2A, Node::N3A];

    /// Extended E6 node whose deletion gives this case.
    pub fn extended_node(self) -> usize {
        match self {
            Node::N1A => 0,
            Node::N2A => 2,
            Node::N3A => 3,
        }
    }

    pub fn mark(self) -> i64 {
        match self {
            Node::N1A => 1,
            Node::N2A => 2,
            Node::N3A => 3,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}A", self.mark())
    }
}

impl FromStr for Node {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "1A" => Ok(Node::N1A),
            "2A" => Ok(Node::N2A),
            "3A" => Ok(Node::N3A),
            _ => Err(Error::Parse(format!("unknown node '{s}', expected 1A, 2A or 3A"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct NodeCase {
    pub node: Node,
    pub sublattice: NodeSublattice,
    /// Frame vectors `tilde omega` of the components, smallest rank first.
    pub frame: Vec<W2Element>,
    pub frame_kinds: Vec<RootKind>,
    /// Coset sums `X^r`, `r = 1 .. mark-1`.
    pub cosets: Vec<W2Element>,
    pub mark: i64,
}

#[derive(Clone, Debug)]
pub struct Commutant {
    pub case: NodeCase,
    pub space: Arc<W2Space>,
    pub algebra: FDAlgebra,
    /// Character of E6 trivial on the node sublattice.
    pub character: Character,
    pub rho: LinMap,
}

pub fn e6_space() -> Result<Arc<W2Space>> {
    W2Space::new(RootKind::E6)
}

pub fn node_case(space: &W2Space, node: Node) -> Result<NodeCase> {
    let ns = roots::node_sublattice(RootKind::E6, node.extended_node())?;
    let mut comps = ns.components.clone();
    comps.sort_by_key(|c| (c.kind.rank(), c.nodes.clone()));
    let mut frame = Vec::new();
    let mut kinds = Vec::new();
    for c in &comps {
        frame.push(space.tilde_omega(&c.roots(), c.kind.coxeter_number())?);
        kinds.push(c.kind);
    }
    let mark = ns.mark;
    let coord = node.extended_node().checked_sub(1);
    let cosets = (1..mark)
        .map(|r| {
            let i = coord.expect("nontrivial cosets need a simple node");
            space.coset_sum(|v| v[i].rem_euclid(mark) == r)
        })
        .collect();
    Ok(NodeCase { node, sublattice: ns, frame, frame_kinds: kinds, cosets, mark })
}

/// Character `beta -> zeta_mark^{c_i(beta)}` of E6 trivial on the node sublattice.
pub fn node_character(node: Node) -> Character {
    let mut w = vec![0i64; 6];
    if let Some(i) = node.extended_node().checked_sub(1) {
        w[i] = 1;
    }
    Character { weight: w, modulus: node.mark() as u32 }
}

/// Matrix of a character automorphism on a lattice-embedded algebra.
pub fn character_automorphism(alg: &FDAlgebra, chi: &Character) -> Result<LinMap> {
    let (space, images) = match &alg.embedding {
        Some(super::Embedding::Lattice { space, images }) => (space, images),
        _ => return Err(Error::Invalid(format!("{} has no lattice embedding", alg.name))),
    };
    let n = alg.dim();
    let mut m = Mat::zeros(n, n);
    for (j, img) in images.iter().enumerate() {
        let c = alg.coords_of(&chi.apply(space, img))?;
        for (i, x) in c.into_iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    Ok(LinMap { space: alg.name.clone(), matrix: m })
}

pub fn build_commutant_griess(node: Node) -> Result<Commutant> {
    let space = e6_space()?;
    build_in(&space, node)
}

pub fn build_in(space: &Arc<W2Space>, node: Node) -> Result<Commutant> {
    let case = node_case(space, node)?;
    let d = space.dim();
    let mut names = Vec::new();
    let mut vecs = Vec::new();
    if case.frame.len() == 1 && case.cosets.is_empty() {
        names.push("w".to_string());
    } else {
        names.extend((1..=case.frame.len()).map(|s| format!("w{s}")));
    }
    vecs.extend(case.frame.iter().map(|e| e.to_dense(d)));
    if case.cosets.len() == 1 {
        names.push("X".into());
    } else {
        names.extend((1..=case.cosets.len()).map(|r| format!("X{r}")));
    }
    vecs.extend(case.cosets.iter().map(|e| e.to_dense(d)));
    let algebra = FDAlgebra::spanned_by(space, &format!("G({node})"), names, vecs)?;

    // frame condition: the sum of the frame acts by 2
    let n = algebra.dim();
    let mut total = vec![CycNum::zero(); n];
    for s in 0..case.frame.len() {
        total[s] = CycNum::one();
    }
    for k in 0..n {
        let b = algebra.basis(k);
        if algebra.product(&total, &b) != super::scale(&b, &CycNum::from_int(2)) {
            return Err(Error::NotClosed(format!("frame of {node} does not act by 2 on {}", algebra.names[k])));
        }
    }
    let character = node_character(node);
    let sub_rows: Vec<IVec> = case.sublattice.basis.clone();
    if !character.kills(&sub_rows) {
        return Err(Error::Invalid(format!("character of {node} is not trivial on the node sublattice")));
    }
    let rho = character_automorphism(&algebra, &character)?;
    Ok(Commutant { case, space: Arc::clone(space), algebra, character, rho })
}

/// Structure constants of the commutant algebras as printed in the
/// literature, in the basis order used by [`build_commutant_griess`].
pub fn reference_table(node: Node) -> FDAlgebra {
    let c = CycNum::frac;
    match node {
        Node::N1A => FDAlgebra::from_table("G(1A) reference", &["w"], &[(0, 0, vec![(0, c(2, 1))])], &[(0, 0, c(3, 7))]).expect("valid table"),
        Node::N2A => FDAlgebra::from_table(
            "G(2A) reference",
            &["w1", "w2", "X"],
            &[
                (0, 0, vec![(0, c(2, 1))]),
                (0, 1, vec![]),
                (0, 2, vec![(2, c(1, 2))]),
                (1, 1, vec![(1, c(2, 1))]),
                (1, 2, vec![(2, c(3, 2))]),
                (2, 2, vec![(0, c(80, 1)), (1, c(96, 1))]),
            ],
            &[(0, 0, c(1, 4)), (0, 1, c(0, 1)), (0, 2, c(0, 1)), (1, 1, c(5, 8)), (1, 2, c(0, 1)), (2, 2, c(40, 1))],
        )
        .expect("valid table"),
        Node::N3A => {
            let mut prods = Vec::new();
            for s in 0..3 {
                prods.push((s, s, vec![(s, c(2, 1))]));
                for t in s + 1..3 {
                    prods.push((s, t, vec![]));
                }
                prods.push((s, 3, vec![(3, c(2, 3))]));
                prods.push((s, 4, vec![(4, c(2, 3))]));
            }
            prods.push((3, 3, vec![(4, c(8, 1))]));
            prods.push((3, 4, vec![(0, c(45, 1)), (1, c(45, 1)), (2, c(45, 1))]));
            prods.push((4, 4, vec![(3, c(8, 1))]));
            let mut form = vec![(3, 4, c(27, 1))];
            for s in 0..3 {
                form.push((s, s, c(2, 5)));
            }
            let mut a = FDAlgebra::from_table("G(3A) reference", &["w1", "w2", "w3", "X1", "X2"], &prods, &form).expect("valid table");
            a.star = swap_star(5, 3, 4);
            a
        }
    }
}

/// Star matrix that swaps two basis vectors and fixes the rest.
pub fn swap_star(n: usize, a: usize, b: usize) -> Mat<CycNum> {
    let mut m = Mat::identity(n);
    m[(a, a)] = CycNum::zero();
    m[(b, b)] = CycNum::zero();
    m[(a, b)] = CycNum::one();
    m[(b, a)] = CycNum::one();
    m
}

/// Entry-by-entry comparison of products and forms; returns mismatches.
pub fn compare_tables(got: &FDAlgebra, want: &FDAlgebra) -> Vec<String> {
    let mut out = Vec::new();
    if got.dim() != want.dim() {
        out.push(format!("dimension {} != {}", got.dim(), want.dim()));
        return out;
    }
    let n = got.dim();
    for i in 0..n {
        for j in i..n {
            let (x, y) = (got.basis(i), got.basis(j));
            let p = got.product(&x, &y);
            let q = want.product(&x, &y);
            if p != q {
                out.push(format!("{} * {}: computed {}, expected {}", got.names[i], got.names[j], got.show(&p), want.show(&q)));
            }
            if got.gram[(i, j)] != want.gram[(i, j)] {
                out.push(format!("<{}, {}>: computed {}, expected {}", got.names[i], got.names[j], got.gram[(i, j)], want.gram[(i, j)]));
            }
        }
    }
    out
}

/// Closed-form coordinates of `tilde v = tilde omega_{E6}` in the commutant basis.
pub fn tilde_v_closed_form(node: Node) -> Vector {
    let c = CycNum::frac;
    match node {
        Node::N1A => vec![c(1, 1)],
        Node::N2A => vec![c(2, 7), c(4, 7), c(1, 14)],
        Node::N3A => vec![c(5, 14), c(5, 14), c(5, 14), c(1, 14), c(1, 14)],
    }
}

#[derive(Clone, Debug)]
pub struct TildePair {
    pub v: Vector,
    pub v_prime: Vector,
    pub closed_form_matches: bool,
    pub inner: CycNum,
}

/// `tilde v` from the lattice and its image under the node character.
pub fn tilde_v_pair(c: &Commutant) -> Result<TildePair> {
    let e6 = c.space.tilde_omega_full()?;
    let v = c.algebra.coords_of(&e6)?;
    let closed = tilde_v_closed_form(c.case.node);
    let v_prime = c.rho.apply(&v);
    let inner = c.algebra.form(&v, &v_prime);
    Ok(TildePair { closed_form_matches: closed == v, v, v_prime, inner })
}

/// The Virasoro vector completing `tilde v` to the frame `w1 + w2` of the 2A algebra.
pub fn orthogonal_complement_virasoro(c: &Commutant) -> Result<Vector> {
    if c.case.node != Node::N2A {
        return Err(Error::Invalid("the complementary Virasoro vector is defined for 2A".into()));
    }
    let q = CycNum::frac;
    Ok(vec![q(5, 7), q(3, 7), q(-1, 14)])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub node: Node,
    pub expected: usize,
    /// Number of frame components plus `mark - 1` coset sums.
    pub frame_count: usize,
    pub computed: usize,
}

impl Census {
    pub fn ok(&self) -> bool {
        self.expected == self.computed && self.frame_count == self.computed
    }
}

pub fn weight2_dimension_census(c: &Commutant) -> Census {
    let expected = match c.case.node {
        Node::N1A => 1,
        Node::N2A => 3,
        Node::N3A => 5,
    };
    Census {
        node: c.case.node,
        expected,
        frame_count: c.case.frame.len() + c.case.mark as usize - 1,
        computed: c.algebra.dim(),
    }
}

/// Orders of a product of the two sigma involutions and related data,
/// returned by [`sigma_pair_order`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaPairOrder {
    pub node: Node,
    pub order: u32,
    pub spectrum: Vec<(crate::exact::Rational, usize)>,
}

/// `|sigma_v sigma_v'|` on the commutant algebra.
pub fn sigma_pair_order(c: &Commutant) -> Result<SigmaPairOrder> {
    let pair = tilde_v_pair(c)?;
    let spec = crate::involutions::ad_spectrum(&c.algebra, &pair.v)?;
    let s1 = crate::involutions::sigma_involution(&c.algebra, &pair.v)?;
    let s2 = crate::involutions::sigma_involution(&c.algebra, &pair.v_prime)?;
    let order = crate::involutions::map_order(&s1.compose(&s2), 24)?;
    Ok(SigmaPairOrder { node: c.case.node, order, spectrum: spec.multiplicities() })
}

/// The same order computed on the full theta-even weight-two algebra of
/// sqrt2 E6; needs a real-valued character (1A or 2A).
pub fn sigma_pair_order_ambient(node: Node) -> Result<SigmaPairOrder> {
    let space = e6_space()?;
    let alg = space.even_algebra()?;
    let chi = node_character(node);
    let e6 = space.tilde_omega_full()?;
    let v = space.to_even(&e6)?;
    let vp = space.to_even(&chi.apply(&space, &e6))?;
    let spec = crate::involutions::ad_spectrum(&alg, &v)?;
    let s1 = crate::involutions::sigma_involution(&alg, &v)?;
    let s2 = crate::involutions::sigma_involution(&alg, &vp)?;
    let order = crate::involutions::map_order(&s1.compose(&s2), 24)?;
    Ok(SigmaPairOrder { node, order, spectrum: spec.multiplicities() })
}

/// Closure of `{tilde v, tilde v'}` inside the commutant algebra.
pub fn pair_closure_dim(c: &Commutant) -> Result<usize> {
    let p = tilde_v_pair(c)?;
    Ok(super::closure(&c.algebra, &[p.v, p.v_prime], c.algebra.dim())?.len())
}

/// `sum_s w^s`, the frame of the commutant.
pub fn frame_sum(c: &Commutant) -> Vector {
    let mut v = vec![CycNum::zero(); c.algebra.dim()];
    for x in v.iter_mut().take(c.case.frame.len()) {
        *x = CycNum::one();
    }
    v
}
