//! Simply-laced root lattices, extended Dynkin marks and the sublattices
//! obtained by deleting one node of the extended diagram.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{enumerate, IVec, IntegralLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootKind {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl RootKind {
    pub fn rank(self) -> usize {
        match self {
            RootKind::A(n) | RootKind::D(n) => n,
            RootKind::E6 => 6,
            RootKind::E7 => 7,
            RootKind::E8 => 8,
        }
    }

    pub fn coxeter_number(self) -> u32 {
        match self {
            RootKind::A(n) => n as u32 + 1,
            RootKind::D(n) => 2 * n as u32 - 2,
            RootKind::E6 => 12,
            RootKind::E7 => 18,
            RootKind::E8 => 30,
        }
    }

    /// Dynkin diagram edges on nodes `0..rank`.
    ///
    /// E-types use a chain `0-1-2-3-4` with node 5 hanging off node 2; E7
    /// extends the chain by node 6 off node 4 and E8 further by node 7 off
    /// node 6, so E6 sits on the first six nodes of E7 and E8.
    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            RootKind::A(n) => (1..n).map(|i| (i - 1, i)).collect(),
            RootKind::D(n) => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                e
            }
            RootKind::E6 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
            RootKind::E7 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (4, 6)],
            RootKind::E8 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (4, 6), (6, 7)],
        }
    }

    pub fn cartan(self) -> Vec<IVec> {
        let n = self.rank();
        let mut g = vec![vec![0i64; n]; n];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in self.edges() {
            g[a][b] = -1;
            g[b][a] = -1;
        }
        g
    }

    fn validate(self) -> Result<()> {
        match self {
            RootKind::A(n) if n >= 1 => Ok(()),
            RootKind::D(n) if n >= 4 => Ok(()),
            RootKind::E6 | RootKind::E7 | RootKind::E8 => Ok(()),
            _ => Err(Error::Invalid(format!("no root system {self}"))),
        }
    }

    /// Classifies a connected simply-laced Dynkin tree.
    pub fn from_tree(nodes: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut deg = vec![0; nodes];
        for &(a, b) in edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        if edges.len() + 1 != nodes {
            return Err(Error::Invalid("diagram is not a tree".into()));
        }
        let branch: Vec<usize> = (0..nodes).filter(|&v| deg[v] >= 3).collect();
        if branch.is_empty() {
            return Ok(RootKind::A(nodes));
        }
        if branch.len() > 1 || deg[branch[0]] > 3 {
            return Err(Error::Invalid("not a finite Dynkin diagram".into()));
        }
        let b = branch[0];
        let mut arms = Vec::new();
        for &(x, y) in edges {
            let start = if x == b { y } else if y == b { x } else { continue };
            let (mut prev, mut cur, mut len) = (b, start, 1);
            loop {
                let next = edges.iter().find_map(|&(p, q)| {
                    if p == cur && q != prev {
                        Some(q)
                    } else if q == cur && p != prev {
                        Some(p)
                    } else {
                        None
                    }
                });
                match next {
                    Some(nx) => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    None => break,
                }
            }
            arms.push(len);
        }
        arms.sort();
        match arms.as_slice() {
            [1, 1, k] => Ok(RootKind::D(k + 3)),
            [1, 2, 2] => Ok(RootKind::E6),
            [1, 2, 3] => Ok(RootKind::E7),
            [1, 2, 4] => Ok(RootKind::E8),
            _ => Err(Error::Invalid("not a finite Dynkin diagram".into())),
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootKind::A(n) => write!(f, "A{n}"),
            RootKind::D(n) => write!(f, "D{n}"),
            RootKind::E6 => write!(f, "E6"),
            RootKind::E7 => write!(f, "E7"),
            RootKind::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for RootKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown root system {s:?}"));
        let (head, rest) = s.split_at(1.min(s.len()));
        let n: usize = rest.parse().map_err(|_| bad())?;
        let k = match head {
            "A" => RootKind::A(n),
            "D" => RootKind::D(n),
            "E" => match n {
                6 => RootKind::E6,
                7 => RootKind::E7,
                8 => RootKind::E8,
                _ => return Err(bad()),
            },
            _ => return Err(bad()),
        };
        k.validate()?;
        Ok(k)
    }
}

#[derive(Clone, Debug)]
pub struct RootLattice {
    pub kind: RootKind,
    pub scale: i64,
    pub lattice: IntegralLattice,
    /// Roots in simple-root coordinates, +- pairs adjacent.
    pub roots: Vec<IVec>,
    pub coxeter: u32,
}

/// Root lattice of the given type with form scaled by `scale` (1 or 2).
pub fn build_root_lattice(kind: RootKind, scale: i64) -> Result<RootLattice> {
    kind.validate()?;
    if scale != 1 && scale != 2 {
        return Err(Error::Invalid(format!("scale must be 1 or 2, got {scale}")));
    }
    let cartan = kind.cartan();
    let roots = enumerate::short_vectors(&cartan, 2);
    let name = if scale == 1 { kind.to_string() } else { format!("sqrt2{kind}") };
    let lattice = IntegralLattice::new(name, cartan.iter().map(|r| r.iter().map(|x| x * scale).collect()).collect())?;
    Ok(RootLattice { kind, scale, lattice, roots, coxeter: kind.coxeter_number() })
}

/// Highest root and extended-diagram marks `(m_0 = 1, m_1, ..., m_n)`.
pub fn affine_marks(kind: RootKind) -> Result<(IVec, Vec<i64>)> {
    let rl = build_root_lattice(kind, 1)?;
    let highest = rl
        .roots
        .iter()
        .filter(|r| r.iter().all(|&c| c >= 0))
        .max_by_key(|r| r.iter().sum::<i64>())
        .cloned()
        .expect("root system is nonempty");
    let mut marks = vec![1];
    marks.extend(highest.iter().copied());
    Ok((highest, marks))
}

/// Simple roots of the extended diagram in ambient coordinates: node 0 is
/// minus the highest root, node `j > 0` is the j-th simple root.
pub fn extended_simple_roots(kind: RootKind) -> Result<Vec<IVec>> {
    let (highest, _) = affine_marks(kind)?;
    let n = kind.rank();
    let mut out = vec![highest.iter().map(|x| -x).collect::<IVec>()];
    for j in 0..n {
        out.push((0..n).map(|k| (k == j) as i64).collect());
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Component {
    pub kind: RootKind,
    /// Extended-diagram nodes forming the component.
    pub nodes: Vec<usize>,
    /// Simple roots of the component in ambient coordinates.
    pub simple_roots: Vec<IVec>,
    /// Gram matrix of `simple_roots` (a Cartan matrix up to node order).
    pub gram: Vec<IVec>,
}

#[derive(Clone, Debug)]
pub struct NodeSublattice {
    pub ambient: RootKind,
    pub node: usize,
    pub mark: i64,
    /// Basis rows (ambient coordinates).
    pub basis: Vec<IVec>,
    pub components: Vec<Component>,
}

impl NodeSublattice {
    /// Conjugacy-class style label `{mark}A`.
    pub fn label(&self) -> String {
        format!("{}A", self.mark)
    }

    pub fn index(&self) -> i64 {
        self.mark
    }
}

/// Sublattice generated by the extended simple roots other than `node`.
pub fn node_sublattice(kind: RootKind, node: usize) -> Result<NodeSublattice> {
    let n = kind.rank();
    if node > n {
        return Err(Error::Invalid(format!("{kind} has extended nodes 0..={n}")));
    }
    let (_, marks) = affine_marks(kind)?;
    let simple = extended_simple_roots(kind)?;
    let cartan = kind.cartan();
    let pair = |a: &IVec, b: &IVec| enumerate::inner(&cartan, a, b);
    let keep: Vec<usize> = (0..=n).filter(|&v| v != node).collect();
    let mut seen = vec![false; n + 1];
    let mut components = Vec::new();
    for &start in &keep {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for &w in &keep {
                if !seen[w] && pair(&simple[v], &simple[w]) == -1 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort();
        let mut edges = Vec::new();
        for a in 0..comp.len() {
            for b in a + 1..comp.len() {
                if pair(&simple[comp[a]], &simple[comp[b]]) == -1 {
                    edges.push((a, b));
                }
            }
        }
        let ck = RootKind::from_tree(comp.len(), &edges)?;
        let simple_roots: Vec<IVec> = comp.iter().map(|&v| simple[v].clone()).collect();
        let gram = simple_roots.iter().map(|a| simple_roots.iter().map(|b| pair(a, b)).collect()).collect();
        components.push(Component { kind: ck, nodes: comp, simple_roots, gram });
    }
    let basis = keep.iter().map(|&v| simple[v].clone()).collect();
    Ok(NodeSublattice { ambient: kind, node, mark: marks[node], basis, components })
}

impl Component {
    /// All roots of the component, in ambient coordinates.
    pub fn roots(&self) -> Vec<IVec> {
        let n = self.simple_roots[0].len();
        enumerate::short_vectors(&self.gram, 2)
            .into_iter()
            .map(|c| (0..n).map(|k| c.iter().zip(&self.simple_roots).map(|(ci, s)| ci * s[k]).sum()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_kinds() {
        assert_eq!("A5".parse::<RootKind>().unwrap(), RootKind::A(5));
        assert_eq!("E6".parse::<RootKind>().unwrap(), RootKind::E6);
        assert!("D3".parse::<RootKind>().is_err());
        assert!("E9".parse::<RootKind>().is_err());
        assert!("X2".parse::<RootKind>().is_err());
    }

    #[test]
    fn tree_classification() {
        assert_eq!(RootKind::from_tree(6, &RootKind::E6.edges()).unwrap(), RootKind::E6);
        assert_eq!(RootKind::from_tree(8, &RootKind::E8.edges()).unwrap(), RootKind::E8);
        assert_eq!(RootKind::from_tree(5, &RootKind::D(5).edges()).unwrap(), RootKind::D(5));
    }
}
