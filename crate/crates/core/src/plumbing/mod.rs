//! Weighted plumbing graphs `(Γ, w, g)` and their intersection lattices.

pub mod linalg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlumbingError {
    #[error("loops-forbidden: edge joins vertex {0} to itself")]
    LoopsForbidden(usize),
    #[error("bad-ids: {0}")]
    BadIds(String),
    #[error("not-connected: graph has {components} components")]
    NotConnected { components: usize },
    #[error("singular-intersection-form")]
    SingularIntersectionForm,
    #[error("not-gorenstein: canonical cycle is not integral")]
    NotGorenstein,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub weight: i64,
    pub genus: u32,
}

/// Connected, loop-free weighted graph. Vertex ids are `0..r`; edges are
/// stored as a sorted multiset of pairs `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

/// Validates and builds a graph from `(id, weight, genus)` records and edges.
pub fn build_graph(
    vertices: impl IntoIterator<Item = (usize, i64, u32)>,
    edges: impl IntoIterator<Item = (usize, usize)>,
) -> Result<PlumbingGraph, PlumbingError> {
    let records: Vec<(usize, i64, u32)> = vertices.into_iter().collect();
    let r = records.len();
    if r == 0 {
        return Err(PlumbingError::BadIds("graph has no vertices".into()));
    }
    let mut slots: Vec<Option<Vertex>> = vec![None; r];
    for (id, weight, genus) in records {
        match slots.get_mut(id) {
            None => {
                return Err(PlumbingError::BadIds(format!(
                    "vertex id {id} outside 0..{r}"
                )))
            }
            Some(Some(_)) => {
                return Err(PlumbingError::BadIds(format!("duplicate vertex id {id}")))
            }
            Some(slot) => *slot = Some(Vertex { weight, genus }),
        }
    }
    let vertices: Vec<Vertex> = slots
        .into_iter()
        .map(|v| v.expect("all slots filled"))
        .collect();

    let mut normalized = Vec::new();
    for (u, v) in edges {
        if u == v {
            return Err(PlumbingError::LoopsForbidden(u));
        }
        if u >= r || v >= r {
            return Err(PlumbingError::BadIds(format!(
                "edge ({u}, {v}) names a missing vertex"
            )));
        }
        normalized.push((u.min(v), u.max(v)));
    }
    normalized.sort_unstable();

    let graph = PlumbingGraph {
        vertices,
        edges: normalized,
    };
    let components = graph.component_count();
    if components != 1 {
        return Err(PlumbingError::NotConnected { components });
    }
    Ok(graph)
}

impl PlumbingGraph {
    /// Linear chain with the given weights, all genera zero.
    pub fn chain(weights: &[i64]) -> Result<Self, PlumbingError> {
        build_graph(
            weights.iter().enumerate().map(|(i, &w)| (i, w, 0)),
            (1..weights.len()).map(|i| (i - 1, i)),
        )
    }

    /// Star with central vertex 0 and the given arms (each a chain read
    /// outward from the center), all genera zero.
    pub fn star(center: i64, arms: &[Vec<i64>]) -> Result<Self, PlumbingError> {
        let mut vertices = vec![(0, center, 0)];
        let mut edges = Vec::new();
        for arm in arms {
            let mut prev = 0;
            for &w in arm {
                let id = vertices.len();
                vertices.push((id, w, 0));
                edges.push((prev, id));
                prev = id;
            }
        }
        build_graph(vertices, edges)
    }

    /// The `E_8` configuration: eight `-2` curves, arms of length 1, 2, 4.
    pub fn e8() -> Self {
        Self::star(-2, &[vec![-2], vec![-2, -2], vec![-2, -2, -2, -2]]).expect("E8 is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Same topology with new weights.
    pub fn with_weights(&self, weights: &[i64]) -> Self {
        assert_eq!(weights.len(), self.vertices.len());
        let mut g = self.clone();
        for (v, &w) in g.vertices.iter_mut().zip(weights) {
            v.weight = w;
        }
        g
    }

    /// Same topology and weights with new genera.
    pub fn with_genera(&self, genera: &[u32]) -> Self {
        assert_eq!(genera.len(), self.vertices.len());
        let mut g = self.clone();
        for (v, &genus) in g.vertices.iter_mut().zip(genera) {
            v.genus = genus;
        }
        g
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, PlumbingError> {
        build_graph(
            self.vertices
                .iter()
                .enumerate()
                .map(|(i, v)| (perm[i], v.weight, v.genus)),
            self.edges.iter().map(|&(a, b)| (perm[a], perm[b])),
        )
    }

    fn component_count(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while p[root] != root {
                root = p[root];
            }
            let mut cur = x;
            while p[cur] != root {
                let next = p[cur];
                p[cur] = root;
                cur = next;
            }
            root
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }
}

/// Symmetric integer matrix with `w_i` on the diagonal and edge
/// multiplicities off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    entries: Vec<Vec<i64>>,
}

impl IntersectionMatrix {
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Self {
        let n = entries.len();
        assert!(
            entries.iter().all(|r| r.len() == n),
            "matrix must be square"
        );
        IntersectionMatrix { entries }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    fn big(&self) -> linalg::IntMatrix {
        linalg::to_big(&self.entries)
    }
}

pub fn intersection_matrix(g: &PlumbingGraph) -> IntersectionMatrix {
    let n = g.vertex_count();
    let mut m = vec![vec![0i64; n]; n];
    for (i, v) in g.vertices.iter().enumerate() {
        m[i][i] = v.weight;
    }
    for &(a, b) in &g.edges {
        m[a][b] += 1;
        m[b][a] += 1;
    }
    IntersectionMatrix { entries: m }
}

pub fn determinant(m: &IntersectionMatrix) -> BigInt {
    linalg::bareiss_determinant(m.big())
}

/// Exact test by leading principal minors.
pub fn is_negative_definite(m: &IntersectionMatrix) -> bool {
    linalg::negative_definite_by_minors(&m.big())
}

/// Independent check by rational `LDLᵀ` of `-m`.
pub fn is_negative_definite_cholesky(m: &IntersectionMatrix) -> bool {
    linalg::negative_definite_by_cholesky(&m.big())
}

/// Rational solution `k` of `I·k = b`, `b_i = -(w_i + 2 - 2 g_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCycle {
    pub coefficients: Vec<BigRational>,
    pub integral: bool,
    pub k_squared: BigRational,
}

/// Right-hand side of the adjunction system `K·E_i = -E_i^2 - 2 + 2g_i`.
pub fn adjunction_rhs(g: &PlumbingGraph) -> Vec<BigInt> {
    g.vertices
        .iter()
        .map(|v| BigInt::from(-(v.weight + 2 - 2 * v.genus as i64)))
        .collect()
}

pub fn canonical_cycle(g: &PlumbingGraph) -> Result<CanonicalCycle, PlumbingError> {
    let m = intersection_matrix(g).big();
    let rhs = adjunction_rhs(g);
    let (numerators, det) =
        linalg::solve_fraction_free(&m, &rhs).ok_or(PlumbingError::SingularIntersectionForm)?;
    let integral = numerators.iter().all(|n| n.is_multiple_of(&det));
    let coefficients: Vec<BigRational> = numerators
        .into_iter()
        .map(|n| BigRational::new(n, det.clone()))
        .collect();
    // K² = kᵀ·I·k = kᵀ·b
    let k_squared = coefficients
        .iter()
        .zip(&rhs)
        .map(|(k, b)| k * BigRational::from_integer(b.clone()))
        .fold(BigRational::zero(), |acc, t| acc + t);
    Ok(CanonicalCycle {
        coefficients,
        integral,
        k_squared,
    })
}

/// `Σ (2 - 2 g_i) - #edges`.
pub fn euler_char_exceptional(g: &PlumbingGraph) -> i64 {
    g.vertices
        .iter()
        .map(|v| 2 - 2 * v.genus as i64)
        .sum::<i64>()
        - g.edges.len() as i64
}

/// `12·p_g + K² + χ_top(E)`; requires an integral canonical cycle.
pub fn laufer_chi(g: &PlumbingGraph, p_g: u64) -> Result<i64, PlumbingError> {
    let k = canonical_cycle(g)?;
    if !k.integral {
        return Err(PlumbingError::NotGorenstein);
    }
    let k2 = k.k_squared.to_integer().to_i64().expect("K² fits in i64");
    Ok(12 * p_g as i64 + k2 + euler_char_exceptional(g))
}

/// `|det I|`, the period of numerically Gorenstein genus vectors.
pub fn lattice_period(g: &PlumbingGraph) -> BigInt {
    determinant(&intersection_matrix(g)).abs()
}
