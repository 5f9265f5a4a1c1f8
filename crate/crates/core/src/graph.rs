//! Simple undirected graphs and the operations the coloring theorems act on:
//! canonical constructors, complement, induced subgraphs, disjoint unions,
//! and the tensor/Cartesian/strong products.
//!
//! Vertices are dense ids `0..n`. Adjacency is stored per vertex as a sorted
//! neighbor list, so membership tests are `O(log deg)` and iteration is
//! always in ascending order. Graphs are immutable once constructed and safe
//! to share across threads.

use std::collections::BTreeSet;
use thiserror::Error;

/// Hard cap on vertex count; the toolkit targets desk-scale verification.
pub const MAX_GRAPH_VERTICES: usize = 4096;

/// A set of vertex ids of some graph.
pub type VertexSet = BTreeSet<usize>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    LoopEdge(usize),
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    OutOfRange { id: usize, n: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("induced subgraph requires a nonempty keep set")]
    EmptyKeepSet,
}

/// Simple undirected graph: no loops, no multi-edges, no weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with the given edges, deduplicated.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_GRAPH_VERTICES {
            return Err(GraphError::InvalidParams(format!(
                "vertex count {n} exceeds cap {MAX_GRAPH_VERTICES}"
            )));
        }
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::OutOfRange { id, n });
                }
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self {
            n,
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Self::from_edge_list(n, &[]).expect("edgeless graph is always valid")
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edge_list(n, &edges)
    }

    /// Cycle C_n; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParams(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edge_list(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// The common degree, if the graph is regular. Edgeless graphs are
    /// 0-regular; the empty graph is not considered regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v].is_empty()
    }

    /// e(v, S): number of neighbors of `v` inside `S`.
    pub fn neighbor_count_in(&self, v: usize, set: &VertexSet) -> usize {
        if set.len() < self.degree(v) {
            set.iter().filter(|&&w| self.has_edge(v, w)).count()
        } else {
            self.adj[v].iter().filter(|w| set.contains(w)).count()
        }
    }

    /// e(S, T): edges with one endpoint in `S` and the other in `T`, each
    /// edge counted once (edges inside `S ∩ T` included once).
    pub fn edges_between(&self, s: &VertexSet, t: &VertexSet) -> usize {
        self.edges()
            .filter(|&(u, v)| {
                (s.contains(&u) && t.contains(&v)) || (s.contains(&v) && t.contains(&u))
            })
            .count()
    }

    /// Complement graph: u~v iff u != v and u is not adjacent to v here.
    pub fn complement(&self) -> Graph {
        let mut adj = vec![Vec::with_capacity(self.n.saturating_sub(1)); self.n];
        for u in 0..self.n {
            let mut nbrs = self.adj[u].iter().copied().peekable();
            for v in 0..self.n {
                if nbrs.peek() == Some(&v) {
                    nbrs.next();
                    continue;
                }
                if v != u {
                    adj[u].push(v);
                }
            }
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `keep`, vertices relabeled densely in ascending
    /// old-id order. Also returns the old-to-new id map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        if keep.is_empty() {
            return Err(GraphError::EmptyKeepSet);
        }
        if let Some(&id) = keep.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::OutOfRange { id, n: self.n });
        }
        let new_to_old: Vec<usize> = keep.iter().copied().collect();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut adj = vec![Vec::new(); new_to_old.len()];
        for (new, &old) in new_to_old.iter().enumerate() {
            adj[new] = self.adj[old]
                .iter()
                .filter(|w| keep.contains(w))
                .map(|&w| old_to_new[w])
                .collect();
        }
        Ok(InducedSubgraph {
            graph: Graph {
                n: new_to_old.len(),
                adj,
            },
            new_to_old,
            old_to_new,
        })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|ns| ns.iter().map(|&w| w + self.n).collect()),
        );
        Graph {
            n: self.n + other.n,
            adj,
        }
    }

    /// Tensor (Kronecker) product: (u1,u2)~(v1,v2) iff u1~v1 and u2~v2.
    /// Product vertex (v1, v2) has id `v1 * n2 + v2` (row-major).
    pub fn tensor_product(&self, other: &Graph) -> Graph {
        product_graph(self, other, |a1, a2, same1, same2| {
            let _ = (same1, same2);
            a1 && a2
        })
    }

    /// Cartesian product: adjacent iff equal in one coordinate and adjacent
    /// in the other. Row-major ids as in [`Graph::tensor_product`].
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        product_graph(self, other, |a1, a2, same1, same2| {
            (same1 && a2) || (a1 && same2)
        })
    }

    /// Strong product: union of the tensor and Cartesian edge sets.
    pub fn strong_product(&self, other: &Graph) -> Graph {
        product_graph(self, other, |a1, a2, same1, same2| {
            (a1 && a2) || (same1 && a2) || (a1 && same2)
        })
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges().collect::<Vec<_>>())?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(de)?;
        Graph::from_edge_list(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

/// Result of [`Graph::induced_subgraph`]: the relabeled graph plus both id
/// maps (`old_to_new[old] == usize::MAX` for dropped vertices).
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub new_to_old: Vec<usize>,
    pub old_to_new: Vec<usize>,
}

fn product_graph(g1: &Graph, g2: &Graph, rule: fn(bool, bool, bool, bool) -> bool) -> Graph {
    let (n1, n2) = (g1.n, g2.n);
    let n = n1 * n2;
    assert!(n <= MAX_GRAPH_VERTICES, "product graph exceeds vertex cap");
    let mut adj = vec![Vec::new(); n];
    for u1 in 0..n1 {
        for u2 in 0..n2 {
            let u = u1 * n2 + u2;
            for v1 in 0..n1 {
                let a1 = g1.has_edge(u1, v1);
                let same1 = u1 == v1;
                if !a1 && !same1 {
                    continue;
                }
                for v2 in 0..n2 {
                    if u1 == v1 && u2 == v2 {
                        continue;
                    }
                    let a2 = g2.has_edge(u2, v2);
                    let same2 = u2 == v2;
                    if rule(a1, a2, same1, same2) {
                        adj[u].push(v1 * n2 + v2);
                    }
                }
            }
            adj[u].sort_unstable();
        }
    }
    Graph { n, adj }
}

/// Row-major id of the product vertex (v1, v2).
pub fn product_index(v1: usize, n2: usize, v2: usize) -> usize {
    v1 * n2 + v2
}

/// Factor coordinates of a product vertex id.
pub fn product_pair(v: usize, n2: usize) -> (usize, usize) {
    (v / n2, v % n2)
}

/// Shape of a complete multipartite graph: distinct part sizes `n_1 > ... >
/// n_p`, each with a multiplicity `theta_i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteSpec {
    parts: Vec<(usize, usize)>,
}

impl MultipartiteSpec {
    /// Build from (size, multiplicity) pairs; sizes must be positive and
    /// strictly decreasing, multiplicities positive.
    pub fn new(parts: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::InvalidParams("empty multipartite spec".into()));
        }
        for &(size, mult) in &parts {
            if size == 0 || mult == 0 {
                return Err(GraphError::InvalidParams(
                    "part sizes and multiplicities must be positive".into(),
                ));
            }
        }
        if !parts.windows(2).all(|w| w[0].0 > w[1].0) {
            return Err(GraphError::InvalidParams(
                "part sizes must be strictly decreasing".into(),
            ));
        }
        let spec = Self { parts };
        if spec.total_vertices() > MAX_GRAPH_VERTICES {
            return Err(GraphError::InvalidParams(format!(
                "spec has {} vertices, exceeding cap {MAX_GRAPH_VERTICES}",
                spec.total_vertices()
            )));
        }
        Ok(spec)
    }

    /// Group a raw list of part sizes (any order) into a spec.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self, GraphError> {
        if sizes.is_empty() {
            return Err(GraphError::InvalidParams("no part sizes given".into()));
        }
        let mut sorted = sizes.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for s in sorted {
            match parts.last_mut() {
                Some((size, mult)) if *size == s => *mult += 1,
                _ => parts.push((s, 1)),
            }
        }
        Self::new(parts)
    }

    /// (size, multiplicity) pairs, sizes strictly decreasing.
    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    /// Number of distinct part sizes (`p`).
    pub fn distinct_sizes(&self) -> usize {
        self.parts.len()
    }

    /// Total number of parts (`sum of theta_i`).
    pub fn part_count(&self) -> usize {
        self.parts.iter().map(|&(_, m)| m).sum()
    }

    /// N: total vertex count of the realized graph.
    pub fn total_vertices(&self) -> usize {
        self.parts.iter().map(|&(s, m)| s * m).sum()
    }

    /// Part sizes repeated by multiplicity, in spec order.
    pub fn expanded_sizes(&self) -> Vec<usize> {
        self.parts
            .iter()
            .flat_map(|&(s, m)| std::iter::repeat(s).take(m))
            .collect()
    }
}

/// A realized complete multipartite graph with its part structure: vertices
/// are laid out part by part in spec order.
#[derive(Debug, Clone)]
pub struct MultipartiteGraph {
    pub graph: Graph,
    pub spec: MultipartiteSpec,
    /// Vertex ids of each part, in spec order.
    pub parts: Vec<Vec<usize>>,
    /// Part index of each vertex.
    pub part_of: Vec<usize>,
}

impl MultipartiteGraph {
    /// Index (into `spec.parts()`) of the size class of part `p`.
    pub fn size_class_of_part(&self, p: usize) -> usize {
        let mut idx = 0;
        let mut remaining = p;
        for (i, &(_, mult)) in self.spec.parts().iter().enumerate() {
            if remaining < mult {
                idx = i;
                break;
            }
            remaining -= mult;
        }
        idx
    }
}

/// Complete multipartite graph for `spec`: every pair of vertices in
/// distinct parts is joined.
pub fn complete_multipartite(spec: &MultipartiteSpec) -> MultipartiteGraph {
    let sizes = spec.expanded_sizes();
    let n = spec.total_vertices();
    let mut parts = Vec::with_capacity(sizes.len());
    let mut part_of = vec![0usize; n];
    let mut next = 0;
    for (p, &size) in sizes.iter().enumerate() {
        let members: Vec<usize> = (next..next + size).collect();
        for &v in &members {
            part_of[v] = p;
        }
        next += size;
        parts.push(members);
    }
    let mut adj = vec![Vec::with_capacity(n.saturating_sub(1)); n];
    for v in 0..n {
        for w in 0..n {
            if w != v && part_of[w] != part_of[v] {
                adj[v].push(w);
            }
        }
    }
    MultipartiteGraph {
        graph: Graph { n, adj },
        spec: spec.clone(),
        parts,
        part_of,
    }
}

/// Turán graph T(N, t): complete t-partite on N vertices with parts as equal
/// as possible (sizes ⌈N/t⌉ and ⌊N/t⌋). Requires `1 <= t <= N`.
pub fn turan(n: usize, t: usize) -> Result<MultipartiteGraph, GraphError> {
    if t == 0 || t > n {
        return Err(GraphError::InvalidParams(format!(
            "turan requires 1 <= t <= N, got t={t}, N={n}"
        )));
    }
    let small = n / t;
    let rem = n % t;
    let mut parts = Vec::new();
    if rem > 0 {
        parts.push((small + 1, rem));
    }
    if small > 0 && t - rem > 0 {
        parts.push((small, t - rem));
    }
    Ok(complete_multipartite(&MultipartiteSpec::new(parts)?))
}
