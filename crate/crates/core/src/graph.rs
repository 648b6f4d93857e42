//! Simple undirected graphs and the combinatorial operators used by the bounds:
//! degree profiles, induced and derived subgraphs, cones and cartesian products.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("OutOfRange: vertex {vertex} is not below the order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("SelfLoop: edge ({0}, {0}) is a loop")]
    SelfLoop(usize),
    #[error("EmptyGraph: the graph has no vertices")]
    EmptyGraph,
    #[error("UnknownFamily: {0}")]
    UnknownFamily(String),
    #[error("BadParams: {0}")]
    BadParams(String),
    #[error("ParseError: line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A simple undirected graph on the vertices `0..order`.
///
/// Edges are stored normalized (`u < v`), sorted and deduplicated; adjacency
/// lists are sorted. Two graphs compare equal iff they have the same order and
/// the same edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(order: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::OutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_normalized(order, edges))
    }

    /// The graph on `order` vertices with no edges.
    pub fn edgeless(order: usize) -> Self {
        Self::from_normalized(order, Vec::new())
    }

    // `edges` must already be normalized, sorted and deduplicated.
    fn from_normalized(order: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            order,
            edges,
            adjacency,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degrees(&self) -> Result<DegreeProfile, GraphError> {
        DegreeProfile::of(self)
    }

    pub fn is_regular(&self) -> bool {
        self.degrees().map(|p| p.is_regular()).unwrap_or(true)
    }

    /// Number of connected components (0 for the empty graph).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut stack = Vec::new();
        let mut count = 0;
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Subgraph induced by `subset`, relabeled in ascending original order.
    pub fn induced_subgraph(&self, subset: &VertexSubset) -> Result<Graph, GraphError> {
        if subset.order() != self.order {
            if let Some(&v) = subset.members().iter().find(|&&v| v >= self.order) {
                return Err(GraphError::OutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
        }
        let mut relabel = vec![usize::MAX; self.order];
        for (new, &old) in subset.members().iter().enumerate() {
            relabel[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (relabel[u], relabel[v]);
                (a != usize::MAX && b != usize::MAX).then_some((a, b))
            })
            .collect();
        // Relabeling is monotone, so normalized sorted edges stay normalized sorted.
        Ok(Graph::from_normalized(subset.len(), edges))
    }

    /// The derived graph: the subgraph induced by the vertices of non-maximal
    /// degree, together with the map from new to original vertex ids.
    pub fn derived_graph(&self) -> Result<(Graph, Vec<usize>), GraphError> {
        let profile = self.degrees()?;
        let keep: Vec<usize> = (0..self.order)
            .filter(|&v| profile.degrees[v] < profile.max_degree)
            .collect();
        let subset = VertexSubset::new(self.order, keep.clone())?;
        Ok((self.induced_subgraph(&subset)?, keep))
    }

    /// Adds an apex vertex (index `order`) joined to every original vertex.
    pub fn cone(&self) -> Result<Graph, GraphError> {
        if self.order == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let apex = self.order;
        let mut edges = self.edges.clone();
        edges.extend((0..apex).map(|v| (v, apex)));
        edges.sort_unstable();
        Ok(Graph::from_normalized(apex + 1, edges))
    }

    /// Cartesian product; vertex `(x, y)` has index `x * other.order() + y`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.order;
        let mut edges = Vec::with_capacity(self.order * other.edge_count() + m * self.edge_count());
        for x in 0..self.order {
            for &(y1, y2) in &other.edges {
                edges.push((x * m + y1, x * m + y2));
            }
        }
        for &(x1, x2) in &self.edges {
            for y in 0..m {
                edges.push((x1 * m + y, x2 * m + y));
            }
        }
        edges.sort_unstable();
        Graph::from_normalized(self.order * m, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_normalized(self.order + other.order, edges)
    }
}

/// Degree sequence with its extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Result<Self, GraphError> {
        let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
        let min_degree = *degrees.iter().min().ok_or(GraphError::EmptyGraph)?;
        let max_degree = *degrees.iter().max().ok_or(GraphError::EmptyGraph)?;
        Ok(DegreeProfile {
            degrees,
            min_degree,
            max_degree,
        })
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree == self.max_degree
    }

    /// Number of vertices whose degree is below the maximum.
    pub fn non_maximal_count(&self) -> usize {
        self.degrees
            .iter()
            .filter(|&&d| d < self.max_degree)
            .count()
    }
}

/// A sorted, duplicate-free set of vertices of a graph of a given order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    order: usize,
    members: Vec<usize>,
}

impl VertexSubset {
    pub fn new(order: usize, mut members: Vec<usize>) -> Result<Self, GraphError> {
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.last() {
            if v >= order {
                return Err(GraphError::OutOfRange { vertex: v, order });
            }
        }
        Ok(VertexSubset { order, members })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}
