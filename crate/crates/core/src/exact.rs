//! Exact maximum independent sets by branch and bound.
//!
//! Branching is deterministic: the lowest-id vertex of maximum remaining degree
//! is first included (dropping its closed neighborhood), then excluded.
//! Vertices of remaining degree at most one are taken without branching.
//! A node is pruned when `current + remaining ≤ best`.

use crate::graph::{Graph, GraphError, VertexSubset};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub alpha: usize,
    pub witness: VertexSubset,
    pub nodes_explored: u64,
    /// `false` when the node budget ran out; `alpha` is then only a lower bound.
    pub exhausted: bool,
}

pub fn is_independent(g: &Graph, s: &VertexSubset) -> Result<bool, GraphError> {
    if let Some(&v) = s.members().iter().find(|&&v| v >= g.order()) {
        return Err(GraphError::OutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(s.members()
        .iter()
        .all(|&u| g.neighbors(u).iter().all(|&w| !s.contains(w))))
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn intersection_count(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn subtract(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                (word != 0).then(|| {
                    let bit = word.trailing_zeros() as usize;
                    word &= word - 1;
                    i * 64 + bit
                })
            })
        })
    }
}

struct Search {
    // Closed neighborhoods.
    closed: Vec<Bits>,
    open: Vec<Bits>,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Search {
    fn run(&mut self, mut remaining: Bits) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }

        let mark = self.current.len();
        loop {
            let low = remaining
                .iter()
                .find(|&v| self.open[v].intersection_count(&remaining) <= 1);
            let Some(v) = low else { break };
            self.current.push(v);
            remaining.subtract(&self.closed[v]);
        }

        let left = remaining.count();
        if self.current.len() + left > self.best.len() {
            if left == 0 {
                self.best = self.current.clone();
            } else {
                let mut pivot = None;
                let mut pivot_degree = 0;
                for v in remaining.iter() {
                    let d = self.open[v].intersection_count(&remaining);
                    if pivot.is_none() || d > pivot_degree {
                        pivot = Some(v);
                        pivot_degree = d;
                    }
                }
                let v = pivot.expect("remaining set is non-empty");

                let mut with = remaining.clone();
                with.subtract(&self.closed[v]);
                self.current.push(v);
                self.run(with);
                self.current.pop();

                remaining.remove(v);
                self.run(remaining);
            }
        }
        self.current.truncate(mark);
    }
}

pub fn max_independent_set(g: &Graph, node_budget: u64) -> ExactResult {
    let n = g.order();
    let open: Vec<Bits> = (0..n)
        .map(|v| {
            let mut b = Bits::empty(n);
            g.neighbors(v).iter().for_each(|&w| b.insert(w));
            b
        })
        .collect();
    let closed = open
        .iter()
        .enumerate()
        .map(|(v, b)| {
            let mut c = b.clone();
            c.insert(v);
            c
        })
        .collect();
    let mut search = Search {
        closed,
        open,
        current: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        budget: node_budget.max(1),
        aborted: false,
    };
    search.run(Bits::full(n));
    let witness = VertexSubset::new(n, search.best).expect("witness vertices are in range");
    ExactResult {
        alpha: witness.len(),
        witness,
        nodes_explored: search.nodes,
        exhausted: !search.aborted,
    }
}
