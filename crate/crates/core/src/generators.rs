//! Labeled generators for the standard graph families.

use std::str::FromStr;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Empty,
    CompleteBipartite,
    /// Join of a clique `K_m` with `s` isolated vertices; clique vertices come first.
    CompleteSplit,
    /// `K_{1,n}` with the center at vertex 0.
    Star,
}

impl Family {
    pub fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite | Family::CompleteSplit => 2,
            _ => 1,
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.replace('-', "_").as_str() {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "empty" => Family::Empty,
            "complete_bipartite" => Family::CompleteBipartite,
            "complete_split" => Family::CompleteSplit,
            "star" => Family::Star,
            _ => return Err(GraphError::UnknownFamily(s.to_string())),
        })
    }
}

pub fn generate_family(family: &str, params: &[usize]) -> Result<Graph, GraphError> {
    generate(family.parse()?, params)
}

pub fn generate(family: Family, params: &[usize]) -> Result<Graph, GraphError> {
    if params.len() != family.arity() {
        return Err(GraphError::BadParams(format!(
            "{family:?} takes {} parameter(s), got {}",
            family.arity(),
            params.len()
        )));
    }
    let bad = |msg: &str| Err(GraphError::BadParams(format!("{family:?}: {msg}")));
    match family {
        Family::Path => {
            let n = params[0];
            if n < 1 {
                return bad("need n >= 1");
            }
            Ok(path(n))
        }
        Family::Cycle => {
            let n = params[0];
            if n < 3 {
                return bad("need n >= 3");
            }
            Ok(cycle(n))
        }
        Family::Complete => {
            let n = params[0];
            if n < 1 {
                return bad("need n >= 1");
            }
            Ok(complete(n))
        }
        Family::Empty => Ok(Graph::edgeless(params[0])),
        Family::CompleteBipartite => {
            let (a, b) = (params[0], params[1]);
            if a < 1 || b < 1 {
                return bad("need both parts non-empty");
            }
            Ok(complete_bipartite(a, b))
        }
        Family::CompleteSplit => {
            let (m, s) = (params[0], params[1]);
            if m + s < 1 {
                return bad("need at least one vertex");
            }
            Ok(complete_split(m, s))
        }
        Family::Star => {
            let n = params[0];
            if n < 1 {
                return bad("need at least one leaf");
            }
            Ok(complete_bipartite(1, n))
        }
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).expect("valid clique")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::new(a + b, &edges).expect("valid complete bipartite graph")
}

pub fn complete_split(m: usize, s: usize) -> Graph {
    let n = m + s;
    let edges: Vec<_> = (0..m)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).expect("valid complete split graph")
}
