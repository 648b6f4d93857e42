use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use super::{recursive_relative, BoundInputs, BoundsError, RecursionLevel};
use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::spectral::LambdaMode;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundEntry<T> {
    pub name: &'static str,
    pub value: T,
    /// `⌊value + slack⌋`.
    pub floor: usize,
}

impl<T: Scalar> BoundEntry<T> {
    pub fn new(name: &'static str, value: T) -> Self {
        BoundEntry {
            name,
            value,
            floor: value.certified_floor(),
        }
    }
}

/// Every single-graph bound, with the inputs they were evaluated on.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport<T> {
    pub order: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub lambda: T,
    pub lambda_mode: LambdaMode,
    pub alpha_prime: usize,
    /// `hoffman`, `relative`, `gn`, `basic` in that order.
    pub entries: Vec<BoundEntry<T>>,
    pub alpha_exact: Option<usize>,
    /// Recursion levels when α′ was certified recursively, outermost first.
    pub trace: Vec<RecursionLevel<T>>,
}

/// Evaluates all bounds on `g`. Without `recursive`, α′ is the number of
/// non-maximal-degree vertices (capped by the floor of the Hoffman-type bound).
pub fn build_report<T: Scalar>(
    g: &Graph,
    mode: LambdaMode,
    recursive: bool,
) -> Result<BoundReport<T>, BoundsError> {
    let (inputs, trace) = if recursive {
        let r = recursive_relative::<T>(g, mode)?;
        (r.inputs, r.levels)
    } else {
        let base = BoundInputs::<T>::from_graph(g, mode, usize::MAX)?;
        let cap = base.hoffman_type().certified_floor();
        (
            base.with_alpha_prime(base.alpha_prime.min(cap))?,
            Vec::new(),
        )
    };
    Ok(BoundReport {
        order: g.order(),
        edge_count: g.edge_count(),
        max_degree: inputs.max_degree,
        min_degree: inputs.min_degree,
        lambda: inputs.lambda,
        lambda_mode: mode,
        alpha_prime: inputs.alpha_prime,
        entries: vec![
            BoundEntry::new("hoffman", inputs.hoffman_type()),
            BoundEntry::new("relative", inputs.relative()),
            BoundEntry::new("gn", inputs.gn_explicit()),
            BoundEntry::new("basic", inputs.basic()),
        ],
        alpha_exact: None,
        trace,
    })
}

impl<T: Scalar> BoundReport<T> {
    pub fn get(&self, name: &str) -> Option<&BoundEntry<T>> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn with_oracle(mut self, alpha: usize) -> Self {
        self.alpha_exact = Some(alpha);
        self
    }

    /// Every floor is at least the oracle value (vacuous without an oracle).
    pub fn is_sound(&self) -> bool {
        self.alpha_exact
            .is_none_or(|a| self.entries.iter().all(|e| e.floor >= a))
    }

    pub fn to_json(&self) -> Value {
        let num = |x: T| x.to_f64().map_or(Value::Null, |v| json!(v));
        let mut bounds = Map::new();
        let mut floors = Map::new();
        for e in &self.entries {
            bounds.insert(e.name.to_string(), num(e.value));
            floors.insert(e.name.to_string(), json!(e.floor));
        }
        json!({
            "n": self.order,
            "m": self.edge_count,
            "Delta": self.max_degree,
            "delta": self.min_degree,
            "lambda": num(self.lambda),
            "alpha_prime": self.alpha_prime,
            "bounds": bounds,
            "floors": floors,
            "alpha_exact": self.alpha_exact,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}", self.order).unwrap();
        writeln!(out, "m {}", self.edge_count).unwrap();
        writeln!(out, "Delta {}", self.max_degree).unwrap();
        writeln!(out, "delta {}", self.min_degree).unwrap();
        writeln!(out, "lambda {:.9}", self.lambda).unwrap();
        writeln!(out, "alpha_prime {}", self.alpha_prime).unwrap();
        for e in &self.entries {
            writeln!(out, "{} {:.9} {}", e.name, e.value, e.floor).unwrap();
        }
        match self.alpha_exact {
            Some(a) => writeln!(out, "alpha_exact {a}").unwrap(),
            None => writeln!(out, "alpha_exact -").unwrap(),
        }
        out
    }
}
