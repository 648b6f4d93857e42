//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines, 0-indexed, whitespace separated)
//! ```

use std::fmt::Write as _;

use crate::graph::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        message: "missing \"n m\" header".into(),
    })?;
    let [order, count] = parse_pair(line, header)?;

    let mut edges = Vec::with_capacity(count);
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        edges.push((u, v));
    }
    if edges.len() != count {
        return Err(GraphError::Parse {
            line: 0,
            message: format!("header announces {count} edges, found {}", edges.len()),
        });
    }
    Graph::new(order, &edges)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], GraphError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::Parse {
            line,
            message: format!("expected two integers, got {text:?}"),
        });
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field.parse().map_err(|_| GraphError::Parse {
            line,
            message: format!("not a vertex index: {field:?}"),
        })?;
    }
    Ok(out)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_split, path};
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# P4\n4 3\n0 1\n\n# middle\n1 2\n2 3\n").unwrap();
        assert_eq!(g, path(4));
        assert_eq!(write_edge_list(&g), "4 3\n0 1\n1 2\n2 3\n");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_edge_list(""), Err(GraphError::Parse { .. })));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 2\n"),
            Err(GraphError::OutOfRange { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n1 1\n"),
            Err(GraphError::SelfLoop(1))
        ));
    }

    proptest! {
        #[test]
        fn round_trip(m in 0usize..6, s in 0usize..6) {
            prop_assume!(m + s > 0);
            let g = complete_split(m, s);
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
