//! Whitespace-separated edge lists with `#` comments and an optional `n=<int>` header.
//!
//! Without a header, vertex tokens are compacted to `0..n`: numerically when
//! every token is an integer, otherwise in order of first appearance. The
//! original tokens are kept as labels whenever compaction renames a vertex.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut pairs: Vec<(String, String, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if declared.is_some() || !pairs.is_empty() {
                return Err(parse_error(lineno, "header must precede all edges"));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| parse_error(lineno, format!("bad vertex count {rest:?}")))?;
            declared = Some(n);
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(lineno, format!("expected two vertices, found {}", tokens.len())));
        }
        pairs.push((tokens[0].to_string(), tokens[1].to_string(), lineno));
    }

    if let Some(n) = declared {
        let mut edges = Vec::with_capacity(pairs.len());
        for (a, b, lineno) in &pairs {
            let id = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| parse_error(*lineno, format!("vertex {t:?} is not an integer")))
            };
            edges.push((id(a)?, id(b)?));
        }
        return build_graph(n, &edges);
    }

    if pairs.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let all_numeric = pairs
        .iter()
        .all(|(a, b, _)| a.parse::<u64>().is_ok() && b.parse::<u64>().is_ok());
    let order: Vec<String> = if all_numeric {
        let ids: BTreeSet<u64> = pairs
            .iter()
            .flat_map(|(a, b, _)| [a.parse().unwrap(), b.parse().unwrap()])
            .collect();
        ids.into_iter().map(|x| x.to_string()).collect()
    } else {
        let mut seen = Vec::new();
        for (a, b, _) in &pairs {
            for t in [a, b] {
                if !seen.contains(t) {
                    seen.push(t.clone());
                }
            }
        }
        seen
    };
    let index: HashMap<&str, usize> = order.iter().enumerate().map(|(i, t)| (t.as_str(), i)).collect();
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .map(|(a, b, _)| (index[a.as_str()], index[b.as_str()]))
        .collect();
    let g = build_graph(order.len(), &edges)?;
    let renamed = order.iter().enumerate().any(|(i, t)| *t != i.to_string());
    Ok(if renamed { g.with_labels(order) } else { g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path};

    #[test]
    fn examples() {
        assert_eq!(parse_edgelist("0 1\n1 2").unwrap(), path(3));
        assert_eq!(parse_edgelist("0 1\n0 1").unwrap_err(), Error::DuplicateEdge(0, 1));
        assert_eq!(parse_edgelist("# comment\nn=2\n0 1").unwrap(), complete(2));
    }

    #[test]
    fn compaction_and_errors() {
        let g = parse_edgelist("10 30\n30 20\n").unwrap();
        assert_eq!(g.labels().unwrap(), ["10", "20", "30"]);
        assert!(g.has_edge(0, 2) && g.has_edge(1, 2));
        let g = parse_edgelist("a b # trailing\nb c\n").unwrap();
        assert_eq!(g.label(2), "c");
        assert!(matches!(
            parse_edgelist("0 1\n1 2 3\n"),
            Err(Error::ParseError { line: 2, .. })
        ));
        assert!(matches!(
            parse_edgelist("n=3\n0 x\n"),
            Err(Error::ParseError { line: 2, .. })
        ));
        assert_eq!(parse_edgelist("n=3\n0 1\n").unwrap_err(), Error::Disconnected { unreached: 2 });
    }
}
