//! Graph descriptors: `path:N`, `cycle:N`, `kbip:M,N`, `complete:N`,
//! `edges:a-b,c-d,...` and `union:(s)+(t)+...`, or the JSON form
//! `{"n": 4, "edges": [[1, 2], ...]}`.

use std::str::FromStr;

use super::{Graph, GraphError};

fn bad(s: &str, why: &str) -> GraphError {
    GraphError::Descriptor(format!("'{s}': {why}"))
}

fn number(s: &str, whole: &str) -> Result<usize, GraphError> {
    s.trim()
        .parse()
        .map_err(|_| bad(whole, &format!("'{s}' is not a number")))
}

/// Splits `(a)+(b)+(c)` into `["a", "b", "c"]`, respecting nesting.
fn union_operands<'a>(body: &'a str, whole: &str) -> Result<Vec<&'a str>, GraphError> {
    let bytes = body.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if !out.is_empty() {
            if bytes[i] != b'+' {
                return Err(bad(whole, "expected '+' between union operands"));
            }
            i += 1;
        }
        if i >= bytes.len() || bytes[i] != b'(' {
            return Err(bad(whole, "union operands must be parenthesized"));
        }
        let start = i + 1;
        let mut depth = 0usize;
        let mut end = None;
        for (k, &c) in bytes.iter().enumerate().skip(i) {
            match c {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(k);
                        break;
                    }
                }
                _ => {}
            }
        }
        let end = end.ok_or_else(|| bad(whole, "unbalanced parentheses"))?;
        out.push(&body[start..end]);
        i = end + 1;
    }
    if out.len() < 2 {
        return Err(bad(whole, "union needs at least two operands"));
    }
    Ok(out)
}

pub fn parse_descriptor(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim();
    if s.starts_with('{') {
        return serde_json::from_str(s).map_err(|e| bad(s, &e.to_string()));
    }
    let (kind, body) = s
        .split_once(':')
        .ok_or_else(|| bad(s, "missing ':' after graph kind"))?;
    match kind {
        "path" => Graph::path(number(body, s)?),
        "cycle" => Graph::cycle(number(body, s)?),
        "complete" => Graph::complete(number(body, s)?),
        "kbip" => {
            let (m, n) = body
                .split_once(',')
                .ok_or_else(|| bad(s, "kbip expects M,N"))?;
            Graph::complete_bipartite(number(m, s)?, number(n, s)?)
        }
        "edges" => {
            let mut edges = Vec::new();
            for pair in body.split(',').filter(|p| !p.trim().is_empty()) {
                let (a, b) = pair
                    .split_once('-')
                    .ok_or_else(|| bad(s, &format!("edge '{pair}' is not a-b")))?;
                edges.push((number(a, s)?, number(b, s)?));
            }
            if edges.is_empty() {
                return Err(bad(s, "edge list is empty"));
            }
            let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
            Graph::new(n, edges)
        }
        "union" => {
            let mut parts = union_operands(body, s)?.into_iter();
            let first = parse_descriptor(parts.next().expect("two operands"))?;
            parts.try_fold(
                first,
                |acc, p| Ok(acc.disjoint_union(&parse_descriptor(p)?)),
            )
        }
        _ => Err(bad(s, &format!("unknown graph kind '{kind}'"))),
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_descriptor(s)
    }
}
