//! Plain-text edge lists: first line the order `n`, then one `u v` pair per
//! line. Duplicate edges are tolerated.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing order line")]
    MissingOrder,
    #[error("line {line}: cannot parse {token:?} as a vertex count or index")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected `u v`, found {found} tokens")]
    WrongArity { line: usize, found: usize },
    #[error("line {line}: {source}")]
    BadEdge {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("order {n} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge { n: usize },
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (order_line, order_text) = lines.next().ok_or(EdgeListError::MissingOrder)?;
    let n: usize = order_text.parse().map_err(|_| EdgeListError::BadToken {
        line: order_line,
        token: order_text.to_string(),
    })?;
    let mut g = Graph::empty(n).map_err(|_| EdgeListError::TooLarge { n })?;

    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(EdgeListError::WrongArity {
                line,
                found: tokens.len(),
            });
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| EdgeListError::BadToken {
                line,
                token: tok.to_string(),
            })?;
        }
        g.add_edge_checked(ends[0], ends[1])
            .map_err(|source| EdgeListError::BadEdge { line, source })?;
    }
    Ok(g)
}
