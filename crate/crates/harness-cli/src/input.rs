//! Reading graphs and colorings from files.
//!
//! Graph files hold either graph6 records (one per line) or a single
//! edge-list graph. The two are easy to tell apart: an edge list starts
//! with a decimal order line, and digit bytes never begin a graph6 record.

use anyhow::{bail, Context, Result};
use graph_core::{parse_edge_list, parse_graph6, Graph};
use isolation_verify::Coloring;
use serde::Deserialize;
use std::path::Path;

pub fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_graphs(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let Some(first) = first else {
        bail!("no graphs in input");
    };
    if first.bytes().all(|b| b.is_ascii_digit()) {
        let g = parse_edge_list(text)?;
        return Ok(vec![g]);
    }
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line).with_context(|| format!("graph6 record on line {}", i + 1))?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[derive(Deserialize)]
struct ColoringFile {
    m: usize,
    colors: Vec<usize>,
}

/// Reads a coloring: either JSON `{"m": 4, "colors": [1,2,...]}` or a bare
/// whitespace/comma separated list of colors (class count = largest color).
pub fn read_coloring(path: &Path) -> Result<Coloring> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_coloring(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let file: ColoringFile = serde_json::from_str(trimmed)?;
        return Coloring::new(file.colors, file.m).map_err(|e| anyhow::anyhow!("{e}"));
    }
    let colors: Vec<usize> = trimmed
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| anyhow::anyhow!("bad color {t:?}")))
        .collect::<Result<_>>()?;
    if colors.is_empty() {
        bail!("empty coloring");
    }
    let m = *colors.iter().max().unwrap();
    Coloring::new(colors, m).map_err(|e| anyhow::anyhow!("{e}"))
}
