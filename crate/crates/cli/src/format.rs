//! Instance file format: comment lines `c ...`, a header `p bgd <n> <m>`,
//! and one `e <u> <v>` line per edge with 1-based vertex ids.

use anyhow::{bail, Context, Result};
use bgd_core::{Graph, VertexId};

pub fn parse_instance(text: &str) -> Result<Graph> {
    let mut header: Option<(u32, usize)> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_ascii_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    bail!("line {}: duplicate header", lineno + 1);
                }
                let kind = parts.next().context("missing problem kind in header")?;
                if kind != "bgd" {
                    bail!("line {}: expected problem kind 'bgd', got '{kind}'", lineno + 1);
                }
                let n: u32 = parts.next().context("missing n")?.parse()?;
                let m: usize = parts.next().context("missing m")?.parse()?;
                header = Some((n, m));
            }
            Some("e") => {
                if header.is_none() {
                    bail!("line {}: edge before header", lineno + 1);
                }
                let u: VertexId = parts.next().context("missing endpoint")?.parse()?;
                let v: VertexId = parts.next().context("missing endpoint")?.parse()?;
                edges.push((u, v));
            }
            Some(other) => bail!("line {}: unknown record '{other}'", lineno + 1),
            None => {}
        }
    }
    let (n, m) = header.context("missing 'p bgd <n> <m>' header")?;
    if edges.len() != m {
        bail!("header promises {m} edges, file has {}", edges.len());
    }
    Graph::build(n, &edges).map_err(|e| anyhow::anyhow!("{e}"))
}

/// Emits a graph whose ids are contiguous `1..=n`.
pub fn emit_instance(g: &Graph) -> Result<String> {
    let n = g.n() as u32;
    if g.vertices().zip(1..=n).any(|(v, want)| v != want) {
        bail!("emission requires contiguous ids 1..=n");
    }
    let mut out = format!("p bgd {} {}\n", n, g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    Ok(out)
}
