//! Stable text encodings of digraphs. Both writers emit arcs in
//! ascending `(u, v)` order and end with a newline, so output is
//! bit-identical for equal inputs.

use anyhow::{bail, Context, Result};
use circulant::Digraph;
use std::fmt::Write as _;

/// Graphviz document: `digraph {`, one `  u -> v;` line per arc, `}`.
pub fn write_dot(g: &Digraph) -> String {
    let mut doc = String::from("digraph {\n");
    for (u, v) in g.arcs() {
        writeln!(doc, "  {u} -> {v};").expect("writing to a String cannot fail");
    }
    doc.push_str("}\n");
    doc
}

/// Plain edge list: first line `n m`, then one `u v` line per arc.
pub fn write_edges(g: &Digraph) -> String {
    let mut doc = format!("{} {}\n", g.vertex_count(), g.arc_count());
    for (u, v) in g.arcs() {
        writeln!(doc, "{u} {v}").expect("writing to a String cannot fail");
    }
    doc
}

/// Parses the [`write_edges`] format back into a digraph; round-trips
/// exactly.
pub fn parse_edges(doc: &str) -> Result<Digraph> {
    let mut lines = doc.lines();
    let header = lines.next().context("missing `n m` header line")?;
    let mut parts = header.split(' ');
    let n: usize = parts
        .next()
        .context("missing vertex count")?
        .parse()
        .context("bad vertex count")?;
    let m: usize = parts
        .next()
        .context("missing arc count")?
        .parse()
        .context("bad arc count")?;
    if parts.next().is_some() {
        bail!("trailing tokens in header line");
    }

    let mut arcs = Vec::with_capacity(m);
    for line in lines {
        let mut parts = line.split(' ');
        let u: usize = parts
            .next()
            .context("missing arc source")?
            .parse()
            .with_context(|| format!("bad arc line {line:?}"))?;
        let v: usize = parts
            .next()
            .context("missing arc target")?
            .parse()
            .with_context(|| format!("bad arc line {line:?}"))?;
        if parts.next().is_some() {
            bail!("trailing tokens in arc line {line:?}");
        }
        arcs.push((u, v));
    }
    if arcs.len() != m {
        bail!("header claims {m} arcs, found {}", arcs.len());
    }
    Digraph::new(n, arcs).map_err(Into::into)
}
