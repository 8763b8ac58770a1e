use std::fmt::Write;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::function::{same_poset, SpecFunction};
use crate::poset::SpectralPoset;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Renders the Hasse diagram as DOT, bottom to top, one edge per cover.
///
/// Nodes sharing a height are placed on the same rank. With `annotations`,
/// nodes are labelled `name:value`.
pub fn emit_dot(poset: &Arc<SpectralPoset>, annotations: Option<&SpecFunction>) -> Result<String> {
    if let Some(f) = annotations {
        if !same_poset(poset, f.poset()) {
            return Err(Error::PosetMismatch);
        }
    }
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(poset.name())).unwrap();
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=plaintext];\n");
    for h in 0..=poset.poset_height() {
        let row: Vec<String> = poset
            .elements()
            .filter(|&e| poset.height(e) == h)
            .map(|e| quote(poset.name_of(e)))
            .collect();
        if !row.is_empty() {
            writeln!(out, "  {{ rank=same; {}; }}", row.join("; ")).unwrap();
        }
    }
    for e in poset.elements() {
        let name = poset.name_of(e);
        let label = match annotations {
            Some(f) => format!("{}:{}", name, f.get(e)),
            None => name.to_owned(),
        };
        writeln!(out, "  {} [label={}];", quote(name), quote(&label)).unwrap();
    }
    for &(lo, hi) in poset.covers() {
        writeln!(out, "  {} -> {};", quote(poset.name_of(lo)), quote(poset.name_of(hi))).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
