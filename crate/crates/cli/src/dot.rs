//! Deterministic DOT emission of an AR-quiver window.
//!
//! Nodes are the objects (vertex, twist) with 0 ≤ twist < window; solid
//! edges are the mesh arrows of ℤQ, dotted undirected edges join
//! τ-translates. Twist grows leftward under `rankdir=LR` because every
//! solid arrow weakly decreases it, matching the usual pictures.

use std::collections::BTreeSet;
use std::fmt::Write;

use ctforge_core::diagram::Quiver;

pub fn emit(quiver: &Quiver, window: i64, marked: &BTreeSet<(usize, i64)>) -> String {
    let mut out = String::new();
    let diagram = quiver.diagram();
    writeln!(out, "digraph \"{}\" {{", diagram).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for v in 1..=quiver.rank() {
        for l in (0..window).rev() {
            let style = if marked.contains(&(v, l)) {
                ", style=filled, fillcolor=black, fontcolor=white"
            } else {
                ""
            };
            writeln!(out, "  \"{v}_{l}\" [label=\"({v},{l})\"{style}];").unwrap();
        }
    }
    let mut edges: Vec<(String, String, bool)> = Vec::new();
    for &(u, v) in quiver.arrows() {
        for l in 0..window {
            // Mesh arrows: (v, l) → (u, l) and (u, l) → (v, l−1).
            edges.push((format!("{v}_{l}"), format!("{u}_{l}"), false));
            if l > 0 {
                edges.push((format!("{u}_{l}"), format!("{v}_{}", l - 1), false));
            }
        }
    }
    for v in 1..=quiver.rank() {
        for l in 1..window {
            edges.push((format!("{v}_{l}"), format!("{v}_{}", l - 1), true));
        }
    }
    edges.sort();
    for (src, dst, dotted) in edges {
        let attrs = if dotted {
            " [style=dotted, dir=none]"
        } else {
            ""
        };
        writeln!(out, "  \"{src}\" -> \"{dst}\"{attrs};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
