//! DOT renderings of the two diagnostic graphs: the color-shift digraph
//! (an arc `u -> v` means recoloring `u` to its target collides with `v`'s
//! start color) and the per-color conflict graph.

use recolor_core::coloring::{color_graph, color_shift, Color, Instance};
use std::fmt::Write;

/// Renders the color-shift digraph of an instance as a DOT `digraph`.
/// Every vertex is shown with its start and target colors.
pub fn shift_digraph_dot(instance: &Instance) -> String {
    let shift = color_shift(instance.graph(), instance.alpha(), instance.beta());
    let mut out = String::from("digraph shift {\n");
    for v in 0..instance.n() {
        writeln!(
            out,
            "  {v} [label=\"{v}: {} -> {}\"];",
            instance.alpha().get(v),
            instance.beta().get(v)
        )
        .unwrap();
    }
    for &(u, v) in shift.arcs() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Renders the conflict graph of one color as a DOT `graph`: the vertices
/// holding `c` in either endpoint coloring, joined where they collide.
pub fn color_graph_dot(instance: &Instance, c: Color) -> String {
    let cg = color_graph(instance.graph(), instance.alpha(), instance.beta(), c);
    let mut out = String::new();
    writeln!(out, "graph color_{c} {{").unwrap();
    for &v in cg.vertices() {
        let side = match (instance.alpha().get(v) == c, instance.beta().get(v) == c) {
            (true, true) => "both",
            (true, false) => "start",
            (false, true) => "target",
            (false, false) => unreachable!("vertex outside its own color graph"),
        };
        writeln!(out, "  {v} [label=\"{v} ({side})\"];").unwrap();
    }
    for &(u, v) in cg.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
