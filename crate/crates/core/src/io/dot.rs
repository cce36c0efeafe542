//! Graphviz output. Edges of G are solid, square-only edges dashed, and
//! cycle edges drawn thick and red.

use std::fmt::Write;

use super::edge_list::EdgeListDocument;
use crate::cycle::HamCycle;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders the graph of `el`. With `square`, every square-only pair is drawn
/// too; cycle edges are drawn either way.
pub fn to_dot(el: &EdgeListDocument, square: bool, cycle: Option<&HamCycle>) -> String {
    let g = &el.graph;
    let on_cycle = |u, v| cycle.is_some_and(|c| c.contains_edge(u, v));
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(&el.name)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in g.vertices() {
        writeln!(out, "  {};", quote(&el.label(v))).unwrap();
    }
    let sq = g.square();
    for (u, v) in sq.edges() {
        let in_g = g.has_edge(u, v);
        let hot = on_cycle(u, v);
        if !in_g && !square && !hot {
            continue;
        }
        let mut attrs = vec![if in_g { "style=solid" } else { "style=dashed" }];
        if hot {
            attrs.extend(["color=red", "penwidth=2.5"]);
        }
        writeln!(
            out,
            "  {} -- {} [{}];",
            quote(&el.label(u)),
            quote(&el.label(v)),
            attrs.join(", ")
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn styles() {
        let path = Graph::from_edges([(0, 1), (1, 2)]).unwrap();
        let el = EdgeListDocument::from_graph("p", &path, |v| format!("v{v}")).unwrap();
        let plain = to_dot(&el, false, None);
        assert_eq!(plain.matches(" -- ").count(), 2);
        let sq = to_dot(&el, true, None);
        assert!(sq.contains("\"v0\" -- \"v2\" [style=dashed];"));
        let c = HamCycle::new(&el.graph, &[0, 1, 2]);
        let hot = to_dot(&el, false, Some(&c));
        assert_eq!(hot.matches("color=red").count(), 3);
        assert!(hot.contains("\"v0\" -- \"v2\" [style=dashed, color=red, penwidth=2.5];"));
    }
}
