//! Renderers for growth diagrams: the diamond ASCII layout used by the
//! paper's figures, a DOT graph, and a JSON cell listing.

use serde_json::{json, Value};

use crate::growth::GrowthDiagram;
use crate::tableau::Partition;

/// Parts concatenated without separators, `"211"`; the empty partition
/// prints as `"0"`.
pub fn compact_partition(p: &Partition) -> String {
    if p.parts().is_empty() {
        return "0".to_string();
    }
    p.parts().iter().map(|part| part.to_string()).collect()
}

/// Diamond layout with the apex `Λ_{0,n}` on top and the empty diagonal
/// along the bottom, mirroring the paper's figures.
pub fn growth_to_ascii(g: &GrowthDiagram) -> String {
    let n = g.n();
    let mut width = 1;
    for i in 0..=n {
        for j in i..=n {
            width = width.max(compact_partition(g.cell(i, j)).len());
        }
    }
    let half = width.div_ceil(2) + 1;
    let mut lines = Vec::new();
    for y in (0..=n).rev() {
        let mut line = String::new();
        for i in 0..=n - y {
            let j = i + y;
            let x = 2 * i + y;
            let cell = compact_partition(g.cell(i, j));
            let col = x * half;
            while line.len() < col {
                line.push(' ');
            }
            line.push_str(&cell);
        }
        lines.push(line.trim_end().to_string());
    }
    lines.join("\n") + "\n"
}

/// Undirected DOT graph; edges follow the two containment directions.
pub fn growth_to_dot(g: &GrowthDiagram) -> String {
    let n = g.n();
    let mut out = String::from("graph growth {\n  node [shape=plaintext];\n");
    for i in 0..=n {
        for j in i..=n {
            out.push_str(&format!(
                "  c_{i}_{j} [label=\"{}\"];\n",
                compact_partition(g.cell(i, j))
            ));
        }
    }
    for i in 0..=n {
        for j in i..=n {
            if j < n {
                out.push_str(&format!("  c_{i}_{j} -- c_{i}_{};\n", j + 1));
            }
            if i < j {
                out.push_str(&format!("  c_{i}_{j} -- c_{}_{j};\n", i + 1));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// `{n, cells: [[i, j, parts], ...]}`, row-major over `0 <= i <= j <= n`.
pub fn growth_to_json(g: &GrowthDiagram) -> Value {
    let n = g.n();
    let mut cells = Vec::new();
    for i in 0..=n {
        for j in i..=n {
            cells.push(json!([i, j, g.cell(i, j).parts()]));
        }
    }
    json!({ "n": n, "cells": cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::StandardTableau;

    fn diagram() -> GrowthDiagram {
        let q: StandardTableau = "[1 2 4][3][5]".parse().unwrap();
        GrowthDiagram::from_tableau(&q)
    }

    #[test]
    fn compact_forms() {
        assert_eq!(compact_partition(&Partition::empty()), "0");
        assert_eq!(compact_partition(&"2 1 1".parse().unwrap()), "211");
    }

    #[test]
    fn ascii_diamond_shape() {
        let text = growth_to_ascii(&diagram());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines[0].trim() == "311");
        assert_eq!(lines[5].split_whitespace().count(), 6);
        assert!(lines[5].split_whitespace().all(|c| c == "0"));
        // Λ_{1,5} = 211 sits in the second row from the top.
        assert!(lines[1].contains("211"));
    }

    #[test]
    fn json_cells() {
        let v = growth_to_json(&diagram());
        assert_eq!(v["n"], 5);
        let cells = v["cells"].as_array().unwrap();
        assert_eq!(cells.len(), 21);
        let target = cells
            .iter()
            .find(|c| c[0] == 1 && c[1] == 5)
            .expect("cell (1,5) present");
        assert_eq!(target[2], json!([2, 1, 1]));
    }

    #[test]
    fn dot_graph_contains_edges() {
        let dot = growth_to_dot(&diagram());
        assert!(dot.contains("c_0_0 -- c_0_1"));
        assert!(dot.contains("c_1_5 [label=\"211\"]"));
        assert!(dot.starts_with("graph growth {"));
    }
}
