//! Text and JSON serialization: the edge-list graph format and the JSON
//! sidecar for polygraphs.
//!
//! Edge-list format: line 1 is "n d", then one "u v" pair per line with
//! u < v in ascending lexicographic order; UTF-8, LF line endings.

use crate::error::{Error, Result};
use crate::graph::RegularGraph;
use crate::polygraph::Polygraph;
use serde::Serialize;

pub const SCHEMA: &str = "polygraph-lab/1";

pub fn write_edge_list(g: &RegularGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.d());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<RegularGraph> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), "n")?;
    let d: usize = parse_field(parts.next(), "d")?;
    if parts.next().is_some() {
        return Err(Error::Parse("header must be exactly \"n d\"".into()));
    }
    let mut edges = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), "u")?;
        let v: usize = parse_field(parts.next(), "v")?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!("line {}: expected \"u v\"", i + 2)));
        }
        if u >= v {
            return Err(Error::Parse(format!("line {}: edges must have u < v", i + 2)));
        }
        edges.push((u, v));
    }
    let g = RegularGraph::build_from_edge_list(n, &edges)?;
    if g.d() != d {
        return Err(Error::Parse(format!(
            "header degree {d} but graph is {}-regular",
            g.d()
        )));
    }
    Ok(g)
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, name: &str) -> Result<T> {
    field
        .ok_or_else(|| Error::Parse(format!("missing field {name}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("invalid field {name}")))
}

/// JSON sidecar describing how a polygraph was constructed.
#[derive(Debug, Clone, Serialize)]
pub struct PolygraphSidecar {
    pub schema: &'static str,
    pub base: String,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub a_s: u64,
    pub b_s: Option<u64>,
    pub girth_safe: bool,
}

pub fn polygraph_sidecar(p: &Polygraph, base_name: &str) -> PolygraphSidecar {
    PolygraphSidecar {
        schema: SCHEMA,
        base: base_name.to_string(),
        s: p.s().entries().to_vec(),
        a_s: p.a_s(),
        b_s: p.b_s(),
        girth_safe: p.girth_safe(),
    }
}

/// Wraps any serializable report with the schema tag.
pub fn to_schema_json<T: Serialize>(kind: &str, body: &T) -> String {
    let mut value = serde_json::json!({
        "schema": SCHEMA,
        "kind": kind,
    });
    let b = serde_json::to_value(body).expect("report serialization");
    if let (Some(obj), serde_json::Value::Object(map)) = (value.as_object_mut(), b) {
        for (k, v) in map {
            obj.insert(k, v);
        }
    }
    serde_json::to_string_pretty(&value).expect("json encoding")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn round_trip() {
        for g in [
            graph::petersen(),
            graph::icosahedron(),
            graph::cycle(7).unwrap(),
            graph::random_regular_high_girth(60, 3, 6, 5, 50_000).unwrap(),
        ] {
            let text = write_edge_list(&g);
            let h = parse_edge_list(&text).unwrap();
            assert_eq!(g.n(), h.n());
            assert_eq!(g.d(), h.d());
            assert_eq!(text, write_edge_list(&h));
        }
    }

    #[test]
    fn format_shape() {
        let text = write_edge_list(&graph::cycle(4).unwrap());
        assert_eq!(text, "4 2\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn parse_rejections() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n").is_err());
        assert!(parse_edge_list("3 2\n1 0\n").is_err()); // u >= v
        assert!(parse_edge_list("3 2\n0 1\n0 2\n").is_err()); // not 2-regular
        assert!(parse_edge_list("4 2\n0 1\n0 3\n1 2\n2 3\n2 3\n").is_err()); // dup
        assert!(parse_edge_list("x 2\n").is_err());
    }

    #[test]
    fn sidecar_and_schema() {
        let p = crate::polygraph::build_polygraph(
            &graph::petersen(),
            &crate::polygraph::DistanceMultiset::new(vec![1, 1, 0]).unwrap(),
        )
        .unwrap();
        let sidecar = polygraph_sidecar(&p, "petersen");
        let json = to_schema_json("polygraph", &sidecar);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["schema"], "polygraph-lab/1");
        assert_eq!(v["a_s"], 27);
        assert_eq!(v["b_s"], 6);
        assert_eq!(v["S"].as_array().unwrap().len(), 3);
        assert_eq!(v["girth_safe"], true);
    }
}
