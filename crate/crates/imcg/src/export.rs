use std::fmt::Write;
use std::str::FromStr;

use imcg_core::{build_connection_set, GraphSpec};

use crate::error::Error;
use crate::format::spec_to_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn export_graph(spec: &GraphSpec, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(spec),
        ExportFormat::Json => spec_to_json(spec),
    }
}

/// Undirected pairs appear once as `a -> b [dir=none]` with `a < b`; an arc
/// `a -> b` means `b - a` lies in the directed part.
pub fn to_dot(spec: &GraphSpec) -> String {
    let n = spec.n();
    let cs = build_connection_set(spec);
    let mut out = format!("digraph imcg_{n} {{\n");
    for v in 0..n {
        writeln!(out, "  {v};").unwrap();
    }
    for a in 0..n {
        for &k in cs.undirected() {
            let b = (a + k) % n;
            if a < b {
                writeln!(out, "  {a} -> {b} [dir=none];").unwrap();
            }
        }
    }
    for a in 0..n {
        for &k in cs.directed() {
            writeln!(out, "  {a} -> {};", (a + k) % n).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_matching() {
        let dot = to_dot(&GraphSpec::build(8, &[4], &[]).unwrap());
        let edges: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
        assert_eq!(
            edges,
            [
                "  0 -> 4 [dir=none];",
                "  1 -> 5 [dir=none];",
                "  2 -> 6 [dir=none];",
                "  3 -> 7 [dir=none];"
            ]
        );
    }

    #[test]
    fn empty_graph_has_isolated_nodes() {
        let dot = to_dot(&GraphSpec::build(8, &[], &[]).unwrap());
        assert_eq!(dot.lines().filter(|l| l.ends_with(';')).count(), 8);
        assert!(!dot.contains("->"));
    }

    #[test]
    fn formats_parse() {
        assert_eq!("dot".parse::<ExportFormat>().unwrap(), ExportFormat::Dot);
        assert!(matches!(
            "svg".parse::<ExportFormat>(),
            Err(Error::UnknownFormat(_))
        ));
    }
}
