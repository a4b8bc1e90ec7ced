//! Edge-list and certificate file formats.
//!
//! Edge lists are plain text: a header line `n m`, then `m` lines `u v`
//! with 0-based ids and u < v. Lines starting with `#` are comments.
//! Certificates are the JSON schema produced by `subdiv-core`.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use subdiv_core::verify::SubdivisionCertificate;
use subdiv_core::Graph;

#[derive(Debug)]
pub enum IoError {
    Io(std::io::Error),
    Parse(String),
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Io(e) => write!(f, "io error: {e}"),
            IoError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for IoError {}

impl From<std::io::Error> for IoError {
    fn from(e: std::io::Error) -> Self {
        IoError::Io(e)
    }
}

pub fn read_edge_list(path: &Path) -> Result<Graph, IoError> {
    let text = fs::read_to_string(path)?;
    parse_edge_list(&text)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| IoError::Parse("empty edge list".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), "vertex count")?;
    let m: usize = parse_field(parts.next(), "edge count")?;
    if parts.next().is_some() {
        return Err(IoError::Parse("header must be exactly 'n m'".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), "edge endpoint")?;
        let v: usize = parse_field(parts.next(), "edge endpoint")?;
        if parts.next().is_some() {
            return Err(IoError::Parse(format!("edge line '{line}' has extra fields")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(IoError::Parse(format!(
            "header promises {m} edges, file has {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges).map_err(|e| IoError::Parse(e.to_string()))
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, what: &str) -> Result<T, IoError> {
    field
        .ok_or_else(|| IoError::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| IoError::Parse(format!("bad {what}: {field:?}")))
}

pub fn write_edge_list(path: &Path, g: &Graph) -> Result<(), IoError> {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.vertex_count(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    let mut f = fs::File::create(path)?;
    f.write_all(out.as_bytes())?;
    Ok(())
}

pub fn read_certificate(path: &Path) -> Result<SubdivisionCertificate, IoError> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| IoError::Parse(e.to_string()))
}

pub fn write_certificate(path: &Path, cert: &SubdivisionCertificate) -> Result<(), IoError> {
    let text = serde_json::to_string_pretty(cert).map_err(|e| IoError::Parse(e.to_string()))?;
    fs::write(path, text + "\n")?;
    Ok(())
}

pub fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), IoError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| IoError::Parse(e.to_string()))?;
    fs::write(path, text + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::cycle(5);
        let text = {
            let mut s = String::from("5 5\n");
            for (u, v) in g.edges() {
                s.push_str(&format!("{u} {v}\n"));
            }
            s
        };
        let parsed = parse_edge_list(&text).unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# a triangle\n3 3\n\n0 1\n# middle comment\n1 2\n0 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn bad_counts_rejected() {
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
    }
}
