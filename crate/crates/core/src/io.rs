//! Edge-list text format.
//!
//! ```text
//! # nodes=3
//! 0<TAB>1
//! 1<TAB>2
//! ```
//!
//! The header gives the node count; every following line is one link as
//! `<source>\t<target>` with 0-based decimal ids. Lines end in LF and carry
//! no other whitespace. Links are written in sorted order so equal graphs
//! produce identical files.

use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::ParseError;
use crate::graph::{DirectedGraph, NodeId};

const HEADER: &str = "# nodes=";

/// Parses the edge-list format from a string.
pub fn parse_edge_list(text: &str) -> Result<DirectedGraph, ParseError> {
    read_from(text.as_bytes())
}

/// Parses the edge-list format from a buffered reader.
pub fn read_from(reader: impl BufRead) -> Result<DirectedGraph, ParseError> {
    let mut lines = reader.split(b'\n');
    let header = match lines.next() {
        Some(line) => decode(line?, 1)?,
        None => return Err(malformed(1, "missing header")),
    };
    let n = header
        .strip_prefix(HEADER)
        .and_then(parse_id)
        .ok_or_else(|| malformed(1, format!("expected `{HEADER}<N>`, found {header:?}")))?;
    let mut g = DirectedGraph::new(n).map_err(|source| ParseError::Graph { line: 1, source })?;
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        let line = decode(line?, line_no)?;
        let (u, v) = parse_link(&line).ok_or_else(|| {
            malformed(line_no, format!("expected `<source>\\t<target>`, found {line:?}"))
        })?;
        g.add_edge(u, v)
            .map_err(|source| ParseError::Graph { line: line_no, source })?;
    }
    Ok(g)
}

/// Reads an edge-list file.
pub fn read_edge_list(path: impl AsRef<Path>) -> Result<DirectedGraph, ParseError> {
    let file = fs::File::open(path)?;
    read_from(std::io::BufReader::new(file))
}

/// Renders `g` in the edge-list format.
pub fn format_edge_list(g: &DirectedGraph) -> String {
    let mut out = Vec::new();
    write_to(g, &mut out).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("edge list is ASCII")
}

/// Writes `g` in the edge-list format.
pub fn write_to(g: &DirectedGraph, mut w: impl Write) -> std::io::Result<()> {
    writeln!(w, "{HEADER}{}", g.node_count())?;
    for e in g.edges() {
        writeln!(w, "{}\t{}", e.source, e.target)?;
    }
    Ok(())
}

/// Writes an edge-list file, replacing any existing file.
pub fn write_edge_list(g: &DirectedGraph, path: impl AsRef<Path>) -> std::io::Result<()> {
    let mut w = std::io::BufWriter::new(fs::File::create(path)?);
    write_to(g, &mut w)?;
    w.flush()
}

fn decode(bytes: Vec<u8>, line: usize) -> Result<String, ParseError> {
    String::from_utf8(bytes).map_err(|_| malformed(line, "invalid UTF-8"))
}

fn parse_link(line: &str) -> Option<(NodeId, NodeId)> {
    let (u, v) = line.split_once('\t')?;
    Some((parse_id(u)?, parse_id(v)?))
}

/// Plain decimal digits only: no sign, no whitespace.
fn parse_id(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn malformed(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        msg: msg.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GraphError;

    fn line_of(err: ParseError) -> usize {
        match err {
            ParseError::Malformed { line, .. } | ParseError::Graph { line, .. } => line,
            ParseError::Io(e) => panic!("unexpected io error {e}"),
        }
    }

    #[test]
    fn reads_path_graph() {
        let g = parse_edge_list("# nodes=3\n0\t1\n1\t2\n").unwrap();
        let expected = DirectedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn writes_sorted_links() {
        let g = DirectedGraph::from_edges(4, [(2, 0), (0, 3), (0, 1)]).unwrap();
        assert_eq!(format_edge_list(&g), "# nodes=4\n0\t1\n0\t3\n2\t0\n");
    }

    #[test]
    fn header_only_and_missing_final_newline() {
        assert_eq!(parse_edge_list("# nodes=2\n").unwrap().edge_count(), 0);
        assert_eq!(parse_edge_list("# nodes=2\n0\t1").unwrap().edge_count(), 1);
    }

    #[test]
    fn self_loop_reports_its_line() {
        let err = parse_edge_list("# nodes=3\n0\t1\n0\t0\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Graph { line: 3, source: GraphError::SelfLoop(0) }
        ));
    }

    #[test]
    fn duplicate_and_range_errors() {
        let dup = parse_edge_list("# nodes=3\n0\t1\n0\t1\n").unwrap_err();
        assert!(matches!(dup, ParseError::Graph { line: 3, source: GraphError::Duplicate(0, 1) }));
        let range = parse_edge_list("# nodes=3\n0\t3\n").unwrap_err();
        assert!(matches!(range, ParseError::Graph { line: 2, .. }));
    }

    #[test]
    fn malformed_lines() {
        for (text, line) in [
            ("", 1),
            ("nodes=3\n", 1),
            ("# nodes=0\n", 1),
            ("# nodes=3 \n", 1),
            ("# nodes=3\n0 1\n", 2),
            ("# nodes=3\n0\t1\t\n", 2),
            ("# nodes=3\n0\t1\r\n", 2),
            ("# nodes=3\n0\t1\n\n", 3),
            ("# nodes=3\n-1\t1\n", 2),
            ("# nodes=3\n0\tx\n", 2),
        ] {
            let err = parse_edge_list(text).unwrap_err();
            assert_eq!(line_of(err), line, "{text:?}");
        }
    }

    #[test]
    fn file_round_trip() {
        let dir = std::env::temp_dir().join(format!("netctl-io-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("g.tsv");
        let g = DirectedGraph::from_edges(5, [(4, 0), (1, 2), (3, 1)]).unwrap();
        write_edge_list(&g, &path).unwrap();
        assert_eq!(read_edge_list(&path).unwrap(), g);
        fs::remove_dir_all(&dir).unwrap();
    }
}
