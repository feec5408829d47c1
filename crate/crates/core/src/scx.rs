//! The `.scx` complex text format: one facet per line, vertex ids separated
//! by single spaces, `#` starts a comment.

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim_end();
        if content.trim().is_empty() {
            continue;
        }
        let mut vertices = Vec::new();
        for token in content.trim_start().split(' ') {
            if token.is_empty() {
                return Err(Error::Parse { line: line_no, message: "vertex ids must be separated by single spaces".into() });
            }
            if !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse { line: line_no, message: format!("invalid vertex id {token:?}") });
            }
            let v: VertexId = token
                .parse()
                .map_err(|_| Error::Parse { line: line_no, message: format!("vertex id {token} out of range") })?;
            vertices.push(v);
        }
        let simplex = Simplex::new(vertices.clone())
            .map_err(|_| Error::Parse { line: line_no, message: format!("duplicate vertex in facet {vertices:?}") })?;
        facets.push(simplex);
    }
    if facets.is_empty() {
        return Err(Error::EmptyComplex);
    }
    SimplicialComplex::closure(facets)
}

/// Writes the facets in canonical order, one per line.
pub fn write(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in k.facets() {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let k = parse("# boundary of a triangle\n1 2\n2 3 # edge\n\n1 3\n").unwrap();
        assert_eq!(k.f_vector().0, vec![3, 3]);
        assert_eq!(write(&k), "1 2\n1 3\n2 3\n");
    }

    #[test]
    fn rejects_bad_lines() {
        assert_eq!(parse(""), Err(Error::EmptyComplex));
        assert_eq!(parse("# only comments\n"), Err(Error::EmptyComplex));
        assert!(matches!(parse("1 2\n3 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("1  2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("1 -2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("1 x\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn round_trip() {
        let k = parse("0 1 2 3\n3 4\n5\n").unwrap();
        assert_eq!(parse(&write(&k)).unwrap(), k);
    }
}
