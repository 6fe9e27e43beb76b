//! The polytope text format.
//!
//! UTF-8, whitespace-separated, arbitrary-precision decimal integers:
//!
//! ```text
//! DIM n
//! INEQ f
//! a_1 ... a_n rhs        (f lines, meaning a . x <= rhs)
//! VERT v                 (optional)
//! x_1 ... x_n            (v lines)
//! ```

use super::{Halfspace, IntVec, SmoothPolytope};
use crate::rational::Int;
use crate::{Error, Result};

/// Parsed contents of a polytope file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeFile {
    pub dim: usize,
    pub halfspaces: Vec<Halfspace>,
    pub vertices: Option<Vec<IntVec>>,
}

fn expect<'a>(tokens: &mut impl Iterator<Item = &'a str>, what: &str) -> Result<&'a str> {
    tokens
        .next()
        .ok_or_else(|| Error::Parse(format!("unexpected end of file, expected {what}")))
}

/// Parses the text format. Blank lines are allowed anywhere.
pub fn parse_polytope_file(text: &str) -> Result<PolytopeFile> {
    let tokens = &mut text.split_whitespace();

    let tag = expect(tokens, "DIM")?;
    if tag != "DIM" {
        return Err(Error::Parse(format!("expected DIM, found {tag:?}")));
    }
    let dim: usize = expect(tokens, "dimension")?
        .parse()
        .map_err(|_| Error::Parse("bad dimension".into()))?;
    if dim == 0 {
        return Err(Error::Parse("dimension must be >= 1".into()));
    }

    let tag = expect(tokens, "INEQ")?;
    if tag != "INEQ" {
        return Err(Error::Parse(format!("expected INEQ, found {tag:?}")));
    }
    let count: usize = expect(tokens, "inequality count")?
        .parse()
        .map_err(|_| Error::Parse("bad inequality count".into()))?;
    let mut halfspaces = Vec::with_capacity(count);
    for _ in 0..count {
        let mut row = Vec::with_capacity(dim + 1);
        for _ in 0..=dim {
            let v: Int = expect(tokens, "inequality entry")?
                .parse()
                .map_err(|_| Error::Parse("bad integer in inequality".into()))?;
            row.push(v);
        }
        let rhs = row.pop().expect("rhs present");
        halfspaces.push(Halfspace::new(IntVec(row), rhs)?);
    }

    let vertices = match tokens.next() {
        None => None,
        Some("VERT") => {
            let count: usize = expect(tokens, "vertex count")?
                .parse()
                .map_err(|_| Error::Parse("bad vertex count".into()))?;
            let mut vertices = Vec::with_capacity(count);
            for _ in 0..count {
                let mut coords = Vec::with_capacity(dim);
                for _ in 0..dim {
                    let v: Int = expect(tokens, "vertex entry")?
                        .parse()
                        .map_err(|_| Error::Parse("bad integer in vertex".into()))?;
                    coords.push(v);
                }
                vertices.push(IntVec(coords));
            }
            Some(vertices)
        }
        Some(other) => return Err(Error::Parse(format!("expected VERT or end, found {other:?}"))),
    };
    if let Some(extra) = tokens.next() {
        return Err(Error::Parse(format!("trailing content {extra:?}")));
    }
    Ok(PolytopeFile {
        dim,
        halfspaces,
        vertices,
    })
}

/// Renders the text format, always including the vertex block when given.
pub fn render_polytope_file(data: &PolytopeFile) -> String {
    let mut out = String::new();
    out.push_str(&format!("DIM {}\n", data.dim));
    out.push_str(&format!("INEQ {}\n", data.halfspaces.len()));
    for h in &data.halfspaces {
        for a in &h.normal.0 {
            out.push_str(&format!("{a} "));
        }
        out.push_str(&format!("{}\n", h.rhs));
    }
    if let Some(vertices) = &data.vertices {
        out.push_str(&format!("VERT {}\n", vertices.len()));
        for v in vertices {
            let coords: Vec<String> = v.0.iter().map(|c| c.to_string()).collect();
            out.push_str(&coords.join(" "));
            out.push('\n');
        }
    }
    out
}

impl SmoothPolytope {
    /// Reads a polytope from the text format. When the vertex block is
    /// present it is trusted for the vertex set (edges are still
    /// reconstructed); otherwise vertices are enumerated from the
    /// inequalities.
    pub fn from_file_text(text: &str) -> Result<SmoothPolytope> {
        let data = parse_polytope_file(text)?;
        match data.vertices {
            Some(vertices) => {
                SmoothPolytope::from_vertices_and_halfspaces(data.dim, vertices, data.halfspaces)
            }
            None => SmoothPolytope::from_halfspaces(data.dim, data.halfspaces),
        }
    }

    /// Renders this polytope in the text format, including its vertices.
    pub fn to_file_text(&self) -> String {
        render_polytope_file(&PolytopeFile {
            dim: self.dim(),
            halfspaces: self.halfspaces().to_vec(),
            vertices: Some(self.vertices().to_vec()),
        })
    }
}
