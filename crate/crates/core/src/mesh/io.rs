//! Plain-text mesh format:
//!
//! ```text
//! fvpg-mesh 1
//! vertices N
//! x y            (N lines)
//! triangles M
//! i j k          (M lines, 0-based)
//! ```
//!
//! `#` starts a comment. Edges are never stored.

use std::fmt::Write as _;

use super::Triangulation;
use crate::error::{Error, Result};
use crate::geometry::Vec2;
use crate::scalar::Real;

pub const MESH_MAGIC: &str = "fvpg-mesh 1";

/// Writes vertices with the shortest representation that parses back to the
/// same value.
pub fn write_mesh<T: Real>(mesh: &Triangulation<T>) -> String {
    let mut out = String::with_capacity(32 * (mesh.n_vertices() + mesh.n_triangles()));
    out.push_str(MESH_MAGIC);
    out.push('\n');
    let _ = writeln!(out, "vertices {}", mesh.n_vertices());
    for v in mesh.vertices() {
        let _ = writeln!(out, "{} {}", v.x, v.y);
    }
    let _ = writeln!(out, "triangles {}", mesh.n_triangles());
    for t in mesh.triangles() {
        let _ = writeln!(out, "{} {} {}", t[0], t[1], t[2]);
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    /// Next non-blank line with comments stripped, with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                return Some((i + 1, line));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let last = self.last;
        self.next().ok_or_else(|| Error::Parse {
            line: last + 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(lines: &mut Lines<'_>, keyword: &str) -> Result<usize> {
    let (n, line) = lines.expect(&format!("`{keyword} <count>`"))?;
    let mut it = line.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(k), Some(count), None) if k == keyword => count
            .parse()
            .map_err(|_| parse_err(n, format!("invalid {keyword} count `{count}`"))),
        _ => Err(parse_err(n, format!("expected `{keyword} <count>`, found `{line}`"))),
    }
}

fn parse_fields<const N: usize, V: std::str::FromStr>(n: usize, line: &str, what: &str) -> Result<[V; N]> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != N {
        return Err(parse_err(n, format!("expected {N} {what}, found {}", parts.len())));
    }
    let mut out = Vec::with_capacity(N);
    for p in parts {
        out.push(
            p.parse::<V>()
                .map_err(|_| parse_err(n, format!("invalid {what} `{p}`")))?,
        );
    }
    Ok(out.try_into().ok().expect("length checked"))
}

pub fn read_mesh<T: Real>(text: &str) -> Result<Triangulation<T>> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let (n, magic) = lines.expect("header")?;
    if magic.split_whitespace().collect::<Vec<_>>() != MESH_MAGIC.split(' ').collect::<Vec<_>>() {
        return Err(parse_err(n, format!("expected `{MESH_MAGIC}`, found `{magic}`")));
    }

    let nv = parse_header(&mut lines, "vertices")?;
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (n, line) = lines.expect("vertex coordinates")?;
        let [x, y] = parse_fields::<2, T>(n, line, "coordinates")?;
        if !(x.is_finite() && y.is_finite()) {
            return Err(parse_err(n, "non-finite coordinate"));
        }
        vertices.push(Vec2::new(x, y));
    }

    let nt = parse_header(&mut lines, "triangles")?;
    let mut triangles = Vec::with_capacity(nt);
    for _ in 0..nt {
        let (n, line) = lines.expect("triangle indices")?;
        triangles.push(parse_fields::<3, usize>(n, line, "vertex indices")?);
    }
    if let Some((n, line)) = lines.next() {
        return Err(parse_err(n, format!("trailing content `{line}`")));
    }

    Triangulation::build(vertices, triangles)
}
