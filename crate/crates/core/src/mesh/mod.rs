//! Conforming triangulations: construction, derived edge topology, cell
//! geometry, angle checks, red refinement, generators and text I/O.
//!
//! Edges are derived from the triangle list and stored in lexicographic order
//! of `(min vertex, max vertex)`. Each edge carries an orientation `(S_a, N_a)`
//! and a unit normal `n_a` such that `det[n_a, N_a - S_a] > 0`:
//!
//! * interior edges run from the lower to the higher vertex index, and the
//!   coboundary `(K, L)` is ordered so that `n_a` points from `K` into `L`;
//! * boundary edges are flipped when needed so that `n_a` points out of the
//!   domain.

mod angles;
mod generate;
mod io;
mod refine;

pub use angles::{check_angles, AngleReport};
pub use generate::{gen_equilateral, gen_square_diagonal, Domain};
pub use io::{read_mesh, write_mesh, MESH_MAGIC};
pub use refine::refine_uniform;

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{angle_at, circumcenter, signed_area, Vec2};
use crate::scalar::Real;

/// Relative area threshold, scaled by the squared bounding-box diagonal.
pub const DEGENERATE_AREA_TOL: f64 = 1e-14;

/// Which triangles share an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coboundary {
    /// `n_a` points from the first triangle into the second.
    Interior(usize, usize),
    Boundary(usize),
}

impl Coboundary {
    /// The triangle `K` for which `n_a` is the outward normal.
    #[inline]
    pub fn first(&self) -> usize {
        match *self {
            Coboundary::Interior(k, _) | Coboundary::Boundary(k) => k,
        }
    }

    #[inline]
    pub fn is_boundary(&self) -> bool {
        matches!(self, Coboundary::Boundary(_))
    }
}

#[derive(Clone, Debug)]
pub struct Edge<T> {
    /// `(S_a, N_a)`.
    pub endpoints: [usize; 2],
    pub normal: Vec2<T>,
    pub coboundary: Coboundary,
    /// Angle of `K` at the vertex opposite the edge.
    pub opposite_angle_k: T,
    /// Same for `L`, interior edges only.
    pub opposite_angle_l: Option<T>,
    pub length: T,
}

impl<T: Real> Edge<T> {
    #[inline]
    pub fn is_boundary(&self) -> bool {
        self.coboundary.is_boundary()
    }

    /// Opposite angles of all incident triangles, `K` first.
    pub fn opposite_angles(&self) -> Vec<T> {
        std::iter::once(self.opposite_angle_k)
            .chain(self.opposite_angle_l)
            .collect()
    }
}

/// Per-triangle geometry. Local index `i` refers to vertex `W_{K,i}` and the
/// edge `a_{K,i}` opposite to it.
#[derive(Clone, Debug)]
pub struct Cell<T> {
    pub area: T,
    pub angles: [T; 3],
    pub circumcenter: Vec2<T>,
    pub diameter: T,
    pub edges: [usize; 3],
    /// `n_a . n_{K,i}`, i.e. +1 when the edge normal is outward for this cell.
    pub edge_signs: [i8; 3],
}

#[derive(Clone, Debug)]
pub struct Triangulation<T> {
    vertices: Vec<Vec2<T>>,
    triangles: Vec<[usize; 3]>,
    edges: Vec<Edge<T>>,
    cells: Vec<Cell<T>>,
    mesh_size: T,
}

impl<T: Real> Triangulation<T> {
    /// Builds a triangulation and derives its edges and geometry.
    ///
    /// Clockwise triangles are reoriented. Triangles are rejected when they
    /// repeat another triangle, when their area is below
    /// `DEGENERATE_AREA_TOL * diag^2`, or when they make the mesh
    /// non-conforming (an edge with more than two triangles, or a vertex
    /// lying inside a boundary edge).
    pub fn build(vertices: Vec<Vec2<T>>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        if triangles.is_empty() {
            return Err(Error::EmptyMesh);
        }
        let nv = vertices.len();
        for (t, tri) in triangles.iter().enumerate() {
            if let Some(&v) = tri.iter().find(|&&v| v >= nv) {
                return Err(Error::VertexOutOfRange {
                    triangle: t,
                    vertex: v,
                    n_vertices: nv,
                });
            }
        }

        let diag2 = bounding_box_diagonal_sq(&vertices);
        let area_tol = T::lit(DEGENERATE_AREA_TOL) * diag2;

        let mut triangles = triangles;
        let mut seen: HashMap<[usize; 3], usize> = HashMap::with_capacity(triangles.len());
        for (t, tri) in triangles.iter_mut().enumerate() {
            let mut key = *tri;
            key.sort_unstable();
            if let Some(&first) = seen.get(&key) {
                return Err(Error::DuplicateTriangle { triangle: t, first });
            }
            seen.insert(key, t);

            let area = signed_area(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
            if area.abs() <= area_tol || !area.is_finite() {
                return Err(Error::DegenerateTriangle {
                    triangle: t,
                    area: area.to_f64().unwrap_or(f64::NAN),
                });
            }
            if area < T::zero() {
                tri.swap(1, 2);
            }
        }

        // (min, max) -> [(cell, local index)]
        let mut incidence: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for i in 0..3 {
                let a = tri[(i + 1) % 3];
                let b = tri[(i + 2) % 3];
                incidence.entry((a.min(b), a.max(b))).or_default().push((t, i));
            }
        }

        let mut cells: Vec<Cell<T>> = triangles
            .iter()
            .map(|tri| {
                let p = tri.map(|v| vertices[v]);
                let angles = [
                    angle_at(p[0], p[1], p[2]),
                    angle_at(p[1], p[2], p[0]),
                    angle_at(p[2], p[0], p[1]),
                ];
                let diameter = (p[1] - p[0]).norm().max((p[2] - p[1]).norm()).max((p[0] - p[2]).norm());
                Cell {
                    area: signed_area(p[0], p[1], p[2]),
                    angles,
                    circumcenter: circumcenter(p[0], p[1], p[2]),
                    diameter,
                    edges: [usize::MAX; 3],
                    edge_signs: [0; 3],
                }
            })
            .collect();

        let mut edges = Vec::with_capacity(incidence.len());
        for (&(lo, hi), sides) in &incidence {
            if sides.len() > 2 {
                return Err(Error::NonConformingMesh(lo, hi));
            }
            let e = edges.len();
            let outward_sign = |&(t, i): &(usize, usize), normal: Vec2<T>| -> i8 {
                let tri = &triangles[t];
                let a = vertices[tri[(i + 1) % 3]];
                let b = vertices[tri[(i + 2) % 3]];
                if normal.dot((b - a).rot_cw()) > T::zero() {
                    1
                } else {
                    -1
                }
            };

            let mut endpoints = [lo, hi];
            let tangent = vertices[hi] - vertices[lo];
            let length = tangent.norm();
            let mut normal = tangent.rot_cw() / length;

            let mut signs: Vec<i8> = sides.iter().map(|s| outward_sign(s, normal)).collect();
            if sides.len() == 1 && signs[0] < 0 {
                endpoints.swap(0, 1);
                normal = -normal;
                signs[0] = 1;
            }
            if sides.len() == 2 && signs[0] == signs[1] {
                // both cells on the same side of the edge: folded, not a conforming mesh
                return Err(Error::NonConformingMesh(lo, hi));
            }

            let (k_side, l_side) = if sides.len() == 1 {
                (sides[0], None)
            } else if signs[0] > 0 {
                (sides[0], Some(sides[1]))
            } else {
                (sides[1], Some(sides[0]))
            };
            for (side, &sign) in sides.iter().zip(&signs) {
                cells[side.0].edges[side.1] = e;
                cells[side.0].edge_signs[side.1] = sign;
            }

            edges.push(Edge {
                endpoints,
                normal,
                coboundary: match l_side {
                    Some(l) => Coboundary::Interior(k_side.0, l.0),
                    None => Coboundary::Boundary(k_side.0),
                },
                opposite_angle_k: cells[k_side.0].angles[k_side.1],
                opposite_angle_l: l_side.map(|l| cells[l.0].angles[l.1]),
                length,
            });
        }

        check_no_hanging_vertices(&vertices, &edges)?;

        let mesh_size = cells.iter().map(|c| c.diameter).fold(T::zero(), |a, b| a.max(b));

        Ok(Self {
            vertices,
            triangles,
            edges,
            cells,
            mesh_size,
        })
    }

    #[inline]
    pub fn vertices(&self) -> &[Vec2<T>] {
        &self.vertices
    }

    #[inline]
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    #[inline]
    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    #[inline]
    pub fn cells(&self) -> &[Cell<T>] {
        &self.cells
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    #[inline]
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_boundary_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.is_boundary()).count()
    }

    /// `h_T`, the largest triangle diameter.
    #[inline]
    pub fn mesh_size(&self) -> T {
        self.mesh_size
    }

    /// Vertex coordinates of triangle `k`, in counter-clockwise order.
    #[inline]
    pub fn corners(&self, k: usize) -> [Vec2<T>; 3] {
        self.triangles[k].map(|v| self.vertices[v])
    }

    /// Sum of the cell areas.
    pub fn total_area(&self) -> T {
        self.cells.iter().map(|c| c.area).sum()
    }

    /// Barycentric coordinates of `x` with respect to triangle `k`.
    pub fn barycentric(&self, k: usize, x: Vec2<T>) -> [T; 3] {
        let [a, b, c] = self.corners(k);
        let area = self.cells[k].area;
        [
            signed_area(x, b, c) / area,
            signed_area(a, x, c) / area,
            signed_area(a, b, x) / area,
        ]
    }

    /// Containment test with a relative slack on the barycentric coordinates.
    pub fn contains(&self, k: usize, x: Vec2<T>, slack: T) -> bool {
        self.barycentric(k, x).iter().all(|&l| l >= -slack)
    }

    /// Signed distance from the circumcenter of `k` to the line of edge `e`,
    /// positive when the circumcenter lies on the same side as the cell.
    pub fn circumcenter_distance(&self, k: usize, e: usize) -> T {
        let edge = &self.edges[e];
        let local = self.cells[k]
            .edges
            .iter()
            .position(|&x| x == e)
            .expect("edge belongs to cell");
        let sign = T::from_i8(self.cells[k].edge_signs[local]).unwrap();
        let s = self.vertices[edge.endpoints[0]];
        // outward normal of k on e is sign * n_a
        -(self.cells[k].circumcenter - s).dot(edge.normal) * sign
    }
}

fn bounding_box_diagonal_sq<T: Real>(vertices: &[Vec2<T>]) -> T {
    let mut lo = Vec2::new(T::infinity(), T::infinity());
    let mut hi = Vec2::new(T::neg_infinity(), T::neg_infinity());
    for v in vertices {
        lo = Vec2::new(lo.x.min(v.x), lo.y.min(v.y));
        hi = Vec2::new(hi.x.max(v.x), hi.y.max(v.y));
    }
    if vertices.is_empty() {
        return T::zero();
    }
    (hi - lo).norm_squared()
}

/// A vertex strictly inside a boundary edge means a T-junction.
fn check_no_hanging_vertices<T: Real>(vertices: &[Vec2<T>], edges: &[Edge<T>]) -> Result<()> {
    let tol = T::lit(1e-12);
    for e in edges.iter().filter(|e| e.is_boundary()) {
        let [s, n] = e.endpoints;
        let a = vertices[s];
        let t = vertices[n] - a;
        let len2 = t.norm_squared();
        let (xmin, xmax) = (a.x.min(vertices[n].x), a.x.max(vertices[n].x));
        let (ymin, ymax) = (a.y.min(vertices[n].y), a.y.max(vertices[n].y));
        let pad = tol * e.length;
        for (v, &p) in vertices.iter().enumerate() {
            if v == s || v == n {
                continue;
            }
            if p.x < xmin - pad || p.x > xmax + pad || p.y < ymin - pad || p.y > ymax + pad {
                continue;
            }
            let d = p - a;
            let along = d.dot(t) / len2;
            let off = d.cross(t).abs() / e.length;
            if along > tol && along < T::one() - tol && off <= pad {
                return Err(Error::NonConformingMesh(s.min(n), s.max(n)));
            }
        }
    }
    Ok(())
}
