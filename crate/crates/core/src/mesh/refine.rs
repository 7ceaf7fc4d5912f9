use super::Triangulation;
use crate::scalar::Real;

/// Red refinement: every triangle is split into four similar triangles
/// through its edge midpoints. Parent vertices keep their indices; the
/// midpoint of edge `e` becomes vertex `n_vertices + e`.
pub fn refine_uniform<T: Real>(mesh: &Triangulation<T>) -> Triangulation<T> {
    let nv = mesh.n_vertices();
    let mut vertices = Vec::with_capacity(nv + mesh.n_edges());
    vertices.extend_from_slice(mesh.vertices());
    vertices.extend(mesh.edges().iter().map(|e| {
        let [s, n] = e.endpoints;
        mesh.vertices()[s].midpoint(mesh.vertices()[n])
    }));

    let mut triangles = Vec::with_capacity(4 * mesh.n_triangles());
    for (tri, cell) in mesh.triangles().iter().zip(mesh.cells()) {
        let [v0, v1, v2] = *tri;
        let [m0, m1, m2] = cell.edges.map(|e| nv + e);
        triangles.push([v0, m2, m1]);
        triangles.push([m2, v1, m0]);
        triangles.push([m1, m0, v2]);
        triangles.push([m0, m1, m2]);
    }

    Triangulation::build(vertices, triangles).expect("refinement of a valid mesh is valid")
}
