use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mesh has no triangles")]
    EmptyMesh,

    #[error("triangle {triangle} references vertex {vertex}, but the mesh has {n_vertices} vertices")]
    VertexOutOfRange {
        triangle: usize,
        vertex: usize,
        n_vertices: usize,
    },

    #[error("triangle {triangle} duplicates triangle {first}")]
    DuplicateTriangle { triangle: usize, first: usize },

    #[error("triangle {triangle} is degenerate (area {area:e})")]
    DegenerateTriangle { triangle: usize, area: f64 },

    #[error("edge ({0}, {1}) is shared by more than two triangles")]
    NonConformingMesh(usize, usize),

    #[error(
        "edge {edge} ({s}, {n}) has non-positive coefficient c_a = {value:e} \
         (opposite angles {angles:?} rad)"
    )]
    NonPositiveCoefficient {
        edge: usize,
        s: usize,
        n: usize,
        value: f64,
        angles: Vec<f64>,
    },

    #[error("edge {edge}: circumcenter distance sum {distance:e} too small, VF4 transmissivity undefined")]
    DegenerateTransmissivity { edge: usize, distance: f64 },

    #[error("point ({x}, {y}) is outside triangle {triangle}")]
    PointOutsideCell { triangle: usize, x: f64, y: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero diagonal entry in row {0}")]
    ZeroDiagonal(usize),

    #[error("conjugate gradients did not converge: {iterations} iterations, relative residual {residual:e}")]
    SolverDidNotConverge { iterations: usize, residual: f64 },

    #[error("invalid level range {min}..={max} (levels must satisfy min <= max <= {limit})")]
    InvalidLevels { min: usize, max: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
