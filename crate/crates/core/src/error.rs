use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeshError {
    #[error("malformed mesh file: {0}")]
    Parse(String),
    #[error("vertex {vertex}: malformed rational coordinate {text:?}")]
    BadRational { vertex: usize, text: String },
    #[error("mesh has no triangles")]
    Empty,
    #[error("triangle {triangle}: vertex index {index} out of range (mesh has {vertex_count} vertices)")]
    IndexOutOfRange { triangle: usize, index: usize, vertex_count: usize },
    #[error("triangle {triangle} {vertices:?} is degenerate")]
    DegenerateTriangle { triangle: usize, vertices: [usize; 3] },
    #[error("vertices {first} and {second} coincide")]
    DuplicateVertex { first: usize, second: usize },
    #[error("triangles {first} and {second} have the same vertices")]
    DuplicateTriangle { first: usize, second: usize },
    #[error("edge {edge:?} is shared by more than two triangles {triangles:?}")]
    NonManifoldEdge { edge: [usize; 2], triangles: Vec<usize> },
    #[error("vertex {vertex} belongs to no triangle")]
    UnusedVertex { vertex: usize },
    #[error("edge {edge:?}: adjacent triangles lie on the same side")]
    FoldedEdge { edge: [usize; 2] },
    #[error("boundary is not a simple cycle at vertex {vertex}")]
    BoundaryNotSimple { vertex: usize },
    #[error("boundary is disconnected: cycle of {cycle_len} out of {boundary_vertices} boundary vertices")]
    DisconnectedBoundary { cycle_len: usize, boundary_vertices: usize },
    #[error("mesh has no boundary")]
    NoBoundary,
    #[error("triangles around vertex {vertex} do not form a single fan")]
    NonManifoldVertex { vertex: usize },
    #[error("Euler characteristic V - E + F = {vertices} - {edges} + {triangles} is not 1")]
    EulerCharacteristic { vertices: usize, edges: usize, triangles: usize },
    #[error("vertex {vertex} lies on the boundary")]
    BoundaryVertex { vertex: usize },
    #[error("no vertex {vertex}")]
    NoSuchVertex { vertex: usize },
    #[error("unknown bundled mesh {0:?}")]
    UnknownMesh(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("the zero form has no multiplication matrix")]
    ZeroForm,
    #[error("slope count {0} is below 2")]
    TooFewSlopes(usize),
    #[error("degree range is empty")]
    EmptyRange,
    #[error("parameter j must be at least 1")]
    BadJ,
    #[error(transparent)]
    Mesh(#[from] MeshError),
}
