use thiserror::Error;

/// Errors raised by plane graph validation and surgery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("asymmetric rotation: {0} lists {1} but {1} does not list {0} with equal multiplicity")]
    AsymmetricRotation(usize, usize),
    #[error("duplicate neighbor {1} in rotation of {0}")]
    DuplicateNeighbor(usize, usize),
    #[error("Euler violation: component with {vertices} vertices, {edges} edges traces {faces} faces")]
    EulerViolation {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("no face of index {0}")]
    NoSuchFace(usize),
    #[error("vertices {0} and {1} are adjacent; identification would create a loop")]
    AdjacentIdentification(usize, usize),
    #[error("{0} and {1} are not both neighbors of {2}")]
    NotCommonNeighbors(usize, usize, usize),
    #[error("identification of {0} and {1} admits no planar re-insertion of {2}")]
    NonPlanarIdentification(usize, usize, usize),
    #[error("gadget attachment violates the cyclic order of the face")]
    AttachmentOrder,
    #[error("apex insertion requires a simple face boundary")]
    NonSimpleFace,
}

/// Errors raised by coloring and sequence machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {0} entries for a graph on {1} vertices")]
    WrongLength(usize, usize),
    #[error("color {0} outside palette 1..={1}")]
    ColorOutOfRange(usize, usize),
    #[error("coloring is not proper: edge {0}-{1} is monochromatic")]
    NotProper(usize, usize),
    #[error("move at {0}: target color equals current color {1}")]
    NoOpMove(usize, usize),
    #[error("move {index} invalid: {reason}")]
    BadMove { index: usize, reason: String },
    #[error("sequence ends at a coloring different from the target (first difference at vertex {0})")]
    EndMismatch(usize),
}

/// Errors raised by the reduction pipeline and the top-level algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgoError {
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("coloring error: {0}")]
    Coloring(#[from] ColoringError),
    #[error("edge {0}-{1} does not lie in two triangles")]
    NotInteriorEdge(usize, usize),
    #[error("graph is not a triangulation")]
    NotTriangulation,
    #[error("graph is not 3-colorable")]
    NotThreeColorable,
    #[error("coloring solver exceeded its node budget")]
    SolverBudget,
    #[error("enumeration cap exceeded ({0} colorings)")]
    CapExceeded(usize),
    #[error("coloring not present in the reconfiguration graph")]
    UnknownColoring,
    #[error("colorings lie in different components of the reconfiguration graph")]
    Unreachable,
    #[error("claimed property failed: {0}")]
    PaperViolation(String),
}

impl AlgoError {
    /// Hard assertion for properties the source results guarantee. Failure is
    /// evidence against the claim, so it is reported rather than panicking.
    pub fn violation(msg: impl Into<String>) -> Self {
        AlgoError::PaperViolation(msg.into())
    }
}
