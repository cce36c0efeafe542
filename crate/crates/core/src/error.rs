use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    VertexNotFound(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex sets are not disjoint (both contain {0})")]
    NonDisjointVertexSets(Vertex),
    #[error("fresh label {0} is already in use")]
    FreshLabelCollision(Vertex),
    #[error("graph has {n} vertices, above the search cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("graph has a single vertex")]
    TrivialGraph,
    #[error("graph needs at least three vertices")]
    TooSmall,
    #[error("constraint refers to vertex {0}, which is not in the graph")]
    ConstraintOnMissingVertex(Vertex),
    #[error("edge {0}-{1} is both required and forbidden")]
    ConflictingEdgeRequirement(Vertex, Vertex),
    #[error("search budget of {0} node expansions exhausted")]
    BudgetExceeded(u64),
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("square of the graph is not hamiltonian")]
    SquareNotHamiltonian,
    #[error("witness cycle has no edge of G at vertex {0}")]
    WitnessLacksInGEdge(Vertex),
    #[error("witness does not match: {0}")]
    WitnessMismatch(String),
    #[error("block graph is not a path")]
    BlockGraphNotPath,
    #[error("bad anchors: {0}")]
    BadAnchors(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("wrong block-graph shape: {0}")]
    WrongShape(String),
    #[error("bad generator parameters: {0}")]
    BadParams(String),
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    /// A construction produced something a theorem says cannot happen.
    #[error("internal defect: {0}")]
    Defect(String),
}
