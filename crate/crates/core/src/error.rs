use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input. `line` and `col` are 1-based.
    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("element {element} does not belong to {group}")]
    GroupMismatch { element: String, group: String },

    #[error("translation {element} has order {order}; it must have order 1 or 2")]
    TranslationOrder { element: String, order: u64 },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("structure of size {size} exceeds the bound {bound}")]
    TooLarge { size: u128, bound: u128 },

    #[error("exhaustive check needs {needed} tuples, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("skew of element {element} is undefined: [x z x] = x has {solutions} solutions")]
    SkewUndefined { element: usize, solutions: usize },

    #[error("not a ternary group: {0}")]
    NotTernaryGroup(String),

    #[error("not a knot-theoretic ternary group: {0}")]
    NotKnotTheoretic(String),

    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    #[error("diagram has virtual crossings but no virtual operation was given")]
    MissingVirtual,

    #[error("operations are not compatible at (a,b,c,d) = {0:?}")]
    Incompatible([usize; 4]),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("unknown builtin diagram `{0}`")]
    UnknownBuiltin(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("order {n} is outside the supported range 1..={max}")]
    OrderOutOfRange { n: u64, max: u64 },

    #[error("coloring set is empty")]
    EmptyColoringSet,

    #[error("{count} colorings exceed the cap {cap}")]
    CapExceeded { count: u128, cap: u128 },

    #[error("region-wise bracket is not closed on the coloring set")]
    ClosureFailure,

    #[error("count overflows 128 bits")]
    CountOverflow,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
