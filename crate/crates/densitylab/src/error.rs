use thiserror::Error;

/// Errors reported by the library.
///
/// Every operation with a stated precondition reports its violation through
/// one of these variants instead of panicking, so the CLI can surface the
/// violated condition verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("color {c} out of range 1..={q}")]
    ColorOutOfRange { c: usize, q: usize },

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: String },

    #[error("edge count {m} out of range 0..={max} for n = {n}")]
    EdgeCountOutOfRange { n: usize, m: usize, max: usize },

    #[error("graph too small: need n >= {need}, have n = {n}")]
    HostTooSmall { n: usize, need: usize },

    #[error("pattern on {s} vertices exceeds the enumeration kernel limit {limit}")]
    PatternTooLarge { s: usize, limit: usize },

    #[error("parameter {name} = {value} outside {range}")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("invalid step graphon: {0}")]
    InvalidGraphon(String),

    #[error("perturbation ({i},{r},{s}) inapplicable: {reason}")]
    PerturbInapplicable {
        i: usize,
        r: usize,
        s: usize,
        reason: String,
    },

    #[error("part split preconditions unmet: {0}")]
    SplitUnavailable(String),

    #[error("function fails the convexity spot check near x = {x}")]
    NotConvex { x: f64 },

    #[error("enumeration budget exceeded: {subsets} edge subsets for (n, m) = ({n}, {m}); raise the budget explicitly")]
    EnumerationBudget { n: usize, m: usize, subsets: u128 },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
