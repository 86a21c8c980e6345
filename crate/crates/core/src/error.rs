use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid system parameters: {0}")]
    InvalidParams(String),

    #[error("{name} = {value} out of range {lo}..={hi}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("alpha = {alpha} is infeasible: functional repair needs alpha >= {min}")]
    Infeasible { alpha: String, min: String },

    #[error("region has no anchors")]
    EmptyRegion,

    #[error("small code has n_hat - k_hat = {small}, expected n - d = {expected}")]
    ParityMismatch { small: usize, expected: usize },

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("code construction failed: {0}")]
    Construction(String),

    #[error("{what} exceeds the size cap ({value} > {cap}); pass the cap override to force it")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error(
        "repair of node {failed} from helpers {helpers:?} produced wrong contents in copy {copy}"
    )]
    RepairMismatch {
        failed: usize,
        helpers: Vec<usize>,
        copy: usize,
    },

    #[error("reconstruction from nodes {positions:?} produced a wrong file in copy {copy}")]
    ReconstructMismatch { positions: Vec<usize>, copy: usize },

    #[error("bad rational {0:?}")]
    Parse(String),
}
