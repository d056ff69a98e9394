use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("unknown catalog system '{0}'")]
    UnknownSystem(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("not finite type: root generation exceeded the safety bound")]
    NotFiniteType,
    #[error("improper coloring: vertices {0} and {1} are linked with the same color")]
    ImproperColoring(usize, usize),
    #[error("vertex index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("vertex {0} has the wrong color for this factor")]
    WrongColor(usize),
    #[error("element order exceeds the cap; input is not of finite type")]
    OrderCapExceeded,
    #[error("ansatz inapplicable: order {0} is not divisible by 4")]
    AnsatzInapplicable(usize),
    #[error("rank {0} exceeds the scan guard of {1}; pass the override flag to proceed")]
    RankGuard(usize, usize),
    #[error("singular sample point: (root . q) = 0 for root {0}")]
    SingularSamplePoint(String),
    #[error("cannot render root with mixed signs: {0}")]
    MixedSignRoot(String),
    #[error("cannot parse orbit-table cell '{0}'")]
    BadCell(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
