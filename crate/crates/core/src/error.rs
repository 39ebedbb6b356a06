use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("invalid parameter {param} for {kind}: {reason}")]
    InvalidParam {
        kind: &'static str,
        param: u64,
        reason: &'static str,
    },
    #[error("order {order} exceeds the order cap {cap}")]
    ExceedsCap { order: u64, cap: usize },
    #[error("invalid twist k={k} for C{n}:C{m} (need gcd(k,n)=1 and k^m = 1 mod n)")]
    InvalidTwist { n: u64, m: u64, k: u64 },
    #[error("element {element} out of range for group of order {order}")]
    OutOfRange { element: usize, order: usize },
    #[error("subgroup is not normal: conjugation by {element} leaves it")]
    NotNormal { element: usize },
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("{what}: size {size} exceeds threshold {threshold}")]
    ExceedsThreshold {
        what: &'static str,
        size: usize,
        threshold: usize,
    },
    #[error("operation requires a nonabelian group")]
    AbelianInput,
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
