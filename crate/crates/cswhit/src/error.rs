use crate::rootdata::Coweight;
use thiserror::Error;

/// Unified error type for every fallible operation in the crate.
///
/// Validation failures carry enough context to reconstruct the offending
/// input; consistency failures indicate an internal identity that must hold
/// did not, which is always a bug worth a report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),

    #[error("rank {rank} exceeds the configured cap {cap}")]
    RankCap { rank: usize, cap: usize },

    #[error("Weyl group enumeration exceeded the cap of {cap} elements")]
    WeylCap { cap: usize },

    #[error("coweight {0} is not dominant")]
    NotDominant(Coweight),

    #[error("coweight {0} is not quasi-minuscule")]
    NotQuasiMinuscule(Coweight),

    #[error("coweight {0} is not a minimal dominant cocharacter")]
    NotMinimal(Coweight),

    #[error("bounded search exhausted while decomposing {0}")]
    SearchExhausted(Coweight),

    #[error("step {index} is not a weight of the step representation")]
    StepNotInOmega { index: usize },

    #[error("zero step {index} needs a simple-root choice and none was given")]
    MissingRootChoice { index: usize },

    #[error("root chosen at step {index} is not Weyl-conjugate to the required root")]
    RootNotConjugate { index: usize },

    #[error("step {index} is nonzero and admits no root choice")]
    SpuriousRootChoice { index: usize },

    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("cycle space is empty: {nu} is not a weight of the representation of {lambda}")]
    EmptyMv { lambda: Coweight, nu: Coweight },

    #[error("half-integral dimension pairing; {0} is odd")]
    NonIntegralDimension(i64),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("two twists meet in degree {degree}: {left} vs {right} half-twists")]
    TwistClash { degree: i64, left: i64, right: i64 },

    #[error("strata degrees mix parities; collapse is not defined")]
    ParityViolation,

    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),

    #[error("unknown fixture key {0:?}")]
    UnknownFixture(String),

    #[error("fixture file {path}: {source}")]
    FixtureIo {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("fixture file {path}: {source}")]
    FixtureJson {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
