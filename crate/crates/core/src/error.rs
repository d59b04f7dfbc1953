use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("radicand must be negative, got {0}")]
    RadicandNotNegative(i64),
    #[error("radicand {0} is not squarefree")]
    RadicandNotSquarefree(i64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p must be an odd prime, got {0}")]
    PNotOddPrime(u64),
    #[error("denominator of the element is not invertible modulo {ell}")]
    DenominatorNotInvertible { ell: u64 },
    #[error("element reduces to zero at the place over {ell}")]
    ZeroResidue { ell: u64 },
    #[error("residue is not a p-th root of unity (p = {p})")]
    NotInMuP { p: u64 },
    #[error("no p-th roots of unity at the place over {ell}: p = {p} does not divide q - 1")]
    MuPUnavailable { ell: u64, p: u64 },
    #[error("class group has p-rank {p_rank} at p = {p}; this pipeline requires p-rank 1")]
    PRankNotOne { p: u64, p_rank: u32 },
    #[error("no degree-one prime generating the class group modulo p below the scan bound")]
    GeneratorScanExhausted,
    #[error("ideal is not principal")]
    NotPrincipal,
    #[error("class-group discrete log unexpectedly missing (internal error)")]
    DlogNotFound,
    #[error("place over {ell} has norm {q} which is not 1 mod p = {p}")]
    NormNotOneModP { ell: u64, q: u128, p: u64 },
    #[error("place over {ell} is ramified; S must avoid ramified places")]
    RamifiedPlaceInS { ell: u64 },
    #[error("place over {ell} is p-adic; S must avoid places over p")]
    PAdicPlaceInS { ell: u64 },
    #[error("duplicate place over {ell} in S")]
    DuplicatePlace { ell: u64 },
    #[error("generator of a place in S meets another place of S; S is malformed")]
    MalformedS,
    #[error("no place of S is singular; the generator/relation ranks are not pinned")]
    NoSingularPlace,
    #[error("|S| = {d} but the certificate requires an even cardinality of at least 4")]
    BadCardinality { d: usize },
    #[error("|S| = {d} exceeds the ordering-search cap of 10")]
    CardinalityTooLarge { d: usize },
    #[error("the four-place criterion requires exactly 4 places, got {got}")]
    NotFourPlaces { got: usize },
    #[error("cup-product trace requires two distinct generator labels")]
    EqualLabelPair,
    #[error("invalid ordering: {0}")]
    BadOrdering(String),
    #[error("invalid place specification: {0}")]
    BadPlaceSpec(String),
    #[error("invalid checkpoint token: {0}")]
    BadCheckpoint(String),
    #[error("invalid linking tables: {0}")]
    BadTables(String),
    #[error("search cardinality must be even and at least 4, got {0}")]
    BadSearchCardinality(usize),
}
