//! Exact-arithmetic obstruction bounds for separating morphisms and totally
//! real pencils on real algebraic curves in ambient surfaces.
//!
//! A separating (type I) real curve always admits a separating morphism to the
//! projective line, and the degree of such a morphism is at least the number
//! `l` of real connected components. This crate decides, from Picard-lattice
//! data alone, when that lowest degree `l` is impossible:
//!
//! - [`lattice`]: integer intersection theory on an ambient surface
//!   (pairing, canonical class, Riemann-Roch lower bounds, adjunction genus,
//!   effective-cone membership, ambient-surface conditions).
//! - [`decomp`]: the adjoint class `D = C + K` and its decompositions
//!   `D = 2*D0 + D1` maximizing `(D0^2 - D0.K)/2`.
//! - [`obstruct`]: the non-existence criteria, their closed forms on the
//!   plane and on the quadric ellipsoid, the quintic special case, and the
//!   derived bounds on separating-morphism degree and pencil degree.
//! - [`scheme`]: bracket notation for nested-oval real schemes, validity
//!   checks, and the table of obstructed bidegree `(d,d)` schemes.
//! - [`construct`]: a replayable induction over `(degree, components)`
//!   pairs certifying that obstructed curves exist.
//! - [`cli`]: the command-line front end (`sepmorph` binary).
//!
//! All arithmetic is exact over `i64`; every operation is a pure function
//! over immutable values and is safe to call from any thread.

pub mod cli;
pub mod construct;
pub mod decomp;
pub mod lattice;
mod monoid;
pub mod obstruct;
pub mod scheme;
pub mod surface_file;

pub use lattice::{DivisorClass, SetupVerdict, SurfaceLattice};

/// Errors shared by all modules of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("divisor classes live on different surfaces ({left} vs {right})")]
    SurfaceMismatch { left: String, right: String },

    #[error("lattice shape invalid: {0}")]
    InvalidLattice(String),

    #[error("unknown built-in surface `{0}` (expected P2 or QuadricEllipsoid)")]
    UnknownSurface(String),

    #[error("parity violation: {what} = {value} is odd; inconsistent lattice input")]
    ParityViolation { what: String, value: i64 },

    #[error("class {class} has negative adjunction genus {genus}; not a curve class")]
    NegativeGenus { class: String, genus: i64 },

    #[error("class {0} is not effective on this surface")]
    NotEffective(String),

    #[error("no decomposition of class {0} within the search bound")]
    NoDecomposition(String),

    #[error("ambient surface fails the setup conditions: {0}")]
    SetupViolation(String),

    #[error("decomposition is of class {found}, expected the adjoint class {expected}")]
    DecompositionMismatch { found: String, expected: String },

    #[error("curve is not flagged as separating (type I); obstruction queries need type_one")]
    NotTypeOne,

    #[error("D1 is empty; use the D1-empty criterion instead")]
    D1Empty,

    #[error("D1 is non-empty; use the D1 criterion instead")]
    D1NotEmpty,

    #[error("Harnack-Klein violation: l = {l} exceeds g + 1 = {max}")]
    HarnackKlein { l: i64, max: i64 },

    #[error("parity constraint violated: {0}")]
    ParityConstraint(String),

    #[error("degree {0} out of range for this rule")]
    DegreeOutOfRange(i64),

    #[error("obstruction does not apply; no pencil bound is implied")]
    ObstructionNotApplicable,

    #[error("scheme syntax error at byte {pos}: {msg}")]
    SchemeSyntax { pos: usize, msg: String },

    #[error("scheme inconsistent with degree {degree}: {violations}")]
    InconsistentScheme { degree: i64, violations: String },

    #[error("pseudoline not allowed in a quadric scheme")]
    PseudolineOnQuadric,

    #[error("pair (d, l) = ({d}, {l}) is not admissible for the construction")]
    InadmissiblePair { d: i64, l: i64 },

    #[error("no admissible component count at degree {0} is obstructed; no witness exists")]
    NoWitnessCandidate(i64),

    #[error("construction trace malformed at line {line}: {msg}")]
    TraceFormat { line: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("surface file error: {0}")]
    SurfaceFile(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status the CLI maps this error to. Internal
    /// inconsistencies exit 2, every invalid input exits 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconsistency(_) => 2,
            _ => 1,
        }
    }
}
