use thiserror::Error;

/// Where in a run a failure was detected.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Location {
    pub step: usize,
    /// Node (1D) or lattice column index.
    pub i: usize,
    /// Lattice row index for 2D runs.
    pub j: Option<usize>,
    /// Sweep direction for 2D runs.
    pub direction: Option<char>,
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "step {}, i = {}", self.step, self.i)?;
        if let Some(j) = self.j {
            write!(f, ", j = {j}")?;
        }
        if let Some(d) = self.direction {
            write!(f, ", {d}-sweep")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("CFL violation: |nu| = {nu} > 1 at {at}")]
    Cfl { nu: f64, at: Location },
    #[error("positivity failure at {at}: rho = {rho}, p = {p}")]
    Positivity { rho: f64, p: f64, at: Location },
    #[error("non-finite state at {at}")]
    NonFinite { at: Location },
    #[error("inadmissible state: {0}")]
    Inadmissible(String),
    #[error("Riemann data generate vacuum")]
    Vacuum,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code: 2 for numerical failures, 3 for bad configuration.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Cfl { .. }
            | Error::Positivity { .. }
            | Error::NonFinite { .. }
            | Error::Inadmissible(_)
            | Error::Vacuum => 2,
            Error::Config(_) | Error::UnknownCase(_) | Error::LengthMismatch(..) => 3,
            Error::Io(_) | Error::Json(_) => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
