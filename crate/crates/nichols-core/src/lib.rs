//! Exact computation of finite-dimensional Nichols algebras.
//!
//! The crate computes Hilbert series, total dimensions and relation degrees of
//! Nichols algebras of braided vector spaces of diagonal and rack type, the
//! associated Cartan matrices, Weyl groupoids and generalized root systems,
//! reflections of Lie-superalgebra data, and the type D / type F collapse
//! criteria for finite racks. All arithmetic is exact: scalars live in
//! cyclotomic fields with rational coefficients and arbitrary-precision
//! integers.

pub mod braided;
pub mod cache;
pub mod classify;
pub mod cli;
pub mod cyclo;
pub mod groupoid;
pub mod io;
pub mod linalg;
pub mod nichols;
pub mod perm;
pub mod racks;
pub mod superreflect;
pub mod symmetrizer;

pub use braided::BraidedVectorSpace;
pub use cyclo::CycloNumber;
pub use racks::Rack;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Malformed or semantically invalid input.
    #[error("input error: {0}")]
    Input(String),
    /// A configured time or size budget was exhausted. Distinct from a negative
    /// answer: the query is undecided.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// Domain violation (e.g. a diagonal braiding with q_ii = 1 fed to the
    /// Nichols engine).
    #[error("domain error: {0}")]
    Domain(String),
    /// Division by zero in a field.
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, Error>;

/// Wall-clock and size budget for potentially long computations.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub seconds: Option<f64>,
    /// Cap on matrix entries handled in a single elimination.
    pub max_entries: u64,
    deadline: Option<std::time::Instant>,
}

impl Budget {
    pub fn new(seconds: Option<f64>, max_entries: u64) -> Self {
        Budget {
            seconds,
            max_entries,
            deadline: seconds.map(|s| std::time::Instant::now() + std::time::Duration::from_secs_f64(s)),
        }
    }

    pub fn unlimited() -> Self {
        Budget { seconds: None, max_entries: u64::MAX, deadline: None }
    }

    /// Default budget used by the CLI when no flags are given.
    pub fn default_cli() -> Self {
        Budget::new(Some(3600.0), 100_000_000)
    }

    pub fn check_time(&self, what: &str) -> Result<()> {
        if let Some(d) = self.deadline {
            if std::time::Instant::now() > d {
                return Err(Error::Budget(format!("{what}: time budget exhausted")));
            }
        }
        Ok(())
    }

    pub fn check_entries(&self, n: u64, what: &str) -> Result<()> {
        if n > self.max_entries {
            return Err(Error::Budget(format!(
                "{what}: {n} entries exceed the cap of {}",
                self.max_entries
            )));
        }
        Ok(())
    }
}
