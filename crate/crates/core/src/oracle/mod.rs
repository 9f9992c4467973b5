//! Isotropic vectors of a single rational quadratic form.
//!
//! [`Oracle`] first consults an optional external solver and falls back on
//! the built-in [`baseline`] search. Every vector that leaves this module has
//! been checked by exact evaluation against the requested form.

pub mod baseline;
pub mod external;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact::{evaluate_form, primitive, Rat, RatVec, SymMatrix};

pub use baseline::{baseline_isotropic, DEFAULT_BUDGET};
pub use external::ExternalSolver;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("enumeration budget of {budget} points exhausted (searched max-norm {radius})")]
    BudgetExhausted { budget: u64, radius: u64 },

    #[error("external oracle timed out after {secs} s")]
    Timeout { secs: u64 },

    #[error("form is definite, no isotropic vector")]
    Definite,

    #[error("form of dimension {0} is anisotropic over Q")]
    Anisotropic(usize),

    #[error("external oracle failed (exit {code:?}): {stderr}")]
    External { code: Option<i32>, stderr: String },

    #[error("external oracle could not be started: {0}")]
    Spawn(String),

    #[error("malformed oracle response: {0}")]
    Malformed(String),

    #[error("oracle vector rejected: {0}")]
    Verification(String),
}

impl OracleError {
    /// Failures that a larger budget or a stronger solver may overcome.
    pub fn is_budget(&self) -> bool {
        matches!(self, OracleError::BudgetExhausted { .. } | OracleError::Timeout { .. })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleRequest {
    pub q: SymMatrix,
    /// Maximal number of lattice points the baseline may evaluate.
    pub effort: u64,
    pub allow_external: bool,
}

impl OracleRequest {
    pub fn new(q: SymMatrix) -> Self {
        OracleRequest { q, effort: DEFAULT_BUDGET, allow_external: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Baseline,
    External,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleResult {
    /// Primitive integer vector, first nonzero entry positive.
    pub y: RatVec,
    pub verified: bool,
    pub source: Source,
}

/// Normalize to a primitive integer vector with positive leading entry.
pub fn normalize(v: &[Rat]) -> RatVec {
    let mut p = primitive(v);
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in p.iter_mut() {
            *x = -&*x;
        }
    }
    p
}

/// Exact acceptance test applied to every candidate.
pub fn verify_isotropic(q: &SymMatrix, y: &[Rat]) -> Result<(), OracleError> {
    if y.len() != q.nrows() {
        return Err(OracleError::Verification(format!("length {} for a form of dimension {}", y.len(), q.nrows())));
    }
    if y.iter().all(|x| x.is_zero()) {
        return Err(OracleError::Verification("zero vector".into()));
    }
    let v = evaluate_form(q, y).map_err(|e| OracleError::Verification(e.to_string()))?;
    if !v.is_zero() {
        return Err(OracleError::Verification(format!("q(y) = {v}")));
    }
    Ok(())
}

/// Configured oracle: budget for the baseline and an optional external solver.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub budget: u64,
    pub external: Option<ExternalSolver>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { budget: DEFAULT_BUDGET, external: None }
    }
}

impl Oracle {
    pub fn with_budget(budget: u64) -> Self {
        Oracle { budget, external: None }
    }

    pub fn request(&self, q: &SymMatrix) -> OracleRequest {
        OracleRequest { q: q.clone(), effort: self.budget, allow_external: self.external.is_some() }
    }

    /// A `FAIL` answer from the external solver falls through to the
    /// baseline; any other external error is reported.
    pub fn isotropic_vector(&self, req: &OracleRequest) -> Result<OracleResult, OracleError> {
        if req.allow_external {
            if let Some(ext) = &self.external {
                if let Some(y) = ext.solve(&req.q)? {
                    return Ok(OracleResult { y, verified: true, source: Source::External });
                }
            }
        }
        let y = baseline_isotropic(&req.q, req.effort)?;
        Ok(OracleResult { y, verified: true, source: Source::Baseline })
    }

    pub fn find(&self, q: &SymMatrix) -> Result<RatVec, OracleError> {
        self.isotropic_vector(&self.request(q)).map(|r| r.y)
    }
}

/// Baseline-only entry point.
pub fn isotropic_vector(req: &OracleRequest) -> Result<OracleResult, OracleError> {
    Oracle::with_budget(req.effort).isotropic_vector(&OracleRequest { allow_external: false, ..req.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, int_vec, Matrix};

    #[test]
    fn normalization() {
        let v = normalize(&[int(0), int(-2), int(4)]);
        assert_eq!(v, int_vec(&[0, 1, -2]));
    }

    #[test]
    fn verification_rejects() {
        let q = Matrix::diagonal(&int_vec(&[1, -1]));
        assert!(verify_isotropic(&q, &int_vec(&[1, 1])).is_ok());
        assert!(matches!(verify_isotropic(&q, &int_vec(&[1, 2])), Err(OracleError::Verification(_))));
        assert!(verify_isotropic(&q, &int_vec(&[0, 0])).is_err());
    }
}
