use thiserror::Error;

use crate::quadrature::QuadResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the real domain of the function evaluated.
    #[error("domain error in {context}: {detail}")]
    Domain {
        context: &'static str,
        detail: String,
    },

    /// The regulator pair does not describe a non-empty phase space.
    #[error("invalid kinematics: {0}")]
    InvalidKinematics(String),

    /// The kernel was evaluated on the singular locus (1-y)^2 = xi or (1-z)^2 = xi.
    #[error("singular point: {0}")]
    SingularPoint(String),

    /// A negative power of y or z was evaluated at zero.
    #[error("pole of the prefactor at {0}")]
    Pole(String),

    #[error("tolerance {tol:e} not reached: best estimate {} +/- {:e}", best.value, best.error_estimate)]
    NotConverged { tol: f64, best: QuadResult },

    #[error("evaluation budget of {0} integrand calls exceeded")]
    BudgetExceeded(u64),

    #[error("no closed-form inner integral for type ({m},{n}) with this prefactor")]
    UnsupportedReduction { m: u8, n: u8 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid request: {0}")]
    InvalidRequest(String),
}

impl Error {
    pub(crate) fn domain(context: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            context,
            detail: detail.into(),
        }
    }
}
