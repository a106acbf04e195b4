use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("state (s={s}, i={i}) outside the domain {{s>0, i>0, s+i<=1}}")]
    OutsideDomain { s: f64, i: f64 },

    #[error("control u={u} outside [0, {ubar}]")]
    ControlOutOfBounds { u: f64, ubar: f64 },

    #[error("non-finite state at t={t}")]
    NonFinite { t: f64 },

    #[error("state (s={s}, i={i}) outside the viability kernel for i*={istar}")]
    OutsideKernel { s: f64, i: f64, istar: f64 },

    #[error("no sign change on bracket [{lo}, {hi}]; input is likely misclassified")]
    NoBracket { lo: f64, hi: f64 },

    #[error("barrier contact s2={s2} outside [{lo}, {hi}]; input is likely misclassified")]
    BarrierContactRange { s2: f64, lo: f64, hi: f64 },

    #[error("quadrature did not converge: |delta|={delta} > {tol} on panel doubling")]
    QuadratureNotConverged { delta: f64, tol: f64 },

    #[error("constraint level {level} below the domain minimum {dom_min}")]
    BelowDomain { level: f64, dom_min: f64 },

    #[error("curve has no knots")]
    EmptyCurve,

    #[error("curves disagree on x0 or orientation: {0}")]
    CurveMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
