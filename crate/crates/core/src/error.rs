use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter `{name}` must be positive and finite, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("deformation theta = sqrt(mu*nu)/hbar = {theta} must satisfy 0 < theta < 1")]
    InvalidDeformation { theta: f64 },

    #[error("Fock cutoff N = {cutoff} is too small (need at least {required})")]
    CutoffTooSmall { cutoff: usize, required: usize },

    #[error("operators live on different Fock bases (N = {left} vs N = {right})")]
    BasisMismatch { left: usize, right: usize },

    #[error("projection margin {margin} is invalid for cutoff N = {cutoff}")]
    MarginTooLarge { margin: usize, cutoff: usize },

    #[error("matrix is not Hermitian: defect {defect:e}")]
    NotHermitian { defect: f64 },

    #[error("quadrature with {nodes} nodes per axis is too coarse (need at least {required})")]
    QuadratureTooCoarse { nodes: usize, required: usize },

    #[error("invalid oscillator regime: {0}")]
    InvalidRegime(String),

    #[error("scaling requires positive kinetic coefficients, got c1 = {c1}, c2 = {c2}")]
    NonPositiveKinetic { c1: f64, c2: f64 },

    #[error("complex normal-mode frequency: {0}")]
    ComplexFrequency(String),

    #[error("numeric spectrum not converged: |E(N) - E(N-4)| = {estimate:e} exceeds {threshold:e}")]
    NotConverged { estimate: f64, threshold: f64 },

    #[error("requested {requested} levels, at most {max} are supported")]
    TooManyLevels { requested: usize, max: usize },

    #[error("chain map is singular (1 - theta^2 = {0})")]
    SingularChain(f64),

    #[error("grid of {nx} x {ny} points is too coarse (need at least {required} per axis)")]
    GridTooCoarse { nx: usize, ny: usize, required: usize },

    #[error("grid function does not decay at the boundary: relative boundary value {ratio:e}")]
    BoundaryLeak { ratio: f64 },

    #[error("Wigner transform has imaginary part {im:e} (real part {re:e})")]
    ImaginaryLeak { re: f64, im: f64 },

    #[error("symbolic operator contains unexpected term {0}")]
    UnexpectedMonomial(String),
}

pub type Result<T> = std::result::Result<T, Error>;
