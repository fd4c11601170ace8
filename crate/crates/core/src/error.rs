use thiserror::Error;

/// One kernel element that an operator failed to annihilate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelViolation {
    /// 1-based index of the kernel element.
    pub index: usize,
    pub element: String,
    pub value: String,
}

fn list_violations(v: &[KernelViolation]) -> String {
    v.iter()
        .map(|e| format!("f_{} = {} maps to {}", e.index, e.element, e.value))
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot combine values of algebra `{left}` with algebra `{right}`")]
    MixedAlgebras { left: String, right: String },

    #[error("`{0}` is not a unit")]
    NotAUnit(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),

    #[error("the kernel list must contain at least one element")]
    EmptyKernel,

    #[error("operator has degree {degree}, above the bound {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },

    #[error("operator does not annihilate the kernel: {}", list_violations(.0))]
    NotInKernel(Vec<KernelViolation>),

    #[error("R does not map the kernel into ker K: {}", list_violations(.0))]
    NotIntertwinable(Vec<KernelViolation>),

    #[error("leading coefficient `{0}` of the divisor is not a unit")]
    NotMonicizable(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("operator of low filtration annihilates the kernel but is nonzero: {0}")]
    CorollaryViolated(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
