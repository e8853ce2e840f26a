use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("constraint system is unsatisfiable")]
    UnsatisfiableInput,
    #[error("operand is empty")]
    EmptyOperand,
    #[error("operand list is empty")]
    EmptyList,
    #[error("operand is unbounded")]
    UnboundedOperand,
    #[error("no satisfiable instance after {0} attempts")]
    GenerationFailure(usize),
}

impl Error {
    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<(), Error> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::Dimension { expected, found })
        }
    }
}
