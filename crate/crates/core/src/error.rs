use core::fmt;

/// Errors from constructors whose preconditions depend on the input data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// The bracket is not antisymmetric, so the algebra is not Lie.
    NotLie,
    /// A module law failed on some basis tuple.
    InvalidModule,
    /// A module was built over a different algebra than the one supplied.
    ModuleAlgebraMismatch,
    /// The bilinear form is not symmetric.
    FormNotSymmetric,
    /// The bilinear form is not invariant under the bracket.
    FormNotInvariant,
    /// The connecting map is not invertible.
    NotIsomorphism,
    /// The connecting map does not commute with the module actions.
    NotEquivariant,
    /// The designated subspace is not an ideal of the required kind.
    NotAnIdeal(&'static str),
    /// A quotient failed its structural checks.
    InvalidQuotient(&'static str),
    /// A size parameter was out of range.
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotLie => write!(f, "bracket is not antisymmetric"),
            Error::InvalidModule => write!(f, "module law fails"),
            Error::ModuleAlgebraMismatch => {
                write!(f, "module is defined over a different algebra")
            }
            Error::FormNotSymmetric => write!(f, "bilinear form is not symmetric"),
            Error::FormNotInvariant => write!(f, "bilinear form is not invariant"),
            Error::NotIsomorphism => write!(f, "map is not invertible"),
            Error::NotEquivariant => write!(f, "map is not equivariant"),
            Error::NotAnIdeal(what) => write!(f, "subspace is not {what}"),
            Error::InvalidQuotient(what) => write!(f, "quotient is not {what}"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}
