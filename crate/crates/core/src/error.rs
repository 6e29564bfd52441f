use alloc::string::String;
use core::fmt;

/// Errors raised by the kernel.
///
/// Every variant is a domain error: the input was well formed but the
/// requested computation is undefined for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// `gcd(0, 0)` has no monic representative.
    ZeroGcd,
    /// A rational function was evaluated at a root of its denominator.
    Pole {
        at: String,
    },
    /// `r` exceeds the order of one of the transvected forms.
    TransvectantOrder {
        r: usize,
        left: usize,
        right: usize,
    },
    /// Covariants built from forms of different degree were combined.
    SourceMismatch {
        left: usize,
        right: usize,
    },
    SingularMatrix,
    /// The invariant catalogue only accepts even degrees `>= 6`.
    UnsupportedDegree {
        degree: usize,
    },
    /// The named invariant is not defined for forms of this degree.
    UndefinedInvariant {
        name: &'static str,
        degree: usize,
    },
    UnsupportedGenus {
        genus: u32,
    },
    /// A form's degree does not match `2g + 2`.
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    /// The classifier branch needs a ratio whose denominator vanishes.
    DegenerateBranch {
        branch: &'static str,
        denominator: &'static str,
    },
    /// A divisibility or congruence requirement failed.
    Constraint {
        constraint: String,
    },
    NotRootOfUnity {
        order: u32,
    },
    /// Roots of unity of this order do not live in Q(i, sqrt3).
    UnrepresentableRootOfUnity {
        order: u32,
    },
    /// Every dihedral invariant vanishes (`a_1 = a_delta = 0`).
    ZeroDihedralInvariants,
    /// The linear system pairing `a_i` and `a_{t-i}` has no solution.
    SingularSystem {
        index: usize,
    },
    /// A point of the A4 orbit hits a pole of one of the twelve maps.
    OrbitPole {
        transformation: &'static str,
    },
    /// Two points of the A4 orbit coincide.
    OrbitCollision,
    /// The point does not lie on the parametrized locus.
    OffLocus,
    /// The recovery polynomial has no rational root.
    NoRationalRoot {
        polynomial: String,
    },
    /// Genus excluded from the A4 classification (`g = 2, 3, 6` or `g < 4`).
    ExcludedGenus {
        genus: u32,
    },
    Parse {
        input: String,
    },
}

impl Error {
    /// Stable identifier used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division-by-zero",
            Error::ZeroGcd => "zero-gcd",
            Error::Pole { .. } => "pole",
            Error::TransvectantOrder { .. } => "transvectant-order",
            Error::SourceMismatch { .. } => "source-mismatch",
            Error::SingularMatrix => "singular-matrix",
            Error::UnsupportedDegree { .. } => "unsupported-degree",
            Error::UndefinedInvariant { .. } => "undefined-invariant",
            Error::UnsupportedGenus { .. } => "unsupported-genus",
            Error::DegreeMismatch { .. } => "degree-mismatch",
            Error::DegenerateBranch { .. } => "degenerate-branch",
            Error::Constraint { .. } => "constraint-violation",
            Error::NotRootOfUnity { .. } => "not-root-of-unity",
            Error::UnrepresentableRootOfUnity { .. } => "unrepresentable-root-of-unity",
            Error::ZeroDihedralInvariants => "zero-dihedral-invariants",
            Error::SingularSystem { .. } => "singular-system",
            Error::OrbitPole { .. } => "orbit-pole",
            Error::OrbitCollision => "orbit-collision",
            Error::OffLocus => "off-locus",
            Error::NoRationalRoot { .. } => "no-rational-root",
            Error::ExcludedGenus { .. } => "excluded-genus",
            Error::Parse { .. } => "parse",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroGcd => write!(f, "gcd of two zero polynomials"),
            Error::Pole { at } => write!(f, "pole at {at}"),
            Error::TransvectantOrder { r, left, right } => write!(
                f,
                "transvectant index {r} exceeds the orders ({left}, {right})"
            ),
            Error::SourceMismatch { left, right } => write!(
                f,
                "covariants of forms of degree {left} and {right} cannot be combined"
            ),
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::UnsupportedDegree { degree } => write!(
                f,
                "unsupported degree {degree}: the catalogue needs an even degree >= 6"
            ),
            Error::UndefinedInvariant { name, degree } => {
                write!(f, "{name} is undefined for forms of degree {degree}")
            }
            Error::UnsupportedGenus { genus } => write!(f, "unsupported genus {genus}"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "expected a form of degree {expected}, found {found}")
            }
            Error::DegenerateBranch {
                branch,
                denominator,
            } => {
                write!(f, "branch {branch}: {denominator} vanishes")
            }
            Error::Constraint { constraint } => write!(f, "constraint violated: {constraint}"),
            Error::NotRootOfUnity { order } => {
                write!(
                    f,
                    "element is not a root of unity of order dividing {order}"
                )
            }
            Error::UnrepresentableRootOfUnity { order } => write!(
                f,
                "primitive {order}-th roots of unity are not in Q(i, sqrt3)"
            ),
            Error::ZeroDihedralInvariants => {
                write!(f, "all dihedral invariants vanish (a_1 = a_delta = 0)")
            }
            Error::SingularSystem { index } => write!(
                f,
                "the system for a_{index} is singular and inconsistent (a_1^t = a_delta^t)"
            ),
            Error::OrbitPole { transformation } => {
                write!(f, "orbit point {transformation} has a pole")
            }
            Error::OrbitCollision => write!(f, "orbit points collide"),
            Error::OffLocus => write!(f, "point is not on the locus"),
            Error::NoRationalRoot { polynomial } => {
                write!(f, "no rational root of {polynomial}")
            }
            Error::ExcludedGenus { genus } => {
                write!(f, "genus {genus} is excluded (g >= 4 and g != 6 required)")
            }
            Error::Parse { input } => write!(f, "cannot parse {input:?}"),
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
