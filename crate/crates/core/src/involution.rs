//! Involution types of a symmetric knot and how they extend across fillings.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::slope::{Slope, SlopeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error(
        "unknown symmetry type {0:?}; expected one of S1S0, S1E, S0S0, EE, S0E, S2S1, S2S0, S1S1"
    )]
    UnknownType(String),
    #[error("type (S1,Empty) needs the quotient knot (a name or \"unknot\")")]
    MissingQuotientKnot,
    #[error("an {n}-fold quotient coefficient is only defined for slopes 1/q, got {slope}")]
    NotReciprocal { slope: Slope, n: u32 },
    #[error("covering degree must be positive")]
    ZeroDegree,
    #[error(transparent)]
    Slope(#[from] SlopeError),
}

/// Fixed set of an involution of S³, or of its restriction to the knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixedSet {
    S2,
    S1,
    S0,
    Empty,
}

impl FixedSet {
    fn tag(self) -> &'static str {
        match self {
            FixedSet::S2 => "S2",
            FixedSet::S1 => "S1",
            FixedSet::S0 => "S0",
            FixedSet::Empty => "E",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetryType {
    ambient: FixedSet,
    knot: FixedSet,
}

impl SymmetryType {
    pub const S2S1: SymmetryType = SymmetryType {
        ambient: FixedSet::S2,
        knot: FixedSet::S1,
    };
    pub const S2S0: SymmetryType = SymmetryType {
        ambient: FixedSet::S2,
        knot: FixedSet::S0,
    };
    pub const S1S1: SymmetryType = SymmetryType {
        ambient: FixedSet::S1,
        knot: FixedSet::S1,
    };
    pub const S1S0: SymmetryType = SymmetryType {
        ambient: FixedSet::S1,
        knot: FixedSet::S0,
    };
    pub const S1E: SymmetryType = SymmetryType {
        ambient: FixedSet::S1,
        knot: FixedSet::Empty,
    };
    pub const S0S0: SymmetryType = SymmetryType {
        ambient: FixedSet::S0,
        knot: FixedSet::S0,
    };
    pub const S0E: SymmetryType = SymmetryType {
        ambient: FixedSet::S0,
        knot: FixedSet::Empty,
    };
    pub const EE: SymmetryType = SymmetryType {
        ambient: FixedSet::Empty,
        knot: FixedSet::Empty,
    };

    pub const ALL: [SymmetryType; 8] = [
        SymmetryType::S2S1,
        SymmetryType::S2S0,
        SymmetryType::S1S1,
        SymmetryType::S1S0,
        SymmetryType::S1E,
        SymmetryType::S0S0,
        SymmetryType::S0E,
        SymmetryType::EE,
    ];

    /// Rejects pairs that no involution of S³ realizes on a knot.
    pub fn new(ambient: FixedSet, knot: FixedSet) -> Option<SymmetryType> {
        let t = SymmetryType { ambient, knot };
        SymmetryType::ALL.contains(&t).then_some(t)
    }

    pub fn ambient(&self) -> FixedSet {
        self.ambient
    }

    pub fn knot(&self) -> FixedSet {
        self.knot
    }

    /// Only realized by the unknot or composite knots.
    pub fn is_degenerate(&self) -> bool {
        matches!(self.ambient, FixedSet::S2) || *self == SymmetryType::S1S1
    }
}

impl fmt::Display for SymmetryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == SymmetryType::EE {
            return f.write_str("EE");
        }
        write!(f, "{}{}", self.ambient.tag(), self.knot.tag())
    }
}

impl FromStr for SymmetryType {
    type Err = InvolutionError;

    fn from_str(s: &str) -> Result<SymmetryType, InvolutionError> {
        SymmetryType::ALL
            .into_iter()
            .find(|t| t.to_string() == s.trim())
            .ok_or_else(|| InvolutionError::UnknownType(s.to_string()))
    }
}

/// Image of the knot under an involution whose axis misses it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QuotientKnot {
    Unknot,
    Knotted(String),
}

impl FromStr for QuotientKnot {
    type Err = InvolutionError;

    fn from_str(s: &str) -> Result<QuotientKnot, InvolutionError> {
        match s.trim() {
            "" => Err(InvolutionError::MissingQuotientKnot),
            "unknot" | "0_1" => Ok(QuotientKnot::Unknot),
            name => Ok(QuotientKnot::Knotted(name.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QuotientKind {
    ThreeSphere,
    /// `p/q` surgery on the unknot, `|p| >= 2` or `p = 0`.
    LensSpace {
        p: i64,
        q: i64,
    },
    SurgeryOnQuotientKnot {
        knot: String,
        slope: Slope,
    },
    /// Free quotient of the 0-filling by an orientation-reversing involution.
    NonOrientableCover,
    /// Filling of a homologically non-trivial knot in RP³.
    RP3KnotFilling,
    /// Isolated fixed points: the quotient is not a manifold.
    Singular,
    None,
}

impl fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientKind::ThreeSphere => f.write_str("S^3"),
            QuotientKind::LensSpace { p, q } => write!(f, "L({p},{q})"),
            QuotientKind::SurgeryOnQuotientKnot { knot, slope } => write!(f, "{knot}({slope})"),
            QuotientKind::NonOrientableCover => f.write_str("non-orientable"),
            QuotientKind::RP3KnotFilling => f.write_str("RP^3-knot-filling"),
            QuotientKind::Singular => f.write_str("singular"),
            QuotientKind::None => f.write_str("none"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientDescriptor {
    pub kind: QuotientKind,
    pub orientable: bool,
}

impl QuotientDescriptor {
    fn orientable(kind: QuotientKind) -> QuotientDescriptor {
        QuotientDescriptor {
            kind,
            orientable: true,
        }
    }

    /// A manifold quotient, as opposed to `None` or `Singular`.
    pub fn is_manifold(&self) -> bool {
        !matches!(self.kind, QuotientKind::None | QuotientKind::Singular)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtensionResult {
    pub extends: bool,
    pub free: bool,
    pub quotient: QuotientDescriptor,
    pub branch_components: u32,
    pub degenerate: bool,
}

impl ExtensionResult {
    fn no_cover(degenerate: bool) -> ExtensionResult {
        ExtensionResult {
            extends: false,
            free: false,
            quotient: QuotientDescriptor {
                kind: QuotientKind::None,
                orientable: false,
            },
            branch_components: 0,
            degenerate,
        }
    }

    fn branched(kind: QuotientKind, branch_components: u32) -> ExtensionResult {
        ExtensionResult {
            extends: true,
            free: false,
            quotient: QuotientDescriptor::orientable(kind),
            branch_components,
            degenerate: false,
        }
    }
}

fn lens_or_sphere(s: Slope) -> QuotientKind {
    match (s.numerator(), s.denominator()) {
        (1 | -1, _) => QuotientKind::ThreeSphere,
        (p, q) => QuotientKind::LensSpace { p, q },
    }
}

/// What the involution of type `t` does on the `s` filling.
pub fn extend_involution(
    t: SymmetryType,
    s: Slope,
    quotient_knot: Option<&QuotientKnot>,
) -> Result<ExtensionResult, InvolutionError> {
    if t.is_degenerate() {
        return Ok(ExtensionResult::no_cover(true));
    }
    let (p, q) = (s.numerator(), s.denominator());
    Ok(match t {
        SymmetryType::S1S0 => ExtensionResult::branched(
            QuotientKind::ThreeSphere,
            branch_components_bound(h2_z2_dim_of_surgery(s)),
        ),
        SymmetryType::S1E => {
            let qk = quotient_knot.ok_or(InvolutionError::MissingQuotientKnot)?;
            let down = cyclic_quotient_coefficient(s, 2)?;
            let kind = match qk {
                QuotientKnot::Unknot => lens_or_sphere(down),
                QuotientKnot::Knotted(_) if down.is_infinite() => QuotientKind::ThreeSphere,
                QuotientKnot::Knotted(name) => QuotientKind::SurgeryOnQuotientKnot {
                    knot: name.clone(),
                    slope: down,
                },
            };
            ExtensionResult::branched(kind, if p % 2 == 0 { 2 } else { 1 })
        }
        SymmetryType::S0S0 => match (p, q) {
            (0, _) => ExtensionResult {
                extends: true,
                free: true,
                quotient: QuotientDescriptor {
                    kind: QuotientKind::NonOrientableCover,
                    orientable: false,
                },
                branch_components: 0,
                degenerate: false,
            },
            (_, 0) => ExtensionResult {
                extends: true,
                free: false,
                quotient: QuotientDescriptor {
                    kind: QuotientKind::Singular,
                    orientable: false,
                },
                branch_components: 0,
                degenerate: false,
            },
            _ => ExtensionResult::no_cover(false),
        },
        SymmetryType::S0E => ExtensionResult::no_cover(false),
        SymmetryType::EE => {
            let fixed = p % 2 != 0 && q % 2 != 0;
            ExtensionResult {
                extends: true,
                free: !fixed,
                quotient: QuotientDescriptor::orientable(QuotientKind::RP3KnotFilling),
                branch_components: u32::from(fixed),
                degenerate: false,
            }
        }
        _ => unreachable!("degenerate types handled above"),
    })
}

/// `1 + dim H²(M; Z/2)`.
pub fn branch_components_bound(h2_z2_dim: u32) -> u32 {
    h2_z2_dim.saturating_add(1)
}

/// `dim H²(M; Z/2)` for `p/q` surgery on a knot: `H₁ = Z/p`.
pub fn h2_z2_dim_of_surgery(s: Slope) -> u32 {
    u32::from(s.numerator() % 2 == 0)
}

/// Coefficient on the quotient knot of an `n`-fold cyclic symmetry whose
/// axis misses the knot: `p/(2q)` for `n = 2`, `1/(nq)` for `n > 2`.
pub fn cyclic_quotient_coefficient(s: Slope, n: u32) -> Result<Slope, InvolutionError> {
    let (p, q) = (s.numerator() as i128, s.denominator() as i128);
    match n {
        0 => Err(InvolutionError::ZeroDegree),
        1 | 2 => Ok(Slope::from_i128(p, q * n as i128)?),
        _ if p.abs() == 1 => Ok(Slope::from_i128(p, q * n as i128)?),
        _ => Err(InvolutionError::NotReciprocal { slope: s, n }),
    }
}
