//! Domain types, the compactness gate, and region classification in the
//! `(1/p1, 1/p2)` plane.
//!
//! Everything here is exact rational arithmetic: boundary cases (`p = 2`,
//! smoothness equal to a sub-case threshold) are decided by equality tests,
//! never by floating point comparisons.

use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::{pos, rat, Rational};

/// An integrability exponent `p` in `(0, oo]`. `Infinity` encodes `p = oo`
/// with `1/p = 0`; reciprocals are exact rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exponent {
    Finite(Rational),
    Infinity,
}

impl Exponent {
    pub fn finite(p: Rational) -> Result<Self, Error> {
        if p <= Rational::zero() {
            return Err(Error::Domain(format!("exponent must be positive, got {p}")));
        }
        Ok(Exponent::Finite(p))
    }

    /// `1/p`, with `1/oo = 0`.
    pub fn recip(self) -> Rational {
        match self {
            Exponent::Finite(p) => p.recip(),
            Exponent::Infinity => Rational::zero(),
        }
    }

    /// The exponent value itself, when finite.
    pub fn value(self) -> Option<Rational> {
        match self {
            Exponent::Finite(p) => Some(p),
            Exponent::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Exponent::Infinity)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinity => write!(f, "inf"),
        }
    }
}

/// Target space of the embedding.
///
/// `p2 = oo` is routed to `Linfty` and `p2 = 1` to `L1`; the `Lp` variant is
/// reserved for the open range `1 < p2 < oo` where the square-function
/// (Littlewood-Paley) description of `L_{p2}` is available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    Lp(Exponent),
    Linfty,
    L1,
    /// Hoelder-Zygmund-type mixed target of order `s > 0`.
    ZygmundMix(Rational),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Lp(p) => write!(f, "L_{p}"),
            Target::Linfty => write!(f, "L_inf"),
            Target::L1 => write!(f, "L_1"),
            Target::ZygmundMix(s) => write!(f, "Z^{s}_mix"),
        }
    }
}

/// The parameter tuple every rate statement consumes: source integrability
/// `p1`, smoothness `t` per direction, dimension `d`, and the target space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EmbeddingParams {
    pub p_src: Exponent,
    pub target: Target,
    pub t: Rational,
    pub d: u32,
}

impl EmbeddingParams {
    pub fn new(p_src: Exponent, target: Target, t: Rational, d: u32) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::Domain("dimension d must be >= 1".into()));
        }
        if t <= Rational::zero() {
            return Err(Error::Domain(format!("smoothness t must be positive, got {t}")));
        }
        match target {
            Target::Lp(p) => {
                let ok = match p {
                    Exponent::Finite(v) => v > rat(1, 1),
                    Exponent::Infinity => false,
                };
                if !ok {
                    return Err(Error::Domain(
                        "Lp target requires 1 < p2 < inf (use L1 / Linfty for the endpoints)"
                            .into(),
                    ));
                }
            }
            Target::ZygmundMix(s) => {
                if s <= Rational::zero() {
                    return Err(Error::Domain(format!("Zygmund order s must be positive, got {s}")));
                }
            }
            Target::Linfty | Target::L1 => {}
        }
        Ok(EmbeddingParams { p_src, target, t, d })
    }

    /// Convenience constructor for `Lp` targets.
    pub fn lp(t: Rational, p_src: Exponent, p_tgt: Exponent, d: u32) -> Result<Self, Error> {
        Self::new(p_src, Target::Lp(p_tgt), t, d)
    }

    /// `1/p1`.
    pub fn u(&self) -> Rational {
        self.p_src.recip()
    }

    /// `1/p2` of the Lebesgue-scale target (`0` for `L_inf` and the Zygmund
    /// target, `1` for `L_1`).
    pub fn v(&self) -> Rational {
        match self.target {
            Target::Lp(p) => p.recip(),
            Target::Linfty | Target::ZygmundMix(_) => Rational::zero(),
            Target::L1 => rat(1, 1),
        }
    }
}

/// Which smoothness threshold a boundary classification sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TSplit {
    /// `t = 1/p1 - 1/2`, the small/large smoothness split of region I.
    SmallSmoothnessI,
    /// `t = (1/p2 - 1/p1) / (p1/2 - 1)`, the split of region IV.
    SmallSmoothnessIV,
    /// `t = 1/p1`, the split of region V.
    SmallSmoothnessV,
}

impl TSplit {
    pub fn describe(self) -> &'static str {
        match self {
            TSplit::SmallSmoothnessI => "t = 1/p1 - 1/2",
            TSplit::SmallSmoothnessIV => "t = (1/p2 - 1/p1)/(p1/2 - 1)",
            TSplit::SmallSmoothnessV => "t = 1/p1",
        }
    }
}

/// Region of the `(1/p1, 1/p2)` plane, with small/large smoothness sub-cases.
///
/// The five base regions overlap on their closures where all rate formulas
/// agree; the classifier returns one canonical tag there (see
/// [`classify_region`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    IStar,
    ISub,
    II,
    III,
    IVStar,
    IVSub,
    VStar,
    VSub,
    /// `t` equals the sub-case threshold exactly; carries the threshold kind
    /// and its exact value.
    BoundaryT(TSplit, Rational),
    NonCompact,
}

impl Region {
    pub fn label(&self) -> String {
        match self {
            Region::IStar => "I*".into(),
            Region::ISub => "I_*".into(),
            Region::II => "II".into(),
            Region::III => "III".into(),
            Region::IVStar => "IV*".into(),
            Region::IVSub => "IV_*".into(),
            Region::VStar => "V*".into(),
            Region::VSub => "V_*".into(),
            Region::BoundaryT(split, _) => format!("boundary[{}]", split.describe()),
            Region::NonCompact => "non-compact".into(),
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Compactness gate for every target kind. Strict inequalities throughout:
///
/// * `L_{p2}`, `L_1`: `t > max(0, 1/p1 - 1/p2)`
/// * `L_inf`:         `t > 1/p1`
/// * Zygmund order s: `t > s + 1/p1`
pub fn is_compact(params: &EmbeddingParams) -> bool {
    let u = params.u();
    let t = params.t;
    match params.target {
        Target::Lp(_) | Target::L1 => t > pos(u - params.v()),
        Target::Linfty => t > u,
        Target::ZygmundMix(s) => t > s + u,
    }
}

/// The base region (ignoring smoothness sub-cases) of a point `(u, v) =
/// (1/p1, 1/p2)`. First match wins, in the order `V, IV, I, III, II`; this
/// makes the canonical tag on each shared closure the one all worked cases
/// use (`p1 = p2 = 2 -> I`, `p2 = 2 < p1 -> V`, `p1 = 2 -> I or III`), and on
/// every such closure the adjacent formulas evaluate equally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum BaseRegion {
    I,
    II,
    III,
    IV,
    V,
}

pub(crate) fn base_region(u: Rational, v: Rational) -> BaseRegion {
    let half = rat(1, 2);
    if v >= half && u < half {
        BaseRegion::V
    } else if v <= half && u < v {
        BaseRegion::IV
    } else if u >= half && v >= half {
        BaseRegion::I
    } else if u <= half && v <= u {
        BaseRegion::III
    } else {
        debug_assert!(u >= half && v <= half);
        BaseRegion::II
    }
}

/// Sub-case threshold of the base region, if it has one. `None` for II, III
/// and for the degenerate cases where the threshold is not positive (there
/// the large-smoothness row holds for every admissible `t`).
pub(crate) fn region_threshold(region: BaseRegion, params: &EmbeddingParams) -> Option<(TSplit, Rational)> {
    let u = params.u();
    let v = params.v();
    match region {
        BaseRegion::I => {
            let tau = u - rat(1, 2);
            (tau > Rational::zero()).then_some((TSplit::SmallSmoothnessI, tau))
        }
        BaseRegion::IV => {
            // (v - u)/(p1/2 - 1) with p1 = 1/u; zero when p1 = inf.
            if u.is_zero() {
                return None;
            }
            let tau = (v - u) * rat(2, 1) * u / (rat(1, 1) - rat(2, 1) * u);
            Some((TSplit::SmallSmoothnessIV, tau))
        }
        BaseRegion::V => (!u.is_zero()).then_some((TSplit::SmallSmoothnessV, u)),
        BaseRegion::II | BaseRegion::III => None,
    }
}

/// Classifies Lebesgue-target (`1 < p2 < oo`) parameters into the region
/// whose rate formula applies.
///
/// Boundary policy:
/// * On shared region closures (`p1 = 2` or `p2 = 2`) a canonical tag is
///   returned; the adjacent formulas agree there, which the test suite
///   asserts as rational identities.
/// * When `t` equals the region's own sub-case threshold the result is
///   [`Region::BoundaryT`] — never a `*`/`_*` tag. On `p2 = 2` the region IV
///   and V thresholds coincide and the tag names the `t = 1/p1` split.
/// * Non-compact parameters yield `Err(Error::NonCompact)`; [`Region::NonCompact`]
///   also exists as a value for table emitters that must not fail row-wise.
pub fn classify_region(params: &EmbeddingParams) -> Result<Region, Error> {
    if !matches!(params.target, Target::Lp(_)) {
        return Err(Error::Domain(
            "classify_region applies to Lp targets only".into(),
        ));
    }
    if !is_compact(params) {
        return Err(Error::NonCompact(format!(
            "t = {} <= max(0, 1/p1 - 1/p2) = {}",
            params.t,
            pos(params.u() - params.v())
        )));
    }
    let u = params.u();
    let v = params.v();
    let region = base_region(u, v);
    match region_threshold(region, params) {
        Some((split, tau)) => {
            if params.t == tau {
                Ok(Region::BoundaryT(split, tau))
            } else if params.t > tau {
                Ok(match region {
                    BaseRegion::I => Region::IStar,
                    BaseRegion::IV => Region::IVStar,
                    BaseRegion::V => Region::VStar,
                    _ => unreachable!(),
                })
            } else {
                Ok(match region {
                    BaseRegion::I => Region::ISub,
                    BaseRegion::IV => Region::IVSub,
                    BaseRegion::V => Region::VSub,
                    _ => unreachable!(),
                })
            }
        }
        None => Ok(match region {
            BaseRegion::I => Region::IStar,
            BaseRegion::II => Region::II,
            BaseRegion::III => Region::III,
            BaseRegion::IV => Region::IVStar,
            BaseRegion::V => Region::VStar,
        }),
    }
}
