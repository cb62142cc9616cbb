//! The rate algebra and every asymptotic rate table: Weyl numbers for all
//! four target kinds, approximation numbers for the Zygmund-type target,
//! entropy rates, the isotropic (`d = 1`) table, and the entropy-vs-Weyl
//! comparator.
//!
//! A rate is the equivalence class of `c * n^{-alpha} * (log n)^{gamma}` up
//! to constants, stored with exact rational `alpha` and `gamma`. For the
//! mixed (`d >= 1`) tables the tabulated log exponent is `beta`; results
//! store `gamma = (d-1) * beta` so the algebra is closed under products and
//! interpolation without carrying the dimension around. `beta` stays
//! recoverable for display when `d > 1`.

use std::cmp::Ordering;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::params::{
    base_region, classify_region, is_compact, BaseRegion, EmbeddingParams, Exponent, Region,
    TSplit, Target,
};
use crate::rational::{pos, rat, to_f64, Rational};

/// Symbolic asymptotic rate `c * n^{-alpha} * (log n)^{gamma}` with exact
/// rational exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RateExpr {
    pub alpha: Rational,
    pub gamma: Rational,
}

impl RateExpr {
    pub fn new(alpha: Rational, gamma: Rational) -> Self {
        RateExpr { alpha, gamma }
    }

    /// Eventual-domination order. `Less` means `self` is eventually smaller
    /// than `other`, i.e. `self/other -> 0`: larger `alpha` wins, ties are
    /// broken by smaller `gamma`. `Equal` means same order.
    pub fn eventual_cmp(&self, other: &RateExpr) -> Ordering {
        match self.alpha.cmp(&other.alpha) {
            Ordering::Less => Ordering::Greater,
            Ordering::Greater => Ordering::Less,
            Ordering::Equal => self.gamma.cmp(&other.gamma),
        }
    }

    /// Evaluates the representative `n^{-alpha} * (log2 n)^{gamma}` at `n`.
    /// Requires `n >= 2` so the logarithm is positive.
    pub fn eval_log2(&self, n: f64) -> f64 {
        debug_assert!(n >= 2.0);
        let a = to_f64(self.alpha);
        let g = to_f64(self.gamma);
        n.powf(-a) * n.log2().powf(g)
    }
}

/// Product rate: multiplicativity of s-numbers turns composition into
/// exponent addition.
pub fn rate_multiply(a: RateExpr, b: RateExpr) -> RateExpr {
    RateExpr::new(a.alpha + b.alpha, a.gamma + b.gamma)
}

/// Interpolation rate: the two-factor interpolation inequality makes the
/// exponents convex-combine, `(1-theta) a + theta b` componentwise.
pub fn rate_interpolate(a: RateExpr, b: RateExpr, theta: Rational) -> RateExpr {
    let one = rat(1, 1);
    RateExpr::new(
        (one - theta) * a.alpha + theta * b.alpha,
        (one - theta) * a.gamma + theta * b.gamma,
    )
}

/// Lifting (shifting the smoothness of both spaces by the same amount) is an
/// isomorphism of the sequence spaces, so it leaves the rate unchanged.
pub fn rate_lift(a: RateExpr) -> RateExpr {
    a
}

/// Outcome of a rate lookup. `Unknown` is a first-class result: the tables
/// genuinely leave gaps and those are reported truthfully, never papered
/// over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateResult {
    Exact(RateExpr),
    /// Two-sided bracket `lower <= x_n <= upper` for a limiting smoothness;
    /// `lower` never eventually dominates `upper`.
    Bracket { lower: RateExpr, upper: RateExpr },
    /// Bracket whose gap is a power of `log log n`: lower and upper share
    /// `(alpha, gamma)` and the upper side carries an extra
    /// `(log log n)^{loglog_gamma}`.
    BracketLogLog {
        lower: RateExpr,
        upper: RateExpr,
        loglog_gamma: Rational,
    },
    Unknown,
}

impl RateResult {
    pub fn exact(&self) -> Option<RateExpr> {
        match self {
            RateResult::Exact(r) => Some(*r),
            _ => None,
        }
    }

    pub fn kind_label(&self) -> &'static str {
        match self {
            RateResult::Exact(_) => "exact",
            RateResult::Bracket { .. } => "bracket",
            RateResult::BracketLogLog { .. } => "bracket_loglog",
            RateResult::Unknown => "unknown",
        }
    }
}

/// Which s-number scale a rate belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SNumberKind {
    Weyl,
    Approximation,
    Entropy,
}

impl SNumberKind {
    pub fn label(self) -> &'static str {
        match self {
            SNumberKind::Weyl => "weyl",
            SNumberKind::Approximation => "approx",
            SNumberKind::Entropy => "entropy",
        }
    }
}

/// A rate result together with the provenance a table emitter needs: which
/// region/row matched and the condition that selected it.
#[derive(Debug, Clone, PartialEq)]
pub struct RateReport {
    pub snumber: SNumberKind,
    pub result: RateResult,
    pub region: String,
    pub condition: String,
}

fn exact_report(
    snumber: SNumberKind,
    alpha: Rational,
    gamma: Rational,
    region: impl Into<String>,
    condition: impl Into<String>,
) -> RateReport {
    RateReport {
        snumber,
        result: RateResult::Exact(RateExpr::new(alpha, gamma)),
        region: region.into(),
        condition: condition.into(),
    }
}

/// `(alpha, beta)` of a classified Lebesgue-target region. Exposed so that
/// boundary-consistency checks can compare adjacent formulas directly,
/// independent of which canonical tag the classifier picked.
///
/// Returns `None` for the boundary/non-compact tags (no single formula) and
/// for the small-smoothness tags at `p1 = inf` (they need the value of `p1`).
pub fn region_alpha_beta(region: Region, params: &EmbeddingParams) -> Option<(Rational, Rational)> {
    let t = params.t;
    let u = params.u();
    let v = params.v();
    let half = rat(1, 2);
    match region {
        Region::IStar => Some((t, t + half - u)),
        Region::ISub => Some((t, Rational::zero())),
        Region::II => Some((t - half + v, t + v - u)),
        Region::III | Region::IVStar => Some((t - u + v, t + v - u)),
        Region::IVSub | Region::VSub => {
            let p1 = params.p_src.value()?;
            Some((t * p1 / rat(2, 1), t + half - u))
        }
        Region::VStar => Some((t - u + half, t + half - u)),
        Region::BoundaryT(..) | Region::NonCompact => None,
    }
}

/// `rho = min(1, p2)` — the power in the quasi-triangle inequality of the
/// target scale, surfaced in the limiting-case brackets.
fn rho_of(v: Rational) -> Rational {
    // v = 1/p2; validated Lebesgue targets have p2 >= 1, so rho = 1 there.
    if v > rat(1, 1) {
        v.recip()
    } else {
        rat(1, 1)
    }
}

fn boundary_bracket(
    split: TSplit,
    tau: Rational,
    params: &EmbeddingParams,
) -> (RateResult, String) {
    let d1 = rat(params.d as i64 - 1, 1);
    let t = params.t;
    let u = params.u();
    let v = params.v();
    let half = rat(1, 2);
    let rho = rho_of(v);
    match split {
        TSplit::SmallSmoothnessI => {
            // Gap of order (log log n)^{t + 1/rho}; polynomial part n^{-t} on
            // both sides.
            let base = RateExpr::new(t, Rational::zero());
            (
                RateResult::BracketLogLog {
                    lower: base,
                    upper: base,
                    loglog_gamma: t + rho.recip(),
                },
                format!("limiting case t = 1/p1 - 1/2 = {tau}: log-log gap"),
            )
        }
        TSplit::SmallSmoothnessIV => {
            // Extra (log n)^{1/r + 1/rho} on the upper side,
            // 1/r = (1/p2 - 1/p1)/(1 - 2/p1).
            let p1 = params.p_src.value().expect("threshold implies finite p1");
            let r_inv = (v - u) / (rat(1, 1) - rat(2, 1) * u);
            let lower = RateExpr::new(t * p1 / rat(2, 1), d1 * (t + half - u));
            let upper = RateExpr::new(lower.alpha, lower.gamma + r_inv + rho.recip());
            (
                RateResult::Bracket { lower, upper },
                format!(
                    "limiting case t = (1/p2 - 1/p1)/(p1/2 - 1) = {tau}: log gap exponent 1/r + 1/rho"
                ),
            )
        }
        TSplit::SmallSmoothnessV => {
            // t = 1/p1, so alpha = t p1 / 2 = 1/2; extra (log n)^{1/2 + 1/rho}.
            let lower = RateExpr::new(half, d1 * half);
            let upper = RateExpr::new(half, d1 * half + half + rho.recip());
            (
                RateResult::Bracket { lower, upper },
                format!("limiting case t = 1/p1 = {tau}: log gap exponent 1/2 + 1/rho"),
            )
        }
    }
}

fn mixed_weyl_lp(params: &EmbeddingParams) -> Result<RateReport, Error> {
    let region = classify_region(params)?;
    let d1 = rat(params.d as i64 - 1, 1);
    if let Region::BoundaryT(split, tau) = region {
        let (result, condition) = boundary_bracket(split, tau, params);
        return Ok(RateReport {
            snumber: SNumberKind::Weyl,
            result,
            region: region.label(),
            condition,
        });
    }
    let (alpha, beta) =
        region_alpha_beta(region, params).expect("classified region has a formula");
    let condition = match region {
        Region::IStar => "p1,p2 <= 2, t > 1/p1 - 1/2",
        Region::ISub => "p1,p2 <= 2, t < 1/p1 - 1/2",
        Region::II => "p1 <= 2 <= p2",
        Region::III => "2 <= p1 <= p2",
        Region::IVStar => "2 <= p2 < p1, t > (1/p2 - 1/p1)/(p1/2 - 1)",
        Region::IVSub => "2 <= p2 < p1 < inf, t < (1/p2 - 1/p1)/(p1/2 - 1)",
        Region::VStar => "p2 <= 2 < p1, t > 1/p1",
        Region::VSub => "p2 <= 2 < p1 < inf, t < 1/p1",
        _ => unreachable!(),
    };
    Ok(exact_report(
        SNumberKind::Weyl,
        alpha,
        d1 * beta,
        region.label(),
        condition,
    ))
}

fn mixed_weyl_linfty(params: &EmbeddingParams) -> Result<RateReport, Error> {
    let t = params.t;
    let u = params.u();
    let half = rat(1, 2);
    if !is_compact(params) {
        return Err(Error::NonCompact(format!(
            "L_inf target needs t > 1/p1, got t = {t}, 1/p1 = {u}"
        )));
    }
    let d1 = rat(params.d as i64 - 1, 1);
    if u >= half {
        Ok(exact_report(
            SNumberKind::Weyl,
            t - half,
            d1 * (t + half - u),
            "Linf:p1<=2",
            "0 < p1 <= 2, t > 1/p1",
        ))
    } else if t > half + u {
        Ok(exact_report(
            SNumberKind::Weyl,
            t - u,
            d1 * (t + half - u),
            "Linf:p1>2",
            "2 < p1 <= inf, t > 1/2 + 1/p1",
        ))
    } else {
        // 2 < p1 <= inf with 1/p1 < t <= 1/2 + 1/p1 is open.
        Ok(RateReport {
            snumber: SNumberKind::Weyl,
            result: RateResult::Unknown,
            region: "Linf:p1>2".into(),
            condition: "2 < p1 <= inf, 1/p1 < t <= 1/2 + 1/p1: open".into(),
        })
    }
}

fn mixed_weyl_l1(params: &EmbeddingParams) -> Result<RateReport, Error> {
    let t = params.t;
    let u = params.u();
    let half = rat(1, 2);
    if !is_compact(params) {
        return Err(Error::NonCompact(format!(
            "L_1 target needs t > max(0, 1/p1 - 1), got t = {t}, 1/p1 = {u}"
        )));
    }
    let d1 = rat(params.d as i64 - 1, 1);
    let small_thresh = u - half;
    if u > half {
        // p1 < 2
        if t < small_thresh {
            return Ok(exact_report(
                SNumberKind::Weyl,
                t,
                Rational::zero(),
                "L1:p1<2,small",
                "p1 < 2, t < 1/p1 - 1/2",
            ));
        }
        if t == small_thresh {
            return Ok(RateReport {
                snumber: SNumberKind::Weyl,
                result: RateResult::Unknown,
                region: "L1:p1<2".into(),
                condition: "p1 < 2, t = 1/p1 - 1/2: not stated".into(),
            });
        }
    }
    if u >= half {
        // p1 <= 2 and t > 1/p1 - 1/2 (automatic when p1 = 2 since t > 0).
        return Ok(exact_report(
            SNumberKind::Weyl,
            t,
            d1 * (t + half - u),
            "L1:p1<=2,large",
            "p1 <= 2, t > 1/p1 - 1/2",
        ));
    }
    // 2 < p1 <= inf: split at t = 1/p1.
    match t.cmp(&u) {
        Ordering::Greater => Ok(exact_report(
            SNumberKind::Weyl,
            t - u + half,
            d1 * (t + half - u),
            "L1:p1>2,large",
            "2 < p1 <= inf, t > 1/p1",
        )),
        Ordering::Less => {
            let p1 = params.p_src.value().expect("t < 1/p1 forces p1 finite");
            Ok(exact_report(
                SNumberKind::Weyl,
                t * p1 / rat(2, 1),
                d1 * (t + half - u),
                "L1:p1>2,small",
                "2 < p1 < inf, t < 1/p1",
            ))
        }
        Ordering::Equal => Ok(RateReport {
            snumber: SNumberKind::Weyl,
            result: RateResult::Unknown,
            region: "L1:p1>2".into(),
            condition: "2 < p1 < inf, t = 1/p1: not stated".into(),
        }),
    }
}

fn mixed_weyl_zygmund(params: &EmbeddingParams, s: Rational) -> Result<RateReport, Error> {
    let t = params.t;
    let u = params.u();
    let half = rat(1, 2);
    if !is_compact(params) {
        return Err(Error::NonCompact(format!(
            "Zygmund target needs t > s + 1/p1 = {}, got t = {t}",
            s + u
        )));
    }
    let d1 = rat(params.d as i64 - 1, 1);
    let beta = t - s - u;
    if u >= half {
        Ok(exact_report(
            SNumberKind::Weyl,
            t - s - half,
            d1 * beta,
            "Zyg:p1<=2",
            "0 < p1 <= 2, t > s + 1/p1",
        ))
    } else {
        Ok(exact_report(
            SNumberKind::Weyl,
            t - s - u,
            d1 * beta,
            "Zyg:p1>=2",
            "2 <= p1 <= inf, t > s + 1/p1",
        ))
    }
}

/// Weyl-number rate of the mixed-smoothness embedding for any of the four
/// target kinds. Exact wherever a rate row exists; two-sided brackets on the
/// documented limiting smoothness values; `Unknown` where the question is
/// open.
pub fn mixed_weyl_rate(params: &EmbeddingParams) -> Result<RateReport, Error> {
    match params.target {
        Target::Lp(_) => mixed_weyl_lp(params),
        Target::Linfty => mixed_weyl_linfty(params),
        Target::L1 => mixed_weyl_l1(params),
        Target::ZygmundMix(s) => mixed_weyl_zygmund(params, s),
    }
}

/// Approximation-number rate for the Zygmund-type target. Three rows; the
/// interior gap `1 < p1 < 2, t - s = 1` is `Unknown`; `p1 < 1` is a domain
/// error (the table needs the conjugate exponent).
pub fn mixed_approx_rate(params: &EmbeddingParams) -> Result<RateReport, Error> {
    let s = match params.target {
        Target::ZygmundMix(s) => s,
        _ => {
            return Err(Error::Domain(
                "approximation-number table applies to the Zygmund-type target only".into(),
            ))
        }
    };
    let u = params.u();
    if u > rat(1, 1) {
        return Err(Error::Domain(format!(
            "approximation-number table needs p1 >= 1, got 1/p1 = {u}"
        )));
    }
    if !is_compact(params) {
        return Err(Error::NonCompact(format!(
            "Zygmund target needs t > s + 1/p1 = {}, got t = {}",
            s + u,
            params.t
        )));
    }
    let d1 = rat(params.d as i64 - 1, 1);
    let ts = params.t - s;
    let half = rat(1, 2);
    let one = rat(1, 1);
    let beta = ts - u;
    if u <= half {
        // 2 <= p1 <= inf; compactness already gives t - s > 1/p1.
        return Ok(exact_report(
            SNumberKind::Approximation,
            ts - u,
            d1 * beta,
            "aZyg:p1>=2",
            "2 <= p1 <= inf, t - s > 1/p1",
        ));
    }
    if ts > one {
        return Ok(exact_report(
            SNumberKind::Approximation,
            ts - half,
            d1 * beta,
            "aZyg:p1<2,large",
            "1 <= p1 < 2, t - s > 1",
        ));
    }
    if u < one && ts < one {
        // 1 < p1 < 2 with 1/p1 < t - s < 1; conjugate exponent p1' = 1/(1 - 1/p1).
        let half_conj = (rat(2, 1) * (one - u)).recip(); // p1'/2
        return Ok(exact_report(
            SNumberKind::Approximation,
            half_conj * (ts - u),
            d1 * beta,
            "aZyg:p1<2,small",
            "1 < p1 < 2, 1/p1 < t - s < 1",
        ));
    }
    Ok(RateReport {
        snumber: SNumberKind::Approximation,
        result: RateResult::Unknown,
        region: "aZyg:p1<2".into(),
        condition: "1 < p1 < 2, t - s = 1: not stated".into(),
    })
}

/// Entropy-number rate for Lebesgue targets. Exact under
/// `t > max(0, 1/p1 - 1/2, 1/p1 - 1/p2)`, `Unknown` whenever that condition
/// fails. The condition subsumes compactness, so non-compact inputs also
/// report `Unknown` rather than erroring.
pub fn entropy_rate(params: &EmbeddingParams) -> Result<RateReport, Error> {
    if !matches!(params.target, Target::Lp(_)) {
        return Err(Error::Domain("entropy table applies to Lp targets only".into()));
    }
    let t = params.t;
    let u = params.u();
    let v = params.v();
    let half = rat(1, 2);
    let d1 = rat(params.d as i64 - 1, 1);
    let threshold = pos(pos(u - half).max(u - v));
    if t > threshold {
        Ok(exact_report(
            SNumberKind::Entropy,
            t,
            d1 * (t + half - u),
            "entropy",
            "t > max(0, 1/p1 - 1/2, 1/p1 - 1/p2)",
        ))
    } else {
        Ok(RateReport {
            snumber: SNumberKind::Entropy,
            result: RateResult::Unknown,
            region: "entropy".into(),
            condition: "t <= max(0, 1/p1 - 1/2, 1/p1 - 1/p2): only large smoothness is known"
                .into(),
        })
    }
}

/// Isotropic (one-dimensional interval) Weyl rate table. Unlike the mixed
/// table it admits `p2 = 1` and `p2 = inf` directly, region I carries no
/// smoothness split, and the IV/V thresholds are open (`Unknown`).
pub fn isotropic_weyl_rate(
    t: Rational,
    p_src: Exponent,
    p_tgt: Exponent,
) -> Result<RateReport, Error> {
    let u = p_src.recip();
    let v = p_tgt.recip();
    if v > rat(1, 1) {
        return Err(Error::Domain(format!(
            "isotropic table needs 1 <= p2 <= inf, got 1/p2 = {v}"
        )));
    }
    if t <= pos(u - v) {
        return Err(Error::NonCompact(format!(
            "t = {t} <= max(0, 1/p1 - 1/p2) = {}",
            pos(u - v)
        )));
    }
    let half = rat(1, 2);
    let report = |alpha: Rational, region: &str, condition: &str| {
        Ok(exact_report(SNumberKind::Weyl, alpha, Rational::zero(), region, condition))
    };
    match base_region(u, v) {
        BaseRegion::I => report(t, "I", "p1,p2 <= 2"),
        BaseRegion::II => report(t + v - half, "II", "p1 <= 2 <= p2"),
        BaseRegion::III => report(t + v - u, "III", "2 <= p1 <= p2"),
        BaseRegion::IV => {
            if u.is_zero() {
                return report(t + v - u, "IV*", "2 <= p2 < p1 = inf");
            }
            let tau = (v - u) * rat(2, 1) * u / (rat(1, 1) - rat(2, 1) * u);
            match t.cmp(&tau) {
                Ordering::Greater => {
                    report(t + v - u, "IV*", "2 <= p2 < p1, t > (1/p2 - 1/p1)/(p1/2 - 1)")
                }
                Ordering::Less => report(
                    t / (rat(2, 1) * u),
                    "IV_*",
                    "2 <= p2 < p1 < inf, t < (1/p2 - 1/p1)/(p1/2 - 1)",
                ),
                Ordering::Equal => Ok(RateReport {
                    snumber: SNumberKind::Weyl,
                    result: RateResult::Unknown,
                    region: "IV".into(),
                    condition: "t = (1/p2 - 1/p1)/(p1/2 - 1): open".into(),
                }),
            }
        }
        BaseRegion::V => {
            if u.is_zero() {
                return report(t - u + half, "V*", "p2 <= 2 < p1 = inf");
            }
            match t.cmp(&u) {
                Ordering::Greater => report(t - u + half, "V*", "p2 <= 2 < p1, t > 1/p1"),
                Ordering::Less => {
                    report(t / (rat(2, 1) * u), "V_*", "p2 <= 2 < p1 < inf, t < 1/p1")
                }
                Ordering::Equal => Ok(RateReport {
                    snumber: SNumberKind::Weyl,
                    result: RateResult::Unknown,
                    region: "V".into(),
                    condition: "t = 1/p1: open".into(),
                }),
            }
        }
    }
}

/// Eventual comparison of entropy and Weyl rates for an Lp target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntropyWeylOrder {
    WeylSmaller,
    EntropySmaller,
    SameOrder,
    Undecided,
}

impl EntropyWeylOrder {
    pub fn label(self) -> &'static str {
        match self {
            EntropyWeylOrder::WeylSmaller => "WeylSmaller",
            EntropyWeylOrder::EntropySmaller => "EntropySmaller",
            EntropyWeylOrder::SameOrder => "SameOrder",
            EntropyWeylOrder::Undecided => "Undecided",
        }
    }
}

/// Compares the entropy and Weyl rates lexicographically; `Undecided` when
/// either side is a bracket or unknown.
pub fn compare_entropy_weyl(params: &EmbeddingParams) -> Result<EntropyWeylOrder, Error> {
    let weyl = mixed_weyl_rate(params)?;
    let entropy = entropy_rate(params)?;
    let (Some(x), Some(e)) = (weyl.result.exact(), entropy.result.exact()) else {
        return Ok(EntropyWeylOrder::Undecided);
    };
    Ok(match x.eventual_cmp(&e) {
        Ordering::Less => EntropyWeylOrder::WeylSmaller,
        Ordering::Greater => EntropyWeylOrder::EntropySmaller,
        Ordering::Equal => EntropyWeylOrder::SameOrder,
    })
}

// ---------------------------------------------------------------------------
// JSON serialization: exact rationals as integer pairs.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
struct RateResultJson {
    kind: String,
    snumber: String,
    region: String,
    condition_notes: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_num: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_den: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_num: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_den: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_alpha_num: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_alpha_den: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_gamma_num: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_gamma_den: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    loglog_gamma_num: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    loglog_gamma_den: Option<i64>,
}

impl RateReport {
    /// Serializes to the stable JSON schema: `kind`, exact rationals as
    /// `*_num`/`*_den` integer pairs, plus `region` and `condition_notes`.
    /// For brackets the `alpha/gamma` fields hold the lower expression.
    pub fn to_json(&self) -> serde_json::Value {
        let mut j = RateResultJson {
            kind: self.result.kind_label().into(),
            snumber: self.snumber.label().into(),
            region: self.region.clone(),
            condition_notes: self.condition.clone(),
            alpha_num: None,
            alpha_den: None,
            gamma_num: None,
            gamma_den: None,
            upper_alpha_num: None,
            upper_alpha_den: None,
            upper_gamma_num: None,
            upper_gamma_den: None,
            loglog_gamma_num: None,
            loglog_gamma_den: None,
        };
        let mut set_lower = |j: &mut RateResultJson, r: RateExpr| {
            j.alpha_num = Some(*r.alpha.numer());
            j.alpha_den = Some(*r.alpha.denom());
            j.gamma_num = Some(*r.gamma.numer());
            j.gamma_den = Some(*r.gamma.denom());
        };
        match self.result {
            RateResult::Exact(r) => set_lower(&mut j, r),
            RateResult::Bracket { lower, upper }
            | RateResult::BracketLogLog { lower, upper, .. } => {
                set_lower(&mut j, lower);
                j.upper_alpha_num = Some(*upper.alpha.numer());
                j.upper_alpha_den = Some(*upper.alpha.denom());
                j.upper_gamma_num = Some(*upper.gamma.numer());
                j.upper_gamma_den = Some(*upper.gamma.denom());
            }
            RateResult::Unknown => {}
        }
        if let RateResult::BracketLogLog { loglog_gamma, .. } = self.result {
            j.loglog_gamma_num = Some(*loglog_gamma.numer());
            j.loglog_gamma_den = Some(*loglog_gamma.denom());
        }
        serde_json::to_value(j).expect("serialization cannot fail")
    }

    /// Parses the schema produced by [`RateReport::to_json`].
    pub fn from_json(value: &serde_json::Value) -> Result<RateReport, Error> {
        let j: RateResultJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("bad rate json: {e}")))?;
        let ratio = |num: Option<i64>, den: Option<i64>, what: &str| -> Result<Rational, Error> {
            match (num, den) {
                (Some(n), Some(d)) if d != 0 => Ok(rat(n, d)),
                _ => Err(Error::Parse(format!("missing or invalid {what} in rate json"))),
            }
        };
        let snumber = match j.snumber.as_str() {
            "weyl" => SNumberKind::Weyl,
            "approx" => SNumberKind::Approximation,
            "entropy" => SNumberKind::Entropy,
            other => return Err(Error::Parse(format!("unknown snumber kind {other:?}"))),
        };
        let result = match j.kind.as_str() {
            "exact" => RateResult::Exact(RateExpr::new(
                ratio(j.alpha_num, j.alpha_den, "alpha")?,
                ratio(j.gamma_num, j.gamma_den, "gamma")?,
            )),
            "bracket" | "bracket_loglog" => {
                let lower = RateExpr::new(
                    ratio(j.alpha_num, j.alpha_den, "alpha")?,
                    ratio(j.gamma_num, j.gamma_den, "gamma")?,
                );
                let upper = RateExpr::new(
                    ratio(j.upper_alpha_num, j.upper_alpha_den, "upper alpha")?,
                    ratio(j.upper_gamma_num, j.upper_gamma_den, "upper gamma")?,
                );
                if j.kind == "bracket" {
                    RateResult::Bracket { lower, upper }
                } else {
                    RateResult::BracketLogLog {
                        lower,
                        upper,
                        loglog_gamma: ratio(
                            j.loglog_gamma_num,
                            j.loglog_gamma_den,
                            "loglog gamma",
                        )?,
                    }
                }
            }
            "unknown" => RateResult::Unknown,
            other => return Err(Error::Parse(format!("unknown rate kind {other:?}"))),
        };
        Ok(RateReport {
            snumber,
            result,
            region: j.region,
            condition: j.condition_notes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{EmbeddingParams, Exponent, Target};

    fn fin(n: i64, d: i64) -> Exponent {
        Exponent::finite(rat(n, d)).unwrap()
    }

    fn lp(t: Rational, p1: Exponent, p2: Exponent, d: u32) -> EmbeddingParams {
        EmbeddingParams::lp(t, p1, p2, d).unwrap()
    }

    fn expect_exact(report: &RateReport, alpha: Rational, gamma: Rational) {
        assert_eq!(
            report.result.exact(),
            Some(RateExpr::new(alpha, gamma)),
            "region {} ({})",
            report.region,
            report.condition
        );
    }

    #[test]
    fn mixed_weyl_worked_examples() {
        // Lebesgue targets.
        let r = mixed_weyl_rate(&lp(rat(1, 1), fin(2, 1), fin(2, 1), 2)).unwrap();
        expect_exact(&r, rat(1, 1), rat(1, 1));
        assert_eq!(r.region, "I*");

        let r = mixed_weyl_rate(&lp(rat(1, 1), fin(1, 1), fin(3, 1), 2)).unwrap();
        expect_exact(&r, rat(5, 6), rat(1, 3));
        assert_eq!(r.region, "II");

        let r = mixed_weyl_rate(&lp(rat(1, 5), fin(4, 1), fin(2, 1), 3)).unwrap();
        expect_exact(&r, rat(2, 5), rat(9, 10));
        assert_eq!(r.region, "V_*");

        // L_inf target.
        let p = EmbeddingParams::new(fin(2, 1), Target::Linfty, rat(1, 1), 2).unwrap();
        let r = mixed_weyl_rate(&p).unwrap();
        expect_exact(&r, rat(1, 2), rat(1, 1));

        // L_1 target.
        let p = EmbeddingParams::new(fin(1, 1), Target::L1, rat(3, 10), 2).unwrap();
        let r = mixed_weyl_rate(&p).unwrap();
        expect_exact(&r, rat(3, 10), rat(0, 1));

        // Zygmund-type target.
        let p =
            EmbeddingParams::new(fin(2, 1), Target::ZygmundMix(rat(1, 1)), rat(3, 1), 2).unwrap();
        let r = mixed_weyl_rate(&p).unwrap();
        expect_exact(&r, rat(3, 2), rat(3, 2));
    }

    #[test]
    fn approx_worked_examples() {
        let p = EmbeddingParams::new(
            Exponent::Infinity,
            Target::ZygmundMix(rat(1, 1)),
            rat(3, 1),
            2,
        )
        .unwrap();
        expect_exact(&mixed_approx_rate(&p).unwrap(), rat(2, 1), rat(2, 1));

        // t - s = 2 with p1 = 1.
        let p = EmbeddingParams::new(fin(1, 1), Target::ZygmundMix(rat(1, 1)), rat(3, 1), 2)
            .unwrap();
        expect_exact(&mixed_approx_rate(&p).unwrap(), rat(3, 2), rat(1, 1));

        // t - s = 4/5 with p1 = 3/2 (conjugate 3).
        let p = EmbeddingParams::new(fin(3, 2), Target::ZygmundMix(rat(1, 1)), rat(9, 5), 2)
            .unwrap();
        expect_exact(&mixed_approx_rate(&p).unwrap(), rat(1, 5), rat(2, 15));
    }

    #[test]
    fn approx_edge_cases() {
        // 1 < p1 < 2 with t - s = 1 exactly: not stated.
        let p = EmbeddingParams::new(fin(3, 2), Target::ZygmundMix(rat(1, 1)), rat(2, 1), 2)
            .unwrap();
        assert_eq!(mixed_approx_rate(&p).unwrap().result, RateResult::Unknown);
        // p1 < 1: domain error.
        let p = EmbeddingParams::new(fin(1, 2), Target::ZygmundMix(rat(1, 1)), rat(9, 2), 2)
            .unwrap();
        assert!(matches!(mixed_approx_rate(&p), Err(Error::Domain(_))));
        // Non-compact: t <= s + 1/p1.
        let p = EmbeddingParams::new(fin(2, 1), Target::ZygmundMix(rat(1, 1)), rat(3, 2), 2)
            .unwrap();
        assert!(matches!(mixed_approx_rate(&p), Err(Error::NonCompact(_))));
    }

    #[test]
    fn entropy_worked_examples() {
        let r = entropy_rate(&lp(rat(1, 1), fin(2, 1), fin(4, 1), 2)).unwrap();
        expect_exact(&r, rat(1, 1), rat(1, 1));

        let r = entropy_rate(&lp(rat(1, 4), fin(1, 1), fin(2, 1), 2)).unwrap();
        assert_eq!(r.result, RateResult::Unknown);

        let r = entropy_rate(&lp(rat(2, 1), Exponent::Infinity, fin(3, 1), 3)).unwrap();
        expect_exact(&r, rat(2, 1), rat(5, 1));
    }

    #[test]
    fn isotropic_worked_examples() {
        let one = rat(1, 1);
        let r = isotropic_weyl_rate(one, fin(1, 1), fin(2, 1)).unwrap();
        expect_exact(&r, rat(1, 1), rat(0, 1));

        let r = isotropic_weyl_rate(one, fin(4, 1), fin(4, 1)).unwrap();
        expect_exact(&r, rat(1, 1), rat(0, 1));

        let r = isotropic_weyl_rate(rat(1, 5), fin(4, 1), fin(2, 1)).unwrap();
        expect_exact(&r, rat(2, 5), rat(0, 1));

        // The IV/V threshold values are open in the isotropic table.
        let r = isotropic_weyl_rate(rat(1, 4), fin(4, 1), fin(2, 1)).unwrap();
        assert_eq!(r.result, RateResult::Unknown);

        // p2 = 1 and p2 = inf are admitted directly.
        let r = isotropic_weyl_rate(one, fin(2, 1), Exponent::Infinity).unwrap();
        expect_exact(&r, rat(1, 2), rat(0, 1));
        let r = isotropic_weyl_rate(rat(1, 5), fin(3, 2), fin(1, 1)).unwrap();
        expect_exact(&r, rat(1, 5), rat(0, 1));
    }

    #[test]
    fn comparator_worked_examples() {
        let c = compare_entropy_weyl(&lp(rat(1, 1), fin(2, 1), fin(2, 1), 2)).unwrap();
        assert_eq!(c, EntropyWeylOrder::SameOrder);
        let c = compare_entropy_weyl(&lp(rat(1, 1), fin(2, 1), fin(4, 1), 2)).unwrap();
        assert_eq!(c, EntropyWeylOrder::EntropySmaller);
        let c = compare_entropy_weyl(&lp(rat(1, 1), fin(4, 1), fin(2, 1), 2)).unwrap();
        assert_eq!(c, EntropyWeylOrder::WeylSmaller);
        // Small smoothness in region I: entropy unknown there.
        let c = compare_entropy_weyl(&lp(rat(1, 10), fin(4, 3), fin(3, 2), 2)).unwrap();
        assert_eq!(c, EntropyWeylOrder::Undecided);
    }

    #[test]
    fn rate_algebra() {
        let a = RateExpr::new(rat(1, 2), rat(1, 1));
        let b = RateExpr::new(rat(1, 1), rat(0, 1));
        assert_eq!(rate_multiply(a, b), RateExpr::new(rat(3, 2), rat(1, 1)));
        assert_eq!(
            rate_interpolate(b, RateExpr::new(rat(0, 1), rat(0, 1)), rat(1, 2)),
            RateExpr::new(rat(1, 2), rat(0, 1))
        );
        assert_eq!(rate_lift(a), a);
    }

    #[test]
    fn eventual_order_is_lexicographic() {
        let fast = RateExpr::new(rat(2, 1), rat(5, 1));
        let slow = RateExpr::new(rat(1, 1), rat(0, 1));
        assert_eq!(fast.eventual_cmp(&slow), Ordering::Less);
        let more_log = RateExpr::new(rat(1, 1), rat(1, 1));
        assert_eq!(slow.eventual_cmp(&more_log), Ordering::Less);
        assert_eq!(slow.eventual_cmp(&slow), Ordering::Equal);
    }

    #[test]
    fn limiting_cases_bracket() {
        // Region I split: log-log bracket.
        let r = mixed_weyl_rate(&lp(rat(1, 4), fin(4, 3), fin(3, 2), 2)).unwrap();
        match r.result {
            RateResult::BracketLogLog { lower, upper, loglog_gamma } => {
                assert_eq!(lower, RateExpr::new(rat(1, 4), rat(0, 1)));
                assert_eq!(upper, lower);
                // t + 1/rho with rho = min(1, p2) = 1.
                assert_eq!(loglog_gamma, rat(5, 4));
            }
            other => panic!("expected log-log bracket, got {other:?}"),
        }

        // Region V split at t = 1/p1 (p2 = 2 < p1 = 4).
        let r = mixed_weyl_rate(&lp(rat(1, 4), fin(4, 1), fin(2, 1), 2)).unwrap();
        match r.result {
            RateResult::Bracket { lower, upper } => {
                assert_eq!(lower, RateExpr::new(rat(1, 2), rat(1, 2)));
                assert_eq!(upper, RateExpr::new(rat(1, 2), rat(2, 1)));
                assert_ne!(lower.eventual_cmp(&upper), Ordering::Greater);
            }
            other => panic!("expected bracket, got {other:?}"),
        }

        // Region IV split: gap exponent 1/r + 1/rho.
        let r = mixed_weyl_rate(&lp(rat(1, 12), fin(4, 1), fin(3, 1), 2)).unwrap();
        match r.result {
            RateResult::Bracket { lower, upper } => {
                // alpha = t p1/2 = 1/6, beta = t + 1/2 - 1/4 = 1/3.
                assert_eq!(lower, RateExpr::new(rat(1, 6), rat(1, 3)));
                // 1/r = (1/3 - 1/4)/(1 - 1/2) = 1/6; upper gamma = 1/3 + 1/6 + 1.
                assert_eq!(upper, RateExpr::new(rat(1, 6), rat(3, 2)));
            }
            other => panic!("expected bracket, got {other:?}"),
        }
    }

    #[test]
    fn linfty_open_window_is_unknown() {
        // 2 < p1, 1/p1 < t <= 1/2 + 1/p1.
        let p = EmbeddingParams::new(fin(4, 1), Target::Linfty, rat(1, 2), 2).unwrap();
        assert_eq!(mixed_weyl_rate(&p).unwrap().result, RateResult::Unknown);
        // Right end of the window is still open.
        let p = EmbeddingParams::new(fin(4, 1), Target::Linfty, rat(3, 4), 2).unwrap();
        assert_eq!(mixed_weyl_rate(&p).unwrap().result, RateResult::Unknown);
        // Just above it: exact.
        let p = EmbeddingParams::new(fin(4, 1), Target::Linfty, rat(4, 5), 2).unwrap();
        expect_exact(&mixed_weyl_rate(&p).unwrap(), rat(11, 20), rat(21, 20));
    }

    #[test]
    fn l1_threshold_is_unknown() {
        let p = EmbeddingParams::new(fin(4, 3), Target::L1, rat(1, 4), 2).unwrap();
        assert_eq!(mixed_weyl_rate(&p).unwrap().result, RateResult::Unknown);
        let p = EmbeddingParams::new(fin(4, 1), Target::L1, rat(1, 4), 2).unwrap();
        assert_eq!(mixed_weyl_rate(&p).unwrap().result, RateResult::Unknown);
    }

    #[test]
    fn linfty_matches_lebesgue_limit_with_extra_half_log() {
        // Formula identity: plugging 1/p2 = 0 into the region II/III rows
        // reproduces the L_inf alpha, and the L_inf beta exceeds the
        // Lebesgue-limit beta by exactly 1/2.
        for (p1n, p1d) in [(1i64, 1i64), (3, 2), (2, 1), (3, 1), (8, 1)] {
            let u = rat(p1d, p1n);
            for tn in 2..6i64 {
                let t = rat(tn, 1) + u; // safely above every gate
                let alpha_lim;
                let beta_lim;
                if u >= rat(1, 2) {
                    // region II row at v = 0
                    alpha_lim = t - rat(1, 2);
                    beta_lim = t - u;
                } else {
                    // region III row at v = 0
                    alpha_lim = t - u;
                    beta_lim = t - u;
                }
                let p = EmbeddingParams::new(fin(p1n, p1d), Target::Linfty, t, 2).unwrap();
                let r = mixed_weyl_rate(&p).unwrap().result.exact().unwrap();
                assert_eq!(r.alpha, alpha_lim);
                assert_eq!(r.gamma, beta_lim + rat(1, 2), "beta gap must be exactly 1/2");
            }
        }
    }

    #[test]
    fn zygmund_is_not_the_s_to_zero_limit_of_linfty() {
        // At s -> 0 the Zygmund beta is t - 1/p1; the L_inf beta is
        // t + 1/2 - 1/p1. The gap is exactly 1/2 (times d-1 in gamma).
        for (p1n, p1d) in [(3i64, 2i64), (2, 1), (4, 1)] {
            let u = rat(p1d, p1n);
            let t = rat(2, 1) + u;
            let d = 3u32;
            let zyg_gamma_at_s0 = rat(d as i64 - 1, 1) * (t - u);
            let p = EmbeddingParams::new(fin(p1n, p1d), Target::Linfty, t, d).unwrap();
            let linf = mixed_weyl_rate(&p).unwrap().result.exact().unwrap();
            assert_eq!(linf.gamma - zyg_gamma_at_s0, rat(d as i64 - 1, 1) * rat(1, 2));
        }
    }

    #[test]
    fn d1_specialization_matches_isotropic() {
        // Away from thresholds the mixed table at d = 1 equals the isotropic
        // table (gamma = 0).
        let cases = [
            (rat(1, 1), fin(3, 2), fin(3, 2)),
            (rat(1, 10), fin(4, 3), fin(3, 2)),
            (rat(1, 1), fin(3, 2), fin(3, 1)),
            (rat(1, 1), fin(3, 1), fin(4, 1)),
            (rat(1, 1), fin(4, 1), fin(3, 1)),
            (rat(1, 20), fin(4, 1), fin(3, 1)),
            (rat(1, 1), fin(4, 1), fin(3, 2)),
            (rat(1, 5), fin(4, 1), fin(3, 2)),
        ];
        for (t, p1, p2) in cases {
            let mixed = mixed_weyl_rate(&lp(t, p1, p2, 1)).unwrap().result.exact().unwrap();
            let iso = isotropic_weyl_rate(t, p1, p2).unwrap().result.exact().unwrap();
            assert_eq!(mixed, iso, "t={t} p1={p1:?} p2={p2:?}");
            assert_eq!(mixed.gamma, rat(0, 1));
        }
    }

    #[test]
    fn json_round_trip() {
        let reports = [
            mixed_weyl_rate(&lp(rat(1, 1), fin(2, 1), fin(2, 1), 2)).unwrap(),
            mixed_weyl_rate(&lp(rat(1, 4), fin(4, 1), fin(2, 1), 2)).unwrap(),
            mixed_weyl_rate(&lp(rat(1, 4), fin(4, 3), fin(3, 2), 2)).unwrap(),
            entropy_rate(&lp(rat(1, 4), fin(1, 1), fin(2, 1), 2)).unwrap(),
        ];
        for report in reports {
            let json = report.to_json();
            let back = RateReport::from_json(&json).unwrap();
            assert_eq!(back, report);
        }
    }
}
