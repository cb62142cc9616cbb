//! The hyperbolic-cross block model: level multiplicities `D_mu`, the
//! block-diagonal weight structure `2^{-mu t}`, and the exact diagonal
//! spectrum for the Hilbert case.
//!
//! Level `mu` collects the dyadic multi-indices `nu` in `N_0^d` with
//! `|nu|_1 = mu`. The model assigns each index the cell count
//! `prod_l (2^{nu_l} + c)` with a configurable additive overlap constant
//! `c >= 0` per axis (default `c = 0`, i.e. exactly `2^{|nu|_1}` cells), so
//! that fitted exponents can be shown to be robust under the bounded
//! constants the cell counts are only known up to.
//!
//! Nothing here materializes level entries: all rank queries run on
//! cumulative counts in 128-bit integers.

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::rational::{rat, to_f64, Rational};

/// Hard cap on the level index; beyond this the 128-bit counts would not be
/// trustworthy anyway.
const MAX_LEVEL: u32 = 2_000;

fn checked_binomial(n: u128, k: u128) -> Result<u128, Error> {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .ok_or_else(|| Error::Overflow(format!("binomial({n},{k})")))?;
        acc /= i + 1;
    }
    Ok(acc)
}

/// Number of model cells on level `mu` in dimension `d` with overlap
/// constant 0: `binom(mu+d-1, d-1) * 2^mu` (compositions of `mu` into `d`
/// parts, each index carrying `2^mu` cells).
pub fn block_size(d: u32, mu: u32) -> Result<u128, Error> {
    block_size_with_overlap(d, mu, 0)
}

/// Level size with an additive per-axis overlap constant `c`: each index
/// `nu` carries `prod_l (2^{nu_l} + c)` cells. Computed by convolving the
/// per-axis cell counts `a_k = 2^k + c` `d` times.
pub fn block_size_with_overlap(d: u32, mu: u32, c: u64) -> Result<u128, Error> {
    if d == 0 {
        return Err(Error::Domain("dimension d must be >= 1".into()));
    }
    if mu > MAX_LEVEL {
        return Err(Error::Overflow(format!("level {mu} exceeds the supported maximum")));
    }
    if c == 0 {
        let binom = checked_binomial((mu + d - 1) as u128, (d - 1) as u128)?;
        let pow = 1u128
            .checked_shl(mu)
            .ok_or_else(|| Error::Overflow(format!("2^{mu}")))?;
        return binom
            .checked_mul(pow)
            .ok_or_else(|| Error::Overflow(format!("block_size(d={d}, mu={mu})")));
    }
    let axis: Vec<u128> = (0..=mu)
        .map(|k| {
            1u128
                .checked_shl(k)
                .and_then(|p| p.checked_add(c as u128))
                .ok_or_else(|| Error::Overflow(format!("2^{k} + {c}")))
        })
        .collect::<Result<_, _>>()?;
    // dp[j] = sum over nu in N_0^i with |nu|_1 = j of prod axis[nu_l]
    let mut dp = vec![0u128; mu as usize + 1];
    dp[0] = 1;
    for _ in 0..d {
        let mut next = vec![0u128; mu as usize + 1];
        for (j, &w) in dp.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for (k, &a) in axis.iter().enumerate().take(mu as usize + 1 - j) {
                let term = w
                    .checked_mul(a)
                    .ok_or_else(|| Error::Overflow("block size convolution".into()))?;
                next[j + k] = next[j + k]
                    .checked_add(term)
                    .ok_or_else(|| Error::Overflow("block size convolution".into()))?;
            }
        }
        dp = next;
    }
    Ok(dp[mu as usize])
}

/// An exact power of two with rational exponent, `value = 2^{log2}`.
/// The diagonal weights `2^{-mu t}` live here; for non-integer `mu t` the
/// value is irrational, so the exponent is the exact datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DyadicValue {
    pub log2: Rational,
}

impl DyadicValue {
    pub fn to_f64(self) -> f64 {
        2f64.powf(to_f64(self.log2))
    }

    /// Exact rational value when the exponent is an integer of moderate
    /// size; `None` otherwise.
    pub fn to_rational(self) -> Option<Rational> {
        if !self.log2.is_integer() {
            return None;
        }
        let e = *self.log2.numer();
        if e.abs() > 62 {
            return None;
        }
        Some(if e >= 0 {
            rat(1i64 << e, 1)
        } else {
            rat(1, 1i64 << (-e))
        })
    }
}

/// The block model: dimension, smoothness, and the overlap constant feeding
/// the level sizes. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockModel {
    d: u32,
    t: Rational,
    overlap: u64,
}

impl BlockModel {
    pub fn new(d: u32, t: Rational) -> Result<Self, Error> {
        Self::with_overlap(d, t, 0)
    }

    pub fn with_overlap(d: u32, t: Rational, overlap: u64) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::Domain("dimension d must be >= 1".into()));
        }
        if !t.is_positive() {
            return Err(Error::Domain(format!("smoothness t must be positive, got {t}")));
        }
        Ok(BlockModel { d, t, overlap })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn t(&self) -> Rational {
        self.t
    }

    /// `D_mu` under this model's overlap constant.
    pub fn level_size(&self, mu: u32) -> Result<u128, Error> {
        block_size_with_overlap(self.d, mu, self.overlap)
    }

    /// Model weight `2^{-mu t}` of every entry on level `mu`.
    pub fn level_weight(&self, mu: u32) -> DyadicValue {
        DyadicValue { log2: -self.t * rat(mu as i64, 1) }
    }

    pub fn spectrum(&self) -> DiagonalSpectrum<'_> {
        DiagonalSpectrum { model: self }
    }
}

/// Rank-query view of the nonincreasing diagonal spectrum
/// `D_0` entries of weight `1`, `D_1` entries of weight `2^{-t}`, ...
/// Never materializes a level.
#[derive(Debug, Clone, Copy)]
pub struct DiagonalSpectrum<'a> {
    model: &'a BlockModel,
}

impl DiagonalSpectrum<'_> {
    /// Level containing ordinal `n` (1-based) under cumulative counts.
    pub fn level_of(&self, n: u128) -> Result<u32, Error> {
        if n == 0 {
            return Err(Error::Domain("spectrum ordinals are 1-based".into()));
        }
        let mut cum: u128 = 0;
        for mu in 0..=MAX_LEVEL {
            cum = cum
                .checked_add(self.model.level_size(mu)?)
                .ok_or_else(|| Error::Overflow("cumulative level count".into()))?;
            if cum >= n {
                return Ok(mu);
            }
        }
        Err(Error::Overflow(format!("ordinal {n} beyond level cap")))
    }

    /// The `n`-th largest diagonal entry, `2^{-mu(n) t}`.
    pub fn nth_singular_value(&self, n: u128) -> Result<DyadicValue, Error> {
        Ok(self.model.level_weight(self.level_of(n)?))
    }

    /// Values at several ordinals in one pass over the levels.
    /// `n_values` must be sorted ascending.
    pub fn samples(&self, n_values: &[u128]) -> Result<Vec<(u128, DyadicValue)>, Error> {
        if n_values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Domain("sample ordinals must be sorted ascending".into()));
        }
        let mut out = Vec::with_capacity(n_values.len());
        let mut cum: u128 = 0;
        let mut mu: u32 = 0;
        let mut cum_through_mu = self.model.level_size(0)?;
        for &n in n_values {
            if n == 0 {
                return Err(Error::Domain("spectrum ordinals are 1-based".into()));
            }
            while cum + cum_through_mu < n {
                cum += cum_through_mu;
                mu += 1;
                if mu > MAX_LEVEL {
                    return Err(Error::Overflow(format!("ordinal {n} beyond level cap")));
                }
                cum_through_mu = self.model.level_size(mu)?;
            }
            out.push((n, self.model.level_weight(mu)));
        }
        Ok(out)
    }
}

/// Free-function forms of the spectrum queries.
pub fn nth_singular_value(model: &BlockModel, n: u128) -> Result<DyadicValue, Error> {
    model.spectrum().nth_singular_value(n)
}

pub fn spectrum_samples(
    model: &BlockModel,
    n_values: &[u128],
) -> Result<Vec<(u128, DyadicValue)>, Error> {
    model.spectrum().samples(n_values)
}
