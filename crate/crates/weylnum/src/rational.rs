//! Exact rational scalar used throughout the classification and rate tables.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// Exact rational number. All exponents, smoothness parameters and region
/// thresholds are kept in this type; nothing in the tables is ever rounded.
pub type Rational = Ratio<i64>;

/// Shorthand constructor, `rat(a, b) = a/b`.
pub fn rat(num: i64, den: i64) -> Rational {
    Ratio::new(num, den)
}

/// Positive part `max(r, 0)`.
pub fn pos(r: Rational) -> Rational {
    if r.is_negative() {
        Rational::zero()
    } else {
        r
    }
}

/// Parses an exact rational from `"3"`, `"-3/5"` or a finite decimal such as
/// `"0.4"` (kept exact: `0.4 -> 2/5`).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if d == 0 {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Ratio::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
        let i: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse()
                .map_err(|_| Error::Parse(format!("bad decimal in {s:?}")))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal in {s:?}")));
        }
        if frac.len() > 15 {
            return Err(Error::Parse(format!("decimal too long in {s:?}")));
        }
        let f: i64 = frac.parse().unwrap();
        let den = 10i64.pow(frac.len() as u32);
        return Ok(Ratio::from_integer(i) + Ratio::new(sign * f, den));
    }
    let n: i64 = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    Ok(Ratio::from_integer(n))
}

/// Renders a rational as `"num/den"`, always with an explicit denominator
/// (`1 -> "1/1"`). This is the wire format used in JSON output.
pub fn format_ratio(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Converts to `f64`. Exact only up to double precision; used by the
/// numerical harnesses, never by the classification.
pub fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_decimals_integers() {
        assert_eq!(parse_rational("3/5").unwrap(), rat(3, 5));
        assert_eq!(parse_rational("0.4").unwrap(), rat(2, 5));
        assert_eq!(parse_rational("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rational(" 2 / 4 ").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn formats_with_explicit_denominator() {
        assert_eq!(format_ratio(rat(1, 1)), "1/1");
        assert_eq!(format_ratio(rat(-3, 6)), "-1/2");
    }
}
