//! Deterministic numeric formatting: decimal strings for exact rationals
//! (with directed rounding, so enclosures stay enclosures) and decimal
//! parsing for tolerances and weights.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use penner_entropy::Rational;

/// Decimal digits carried by enclosure endpoints in JSON output.
pub const ENCLOSURE_DIGITS: u32 = 24;

/// Decimal string of `x` with `digits` fractional digits, rounded toward
/// `-inf` (`RoundDown`) or `+inf` (`RoundUp`). Trailing zeros are trimmed.
pub fn rational_decimal(x: &Rational, digits: u32, round_up: bool) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x * Rational::from(scale.clone());
    // floor or ceil of the scaled value
    let (quot, rem) = (
        scaled.numer() / scaled.denom(),
        scaled.numer() % scaled.denom(),
    );
    let mut units = quot;
    if !rem.is_zero() {
        if round_up && !scaled.is_negative() {
            units += 1;
        }
        if !round_up && scaled.is_negative() {
            units -= 1;
        }
    }
    let negative = units.is_negative();
    let magnitude = units.magnitude().to_string();
    let (int_part, frac_part) = if magnitude.len() > digits as usize {
        let split = magnitude.len() - digits as usize;
        (magnitude[..split].to_string(), magnitude[split..].to_string())
    } else {
        (
            "0".to_string(),
            format!("{:0>width$}", magnitude, width = digits as usize),
        )
    };
    let frac_trimmed = frac_part.trim_end_matches('0');
    let sign = if negative { "-" } else { "" };
    if frac_trimmed.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_trimmed}")
    }
}

/// Parses a plain decimal literal (`-12`, `0.5`, `+3.25`) into an exact
/// rational. No exponent notation.
pub fn parse_decimal_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (sign, body) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text.strip_prefix('+').unwrap_or(text)),
    };
    if body.is_empty() {
        return None;
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(Rational::new(numer * sign, denom))
}

/// Shortest round-trip formatting of a float; `Display` for `f64` is
/// deterministic.
pub fn f64_string(x: f64) -> String {
    format!("{x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn directed_rounding() {
        let third = rat(1, 3);
        assert_eq!(rational_decimal(&third, 5, false), "0.33333");
        assert_eq!(rational_decimal(&third, 5, true), "0.33334");
        let neg = rat(-1, 3);
        assert_eq!(rational_decimal(&neg, 5, false), "-0.33334");
        assert_eq!(rational_decimal(&neg, 5, true), "-0.33333");
        assert_eq!(rational_decimal(&rat(7, 2), 4, false), "3.5");
        assert_eq!(rational_decimal(&rat(4, 1), 6, true), "4");
        assert_eq!(rational_decimal(&rat(0, 1), 6, true), "0");
    }

    #[test]
    fn decimal_parsing() {
        assert_eq!(parse_decimal_rational("0.5"), Some(rat(1, 2)));
        assert_eq!(parse_decimal_rational("-12"), Some(rat(-12, 1)));
        assert_eq!(parse_decimal_rational("+3.25"), Some(rat(13, 4)));
        assert_eq!(parse_decimal_rational("1e-3"), None);
        assert_eq!(parse_decimal_rational(""), None);
        assert_eq!(parse_decimal_rational("."), None);
        assert_eq!(parse_decimal_rational("0.125"), Some(rat(1, 8)));
    }
}
