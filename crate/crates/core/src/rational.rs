//! Helpers around the exact rational scalar type.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use wallcross_polyring::{rat, Rational};

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Parses `p`, `-p` or `p/q` (surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Decimal rendering with `digits` significant digits (round half away from
/// zero), trailing zeros removed, never in exponent notation.
pub fn format_significant(x: &Rational, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let ax = x.abs();
    let ten = BigInt::from(10);
    // exponent e with 10^e <= |x| < 10^(e+1)
    let mut e: i64 = ax.numer().to_string().len() as i64 - ax.denom().to_string().len() as i64;
    let pow10 = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while ax >= pow10(e + 1) {
        e += 1;
    }
    while ax < pow10(e) {
        e -= 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = &ax * pow10(shift);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut n = (scaled + half).floor().to_integer();
    let mut shift = shift;
    if n == num_traits::pow(ten.clone(), digits as usize) {
        n /= &ten;
        shift -= 1;
    }
    let digits_str = n.to_string();
    let body = if shift <= 0 {
        let mut s = digits_str;
        s.extend(std::iter::repeat_n('0', (-shift) as usize));
        s
    } else {
        let shift = shift as usize;
        let padded = if digits_str.len() <= shift {
            format!("{}{}", "0".repeat(shift - digits_str.len() + 1), digits_str)
        } else {
            digits_str
        };
        let (int, frac) = padded.split_at(padded.len() - shift);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// `⌊√x · 10^k⌋ / 10^k` for `x ≥ 0`.
pub fn sqrt_approx(x: &Rational, k: u32) -> Rational {
    assert!(!x.is_negative(), "square root of a negative number");
    let scale = num_traits::pow(BigInt::from(10), k as usize);
    let big = (x * Rational::from_integer(&scale * &scale)).floor().to_integer();
    Rational::new(big.sqrt(), scale)
}

/// Exact square root when `x` is the square of a rational.
pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(rn, rd))
}

/// Serde adapter writing a rational as its `p/q` string.
pub mod as_string {
    use super::{parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(q)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rational(&s).ok_or_else(|| D::Error::custom(format!("`{s}` is not a rational number")))
    }
}
