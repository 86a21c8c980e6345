//! Exact rationals and the binomial/hypergeometric primitives behind every
//! bound. Nothing in here touches floating point except [`to_decimal`],
//! which renders an exact value for plotting.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for `num / den`.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `C(a, b)`, extended by zero outside `0 <= b <= a`.
///
/// Uses the multiplicative formula; each partial product `C(a-b+i, i)` is an
/// integer so the division is exact at every step.
pub fn binomial(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigUint::one();
    for i in 1..=b {
        acc *= a - b + i;
        acc /= i;
    }
    acc
}

/// Probability that `draws` items taken without replacement from a
/// population containing `successes` marked items include exactly
/// `observed` marked ones.
///
/// Panics when `draws > population` or `successes > population`.
pub fn hypergeom_weight(population: u64, successes: u64, draws: u64, observed: i64) -> Rational {
    assert!(
        draws <= population,
        "draws {draws} > population {population}"
    );
    assert!(
        successes <= population,
        "successes {successes} > population {population}"
    );
    let num =
        binomial(successes, observed) * binomial(population - successes, draws as i64 - observed);
    let den = binomial(population, draws as i64);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `"p/q"`, or just `"p"` for integers.
pub fn to_exact_string(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p/q"`, `"p"`, or a negative variant of either.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Decimal rendering of `x` rounded to `places` digits after the point
/// (round half away from zero), with trailing zeros trimmed.
pub fn to_decimal(x: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = x.numer().abs() * &scale;
    let den = x.denom();
    let (q, r) = scaled.div_rem(den);
    let q = if r * 2u32 >= *den { q + 1u32 } else { q };
    let (int_part, frac_part) = q.div_rem(&scale);
    let mut out = String::new();
    if x.is_negative() && !(int_part.is_zero() && frac_part.is_zero()) {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 && !frac_part.is_zero() {
        let digits = format!("{:0>width$}", frac_part, width = places as usize);
        out.push('.');
        out.push_str(digits.trim_end_matches('0'));
    }
    out
}

/// Lossy conversion for plotting only.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
