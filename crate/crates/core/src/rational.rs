//! Exact rational scalars and integer helpers.
//!
//! All coefficient arithmetic in this crate goes through [`Rational`],
//! an arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. Fixed-width integers are never used for coefficient math.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always in lowest terms, denominator > 0.
pub type Rational = num_rational::BigRational;

/// `Int` from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// `Rational` from a machine integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Int::from(v))
}

/// `Rational` from an `Int`.
pub fn rat_int(v: &Int) -> Rational {
    Rational::from_integer(v.clone())
}

/// `num/den` as an exact rational. Panics if `den == 0`; intended for
/// literals in code and tests.
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(Int::from(num), Int::from(den))
}

/// Parses "p" or "p/q" with arbitrary-precision decimal integers.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Int = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {s:?}")))?;
    let den: Int = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// True iff `r` has denominator 1.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// The integer value of `r` when it has denominator 1.
pub fn to_int(r: &Rational) -> Option<Int> {
    is_integer(r).then(|| r.numer().clone())
}

/// Floor of an exact rational as an `Int`.
pub fn floor_int(r: &Rational) -> Int {
    r.floor().to_integer()
}

/// Ceiling of an exact rational as an `Int`.
pub fn ceil_int(r: &Rational) -> Int {
    r.ceil().to_integer()
}

/// `n!` as an `Int`.
pub fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Binomial coefficient with an arbitrary (possibly negative) integer top.
///
/// Computed as the falling factorial over `k!`; every intermediate division
/// is exact.
pub fn binomial(top: &Int, k: usize) -> Int {
    let mut acc = Int::one();
    for i in 0..k {
        acc *= top - Int::from(i);
        acc /= Int::from(i + 1);
    }
    acc
}

/// Binomial coefficient with machine-sized arguments; 0 when `k > n`.
pub fn binomial_u(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    binomial(&Int::from(n), k)
}

/// `base^exp` for a nonnegative machine exponent.
pub fn int_pow(base: i64, exp: u32) -> Int {
    Int::from(base).pow(exp)
}

/// `base^exp` as a rational, allowing negative exponents.
pub fn rat_pow(base: i64, exp: i64) -> Rational {
    assert!(base != 0 || exp >= 0, "negative power of zero");
    let mag = Int::from(base).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(Int::one(), mag)
    }
}

/// `base^exp` for a rational base and nonnegative exponent.
pub fn rat_pow_int(base: &Int, exp: u32) -> Rational {
    Rational::from_integer(base.pow(exp))
}

/// Debug-build check that a rational is in gcd-normal form.
pub fn debug_assert_reduced(r: &Rational) {
    if cfg!(debug_assertions) {
        debug_assert!(r.denom().is_positive(), "denominator must be positive");
        debug_assert!(
            r.numer().gcd(r.denom()).is_one() || r.numer().is_zero(),
            "rational not in lowest terms: {r}"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-11/7").unwrap(), ratio(-11, 7));
        assert_eq!(parse_rational("42").unwrap(), rat(42));
        assert_eq!(format!("{}", ratio(-11, 7)), "-11/7");
        assert_eq!(format!("{}", rat(5)), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn reduction_is_automatic() {
        let r = Rational::new(Int::from(6), Int::from(-8));
        assert_eq!(r, ratio(-3, 4));
        debug_assert_reduced(&r);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(&int(7), 3), int(35));
        assert_eq!(binomial(&int(3), 7), int(0));
        assert_eq!(binomial(&int(0), 0), int(1));
        // negative top follows the falling-factorial convention
        assert_eq!(binomial(&int(-1), 3), int(-1));
        assert_eq!(binomial_u(12, 9), int(220));
    }

    #[test]
    fn powers() {
        assert_eq!(rat_pow(2, -3), ratio(1, 8));
        assert_eq!(rat_pow(3, 2), rat(9));
        assert_eq!(rat_pow(3, -1), ratio(1, 3));
        assert_eq!(int_pow(3, 26), "2541865828329".parse::<Int>().unwrap());
    }

    #[test]
    fn floors() {
        assert_eq!(floor_int(&ratio(7, 3)), int(2));
        assert_eq!(floor_int(&ratio(-7, 3)), int(-3));
        assert_eq!(ceil_int(&ratio(7, 3)), int(3));
        assert_eq!(to_int(&rat(9)), Some(int(9)));
        assert_eq!(to_int(&ratio(9, 2)), None);
    }
}
