//! Arbitrary-precision rationals and the `p/q` textual encoding used
//! throughout the instance format.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `p`, `-p/q` or `p/q` with arbitrary-precision integers.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("bad integer `{num}` in rational `{s}`"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("bad integer `{den}` in rational `{s}`"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in rational `{s}`"));
    }
    Ok(Rat::new(n, d))
}

/// Canonical `p/q` form; integers print without the `/1`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Largest integer `n` with `n <= r`.
pub fn rat_floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

pub fn rat_ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

/// `|numerator|` and denominator magnitude, the size measure used for
/// height computations.
pub fn rat_height(r: &Rat) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().abs();
    if n > d {
        n
    } else {
        d
    }
}

/// Rational power with integer exponent (negative allowed for nonzero base).
pub fn rat_pow(r: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let mut base = if e < 0 {
        assert!(!r.is_zero(), "zero to negative power");
        r.recip()
    } else {
        r.clone()
    };
    let mut n = e.unsigned_abs();
    let mut acc = Rat::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

/// 2^-k as a rational, handy for dyadic tolerances.
pub fn dyadic(k: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::from(2u32).pow(k))
}

/// Round `r` outward (away from the true value in direction `up`) to a dyadic
/// with `bits` fractional bits. Keeps interval endpoints from accumulating
/// huge denominators during refinement loops.
pub fn round_dyadic(r: &Rat, bits: u32, up: bool) -> Rat {
    let scale = BigInt::one() << bits;
    let scaled = r * Rat::from_integer(scale.clone());
    let i = if up {
        scaled.ceil().to_integer()
    } else {
        scaled.floor().to_integer()
    };
    Rat::new(i, scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), rat_i(-7));
        assert_eq!(parse_rat(" 6/ 4 ").unwrap(), rat(3, 2));
        assert!(parse_rat("1/0").is_err());
        assert_eq!(fmt_rat(&rat(8, 4)), "2");
        assert_eq!(fmt_rat(&rat(-3, 9)), "-1/3");
    }

    #[test]
    fn powers_and_rounding() {
        assert_eq!(rat_pow(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(rat_pow(&rat(2, 1), -2), rat(1, 4));
        let r = rat(1, 3);
        let up = round_dyadic(&r, 8, true);
        let dn = round_dyadic(&r, 8, false);
        assert!(dn <= r && r <= up);
        assert!(&up - &dn <= dyadic(8));
    }
}
