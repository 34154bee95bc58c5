//! Arbitrary-precision rational scalars and small helpers around them.
//!
//! Rationals are always stored in lowest terms with a positive denominator;
//! every operation is exact.

use num::{BigInt, BigRational, One, Zero};

use crate::Error;

pub type Rat = BigRational;
pub type Int = BigInt;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// The rational `n/d`. Panics if `d` is zero.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Parses `"p"` or `"p/q"` into a rational, rejecting zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::BadRational(s.to_string());
    match s.split_once('/') {
        Some((num, den)) => {
            let num: Int = num.trim().parse().map_err(|_| bad())?;
            let den: Int = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(num, den))
        }
        None => {
            let num: Int = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(num))
        }
    }
}

/// Renders a rational as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}
