//! Exact scalars: arbitrary-precision rationals and small helpers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Exact rational scalar used everywhere in the engine.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient C(n, k) for integer (possibly negative) n and k >= 0.
///
/// For negative n this is the generalized coefficient
/// C(-m, k) = (-1)^k C(m + k - 1, k) used in binomial series.
pub fn binomial(n: i64, k: u32) -> Rat {
    let mut acc = Rat::one();
    for j in 0..k as i64 {
        acc *= rat_int(n - j);
        acc /= rat_int(j + 1);
    }
    acc
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign-aware prefix for report printing: `+ 3/2`, `- 1`.
pub fn fmt_signed(r: &Rat) -> String {
    if r.is_negative() {
        format!("- {}", fmt_rat(&-r.clone()))
    } else {
        format!("+ {}", fmt_rat(r))
    }
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 2), rat_int(6));
        assert_eq!(binomial(4, 0), rat_int(1));
        assert_eq!(binomial(3, 5), rat_int(0));
    }

    #[test]
    fn binomial_negative_is_series_coefficient() {
        // (1+x)^{-1} = 1 - x + x^2 - ...
        assert_eq!(binomial(-1, 0), rat_int(1));
        assert_eq!(binomial(-1, 1), rat_int(-1));
        assert_eq!(binomial(-1, 2), rat_int(1));
        // (1+x)^{-2} = 1 - 2x + 3x^2 - ...
        assert_eq!(binomial(-2, 2), rat_int(3));
    }
}
