//! Roots of unity as exact rationals modulo one.
//!
//! A [`Phase`] `q` stands for the scalar `exp(2πi·q)`. Products of scalars are
//! sums of phases, inverses are negations and the scalar `1` is the phase `0`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::Error;

/// Reduced rational `num/den` with `0 <= num < den`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Phase {
    num: i64,
    den: i64,
}

impl Phase {
    pub const ZERO: Phase = Phase { num: 0, den: 1 };

    /// The phase `num/den mod 1`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Phase {
        assert!(den != 0, "phase with zero denominator");
        let (num, den) = if den < 0 { (-num as i128, -den as i128) } else { (num as i128, den as i128) };
        Self::reduce(num, den)
    }

    fn reduce(num: i128, den: i128) -> Phase {
        let num = num.rem_euclid(den);
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        Phase {
            num: i64::try_from(num).expect("phase numerator overflow"),
            den: i64::try_from(den).expect("phase denominator overflow"),
        }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Multiplicative order of the root of unity: the reduced denominator.
    pub fn order(self) -> u64 {
        self.den as u64
    }

    /// `k·q`, the `k`-th power of the scalar.
    pub fn times(self, k: i64) -> Phase {
        Self::reduce(self.num as i128 * (k as i128).rem_euclid(self.den as i128), self.den as i128)
    }

    pub fn times_big(self, k: &BigInt) -> Phase {
        let k = k.mod_floor(&BigInt::from(self.den)).to_i64().expect("reduced factor fits");
        self.times(k)
    }

    /// The representative `q/n` of the `n`-th roots of the scalar.
    #[allow(clippy::should_implement_trait)]
    pub fn div(self, n: u64) -> Phase {
        assert!(n > 0, "division of a phase by zero");
        Self::reduce(self.num as i128, self.den as i128 * n as i128)
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        if rhs.num == 0 {
            return self;
        }
        if self.num == 0 {
            return rhs;
        }
        if self.den == rhs.den {
            return Self::reduce(self.num as i128 + rhs.num as i128, self.den as i128);
        }
        let den = (self.den as i128).lcm(&(rhs.den as i128));
        let num = self.num as i128 * (den / self.den as i128) + rhs.num as i128 * (den / rhs.den as i128);
        Self::reduce(num, den)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        if self.num == 0 {
            self
        } else {
            Phase { num: self.den - self.num, den: self.den }
        }
    }
}

impl Sub for Phase {
    type Output = Phase;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Phase) -> Phase {
        self + (-rhs)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl SubAssign for Phase {
    fn sub_assign(&mut self, rhs: Phase) {
        *self = *self - rhs;
    }
}

impl Sum for Phase {
    fn sum<I: Iterator<Item = Phase>>(iter: I) -> Phase {
        iter.fold(Phase::ZERO, Add::add)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Phase {
    type Err = Error;

    /// Accepts `p/q` or an integer; the value is reduced modulo one.
    fn from_str(s: &str) -> Result<Phase, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid phase `{s}`"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Ok(Phase::new(p, q))
            }
            None => {
                let p: i64 = s.parse().map_err(|_| bad())?;
                Ok(Phase::new(p, 1))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_reduced_denominator() {
        assert_eq!(Phase::ZERO.order(), 1);
        assert_eq!(Phase::new(1, 3).order(), 3);
        assert_eq!(Phase::new(2, 6).order(), 3);
        assert_eq!(Phase::new(2, 6), Phase::new(1, 3));
    }

    #[test]
    fn arithmetic_is_mod_one() {
        let third = Phase::new(1, 3);
        assert_eq!(third + third + third, Phase::ZERO);
        assert_eq!(-third, Phase::new(2, 3));
        assert_eq!(Phase::new(1, 2) + Phase::new(1, 3), Phase::new(5, 6));
        assert_eq!(Phase::new(-1, 4), Phase::new(3, 4));
        assert_eq!(third.times(4), third);
        assert_eq!(third.times(-1), Phase::new(2, 3));
        assert_eq!(Phase::new(2, 3).div(2), Phase::new(1, 3));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2/6".parse::<Phase>().unwrap(), Phase::new(1, 3));
        assert_eq!("0".parse::<Phase>().unwrap(), Phase::ZERO);
        assert_eq!(Phase::new(1, 3).to_string(), "1/3");
        assert_eq!(Phase::ZERO.to_string(), "0");
        assert!("1/0".parse::<Phase>().is_err());
        assert!("x".parse::<Phase>().is_err());
    }
}
