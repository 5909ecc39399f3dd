//! Exact rational arc weights and distance values.
//!
//! All path-weight comparisons in this crate are exact: a weight is a
//! canonical rational (positive denominator, reduced), so feasibility
//! tests like `d(v,t) <= alpha - w(u,v)` never depend on rounding.

use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational weight. Copyable, totally ordered, overflow-checked in
/// debug builds via the underlying `i128` arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Weight(Ratio<i128>);

impl Weight {
    pub fn zero() -> Self {
        Weight(Ratio::zero())
    }

    pub fn one() -> Self {
        Weight(Ratio::one())
    }

    pub fn from_int(n: i64) -> Self {
        Weight(Ratio::new_raw(n as i128, 1))
    }

    /// Builds `num/den` in canonical form. `den` must be non-zero.
    pub fn new(num: i128, den: i128) -> Result<Self, ParseWeightError> {
        if den == 0 {
            return Err(ParseWeightError::ZeroDenominator);
        }
        Ok(Weight(Ratio::new(num, den)))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> i128 {
        self.0.floor().to_integer()
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight(self.0 - rhs.0)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        self.0 -= rhs.0;
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParseWeightError {
    Empty,
    InvalidDigit,
    ZeroDenominator,
    /// Too many fractional digits to represent exactly.
    Precision,
}

impl fmt::Display for ParseWeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseWeightError::Empty => write!(f, "empty weight literal"),
            ParseWeightError::InvalidDigit => write!(f, "invalid character in weight literal"),
            ParseWeightError::ZeroDenominator => write!(f, "zero denominator"),
            ParseWeightError::Precision => write!(f, "weight literal exceeds exact precision"),
        }
    }
}

fn parse_integer(s: &str) -> Result<i128, ParseWeightError> {
    if s.is_empty() {
        return Err(ParseWeightError::Empty);
    }
    s.parse::<i128>().map_err(|_| ParseWeightError::InvalidDigit)
}

impl FromStr for Weight {
    type Err = ParseWeightError;

    /// Accepts integer (`-3`), decimal (`0.25`) and rational (`7/2`) literals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseWeightError::Empty);
        }
        if let Some((num, den)) = s.split_once('/') {
            let num = parse_integer(num)?;
            let den = parse_integer(den)?;
            return Weight::new(num, den);
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseWeightError::InvalidDigit);
            }
            let negative = int_part.starts_with('-');
            let int = parse_integer(int_part)?;
            let frac = frac_part
                .parse::<i128>()
                .map_err(|_| ParseWeightError::Precision)?;
            let scale = 10i128
                .checked_pow(frac_part.len() as u32)
                .ok_or(ParseWeightError::Precision)?;
            let num = int
                .checked_mul(scale)
                .and_then(|n| {
                    if negative {
                        n.checked_sub(frac)
                    } else {
                        n.checked_add(frac)
                    }
                })
                .ok_or(ParseWeightError::Precision)?;
            return Weight::new(num, scale);
        }
        Ok(Weight(Ratio::new_raw(parse_integer(s)?, 1)))
    }
}

/// Distance from a single-source computation: either a finite weight or an
/// unreachable sentinel that orders above every finite value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Distance {
    Finite(Weight),
    Unreachable,
}

impl Distance {
    pub fn is_finite(&self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(&self) -> Option<Weight> {
        match self {
            Distance::Finite(w) => Some(*w),
            Distance::Unreachable => None,
        }
    }
}

impl Add<Weight> for Distance {
    type Output = Distance;
    fn add(self, rhs: Weight) -> Distance {
        match self {
            Distance::Finite(w) => Distance::Finite(w + rhs),
            Distance::Unreachable => Distance::Unreachable,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(w) => write!(f, "{w}"),
            Distance::Unreachable => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn parses_integer_decimal_and_rational_literals() {
        assert_eq!(w("3"), Weight::from_int(3));
        assert_eq!(w("-12"), Weight::from_int(-12));
        assert_eq!(w("0.5"), Weight::new(1, 2).unwrap());
        assert_eq!(w("-0.25"), Weight::new(-1, 4).unwrap());
        assert_eq!(w("2.50"), Weight::new(5, 2).unwrap());
        assert_eq!(w("7/2"), Weight::new(7, 2).unwrap());
        assert_eq!(w("-7/2"), Weight::new(-7, 2).unwrap());
        assert_eq!(w("4/-2"), Weight::from_int(-2));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert!("".parse::<Weight>().is_err());
        assert!("1.".parse::<Weight>().is_err());
        assert!("1.2.3".parse::<Weight>().is_err());
        assert!("abc".parse::<Weight>().is_err());
        assert!("1/0".parse::<Weight>().is_err());
        assert!("1.-2".parse::<Weight>().is_err());
    }

    #[test]
    fn canonical_form() {
        let a = Weight::new(2, 4).unwrap();
        assert_eq!(a.numer(), 1);
        assert_eq!(a.denom(), 2);
        let b = Weight::new(3, -6).unwrap();
        assert_eq!(b.numer(), -1);
        assert_eq!(b.denom(), 2);
    }

    #[test]
    fn display_integer_or_fraction() {
        assert_eq!(w("4").to_string(), "4");
        assert_eq!(w("0.5").to_string(), "1/2");
        assert_eq!(w("-1.5").to_string(), "-3/2");
    }

    #[test]
    fn exact_associativity_and_order_shift() {
        // Randomized algebra check with a deterministic generator.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..2000 {
            let make = |x: u64| {
                let num = (x % 2001) as i128 - 1000;
                let den = (x / 7 % 40) as i128 + 1;
                Weight::new(num, den).unwrap()
            };
            let (a, b, c) = (make(next()), make(next()), make(next()));
            assert_eq!((a + b) + c, a + (b + c));
            if a <= b {
                assert!(a + c <= b + c);
            } else {
                assert!(a + c > b + c);
            }
        }
    }

    #[test]
    fn unreachable_orders_above_all_finite() {
        assert!(Distance::Finite(w("1000000")) < Distance::Unreachable);
        assert_eq!(Distance::Unreachable + w("3"), Distance::Unreachable);
        assert_eq!(Distance::Finite(w("1")) + w("3"), Distance::Finite(w("4")));
    }
}
