use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ThinError;

/// Exact field arithmetic. Implemented for arbitrary-precision rationals and
/// small prime fields.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// The image of `num/den`; fails when `den` vanishes in the field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self, ThinError>;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ThinError>;
    fn is_zero(&self) -> bool;
    /// Canonical `num/den` text.
    fn canonical(&self) -> String;

    fn div(&self, other: &Self) -> Result<Self, ThinError> {
        Ok(self.mul(&other.inv()?))
    }
}

pub type Q = BigRational;

impl Field for BigRational {
    const NAME: &'static str = "Q";

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self, ThinError> {
        if den.is_zero() {
            return Err(ThinError::DivisionByZero(format!("{num}/{den}")));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Result<Self, ThinError> {
        if Zero::is_zero(self) {
            return Err(ThinError::DivisionByZero("0".into()));
        }
        Ok(self.recip())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn canonical(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

/// The prime field `Z/P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gf<const P: u64>(u64);

pub type Gf2 = Gf<2>;
pub type Gf3 = Gf<3>;

impl<const P: u64> Gf<P> {
    pub fn new(v: i64) -> Self {
        Gf(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce(v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(P)).to_u64().expect("residue fits")
    }
}

impl<const P: u64> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Gf<P> {
    const NAME: &'static str = match P {
        2 => "GF(2)",
        3 => "GF(3)",
        _ => "GF(p)",
    };

    fn zero() -> Self {
        Gf(0)
    }

    fn one() -> Self {
        Gf(1 % P)
    }

    fn from_i64(v: i64) -> Self {
        Gf::new(v)
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self, ThinError> {
        let d = Gf::<P>(Self::reduce(den));
        Gf::<P>(Self::reduce(num)).div(&d).map_err(|_| ThinError::DivisionByZero(format!("{num}/{den} in {}", Self::NAME)))
    }

    fn add(&self, other: &Self) -> Self {
        Gf((self.0 + other.0) % P)
    }

    fn sub(&self, other: &Self) -> Self {
        Gf((self.0 + P - other.0) % P)
    }

    fn mul(&self, other: &Self) -> Self {
        Gf(self.0 * other.0 % P)
    }

    fn neg(&self) -> Self {
        Gf((P - self.0) % P)
    }

    fn inv(&self) -> Result<Self, ThinError> {
        if self.0 == 0 {
            return Err(ThinError::DivisionByZero(format!("0 in {}", Self::NAME)));
        }
        // Fermat: a^(P-2).
        let (mut base, mut exp, mut acc) = (self.0, P - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            exp >>= 1;
        }
        Ok(Gf(acc))
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn canonical(&self) -> String {
        format!("{}/1", self.0)
    }
}

/// Parse `"num/den"` or `"num"` into `F`.
pub fn parse_value<F: Field>(s: &str) -> Result<F, ThinError> {
    let bad = || ThinError::BadValue(s.to_string());
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = d.parse().map_err(|_| bad())?;
    if den.is_negative() {
        return F::from_ratio(&-num, &-den);
    }
    F::from_ratio(&num, &den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let x: Q = parse_value("6/-4").unwrap();
        assert_eq!(x.canonical(), "-3/2");
        assert_eq!(parse_value::<Q>("5").unwrap().canonical(), "5/1");
        assert!(parse_value::<Q>("1/0").is_err());
        assert!(parse_value::<Q>("x").is_err());
        assert_eq!(x.mul(&x.inv().unwrap()), <Q as Field>::one());
    }

    #[test]
    fn prime_fields() {
        let two = Gf3::from_i64(2);
        assert_eq!(two.mul(&two), Gf3::one());
        assert_eq!(two.inv().unwrap(), two);
        assert_eq!(Gf3::from_i64(-1), two);
        assert_eq!(parse_value::<Gf3>("1/2").unwrap(), two);
        assert!(parse_value::<Gf3>("1/3").is_err());
        assert_eq!(Gf2::one().add(&Gf2::one()), Gf2::zero());
        for v in 1..5 {
            let a = Gf::<5>::from_i64(v);
            assert_eq!(a.mul(&a.inv().unwrap()), Gf::<5>::one());
        }
    }
}
