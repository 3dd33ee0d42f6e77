//! Exact scalar arithmetic over the rationals or a prime field.
//!
//! Every matrix in one computation carries a single [`FieldSpec`]; the
//! scalar representation itself stays small (residues are bare `u64`,
//! rationals are boxed) so large sparse matrices remain cheap to clone.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ambient field: `ℚ` or `GF(p)` for a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator (the `BigRational` normal form); residues lie in
/// `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Box<BigRational>),
    Mod(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// A validated prime field.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Parses `"q"`, `"gf:<p>"`, or `"gf<p>"`.
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let s = s.trim().to_ascii_lowercase();
        if s == "q" || s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix("gf:")
            .or_else(|| s.strip_prefix("gf"))
            .ok_or_else(|| Error::Input {
                path: "field".into(),
                message: format!("unrecognized field `{s}`; expected `q` or `gf:<p>`"),
            })?;
        let p: u64 = digits.parse().map_err(|_| Error::Input {
            path: "field".into(),
            message: format!("bad prime `{digits}`"),
        })?;
        FieldSpec::prime(p)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(Box::new(BigRational::zero())),
            FieldSpec::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(Box::new(BigRational::one())),
            FieldSpec::Prime(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(Box::new(BigRational::from_integer(BigInt::from(n)))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Mod(r)
            }
        }
    }

    /// `num/den` as a field element; over `GF(p)` the denominator is inverted.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Rational => Ok(Scalar::Rat(Box::new(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            )))),
            FieldSpec::Prime(_) => {
                let d = self.inv(&self.from_i64(den))?;
                Ok(self.mul(&self.from_i64(num), &d))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rational, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(x.as_ref() + y.as_ref()))
            }
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rational, Scalar::Rat(x)) => Scalar::Rat(Box::new(-x.as_ref())),
            (FieldSpec::Prime(p), Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rational, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(x.as_ref() * y.as_ref()))
            }
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        match (self, a) {
            (FieldSpec::Rational, Scalar::Rat(x)) => {
                if x.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(Box::new(x.as_ref().recip())))
                }
            }
            (FieldSpec::Prime(p), Scalar::Mod(x)) => {
                if *x == 0 {
                    return Err(Error::DivisionByZero);
                }
                // Fermat: x^(p-2) mod p.
                let mut base = *x as u128;
                let mut exp = p - 2;
                let m = *p as u128;
                let mut acc: u128 = 1;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Ok(Scalar::Mod(acc as u64))
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_one(),
            Scalar::Mod(x) => *x == 1,
        }
    }

    /// The `a/b` (or bare integer) literal used by the JSON schemas.
    pub fn literal(&self) -> String {
        match self {
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Mod(x) => x.to_string(),
        }
    }

    /// Parses the literal syntax back into a field element.
    pub fn parse_literal(field: &FieldSpec, s: &str) -> Result<Scalar> {
        let bad = |m: String| Error::Input {
            path: "matrix entry".into(),
            message: m,
        };
        match field {
            FieldSpec::Rational => {
                let r: BigRational = if let Some((n, d)) = s.split_once('/') {
                    let n: BigInt = n.trim().parse().map_err(|_| bad(format!("bad numerator `{n}`")))?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad(format!("bad denominator `{d}`")))?;
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    BigRational::new(n, d)
                } else {
                    let n: BigInt = s.trim().parse().map_err(|_| bad(format!("bad integer `{s}`")))?;
                    BigRational::from_integer(n)
                };
                Ok(Scalar::Rat(Box::new(r)))
            }
            FieldSpec::Prime(_) => {
                if s.contains('/') {
                    let (n, d) = s.split_once('/').unwrap();
                    let n: i64 = n.trim().parse().map_err(|_| bad(format!("bad numerator `{n}`")))?;
                    let d: i64 = d.trim().parse().map_err(|_| bad(format!("bad denominator `{d}`")))?;
                    field.from_ratio(n, d)
                } else {
                    let n: i64 = s.trim().parse().map_err(|_| bad(format!("bad integer `{s}`")))?;
                    Ok(field.from_i64(n))
                }
            }
        }
    }

    /// Signed representative: rationals as written, residues as-is.
    pub fn signum_is_negative(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_negative(),
            Scalar::Mod(_) => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(5).is_ok());
        assert!(FieldSpec::prime(6).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2).is_ok());
    }

    #[test]
    fn parse_field_names() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::parse("gf:5").unwrap(), FieldSpec::Prime(5));
        assert_eq!(FieldSpec::parse("gf5").unwrap(), FieldSpec::Prime(5));
        assert!(FieldSpec::parse("gf4").is_err());
        assert!(FieldSpec::parse("r").is_err());
    }

    #[test]
    fn rational_normal_form() {
        let f = FieldSpec::Rational;
        let x = f.from_ratio(2, -4).unwrap();
        assert_eq!(x.literal(), "-1/2");
        let y = f.from_ratio(-3, -3).unwrap();
        assert!(y.is_one());
    }

    #[test]
    fn modular_inverse() {
        let f = FieldSpec::Prime(7);
        for n in 1..7 {
            let x = f.from_i64(n);
            let inv = f.inv(&x).unwrap();
            assert!(f.mul(&x, &inv).is_one());
        }
    }

    #[test]
    fn literal_round_trip() {
        let f = FieldSpec::Rational;
        for s in ["0", "7", "-3", "22/7", "-1/2"] {
            let x = Scalar::parse_literal(&f, s).unwrap();
            assert_eq!(x.literal(), s);
        }
    }
}
