use super::{BigRat, CoeffDecodeError, RatJson, Scalar};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Univariate polynomial in `β` with rational coefficients, stored low
/// degree first. The coefficient vector never ends in a zero; the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BetaPoly {
    coeffs: Vec<BigRat>,
}

impl BetaPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        BetaPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRat::from_integer(c.into())).collect())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `β`.
    pub fn beta() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `a·β + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_ints(&[b, a])
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        BetaPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::default(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &BetaPoly) -> (BetaPoly, BetaPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::default(), self.clone());
        }
        let mut quot = vec![BigRat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (BetaPoly::new(quot), BetaPoly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &BetaPoly) -> BetaPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Divides by `(β − root)` exactly, returning `None` if `root` is not a
    /// root.
    pub fn divide_by_root(&self, root: &BigRat) -> Option<BetaPoly> {
        if self.is_zero() {
            return Some(Self::default());
        }
        // synthetic division, high degree first
        let n = self.coeffs.len();
        let mut quot = vec![BigRat::zero(); n - 1];
        let mut carry = BigRat::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return if v.is_zero() { Some(BetaPoly::new(quot)) } else { None };
            }
            quot[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Multiplicity of `root` as a root; `None` for the zero polynomial.
    pub fn root_multiplicity(&self, root: &BigRat) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut count = 0;
        let mut p = self.clone();
        while let Some(q) = p.divide_by_root(root) {
            count += 1;
            p = q;
        }
        Some(count)
    }

    pub fn pow(&self, e: u32) -> BetaPoly {
        let mut acc = BetaPoly::from_ints(&[1]);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a> Add<&'a BetaPoly> for &'a BetaPoly {
    type Output = BetaPoly;
    fn add(self, rhs: &BetaPoly) -> BetaPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o += s;
        }
        BetaPoly::new(out)
    }
}

impl<'a> Sub<&'a BetaPoly> for &'a BetaPoly {
    type Output = BetaPoly;
    fn sub(self, rhs: &BetaPoly) -> BetaPoly {
        self + &(-rhs)
    }
}

impl Neg for &BetaPoly {
    type Output = BetaPoly;
    fn neg(self) -> BetaPoly {
        BetaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a BetaPoly> for &'a BetaPoly {
    type Output = BetaPoly;
    fn mul(self, rhs: &BetaPoly) -> BetaPoly {
        if self.is_zero() || rhs.is_zero() {
            return BetaPoly::default();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BetaPoly::new(out)
    }
}

impl Scalar for BetaPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from_ints(&[1])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(q: &BigRat) -> Self {
        Self::constant(q.clone())
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
    fn from_json(v: &Value) -> Result<Self, CoeffDecodeError> {
        serde_json::from_value(v.clone()).map_err(|e| CoeffDecodeError(e.to_string()))
    }
}

impl Serialize for BetaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let wire: Vec<RatJson> = self.coeffs.iter().map(RatJson::from).collect();
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BetaPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire: Vec<RatJson> = Vec::deserialize(d)?;
        let coeffs = wire
            .iter()
            .map(RatJson::to_rat)
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(BetaPoly::new(coeffs))
    }
}

impl fmt::Debug for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < BigRat::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "β")?,
                _ => write!(f, "β^{i}")?,
            }
        }
        Ok(())
    }
}
