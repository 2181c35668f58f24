use super::{BetaPoly, BigRat, CoeffDecodeError, Scalar};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use std::fmt;

/// Evaluation at a pole.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("pole of order {order} at β = {at}")]
pub struct PoleError {
    pub order: u32,
    pub at: BigRat,
}

/// Element of `ℚ(β)` in canonical form: `gcd(num, den) = 1`, `den` monic.
/// Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BetaRatFunc {
    num: BetaPoly,
    den: BetaPoly,
}

impl BetaRatFunc {
    /// Builds `num/den` in canonical form. Panics if `den` is zero; use
    /// [`BetaRatFunc::checked_div`] for fallible division.
    pub fn new(num: BetaPoly, den: BetaPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in rational function");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading().expect("nonzero").clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        BetaRatFunc { num, den }
    }

    pub fn from_poly(p: BetaPoly) -> Self {
        BetaRatFunc {
            num: p,
            den: BetaPoly::from_ints(&[1]),
        }
    }

    pub fn from_rat(q: BigRat) -> Self {
        Self::from_poly(BetaPoly::constant(q))
    }

    pub fn beta() -> Self {
        Self::from_poly(BetaPoly::beta())
    }

    /// `a·β + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_poly(BetaPoly::linear(a, b))
    }

    pub fn zero() -> Self {
        Self::from_poly(BetaPoly::default())
    }

    pub fn one() -> Self {
        Self::from_poly(BetaPoly::from_ints(&[1]))
    }

    pub fn num(&self) -> &BetaPoly {
        &self.num
    }

    pub fn den(&self) -> &BetaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        Some(Self::new(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Division that panics on a zero divisor.
    pub fn div(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("division by zero in ℚ(β)")
    }

    /// Order of the pole at `at`: positive for a pole, zero or negative
    /// (minus the order of the zero) when regular. `None` for the zero
    /// function.
    pub fn pole_order(&self, at: &BigRat) -> Option<i32> {
        let zeros = self.num.root_multiplicity(at)?;
        let poles = self.den.root_multiplicity(at).expect("nonzero denominator");
        Some(poles as i32 - zeros as i32)
    }

    /// Exact value at `at`; errors if `at` is a pole.
    pub fn evaluate_at(&self, at: &BigRat) -> Result<BigRat, PoleError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            let order = self.den.root_multiplicity(at).unwrap_or(0);
            return Err(PoleError { order, at: at.clone() });
        }
        Ok(self.num.eval(at) / d)
    }
}

impl Scalar for BetaRatFunc {
    fn zero() -> Self {
        BetaRatFunc::zero()
    }
    fn one() -> Self {
        BetaRatFunc::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            return Self::from_poly(&self.num + &rhs.num);
        }
        let g = self.den.gcd(&rhs.den);
        let (a, b) = if g.is_constant() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.div_rem(&g).0, rhs.den.div_rem(&g).0)
        };
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        Self::new(num, &self.den * &b)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Scalar::add(self, &Scalar::neg(rhs))
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = (self.num.div_rem(&g1).0, rhs.den.div_rem(&g1).0);
        let (n2, d1) = (rhs.num.div_rem(&g2).0, self.den.div_rem(&g2).0);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading().expect("nonzero").recip();
        BetaRatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }
    fn neg(&self) -> Self {
        BetaRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn from_rational(q: &BigRat) -> Self {
        Self::from_rat(q.clone())
    }
    fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == BetaPoly::from_ints(&[1])
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("rational function serializes")
    }
    fn from_json(v: &Value) -> Result<Self, CoeffDecodeError> {
        serde_json::from_value(v.clone()).map_err(|e| CoeffDecodeError(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncWire {
    num: BetaPoly,
    den: BetaPoly,
}

impl Serialize for BetaRatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncWire {
            num: self.num.clone(),
            den: self.den.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BetaRatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = RatFuncWire::deserialize(d)?;
        if w.den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(BetaRatFunc::new(w.num, w.den))
    }
}

impl fmt::Debug for BetaRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BetaRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &BetaPoly| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> BetaPoly {
        BetaPoly::from_ints(c)
    }

    #[test]
    fn cancels_common_factor() {
        // (β²−1)/(β−1) → β+1
        let f = BetaRatFunc::new(p(&[-1, 0, 1]), p(&[-1, 1]));
        assert_eq!(f, BetaRatFunc::from_poly(p(&[1, 1])));
        assert!(f.is_polynomial());
    }

    #[test]
    fn common_denominator_sum() {
        // 2β/(1+β) + 2/(1+β) → 2
        let a = BetaRatFunc::new(p(&[0, 2]), p(&[1, 1]));
        let b = BetaRatFunc::new(p(&[2]), p(&[1, 1]));
        assert_eq!(Scalar::add(&a, &b), BetaRatFunc::from_int(2));
    }

    #[test]
    fn inverse_times_self() {
        let inv = BetaRatFunc::beta().recip().unwrap();
        assert!(Scalar::mul(&inv, &BetaRatFunc::beta()).is_one());
        assert!(BetaRatFunc::zero().recip().is_none());
        assert!(BetaRatFunc::one().checked_div(&BetaRatFunc::zero()).is_none());
    }

    #[test]
    fn denominator_is_monic() {
        let f = BetaRatFunc::new(p(&[3]), p(&[2, 4]));
        assert_eq!(f.den(), &p(&[1, 2]).monic());
        assert_eq!(f.num(), &BetaPoly::constant(rat(3, 4)));
    }

    #[test]
    fn pole_orders() {
        let half = rat(-1, 2);
        let f = BetaRatFunc::new(p(&[1]), BetaPoly::constant(rat(1, 2)).add(&p(&[0, 1])));
        assert_eq!(f.pole_order(&half), Some(1));
        assert_eq!(BetaRatFunc::from_poly(p(&[3, 1])).pole_order(&half), Some(0));
        let g = BetaRatFunc::new(p(&[1, 2]).pow(2), p(&[2, 1]));
        assert_eq!(g.pole_order(&half), Some(-2));
        assert_eq!(BetaRatFunc::zero().pole_order(&half), None);
    }

    #[test]
    fn evaluation() {
        let f = BetaRatFunc::new(p(&[0, 2]), p(&[1, 1]));
        assert_eq!(f.evaluate_at(&rat(-1, 2)).unwrap(), rat(-2, 1));
        let c2 = BetaRatFunc::from_poly(p(&[0, 1, 1]));
        assert_eq!(c2.evaluate_at(&rat(-1, 3)).unwrap(), rat(-2, 9));
        let inv = BetaRatFunc::beta().recip().unwrap();
        assert_eq!(
            inv.evaluate_at(&rat(0, 1)),
            Err(PoleError {
                order: 1,
                at: rat(0, 1)
            })
        );
    }

    #[test]
    fn json_shape() {
        let f = BetaRatFunc::new(p(&[0, 2]), p(&[1, 1]));
        let v = f.to_json();
        assert_eq!(v["num"][1]["num"], "2");
        assert_eq!(v["den"].as_array().unwrap().len(), 2);
        assert_eq!(BetaRatFunc::from_json(&v).unwrap(), f);
    }

    fn small_poly() -> impl Strategy<Value = BetaPoly> {
        prop::collection::vec(-5i64..=5, 0..4).prop_map(|c| BetaPoly::from_ints(&c))
    }

    fn ratfunc() -> impl Strategy<Value = BetaRatFunc> {
        (small_poly(), small_poly())
            .prop_filter("nonzero den", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| BetaRatFunc::new(n, d))
    }

    fn small_rat() -> impl Strategy<Value = BigRat> {
        (-6i64..=6, 1i64..=4).prop_map(|(a, b)| rat(a, b))
    }

    proptest! {
        #[test]
        fn normalization_idempotent(f in ratfunc()) {
            let again = BetaRatFunc::new(f.num().clone(), f.den().clone());
            prop_assert_eq!(again, f);
        }

        #[test]
        fn field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
            if !a.is_zero() {
                prop_assert!(a.mul(&a.recip().unwrap()).is_one());
            }
        }

        #[test]
        fn evaluation_is_multiplicative(a in ratfunc(), b in ratfunc(), x in small_rat()) {
            if let (Ok(fa), Ok(fb)) = (a.evaluate_at(&x), b.evaluate_at(&x)) {
                prop_assert_eq!(a.mul(&b).evaluate_at(&x).unwrap(), fa * fb);
            }
        }

        #[test]
        fn pole_order_is_additive(a in ratfunc(), b in ratfunc(), x in small_rat()) {
            if let (Some(pa), Some(pb)) = (a.pole_order(&x), b.pole_order(&x)) {
                prop_assert_eq!(a.mul(&b).pole_order(&x), Some(pa + pb));
            }
        }
    }
}
