//! Rational functions in one variable over `Q` in canonical form:
//! denominator monic and coprime to the numerator.

use crate::error::ExactError;
use crate::field::Field;
use crate::laurent::LaurentSeries;
use crate::poly::UPoly;
use crate::rational::Q;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<RatFunc, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: UPoly, den: UPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if den.is_constant() {
            let inv = den.lead().inv().unwrap();
            return RatFunc { num: num.scale(&inv), den: UPoly::one() };
        }
        let g = UPoly::gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let l = d.lead();
        if !l.is_one() {
            let inv = l.inv().unwrap();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn zero() -> RatFunc {
        RatFunc { num: UPoly::zero(), den: UPoly::one() }
    }
    pub fn one() -> RatFunc {
        RatFunc::constant(Q::ONE)
    }
    pub fn constant(a: Q) -> RatFunc {
        RatFunc { num: UPoly::constant(a), den: UPoly::one() }
    }
    pub fn poly(p: UPoly) -> RatFunc {
        RatFunc { num: p, den: UPoly::one() }
    }
    /// The variable `u`.
    pub fn u() -> RatFunc {
        RatFunc::poly(UPoly::x())
    }
    /// `1/(u + a)`.
    pub fn inv_linear(a: Q) -> RatFunc {
        RatFunc { num: UPoly::one(), den: UPoly::linear(a) }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }
    pub fn den(&self) -> &UPoly {
        &self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }
    pub fn as_constant(&self) -> Option<Q> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }
    /// deg(num) ≤ deg(den).
    pub fn is_proper(&self) -> bool {
        self.num.deg0() <= self.den.deg0()
    }

    pub fn recip(&self) -> Result<RatFunc, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFunc::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<RatFunc, ExactError> {
        Ok(self * &o.recip()?)
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(&self.num.eval(x) / &d)
        }
    }

    /// `f(a·u + b)`.
    pub fn subst_affine(&self, a: &Q, b: &Q) -> RatFunc {
        RatFunc::reduce(self.num.compose_affine(a, b), self.den.compose_affine(a, b))
    }

    /// `f(u - z)`.
    pub fn shift(&self, z: &Q) -> RatFunc {
        self.subst_affine(&Q::ONE, &(-z))
    }

    /// Value at infinity of a proper function.
    pub fn at_infinity(&self) -> Option<Q> {
        let (dn, dd) = (self.num.deg0(), self.den.deg0());
        if self.num.is_zero() || dn < dd {
            Some(Q::ZERO)
        } else if dn == dd {
            Some(self.num.lead())
        } else {
            None
        }
    }

    /// Expansion `c_0 + c_1 u^{-1} + … + c_K u^{-K}`. Improper input is an
    /// error unless `allow_polynomial_part`, in which case the polynomial
    /// part is returned separately as `(poly_part_without_constant, series)`.
    pub fn expand_with_poly(&self, k: usize, allow_polynomial_part: bool) -> Result<(UPoly, LaurentSeries<Q>), ExactError> {
        let (e, r) = (self.num.deg0(), self.den.deg0());
        if self.num.is_zero() {
            return Ok((UPoly::zero(), LaurentSeries::new(vec![Q::ZERO; k + 1])));
        }
        if e > r && !allow_polynomial_part {
            return Err(ExactError::Improper);
        }
        // In t = 1/u: f = u^{e-r} · N(t)/D(t) with N, D reversed; D(0) = 1.
        let nrev: Vec<Q> = (0..=e).map(|i| self.num.coeff(e - i)).collect();
        let drev: Vec<Q> = (0..=r).map(|i| self.den.coeff(r - i)).collect();
        let shift = e as isize - r as isize;
        let need = (k as isize + shift + 1).max(0) as usize;
        let mut s: Vec<Q> = Vec::with_capacity(need);
        for j in 0..need {
            let mut acc = nrev.get(j).cloned().unwrap_or(Q::ZERO);
            for i in 1..=r.min(j) {
                if !drev[i].is_zero() {
                    acc -= &(&drev[i] * &s[j - i]);
                }
            }
            s.push(acc);
        }
        // coefficient of u^{shift - j} is s_j
        let mut series = vec![Q::ZERO; k + 1];
        let mut poly = vec![Q::ZERO; (shift.max(0) as usize) + 1];
        for (j, sj) in s.iter().enumerate() {
            let p = shift - j as isize;
            if p > 0 {
                poly[p as usize] = sj.clone();
            } else if (-p) as usize <= k {
                series[(-p) as usize] = sj.clone();
            }
        }
        Ok((UPoly::new(poly), LaurentSeries::new(series)))
    }

    pub fn expand_at_infinity(&self, k: usize) -> Result<LaurentSeries<Q>, ExactError> {
        Ok(self.expand_with_poly(k, false)?.1)
    }
}

impl<'a, 'b> Add<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &'b RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::poly(&self.num + &o.num);
            }
            return RatFunc::reduce(&self.num + &o.num, self.den.clone());
        }
        let g = UPoly::gcd(&self.den, &o.den);
        let a = self.den.exact_div(&g).unwrap();
        let b = o.den.exact_div(&g).unwrap();
        let num = &(&self.num * &b) + &(&o.num * &a);
        RatFunc::reduce(num, &a * &o.den)
    }
}

impl<'a, 'b> Sub<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &'b RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl<'a, 'b> Mul<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &'b RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::poly(&self.num * &o.num);
        }
        // cross-cancel before multiplying
        let g1 = UPoly::gcd(&self.num, &o.den);
        let g2 = UPoly::gcd(&o.num, &self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = o.den.exact_div(&g1).unwrap();
        let n2 = o.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let l = den.lead();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let inv = l.inv().unwrap();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] for a `Result`.
impl<'a, 'b> Div<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, o: &'b RatFunc) -> RatFunc {
        self.checked_div(o).expect("rational function division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn fadd(&self, o: &Self) -> Self {
        self + o
    }
    fn fsub(&self, o: &Self) -> Self {
        self - o
    }
    fn fmul(&self, o: &Self) -> Self {
        self * o
    }
    fn fneg(&self) -> Self {
        -self
    }
    fn finv(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn weight(&self) -> u64 {
        let h = self.num.coeffs().iter().chain(self.den.coeffs()).map(|c| c.height()).max().unwrap_or(0);
        ((self.num.deg0() + self.den.deg0()) as u64) << 40 | h.min(1 << 39)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    fn lin(a: i64) -> RatFunc {
        RatFunc::inv_linear(Q::int(a))
    }

    #[test]
    fn sum_of_simple_fractions() {
        // 1/(u+1) + 1/(u-1) = 2u/(u^2-1)
        let s = &lin(1) + &lin(-1);
        assert_eq!(s.num(), &UPoly::from_ints(&[0, 2]));
        assert_eq!(s.den(), &UPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn cancellation() {
        let a = RatFunc::new(UPoly::from_ints(&[-1, 1]), UPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(a, RatFunc::one());
    }

    #[test]
    fn division_by_zero_is_error() {
        assert!(lin(2).checked_div(&RatFunc::zero()).is_err());
        assert!(RatFunc::new(UPoly::one(), UPoly::zero()).is_err());
    }

    #[test]
    fn geometric_series() {
        let s = lin(1).expand_at_infinity(3).unwrap();
        assert_eq!(s.coeffs(), &[Q::ZERO, Q::ONE, Q::int(-1), Q::ONE]);
    }

    #[test]
    fn long_division_oracle() {
        // (u+z+1)/(u+z) = 1 + u^{-1} - z u^{-2} + ...
        let z = q(3, 7);
        let f = RatFunc::new(UPoly::linear(&z + &Q::ONE), UPoly::linear(z.clone())).unwrap();
        let s = f.expand_at_infinity(2).unwrap();
        assert_eq!(s.coeffs(), &[Q::ONE, Q::ONE, -&z]);
    }

    #[test]
    fn constant_expansion() {
        let s = RatFunc::one().expand_at_infinity(2).unwrap();
        assert_eq!(s.coeffs(), &[Q::ONE, Q::ZERO, Q::ZERO]);
    }

    #[test]
    fn improper_needs_flag() {
        let f = RatFunc::new(UPoly::from_ints(&[1, 0, 1]), UPoly::from_ints(&[1, 1])).unwrap();
        assert!(f.expand_at_infinity(2).is_err());
        let (p, s) = f.expand_with_poly(2, true).unwrap();
        // (u^2+1)/(u+1) = u - 1 + 2/(u+1)
        assert_eq!(p, UPoly::from_ints(&[0, 1]));
        assert_eq!(s.coeffs(), &[Q::int(-1), Q::int(2), Q::int(-2)]);
    }

    fn arb_poly() -> impl Strategy<Value = UPoly> {
        prop::collection::vec(-6i64..6, 0..4).prop_map(|v| UPoly::from_ints(&v))
    }

    fn arb_rf() -> impl Strategy<Value = RatFunc> {
        (arb_poly(), arb_poly()).prop_filter_map("nonzero den", |(n, d)| RatFunc::new(n, d).ok())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rf(), b in arb_rf(), c in arb_rf()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, RatFunc::zero());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn canonical_form(a in arb_rf()) {
            prop_assert!(a.den().is_monic());
            prop_assert!(UPoly::gcd(a.num(), a.den()).is_one() || a.is_zero());
        }

        #[test]
        fn expansion_of_product(n1 in arb_poly(), n2 in arb_poly(), r1 in 0i64..4, r2 in -3i64..0) {
            let d1 = UPoly::from_ints(&[r1, 1]).pow(2).scale(&Q::ONE);
            let d2 = &UPoly::from_ints(&[r2, 1]) * &UPoly::from_ints(&[1, 0, 1]);
            let clip = |p: UPoly, d: usize| UPoly::new(p.coeffs().iter().take(d + 1).cloned().collect());
            let a = RatFunc::new(clip(n1, 2), d1).unwrap();
            let b = RatFunc::new(clip(n2, 3), d2).unwrap();
            let k = 6;
            let ea = a.expand_at_infinity(k).unwrap();
            let eb = b.expand_at_infinity(k).unwrap();
            let ep = (&a * &b).expand_at_infinity(k).unwrap();
            prop_assert_eq!(ea.mul_truncated(&eb), ep);
        }
    }
}
