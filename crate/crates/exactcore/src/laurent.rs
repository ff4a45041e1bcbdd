use crate::rational::Q;
use serde::{Deserialize, Serialize};

/// Truncated series `c_0 + c_1 u^{-1} + … + c_K u^{-K}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentSeries<T> {
    coeffs: Vec<T>,
}

impl<T> LaurentSeries<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least c_0");
        LaurentSeries { coeffs }
    }
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }
    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }
    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }
}

impl LaurentSeries<Q> {
    pub fn zero(k: usize) -> Self {
        LaurentSeries::new(vec![Q::ZERO; k + 1])
    }
    pub fn one(k: usize) -> Self {
        let mut c = vec![Q::ZERO; k + 1];
        c[0] = Q::ONE;
        LaurentSeries::new(c)
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul_truncated(&self, o: &Self) -> Self {
        let k = self.order().min(o.order());
        let mut c = vec![Q::ZERO; k + 1];
        for i in 0..=k {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(k - i) {
                c[i + j] += &(&self.coeffs[i] * &o.coeffs[j]);
            }
        }
        LaurentSeries::new(c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let k = self.order().min(o.order());
        LaurentSeries::new((0..=k).map(|i| &self.coeffs[i] + &o.coeffs[i]).collect())
    }

    pub fn scale(&self, a: &Q) -> Self {
        LaurentSeries::new(self.coeffs.iter().map(|c| c * a).collect())
    }

    /// `f(-u)`: odd coefficients change sign.
    pub fn reflect(&self) -> Self {
        LaurentSeries::new(self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect())
    }

    /// Multiplicative inverse; requires `c_0 ≠ 0`.
    pub fn inverse(&self) -> Option<Self> {
        let c0inv = self.coeffs[0].inv()?;
        let k = self.order();
        let mut r: Vec<Q> = vec![c0inv.clone()];
        for n in 1..=k {
            let mut acc = Q::ZERO;
            for i in 1..=n {
                acc += &(&self.coeffs[i] * &r[n - i]);
            }
            r.push(-&(&acc * &c0inv));
        }
        Some(LaurentSeries::new(r))
    }

    /// Multiply by `u^{-s}` keeping the order.
    pub fn shift_down(&self, s: usize) -> Self {
        let k = self.order();
        let mut c = vec![Q::ZERO; k + 1];
        for i in 0..=k.saturating_sub(s) {
            if i + s <= k {
                c[i + s] = self.coeffs[i].clone();
            }
        }
        LaurentSeries::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_geometric() {
        // 1 - u^{-1} has inverse 1 + u^{-1} + u^{-2} + ...
        let s = LaurentSeries::new(vec![Q::ONE, Q::int(-1), Q::ZERO, Q::ZERO]);
        let i = s.inverse().unwrap();
        assert_eq!(i.coeffs(), &[Q::ONE, Q::ONE, Q::ONE, Q::ONE]);
        assert_eq!(s.mul_truncated(&i), LaurentSeries::one(3));
    }
}
