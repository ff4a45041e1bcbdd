//! Dense univariate polynomials over `Q`, coefficients in ascending degree.

use crate::rational::Q;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UPoly {
    c: Vec<Q>,
}

impl UPoly {
    pub fn zero() -> UPoly {
        UPoly { c: vec![] }
    }
    pub fn one() -> UPoly {
        UPoly::constant(Q::ONE)
    }
    pub fn constant(a: Q) -> UPoly {
        UPoly::new(vec![a])
    }
    /// The variable `u`.
    pub fn x() -> UPoly {
        UPoly::new(vec![Q::ZERO, Q::ONE])
    }
    /// `u + a`.
    pub fn linear(a: Q) -> UPoly {
        UPoly::new(vec![a, Q::ONE])
    }
    pub fn new(mut c: Vec<Q>) -> UPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }
    pub fn from_ints(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| Q::int(x)).collect())
    }
    pub fn monomial(a: Q, k: usize) -> UPoly {
        let mut c = vec![Q::ZERO; k + 1];
        c[k] = a;
        UPoly::new(c)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }
    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or(Q::ZERO)
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }
    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.c.len().saturating_sub(1)
    }
    pub fn lead(&self) -> Q {
        self.c.last().cloned().unwrap_or(Q::ZERO)
    }
    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(|x| x.is_one())
    }

    pub fn scale(&self, a: &Q) -> UPoly {
        if a.is_zero() {
            return UPoly::zero();
        }
        UPoly { c: self.c.iter().map(|x| x * a).collect() }
    }

    pub fn monic(&self) -> UPoly {
        match self.c.last() {
            None => UPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::ZERO;
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// `p(a·u + b)`.
    pub fn compose_affine(&self, a: &Q, b: &Q) -> UPoly {
        let lin = UPoly::new(vec![b.clone(), a.clone()]);
        let mut acc = UPoly::zero();
        for co in self.c.iter().rev() {
            acc = &(&acc * &lin) + &UPoly::constant(co.clone());
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(self.c.iter().enumerate().skip(1).map(|(k, a)| a * &Q::int(k as i64)).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("polynomial division by zero");
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.lead().inv().unwrap();
        let mut qc = vec![Q::ZERO; r.len() - dd];
        for k in (0..qc.len()).rev() {
            let t = &r[k + dd] * &inv;
            if !t.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    if !dj.is_zero() {
                        r[k + j] -= &(&t * dj);
                    }
                }
            }
            qc[k] = t;
        }
        r.truncate(dd);
        (UPoly::new(qc), UPoly::new(r))
    }

    /// Exact quotient, `None` if the division leaves a remainder.
    pub fn exact_div(&self, d: &UPoly) -> Option<UPoly> {
        if d.is_one() {
            return Some(self.clone());
        }
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut x, mut y) = (a.monic(), b.monic());
        if x.deg0() < y.deg0() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            if y.degree() == Some(0) {
                return UPoly::one();
            }
            let r = x.divrem(&y).1.monic();
            x = y;
            y = r;
        }
        x
    }

    pub fn lcm(a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_zero() || b.is_zero() {
            return UPoly::zero();
        }
        let g = UPoly::gcd(a, b);
        (a * &b.exact_div(&g).unwrap()).monic()
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn has_root(&self, x: &Q) -> bool {
        self.eval(x).is_zero()
    }
}

impl<'a, 'b> Add<&'b UPoly> for &'a UPoly {
    type Output = UPoly;
    fn add(self, o: &'b UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            c.push(match (self.c.get(k), o.c.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                _ => unreachable!(),
            });
        }
        UPoly::new(c)
    }
}

impl<'a, 'b> Sub<&'b UPoly> for &'a UPoly {
    type Output = UPoly;
    fn sub(self, o: &'b UPoly) -> UPoly {
        self + &(-o)
    }
}

impl<'a, 'b> Mul<&'b UPoly> for &'a UPoly {
    type Output = UPoly;
    fn mul(self, o: &'b UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        let mut c = vec![Q::ZERO; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += &(a * b);
                }
            }
        }
        UPoly::new(c)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { c: self.c.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.signum() < 0;
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show = k == 0 || !mag.is_one();
            if show {
                if mag.is_integer() || k == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn divrem_and_gcd() {
        let a = UPoly::from_ints(&[-1, 0, 1]); // u^2 - 1
        let b = UPoly::from_ints(&[1, 1]);
        let (qq, r) = a.divrem(&b);
        assert_eq!(qq, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(UPoly::gcd(&a, &UPoly::from_ints(&[2, 2])), b);
        assert_eq!(UPoly::gcd(&a, &UPoly::from_ints(&[3, 1])), UPoly::one());
    }

    #[test]
    fn affine_composition() {
        let p = UPoly::from_ints(&[1, 2, 3]);
        let r = p.compose_affine(&q(-1, 1), &q(1, 2));
        for x in [-2i64, 0, 3] {
            let xv = Q::int(x);
            assert_eq!(r.eval(&xv), p.eval(&(&(-&xv) + &q(1, 2))));
        }
    }

    #[test]
    fn display() {
        assert_eq!(UPoly::from_ints(&[-1, 0, 1]).to_string(), "u^2 - 1");
        assert_eq!(UPoly::new(vec![q(1, 2), q(-1, 1)]).to_string(), "-u + 1/2");
    }
}
