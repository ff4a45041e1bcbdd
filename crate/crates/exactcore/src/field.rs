use crate::rational::Q;
use std::fmt::Debug;

/// Minimal field interface for the generic dense kernels.
///
/// Method names carry an `f` prefix so they never collide with the
/// `std::ops` operators implemented on the concrete types.
pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn fadd(&self, o: &Self) -> Self;
    fn fsub(&self, o: &Self) -> Self;
    fn fmul(&self, o: &Self) -> Self;
    fn fneg(&self) -> Self;
    fn finv(&self) -> Option<Self>;
    /// Size heuristic; pivots with smaller weight are preferred.
    fn weight(&self) -> u64;

    fn fdiv(&self, o: &Self) -> Option<Self> {
        o.finv().map(|i| self.fmul(&i))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Q {
    fn zero() -> Self {
        Q::ZERO
    }
    fn one() -> Self {
        Q::ONE
    }
    fn is_zero(&self) -> bool {
        Q::is_zero(self)
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
        self.inv()
    }
    fn weight(&self) -> u64 {
        self.height()
    }
    fn fdiv(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            None
        } else {
            Some(self / o)
        }
    }
}
