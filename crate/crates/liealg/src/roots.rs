//! Roots, weights, `ρ` and the `sl_2` triples of `f_m`.

use crate::fm::{FmData, FmElem};
use crate::LieError;
use exactcore::Q;
use fock::Case;
use serde::{Deserialize, Serialize};

/// Positive roots with 1-based labels, `b < c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Root {
    Diff(usize, usize),
    Sum(usize, usize),
    Double(usize),
}

impl Root {
    /// Coefficients in the basis `ε_1..ε_m`.
    pub fn coeffs(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0; m];
        match *self {
            Root::Diff(b, c) => {
                v[b - 1] += 1;
                v[c - 1] -= 1;
            }
            Root::Sum(b, c) => {
                v[b - 1] += 1;
                v[c - 1] += 1;
            }
            Root::Double(b) => v[b - 1] = 2,
        }
        v
    }
    /// Recognize `±` a positive root from its coefficient vector.
    pub fn from_coeffs(v: &[i64]) -> Option<(i64, Root)> {
        let nz: Vec<(usize, i64)> = v.iter().enumerate().filter(|e| *e.1 != 0).map(|(i, &x)| (i + 1, x)).collect();
        match nz.as_slice() {
            [(b, 2)] => Some((1, Root::Double(*b))),
            [(b, -2)] => Some((-1, Root::Double(*b))),
            [(b, x), (c, y)] if x.abs() == 1 && y.abs() == 1 => {
                let (b, c) = (*b, *c);
                match (x, y) {
                    (1, -1) => Some((1, Root::Diff(b, c))),
                    (-1, 1) => Some((-1, Root::Diff(b, c))),
                    (1, 1) => Some((1, Root::Sum(b, c))),
                    _ => Some((-1, Root::Sum(b, c))),
                }
            }
            _ => None,
        }
    }
    pub fn label(&self) -> String {
        match *self {
            Root::Diff(b, c) => format!("e{b}-e{c}"),
            Root::Sum(b, c) => format!("e{b}+e{c}"),
            Root::Double(b) => format!("2e{b}"),
        }
    }
}

pub fn positive_roots(case: Case, m: usize) -> Vec<Root> {
    let mut r = vec![];
    for b in 1..=m {
        for c in b + 1..=m {
            r.push(Root::Diff(b, c));
            r.push(Root::Sum(b, c));
        }
        if case == Case::Symp {
            r.push(Root::Double(b));
        }
    }
    r
}

/// `η_a`.
pub fn simple_root(a: usize, case: Case, m: usize) -> Result<Root, LieError> {
    if a == 0 || a > m {
        return Err(LieError::Index(a as i64));
    }
    if a < m {
        return Ok(Root::Diff(a, a + 1));
    }
    match case {
        Case::Symp => Ok(Root::Double(m)),
        Case::Orth if m > 1 => Ok(Root::Sum(m - 1, m)),
        Case::Orth => Err(LieError::NoRoot),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub labels: Vec<Q>,
}

impl Weight {
    pub fn new(labels: Vec<Q>) -> Self {
        Weight { labels }
    }
    pub fn m(&self) -> usize {
        self.labels.len()
    }
    /// Labels of `μ + ρ`.
    pub fn shifted(&self, case: Case) -> Vec<Q> {
        shifted_labels(self, case)
    }
    pub fn add(&self, o: &Weight) -> Weight {
        Weight::new(self.labels.iter().zip(&o.labels).map(|(a, b)| a + b).collect())
    }
    pub fn sub(&self, o: &Weight) -> Weight {
        Weight::new(self.labels.iter().zip(&o.labels).map(|(a, b)| a - b).collect())
    }
}

/// `(m−1, …, 0)` for `so_{2m}`, `(m, …, 1)` for `sp_{2m}`.
pub fn rho(case: Case, m: usize) -> Weight {
    let top = match case {
        Case::Orth => m as i64 - 1,
        Case::Symp => m as i64,
    };
    Weight::new((0..m as i64).map(|k| Q::int(top - k)).collect())
}

pub fn shifted_labels(mu: &Weight, case: Case) -> Vec<Q> {
    mu.add(&rho(case, mu.m())).labels
}

fn bar(m: usize, a: usize) -> i64 {
    (m + 1 - a) as i64
}

/// `(E_a, F_a, H_a)` as combinations of the `F_{cd}`.
pub fn sl2_triple(a: usize, case: Case, m: usize) -> Result<(FmElem, FmElem, FmElem), LieError> {
    simple_root(a, case, m)?;
    let ab = bar(m, a);
    if a < m {
        let a1 = bar(m, a + 1);
        let e = FmElem::basis(-ab, -a1);
        let f = FmElem::basis(-a1, -ab);
        let h = FmElem::basis(-ab, -ab).add(&FmElem::term(Q::int(-1), -a1, -a1));
        return Ok((e, f, h));
    }
    let mb = bar(m, m);
    match case {
        Case::Orth => {
            let m1 = bar(m, m - 1);
            let e = FmElem::basis(-m1, mb);
            let f = FmElem::basis(mb, -m1);
            let h = FmElem::basis(-m1, -m1).add(&FmElem::basis(-mb, -mb));
            Ok((e, f, h))
        }
        Case::Symp => {
            let half = Q::new(1, 2);
            Ok((FmElem::term(half.clone(), -mb, mb), FmElem::term(half, mb, -mb), FmElem::basis(-mb, -mb)))
        }
    }
}

/// Checks `[E,F]=H`, `[H,E]=2E`, `[H,F]=−2F` in the defining representation.
pub fn check_sl2(fm: &FmData, a: usize) -> Result<bool, LieError> {
    let (e, f, h) = sl2_triple(a, fm.case, fm.m)?;
    let (e, f, h) = (fm.defining_elem(&e), fm.defining_elem(&f), fm.defining_elem(&h));
    Ok(e.commutator(&f) == h && h.commutator(&e) == e.scale(&Q::int(2)) && h.commutator(&f) == f.scale(&Q::int(-2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_labels() {
        assert_eq!(rho(Case::Orth, 3).labels, vec![Q::int(2), Q::ONE, Q::ZERO]);
        assert_eq!(rho(Case::Symp, 2).labels, vec![Q::int(2), Q::ONE]);
        assert_eq!(shifted_labels(&Weight::new(vec![Q::new(5, 7)]), Case::Symp), vec![Q::new(12, 7)]);
    }

    #[test]
    fn root_counts() {
        assert_eq!(positive_roots(Case::Orth, 3).len(), 6);
        assert_eq!(positive_roots(Case::Symp, 3).len(), 9);
        assert!(simple_root(1, Case::Orth, 1).is_err());
        for r in positive_roots(Case::Symp, 3) {
            assert_eq!(Root::from_coeffs(&r.coeffs(3)), Some((1, r)));
        }
    }

    #[test]
    fn sl2_relations() {
        for m in 1..=3 {
            for case in [Case::Orth, Case::Symp] {
                let fm = FmData::new(m, case);
                for a in 1..=m {
                    if case == Case::Orth && m == 1 {
                        assert!(sl2_triple(a, case, m).is_err());
                        continue;
                    }
                    assert!(check_sl2(&fm, a).unwrap(), "m={m} {case:?} a={a}");
                }
            }
        }
    }
}
