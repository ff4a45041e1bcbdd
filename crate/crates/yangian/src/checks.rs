//! Exact checks of the RTT relation, the reflection equation, the symmetry
//! relation and extraction of the central series `O(u)`.
//!
//! Two-variable identities are checked on numerators: with `X(u) = N(u)/q(u)`,
//! both sides times `q(u)q(v)` are polynomials of degree at most `deg N + 2`
//! in each of `u` and `v`, so vanishing on the grid `{0..deg N + 2}²` is a proof.

use crate::realization::{Flavor, Realization};
use crate::rmatrix::r_at;
use crate::YangError;
use exactcore::{Q, RatFunc, RatMat, SpMat, UPoly};
use liealg::PairingData;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Defect {
    pub u: Q,
    pub v: Q,
    pub nonzero: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub defect_entries: Vec<Defect>,
    pub degree_bound: usize,
    pub points_used: Vec<(Q, Q)>,
}

impl CheckReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).unwrap()
    }
}

/// `X_1`: `(i,k,α),(j,l,β) ↦ δ_{kl} X[(i,α),(j,β)]`.
fn emb1(m: &SpMat, n: usize, d: usize) -> SpMat {
    let mut t = Vec::with_capacity(m.nnz() * n);
    for (r, c, v) in m.triplets() {
        let (i, a, j, b) = (r / d, r % d, c / d, c % d);
        for k in 0..n {
            t.push(((i * n + k) * d + a, (j * n + k) * d + b, v.clone()));
        }
    }
    SpMat::from_triplets(n * n * d, n * n * d, t)
}

/// `X_2`: `(i,k,α),(j,l,β) ↦ δ_{ij} X[(k,α),(l,β)]`.
fn emb2(m: &SpMat, n: usize, d: usize) -> SpMat {
    let mut t = Vec::with_capacity(m.nnz() * n);
    for (r, c, v) in m.triplets() {
        let (k, a, l, b) = (r / d, r % d, c / d, c % d);
        for i in 0..n {
            t.push(((i * n + k) * d + a, (i * n + l) * d + b, v.clone()));
        }
    }
    SpMat::from_triplets(n * n * d, n * n * d, t)
}

fn grid_check(x: &Realization, name: &str, pr: Option<&PairingData>) -> CheckReport {
    let (n, d) = (x.n, x.d);
    let big = x.to_big();
    let e = big.num_degree().unwrap_or(0) + 2;
    let pts: Vec<Q> = (0..=e as i64).map(Q::int).collect();
    let vals: Vec<(SpMat, SpMat)> = pts
        .par_iter()
        .map(|p| {
            let m = big.eval_num(p);
            (emb1(&m, n, d), emb2(&m, n, d))
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..pts.len()).flat_map(|a| (0..pts.len()).map(move |b| (a, b))).collect();
    let defects: Vec<Option<Defect>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (u, v) = (&pts[a], &pts[b]);
            let r = r_at(n, d, None, &(u - v));
            let (x1, x2) = (&vals[a].0, &vals[b].1);
            let diff = match pr {
                None => r.mul(x1).mul(x2).sub(&x2.mul(x1).mul(&r)),
                Some(pr) => {
                    let rp = r_at(n, d, Some(pr), &(-&(u + v)));
                    r.mul(x1).mul(&rp).mul(x2).sub(&x2.mul(&rp).mul(x1).mul(&r))
                }
            };
            (!diff.is_zero()).then(|| Defect { u: u.clone(), v: v.clone(), nonzero: diff.nnz() })
        })
        .collect();
    let defect_entries: Vec<Defect> = defects.into_iter().flatten().collect();
    CheckReport {
        name: format!("{name}: {}", x.label),
        pass: defect_entries.is_empty(),
        defect_entries,
        degree_bound: e,
        points_used: pairs.iter().map(|&(a, b)| (pts[a].clone(), pts[b].clone())).collect(),
    }
}

/// `R(u−v) T_1(u) T_2(v) = T_2(v) T_1(u) R(u−v)`.
pub fn check_rtt(t: &Realization) -> Result<CheckReport, YangError> {
    t.expect_flavor(Flavor::T)?;
    Ok(grid_check(t, "rtt", None))
}

/// `R(u−v) S_1(u) R′(−u−v) S_2(v) = S_2(v) R′(−u−v) S_1(u) R(u−v)`.
pub fn check_reflection(s: &Realization) -> Result<CheckReport, YangError> {
    s.expect_flavor(Flavor::S)?;
    let pr = s.pairing()?.clone();
    Ok(grid_check(s, "reflection", Some(&pr)))
}

/// `S′(u) = S(−u) ± (S(u) − S(−u)) / 2u`, exactly.
pub fn check_symmetry(s: &Realization) -> Result<CheckReport, YangError> {
    s.expect_flavor(Flavor::S)?;
    let pr = s.pairing()?;
    let inv2u = RatFunc::new(UPoly::constant(Q::new(pr.case.pm(), 2)), UPoly::x()).unwrap();
    let mut bad = vec![];
    for i in 1..=s.n {
        for j in 1..=s.n {
            let lhs = s.entry(pr.tilde(j), pr.tilde(i)).scale_q(&Q::int(pr.theta(i) * pr.theta(j)));
            let e = s.entry(i, j);
            let rhs = e.reflect().add(&e.sub(&e.reflect()).scale_rf(&inv2u));
            if lhs != rhs {
                bad.push(Defect { u: Q::int(i as i64), v: Q::int(j as i64), nonzero: lhs.sub(&rhs).num().len() });
            }
        }
    }
    Ok(CheckReport { name: format!("symmetry: {}", s.label), pass: bad.is_empty(), defect_entries: bad, degree_bound: 0, points_used: vec![] })
}

/// The operator `O(u)` with `R′(0) S_1(u) R(2u) S_2(−u)^{-1} = (2u ∓ 1) O(u) R′(0)`.
///
/// Writing `R′(0) = −a aᵀ`, the left side equals `−a` times the row `aᵀ S_1 R S_2^{-1}`;
/// that row must be `(2u∓1) O(u) aᵀ`. Multiplying on the right by `S(−u)` turns this into
/// `Y_j(p) = (2u∓1) θ_j O(u) S_{j̃p}(−u)` with `Y_j(p) = 2u y_{jp} − y_{pj}`, which needs only one
/// `d × d` inverse and is verified for every component.
pub fn compute_o(s: &Realization) -> Result<RatMat, YangError> {
    s.expect_flavor(Flavor::S)?;
    let pr = s.pairing()?.clone();
    let n = s.n;
    let y = |p: usize, q: usize| s.entry(pr.tilde(q), p).scale_q(&Q::int(pr.theta(pr.tilde(q))));
    let two_u = RatFunc::poly(UPoly::from_ints(&[0, 2]));
    let z = |p: usize, q: usize| y(p, q).scale_rf(&two_u).sub(&y(q, p));
    let fac = RatFunc::poly(UPoly::new(vec![Q::int(-pr.case.pm()), Q::int(2)]));
    let neg = |i: usize, j: usize| s.entry(i, j).reflect();
    let t1 = pr.tilde(1);
    let pivot = neg(t1, t1).inverse()?;
    let o = z(1, t1).mul(&pivot).scale_rf(&fac.recip()?).scale_q(&Q::int(pr.theta(1)));
    for j in 1..=n {
        let lhs_scale = o.scale_rf(&fac).scale_q(&Q::int(pr.theta(j)));
        for p in 1..=n {
            if z(j, p) != lhs_scale.mul(&neg(pr.tilde(j), p)) {
                return Err(YangError::NotCentral(format!("component ({j},{p}) is not proportional")));
            }
        }
    }
    Ok(o)
}

/// `O(u) O(−u) = 1` and `O(u)` commutes with every entry.
pub fn check_o_properties(s: &Realization, o: &RatMat) -> (bool, bool) {
    let unit = o.mul(&o.reflect()).is_identity();
    let central = s.entries().iter().all(|e| o.commutator(e).is_zero());
    (unit, central)
}
