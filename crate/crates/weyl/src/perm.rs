//! Signed permutations of `−m..−1, 1..m` and words in the generators `σ_1..σ_m`.
//!
//! A word `(a_1, …, a_K)` denotes `σ_{a_K} ⋯ σ_{a_1}`: letters act left to right.

use crate::WeylError;
use liealg::{positive_roots, Case, Root};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, VecDeque};

/// Images `σ(1), …, σ(m)`; `σ(−c) = −σ(c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignedPerm(Vec<i64>);

pub type BraidWord = Vec<usize>;

/// `δ_1..δ_m ∈ {±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaSeq(Vec<i64>);

impl DeltaSeq {
    pub fn new(d: Vec<i64>) -> Result<Self, WeylError> {
        if d.iter().any(|x| x.abs() != 1) {
            return Err(WeylError::Delta);
        }
        Ok(DeltaSeq(d))
    }
    pub fn plus(m: usize) -> Self {
        DeltaSeq(vec![1; m])
    }
    pub fn all(m: usize) -> Vec<DeltaSeq> {
        (0..1u32 << m).map(|b| DeltaSeq((0..m).map(|k| if b >> k & 1 == 1 { -1 } else { 1 }).collect())).collect()
    }
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl SignedPerm {
    pub fn new(images: Vec<i64>) -> Result<Self, WeylError> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            let k = x.unsigned_abs() as usize;
            if k == 0 || k > m || seen[k - 1] {
                return Err(WeylError::NotPerm(images));
            }
            seen[k - 1] = true;
        }
        Ok(SignedPerm(images))
    }
    pub fn identity(m: usize) -> Self {
        SignedPerm((1..=m as i64).collect())
    }
    /// `σ_a` swaps `a, a+1` for `a < m`; `σ_m` negates `m`.
    pub fn generator(a: usize, m: usize) -> Result<Self, WeylError> {
        if a == 0 || a > m {
            return Err(WeylError::Letter(a, m));
        }
        let mut v: Vec<i64> = (1..=m as i64).collect();
        if a < m {
            v.swap(a - 1, a);
        } else {
            v[m - 1] = -v[m - 1];
        }
        Ok(SignedPerm(v))
    }
    pub fn m(&self) -> usize {
        self.0.len()
    }
    pub fn images(&self) -> &[i64] {
        &self.0
    }
    pub fn apply(&self, c: i64) -> i64 {
        c.signum() * self.0[c.unsigned_abs() as usize - 1]
    }
    /// `self ∘ o`.
    pub fn compose(&self, o: &SignedPerm) -> SignedPerm {
        SignedPerm((1..=o.m() as i64).map(|c| self.apply(o.apply(c))).collect())
    }
    pub fn inverse(&self) -> SignedPerm {
        let mut v = vec![0; self.m()];
        for (k, &x) in self.0.iter().enumerate() {
            v[x.unsigned_abs() as usize - 1] = x.signum() * (k as i64 + 1);
        }
        SignedPerm(v)
    }
    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.m())
    }
    /// `σ̄ = bar ∘ σ ∘ bar` with `bar(c) = ±(m+1−|c|)`.
    pub fn bar_action(&self, c: i64) -> i64 {
        let m = self.m() as i64;
        let bar = |c: i64| c.signum() * (m + 1 - c.abs());
        bar(self.apply(bar(c)))
    }
    /// Action on `ε`-coefficient vectors: `σ(ε_c) = ε_{σ(c)}`.
    pub fn act_coeffs(&self, v: &[i64]) -> Vec<i64> {
        let mut w = vec![0; v.len()];
        for (k, &x) in v.iter().enumerate() {
            let t = self.apply(k as i64 + 1);
            w[t.unsigned_abs() as usize - 1] += t.signum() * x;
        }
        w
    }
    pub fn act_root(&self, r: Root) -> (i64, Root) {
        Root::from_coeffs(&self.act_coeffs(&r.coeffs(self.m()))).expect("roots map to roots")
    }
    /// `Δ_σ = {η ∈ Δ⁺ : σ(η) ∉ Δ⁺}`.
    pub fn inversion_set(&self, case: Case) -> BTreeSet<Root> {
        positive_roots(case, self.m()).into_iter().filter(|&r| self.act_root(r).0 < 0).collect()
    }
    pub fn length(&self, case: Case) -> usize {
        self.inversion_set(case).len()
    }
    /// `δ_a = sign σ^{-1}(a)`.
    pub fn delta(&self) -> DeltaSeq {
        let inv = self.inverse();
        DeltaSeq((1..=self.m() as i64).map(|a| inv.apply(a).signum()).collect())
    }
    /// All `2^m m!` elements.
    pub fn all(m: usize) -> Vec<SignedPerm> {
        let mut perms: Vec<Vec<i64>> = vec![vec![]];
        for k in 1..=m as i64 {
            perms = perms
                .into_iter()
                .flat_map(|p| (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                }))
                .collect();
        }
        let mut out = vec![];
        for p in perms {
            for b in 0..1u32 << m {
                out.push(SignedPerm(p.iter().enumerate().map(|(k, &x)| if b >> k & 1 == 1 { -x } else { x }).collect()));
            }
        }
        out.sort();
        out
    }
}

pub fn word_to_perm(w: &[usize], m: usize) -> Result<SignedPerm, WeylError> {
    w.iter().try_fold(SignedPerm::identity(m), |acc, &a| Ok(SignedPerm::generator(a, m)?.compose(&acc)))
}

/// Cost of a letter: orthogonal words do not count `σ_m`, but still prefer fewer of them.
fn cost(a: usize, m: usize, case: Case) -> (usize, usize) {
    if case == Case::Orth && a == m {
        (0, 1)
    } else {
        (1, 0)
    }
}

/// Minimal costs from the identity, by Dijkstra over the group.
fn distances(m: usize, case: Case) -> HashMap<SignedPerm, (usize, usize)> {
    let gens: Vec<SignedPerm> = (1..=m).map(|a| SignedPerm::generator(a, m).unwrap()).collect();
    let mut dist = HashMap::new();
    dist.insert(SignedPerm::identity(m), (0, 0));
    let mut queue = VecDeque::from([SignedPerm::identity(m)]);
    // 0-1 weights in each coordinate; relax until stable
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        for (k, g) in gens.iter().enumerate() {
            let q = g.compose(&p);
            let c = cost(k + 1, m, case);
            let nd = (d.0 + c.0, d.1 + c.1);
            if dist.get(&q).map_or(true, |&old| nd < old) {
                dist.insert(q.clone(), nd);
                queue.push_back(q);
            }
        }
    }
    dist
}

/// Up to `limit` minimal words for `σ`, in lexicographic order of their letters read from the end.
pub fn reduced_words(sigma: &SignedPerm, case: Case, limit: usize) -> Vec<BraidWord> {
    let m = sigma.m();
    let dist = distances(m, case);
    let mut out = vec![];
    let mut suffix = vec![];
    walk(sigma, case, &dist, &mut suffix, &mut out, limit);
    out
}

fn walk(p: &SignedPerm, case: Case, dist: &HashMap<SignedPerm, (usize, usize)>, suffix: &mut Vec<usize>, out: &mut Vec<BraidWord>, limit: usize) {
    if out.len() >= limit {
        return;
    }
    let m = p.m();
    if p.is_identity() {
        out.push(suffix.iter().rev().copied().collect());
        return;
    }
    let d = dist[p];
    for a in 1..=m {
        let g = SignedPerm::generator(a, m).unwrap();
        let q = g.compose(p);
        let c = cost(a, m, case);
        if dist[&q].0 + c.0 == d.0 && dist[&q].1 + c.1 == d.1 {
            suffix.push(a);
            walk(&q, case, dist, suffix, out, limit);
            suffix.pop();
        }
    }
}

/// A minimal word realizing `σ`.
pub fn reduced_word(sigma: &SignedPerm, case: Case) -> BraidWord {
    reduced_words(sigma, case, 1).remove(0)
}

/// A second minimal word different from the first, when one exists.
pub fn second_reduced_word(sigma: &SignedPerm, case: Case) -> Option<BraidWord> {
    reduced_words(sigma, case, 2).into_iter().nth(1)
}

/// Number of letters counted by the length function.
pub fn counted_letters(w: &[usize], m: usize, case: Case) -> usize {
    w.iter().filter(|&&a| cost(a, m, case).0 == 1).count()
}
