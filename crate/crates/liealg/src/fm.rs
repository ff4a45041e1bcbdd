//! `f_m = so_{2m}` or `sp_{2m}` on `C^{2m}` with basis vectors labelled
//! `−m..−1, 1..m`, spanned by `F_{ab} = E_{ab} − ε_{ab} E_{−b,−a}`.

use crate::LieError;
use exactcore::{Q, SpMat};
use fock::{Case, FockSpace, PairingData};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FmData {
    pub m: usize,
    pub case: Case,
}

/// Formal linear combination of the spanning elements `F_{ab}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FmElem(pub BTreeMap<(i64, i64), Q>);

impl FmElem {
    pub fn basis(a: i64, b: i64) -> Self {
        Self::term(Q::ONE, a, b)
    }
    pub fn term(c: Q, a: i64, b: i64) -> Self {
        let mut e = FmElem::default();
        e.add_term(c, a, b);
        e
    }
    pub fn add_term(&mut self, c: Q, a: i64, b: i64) {
        if c.is_zero() {
            return;
        }
        let v = self.0.entry((a, b)).or_insert(Q::ZERO);
        *v += &c;
        if v.is_zero() {
            self.0.remove(&(a, b));
        }
    }
    pub fn add(&self, o: &FmElem) -> FmElem {
        let mut r = self.clone();
        for (&(a, b), c) in &o.0 {
            r.add_term(c.clone(), a, b);
        }
        r
    }
    pub fn scale(&self, s: &Q) -> FmElem {
        let mut r = FmElem::default();
        for (&(a, b), c) in &self.0 {
            r.add_term(c * s, a, b);
        }
        r
    }
    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Q)> {
        self.0.iter()
    }
}

impl FmData {
    pub fn new(m: usize, case: Case) -> Self {
        FmData { m, case }
    }
    pub fn dim2m(&self) -> usize {
        2 * self.m
    }
    /// `−m, …, −1, 1, …, m`.
    pub fn indices(&self) -> Vec<i64> {
        let m = self.m as i64;
        (-m..=-1).chain(1..=m).collect()
    }
    /// Row of index `c` in the `2m × 2m` matrix.
    pub fn pos(&self, c: i64) -> usize {
        let m = self.m as i64;
        assert!(c != 0 && c.abs() <= m, "index {c} out of range");
        (if c < 0 { c + m } else { c + m - 1 }) as usize
    }
    pub fn eps(&self, a: i64, b: i64) -> i64 {
        match self.case {
            Case::Orth => 1,
            Case::Symp => a.signum() * b.signum(),
        }
    }
    /// Matrix of `F_{ab}` in the defining representation.
    pub fn defining(&self, a: i64, b: i64) -> SpMat {
        let d = self.dim2m();
        SpMat::from_triplets(d, d, [(self.pos(a), self.pos(b), Q::ONE), (self.pos(-b), self.pos(-a), Q::int(-self.eps(a, b)))])
    }
    /// `[F_{ab}, F_{cd}]` as a combination of spanning elements.
    pub fn bracket(&self, (a, b): (i64, i64), (c, d): (i64, i64)) -> FmElem {
        let e = Q::int(self.eps(a, b));
        let mut r = FmElem::default();
        if c == b {
            r.add_term(Q::ONE, a, d);
        }
        if a == d {
            r.add_term(Q::int(-1), c, b);
        }
        if c == -a {
            r.add_term(-&e, -b, d);
        }
        if -b == d {
            r.add_term(e, c, -a);
        }
        r
    }
    /// Bilinear extension of [`FmData::bracket`].
    pub fn bracket_elem(&self, x: &FmElem, y: &FmElem) -> FmElem {
        let mut r = FmElem::default();
        for (&p, a) in x.terms() {
            for (&q, b) in y.terms() {
                r = r.add(&self.bracket(p, q).scale(&(a * b)));
            }
        }
        r
    }
    /// Linearly independent spanning elements: one of each pair `F_{ab} ~ F_{−b,−a}`, zeros dropped.
    pub fn basis(&self) -> Vec<(i64, i64)> {
        let mut out = vec![];
        for a in self.indices() {
            for b in self.indices() {
                if (a, b) <= (-b, -a) && !self.defining(a, b).is_zero() {
                    out.push((a, b));
                }
            }
        }
        out
    }
    /// Matrix of a combination in the defining representation.
    pub fn defining_elem(&self, x: &FmElem) -> SpMat {
        let d = self.dim2m();
        x.terms().fold(SpMat::zeros(d, d), |acc, (&(a, b), c)| acc.axpy(c, &self.defining(a, b)))
    }
}

/// A representation of `f_m`: one matrix per spanning element `F_{ab}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FmRep {
    pub fm: FmData,
    pub dim: usize,
    mats: BTreeMap<(i64, i64), SpMat>,
}

impl FmRep {
    pub fn from_fn(fm: FmData, dim: usize, f: impl Fn(i64, i64) -> SpMat) -> Self {
        let mut mats = BTreeMap::new();
        for a in fm.indices() {
            for b in fm.indices() {
                let x = f(a, b);
                assert_eq!((x.rows(), x.cols()), (dim, dim));
                mats.insert((a, b), x);
            }
        }
        FmRep { fm, dim, mats }
    }
    pub fn defining(fm: FmData) -> Self {
        Self::from_fn(fm, fm.dim2m(), |a, b| fm.defining(a, b))
    }
    pub fn trivial(fm: FmData) -> Self {
        Self::from_fn(fm, 1, |_, _| SpMat::zeros(1, 1))
    }
    /// `ζ` on the column block `blk` of `G(C^m ⊗ C^N)`.
    pub fn zeta(fm: FmData, fock: FockSpace, pr: &PairingData, blk: usize) -> Self {
        Self::from_fn(fm, fock.dim(), |a, b| zeta(a, b, fock, pr, blk).unwrap())
    }
    pub fn get(&self, a: i64, b: i64) -> &SpMat {
        &self.mats[&(a, b)]
    }
    pub fn eval(&self, x: &FmElem) -> SpMat {
        x.terms().fold(SpMat::zeros(self.dim, self.dim), |acc, (&(a, b), c)| acc.axpy(c, self.get(a, b)))
    }
    /// `X ⊗ 1 + 1 ⊗ Y`.
    pub fn tensor(&self, o: &FmRep) -> FmRep {
        let (i1, i2) = (SpMat::identity(self.dim), SpMat::identity(o.dim));
        Self::from_fn(self.fm, self.dim * o.dim, |a, b| self.get(a, b).kron(&i2).add(&i1.kron(o.get(a, b))))
    }
    /// Checks every bracket `[ρ(X), ρ(Y)] = ρ([X, Y])` over the spanning set.
    pub fn is_homomorphism(&self) -> bool {
        let idx = self.fm.indices();
        for &a in &idx {
            for &b in &idx {
                for &c in &idx {
                    for &d in &idx {
                        let lhs = self.get(a, b).commutator(self.get(c, d));
                        if lhs != self.eval(&self.fm.bracket((a, b), (c, d))) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// `ζ(F_{cd}) = −δ_{cd} N/2 + Σ_k q_{ck} p_{dk}`, `k` over the columns of block `blk`.
pub fn zeta(c: i64, d: i64, fock: FockSpace, pr: &PairingData, blk: usize) -> Result<SpMat, LieError> {
    let (off, len) = *pr.blocks().get(blk).ok_or(LieError::Block(blk))?;
    if pr.n() != fock.n {
        return Err(LieError::Mismatch(format!("pairing on {} columns, Fock space has {}", pr.n(), fock.n)));
    }
    let mut acc = if c == d { fock.identity().scale(&Q::new(-(len as i64), 2)) } else { SpMat::zeros(fock.dim(), fock.dim()) };
    for k in off + 1..=off + len {
        acc = acc.add(&fock.q(c, k, pr)?.mul(&fock.p(d, k, pr)?));
    }
    Ok(acc)
}

/// `ζ_n` on the whole of `G(C^m ⊗ C^n)`.
pub fn zeta_n(c: i64, d: i64, fock: FockSpace, pr: &PairingData) -> Result<SpMat, LieError> {
    zeta(c, d, fock, pr, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_examples() {
        let fm = FmData::new(2, Case::Orth);
        assert_eq!(fm.bracket((1, 2), (2, 1)), FmElem::basis(1, 1).add(&FmElem::term(Q::int(-1), 2, 2)));
        assert_eq!(fm.defining_elem(&fm.bracket((1, 1), (1, 1))), SpMat::zeros(4, 4));
        assert_eq!(fm.defining(1, 1), SpMat::from_triplets(4, 4, [(2, 2, Q::ONE), (1, 1, Q::int(-1))]));
    }

    #[test]
    fn basis_dimensions() {
        for m in 1..=3 {
            assert_eq!(FmData::new(m, Case::Orth).basis().len(), m * (2 * m - 1));
            assert_eq!(FmData::new(m, Case::Symp).basis().len(), m * (2 * m + 1));
        }
    }

    #[test]
    fn zeta_small_eigenvalues() {
        // m=1, n=2: ζ(F_{11}) = diag(−1, 0, 0, 1)
        let f = FockSpace::new(1, 2);
        let pr = PairingData::new(Case::Orth, 2).unwrap();
        let z = zeta_n(1, 1, f, &pr).unwrap();
        assert!(z.is_diagonal());
        assert_eq!((0..4).map(|b| z.get(b, b)).collect::<Vec<_>>(), vec![Q::int(-1), Q::ZERO, Q::ZERO, Q::ONE]);
        let diff = z.sub(&f.row_degree(1).unwrap());
        assert_eq!(diff, f.identity().scale(&Q::int(-1)));
    }
}
