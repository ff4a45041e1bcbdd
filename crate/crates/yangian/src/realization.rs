//! `n × n` arrays of operator-valued rational functions representing `T(u)` or `S(u)`
//! on a `d`-dimensional module. Indices `i, j` are 1-based.

use crate::YangError;
use exactcore::{Q, RatFunc, RatMat, SpMat, UPoly};
use liealg::{GlRep, PairingData};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    T,
    S,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub n: usize,
    pub d: usize,
    pub flavor: Flavor,
    pub pairing: Option<PairingData>,
    entries: Vec<RatMat>,
    pub label: String,
}

impl Realization {
    pub fn new(n: usize, d: usize, flavor: Flavor, pairing: Option<PairingData>, entries: Vec<RatMat>, label: impl Into<String>) -> Self {
        assert_eq!(entries.len(), n * n);
        assert!(entries.iter().all(|e| e.rows() == d && e.cols() == d), "entry shape");
        Realization { n, d, flavor, pairing, entries, label: label.into() }
    }
    pub fn from_fn(n: usize, d: usize, flavor: Flavor, pairing: Option<PairingData>, label: impl Into<String>, mut f: impl FnMut(usize, usize) -> RatMat) -> Self {
        let entries = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        Self::new(n, d, flavor, pairing, entries, label)
    }
    pub fn identity(n: usize, d: usize, flavor: Flavor, pairing: Option<PairingData>) -> Self {
        Self::from_fn(n, d, flavor, pairing, "identity", |i, j| if i == j { RatMat::identity(d) } else { RatMat::zeros(d, d) })
    }
    pub fn entry(&self, i: usize, j: usize) -> &RatMat {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }
    pub fn entries(&self) -> &[RatMat] {
        &self.entries
    }
    pub fn pairing(&self) -> Result<&PairingData, YangError> {
        self.pairing.as_ref().ok_or(YangError::NoPairing)
    }
    pub fn expect_flavor(&self, f: Flavor) -> Result<(), YangError> {
        if self.flavor == f {
            Ok(())
        } else {
            Err(YangError::Flavor(f))
        }
    }
    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
    pub fn with_flavor(mut self, f: Flavor) -> Self {
        self.flavor = f;
        self
    }
    pub fn map(&self, label: &str, f: impl Fn(&RatMat) -> RatMat) -> Self {
        let entries: Vec<RatMat> = self.entries.iter().map(f).collect();
        let d = entries[0].rows();
        Realization { n: self.n, d, flavor: self.flavor, pairing: self.pairing.clone(), entries, label: label.to_string() }
    }
    /// The `nd × nd` matrix with block `(i, j)` equal to the entry `(i, j)`.
    pub fn to_big(&self) -> RatMat {
        RatMat::from_blocks(self.n, self.n, &self.entries)
    }
    pub fn from_big(big: &RatMat, n: usize, flavor: Flavor, pairing: Option<PairingData>, label: impl Into<String>) -> Self {
        let d = big.rows() / n;
        Self::from_fn(n, d, flavor, pairing, label, |i, j| big.block(i - 1, j - 1, d))
    }
    /// Add `op · u^{-1}` to entry `(i, j)`; used for negative controls.
    pub fn perturb(&self, i: usize, j: usize, op: &SpMat) -> Self {
        let mut r = self.clone();
        let k = (i - 1) * self.n + (j - 1);
        r.entries[k] = r.entries[k].add(&RatMat::constant(op.clone()).scale_rf(&RatFunc::inv_linear(Q::ZERO)));
        r.label = format!("{} (perturbed)", self.label);
        r
    }
    /// Every entry is proper at infinity with value `δ_{ij}`.
    pub fn is_normalized(&self) -> bool {
        (1..=self.n).all(|i| {
            (1..=self.n).all(|j| match self.entry(i, j).laurent(0) {
                Ok(c) => c[0] == if i == j { SpMat::identity(self.d) } else { SpMat::zeros(self.d, self.d) },
                Err(_) => false,
            })
        })
    }
    /// Exact entry-wise difference.
    pub fn defect(&self, o: &Realization) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.entry(i, j) != o.entry(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
    pub fn same_entries(&self, o: &Realization) -> bool {
        self.n == o.n && self.d == o.d && self.entries == o.entries
    }
    /// Laurent coefficients `C_0..C_K` of the flattened `nd × nd` matrix.
    pub fn coefficients(&self, k: usize) -> Result<Vec<SpMat>, YangError> {
        Ok(self.to_big().laurent(k)?)
    }
}

fn inv_shift(c: Q) -> RatFunc {
    // 1/(u + c)
    RatFunc::new(UPoly::one(), UPoly::linear(c)).unwrap()
}

/// `T_{ij}(u) = δ_{ij} + E_{ij} u^{-1}`.
pub fn eval_hom(rep: &GlRep) -> Realization {
    let d = rep.dim;
    let iu = inv_shift(Q::ZERO);
    Realization::from_fn(rep.n, d, Flavor::T, None, "eval", |i, j| {
        let e = RatMat::constant(rep.get(i, j).clone()).scale_rf(&iu);
        if i == j {
            e.add(&RatMat::identity(d))
        } else {
            e
        }
    })
}

/// `S_{ij}(u) = δ_{ij} + G_{ij} / (u ± 1/2)` where `G_{ij}` is the image of `E_{ij} − θ_iθ_j E_{j̃ĩ}`.
pub fn pi_n(pr: &PairingData, g: &GlRep) -> Realization {
    let d = g.dim;
    let f = inv_shift(Q::new(pr.case.pm(), 2));
    Realization::from_fn(pr.n(), d, Flavor::S, Some(pr.clone()), "pi_n", |i, j| {
        let e = RatMat::constant(g.get(i, j).clone()).scale_rf(&f);
        if i == j {
            e.add(&RatMat::identity(d))
        } else {
            e
        }
    })
}

/// `T(u) ↦ T(u − z)`.
pub fn tau_shift(t: &Realization, z: &Q) -> Result<Realization, YangError> {
    t.expect_flavor(Flavor::T)?;
    Ok(t.map(&format!("tau({z})∘{}", t.label), |e| e.shift(z)))
}

/// Multiply every entry by `f(u)`, which must tend to 1 at infinity.
pub fn scalar_twist(x: &Realization, f: &RatFunc) -> Result<Realization, YangError> {
    if f.at_infinity() != Some(Q::ONE) {
        return Err(YangError::Twist);
    }
    Ok(x.map(&format!("twist∘{}", x.label), |e| e.scale_rf(f)))
}

/// `(X′)_{ij}(u) = θ_iθ_j X_{j̃ĩ}(u)`.
pub fn transpose_prime(x: &Realization) -> Result<Realization, YangError> {
    let pr = x.pairing()?.clone();
    Ok(Realization::from_fn(x.n, x.d, x.flavor, Some(pr.clone()), format!("prime∘{}", x.label), |i, j| {
        x.entry(pr.tilde(j), pr.tilde(i)).scale_q(&Q::int(pr.theta(i) * pr.theta(j)))
    }))
}

/// `T(u) ↦ T′(−u)`.
pub fn twist_auto(t: &Realization) -> Result<Realization, YangError> {
    t.expect_flavor(Flavor::T)?;
    Ok(transpose_prime(t)?.map(&format!("twist_auto∘{}", t.label), |e| e.reflect()))
}

/// `X(u) ↦ X(u)^{-1}` on the flattened matrix.
pub fn matrix_inverse(x: &Realization) -> Result<Realization, YangError> {
    let inv = x.to_big().inverse()?;
    Ok(Realization::from_big(&inv, x.n, x.flavor, x.pairing.clone(), format!("inverse∘{}", x.label)))
}

/// `T(u) ↦ T(−u)^{-1}`.
pub fn tin(t: &Realization) -> Result<Realization, YangError> {
    t.expect_flavor(Flavor::T)?;
    let r = t.map(&t.label, |e| e.reflect());
    Ok(matrix_inverse(&r)?.relabel(format!("tin∘{}", t.label)))
}

/// `S(u) ↦ S(−u − n/2)^{-1}`.
pub fn omega_n(s: &Realization) -> Result<Realization, YangError> {
    s.expect_flavor(Flavor::S)?;
    let b = Q::new(-(s.n as i64), 2);
    let r = s.map(&s.label, |e| e.subst_affine(&Q::int(-1), &b));
    Ok(matrix_inverse(&r)?.relabel(format!("omega∘{}", s.label)))
}

/// `S(u) = T′(−u) T(u)`.
pub fn sym_from_t(t: &Realization, pr: &PairingData) -> Result<Realization, YangError> {
    t.expect_flavor(Flavor::T)?;
    let t = Realization { pairing: Some(pr.clone()), ..t.clone() };
    let tp = twist_auto(&t)?;
    let n = t.n;
    Ok(Realization::from_fn(n, t.d, Flavor::S, Some(pr.clone()), format!("sym∘{}", t.label), |i, j| {
        (1..=n).fold(RatMat::zeros(t.d, t.d), |acc, k| acc.add(&tp.entry(i, k).mul(t.entry(k, j))))
    }))
}

fn same_n(a: &Realization, b: &Realization) -> Result<(), YangError> {
    if a.n != b.n {
        return Err(YangError::Mismatch(format!("n = {} vs {}", a.n, b.n)));
    }
    Ok(())
}

/// `Δ: T_{ij}(u) ↦ Σ_k T_{ik}(u) ⊗ T_{kj}(u)` on `V ⊗ W`.
pub fn coproduct(tv: &Realization, tw: &Realization) -> Result<Realization, YangError> {
    tv.expect_flavor(Flavor::T)?;
    tw.expect_flavor(Flavor::T)?;
    same_n(tv, tw)?;
    let n = tv.n;
    let pr = tv.pairing.clone().or_else(|| tw.pairing.clone());
    Ok(Realization::from_fn(n, tv.d * tw.d, Flavor::T, pr, format!("{}⊗{}", tv.label, tw.label), |i, j| {
        (1..=n).fold(RatMat::zeros(tv.d * tw.d, tv.d * tw.d), |acc, k| acc.add(&tv.entry(i, k).kron(tw.entry(k, j))))
    }))
}

/// `S_{ij}(u) ↦ Σ_{g,h} S_{gh}(u) ⊗ θ_iθ_g T_{g̃ĩ}(−u) T_{hj}(u)` on `V ⊗ W`.
pub fn coaction(sv: &Realization, tw: &Realization) -> Result<Realization, YangError> {
    sv.expect_flavor(Flavor::S)?;
    tw.expect_flavor(Flavor::T)?;
    same_n(sv, tw)?;
    let pr = sv.pairing()?.clone();
    let n = sv.n;
    let t = Realization { pairing: Some(pr.clone()), ..tw.clone() };
    let tp = twist_auto(&t)?;
    let (dv, dw) = (sv.d, tw.d);
    let mut prods = vec![RatMat::zeros(dw, dw); n * n * n * n];
    for i in 1..=n {
        for g in 1..=n {
            for h in 1..=n {
                for j in 1..=n {
                    prods[((i - 1) * n + g - 1) * n * n + (h - 1) * n + j - 1] = tp.entry(i, g).mul(t.entry(h, j));
                }
            }
        }
    }
    Ok(Realization::from_fn(n, dv * dw, Flavor::S, Some(pr), format!("{}⊲{}", sv.label, tw.label), |i, j| {
        let mut acc = RatMat::zeros(dv * dw, dv * dw);
        for g in 1..=n {
            for h in 1..=n {
                let s = sv.entry(g, h);
                if s.is_zero() {
                    continue;
                }
                acc = acc.add(&s.kron(&prods[((i - 1) * n + g - 1) * n * n + (h - 1) * n + j - 1]));
            }
        }
        acc
    }))
}

/// `1 ⊗ X` or `X ⊗ 1` padding of every entry by an identity on another factor.
pub fn pad(x: &Realization, left: usize, right: usize) -> Realization {
    let (l, r) = (RatMat::identity(left), RatMat::identity(right));
    x.map(&x.label, |e| l.kron(e).kron(&r))
}

/// Conjugate every entry by a constant invertible `W`: `W X W^{-1}`.
pub fn conjugate(x: &Realization, w: &SpMat, w_inv: &SpMat) -> Realization {
    x.map(&x.label, |e| e.lmul_const(w).rmul_const(w_inv))
}
