//! `β_m: X(g_n) → U(f_m) ⊗ GD(C^m ⊗ C^n)` in a representation of `f_m`, the series
//! `F(u)`, `W(u)`, `W̃(u)`, the normalized `β̃_m` and the twists `F_δ`.

use crate::{inv_lin, ratio, ModError, ModuleSpec, Params};
use exactcore::{intertwiner_space, resolvent, RatFunc, RatMat, SpMat, Q};
use fock::{FockSpace, GenMap, PairingData};
use liealg::{gn_action, zeta_n, FmElem, FmRep};
use serde::Serialize;
use weyl::{braid_on_clifford, braid_on_fm};
use yangian::{conjugate, Flavor, Realization};

/// `(u + c + F)^{-1}` as a `2m × 2m` block matrix of operators on `V`.
pub fn f_series(rep: &FmRep, c: &Q) -> RatMat {
    let fm = rep.fm;
    let idx = fm.indices();
    let blocks: Vec<SpMat> = idx.iter().flat_map(|&a| idx.iter().map(move |&b| rep.get(a, b).neg())).collect();
    resolvent(&SpMat::from_blocks(idx.len(), idx.len(), &blocks), c)
}

/// `W(u + c) = Σ_c F_{cc}(u + c)`.
pub fn w_series(rep: &FmRep, c: &Q) -> RatMat {
    let f = f_series(rep, c);
    let d = rep.dim;
    (0..rep.fm.dim2m()).fold(RatMat::zeros(d, d), |acc, k| acc.add(&f.block(k, k, d)))
}

/// The shift `±1/2 − m` of the argument of `F` inside `β_m`.
fn beta_shift(rep: &FmRep) -> Q {
    Q::new(rep.fm.case.pm(), 2) - Q::int(rep.fm.m as i64)
}

/// `S_{ij} = δ_{ij} + Σ_{c,d} comb(c, d, i, j)` on a `d`-dimensional space.
pub(crate) fn beta_from(n: usize, d: usize, pr: &PairingData, fm: liealg::FmData, label: &str, comb: impl Fn(i64, i64, usize, usize) -> RatMat) -> Realization {
    Realization::from_fn(n, d, Flavor::S, Some(pr.clone()), label, |i, j| {
        let mut acc = if i == j { RatMat::identity(d) } else { RatMat::zeros(d, d) };
        for c in fm.indices() {
            for e in fm.indices() {
                acc = acc.add(&comb(c, e, i, j));
            }
        }
        acc
    })
}

/// `S_{ij}(u) = δ_{ij} + Σ_{c,d} F_{cd}(u ± 1/2 − m) ⊗ p_{ci} q_{dj}` on `V ⊗ G(C^m ⊗ C^n)`.
pub fn beta_m(rep: &FmRep, n: usize) -> Result<ModuleSpec, ModError> {
    let fm = rep.fm;
    let pr = PairingData::new(fm.case, n)?;
    let fock = FockSpace::new(fm.m, n);
    let dv = rep.dim;
    let r = f_series(rep, &beta_shift(rep));
    let mut pq = std::collections::HashMap::new();
    for c in fm.indices() {
        for e in fm.indices() {
            for i in 1..=n {
                for j in 1..=n {
                    let op = fock.p(c, i, &pr)?.mul(&fock.q(e, j, &pr)?);
                    pq.insert((c, e, i, j), RatMat::constant(op));
                }
            }
        }
    }
    let real = beta_from(n, dv * fock.dim(), &pr, fm, "beta", |c, e, i, j| {
        r.block(fm.pos(c), fm.pos(e), dv).kron(&pq[&(c, e, i, j)])
    });
    Ok(ModuleSpec::new(real, Params::default()))
}

/// `X ↦ ρ(X) ⊗ 1 + 1 ⊗ ζ_n(X)` over the spanning elements of `f_m`.
pub fn xact(rep: &FmRep, n: usize) -> Result<Vec<SpMat>, ModError> {
    let fm = rep.fm;
    let pr = PairingData::new(fm.case, n)?;
    let fock = FockSpace::new(fm.m, n);
    let (iv, if_) = (SpMat::identity(rep.dim), fock.identity());
    fm.basis()
        .into_iter()
        .map(|(a, b)| Ok(rep.get(a, b).kron(&if_).add(&iv.kron(&zeta_n(a, b, fock, &pr)?))))
        .collect()
}

/// `F_δ(V)`: the Clifford part of `β_m` conjugated by `ϖ_δ`.
pub fn f_delta(rep: &FmRep, n: usize, delta: &[i64]) -> Result<ModuleSpec, ModError> {
    let fm = rep.fm;
    let pr = PairingData::new(fm.case, n)?;
    let fock = FockSpace::new(fm.m, n);
    let w = GenMap::varpi(fock, delta, &pr)?.conjugator();
    let iv = SpMat::identity(rep.dim);
    let b = beta_m(rep, n)?;
    let real = conjugate(&b.real, &iv.kron(&w), &iv.kron(&w.transpose())).relabel(format!("F_{delta:?}"));
    Ok(ModuleSpec::new(real, Params { delta: delta.to_vec(), ..Params::default() }))
}

#[derive(Clone, Debug, Serialize)]
pub struct FSeriesReport {
    pub derivative_identity: bool,
    pub w_reflection: bool,
}

/// `−F′(u) = (W(u) ∓ κ + 1) F(−u − 2m ± 1) ± κ F(u)` and
/// `(W(u) ∓ κ + 1)(W(−u − 2m ± 1) ± κ + 1) = 1 − κ²` with `κ = 1/(2u + 2m ∓ 1)`.
pub fn f_series_check(rep: &FmRep) -> FSeriesReport {
    let fm = rep.fm;
    let (d, m, pm) = (rep.dim, fm.m as i64, fm.case.pm());
    let dm = fm.dim2m();
    let f = f_series(rep, &Q::ZERO);
    let w = w_series(rep, &Q::ZERO);
    let kappa = &RatFunc::constant(Q::new(1, 2)) * &inv_lin(Q::int(m) - Q::new(pm, 2));
    let pmk = &RatFunc::constant(Q::int(pm)) * &kappa;
    let refl = |x: &RatMat| x.subst_affine(&Q::int(-1), &Q::int(pm - 2 * m));
    let idx = fm.indices();
    let fprime: Vec<RatMat> = idx
        .iter()
        .flat_map(|&a| idx.iter().map(move |&b| (a, b)))
        .map(|(a, b)| f.block(fm.pos(-b), fm.pos(-a), d).scale_q(&Q::int(-fm.eps(a, b))))
        .collect();
    let lhs = RatMat::from_blocks(dm, dm, &fprime);
    let a = w.add(&RatMat::scalar(d, &(&RatFunc::one() - &pmk)));
    let rhs = RatMat::identity(dm).kron(&a).mul(&refl(&f)).add(&f.scale_rf(&pmk));
    let b = refl(&w).add(&RatMat::scalar(d, &(&RatFunc::one() + &pmk)));
    let cor = a.mul(&b) == RatMat::scalar(d, &(&RatFunc::one() - &(&kappa * &kappa)));
    FSeriesReport { derivative_identity: lhs == rhs, w_reflection: cor }
}

/// Coefficients `w_0 = 1, w_1, …, w_K` of `W̃(u)` with `W̃(−u) = (1 + W̄(u)) W̃(u)`, even free coefficients set to zero.
pub fn w_tilde(rep: &FmRep, k: usize) -> Result<Vec<SpMat>, ModError> {
    let d = rep.dim;
    let pm = rep.fm.case.pm();
    let wbar = w_series(rep, &beta_shift(rep)).scale_rf(&ratio(Q::ZERO, Q::new(-pm, 2)));
    let g = wbar.add(&RatMat::identity(d)).laurent(k)?;
    let mut w = vec![SpMat::identity(d)];
    for t in 1..=k {
        let s = (1..=t).fold(SpMat::zeros(d, d), |acc, j| acc.add(&g[j].mul(&w[t - j])));
        if t % 2 == 1 {
            w.push(s.scale(&Q::new(-1, 2)));
        } else if s.is_zero() {
            w.push(SpMat::zeros(d, d));
        } else {
            return Err(ModError::Recursion(t));
        }
    }
    Ok(w)
}

/// Truncated Laurent coefficients of `β̃_m = (W̃ ⊗ 1) β_m` as `nD × nD` block matrices.
#[derive(Clone, Debug)]
pub struct BetaTilde {
    pub n: usize,
    pub d: usize,
    pub dv: usize,
    pub pr: PairingData,
    pub coeffs: Vec<SpMat>,
}

impl BetaTilde {
    pub fn block(&self, k: usize, i: usize, j: usize) -> SpMat {
        self.coeffs[k].submatrix((i - 1) * self.d, (j - 1) * self.d, self.d, self.d)
    }
}

pub fn beta_tilde(rep: &FmRep, n: usize, k: usize) -> Result<BetaTilde, ModError> {
    let b = beta_m(rep, n)?;
    let w = w_tilde(rep, k)?;
    let bc = b.real.coefficients(k)?;
    let d = b.real.d;
    let df = d / rep.dim;
    let lift: Vec<SpMat> = w.iter().map(|x| SpMat::identity(n).kron(x).kron(&SpMat::identity(df))).collect();
    let coeffs = (0..=k)
        .map(|t| (0..=t).fold(SpMat::zeros(n * d, n * d), |acc, j| acc.add(&lift[j].mul(&bc[t - j]))))
        .collect();
    Ok(BetaTilde { n, d, dv: rep.dim, pr: b.real.pairing.unwrap(), coeffs })
}

/// `θ_iθ_j S̃_{j̃ĩ}(u) = S̃_{ij}(−u) ± (S̃_{ij}(u) − S̃_{ij}(−u))/(2u)` coefficientwise; returns failing orders.
pub fn stu_check(bt: &BetaTilde) -> Vec<usize> {
    let (n, pr) = (bt.n, &bt.pr);
    let pm = Q::int(pr.case.pm());
    let mut bad = vec![];
    for k in 0..bt.coeffs.len() {
        let ok = (1..=n).all(|i| {
            (1..=n).all(|j| {
                let lhs = bt.block(k, pr.tilde(j), pr.tilde(i)).scale(&Q::int(pr.theta(i) * pr.theta(j)));
                let s = bt.block(k, i, j);
                let mut rhs = if k % 2 == 0 { s } else { s.neg() };
                if k >= 2 && k % 2 == 0 {
                    rhs = rhs.axpy(&pm, &bt.block(k - 1, i, j));
                }
                lhs == rhs
            })
        });
        if !ok {
            bad.push(k);
        }
    }
    bad
}

/// `S̃^{(1)}_{ij} = 1 ⊗ Σ_c (x_{ci} ∂_{cj} − θ_iθ_j x_{cj̃} ∂_{cĩ})`.
pub fn s1_is_gn_action(bt: &BetaTilde, m: usize) -> bool {
    let fock = FockSpace::new(m, bt.n);
    let iv = SpMat::identity(bt.dv);
    (1..=bt.n).all(|i| (1..=bt.n).all(|j| bt.block(1, i, j) == iv.kron(&gn_action(i, j, fock, &bt.pr))))
}

/// For the braid automorphism of `B_m` given by `word`: the `f_m` part realized on `V` by an invertible
/// solved conjugator, the Clifford part by its signed permutation. Returns whether every `β_m` entry is fixed.
pub fn braid_invariance(rep: &FmRep, n: usize, word: &[usize]) -> Result<bool, ModError> {
    let fm = rep.fm;
    let pr = PairingData::new(fm.case, n)?;
    let fock = FockSpace::new(fm.m, n);
    let pairs: Vec<(SpMat, SpMat)> = fm
        .basis()
        .into_iter()
        .map(|(a, b)| Ok((rep.get(a, b).clone(), rep.eval(&braid_on_fm(word, &fm, &FmElem::basis(a, b))?))))
        .collect::<Result<_, ModError>>()?;
    let sol = intertwiner_space(rep.dim, rep.dim, pairs);
    // det(Σ t^k Π_k) is a polynomial of degree ≤ dim in t, so dim + 1 values of t suffice
    let pi = (1..=rep.dim as i64 + 1)
        .map(|t| sol.iter().enumerate().fold(exactcore::QMat::zeros(rep.dim, rep.dim), |acc, (k, x)| acc.add(&x.scale(&Q::int(t).pow(k as u32)))))
        .find(|x| x.inverse().is_ok())
        .ok_or_else(|| ModError::Invalid("no invertible map realizes the braid automorphism".into()))?;
    let pi_inv = SpMat::from_dense(&pi.inverse()?);
    let pi = SpMat::from_dense(&pi);
    let w = braid_on_clifford(word, fock, &pr)?.conjugator();
    let b = beta_m(rep, n)?;
    let moved = conjugate(&b.real, &pi.kron(&w), &pi_inv.kron(&w.transpose()));
    Ok(moved.same_entries(&b.real))
}

/// `W ζ_n(X) W^{-1} = ζ_n(φ(X))` for the braid automorphism `φ` of `word`, over all spanning elements.
pub fn zeta_equivariance(m: usize, n: usize, case: fock::Case, word: &[usize]) -> Result<bool, ModError> {
    let fm = liealg::FmData::new(m, case);
    let pr = PairingData::new(case, n)?;
    let fock = FockSpace::new(m, n);
    let z = FmRep::zeta(fm, fock, &pr, 0);
    let g = braid_on_clifford(word, fock, &pr)?;
    for (a, b) in fm.basis() {
        let lhs = g.conjugate(z.get(a, b));
        let rhs = z.eval(&braid_on_fm(word, &fm, &FmElem::basis(a, b))?);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
