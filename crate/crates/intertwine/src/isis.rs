//! Normalized elementary intertwiners along reduced words and their composites.

use crate::solve::solve_commutant;
use crate::zeta::{predicted_multiplier, shifted_data, z_eta};
use crate::IntError;
use exactcore::{QMat, Q};
use fock::{Case, FockSpace, Gen, GenMap, PairingData};
use liealg::Root;
use modules::{model_to_fock, siverma_model, ModuleSpec};
use serde::Serialize;
use weyl::{braid_on_clifford, reduced_word, second_reduced_word, SignedPerm};

/// Signed factor degrees of the model of `σ`, left to right.
pub fn model_factors(sigma: &SignedPerm, nu: &[i64]) -> Vec<i64> {
    let m = sigma.m();
    let (inv, delta) = (sigma.inverse(), sigma.delta());
    (1..=m).rev().map(|a| delta.as_slice()[a - 1] * nu[inv.apply(a as i64).unsigned_abs() as usize - 1]).collect()
}

/// `f_{1̄ν_1} ⋯ f_{m̄ν_m}` as a word in the creation generators.
fn monomial_word(nu: &[i64], fock: &FockSpace) -> Vec<Gen> {
    let m = nu.len();
    let order = FockSpace::corder(fock.n);
    (1..=m).flat_map(|a| order.iter().take(nu[a - 1] as usize).map(move |&k| Gen::X(fock.slot(m + 1 - a, k).unwrap()))).collect()
}

fn restrict(v: &[Q], factors: &[i64], n: usize) -> Result<Vec<Q>, IntError> {
    let basis = model_to_fock(factors, n);
    let nonzero = v.iter().enumerate().filter(|e| !e.1.is_zero()).map(|e| e.0);
    if let Some(b) = nonzero.clone().find(|b| !basis.contains(b)) {
        return Err(IntError::Mismatch(format!("Fock vector has support {b} outside the model")));
    }
    Ok(basis.iter().map(|&b| v[b].clone()).collect())
}

fn image_vector(phi: &GenMap, nu: &[i64], factors: &[i64], n: usize) -> Result<Vec<Q>, IntError> {
    let fock = phi.space;
    let v = phi.apply_word(&monomial_word(nu, &fock), &fock.vacuum());
    restrict(&v, factors, n)
}

/// Image of the monomial in the model of the identity.
pub fn highest_vector(nu: &[i64], n: usize) -> Result<Vec<Q>, IntError> {
    let m = nu.len();
    let fock = FockSpace::new(m, n);
    image_vector(&GenMap::identity(fock), nu, &model_factors(&SignedPerm::identity(m), nu), n)
}

/// Image of the monomial under `σ̃`, identified into the model of `σ` (flipped rows land in the `P′` blocks).
pub fn target_vector(sigma: &SignedPerm, nu: &[i64], n: usize, case: Case) -> Result<Vec<Q>, IntError> {
    let m = sigma.m();
    let fock = FockSpace::new(m, n);
    let pr = PairingData::new(case, n)?;
    let phi = GenMap::varpi(fock, sigma.delta().as_slice(), &pr)?.compose(&braid_on_clifford(&reduced_word(sigma, case), fock, &pr)?);
    image_vector(&phi, nu, &model_factors(sigma, nu), n)
}

#[derive(Clone, Debug, Serialize)]
pub struct StepReport {
    pub letter: usize,
    pub root: Option<String>,
    pub explicit: bool,
    pub commutant_dim: usize,
    pub factor: Q,
}

#[derive(Clone, Debug, Serialize)]
pub struct WordReport {
    pub word: Vec<usize>,
    pub steps: Vec<StepReport>,
    pub multiplier: Q,
    pub maps_highest_to_target: bool,
    #[serde(skip)]
    pub composite: QMat,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsisReport {
    pub sigma: Vec<i64>,
    pub nu: Vec<i64>,
    pub predicted: Q,
    pub words: Vec<WordReport>,
    /// `None` when `σ` has a single reduced word.
    pub words_agree: Option<bool>,
    pub composite: QMat,
}

impl IsisReport {
    pub fn pass(&self) -> bool {
        self.words.iter().all(|w| w.maps_highest_to_target && w.multiplier == self.predicted) && self.words_agree != Some(false)
    }
    pub fn to_json(&self) -> serde_json::Value {
        let mat = |m: &QMat| -> Vec<Vec<String>> { (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect() };
        let mut v = serde_json::to_value(self).expect("serializable report");
        v["composite"] = serde_json::json!(mat(&self.composite));
        v["pass"] = serde_json::json!(self.pass());
        v
    }
}

fn scalar_ratio(a: &[Q], b: &[Q]) -> Option<Q> {
    let k = b.iter().position(|x| !x.is_zero())?;
    let c = &a[k] / &b[k];
    a.iter().zip(b).all(|(x, y)| *x == &c * y).then_some(c)
}

fn simple_root(a: usize, m: usize, case: Case) -> Option<Root> {
    match (a < m, case) {
        (true, _) => Some(Root::Diff(a, a + 1)),
        (false, Case::Symp) => Some(Root::Double(m)),
        (false, Case::Orth) => None,
    }
}

/// Normalized elementary intertwiners along `word`, which must be reduced.
pub fn verify_word(word: &[usize], mu: &[Q], lambda: &[Q], n: usize, case: Case) -> Result<WordReport, IntError> {
    let m = mu.len();
    let (ms, ls, nu) = shifted_data(mu, lambda, n, case)?;
    let mut tau = SignedPerm::identity(m);
    let mut prev: ModuleSpec = siverma_model(mu, lambda, &tau, case, n)?;
    let start = highest_vector(&nu, n)?;
    let mut v_prev = start.clone();
    let mut composite = QMat::identity(prev.dim());
    let mut steps = vec![];
    let mut mult = Q::ONE;
    for &a in word {
        let next_tau = SignedPerm::generator(a, m)?.compose(&tau);
        let next = siverma_model(mu, lambda, &next_tau, case, n)?;
        let v_next = target_vector(&next_tau, &nu, n, case)?;
        let (phi, step) = match simple_root(a, m, case) {
            None => {
                if !prev.real.same_entries(&next.real) || v_prev != v_next {
                    return Err(IntError::ExplicitMap(a));
                }
                (QMat::identity(prev.dim()), StepReport { letter: a, root: None, explicit: true, commutant_dim: 1, factor: Q::ONE })
            }
            Some(alpha) => {
                let (sign, eta) = tau.inverse().act_root(alpha);
                if sign < 0 {
                    return Err(IntError::Mismatch(format!("word {word:?} is not reduced")));
                }
                let basis = solve_commutant(&prev, &next)?;
                if basis.len() != 1 {
                    return Err(IntError::Irreducibility { letter: a, dim: basis.len() });
                }
                let phi = &basis[0];
                let c = scalar_ratio(&phi.mul_vec(&v_prev), &v_next).ok_or(IntError::NotParallel(a))?;
                let z = z_eta(eta, &ms, &ls, &nu, n, case)?;
                let phi = phi.scale(&(&z / &c));
                (phi, StepReport { letter: a, root: Some(eta.label()), explicit: false, commutant_dim: 1, factor: z })
            }
        };
        mult = &mult * &step.factor;
        composite = phi.mul(&composite);
        steps.push(step);
        tau = next_tau;
        prev = next;
        v_prev = v_next;
    }
    let ok = composite.mul_vec(&start) == v_prev.iter().map(|x| x * &mult).collect::<Vec<_>>();
    Ok(WordReport { word: word.to_vec(), steps, multiplier: mult, maps_highest_to_target: ok, composite })
}

/// Runs the normalized elementary intertwiners along one or two reduced words of `σ`.
pub fn verify_isis(sigma: &SignedPerm, mu: &[Q], lambda: &[Q], n: usize, case: Case) -> Result<IsisReport, IntError> {
    let predicted = predicted_multiplier(sigma, mu, lambda, n, case)?;
    let (_, _, nu) = shifted_data(mu, lambda, n, case)?;
    let mut words = vec![verify_word(&reduced_word(sigma, case), mu, lambda, n, case)?];
    if let Some(w) = second_reduced_word(sigma, case) {
        words.push(verify_word(&w, mu, lambda, n, case)?);
    }
    let words_agree = (words.len() == 2).then(|| words[0].composite == words[1].composite);
    let composite = words[0].composite.clone();
    Ok(IsisReport { sigma: sigma.images().to_vec(), nu, predicted, words, words_agree, composite })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::q;
    use liealg::gn_action;

    #[test]
    fn m1_highest_is_x1() {
        assert_eq!(highest_vector(&[1], 2).unwrap(), vec![Q::ONE, Q::ZERO]);
        assert_eq!(highest_vector(&[0], 2).unwrap(), vec![Q::ONE]);
    }

    #[test]
    fn identity_target_is_highest() {
        for nu in [[0, 1], [2, 1], [1, 1]] {
            let t = target_vector(&SignedPerm::identity(2), &nu, 2, Case::Symp).unwrap();
            assert_eq!(t, highest_vector(&nu, 2).unwrap());
        }
    }

    #[test]
    fn raising_operators_kill_monomial() {
        for (case, n) in [(Case::Symp, 4), (Case::Orth, 3)] {
            let fock = FockSpace::new(2, n);
            let pr = PairingData::new(case, n).unwrap();
            let order = FockSpace::corder(n);
            for nu in [[1i64, 2], [2, 3.min(n as i64)], [0, 1]] {
                let v = GenMap::identity(fock).apply_word(&monomial_word(&nu, &fock), &fock.vacuum());
                for x in 0..n {
                    for y in x + 1..n {
                        let e = gn_action(order[x], order[y], fock, &pr);
                        assert!(e.mul_vec(&v).iter().all(|c| c.is_zero()), "{case:?} {nu:?} {} {}", order[x], order[y]);
                    }
                }
            }
        }
    }

    #[test]
    fn so_letter_m_is_explicit() {
        let mu = [q(5, 7), q(2, 11)];
        let la: Vec<Q> = mu.iter().zip([2i64, 1]).map(|(x, v)| &(x + &Q::ONE) - &Q::int(v)).collect();
        let s = SignedPerm::generator(2, 2).unwrap();
        let r = verify_isis(&s, &mu, &la, 2, Case::Orth).unwrap();
        assert!(r.pass() && r.words[0].steps[0].explicit);
        assert!(r.composite.is_identity());
    }
}
