//! JSON producers for the `intertwiner`, `olshanski`, `expand` and `dump` subcommands.

use crate::suites::{lambda_for, qmat_json, spmat_json};
use crate::{guard_dims, HarnessError, SCHEMA};
use exactcore::{RatFunc, RatMat, UPoly, Q};
use fock::Case;
use liealg::{rho, structure_constants_json, FmData, FmRep, GlRep};
use modules::{beta_m, beta_through_block, olshanski_compositional, olshanski_gamma, olshanski_scalar, siverma_model, w_series, z_series};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use weyl::word_to_perm;
use yangian::{compute_o, realization_json, Realization};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum RepKind {
    Trivial,
    Defining,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum Series {
    #[value(name = "O")]
    #[serde(rename = "O")]
    O,
    #[value(name = "Z")]
    #[serde(rename = "Z")]
    Z,
    #[value(name = "W")]
    #[serde(rename = "W")]
    W,
    #[value(name = "f")]
    #[serde(rename = "f")]
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum DumpKind {
    Structure,
    Pi,
    Beta,
    P,
    Model,
    Gamma,
}

fn fm_rep(kind: RepKind, m: usize, case: Case) -> FmRep {
    match kind {
        RepKind::Trivial => FmRep::trivial(FmData::new(m, case)),
        RepKind::Defining => FmRep::defining(FmData::new(m, case)),
    }
}

fn gl_rep(kind: RepKind, l: usize) -> GlRep {
    match kind {
        RepKind::Trivial => GlRep::trivial(l),
        RepKind::Defining => GlRep::defining(l),
    }
}

pub struct IntertwinerArgs {
    pub case: Case,
    pub n: usize,
    pub mu: Vec<Q>,
    pub lambda: Option<Vec<Q>>,
    pub nu: Option<Vec<i64>>,
    /// Labels are given with `ρ` already added.
    pub shifted: bool,
    pub word: Vec<usize>,
}

/// Composite normalized intertwiner along `word`, its factors and the predicted product.
pub fn intertwiner(a: &IntertwinerArgs) -> Result<(Value, bool), HarnessError> {
    let m = a.mu.len();
    if m == 0 {
        return Err(HarnessError::Usage("at least one label is needed".into()));
    }
    guard_dims(a.case, m, a.n, 0)?;
    let r = rho(a.case, m).labels;
    let unshift = |v: &[Q]| -> Vec<Q> { if a.shifted { v.iter().zip(&r).map(|(x, y)| x - y).collect() } else { v.to_vec() } };
    let mu = unshift(&a.mu);
    let lambda = match (&a.lambda, &a.nu) {
        (Some(l), None) if l.len() == m => unshift(l),
        (None, Some(nu)) if nu.len() == m => lambda_for(&mu, nu, a.n),
        _ => return Err(HarnessError::Usage(format!("give exactly one of lambda or nu, with {m} entries"))),
    };
    modules::check_genericity(&mu, a.case)?;
    let sigma = word_to_perm(&a.word, m).map_err(|e| HarnessError::Usage(e.to_string()))?;
    let predicted = intertwine::predicted_multiplier(&sigma, &mu, &lambda, a.n, a.case)?;
    let w = intertwine::verify_word(&a.word, &mu, &lambda, a.n, a.case)?;
    let pass = w.maps_highest_to_target && w.multiplier == predicted;
    let out = json!({
        "schema": SCHEMA,
        "case": a.case,
        "n": a.n,
        "mu": mu,
        "lambda": lambda,
        "word": a.word,
        "sigma": sigma.images(),
        "steps": w.steps.iter().map(|s| json!({ "letter": s.letter, "root": s.root, "explicit": s.explicit, "commutant_dim": s.commutant_dim, "factor": s.factor })).collect::<Vec<_>>(),
        "multiplier": w.multiplier,
        "predicted": predicted,
        "maps_highest_to_target": w.maps_highest_to_target,
        "composite": qmat_json(&w.composite),
        "pass": pass,
    });
    Ok((out, pass))
}

fn entries_hash(x: &Realization) -> String {
    let v = realization_json(x);
    let digest = Sha256::digest(v["entries"].to_string().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Both routes to `γ_l`, their entry hashes and the defect against the twisted `β_m`.
pub fn olshanski(case: Case, m: usize, n: usize, l: usize) -> Result<(Value, bool), HarnessError> {
    guard_dims(case, m, n, l)?;
    let g = olshanski_gamma(m, n, l, case)?.real;
    let c = olshanski_compositional(m, n, l, case)?;
    let b = beta_through_block(m, n, l, case)?;
    let routes = g.same_entries(&c);
    let defect = g.defect(&b);
    let pass = routes && defect.is_empty();
    let out = json!({
        "schema": SCHEMA,
        "case": case,
        "m": m, "n": n, "l": l,
        "dim": g.d,
        "scalar": olshanski_scalar(m, l, case),
        "schur_complement_hash": entries_hash(&g),
        "compositional_hash": entries_hash(&c),
        "routes_agree": routes,
        "defect": defect,
        "pass": pass,
    });
    Ok((out, pass))
}

pub struct ExpandArgs {
    pub what: Series,
    pub case: Case,
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub rep: RepKind,
    pub k: usize,
}

/// Laurent coefficients of `u^0, …, u^{-K}`; scalars when the operator space is one-dimensional.
pub fn expand(a: &ExpandArgs) -> Result<Value, HarnessError> {
    let series: RatMat = match a.what {
        Series::F => RatMat::scalar(1, &olshanski_scalar(a.m, a.l, a.case)),
        Series::Z => {
            if a.l == 0 {
                return Err(HarnessError::Usage("Z needs l >= 1".into()));
            }
            z_series(&gl_rep(a.rep, a.l))
        }
        Series::W => w_series(&fm_rep(a.rep, a.m, a.case), &Q::ZERO),
        Series::O => {
            guard_dims(a.case, a.m, a.n, 0)?;
            compute_o(&beta_m(&fm_rep(a.rep, a.m, a.case), a.n)?.real)?
        }
    };
    let coeffs = series.laurent(a.k)?;
    let list: Vec<Value> = coeffs
        .iter()
        .map(|c| if series.rows() == 1 { json!(c.get(0, 0)) } else { spmat_json(c) })
        .collect();
    let closed = if series.rows() == 1 {
        let num = UPoly::new(series.num().iter().map(|c| c.get(0, 0)).collect());
        Some(RatFunc::new(num, series.den().clone())?)
    } else {
        None
    };
    Ok(json!({
        "schema": SCHEMA,
        "what": a.what,
        "order": a.k,
        "closed_form": closed,
        "closed_form_text": closed.as_ref().map(|f| f.to_string()),
        "coefficients": list,
    }))
}

pub struct DumpArgs {
    pub what: DumpKind,
    pub case: Case,
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub mu: Vec<Q>,
    pub nu: Vec<i64>,
    pub word: Vec<usize>,
}

/// Serialized structure constants or a realization.
pub fn dump(a: &DumpArgs) -> Result<Value, HarnessError> {
    let real = match a.what {
        DumpKind::Structure => return Ok(json!({ "schema": SCHEMA, "structure": structure_constants_json(&FmData::new(a.m, a.case)) })),
        DumpKind::Pi => {
            guard_dims(a.case, 1, a.n, 0)?;
            let pr = fock::PairingData::new(a.case, a.n)?;
            yangian::pi_n(&pr, &GlRep::defining(a.n).restrict_g(&pr))
        }
        DumpKind::Beta => {
            guard_dims(a.case, a.m, a.n, 0)?;
            beta_m(&FmRep::defining(FmData::new(a.m, a.case)), a.n)?.real
        }
        DumpKind::P => modules::p_module(a.n, &Q::new(1, 3), None).real,
        DumpKind::Model => {
            guard_dims(a.case, a.mu.len(), a.n, 0)?;
            if a.nu.len() != a.mu.len() {
                return Err(HarnessError::Usage("nu needs one entry per label".into()));
            }
            let sigma = word_to_perm(&a.word, a.mu.len()).map_err(|e| HarnessError::Usage(e.to_string()))?;
            let spec = siverma_model(&a.mu, &lambda_for(&a.mu, &a.nu, a.n), &sigma, a.case, a.n)?;
            return Ok(json!({ "schema": SCHEMA, "module": spec.to_json() }));
        }
        DumpKind::Gamma => {
            guard_dims(a.case, a.m, a.n, a.l)?;
            olshanski_gamma(a.m, a.n, a.l, a.case)?.real
        }
    };
    Ok(json!({ "schema": SCHEMA, "realization": realization_json(&real) }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::q;

    #[test]
    fn double_root_intertwiner() {
        let a = IntertwinerArgs { case: Case::Symp, n: 2, mu: vec![q(5, 7)], lambda: None, nu: Some(vec![2]), shifted: true, word: vec![1] };
        let (v, pass) = intertwiner(&a).unwrap();
        assert!(pass);
        assert_eq!(v["multiplier"], json!(q(-2, 5)));
    }

    #[test]
    fn identity_word() {
        let a = IntertwinerArgs { case: Case::Orth, n: 2, mu: vec![q(5, 7), q(2, 11)], lambda: None, nu: Some(vec![1, 1]), shifted: false, word: vec![] };
        let (v, pass) = intertwiner(&a).unwrap();
        assert!(pass);
        assert_eq!(v["multiplier"], json!(Q::ONE));
        let c = v["composite"].as_array().unwrap();
        for (i, row) in c.iter().enumerate() {
            for (j, x) in row.as_array().unwrap().iter().enumerate() {
                assert_eq!(x, &json!(if i == j { Q::ONE } else { Q::ZERO }));
            }
        }
    }

    #[test]
    fn resonant_labels_exit_3() {
        let a = IntertwinerArgs { case: Case::Orth, n: 2, mu: vec![q(1, 2), q(1, 2)], lambda: None, nu: Some(vec![1, 1]), shifted: false, word: vec![1] };
        assert_eq!(intertwiner(&a).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn expansions() {
        let f = ExpandArgs { what: Series::F, case: Case::Symp, m: 1, n: 2, l: 2, rep: RepKind::Trivial, k: 3 };
        assert_eq!(expand(&f).unwrap()["coefficients"], json!([Q::ONE, q(-1, 1), q(-3, 2), q(-9, 4)]));
        let z = ExpandArgs { what: Series::Z, case: Case::Symp, m: 1, n: 2, l: 1, rep: RepKind::Trivial, k: 2 };
        assert_eq!(expand(&z).unwrap()["coefficients"], json!([Q::ZERO, Q::ONE, Q::ZERO]));
        let z = ExpandArgs { rep: RepKind::Defining, ..z };
        assert_eq!(expand(&z).unwrap()["coefficients"], json!([Q::ZERO, Q::ONE, q(-1, 1)]));
    }

    #[test]
    fn olshanski_small() {
        let (v, pass) = olshanski(Case::Orth, 1, 2, 1).unwrap();
        assert!(pass);
        assert_eq!(v["schur_complement_hash"], v["compositional_hash"]);
        assert_eq!(olshanski(Case::Orth, 3, 4, 1).unwrap_err().exit_code(), 2);
    }
}
