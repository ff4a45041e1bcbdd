//! The checks behind each suite, parameterized by a [`Config`].

use crate::{Config, HarnessError, Item, Suite};
use exactcore::{SpMat, Q};
use fock::{Case, FockSpace, Gen, PairingData};
use liealg::{gn_action, gn_fock_rep, FmData, FmElem, FmRep, GlRep};
use modules::{
    beta_m, beta_tilde, commutes_with, f_delta, olshanski_compositional, olshanski_gamma, beta_through_block, f_series_check, siverma_model, stu_check,
    twisted_tensor, verma_model, xact,
};
use weyl::{braid_on_clifford, braid_on_fm, letter_on_clifford, DeltaSeq, SignedPerm};
use yangian::{check_o_properties, check_reflection, check_rtt, check_symmetry, check_unitarity, check_unitarity_prime, compute_o, eval_hom, pi_n, Realization};

/// `u^{-1}` times the matrix unit in the top right corner, added to entry `(1, 1)`.
pub fn inject(x: Realization, fault: bool) -> Realization {
    if !fault || x.d == 0 {
        return x;
    }
    let op = SpMat::from_triplets(x.d, x.d, [(0, x.d - 1, Q::ONE)]);
    x.perturb(1, 1, &op)
}

fn verdict(pass: bool, what: impl Into<String>) -> Result<(bool, String), HarnessError> {
    Ok((pass, what.into()))
}

fn pairing(case: Case, n: usize) -> Result<PairingData, HarnessError> {
    Ok(PairingData::new(case, n)?)
}

/// Braid relations among the letters `1..m`, as pairs of equal words.
pub fn braid_relations(m: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = vec![];
    for a in 1..=m {
        for b in a + 2..=m {
            out.push((vec![a, b], vec![b, a]));
        }
    }
    for a in 1..m.saturating_sub(1) {
        out.push((vec![a, a + 1, a], vec![a + 1, a, a + 1]));
    }
    if m >= 2 {
        out.push((vec![m - 1, m, m - 1, m], vec![m, m - 1, m, m - 1]));
    }
    out
}

pub fn items(s: Suite, cfg: &Config) -> Result<Vec<Item>, HarnessError> {
    Ok(match s {
        Suite::Axioms => axioms(cfg),
        Suite::Clifford => clifford(cfg),
        Suite::Liealg => liealg(cfg),
        Suite::Braid => braid(cfg),
        Suite::Beta => beta(cfg),
        Suite::Olshanski => olshanski(cfg),
        Suite::Isis => isis(cfg)?,
    })
}

fn axioms(cfg: &Config) -> Vec<Item> {
    let (case, n, fault) = (cfg.case, cfg.n, cfg.fault);
    let pi = move || -> Result<Realization, HarnessError> {
        let pr = pairing(case, n)?;
        Ok(inject(pi_n(&pr, &GlRep::defining(n).restrict_g(&pr)), fault))
    };
    vec![
        Item::new(format!("unitarity n={n}"), "R-matrix unitarity", move || verdict(check_unitarity(n) && check_unitarity_prime(&pairing(case, n)?), "")),
        Item::new(format!("evaluation module n={n}"), "RTT relation", move || {
            let r = check_rtt(&inject(eval_hom(&GlRep::defining(n)), fault))?;
            verdict(r.pass, format!("{} defective points", r.defect_entries.len()))
        }),
        Item::new(format!("P module n={n} z=1/3"), "RTT relation", move || {
            let r = check_rtt(&inject(modules::p_module(n, &Q::new(1, 3), None).real, fault))?;
            verdict(r.pass, format!("{} defective points", r.defect_entries.len()))
        }),
        Item::new(format!("pi_n n={n}"), "reflection equation", move || {
            let r = check_reflection(&pi()?)?;
            verdict(r.pass, format!("{} defective points", r.defect_entries.len()))
        }),
        Item::new(format!("pi_n n={n}"), "symmetry relation", move || verdict(check_symmetry(&pi()?)?.pass, "")),
        Item::new(format!("pi_n n={n}"), "central series equals 1", move || {
            let o = compute_o(&pi()?)?;
            verdict(o.is_identity(), "")
        }),
    ]
}

fn clifford(cfg: &Config) -> Vec<Item> {
    let (case, m, n, fault) = (cfg.case, cfg.m, cfg.n, cfg.fault);
    vec![
        Item::new(format!("Fock({m},{n})"), "canonical anticommutation relations", move || {
            let f = FockSpace::new(m, n);
            let d = f.dim();
            let anti = |a: &SpMat, b: &SpMat| a.mul(b).add(&b.mul(a));
            for s in 0..f.slots() {
                for t in 0..f.slots() {
                    let (xs, ds, xt, dt) = (f.x_slot(s), f.d_slot(s), f.x_slot(t), f.d_slot(t));
                    let delta = if s == t { SpMat::identity(d) } else { SpMat::zeros(d, d) };
                    if !anti(&xs, &xt).is_zero() || !anti(&ds, &dt).is_zero() || anti(&xs, &dt) != delta {
                        return verdict(false, format!("slots {s},{t}"));
                    }
                }
            }
            verdict(true, "")
        }),
        Item::new(format!("letters on Fock({m},{n})"), "signed-permutation conjugators", move || {
            let f = FockSpace::new(m, n);
            let pr = pairing(case, n)?;
            for a in 1..=m {
                let g = letter_on_clifford(a, f, &pr);
                for s in 0..f.slots() {
                    for x in [Gen::X(s), Gen::D(s)] {
                        let (sign, y) = g.image(x);
                        if g.conjugate(&x.op(&f)) != y.op(&f).scale(&Q::int(sign)) {
                            return verdict(false, format!("letter {a}, generator {x:?}"));
                        }
                    }
                }
            }
            verdict(true, "")
        }),
        Item::new(format!("g_n on Fock({m},{n})"), "reflection equation", move || {
            let pr = pairing(case, n)?;
            let x = inject(pi_n(&pr, &gn_fock_rep(FockSpace::new(m, n), &pr)), fault);
            verdict(check_reflection(&x)?.pass, "")
        }),
    ]
}

fn liealg(cfg: &Config) -> Vec<Item> {
    let (case, m, n, fault) = (cfg.case, cfg.m, cfg.n, cfg.fault);
    let fm = FmData::new(m, case);
    vec![
        Item::new(format!("f_m m={m}"), "defining representation", move || verdict(FmRep::defining(fm).is_homomorphism(), "")),
        Item::new(format!("zeta m={m} n={n}"), "Fock realization of f_m", move || {
            let pr = pairing(case, n)?;
            verdict(FmRep::zeta(fm, FockSpace::new(m, n), &pr, 0).is_homomorphism(), "")
        }),
        Item::new(format!("zeta vs g_n m={m} n={n}"), "Howe pair commutation", move || {
            let pr = pairing(case, n)?;
            let f = FockSpace::new(m, n);
            let z = FmRep::zeta(fm, f, &pr, 0);
            let g: Vec<SpMat> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| gn_action(i, j, f, &pr)).collect();
            let ok = fm.basis().into_iter().all(|(a, b)| g.iter().all(|x| z.get(a, b).mul(x) == x.mul(z.get(a, b))));
            verdict(ok, "")
        }),
        Item::new(format!("F series m={m}"), "series identities of F and W", move || {
            let r = f_series_check(&FmRep::defining(fm));
            verdict(r.derivative_identity && r.w_reflection, format!("{r:?}"))
        }),
        Item::new(format!("beta_m m={m} n={n}"), "Howe pair commutation", move || {
            let rep = FmRep::defining(fm);
            let b = inject(beta_m(&rep, n)?.real, fault);
            verdict(commutes_with(&b, &xact(&rep, n)?), "")
        }),
    ]
}

fn braid(cfg: &Config) -> Vec<Item> {
    let (case, m, n, fault) = (cfg.case, cfg.m, cfg.n, cfg.fault);
    let fm = FmData::new(m, case);
    let mut out = vec![
        Item::new(format!("braid relations on f_m m={m}"), "braid group action", move || {
            for (l, r) in braid_relations(m) {
                for (a, b) in fm.basis() {
                    let x = FmElem::basis(a, b);
                    if fm.defining_elem(&braid_on_fm(&l, &fm, &x)?) != fm.defining_elem(&braid_on_fm(&r, &fm, &x)?) {
                        return verdict(false, format!("{l:?} vs {r:?} on F[{a},{b}]"));
                    }
                }
            }
            verdict(true, "")
        }),
        Item::new(format!("braid relations on Clifford m={m} n={n}"), "braid group action", move || {
            let pr = pairing(case, n)?;
            let f = FockSpace::new(m, n);
            for (l, r) in braid_relations(m) {
                if braid_on_clifford(&l, f, &pr)? != braid_on_clifford(&r, f, &pr)? {
                    return verdict(false, format!("{l:?} vs {r:?}"));
                }
            }
            verdict(true, "")
        }),
    ];
    for a in 1..=m {
        out.push(Item::new(format!("letter {a}"), "equivariance of zeta", move || verdict(modules::beta::zeta_equivariance(m, n, case, &[a])?, "")));
        out.push(Item::new(format!("letter {a}"), "braid invariance of beta_m", move || {
            verdict(modules::braid_invariance(&FmRep::defining(fm), n, &[a])?, "")
        }));
    }
    for d in DeltaSeq::all(m) {
        out.push(Item::new(format!("F_delta {:?}", d.as_slice()), "reflection equation", move || {
            let x = inject(f_delta(&FmRep::defining(fm), n, d.as_slice())?.real, fault);
            verdict(check_reflection(&x)?.pass, "")
        }));
    }
    out
}

fn beta(cfg: &Config) -> Vec<Item> {
    let (case, m, n, l, k, fault) = (cfg.case, cfg.m, cfg.n, cfg.l, cfg.k, cfg.fault);
    let fm = FmData::new(m, case);
    let b = move || -> Result<Realization, HarnessError> { Ok(inject(beta_m(&FmRep::defining(fm), n)?.real, fault)) };
    let mut out = vec![
        Item::new(format!("beta_m m={m} n={n}"), "reflection equation", move || verdict(check_reflection(&b()?)?.pass, "")),
        Item::new(format!("beta_m m={m} n={n}"), "central series O(u)O(-u) = 1", move || {
            let x = b()?;
            let o = compute_o(&x)?;
            let (unit, central) = check_o_properties(&x, &o);
            verdict(unit && central, format!("unit {unit}, central {central}"))
        }),
        Item::new(format!("normalized beta_m m={m} n={n} K={k}"), "symmetry relation of the normalized series", move || {
            let bad = stu_check(&beta_tilde(&FmRep::defining(fm), n, k)?);
            verdict(bad.is_empty(), format!("failing orders {bad:?}"))
        }),
    ];
    if l > 0 {
        out.push(Item::new(format!("twisted tensor m={m} n={n} l={l}"), "reflection equation", move || {
            let x = inject(twisted_tensor(&FmRep::defining(fm), &GlRep::defining(l), n, l)?.real, fault);
            verdict(check_reflection(&x)?.pass, "")
        }));
    }
    out
}

fn olshanski(cfg: &Config) -> Vec<Item> {
    let (case, m, n, l, fault) = (cfg.case, cfg.m, cfg.n, cfg.l, cfg.fault);
    vec![Item::new(format!("gamma_l m={m} n={n} l={l}"), "factorization through beta_m", move || {
        let g = inject(olshanski_gamma(m, n, l, case)?.real, fault);
        let routes = g.same_entries(&olshanski_compositional(m, n, l, case)?);
        let defect = g.defect(&beta_through_block(m, n, l, case)?);
        verdict(routes && defect.is_empty(), format!("routes agree {routes}, defect {defect:?}"))
    })]
}

fn nu_grid(m: usize, n: usize) -> Vec<Vec<i64>> {
    (0..m).fold(vec![vec![]], |acc, _| acc.into_iter().flat_map(|v| (0..=n as i64).map(move |x| [v.clone(), vec![x]].concat())).collect())
}

/// `λ` with the given degrees: `λ_a = μ_a + n/2 − ν_a`.
pub fn lambda_for(mu: &[Q], nu: &[i64], n: usize) -> Vec<Q> {
    mu.iter().zip(nu).map(|(x, v)| &(x + &Q::new(n as i64, 2)) - &Q::int(*v)).collect()
}

fn isis(cfg: &Config) -> Result<Vec<Item>, HarnessError> {
    let (case, m, n, fault) = (cfg.case, cfg.m, cfg.n, cfg.fault);
    modules::check_genericity(&cfg.mu, case)?;
    let mut out = vec![];
    for nu in nu_grid(m, n) {
        let mu = cfg.mu.clone();
        let la = lambda_for(&mu, &nu, n);
        let (mu2, la2) = (mu.clone(), la.clone());
        out.push(Item::new(format!("nu={nu:?}"), "normalized intertwiners and their multipliers", move || {
            let mut bad = vec![];
            for s in SignedPerm::all(m) {
                match intertwine::verify_isis(&s, &mu, &la, n, case) {
                    Ok(r) if r.pass() => {}
                    Ok(_) => bad.push(format!("{:?}", s.images())),
                    Err(e) => bad.push(format!("{:?}: {e}", s.images())),
                }
            }
            verdict(bad.is_empty(), bad.join("; "))
        }));
        if m >= 1 {
            out.push(Item::new(format!("nu={nu:?} first letter"), "elementary commutant is one-dimensional", move || {
                let v = verma_model(&mu2, &la2, case, n)?;
                let mut v2 = v.clone();
                v2.real = inject(v.real, fault);
                let w = siverma_model(&mu2, &la2, &SignedPerm::generator(1, m)?, case, n)?;
                let dim = intertwine::solve_commutant(&v2, &w)?.len();
                let refl = check_reflection(&v2.real)?.pass;
                verdict(dim == 1 && refl, format!("commutant dimension {dim}, reflection {refl}"))
            }));
        }
    }
    Ok(out)
}

/// A dense rational matrix as row-major arrays.
pub fn qmat_json(m: &exactcore::QMat) -> serde_json::Value {
    serde_json::json!((0..m.rows()).map(|i| m.row(i)).collect::<Vec<_>>())
}

/// A sparse matrix as `[row, col, scalar]` triplets.
pub fn spmat_json(m: &SpMat) -> serde_json::Value {
    serde_json::json!({ "rows": m.rows(), "cols": m.cols(), "entries": m.triplets().map(|(i, j, x)| serde_json::json!([i, j, x])).collect::<Vec<_>>() })
}
