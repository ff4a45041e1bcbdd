use exactcore::{commutant_dim, q, RatFunc, RatMat, SpMat, Q};
use fock::{Case, FockSpace, PairingData};
use liealg::{gn_action, FmData, FmRep, GlRep};
use modules::*;
use weyl::{DeltaSeq, SignedPerm};
use yangian::{check_reflection, check_rtt, coaction};

fn def(m: usize, case: Case) -> FmRep {
    FmRep::defining(FmData::new(m, case))
}

#[test]
fn olshanski_l2() {
    for case in [Case::Orth, Case::Symp] {
        let r = olshanski_check(1, 2, 2, case).unwrap();
        assert!(r.pass(), "{case:?} {r:?}");
    }
}

#[test]
fn howe_m1_n4() {
    // oracle: brute-force commutant of the f_m and g_n Fock actions only
    let (m, n) = (1, 4);
    let count = howe_commutant_count(m, n, Case::Symp).unwrap();
    assert_eq!(count, howe_partitions(m, n).len());
    let pr = PairingData::new(Case::Symp, n).unwrap();
    let fock = FockSpace::new(m, n);
    let mut ops: Vec<SpMat> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| gn_action(i, j, fock, &pr)).collect();
    let z = FmRep::zeta(FmData::new(m, Case::Symp), fock, &pr, 0);
    ops.extend(FmData::new(m, Case::Symp).basis().into_iter().map(|(a, b)| z.get(a, b).clone()));
    assert_eq!(commutant_dim(fock.dim(), &ops), count);
}

#[test]
fn beta_reflection_grid() {
    for (m, n, case) in [(1, 3, Case::Orth), (2, 2, Case::Orth), (2, 2, Case::Symp)] {
        let b = beta_m(&def(m, case), n).unwrap();
        assert!(check_reflection(&b.real).unwrap().pass, "{m} {n} {case:?}");
    }
}

#[test]
fn xact_commutes_m2_n3() {
    for case in [Case::Orth] {
        let rep = def(2, case);
        let b = beta_m(&rep, 3).unwrap();
        assert!(commutes_with(&b.real, &xact(&rep, 3).unwrap()));
    }
    let rep = def(2, Case::Symp);
    assert!(commutes_with(&beta_m(&rep, 2).unwrap().real, &xact(&rep, 2).unwrap()));
}

#[test]
fn f_delta_all() {
    for case in [Case::Orth, Case::Symp] {
        for d in DeltaSeq::all(2) {
            let f = f_delta(&def(2, case), 2, d.as_slice()).unwrap();
            assert!(check_reflection(&f.real).unwrap().pass, "{case:?} {d:?}");
        }
    }
}

#[test]
fn twisted_tensor_trivial_u_is_p_coaction() {
    let v = def(1, Case::Orth);
    let z = q(1, 2);
    let t = twisted_tensor(&v, &GlRep::trivial(1), 2, 1).unwrap();
    let b = beta_m(&v, 2).unwrap();
    let p = p_module(2, &z, None);
    let c = coaction(&b.real, &p.real).unwrap();
    // 1 + Z(u − z − 1) = (u − z)/(u − z − 1) for the trivial gl_1 module
    let f = RatFunc::new(exactcore::UPoly::linear(-&z), exactcore::UPoly::linear(&(-&z) - &Q::ONE)).unwrap();
    let want = c.map("", |e| e.scale_rf(&f));
    assert!(t.real.same_entries(&want));
}

#[test]
fn p_and_alpha_rtt() {
    for n in 1..=3 {
        assert!(check_rtt(&p_module(n, &q(1, 3), None).real).unwrap().pass);
    }
    let a = alpha_l(2, 2, &GlRep::defining(2), &Q::ZERO);
    assert!(check_rtt(&a.real).unwrap().pass);
}

#[test]
fn siverma_reflects_all_sigma() {
    let mu = [q(5, 7), q(2, 11)];
    let lam: Vec<Q> = mu.iter().map(|x| x.clone()).collect();
    for case in [Case::Orth, Case::Symp] {
        for s in SignedPerm::all(2) {
            let sp = siverma_model(&mu, &lam, &s, case, 2).unwrap();
            assert_eq!(sp.dim(), 4);
            assert!(check_reflection(&sp.real).unwrap().pass);
        }
    }
}

#[test]
fn series_cross_check() {
    // (u + F)^{-1} against the truncated expansion Σ_k (−F)^k u^{-k-1}
    let rep = def(2, Case::Symp);
    let f = f_series(&rep, &Q::ZERO);
    let lau = f.laurent(8).unwrap();
    let idx = rep.fm.indices();
    let blocks: Vec<SpMat> = idx.iter().flat_map(|&a| idx.iter().map(move |&b| (a, b))).map(|(a, b)| rep.get(a, b).clone()).collect();
    let big = SpMat::from_blocks(4, 4, &blocks).neg();
    let mut p = SpMat::identity(16);
    assert!(lau[0].is_zero());
    for k in 1..=8 {
        assert_eq!(lau[k], p);
        p = p.mul(&big);
    }
    let _ = RatMat::identity(1);
}
