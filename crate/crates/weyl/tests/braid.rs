use exactcore::SpMat;
use fock::{FockSpace, GenMap, PairingData};
use liealg::{zeta_n, Case, FmData, FmElem};
use proptest::prelude::*;
use weyl::*;

fn setups() -> Vec<(Case, usize, usize)> {
    let mut v = vec![];
    for m in 1..=3 {
        for n in 1..=3 {
            v.push((Case::Orth, m, n));
        }
        v.push((Case::Symp, m, 2));
    }
    v
}

/// Pairs of words that must act identically.
fn relations(m: usize, case: Case) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut r = vec![];
    for a in 1..m {
        for b in a + 1..=m {
            if b == a + 1 && b < m {
                r.push((vec![a, b, a], vec![b, a, b]));
            } else if b > a + 1 {
                r.push((vec![a, b], vec![b, a]));
            }
        }
    }
    if m >= 2 {
        r.push((vec![m - 1, m, m - 1, m], vec![m, m - 1, m, m - 1]));
    }
    if case == Case::Orth && m >= 2 {
        let sp = [m, m - 1, m];
        let with = |pre: &[usize], post: &[usize]| -> Vec<usize> { pre.iter().chain(post).copied().collect() };
        for a in (1..m.saturating_sub(2)).chain([m - 1]) {
            r.push((with(&[a], &sp), with(&sp, &[a])));
        }
        if m >= 3 {
            r.push((with(&with(&[m - 2], &sp), &[m - 2]), with(&with(&sp, &[m - 2]), &sp)));
        }
        r.push((vec![m, m], vec![]));
    }
    r
}

fn fm_image(w: &[usize], fm: &FmData, c: i64, d: i64) -> SpMat {
    fm.defining_elem(&braid_on_fm(w, fm, &FmElem::basis(c, d)).unwrap())
}

#[test]
fn braid_relations_on_fm() {
    for (case, m, _) in setups() {
        let fm = FmData::new(m, case);
        for (l, r) in relations(m, case) {
            for (c, d) in fm.basis() {
                assert_eq!(fm_image(&l, &fm, c, d), fm_image(&r, &fm, c, d), "{case:?} m={m} {l:?}={r:?}");
            }
        }
    }
}

#[test]
fn braid_on_fm_preserves_bracket() {
    for m in 1..=3 {
        for case in [Case::Orth, Case::Symp] {
            let fm = FmData::new(m, case);
            for a in 1..=m {
                for x in fm.basis() {
                    for y in fm.basis() {
                        let fx = braid_on_fm(&[a], &fm, &FmElem::basis(x.0, x.1)).unwrap();
                        let fy = braid_on_fm(&[a], &fm, &FmElem::basis(y.0, y.1)).unwrap();
                        let lhs = fm.defining_elem(&fm.bracket_elem(&fx, &fy));
                        let rhs = fm.defining_elem(&braid_on_fm(&[a], &fm, &fm.bracket(x, y)).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn fm_square_of_last_letter() {
    let so = FmData::new(2, Case::Orth);
    for (c, d) in so.basis() {
        assert_eq!(fm_image(&[2, 2], &so, c, d), so.defining(c, d));
    }
    let sp = FmData::new(2, Case::Symp);
    assert_eq!(fm_image(&[2, 2], &sp, 1, -1), sp.defining(1, -1));
    assert_eq!(fm_image(&[2, 2], &sp, 1, 2), sp.defining(1, 2).neg());
    // σ_a fixes the Cartan sum over the swapped pair
    let fm = FmData::new(3, Case::Symp);
    let sum = FmElem::basis(-3, -3).add(&FmElem::basis(-2, -2));
    assert_eq!(fm.defining_elem(&braid_on_fm(&[1], &fm, &sum).unwrap()), fm.defining_elem(&sum));
}

#[test]
fn braid_relations_on_clifford() {
    for (case, m, n) in setups() {
        let f = FockSpace::new(m, n);
        let pr = PairingData::new(case, n).unwrap();
        for (l, r) in relations(m, case) {
            assert_eq!(braid_on_clifford(&l, f, &pr).unwrap(), braid_on_clifford(&r, f, &pr).unwrap(), "{case:?} m={m} n={n} {l:?}");
        }
    }
}

#[test]
fn clifford_square_of_last_letter() {
    for m in 1..=2 {
        let f = FockSpace::new(m, 2);
        let so = PairingData::new(Case::Orth, 2).unwrap();
        assert!(braid_on_clifford(&[m, m], f, &so).unwrap().is_identity());
        let sp = PairingData::new(Case::Symp, 2).unwrap();
        let sq = braid_on_clifford(&[m, m], f, &sp).unwrap();
        for i in 1..=2 {
            let s = f.slot(1, i).unwrap();
            assert_eq!(sq.image(fock::Gen::X(s)), (-1, fock::Gen::X(s)));
            assert_eq!(sq.image(fock::Gen::D(s)), (-1, fock::Gen::D(s)));
        }
        let letter = braid_on_clifford(&[m], f, &sp).unwrap();
        let mut delta = vec![1; m];
        delta[m - 1] = -1;
        assert_eq!(letter, GenMap::varpi(f, &delta, &sp).unwrap());
    }
}

#[test]
fn zeta_is_equivariant() {
    for (case, m, n) in [(Case::Orth, 2, 2), (Case::Symp, 2, 2), (Case::Orth, 2, 3), (Case::Orth, 3, 1)] {
        let f = FockSpace::new(m, n);
        let pr = PairingData::new(case, n).unwrap();
        let fm = FmData::new(m, case);
        for a in 1..=m {
            let g = braid_on_clifford(&[a], f, &pr).unwrap();
            for (c, d) in fm.basis() {
                let img = braid_on_fm(&[a], &fm, &FmElem::basis(c, d)).unwrap();
                let rhs = img.terms().fold(SpMat::zeros(f.dim(), f.dim()), |acc, (&(x, y), v)| acc.axpy(v, &zeta_n(x, y, f, &pr).unwrap()));
                assert_eq!(g.conjugate(&zeta_n(c, d, f, &pr).unwrap()), rhs, "{case:?} m={m} n={n} a={a} F[{c},{d}]");
            }
        }
    }
}

#[test]
fn every_element_has_two_checked_words() {
    for case in [Case::Orth, Case::Symp] {
        for m in 1..=3 {
            for s in SignedPerm::all(m) {
                let ws = reduced_words(&s, case, 2);
                for w in &ws {
                    assert_eq!(word_to_perm(w, m).unwrap(), s);
                    assert_eq!(counted_letters(w, m, case), s.length(case));
                }
                if ws.len() == 2 {
                    assert_ne!(ws[0], ws[1]);
                }
            }
        }
    }
}

fn arb_perm() -> impl Strategy<Value = SignedPerm> {
    (1usize..=4).prop_flat_map(|m| (Just(m), prop::collection::vec(1..=m, 0..12))).prop_map(|(m, w)| word_to_perm(&w, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn reduced_word_round_trip(s in arb_perm(), sym in any::<bool>()) {
        let case = if sym { Case::Symp } else { Case::Orth };
        let w = reduced_word(&s, case);
        prop_assert_eq!(word_to_perm(&w, s.m()).unwrap(), s.clone());
        prop_assert_eq!(counted_letters(&w, s.m(), case), s.length(case));
    }

    #[test]
    fn length_step_matches_inversions(s in arb_perm(), sym in any::<bool>(), a0 in 1usize..5) {
        let case = if sym { Case::Symp } else { Case::Orth };
        let m = s.m();
        let a = (a0 - 1) % m + 1;
        if case == Case::Orth && a == m {
            return Ok(());
        }
        let root = liealg::simple_root(a, case, m).unwrap();
        let t = SignedPerm::generator(a, m).unwrap().compose(&s);
        let pre = s.inverse().act_root(root).0 > 0;
        let (l0, l1) = (s.length(case), t.length(case));
        prop_assert_eq!(l1, if pre { l0 + 1 } else { l0 - 1 });
    }

    #[test]
    fn shifted_action_is_action(s in arb_perm(), t0 in prop::collection::vec(1usize..5, 0..6), labels in prop::collection::vec(-20i64..20, 4), sym in any::<bool>()) {
        let case = if sym { Case::Symp } else { Case::Orth };
        let m = s.m();
        let t = word_to_perm(&t0.iter().map(|a| (a - 1) % m + 1).collect::<Vec<_>>(), m).unwrap();
        let mu = liealg::Weight::new(labels[..m].iter().map(|&x| exactcore::Q::new(x, 3)).collect());
        let lhs = shifted_action(&s.compose(&t), &mu, case);
        let rhs = shifted_action(&s, &shifted_action(&t, &mu, case), case);
        prop_assert_eq!(lhs, rhs);
    }
}
