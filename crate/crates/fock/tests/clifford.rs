use exactcore::{QMat, Q, SpMat};
use fock::{Case, FockSpace, Gen, GenMap, PairingData};
use proptest::prelude::*;

#[test]
fn anticommutators_all_slot_pairs() {
    for (m, n) in [(1, 1), (1, 3), (2, 2), (3, 1)] {
        let f = FockSpace::new(m, n);
        let dim = f.dim();
        for s in 0..f.slots() {
            let (xs, ds) = (f.x_slot(s), f.d_slot(s));
            assert!(xs.mul(&xs).is_zero());
            assert!(ds.mul(&ds).is_zero());
            for t in 0..f.slots() {
                let (xt, dt) = (f.x_slot(t), f.d_slot(t));
                assert!(xs.anticommutator(&xt).is_zero());
                assert!(ds.anticommutator(&dt).is_zero());
                let mixed = xs.anticommutator(&dt);
                if s == t {
                    assert_eq!(mixed, SpMat::identity(dim));
                } else {
                    assert!(mixed.is_zero());
                }
            }
        }
    }
}

#[test]
fn ordered_monomials_span_full_matrix_algebra() {
    // x^A ∂^B over all pairs of slot subsets are linearly independent
    for (m, n) in [(1, 1), (1, 2), (2, 2), (1, 4)] {
        let f = FockSpace::new(m, n);
        let k = f.slots();
        let dim = f.dim();
        let mut rows = vec![];
        for a in 0..(1usize << k) {
            for b in 0..(1usize << k) {
                let mut op = f.identity();
                for s in (0..k).filter(|s| a >> s & 1 == 1) {
                    op = op.mul(&f.x_slot(s));
                }
                for s in (0..k).filter(|s| b >> s & 1 == 1) {
                    op = op.mul(&f.d_slot(s));
                }
                let mut v = vec![Q::ZERO; dim * dim];
                for (i, j, x) in op.triplets() {
                    v[i * dim + j] = x.clone();
                }
                rows.push(v);
            }
        }
        assert_eq!(QMat::from_rows(rows).rank(), dim * dim);
    }
}

#[test]
fn pq_relations_reduce_to_clifford() {
    for case in [Case::Orth, Case::Symp] {
        let f = FockSpace::new(2, 2);
        let pr = PairingData::new(case, 2).unwrap();
        let idx: Vec<i64> = vec![-2, -1, 1, 2];
        for &c in &idx {
            for &d in &idx {
                for i in 1..=2 {
                    for j in 1..=2 {
                        let pc = f.p(c, i, &pr).unwrap();
                        let qd = f.q(d, j, &pr).unwrap();
                        let pd = f.p(d, j, &pr).unwrap();
                        // p_{ci} q_{dj} + q_{dj} p_{ci} = δ_{cd} δ_{ij}
                        let expect = if c == d && i == j { f.identity() } else { SpMat::zeros(f.dim(), f.dim()) };
                        assert_eq!(pc.anticommutator(&qd), expect, "c={c} d={d} i={i} j={j}");
                        // p_{ci} p_{dj} + p_{dj} p_{ci} pairs rows c and −c through the form
                        let pp = if c == -d && pr.tilde(i) == j {
                            f.identity().scale(&Q::int(if c > 0 { pr.theta(i) } else { pr.theta(j) }))
                        } else {
                            SpMat::zeros(f.dim(), f.dim())
                        };
                        assert_eq!(pc.anticommutator(&pd), pp);
                    }
                }
            }
        }
    }
}

#[test]
fn sigma_m_squares() {
    // squares of a single row flip: identity (orth), minus identity (symp) on that row
    let f = FockSpace::new(2, 2);
    for (case, sign) in [(Case::Orth, 1), (Case::Symp, -1)] {
        let pr = PairingData::new(case, 2).unwrap();
        let g = GenMap::row_flip(f, 1, &pr);
        let g2 = g.compose(&g);
        for i in 1..=2 {
            let s = f.slot(1, i).unwrap();
            assert_eq!(g2.image(Gen::X(s)), (sign, Gen::X(s)));
            assert_eq!(g2.image(Gen::D(s)), (sign, Gen::D(s)));
            let t = f.slot(2, i).unwrap();
            assert_eq!(g2.image(Gen::X(t)), (1, Gen::X(t)));
        }
    }
}

proptest! {
    #[test]
    fn conjugators_compose(flips in prop::collection::vec(prop::bool::ANY, 2), swap in prop::bool::ANY, symp in prop::bool::ANY) {
        let case = if symp { Case::Symp } else { Case::Orth };
        let f = FockSpace::new(2, 2);
        let pr = PairingData::new(case, 2).unwrap();
        let delta: Vec<i64> = flips.iter().map(|&b| if b { -1 } else { 1 }).collect();
        let a = GenMap::varpi(f, &delta, &pr).unwrap();
        let b = if swap { GenMap::row_map(f, |r| 3 - r) } else { GenMap::identity(f) };
        let ab = a.compose(&b);
        // conjugators agree up to an overall sign
        let w = ab.conjugator();
        let w2 = a.conjugator().mul(&b.conjugator());
        prop_assert!(w == w2 || w == w2.neg());
        for s in 0..f.slots() {
            let x = f.x_slot(s);
            prop_assert_eq!(ab.conjugate(&x), a.conjugate(&b.conjugate(&x)));
        }
    }
}
