//! Braid group actions on `f_m` and on the Clifford algebra `GD(C^m ⊗ C^n)`.

use crate::perm::SignedPerm;
use crate::WeylError;
use fock::{FockSpace, GenMap, PairingData};
use liealg::{Case, FmData, FmElem};

fn check_word(w: &[usize], m: usize) -> Result<(), WeylError> {
    match w.iter().find(|&&a| a == 0 || a > m) {
        Some(&a) => Err(WeylError::Letter(a, m)),
        None => Ok(()),
    }
}

/// Image of `F_{cd}` under the single letter `a`.
pub fn letter_on_fm(a: usize, fm: &FmData, c: i64, d: i64) -> (i64, i64, i64) {
    let g = SignedPerm::generator(a, fm.m).unwrap();
    let (c2, d2) = (g.bar_action(c), g.bar_action(d));
    let sign = if a == fm.m && fm.case == Case::Symp { (-1i64).pow((c == 1) as u32 + (d == 1) as u32) } else { 1 };
    (sign, c2, d2)
}

/// Automorphism of `f_m` defined by the word: letters act left to right.
pub fn braid_on_fm(w: &[usize], fm: &FmData, x: &FmElem) -> Result<FmElem, WeylError> {
    check_word(w, fm.m)?;
    let mut cur = x.clone();
    for &a in w {
        let mut next = FmElem::default();
        for (&(c, d), v) in cur.terms() {
            let (s, c2, d2) = letter_on_fm(a, fm, c, d);
            next.add_term(v * &exactcore::Q::int(s), c2, d2);
        }
        cur = next;
    }
    Ok(cur)
}

/// Generator map of a single letter: rows permuted by `σ̄_a`, or the row-1 flip for `a = m`.
pub fn letter_on_clifford(a: usize, fock: FockSpace, pr: &PairingData) -> GenMap {
    let m = fock.m;
    if a == m {
        GenMap::row_flip(fock, 1, pr)
    } else {
        let g = SignedPerm::generator(a, m).unwrap();
        GenMap::row_map(fock, |r| g.bar_action(r as i64) as usize)
    }
}

/// Automorphism of the Clifford algebra defined by the word (letters act left to right).
pub fn braid_on_clifford(w: &[usize], fock: FockSpace, pr: &PairingData) -> Result<GenMap, WeylError> {
    check_word(w, fock.m)?;
    Ok(w.iter().fold(GenMap::identity(fock), |acc, &a| letter_on_clifford(a, fock, pr).compose(&acc)))
}
