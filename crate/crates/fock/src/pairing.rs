//! The bilinear form on `C^n` (or on `C^n ⊕ C^l`): signs `θ_i` and the
//! involution `i ↦ ĩ`, with 1-based indices.

use crate::FockError;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Orth,
    Symp,
}

impl Case {
    /// The `±` sign: `+1` for the orthogonal case, `−1` for the symplectic one.
    pub fn pm(self) -> i64 {
        match self {
            Case::Orth => 1,
            Case::Symp => -1,
        }
    }
    pub fn name(self) -> &'static str {
        match self {
            Case::Orth => "orth",
            Case::Symp => "symp",
        }
    }
}

impl std::str::FromStr for Case {
    type Err = FockError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "orth" | "so" => Ok(Case::Orth),
            "symp" | "sp" => Ok(Case::Symp),
            _ => Err(FockError::BadCase(s.to_string())),
        }
    }
}

/// One or more consecutive blocks; `θ` and `~` never cross blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairingData {
    pub case: Case,
    blocks: Vec<(usize, usize)>,
    theta: Vec<i64>,
    tilde: Vec<usize>,
}

impl PairingData {
    pub fn new(case: Case, n: usize) -> Result<Self, FockError> {
        Self::glued(case, &[n])
    }

    /// Blocks of the given sizes placed one after another.
    pub fn glued(case: Case, sizes: &[usize]) -> Result<Self, FockError> {
        let mut blocks = vec![];
        let mut theta = vec![];
        let mut tilde = vec![];
        let mut off = 0;
        for &n in sizes {
            if case == Case::Symp && n % 2 == 1 {
                return Err(FockError::OddSymplectic(n));
            }
            for k in 1..=n {
                theta.push(if case == Case::Symp && k % 2 == 0 { -1 } else { 1 });
                let t = if k % 2 == 0 {
                    k - 1
                } else if k < n {
                    k + 1
                } else {
                    k
                };
                tilde.push(off + t);
            }
            blocks.push((off, n));
            off += n;
        }
        Ok(PairingData { case, blocks, theta, tilde })
    }

    pub fn n(&self) -> usize {
        self.theta.len()
    }
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }
    pub fn theta(&self, i: usize) -> i64 {
        self.theta[i - 1]
    }
    pub fn tilde(&self, i: usize) -> usize {
        self.tilde[i - 1]
    }
    /// The block `[off+1, off+len]` as a stand-alone pairing.
    pub fn block(&self, b: usize) -> PairingData {
        PairingData::new(self.case, self.blocks[b].1).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tilde_rules() {
        let p = PairingData::new(Case::Orth, 3).unwrap();
        assert_eq!((1..=3).map(|i| p.tilde(i)).collect::<Vec<_>>(), vec![2, 1, 3]);
        let s = PairingData::new(Case::Symp, 4).unwrap();
        assert_eq!((1..=4).map(|i| s.theta(i)).collect::<Vec<_>>(), vec![1, -1, 1, -1]);
        assert!(PairingData::new(Case::Symp, 3).is_err());
        let g = PairingData::glued(Case::Orth, &[2, 1]).unwrap();
        assert_eq!(g.tilde(3), 3);
        assert_eq!(g.tilde(1), 2);
    }

    #[test]
    fn involution_and_sign() {
        for (case, n) in [(Case::Orth, 5), (Case::Symp, 6)] {
            let p = PairingData::new(case, n).unwrap();
            for i in 1..=n {
                assert_eq!(p.tilde(p.tilde(i)), i);
                let expect = if case == Case::Orth { 1 } else { -1 };
                if p.tilde(i) != i {
                    assert_eq!(p.theta(i) * p.theta(p.tilde(i)), expect);
                }
            }
        }
    }
}
