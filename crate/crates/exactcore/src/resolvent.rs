//! Minimal polynomials and resolvents `(w − A)^{-1}` of constant matrices.
//!
//! With `μ(x) = Σ a_k x^k` the minimal polynomial of `A`,
//! `(w − A)^{-1} = Σ_t w^t C_t / μ(w)` where `C_t = Σ_j a_{t+1+j} A^j`.

use crate::poly::UPoly;
use crate::ratmat::RatMat;
use crate::rational::Q;
use crate::sparse::SpMat;

fn flatten(m: &SpMat) -> Vec<(usize, Q)> {
    m.triplets().map(|(i, j, v)| (i * m.cols() + j, v.clone())).collect()
}

fn axpy_vec(x: &[(usize, Q)], a: &Q, y: &[(usize, Q)]) -> Vec<(usize, Q)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, a * &y[j].1));
            j += 1;
        } else {
            let v = &x[i].1 + &(a * &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Minimal polynomial together with the powers `A^0..A^{r-1}`.
pub fn minimal_polynomial(a: &SpMat) -> (UPoly, Vec<SpMat>) {
    assert_eq!(a.rows(), a.cols(), "minimal polynomial of a non-square matrix");
    let n = a.rows();
    let mut powers = vec![SpMat::identity(n)];
    // echelon basis: (pivot, reduced vector, combination of powers)
    let mut basis: Vec<(usize, Vec<(usize, Q)>, Vec<Q>)> = vec![];
    loop {
        let k = powers.len() - 1;
        let mut v = flatten(&powers[k]);
        let mut combo = vec![Q::ZERO; k + 1];
        combo[k] = Q::ONE;
        for (p, b, c) in &basis {
            if let Ok(ix) = v.binary_search_by_key(p, |e| e.0) {
                let f = -&v[ix].1;
                v = axpy_vec(&v, &f, b);
                for (t, ct) in c.iter().enumerate() {
                    combo[t] += &(&f * ct);
                }
            }
        }
        if v.is_empty() {
            powers.pop();
            return (UPoly::new(combo), powers);
        }
        let piv = v[0].0;
        let s = v[0].1.inv().unwrap();
        let v: Vec<_> = v.into_iter().map(|(i, x)| (i, &x * &s)).collect();
        let combo: Vec<Q> = combo.iter().map(|c| c * &s).collect();
        basis.push((piv, v, combo));
        let next = powers[k].mul(a);
        powers.push(next);
    }
}

/// `(u + c − A)^{-1}` as an exact rational operator matrix.
pub fn resolvent(a: &SpMat, c: &Q) -> RatMat {
    let (mu, powers) = minimal_polynomial(a);
    let r = mu.degree().unwrap();
    let n = a.rows();
    // numerator in w: Σ_t w^t C_t
    let ct: Vec<SpMat> = (0..r)
        .map(|t| {
            let mut acc = SpMat::zeros(n, n);
            for (j, p) in powers.iter().enumerate().take(r - t) {
                acc = acc.axpy(&mu.coeff(t + 1 + j), p);
            }
            acc
        })
        .collect();
    RatMat::from_parts(n, n, ct, mu).subst_affine(&Q::ONE, c)
}
