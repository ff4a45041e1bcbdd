//! Structure data and concrete representations of `gl_n`, `g_n ⊂ gl_n`
//! and `f_m = so_{2m}` or `sp_{2m}`.

pub mod fm;
pub mod gl;
pub mod roots;

pub use fm::{zeta, zeta_n, FmData, FmElem, FmRep};
pub use fock::{Case, PairingData};
pub use gl::{gn_action, gn_fock_rep, GlRep};
pub use roots::{positive_roots, rho, shifted_labels, simple_root, sl2_triple, Root, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("index {0} out of range")]
    Index(i64),
    #[error("so_2 has no simple root")]
    NoRoot,
    #[error("no column block {0}")]
    Block(usize),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Fock(#[from] fock::FockError),
}

/// Structure constants of `f_m` as JSON keyed by index pairs.
pub fn structure_constants_json(fm: &FmData) -> serde_json::Value {
    let mut out = serde_json::Map::new();
    for x in fm.basis() {
        for y in fm.basis() {
            let b = fm.bracket(x, y);
            if b.0.is_empty() {
                continue;
            }
            let terms: Vec<_> = b.terms().map(|(&(a, c), v)| serde_json::json!([a, c, v.to_string()])).collect();
            out.insert(format!("[{},{}],[{},{}]", x.0, x.1, y.0, y.1), serde_json::Value::Array(terms));
        }
    }
    serde_json::Value::Object(out)
}
