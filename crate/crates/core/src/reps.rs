//! sl2-triples, Dynkin indices and decompositions of the adjoint
//! representation restricted to semisimple subalgebras.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{ad, bracket, AlgElement, DIM};
use crate::error::{G2Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{rat, FieldElement, Rational};
use crate::subspace::{span, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub f: AlgElement,
    pub e_plus: AlgElement,
    pub e_minus: AlgElement,
}

impl Sl2Triple {
    pub fn new(f: AlgElement, e_plus: AlgElement, e_minus: AlgElement) -> Self {
        Self { f, e_plus, e_minus }
    }

    pub fn span(&self) -> Subspace {
        span(&[self.f.clone(), self.e_plus.clone(), self.e_minus.clone()])
    }

    pub fn generators(&self) -> Vec<AlgElement> {
        vec![self.f.clone(), self.e_plus.clone(), self.e_minus.clone()]
    }
}

/// Checks `[f,e₊] = 2e₊`, `[f,e₋] = −2e₋`, `[e₊,e₋] = f`; the error names the
/// first failing relation.
pub fn verify_triple(t: &Sl2Triple) -> std::result::Result<(), String> {
    if bracket(&t.f, &t.e_plus) != t.e_plus.scale_int(2) {
        return Err("[f,e+] != 2e+".into());
    }
    if bracket(&t.f, &t.e_minus) != t.e_minus.scale_int(-2) {
        return Err("[f,e-] != -2e-".into());
    }
    if bracket(&t.e_plus, &t.e_minus) != t.f {
        return Err("[e+,e-] != f".into());
    }
    if t.f.is_zero() {
        return Err("f = 0".into());
    }
    Ok(())
}

fn require_triple(t: &Sl2Triple) -> Result<()> {
    verify_triple(t).map_err(G2Error::NotATriple)
}

/// `ker(ad f − k)` as a subspace.
pub fn eigenspace(f: &AlgElement, k: i64) -> Subspace {
    let m = ad(f).add(&Matrix::identity(DIM).scale(&FieldElement::from_int(-k)));
    span(&m.kernel().into_iter().map(AlgElement::from_coords).collect::<Vec<_>>())
}

/// Integer eigenvalue multiplicities of `ad f` on an `ad f`-stable subspace `W`.
pub fn weight_multiplicities(f: &AlgElement, w: &Subspace) -> Result<BTreeMap<i64, usize>> {
    let bound = 4 * DIM as i64;
    let mut out = BTreeMap::new();
    let mut total = 0;
    for k in -bound..=bound {
        let m = eigenspace(f, k).intersection(w).dim();
        if m > 0 {
            out.insert(k, m);
            total += m;
        }
    }
    if total != w.dim() {
        return Err(G2Error::NonIntegerWeight);
    }
    Ok(out)
}

/// `Σ λ² / 16` over the eigenvalues of `ad f`.
pub fn dynkin_index(t: &Sl2Triple) -> Result<Rational> {
    require_triple(t)?;
    let m = weight_multiplicities(&t.f, &Subspace::full())?;
    let sum: i64 = m.iter().map(|(k, n)| k * k * *n as i64).sum();
    Ok(rat(sum, 16))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sl2DecompReport {
    /// Keyed by `2s`; `n_s` copies of `D_s`.
    pub multiplicities: BTreeMap<u32, usize>,
    pub total_dim_check: usize,
}

impl Sl2DecompReport {
    pub fn spin_label(two_s: u32) -> String {
        if two_s.is_multiple_of(2) {
            (two_s / 2).to_string()
        } else {
            format!("{two_s}/2")
        }
    }
}

/// `n_s = m_{2s} − m_{2s+2}` from the weights of `ad f` on G2.
pub fn decompose_under_sl2(t: &Sl2Triple) -> Result<Sl2DecompReport> {
    require_triple(t)?;
    let m = weight_multiplicities(&t.f, &Subspace::full())?;
    Ok(decompose_weights(&m))
}

/// Spin multiplicities of a weight multiset of an sl2-module.
pub fn decompose_weights(m: &BTreeMap<i64, usize>) -> Sl2DecompReport {
    let get = |k: i64| *m.get(&k).unwrap_or(&0) as i64;
    let top = m.keys().copied().max().unwrap_or(0).max(0);
    let mut multiplicities = BTreeMap::new();
    let mut total = 0;
    for two_s in 0..=top {
        let n = get(two_s) - get(two_s + 2);
        assert!(n >= 0, "weights do not come from an sl2-module");
        if n > 0 {
            multiplicities.insert(two_s as u32, n as usize);
            total += n as usize * (two_s as usize + 1);
        }
    }
    Sl2DecompReport {
        multiplicities,
        total_dim_check: total,
    }
}

/// The smallest subspace containing `w` and stable under `ad g` for every generator.
pub fn cyclic_submodule(gens: &[AlgElement], w: &AlgElement) -> Subspace {
    let mut s = span(std::slice::from_ref(w));
    loop {
        let mut more = s.basis().to_vec();
        for b in s.basis() {
            for g in gens {
                more.push(bracket(g, b));
            }
        }
        let next = span(&more);
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubmoduleCheck {
    pub invariant: bool,
    pub dim: usize,
    pub dim_ok: bool,
    /// Every nonzero basis vector generates all of `W`.
    pub irreducible: bool,
    /// Every generator acts as zero on `W`.
    pub trivial: bool,
}

pub fn verify_submodule(gens: &[AlgElement], w: &Subspace, expected_dim: usize) -> SubmoduleCheck {
    let invariant = gens
        .iter()
        .all(|g| w.basis().iter().all(|b| w.contains(&bracket(g, b))));
    let irreducible = invariant
        && !w.is_zero()
        && w.basis().iter().all(|b| cyclic_submodule(gens, b) == *w);
    let trivial = gens
        .iter()
        .all(|g| w.basis().iter().all(|b| bracket(g, b).is_zero()));
    SubmoduleCheck {
        invariant,
        dim: w.dim(),
        dim_ok: w.dim() == expected_dim,
        irreducible,
        trivial,
    }
}

/// Weight pairs `(γ(h1), γ(h2))` of a subspace spanned by root vectors;
/// `None` if some basis vector is not a root vector.
pub fn root_weights(w: &Subspace, h1: &AlgElement, h2: &AlgElement) -> Option<Vec<(FieldElement, FieldElement)>> {
    let mut out = Vec::new();
    for b in w.basis() {
        let nz: Vec<usize> = (0..DIM).filter(|&i| !b.coord(i).is_zero()).collect();
        if nz.len() != 1 || nz[0] < 2 {
            return None;
        }
        let r = crate::algebra::basis_root(nz[0]).expect("root coordinate");
        out.push((h1.root_value(r), h2.root_value(r)));
    }
    Some(out)
}

/// Weights of `D_s` for `f`: `2s, 2s − 2, …, −2s`.
pub fn irreducible_weights(two_s: u32) -> BTreeMap<i64, usize> {
    (0..=two_s as i64).map(|j| (two_s as i64 - 2 * j, 1)).collect()
}
