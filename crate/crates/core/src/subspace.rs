//! Subspaces of G2 held as reduced echelon bases, with subalgebra
//! predicates, derived and lower central series, normalizers, centralizers
//! and a vector of conjugation invariants.

use std::fmt;

use serde::Serialize;

use crate::algebra::{
    bracket, is_nilpotent_element, is_semisimple_element, Automorphism, AlgElement, DIM,
};
use crate::error::{G2Error, Result};
use crate::linalg::Matrix;
use crate::parse::format_element_list;
use crate::scalar::FieldElement;

/// A subspace in reduced row echelon form: pivots strictly increasing,
/// normalized to 1, and zero in every other basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Vec<AlgElement>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero() -> Self {
        Self {
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full() -> Self {
        span(&(0..DIM).map(AlgElement::basis).collect::<Vec<_>>())
    }

    /// The Cartan subalgebra.
    pub fn cartan() -> Self {
        span(&[AlgElement::h_alpha(), AlgElement::h_beta()])
    }

    pub fn basis(&self) -> &[AlgElement] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reduces `x` modulo this subspace: the result vanishes at every pivot.
    pub fn reduce(&self, x: &AlgElement) -> AlgElement {
        let mut r = x.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r.coord(p).clone();
            if !c.is_zero() {
                r = &r - &b.scale(&c);
            }
        }
        r
    }

    pub fn contains(&self, x: &AlgElement) -> bool {
        self.reduce(x).is_zero()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        span(&gens)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero();
        }
        // Solve Σ a_i u_i − Σ b_j v_j = 0.
        let mut cols: Vec<Vec<FieldElement>> =
            self.basis.iter().map(|u| u.coords().to_vec()).collect();
        cols.extend(other.basis.iter().map(|v| (-v).coords().to_vec()));
        let m = Matrix::from_columns(&cols, DIM);
        let gens: Vec<AlgElement> = m
            .kernel()
            .iter()
            .map(|k| combine(&self.basis, &k[..self.dim()]))
            .collect();
        span(&gens)
    }

    /// Image under a linear map of G2.
    pub fn transform(&self, m: &Automorphism) -> Subspace {
        span(&self.basis.iter().map(|b| m.apply(b)).collect::<Vec<_>>())
    }

    /// `[A, B]` as a subspace.
    pub fn bracket_space(&self, other: &Subspace) -> Subspace {
        let mut gens = Vec::new();
        for a in &self.basis {
            for b in &other.basis {
                gens.push(bracket(a, b));
            }
        }
        span(&gens)
    }

    /// True iff every basis vector lies in the span of `H_α, H_β` and the
    /// root vectors listed (the coordinate support test).
    pub fn supported_on(&self, coords: &[usize]) -> bool {
        self.basis.iter().all(|b| {
            b.coords()
                .iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() || coords.contains(&i))
        })
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩", format_element_list(&self.basis))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}", format_element_list(&self.basis))
        }
    }
}

/// `Σ k_i · v_i`.
pub fn combine(vs: &[AlgElement], ks: &[FieldElement]) -> AlgElement {
    vs.iter()
        .zip(ks)
        .filter(|(_, k)| !k.is_zero())
        .fold(AlgElement::zero(), |acc, (v, k)| &acc + &v.scale(k))
}

pub fn span(gens: &[AlgElement]) -> Subspace {
    if gens.is_empty() {
        return Subspace::zero();
    }
    let m = Matrix::from_rows(gens.iter().map(|g| g.coords().to_vec()).collect());
    let (r, pivots) = m.rref();
    let basis = (0..pivots.len())
        .map(|i| AlgElement::from_coords(r.row(i).to_vec()))
        .collect();
    Subspace { basis, pivots }
}

pub fn is_subalgebra(s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| ((i + 1)..b.len()).all(|j| s.contains(&bracket(&b[i], &b[j]))))
}

/// The smallest bracket-closed subspace containing `gens`.
pub fn generated_subalgebra(gens: &[AlgElement]) -> Subspace {
    let mut s = span(gens);
    loop {
        let next = s.sum(&s.bracket_space(&s));
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
}

fn require_subalgebra(s: &Subspace) -> Result<()> {
    if is_subalgebra(s) {
        Ok(())
    } else {
        Err(G2Error::NotSubalgebra)
    }
}

/// `S ⊇ [S,S] ⊇ …`, ending with the first repeated term.
pub fn derived_series(s: &Subspace) -> Result<Vec<Subspace>> {
    require_subalgebra(s)?;
    let mut out = vec![s.clone()];
    loop {
        let last = out.last().expect("nonempty");
        let next = last.bracket_space(last);
        if next.dim() == last.dim() {
            return Ok(out);
        }
        let done = next.is_zero();
        out.push(next);
        if done {
            return Ok(out);
        }
    }
}

/// `S ⊇ [S,S] ⊇ [S,[S,S]] ⊇ …`, ending with the first repeated term.
pub fn lower_central_series(s: &Subspace) -> Result<Vec<Subspace>> {
    require_subalgebra(s)?;
    let mut out = vec![s.clone()];
    loop {
        let last = out.last().expect("nonempty");
        let next = s.bracket_space(last);
        if next.dim() == last.dim() {
            return Ok(out);
        }
        let done = next.is_zero();
        out.push(next);
        if done {
            return Ok(out);
        }
    }
}

/// Kernel of `x ↦ ([x, s_1] mod S, …, [x, s_k] mod S)`; with `modulo = None`
/// the brackets themselves must vanish.
fn annihilator(s: &Subspace, modulo: Option<&Subspace>) -> Subspace {
    if s.is_zero() {
        return Subspace::full();
    }
    let mut cols: Vec<Vec<FieldElement>> = Vec::with_capacity(DIM);
    for j in 0..DIM {
        let e = AlgElement::basis(j);
        let mut col = Vec::new();
        for b in s.basis() {
            let mut v = bracket(&e, b);
            if let Some(q) = modulo {
                v = q.reduce(&v);
            }
            col.extend(v.coords().iter().cloned());
        }
        cols.push(col);
    }
    let rows = cols[0].len();
    let m = Matrix::from_columns(&cols, rows);
    span(
        &m.kernel()
            .into_iter()
            .map(AlgElement::from_coords)
            .collect::<Vec<_>>(),
    )
}

/// `{x : [x, S] ⊆ S}`.
pub fn normalizer(s: &Subspace) -> Subspace {
    annihilator(s, Some(s))
}

/// `{x : [x, S] = 0}`.
pub fn centralizer(s: &Subspace) -> Subspace {
    annihilator(s, None)
}

/// True iff `S = (S ∩ h) ⊕ ⊕_γ (S ∩ C X_γ)`.
pub fn is_regular_form(s: &Subspace) -> bool {
    s.basis().iter().all(|b| {
        let cartan = b.cartan_part();
        if !s.contains(&cartan) {
            return false;
        }
        (2..DIM).all(|i| {
            let c = b.coord(i);
            c.is_zero() || s.contains(&AlgElement::basis(i))
        })
    })
}

/// Finite probe set: the echelon basis, pairwise sums of basis vectors, and
/// the basis of `S ∩ h`.
pub fn probe_elements(s: &Subspace) -> Vec<AlgElement> {
    let b = s.basis();
    let mut out: Vec<AlgElement> = b.to_vec();
    for i in 0..b.len() {
        for j in (i + 1)..b.len() {
            out.push(&b[i] + &b[j]);
        }
    }
    out.extend(s.intersection(&Subspace::cartan()).basis().iter().cloned());
    out
}

/// Semi-decision: true iff some probe element is a nonzero semisimple
/// element. A `false` answer means no probe certified one.
pub fn contains_nonzero_semisimple(s: &Subspace) -> bool {
    probe_elements(s)
        .iter()
        .any(|x| !x.is_zero() && !is_nilpotent_element(x) && is_semisimple_element(x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantVector {
    pub dim: usize,
    pub derived_dims: Vec<usize>,
    pub lcs_dims: Vec<usize>,
    pub normalizer_dim: usize,
    pub centralizer_dim: usize,
    pub is_solvable: bool,
    pub is_nilpotent_alg: bool,
    pub contains_nonzero_semisimple: bool,
}

pub fn invariant_vector(s: &Subspace) -> Result<InvariantVector> {
    let derived: Vec<usize> = derived_series(s)?.iter().map(Subspace::dim).collect();
    let lcs: Vec<usize> = lower_central_series(s)?.iter().map(Subspace::dim).collect();
    Ok(InvariantVector {
        dim: s.dim(),
        is_solvable: derived.last() == Some(&0),
        is_nilpotent_alg: lcs.last() == Some(&0),
        derived_dims: derived,
        lcs_dims: lcs,
        normalizer_dim: normalizer(s).dim(),
        centralizer_dim: centralizer(s).dim(),
        contains_nonzero_semisimple: contains_nonzero_semisimple(s),
    })
}

/// The positive nilradical `𝔫`.
pub fn positive_nilradical() -> Subspace {
    span(
        &crate::roots::ROOTS
            .iter()
            .filter(|r| r.is_positive())
            .map(|&r| AlgElement::x(r))
            .collect::<Vec<_>>(),
    )
}

/// The Borel subalgebra `𝔟 = h ⊕ 𝔫`.
pub fn borel() -> Subspace {
    Subspace::cartan().sum(&positive_nilradical())
}
