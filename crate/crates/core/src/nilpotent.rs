//! Nilpotent orbits by adjoint rank, the schema list of subalgebras of the
//! positive nilradical, and the shape test for solvable subalgebras of the
//! Borel subalgebra.

use std::fmt;

use serde::Serialize;

use crate::algebra::{ad_rank, is_nilpotent_element, AlgElement, DIM};
use crate::error::{G2Error, Result};
use crate::roots::{Root, ROOTS};
use crate::scalar::FieldElement;
use crate::subspace::{borel, is_subalgebra, positive_nilradical, Subspace};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OrbitLabel {
    Zero,
    A1,
    A1Tilde,
    A1_4,
    A1_28,
}

impl OrbitLabel {
    pub fn orbit_dim(self) -> usize {
        match self {
            OrbitLabel::Zero => 0,
            OrbitLabel::A1 => 6,
            OrbitLabel::A1Tilde => 8,
            OrbitLabel::A1_4 => 10,
            OrbitLabel::A1_28 => 12,
        }
    }

    pub fn from_orbit_dim(d: usize) -> Option<Self> {
        [
            OrbitLabel::Zero,
            OrbitLabel::A1,
            OrbitLabel::A1Tilde,
            OrbitLabel::A1_4,
            OrbitLabel::A1_28,
        ]
        .into_iter()
        .find(|l| l.orbit_dim() == d)
    }

    pub fn name(self) -> &'static str {
        match self {
            OrbitLabel::Zero => "ZERO",
            OrbitLabel::A1 => "A1",
            OrbitLabel::A1Tilde => "A1_TILDE",
            OrbitLabel::A1_4 => "A1_4",
            OrbitLabel::A1_28 => "A1_28",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            OrbitLabel::Zero,
            OrbitLabel::A1,
            OrbitLabel::A1Tilde,
            OrbitLabel::A1_4,
            OrbitLabel::A1_28,
        ]
        .into_iter()
        .find(|l| l.name() == s)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The orbit of a nilpotent element; the orbit dimension equals `rank(ad x)`.
pub fn classify_nilpotent(x: &AlgElement) -> Result<OrbitLabel> {
    if !is_nilpotent_element(x) {
        return Err(G2Error::NotNilpotent);
    }
    let r = ad_rank(x);
    Ok(OrbitLabel::from_orbit_dim(r)
        .unwrap_or_else(|| panic!("nilpotent element {x} has ad-rank {r}, which is not an orbit dimension")))
}

/// One slot of a schema: a fixed pivot root, or either of two.
#[derive(Clone, Copy, Debug)]
enum Slot {
    Is(Root),
    Either(Root, Root),
}

impl Slot {
    fn accepts(self, r: Root) -> bool {
        match self {
            Slot::Is(x) => x == r,
            Slot::Either(x, y) => x == r || y == r,
        }
    }
}

struct Schema {
    row: u8,
    slots: Vec<Slot>,
    /// The vector led by `X_α` has no `X_β` term.
    alpha_pure: bool,
}

fn schemas() -> Vec<Schema> {
    let r = Root::of;
    let a = Slot::Is(r(1, 0));
    let b = Slot::Is(r(0, 1));
    let ab = Slot::Either(r(1, 0), r(0, 1));
    let c = Slot::Is(r(1, 1));
    let d = Slot::Is(r(2, 1));
    let e = Slot::Is(r(3, 1));
    let f = Slot::Is(r(3, 2));
    let ef = Slot::Either(r(3, 1), r(3, 2));
    let s = |row: u8, slots: Vec<Slot>| Schema { row, slots, alpha_pure: false };
    vec![
        s(1, vec![]),
        s(2, vec![e, f]),
        s(3, vec![d, e, f]),
        s(4, vec![c, d, e, f]),
        s(5, vec![a, b, c, d, e, f]),
        s(6, vec![ef]),
        s(7, vec![d]),
        s(8, vec![c]),
        s(9, vec![ab]),
        s(10, vec![d, ef]),
        s(11, vec![c, e, f]),
        s(12, vec![c, ef]),
        Schema { row: 13, slots: vec![a, ef], alpha_pure: true },
        s(14, vec![ab, f]),
        s(15, vec![ab, e, f]),
        s(16, vec![b, d]),
        s(17, vec![ab, d, e, f]),
        s(18, vec![b, c]),
        s(19, vec![ab, c, d, e, f]),
        s(20, vec![c, d, f]),
        Schema { row: 21, slots: vec![a, d, e], alpha_pure: true },
        s(22, vec![b, d, f]),
        s(23, vec![b, c, e, f]),
        s(24, vec![b, c, f]),
        s(25, vec![b, c, d, f]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemaSignature {
    pub leading_roots: Vec<String>,
    /// The lowest-numbered matching row.
    pub row: u8,
    /// Every matching row (more than one only at degenerate coefficients).
    pub all_rows: Vec<u8>,
}

/// Reads the pivot roots of `S ⊆ 𝔫` and finds the matching schema rows.
pub fn match_table10_schema(s: &Subspace) -> Result<SchemaSignature> {
    if !positive_nilradical().contains_space(s) {
        return Err(G2Error::NotInNilradical);
    }
    if !is_subalgebra(s) {
        return Err(G2Error::NotSubalgebra);
    }
    let pivots: Vec<Root> = s
        .pivots()
        .iter()
        .map(|&p| crate::algebra::basis_root(p).expect("pivots of a subspace of 𝔫 are roots"))
        .collect();
    let alpha = Root::of(1, 0);
    let beta = Root::of(0, 1);
    let alpha_pure = s
        .basis()
        .iter()
        .zip(&pivots)
        .filter(|(_, &p)| p == alpha)
        .all(|(v, _)| v.root_coeff(beta).is_zero());
    let all_rows: Vec<u8> = schemas()
        .into_iter()
        .filter(|sc| {
            sc.slots.len() == pivots.len()
                && sc.slots.iter().zip(&pivots).all(|(slot, &p)| slot.accepts(p))
                && (!sc.alpha_pure || alpha_pure)
        })
        .map(|sc| sc.row)
        .collect();
    let Some(&row) = all_rows.first() else {
        let names: Vec<String> = pivots.iter().map(|r| r.to_string()).collect();
        panic!("subalgebra of 𝔫 with pivots {} matches no schema", names.join(" "));
    };
    Ok(SchemaSignature {
        leading_roots: pivots.iter().map(|r| r.to_string()).collect(),
        row,
        all_rows,
    })
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma5Branch {
    /// `S ⊆ 𝔫`.
    InsideN,
    /// `S = C x ⊕ (S ∩ 𝔫)` with `x ∈ h`.
    CartanGenerator(AlgElement),
    /// `S = C (x + λ X_γ) ⊕ (S ∩ 𝔫)` with `x ∈ h`, `γ(x) = 0`, `λ ≠ 0`.
    SemisimplePlusRoot {
        x: AlgElement,
        gamma: Root,
        lambda: FieldElement,
    },
    /// None of the three shapes (reported, not an error).
    Finding(String),
}

impl Lemma5Branch {
    pub fn name(&self) -> &'static str {
        match self {
            Lemma5Branch::InsideN => "INSIDE_N",
            Lemma5Branch::CartanGenerator(_) => "CARTAN_GENERATOR",
            Lemma5Branch::SemisimplePlusRoot { .. } => "SEMISIMPLE_PLUS_ROOT",
            Lemma5Branch::Finding(_) => "FINDING",
        }
    }
}

impl fmt::Display for Lemma5Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lemma5Branch::InsideN => write!(f, "INSIDE_N"),
            Lemma5Branch::CartanGenerator(x) => write!(f, "CARTAN_GENERATOR x={x}"),
            Lemma5Branch::SemisimplePlusRoot { x, gamma, lambda } => {
                write!(f, "SEMISIMPLE_PLUS_ROOT x={x} gamma={gamma} lambda={lambda}")
            }
            Lemma5Branch::Finding(s) => write!(f, "FINDING {s}"),
        }
    }
}

/// Which syntactic shape the given subalgebra of `𝔟` has.
pub fn lemma5_branch(s: &Subspace) -> Result<Lemma5Branch> {
    if !borel().contains_space(s) {
        return Err(G2Error::NotInBorel);
    }
    if !is_subalgebra(s) {
        return Err(G2Error::NotSubalgebra);
    }
    let k = s.intersection(&positive_nilradical());
    match s.dim() - k.dim() {
        0 => return Ok(Lemma5Branch::InsideN),
        1 => {}
        c => return Ok(Lemma5Branch::Finding(format!("S ∩ 𝔫 has codimension {c}"))),
    }
    let sh = s.intersection(&Subspace::cartan());
    if let Some(x) = sh.basis().first() {
        return Ok(Lemma5Branch::CartanGenerator(x.clone()));
    }
    let f0 = s
        .basis()
        .iter()
        .find(|b| !b.in_cartan() && !k.contains(b))
        .expect("codimension one leaves a vector outside 𝔫")
        .clone();
    let x = f0.cartan_part();
    let r0 = k.reduce(&f0.root_part());
    for gamma in ROOTS.into_iter().filter(|r| r.is_positive()) {
        if !x.root_value(gamma).is_zero() {
            continue;
        }
        let rg = k.reduce(&AlgElement::x(gamma));
        let i = root_coeff_index(&rg);
        let Some(i) = i else { continue };
        let lambda = (r0.coord(i) / rg.coord(i)).expect("nonzero pivot");
        if !lambda.is_zero() && r0 == rg.scale(&lambda) {
            return Ok(Lemma5Branch::SemisimplePlusRoot { x, gamma, lambda });
        }
    }
    Ok(Lemma5Branch::Finding(format!(
        "generator {f0} is not of the form x + λX_γ with γ(x) = 0"
    )))
}

fn root_coeff_index(x: &AlgElement) -> Option<usize> {
    (0..DIM).find(|&i| !x.coord(i).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ad, exp_ad};
    use crate::parse::{parse_element, parse_element_list};
    use crate::subspace::span;

    fn sp(s: &str) -> Subspace {
        span(&parse_element_list(s).unwrap())
    }

    fn el(s: &str) -> AlgElement {
        parse_element(s).unwrap()
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(classify_nilpotent(&el("X[0,1]")).unwrap(), OrbitLabel::A1);
        assert_eq!(classify_nilpotent(&el("X[1,0]")).unwrap(), OrbitLabel::A1Tilde);
        assert_eq!(classify_nilpotent(&el("X[1,0]+X[3,2]")).unwrap(), OrbitLabel::A1_4);
        assert_eq!(classify_nilpotent(&el("X[1,0]+X[0,1]")).unwrap(), OrbitLabel::A1_28);
        assert_eq!(classify_nilpotent(&AlgElement::zero()).unwrap(), OrbitLabel::Zero);
        assert_eq!(classify_nilpotent(&el("H[1,0]")), Err(G2Error::NotNilpotent));
    }

    #[test]
    fn schema_examples() {
        assert_eq!(match_table10_schema(&positive_nilradical()).unwrap().row, 5);
        assert_eq!(match_table10_schema(&sp("X[3,1]")).unwrap().row, 6);
        assert_eq!(match_table10_schema(&sp("X[1,1]+X[3,1]; X[3,2]")).unwrap().row, 12);
        assert_eq!(match_table10_schema(&Subspace::zero()).unwrap().row, 1);
        assert_eq!(match_table10_schema(&sp("X[1,0]; X[3,1]")).unwrap().row, 13);
        assert_eq!(match_table10_schema(&sp("X[1,0]+X[0,1]; X[3,2]")).unwrap().row, 14);
        assert_eq!(match_table10_schema(&sp("X[0,1]+X[3,1]; X[2,1]")).unwrap().row, 16);
        assert_eq!(match_table10_schema(&sp("X[2,1]; X[3,1]+X[3,2]")).unwrap().row, 10);
        assert!(matches!(match_table10_schema(&sp("X[-1,0]")), Err(G2Error::NotInNilradical)));
    }

    #[test]
    fn lemma5_examples() {
        let b = lemma5_branch(&sp("H[3,2]+X[1,0]")).unwrap();
        match b {
            Lemma5Branch::SemisimplePlusRoot { x, gamma, .. } => {
                assert_eq!(gamma, Root::of(1, 0));
                assert!(x.root_value(gamma).is_zero());
            }
            other => panic!("unexpected {other}"),
        }
        assert_eq!(lemma5_branch(&sp("H[3,1]; X[1,0]+X[3,2]")).unwrap().name(), "CARTAN_GENERATOR");
        assert_eq!(lemma5_branch(&positive_nilradical()).unwrap(), Lemma5Branch::InsideN);
        assert_eq!(lemma5_branch(&sp("X[-1,0]")), Err(G2Error::NotInBorel));
    }

    #[test]
    fn ad_cubed_identities() {
        let samples = [(1, 2, 3, 4), (2, -1, 0, 5), (-3, 1, 7, 1), (1, 1, 1, 1), (5, 0, -2, 3), (0, 4, 1, -1)];
        for (a, b, c, d) in samples {
            let fe = FieldElement::from_int;
            let x = AlgElement::xr(2, 1).scale(&fe(a))
                + AlgElement::xr(1, 1).scale(&fe(b))
                + AlgElement::xr(3, 2).scale(&fe(c))
                + AlgElement::xr(0, 1).scale(&fe(d));
            let a3 = ad(&x).pow(3);
            let apply = |v: AlgElement| AlgElement::from_coords(a3.mul_vec(v.coords()));
            assert_eq!(apply(AlgElement::xr(-3, -1)), AlgElement::xr(3, 2).scale(&fe(-6 * a * a * a)));
            assert_eq!(
                apply(AlgElement::xr(0, -1)),
                AlgElement::xr(3, 2).scale(&fe(9 * a * b * d - 6 * b * b * b))
            );
        }
    }

    #[test]
    fn labels_are_conjugation_invariant() {
        let x = el("X[1,0]+X[0,1]");
        let g = exp_ad(&FieldElement::from_frac(1, 2), &el("X[-1,0]")).unwrap();
        assert_eq!(classify_nilpotent(&g.apply(&x)).unwrap(), OrbitLabel::A1_28);
    }
}
