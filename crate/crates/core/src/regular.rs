//! Regular subalgebras `g(Σ, L) = L ⊕ ⊕_{γ∈Σ} C X_γ`: enumeration of closed
//! root subsets, construction, radical/Levi splitting and classification
//! up to the Weyl group.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{killing_form, root_coroot, AlgElement};
use crate::error::{G2Error, Result};
use crate::linalg::Matrix;
use crate::roots::{canonical_subset, is_closed, weyl_group, ClosedSubset, RootSet, POSITIVE_ROOTS};
use crate::scalar::FieldElement;
use crate::subspace::{span, Subspace};

/// How the Cartan part `L` is chosen relative to `L_min = span{H_γ : γ ∈ Σ_s}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LType {
    /// `L = 0` (only when `L_min = 0`).
    Zero,
    /// Any line in `h` (only when `L_min = 0`); one type for the whole family.
    LineFamily,
    /// `L = L_min`, with `L_min` a line.
    Fixed,
    /// `L = h`.
    FullH,
}

impl fmt::Display for LType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LType::Zero => "ZERO",
            LType::LineFamily => "LINE_FAMILY",
            LType::Fixed => "FIXED",
            LType::FullH => "FULL_H",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RegularSpec {
    pub sigma: ClosedSubset,
    pub l_type: LType,
}

/// `span{H_γ : γ ∈ Σ_s}`.
pub fn minimal_cartan(sigma: ClosedSubset) -> Subspace {
    span(&sigma.symmetric_part().roots().map(root_coroot).collect::<Vec<_>>())
}

/// The admissible Cartan types for `Σ`.
pub fn admissible_l_types(sigma: ClosedSubset) -> Vec<LType> {
    match minimal_cartan(sigma).dim() {
        0 => vec![LType::Zero, LType::LineFamily, LType::FullH],
        1 => vec![LType::Fixed, LType::FullH],
        _ => vec![LType::FullH],
    }
}

/// A representative `L` for the type; line families use the line through
/// `H_α + 2H_β`, which lies on no root hyperplane.
pub fn sample_l(spec: &RegularSpec) -> Subspace {
    match spec.l_type {
        LType::Zero => Subspace::zero(),
        LType::LineFamily => span(&[AlgElement::cartan(FieldElement::one(), FieldElement::from_int(2))]),
        LType::Fixed => minimal_cartan(spec.sigma),
        LType::FullH => Subspace::cartan(),
    }
}

fn check_admissible(spec: &RegularSpec, l: &Subspace) -> Result<()> {
    let lmin = minimal_cartan(spec.sigma);
    let h = Subspace::cartan();
    if !h.contains_space(l) {
        return Err(G2Error::InadmissibleCartan("L is not inside h".into()));
    }
    if !l.contains_space(&lmin) {
        return Err(G2Error::InadmissibleCartan("L does not contain the coroots of Σ_s".into()));
    }
    if !admissible_l_types(spec.sigma).contains(&spec.l_type) {
        return Err(G2Error::InadmissibleCartan(format!(
            "type {} not available for this Σ",
            spec.l_type
        )));
    }
    let ok = match spec.l_type {
        LType::Zero => l.is_zero(),
        LType::LineFamily => l.dim() == 1,
        LType::Fixed => *l == lmin,
        LType::FullH => l.dim() == 2,
    };
    if ok {
        Ok(())
    } else {
        Err(G2Error::InadmissibleCartan(format!("L does not have type {}", spec.l_type)))
    }
}

fn root_space_span(set: RootSet) -> Vec<AlgElement> {
    set.roots().map(AlgElement::x).collect()
}

/// `g(Σ, L)`.
pub fn build_regular(spec: &RegularSpec, l: &Subspace) -> Result<Subspace> {
    check_admissible(spec, l)?;
    let mut gens = l.basis().to_vec();
    gens.extend(root_space_span(spec.sigma.set()));
    Ok(span(&gens))
}

/// Killing-orthogonal complement of `inner` inside `outer` (both in `h`).
pub fn killing_complement(inner: &Subspace, outer: &Subspace) -> Subspace {
    if inner.is_zero() {
        return outer.clone();
    }
    let rows: Vec<Vec<FieldElement>> = inner
        .basis()
        .iter()
        .map(|u| outer.basis().iter().map(|v| killing_form(u, v)).collect())
        .collect();
    let m = Matrix::from_rows(rows);
    let gens: Vec<AlgElement> = m
        .kernel()
        .iter()
        .map(|k| crate::subspace::combine(outer.basis(), k))
        .collect();
    span(&gens)
}

/// `(radical, Levi)` with radical `= L̃ ⊕ ⊕_{γ∈Σ∖Σ_s} C X_γ` where `L̃` is
/// the Killing complement of `L_min` in `L`, and Levi
/// `= span{H_γ, X_γ : γ ∈ Σ_s}`.
pub fn radical_and_levi(spec: &RegularSpec, l: &Subspace) -> Result<(Subspace, Subspace)> {
    check_admissible(spec, l)?;
    let sym = spec.sigma.symmetric_part();
    let lmin = minimal_cartan(spec.sigma);
    let ltilde = killing_complement(&lmin, l);
    let mut rad = ltilde.basis().to_vec();
    rad.extend(root_space_span(spec.sigma.set().minus(sym)));
    let mut levi = lmin.basis().to_vec();
    levi.extend(root_space_span(sym));
    Ok((span(&rad), span(&levi)))
}

/// Every closed subset of the twelve roots.
pub fn enumerate_closed_subsets() -> Vec<ClosedSubset> {
    (0u16..4096)
        .filter_map(|m| ClosedSubset::new(RootSet(m)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularClass {
    pub dimension: usize,
    pub sigma_mask: u16,
    pub sigma: String,
    pub l_type: LType,
    pub is_family: bool,
    pub radical_dim: usize,
    pub levi_dim: usize,
}

impl RegularClass {
    pub fn spec(&self) -> RegularSpec {
        RegularSpec {
            sigma: ClosedSubset::new(RootSet(self.sigma_mask)).expect("classes hold closed sets"),
            l_type: self.l_type,
        }
    }
}

/// Canonical key of a spec: the least Weyl image of Σ (the Cartan type is
/// Weyl-invariant because `L_min` is transported along with Σ).
pub fn canonical_spec(spec: &RegularSpec) -> RegularSpec {
    RegularSpec {
        sigma: ClosedSubset::new(canonical_subset(spec.sigma.set())).expect("closedness is Weyl-invariant"),
        l_type: spec.l_type,
    }
}

fn l_dim(spec: &RegularSpec) -> usize {
    match spec.l_type {
        LType::Zero => 0,
        LType::LineFamily | LType::Fixed => 1,
        LType::FullH => 2,
    }
}

/// All classes `(Σ, L)` up to the Weyl group, sorted by dimension then key.
/// Includes the zero subalgebra and G2 itself.
pub fn classify_regular_types() -> Vec<RegularClass> {
    let mut keys = BTreeMap::new();
    for sigma in enumerate_closed_subsets() {
        for l_type in admissible_l_types(sigma) {
            let c = canonical_spec(&RegularSpec { sigma, l_type });
            keys.entry(c).or_insert(());
        }
    }
    let mut out: Vec<RegularClass> = keys
        .into_keys()
        .map(|spec| {
            let l = sample_l(&spec);
            let (rad, levi) = radical_and_levi(&spec, &l).expect("canonical specs are admissible");
            RegularClass {
                dimension: spec.sigma.set().len() + l_dim(&spec),
                sigma_mask: spec.sigma.set().0,
                sigma: spec.sigma.set().to_string(),
                l_type: spec.l_type,
                is_family: spec.l_type == LType::LineFamily,
                radical_dim: rad.dim(),
                levi_dim: levi.dim(),
            }
        })
        .collect();
    out.sort_by_key(|c| (c.dimension, c.sigma_mask, c.l_type));
    out
}

/// Number of classes in each dimension 0..=14.
pub fn counts_by_dimension(classes: &[RegularClass]) -> [usize; 15] {
    let mut out = [0; 15];
    for c in classes {
        out[c.dimension] += 1;
    }
    out
}

/// True iff some Weyl element maps `Σ ∖ Σ_s` into the positive roots.
pub fn nonsymmetric_part_positivizable(sigma: ClosedSubset) -> bool {
    let rest = sigma.set().minus(sigma.symmetric_part());
    weyl_group()
        .iter()
        .any(|w| w.apply_set(rest).is_subset_of(POSITIVE_ROOTS))
}

/// Convenience: a closed subset from roots, panicking if not closed.
pub fn closed(roots: &[crate::roots::Root]) -> ClosedSubset {
    let set = RootSet::from_roots(roots);
    assert!(is_closed(set), "{set} is not closed");
    ClosedSubset::new(set).expect("checked")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_element_list;
    use crate::roots::{inner_product, Root, ALL_ROOTS, ROOTS};
    use crate::subspace::{derived_series, is_subalgebra};

    fn sp(s: &str) -> Subspace {
        span(&parse_element_list(s).unwrap())
    }

    /// Independent closedness oracle: explicit sums over ordered pairs
    /// including `x = y`, using raw coordinates.
    fn naive_closed(mask: u16) -> bool {
        let members: Vec<(i64, i64)> = (0..12)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| (ROOTS[i].a(), ROOTS[i].b()))
            .collect();
        for &(a, b) in &members {
            for &(c, d) in &members {
                let s = (a + c, b + d);
                let is_root = ROOTS.iter().any(|r| (r.a(), r.b()) == s);
                if is_root && !members.contains(&s) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn closed_subset_census() {
        let all = enumerate_closed_subsets();
        let naive = (0u16..4096).filter(|&m| naive_closed(m)).count();
        assert_eq!(all.len(), naive);
        assert!(all.iter().any(|s| s.set().is_empty()));
        assert!(all.iter().any(|s| s.set() == ALL_ROOTS));
    }

    #[test]
    fn build_examples() {
        let s = closed(&[Root::of(0, 1), Root::of(3, 1), Root::of(3, 2)]);
        let spec = RegularSpec { sigma: s, l_type: LType::Zero };
        let g = build_regular(&spec, &Subspace::zero()).unwrap();
        assert_eq!(g, sp("X[0,1]; X[3,1]; X[3,2]"));

        let a1 = closed(&[Root::of(2, 1), Root::of(-2, -1)]);
        let spec = RegularSpec { sigma: a1, l_type: LType::Fixed };
        let g = build_regular(&spec, &sp("H[2,1]")).unwrap();
        assert_eq!(g, sp("H[2,1]; X[-2,-1]; X[2,1]"));

        let empty = closed(&[]);
        let spec = RegularSpec { sigma: empty, l_type: LType::FullH };
        assert_eq!(build_regular(&spec, &Subspace::cartan()).unwrap(), Subspace::cartan());

        let bad = RegularSpec { sigma: a1, l_type: LType::Fixed };
        assert!(build_regular(&bad, &sp("H[1,0]")).is_err());
    }

    #[test]
    fn radical_levi_examples() {
        // Parabolic with Levi Ã_1 = ⟨H_α, X_{±α}⟩.
        let mut roots: Vec<Root> = ROOTS.iter().copied().filter(|r| r.is_positive()).collect();
        roots.push(Root::of(-1, 0));
        let spec = RegularSpec { sigma: closed(&roots), l_type: LType::FullH };
        let (rad, levi) = radical_and_levi(&spec, &Subspace::cartan()).unwrap();
        assert_eq!(levi, sp("H[1,0]; X[-1,0]; X[1,0]"));
        assert_eq!(rad.dim(), 6);

        let spec = RegularSpec { sigma: closed(&ROOTS), l_type: LType::FullH };
        let (rad, levi) = radical_and_levi(&spec, &Subspace::cartan()).unwrap();
        assert!(rad.is_zero());
        assert_eq!(levi, Subspace::full());

        let spec = RegularSpec { sigma: closed(&[Root::of(1, 0)]), l_type: LType::FullH };
        let (rad, levi) = radical_and_levi(&spec, &Subspace::cartan()).unwrap();
        assert_eq!(rad, build_regular(&spec, &Subspace::cartan()).unwrap());
        assert!(levi.is_zero());
    }

    #[test]
    fn killing_form_is_proportional_to_metric_on_h() {
        // T(aα + bβ) = (a/2) H_α + (3b/2) H_β sends the metric to a multiple of κ.
        let t = |a: i64, b: i64| AlgElement::cartan(FieldElement::from_frac(a, 2), FieldElement::from_frac(3 * b, 2));
        for (u, v) in [((1, 0), (1, 0)), ((1, 0), (0, 1)), ((0, 1), (0, 1)), ((3, 2), (1, 1))] {
            let k = killing_form(&t(u.0, u.1), &t(v.0, v.1));
            let m = inner_product(&crate::roots::RootVector::ints(u.0, u.1), &crate::roots::RootVector::ints(v.0, v.1));
            assert_eq!(k, FieldElement::from(m * crate::scalar::int(12)));
        }
    }

    #[test]
    fn every_spec_builds_a_subalgebra_with_solvable_radical() {
        for sigma in enumerate_closed_subsets() {
            for l_type in admissible_l_types(sigma) {
                let spec = RegularSpec { sigma, l_type };
                let l = sample_l(&spec);
                let g = build_regular(&spec, &l).unwrap();
                assert!(is_subalgebra(&g), "{}", sigma.set());
                let (rad, levi) = radical_and_levi(&spec, &l).unwrap();
                assert_eq!(rad.sum(&levi), g);
                assert!(rad.intersection(&levi).is_zero());
                assert!(derived_series(&rad).unwrap().last().unwrap().is_zero());
                assert!(is_subalgebra(&levi));
            }
            assert!(nonsymmetric_part_positivizable(sigma));
        }
    }

    #[test]
    fn canonicalization_is_weyl_invariant() {
        for sigma in enumerate_closed_subsets() {
            let spec = RegularSpec { sigma, l_type: admissible_l_types(sigma)[0] };
            let c = canonical_spec(&spec);
            assert_eq!(canonical_spec(&c), c);
            for w in weyl_group() {
                let moved = RegularSpec {
                    sigma: ClosedSubset::new(w.apply_set(sigma.set())).unwrap(),
                    l_type: spec.l_type,
                };
                assert_eq!(canonical_spec(&moved), c);
            }
        }
    }

    #[test]
    fn census_matches_dimension_lists() {
        let classes = classify_regular_types();
        let counts = counts_by_dimension(&classes);
        assert_eq!(&counts[1..=9], &[3, 6, 11, 13, 11, 8, 4, 4, 2]);
        assert_eq!(counts[0], 1);
        assert_eq!(counts[14], 1);
        assert_eq!(classes.len(), 64);
    }
}
