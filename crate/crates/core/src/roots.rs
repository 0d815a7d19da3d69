//! The G2 root system in the (α, β) coordinate basis, its metric, the fixed
//! total order of roots, closedness of root subsets and the Weyl group.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{G2Error, Result};
use crate::scalar::{int, rat, Rational};

/// The root `a·α + b·β`. Only the twelve roots of G2 are constructible.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    a: i64,
    b: i64,
}

/// All roots, in increasing order:
/// −(3α+2β) ≺ −(3α+β) ≺ −(2α+β) ≺ −(α+β) ≺ −β ≺ −α ≺ α ≺ β ≺ α+β ≺ 2α+β ≺ 3α+β ≺ 3α+2β.
pub const ROOTS: [Root; 12] = [
    Root { a: -3, b: -2 },
    Root { a: -3, b: -1 },
    Root { a: -2, b: -1 },
    Root { a: -1, b: -1 },
    Root { a: 0, b: -1 },
    Root { a: -1, b: 0 },
    Root { a: 1, b: 0 },
    Root { a: 0, b: 1 },
    Root { a: 1, b: 1 },
    Root { a: 2, b: 1 },
    Root { a: 3, b: 1 },
    Root { a: 3, b: 2 },
];

pub const ALPHA: Root = Root { a: 1, b: 0 };
pub const BETA: Root = Root { a: 0, b: 1 };

impl Root {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let r = Root { a, b };
        if ROOTS.contains(&r) {
            Ok(r)
        } else {
            Err(G2Error::NotARoot(a, b))
        }
    }

    /// Panicking constructor for literals known to be roots.
    pub fn of(a: i64, b: i64) -> Self {
        Self::new(a, b).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn a(self) -> i64 {
        self.a
    }

    pub fn b(self) -> i64 {
        self.b
    }

    /// Position in the fixed order, 0..12.
    pub fn index(self) -> usize {
        ROOTS
            .iter()
            .position(|&r| r == self)
            .expect("Root values are always roots")
    }

    pub fn from_index(i: usize) -> Self {
        ROOTS[i]
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Self {
        Root {
            a: -self.a,
            b: -self.b,
        }
    }

    pub fn is_positive(self) -> bool {
        self.index() >= 6
    }

    pub fn is_long(self) -> bool {
        self.norm2_doubled() == 6
    }

    /// `μ + ν` when it is a root.
    pub fn checked_add(self, other: Root) -> Option<Root> {
        Root::new(self.a + other.a, self.b + other.b).ok()
    }

    pub fn vector(self) -> RootVector {
        RootVector::new(int(self.a), int(self.b))
    }

    /// `2(μ, μ)`, an integer: 2 for short roots, 6 for long ones.
    fn norm2_doubled(self) -> i64 {
        doubled_inner(self.a, self.b, self.a, self.b)
    }

    /// The Cartan integer `2(self, ν)/(self, self)`: the eigenvalue of `H_self` on `X_ν`.
    pub fn cartan_integer(self, nu: Root) -> i64 {
        let num = 2 * doubled_inner(self.a, self.b, nu.a, nu.b);
        let den = self.norm2_doubled();
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Coordinates of the coroot `H_self` in the basis `(H_α, H_β)`.
    pub fn coroot_coords(self) -> (i64, i64) {
        let n = self.norm2_doubled();
        (2 * self.a / n, 6 * self.b / n)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// `2(aα+bβ, cα+dβ)` using (α,α)=1, (β,β)=3, (α,β)=−3/2.
fn doubled_inner(a: i64, b: i64, c: i64, d: i64) -> i64 {
    2 * a * c + 6 * b * d - 3 * (a * d + b * c)
}

/// An arbitrary vector `a·α + b·β` with rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootVector {
    pub a: Rational,
    pub b: Rational,
}

impl RootVector {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn ints(a: i64, b: i64) -> Self {
        Self::new(int(a), int(b))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(&self.a * c, &self.b * c)
    }
}

/// The invariant form with (α,α)=1, (β,β)=3, (α,β)=−3/2.
pub fn inner_product(u: &RootVector, v: &RootVector) -> Rational {
    let half = rat(3, 2);
    &u.a * &v.a + int(3) * &u.b * &v.b - half * (&u.a * &v.b + &u.b * &v.a)
}

/// Coordinates `(c_α, c_β)` of the Cartan element `H_v = c_α H_α + c_β H_β`
/// acting on every `X_ν` by `2(v,ν)/(v,v)`.
pub fn coroot_coords(v: &RootVector) -> Result<(Rational, Rational)> {
    if v.is_zero() {
        return Err(G2Error::ZeroVector);
    }
    let norm = inner_product(v, v);
    Ok((&v.a / &norm, int(3) * &v.b / &norm))
}

/// Strict order on roots: `x ≺ y`.
pub fn root_order_less(x: Root, y: Root) -> bool {
    x.index() < y.index()
}

/// A set of roots encoded as a 12-bit mask; bit `i` is `ROOTS[i]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct RootSet(pub u16);

pub const ALL_ROOTS: RootSet = RootSet(0x0fff);
pub const POSITIVE_ROOTS: RootSet = RootSet(0x0fc0);

impl RootSet {
    pub fn from_roots(roots: &[Root]) -> Self {
        RootSet(roots.iter().fold(0, |m, r| m | (1 << r.index())))
    }

    pub fn contains(self, r: Root) -> bool {
        self.0 & (1 << r.index()) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn roots(self) -> impl Iterator<Item = Root> {
        ROOTS.into_iter().filter(move |r| self.contains(*r))
    }

    /// Σ ∩ (−Σ).
    pub fn symmetric_part(self) -> Self {
        Self::from_roots(&self.roots().filter(|r| self.contains(r.neg())).collect::<Vec<_>>())
    }

    pub fn minus(self, other: RootSet) -> Self {
        RootSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots().map(|r| r.to_string()).collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// `(Σ + Σ) ∩ Φ ⊆ Σ`.
pub fn is_closed(set: RootSet) -> bool {
    set.roots().all(|x| {
        set.roots()
            .all(|y| x.checked_add(y).is_none_or(|s| set.contains(s)))
    })
}

/// A root subset satisfying the closedness condition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ClosedSubset(RootSet);

impl ClosedSubset {
    pub fn new(set: RootSet) -> Option<Self> {
        is_closed(set).then_some(ClosedSubset(set))
    }

    pub fn set(self) -> RootSet {
        self.0
    }

    pub fn symmetric_part(self) -> RootSet {
        self.0.symmetric_part()
    }
}

/// A Weyl group element as an integer matrix on `(a, b)` coordinates;
/// columns are the images of α and β.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeylElement {
    m: [[i64; 2]; 2],
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement {
            m: [[1, 0], [0, 1]],
        }
    }

    /// The reflection `v ↦ v − 2(v,γ)/(γ,γ) γ`.
    pub fn reflection(gamma: Root) -> Self {
        let image = |v: Root| {
            let c = gamma.cartan_integer(v);
            (v.a - c * gamma.a, v.b - c * gamma.b)
        };
        let (a1, b1) = image(ALPHA);
        let (a2, b2) = image(BETA);
        WeylElement {
            m: [[a1, a2], [b1, b2]],
        }
    }

    pub fn apply_coords(&self, a: i64, b: i64) -> (i64, i64) {
        (
            self.m[0][0] * a + self.m[0][1] * b,
            self.m[1][0] * a + self.m[1][1] * b,
        )
    }

    pub fn apply(&self, r: Root) -> Root {
        let (a, b) = self.apply_coords(r.a, r.b);
        Root::of(a, b)
    }

    pub fn apply_vector(&self, v: &RootVector) -> RootVector {
        let m = |i: usize, j: usize| int(self.m[i][j]);
        RootVector::new(
            m(0, 0) * &v.a + m(0, 1) * &v.b,
            m(1, 0) * &v.a + m(1, 1) * &v.b,
        )
    }

    pub fn apply_set(&self, s: RootSet) -> RootSet {
        RootSet::from_roots(&s.roots().map(|r| self.apply(r)).collect::<Vec<_>>())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> Self {
        let mut m = [[0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..2).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        WeylElement { m }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

/// All elements of the Weyl group, generated by the two simple reflections.
pub fn weyl_group() -> Vec<WeylElement> {
    let gens = [WeylElement::reflection(ALPHA), WeylElement::reflection(BETA)];
    let mut seen = BTreeSet::from([WeylElement::identity()]);
    let mut frontier = vec![WeylElement::identity()];
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let next = g.compose(&w);
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// The orbit of a root subset under the Weyl group.
pub fn weyl_orbit_of_subset(set: RootSet) -> BTreeSet<RootSet> {
    weyl_group().iter().map(|w| w.apply_set(set)).collect()
}

/// Lexicographically (numerically) least mask in the Weyl orbit.
pub fn canonical_subset(set: RootSet) -> RootSet {
    weyl_orbit_of_subset(set)
        .into_iter()
        .next()
        .expect("orbit is nonempty")
}

/// Whether two vectors are nonzero multiples of each other (or both zero).
pub fn proportional(u: &RootVector, v: &RootVector) -> bool {
    &u.a * &v.b == &u.b * &v.a && !(u.is_zero() ^ v.is_zero())
}

/// The positive root orthogonal to `γ` (each root has exactly one such ±pair).
pub fn perpendicular_positive(gamma: Root) -> Root {
    ROOTS
        .into_iter()
        .find(|r| r.is_positive() && doubled_inner(r.a, r.b, gamma.a, gamma.b) == 0)
        .expect("every G2 root has an orthogonal root")
}



impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_product_examples() {
        let a = ALPHA.vector();
        let b = BETA.vector();
        assert_eq!(inner_product(&a, &a), int(1));
        assert_eq!(inner_product(&a, &b), rat(-3, 2));
        let v = RootVector::ints(3, 1);
        assert_eq!(inner_product(&v, &v), int(3));
    }

    #[test]
    fn order_examples() {
        assert!(root_order_less(ALPHA.neg(), ALPHA));
        assert!(!root_order_less(BETA, ALPHA));
        assert!(root_order_less(Root::of(3, 1), Root::of(3, 2)));
    }

    #[test]
    fn coroot_examples() {
        assert_eq!(coroot_coords(&ALPHA.vector()).unwrap(), (int(1), int(0)));
        assert_eq!(coroot_coords(&RootVector::ints(1, 1)).unwrap(), (int(1), int(3)));
        let (ca, cb) = coroot_coords(&RootVector::ints(9, 5)).unwrap();
        assert_eq!((ca * int(14), cb * int(14)), (int(6), int(10)));
        assert_eq!(coroot_coords(&RootVector::ints(0, 0)), Err(G2Error::ZeroVector));
    }

    #[test]
    fn integer_coroots_agree_with_rational_ones() {
        for r in ROOTS {
            let (a, b) = r.coroot_coords();
            assert_eq!(coroot_coords(&r.vector()).unwrap(), (int(a), int(b)));
        }
    }

    #[test]
    fn closedness_examples() {
        assert!(is_closed(POSITIVE_ROOTS));
        assert!(!is_closed(RootSet::from_roots(&[ALPHA, BETA])));
        assert!(is_closed(RootSet::from_roots(&[
            BETA,
            Root::of(3, 1),
            Root::of(3, 2)
        ])));
    }

    #[test]
    fn weyl_group_examples() {
        let w = weyl_group();
        assert_eq!(w.len(), 12);
        assert!(w.contains(&WeylElement::identity()));
        assert_eq!(WeylElement::reflection(ALPHA).apply(BETA), Root::of(3, 1));
        for x in &w {
            for y in &w {
                assert!(w.contains(&x.compose(y)));
            }
        }
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(weyl_orbit_of_subset(RootSet(0)).len(), 1);
        let long = RootSet::from_roots(&ROOTS.iter().copied().filter(|r| r.is_long()).collect::<Vec<_>>());
        assert_eq!(weyl_orbit_of_subset(long).len(), 1);
        assert_eq!(weyl_orbit_of_subset(RootSet::from_roots(&[ALPHA])).len(), 6);
    }

    #[test]
    fn weyl_preserves_metric() {
        for w in weyl_group() {
            for x in ROOTS {
                for y in ROOTS {
                    let lhs = inner_product(&w.apply(x).vector(), &w.apply(y).vector());
                    assert_eq!(lhs, inner_product(&x.vector(), &y.vector()));
                }
            }
        }
    }

    #[test]
    fn closedness_is_weyl_invariant() {
        let group = weyl_group();
        for mask in 0u16..4096 {
            let s = RootSet(mask);
            let c = is_closed(s);
            for w in &group {
                assert_eq!(is_closed(w.apply_set(s)), c, "mask {mask:#x}");
            }
        }
    }

    #[test]
    fn roots_split_into_two_orbits() {
        let mut orbits = BTreeSet::new();
        for r in ROOTS {
            let orbit: BTreeSet<Root> = weyl_group().iter().map(|w| w.apply(r)).collect();
            assert_eq!(orbit.len(), 6);
            orbits.insert(orbit.into_iter().map(|r| r.index()).collect::<Vec<_>>());
        }
        assert_eq!(orbits.len(), 2);
    }

    #[test]
    fn perpendicular_roots() {
        assert_eq!(perpendicular_positive(ALPHA), Root::of(3, 2));
        assert_eq!(perpendicular_positive(BETA), Root::of(2, 1));
        assert_eq!(perpendicular_positive(Root::of(1, 1)), Root::of(3, 1));
    }
}
