//! The 14-dimensional Lie algebra G2 in the Chevalley basis
//! `(H_α, H_β, X_γ for γ in root order)`: brackets, adjoint matrices, the
//! Killing form, element classification and exp(ad) automorphisms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use crate::error::{G2Error, Result};
use crate::linalg::Matrix;
use crate::roots::{coroot_coords, Root, RootVector, ALPHA, BETA, ROOTS};
use crate::scalar::{rat, FieldElement, Rational};

pub const DIM: usize = 14;

/// Basis index of `X_γ`.
pub fn root_index(r: Root) -> usize {
    2 + r.index()
}

/// The root of basis index `i >= 2`.
pub fn basis_root(i: usize) -> Option<Root> {
    (2..DIM).contains(&i).then(|| Root::from_index(i - 2))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgElement {
    c: Vec<FieldElement>,
}

impl AlgElement {
    pub fn zero() -> Self {
        Self {
            c: vec![FieldElement::zero(); DIM],
        }
    }

    pub fn basis(i: usize) -> Self {
        let mut e = Self::zero();
        e.c[i] = FieldElement::one();
        e
    }

    pub fn x(r: Root) -> Self {
        Self::basis(root_index(r))
    }

    /// `X_{[a,b]}`; panics if `(a, b)` is not a root.
    pub fn xr(a: i64, b: i64) -> Self {
        Self::x(Root::of(a, b))
    }

    pub fn h_alpha() -> Self {
        Self::basis(0)
    }

    pub fn h_beta() -> Self {
        Self::basis(1)
    }

    /// `a·H_α + b·H_β`.
    pub fn cartan(a: FieldElement, b: FieldElement) -> Self {
        let mut e = Self::zero();
        e.c[0] = a;
        e.c[1] = b;
        e
    }

    pub fn from_coords(c: Vec<FieldElement>) -> Self {
        assert_eq!(c.len(), DIM, "an element has 14 coordinates");
        Self { c }
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.c
    }

    pub fn coord(&self, i: usize) -> &FieldElement {
        &self.c[i]
    }

    pub fn root_coeff(&self, r: Root) -> &FieldElement {
        &self.c[root_index(r)]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(FieldElement::is_zero)
    }

    pub fn scale(&self, k: &FieldElement) -> Self {
        Self {
            c: self.c.iter().map(|x| if x.is_zero() { x.clone() } else { x * k }).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&FieldElement::from_int(k))
    }

    /// True if the element lies in the Cartan subalgebra.
    pub fn in_cartan(&self) -> bool {
        self.c[2..].iter().all(FieldElement::is_zero)
    }

    /// The element with its Cartan part removed.
    pub fn root_part(&self) -> Self {
        let mut e = self.clone();
        e.c[0] = FieldElement::zero();
        e.c[1] = FieldElement::zero();
        e
    }

    pub fn cartan_part(&self) -> Self {
        Self::cartan(self.c[0].clone(), self.c[1].clone())
    }

    /// For `x = a H_α + b H_β`, the value `γ(x)`, i.e. the eigenvalue of
    /// `ad x` on `X_γ`.
    pub fn root_value(&self, gamma: Root) -> FieldElement {
        let a = FieldElement::from_int(ALPHA.cartan_integer(gamma));
        let b = FieldElement::from_int(BETA.cartan_integer(gamma));
        &(&self.c[0] * &a) + &(&self.c[1] * &b)
    }
}

/// `H_v` for an arbitrary nonzero vector `v = aα + bβ`.
pub fn coroot(v: &RootVector) -> Result<AlgElement> {
    let (a, b) = coroot_coords(v)?;
    Ok(AlgElement::cartan(a.into(), b.into()))
}

/// `H_γ` for a root.
pub fn root_coroot(r: Root) -> AlgElement {
    let (a, b) = r.coroot_coords();
    AlgElement::cartan(a.into(), b.into())
}

impl Add for &AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: &AlgElement) -> AlgElement {
        AlgElement {
            c: self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Add for AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: AlgElement) -> AlgElement {
        &self + &rhs
    }
}

impl Sub for &AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: &AlgElement) -> AlgElement {
        AlgElement {
            c: self.c.iter().zip(&rhs.c).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Sub for AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: AlgElement) -> AlgElement {
        &self - &rhs
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        AlgElement {
            c: self.c.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        -&self
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::format_element(self))
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::format_element(self))
    }
}

/// The fifteen listed structure constants `N_{μ,ν}`.
pub fn base_constants() -> Vec<(Root, Root, i64)> {
    let r = Root::of;
    vec![
        (r(0, 1), r(1, 0), 1),
        (r(0, 1), r(3, 1), 1),
        (r(3, 1), r(-3, -2), 1),
        (r(2, 1), r(-3, -1), 1),
        (r(2, 1), r(-3, -2), 1),
        (r(-3, -2), r(1, 1), 1),
        (r(-3, -2), r(0, 1), 1),
        (r(-3, -1), r(1, 0), 1),
        (r(-1, -1), r(0, 1), 1),
        (r(1, 1), r(1, 0), 2),
        (r(1, 0), r(-2, -1), 2),
        (r(-2, -1), r(1, 1), 2),
        (r(1, 0), r(2, 1), 3),
        (r(1, 0), r(-1, -1), 3),
        (r(1, 1), r(2, 1), 3),
    ]
}

/// `N_{μ,ν}` keyed by the ordered root pair.
pub type ConstantTable = BTreeMap<(Root, Root), i64>;

/// A list of structure constants, closed under `N_{μ,ν} = −N_{ν,μ} = −N_{−μ,−ν}`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    base: Vec<(Root, Root, i64)>,
}

/// Result of checking a constant table against the set of ordered root
/// pairs whose sum is a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantsCheck {
    pub covered: usize,
    pub uncovered: Vec<(Root, Root)>,
    pub conflicts: Vec<(Root, Root)>,
    pub not_root_sums: Vec<(Root, Root)>,
}

impl ConstantsCheck {
    pub fn is_complete(&self) -> bool {
        self.uncovered.is_empty() && self.conflicts.is_empty() && self.not_root_sums.is_empty()
    }
}

impl StructureConstants {
    pub fn standard() -> Self {
        Self {
            base: base_constants(),
        }
    }

    pub fn from_base(base: Vec<(Root, Root, i64)>) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &[(Root, Root, i64)] {
        &self.base
    }

    /// The symmetry closure, and every ordered pair assigned two different values.
    pub fn closure(&self) -> (ConstantTable, Vec<(Root, Root)>) {
        let mut table = BTreeMap::new();
        let mut conflicts = Vec::new();
        for &(m, n, v) in &self.base {
            for (key, val) in [
                ((m, n), v),
                ((n, m), -v),
                ((m.neg(), n.neg()), -v),
                ((n.neg(), m.neg()), v),
            ] {
                match table.get(&key) {
                    Some(&old) if old != val => {
                        if !conflicts.contains(&key) {
                            conflicts.push(key);
                        }
                    }
                    _ => {
                        table.insert(key, val);
                    }
                }
            }
        }
        (table, conflicts)
    }

    pub fn check(&self) -> ConstantsCheck {
        let (table, conflicts) = self.closure();
        let mut uncovered = Vec::new();
        let mut covered = 0;
        for m in ROOTS {
            for n in ROOTS {
                if m.checked_add(n).is_some() {
                    if table.contains_key(&(m, n)) {
                        covered += 1;
                    } else {
                        uncovered.push((m, n));
                    }
                }
            }
        }
        let not_root_sums = table
            .keys()
            .filter(|(m, n)| m.checked_add(*n).is_none())
            .copied()
            .collect();
        ConstantsCheck {
            covered,
            uncovered,
            conflicts,
            not_root_sums,
        }
    }
}

/// `[X_μ, X_ν] = N_{μ,ν} X_{μ+ν}`.
pub fn structure_constant(m: Root, n: Root) -> Option<i64> {
    static TABLE: OnceLock<BTreeMap<(Root, Root), i64>> = OnceLock::new();
    TABLE
        .get_or_init(|| {
            let (t, conflicts) = StructureConstants::standard().closure();
            assert!(conflicts.is_empty(), "structure constants conflict");
            t
        })
        .get(&(m, n))
        .copied()
}

/// `[e_i][e_j]` lists the nonzero `(k, c_k)`.
type BasisTable = Vec<Vec<Vec<(usize, i64)>>>;

/// Sparse integer brackets of basis vectors: `[e_i, e_j] = Σ c_k e_k`.
fn basis_table() -> &'static BasisTable {
    static TABLE: OnceLock<BasisTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![vec![Vec::new(); DIM]; DIM];
        let simple = [ALPHA, BETA];
        for (i, s) in simple.iter().enumerate() {
            for r in ROOTS {
                let k = s.cartan_integer(r);
                if k != 0 {
                    t[i][root_index(r)].push((root_index(r), k));
                    t[root_index(r)][i].push((root_index(r), -k));
                }
            }
        }
        for m in ROOTS {
            for n in ROOTS {
                let entry = &mut t[root_index(m)][root_index(n)];
                if m == n.neg() {
                    let (a, b) = m.coroot_coords();
                    for (slot, v) in [(0, a), (1, b)] {
                        if v != 0 {
                            entry.push((slot, v));
                        }
                    }
                } else if let Some(s) = m.checked_add(n) {
                    let c = structure_constant(m, n).expect("complete table");
                    entry.push((root_index(s), c));
                }
            }
        }
        t
    })
}

/// `[e_i, e_j]` for basis vectors.
pub fn basis_bracket(i: usize, j: usize) -> AlgElement {
    let mut out = AlgElement::zero();
    for &(k, c) in &basis_table()[i][j] {
        out.c[k] = FieldElement::from_int(c);
    }
    out
}

pub fn bracket(x: &AlgElement, y: &AlgElement) -> AlgElement {
    let table = basis_table();
    let mut out = AlgElement::zero();
    for (i, a) in x.c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.c.iter().enumerate() {
            if b.is_zero() || table[i][j].is_empty() {
                continue;
            }
            let ab = a * b;
            for &(k, c) in &table[i][j] {
                out.c[k] += &(&ab * &FieldElement::from_int(c));
            }
        }
    }
    out
}

/// Matrix of `y ↦ [x, y]`; column `j` holds `[x, e_j]`.
pub fn ad(x: &AlgElement) -> Matrix {
    let cols: Vec<Vec<FieldElement>> = (0..DIM)
        .map(|j| bracket(x, &AlgElement::basis(j)).c)
        .collect();
    Matrix::from_columns(&cols, DIM)
}

pub fn ad_rank(x: &AlgElement) -> usize {
    ad(x).rank()
}

/// Gram matrix of the Killing form on the basis (integers).
pub fn killing_gram() -> &'static Vec<Vec<i64>> {
    static GRAM: OnceLock<Vec<Vec<i64>>> = OnceLock::new();
    GRAM.get_or_init(|| {
        let ads: Vec<Matrix> = (0..DIM).map(|i| ad(&AlgElement::basis(i))).collect();
        (0..DIM)
            .map(|i| {
                (0..DIM)
                    .map(|j| {
                        let t = ads[i].mul(&ads[j]).trace();
                        let q = t.as_rational().expect("integer table").clone();
                        assert!(q.is_integer());
                        i64::try_from(q.to_integer()).expect("small")
                    })
                    .collect()
            })
            .collect()
    })
}

/// `κ(x, y) = tr(ad x · ad y)`.
pub fn killing_form(x: &AlgElement, y: &AlgElement) -> FieldElement {
    let g = killing_gram();
    let mut acc = FieldElement::zero();
    for (i, a) in x.c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.c.iter().enumerate() {
            if g[i][j] != 0 && !b.is_zero() {
                acc += &(&(a * b) * &FieldElement::from_int(g[i][j]));
            }
        }
    }
    acc
}

/// True iff `ad(x)^14 = 0`.
pub fn is_nilpotent_element(x: &AlgElement) -> bool {
    let a = ad(x);
    let mut p = a.clone();
    for _ in 1..DIM {
        if p.is_zero() {
            return true;
        }
        p = p.mul(&a);
    }
    p.is_zero()
}

/// True iff the minimal polynomial of `ad(x)` is squarefree.
pub fn is_semisimple_element(x: &AlgElement) -> bool {
    ad(x).minpoly().is_squarefree()
}

/// Number of distinct eigenvalues of `ad(x)` over the algebraic closure.
pub fn count_distinct_eigenvalues(x: &AlgElement) -> usize {
    ad(x)
        .charpoly()
        .squarefree_part()
        .degree()
        .expect("characteristic polynomial is nonzero")
}

pub fn is_regular_element(x: &AlgElement) -> bool {
    count_distinct_eigenvalues(x) == 13
}

/// An invertible linear map of G2, stored as a 14×14 matrix acting on coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Automorphism {
    m: Matrix,
}

impl Automorphism {
    pub fn identity() -> Self {
        Self {
            m: Matrix::identity(DIM),
        }
    }

    pub fn from_matrix(m: Matrix) -> Self {
        assert_eq!((m.rows(), m.cols()), (DIM, DIM));
        Self { m }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn apply(&self, x: &AlgElement) -> AlgElement {
        AlgElement::from_coords(self.m.mul_vec(&x.c))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Self {
        Self {
            m: self.m.mul(&other.m),
        }
    }

    /// `M[e_i, e_j] = [M e_i, M e_j]` for all basis pairs.
    pub fn preserves_brackets(&self) -> bool {
        let images: Vec<AlgElement> = (0..DIM).map(|i| self.apply(&AlgElement::basis(i))).collect();
        (0..DIM).all(|i| {
            (0..DIM).all(|j| {
                self.apply(&basis_bracket(i, j)) == bracket(&images[i], &images[j])
            })
        })
    }
}

fn factorial(k: u32) -> Rational {
    (1..=k as i64).fold(rat(1, 1), |acc, i| acc * rat(i, 1))
}

/// `exp(c · ad n) = Σ_k (c · ad n)^k / k!` for nilpotent `n`.
pub fn exp_ad(c: &FieldElement, n: &AlgElement) -> Result<Automorphism> {
    if !is_nilpotent_element(n) {
        return Err(G2Error::NotNilpotent);
    }
    let a = ad(n).scale(c);
    let mut acc = Matrix::identity(DIM);
    let mut term = Matrix::identity(DIM);
    for k in 1..DIM as u32 {
        term = term.mul(&a);
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term.scale(&FieldElement::from_rational(factorial(k).recip())));
    }
    Ok(Automorphism { m: acc })
}

/// `θ_γ = exp(ad X_γ) ∘ exp(−ad X_{−γ}) ∘ exp(ad X_γ)`, lifting the reflection `s_γ`.
pub fn weyl_as_automorphism(gamma: Root) -> Automorphism {
    let one = FieldElement::one();
    let e = exp_ad(&one, &AlgElement::x(gamma)).expect("root vectors are nilpotent");
    let f = exp_ad(&-&one, &AlgElement::x(gamma.neg())).expect("root vectors are nilpotent");
    e.compose(&f).compose(&e)
}

/// The diagonal map fixing `h` with `X_{kα+lβ} ↦ u^k v^l X_{kα+lβ}`.
pub fn rescaling_automorphism(u: &FieldElement, v: &FieldElement) -> Result<Automorphism> {
    if u.is_zero() || v.is_zero() {
        return Err(G2Error::ZeroScale);
    }
    let uinv = u.inv()?;
    let vinv = v.inv()?;
    let power = |base: &FieldElement, inv: &FieldElement, k: i64| {
        if k >= 0 {
            base.pow(k as u32)
        } else {
            inv.pow((-k) as u32)
        }
    };
    let mut m = Matrix::identity(DIM);
    for r in ROOTS {
        let i = root_index(r);
        m[(i, i)] = &power(u, &uinv, r.a()) * &power(v, &vinv, r.b());
    }
    Ok(Automorphism { m })
}
