//! Dense exact linear algebra over `FieldElement`: matrices, reduced row
//! echelon form, kernels, and univariate polynomials for characteristic and
//! minimal polynomials.

use std::fmt;

use crate::scalar::FieldElement;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![FieldElement::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = FieldElement::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<FieldElement>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let mut out = vec![FieldElement::zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    *o += &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            if !a.is_zero() {
                *a = &*a * c;
            }
        }
        out
    }

    pub fn trace(&self) -> FieldElement {
        let mut t = FieldElement::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] = &m[(r, j)] * &inv;
                }
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        if !m[(r, j)].is_zero() {
                            let d = &f * &m[(r, j)];
                            m[(i, j)] -= &d;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// A basis of `{v : self · v = 0}`, one vector per free column, each with
    /// a 1 in its free column.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![FieldElement::zero(); self.cols];
                v[f] = FieldElement::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(i, f)];
                }
                v
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Characteristic polynomial `det(t·I − A)`, via reduction to upper
    /// Hessenberg form by elementary similarity transforms.
    pub fn charpoly(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "charpoly of a non-square matrix");
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(p) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            h.swap_rows(p, m);
            h.swap_cols(p, m);
            let inv = h[(m, m - 1)].inv().expect("pivot is nonzero");
            for i in (m + 1)..n {
                if h[(i, m - 1)].is_zero() {
                    continue;
                }
                let t = &h[(i, m - 1)] * &inv;
                for j in 0..n {
                    if !h[(m, j)].is_zero() {
                        let d = &t * &h[(m, j)];
                        h[(i, j)] -= &d;
                    }
                }
                for j in 0..n {
                    if !h[(j, i)].is_zero() {
                        let d = &t * &h[(j, i)];
                        h[(j, m)] += &d;
                    }
                }
            }
        }
        // p[k] is the characteristic polynomial of the leading k×k block.
        let mut p: Vec<Poly> = vec![Poly::one()];
        for k in 1..=n {
            let lin = Poly::new(vec![-&h[(k - 1, k - 1)], FieldElement::one()]);
            let mut next = lin.mul(&p[k - 1]);
            let mut prod = FieldElement::one();
            for i in (1..k).rev() {
                prod = &prod * &h[(i, i - 1)];
                if prod.is_zero() {
                    break;
                }
                let c = &prod * &h[(i - 1, k - 1)];
                if !c.is_zero() {
                    next = next.sub(&p[i - 1].scale(&c));
                }
            }
            p.push(next);
        }
        p.pop().expect("nonempty")
    }

    /// Minimal polynomial: the lcm over basis vectors `e_j` of the monic
    /// generator of the Krylov relation `e_j, A e_j, A² e_j, …`.
    pub fn minpoly(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "minpoly of a non-square matrix");
        let n = self.rows;
        let mut acc = Poly::one();
        for j in 0..n {
            let mut v = vec![FieldElement::zero(); n];
            v[j] = FieldElement::one();
            acc = acc.lcm(&self.krylov_relation(v));
        }
        acc
    }

    fn krylov_relation(&self, start: Vec<FieldElement>) -> Poly {
        let n = self.rows;
        let mut seq = vec![start];
        loop {
            let k = seq.len();
            let m = Matrix::from_columns(&seq, n);
            if m.rank() < k {
                let kernel = m.kernel();
                let rel = kernel.last().expect("dependent columns give a kernel").clone();
                return Poly::new(rel).monic();
            }
            let next = self.mul_vec(seq.last().expect("nonempty"));
            seq.push(next);
        }
    }

    /// Evaluates a polynomial at this matrix.
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Univariate polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    c: Vec<FieldElement>,
}

impl Poly {
    pub fn new(mut c: Vec<FieldElement>) -> Self {
        while c.last().is_some_and(FieldElement::is_zero) {
            c.pop();
        }
        Self { c }
    }

    pub fn zero() -> Self {
        Self { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self {
            c: vec![FieldElement::one()],
        }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.c.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn scale(&self, k: &FieldElement) -> Self {
        Self::new(self.c.iter().map(|x| x * k).collect())
    }

    pub fn add(&self, other: &Poly) -> Self {
        let n = self.c.len().max(other.c.len());
        let z = FieldElement::zero();
        Self::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z) + other.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Self {
        self.add(&other.scale(&FieldElement::from_int(-1)))
    }

    pub fn mul(&self, other: &Poly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![FieldElement::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * &FieldElement::from_int(i as i64))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by the zero polynomial.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dl = d.leading().expect("division by zero polynomial");
        let dinv = dl.inv().expect("leading coefficient is nonzero");
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![FieldElement::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &dinv;
            if coef.is_zero() {
                continue;
            }
            for (i, x) in d.c.iter().enumerate() {
                if !x.is_zero() {
                    r[k + i] -= &(&coef * x);
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        self.mul(other).div_rem(&g).0.monic()
    }

    /// Squarefree iff `gcd(p, p′)` is a nonzero constant.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Monic squarefree part `p / gcd(p, p′)`.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| fe(x)).collect()).collect())
    }

    fn poly(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| fe(x)).collect())
    }

    /// Independent oracle: cofactor expansion of det(tI − A) evaluated at
    /// enough integer points, compared with the polynomial's values.
    fn det(a: &Matrix) -> FieldElement {
        let n = a.rows();
        if n == 0 {
            return FieldElement::one();
        }
        let mut total = FieldElement::zero();
        for j in 0..n {
            if a[(0, j)].is_zero() {
                continue;
            }
            let minor = Matrix::from_rows(
                (1..n)
                    .map(|i| (0..n).filter(|&c| c != j).map(|c| a[(i, c)].clone()).collect())
                    .collect(),
            );
            let term = &a[(0, j)] * &det(&minor);
            if j % 2 == 0 {
                total += &term;
            } else {
                total -= &term;
            }
        }
        total
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(FieldElement::is_zero));
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        let a = m(&[&[0, 1, 0, 2], &[3, 0, 0, 1], &[1, 1, 2, 0], &[0, 0, 5, -1]]);
        let p = a.charpoly();
        assert_eq!(p.degree(), Some(4));
        for t in -3..=3 {
            let shifted = Matrix::identity(4).scale(&fe(t)).add(&a.scale(&fe(-1)));
            assert_eq!(p.eval(&fe(t)), det(&shifted));
        }
        assert!(a.eval_poly(&p).is_zero());
    }

    #[test]
    fn charpoly_with_zero_subdiagonal() {
        let a = m(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        assert_eq!(a.charpoly(), poly(&[0, 1, -2, 1]));
    }

    #[test]
    fn minpoly_of_jordan_block_and_diagonal() {
        let j = m(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert_eq!(j.minpoly(), poly(&[4, -4, 1]));
        assert!(!j.minpoly().is_squarefree());
        let d = m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
        assert_eq!(d.minpoly(), poly(&[2, -3, 1]));
        assert!(d.minpoly().is_squarefree());
    }

    #[test]
    fn poly_gcd_and_lcm() {
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[1, 2, 1]);
        assert_eq!(a.gcd(&b), poly(&[1, 1]));
        assert_eq!(a.lcm(&b), poly(&[-1, -1, 1, 1]));
        assert_eq!(poly(&[0, 0, 1]).squarefree_part(), poly(&[0, 1]));
    }
}
