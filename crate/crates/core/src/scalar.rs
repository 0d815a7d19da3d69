//! Exact arithmetic in the multiquadratic field Q(√2, √3, √5).
//!
//! An element is stored as eight rational coordinates over the monomial basis
//! `∏_{p ∈ S} √p`, where `S` ranges over subsets of `{2, 3, 5}`. Slot `i`
//! holds the coefficient of the monomial whose prime set is encoded by the
//! bits of `i` (bit 0 ↔ 2, bit 1 ↔ 3, bit 2 ↔ 5).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::G2Error;

/// Arbitrary precision rational number. Always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// The radicands, indexed by bit position in a monomial mask.
pub const PRIMES: [i64; 3] = [2, 3, 5];

/// Number of monomial slots.
pub const SLOTS: usize = 8;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Product of the primes shared by two monomials; `√S · √T = shared · √(S xor T)`.
fn shared_factor(a: usize, b: usize) -> i64 {
    let both = a & b;
    (0..3)
        .filter(|bit| both & (1 << bit) != 0)
        .map(|bit| PRIMES[bit])
        .product()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: [Rational; SLOTS],
}

impl FieldElement {
    pub fn zero() -> Self {
        Self {
            coeffs: Default::default(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut out = Self::zero();
        out.coeffs[0] = q;
        out
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    /// `q · √(mask)`, e.g. `monomial(q, 0b101)` is `q√10`.
    pub fn monomial(q: Rational, mask: usize) -> Self {
        assert!(mask < SLOTS, "monomial mask out of range");
        let mut out = Self::zero();
        out.coeffs[mask] = q;
        out
    }

    /// `√p` for `p ∈ {2, 3, 5}`.
    pub fn sqrt(p: i64) -> Self {
        let bit = PRIMES
            .iter()
            .position(|&q| q == p)
            .unwrap_or_else(|| panic!("√{p} is not in Q(√2,√3,√5)"));
        Self::monomial(Rational::one(), 1 << bit)
    }

    pub fn from_coeffs(coeffs: [Rational; SLOTS]) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational; SLOTS] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> &Rational {
        &self.coeffs[mask]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if all irrational coordinates vanish.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Iterator over `(mask, coefficient)` for the nonzero monomials, in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
    }

    /// Galois conjugate flipping the sign of every `√p` with `p` in `flip`.
    pub fn conjugate(&self, flip: usize) -> Self {
        let mut out = self.clone();
        for (mask, q) in out.coeffs.iter_mut().enumerate() {
            if (mask & flip).count_ones() % 2 == 1 {
                *q = -q.clone();
            }
        }
        out
    }

    /// Multiplicative inverse, via the product of the seven nontrivial
    /// conjugates divided by the (rational) norm.
    pub fn inv(&self) -> Result<Self, G2Error> {
        if self.is_zero() {
            return Err(G2Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        let mut cofactor = Self::one();
        for flip in 1..SLOTS {
            cofactor = &cofactor * &self.conjugate(flip);
        }
        let norm = &cofactor * self;
        let norm = norm
            .as_rational()
            .expect("norm of a multiquadratic element is rational")
            .clone();
        Ok(cofactor.scale(&norm.recip()))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            if !c.is_zero() {
                *c *= q;
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Writes `|q|√S` pieces the way the element grammar expects:
    /// `3/2*s2*s5`, `s6` never appears (products are spelled out).
    pub(crate) fn monomial_body(q: &Rational, mask: usize) -> String {
        let surds: Vec<String> = (0..3)
            .filter(|bit| mask & (1 << bit) != 0)
            .map(|bit| format!("s{}", PRIMES[bit]))
            .collect();
        let mag = q.abs();
        if surds.is_empty() {
            return mag.to_string();
        }
        if mag.is_one() {
            surds.join("*")
        } else {
            format!("{}*{}", mag, surds.join("*"))
        }
    }
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for FieldElement {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mask, q)) in self.terms().enumerate() {
            let sign = if q.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            write!(f, "{sign}{}", Self::monomial_body(q, mask))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({self})")
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'a FieldElement) -> FieldElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(mut self, rhs: FieldElement) -> FieldElement {
        self += &rhs;
        self
    }
}

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'a FieldElement) -> FieldElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(mut self, rhs: FieldElement) -> FieldElement {
        self -= &rhs;
        self
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(mut self) -> FieldElement {
        for c in self.coeffs.iter_mut() {
            if !c.is_zero() {
                *c = -c.clone();
            }
        }
        self
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -self.clone()
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'a FieldElement) -> FieldElement {
        let mut out = FieldElement::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                let mut prod = a * b;
                let k = shared_factor(i, j);
                if k != 1 {
                    prod *= int(k);
                }
                out.coeffs[i ^ j] += prod;
            }
        }
        out
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        &self * &rhs
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = &*self * rhs;
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = Result<FieldElement, G2Error>;
    fn div(self, rhs: &'a FieldElement) -> Result<FieldElement, G2Error> {
        Ok(self * &rhs.inv()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: i64) -> FieldElement {
        FieldElement::sqrt(p)
    }

    #[test]
    fn addition_examples() {
        let one = FieldElement::one();
        assert_eq!(&one + &FieldElement::zero(), one);
        assert_eq!(&s(2) + &s(2), s(2).scale(&int(2)));
        let s6 = &s(2) * &s(3);
        assert!((&s6 + &(-&s6)).is_zero());
    }

    #[test]
    fn multiplication_examples() {
        let s6 = &s(2) * &s(3);
        assert_eq!(s6, FieldElement::monomial(int(1), 0b011));
        assert_eq!(&s(2) * &s(2), FieldElement::from_int(2));
        // √6 · √10 = √60 = 2√15
        let s10 = &s(2) * &s(5);
        assert_eq!(&s6 * &s10, FieldElement::monomial(int(2), 0b110));
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(FieldElement::from_int(2).inv().unwrap(), FieldElement::from_frac(1, 2));
        assert_eq!(s(2).inv().unwrap(), s(2).scale(&rat(1, 2)));
        let one_plus = &FieldElement::one() + &s(2);
        let expected = &s(2) - &FieldElement::one();
        assert_eq!(one_plus.inv().unwrap(), expected);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(matches!(FieldElement::zero().inv(), Err(G2Error::DivisionByZero)));
    }

    #[test]
    fn inverse_of_dense_element() {
        let mut coeffs: [Rational; SLOTS] = Default::default();
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = rat(i as i64 * 3 - 7, (i as i64) + 2);
        }
        let a = FieldElement::from_coeffs(coeffs);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn display_uses_grammar_tokens() {
        let x = FieldElement::monomial(rat(3, 2), 0b101);
        assert_eq!(x.to_string(), "3/2*s2*s5");
        let y = &FieldElement::one() - &s(3);
        assert_eq!(y.to_string(), "1-s3");
    }
}
