//! Text syntax for scalars, elements and subspaces, and the canonical printer.
//!
//! ```text
//! subspace := element (';' element)*
//! element  := ['-'] term (('+'|'-') term)*
//! term     := scalar '*' atom | atom | '0'
//! atom     := 'X[' int ',' int ']' | 'H[' rat ',' rat ']'
//! scalar   := factor ('*' factor)*
//! factor   := rat | 's2' | 's3' | 's5'
//! ```
//!
//! `H[a,b]` is the coroot of `aα + bβ`. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{coroot, root_index, AlgElement};
use crate::error::{G2Error, Result};
use crate::roots::{coroot_coords, Root, RootVector, ROOTS};
use crate::scalar::{FieldElement, Rational};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn found(&mut self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(c) => format!("'{}'", c as char),
        }
    }

    fn error<T>(&mut self, expected: &str) -> Result<T> {
        let found = self.found();
        Err(G2Error::Parse {
            pos: self.pos,
            expected: expected.to_string(),
            found,
        })
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(&format!("'{}'", c as char))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn unsigned_int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse as an integer"))
    }

    fn signed_int(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        let n = self.unsigned_int()?;
        Ok(if neg { -n } else { n })
    }

    fn small_int(&mut self) -> Result<i64> {
        let start = self.pos;
        let n = self.signed_int()?;
        i64::try_from(n).map_err(|_| G2Error::Parse {
            pos: start,
            expected: "small integer".to_string(),
            found: "oversized integer".to_string(),
        })
    }

    /// `int ['/' int]`, unsigned.
    fn unsigned_rat(&mut self) -> Result<Rational> {
        let n = self.unsigned_int()?;
        if self.eat(b'/') {
            let at = self.pos;
            let d = self.unsigned_int()?;
            if d.is_zero() {
                return Err(G2Error::Parse {
                    pos: at,
                    expected: "nonzero denominator".to_string(),
                    found: "0".to_string(),
                });
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    fn signed_rat(&mut self) -> Result<Rational> {
        let neg = self.eat(b'-');
        let q = self.unsigned_rat()?;
        Ok(if neg { -q } else { q })
    }

    fn starts_with(&mut self, s: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn surd(&mut self) -> Option<FieldElement> {
        for p in [2, 3, 5] {
            if self.starts_with(&format!("s{p}")) {
                self.pos += 2;
                return Some(FieldElement::sqrt(p));
            }
        }
        None
    }

    fn factor(&mut self) -> Result<FieldElement> {
        if let Some(s) = self.surd() {
            return Ok(s);
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(self.unsigned_rat()?.into()),
            _ => self.error("number or surd (s2, s3, s5)"),
        }
    }

    fn atom(&mut self) -> Result<Option<AlgElement>> {
        match self.peek() {
            Some(b'X') => {
                self.pos += 1;
                self.expect(b'[')?;
                let start = self.pos;
                let a = self.small_int()?;
                self.expect(b',')?;
                let b = self.small_int()?;
                self.expect(b']')?;
                match Root::new(a, b) {
                    Ok(r) => Ok(Some(AlgElement::x(r))),
                    Err(_) => Err(G2Error::Parse {
                        pos: start,
                        expected: "root coordinates".to_string(),
                        found: format!("[{a},{b}]"),
                    }),
                }
            }
            Some(b'H') => {
                self.pos += 1;
                self.expect(b'[')?;
                let start = self.pos;
                let a = self.signed_rat()?;
                self.expect(b',')?;
                let b = self.signed_rat()?;
                self.expect(b']')?;
                coroot(&RootVector::new(a, b)).map(Some).map_err(|_| G2Error::Parse {
                    pos: start,
                    expected: "nonzero vector".to_string(),
                    found: "[0,0]".to_string(),
                })
            }
            _ => Ok(None),
        }
    }

    /// A term without its sign.
    fn term(&mut self) -> Result<AlgElement> {
        if let Some(a) = self.atom()? {
            return Ok(a);
        }
        let start = self.pos;
        let mut k = self.factor()?;
        loop {
            if !self.eat(b'*') {
                if k.is_zero() {
                    return Ok(AlgElement::zero());
                }
                self.pos = self.pos.max(start);
                return self.error("'*' followed by X[..] or H[..]");
            }
            if let Some(a) = self.atom()? {
                return Ok(a.scale(&k));
            }
            k = &k * &self.factor()?;
        }
    }

    fn element(&mut self) -> Result<AlgElement> {
        let mut neg = self.eat(b'-');
        let mut acc = AlgElement::zero();
        loop {
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn scalar_expr(&mut self) -> Result<FieldElement> {
        let mut neg = self.eat(b'-');
        let mut acc = FieldElement::zero();
        loop {
            let mut k = self.factor()?;
            while self.eat(b'*') {
                k = &k * &self.factor()?;
            }
            if neg {
                acc -= &k;
            } else {
                acc += &k;
            }
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn finish<T>(&mut self, v: T) -> Result<T> {
        if self.at_end() {
            Ok(v)
        } else {
            self.error("end of input")
        }
    }
}

pub fn parse_element(s: &str) -> Result<AlgElement> {
    let mut p = Parser::new(s);
    let e = p.element()?;
    p.finish(e)
}

/// Semicolon-separated elements; the empty string is the empty list.
pub fn parse_element_list(s: &str) -> Result<Vec<AlgElement>> {
    let mut p = Parser::new(s);
    let mut out = Vec::new();
    if p.at_end() {
        return Ok(out);
    }
    loop {
        out.push(p.element()?);
        if !p.eat(b';') {
            break;
        }
    }
    p.finish(out)
}

/// A sum of signed products of rationals and surds, e.g. `-3/2*s2*s5+1`.
pub fn parse_scalar(s: &str) -> Result<FieldElement> {
    let mut p = Parser::new(s);
    let k = p.scalar_expr()?;
    p.finish(k)
}

/// A signed rational, e.g. `-1/2`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let mut p = Parser::new(s);
    let q = p.signed_rat()?;
    p.finish(q)
}

/// Appends `coefficient * atom` as one term per monomial of the coefficient.
fn push_terms(out: &mut String, k: &FieldElement, atom: &str) {
    for (mask, q) in k.terms() {
        let body = FieldElement::monomial_body(q, mask);
        if q.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if mask == 0 && q.abs().is_one() {
            out.push_str(atom);
        } else {
            out.push_str(&body);
            out.push('*');
            out.push_str(atom);
        }
    }
}

/// The primitive integer direction `(a, b)` of the vector whose coroot is
/// proportional to `c_α H_α + c_β H_β`, when that ratio is rational.
fn cartan_direction(ca: &FieldElement, cb: &FieldElement) -> Option<(BigInt, BigInt, FieldElement)> {
    let three = FieldElement::from_int(3);
    let (va, vb) = if ca.is_zero() {
        (Rational::zero(), Rational::one())
    } else {
        let ratio = (cb / &(ca * &three)).ok()?;
        (Rational::one(), ratio.as_rational()?.clone())
    };
    // Clear denominators and make primitive with a > 0 or (a = 0, b > 0).
    let l = num_integer::Integer::lcm(va.denom(), vb.denom());
    let mut a = (va * Rational::from_integer(l.clone())).to_integer();
    let mut b = (vb * Rational::from_integer(l)).to_integer();
    let g = num_integer::Integer::gcd(&a, &b);
    a /= &g;
    b /= &g;
    if a.is_negative() || (a.is_zero() && b.is_negative()) {
        a = -a;
        b = -b;
    }
    let v = RootVector::new(Rational::from_integer(a.clone()), Rational::from_integer(b.clone()));
    let (ha, hb) = coroot_coords(&v).ok()?;
    let k = if ca.is_zero() {
        (cb / &FieldElement::from(hb)).ok()?
    } else {
        (ca / &FieldElement::from(ha)).ok()?
    };
    Some((a, b, k))
}

/// Canonical text of an element: Cartan part first, then root vectors in
/// root order; coefficient 1 omitted; multi-monomial coefficients split into
/// one term per monomial.
pub fn format_element(x: &AlgElement) -> String {
    let mut out = String::new();
    let ca = x.coord(0);
    let cb = x.coord(1);
    if !(ca.is_zero() && cb.is_zero()) {
        match cartan_direction(ca, cb) {
            Some((a, b, k)) => push_terms(&mut out, &k, &format!("H[{a},{b}]")),
            None => {
                push_terms(&mut out, ca, "H[1,0]");
                push_terms(&mut out, cb, "H[0,1]");
            }
        }
    }
    for r in ROOTS {
        let k = x.coord(root_index(r));
        if !k.is_zero() {
            push_terms(&mut out, k, &format!("X{r}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_element_list(xs: &[AlgElement]) -> String {
    xs.iter().map(format_element).collect::<Vec<_>>().join("; ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    #[test]
    fn parses_atoms_and_scalars() {
        assert_eq!(parse_element("X[3,2]").unwrap(), AlgElement::xr(3, 2));
        assert_eq!(
            parse_element("H[9,5]").unwrap().scale_int(14),
            AlgElement::cartan(fe(6), fe(10))
        );
        let x = parse_element("3/2*s2*s5*X[1,0]").unwrap();
        assert_eq!(*x.root_coeff(Root::of(1, 0)), FieldElement::monomial(rat(3, 2), 0b101));
        assert_eq!(
            parse_element(" - X[1,0] + 2 * X[ 0 , 1 ] ").unwrap(),
            AlgElement::xr(0, 1).scale_int(2) - AlgElement::xr(1, 0)
        );
        assert_eq!(parse_element("s2*3*X[1,0]").unwrap(), AlgElement::xr(1, 0).scale(&(&FieldElement::sqrt(2) * &fe(3))));
        assert!(parse_element("0").unwrap().is_zero());
    }

    #[test]
    fn reports_errors_with_position() {
        match parse_element("X[1,0]+") {
            Err(G2Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_element("X[1,2]"), Err(G2Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_element("H[0,0]"), Err(G2Error::Parse { .. })));
        assert!(matches!(parse_element("2"), Err(G2Error::Parse { .. })));
        assert!(matches!(parse_element("X[1,0] X[0,1]"), Err(G2Error::Parse { .. })));
        assert!(matches!(parse_element("1/0*X[1,0]"), Err(G2Error::Parse { .. })));
    }

    #[test]
    fn printer_is_canonical() {
        let cases = [
            "X[0,1]+X[3,1]",
            "-X[1,0]",
            "H[1,1]",
            "14*H[9,5]",
            "2*H[3,1]",
            "s2*X[0,-1]+s2*X[3,2]",
            "s2*s3*X[1,0]+s2*s5*X[0,1]",
            "H[3,2]+X[1,0]",
            "-1/2*H[1,0]",
            "X[1,0]+s2*X[1,0]",
            "0",
        ];
        for c in cases {
            let x = parse_element(c).unwrap();
            assert_eq!(format_element(&x), c);
        }
        let irr = AlgElement::cartan(fe(1), FieldElement::sqrt(2));
        assert_eq!(format_element(&irr), "H[1,0]+s2*H[0,1]");
        assert_eq!(parse_element(&format_element(&irr)).unwrap(), irr);
    }

    #[test]
    fn lists_and_scalars() {
        let l = parse_element_list("X[0,1]+X[3,1]; X[2,1]; X[3,2]").unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(format_element_list(&l), "X[0,1]+X[3,1]; X[2,1]; X[3,2]");
        assert!(parse_element_list("").unwrap().is_empty());
        assert_eq!(parse_scalar("-2/3").unwrap(), FieldElement::from_frac(-2, 3));
        assert_eq!(parse_scalar("1+s2").unwrap(), &fe(1) + &FieldElement::sqrt(2));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
    }
}
