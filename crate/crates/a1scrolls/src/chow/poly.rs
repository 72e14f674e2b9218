//! Sparse bivariate polynomials over arbitrary-precision integers.
//!
//! The two generators are written `x` (the hyperplane class pulled back from
//! the base) and `t` (the relative hyperplane class of the bundle).  A
//! polynomial is a map from monomials to nonzero coefficients; the map never
//! stores a zero coefficient, so equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exponent pair `x^i * t^j`.
///
/// Ordered by `(i, j)` lexicographically; `IntPoly` only relies on the order
/// being total and deterministic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: u32,
    pub t: u32,
}

impl Monomial {
    pub fn new(x: u32, t: u32) -> Self {
        Monomial { x, t }
    }

    /// Total degree `i + j`.
    pub fn degree(&self) -> u32 {
        self.x + self.t
    }
}

/// A sparse polynomial in `Z[x, t]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::monomial(c, 0, 0)
    }

    /// The single term `c * x^i * t^j`; zero `c` yields the zero polynomial.
    pub fn monomial(c: impl Into<BigInt>, x: u32, t: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(x, t), c);
        }
        IntPoly { terms }
    }

    /// The generator `x`.
    pub fn x() -> Self {
        IntPoly::monomial(1, 1, 0)
    }

    /// The generator `t`.
    pub fn t() -> Self {
        IntPoly::monomial(1, 0, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, BigInt)>) -> Self {
        let mut p = IntPoly::zero();
        for (x, t, c) in terms {
            p.add_term(Monomial::new(x, t), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x^i * t^j`, zero if the monomial is absent.
    pub fn coeff(&self, x: u32, t: u32) -> BigInt {
        self.terms
            .get(&Monomial::new(x, t))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Adds `c * m`, removing the entry if the sum cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Total degree of the highest term, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` if every term has total degree `d`; zero is not homogeneous
    /// of any particular degree and returns `None` like mixed-degree input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn pow(&self, n: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(Monomial::new(m1.x + m2.x, m1.t + m2.t), c1 * c2);
            }
        }
        out
    }
}

/// Renders one monomial part without its coefficient: `x^2*t`, `x`, `t^3`,
/// or the empty string for the constant monomial.
fn monomial_string(m: &Monomial) -> String {
    let mut parts = Vec::new();
    match m.x {
        0 => {}
        1 => parts.push("x".to_string()),
        e => parts.push(format!("x^{e}")),
    }
    match m.t {
        0 => {}
        1 => parts.push("t".to_string()),
        e => parts.push(format!("t^{e}")),
    }
    parts.join("*")
}

/// Canonical text form: terms in decreasing `t`-degree, ties broken by
/// increasing `x`-degree, coefficients in decimal with unit coefficients
/// elided (`t^2 + 3*x*t`, `t^2 - x*t`).
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.t.cmp(&a.t).then(a.x.cmp(&b.x)));
        for (idx, (m, c)) in ordered.into_iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let abs = c.magnitude();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_string(m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(u32, u32, i64)]) -> IntPoly {
        IntPoly::from_terms(terms.iter().map(|&(x, t, c)| (x, t, BigInt::from(c))))
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let mut p = poly(&[(1, 0, 3)]);
        p.add_term(Monomial::new(1, 0), BigInt::from(-3));
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(poly(&[(2, 2, 0)]), IntPoly::zero());
    }

    #[test]
    fn display_matches_canonical_form() {
        let p = poly(&[(0, 2, 1), (1, 1, 3)]);
        assert_eq!(p.to_string(), "t^2 + 3*x*t");
        let q = poly(&[(0, 2, 1), (1, 1, -1)]);
        assert_eq!(q.to_string(), "t^2 - x*t");
        let r = poly(&[(0, 3, 1), (1, 2, 6), (2, 1, 11), (3, 0, 6)]);
        assert_eq!(r.to_string(), "t^3 + 6*x*t^2 + 11*x^2*t + 6*x^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(poly(&[(0, 0, -7)]).to_string(), "-7");
        assert_eq!(poly(&[(2, 1, -1)]).to_string(), "-x^2*t");
    }

    #[test]
    fn homogeneous_degree_detection() {
        assert_eq!(poly(&[(0, 2, 1), (1, 1, 5)]).homogeneous_degree(), Some(2));
        assert_eq!(poly(&[(0, 2, 1), (1, 0, 5)]).homogeneous_degree(), None);
        assert_eq!(IntPoly::zero().homogeneous_degree(), None);
    }

    prop_compose! {
        fn arb_poly()(terms in prop::collection::vec(((0u32..6, 0u32..6), -9i64..=9), 0..6)) -> IntPoly {
            IntPoly::from_terms(terms.into_iter().map(|((x, t), c)| (x, t, BigInt::from(c))))
        }
    }

    proptest! {
        #[test]
        fn add_commutes(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
        }

        #[test]
        fn mul_commutes(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(&p * &q, &q * &p);
        }

        #[test]
        fn mul_associates(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        }

        #[test]
        fn mul_distributes_over_add(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        }

        #[test]
        fn sub_is_add_neg(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(&p - &q, &p + &(-&q));
        }
    }
}
