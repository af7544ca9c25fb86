//! Normal-ordered polynomial differential operators in two variables.
//!
//! A [`WeylPolynomial`] is a finite sum of monomials
//! `λ1^j1 λ2^j2 ∂1^k1 ∂2^k2` with every multiplication operator to the left
//! of every derivative. Products are reduced to this form with
//! `[∂i, λj] = δij`, which per variable reads
//!
//! ```text
//! ∂^b λ^c = Σ_j C(b, j) c!/(c-j)! λ^(c-j) ∂^(b-j)
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Coefficients with modulus at or below this are dropped.
pub const PURGE_THRESHOLD: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeylMonomial {
    pub l1: u32,
    pub l2: u32,
    pub d1: u32,
    pub d2: u32,
}

impl WeylMonomial {
    pub const ONE: WeylMonomial = WeylMonomial { l1: 0, l2: 0, d1: 0, d2: 0 };

    pub const fn new(l1: u32, l2: u32, d1: u32, d2: u32) -> Self {
        Self { l1, l2, d1, d2 }
    }

    pub fn degree(&self) -> u32 {
        self.l1 + self.l2 + self.d1 + self.d2
    }
}

impl fmt::Display for WeylMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::ONE {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (name, p) in [("λ1", self.l1), ("λ2", self.l2), ("∂1", self.d1), ("∂2", self.d2)] {
            match p {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{p}")),
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct WeylPolynomial {
    terms: BTreeMap<WeylMonomial, Complex64>,
}

impl WeylPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        Self::monomial(WeylMonomial::ONE, c)
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn monomial(m: WeylMonomial, c: Complex64) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p.purge();
        p
    }

    pub fn lambda1() -> Self {
        Self::monomial(WeylMonomial::new(1, 0, 0, 0), Complex64::new(1.0, 0.0))
    }

    pub fn lambda2() -> Self {
        Self::monomial(WeylMonomial::new(0, 1, 0, 0), Complex64::new(1.0, 0.0))
    }

    /// `∂/∂λ1`.
    pub fn d1() -> Self {
        Self::monomial(WeylMonomial::new(0, 0, 1, 0), Complex64::new(1.0, 0.0))
    }

    pub fn d2() -> Self {
        Self::monomial(WeylMonomial::new(0, 0, 0, 1), Complex64::new(1.0, 0.0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMonomial, &Complex64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &WeylMonomial) -> Complex64 {
        self.terms.get(m).copied().unwrap_or_default()
    }

    /// Largest coefficient modulus, zero for the zero polynomial.
    pub fn max_coefficient(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut out = Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * factor)).collect(),
        };
        out.purge();
        out
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    fn add_term(&mut self, m: WeylMonomial, c: Complex64) {
        *self.terms.entry(m).or_default() += c;
    }

    fn purge(&mut self) {
        self.terms.retain(|_, c| c.norm() > PURGE_THRESHOLD);
    }
}

impl fmt::Display for WeylPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c}) {m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

fn falling(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i))
}

/// Normal-ordered `(λ^a ∂^b)(λ^c ∂^d)` for one variable, as
/// `(coefficient, λ power, ∂ power)` triples.
fn reorder(a: u32, b: u32, c: u32, d: u32) -> impl Iterator<Item = (f64, u32, u32)> {
    (0..=b.min(c)).map(move |j| (binomial(b, j) * falling(c, j), a + c - j, b + d - j))
}

fn monomial_product(x: &WeylMonomial, y: &WeylMonomial) -> Vec<(f64, WeylMonomial)> {
    let first: Vec<_> = reorder(x.l1, x.d1, y.l1, y.d1).collect();
    let second: Vec<_> = reorder(x.l2, x.d2, y.l2, y.d2).collect();
    let mut out = Vec::with_capacity(first.len() * second.len());
    for &(c1, l1, d1) in &first {
        for &(c2, l2, d2) in &second {
            out.push((c1 * c2, WeylMonomial { l1, l2, d1, d2 }));
        }
    }
    out
}

impl Add for &WeylPolynomial {
    type Output = WeylPolynomial;

    fn add(self, rhs: Self) -> WeylPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, *c);
        }
        out.purge();
        out
    }
}

impl Sub for &WeylPolynomial {
    type Output = WeylPolynomial;

    fn sub(self, rhs: Self) -> WeylPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -*c);
        }
        out.purge();
        out
    }
}

impl Neg for &WeylPolynomial {
    type Output = WeylPolynomial;

    fn neg(self) -> WeylPolynomial {
        self.scale_real(-1.0)
    }
}

impl Mul for &WeylPolynomial {
    type Output = WeylPolynomial;

    fn mul(self, rhs: Self) -> WeylPolynomial {
        let mut out = WeylPolynomial::zero();
        for (mx, cx) in &self.terms {
            for (my, cy) in &rhs.terms {
                let c = cx * cy;
                for (k, m) in monomial_product(mx, my) {
                    out.add_term(m, c * k);
                }
            }
        }
        out.purge();
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for WeylPolynomial {
            type Output = WeylPolynomial;

            fn $method(self, rhs: Self) -> WeylPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Polynomial `Σ c λ1^p λ2^q` used as a test function for operator actions.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolynomialFunction {
    terms: BTreeMap<(u32, u32), Complex64>,
}

impl PolynomialFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Complex64)>) -> Self {
        let mut f = Self::zero();
        for (powers, c) in terms {
            *f.terms.entry(powers).or_default() += c;
        }
        f.purge();
        f
    }

    pub fn coefficient(&self, p: u32, q: u32) -> Complex64 {
        self.terms.get(&(p, q)).copied().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Complex64)> {
        self.terms.iter()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c * factor)))
    }

    pub fn eval(&self, l1: f64, l2: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&(p, q), c)| c * l1.powi(p as i32) * l2.powi(q as i32))
            .sum()
    }

    /// Largest coefficient modulus of `self - other`.
    pub fn distance(&self, other: &Self) -> f64 {
        let diff = Self::from_terms(
            self.terms
                .iter()
                .map(|(k, c)| (*k, *c))
                .chain(other.terms.iter().map(|(k, c)| (*k, -*c))),
        );
        diff.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn purge(&mut self) {
        self.terms.retain(|_, c| c.norm() > PURGE_THRESHOLD);
    }
}

/// Exact action of a differential operator on a polynomial.
pub fn apply_weyl(p: &WeylPolynomial, f: &PolynomialFunction) -> PolynomialFunction {
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        for (&(a, b), cf) in f.terms() {
            if m.d1 > a || m.d2 > b {
                continue;
            }
            let k = falling(a, m.d1) * falling(b, m.d2);
            out.push(((a - m.d1 + m.l1, b - m.d2 + m.l2), c * cf * k));
        }
    }
    PolynomialFunction::from_terms(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn derivative_through_coordinate() {
        let p = &WeylPolynomial::d1() * &WeylPolynomial::lambda1();
        let expected = &(&WeylPolynomial::lambda1() * &WeylPolynomial::d1()) + &WeylPolynomial::one();
        assert_eq!(p, expected);
    }

    #[test]
    fn leibniz_on_square() {
        let l1 = WeylPolynomial::lambda1();
        let sq = &l1 * &l1;
        assert_eq!(WeylPolynomial::d1().commutator(&sq), l1.scale_real(2.0));
    }

    #[test]
    fn mixed_product() {
        let left = &WeylPolynomial::lambda1() * &WeylPolynomial::d2();
        let right = &WeylPolynomial::lambda2() * &WeylPolynomial::d1();
        let got = &left * &right;
        let mut want = WeylPolynomial::monomial(WeylMonomial::new(1, 1, 1, 1), re(1.0));
        want = &want + &WeylPolynomial::monomial(WeylMonomial::new(1, 0, 1, 0), re(1.0));
        assert_eq!(got, want);

        // both sides on λ1² λ2
        let f = PolynomialFunction::from_terms([((2, 1), re(1.0))]);
        let sequential = apply_weyl(&left, &apply_weyl(&right, &f));
        assert_eq!(apply_weyl(&got, &f), sequential);
    }

    #[test]
    fn higher_reordering_matches_direct_action() {
        // ∂1^3 λ1^2 against λ1^4
        let d3 = WeylPolynomial::monomial(WeylMonomial::new(0, 0, 3, 0), re(1.0));
        let l2 = WeylPolynomial::monomial(WeylMonomial::new(2, 0, 0, 0), re(1.0));
        let prod = &d3 * &l2;
        let f = PolynomialFunction::from_terms([((4, 0), re(1.0))]);
        let direct = apply_weyl(&d3, &apply_weyl(&l2, &f));
        assert_eq!(apply_weyl(&prod, &f), direct);
        // 6!/3! λ^3
        assert_eq!(direct.coefficient(3, 0), re(120.0));
    }

    #[test]
    fn apply_simple_cases() {
        let f = PolynomialFunction::from_terms([((3, 0), re(1.0))]);
        let got = apply_weyl(&WeylPolynomial::d1(), &f);
        assert_eq!(got, PolynomialFunction::from_terms([((2, 0), re(3.0))]));
        assert_eq!(apply_weyl(&WeylPolynomial::one(), &f), f);
        assert!(apply_weyl(&WeylPolynomial::d2(), &f).terms().next().is_none());
    }

    #[test]
    fn cancellation_purges_terms() {
        let l = WeylPolynomial::lambda1();
        assert!((&l - &l).is_zero());
        assert_eq!((&l - &l).len(), 0);
    }

    #[test]
    fn display_is_readable() {
        let m = WeylMonomial::new(2, 0, 1, 0);
        assert_eq!(m.to_string(), "λ1^2 ∂1");
        assert_eq!(WeylMonomial::ONE.to_string(), "1");
    }
}
