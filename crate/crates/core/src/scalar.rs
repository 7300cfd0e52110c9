//! Exact multivariate polynomials over the rationals.
//!
//! Every coefficient that appears in a form on the gwistor space is a polynomial
//! in a small, closed set of symbols: the sectional curvature `k`, the Einstein
//! constant `lambda`, and the canonical Riemann components `R_ijkl` of the base.
//! Values are kept in a canonical sparse form, so equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::UnivariatePoly;

/// Index of a canonical Riemann component `R_ijkl` with `i < j`, `k < l`,
/// `(i, j) <= (k, l)`, indices in `0..4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RiemannIndex([u8; 4]);

impl RiemannIndex {
    /// Only `curvature::riemann_symbol` may build these, after normalization.
    pub(crate) fn from_canonical(idx: [u8; 4]) -> Self {
        debug_assert!(idx[0] < idx[1] && idx[2] < idx[3] && (idx[0], idx[1]) <= (idx[2], idx[3]));
        RiemannIndex(idx)
    }

    pub fn indices(&self) -> [usize; 4] {
        self.0.map(usize::from)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    K,
    Lambda,
    Riemann(RiemannIndex),
}

impl Symbol {
    pub fn is_riemann(&self) -> bool {
        matches!(self, Symbol::Riemann(_))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::K => write!(f, "k"),
            Symbol::Lambda => write!(f, "lambda"),
            Symbol::Riemann(r) => {
                let [a, b, c, d] = r.0;
                write!(f, "R{a}{b}{c}{d}")
            }
        }
    }
}

/// Product of symbols with positive exponents, sorted by symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (s, e)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Monomial::one(), q);
        }
        Scalar { terms }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::from_rational(rational(n, d))
    }

    pub fn symbol(s: Symbol) -> Self {
        Scalar::monomial(BigRational::one(), Monomial::var(s))
    }

    pub fn k() -> Self {
        Scalar::symbol(Symbol::K)
    }

    pub fn lambda() -> Self {
        Scalar::symbol(Symbol::Lambda)
    }

    pub fn monomial(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The value if no symbol occurs.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                (m.0.is_empty()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(s, _)| *s))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn has_riemann(&self) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|(s, _)| s.is_riemann()))
    }

    pub fn scale(&self, q: &BigRational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        (0..e).fold(Scalar::one(), |acc, _| &acc * self)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Replace symbols by scalars; symbols mapped to `None` are kept.
    pub fn substitute_with<F>(&self, f: F) -> Scalar
    where
        F: Fn(&Symbol) -> Option<Scalar>,
    {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = Scalar::from_rational(c.clone());
            for (s, e) in &m.0 {
                let factor = match f(s) {
                    Some(v) => v.pow(*e),
                    None => Scalar::monomial(BigRational::one(), Monomial(vec![(*s, *e)])),
                };
                term = &term * &factor;
            }
            out += term;
        }
        out
    }

    pub fn substitute(&self, sym: Symbol, value: &Scalar) -> Scalar {
        self.substitute_with(|s| (*s == sym).then(|| value.clone()))
    }

    /// Interpret as a polynomial in one symbol; `None` if others occur.
    pub fn to_univariate(&self, var: Symbol) -> Option<UnivariatePoly> {
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (m, c) in &self.terms {
            let deg = match m.0.as_slice() {
                [] => 0,
                [(s, e)] if *s == var => *e as usize,
                _ => return None,
            };
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, BigRational::zero());
            }
            coeffs[deg] += c;
        }
        Some(UnivariatePoly::new(coeffs))
    }

    pub fn from_univariate(p: &UnivariatePoly, var: Symbol) -> Scalar {
        let mut out = Scalar::zero();
        for (d, c) in p.coeffs().iter().enumerate() {
            let m = if d == 0 {
                Monomial::one()
            } else {
                Monomial(vec![(var, d as u32)])
            };
            out.add_term(m, c.clone());
        }
        out
    }

    /// Leading sign for display purposes (sign of the first printed term).
    fn display_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(a.0.cmp(b.0)));
        v
    }

    /// True if printing needs parentheses when used as a factor.
    pub fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl From<Symbol> for Scalar {
    fn from(s: Symbol) -> Self {
        Scalar::symbol(s)
    }
}

/// The rational values of `var` at which every scalar vanishes; see
/// [`crate::poly::common_root_set`]. `None` also when another symbol occurs.
pub fn common_zeros<'a>(values: impl IntoIterator<Item = &'a Scalar>, var: Symbol) -> Option<Vec<BigRational>> {
    let polys: Option<Vec<UnivariatePoly>> = values.into_iter().map(|s| s.to_univariate(var)).collect();
    crate::poly::common_root_set(&polys?)
}

/// Parses a rational literal `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<BigRational, Error> {
    let t = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k() -> Scalar {
        Scalar::k()
    }

    #[test]
    fn cancellation_removes_terms() {
        let s = &k() - &k();
        assert!(s.is_zero());
        assert_eq!(s, Scalar::zero());
    }

    #[test]
    fn half_two_minus_k_plus_half_k_is_one() {
        let a = Scalar::ratio(1, 2) * (Scalar::from(2) - k());
        let b = Scalar::ratio(1, 2) * k();
        assert!((a + b).is_one());
    }

    #[test]
    fn display_descending_degree() {
        let s = &k() * &(&k() - &Scalar::one());
        assert_eq!(s.to_string(), "k^2 - k");
        assert_eq!((-Scalar::ratio(3, 2) * k() + Scalar::from(1)).to_string(), "-3/2*k + 1");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn substitution_yields_rational() {
        let s = k().pow(2) - Scalar::from(3) * k() + Scalar::lambda();
        let v = s
            .substitute(Symbol::K, &Scalar::ratio(1, 2))
            .substitute(Symbol::Lambda, &Scalar::from(2));
        assert_eq!(v.as_rational(), Some(rational(3, 4)));
    }

    #[test]
    fn univariate_roundtrip() {
        let s = k().pow(3) - k();
        let p = s.to_univariate(Symbol::K).unwrap();
        assert_eq!(Scalar::from_univariate(&p, Symbol::K), s);
        assert!((k() + Scalar::lambda()).to_univariate(Symbol::K).is_none());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("1/2").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), rational(-3, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        proptest::collection::vec((-5i64..=5, 1i64..=4, 0u32..=3, 0u32..=2), 0..5).prop_map(|ts| {
            let mut s = Scalar::zero();
            for (n, d, ek, el) in ts {
                let m = Scalar::k().pow(ek) * Scalar::lambda().pow(el);
                s += Scalar::ratio(n, d) * m;
            }
            s
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn canonicalization_is_idempotent(a in small_scalar()) {
            // Rebuilding from the stored terms goes through normalization again.
            let mut rebuilt = Scalar::zero();
            for (m, c) in a.terms() {
                rebuilt += Scalar::monomial(c.clone(), m.clone());
            }
            prop_assert_eq!(&rebuilt, &a);
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
