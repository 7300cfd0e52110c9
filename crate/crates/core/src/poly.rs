//! Univariate polynomials over Q and their rational root sets.
//!
//! Several claims ("parallel iff k = 0 or k = 1", "closed iff k = 0") reduce to
//! the exact root set of a polynomial in `k`. Roots are found with the rational
//! root theorem; a claim about the *full* root set is only made when the
//! polynomial splits into linear factors over Q.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariatePoly {
    /// Coefficients in ascending degree; no trailing zeros.
    coeffs: Vec<BigRational>,
}

/// `leading * Π (x - root)^mult * residual`, where `residual` has no rational root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub leading: BigRational,
    pub roots: Vec<(BigRational, u32)>,
    pub residual: UnivariatePoly,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        UnivariatePoly::new(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Synthetic division by `(x - r)`; returns the quotient if `r` is a root.
    fn deflate(&self, r: &BigRational) -> Option<UnivariatePoly> {
        if !self.eval(r).is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        let mut q = vec![BigRational::zero(); n - 1];
        let mut carry = BigRational::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + carry * r;
            q[i - 1] = carry.clone();
        }
        Some(UnivariatePoly::new(q))
    }

    fn integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect()
    }

    /// Candidate rational roots `±p/q`, `p | a0`, `q | an`. Small coefficients only.
    fn candidates(&self) -> Vec<BigRational> {
        let ints = self.integer_coeffs();
        let (Some(a0), Some(an)) = (ints.first(), ints.last()) else {
            return Vec::new();
        };
        let (Some(p), Some(q)) = (a0.abs().to_u64(), an.abs().to_u64()) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for dp in divisors(p) {
            for dq in divisors(q) {
                let r = BigRational::new(BigInt::from(dp), BigInt::from(dq));
                out.push(r.clone());
                out.push(-r);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn factor(&self) -> Factorization {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let leading = self.coeffs.last().cloned().unwrap();
        let mut rest = UnivariatePoly::new(self.coeffs.iter().map(|c| c / &leading).collect());
        let mut roots: Vec<(BigRational, u32)> = Vec::new();
        // zero roots first; the constant term bounds the other candidates
        let mut zero_mult = 0;
        while rest.coeffs.len() > 1 && rest.coeffs[0].is_zero() {
            rest = UnivariatePoly::new(rest.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((BigRational::zero(), zero_mult));
        }
        for r in rest.candidates() {
            let mut mult = 0;
            while rest.degree().unwrap_or(0) > 0 {
                match rest.deflate(&r) {
                    Some(q) => {
                        rest = q;
                        mult += 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        roots.sort();
        Factorization {
            leading,
            roots,
            residual: rest,
        }
    }

    /// The complete root set, if the polynomial splits over Q and is nonzero.
    pub fn rational_root_set(&self) -> Option<Vec<BigRational>> {
        if self.is_zero() {
            return None;
        }
        let f = self.factor();
        (f.residual.degree() == Some(0)).then(|| f.roots.into_iter().map(|(r, _)| r).collect())
    }

    /// Division with remainder.
    pub fn div_rem(&self, d: &UnivariatePoly) -> (UnivariatePoly, UnivariatePoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dl = d.coeffs.last().unwrap();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let c = r.last().unwrap() / dl;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &c * dc;
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (UnivariatePoly::new(q), UnivariatePoly::new(r))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UnivariatePoly) -> UnivariatePoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.coeffs.last().cloned() {
            Some(l) => UnivariatePoly::new(a.coeffs.iter().map(|c| c / &l).collect()),
            None => a,
        }
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let first = s.is_empty();
            if c.is_negative() {
                s.push_str(if first { "-" } else { " - " });
            } else if !first {
                s.push_str(" + ");
            }
            let a = c.abs();
            let mono = match d {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{d}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }

    /// Product form such as `k*(k-1)` or `-2*(k-1/2)^2*(k^2 + 1)`.
    pub fn display_factored(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = self.factor();
        let mut parts: Vec<String> = Vec::new();
        for (r, m) in &f.roots {
            let base = if r.is_zero() {
                var.to_string()
            } else if r.is_negative() {
                format!("({var}+{})", r.abs())
            } else {
                format!("({var}-{r})")
            };
            parts.push(if *m == 1 { base } else { format!("{base}^{m}") });
        }
        if f.residual.degree().unwrap_or(0) > 0 {
            parts.push(format!("({})", f.residual.display_in(var)));
        }
        let body = parts.join("*");
        if body.is_empty() {
            return f.leading.to_string();
        }
        if f.leading.is_one() {
            body
        } else if (-f.leading.clone()).is_one() {
            format!("-{body}")
        } else {
            format!("{}*{body}", f.leading)
        }
    }
}

/// The common rational zeros of a family of polynomials, as the rational
/// roots of their gcd. `None` when every polynomial is zero (all values are
/// zeros) or when the gcd keeps a factor without rational roots, so that the
/// real zero set is not captured by rationals alone.
pub fn common_root_set(polys: &[UnivariatePoly]) -> Option<Vec<BigRational>> {
    let g = polys
        .iter()
        .fold(UnivariatePoly::new(Vec::new()), |acc, p| acc.gcd(p));
    g.rational_root_set()
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}
