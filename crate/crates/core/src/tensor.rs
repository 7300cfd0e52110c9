//! Dense rational 3- and 4-tensors on an orthonormal frame, for curvature
//! bookkeeping in the flat and homogeneous models.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::form::AltForm;
use crate::vector::AmbientVector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    n: usize,
    data: Vec<BigRational>,
}

impl Tensor3 {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    data.push(f(a, b, c));
                }
            }
        }
        Tensor3 { n, data }
    }

    /// Evaluation of a rational 3-form on the 7-frame.
    pub fn from_form(w: &AltForm) -> Option<Self> {
        if w.terms().any(|(_, c)| c.as_rational().is_none()) {
            return None;
        }
        let e = AmbientVector::basis;
        Some(Tensor3::from_fn(7, |a, b, c| {
            w.evaluate(&[e(a), e(b), e(c)]).as_rational().unwrap()
        }))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &BigRational {
        &self.data[(a * self.n + b) * self.n + c]
    }

    /// First violation of total antisymmetry, if any.
    pub fn skew_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let v = self.get(a, b, c);
                    if &-self.get(b, a, c) != v || &-self.get(a, c, b) != v {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// `Σ_i T(a, b, i) T(c, d, i)`, i.e. `Σ (e_i ⌟ T) ⊗ (e_i ⌟ T)`.
    pub fn contracted_square(&self) -> Tensor4 {
        let n = self.n;
        Tensor4::from_fn(n, |a, b, c, d| {
            let mut acc = BigRational::zero();
            for i in 0..n {
                acc += self.get(a, b, i) * self.get(c, d, i);
            }
            acc
        })
    }

    /// `Σ (e_i ⌟ T) ∧ (e_i ⌟ T)` as a 4-form evaluated on the frame.
    pub fn contracted_wedge(&self) -> Tensor4 {
        let s = self.contracted_square();
        let two = BigRational::from_integer(2.into());
        Tensor4::from_fn(self.n, |a, b, c, d| {
            (s.get(a, b, c, d) - s.get(a, c, b, d) + s.get(a, d, b, c)) * &two
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor4 {
    n: usize,
    data: Vec<BigRational>,
}

impl Tensor4 {
    pub fn zero(n: usize) -> Self {
        Tensor4 {
            n,
            data: vec![BigRational::zero(); n * n * n * n],
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize, usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(n * n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        data.push(f(a, b, c, d));
                    }
                }
            }
        }
        Tensor4 { n, data }
    }

    /// `Σ_j s_j β_j ⊗ β_j` for rational 2-forms on the 7-frame.
    pub fn sum_of_squares(terms: &[(BigRational, AltForm)]) -> Self {
        let e = AmbientVector::basis;
        let vals: Vec<Vec<Vec<BigRational>>> = terms
            .iter()
            .map(|(_, f)| {
                (0..7)
                    .map(|a| (0..7).map(|b| f.evaluate(&[e(a), e(b)]).as_rational().unwrap()).collect())
                    .collect()
            })
            .collect();
        Tensor4::from_fn(7, |a, b, c, d| {
            let mut acc = BigRational::zero();
            for (j, (s, _)) in terms.iter().enumerate() {
                acc += s * &vals[j][a][b] * &vals[j][c][d];
            }
            acc
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn idx(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        ((a * self.n + b) * self.n + c) * self.n + d
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> &BigRational {
        &self.data[self.idx(a, b, c, d)]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Tensor4) -> Tensor4 {
        Tensor4 {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Tensor4 {
        Tensor4 {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn sub(&self, other: &Tensor4) -> Tensor4 {
        self.add(&other.scale(&-BigRational::from_integer(1.into())))
    }

    /// First nonzero component.
    pub fn first_nonzero(&self) -> Option<((usize, usize, usize, usize), BigRational)> {
        let n = self.n;
        self.data.iter().position(|x| !x.is_zero()).map(|p| {
            let (a, r) = (p / (n * n * n), p % (n * n * n));
            let (b, r) = (r / (n * n), r % (n * n));
            ((a, b, r / n, r % n), self.data[p].clone())
        })
    }

    /// Components violating `R(a,b,c,d) + R(b,c,a,d) + R(c,a,b,d) = 0`.
    pub fn bianchi_violations(&self) -> usize {
        let n = self.n;
        let mut bad = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let s = self.get(a, b, c, d) + self.get(b, c, a, d) + self.get(c, a, b, d);
                        bad += usize::from(!s.is_zero());
                    }
                }
            }
        }
        bad
    }

    /// `Ric(y, z) = Σ_i R(e_i, y, z, e_i)`.
    pub fn ricci(&self) -> Vec<Vec<BigRational>> {
        let n = self.n;
        (0..n)
            .map(|y| {
                (0..n)
                    .map(|z| {
                        let mut acc = BigRational::zero();
                        for i in 0..n {
                            acc += self.get(i, y, z, i);
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Tensor4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_nonzero() {
            None => write!(f, "0"),
            Some(((a, b, c, d), v)) => write!(f, "R({a},{b},{c},{d}) = {v}, …"),
        }
    }
}
