//! Ambient vectors over `(e0, …, e6, U)` and skew endomorphisms of the tangent frame.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::form::{write_linear, DIM};
use crate::scalar::Scalar;

/// Index of the canonical vertical unit field `U` in an [`AmbientVector`].
pub const U: usize = 7;
pub const AMBIENT_DIM: usize = 8;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AmbientVector {
    c: [Scalar; AMBIENT_DIM],
}

impl AmbientVector {
    pub fn zero() -> Self {
        AmbientVector::default()
    }

    /// `e_i` for `i < 7`, or `U` for `i == 7`.
    pub fn basis(i: usize) -> Self {
        let mut v = AmbientVector::zero();
        v.c[i] = Scalar::one();
        v
    }

    pub fn u() -> Self {
        AmbientVector::basis(U)
    }

    pub fn from_components(c: [Scalar; AMBIENT_DIM]) -> Self {
        AmbientVector { c }
    }

    pub fn from_ints(c: [i64; AMBIENT_DIM]) -> Self {
        AmbientVector {
            c: c.map(Scalar::from),
        }
    }

    pub fn component(&self, i: usize) -> &Scalar {
        &self.c[i]
    }

    pub fn components(&self) -> &[Scalar; AMBIENT_DIM] {
        &self.c
    }

    pub fn set(&mut self, i: usize, s: Scalar) {
        self.c[i] = s;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    pub fn is_tangent(&self) -> bool {
        self.c[U].is_zero()
    }

    fn keep(&self, f: impl Fn(usize) -> bool) -> AmbientVector {
        let mut v = AmbientVector::zero();
        for i in (0..AMBIENT_DIM).filter(|&i| f(i)) {
            v.c[i] = self.c[i].clone();
        }
        v
    }

    /// `X^h`: components on `e0, …, e3`.
    pub fn horizontal(&self) -> AmbientVector {
        self.keep(|i| i < 4)
    }

    /// `X^v`: components on `e4, e5, e6` and `U`.
    pub fn vertical(&self) -> AmbientVector {
        self.keep(|i| i >= 4)
    }

    /// Drops the `U` component.
    pub fn tangent_part(&self) -> AmbientVector {
        self.keep(|i| i < U)
    }

    pub fn scale(&self, s: &Scalar) -> AmbientVector {
        AmbientVector {
            c: std::array::from_fn(|i| &self.c[i] * s),
        }
    }

    /// Euclidean inner product of the ambient `TM ⊕ TM` splitting.
    pub fn inner(&self, other: &AmbientVector) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..AMBIENT_DIM {
            acc += &self.c[i] * &other.c[i];
        }
        acc
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> AmbientVector {
        AmbientVector {
            c: std::array::from_fn(|i| f(&self.c[i])),
        }
    }
}

impl fmt::Display for AmbientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<(String, &Scalar)> = (0..AMBIENT_DIM)
            .filter(|&i| !self.c[i].is_zero())
            .map(|i| (if i == U { "U".to_string() } else { format!("e{i}") }, &self.c[i]))
            .collect();
        write_linear(f, &labels)
    }
}

impl Add for &AmbientVector {
    type Output = AmbientVector;
    fn add(self, rhs: &AmbientVector) -> AmbientVector {
        AmbientVector {
            c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]),
        }
    }
}

impl Sub for &AmbientVector {
    type Output = AmbientVector;
    fn sub(self, rhs: &AmbientVector) -> AmbientVector {
        AmbientVector {
            c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]),
        }
    }
}

impl Add for AmbientVector {
    type Output = AmbientVector;
    fn add(self, rhs: AmbientVector) -> AmbientVector {
        &self + &rhs
    }
}

impl Sub for AmbientVector {
    type Output = AmbientVector;
    fn sub(self, rhs: AmbientVector) -> AmbientVector {
        &self - &rhs
    }
}

impl Neg for &AmbientVector {
    type Output = AmbientVector;
    fn neg(self) -> AmbientVector {
        self.map(|s| -s)
    }
}

impl Neg for AmbientVector {
    type Output = AmbientVector;
    fn neg(self) -> AmbientVector {
        -&self
    }
}

/// A skew-symmetric endomorphism of the tangent frame.
///
/// `entry(c, b) = ⟨B e_b, e_c⟩`, so column `b` holds the image of `e_b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SkewEndo {
    m: [[Scalar; DIM]; DIM],
}

impl SkewEndo {
    pub fn zero() -> Self {
        SkewEndo::default()
    }

    /// Checks `M + Mᵀ = 0` entrywise.
    pub fn new(m: [[Scalar; DIM]; DIM]) -> Result<Self> {
        let e = SkewEndo { m };
        if e.is_skew() {
            Ok(e)
        } else {
            Err(Error::NotSkew)
        }
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Scalar) -> Result<Self> {
        SkewEndo::new(std::array::from_fn(|c| std::array::from_fn(|b| f(c, b))))
    }

    /// Builds the endomorphism sending `e_b` to `images[b]` (tangent parts only).
    pub fn from_images(images: &[AmbientVector; DIM]) -> Result<Self> {
        SkewEndo::from_fn(|c, b| images[b].component(c).clone())
    }

    fn is_skew(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| (&self.m[i][j] + &self.m[j][i]).is_zero()))
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.m[row][col]
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Scalar::is_zero)
    }

    /// Image of the tangent part of `v`; the result is tangent.
    pub fn apply(&self, v: &AmbientVector) -> AmbientVector {
        let mut out = AmbientVector::zero();
        for c in 0..DIM {
            let mut acc = Scalar::zero();
            for b in 0..DIM {
                acc += &self.m[c][b] * v.component(b);
            }
            out.set(c, acc);
        }
        out
    }

    pub fn image(&self, b: usize) -> AmbientVector {
        self.apply(&AmbientVector::basis(b))
    }

    pub fn add(&self, other: &SkewEndo) -> SkewEndo {
        SkewEndo {
            m: std::array::from_fn(|i| std::array::from_fn(|j| &self.m[i][j] + &other.m[i][j])),
        }
    }

    pub fn scale(&self, s: &Scalar) -> SkewEndo {
        SkewEndo {
            m: std::array::from_fn(|i| std::array::from_fn(|j| &self.m[i][j] * s)),
        }
    }

    /// Matrix commutator `AB - BA`, again skew.
    pub fn commutator(&self, other: &SkewEndo) -> SkewEndo {
        SkewEndo {
            m: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    let mut acc = Scalar::zero();
                    for l in 0..DIM {
                        acc += &self.m[i][l] * &other.m[l][j];
                        acc -= &(&other.m[i][l] * &self.m[l][j]);
                    }
                    acc
                })
            }),
        }
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> SkewEndo {
        SkewEndo {
            m: std::array::from_fn(|i| std::array::from_fn(|j| f(&self.m[i][j]))),
        }
    }
}
