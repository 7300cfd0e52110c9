//! Fiber octonions by Cayley-Dickson doubling of the vertical quaternions.
//!
//! An element is `a + b·ℓ` with `a = a₀U + a₁e4 + a₂e5 + a₃e6` and the second
//! quaternion `b` carried by `θᵗ` onto `b₀e0 + b₁e1 + b₂e2 + b₃e3`, where the
//! quaternion units are `(1, i, j, k)` with `ij = k`.

use std::fmt;

use crate::form::{AltForm, Blade};
use crate::scalar::Scalar;
use crate::vector::{AmbientVector, U};

/// Ambient indices of the first quaternion `(1, i, j, k)`.
const FIRST: [usize; 4] = [U, 4, 5, 6];
/// Ambient indices of the second quaternion.
const SECOND: [usize; 4] = [0, 1, 2, 3];

type Quat = [Scalar; 4];

fn qmul(p: &Quat, q: &Quat) -> Quat {
    let [a0, a1, a2, a3] = p;
    let [b0, b1, b2, b3] = q;
    [
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
}

fn qconj(p: &Quat) -> Quat {
    [p[0].clone(), -&p[1], -&p[2], -&p[3]]
}

fn qadd(p: &Quat, q: &Quat) -> Quat {
    std::array::from_fn(|i| &p[i] + &q[i])
}

fn qsub(p: &Quat, q: &Quat) -> Quat {
    std::array::from_fn(|i| &p[i] - &q[i])
}

/// The candidate doubling formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CdConvention {
    /// `(a, b)(c, d) = (ac - d̄b, da + bc̄)`.
    A,
    /// `(a, b)(c, d) = (ac - db̄, ād + cb)`.
    B,
    /// `A` with the factors swapped.
    AOp,
    /// `B` with the factors swapped.
    BOp,
}

impl CdConvention {
    pub const ALL: [CdConvention; 4] = [CdConvention::A, CdConvention::B, CdConvention::AOp, CdConvention::BOp];

    fn double(self, (a, b): (&Quat, &Quat), (c, d): (&Quat, &Quat)) -> (Quat, Quat) {
        match self {
            CdConvention::A => (
                qsub(&qmul(a, c), &qmul(&qconj(d), b)),
                qadd(&qmul(d, a), &qmul(b, &qconj(c))),
            ),
            CdConvention::B => (
                qsub(&qmul(a, c), &qmul(d, &qconj(b))),
                qadd(&qmul(&qconj(a), d), &qmul(c, b)),
            ),
            CdConvention::AOp => CdConvention::A.double((c, d), (a, b)),
            CdConvention::BOp => CdConvention::B.double((c, d), (a, b)),
        }
    }
}

/// The only candidate reproducing φ, see [`conventions_reproducing`].
pub const ACCEPTED: CdConvention = CdConvention::A;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberOctonion(AmbientVector);

impl FiberOctonion {
    pub fn new(v: AmbientVector) -> Self {
        FiberOctonion(v)
    }

    pub fn unit() -> Self {
        FiberOctonion(AmbientVector::u())
    }

    pub fn basis(i: usize) -> Self {
        FiberOctonion(AmbientVector::basis(i))
    }

    pub fn vector(&self) -> &AmbientVector {
        &self.0
    }

    fn halves(&self) -> (Quat, Quat) {
        (
            FIRST.map(|i| self.0.component(i).clone()),
            SECOND.map(|i| self.0.component(i).clone()),
        )
    }

    fn from_halves(a: Quat, b: Quat) -> Self {
        let mut v = AmbientVector::zero();
        for (i, s) in FIRST.into_iter().zip(a) {
            v.set(i, s);
        }
        for (i, s) in SECOND.into_iter().zip(b) {
            v.set(i, s);
        }
        FiberOctonion(v)
    }

    pub fn mult(&self, other: &FiberOctonion, conv: CdConvention) -> FiberOctonion {
        let (a, b) = self.halves();
        let (c, d) = other.halves();
        let (x, y) = conv.double((&a, &b), (&c, &d));
        FiberOctonion::from_halves(x, y)
    }

    pub fn conj(&self) -> FiberOctonion {
        let mut v = -&self.0;
        v.set(U, self.0.component(U).clone());
        FiberOctonion(v)
    }

    pub fn norm2(&self) -> Scalar {
        self.0.inner(&self.0)
    }
}

impl fmt::Display for FiberOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `φ_oct(x, y, z) = ⟨xy, z⟩` on the imaginary basis `e0, …, e6`.
pub fn derive_phi(conv: CdConvention) -> AltForm {
    let mut out = AltForm::zero();
    for blade in Blade::of_grade(3) {
        let [a, b, c]: [usize; 3] = blade.indices().try_into().expect("grade 3");
        let xy = FiberOctonion::basis(a).mult(&FiberOctonion::basis(b), conv);
        let coeff = xy.vector().component(c).clone();
        if !coeff.is_zero() {
            out.add_term(blade, coeff);
        }
    }
    out
}

/// Every candidate whose derived 3-form equals `target`.
pub fn conventions_reproducing(target: &AltForm) -> Vec<CdConvention> {
    CdConvention::ALL
        .into_iter()
        .filter(|&c| &derive_phi(c) == target)
        .collect()
}

fn label(i: usize) -> &'static str {
    ["U", "e0", "e1", "e2", "e3", "e4", "e5", "e6"][i]
}

/// Table order: `U` first, then `e0, …, e6`.
fn table_index(i: usize) -> usize {
    if i == 0 {
        U
    } else {
        i - 1
    }
}

/// The 8×8 table of basis products as signed basis labels, rows times columns.
pub fn multiplication_table_text(conv: CdConvention) -> String {
    let mut out = String::from("*");
    for j in 0..8 {
        out.push_str(&format!(" {:>3}", label(j)));
    }
    out.push('\n');
    for i in 0..8 {
        out.push_str(label(i));
        for j in 0..8 {
            let p = FiberOctonion::basis(table_index(i)).mult(&FiberOctonion::basis(table_index(j)), conv);
            let (pos, sign) = (0..8)
                .find_map(|t| {
                    let c = p.vector().component(table_index(t));
                    if c.is_zero() {
                        None
                    } else if c.is_one() {
                        Some((t, '+'))
                    } else {
                        Some((t, '-'))
                    }
                })
                .expect("basis products are signed basis elements");
            out.push_str(&format!(" {:>3}", format!("{sign}{}", label(pos))));
        }
        out.push('\n');
    }
    out
}

/// Ambient index of a table label, for parsing the golden table.
pub fn index_of_label(s: &str) -> Option<usize> {
    (0..8).find(|&t| label(t) == s).map(table_index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::DIM;
    use crate::frame::NamedFormCatalog;

    #[test]
    fn unit_is_two_sided() {
        let p = FiberOctonion::new(AmbientVector::from_ints([1, -2, 3, 0, 5, -1, 2, 7]));
        for conv in CdConvention::ALL {
            assert_eq!(FiberOctonion::unit().mult(&p, conv), p);
            assert_eq!(p.mult(&FiberOctonion::unit(), conv), p);
        }
    }

    #[test]
    fn exactly_one_convention_gives_phi() {
        let phi = NamedFormCatalog::new().phi;
        assert_eq!(conventions_reproducing(&phi), vec![ACCEPTED]);
        assert_eq!(derive_phi(ACCEPTED).coefficient(&[4, 5, 6]), Scalar::one());
    }

    #[test]
    fn imaginary_units_square_to_minus_one() {
        for i in 0..DIM {
            let e = FiberOctonion::basis(i);
            assert_eq!(e.mult(&e, ACCEPTED), FiberOctonion::new(-AmbientVector::u()));
        }
    }

    #[test]
    fn conjugate_gives_norm() {
        let p = FiberOctonion::new(AmbientVector::from_ints([1, -2, 3, 0, 5, -1, 2, 7]));
        let n = p.mult(&p.conj(), ACCEPTED);
        assert_eq!(n, FiberOctonion::new(AmbientVector::u().scale(&p.norm2())));
    }
}
