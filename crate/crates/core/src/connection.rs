//! The Levi-Civita connection of the sphere bundle on the adapted frame, and
//! the exterior derivative and codifferential it induces.
//!
//! `∇_X Y = ∇*_X Y - ½𝓡(X, Y) + A(X, Y)`, where on the frame
//! `∇*_X e0 = θᵗX`, `∇*_X e_i = -X_{i+3} e0` (`i = 1, 2, 3`) and
//! `∇*_X e_{i+3} = 0`, up to the rotation of `(e1, e2, e3)` together with
//! `(e4, e5, e6)` coming from the base connection. Every catalog form is
//! invariant under that rotation, so it drops out of all derivatives of
//! constant-coefficient combinations of the catalog.
//!
//! Forms are differentiated as constant-coefficient combinations of coframe
//! monomials: `∇_a ω = Γ_a·ω`, `dω = Σ e^a ∧ ∇_a ω`, `δω = -Σ e_a ⌟ ∇_a ω`.

use crate::curvature::CurvatureSpec;
use crate::error::{Error, Result};
use crate::form::{AltForm, DIM};
use crate::frame::theta_t;
use crate::scalar::Scalar;
use crate::vector::{AmbientVector, SkewEndo};

/// `∇*_X e_b` for a tangent `X`.
pub fn nabla_star(x: &AmbientVector, b: usize) -> AmbientVector {
    match b {
        0 => theta_t(x),
        1..=3 => -AmbientVector::basis(0).scale(x.component(b + 3)),
        _ => AmbientVector::zero(),
    }
}

#[derive(Clone, Debug)]
pub struct LeviCivita {
    spec: CurvatureSpec,
    gamma: Vec<SkewEndo>,
}

impl LeviCivita {
    pub fn new(spec: CurvatureSpec) -> Self {
        let half = Scalar::ratio(1, 2);
        let gamma = (0..DIM)
            .map(|a| {
                let x = AmbientVector::basis(a);
                let images: [AmbientVector; DIM] = std::array::from_fn(|b| {
                    let y = AmbientVector::basis(b);
                    let v = &(&nabla_star(&x, b) - &spec.cal_r(&x, &y).scale(&half)) + &spec.a_tensor(&x, &y);
                    assert!(v.is_tangent(), "∇_X Y must be tangent");
                    v
                });
                SkewEndo::from_images(&images).expect("Levi-Civita connection matrices are skew")
            })
            .collect();
        LeviCivita { spec, gamma }
    }

    pub fn constant_k(k: Scalar) -> Self {
        LeviCivita::new(CurvatureSpec::ConstantK(k))
    }

    pub fn symbolic_k() -> Self {
        LeviCivita::constant_k(Scalar::k())
    }

    pub fn spec(&self) -> &CurvatureSpec {
        &self.spec
    }

    /// `Γ_a` with `Γ_a[c][b] = ⟨∇_{e_a} e_b, e_c⟩`.
    pub fn gamma(&self, a: usize) -> &SkewEndo {
        &self.gamma[a]
    }

    /// `∇_{e_a} e_b`.
    pub fn nabla_basis(&self, a: usize, b: usize) -> AmbientVector {
        self.gamma[a].image(b)
    }

    /// `∇_{e_a} Y` for a constant-coefficient tangent field `Y`.
    pub fn nabla_vec(&self, a: usize, y: &AmbientVector) -> AmbientVector {
        self.gamma[a].apply(y)
    }

    fn check_constant(&self, w: &AltForm) -> Result<()> {
        if w.has_riemann() {
            Err(Error::NonConstantCoefficients)
        } else {
            Ok(())
        }
    }

    /// `∇_{e_a} ω`.
    pub fn nabla(&self, a: usize, w: &AltForm) -> Result<AltForm> {
        self.check_constant(w)?;
        Ok(w.endo_action(&self.gamma[a]))
    }

    /// `∇_X ω` for a constant-coefficient tangent direction `X`.
    pub fn nabla_along(&self, x: &AmbientVector, w: &AltForm) -> Result<AltForm> {
        let mut out = AltForm::zero();
        for a in 0..DIM {
            if !x.component(a).is_zero() {
                out += self.nabla(a, w)?.scale(x.component(a));
            }
        }
        Ok(out)
    }

    /// The summands `e^a ∧ ∇_a ω` of `dω`, one per frame direction.
    pub fn ext_d_contributions(&self, w: &AltForm) -> Result<Vec<AltForm>> {
        (0..DIM)
            .map(|a| Ok(AltForm::covector(a).wedge(&self.nabla(a, w)?)))
            .collect()
    }

    pub fn ext_d(&self, w: &AltForm) -> Result<AltForm> {
        Ok(self.ext_d_contributions(w)?.into_iter().collect())
    }

    pub fn codiff(&self, w: &AltForm) -> Result<AltForm> {
        let mut out = AltForm::zero();
        for a in 0..DIM {
            out -= &self.nabla(a, w)?.contract(a);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::NamedFormCatalog;

    #[test]
    fn metric_compatible_and_torsion_free() {
        // skewness of Γ is checked at construction; torsion-freeness on the frame:
        // ∇_a e_b - ∇_b e_a = [e_a, e_b], and e^0([e_a, e_b]) = -dμ(e_a, e_b)
        let lc = LeviCivita::symbolic_k();
        let dmu = NamedFormCatalog::new().dmu;
        for a in 0..DIM {
            for b in 0..DIM {
                let t = &lc.nabla_basis(a, b) - &lc.nabla_basis(b, a);
                assert_eq!(
                    t.component(0),
                    &-dmu.evaluate(&[AmbientVector::basis(a), AmbientVector::basis(b)])
                );
            }
        }
    }

    #[test]
    fn riemann_coefficients_are_rejected() {
        let lc = LeviCivita::new(CurvatureSpec::SymbolicRiemann);
        let (rho, _) = lc.spec().rho_rbar();
        assert_eq!(lc.ext_d(&rho), Err(Error::NonConstantCoefficients));
        assert!(lc.ext_d(&NamedFormCatalog::new().phi).is_ok());
    }

    #[test]
    fn derivation_on_products() {
        let lc = LeviCivita::symbolic_k();
        let c = NamedFormCatalog::new();
        for a in 0..DIM {
            let lhs = lc.nabla(a, &c.mu.wedge(&c.dmu)).unwrap();
            let rhs = lc.nabla(a, &c.mu).unwrap().wedge(&c.dmu) + c.mu.wedge(&lc.nabla(a, &c.dmu).unwrap());
            assert_eq!(lhs, rhs);
            // α₂ two ways: e^{12}∧e^6 + e^{23}∧e^4 + e^{31}∧e^5 and e^1∧(e^{26}) + …
            let e = AltForm::covector;
            let a2 = e(1).wedge(&e(2).wedge(&e(6))) + e(2).wedge(&e(3).wedge(&e(4))) + e(3).wedge(&e(1).wedge(&e(5)));
            assert_eq!(a2, c.alpha2);
            let leibniz: AltForm = [(1, 2, 6), (2, 3, 4), (3, 1, 5)]
                .iter()
                .map(|&(i, j, l)| {
                    let n = |f: &AltForm| lc.nabla(a, f).unwrap();
                    n(&e(i)).wedge(&e(j).wedge(&e(l)))
                        + e(i).wedge(&n(&e(j)).wedge(&e(l)))
                        + e(i).wedge(&e(j).wedge(&n(&e(l))))
                })
                .collect();
            assert_eq!(lc.nabla(a, &c.alpha2).unwrap(), leibniz);
        }
    }

    #[test]
    fn catalog_is_gauge_invariant() {
        // rotation generator of (e1, e2, e3) together with (e4, e5, e6)
        for (i, j) in [(1, 2), (2, 3), (3, 1)] {
            let g = SkewEndo::from_fn(|c, b| {
                let hit = |p: usize, q: usize| (c == p && b == q) as i64 - (c == q && b == p) as i64;
                Scalar::from(hit(i, j) + hit(i + 3, j + 3))
            })
            .unwrap();
            for (name, f) in NamedFormCatalog::new().entries() {
                assert!(f.endo_action(&g).is_zero(), "{name}");
            }
        }
    }
}
