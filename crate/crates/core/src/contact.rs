//! The metric almost contact structure `(g̃, η, ξ, φ_c) = (g/4, μ/2, 2θᵗU,
//! θ - U⊗μ - θᵗ)`, the K-contact and Sasakian conditions, and the
//! η-Einstein analysis of the Ricci tensor.

use num_rational::BigRational;

use crate::connection::LeviCivita;
use crate::error::{Error, Result};
use crate::form::{AltForm, DIM};
use crate::frame::{mu_of, theta, theta_t, NamedFormCatalog};
use crate::generator_derivatives;
use crate::poly::UnivariatePoly;
use crate::report::{Check, CheckReport};
use crate::scalar::{Scalar, Symbol};
use crate::tensor::Tensor4;
use crate::vector::{AmbientVector, SkewEndo};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactStructure {
    pub metric_scale: Scalar,
    pub eta: AltForm,
    pub xi: AmbientVector,
    pub phi: SkewEndo,
}

impl ContactStructure {
    pub fn new() -> Self {
        let c = NamedFormCatalog::new();
        let images: [AmbientVector; DIM] = std::array::from_fn(|b| {
            let x = AmbientVector::basis(b);
            let v = &(&theta(&x) - &AmbientVector::u().scale(&mu_of(&x))) - &theta_t(&x);
            v.tangent_part()
        });
        ContactStructure {
            metric_scale: Scalar::ratio(1, 4),
            eta: c.mu.scale(&Scalar::ratio(1, 2)),
            xi: AmbientVector::basis(0).scale(&Scalar::from(2)),
            phi: SkewEndo::from_images(&images).expect("φ_c is skew"),
        }
    }

    /// `g̃(X, Y)`.
    pub fn metric(&self, x: &AmbientVector, y: &AmbientVector) -> Scalar {
        &self.metric_scale * &x.inner(y)
    }

    pub fn eta_of(&self, x: &AmbientVector) -> Scalar {
        self.eta.evaluate(std::slice::from_ref(x))
    }

    /// `F(X, Y) = g̃(X, φ_c Y)`.
    pub fn fundamental_form(&self) -> AltForm {
        let mut f = AltForm::zero();
        for a in 0..DIM {
            for b in a + 1..DIM {
                let v = self.metric(&AmbientVector::basis(a), &self.phi.image(b));
                if !v.is_zero() {
                    f += AltForm::monomial(&[a, b]).scale(&v);
                }
            }
        }
        f
    }

    /// The four axioms and `dη = 2F`.
    pub fn verify_almost_contact(&self) -> CheckReport {
        let mut r = CheckReport::new("contact");
        let e = AmbientVector::basis;
        r.push(Check::equal("contact.eta_xi", "η(ξ) = 1", &self.eta_of(&self.xi), &Scalar::one()));
        r.push(Check::equal(
            "contact.phi_xi",
            "φ_c(ξ) = 0",
            &self.phi.apply(&self.xi),
            &AmbientVector::zero(),
        ));
        let square = (0..DIM).find_map(|b| {
            let x = e(b);
            let lhs = self.phi.apply(&self.phi.apply(&x));
            let rhs = &-&x + &self.xi.scale(&self.eta_of(&x));
            (lhs != rhs).then(|| format!("on e{b}: got {lhs}, expected {rhs}"))
        });
        r.push(Check::new("contact.phi_square", "φ_c² = -Id + η⊗ξ", square.map_or(Ok(()), Err)));
        let mut compat = Ok(());
        'outer: for a in 0..DIM {
            for b in 0..DIM {
                let (x, y) = (e(a), e(b));
                let lhs = self.metric(&self.phi.apply(&x), &self.phi.apply(&y));
                let rhs = self.metric(&x, &y) - &self.eta_of(&x) * &self.eta_of(&y);
                if lhs != rhs {
                    compat = Err(format!("on (e{a}, e{b}): got {lhs}, expected {rhs}"));
                    break 'outer;
                }
            }
        }
        r.push(Check::new("contact.compatible_metric", "g̃(φ_cX, φ_cY) = g̃(X,Y) - η(X)η(Y)", compat));
        let d_eta = LeviCivita::symbolic_k().ext_d(&self.eta).expect("constant coefficients");
        r.push(Check::equal(
            "contact.d_eta",
            "dη = 2F",
            &d_eta,
            &self.fundamental_form().scale(&Scalar::from(2)),
        ));
        r
    }

    /// `∇_{e_a} ξ + φ_c(e_a)` for each frame direction.
    pub fn k_contact_defect(&self, lc: &LeviCivita) -> Vec<AmbientVector> {
        (0..DIM)
            .map(|a| &lc.nabla_vec(a, &self.xi) + &self.phi.image(a))
            .collect()
    }

    /// `(∇_{e_a} φ_c)(e_b) - g̃(e_a, e_b)ξ + η(e_b)e_a`, indexed `[a][b]`.
    pub fn sasakian_defect(&self, lc: &LeviCivita) -> Vec<Vec<AmbientVector>> {
        (0..DIM)
            .map(|a| {
                let dphi = lc.gamma(a).commutator(&self.phi);
                (0..DIM)
                    .map(|b| &dphi.image(b) - &self.sasakian_rhs(a, b))
                    .collect()
            })
            .collect()
    }

    /// `g̃(e_a, e_b)ξ - η(e_b)e_a`.
    pub fn sasakian_rhs(&self, a: usize, b: usize) -> AmbientVector {
        let (x, y) = (AmbientVector::basis(a), AmbientVector::basis(b));
        &self.xi.scale(&self.metric(&x, &y)) - &x.scale(&self.eta_of(&y))
    }

    /// `∇_{e_a} φ_c` read off from `∇_{e_a} dμ` through `dμ(X, Y) = g(X, φ_c Y)`.
    pub fn nabla_phi_from_dmu(&self, k: &Scalar, a: usize) -> SkewEndo {
        let ndmu = generator_derivatives::dmu(k, &AmbientVector::basis(a));
        SkewEndo::from_fn(|c, b| ndmu.evaluate(&[AmbientVector::basis(c), AmbientVector::basis(b)]))
            .expect("2-forms give skew endomorphisms")
    }

    /// `η∧dη` in `g̃`-units, defined for `k = 1` only.
    pub fn contact_connection_torsion(&self, k: &Scalar) -> Result<AltForm> {
        if !k.is_one() {
            return Err(Error::Precondition("contact connection torsion requires k = 1".into()));
        }
        let lc = LeviCivita::constant_k(k.clone());
        Ok(self.eta.wedge(&lc.ext_d(&self.eta)?))
    }
}

impl Default for ContactStructure {
    fn default() -> Self {
        ContactStructure::new()
    }
}

/// `dμ(X, Y) = g(X, φ_c Y)` on all frame pairs.
pub fn dmu_phi_identity(cs: &ContactStructure) -> bool {
    let dmu = NamedFormCatalog::new().dmu;
    (0..DIM).all(|a| {
        (0..DIM).all(|b| {
            let (x, y) = (AmbientVector::basis(a), AmbientVector::basis(b));
            dmu.evaluate(&[x.clone(), y]) == x.inner(&cs.phi.image(b))
        })
    })
}

/// The Ricci tensor of the Sasaki metric over a constant-curvature base of dimension `m`:
/// `Ric = h ⟨·,·⟩_H + v ⟨·,·⟩_V + c μ⊗μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RicciModel {
    pub m: i64,
    pub k: Scalar,
}

impl RicciModel {
    pub fn new(m: i64, k: Scalar) -> Self {
        RicciModel { m, k }
    }

    /// `(m - 1)k - k²/2`.
    pub fn horizontal(&self) -> Scalar {
        &(&self.k * &Scalar::from(self.m - 1)) - &(&self.k.pow(2) * &Scalar::ratio(1, 2))
    }

    /// `m - 2 + k²/2`.
    pub fn vertical(&self) -> Scalar {
        Scalar::from(self.m - 2) + &self.k.pow(2) * &Scalar::ratio(1, 2)
    }

    /// `(k²/2)(2 - m)`.
    pub fn mu_mu(&self) -> Scalar {
        &self.k.pow(2) * &Scalar::ratio(2 - self.m, 2)
    }

    /// The model on the 7-frame, `m = 4`.
    pub fn frame_matrix(&self) -> Result<Vec<Vec<Scalar>>> {
        if self.m != 4 {
            return Err(Error::DimensionMismatch(4, self.m as usize));
        }
        let (h, v, c) = (self.horizontal(), self.vertical(), self.mu_mu());
        Ok((0..DIM)
            .map(|a| {
                (0..DIM)
                    .map(|b| match (a == b, a) {
                        (false, _) => Scalar::zero(),
                        (true, 0) => &h + &c,
                        (true, 1..=3) => h.clone(),
                        (true, _) => v.clone(),
                    })
                    .collect()
            })
            .collect())
    }
}

/// Outcome of solving `Ric = λg̃ + νη⊗η` with constant `λ, ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaEinstein {
    pub m: i64,
    /// Horizontal minus vertical coefficient, as a polynomial in `k`.
    pub condition: UnivariatePoly,
    pub roots: Vec<BigRational>,
    /// `(k, λ, ν)` for each root, in the `g̃ = g/4`, `η = μ/2` normalization.
    pub constants: Vec<(BigRational, BigRational, BigRational)>,
}

pub fn eta_einstein_analysis(m: i64) -> Result<EtaEinstein> {
    if m < 3 {
        return Err(Error::Precondition("m ≥ 3".into()));
    }
    let model = RicciModel::new(m, Scalar::k());
    let condition = (model.horizontal() - model.vertical())
        .to_univariate(Symbol::K)
        .expect("polynomial in k");
    let roots = condition.rational_root_set().unwrap_or_default();
    let four = Scalar::from(4);
    let constants = roots
        .iter()
        .map(|r| {
            let at = RicciModel::new(m, Scalar::from_rational(r.clone()));
            let lambda = (&at.horizontal() * &four).as_rational().expect("rational");
            let nu = (&at.mu_mu() * &four).as_rational().expect("rational");
            (r.clone(), lambda, nu)
        })
        .collect();
    Ok(EtaEinstein { m, condition, roots, constants })
}

/// Ricci contraction of the flat Gauss curvature against the model at `k = 0`, `m = 4`.
pub fn flat_ricci_crosscheck(rg: &Tensor4) -> std::result::Result<(), String> {
    compare_ricci(rg, &RicciModel::new(4, Scalar::zero()))
}

/// Contract `R` and compare with the model on every frame pair.
pub fn compare_ricci(r: &Tensor4, model: &RicciModel) -> std::result::Result<(), String> {
    let ric = r.ricci();
    let expected = model.frame_matrix().map_err(|e| e.to_string())?;
    for a in 0..DIM {
        for b in 0..DIM {
            let got = Scalar::from_rational(ric[a][b].clone());
            if got != expected[a][b] {
                return Err(format!("Ric(e{a}, e{b}): got {got}, expected {}", expected[a][b]));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flat::gauss_curvature;
    use crate::scalar::{common_zeros, rational};
    use crate::torsion::constant_curvature_torsion;

    #[test]
    fn axioms_hold() {
        let r = ContactStructure::new().verify_almost_contact();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn phi_table() {
        let cs = ContactStructure::new();
        assert!(cs.phi.image(0).is_zero());
        assert_eq!(cs.phi.image(1), AmbientVector::basis(4));
        assert_eq!(cs.phi.image(5), -AmbientVector::basis(2));
        assert!(dmu_phi_identity(&cs));
    }

    #[test]
    fn k_contact_defect_table() {
        let cs = ContactStructure::new();
        let k = Scalar::k();
        let d = cs.k_contact_defect(&LeviCivita::constant_k(k.clone()));
        let one_minus_k = Scalar::one() - &k;
        assert!(d[0].is_zero());
        for i in 1..=3 {
            assert_eq!(d[i], AmbientVector::basis(i + 3).scale(&one_minus_k));
            assert_eq!(d[i + 3], AmbientVector::basis(i).scale(&one_minus_k));
        }
        let comps: Vec<Scalar> = d.iter().flat_map(|v| v.components().to_vec()).collect();
        assert_eq!(common_zeros(&comps, Symbol::K), Some(vec![rational(1, 1)]));
        let at_zero = cs.k_contact_defect(&LeviCivita::constant_k(Scalar::zero()));
        assert!(at_zero.iter().any(|v| !v.is_zero()));
    }

    #[test]
    fn sasakian_at_one_and_not_elsewhere() {
        let cs = ContactStructure::new();
        let one = LeviCivita::constant_k(Scalar::one());
        assert!(cs.sasakian_defect(&one).iter().flatten().all(AmbientVector::is_zero));
        assert_eq!(cs.sasakian_rhs(1, 1), cs.xi.scale(&Scalar::ratio(1, 4)));
        let sym = LeviCivita::symbolic_k();
        let comps: Vec<Scalar> = cs
            .sasakian_defect(&sym)
            .iter()
            .flatten()
            .flat_map(|v| v.components().to_vec())
            .collect();
        assert_eq!(common_zeros(&comps, Symbol::K), Some(vec![rational(1, 1)]));
    }

    #[test]
    fn commutator_matches_dmu_route() {
        let cs = ContactStructure::new();
        let lc = LeviCivita::symbolic_k();
        for a in 0..DIM {
            assert_eq!(lc.gamma(a).commutator(&cs.phi), cs.nabla_phi_from_dmu(&Scalar::k(), a), "e{a}");
        }
    }

    #[test]
    fn eta_einstein_m4() {
        let r = eta_einstein_analysis(4).unwrap();
        assert_eq!(r.roots, vec![rational(1, 1), rational(2, 1)]);
        let (_, lambda, nu) = &r.constants[0];
        assert_eq!((lambda.clone(), nu.clone()), (rational(10, 1), rational(-4, 1)));
        assert_eq!(lambda + nu, rational(6, 1));
        assert!(eta_einstein_analysis(2).is_err());
    }

    #[test]
    fn ricci_at_one() {
        let m = RicciModel::new(4, Scalar::one()).frame_matrix().unwrap();
        assert_eq!(m[0][0], Scalar::ratio(3, 2));
        assert_eq!(m[1][1], Scalar::ratio(5, 2));
        assert_eq!(m[4][4], Scalar::ratio(5, 2));
    }

    #[test]
    fn flat_ricci() {
        assert_eq!(flat_ricci_crosscheck(&gauss_curvature()), Ok(()));
    }

    #[test]
    fn contact_torsion() {
        let cs = ContactStructure::new();
        let c = NamedFormCatalog::new();
        let t = cs.contact_connection_torsion(&Scalar::one()).unwrap();
        assert_eq!(t, c.mu.wedge(&c.dmu).scale(&Scalar::ratio(1, 4)));
        assert_eq!(t.scale(&Scalar::from(4)), constant_curvature_torsion(&Scalar::one()));
        assert!(cs.contact_connection_torsion(&Scalar::ratio(1, 2)).is_err());
    }
}
