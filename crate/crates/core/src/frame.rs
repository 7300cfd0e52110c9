//! The adapted frame: the map θ, the catalog of global forms, the fiber
//! quaternions and the algebraic structure equations among the forms.

use crate::error::{Error, Result};
use crate::form::{AltForm, DIM};
use crate::report::{Check, CheckReport};
use crate::scalar::Scalar;
use crate::vector::{AmbientVector, U};

/// `θ`: `e0 ↦ U`, `e_i ↦ e_{i+3}` for `i = 1, 2, 3`, zero on the vertical side.
pub fn theta(v: &AmbientVector) -> AmbientVector {
    let mut r = AmbientVector::zero();
    r.set(U, v.component(0).clone());
    for i in 1..=3 {
        r.set(i + 3, v.component(i).clone());
    }
    r
}

/// `θᵗ`, the metric transpose of θ: `U ↦ e0`, `e_{i+3} ↦ e_i`, zero on the horizontal side.
pub fn theta_t(v: &AmbientVector) -> AmbientVector {
    let mut r = AmbientVector::zero();
    r.set(0, v.component(U).clone());
    for i in 1..=3 {
        r.set(i, v.component(i + 3).clone());
    }
    r
}

/// `μ(X) = ⟨U, θX⟩`.
pub fn mu_of(v: &AmbientVector) -> Scalar {
    AmbientVector::u().inner(&theta(v))
}

/// `β(X, Y) = ⟨θX, Y⟩ - ⟨θY, X⟩`.
pub fn beta(x: &AmbientVector, y: &AmbientVector) -> Scalar {
    theta(x).inner(y) - theta(y).inner(x)
}

/// Names accepted by [`named_form`].
pub const FORM_NAMES: [&str; 9] = [
    "mu", "dmu", "vol", "alpha", "alpha1", "alpha2", "alpha3", "phi", "star_phi",
];

/// The global forms of the adapted coframe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedFormCatalog {
    pub mu: AltForm,
    pub dmu: AltForm,
    pub vol: AltForm,
    pub alpha: AltForm,
    pub alpha1: AltForm,
    pub alpha2: AltForm,
    pub alpha3: AltForm,
    pub phi: AltForm,
    pub star_phi: AltForm,
}

impl NamedFormCatalog {
    pub fn new() -> Self {
        let mu = AltForm::covector(0);
        let dmu = AltForm::from_terms(&[(1, &[4, 1]), (1, &[5, 2]), (1, &[6, 3])]);
        let vol = AltForm::monomial(&[0, 1, 2, 3]);
        let alpha = AltForm::monomial(&[4, 5, 6]);
        let alpha1 = AltForm::from_terms(&[(1, &[1, 5, 6]), (1, &[2, 6, 4]), (1, &[3, 4, 5])]);
        let alpha2 = AltForm::from_terms(&[(1, &[1, 2, 6]), (1, &[2, 3, 4]), (1, &[3, 1, 5])]);
        let alpha3 = AltForm::monomial(&[1, 2, 3]);
        let phi = &(&alpha - &mu.wedge(&dmu)) - &alpha2;
        let half = Scalar::ratio(1, 2);
        let star_phi = &(&vol - &dmu.wedge(&dmu).scale(&half)) - &mu.wedge(&alpha1);
        NamedFormCatalog {
            mu,
            dmu,
            vol,
            alpha,
            alpha1,
            alpha2,
            alpha3,
            phi,
            star_phi,
        }
    }

    pub fn get(&self, name: &str) -> Result<&AltForm> {
        Ok(match name {
            "mu" => &self.mu,
            "dmu" => &self.dmu,
            "vol" => &self.vol,
            "alpha" | "alpha0" => &self.alpha,
            "alpha1" => &self.alpha1,
            "alpha2" => &self.alpha2,
            "alpha3" => &self.alpha3,
            "phi" => &self.phi,
            "star_phi" => &self.star_phi,
            _ => return Err(Error::UnknownForm(name.to_string())),
        })
    }

    /// `(name, form)` pairs in catalog order.
    pub fn entries(&self) -> Vec<(&'static str, &AltForm)> {
        FORM_NAMES.iter().map(|n| (*n, self.get(n).unwrap())).collect()
    }
}

impl Default for NamedFormCatalog {
    fn default() -> Self {
        NamedFormCatalog::new()
    }
}

pub fn named_form(name: &str) -> Result<AltForm> {
    NamedFormCatalog::new().get(name).cloned()
}

/// The algebraic identities among the catalog forms, and `β = -dμ` on the frame.
pub fn verify_structure_equations() -> CheckReport {
    let c = NamedFormCatalog::new();
    let mut r = CheckReport::new("structure");
    let vol7 = AltForm::volume();
    let dmu2 = c.dmu.wedge(&c.dmu);
    let dmu3 = dmu2.wedge(&c.dmu);
    let half = Scalar::ratio(1, 2);

    r.push(Check::equal("structure.star_alpha", "*α = vol", &c.alpha.hodge(), &c.vol));
    r.push(Check::equal("structure.vol_mu_alpha3", "vol = μ∧α₃", &c.vol, &c.mu.wedge(&c.alpha3)));
    r.push(Check::equal(
        "structure.star_alpha1",
        "*α₁ = -μ∧α₂",
        &c.alpha1.hodge(),
        &-c.mu.wedge(&c.alpha2),
    ));
    r.push(Check::equal(
        "structure.star_alpha2",
        "*α₂ = μ∧α₁",
        &c.alpha2.hodge(),
        &c.mu.wedge(&c.alpha1),
    ));
    r.push(Check::equal(
        "structure.star_dmu",
        "*dμ = ½ μ∧(dμ)²",
        &c.dmu.hodge(),
        &c.mu.wedge(&dmu2).scale(&half),
    ));
    r.push(Check::equal(
        "structure.star_dmu2",
        "*(dμ)² = 2 μ∧dμ",
        &dmu2.hodge(),
        &c.mu.wedge(&c.dmu).scale(&Scalar::from(2)),
    ));
    r.push(Check::equal(
        "structure.dmu3_mu",
        "(dμ)³∧μ = 6 Vol",
        &dmu3.wedge(&c.mu),
        &vol7.scale(&Scalar::from(6)),
    ));
    r.push(Check::equal(
        "structure.alpha1_alpha2",
        "α₁∧α₂ = 3 *μ",
        &c.alpha1.wedge(&c.alpha2),
        &c.mu.hodge().scale(&Scalar::from(3)),
    ));
    r.push(Check::equal(
        "structure.half_dmu3",
        "3 *μ = ½ (dμ)³",
        &c.mu.hodge().scale(&Scalar::from(3)),
        &dmu3.scale(&half),
    ));
    let alphas = [&c.alpha, &c.alpha1, &c.alpha2];
    let mut annihilators = AltForm::zero();
    let mut bad = Vec::new();
    for (i, a) in alphas.iter().enumerate() {
        for (what, f) in [
            ("dμ∧α", c.dmu.wedge(a)),
            ("dμ∧*α", c.dmu.wedge(&a.hodge())),
            ("α₀∧α", c.alpha.wedge(a)),
        ] {
            if !f.is_zero() {
                bad.push(format!("{what}{i} = {f}"));
            }
            annihilators += f;
        }
    }
    r.push(Check::new(
        "structure.annihilators",
        "dμ∧α_i = dμ∧*α_i = α₀∧α_i = 0, i = 0, 1, 2",
        if annihilators.is_zero() { Ok(()) } else { Err(bad.join("; ")) },
    ));
    r.push(Check::new("structure.beta", "β = -dμ on all frame pairs", check_beta(&c.dmu)));
    r.push(Check::equal("structure.star_phi", "*φ = vol - ½(dμ)² - μ∧α₁", &c.phi.hodge(), &c.star_phi));
    r.push(Check::equal("structure.phi_norm", "⟨φ, φ⟩ = 7", &c.phi.inner(&c.phi), &Scalar::from(7)));
    r.push(Check::equal(
        "structure.phi_star_phi",
        "φ∧*φ = 7 Vol",
        &c.phi.wedge(&c.star_phi),
        &vol7.scale(&Scalar::from(7)),
    ));
    r
}

fn check_beta(dmu: &AltForm) -> std::result::Result<(), String> {
    for a in 0..DIM {
        for b in 0..DIM {
            let x = AmbientVector::basis(a);
            let y = AmbientVector::basis(b);
            let lhs = beta(&x, &y);
            let rhs = -dmu.evaluate(&[x, y]);
            if lhs != rhs {
                return Err(format!("β(e{a}, e{b}) = {lhs}, -dμ(e{a}, e{b}) = {rhs}"));
            }
        }
    }
    Ok(())
}

fn require_fiber(v: &AmbientVector) -> Result<()> {
    if (4..=U).all(|i| v.component(i).is_zero()) {
        Ok(())
    } else {
        Err(Error::NonFiber)
    }
}

/// Cross product on `u^⊥ = span(e1, e2, e3)`: `⟨X × Y, Z⟩ = vol(u, X, Y, Z)`.
pub fn cross(x: &AmbientVector, y: &AmbientVector) -> AmbientVector {
    let vol = NamedFormCatalog::new().vol;
    let one = vol
        .interior(&AmbientVector::basis(0))
        .interior(x)
        .interior(y);
    one.sharp().unwrap_or_default()
}

/// Quaternion product on the horizontal fiber `span(e0, e1, e2, e3)` with
/// `u = e0` the unit: `(λ₁u + X₁)(λ₂u + X₂) = (λ₁λ₂ - ⟨X₁, X₂⟩)u + λ₁X₂ + λ₂X₁ + X₁ × X₂`.
pub fn quaternion_mult(p: &AmbientVector, q: &AmbientVector) -> Result<AmbientVector> {
    require_fiber(p)?;
    require_fiber(q)?;
    let split = |v: &AmbientVector| {
        let mut x = v.clone();
        x.set(0, Scalar::zero());
        (v.component(0).clone(), x)
    };
    let (l1, x1) = split(p);
    let (l2, x2) = split(q);
    let mut out = &(&x2.scale(&l1) + &x1.scale(&l2)) + &cross(&x1, &x2);
    out.set(0, &l1 * &l2 - x1.inner(&x2));
    Ok(out)
}

/// `|p|²` on the fiber.
pub fn norm2(p: &AmbientVector) -> Scalar {
    p.inner(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_tables() {
        assert_eq!(theta(&AmbientVector::basis(0)), AmbientVector::u());
        assert_eq!(theta(&AmbientVector::basis(2)), AmbientVector::basis(5));
        assert!(theta(&AmbientVector::basis(6)).is_zero());
        assert!(theta(&AmbientVector::u()).is_zero());
        assert_eq!(theta_t(&AmbientVector::u()), AmbientVector::basis(0));
        assert_eq!(theta_t(&AmbientVector::basis(4)), AmbientVector::basis(1));
        assert!(theta_t(&AmbientVector::basis(1)).is_zero());
    }

    #[test]
    fn theta_compositions_on_tangent_inputs() {
        for i in 0..DIM {
            let x = AmbientVector::basis(i);
            assert!(theta(&theta(&x)).is_zero());
            let proj_h = if (1..=3).contains(&i) { x.clone() } else { AmbientVector::zero() };
            assert_eq!(theta_t(&theta(&x)), if i == 0 { x.clone() } else { proj_h });
            let proj_v = if (4..=6).contains(&i) { x.clone() } else { AmbientVector::zero() };
            assert_eq!(theta(&theta_t(&x)), proj_v);
        }
    }

    #[test]
    fn mu_three_ways() {
        let mu = named_form("mu").unwrap();
        for i in 0..DIM {
            let x = AmbientVector::basis(i);
            let a = mu_of(&x);
            assert_eq!(a, theta_t(&AmbientVector::u()).inner(&x));
            assert_eq!(a, mu.evaluate(&[x]));
        }
    }

    #[test]
    fn phi_expansion() {
        let phi = named_form("phi").unwrap();
        let expected = AltForm::from_terms(&[
            (1, &[4, 5, 6]),
            (-1, &[0, 4, 1]),
            (-1, &[0, 5, 2]),
            (-1, &[0, 6, 3]),
            (-1, &[1, 2, 6]),
            (-1, &[2, 3, 4]),
            (-1, &[3, 1, 5]),
        ]);
        assert_eq!(phi, expected);
        assert_eq!(phi.len(), 7);
        assert!(phi.terms().all(|(_, c)| c == &Scalar::one() || c == &Scalar::from(-1)));
        assert!(matches!(named_form("psi"), Err(Error::UnknownForm(_))));
    }

    #[test]
    fn quaternion_examples() {
        let e = AmbientVector::basis;
        let p = AmbientVector::from_ints([3, -1, 2, 5, 0, 0, 0, 0]);
        assert_eq!(quaternion_mult(&e(0), &p).unwrap(), p);
        assert_eq!(quaternion_mult(&e(1), &e(1)).unwrap(), -e(0));
        assert_eq!(quaternion_mult(&e(1), &e(2)).unwrap(), e(3));
        assert_eq!(quaternion_mult(&e(2), &e(1)).unwrap(), -e(3));
        assert_eq!(quaternion_mult(&e(4), &e(1)), Err(Error::NonFiber));
    }

    #[test]
    fn structure_equations_pass() {
        let r = verify_structure_equations();
        assert!(r.all_passed(), "{r}");
    }
}
