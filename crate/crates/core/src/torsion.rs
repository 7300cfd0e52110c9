//! Characteristic torsion, the characteristic connection, the parallel-torsion
//! criterion and the `Λ³ = Λ³₁ ⊕ Λ³₇ ⊕ Λ³₂₇` splitting.

use num_rational::BigRational;

use crate::connection::LeviCivita;
use crate::error::{Error, Result};
use crate::form::{AltForm, DIM};
use crate::frame::NamedFormCatalog;
use crate::poly::UnivariatePoly;
use crate::scalar::{common_zeros, Scalar, Symbol};
use crate::vector::{AmbientVector, SkewEndo};

/// `*dφ - (1/6)⟨dφ, *φ⟩ φ`, computed without any precondition.
pub fn torsion_formula(lc: &LeviCivita) -> Result<AltForm> {
    let c = NamedFormCatalog::new();
    let dphi = lc.ext_d(&c.phi)?;
    let q = dphi.inner(&c.star_phi) * Scalar::ratio(1, 6);
    Ok(&dphi.hodge() - &c.phi.scale(&q))
}

/// `*(𝓡α) + ((2λ - 6)/3)α + (λ/3)μ∧dμ + (λ/3)α₂` for an Einstein base.
pub fn einstein_closed_form(r_alpha: &AltForm, lambda: &Scalar) -> AltForm {
    let c = NamedFormCatalog::new();
    let third = lambda * &Scalar::ratio(1, 3);
    let a = &(lambda * &Scalar::from(2) - Scalar::from(6)) * &Scalar::ratio(1, 3);
    [
        r_alpha.hodge(),
        c.alpha.scale(&a),
        c.mu.wedge(&c.dmu).scale(&third),
        c.alpha2.scale(&third),
    ]
    .into_iter()
    .collect()
}

/// `2(k - 1)α + k μ∧dμ`.
pub fn constant_curvature_torsion(k: &Scalar) -> AltForm {
    let c = NamedFormCatalog::new();
    &c.alpha.scale(&(&(k - &Scalar::one()) * &Scalar::from(2))) + &c.mu.wedge(&c.dmu).scale(k)
}

/// A torsion 3-form together with its endomorphisms `T_X = T(X, ·, ·)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionData {
    form: AltForm,
}

impl TorsionData {
    pub fn new(form: AltForm) -> Result<Self> {
        if form.grade() != Some(3) && !form.is_zero() {
            return Err(Error::Precondition("a 3-form".into()));
        }
        Ok(TorsionData { form })
    }

    pub fn form(&self) -> &AltForm {
        &self.form
    }

    /// `T_a[c][b] = T(e_a, e_b, e_c)`.
    pub fn endo(&self, a: usize) -> SkewEndo {
        let ta = self.form.contract(a);
        SkewEndo::from_fn(|c, b| ta.contract(b).contract(c).scalar_part()).expect("a 3-form gives skew endomorphisms")
    }

    /// `T(X, Y)` as a tangent vector.
    pub fn vector(&self, x: &AmbientVector, y: &AmbientVector) -> AmbientVector {
        let one = self.form.interior(x).interior(y);
        one.sharp().unwrap_or_default()
    }
}

/// The characteristic torsion; refuses bases for which `φ` is not cocalibrated (`ρ ≠ 0`).
pub fn characteristic_torsion(lc: &LeviCivita) -> Result<TorsionData> {
    let (rho, _) = lc.spec().rho_rbar();
    if !rho.is_zero() {
        return Err(Error::NotCocalibrated);
    }
    TorsionData::new(torsion_formula(lc)?)
}

/// `∇^ch = ∇^g + ½T^c`.
#[derive(Clone, Debug)]
pub struct CharacteristicConnection {
    lc: LeviCivita,
    torsion: TorsionData,
    mats: Vec<SkewEndo>,
}

impl CharacteristicConnection {
    pub fn new(lc: LeviCivita) -> Result<Self> {
        let torsion = characteristic_torsion(&lc)?;
        Ok(CharacteristicConnection::with_torsion(lc, torsion))
    }

    pub fn with_torsion(lc: LeviCivita, torsion: TorsionData) -> Self {
        let half = Scalar::ratio(1, 2);
        let mats = (0..DIM)
            .map(|a| lc.gamma(a).add(&torsion.endo(a).scale(&half)))
            .collect();
        CharacteristicConnection { lc, torsion, mats }
    }

    pub fn torsion(&self) -> &TorsionData {
        &self.torsion
    }

    pub fn levi_civita(&self) -> &LeviCivita {
        &self.lc
    }

    pub fn matrix(&self, a: usize) -> &SkewEndo {
        &self.mats[a]
    }

    pub fn nabla(&self, a: usize, w: &AltForm) -> Result<AltForm> {
        if w.has_riemann() {
            return Err(Error::NonConstantCoefficients);
        }
        Ok(w.endo_action(&self.mats[a]))
    }
}

/// `X^v ⌟ (μ∧α₁ - ½(dμ)²)`, the direction-dependent part of `∇^ch_X T^c`.
pub fn parallel_torsion_shape(x: &AmbientVector) -> AltForm {
    let c = NamedFormCatalog::new();
    let q = &c.mu.wedge(&c.alpha1) - &c.dmu.wedge(&c.dmu).scale(&Scalar::ratio(1, 2));
    q.interior(&x.vertical())
}

/// Result of comparing `∇^ch_{e_a} T^c` with `c(k) · e_a^v ⌟ (μ∧α₁ - ½(dμ)²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelTorsion {
    /// `∇^ch_{e_a} T^c` for `a = 0, …, 6`.
    pub derivatives: Vec<AltForm>,
    /// The common scalar factor `c(k)`, when every direction is proportional to its shape.
    pub factor: Option<Scalar>,
    pub horizontal_vanish: bool,
}

impl ParallelTorsion {
    pub fn compute(ch: &CharacteristicConnection) -> Result<Self> {
        let t = ch.torsion().form().clone();
        let derivatives: Vec<AltForm> = (0..DIM).map(|a| ch.nabla(a, &t)).collect::<Result<_>>()?;
        let horizontal_vanish = derivatives[..4].iter().all(AltForm::is_zero);
        let mut factor: Option<Scalar> = None;
        let mut consistent = true;
        for (a, d) in derivatives.iter().enumerate() {
            let shape = parallel_torsion_shape(&AmbientVector::basis(a));
            if shape.is_zero() {
                consistent &= d.is_zero();
                continue;
            }
            let (b, c) = shape.terms().next().expect("nonzero shape");
            let q = c.as_rational().expect("shape has rational coefficients");
            let f = d.blade_coefficient(b).scale(&(BigRational::from_integer(1.into()) / q));
            consistent &= &shape.scale(&f) == d;
            match &factor {
                None => factor = Some(f),
                Some(g) => consistent &= g == &f,
            }
        }
        Ok(ParallelTorsion {
            derivatives,
            factor: if consistent { factor } else { None },
            horizontal_vanish,
        })
    }

    /// The factor as a polynomial in `k`.
    pub fn factor_poly(&self) -> Option<UnivariatePoly> {
        self.factor.as_ref()?.to_univariate(Symbol::K)
    }

    /// Values of `k` with `∇^ch T^c = 0`.
    pub fn root_set(&self) -> Option<Vec<BigRational>> {
        self.factor_poly()?.rational_root_set()
    }

    pub fn is_parallel(&self) -> bool {
        self.derivatives.iter().all(AltForm::is_zero)
    }
}

/// Components of a 3-form in `Λ³₁ ⊕ Λ³₇ ⊕ Λ³₂₇`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lambda3Parts {
    /// `c` with `Λ³₁`-part `c·φ`.
    pub coeff1: Scalar,
    pub in7: AltForm,
    pub in27: AltForm,
}

pub fn lambda3_decompose(w: &AltForm) -> Result<Lambda3Parts> {
    if w.grade() != Some(3) && !w.is_zero() {
        return Err(Error::Precondition("a 3-form".into()));
    }
    let c = NamedFormCatalog::new();
    let coeff1 = w.inner(&c.phi) * Scalar::ratio(1, 7);
    let rest = w - &c.phi.scale(&coeff1);
    let quarter = Scalar::ratio(1, 4);
    let mut in7 = AltForm::zero();
    for i in 0..DIM {
        let g = c.star_phi.contract(i);
        in7 += g.scale(&(rest.inner(&g) * quarter.clone()));
    }
    let in27 = &rest - &in7;
    Ok(Lambda3Parts { coeff1, in7, in27 })
}

/// `(c, τ)` with `ω = cφ + τ`, `τ ∈ Λ³₂₇`; a nonzero `Λ³₇` part is an error.
pub fn lambda3_split(w: &AltForm) -> Result<(Scalar, AltForm)> {
    let p = lambda3_decompose(w)?;
    if !p.in7.is_zero() {
        return Err(Error::Lambda7Component(p.in7));
    }
    Ok((p.coeff1, p.in27))
}

/// `Λ³₂₇ = ker(·∧φ) ∩ ker(·∧*φ)`.
pub fn in_lambda27(w: &AltForm) -> bool {
    let c = NamedFormCatalog::new();
    w.wedge(&c.phi).is_zero() && w.wedge(&c.star_phi).is_zero()
}

/// Rational values of `k` at which a form vanishes identically.
pub fn vanishing_set(w: &AltForm) -> Option<Vec<BigRational>> {
    common_zeros(w.terms().map(|(_, c)| c), Symbol::K)
}
