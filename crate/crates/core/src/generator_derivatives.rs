//! Closed-form Levi-Civita derivatives of the frame generators for constant
//! sectional curvature `k`, kept as an independent oracle for the
//! connection-matrix engine in [`crate::connection`].
//!
//! The item for `dμ` is stored in its corrected form; [`dmu_as_printed`]
//! keeps the variant with a sign flip on the vertical part, which disagrees
//! with the engine for vertical directions.

use crate::form::AltForm;
use crate::frame::{mu_of, theta, theta_t, NamedFormCatalog};
use crate::scalar::Scalar;
use crate::vector::AmbientVector;

fn half(k: &Scalar) -> Scalar {
    k * &Scalar::ratio(1, 2)
}

/// `(2 - k)/2`.
fn co_half(k: &Scalar) -> Scalar {
    &(Scalar::from(2) - k) * &Scalar::ratio(1, 2)
}

/// `∇_X θᵗU = ((2 - k)/2) θᵗX - (k/2)(θX - μ(X)U)`.
pub fn theta_t_u(k: &Scalar, x: &AmbientVector) -> AmbientVector {
    let tx = &theta(x) - &AmbientVector::u().scale(&mu_of(x));
    &theta_t(x).scale(&co_half(k)) - &tx.scale(&half(k))
}

/// `∇_X μ = ((2 - k)/2)(θᵗX)♭ - (k/2)(θX)♭`.
pub fn mu(k: &Scalar, x: &AmbientVector) -> AltForm {
    &AltForm::flat(&theta_t(x)).scale(&co_half(k)) - &AltForm::flat(&theta(x)).scale(&half(k))
}

/// `∇_X vol = (k/2)(μ(X) μ∧α₂ - (θX)♭∧α₃ - (θᵗX)♭∧α₃)`.
pub fn vol(k: &Scalar, x: &AmbientVector) -> AltForm {
    let c = NamedFormCatalog::new();
    let f = &(&c.mu.wedge(&c.alpha2).scale(&mu_of(x)) - &AltForm::flat(&theta(x)).wedge(&c.alpha3))
        - &AltForm::flat(&theta_t(x)).wedge(&c.alpha3);
    f.scale(&half(k))
}

/// `∇_X α = (k/2)(μ∧(θX ⌟ α) - μ(X) α₁)`.
pub fn alpha(k: &Scalar, x: &AmbientVector) -> AltForm {
    let c = NamedFormCatalog::new();
    (&c.mu.wedge(&c.alpha.interior(&theta(x))) - &c.alpha1.scale(&mu_of(x))).scale(&half(k))
}

/// `∇_X dμ = (k/2) μ∧(X^h)♭ + ((2 - k)/2) μ∧(X^v)♭`.
pub fn dmu(k: &Scalar, x: &AmbientVector) -> AltForm {
    let c = NamedFormCatalog::new();
    &c.mu.wedge(&AltForm::flat(&x.horizontal())).scale(&half(k))
        + &c.mu.wedge(&AltForm::flat(&x.vertical())).scale(&co_half(k))
}

/// `(k/2) μ∧((X^h)♭ - (X^v)♭)`, the variant that fails for vertical `X`.
pub fn dmu_as_printed(k: &Scalar, x: &AmbientVector) -> AltForm {
    let c = NamedFormCatalog::new();
    let v = &AltForm::flat(&x.horizontal()) - &AltForm::flat(&x.vertical());
    c.mu.wedge(&v).scale(&half(k))
}

/// `∇_X α₁ = kμ(X)((3/2)α - α₂) + μ∧(((k - 2)/2) X ⌟ α + (k/2) θX ⌟ α₁)`.
pub fn alpha1(k: &Scalar, x: &AmbientVector) -> AltForm {
    let c = NamedFormCatalog::new();
    let a = (&c.alpha.scale(&Scalar::ratio(3, 2)) - &c.alpha2).scale(&(k * &mu_of(x)));
    let inner = &c.alpha.interior(x).scale(&-co_half(k)) + &c.alpha1.interior(&theta(x)).scale(&half(k));
    &a + &c.mu.wedge(&inner)
}

/// `∇_X α₂ = kμ(X)(α₁ - (3/2)α₃) + μ∧(((k - 2)/2) X^v ⌟ α₁ + (k/2) X ⌟ α₃)`.
pub fn alpha2(k: &Scalar, x: &AmbientVector) -> AltForm {
    let c = NamedFormCatalog::new();
    let a = (&c.alpha1 - &c.alpha3.scale(&Scalar::ratio(3, 2))).scale(&(k * &mu_of(x)));
    let inner = &c.alpha1.interior(&x.vertical()).scale(&-co_half(k)) + &c.alpha3.interior(x).scale(&half(k));
    &a + &c.mu.wedge(&inner)
}

/// `∇_X α₃ = ((2 - k)/2) θᵗX ⌟ vol + (k/2) μ(X) α₂`.
pub fn alpha3(k: &Scalar, x: &AmbientVector) -> AltForm {
    let c = NamedFormCatalog::new();
    &c.vol.interior(&theta_t(x)).scale(&co_half(k)) + &c.alpha2.scale(&(&half(k) * &mu_of(x)))
}

/// The combined display for `∇_X φ`:
/// `(k/2)μ∧(θX⌟α) - (3k/2)μ(X)α₁ + (((k-2)/2)(θᵗX)♭ + (k/2)(θX)♭)∧dμ
///  + (3k/2)μ(X)α₃ - (k/2)μ∧(X⌟α₃) - ((k-2)/2)μ∧(X^v⌟α₁)`.
pub fn phi(k: &Scalar, x: &AmbientVector) -> AltForm {
    let c = NamedFormCatalog::new();
    let m = mu_of(x);
    let three_half_k = k * &Scalar::ratio(3, 2);
    let km2 = -co_half(k);
    let one = AltForm::flat(&theta_t(x)).scale(&km2) + AltForm::flat(&theta(x)).scale(&half(k));
    let terms = [
        c.mu.wedge(&c.alpha.interior(&theta(x))).scale(&half(k)),
        c.alpha1.scale(&-(&three_half_k * &m)),
        one.wedge(&c.dmu),
        c.alpha3.scale(&(&three_half_k * &m)),
        c.mu.wedge(&c.alpha3.interior(x)).scale(&-half(k)),
        c.mu.wedge(&c.alpha1.interior(&x.vertical())).scale(&-km2),
    ];
    terms.into_iter().collect()
}

/// `(name, oracle)` for every generator whose derivative is a form.
#[allow(clippy::type_complexity)]
pub fn form_table() -> Vec<(&'static str, fn(&Scalar, &AmbientVector) -> AltForm)> {
    vec![
        ("mu", mu),
        ("vol", vol),
        ("alpha", alpha),
        ("dmu", dmu),
        ("alpha1", alpha1),
        ("alpha2", alpha2),
        ("alpha3", alpha3),
        ("phi", phi),
    ]
}
