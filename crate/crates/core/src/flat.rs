//! The flat base `k = 0`: Gauss curvature of the fibers, the torsion
//! correction terms and flatness of the characteristic connection.

use num_rational::BigRational;

use crate::form::AltForm;
use crate::report::{Check, CheckReport};
use crate::scalar::{rational, Scalar};
use crate::tensor::{Tensor3, Tensor4};
use crate::torsion::constant_curvature_torsion;

/// Coefficients `(s, w)` in `R^c = R^g + s Σ(e_i⌟T)⊗(e_i⌟T) + w Σ(e_i⌟T)∧(e_i⌟T)`.
pub fn correction_coefficients() -> (BigRational, BigRational) {
    (rational(1, 4), rational(1, 8))
}

/// The two correction sums `(Σ⊗, Σ∧)` for a torsion 3-form.
pub fn correction_sums(t: &Tensor3) -> (Tensor4, Tensor4) {
    (t.contracted_square(), t.contracted_wedge())
}

/// `R^c` from `R^g` and a torsion 3-form.
pub fn characteristic_from_levi_civita(rg: &Tensor4, t: &Tensor3) -> Tensor4 {
    let (s, w) = correction_coefficients();
    let (sq, wd) = correction_sums(t);
    rg.add(&sq.scale(&s)).add(&wd.scale(&w))
}

/// `R^g` from `R^c` and a torsion 3-form, inverting [`characteristic_from_levi_civita`].
pub fn levi_civita_from_characteristic(rc: &Tensor4, t: &Tensor3) -> Tensor4 {
    let (s, w) = correction_coefficients();
    let (sq, wd) = correction_sums(t);
    rc.sub(&sq.scale(&s)).sub(&wd.scale(&w))
}

/// Levi-Civita curvature of `R⁴ × S³` via the Gauss formula of the unit fiber:
/// `R(X,Y,Z,W) = ⟨X^v,W^v⟩⟨Y^v,Z^v⟩ - ⟨X^v,Z^v⟩⟨Y^v,W^v⟩`.
pub fn gauss_curvature() -> Tensor4 {
    let v = |a: usize, b: usize| i64::from(a == b && a >= 4);
    Tensor4::from_fn(7, |x, y, z, w| {
        BigRational::from_integer((v(x, w) * v(y, z) - v(x, z) * v(y, w)).into())
    })
}

/// The displayed pairs `e^{45}, e^{56}, e^{64}`.
pub fn vertical_pairs() -> [AltForm; 3] {
    [
        AltForm::monomial(&[4, 5]),
        AltForm::monomial(&[5, 6]),
        AltForm::from_terms(&[(-1, &[4, 6])]),
    ]
}

/// `e^{45}⊗e^{45} + e^{56}⊗e^{56} + e^{64}⊗e^{64}`.
pub fn displayed_square_sum() -> Tensor4 {
    let one = BigRational::from_integer(1.into());
    let terms: Vec<_> = vertical_pairs().into_iter().map(|p| (one.clone(), p)).collect();
    Tensor4::sum_of_squares(&terms)
}

/// Characteristic torsion at `k = 0` as a dense tensor.
pub fn flat_torsion() -> Tensor3 {
    Tensor3::from_form(&constant_curvature_torsion(&Scalar::zero())).expect("rational torsion")
}

fn equal_tensors(lhs: &Tensor4, rhs: &Tensor4) -> std::result::Result<(), String> {
    match lhs.sub(rhs).first_nonzero() {
        None => Ok(()),
        Some(((a, b, c, d), v)) => Err(format!(
            "component ({a},{b},{c},{d}) differs by {v}: got {}, expected {}",
            lhs.get(a, b, c, d),
            rhs.get(a, b, c, d)
        )),
    }
}

fn zero_tensor(t: &Tensor4) -> std::result::Result<(), String> {
    equal_tensors(t, &Tensor4::zero(t.dim()))
}

/// `R^c` of the characteristic connection at `k = 0`.
pub fn flat_characteristic_curvature() -> Tensor4 {
    characteristic_from_levi_civita(&gauss_curvature(), &flat_torsion())
}

/// Checks for the flat base.
pub fn flat_case_curvature() -> CheckReport {
    let mut r = CheckReport::new("flat");
    let alpha = AltForm::monomial(&[4, 5, 6]);
    r.push(Check::equal(
        "flat.torsion",
        "T^c = -2 e456 at k = 0",
        &constant_curvature_torsion(&Scalar::zero()),
        &alpha.scale(&Scalar::from(-2)),
    ));
    let rg = gauss_curvature();
    let display = displayed_square_sum();
    let minus_one = -BigRational::from_integer(1.into());
    r.push(Check::new(
        "flat.gauss",
        "R^g = -(e45⊗e45 + e56⊗e56 + e64⊗e64)",
        equal_tensors(&rg, &display.scale(&minus_one)),
    ));
    let (sq, wd) = correction_sums(&flat_torsion());
    r.push(Check::new(
        "flat.sigma_tensor",
        "¼ Σ (e_i⌟T^c)⊗(e_i⌟T^c) = e45⊗e45 + e56⊗e56 + e64⊗e64 = -R^g",
        equal_tensors(&sq.scale(&rational(1, 4)), &display),
    ));
    r.push(Check::new(
        "flat.sigma_wedge",
        "Σ (e_i⌟T^c)∧(e_i⌟T^c) = 0",
        zero_tensor(&wd),
    ));
    r.push(Check::new(
        "flat.characteristic_flat",
        "R^c = R^g + ¼Σ⊗ + ⅛Σ∧ = 0",
        zero_tensor(&flat_characteristic_curvature()),
    ));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_passes() {
        let r = flat_case_curvature();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn gauss_curvature_has_curvature_symmetries() {
        let rg = gauss_curvature();
        assert_eq!(rg.bianchi_violations(), 0);
        assert_eq!(rg.get(4, 5, 5, 4), &BigRational::from_integer(1.into()));
        assert!(rg.get(0, 4, 4, 0) == &BigRational::from_integer(0.into()));
    }

    #[test]
    fn wedge_sum_of_flat_torsion_vanishes_as_a_form() {
        let t = constant_curvature_torsion(&Scalar::zero());
        let sum: AltForm = (0..7).map(|i| t.contract(i).wedge(&t.contract(i))).collect();
        assert!(sum.is_zero());
    }
}
