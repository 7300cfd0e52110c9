//! Batch verification suites behind `gwistor verify`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::connection::LeviCivita;
use crate::contact::{eta_einstein_analysis, flat_ricci_crosscheck, ContactStructure};
use crate::curvature::CurvatureSpec;
use crate::error::{Error, Result};
use crate::flat::{flat_case_curvature, gauss_curvature};
use crate::form::{AltForm, DIM};
use crate::frame::{verify_structure_equations, NamedFormCatalog};
use crate::generator_derivatives;
use crate::octonion::{conventions_reproducing, ACCEPTED};
use crate::report::{Check, CheckReport};
use crate::scalar::{common_zeros, parse_rational, rational, Scalar, Symbol};
use crate::stiefel::verify_stiefel;
use crate::torsion::{
    constant_curvature_torsion, einstein_closed_form, in_lambda27, lambda3_decompose, parallel_torsion_shape,
    torsion_formula, vanishing_set, CharacteristicConnection, ParallelTorsion,
};
use crate::vector::AmbientVector;

/// How the curvature constant `k` enters a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KMode {
    Symbolic,
    Rational(BigRational),
}

impl KMode {
    pub fn scalar(&self) -> Scalar {
        match self {
            KMode::Symbolic => Scalar::k(),
            KMode::Rational(q) => Scalar::from_rational(q.clone()),
        }
    }

    /// Whether a claim "P(k) iff k ∈ roots" holds in this mode, given the
    /// predicate's computed zero set (symbolic) or truth value (rational).
    fn iff(&self, zero_set: Option<Vec<BigRational>>, holds_here: bool, roots: &[BigRational]) -> std::result::Result<(), String> {
        match self {
            KMode::Symbolic => match zero_set {
                Some(z) if z == roots => Ok(()),
                other => Err(format!("root set {}, expected {}", show_roots(other.as_deref()), show_roots(Some(roots)))),
            },
            KMode::Rational(q) => {
                let expected = roots.contains(q);
                if holds_here == expected {
                    Ok(())
                } else {
                    Err(format!("holds = {holds_here} at k = {q}, expected {expected}"))
                }
            }
        }
    }
}

impl FromStr for KMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "symbolic" {
            Ok(KMode::Symbolic)
        } else {
            parse_rational(s).map(KMode::Rational)
        }
    }
}

impl fmt::Display for KMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KMode::Symbolic => write!(f, "symbolic"),
            KMode::Rational(q) => write!(f, "{q}"),
        }
    }
}

fn show_roots(r: Option<&[BigRational]>) -> String {
    match r {
        None => "undetermined".into(),
        Some(r) => format!("{{{}}}", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Structure,
    Torsion,
    Contact,
    Stiefel,
    Flat,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["structure", "torsion", "contact", "stiefel", "flat", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::Torsion => "torsion",
            Suite::Contact => "contact",
            Suite::Stiefel => "stiefel",
            Suite::Flat => "flat",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "structure" => Suite::Structure,
            "torsion" => Suite::Torsion,
            "contact" => Suite::Contact,
            "stiefel" => Suite::Stiefel,
            "flat" => Suite::Flat,
            "all" => Suite::All,
            _ => return Err(Error::UnknownSuite(s.into())),
        })
    }
}

pub fn run_verify(suite: Suite, k: &KMode) -> CheckReport {
    match suite {
        Suite::Structure => structure_suite(),
        Suite::Torsion => torsion_suite(k),
        Suite::Contact => contact_suite(k),
        Suite::Stiefel => verify_stiefel(),
        Suite::Flat => flat_case_curvature(),
        Suite::All => {
            let mut r = CheckReport::new("all");
            r.extend(structure_suite());
            r.extend(torsion_suite(k));
            r.extend(contact_suite(k));
            r.extend(verify_stiefel());
            r.extend(flat_case_curvature());
            r
        }
    }
}

/// The algebraic identities among the catalog forms and the octonion origin of φ.
pub fn structure_suite() -> CheckReport {
    let mut r = verify_structure_equations();
    let c = NamedFormCatalog::new();
    let found = conventions_reproducing(&c.phi);
    r.push(Check::new(
        "structure.octonion_phi",
        "φ(x, y, z) = ⟨xy, z⟩ for the Cayley-Dickson doubling of the fiber quaternions",
        if found == [ACCEPTED] {
            Ok(())
        } else {
            Err(format!("conventions reproducing φ: {found:?}"))
        },
    ));
    r
}

fn expect_ok<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn equal_forms(lhs: Result<AltForm>, rhs: &AltForm) -> std::result::Result<(), String> {
    let lhs = expect_ok(lhs)?;
    if &lhs == rhs {
        Ok(())
    } else {
        Err(format!("got {lhs}, expected {rhs}"))
    }
}

fn all_ok(items: impl IntoIterator<Item = std::result::Result<(), String>>) -> std::result::Result<(), String> {
    items.into_iter().collect::<std::result::Result<Vec<()>, String>>().map(|_| ())
}

/// `dμ`, split into horizontal and vertical contributions.
fn dmu_cancellation(lc: &LeviCivita, k: &Scalar) -> std::result::Result<(), String> {
    let c = NamedFormCatalog::new();
    let parts = expect_ok(lc.ext_d_contributions(&c.mu))?;
    let horiz: AltForm = parts[..4].iter().cloned().collect();
    let vert: AltForm = parts[4..].iter().cloned().collect();
    let hk = k * &Scalar::ratio(1, 2);
    let vk = &(Scalar::from(2) - k) * &Scalar::ratio(1, 2);
    if horiz != c.dmu.scale(&hk) {
        return Err(format!("horizontal part {horiz}, expected ({hk})*dmu"));
    }
    if vert != c.dmu.scale(&vk) {
        return Err(format!("vertical part {vert}, expected ({vk})*dmu"));
    }
    let total = &hk + &vk;
    if !total.is_one() {
        return Err(format!("coefficients sum to {total}"));
    }
    equal_forms(Ok(&horiz + &vert), &c.dmu)
}

/// Everything that depends on the connection of the sphere bundle.
pub fn torsion_suite(mode: &KMode) -> CheckReport {
    let mut r = CheckReport::new("torsion");
    let k = mode.scalar();
    let c = NamedFormCatalog::new();
    let lc = LeviCivita::constant_k(k.clone());
    let lambda = &k * &Scalar::from(3);

    r.push(Check::new(
        "torsion.d_mu",
        "dμ = e41 + e52 + e63 with ((2-k)/2 + k/2) = 1",
        dmu_cancellation(&lc, &k),
    ));
    let dphi_expected = [
        c.vol.scale(&lambda),
        -c.dmu.wedge(&c.dmu),
        c.mu.wedge(&c.alpha1).scale(&-(&k + &Scalar::from(2))),
    ]
    .into_iter()
    .collect::<AltForm>();
    let dphi = lc.ext_d(&c.phi);
    r.push(Check::new(
        "torsion.d_phi",
        "dφ = 3k vol - (dμ)² - (k+2)μ∧α₁",
        equal_forms(dphi.clone(), &dphi_expected),
    ));
    r.push(Check::new(
        "torsion.d_star_phi",
        "d*φ = 0",
        equal_forms(lc.ext_d(&c.star_phi), &AltForm::zero()),
    ));
    r.push(Check::new(
        "torsion.d_alpha2",
        "dα₂ = 2μ∧α₁ - r̄ vol with r̄ = 3k",
        equal_forms(lc.ext_d(&c.alpha2), &(&c.mu.wedge(&c.alpha1).scale(&Scalar::from(2)) - &c.vol.scale(&lambda))),
    ));

    let riem = LeviCivita::new(CurvatureSpec::SymbolicRiemann);
    let (rho, rbar) = riem.spec().rho_rbar();
    let r_alpha = riem.spec().r_alpha();
    r.push(Check::new(
        "torsion.riemann.d_star_phi",
        "d*φ = -ρ∧vol for a general base",
        equal_forms(riem.ext_d(&c.star_phi), &-rho.wedge(&c.vol)),
    ));
    let general_dphi = [
        r_alpha.clone(),
        c.vol.scale(&rbar),
        -c.dmu.wedge(&c.dmu),
        c.mu.wedge(&c.alpha1).scale(&Scalar::from(-2)),
    ]
    .into_iter()
    .collect::<AltForm>();
    r.push(Check::new(
        "torsion.riemann.d_phi",
        "dφ = 𝓡α + r̄ vol - (dμ)² - 2μ∧α₁ for a general base",
        equal_forms(riem.ext_d(&c.phi), &general_dphi),
    ));
    r.push(Check::new(
        "torsion.riemann.d_alpha",
        "dα = 𝓡α for a general base",
        equal_forms(riem.ext_d(&c.alpha), &r_alpha),
    ));

    let inner = dphi.as_ref().map(|d| d.inner(&c.star_phi)).map_err(|e| e.to_string());
    r.push(Check::new(
        "torsion.inner",
        "⟨dφ, *φ⟩ = 2(λ + 6) with λ = 3k",
        inner.and_then(|v| {
            let want = &(&lambda + &Scalar::from(6)) * &Scalar::from(2);
            if v == want {
                Ok(())
            } else {
                Err(format!("got {v}, expected {want}"))
            }
        }),
    ));
    r.push(Check::equal("torsion.phi_norm", "⟨φ, φ⟩ = 7", &c.phi.inner(&c.phi), &Scalar::from(7)));

    let tc = constant_curvature_torsion(&k);
    r.push(Check::new(
        "torsion.tc",
        "T^c = *dφ - (1/6)⟨dφ,*φ⟩φ = 2(k-1)α + kμ∧dμ",
        equal_forms(torsion_formula(&lc), &tc),
    ));
    r.push(Check::new(
        "torsion.tc_einstein",
        "T^c = *(𝓡α) + ((2λ-6)/3)α + (λ/3)μ∧dμ + (λ/3)α₂",
        all_ok([
            equal_forms(Ok(einstein_closed_form(&lc.spec().r_alpha(), &lambda)), &tc),
            equal_forms(torsion_formula(&riem), &einstein_closed_form(&r_alpha, &rbar)),
        ]),
    ));
    r.push(Check::new("torsion.delta_tc", "δT^c = 0", equal_forms(lc.codiff(&tc), &AltForm::zero())));

    match CharacteristicConnection::new(lc.clone()) {
        Err(e) => r.push(Check::new("torsion.characteristic", "∇^ch exists", Err(e.to_string()))),
        Ok(ch) => push_characteristic_checks(&mut r, mode, &ch, &k),
    }

    let dt = lc.ext_d(&tc);
    let dt_expected = &c.dmu.wedge(&c.dmu).scale(&k)
        - &c.mu.wedge(&c.alpha1).scale(&(&(&k * &(&k - &Scalar::one())) * &Scalar::from(2)));
    r.push(Check::new(
        "torsion.d_tc",
        "dT^c = k(dμ)² - 2k(k-1)μ∧α₁",
        equal_forms(dt.clone(), &dt_expected),
    ));
    r.push(Check::new(
        "torsion.sg2t",
        "dT^c = 0 iff k = 0",
        expect_ok(dt).and_then(|d| mode.iff(vanishing_set(&d), d.is_zero(), &[rational(0, 1)])),
    ));

    push_lambda3_checks(&mut r, &lc, &k);

    let ddzero = c.entries().into_iter().find_map(|(name, f)| {
        let dd = lc.ext_d(f).and_then(|d| lc.ext_d(&d));
        match dd {
            Ok(z) if z.is_zero() => None,
            Ok(z) => Some(format!("d²{name} = {z}")),
            Err(e) => Some(e.to_string()),
        }
    });
    r.push(Check::new("torsion.d_squared", "d² = 0 on the catalog", ddzero.map_or(Ok(()), Err)));

    let mut table = Ok(());
    'outer: for a in 0..DIM {
        let x = AmbientVector::basis(a);
        if lc.nabla_basis(a, 0) != generator_derivatives::theta_t_u(&k, &x) {
            table = Err(format!("∇θᵗU along e{a}"));
            break;
        }
        for (name, oracle) in generator_derivatives::form_table() {
            let form = c.get(name).expect("catalog name");
            if lc.nabla(a, form).ok() != Some(oracle(&k, &x)) {
                table = Err(format!("∇{name} along e{a}"));
                break 'outer;
            }
        }
    }
    r.push(Check::new(
        "torsion.generator_table",
        "∇^g of θᵗU, μ, vol, α, dμ, α₁, α₂, α₃ and φ in every direction",
        table,
    ));
    r
}

fn push_characteristic_checks(r: &mut CheckReport, mode: &KMode, ch: &CharacteristicConnection, k: &Scalar) {
    let c = NamedFormCatalog::new();
    let nphi = (0..DIM).find_map(|a| match ch.nabla(a, &c.phi) {
        Ok(z) if z.is_zero() => None,
        Ok(z) => Some(format!("∇^ch_e{a} φ = {z}")),
        Err(e) => Some(e.to_string()),
    });
    r.push(Check::new("torsion.nabla_ch_phi", "∇^ch φ = 0", nphi.map_or(Ok(()), Err)));
    let metric = (0..DIM).find_map(|a| {
        let m = ch.matrix(a);
        (0..DIM)
            .flat_map(|b| (0..DIM).map(move |d| (b, d)))
            .find(|&(b, d)| !(m.entry(d, b) + m.entry(b, d)).is_zero())
            .map(|(b, d)| format!("direction e{a}, pair (e{b}, e{d})"))
    });
    r.push(Check::new("torsion.nabla_ch_metric", "∇^ch g = 0", metric.map_or(Ok(()), Err)));

    let pt = match ParallelTorsion::compute(ch) {
        Ok(p) => p,
        Err(e) => {
            r.push(Check::new("torsion.parallel_torsion", "∇^ch T^c", Err(e.to_string())));
            return;
        }
    };
    let expected_factor = k * &(k - &Scalar::one());
    let formula = (0..DIM).find_map(|a| {
        let want = parallel_torsion_shape(&AmbientVector::basis(a)).scale(&expected_factor);
        (pt.derivatives[a] != want).then(|| format!("e{a}: got {}, expected {want}", pt.derivatives[a]))
    });
    r.push(Check::new(
        "torsion.parallel_torsion_formula",
        "∇^ch_X T^c = k(k-1) X^v ⌟ (μ∧α₁ - ½(dμ)²), zero for X horizontal",
        match formula {
            Some(w) => Err(w),
            None if !pt.horizontal_vanish => Err("horizontal directions do not vanish".into()),
            None => Ok(()),
        },
    ));
    match mode {
        KMode::Symbolic => {
            let shown = pt
                .factor_poly()
                .map_or("undetermined".into(), |p| p.display_factored("k"));
            let roots = pt.root_set();
            let outcome = if roots.as_deref() == Some(&[rational(0, 1), rational(1, 1)][..]) {
                Ok(())
            } else {
                Err(format!("factor {shown}, roots {}", show_roots(roots.as_deref())))
            };
            r.push(Check::new(
                "torsion.parallel_torsion",
                format!("∇^ch T^c = {shown} · X^v ⌟ (μ∧α₁ - ½(dμ)²) vanishes iff k ∈ {{0, 1}}"),
                outcome,
            ));
        }
        KMode::Rational(q) => {
            let witness = (0..DIM)
                .find(|&a| !pt.derivatives[a].is_zero())
                .map(|a| format!("∇^ch_e{a} T^c = {}", pt.derivatives[a]));
            r.push(Check::new(
                "torsion.parallel_torsion",
                format!("∇^ch T^c = 0 at k = {q}"),
                witness.map_or(Ok(()), Err),
            ));
        }
    }
}

fn push_lambda3_checks(r: &mut CheckReport, lc: &LeviCivita, k: &Scalar) {
    let c = NamedFormCatalog::new();
    let k2 = k + &Scalar::from(2);
    let seventh = Scalar::ratio(1, 7);
    let mudmu = c.mu.wedge(&c.dmu);
    let tau_dphi = [
        c.alpha.scale(&(&(k * &Scalar::from(15)) - &Scalar::from(12))),
        mudmu.scale(&(&(k * &Scalar::from(6)) - &Scalar::from(2))),
        c.alpha2.scale(&-k2.clone()),
    ]
    .into_iter()
    .collect::<AltForm>()
    .scale(&seventh);
    let tau_dt = [
        c.alpha.scale(&(Scalar::from(6) - &(k * &Scalar::from(3)))),
        mudmu.scale(&(Scalar::one() + &(k * &Scalar::from(3)))),
        c.alpha2.scale(&(Scalar::one() - &(k * &Scalar::from(4)))),
    ]
    .into_iter()
    .collect::<AltForm>()
    .scale(&(k * &Scalar::ratio(2, 7)));

    let split = |name: &str, w: Result<AltForm>, coeff: Scalar, tau: &AltForm| -> std::result::Result<(), String> {
        let w = expect_ok(w)?;
        let p = expect_ok(lambda3_decompose(&w))?;
        if !p.in7.is_zero() {
            return Err(format!("{name} has Λ³₇ part {}", p.in7));
        }
        if p.coeff1 != coeff {
            return Err(format!("{name}: Λ³₁ coefficient {}, expected {coeff}", p.coeff1));
        }
        if &p.in27 != tau {
            return Err(format!("{name}: Λ³₂₇ part {}, expected {tau}", p.in27));
        }
        if !in_lambda27(tau) {
            return Err(format!("{name}: τ₃ fails τ∧φ = τ∧*φ = 0"));
        }
        Ok(())
    };
    let dphi = lc.ext_d(&c.phi);
    r.push(Check::new(
        "torsion.lambda3.d_phi",
        "dφ = (6/7)(k+2)*φ + *τ₃, τ₃ = (1/7)((15k-12)α + (6k-2)μ∧dμ - (k+2)α₂)",
        split("*dφ", dphi.clone().map(|d| d.hodge()), &k2 * &Scalar::ratio(6, 7), &tau_dphi),
    ));
    let tc = constant_curvature_torsion(k);
    r.push(Check::new(
        "torsion.lambda3.tc",
        "T^c = -((k+2)/7)φ + τ₃, τ₃ = *dφ part above",
        split("T^c", Ok(tc.clone()), -(&k2 * &seventh), &tau_dphi),
    ));
    r.push(Check::new(
        "torsion.lambda3.d_tc",
        "dT^c = (6/7)k(k-2)*φ + *τ₃, τ₃ = (2k/7)((6-3k)α + (1+3k)μ∧dμ + (1-4k)α₂)",
        split(
            "*dT^c",
            lc.ext_d(&tc).map(|d| d.hodge()),
            &(k * &(k - &Scalar::from(2))) * &Scalar::ratio(6, 7),
            &tau_dt,
        ),
    ));
    let at = LeviCivita::constant_k(Scalar::from(-2));
    r.push(Check::new(
        "torsion.lambda3.pure27",
        "dφ ∈ Λ³₂₇ at k = -2",
        expect_ok(at.ext_d(&c.phi).map(|d| d.hodge())).and_then(|d| {
            if in_lambda27(&d) && !d.is_zero() {
                Ok(())
            } else {
                Err(format!("*dφ = {d}"))
            }
        }),
    ));
}

/// The metric contact structure at the selected `k`.
pub fn contact_suite(mode: &KMode) -> CheckReport {
    let k = mode.scalar();
    let cs = ContactStructure::new();
    let mut r = cs.verify_almost_contact();
    let lc = LeviCivita::constant_k(k.clone());

    let defect = cs.k_contact_defect(&lc);
    let comps: Vec<Scalar> = defect.iter().flat_map(|v| v.components().to_vec()).collect();
    r.push(Check::new(
        "contact.k_contact",
        "∇^g_X ξ = -φ_c X iff k = 1",
        mode.iff(
            common_zeros(&comps, Symbol::K),
            defect.iter().all(AmbientVector::is_zero),
            &[rational(1, 1)],
        ),
    ));

    let sdef = cs.sasakian_defect(&lc);
    let scomps: Vec<Scalar> = sdef.iter().flatten().flat_map(|v| v.components().to_vec()).collect();
    r.push(Check::new(
        "contact.sasakian",
        "(∇^g_X φ_c)Y = g̃(X,Y)ξ - η(Y)X iff k = 1",
        mode.iff(
            common_zeros(&scomps, Symbol::K),
            sdef.iter().flatten().all(AmbientVector::is_zero),
            &[rational(1, 1)],
        ),
    ));
    let via_dmu = (0..DIM).find(|&a| lc.gamma(a).commutator(&cs.phi) != cs.nabla_phi_from_dmu(&k, a));
    r.push(Check::new(
        "contact.sasakian_via_dmu",
        "∇^g φ_c from ∇^g dμ through dμ(X,Y) = g(X, φ_c Y)",
        match via_dmu {
            None if crate::contact::dmu_phi_identity(&cs) => Ok(()),
            None => Err("dμ(X,Y) ≠ g(X, φ_c Y)".into()),
            Some(a) => Err(format!("mismatch along e{a}")),
        },
    ));

    let eta = eta_einstein_analysis(4).map_err(|e| e.to_string());
    r.push(Check::new(
        "contact.eta_einstein",
        "Ric = λg̃ + νη⊗η with constant λ, ν iff k = 1 or k = m - 2 (m = 4)",
        eta.clone().and_then(|e| {
            if e.roots == [rational(1, 1), rational(2, 1)] {
                Ok(())
            } else {
                Err(format!("roots {}", show_roots(Some(&e.roots))))
            }
        }),
    ));
    r.push(Check::new(
        "contact.eta_einstein_constants",
        "at k = 1: λ = 10, ν = -4, λ + ν = 2n = 6",
        eta.and_then(|e| {
            let at_one = e.constants.iter().find(|(r, _, _)| r == &rational(1, 1));
            match at_one {
                Some((_, l, n)) if *l == rational(10, 1) && *n == rational(-4, 1) && l + n == rational(6, 1) => Ok(()),
                Some((_, l, n)) => Err(format!("λ = {l}, ν = {n}")),
                None => Err("k = 1 is not a root".into()),
            }
        }),
    ));
    r.push(Check::new(
        "contact.ricci_flat",
        "Ricci formula at k = 0 matches the contracted Gauss curvature",
        flat_ricci_crosscheck(&gauss_curvature()),
    ));
    let torsion = cs
        .contact_connection_torsion(&Scalar::one())
        .map_err(|e| e.to_string())
        .and_then(|t| {
            let g_units = t.scale(&Scalar::from(4));
            let tc = constant_curvature_torsion(&Scalar::one());
            if g_units == tc {
                Ok(())
            } else {
                Err(format!("4η∧dη = {g_units}, T^c = {tc}"))
            }
        });
    r.push(Check::new("contact.torsion", "η∧dη = ¼μ∧dμ = ¼T^c at k = 1", torsion));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_symbolically_and_at_one() {
        for mode in [KMode::Symbolic, KMode::Rational(rational(1, 1))] {
            let r = run_verify(Suite::All, &mode);
            assert!(r.all_passed(), "{mode}: {r}");
        }
    }

    #[test]
    fn half_fails_only_parallel_torsion() {
        let r = run_verify(Suite::Torsion, &KMode::Rational(rational(1, 2)));
        let failed: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
        assert_eq!(failed, ["torsion.parallel_torsion"]);
        let w = r.get("torsion.parallel_torsion").unwrap().witness.clone().unwrap();
        let shape = AltForm::from_terms(&[(-1, &[0, 2, 6]), (1, &[0, 3, 5]), (-1, &[1, 5, 2]), (-1, &[1, 6, 3])]);
        assert_eq!(w, format!("∇^ch_e4 T^c = {}", shape.scale(&Scalar::ratio(-1, 4))));
    }

    #[test]
    fn symbolic_anchor_shows_factor() {
        let r = run_verify(Suite::Torsion, &KMode::Symbolic);
        assert!(r.get("torsion.parallel_torsion").unwrap().anchor.contains("k*(k-1)"));
    }

    #[test]
    fn parse_modes() {
        assert_eq!("symbolic".parse::<KMode>().unwrap(), KMode::Symbolic);
        assert_eq!("-3/4".parse::<KMode>().unwrap(), KMode::Rational(rational(-3, 4)));
        assert!("x".parse::<KMode>().is_err());
        assert!("bogus".parse::<Suite>().is_err());
    }
}
