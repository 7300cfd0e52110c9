//! Randomized and exhaustive checks of the algebraic invariants.

use gwistor::contact::{eta_einstein_analysis, ContactStructure, RicciModel};
use gwistor::curvature::{independent_riemann_symbols, riemann_symbol};
use gwistor::form::DIM;
use gwistor::frame::{beta, mu_of, theta, theta_t};
use gwistor::generator_derivatives;
use gwistor::scalar::{common_zeros, rational};
use gwistor::stiefel::{holonomy_algebra, torsion_checks, LieElement, ReductiveSplit};
use gwistor::torsion::{in_lambda27, lambda3_decompose, lambda3_split};
use gwistor::vector::U;
use gwistor::{AltForm, AmbientVector, Blade, CharacteristicConnection, CurvatureSpec, LeviCivita, NamedFormCatalog, Scalar, Symbol};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn tangent() -> impl Strategy<Value = AmbientVector> {
    prop::array::uniform7(rat()).prop_map(|c| {
        let mut v = AmbientVector::zero();
        for (i, s) in c.into_iter().enumerate() {
            v.set(i, s);
        }
        v
    })
}

fn blade() -> impl Strategy<Value = Blade> {
    (0u8..128).prop_map(Blade::from_mask)
}

fn monomial() -> impl Strategy<Value = AltForm> {
    (blade(), rat()).prop_map(|(b, c)| AltForm::term(c, &b.indices()))
}

fn three_form() -> impl Strategy<Value = AltForm> {
    prop::collection::vec(rat(), 35).prop_map(|cs| {
        Blade::of_grade(3)
            .into_iter()
            .zip(cs)
            .map(|(b, c)| AltForm::term(c, &b.indices()))
            .collect()
    })
}

fn poly() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((rat(), 0u32..4, 0u32..3), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, a, b)| &(&c * &Scalar::k().pow(a)) * &Scalar::lambda().pow(b))
            .fold(Scalar::zero(), |acc, t| acc + t)
    })
}

fn sign(p: usize) -> Scalar {
    if p % 2 == 0 {
        Scalar::one()
    } else {
        Scalar::from(-1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn wedge_is_graded_commutative(a in monomial(), b in monomial()) {
        let (p, q) = (a.grade().unwrap_or(0), b.grade().unwrap_or(0));
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).scale(&sign(p * q)));
    }

    #[test]
    fn wedge_is_associative(a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn interior_is_an_antiderivation(a in monomial(), b in monomial(), v in tangent()) {
        let p = a.grade().unwrap_or(0);
        let lhs = a.wedge(&b).interior(&v);
        let rhs = &a.interior(&v).wedge(&b) + &a.wedge(&b.interior(&v)).scale(&sign(p));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hodge_is_an_involution(a in monomial()) {
        prop_assert_eq!(a.hodge().hodge(), a);
    }

    #[test]
    fn scalars_are_canonical(s in poly()) {
        let rebuilt = s
            .terms()
            .map(|(m, c)| Scalar::monomial(c.clone(), m.clone()))
            .fold(Scalar::zero(), |acc, t| acc + t);
        prop_assert_eq!(&rebuilt, &s);
        prop_assert!(s.terms().all(|(_, c)| *c != rational(0, 1)));
        let monos: Vec<_> = s.terms().map(|(m, _)| m.clone()).collect();
        prop_assert!(monos.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn full_substitution_is_rational(s in poly(), k in rat(), l in rat()) {
        let v = s.substitute(Symbol::K, &k).substitute(Symbol::Lambda, &l);
        prop_assert!(v.as_rational().is_some());
    }

    #[test]
    fn theta_identities(x in tangent()) {
        prop_assert!(theta(&theta(&x)).is_zero());
        prop_assert_eq!(theta_t(&theta(&x)), x.horizontal());
        prop_assert_eq!(theta(&theta_t(&x)), x.vertical().tangent_part());
        let u = AmbientVector::u();
        prop_assert_eq!(mu_of(&x), u.inner(&theta(&x)));
        prop_assert_eq!(mu_of(&x), theta_t(&u).inner(&x));
    }

    #[test]
    fn beta_is_minus_dmu(x in tangent(), y in tangent()) {
        let c = NamedFormCatalog::new();
        prop_assert_eq!(beta(&x, &y), -c.dmu.evaluate(&[x, y]));
    }

    #[test]
    fn lambda3_parts_reconstruct(w in three_form()) {
        let p = lambda3_decompose(&w).unwrap();
        let c = NamedFormCatalog::new();
        prop_assert_eq!(&(&c.phi.scale(&p.coeff1) + &p.in7) + &p.in27, w);
        prop_assert!(in_lambda27(&p.in27));
    }

    #[test]
    fn lambda3_split_left_inverse(w in three_form(), t in rat()) {
        let c = NamedFormCatalog::new();
        let tau = lambda3_decompose(&w).unwrap().in27;
        let input = &c.phi.scale(&t) + &tau;
        let (coeff, in27) = lambda3_split(&input).unwrap();
        prop_assert_eq!(&coeff, &t);
        prop_assert_eq!(&(&c.phi.scale(&coeff) + &in27), &input);
    }

    #[test]
    fn ricci_model_blocks(k in rat()) {
        let m = RicciModel::new(4, k).frame_matrix().unwrap();
        for a in 0..DIM {
            for b in 0..DIM {
                prop_assert_eq!(&m[a][b], &m[b][a]);
                if a != b {
                    prop_assert!(m[a][b].is_zero());
                }
            }
        }
        prop_assert!((1..4).all(|i| m[i][i] == m[1][1]));
        prop_assert!((4..7).all(|i| m[i][i] == m[4][4]));
    }

    #[test]
    fn eta_einstein_roots(m in 4i64..12) {
        let e = eta_einstein_analysis(m).unwrap();
        let mut want = vec![rational(1, 1), rational(m - 2, 1)];
        want.dedup();
        prop_assert_eq!(e.roots, want);
    }

    #[test]
    fn jacobi(l in 4usize..=6, picks in prop::array::uniform6(1usize..=1000)) {
        let pair = |a: usize, b: usize| {
            let i = 1 + a % l;
            let j = 1 + (i + b % (l - 1)) % l;
            LieElement::e(l, i, j)
        };
        let x = pair(picks[0], picks[1]);
        let y = pair(picks[2], picks[3]);
        let z = pair(picks[4], picks[5]);
        let br = |a: &LieElement, b: &LieElement| a.bracket(b).unwrap();
        let sum = br(&x, &br(&y, &z)).add(&br(&y, &br(&z, &x))).add(&br(&z, &br(&x, &y)));
        prop_assert!(sum.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn characteristic_connection_is_metric(k in rat(), a in 0usize..DIM, x in tangent(), y in tangent()) {
        let ch = CharacteristicConnection::new(LeviCivita::constant_k(k)).unwrap();
        let m = ch.matrix(a);
        prop_assert!((m.apply(&x).inner(&y) + x.inner(&m.apply(&y))).is_zero());
    }

    #[test]
    fn levi_civita_is_metric(k in rat(), a in 0usize..DIM, x in tangent(), y in tangent()) {
        let lc = LeviCivita::constant_k(k);
        let m = lc.gamma(a);
        prop_assert!((m.apply(&x).inner(&y) + x.inner(&m.apply(&y))).is_zero());
    }
}

#[test]
fn wedge_hodge_inner_on_every_monomial_pair() {
    for p in 0..=DIM {
        let grade = Blade::of_grade(p);
        for &a in &grade {
            let wa = AltForm::monomial(&a.indices());
            for &b in &grade {
                let wb = AltForm::monomial(&b.indices());
                assert_eq!(wa.wedge(&wb.hodge()), AltForm::volume().scale(&wa.inner(&wb)));
            }
        }
    }
}

#[test]
fn d_squared_vanishes_on_the_catalog() {
    let lc = LeviCivita::symbolic_k();
    for (name, f) in NamedFormCatalog::new().entries() {
        assert!(lc.ext_d(&lc.ext_d(f).unwrap()).unwrap().is_zero(), "d²{name}");
    }
}

#[test]
fn d_alpha2_and_d_star_phi() {
    let c = NamedFormCatalog::new();
    let lc = LeviCivita::symbolic_k();
    let want = &c.mu.wedge(&c.alpha1).scale(&Scalar::from(2)) - &c.vol.scale(&(&Scalar::k() * &Scalar::from(3)));
    assert_eq!(lc.ext_d(&c.alpha2).unwrap(), want);
    assert!(lc.ext_d(&c.star_phi).unwrap().is_zero());
}

#[test]
fn nabla_phi_matches_the_combined_expression() {
    let c = NamedFormCatalog::new();
    let lc = LeviCivita::symbolic_k();
    for a in 0..DIM {
        let x = AmbientVector::basis(a);
        assert_eq!(lc.nabla(a, &c.phi).unwrap(), generator_derivatives::phi(&Scalar::k(), &x), "e{a}");
    }
}

#[test]
fn leibniz_is_factorization_independent() {
    let c = NamedFormCatalog::new();
    let lc = LeviCivita::symbolic_k();
    let via_star = c.alpha1.hodge();
    assert_eq!(via_star, -c.mu.wedge(&c.alpha2));
    for a in 0..DIM {
        let direct = lc.nabla(a, &c.mu.wedge(&c.alpha2)).unwrap();
        let product = &lc.nabla(a, &c.mu).unwrap().wedge(&c.alpha2) + &c.mu.wedge(&lc.nabla(a, &c.alpha2).unwrap());
        assert_eq!(direct, product, "e{a}");
    }
}

#[test]
fn phi_has_seven_unit_monomials() {
    let c = NamedFormCatalog::new();
    assert_eq!(c.phi.len(), 7);
    assert!(c.phi.terms().all(|(_, s)| s.as_rational().is_some_and(|q| q == rational(1, 1) || q == rational(-1, 1))));
    assert_eq!(c.phi.wedge(&c.star_phi), AltForm::volume().scale(&Scalar::from(7)));
}

#[test]
fn riemann_symmetries_and_count() {
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let r = riemann_symbol(i, j, k, l);
                    assert_eq!(r, -riemann_symbol(j, i, k, l));
                    assert_eq!(r, -riemann_symbol(i, j, l, k));
                    assert_eq!(r, riemann_symbol(k, l, i, j));
                    let bianchi = &(&r + &riemann_symbol(j, k, i, l)) + &riemann_symbol(k, i, j, l);
                    assert!(bianchi.is_zero(), "Bianchi at {i}{j}{k}{l}");
                }
            }
        }
    }
    assert_eq!(independent_riemann_symbols().len(), 20);
}

#[test]
fn constant_curvature_specializes_the_general_base() {
    let c = NamedFormCatalog::new();
    let general = LeviCivita::new(CurvatureSpec::SymbolicRiemann);
    let constant = LeviCivita::symbolic_k();
    for (name, f) in [("phi", &c.phi), ("star_phi", &c.star_phi), ("alpha", &c.alpha), ("alpha2", &c.alpha2)] {
        let g = general.ext_d(f).unwrap();
        assert_eq!(CurvatureSpec::specialize(&g, &Scalar::k()), constant.ext_d(f).unwrap(), "d{name}");
    }
}

#[test]
fn k_contact_defect_roots_per_direction() {
    let cs = ContactStructure::new();
    let lc = LeviCivita::symbolic_k();
    for (a, v) in cs.k_contact_defect(&lc).iter().enumerate() {
        for s in v.components().iter().filter(|s| !s.is_zero()) {
            assert_eq!(common_zeros([s], Symbol::K), Some(vec![rational(1, 1)]), "e{a}");
        }
    }
}

#[test]
fn reductive_splitting_on_bases() {
    for l in 4..=6 {
        let split = ReductiveSplit::new(l).unwrap();
        for h in &split.h_basis {
            for m in &split.m_basis {
                assert!(h.bracket(m).unwrap().project_h().is_zero(), "[h, m] ⊄ m for l = {l}");
            }
            for g in &split.h_basis {
                assert!(h.bracket(g).unwrap().project_m().is_zero(), "[h, h] ⊄ h for l = {l}");
            }
        }
    }
}

#[test]
fn holonomy_is_so_n() {
    for l in 4..=7 {
        let n = l - 2;
        let h = holonomy_algebra(l).unwrap();
        assert_eq!(h.dimension, n * (n - 1) / 2, "l = {l}");
        assert!(h.is_full() && h.is_closed(), "l = {l}");
    }
}

#[test]
fn canonical_torsion_is_skew() {
    for l in 4..=6 {
        let (skew, ident) = torsion_checks(l).unwrap();
        assert_eq!(skew, Ok(()), "l = {l}");
        assert_eq!(ident, Ok(()), "l = {l}");
    }
}

#[test]
fn u_is_normal_to_the_tangent_space() {
    let u = AmbientVector::u();
    assert!(!u.is_tangent());
    for a in 0..DIM {
        assert!(u.inner(&AmbientVector::basis(a)).is_zero());
    }
    assert_eq!(U, 7);
}
