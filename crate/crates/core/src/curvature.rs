//! Curvature data of the base 4-manifold and the tensors it induces on the
//! sphere bundle: `𝓡(X, Y) = π*R(X, Y)U` and the horizontal tensor `A`.

use crate::form::AltForm;
use crate::frame::{mu_of, theta, theta_t};
use crate::scalar::{RiemannIndex, Scalar, Symbol};
use crate::vector::AmbientVector;

/// Curvature of the base, in the index convention `R_ijkl = ⟨R(e_i, e_j)e_k, e_l⟩`
/// on the horizontal frame `e0, …, e3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvatureSpec {
    /// Constant sectional curvature: `R_ijkl = k(δ_il δ_jk - δ_ik δ_jl)`.
    ConstantK(Scalar),
    /// Independent symbols `R_ijkl` modulo the algebraic curvature identities.
    SymbolicRiemann,
}

impl CurvatureSpec {
    pub fn symbolic_k() -> Self {
        CurvatureSpec::ConstantK(Scalar::k())
    }

    pub fn constant(k: Scalar) -> Self {
        CurvatureSpec::ConstantK(k)
    }

    /// The sectional curvature in constant mode.
    pub fn k(&self) -> Option<&Scalar> {
        match self {
            CurvatureSpec::ConstantK(k) => Some(k),
            CurvatureSpec::SymbolicRiemann => None,
        }
    }

    pub fn riemann(&self, i: usize, j: usize, k: usize, l: usize) -> Scalar {
        match self {
            CurvatureSpec::ConstantK(kk) => {
                let d = |a: usize, b: usize| i64::from(a == b);
                kk.scale(&crate::scalar::rational(d(i, l) * d(j, k) - d(i, k) * d(j, l), 1))
            }
            CurvatureSpec::SymbolicRiemann => riemann_symbol(i, j, k, l),
        }
    }

    /// `𝓡(X, Y) = Σ X_a Y_b R_{ab0l} e_{l+3}`; vertical and tangent.
    pub fn cal_r(&self, x: &AmbientVector, y: &AmbientVector) -> AmbientVector {
        let mut r = AmbientVector::zero();
        for l in 1..=3 {
            let mut acc = Scalar::zero();
            for a in 0..4 {
                if x.component(a).is_zero() {
                    continue;
                }
                for b in 0..4 {
                    if y.component(b).is_zero() {
                        continue;
                    }
                    acc += &(x.component(a) * y.component(b)) * &self.riemann(a, b, 0, l);
                }
            }
            r.set(l + 3, acc);
        }
        r
    }

    /// `⟨A(X, Y), Z⟩ = ½(⟨𝓡(X, Z), Y⟩ + ⟨𝓡(Y, Z), X⟩)` for horizontal `Z`.
    pub fn a_tensor(&self, x: &AmbientVector, y: &AmbientVector) -> AmbientVector {
        let half = Scalar::ratio(1, 2);
        let mut r = AmbientVector::zero();
        for c in 0..4 {
            let z = AmbientVector::basis(c);
            let v = self.cal_r(x, &z).inner(y) + self.cal_r(y, &z).inner(x);
            r.set(c, &v * &half);
        }
        r
    }

    /// `(ρ, r̄)` with `ρ = Σ_{i,k=1..3} R_{ki0k} e^{i+3}` and `r̄ = Σ_j R_{j00j}`.
    pub fn rho_rbar(&self) -> (AltForm, Scalar) {
        let mut rho = AltForm::zero();
        for i in 1..=3 {
            let mut c = Scalar::zero();
            for k in 1..=3 {
                c += self.riemann(k, i, 0, k);
            }
            rho += AltForm::term(c, &[i + 3]);
        }
        let mut rbar = Scalar::zero();
        for j in 1..=3 {
            rbar += self.riemann(j, 0, 0, j);
        }
        (rho, rbar)
    }

    /// `𝓡α = Σ_{i<j} R_{ij01} e^{ij56} + R_{ij02} e^{ij64} + R_{ij03} e^{ij45}`.
    pub fn r_alpha(&self) -> AltForm {
        let mut out = AltForm::zero();
        for i in 0..4 {
            for j in i + 1..4 {
                out += AltForm::term(self.riemann(i, j, 0, 1), &[i, j, 5, 6]);
                out += AltForm::term(self.riemann(i, j, 0, 2), &[i, j, 6, 4]);
                out += AltForm::term(self.riemann(i, j, 0, 3), &[i, j, 4, 5]);
            }
        }
        out
    }

    /// Replaces every canonical Riemann symbol by its constant-curvature value.
    pub fn specialize(form: &AltForm, k: &Scalar) -> AltForm {
        let spec = CurvatureSpec::ConstantK(k.clone());
        form.substitute_with(|s| match s {
            Symbol::Riemann(idx) => {
                let [a, b, c, d] = idx.indices();
                Some(spec.riemann(a, b, c, d))
            }
            _ => None,
        })
    }
}

/// `𝓡(X, Y) = k(μ(Y)θX - μ(X)θY)` for constant curvature.
pub fn cal_r_constant(k: &Scalar, x: &AmbientVector, y: &AmbientVector) -> AmbientVector {
    let r = &theta(x).scale(&mu_of(y)) - &theta(y).scale(&mu_of(x));
    // the U components cancel for tangent inputs
    r.scale(k)
}

/// `A(X, Y) = (k/2)(⟨θX, Y⟩θᵗU + ⟨θY, X⟩θᵗU - μ(X)θᵗY - μ(Y)θᵗX)` for constant curvature.
pub fn a_tensor_constant(k: &Scalar, x: &AmbientVector, y: &AmbientVector) -> AmbientVector {
    let tu = theta_t(&AmbientVector::u());
    let s = theta(x).inner(y) + theta(y).inner(x);
    let v = &(&tu.scale(&s) - &theta_t(y).scale(&mu_of(x))) - &theta_t(x).scale(&mu_of(y));
    v.scale(&(k * &Scalar::ratio(1, 2)))
}

/// The canonical scalar for `R_ijkl` over the horizontal indices `0..4`.
///
/// Normalization: `R_ijkl = -R_jikl = -R_ijlk = R_klij`, zero on repeated
/// pairs, and for four distinct indices `a < b < c < d` the representative
/// `R_adbc` is eliminated by the first Bianchi identity as `R_acbd - R_abcd`.
pub fn riemann_symbol(i: usize, j: usize, k: usize, l: usize) -> Scalar {
    assert!(i < 4 && j < 4 && k < 4 && l < 4, "Riemann indices live on the horizontal frame");
    if i == j || k == l {
        return Scalar::zero();
    }
    let mut sign = 1;
    let (mut p, mut q) = ((i, j), (k, l));
    if p.0 > p.1 {
        p = (p.1, p.0);
        sign = -sign;
    }
    if q.0 > q.1 {
        q = (q.1, q.0);
        sign = -sign;
    }
    if p > q {
        std::mem::swap(&mut p, &mut q);
    }
    let distinct = p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1;
    let sym = |a: usize, b: usize, c: usize, d: usize| {
        Scalar::symbol(Symbol::Riemann(RiemannIndex::from_canonical([
            a as u8, b as u8, c as u8, d as u8,
        ])))
    };
    let value = if distinct {
        let mut all = [p.0, p.1, q.0, q.1];
        all.sort_unstable();
        let [a, b, c, d] = all;
        if p == (a, d) {
            // (a d)(b c) = (a c)(b d) - (a b)(c d)
            sym(a, c, b, d) - sym(a, b, c, d)
        } else {
            sym(p.0, p.1, q.0, q.1)
        }
    } else {
        sym(p.0, p.1, q.0, q.1)
    };
    if sign > 0 {
        value
    } else {
        -value
    }
}

/// All canonical symbols that survive normalization.
pub fn independent_riemann_symbols() -> Vec<Symbol> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    for s in riemann_symbol(i, j, k, l).symbols() {
                        if !out.contains(&s) {
                            out.push(s);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}
