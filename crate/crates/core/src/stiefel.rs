//! The homogeneous model `SO(l)/SO(l-2)`: the reductive split of `so(l)`,
//! the canonical connection, its torsion, holonomy algebra and curvature.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::contact::{compare_ricci, RicciModel};
use crate::error::{Error, Result};
use crate::flat::levi_civita_from_characteristic;
use crate::form::AltForm;
use crate::report::{Check, CheckReport};
use crate::scalar::Scalar;
use crate::tensor::{Tensor3, Tensor4};

/// Supported `l` for the command-line runner.
pub const L_RANGE: std::ops::RangeInclusive<usize> = 4..=9;

/// A skew-symmetric `l × l` rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    l: usize,
    m: Vec<BigRational>,
}

impl LieElement {
    pub fn zero(l: usize) -> Self {
        LieElement {
            l,
            m: vec![BigRational::zero(); l * l],
        }
    }

    /// `E_ij = D_ij - D_ji` with 1-based indices.
    pub fn e(l: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= l && j <= l && i != j, "E_ij needs 1 ≤ i ≠ j ≤ l");
        let mut x = LieElement::zero(l);
        x.m[(i - 1) * l + (j - 1)] = BigRational::one();
        x.m[(j - 1) * l + (i - 1)] = -BigRational::one();
        x
    }

    pub fn from_matrix(l: usize, m: Vec<BigRational>) -> Result<Self> {
        if m.len() != l * l {
            return Err(Error::DimensionMismatch(l * l, m.len()));
        }
        let x = LieElement { l, m };
        for i in 0..l {
            for j in 0..l {
                if x.entry(i, j) != &-x.entry(j, i) {
                    return Err(Error::NotSkew);
                }
            }
        }
        Ok(x)
    }

    pub fn dim(&self) -> usize {
        self.l
    }

    /// 0-based entry.
    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.m[i * self.l + j]
    }

    /// Coefficient along `E_ij` (1-based, `i < j`).
    pub fn coord(&self, i: usize, j: usize) -> &BigRational {
        self.entry(i - 1, j - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &LieElement) -> LieElement {
        LieElement {
            l: self.l,
            m: self.m.iter().zip(&o.m).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> LieElement {
        LieElement {
            l: self.l,
            m: self.m.iter().map(|a| a * s).collect(),
        }
    }

    fn matmul(&self, o: &LieElement) -> Vec<BigRational> {
        let l = self.l;
        let mut out = vec![BigRational::zero(); l * l];
        for i in 0..l {
            for k in 0..l {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..l {
                    let b = o.entry(k, j);
                    if !b.is_zero() {
                        out[i * l + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `[A, B] = AB - BA`.
    pub fn bracket(&self, o: &LieElement) -> Result<LieElement> {
        if self.l != o.l {
            return Err(Error::DimensionMismatch(self.l, o.l));
        }
        let ab = self.matmul(o);
        let ba = o.matmul(self);
        Ok(LieElement {
            l: self.l,
            m: ab.into_iter().zip(ba).map(|(x, y)| x - y).collect(),
        })
    }

    /// `⟨A, B⟩ = -½ tr(AB)`.
    pub fn inner(&self, o: &LieElement) -> BigRational {
        let l = self.l;
        let mut tr = BigRational::zero();
        for i in 0..l {
            for k in 0..l {
                tr += self.entry(i, k) * o.entry(k, i);
            }
        }
        -tr / BigRational::from_integer(2.into())
    }

    fn keep(&self, f: impl Fn(usize, usize) -> bool) -> LieElement {
        let l = self.l;
        LieElement {
            l,
            m: (0..l * l)
                .map(|p| {
                    if f(p / l + 1, p % l + 1) {
                        self.m[p].clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        }
    }

    /// Component in `h = so(l - 2)`, the block of indices `≤ l - 2`.
    pub fn project_h(&self) -> LieElement {
        let n = self.l - 2;
        self.keep(|i, j| i <= n && j <= n)
    }

    pub fn project_m(&self) -> LieElement {
        let n = self.l - 2;
        self.keep(|i, j| i > n || j > n)
    }

    /// Coordinates in the `E_ij` basis, `i < j` lexicographic.
    pub fn coordinates(&self) -> Vec<BigRational> {
        let mut v = Vec::new();
        for i in 1..=self.l {
            for j in i + 1..=self.l {
                v.push(self.coord(i, j).clone());
            }
        }
        v
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 1..=self.l {
            for j in i + 1..=self.l {
                let c = self.coord(i, j);
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if c.is_one() {
                    write!(f, "E{i},{j}")?;
                } else {
                    write!(f, "({c})E{i},{j}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `so(l) = h ⊕ m` with `h = so(n)`, `n = l - 2`.
#[derive(Clone, Debug)]
pub struct ReductiveSplit {
    pub l: usize,
    pub n: usize,
    pub h_basis: Vec<LieElement>,
    /// `e0 = E_{m,l}`, `e_i = E_{i,l}`, `e_{i+n} = E_{i,m}` with `m = l - 1`.
    pub m_basis: Vec<LieElement>,
}

impl ReductiveSplit {
    pub fn new(l: usize) -> Result<Self> {
        if l < 4 {
            return Err(Error::OutOfRange(l));
        }
        let n = l - 2;
        let m = l - 1;
        let mut h_basis = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                h_basis.push(LieElement::e(l, i, j));
            }
        }
        let mut m_basis = vec![LieElement::e(l, m, l)];
        m_basis.extend((1..=n).map(|i| LieElement::e(l, i, l)));
        m_basis.extend((1..=n).map(|i| LieElement::e(l, i, m)));
        Ok(ReductiveSplit { l, n, h_basis, m_basis })
    }

    pub fn m_dim(&self) -> usize {
        self.m_basis.len()
    }

    fn br(&self, a: &LieElement, b: &LieElement) -> LieElement {
        a.bracket(b).expect("same l")
    }

    /// Coordinates of an element of `m` in the m-basis.
    pub fn m_coordinates(&self, x: &LieElement) -> Vec<BigRational> {
        self.m_basis.iter().map(|e| x.inner(e)).collect()
    }

    /// `T(X, Y) = -[X, Y]_m`.
    pub fn canonical_torsion(&self, x: &LieElement, y: &LieElement) -> LieElement {
        self.br(x, y).project_m().scale(&-BigRational::one())
    }

    /// `T(e_a, e_b, e_c) = -⟨[e_a, e_b]_m, e_c⟩` on the m-basis.
    pub fn torsion_tensor(&self) -> Tensor3 {
        let d = self.m_dim();
        let brackets: Vec<Vec<LieElement>> = (0..d)
            .map(|a| (0..d).map(|b| self.canonical_torsion(&self.m_basis[a], &self.m_basis[b])).collect())
            .collect();
        Tensor3::from_fn(d, |a, b, c| brackets[a][b].inner(&self.m_basis[c]))
    }

    /// `μ∧dμ` with `μ = e^0` and `dμ = Σ e^{i+n} ∧ e^i`, on the m-basis.
    pub fn mu_dmu_tensor(&self) -> Tensor3 {
        let n = self.n;
        let d = self.m_dim();
        // dμ(a, b)
        let dmu = |a: usize, b: usize| -> i64 {
            if a >= 1 && a <= n && b == a + n {
                -1
            } else if b >= 1 && b <= n && a == b + n {
                1
            } else {
                0
            }
        };
        let mu = |a: usize| i64::from(a == 0);
        Tensor3::from_fn(d, |a, b, c| {
            let v = mu(a) * dmu(b, c) + mu(b) * dmu(c, a) + mu(c) * dmu(a, b);
            BigRational::from_integer(v.into())
        })
    }

    /// `R^c(e_a, e_b, e_c, e_d) = ⟨-[[e_a, e_b]_h, e_c], e_d⟩`.
    pub fn characteristic_curvature(&self) -> Tensor4 {
        let d = self.m_dim();
        let hb: Vec<Vec<LieElement>> = (0..d)
            .map(|a| (0..d).map(|b| self.br(&self.m_basis[a], &self.m_basis[b]).project_h()).collect())
            .collect();
        let act: Vec<Vec<Vec<Vec<BigRational>>>> = (0..d)
            .map(|a| {
                (0..d)
                    .map(|b| {
                        (0..d)
                            .map(|c| {
                                if hb[a][b].is_zero() {
                                    vec![BigRational::zero(); d]
                                } else {
                                    self.m_coordinates(&self.br(&hb[a][b], &self.m_basis[c]))
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Tensor4::from_fn(d, |a, b, c, e| -act[a][b][c][e].clone())
    }

    /// `-Σ_{h} S_h ⊗ S_h` over the orthonormal h-basis, `S_h(X, Y) = ⟨[h, X], Y⟩`.
    pub fn curvature_from_generators(&self) -> Tensor4 {
        let d = self.m_dim();
        let s: Vec<Vec<Vec<BigRational>>> = self
            .h_basis
            .iter()
            .map(|h| {
                (0..d)
                    .map(|a| (0..d).map(|b| self.br(h, &self.m_basis[a]).inner(&self.m_basis[b])).collect())
                    .collect()
            })
            .collect();
        Tensor4::from_fn(d, |a, b, c, e| {
            let mut acc = BigRational::zero();
            for sh in &s {
                acc -= &sh[a][b] * &sh[c][e];
            }
            acc
        })
    }

    /// Rank of `{R^c(e_a, e_b, ·, ·)}` as 2-forms on m.
    pub fn curvature_image_rank(&self, rc: &Tensor4) -> usize {
        let d = self.m_dim();
        let rows: Vec<Vec<BigRational>> = (0..d)
            .flat_map(|a| (0..d).map(move |b| (a, b)))
            .map(|(a, b)| {
                (0..d)
                    .flat_map(|c| (0..d).map(move |e| (c, e)))
                    .map(|(c, e)| rc.get(a, b, c, e).clone())
                    .collect()
            })
            .collect();
        rank(rows)
    }
}

/// Row rank by exact Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let v = &rows[r][j] * &f;
                    rows[i][j] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Incremental span with exact rank tracking.
#[derive(Clone, Debug, Default)]
struct Span {
    /// Echelon rows with their pivot columns.
    echelon: Vec<(usize, Vec<BigRational>)>,
}

impl Span {
    /// Adds `v`; returns whether the span grew.
    fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        for (p, row) in &self.echelon {
            if !v[*p].is_zero() {
                let f = &v[*p] / &row[*p];
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= y * &f;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.echelon.push((p, v));
                true
            }
            None => false,
        }
    }

    fn dim(&self) -> usize {
        self.echelon.len()
    }
}

#[derive(Clone, Debug)]
pub struct HolonomyResult {
    pub l: usize,
    pub dimension: usize,
    /// A basis of the holonomy algebra inside h.
    pub basis: Vec<LieElement>,
    /// `[b_i, b_j]` in coordinates of `E_ij`, `i < j`.
    pub structure: Vec<Vec<Vec<BigRational>>>,
}

impl HolonomyResult {
    /// Whether the algebra fills all of `h = so(n)`.
    pub fn is_full(&self) -> bool {
        let n = self.l - 2;
        self.dimension == n * (n - 1) / 2
    }

    /// Each bracket of basis elements stays in the span.
    pub fn is_closed(&self) -> bool {
        let mut span = Span::default();
        for b in &self.basis {
            span.insert(b.coordinates());
        }
        self.structure
            .iter()
            .flatten()
            .all(|c| !span.clone().insert(c.clone()))
    }
}

/// The subalgebra of h generated by `{[X, Y]_h : X, Y ∈ m}`, closed under brackets.
pub fn holonomy_algebra(l: usize) -> Result<HolonomyResult> {
    let split = ReductiveSplit::new(l)?;
    let d = split.m_dim();
    let mut span = Span::default();
    let mut basis = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            let x = split.br(&split.m_basis[a], &split.m_basis[b]).project_h();
            if span.insert(x.coordinates()) {
                basis.push(x);
            }
        }
    }
    let mut start = 0;
    while start < basis.len() {
        let end = basis.len();
        for i in 0..end {
            for j in start.max(i + 1)..end {
                let x = split.br(&basis[i], &basis[j]);
                if span.insert(x.coordinates()) {
                    basis.push(x);
                }
            }
        }
        start = end;
    }
    let structure = basis
        .iter()
        .map(|x| basis.iter().map(|y| split.br(x, y).coordinates()).collect())
        .collect();
    Ok(HolonomyResult {
        l,
        dimension: span.dim(),
        basis,
        structure,
    })
}

/// m-basis index ↦ adapted frame index for `l = 5`: `e0 ↦ e0`, `e_i ↦ e_i`, `e_{i+3} ↦ e_{i+3}`.
pub fn frame_correspondence(l: usize) -> Result<Vec<usize>> {
    if l != 5 {
        return Err(Error::Precondition("frame correspondence requires l = 5".into()));
    }
    Ok((0..7).collect())
}

/// A gwistor-side rational 3-form as a tensor on the m-basis for `l = 5`.
pub fn transport_3form(w: &AltForm) -> Result<Tensor3> {
    let map = frame_correspondence(5)?;
    let t = Tensor3::from_form(w).ok_or(Error::NonConstantCoefficients)?;
    Ok(Tensor3::from_fn(7, |a, b, c| t.get(map[a], map[b], map[c]).clone()))
}

fn compare3(lhs: &Tensor3, rhs: &Tensor3) -> std::result::Result<(), String> {
    let d = lhs.dim();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                if lhs.get(a, b, c) != rhs.get(a, b, c) {
                    return Err(format!(
                        "({a},{b},{c}): got {}, expected {}",
                        lhs.get(a, b, c),
                        rhs.get(a, b, c)
                    ));
                }
            }
        }
    }
    Ok(())
}

fn compare4(lhs: &Tensor4, rhs: &Tensor4) -> std::result::Result<(), String> {
    match lhs.sub(rhs).first_nonzero() {
        None => Ok(()),
        Some(((a, b, c, d), v)) => Err(format!("({a},{b},{c},{d}) differs by {v}")),
    }
}

/// Skewness of the canonical torsion and the `μ∧dμ` identity for one `l`.
pub fn torsion_checks(l: usize) -> Result<(std::result::Result<(), String>, std::result::Result<(), String>)> {
    let split = ReductiveSplit::new(l)?;
    let t = split.torsion_tensor();
    let skew = match t.skew_violation() {
        None => Ok(()),
        Some((a, b, c)) => Err(format!("T({a},{b},{c}) = {} breaks skewness", t.get(a, b, c))),
    };
    Ok((skew, compare3(&t, &split.mu_dmu_tensor())))
}

/// Reconstructed `R^g` on `V_{5,2}` from `R^c` and `T^c = μ∧dμ`.
pub fn reconstructed_levi_civita(split: &ReductiveSplit) -> Tensor4 {
    levi_civita_from_characteristic(&split.characteristic_curvature(), &split.torsion_tensor())
}

/// `Ric_g` of the homogeneous model against the Ricci formula at `k = 1`, `m = 4`.
pub fn ricci_crosscheck() -> std::result::Result<(), String> {
    let split = ReductiveSplit::new(5).map_err(|e| e.to_string())?;
    let map = frame_correspondence(5).map_err(|e| e.to_string())?;
    let rg = reconstructed_levi_civita(&split);
    let moved = Tensor4::from_fn(7, |a, b, c, d| rg.get(map[a], map[b], map[c], map[d]).clone());
    compare_ricci(&moved, &RicciModel::new(4, Scalar::one()))
}

/// The homogeneous-model suite.
pub fn verify_stiefel() -> CheckReport {
    let mut r = CheckReport::new("stiefel");
    for l in [4, 5, 6] {
        let (skew, _) = torsion_checks(l).expect("l ≥ 4");
        r.push(Check::new(
            format!("stiefel.torsion_skew.l{l}"),
            "T(X,Y,Z) = -⟨[X,Y]_m, Z⟩ is totally skew",
            skew,
        ));
    }
    for (l, want) in [(4, 1), (5, 3), (6, 6)] {
        let h = holonomy_algebra(l).expect("l ≥ 4");
        let outcome = if h.dimension == want && h.is_full() && h.is_closed() {
            Ok(())
        } else {
            Err(format!("dimension {}, expected {want} = dim so({})", h.dimension, l - 2))
        };
        r.push(Check::new(
            format!("stiefel.holonomy.l{l}"),
            format!("hol = so({}) of dimension {want}", l - 2),
            outcome,
        ));
    }
    let split = ReductiveSplit::new(5).expect("l = 5");
    let (_, ident) = torsion_checks(5).expect("l = 5");
    r.push(Check::new("stiefel.mu_dmu", "μ∧dμ(X,Y,Z) = -⟨[X,Y],Z⟩ on m, l = 5", ident));
    let tc = crate::torsion::constant_curvature_torsion(&Scalar::one());
    let transported = transport_3form(&tc).map_err(|e| e.to_string());
    r.push(Check::new(
        "stiefel.frame_torsion",
        "gwistor T^c at k = 1 = canonical torsion of V_{5,2}",
        transported.and_then(|t| compare3(&t, &split.torsion_tensor())),
    ));
    let rc = split.characteristic_curvature();
    let rank = split.curvature_image_rank(&rc);
    r.push(Check::new(
        "stiefel.curvature_image",
        "R^c(X,Y) = -ad([X,Y]_h) spans so(3)",
        if rank == 3 { Ok(()) } else { Err(format!("rank {rank}, expected 3")) },
    ));
    r.push(Check::new(
        "stiefel.curvature_squares",
        "R^c = -Σ S_h⊗S_h over an orthonormal basis of h",
        compare4(&rc, &split.curvature_from_generators()),
    ));
    r.push(Check::new(
        "stiefel.ricci",
        "Ric_g = (m - 3/2)g + ((2 - m)/2)μ⊗μ at k = 1, m = 4",
        ricci_crosscheck(),
    ));
    r
}

/// The summary printed by `gwistor stiefel --l <l>`.
#[derive(Clone, Debug)]
pub struct StiefelSummary {
    pub l: usize,
    pub holonomy: HolonomyResult,
    pub torsion_skew: std::result::Result<(), String>,
    pub bracket_identity: std::result::Result<(), String>,
}

pub fn run_stiefel(l: usize) -> Result<StiefelSummary> {
    if !L_RANGE.contains(&l) {
        return Err(Error::OutOfRange(l));
    }
    let (torsion_skew, bracket_identity) = torsion_checks(l)?;
    Ok(StiefelSummary {
        l,
        holonomy: holonomy_algebra(l)?,
        torsion_skew,
        bracket_identity,
    })
}

impl StiefelSummary {
    pub fn passed(&self) -> bool {
        self.torsion_skew.is_ok() && self.bracket_identity.is_ok() && self.holonomy.is_full()
    }
}

impl fmt::Display for StiefelSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |r: &std::result::Result<(), String>| match r {
            Ok(()) => "pass".to_string(),
            Err(w) => format!("fail ({w})"),
        };
        writeln!(f, "l = {}, n = {}", self.l, self.l - 2)?;
        writeln!(f, "holonomy dimension: {}", self.holonomy.dimension)?;
        writeln!(f, "torsion skew-symmetry: {}", show(&self.torsion_skew))?;
        write!(f, "bracket identity mu^dmu = -<[X,Y],Z>: {}", show(&self.bracket_identity))
    }
}
