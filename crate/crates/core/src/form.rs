//! Exterior algebra on the 7-dimensional adapted coframe `e^0, …, e^6`.
//!
//! A basis monomial `e^{i1…ip}` with `i1 < … < ip` is a [`Blade`], stored as a
//! bitmask. An [`AltForm`] is a finite sum of blades with [`Scalar`]
//! coefficients. Sums of different grades are allowed and every operation acts
//! grade by grade; [`AltForm::grade`] reports the grade of homogeneous forms.
//!
//! The coframe is orthonormal and the orientation is `Vol = e^{0123456}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, BitXor, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::scalar::Scalar;
use crate::vector::{AmbientVector, SkewEndo};

pub const DIM: usize = 7;
const FULL: u8 = (1 << DIM) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);
    pub const VOLUME: Blade = Blade(FULL);

    pub fn from_mask(mask: u8) -> Blade {
        assert!(mask <= FULL, "blade mask out of range");
        Blade(mask)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    /// Sorts an index sequence into a blade and the sign of the sorting
    /// permutation. `None` for repeated or out-of-range indices.
    pub fn from_sequence(seq: &[usize]) -> Option<(Blade, i32)> {
        let mut mask = 0u8;
        let mut inversions = 0;
        for (n, &i) in seq.iter().enumerate() {
            if i >= DIM || mask & (1 << i) != 0 {
                return None;
            }
            mask |= 1 << i;
            inversions += seq[..n].iter().filter(|&&j| j > i).count();
        }
        Some((Blade(mask), if inversions % 2 == 0 { 1 } else { -1 }))
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..DIM).filter(|&i| self.contains(i)).collect()
    }

    pub fn complement(self) -> Blade {
        Blade(FULL ^ self.0)
    }

    /// `e^a ∧ e^b = sign · e^{a∪b}`, or `None` when the blades overlap.
    pub fn wedge(self, other: Blade) -> Option<(Blade, i32)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0;
        for j in other.indices() {
            swaps += (self.0 >> (j + 1)).count_ones();
        }
        Some((Blade(self.0 | other.0), if swaps % 2 == 0 { 1 } else { -1 }))
    }

    /// Number of indices of the blade below `i`.
    fn rank_of(self, i: usize) -> u32 {
        (self.0 & ((1u8 << i) - 1)).count_ones()
    }

    /// All blades of a given grade, in lexicographic order of index tuples.
    pub fn of_grade(p: usize) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..=FULL).map(Blade).filter(|b| b.grade() == p).collect();
        v.sort_by_key(|b| b.indices());
        v
    }

    fn sort_key(self) -> (usize, Vec<usize>) {
        (self.grade(), self.indices())
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AltForm {
    terms: BTreeMap<Blade, Scalar>,
}

impl AltForm {
    pub fn zero() -> Self {
        AltForm::default()
    }

    pub fn scalar(s: Scalar) -> Self {
        let mut f = AltForm::zero();
        f.add_term(Blade::SCALAR, s);
        f
    }

    pub fn one() -> Self {
        AltForm::scalar(Scalar::one())
    }

    /// The coframe covector `e^i`.
    pub fn covector(i: usize) -> Self {
        AltForm::monomial(&[i])
    }

    /// `e^{i1 i2 …}` for indices in any order (sign from sorting, zero on repeats).
    pub fn monomial(seq: &[usize]) -> Self {
        AltForm::term(Scalar::one(), seq)
    }

    pub fn term(c: Scalar, seq: &[usize]) -> Self {
        let mut f = AltForm::zero();
        if let Some((b, s)) = Blade::from_sequence(seq) {
            f.add_term(b, if s > 0 { c } else { -c });
        }
        f
    }

    /// Builds `Σ c·e^{seq}` with integer coefficients.
    pub fn from_terms(terms: &[(i64, &[usize])]) -> Self {
        let mut f = AltForm::zero();
        for (c, seq) in terms {
            f += AltForm::term(Scalar::from(*c), seq);
        }
        f
    }

    pub fn volume() -> Self {
        AltForm::monomial(&[0, 1, 2, 3, 4, 5, 6])
    }

    pub fn add_term(&mut self, b: Blade, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Scalar)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    /// Coefficient of `e^{seq}` (indices in any order).
    pub fn coefficient(&self, seq: &[usize]) -> Scalar {
        match Blade::from_sequence(seq) {
            Some((b, s)) => {
                let c = self.terms.get(&b).cloned().unwrap_or_default();
                if s > 0 {
                    c
                } else {
                    -c
                }
            }
            None => Scalar::zero(),
        }
    }

    pub fn blade_coefficient(&self, b: Blade) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    /// Grade of a nonzero homogeneous form. The zero form has every grade and
    /// reports `Some(0)`; mixed sums report `None`.
    pub fn grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.grade());
        match grades.next() {
            None => Some(0),
            Some(g) => grades.all(|h| h == g).then_some(g),
        }
    }

    /// Grades present, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn component(&self, p: usize) -> AltForm {
        AltForm {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == p)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// The grade-0 part as a scalar.
    pub fn scalar_part(&self) -> Scalar {
        self.blade_coefficient(Blade::SCALAR)
    }

    pub fn scale(&self, s: &Scalar) -> AltForm {
        let mut out = AltForm::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, c * s);
        }
        out
    }

    pub fn scale_rational(&self, q: &BigRational) -> AltForm {
        self.map_coefficients(|c| c.scale(q))
    }

    pub fn map_coefficients<F: Fn(&Scalar) -> Scalar>(&self, f: F) -> AltForm {
        let mut out = AltForm::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }

    pub fn has_riemann(&self) -> bool {
        self.terms.values().any(Scalar::has_riemann)
    }

    pub fn wedge(&self, other: &AltForm) -> AltForm {
        let mut out = AltForm::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((m, s)) = a.wedge(*b) {
                    let c = ca * cb;
                    out.add_term(m, if s > 0 { c } else { -c });
                }
            }
        }
        out
    }

    /// `ω ∧ … ∧ ω` (n factors); `pow(0)` is the unit.
    pub fn pow(&self, n: u32) -> AltForm {
        (0..n).fold(AltForm::one(), |acc, _| acc.wedge(self))
    }

    /// Hodge star: `*e^I = sign(I, Iᶜ) e^{Iᶜ}`, so that `e^I ∧ *e^I = Vol`.
    pub fn hodge(&self) -> AltForm {
        let mut out = AltForm::zero();
        for (b, c) in &self.terms {
            let comp = b.complement();
            let (_, s) = b.wedge(comp).expect("complement is disjoint");
            out.add_term(comp, if s > 0 { c.clone() } else { -c });
        }
        out
    }

    /// Pointwise inner product; the blades form an orthonormal basis, so
    /// components of different grades are orthogonal.
    pub fn inner(&self, other: &AltForm) -> Scalar {
        let mut acc = Scalar::zero();
        for (b, c) in &self.terms {
            if let Some(d) = other.terms.get(b) {
                acc += c * d;
            }
        }
        acc
    }

    /// Interior product `v ⌟ ω`. The `U` component of `v` is normal to the
    /// coframe and contracts to zero.
    pub fn interior(&self, v: &AmbientVector) -> AltForm {
        let mut out = AltForm::zero();
        for i in 0..DIM {
            let vi = v.component(i);
            if vi.is_zero() {
                continue;
            }
            for (b, c) in &self.terms {
                if b.contains(i) {
                    let rest = Blade(b.0 & !(1 << i));
                    let t = c * vi;
                    out.add_term(rest, if b.rank_of(i) % 2 == 0 { t } else { -t });
                }
            }
        }
        out
    }

    /// `e_i ⌟ ω`.
    pub fn contract(&self, i: usize) -> AltForm {
        self.interior(&AmbientVector::basis(i))
    }

    /// Derivation action of an endomorphism `B` on forms:
    /// `(B·ω)(X1, …, Xp) = -Σ ω(X1, …, B Xi, …, Xp)`.
    pub fn endo_action(&self, endo: &SkewEndo) -> AltForm {
        let mut out = AltForm::zero();
        for (b, c) in &self.terms {
            let idx = b.indices();
            for (pos, &j) in idx.iter().enumerate() {
                for col in 0..DIM {
                    let entry = endo.entry(j, col);
                    if entry.is_zero() {
                        continue;
                    }
                    let mut seq = idx.clone();
                    seq[pos] = col;
                    if let Some((nb, s)) = Blade::from_sequence(&seq) {
                        let t = -(c * entry);
                        out.add_term(nb, if s > 0 { t } else { -t });
                    }
                }
            }
        }
        out
    }

    /// Evaluates a homogeneous p-form on p ambient vectors.
    pub fn evaluate(&self, args: &[AmbientVector]) -> Scalar {
        // ω(X1, …, Xp) = (X1 ⌟ ω)(X2, …, Xp)
        let mut f = self.component(args.len());
        for v in args {
            f = f.interior(v);
        }
        f.scalar_part()
    }

    pub fn substitute_with<F>(&self, f: F) -> AltForm
    where
        F: Fn(&crate::scalar::Symbol) -> Option<Scalar>,
    {
        self.map_coefficients(|c| c.substitute_with(&f))
    }

    pub fn substitute(&self, sym: crate::scalar::Symbol, value: &Scalar) -> AltForm {
        self.map_coefficients(|c| c.substitute(sym, value))
    }

    /// `v♭` of the tangent part of an ambient vector.
    pub fn flat(v: &AmbientVector) -> AltForm {
        let mut out = AltForm::zero();
        for i in 0..DIM {
            out.add_term(Blade(1 << i), v.component(i).clone());
        }
        out
    }

    /// `ω♯` for a 1-form.
    pub fn sharp(&self) -> crate::error::Result<AmbientVector> {
        if self.grade() != Some(1) {
            return Err(crate::error::Error::NotOneForm(self.describe_grade()));
        }
        let mut v = AmbientVector::zero();
        for i in 0..DIM {
            v.set(i, self.coefficient(&[i]));
        }
        Ok(v)
    }

    fn describe_grade(&self) -> String {
        match self.grade() {
            Some(g) => format!("grade {g}"),
            None => format!("mixed grades {:?}", self.grades()),
        }
    }

    fn sorted_terms(&self) -> Vec<(Blade, &Scalar)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|(b, _)| b.sort_key());
        v
    }
}

impl fmt::Display for AltForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<(String, &Scalar)> = self
            .sorted_terms()
            .into_iter()
            .map(|(b, c)| (if b == Blade::SCALAR { String::new() } else { b.to_string() }, c))
            .collect();
        write_linear(f, &labels)
    }
}

/// Writes `Σ c·label` with signs pulled out of single-term coefficients and
/// compound coefficients parenthesized. An empty label is the unit.
pub(crate) fn write_linear(f: &mut fmt::Formatter<'_>, terms: &[(String, &Scalar)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (n, (label, c)) in terms.iter().enumerate() {
        let (neg, body) = if c.terms().count() == 1 {
            let (m, q) = c.terms().next().unwrap();
            let abs = q.abs();
            let mono = m.to_string();
            let body = match (mono.is_empty(), abs.is_one()) {
                (true, _) => abs.to_string(),
                (false, true) => mono,
                (false, false) => format!("{abs}*{mono}"),
            };
            (q.is_negative(), body)
        } else {
            (false, format!("({c})"))
        };
        match (n, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if label.is_empty() {
            write!(f, "{body}")?;
        } else if body == "1" {
            write!(f, "{label}")?;
        } else {
            write!(f, "{body}*{label}")?;
        }
    }
    Ok(())
}

impl AddAssign<&AltForm> for AltForm {
    fn add_assign(&mut self, rhs: &AltForm) {
        for (b, c) in &rhs.terms {
            self.add_term(*b, c.clone());
        }
    }
}

impl AddAssign for AltForm {
    fn add_assign(&mut self, rhs: AltForm) {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl SubAssign<&AltForm> for AltForm {
    fn sub_assign(&mut self, rhs: &AltForm) {
        for (b, c) in &rhs.terms {
            self.add_term(*b, -c);
        }
    }
}

impl Add for &AltForm {
    type Output = AltForm;
    fn add(self, rhs: &AltForm) -> AltForm {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &AltForm {
    type Output = AltForm;
    fn sub(self, rhs: &AltForm) -> AltForm {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &AltForm {
    type Output = AltForm;
    fn neg(self) -> AltForm {
        self.map_coefficients(|c| -c)
    }
}

impl Neg for AltForm {
    type Output = AltForm;
    fn neg(self) -> AltForm {
        -&self
    }
}

impl BitXor for &AltForm {
    type Output = AltForm;
    fn bitxor(self, rhs: &AltForm) -> AltForm {
        self.wedge(rhs)
    }
}

impl Mul<&AltForm> for &Scalar {
    type Output = AltForm;
    fn mul(self, rhs: &AltForm) -> AltForm {
        rhs.scale(self)
    }
}

impl Mul<AltForm> for Scalar {
    type Output = AltForm;
    fn mul(self, rhs: AltForm) -> AltForm {
        rhs.scale(&self)
    }
}

macro_rules! forward_form {
    ($tr:ident, $method:ident) => {
        impl $tr for AltForm {
            type Output = AltForm;
            fn $method(self, rhs: AltForm) -> AltForm {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&AltForm> for AltForm {
            type Output = AltForm;
            fn $method(self, rhs: &AltForm) -> AltForm {
                (&self).$method(rhs)
            }
        }
        impl $tr<AltForm> for &AltForm {
            type Output = AltForm;
            fn $method(self, rhs: AltForm) -> AltForm {
                self.$method(&rhs)
            }
        }
    };
}

forward_form!(Add, add);
forward_form!(Sub, sub);
forward_form!(BitXor, bitxor);

impl FromIterator<AltForm> for AltForm {
    fn from_iter<I: IntoIterator<Item = AltForm>>(iter: I) -> Self {
        let mut out = AltForm::zero();
        for f in iter {
            out += f;
        }
        out
    }
}

/// Independent sign oracle: the alternating multilinear evaluation of
/// `e^{blade}` on basis vectors, computed by permutation enumeration.
#[cfg(test)]
pub(crate) fn brute_force_evaluate(blade: &[usize], args: &[usize]) -> i32 {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    fn parity(p: &[usize]) -> i32 {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }
    if blade.len() != args.len() {
        return 0;
    }
    permutations(blade.len())
        .iter()
        .map(|p| {
            let hit = p.iter().enumerate().all(|(slot, &k)| blade[k] == args[slot]);
            if hit {
                parity(p)
            } else {
                0
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(seq: &[usize]) -> AltForm {
        AltForm::monomial(seq)
    }

    #[test]
    fn repeated_index_vanishes() {
        assert!((e(&[0]) ^ e(&[0])).is_zero());
        assert!(e(&[1, 1]).is_zero());
    }

    #[test]
    fn sign_of_sorting() {
        assert_eq!(e(&[0, 4, 1]), -e(&[0, 1, 4]));
        assert_eq!(e(&[3, 1, 5]), e(&[1, 3, 5]) * -1);
    }

    impl Mul<i64> for AltForm {
        type Output = AltForm;
        fn mul(self, rhs: i64) -> AltForm {
            self.scale(&Scalar::from(rhs))
        }
    }

    #[test]
    fn hodge_basics() {
        assert_eq!(AltForm::one().hodge(), AltForm::volume());
        assert_eq!(e(&[4, 5, 6]).hodge(), e(&[0, 1, 2, 3]));
        for p in 0..=DIM {
            for b in Blade::of_grade(p) {
                let f = AltForm::term(Scalar::one(), &b.indices());
                assert_eq!(f.hodge().hodge(), f);
                assert_eq!(f.wedge(&f.hodge()), AltForm::volume());
            }
        }
    }

    #[test]
    fn leading_index_contraction() {
        assert_eq!(e(&[0, 4, 1]).contract(0), e(&[4, 1]));
    }

    #[test]
    fn grade_reporting() {
        assert_eq!(AltForm::zero().grade(), Some(0));
        assert_eq!(e(&[1, 2]).grade(), Some(2));
        assert_eq!((e(&[1]) + e(&[1, 2])).grade(), None);
    }

    #[test]
    fn sharp_rejects_other_grades() {
        assert_eq!(e(&[0]).sharp().unwrap(), AmbientVector::basis(0));
        assert!(e(&[0, 1]).sharp().is_err());
        assert!((e(&[0]) + e(&[0, 1])).sharp().is_err());
        assert_eq!(AltForm::flat(&AmbientVector::basis(4)), e(&[4]));
        assert!(AltForm::flat(&AmbientVector::u()).is_zero());
    }

    #[test]
    fn evaluation_matches_permutation_oracle() {
        let blades: [&[usize]; 4] = [&[0, 4, 1], &[2, 6], &[1, 3, 5, 0], &[6]];
        let args: [&[usize]; 6] = [&[0, 1, 4], &[4, 1, 0], &[6, 2], &[0, 1, 3, 5], &[5, 3, 1, 0], &[6]];
        for b in blades {
            for a in args {
                let vs: Vec<AmbientVector> = a.iter().map(|&i| AmbientVector::basis(i)).collect();
                let got = e(b).evaluate(&vs);
                assert_eq!(got, Scalar::from(brute_force_evaluate(b, a) as i64), "{b:?} on {a:?}");
            }
        }
    }

    #[test]
    fn display_is_sorted_and_signed() {
        let f = e(&[4, 5, 6]) - e(&[0, 4, 1]) + AltForm::term(Scalar::k() - Scalar::one(), &[1, 2]);
        assert_eq!(f.to_string(), "(k - 1)*e12 + e014 + e456");
        assert_eq!((-e(&[3])).to_string(), "-e3");
        assert_eq!(AltForm::term(Scalar::ratio(-1, 2), &[3]).to_string(), "-1/2*e3");
    }

    fn blade_strategy() -> impl Strategy<Value = Blade> {
        (0u8..128).prop_map(Blade)
    }

    proptest! {
        #[test]
        fn graded_commutativity(a in blade_strategy(), b in blade_strategy()) {
            let fa = AltForm::term(Scalar::one(), &a.indices());
            let fb = AltForm::term(Scalar::one(), &b.indices());
            let sign = if (a.grade() * b.grade()) % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(fa.wedge(&fb), fb.wedge(&fa).scale(&Scalar::from(sign)));
        }

        #[test]
        fn interior_is_antiderivation(a in blade_strategy(), b in blade_strategy(), i in 0usize..7) {
            let fa = AltForm::term(Scalar::one(), &a.indices());
            let fb = AltForm::term(Scalar::one(), &b.indices());
            let v = AmbientVector::basis(i);
            let lhs = fa.wedge(&fb).interior(&v);
            let sign = if a.grade() % 2 == 0 { 1 } else { -1 };
            let rhs = fa.interior(&v).wedge(&fb) + fa.wedge(&fb.interior(&v)).scale(&Scalar::from(sign));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn wedge_is_associative(a in blade_strategy(), b in blade_strategy(), c in blade_strategy()) {
            let f = |x: Blade| AltForm::term(Scalar::one(), &x.indices());
            prop_assert_eq!(f(a).wedge(&f(b)).wedge(&f(c)), f(a).wedge(&f(b).wedge(&f(c))));
        }
    }
}
