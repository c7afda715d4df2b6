//! Exact sparse multivariate polynomials in the entries `x[i,j]` of the
//! generic matrix, symbolic minors, and the two lexicographic term orders.
//!
//! Everything is generic over the coefficient scalar through [`Coefficient`];
//! the crate root fixes concrete aliases (checked `i64` by default, big
//! integers for overflow-free workloads). Arithmetic is exact: an overflowing
//! coefficient operation is a hard error, never a silent wraparound.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed};

use crate::generators::Minor;

/// Exact coefficient scalar: signed, with checked ring operations.
///
/// Implemented by the overflow-checked machine integers (`i64`, `i128`, ..)
/// and by `num_bigint::BigInt`.
pub trait Coefficient:
    Clone + Eq + fmt::Debug + fmt::Display + Signed + CheckedAdd + CheckedSub + CheckedMul
{
}

impl<T> Coefficient for T where
    T: Clone + Eq + fmt::Debug + fmt::Display + Signed + CheckedAdd + CheckedSub + CheckedMul
{
}

fn cadd<C: Coefficient>(a: &C, b: &C) -> C {
    a.checked_add(b).expect("coefficient overflow in +")
}

fn cmul<C: Coefficient>(a: &C, b: &C) -> C {
    a.checked_mul(b).expect("coefficient overflow in *")
}

fn cneg<C: Coefficient>(a: &C) -> C {
    C::zero().checked_sub(a).expect("coefficient overflow in -")
}

/// The variable `x[i,j]` sitting at the 1-based position `(i, j)` of the
/// generic matrix.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var {
    pub i: usize,
    pub j: usize,
}

impl Var {
    pub fn new(i: usize, j: usize) -> Self {
        debug_assert!(i >= 1 && j >= 1);
        Self { i, j }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.i, self.j)
    }
}

/// A monomial as a sparse exponent vector, sorted by variable position with
/// no zero exponents stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    /// The constant monomial 1.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        Self { exps: vec![(v, 1)] }
    }

    /// Product of the given variables, repetitions accumulating exponents.
    pub fn from_vars<I: IntoIterator<Item = Var>>(vars: I) -> Self {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for v in vars {
            *acc.entry(v).or_insert(0) += 1;
        }
        Self {
            exps: acc.into_iter().collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match self.exps.binary_search_by_key(&v, |&(u, _)| u) {
            Ok(k) => self.exps[k].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            exps: merge_exps(&self.exps, &other.exps, |a, b| Some(a + b)),
        }
    }

    /// True when `self` divides `other` variable-wise.
    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `self / divisor`, or `None` when not divisible.
    pub fn try_div(&self, divisor: &Self) -> Option<Self> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Self {
            exps: merge_exps(&self.exps, &divisor.exps, |a, b| a.checked_sub(b)),
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self {
            exps: merge_exps(&self.exps, &other.exps, |a, b| Some(a.max(b))),
        }
    }

    /// Disjoint supports, i.e. the monomials are coprime.
    pub fn coprime(&self, other: &Self) -> bool {
        self.exps.iter().all(|&(v, _)| other.exponent(v) == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }
}

/// Merges two sorted exponent vectors; absent entries count as 0 and zero
/// results are dropped.
fn merge_exps(
    a: &[(Var, u32)],
    b: &[(Var, u32)],
    combine: impl Fn(u32, u32) -> Option<u32>,
) -> Vec<(Var, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    loop {
        let next = match (a.get(x), b.get(y)) {
            (None, None) => break,
            (Some(&(v, e)), None) => {
                x += 1;
                (v, combine(e, 0))
            }
            (None, Some(&(v, e))) => {
                y += 1;
                (v, combine(0, e))
            }
            (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                Ordering::Less => {
                    x += 1;
                    (va, combine(ea, 0))
                }
                Ordering::Greater => {
                    y += 1;
                    (vb, combine(0, eb))
                }
                Ordering::Equal => {
                    x += 1;
                    y += 1;
                    (va, combine(ea, eb))
                }
            },
        };
        match next {
            (v, Some(e)) if e > 0 => out.push((v, e)),
            (_, Some(_)) => {}
            (_, None) => unreachable!("exponent combination failed"),
        }
    }
    out
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Which of the two lexicographic readings of the generic matrix is active.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    /// Rows read right to left, top to bottom: `x[1,n] > .. > x[1,1] > x[2,n] > ..`.
    /// The initial term of a minor is its antidiagonal term.
    Antidiagonal,
    /// Rows read left to right, top to bottom: `x[1,1] > x[1,2] > ..`.
    /// The initial term of a minor is its diagonal term.
    Diagonal,
}

/// A pure lexicographic term order on monomials in the `n x n` generic matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub n: usize,
}

impl TermOrder {
    pub fn antidiagonal(n: usize) -> Self {
        Self {
            kind: OrderKind::Antidiagonal,
            n,
        }
    }

    pub fn diagonal(n: usize) -> Self {
        Self {
            kind: OrderKind::Diagonal,
            n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::Antidiagonal => "antidiagonal",
            OrderKind::Diagonal => "diagonal",
        }
    }

    /// Position of `v` in the variable precedence list; smaller is more
    /// significant.
    fn precedence(&self, v: Var) -> usize {
        assert!(
            v.i >= 1 && v.i <= self.n && v.j >= 1 && v.j <= self.n,
            "{v} outside the {n} x {n} generic matrix",
            n = self.n
        );
        match self.kind {
            OrderKind::Antidiagonal => (v.i - 1) * self.n + (self.n - v.j),
            OrderKind::Diagonal => (v.i - 1) * self.n + (v.j - 1),
        }
    }

    /// Lexicographic comparison: the first variable (in precedence order)
    /// with differing exponents decides, larger exponent winning.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let mut av: Vec<(usize, u32)> = a
            .exponents()
            .map(|(v, e)| (self.precedence(v), e))
            .collect();
        let mut bv: Vec<(usize, u32)> = b
            .exponents()
            .map(|(v, e)| (self.precedence(v), e))
            .collect();
        av.sort_unstable();
        bv.sort_unstable();
        let (mut x, mut y) = (0, 0);
        loop {
            match (av.get(x), bv.get(y)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(pa, ea)), Some(&(pb, eb))) => {
                    if pa < pb {
                        return Ordering::Greater;
                    }
                    if pb < pa {
                        return Ordering::Less;
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    x += 1;
                    y += 1;
                }
            }
        }
    }
}

/// A sparse polynomial with exact coefficients. No zero coefficient is ever
/// stored; the term map itself is kept in a canonical structural order, and
/// order-dependent views (initial term, rendering) take the active
/// [`TermOrder`] as an argument.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), C::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v), C::one())
    }

    /// Single-term polynomial; a zero coefficient yields the zero polynomial.
    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// Sums an arbitrary term sequence into normal form.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = cadd(slot.get(), &c);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub(crate) fn remove_term(&mut self, m: &Monomial) -> Option<C> {
        self.terms.remove(m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), cneg(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), cneg(c)))
                .collect(),
        }
    }

    pub fn scalar_mul(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), cmul(x, c)))
                .collect(),
        }
    }

    /// Multiplication by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(mm, x)| (mm.mul(m), cmul(x, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), cmul(c1, c2));
            }
        }
        out
    }

    /// The order-maximal term. `None` for the zero polynomial.
    pub fn initial_term(&self, order: &TermOrder) -> Option<(&Monomial, &C)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
    }

    /// Terms sorted descending in the active order, variables printed as
    /// `x[i,j]`, e.g. `"x[1,1]*x[2,2] - x[1,2]*x[2,1]"`.
    pub fn render(&self, order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut sorted: Vec<(&Monomial, &C)> = self.terms.iter().collect();
        sorted.sort_by(|(a, _), (b, _)| order.compare(b, a));
        let mut out = String::new();
        for (k, (m, c)) in sorted.into_iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{mag}*{m}"));
            }
        }
        out
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        Polynomial::add(self, rhs)
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        Polynomial::sub(self, rhs)
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        Polynomial::mul(self, rhs)
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial::neg(self)
    }
}

/// The symbolic determinant of the submatrix named by `m`: the signed sum
/// over all bijections between its rows and columns. `size!` terms, every
/// coefficient `±1`.
///
/// Computed by Laplace expansion along the topmost remaining row, memoized on
/// the set of remaining columns.
pub fn minor_polynomial<C: Coefficient>(m: &Minor) -> Polynomial<C> {
    assert!(
        m.size() <= 32,
        "column mask is a u32; minors this large are far outside intended use"
    );
    let mut memo: HashMap<u32, Polynomial<C>> = HashMap::new();
    let full_mask = if m.size() == 32 {
        u32::MAX
    } else {
        (1u32 << m.size()) - 1
    };
    expand_minor(m.rows(), m.cols(), full_mask, &mut memo)
}

fn expand_minor<C: Coefficient>(
    rows: &[usize],
    cols: &[usize],
    mask: u32,
    memo: &mut HashMap<u32, Polynomial<C>>,
) -> Polynomial<C> {
    if rows.is_empty() {
        return Polynomial::one();
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let mut acc = Polynomial::zero();
    let mut sign_negative = false;
    for (pos, &col) in cols.iter().enumerate() {
        if mask & (1 << pos) == 0 {
            continue;
        }
        let cofactor = expand_minor(&rows[1..], cols, mask & !(1 << pos), memo);
        let coeff = if sign_negative {
            cneg(&C::one())
        } else {
            C::one()
        };
        acc = acc.add(&cofactor.mul_term(&Monomial::var(Var::new(rows[0], col)), &coeff));
        sign_negative = !sign_negative;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// The antidiagonal term of a minor: the `t`-th smallest row paired with the
/// `t`-th largest column.
pub fn antidiagonal_monomial(m: &Minor) -> Monomial {
    let s = m.size();
    Monomial::from_vars((0..s).map(|t| Var::new(m.rows()[t], m.cols()[s - 1 - t])))
}

/// The diagonal term of a minor: rows and columns paired in order.
pub fn diagonal_monomial(m: &Minor) -> Monomial {
    Monomial::from_vars(m.rows().iter().zip(m.cols()).map(|(&i, &j)| Var::new(i, j)))
}

/// The initial monomial of a minor under the given order, computed
/// combinatorially (cross-checked against `initial_term(minor_polynomial(..))`
/// by the test suite).
pub fn initial_minor_monomial(m: &Minor, order: &TermOrder) -> Monomial {
    match order.kind {
        OrderKind::Antidiagonal => antidiagonal_monomial(m),
        OrderKind::Diagonal => diagonal_monomial(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Minor;
    use num_bigint::BigInt;

    type P = Polynomial<i64>;

    fn v(i: usize, j: usize) -> Var {
        Var::new(i, j)
    }

    fn minor(rows: &[usize], cols: &[usize]) -> Minor {
        Minor::new(rows.to_vec(), cols.to_vec()).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let x11 = P::var(v(1, 1));
        assert!(x11.add(&x11.neg()).is_zero());
        let two_by_two: P = minor_polynomial(&minor(&[1, 2], &[1, 2]));
        assert_eq!(two_by_two.mul(&P::one()), two_by_two);
        let x12 = P::var(v(1, 2));
        let product = x11.mul(&x12);
        assert_eq!(product.num_terms(), 1);
        assert_eq!(
            product.coefficient(&Monomial::from_vars([v(1, 1), v(1, 2)])),
            Some(&1)
        );
    }

    #[test]
    fn monomial_merge_operations() {
        let a = Monomial::from_vars([v(1, 1), v(1, 1), v(2, 2)]);
        let b = Monomial::from_vars([v(1, 1), v(3, 1)]);
        assert_eq!(a.degree(), 3);
        assert_eq!(a.exponent(v(1, 1)), 2);
        let prod = a.mul(&b);
        assert_eq!(prod.exponent(v(1, 1)), 3);
        assert!(b.divides(&prod));
        assert_eq!(prod.try_div(&b), Some(a.clone()));
        assert_eq!(a.try_div(&b), None);
        assert_eq!(a.lcm(&b).exponent(v(1, 1)), 2);
        assert!(a.lcm(&b).divides(&prod));
        assert!(!a.coprime(&b));
        assert!(Monomial::var(v(5, 5)).coprime(&a));
        assert!(!a.is_squarefree());
        assert!(b.is_squarefree());
    }

    #[test]
    fn minor_polynomial_examples() {
        let p: P = minor_polynomial(&minor(&[1], &[2]));
        assert_eq!(p, P::var(v(1, 2)));

        let p: P = minor_polynomial(&minor(&[1, 2], &[1, 2]));
        let expected = P::from_terms([
            (Monomial::from_vars([v(1, 1), v(2, 2)]), 1),
            (Monomial::from_vars([v(1, 2), v(2, 1)]), -1),
        ]);
        assert_eq!(p, expected);

        let p: P = minor_polynomial(&minor(&[2, 3], &[1, 2]));
        let expected = P::from_terms([
            (Monomial::from_vars([v(2, 1), v(3, 2)]), 1),
            (Monomial::from_vars([v(2, 2), v(3, 1)]), -1),
        ]);
        assert_eq!(p, expected);
    }

    /// Independent oracle: the determinant as a signed sum over permutations.
    fn leibniz_determinant(m: &Minor) -> P {
        use itertools::Itertools;
        let s = m.size();
        let mut p = P::zero();
        for perm in (0..s).permutations(s) {
            let mut inversions = 0;
            for a in 0..s {
                for b in a + 1..s {
                    if perm[a] > perm[b] {
                        inversions += 1;
                    }
                }
            }
            let mono = Monomial::from_vars((0..s).map(|t| v(m.rows()[t], m.cols()[perm[t]])));
            p.add_term(mono, if inversions % 2 == 0 { 1 } else { -1 });
        }
        p
    }

    #[test]
    fn laplace_matches_leibniz_oracle() {
        let cases = [
            minor(&[1, 2], &[1, 2]),
            minor(&[1, 3], &[2, 4]),
            minor(&[1, 2, 3], &[1, 2, 3]),
            minor(&[1, 2, 4], &[2, 3, 5]),
            minor(&[1, 2, 3, 4], &[1, 2, 3, 4]),
            minor(&[2, 3, 5, 6], &[1, 4, 5, 7]),
        ];
        for m in &cases {
            assert_eq!(minor_polynomial::<i64>(m), leibniz_determinant(m), "{m}");
        }
    }

    #[test]
    fn minor_polynomial_term_shape() {
        let factorial = [1usize, 1, 2, 6, 24];
        for m in [
            minor(&[1], &[3]),
            minor(&[1, 4], &[2, 3]),
            minor(&[1, 2, 5], &[1, 4, 5]),
            minor(&[1, 2, 3, 5], &[2, 3, 4, 5]),
        ] {
            let p: P = minor_polynomial(&m);
            assert_eq!(p.num_terms(), factorial[m.size()]);
            for (mono, c) in p.terms() {
                assert!(*c == 1 || *c == -1);
                assert!(mono.is_squarefree());
                let rows: Vec<usize> = mono.exponents().map(|(var, _)| var.i).collect();
                let mut cols: Vec<usize> = mono.exponents().map(|(var, _)| var.j).collect();
                cols.sort_unstable();
                assert_eq!(rows, m.rows());
                assert_eq!(cols, m.cols());
            }
        }
    }

    #[test]
    fn laplace_first_row_consistency() {
        // det = sum_t (-1)^(1+t) x[i1, jt] * complementary minor
        let m = minor(&[1, 2, 3, 4], &[2, 3, 5, 6]);
        let full: P = minor_polynomial(&m);
        let mut recomposed = P::zero();
        for (t, &col) in m.cols().iter().enumerate() {
            let remaining: Vec<usize> = m.cols().iter().copied().filter(|&c| c != col).collect();
            let sub = minor(&m.rows()[1..], &remaining);
            let signed = if t % 2 == 0 { 1 } else { -1 };
            recomposed = recomposed.add(
                &minor_polynomial::<i64>(&sub)
                    .mul_term(&Monomial::var(v(m.rows()[0], col)), &signed),
            );
        }
        assert_eq!(full, recomposed);
    }

    #[test]
    fn compare_examples() {
        let anti2 = TermOrder::antidiagonal(2);
        let diag2 = TermOrder::diagonal(2);
        let x11 = Monomial::var(v(1, 1));
        let x12 = Monomial::var(v(1, 2));
        assert_eq!(anti2.compare(&x12, &x11), Ordering::Greater);
        assert_eq!(diag2.compare(&x11, &x12), Ordering::Greater);

        let anti_term = Monomial::from_vars([v(1, 2), v(2, 1)]);
        let diag_term = Monomial::from_vars([v(1, 1), v(2, 2)]);
        assert_eq!(anti2.compare(&anti_term, &diag_term), Ordering::Greater);
        assert_eq!(diag2.compare(&diag_term, &anti_term), Ordering::Greater);
        assert_eq!(anti2.compare(&x11, &x11), Ordering::Equal);
        // 1 is minimal
        assert_eq!(anti2.compare(&Monomial::one(), &x11), Ordering::Less);
    }

    #[test]
    fn initial_term_examples() {
        let m2: P = minor_polynomial(&minor(&[1, 2], &[1, 2]));
        let anti = TermOrder::antidiagonal(2);
        let diag = TermOrder::diagonal(2);
        let (mono, c) = m2.initial_term(&anti).unwrap();
        assert_eq!(*mono, Monomial::from_vars([v(1, 2), v(2, 1)]));
        assert_eq!(*c, -1);
        let (mono, c) = m2.initial_term(&diag).unwrap();
        assert_eq!(*mono, Monomial::from_vars([v(1, 1), v(2, 2)]));
        assert_eq!(*c, 1);
        let x11 = P::var(v(1, 1));
        assert_eq!(
            x11.initial_term(&anti).unwrap(),
            (&Monomial::var(v(1, 1)), &1)
        );
        assert!(P::zero().initial_term(&anti).is_none());
    }

    #[test]
    fn shortcut_monomials() {
        let m = minor(&[2, 3], &[1, 2]);
        assert_eq!(
            antidiagonal_monomial(&m),
            Monomial::from_vars([v(2, 2), v(3, 1)])
        );
        assert_eq!(
            diagonal_monomial(&m),
            Monomial::from_vars([v(2, 1), v(3, 2)])
        );
        let single = minor(&[1], &[5]);
        assert_eq!(antidiagonal_monomial(&single), Monomial::var(v(1, 5)));
        assert_eq!(diagonal_monomial(&single), Monomial::var(v(1, 5)));
        assert_eq!(
            antidiagonal_monomial(&minor(&[1, 2, 3], &[5, 7, 8])),
            Monomial::from_vars([v(1, 8), v(2, 7), v(3, 5)])
        );
    }

    #[test]
    fn shortcut_monomials_match_initial_terms_up_to_size_4() {
        use itertools::Itertools;
        let n = 5;
        for size in 1..=4 {
            for rows in (1..=n).combinations(size) {
                for cols in (1..=n).combinations(size) {
                    let m = Minor::new(rows.clone(), cols.clone()).unwrap();
                    let p: P = minor_polynomial(&m);
                    for order in [TermOrder::antidiagonal(n), TermOrder::diagonal(n)] {
                        let (mono, c) = p.initial_term(&order).unwrap();
                        assert_eq!(*mono, initial_minor_monomial(&m, &order), "{m}");
                        assert!(*c == 1 || *c == -1);
                    }
                }
            }
        }
    }

    #[test]
    fn render_examples() {
        let m2: P = minor_polynomial(&minor(&[1, 2], &[1, 2]));
        let diag = TermOrder::diagonal(2);
        let anti = TermOrder::antidiagonal(2);
        assert_eq!(m2.render(&diag), "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
        assert_eq!(m2.render(&anti), "-x[1,2]*x[2,1] + x[1,1]*x[2,2]");
        assert_eq!(P::zero().render(&diag), "0");
        let p = P::from_terms([
            (Monomial::one(), 3),
            (Monomial::from_vars([v(1, 1), v(1, 1)]), -2),
        ]);
        assert_eq!(p.render(&diag), "-2*x[1,1]^2 + 3");
    }

    #[test]
    fn bigint_coefficients_work_through_the_same_paths() {
        let m = minor(&[1, 2, 3], &[1, 2, 3]);
        let big: Polynomial<BigInt> = minor_polynomial(&m);
        let small: P = minor_polynomial(&m);
        assert_eq!(big.num_terms(), small.num_terms());
        for (mono, c) in small.terms() {
            assert_eq!(big.coefficient(mono), Some(&BigInt::from(*c)));
        }
        let doubled = big.scalar_mul(&BigInt::from(2));
        assert_eq!(
            doubled.initial_term(&TermOrder::diagonal(3)).unwrap().1,
            &BigInt::from(2)
        );
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn overflow_is_a_hard_error() {
        let huge = P::from_terms([(Monomial::var(v(1, 1)), i64::MAX)]);
        let _ = huge.add(&huge);
    }
}
