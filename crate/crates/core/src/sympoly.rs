//! Polynomial representations: sparse expanded polynomials keyed by
//! exponent vectors, and symmetric polynomials in the monomial-symmetric
//! basis `{m_λ}`.

use crate::arith::{BigRat, CoeffDecodeError, Scalar};
use crate::partitions::{Partition, PartitionError};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Default cap on the number of terms an orbit expansion may produce.
pub const DEFAULT_TERM_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SymPolyError {
    #[error("polynomial is not symmetric: exchanging x{0} and x{1} changes it")]
    NotSymmetric(usize, usize),
    #[error("expansion needs {needed} terms, budget is {budget}")]
    TermBudget { needed: u128, budget: u128 },
    #[error("variable count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("bad polynomial document: {0}")]
    Decode(String),
    #[error(transparent)]
    Coeff(#[from] CoeffDecodeError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

pub type Exponent = Vec<u32>;

/// Sparse polynomial in `n` variables. No zero coefficient is ever stored
/// and every exponent vector has length exactly `n`.
#[derive(Clone, PartialEq, Debug)]
pub struct ExpandedPoly<C> {
    n: usize,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Scalar> ExpandedPoly<C> {
    pub fn zero(n: usize) -> Self {
        ExpandedPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: C) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn monomial(exps: Exponent, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(e, C::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Exponent, C> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: C) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_terms(|c| c.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        self.map_terms(|c| c.mul(s))
    }

    fn map_terms(&self, f: impl Fn(&C) -> C) -> Self {
        ExpandedPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    /// Multiplies by `x_i^power`, 1-based.
    pub fn mul_var_power(&self, i: usize, power: u32) -> Self {
        if power == 0 {
            return self.clone();
        }
        ExpandedPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[i - 1] += power;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// `∂/∂x_i`, 1-based.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let a = e[i - 1];
            if a == 0 {
                continue;
            }
            let mut e = e.clone();
            e[i - 1] -= 1;
            out.add_term(e, c.scale_int(a as i64));
        }
        out
    }

    /// Exchanges variables `i` and `j` (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        ExpandedPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i - 1, j - 1);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Checks invariance under every adjacent transposition, which generate
    /// the symmetric group.
    pub fn check_symmetric(&self) -> Result<(), SymPolyError> {
        for (e, c) in &self.terms {
            for i in 0..self.n.saturating_sub(1) {
                if e[i] == e[i + 1] {
                    continue;
                }
                let mut s = e.clone();
                s.swap(i, i + 1);
                if self.terms.get(&s) != Some(c) {
                    return Err(SymPolyError::NotSymmetric(i + 1, i + 2));
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[BigRat]) -> C {
        assert_eq!(point.len(), self.n, "point has wrong dimension");
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut v = BigRat::from_int(1);
            for (x, &a) in point.iter().zip(e) {
                for _ in 0..a {
                    v *= x;
                }
            }
            acc = acc.add(&c.mul(&C::from_rational(&v)));
        }
        acc
    }

    /// Sets `x_n = 0`, dropping to `n − 1` variables.
    pub fn restrict_last_var(&self) -> Self {
        assert!(self.n >= 1);
        ExpandedPoly {
            n: self.n - 1,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[self.n - 1] == 0)
                .map(|(e, c)| (e[..self.n - 1].to_vec(), c.clone()))
                .collect(),
        }
    }

    pub fn try_map_coeffs<D: Scalar, E>(&self, mut f: impl FnMut(&C) -> Result<D, E>) -> Result<ExpandedPoly<D>, E> {
        let mut out = ExpandedPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"exponents": e, "coeff": c.to_json()}))
            .collect();
        json!({"n": self.n, "basis": "expanded", "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self, SymPolyError> {
        let (n, terms) = document_parts(v, "expanded")?;
        let mut p = Self::zero(n);
        for t in terms {
            let e: Exponent =
                serde_json::from_value(t["exponents"].clone()).map_err(|e| SymPolyError::Decode(e.to_string()))?;
            if e.len() != n {
                return Err(SymPolyError::DimensionMismatch(e.len(), n));
            }
            p.add_term(e, C::from_json(&t["coeff"])?);
        }
        Ok(p)
    }
}

fn document_parts<'a>(v: &'a Value, basis: &str) -> Result<(usize, &'a Vec<Value>), SymPolyError> {
    let n = v["n"]
        .as_u64()
        .ok_or_else(|| SymPolyError::Decode("missing \"n\"".into()))? as usize;
    if v["basis"].as_str() != Some(basis) {
        return Err(SymPolyError::Decode(format!("expected basis {basis:?}")));
    }
    let terms = v["terms"]
        .as_array()
        .ok_or_else(|| SymPolyError::Decode("missing \"terms\"".into()))?;
    Ok((n, terms))
}

/// Symmetric polynomial `Σ c_λ m_λ` in `n` variables.
#[derive(Clone, PartialEq, Debug)]
pub struct MSymPoly<C> {
    n: usize,
    terms: BTreeMap<Partition, C>,
}

impl<C: Scalar> MSymPoly<C> {
    pub fn zero(n: usize) -> Self {
        MSymPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::from_terms(n, [(Partition::empty(), c)])
    }

    /// `m_λ`; panics if `λ` has more than `n` parts.
    pub fn monomial(n: usize, lambda: Partition) -> Self {
        assert!(lambda.fits(n), "{lambda} has more than {n} parts");
        Self::from_terms(n, [(lambda, C::one())])
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut p = Self::zero(n);
        for (l, c) in terms {
            p.add_term(l, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
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

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) {
        assert!(lambda.fits(self.n), "{lambda} has more than {} parts", self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&C::from_int(-1)))
    }

    pub fn scale(&self, s: &C) -> Self {
        MSymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c.mul(s)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Partitions with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Partition::size).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        MSymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Number of monomials the orbit expansion produces.
    pub fn expansion_size(&self) -> u128 {
        self.terms.keys().map(|l| orbit_size(l, self.n)).sum()
    }

    pub fn to_expanded(&self) -> Result<ExpandedPoly<C>, SymPolyError> {
        self.to_expanded_with_budget(DEFAULT_TERM_BUDGET)
    }

    /// Orbit expansion `m_λ = Σ_{α ∈ S_n λ} x^α`, one term per distinct
    /// permutation.
    pub fn to_expanded_with_budget(&self, budget: u128) -> Result<ExpandedPoly<C>, SymPolyError> {
        let needed = self.expansion_size();
        if needed > budget {
            return Err(SymPolyError::TermBudget { needed, budget });
        }
        let mut out = ExpandedPoly::zero(self.n);
        for (l, c) in &self.terms {
            for e in orbit(l, self.n) {
                out.terms.insert(e, c.clone());
            }
        }
        Ok(out)
    }

    /// Inverse of [`MSymPoly::to_expanded`]; errors if `p` is not symmetric.
    pub fn from_expanded(p: &ExpandedPoly<C>) -> Result<Self, SymPolyError> {
        p.check_symmetric()?;
        Ok(Self::from_symmetric_unchecked(p))
    }

    /// Reads off the coefficients of dominant monomials without checking
    /// symmetry.
    pub(crate) fn from_symmetric_unchecked(p: &ExpandedPoly<C>) -> Self {
        let terms = p
            .terms
            .iter()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|(e, c)| (Partition::from_unsorted(e.clone()), c.clone()))
            .collect();
        MSymPoly { n: p.n, terms }
    }

    pub fn multiply(&self, rhs: &Self) -> Result<Self, SymPolyError> {
        if self.n != rhs.n {
            return Err(SymPolyError::DimensionMismatch(self.n, rhs.n));
        }
        let a = self.to_expanded()?;
        let b = rhs.to_expanded()?;
        let mut out = ExpandedPoly::zero(self.n);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if e.windows(2).all(|w| w[0] >= w[1]) {
                    out.add_term(e, ca.mul(cb));
                }
            }
        }
        Ok(Self::from_symmetric_unchecked(&out))
    }

    /// Sets `x_n = 0`: partitions with exactly `n` parts drop out.
    pub fn restrict_last_var(&self) -> Self {
        assert!(self.n >= 1);
        MSymPoly {
            n: self.n - 1,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.fits(self.n - 1))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x_1 = ⋯ = x_c = t`. The result lives in the variables
    /// `(t, x_{c+1}, …, x_n)`.
    pub fn substitute_coincident(&self, c: usize) -> Result<ExpandedPoly<C>, SymPolyError> {
        assert!(c >= 1 && c <= self.n, "need 1 ≤ c ≤ n");
        let exp = self.to_expanded()?;
        let mut out = ExpandedPoly::zero(self.n - c + 1);
        for (e, coeff) in &exp.terms {
            let mut f = Vec::with_capacity(self.n - c + 1);
            f.push(e[..c].iter().sum());
            f.extend_from_slice(&e[c..]);
            out.add_term(f, coeff.clone());
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[BigRat]) -> Result<C, SymPolyError> {
        if point.len() != self.n {
            return Err(SymPolyError::DimensionMismatch(point.len(), self.n));
        }
        Ok(self.to_expanded()?.evaluate(point))
    }

    pub fn try_map_coeffs<D: Scalar, E>(
        &self,
        mut f: impl FnMut(&Partition, &C) -> Result<D, E>,
    ) -> Result<MSymPoly<D>, E> {
        let mut out = MSymPoly::zero(self.n);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(l, c)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(l, c)| json!({"partition": l, "coeff": c.to_json()}))
            .collect();
        json!({"n": self.n, "basis": "msym", "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self, SymPolyError> {
        let (n, terms) = document_parts(v, "msym")?;
        let mut p = Self::zero(n);
        for t in terms {
            let parts: Vec<u32> =
                serde_json::from_value(t["partition"].clone()).map_err(|e| SymPolyError::Decode(e.to_string()))?;
            let l = Partition::new(parts)?;
            l.require_fits(n)?;
            p.add_term(l, C::from_json(&t["coeff"])?);
        }
        Ok(p)
    }
}

/// `p_m = Σ_j x_j^m = m_(m)`.
pub fn power_sum<C: Scalar>(m: u32, n: usize) -> MSymPoly<C> {
    assert!(m >= 1, "power sums start at p_1");
    MSymPoly::monomial(n, Partition::new(vec![m]).expect("single part"))
}

/// Size of the `S_n`-orbit of `λ` padded to length `n`.
pub fn orbit_size(lambda: &Partition, n: usize) -> u128 {
    let padded = lambda.padded(n);
    let mut total: u128 = 1;
    let mut used = 0u128;
    let mut i = 0;
    // multinomial n! / Π mult! built incrementally as products of binomials
    while i < padded.len() {
        let mut j = i;
        while j < padded.len() && padded[j] == padded[i] {
            j += 1;
        }
        let m = (j - i) as u128;
        for t in 1..=m {
            total = total.saturating_mul(used + t) / t;
        }
        used += m;
        i = j;
    }
    total
}

/// Distinct permutations of `λ` padded to length `n`.
pub fn orbit(lambda: &Partition, n: usize) -> Vec<Exponent> {
    let mut cur = lambda.padded(n);
    cur.reverse(); // ascending
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Human-readable form, largest partitions first: `(2β)/(β + 1)·m(1,1)`.
impl<C: Scalar + std::fmt::Display> std::fmt::Display for MSymPoly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (l, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "m{l}")?;
            } else {
                write!(f, "({c})·m{l}")?;
            }
        }
        Ok(())
    }
}
